//! Matrix algebras generated by a set of matrices, and their radicals.

use std::collections::VecDeque;

use crate::scalars::{Cyc, FieldContext};

use super::{kernel_basis, Echelon, Mat};

#[derive(Clone, Debug)]
pub struct MatAlgebra {
    pub ambient_dim: usize,
    pub basis: Vec<Mat>,
}

impl MatAlgebra {
    pub fn dim(&self) -> usize {
        self.basis.len()
    }
}

/// Span of all products of `gens` (with the identity if `unital`).
///
/// The span is closed under left multiplication by the generators, so it
/// suffices to multiply each new basis element by each generator. New
/// elements are stored reduced against the earlier ones, which keeps
/// coefficients small on dense inputs.
pub fn algebra_closure(ctx: &'static FieldContext, n: usize, gens: &[Mat], unital: bool) -> MatAlgebra {
    let mut ech = Echelon::new(ctx, n * n);
    let mut basis = Vec::new();
    let mut queue = VecDeque::new();
    let seeds: Vec<Mat> = if unital { vec![Mat::identity(ctx, n)] } else { gens.to_vec() };
    let add = |ech: &mut Echelon, v: Vec<Cyc>, basis: &mut Vec<Mat>, queue: &mut VecDeque<usize>| {
        if let Some(r) = ech.insert_reduced(v) {
            basis.push(Mat::unflatten(ctx, n, n, r.to_vec()));
            queue.push_back(basis.len() - 1);
        }
    };
    for s in seeds {
        add(&mut ech, s.flatten(), &mut basis, &mut queue);
    }
    while let Some(i) = queue.pop_front() {
        for g in gens {
            let p = g.mul(&basis[i]);
            add(&mut ech, p.flatten(), &mut basis, &mut queue);
        }
    }
    MatAlgebra { ambient_dim: n, basis }
}

/// Basis of the Jacobson radical: the kernel of the trace form.
pub fn jacobson_radical(b: &MatAlgebra) -> Vec<Mat> {
    let d = b.dim();
    if d == 0 {
        return Vec::new();
    }
    let ctx = b.basis[0].ctx();
    let gram = Mat::from_fn(ctx, d, d, |i, j| b.basis[i].trace_product(&b.basis[j]));
    let k = kernel_basis(&gram);
    let n = b.ambient_dim;
    (0..k.cols())
        .map(|c| {
            let mut acc = Mat::zeros(ctx, n, n);
            for i in 0..d {
                let coef = k.get(i, c);
                if !coef.is_zero() {
                    acc.add_assign(&b.basis[i].scale(coef));
                }
            }
            acc
        })
        .collect()
}

/// Coordinates of `x` in `b`'s basis, if it lies in the algebra.
pub fn coordinates(b: &MatAlgebra, x: &Mat) -> Option<Vec<Cyc>> {
    let ctx = x.ctx();
    let n2 = b.ambient_dim * b.ambient_dim;
    let cols: Vec<Vec<Cyc>> = b.basis.iter().map(Mat::flatten).collect();
    let a = Mat::from_cols(ctx, n2, &cols);
    let rhs = Mat::column_vector(ctx, x.flatten());
    super::solve_linear(&a, &rhs).ok().map(|s| s.col(0))
}
