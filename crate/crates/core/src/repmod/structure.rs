//! Structural analysis: simplicity, radical, socle, composition factors,
//! indecomposability, isomorphism, degree components.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::error::{Error, Result};
use crate::grp::j_split;
use crate::linalg::{algebra_closure, column_basis, jacobson_radical, kernel_basis, rank, Echelon, Mat, MatAlgebra};

use super::hom::hom_space;
use super::{Label, ModuleRep};

/// Seed used when the caller does not supply one.
pub const DEFAULT_SEED: u64 = 0x5eed;

fn action_algebra(m: &ModuleRep) -> MatAlgebra {
    algebra_closure(m.params.ctx, m.dim(), &m.gens(), true)
}

/// Burnside: the action generates all `n x n` matrices.
pub fn is_simple(m: &ModuleRep) -> bool {
    let n = m.dim();
    n > 0 && action_algebra(m).dim() == n * n
}

/// `J(B) M` for `B` the algebra generated by the action, as basis columns.
pub fn radical_of(m: &ModuleRep) -> Mat {
    let ctx = m.params.ctx;
    let n = m.dim();
    let j = jacobson_radical(&action_algebra(m));
    if j.is_empty() {
        return Mat::zeros(ctx, n, 0);
    }
    let refs: Vec<&Mat> = j.iter().collect();
    column_basis(&Mat::hstack(ctx, n, &refs))
}

/// Vectors killed by `J(B)`, as basis columns.
pub fn socle(m: &ModuleRep) -> Result<Mat> {
    let ctx = m.params.ctx;
    let n = m.dim();
    let j = jacobson_radical(&action_algebra(m));
    if j.is_empty() {
        return Ok(Mat::identity(ctx, n));
    }
    let refs: Vec<&Mat> = j.iter().collect();
    Ok(kernel_basis(&Mat::vstack(ctx, n, &refs)))
}

/// `M / J(B) M`.
pub fn top(m: &ModuleRep) -> Result<ModuleRep> {
    m.quotient(&radical_of(m))
}

/// `End_A(M)` as a matrix algebra.
pub fn end_algebra(m: &ModuleRep) -> MatAlgebra {
    MatAlgebra { ambient_dim: m.dim(), basis: hom_space(m, m) }
}

/// `End(M) / J(End(M))` is one-dimensional.
pub fn is_indecomposable(m: &ModuleRep) -> bool {
    let e = end_algebra(m);
    m.dim() > 0 && e.dim() - jacobson_radical(&e).len() == 1
}

/// Sum of the images of all maps from catalog simples.
fn catalog_socle(m: &ModuleRep, catalog: &[ModuleRep]) -> (Mat, Vec<(Label, usize)>) {
    let ctx = m.params.ctx;
    let n = m.dim();
    let mut ech = Echelon::new(ctx, n);
    let mut counts = Vec::new();
    for c in catalog {
        let homs = hom_space(c, m);
        if homs.is_empty() {
            continue;
        }
        for f in &homs {
            for k in 0..f.cols() {
                ech.insert(f.col(k));
            }
        }
        counts.push((c.label.clone().unwrap_or_else(|| Label::Other(c.name())), homs.len()));
    }
    (ech.to_cols(), counts)
}

/// Composition factors with multiplicity, matched against `catalog` along
/// the socle series. A nonzero layer with no catalog submodule raises
/// `UnmatchedFactor`.
pub fn composition_factors(m: &ModuleRep, catalog: &[ModuleRep]) -> Result<Vec<(Label, usize)>> {
    let mut cur = m.clone();
    let mut total: Vec<(Label, usize)> = Vec::new();
    while cur.dim() > 0 {
        let (soc, counts) = catalog_socle(&cur, catalog);
        if soc.cols() == 0 {
            return Err(Error::UnmatchedFactor { dim: cur.dim() });
        }
        let covered: usize = counts
            .iter()
            .map(|(l, k)| catalog.iter().find(|c| c.label.as_ref() == Some(l)).map_or(0, ModuleRep::dim) * k)
            .sum();
        if covered != soc.cols() {
            return Err(Error::Verification(format!("socle layer of dim {} is not a sum of catalog simples ({covered})", soc.cols())));
        }
        for (l, k) in counts {
            match total.iter_mut().find(|(x, _)| *x == l) {
                Some(e) => e.1 += k,
                None => total.push((l, k)),
            }
        }
        cur = cur.quotient(&soc)?;
    }
    Ok(total)
}

fn invertible(x: &Mat) -> bool {
    x.is_square() && rank(x) == x.rows()
}

/// An isomorphism `M -> N`, if one exists, searched with the default seed.
pub fn is_isomorphic(m: &ModuleRep, n: &ModuleRep) -> Option<Mat> {
    is_isomorphic_seeded(m, n, DEFAULT_SEED)
}

/// Scans the Hom basis, then small integer combinations, then random
/// combinations drawn from `seed`.
pub fn is_isomorphic_seeded(m: &ModuleRep, n: &ModuleRep, seed: u64) -> Option<Mat> {
    if m.dim() != n.dim() {
        return None;
    }
    if m.dim() == 0 {
        return Some(Mat::zeros(m.params.ctx, 0, 0));
    }
    let h = hom_space(m, n);
    if h.is_empty() {
        return None;
    }
    if let Some(x) = h.iter().find(|x| invertible(x)) {
        return Some(x.clone());
    }
    let p = &m.params;
    let combine = |coefs: &[i64]| {
        let mut acc = Mat::zeros(p.ctx, n.dim(), m.dim());
        for (x, &c) in h.iter().zip(coefs) {
            if c != 0 {
                acc.add_assign(&x.scale(&p.scalar(c)));
            }
        }
        acc
    };
    let all_ones = vec![1i64; h.len()];
    let ramp: Vec<i64> = (1..=h.len() as i64).collect();
    for coefs in [all_ones, ramp] {
        let x = combine(&coefs);
        if invertible(&x) {
            return Some(x);
        }
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    for _ in 0..24 {
        let coefs: Vec<i64> = (0..h.len()).map(|_| rng.gen_range(-50..=50)).collect();
        let x = combine(&coefs);
        if invertible(&x) {
            return Some(x);
        }
    }
    None
}

/// Splits along the eigenspaces of `t^2`; each block is a submodule.
pub fn j_component(m: &ModuleRep) -> Result<Vec<(usize, ModuleRep)>> {
    j_split(&m.params, &m.group_rep())
        .into_iter()
        .map(|(j, basis)| {
            let sub = m.submodule(&basis)?;
            sub.verify()?;
            Ok((j, sub))
        })
        .collect()
}
