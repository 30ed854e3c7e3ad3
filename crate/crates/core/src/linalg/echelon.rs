//! Row reduction, kernels, linear solves and incremental echelon bases.

use crate::error::{Error, Result};
use crate::scalars::{Cyc, FieldContext};

use super::Mat;

/// `row[k] -= f * pivot[k]` for `k >= from`.
fn eliminate(row: &mut [Cyc], pivot: &[Cyc], f: &Cyc, from: usize) {
    for k in from..row.len() {
        if !pivot[k].is_zero() {
            row[k].sub_mul_assign(f, &pivot[k]);
        }
    }
}

fn normalize(row: &mut [Cyc], col: usize) {
    if row[col].is_one() {
        return;
    }
    let inv = row[col].inv().expect("pivot is nonzero");
    for x in row[col..].iter_mut() {
        if !x.is_zero() {
            *x = &*x * &inv;
        }
    }
}

/// Reduced row echelon form of `rows` (in place); returns pivot columns.
fn rref_rows(rows: &mut Vec<Vec<Cyc>>, cols: usize) -> Vec<usize> {
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..cols {
        if r == rows.len() {
            break;
        }
        let Some(p) = (r..rows.len()).find(|&i| !rows[i][c].is_zero()) else { continue };
        rows.swap(r, p);
        normalize(&mut rows[r], c);
        let piv = rows[r].clone();
        for (i, row) in rows.iter_mut().enumerate() {
            if i != r && !row[c].is_zero() {
                let f = row[c].clone();
                eliminate(row, &piv, &f, c);
            }
        }
        pivots.push(c);
        r += 1;
    }
    rows.truncate(r.max(0));
    pivots
}

fn to_rows(a: &Mat) -> Vec<Vec<Cyc>> {
    (0..a.rows()).map(|i| a.row(i).to_vec()).collect()
}

/// Reduced row echelon form (zero rows kept at the bottom) and pivot columns.
pub fn rref(a: &Mat) -> (Mat, Vec<usize>) {
    let mut rows = to_rows(a);
    let pivots = rref_rows(&mut rows, a.cols());
    let mut out = Mat::zeros(a.ctx(), a.rows(), a.cols());
    for (i, row) in rows.into_iter().enumerate() {
        for (j, x) in row.into_iter().enumerate() {
            out.set(i, j, x);
        }
    }
    (out, pivots)
}

pub fn rank(a: &Mat) -> usize {
    let mut rows = to_rows(a);
    rref_rows(&mut rows, a.cols()).len()
}

/// Basis of the null space, as the columns of a `cols x k` matrix.
pub fn kernel_basis(a: &Mat) -> Mat {
    let mut rows = to_rows(a);
    let pivots = rref_rows(&mut rows, a.cols());
    kernel_from_rref(a.ctx(), &rows, &pivots, a.cols())
}

fn kernel_from_rref(ctx: &'static FieldContext, rows: &[Vec<Cyc>], pivots: &[usize], cols: usize) -> Mat {
    let mut is_pivot = vec![false; cols];
    for &p in pivots {
        is_pivot[p] = true;
    }
    let free: Vec<usize> = (0..cols).filter(|&c| !is_pivot[c]).collect();
    let mut out = Mat::zeros(ctx, cols, free.len());
    for (k, &f) in free.iter().enumerate() {
        out.set(f, k, Cyc::one(ctx));
        for (i, &p) in pivots.iter().enumerate() {
            if !rows[i][f].is_zero() {
                out.set(p, k, -&rows[i][f]);
            }
        }
    }
    out
}

/// One solution `X` of `A X = B`.
pub fn solve_linear(a: &Mat, b: &Mat) -> Result<Mat> {
    if a.rows() != b.rows() {
        return Err(Error::DimensionMismatch(format!("solve: A is {}x{}, B is {}x{}", a.rows(), a.cols(), b.rows(), b.cols())));
    }
    let (n, m) = (a.cols(), b.cols());
    let mut rows: Vec<Vec<Cyc>> = (0..a.rows()).map(|i| a.row(i).iter().chain(b.row(i)).cloned().collect()).collect();
    let pivots = rref_rows(&mut rows, n + m);
    if pivots.iter().any(|&p| p >= n) {
        return Err(Error::NoSolution);
    }
    let mut x = Mat::zeros(a.ctx(), n, m);
    for (i, &p) in pivots.iter().enumerate() {
        for j in 0..m {
            x.set(p, j, rows[i][n + j].clone());
        }
    }
    Ok(x)
}

/// Indices of a maximal independent subset of the columns, chosen greedily.
pub fn independent_columns(a: &Mat) -> Vec<usize> {
    let mut e = Echelon::new(a.ctx(), a.rows());
    (0..a.cols()).filter(|&j| e.insert(a.col(j))).collect()
}

/// Columns of `a` forming a basis of its column space.
pub fn column_basis(a: &Mat) -> Mat {
    a.select_cols(&independent_columns(a))
}

/// Extends the independent columns of `sub` to a basis of the ambient space
/// with standard vectors; the columns of `sub` come first.
pub fn complete_basis(sub: &Mat) -> Mat {
    let n = sub.rows();
    let ctx = sub.ctx();
    let mut e = Echelon::new(ctx, n);
    let mut cols = Vec::new();
    for j in 0..sub.cols() {
        let c = sub.col(j);
        if e.insert(c.clone()) {
            cols.push(c);
        }
    }
    for i in 0..n {
        let mut v = vec![Cyc::zero(ctx); n];
        v[i] = Cyc::one(ctx);
        if e.insert(v.clone()) {
            cols.push(v);
        }
    }
    Mat::from_cols(ctx, n, &cols)
}

/// Semi-echelon basis that grows one vector at a time.
///
/// Rows are kept with a normalized pivot; a new vector is reduced against
/// them in insertion order.
#[derive(Clone, Debug)]
pub struct Echelon {
    ctx: &'static FieldContext,
    width: usize,
    rows: Vec<Vec<Cyc>>,
    pivots: Vec<usize>,
}

impl Echelon {
    pub fn new(ctx: &'static FieldContext, width: usize) -> Echelon {
        Echelon { ctx, width, rows: Vec::new(), pivots: Vec::new() }
    }

    pub fn len(&self) -> usize {
        self.rows.len()
    }

    pub fn is_empty(&self) -> bool {
        self.rows.is_empty()
    }

    pub fn width(&self) -> usize {
        self.width
    }

    pub fn rows(&self) -> &[Vec<Cyc>] {
        &self.rows
    }

    pub fn reduce(&self, mut v: Vec<Cyc>) -> Vec<Cyc> {
        assert_eq!(v.len(), self.width);
        for (row, &p) in self.rows.iter().zip(&self.pivots) {
            if !v[p].is_zero() {
                let f = v[p].clone();
                eliminate(&mut v, row, &f, 0);
            }
        }
        v
    }

    pub fn contains(&self, v: &[Cyc]) -> bool {
        self.reduce(v.to_vec()).iter().all(Cyc::is_zero)
    }

    /// Adds `v` if it is independent; returns whether it was added.
    pub fn insert(&mut self, v: Vec<Cyc>) -> bool {
        self.insert_reduced(v).is_some()
    }

    /// Like `insert`, returning the stored (reduced, pivot-normalized) row.
    pub fn insert_reduced(&mut self, v: Vec<Cyc>) -> Option<&[Cyc]> {
        let mut r = self.reduce(v);
        let p = r.iter().position(|x| !x.is_zero())?;
        normalize(&mut r, p);
        self.rows.push(r);
        self.pivots.push(p);
        self.rows.last().map(Vec::as_slice)
    }

    /// Basis vectors as columns of a `width x len` matrix.
    pub fn to_cols(&self) -> Mat {
        Mat::from_cols(self.ctx, self.width, &self.rows)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalars::cyclo_context;
    use proptest::prelude::*;

    fn m(ctx: &'static FieldContext, rows: &[&[i64]]) -> Mat {
        Mat::from_rows(ctx, rows.iter().map(|r| r.iter().map(|&x| Cyc::int(ctx, x)).collect()).collect()).unwrap()
    }

    #[test]
    fn small_examples() {
        let ctx = cyclo_context(3);
        let k = kernel_basis(&m(ctx, &[&[1, 1], &[1, 1]]));
        assert_eq!(k.cols(), 1);
        assert_eq!(k.get(0, 0), &-k.get(1, 0));
        assert_eq!(rank(&Mat::identity(ctx, 5)), 5);
        let x = solve_linear(&m(ctx, &[&[2]]), &m(ctx, &[&[6]])).unwrap();
        assert_eq!(x, m(ctx, &[&[3]]));
        assert!(matches!(solve_linear(&m(ctx, &[&[0]]), &m(ctx, &[&[1]])), Err(Error::NoSolution)));
    }

    fn arb_mat(rows: usize, cols: usize) -> impl Strategy<Value = Mat> {
        let ctx = cyclo_context(12);
        // sparse-ish entries so rank deficiency is common
        proptest::collection::vec((-2i64..3, 0i64..12, 0u8..3), rows * cols).prop_map(move |v| {
            Mat::unflatten(
                ctx,
                rows,
                cols,
                v.into_iter().map(|(a, k, z)| if z == 0 { Cyc::zero(ctx) } else { &Cyc::int(ctx, a) * &Cyc::root(ctx, k) }).collect(),
            )
        })
    }

    proptest! {
        #[test]
        fn rank_nullity(a in arb_mat(4, 6)) {
            let k = kernel_basis(&a);
            prop_assert_eq!(rank(&a) + k.cols(), a.cols());
            prop_assert!(a.mul(&k).is_zero());
        }

        #[test]
        fn rref_idempotent(a in arb_mat(5, 4)) {
            let (r, p) = rref(&a);
            let (r2, p2) = rref(&r);
            prop_assert_eq!(r, r2);
            prop_assert_eq!(p, p2);
        }

        #[test]
        fn kron_mixed_product(a in arb_mat(2, 3), b in arb_mat(2, 2), c in arb_mat(3, 2), d in arb_mat(2, 1)) {
            prop_assert_eq!(a.kron(&b).mul(&c.kron(&d)), a.mul(&c).kron(&b.mul(&d)));
        }

        #[test]
        fn solve_consistent(a in arb_mat(4, 3), x in arb_mat(3, 2)) {
            let b = a.mul(&x);
            let y = solve_linear(&a, &b).unwrap();
            prop_assert_eq!(a.mul(&y), b);
        }
    }
}
