//! Dense matrices over `Q(zeta_n)`.

use std::fmt;

use crate::error::{Error, Result};
use crate::scalars::{Cyc, FieldContext};

#[derive(Clone, PartialEq)]
pub struct Mat {
    rows: usize,
    cols: usize,
    ctx: &'static FieldContext,
    data: Vec<Cyc>,
}

impl fmt::Debug for Mat {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "Mat {}x{} over Q(zeta_{}):", self.rows, self.cols, self.ctx.n)?;
        for i in 0..self.rows {
            let row: Vec<String> = (0..self.cols).map(|j| self.get(i, j).to_string()).collect();
            writeln!(f, "  [{}]", row.join(", "))?;
        }
        Ok(())
    }
}

impl Mat {
    pub fn zeros(ctx: &'static FieldContext, rows: usize, cols: usize) -> Mat {
        Mat { rows, cols, ctx, data: vec![Cyc::zero(ctx); rows * cols] }
    }

    pub fn identity(ctx: &'static FieldContext, n: usize) -> Mat {
        let mut m = Mat::zeros(ctx, n, n);
        for i in 0..n {
            m.set(i, i, Cyc::one(ctx));
        }
        m
    }

    pub fn scalar(ctx: &'static FieldContext, n: usize, x: &Cyc) -> Mat {
        let mut m = Mat::zeros(ctx, n, n);
        for i in 0..n {
            m.set(i, i, x.clone());
        }
        m
    }

    pub fn diag(ctx: &'static FieldContext, entries: &[Cyc]) -> Mat {
        let mut m = Mat::zeros(ctx, entries.len(), entries.len());
        for (i, e) in entries.iter().enumerate() {
            m.set(i, i, e.clone());
        }
        m
    }

    pub fn from_fn(ctx: &'static FieldContext, rows: usize, cols: usize, mut f: impl FnMut(usize, usize) -> Cyc) -> Mat {
        let mut data = Vec::with_capacity(rows * cols);
        for i in 0..rows {
            for j in 0..cols {
                data.push(f(i, j));
            }
        }
        Mat { rows, cols, ctx, data }
    }

    /// Builds from row vectors; every row must have the same length.
    pub fn from_rows(ctx: &'static FieldContext, rows: Vec<Vec<Cyc>>) -> Result<Mat> {
        let r = rows.len();
        let c = rows.first().map_or(0, Vec::len);
        if rows.iter().any(|row| row.len() != c) {
            return Err(Error::DimensionMismatch("ragged rows".into()));
        }
        Ok(Mat { rows: r, cols: c, ctx, data: rows.into_iter().flatten().collect() })
    }

    /// Builds from column vectors of length `rows`.
    pub fn from_cols(ctx: &'static FieldContext, rows: usize, cols: &[Vec<Cyc>]) -> Mat {
        Mat::from_fn(ctx, rows, cols.len(), |i, j| cols[j][i].clone())
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn ctx(&self) -> &'static FieldContext {
        self.ctx
    }

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    #[inline]
    pub fn get(&self, i: usize, j: usize) -> &Cyc {
        &self.data[i * self.cols + j]
    }

    #[inline]
    pub fn get_mut(&mut self, i: usize, j: usize) -> &mut Cyc {
        &mut self.data[i * self.cols + j]
    }

    #[inline]
    pub fn set(&mut self, i: usize, j: usize, v: Cyc) {
        self.data[i * self.cols + j] = v;
    }

    pub fn row(&self, i: usize) -> &[Cyc] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }

    pub fn col(&self, j: usize) -> Vec<Cyc> {
        (0..self.rows).map(|i| self.get(i, j).clone()).collect()
    }

    pub fn col_vecs(&self) -> Vec<Vec<Cyc>> {
        (0..self.cols).map(|j| self.col(j)).collect()
    }

    pub fn entries(&self) -> &[Cyc] {
        &self.data
    }

    pub fn into_entries(self) -> Vec<Cyc> {
        self.data
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(Cyc::is_zero)
    }

    pub fn is_identity(&self) -> bool {
        self.is_square()
            && (0..self.rows).all(|i| (0..self.cols).all(|j| if i == j { self.get(i, j).is_one() } else { self.get(i, j).is_zero() }))
    }

    pub fn nnz(&self) -> usize {
        self.data.iter().filter(|x| !x.is_zero()).count()
    }

    fn same_shape(&self, other: &Mat) {
        assert!(self.rows == other.rows && self.cols == other.cols, "shape mismatch {}x{} vs {}x{}", self.rows, self.cols, other.rows, other.cols);
    }

    pub fn add(&self, other: &Mat) -> Mat {
        self.same_shape(other);
        Mat { rows: self.rows, cols: self.cols, ctx: self.ctx, data: self.data.iter().zip(&other.data).map(|(a, b)| a + b).collect() }
    }

    pub fn sub(&self, other: &Mat) -> Mat {
        self.same_shape(other);
        Mat { rows: self.rows, cols: self.cols, ctx: self.ctx, data: self.data.iter().zip(&other.data).map(|(a, b)| a - b).collect() }
    }

    pub fn add_assign(&mut self, other: &Mat) {
        self.same_shape(other);
        for (a, b) in self.data.iter_mut().zip(&other.data) {
            if !b.is_zero() {
                *a += b;
            }
        }
    }

    pub fn neg(&self) -> Mat {
        Mat { rows: self.rows, cols: self.cols, ctx: self.ctx, data: self.data.iter().map(|a| -a).collect() }
    }

    pub fn scale(&self, x: &Cyc) -> Mat {
        if x.is_zero() {
            return Mat::zeros(self.ctx, self.rows, self.cols);
        }
        Mat { rows: self.rows, cols: self.cols, ctx: self.ctx, data: self.data.iter().map(|a| if a.is_zero() { a.clone() } else { a * x }).collect() }
    }

    /// Matrix product; zero entries of either factor are skipped.
    pub fn mul(&self, other: &Mat) -> Mat {
        assert_eq!(self.cols, other.rows, "product shape mismatch {}x{} * {}x{}", self.rows, self.cols, other.rows, other.cols);
        let mut out = Mat::zeros(self.ctx, self.rows, other.cols);
        // column support of each row of `other`
        let support: Vec<Vec<usize>> = (0..other.rows).map(|k| (0..other.cols).filter(|&j| !other.get(k, j).is_zero()).collect()).collect();
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = self.get(i, k);
                if a.is_zero() {
                    continue;
                }
                let one = a.is_one();
                for &j in &support[k] {
                    let b = other.get(k, j);
                    let p = if one { b.clone() } else { a * b };
                    *out.get_mut(i, j) += &p;
                }
            }
        }
        out
    }

    pub fn mul_vec(&self, v: &[Cyc]) -> Vec<Cyc> {
        assert_eq!(self.cols, v.len());
        (0..self.rows)
            .map(|i| {
                let mut acc = Cyc::zero(self.ctx);
                for (k, x) in v.iter().enumerate() {
                    let a = self.get(i, k);
                    if !a.is_zero() && !x.is_zero() {
                        acc += &(a * x);
                    }
                }
                acc
            })
            .collect()
    }

    pub fn transpose(&self) -> Mat {
        Mat::from_fn(self.ctx, self.cols, self.rows, |i, j| self.get(j, i).clone())
    }

    /// Kronecker product with the left factor's index major.
    pub fn kron(&self, other: &Mat) -> Mat {
        let (r2, c2) = (other.rows, other.cols);
        let mut out = Mat::zeros(self.ctx, self.rows * r2, self.cols * c2);
        for i in 0..self.rows {
            for j in 0..self.cols {
                let a = self.get(i, j);
                if a.is_zero() {
                    continue;
                }
                for k in 0..r2 {
                    for l in 0..c2 {
                        let b = other.get(k, l);
                        if !b.is_zero() {
                            out.set(i * r2 + k, j * c2 + l, a * b);
                        }
                    }
                }
            }
        }
        out
    }

    pub fn submatrix(&self, r0: usize, c0: usize, rows: usize, cols: usize) -> Mat {
        Mat::from_fn(self.ctx, rows, cols, |i, j| self.get(r0 + i, c0 + j).clone())
    }

    pub fn set_block(&mut self, r0: usize, c0: usize, block: &Mat) {
        for i in 0..block.rows {
            for j in 0..block.cols {
                self.set(r0 + i, c0 + j, block.get(i, j).clone());
            }
        }
    }

    pub fn select_cols(&self, idx: &[usize]) -> Mat {
        Mat::from_fn(self.ctx, self.rows, idx.len(), |i, j| self.get(i, idx[j]).clone())
    }

    pub fn select_rows(&self, idx: &[usize]) -> Mat {
        Mat::from_fn(self.ctx, idx.len(), self.cols, |i, j| self.get(idx[i], j).clone())
    }

    pub fn hstack(ctx: &'static FieldContext, rows: usize, parts: &[&Mat]) -> Mat {
        let cols = parts.iter().map(|p| p.cols).sum();
        let mut out = Mat::zeros(ctx, rows, cols);
        let mut c0 = 0;
        for p in parts {
            assert_eq!(p.rows, rows);
            out.set_block(0, c0, p);
            c0 += p.cols;
        }
        out
    }

    pub fn vstack(ctx: &'static FieldContext, cols: usize, parts: &[&Mat]) -> Mat {
        let rows = parts.iter().map(|p| p.rows).sum();
        let mut out = Mat::zeros(ctx, rows, cols);
        let mut r0 = 0;
        for p in parts {
            assert_eq!(p.cols, cols);
            out.set_block(r0, 0, p);
            r0 += p.rows;
        }
        out
    }

    pub fn block_diag(ctx: &'static FieldContext, parts: &[&Mat]) -> Mat {
        let rows = parts.iter().map(|p| p.rows).sum();
        let cols = parts.iter().map(|p| p.cols).sum();
        let mut out = Mat::zeros(ctx, rows, cols);
        let (mut r0, mut c0) = (0, 0);
        for p in parts {
            out.set_block(r0, c0, p);
            r0 += p.rows;
            c0 += p.cols;
        }
        out
    }

    pub fn trace(&self) -> Cyc {
        let mut acc = Cyc::zero(self.ctx);
        for i in 0..self.rows.min(self.cols) {
            acc += self.get(i, i);
        }
        acc
    }

    /// `trace(self * other)` without forming the product.
    pub fn trace_product(&self, other: &Mat) -> Cyc {
        assert!(self.cols == other.rows && self.rows == other.cols);
        let mut acc = Cyc::zero(self.ctx);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = self.get(i, k);
                let b = other.get(k, i);
                if !a.is_zero() && !b.is_zero() {
                    acc += &(a * b);
                }
            }
        }
        acc
    }

    pub fn pow(&self, e: usize) -> Mat {
        assert!(self.is_square());
        let mut acc = Mat::identity(self.ctx, self.rows);
        let mut base = self.clone();
        let mut e = e;
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.mul(&base);
            }
            e >>= 1;
            if e > 0 {
                base = base.mul(&base);
            }
        }
        acc
    }

    pub fn inverse(&self) -> Result<Mat> {
        if !self.is_square() {
            return Err(Error::DimensionMismatch("inverse of non-square matrix".into()));
        }
        super::solve_linear(self, &Mat::identity(self.ctx, self.rows)).map_err(|_| Error::DivisionByZero)
    }

    /// Row-major flattening, used to treat matrices as vectors.
    pub fn flatten(&self) -> Vec<Cyc> {
        self.data.clone()
    }

    pub fn unflatten(ctx: &'static FieldContext, rows: usize, cols: usize, v: Vec<Cyc>) -> Mat {
        assert_eq!(v.len(), rows * cols);
        Mat { rows, cols, ctx, data: v }
    }

    pub fn column_vector(ctx: &'static FieldContext, v: Vec<Cyc>) -> Mat {
        let n = v.len();
        Mat { rows: n, cols: 1, ctx, data: v }
    }

    pub fn map(&self, f: impl Fn(&Cyc) -> Cyc) -> Mat {
        Mat { rows: self.rows, cols: self.cols, ctx: self.ctx, data: self.data.iter().map(f).collect() }
    }

    /// `P^{-1} self P` for an invertible `P`.
    pub fn conjugate_by(&self, p: &Mat, p_inv: &Mat) -> Mat {
        p_inv.mul(&self.mul(p))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalars::cyclo_context;

    fn m(ctx: &'static FieldContext, rows: &[&[i64]]) -> Mat {
        Mat::from_rows(ctx, rows.iter().map(|r| r.iter().map(|&x| Cyc::int(ctx, x)).collect()).collect()).unwrap()
    }

    #[test]
    fn kron_examples() {
        let ctx = cyclo_context(3);
        let i2 = Mat::identity(ctx, 2);
        let b = m(ctx, &[&[1, 2], &[3, 4]]);
        assert_eq!(i2.kron(&b), Mat::block_diag(ctx, &[&b, &b]));
        assert_eq!(b.kron(&Mat::identity(ctx, 1)), b);
        assert_eq!(m(ctx, &[&[0, 1], &[1, 0]]).kron(&m(ctx, &[&[2]])), m(ctx, &[&[0, 2], &[2, 0]]));
    }

    #[test]
    fn inverse_and_pow() {
        let ctx = cyclo_context(12);
        let a = Mat::from_fn(ctx, 3, 3, |i, j| if i <= j { Cyc::root(ctx, (i + 2 * j) as i64) } else { Cyc::zero(ctx) });
        let inv = a.inverse().unwrap();
        assert!(a.mul(&inv).is_identity());
        assert_eq!(a.pow(3), a.mul(&a).mul(&a));
    }
}
