//! Intertwiner spaces by spinning.
//!
//! A basis of the source is grown from root vectors by applying the
//! generators. Each new vector's image is determined by its parent's image;
//! each linear dependency among spun vectors becomes a linear condition on
//! the images of the roots, imposed as soon as it appears.

use crate::linalg::{kernel_basis, Mat};
use crate::scalars::{Cyc, FieldContext};

use super::ModuleRep;

struct Tracked {
    ctx: &'static FieldContext,
    width: usize,
    rows: Vec<(Vec<Cyc>, usize, Vec<Cyc>)>,
}

impl Tracked {
    /// Reduces `v`; returns the remainder and `c` with `v = rem + sum c_k node_k`.
    fn reduce(&self, mut v: Vec<Cyc>, nodes: usize) -> (Vec<Cyc>, Vec<Cyc>) {
        let mut comb = vec![Cyc::zero(self.ctx); nodes];
        for (row, p, rc) in &self.rows {
            if v[*p].is_zero() {
                continue;
            }
            let f = v[*p].clone();
            for k in 0..self.width {
                if !row[k].is_zero() {
                    v[k].sub_mul_assign(&f, &row[k]);
                }
            }
            for (k, c) in rc.iter().enumerate() {
                if !c.is_zero() {
                    comb[k] += &(&f * c);
                }
            }
        }
        (v, comb)
    }

    /// Records `rem = node_new - sum comb_k node_k`.
    fn push(&mut self, rem: Vec<Cyc>, mut comb: Vec<Cyc>, new_index: usize) {
        let p = rem.iter().position(|x| !x.is_zero()).expect("remainder is nonzero");
        let inv = rem[p].inv().expect("pivot is nonzero");
        for c in comb.iter_mut() {
            *c = -&(&*c * &inv);
        }
        comb.resize(new_index + 1, Cyc::zero(self.ctx));
        comb[new_index] = inv.clone();
        let row = rem.iter().map(|x| x * &inv).collect();
        self.rows.push((row, p, comb));
    }
}

/// Basis of `{X : X A_i = B_i X}` for square `A_i` (size `m`) and `B_i` (size `n`).
pub fn hom_space_gens(ctx: &'static FieldContext, m: usize, n: usize, ga: &[Mat], gb: &[Mat]) -> Vec<Mat> {
    assert_eq!(ga.len(), gb.len());
    if m == 0 || n == 0 {
        return Vec::new();
    }
    let mut ech = Tracked { ctx, width: m, rows: Vec::new() };
    let mut vecs: Vec<Vec<Cyc>> = Vec::new();
    let mut imgs: Vec<Mat> = Vec::new();
    let mut k = 0usize;
    let mut next = 0usize;
    let mut next_root = 0usize;
    loop {
        while next < vecs.len() {
            let idx = next;
            next += 1;
            for (a, bmat) in ga.iter().zip(gb) {
                let u = a.mul_vec(&vecs[idx]);
                let (rem, comb) = ech.reduce(u.clone(), vecs.len());
                let img = bmat.mul(&imgs[idx]);
                if rem.iter().any(|x| !x.is_zero()) {
                    let id = vecs.len();
                    ech.push(rem, comb, id);
                    vecs.push(u);
                    imgs.push(img);
                    continue;
                }
                let mut cond = img;
                for (j, c) in comb.iter().enumerate() {
                    if !c.is_zero() {
                        cond = cond.sub(&imgs[j].scale(c));
                    }
                }
                if cond.is_zero() {
                    continue;
                }
                let kb = kernel_basis(&cond);
                k = kb.cols();
                for im in imgs.iter_mut() {
                    *im = im.mul(&kb);
                }
            }
        }
        if vecs.len() == m {
            break;
        }
        // next root: the first standard vector outside the span
        let root = loop {
            let mut e = vec![Cyc::zero(ctx); m];
            e[next_root] = Cyc::one(ctx);
            next_root += 1;
            let (rem, comb) = ech.reduce(e.clone(), vecs.len());
            if rem.iter().any(|x| !x.is_zero()) {
                break (e, rem, comb);
            }
        };
        let (e, rem, comb) = root;
        let id = vecs.len();
        ech.push(rem, comb, id);
        for im in imgs.iter_mut() {
            *im = Mat::hstack(ctx, n, &[im, &Mat::zeros(ctx, n, n)]);
        }
        vecs.push(e);
        imgs.push(Mat::hstack(ctx, n, &[&Mat::zeros(ctx, n, k), &Mat::identity(ctx, n)]));
        k += n;
    }
    if k == 0 {
        return Vec::new();
    }
    let p = Mat::from_cols(ctx, m, &vecs);
    let pinv = p.inverse().expect("spun vectors form a basis");
    (0..k)
        .map(|c| {
            let cols: Vec<Vec<Cyc>> = imgs.iter().map(|im| im.col(c)).collect();
            Mat::from_cols(ctx, n, &cols).mul(&pinv)
        })
        .collect()
}

/// Basis of `Hom_A(M, N)` as `dim N x dim M` matrices.
pub fn hom_space(m: &ModuleRep, n: &ModuleRep) -> Vec<Mat> {
    hom_space_gens(m.params.ctx, m.dim(), n.dim(), &m.gens(), &n.gens())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::grp::{irrep, regular_rep, IrrepLabel, Sign};
    use crate::linalg::rank;
    use crate::scalars::ParamSet;

    #[test]
    fn group_homs_count_multiplicities() {
        let p = ParamSet::int(2, 1, 1);
        let reg = regular_rep(&p);
        for l in IrrepLabel::all(2) {
            let r = irrep(&p, l);
            let h = hom_space_gens(p.ctx, r.dim(), reg.dim(), &[r.s.clone(), r.t.clone()], &[reg.s.clone(), reg.t.clone()]);
            assert_eq!(h.len(), l.dim());
            for x in &h {
                assert_eq!(x.mul(&r.s), reg.s.mul(x));
                assert_eq!(x.mul(&r.t), reg.t.mul(x));
            }
        }
        let g = [reg.s.clone(), reg.t.clone()];
        let end = hom_space_gens(p.ctx, 12, 12, &g, &g);
        assert_eq!(end.len(), 12);
        let flat: Vec<Vec<Cyc>> = end.iter().map(Mat::flatten).collect();
        assert_eq!(rank(&Mat::from_cols(p.ctx, 144, &flat)), 12);
    }

    #[test]
    fn module_homs() {
        let p = ParamSet::int(2, 1, 1);
        let t0p = super::super::t0(&p, Sign::Plus);
        let l0m = super::super::l0(&p, Sign::Minus);
        let l0p = super::super::l0(&p, Sign::Plus);
        assert_eq!(hom_space(&l0m, &t0p).len(), 1);
        assert_eq!(hom_space(&l0p, &t0p).len(), 0);
        assert_eq!(hom_space(&t0p, &l0p).len(), 1);
        assert_eq!(hom_space(&t0p, &t0p).len(), 1);
    }
}
