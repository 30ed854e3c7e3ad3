//! Tensor products, duals, closed-form block formulas for products of
//! mixed-form modules, and catalog-relative decomposition.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::error::{Error, Result};
use crate::grp::{isotypic_decompose, IrrepLabel, Sign};
use crate::linalg::{kernel_basis, rank, Mat};
use crate::repmod::{
    composition_factors, hom_space, is_isomorphic_seeded, j_component, mixed, Label, MixedBlocks, ModuleRep,
    DEFAULT_SEED,
};
use crate::scalars::{Cyc, ParamSet};

/// `s (x) s`, `t (x) t`, `a0 (x) 1 + t (x) a0`.
pub fn tensor(m: &ModuleRep, n: &ModuleRep) -> Result<ModuleRep> {
    if m.params != n.params {
        return Err(Error::Verification("tensor factors have different parameters".into()));
    }
    let ctx = m.params.ctx;
    let a0 = m.a0.kron(&Mat::identity(ctx, n.dim())).add(&m.t.kron(&n.a0));
    ModuleRep::new(&m.params, m.s.kron(&n.s), m.t.kron(&n.t), a0, None)
}

/// Inverse transposes on the group; `a0* = -(t^-1 a0)^T`.
pub fn dual(m: &ModuleRep) -> Result<ModuleRep> {
    let s = m.s.inverse()?.transpose();
    let tinv = m.t.inverse()?;
    let t = tinv.transpose();
    let a0 = tinv.mul(&m.a0).transpose().neg();
    ModuleRep::new(&m.params, s, t, a0, None)
}

/// `M` twisted by `a_i -> -a_i`, the square of the antipode; `M**` is
/// this twist of `M`.
pub fn twist(m: &ModuleRep) -> ModuleRep {
    ModuleRep { a0: m.a0.neg(), label: None, ..m.clone() }
}

/// A single-degree module in a basis `(x, y, v, w)` adapted to
/// `S_j^+p + S_j^-q + M_j^r`, with `t x = b x`, `t y = -b y`, `w = t v`.
#[derive(Clone, Debug)]
pub struct MixedForm {
    pub j: usize,
    pub b: Cyc,
    pub p: usize,
    pub q: usize,
    pub r: usize,
    pub blocks: MixedBlocks,
    /// Columns: the adapted basis in the module's original coordinates.
    pub basis: Mat,
}

impl MixedForm {
    /// Reads off blocks in the isotypic basis; fails unless `m` lives in one degree.
    pub fn from_module(m: &ModuleRep) -> Result<MixedForm> {
        let p = &m.params;
        let ctx = p.ctx;
        let n = m.dim();
        let parts = isotypic_decompose(p, &m.group_rep())?;
        let mut j = None;
        for c in &parts {
            let d = c.label.degree();
            if j.is_some_and(|x| x != d) {
                return Err(Error::Verification(format!("{} spans several degrees", m.name())));
            }
            j = Some(d);
        }
        let j = j.unwrap_or(0);
        let pick = |l: IrrepLabel| parts.iter().find(|c| c.label == l).map(|c| c.basis.clone());
        let xs = pick(IrrepLabel::S(j, Sign::Plus)).unwrap_or_else(|| Mat::zeros(ctx, n, 0));
        let ys = pick(IrrepLabel::S(j, Sign::Minus)).unwrap_or_else(|| Mat::zeros(ctx, n, 0));
        let ms = pick(IrrepLabel::M(j)).unwrap_or_else(|| Mat::zeros(ctx, n, 0));
        let r = ms.cols() / 2;
        let vs: Vec<usize> = (0..r).map(|i| 2 * i).collect();
        let ws: Vec<usize> = (0..r).map(|i| 2 * i + 1).collect();
        let basis = Mat::hstack(ctx, n, &[&xs, &ys, &ms.select_cols(&vs), &ms.select_cols(&ws)]);
        let conj = m.change_basis(&basis)?;
        let (pp, q) = (xs.cols(), ys.cols());
        let rt = conj.a0.transpose();
        let (ox, oy, ov, ow) = (0, pp, pp + q, pp + q + r);
        let blk = |r0: usize, c0: usize, h: usize, w: usize| rt.submatrix(r0, c0, h, w);
        let blocks = MixedBlocks {
            alpha: blk(oy, ox, q, pp),
            beta: blk(ox, oy, pp, q),
            delta_plus: blk(ox, ow, pp, r),
            delta_minus: blk(oy, ow, q, r),
            eta: blk(ov, ox, r, pp),
            sigma: blk(ov, oy, r, q),
            theta: blk(ov, ov, r, r),
            tau: blk(ov, ow, r, r),
        };
        let b = p.b(j).clone();
        let mf = MixedForm { j, b, p: pp, q, r, blocks, basis };
        let rebuilt = mf.to_module(p)?;
        if rebuilt.s != conj.s || rebuilt.t != conj.t || rebuilt.a0 != conj.a0 {
            return Err(Error::Verification(format!("{} is not of mixed form in its isotypic basis", m.name())));
        }
        Ok(mf)
    }

    pub fn to_module(&self, p: &ParamSet) -> Result<ModuleRep> {
        mixed(p, &self.b, &self.blocks, None)
    }

    pub fn dim(&self) -> usize {
        self.p + self.q + 2 * self.r
    }
}

/// Multiplicities `(p, q, r)` of the product of mixed forms.
pub fn product_shape(m: &MixedForm, n: &MixedForm) -> (usize, usize, usize) {
    let (p, q, r) = (m.p, m.q, m.r);
    let (p2, q2, r2) = (n.p, n.q, n.r);
    (p * p2 + q * q2 + r * r2, p * q2 + q * p2 + r * r2, p * r2 + q * r2 + r * p2 + r * q2 + r * r2)
}

/// The adapted basis of `M (x) N` in the coordinates of the two mixed
/// bases (Kronecker order), as columns
/// `x: x x', y y', b_j v w' + b_k w v'`,
/// `y: x y', y x', b_j v w' - b_k w v'`,
/// `v: x v', y v', v x', v y', w w'`,
/// `w: b_j x w', -b_j y w', b_k w x', -b_k w y', (b_j b_k)^2 v v'`.
pub fn product_basis(ctx: &'static crate::scalars::FieldContext, m: &MixedForm, n: &MixedForm) -> Mat {
    let (dm, dn) = (m.dim(), n.dim());
    let big = dm * dn;
    let (mx, my, mv, mw) = (0, m.p, m.p + m.q, m.p + m.q + m.r);
    let (nx, ny, nv, nw) = (0, n.p, n.p + n.q, n.p + n.q + n.r);
    let (bj, bk) = (&m.b, &n.b);
    let one = Cyc::one(ctx);
    let mut cols: Vec<Vec<Cyc>> = Vec::with_capacity(big);
    // one family: pairs (off_m + i, off_n + i') with coefficient c, plus an optional second term
    let mut family = |terms: &[(usize, usize, usize, usize, Cyc)]| {
        let (_, lm, _, ln, _) = terms[0];
        for i in 0..lm {
            for i2 in 0..ln {
                let mut col = vec![Cyc::zero(ctx); big];
                for (om, _, on, _, c) in terms {
                    col[(om + i) * dn + on + i2] = c.clone();
                }
                cols.push(col);
            }
        }
    };
    let (p, q, r) = (m.p, m.q, m.r);
    let (p2, q2, r2) = (n.p, n.q, n.r);
    family(&[(mx, p, nx, p2, one.clone())]);
    family(&[(my, q, ny, q2, one.clone())]);
    family(&[(mv, r, nw, r2, bj.clone()), (mw, r, nv, r2, bk.clone())]);
    family(&[(mx, p, ny, q2, one.clone())]);
    family(&[(my, q, nx, p2, one.clone())]);
    family(&[(mv, r, nw, r2, bj.clone()), (mw, r, nv, r2, -bk)]);
    family(&[(mx, p, nv, r2, one.clone())]);
    family(&[(my, q, nv, r2, one.clone())]);
    family(&[(mv, r, nx, p2, one.clone())]);
    family(&[(mv, r, ny, q2, one.clone())]);
    family(&[(mw, r, nw, r2, one.clone())]);
    let b = bj * bk;
    family(&[(mx, p, nw, r2, bj.clone())]);
    family(&[(my, q, nw, r2, -bj)]);
    family(&[(mw, r, nx, p2, bk.clone())]);
    family(&[(mw, r, ny, q2, -bk)]);
    family(&[(mv, r, nv, r2, &b * &b)]);
    Mat::from_cols(ctx, big, &cols)
}

/// Blocks of `M (x) N` read off in the adapted basis.
pub fn extracted_blocks(mm: &ModuleRep, nn: &ModuleRep) -> Result<MixedForm> {
    let ctx = mm.params.ctx;
    let m = MixedForm::from_module(mm)?;
    let n = MixedForm::from_module(nn)?;
    let prod = tensor(mm, nn)?;
    let basis = m.basis.kron(&n.basis).mul(&product_basis(ctx, &m, &n));
    let conj = prod.change_basis(&basis)?;
    let (pp, q, r) = product_shape(&m, &n);
    let rt = conj.a0.transpose();
    let (ox, oy, ov, ow) = (0, pp, pp + q, pp + q + r);
    let blk = |r0: usize, c0: usize, h: usize, w: usize| rt.submatrix(r0, c0, h, w);
    let blocks = MixedBlocks {
        alpha: blk(oy, ox, q, pp),
        beta: blk(ox, oy, pp, q),
        delta_plus: blk(ox, ow, pp, r),
        delta_minus: blk(oy, ow, q, r),
        eta: blk(ov, ox, r, pp),
        sigma: blk(ov, oy, r, q),
        theta: blk(ov, ov, r, r),
        tau: blk(ov, ow, r, r),
    };
    Ok(MixedForm { j: (m.j + n.j) % mm.params.ell, b: &m.b * &n.b, p: pp, q, r, blocks, basis })
}

/// Assembles a block matrix; `None` cells are zero.
fn grid(ctx: &'static crate::scalars::FieldContext, rows: &[usize], cols: &[usize], cells: Vec<Vec<Option<Mat>>>) -> Mat {
    let mut out = Mat::zeros(ctx, rows.iter().sum(), cols.iter().sum());
    let mut r0 = 0;
    for (i, row) in cells.into_iter().enumerate() {
        let mut c0 = 0;
        for (k, cell) in row.into_iter().enumerate() {
            if let Some(m) = cell {
                debug_assert_eq!((m.rows(), m.cols()), (rows[i], cols[k]), "block ({i}, {k})");
                out.set_block(r0, c0, &m);
            }
            c0 += cols[k];
        }
        r0 += rows[i];
    }
    out
}

/// Closed-form blocks of `M (x) N` in the adapted basis, with `b = b_j b_k`.
pub fn formula_blocks(ctx: &'static crate::scalars::FieldContext, m: &MixedForm, n: &MixedForm) -> MixedBlocks {
    let (p, q, r) = (m.p, m.q, m.r);
    let (p2, q2, r2) = (n.p, n.q, n.r);
    let (bj, bk) = (&m.b, &n.b);
    let b = bj * bk;
    let bki = bk.inv().expect("b_k is a root of unity");
    let half = Cyc::rational(ctx, 1, 2);
    let (a, be, dp, dm, et, si, th, ta) = {
        let x = &m.blocks;
        (&x.alpha, &x.beta, &x.delta_plus, &x.delta_minus, &x.eta, &x.sigma, &x.theta, &x.tau)
    };
    let (a2, be2, dp2, dm2, et2, si2, th2, ta2) = {
        let x = &n.blocks;
        (&x.alpha, &x.beta, &x.delta_plus, &x.delta_minus, &x.eta, &x.sigma, &x.theta, &x.tau)
    };
    // bold m = m (x) 1, bold m' = 1 (x) m'
    let l = |x: &Mat, k: usize| Some(x.kron(&Mat::identity(ctx, k)));
    let rr = |k: usize, x: &Mat| Some(Mat::identity(ctx, k).kron(x));
    let sc = |c: &Cyc, x: Option<Mat>| x.map(|x| x.scale(c));
    let sum = |x: Option<Mat>, y: Option<Mat>| Some(x.expect("left").add(&y.expect("right")));
    let xr = [p * p2, q * q2, r * r2];
    let yr = [p * q2, q * p2, r * r2];
    let vr = [p * r2, q * r2, r * p2, r * q2, r * r2];
    let mbj = -bj;
    let alpha = grid(
        ctx,
        &yr,
        &xr,
        vec![
            vec![sc(bj, rr(p, a2)), l(be, q2), None],
            vec![l(a, p2), sc(&mbj, rr(q, be2)), None],
            vec![None, None, sum(l(th, r2), sc(&-&b, rr(r, ta2)))],
        ],
    );
    let beta = grid(
        ctx,
        &xr,
        &yr,
        vec![
            vec![sc(bj, rr(p, be2)), l(be, p2), None],
            vec![l(a, q2), sc(&mbj, rr(q, a2)), None],
            vec![None, None, sum(l(th, r2), sc(&b, rr(r, ta2)))],
        ],
    );
    let last = |tau_sign: i64| -> Vec<Option<Mat>> {
        vec![
            l(et, r2),
            sc(&Cyc::int(ctx, -1), l(si, r2)),
            sc(&mbj, rr(r, et2)),
            sc(&mbj, rr(r, si2)),
            sc(&bki, sum(sc(&Cyc::int(ctx, tau_sign), l(ta, r2)), sc(&Cyc::int(ctx, -tau_sign), rr(r, th2)))),
        ]
    };
    let delta_plus = grid(
        ctx,
        &xr,
        &vr,
        vec![
            vec![rr(p, dp2), None, sc(&bki, l(dp, p2)), None, None],
            vec![None, rr(q, dm2), None, sc(&-&bki, l(dm, q2)), None],
            last(-1),
        ],
    );
    let delta_minus = grid(
        ctx,
        &yr,
        &vr,
        vec![
            vec![rr(p, dm2), None, None, sc(&-&bki, l(dp, q2)), None],
            vec![None, rr(q, dp2), sc(&bki, l(dm, p2)), None, None],
            last(1),
        ],
    );
    let hb = &bki * &half;
    let mhalf = -&half;
    let tt = sum(l(ta, r2), rr(r, th2));
    let eta = grid(
        ctx,
        &vr,
        &xr,
        vec![
            vec![sc(bj, rr(p, et2)), None, sc(&hb, l(dp, r2))],
            vec![None, sc(&mbj, rr(q, si2)), sc(&hb, l(dm, r2))],
            vec![l(et, p2), None, sc(&mhalf, rr(r, dp2))],
            vec![None, l(si, q2), sc(&half, rr(r, dm2))],
            vec![None, None, sc(&(&mbj * &half), tt.clone())],
        ],
    );
    let sigma = grid(
        ctx,
        &vr,
        &yr,
        vec![
            vec![sc(bj, rr(p, si2)), None, sc(&-&hb, l(dp, r2))],
            vec![None, sc(&mbj, rr(q, et2)), sc(&-&hb, l(dm, r2))],
            vec![None, l(si, p2), sc(&half, rr(r, dp2))],
            vec![l(et, q2), None, sc(&mhalf, rr(r, dm2))],
            vec![None, None, sc(&(&mbj * &half), tt)],
        ],
    );
    let theta = grid(
        ctx,
        &vr,
        &vr,
        vec![
            vec![sc(bj, rr(p, th2)), l(be, r2), None, None, None],
            vec![l(a, r2), sc(&mbj, rr(q, th2)), None, None, None],
            vec![None, None, l(th, p2), None, rr(r, dp2)],
            vec![None, None, None, l(th, q2), rr(r, dm2)],
            vec![None, None, sc(&-&(bj * &b), rr(r, et2)), sc(&(bj * &b), rr(r, si2)), sc(&Cyc::int(ctx, -1), l(th, r2))],
        ],
    );
    let bkib = &bki * &b.inv().expect("b is a root of unity");
    let tau = grid(
        ctx,
        &vr,
        &vr,
        vec![
            vec![rr(p, ta2), None, None, None, sc(&-&bkib, l(dp, r2))],
            vec![None, rr(q, ta2), None, None, sc(&bkib, l(dm, r2))],
            vec![None, None, sc(&bki, l(ta, p2)), sc(&-&bki, rr(r, be2)), None],
            vec![None, None, sc(&bki, rr(r, a2)), sc(&-&bki, l(ta, q2)), None],
            vec![sc(&Cyc::int(ctx, -1), l(et, r2)), sc(&Cyc::int(ctx, -1), l(si, r2)), None, None, sc(&Cyc::int(ctx, -1), rr(r, ta2))],
        ],
    );
    MixedBlocks { alpha, beta, delta_plus, delta_minus, eta, sigma, theta, tau }
}

/// The product built from the closed-form blocks.
pub fn formula_tensor(m: &ModuleRep, n: &ModuleRep) -> Result<ModuleRep> {
    let p = &m.params;
    let mf = MixedForm::from_module(m)?;
    let nf = MixedForm::from_module(n)?;
    let blocks = formula_blocks(p.ctx, &mf, &nf);
    mixed(p, &(&mf.b * &nf.b), &blocks, None)
}

#[derive(Clone, Debug)]
pub struct TensorWitness {
    pub left: ModuleRep,
    pub right: ModuleRep,
    pub product: ModuleRep,
    pub formula_product: ModuleRep,
    /// Intertwiner from the formula product to the Kronecker product.
    pub iso: Mat,
}

/// Finds an isomorphism between `tensor(m, n)` and `formula_tensor(m, n)`.
pub fn check_tensor_formula(m: &ModuleRep, n: &ModuleRep) -> Result<TensorWitness> {
    let product = tensor(m, n)?;
    let reason = |e: Error| Error::FormulaMismatch { left: m.name(), right: n.name(), reason: e.to_string() };
    let formula_product = formula_tensor(m, n).map_err(reason)?;
    let iso = is_isomorphic_seeded(&formula_product, &product, DEFAULT_SEED).ok_or_else(|| Error::FormulaMismatch {
        left: m.name(),
        right: n.name(),
        reason: "no isomorphism to the Kronecker product".into(),
    })?;
    Ok(TensorWitness { left: m.clone(), right: n.clone(), product, formula_product, iso })
}

/// Summands peeled off against a list of known indecomposables.
#[derive(Clone, Debug)]
pub struct Decomposition {
    pub summands: Vec<Label>,
    /// Whatever could not be split off, with its composition factors when
    /// the catalog accounts for them.
    pub remainder: Vec<(ModuleRep, Option<Vec<(Label, usize)>>)>,
}

impl Decomposition {
    pub fn is_complete(&self) -> bool {
        self.remainder.is_empty()
    }
}

/// Splits by degree, then peels summands isomorphic to `known` modules
/// (largest first). `simples` is used to describe any remainder.
pub fn decompose(m: &ModuleRep, known: &[ModuleRep], simples: &[ModuleRep], seed: u64) -> Result<Decomposition> {
    let mut order: Vec<&ModuleRep> = known.iter().collect();
    order.sort_by_key(|c| std::cmp::Reverse(c.dim()));
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut summands = Vec::new();
    let mut remainder = Vec::new();
    for (_, part) in j_component(m)? {
        let mut cur = part;
        'peel: while cur.dim() > 0 {
            for c in &order {
                if c.dim() > cur.dim() {
                    continue;
                }
                if let Some(g) = split_off(c, &cur, &mut rng) {
                    summands.push(c.label.clone().unwrap_or_else(|| Label::Other(c.name())));
                    let k = kernel_basis(&g);
                    cur = cur.submodule(&k)?;
                    continue 'peel;
                }
            }
            break;
        }
        if cur.dim() > 0 {
            let cf = composition_factors(&cur, simples).ok();
            remainder.push((cur, cf));
        }
    }
    Ok(Decomposition { summands, remainder })
}

/// A map `g: X -> C` with `g f` invertible for some `f: C -> X`.
fn split_off(c: &ModuleRep, x: &ModuleRep, rng: &mut ChaCha8Rng) -> Option<Mat> {
    let fs = hom_space(c, x);
    if fs.is_empty() {
        return None;
    }
    let gs = hom_space(x, c);
    if gs.is_empty() {
        return None;
    }
    let n = c.dim();
    let ok = |g: &Mat, f: &Mat| rank(&g.mul(f)) == n;
    for f in &fs {
        for g in &gs {
            if ok(g, f) {
                return Some(g.clone());
            }
        }
    }
    let p = &c.params;
    let combo = |hs: &[Mat], rng: &mut ChaCha8Rng| {
        let mut acc = hs[0].scale(&p.scalar(rng.gen_range(-20..=20)));
        for h in &hs[1..] {
            acc.add_assign(&h.scale(&p.scalar(rng.gen_range(-20..=20))));
        }
        acc
    };
    for _ in 0..12 {
        let f = combo(&fs, rng);
        let g = combo(&gs, rng);
        if ok(&g, &f) {
            return Some(g);
        }
    }
    None
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::repmod::{enumerate_simples, is_isomorphic, l0};

    fn random_blocks(p: &ParamSet, dims: (usize, usize, usize), rng: &mut ChaCha8Rng) -> MixedBlocks {
        let (pp, q, r) = dims;
        let mut m = |h: usize, w: usize| Mat::from_fn(p.ctx, h, w, |_, _| p.scalar(rng.gen_range(-5..=5)));
        MixedBlocks {
            alpha: m(q, pp),
            beta: m(pp, q),
            delta_plus: m(pp, r),
            delta_minus: m(q, r),
            eta: m(r, pp),
            sigma: m(r, q),
            theta: m(r, r),
            tau: m(r, r),
        }
    }

    /// The block formulas are linear in each factor, so they can be checked
    /// on arbitrary block data without the module relations.
    #[test]
    fn formulas_match_adapted_basis_on_random_blocks() {
        let mut rng = ChaCha8Rng::seed_from_u64(11);
        let cases = [(0, 0, (1, 1, 1), (1, 1, 1)), (1, 2, (2, 1, 2), (1, 2, 1)), (2, 2, (0, 2, 3), (2, 0, 2)), (1, 1, (1, 0, 0), (3, 1, 2))];
        for (ell, (j, k, dm, dn)) in [3, 4].into_iter().flat_map(|l| cases.into_iter().map(move |c| (l, c))) {
            let p = ParamSet::int(ell, 1, 1);
            let ctx = p.ctx;
            let mk = |j: usize, d: (usize, usize, usize), rng: &mut ChaCha8Rng| {
                let n = d.0 + d.1 + 2 * d.2;
                MixedForm { j, b: p.b(j).clone(), p: d.0, q: d.1, r: d.2, blocks: random_blocks(&p, d, rng), basis: Mat::identity(ctx, n) }
            };
            let mf = mk(j, dm, &mut rng);
            let nf = mk(k, dn, &mut rng);
            let (mm, nn) = (raw_mixed(&p, &mf), raw_mixed(&p, &nf));
            let prod = raw_tensor(&mm, &nn);
            let basis = product_basis(ctx, &mf, &nf);
            let conj = prod.conjugate_by(&basis, &basis.inverse().unwrap());
            let (pp, q, r) = product_shape(&mf, &nf);
            let want = formula_blocks(ctx, &mf, &nf);
            let n = pp + q + 2 * r;
            let got = raw_mixed(&p, &MixedForm { j: (j + k) % ell, b: &mf.b * &nf.b, p: pp, q, r, blocks: want, basis: Mat::identity(ctx, n) });
            assert!(got.a0 == conj, "l = {ell}, degrees ({j}, {k}), shapes {dm:?} {dn:?}");
        }
    }

    struct Raw {
        t: Mat,
        a0: Mat,
    }

    fn raw_mixed(p: &ParamSet, f: &MixedForm) -> Raw {
        let m = crate::repmod::mixed_unchecked(p, &f.b, &f.blocks);
        Raw { t: m.t, a0: m.a0 }
    }

    fn raw_tensor(m: &Raw, n: &Raw) -> Mat {
        let ctx = m.a0.ctx();
        m.a0.kron(&Mat::identity(ctx, n.a0.rows())).add(&m.t.kron(&n.a0))
    }

    #[test]
    fn unit_and_duals() {
        let p = ParamSet::int(2, 1, 1);
        let cat = enumerate_simples(&p);
        let one = l0(&p, Sign::Plus);
        for m in &cat.simples {
            assert!(is_isomorphic(&tensor(&one, m).unwrap(), m).is_some());
            let dd = dual(&dual(m).unwrap()).unwrap();
            assert!(is_isomorphic(&dd, &twist(m)).is_some());
            let d4 = dual(&dual(&dd).unwrap()).unwrap();
            assert_eq!((&d4.s, &d4.t, &d4.a0), (&m.s, &m.t, &m.a0));
            let d = dual(m).unwrap();
            let deg = m.label.as_ref().unwrap().degree().unwrap();
            let parts = j_component(&d).unwrap();
            assert_eq!(parts.len(), 1);
            assert_eq!(parts[0].0, (2 - deg) % 2);
        }
        assert!(is_isomorphic(&dual(&one).unwrap(), &one).is_some());
    }

    #[test]
    fn peel_sums() {
        let p = ParamSet::int(2, 1, 1);
        let cat = enumerate_simples(&p);
        let tj = cat.simples.iter().find(|m| matches!(m.label, Some(Label::T(1)))).unwrap();
        let s = ModuleRep::direct_sum(&[tj, tj]).unwrap();
        let d = decompose(&s, &cat.simples, &cat.simples, 1).unwrap();
        assert!(d.is_complete());
        assert_eq!(d.summands, vec![Label::T(1), Label::T(1)]);
    }
}
