//! Constructors for the named modules.

use crate::error::{Error, Result};
use crate::grp::{irrep, IrrepLabel, Sign};
use crate::linalg::Mat;
use crate::scalars::{Cyc, ParamSet};

use super::derived::{derived_scalars, solve_upsilon, Upsilon};
use super::{signed_hbar, Label, ModuleRep};

fn m_action(p: &ParamSet, j: usize) -> (Mat, Mat) {
    let g = irrep(p, IrrepLabel::M(j));
    (g.s, g.t)
}

fn check_degree(p: &ParamSet, j: usize) -> Result<()> {
    if j >= p.ell {
        return Err(Error::ParamViolation(format!("degree j = {j} must be below l = {}", p.ell)));
    }
    Ok(())
}

/// `L0±`: `s = 1`, `t = ±1`, `a0 = 0`.
pub fn l0(p: &ParamSet, e: Sign) -> ModuleRep {
    let ctx = p.ctx;
    ModuleRep::new(p, Mat::identity(ctx, 1), Mat::scalar(ctx, 1, &p.scalar(e.value())), Mat::zeros(ctx, 1, 1), Some(Label::L0(e)))
        .expect("L0 always satisfies the relations")
}

/// `L_j(a, c)` on `M_j` with `a0 = [[a, -zeta^j c], [c, -a]]`, `a, c = ±hbar`.
/// With `lambda = 0` this is `L_0(0, 0)` and the signs are ignored.
pub fn l_ac(p: &ParamSet, j: usize, a: Sign, c: Sign) -> Result<ModuleRep> {
    check_degree(p, j)?;
    let (s, t) = m_action(p, j);
    let (av, cv) = (signed_hbar(p, a), signed_hbar(p, c));
    let a0 = Mat::from_rows(p.ctx, vec![vec![av.clone(), -&(&p.zeta_pow(j as i64) * &cv)], vec![cv, -&av]])?;
    let label = if p.lambda.is_zero() { Label::L00 } else { Label::Lac { j, a, c } };
    ModuleRep::new(p, s, t, a0, Some(label))
}

/// `T_j` on `x in S_j^+`, `y in S_j^-` with `a0 x = y`, `a0 y = mu(1 - zeta^j) x`.
pub fn t_j(p: &ParamSet, j: usize) -> Result<ModuleRep> {
    check_degree(p, j)?;
    let ctx = p.ctx;
    let b = p.b(j).clone();
    let t = Mat::diag(ctx, &[b.clone(), -&b]);
    let mut a0 = Mat::zeros(ctx, 2, 2);
    a0.set(0, 1, &p.mu * &(&p.one() - &p.zeta_pow(j as i64)));
    a0.set(1, 0, p.one());
    ModuleRep::new(p, Mat::identity(ctx, 2), t, a0, Some(Label::T(j)))
}

/// `T0±` on `x in S_0^+`, `y in S_0^-`; `T0+` has `a0 x = y`, `T0-` has `a0 y = x`.
pub fn t0(p: &ParamSet, e: Sign) -> ModuleRep {
    let ctx = p.ctx;
    let t = Mat::diag(ctx, &[p.one(), -p.one()]);
    let mut a0 = Mat::zeros(ctx, 2, 2);
    match e {
        Sign::Plus => a0.set(1, 0, p.one()),
        Sign::Minus => a0.set(0, 1, p.one()),
    }
    ModuleRep::new(p, Mat::identity(ctx, 2), t, a0, Some(Label::T0(e))).expect("T0 always satisfies the relations")
}

/// The irrep `S` with `a0 = 0`; a module only in the graded case or for `S_0^±`.
pub fn graded_simple(p: &ParamSet, s: IrrepLabel) -> Result<ModuleRep> {
    check_degree(p, s.degree())?;
    let g = irrep(p, s);
    let n = g.dim();
    ModuleRep::new(p, g.s, g.t, Mat::zeros(p.ctx, n, n), Some(Label::Graded(s)))
}

/// The six-dimensional printed action, basis `(x, y, v1, v2, w1, w2)`.
fn n_matrix(p: &ParamSet, u: &Upsilon) -> Result<Mat> {
    let d = derived_scalars(p, u.j);
    let b = &d.b;
    let binv = b.inv()?;
    let (c1, c2, t1, t2, f) = (&u.c1, &u.c2, &u.t1, &u.t2, &d.f);
    let z = p.zero();
    let one = p.one();
    let bf = b * f;
    let rows = vec![
        vec![z.clone(), c2.clone(), f.clone(), z.clone(), -&bf, z.clone()],
        vec![c1.clone(), z.clone(), z.clone(), -f, z.clone(), -&bf],
        vec![-b, z.clone(), z.clone(), t1.clone(), z.clone(), b * &(c2 - t1)],
        vec![z.clone(), b.clone(), t2.clone(), z.clone(), b * &(t2 - c1), z.clone()],
        vec![one.clone(), z.clone(), z.clone(), &(t1 - c2) * &binv, z.clone(), -t1],
        vec![z.clone(), one, &(c1 - t2) * &binv, z.clone(), -t2, z],
    ];
    Mat::from_rows(p.ctx, rows)
}

fn n_group(p: &ParamSet, j: usize) -> (Mat, Mat) {
    let ctx = p.ctx;
    let b = p.b(j).clone();
    let b2 = p.zeta_pow(j as i64);
    let mut t = Mat::zeros(ctx, 6, 6);
    t.set(0, 0, b.clone());
    t.set(1, 1, -&b);
    // t v_i = w_i, t w_i = b^2 v_i
    t.set(4, 2, p.one());
    t.set(5, 3, p.one());
    t.set(2, 4, b2.clone());
    t.set(3, 5, b2);
    let s = Mat::diag(ctx, &[p.one(), p.one(), p.xi.clone(), p.xi.clone(), p.xi_pow(2), p.xi_pow(2)]);
    (s, t)
}

/// `N_j(upsilon)` on `(x, y, v1, v2, w1, w2)`. The printed matrix is used
/// as the column action.
pub fn n_upsilon(p: &ParamSet, u: &Upsilon) -> Result<ModuleRep> {
    check_degree(p, u.j)?;
    if p.mu_is_lambda_thirds() {
        return Err(Error::ParamViolation("N_j needs 3 mu != lambda".into()));
    }
    if !u.satisfies(&derived_scalars(p, u.j)) {
        return Err(Error::ParamViolation(format!("({}, {}, {}, {}) is not in the parameter set at j = {}", u.c1, u.c2, u.t1, u.t2, u.j)));
    }
    let (s, t) = n_group(p, u.j);
    ModuleRep::new(p, s, t, n_matrix(p, u)?, None)
}

/// `N_j^(1)` and, unless the two coincide, `N_j^(2)`.
pub fn n_representatives(p: &ParamSet, j: usize) -> Result<Vec<ModuleRep>> {
    solve_upsilon(p, j)?
        .iter()
        .enumerate()
        .map(|(k, u)| Ok(n_upsilon(p, u)?.with_label(Label::N { j, which: k as u8 + 1 })))
        .collect()
}

/// The two sign readings of the printed extension action for `a = c`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum PVariant {
    /// Entry `(1, 2)` equal to `-a(b - 1)`.
    Statement,
    /// Entry `(1, 2)` equal to `a(b - 1)`.
    Proof,
}

/// The printed six-dimensional action on `(x, y, v, w, v', w')` with the
/// group acting as `S_j^+ + S_j^- + M_j + M_j`. Returns the module only if
/// it satisfies the relations.
pub fn p_ac_display(p: &ParamSet, j: usize, a: Sign, c: Sign, variant: PVariant) -> Result<ModuleRep> {
    check_degree(p, j)?;
    let ctx = p.ctx;
    let av = signed_hbar(p, a);
    let b = p.b(j).clone();
    let b2 = p.zeta_pow(j as i64);
    let one = p.one();
    let z = p.zero();
    let n = |x: &Cyc| -x;
    let ab = &av * &b;
    let ab2 = &av * &b2;
    let rows: Vec<Vec<Cyc>> = if a == c {
        let e12 = match variant {
            PVariant::Statement => n(&(&av * &(&b - &one))),
            PVariant::Proof => &av * &(&b - &one),
        };
        vec![
            vec![z.clone(), e12, n(&ab), ab2.clone(), b.clone(), n(&b2)],
            vec![n(&(&av * &(&one + &b))), z.clone(), ab.clone(), ab2.clone(), z.clone(), z.clone()],
            vec![z.clone(), z.clone(), n(&av), ab2.clone(), one.clone(), n(&b2)],
            vec![z.clone(), z.clone(), n(&av), av.clone(), one.clone(), n(&one)],
            vec![z.clone(), z.clone(), z.clone(), z.clone(), av.clone(), n(&ab2)],
            vec![z.clone(), z.clone(), z.clone(), z.clone(), av.clone(), n(&av)],
        ]
    } else {
        let two = p.scalar(2);
        vec![
            vec![z.clone(), n(&(&av * &(&one + &b))), z.clone(), z.clone(), one.clone(), n(&b)],
            vec![n(&(&av * &(&one - &b))), z.clone(), z.clone(), z.clone(), one.clone(), b.clone()],
            vec![n(&(&two * &ab)), &two * &ab, n(&av), n(&ab2), z.clone(), &two * &b2],
            vec![&two * &av, &two * &av, av.clone(), av.clone(), n(&two), z.clone()],
            vec![z.clone(), z.clone(), z.clone(), z.clone(), av.clone(), ab2.clone()],
            vec![z.clone(), z.clone(), z.clone(), z.clone(), n(&av), n(&av)],
        ]
    };
    let a0 = Mat::from_rows(ctx, rows)?;
    let (ms, mt) = m_action(p, j);
    let s = Mat::block_diag(ctx, &[&Mat::identity(ctx, 2), &ms, &ms]);
    let tx = Mat::diag(ctx, &[b.clone(), -&b]);
    let t = Mat::block_diag(ctx, &[&tx, &mt, &mt]);
    ModuleRep::new(p, s, t, a0, Some(Label::P { j, a, c }))
}

/// Block data of a mixed-form module: `x` in `(S_j^+)^p`, `y` in `(S_j^-)^q`,
/// `v, w` in `M_j^r` with `w = t v`. Block shapes as in the general relations:
/// `alpha: q x p`, `beta: p x q`, `delta_+: p x r`, `delta_-: q x r`,
/// `eta: r x p`, `sigma: r x q`, `theta, tau: r x r`.
#[derive(Clone, Debug, PartialEq)]
pub struct MixedBlocks {
    pub alpha: Mat,
    pub beta: Mat,
    pub delta_plus: Mat,
    pub delta_minus: Mat,
    pub eta: Mat,
    pub sigma: Mat,
    pub theta: Mat,
    pub tau: Mat,
}

/// The mixed-form module on `(x, y, v, w)` with `t x = b x`, `t y = -b y`,
/// `t v = w`, `t w = b^2 v`. `b` is any square root of `zeta^j`; `a0` is
/// the transpose of the block matrix with rows
/// `x: (0, beta, -b delta_+, delta_+)`, `y: (alpha, 0, b delta_-, delta_-)`,
/// `v: (eta, sigma, theta, tau)`, `w: (-b eta, b sigma, -b^2 tau, -theta)`.
pub fn mixed(p: &ParamSet, b: &Cyc, blocks: &MixedBlocks, label: Option<Label>) -> Result<ModuleRep> {
    let m = mixed_unchecked(p, b, blocks);
    m.verify()?;
    Ok(ModuleRep { label, ..m })
}

/// `mixed` without checking the relations.
pub fn mixed_unchecked(p: &ParamSet, b: &Cyc, blocks: &MixedBlocks) -> ModuleRep {
    let ctx = p.ctx;
    let (pp, q, r) = (blocks.beta.rows(), blocks.alpha.rows(), blocks.theta.rows());
    let n = pp + q + 2 * r;
    let b2 = b * b;
    let mut rt = Mat::zeros(ctx, n, n);
    let (ox, oy, ov, ow) = (0, pp, pp + q, pp + q + r);
    let bl = &blocks;
    rt.set_block(ox, oy, &bl.beta);
    rt.set_block(ox, ov, &bl.delta_plus.scale(&-b));
    rt.set_block(ox, ow, &bl.delta_plus);
    rt.set_block(oy, ox, &bl.alpha);
    rt.set_block(oy, ov, &bl.delta_minus.scale(b));
    rt.set_block(oy, ow, &bl.delta_minus);
    rt.set_block(ov, ox, &bl.eta);
    rt.set_block(ov, oy, &bl.sigma);
    rt.set_block(ov, ov, &bl.theta);
    rt.set_block(ov, ow, &bl.tau);
    rt.set_block(ow, ox, &bl.eta.scale(&-b));
    rt.set_block(ow, oy, &bl.sigma.scale(b));
    rt.set_block(ow, ov, &bl.tau.scale(&-&b2));
    rt.set_block(ow, ow, &bl.theta.neg());
    let a0 = rt.transpose();
    let mut t = Mat::zeros(ctx, n, n);
    let mut sd = Vec::with_capacity(n);
    for i in 0..pp {
        t.set(ox + i, ox + i, b.clone());
        sd.push(p.one());
    }
    for i in 0..q {
        t.set(oy + i, oy + i, -b);
        sd.push(p.one());
    }
    for i in 0..r {
        t.set(ow + i, ov + i, p.one());
        t.set(ov + i, ow + i, b2.clone());
    }
    sd.extend(std::iter::repeat(p.xi.clone()).take(r));
    sd.extend(std::iter::repeat(p.xi_pow(2)).take(r));
    ModuleRep::unchecked(p, Mat::diag(ctx, &sd), t, a0, None).expect("block shapes are consistent")
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::repmod::derived::Upsilon;

    #[test]
    fn l_ac_needs_j0_or_lambda_thirds() {
        let thirds = ParamSet::int(2, 1, 1);
        let generic = ParamSet::int(2, 1, 2);
        for a in Sign::both() {
            for c in Sign::both() {
                l_ac(&thirds, 0, a, c).unwrap();
                l_ac(&thirds, 1, a, c).unwrap();
                l_ac(&generic, 0, a, c).unwrap();
                let bad = l_ac(&generic, 1, a, c).unwrap_err().to_string();
                assert!(bad.contains("a0^2"), "{bad}");
            }
        }
    }

    #[test]
    fn zero_action_off_degree_zero_fails() {
        let p = ParamSet::int(2, 1, 2);
        let err = graded_simple(&p, IrrepLabel::S(1, Sign::Plus)).unwrap_err().to_string();
        assert!(err.contains("a0^2"));
        graded_simple(&p, IrrepLabel::S(0, Sign::Minus)).unwrap();
        let g = ParamSet::int(3, 0, 0);
        for s in IrrepLabel::all(3) {
            graded_simple(&g, s).unwrap();
        }
    }

    #[test]
    fn t_modules() {
        let p = ParamSet::int(3, 1, 1);
        let t1 = t_j(&p, 1).unwrap();
        assert_eq!(t1.a0.get(0, 1), &(&p.mu * &(&p.one() - &p.zeta)));
        assert!(t_j(&ParamSet::int(3, 1, 2), 1).is_err());
        t0(&p, Sign::Plus);
        t0(&p, Sign::Minus);
    }

    #[test]
    fn degenerate_six_dim() {
        // l = 2, b_1^2 = -1, mu = -2 lambda / 3: parameters (0, 0, 1, -lambda/3)
        let p = ParamSet::int(2, 1, -2);
        let u = Upsilon { j: 1, c1: p.zero(), c2: p.zero(), t1: p.one(), t2: p.scalar(-1) };
        let n = n_upsilon(&p, &u).unwrap();
        assert_eq!(n.dim(), 6);
        assert!(crate::repmod::is_simple(&n));
    }

    #[test]
    fn n_generic() {
        let p = ParamSet::int(2, 1, 6);
        let ns = n_representatives(&p, 1).unwrap();
        assert_eq!(ns.len(), 2);
        for n in &ns {
            assert!(crate::repmod::is_simple(n));
        }
        assert!(crate::repmod::is_isomorphic(&ns[0], &ns[1]).is_none());
    }

    #[test]
    fn mixed_unit_blocks_never_simple() {
        // p = q = r = 1 with mu = lambda/3 and j = 0: alpha beta = g, theta^2 = f_+, ...
        // any solution splits; check a concrete one built from L0(a,c) + T0-like data
        let p = ParamSet::int(2, 1, 1);
        let d = derived_scalars(&p, 0);
        assert!(d.g.is_zero() && d.f.is_zero());
        let ctx = p.ctx;
        let one = |x: Cyc| Mat::scalar(ctx, 1, &x);
        let blocks = MixedBlocks {
            alpha: one(p.zero()),
            beta: one(p.zero()),
            delta_plus: one(p.zero()),
            delta_minus: one(p.zero()),
            eta: one(p.zero()),
            sigma: one(p.zero()),
            theta: one(p.hbar.clone()),
            tau: one(p.hbar.clone()),
        };
        let m = mixed(&p, p.b(0), &blocks, None).unwrap();
        assert_eq!(m.dim(), 4);
        assert!(!crate::repmod::is_simple(&m));
    }
}
