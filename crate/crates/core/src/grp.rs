//! The group `G = C3 x| C_{2l} = <s, t | s^3 = t^{2l} = 1, ts = s^2 t>`,
//! its irreducible representations and their tensor/dual rules.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::linalg::{kernel_basis, Echelon, Mat};
use crate::scalars::{Cyc, ParamSet};

/// `s^a t^b` with `0 <= a < 3`, `0 <= b < 2l`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct GroupElement {
    pub a: u8,
    pub b: u16,
}

impl fmt::Display for GroupElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match (self.a, self.b) {
            (0, 0) => write!(f, "1"),
            (a, 0) => write!(f, "s^{a}"),
            (0, b) => write!(f, "t^{b}"),
            (a, b) => write!(f, "s^{a}t^{b}"),
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Group {
    pub ell: usize,
}

impl Group {
    pub fn new(ell: usize) -> Group {
        Group { ell }
    }

    pub fn order(&self) -> usize {
        6 * self.ell
    }

    fn tb(&self) -> i64 {
        2 * self.ell as i64
    }

    pub fn elem(&self, a: i64, b: i64) -> GroupElement {
        GroupElement { a: a.rem_euclid(3) as u8, b: b.rem_euclid(self.tb()) as u16 }
    }

    pub fn one(&self) -> GroupElement {
        self.elem(0, 0)
    }

    pub fn s(&self) -> GroupElement {
        self.elem(1, 0)
    }

    pub fn t(&self) -> GroupElement {
        self.elem(0, 1)
    }

    /// `s^a t^b * s^c t^d = s^{a + 2^b c} t^{b + d}`.
    pub fn mul(&self, x: GroupElement, y: GroupElement) -> GroupElement {
        let c = if x.b % 2 == 0 { y.a as i64 } else { 2 * y.a as i64 };
        self.elem(x.a as i64 + c, x.b as i64 + y.b as i64)
    }

    pub fn inv(&self, x: GroupElement) -> GroupElement {
        // (s^a t^b)^{-1} = t^{-b} s^{-a} = s^{-a 2^b} t^{-b}
        let a = if x.b % 2 == 0 { -(x.a as i64) } else { -2 * x.a as i64 };
        self.elem(a, -(x.b as i64))
    }

    pub fn elements(&self) -> Vec<GroupElement> {
        let mut v = Vec::with_capacity(self.order());
        for a in 0..3 {
            for b in 0..self.tb() {
                v.push(self.elem(a, b));
            }
        }
        v
    }

    pub fn index(&self, x: GroupElement) -> usize {
        x.a as usize * 2 * self.ell + x.b as usize
    }

    /// `g a_i g^{-1} = sign * a_{i'}`; returns `(sign, i')`.
    pub fn act_letter(&self, g: GroupElement, i: u8) -> (i8, u8) {
        if g.b % 2 == 0 {
            (1, ((g.a + i) % 3) as u8)
        } else {
            (-1, ((g.a as i64 - i as i64).rem_euclid(3)) as u8)
        }
    }

    /// Conjugation action on a word of letters; returns the sign and new word.
    pub fn act_word(&self, g: GroupElement, w: &[u8]) -> (i8, Vec<u8>) {
        let mut sign = 1i8;
        let out = w
            .iter()
            .map(|&i| {
                let (e, j) = self.act_letter(g, i);
                sign *= e;
                j
            })
            .collect();
        (sign, out)
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum Sign {
    Plus,
    Minus,
}

impl Sign {
    pub fn value(self) -> i64 {
        match self {
            Sign::Plus => 1,
            Sign::Minus => -1,
        }
    }

    pub fn neg(self) -> Sign {
        match self {
            Sign::Plus => Sign::Minus,
            Sign::Minus => Sign::Plus,
        }
    }

    pub fn mul(self, o: Sign) -> Sign {
        if self == o {
            Sign::Plus
        } else {
            Sign::Minus
        }
    }

    pub fn both() -> [Sign; 2] {
        [Sign::Plus, Sign::Minus]
    }
}

impl fmt::Display for Sign {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Sign::Plus => "+",
            Sign::Minus => "-",
        })
    }
}

/// `S(j, ±)`: `s -> 1`, `t -> ±b_j`; `M(j)`: two-dimensional.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum IrrepLabel {
    S(usize, Sign),
    M(usize),
}

impl IrrepLabel {
    pub fn degree(&self) -> usize {
        match *self {
            IrrepLabel::S(j, _) | IrrepLabel::M(j) => j,
        }
    }

    pub fn dim(&self) -> usize {
        match self {
            IrrepLabel::S(..) => 1,
            IrrepLabel::M(_) => 2,
        }
    }

    pub fn all(ell: usize) -> Vec<IrrepLabel> {
        let mut v = Vec::new();
        for j in 0..ell {
            v.push(IrrepLabel::S(j, Sign::Plus));
            v.push(IrrepLabel::S(j, Sign::Minus));
            v.push(IrrepLabel::M(j));
        }
        v
    }

    /// `t` acts on `S(j, e)` by `eta^k`; returns `k mod 2l`.
    fn eta_exponent(&self, ell: usize) -> usize {
        match *self {
            IrrepLabel::S(j, Sign::Plus) => j,
            IrrepLabel::S(j, Sign::Minus) => j + ell,
            IrrepLabel::M(_) => unreachable!(),
        }
    }

    fn from_eta_exponent(k: usize, ell: usize) -> IrrepLabel {
        let k = k % (2 * ell);
        if k < ell {
            IrrepLabel::S(k, Sign::Plus)
        } else {
            IrrepLabel::S(k - ell, Sign::Minus)
        }
    }
}

impl fmt::Display for IrrepLabel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            IrrepLabel::S(j, e) => write!(f, "S{j}{e}"),
            IrrepLabel::M(j) => write!(f, "M{j}"),
        }
    }
}

/// A representation of `G` given by the images of `s` and `t`.
#[derive(Clone, Debug, PartialEq)]
pub struct GRep {
    pub s: Mat,
    pub t: Mat,
}

impl GRep {
    pub fn dim(&self) -> usize {
        self.s.rows()
    }

    pub fn ell_ok(&self, ell: usize) -> Result<()> {
        let n = self.dim();
        let ctx = self.s.ctx();
        let id = Mat::identity(ctx, n);
        let mut bad = Vec::new();
        if self.s.pow(3) != id {
            bad.push("s^3 = 1");
        }
        if self.t.pow(2 * ell) != id {
            bad.push("t^(2l) = 1");
        }
        if self.t.mul(&self.s) != self.s.mul(&self.s).mul(&self.t) {
            bad.push("ts = s^2 t");
        }
        if bad.is_empty() {
            Ok(())
        } else {
            Err(Error::Verification(bad.join(", ")))
        }
    }

    /// Matrix of `s^a t^b`.
    pub fn act(&self, g: GroupElement) -> Mat {
        self.s.pow(g.a as usize).mul(&self.t.pow(g.b as usize))
    }

    pub fn direct_sum(&self, other: &GRep) -> GRep {
        let ctx = self.s.ctx();
        GRep { s: Mat::block_diag(ctx, &[&self.s, &other.s]), t: Mat::block_diag(ctx, &[&self.t, &other.t]) }
    }

    pub fn tensor(&self, other: &GRep) -> GRep {
        GRep { s: self.s.kron(&other.s), t: self.t.kron(&other.t) }
    }

    pub fn dual(&self) -> GRep {
        GRep {
            s: self.s.inverse().expect("group action is invertible").transpose(),
            t: self.t.inverse().expect("group action is invertible").transpose(),
        }
    }

    /// Restriction to an invariant subspace with basis columns `basis`.
    pub fn restrict(&self, basis: &Mat) -> Result<GRep> {
        let sol = |g: &Mat| crate::linalg::solve_linear(basis, &g.mul(basis));
        Ok(GRep { s: sol(&self.s)?, t: sol(&self.t)? })
    }
}

pub fn irrep(p: &ParamSet, label: IrrepLabel) -> GRep {
    let ctx = p.ctx;
    match label {
        IrrepLabel::S(j, e) => GRep { s: Mat::identity(ctx, 1), t: Mat::scalar(ctx, 1, &(p.b(j) * &p.scalar(e.value()))) },
        IrrepLabel::M(j) => {
            let s = Mat::diag(ctx, &[p.xi.clone(), p.xi_pow(2)]);
            let mut t = Mat::zeros(ctx, 2, 2);
            t.set(0, 1, p.zeta_pow(j as i64));
            t.set(1, 0, p.one());
            GRep { s, t }
        }
    }
}

pub fn irreps(p: &ParamSet) -> Vec<(IrrepLabel, GRep)> {
    IrrepLabel::all(p.ell).into_iter().map(|l| (l, irrep(p, l))).collect()
}

/// The left regular representation on the basis `G` (ordered by `Group::index`).
pub fn regular_rep(p: &ParamSet) -> GRep {
    let g = Group::new(p.ell);
    let n = g.order();
    let perm = |x: GroupElement| {
        let mut m = Mat::zeros(p.ctx, n, n);
        for h in g.elements() {
            m.set(g.index(g.mul(x, h)), g.index(h), p.one());
        }
        m
    };
    GRep { s: perm(g.s()), t: perm(g.t()) }
}

/// One isotypic component: the irrep, its multiplicity, and embedding
/// columns. For `M(j)` the columns come in pairs `(v, t v)` with `s v = xi v`,
/// so each pair spans a copy of `M(j)` in its standard basis.
#[derive(Clone, Debug)]
pub struct Isotypic {
    pub label: IrrepLabel,
    pub multiplicity: usize,
    pub basis: Mat,
}

fn character_inv(p: &ParamSet, label: IrrepLabel, g: &Group, x: GroupElement) -> Cyc {
    irrep(p, label).act(g.inv(x)).trace()
}

/// Isotypic decomposition by group-averaged projectors.
pub fn isotypic_decompose(p: &ParamSet, rep: &GRep) -> Result<Vec<Isotypic>> {
    rep.ell_ok(p.ell)?;
    let g = Group::new(p.ell);
    let n = rep.dim();
    let ctx = p.ctx;
    // powers of s and t, reused across labels
    let spow: Vec<Mat> = (0..3).map(|a| rep.s.pow(a)).collect();
    let tpow: Vec<Mat> = (0..2 * p.ell).map(|b| rep.t.pow(b)).collect();
    let mut out = Vec::new();
    let mut total = 0;
    for label in IrrepLabel::all(p.ell) {
        let mut proj = Mat::zeros(ctx, n, n);
        for x in g.elements() {
            let c = character_inv(p, label, &g, x);
            if !c.is_zero() {
                proj.add_assign(&spow[x.a as usize].mul(&tpow[x.b as usize]).scale(&c));
            }
        }
        let image = crate::linalg::column_basis(&proj);
        if image.cols() == 0 {
            continue;
        }
        let basis = match label {
            IrrepLabel::S(..) => image,
            IrrepLabel::M(_) => {
                // xi-eigenvectors of s inside the component, paired with t v
                let xi = p.xi.clone();
                let sm = rep.s.mul(&image);
                let shifted = sm.sub(&image.scale(&xi));
                let k = kernel_basis(&shifted);
                let vs = image.mul(&k);
                let tv = rep.t.mul(&vs);
                let mut cols = Vec::new();
                for c in 0..vs.cols() {
                    cols.push(vs.col(c));
                    cols.push(tv.col(c));
                }
                Mat::from_cols(ctx, n, &cols)
            }
        };
        let mult = basis.cols() / label.dim();
        total += basis.cols();
        out.push(Isotypic { label, multiplicity: mult, basis });
    }
    if total != n {
        return Err(Error::Verification(format!("isotypic components cover {total} of {n} dimensions")));
    }
    Ok(out)
}

/// Multiplicities only, sorted by label.
pub fn multiplicities(p: &ParamSet, rep: &GRep) -> Result<Vec<(IrrepLabel, usize)>> {
    Ok(isotypic_decompose(p, rep)?.into_iter().map(|c| (c.label, c.multiplicity)).collect())
}

/// Splits into `zeta^j`-eigenspaces of `t^2`.
pub fn j_split(p: &ParamSet, rep: &GRep) -> Vec<(usize, Mat)> {
    let t2 = rep.t.mul(&rep.t);
    let n = rep.dim();
    (0..p.ell)
        .filter_map(|j| {
            let m = t2.sub(&Mat::scalar(p.ctx, n, &p.zeta_pow(j as i64)));
            let k = kernel_basis(&m);
            (k.cols() > 0).then_some((j, k))
        })
        .collect()
}

/// Tensor product of irreps as a multiset of labels. With `b_j = eta^j`,
/// a product of one-dimensional irreps whose degrees wrap past `l` picks up
/// a sign, since `b_j b_k = -b_{j+k-l}`.
pub fn irrep_tensor(ell: usize, x: IrrepLabel, y: IrrepLabel) -> Vec<IrrepLabel> {
    let jk = (x.degree() + y.degree()) % ell;
    match (x, y) {
        (IrrepLabel::S(..), IrrepLabel::S(..)) => {
            vec![IrrepLabel::from_eta_exponent(x.eta_exponent(ell) + y.eta_exponent(ell), ell)]
        }
        (IrrepLabel::S(..), IrrepLabel::M(_)) | (IrrepLabel::M(_), IrrepLabel::S(..)) => vec![IrrepLabel::M(jk)],
        (IrrepLabel::M(_), IrrepLabel::M(_)) => {
            vec![IrrepLabel::S(jk, Sign::Plus), IrrepLabel::S(jk, Sign::Minus), IrrepLabel::M(jk)]
        }
    }
}

/// Dual irrep; `S(j, e)* = S(l - j, -e)` for `j > 0` with `b_j = eta^j`.
pub fn irrep_dual(ell: usize, x: IrrepLabel) -> IrrepLabel {
    match x {
        IrrepLabel::S(..) => IrrepLabel::from_eta_exponent(2 * ell - x.eta_exponent(ell), ell),
        IrrepLabel::M(j) => IrrepLabel::M((ell - j) % ell),
    }
}

/// Basis reassembled from a `j_split`; used to check that the blocks span.
pub fn reassemble(parts: &[(usize, Mat)], n: usize, p: &ParamSet) -> usize {
    let mut e = Echelon::new(p.ctx, n);
    for (_, b) in parts {
        for c in 0..b.cols() {
            e.insert(b.col(c));
        }
    }
    e.len()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn group_law() {
        for ell in 1..=4 {
            let g = Group::new(ell);
            assert_eq!(g.mul(g.t(), g.s()), g.mul(g.mul(g.s(), g.s()), g.t()));
            assert_eq!(g.mul(g.s(), g.elem(2, 0)), g.one());
            assert_eq!(g.mul(g.elem(0, 2 * ell as i64 - 1), g.t()), g.one());
            for x in g.elements() {
                assert_eq!(g.mul(x, g.inv(x)), g.one());
                for y in g.elements() {
                    for z in [g.s(), g.t(), g.elem(2, 3)] {
                        assert_eq!(g.mul(g.mul(x, y), z), g.mul(x, g.mul(y, z)));
                    }
                }
            }
        }
    }

    #[test]
    fn irreps_and_sizes() {
        for (ell, count) in [(1, 3), (2, 6), (3, 9)] {
            let p = ParamSet::int(ell, 1, 1);
            let all = irreps(&p);
            assert_eq!(all.len(), count);
            assert_eq!(all.iter().map(|(l, _)| l.dim() * l.dim()).sum::<usize>(), 6 * ell);
            for (_, r) in &all {
                r.ell_ok(ell).unwrap();
            }
        }
    }

    #[test]
    fn regular_decomposition() {
        let p = ParamSet::int(2, 1, 1);
        let reg = regular_rep(&p);
        for c in isotypic_decompose(&p, &reg).unwrap() {
            assert_eq!(c.multiplicity, c.label.dim());
        }
        let parts = j_split(&p, &reg);
        assert_eq!(parts.len(), 2);
        assert!(parts.iter().all(|(_, b)| b.cols() == 6));
        assert_eq!(reassemble(&parts, 12, &p), 12);
    }

    #[test]
    fn m0j_splits() {
        // the 2-dim rep s -> 1, t -> [[0, zeta^j], [1, 0]] is S_j^+ + S_j^-
        let p = ParamSet::int(3, 1, 1);
        for j in 0..3 {
            let mut t = Mat::zeros(p.ctx, 2, 2);
            t.set(0, 1, p.zeta_pow(j as i64));
            t.set(1, 0, p.one());
            let rep = GRep { s: Mat::identity(p.ctx, 2), t };
            let m = multiplicities(&p, &rep).unwrap();
            assert_eq!(m, vec![(IrrepLabel::S(j, Sign::Plus), 1), (IrrepLabel::S(j, Sign::Minus), 1)]);
        }
        let mj = irrep(&p, IrrepLabel::M(1));
        assert_eq!(multiplicities(&p, &mj).unwrap(), vec![(IrrepLabel::M(1), 1)]);
    }

    #[test]
    fn tensor_rules_match_matrices() {
        for ell in 1..=4 {
            let p = ParamSet::int(ell, 1, 1);
            for (x, rx) in irreps(&p) {
                assert_eq!(irrep_dual(ell, irrep_dual(ell, x)), x);
                let d = multiplicities(&p, &rx.dual()).unwrap();
                assert_eq!(d, vec![(irrep_dual(ell, x), 1)]);
                for (y, ry) in irreps(&p) {
                    let mut expect = irrep_tensor(ell, x, y);
                    expect.sort();
                    let mut got: Vec<IrrepLabel> = multiplicities(&p, &rx.tensor(&ry))
                        .unwrap()
                        .into_iter()
                        .flat_map(|(l, m)| std::iter::repeat(l).take(m))
                        .collect();
                    got.sort();
                    assert_eq!(got, expect, "{x} (x) {y} at l={ell}");
                }
            }
        }
        assert_eq!(irrep_dual(2, IrrepLabel::S(0, Sign::Plus)), IrrepLabel::S(0, Sign::Plus));
    }

    #[test]
    fn m_component_bases_are_standard() {
        let p = ParamSet::int(2, 1, 1);
        let reg = regular_rep(&p);
        for c in isotypic_decompose(&p, &reg).unwrap() {
            if let IrrepLabel::M(j) = c.label {
                let std = irrep(&p, c.label);
                for k in 0..c.multiplicity {
                    let b = c.basis.select_cols(&[2 * k, 2 * k + 1]);
                    let r = reg.restrict(&b).unwrap();
                    assert_eq!(r, std, "copy {k} of M{j}");
                }
            }
        }
    }
}
