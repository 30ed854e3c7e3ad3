//! Finite-dimensional modules as verified matrix triples `([s], [t], [a0])`.
//!
//! Matrices act on column vectors. `[a1] = [s][a0][s]^2` and
//! `[a2] = [s]^2[a0][s]`.

mod catalog;
mod derived;
mod hom;
mod named;
mod structure;

use std::fmt;

use serde::{Deserialize, Serialize};
use serde_json::{json, Value};

use crate::error::{Error, Result};
use crate::grp::{GRep, IrrepLabel, Sign};
use crate::linalg::{complete_basis, solve_linear, Mat};
use crate::scalars::{scalar_from_json, scalar_to_json, Cyc, ParamSet};

pub use catalog::{enumerate_simples, Catalog};
pub use derived::{derived_scalars, exceptional_mus, solve_upsilon, DerivedScalars, Upsilon};
pub use hom::{hom_space, hom_space_gens};
pub use named::{
    graded_simple, l0, l_ac, mixed, mixed_unchecked, n_representatives, n_upsilon, p_ac_display, t0, t_j, MixedBlocks, PVariant,
};
pub use structure::{
    composition_factors, end_algebra, is_indecomposable, is_isomorphic, is_isomorphic_seeded, is_simple,
    j_component, radical_of, socle, top, DEFAULT_SEED,
};

/// Catalog tags for the named modules.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum Label {
    /// One-dimensional, `a0 = 0`, `t = ±1`.
    L0(Sign),
    /// Two-dimensional on `M_j` with `a = ±hbar`, `c = ±hbar`.
    Lac { j: usize, a: Sign, c: Sign },
    /// `L_0(0, 0)` when `lambda = 0`.
    L00,
    T(usize),
    T0(Sign),
    /// Graded simple with `a0 = 0`.
    Graded(IrrepLabel),
    /// Six-dimensional simple; `which` is 1 or 2.
    N { j: usize, which: u8 },
    P { j: usize, a: Sign, c: Sign },
    Induced(IrrepLabel),
    Other(String),
}

impl Label {
    /// The degree `j` with `t^2 = zeta^j` on the whole module, when known.
    pub fn degree(&self) -> Option<usize> {
        match self {
            Label::L0(_) | Label::L00 | Label::T0(_) => Some(0),
            Label::Lac { j, .. } | Label::T(j) | Label::N { j, .. } | Label::P { j, .. } => Some(*j),
            Label::Graded(s) | Label::Induced(s) => Some(s.degree()),
            Label::Other(_) => None,
        }
    }
}

impl fmt::Display for Label {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Label::L0(e) => write!(f, "L0{e}"),
            Label::Lac { j, a, c } => write!(f, "L{j}({a},{c})"),
            Label::L00 => write!(f, "L0(0,0)"),
            Label::T(j) => write!(f, "T{j}"),
            Label::T0(e) => write!(f, "T0{e}"),
            Label::Graded(s) => write!(f, "L[{s}]"),
            Label::N { j, which } => write!(f, "N{j}^({which})"),
            Label::P { j, a, c } => write!(f, "P{j}({a},{c})"),
            Label::Induced(s) => write!(f, "A({s})"),
            Label::Other(s) => f.write_str(s),
        }
    }
}

/// The seven defining identities, in the order `verify` checks them.
pub const RELATIONS: [&str; 7] = [
    "s^3 = 1",
    "t^(2l) = 1",
    "ts = s^2 t",
    "t a0 = -a0 t",
    "a0^2 = mu(1 - t^2)",
    "a0a1 + a1a2 + a2a0 = lambda(1 - st^2)",
    "a1a0 + a2a1 + a0a2 = lambda(1 - s^2t^2)",
];

#[derive(Clone)]
pub struct ModuleRep {
    pub params: ParamSet,
    pub s: Mat,
    pub t: Mat,
    pub a0: Mat,
    pub label: Option<Label>,
}

impl fmt::Debug for ModuleRep {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "ModuleRep({}, dim {})", self.name(), self.dim())
    }
}

impl ModuleRep {
    /// Builds and verifies.
    pub fn new(params: &ParamSet, s: Mat, t: Mat, a0: Mat, label: Option<Label>) -> Result<ModuleRep> {
        let m = ModuleRep::unchecked(params, s, t, a0, label)?;
        m.verify()?;
        Ok(m)
    }

    /// Builds after shape checks only.
    pub fn unchecked(params: &ParamSet, s: Mat, t: Mat, a0: Mat, label: Option<Label>) -> Result<ModuleRep> {
        let n = s.rows();
        for (name, m) in [("s", &s), ("t", &t), ("a0", &a0)] {
            if m.rows() != n || m.cols() != n {
                return Err(Error::DimensionMismatch(format!("[{name}] is {}x{}, expected {n}x{n}", m.rows(), m.cols())));
            }
            if m.ctx() != params.ctx {
                return Err(Error::ContextMismatch(m.ctx().n, params.ctx.n));
            }
        }
        Ok(ModuleRep { params: params.clone(), s, t, a0, label })
    }

    pub fn dim(&self) -> usize {
        self.s.rows()
    }

    pub fn name(&self) -> String {
        self.label.as_ref().map_or_else(|| format!("<dim {}>", self.dim()), Label::to_string)
    }

    pub fn with_label(mut self, label: Label) -> ModuleRep {
        self.label = Some(label);
        self
    }

    pub fn a1(&self) -> Mat {
        self.s.mul(&self.a0).mul(&self.s.mul(&self.s))
    }

    pub fn a2(&self) -> Mat {
        self.s.mul(&self.s).mul(&self.a0).mul(&self.s)
    }

    /// `[a_i]` for `i` in `0..3`.
    pub fn a(&self, i: u8) -> Mat {
        match i % 3 {
            0 => self.a0.clone(),
            1 => self.a1(),
            _ => self.a2(),
        }
    }

    /// `(s, t, a0)`, the generators used by every structural computation.
    pub fn gens(&self) -> Vec<Mat> {
        vec![self.s.clone(), self.t.clone(), self.a0.clone()]
    }

    pub fn group_rep(&self) -> GRep {
        GRep { s: self.s.clone(), t: self.t.clone() }
    }

    /// `lhs - rhs` for each identity, in `RELATIONS` order.
    pub fn residuals(&self) -> [Mat; 7] {
        let p = &self.params;
        let n = self.dim();
        let ctx = p.ctx;
        let id = Mat::identity(ctx, n);
        let (s, t, a0) = (&self.s, &self.t, &self.a0);
        let s2 = s.mul(s);
        let t2 = t.mul(t);
        let a1 = self.a1();
        let a2 = self.a2();
        [
            s2.mul(s).sub(&id),
            t.pow(2 * p.ell).sub(&id),
            t.mul(s).sub(&s2.mul(t)),
            t.mul(a0).add(&a0.mul(t)),
            a0.mul(a0).sub(&id.sub(&t2).scale(&p.mu)),
            a0.mul(&a1).add(&a1.mul(&a2)).add(&a2.mul(a0)).sub(&id.sub(&s.mul(&t2)).scale(&p.lambda)),
            a1.mul(a0).add(&a2.mul(&a1)).add(&a0.mul(&a2)).sub(&id.sub(&s2.mul(&t2)).scale(&p.lambda)),
        ]
    }

    /// Names of the identities that fail.
    pub fn violations(&self) -> Vec<&'static str> {
        RELATIONS.iter().zip(self.residuals()).filter(|(_, r)| !r.is_zero()).map(|(r, _)| *r).collect()
    }

    pub fn verify(&self) -> Result<()> {
        let bad = self.violations();
        if bad.is_empty() {
            Ok(())
        } else {
            Err(Error::Verification(format!("{}: {}", self.name(), bad.join("; "))))
        }
    }

    /// The module in the basis given by the columns of `p`.
    pub fn change_basis(&self, p: &Mat) -> Result<ModuleRep> {
        let pinv = p.inverse()?;
        Ok(ModuleRep {
            params: self.params.clone(),
            s: self.s.conjugate_by(p, &pinv),
            t: self.t.conjugate_by(p, &pinv),
            a0: self.a0.conjugate_by(p, &pinv),
            label: self.label.clone(),
        })
    }

    /// Restriction to the submodule spanned by the (independent) columns of `basis`.
    pub fn submodule(&self, basis: &Mat) -> Result<ModuleRep> {
        let r = |g: &Mat| solve_linear(basis, &g.mul(basis));
        Ok(ModuleRep { params: self.params.clone(), s: r(&self.s)?, t: r(&self.t)?, a0: r(&self.a0)?, label: None })
    }

    /// Quotient by the submodule spanned by the columns of `sub`.
    pub fn quotient(&self, sub: &Mat) -> Result<ModuleRep> {
        let q = complete_basis(sub);
        let k = crate::linalg::rank(sub);
        let n = self.dim();
        let conj = self.change_basis(&q)?;
        let b = |m: &Mat| m.submatrix(k, k, n - k, n - k);
        Ok(ModuleRep { params: self.params.clone(), s: b(&conj.s), t: b(&conj.t), a0: b(&conj.a0), label: None })
    }

    pub fn direct_sum(parts: &[&ModuleRep]) -> Result<ModuleRep> {
        let first = parts.first().ok_or_else(|| Error::DimensionMismatch("empty direct sum".into()))?;
        let ctx = first.params.ctx;
        let blocks = |f: fn(&ModuleRep) -> &Mat| {
            let ms: Vec<&Mat> = parts.iter().map(|m| f(m)).collect();
            Mat::block_diag(ctx, &ms)
        };
        let label = Label::Other(parts.iter().map(|m| m.name()).collect::<Vec<_>>().join(" + "));
        Ok(ModuleRep {
            params: first.params.clone(),
            s: blocks(|m| &m.s),
            t: blocks(|m| &m.t),
            a0: blocks(|m| &m.a0),
            label: Some(label),
        })
    }

    pub fn to_json(&self) -> Value {
        let mat = |m: &Mat| -> Value {
            Value::Array((0..m.rows()).map(|i| Value::Array(m.row(i).iter().map(scalar_to_json).collect())).collect())
        };
        let mut v = json!({
            "ell": self.params.ell,
            "hbar": scalar_to_json(&self.params.hbar),
            "mu": scalar_to_json(&self.params.mu),
            "dim": self.dim(),
            "s": mat(&self.s),
            "t": mat(&self.t),
            "a0": mat(&self.a0),
        });
        if let Some(l) = &self.label {
            v["label"] = serde_json::to_value(l).expect("labels serialize");
        }
        v
    }

    /// Loads a module; runs `verify` unless `unchecked`.
    pub fn from_json(v: &Value, unchecked: bool) -> Result<ModuleRep> {
        let field = |k: &str| v.get(k).ok_or_else(|| Error::Parse(format!("module needs field {k:?}")));
        let ell = field("ell")?.as_u64().ok_or_else(|| Error::Parse("\"ell\" must be a positive integer".into()))? as usize;
        let ctx = ParamSet::context_for(ell.max(1));
        let lift = |c: Cyc| -> Result<Cyc> {
            if c.ctx() == ctx {
                Ok(c)
            } else {
                Err(Error::ContextMismatch(c.ctx().n, ctx.n))
            }
        };
        let hbar = lift(scalar_from_json(field("hbar")?)?)?;
        let mu = lift(scalar_from_json(field("mu")?)?)?;
        let params = ParamSet::new(ell, hbar, mu)?;
        let dim = field("dim")?.as_u64().ok_or_else(|| Error::Parse("\"dim\" must be an integer".into()))? as usize;
        let mat = |k: &str| -> Result<Mat> {
            let rows = field(k)?.as_array().ok_or_else(|| Error::Parse(format!("{k:?} must be an array of rows")))?;
            if rows.len() != dim {
                return Err(Error::DimensionMismatch(format!("{k:?} has {} rows, dim is {dim}", rows.len())));
            }
            let mut out = Vec::with_capacity(dim);
            for r in rows {
                let r = r.as_array().ok_or_else(|| Error::Parse(format!("{k:?} rows must be arrays")))?;
                out.push(r.iter().map(|x| scalar_from_json(x).and_then(&lift)).collect::<Result<Vec<_>>>()?);
            }
            if dim == 0 {
                return Ok(Mat::zeros(ctx, 0, 0));
            }
            Mat::from_rows(ctx, out)
        };
        let label = match v.get("label") {
            Some(l) => Some(serde_json::from_value(l.clone())?),
            None => None,
        };
        let m = ModuleRep::unchecked(&params, mat("s")?, mat("t")?, mat("a0")?, label)?;
        if !unchecked {
            m.verify()?;
        }
        Ok(m)
    }
}

/// `±hbar`.
pub fn signed_hbar(p: &ParamSet, e: Sign) -> Cyc {
    &p.hbar * &p.scalar(e.value())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn json_round_trip_and_tamper() {
        let p = ParamSet::int(2, 1, 1);
        let m = t_j(&p, 1).unwrap();
        let text = serde_json::to_string(&m.to_json()).unwrap();
        let back = ModuleRep::from_json(&serde_json::from_str(&text).unwrap(), false).unwrap();
        assert_eq!(serde_json::to_string(&back.to_json()).unwrap(), text);
        let mut bad = m.clone();
        bad.a0.set(0, 0, p.one());
        let err = ModuleRep::from_json(&bad.to_json(), false).unwrap_err().to_string();
        assert!(err.contains("t a0 = -a0 t"), "{err}");
        assert!(ModuleRep::from_json(&bad.to_json(), true).is_ok());
    }

    #[test]
    fn quotient_and_submodule() {
        let p = ParamSet::int(2, 1, 1);
        let t0p = t0(&p, Sign::Plus);
        let soc = socle(&t0p).unwrap();
        assert_eq!(soc.cols(), 1);
        let sub = t0p.submodule(&soc).unwrap();
        sub.verify().unwrap();
        assert!(is_isomorphic(&sub, &l0(&p, Sign::Minus)).is_some());
        let q = t0p.quotient(&soc).unwrap();
        q.verify().unwrap();
        assert!(is_isomorphic(&q, &l0(&p, Sign::Plus)).is_some());
    }
}
