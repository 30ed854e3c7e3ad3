//! Parameter sets `(l, hbar, mu)` and the roots of unity they fix.

use std::fmt;

use num_integer::Integer;

use super::field::{cyclo_context, Cyc, FieldContext};
use crate::error::{Error, Result};

/// The four parameter regimes that drive the classification of simples.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Regime {
    /// `lambda = mu = 0`.
    Graded,
    /// `mu = lambda / 3 != 0`.
    LambdaThirds,
    /// `lambda = 0 != mu`.
    LambdaZero,
    /// `lambda != 0`, `mu != lambda / 3`; `collapsed` lists the degrees `j`
    /// where the discriminant `h_j^2 - 4 f_{+j} g_j` vanishes.
    Generic { collapsed: Vec<usize> },
}

impl fmt::Display for Regime {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Regime::Graded => write!(f, "graded"),
            Regime::LambdaThirds => write!(f, "mu = lambda/3"),
            Regime::LambdaZero => write!(f, "lambda = 0"),
            Regime::Generic { collapsed } if collapsed.is_empty() => write!(f, "generic"),
            Regime::Generic { collapsed } => write!(f, "exceptional at j in {collapsed:?}"),
        }
    }
}

#[derive(Clone)]
pub struct ParamSet {
    pub ell: usize,
    pub hbar: Cyc,
    pub mu: Cyc,
    pub lambda: Cyc,
    pub ctx: &'static FieldContext,
    pub xi: Cyc,
    pub eta: Cyc,
    pub zeta: Cyc,
    b: Vec<Cyc>,
}

impl fmt::Debug for ParamSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "ParamSet(l={}, hbar={}, mu={})", self.ell, self.hbar, self.mu)
    }
}

impl PartialEq for ParamSet {
    fn eq(&self, other: &Self) -> bool {
        self.ell == other.ell && self.hbar == other.hbar && self.mu == other.mu
    }
}

/// Conductor `lcm(3, 2l)` of the working field for a given `l`.
pub fn conductor(ell: usize) -> u32 {
    (3u32).lcm(&(2 * ell as u32))
}

impl ParamSet {
    pub fn context_for(ell: usize) -> &'static FieldContext {
        cyclo_context(conductor(ell))
    }

    pub fn new(ell: usize, hbar: Cyc, mu: Cyc) -> Result<ParamSet> {
        if ell == 0 {
            return Err(Error::ParamViolation("l must be at least 1".into()));
        }
        let ctx = Self::context_for(ell);
        if hbar.ctx().n != ctx.n || mu.ctx().n != ctx.n {
            return Err(Error::ContextMismatch(hbar.ctx().n, ctx.n));
        }
        let n = ctx.n as i64;
        let xi = Cyc::root(ctx, n / 3);
        let eta = Cyc::root(ctx, n / (2 * ell as i64));
        let zeta = &eta * &eta;
        let lambda = &Cyc::int(ctx, 3) * &(&hbar * &hbar);
        let b = (0..ell).map(|j| Cyc::root(ctx, j as i64 * (n / (2 * ell as i64)))).collect();
        Ok(ParamSet { ell, hbar, mu, lambda, ctx, xi, eta, zeta, b })
    }

    /// Parameters with rational `hbar = hn/hd` and `mu = mn/md`.
    pub fn rational(ell: usize, hbar: (i64, i64), mu: (i64, i64)) -> Result<ParamSet> {
        let ctx = Self::context_for(ell);
        ParamSet::new(ell, Cyc::rational(ctx, hbar.0, hbar.1), Cyc::rational(ctx, mu.0, mu.1))
    }

    pub fn int(ell: usize, hbar: i64, mu: i64) -> ParamSet {
        ParamSet::rational(ell, (hbar, 1), (mu, 1)).expect("integer parameters are always valid")
    }

    /// `b_j = eta^j` for `j` in `0..l`; indices are taken mod `l`.
    pub fn b(&self, j: usize) -> &Cyc {
        &self.b[j % self.ell]
    }

    /// `eta^k` for any integer `k` (so `eta^{j+k}` may be `-b_{j+k-l}`).
    pub fn eta_pow(&self, k: i64) -> Cyc {
        Cyc::root(self.ctx, k * (self.ctx.n as i64 / (2 * self.ell as i64)))
    }

    /// `zeta^k` with `zeta = eta^2` a primitive `l`-th root of unity.
    pub fn zeta_pow(&self, k: i64) -> Cyc {
        self.eta_pow(2 * k)
    }

    pub fn xi_pow(&self, k: i64) -> Cyc {
        Cyc::root(self.ctx, k * (self.ctx.n as i64 / 3))
    }

    pub fn scalar(&self, n: i64) -> Cyc {
        Cyc::int(self.ctx, n)
    }

    pub fn frac(&self, n: i64, d: i64) -> Cyc {
        Cyc::rational(self.ctx, n, d)
    }

    pub fn zero(&self) -> Cyc {
        Cyc::zero(self.ctx)
    }

    pub fn one(&self) -> Cyc {
        Cyc::one(self.ctx)
    }

    /// The degrees `1..l` (the set usually written `J`).
    pub fn nonzero_degrees(&self) -> std::ops::Range<usize> {
        1..self.ell
    }

    pub fn is_graded(&self) -> bool {
        self.lambda.is_zero() && self.mu.is_zero()
    }

    /// `3 mu == lambda`.
    pub fn mu_is_lambda_thirds(&self) -> bool {
        (&self.scalar(3) * &self.mu) == self.lambda
    }

    pub fn regime(&self) -> Regime {
        if self.is_graded() {
            Regime::Graded
        } else if self.lambda.is_zero() {
            Regime::LambdaZero
        } else if self.mu_is_lambda_thirds() {
            Regime::LambdaThirds
        } else {
            let collapsed = self
                .nonzero_degrees()
                .filter(|&j| crate::repmod::derived_scalars(self, j).discriminant().is_zero())
                .collect();
            Regime::Generic { collapsed }
        }
    }

    pub fn describe(&self) -> String {
        format!("l={}, hbar={}, mu={}", self.ell, self.hbar, self.mu)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn root_choices() {
        for ell in 1..=5 {
            let p = ParamSet::int(ell, 1, 1);
            assert!(p.b(0).is_one());
            for j in 0..ell {
                assert_eq!(p.b(j) * p.b(j), p.zeta_pow(j as i64));
            }
            let xi = &p.xi;
            assert!((&(xi * xi) + xi + p.one()).is_zero());
            assert!(p.zeta_pow(ell as i64).is_one());
        }
    }

    #[test]
    fn conductors() {
        assert_eq!(conductor(1), 6);
        assert_eq!(conductor(2), 12);
        assert_eq!(conductor(3), 6);
        assert_eq!(conductor(4), 24);
    }
}
