//! The scalars attached to a degree `j` and the parameter sets of the
//! six-dimensional simples.

use crate::error::{Error, Result};
use crate::scalars::{sqrt_exact, Cyc, ParamSet};

#[derive(Clone, Debug, PartialEq)]
pub struct DerivedScalars {
    pub j: usize,
    pub b: Cyc,
    pub f: Cyc,
    pub g: Cyc,
    pub f_plus: Cyc,
    pub f_minus: Cyc,
    pub h: Cyc,
}

impl DerivedScalars {
    /// `h^2 - 4 f_+ g`.
    pub fn discriminant(&self) -> Cyc {
        let h2 = &self.h * &self.h;
        let four = Cyc::int(self.h.ctx(), 4);
        &h2 - &(&four * &(&self.f_plus * &self.g))
    }

    /// `(h + r)/2` for a square root `r` of the discriminant, with the sign
    /// of `r` chosen so the result is nonzero whenever possible.
    pub fn s_root(&self) -> Result<Cyc> {
        let r = sqrt_exact(&self.discriminant())?;
        let half = Cyc::rational(self.h.ctx(), 1, 2);
        let plus = &(&self.h + &r) * &half;
        if !plus.is_zero() {
            return Ok(plus);
        }
        Ok(&(&self.h - &r) * &half)
    }

    pub fn is_collapsed(&self) -> bool {
        self.discriminant().is_zero()
    }
}

pub fn derived_scalars(p: &ParamSet, j: usize) -> DerivedScalars {
    let b = p.b(j).clone();
    let zj = p.zeta_pow(j as i64);
    let zmj = p.zeta_pow(-(j as i64));
    let one = p.one();
    let (lam, mu) = (&p.lambda, &p.mu);
    let three_mu = &p.scalar(3) * mu;
    let f = &(&(&(lam - &three_mu) * &(&one - &zj)) * &p.frac(1, 9)) * &b.inv().expect("b_j is a root of unity");
    let g = &(&(&three_mu + &(&p.scalar(2) * lam)) * &(&one - &zj)) * &p.frac(1, 9);
    let fpm = |z: &Cyc| &(&(mu * &p.frac(1, 3)) * &(&one - z)) + &(&(lam * &p.frac(1, 9)) * &(&p.scalar(2) + z));
    let f_plus = fpm(&zj);
    let f_minus = fpm(&zmj);
    let h = &(&f_plus + &(&zj * &f_minus)) + &g;
    DerivedScalars { j, b, f, g, f_plus, f_minus, h }
}

/// A point `(c1, c2, t1, t2)` with `c1 c2 = g`, `t1 t2 = f_+`, `c1 t1 + c2 t2 = h`.
#[derive(Clone, Debug, PartialEq)]
pub struct Upsilon {
    pub j: usize,
    pub c1: Cyc,
    pub c2: Cyc,
    pub t1: Cyc,
    pub t2: Cyc,
}

impl Upsilon {
    pub fn satisfies(&self, d: &DerivedScalars) -> bool {
        &self.c1 * &self.c2 == d.g
            && &self.t1 * &self.t2 == d.f_plus
            && &(&self.c1 * &self.t1) + &(&self.c2 * &self.t2) == d.h
    }
}

/// Representatives of the isomorphism classes of six-dimensional simples at `j`.
///
/// One point when `g = 0` and `b_j^2 = -1`, or when the discriminant
/// vanishes; two otherwise.
pub fn solve_upsilon(p: &ParamSet, j: usize) -> Result<Vec<Upsilon>> {
    if j == 0 || j >= p.ell {
        return Err(Error::ParamViolation(format!("six-dimensional simples need 1 <= j < l, got j = {j}")));
    }
    if p.mu_is_lambda_thirds() {
        return Err(Error::ParamViolation("no six-dimensional simples when 3 mu = lambda".into()));
    }
    let d = derived_scalars(p, j);
    let one = p.one();
    let minus_one = -&one;
    if d.g.is_zero() && p.zeta_pow(j as i64) == minus_one {
        let t2 = -&(&p.lambda * &p.frac(1, 3));
        return Ok(vec![Upsilon { j, c1: p.zero(), c2: p.zero(), t1: one, t2 }]);
    }
    let s = d.s_root()?;
    let fs = &d.f_plus * &s.inv()?;
    let first = Upsilon { j, c1: one.clone(), c2: d.g.clone(), t1: s.clone(), t2: fs.clone() };
    if d.is_collapsed() {
        return Ok(vec![first]);
    }
    let second = Upsilon { j, c1: d.g.clone(), c2: one, t1: fs, t2: s };
    Ok(vec![first, second])
}

/// `c_{±j} = (1 - b^2 ± 2 sqrt(b^4 + b^2 + 1)) / (b^2 - 1)`.
pub fn exceptional_mus(p: &ParamSet, j: usize) -> Result<(Cyc, Cyc)> {
    let b2 = p.zeta_pow(j as i64);
    let one = p.one();
    let r = sqrt_exact(&(&(&(&b2 * &b2) + &b2) + &one))?;
    let den = (&b2 - &one).inv()?;
    let base = &one - &b2;
    let two_r = &p.scalar(2) * &r;
    Ok((&(&base + &two_r) * &den, &(&base - &two_r) * &den))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q(p: &ParamSet, n: i64, d: i64) -> Cyc {
        p.frac(n, d)
    }

    #[test]
    fn discriminant_example() {
        // l = 2, hbar = 1, mu = 6, j = 1: b^2 = -1, lambda = 3.
        // f_+ = 2(1+1) + (1/3)(2-1) = 13/3, f_- = 13/3, g = (18+6)(2)/9 = 16/3,
        // h = f_+ - f_- + g = 16/3, h^2 - 4 f_+ g = 256/9 - 832/9 = -64.
        let p = ParamSet::int(2, 1, 6);
        let d = derived_scalars(&p, 1);
        assert_eq!(d.f_plus, q(&p, 13, 3));
        assert_eq!(d.g, q(&p, 16, 3));
        assert_eq!(d.h, q(&p, 16, 3));
        assert_eq!(d.discriminant(), p.scalar(-64));
        let s = d.s_root().unwrap();
        // (16/3 ± 8i)/2 = 8/3 ± 4i
        let i = p.eta.clone();
        let expect_a = &q(&p, 8, 3) + &(&p.scalar(4) * &i);
        let expect_b = &q(&p, 8, 3) - &(&p.scalar(4) * &i);
        assert!(s == expect_a || s == expect_b);
    }

    #[test]
    fn closed_form_h_and_discriminant() {
        // h = (lambda/9)(5 + b^2) + (mu/3)(1 - b^2), and the factored discriminant
        for (ell, hb, mu) in [(2, 1, 6), (3, 1, 2), (4, 2, -1), (3, 1, -5)] {
            let p = ParamSet::int(ell, hb, mu);
            for j in 1..ell {
                let d = derived_scalars(&p, j);
                let b2 = p.zeta_pow(j as i64);
                let one = p.one();
                let h = &(&(&p.lambda * &q(&p, 1, 9)) * &(&p.scalar(5) + &b2)) + &(&(&p.mu * &q(&p, 1, 3)) * &(&one - &b2));
                assert_eq!(d.h, h);
                let bm = &b2 - &one;
                let bp = &b2 + &one;
                let inner = &(&(&p.mu * &p.mu) + &(&(&q(&p, 2, 3) * &p.lambda) * &p.mu))
                    - &(&(&(&p.lambda * &p.lambda) * &q(&p, 1, 3)) * &(&(&bp * &bp) * &(&bm * &bm).inv().unwrap()));
                let disc = &(-&(&(&bm * &bm) * &q(&p, 1, 3))) * &inner;
                assert_eq!(d.discriminant(), disc);
            }
        }
    }

    #[test]
    fn lambda_thirds_kills_f() {
        let p = ParamSet::int(3, 1, 1);
        for j in 0..3 {
            assert!(derived_scalars(&p, j).f.is_zero());
        }
    }

    #[test]
    fn exceptional_values() {
        let p = ParamSet::int(2, 1, 1);
        let (cp, cm) = exceptional_mus(&p, 1).unwrap();
        assert_eq!(cp, p.scalar(-2));
        assert!(cm.is_zero());
        // at l = 3 both roots give -1 for j = 1, 2 on one branch
        let p3 = ParamSet::int(3, 1, 1);
        for j in 1..3 {
            let (a, b) = exceptional_mus(&p3, j).unwrap();
            assert!(a == p3.scalar(-1) || b == p3.scalar(-1));
        }
    }

    #[test]
    fn upsilon_points_satisfy_conditions() {
        for (ell, hb, mu) in [(2, 1, 6), (2, 1, -2), (2, 0, 1), (3, 1, 2), (4, 1, 2)] {
            let p = ParamSet::int(ell, hb, mu);
            for j in 1..ell {
                let d = derived_scalars(&p, j);
                match solve_upsilon(&p, j) {
                    Ok(pts) => {
                        assert!(!pts.is_empty());
                        for u in &pts {
                            assert!(u.satisfies(&d), "{ell} {hb} {mu} j={j}");
                        }
                        assert_eq!(pts.len() == 1, d.is_collapsed() || (d.g.is_zero() && d.h.is_zero()));
                    }
                    Err(Error::NeedsSquareRoot { .. }) => {}
                    Err(e) => panic!("{e}"),
                }
            }
        }
    }
}
