//! Square roots inside `Q(zeta_n)`.

use super::field::Cyc;
use super::rational::Q;
use crate::error::{Error, Result};

fn needs_root(a: &Cyc) -> Error {
    Error::NeedsSquareRoot { value: a.to_string(), n: a.ctx().n }
}

/// Finds `s = r * zeta_n^m` with `s^2 = a`, scanning every `k` for which
/// `a * zeta_n^{-k}` is rational.
pub fn sqrt_monomial(a: &Cyc) -> Result<Cyc> {
    let ctx = a.ctx();
    if a.is_zero() {
        return Ok(a.clone());
    }
    let n = ctx.n as i64;
    for k in 0..n {
        let u = a * &Cyc::root(ctx, -k);
        let Some(q) = u.as_rational() else { continue };
        let Some(r) = q.sqrt() else { continue };
        // need 2m = k (mod n)
        let m = if k % 2 == 0 {
            Some(k / 2)
        } else if n % 2 == 1 {
            Some((k + n) / 2)
        } else {
            None
        };
        if let Some(m) = m {
            let s = Cyc::monomial(ctx, r, m);
            if &(&s * &s) == a {
                return Ok(s);
            }
        }
    }
    Err(needs_root(a))
}

fn complex_solve(mut m: Vec<Vec<(f64, f64)>>, mut rhs: Vec<(f64, f64)>) -> Option<Vec<(f64, f64)>> {
    let n = rhs.len();
    let mul = |a: (f64, f64), b: (f64, f64)| (a.0 * b.0 - a.1 * b.1, a.0 * b.1 + a.1 * b.0);
    let abs2 = |a: (f64, f64)| a.0 * a.0 + a.1 * a.1;
    for col in 0..n {
        let piv = (col..n).max_by(|&x, &y| abs2(m[x][col]).total_cmp(&abs2(m[y][col])))?;
        if abs2(m[piv][col]) < 1e-24 {
            return None;
        }
        m.swap(col, piv);
        rhs.swap(col, piv);
        let p = m[col][col];
        let d = abs2(p);
        let inv = (p.0 / d, -p.1 / d);
        for r in 0..n {
            if r == col {
                continue;
            }
            let f = mul(m[r][col], inv);
            if abs2(f) == 0.0 {
                continue;
            }
            for c in col..n {
                let t = mul(f, m[col][c]);
                m[r][c].0 -= t.0;
                m[r][c].1 -= t.1;
            }
            let t = mul(f, rhs[col]);
            rhs[r].0 -= t.0;
            rhs[r].1 -= t.1;
        }
    }
    Some((0..n).map(|i| mul(rhs[i], {
        let p = m[i][i];
        let d = abs2(p);
        (p.0 / d, -p.1 / d)
    })).collect())
}

fn csqrt(z: (f64, f64)) -> (f64, f64) {
    let r = (z.0 * z.0 + z.1 * z.1).sqrt();
    let re = ((r + z.0) / 2.0).max(0.0).sqrt();
    let im = ((r - z.0) / 2.0).max(0.0).sqrt();
    (re, if z.1 < 0.0 { -im } else { im })
}

/// Square root of `a` in its own field.
///
/// Tries the monomial scan first. Otherwise candidate coordinates are
/// recovered from the complex embeddings (one sign per conjugate pair),
/// rounded to nearby rationals and accepted only if the exact square
/// equals `a`. Fails with `NeedsSquareRoot` when no candidate survives.
pub fn sqrt_exact(a: &Cyc) -> Result<Cyc> {
    if let Ok(s) = sqrt_monomial(a) {
        return Ok(s);
    }
    let ctx = a.ctx();
    let n = ctx.n as i64;
    let phi = ctx.phi;
    if phi < 2 {
        return Err(needs_root(a));
    }
    let units = Cyc::embedding_indices(ctx);
    let half: Vec<i64> = units.iter().copied().filter(|&k| 2 * k < n).collect();
    let roots: Vec<(f64, f64)> = half.iter().map(|&k| csqrt(a.embed(k))).collect();
    let vander: Vec<Vec<(f64, f64)>> = units
        .iter()
        .map(|&k| {
            (0..phi)
                .map(|i| {
                    let ang = 2.0 * std::f64::consts::PI * (k as f64) * (i as f64) / (n as f64);
                    (ang.cos(), ang.sin())
                })
                .collect()
        })
        .collect();
    let patterns = 1u64 << (half.len().saturating_sub(1));
    for pat in 0..patterns {
        let rhs: Vec<(f64, f64)> = units
            .iter()
            .map(|&k| {
                let (idx, conj) = match half.iter().position(|&h| h == k) {
                    Some(i) => (i, false),
                    None => (half.iter().position(|&h| h == n - k).expect("conjugate pair"), true),
                };
                let sign = if idx > 0 && (pat >> (idx - 1)) & 1 == 1 { -1.0 } else { 1.0 };
                let r = roots[idx];
                let r = if conj { (r.0, -r.1) } else { r };
                (sign * r.0, sign * r.1)
            })
            .collect();
        let Some(sol) = complex_solve(vander.clone(), rhs) else { continue };
        let mut coeffs = Vec::with_capacity(phi);
        let mut ok = true;
        for &(re, im) in &sol {
            if im.abs() > 1e-6 * (1.0 + re.abs()) {
                ok = false;
                break;
            }
            match Q::approximate(re, 1 << 20) {
                Some(q) => coeffs.push(q),
                None => {
                    ok = false;
                    break;
                }
            }
        }
        if !ok {
            continue;
        }
        let s = Cyc::from_coeffs(ctx, coeffs)?;
        if &(&s * &s) == a {
            return Ok(s);
        }
    }
    Err(needs_root(a))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalars::cyclo_context;

    #[test]
    fn monomial_examples() {
        let ctx = cyclo_context(12);
        let s = sqrt_monomial(&Cyc::int(ctx, -64)).unwrap();
        assert!(s == Cyc::monomial(ctx, Q::int(8), 3) || s == Cyc::monomial(ctx, Q::int(-8), 3));
        for k in 0..12 {
            let a = Cyc::root(ctx, 2 * k);
            let s = sqrt_monomial(&a).unwrap();
            assert_eq!(&s * &s, a);
        }
        assert!(matches!(sqrt_monomial(&Cyc::int(ctx, 2)), Err(Error::NeedsSquareRoot { .. })));
        assert!(matches!(sqrt_exact(&Cyc::int(ctx, 2)), Err(Error::NeedsSquareRoot { .. })));
    }

    #[test]
    fn non_monomial_root() {
        // sqrt(-3) = 1 + 2 zeta_3 is not a monomial in Q(zeta_12)
        let ctx = cyclo_context(12);
        let m = &Cyc::one(ctx) - &Cyc::root(ctx, 2);
        let a = &Cyc::int(ctx, -3) * &(&m * &m);
        assert!(sqrt_monomial(&a).is_err());
        let s = sqrt_exact(&a).unwrap();
        assert_eq!(&s * &s, a);
    }

    #[test]
    fn odd_conductor() {
        let ctx = cyclo_context(3);
        let a = Cyc::root(ctx, 1);
        let s = sqrt_monomial(&a).unwrap();
        assert_eq!(&s * &s, a);
    }
}
