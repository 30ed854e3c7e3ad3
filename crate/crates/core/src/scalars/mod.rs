//! Exact scalars: rationals, cyclotomic fields, square roots, parameters.

mod field;
mod params;
mod rational;
mod sqrt;

pub use field::{cyclo_context, Cyc, FieldContext};
pub use params::{conductor, ParamSet, Regime};
pub use rational::Q;
pub use sqrt::{sqrt_exact, sqrt_monomial};

use num_bigint::BigInt;
use serde_json::{json, Value};

use crate::error::{Error, Result};

fn int_to_json(v: BigInt) -> Value {
    match i64::try_from(&v) {
        Ok(x) => json!(x),
        Err(_) => json!(v.to_string()),
    }
}

fn int_from_json(v: &Value) -> Result<BigInt> {
    match v {
        Value::Number(n) => n
            .as_i64()
            .map(BigInt::from)
            .ok_or_else(|| Error::Parse(format!("non-integer coefficient {n}"))),
        Value::String(s) => s.parse().map_err(|_| Error::Parse(format!("bad integer {s:?}"))),
        other => Err(Error::Parse(format!("expected integer, got {other}"))),
    }
}

/// `{"n": n, "coeffs": [[num, den], ...]}`.
pub fn scalar_to_json(a: &Cyc) -> Value {
    let coeffs: Vec<Value> =
        a.coeffs().iter().map(|q| json!([int_to_json(q.numer()), int_to_json(q.denom())])).collect();
    json!({"n": a.ctx().n, "coeffs": coeffs})
}

pub fn scalar_from_json(v: &Value) -> Result<Cyc> {
    let n = v
        .get("n")
        .and_then(Value::as_u64)
        .ok_or_else(|| Error::Parse("scalar needs integer field \"n\"".into()))?;
    let ctx = cyclo_context(n as u32);
    let arr = v
        .get("coeffs")
        .and_then(Value::as_array)
        .ok_or_else(|| Error::Parse("scalar needs array field \"coeffs\"".into()))?;
    let mut coeffs = Vec::with_capacity(arr.len());
    for pair in arr {
        let p = pair.as_array().filter(|p| p.len() == 2).ok_or_else(|| Error::Parse("coefficient must be [num, den]".into()))?;
        let num = int_from_json(&p[0])?;
        let den = int_from_json(&p[1])?;
        if den <= BigInt::from(0) {
            return Err(Error::Parse("denominator must be positive".into()));
        }
        let q = Q::from_bigints(num.clone(), den.clone()).expect("nonzero denominator");
        if q.numer() != num || q.denom() != den {
            return Err(Error::Parse(format!("coefficient {num}/{den} is not in lowest terms")));
        }
        coeffs.push(q);
    }
    Cyc::from_coeffs(ctx, coeffs)
}

fn parse_rational(s: &str) -> Result<Q> {
    let bad = || Error::Parse(format!("bad rational literal {s:?}"));
    let s = s.trim();
    if s.is_empty() {
        return Ok(Q::one());
    }
    match s.split_once('/') {
        Some((n, d)) => {
            let n: i64 = n.trim().parse().map_err(|_| bad())?;
            let d: i64 = d.trim().parse().map_err(|_| bad())?;
            if d == 0 {
                return Err(bad());
            }
            Ok(Q::new(n, d))
        }
        None => s.parse::<i64>().map(Q::int).map_err(|_| bad()),
    }
}

/// Parses `p`, `p/q`, `z^k`, `-z`, `p/q*z^k` with `z = zeta_n`.
pub fn parse_scalar(ctx: &'static FieldContext, s: &str) -> Result<Cyc> {
    let t: String = s.chars().filter(|c| !c.is_whitespace()).collect();
    let Some(zpos) = t.find('z') else {
        return Ok(Cyc::from_q(ctx, parse_rational(&t)?));
    };
    let (coef, rest) = t.split_at(zpos);
    let coef = coef.strip_suffix('*').unwrap_or(coef);
    let q = match coef {
        "" | "+" => Q::one(),
        "-" => Q::int(-1),
        c => parse_rational(c)?,
    };
    let k: i64 = match rest.strip_prefix('z').unwrap_or("") {
        "" => 1,
        e => e
            .strip_prefix('^')
            .and_then(|e| e.parse().ok())
            .ok_or_else(|| Error::Parse(format!("bad exponent in {s:?}")))?,
    };
    Ok(Cyc::monomial(ctx, q, k))
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    #[test]
    fn parse_forms() {
        let ctx = cyclo_context(12);
        assert_eq!(parse_scalar(ctx, "3").unwrap(), Cyc::int(ctx, 3));
        assert_eq!(parse_scalar(ctx, "-1/2").unwrap(), Cyc::rational(ctx, -1, 2));
        assert_eq!(parse_scalar(ctx, "z^6").unwrap(), Cyc::int(ctx, -1));
        assert_eq!(parse_scalar(ctx, "-z").unwrap(), -Cyc::root(ctx, 1));
        assert_eq!(parse_scalar(ctx, "2/3*z^3").unwrap(), Cyc::monomial(ctx, Q::new(2, 3), 3));
        assert!(parse_scalar(ctx, "2*w").is_err());
    }

    #[test]
    fn json_rejects_unreduced() {
        let v = json!({"n": 3, "coeffs": [[2, 4], [0, 1]]});
        assert!(scalar_from_json(&v).is_err());
    }

    fn arb_cyc(n: u32) -> impl Strategy<Value = Cyc> {
        let ctx = cyclo_context(n);
        proptest::collection::vec((-50i64..50, 1i64..20), ctx.phi)
            .prop_map(move |v| Cyc::from_coeffs(ctx, v.into_iter().map(|(a, b)| Q::new(a, b)).collect()).unwrap())
    }

    proptest! {
        #[test]
        fn canonical_round_trips(a in arb_cyc(12), b in arb_cyc(12)) {
            prop_assert_eq!(&(&a + &b) - &b, a.clone());
            if !a.is_zero() {
                prop_assert!((&a * &a.inv().unwrap()).is_one());
            }
            let j = scalar_to_json(&a);
            prop_assert_eq!(scalar_from_json(&j).unwrap(), a.clone());
            prop_assert_eq!(scalar_from_json(&serde_json::from_str(&j.to_string()).unwrap()).unwrap(), a);
        }

        #[test]
        fn field_laws_24(a in arb_cyc(24), b in arb_cyc(24), c in arb_cyc(24)) {
            prop_assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
            prop_assert_eq!(&a * &(&b + &c), &(&a * &b) + &(&a * &c));
            prop_assert_eq!(&a * &b, &b * &a);
        }

        #[test]
        fn sqrt_of_monomial_squares(q in (-30i64..30, 1i64..10), k in 0i64..24) {
            let ctx = cyclo_context(24);
            let s = Cyc::monomial(ctx, Q::new(q.0, q.1), k);
            let r = sqrt_monomial(&(&s * &s)).unwrap();
            prop_assert!(r == s || r == -&s);
        }

        #[test]
        fn sqrt_exact_of_squares(a in arb_cyc(12)) {
            let sq = &a * &a;
            let r = sqrt_exact(&sq).unwrap();
            prop_assert_eq!(&r * &r, sq);
        }
    }
}
