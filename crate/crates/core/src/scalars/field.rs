//! Cyclotomic fields `Q(zeta_n) = Q[x]/Phi_n` with dense power-basis coordinates.

use std::collections::HashMap;
use std::fmt;
use std::ops::{Add, AddAssign, Div, Mul, Neg, Sub, SubAssign};
use std::sync::{Mutex, OnceLock};

use num_integer::Integer;
use smallvec::SmallVec;

use super::rational::Q;
use crate::error::{Error, Result};

/// Conductor data for `Q(zeta_n)`. Contexts are interned, so a
/// `&'static FieldContext` is the handle every scalar carries.
#[derive(Debug)]
pub struct FieldContext {
    pub n: u32,
    pub phi: usize,
    /// Coefficients of `Phi_n`, lowest degree first; monic of degree `phi`.
    pub cyclo_poly: Vec<i64>,
    /// `x^k mod Phi_n` for `k in 0..max(n, 2 phi - 1)`.
    powers: Vec<Vec<i64>>,
}

fn poly_div_exact(num: &[i64], den: &[i64]) -> Vec<i64> {
    // den is monic
    let mut rem = num.to_vec();
    let dd = den.len() - 1;
    if rem.len() < den.len() {
        return vec![0];
    }
    let mut quo = vec![0i64; rem.len() - dd];
    for k in (0..quo.len()).rev() {
        let c = rem[k + dd];
        quo[k] = c;
        if c != 0 {
            for (i, &d) in den.iter().enumerate() {
                rem[k + i] -= c * d;
            }
        }
    }
    debug_assert!(rem.iter().all(|&r| r == 0));
    quo
}

fn cyclotomic_poly(n: u32, memo: &mut HashMap<u32, Vec<i64>>) -> Vec<i64> {
    if let Some(p) = memo.get(&n) {
        return p.clone();
    }
    let mut p = vec![0i64; n as usize + 1];
    p[0] = -1;
    p[n as usize] = 1;
    for d in 1..n {
        if n % d == 0 {
            let q = cyclotomic_poly(d, memo);
            p = poly_div_exact(&p, &q);
        }
    }
    memo.insert(n, p.clone());
    p
}

fn build_context(n: u32) -> FieldContext {
    let mut memo = HashMap::new();
    let cyclo_poly = cyclotomic_poly(n, &mut memo);
    let phi = cyclo_poly.len() - 1;
    let count = (n as usize).max(2 * phi);
    let mut powers = Vec::with_capacity(count);
    let mut cur = vec![0i64; phi];
    cur[0] = 1;
    for _ in 0..count {
        powers.push(cur.clone());
        // multiply by x and reduce
        let top = cur[phi - 1];
        let mut next = vec![0i64; phi];
        next[1..phi].copy_from_slice(&cur[..(phi - 1)]);
        if top != 0 {
            for i in 0..phi {
                next[i] -= top * cyclo_poly[i];
            }
        }
        cur = next;
    }
    FieldContext { n, phi, cyclo_poly, powers }
}

static CONTEXTS: OnceLock<Mutex<HashMap<u32, &'static FieldContext>>> = OnceLock::new();

/// Interned context for `Q(zeta_n)`; `n = 1, 2` both give `Q`.
pub fn cyclo_context(n: u32) -> &'static FieldContext {
    assert!(n >= 1, "conductor must be positive");
    let map = CONTEXTS.get_or_init(|| Mutex::new(HashMap::new()));
    let mut guard = map.lock().expect("context registry poisoned");
    *guard.entry(n).or_insert_with(|| Box::leak(Box::new(build_context(n))))
}

impl FieldContext {
    /// Power-basis coordinates of `zeta_n^k`.
    pub fn power_coords(&self, k: i64) -> &[i64] {
        let k = k.rem_euclid(self.n as i64) as usize;
        &self.powers[k]
    }

    pub fn zeta(&'static self) -> Cyc {
        Cyc::root(self, 1)
    }

    fn reduce_table(&self, k: usize) -> &[i64] {
        &self.powers[k]
    }
}

impl PartialEq for FieldContext {
    fn eq(&self, other: &Self) -> bool {
        self.n == other.n
    }
}

pub type Coeffs = SmallVec<[Q; 8]>;

/// An element of `Q(zeta_n)` in canonical power-basis form.
#[derive(Clone)]
pub struct Cyc {
    ctx: &'static FieldContext,
    c: Coeffs,
}

impl PartialEq for Cyc {
    fn eq(&self, other: &Self) -> bool {
        self.ctx.n == other.ctx.n && self.c == other.c
    }
}

impl Eq for Cyc {}

impl std::hash::Hash for Cyc {
    fn hash<H: std::hash::Hasher>(&self, state: &mut H) {
        self.ctx.n.hash(state);
        self.c.hash(state);
    }
}

impl fmt::Debug for Cyc {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl Cyc {
    pub fn zero(ctx: &'static FieldContext) -> Cyc {
        Cyc { ctx, c: (0..ctx.phi).map(|_| Q::zero()).collect() }
    }

    pub fn one(ctx: &'static FieldContext) -> Cyc {
        Cyc::from_q(ctx, Q::one())
    }

    pub fn from_q(ctx: &'static FieldContext, q: Q) -> Cyc {
        let mut z = Cyc::zero(ctx);
        z.c[0] = q;
        z
    }

    pub fn int(ctx: &'static FieldContext, n: i64) -> Cyc {
        Cyc::from_q(ctx, Q::int(n))
    }

    pub fn rational(ctx: &'static FieldContext, n: i64, d: i64) -> Cyc {
        Cyc::from_q(ctx, Q::new(n, d))
    }

    /// `zeta_n^k` for any integer `k`.
    pub fn root(ctx: &'static FieldContext, k: i64) -> Cyc {
        let coords = ctx.power_coords(k);
        Cyc { ctx, c: coords.iter().map(|&v| Q::int(v)).collect() }
    }

    /// `q * zeta_n^k`.
    pub fn monomial(ctx: &'static FieldContext, q: Q, k: i64) -> Cyc {
        Cyc::root(ctx, k).scale(&q)
    }

    pub fn from_coeffs(ctx: &'static FieldContext, coeffs: Vec<Q>) -> Result<Cyc> {
        if coeffs.len() != ctx.phi {
            return Err(Error::Parse(format!(
                "expected {} coefficients for Q(zeta_{}), got {}",
                ctx.phi,
                ctx.n,
                coeffs.len()
            )));
        }
        Ok(Cyc { ctx, c: coeffs.into_iter().collect() })
    }

    pub fn ctx(&self) -> &'static FieldContext {
        self.ctx
    }

    pub fn coeffs(&self) -> &[Q] {
        &self.c
    }

    #[inline]
    pub fn is_zero(&self) -> bool {
        self.c.iter().all(Q::is_zero)
    }

    pub fn is_one(&self) -> bool {
        self.c[0].is_one() && self.c[1..].iter().all(Q::is_zero)
    }

    pub fn as_rational(&self) -> Option<&Q> {
        if self.c[1..].iter().all(Q::is_zero) {
            Some(&self.c[0])
        } else {
            None
        }
    }

    pub fn is_rational(&self) -> bool {
        self.as_rational().is_some()
    }

    fn check_ctx(&self, other: &Cyc) {
        assert!(
            std::ptr::eq(self.ctx, other.ctx) || self.ctx.n == other.ctx.n,
            "field context mismatch: Q(zeta_{}) vs Q(zeta_{})",
            self.ctx.n,
            other.ctx.n
        );
    }

    pub fn try_add(&self, other: &Cyc) -> Result<Cyc> {
        if self.ctx.n != other.ctx.n {
            return Err(Error::ContextMismatch(self.ctx.n, other.ctx.n));
        }
        Ok(self + other)
    }

    pub fn scale(&self, q: &Q) -> Cyc {
        if q.is_zero() {
            return Cyc::zero(self.ctx);
        }
        Cyc { ctx: self.ctx, c: self.c.iter().map(|x| x * q).collect() }
    }

    /// `self -= a * b`, the inner step of every elimination loop.
    pub fn sub_mul_assign(&mut self, a: &Cyc, b: &Cyc) {
        if a.is_zero() || b.is_zero() {
            return;
        }
        let p = a * b;
        *self -= &p;
    }

    pub fn inv(&self) -> Result<Cyc> {
        if self.is_zero() {
            return Err(Error::DivisionByZero);
        }
        if let Some(q) = self.as_rational() {
            return Ok(Cyc::from_q(self.ctx, q.recip().expect("nonzero")));
        }
        // Solve (multiplication by self) * x = e_0 over Q.
        let phi = self.ctx.phi;
        let mut m: Vec<Vec<Q>> = vec![vec![Q::zero(); phi + 1]; phi];
        for j in 0..phi {
            let col = self * &Cyc::root(self.ctx, j as i64);
            for i in 0..phi {
                m[i][j] = col.c[i].clone();
            }
        }
        m[0][phi] = Q::one();
        for col in 0..phi {
            let piv = (col..phi).find(|&r| !m[r][col].is_zero()).ok_or(Error::DivisionByZero)?;
            m.swap(col, piv);
            let inv = m[col][col].recip().expect("pivot");
            for k in col..=phi {
                m[col][k] = &m[col][k] * &inv;
            }
            for r in 0..phi {
                if r != col && !m[r][col].is_zero() {
                    let f = m[r][col].clone();
                    for k in col..=phi {
                        let d = &f * &m[col][k];
                        m[r][k] = &m[r][k] - &d;
                    }
                }
            }
        }
        Ok(Cyc { ctx: self.ctx, c: (0..phi).map(|i| m[i][phi].clone()).collect() })
    }

    pub fn pow(&self, e: i64) -> Result<Cyc> {
        let mut base = if e < 0 { self.inv()? } else { self.clone() };
        let mut e = e.unsigned_abs();
        let mut acc = Cyc::one(self.ctx);
        while e > 0 {
            if e & 1 == 1 {
                acc = &acc * &base;
            }
            e >>= 1;
            if e > 0 {
                base = &base * &base;
            }
        }
        Ok(acc)
    }

    /// Galois action `zeta_n -> zeta_n^k` for `gcd(k, n) = 1`.
    pub fn galois(&self, k: i64) -> Cyc {
        let mut out = Cyc::zero(self.ctx);
        for (i, q) in self.c.iter().enumerate() {
            if q.is_zero() {
                continue;
            }
            let coords = self.ctx.power_coords(k * i as i64);
            for (o, &v) in out.c.iter_mut().zip(coords) {
                if v != 0 {
                    *o = &*o + &(q * &Q::int(v));
                }
            }
        }
        out
    }

    /// Complex conjugation `zeta_n -> zeta_n^{-1}`.
    pub fn conj(&self) -> Cyc {
        self.galois(-1)
    }

    /// Diagnostic evaluation at `zeta_n = exp(2 pi i k / n)`.
    pub fn embed(&self, k: i64) -> (f64, f64) {
        let n = self.ctx.n as f64;
        let mut re = 0.0;
        let mut im = 0.0;
        for (i, q) in self.c.iter().enumerate() {
            if q.is_zero() {
                continue;
            }
            let ang = 2.0 * std::f64::consts::PI * (k as f64) * (i as f64) / n;
            let v = q.to_f64();
            re += v * ang.cos();
            im += v * ang.sin();
        }
        (re, im)
    }

    pub fn to_complex(&self) -> (f64, f64) {
        self.embed(1)
    }

    /// Units `k` of `Z/n` in increasing order (the complex embeddings).
    pub fn embedding_indices(ctx: &FieldContext) -> Vec<i64> {
        let n = ctx.n as i64;
        (0..n.max(1)).filter(|&k| k.gcd(&n) == 1).collect()
    }
}

impl<'a> Add<&'a Cyc> for &'a Cyc {
    type Output = Cyc;
    fn add(self, other: &Cyc) -> Cyc {
        self.check_ctx(other);
        Cyc { ctx: self.ctx, c: self.c.iter().zip(other.c.iter()).map(|(a, b)| a + b).collect() }
    }
}

impl<'a> Sub<&'a Cyc> for &'a Cyc {
    type Output = Cyc;
    fn sub(self, other: &Cyc) -> Cyc {
        self.check_ctx(other);
        Cyc { ctx: self.ctx, c: self.c.iter().zip(other.c.iter()).map(|(a, b)| a - b).collect() }
    }
}

impl AddAssign<&Cyc> for Cyc {
    fn add_assign(&mut self, other: &Cyc) {
        self.check_ctx(other);
        for (a, b) in self.c.iter_mut().zip(other.c.iter()) {
            if !b.is_zero() {
                *a = &*a + b;
            }
        }
    }
}

impl SubAssign<&Cyc> for Cyc {
    fn sub_assign(&mut self, other: &Cyc) {
        self.check_ctx(other);
        for (a, b) in self.c.iter_mut().zip(other.c.iter()) {
            if !b.is_zero() {
                *a = &*a - b;
            }
        }
    }
}

impl<'a> Mul<&'a Cyc> for &'a Cyc {
    type Output = Cyc;
    fn mul(self, other: &Cyc) -> Cyc {
        self.check_ctx(other);
        let ctx = self.ctx;
        let phi = ctx.phi;
        if let Some(q) = other.as_rational() {
            return self.scale(q);
        }
        if let Some(q) = self.as_rational() {
            return other.scale(q);
        }
        let mut conv: SmallVec<[Q; 16]> = (0..(2 * phi - 1)).map(|_| Q::zero()).collect();
        for (i, a) in self.c.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.c.iter().enumerate() {
                if b.is_zero() {
                    continue;
                }
                let p = a * b;
                conv[i + j] = &conv[i + j] + &p;
            }
        }
        let mut out: Coeffs = conv[..phi].iter().cloned().collect();
        for k in phi..(2 * phi - 1) {
            if conv[k].is_zero() {
                continue;
            }
            let coords = ctx.reduce_table(k);
            for (o, &v) in out.iter_mut().zip(coords) {
                if v != 0 {
                    *o = &*o + &(&conv[k] * &Q::int(v));
                }
            }
        }
        Cyc { ctx, c: out }
    }
}

impl<'a> Div<&'a Cyc> for &'a Cyc {
    type Output = Cyc;
    fn div(self, other: &Cyc) -> Cyc {
        self * &other.inv().expect("division by zero in Q(zeta_n)")
    }
}

impl Neg for &Cyc {
    type Output = Cyc;
    fn neg(self) -> Cyc {
        Cyc { ctx: self.ctx, c: self.c.iter().map(|a| -a).collect() }
    }
}

impl Neg for Cyc {
    type Output = Cyc;
    fn neg(self) -> Cyc {
        -&self
    }
}

macro_rules! forward_owned {
    ($tr:ident, $m:ident) => {
        impl $tr<Cyc> for Cyc {
            type Output = Cyc;
            fn $m(self, o: Cyc) -> Cyc {
                (&self).$m(&o)
            }
        }
        impl<'a> $tr<&'a Cyc> for Cyc {
            type Output = Cyc;
            fn $m(self, o: &Cyc) -> Cyc {
                (&self).$m(o)
            }
        }
        impl<'a> $tr<Cyc> for &'a Cyc {
            type Output = Cyc;
            fn $m(self, o: Cyc) -> Cyc {
                self.$m(&o)
            }
        }
    };
}
forward_owned!(Add, add);
forward_owned!(Sub, sub);
forward_owned!(Mul, mul);
forward_owned!(Div, div);

impl fmt::Display for Cyc {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for (i, q) in self.c.iter().enumerate() {
            if q.is_zero() {
                continue;
            }
            let neg = q.signum() < 0;
            let absq = if neg { -q } else { q.clone() };
            if first {
                if neg {
                    write!(f, "-")?;
                }
            } else {
                write!(f, "{}", if neg { " - " } else { " + " })?;
            }
            first = false;
            match i {
                0 => write!(f, "{absq}")?,
                _ => {
                    if !absq.is_one() {
                        write!(f, "{absq}*")?;
                    }
                    if i == 1 {
                        write!(f, "z")?;
                    } else {
                        write!(f, "z^{i}")?;
                    }
                }
            }
        }
        if first {
            write!(f, "0")?;
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn cyclotomic_polynomials() {
        assert_eq!(cyclo_context(12).cyclo_poly, vec![1, 0, -1, 0, 1]);
        assert_eq!(cyclo_context(12).phi, 4);
        assert_eq!(cyclo_context(6).cyclo_poly, vec![1, -1, 1]);
        assert_eq!(cyclo_context(1).phi, 1);
        assert_eq!(cyclo_context(2).phi, 1);
        assert_eq!(cyclo_context(24).phi, 8);
    }

    #[test]
    fn phi_divides_xn_minus_one() {
        for n in 1..40u32 {
            let ctx = cyclo_context(n);
            let mut xn = vec![0i64; n as usize + 1];
            xn[0] = -1;
            xn[n as usize] = 1;
            let q = poly_div_exact(&xn, &ctx.cyclo_poly);
            // multiply back
            let mut prod = vec![0i64; q.len() + ctx.phi];
            for (i, a) in q.iter().enumerate() {
                for (j, b) in ctx.cyclo_poly.iter().enumerate() {
                    prod[i + j] += a * b;
                }
            }
            assert_eq!(prod, xn, "n = {n}");
        }
    }

    #[test]
    fn roots_of_unity_orders() {
        let ctx = cyclo_context(12);
        let z = ctx.zeta();
        assert_eq!(z.pow(6).unwrap(), Cyc::int(ctx, -1));
        assert_eq!(z.pow(12).unwrap(), Cyc::one(ctx));
        for m in 1..12 {
            assert!(!z.pow(m).unwrap().is_one());
        }
    }

    #[test]
    fn relations() {
        let c3 = cyclo_context(3);
        let z = c3.zeta();
        let one = Cyc::one(c3);
        assert_eq!(&(&one - &z) * &(&one - &z.pow(2).unwrap()), Cyc::int(c3, 3));
        let c6 = cyclo_context(6);
        let z6 = c6.zeta();
        assert_eq!(z6.pow(2).unwrap(), &z6 - &Cyc::one(c6));
        for k in 0..12 {
            let r = Cyc::root(cyclo_context(12), k);
            assert_eq!(r.inv().unwrap(), Cyc::root(cyclo_context(12), 12 - k));
        }
    }

    #[test]
    fn inverse_of_general_element() {
        let ctx = cyclo_context(24);
        let a = &Cyc::root(ctx, 3) + &Cyc::rational(ctx, 2, 7);
        let b = &a + &Cyc::root(ctx, 5);
        let ib = b.inv().unwrap();
        assert!((&b * &ib).is_one());
    }

    #[test]
    fn display() {
        let ctx = cyclo_context(12);
        let s = &Cyc::rational(ctx, 8, 3) + &Cyc::monomial(ctx, Q::int(4), 3);
        assert_eq!(format!("{s}"), "8/3 + 4*z^3");
        assert_eq!(format!("{}", -Cyc::root(ctx, 1)), "-z");
    }
}
