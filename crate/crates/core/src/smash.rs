//! The algebra `A(lambda, mu)`: words in `a0, a1, a2` times group elements,
//! multiplied through a completed rewriting system.
//!
//! Words are ordered degree-lexicographically with `a0 < a1 < a2`. Group
//! factors sit to the right of the word.

use std::collections::{BTreeMap, HashMap};
use std::fmt;

use crate::error::{Error, Result};
use crate::grp::{irrep, regular_rep, GRep, Group, GroupElement, IrrepLabel};
use crate::linalg::Mat;
use crate::repmod::{Label, ModuleRep};
use crate::scalars::{Cyc, ParamSet};

pub type Word = Vec<u8>;

/// Safety bound on the number of rules during completion.
const MAX_RULES: usize = 200;

fn word_cmp(a: &[u8], b: &[u8]) -> std::cmp::Ordering {
    a.len().cmp(&b.len()).then_with(|| a.cmp(b))
}

/// A finite sum of `c * (word) g`; zero coefficients are never stored.
#[derive(Clone, PartialEq, Eq, Default)]
pub struct SmashElement {
    terms: BTreeMap<(Word, GroupElement), Cyc>,
}

impl SmashElement {
    pub fn zero() -> SmashElement {
        SmashElement::default()
    }

    pub fn term(w: Word, g: GroupElement, c: Cyc) -> SmashElement {
        let mut e = SmashElement::zero();
        e.add_term(w, g, c);
        e
    }

    pub fn group(p: &ParamSet, g: GroupElement) -> SmashElement {
        SmashElement::term(Vec::new(), g, p.one())
    }

    pub fn letter(p: &ParamSet, i: u8) -> SmashElement {
        SmashElement::term(vec![i], Group::new(p.ell).one(), p.one())
    }

    pub fn scalar(p: &ParamSet, c: Cyc) -> SmashElement {
        SmashElement::term(Vec::new(), Group::new(p.ell).one(), c)
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Word, &GroupElement, &Cyc)> {
        self.terms.iter().map(|((w, g), c)| (w, g, c))
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn add_term(&mut self, w: Word, g: GroupElement, c: Cyc) {
        if c.is_zero() {
            return;
        }
        let key = (w, g);
        match self.terms.get_mut(&key) {
            Some(x) => {
                *x += &c;
                if x.is_zero() {
                    self.terms.remove(&key);
                }
            }
            None => {
                self.terms.insert(key, c);
            }
        }
    }

    pub fn add(&self, o: &SmashElement) -> SmashElement {
        let mut out = self.clone();
        for ((w, g), c) in &o.terms {
            out.add_term(w.clone(), *g, c.clone());
        }
        out
    }

    pub fn scale(&self, c: &Cyc) -> SmashElement {
        let mut out = SmashElement::zero();
        for ((w, g), x) in &self.terms {
            out.add_term(w.clone(), *g, x * c);
        }
        out
    }

    pub fn sub(&self, o: &SmashElement) -> SmashElement {
        let mut out = self.clone();
        for ((w, g), c) in &o.terms {
            out.add_term(w.clone(), *g, -c);
        }
        out
    }

    /// Right multiplication by a group element.
    fn times_group(&self, grp: &Group, h: GroupElement) -> SmashElement {
        let mut out = SmashElement::zero();
        for ((w, g), c) in &self.terms {
            out.add_term(w.clone(), grp.mul(*g, h), c.clone());
        }
        out
    }

    /// The largest word present and its group components.
    fn leading(&self) -> Option<(Word, Vec<(GroupElement, Cyc)>)> {
        let top = self.terms.keys().map(|(w, _)| w).max_by(|a, b| word_cmp(a, b))?.clone();
        let comps = self.terms.iter().filter(|((w, _), _)| *w == top).map(|((_, g), c)| (*g, c.clone())).collect();
        Some((top, comps))
    }
}

impl fmt::Display for SmashElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        let mut first = true;
        for ((w, g), c) in &self.terms {
            if !first {
                write!(f, " + ")?;
            }
            first = false;
            write!(f, "({c})")?;
            for i in w {
                write!(f, "a{i}")?;
            }
            if w.is_empty() || g.a != 0 || g.b != 0 {
                write!(f, "*{g}")?;
            }
        }
        Ok(())
    }
}

impl fmt::Debug for SmashElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

/// Rewrite rules `word -> element` with every right side irreducible.
#[derive(Clone)]
pub struct RewriteSystem {
    pub params: ParamSet,
    group: Group,
    rules: BTreeMap<Word, SmashElement>,
    memo: HashMap<Word, SmashElement>,
}

impl RewriteSystem {
    fn seed(p: &ParamSet) -> RewriteSystem {
        let grp = Group::new(p.ell);
        let one = grp.one();
        let mut rules = BTreeMap::new();
        let mut mu_part = SmashElement::term(Vec::new(), one, p.mu.clone());
        mu_part.add_term(Vec::new(), grp.elem(0, 2), -&p.mu);
        for i in 0..3u8 {
            rules.insert(vec![i, i], mu_part.clone());
        }
        // a2a0 -> lambda(1 - st^2) - a0a1 - a1a2
        let mut r20 = SmashElement::term(Vec::new(), one, p.lambda.clone());
        r20.add_term(Vec::new(), grp.elem(1, 2), -&p.lambda);
        r20.add_term(vec![0, 1], one, -p.one());
        r20.add_term(vec![1, 2], one, -p.one());
        rules.insert(vec![2, 0], r20);
        // a2a1 -> lambda(1 - s^2t^2) - a1a0 - a0a2
        let mut r21 = SmashElement::term(Vec::new(), one, p.lambda.clone());
        r21.add_term(Vec::new(), grp.elem(2, 2), -&p.lambda);
        r21.add_term(vec![1, 0], one, -p.one());
        r21.add_term(vec![0, 2], one, -p.one());
        rules.insert(vec![2, 1], r21);
        RewriteSystem { params: p.clone(), group: grp, rules, memo: HashMap::new() }
    }

    pub fn rules(&self) -> impl Iterator<Item = (&Word, &SmashElement)> {
        self.rules.iter()
    }

    fn find_redex(&self, w: &[u8]) -> Option<(usize, &Word)> {
        for start in 0..w.len() {
            for (lhs, _) in &self.rules {
                if w[start..].starts_with(lhs) {
                    return Some((start, lhs));
                }
            }
        }
        None
    }

    pub fn is_irreducible(&self, w: &[u8]) -> bool {
        self.find_redex(w).is_none()
    }

    /// `(x v h) y = sign * x v (h . y) h` for each term `(v, h)` of `r`.
    fn substitute(&self, x: &[u8], r: &SmashElement, y: &[u8]) -> Vec<(Word, GroupElement, Cyc)> {
        r.terms()
            .map(|(v, h, c)| {
                let (sign, hy) = self.group.act_word(*h, y);
                let mut w = x.to_vec();
                w.extend_from_slice(v);
                w.extend(hy);
                let c = if sign < 0 { -c } else { c.clone() };
                (w, *h, c)
            })
            .collect()
    }

    /// Normal form of a bare word.
    pub fn nf_word(&mut self, w: &[u8]) -> SmashElement {
        if let Some(e) = self.memo.get(w) {
            return e.clone();
        }
        let out = match self.find_redex(w) {
            None => SmashElement::term(w.to_vec(), self.group.one(), self.params.one()),
            Some((start, lhs)) => {
                let lhs = lhs.clone();
                let r = self.rules[&lhs].clone();
                let x = &w[..start];
                let y = &w[start + lhs.len()..];
                let mut acc = SmashElement::zero();
                for (nw, h, c) in self.substitute(x, &r, y) {
                    let part = self.nf_word(&nw).times_group(&self.group, h).scale(&c);
                    acc = acc.add(&part);
                }
                acc
            }
        };
        self.memo.insert(w.to_vec(), out.clone());
        out
    }

    pub fn nf(&mut self, e: &SmashElement) -> SmashElement {
        let mut acc = SmashElement::zero();
        for (w, g, c) in e.terms() {
            acc = acc.add(&self.nf_word(w).times_group(&self.group, *g).scale(c));
        }
        acc
    }

    /// Product without tables, for use during completion.
    pub fn mul_raw(&mut self, x: &SmashElement, y: &SmashElement) -> SmashElement {
        let mut acc = SmashElement::zero();
        for (w1, g1, c1) in x.terms() {
            for (w2, g2, c2) in y.terms() {
                let (sign, gw) = self.group.act_word(*g1, w2);
                let mut w = w1.clone();
                w.extend(gw);
                let mut c = c1 * c2;
                if sign < 0 {
                    c = -c;
                }
                acc.add_term(w, self.group.mul(*g1, *g2), c);
            }
        }
        self.nf(&acc)
    }

    fn clear_memo(&mut self) {
        self.memo.clear();
    }

    /// Orients a nonzero reduced difference into a new rule.
    fn rule_from(&self, d: &SmashElement) -> Result<(Word, SmashElement)> {
        let (top, comps) = d.leading().expect("difference is nonzero");
        if comps.len() != 1 {
            return Err(Error::CompletionFailure(format!(
                "leading word {top:?} carries {} group components in {d}",
                comps.len()
            )));
        }
        let (g0, c) = comps.into_iter().next().expect("one component");
        let mut rest = d.clone();
        rest.add_term(top.clone(), g0, -&c);
        let cinv = c.inv()?;
        let rhs = rest.scale(&-cinv).times_group(&self.group, self.group.inv(g0));
        Ok((top, rhs))
    }

    /// Adds `lhs -> rhs`, retiring rules whose left side contains `lhs`;
    /// returns the differences those retirements leave to resolve.
    fn add_rule(&mut self, lhs: Word, rhs: SmashElement) -> Vec<SmashElement> {
        let retired: Vec<Word> =
            self.rules.keys().filter(|u| **u != lhs && u.windows(lhs.len()).any(|w| w == lhs.as_slice())).cloned().collect();
        let mut old = Vec::new();
        for u in retired {
            let r = self.rules.remove(&u).expect("present");
            old.push((u, r));
        }
        self.rules.insert(lhs, rhs);
        self.clear_memo();
        let mut pending = Vec::new();
        for (u, r) in old {
            let a = self.nf_word(&u);
            let b = self.nf(&r);
            pending.push(a.sub(&b));
        }
        // keep right sides reduced
        let keys: Vec<Word> = self.rules.keys().cloned().collect();
        for k in keys {
            let r = self.rules[&k].clone();
            let r2 = self.nf(&r);
            self.rules.insert(k, r2);
        }
        self.clear_memo();
        pending
    }

    /// All differences from overlaps and from the group action on rules.
    fn critical_differences(&mut self) -> Vec<SmashElement> {
        let rules: Vec<(Word, SmashElement)> = self.rules.iter().map(|(a, b)| (a.clone(), b.clone())).collect();
        let grp = self.group;
        let mut out = Vec::new();
        for (u1, r1) in &rules {
            for (u2, r2) in &rules {
                for k in 1..u1.len().min(u2.len()) {
                    if u1[u1.len() - k..] != u2[..k] {
                        continue;
                    }
                    let suffix = &u2[k..];
                    let prefix = &u1[..u1.len() - k];
                    let mut left = SmashElement::zero();
                    for (w, h, c) in self.substitute(&[], r1, suffix) {
                        left.add_term(w, h, c);
                    }
                    let mut right = SmashElement::zero();
                    for (w, h, c) in self.substitute(prefix, r2, &[]) {
                        right.add_term(w, h, c);
                    }
                    let right = self.nf(&right);
                    let d = self.nf(&left.sub(&right));
                    if !d.is_zero() {
                        out.push(d);
                    }
                }
            }
            for g in [grp.s(), grp.t()] {
                // g u g^-1 = sign (g . u) must equal g r g^-1
                let (sign, gu) = grp.act_word(g, u1);
                let lhs = self.nf_word(&gu);
                let ginv = grp.inv(g);
                let mut conj = SmashElement::zero();
                for (v, h, c) in r1.terms() {
                    let (sv, gv) = grp.act_word(g, v);
                    let c = if sv * sign < 0 { -c } else { c.clone() };
                    conj.add_term(gv, grp.mul(grp.mul(g, *h), ginv), c);
                }
                let d = lhs.sub(&self.nf(&conj));
                if !d.is_zero() {
                    out.push(d);
                }
            }
        }
        out
    }

    fn complete(&mut self) -> Result<()> {
        let mut pending: Vec<SmashElement> = Vec::new();
        loop {
            while let Some(d) = pending.pop() {
                let d = self.nf(&d);
                if d.is_zero() {
                    continue;
                }
                let (lhs, rhs) = self.rule_from(&d)?;
                pending.extend(self.add_rule(lhs, rhs));
                if self.rules.len() > MAX_RULES {
                    return Err(Error::CompletionFailure(format!("more than {MAX_RULES} rules")));
                }
            }
            let diffs = self.critical_differences();
            if diffs.is_empty() {
                return Ok(());
            }
            // resolve one at a time; the rest are recomputed next round
            pending.push(diffs.into_iter().next().expect("nonempty"));
        }
    }

    /// Irreducible words, found by extending irreducible words letter by letter.
    pub fn normal_words(&self) -> Vec<Word> {
        let mut out = vec![Vec::new()];
        let mut layer = vec![Vec::new()];
        while !layer.is_empty() {
            let mut next = Vec::new();
            for w in &layer {
                for i in 0..3u8 {
                    let mut x: Word = w.clone();
                    x.push(i);
                    if self.is_irreducible(&x) {
                        next.push(x);
                    }
                }
            }
            if next.len() > 1000 {
                break;
            }
            out.extend(next.iter().cloned());
            layer = next;
        }
        out.sort_by(|a, b| word_cmp(a, b));
        out
    }
}

/// The completed algebra with multiplication tables on the word basis.
pub struct SmashAlgebra {
    pub params: ParamSet,
    pub group: Group,
    system: RewriteSystem,
    words: Vec<Word>,
    index: HashMap<Word, usize>,
    /// `a_i * word_k`, in normal form.
    left_letter: Vec<Vec<SmashElement>>,
    /// `word_k * a_i`, in normal form.
    right_letter: Vec<Vec<SmashElement>>,
    /// `g . word_k` (conjugation), in normal form, for `g` in `{s, t}`.
    conj_s: Vec<SmashElement>,
    conj_t: Vec<SmashElement>,
}

/// Completes the rewriting system and tabulates multiplication.
pub fn build_algebra(p: &ParamSet) -> Result<SmashAlgebra> {
    let mut sys = RewriteSystem::seed(p);
    sys.complete()?;
    let words = sys.normal_words();
    let profile = degree_profile(&words);
    if words.len() != 12 || profile != [1, 3, 4, 3, 1] {
        return Err(Error::CompletionFailure(format!("{} normal words with degree profile {profile:?}", words.len())));
    }
    let index: HashMap<Word, usize> = words.iter().enumerate().map(|(k, w)| (w.clone(), k)).collect();
    let grp = Group::new(p.ell);
    let mut left_letter = vec![Vec::new(); 3];
    let mut right_letter = Vec::new();
    for w in &words {
        let mut row = Vec::new();
        for i in 0..3u8 {
            let mut x = w.clone();
            x.push(i);
            row.push(sys.nf_word(&x));
            let mut y = vec![i];
            y.extend_from_slice(w);
            left_letter[i as usize].push(sys.nf_word(&y));
        }
        right_letter.push(row);
    }
    let conj = |sys: &mut RewriteSystem, g: GroupElement| -> Vec<SmashElement> {
        words
            .iter()
            .map(|w| {
                let (sign, gw) = grp.act_word(g, w);
                let e = sys.nf_word(&gw);
                e.scale(&p.scalar(sign as i64))
            })
            .collect()
    };
    let conj_s = conj(&mut sys, grp.s());
    let conj_t = conj(&mut sys, grp.t());
    Ok(SmashAlgebra { params: p.clone(), group: grp, system: sys, words, index, left_letter, right_letter, conj_s, conj_t })
}

fn degree_profile(words: &[Word]) -> Vec<usize> {
    let top = words.iter().map(Vec::len).max().unwrap_or(0);
    (0..=top).map(|d| words.iter().filter(|w| w.len() == d).count()).collect()
}

impl SmashAlgebra {
    pub fn words(&self) -> &[Word] {
        &self.words
    }

    pub fn word_index(&self, w: &[u8]) -> Option<usize> {
        self.index.get(w).copied()
    }

    pub fn dim(&self) -> usize {
        self.words.len() * self.group.order()
    }

    pub fn degree_profile(&self) -> Vec<usize> {
        degree_profile(&self.words)
    }

    pub fn rewrite_system(&self) -> &RewriteSystem {
        &self.system
    }

    /// A copy of the rewriting system for ad hoc reductions.
    pub fn reducer(&self) -> RewriteSystem {
        self.system.clone()
    }

    /// `g * w * g^{-1}` for a normal word via the tables; `g` any element.
    fn conj_word(&self, g: GroupElement, k: usize) -> SmashElement {
        // g = s^a t^b acts as s^a (t^b .)
        let mut cur = SmashElement::term(self.words[k].clone(), self.group.one(), self.params.one());
        for _ in 0..g.b {
            cur = self.conj_elem(&cur, true);
        }
        for _ in 0..g.a {
            cur = self.conj_elem(&cur, false);
        }
        cur
    }

    fn conj_elem(&self, e: &SmashElement, by_t: bool) -> SmashElement {
        let gen = if by_t { self.group.t() } else { self.group.s() };
        let table = if by_t { &self.conj_t } else { &self.conj_s };
        let gi = self.group.inv(gen);
        let mut out = SmashElement::zero();
        for (w, h, c) in e.terms() {
            let k = self.index[w];
            let h2 = self.group.mul(self.group.mul(gen, *h), gi);
            out = out.add(&table[k].times_group(&self.group, h2).scale(c));
        }
        out
    }

    /// Left multiplication by a group element.
    pub fn group_times(&self, g: GroupElement, e: &SmashElement) -> SmashElement {
        let mut out = SmashElement::zero();
        for (w, h, c) in e.terms() {
            let k = self.index[w];
            let conj = self.conj_word(g, k);
            out = out.add(&conj.times_group(&self.group, self.group.mul(g, *h)).scale(c));
        }
        out
    }

    /// Left multiplication by `a_i`.
    pub fn letter_times(&self, i: u8, e: &SmashElement) -> SmashElement {
        let mut out = SmashElement::zero();
        for (w, h, c) in e.terms() {
            let k = self.index[w];
            out = out.add(&self.left_letter[i as usize][k].times_group(&self.group, *h).scale(c));
        }
        out
    }

    /// Right multiplication by `a_i`.
    fn times_letter(&self, e: &SmashElement, i: u8) -> SmashElement {
        let mut out = SmashElement::zero();
        for (w, h, c) in e.terms() {
            let (sign, j) = self.group.act_letter(*h, i);
            let k = self.index[w];
            let c = if sign < 0 { -c } else { c.clone() };
            out = out.add(&self.right_letter[k][j as usize].times_group(&self.group, *h).scale(&c));
        }
        out
    }

    /// Normal-form product; both factors must be in normal form.
    pub fn a_mul(&self, x: &SmashElement, y: &SmashElement) -> SmashElement {
        let mut out = SmashElement::zero();
        for (w, g, c) in y.terms() {
            let mut cur = x.clone();
            for &i in w {
                cur = self.times_letter(&cur, i);
            }
            out = out.add(&cur.times_group(&self.group, *g).scale(c));
        }
        out
    }

    /// Normal form of an arbitrary element.
    pub fn normalize(&self, e: &SmashElement) -> SmashElement {
        let mut sys = self.system.clone();
        sys.nf(e)
    }

    pub fn letter(&self, i: u8) -> SmashElement {
        SmashElement::letter(&self.params, i)
    }

    pub fn group_elem(&self, g: GroupElement) -> SmashElement {
        SmashElement::group(&self.params, g)
    }

    /// `A (x)_G V` on the basis `w_k (x) v_m`, index `k * dim V + m`.
    pub fn induced_module(&self, v: &GRep, label: Option<Label>) -> Result<ModuleRep> {
        let p = &self.params;
        let d = v.dim();
        let nw = self.words.len();
        let n = nw * d;
        let ctx = p.ctx;
        let mut cache: HashMap<GroupElement, Mat> = HashMap::new();
        let mut rho = |g: GroupElement| cache.entry(g).or_insert_with(|| v.act(g)).clone();
        let mut build = |f: &dyn Fn(usize) -> SmashElement| -> Mat {
            let mut m = Mat::zeros(ctx, n, n);
            for k in 0..nw {
                let img = f(k);
                for (w, h, c) in img.terms() {
                    let kk = self.index[w];
                    let r = rho(*h);
                    for a in 0..d {
                        for b in 0..d {
                            let x = r.get(a, b);
                            if !x.is_zero() {
                                let e = m.get_mut(kk * d + a, k * d + b);
                                *e += &(c * x);
                            }
                        }
                    }
                }
            }
            m
        };
        let unit = |k: usize| SmashElement::term(self.words[k].clone(), self.group.one(), p.one());
        let s = build(&|k| self.group_times(self.group.s(), &unit(k)));
        let t = build(&|k| self.group_times(self.group.t(), &unit(k)));
        let a0 = build(&|k| self.letter_times(0, &unit(k)));
        ModuleRep::new(p, s, t, a0, label)
    }

    /// `A(S)` for an irrep `S`.
    pub fn induced_irrep(&self, s: IrrepLabel) -> Result<ModuleRep> {
        self.induced_module(&irrep(&self.params, s), Some(Label::Induced(s)))
    }

    /// The left regular module, of dimension `72 l`.
    pub fn regular_module(&self) -> Result<ModuleRep> {
        self.induced_module(&regular_rep(&self.params), Some(Label::Other("A".into())))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::seq::SliceRandom;
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    fn reduce_random(sys: &RewriteSystem, e: &SmashElement, rng: &mut ChaCha8Rng) -> SmashElement {
        let mut cur = e.clone();
        loop {
            let reducible: Vec<(Word, GroupElement, Cyc)> = cur
                .terms()
                .filter(|(w, _, _)| !sys.is_irreducible(w))
                .map(|(w, g, c)| (w.clone(), *g, c.clone()))
                .collect();
            let Some((w, g, c)) = reducible.choose(rng).cloned() else { return cur };
            let mut spots = Vec::new();
            for start in 0..w.len() {
                for (lhs, _) in sys.rules() {
                    if w[start..].starts_with(lhs) {
                        spots.push((start, lhs.clone()));
                    }
                }
            }
            let (start, lhs) = spots.choose(rng).cloned().expect("reducible");
            let r = sys.rules.get(&lhs).expect("rule").clone();
            cur.add_term(w.clone(), g, -&c);
            for (nw, h, cc) in sys.substitute(&w[..start], &r, &w[start + lhs.len()..]) {
                cur.add_term(nw, sys.group.mul(h, g), &cc * &c);
            }
        }
    }

    #[test]
    fn seed_rules_and_examples() {
        let p = ParamSet::int(2, 1, 2);
        let alg = build_algebra(&p).unwrap();
        let grp = alg.group;
        let a0 = alg.letter(0);
        let sq = alg.a_mul(&a0, &a0);
        let mut expect = SmashElement::term(Vec::new(), grp.one(), p.mu.clone());
        expect.add_term(Vec::new(), grp.elem(0, 2), -&p.mu);
        assert_eq!(sq, expect);
        let t = alg.group_elem(grp.t());
        let mut minus_a0_t = SmashElement::term(vec![0], grp.t(), -p.one());
        assert_eq!(alg.a_mul(&t, &a0), minus_a0_t);
        minus_a0_t = alg.a_mul(&alg.a_mul(&alg.group_elem(grp.s()), &a0), &alg.group_elem(grp.elem(2, 0)));
        assert_eq!(minus_a0_t, alg.letter(1));
        let (a1, a2) = (alg.letter(1), alg.letter(2));
        let cyc = alg.a_mul(&a0, &a1).add(&alg.a_mul(&a1, &a2)).add(&alg.a_mul(&a2, &a0));
        let mut rhs = SmashElement::term(Vec::new(), grp.one(), p.lambda.clone());
        rhs.add_term(Vec::new(), grp.elem(1, 2), -&p.lambda);
        assert_eq!(cyc, rhs);
        let one = alg.group_elem(grp.one());
        assert_eq!(alg.a_mul(&one, &cyc), cyc);
    }

    #[test]
    fn dimensions() {
        for ell in 1..=4 {
            for (hb, mu) in [(1, 1), (0, 0), (1, 6), (0, 1)] {
                let p = ParamSet::int(ell, hb, mu);
                let alg = build_algebra(&p).unwrap();
                assert_eq!(alg.dim(), 72 * ell);
                assert_eq!(alg.degree_profile(), vec![1, 3, 4, 3, 1]);
            }
        }
    }

    #[test]
    fn confluence_on_short_words() {
        let p = ParamSet::int(2, 1, 6);
        let alg = build_algebra(&p).unwrap();
        let mut sys = alg.reducer();
        let mut rng = ChaCha8Rng::seed_from_u64(7);
        let mut words: Vec<Word> = vec![Vec::new()];
        for _ in 0..5 {
            let next: Vec<Word> = words.iter().flat_map(|w| (0..3u8).map(move |i| [w.clone(), vec![i]].concat())).collect();
            for w in &next {
                let e = SmashElement::term(w.clone(), alg.group.one(), p.one());
                let nf = sys.nf_word(w);
                for _ in 0..2 {
                    assert_eq!(reduce_random(&sys, &e, &mut rng), nf, "{w:?}");
                }
            }
            words = next;
        }
    }

    #[test]
    fn associativity_sample() {
        let p = ParamSet::int(2, 1, 2);
        let alg = build_algebra(&p).unwrap();
        let g = alg.group;
        let gens = [alg.letter(0), alg.letter(1), alg.letter(2), alg.group_elem(g.s()), alg.group_elem(g.t())];
        for x in &gens {
            for y in &gens {
                for z in &gens {
                    let l = alg.a_mul(&alg.a_mul(x, y), z);
                    let r = alg.a_mul(x, &alg.a_mul(y, z));
                    assert_eq!(l, r);
                }
            }
        }
    }

    #[test]
    fn induced_restrictions() {
        let p = ParamSet::int(2, 1, 1);
        let alg = build_algebra(&p).unwrap();
        let m = alg.induced_irrep(IrrepLabel::S(1, crate::grp::Sign::Plus)).unwrap();
        assert_eq!(m.dim(), 12);
        let mult = crate::grp::multiplicities(&p, &m.group_rep()).unwrap();
        use crate::grp::Sign::*;
        assert_eq!(mult, vec![(IrrepLabel::S(1, Plus), 2), (IrrepLabel::S(1, Minus), 2), (IrrepLabel::M(1), 4)]);
        assert_eq!(alg.induced_irrep(IrrepLabel::M(0)).unwrap().dim(), 24);
    }

    #[test]
    fn regular_module_verifies() {
        for (ell, hb, mu) in [(1, 1, 1), (2, 1, 6), (2, 0, 0)] {
            let p = ParamSet::int(ell, hb, mu);
            let alg = build_algebra(&p).unwrap();
            let reg = alg.regular_module().unwrap();
            assert_eq!(reg.dim(), 72 * ell);
            assert!(reg.verify().is_ok());
        }
    }
}
