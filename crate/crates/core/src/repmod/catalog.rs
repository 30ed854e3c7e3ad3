//! The list of simple modules for each parameter regime.

use crate::error::Error;
use crate::grp::{IrrepLabel, Sign};
use crate::scalars::{ParamSet, Regime};

use super::named::{graded_simple, l0, l_ac, n_representatives, t_j};
use super::ModuleRep;

#[derive(Debug)]
pub struct Catalog {
    pub regime: Regime,
    pub simples: Vec<ModuleRep>,
    /// Degrees whose six-dimensional simples could not be built.
    pub missing: Vec<(usize, Error)>,
}

impl Catalog {
    pub fn is_complete(&self) -> bool {
        self.missing.is_empty()
    }

    /// Simples living in degree `j`.
    pub fn at_degree(&self, j: usize) -> Vec<&ModuleRep> {
        self.simples.iter().filter(|m| m.label.as_ref().and_then(|l| l.degree()) == Some(j)).collect()
    }

    /// The expected count for the regime.
    pub fn expected_len(&self, ell: usize) -> usize {
        match &self.regime {
            Regime::Graded => 3 * ell,
            Regime::LambdaThirds => 5 * ell + 1,
            Regime::LambdaZero => 2 * ell + 1,
            Regime::Generic { collapsed } => 2 * ell + 4 - collapsed.len(),
        }
    }
}

/// The simple modules up to isomorphism.
pub fn enumerate_simples(p: &ParamSet) -> Catalog {
    let regime = p.regime();
    let mut simples = Vec::new();
    let mut missing = Vec::new();
    let lac = |j: usize, out: &mut Vec<ModuleRep>| {
        for a in Sign::both() {
            for c in Sign::both() {
                out.push(l_ac(p, j, a, c).expect("L_j(a,c) exists in this regime"));
            }
        }
    };
    match &regime {
        Regime::Graded => {
            for s in IrrepLabel::all(p.ell) {
                simples.push(graded_simple(p, s).expect("graded simples always exist"));
            }
        }
        _ => {
            simples.push(l0(p, Sign::Plus));
            simples.push(l0(p, Sign::Minus));
            match &regime {
                Regime::LambdaThirds => {
                    for j in 0..p.ell {
                        lac(j, &mut simples);
                    }
                    for j in p.nonzero_degrees() {
                        simples.push(t_j(p, j).expect("T_j exists when 3 mu = lambda"));
                    }
                }
                Regime::LambdaZero => {
                    simples.push(l_ac(p, 0, Sign::Plus, Sign::Plus).expect("L_0(0,0) exists"));
                }
                _ => lac(0, &mut simples),
            }
            if !matches!(regime, Regime::LambdaThirds) {
                for j in p.nonzero_degrees() {
                    match n_representatives(p, j) {
                        Ok(ns) => simples.extend(ns),
                        Err(e) => missing.push((j, e)),
                    }
                }
            }
        }
    }
    Catalog { regime, simples, missing }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::repmod::{is_isomorphic, is_simple};

    #[test]
    fn counts_and_pairwise_distinct() {
        for (ell, hb, mu, expect) in [(2, 0, 0, 6), (2, 1, 1, 11), (2, 1, 6, 8), (2, 1, -2, 7), (2, 0, 1, 5), (3, 1, 1, 16)] {
            let p = ParamSet::int(ell, hb, mu);
            let c = enumerate_simples(&p);
            assert!(c.is_complete(), "{:?}", c.missing);
            assert_eq!(c.simples.len(), expect, "{}", p.describe());
            assert_eq!(c.expected_len(ell), expect);
            for (i, x) in c.simples.iter().enumerate() {
                assert!(is_simple(x), "{}", x.name());
                for y in &c.simples[i + 1..] {
                    assert!(is_isomorphic(x, y).is_none(), "{} ~ {}", x.name(), y.name());
                }
            }
        }
    }
}
