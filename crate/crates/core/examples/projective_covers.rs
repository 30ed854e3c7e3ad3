//! Projective covers of the simples and the per-degree dimension identity.

use hopfrep::homext::{cover_report, induced_iso_check};
use hopfrep::scalars::ParamSet;
use hopfrep::smash::build_algebra;

fn main() {
    for (ell, hbar, mu) in [(2, 1, 1), (2, 1, -2), (2, 0, 0)] {
        let p = ParamSet::int(ell, hbar, mu);
        let alg = build_algebra(&p).unwrap();
        let (_, covers, id) = cover_report(&alg).unwrap();
        println!("{}", p.describe());
        for c in &covers {
            println!("  P({}) has dimension {}", c.label, c.cover_dim);
        }
        println!("  per degree {:?}, total {}", id.per_degree, id.total);
        for j in p.nonzero_degrees() {
            println!("  A(S_{j}^+) = A(S_{j}^-) via (a0+a1+a2): {:?}", induced_iso_check(&alg, j).unwrap());
        }
    }
}
