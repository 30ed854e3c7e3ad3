//! Composition factors of the induced modules A (x)_G S.

use hopfrep::grp::IrrepLabel;
use hopfrep::repmod::{composition_factors, enumerate_simples};
use hopfrep::scalars::ParamSet;
use hopfrep::smash::build_algebra;

fn main() {
    let p = ParamSet::int(2, 1, 6);
    let alg = build_algebra(&p).unwrap();
    let cat = enumerate_simples(&p);
    for s in IrrepLabel::all(p.ell) {
        let m = alg.induced_irrep(s).unwrap();
        let cf = composition_factors(&m, &cat.simples).unwrap();
        let parts: Vec<String> = cf.iter().map(|(l, k)| format!("{l}^{k}")).collect();
        println!("A({s}) [dim {}]: {}", m.dim(), parts.join(" "));
    }
}
