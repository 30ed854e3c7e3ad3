//! Separated Ext quivers, their Dynkin types and the representation type.

use hopfrep::quiverrt::rep_type;
use hopfrep::scalars::ParamSet;

fn main() {
    for (ell, hbar, mu) in [(2, 0, 0), (2, 1, 1), (2, 1, 6), (2, 1, -2), (2, 0, 1)] {
        let p = ParamSet::int(ell, hbar, mu);
        let r = rep_type(&p).unwrap();
        println!("{}: {} => {}", p.describe(), r.summary(), r.verdict);
    }
    let r = rep_type(&ParamSet::int(1, 1, 1)).unwrap();
    print!("{}", r.separated.to_dot());
}
