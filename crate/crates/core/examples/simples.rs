//! The simple modules in each parameter regime.

use hopfrep::repmod::{enumerate_simples, is_simple};
use hopfrep::scalars::ParamSet;

fn main() {
    for (ell, hbar, mu) in [(2, 0, 0), (2, 1, 1), (2, 1, 6), (2, 1, -2), (2, 0, 1)] {
        let p = ParamSet::int(ell, hbar, mu);
        let cat = enumerate_simples(&p);
        let names: Vec<String> = cat.simples.iter().map(|m| format!("{}[{}]", m.name(), m.dim())).collect();
        let all_simple = cat.simples.iter().all(is_simple);
        println!("{} ({:?}): {} simples, all simple: {all_simple}", p.describe(), cat.regime, cat.simples.len());
        println!("  {}", names.join(" "));
    }
}
