//! Completes the rewriting system and reports the normal words of A.

use hopfrep::scalars::ParamSet;
use hopfrep::smash::build_algebra;

fn main() {
    for ell in 1..=4 {
        let p = ParamSet::int(ell, 1, 1);
        let alg = build_algebra(&p).unwrap();
        let words: Vec<String> = alg
            .words()
            .iter()
            .map(|w| if w.is_empty() { "1".into() } else { w.iter().map(|i| format!("a{i}")).collect() })
            .collect();
        println!("l={ell}: dim A = {}, degrees {:?}", alg.dim(), alg.degree_profile());
        if ell == 1 {
            println!("  normal words: {}", words.join(" "));
        }
    }
    let alg = build_algebra(&ParamSet::int(2, 1, 1)).unwrap();
    let reg = alg.regular_module().unwrap();
    println!("regular module of dimension {} verifies: {}", reg.dim(), reg.verify().is_ok());
}
