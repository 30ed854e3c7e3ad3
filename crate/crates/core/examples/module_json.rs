//! Writes a module as JSON, reloads it and checks a tampered copy.

use hopfrep::repmod::{l_ac, ModuleRep};
use hopfrep::grp::Sign;
use hopfrep::scalars::ParamSet;

fn main() {
    let p = ParamSet::int(2, 1, 1);
    let m = l_ac(&p, 1, Sign::Plus, Sign::Minus).unwrap();
    let text = serde_json::to_string(&m.to_json()).unwrap();
    println!("{text}");
    let back = ModuleRep::from_json(&serde_json::from_str(&text).unwrap(), false).unwrap();
    println!("round trip identical: {}", serde_json::to_string(&back.to_json()).unwrap() == text);
    let mut bad = back.clone();
    bad.a0.set(0, 0, p.scalar(5));
    println!("tampered copy violates: {:?}", bad.violations());
}
