//! Kronecker products against the closed-form blocks, duals and the grading.

use hopfrep::repmod::{enumerate_simples, is_isomorphic, j_component};
use hopfrep::scalars::ParamSet;
use hopfrep::tenscat::{check_tensor_formula, dual, product_shape, twist, MixedForm};

fn main() {
    let p = ParamSet::int(3, 1, 1);
    let cat = enumerate_simples(&p);
    let (m, n) = (&cat.simples[6], &cat.simples[14]);
    let w = check_tensor_formula(m, n).unwrap();
    let (mf, nf) = (MixedForm::from_module(m).unwrap(), MixedForm::from_module(n).unwrap());
    println!("{} (x) {}: shape {:?}", m.name(), n.name(), product_shape(&mf, &nf));
    let degrees: Vec<usize> = j_component(&w.product).unwrap().iter().map(|c| c.0).collect();
    println!("  product lives in degree {degrees:?}");
    let d = dual(m).unwrap();
    let dd = dual(&d).unwrap();
    println!("  dual lives in degree {:?}", j_component(&d).unwrap().iter().map(|c| c.0).collect::<Vec<_>>());
    println!("  double dual is the sign twist: {}", is_isomorphic(&dd, &twist(m)).is_some());
}
