//! Exact arithmetic in Q(zeta_n) and square roots inside the field.

use hopfrep::scalars::{parse_scalar, sqrt_exact, ParamSet};

fn main() {
    let ctx = ParamSet::context_for(2);
    let z = parse_scalar(ctx, "z").unwrap();
    let x = parse_scalar(ctx, "3/2*z^5").unwrap();
    println!("zeta_{} = {z}", ctx.n);
    println!("3/2 z^5 = {x}");
    println!("(3/2 z^5)^-1 = {}", x.inv().unwrap());
    println!("z^12 = {}", z.pow(12).unwrap());
    for v in ["-3", "-64", "2", "-20"] {
        let a = parse_scalar(ctx, v).unwrap();
        match sqrt_exact(&a) {
            Ok(r) => println!("sqrt({v}) = {r}"),
            Err(e) => println!("sqrt({v}): {e}"),
        }
    }
}
