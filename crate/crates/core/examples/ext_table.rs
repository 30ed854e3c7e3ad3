//! First extension groups between simples, with one explicit extension.

use hopfrep::homext::{ext1, ext_table};
use hopfrep::repmod::{enumerate_simples, is_indecomposable};
use hopfrep::scalars::ParamSet;

fn main() {
    let p = ParamSet::int(2, 1, 1);
    let cat = enumerate_simples(&p);
    let table = ext_table(&cat, false).unwrap();
    print!("{}", table.to_text());
    let (l, t) = (&cat.simples[6], &cat.simples[10]);
    let e = ext1(t, l).unwrap();
    let rep = &e.representatives[0];
    println!(
        "Ext({}, {}) has dimension {}; representative of dimension {} indecomposable: {}",
        t.name(),
        l.name(),
        e.dim,
        rep.dim(),
        is_indecomposable(rep)
    );
}
