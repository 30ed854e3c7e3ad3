//! Runs the verification battery and prints one line per criterion.

use hopfrep::battery::run_all;
use hopfrep::repmod::DEFAULT_SEED;

fn main() {
    for r in run_all(DEFAULT_SEED) {
        println!("{:>2} {} {}", r.id, if r.passed { "pass" } else { "FAIL" }, r.title);
        for d in r.details.iter().take(4) {
            println!("     {d}");
        }
    }
}
