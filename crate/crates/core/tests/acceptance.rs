//! One PASS/FAIL line per criterion. Stretch criteria are run and reported
//! but do not fail the target.

use alpharep::corpus::Corpus;
use alpharep::paper::{run_criterion, PaperOptions, CRITERIA};

fn main() {
    let corpus = Corpus::bundled();
    let opts = PaperOptions { include_stretch: true };
    let mut failed = Vec::new();
    for n in 1..=CRITERIA {
        let r = run_criterion(&corpus, n, opts);
        println!("{r}");
        if !r.passed() && !r.stretch {
            failed.push(n);
        }
    }
    if failed.is_empty() {
        println!("acceptance: all required criteria pass");
    } else {
        println!("acceptance: failing criteria {failed:?}");
        std::process::exit(1);
    }
}
