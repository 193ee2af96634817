//! Prints the reproduction report for the bundled corpus.
//!
//! Usage: cargo run --release -p alpharep --example verify_paper [-- N...]

use alpharep::corpus::Corpus;
use alpharep::paper::{run_criterion, PaperOptions, CRITERIA};

fn main() {
    let only: Vec<u8> = std::env::args().skip(1).filter_map(|a| a.parse().ok()).collect();
    let corpus = Corpus::bundled();
    let opts = PaperOptions { include_stretch: true };
    for n in 1..=CRITERIA {
        if only.is_empty() || only.contains(&n) {
            println!("{}", run_criterion(&corpus, n, opts));
        }
    }
}
