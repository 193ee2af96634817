//! Computes the character table of the bundled J1 and writes it in the
//! table file format. Slow; the acceptance suite only reads the result.
//!
//! Usage: cargo run --release -p alpharep --example gen_j1_table -- <j1.grp> <out.tbl>

fn main() {
    let args: Vec<String> = std::env::args().skip(1).collect();
    let [grp, out] = args.as_slice() else { panic!("usage: gen_j1_table <j1.grp> <out.tbl>") };
    let g = alpharep::perm::io::parse_group(&std::fs::read_to_string(grp).unwrap()).unwrap();
    assert_eq!(g.order(), 175_560);
    let t = std::time::Instant::now();
    let table = alpharep::chartable::compute_table_dixon_with_bound(&g, g.order()).unwrap();
    std::fs::write(out, alpharep::chartable::io::format_table(&table)).unwrap();
    println!("wrote {out} in {:?}", t.elapsed());
}
