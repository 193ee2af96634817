//! Writes the bundled group files other than J1.
//!
//! Usage: cargo run -p alpharep --example gen_corpus -- <dir>

use alpharep::perm::io::format_group;
use alpharep::perm::named::{affine_general, alternating, cyclic, direct_product, mathieu11, pgaml2, psl2, sl2_3, symmetric};
use alpharep::perm::{PermGroup, Permutation};

fn group(deg: usize, gens: &[&str]) -> PermGroup {
    PermGroup::with_degree(deg, gens.iter().map(|s| Permutation::parse(s, deg).unwrap()).collect()).unwrap()
}

/// Heisenberg group mod 3 on F_3²: two translations and a shear.
fn heisenberg3() -> PermGroup {
    let pt = |a: usize, b: usize| (a % 3) * 3 + (b % 3);
    let make = |f: &dyn Fn(usize, usize) -> usize| {
        Permutation::from_images((0..9).map(|i| f(i / 3, i % 3) as u32).collect()).unwrap()
    };
    PermGroup::new(vec![make(&|a, b| pt(a + 1, b)), make(&|a, b| pt(a, b + 1)), make(&|a, b| pt(a, b + a))]).unwrap()
}

fn main() {
    let dir = std::path::PathBuf::from(std::env::args().nth(1).expect("output directory"));
    let groups = vec![
        ("a5", "A5", alternating(5)),
        ("s5", "S5", symmetric(5)),
        ("s4", "S4", symmetric(4)),
        ("a4", "A4", alternating(4)),
        ("s3", "S3", symmetric(3)),
        ("z6", "Z6", cyclic(6)),
        ("q8", "Q8", group(8, &["(1 3 2 4)(5 7 6 8)", "(1 5 2 6)(3 8 4 7)"])),
        ("d8", "D8", group(4, &["(1 2 3 4)", "(1 3)"])),
        ("sl2_3", "SL(2,3)", sl2_3()),
        ("f20", "F20", group(5, &["(1 2 3 4 5)", "(2 3 5 4)"])),
        ("agl3_2", "AGL(3,2)", affine_general(3, 2).unwrap()),
        ("psl2_8", "PSL(2,8)", psl2(8).unwrap()),
        ("pgaml2_8", "PGammaL(2,8)", pgaml2(8).unwrap()),
        ("psl2_11", "PSL(2,11)", psl2(11).unwrap()),
        ("m11", "M11", mathieu11()),
        ("a5xz7", "A5xZ7", direct_product(&alternating(5), &cyclic(7))),
        ("z2xz3", "Z2xZ3", direct_product(&cyclic(2), &cyclic(3))),
        ("es27", "3^(1+2)", heisenberg3()),
        ("s9", "S9", symmetric(9)),
    ];
    for (file, name, g) in groups {
        let g = g.named(name);
        std::fs::write(dir.join(format!("{file}.grp")), format_group(&g)).unwrap();
        println!("{file}: order {}", g.order());
    }
}
