use alpharep::alpha::{orbit_types, AlphaEngine, TableCharacter};
use alpharep::chartable::io::{attach_group, format_table, parse_table};
use alpharep::chartable::compute_table_dixon;
use alpharep::corpus::{Corpus, Tag};
use alpharep::paper::{run_criterion, Outcome, PaperOptions};
use alpharep::perm::io::{format_group, parse_group};
use alpharep::Error;

#[test]
fn tables_survive_a_file_round_trip() {
    let corpus = Corpus::bundled();
    for key in ["a5", "s4", "q8", "f20", "psl2_8"] {
        let g = corpus.get(key).unwrap().group().unwrap();
        let t = compute_table_dixon(&g).unwrap();
        let back = attach_group(parse_table(&format_table(&t), None).unwrap(), g).unwrap();
        assert!(back.same_values_as(&t), "{key}");
        assert_eq!(format_table(&back), format_table(&t), "{key}");
    }
}

#[test]
fn group_files_round_trip() {
    for e in &Corpus::bundled().entries {
        let g = e.group().unwrap();
        let again = parse_group(&format_group(&g)).unwrap();
        assert_eq!(again.order(), g.order(), "{}", e.key);
        assert_eq!(again.generators(), g.generators());
    }
}

#[test]
fn perturbed_expected_values_fail_by_name() {
    let mut c = Corpus::bundled();
    c.get_mut("a5").unwrap().expected[1].alpha = 3;
    let r = run_criterion(&c, 1, PaperOptions::default());
    assert_eq!(r.outcome, Outcome::Fail);
    assert!(r.to_string().contains("Table 1"));

    let mut c = Corpus::bundled();
    c.get_mut("s5").unwrap().expected[1].alpha = 5;
    assert_eq!(run_criterion(&c, 2, PaperOptions::default()).outcome, Outcome::Fail);
}

#[test]
fn unknown_criterion_fails() {
    assert_eq!(run_criterion(&Corpus::bundled(), 15, PaperOptions::default()).outcome, Outcome::Fail);
}

// Sylow-local α against the gcd of orbit-type indices, on the small
// 2-transitive corpus groups.
#[test]
fn local_alpha_matches_orbit_type_gcd() {
    let corpus = Corpus::bundled();
    for e in corpus.entries.iter().filter(|e| e.has(Tag::TwoTransitive) && !e.has(Tag::Stretch)) {
        let g = e.group().unwrap();
        if g.order() > 120 {
            continue;
        }
        let t = e.table().unwrap();
        let engine = AlphaEngine::new(&g);
        for j in 0..t.irreducibles().len() {
            let chi = TableCharacter::irreducible(&t, j).unwrap();
            assert_eq!(engine.alpha(&chi).unwrap().alpha, orbit_types(&chi).unwrap().alpha(), "{} chi_{}", e.key, j + 1);
        }
    }
}

#[test]
fn dixon_respects_its_bound() {
    let g = Corpus::bundled().get("s9").unwrap().group().unwrap();
    assert!(matches!(compute_table_dixon(&g), Err(Error::BoundExceeded { .. })));
}
