use super::io::{format_table, parse_table};
use super::*;
use crate::cyclo::parse_cyclotomic;
use crate::perm::named::{alternating, cyclic, symmetric};
use crate::perm::{coset_action, GroupAction, PermGroup, Permutation};

fn group(deg: usize, gens: &[&str]) -> PermGroup {
    PermGroup::new(gens.iter().map(|s| Permutation::parse(s, deg).unwrap()).collect()).unwrap()
}

fn c(s: &str) -> Cyclotomic {
    parse_cyclotomic(s).unwrap()
}

fn q8() -> PermGroup {
    group(8, &["(1 3 2 4)(5 7 6 8)", "(1 5 2 6)(3 8 4 7)"])
}

const A5_PRINTED: &str = "\
group A5
classes 5
sizes 1 15 20 12 12
orders 1 2 3 5 5
chi_1: 1 1 1 1 1
chi_2: 3 -1 0 -E(5)-E(5)^4 1+E(5)+E(5)^4
chi_3: 3 -1 0 1+E(5)+E(5)^4 -E(5)-E(5)^4
chi_4: 4 0 1 -1 -1
chi_5: 5 1 -1 0 0
";

#[test]
fn a5_degrees_and_golden_entries() {
    let t = compute_table_dixon(&alternating(5)).unwrap();
    assert_eq!(t.degrees(), vec![1, 3, 3, 4, 5]);
    let printed = parse_table(A5_PRINTED, None).unwrap();
    assert!(t.equivalent_to(&printed));
    let phi = c("1+E(5)+E(5)^4");
    let three = t.irreducible(1);
    assert!(three.values().contains(&phi));
    // (1+√5)/2 satisfies x² = x + 1
    assert_eq!(&phi * &phi, &phi + &Cyclotomic::one());
}

/// Brute-force oracle: the 2-dimensional character of S3 is the fixed-point
/// count on three letters minus one, computed element by element.
#[test]
fn s3_against_fixed_points() {
    let s3 = symmetric(3);
    let t = compute_table_dixon(&s3).unwrap();
    assert_eq!(t.degrees(), vec![1, 1, 2]);
    let two = t.irreducible(2);
    for rep in &t.classes().representatives {
        let fixed = rep.fixed_points() as i64;
        assert_eq!(t.value_at(two, rep).unwrap(), Cyclotomic::from_integer(fixed - 1));
    }
    let mut vals: Vec<i64> = two.values().iter().map(|v| v.to_integer().unwrap()).collect();
    vals.sort();
    assert_eq!(vals, vec![-1, 0, 2]);
}

#[test]
fn z4_linear_characters() {
    let t = compute_table_dixon(&cyclic(4)).unwrap();
    assert_eq!(t.degrees(), vec![1; 4]);
    let allowed = ["1", "-1", "E(4)", "-E(4)"].map(c);
    for chi in t.irreducibles() {
        assert!(chi.values().iter().all(|v| allowed.contains(v)));
    }
    assert_eq!(t.irreducibles().iter().filter(|chi| !chi.is_rational()).count(), 2);
}

#[test]
fn tables_of_small_groups_satisfy_sum_of_squares() {
    for g in [symmetric(4), symmetric(5), alternating(4), q8(), cyclic(6)] {
        let t = compute_table_dixon(&g).unwrap();
        let s: i64 = t.degrees().iter().map(|d| d * d).sum();
        assert_eq!(s as u128, g.order());
        for chi in t.irreducibles() {
            assert_eq!(t.inner_product_int(chi, chi).unwrap(), 1);
        }
    }
}

#[test]
fn bound_is_enforced() {
    let s8 = symmetric(8);
    assert!(matches!(compute_table_dixon(&s8), Err(Error::BoundExceeded { .. })));
}

#[test]
fn file_round_trip_and_corruption() {
    let t = compute_table_dixon(&symmetric(5)).unwrap();
    let text = format_table(&t);
    let back = parse_table(&text, None).unwrap();
    assert_eq!(back.irreducibles(), t.irreducibles());
    assert!(back.equivalent_to(&t));
    let corrupted = text.replacen("chi_2: 1 -1", "chi_2: 1 1", 1);
    assert_ne!(corrupted, text);
    assert!(matches!(parse_table(&corrupted, None), Err(Error::TableRejected(_))));
    let attached = parse_table(&text, Some(symmetric(5))).unwrap();
    assert!(attached.group().is_some());
}

#[test]
fn permutation_characters_and_burnside() {
    let a5 = alternating(5);
    let t = compute_table_dixon(&a5).unwrap();
    let a4 = a5.subgroup(vec![Permutation::parse("(1 2 3)", 5).unwrap(), Permutation::parse("(2 3 4)", 5).unwrap()]).unwrap();
    let pi = t.permutation_character(&coset_action(&a5, &a4).unwrap()).unwrap();
    assert_eq!(pi.degree, 5);
    // Burnside: orbit count is the average number of fixed points.
    let mut total = 0usize;
    a5.for_each_element(|g| {
        total += g.fixed_points();
        true
    });
    assert_eq!(total as u128 / a5.order(), 1);
    assert_eq!(t.inner_product_int(&pi.character, &t.trivial()).unwrap(), 1);
    let aug = t.augmentation_character(&coset_action(&a5, &a4).unwrap()).unwrap();
    assert_eq!(t.decompose(&aug).unwrap(), vec![0, 0, 0, 1, 0]);

    let d5 = a5.subgroup(vec![Permutation::parse("(1 2 3 4 5)", 5).unwrap(), Permutation::parse("(2 5)(3 4)", 5).unwrap()]).unwrap();
    let action = coset_action(&a5, &d5).unwrap();
    let pi = t.permutation_character(&action).unwrap();
    assert_eq!(pi.degree, 6);
    assert_eq!(t.inner_product_int(&pi.character, &pi.character).unwrap(), 2);
    assert!(action.is_two_transitive());
    assert!(t.is_irreducible(&t.augmentation_character(&action).unwrap()));
}

#[test]
fn two_transitivity_matches_rank_two() {
    let s5 = symmetric(5);
    let t = compute_table_dixon(&s5).unwrap();
    let s4 = s5.subgroup(vec![Permutation::parse("(1 2 3 4)", 5).unwrap(), Permutation::parse("(1 2)", 5).unwrap()]).unwrap();
    let natural = GroupAction::natural(&s5);
    for action in [natural, coset_action(&s5, &s4).unwrap(), crate::perm::pair_action(&s5).unwrap()] {
        let pi = t.permutation_character(&action).unwrap();
        let rank2 = t.inner_product_int(&pi.character, &pi.character).unwrap() == 2;
        assert_eq!(rank2, action.is_two_transitive());
        let aug = t.augmentation_character(&action).unwrap();
        assert_eq!(rank2, t.is_irreducible(&aug));
    }
}

#[test]
fn restriction_induction_and_reciprocity() {
    let s5 = symmetric(5);
    let a5 = alternating(5);
    let ts = compute_table_dixon(&s5).unwrap();
    let ta = compute_table_dixon(&a5).unwrap();
    assert_eq!(ts.restrict(&ts.trivial(), &ta).unwrap(), ta.trivial());
    for chi in ts.irreducibles() {
        let r = ts.restrict(chi, &ta).unwrap();
        for psi in ta.irreducibles() {
            let ind = ts.induce(psi, &ta).unwrap();
            assert_eq!(ts.inner_product(&ind, chi), ta.inner_product(psi, &r));
        }
        // index 2: either irreducible restriction or a sum of two conjugates
        let n = ta.inner_product_int(&r, &r).unwrap();
        assert!(n == 1 || n == 2);
    }
    // degree-6 character of S5 restricts to the two degree-3 characters
    let six = ts.irreducibles().iter().find(|x| x.degree().unwrap() == 6).unwrap();
    assert_eq!(ta.decompose(&ts.restrict(six, &ta).unwrap()).unwrap(), vec![0, 1, 1, 0, 0]);
    let not_sub = group(5, &["(1 2)"]);
    let t_ns = compute_table_dixon(&not_sub.named("C2")).unwrap();
    assert!(ta.fusion_from(&t_ns).is_err());
}

#[test]
fn q8_induced_from_cyclic_four() {
    let g = q8();
    let tg = compute_table_dixon(&g).unwrap();
    let z4 = g.subgroup(vec![Permutation::parse("(1 3 2 4)(5 7 6 8)", 8).unwrap()]).unwrap();
    let tz = compute_table_dixon(&z4).unwrap();
    let faithful = tz.irreducibles().iter().find(|chi| !chi.is_rational()).unwrap();
    let ind = tg.induce(faithful, &tz).unwrap();
    assert!(tg.is_irreducible(&ind));
    assert_eq!(ind.degree().unwrap(), 2);
    // 1_H^G is the permutation character on cosets
    let pi = tg.permutation_character(&coset_action(&g, &z4).unwrap()).unwrap();
    assert_eq!(tg.induce(&tz.trivial(), &tz).unwrap(), pi.character);
}

#[test]
fn symmetric_and_alternating_squares() {
    let s5 = symmetric(5);
    let t = compute_table_dixon(&s5).unwrap();
    let four = t.augmentation_character(&GroupAction::natural(&s5)).unwrap();
    for chi in t.irreducibles() {
        let s = t.sym_square(chi).unwrap();
        let a = t.alt_square(chi).unwrap();
        assert_eq!(&s + &a, t.tensor(chi, chi));
        assert!(t.is_character(&s));
    }
    let a5 = alternating(5);
    let sign = t.sign_character(&a5).unwrap();
    let twisted = t.sign_twist(&four, &a5).unwrap();
    assert!(t.is_irreducible(&twisted));
    assert_ne!(twisted, four);
    assert_eq!(t.tensor(&t.trivial(), &four), four);
    assert_eq!(t.tensor(&sign, &sign), t.trivial());
    // Sym²(V⁻) = 1 ⊕ V ⊕ (degree 5)
    let sym = t.sym_square(&twisted).unwrap();
    let m = t.decompose(&sym).unwrap();
    let parts: Vec<i64> = (0..m.len()).filter(|&i| m[i] > 0).map(|i| t.degrees()[i]).collect();
    assert_eq!(parts.iter().sum::<i64>(), 10);
    assert!(m[0] == 1 && m[t.irreducibles().iter().position(|x| *x == four).unwrap()] == 1);
}

#[test]
fn galois_orbits() {
    let t = compute_table_dixon(&alternating(5)).unwrap();
    assert_eq!(t.galois_orbit(t.irreducible(1)).len(), 2);
    assert!(t.galois_orbit(t.irreducible(1)).contains(t.irreducible(2)));
    assert_eq!(t.galois_orbit(t.irreducible(3)), vec![t.irreducible(3).clone()]);
}
