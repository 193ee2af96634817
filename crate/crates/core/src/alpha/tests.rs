use super::*;
use crate::chartable::compute_table_dixon;
use crate::perm::named::{alternating, cyclic, direct_product, symmetric};
use crate::perm::{PermGroup, Permutation, SubgroupLattice};
use crate::util::gcd_all;

fn group(deg: usize, gens: &[&str]) -> PermGroup {
    PermGroup::new(gens.iter().map(|s| Permutation::parse(s, deg).unwrap()).collect()).unwrap()
}

fn q8() -> PermGroup {
    group(8, &["(1 3 2 4)(5 7 6 8)", "(1 5 2 6)(3 8 4 7)"])
}

fn d8() -> PermGroup {
    group(4, &["(1 2 3 4)", "(1 3)"])
}

/// SL(2,3) acting on the 8 nonzero vectors of F_3².
fn sl23() -> PermGroup {
    let vectors: Vec<(i64, i64)> = (0..9).map(|i| (i / 3, i % 3)).filter(|&v| v != (0, 0)).collect();
    let matrix = |m: [[i64; 2]; 2]| {
        let images = vectors
            .iter()
            .map(|&(x, y)| {
                let w = ((m[0][0] * x + m[0][1] * y).rem_euclid(3), (m[1][0] * x + m[1][1] * y).rem_euclid(3));
                vectors.iter().position(|&v| v == w).unwrap() as u32
            })
            .collect();
        Permutation::from_images(images).unwrap()
    };
    PermGroup::new(vec![matrix([[1, 1], [0, 1]]), matrix([[0, 2], [1, 0]])]).unwrap()
}

fn two_dim(t: &CharacterTable) -> usize {
    t.degrees().iter().position(|&d| d == 2).unwrap()
}

/// Oracle: gcd of [G:H] over all subgroups H with V^H ≠ 0, with character
/// sums taken element by element.
fn oracle_alpha(chi: &dyn GroupCharacter) -> u128 {
    let lattice = SubgroupLattice::compute(chi.group()).unwrap();
    let en = lattice.enumerated();
    let mut indices = Vec::new();
    for c in 0..lattice.class_count() {
        for member in lattice.class_members(c) {
            let els: Vec<Permutation> = member.iter().map(|i| en.element(i as u32).clone()).collect();
            let s = chi.sum_over(&els).unwrap().to_integer().unwrap();
            if s > 0 {
                indices.push(lattice.class_index(c) as u128);
            }
        }
    }
    gcd_all(indices)
}

#[test]
fn fixed_space_dims() {
    let g = q8();
    let t = compute_table_dixon(&g).unwrap();
    let chi = TableCharacter::irreducible(&t, two_dim(&t)).unwrap();
    let centre = g.subgroup(vec![Permutation::parse("(1 2)(3 4)(5 6)(7 8)", 8).unwrap()]).unwrap();
    assert_eq!(fixed_space_dim(&chi, &centre).unwrap(), 0);
    assert_eq!(fixed_space_dim(&chi, &PermGroup::trivial(8)).unwrap(), 2);

    let d = d8();
    let td = compute_table_dixon(&d).unwrap();
    let chi = TableCharacter::irreducible(&td, two_dim(&td)).unwrap();
    let reflection = d.subgroup(vec![Permutation::parse("(1 3)", 4).unwrap()]).unwrap();
    assert_eq!(fixed_space_dim(&chi, &reflection).unwrap(), 1);
    let outside = group(4, &["(1 2)"]);
    assert!(fixed_space_dim(&chi, &outside).is_err());
}

#[test]
fn q8_and_d8_share_a_table_but_not_alpha() {
    let tq = compute_table_dixon(&q8()).unwrap();
    let td = compute_table_dixon(&d8()).unwrap();
    assert!(tq.same_values_as(&td));
    assert!(!tq.equivalent_to(&td));
    let aq = alpha(&TableCharacter::irreducible(&tq, two_dim(&tq)).unwrap()).unwrap();
    let ad = alpha(&TableCharacter::irreducible(&td, two_dim(&td)).unwrap()).unwrap();
    assert_eq!(aq.alpha, 8);
    assert_eq!(ad.alpha, 4);
    assert_eq!(aq.locals[0].witness.order(), 1);
    assert_eq!(ad.locals[0].witness.order(), 2);
}

#[test]
fn a5_alpha_column_and_local_parts() {
    let g = alternating(5);
    let t = compute_table_dixon(&g).unwrap();
    let engine = AlphaEngine::new(&g);
    let alphas: Vec<u128> = engine.alpha_all(&t).unwrap().iter().map(|r| r.alpha).collect();
    assert_eq!(alphas, vec![1, 2, 2, 5, 1]);
    let four = TableCharacter::irreducible(&t, 3).unwrap();
    let local = engine.alpha_p(&four, 5).unwrap();
    assert_eq!(local.value, 5);
    assert_eq!(local.witness.order(), 1);
}

#[test]
fn s5_alpha_by_degree() {
    let g = symmetric(5);
    let t = compute_table_dixon(&g).unwrap();
    let mut pairs: Vec<(i64, u128)> =
        AlphaEngine::new(&g).alpha_all(&t).unwrap().iter().zip(t.degrees()).map(|(r, d)| (d, r.alpha)).collect();
    pairs.sort();
    assert_eq!(pairs, vec![(1, 1), (1, 2), (4, 5), (4, 10), (5, 1), (5, 1), (6, 2)]);
}

#[test]
fn sylow_formula_matches_subgroup_oracle() {
    let mut groups = vec![symmetric(3), symmetric(4), alternating(4), alternating(5), q8(), d8(), cyclic(6), sl23()];
    groups.push(direct_product(&cyclic(2), &cyclic(3)));
    for g in groups {
        let t = compute_table_dixon(&g).unwrap();
        let engine = AlphaEngine::new(&g);
        for (j, report) in engine.alpha_all(&t).unwrap().iter().enumerate() {
            let chi = TableCharacter::irreducible(&t, j).unwrap();
            assert_eq!(report.alpha, oracle_alpha(&chi), "group of order {} character {}", g.order(), j + 1);
            assert_eq!(orbit_types(&chi).unwrap().alpha(), report.alpha);
            for l in &report.locals {
                assert_eq!(crate::util::prime_power(l.value).map_or(1, |(p, _)| p), if l.value == 1 { 1 } else { l.prime });
            }
        }
    }
}

#[test]
fn orbit_types_of_a5_and_a4() {
    let g = alternating(5);
    let t = compute_table_dixon(&g).unwrap();
    let lat = orbit_types(&TableCharacter::irreducible(&t, 3).unwrap()).unwrap();
    assert_eq!(lat.orders(), vec![12, 6, 3, 2, 1]);
    // (G) on top of the two maximal nodes, (1) under both small cyclic nodes.
    assert_eq!(lat.edges_with_top.iter().filter(|e| e.1 == lat.nodes.len()).count(), 2);
    assert_eq!(lat.edges.len(), 6);
    let lat = orbit_types(&TableCharacter::irreducible(&t, 1).unwrap()).unwrap();
    assert_eq!(lat.orders(), vec![5, 3, 2, 1]);

    let a4 = alternating(4);
    let t4 = compute_table_dixon(&a4).unwrap();
    let three = t4.degrees().iter().position(|&d| d == 3).unwrap();
    let lat = orbit_types(&TableCharacter::irreducible(&t4, three).unwrap()).unwrap();
    assert_eq!(lat.orders(), vec![3, 2, 1]);
    let r = is_realizable(&TableCharacter::irreducible(&t4, three).unwrap()).unwrap();
    assert!(matches!(r, Realizability::NotRealizable { alpha: 2 }));

    let triv = orbit_types(&TableCharacter::irreducible(&t4, 0).unwrap()).unwrap();
    assert_eq!(triv.orders(), vec![12]);
}

#[test]
fn realizability() {
    for g in [q8(), d8(), cyclic(6)] {
        let t = compute_table_dixon(&g).unwrap();
        for j in 0..t.class_count() {
            let r = is_realizable(&TableCharacter::irreducible(&t, j).unwrap()).unwrap();
            assert_eq!(r.is_realizable(), Some(true));
        }
    }
    // Z6 = Z2 × Z3 with ψ₁⊗1 ⊕ 1⊗ψ₂
    let g = direct_product(&cyclic(2), &cyclic(3));
    let t = compute_table_dixon(&g).unwrap();
    let a = t.class_function_from(|x| Cyclotomic::from_integer(if x.apply(0) == 0 { 1 } else { -1 })).unwrap();
    let w = Cyclotomic::root_of_unity(3, 1).unwrap();
    let b = t
        .class_function_from(|x| {
            let k = (0..3).find(|&k| x.apply(2) == 2 + k).unwrap();
            w.pow(k as i64).unwrap()
        })
        .unwrap();
    assert!(t.is_irreducible(&a) && t.is_irreducible(&b));
    let sum = &a + &b;
    let r = is_realizable(&TableCharacter::new(&t, sum).unwrap()).unwrap();
    assert!(matches!(r, Realizability::NotRealizable { alpha: 1 }));
}

#[test]
fn direct_sums() {
    let t = compute_table_dixon(&alternating(5)).unwrap();
    let r = direct_sum_alpha(&t, &[t.irreducible(1).clone(), t.irreducible(3).clone()]).unwrap();
    assert_eq!((r.gcd, r.direct), (1, 1));
    let r = direct_sum_alpha(&t, &[t.irreducible(3).clone(), t.irreducible(3).clone()]).unwrap();
    assert_eq!((r.gcd, r.direct), (5, 5));

    let s3 = symmetric(3);
    let ts = compute_table_dixon(&s3).unwrap();
    let h = s3.subgroup(vec![Permutation::parse("(1 2)", 3).unwrap()]).unwrap();
    let th = compute_table_dixon(&h).unwrap();
    let induced = ts.induce(th.irreducible(1), &th).unwrap();
    let parts: Vec<ClassFunction> = ts
        .decompose(&induced)
        .unwrap()
        .iter()
        .enumerate()
        .filter(|(_, &m)| m > 0)
        .map(|(j, _)| ts.irreducible(j).clone())
        .collect();
    let r = direct_sum_alpha(&ts, &parts).unwrap();
    assert_eq!(r.components, vec![2, 3]);
    assert!(r.agrees() && r.direct == 1);
}

#[test]
fn solvability_and_trivial_scan() {
    let r = solvability_crosscheck(&compute_table_dixon(&sl23()).unwrap()).unwrap();
    assert!(r.derived_series_solvable && r.all_nontrivial_alpha_gt_1 && r.agree);
    for g in [alternating(5), symmetric(5)] {
        let r = solvability_crosscheck(&compute_table_dixon(&g).unwrap()).unwrap();
        assert!(!r.derived_series_solvable && !r.all_nontrivial_alpha_gt_1 && r.agree);
    }
    assert!(!totally_trivial_scan(&compute_table_dixon(&alternating(5)).unwrap()).unwrap());
    assert!(!totally_trivial_scan(&compute_table_dixon(&symmetric(4)).unwrap()).unwrap());
}

#[test]
fn induction_from_normal_subgroups() {
    let s5 = symmetric(5);
    let a5 = alternating(5);
    let ts = compute_table_dixon(&s5).unwrap();
    let ta = compute_table_dixon(&a5).unwrap();
    let r = induction_alpha_checks(&ts, &ta, ta.irreducible(4)).unwrap();
    assert_eq!(r.alpha_omega, 1);
    assert!(r.holds());
    assert_eq!(r.constituents.len(), 2);
    assert!(r.constituents.iter().all(|c| c.2 == 1));

    let g = q8();
    let z4 = g.subgroup(vec![Permutation::parse("(1 3 2 4)(5 7 6 8)", 8).unwrap()]).unwrap();
    let tg = compute_table_dixon(&g).unwrap();
    let tz = compute_table_dixon(&z4).unwrap();
    let faithful = tz.irreducibles().iter().find(|c| !c.is_rational()).unwrap();
    let r = induction_alpha_checks(&tg, &tz, faithful).unwrap();
    assert_eq!((r.alpha_omega, r.alpha_induced), (4, 8));
    assert!(r.holds());

    let not_normal = s5.subgroup(vec![Permutation::parse("(1 2)", 5).unwrap()]).unwrap();
    let tn = compute_table_dixon(&not_normal).unwrap();
    assert!(induction_alpha_checks(&ts, &tn, tn.irreducible(1)).is_err());
}

#[test]
fn a5_times_z7_induction() {
    let a5 = alternating(5);
    let g = direct_product(&a5, &cyclic(7));
    let n = g.subgroup(a5.generators().iter().map(|x| crate::perm::named::join_permutations(x, &Permutation::identity(7))).collect()).unwrap();
    let tg = compute_table_dixon(&g).unwrap();
    let tn = compute_table_dixon(&n).unwrap();
    let five = tn.degrees().iter().position(|&d| d == 5).unwrap();
    let r = induction_alpha_checks(&tg, &tn, tn.irreducible(five)).unwrap();
    assert!(r.holds());
    let mut alphas: Vec<u128> = r.constituents.iter().map(|c| c.2).collect();
    alphas.sort();
    assert_eq!(alphas, vec![1, 7, 7, 7, 7, 7, 7]);
}

#[test]
fn outer_tensor_products() {
    let z2 = cyclic(2);
    let z3 = cyclic(3);
    let t2 = compute_table_dixon(&z2).unwrap();
    let t3 = compute_table_dixon(&z3).unwrap();
    let r = tensor_alpha_checks(&t2, t2.irreducible(1), &t3, t3.irreducible(1)).unwrap();
    assert_eq!(r.alpha_tensor, 6);
    assert!(r.holds());

    let g = q8();
    let tq = compute_table_dixon(&g).unwrap();
    let r = tensor_alpha_checks(&tq, tq.irreducible(two_dim(&tq)), &t3, t3.irreducible(1)).unwrap();
    assert_eq!(r.alpha_tensor, 24);
    // Oracle on the product group itself.
    let product = direct_product(&g, &z3);
    let left = TableCharacter::irreducible(&tq, two_dim(&tq)).unwrap();
    let right = TableCharacter::irreducible(&t3, 1).unwrap();
    let tensor = OuterTensor::new(product, left, right).unwrap();
    assert_eq!(oracle_alpha(&tensor), 24);
}

/// Heisenberg group mod 3 on F_3²: translations and a shear.
fn heisenberg3() -> PermGroup {
    let pt = |a: usize, b: usize| (a % 3) * 3 + (b % 3);
    let make = |f: &dyn Fn(usize, usize) -> usize| {
        Permutation::from_images((0..9).map(|i| f(i / 3, i % 3) as u32).collect()).unwrap()
    };
    PermGroup::new(vec![make(&|a, b| pt(a + 1, b)), make(&|a, b| pt(a, b + 1)), make(&|a, b| pt(a, b + a))]).unwrap()
}

#[test]
fn extraspecial_tensor_square() {
    let h = heisenberg3();
    assert_eq!(h.order(), 27);
    let t = compute_table_dixon(&h).unwrap();
    let three = t.degrees().iter().position(|&d| d == 3).unwrap();
    let r = tensor_alpha_checks(&t, t.irreducible(three), &t, t.irreducible(three)).unwrap();
    assert_eq!((r.alpha_left, r.alpha_right), (9, 9));
    assert_eq!(r.alpha_tensor, 27);
    assert!(r.holds());
}

#[test]
fn restriction_and_galois_invariance() {
    let s5 = symmetric(5);
    let a5 = alternating(5);
    let ts = compute_table_dixon(&s5).unwrap();
    let ta = compute_table_dixon(&a5).unwrap();
    let es = AlphaEngine::new(&s5);
    let ea = AlphaEngine::new(&a5);
    for j in 0..ts.class_count() {
        let a = es.alpha(&TableCharacter::irreducible(&ts, j).unwrap()).unwrap().alpha;
        let r = ts.restrict(ts.irreducible(j), &ta).unwrap();
        let b = ea.alpha(&TableCharacter::new(&ta, r).unwrap()).unwrap().alpha;
        assert_eq!(a % b, 0);
    }
    for j in 0..ta.class_count() {
        let a = ea.alpha(&TableCharacter::irreducible(&ta, j).unwrap()).unwrap().alpha;
        for conj in ta.galois_orbit(ta.irreducible(j)) {
            assert_eq!(ea.alpha(&TableCharacter::new(&ta, conj).unwrap()).unwrap().alpha, a);
        }
    }
}
