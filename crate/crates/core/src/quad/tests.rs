use itertools::Itertools;

use super::*;
use crate::alpha::AlphaEngine;
use crate::chartable::compute_table_dixon;
use crate::cyclo::{rat, Cyclotomic, Rational};
use crate::groebner::parse_polynomial;
use crate::perm::GroupAction;
use crate::twotrans::AugmentationCharacter;

fn q(v: &[(i64, i64)]) -> Vec<Rational> {
    v.iter().map(|&(a, b)| rat(a, b)).collect()
}

fn polys(texts: &[&str], n: usize) -> Vec<crate::groebner::Polynomial> {
    texts.iter().map(|t| parse_polynomial(t, n).unwrap()).collect()
}

/// (M ⊗ M) on n² coordinates, read back on the pair basis.
fn kronecker_sym_square(m: &Matrix<Rational>) -> Matrix<Rational> {
    let n = m.rows();
    let pairs = sym_pairs(n);
    let mut out = Matrix::zeros(pairs.len(), pairs.len());
    for (c, &(i, j)) in pairs.iter().enumerate() {
        let mut input = vec![rat(0, 1); n * n];
        input[i * n + j] = rat(1, 1);
        input[j * n + i] = rat(1, 1);
        if i == j {
            input[i * n + i] = rat(1, 1);
        }
        let mut image = vec![rat(0, 1); n * n];
        for a in 0..n {
            for b in 0..n {
                if input[a * n + b] == rat(0, 1) {
                    continue;
                }
                for k in 0..n {
                    for l in 0..n {
                        image[k * n + l] += &input[a * n + b] * m.get(k, a) * m.get(l, b);
                    }
                }
            }
        }
        for (r, &(k, l)) in pairs.iter().enumerate() {
            out.set(r, c, image[k * n + l].clone());
        }
    }
    out
}

#[test]
fn sym_square_agrees_with_kronecker_oracle() {
    let ms = [
        vec![vec![1, 2], vec![3, 4]],
        vec![vec![0, -1, 2], vec![5, 1, 0], vec![-3, 2, 7]],
        vec![vec![2, 0, 0, 1], vec![1, 1, 0, 0], vec![0, -1, 3, 0], vec![0, 0, 1, -2]],
    ];
    for rows in ms {
        let m = Matrix::from_rows(rows.iter().map(|r| r.iter().map(|&x| rat(x, 1)).collect()).collect()).unwrap();
        assert_eq!(sym_square_matrix(&m), kronecker_sym_square(&m));
    }
}

#[test]
fn rep_files_and_homomorphism_check() {
    let h = MatrixRep::parse(Q8_H_REP).unwrap();
    assert_eq!((h.dim(), h.group().order()), (2, 8));
    assert!(!h.is_rational());
    assert!(h.sym_square().is_rational());
    let again = MatrixRep::parse(&h.to_text()).unwrap();
    assert_eq!(again.generators(), h.generators());

    // j ↦ identity breaks j² = i²
    let bad = Q8_H_REP.replace("0 -1\n1 0", "1 0\n0 1");
    assert!(matches!(MatrixRep::parse(&bad), Err(crate::Error::CheckFailed(_))));
    assert!(MatrixRep::parse("name x\ngenerator (1 2)\n1").is_err());
    assert!(MatrixRep::parse("degree 2\n1 0").is_err());
    assert!(MatrixRep::parse("degree 2\ngenerator (1 2)\n1 0\n0").is_err());

    let vm = MatrixRep::parse(S5_VMINUS_REP).unwrap();
    assert_eq!(vm.generators(), sign_twisted_rep(5).unwrap().generators());
}

/// Sylvester resultant of two binary quadratic forms by cofactor expansion.
fn resultant(p: &crate::groebner::Polynomial, r: &crate::groebner::Polynomial) -> Rational {
    let co = |f: &crate::groebner::Polynomial| [f.coefficient(&[2, 0]), f.coefficient(&[1, 1]), f.coefficient(&[0, 2])];
    let (a, b) = (co(p), co(r));
    let z = rat(0, 1);
    let rows = vec![
        vec![a[0].clone(), a[1].clone(), a[2].clone(), z.clone()],
        vec![z.clone(), a[0].clone(), a[1].clone(), a[2].clone()],
        vec![b[0].clone(), b[1].clone(), b[2].clone(), z.clone()],
        vec![z.clone(), b[0].clone(), b[1].clone(), b[2].clone()],
    ];
    fn det(m: &[Vec<Rational>]) -> Rational {
        if m.len() == 1 {
            return m[0][0].clone();
        }
        (0..m.len())
            .map(|c| {
                let minor: Vec<Vec<Rational>> =
                    m[1..].iter().map(|row| row.iter().enumerate().filter(|&(k, _)| k != c).map(|(_, x)| x.clone()).collect()).collect();
                let s = if c % 2 == 0 { rat(1, 1) } else { rat(-1, 1) };
                s * &m[0][c] * det(&minor)
            })
            .sum()
    }
    det(&rows)
}

#[test]
fn quaternion_maps() {
    let h = MatrixRep::parse(Q8_H_REP).unwrap();
    let t = compute_table_dixon(h.group()).unwrap();
    let u = h.sym_square();
    let e1 = q(&[(1, 2), (0, 1), (1, 2)]);
    let e2 = q(&[(1, 2), (0, 1), (-1, 2)]);
    let e3 = q(&[(0, 1), (1, 2), (0, 1)]);
    let cyc = |v: &[Rational]| v.iter().map(|x| Cyclotomic::from_rational(x.clone())).collect::<Vec<_>>();
    let cases = [
        ([&e1, &e2], ["x1^2 + x2^2", "x1^2 - x2^2"]),
        ([&e2, &e3], ["x1^2 - x2^2", "2*x1*x2"]),
        ([&e1, &e3], ["x1^2 + x2^2", "2*x1*x2"]),
    ];
    for (basis, expected) in cases {
        let target = subspace_character(&u, &t, &[cyc(basis[0]), cyc(basis[1])]).unwrap();
        assert_eq!(t.decompose(&target).unwrap().iter().sum::<i64>(), 2);
        let map = quad_map_build(&h, &t, &target).unwrap();
        assert!(map.is_equivariant());
        let f = map.in_basis(&[basis[0].clone(), basis[1].clone()]).unwrap();
        assert_eq!(f.components, polys(&expected, 2));
        assert!(f.is_equivariant());
        assert!(f.admissibility().unwrap().admissible);
        assert_ne!(resultant(&f.components[0], &f.components[1]), rat(0, 1));
    }
    // e1 alone gives a map with a nontrivial zero
    let one = subspace_character(&u, &t, &[cyc(&e1)]).unwrap();
    let map = quad_map_build(&h, &t, &one).unwrap();
    assert!(!map.admissibility().unwrap().admissible);
    // a basis outside the image is rejected
    let map = quad_map_build(&h, &t, &subspace_character(&u, &t, &[cyc(&e1), cyc(&e2)]).unwrap()).unwrap();
    assert!(map.in_basis(&[e1.clone(), e3.clone()]).is_err());
    assert!(subspace_character(&u, &t, &[q(&[(1, 1), (1, 1), (0, 1)]).iter().cloned().map(Cyclotomic::from_rational).collect()]).is_err());

    let a = AlphaEngine::new(h.group());
    let hchar = crate::alpha::TableCharacter::new(&t, h.character(&t).unwrap()).unwrap();
    let alpha = a.alpha(&hchar).unwrap().alpha;
    assert_eq!(alpha, 8);
    assert_eq!(congruence_report(alpha, 2, 2, "").unwrap().to_string(), "deg ≡ 4 (mod 8)");
}

#[test]
fn s5_projection_and_map() {
    let vm = MatrixRep::parse(S5_VMINUS_REP).unwrap();
    let t = compute_table_dixon(vm.group()).unwrap();
    let target = t.class_function_from(|g| Cyclotomic::from_integer(g.fixed_points() as i64 - 1)).unwrap();
    let sym = t.sym_square(&vm.character(&t).unwrap()).unwrap();
    let mut parts: Vec<i64> =
        t.decompose(&sym).unwrap().iter().enumerate().filter(|(_, &m)| m > 0).map(|(j, &m)| m * t.degrees()[j]).collect();
    parts.sort();
    assert_eq!(parts, vec![1, 4, 5]);

    let map = quad_map_build(&vm, &t, &target).unwrap();
    let a = map.projection.clone().unwrap();
    let printed = Matrix::from_rows(crate::paper::S5_PRINTED_PROJECTION.iter().map(|r| r.iter().map(|&x| rat(x, 15)).collect()).collect()).unwrap();
    assert_ne!(a, printed);
    assert_eq!(a.transpose(), printed);
    assert_eq!(a.trace(), rat(4, 1));
    assert_eq!(map.target_dim(), 4);
    assert!(map.is_equivariant());
    assert!(map.admissibility().unwrap().admissible);

    // the full square is the identity projection
    let all = quad_map_build(&vm, &t, &sym).unwrap();
    assert_eq!(all.projection.unwrap(), Matrix::identity(10));
    // a constituent missing from Sym² is rejected
    let sign = t.class_function_from(|g| Cyclotomic::from_integer(g.sign() as i64)).unwrap();
    assert!(quad_map_build(&vm, &t, &sign).is_err());
    let zero = QuadraticMap::zero(map.source_generators.clone(), map.target_generators.clone()).unwrap();
    assert!(zero.is_equivariant());
    assert!(!zero.admissibility().unwrap().admissible);
}

#[test]
fn norton_structure() {
    for n in 3..=8 {
        let alg = NortonAlgebra::new(n).unwrap();
        let c = alg.checks();
        assert!(c.all(), "n = {n}: {c:?}");
        assert_eq!(c.rank, n - 1);
        assert!(pairing_identity_holds(n));
    }
    assert!(NortonAlgebra::new(2).is_err());
}

/// Every z in {-2..2}ⁿ with Σ z = 0, sorted by whether Σ z_k f_k squares to zero.
fn brute_nilpotents(n: usize) -> Vec<Vec<i64>> {
    let alg = NortonAlgebra::new(n).unwrap();
    (0..n)
        .map(|_| -2..=2i64)
        .multi_cartesian_product()
        .filter(|z| z.iter().sum::<i64>() == 0 && z.iter().any(|&x| x != 0))
        .filter(|z| alg.is_nilpotent(&alg.embed(&z.iter().map(|&x| rat(x, 1)).collect::<Vec<_>>())))
        .collect()
}

#[test]
fn nilpotents_match_brute_force() {
    for n in [5, 7] {
        let r = nilpotents(n).unwrap();
        assert_eq!(r.kind, NilpotentKind::Trivial);
        assert!(r.verified);
        assert!(brute_nilpotents(n).is_empty());
    }
    let r = nilpotents(6).unwrap();
    assert!(r.verified);
    let NilpotentKind::Family(sets) = &r.kind else { panic!("expected a family") };
    assert_eq!(sets.len(), 20);
    let found = brute_nilpotents(6);
    // ±1 and ±2 multiples of the 20 sign patterns
    assert_eq!(found.len(), 40);
    for z in &found {
        let a = z[0].abs();
        assert!(z.iter().all(|x| x.abs() == a));
        let set: Vec<usize> = (0..6).filter(|&k| z[k] > 0).collect();
        assert!(sets.contains(&set));
    }

    let r = nilpotents(4).unwrap();
    assert_eq!(r.kind, NilpotentKind::Everything);
    assert!(r.verified);
    assert_eq!(brute_nilpotents(4).len(), (0..4).map(|_| -2..=2i64).multi_cartesian_product().filter(|z| z.iter().sum::<i64>() == 0).count() - 1);
}

#[test]
fn norton_map_admissible_for_odd_n() {
    for n in [4, 5, 6, 7, 9] {
        let g = symmetric_group(n).unwrap();
        let map = NortonAlgebra::new(n).unwrap().square_map(g.generators()).unwrap();
        assert!(map.is_equivariant());
        assert_eq!(map.admissibility().unwrap().admissible, n % 2 == 1, "n = {n}");
    }
}

#[test]
fn twist_reduction() {
    for n in [3, 5, 6, 7] {
        let r = reduce_vminus_to_v(n).unwrap();
        assert!(r.holds(), "n = {n}: {r:?}");
        assert_eq!(r.signs, vec![-1, if n % 2 == 1 { 1 } else { -1 }]);
    }
    // spot check φ(ρ⁻(g)x) = ρ(g)φ(x) at an element that is not a generator
    let n = 7;
    let alg = NortonAlgebra::new(n).unwrap();
    let map = alg.square_map(&[]).unwrap();
    let g = crate::perm::Permutation::parse("(1 4 2)(3 6)(5 7)", n).unwrap();
    assert_eq!(g.sign(), 1);
    let h = crate::perm::Permutation::parse("(1 3)(2 5 6 4)", n).unwrap();
    let x = q(&[(3, 1), (-1, 2), (2, 3), (0, 1), (5, 1), (-7, 4)]);
    for s in [g, h] {
        let m = alg.w_matrix(&s);
        let sign = rat(s.sign() as i64, 1);
        let moved: Vec<Rational> = m.apply(&x).into_iter().map(|v| v * &sign).collect();
        assert_eq!(map.evaluate(&moved), m.apply(&map.evaluate(&x)));
    }
    // W and V have the same character
    let g = symmetric_group(5).unwrap();
    let t = compute_table_dixon(&g).unwrap();
    let alg = NortonAlgebra::new(5).unwrap();
    let w = t.class_function_from(|s| Cyclotomic::from_rational(alg.w_matrix(s).trace())).unwrap();
    assert_eq!(w, standard_rep(5).unwrap().character(&t).unwrap());
}

/// Distinct images of v under all coordinate permutations, optionally signed.
fn brute_orbit(v: &[i64], twisted: bool) -> usize {
    let n = v.len();
    let mut seen = std::collections::HashSet::new();
    for perm in (0..n).permutations(n) {
        let inversions = (0..n).tuple_combinations().filter(|&(i, j)| perm[i] > perm[j]).count();
        let s = if twisted && inversions % 2 == 1 { -1 } else { 1 };
        seen.insert(perm.iter().map(|&i| s * v[i]).collect::<Vec<_>>());
    }
    seen.len()
}

#[test]
fn witness_orbits() {
    for n in [5, 7] {
        let w = sn_witness_orbits(n).unwrap();
        assert_eq!(w.v_orbits, [brute_orbit(&w.x, false) as u128, brute_orbit(&w.y, false) as u128]);
        assert_eq!(w.vminus_orbits, [brute_orbit(&w.x, true) as u128, brute_orbit(&w.y, true) as u128]);
        assert_eq!(w.v_orbits[0], n as u128);
        assert_eq!(w.vminus_orbits[0], 2 * n as u128);
        assert_eq!((w.gcd_v(), w.gcd_vminus()), (n as u128, 2 * n as u128));
    }
    let w = sn_witness_orbits(9).unwrap();
    assert_eq!((w.p, w.k), (3, 2));
    assert_eq!(w.y.iter().filter(|&&c| c == 2).count(), 3);
    assert_eq!(w.v_orbits, [9, 84]);
    assert_eq!(w.vminus_orbits, [18, 168]);
    assert_eq!((w.gcd_v(), w.gcd_vminus()), (3, 6));
    for bad in [3, 4, 6, 8, 12] {
        assert!(sn_witness_orbits(bad).is_err());
    }
}

#[test]
fn sn_alpha_matches_orbits() {
    let g = symmetric_group(5).unwrap();
    let engine = AlphaEngine::new(&g);
    let v = AugmentationCharacter::new(GroupAction::natural(&g)).unwrap();
    assert_eq!(engine.alpha(&v).unwrap().alpha, 5);
    assert_eq!(engine.alpha(&SignedAugmentation::new(&g)).unwrap().alpha, 10);
    for n in [7, 9] {
        let g = symmetric_group(n).unwrap();
        let engine = AlphaEngine::new(&g);
        let v = AugmentationCharacter::new(GroupAction::natural(&g)).unwrap();
        let w = sn_witness_orbits(n).unwrap();
        assert_eq!(engine.alpha(&v).unwrap().alpha, w.gcd_v());
        assert_eq!(engine.alpha(&SignedAugmentation::new(&g)).unwrap().alpha, w.gcd_vminus());
    }
    let r = congruence_report(10, 2, 4, "S5").unwrap();
    assert_eq!(r.to_string(), "S5: deg ≡ 16 ≡ 6 (mod 10)");
    assert!(!congruence_report(1, 2, 4, "").unwrap().informative());
    assert_eq!(congruence_report(1, 2, 4, "").unwrap().to_string(), "no information (alpha = 1)");
    assert!(congruence_report(0, 2, 4, "").is_err());
}
