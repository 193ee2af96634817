use proptest::prelude::*;

use super::*;
use crate::cyclo::rat;

fn p(text: &str, n: usize) -> Polynomial {
    parse_polynomial(text, n).unwrap()
}

fn sys(texts: &[&str], n: usize) -> Vec<Polynomial> {
    texts.iter().map(|t| p(t, n)).collect()
}

#[test]
fn small_bases() {
    let b = buchberger(&sys(&["x1", "x2"], 2)).unwrap();
    assert_eq!(b.polys, sys(&["x2", "x1"], 2));
    assert!(buchberger(&sys(&["x1", "1 - x1"], 1)).unwrap().is_unit());
    let b = buchberger(&sys(&["x1^2 + x2^2", "x1^2 - x2^2"], 2)).unwrap();
    assert_eq!(b.polys, sys(&["x2^2", "x1^2"], 2));
    assert!(!b.is_unit());
    let b = buchberger(&sys(&["2*x1*x2 - x2", "x2^2 - x1"], 2)).unwrap();
    assert!(b.contains(&p("x2^3 - 1/2*x2", 2)));
}

#[test]
fn nullstellensatz_examples() {
    assert!(has_no_common_zero(&sys(&["x1", "1 - x1"], 1)).unwrap());
    assert!(!has_no_common_zero(&sys(&["x1", "x2"], 2)).unwrap());
    // circle and line meet at irrational points only
    assert!(!has_no_common_zero(&sys(&["x1^2 + x2^2 - 1", "x1 - x2"], 2)).unwrap());
    assert!(has_no_common_zero(&sys(&["x1*x2 - 1", "x1"], 2)).unwrap());
    assert!(!has_no_common_zero(&[Polynomial::zero(3)]).unwrap());
    assert!(buchberger(&[]).is_err());
}

#[test]
fn dehomogenization() {
    let d = dehomogenize(&sys(&["x1^2 - x2^2"], 2), 1).unwrap();
    assert_eq!(d, sys(&["x1^2 - 1"], 2));
    let d = dehomogenize(&sys(&["x1*x2"], 2), 0).unwrap();
    assert_eq!(d, sys(&["x2"], 2));
    assert!(dehomogenize(&sys(&["x1"], 2), 2).is_err());

    let (ok, bases) = only_trivial_zero(&sys(&["x1^2", "x2^2"], 2)).unwrap();
    assert!(ok);
    assert_eq!(bases.len(), 2);
    assert!(!only_trivial_zero(&sys(&["x1^2 - x2^2"], 2)).unwrap().0);
    assert!(only_trivial_zero(&sys(&["x1 + 1"], 1)).is_err());
}

#[test]
fn text_round_trip_and_errors() {
    let q = p("3/5*x1^2*x3 - x2 + 7", 3);
    assert_eq!(q.to_string(), "3/5*x1^2*x3 - x2 + 7");
    assert_eq!(p(&q.to_string(), 3), q);
    assert_eq!(p("x1*x1 - x1^2", 1), Polynomial::zero(1));
    assert_eq!(p("-2*x1", 1).coefficient(&[1]), rat(-2, 1));
    for bad in ["", "x4", "x0", "1/0", "x1 x2", "3 +", "x1^"] {
        assert!(parse_polynomial(bad, 3).is_err(), "{bad:?}");
    }
    let s = parse_system("# a system\nx1^2 - x3\n\nx2 # trailing\n").unwrap();
    assert_eq!(s.len(), 2);
    assert_eq!(s[0].nvars(), 3);
    assert_eq!(parse_system("vars 5\nx1").unwrap()[0].nvars(), 5);
}

#[test]
fn orders() {
    use std::cmp::Ordering::*;
    let o = MonomialOrder::Grevlex;
    assert_eq!(o.cmp(&[1, 0, 1], &[0, 2, 0]), Less);
    assert_eq!(o.cmp(&[2, 0, 0], &[1, 1, 0]), Greater);
    assert_eq!(MonomialOrder::Lex.cmp(&[1, 0, 0], &[0, 5, 5]), Greater);
    assert_eq!(MonomialOrder::Grlex.cmp(&[1, 0, 1], &[0, 2, 0]), Greater);
}

/// Every S-polynomial reduces to zero, checked without the pair criteria.
fn is_groebner(g: &[Polynomial]) -> bool {
    (0..g.len()).all(|i| (0..i).all(|j| reduce(&s_polynomial(&g[i], &g[j]), g).is_zero()))
}

fn is_reduced(g: &[Polynomial]) -> bool {
    g.iter().enumerate().all(|(i, a)| {
        a.leading_coefficient().is_some_and(|c| *c == rat(1, 1))
            && g.iter().enumerate().all(|(j, b)| {
                i == j || a.terms().iter().all(|(m, _)| !poly::divides(b.leading_monomial().unwrap(), m))
            })
    })
}

fn grid_zero(g: &[Polynomial], n: usize) -> bool {
    let vals: Vec<Rational> = (-2..=2).map(|v| rat(v, 1)).collect();
    let mut idx = vec![0usize; n];
    loop {
        let point: Vec<Rational> = idx.iter().map(|&k| vals[k].clone()).collect();
        if g.iter().all(|f| f.evaluate(&point) == rat(0, 1)) {
            return true;
        }
        let mut k = 0;
        loop {
            if k == n {
                return false;
            }
            idx[k] += 1;
            if idx[k] < vals.len() {
                break;
            }
            idx[k] = 0;
            k += 1;
        }
    }
}

fn arb_system() -> impl Strategy<Value = Vec<Polynomial>> {
    let monos: Vec<Vec<u32>> =
        (0..3u32).flat_map(|a| (0..3u32).flat_map(move |b| (0..3u32).map(move |c| vec![a, b, c]))).filter(|m| m.iter().sum::<u32>() <= 2).collect();
    let term = (prop::sample::select(monos), -3i64..=3);
    prop::collection::vec(prop::collection::vec(term, 1..4), 1..4).prop_map(|polys| {
        polys.into_iter().map(|ts| Polynomial::from_terms(3, ts.into_iter().map(|(m, c)| (m, rat(c, 1))).collect())).collect()
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(40))]

    #[test]
    fn buchberger_properties(input in arb_system()) {
        let g = buchberger(&input).unwrap();
        prop_assert!(is_groebner(&g.polys));
        prop_assert!(is_reduced(&g.polys));
        for f in &input {
            prop_assert!(reduce(f, &g.polys).is_zero());
        }
        if g.polys.is_empty() {
            prop_assert!(input.iter().all(Polynomial::is_zero));
            return Ok(());
        }
        // same ideal: reduced bases in another order agree
        let a = buchberger_in(&input, MonomialOrder::Lex).unwrap();
        let b = buchberger_in(&g.polys, MonomialOrder::Lex).unwrap();
        prop_assert_eq!(a.polys, b.polys);
        // a grid zero rules out the unit ideal
        if grid_zero(&input, 3) {
            prop_assert!(!g.is_unit());
        }
        // deterministic
        prop_assert_eq!(buchberger(&input).unwrap(), g);
    }
}
