//! Standard families and products.

use super::field::GaloisField;
use super::{PermGroup, Permutation};
use crate::error::Result;

fn cycle(n: usize, points: &[usize]) -> Permutation {
    Permutation::from_cycles(n, &[points.to_vec()]).expect("valid cycle")
}

/// Sₙ generated by (1 2 … n) and (1 2).
pub fn symmetric(n: usize) -> PermGroup {
    let mut gens = Vec::new();
    if n >= 2 {
        gens.push(cycle(n, &(0..n).collect::<Vec<_>>()));
        gens.push(cycle(n, &[0, 1]));
    }
    PermGroup::with_degree(n, gens).expect("common degree").named(format!("S{n}"))
}

/// Aₙ generated by 3-cycles (1 2 k).
pub fn alternating(n: usize) -> PermGroup {
    let gens = (2..n).map(|k| cycle(n, &[0, 1, k])).collect();
    PermGroup::with_degree(n, gens).expect("common degree").named(format!("A{n}"))
}

pub fn cyclic(n: usize) -> PermGroup {
    let gens = if n > 1 { vec![cycle(n, &(0..n).collect::<Vec<_>>())] } else { Vec::new() };
    PermGroup::with_degree(n.max(1), gens).expect("common degree").named(format!("Z{n}"))
}

/// The block-diagonal embedding of a pair of permutations.
pub fn join_permutations(a: &Permutation, b: &Permutation) -> Permutation {
    let shift = a.degree() as u32;
    let images = a.images().iter().copied().chain(b.images().iter().map(|&x| x + shift)).collect();
    Permutation::from_images(images).expect("disjoint union of bijections")
}

/// A × B acting on the disjoint union of the point sets.
pub fn direct_product(a: &PermGroup, b: &PermGroup) -> PermGroup {
    let ida = a.identity();
    let idb = b.identity();
    let mut gens: Vec<Permutation> = a.generators().iter().map(|x| join_permutations(x, &idb)).collect();
    gens.extend(b.generators().iter().map(|y| join_permutations(&ida, y)));
    let name = match (a.name(), b.name()) {
        (Some(x), Some(y)) => Some(format!("{x}x{y}")),
        _ => None,
    };
    let g = PermGroup::with_degree(a.degree() + b.degree(), gens).expect("common degree");
    match name {
        Some(n) => g.named(n),
        None => g,
    }
}

/// Components of an element of a direct product with first factor of degree `split`.
pub fn split_permutation(g: &Permutation, split: usize) -> (Permutation, Permutation) {
    let imgs = g.images();
    let a = imgs[..split].to_vec();
    let b = imgs[split..].iter().map(|&x| x - split as u32).collect();
    (Permutation::from_images_unchecked(a), Permutation::from_images_unchecked(b))
}

/// Points 0..q are field elements and q is ∞.
fn mobius(f: &GaloisField, a: usize, b: usize, c: usize, d: usize) -> Permutation {
    let q = f.order();
    let image = |x: usize| -> usize {
        if x == q {
            return if c == 0 { q } else { f.mul(a, f.inv(c).unwrap()) };
        }
        let num = f.add(f.mul(a, x), b);
        let den = f.add(f.mul(c, x), d);
        match f.inv(den) {
            Some(i) => f.mul(num, i),
            None => q,
        }
    };
    Permutation::from_images((0..=q).map(|x| image(x) as u32).collect()).expect("Möbius map is a bijection")
}

fn psl2_generators(f: &GaloisField) -> Vec<Permutation> {
    let w = f.primitive();
    let minus_one = f.neg(1);
    vec![mobius(f, 1, 1, 0, 1), mobius(f, f.mul(w, w), 0, 0, 1), mobius(f, 0, minus_one, 1, 0)]
}

/// PSL(2,q) on the q+1 points of the projective line.
pub fn psl2(q: u64) -> Result<PermGroup> {
    let f = GaloisField::new(q)?;
    Ok(PermGroup::with_degree(f.order() + 1, psl2_generators(&f))?.named(format!("PSL(2,{q})")))
}

/// PΓL(2,q): PSL(2,q) with diagonal and field automorphisms.
pub fn pgaml2(q: u64) -> Result<PermGroup> {
    let f = GaloisField::new(q)?;
    let mut gens = psl2_generators(&f);
    gens.push(mobius(&f, f.primitive(), 0, 0, 1));
    let n = f.order();
    let frob = (0..=n).map(|x| if x == n { n as u32 } else { f.frobenius(x) as u32 }).collect();
    gens.push(Permutation::from_images(frob)?);
    Ok(PermGroup::with_degree(n + 1, gens)?.named(format!("PGammaL(2,{q})")))
}

fn vector_index(v: &[u64], p: u64) -> usize {
    v.iter().rev().fold(0u64, |acc, &x| acc * p + x) as usize
}

fn vector_of(i: usize, d: usize, p: u64) -> Vec<u64> {
    let mut v = Vec::with_capacity(d);
    let mut i = i as u64;
    for _ in 0..d {
        v.push(i % p);
        i /= p;
    }
    v
}

/// Generators of GL(d,p) as matrices: a transvection, the basis cycle, a basis
/// transposition and a scalar-free diagonal generator.
fn gl_generators(d: usize, p: u64) -> Vec<Vec<Vec<u64>>> {
    let id = |i: usize, j: usize| u64::from(i == j);
    let mut gens = Vec::new();
    if d >= 2 {
        gens.push((0..d).map(|i| (0..d).map(|j| id(i, j) + u64::from(i == 0 && j == 1)).collect()).collect());
        gens.push((0..d).map(|i| (0..d).map(|j| u64::from((i + 1) % d == j)).collect()).collect());
        gens.push((0..d).map(|i| (0..d).map(|j| u64::from(if i < 2 && j < 2 { i != j } else { i == j })).collect()).collect());
    }
    if p > 2 {
        let w = (2..p).find(|&g| (1..p - 1).all(|k| crate::util::mod_pow_u64(g, k, p) != 1)).unwrap();
        gens.push((0..d).map(|i| (0..d).map(|j| if i == j { if i == 0 { w } else { 1 } } else { 0 }).collect()).collect());
    }
    gens
}

fn apply_matrix(m: &[Vec<u64>], v: &[u64], p: u64) -> Vec<u64> {
    m.iter().map(|row| row.iter().zip(v).map(|(a, b)| a * b).sum::<u64>() % p).collect()
}

/// Permutation of the p^d vectors (or of the nonzero ones) induced by matrices.
pub fn matrix_action(d: usize, p: u64, matrices: &[Vec<Vec<u64>>], nonzero_only: bool) -> Result<Vec<Permutation>> {
    let n = (p as usize).pow(d as u32);
    let points: Vec<usize> = (if nonzero_only { 1 } else { 0 }..n).collect();
    let shift = usize::from(nonzero_only);
    matrices
        .iter()
        .map(|m| {
            let images = points.iter().map(|&i| (vector_index(&apply_matrix(m, &vector_of(i, d, p), p), p) - shift) as u32);
            Permutation::from_images(images.collect())
        })
        .collect()
}

/// AGL(d,p) on the p^d vectors of F_p^d.
pub fn affine_general(d: usize, p: u64) -> Result<PermGroup> {
    let n = (p as usize).pow(d as u32);
    let mut gens = matrix_action(d, p, &gl_generators(d, p), false)?;
    let mut e1 = vec![0u64; d];
    e1[0] = 1;
    let translation = (0..n).map(|i| {
        let v: Vec<u64> = vector_of(i, d, p).iter().zip(&e1).map(|(a, b)| (a + b) % p).collect();
        vector_index(&v, p) as u32
    });
    gens.push(Permutation::from_images(translation.collect())?);
    Ok(PermGroup::with_degree(n, gens)?.named(format!("AGL({d},{p})")))
}

/// GL(d,p) on the nonzero vectors; for p = 2 this is PSL(d,2) on projective points.
pub fn general_linear_on_nonzero(d: usize, p: u64) -> Result<PermGroup> {
    let gens = matrix_action(d, p, &gl_generators(d, p), true)?;
    Ok(PermGroup::with_degree((p as usize).pow(d as u32) - 1, gens)?.named(format!("GL({d},{p})")))
}

/// SL(2,3) on the 8 nonzero vectors of F_3².
pub fn sl2_3() -> PermGroup {
    let m = vec![vec![vec![1, 1], vec![0, 1]], vec![vec![0, 2], vec![1, 0]]];
    PermGroup::with_degree(8, matrix_action(2, 3, &m, true).expect("invertible matrices"))
        .expect("common degree")
        .named("SL(2,3)")
}

/// M11 on 11 points.
pub fn mathieu11() -> PermGroup {
    let a = Permutation::parse("(1 2 3 4 5 6 7 8 9 10 11)", 11).expect("valid cycle");
    let b = Permutation::parse("(3 7 11 8)(4 10 5 6)", 11).expect("valid cycle");
    PermGroup::with_degree(11, vec![a, b]).expect("common degree").named("M11")
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn classical_orders() {
        assert_eq!(psl2(4).unwrap().order(), 60);
        assert_eq!(psl2(7).unwrap().order(), 168);
        assert_eq!(psl2(8).unwrap().order(), 504);
        assert_eq!(psl2(11).unwrap().order(), 660);
        assert_eq!(pgaml2(8).unwrap().order(), 1512);
        assert_eq!(affine_general(3, 2).unwrap().order(), 1344);
        assert_eq!(affine_general(1, 5).unwrap().order(), 20);
        assert_eq!(general_linear_on_nonzero(3, 2).unwrap().order(), 168);
        assert_eq!(sl2_3().order(), 24);
        assert_eq!(mathieu11().order(), 7920);
        assert_eq!(direct_product(&cyclic(2), &cyclic(3)).order(), 6);
    }


    #[test]
    fn family_orders() {
        assert_eq!(symmetric(5).order(), 120);
        assert_eq!(alternating(5).order(), 60);
        assert_eq!(alternating(8).order(), 20160);
        assert_eq!(cyclic(6).order(), 6);
        assert_eq!(cyclic(1).order(), 1);
    }

    #[test]
    fn products_split() {
        let g = direct_product(&cyclic(2), &cyclic(3));
        assert_eq!(g.order(), 6);
        assert!(g.is_abelian());
        for x in g.elements().unwrap() {
            let (a, b) = split_permutation(&x, 2);
            assert_eq!(join_permutations(&a, &b), x);
        }
    }
}
