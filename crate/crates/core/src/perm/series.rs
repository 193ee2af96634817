use super::{PermGroup, Permutation};
use crate::error::Result;
use crate::util::BitSet;

/// Normal closure of `gens` in `g`.
pub fn normal_closure(g: &PermGroup, gens: &[Permutation]) -> PermGroup {
    let mut current: Vec<Permutation> = gens.iter().filter(|x| !x.is_identity()).cloned().collect();
    let mut n = PermGroup::with_degree(g.degree(), current.clone()).expect("common degree");
    let mut queue = current.clone();
    while let Some(x) = queue.pop() {
        for s in g.generators() {
            let y = x.conjugate_by(s);
            if !n.contains(&y) {
                current.push(y.clone());
                n = PermGroup::with_degree(g.degree(), current.clone()).expect("common degree");
                queue.push(y);
            }
        }
    }
    n
}

fn commutator(a: &Permutation, b: &Permutation) -> Permutation {
    a.inverse().compose(&b.inverse()).compose(&a.compose(b))
}

/// [G, G] as the normal closure of generator commutators.
pub fn derived_subgroup(g: &PermGroup) -> PermGroup {
    let gens = g.generators();
    let mut comms = Vec::new();
    for (i, a) in gens.iter().enumerate() {
        for b in &gens[..i] {
            comms.push(commutator(a, b));
        }
    }
    normal_closure(g, &comms)
}

/// G ⊇ G' ⊇ G'' ⊇ … up to the first repeated term.
pub fn derived_series(g: &PermGroup) -> Vec<PermGroup> {
    let mut series = vec![g.clone()];
    loop {
        let last = series.last().unwrap();
        let next = derived_subgroup(last);
        if next.order() == last.order() {
            return series;
        }
        let done = next.order() == 1;
        series.push(next);
        if done {
            return series;
        }
    }
}

pub fn is_solvable(g: &PermGroup) -> bool {
    derived_series(g).last().map(|h| h.order() == 1).unwrap_or(true)
}

/// Minimal normal subgroups, each as the normal closure of one of its elements.
pub fn minimal_normal_subgroups(g: &PermGroup) -> Result<Vec<PermGroup>> {
    let en = g.enumerated()?;
    let classes = g.conjugacy_classes()?;
    let mut closures: Vec<(BitSet, PermGroup)> = Vec::new();
    for rep in classes.representatives.iter().skip(1) {
        let n = normal_closure(g, std::slice::from_ref(rep));
        let bits = en.bitset_of(&n)?;
        if !closures.iter().any(|(b, _)| *b == bits) {
            closures.push((bits, n));
        }
    }
    let minimal = closures
        .iter()
        .filter(|(b, _)| !closures.iter().any(|(c, _)| c != b && c.is_subset(b)))
        .map(|(_, n)| n.clone())
        .collect();
    Ok(minimal)
}

/// The socle: the subgroup generated by all minimal normal subgroups.
pub fn socle(g: &PermGroup) -> Result<PermGroup> {
    let gens: Vec<Permutation> =
        minimal_normal_subgroups(g)?.iter().flat_map(|n| n.generators().to_vec()).collect();
    PermGroup::with_degree(g.degree(), gens)
}

/// `Some(p)` if the group is elementary abelian of exponent p.
pub fn elementary_abelian_prime(g: &PermGroup) -> Option<u64> {
    if g.order() == 1 || !g.is_abelian() {
        return None;
    }
    let (p, _) = crate::util::prime_power(g.order())?;
    g.generators().iter().all(|x| x.pow(p as i64).is_identity()).then_some(p)
}
