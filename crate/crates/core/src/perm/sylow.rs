use std::collections::{BTreeSet, HashSet};

use super::{PermGroup, Permutation};
use crate::error::{Error, Result};
use crate::util::{p_part, prime_divisors, BitSet};

/// Elements of a small subgroup, closed under the given generators.
fn closure_set(degree: usize, gens: &[Permutation]) -> HashSet<Permutation> {
    let id = Permutation::identity(degree);
    let mut set = HashSet::from([id.clone()]);
    let mut queue = vec![id];
    while let Some(x) = queue.pop() {
        for s in gens {
            let y = x.compose(s);
            if set.insert(y.clone()) {
                queue.push(y);
            }
        }
    }
    set
}

/// Visits elements in sorted order when the group is enumerable, else in chain order.
fn scan_elements<F: FnMut(&Permutation) -> bool>(g: &PermGroup, mut f: F) {
    match g.enumerated() {
        Ok(en) => {
            for x in en.elements() {
                if !f(x) {
                    break;
                }
            }
        }
        Err(_) => g.for_each_element(f),
    }
}

/// A Sylow p-subgroup grown from the first element of order p by normalizer steps.
pub fn sylow_subgroup(g: &PermGroup, p: u64) -> Result<PermGroup> {
    let target = p_part(g.order(), p);
    if target == 1 {
        return Ok(PermGroup::trivial(g.degree()));
    }
    let mut start = None;
    scan_elements(g, |x| {
        if x.order() == p {
            start = Some(x.clone());
            false
        } else {
            true
        }
    });
    let start = start.ok_or_else(|| Error::Construction(format!("no element of order {p}")))?;
    let mut gens = vec![start];
    let mut set = closure_set(g.degree(), &gens);
    while (set.len() as u128) < target {
        let mut found = None;
        scan_elements(g, |x| {
            if !set.contains(x)
                && set.contains(&x.pow(p as i64))
                && gens.iter().all(|q| set.contains(&q.conjugate_by(x)))
            {
                found = Some(x.clone());
                false
            } else {
                true
            }
        });
        let x = found.ok_or_else(|| Error::Construction("normalizer growth stalled".into()))?;
        gens.push(x);
        set = closure_set(g.degree(), &gens);
    }
    PermGroup::with_degree(g.degree(), gens)
}

/// Every Sylow p-subgroup, as conjugates of the canonical one.
pub fn all_sylow_subgroups(g: &PermGroup, p: u64) -> Result<Vec<PermGroup>> {
    let p_sub = sylow_subgroup(g, p)?;
    let en = g.enumerated()?;
    let base = en.bitset_of(&p_sub)?;
    let mut seen: BTreeSet<BitSet> = BTreeSet::new();
    let mut out = Vec::new();
    for x in 0..en.len() as u32 {
        let mut conj = BitSet::new(en.len());
        for h in base.iter() {
            conj.insert(en.conjugate(h as u32, x) as usize);
        }
        if seen.insert(conj.clone()) {
            out.push(en.to_group(g.degree(), &conj));
        }
    }
    Ok(out)
}

/// Whether the product set P₁P₂⋯P_k equals G.
pub fn kaplan_levy_check(g: &PermGroup, sylow_choice: &[PermGroup]) -> Result<bool> {
    let primes = prime_divisors(g.order());
    if sylow_choice.len() != primes.len() {
        return Err(Error::InvalidInput(format!(
            "expected {} Sylow subgroups, got {}",
            primes.len(),
            sylow_choice.len()
        )));
    }
    let en = g.enumerated()?;
    let mut product = BitSet::new(en.len());
    product.insert(0);
    for (p_sub, &p) in sylow_choice.iter().zip(&primes) {
        if p_sub.order() != p_part(g.order(), p) || !p_sub.is_subgroup_of(g) {
            return Err(Error::InvalidInput(format!("subgroup of order {} is not a Sylow {p}-subgroup", p_sub.order())));
        }
        let members = en.bitset_of(p_sub)?;
        let mut next = BitSet::new(en.len());
        for a in product.iter() {
            for b in members.iter() {
                next.insert(en.mul(a as u32, b as u32) as usize);
            }
        }
        product = next;
    }
    Ok(product.count() == en.len())
}

/// Evaluates `kaplan_levy_check` over every choice of Sylow subgroups.
pub fn kaplan_levy_all_choices(g: &PermGroup) -> Result<bool> {
    let primes = prime_divisors(g.order());
    let families: Vec<Vec<PermGroup>> =
        primes.iter().map(|&p| all_sylow_subgroups(g, p)).collect::<Result<_>>()?;
    let mut idx = vec![0usize; families.len()];
    loop {
        let choice: Vec<PermGroup> = idx.iter().zip(&families).map(|(&i, f)| f[i].clone()).collect();
        if !kaplan_levy_check(g, &choice)? {
            return Ok(false);
        }
        let mut k = 0;
        loop {
            if k == idx.len() {
                return Ok(true);
            }
            idx[k] += 1;
            if idx[k] < families[k].len() {
                break;
            }
            idx[k] = 0;
            k += 1;
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn group(deg: usize, gens: &[&str]) -> PermGroup {
        PermGroup::new(gens.iter().map(|s| Permutation::parse(s, deg).unwrap()).collect()).unwrap()
    }

    #[test]
    fn sylow_orders() {
        let a5 = group(5, &["(1 2 3 4 5)", "(1 2 3)"]);
        assert_eq!(sylow_subgroup(&a5, 5).unwrap().order(), 5);
        assert_eq!(sylow_subgroup(&a5, 2).unwrap().order(), 4);
        assert_eq!(sylow_subgroup(&a5, 7).unwrap().order(), 1);
        let q8 = group(8, &["(1 3 2 4)(5 7 6 8)", "(1 5 2 6)(3 8 4 7)"]);
        assert_eq!(q8.order(), 8);
        assert_eq!(sylow_subgroup(&q8, 2).unwrap().order(), 8);
    }

    #[test]
    fn sylow_subgroups_are_conjugate() {
        let s4 = group(4, &["(1 2 3 4)", "(1 2)"]);
        let syl2 = all_sylow_subgroups(&s4, 2).unwrap();
        assert_eq!(syl2.len(), 3);
        assert_eq!(all_sylow_subgroups(&s4, 3).unwrap().len(), 4);
    }

    #[test]
    fn kaplan_levy() {
        let s4 = group(4, &["(1 2 3 4)", "(1 2)"]);
        assert!(kaplan_levy_all_choices(&s4).unwrap());
        let a5 = group(5, &["(1 2 3 4 5)", "(1 2 3)"]);
        assert!(!kaplan_levy_all_choices(&a5).unwrap());
        let d8 = group(4, &["(1 2 3 4)", "(1 3)"]);
        let p = sylow_subgroup(&d8, 2).unwrap();
        assert!(kaplan_levy_check(&d8, &[p]).unwrap());
        let wrong = d8.subgroup(vec![Permutation::parse("(1 3)", 4).unwrap()]).unwrap();
        assert!(kaplan_levy_check(&d8, &[wrong]).is_err());
    }
}
