use std::collections::BTreeMap;

use super::group::EnumeratedGroup;
use super::Permutation;
use crate::util::primes_up_to;

/// Conjugacy classes ordered by (element order, size, representative); the
/// identity class comes first.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ConjugacyClassSet {
    /// Lexicographically least element of each class; empty for tables loaded without a group.
    pub representatives: Vec<Permutation>,
    pub sizes: Vec<u64>,
    pub orders: Vec<u64>,
    /// `power_maps[q][i]` is the class of `rep_i^q`, for each prime q up to the exponent.
    pub power_maps: BTreeMap<u64, Vec<usize>>,
}

impl ConjugacyClassSet {
    pub fn len(&self) -> usize {
        self.sizes.len()
    }

    pub fn is_empty(&self) -> bool {
        self.sizes.is_empty()
    }

    pub fn group_order(&self) -> u64 {
        self.sizes.iter().sum()
    }

    pub fn centralizer_order(&self, class: usize) -> u64 {
        self.group_order() / self.sizes[class]
    }

    pub fn exponent(&self) -> u64 {
        self.orders.iter().fold(1, |acc, &o| num_integer::lcm(acc, o))
    }

    /// Class of `rep^e` for any integer e, composed from prime power maps.
    pub fn power_class(&self, class: usize, e: i64) -> Option<usize> {
        let o = self.orders[class] as i64;
        let mut e = e.rem_euclid(o) as u64;
        if e == 0 {
            return Some(0);
        }
        let mut c = class;
        let mut q = 2u64;
        while e > 1 {
            while e.is_multiple_of(q) {
                c = self.power_maps.get(&q)?[c];
                e /= q;
            }
            q += 1;
        }
        Some(c)
    }

    /// Class of inverses of class `i`.
    pub fn inverse_class(&self, class: usize) -> Option<usize> {
        self.power_class(class, -1)
    }
}

pub(crate) struct ClassData {
    pub set: ConjugacyClassSet,
    pub element_class: Vec<u32>,
}

pub(crate) fn compute_classes(en: &EnumeratedGroup) -> ClassData {
    let n = en.len();
    let gens = en.generator_indices();
    let mut raw = vec![u32::MAX; n];
    let mut classes: Vec<Vec<u32>> = Vec::new();
    for x in 0..n as u32 {
        if raw[x as usize] != u32::MAX {
            continue;
        }
        let id = classes.len() as u32;
        raw[x as usize] = id;
        let mut members = vec![x];
        let mut k = 0;
        while k < members.len() {
            let y = members[k];
            for &s in gens {
                let z = en.conjugate(y, s);
                if raw[z as usize] == u32::MAX {
                    raw[z as usize] = id;
                    members.push(z);
                }
            }
            k += 1;
        }
        classes.push(members);
    }
    // Members start at their least index since x is scanned in order.
    let mut order: Vec<usize> = (0..classes.len()).collect();
    order.sort_by_key(|&c| (en.order_of(classes[c][0]), classes[c].len(), classes[c][0]));
    let mut relabel = vec![0u32; classes.len()];
    for (new, &old) in order.iter().enumerate() {
        relabel[old] = new as u32;
    }
    let element_class: Vec<u32> = raw.iter().map(|&c| relabel[c as usize]).collect();
    let reps: Vec<u32> = order.iter().map(|&c| classes[c][0]).collect();
    let orders: Vec<u64> = reps.iter().map(|&r| en.order_of(r) as u64).collect();
    let exponent = orders.iter().fold(1u64, |acc, &o| num_integer::lcm(acc, o));
    let mut power_maps = BTreeMap::new();
    for q in primes_up_to(exponent) {
        let map = reps.iter().map(|&r| element_class[en.pow(r, q) as usize] as usize).collect();
        power_maps.insert(q, map);
    }
    ClassData {
        set: ConjugacyClassSet {
            representatives: reps.iter().map(|&r| en.element(r).clone()).collect(),
            sizes: order.iter().map(|&c| classes[c].len() as u64).collect(),
            orders,
            power_maps,
        },
        element_class,
    }
}

#[cfg(test)]
mod tests {
    use crate::perm::{PermGroup, Permutation};
    use std::collections::HashSet;

    fn group(deg: usize, gens: &[&str]) -> PermGroup {
        PermGroup::new(gens.iter().map(|s| Permutation::parse(s, deg).unwrap()).collect()).unwrap()
    }

    /// Brute-force classes: orbit of each element under conjugation by every element.
    fn brute_sizes(g: &PermGroup) -> Vec<u64> {
        let els = g.elements().unwrap();
        let mut seen = HashSet::new();
        let mut sizes = Vec::new();
        for x in &els {
            if seen.contains(x) {
                continue;
            }
            let class: HashSet<Permutation> = els.iter().map(|y| x.conjugate_by(y)).collect();
            sizes.push(class.len() as u64);
            seen.extend(class);
        }
        sizes.sort();
        sizes
    }

    #[test]
    fn class_sizes_match_brute_force() {
        let a5 = group(5, &["(1 2 3 4 5)", "(1 2 3)"]);
        let cls = a5.conjugacy_classes().unwrap();
        let mut sizes = cls.sizes.clone();
        sizes.sort();
        assert_eq!(sizes, vec![1, 12, 12, 15, 20]);
        assert_eq!(sizes, brute_sizes(&a5));
        let s3 = group(3, &["(1 2 3)", "(1 2)"]);
        assert_eq!(s3.conjugacy_classes().unwrap().sizes, vec![1, 3, 2]);
        let t = PermGroup::trivial(2);
        assert_eq!(t.conjugacy_classes().unwrap().sizes, vec![1]);
    }

    #[test]
    fn class_of_examples() {
        let s5 = group(5, &["(1 2 3 4 5)", "(1 2)"]);
        let cls = s5.conjugacy_classes().unwrap();
        assert_eq!(s5.class_of(&Permutation::identity(5)).unwrap(), 0);
        let c = s5.class_of(&Permutation::parse("(1 3 5 2 4)", 5).unwrap()).unwrap();
        assert_eq!(cls.sizes[c], 24);
        assert_eq!(c, s5.class_of(&Permutation::parse("(1 2 3 4 5)", 5).unwrap()).unwrap());
        let a5 = group(5, &["(1 2 3 4 5)", "(1 2 3)"]);
        let c = a5.class_of(&Permutation::parse("(1 2)(3 4)", 5).unwrap()).unwrap();
        assert_eq!(a5.conjugacy_classes().unwrap().sizes[c], 15);
        assert!(a5.class_of(&Permutation::parse("(1 2)", 5).unwrap()).is_err());
    }

    #[test]
    fn class_of_constant_on_classes_and_power_maps_consistent() {
        let g = group(4, &["(1 2 3 4)", "(1 2)"]);
        let cls = g.conjugacy_classes().unwrap();
        for x in g.elements().unwrap() {
            let c = g.class_of(&x).unwrap();
            for y in g.elements().unwrap() {
                assert_eq!(g.class_of(&x.conjugate_by(&y)).unwrap(), c);
            }
        }
        for (&q, map) in &cls.power_maps {
            assert_eq!(map[0], 0);
            for (i, rep) in cls.representatives.iter().enumerate() {
                assert_eq!(map[i], g.class_of(&rep.pow(q as i64)).unwrap());
            }
        }
        assert_eq!(cls.sizes.iter().sum::<u64>(), 24);
        assert!(cls.sizes.iter().all(|s| 24 % s == 0));
    }
}
