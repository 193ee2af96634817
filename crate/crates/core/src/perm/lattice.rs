//! Subgroup lattice by cyclic extension.

use std::collections::{HashMap, HashSet};
use std::sync::Arc;

use super::group::EnumeratedGroup;
use super::PermGroup;
use crate::error::{Error, Result};
use crate::util::{prime_power, BitSet};

pub const LATTICE_BOUND: u128 = 2500;

#[derive(Clone, Debug)]
pub struct SubgroupNode {
    pub subgroup: PermGroup,
    pub order: u128,
    pub index: u128,
    pub class_id: usize,
    /// Positions (in the same node list) of the minimal overgroups.
    pub minimal_overgroups: Vec<usize>,
}

/// All subgroups of a small group, grouped into conjugacy classes.
pub struct SubgroupLattice {
    group: PermGroup,
    en: Arc<EnumeratedGroup>,
    /// `classes[c][0]` is the representative.
    classes: Vec<Vec<BitSet>>,
    orders: Vec<usize>,
    contained: Vec<Vec<bool>>,
}

impl SubgroupLattice {
    pub fn compute(g: &PermGroup) -> Result<Self> {
        Self::compute_with_bound(g, LATTICE_BOUND)
    }

    pub fn compute_with_bound(g: &PermGroup, bound: u128) -> Result<Self> {
        if g.order() > bound {
            return Err(Error::BoundExceeded { what: "subgroup lattice", size: g.order(), bound });
        }
        let en = g.enumerated()?;
        let n = en.len();
        let group_gens = en.generator_indices().to_vec();

        // Cyclic subgroups of prime-power order: every subgroup is reached from a
        // maximal subgroup by adjoining one of them.
        let mut cyclic: Vec<(u32, BitSet)> = Vec::new();
        let mut seen_cyclic = HashSet::new();
        for x in 1..n as u32 {
            if prime_power(en.order_of(x) as u128).is_none() {
                continue;
            }
            let z = en.closure(&[x]);
            if seen_cyclic.insert(z.clone()) {
                cyclic.push((x, z));
            }
        }

        let mut known: HashMap<BitSet, usize> = HashMap::new();
        let mut classes: Vec<Vec<BitSet>> = Vec::new();
        let mut rep_gens: Vec<Vec<u32>> = Vec::new();
        let add_class = |bits: BitSet,
                         gens: Vec<u32>,
                         known: &mut HashMap<BitSet, usize>,
                         classes: &mut Vec<Vec<BitSet>>,
                         rep_gens: &mut Vec<Vec<u32>>| {
            let id = classes.len();
            let mut members = vec![bits.clone()];
            known.insert(bits, id);
            let mut k = 0;
            while k < members.len() {
                for &s in &group_gens {
                    let mut conj = BitSet::new(n);
                    for h in members[k].iter() {
                        conj.insert(en.conjugate(h as u32, s) as usize);
                    }
                    if !known.contains_key(&conj) {
                        known.insert(conj.clone(), id);
                        members.push(conj);
                    }
                }
                k += 1;
            }
            classes.push(members);
            rep_gens.push(gens);
        };

        add_class(en.closure(&[]), Vec::new(), &mut known, &mut classes, &mut rep_gens);
        let mut k = 0;
        while k < classes.len() {
            let rep = classes[k][0].clone();
            let gens = rep_gens[k].clone();
            for (z, _) in &cyclic {
                if rep.contains(*z as usize) {
                    continue;
                }
                let mut joined_gens = gens.clone();
                joined_gens.push(*z);
                let joined = en.closure_from(&rep, &joined_gens);
                if !known.contains_key(&joined) {
                    add_class(joined, joined_gens, &mut known, &mut classes, &mut rep_gens);
                }
            }
            k += 1;
        }

        for members in classes.iter_mut() {
            members.sort();
        }
        classes.sort_by(|a, b| (a[0].count(), &a[0]).cmp(&(b[0].count(), &b[0])));
        let orders: Vec<usize> = classes.iter().map(|c| c[0].count()).collect();
        let m = classes.len();
        let mut contained = vec![vec![false; m]; m];
        for a in 0..m {
            for b in 0..m {
                contained[a][b] = a == b
                    || (orders[a] < orders[b]
                        && orders[b].is_multiple_of(orders[a])
                        && classes[a].iter().any(|h| h.is_subset(&classes[b][0])));
            }
        }
        Ok(SubgroupLattice { group: g.clone(), en, classes, orders, contained })
    }

    pub fn group(&self) -> &PermGroup {
        &self.group
    }

    pub fn enumerated(&self) -> &EnumeratedGroup {
        &self.en
    }

    pub fn class_count(&self) -> usize {
        self.classes.len()
    }

    pub fn subgroup_count(&self) -> usize {
        self.classes.iter().map(Vec::len).sum()
    }

    pub fn class_order(&self, c: usize) -> usize {
        self.orders[c]
    }

    pub fn class_index(&self, c: usize) -> usize {
        self.en.len() / self.orders[c]
    }

    pub fn class_members(&self, c: usize) -> &[BitSet] {
        &self.classes[c]
    }

    pub fn class_rep(&self, c: usize) -> &BitSet {
        &self.classes[c][0]
    }

    pub fn rep_group(&self, c: usize) -> PermGroup {
        self.en.to_group(self.group.degree(), &self.classes[c][0])
    }

    /// The class containing the subgroup `bits`.
    pub fn class_of(&self, bits: &BitSet) -> Option<usize> {
        self.classes.iter().position(|members| members.binary_search(bits).is_ok())
    }

    /// Whether some conjugate of class `a` lies in class `b`.
    pub fn subconjugate(&self, a: usize, b: usize) -> bool {
        self.contained[a][b]
    }

    /// Covering pairs of the subconjugacy order restricted to `subset`.
    pub fn hasse_edges(&self, subset: &[usize]) -> Vec<(usize, usize)> {
        let mut edges = Vec::new();
        for &a in subset {
            for &b in subset {
                if a == b || !self.contained[a][b] {
                    continue;
                }
                let between =
                    subset.iter().any(|&c| c != a && c != b && self.contained[a][c] && self.contained[c][b]);
                if !between {
                    edges.push((a, b));
                }
            }
        }
        edges
    }

    /// One node per class, or one per subgroup when `up_to_conjugacy` is false.
    pub fn nodes(&self, up_to_conjugacy: bool) -> Vec<SubgroupNode> {
        let order = self.en.len() as u128;
        if up_to_conjugacy {
            let all: Vec<usize> = (0..self.class_count()).collect();
            let edges = self.hasse_edges(&all);
            return all
                .iter()
                .map(|&c| SubgroupNode {
                    subgroup: self.rep_group(c),
                    order: self.orders[c] as u128,
                    index: order / self.orders[c] as u128,
                    class_id: c,
                    minimal_overgroups: edges.iter().filter(|e| e.0 == c).map(|e| e.1).collect(),
                })
                .collect();
        }
        let flat: Vec<(usize, &BitSet)> =
            self.classes.iter().enumerate().flat_map(|(c, ms)| ms.iter().map(move |m| (c, m))).collect();
        let mut nodes = Vec::with_capacity(flat.len());
        for (i, &(c, h)) in flat.iter().enumerate() {
            let supers: Vec<usize> = (0..flat.len())
                .filter(|&j| j != i && self.orders[flat[j].0] > self.orders[c] && h.is_subset(flat[j].1))
                .collect();
            let minimal: Vec<usize> = supers
                .iter()
                .copied()
                .filter(|&j| !supers.iter().any(|&k| k != j && flat[k].1.is_subset(flat[j].1)))
                .collect();
            nodes.push(SubgroupNode {
                subgroup: self.en.to_group(self.group.degree(), h),
                order: self.orders[c] as u128,
                index: order / self.orders[c] as u128,
                class_id: c,
                minimal_overgroups: minimal,
            });
        }
        nodes
    }
}

pub fn subgroup_lattice(g: &PermGroup, up_to_conjugacy: bool) -> Result<Vec<SubgroupNode>> {
    Ok(SubgroupLattice::compute(g)?.nodes(up_to_conjugacy))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::perm::Permutation;

    fn group(deg: usize, gens: &[&str]) -> PermGroup {
        PermGroup::new(gens.iter().map(|s| Permutation::parse(s, deg).unwrap()).collect()).unwrap()
    }

    /// Brute force: closures of all pairs of elements, then joins, until stable.
    fn brute_subgroups(g: &PermGroup) -> HashSet<BitSet> {
        let en = g.enumerated().unwrap();
        let n = en.len() as u32;
        let mut subs: HashSet<BitSet> = HashSet::new();
        for a in 0..n {
            for b in a..n {
                subs.insert(en.closure(&[a, b]));
            }
        }
        loop {
            let list: Vec<BitSet> = subs.iter().cloned().collect();
            let mut grew = false;
            for x in &list {
                for y in &list {
                    let mut gens = en.generating_subset(x);
                    gens.extend(en.generating_subset(y));
                    if subs.insert(en.closure(&gens)) {
                        grew = true;
                    }
                }
            }
            if !grew {
                return subs;
            }
        }
    }

    #[test]
    fn cyclic_group_lattice() {
        let z6 = group(6, &["(1 2 3 4 5 6)"]);
        let nodes = subgroup_lattice(&z6, true).unwrap();
        let orders: Vec<u128> = nodes.iter().map(|n| n.order).collect();
        assert_eq!(orders, vec![1, 2, 3, 6]);
    }

    #[test]
    fn quaternion_lattice() {
        let q8 = group(8, &["(1 3 2 4)(5 7 6 8)", "(1 5 2 6)(3 8 4 7)"]);
        let nodes = subgroup_lattice(&q8, false).unwrap();
        let mut orders: Vec<u128> = nodes.iter().map(|n| n.order).collect();
        orders.sort();
        assert_eq!(orders, vec![1, 2, 4, 4, 4, 8]);
        let lat = SubgroupLattice::compute(&q8).unwrap();
        assert_eq!(lat.subgroup_count(), brute_subgroups(&q8).len());
    }

    #[test]
    fn a5_has_nine_classes() {
        let a5 = group(5, &["(1 2 3 4 5)", "(1 2 3)"]);
        let lat = SubgroupLattice::compute(&a5).unwrap();
        assert_eq!(lat.class_count(), 9);
        let orders: Vec<usize> = (0..9).map(|c| lat.class_order(c)).collect();
        assert_eq!(orders, vec![1, 2, 3, 4, 5, 6, 10, 12, 60]);
        assert_eq!(lat.subgroup_count(), 59);
        assert_eq!(lat.subgroup_count(), brute_subgroups(&a5).len());
    }

    #[test]
    fn lattice_closed_under_intersection() {
        let s4 = group(4, &["(1 2 3 4)", "(1 2)"]);
        let lat = SubgroupLattice::compute(&s4).unwrap();
        let all: Vec<&BitSet> = (0..lat.class_count()).flat_map(|c| lat.class_members(c)).collect();
        assert_eq!(all.len(), 30);
        for a in &all {
            for b in &all {
                assert!(lat.class_of(&a.intersection(b)).is_some());
            }
        }
    }

    #[test]
    fn minimal_overgroups_in_full_list() {
        let z6 = group(6, &["(1 2 3 4 5 6)"]);
        let nodes = subgroup_lattice(&z6, false).unwrap();
        let trivial = nodes.iter().position(|n| n.order == 1).unwrap();
        let mut up: Vec<u128> = nodes[trivial].minimal_overgroups.iter().map(|&j| nodes[j].order).collect();
        up.sort();
        assert_eq!(up, vec![2, 3]);
    }

    #[test]
    fn bound_exceeded() {
        let s7 = group(7, &["(1 2 3 4 5 6 7)", "(1 2)"]);
        assert!(matches!(SubgroupLattice::compute(&s7), Err(Error::BoundExceeded { .. })));
    }
}
