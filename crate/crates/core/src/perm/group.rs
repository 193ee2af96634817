use std::collections::HashMap;
use std::fmt;
use std::sync::{Arc, OnceLock};

use super::chain::StabChain;
use super::classes::{compute_classes, ClassData, ConjugacyClassSet};
use super::Permutation;
use crate::error::{Error, Result};
use crate::util::BitSet;

/// Default bound on |G| for operations that list every element.
pub const ELEMENT_BOUND: u128 = 1_000_000;
/// Groups up to this order get a full multiplication table.
pub const MULT_TABLE_BOUND: usize = 2500;

/// A permutation group given by generators, backed by a stabilizer chain.
///
/// Cloning is cheap; derived data (element list, classes) is cached and
/// shared between clones.
#[derive(Clone)]
pub struct PermGroup {
    inner: Arc<Inner>,
}

struct Inner {
    degree: usize,
    generators: Vec<Permutation>,
    chain: StabChain,
    name: Option<String>,
    bound: u128,
    enumerated: OnceLock<Arc<EnumeratedGroup>>,
    classes: OnceLock<Arc<ClassData>>,
}

impl PermGroup {
    pub fn new(generators: Vec<Permutation>) -> Result<Self> {
        let degree = generators
            .first()
            .map(Permutation::degree)
            .ok_or_else(|| Error::InvalidInput("a group needs at least one generator".into()))?;
        Self::with_degree(degree, generators)
    }

    /// Allows an empty generator list (the trivial group).
    pub fn with_degree(degree: usize, generators: Vec<Permutation>) -> Result<Self> {
        if let Some(bad) = generators.iter().find(|g| g.degree() != degree) {
            return Err(Error::DegreeMismatch { expected: degree, found: bad.degree() });
        }
        let chain = StabChain::new(degree, &generators);
        Ok(PermGroup {
            inner: Arc::new(Inner {
                degree,
                generators,
                chain,
                name: None,
                bound: ELEMENT_BOUND,
                enumerated: OnceLock::new(),
                classes: OnceLock::new(),
            }),
        })
    }

    pub fn trivial(degree: usize) -> Self {
        Self::with_degree(degree, Vec::new()).expect("empty generator list is valid")
    }

    pub fn named(self, name: impl Into<String>) -> Self {
        self.rebuild(Some(name.into()), self.inner.bound)
    }

    /// Changes the element-iteration bound (default 10⁶).
    pub fn with_element_bound(self, bound: u128) -> Self {
        let name = self.inner.name.clone();
        self.rebuild(name, bound)
    }

    fn rebuild(&self, name: Option<String>, bound: u128) -> Self {
        PermGroup {
            inner: Arc::new(Inner {
                degree: self.inner.degree,
                generators: self.inner.generators.clone(),
                chain: self.inner.chain.clone(),
                name,
                bound,
                enumerated: OnceLock::new(),
                classes: OnceLock::new(),
            }),
        }
    }

    pub fn name(&self) -> Option<&str> {
        self.inner.name.as_deref()
    }

    pub fn degree(&self) -> usize {
        self.inner.degree
    }

    pub fn generators(&self) -> &[Permutation] {
        &self.inner.generators
    }

    pub fn strong_generators(&self) -> Vec<Permutation> {
        self.inner.chain.strong_generators()
    }

    pub fn base(&self) -> Vec<usize> {
        self.inner.chain.base()
    }

    pub fn order(&self) -> u128 {
        self.inner.chain.order()
    }

    pub fn element_bound(&self) -> u128 {
        self.inner.bound
    }

    pub fn identity(&self) -> Permutation {
        Permutation::identity(self.degree())
    }

    pub fn contains(&self, g: &Permutation) -> bool {
        self.inner.chain.contains(g)
    }

    pub fn is_subgroup_of(&self, other: &PermGroup) -> bool {
        self.degree() == other.degree() && self.generators().iter().all(|g| other.contains(g))
    }

    /// Requires `self ≤ other`.
    pub fn is_normal_in(&self, other: &PermGroup) -> bool {
        self.is_subgroup_of(other)
            && other
                .generators()
                .iter()
                .all(|g| self.generators().iter().all(|h| self.contains(&h.conjugate_by(g))))
    }

    pub fn is_abelian(&self) -> bool {
        let gens = self.generators();
        gens.iter().enumerate().all(|(i, a)| gens[..i].iter().all(|b| a.compose(b) == b.compose(a)))
    }

    /// Subgroup generated by `gens`, which must be members.
    pub fn subgroup(&self, gens: Vec<Permutation>) -> Result<PermGroup> {
        if let Some(bad) = gens.iter().find(|g| !self.contains(g)) {
            return Err(Error::NotSubgroup(format!("{bad} is not in the ambient group")));
        }
        PermGroup::with_degree(self.degree(), gens)
    }

    /// Visits elements in chain order without storing them; stops when `f` returns false.
    pub fn for_each_element<F: FnMut(&Permutation) -> bool>(&self, f: F) {
        self.inner.chain.for_each_element(f)
    }

    /// The element store, built once; fails when |G| exceeds the element bound.
    pub fn enumerated(&self) -> Result<Arc<EnumeratedGroup>> {
        if let Some(e) = self.inner.enumerated.get() {
            return Ok(e.clone());
        }
        if self.order() > self.inner.bound {
            return Err(Error::BoundExceeded { what: "group order", size: self.order(), bound: self.inner.bound });
        }
        Ok(self.inner.enumerated.get_or_init(|| Arc::new(EnumeratedGroup::build(self))).clone())
    }

    /// All elements, sorted with the identity first.
    pub fn elements(&self) -> Result<Vec<Permutation>> {
        Ok(self.enumerated()?.elements.clone())
    }

    pub(crate) fn class_data(&self) -> Result<Arc<ClassData>> {
        if let Some(c) = self.inner.classes.get() {
            return Ok(c.clone());
        }
        let en = self.enumerated()?;
        Ok(self.inner.classes.get_or_init(|| Arc::new(compute_classes(&en))).clone())
    }

    pub fn conjugacy_classes(&self) -> Result<ConjugacyClassSet> {
        Ok(self.class_data()?.set.clone())
    }

    /// Index of the class containing `g`.
    pub fn class_of(&self, g: &Permutation) -> Result<usize> {
        if !self.contains(g) {
            return Err(Error::NotMember);
        }
        let data = self.class_data()?;
        let en = self.enumerated()?;
        let idx = en.index_of(g).ok_or(Error::NotMember)?;
        Ok(data.element_class[idx as usize] as usize)
    }

    pub fn exponent(&self) -> Result<u64> {
        let data = self.class_data()?;
        Ok(data.set.orders.iter().fold(1u64, |acc, &o| num_integer::lcm(acc, o)))
    }
}

impl fmt::Debug for PermGroup {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "PermGroup(")?;
        if let Some(n) = self.name() {
            write!(f, "{n}, ")?;
        }
        write!(f, "order {}, degree {})", self.order(), self.degree())
    }
}

/// Explicit element list with index lookup.
pub struct EnumeratedGroup {
    elements: Vec<Permutation>,
    index: HashMap<Permutation, u32>,
    inverse: Vec<u32>,
    orders: Vec<u32>,
    generators: Vec<u32>,
    table: OnceLock<Option<Vec<u32>>>,
}

impl EnumeratedGroup {
    fn build(group: &PermGroup) -> Self {
        let mut elements = Vec::with_capacity(group.order() as usize);
        group.for_each_element(|g| {
            elements.push(g.clone());
            true
        });
        elements.sort();
        let index: HashMap<Permutation, u32> =
            elements.iter().enumerate().map(|(i, g)| (g.clone(), i as u32)).collect();
        let inverse = elements.iter().map(|g| index[&g.inverse()]).collect();
        let orders = elements.iter().map(|g| g.order() as u32).collect();
        let generators = group.generators().iter().map(|g| index[g]).collect();
        EnumeratedGroup { elements, index, inverse, orders, generators, table: OnceLock::new() }
    }

    pub fn len(&self) -> usize {
        self.elements.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elements.is_empty()
    }

    pub fn elements(&self) -> &[Permutation] {
        &self.elements
    }

    pub fn element(&self, i: u32) -> &Permutation {
        &self.elements[i as usize]
    }

    pub fn index_of(&self, g: &Permutation) -> Option<u32> {
        self.index.get(g).copied()
    }

    pub fn inverse(&self, i: u32) -> u32 {
        self.inverse[i as usize]
    }

    pub fn order_of(&self, i: u32) -> u32 {
        self.orders[i as usize]
    }

    pub fn generator_indices(&self) -> &[u32] {
        &self.generators
    }

    fn table(&self) -> Option<&Vec<u32>> {
        self.table
            .get_or_init(|| {
                let n = self.len();
                (n <= MULT_TABLE_BOUND).then(|| {
                    let mut t = Vec::with_capacity(n * n);
                    for a in &self.elements {
                        for b in &self.elements {
                            t.push(self.index[&a.compose(b)]);
                        }
                    }
                    t
                })
            })
            .as_ref()
    }

    /// Index of `elements[a] ∘ elements[b]`.
    #[inline]
    pub fn mul(&self, a: u32, b: u32) -> u32 {
        match self.table() {
            Some(t) => t[a as usize * self.len() + b as usize],
            None => self.index[&self.elements[a as usize].compose(&self.elements[b as usize])],
        }
    }

    pub fn pow(&self, a: u32, e: u64) -> u32 {
        let mut acc = 0u32;
        for _ in 0..(e % self.orders[a as usize] as u64) {
            acc = self.mul(acc, a);
        }
        acc
    }

    /// `g x g⁻¹` on indices.
    pub fn conjugate(&self, x: u32, g: u32) -> u32 {
        self.mul(self.mul(g, x), self.inverse(g))
    }

    /// Subgroup generated by the given element indices, as a bitset.
    pub fn closure(&self, gens: &[u32]) -> BitSet {
        let mut start = BitSet::new(self.len());
        start.insert(0);
        self.closure_from(&start, gens)
    }

    /// Closure of `start` under right multiplication by `gens`. When `start` is a
    /// subgroup whose generators are among `gens`, this is the join.
    pub fn closure_from(&self, start: &BitSet, gens: &[u32]) -> BitSet {
        let mut set = start.clone();
        let mut queue: Vec<u32> = set.iter().map(|i| i as u32).collect();
        let mut k = 0;
        while k < queue.len() {
            let x = queue[k];
            for &s in gens {
                let y = self.mul(x, s);
                if set.insert(y as usize) {
                    queue.push(y);
                }
            }
            k += 1;
        }
        set
    }

    /// A small generating set for a subgroup given as a bitset.
    pub fn generating_subset(&self, subgroup: &BitSet) -> Vec<u32> {
        let mut gens = Vec::new();
        let mut span = BitSet::new(self.len());
        span.insert(0);
        let total = subgroup.count();
        for i in subgroup.iter() {
            if span.count() == total {
                break;
            }
            if !span.contains(i) {
                gens.push(i as u32);
                span = self.closure(&gens);
            }
        }
        gens
    }

    pub fn to_group(&self, degree: usize, subgroup: &BitSet) -> PermGroup {
        let gens = self.generating_subset(subgroup).iter().map(|&i| self.elements[i as usize].clone()).collect();
        PermGroup::with_degree(degree, gens).expect("elements share the group degree")
    }

    pub fn bitset_of(&self, h: &PermGroup) -> Result<BitSet> {
        let mut gens = Vec::new();
        for g in h.generators() {
            gens.push(self.index_of(g).ok_or_else(|| Error::NotSubgroup(format!("{g} not in group")))?);
        }
        Ok(self.closure(&gens))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn group(deg: usize, gens: &[&str]) -> PermGroup {
        PermGroup::new(gens.iter().map(|s| Permutation::parse(s, deg).unwrap()).collect()).unwrap()
    }

    #[test]
    fn orders_of_examples() {
        assert_eq!(group(5, &["(1 2 3 4 5)", "(1 2 3)"]).order(), 60);
        assert_eq!(group(5, &["(1 2 3 4 5)", "(1 2)"]).order(), 120);
        assert_eq!(group(5, &["()"]).order(), 1);
        assert_eq!(PermGroup::trivial(3).order(), 1);
    }

    #[test]
    fn degree_mismatch_rejected() {
        let gens = vec![Permutation::parse("(1 2)", 2).unwrap(), Permutation::parse("(1 2 3)", 3).unwrap()];
        assert!(matches!(PermGroup::new(gens), Err(Error::DegreeMismatch { .. })));
    }

    #[test]
    fn enumeration_sorted_with_identity_first() {
        let g = group(4, &["(1 2 3 4)", "(1 2)"]);
        let en = g.enumerated().unwrap();
        assert_eq!(en.len(), 24);
        assert!(en.element(0).is_identity());
        assert!(en.elements().windows(2).all(|w| w[0] < w[1]));
        for a in 0..24u32 {
            assert_eq!(en.mul(a, en.inverse(a)), 0);
        }
    }

    #[test]
    fn closure_and_generating_subset() {
        let g = group(4, &["(1 2 3 4)", "(1 2)"]);
        let en = g.enumerated().unwrap();
        let a = en.index_of(&Permutation::parse("(1 2 3)", 4).unwrap()).unwrap();
        let b = en.index_of(&Permutation::parse("(1 2)(3 4)", 4).unwrap()).unwrap();
        let a4 = en.closure(&[a, b]);
        assert_eq!(a4.count(), 12);
        let sub = en.to_group(4, &a4);
        assert_eq!(sub.order(), 12);
        let c = en.index_of(&Permutation::parse("(1 2)", 4).unwrap()).unwrap();
        assert_eq!(en.closure_from(&a4, &[a, b, c]).count(), 24);
        assert_eq!(en.generating_subset(&a4).len(), 2);
    }

    #[test]
    fn element_bound_is_enforced() {
        let g = group(5, &["(1 2 3 4 5)", "(1 2)"]).with_element_bound(100);
        assert!(matches!(g.enumerated(), Err(Error::BoundExceeded { .. })));
    }
}
