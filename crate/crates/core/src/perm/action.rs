use std::collections::HashMap;
use std::sync::Arc;

use super::group::EnumeratedGroup;
use super::{PermGroup, Permutation};
use crate::error::{Error, Result};

enum Kind {
    Natural,
    Coset { stabilizer: PermGroup, en: Arc<EnumeratedGroup>, coset_of: Vec<u32>, reps: Vec<u32> },
    Pairs { pairs: Vec<(usize, usize)>, lookup: HashMap<(usize, usize), usize> },
}

/// A homomorphism G → Sym(X) together with its image.
pub struct GroupAction {
    group: PermGroup,
    image: PermGroup,
    kind: Kind,
}

impl GroupAction {
    /// G acting on its own points.
    pub fn natural(group: &PermGroup) -> Self {
        GroupAction { group: group.clone(), image: group.clone(), kind: Kind::Natural }
    }

    pub fn group(&self) -> &PermGroup {
        &self.group
    }

    pub fn image(&self) -> &PermGroup {
        &self.image
    }

    pub fn degree(&self) -> usize {
        self.image.degree()
    }

    pub fn point_stabilizer(&self) -> Option<&PermGroup> {
        match &self.kind {
            Kind::Coset { stabilizer, .. } => Some(stabilizer),
            _ => None,
        }
    }

    /// Unordered pairs in the order used for points (0-based), for the 2-subset action.
    pub fn pairs(&self) -> Option<&[(usize, usize)]> {
        match &self.kind {
            Kind::Pairs { pairs, .. } => Some(pairs),
            _ => None,
        }
    }

    pub fn image_of(&self, g: &Permutation) -> Result<Permutation> {
        if !self.group.contains(g) {
            return Err(Error::NotMember);
        }
        Ok(self.image_of_member(g))
    }

    fn image_of_member(&self, g: &Permutation) -> Permutation {
        match &self.kind {
            Kind::Natural => g.clone(),
            Kind::Coset { en, coset_of, reps, .. } => {
                let gi = en.index_of(g).expect("member of enumerated group");
                let images = reps.iter().map(|&r| coset_of[en.mul(gi, r) as usize]).collect();
                Permutation::from_images_unchecked(images)
            }
            Kind::Pairs { pairs, lookup } => {
                let images = pairs
                    .iter()
                    .map(|&(i, j)| {
                        let (a, b) = (g.apply(i), g.apply(j));
                        lookup[&(a.min(b), a.max(b))] as u32
                    })
                    .collect();
                Permutation::from_images_unchecked(images)
            }
        }
    }

    pub fn fixed_points(&self, g: &Permutation) -> Result<usize> {
        Ok(self.image_of(g)?.fixed_points())
    }

    /// Order of the kernel, |G| / |image|.
    pub fn kernel_order(&self) -> u128 {
        self.group.order() / self.image.order()
    }

    pub fn is_faithful(&self) -> bool {
        self.kernel_order() == 1
    }

    pub fn is_transitive(&self) -> bool {
        orbit_count(self.degree(), self.image.generators(), 1) == 1
    }

    /// Number of orbits on ordered pairs; 2 exactly for 2-transitive actions of degree ≥ 2.
    pub fn rank(&self) -> usize {
        orbit_count(self.degree(), self.image.generators(), 2)
    }

    pub fn is_two_transitive(&self) -> bool {
        self.degree() >= 2 && self.is_transitive() && self.rank() == 2
    }
}

/// Orbits on points (`arity` 1) or ordered pairs (`arity` 2).
fn orbit_count(degree: usize, gens: &[Permutation], arity: u32) -> usize {
    let size = degree.pow(arity);
    let mut seen = vec![false; size];
    let mut count = 0;
    for start in 0..size {
        if seen[start] {
            continue;
        }
        count += 1;
        seen[start] = true;
        let mut stack = vec![start];
        while let Some(x) = stack.pop() {
            for g in gens {
                let y = if arity == 1 {
                    g.apply(x)
                } else {
                    g.apply(x / degree) * degree + g.apply(x % degree)
                };
                if !seen[y] {
                    seen[y] = true;
                    stack.push(y);
                }
            }
        }
    }
    count
}

/// Left translation on the cosets G/H.
pub fn coset_action(g: &PermGroup, h: &PermGroup) -> Result<GroupAction> {
    if !h.is_subgroup_of(g) {
        return Err(Error::NotSubgroup("stabilizer is not contained in the group".into()));
    }
    let en = g.enumerated()?;
    let h_bits = en.bitset_of(h)?;
    let h_members: Vec<u32> = h_bits.iter().map(|i| i as u32).collect();
    let mut coset_of = vec![u32::MAX; en.len()];
    let mut reps = Vec::new();
    for x in 0..en.len() as u32 {
        if coset_of[x as usize] != u32::MAX {
            continue;
        }
        let c = reps.len() as u32;
        reps.push(x);
        for &y in &h_members {
            coset_of[en.mul(x, y) as usize] = c;
        }
    }
    let mut action = GroupAction {
        group: g.clone(),
        image: PermGroup::trivial(reps.len()),
        kind: Kind::Coset { stabilizer: h.clone(), en, coset_of, reps },
    };
    let gens = g.generators().iter().map(|x| action.image_of_member(x)).collect();
    action.image = PermGroup::with_degree(action.kind_degree(), gens)?;
    Ok(action)
}

impl GroupAction {
    fn kind_degree(&self) -> usize {
        match &self.kind {
            Kind::Natural => self.group.degree(),
            Kind::Coset { reps, .. } => reps.len(),
            Kind::Pairs { pairs, .. } => pairs.len(),
        }
    }
}

/// Action of a group of degree n on the unordered pairs {i, j}.
pub fn pair_action(g: &PermGroup) -> Result<GroupAction> {
    let n = g.degree();
    if n < 3 {
        return Err(Error::InvalidInput(format!("pair action needs n ≥ 3, got {n}")));
    }
    let pairs: Vec<(usize, usize)> = (0..n).flat_map(|i| (i + 1..n).map(move |j| (i, j))).collect();
    let lookup = pairs.iter().enumerate().map(|(k, &p)| (p, k)).collect();
    let mut action =
        GroupAction { group: g.clone(), image: PermGroup::trivial(pairs.len()), kind: Kind::Pairs { pairs, lookup } };
    let gens = g.generators().iter().map(|x| action.image_of_member(x)).collect();
    action.image = PermGroup::with_degree(action.kind_degree(), gens)?;
    Ok(action)
}

/// Sₙ acting on 2-subsets of {1..n}.
pub fn two_subset_action(n: usize) -> Result<GroupAction> {
    if n < 3 {
        return Err(Error::InvalidInput(format!("two-subset action needs n ≥ 3, got {n}")));
    }
    pair_action(&super::named::symmetric(n))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::perm::named;

    #[test]
    fn coset_actions_of_a5() {
        let a5 = named::alternating(5);
        let a4 = a5.subgroup(vec![
            Permutation::parse("(1 2 3)", 5).unwrap(),
            Permutation::parse("(1 2)(3 4)", 5).unwrap(),
        ]);
        let act = coset_action(&a5, &a4.unwrap()).unwrap();
        assert_eq!(act.degree(), 5);
        assert!(act.is_transitive());
        assert!(act.is_faithful());
        let d5 = a5
            .subgroup(vec![Permutation::parse("(1 2 3 4 5)", 5).unwrap(), Permutation::parse("(2 5)(3 4)", 5).unwrap()])
            .unwrap();
        assert_eq!(d5.order(), 10);
        let act = coset_action(&a5, &d5).unwrap();
        assert_eq!(act.degree(), 6);
        assert!(act.is_two_transitive());
        let whole = coset_action(&a5, &a5).unwrap();
        assert_eq!(whole.degree(), 1);
        assert_eq!(whole.kernel_order(), 60);
        let outside = named::symmetric(5);
        assert!(coset_action(&a5, &outside).is_err());
    }

    #[test]
    fn coset_action_is_a_homomorphism() {
        let s4 = named::symmetric(4);
        let h = s4.subgroup(vec![Permutation::parse("(1 2)", 4).unwrap()]).unwrap();
        let act = coset_action(&s4, &h).unwrap();
        let els = s4.elements().unwrap();
        for a in &els {
            for b in &els {
                assert_eq!(act.image_of(&a.compose(b)).unwrap(), act.image_of(a).unwrap().compose(&act.image_of(b).unwrap()));
            }
        }
    }

    #[test]
    fn pair_actions() {
        assert_eq!(two_subset_action(4).unwrap().degree(), 6);
        assert_eq!(two_subset_action(5).unwrap().degree(), 10);
        assert!(two_subset_action(2).is_err());
        // n = 3: {i,j} ↔ the complementary point gives an isomorphism with the natural action.
        let act = two_subset_action(3).unwrap();
        let s3 = named::symmetric(3);
        for g in s3.elements().unwrap() {
            let img = act.image_of(&g).unwrap();
            for (k, &(i, j)) in act.pairs().unwrap().iter().enumerate() {
                let missing = 3 - i - j;
                let (a, b) = act.pairs().unwrap()[img.apply(k)];
                assert_eq!(3 - a - b, g.apply(missing));
            }
        }
        assert_eq!(act.image().order(), 6);
    }
}
