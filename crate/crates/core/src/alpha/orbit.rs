//! Orbit types of G on S(V): conjugacy classes (H) of exact stabilizers.
//!
//! (H) is an orbit type iff V^H ≠ 0 and V^K is strictly smaller for every
//! K ⊋ H: the stabilizer of a generic vector of V^H is then exactly H, while
//! a subspace V^H = V^K is never the fixed space of H alone.

use super::{alpha, GroupCharacter};
use crate::error::Result;
use crate::perm::{PermGroup, Permutation, SubgroupLattice, LATTICE_BOUND};
use crate::util::gcd_all;

#[derive(Clone, Debug)]
pub struct OrbitTypeNode {
    pub subgroup: PermGroup,
    pub order: u128,
    pub index: u128,
    pub fixed_dim: u64,
    /// Conjugacy class id in the subgroup lattice of G.
    pub class_id: usize,
}

#[derive(Clone, Debug)]
pub struct OrbitTypeLattice {
    pub group_order: u128,
    /// Exact orbit types, by decreasing order.
    pub nodes: Vec<OrbitTypeNode>,
    /// Covering pairs (smaller, larger) as positions in `nodes`.
    pub edges: Vec<(usize, usize)>,
    /// Covering pairs with (G) drawn on top, as in the usual pictures. When
    /// (G) is not an orbit type it takes position `nodes.len()`.
    pub edges_with_top: Vec<(usize, usize)>,
}

impl OrbitTypeLattice {
    /// gcd of the node indices, which equals α.
    pub fn alpha(&self) -> u128 {
        gcd_all(self.nodes.iter().map(|n| n.index))
    }

    pub fn orders(&self) -> Vec<u128> {
        self.nodes.iter().map(|n| n.order).collect()
    }

    pub fn min_index(&self) -> Option<u128> {
        self.nodes.iter().map(|n| n.index).min()
    }
}

pub fn orbit_types(chi: &dyn GroupCharacter) -> Result<OrbitTypeLattice> {
    let lattice = SubgroupLattice::compute(chi.group())?;
    orbit_types_in(&lattice, chi)
}

/// Orbit types using a precomputed subgroup lattice of the character's group.
pub fn orbit_types_in(lattice: &SubgroupLattice, chi: &dyn GroupCharacter) -> Result<OrbitTypeLattice> {
    let en = lattice.enumerated();
    let k = lattice.class_count();
    let mut dims = Vec::with_capacity(k);
    for c in 0..k {
        let elements: Vec<Permutation> = lattice.class_rep(c).iter().map(|i| en.element(i as u32).clone()).collect();
        dims.push(super::dim_from_sum(chi.sum_over(&elements)?, lattice.class_order(c) as u128)?);
    }
    let mut exact: Vec<usize> = (0..k)
        .filter(|&a| {
            dims[a] > 0 && !(0..k).any(|b| b != a && lattice.subconjugate(a, b) && lattice.class_order(b) > lattice.class_order(a) && dims[b] >= dims[a])
        })
        .collect();
    exact.sort_by_key(|&c| (std::cmp::Reverse(lattice.class_order(c)), c));
    let group_order = en.len() as u128;
    let pos = |ids: &[usize], c: usize| ids.iter().position(|&x| x == c).expect("node in list");
    let edges = lattice.hasse_edges(&exact).iter().map(|&(a, b)| (pos(&exact, a), pos(&exact, b))).collect();
    let top = (0..k).find(|&c| lattice.class_order(c) as u128 == group_order).expect("G is a subgroup of itself");
    let mut with_top = exact.clone();
    if !with_top.contains(&top) {
        with_top.push(top);
    }
    let edges_with_top = lattice
        .hasse_edges(&with_top)
        .iter()
        .map(|&(a, b)| (pos(&with_top, a), pos(&with_top, b)))
        .collect();
    let nodes = exact
        .iter()
        .map(|&c| OrbitTypeNode {
            subgroup: lattice.rep_group(c),
            order: lattice.class_order(c) as u128,
            index: lattice.class_index(c) as u128,
            fixed_dim: dims[c],
            class_id: c,
        })
        .collect();
    Ok(OrbitTypeLattice { group_order, nodes, edges, edges_with_top })
}

#[derive(Clone, Debug)]
pub enum Realizability {
    /// Some orbit has length α; the witness is its stabilizer.
    Realizable { alpha: u128, witness: PermGroup },
    NotRealizable { alpha: u128 },
    /// The group exceeds the subgroup-lattice bound.
    Unknown { alpha: u128 },
}

impl Realizability {
    pub fn is_realizable(&self) -> Option<bool> {
        match self {
            Realizability::Realizable { .. } => Some(true),
            Realizability::NotRealizable { .. } => Some(false),
            Realizability::Unknown { .. } => None,
        }
    }
}

/// Whether some v ∈ S(V) has an orbit of length exactly α.
pub fn is_realizable(chi: &dyn GroupCharacter) -> Result<Realizability> {
    let a = alpha(chi)?.alpha;
    if chi.group().order() > LATTICE_BOUND {
        return Ok(Realizability::Unknown { alpha: a });
    }
    let lattice = orbit_types(chi)?;
    Ok(match lattice.nodes.iter().find(|n| n.index == a) {
        Some(n) => Realizability::Realizable { alpha: a, witness: n.subgroup.clone() },
        None => Realizability::NotRealizable { alpha: a },
    })
}
