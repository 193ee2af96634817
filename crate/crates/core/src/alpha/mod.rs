//! The α-characteristic: gcd of orbit lengths on the unit sphere S(V).
//!
//! Computed one prime at a time. For a Sylow p-subgroup P, every P-orbit
//! length on S(V) is a power of p, so their gcd is the smallest one. An orbit
//! of x has length [P : P_x] and P_x fixes x; conversely any Q ≤ P with
//! V^Q ≠ 0 has a fixed unit vector x with P_x ⊇ Q, so [P : P_x] ≤ [P : Q].
//! Hence α_p = min{[P:Q] : Q ≤ P, V^Q ≠ 0} and α = Π_p α_p.

mod checks;
mod orbit;

use std::collections::HashMap;
use std::sync::{Arc, Mutex};

use rayon::prelude::*;

use crate::chartable::{CharacterTable, ClassFunction};
use crate::cyclo::Cyclotomic;
use crate::error::{Error, Result};
use crate::perm::{named::split_permutation, sylow_subgroup, ConjugacyClassSet, PermGroup, Permutation, SubgroupLattice};
use crate::util::prime_divisors;

pub use checks::{
    direct_sum_alpha, induction_alpha_checks, solvability_crosscheck, tensor_alpha_checks, totally_trivial_scan,
    DirectSumReport, InductionReport, SolvabilityReport, TensorReport,
};
pub use orbit::{is_realizable, orbit_types, orbit_types_in, OrbitTypeLattice, OrbitTypeNode, Realizability};

/// A character of a permutation group, evaluated in sums over element lists.
pub trait GroupCharacter: Sync {
    fn group(&self) -> &PermGroup;

    /// Σ χ(g) over `elements`, which form a subgroup.
    fn sum_over(&self, elements: &[Permutation]) -> Result<Cyclotomic>;

    fn label(&self) -> String {
        String::from("chi")
    }
}

/// A class function of a table whose group realization is attached.
pub struct TableCharacter<'a> {
    table: &'a CharacterTable,
    chi: ClassFunction,
    label: String,
}

impl<'a> TableCharacter<'a> {
    pub fn new(table: &'a CharacterTable, chi: ClassFunction) -> Result<Self> {
        if table.group().is_none() {
            return Err(Error::InvalidInput(format!("table {} has no group realization", table.name())));
        }
        if chi.len() != table.class_count() {
            return Err(Error::InvalidInput("class function length differs from class count".into()));
        }
        Ok(TableCharacter { table, chi, label: String::from("chi") })
    }

    /// The j-th irreducible (0-based), labelled `chi_{j+1}`.
    pub fn irreducible(table: &'a CharacterTable, j: usize) -> Result<Self> {
        let chi = table
            .irreducibles()
            .get(j)
            .cloned()
            .ok_or_else(|| Error::InvalidInput(format!("table {} has no character {}", table.name(), j + 1)))?;
        Ok(Self::new(table, chi)?.labelled(format!("chi_{}", j + 1)))
    }

    pub fn labelled(mut self, label: impl Into<String>) -> Self {
        self.label = label.into();
        self
    }

    pub fn class_function(&self) -> &ClassFunction {
        &self.chi
    }

    pub fn table(&self) -> &CharacterTable {
        self.table
    }
}

impl GroupCharacter for TableCharacter<'_> {
    fn group(&self) -> &PermGroup {
        self.table.group().expect("checked on construction")
    }

    fn sum_over(&self, elements: &[Permutation]) -> Result<Cyclotomic> {
        let labels = classify(self.table, elements)?;
        let mut counts = vec![0i64; self.table.class_count()];
        for c in labels {
            counts[c] += 1;
        }
        Ok(counts
            .iter()
            .enumerate()
            .filter(|(_, &n)| n > 0)
            .map(|(c, &n)| self.chi[c].scale_int(n))
            .sum())
    }

    fn label(&self) -> String {
        self.label.clone()
    }
}

/// Class of each element. Tables with class representatives use the group's
/// own class lookup. Tables carrying only class data (groups too large to
/// enumerate) label elements by order, choosing one class per cyclic subgroup
/// of maximal order and propagating through power maps; the result is correct
/// up to a Galois automorphism when the element list is a subgroup whose
/// cyclic subgroups of each ambiguous order are unique, as for cyclic and
/// elementary abelian subgroups.
pub(crate) fn classify(table: &CharacterTable, elements: &[Permutation]) -> Result<Vec<usize>> {
    let g = table.group().ok_or_else(|| Error::InvalidInput("table has no group realization".into()))?;
    if !table.classes().representatives.is_empty() {
        return elements.iter().map(|x| g.class_of(x)).collect();
    }
    classify_by_order(table.classes(), elements)
}

pub(crate) fn classify_by_order(classes: &ConjugacyClassSet, elements: &[Permutation]) -> Result<Vec<usize>> {
    let index: HashMap<&Permutation, usize> = elements.iter().enumerate().map(|(i, x)| (x, i)).collect();
    let orders: Vec<u64> = elements.iter().map(|x| x.order()).collect();
    let mut by_order: Vec<usize> = (0..elements.len()).collect();
    by_order.sort_by_key(|&i| std::cmp::Reverse(orders[i]));
    let mut labels = vec![usize::MAX; elements.len()];
    for i in by_order {
        if labels[i] != usize::MAX {
            continue;
        }
        let o = orders[i];
        let c = (0..classes.len())
            .find(|&c| classes.orders[c] == o)
            .ok_or_else(|| Error::InvalidInput(format!("no class of element order {o}")))?;
        let mut power = Permutation::identity(elements[i].degree());
        for k in 0..o {
            if let Some(&j) = index.get(&power) {
                if labels[j] == usize::MAX {
                    labels[j] = classes.power_class(c, k as i64).ok_or(Error::MissingPowerMap(o))?;
                }
            }
            power = power.compose(&elements[i]);
        }
    }
    Ok(labels)
}

/// The outer tensor product ρ ⊗ ψ on A × B, as realized by
/// [`crate::perm::named::direct_product`].
pub struct OuterTensor<'a> {
    group: PermGroup,
    left: TableCharacter<'a>,
    right: TableCharacter<'a>,
}

impl<'a> OuterTensor<'a> {
    pub fn new(product: PermGroup, left: TableCharacter<'a>, right: TableCharacter<'a>) -> Result<Self> {
        if product.degree() != left.group().degree() + right.group().degree()
            || product.order() != left.group().order() * right.group().order()
        {
            return Err(Error::InvalidInput("group is not the direct product of the factors".into()));
        }
        Ok(OuterTensor { group: product, left, right })
    }
}

impl GroupCharacter for OuterTensor<'_> {
    fn group(&self) -> &PermGroup {
        &self.group
    }

    fn sum_over(&self, elements: &[Permutation]) -> Result<Cyclotomic> {
        let split = self.left.group().degree();
        let (a, b): (Vec<Permutation>, Vec<Permutation>) = elements.iter().map(|x| split_permutation(x, split)).unzip();
        let la = classify(self.left.table, &a)?;
        let lb = classify(self.right.table, &b)?;
        Ok(la.iter().zip(&lb).map(|(&i, &j)| &self.left.chi[i] * &self.right.chi[j]).sum())
    }

    fn label(&self) -> String {
        format!("{}#{}", self.left.label(), self.right.label())
    }
}

/// dim V^Q = (1/|Q|) Σ_{g∈Q} χ(g).
pub fn fixed_space_dim(chi: &dyn GroupCharacter, q: &PermGroup) -> Result<u64> {
    if !q.is_subgroup_of(chi.group()) {
        return Err(Error::NotSubgroup("fixed-space subgroup is not in the group".into()));
    }
    let mut elements = Vec::with_capacity(q.order() as usize);
    q.for_each_element(|x| {
        elements.push(x.clone());
        true
    });
    dim_from_sum(chi.sum_over(&elements)?, q.order())
}

fn dim_from_sum(sum: Cyclotomic, order: u128) -> Result<u64> {
    let total = sum.to_integer().map_err(|_| Error::NotInteger(format!("character sum {sum} is not an integer")))?;
    if total < 0 || !(total as u128).is_multiple_of(order) {
        return Err(Error::NotInteger(format!("character sum {total} over a subgroup of order {order}")));
    }
    Ok((total as u128 / order) as u64)
}

#[derive(Clone, Debug)]
pub struct LocalAlpha {
    pub prime: u64,
    /// A power of `prime`.
    pub value: u128,
    /// A largest subgroup of the Sylow subgroup with a nonzero fixed vector.
    pub witness: PermGroup,
}

#[derive(Clone, Debug)]
pub struct AlphaReport {
    pub label: String,
    pub alpha: u128,
    pub locals: Vec<LocalAlpha>,
}

struct SylowData {
    sylow: PermGroup,
    /// Subgroup class representatives of P by decreasing order, with their elements.
    levels: Vec<(PermGroup, Vec<Permutation>)>,
}

/// Caches Sylow subgroups and their subgroup lattices for one group.
pub struct AlphaEngine {
    group: PermGroup,
    sylows: Mutex<HashMap<u64, Arc<SylowData>>>,
}

impl AlphaEngine {
    pub fn new(group: &PermGroup) -> Self {
        AlphaEngine { group: group.clone(), sylows: Mutex::new(HashMap::new()) }
    }

    pub fn group(&self) -> &PermGroup {
        &self.group
    }

    fn sylow_data(&self, p: u64) -> Result<Arc<SylowData>> {
        if let Some(d) = self.sylows.lock().unwrap().get(&p) {
            return Ok(d.clone());
        }
        let sylow = sylow_subgroup(&self.group, p)?;
        let lattice = SubgroupLattice::compute(&sylow)?;
        let mut classes: Vec<usize> = (0..lattice.class_count()).collect();
        classes.sort_by_key(|&c| std::cmp::Reverse(lattice.class_order(c)));
        let en = lattice.enumerated();
        let levels = classes
            .iter()
            .map(|&c| {
                let elements = lattice.class_rep(c).iter().map(|i| en.element(i as u32).clone()).collect();
                (lattice.rep_group(c), elements)
            })
            .collect();
        let data = Arc::new(SylowData { sylow, levels });
        self.sylows.lock().unwrap().insert(p, data.clone());
        Ok(data)
    }

    pub fn sylow(&self, p: u64) -> Result<PermGroup> {
        Ok(self.sylow_data(p)?.sylow.clone())
    }

    fn check_group(&self, chi: &dyn GroupCharacter) -> Result<()> {
        let g = chi.group();
        if g.order() != self.group.order() || !g.is_subgroup_of(&self.group) {
            return Err(Error::InvalidInput("character belongs to a different group".into()));
        }
        Ok(())
    }

    /// α_p by descent from P through subgroup classes of decreasing order.
    pub fn alpha_p(&self, chi: &dyn GroupCharacter, p: u64) -> Result<LocalAlpha> {
        self.check_group(chi)?;
        let data = self.sylow_data(p)?;
        let p_order = data.sylow.order();
        for (q, elements) in &data.levels {
            if dim_from_sum(chi.sum_over(elements)?, q.order())? > 0 {
                return Ok(LocalAlpha { prime: p, value: p_order / q.order(), witness: q.clone() });
            }
        }
        Err(Error::InvalidInput("character has no fixed vector under the trivial subgroup".into()))
    }

    pub fn alpha(&self, chi: &dyn GroupCharacter) -> Result<AlphaReport> {
        let locals = prime_divisors(self.group.order())
            .into_iter()
            .map(|p| self.alpha_p(chi, p))
            .collect::<Result<Vec<_>>>()?;
        let alpha = locals.iter().map(|l| l.value).product();
        Ok(AlphaReport { label: chi.label(), alpha, locals })
    }

    /// α of every irreducible of `table`, in table order.
    pub fn alpha_all(&self, table: &CharacterTable) -> Result<Vec<AlphaReport>> {
        // Sylow data is built up front so the parallel map only reads the cache.
        for p in prime_divisors(self.group.order()) {
            self.sylow_data(p)?;
        }
        (0..table.irreducibles().len())
            .into_par_iter()
            .map(|j| self.alpha(&TableCharacter::irreducible(table, j)?))
            .collect()
    }
}

/// α of one character without keeping the engine.
pub fn alpha(chi: &dyn GroupCharacter) -> Result<AlphaReport> {
    AlphaEngine::new(chi.group()).alpha(chi)
}

#[cfg(test)]
mod tests;
