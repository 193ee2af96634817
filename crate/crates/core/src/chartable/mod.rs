//! Character tables and class-function calculus.

mod dixon;
pub mod io;
mod modp;

use std::collections::HashMap;
use std::ops::{Add, Index, Sub};
use std::sync::{Arc, Mutex};

use crate::cyclo::{Cyclotomic, Rational};
use crate::error::{Error, Result};
use crate::perm::{ConjugacyClassSet, GroupAction, PermGroup, Permutation};

pub use dixon::{compute_table_dixon, compute_table_dixon_with_bound, DIXON_BOUND};

/// One value per conjugacy class, in the owning table's class order.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct ClassFunction {
    values: Vec<Cyclotomic>,
}

impl ClassFunction {
    pub fn new(values: Vec<Cyclotomic>) -> Self {
        ClassFunction { values }
    }

    pub fn from_integers(values: &[i64]) -> Self {
        ClassFunction { values: values.iter().map(|&v| Cyclotomic::from_integer(v)).collect() }
    }

    pub fn values(&self) -> &[Cyclotomic] {
        &self.values
    }

    pub fn len(&self) -> usize {
        self.values.len()
    }

    pub fn is_empty(&self) -> bool {
        self.values.is_empty()
    }

    /// Value on the identity class.
    pub fn degree(&self) -> Result<i64> {
        self.values[0].to_integer()
    }

    pub fn scale(&self, c: &Cyclotomic) -> Self {
        ClassFunction { values: self.values.iter().map(|v| v * c).collect() }
    }

    pub fn conj(&self) -> Self {
        ClassFunction { values: self.values.iter().map(Cyclotomic::conj).collect() }
    }

    pub fn galois_apply(&self, k: i64) -> Result<Self> {
        Ok(ClassFunction { values: self.values.iter().map(|v| v.galois_apply(k)).collect::<Result<_>>()? })
    }

    pub fn is_rational(&self) -> bool {
        self.values.iter().all(Cyclotomic::is_rational)
    }
}

impl Index<usize> for ClassFunction {
    type Output = Cyclotomic;
    fn index(&self, i: usize) -> &Cyclotomic {
        &self.values[i]
    }
}

impl<'a> Add<&'a ClassFunction> for &'a ClassFunction {
    type Output = ClassFunction;
    fn add(self, rhs: &ClassFunction) -> ClassFunction {
        ClassFunction { values: self.values.iter().zip(&rhs.values).map(|(a, b)| a + b).collect() }
    }
}

impl<'a> Sub<&'a ClassFunction> for &'a ClassFunction {
    type Output = ClassFunction;
    fn sub(self, rhs: &ClassFunction) -> ClassFunction {
        ClassFunction { values: self.values.iter().zip(&rhs.values).map(|(a, b)| a - b).collect() }
    }
}

/// A permutation character with its action data.
#[derive(Clone, Debug)]
pub struct PermutationCharacter {
    pub character: ClassFunction,
    pub degree: usize,
    pub stabilizer: Option<PermGroup>,
}

/// Irreducible characters with class data. Tables built from a group keep the
/// group, so class functions can be evaluated on elements and restricted.
pub struct CharacterTable {
    name: String,
    classes: ConjugacyClassSet,
    irreducibles: Vec<ClassFunction>,
    group: Option<PermGroup>,
    fusions: Mutex<HashMap<Vec<Permutation>, Arc<Vec<usize>>>>,
}

impl std::fmt::Debug for CharacterTable {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "CharacterTable({}, {} classes)", self.name, self.classes.len())
    }
}

impl Clone for CharacterTable {
    fn clone(&self) -> Self {
        CharacterTable {
            name: self.name.clone(),
            classes: self.classes.clone(),
            irreducibles: self.irreducibles.clone(),
            group: self.group.clone(),
            fusions: Mutex::new(self.fusions.lock().unwrap().clone()),
        }
    }
}

impl CharacterTable {
    /// Assembles and verifies a table: trivial character first, both
    /// orthogonality relations, and Σ χ(1)² = |G|.
    pub fn new(
        name: impl Into<String>,
        classes: ConjugacyClassSet,
        irreducibles: Vec<ClassFunction>,
        group: Option<PermGroup>,
    ) -> Result<Self> {
        let table = CharacterTable { name: name.into(), classes, irreducibles, group, fusions: Mutex::new(HashMap::new()) };
        table.verify()?;
        Ok(table)
    }

    fn verify(&self) -> Result<()> {
        let k = self.classes.len();
        let reject = |m: String| Err(Error::TableRejected(m));
        if self.irreducibles.len() != k {
            return reject(format!("{} characters for {k} classes", self.irreducibles.len()));
        }
        if let Some(bad) = self.irreducibles.iter().find(|c| c.len() != k) {
            return reject(format!("character with {} values for {k} classes", bad.len()));
        }
        if self.classes.sizes[0] != 1 {
            return reject("first class is not the identity".into());
        }
        if self.irreducibles[0] != self.trivial() {
            return reject("first character is not trivial".into());
        }
        let order = self.order();
        for (i, a) in self.irreducibles.iter().enumerate() {
            for (j, b) in self.irreducibles.iter().enumerate().take(i + 1) {
                let ip = self.inner_product(a, b);
                let expected = Cyclotomic::from_integer((i == j) as i64);
                if ip != expected {
                    return reject(format!("row orthogonality fails for characters {} and {}", j + 1, i + 1));
                }
            }
        }
        for c in 0..k {
            for d in 0..=c {
                let s: Cyclotomic = self.irreducibles.iter().map(|chi| &chi[c] * &chi[d].conj()).sum();
                let expected =
                    if c == d { Cyclotomic::from_integer(self.classes.centralizer_order(c) as i64) } else { Cyclotomic::zero() };
                if s != expected {
                    return reject(format!("column orthogonality fails for classes {} and {}", d + 1, c + 1));
                }
            }
        }
        let mut sum_sq = 0i64;
        for chi in &self.irreducibles {
            let d = chi.degree().map_err(|_| Error::TableRejected("non-integral degree".into()))?;
            if d <= 0 {
                return reject("non-positive degree".into());
            }
            sum_sq += d * d;
        }
        if sum_sq as u64 != order {
            return reject(format!("degrees square-sum to {sum_sq}, group order is {order}"));
        }
        Ok(())
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn order(&self) -> u64 {
        self.classes.group_order()
    }

    pub fn classes(&self) -> &ConjugacyClassSet {
        &self.classes
    }

    pub fn class_count(&self) -> usize {
        self.classes.len()
    }

    pub fn group(&self) -> Option<&PermGroup> {
        self.group.as_ref()
    }

    fn require_group(&self) -> Result<&PermGroup> {
        self.group.as_ref().ok_or_else(|| Error::InvalidInput(format!("table {} has no group realization", self.name)))
    }

    pub fn irreducibles(&self) -> &[ClassFunction] {
        &self.irreducibles
    }

    pub fn irreducible(&self, i: usize) -> &ClassFunction {
        &self.irreducibles[i]
    }

    pub fn degrees(&self) -> Vec<i64> {
        self.irreducibles.iter().map(|c| c.degree().expect("verified degree")).collect()
    }

    pub fn trivial(&self) -> ClassFunction {
        ClassFunction::new(vec![Cyclotomic::one(); self.class_count()])
    }

    fn check_len(&self, chi: &ClassFunction) -> Result<()> {
        if chi.len() != self.class_count() {
            return Err(Error::InvalidInput(format!(
                "class function has {} values, table has {} classes",
                chi.len(),
                self.class_count()
            )));
        }
        Ok(())
    }

    /// (1/|G|) Σ |C| χ(C) conj(ψ(C)), exactly.
    pub fn inner_product(&self, chi: &ClassFunction, psi: &ClassFunction) -> Cyclotomic {
        let mut acc = Cyclotomic::zero();
        for (c, &size) in self.classes.sizes.iter().enumerate() {
            let term = &chi[c] * &psi[c].conj();
            acc = &acc + &term.scale_int(size as i64);
        }
        acc.scale_rational(&Rational::new(1.into(), (self.order() as i64).into()))
    }

    /// Inner product that must be an integer, as it is for two characters.
    pub fn inner_product_int(&self, chi: &ClassFunction, psi: &ClassFunction) -> Result<i64> {
        self.check_len(chi)?;
        self.check_len(psi)?;
        self.inner_product(chi, psi).to_integer()
    }

    /// Multiplicities of the irreducibles in χ.
    pub fn decompose(&self, chi: &ClassFunction) -> Result<Vec<i64>> {
        self.irreducibles.iter().map(|irr| self.inner_product_int(chi, irr)).collect()
    }

    pub fn is_character(&self, chi: &ClassFunction) -> bool {
        self.decompose(chi).map(|m| m.iter().all(|&x| x >= 0) && m.iter().any(|&x| x > 0)).unwrap_or(false)
    }

    pub fn is_irreducible(&self, chi: &ClassFunction) -> bool {
        self.inner_product_int(chi, chi).map(|n| n == 1).unwrap_or(false) && chi[0].to_integer().is_ok_and(|d| d > 0)
    }

    /// Σ mᵢ χᵢ for a multiplicity vector.
    pub fn combine(&self, multiplicities: &[i64]) -> ClassFunction {
        let mut acc = ClassFunction::new(vec![Cyclotomic::zero(); self.class_count()]);
        for (m, chi) in multiplicities.iter().zip(&self.irreducibles) {
            if *m != 0 {
                acc = &acc + &chi.scale(&Cyclotomic::from_integer(*m));
            }
        }
        acc
    }

    pub fn tensor(&self, a: &ClassFunction, b: &ClassFunction) -> ClassFunction {
        ClassFunction::new(a.values.iter().zip(&b.values).map(|(x, y)| x * y).collect())
    }

    fn square_class(&self, c: usize) -> Result<usize> {
        if self.classes.orders[c] == 1 {
            return Ok(0);
        }
        self.classes.power_maps.get(&2).map(|m| m[c]).ok_or(Error::MissingPowerMap(2))
    }

    /// ½(χ(g)² + χ(g²)).
    pub fn sym_square(&self, chi: &ClassFunction) -> Result<ClassFunction> {
        self.square_construction(chi, true)
    }

    /// ½(χ(g)² − χ(g²)).
    pub fn alt_square(&self, chi: &ClassFunction) -> Result<ClassFunction> {
        self.square_construction(chi, false)
    }

    fn square_construction(&self, chi: &ClassFunction, sym: bool) -> Result<ClassFunction> {
        let half = Rational::new(1.into(), 2.into());
        let mut values = Vec::with_capacity(chi.len());
        for c in 0..chi.len() {
            let sq = &chi[c] * &chi[c];
            let at_square = &chi[self.square_class(c)?];
            let v = if sym { &sq + at_square } else { &sq - at_square };
            values.push(v.scale_rational(&half));
        }
        Ok(ClassFunction::new(values))
    }

    /// The linear character with kernel `h`, an index-2 subgroup.
    pub fn sign_character(&self, h: &PermGroup) -> Result<ClassFunction> {
        let g = self.require_group()?;
        if !h.is_subgroup_of(g) || g.order() != 2 * h.order() {
            return Err(Error::InvalidInput("sign twist needs an index-2 subgroup".into()));
        }
        Ok(ClassFunction::new(
            self.classes
                .representatives
                .iter()
                .map(|r| Cyclotomic::from_integer(if h.contains(r) { 1 } else { -1 }))
                .collect(),
        ))
    }

    /// χ ⊗ sign, the sign being the linear character with kernel `h`.
    pub fn sign_twist(&self, chi: &ClassFunction, h: &PermGroup) -> Result<ClassFunction> {
        Ok(self.tensor(chi, &self.sign_character(h)?))
    }

    /// Distinct Galois conjugates under exponents coprime to the exponent of G.
    pub fn galois_orbit(&self, chi: &ClassFunction) -> Vec<ClassFunction> {
        let e = self.classes.exponent() as i64;
        let mut orbit: Vec<ClassFunction> = Vec::new();
        for k in 1..=e.max(1) {
            if num_integer::gcd(k, e) != 1 {
                continue;
            }
            let image = chi.galois_apply(k).expect("k coprime to the exponent");
            if !orbit.contains(&image) {
                orbit.push(image);
            }
        }
        orbit
    }

    /// χ(g) for an element of the underlying group.
    pub fn value_at(&self, chi: &ClassFunction, g: &Permutation) -> Result<Cyclotomic> {
        let grp = self.require_group()?;
        Ok(chi[grp.class_of(g)?].clone())
    }

    /// The class function with values f(rep) on class representatives.
    pub fn class_function_from<F: Fn(&Permutation) -> Cyclotomic>(&self, f: F) -> Result<ClassFunction> {
        if self.classes.representatives.is_empty() {
            return Err(Error::InvalidInput(format!("table {} has no class representatives", self.name)));
        }
        Ok(ClassFunction::new(self.classes.representatives.iter().map(f).collect()))
    }

    pub fn permutation_character(&self, action: &GroupAction) -> Result<PermutationCharacter> {
        let grp = self.require_group()?;
        if action.group().order() != grp.order() || !action.group().is_subgroup_of(grp) {
            return Err(Error::InvalidInput("action is not of this table's group".into()));
        }
        if !action.is_transitive() {
            return Err(Error::InvalidInput("action is not transitive".into()));
        }
        let mut values = Vec::new();
        for r in &self.classes.representatives {
            values.push(Cyclotomic::from_integer(action.fixed_points(r)? as i64));
        }
        Ok(PermutationCharacter {
            character: ClassFunction::new(values),
            degree: action.degree(),
            stabilizer: action.point_stabilizer().cloned(),
        })
    }

    /// π − 1 for a transitive action.
    pub fn augmentation_character(&self, action: &GroupAction) -> Result<ClassFunction> {
        let pi = self.permutation_character(action)?;
        Ok(&pi.character - &self.trivial())
    }

    /// Class fusion from a subgroup table into this one, computed once per subgroup.
    pub fn fusion_from(&self, sub: &CharacterTable) -> Result<Arc<Vec<usize>>> {
        let g = self.require_group()?;
        let h = sub.require_group()?;
        if !h.is_subgroup_of(g) {
            return Err(Error::NotSubgroup(format!("{} is not a subgroup of {}", sub.name, self.name)));
        }
        let key = h.generators().to_vec();
        if let Some(f) = self.fusions.lock().unwrap().get(&key) {
            return Ok(f.clone());
        }
        let map: Vec<usize> =
            sub.classes.representatives.iter().map(|r| g.class_of(r)).collect::<Result<_>>()?;
        let map = Arc::new(map);
        self.fusions.lock().unwrap().insert(key, map.clone());
        Ok(map)
    }

    /// χ|_H as a class function of the subgroup table.
    pub fn restrict(&self, chi: &ClassFunction, sub: &CharacterTable) -> Result<ClassFunction> {
        self.check_len(chi)?;
        let fusion = self.fusion_from(sub)?;
        Ok(ClassFunction::new(fusion.iter().map(|&c| chi[c].clone()).collect()))
    }

    /// ω^G for ω a class function of the subgroup table.
    pub fn induce(&self, omega: &ClassFunction, sub: &CharacterTable) -> Result<ClassFunction> {
        sub.check_len(omega)?;
        let fusion = self.fusion_from(sub)?;
        let g_order = self.order() as i64;
        let h_order = sub.order() as i64;
        let mut values = vec![Cyclotomic::zero(); self.class_count()];
        for (c, &j) in fusion.iter().enumerate() {
            let w = omega[c].scale_int(sub.classes.sizes[c] as i64);
            values[j] = &values[j] + &w;
        }
        for (j, v) in values.iter_mut().enumerate() {
            let factor = Rational::new(g_order.into(), (h_order * self.classes.sizes[j] as i64).into());
            *v = v.scale_rational(&factor);
        }
        Ok(ClassFunction::new(values))
    }

    /// Replaces the name; the table data is unchanged.
    pub fn renamed(mut self, name: impl Into<String>) -> Self {
        self.name = name.into();
        self
    }

    /// Whether two tables agree up to a permutation of rows and of columns
    /// that preserves class sizes, element orders and power maps.
    pub fn equivalent_to(&self, other: &CharacterTable) -> bool {
        self.order() == other.order() && self.column_assignment(other).is_some()
    }

    /// Whether the character values agree up to row and column permutations
    /// preserving class sizes only. Q8 and D8 agree in this sense.
    pub fn same_values_as(&self, other: &CharacterTable) -> bool {
        let k = self.class_count();
        if other.class_count() != k || self.order() != other.order() {
            return false;
        }
        let mut assignment = vec![usize::MAX; k];
        let mut used = vec![false; k];
        self.match_columns_with(other, 0, &mut assignment, &mut used, false)
    }

    /// A column map c ↦ d onto `other` under which sizes, orders and power maps
    /// agree and every row of `self` is a row of `other`. A table without
    /// irreducibles only constrains the class data.
    pub(crate) fn column_assignment(&self, other: &CharacterTable) -> Option<Vec<usize>> {
        let k = self.class_count();
        if other.class_count() != k {
            return None;
        }
        let mut assignment = vec![usize::MAX; k];
        let mut used = vec![false; k];
        self.match_columns_with(other, 0, &mut assignment, &mut used, true).then_some(assignment)
    }

    fn match_columns_with(
        &self,
        other: &CharacterTable,
        c: usize,
        assignment: &mut [usize],
        used: &mut [bool],
        strict: bool,
    ) -> bool {
        let k = self.class_count();
        if c == k {
            return self.rows_match(other, assignment);
        }
        let key = |t: &CharacterTable, i: usize| (t.classes.sizes[i], if strict { t.classes.orders[i] } else { 0 });
        for d in 0..k {
            if used[d] || key(self, c) != key(other, d) {
                continue;
            }
            assignment[c] = d;
            if strict && !self.power_maps_consistent(other, c, assignment) {
                continue;
            }
            used[d] = true;
            if self.match_columns_with(other, c + 1, assignment, used, strict) {
                return true;
            }
            used[d] = false;
        }
        assignment[c] = usize::MAX;
        false
    }

    /// Checks power maps on every pair of assigned columns that involves `c`.
    fn power_maps_consistent(&self, other: &CharacterTable, c: usize, assignment: &[usize]) -> bool {
        for (p, map) in &self.classes.power_maps {
            let Some(omap) = other.classes.power_maps.get(p) else { continue };
            for x in 0..=c {
                let y = map[x];
                if (x == c || y == c) && y <= c && assignment[y] != omap[assignment[x]] {
                    return false;
                }
            }
        }
        true
    }

    fn rows_match(&self, other: &CharacterTable, assignment: &[usize]) -> bool {
        if other.irreducibles.is_empty() {
            return true;
        }
        let mut remaining: Vec<&ClassFunction> = other.irreducibles.iter().collect();
        for chi in &self.irreducibles {
            let pos = remaining.iter().position(|psi| (0..chi.len()).all(|c| psi[assignment[c]] == chi[c]));
            match pos {
                Some(i) => {
                    remaining.swap_remove(i);
                }
                None => return false,
            }
        }
        true
    }
}

impl Cyclotomic {
    pub(crate) fn scale_int(&self, k: i64) -> Cyclotomic {
        self * &Cyclotomic::from_integer(k)
    }

    pub(crate) fn scale_rational(&self, r: &Rational) -> Cyclotomic {
        self * &Cyclotomic::from_rational(r.clone())
    }
}

#[cfg(test)]
mod tests;
