//! Structural checks built on α: direct sums, solvability, the class of
//! groups with only trivial α, induction from normal subgroups and outer
//! tensor products.

use num_integer::Integer;

use super::{AlphaEngine, AlphaReport, OuterTensor, TableCharacter};
use crate::chartable::{CharacterTable, ClassFunction};
use crate::error::{Error, Result};
use crate::perm::named::direct_product;
use crate::perm::{derived_series, is_solvable};
use crate::util::gcd_all;

#[derive(Clone, Debug)]
pub struct DirectSumReport {
    pub components: Vec<u128>,
    pub gcd: u128,
    /// α of the summed character, computed directly.
    pub direct: u128,
}

impl DirectSumReport {
    pub fn agrees(&self) -> bool {
        self.gcd == self.direct
    }
}

pub fn direct_sum_alpha(table: &CharacterTable, parts: &[ClassFunction]) -> Result<DirectSumReport> {
    let g = table.group().ok_or_else(|| Error::InvalidInput("table has no group realization".into()))?;
    if parts.is_empty() {
        return Err(Error::InvalidInput("empty direct sum".into()));
    }
    let engine = AlphaEngine::new(g);
    let components = parts
        .iter()
        .map(|chi| Ok(engine.alpha(&TableCharacter::new(table, chi.clone())?)?.alpha))
        .collect::<Result<Vec<_>>>()?;
    let total = parts[1..].iter().fold(parts[0].clone(), |acc, chi| &acc + chi);
    let direct = engine.alpha(&TableCharacter::new(table, total)?)?.alpha;
    Ok(DirectSumReport { gcd: gcd_all(components.iter().copied()), components, direct })
}

#[derive(Clone, Debug)]
pub struct SolvabilityReport {
    pub derived_series_solvable: bool,
    pub all_nontrivial_alpha_gt_1: bool,
    pub agree: bool,
    pub alphas: Vec<u128>,
}

/// Compares the derived series with the α values of the irreducibles.
pub fn solvability_crosscheck(table: &CharacterTable) -> Result<SolvabilityReport> {
    let g = table.group().ok_or_else(|| Error::InvalidInput("table has no group realization".into()))?;
    let alphas: Vec<u128> = AlphaEngine::new(g).alpha_all(table)?.iter().map(|r| r.alpha).collect();
    let derived_series_solvable = is_solvable(g);
    let all_nontrivial_alpha_gt_1 = alphas.iter().skip(1).all(|&a| a > 1);
    Ok(SolvabilityReport {
        derived_series_solvable,
        all_nontrivial_alpha_gt_1,
        agree: derived_series_solvable == all_nontrivial_alpha_gt_1,
        alphas,
    })
}

/// Whether every irreducible has α = 1.
pub fn totally_trivial_scan(table: &CharacterTable) -> Result<bool> {
    let g = table.group().ok_or_else(|| Error::InvalidInput("table has no group realization".into()))?;
    let engine = AlphaEngine::new(g);
    for j in 1..table.irreducibles().len() {
        if engine.alpha(&TableCharacter::irreducible(table, j)?)?.alpha != 1 {
            return Ok(false);
        }
    }
    Ok(true)
}

#[derive(Clone, Debug)]
pub struct InductionReport {
    pub alpha_omega: u128,
    pub alpha_induced: u128,
    /// (irreducible index in G's table, multiplicity, α) for each constituent of ω^G.
    pub constituents: Vec<(usize, i64, u128)>,
    pub quotient_solvable: bool,
    /// α(ω) = 1 ⇒ α(ω^G) = 1.
    pub trivial_propagates: bool,
    /// α(ω) | α(ω^G).
    pub divides: bool,
    /// G/N solvable and α(ω) = 1 ⇒ some constituent has α = 1.
    pub trivial_constituent: bool,
}

impl InductionReport {
    pub fn holds(&self) -> bool {
        self.trivial_propagates && self.divides && self.trivial_constituent
    }
}

pub fn induction_alpha_checks(g_table: &CharacterTable, n_table: &CharacterTable, omega: &ClassFunction) -> Result<InductionReport> {
    let g = g_table.group().ok_or_else(|| Error::InvalidInput("table has no group realization".into()))?;
    let n = n_table.group().ok_or_else(|| Error::InvalidInput("table has no group realization".into()))?;
    if !n.is_normal_in(g) {
        return Err(Error::InvalidInput("subgroup is not normal".into()));
    }
    let alpha_omega = AlphaEngine::new(n).alpha(&TableCharacter::new(n_table, omega.clone())?)?.alpha;
    let induced = g_table.induce(omega, n_table)?;
    let engine = AlphaEngine::new(g);
    let alpha_induced = engine.alpha(&TableCharacter::new(g_table, induced.clone())?)?.alpha;
    let mut constituents = Vec::new();
    for (j, m) in g_table.decompose(&induced)?.into_iter().enumerate() {
        if m > 0 {
            constituents.push((j, m, engine.alpha(&TableCharacter::irreducible(g_table, j)?)?.alpha));
        }
    }
    let last = derived_series(g).pop().expect("series starts at G");
    let quotient_solvable = last.is_subgroup_of(n);
    let trivial = alpha_omega == 1;
    Ok(InductionReport {
        alpha_omega,
        alpha_induced,
        quotient_solvable,
        trivial_propagates: !trivial || alpha_induced == 1,
        divides: alpha_induced % alpha_omega == 0,
        trivial_constituent: !(trivial && quotient_solvable) || constituents.iter().any(|c| c.2 == 1),
        constituents,
    })
}

#[derive(Clone, Debug)]
pub struct TensorReport {
    pub alpha_left: u128,
    pub alpha_right: u128,
    pub alpha_tensor: u128,
    /// lcm(α, α′) | α(ρ⊗ψ).
    pub lcm_divides: bool,
    /// α(ρ⊗ψ) | α·α′.
    pub divides_product: bool,
    pub coprime_orders: bool,
    /// α(ρ⊗ψ) = α·α′ whenever the factor orders are coprime.
    pub coprime_equality: bool,
    pub report: AlphaReport,
}

impl TensorReport {
    pub fn holds(&self) -> bool {
        self.lcm_divides && self.divides_product && self.coprime_equality
    }
}

/// α of the outer tensor product ρ ⊗ ψ on A × B against the α of the factors.
pub fn tensor_alpha_checks(a: &CharacterTable, rho: &ClassFunction, b: &CharacterTable, psi: &ClassFunction) -> Result<TensorReport> {
    let ga = a.group().ok_or_else(|| Error::InvalidInput("table has no group realization".into()))?;
    let gb = b.group().ok_or_else(|| Error::InvalidInput("table has no group realization".into()))?;
    let left = TableCharacter::new(a, rho.clone())?;
    let right = TableCharacter::new(b, psi.clone())?;
    let alpha_left = AlphaEngine::new(ga).alpha(&left)?.alpha;
    let alpha_right = AlphaEngine::new(gb).alpha(&right)?.alpha;
    let product = direct_product(ga, gb);
    let tensor = OuterTensor::new(product.clone(), left, right)?;
    let report = AlphaEngine::new(&product).alpha(&tensor)?;
    let t = report.alpha;
    let coprime = ga.order().gcd(&gb.order()) == 1;
    Ok(TensorReport {
        alpha_left,
        alpha_right,
        alpha_tensor: t,
        lcm_divides: t % alpha_left.lcm(&alpha_right) == 0,
        divides_product: (alpha_left * alpha_right) % t == 0,
        coprime_orders: coprime,
        coprime_equality: !coprime || t == alpha_left * alpha_right,
        report,
    })
}
