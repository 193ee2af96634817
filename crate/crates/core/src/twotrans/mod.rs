//! Augmentation modules of transitive actions and their α-characteristic.
//!
//! For a transitive action on X with Sylow p-subgroup P, the augmentation
//! module V = ℝX ⊖ ℝ has V^P ≠ 0 iff P has more than one orbit on X. A
//! p-group is transitive only on a p-power set, and when |X| = p^k some
//! conjugate of a Sylow subgroup of the stabilizer lies in P, so P is
//! transitive. Hence α(V) > 1 iff |X| is a prime power, and then that prime
//! is the only one dividing α.

mod excerpt;
mod socle;

use rayon::prelude::*;

use crate::alpha::{AlphaEngine, GroupCharacter};
use crate::chartable::CharacterTable;
use crate::cyclo::Cyclotomic;
use crate::error::{Error, Result};
use crate::perm::{coset_action, GroupAction, PermGroup, Permutation, SubgroupLattice};
use crate::util::prime_power;

pub use excerpt::{
    parse_excerpt, verify_classification_excerpt, ActionCheck, ExcerptReport, ExcerptRow, InstanceReport, RowReport,
    RowStatus, BUNDLED_EXCERPT,
};
pub use socle::{affine_socle_check, constituent_alphas, SocleKind, SocleReport};

/// g ↦ fix(g) − 1 for a transitive action.
pub struct AugmentationCharacter {
    action: GroupAction,
    label: String,
}

impl AugmentationCharacter {
    pub fn new(action: GroupAction) -> Result<Self> {
        if !action.is_transitive() {
            return Err(Error::InvalidInput("augmentation needs a transitive action".into()));
        }
        let label = format!("aug[{}]", action.degree());
        Ok(AugmentationCharacter { action, label })
    }

    pub fn action(&self) -> &GroupAction {
        &self.action
    }
}

impl GroupCharacter for AugmentationCharacter {
    fn group(&self) -> &PermGroup {
        self.action.group()
    }

    fn sum_over(&self, elements: &[Permutation]) -> Result<Cyclotomic> {
        let mut total = 0i64;
        for x in elements {
            total += self.action.fixed_points(x)? as i64 - 1;
        }
        Ok(Cyclotomic::from_integer(total))
    }

    fn label(&self) -> String {
        self.label.clone()
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum AugmentationVerdict {
    Trivial,
    Divisible { prime: u64 },
}

#[derive(Clone, Debug)]
pub struct CriterionReport {
    pub degree: u128,
    pub prime_power: Option<(u64, u32)>,
    pub verdict: AugmentationVerdict,
    /// α of the augmentation character, computed independently of the verdict.
    pub alpha: u128,
}

/// The verdict predicted by the degree, checked against α.
pub fn augmentation_alpha_criterion(g: &PermGroup, h: &PermGroup) -> Result<CriterionReport> {
    if h.order() == g.order() {
        return Err(Error::InvalidInput("stabilizer must be a proper subgroup".into()));
    }
    criterion_for_action(&AlphaEngine::new(g), coset_action(g, h)?)
}

pub fn criterion_for_action(engine: &AlphaEngine, action: GroupAction) -> Result<CriterionReport> {
    let degree = action.degree() as u128;
    if degree < 2 {
        return Err(Error::InvalidInput("action has a single point".into()));
    }
    let aug = AugmentationCharacter::new(action)?;
    let alpha = engine.alpha(&aug)?.alpha;
    let pp = prime_power(degree);
    let verdict = match pp {
        Some((p, _)) => AugmentationVerdict::Divisible { prime: p },
        None => AugmentationVerdict::Trivial,
    };
    let consistent = match verdict {
        AugmentationVerdict::Trivial => alpha == 1,
        AugmentationVerdict::Divisible { prime } => alpha > 1 && alpha % prime as u128 == 0,
    };
    if !consistent {
        return Err(Error::CheckFailed(format!("degree {degree} but α of the augmentation is {alpha}")));
    }
    Ok(CriterionReport { degree, prime_power: pp, verdict, alpha })
}

#[derive(Clone, Debug)]
pub struct TwoTransRecord {
    pub group: String,
    pub stabilizer: PermGroup,
    /// Conjugacy class of the stabilizer in the subgroup lattice.
    pub class_id: usize,
    pub degree: u128,
    pub prime_power: Option<(u64, u32)>,
    pub faithful: bool,
    /// Index of π − 1 among the irreducibles, when a table is supplied.
    pub augmentation: Option<usize>,
    pub alpha: u128,
}

/// Lattice classes whose coset action is 2-transitive, optionally of one index.
pub fn two_transitive_classes(lattice: &SubgroupLattice, index: Option<u128>) -> Result<Vec<usize>> {
    let g = lattice.group();
    let n = g.order();
    let candidates: Vec<usize> = (0..lattice.class_count())
        .filter(|&c| {
            let h = lattice.class_order(c) as u128;
            // a 2-transitive action of degree d needs |H| ≥ d − 1
            h < n && h * (h + 1) >= n && index.is_none_or(|i| n / h == i)
        })
        .collect();
    let flags = candidates
        .par_iter()
        .map(|&c| Ok(coset_action(g, &lattice.rep_group(c))?.is_two_transitive()))
        .collect::<Result<Vec<bool>>>()?;
    Ok(candidates.into_iter().zip(flags).filter(|&(_, f)| f).map(|(c, _)| c).collect())
}

/// One record per conjugacy class of stabilizers H with ⟨1_H^G, 1_H^G⟩ = 2.
pub fn scan_2transitive(g: &PermGroup, table: Option<&CharacterTable>) -> Result<Vec<TwoTransRecord>> {
    let lattice = SubgroupLattice::compute(g)?;
    scan_2transitive_in(&lattice, table)
}

pub fn scan_2transitive_in(lattice: &SubgroupLattice, table: Option<&CharacterTable>) -> Result<Vec<TwoTransRecord>> {
    let g = lattice.group();
    if let Some(t) = table {
        if t.group().is_none_or(|tg| tg.order() != g.order() || !tg.is_subgroup_of(g)) {
            return Err(Error::InvalidInput("table does not belong to the scanned group".into()));
        }
    }
    let name = g.name().unwrap_or("G").to_string();
    let engine = AlphaEngine::new(g);
    let classes = two_transitive_classes(lattice, None)?;
    classes
        .par_iter()
        .map(|&c| {
            let h = lattice.rep_group(c);
            let action = coset_action(g, &h)?;
            let faithful = action.is_faithful();
            let augmentation = match table {
                Some(t) => Some(single_constituent(t, &action)?),
                None => None,
            };
            let report = criterion_for_action(&engine, action)?;
            Ok(TwoTransRecord {
                group: name.clone(),
                stabilizer: h,
                class_id: c,
                degree: report.degree,
                prime_power: report.prime_power,
                faithful,
                augmentation,
                alpha: report.alpha,
            })
        })
        .collect()
}

/// The augmentation of a 2-transitive action is irreducible.
fn single_constituent(table: &CharacterTable, action: &GroupAction) -> Result<usize> {
    let m = table.decompose(&table.augmentation_character(action)?)?;
    match (m.iter().sum::<i64>(), m.iter().position(|&x| x == 1)) {
        (1, Some(j)) => Ok(j),
        _ => Err(Error::CheckFailed(format!("augmentation of degree {} is reducible", action.degree()))),
    }
}
