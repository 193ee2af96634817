use super::criterion_for_action;
use crate::alpha::{AlphaEngine, TableCharacter};
use crate::chartable::CharacterTable;
use crate::error::{Error, Result};
use crate::perm::{elementary_abelian_prime, minimal_normal_subgroups, socle, GroupAction, PermGroup};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum SocleKind {
    /// Elementary abelian socle; `regular` when it acts regularly on the points.
    Affine { prime: u64, regular: bool },
    /// A unique minimal normal subgroup, non-abelian.
    AlmostSimple,
    Other,
}

#[derive(Clone, Debug)]
pub struct SocleReport {
    pub degree: u128,
    pub two_transitive: bool,
    pub minimal_normal_orders: Vec<u128>,
    pub socle_order: u128,
    pub kind: SocleKind,
    pub prime_power: Option<(u64, u32)>,
    pub alpha: u128,
}

impl SocleReport {
    /// A 2-transitive group is affine with a regular socle of prime-power
    /// degree and α > 1, or almost simple.
    pub fn holds(&self) -> bool {
        if !self.two_transitive {
            return true;
        }
        match self.kind {
            SocleKind::Affine { prime, regular } => {
                regular && self.socle_order == self.degree && self.prime_power.map(|x| x.0) == Some(prime) && self.alpha > 1
            }
            SocleKind::AlmostSimple => true,
            SocleKind::Other => false,
        }
    }
}

/// Socle analysis of G acting on its own points, which must be transitive.
pub fn affine_socle_check(g: &PermGroup) -> Result<SocleReport> {
    let action = GroupAction::natural(g);
    if action.degree() < 2 || !action.is_transitive() {
        return Err(Error::InvalidInput("group does not act transitively on its points".into()));
    }
    let two_transitive = action.is_two_transitive();
    let degree = action.degree() as u128;
    let minimal = minimal_normal_subgroups(g)?;
    let soc = socle(g)?;
    let kind = match elementary_abelian_prime(&soc) {
        Some(p) => SocleKind::Affine { prime: p, regular: soc.order() == degree && GroupAction::natural(&soc).is_transitive() },
        None if minimal.len() == 1 && !minimal[0].is_abelian() => SocleKind::AlmostSimple,
        None => SocleKind::Other,
    };
    let crit = criterion_for_action(&AlphaEngine::new(g), action)?;
    Ok(SocleReport {
        degree,
        two_transitive,
        minimal_normal_orders: minimal.iter().map(|n| n.order()).collect(),
        socle_order: soc.order(),
        kind,
        prime_power: crit.prime_power,
        alpha: crit.alpha,
    })
}

/// (irreducible index, multiplicity, α) for each constituent of π − 1.
pub fn constituent_alphas(table: &CharacterTable, action: &GroupAction) -> Result<Vec<(usize, i64, u128)>> {
    let g = table.group().ok_or_else(|| Error::InvalidInput("table has no group realization".into()))?;
    let engine = AlphaEngine::new(g);
    let m = table.decompose(&table.augmentation_character(action)?)?;
    let mut out = Vec::new();
    for (j, &k) in m.iter().enumerate() {
        if k > 0 {
            out.push((j, k, engine.alpha(&TableCharacter::irreducible(table, j)?)?.alpha));
        }
    }
    Ok(out)
}
