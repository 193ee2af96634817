//! Polynomials over Q and reduced Gröbner bases by Buchberger's algorithm.

mod parse;
mod poly;

use std::collections::BTreeSet;

use rayon::prelude::*;

use crate::cyclo::Rational;
use crate::error::{Error, Result};

pub use parse::{parse_polynomial, parse_system};
pub use poly::{Monomial, MonomialOrder, Polynomial};
use poly::{divides, lcm};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IdealBasis {
    pub polys: Vec<Polynomial>,
    pub order: MonomialOrder,
    /// Set only once every S-polynomial reduces to zero.
    pub groebner: bool,
}

impl IdealBasis {
    /// The reduced basis of the unit ideal is {1}.
    pub fn is_unit(&self) -> bool {
        self.groebner && self.polys.len() == 1 && self.polys[0].is_unit()
    }

    pub fn contains(&self, p: &Polynomial) -> bool {
        debug_assert!(self.groebner);
        reduce(p, &self.polys).is_zero()
    }
}

/// Full remainder of `p` on division by `divisors`.
pub fn reduce(p: &Polynomial, divisors: &[Polynomial]) -> Polynomial {
    let mut rest = p.clone();
    let mut rem_terms: Vec<(Monomial, Rational)> = Vec::new();
    'outer: while let Some(lm) = rest.leading_monomial().cloned() {
        let lc = rest.leading_coefficient().cloned().expect("nonzero");
        for g in divisors.iter().filter(|g| !g.is_zero()) {
            let glm = g.leading_monomial().expect("nonzero");
            if divides(glm, &lm) {
                let shift: Monomial = lm.iter().zip(glm).map(|(a, b)| a - b).collect();
                let c = -(&lc / g.leading_coefficient().expect("nonzero"));
                let t = Polynomial::from_terms_in(p.nvars(), p.order(), vec![(shift, c)]);
                rest = rest.add(&t.mul(g));
                continue 'outer;
            }
        }
        rem_terms.push((lm.clone(), lc.clone()));
        let lead = Polynomial::from_terms_in(p.nvars(), p.order(), vec![(lm, lc)]);
        rest = rest.sub(&lead);
    }
    Polynomial::from_terms_in(p.nvars(), p.order(), rem_terms)
}

pub fn s_polynomial(f: &Polynomial, g: &Polynomial) -> Polynomial {
    let (fm, gm) = (f.leading_monomial().expect("nonzero"), g.leading_monomial().expect("nonzero"));
    let l = lcm(fm, gm);
    let part = |p: &Polynomial, m: &Monomial| {
        let shift: Monomial = l.iter().zip(m).map(|(a, b)| a - b).collect();
        let c = p.leading_coefficient().expect("nonzero").recip();
        Polynomial::from_terms_in(p.nvars(), p.order(), vec![(shift, c)]).mul(p)
    };
    part(f, fm).sub(&part(g, gm))
}

/// Reduced Gröbner basis in grevlex order.
pub fn buchberger(generators: &[Polynomial]) -> Result<IdealBasis> {
    buchberger_in(generators, MonomialOrder::Grevlex)
}

pub fn buchberger_in(generators: &[Polynomial], order: MonomialOrder) -> Result<IdealBasis> {
    let nvars = generators
        .first()
        .map(Polynomial::nvars)
        .ok_or_else(|| Error::InvalidInput("no generators".into()))?;
    if generators.iter().any(|g| g.nvars() != nvars) {
        return Err(Error::InvalidInput("generators have different variable counts".into()));
    }
    let mut basis: Vec<Polynomial> =
        generators.iter().filter(|g| !g.is_zero()).map(|g| g.with_order(order).monic()).collect();
    if basis.is_empty() {
        return Ok(IdealBasis { polys: Vec::new(), order, groebner: true });
    }
    if let Some(u) = basis.iter().find(|g| g.is_unit()) {
        return Ok(IdealBasis { polys: vec![u.monic()], order, groebner: true });
    }
    let mut pairs: BTreeSet<(usize, usize)> = BTreeSet::new();
    for j in 0..basis.len() {
        for i in 0..j {
            pairs.insert((i, j));
        }
    }
    while let Some(&(i, j)) = pairs.iter().min_by(|a, b| {
        let la = lcm(basis[a.0].leading_monomial().unwrap(), basis[a.1].leading_monomial().unwrap());
        let lb = lcm(basis[b.0].leading_monomial().unwrap(), basis[b.1].leading_monomial().unwrap());
        order.cmp(&la, &lb).then(a.cmp(b))
    }) {
        pairs.remove(&(i, j));
        let (mi, mj) = (basis[i].leading_monomial().unwrap(), basis[j].leading_monomial().unwrap());
        let l = lcm(mi, mj);
        // coprime leading monomials: the S-polynomial reduces to zero
        if mi.iter().zip(mj).all(|(a, b)| *a == 0 || *b == 0) {
            continue;
        }
        // chain criterion
        let key = |a: usize, b: usize| (a.min(b), a.max(b));
        if (0..basis.len()).any(|k| {
            k != i
                && k != j
                && divides(basis[k].leading_monomial().unwrap(), &l)
                && !pairs.contains(&key(i, k))
                && !pairs.contains(&key(j, k))
        }) {
            continue;
        }
        let r = reduce(&s_polynomial(&basis[i], &basis[j]), &basis);
        if r.is_zero() {
            continue;
        }
        if r.is_unit() {
            return Ok(IdealBasis { polys: vec![Polynomial::one(nvars).with_order(order)], order, groebner: true });
        }
        let k = basis.len();
        basis.push(r.monic());
        for i in 0..k {
            pairs.insert((i, k));
        }
    }
    Ok(IdealBasis { polys: interreduce(basis), order, groebner: true })
}

/// Minimal, monic and fully reduced, sorted by increasing leading monomial.
fn interreduce(basis: Vec<Polynomial>) -> Vec<Polynomial> {
    let mut minimal: Vec<Polynomial> = Vec::new();
    for (k, g) in basis.iter().enumerate() {
        let m = g.leading_monomial().unwrap();
        let redundant = basis.iter().enumerate().any(|(l, h)| {
            let hm = h.leading_monomial().unwrap();
            l != k && divides(hm, m) && (hm != m || l < k)
        });
        if !redundant {
            minimal.push(g.clone());
        }
    }
    let mut out: Vec<Polynomial> = (0..minimal.len())
        .map(|k| {
            let others: Vec<Polynomial> =
                minimal.iter().enumerate().filter(|&(l, _)| l != k).map(|(_, h)| h.clone()).collect();
            reduce(&minimal[k], &others).monic()
        })
        .collect();
    let order = out[0].order();
    out.sort_by(|a, b| order.cmp(a.leading_monomial().unwrap(), b.leading_monomial().unwrap()));
    out
}

/// Weak Nullstellensatz: no common zero over C iff the reduced basis is {1}.
pub fn has_no_common_zero(generators: &[Polynomial]) -> Result<bool> {
    Ok(buchberger(generators)?.is_unit())
}

/// Substitutes x_k = 1 (0-based k) in every polynomial.
pub fn dehomogenize(system: &[Polynomial], k: usize) -> Result<Vec<Polynomial>> {
    let one = Rational::from_integer(1.into());
    system.iter().map(|p| p.substitute(k, &one)).collect()
}

/// A homogeneous system has only the trivial zero iff every dehomogenization
/// is inconsistent; returns the reduced basis for each variable.
pub fn only_trivial_zero(system: &[Polynomial]) -> Result<(bool, Vec<IdealBasis>)> {
    let n = system.first().map(Polynomial::nvars).ok_or_else(|| Error::InvalidInput("empty system".into()))?;
    if !system.iter().all(Polynomial::is_homogeneous) {
        return Err(Error::InvalidInput("system is not homogeneous".into()));
    }
    let bases = (0..n)
        .into_par_iter()
        .map(|k| buchberger(&dehomogenize(system, k)?))
        .collect::<Result<Vec<_>>>()?;
    Ok((bases.iter().all(IdealBasis::is_unit), bases))
}

#[cfg(test)]
mod tests;
