//! The standard representation V of Sₙ, its sign twist V⁻, and orbit
//! witnesses for their α-characteristics.

use std::collections::{HashSet, VecDeque};

use super::matrix::Matrix;
use super::norton::NortonAlgebra;
use super::rep::MatrixRep;
use crate::alpha::GroupCharacter;
use crate::cyclo::{rat, Cyclotomic, Rational};
use crate::error::{Error, Result};
use crate::perm::{PermGroup, Permutation};
use crate::util::{binomial, gcd_all, prime_power};

/// Sₙ generated by (1 2) and (1 2 … n), in that order.
pub fn symmetric_group(n: usize) -> Result<PermGroup> {
    if n < 2 {
        return Err(Error::InvalidInput(format!("S{n} needs n >= 2")));
    }
    let gens = vec![
        Permutation::from_cycles(n, &[vec![0, 1]])?,
        Permutation::from_cycles(n, &[(0..n).collect()])?,
    ];
    Ok(PermGroup::with_degree(n, gens)?.named(format!("S{n}")))
}

/// σ on Qⁿ / ⟨(1, …, 1)⟩ in the basis ε_1, …, ε_{n−1}, ε_n = −Σ ε_i.
pub fn standard_matrix(sigma: &Permutation) -> Matrix<Rational> {
    let m = sigma.degree() - 1;
    let mut out = Matrix::zeros(m, m);
    for i in 0..m {
        let j = sigma.apply(i);
        if j < m {
            out.set(j, i, rat(1, 1));
        } else {
            for r in 0..m {
                out.set(r, i, rat(-1, 1));
            }
        }
    }
    out
}

pub fn standard_rep(n: usize) -> Result<MatrixRep> {
    let g = symmetric_group(n)?;
    let mats = g.generators().iter().map(|s| standard_matrix(s).to_cyclotomic()).collect();
    MatrixRep::new(format!("V{n}"), g, mats)
}

pub fn sign_twisted_rep(n: usize) -> Result<MatrixRep> {
    Ok(standard_rep(n)?.sign_twist())
}

/// An equivariant quadratic map V → V is also equivariant V⁻ → V, since the
/// sign cancels in a quadratic form. Certified on the Norton square map.
#[derive(Clone, Debug)]
pub struct TwistReduction {
    pub n: usize,
    /// Sign of each generator of Sₙ.
    pub signs: Vec<i32>,
    /// ρ_{V⁻}(s) = sign(s) ρ_V(s) on the generators.
    pub twist_matches: bool,
    pub equivariant_on_v: bool,
    pub equivariant_on_vminus: bool,
}

impl TwistReduction {
    pub fn holds(&self) -> bool {
        self.twist_matches && self.equivariant_on_v && self.equivariant_on_vminus
    }
}

pub fn reduce_vminus_to_v(n: usize) -> Result<TwistReduction> {
    let v = standard_rep(n)?;
    let vm = v.sign_twist();
    let gens = v.group().generators().to_vec();
    let signs: Vec<i32> = gens.iter().map(Permutation::sign).collect();
    let twist_matches = v
        .generators()
        .iter()
        .zip(vm.generators())
        .zip(&signs)
        .all(|((a, b), &s)| a.scale(&Cyclotomic::from_integer(s as i64)) == *b);

    // W carries V; its generator matrices in the basis b_j play the role of ρ_V
    let alg = NortonAlgebra::new(n)?;
    let map = alg.square_map(&gens)?;
    let mut twisted = map.clone();
    twisted.source_generators = gens
        .iter()
        .map(|s| alg.w_matrix(s).to_cyclotomic().scale(&Cyclotomic::from_integer(s.sign() as i64)))
        .collect();
    Ok(TwistReduction {
        n,
        signs,
        twist_matches,
        equivariant_on_v: map.is_equivariant(),
        equivariant_on_vminus: twisted.is_equivariant(),
    })
}

/// Orbits of x = (n−1, −1, …, −1) and y = (p−1 on the first p^{k−1}
/// coordinates, −1 elsewhere) in the sum-zero model of V and of V⁻.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct WitnessOrbits {
    pub n: usize,
    pub p: u64,
    pub k: u32,
    pub x: Vec<i64>,
    pub y: Vec<i64>,
    pub v_orbits: [u128; 2],
    pub vminus_orbits: [u128; 2],
    pub binomial: u128,
}

impl WitnessOrbits {
    /// gcd of the two orbit lengths; a multiple of α(V).
    pub fn gcd_v(&self) -> u128 {
        gcd_all(self.v_orbits)
    }

    pub fn gcd_vminus(&self) -> u128 {
        gcd_all(self.vminus_orbits)
    }
}

pub fn sn_witness_orbits(n: usize) -> Result<WitnessOrbits> {
    let (p, k) = prime_power(n as u128)
        .filter(|&(p, _)| p % 2 == 1)
        .ok_or_else(|| Error::InvalidInput(format!("{n} is not a power of an odd prime")))?;
    if n <= 3 {
        return Err(Error::InvalidInput("witness orbits need n > 3".into()));
    }
    let q = (p as usize).pow(k - 1);
    let mut x = vec![-1i64; n];
    x[0] = n as i64 - 1;
    let y: Vec<i64> = (0..n).map(|i| if i < q { p as i64 - 1 } else { -1 }).collect();
    let gens = symmetric_group(n)?.generators().to_vec();
    let size = |v: &[i64], twisted| orbit_size(v, &gens, twisted);
    Ok(WitnessOrbits {
        n,
        p,
        k,
        v_orbits: [size(&x, false), size(&y, false)],
        vminus_orbits: [size(&x, true), size(&y, true)],
        x,
        y,
        binomial: binomial(n as u64, q as u64),
    })
}

fn orbit_size(v: &[i64], gens: &[Permutation], twisted: bool) -> u128 {
    let mut seen: HashSet<Vec<i64>> = HashSet::from([v.to_vec()]);
    let mut queue = VecDeque::from([v.to_vec()]);
    while let Some(u) = queue.pop_front() {
        for s in gens {
            let sign = if twisted { s.sign() as i64 } else { 1 };
            let mut w = vec![0; u.len()];
            for (i, &c) in u.iter().enumerate() {
                w[s.apply(i)] = sign * c;
            }
            if seen.insert(w.clone()) {
                queue.push_back(w);
            }
        }
    }
    seen.len() as u128
}

/// sign(g)·(fix(g) − 1), the character of V⁻ for a permutation group.
pub struct SignedAugmentation {
    group: PermGroup,
}

impl SignedAugmentation {
    pub fn new(group: &PermGroup) -> Self {
        SignedAugmentation { group: group.clone() }
    }
}

impl GroupCharacter for SignedAugmentation {
    fn group(&self) -> &PermGroup {
        &self.group
    }

    fn sum_over(&self, elements: &[Permutation]) -> Result<Cyclotomic> {
        let s: i64 = elements.iter().map(|g| g.sign() as i64 * (g.fixed_points() as i64 - 1)).sum();
        Ok(Cyclotomic::from_integer(s))
    }

    fn label(&self) -> String {
        String::from("V-")
    }
}
