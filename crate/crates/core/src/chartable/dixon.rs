//! Burnside–Dixon–Schneider: class-multiplication coefficients, simultaneous
//! eigenvectors over F_q, then a lift of each value back to Q(ζ_e).

use super::modp::{eigenvalues, mod_inv, mod_pow, nullspace, primitive_root, rref};
use super::{CharacterTable, ClassFunction};
use crate::cyclo::Cyclotomic;
use crate::error::{Error, Result};
use crate::perm::PermGroup;
use crate::util::is_prime;

/// Default bound on |G| for [`compute_table_dixon`].
pub const DIXON_BOUND: u128 = 10_000;

const PRIME_LIMIT: u64 = 1 << 31;

pub fn compute_table_dixon(g: &PermGroup) -> Result<CharacterTable> {
    compute_table_dixon_with_bound(g, DIXON_BOUND)
}

pub fn compute_table_dixon_with_bound(g: &PermGroup, bound: u128) -> Result<CharacterTable> {
    if g.order() > bound {
        return Err(Error::BoundExceeded { what: "group order for character table", size: g.order(), bound });
    }
    let en = g.enumerated()?;
    let data = g.class_data()?;
    let classes = &data.set;
    let k = classes.len();
    let order = g.order() as u64;
    let exponent = classes.exponent();
    let q = choose_prime(order, exponent)?;

    // coeff[i][j][l] = #{x ∈ C_i : x⁻¹ g_l ∈ C_j}
    let mut coeff = vec![vec![vec![0u64; k]; k]; k];
    for (l, rep) in classes.representatives.iter().enumerate() {
        let r = en.index_of(rep).expect("representative in group");
        for x in 0..en.len() as u32 {
            let i = data.element_class[x as usize] as usize;
            let y = en.mul(en.inverse(x), r);
            let j = data.element_class[y as usize] as usize;
            coeff[i][j][l] += 1;
        }
    }
    let matrices: Vec<Vec<Vec<u64>>> =
        coeff.iter().map(|m| m.iter().map(|row| row.iter().map(|&v| v % q).collect()).collect()).collect();

    let mut spaces: Vec<Vec<Vec<u64>>> = vec![(0..k).map(|i| unit(k, i)).collect()];
    for a in matrices.iter().skip(1) {
        if spaces.len() == k {
            break;
        }
        let mut next = Vec::new();
        for space in spaces {
            if space.len() == 1 {
                next.push(space);
                continue;
            }
            next.extend(split(a, space, q));
        }
        spaces = next;
    }
    if spaces.len() != k {
        return Err(Error::Construction("class matrices did not split the centre".into()));
    }

    let z = primitive_root(q);
    let sizes_mod: Vec<u64> = classes.sizes.iter().map(|&s| s % q).collect();
    let inverse_class: Vec<usize> =
        (0..k).map(|c| classes.inverse_class(c).ok_or(Error::MissingPowerMap(2))).collect::<Result<_>>()?;
    let max_degree = (order as f64).sqrt().floor() as u64 + 1;
    let mut characters = Vec::with_capacity(k);
    for space in spaces {
        let v = &space[0];
        let scale = mod_inv(v[0], q);
        let omega: Vec<u64> = v.iter().map(|&x| x * scale % q).collect();
        let mut s = 0u64;
        for l in 0..k {
            s = (s + omega[l] * omega[inverse_class[l]] % q * mod_inv(sizes_mod[l], q)) % q;
        }
        let d2 = (order % q) * mod_inv(s, q) % q;
        let d = (1..=max_degree)
            .find(|&d| d * d % q == d2 && d * d <= order)
            .ok_or_else(|| Error::Construction("no integral degree".into()))?;
        let modular: Vec<u64> = (0..k).map(|l| omega[l] * d % q * mod_inv(sizes_mod[l], q) % q).collect();
        let values = (0..k).map(|l| lift(&modular, classes, l, d, z, q)).collect::<Result<Vec<_>>>()?;
        characters.push(ClassFunction::new(values));
    }

    let trivial_pos = characters
        .iter()
        .position(|c| c.values().iter().all(|v| *v == Cyclotomic::one()))
        .ok_or_else(|| Error::Construction("trivial character missing".into()))?;
    let trivial = characters.remove(trivial_pos);
    characters.sort_by(|a, b| {
        let da = a.degree().unwrap_or(0);
        let db = b.degree().unwrap_or(0);
        da.cmp(&db).then_with(|| a.cmp(b))
    });
    characters.insert(0, trivial);
    let name = g.name().unwrap_or("G").to_string();
    CharacterTable::new(name, classes.clone(), characters, Some(g.clone()))
}

fn unit(k: usize, i: usize) -> Vec<u64> {
    let mut v = vec![0; k];
    v[i] = 1;
    v
}

/// Smallest prime q ≡ 1 mod e with q > 2√|G|.
fn choose_prime(order: u64, exponent: u64) -> Result<u64> {
    let floor = 2.0 * (order as f64).sqrt();
    let mut q = exponent + 1;
    while q < PRIME_LIMIT {
        if (q as f64) > floor && is_prime(q) {
            return Ok(q);
        }
        q += exponent;
    }
    Err(Error::Construction(format!("no prime q ≡ 1 mod {exponent} below {PRIME_LIMIT}")))
}

/// Splits an A-invariant subspace (RREF rows) into eigenspaces of A.
fn split(a: &[Vec<u64>], space: Vec<Vec<u64>>, q: u64) -> Vec<Vec<Vec<u64>>> {
    let r = space.len();
    let mut pivots = Vec::with_capacity(r);
    for row in &space {
        pivots.push(row.iter().position(|&x| x != 0).expect("nonzero basis row"));
    }
    let images: Vec<Vec<u64>> = space
        .iter()
        .map(|b| (0..a.len()).map(|j| a[j].iter().zip(b).fold(0u64, |acc, (&x, &y)| (acc + x * y) % q)).collect())
        .collect();
    // restricted[t][s] = coordinate t of A b_s
    let restricted: Vec<Vec<u64>> = (0..r).map(|t| (0..r).map(|s| images[s][pivots[t]]).collect()).collect();
    let evs = eigenvalues(&restricted, q);
    if evs.len() <= 1 {
        return vec![space];
    }
    evs.iter()
        .map(|&lambda| {
            let shifted: Vec<Vec<u64>> = (0..r)
                .map(|i| (0..r).map(|j| if i == j { (restricted[i][j] + q - lambda) % q } else { restricted[i][j] }).collect())
                .collect();
            let mut rows: Vec<Vec<u64>> = nullspace(&shifted, q)
                .iter()
                .map(|c| {
                    let mut w = vec![0u64; space[0].len()];
                    for (s, &cs) in c.iter().enumerate() {
                        for (wi, &bi) in w.iter_mut().zip(&space[s]) {
                            *wi = (*wi + cs * bi) % q;
                        }
                    }
                    w
                })
                .collect();
            rref(&mut rows, q);
            rows
        })
        .collect()
}

/// Recovers χ(g_l) from its residues on the powers of g_l: the multiplicity of
/// ζ_m^j as an eigenvalue is (1/m) Σ_t χ(g^t) ζ_m^{−jt}.
fn lift(
    modular: &[u64],
    classes: &crate::perm::ConjugacyClassSet,
    l: usize,
    degree: u64,
    z: u64,
    q: u64,
) -> Result<Cyclotomic> {
    let m = classes.orders[l];
    let eps = mod_pow(z, (q - 1) / m, q);
    let powers: Vec<u64> = (0..m)
        .map(|t| classes.power_class(l, t as i64).map(|c| modular[c]).ok_or(Error::MissingPowerMap(m)))
        .collect::<Result<_>>()?;
    let inv_m = mod_inv(m % q, q);
    let mut value = Cyclotomic::zero();
    for j in 0..m {
        let mut mu = 0u64;
        for (t, &p) in powers.iter().enumerate() {
            let e = (m - (j * t as u64) % m) % m;
            mu = (mu + p * mod_pow(eps, e, q)) % q;
        }
        let mu = mu * inv_m % q;
        if mu > degree {
            return Err(Error::Construction(format!("eigenvalue multiplicity {mu} exceeds degree {degree}")));
        }
        if mu > 0 {
            let term = Cyclotomic::root_of_unity(m, j as i64)?;
            value = &value + &term.scale_int(mu as i64);
        }
    }
    Ok(value)
}
