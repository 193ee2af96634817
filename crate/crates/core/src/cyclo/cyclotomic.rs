use std::collections::HashMap;
use std::fmt;
use std::ops::{Add, Div, Mul, Neg, Sub};
use std::sync::{Arc, Mutex, OnceLock};

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::error::{Error, Result};
use crate::util::{euler_phi, prime_divisors};

pub type Rational = BigRational;

pub fn rat(n: i64, d: i64) -> Rational {
    Rational::new(BigInt::from(n), BigInt::from(d))
}

/// An element Σ cᵢ ζₙⁱ of Q(ζₙ), stored in the power basis 1, ζ, …, ζ^{φ(n)−1}
/// reduced modulo Φₙ. The conductor n is always the smallest one for the value,
/// so equal values have identical representations.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Cyclotomic {
    conductor: u64,
    coeffs: Vec<Rational>,
}

fn cyclotomic_polynomial(n: u64) -> Arc<Vec<i64>> {
    static CACHE: OnceLock<Mutex<HashMap<u64, Arc<Vec<i64>>>>> = OnceLock::new();
    let cache = CACHE.get_or_init(|| Mutex::new(HashMap::new()));
    if let Some(p) = cache.lock().unwrap().get(&n) {
        return p.clone();
    }
    // xⁿ − 1 divided by Φ_d for every proper divisor d.
    let mut num = vec![0i64; n as usize + 1];
    num[0] = -1;
    num[n as usize] = 1;
    for d in 1..n {
        if n.is_multiple_of(d) {
            let phi_d = cyclotomic_polynomial(d);
            num = divide_monic(&num, &phi_d);
        }
    }
    let p = Arc::new(num);
    cache.lock().unwrap().insert(n, p.clone());
    p
}

fn divide_monic(num: &[i64], den: &[i64]) -> Vec<i64> {
    let mut rem = num.to_vec();
    let dd = den.len() - 1;
    let qd = num.len() - 1 - dd;
    let mut q = vec![0i64; qd + 1];
    for k in (0..=qd).rev() {
        let c = rem[k + dd];
        q[k] = c;
        for j in 0..=dd {
            rem[k + j] -= c * den[j];
        }
    }
    q
}

/// Reduces a dense exponent vector (length n) modulo Φₙ.
fn reduce_dense(n: u64, mut dense: Vec<Rational>) -> Vec<Rational> {
    let phi = cyclotomic_polynomial(n);
    let deg = phi.len() - 1;
    for k in (deg..dense.len()).rev() {
        if dense[k].is_zero() {
            continue;
        }
        let c = std::mem::take(&mut dense[k]);
        for (j, &pj) in phi.iter().enumerate().take(deg) {
            if pj != 0 {
                dense[k - deg + j] -= &c * Rational::from_integer(BigInt::from(pj));
            }
        }
    }
    dense.truncate(deg);
    dense
}

/// The representation at conductor `n` (not minimised).
fn canonical_at(n: u64, dense: Vec<Rational>) -> Vec<Rational> {
    reduce_dense(n, dense)
}

fn is_zero_at(n: u64, dense: &[Rational]) -> bool {
    canonical_at(n, dense.to_vec()).iter().all(Zero::is_zero)
}

/// Tries to write the element with dense vector `d` (conductor n) over conductor n/p.
fn descend(n: u64, d: &[Rational], p: u64) -> Option<Vec<Rational>> {
    let m = n / p;
    if m.is_multiple_of(p) {
        // Basis 1, ζₙ, …, ζₙ^{p−1} over Q(ζ_m); the element lies in Q(ζ_m) iff
        // only the r = 0 component survives.
        let mut parts = vec![vec![Rational::zero(); m as usize]; p as usize];
        for (i, c) in d.iter().enumerate() {
            if !c.is_zero() {
                let i = i as u64;
                parts[(i % p) as usize][(i / p) as usize] += c;
            }
        }
        if parts[1..].iter().all(|part| is_zero_at(m, part)) {
            return Some(parts.swap_remove(0));
        }
        return None;
    }
    // p ∥ n: ζₙⁱ = ζ_m^a ζ_p^b with a = i·u mod m and b = i·v mod p, where
    // u ≡ 1 mod m, u ≡ 0 mod p and v ≡ 0 mod m, v ≡ 1 mod p (scaled by the CRT).
    let (u, v) = crt_split(m, p);
    let mut parts = vec![vec![Rational::zero(); m as usize]; p as usize];
    for (i, c) in d.iter().enumerate() {
        if !c.is_zero() {
            let i = i as u64;
            let a = (i * u) % n / p % m;
            let b = (i * v) % n / m % p;
            parts[b as usize][a as usize] += c;
        }
    }
    let first = canonical_at(m, parts[1].clone());
    if parts[2..].iter().all(|part| canonical_at(m, part.clone()) == first) {
        let mut out = parts[0].clone();
        for (o, x) in out.iter_mut().zip(&parts[1]) {
            *o -= x;
        }
        return Some(out);
    }
    None
}

/// Exponent multipliers (u, v) mod n = m·p so that ζₙ^{iu} = ζ_m^{i·…} and ζₙ^{iv} = ζ_p^{i·…}.
/// Concretely u ≡ 1 (mod m), u ≡ 0 (mod p); v ≡ 0 (mod m), v ≡ 1 (mod p).
/// Then ζₙⁱ = ζₙ^{iu} ζₙ^{iv}, with ζₙ^{iu} a power of ζ_m = ζₙ^p and ζₙ^{iv} a power of ζ_p = ζₙ^m.
fn crt_split(m: u64, p: u64) -> (u64, u64) {
    let n = m * p;
    let u = (0..n).find(|&x| x % m == 1 % m && x % p == 0).unwrap();
    let v = (0..n).find(|&x| x % m == 0 && x % p == 1 % p).unwrap();
    (u, v)
}

impl Cyclotomic {
    pub fn zero() -> Self {
        Cyclotomic { conductor: 1, coeffs: vec![Rational::zero()] }
    }

    pub fn one() -> Self {
        Self::from_rational(Rational::one())
    }

    pub fn from_integer(n: i64) -> Self {
        Self::from_rational(Rational::from_integer(BigInt::from(n)))
    }

    pub fn from_rational(r: Rational) -> Self {
        Cyclotomic { conductor: 1, coeffs: vec![r] }
    }

    /// ζₙᵏ.
    pub fn root_of_unity(n: u64, k: i64) -> Result<Self> {
        if n == 0 {
            return Err(Error::InvalidInput("conductor must be positive".into()));
        }
        let mut dense = vec![Rational::zero(); n as usize];
        dense[k.rem_euclid(n as i64) as usize] = Rational::one();
        Ok(Self::from_dense(n, dense))
    }

    /// Builds from coefficients of ζₙ⁰ … ζₙ^{n−1}; any length-n vector is accepted.
    pub fn from_dense(n: u64, mut dense: Vec<Rational>) -> Self {
        let mut n = n;
        'outer: loop {
            if n == 1 {
                break;
            }
            for p in prime_divisors(n as u128) {
                if let Some(d) = descend(n, &dense, p) {
                    dense = d;
                    n /= p;
                    continue 'outer;
                }
            }
            break;
        }
        Cyclotomic { conductor: n, coeffs: canonical_at(n, dense) }
    }

    pub fn conductor(&self) -> u64 {
        self.conductor
    }

    /// Coefficients in the reduced power basis of Q(ζₙ), n the conductor.
    pub fn coefficients(&self) -> &[Rational] {
        &self.coeffs
    }

    fn dense_at(&self, n: u64) -> Vec<Rational> {
        debug_assert_eq!(n % self.conductor, 0);
        let step = (n / self.conductor) as usize;
        let mut out = vec![Rational::zero(); n as usize];
        for (i, c) in self.coeffs.iter().enumerate() {
            out[i * step] = c.clone();
        }
        out
    }

    pub fn is_zero(&self) -> bool {
        self.conductor == 1 && self.coeffs[0].is_zero()
    }

    pub fn is_rational(&self) -> bool {
        self.conductor == 1
    }

    pub fn to_rational(&self) -> Option<Rational> {
        self.is_rational().then(|| self.coeffs[0].clone())
    }

    /// The value as a machine integer; fails for non-integral values.
    pub fn to_integer(&self) -> Result<i64> {
        match self.to_rational() {
            Some(r) if r.is_integer() => r.to_integer().to_i64().ok_or_else(|| Error::NotInteger(self.to_string())),
            _ => Err(Error::NotInteger(self.to_string())),
        }
    }

    pub fn galois_apply(&self, k: i64) -> Result<Self> {
        let n = self.conductor;
        if (k.rem_euclid(n as i64) as u64).gcd(&n) != 1 {
            return Err(Error::NotCoprime { k, n });
        }
        if n == 1 {
            return Ok(self.clone());
        }
        let k = k.rem_euclid(n as i64) as u64;
        let mut dense = vec![Rational::zero(); n as usize];
        for (i, c) in self.coeffs.iter().enumerate() {
            dense[(i as u64 * k % n) as usize] += c;
        }
        Ok(Cyclotomic { conductor: n, coeffs: canonical_at(n, dense) })
    }

    /// Complex conjugate, ζ ↦ ζ⁻¹.
    pub fn conj(&self) -> Self {
        self.galois_apply(-1).expect("−1 is a unit modulo every conductor")
    }

    fn binary(&self, other: &Self, op: impl Fn(&[Rational], &[Rational], usize) -> Vec<Rational>) -> Self {
        let n = self.conductor.lcm(&other.conductor);
        let dense = op(&self.dense_at(n), &other.dense_at(n), n as usize);
        Self::from_dense(n, dense)
    }

    pub fn inverse(&self) -> Result<Self> {
        if self.is_zero() {
            return Err(Error::DivisionByZero);
        }
        if let Some(r) = self.to_rational() {
            return Ok(Self::from_rational(r.recip()));
        }
        // Solve b·x = 1 in the power basis: column j of the system is b·ζʲ.
        let n = self.conductor;
        let deg = self.coeffs.len();
        let mut rows: Vec<Vec<Rational>> = vec![vec![Rational::zero(); deg + 1]; deg];
        for j in 0..deg {
            let zj = Self::root_of_unity(n, j as i64)?;
            let col = (self * &zj).dense_at(n);
            let col = canonical_at(n, col);
            for i in 0..deg {
                rows[i][j] = col[i].clone();
            }
        }
        rows[0][deg] = Rational::one();
        let sol = solve_square(rows).ok_or(Error::DivisionByZero)?;
        let mut dense = sol;
        dense.resize(n as usize, Rational::zero());
        Ok(Self::from_dense(n, dense))
    }

    pub fn pow(&self, e: i64) -> Result<Self> {
        let base = if e < 0 { self.inverse()? } else { self.clone() };
        let mut e = e.unsigned_abs();
        let mut acc = Self::one();
        let mut sq = base;
        while e > 0 {
            if e & 1 == 1 {
                acc = &acc * &sq;
            }
            e >>= 1;
            if e > 0 {
                sq = &sq * &sq;
            }
        }
        Ok(acc)
    }

    pub fn checked_div(&self, other: &Self) -> Result<Self> {
        Ok(self * &other.inverse()?)
    }
}

/// Gauss–Jordan on an augmented square system; `None` if singular.
fn solve_square(mut rows: Vec<Vec<Rational>>) -> Option<Vec<Rational>> {
    let n = rows.len();
    for col in 0..n {
        let pivot = (col..n).find(|&r| !rows[r][col].is_zero())?;
        rows.swap(col, pivot);
        let inv = rows[col][col].recip();
        for x in rows[col].iter_mut() {
            *x *= &inv;
        }
        for r in 0..n {
            if r != col && !rows[r][col].is_zero() {
                let f = rows[r][col].clone();
                let pivot_row = rows[col].clone();
                for (x, y) in rows[r].iter_mut().zip(pivot_row) {
                    *x -= &f * y;
                }
            }
        }
    }
    Some(rows.into_iter().map(|mut r| r.pop().unwrap()).collect())
}

impl Default for Cyclotomic {
    fn default() -> Self {
        Self::zero()
    }
}

impl PartialOrd for Cyclotomic {
    fn partial_cmp(&self, other: &Self) -> Option<std::cmp::Ordering> {
        Some(self.cmp(other))
    }
}

/// An arbitrary but fixed total order (conductor, then coefficients), used for
/// deterministic sorting only.
impl Ord for Cyclotomic {
    fn cmp(&self, other: &Self) -> std::cmp::Ordering {
        self.conductor.cmp(&other.conductor).then_with(|| self.coeffs.cmp(&other.coeffs))
    }
}

impl<'a> Add<&'a Cyclotomic> for &'a Cyclotomic {
    type Output = Cyclotomic;
    fn add(self, rhs: &Cyclotomic) -> Cyclotomic {
        if self.conductor == 1 && rhs.conductor == 1 {
            return Cyclotomic::from_rational(&self.coeffs[0] + &rhs.coeffs[0]);
        }
        self.binary(rhs, |a, b, _| a.iter().zip(b).map(|(x, y)| x + y).collect())
    }
}

impl<'a> Sub<&'a Cyclotomic> for &'a Cyclotomic {
    type Output = Cyclotomic;
    fn sub(self, rhs: &Cyclotomic) -> Cyclotomic {
        if self.conductor == 1 && rhs.conductor == 1 {
            return Cyclotomic::from_rational(&self.coeffs[0] - &rhs.coeffs[0]);
        }
        self.binary(rhs, |a, b, _| a.iter().zip(b).map(|(x, y)| x - y).collect())
    }
}

impl<'a> Mul<&'a Cyclotomic> for &'a Cyclotomic {
    type Output = Cyclotomic;
    fn mul(self, rhs: &Cyclotomic) -> Cyclotomic {
        if rhs.conductor == 1 {
            if rhs.coeffs[0].is_zero() {
                return Cyclotomic::zero();
            }
            let r = &rhs.coeffs[0];
            return Cyclotomic { conductor: self.conductor, coeffs: self.coeffs.iter().map(|c| c * r).collect() };
        }
        if self.conductor == 1 {
            return rhs * self;
        }
        self.binary(rhs, |a, b, n| {
            let mut out = vec![Rational::zero(); n];
            for (i, x) in a.iter().enumerate() {
                if x.is_zero() {
                    continue;
                }
                for (j, y) in b.iter().enumerate() {
                    if !y.is_zero() {
                        out[(i + j) % n] += x * y;
                    }
                }
            }
            out
        })
    }
}

impl Neg for &Cyclotomic {
    type Output = Cyclotomic;
    fn neg(self) -> Cyclotomic {
        Cyclotomic { conductor: self.conductor, coeffs: self.coeffs.iter().map(|c| -c).collect() }
    }
}

impl Div for &Cyclotomic {
    type Output = Cyclotomic;
    /// Panics on division by zero; use `checked_div` to get an error instead.
    fn div(self, rhs: &Cyclotomic) -> Cyclotomic {
        self.checked_div(rhs).expect("division by zero")
    }
}

macro_rules! forward_owned {
    ($tr:ident, $m:ident) => {
        impl $tr for Cyclotomic {
            type Output = Cyclotomic;
            fn $m(self, rhs: Cyclotomic) -> Cyclotomic {
                (&self).$m(&rhs)
            }
        }
    };
}
forward_owned!(Add, add);
forward_owned!(Sub, sub);
forward_owned!(Mul, mul);
forward_owned!(Div, div);

impl Neg for Cyclotomic {
    type Output = Cyclotomic;
    fn neg(self) -> Cyclotomic {
        -&self
    }
}

impl std::iter::Sum for Cyclotomic {
    fn sum<I: Iterator<Item = Cyclotomic>>(iter: I) -> Self {
        iter.fold(Cyclotomic::zero(), |a, b| &a + &b)
    }
}

impl From<i64> for Cyclotomic {
    fn from(n: i64) -> Self {
        Cyclotomic::from_integer(n)
    }
}

impl From<Rational> for Cyclotomic {
    fn from(r: Rational) -> Self {
        Cyclotomic::from_rational(r)
    }
}

/// Prints in the `E(n)` grammar without spaces, e.g. `-1-E(5)^2-E(5)^3`.
impl fmt::Display for Cyclotomic {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (i, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let negative = c.is_negative();
            let abs = c.abs();
            if negative {
                write!(f, "-")?;
            } else if !first {
                write!(f, "+")?;
            }
            first = false;
            let atom = match i {
                0 => None,
                1 => Some(format!("E({})", self.conductor)),
                _ => Some(format!("E({})^{}", self.conductor, i)),
            };
            match atom {
                None => write!(f, "{abs}")?,
                Some(a) if abs.is_one() => write!(f, "{a}")?,
                Some(a) => write!(f, "{abs}*{a}")?,
            }
        }
        Ok(())
    }
}

impl fmt::Debug for Cyclotomic {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

/// Degree of Q(ζₙ) over Q.
pub fn field_degree(n: u64) -> u64 {
    euler_phi(n)
}
