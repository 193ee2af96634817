//! Small finite fields GF(p^e) with log tables, used to build classical groups.

use crate::error::{Error, Result};
use crate::util::prime_power;

/// Elements are integers 0..q whose base-p digits are polynomial coefficients
/// over F_p, reduced modulo a primitive polynomial.
#[derive(Clone, Debug)]
pub struct GaloisField {
    p: u64,
    e: u32,
    q: usize,
    exp: Vec<usize>,
    log: Vec<usize>,
}

impl GaloisField {
    pub fn new(q: u64) -> Result<Self> {
        let (p, e) = prime_power(q as u128).ok_or_else(|| Error::InvalidInput(format!("{q} is not a prime power")))?;
        if q > 1 << 16 {
            return Err(Error::BoundExceeded { what: "field size", size: q as u128, bound: 1 << 16 });
        }
        let q = q as usize;
        // Try monic polynomials x^e + c(x) until x has multiplicative order q − 1.
        for tail in 0..q {
            if q > 1 && tail % p as usize == 0 && e > 1 {
                continue; // zero constant term: x is a zero divisor
            }
            if let Some(exp) = Self::powers_of_x(p, e, tail, q) {
                let mut log = vec![usize::MAX; q];
                for (i, &v) in exp.iter().enumerate() {
                    log[v] = i;
                }
                return Ok(GaloisField { p, e, q, exp, log });
            }
        }
        Err(Error::Construction(format!("no primitive polynomial for GF({q})")))
    }

    fn digits(v: usize, p: u64, e: u32) -> Vec<u64> {
        let mut d = Vec::with_capacity(e as usize);
        let mut v = v as u64;
        for _ in 0..e {
            d.push(v % p);
            v /= p;
        }
        d
    }

    fn undigits(d: &[u64], p: u64) -> usize {
        d.iter().rev().fold(0u64, |acc, &x| acc * p + x) as usize
    }

    /// Powers 1, g, g², … of a generator, or None when the candidate fails.
    /// For e = 1 the candidate generator is the residue `tail`; otherwise it is
    /// x modulo x^e − tail(x).
    fn powers_of_x(p: u64, e: u32, tail: usize, q: usize) -> Option<Vec<usize>> {
        let mut seen = vec![false; q];
        let mut out = Vec::with_capacity(q - 1);
        let mut cur = vec![0u64; e as usize];
        cur[0] = 1;
        let t = Self::digits(tail, p, e);
        for _ in 0..q - 1 {
            let v = Self::undigits(&cur, p);
            if v == 0 || seen[v] {
                return None;
            }
            seen[v] = true;
            out.push(v);
            if e == 1 {
                cur[0] = cur[0] * tail as u64 % p;
            } else {
                // multiply by x, replace x^e with tail(x)
                let top = cur[e as usize - 1];
                for i in (1..e as usize).rev() {
                    cur[i] = cur[i - 1];
                }
                cur[0] = 0;
                for i in 0..e as usize {
                    cur[i] = (cur[i] + top * t[i]) % p;
                }
            }
        }
        (Self::undigits(&cur, p) == 1).then_some(out)
    }

    pub fn order(&self) -> usize {
        self.q
    }

    pub fn characteristic(&self) -> u64 {
        self.p
    }

    pub fn degree(&self) -> u32 {
        self.e
    }

    /// A generator of the multiplicative group.
    pub fn primitive(&self) -> usize {
        self.exp[1 % (self.q - 1)]
    }

    pub fn add(&self, a: usize, b: usize) -> usize {
        let (x, y) = (Self::digits(a, self.p, self.e), Self::digits(b, self.p, self.e));
        let s: Vec<u64> = x.iter().zip(&y).map(|(u, v)| (u + v) % self.p).collect();
        Self::undigits(&s, self.p)
    }

    pub fn neg(&self, a: usize) -> usize {
        let x = Self::digits(a, self.p, self.e);
        let s: Vec<u64> = x.iter().map(|u| (self.p - u) % self.p).collect();
        Self::undigits(&s, self.p)
    }

    pub fn mul(&self, a: usize, b: usize) -> usize {
        if a == 0 || b == 0 {
            return 0;
        }
        self.exp[(self.log[a] + self.log[b]) % (self.q - 1)]
    }

    pub fn inv(&self, a: usize) -> Option<usize> {
        (a != 0).then(|| self.exp[(self.q - 1 - self.log[a]) % (self.q - 1)])
    }

    pub fn pow(&self, a: usize, k: u64) -> usize {
        if a == 0 {
            return if k == 0 { 1 } else { 0 };
        }
        self.exp[(self.log[a] as u64 * k % (self.q as u64 - 1)) as usize]
    }

    /// The Frobenius automorphism a ↦ a^p.
    pub fn frobenius(&self, a: usize) -> usize {
        self.pow(a, self.p)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn field_axioms_by_exhaustion() {
        for q in [2u64, 3, 4, 7, 8, 9] {
            let f = GaloisField::new(q).unwrap();
            let q = q as usize;
            for a in 0..q {
                assert_eq!(f.add(a, f.neg(a)), 0);
                if a != 0 {
                    assert_eq!(f.mul(a, f.inv(a).unwrap()), 1);
                }
                for b in 0..q {
                    for c in 0..q {
                        assert_eq!(f.mul(a, f.add(b, c)), f.add(f.mul(a, b), f.mul(a, c)));
                    }
                }
            }
            let g = f.primitive();
            let mut seen: Vec<usize> = (0..q as u64 - 1).map(|k| f.pow(g, k)).collect();
            seen.sort();
            assert_eq!(seen, (1..q).collect::<Vec<_>>());
        }
        assert!(GaloisField::new(6).is_err());
    }
}
