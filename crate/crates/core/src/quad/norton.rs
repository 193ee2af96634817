//! The Norton algebra of the Johnson graph J(n, 2).
//!
//! U = Q^{pairs} with the pointwise product, f_k the indicator of the pairs
//! containing k, and W the span of the differences f_k − f_l, which carries
//! the standard representation of Sₙ. The product on W is w ⋆ v = P(w·v)
//! with P the orthogonal projection onto W.
//!
//! For w = Σ z_k f_k with Σ z_k = 0 the pair entries are z_i + z_j, so
//! ⟨w², f_k⟩ = Σ_{i≠k} (z_i + z_k)² = Σ z_i² + 2 z_k Σ z_i + (n − 4) z_k².
//! w ⋆ w = 0 exactly when this is independent of k, that is when
//! (n − 4) z_k² is constant. For n ≠ 4 all |z_k| agree and Σ z_k = 0 forces
//! half of them positive, so nonzero nilpotents need even n and are the
//! multiples of Σ_{k∈I} f_k − Σ_{k∉I} f_k with |I| = n/2. For n = 4 the
//! condition is empty and the square map vanishes on W.

use itertools::Itertools;

use super::matrix::Matrix;
use super::quadmap::QuadraticMap;
use crate::cyclo::{rat, Rational};
use crate::error::{Error, Result};
use crate::groebner::Polynomial;
use crate::perm::Permutation;

#[derive(Clone, Debug)]
pub struct NortonAlgebra {
    n: usize,
    pairs: Vec<(usize, usize)>,
    /// Columns b_j = f_n − f_j, j < n − 1.
    basis: Matrix<Rational>,
    /// (BᵀB)⁻¹Bᵀ, so that P = B·L.
    left_inverse: Matrix<Rational>,
    projection: Matrix<Rational>,
}

impl NortonAlgebra {
    pub fn new(n: usize) -> Result<Self> {
        if n < 3 {
            return Err(Error::InvalidInput(format!("Norton algebra needs n >= 3, got {n}")));
        }
        let pairs: Vec<(usize, usize)> = (0..n).tuple_combinations().collect();
        let f = |k: usize| -> Vec<Rational> {
            pairs.iter().map(|&(i, j)| rat((i == k || j == k) as i64, 1)).collect()
        };
        let last = f(n - 1);
        let cols: Vec<Vec<Rational>> =
            (0..n - 1).map(|j| last.iter().zip(f(j)).map(|(a, b)| a - b).collect()).collect();
        let basis = Matrix::from_columns(&cols).expect("equal lengths");
        let bt = basis.transpose();
        let gram_inv = bt.mul(&basis).inverse().expect("independent columns");
        let left_inverse = gram_inv.mul(&bt);
        let projection = basis.mul(&left_inverse);
        Ok(NortonAlgebra { n, pairs, basis, left_inverse, projection })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn pairs(&self) -> &[(usize, usize)] {
        &self.pairs
    }

    pub fn projection(&self) -> &Matrix<Rational> {
        &self.projection
    }

    pub fn basis(&self) -> &Matrix<Rational> {
        &self.basis
    }

    /// Σ z_k f_k.
    pub fn embed(&self, z: &[Rational]) -> Vec<Rational> {
        assert_eq!(z.len(), self.n);
        self.pairs.iter().map(|&(i, j)| &z[i] + &z[j]).collect()
    }

    pub fn f(&self, k: usize) -> Vec<Rational> {
        let mut z = vec![rat(0, 1); self.n];
        z[k] = rat(1, 1);
        self.embed(&z)
    }

    pub fn star(&self, a: &[Rational], b: &[Rational]) -> Vec<Rational> {
        let prod: Vec<Rational> = a.iter().zip(b).map(|(x, y)| x * y).collect();
        self.projection.apply(&prod)
    }

    pub fn is_nilpotent(&self, w: &[Rational]) -> bool {
        self.star(w, w).iter().all(num_traits::Zero::is_zero)
    }

    /// The permutation matrix of σ on pairs.
    pub fn pair_matrix(&self, sigma: &Permutation) -> Matrix<Rational> {
        let m = self.pairs.len();
        let mut out = Matrix::zeros(m, m);
        for (c, &(i, j)) in self.pairs.iter().enumerate() {
            let (a, b) = (sigma.apply(i), sigma.apply(j));
            let r = self.pairs.iter().position(|&p| p == (a.min(b), a.max(b))).expect("pair");
            out.set(r, c, rat(1, 1));
        }
        out
    }

    /// σ on W in the basis b_j.
    pub fn w_matrix(&self, sigma: &Permutation) -> Matrix<Rational> {
        self.left_inverse.mul(&self.pair_matrix(sigma)).mul(&self.basis)
    }

    pub fn checks(&self) -> NortonChecks {
        let n = self.n;
        let p = &self.projection;
        let gram_ok = (0..n).all(|i| {
            (0..n).all(|j| {
                let v: Rational = self.f(i).iter().zip(self.f(j)).map(|(a, b)| a * b).sum();
                v == rat(if i == j { n as i64 - 1 } else { 1 }, 1)
            })
        });
        let gens = [
            Permutation::from_cycles(n, &[vec![0, 1]]).expect("transposition"),
            Permutation::from_cycles(n, &[(0..n).collect()]).expect("cycle"),
        ];
        let cols: Vec<Vec<Rational>> = (0..n - 1).map(|j| self.basis.column(j)).collect();
        let equivariant = gens.iter().all(|s| {
            let pi = self.pair_matrix(s);
            pi.mul(p) == p.mul(&pi)
                && cols.iter().cartesian_product(&cols).all(|(a, b)| {
                    self.star(&pi.apply(a), &pi.apply(b)) == pi.apply(&self.star(a, b))
                })
        });
        NortonChecks {
            idempotent: p.mul(p) == *p,
            symmetric: p.is_symmetric(),
            fixes_w: p.mul(&self.basis) == self.basis,
            rank: p.rank(),
            gram_ok,
            commutative: cols.iter().cartesian_product(&cols).all(|(a, b)| self.star(a, b) == self.star(b, a)),
            equivariant,
        }
    }

    /// y ↦ w ⋆ w for w = Σ y_j b_j, as a map W → W in the basis b_j,
    /// equivariant for the given permutations acting on both sides.
    pub fn square_map(&self, generators: &[Permutation]) -> Result<QuadraticMap> {
        let m = self.n - 1;
        let forms = (0..m)
            .map(|t| {
                let mut s = Matrix::zeros(m, m);
                for c in 0..self.pairs.len() {
                    let l = self.left_inverse.get(t, c);
                    if num_traits::Zero::is_zero(l) {
                        continue;
                    }
                    for i in 0..m {
                        for j in 0..m {
                            let v = s.get(i, j) + l * self.basis.get(c, i) * self.basis.get(c, j);
                            s.set(i, j, v);
                        }
                    }
                }
                s
            })
            .collect();
        let mats: Vec<_> = generators.iter().map(|g| self.w_matrix(g).to_cyclotomic()).collect();
        QuadraticMap::from_forms(forms, mats.clone(), mats)
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct NortonChecks {
    pub idempotent: bool,
    pub symmetric: bool,
    pub fixes_w: bool,
    pub rank: usize,
    pub gram_ok: bool,
    pub commutative: bool,
    pub equivariant: bool,
}

impl NortonChecks {
    pub fn all(&self) -> bool {
        self.idempotent && self.symmetric && self.fixes_w && self.gram_ok && self.commutative && self.equivariant
    }
}

/// The pairing identity ⟨w², f_k⟩ = Σ z_i² + 2 z_k Σ z_i + (n − 4) z_k² as
/// polynomials in z_1..z_n, for every k.
pub fn pairing_identity_holds(n: usize) -> bool {
    let z = |i: usize| Polynomial::var(n, i);
    let sum = (0..n).fold(Polynomial::zero(n), |acc, i| acc.add(&z(i)));
    let squares = (0..n).fold(Polynomial::zero(n), |acc, i| acc.add(&z(i).pow(2)));
    (0..n).all(|k| {
        let lhs = (0..n).filter(|&i| i != k).fold(Polynomial::zero(n), |acc, i| acc.add(&z(i).add(&z(k)).pow(2)));
        let rhs = squares
            .add(&z(k).mul(&sum).scale(&rat(2, 1)))
            .add(&z(k).pow(2).scale(&rat(n as i64 - 4, 1)));
        lhs == rhs
    })
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum NilpotentKind {
    /// Only w = 0.
    Trivial,
    /// The multiples of Σ_{k∈I} f_k − Σ_{k∉I} f_k, |I| = n/2 (0-based sets I).
    Family(Vec<Vec<usize>>),
    /// Every element of W.
    Everything,
}

#[derive(Clone, Debug)]
pub struct NilpotentReport {
    pub n: usize,
    pub kind: NilpotentKind,
    pub identity_holds: bool,
    /// Every listed pattern, or the whole of W, checked exactly.
    pub verified: bool,
}

pub fn nilpotents(n: usize) -> Result<NilpotentReport> {
    let alg = NortonAlgebra::new(n)?;
    let identity_holds = pairing_identity_holds(n);
    let (kind, verified) = if n == 4 {
        let map = alg.square_map(&[])?;
        (NilpotentKind::Everything, map.components.iter().all(Polynomial::is_zero))
    } else if n % 2 == 1 {
        (NilpotentKind::Trivial, identity_holds)
    } else {
        let sets: Vec<Vec<usize>> = (0..n).combinations(n / 2).collect();
        let ok = sets.iter().all(|set| {
            let z: Vec<Rational> = (0..n).map(|k| rat(if set.contains(&k) { 1 } else { -1 }, 1)).collect();
            alg.is_nilpotent(&alg.embed(&z))
        });
        (NilpotentKind::Family(sets), ok)
    };
    Ok(NilpotentReport { n, kind, identity_holds, verified })
}
