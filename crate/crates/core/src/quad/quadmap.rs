//! Equivariant quadratic maps obtained by projecting the diagonal
//! x ↦ x ⊗ x of Sym²(U) onto isotypic components.

use std::fmt;

use num_traits::Zero;

use super::matrix::{Matrix, Scalar};
use super::rep::{Coordinates, MatrixRep};
use crate::chartable::{CharacterTable, ClassFunction};
use crate::cyclo::{rat, Cyclotomic, Rational};
use crate::error::{Error, Result};
use crate::groebner::{only_trivial_zero, IdealBasis, Polynomial};

/// Index pairs (i, j), i ≤ j, in lexicographic order.
pub fn sym_pairs(n: usize) -> Vec<(usize, usize)> {
    (0..n).flat_map(|i| (i..n).map(move |j| (i, j))).collect()
}

/// The action of M on Sym² in the basis of `sym_pairs`, with
/// b_ii = e_i⊗e_i and b_ij = e_i⊗e_j + e_j⊗e_i.
pub fn sym_square_matrix<T: Scalar>(m: &Matrix<T>) -> Matrix<T> {
    let n = m.rows();
    let pairs = sym_pairs(n);
    let mut out = Matrix::zeros(pairs.len(), pairs.len());
    for (c, &(i, j)) in pairs.iter().enumerate() {
        for (r, &(k, l)) in pairs.iter().enumerate() {
            let mut v = m.get(k, i).mul(m.get(l, j));
            if i != j {
                v = v.add(&m.get(k, j).mul(m.get(l, i)));
            }
            out.set(r, c, v);
        }
    }
    out
}

/// Σ_j χ_j(1)/|G| Σ_g conj(χ_j(g)) ρ(g) over the chosen irreducibles.
pub fn isotypic_projection(rep: &MatrixRep, table: &CharacterTable, constituents: &[usize]) -> Result<Matrix<Cyclotomic>> {
    rep.require_table(table)?;
    let group = rep.group();
    let order = Cyclotomic::from_rational(rat(1, 1) / Rational::from_integer(group.order().into()));
    let degrees = table.degrees();
    let coeffs: Vec<Cyclotomic> = (0..table.class_count())
        .map(|c| {
            constituents
                .iter()
                .map(|&j| &Cyclotomic::from_integer(degrees[j]) * &table.irreducible(j)[c].conj())
                .sum::<Cyclotomic>()
        })
        .collect();
    let mut a = Matrix::zeros(rep.dim(), rep.dim());
    for (g, m) in rep.images()? {
        let c = &coeffs[group.class_of(&g)?];
        if !c.is_zero() {
            a = a.add(&m.scale(c));
        }
    }
    Ok(a.scale(&order))
}

/// A homogeneous quadratic map Q^m → Q^k, φ_t(x) = xᵀ S_t x, intertwining
/// two representations given on the same group generators.
#[derive(Clone, Debug)]
pub struct QuadraticMap {
    pub components: Vec<Polynomial>,
    /// Symmetric Gram matrices of the components.
    pub forms: Vec<Matrix<Rational>>,
    pub source_generators: Vec<Matrix<Cyclotomic>>,
    pub target_generators: Vec<Matrix<Cyclotomic>>,
    /// Set for maps built from a projection of Sym².
    pub projection: Option<Matrix<Rational>>,
    /// Basis of the image subspace of Sym², in the coordinates of `sym_pairs`.
    pub image_basis: Vec<Vec<Rational>>,
}

impl QuadraticMap {
    pub fn from_forms(
        forms: Vec<Matrix<Rational>>,
        source_generators: Vec<Matrix<Cyclotomic>>,
        target_generators: Vec<Matrix<Cyclotomic>>,
    ) -> Result<Self> {
        let m = forms.first().map_or(0, Matrix::rows);
        if forms.iter().any(|s| !s.is_square() || s.rows() != m || !s.is_symmetric()) {
            return Err(Error::InvalidInput("forms must be symmetric of one size".into()));
        }
        if source_generators.len() != target_generators.len()
            || source_generators.iter().any(|g| g.rows() != m)
            || target_generators.iter().any(|g| g.rows() != forms.len())
        {
            return Err(Error::InvalidInput("generator matrices do not fit the map".into()));
        }
        let components = forms.iter().map(form_polynomial).collect();
        Ok(QuadraticMap { components, forms, source_generators, target_generators, projection: None, image_basis: Vec::new() })
    }

    /// The zero map between representations of the given dimensions.
    pub fn zero(source_generators: Vec<Matrix<Cyclotomic>>, target_generators: Vec<Matrix<Cyclotomic>>) -> Result<Self> {
        let m = source_generators.first().map_or(0, Matrix::rows);
        let k = target_generators.first().map_or(0, Matrix::rows);
        Self::from_forms(vec![Matrix::zeros(m, m); k], source_generators, target_generators)
    }

    pub fn source_dim(&self) -> usize {
        self.source_generators.first().map_or_else(|| self.forms.first().map_or(0, Matrix::rows), Matrix::rows)
    }

    pub fn target_dim(&self) -> usize {
        self.forms.len()
    }

    pub fn evaluate(&self, x: &[Rational]) -> Vec<Rational> {
        self.components.iter().map(|p| p.evaluate(x)).collect()
    }

    /// Mᵀ S_t M = Σ_s T_ts S_s for every generator pair (M, T), which is
    /// φ(Mx) = Tφ(x) as an identity of quadratic forms.
    pub fn is_equivariant(&self) -> bool {
        let forms: Vec<Matrix<Cyclotomic>> = self.forms.iter().map(Matrix::to_cyclotomic).collect();
        self.source_generators.iter().zip(&self.target_generators).all(|(m, t)| {
            let mt = m.transpose();
            forms.iter().enumerate().all(|(r, s)| {
                let lhs = mt.mul(s).mul(m);
                let rhs = forms
                    .iter()
                    .enumerate()
                    .fold(Matrix::zeros(s.rows(), s.cols()), |acc, (c, f)| acc.add(&f.scale(t.get(r, c))));
                lhs == rhs
            })
        })
    }

    /// The same map in coordinates of another basis of the image subspace.
    pub fn in_basis(&self, basis: &[Vec<Rational>]) -> Result<QuadraticMap> {
        if self.image_basis.is_empty() {
            return Err(Error::InvalidInput("map has no recorded image subspace".into()));
        }
        if basis.len() != self.image_basis.len() {
            return Err(Error::InvalidInput(format!("{} basis vectors for a {}-dimensional image", basis.len(), self.image_basis.len())));
        }
        let new = Matrix::from_columns(basis).ok_or_else(|| Error::InvalidInput("basis vectors differ in length".into()))?;
        let old = Matrix::from_columns(&self.image_basis).expect("recorded basis");
        if new.rows() != old.rows() {
            return Err(Error::DegreeMismatch { expected: old.rows(), found: new.rows() });
        }
        // old = new · C, so coordinates transform by C
        let c = Coordinates::new(&new)?.solve(&old)?;
        let c_inv = c.inverse().ok_or_else(|| Error::InvalidInput("basis does not span the image".into()))?;
        let forms = (0..c.rows())
            .map(|s| {
                (0..c.cols()).fold(Matrix::zeros(self.source_dim(), self.source_dim()), |acc, t| acc.add(&self.forms[t].scale(c.get(s, t))))
            })
            .collect();
        let cc = c.to_cyclotomic();
        let cc_inv = c_inv.to_cyclotomic();
        let target = self.target_generators.iter().map(|t| cc.mul(t).mul(&cc_inv)).collect();
        let mut out = Self::from_forms(forms, self.source_generators.clone(), target)?;
        out.projection = self.projection.clone();
        out.image_basis = basis.to_vec();
        Ok(out)
    }

    /// Whether x = 0 is the only common zero over C, with the reduced
    /// bases of the dehomogenized systems. The zero map is never admissible.
    pub fn admissibility(&self) -> Result<Admissibility> {
        if self.components.iter().all(Polynomial::is_zero) {
            return Ok(Admissibility { admissible: false, bases: Vec::new() });
        }
        let (admissible, bases) = only_trivial_zero(&self.components)?;
        Ok(Admissibility { admissible, bases })
    }
}

impl fmt::Display for QuadraticMap {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (t, p) in self.components.iter().enumerate() {
            writeln!(f, "phi{} = {p}", t + 1)?;
        }
        Ok(())
    }
}

#[derive(Clone, Debug)]
pub struct Admissibility {
    pub admissible: bool,
    pub bases: Vec<IdealBasis>,
}

fn form_polynomial(s: &Matrix<Rational>) -> Polynomial {
    let n = s.rows();
    let mut terms = Vec::new();
    for i in 0..n {
        for j in 0..n {
            let mut m = vec![0u32; n];
            m[i] += 1;
            m[j] += 1;
            terms.push((m, s.get(i, j).clone()));
        }
    }
    Polynomial::from_terms(n, terms)
}

/// Composite of the diagonal of Sym²(source) with the projection onto the
/// isotypic components of the constituents of `target`.
pub fn quad_map_build(source: &MatrixRep, table: &CharacterTable, target: &ClassFunction) -> Result<QuadraticMap> {
    let chi = source.character(table)?;
    let sym = table.sym_square(&chi)?;
    let in_sym = table.decompose(&sym)?;
    let wanted = table.decompose(target)?;
    let mut constituents = Vec::new();
    for (j, &m) in wanted.iter().enumerate() {
        if m < 0 {
            return Err(Error::InvalidInput("target is not a character".into()));
        }
        if m > 0 {
            if in_sym[j] == 0 {
                return Err(Error::InvalidInput(format!("chi_{} does not occur in Sym2 of {}", j + 1, source.name())));
            }
            constituents.push(j);
        }
    }
    if constituents.is_empty() {
        return Err(Error::InvalidInput("empty target".into()));
    }
    let u = source.sym_square();
    let a = isotypic_projection(&u, table, &constituents)?;
    if a.mul(&a) != a || u.generators().iter().any(|g| g.mul(&a) != a.mul(g)) {
        return Err(Error::CheckFailed("isotypic projection is not an equivariant idempotent".into()));
    }
    let expected: i64 = constituents.iter().map(|&j| in_sym[j] * table.degrees()[j]).sum();
    if a.trace() != Cyclotomic::from_integer(expected) {
        return Err(Error::CheckFailed(format!("projection has trace {}, expected {expected}", a.trace())));
    }
    let a = a.to_rational().ok_or_else(|| Error::InvalidInput("projection has irrational entries".into()))?;
    from_projection(&u, a, source)
}

fn from_projection(u: &MatrixRep, a: Matrix<Rational>, source: &MatrixRep) -> Result<QuadraticMap> {
    let n = source.dim();
    let pairs = sym_pairs(n);
    let (r, pivots) = a.transpose().rref();
    let basis: Vec<Vec<Rational>> = (0..pivots.len()).map(|t| r.row(t).to_vec()).collect();
    let half = rat(1, 2);
    let forms: Vec<Matrix<Rational>> = pivots
        .iter()
        .map(|&p| {
            let mut s = Matrix::zeros(n, n);
            for (c, &(i, j)) in pairs.iter().enumerate() {
                let v = a.get(p, c);
                if Zero::is_zero(v) {
                    continue;
                }
                if i == j {
                    s.set(i, i, v.clone());
                } else {
                    s.set(i, j, v * &half);
                    s.set(j, i, v * &half);
                }
            }
            s
        })
        .collect();
    let b = Matrix::from_columns(&basis).map(|m| m.to_cyclotomic());
    let target = match b {
        Some(b) => u
            .generators()
            .iter()
            .map(|g| {
                let y = g.mul(&b);
                Matrix::from_rows(pivots.iter().map(|&p| y.row(p).to_vec()).collect()).expect("rectangular")
            })
            .collect(),
        None => vec![Matrix::zeros(0, 0); u.generators().len()],
    };
    let mut map = QuadraticMap::from_forms(forms, source.generators().to_vec(), target)?;
    map.projection = Some(a);
    map.image_basis = basis;
    Ok(map)
}

/// Degree congruence carried by α: deg ≡ k^dim (mod α).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CongruenceReport {
    pub alpha: u128,
    pub k: u64,
    pub dim: u32,
    pub power: num_bigint::BigUint,
    pub residue: u128,
    pub context: String,
}

impl CongruenceReport {
    pub fn informative(&self) -> bool {
        self.alpha > 1
    }
}

impl fmt::Display for CongruenceReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if !self.context.is_empty() {
            write!(f, "{}: ", self.context)?;
        }
        if !self.informative() {
            return write!(f, "no information (alpha = 1)");
        }
        if self.power == self.residue.into() {
            write!(f, "deg ≡ {} (mod {})", self.residue, self.alpha)
        } else {
            write!(f, "deg ≡ {} ≡ {} (mod {})", self.power, self.residue, self.alpha)
        }
    }
}

pub fn congruence_report(alpha: u128, k: u64, dim: u32, context: impl Into<String>) -> Result<CongruenceReport> {
    if alpha == 0 {
        return Err(Error::InvalidInput("alpha must be positive".into()));
    }
    let power = num_bigint::BigUint::from(k).pow(dim);
    let residue: u128 = (&power % alpha).try_into().expect("below alpha");
    Ok(CongruenceReport { alpha, k, dim, power, residue, context: context.into() })
}
