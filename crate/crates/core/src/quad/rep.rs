//! Matrix representations given on the generators of a permutation group.
//!
//! Text format, `#` starting a comment:
//!
//! ```text
//! name Q8 H
//! degree 8
//! generator (1 3 2 4)(5 7 6 8)
//! E(4) 0
//! 0 -E(4)
//! generator (1 5 2 6)(3 8 4 7)
//! 0 -1
//! 1 0
//! ```

use std::collections::{HashMap, VecDeque};

use super::matrix::{Matrix, Scalar};
use super::quadmap::sym_square_matrix;
use crate::chartable::{CharacterTable, ClassFunction};
use crate::cyclo::{parse_cyclotomic, Cyclotomic};
use crate::error::{Error, Result};
use crate::perm::{PermGroup, Permutation};

/// Largest group whose element images are listed.
pub const REP_BOUND: u128 = 100_000;

#[derive(Clone, Debug)]
pub struct MatrixRep {
    name: String,
    group: PermGroup,
    generators: Vec<Matrix<Cyclotomic>>,
}

impl MatrixRep {
    /// Checks shapes and, for groups up to `REP_BOUND`, that the generator
    /// images extend to a homomorphism.
    pub fn new(name: impl Into<String>, group: PermGroup, generators: Vec<Matrix<Cyclotomic>>) -> Result<Self> {
        let rep = Self::unchecked(name, group, generators)?;
        if rep.group.order() <= REP_BOUND {
            rep.images()?;
        }
        Ok(rep)
    }

    fn unchecked(name: impl Into<String>, group: PermGroup, generators: Vec<Matrix<Cyclotomic>>) -> Result<Self> {
        if generators.len() != group.generators().len() {
            return Err(Error::InvalidInput(format!(
                "{} matrices for {} group generators",
                generators.len(),
                group.generators().len()
            )));
        }
        let dim = generators.first().map_or(0, Matrix::rows);
        if generators.iter().any(|m| !m.is_square() || m.rows() != dim) {
            return Err(Error::InvalidInput("generator matrices must be square of one size".into()));
        }
        if generators.iter().any(|m| m.inverse().is_none()) {
            return Err(Error::InvalidInput("a generator matrix is singular".into()));
        }
        Ok(MatrixRep { name: name.into(), group, generators })
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn group(&self) -> &PermGroup {
        &self.group
    }

    pub fn generators(&self) -> &[Matrix<Cyclotomic>] {
        &self.generators
    }

    pub fn dim(&self) -> usize {
        self.generators.first().map_or(0, Matrix::rows)
    }

    /// The image of every element, by breadth-first search on the Cayley
    /// graph. An edge whose two ends disagree means the generator images
    /// violate a relation.
    pub fn images(&self) -> Result<HashMap<Permutation, Matrix<Cyclotomic>>> {
        let order = self.group.order();
        if order > REP_BOUND {
            return Err(Error::BoundExceeded { what: "representation images", size: order, bound: REP_BOUND });
        }
        let id = self.group.identity();
        let mut map = HashMap::new();
        map.insert(id.clone(), Matrix::identity(self.dim()));
        let mut queue = VecDeque::from([id]);
        while let Some(g) = queue.pop_front() {
            let m = map[&g].clone();
            for (s, ms) in self.group.generators().iter().zip(&self.generators) {
                let h = s.compose(&g);
                let mh = ms.mul(&m);
                match map.get(&h) {
                    Some(old) if *old != mh => {
                        return Err(Error::CheckFailed(format!(
                            "{}: generator matrices do not define a representation",
                            self.name
                        )))
                    }
                    Some(_) => {}
                    None => {
                        map.insert(h.clone(), mh);
                        queue.push_back(h);
                    }
                }
            }
        }
        Ok(map)
    }

    /// The character on the classes of `table`, whose group must be this one.
    pub fn character(&self, table: &CharacterTable) -> Result<ClassFunction> {
        self.require_table(table)?;
        let images = self.images()?;
        table.class_function_from(|r| images[r].trace())
    }

    pub(crate) fn require_table(&self, table: &CharacterTable) -> Result<()> {
        match table.group() {
            Some(g) if g.order() == self.group.order() && g.generators() == self.group.generators() => Ok(()),
            Some(g) if g.order() == self.group.order() && self.group.generators().iter().all(|s| g.contains(s)) => Ok(()),
            _ => Err(Error::InvalidInput(format!("table {} is not realized on the group of {}", table.name(), self.name))),
        }
    }

    /// The symmetric square on the basis e_i e_i, e_i e_j + e_j e_i (i < j)
    /// in lexicographic order.
    pub fn sym_square(&self) -> MatrixRep {
        MatrixRep {
            name: format!("Sym2({})", self.name),
            group: self.group.clone(),
            generators: self.generators.iter().map(sym_square_matrix).collect(),
        }
    }

    /// The tensor product with the sign of the permutations.
    pub fn sign_twist(&self) -> MatrixRep {
        let generators = self
            .group
            .generators()
            .iter()
            .zip(&self.generators)
            .map(|(s, m)| if s.sign() < 0 { m.scale(&Cyclotomic::from_integer(-1)) } else { m.clone() })
            .collect();
        MatrixRep { name: format!("{}-", self.name), group: self.group.clone(), generators }
    }

    /// Whether every entry of every generator is rational.
    pub fn is_rational(&self) -> bool {
        self.generators.iter().all(|m| m.to_rational().is_some())
    }

    pub fn parse(text: &str) -> Result<Self> {
        let mut name = String::from("rep");
        let mut degree = None;
        let mut perms: Vec<Permutation> = Vec::new();
        let mut rows: Vec<Vec<Vec<Cyclotomic>>> = Vec::new();
        for (i, raw) in text.lines().enumerate() {
            let line = raw.split('#').next().unwrap_or("").trim();
            if line.is_empty() {
                continue;
            }
            let (key, rest) = line.split_once(char::is_whitespace).unwrap_or((line, ""));
            match key {
                "name" => name = rest.trim().to_string(),
                "degree" => degree = Some(rest.trim().parse::<usize>().map_err(|_| Error::parse(i + 1, "bad degree"))?),
                "generator" => {
                    let d = degree.ok_or_else(|| Error::parse(i + 1, "degree must precede generators"))?;
                    perms.push(Permutation::parse(rest.trim(), d).map_err(|e| Error::parse(i + 1, e.to_string()))?);
                    rows.push(Vec::new());
                }
                _ => {
                    let current = rows.last_mut().ok_or_else(|| Error::parse(i + 1, "matrix row before any generator"))?;
                    let row = line
                        .split_whitespace()
                        .map(|t| parse_cyclotomic(t).map_err(|e| Error::parse(i + 1, e.to_string())))
                        .collect::<Result<Vec<_>>>()?;
                    current.push(row);
                }
            }
        }
        let degree = degree.ok_or_else(|| Error::parse(0, "missing degree line"))?;
        if perms.is_empty() {
            return Err(Error::parse(0, "no generators"));
        }
        let mats = rows
            .into_iter()
            .map(|r| Matrix::from_rows(r).ok_or_else(|| Error::parse(0, "ragged matrix rows")))
            .collect::<Result<Vec<_>>>()?;
        let group = PermGroup::with_degree(degree, perms)?.named(name.clone());
        Self::new(name, group, mats)
    }

    pub fn to_text(&self) -> String {
        let mut out = format!("name {}\ndegree {}\n", self.name, self.group.degree());
        for (s, m) in self.group.generators().iter().zip(&self.generators) {
            out.push_str(&format!("generator {s}\n{m}"));
        }
        out
    }
}

/// The character of the subspace spanned by `basis`, which must be invariant.
pub fn subspace_character(rep: &MatrixRep, table: &CharacterTable, basis: &[Vec<Cyclotomic>]) -> Result<ClassFunction> {
    rep.require_table(table)?;
    let b = Matrix::from_columns(basis).ok_or_else(|| Error::InvalidInput("basis vectors differ in length".into()))?;
    if b.rows() != rep.dim() {
        return Err(Error::DegreeMismatch { expected: rep.dim(), found: b.rows() });
    }
    let coords = Coordinates::new(&b)?;
    for m in rep.generators() {
        coords.solve(&m.mul(&b))?;
    }
    let images = rep.images()?;
    let mut values = Vec::new();
    for r in &table.classes().representatives {
        values.push(coords.solve(&images[r].mul(&b))?.trace());
    }
    Ok(ClassFunction::new(values))
}

/// Solves B·C = Y for C when the columns of Y lie in the column space of B.
pub(crate) struct Coordinates<T> {
    basis: Matrix<T>,
    rows: Vec<usize>,
    inverse: Matrix<T>,
}

impl<T: Scalar> Coordinates<T> {
    pub(crate) fn new(basis: &Matrix<T>) -> Result<Self> {
        let (_, rows) = basis.transpose().rref();
        if rows.len() != basis.cols() {
            return Err(Error::InvalidInput("basis vectors are linearly dependent".into()));
        }
        let square = Matrix::from_rows(rows.iter().map(|&i| basis.row(i).to_vec()).collect()).expect("rectangular");
        let inverse = square.inverse().expect("independent rows");
        Ok(Coordinates { basis: basis.clone(), rows, inverse })
    }

    pub(crate) fn solve(&self, y: &Matrix<T>) -> Result<Matrix<T>> {
        let picked = Matrix::from_rows(self.rows.iter().map(|&i| y.row(i).to_vec()).collect()).expect("rectangular");
        let c = self.inverse.mul(&picked);
        if self.basis.mul(&c) != *y {
            return Err(Error::InvalidInput("vectors outside the spanned subspace".into()));
        }
        Ok(c)
    }
}
