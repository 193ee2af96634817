use std::fmt;
use std::ops::Mul;

use num_integer::Integer;

use crate::error::{Error, Result};

/// A bijection of `{0, .., degree-1}`; text forms use 1-based points.
///
/// Products compose right to left: `(a * b).apply(i) == a.apply(b.apply(i))`.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Permutation {
    images: Vec<u32>,
}

impl Permutation {
    pub fn identity(degree: usize) -> Self {
        Permutation { images: (0..degree as u32).collect() }
    }

    /// Builds from 0-based images, checking bijectivity.
    pub fn from_images(images: Vec<u32>) -> Result<Self> {
        let n = images.len();
        let mut seen = vec![false; n];
        for &x in &images {
            let x = x as usize;
            if x >= n || seen[x] {
                return Err(Error::InvalidInput(format!("image list is not a bijection of {n} points")));
            }
            seen[x] = true;
        }
        Ok(Permutation { images })
    }

    pub(crate) fn from_images_unchecked(images: Vec<u32>) -> Self {
        Permutation { images }
    }

    /// Builds from 0-based cycles.
    pub fn from_cycles(degree: usize, cycles: &[Vec<usize>]) -> Result<Self> {
        let mut images: Vec<u32> = (0..degree as u32).collect();
        let mut seen = vec![false; degree];
        for cycle in cycles {
            for (k, &a) in cycle.iter().enumerate() {
                if a >= degree {
                    return Err(Error::InvalidInput(format!("point {} exceeds degree {degree}", a + 1)));
                }
                if seen[a] {
                    return Err(Error::InvalidInput(format!("point {} repeated", a + 1)));
                }
                seen[a] = true;
                images[a] = cycle[(k + 1) % cycle.len()] as u32;
            }
        }
        Ok(Permutation { images })
    }

    /// Parses disjoint-cycle notation such as `(1 2 3)(4 5)`; commas are accepted as separators.
    pub fn parse(text: &str, degree: usize) -> Result<Self> {
        let bytes = text.as_bytes();
        let mut cycles: Vec<Vec<usize>> = Vec::new();
        let mut seen = vec![false; degree];
        let mut i = 0;
        let skip_ws = |i: &mut usize| {
            while *i < bytes.len() && (bytes[*i].is_ascii_whitespace() || bytes[*i] == b',') {
                *i += 1;
            }
        };
        skip_ws(&mut i);
        while i < bytes.len() {
            if bytes[i] != b'(' {
                return Err(Error::parse(i, "expected '('"));
            }
            i += 1;
            let mut cycle = Vec::new();
            loop {
                skip_ws(&mut i);
                if i >= bytes.len() {
                    return Err(Error::parse(i, "unclosed '('"));
                }
                if bytes[i] == b')' {
                    i += 1;
                    break;
                }
                let start = i;
                while i < bytes.len() && bytes[i].is_ascii_digit() {
                    i += 1;
                }
                if start == i {
                    return Err(Error::parse(i, "expected a point"));
                }
                let point: usize = text[start..i]
                    .parse()
                    .map_err(|_| Error::parse(start, "point out of range"))?;
                if point == 0 || point > degree {
                    return Err(Error::parse(start, format!("point {point} outside 1..={degree}")));
                }
                if seen[point - 1] {
                    return Err(Error::parse(start, format!("point {point} repeated")));
                }
                seen[point - 1] = true;
                cycle.push(point - 1);
            }
            if cycle.len() > 1 {
                cycles.push(cycle);
            }
            skip_ws(&mut i);
        }
        Self::from_cycles(degree, &cycles)
    }

    pub fn degree(&self) -> usize {
        self.images.len()
    }

    /// 0-based images.
    pub fn images(&self) -> &[u32] {
        &self.images
    }

    #[inline]
    pub fn apply(&self, point: usize) -> usize {
        self.images[point] as usize
    }

    pub fn is_identity(&self) -> bool {
        self.images.iter().enumerate().all(|(i, &x)| i as u32 == x)
    }

    pub fn inverse(&self) -> Self {
        let mut inv = vec![0u32; self.images.len()];
        for (i, &x) in self.images.iter().enumerate() {
            inv[x as usize] = i as u32;
        }
        Permutation { images: inv }
    }

    /// `self ∘ other`: applies `other` first.
    pub fn compose(&self, other: &Permutation) -> Self {
        assert_eq!(self.degree(), other.degree(), "composing permutations of different degree");
        Permutation { images: other.images.iter().map(|&x| self.images[x as usize]).collect() }
    }

    /// `g * self * g⁻¹`.
    pub fn conjugate_by(&self, g: &Permutation) -> Self {
        let mut out = vec![0u32; self.images.len()];
        for (i, &x) in self.images.iter().enumerate() {
            out[g.images[i] as usize] = g.images[x as usize];
        }
        Permutation { images: out }
    }

    pub fn pow(&self, e: i64) -> Self {
        let base = if e < 0 { self.inverse() } else { self.clone() };
        let mut e = e.unsigned_abs();
        let mut acc = Permutation::identity(self.degree());
        let mut sq = base;
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.compose(&sq);
            }
            sq = sq.compose(&sq);
            e >>= 1;
        }
        acc
    }

    /// Cycles of length ≥ 2, each starting at its least point, ordered by that point.
    pub fn cycles(&self) -> Vec<Vec<usize>> {
        let mut seen = vec![false; self.degree()];
        let mut out = Vec::new();
        for start in 0..self.degree() {
            if seen[start] {
                continue;
            }
            let mut cycle = vec![start];
            seen[start] = true;
            let mut x = self.apply(start);
            while x != start {
                seen[x] = true;
                cycle.push(x);
                x = self.apply(x);
            }
            if cycle.len() > 1 {
                out.push(cycle);
            }
        }
        out
    }

    /// Cycle lengths including fixed points, sorted descending.
    pub fn cycle_type(&self) -> Vec<usize> {
        let mut lens: Vec<usize> = self.cycles().iter().map(Vec::len).collect();
        let fixed = self.fixed_points();
        lens.extend(std::iter::repeat_n(1, fixed));
        lens.sort_unstable_by(|a, b| b.cmp(a));
        lens
    }

    pub fn order(&self) -> u64 {
        self.cycles().iter().fold(1u64, |acc, c| acc.lcm(&(c.len() as u64)))
    }

    pub fn fixed_points(&self) -> usize {
        self.images.iter().enumerate().filter(|(i, &x)| *i as u32 == x).count()
    }

    pub fn sign(&self) -> i32 {
        let odd = self.cycles().iter().filter(|c| c.len() % 2 == 0).count();
        if odd % 2 == 0 {
            1
        } else {
            -1
        }
    }
}

impl Mul for &Permutation {
    type Output = Permutation;
    fn mul(self, rhs: &Permutation) -> Permutation {
        self.compose(rhs)
    }
}

impl fmt::Display for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let cycles = self.cycles();
        if cycles.is_empty() {
            return write!(f, "()");
        }
        for c in cycles {
            write!(f, "(")?;
            for (k, x) in c.iter().enumerate() {
                if k > 0 {
                    write!(f, " ")?;
                }
                write!(f, "{}", x + 1)?;
            }
            write!(f, ")")?;
        }
        Ok(())
    }
}

impl fmt::Debug for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parse_examples() {
        let id = Permutation::parse("()", 4).unwrap();
        assert!(id.is_identity());
        assert_eq!(id.degree(), 4);
        let c5 = Permutation::parse("(1 2 3 4 5)", 5).unwrap();
        assert_eq!(c5.order(), 5);
        let x = Permutation::parse("(1 2)(3 4 5)", 5).unwrap();
        assert_eq!(x.order(), 6);
        assert_eq!(x.to_string(), "(1 2)(3 4 5)");
    }

    #[test]
    fn parse_errors() {
        assert!(matches!(Permutation::parse("(1 2 1)", 3), Err(Error::Parse { .. })));
        assert!(matches!(Permutation::parse("(1 7)", 5), Err(Error::Parse { .. })));
        assert!(matches!(Permutation::parse("(1 2", 5), Err(Error::Parse { .. })));
        assert!(matches!(Permutation::parse("1 2)", 5), Err(Error::Parse { .. })));
        assert!(matches!(Permutation::parse("(1)(1 2)", 5), Err(Error::Parse { .. })));
    }

    #[test]
    fn composition_is_right_to_left() {
        let a = Permutation::parse("(1 2)", 3).unwrap();
        let b = Permutation::parse("(2 3)", 3).unwrap();
        let ab = &a * &b;
        // b sends 2 to 3, a fixes 3.
        assert_eq!(ab.apply(1), 2);
        assert_eq!(ab.to_string(), "(1 2 3)");
        assert!((&ab * &ab.inverse()).is_identity());
        let g = Permutation::parse("(1 3)", 3).unwrap();
        assert_eq!(a.conjugate_by(&g), &(&g * &a) * &g.inverse());
        assert_eq!(ab.pow(3), Permutation::identity(3));
        assert_eq!(ab.pow(-1), ab.inverse());
        assert_eq!(ab.sign(), 1);
        assert_eq!(a.sign(), -1);
    }
}
