use std::cmp::Ordering;
use std::fmt;

use num_traits::{One, Signed, Zero};

use crate::cyclo::Rational;
use crate::error::{Error, Result};

pub type Monomial = Vec<u32>;

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Hash)]
pub enum MonomialOrder {
    Lex,
    Grlex,
    #[default]
    Grevlex,
}

impl MonomialOrder {
    pub fn cmp(self, a: &[u32], b: &[u32]) -> Ordering {
        let deg = |m: &[u32]| m.iter().map(|&e| e as u64).sum::<u64>();
        match self {
            MonomialOrder::Lex => a.cmp(b),
            MonomialOrder::Grlex => deg(a).cmp(&deg(b)).then_with(|| a.cmp(b)),
            MonomialOrder::Grevlex => deg(a).cmp(&deg(b)).then_with(|| {
                // smaller exponent in the last differing variable wins
                for (x, y) in a.iter().zip(b).rev() {
                    if x != y {
                        return y.cmp(x);
                    }
                }
                Ordering::Equal
            }),
        }
    }
}

pub(crate) fn divides(a: &[u32], b: &[u32]) -> bool {
    a.iter().zip(b).all(|(x, y)| x <= y)
}

pub(crate) fn lcm(a: &[u32], b: &[u32]) -> Monomial {
    a.iter().zip(b).map(|(&x, &y)| x.max(y)).collect()
}

/// A polynomial over Q with terms sorted by decreasing monomial.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Polynomial {
    nvars: usize,
    order: MonomialOrder,
    terms: Vec<(Monomial, Rational)>,
}

impl Polynomial {
    pub fn zero(nvars: usize) -> Self {
        Polynomial { nvars, order: MonomialOrder::default(), terms: Vec::new() }
    }

    pub fn constant(nvars: usize, c: Rational) -> Self {
        Self::from_terms(nvars, vec![(vec![0; nvars], c)])
    }

    pub fn one(nvars: usize) -> Self {
        Self::constant(nvars, Rational::one())
    }

    /// x_i, 0-based.
    pub fn var(nvars: usize, i: usize) -> Self {
        let mut m = vec![0; nvars];
        m[i] = 1;
        Self::from_terms(nvars, vec![(m, Rational::one())])
    }

    /// Combines like terms and drops zeros.
    pub fn from_terms(nvars: usize, terms: Vec<(Monomial, Rational)>) -> Self {
        Self::from_terms_in(nvars, MonomialOrder::default(), terms)
    }

    pub fn from_terms_in(nvars: usize, order: MonomialOrder, mut terms: Vec<(Monomial, Rational)>) -> Self {
        assert!(terms.iter().all(|(m, _)| m.len() == nvars), "monomial length differs from variable count");
        terms.sort_by(|a, b| order.cmp(&b.0, &a.0));
        let mut out: Vec<(Monomial, Rational)> = Vec::with_capacity(terms.len());
        for (m, c) in terms {
            match out.last_mut() {
                Some((lm, lc)) if *lm == m => *lc += c,
                _ => out.push((m, c)),
            }
        }
        out.retain(|(_, c)| !c.is_zero());
        Polynomial { nvars, order, terms: out }
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn order(&self) -> MonomialOrder {
        self.order
    }

    pub fn with_order(&self, order: MonomialOrder) -> Self {
        Self::from_terms_in(self.nvars, order, self.terms.clone())
    }

    pub fn terms(&self) -> &[(Monomial, Rational)] {
        &self.terms
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// A nonzero constant.
    pub fn is_unit(&self) -> bool {
        self.terms.len() == 1 && self.terms[0].0.iter().all(|&e| e == 0)
    }

    pub fn total_degree(&self) -> Option<u32> {
        self.terms.iter().map(|(m, _)| m.iter().sum()).max()
    }

    pub fn is_homogeneous(&self) -> bool {
        let mut degs = self.terms.iter().map(|(m, _)| m.iter().sum::<u32>());
        match degs.next() {
            Some(d) => degs.all(|e| e == d),
            None => true,
        }
    }

    pub fn leading_monomial(&self) -> Option<&Monomial> {
        self.terms.first().map(|t| &t.0)
    }

    pub fn leading_coefficient(&self) -> Option<&Rational> {
        self.terms.first().map(|t| &t.1)
    }

    pub fn coefficient(&self, m: &[u32]) -> Rational {
        self.terms.iter().find(|(x, _)| x == m).map(|(_, c)| c.clone()).unwrap_or_else(Rational::zero)
    }

    fn check(&self, other: &Polynomial) {
        assert_eq!(self.nvars, other.nvars, "variable counts differ");
        assert_eq!(self.order, other.order, "monomial orders differ");
    }

    pub fn add(&self, other: &Polynomial) -> Polynomial {
        self.combine(other, &Rational::one(), &[])
    }

    pub fn sub(&self, other: &Polynomial) -> Polynomial {
        self.combine(other, &-Rational::one(), &[])
    }

    /// self + c·x^shift·other, merging the sorted term lists.
    fn combine(&self, other: &Polynomial, c: &Rational, shift: &[u32]) -> Polynomial {
        self.check(other);
        let shifted = |m: &Monomial| -> Monomial {
            if shift.is_empty() {
                m.clone()
            } else {
                m.iter().zip(shift).map(|(a, b)| a + b).collect()
            }
        };
        let mut out = Vec::with_capacity(self.terms.len() + other.terms.len());
        let (mut i, mut j) = (0, 0);
        while i < self.terms.len() || j < other.terms.len() {
            let right = other.terms.get(j).map(|(m, _)| shifted(m));
            let ord = match (self.terms.get(i), &right) {
                (Some(a), Some(b)) => self.order.cmp(&a.0, b),
                (Some(_), None) => Ordering::Greater,
                _ => Ordering::Less,
            };
            match ord {
                Ordering::Greater => {
                    out.push(self.terms[i].clone());
                    i += 1;
                }
                Ordering::Less => {
                    out.push((right.unwrap(), &other.terms[j].1 * c));
                    j += 1;
                }
                Ordering::Equal => {
                    let s = &self.terms[i].1 + &(&other.terms[j].1 * c);
                    if !s.is_zero() {
                        out.push((self.terms[i].0.clone(), s));
                    }
                    i += 1;
                    j += 1;
                }
            }
        }
        Polynomial { nvars: self.nvars, order: self.order, terms: out }
    }

    pub fn scale(&self, c: &Rational) -> Polynomial {
        if c.is_zero() {
            return Polynomial { terms: Vec::new(), ..self.clone() };
        }
        Polynomial { terms: self.terms.iter().map(|(m, x)| (m.clone(), x * c)).collect(), ..self.clone() }
    }

    pub fn mul(&self, other: &Polynomial) -> Polynomial {
        self.check(other);
        let mut acc = Polynomial { terms: Vec::new(), ..self.clone() };
        for (m, c) in &other.terms {
            acc = acc.combine(self, c, m);
        }
        acc
    }

    pub fn pow(&self, e: u32) -> Polynomial {
        let mut acc = Polynomial::one(self.nvars).with_order(self.order);
        for _ in 0..e {
            acc = acc.mul(self);
        }
        acc
    }

    pub fn monic(&self) -> Polynomial {
        match self.leading_coefficient() {
            Some(c) => self.scale(&c.recip()),
            None => self.clone(),
        }
    }

    /// Substitutes x_k = value.
    pub fn substitute(&self, k: usize, value: &Rational) -> Result<Polynomial> {
        if k >= self.nvars {
            return Err(Error::InvalidInput(format!("variable x{} out of range 1..{}", k + 1, self.nvars)));
        }
        let terms = self
            .terms
            .iter()
            .map(|(m, c)| {
                let mut m = m.clone();
                let e = std::mem::take(&mut m[k]);
                (m, c * num_traits::pow(value.clone(), e as usize))
            })
            .collect();
        Ok(Self::from_terms_in(self.nvars, self.order, terms))
    }

    pub fn evaluate(&self, point: &[Rational]) -> Rational {
        assert_eq!(point.len(), self.nvars);
        self.terms
            .iter()
            .map(|(m, c)| m.iter().zip(point).fold(c.clone(), |acc, (&e, x)| acc * num_traits::pow(x.clone(), e as usize)))
            .sum()
    }

    /// Replaces x_i by `images[i]`, all in a common ring.
    pub fn compose(&self, images: &[Polynomial]) -> Polynomial {
        assert_eq!(images.len(), self.nvars);
        let n = images[0].nvars;
        let order = images[0].order;
        let mut acc = Polynomial::zero(n).with_order(order);
        for (m, c) in &self.terms {
            let mut t = Polynomial::constant(n, c.clone()).with_order(order);
            for (i, &e) in m.iter().enumerate() {
                if e > 0 {
                    t = t.mul(&images[i].pow(e));
                }
            }
            acc = acc.add(&t);
        }
        acc
    }
}

impl fmt::Display for Polynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        for (k, (m, c)) in self.terms.iter().enumerate() {
            let neg = c.is_negative();
            let a = c.abs();
            if k == 0 {
                if neg {
                    write!(f, "-")?;
                }
            } else {
                write!(f, " {} ", if neg { '-' } else { '+' })?;
            }
            let vars: Vec<String> = m
                .iter()
                .enumerate()
                .filter(|(_, &e)| e > 0)
                .map(|(i, &e)| if e == 1 { format!("x{}", i + 1) } else { format!("x{}^{}", i + 1, e) })
                .collect();
            if vars.is_empty() {
                write!(f, "{a}")?;
            } else if a.is_one() {
                write!(f, "{}", vars.join("*"))?;
            } else {
                write!(f, "{a}*{}", vars.join("*"))?;
            }
        }
        Ok(())
    }
}

impl fmt::Debug for Polynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}
