//! Text form `3/5*x1^2*x3 - x2`: signed terms, each an optional rational
//! coefficient followed by `*`-separated factors `x<k>` or `x<k>^<e>`.

use num_bigint::BigInt;
use num_traits::{One, Zero};

use super::Polynomial;
use crate::cyclo::Rational;
use crate::error::{Error, Result};

struct Lexer<'a> {
    s: &'a [u8],
    i: usize,
}

impl Lexer<'_> {
    fn skip_ws(&mut self) {
        while self.i < self.s.len() && self.s[self.i].is_ascii_whitespace() {
            self.i += 1;
        }
    }

    fn peek(&mut self) -> Option<u8> {
        self.skip_ws();
        self.s.get(self.i).copied()
    }

    fn number(&mut self) -> Result<BigInt> {
        self.skip_ws();
        let start = self.i;
        while self.i < self.s.len() && self.s[self.i].is_ascii_digit() {
            self.i += 1;
        }
        if start == self.i {
            return Err(Error::parse(self.i, "expected a number"));
        }
        let text = std::str::from_utf8(&self.s[start..self.i]).expect("ascii digits");
        text.parse().map_err(|_| Error::parse(start, "bad number"))
    }
}

/// Parses one polynomial; variables above `nvars` are rejected.
pub fn parse_polynomial(text: &str, nvars: usize) -> Result<Polynomial> {
    let mut lx = Lexer { s: text.as_bytes(), i: 0 };
    let mut terms = Vec::new();
    let mut first = true;
    loop {
        let mut sign = Rational::one();
        match lx.peek() {
            None if !first => break,
            None => return Err(Error::parse(lx.i, "empty polynomial")),
            Some(b'+') if !first => lx.i += 1,
            Some(b'-') => {
                lx.i += 1;
                sign = -sign;
            }
            Some(_) if first => {}
            Some(_) => return Err(Error::parse(lx.i, "expected + or -")),
        }
        first = false;
        let mut coeff = sign;
        let mut mono = vec![0u32; nvars];
        let mut factors = 0;
        loop {
            match lx.peek() {
                Some(c) if c.is_ascii_digit() => {
                    let num = lx.number()?;
                    let den = if lx.peek() == Some(b'/') {
                        lx.i += 1;
                        lx.number()?
                    } else {
                        BigInt::one()
                    };
                    if den.is_zero() {
                        return Err(Error::parse(lx.i, "zero denominator"));
                    }
                    coeff *= Rational::new(num, den);
                }
                Some(b'x') => {
                    lx.i += 1;
                    let at = lx.i;
                    let k: usize = lx.number()?.try_into().map_err(|_| Error::parse(at, "bad variable index"))?;
                    if k == 0 || k > nvars {
                        return Err(Error::parse(at, format!("variable x{k} outside x1..x{nvars}")));
                    }
                    let e = if lx.peek() == Some(b'^') {
                        lx.i += 1;
                        let at = lx.i;
                        u32::try_from(lx.number()?).map_err(|_| Error::parse(at, "bad exponent"))?
                    } else {
                        1
                    };
                    mono[k - 1] += e;
                }
                _ => return Err(Error::parse(lx.i, "expected a coefficient or variable")),
            }
            factors += 1;
            if lx.peek() == Some(b'*') {
                lx.i += 1;
            } else {
                break;
            }
        }
        debug_assert!(factors > 0);
        terms.push((mono, coeff));
    }
    Ok(Polynomial::from_terms(nvars, terms))
}

/// One polynomial per line, `#` comments. An optional `vars N` line fixes the
/// variable count; otherwise it is the largest index used.
pub fn parse_system(text: &str) -> Result<Vec<Polynomial>> {
    let mut declared = None;
    let mut lines = Vec::new();
    for (i, raw) in text.lines().enumerate() {
        let line = raw.split('#').next().unwrap_or("").trim();
        if line.is_empty() {
            continue;
        }
        if let Some(rest) = line.strip_prefix("vars") {
            let n = rest.trim().parse().map_err(|_| Error::parse(i + 1, "bad vars line"))?;
            declared = Some(n);
            continue;
        }
        lines.push((i + 1, line));
    }
    let used = lines
        .iter()
        .flat_map(|(_, l)| l.split('x').skip(1).map(|s| s.chars().take_while(char::is_ascii_digit).collect::<String>()))
        .filter_map(|s| s.parse::<usize>().ok())
        .max()
        .unwrap_or(0);
    let nvars = declared.unwrap_or(used).max(1);
    lines
        .iter()
        .map(|&(n, l)| parse_polynomial(l, nvars).map_err(|e| Error::parse(n, format!("{e}"))))
        .collect()
}
