//! The classification excerpt of almost simple 2-transitive groups with an
//! augmentation of α > 1.
//!
//! One row per line, `|`-separated:
//!
//! ```text
//! degree | condition | socle | max |G/N| | actions | instances
//! ```
//!
//! Expressions may use the instance variables (`n`, `d`, `q`, with `p` and `e`
//! derived from `q = p^e`), integers, `+ - * / ^`, parentheses and
//! `gcd(a,b)`. The actions column is `V`, or clauses `V if x=K` / `V if x>K`
//! ending in `V otherwise`, separated by `;`. Instances are space-separated
//! assignments such as `n=5` or `d=2,q=4`; `yes` marks a row without
//! variables and `data-only` a row that is never constructed.
//!
//! Action counts follow these readings. A row with socle `A_n` counts
//! 2-transitive actions of A_n and S_n together (4 for n = 6 comes from the two
//! classes of A_5 in A_6 and of S_5 in S_6). Other rows count actions of the
//! socle. The degree-2 row of `A_n` stands for S_n acting on S_n/A_n.

use std::collections::BTreeMap;

use rayon::prelude::*;

use super::{criterion_for_action, two_transitive_classes};
use crate::alpha::AlphaEngine;
use crate::error::{Error, Result};
use crate::perm::named::{alternating, general_linear_on_nonzero, mathieu11, pgaml2, psl2, symmetric};
use crate::perm::{coset_action, derived_subgroup, GroupAction, PermGroup, SubgroupLattice, LATTICE_BOUND};
use crate::util::prime_power;

pub const BUNDLED_EXCERPT: &str = include_str!("../../data/classification.txt");

type Vars = BTreeMap<String, u128>;

#[derive(Clone, Debug)]
pub struct ExcerptRow {
    pub line: usize,
    pub degree: String,
    pub condition: String,
    pub socle: String,
    pub max_quotient: String,
    pub actions: String,
    /// None for data-only rows.
    pub instances: Option<Vec<Vars>>,
}

#[derive(Clone, Debug)]
pub struct ActionCheck {
    pub group: String,
    pub stabilizer_order: u128,
    pub two_transitive: bool,
    pub alpha: u128,
}

#[derive(Clone, Debug)]
pub struct InstanceReport {
    pub label: String,
    pub degree: u128,
    pub prime_power: Option<(u64, u32)>,
    pub actions: Vec<ActionCheck>,
    pub expected_actions: u128,
    /// None when the count is out of reach of the subgroup lattice.
    pub found_actions: Option<u128>,
    /// (expected, found) for max |G/N| where the top group is built.
    pub quotient: Option<(u128, u128)>,
}

impl InstanceReport {
    pub fn holds(&self) -> bool {
        !self.actions.is_empty()
            && self.actions.iter().all(|a| {
                a.two_transitive
                    && match self.prime_power {
                        Some((p, _)) => a.alpha > 1 && a.alpha % p as u128 == 0,
                        None => a.alpha == 1,
                    }
            })
            && self.found_actions.is_none_or(|f| f == self.expected_actions)
            && self.quotient.is_none_or(|(e, f)| e == f)
    }
}

#[derive(Clone, Debug)]
pub enum RowStatus {
    Checked(Vec<InstanceReport>),
    DataOnly,
}

#[derive(Clone, Debug)]
pub struct RowReport {
    pub row: ExcerptRow,
    pub status: RowStatus,
}

impl RowReport {
    pub fn holds(&self) -> bool {
        match &self.status {
            RowStatus::Checked(v) => v.iter().all(InstanceReport::holds),
            RowStatus::DataOnly => true,
        }
    }
}

#[derive(Clone, Debug)]
pub struct ExcerptReport {
    pub rows: Vec<RowReport>,
}

impl ExcerptReport {
    pub fn holds(&self) -> bool {
        self.rows.iter().all(RowReport::holds)
    }
}

pub fn parse_excerpt(text: &str) -> Result<Vec<ExcerptRow>> {
    let mut rows = Vec::new();
    for (i, raw) in text.lines().enumerate() {
        let line = raw.split('#').next().unwrap_or("").trim();
        if line.is_empty() {
            continue;
        }
        let cols: Vec<&str> = line.split('|').map(str::trim).collect();
        if cols.len() != 6 {
            return Err(Error::parse(i + 1, format!("expected 6 columns, found {}", cols.len())));
        }
        let instances = match cols[5] {
            "data-only" => None,
            "yes" => Some(vec![Vars::new()]),
            s => Some(s.split_whitespace().map(|a| parse_assignment(a, i + 1)).collect::<Result<Vec<_>>>()?),
        };
        let row = ExcerptRow {
            line: i + 1,
            degree: cols[0].into(),
            condition: cols[1].into(),
            socle: cols[2].into(),
            max_quotient: cols[3].into(),
            actions: cols[4].into(),
            instances,
        };
        // surface expression errors at parse time
        if let Some(list) = &row.instances {
            for v in list {
                eval(&row.degree, v).map_err(|e| Error::parse(i + 1, e.to_string()))?;
                action_count(&row.actions, v).map_err(|e| Error::parse(i + 1, e.to_string()))?;
            }
        }
        rows.push(row);
    }
    Ok(rows)
}

fn parse_assignment(text: &str, line: usize) -> Result<Vars> {
    let mut vars = Vars::new();
    for part in text.split(',') {
        let (k, v) = part.split_once('=').ok_or_else(|| Error::parse(line, format!("bad assignment {part}")))?;
        let v: u128 = v.parse().map_err(|_| Error::parse(line, format!("bad value in {part}")))?;
        vars.insert(k.trim().to_string(), v);
    }
    if let Some(&q) = vars.get("q") {
        let (p, e) = prime_power(q).ok_or_else(|| Error::parse(line, format!("q = {q} is not a prime power")))?;
        vars.insert("p".into(), p as u128);
        vars.insert("e".into(), e as u128);
    }
    Ok(vars)
}

pub fn verify_classification_excerpt(text: &str) -> Result<ExcerptReport> {
    let rows = parse_excerpt(text)?;
    let mut out = Vec::new();
    for row in rows {
        let status = match &row.instances {
            None => RowStatus::DataOnly,
            Some(list) => RowStatus::Checked(list.par_iter().map(|v| check_instance(&row, v)).collect::<Result<Vec<_>>>()?),
        };
        out.push(RowReport { row, status });
    }
    Ok(ExcerptReport { rows: out })
}

fn label(vars: &Vars) -> String {
    let shown: Vec<String> = vars.iter().filter(|(k, _)| *k != "p" && *k != "e").map(|(k, v)| format!("{k}={v}")).collect();
    if shown.is_empty() {
        "-".into()
    } else {
        shown.join(",")
    }
}

/// The socle, and for `A_n` also S_n, with the top group for max |G/N|.
struct Family {
    groups: Vec<PermGroup>,
    top: Option<PermGroup>,
}

fn construct(row: &ExcerptRow, vars: &Vars) -> Result<Family> {
    let missing = || Error::Construction(format!("line {}: no construction for {} with {}", row.line, row.socle, label(vars)));
    let get = |k: &str| vars.get(k).copied().ok_or_else(missing);
    match row.socle.as_str() {
        "A_n" => {
            let n = get("n")? as usize;
            let (a, s) = (alternating(n), symmetric(n));
            Ok(Family { groups: vec![a, s.clone()], top: Some(s) })
        }
        "PSL(d,q)" => match (get("d")?, get("q")?) {
            (2, q) => Ok(Family { groups: vec![psl2(q as u64)?], top: Some(pgaml2(q as u64)?) }),
            (3, 2) => Ok(Family { groups: vec![general_linear_on_nonzero(3, 2)?], top: None }),
            _ => Err(missing()),
        },
        "PSL(2,11)" => Ok(Family { groups: vec![psl2(11)?], top: None }),
        "M11" => Ok(Family { groups: vec![mathieu11()], top: None }),
        _ => Err(missing()),
    }
}

fn check_instance(row: &ExcerptRow, vars: &Vars) -> Result<InstanceReport> {
    let degree = eval(&row.degree, vars)?;
    let family = construct(row, vars)?;
    let socle_only = row.socle != "A_n";
    let index_two = row.socle == "A_n" && degree == 2;
    let mut actions = Vec::new();
    let mut found = Some(0u128);
    let groups: Vec<&PermGroup> = if index_two {
        vec![&family.groups[1]]
    } else if socle_only {
        vec![&family.groups[0]]
    } else {
        family.groups.iter().collect()
    };
    for g in groups {
        let name = g.name().unwrap_or("G").to_string();
        let engine = AlphaEngine::new(g);
        let (list, count): (Vec<GroupAction>, Option<u128>) = if g.order() <= LATTICE_BOUND {
            let lattice = SubgroupLattice::compute(g)?;
            let classes = two_transitive_classes(&lattice, Some(degree))?;
            let list = classes.iter().map(|&c| coset_action(g, &lattice.rep_group(c))).collect::<Result<Vec<_>>>()?;
            let k = list.len() as u128;
            (list, Some(k))
        } else if degree == 2 {
            // index-2 subgroups contain G′, so [G:G′] = 2 leaves exactly one
            let d = derived_subgroup(g);
            let unique = g.order() / d.order() == 2;
            (vec![coset_action(g, &d)?], unique.then_some(1))
        } else if g.degree() as u128 == degree {
            (vec![GroupAction::natural(g)], None)
        } else {
            return Err(Error::Construction(format!("line {}: no degree-{degree} action of {name}", row.line)));
        };
        found = match (found, count) {
            (Some(a), Some(b)) => Some(a + b),
            _ => None,
        };
        for action in list {
            let stabilizer_order = g.order() / action.degree() as u128;
            let two_transitive = action.is_two_transitive();
            let crit = criterion_for_action(&engine, action)?;
            actions.push(ActionCheck { group: name.clone(), stabilizer_order, two_transitive, alpha: crit.alpha });
        }
    }
    let quotient = match (&family.top, eval(&row.max_quotient, vars)) {
        (Some(top), Ok(e)) => Some((e, top.order() / family.groups[0].order())),
        _ => None,
    };
    Ok(InstanceReport {
        label: label(vars),
        degree,
        prime_power: prime_power(degree),
        actions,
        expected_actions: action_count(&row.actions, vars)?,
        found_actions: found,
        quotient,
    })
}

fn action_count(text: &str, vars: &Vars) -> Result<u128> {
    for clause in text.split(';').map(str::trim) {
        if let Some(v) = clause.strip_suffix("otherwise") {
            return eval(v.trim(), vars);
        }
        let Some((v, cond)) = clause.split_once(" if ") else {
            return eval(clause, vars);
        };
        let (name, op, k) = if let Some((a, b)) = cond.split_once('>') {
            (a.trim(), '>', b.trim())
        } else if let Some((a, b)) = cond.split_once('=') {
            (a.trim(), '=', b.trim())
        } else {
            return Err(Error::InvalidInput(format!("bad condition {cond}")));
        };
        let x = eval(name, vars)?;
        let k = eval(k, vars)?;
        if (op == '>' && x > k) || (op == '=' && x == k) {
            return eval(v.trim(), vars);
        }
    }
    Err(Error::InvalidInput(format!("no clause of {text:?} applies")))
}

/// Integer expression over the instance variables.
pub(crate) fn eval(text: &str, vars: &Vars) -> Result<u128> {
    let tokens: Vec<char> = text.chars().filter(|c| !c.is_whitespace()).collect();
    let mut p = ExprParser { s: &tokens, i: 0, vars };
    let v = p.sum()?;
    if p.i != tokens.len() {
        return Err(Error::InvalidInput(format!("trailing input in {text:?}")));
    }
    Ok(v)
}

struct ExprParser<'a> {
    s: &'a [char],
    i: usize,
    vars: &'a Vars,
}

impl ExprParser<'_> {
    fn peek(&self) -> Option<char> {
        self.s.get(self.i).copied()
    }

    fn err(&self, msg: &str) -> Error {
        Error::InvalidInput(format!("{msg} at {}", self.i))
    }

    fn sum(&mut self) -> Result<u128> {
        let mut v = self.product()?;
        while let Some(c @ ('+' | '-')) = self.peek() {
            self.i += 1;
            let r = self.product()?;
            v = if c == '+' { v + r } else { v.checked_sub(r).ok_or_else(|| self.err("negative value"))? };
        }
        Ok(v)
    }

    fn product(&mut self) -> Result<u128> {
        let mut v = self.power()?;
        while let Some(c @ ('*' | '/')) = self.peek() {
            self.i += 1;
            let r = self.power()?;
            if c == '*' {
                v *= r;
            } else {
                if r == 0 || v % r != 0 {
                    return Err(self.err("inexact division"));
                }
                v /= r;
            }
        }
        Ok(v)
    }

    fn power(&mut self) -> Result<u128> {
        let b = self.atom()?;
        if self.peek() == Some('^') {
            self.i += 1;
            let e = self.power()?;
            return b.checked_pow(e as u32).ok_or_else(|| self.err("overflow"));
        }
        Ok(b)
    }

    fn atom(&mut self) -> Result<u128> {
        match self.peek() {
            Some('(') => {
                self.i += 1;
                let v = self.sum()?;
                self.expect(')')?;
                Ok(v)
            }
            Some(c) if c.is_ascii_digit() => {
                let start = self.i;
                while self.peek().is_some_and(|c| c.is_ascii_digit()) {
                    self.i += 1;
                }
                let s: String = self.s[start..self.i].iter().collect();
                s.parse().map_err(|_| self.err("bad number"))
            }
            Some(c) if c.is_ascii_alphabetic() => {
                let start = self.i;
                while self.peek().is_some_and(|c| c.is_ascii_alphanumeric()) {
                    self.i += 1;
                }
                let name: String = self.s[start..self.i].iter().collect();
                if name == "gcd" {
                    self.expect('(')?;
                    let a = self.sum()?;
                    self.expect(',')?;
                    let b = self.sum()?;
                    self.expect(')')?;
                    return Ok(num_integer::gcd(a, b));
                }
                self.vars.get(&name).copied().ok_or_else(|| self.err(&format!("unknown variable {name}")))
            }
            _ => Err(self.err("expected a value")),
        }
    }

    fn expect(&mut self, c: char) -> Result<()> {
        if self.peek() != Some(c) {
            return Err(self.err(&format!("expected {c:?}")));
        }
        self.i += 1;
        Ok(())
    }
}
