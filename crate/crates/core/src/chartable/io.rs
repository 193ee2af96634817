//! Text format for character tables.
//!
//! ```text
//! group A5
//! classes 5
//! sizes 1 15 20 12 12
//! orders 1 2 3 5 5
//! powermap 2: 1 1 3 5 4
//! chi_1: 1 1 1 1 1
//! ```
//!
//! Class indices in power maps are 1-based; values use the `E(n)` grammar.

use std::collections::BTreeMap;
use std::fmt::Write;

use super::{CharacterTable, ClassFunction};
use crate::cyclo::parse_cyclotomic;
use crate::error::{Error, Result};
use crate::perm::{ConjugacyClassSet, PermGroup};

fn line_err(line: usize, message: impl Into<String>) -> Error {
    Error::parse(line, message)
}

fn numbers(line: usize, fields: &str, expected: Option<usize>) -> Result<Vec<u64>> {
    let v: Vec<u64> = fields
        .split_whitespace()
        .map(|t| t.parse().map_err(|_| line_err(line, format!("bad number '{t}'"))))
        .collect::<Result<_>>()?;
    if let Some(k) = expected {
        if v.len() != k {
            return Err(line_err(line, format!("expected {k} entries, found {}", v.len())));
        }
    }
    Ok(v)
}

/// Parses and verifies a table. `group`, when given, must have the same class
/// structure; its classes then replace the file's class data so that the table
/// can be evaluated on elements.
pub fn parse_table(text: &str, group: Option<PermGroup>) -> Result<CharacterTable> {
    let mut name = None;
    let mut k = None;
    let mut sizes = None;
    let mut orders = None;
    let mut power_maps = BTreeMap::new();
    let mut chars: Vec<ClassFunction> = Vec::new();
    for (idx, raw) in text.lines().enumerate() {
        let line = idx + 1;
        let content = raw.split('#').next().unwrap_or("").trim();
        if content.is_empty() {
            continue;
        }
        let (head, rest) = content.split_once(char::is_whitespace).unwrap_or((content, ""));
        match head {
            "group" => name = Some(rest.trim().to_string()),
            "classes" => k = Some(numbers(line, rest, Some(1))?[0] as usize),
            "sizes" | "orders" => {
                let kk = k.ok_or_else(|| line_err(line, "'classes' must come first"))?;
                let v = numbers(line, rest, Some(kk))?;
                if head == "sizes" { sizes = Some(v) } else { orders = Some(v) }
            }
            "powermap" => {
                let kk = k.ok_or_else(|| line_err(line, "'classes' must come first"))?;
                let (p, map) = rest.split_once(':').ok_or_else(|| line_err(line, "expected 'powermap p: ...'"))?;
                let p: u64 = p.trim().parse().map_err(|_| line_err(line, "bad prime"))?;
                let map = numbers(line, map, Some(kk))?;
                if map.iter().any(|&c| c == 0 || c as usize > kk) {
                    return Err(line_err(line, "class index out of range"));
                }
                power_maps.insert(p, map.iter().map(|&c| c as usize - 1).collect());
            }
            h if h.starts_with("chi_") => {
                let kk = k.ok_or_else(|| line_err(line, "'classes' must come first"))?;
                let values_text = content.split_once(':').ok_or_else(|| line_err(line, "expected 'chi_j: ...'"))?.1;
                let values = values_text
                    .split_whitespace()
                    .map(|t| parse_cyclotomic(t).map_err(|e| line_err(line, format!("bad value '{t}': {e}"))))
                    .collect::<Result<Vec<_>>>()?;
                if values.len() != kk {
                    return Err(line_err(line, format!("expected {kk} values, found {}", values.len())));
                }
                chars.push(ClassFunction::new(values));
            }
            other => return Err(line_err(line, format!("unknown keyword '{other}'"))),
        }
    }
    let name = name.ok_or_else(|| line_err(0, "missing 'group' line"))?;
    let sizes = sizes.ok_or_else(|| line_err(0, "missing 'sizes' line"))?;
    let orders = orders.ok_or_else(|| line_err(0, "missing 'orders' line"))?;
    let file_classes = ConjugacyClassSet { representatives: Vec::new(), sizes, orders, power_maps };
    let file_table = CharacterTable::new(name.clone(), file_classes, chars, None)?;
    match group {
        None => Ok(file_table),
        Some(g) => attach_group(file_table, g),
    }
}

/// Re-expresses a file table in the class order of `g`, matching columns by
/// size, order and power maps.
pub fn attach_group(table: CharacterTable, g: PermGroup) -> Result<CharacterTable> {
    if g.order() != table.order() as u128 {
        return Err(Error::TableRejected(format!("group order {} differs from table order {}", g.order(), table.order())));
    }
    let classes = g.conjugacy_classes()?;
    let shell = CharacterTable {
        name: table.name.clone(),
        classes: classes.clone(),
        irreducibles: Vec::new(),
        group: None,
        fusions: Default::default(),
    };
    let assignment = table
        .column_assignment(&shell)
        .ok_or_else(|| Error::TableRejected("class data does not match the group".into()))?;
    let mut irreducibles = Vec::with_capacity(table.irreducibles.len());
    for chi in &table.irreducibles {
        let mut values = vec![crate::cyclo::Cyclotomic::zero(); chi.len()];
        for (c, &d) in assignment.iter().enumerate() {
            values[d] = chi[c].clone();
        }
        irreducibles.push(ClassFunction::new(values));
    }
    CharacterTable::new(table.name, classes, irreducibles, Some(g))
}

/// Attaches a group without computing its classes, for groups too large to
/// enumerate. Elements are then classified by order and power maps.
pub fn attach_group_by_order(table: CharacterTable, g: PermGroup) -> Result<CharacterTable> {
    if g.order() != table.order() as u128 {
        return Err(Error::TableRejected(format!("group order {} differs from table order {}", g.order(), table.order())));
    }
    let orders: std::collections::BTreeSet<u64> = table.classes().orders.iter().copied().collect();
    for s in g.generators() {
        let o = s.order();
        if !orders.contains(&o) {
            return Err(Error::TableRejected(format!("generator of order {o} matches no class")));
        }
    }
    let classes = ConjugacyClassSet { representatives: Vec::new(), ..table.classes().clone() };
    CharacterTable::new(table.name, classes, table.irreducibles, Some(g))
}

/// Power maps are written for primes up to the largest element order, which
/// is all that class powers need.
pub fn format_table(t: &CharacterTable) -> String {
    let mut out = String::new();
    let join = |v: &[u64]| v.iter().map(u64::to_string).collect::<Vec<_>>().join(" ");
    writeln!(out, "group {}", t.name()).unwrap();
    writeln!(out, "classes {}", t.class_count()).unwrap();
    writeln!(out, "sizes {}", join(&t.classes().sizes)).unwrap();
    writeln!(out, "orders {}", join(&t.classes().orders)).unwrap();
    let max_order = t.classes().orders.iter().copied().max().unwrap_or(1);
    for (p, map) in t.classes().power_maps.range(..=max_order) {
        let one_based: Vec<u64> = map.iter().map(|&c| c as u64 + 1).collect();
        writeln!(out, "powermap {p}: {}", join(&one_based)).unwrap();
    }
    for (j, chi) in t.irreducibles().iter().enumerate() {
        let vals: Vec<String> = chi.values().iter().map(ToString::to_string).collect();
        writeln!(out, "chi_{}: {}", j + 1, vals.join(" ")).unwrap();
    }
    out
}

pub fn load_table(path: &std::path::Path) -> Result<CharacterTable> {
    parse_table(&std::fs::read_to_string(path)?, None)
}
