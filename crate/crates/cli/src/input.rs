//! Resolving command-line arguments to groups, tables and representations.
//!
//! A group argument is a file path; when no such file exists, the file stem
//! (`a5.grp` or `a5`) selects a bundled corpus group.

use std::path::Path;

use alpharep::chartable::io::{attach_group, attach_group_by_order, parse_table};
use alpharep::chartable::{compute_table_dixon_with_bound, CharacterTable, DIXON_BOUND};
use alpharep::corpus::{Corpus, CorpusEntry};
use alpharep::perm::io::parse_group;
use alpharep::perm::PermGroup;
use alpharep::quad::{MatrixRep, Q8_H_REP, S5_VMINUS_REP};
use alpharep::{Error, Result};

pub struct Bounds {
    pub override_bound: Option<u128>,
}

impl Bounds {
    pub fn dixon(&self) -> u128 {
        self.override_bound.unwrap_or(DIXON_BOUND)
    }
}

pub struct LoadedGroup {
    pub group: PermGroup,
    /// The corpus entry when the argument named a bundled group.
    pub entry: Option<CorpusEntry>,
}

fn stem(arg: &str) -> &str {
    let base = Path::new(arg).file_name().and_then(|s| s.to_str()).unwrap_or(arg);
    base.strip_suffix(".grp").unwrap_or(base)
}

pub fn read_file(path: &str) -> Result<String> {
    std::fs::read_to_string(path).map_err(|e| Error::InvalidInput(format!("{path}: {e}")))
}

pub fn load_group(arg: &str, bounds: &Bounds) -> Result<LoadedGroup> {
    let (group, entry) = if Path::new(arg).exists() {
        (parse_group(&read_file(arg)?)?, None)
    } else {
        let corpus = Corpus::bundled();
        let entry = corpus
            .get(stem(arg))
            .map_err(|_| Error::InvalidInput(format!("{arg}: no such file or bundled group")))?
            .clone();
        (entry.group()?, Some(entry))
    };
    let group = match bounds.override_bound {
        Some(b) => group.with_element_bound(b),
        None => group,
    };
    Ok(LoadedGroup { group, entry })
}

/// A table for the group: from `table_path`, else the bundled table of a
/// corpus entry, else computed by Dixon's method.
pub fn table_for(loaded: &LoadedGroup, table_path: Option<&str>, bounds: &Bounds) -> Result<CharacterTable> {
    let g = loaded.group.clone();
    if let Some(path) = table_path {
        let table = parse_table(&read_file(path)?, None)?;
        return attach_group(table.clone(), g.clone()).or_else(|_| attach_group_by_order(table, g));
    }
    if let Some(text) = loaded.entry.as_ref().and_then(|e| e.table_text.as_ref()) {
        return attach_group_by_order(parse_table(text, None)?, g);
    }
    compute_table_dixon_with_bound(&g, bounds.dixon())
}

pub fn load_rep(arg: &str) -> Result<MatrixRep> {
    if Path::new(arg).exists() {
        return MatrixRep::parse(&read_file(arg)?);
    }
    let base = Path::new(arg).file_name().and_then(|s| s.to_str()).unwrap_or(arg);
    match base.strip_suffix(".rep").unwrap_or(base) {
        "q8_h" => MatrixRep::parse(Q8_H_REP),
        "s5_vminus" => MatrixRep::parse(S5_VMINUS_REP),
        _ => Err(Error::InvalidInput(format!("{arg}: no such file or bundled representation"))),
    }
}

/// Parses a 1-based irreducible index.
pub fn char_index(table: &CharacterTable, j: usize) -> Result<usize> {
    if j == 0 || j > table.irreducibles().len() {
        return Err(Error::InvalidInput(format!("character {j} out of range 1..={}", table.irreducibles().len())));
    }
    Ok(j - 1)
}

/// `3` or `2+3`: a sum of irreducibles, 1-based.
pub fn parse_char_id(text: &str, table: &CharacterTable) -> Result<Vec<i64>> {
    let mut mult = vec![0i64; table.irreducibles().len()];
    for part in text.split('+') {
        let part = part.trim().trim_start_matches("chi_");
        let j: usize = part.parse().map_err(|_| Error::InvalidInput(format!("bad character id '{text}'")))?;
        mult[char_index(table, j)?] += 1;
    }
    Ok(mult)
}

/// Class names such as `1a 2a 3a 5a 5b`, in table order.
pub fn class_names(table: &CharacterTable) -> Vec<String> {
    let orders = &table.classes().orders;
    let mut seen = std::collections::BTreeMap::<u64, usize>::new();
    orders
        .iter()
        .map(|&o| {
            let k = seen.entry(o).or_insert(0);
            let name = format!("{o}{}", letters(*k));
            *k += 1;
            name
        })
        .collect()
}

fn letters(mut k: usize) -> String {
    let mut s = Vec::new();
    loop {
        s.push(b'a' + (k % 26) as u8);
        if k < 26 {
            break;
        }
        k = k / 26 - 1;
    }
    s.reverse();
    String::from_utf8(s).expect("ascii")
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn class_letters() {
        assert_eq!(letters(0), "a");
        assert_eq!(letters(25), "z");
        assert_eq!(letters(26), "aa");
    }

    #[test]
    fn bundled_by_stem() {
        let b = Bounds { override_bound: None };
        assert_eq!(load_group("no/such/dir/a5.grp", &b).unwrap().group.order(), 60);
        assert!(load_group("nothing", &b).is_err());
    }

    #[test]
    fn char_ids() {
        let b = Bounds { override_bound: None };
        let t = table_for(&load_group("s3", &b).unwrap(), None, &b).unwrap();
        assert_eq!(parse_char_id("1+3", &t).unwrap(), vec![1, 0, 1]);
        assert!(parse_char_id("4", &t).is_err());
        assert_eq!(class_names(&t), vec!["1a", "2a", "3a"]);
    }
}
