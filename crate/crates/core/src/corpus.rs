//! Bundled groups, the J1 table, and the printed values they are checked
//! against.

use std::path::Path;

use crate::chartable::io::{attach_group_by_order, parse_table};
use crate::chartable::{compute_table_dixon, CharacterTable};
use crate::error::{Error, Result};
use crate::perm::io::parse_group;
use crate::perm::PermGroup;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Tag {
    Solvable,
    TwoTransitive,
    Stretch,
}

/// Where an expected value comes from.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Source {
    /// Printed in a published table or figure.
    Printed,
    /// Computed by hand from character sums.
    Derived,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ExpectedIrreducible {
    pub label: String,
    pub degree: i64,
    pub alpha: u128,
}

/// An orbit-type lattice with (G) drawn on top. Nodes are subgroup names as
/// produced by [`crate::paper::subgroup_name`]; edges are (smaller, larger).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LatticeFixture {
    /// Labels of the irreducibles drawn with this lattice.
    pub characters: Vec<String>,
    pub nodes: Vec<String>,
    pub edges: Vec<(String, String)>,
}

#[derive(Clone, Debug)]
pub struct CorpusEntry {
    /// File stem, e.g. `a5`.
    pub key: String,
    pub group_text: String,
    pub table_text: Option<String>,
    /// Irreducibles in printed row order.
    pub expected: Vec<ExpectedIrreducible>,
    pub source: Source,
    pub lattices: Vec<LatticeFixture>,
    pub tags: Vec<Tag>,
}

impl CorpusEntry {
    pub fn group(&self) -> Result<PermGroup> {
        parse_group(&self.group_text)
    }

    pub fn has(&self, tag: Tag) -> bool {
        self.tags.contains(&tag)
    }

    /// The bundled table when there is one, attached by element orders;
    /// otherwise a table computed from the generators.
    pub fn table(&self) -> Result<CharacterTable> {
        let g = self.group()?;
        match &self.table_text {
            Some(text) => attach_group_by_order(parse_table(text, None)?, g),
            None => compute_table_dixon(&g),
        }
    }

    pub fn name(&self) -> String {
        self.group().ok().and_then(|g| g.name().map(str::to_string)).unwrap_or_else(|| self.key.clone())
    }
}

macro_rules! bundled {
    ($($key:literal),* $(,)?) => {
        &[$(($key, include_str!(concat!("../data/groups/", $key, ".grp")))),*]
    };
}

const GROUPS: &[(&str, &str)] = bundled!(
    "a5", "s5", "s4", "a4", "s3", "z6", "q8", "d8", "sl2_3", "f20", "agl3_2", "psl2_8", "pgaml2_8", "psl2_11", "m11",
    "a5xz7", "z2xz3", "es27", "s9", "j1",
);

pub const J1_TABLE: &str = include_str!("../data/tables/j1.tbl");

fn irr(rows: &[(&str, i64, u128)]) -> Vec<ExpectedIrreducible> {
    rows.iter().map(|&(l, d, a)| ExpectedIrreducible { label: l.into(), degree: d, alpha: a }).collect()
}

fn lattice(chars: &[&str], nodes: &[&str], edges: &[(&str, &str)]) -> LatticeFixture {
    LatticeFixture {
        characters: chars.iter().map(|s| s.to_string()).collect(),
        nodes: nodes.iter().map(|s| s.to_string()).collect(),
        edges: edges.iter().map(|&(a, b)| (a.to_string(), b.to_string())).collect(),
    }
}

fn tags(key: &str) -> Vec<Tag> {
    use Tag::*;
    match key {
        "s4" | "a4" | "s3" | "z6" | "q8" | "d8" | "sl2_3" | "z2xz3" => vec![Solvable],
        "f20" => vec![Solvable, TwoTransitive],
        "es27" => vec![Solvable, Stretch],
        "a5" | "s5" | "agl3_2" | "psl2_8" | "pgaml2_8" | "psl2_11" | "m11" => vec![TwoTransitive],
        "s9" => vec![TwoTransitive, Stretch],
        "j1" => vec![Stretch],
        _ => Vec::new(),
    }
}

fn expected(key: &str) -> (Vec<ExpectedIrreducible>, Source, Vec<LatticeFixture>) {
    match key {
        "a5" => (
            irr(&[("psi_0", 1, 1), ("psi_1", 3, 2), ("psi_2", 3, 2), ("psi_3", 4, 5), ("psi_4", 5, 1)]),
            Source::Printed,
            vec![
                lattice(
                    &["psi_1", "psi_2"],
                    &["A5", "Z5", "Z3", "Z2", "Z1"],
                    &[("Z5", "A5"), ("Z3", "A5"), ("Z2", "A5"), ("Z1", "Z5"), ("Z1", "Z3"), ("Z1", "Z2")],
                ),
                lattice(
                    &["psi_3"],
                    &["A5", "A4", "D3", "Z2", "Z3", "Z1"],
                    &[
                        ("A4", "A5"),
                        ("D3", "A5"),
                        ("Z2", "A4"),
                        ("Z3", "A4"),
                        ("Z2", "D3"),
                        ("Z3", "D3"),
                        ("Z1", "Z2"),
                        ("Z1", "Z3"),
                    ],
                ),
                lattice(
                    &["psi_4"],
                    &["A5", "D5", "D3", "V4", "Z2", "Z1"],
                    &[("D5", "A5"), ("D3", "A5"), ("V4", "A5"), ("Z2", "D5"), ("Z2", "D3"), ("Z2", "V4"), ("Z1", "Z2")],
                ),
            ],
        ),
        "s5" => (
            irr(&[
                ("xi_1", 1, 2),
                ("xi_2", 4, 10),
                ("xi_3", 5, 1),
                ("xi_4", 6, 2),
                ("xi_5", 5, 1),
                ("xi_6", 4, 5),
                ("xi_0", 1, 1),
            ]),
            Source::Printed,
            Vec::new(),
        ),
        // Augmentations of the four 2-transitive actions, not all irreducibles.
        "agl3_2" => (
            irr(&[("rho_1", 6, 7), ("rho_2", 7, 2), ("rho_3", 7, 2), ("rho_4", 7, 2)]),
            Source::Printed,
            Vec::new(),
        ),
        "psl2_8" => (
            irr(&[
                ("psi_0", 1, 1),
                ("psi_1", 7, 2),
                ("psi_2", 7, 2),
                ("psi_3", 7, 2),
                ("psi_4", 7, 2),
                ("psi_5", 8, 3),
                ("psi_6", 9, 1),
                ("psi_7", 9, 1),
                ("psi_8", 9, 1),
            ]),
            Source::Printed,
            Vec::new(),
        ),
        "pgaml2_8" => (
            irr(&[
                ("xi_0", 1, 1),
                ("xi_1", 1, 3),
                ("xi_2", 1, 3),
                ("xi_3", 7, 2),
                ("xi_4", 7, 6),
                ("xi_5", 7, 6),
                ("xi_6", 8, 3),
                ("xi_7", 8, 3),
                ("xi_8", 8, 3),
                ("xi_9", 21, 2),
                ("xi_10", 27, 1),
            ]),
            Source::Printed,
            Vec::new(),
        ),
        "q8" => (irr(&[("2-dim", 2, 8)]), Source::Printed, Vec::new()),
        "d8" => (irr(&[("2-dim", 2, 4)]), Source::Printed, Vec::new()),
        "j1" => (
            [1, 56, 56, 76, 76, 77, 77, 77, 120, 120, 120, 133, 133, 133, 209]
                .iter()
                .enumerate()
                .map(|(j, &d)| ExpectedIrreducible { label: format!("chi_{}", j + 1), degree: d, alpha: 1 })
                .collect(),
            Source::Printed,
            Vec::new(),
        ),
        _ => (Vec::new(), Source::Derived, Vec::new()),
    }
}

#[derive(Clone, Debug)]
pub struct Corpus {
    pub entries: Vec<CorpusEntry>,
}

impl Corpus {
    pub fn bundled() -> Self {
        let entries = GROUPS
            .iter()
            .map(|&(key, text)| Self::entry(key, text.to_string(), (key == "j1").then(|| J1_TABLE.to_string())))
            .collect();
        Corpus { entries }
    }

    /// Reads `<key>.grp` for every bundled key from `dir`, and `j1.tbl` from
    /// `dir/../tables` or `dir`. Expected values stay the bundled ones.
    pub fn load_dir(dir: &Path) -> Result<Self> {
        let read = |p: &Path| {
            std::fs::read_to_string(p).map_err(|e| Error::InvalidInput(format!("corpus file {}: {e}", p.display())))
        };
        let mut entries = Vec::new();
        for &(key, _) in GROUPS {
            let text = read(&dir.join(format!("{key}.grp")))?;
            let table = if key == "j1" {
                let beside = dir.join("j1.tbl");
                let sibling = dir.join("../tables/j1.tbl");
                Some(read(if beside.exists() { &beside } else { &sibling })?)
            } else {
                None
            };
            entries.push(Self::entry(key, text, table));
        }
        Ok(Corpus { entries })
    }

    fn entry(key: &str, group_text: String, table_text: Option<String>) -> CorpusEntry {
        let (expected, source, lattices) = expected(key);
        CorpusEntry { key: key.into(), group_text, table_text, expected, source, lattices, tags: tags(key) }
    }

    pub fn get(&self, key: &str) -> Result<&CorpusEntry> {
        self.entries
            .iter()
            .find(|e| e.key == key)
            .ok_or_else(|| Error::InvalidInput(format!("no corpus entry '{key}'")))
    }

    pub fn get_mut(&mut self, key: &str) -> Option<&mut CorpusEntry> {
        self.entries.iter_mut().find(|e| e.key == key)
    }

    pub fn keys(&self) -> Vec<&str> {
        self.entries.iter().map(|e| e.key.as_str()).collect()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn bundled_groups_parse_with_expected_orders() {
        let c = Corpus::bundled();
        let orders: Vec<(&str, u128)> = c.entries.iter().map(|e| (e.key.as_str(), e.group().unwrap().order())).collect();
        let want = [
            ("a5", 60),
            ("s5", 120),
            ("s4", 24),
            ("a4", 12),
            ("s3", 6),
            ("z6", 6),
            ("q8", 8),
            ("d8", 8),
            ("sl2_3", 24),
            ("f20", 20),
            ("agl3_2", 1344),
            ("psl2_8", 504),
            ("pgaml2_8", 1512),
            ("psl2_11", 660),
            ("m11", 7920),
            ("a5xz7", 420),
            ("z2xz3", 6),
            ("es27", 27),
            ("s9", 362880),
            ("j1", 175560),
        ];
        assert_eq!(orders, want);
        for e in &c.entries {
            let g = e.group().unwrap();
            assert_eq!(e.has(Tag::Solvable), crate::perm::is_solvable(&g), "{}", e.key);
        }
    }

    #[test]
    fn j1_table_attaches_by_order() {
        let c = Corpus::bundled();
        let t = c.get("j1").unwrap().table().unwrap();
        assert_eq!(t.degrees(), vec![1, 56, 56, 76, 76, 77, 77, 77, 120, 120, 120, 133, 133, 133, 209]);
        assert!(t.classes().representatives.is_empty());
        let wrong = parse_table(J1_TABLE, None).unwrap();
        assert!(attach_group_by_order(wrong, c.get("a5").unwrap().group().unwrap()).is_err());
    }

    #[test]
    fn load_dir_reports_missing_files() {
        let dir = std::env::temp_dir().join(format!("alpharep-corpus-{}", std::process::id()));
        std::fs::create_dir_all(&dir).unwrap();
        assert!(Corpus::load_dir(&dir).is_err());
        std::fs::remove_dir_all(&dir).unwrap();
        let here = Path::new(env!("CARGO_MANIFEST_DIR")).join("data/groups");
        assert_eq!(Corpus::load_dir(&here).unwrap().entries.len(), GROUPS.len());
    }
}
