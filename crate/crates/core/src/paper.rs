//! Reproduction checks for the published tables, figure and examples, run
//! against a [`Corpus`]. Each criterion reports PASS or FAIL with details.

use std::collections::BTreeSet;
use std::fmt;
use std::time::{Duration, Instant};

use crate::alpha::{
    direct_sum_alpha, fixed_space_dim, induction_alpha_checks, is_realizable, orbit_types_in, solvability_crosscheck,
    tensor_alpha_checks, totally_trivial_scan, AlphaEngine, GroupCharacter, Realizability, TableCharacter,
};
use crate::chartable::{compute_table_dixon, CharacterTable, ClassFunction};
use crate::corpus::{Corpus, CorpusEntry, LatticeFixture};
use crate::cyclo::{rat, Cyclotomic, Rational};
use crate::error::{Error, Result};
use crate::groebner::parse_polynomial;
use crate::perm::{
    coset_action, derived_subgroup, kaplan_levy_all_choices, GroupAction, PermGroup, Permutation,
    SubgroupLattice, LATTICE_BOUND,
};
use crate::quad::{
    congruence_report, nilpotents, quad_map_build, sn_witness_orbits, subspace_character, symmetric_group, Matrix,
    MatrixRep, NilpotentKind, NortonAlgebra, SignedAugmentation, Q8_H_REP, S5_VMINUS_REP,
};
use crate::twotrans::{scan_2transitive, AugmentationCharacter};
use crate::util::gcd_all;

/// The printed S5 projection, row by row, in fifteenths. It is the transpose
/// of the projection acting on column vectors in the Sym² basis
/// x1², x1x2, …, x4².
pub const S5_PRINTED_PROJECTION: [[i64; 10]; 10] = [
    [9, -3, -3, -3, -6, -3, -3, -6, -3, -6],
    [-2, 4, 4, 4, -2, 4, 4, 8, 4, 8],
    [-2, 4, 4, 4, 8, 4, 4, -2, 4, 8],
    [-2, 4, 4, 4, 8, 4, 4, 8, 4, -2],
    [-6, -3, -3, -3, 9, -3, -3, -6, -3, -6],
    [8, 4, 4, 4, -2, 4, 4, -2, 4, 8],
    [8, 4, 4, 4, -2, 4, 4, 8, 4, -2],
    [-6, -3, -3, -3, -6, -3, -3, 9, -3, -6],
    [8, 4, 4, 4, 8, 4, 4, -2, 4, -2],
    [-6, -3, -3, -3, -6, -3, -3, -6, -3, 9],
];

/// Printed bases of the Q8 targets in Sym²(H) (coordinates on x1², x1x2,
/// x2²) and the printed components of f1, f2, f3.
pub const Q8_MAPS: [([[(i64, i64); 3]; 2], [&str; 2]); 3] = [
    ([[(1, 2), (0, 1), (1, 2)], [(1, 2), (0, 1), (-1, 2)]], ["x1^2 + x2^2", "x1^2 - x2^2"]),
    ([[(1, 2), (0, 1), (-1, 2)], [(0, 1), (1, 2), (0, 1)]], ["x1^2 - x2^2", "2*x1*x2"]),
    ([[(1, 2), (0, 1), (1, 2)], [(0, 1), (1, 2), (0, 1)]], ["x1^2 + x2^2", "2*x1*x2"]),
];

pub const CRITERIA: u8 = 14;

#[derive(Clone, Copy, Debug, Default)]
pub struct PaperOptions {
    pub include_stretch: bool,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Outcome {
    Pass,
    Fail,
    /// A stretch criterion that was not requested.
    Skipped,
}

#[derive(Clone, Debug)]
pub struct CriterionResult {
    pub number: u8,
    pub title: &'static str,
    pub outcome: Outcome,
    pub stretch: bool,
    pub details: Vec<String>,
    pub elapsed: Duration,
    pub budget: Option<Duration>,
}

impl CriterionResult {
    pub fn passed(&self) -> bool {
        self.outcome == Outcome::Pass
    }
}

impl fmt::Display for CriterionResult {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let word = match self.outcome {
            Outcome::Pass => "PASS",
            Outcome::Fail => "FAIL",
            Outcome::Skipped => "SKIP",
        };
        write!(f, "{word} criterion {}: {}", self.number, self.title)?;
        if self.stretch {
            write!(f, " [stretch]")?;
        }
        write!(f, " ({:.2?})", self.elapsed)?;
        for d in &self.details {
            write!(f, "\n    {d}")?;
        }
        Ok(())
    }
}

/// Exit status: every non-stretch criterion passed.
pub fn all_required_pass(results: &[CriterionResult]) -> bool {
    results.iter().filter(|r| !r.stretch).all(CriterionResult::passed)
}

fn criterion_info(n: u8) -> (&'static str, bool, Option<u64>) {
    match n {
        1 => ("Table 1, A5 alpha column", false, Some(10)),
        2 => ("Table 2, S5 alpha column with sign-twist labels", false, Some(30)),
        3 => ("Tables 4 and 5, PSL(2,8) and PGammaL(2,8)", false, Some(300)),
        4 => ("Table 3, AGL(3,2) augmentations", false, Some(300)),
        5 => ("Figure 1, A5 orbit-type lattices", false, None),
        6 => ("solvability equivalence and Kaplan-Levy products", false, None),
        7 => ("Q8/D8 separation", false, None),
        8 => ("realizability examples", false, None),
        9 => ("induction and restriction suite", false, None),
        10 => ("S5 and Q8 quadratic maps", false, Some(60)),
        11 => ("Norton algebra nilpotents", false, None),
        12 => ("congruence reports", false, None),
        13 => ("J1 and S9", true, Some(1800)),
        14 => ("Sylow descent against orbit-type lattices", false, None),
        _ => ("unknown", false, None),
    }
}

type Check = Result<(bool, Vec<String>)>;

pub fn run_criterion(corpus: &Corpus, n: u8, opts: PaperOptions) -> CriterionResult {
    let (title, stretch, budget) = criterion_info(n);
    let budget = budget.map(Duration::from_secs);
    if stretch && !opts.include_stretch {
        return CriterionResult {
            number: n,
            title,
            outcome: Outcome::Skipped,
            stretch,
            details: vec!["not requested".into()],
            elapsed: Duration::ZERO,
            budget,
        };
    }
    let start = Instant::now();
    let result: Check = match n {
        1 => criterion_a5(corpus),
        2 => criterion_s5(corpus),
        3 => criterion_psl28(corpus),
        4 => criterion_agl32(corpus),
        5 => criterion_figure(corpus),
        6 => criterion_solvable(corpus),
        7 => criterion_q8_d8(corpus),
        8 => criterion_realizable(corpus),
        9 => criterion_induction(corpus),
        10 => criterion_quadmaps(),
        11 => criterion_norton(),
        12 => criterion_congruence(),
        13 => criterion_stretch(corpus),
        14 => criterion_oracle(corpus),
        _ => Err(Error::InvalidInput(format!("no criterion {n}"))),
    };
    let elapsed = start.elapsed();
    let (mut ok, mut details) = match result {
        Ok(r) => r,
        Err(e) => (false, vec![format!("error: {e}")]),
    };
    if let Some(b) = budget {
        if elapsed > b {
            ok = false;
            details.push(format!("over the {b:?} budget"));
        }
    }
    CriterionResult { number: n, title, outcome: if ok { Outcome::Pass } else { Outcome::Fail }, stretch, details, elapsed, budget }
}

pub fn verify_paper(corpus: &Corpus, opts: PaperOptions) -> Vec<CriterionResult> {
    (1..=CRITERIA).map(|n| run_criterion(corpus, n, opts)).collect()
}

/// A short name for a small subgroup, or its order in brackets.
pub fn subgroup_name(h: &PermGroup) -> String {
    let n = h.order();
    let Ok(elements) = h.elements() else { return format!("[{n}]") };
    let orders: Vec<u64> = elements.iter().map(Permutation::order).collect();
    let count = |o: u64| orders.iter().filter(|&&x| x == o).count() as u128;
    let max = orders.iter().copied().max().unwrap_or(1) as u128;
    if max == n {
        return format!("Z{n}");
    }
    if n == 4 {
        return "V4".into();
    }
    // dihedral of order 2m: a cyclic subgroup of index 2, involutions outside it
    if n.is_multiple_of(2) && max == n / 2 && n / 2 >= 3 && !h.is_abelian() {
        let m = n / 2;
        let inside = if m.is_multiple_of(2) { 1 } else { 0 };
        if count(2) == m + inside {
            return format!("D{m}");
        }
    }
    if n == 12 && count(3) == 8 && count(2) == 3 {
        return "A4".into();
    }
    if n == 60 && count(5) == 24 && count(3) == 20 && count(2) == 15 {
        return "A5".into();
    }
    let named = match (n, count(2), count(3), count(4), count(5)) {
        (8, 1, 0, 6, 0) => "Q8",
        (20, 5, 0, 10, 4) => "F20",
        (24, 9, 8, 6, 0) => "S4",
        (24, 1, 8, 6, 0) => "SL(2,3)",
        (120, 25, 20, 30, 24) => "S5",
        _ => "",
    };
    if !named.is_empty() {
        return named.into();
    }
    format!("[{n}]")
}

fn alphas(table: &CharacterTable) -> Result<Vec<u128>> {
    let g = table.group().ok_or_else(|| Error::InvalidInput("table has no group".into()))?;
    Ok(AlphaEngine::new(g).alpha_all(table)?.iter().map(|r| r.alpha).collect())
}

fn sorted_pairs(mut v: Vec<(i64, u128)>) -> Vec<(i64, u128)> {
    v.sort();
    v
}

/// Compares (degree, α) multisets of the expected rows and of the computed
/// irreducibles.
fn compare_multiset(entry: &CorpusEntry, degrees: &[i64], alphas: &[u128], what: &str) -> (bool, String) {
    let want = sorted_pairs(entry.expected.iter().map(|e| (e.degree, e.alpha)).collect());
    let got = sorted_pairs(degrees.iter().copied().zip(alphas.iter().copied()).collect());
    let ok = want == got;
    let fmt = |v: &[(i64, u128)]| v.iter().map(|(d, a)| format!("{d}:{a}")).collect::<Vec<_>>().join(" ");
    if ok {
        (true, format!("{what}: (degree:alpha) {}", fmt(&got)))
    } else {
        (false, format!("{what}: expected {} but computed {}", fmt(&want), fmt(&got)))
    }
}

/// Computed irreducible for each printed row, matched greedily by degree.
fn rows_by_degree(entry: &CorpusEntry, degrees: &[i64]) -> Result<Vec<usize>> {
    let mut used = vec![false; degrees.len()];
    entry
        .expected
        .iter()
        .map(|e| {
            let j = (0..degrees.len())
                .find(|&j| !used[j] && degrees[j] == e.degree)
                .ok_or_else(|| Error::CheckFailed(format!("no irreducible of degree {} for {}", e.degree, e.label)))?;
            used[j] = true;
            Ok(j)
        })
        .collect()
}

fn criterion_a5(corpus: &Corpus) -> Check {
    let entry = corpus.get("a5")?;
    let g = entry.group()?;
    let t = compute_table_dixon(&g)?;
    let a = alphas(&t)?;
    let rows = rows_by_degree(entry, &t.degrees())?;
    let computed: Vec<u128> = rows.iter().map(|&j| a[j]).collect();
    let printed: Vec<u128> = entry.expected.iter().map(|e| e.alpha).collect();
    let ok = computed == printed;
    let line = format!("Table 1 alpha in row order: computed {computed:?}, printed {printed:?}");
    Ok((ok, vec![line]))
}

fn criterion_s5(corpus: &Corpus) -> Check {
    let entry = corpus.get("s5")?;
    let g = entry.group()?;
    let t = compute_table_dixon(&g)?;
    let a = alphas(&t)?;
    let degrees = t.degrees();
    let find = |chi: &ClassFunction| t.irreducibles().iter().position(|x| x == chi);
    let sign = t.class_function_from(|x| Cyclotomic::from_integer(x.sign() as i64))?;
    let natural = t.class_function_from(|x| Cyclotomic::from_integer(x.fixed_points() as i64 - 1))?;
    let f20 = g.subgroup(vec![Permutation::parse("(1 2 3 4 5)", 5)?, Permutation::parse("(2 3 5 4)", 5)?])?;
    let six = t.permutation_character(&coset_action(&g, &f20)?)?.character;
    let six = &six - &t.trivial();
    let six_dim = degrees.iter().position(|&d| d == 6).map(|j| t.irreducible(j).clone());
    let mut labels: Vec<(&str, Option<ClassFunction>)> = vec![
        ("xi_0", Some(t.trivial())),
        ("xi_1", Some(sign.clone())),
        ("xi_6", Some(natural.clone())),
        ("xi_2", Some(t.tensor(&natural, &sign))),
        ("xi_3", Some(six.clone())),
        ("xi_5", Some(t.tensor(&six, &sign))),
        ("xi_4", six_dim),
    ];
    let mut details = Vec::new();
    let mut ok = true;
    let mut seen = BTreeSet::new();
    labels.sort_by_key(|(l, _)| l.to_string());
    for (label, chi) in labels {
        let j = chi.as_ref().and_then(find);
        let Some(j) = j else {
            ok = false;
            details.push(format!("{label} is not an irreducible"));
            continue;
        };
        seen.insert(j);
        let printed = entry.expected.iter().find(|e| e.label == label).map(|e| (e.degree, e.alpha));
        let got = (degrees[j], a[j]);
        let good = printed == Some(got);
        ok &= good;
        let shown = printed.map_or("none".to_string(), |p| p.1.to_string());
        details.push(format!("{label}: degree {} alpha {} (printed {shown})", got.0, got.1));
    }
    ok &= seen.len() == t.class_count();
    let (m_ok, m_line) = compare_multiset(entry, &degrees, &a, "Table 2 multiset");
    details.push(m_line);
    Ok((ok && m_ok, details))
}

fn criterion_psl28(corpus: &Corpus) -> Check {
    let mut ok = true;
    let mut details = Vec::new();
    for (key, name) in [("psl2_8", "Table 4"), ("pgaml2_8", "Table 5")] {
        let entry = corpus.get(key)?;
        let t = entry.table()?;
        let a = alphas(&t)?;
        let (good, line) = compare_multiset(entry, &t.degrees(), &a, name);
        ok &= good;
        details.push(line);
    }
    Ok((ok, details))
}

fn criterion_agl32(corpus: &Corpus) -> Check {
    let entry = corpus.get("agl3_2")?;
    let g = entry.group()?;
    let t = entry.table()?;
    let records = scan_2transitive(&g, Some(&t))?;
    let mut found: Vec<(usize, i64, u128)> = Vec::new();
    for r in &records {
        let j = r.augmentation.ok_or_else(|| Error::CheckFailed("augmentation is not irreducible".into()))?;
        if !found.iter().any(|f| f.0 == j) {
            found.push((j, r.degree as i64 - 1, r.alpha));
        }
    }
    let degrees: Vec<i64> = found.iter().map(|f| f.1).collect();
    let alphas: Vec<u128> = found.iter().map(|f| f.2).collect();
    let (ok, line) = compare_multiset(entry, &degrees, &alphas, "Table 3");
    Ok((ok, vec![format!("{} 2-transitive coset actions, {} distinct augmentations", records.len(), found.len()), line]))
}

/// Node names and named edges of an orbit-type lattice with (G) on top.
fn named_lattice(lattice: &SubgroupLattice, chi: &dyn GroupCharacter) -> Result<(BTreeSet<String>, BTreeSet<(String, String)>)> {
    let ot = orbit_types_in(lattice, chi)?;
    let g = lattice.group();
    let mut names: Vec<String> = ot.nodes.iter().map(|n| subgroup_name(&n.subgroup)).collect();
    if !ot.nodes.iter().any(|n| n.order == g.order()) {
        names.push(subgroup_name(g));
    }
    let edges = ot.edges_with_top.iter().map(|&(a, b)| (names[a].clone(), names[b].clone())).collect();
    Ok((names.into_iter().collect(), edges))
}

fn criterion_figure(corpus: &Corpus) -> Check {
    let entry = corpus.get("a5")?;
    let g = entry.group()?;
    let t = compute_table_dixon(&g)?;
    let lattice = SubgroupLattice::compute(&g)?;
    let rows = rows_by_degree(entry, &t.degrees())?;
    let mut ok = true;
    let mut details = Vec::new();
    for (k, fixture) in entry.lattices.iter().enumerate() {
        let LatticeFixture { characters, nodes, edges } = fixture;
        let want_nodes: BTreeSet<String> = nodes.iter().cloned().collect();
        let want_edges: BTreeSet<(String, String)> = edges.iter().cloned().collect();
        for label in characters {
            let r = entry
                .expected
                .iter()
                .position(|e| &e.label == label)
                .ok_or_else(|| Error::InvalidInput(format!("unknown row {label}")))?;
            let chi = TableCharacter::irreducible(&t, rows[r])?;
            let (got_nodes, got_edges) = named_lattice(&lattice, &chi)?;
            let good = got_nodes == want_nodes && got_edges == want_edges;
            ok &= good;
            let panel = (b'a' + k as u8) as char;
            details.push(format!(
                "{label} ({panel}): {} nodes, {} edges{}",
                got_nodes.len(),
                got_edges.len(),
                if good { String::new() } else { format!(", computed nodes {got_nodes:?} edges {got_edges:?}") }
            ));
        }
    }
    Ok((ok, details))
}

fn small_entries(corpus: &Corpus, bound: u128) -> Result<Vec<(&CorpusEntry, PermGroup)>> {
    let mut out = Vec::new();
    for e in &corpus.entries {
        let g = e.group()?;
        if g.order() <= bound {
            out.push((e, g));
        }
    }
    Ok(out)
}

fn criterion_solvable(corpus: &Corpus) -> Check {
    let mut ok = true;
    let mut details = Vec::new();
    for (e, g) in small_entries(corpus, 400)? {
        let r = solvability_crosscheck(&e.table()?)?;
        let mut line = format!("{}: solvable {} all alpha > 1 {}", e.name(), r.derived_series_solvable, r.all_nontrivial_alpha_gt_1);
        ok &= r.agree;
        if g.order() <= 120 {
            let kl = kaplan_levy_all_choices(&g)?;
            ok &= kl == r.derived_series_solvable;
            line.push_str(&format!(", Sylow products {}", if kl { "always G" } else { "not always G" }));
        }
        details.push(line);
    }
    Ok((ok, details))
}

fn two_dim_alpha(t: &CharacterTable) -> Result<u128> {
    let j = t.degrees().iter().position(|&d| d == 2).ok_or_else(|| Error::CheckFailed("no 2-dim irreducible".into()))?;
    let g = t.group().expect("computed table");
    Ok(AlphaEngine::new(g).alpha(&TableCharacter::irreducible(t, j)?)?.alpha)
}

fn criterion_q8_d8(corpus: &Corpus) -> Check {
    let q = corpus.get("q8")?;
    let d = corpus.get("d8")?;
    let tq = q.table()?;
    let td = d.table()?;
    let same = tq.same_values_as(&td);
    let (aq, ad) = (two_dim_alpha(&tq)?, two_dim_alpha(&td)?);
    let want = |e: &CorpusEntry| e.expected.first().map(|x| x.alpha);
    let ok = same && Some(aq) == want(q) && Some(ad) == want(d);
    Ok((ok, vec![format!("tables agree: {same}; alpha Q8 {aq}, D8 {ad}")]))
}

fn criterion_realizable(corpus: &Corpus) -> Check {
    let mut ok = true;
    let mut details = Vec::new();
    let a4 = corpus.get("a4")?.table()?;
    let three = a4.degrees().iter().position(|&d| d == 3).ok_or_else(|| Error::CheckFailed("A4 has no 3-dim".into()))?;
    let r = is_realizable(&TableCharacter::irreducible(&a4, three)?)?;
    let good = matches!(r, Realizability::NotRealizable { alpha: 2 });
    ok &= good;
    details.push(format!("A4 3-dim: {r:?}").replace(['\n'], " "));

    // ψ₁⊗1 ⊕ 1⊗ψ₂ on Z2 × Z3: a linear character of order 2 plus one of order 3
    let z = corpus.get("z2xz3")?.table()?;
    let kernel = |chi: &ClassFunction| chi.values().iter().filter(|v| **v == Cyclotomic::from_integer(1)).count();
    let a = z.irreducibles().iter().find(|c| kernel(c) == 3).cloned();
    let b = z.irreducibles().iter().find(|c| kernel(c) == 2).cloned();
    let (Some(a), Some(b)) = (a, b) else { return Ok((false, vec!["Z2xZ3 characters not found".into()])) };
    let r = is_realizable(&TableCharacter::new(&z, &a + &b)?)?;
    let good = matches!(r, Realizability::NotRealizable { alpha: 1 });
    ok &= good;
    details.push(format!("Z6 sum of linears: alpha {} realizable {:?}", realized_alpha(&r), r.is_realizable()));

    for key in ["q8", "d8", "z6"] {
        let e = corpus.get(key)?;
        let t = e.table()?;
        let mut all = true;
        for j in 0..t.class_count() {
            all &= is_realizable(&TableCharacter::irreducible(&t, j)?)?.is_realizable() == Some(true);
        }
        ok &= all;
        details.push(format!("{}: every irreducible realizable {all}", e.name()));
    }
    Ok((ok, details))
}

fn realized_alpha(r: &Realizability) -> u128 {
    match r {
        Realizability::Realizable { alpha, .. } | Realizability::NotRealizable { alpha } | Realizability::Unknown { alpha } => {
            *alpha
        }
    }
}

/// χ restricted to a subgroup H, evaluated through the ambient table.
struct Restricted<'a> {
    table: &'a CharacterTable,
    chi: &'a ClassFunction,
    sub: PermGroup,
}

impl GroupCharacter for Restricted<'_> {
    fn group(&self) -> &PermGroup {
        &self.sub
    }

    fn sum_over(&self, elements: &[Permutation]) -> Result<Cyclotomic> {
        let mut s = Cyclotomic::zero();
        for x in elements {
            s = &s + &self.table.value_at(self.chi, x)?;
        }
        Ok(s)
    }
}

/// χ^s(g) = χ(s g s⁻¹) for s normalizing the table's group.
fn twisted(table: &CharacterTable, chi: &ClassFunction, s: &Permutation) -> Result<ClassFunction> {
    let si = s.inverse();
    let values = table
        .classes()
        .representatives
        .iter()
        .map(|x| table.value_at(chi, &s.compose(x).compose(&si)))
        .collect::<Result<Vec<_>>>()?;
    Ok(ClassFunction::new(values))
}

fn criterion_induction(corpus: &Corpus) -> Check {
    let mut ok = true;
    let mut details = Vec::new();
    let mut counts = [0usize; 5];
    for (e, g) in small_entries(corpus, LATTICE_BOUND)? {
        let t = e.table()?;
        let engine = AlphaEngine::new(&g);
        let a = alphas(&t)?;
        let lattice = SubgroupLattice::compute(&g)?;
        // (a) restriction to every subgroup class
        for c in 0..lattice.class_count() {
            let h = lattice.rep_group(c);
            let he = AlphaEngine::new(&h);
            for (j, chi) in t.irreducibles().iter().enumerate() {
                let r = he.alpha(&Restricted { table: &t, chi, sub: h.clone() })?.alpha;
                counts[0] += 1;
                if a[j] % r != 0 {
                    ok = false;
                    details.push(format!("{}: alpha of chi_{} on a subgroup of order {} is {r}, not a divisor of {}", e.name(), j + 1, h.order(), a[j]));
                }
            }
        }
        // (b) induction from proper nontrivial normal subgroups
        for c in 0..lattice.class_count() {
            let n = lattice.rep_group(c);
            if lattice.class_members(c).len() != 1 || n.order() == 1 || n.order() == g.order() {
                continue;
            }
            let tn = compute_table_dixon(&n)?;
            for omega in tn.irreducibles() {
                let r = induction_alpha_checks(&t, &tn, omega)?;
                counts[1] += 1;
                if !r.holds() {
                    ok = false;
                    details.push(format!("{}: induction from order {} fails {r:?}", e.name(), n.order()));
                }
            }
        }
        // (c) Galois conjugates
        for (j, chi) in t.irreducibles().iter().enumerate() {
            for conj in t.galois_orbit(chi) {
                counts[2] += 1;
                if engine.alpha(&TableCharacter::new(&t, conj)?)?.alpha != a[j] {
                    ok = false;
                    details.push(format!("{}: Galois conjugate of chi_{} changes alpha", e.name(), j + 1));
                }
            }
        }
        // (e) pairwise direct sums
        for i in 0..t.class_count() {
            for j in i..t.class_count() {
                let r = direct_sum_alpha(&t, &[t.irreducible(i).clone(), t.irreducible(j).clone()])?;
                counts[4] += 1;
                if !r.agrees() {
                    ok = false;
                    details.push(format!("{}: direct sum of chi_{} and chi_{} gives {} against gcd {}", e.name(), i + 1, j + 1, r.direct, r.gcd));
                }
            }
        }
    }
    // (d) automorphisms from an overgroup: S5 on A5, PGammaL(2,8) on PSL(2,8)
    for key in ["s5", "pgaml2_8"] {
        let over = corpus.get(key)?.group()?;
        let n = derived_subgroup(&over);
        let tn = compute_table_dixon(&n)?;
        let engine = AlphaEngine::new(&n);
        let a = alphas(&tn)?;
        let mut moved = 0;
        for s in over.generators() {
            for (j, chi) in tn.irreducibles().iter().enumerate() {
                let tw = twisted(&tn, chi, s)?;
                counts[3] += 1;
                if tw != *chi {
                    moved += 1;
                }
                if engine.alpha(&TableCharacter::new(&tn, tw)?)?.alpha != a[j] {
                    ok = false;
                    details.push(format!("automorphism of order-{} group changes alpha of chi_{}", n.order(), j + 1));
                }
            }
        }
        ok &= moved > 0;
        details.push(format!("outer automorphisms of the order-{} subgroup of {key} move {moved} irreducibles, alpha fixed", n.order()));
    }
    details.insert(
        0,
        format!(
            "checked {} restrictions, {} inductions, {} Galois conjugates, {} automorphism twists, {} direct sums",
            counts[0], counts[1], counts[2], counts[3], counts[4]
        ),
    );

    // A5 ⊴ S5 with the 5-dim ψ₄
    let s5 = corpus.get("s5")?.group()?;
    let a5 = derived_subgroup(&s5);
    let ts = compute_table_dixon(&s5)?;
    let ta = compute_table_dixon(&a5)?;
    let five = ta.degrees().iter().position(|&d| d == 5).expect("A5 has a 5-dim irreducible");
    let r = induction_alpha_checks(&ts, &ta, ta.irreducible(five))?;
    let good = r.holds() && r.alpha_omega == 1 && r.constituents.len() == 2 && r.constituents.iter().all(|c| c.2 == 1);
    ok &= good;
    details.push(format!("A5 in S5, psi_4: alpha 1, constituent alphas {:?}", r.constituents.iter().map(|c| c.2).collect::<Vec<_>>()));

    // A5 ⊴ A5 × Z7
    let g = corpus.get("a5xz7")?.group()?;
    let tg = compute_table_dixon(&g)?;
    let n = derived_subgroup(&g);
    let tn = compute_table_dixon(&n)?;
    let five = tn.degrees().iter().position(|&d| d == 5).expect("A5 has a 5-dim irreducible");
    let r = induction_alpha_checks(&tg, &tn, tn.irreducible(five))?;
    let mut pattern: Vec<u128> = r.constituents.iter().map(|c| c.2).collect();
    pattern.sort();
    let good = r.holds() && pattern == [1, 7, 7, 7, 7, 7, 7];
    ok &= good;
    details.push(format!("A5 in A5xZ7, psi_4: constituent alphas {pattern:?}"));

    // S3: θ^{S3} = ρ₁ ⊕ ρ₂ for θ the sign of a transposition subgroup
    let s3 = corpus.get("s3")?.group()?;
    let t3 = compute_table_dixon(&s3)?;
    let h = s3.subgroup(vec![Permutation::parse("(1 2)", 3)?])?;
    let th = compute_table_dixon(&h)?;
    let induced = t3.induce(th.irreducible(1), &th)?;
    let parts: Vec<ClassFunction> = t3
        .decompose(&induced)?
        .iter()
        .enumerate()
        .filter(|(_, &m)| m > 0)
        .map(|(j, _)| t3.irreducible(j).clone())
        .collect();
    let r = direct_sum_alpha(&t3, &parts)?;
    let mut comps = r.components.clone();
    comps.sort();
    let good = comps == [2, 3] && r.direct == 1 && r.agrees();
    ok &= good;
    details.push(format!("S3 induced sign: components {comps:?}, alpha {}", r.direct));

    // Q8: faithful θ of Z4
    let q8 = corpus.get("q8")?.group()?;
    let tq = compute_table_dixon(&q8)?;
    let z4 = q8.subgroup(vec![q8.generators()[0].clone()])?;
    let tz = compute_table_dixon(&z4)?;
    let faithful = tz.irreducibles().iter().find(|c| !c.is_rational()).ok_or_else(|| Error::CheckFailed("Z4".into()))?;
    let r = induction_alpha_checks(&tq, &tz, faithful)?;
    let good = r.holds() && (r.alpha_omega, r.alpha_induced) == (4, 8);
    ok &= good;
    details.push(format!("Q8 from Z4: alpha {} then {}", r.alpha_omega, r.alpha_induced));

    // outer tensors: Z2 × Z3 and the extraspecial square
    let z2 = compute_table_dixon(&crate::perm::named::cyclic(2))?;
    let z3 = compute_table_dixon(&crate::perm::named::cyclic(3))?;
    let r = tensor_alpha_checks(&z2, z2.irreducible(1), &z3, z3.irreducible(1))?;
    ok &= r.holds() && r.alpha_tensor == 6;
    details.push(format!("Z2 x Z3 linears: alpha {}", r.alpha_tensor));
    let es = corpus.get("es27")?.table()?;
    let three = es.degrees().iter().position(|&d| d == 3).ok_or_else(|| Error::CheckFailed("no 3-dim".into()))?;
    let r = tensor_alpha_checks(&es, es.irreducible(three), &es, es.irreducible(three))?;
    ok &= r.holds() && r.alpha_tensor == 27 && (r.alpha_left, r.alpha_right) == (9, 9);
    details.push(format!("extraspecial 27 tensor square: alpha {} from {} and {}", r.alpha_tensor, r.alpha_left, r.alpha_right));
    Ok((ok, details))
}

fn rationals(v: &[(i64, i64)]) -> Vec<Rational> {
    v.iter().map(|&(a, b)| rat(a, b)).collect()
}

fn criterion_quadmaps() -> Check {
    let mut ok = true;
    let mut details = Vec::new();
    let vm = MatrixRep::parse(S5_VMINUS_REP)?;
    let t = compute_table_dixon(vm.group())?;
    let target = t.class_function_from(|g| Cyclotomic::from_integer(g.fixed_points() as i64 - 1))?;
    let map = quad_map_build(&vm, &t, &target)?;
    let a = map.projection.clone().ok_or_else(|| Error::CheckFailed("no projection".into()))?;
    let printed = Matrix::from_rows(S5_PRINTED_PROJECTION.iter().map(|r| r.iter().map(|&x| rat(x, 15)).collect()).collect())
        .expect("square");
    let idempotent = a.mul(&a) == a;
    let commutes = vm.sym_square().generators().iter().all(|m| {
        let m = m.to_rational().expect("rational Sym²");
        m.mul(&a) == a.mul(&m)
    });
    let trace = a.trace();
    let matches = a.transpose() == printed;
    let adm = map.admissibility()?;
    let units = adm.bases.iter().all(|b| b.is_unit());
    ok &= idempotent && commutes && trace == rat(4, 1) && matches && map.is_equivariant() && adm.admissible && units;
    details.push(format!(
        "S5: A^2 = A {idempotent}, commutes {commutes}, trace {trace}, printed matrix read as the transpose {matches}, equivariant {}, {} dehomogenized bases all {{1}} {units}",
        map.is_equivariant(),
        adm.bases.len()
    ));

    let h = MatrixRep::parse(Q8_H_REP)?;
    let tq = compute_table_dixon(h.group())?;
    let u = h.sym_square();
    for (k, (basis, printed)) in Q8_MAPS.iter().enumerate() {
        let b: Vec<Vec<Rational>> = basis.iter().map(|v| rationals(v)).collect();
        let cyc: Vec<Vec<Cyclotomic>> = b.iter().map(|v| v.iter().cloned().map(Cyclotomic::from_rational).collect()).collect();
        let target = subspace_character(&u, &tq, &cyc)?;
        let f = quad_map_build(&h, &tq, &target)?.in_basis(&b)?;
        let want = printed.iter().map(|p| parse_polynomial(p, 2)).collect::<Result<Vec<_>>>()?;
        let same = f.components == want;
        let adm = f.admissibility()?;
        ok &= same && adm.admissible && f.is_equivariant();
        let comps: Vec<String> = f.components.iter().map(ToString::to_string).collect();
        details.push(format!("Q8 f{}: ({}) admissible {}", k + 1, comps.join(", "), adm.admissible));
    }
    Ok((ok, details))
}

fn criterion_norton() -> Check {
    let mut ok = true;
    let mut details = Vec::new();
    for n in [4, 5, 6, 7, 9] {
        let r = nilpotents(n)?;
        let (expected, text) = match &r.kind {
            NilpotentKind::Trivial => (n % 2 == 1, "only 0".to_string()),
            NilpotentKind::Family(sets) => (n == 6 && sets.len() == 20, format!("multiples of {} sign patterns", sets.len())),
            NilpotentKind::Everything => (n == 4, "all of W".to_string()),
        };
        let mut good = expected && r.verified && r.identity_holds;
        let mut line = format!("n = {n}: {text}, verified {}", r.verified);
        if n % 2 == 1 {
            let g = symmetric_group(n)?;
            let map = NortonAlgebra::new(n)?.square_map(g.generators())?;
            let adm = map.admissibility()?.admissible;
            good &= adm && map.is_equivariant();
            line.push_str(&format!(", square map admissible {adm}"));
        }
        ok &= good;
        details.push(line);
    }
    Ok((ok, details))
}

fn criterion_congruence() -> Check {
    let mut ok = true;
    let mut details = Vec::new();
    let h = MatrixRep::parse(Q8_H_REP)?;
    let t = compute_table_dixon(h.group())?;
    let alpha = AlphaEngine::new(h.group()).alpha(&TableCharacter::new(&t, h.character(&t)?)?)?.alpha;
    let q = congruence_report(alpha, 2, 2, "")?.to_string();
    ok &= q == "deg ≡ 4 (mod 8)";
    details.push(format!("Q8: alpha {alpha}, {q}"));

    let g = symmetric_group(5)?;
    let engine = AlphaEngine::new(&g);
    let v = engine.alpha(&AugmentationCharacter::new(GroupAction::natural(&g))?)?.alpha;
    let vm = engine.alpha(&SignedAugmentation::new(&g))?.alpha;
    let s = congruence_report(vm, 2, 4, "")?.to_string();
    ok &= v == 5 && vm == 10 && s == "deg ≡ 16 ≡ 6 (mod 10)";
    details.push(format!("S5: alpha(V) {v}, alpha(V-) {vm}, {s}"));
    Ok((ok, details))
}

fn criterion_stretch(corpus: &Corpus) -> Check {
    let mut ok = true;
    let mut details = Vec::new();
    let e = corpus.get("j1")?;
    let t = e.table()?;
    let a = alphas(&t)?;
    let (good, line) = compare_multiset(e, &t.degrees(), &a, "J1");
    let trivial = totally_trivial_scan(&t)?;
    ok &= good && trivial;
    details.push(line);
    details.push(format!("J1 in the class with only trivial alpha: {trivial}"));

    let g = corpus.get("s9")?.group()?;
    let engine = AlphaEngine::new(&g);
    let v = engine.alpha(&AugmentationCharacter::new(GroupAction::natural(&g))?)?.alpha;
    let vm = engine.alpha(&SignedAugmentation::new(&g))?.alpha;
    let w = sn_witness_orbits(9)?;
    ok &= (v, vm) == (w.gcd_v(), w.gcd_vminus());
    details.push(format!("S9: alpha(V) {v}, alpha(V-) {vm}, witness orbit gcds {} and {}", w.gcd_v(), w.gcd_vminus()));
    Ok((ok, details))
}

fn criterion_oracle(corpus: &Corpus) -> Check {
    let mut ok = true;
    let mut details = Vec::new();
    for (e, g) in small_entries(corpus, 200)? {
        let t = e.table()?;
        let lattice = SubgroupLattice::compute(&g)?;
        let engine = AlphaEngine::new(&g);
        let mut mismatches = 0;
        for j in 0..t.class_count() {
            let chi = TableCharacter::irreducible(&t, j)?;
            let local = engine.alpha(&chi)?.alpha;
            let ot = orbit_types_in(&lattice, &chi)?;
            let indices = gcd_all(ot.nodes.iter().map(|n| n.index));
            if local != indices {
                mismatches += 1;
            }
            for c in 0..lattice.class_count() {
                // an Err here is a non-integral or negative dimension
                fixed_space_dim(&chi, &lattice.rep_group(c))?;
            }
        }
        for a in t.irreducibles() {
            for b in t.irreducibles() {
                let prod = t.tensor(a, b);
                for c in t.irreducibles() {
                    if t.inner_product_int(&prod, c)? < 0 {
                        mismatches += 1;
                    }
                }
            }
        }
        ok &= mismatches == 0;
        details.push(format!("{}: {} irreducibles, {} subgroup classes, {mismatches} mismatches", e.name(), t.class_count(), lattice.class_count()));
    }
    Ok((ok, details))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::perm::named::{alternating, cyclic, direct_product, symmetric};

    #[test]
    fn names_of_small_subgroups() {
        let a5 = alternating(5);
        let lattice = SubgroupLattice::compute(&a5).unwrap();
        let mut names: Vec<String> = (0..lattice.class_count()).map(|c| subgroup_name(&lattice.rep_group(c))).collect();
        names.sort();
        assert_eq!(names, ["A4", "A5", "D3", "D5", "V4", "Z1", "Z2", "Z3", "Z5"]);
        assert_eq!(subgroup_name(&cyclic(6)), "Z6");
        assert_eq!(subgroup_name(&symmetric(4)), "S4");
        let z2 = cyclic(2);
        assert_eq!(subgroup_name(&direct_product(&direct_product(&z2, &z2), &z2)), "[8]");
    }

    #[test]
    fn perturbed_table_one_fails() {
        let mut c = Corpus::bundled();
        c.get_mut("a5").unwrap().expected[3].alpha = 4;
        let r = run_criterion(&c, 1, PaperOptions::default());
        assert_eq!(r.outcome, Outcome::Fail);
        assert!(r.to_string().contains("Table 1"));
    }

    #[test]
    fn stretch_is_skipped_unless_requested() {
        let r = run_criterion(&Corpus::bundled(), 13, PaperOptions::default());
        assert_eq!(r.outcome, Outcome::Skipped);
        assert!(all_required_pass(&[r]));
    }
}
