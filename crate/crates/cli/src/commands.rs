use std::fmt::Write;

use serde_json::{json, Value};

use alpharep::alpha::{orbit_types_in, solvability_crosscheck, totally_trivial_scan, AlphaEngine, AlphaReport, TableCharacter};
use alpharep::chartable::io::{format_table, parse_table};
use alpharep::chartable::{compute_table_dixon, compute_table_dixon_with_bound, CharacterTable};
use alpharep::corpus::Corpus;
use alpharep::groebner::{buchberger, only_trivial_zero, parse_system, Polynomial};
use alpharep::paper::{all_required_pass, subgroup_name, verify_paper, CriterionResult, Outcome, PaperOptions};
use alpharep::perm::{is_solvable, SubgroupLattice, LATTICE_BOUND};
use alpharep::quad::{congruence_report, nilpotents, quad_map_build, MatrixRep, NilpotentKind, NortonAlgebra, QuadraticMap};
use alpharep::twotrans::{scan_2transitive_in, verify_classification_excerpt, RowStatus, BUNDLED_EXCERPT};
use alpharep::{Error, Result};

use crate::input::{char_index, class_names, load_group, load_rep, parse_char_id, read_file, table_for, Bounds};

/// Human text, the JSON form of the same data, and whether the command's
/// check (if any) held.
pub struct Report {
    pub text: String,
    pub json: Value,
    pub ok: bool,
}

impl Report {
    fn new(text: String, json: Value) -> Self {
        Report { text, json, ok: true }
    }

    fn check(mut self, ok: bool) -> Self {
        self.ok = ok;
        self
    }
}

fn lattice_bound(bounds: &Bounds) -> u128 {
    bounds.override_bound.unwrap_or(LATTICE_BOUND)
}

fn group_label(g: &alpharep::perm::PermGroup) -> String {
    g.name().map_or_else(|| format!("G of order {}", g.order()), str::to_string)
}

pub fn group_info(file: &str, bounds: &Bounds) -> Result<Report> {
    let g = load_group(file, bounds)?.group;
    let solvable = is_solvable(&g);
    let classes = g.conjugacy_classes()?.len();
    let mut text = String::new();
    writeln!(text, "group    {}", group_label(&g)).unwrap();
    writeln!(text, "degree   {}", g.degree()).unwrap();
    writeln!(text, "order    {}", g.order()).unwrap();
    writeln!(text, "solvable {}", if solvable { "yes" } else { "no" }).unwrap();
    writeln!(text, "classes  {classes}").unwrap();
    let json = json!({
        "group": g.name(),
        "degree": g.degree(),
        "order": g.order().to_string(),
        "solvable": solvable,
        "classes": classes,
    });
    Ok(Report::new(text, json))
}

fn table_json(t: &CharacterTable) -> Value {
    json!({
        "group": t.name(),
        "order": t.order(),
        "classes": class_names(t),
        "sizes": t.classes().sizes,
        "orders": t.classes().orders,
        "degrees": t.degrees(),
        "irreducibles": t.irreducibles().iter().map(|chi| chi.values().iter().map(ToString::to_string).collect::<Vec<_>>()).collect::<Vec<_>>(),
    })
}

pub fn chartab_compute(group: &str, out: Option<&str>, bounds: &Bounds) -> Result<Report> {
    let g = load_group(group, bounds)?.group;
    let t = compute_table_dixon_with_bound(&g, bounds.dixon())?;
    let text = format_table(&t);
    if let Some(path) = out {
        std::fs::write(path, &text)?;
    }
    Ok(Report::new(text, table_json(&t)))
}

pub fn chartab_load(file: &str, group: Option<&str>, bounds: &Bounds) -> Result<Report> {
    let t = match group {
        Some(g) => table_for(&load_group(g, bounds)?, Some(file), bounds)?,
        None => parse_table(&read_file(file)?, None)?,
    };
    let degrees: Vec<String> = t.degrees().iter().map(i64::to_string).collect();
    let mut text = String::new();
    writeln!(text, "table {}: order {}, {} classes", t.name(), t.order(), t.class_count()).unwrap();
    writeln!(text, "degrees {}", degrees.join(" ")).unwrap();
    writeln!(text, "orthogonality relations hold").unwrap();
    if group.is_some() {
        writeln!(text, "attached to the group").unwrap();
    }
    Ok(Report::new(text, table_json(&t)))
}

pub fn chartab_show(file: &str) -> Result<Report> {
    let t = parse_table(&read_file(file)?, None)?;
    let names = class_names(&t);
    let mut rows: Vec<Vec<String>> = Vec::new();
    rows.push(std::iter::once(String::new()).chain(names.iter().cloned()).collect());
    rows.push(std::iter::once("size".to_string()).chain(t.classes().sizes.iter().map(u64::to_string)).collect());
    for (j, chi) in t.irreducibles().iter().enumerate() {
        rows.push(std::iter::once(format!("chi_{}", j + 1)).chain(chi.values().iter().map(ToString::to_string)).collect());
    }
    let mut text = format!("{}\n\n", t.name());
    text.push_str(&align(&rows));
    Ok(Report::new(text, table_json(&t)))
}

/// Right-aligned columns, first column left-aligned.
fn align(rows: &[Vec<String>]) -> String {
    let cols = rows.iter().map(Vec::len).max().unwrap_or(0);
    let widths: Vec<usize> =
        (0..cols).map(|c| rows.iter().filter_map(|r| r.get(c)).map(|s| s.chars().count()).max().unwrap_or(0)).collect();
    let mut out = String::new();
    for r in rows {
        let cells: Vec<String> = r
            .iter()
            .enumerate()
            .map(|(c, s)| if c == 0 { format!("{s:<w$}", w = widths[0]) } else { format!("{s:>w$}", w = widths[c]) })
            .collect();
        out.push_str(cells.join("  ").trim_end());
        out.push('\n');
    }
    out
}

fn locals_text(r: &AlphaReport) -> String {
    let parts: Vec<String> = r.locals.iter().filter(|l| l.value > 1).map(|l| format!("{}:{}", l.prime, l.value)).collect();
    if parts.is_empty() {
        "-".into()
    } else {
        parts.join(" ")
    }
}

pub fn alpha(group: &str, char: Option<usize>, table: Option<&str>, bounds: &Bounds) -> Result<Report> {
    let loaded = load_group(group, bounds)?;
    let t = table_for(&loaded, table, bounds)?;
    let g = &loaded.group;
    let engine = AlphaEngine::new(g);
    let indices: Vec<usize> = match char {
        Some(j) => vec![char_index(&t, j)?],
        None => (0..t.irreducibles().len()).collect(),
    };
    let reports: Vec<AlphaReport> = match char {
        Some(_) => vec![engine.alpha(&TableCharacter::irreducible(&t, indices[0])?)?],
        None => engine.alpha_all(&t)?,
    };
    let degrees = t.degrees();
    let mut rows = vec![vec!["char".to_string(), "degree".into(), "alpha".into(), "local".into()]];
    let mut chars = Vec::new();
    for (&j, r) in indices.iter().zip(&reports) {
        rows.push(vec![format!("chi_{}", j + 1), degrees[j].to_string(), r.alpha.to_string(), locals_text(r)]);
        let locals: serde_json::Map<String, Value> =
            r.locals.iter().map(|l| (l.prime.to_string(), json!(l.value.to_string()))).collect();
        chars.push(json!({
            "index": j + 1,
            "degree": degrees[j],
            "alpha": r.alpha.to_string(),
            "locals": locals,
        }));
    }
    let text = format!("{} (order {})\n{}", group_label(g), g.order(), align(&rows));
    let json = json!({
        "group": g.name(),
        "order": g.order().to_string(),
        "alpha": reports.iter().map(|r| r.alpha.to_string()).collect::<Vec<_>>(),
        "characters": chars,
    });
    Ok(Report::new(text, json))
}

pub fn orbit_types(group: &str, char: usize, table: Option<&str>, dot: bool, bounds: &Bounds) -> Result<Report> {
    let loaded = load_group(group, bounds)?;
    let t = table_for(&loaded, table, bounds)?;
    let j = char_index(&t, char)?;
    let lattice = SubgroupLattice::compute_with_bound(&loaded.group, lattice_bound(bounds))?;
    let chi = TableCharacter::irreducible(&t, j)?;
    let ot = orbit_types_in(&lattice, &chi)?;
    let mut names: Vec<String> = ot.nodes.iter().map(|n| subgroup_name(&n.subgroup)).collect();
    let top = ot.nodes.len();
    if ot.edges_with_top.iter().any(|&(a, b)| a == top || b == top) {
        names.push(subgroup_name(&loaded.group));
    }
    let label = format!("chi_{}", j + 1);
    let text = if dot {
        let mut s = format!("digraph \"orbit types of {label}\" {{\n  rankdir=BT;\n");
        for (i, name) in names.iter().enumerate() {
            let shape = if i == top { ", style=dashed" } else { "" };
            writeln!(s, "  n{i} [label=\"{name}\"{shape}];").unwrap();
        }
        for &(a, b) in &ot.edges_with_top {
            writeln!(s, "  n{a} -> n{b};").unwrap();
        }
        s.push_str("}\n");
        s
    } else {
        let mut rows = vec![vec!["type".to_string(), "order".into(), "index".into(), "dim V^H".into()]];
        for (n, name) in ot.nodes.iter().zip(&names) {
            rows.push(vec![format!("({name})"), n.order.to_string(), n.index.to_string(), n.fixed_dim.to_string()]);
        }
        let edges: Vec<String> = ot.edges_with_top.iter().map(|&(a, b)| format!("{} < {}", names[a], names[b])).collect();
        format!(
            "orbit types of {label} (degree {})\n{}covers: {}\nalpha = gcd of indices = {}\n",
            t.degrees()[j],
            align(&rows),
            edges.join(", "),
            ot.alpha()
        )
    };
    let json = json!({
        "character": j + 1,
        "alpha": ot.alpha().to_string(),
        "nodes": ot.nodes.iter().zip(&names).map(|(n, name)| json!({
            "name": name,
            "order": n.order.to_string(),
            "index": n.index.to_string(),
            "fixed_dim": n.fixed_dim,
        })).collect::<Vec<_>>(),
        "edges": ot.edges_with_top.iter().map(|&(a, b)| json!([names[a], names[b]])).collect::<Vec<_>>(),
    });
    Ok(Report::new(text, json))
}

pub fn solvable_check(group: &str, table: Option<&str>, bounds: &Bounds) -> Result<Report> {
    let loaded = load_group(group, bounds)?;
    let t = table_for(&loaded, table, bounds)?;
    let r = solvability_crosscheck(&t)?;
    let alphas: Vec<String> = r.alphas.iter().map(u128::to_string).collect();
    let yn = |b: bool| if b { "yes" } else { "no" };
    let mut text = String::new();
    writeln!(text, "{}", group_label(&loaded.group)).unwrap();
    writeln!(text, "alpha vector                  {}", alphas.join(" ")).unwrap();
    writeln!(text, "solvable (derived series)     {}", yn(r.derived_series_solvable)).unwrap();
    writeln!(text, "all nontrivial alpha > 1      {}", yn(r.all_nontrivial_alpha_gt_1)).unwrap();
    writeln!(text, "{}", if r.agree { "PASS: the two agree" } else { "FAIL: the two disagree" }).unwrap();
    let json = json!({
        "group": loaded.group.name(),
        "alpha": alphas,
        "solvable": r.derived_series_solvable,
        "all_nontrivial_alpha_gt_1": r.all_nontrivial_alpha_gt_1,
        "agree": r.agree,
    });
    Ok(Report::new(text, json).check(r.agree))
}

pub fn scan_trivial(group: &str, table: Option<&str>, bounds: &Bounds) -> Result<Report> {
    let loaded = load_group(group, bounds)?;
    let t = table_for(&loaded, table, bounds)?;
    let trivial = totally_trivial_scan(&t)?;
    let text = format!(
        "{}: {}\n",
        group_label(&loaded.group),
        if trivial { "every irreducible has alpha = 1" } else { "some irreducible has alpha > 1" }
    );
    Ok(Report::new(text, json!({ "group": loaded.group.name(), "all_alpha_one": trivial })))
}

pub fn twotrans_scan(group: &str, table: Option<&str>, bounds: &Bounds) -> Result<Report> {
    let loaded = load_group(group, bounds)?;
    let t = match table_for(&loaded, table, bounds) {
        Ok(t) => Some(t),
        Err(Error::BoundExceeded { .. }) if table.is_none() => None,
        Err(e) => return Err(e),
    };
    let lattice = SubgroupLattice::compute_with_bound(&loaded.group, lattice_bound(bounds))?;
    let mut records = scan_2transitive_in(&lattice, t.as_ref())?;
    records.sort_by_key(|r| (r.degree, std::cmp::Reverse(r.stabilizer.order()), r.class_id));
    let mut rows = vec![vec![
        "stabilizer".to_string(),
        "order".into(),
        "degree".into(),
        "prime power".into(),
        "faithful".into(),
        "augmentation".into(),
        "alpha".into(),
    ]];
    let mut list = Vec::new();
    for r in &records {
        let name = subgroup_name(&r.stabilizer);
        let pp = r.prime_power.map_or("-".to_string(), |(p, e)| format!("{p}^{e}"));
        let aug = r.augmentation.map_or("-".to_string(), |j| format!("chi_{}", j + 1));
        rows.push(vec![
            name.clone(),
            r.stabilizer.order().to_string(),
            r.degree.to_string(),
            pp.clone(),
            if r.faithful { "yes" } else { "no" }.into(),
            aug,
            r.alpha.to_string(),
        ]);
        list.push(json!({
            "stabilizer": name,
            "stabilizer_order": r.stabilizer.order().to_string(),
            "degree": r.degree.to_string(),
            "prime_power": r.prime_power.map(|(p, e)| json!([p, e])),
            "faithful": r.faithful,
            "augmentation": r.augmentation.map(|j| j + 1),
            "alpha": r.alpha.to_string(),
        }));
    }
    let text = format!("2-transitive actions of {}\n{}", group_label(&loaded.group), align(&rows));
    Ok(Report::new(text, json!({ "group": loaded.group.name(), "actions": list })))
}

pub fn twotrans_verify(file: Option<&str>) -> Result<Report> {
    let text_in = match file {
        Some(f) => read_file(f)?,
        None => BUNDLED_EXCERPT.to_string(),
    };
    let report = verify_classification_excerpt(&text_in)?;
    let mut text = String::new();
    let mut rows_json = Vec::new();
    for row in &report.rows {
        let word = if row.holds() { "PASS" } else { "FAIL" };
        writeln!(text, "{word} line {}: degree {} socle {}", row.row.line, row.row.degree, row.row.socle).unwrap();
        let mut inst_json = Vec::new();
        match &row.status {
            RowStatus::DataOnly => writeln!(text, "    data only, not constructed").unwrap(),
            RowStatus::Checked(list) => {
                for i in list {
                    let alphas: Vec<String> = i.actions.iter().map(|a| a.alpha.to_string()).collect();
                    let found = i.found_actions.map_or("-".to_string(), |f| f.to_string());
                    let quotient = i.quotient.map_or(String::new(), |(e, f)| format!(", max |G/N| {e} found {f}"));
                    writeln!(
                        text,
                        "    {}: degree {}, alpha {}, actions {} found {}{}",
                        i.label,
                        i.degree,
                        alphas.join(","),
                        i.expected_actions,
                        found,
                        quotient
                    )
                    .unwrap();
                    inst_json.push(json!({
                        "instance": i.label,
                        "degree": i.degree.to_string(),
                        "alpha": alphas,
                        "expected_actions": i.expected_actions.to_string(),
                        "found_actions": i.found_actions.map(|f| f.to_string()),
                        "holds": i.holds(),
                    }));
                }
            }
        }
        rows_json.push(json!({
            "line": row.row.line,
            "degree": row.row.degree,
            "socle": row.row.socle,
            "data_only": matches!(row.status, RowStatus::DataOnly),
            "holds": row.holds(),
            "instances": inst_json,
        }));
    }
    let ok = report.holds();
    Ok(Report::new(text, json!({ "rows": rows_json, "holds": ok })).check(ok))
}

pub fn groebner(file: &str) -> Result<Report> {
    let system = parse_system(&read_file(file)?)?;
    let basis = buchberger(&system)?;
    let polys: Vec<String> = basis.polys.iter().map(ToString::to_string).collect();
    let mut text = format!("reduced Groebner basis (grevlex), {} elements\n", polys.len());
    for p in &polys {
        writeln!(text, "  {p}").unwrap();
    }
    let mut json = json!({ "basis": polys, "unit_ideal": basis.is_unit() });
    writeln!(text, "common zero over C: {}", if basis.is_unit() { "none" } else { "exists" }).unwrap();
    if !system.is_empty() && system.iter().all(|p| p.is_homogeneous() && !p.is_zero()) {
        let (trivial, _) = only_trivial_zero(&system)?;
        writeln!(text, "homogeneous system, only the trivial zero: {}", if trivial { "yes" } else { "no" }).unwrap();
        json["only_trivial_zero"] = json!(trivial);
    }
    Ok(Report::new(text, json))
}

pub fn norton(n: usize) -> Result<Report> {
    let alg = NortonAlgebra::new(n)?;
    let c = alg.checks();
    let r = nilpotents(n)?;
    let mut text = String::new();
    writeln!(text, "Norton algebra on W < R^(n choose 2), n = {n}, dim W = {}", c.rank).unwrap();
    writeln!(text, "projection idempotent {}, symmetric {}, fixes W {}", c.idempotent, c.symmetric, c.fixes_w).unwrap();
    writeln!(text, "product commutative {}, equivariant {}", c.commutative, c.equivariant).unwrap();
    writeln!(text, "pairing identity {}", r.identity_holds).unwrap();
    let kind = match &r.kind {
        NilpotentKind::Trivial => {
            writeln!(text, "2-nilpotents: only w = 0").unwrap();
            json!("trivial")
        }
        NilpotentKind::Everything => {
            writeln!(text, "2-nilpotents: every w (the square map is zero)").unwrap();
            json!("everything")
        }
        NilpotentKind::Family(sets) => {
            writeln!(text, "2-nilpotents: multiples of sum_I f_k - sum_rest f_k over {} sets I of size {}", sets.len(), n / 2)
                .unwrap();
            let one_based: Vec<Vec<usize>> = sets.iter().map(|s| s.iter().map(|k| k + 1).collect()).collect();
            json!({ "family": one_based })
        }
    };
    writeln!(text, "verified exactly {}", r.verified).unwrap();
    let ok = r.verified && c.all();
    let json = json!({
        "n": n,
        "dim": c.rank,
        "checks": c.all(),
        "pairing_identity": r.identity_holds,
        "nilpotents": kind,
        "verified": r.verified,
    });
    Ok(Report::new(text, json).check(ok))
}

fn polys_json(p: &[Polynomial]) -> Vec<String> {
    p.iter().map(ToString::to_string).collect()
}

/// Builds the map, naming the constituents of Sym2 when the target is not one.
fn build_map(rep: &MatrixRep, target: &str) -> Result<(CharacterTable, QuadraticMap)> {
    let t = compute_table_dixon(rep.group())?;
    let wanted = parse_char_id(target, &t)?;
    let sym = t.decompose(&t.sym_square(&rep.character(&t)?)?)?;
    if wanted.iter().zip(&sym).any(|(&w, &s)| w > 0 && s == 0) {
        let present: Vec<String> = sym
            .iter()
            .enumerate()
            .filter(|(_, &m)| m > 0)
            .map(|(j, &m)| format!("chi_{} (degree {}, multiplicity {m})", j + 1, t.degrees()[j]))
            .collect();
        return Err(Error::InvalidInput(format!(
            "target {target} is not in Sym2 of {}; its constituents are {}",
            rep.name(),
            present.join(", ")
        )));
    }
    let map = quad_map_build(rep, &t, &t.combine(&wanted))?;
    Ok((t, map))
}

pub fn quadmap_build(source: &str, target: &str) -> Result<Report> {
    let rep = load_rep(source)?;
    let (_, map) = build_map(&rep, target)?;
    let mut text = format!("quadratic map {} -> {target}\n", rep.name());
    text.push_str(&map.to_string());
    if let Some(a) = &map.projection {
        writeln!(text, "projection onto the target isotypic part of Sym2:").unwrap();
        text.push_str(&a.to_string());
    }
    writeln!(text, "equivariant {}", map.is_equivariant()).unwrap();
    let json = json!({
        "source": rep.name(),
        "target": target,
        "components": polys_json(&map.components),
        "projection": map.projection.as_ref().map(|a| (0..a.rows()).map(|i| a.row(i).iter().map(ToString::to_string).collect::<Vec<_>>()).collect::<Vec<_>>()),
        "equivariant": map.is_equivariant(),
    });
    Ok(Report::new(text, json))
}

pub fn quadmap_check(source: Option<&str>, target: Option<&str>, corpus: &Corpus) -> Result<Report> {
    match (source, target) {
        (Some(s), Some(t)) => {
            let (_, map) = build_map(&load_rep(s)?, t)?;
            let adm = map.admissibility()?;
            let units = adm.bases.iter().filter(|b| b.is_unit()).count();
            let ok = adm.admissible && map.is_equivariant();
            let text = format!(
                "{}\nequivariant {}\ndehomogenized bases equal to {{1}}: {units} of {}\n{}\n",
                map.to_string().trim_end(),
                map.is_equivariant(),
                adm.bases.len(),
                if ok { "PASS: admissible" } else { "FAIL: not admissible" }
            );
            let json = json!({
                "components": polys_json(&map.components),
                "equivariant": map.is_equivariant(),
                "unit_bases": units,
                "dehomogenizations": adm.bases.len(),
                "admissible": adm.admissible,
            });
            Ok(Report::new(text, json).check(ok))
        }
        (None, None) => {
            let r = alpharep::paper::run_criterion(corpus, 10, PaperOptions::default());
            let ok = r.passed();
            let text = format!("{}\n", criterion_line(&r, false));
            Ok(Report::new(text, json!({ "details": r.details, "admissible": ok })).check(ok))
        }
        _ => Err(Error::InvalidInput("--source and --target go together".into())),
    }
}

pub fn congruence(alpha: u128, k: u64, dim: u32) -> Result<Report> {
    let r = congruence_report(alpha, k, dim, "")?;
    let json = json!({
        "alpha": alpha.to_string(),
        "k": k,
        "dim": dim,
        "degree": r.power.to_string(),
        "residue": r.residue.to_string(),
        "informative": r.informative(),
    });
    Ok(Report::new(format!("{r}\n"), json))
}

fn criterion_line(r: &CriterionResult, timings: bool) -> String {
    let word = match r.outcome {
        Outcome::Pass => "PASS",
        Outcome::Fail => "FAIL",
        Outcome::Skipped => "SKIP",
    };
    let mut s = format!("{word} criterion {}: {}", r.number, r.title);
    if r.stretch {
        s.push_str(" [stretch]");
    }
    if timings {
        write!(s, " ({:.2?})", r.elapsed).unwrap();
    }
    for d in &r.details {
        write!(s, "\n    {d}").unwrap();
    }
    s
}

pub fn verify(include_stretch: bool, corpus_dir: Option<&str>, only: &[u8], timings: bool) -> Result<Report> {
    let corpus = match corpus_dir {
        Some(dir) => Corpus::load_dir(std::path::Path::new(dir))?,
        None => Corpus::bundled(),
    };
    let opts = PaperOptions { include_stretch };
    let results: Vec<CriterionResult> = if only.is_empty() {
        verify_paper(&corpus, opts)
    } else {
        only.iter().map(|&n| alpharep::paper::run_criterion(&corpus, n, opts)).collect()
    };
    let mut text = String::new();
    for r in &results {
        writeln!(text, "{}", criterion_line(r, timings)).unwrap();
    }
    let ok = all_required_pass(&results);
    writeln!(text, "{}", if ok { "all required criteria pass" } else { "some required criterion failed" }).unwrap();
    let json = json!({
        "criteria": results.iter().map(|r| json!({
            "number": r.number,
            "title": r.title,
            "outcome": format!("{:?}", r.outcome).to_lowercase(),
            "stretch": r.stretch,
            "details": r.details,
        })).collect::<Vec<_>>(),
        "pass": ok,
    });
    Ok(Report::new(text, json).check(ok))
}
