//! Text format for group definitions:
//!
//! ```text
//! name A5
//! degree 5
//! gen (1 2 3 4 5)
//! gen (1 2 3)
//! ```

use super::{PermGroup, Permutation};
use crate::error::{Error, Result};

pub fn parse_group(text: &str) -> Result<PermGroup> {
    let mut degree: Option<usize> = None;
    let mut name: Option<String> = None;
    let mut gen_texts: Vec<(usize, &str)> = Vec::new();
    for (lineno, raw) in text.lines().enumerate() {
        let line = raw.trim();
        if line.is_empty() || line.starts_with('#') {
            continue;
        }
        let (key, rest) = line.split_once(char::is_whitespace).unwrap_or((line, ""));
        let rest = rest.trim();
        match key {
            "degree" => {
                degree = Some(rest.parse().map_err(|_| Error::parse(lineno + 1, format!("bad degree '{rest}'")))?);
            }
            "name" => name = Some(rest.to_string()),
            "gen" => gen_texts.push((lineno + 1, rest)),
            _ => return Err(Error::parse(lineno + 1, format!("unknown directive '{key}'"))),
        }
    }
    let degree = degree.ok_or_else(|| Error::parse(0, "missing 'degree' line"))?;
    let mut gens = Vec::new();
    for (lineno, t) in gen_texts {
        let g = Permutation::parse(t, degree).map_err(|e| match e {
            Error::Parse { message, .. } => Error::parse(lineno, format!("generator: {message}")),
            other => other,
        })?;
        gens.push(g);
    }
    let g = PermGroup::with_degree(degree, gens)?;
    Ok(match name {
        Some(n) => g.named(n),
        None => g,
    })
}

pub fn format_group(g: &PermGroup) -> String {
    let mut out = String::new();
    if let Some(n) = g.name() {
        out.push_str(&format!("name {n}\n"));
    }
    out.push_str(&format!("degree {}\n", g.degree()));
    for x in g.generators() {
        out.push_str(&format!("gen {x}\n"));
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn round_trip() {
        let g = parse_group("# A5\nname A5\ndegree 5\ngen (1 2 3 4 5)\ngen (1 2 3)\n").unwrap();
        assert_eq!(g.order(), 60);
        assert_eq!(g.name(), Some("A5"));
        let again = parse_group(&format_group(&g)).unwrap();
        assert_eq!(again.generators(), g.generators());
    }

    #[test]
    fn errors_carry_line_numbers() {
        let err = parse_group("degree 3\ngen (1 4)\n").unwrap_err();
        assert!(matches!(err, Error::Parse { position: 2, .. }));
        assert!(parse_group("gen (1 2)\n").is_err());
        assert!(parse_group("degree 3\nfoo\n").is_err());
    }
}
