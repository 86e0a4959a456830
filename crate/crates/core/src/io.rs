//! Text formats: `.poset` files, `.labels` files, decode sidecars and DOT.
//!
//! A `.poset` file starts with the element count, followed by one cover
//! `a b` (0-based, `a ⋖ b`) per line. Lines starting with `#` are comments
//! and `label i <text>` attaches a display label to element `i`.
//!
//! A `.labels` file has one line `a b v` per cover, where `v` is an integer
//! or a comma-separated tuple `v1,v2,...,vm`.

use std::fmt::Write as _;

use crate::error::{PosetError, Result};
use crate::multichain::MultichainPoset;
use crate::poset::{ElementId, Poset};
use crate::shellability::EdgeLabeling;

fn parse_error(line: usize, message: impl Into<String>) -> PosetError {
    PosetError::Parse {
        line,
        message: message.into(),
    }
}

fn meaningful_lines(text: &str) -> impl Iterator<Item = (usize, &str)> {
    text.lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l.trim()))
        .filter(|(_, l)| !l.is_empty() && !l.starts_with('#'))
}

fn parse_index(token: &str, line: usize) -> Result<usize> {
    token
        .parse()
        .map_err(|_| parse_error(line, format!("expected an index, got {token:?}")))
}

/// A parsed `.poset` file together with where each file index was stored.
#[derive(Debug, Clone)]
pub struct ParsedPoset {
    pub poset: Poset,
    pub index_map: Vec<ElementId>,
}

pub fn parse_poset(text: &str) -> Result<ParsedPoset> {
    let mut lines = meaningful_lines(text);
    let (line, first) = lines.next().ok_or_else(|| parse_error(1, "missing element count"))?;
    let n = parse_index(first, line)?;
    let mut edges = Vec::new();
    let mut labels: Vec<Option<String>> = vec![None; n];
    for (line, content) in lines {
        if let Some(rest) = content.strip_prefix("label ") {
            let rest = rest.trim_start();
            let (index, text) = rest.split_once(char::is_whitespace).unwrap_or((rest, ""));
            let index = parse_index(index, line)?;
            if index >= n {
                return Err(parse_error(line, format!("label for unknown element {index}")));
            }
            labels[index] = Some(text.trim().to_string());
            continue;
        }
        let mut parts = content.split_whitespace();
        match (parts.next(), parts.next(), parts.next()) {
            (Some(a), Some(b), None) => {
                edges.push((parse_index(a, line)?, parse_index(b, line)?));
            }
            _ => return Err(parse_error(line, format!("expected \"a b\", got {content:?}"))),
        }
    }
    let (poset, index_map) = Poset::from_covers_reindexed(n, &edges)?;
    let poset = if labels.iter().any(Option::is_some) {
        let mut stored = vec![String::new(); n];
        for (old, label) in labels.into_iter().enumerate() {
            stored[index_map[old]] = label.unwrap_or_else(|| old.to_string());
        }
        poset.with_labels(stored)?
    } else {
        poset
    };
    Ok(ParsedPoset { poset, index_map })
}

pub fn write_poset(p: &Poset) -> String {
    let mut out = format!("{}\n", p.len());
    if let Some(labels) = p.labels() {
        for (i, l) in labels.iter().enumerate() {
            writeln!(out, "label {i} {l}").unwrap();
        }
    }
    for &(a, b) in p.cover_edges() {
        writeln!(out, "{a} {b}").unwrap();
    }
    out
}

/// Parses a labeling whose indices refer to the file indexing of a poset;
/// `index_map` translates them to stored indices.
pub fn parse_labels(text: &str, index_map: &[ElementId]) -> Result<EdgeLabeling> {
    let mut labeling = EdgeLabeling::new();
    let translate = |i: usize, line: usize| {
        index_map
            .get(i)
            .copied()
            .ok_or_else(|| parse_error(line, format!("unknown element {i}")))
    };
    for (line, content) in meaningful_lines(text) {
        let parts: Vec<&str> = content.split_whitespace().collect();
        let [a, b, v] = parts[..] else {
            return Err(parse_error(line, format!("expected \"a b v\", got {content:?}")));
        };
        let a = translate(parse_index(a, line)?, line)?;
        let b = translate(parse_index(b, line)?, line)?;
        let label = v
            .split(',')
            .map(|x| {
                x.parse::<u64>()
                    .map_err(|_| parse_error(line, format!("bad label value {x:?}")))
            })
            .collect::<Result<Vec<_>>>()?;
        labeling.insert(a, b, label);
    }
    Ok(labeling)
}

pub fn format_label(label: &[u64]) -> String {
    label.iter().map(u64::to_string).collect::<Vec<_>>().join(",")
}

pub fn write_labels(labeling: &EdgeLabeling) -> String {
    let mut out = String::new();
    for (&(a, b), label) in labeling.iter() {
        writeln!(out, "{a} {b} {}", format_label(label)).unwrap();
    }
    out
}

/// Index → tuple sidecar for a multichain poset, tuples in base indices.
pub fn write_decode(mp: &MultichainPoset) -> String {
    let mut out = String::new();
    for (i, t) in mp.tuples().iter().enumerate() {
        let parts: Vec<_> = t.iter().map(usize::to_string).collect();
        writeln!(out, "{i} {}", parts.join(",")).unwrap();
    }
    out
}

fn dot_escape(s: &str) -> String {
    s.replace('\\', "\\\\").replace('"', "\\\"")
}

/// Hasse diagram in DOT, drawn bottom to top with one edge per cover.
pub fn to_dot(p: &Poset, labeling: Option<&EdgeLabeling>) -> String {
    let mut out = String::from("digraph poset {\n  rankdir=BT;\n  node [shape=plaintext];\n");
    for a in 0..p.len() {
        writeln!(out, "  {a} [label=\"{}\"];", dot_escape(&p.display_label(a))).unwrap();
    }
    for &(a, b) in p.cover_edges() {
        match labeling.and_then(|l| l.get(a, b)) {
            Some(label) => writeln!(out, "  {a} -> {b} [label=\"{}\"];", format_label(label)).unwrap(),
            None => writeln!(out, "  {a} -> {b};").unwrap(),
        }
    }
    out.push_str("}\n");
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::families::{boolean_lattice, diamond};

    #[test]
    fn parses_comments_and_labels() {
        let text = "# three atoms\n5\nlabel 0 bottom\nlabel 4 top\n0 1\n0 2\n\n0 3\n1 4\n2 4\n3 4\n";
        let parsed = parse_poset(text).unwrap();
        assert_eq!(parsed.poset.len(), 5);
        assert_eq!(parsed.poset.label(0), Some("bottom"));
        assert_eq!(parsed.poset.label(2), Some("2"));
        assert_eq!(parsed.index_map, vec![0, 1, 2, 3, 4]);
    }

    #[test]
    fn bad_input() {
        assert!(matches!(parse_poset(""), Err(PosetError::Parse { .. })));
        assert!(matches!(parse_poset("2\n0 1 2\n"), Err(PosetError::Parse { line: 2, .. })));
        assert!(matches!(parse_poset("2\n0 x\n"), Err(PosetError::Parse { .. })));
        assert_eq!(parse_poset("2\n0 1\n1 0\n").unwrap_err(), PosetError::CycleDetected);
    }

    #[test]
    fn out_of_order_input_is_reindexed() {
        let parsed = parse_poset("3\n2 0\n0 1\n").unwrap();
        let labels = parse_labels("2 0 1\n0 1 2\n", &parsed.index_map).unwrap();
        assert_eq!(labels.get(0, 1), Some(&vec![1]));
        assert_eq!(labels.get(1, 2), Some(&vec![2]));
    }

    #[test]
    fn writes_round_trip() {
        let p = boolean_lattice(3).unwrap();
        let back = parse_poset(&write_poset(&p)).unwrap();
        assert_eq!(back.poset, p);
    }

    #[test]
    fn tuple_labels() {
        let l = parse_labels("0 1 0,3\n", &[0, 1]).unwrap();
        assert_eq!(l.get(0, 1), Some(&vec![0, 3]));
        assert_eq!(write_labels(&l), "0 1 0,3\n");
        assert!(parse_labels("0 1\n", &[0, 1]).is_err());
    }

    #[test]
    fn dot_output() {
        let d = to_dot(&diamond(), None);
        assert!(d.starts_with("digraph poset {"));
        assert!(d.contains("rankdir=BT"));
        assert_eq!(d.matches("->").count(), 6);
        let l = EdgeLabeling::from_values([((0, 1), 7)]);
        assert!(to_dot(&diamond(), Some(&l)).contains("0 -> 1 [label=\"7\"];"));
    }
}
