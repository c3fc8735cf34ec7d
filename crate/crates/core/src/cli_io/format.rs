//! Text formats.
//!
//! Instance files (`tgf 1`):
//!
//! ```text
//! tgf 1
//! n 4
//! T 3
//! gen rotating-star n=4 horizon=3 seed 0
//! snapshot 1
//! 0 1
//! end
//! ```
//!
//! The `gen` line is optional. A file with a `gen` line and no snapshot
//! blocks is regenerated from the spec, and then `n` and `T` may be
//! omitted. Snapshots without a block are edgeless. Blank lines and lines
//! starting with `#` are ignored.
//!
//! Walk files: `walk 1`, `start <step>`, then one vertex id per line.

use crate::generators::{Family, GenError, GenSpec};
use crate::tempgraph::{GraphError, TemporalGraph, TemporalWalk};
use std::fmt::Write as _;
use std::sync::Arc;
use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum FormatError {
    #[error("line {line}: {msg}")]
    Parse { line: usize, msg: String },
    #[error("unsupported format version {found:?}")]
    VersionMismatch { found: String },
    #[error(transparent)]
    Graph(#[from] GraphError),
    #[error(transparent)]
    Gen(#[from] GenError),
}

fn parse_err(line: usize, msg: impl Into<String>) -> FormatError {
    FormatError::Parse {
        line,
        msg: msg.into(),
    }
}

/// Non-blank, non-comment lines with 1-based line numbers.
fn content_lines(text: &str) -> impl Iterator<Item = (usize, &str)> {
    text.lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l.trim()))
        .filter(|(_, l)| !l.is_empty() && !l.starts_with('#'))
}

fn number<T: std::str::FromStr>(line: usize, what: &str, s: &str) -> Result<T, FormatError> {
    s.parse()
        .map_err(|_| parse_err(line, format!("{what}: expected a number, got {s:?}")))
}

fn check_version(
    first: Option<(usize, &str)>,
    tag: &str,
) -> Result<(), FormatError> {
    let (line, text) = first.ok_or_else(|| parse_err(1, format!("empty file, expected `{tag} 1`")))?;
    match text.split_whitespace().collect::<Vec<_>>().as_slice() {
        [t, "1"] if *t == tag => Ok(()),
        [t, v] if *t == tag => Err(FormatError::VersionMismatch {
            found: v.to_string(),
        }),
        _ => Err(parse_err(line, format!("expected `{tag} 1`"))),
    }
}

/// Splits `<spec words> [seed <s>]`.
fn parse_gen(line: usize, rest: &str) -> Result<GenSpec, FormatError> {
    let words: Vec<&str> = rest.split_whitespace().collect();
    let (spec_words, seed) = match words.as_slice() {
        [head @ .., "seed", s] => (head, number(line, "seed", s)?),
        all => (all, 0),
    };
    let family: Family = spec_words
        .join(" ")
        .parse()
        .map_err(|e: GenError| parse_err(line, e.to_string()))?;
    Ok(GenSpec::new(family, seed)?)
}

pub fn parse_instance(text: &str) -> Result<TemporalGraph, FormatError> {
    let mut lines = content_lines(text).peekable();
    check_version(lines.next(), "tgf")?;

    let mut n: Option<usize> = None;
    let mut horizon: Option<usize> = None;
    let mut gen: Option<GenSpec> = None;
    while let Some(&(line, text)) = lines.peek() {
        let (key, rest) = text.split_once(char::is_whitespace).unwrap_or((text, ""));
        let rest = rest.trim();
        match key {
            "n" if n.is_none() => n = Some(number(line, "n", rest)?),
            "T" if horizon.is_none() => horizon = Some(number(line, "T", rest)?),
            "gen" if gen.is_none() => gen = Some(parse_gen(line, rest)?),
            "n" | "T" | "gen" => return Err(parse_err(line, format!("duplicate `{key}` line"))),
            "snapshot" => break,
            _ => return Err(parse_err(line, format!("unexpected header line {text:?}"))),
        }
        lines.next();
    }
    if let Some(spec) = &gen {
        let f = spec.family();
        if n.is_some_and(|n| n != f.n()) || horizon.is_some_and(|h| h != f.horizon()) {
            return Err(parse_err(
                1,
                format!("header n/T disagree with generator spec `{f}`"),
            ));
        }
    }
    let n = n.or(gen.map(|s| s.family().n()));
    let horizon = horizon.or(gen.map(|s| s.family().horizon()));
    let (Some(n), Some(horizon)) = (n, horizon) else {
        return Err(parse_err(1, "missing `n` or `T` line"));
    };

    let mut edges = Vec::new();
    let mut seen = vec![false; horizon];
    let mut has_body = false;
    while let Some((line, text)) = lines.next() {
        let t: usize = match text.split_whitespace().collect::<Vec<_>>().as_slice() {
            ["snapshot", t] => number(line, "snapshot", t)?,
            _ => return Err(parse_err(line, format!("expected `snapshot <t>`, got {text:?}"))),
        };
        if t == 0 || t > horizon {
            return Err(parse_err(line, format!("snapshot {t} outside [1, {horizon}]")));
        }
        if std::mem::replace(&mut seen[t - 1], true) {
            return Err(parse_err(line, format!("snapshot {t} appears twice")));
        }
        has_body = true;
        let opened = line;
        loop {
            let Some((line, text)) = lines.next() else {
                return Err(parse_err(opened, format!("snapshot {t} is missing `end`")));
            };
            if text == "end" {
                break;
            }
            match text.split_whitespace().collect::<Vec<_>>().as_slice() {
                [u, v] => edges.push((t, number(line, "vertex", u)?, number(line, "vertex", v)?)),
                _ => return Err(parse_err(line, format!("expected `<u> <v>`, got {text:?}"))),
            }
        }
    }

    match gen {
        Some(spec) if !has_body => Ok(spec.graph()),
        Some(spec) => {
            let g = TemporalGraph::from_timed_edges(n, horizon, edges)?;
            if g != spec.materialize() {
                log::warn!(
                    "snapshot blocks differ from generator spec `{}`; using the blocks",
                    spec.family()
                );
            }
            Ok(g.with_origin(Arc::new(spec)))
        }
        None => Ok(TemporalGraph::from_timed_edges(n, horizon, edges)?),
    }
}

/// Header plus one block per snapshot.
pub fn write_instance(g: &TemporalGraph) -> String {
    let mut out = write_header(g);
    for t in 1..=g.horizon() {
        let _ = writeln!(out, "snapshot {t}");
        for &(u, v) in g.snapshot(t).edges() {
            let _ = writeln!(out, "{u} {v}");
        }
        out.push_str("end\n");
    }
    out
}

/// Header only; `None` unless the graph came from a generator.
pub fn write_instance_spec_only(g: &TemporalGraph) -> Option<String> {
    g.origin()?;
    Some(write_header(g))
}

fn write_header(g: &TemporalGraph) -> String {
    let mut out = format!("tgf 1\nn {}\nT {}\n", g.n(), g.horizon());
    if let Some(src) = g.origin() {
        let _ = writeln!(out, "gen {} seed {}", src.describe(), src.seed().unwrap_or(0));
    }
    out
}

pub fn parse_walk(text: &str) -> Result<TemporalWalk, FormatError> {
    let mut lines = content_lines(text);
    check_version(lines.next(), "walk")?;
    let start = match lines.next() {
        Some((line, text)) => match text.split_whitespace().collect::<Vec<_>>().as_slice() {
            ["start", s] => {
                let s: usize = number(line, "start", s)?;
                if s == 0 {
                    return Err(parse_err(line, "start step must be at least 1"));
                }
                s
            }
            _ => return Err(parse_err(line, "expected `start <step>`")),
        },
        None => return Err(parse_err(1, "missing `start` line")),
    };
    let vertices = lines
        .map(|(line, text)| number(line, "vertex", text))
        .collect::<Result<Vec<usize>, _>>()?;
    if vertices.is_empty() {
        return Err(parse_err(text.lines().count(), "walk has no vertices"));
    }
    Ok(TemporalWalk::new(start, vertices))
}

pub fn write_walk(w: &TemporalWalk) -> String {
    let mut out = format!("walk 1\nstart {}\n", w.start());
    for v in w.vertices() {
        let _ = writeln!(out, "{v}");
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ex1() -> TemporalGraph {
        TemporalGraph::build(
            4,
            3,
            vec![
                vec![(0, 1), (1, 2), (2, 3)],
                vec![(0, 1), (0, 3), (2, 3)],
                vec![(0, 2), (1, 2), (2, 3)],
            ],
        )
        .unwrap()
    }

    #[test]
    fn ex1_round_trip() {
        let g = ex1();
        let text = write_instance(&g);
        assert_eq!(parse_instance(&text).unwrap(), g);
        assert_eq!(write_instance(&parse_instance(&text).unwrap()), text);
    }

    #[test]
    fn minimal_file() {
        let g = parse_instance("tgf 1\nn 2\nT 1\nsnapshot 1\n0 1\nend\n").unwrap();
        assert_eq!(g, TemporalGraph::build(2, 1, vec![vec![(0, 1)]]).unwrap());
    }

    #[test]
    fn spec_only_regenerates() {
        let g = parse_instance("tgf 1\ngen grid-leaves rows=5 cols=3 deg=8\n").unwrap();
        assert_eq!(g.n(), 27);
        let (direct, _) = crate::generators::gen_grid_leaves(crate::generators::GridLeavesSpec {
            rows: 5,
            cols: 3,
            deg: 8,
        })
        .unwrap();
        assert_eq!(g, direct);
        let header = write_instance_spec_only(&g).unwrap();
        assert_eq!(parse_instance(&header).unwrap(), direct);
        assert!(write_instance_spec_only(&ex1()).is_none());
    }

    #[test]
    fn body_wins_over_spec() {
        let text = "tgf 1\ngen rotating-star n=3 horizon=2 seed 0\nsnapshot 1\n0 1\n1 2\nend\n";
        let g = parse_instance(text).unwrap();
        assert_eq!(g.snapshot(1).edges(), &[(0, 1), (1, 2)]);
        assert_eq!(g.snapshot(2).edge_count(), 0);
        assert_eq!(parse_instance(&write_instance(&g)).unwrap(), g);
    }

    #[test]
    fn errors_carry_line_numbers() {
        assert_eq!(
            parse_instance("tgf 2\nn 2\nT 1\n"),
            Err(FormatError::VersionMismatch { found: "2".into() })
        );
        match parse_instance("tgf 1\nn 2\nT 1\nsnapshot 1\n0 x\nend\n") {
            Err(FormatError::Parse { line: 5, .. }) => {}
            other => panic!("unexpected {other:?}"),
        }
        assert!(matches!(
            parse_instance("tgf 1\nn 2\nT 1\nsnapshot 2\nend\n"),
            Err(FormatError::Parse { line: 4, .. })
        ));
        assert!(matches!(
            parse_instance("tgf 1\nn 2\nT 1\nsnapshot 1\n0 0\nend\n"),
            Err(FormatError::Graph(GraphError::SelfLoop { .. }))
        ));
        assert!(parse_instance("tgf 1\nn 2\n").is_err());
        assert!(parse_instance("tgf 1\nn 2\nT 1\nsnapshot 1\n0 1\n").is_err());
        assert!(parse_instance("tgf 1\nn 5\ngen rotating-star n=4 horizon=3\n").is_err());
    }

    #[test]
    fn walk_round_trip() {
        let w = TemporalWalk::new(3, vec![0, 0, 2, 1]);
        let text = write_walk(&w);
        assert_eq!(text, "walk 1\nstart 3\n0\n0\n2\n1\n");
        assert_eq!(parse_walk(&text).unwrap(), w);
        assert!(parse_walk("walk 1\nstart 1\n").is_err());
        assert!(parse_walk("walk 1\nstart 0\n1\n").is_err());
        assert!(matches!(
            parse_walk("walk 7\nstart 1\n0\n"),
            Err(FormatError::VersionMismatch { .. })
        ));
    }
}
