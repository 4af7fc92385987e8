//! Text (`.hg`) and JSON encodings.
//!
//! ```text
//! # optional comments
//! r=3 n=5
//! 1 2 3
//! 3 4 5
//! ```

use std::fmt::Write as _;
use std::path::Path;

use super::Hypergraph;
use crate::error::{Error, Result};

fn parse_error(line: usize, column: usize, message: impl Into<String>) -> Error {
    Error::Parse {
        line,
        column,
        message: message.into(),
    }
}

/// Whitespace-separated tokens with 1-based columns.
fn tokens(line: &str) -> impl Iterator<Item = (usize, &str)> {
    let mut out = Vec::new();
    let mut start = None;
    for (i, c) in line.char_indices() {
        match (c.is_whitespace(), start) {
            (true, Some(s)) => {
                out.push((s + 1, &line[s..i]));
                start = None;
            }
            (false, None) => start = Some(i),
            _ => {}
        }
    }
    if let Some(s) = start {
        out.push((s + 1, &line[s..]));
    }
    out.into_iter()
}

fn header_field(line_no: usize, col: usize, tok: &str, key: &str) -> Result<usize> {
    let value = tok
        .strip_prefix(key)
        .and_then(|t| t.strip_prefix('='))
        .ok_or_else(|| {
            parse_error(
                line_no,
                col,
                format!("expected `{key}=<int>`, found `{tok}`"),
            )
        })?;
    value.parse().map_err(|_| {
        parse_error(
            line_no,
            col + key.len() + 1,
            format!("`{value}` is not a nonnegative integer"),
        )
    })
}

/// Parses the `.hg` text format.
pub fn parse_hg(text: &str) -> Result<Hypergraph> {
    let mut header: Option<(usize, usize)> = None;
    let mut edges: Vec<Vec<u32>> = Vec::new();
    let mut last_line = 0;
    for (idx, raw) in text.lines().enumerate() {
        let line_no = idx + 1;
        last_line = line_no;
        let content = raw.trim_start();
        if content.is_empty() || content.starts_with('#') {
            continue;
        }
        let toks: Vec<(usize, &str)> = tokens(raw).collect();
        let Some((r, n)) = header else {
            if toks.len() != 2 {
                return Err(parse_error(
                    line_no,
                    toks[0].0,
                    "header must be `r=<int> n=<int>`",
                ));
            }
            let r = header_field(line_no, toks[0].0, toks[0].1, "r")?;
            let n = header_field(line_no, toks[1].0, toks[1].1, "n")?;
            if r == 0 {
                return Err(parse_error(
                    line_no,
                    toks[0].0,
                    "uniformity must be at least 1",
                ));
            }
            header = Some((r, n));
            continue;
        };
        if toks.len() != r {
            let col = toks.get(r).map_or(toks[0].0, |t| t.0);
            return Err(parse_error(
                line_no,
                col,
                format!("edge has {} vertices, expected {r}", toks.len()),
            ));
        }
        let mut edge = Vec::with_capacity(r);
        for (col, tok) in toks {
            let v: u32 = tok
                .parse()
                .map_err(|_| parse_error(line_no, col, format!("`{tok}` is not a vertex id")))?;
            if v == 0 || v as usize > n {
                return Err(parse_error(
                    line_no,
                    col,
                    format!("vertex {v} is outside 1..={n}"),
                ));
            }
            if edge.contains(&v) {
                return Err(parse_error(
                    line_no,
                    col,
                    format!("vertex {v} repeated in edge"),
                ));
            }
            edge.push(v);
        }
        edges.push(edge);
    }
    let (r, n) = header
        .ok_or_else(|| parse_error(last_line.max(1), 1, "missing `r=<int> n=<int>` header"))?;
    Hypergraph::new(r, n, edges)
}

/// Canonical `.hg` text.
pub fn to_hg(g: &Hypergraph) -> String {
    let mut s = format!("r={} n={}\n", g.r(), g.n());
    for e in g.edges() {
        let parts: Vec<String> = e.vertices().iter().map(u32::to_string).collect();
        let _ = writeln!(s, "{}", parts.join(" "));
    }
    s
}

pub fn parse_json(text: &str) -> Result<Hypergraph> {
    serde_json::from_str(text).map_err(|e| parse_error(e.line(), e.column(), e.to_string()))
}

pub fn to_json(g: &Hypergraph) -> String {
    serde_json::to_string(g).expect("hypergraph serializes")
}

/// JSON when the first non-blank character is `{`, `.hg` otherwise.
pub fn parse_auto(text: &str) -> Result<Hypergraph> {
    if text.trim_start().starts_with('{') {
        parse_json(text)
    } else {
        parse_hg(text)
    }
}

pub fn read_file(path: &Path) -> Result<Hypergraph> {
    parse_auto(&std::fs::read_to_string(path)?)
}

/// Writes JSON for a `.json` extension, `.hg` text otherwise.
pub fn write_file(path: &Path, g: &Hypergraph) -> Result<()> {
    let json = path
        .extension()
        .is_some_and(|e| e.eq_ignore_ascii_case("json"));
    let text = if json { to_json(g) + "\n" } else { to_hg(g) };
    std::fs::write(path, text)?;
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn loc(e: Error) -> (usize, usize) {
        match e {
            Error::Parse { line, column, .. } => (line, column),
            other => panic!("unexpected {other}"),
        }
    }

    #[test]
    fn parses_comments_and_edges() {
        let g = parse_hg("# two edges\nr=3 n=5\n3 2 1\n\n3 4 5\n1 2 3\n").unwrap();
        assert_eq!(g, Hypergraph::new(3, 5, [[1, 2, 3], [3, 4, 5]]).unwrap());
        assert_eq!(to_hg(&g), "r=3 n=5\n1 2 3\n3 4 5\n");
    }

    #[test]
    fn empty_edge_set() {
        let g = parse_hg("r=3 n=4\n").unwrap();
        assert_eq!((g.n(), g.size()), (4, 0));
    }

    #[test]
    fn error_locations() {
        assert_eq!(loc(parse_hg("r=3 m=4\n").unwrap_err()), (1, 5));
        assert_eq!(loc(parse_hg("r=x n=4\n").unwrap_err()), (1, 3));
        assert_eq!(loc(parse_hg("# c\nr=3 n=4\n1 2 9\n").unwrap_err()), (3, 5));
        assert_eq!(loc(parse_hg("r=3 n=4\n1  2\n").unwrap_err()), (2, 1));
        assert_eq!(loc(parse_hg("r=3 n=4\n1 2 3 4\n").unwrap_err()), (2, 7));
        assert_eq!(loc(parse_hg("r=3 n=4\n1 2 2\n").unwrap_err()), (2, 5));
        assert_eq!(loc(parse_hg("r=3 n=4\n1 a 2\n").unwrap_err()), (2, 3));
        assert_eq!(loc(parse_hg("# only a comment\n").unwrap_err()), (1, 1));
        assert_eq!(loc(parse_json("{\"r\":3,").unwrap_err()).0, 1);
    }

    #[test]
    fn auto_detects_json() {
        let g = parse_auto(" {\"r\":3,\"n\":4,\"edges\":[[2,3,4]]}").unwrap();
        assert_eq!(g, parse_hg("r=3 n=4\n2 3 4").unwrap());
        assert_eq!(parse_json(&to_json(&g)).unwrap(), g);
    }

    #[test]
    fn file_round_trip() {
        let dir = tempfile::tempdir().unwrap();
        let g = Hypergraph::new(3, 6, [[1, 2, 3], [4, 5, 6]]).unwrap();
        for name in ["g.hg", "g.json"] {
            let p = dir.path().join(name);
            write_file(&p, &g).unwrap();
            assert_eq!(read_file(&p).unwrap(), g);
        }
    }
}
