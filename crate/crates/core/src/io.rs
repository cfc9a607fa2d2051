//! Text formats for groups, graphs, pairs and bound expressions.
//!
//! Group file: `degree <n>`, then one permutation per line as `n` images.
//! Graph file: `graph <n> <m> <directed:0|1>`, then `m` lines `u v`.
//! Pair file: `pair`, then `graph <path>`, `group <path>` and `d <int>` in any
//! order, paths relative to the pair file.
//! In all formats `#` starts a comment and blank lines are ignored.

use std::fmt::Write as _;
use std::fs;
use std::path::{Path, PathBuf};

use crate::bounds::{expr, BoundExpr};
use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::group::PermGroup;
use crate::pair::{validate_pair, VTPair};
use crate::perm::Permutation;

fn parse_err(line: usize, msg: impl Into<String>) -> Error {
    Error::Parse { line, msg: msg.into() }
}

/// Non-empty lines with comments stripped, paired with 1-based line numbers.
fn content_lines(src: &str) -> impl Iterator<Item = (usize, &str)> {
    src.lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l.split('#').next().unwrap_or("").trim()))
        .filter(|(_, l)| !l.is_empty())
}

fn number<T: std::str::FromStr>(line: usize, tok: &str, what: &str) -> Result<T> {
    tok.parse()
        .map_err(|_| parse_err(line, format!("expected {what}, found {tok:?}")))
}

fn read(path: &Path) -> Result<String> {
    fs::read_to_string(path).map_err(|e| Error::Io(format!("{}: {e}", path.display())))
}

pub fn parse_group(src: &str) -> Result<PermGroup> {
    let mut lines = content_lines(src);
    let (ln, header) = lines.next().ok_or_else(|| parse_err(1, "missing `degree <n>` header"))?;
    let toks: Vec<&str> = header.split_whitespace().collect();
    if toks.len() != 2 || toks[0] != "degree" {
        return Err(parse_err(ln, "expected `degree <n>`"));
    }
    let n: usize = number(ln, toks[1], "degree")?;
    let mut gens = Vec::new();
    for (ln, l) in lines {
        let images = l
            .split_whitespace()
            .map(|t| number::<u32>(ln, t, "point"))
            .collect::<Result<Vec<u32>>>()?;
        if images.len() != n {
            return Err(parse_err(ln, format!("expected {n} images, found {}", images.len())));
        }
        gens.push(Permutation::from_images(images).map_err(|e| parse_err(ln, e.to_string()))?);
    }
    PermGroup::new(n, gens)
}

pub fn write_group(g: &PermGroup) -> String {
    let mut out = format!("degree {}\n", g.degree());
    for s in g.generators() {
        let line: Vec<String> = s.images().iter().map(u32::to_string).collect();
        out.push_str(&line.join(" "));
        out.push('\n');
    }
    out
}

pub fn parse_graph(src: &str) -> Result<Graph> {
    let mut lines = content_lines(src);
    let (ln, header) = lines
        .next()
        .ok_or_else(|| parse_err(1, "missing `graph <n> <m> <directed>` header"))?;
    let toks: Vec<&str> = header.split_whitespace().collect();
    if toks.len() != 4 || toks[0] != "graph" {
        return Err(parse_err(ln, "expected `graph <n> <m> <directed>`"));
    }
    let n: usize = number(ln, toks[1], "vertex count")?;
    let m: usize = number(ln, toks[2], "edge count")?;
    let directed = match toks[3] {
        "0" => false,
        "1" => true,
        t => return Err(parse_err(ln, format!("directed flag must be 0 or 1, found {t:?}"))),
    };
    let mut edges = Vec::with_capacity(m);
    let mut last = ln;
    for (ln, l) in lines {
        last = ln;
        let toks: Vec<&str> = l.split_whitespace().collect();
        if toks.len() != 2 {
            return Err(parse_err(ln, "expected `u v`"));
        }
        let (u, v): (u32, u32) = (number(ln, toks[0], "vertex")?, number(ln, toks[1], "vertex")?);
        if u as usize >= n || v as usize >= n {
            return Err(parse_err(ln, format!("vertex out of range 0..{n}")));
        }
        edges.push((u, v));
    }
    if edges.len() != m {
        return Err(parse_err(last, format!("header declares {m} edges, found {}", edges.len())));
    }
    Graph::from_edges(n, &edges, directed)
}

pub fn write_graph(g: &Graph) -> String {
    let edges = g.edges();
    let mut out = format!("graph {} {} {}\n", g.order(), edges.len(), u8::from(g.is_directed()));
    for (u, v) in edges {
        let _ = writeln!(out, "{u} {v}");
    }
    out
}

/// Contents of a pair file, with paths resolved against its directory.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PairFile {
    pub graph: PathBuf,
    pub group: PathBuf,
    pub d: usize,
}

pub fn parse_pair_file(src: &str, base: &Path) -> Result<PairFile> {
    let mut lines = content_lines(src);
    match lines.next() {
        Some((_, "pair")) => {}
        Some((ln, _)) => return Err(parse_err(ln, "expected `pair` header")),
        None => return Err(parse_err(1, "empty pair file")),
    }
    let (mut graph, mut group, mut d) = (None, None, None);
    for (ln, l) in lines {
        let (key, value) = l
            .split_once(char::is_whitespace)
            .map(|(k, v)| (k, v.trim()))
            .ok_or_else(|| parse_err(ln, "expected `<key> <value>`"))?;
        match key {
            "graph" => graph = Some(base.join(value)),
            "group" => group = Some(base.join(value)),
            "d" => d = Some(number(ln, value, "valency bound")?),
            _ => return Err(parse_err(ln, format!("unknown key {key:?}"))),
        }
    }
    let missing = |k: &str| parse_err(1, format!("pair file lacks `{k}`"));
    Ok(PairFile {
        graph: graph.ok_or_else(|| missing("graph"))?,
        group: group.ok_or_else(|| missing("group"))?,
        d: d.ok_or_else(|| missing("d"))?,
    })
}

/// Parse errors are reported with the offending file's path.
fn in_file<T>(path: &Path, r: Result<T>) -> Result<T> {
    r.map_err(|e| match e {
        Error::Parse { line, msg } => Error::Parse {
            line,
            msg: format!("{}: {msg}", path.display()),
        },
        other => other,
    })
}

pub fn read_group(path: &Path) -> Result<PermGroup> {
    in_file(path, parse_group(&read(path)?))
}

pub fn read_graph(path: &Path) -> Result<Graph> {
    in_file(path, parse_graph(&read(path)?))
}

pub fn read_bound(path: &Path) -> Result<BoundExpr> {
    in_file(path, expr::parse(&read(path)?))
}

/// Reads and validates a pair.
pub fn read_pair(path: &Path) -> Result<VTPair> {
    let base = path.parent().unwrap_or(Path::new("."));
    let pf = in_file(path, parse_pair_file(&read(path)?, base))?;
    let graph = read_graph(&pf.graph)?;
    let group = read_group(&pf.group)?;
    validate_pair(graph, group, pf.d).map_err(Error::from)
}

/// Writes `<stem>.graph`, `<stem>.group` and `<stem>.pair` into `dir` and
/// returns the pair file path.
pub fn write_pair(dir: &Path, stem: &str, pair: &VTPair) -> Result<PathBuf> {
    fs::create_dir_all(dir)?;
    fs::write(dir.join(format!("{stem}.graph")), write_graph(&pair.graph))?;
    fs::write(dir.join(format!("{stem}.group")), write_group(&pair.group))?;
    let path = dir.join(format!("{stem}.pair"));
    fs::write(&path, format!("pair\ngraph {stem}.graph\ngroup {stem}.group\nd {}\n", pair.d))?;
    Ok(path)
}

pub fn write_named_group(dir: &Path, stem: &str, g: &PermGroup) -> Result<PathBuf> {
    fs::create_dir_all(dir)?;
    let path = dir.join(format!("{stem}.group"));
    fs::write(&path, write_group(g))?;
    Ok(path)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalog;
    use num_bigint::BigUint;

    #[test]
    fn group_round_trip() {
        let g = crate::group::ctor::symmetric(5);
        let h = parse_group(&write_group(&g)).unwrap();
        assert!(g.same_group(&h));
    }

    #[test]
    fn comments_and_line_numbers() {
        let src = "# cyclic\ndegree 3\n1 2 0  # rotation\n\n0 0 1\n";
        match parse_group(src) {
            Err(Error::Parse { line, .. }) => assert_eq!(line, 5),
            other => panic!("expected a parse error, got {other:?}"),
        }
        let ok = parse_group("degree 3\n1 2 0 # rotation\n").unwrap();
        assert_eq!(ok.order(), BigUint::from(3u32));
    }

    #[test]
    fn graph_errors() {
        assert!(matches!(parse_graph("graph 3 2 0\n0 1\n"), Err(Error::Parse { line: 2, .. })));
        assert!(matches!(parse_graph("graph 3 1 0\n0 7\n"), Err(Error::Parse { line: 2, .. })));
        assert!(matches!(parse_graph("graph 3 1 2\n0 1\n"), Err(Error::Parse { line: 1, .. })));
        assert!(matches!(parse_graph("edges\n"), Err(Error::Parse { line: 1, .. })));
    }

    #[test]
    fn pair_round_trip() {
        let dir = tempfile::tempdir().unwrap();
        let b = catalog::petersen_sym5().unwrap();
        let path = write_pair(dir.path(), "petersen", &b.pair).unwrap();
        let back = read_pair(&path).unwrap();
        assert_eq!(back.graph.edges(), b.pair.graph.edges());
        assert!(back.group.same_group(&b.pair.group));
        assert_eq!(back.d, 3);
    }

    #[test]
    fn pair_file_keys() {
        let pf = parse_pair_file("pair\nd 4\ngroup g.group\ngraph x.graph\n", Path::new("/tmp")).unwrap();
        assert_eq!(pf.graph, Path::new("/tmp/x.graph"));
        assert_eq!(pf.d, 4);
        assert!(matches!(parse_pair_file("pair\ngraph a\n", Path::new(".")), Err(Error::Parse { .. })));
        assert!(matches!(parse_pair_file("pair\nsize 3\n", Path::new(".")), Err(Error::Parse { line: 2, .. })));
    }
}
