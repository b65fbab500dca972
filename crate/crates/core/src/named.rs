//! Standard graph families and the `name[:params]` grammar used on the
//! command line.

use crate::error::{Error, Result};
use crate::graph::Graph;

pub fn complete(n: usize) -> Result<Graph> {
    if n == 0 {
        return Err(Error::param("complete graph needs n >= 1"));
    }
    complete_multipartite(&vec![1; n])
}

pub fn empty(n: usize) -> Result<Graph> {
    Graph::empty(n)
}

pub fn cycle(n: usize) -> Result<Graph> {
    if n < 3 {
        return Err(Error::param(format!("cycle needs n >= 3, got {n}")));
    }
    Graph::from_edges(n, (0..n).map(|i| (i, (i + 1) % n)))
}

pub fn path(n: usize) -> Result<Graph> {
    if n < 1 {
        return Err(Error::param("path needs n >= 1"));
    }
    Graph::from_edges(n, (1..n).map(|i| (i - 1, i)))
}

pub fn star(leaves: usize) -> Result<Graph> {
    Graph::from_edges(leaves + 1, (1..=leaves).map(|i| (0, i)))
}

pub fn complete_bipartite(a: usize, b: usize) -> Result<Graph> {
    complete_multipartite(&[a, b])
}

/// Complete multipartite graph with the given part sizes. Parts occupy
/// consecutive vertex ranges in the order given.
pub fn complete_multipartite(part_sizes: &[usize]) -> Result<Graph> {
    if part_sizes.is_empty() {
        return Err(Error::param("complete multipartite graph needs at least one part"));
    }
    if part_sizes.contains(&0) {
        return Err(Error::param("part sizes must be positive"));
    }
    let n: usize = part_sizes.iter().sum();
    let mut part = Vec::with_capacity(n);
    for (i, &s) in part_sizes.iter().enumerate() {
        part.extend(std::iter::repeat_n(i, s));
    }
    let edges = (0..n).flat_map(|u| ((u + 1)..n).map(move |v| (u, v)));
    let part = &part;
    Graph::from_edges(n, edges.filter(|&(u, v)| part[u] != part[v]))
}

/// `parts` equal classes of size `size` (the Turán-extremal regular case).
pub fn regular_multipartite(parts: usize, size: usize) -> Result<Graph> {
    complete_multipartite(&vec![size; parts])
}

pub fn petersen() -> Result<Graph> {
    let outer = (0..5).map(|i| (i, (i + 1) % 5));
    let spokes = (0..5).map(|i| (i, i + 5));
    let inner = (0..5).map(|i| (5 + i, 5 + (i + 2) % 5));
    Graph::from_edges(10, outer.chain(spokes).chain(inner))
}

/// K4 minus one edge.
pub fn diamond() -> Result<Graph> {
    Graph::from_edges(4, [(0, 1), (0, 2), (1, 2), (1, 3), (2, 3)])
}

/// Two triangles sharing vertex 0.
pub fn bowtie() -> Result<Graph> {
    Graph::from_edges(5, [(0, 1), (0, 2), (1, 2), (0, 3), (0, 4), (3, 4)])
}

pub fn octahedron() -> Result<Graph> {
    complete_multipartite(&[2, 2, 2])
}

fn parse_list(spec: &str, params: Option<&str>) -> Result<Vec<usize>> {
    let params = params.ok_or_else(|| Error::param(format!("`{spec}` needs parameters")))?;
    params
        .split(',')
        .map(|p| {
            p.trim()
                .parse::<usize>()
                .map_err(|_| Error::param(format!("bad parameter `{p}` in `{spec}`")))
        })
        .collect()
}

fn one(spec: &str, params: Option<&str>) -> Result<usize> {
    match parse_list(spec, params)?.as_slice() {
        [x] => Ok(*x),
        _ => Err(Error::param(format!("`{spec}` takes exactly one parameter"))),
    }
}

fn none(spec: &str, params: Option<&str>) -> Result<()> {
    match params {
        None => Ok(()),
        Some(_) => Err(Error::param(format!("`{spec}` takes no parameters"))),
    }
}

/// Parses `name[:params]`, with `+` joining disjoint unions, e.g.
/// `complete:4`, `cmp:2,2,2`, `bipartite:2,2+bipartite:3,3`.
pub fn parse(spec: &str) -> Result<Graph> {
    let mut parts = spec.split('+');
    let first = parse_single(parts.next().unwrap_or(""))?;
    parts.try_fold(first, |acc, s| acc.disjoint_union(&parse_single(s)?))
}

fn parse_single(spec: &str) -> Result<Graph> {
    let spec = spec.trim();
    let (name, params) = match spec.split_once(':') {
        Some((name, p)) => (name, Some(p)),
        None => (spec, None),
    };
    match name.to_ascii_lowercase().as_str() {
        "complete" | "k" => complete(one(spec, params)?),
        "empty" => empty(one(spec, params)?),
        "cycle" | "c" => cycle(one(spec, params)?),
        "path" | "p" => path(one(spec, params)?),
        "star" => star(one(spec, params)?),
        "bipartite" | "kab" => match parse_list(spec, params)?.as_slice() {
            [a, b] => complete_bipartite(*a, *b),
            _ => Err(Error::param("bipartite takes two parameters a,b")),
        },
        "cmp" | "multipartite" => complete_multipartite(&parse_list(spec, params)?),
        "turan" => match parse_list(spec, params)?.as_slice() {
            [parts, size] => regular_multipartite(*parts, *size),
            _ => Err(Error::param("turan takes parts,size")),
        },
        "petersen" => none(spec, params).and_then(|_| petersen()),
        "diamond" => none(spec, params).and_then(|_| diamond()),
        "bowtie" => none(spec, params).and_then(|_| bowtie()),
        "octahedron" => none(spec, params).and_then(|_| octahedron()),
        _ => Err(Error::param(format!(
            "unknown graph `{name}`; expected one of complete, empty, cycle, path, star, \
             bipartite, cmp, turan, petersen, diamond, bowtie, octahedron"
        ))),
    }
}
