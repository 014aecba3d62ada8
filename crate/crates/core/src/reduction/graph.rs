use std::fmt::Write as _;
use std::io::BufRead;

use crate::error::{Error, Result};
use crate::optimizer::{all_orderings, check_budget};
use crate::ordering::AlphabetOrdering;

/// Largest vertex count for which [`min_fas_bruteforce`] enumerates orderings by default.
pub const DEFAULT_MAX_FAS_VERTICES: usize = 8;

/// A directed multigraph on `[0, num_vertices)`. Parallel arcs are allowed,
/// self-loops are not.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct DiGraph {
    num_vertices: u32,
    arcs: Vec<(u32, u32)>,
}

impl DiGraph {
    pub fn new(num_vertices: u32, arcs: Vec<(u32, u32)>) -> Result<Self> {
        for &(u, v) in &arcs {
            if u >= num_vertices || v >= num_vertices {
                return Err(Error::InvalidGraph(format!(
                    "arc ({u},{v}) has an endpoint outside [0, {num_vertices})"
                )));
            }
            if u == v {
                return Err(Error::InvalidGraph(format!("self-loop at vertex {u}")));
            }
        }
        Ok(Self { num_vertices, arcs })
    }

    pub fn num_vertices(&self) -> u32 {
        self.num_vertices
    }

    pub fn arcs(&self) -> &[(u32, u32)] {
        &self.arcs
    }

    pub fn num_arcs(&self) -> usize {
        self.arcs.len()
    }

    pub fn out_degree(&self, v: u32) -> usize {
        self.arcs.iter().filter(|a| a.0 == v).count()
    }

    pub fn in_degree(&self, v: u32) -> usize {
        self.arcs.iter().filter(|a| a.1 == v).count()
    }

    /// Depth-first cycle check restricted to the arcs with `keep[i] == true`.
    pub fn is_acyclic_with(&self, keep: impl Fn(usize) -> bool) -> bool {
        let n = self.num_vertices as usize;
        let mut adj = vec![Vec::new(); n];
        for (i, &(u, v)) in self.arcs.iter().enumerate() {
            if keep(i) {
                adj[u as usize].push(v as usize);
            }
        }
        // 0 = unvisited, 1 = on stack, 2 = done
        let mut state = vec![0u8; n];
        for root in 0..n {
            if state[root] != 0 {
                continue;
            }
            let mut stack = vec![(root, 0usize)];
            state[root] = 1;
            while let Some((v, next)) = stack.pop() {
                if let Some(&u) = adj[v].get(next) {
                    stack.push((v, next + 1));
                    match state[u] {
                        0 => {
                            state[u] = 1;
                            stack.push((u, 0));
                        }
                        1 => return false,
                        _ => {}
                    }
                } else {
                    state[v] = 2;
                }
            }
        }
        true
    }

    pub fn is_acyclic(&self) -> bool {
        self.is_acyclic_with(|_| true)
    }

    /// Parses `p <num_vertices> <num_arcs>` followed by one `u v` line per arc.
    /// Blank lines and lines starting with `c` or `#` are ignored.
    pub fn parse<R: BufRead>(reader: R) -> Result<Self> {
        let mut header: Option<(u32, usize)> = None;
        let mut arcs = Vec::new();
        for (idx, line) in reader.lines().enumerate() {
            let line = line?;
            let lineno = idx + 1;
            let line = line.trim();
            if line.is_empty() || line.starts_with('c') || line.starts_with('#') {
                continue;
            }
            let fields: Vec<&str> = line.split_whitespace().collect();
            let parse_err = |message: &str| Error::Parse {
                line: lineno,
                message: message.to_string(),
            };
            match header {
                None => {
                    if fields.len() != 3 || fields[0] != "p" {
                        return Err(parse_err("expected header 'p <num_vertices> <num_arcs>'"));
                    }
                    let n = fields[1]
                        .parse()
                        .map_err(|_| parse_err("bad vertex count"))?;
                    let m = fields[2].parse().map_err(|_| parse_err("bad arc count"))?;
                    header = Some((n, m));
                }
                Some(_) => {
                    if fields.len() != 2 {
                        return Err(parse_err("expected an arc 'u v'"));
                    }
                    let u = fields[0]
                        .parse()
                        .map_err(|_| parse_err("bad vertex code"))?;
                    let v = fields[1]
                        .parse()
                        .map_err(|_| parse_err("bad vertex code"))?;
                    arcs.push((u, v));
                }
            }
        }
        let (n, m) = header.ok_or(Error::Parse {
            line: 0,
            message: "missing header".into(),
        })?;
        if arcs.len() != m {
            return Err(Error::Parse {
                line: 0,
                message: format!("header announces {m} arcs but {} were listed", arcs.len()),
            });
        }
        Self::new(n, arcs)
    }

    pub fn to_text(&self) -> String {
        let mut out = format!("p {} {}\n", self.num_vertices, self.arcs.len());
        for (u, v) in &self.arcs {
            let _ = writeln!(out, "{u} {v}");
        }
        out
    }
}

/// A subset of a graph's arcs, identified by arc index.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct ArcSet {
    indices: Vec<usize>,
    arcs: Vec<(u32, u32)>,
}

impl ArcSet {
    pub fn indices(&self) -> &[usize] {
        &self.indices
    }

    pub fn arcs(&self) -> &[(u32, u32)] {
        &self.arcs
    }

    pub fn len(&self) -> usize {
        self.indices.len()
    }

    pub fn is_empty(&self) -> bool {
        self.indices.is_empty()
    }

    pub fn contains_index(&self, i: usize) -> bool {
        self.indices.binary_search(&i).is_ok()
    }
}

/// The backward arcs `(u, v)` with `u` after `v` in `ord`.
///
/// Removing them leaves a graph for which `ord` is a topological order.
pub fn fas_from_ordering(g: &DiGraph, ord: &AlphabetOrdering) -> Result<ArcSet> {
    if ord.sigma() != g.num_vertices {
        return Err(Error::AlphabetMismatch {
            string: g.num_vertices,
            ordering: ord.sigma(),
        });
    }
    let (indices, arcs) = g
        .arcs
        .iter()
        .enumerate()
        .filter(|(_, &(u, v))| ord.rank(u) > ord.rank(v))
        .map(|(i, &a)| (i, a))
        .unzip();
    Ok(ArcSet { indices, arcs })
}

/// Minimum feedback arc set by enumerating vertex orderings; the first
/// ordering (lexicographically) that attains the minimum is returned with it.
pub fn min_fas_bruteforce(g: &DiGraph) -> Result<(ArcSet, AlphabetOrdering)> {
    min_fas_bruteforce_with_budget(g, DEFAULT_MAX_FAS_VERTICES)
}

pub fn min_fas_bruteforce_with_budget(
    g: &DiGraph,
    max_vertices: usize,
) -> Result<(ArcSet, AlphabetOrdering)> {
    check_budget(g.num_vertices, max_vertices)?;
    let mut best: Option<(ArcSet, AlphabetOrdering)> = None;
    for ord in all_orderings(g.num_vertices) {
        let fas = fas_from_ordering(g, &ord)?;
        if best.as_ref().is_none_or(|(b, _)| fas.len() < b.len()) {
            let done = fas.is_empty();
            best = Some((fas, ord));
            if done {
                break;
            }
        }
    }
    Ok(best.unwrap_or_else(|| {
        (
            ArcSet {
                indices: vec![],
                arcs: vec![],
            },
            AlphabetOrdering::identity(0),
        )
    }))
}
