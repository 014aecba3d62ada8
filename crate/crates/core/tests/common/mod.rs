//! Test-only oracles, independent of the library code paths they check.
#![allow(dead_code)]

use std::collections::HashMap;

use mmin::reduction::DiGraph;
use rand::Rng;

/// Minimizer positions (1-based) with an arbitrary comparison on k-mers.
pub fn minimizers_by_kmer_cmp<F>(s: &[u32], w: usize, k: usize, cmp: F) -> Vec<usize>
where
    F: Fn(&[u32], &[u32]) -> std::cmp::Ordering,
{
    let mut out = Vec::new();
    if s.len() + 1 < w + k {
        return out;
    }
    for i in 0..=s.len() - (w + k - 1) {
        let mut best = i;
        for j in i + 1..i + w {
            if cmp(&s[j..j + k], &s[best..best + k]).is_lt() {
                best = j;
            }
        }
        out.push(best + 1);
    }
    out.sort_unstable();
    out.dedup();
    out
}

/// Compares k-mers by a rank table over whole k-mers.
pub fn kmer_rank_cmp(
    table: &HashMap<Vec<u32>, u32>,
) -> impl Fn(&[u32], &[u32]) -> std::cmp::Ordering + '_ {
    move |a, b| table[a].cmp(&table[b])
}

/// Kahn's algorithm on the arcs not excluded.
pub fn acyclic_without(n: usize, arcs: &[(u32, u32)], excluded: u32) -> bool {
    let mut indeg = vec![0usize; n];
    let kept: Vec<(u32, u32)> = arcs
        .iter()
        .enumerate()
        .filter(|(i, _)| excluded & (1 << i) == 0)
        .map(|(_, &a)| a)
        .collect();
    for &(_, v) in &kept {
        indeg[v as usize] += 1;
    }
    let mut ready: Vec<usize> = (0..n).filter(|&v| indeg[v] == 0).collect();
    let mut seen = 0;
    while let Some(v) = ready.pop() {
        seen += 1;
        for &(a, b) in &kept {
            if a as usize == v {
                indeg[b as usize] -= 1;
                if indeg[b as usize] == 0 {
                    ready.push(b as usize);
                }
            }
        }
    }
    seen == n
}

/// Minimum feedback arc set size by enumerating arc subsets.
pub fn min_fas_by_subsets(g: &DiGraph) -> usize {
    let m = g.num_arcs();
    assert!(m < 20);
    (0u32..1 << m)
        .filter(|&mask| acyclic_without(g.num_vertices() as usize, g.arcs(), mask))
        .map(|mask| mask.count_ones() as usize)
        .min()
        .expect("removing every arc is always acyclic")
}

fn weakly_connected_over_arcs(n: usize, arcs: &[(u32, u32)]) -> bool {
    let mut parent: Vec<usize> = (0..n).collect();
    fn find(p: &mut [usize], x: usize) -> usize {
        if p[x] != x {
            let r = find(p, p[x]);
            p[x] = r;
        }
        p[x]
    }
    for &(u, v) in arcs {
        let (a, b) = (find(&mut parent, u as usize), find(&mut parent, v as usize));
        parent[a] = b;
    }
    let mut roots: Vec<usize> = arcs
        .iter()
        .flat_map(|&(u, v)| [u as usize, v as usize])
        .map(|x| find(&mut parent, x))
        .collect();
    roots.sort_unstable();
    roots.dedup();
    roots.len() == 1
}

/// Every simple Eulerian digraph on `n` labelled vertices with `1..=max_arcs`
/// arcs (isolated vertices allowed).
pub fn simple_eulerian_graphs(n: u32, max_arcs: usize) -> Vec<DiGraph> {
    let slots: Vec<(u32, u32)> = (0..n)
        .flat_map(|u| (0..n).filter(move |&v| v != u).map(move |v| (u, v)))
        .collect();
    let mut out = Vec::new();
    for mask in 1u32..1 << slots.len() {
        if mask.count_ones() as usize > max_arcs {
            continue;
        }
        let arcs: Vec<(u32, u32)> = slots
            .iter()
            .enumerate()
            .filter(|(i, _)| mask & (1 << i) != 0)
            .map(|(_, &a)| a)
            .collect();
        let balanced = (0..n).all(|v| {
            arcs.iter().filter(|a| a.0 == v).count() == arcs.iter().filter(|a| a.1 == v).count()
        });
        if balanced && weakly_connected_over_arcs(n as usize, &arcs) {
            out.push(DiGraph::new(n, arcs).unwrap());
        }
    }
    out
}

/// A few Eulerian multigraphs with parallel arcs.
pub fn eulerian_multigraphs() -> Vec<DiGraph> {
    vec![
        DiGraph::new(2, vec![(0, 1), (1, 0), (0, 1), (1, 0)]).unwrap(),
        DiGraph::new(3, vec![(0, 1), (1, 2), (2, 0), (0, 1), (1, 2), (2, 0)]).unwrap(),
        DiGraph::new(3, vec![(0, 1), (1, 0), (1, 2), (2, 1), (1, 2), (2, 1)]).unwrap(),
        DiGraph::new(
            4,
            vec![
                (0, 1),
                (1, 2),
                (2, 3),
                (3, 0),
                (0, 2),
                (2, 0),
                (0, 2),
                (2, 0),
            ],
        )
        .unwrap(),
    ]
}

/// A random digraph on `n` vertices with `m` distinct non-loop arcs.
pub fn random_digraph<R: Rng>(rng: &mut R, n: u32, m: usize) -> DiGraph {
    let max = (n * (n - 1)) as usize;
    assert!(m <= max);
    let mut arcs = Vec::new();
    while arcs.len() < m {
        let (u, v) = (rng.gen_range(0..n), rng.gen_range(0..n));
        if u != v && !arcs.contains(&(u, v)) {
            arcs.push((u, v));
        }
    }
    DiGraph::new(n, arcs).unwrap()
}
