use crate::error::{Error, Result};
use crate::reduction::graph::DiGraph;

/// An Eulerian circuit `v_0, ..., v_|A|` with `v_0 == v_|A|`.
///
/// Hierholzer's cycle splicing. Each vertex scans its out-arcs in ascending
/// `(target, insertion index)` order and the walk starts at the smallest
/// vertex with an out-arc, so the result is deterministic. Vertices without
/// arcs are ignored for connectivity.
pub fn eulerian_circuit(g: &DiGraph) -> Result<Vec<u32>> {
    let n = g.num_vertices() as usize;
    if g.num_arcs() == 0 {
        return Err(Error::InvalidGraph("graph has no arcs".into()));
    }
    let mut indeg = vec![0usize; n];
    let mut outdeg = vec![0usize; n];
    for &(u, v) in g.arcs() {
        outdeg[u as usize] += 1;
        indeg[v as usize] += 1;
    }
    if let Some(v) = (0..n).find(|&v| indeg[v] != outdeg[v]) {
        return Err(Error::DegreeMismatch {
            vertex: v as u32,
            in_degree: indeg[v],
            out_degree: outdeg[v],
        });
    }

    let mut out: Vec<Vec<(u32, usize)>> = vec![Vec::new(); n];
    for (i, &(u, v)) in g.arcs().iter().enumerate() {
        out[u as usize].push((v, i));
    }
    for list in &mut out {
        list.sort_unstable();
    }

    let root = (0..n).find(|&v| outdeg[v] > 0).expect("some arc exists");
    check_weakly_connected(g, root, &outdeg)?;

    let mut next = vec![0usize; n];
    let mut stack = vec![root as u32];
    let mut circuit = Vec::with_capacity(g.num_arcs() + 1);
    while let Some(&v) = stack.last() {
        let vi = v as usize;
        if let Some(&(u, _)) = out[vi].get(next[vi]) {
            next[vi] += 1;
            stack.push(u);
        } else {
            circuit.push(v);
            stack.pop();
        }
    }
    circuit.reverse();
    debug_assert_eq!(circuit.len(), g.num_arcs() + 1);
    Ok(circuit)
}

fn check_weakly_connected(g: &DiGraph, root: usize, outdeg: &[usize]) -> Result<()> {
    let n = g.num_vertices() as usize;
    let mut adj = vec![Vec::new(); n];
    for &(u, v) in g.arcs() {
        adj[u as usize].push(v as usize);
        adj[v as usize].push(u as usize);
    }
    let mut seen = vec![false; n];
    let mut stack = vec![root];
    seen[root] = true;
    while let Some(v) = stack.pop() {
        for &u in &adj[v] {
            if !seen[u] {
                seen[u] = true;
                stack.push(u);
            }
        }
    }
    // in == out everywhere, so a vertex with arcs has out-degree > 0
    match (0..n).find(|&v| outdeg[v] > 0 && !seen[v]) {
        Some(v) => Err(Error::Disconnected {
            vertex: v as u32,
            root: root as u32,
        }),
        None => Ok(()),
    }
}
