//! Dynkin diagrams of simple systems and their ADE recognition.

use crate::config::{AdeType, Family, SubsystemConfig};
use crate::error::{AtlasError, Result};
use crate::lattice::{pair, LatticeVector};

fn adjacency(simple: &[LatticeVector]) -> Vec<Vec<usize>> {
    (0..simple.len())
        .map(|i| {
            (0..simple.len())
                .filter(|&j| j != i && pair(&simple[i], &simple[j]).abs() == 1)
                .collect()
        })
        .collect()
}

/// Node sets of the connected components, each sorted, ordered by least node.
pub fn diagram_components(simple: &[LatticeVector]) -> Vec<Vec<usize>> {
    let adj = adjacency(simple);
    let mut comp = vec![usize::MAX; simple.len()];
    let mut out = Vec::new();
    for start in 0..simple.len() {
        if comp[start] != usize::MAX {
            continue;
        }
        let id = out.len();
        let mut stack = vec![start];
        let mut nodes = Vec::new();
        comp[start] = id;
        while let Some(x) = stack.pop() {
            nodes.push(x);
            for &y in &adj[x] {
                if comp[y] == usize::MAX {
                    comp[y] = id;
                    stack.push(y);
                }
            }
        }
        nodes.sort_unstable();
        out.push(nodes);
    }
    out
}

/// Recognizes one connected component given by its adjacency lists.
fn recognize(adj: &[Vec<usize>]) -> Result<AdeType> {
    let n = adj.len();
    let unrecognized = || AtlasError::UnrecognizedDiagram { nodes: n };
    let edges: usize = adj.iter().map(Vec::len).sum::<usize>() / 2;
    if edges + 1 != n {
        // a connected graph with this many edges has a cycle
        return Err(unrecognized());
    }
    let branch: Vec<usize> = (0..n).filter(|&v| adj[v].len() >= 3).collect();
    match branch.as_slice() {
        [] => Ok(AdeType::a(n as u32)),
        [b] if adj[*b].len() == 3 => {
            let mut arms: Vec<usize> = adj[*b]
                .iter()
                .map(|&start| {
                    let (mut prev, mut cur, mut len) = (*b, start, 1);
                    loop {
                        let next: Vec<usize> =
                            adj[cur].iter().copied().filter(|&x| x != prev).collect();
                        match next.as_slice() {
                            [] => break len,
                            [x] => {
                                prev = cur;
                                cur = *x;
                                len += 1;
                            }
                            _ => unreachable!("single branch node"),
                        }
                    }
                })
                .collect();
            arms.sort_unstable();
            match arms.as_slice() {
                [1, 1, k] => Ok(AdeType::d(*k as u32 + 3)),
                [1, 2, 2] => Ok(AdeType::e(6)),
                _ => Err(unrecognized()),
            }
        }
        _ => Err(unrecognized()),
    }
}

/// ADE label of the diagram on `simple` (edge iff the pairing is ±1).
pub fn classify_simple_system(simple: &[LatticeVector]) -> Result<SubsystemConfig> {
    let adj = adjacency(simple);
    let mut types = Vec::new();
    for nodes in diagram_components(simple) {
        let local: Vec<Vec<usize>> = nodes
            .iter()
            .map(|&v| {
                adj[v]
                    .iter()
                    .map(|w| nodes.iter().position(|x| x == w).expect("same component"))
                    .collect()
            })
            .collect();
        types.push(recognize(&local)?);
    }
    Ok(SubsystemConfig::from_factors(types))
}

/// Edges of the standard diagram of `t` on nodes 0..rank. Every node after
/// the first is adjacent to an earlier one.
pub fn standard_diagram(t: AdeType) -> Vec<(usize, usize)> {
    let n = t.rank as usize;
    let mut edges: Vec<(usize, usize)> = (1..n.saturating_sub(1)).map(|i| (i - 1, i)).collect();
    match t.family {
        Family::A => {
            if n >= 2 {
                edges.push((n - 2, n - 1));
            }
        }
        Family::D => edges.push((n - 3, n - 1)),
        Family::E => edges.push((2, n - 1)),
    }
    edges
}
