//! Brute-force oracles and the shared test corpus.
//!
//! Nothing here calls into the solvers under test: every oracle works from
//! the raw edge list and enumerates all assignments without pruning.

#![allow(dead_code)]

use jmyc_core::constructions::{crib, federico, mycielskian, shadow};
use jmyc_core::Graph;

pub fn adjacency(g: &Graph) -> Vec<Vec<bool>> {
    let n = g.vertex_count();
    let mut adj = vec![vec![false; n]; n];
    for &(i, j) in g.edges() {
        adj[i][j] = true;
        adj[j][i] = true;
    }
    adj
}

/// Calls `visit` on every assignment `0..n -> 0..t` in odometer order until
/// it returns true.
pub fn any_assignment(n: usize, t: usize, mut visit: impl FnMut(&[usize]) -> bool) -> bool {
    if t == 0 {
        return n == 0 && visit(&[]);
    }
    let mut a = vec![0usize; n];
    loop {
        if visit(&a) {
            return true;
        }
        let mut i = 0;
        loop {
            if i == n {
                return false;
            }
            a[i] += 1;
            if a[i] < t {
                break;
            }
            a[i] = 0;
            i += 1;
        }
    }
}

pub fn oracle_proper(adj: &[Vec<bool>], a: &[usize]) -> bool {
    let n = a.len();
    (0..n).all(|i| (i + 1..n).all(|j| !adj[i][j] || a[i] != a[j]))
}

/// Full J (or J*, when `internal_only`) check from definitions.
pub fn oracle_is_rainbow(adj: &[Vec<bool>], a: &[usize], t: usize, internal_only: bool) -> bool {
    let n = a.len();
    let mut classes = vec![false; t];
    for &c in a {
        if c >= t {
            return false;
        }
        classes[c] = true;
    }
    if !classes.iter().all(|&b| b) || !oracle_proper(adj, a) {
        return false;
    }
    (0..n).all(|v| {
        let degree = adj[v].iter().filter(|&&b| b).count();
        if internal_only && degree < 2 {
            return true;
        }
        let mut seen = vec![false; t];
        seen[a[v]] = true;
        for u in 0..n {
            if adj[v][u] {
                seen[a[u]] = true;
            }
        }
        seen.iter().all(|&b| b)
    })
}

pub fn oracle_spectrum(g: &Graph, t_max: usize, internal_only: bool) -> Vec<usize> {
    let adj = adjacency(g);
    (1..=t_max)
        .filter(|&t| {
            any_assignment(g.vertex_count(), t, |a| {
                oracle_is_rainbow(&adj, a, t, internal_only)
            })
        })
        .collect()
}

pub fn oracle_j_colorable(g: &Graph, t: usize) -> bool {
    let adj = adjacency(g);
    any_assignment(g.vertex_count(), t, |a| {
        oracle_is_rainbow(&adj, a, t, false)
    })
}

pub fn oracle_min_degree(g: &Graph) -> usize {
    adjacency(g)
        .iter()
        .map(|row| row.iter().filter(|&&b| b).count())
        .min()
        .unwrap_or(0)
}

pub fn oracle_triangle_free(g: &Graph) -> bool {
    let adj = adjacency(g);
    let n = g.vertex_count();
    !(0..n).any(|a| (a + 1..n).any(|b| adj[a][b] && (b + 1..n).any(|c| adj[a][c] && adj[b][c])))
}

pub fn oracle_chromatic(g: &Graph) -> usize {
    let adj = adjacency(g);
    (1..=g.vertex_count().max(1))
        .find(|&k| any_assignment(g.vertex_count(), k, |a| oracle_proper(&adj, a)))
        .unwrap()
}

fn gcd(a: usize, b: usize) -> usize {
    if b == 0 {
        a
    } else {
        gcd(b, a % b)
    }
}

/// Least k/d (as a reduced pair) over every (k, d) with k <= n admitting a
/// (k,d)-colouring, by enumerating all k^n assignments.
pub fn oracle_circular(g: &Graph) -> (usize, usize) {
    let adj = adjacency(g);
    let n = g.vertex_count();
    let mut best: Option<(usize, usize)> = None;
    for k in 2..=n {
        for d in 1..=k / 2 {
            if let Some((bk, bd)) = best {
                if k * bd >= bk * d {
                    continue;
                }
            }
            let ok = any_assignment(n, k, |a| {
                (0..n).all(|i| {
                    (i + 1..n).all(|j| {
                        if !adj[i][j] {
                            return true;
                        }
                        let diff = a[i].abs_diff(a[j]);
                        diff.min(k - diff) >= d
                    })
                })
            });
            if ok {
                best = Some((k, d));
            }
        }
    }
    let (k, d) = best.expect("graph has an edge");
    let g = gcd(k, d);
    (k / g, d / g)
}

pub fn all_subsets(items: usize, m: usize) -> Vec<Vec<usize>> {
    if m == 0 {
        return vec![vec![]];
    }
    if items < m {
        return vec![];
    }
    let mut out = Vec::new();
    for first in 0..items {
        for rest in all_subsets(items - first - 1, m - 1) {
            let mut s = vec![first];
            s.extend(rest.into_iter().map(|x| x + first + 1));
            out.push(s);
        }
    }
    out
}

/// True iff no set of exactly `m` non-edges makes `g` J-colourable with `t`
/// colours.
pub fn oracle_no_augmentation_of_size(g: &Graph, m: usize, t: usize) -> bool {
    let adj = adjacency(g);
    let n = g.vertex_count();
    let non_edges: Vec<(usize, usize)> = (0..n)
        .flat_map(|i| (i + 1..n).map(move |j| (i, j)))
        .filter(|&(i, j)| !adj[i][j])
        .collect();
    all_subsets(non_edges.len(), m).into_iter().all(|subset| {
        let mut aug = adj.clone();
        for &s in &subset {
            let (i, j) = non_edges[s];
            aug[i][j] = true;
            aug[j][i] = true;
        }
        !any_assignment(n, t, |a| oracle_is_rainbow(&aug, a, t, false))
    })
}

pub fn corpus() -> Vec<(String, Graph)> {
    let mut out: Vec<(String, Graph)> = Vec::new();
    let mut push = |name: String, g: Graph| out.push((name, g));
    for n in 2..=8 {
        push(format!("P{n}"), Graph::path(n).unwrap());
    }
    for n in 3..=8 {
        push(format!("C{n}"), Graph::cycle(n).unwrap());
    }
    for n in 1..=5 {
        push(format!("K{n}"), Graph::complete(n).unwrap());
    }
    for (m, n) in [(1, 3), (1, 4), (2, 2), (2, 3), (3, 3)] {
        push(
            format!("K{m},{n}"),
            Graph::complete_bipartite(m, n).unwrap(),
        );
    }
    push("edgeless3".into(), Graph::edgeless(3));
    // Triangle with a pendant vertex.
    push(
        "paw".into(),
        Graph::from_edge_list(4, [(0, 1), (1, 2), (0, 2), (2, 3)]).unwrap(),
    );
    push("mu(K2)".into(), mycielskian(&Graph::complete(2).unwrap()));
    for n in 2..=4 {
        let p = Graph::path(n).unwrap();
        push(format!("mu(P{n})"), mycielskian(&p));
        push(format!("c(P{n})"), crib(&p));
        push(format!("s(P{n})"), shadow(&p));
    }
    for n in [4, 5] {
        let c = Graph::cycle(n).unwrap();
        push(format!("mu(C{n})"), mycielskian(&c));
        push(format!("c(C{n})"), crib(&c));
        push(format!("s(C{n})"), shadow(&c));
    }
    for n in 2..=3 {
        push(format!("F(P{n})"), federico(&Graph::path(n).unwrap()));
    }
    push("F(C4)".into(), federico(&Graph::cycle(4).unwrap()));
    out
}
