//! J-paucity: the least number of new edges after which a graph admits a
//! J-colouring with `δ(G)+1` colours, where `δ` is taken on the original
//! graph and stays fixed as edges are added.

use rayon::prelude::*;

use crate::coloring::{find_j_coloring, is_j_coloring, Coloring, Limits};
use crate::constructions::mycielskian;
use crate::error::{Error, Result};
use crate::graph::Graph;

/// Default cap on the number of edge subsets examined at one budget level.
pub const DEFAULT_SUBSET_CAP: u128 = 5_000_000;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PaucityCertificate {
    /// Non-edges of the original graph, sorted.
    pub added_edges: Vec<(usize, usize)>,
    /// J-colouring of the augmented graph with `δ(G)+1` colours.
    pub witness: Coloring,
}

impl PaucityCertificate {
    pub fn count(&self) -> usize {
        self.added_edges.len()
    }
}

/// Checks a certificate against the original graph from scratch.
pub fn verify_certificate(g: &Graph, cert: &PaucityCertificate) -> bool {
    let Ok(delta) = g.min_degree() else {
        return false;
    };
    let fresh = cert
        .added_edges
        .iter()
        .all(|&(i, j)| i < j && j < g.vertex_count() && !g.has_edge(i, j));
    let mut sorted = cert.added_edges.clone();
    sorted.sort_unstable();
    sorted.dedup();
    if !fresh || sorted.len() != cert.added_edges.len() {
        return false;
    }
    match g.with_added_edges(&cert.added_edges) {
        Ok(aug) => cert.witness.colors() == delta + 1 && is_j_coloring(&aug, &cert.witness),
        Err(_) => false,
    }
}

#[derive(Debug, Clone, Copy)]
pub struct PaucityOptions {
    /// Largest number of added edges to try.
    pub budget_limit: Option<usize>,
    /// Largest `C(non-edges, m)` allowed at a single level `m`.
    pub subset_cap: u128,
    pub limits: Limits,
}

impl Default for PaucityOptions {
    fn default() -> Self {
        PaucityOptions {
            budget_limit: None,
            subset_cap: DEFAULT_SUBSET_CAP,
            limits: Limits::default(),
        }
    }
}

fn binomial(n: usize, k: usize) -> u128 {
    if k > n {
        return 0;
    }
    let k = k.min(n - k);
    let mut acc: u128 = 1;
    for i in 0..k {
        acc = acc.saturating_mul((n - i) as u128) / (i as u128 + 1);
    }
    acc
}

/// Lexicographic enumeration of `m`-subsets of `0..n` as index vectors.
struct Combinations {
    n: usize,
    current: Option<Vec<usize>>,
}

impl Combinations {
    fn new(n: usize, m: usize) -> Self {
        Combinations {
            n,
            current: (m <= n).then(|| (0..m).collect()),
        }
    }
}

impl Iterator for Combinations {
    type Item = Vec<usize>;

    fn next(&mut self) -> Option<Vec<usize>> {
        let out = self.current.clone()?;
        let m = out.len();
        let cur = self.current.as_mut().unwrap();
        match (0..m).rev().find(|&i| cur[i] < self.n - m + i) {
            Some(i) => {
                cur[i] += 1;
                for j in i + 1..m {
                    cur[j] = cur[j - 1] + 1;
                }
            }
            None => self.current = None,
        }
        Some(out)
    }
}

const CHUNK: usize = 4096;

/// Iterative deepening over the number of added edges. At each level the
/// subsets of non-edges are scanned in lexicographic order and the first
/// feasible one is returned, so the answer does not depend on how many
/// worker threads share a chunk.
pub fn paucity_exact(g: &Graph, opts: &PaucityOptions) -> Result<Option<PaucityCertificate>> {
    opts.limits.check(g)?;
    let t = g.min_degree()? + 1;
    let non_edges = g.non_edges();
    let top = opts
        .budget_limit
        .unwrap_or(non_edges.len())
        .min(non_edges.len());
    for m in 0..=top {
        let candidates = binomial(non_edges.len(), m);
        if candidates > opts.subset_cap {
            return Err(Error::SearchCap {
                budget: m,
                candidates,
                cap: opts.subset_cap,
            });
        }
        let mut combos = Combinations::new(non_edges.len(), m);
        loop {
            let chunk: Vec<Vec<usize>> = combos.by_ref().take(CHUNK).collect();
            if chunk.is_empty() {
                break;
            }
            let hit = chunk.par_iter().find_map_first(|idx| {
                let added: Vec<(usize, usize)> = idx.iter().map(|&i| non_edges[i]).collect();
                let aug = g.with_added_edges(&added).ok()?;
                find_j_coloring(&aug, t, &opts.limits)
                    .ok()
                    .flatten()
                    .map(|witness| PaucityCertificate {
                        added_edges: added,
                        witness,
                    })
            });
            if hit.is_some() {
                return Ok(hit);
            }
        }
    }
    Ok(None)
}

/// Adds, for each vertex whose closed neighbourhood misses a colour, an edge
/// to a vertex of that colour. Vertices are handled in index order; the
/// target is the least-index non-adjacent vertex of the missing colour,
/// preferring one that is itself missing the source's colour so a single
/// edge repairs both ends.
fn repair(g: &Graph, coloring: &Coloring, added: &mut Vec<(usize, usize)>) -> Result<Graph> {
    let n = g.vertex_count();
    let t = coloring.colors();
    let mut aug = g.with_added_edges(added)?;
    let missing = |aug: &Graph, v: usize| -> Vec<usize> {
        let mut seen = vec![false; t];
        seen[coloring.color(v)] = true;
        for &u in aug.neighbours(v) {
            seen[coloring.color(u)] = true;
        }
        (0..t).filter(|&c| !seen[c]).collect()
    };
    for x in 0..n {
        for c in missing(&aug, x) {
            // An earlier repair in this loop may already have supplied c.
            if !missing(&aug, x).contains(&c) {
                continue;
            }
            let candidates: Vec<usize> = (0..n)
                .filter(|&y| y != x && coloring.color(y) == c && !aug.has_edge(x, y))
                .collect();
            let target = candidates
                .iter()
                .copied()
                .find(|&y| missing(&aug, y).contains(&coloring.color(x)))
                .or_else(|| candidates.first().copied())
                .ok_or_else(|| {
                    Error::InvalidParameter(format!("no vertex of colour {c} can be joined to {x}"))
                })?;
            added.push((x.min(target), x.max(target)));
            aug = g.with_added_edges(added)?;
        }
    }
    added.sort_unstable();
    Ok(aug)
}

fn certify(
    g: &Graph,
    colors: Vec<usize>,
    t: usize,
    mut added: Vec<(usize, usize)>,
) -> Result<PaucityCertificate> {
    let witness = Coloring::new(colors, t)?;
    repair(g, &witness, &mut added)?;
    let cert = PaucityCertificate {
        added_edges: added,
        witness,
    };
    if !verify_certificate(g, &cert) {
        return Err(Error::InvalidParameter(
            "constructed augmentation does not verify".into(),
        ));
    }
    Ok(cert)
}

/// Augmentation of `μ(P_n)`: originals and twins alternate two colours with
/// twins matching, the root takes the third, and every original is joined
/// to the root.
pub fn paucity_constructive_path(n: usize) -> Result<PaucityCertificate> {
    if n < 2 {
        return Err(Error::InvalidParameter(format!(
            "path augmentation needs n >= 2, got {n}"
        )));
    }
    let g = mycielskian(&Graph::path(n)?);
    let root = 2 * n;
    let base: Vec<usize> = (0..n).map(|i| i % 2).collect();
    let colors = [base.as_slice(), base.as_slice(), &[2]].concat();
    let added = (0..n).map(|i| (i, root)).collect();
    certify(&g, colors, 3, added)
}

/// Colours of the originals of `C_n` in the cycle augmentation: the pattern
/// 0,1,2 repeated, with the tail adjusted when `3 ∤ n`.
pub fn cycle_base_colors(n: usize) -> Vec<usize> {
    let mut colors: Vec<usize> = (0..n).map(|i| i % 3).collect();
    match n % 3 {
        1 => colors[n - 1] = 1,
        2 => {
            colors[n - 2] = 0;
            colors[n - 1] = 1;
        }
        _ => {}
    }
    colors
}

/// Augmentation of `μ(C_n)` with four colours: twins copy their originals,
/// the root takes colour 3, every original is joined to the root, and the
/// `2r` vertices (`r = n mod 3`) still missing colour 2 or 0 get one more
/// edge each, paired among themselves where possible.
pub fn paucity_constructive_cycle(n: usize) -> Result<PaucityCertificate> {
    if n < 4 {
        return Err(Error::InvalidParameter(format!(
            "cycle augmentation needs n >= 4, got {n}"
        )));
    }
    let g = mycielskian(&Graph::cycle(n)?);
    let root = 2 * n;
    let base = cycle_base_colors(n);
    let colors = [base.as_slice(), base.as_slice(), &[3]].concat();
    let added = (0..n).map(|i| (i, root)).collect();
    certify(&g, colors, 4, added)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::coloring::is_proper;

    #[test]
    fn binomials() {
        assert_eq!(binomial(20, 6), 38760);
        assert_eq!(binomial(5, 0), 1);
        assert_eq!(binomial(3, 4), 0);
    }

    #[test]
    fn combinations_are_lexicographic() {
        let all: Vec<_> = Combinations::new(4, 2).collect();
        assert_eq!(
            all,
            vec![
                vec![0, 1],
                vec![0, 2],
                vec![0, 3],
                vec![1, 2],
                vec![1, 3],
                vec![2, 3]
            ]
        );
        assert_eq!(Combinations::new(3, 0).count(), 1);
        assert_eq!(Combinations::new(2, 3).count(), 0);
    }

    #[test]
    fn zero_case() {
        let p4 = Graph::path(4).unwrap();
        let cert = paucity_exact(&p4, &PaucityOptions::default())
            .unwrap()
            .unwrap();
        assert_eq!(cert.count(), 0);
        assert!(verify_certificate(&p4, &cert));
    }

    #[test]
    fn constructive_path_counts() {
        for n in 2..=7 {
            let cert = paucity_constructive_path(n).unwrap();
            assert_eq!(cert.count(), n);
            assert_eq!(cert.witness.colors(), 3);
        }
        assert!(paucity_constructive_path(1).is_err());
    }

    #[test]
    fn constructive_cycle_counts() {
        for n in 4..=12 {
            let cert = paucity_constructive_cycle(n).unwrap();
            assert_eq!(cert.count(), n + 2 * (n % 3), "n = {n}");
        }
        assert!(matches!(
            paucity_constructive_cycle(3),
            Err(Error::InvalidParameter(_))
        ));
    }

    #[test]
    fn cycle_nine_coloring_is_periodic() {
        let cert = paucity_constructive_cycle(9).unwrap();
        let a = cert.witness.assignment();
        assert_eq!(&a[..9], &[0, 1, 2, 0, 1, 2, 0, 1, 2]);
        assert_eq!(&a[9..18], &a[..9]);
        assert_eq!(a[18], 3);
        assert!(cert.added_edges.iter().all(|&(_, j)| j == 18));
    }

    #[test]
    fn cycle_base_colors_are_proper() {
        for n in 4..=12 {
            let c = Coloring::new(cycle_base_colors(n), 3).unwrap();
            assert!(is_proper(&Graph::cycle(n).unwrap(), &c), "n = {n}");
        }
    }

    #[test]
    fn verify_rejects_existing_edge() {
        let g = mycielskian(&Graph::path(2).unwrap());
        let mut cert = paucity_constructive_path(2).unwrap();
        assert!(verify_certificate(&g, &cert));
        cert.added_edges.push((0, 1));
        assert!(!verify_certificate(&g, &cert));
    }

    #[test]
    fn budget_and_cap() {
        let g = mycielskian(&Graph::path(2).unwrap());
        let opts = PaucityOptions {
            budget_limit: Some(1),
            ..Default::default()
        };
        assert_eq!(paucity_exact(&g, &opts), Ok(None));
        let opts = PaucityOptions {
            subset_cap: 3,
            ..Default::default()
        };
        assert!(matches!(
            paucity_exact(&g, &opts),
            Err(Error::SearchCap { budget: 1, .. })
        ));
    }
}
