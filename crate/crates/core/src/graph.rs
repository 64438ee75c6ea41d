//! Immutable simple undirected graphs on dense vertex indices `0..n`.
//!
//! Adjacency is kept both as sorted neighbour lists (for iteration in index
//! order) and as bitset rows (for constant-time edge queries). Vertices may
//! carry a [`Label`] naming their role in a Mycielski-type construction;
//! solvers never look at labels.

use std::collections::BTreeSet;
use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};

/// A set of vertex indices backed by a fixed-width bitset.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct VertexSet {
    words: Vec<u64>,
    universe: usize,
}

impl VertexSet {
    pub fn new(universe: usize) -> Self {
        VertexSet {
            words: vec![0; universe.div_ceil(64)],
            universe,
        }
    }

    pub fn universe(&self) -> usize {
        self.universe
    }

    pub fn insert(&mut self, v: usize) {
        debug_assert!(v < self.universe);
        self.words[v / 64] |= 1 << (v % 64);
    }

    pub fn contains(&self, v: usize) -> bool {
        v < self.universe && self.words[v / 64] & (1 << (v % 64)) != 0
    }

    pub fn len(&self) -> usize {
        self.words.iter().map(|w| w.count_ones() as usize).sum()
    }

    pub fn is_empty(&self) -> bool {
        self.words.iter().all(|&w| w == 0)
    }

    pub fn intersects(&self, other: &VertexSet) -> bool {
        self.words.iter().zip(&other.words).any(|(a, b)| a & b != 0)
    }

    /// Members in increasing order.
    pub fn iter(&self) -> impl Iterator<Item = usize> + '_ {
        self.words.iter().enumerate().flat_map(|(i, &word)| {
            let mut w = word;
            std::iter::from_fn(move || {
                if w == 0 {
                    return None;
                }
                let bit = w.trailing_zeros() as usize;
                w &= w - 1;
                Some(i * 64 + bit)
            })
        })
    }

    pub fn to_vec(&self) -> Vec<usize> {
        self.iter().collect()
    }
}

impl fmt::Debug for VertexSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_set().entries(self.iter()).finish()
    }
}

/// Role of a vertex in a Mycielski-type construction.
///
/// Indices are zero-based; the textual form is one-based (`v1`, `u1`, `w`,
/// `w1`, `x1`) so that printed reports read like the usual notation.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Label {
    Original(usize),
    Twin(usize),
    Root,
    /// Third-layer copy `w_i` in the Federico construction.
    Plain(usize),
    /// Arbitrary named vertex outside any construction.
    Other(usize),
}

impl fmt::Display for Label {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Label::Original(i) => write!(f, "v{}", i + 1),
            Label::Twin(i) => write!(f, "u{}", i + 1),
            Label::Root => write!(f, "w"),
            Label::Plain(i) => write!(f, "w{}", i + 1),
            Label::Other(i) => write!(f, "x{}", i + 1),
        }
    }
}

impl FromStr for Label {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        if s == "w" {
            return Ok(Label::Root);
        }
        let bad = || Error::Malformed(format!("labels: unrecognised label {s:?}"));
        let mut chars = s.chars();
        let prefix = chars.next().ok_or_else(bad)?;
        let index: usize = chars.as_str().parse().map_err(|_| bad())?;
        if index == 0 {
            return Err(bad());
        }
        let i = index - 1;
        match prefix {
            'v' => Ok(Label::Original(i)),
            'u' => Ok(Label::Twin(i)),
            'w' => Ok(Label::Plain(i)),
            'x' => Ok(Label::Other(i)),
            _ => Err(bad()),
        }
    }
}

/// Standard graph families.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Family {
    Path,
    Cycle,
    Complete,
    CompleteBipartite,
}

impl FromStr for Family {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "path" => Ok(Family::Path),
            "cycle" => Ok(Family::Cycle),
            "complete" => Ok(Family::Complete),
            "complete_bipartite" | "complete-bipartite" => Ok(Family::CompleteBipartite),
            _ => Err(Error::InvalidParameter(format!("unknown family {s:?}"))),
        }
    }
}

#[derive(Clone, PartialEq, Eq)]
pub struct Graph {
    n: usize,
    edges: Vec<(usize, usize)>,
    labels: Option<Vec<Label>>,
    neighbours: Vec<Vec<usize>>,
    rows: Vec<VertexSet>,
}

impl fmt::Debug for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("Graph")
            .field("n", &self.n)
            .field("edges", &self.edges)
            .field("labels", &self.labels)
            .finish()
    }
}

impl Graph {
    /// Builds a graph from arbitrary vertex pairs, normalising each pair to
    /// `i < j` and dropping duplicates.
    pub fn from_edge_list<I>(n: usize, pairs: I) -> Result<Graph>
    where
        I: IntoIterator<Item = (usize, usize)>,
    {
        let mut set = BTreeSet::new();
        for (a, b) in pairs {
            for v in [a, b] {
                if v >= n {
                    return Err(Error::OutOfRange { vertex: v, n });
                }
            }
            if a == b {
                return Err(Error::InvalidEdge(a, b));
            }
            set.insert((a.min(b), a.max(b)));
        }
        Ok(Graph::from_normalized(n, set.into_iter().collect(), None))
    }

    pub fn edgeless(n: usize) -> Graph {
        Graph::from_normalized(n, Vec::new(), None)
    }

    fn from_normalized(n: usize, edges: Vec<(usize, usize)>, labels: Option<Vec<Label>>) -> Graph {
        let mut neighbours = vec![Vec::new(); n];
        let mut rows = vec![VertexSet::new(n); n];
        for &(i, j) in &edges {
            neighbours[i].push(j);
            neighbours[j].push(i);
            rows[i].insert(j);
            rows[j].insert(i);
        }
        for list in &mut neighbours {
            list.sort_unstable();
        }
        Graph {
            n,
            edges,
            labels,
            neighbours,
            rows,
        }
    }

    /// Attaches role labels; there must be exactly one per vertex and no repeats.
    pub fn with_labels(mut self, labels: Vec<Label>) -> Result<Graph> {
        if labels.len() != self.n {
            return Err(Error::Malformed(format!(
                "labels: expected {} labels, found {}",
                self.n,
                labels.len()
            )));
        }
        let unique: BTreeSet<_> = labels.iter().collect();
        if unique.len() != labels.len() {
            return Err(Error::Malformed("labels: duplicate label".into()));
        }
        self.labels = Some(labels);
        Ok(self)
    }

    pub fn without_labels(mut self) -> Graph {
        self.labels = None;
        self
    }

    pub fn generate(family: Family, params: &[usize]) -> Result<Graph> {
        let arity = match family {
            Family::CompleteBipartite => 2,
            _ => 1,
        };
        if params.len() != arity {
            return Err(Error::InvalidParameter(format!(
                "{family:?} takes {arity} parameter(s), got {}",
                params.len()
            )));
        }
        let min = match family {
            Family::Cycle => 3,
            _ => 1,
        };
        if let Some(&p) = params.iter().find(|&&p| p < min) {
            return Err(Error::InvalidParameter(format!(
                "{family:?} parameter must be at least {min}, got {p}"
            )));
        }
        let edges: Vec<(usize, usize)> = match family {
            Family::Path => (1..params[0]).map(|i| (i - 1, i)).collect(),
            Family::Cycle => {
                let n = params[0];
                let mut e: Vec<_> = (1..n).map(|i| (i - 1, i)).collect();
                e.push((0, n - 1));
                e
            }
            Family::Complete => {
                let n = params[0];
                (0..n)
                    .flat_map(|i| (i + 1..n).map(move |j| (i, j)))
                    .collect()
            }
            Family::CompleteBipartite => {
                let (m, k) = (params[0], params[1]);
                (0..m)
                    .flat_map(|i| (m..m + k).map(move |j| (i, j)))
                    .collect()
            }
        };
        let n = match family {
            Family::CompleteBipartite => params[0] + params[1],
            _ => params[0],
        };
        Graph::from_edge_list(n, edges)
    }

    pub fn path(n: usize) -> Result<Graph> {
        Graph::generate(Family::Path, &[n])
    }

    pub fn cycle(n: usize) -> Result<Graph> {
        Graph::generate(Family::Cycle, &[n])
    }

    pub fn complete(n: usize) -> Result<Graph> {
        Graph::generate(Family::Complete, &[n])
    }

    pub fn complete_bipartite(m: usize, n: usize) -> Result<Graph> {
        Graph::generate(Family::CompleteBipartite, &[m, n])
    }

    pub fn vertex_count(&self) -> usize {
        self.n
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    /// Edges with `i < j`, sorted lexicographically.
    pub fn edges(&self) -> &[(usize, usize)] {
        &self.edges
    }

    pub fn labels(&self) -> Option<&[Label]> {
        self.labels.as_deref()
    }

    pub fn label(&self, v: usize) -> Option<Label> {
        self.labels.as_ref().map(|l| l[v])
    }

    /// Printable vertex name: its label if present, else its index.
    pub fn vertex_name(&self, v: usize) -> String {
        match self.label(v) {
            Some(l) => l.to_string(),
            None => v.to_string(),
        }
    }

    pub fn has_edge(&self, a: usize, b: usize) -> bool {
        a < self.n && self.rows[a].contains(b)
    }

    /// Neighbours of `v` in increasing order.
    pub fn neighbours(&self, v: usize) -> &[usize] {
        &self.neighbours[v]
    }

    pub fn adjacency_row(&self, v: usize) -> &VertexSet {
        &self.rows[v]
    }

    pub fn degree(&self, v: usize) -> usize {
        self.neighbours[v].len()
    }

    fn check_vertex(&self, v: usize) -> Result<()> {
        if v >= self.n {
            Err(Error::OutOfRange {
                vertex: v,
                n: self.n,
            })
        } else {
            Ok(())
        }
    }

    pub fn closed_neighbourhood(&self, v: usize) -> Result<VertexSet> {
        self.check_vertex(v)?;
        let mut set = self.rows[v].clone();
        set.insert(v);
        Ok(set)
    }

    pub fn min_degree(&self) -> Result<usize> {
        (0..self.n)
            .map(|v| self.degree(v))
            .min()
            .ok_or_else(|| Error::InvalidParameter("minimum degree of the empty graph".into()))
    }

    pub fn max_degree(&self) -> usize {
        (0..self.n).map(|v| self.degree(v)).max().unwrap_or(0)
    }

    /// True iff no edge has an endpoint pair with a common neighbour.
    pub fn is_triangle_free(&self) -> bool {
        self.edges
            .iter()
            .all(|&(i, j)| !self.rows[i].intersects(&self.rows[j]))
    }

    /// Vertex pairs `(i, j)`, `i < j`, that are not edges, in lexicographic order.
    pub fn non_edges(&self) -> Vec<(usize, usize)> {
        (0..self.n)
            .flat_map(|i| (i + 1..self.n).map(move |j| (i, j)))
            .filter(|&(i, j)| !self.has_edge(i, j))
            .collect()
    }

    /// A new graph with the extra edges added; labels are kept.
    pub fn with_added_edges(&self, extra: &[(usize, usize)]) -> Result<Graph> {
        let g = Graph::from_edge_list(self.n, self.edges.iter().chain(extra).copied())?;
        Ok(Graph {
            labels: self.labels.clone(),
            ..g
        })
    }

    /// The subgraph induced by the vertices `keep` (in the given order),
    /// renumbered `0..keep.len()`. Labels follow their vertices.
    pub fn induced_subgraph(&self, keep: &[usize]) -> Result<Graph> {
        let mut index = vec![usize::MAX; self.n];
        for (new, &old) in keep.iter().enumerate() {
            self.check_vertex(old)?;
            index[old] = new;
        }
        let edges = self
            .edges
            .iter()
            .filter(|&&(i, j)| index[i] != usize::MAX && index[j] != usize::MAX)
            .map(|&(i, j)| (index[i], index[j]));
        let g = Graph::from_edge_list(keep.len(), edges)?;
        match &self.labels {
            Some(l) => g.with_labels(keep.iter().map(|&v| l[v]).collect()),
            None => Ok(g),
        }
    }

    /// Renames vertex `v` to `perm[v]`. Labels are dropped.
    pub fn permuted(&self, perm: &[usize]) -> Result<Graph> {
        if perm.len() != self.n {
            return Err(Error::InvalidParameter("permutation length".into()));
        }
        Graph::from_edge_list(self.n, self.edges.iter().map(|&(i, j)| (perm[i], perm[j])))
    }

    pub(crate) fn from_parts(
        n: usize,
        edges: impl IntoIterator<Item = (usize, usize)>,
        labels: Vec<Label>,
    ) -> Graph {
        let g = Graph::from_edge_list(n, edges).expect("construction produced an invalid edge");
        g.with_labels(labels)
            .expect("construction produced invalid labels")
    }
}
