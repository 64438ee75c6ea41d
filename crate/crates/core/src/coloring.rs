//! Proper colourings, rainbow neighbourhoods and exact J / J* search.
//!
//! A J-colouring with `t` colours is a surjective proper colouring in which
//! the closed neighbourhood of every vertex meets all `t` colour classes.
//! The J*-variant only imposes the neighbourhood condition on internal
//! vertices (degree at least two).
//!
//! All searches are deterministic: vertices are coloured in index order,
//! colours are tried in increasing order, and vertex 0 always gets colour 0.

use std::collections::BTreeSet;

use crate::error::{Error, Result};
use crate::graph::Graph;

pub const DEFAULT_MAX_VERTICES: usize = 64;

/// Guards against exponential blowups in the exact solvers.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Limits {
    pub max_vertices: usize,
}

impl Default for Limits {
    fn default() -> Self {
        Limits {
            max_vertices: DEFAULT_MAX_VERTICES,
        }
    }
}

impl Limits {
    pub fn new(max_vertices: usize) -> Self {
        Limits { max_vertices }
    }

    pub fn check(&self, g: &Graph) -> Result<()> {
        if g.vertex_count() > self.max_vertices {
            Err(Error::SizeLimit {
                what: "vertex count".into(),
                actual: g.vertex_count(),
                limit: self.max_vertices,
            })
        } else {
            Ok(())
        }
    }
}

/// A total assignment of colours `0..colors` to the vertices of a graph.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Coloring {
    assignment: Vec<usize>,
    colors: usize,
}

impl Coloring {
    pub fn new(assignment: Vec<usize>, colors: usize) -> Result<Coloring> {
        if let Some(&c) = assignment.iter().find(|&&c| c >= colors) {
            return Err(Error::InvalidParameter(format!(
                "colour {c} outside 0..{colors}"
            )));
        }
        Ok(Coloring { assignment, colors })
    }

    /// Uses one more than the largest colour present as the colour count.
    pub fn from_assignment(assignment: Vec<usize>) -> Coloring {
        let colors = assignment.iter().max().map_or(0, |&c| c + 1);
        Coloring { assignment, colors }
    }

    pub fn assignment(&self) -> &[usize] {
        &self.assignment
    }

    pub fn colors(&self) -> usize {
        self.colors
    }

    pub fn color(&self, v: usize) -> usize {
        self.assignment[v]
    }

    pub fn len(&self) -> usize {
        self.assignment.len()
    }

    pub fn is_empty(&self) -> bool {
        self.assignment.is_empty()
    }

    /// Every colour class is non-empty.
    pub fn is_surjective(&self) -> bool {
        let used: BTreeSet<_> = self.assignment.iter().collect();
        used.len() == self.colors
    }
}

pub fn is_proper(g: &Graph, c: &Coloring) -> bool {
    c.len() == g.vertex_count() && g.edges().iter().all(|&(i, j)| c.color(i) != c.color(j))
}

/// True iff the closed neighbourhood of `v` meets every colour class of `c`.
pub fn in_rainbow_neighbourhood(g: &Graph, c: &Coloring, v: usize) -> bool {
    let mut seen = vec![false; c.colors()];
    seen[c.color(v)] = true;
    for &u in g.neighbours(v) {
        seen[c.color(u)] = true;
    }
    seen.into_iter().all(|s| s)
}

/// Which vertices must lie in a rainbow neighbourhood.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum RainbowScope {
    /// Every vertex (J-colouring).
    All,
    /// Vertices of degree at least two (J*-colouring); pendant and isolated
    /// vertices are exempt.
    Internal,
}

impl RainbowScope {
    pub fn requires(self, g: &Graph, v: usize) -> bool {
        match self {
            RainbowScope::All => true,
            RainbowScope::Internal => g.degree(v) >= 2,
        }
    }
}

/// Checks every condition of a J-colouring (or J*-colouring) directly.
pub fn is_rainbow_coloring(g: &Graph, c: &Coloring, scope: RainbowScope) -> bool {
    is_proper(g, c)
        && c.is_surjective()
        && (0..g.vertex_count())
            .filter(|&v| scope.requires(g, v))
            .all(|v| in_rainbow_neighbourhood(g, c, v))
}

pub fn is_j_coloring(g: &Graph, c: &Coloring) -> bool {
    is_rainbow_coloring(g, c, RainbowScope::All)
}

/// Least number of colours of a proper colouring, with a witness.
pub fn chromatic_coloring(g: &Graph, limits: &Limits) -> Result<(usize, Coloring)> {
    limits.check(g)?;
    let n = g.vertex_count();
    if n == 0 {
        return Err(Error::InvalidParameter(
            "chromatic number of the empty graph".into(),
        ));
    }
    let mut color = vec![usize::MAX; n];
    for k in 1..=n {
        color.fill(usize::MAX);
        if proper_extend(g, k, 0, 0, &mut color) {
            return Ok((
                k,
                Coloring {
                    assignment: color,
                    colors: k,
                },
            ));
        }
    }
    unreachable!("every graph on n vertices is n-colourable")
}

pub fn chromatic_number(g: &Graph, limits: &Limits) -> Result<usize> {
    chromatic_coloring(g, limits).map(|(k, _)| k)
}

/// Colours vertices `v..` with at most `k` colours; a vertex may open at
/// most one new colour beyond the `used` already present.
fn proper_extend(g: &Graph, k: usize, v: usize, used: usize, color: &mut [usize]) -> bool {
    if v == color.len() {
        return true;
    }
    for c in 0..k.min(used + 1) {
        if g.neighbours(v).iter().any(|&u| color[u] == c) {
            continue;
        }
        color[v] = c;
        if proper_extend(g, k, v + 1, used.max(c + 1), color) {
            return true;
        }
    }
    color[v] = usize::MAX;
    false
}

/// Searches for a surjective proper `t`-colouring in which every vertex in
/// `scope` lies in a rainbow neighbourhood.
pub fn find_rainbow_coloring(
    g: &Graph,
    t: usize,
    scope: RainbowScope,
    limits: &Limits,
) -> Result<Option<Coloring>> {
    limits.check(g)?;
    let n = g.vertex_count();
    if t == 0 || t > n {
        return Ok(None);
    }
    let mut search = RainbowSearch::new(g, t, scope);
    // A required vertex whose closed neighbourhood has fewer than t vertices
    // can never be rainbow.
    if (0..n).any(|x| search.required[x] && search.uncolored[x] < t) {
        return Ok(None);
    }
    if search.run(0) {
        Ok(Some(Coloring {
            assignment: search.color,
            colors: t,
        }))
    } else {
        Ok(None)
    }
}

pub fn find_j_coloring(g: &Graph, t: usize, limits: &Limits) -> Result<Option<Coloring>> {
    find_rainbow_coloring(g, t, RainbowScope::All, limits)
}

pub fn find_j_star_coloring(g: &Graph, t: usize, limits: &Limits) -> Result<Option<Coloring>> {
    find_rainbow_coloring(g, t, RainbowScope::Internal, limits)
}

/// Outcome of a J (or J*) solve over every admissible colour count.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct JResult {
    /// Colour counts `t` for which a colouring exists, increasing.
    pub spectrum: Vec<usize>,
    /// Largest element of the spectrum, if any.
    pub j_number: Option<usize>,
    /// Colouring achieving `j_number`.
    pub witness: Option<Coloring>,
}

impl JResult {
    pub fn is_colorable(&self) -> bool {
        !self.spectrum.is_empty()
    }

    pub fn contains(&self, t: usize) -> bool {
        self.spectrum.contains(&t)
    }
}

/// Runs the search for every `t` in `1..=δ(G)+1`. The spectrum need not be
/// an interval, so no value of `t` is skipped.
pub fn rainbow_solve(g: &Graph, scope: RainbowScope, limits: &Limits) -> Result<JResult> {
    limits.check(g)?;
    let delta = g.min_degree()?;
    let mut spectrum = Vec::new();
    let mut witness = None;
    for t in 1..=delta + 1 {
        if let Some(c) = find_rainbow_coloring(g, t, scope, limits)? {
            spectrum.push(t);
            witness = Some(c);
        }
    }
    Ok(JResult {
        j_number: spectrum.last().copied(),
        spectrum,
        witness,
    })
}

pub fn j_solve(g: &Graph, limits: &Limits) -> Result<JResult> {
    rainbow_solve(g, RainbowScope::All, limits)
}

pub fn j_star_solve(g: &Graph, limits: &Limits) -> Result<JResult> {
    rainbow_solve(g, RainbowScope::Internal, limits)
}

const UNCOLORED: usize = usize::MAX;

/// Backtracking state with per-vertex colour counts over closed
/// neighbourhoods, updated incrementally on assign/unassign.
struct RainbowSearch<'g> {
    g: &'g Graph,
    t: usize,
    required: Vec<bool>,
    color: Vec<usize>,
    /// `counts[x * t + c]`: coloured vertices of N[x] with colour c.
    counts: Vec<u32>,
    distinct: Vec<usize>,
    uncolored: Vec<usize>,
    class_size: Vec<usize>,
    used: usize,
}

impl<'g> RainbowSearch<'g> {
    fn new(g: &'g Graph, t: usize, scope: RainbowScope) -> Self {
        let n = g.vertex_count();
        RainbowSearch {
            g,
            t,
            required: (0..n).map(|v| scope.requires(g, v)).collect(),
            color: vec![UNCOLORED; n],
            counts: vec![0; n * t],
            distinct: vec![0; n],
            uncolored: (0..n).map(|v| g.degree(v) + 1).collect(),
            class_size: vec![0; t],
            used: 0,
        }
    }

    fn closed(&self, v: usize) -> impl Iterator<Item = usize> + 'g {
        std::iter::once(v).chain(self.g.neighbours(v).iter().copied())
    }

    fn assign(&mut self, v: usize, c: usize) {
        self.color[v] = c;
        for x in self.closed(v) {
            let slot = &mut self.counts[x * self.t + c];
            if *slot == 0 {
                self.distinct[x] += 1;
            }
            *slot += 1;
            self.uncolored[x] -= 1;
        }
        if self.class_size[c] == 0 {
            self.used += 1;
        }
        self.class_size[c] += 1;
    }

    fn unassign(&mut self, v: usize) {
        let c = self.color[v];
        self.color[v] = UNCOLORED;
        for x in self.closed(v) {
            let slot = &mut self.counts[x * self.t + c];
            *slot -= 1;
            if *slot == 0 {
                self.distinct[x] -= 1;
            }
            self.uncolored[x] += 1;
        }
        self.class_size[c] -= 1;
        if self.class_size[c] == 0 {
            self.used -= 1;
        }
    }

    /// After colouring `v`, only neighbourhoods containing `v` have changed.
    fn still_feasible(&self, v: usize) -> bool {
        let remaining = self.color.len() - v - 1;
        if self.used + remaining < self.t {
            return false;
        }
        self.closed(v)
            .all(|x| !self.required[x] || self.distinct[x] + self.uncolored[x] >= self.t)
    }

    fn run(&mut self, v: usize) -> bool {
        if v == self.color.len() {
            return true;
        }
        let top = if v == 0 { 1 } else { self.t };
        for c in 0..top {
            if self.g.neighbours(v).iter().any(|&u| self.color[u] == c) {
                continue;
            }
            self.assign(v, c);
            if self.still_feasible(v) && self.run(v + 1) {
                return true;
            }
            self.unassign(v);
        }
        false
    }
}
