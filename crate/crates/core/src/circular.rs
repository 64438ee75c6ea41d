//! (k,d)-colourings and the circular chromatic number.
//!
//! A (k,d)-colouring maps vertices into `0..k` so that adjacent vertices are
//! at circular distance at least `d`. The circular chromatic number is the
//! least `k/d` over all feasible pairs, returned as an exact [`Rational`].

use std::cmp::Ordering;
use std::fmt;

use serde::Serialize;

use crate::coloring::Limits;
use crate::error::{Error, Result};
use crate::graph::Graph;

/// Positive fraction in lowest terms.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
pub struct Rational {
    num: u64,
    den: u64,
}

fn gcd(mut a: u64, mut b: u64) -> u64 {
    while b != 0 {
        (a, b) = (b, a % b);
    }
    a
}

impl Rational {
    pub fn new(num: u64, den: u64) -> Result<Rational> {
        if num == 0 || den == 0 {
            return Err(Error::InvalidParameter(format!(
                "rational {num}/{den} must be positive"
            )));
        }
        let g = gcd(num, den);
        Ok(Rational {
            num: num / g,
            den: den / g,
        })
    }

    pub fn integer(n: u64) -> Rational {
        Rational::new(n, 1).expect("positive integer")
    }

    pub fn num(&self) -> u64 {
        self.num
    }

    pub fn den(&self) -> u64 {
        self.den
    }
}

impl Ord for Rational {
    fn cmp(&self, other: &Self) -> Ordering {
        (self.num as u128 * other.den as u128).cmp(&(other.num as u128 * self.den as u128))
    }
}

impl PartialOrd for Rational {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for Rational {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}/{}", self.num, self.den)
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct KdColoring {
    pub k: usize,
    pub d: usize,
    pub assignment: Vec<usize>,
}

impl KdColoring {
    pub fn new(k: usize, d: usize, assignment: Vec<usize>) -> Result<KdColoring> {
        check_kd(k, d)?;
        if let Some(&a) = assignment.iter().find(|&&a| a >= k) {
            return Err(Error::InvalidParameter(format!("value {a} outside 0..{k}")));
        }
        Ok(KdColoring { k, d, assignment })
    }

    /// Multiplies modulus, distance and every value by `factor`.
    pub fn scaled(&self, factor: usize) -> KdColoring {
        KdColoring {
            k: self.k * factor,
            d: self.d * factor,
            assignment: self.assignment.iter().map(|&a| a * factor).collect(),
        }
    }

    pub fn ratio(&self) -> Rational {
        Rational::new(self.k as u64, self.d as u64).expect("k, d positive")
    }
}

fn check_kd(k: usize, d: usize) -> Result<()> {
    if d == 0 || k < 2 * d {
        Err(Error::InvalidParameter(format!(
            "(k,d) = ({k},{d}) must satisfy k >= 2d >= 2"
        )))
    } else {
        Ok(())
    }
}

pub fn circular_distance(a: usize, b: usize, k: usize) -> usize {
    let diff = a.abs_diff(b);
    diff.min(k - diff)
}

pub fn is_kd_coloring(g: &Graph, f: &KdColoring) -> bool {
    f.assignment.len() == g.vertex_count()
        && f.assignment.iter().all(|&a| a < f.k)
        && g.edges()
            .iter()
            .all(|&(i, j)| circular_distance(f.assignment[i], f.assignment[j], f.k) >= f.d)
}

/// Backtracking in vertex index order; vertex 0 is fixed at 0, which loses
/// nothing since rotating every value preserves circular distances.
pub fn find_kd_coloring(
    g: &Graph,
    k: usize,
    d: usize,
    limits: &Limits,
) -> Result<Option<KdColoring>> {
    check_kd(k, d)?;
    limits.check(g)?;
    let mut values = vec![usize::MAX; g.vertex_count()];
    if kd_extend(g, k, d, 0, &mut values) {
        Ok(Some(KdColoring {
            k,
            d,
            assignment: values,
        }))
    } else {
        Ok(None)
    }
}

fn kd_extend(g: &Graph, k: usize, d: usize, v: usize, values: &mut [usize]) -> bool {
    if v == values.len() {
        return true;
    }
    let top = if v == 0 { 1 } else { k };
    for a in 0..top {
        let clash = g
            .neighbours(v)
            .iter()
            .any(|&u| values[u] != usize::MAX && circular_distance(values[u], a, k) < d);
        if clash {
            continue;
        }
        values[v] = a;
        if kd_extend(g, k, d, v + 1, values) {
            return true;
        }
    }
    values[v] = usize::MAX;
    false
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CircularResult {
    pub value: Rational,
    /// Absent only for edgeless graphs, whose value is 1 by convention.
    pub witness: Option<KdColoring>,
}

/// Coprime pairs `(k, d)` with `2 <= k <= max_k`, `1 <= d <= k/2`, in
/// increasing order of `k/d`.
pub fn candidate_pairs(max_k: usize) -> Vec<(usize, usize)> {
    let mut pairs: Vec<(usize, usize)> = (2..=max_k)
        .flat_map(|k| (1..=k / 2).map(move |d| (k, d)))
        .filter(|&(k, d)| gcd(k as u64, d as u64) == 1)
        .collect();
    pairs.sort_by(|a, b| (a.0 * b.1).cmp(&(b.0 * a.1)));
    pairs
}

/// Exact circular chromatic number. The modulus is searched up to `max_k`,
/// defaulting to the vertex count, which always suffices.
pub fn circular_chromatic_number(
    g: &Graph,
    limits: &Limits,
    max_k: Option<usize>,
) -> Result<CircularResult> {
    limits.check(g)?;
    if g.edge_count() == 0 {
        return Ok(CircularResult {
            value: Rational::integer(1),
            witness: None,
        });
    }
    let max_k = max_k.unwrap_or(g.vertex_count());
    for (k, d) in candidate_pairs(max_k) {
        if let Some(f) = find_kd_coloring(g, k, d, limits)? {
            return Ok(CircularResult {
                value: f.ratio(),
                witness: Some(f),
            });
        }
    }
    Err(Error::SizeLimit {
        what: "modulus k needed for a (k,d)-colouring".into(),
        actual: max_k + 1,
        limit: max_k,
    })
}

/// Extends a (k,d)-colouring of `G` to its Federico graph: originals keep
/// their value, and both `u_i` and `w_i` get `f(v_i) - d (mod k)`.
pub fn lift_to_federico(f: &KdColoring) -> KdColoring {
    let n = f.assignment.len();
    let shifted: Vec<usize> = f
        .assignment
        .iter()
        .map(|&a| (a + f.k - f.d % f.k) % f.k)
        .collect();
    let mut assignment = Vec::with_capacity(3 * n);
    assignment.extend_from_slice(&f.assignment);
    assignment.extend_from_slice(&shifted);
    assignment.extend_from_slice(&shifted);
    KdColoring {
        k: f.k,
        d: f.d,
        assignment,
    }
}
