//! Backtracking isomorphism test for small graphs.

use crate::error::{Error, Result};
use crate::graph::Graph;

/// Largest vertex count accepted by [`are_isomorphic`].
pub const MAX_ISOMORPHISM_VERTICES: usize = 12;

pub fn are_isomorphic(g: &Graph, h: &Graph) -> Result<bool> {
    for graph in [g, h] {
        if graph.vertex_count() > MAX_ISOMORPHISM_VERTICES {
            return Err(Error::SizeLimit {
                what: "isomorphism vertex count".into(),
                actual: graph.vertex_count(),
                limit: MAX_ISOMORPHISM_VERTICES,
            });
        }
    }
    if g.vertex_count() != h.vertex_count() || g.edge_count() != h.edge_count() {
        return Ok(false);
    }
    let mut gd: Vec<usize> = (0..g.vertex_count()).map(|v| g.degree(v)).collect();
    let mut hd: Vec<usize> = (0..h.vertex_count()).map(|v| h.degree(v)).collect();
    gd.sort_unstable();
    hd.sort_unstable();
    if gd != hd {
        return Ok(false);
    }
    let mut mapping = vec![usize::MAX; g.vertex_count()];
    let mut used = vec![false; h.vertex_count()];
    Ok(extend(g, h, 0, &mut mapping, &mut used))
}

fn extend(g: &Graph, h: &Graph, v: usize, mapping: &mut [usize], used: &mut [bool]) -> bool {
    if v == g.vertex_count() {
        return true;
    }
    for image in 0..h.vertex_count() {
        if used[image] || h.degree(image) != g.degree(v) {
            continue;
        }
        // Adjacency to every already-mapped vertex must agree.
        let consistent = (0..v).all(|u| g.has_edge(u, v) == h.has_edge(mapping[u], image));
        if !consistent {
            continue;
        }
        mapping[v] = image;
        used[image] = true;
        if extend(g, h, v + 1, mapping, used) {
            return true;
        }
        used[image] = false;
    }
    mapping[v] = usize::MAX;
    false
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn path_is_not_triangle() {
        let p3 = Graph::path(3).unwrap();
        let c3 = Graph::cycle(3).unwrap();
        assert_eq!(are_isomorphic(&p3, &c3), Ok(false));
        assert_eq!(are_isomorphic(&p3, &p3), Ok(true));
    }

    #[test]
    fn same_degrees_different_structure() {
        // C_6 and two disjoint triangles are both 2-regular on six vertices.
        let c6 = Graph::cycle(6).unwrap();
        let two_triangles =
            Graph::from_edge_list(6, [(0, 1), (1, 2), (0, 2), (3, 4), (4, 5), (3, 5)]).unwrap();
        assert_eq!(are_isomorphic(&c6, &two_triangles), Ok(false));
    }

    #[test]
    fn size_guard() {
        let big = Graph::path(13).unwrap();
        assert!(matches!(
            are_isomorphic(&big, &big),
            Err(Error::SizeLimit { .. })
        ));
    }
}
