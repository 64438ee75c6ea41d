//! Mycielski-type constructions.
//!
//! Every construction is a [`Construction`] registered by name; callers
//! select one at runtime with [`lookup`]. Vertex numbering is fixed:
//! originals `0..n`, twins `n..2n`, then the root `2n` (Mycielskian, crib)
//! or the third layer `2n..3n` (Federico).

use crate::graph::{Graph, Label};

pub trait Construction: Send + Sync {
    fn name(&self) -> &'static str;

    fn apply(&self, base: &Graph) -> Graph;
}

/// Shared edge set of the Mycielskian without the root: the base edges on
/// the originals plus `v_i u_j`, `v_j u_i` for every base edge `v_i v_j`.
fn twin_layer(base: &Graph) -> Vec<(usize, usize)> {
    let n = base.vertex_count();
    base.edges()
        .iter()
        .flat_map(|&(i, j)| [(i, j), (i, n + j), (j, n + i)])
        .collect()
}

fn twin_labels(n: usize) -> Vec<Label> {
    (0..n)
        .map(Label::Original)
        .chain((0..n).map(Label::Twin))
        .collect()
}

fn with_root_labels(n: usize) -> Vec<Label> {
    let mut labels = twin_labels(n);
    labels.push(Label::Root);
    labels
}

pub fn mycielskian(base: &Graph) -> Graph {
    let n = base.vertex_count();
    let root = 2 * n;
    let mut edges = twin_layer(base);
    edges.extend((0..n).map(|i| (n + i, root)));
    Graph::from_parts(2 * n + 1, edges, with_root_labels(n))
}

/// Mycielskian with the root also joined to every original vertex.
pub fn crib(base: &Graph) -> Graph {
    let n = base.vertex_count();
    let root = 2 * n;
    let mut edges = twin_layer(base);
    edges.extend((0..2 * n).map(|v| (v, root)));
    Graph::from_parts(2 * n + 1, edges, with_root_labels(n))
}

/// Mycielskian with the root deleted.
pub fn shadow(base: &Graph) -> Graph {
    let n = base.vertex_count();
    Graph::from_parts(2 * n, twin_layer(base), twin_labels(n))
}

/// Three layers: a copy of the base on the originals, a second copy on the
/// `w` layer, twins joined to the `w` layer along base adjacencies, and the
/// perfect matching `v_i u_i`.
///
/// The construction is defined for any simple graph; triangle-freeness of
/// the base is only a hypothesis of the theorems about it.
pub fn federico(base: &Graph) -> Graph {
    let n = base.vertex_count();
    let (twin, plain) = (n, 2 * n);
    let mut edges = Vec::with_capacity(4 * base.edge_count() + n);
    for &(i, j) in base.edges() {
        edges.push((i, j));
        edges.push((plain + i, plain + j));
        edges.push((twin + i, plain + j));
        edges.push((twin + j, plain + i));
    }
    edges.extend((0..n).map(|i| (i, twin + i)));
    let mut labels = twin_labels(n);
    labels.extend((0..n).map(Label::Plain));
    Graph::from_parts(3 * n, edges, labels)
}

macro_rules! construction {
    ($ty:ident, $name:literal, $f:ident) => {
        pub struct $ty;

        impl Construction for $ty {
            fn name(&self) -> &'static str {
                $name
            }

            fn apply(&self, base: &Graph) -> Graph {
                $f(base)
            }
        }
    };
}

construction!(Mycielskian, "mycielskian", mycielskian);
construction!(Crib, "crib", crib);
construction!(Shadow, "shadow", shadow);
construction!(Federico, "federico", federico);

pub fn registry() -> Vec<Box<dyn Construction>> {
    vec![
        Box::new(Mycielskian),
        Box::new(Crib),
        Box::new(Shadow),
        Box::new(Federico),
    ]
}

pub fn names() -> Vec<&'static str> {
    registry().iter().map(|c| c.name()).collect()
}

pub fn lookup(name: &str) -> Option<Box<dyn Construction>> {
    registry().into_iter().find(|c| c.name() == name)
}
