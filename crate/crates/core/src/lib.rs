//! Exact search for J-colourings and related parameters of Mycielski-type
//! graphs.
//!
//! The crate builds Mycielskian, crib, shadow and Federico graphs, decides
//! J- and J*-colourability over the full colour-count spectrum, computes
//! chromatic and circular chromatic numbers exactly, searches for minimum
//! edge augmentations (J-paucity), and replays known statements about these
//! quantities over parametrised families.

pub mod circular;
pub mod coloring;
pub mod constructions;
pub mod error;
pub mod graph;
pub mod io;
pub mod isomorphism;
pub mod paucity;
pub mod solvers;
pub mod verify;

pub use coloring::{Coloring, JResult, Limits};
pub use error::{Error, Result};
pub use graph::{Family, Graph, Label, VertexSet};
