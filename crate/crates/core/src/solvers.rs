//! Named solvers selectable at runtime (`chromatic`, `j`, `j-star`, `circular`).

use serde::Serialize;

use crate::circular::{circular_chromatic_number, KdColoring};
use crate::coloring::{
    chromatic_coloring, find_rainbow_coloring, rainbow_solve, Limits, RainbowScope,
};
use crate::error::Result;
use crate::graph::Graph;

#[derive(Debug, Clone, Copy, Default)]
pub struct SolveOptions {
    pub limits: Limits,
    /// Restrict a J / J* solve to one colour count.
    pub t: Option<usize>,
    /// Largest modulus tried by the circular solver.
    pub max_k: Option<usize>,
}

/// Solver results; every number is an exact integer.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(untagged)]
pub enum SolveOutput {
    Chromatic {
        chromatic_number: usize,
        witness: Vec<usize>,
    },
    Rainbow {
        spectrum: Vec<usize>,
        j_number: Option<usize>,
        #[serde(skip_serializing_if = "Option::is_none")]
        witness: Option<Vec<usize>>,
    },
    Circular {
        num: u64,
        den: u64,
        #[serde(skip_serializing_if = "Option::is_none")]
        witness: Option<KdColoring>,
    },
}

pub trait Solver: Send + Sync {
    fn name(&self) -> &'static str;

    fn solve(&self, g: &Graph, opts: &SolveOptions) -> Result<SolveOutput>;
}

pub struct Chromatic;

impl Solver for Chromatic {
    fn name(&self) -> &'static str {
        "chromatic"
    }

    fn solve(&self, g: &Graph, opts: &SolveOptions) -> Result<SolveOutput> {
        let (k, c) = chromatic_coloring(g, &opts.limits)?;
        Ok(SolveOutput::Chromatic {
            chromatic_number: k,
            witness: c.assignment().to_vec(),
        })
    }
}

pub struct Rainbow {
    name: &'static str,
    scope: RainbowScope,
}

impl Solver for Rainbow {
    fn name(&self) -> &'static str {
        self.name
    }

    fn solve(&self, g: &Graph, opts: &SolveOptions) -> Result<SolveOutput> {
        let (spectrum, j_number, witness) = match opts.t {
            Some(t) => match find_rainbow_coloring(g, t, self.scope, &opts.limits)? {
                Some(c) => (vec![t], Some(t), Some(c)),
                None => (vec![], None, None),
            },
            None => {
                let r = rainbow_solve(g, self.scope, &opts.limits)?;
                (r.spectrum, r.j_number, r.witness)
            }
        };
        Ok(SolveOutput::Rainbow {
            spectrum,
            j_number,
            witness: witness.map(|c| c.assignment().to_vec()),
        })
    }
}

pub struct Circular;

impl Solver for Circular {
    fn name(&self) -> &'static str {
        "circular"
    }

    fn solve(&self, g: &Graph, opts: &SolveOptions) -> Result<SolveOutput> {
        let r = circular_chromatic_number(g, &opts.limits, opts.max_k)?;
        Ok(SolveOutput::Circular {
            num: r.value.num(),
            den: r.value.den(),
            witness: r.witness,
        })
    }
}

pub fn registry() -> Vec<Box<dyn Solver>> {
    vec![
        Box::new(Chromatic),
        Box::new(Rainbow {
            name: "j",
            scope: RainbowScope::All,
        }),
        Box::new(Rainbow {
            name: "j-star",
            scope: RainbowScope::Internal,
        }),
        Box::new(Circular),
    ]
}

pub fn lookup(name: &str) -> Option<Box<dyn Solver>> {
    registry().into_iter().find(|s| s.name() == name)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::constructions::mycielskian;

    fn json(name: &str, g: &Graph, opts: &SolveOptions) -> String {
        let out = lookup(name).unwrap().solve(g, opts).unwrap();
        serde_json::to_string(&out).unwrap()
    }

    #[test]
    fn output_shapes() {
        let opts = SolveOptions::default();
        let mp7 = mycielskian(&Graph::path(7).unwrap());
        assert_eq!(json("j", &mp7, &opts), r#"{"spectrum":[],"j_number":null}"#);
        let c5 = Graph::cycle(5).unwrap();
        assert_eq!(
            json("circular", &c5, &opts),
            r#"{"num":5,"den":2,"witness":{"k":5,"d":2,"assignment":[0,2,4,1,3]}}"#
        );
        assert_eq!(
            json("chromatic", &c5, &opts),
            r#"{"chromatic_number":3,"witness":[0,1,0,1,2]}"#
        );
        assert_eq!(
            json("j-star", &Graph::path(4).unwrap(), &opts),
            r#"{"spectrum":[2],"j_number":2,"witness":[0,1,0,1]}"#
        );
    }

    #[test]
    fn fixed_t() {
        let opts = SolveOptions {
            t: Some(3),
            ..Default::default()
        };
        let c6 = Graph::cycle(6).unwrap();
        assert_eq!(
            json("j", &c6, &opts),
            r#"{"spectrum":[3],"j_number":3,"witness":[0,1,2,0,1,2]}"#
        );
    }

    #[test]
    fn unknown_solver() {
        assert!(lookup("sat").is_none());
        let names: Vec<_> = registry().iter().map(|s| s.name()).collect();
        assert_eq!(names, ["chromatic", "j", "j-star", "circular"]);
    }
}
