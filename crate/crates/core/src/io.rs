//! Graph JSON and DOT formats.
//!
//! The canonical JSON document is
//! `{"n": 3, "edges": [[0,1],[1,2]], "labels": ["v1","v2","w"]}` with each
//! edge written `[i, j]`, `i < j`, edges sorted, and `labels` omitted when
//! the graph carries none.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::graph::{Graph, Label};

#[derive(Debug, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct GraphDoc {
    n: usize,
    edges: Vec<[usize; 2]>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    labels: Option<Vec<String>>,
}

pub fn to_json(g: &Graph) -> String {
    let doc = GraphDoc {
        n: g.vertex_count(),
        edges: g.edges().iter().map(|&(i, j)| [i, j]).collect(),
        labels: g
            .labels()
            .map(|ls| ls.iter().map(Label::to_string).collect()),
    };
    serde_json::to_string(&doc).expect("graph document serialises")
}

pub fn from_json(text: &str) -> Result<Graph> {
    let doc: GraphDoc = serde_json::from_str(text).map_err(|e| Error::Malformed(e.to_string()))?;
    let field = |e: Error| match e {
        Error::InvalidEdge(..) | Error::OutOfRange { .. } => {
            Error::Malformed(format!("edges: {e}"))
        }
        other => other,
    };
    let g = Graph::from_edge_list(doc.n, doc.edges.iter().map(|&[i, j]| (i, j))).map_err(field)?;
    match doc.labels {
        None => Ok(g),
        Some(raw) => {
            let labels = raw
                .iter()
                .map(|s| s.parse())
                .collect::<Result<Vec<Label>>>()?;
            g.with_labels(labels)
        }
    }
}

/// Undirected DOT; vertices are named by label when present, else by index.
pub fn to_dot(g: &Graph) -> String {
    let mut out = String::from("graph G {\n");
    for v in 0..g.vertex_count() {
        out.push_str(&format!("  \"{}\";\n", g.vertex_name(v)));
    }
    for &(i, j) in g.edges() {
        out.push_str(&format!(
            "  \"{}\" -- \"{}\";\n",
            g.vertex_name(i),
            g.vertex_name(j)
        ));
    }
    out.push_str("}\n");
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::constructions::mycielskian;

    #[test]
    fn canonical_json() {
        let g = Graph::from_edge_list(3, [(2, 1), (0, 1)]).unwrap();
        assert_eq!(to_json(&g), r#"{"n":3,"edges":[[0,1],[1,2]]}"#);
    }

    #[test]
    fn labels_survive() {
        let g = mycielskian(&Graph::path(2).unwrap());
        let text = to_json(&g);
        assert!(text.contains(r#""labels":["v1","v2","u1","u2","w"]"#));
        assert_eq!(from_json(&text).unwrap(), g);
    }

    #[test]
    fn malformed_inputs_name_the_field() {
        let e = from_json(r#"{"edges":[]}"#).unwrap_err().to_string();
        assert!(e.contains("`n`"), "{e}");
        let e = from_json(r#"{"n":2,"edges":[[0,5]]}"#)
            .unwrap_err()
            .to_string();
        assert!(e.contains("edges"), "{e}");
        let e = from_json(r#"{"n":2,"edges":[[1,1]]}"#)
            .unwrap_err()
            .to_string();
        assert!(e.contains("edges"), "{e}");
        let e = from_json(r#"{"n":1,"edges":[],"labels":["zz"]}"#)
            .unwrap_err()
            .to_string();
        assert!(e.contains("labels"), "{e}");
    }

    #[test]
    fn dot_uses_labels() {
        let g = mycielskian(&Graph::complete(2).unwrap());
        let dot = to_dot(&g);
        assert!(dot.starts_with("graph G {"));
        assert!(dot.contains("\"u1\" -- \"w\";"));
        let plain = to_dot(&Graph::path(2).unwrap());
        assert!(plain.contains("\"0\" -- \"1\";"));
    }
}
