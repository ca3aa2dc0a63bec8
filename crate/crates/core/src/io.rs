//! JSON wire formats for graphs and netflow vectors.
//!
//! ```json
//! { "n_plus_1": 3, "kind": "A", "edges": [ { "i": 1, "j": 2, "sign": "-", "mult": 1 } ] }
//! { "a": [1, 0, -1] }
//! ```

use serde::{Deserialize, Serialize};

use crate::graph::{EdgeSpec, GraphKind, NetflowVector, Sign, SignedMultigraph};

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct EdgeJson {
    pub i: usize,
    pub j: usize,
    pub sign: Sign,
    pub mult: u32,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct GraphJson {
    pub n_plus_1: usize,
    pub kind: GraphKind,
    pub edges: Vec<EdgeJson>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct NetflowJson {
    pub a: Vec<i64>,
}

impl From<&SignedMultigraph> for GraphJson {
    fn from(g: &SignedMultigraph) -> Self {
        GraphJson {
            n_plus_1: g.n_plus_1(),
            kind: g.kind(),
            edges: g
                .edge_classes()
                .map(|(e, mult)| EdgeJson {
                    i: e.i,
                    j: e.j,
                    sign: e.sign,
                    mult,
                })
                .collect(),
        }
    }
}

impl GraphJson {
    pub fn to_graph(&self) -> crate::Result<SignedMultigraph> {
        let specs: Vec<EdgeSpec> = self
            .edges
            .iter()
            .map(|e| EdgeSpec::new(e.i, e.j, e.sign, e.mult))
            .collect();
        SignedMultigraph::build(self.n_plus_1, self.kind, &specs)
    }
}

/// A parse failure, with the JSON path of the offending field.
#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
#[error("at `{path}`: {message}")]
pub struct ParseError {
    pub path: String,
    pub message: String,
}

fn parse<T: for<'de> Deserialize<'de>>(text: &str) -> Result<T, ParseError> {
    let de = &mut serde_json::Deserializer::from_str(text);
    serde_path_to_error::deserialize(de).map_err(|err| ParseError {
        path: err.path().to_string(),
        message: err.into_inner().to_string(),
    })
}

pub fn parse_graph(text: &str) -> Result<GraphJson, ParseError> {
    parse(text)
}

/// Accepts either `{"a": [...]}` or a bare array `[...]`.
pub fn parse_netflow(text: &str) -> Result<NetflowVector, ParseError> {
    let trimmed = text.trim_start();
    if trimmed.starts_with('[') {
        parse::<Vec<i64>>(text).map(NetflowVector::new)
    } else {
        parse::<NetflowJson>(text).map(|n| NetflowVector::new(n.a))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::fixtures::g3;

    #[test]
    fn graph_round_trip() {
        let g = g3();
        let text = serde_json::to_string(&GraphJson::from(&g)).unwrap();
        assert_eq!(
            text,
            r#"{"n_plus_1":3,"kind":"A","edges":[{"i":1,"j":2,"sign":"-","mult":1},{"i":1,"j":3,"sign":"-","mult":1},{"i":2,"j":3,"sign":"-","mult":1}]}"#
        );
        assert_eq!(parse_graph(&text).unwrap().to_graph().unwrap(), g);
    }

    #[test]
    fn reports_offending_field() {
        let err = parse_graph(r#"{"n_plus_1":3,"kind":"A","edges":[{"i":1,"j":2,"sign":"x","mult":1}]}"#).unwrap_err();
        assert_eq!(err.path, "edges[0].sign");
        let err = parse_graph(r#"{"n_plus_1":3,"kind":"B","edges":[]}"#).unwrap_err();
        assert_eq!(err.path, "kind");
        let err = parse_graph(r#"{"n_plus_1":3,"kind":"A","edges":[{"i":1,"j":2,"sign":"-"}]}"#).unwrap_err();
        assert!(err.message.contains("mult"), "{err}");
    }

    #[test]
    fn netflow_forms() {
        assert_eq!(parse_netflow("[1,0,-1]").unwrap().as_slice(), &[1, 0, -1]);
        assert_eq!(parse_netflow(r#"{"a":[2,-2]}"#).unwrap().as_slice(), &[2, -2]);
        assert_eq!(parse_netflow(r#"{"a":[2,"x"]}"#).unwrap_err().path, "a[1]");
    }
}
