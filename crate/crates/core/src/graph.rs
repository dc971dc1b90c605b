//! Plumbing graph input: parsing, validation, canonical serialization.
//!
//! The file format is JSON:
//!
//! ```json
//! {"vertices":[{"id":"v1","euler":-2},{"id":"v2","euler":-3}],
//!  "edges":[["v1","v2"]]}
//! ```
//!
//! Ids are arbitrary strings. A vertex may carry a `genus` field, but only
//! the value `0` is accepted. Canonical serialization sorts vertices
//! lexicographically by id and lists each edge with its endpoints sorted.

use std::collections::{BTreeSet, HashMap, HashSet};
use std::fmt;

use num_traits::Signed;
use serde::{Deserialize, Serialize};

use crate::error::Error;
use crate::linalg;
use crate::Int;

#[derive(Debug, Clone, Serialize, Deserialize)]
struct VertexRecord {
    id: String,
    euler: i64,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    genus: Option<i64>,
}

#[derive(Debug, Clone, Serialize, Deserialize)]
struct GraphRecord {
    vertices: Vec<VertexRecord>,
    edges: Vec<(String, String)>,
}

/// A plumbing graph: vertices with Euler numbers, unordered edges.
///
/// Vertices are kept in file order; indices into `vertices` are used as the
/// vertex handles everywhere else in the crate.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PlumbingGraph {
    vertices: Vec<(String, i64)>,
    edges: Vec<(usize, usize)>,
}

/// One reason a parsed graph is not a valid input.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Violation {
    Empty,
    SelfLoop(String),
    DuplicateEdge(String, String),
    NotConnected,
    NotATree,
    EulerNotNegative(String),
    NotNegativeDefinite,
}

impl fmt::Display for Violation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Violation::Empty => write!(f, "graph has no vertices"),
            Violation::SelfLoop(id) => write!(f, "self-loop at {id:?}"),
            Violation::DuplicateEdge(a, b) => write!(f, "duplicate edge {a:?}-{b:?}"),
            Violation::NotConnected => write!(f, "graph is not connected"),
            Violation::NotATree => write!(f, "graph contains a cycle"),
            Violation::EulerNotNegative(id) => write!(f, "vertex {id:?} has Euler number > -1"),
            Violation::NotNegativeDefinite => write!(f, "intersection matrix is not negative definite"),
        }
    }
}

impl Violation {
    pub fn kind(&self) -> &'static str {
        match self {
            Violation::Empty => "Empty",
            Violation::SelfLoop(_) => "SelfLoop",
            Violation::DuplicateEdge(_, _) => "DuplicateEdge",
            Violation::NotConnected => "NotConnected",
            Violation::NotATree => "NotATree",
            Violation::EulerNotNegative(_) => "EulerNotNegative",
            Violation::NotNegativeDefinite => "NotNegativeDefinite",
        }
    }
}

/// Outcome of [`PlumbingGraph::validate`]: either ok or the list of violations.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ValidationReport {
    pub violations: Vec<Violation>,
}

impl ValidationReport {
    pub fn ok(&self) -> bool {
        self.violations.is_empty()
    }
}

impl PlumbingGraph {
    /// Builds a graph from vertex and edge lists, running the same id checks
    /// as the parser. Edges are given by vertex ids.
    pub fn new<S: AsRef<str>>(vertices: &[(S, i64)], edges: &[(S, S)]) -> Result<Self, Error> {
        let mut index = HashMap::new();
        let mut vs = Vec::with_capacity(vertices.len());
        for (id, euler) in vertices {
            let id = id.as_ref().to_owned();
            if index.insert(id.clone(), vs.len()).is_some() {
                return Err(Error::DuplicateId(id));
            }
            vs.push((id, *euler));
        }
        let mut es = Vec::with_capacity(edges.len());
        for (a, b) in edges {
            let ia = *index
                .get(a.as_ref())
                .ok_or_else(|| Error::UnknownEndpoint(a.as_ref().to_owned()))?;
            let ib = *index
                .get(b.as_ref())
                .ok_or_else(|| Error::UnknownEndpoint(b.as_ref().to_owned()))?;
            es.push((ia.min(ib), ia.max(ib)));
        }
        Ok(PlumbingGraph { vertices: vs, edges: es })
    }

    /// Parses the JSON graph format. Checks well-formedness, id uniqueness,
    /// edge endpoints and the genus-zero hypothesis; everything else is left
    /// to [`PlumbingGraph::validate`].
    pub fn parse(text: &str) -> Result<Self, Error> {
        let rec: GraphRecord =
            serde_json::from_str(text).map_err(|e| Error::Syntax(e.to_string()))?;
        for v in &rec.vertices {
            if let Some(g) = v.genus {
                if g != 0 {
                    return Err(Error::NonZeroGenus(v.id.clone()));
                }
            }
        }
        let vertices: Vec<(String, i64)> =
            rec.vertices.iter().map(|v| (v.id.clone(), v.euler)).collect();
        let edges: Vec<(String, String)> = rec.edges;
        Self::new(
            &vertices.iter().map(|(id, e)| (id.as_str(), *e)).collect::<Vec<_>>(),
            &edges.iter().map(|(a, b)| (a.as_str(), b.as_str())).collect::<Vec<_>>(),
        )
    }

    /// Canonical serialization: vertices sorted by id, each edge sorted,
    /// edge list sorted. `parse(serialize(g))` reproduces the canonical form.
    pub fn serialize(&self) -> String {
        let mut vs: Vec<VertexRecord> = self
            .vertices
            .iter()
            .map(|(id, e)| VertexRecord { id: id.clone(), euler: *e, genus: None })
            .collect();
        vs.sort_by(|a, b| a.id.cmp(&b.id));
        let mut es: Vec<(String, String)> = self
            .edges
            .iter()
            .map(|&(a, b)| {
                let (x, y) = (self.vertices[a].0.clone(), self.vertices[b].0.clone());
                if x <= y {
                    (x, y)
                } else {
                    (y, x)
                }
            })
            .collect();
        es.sort();
        serde_json::to_string(&GraphRecord { vertices: vs, edges: es })
            .expect("graph record serializes")
    }

    pub fn len(&self) -> usize {
        self.vertices.len()
    }

    pub fn is_empty(&self) -> bool {
        self.vertices.is_empty()
    }

    pub fn vertex_id(&self, v: usize) -> &str {
        &self.vertices[v].0
    }

    pub fn euler(&self, v: usize) -> i64 {
        self.vertices[v].1
    }

    pub fn vertex_index(&self, id: &str) -> Option<usize> {
        self.vertices.iter().position(|(i, _)| i == id)
    }

    /// Edges as index pairs `(a, b)` with `a < b`, in file order.
    pub fn edges(&self) -> &[(usize, usize)] {
        &self.edges
    }

    pub fn valencies(&self) -> Vec<usize> {
        let mut deg = vec![0usize; self.len()];
        for &(a, b) in &self.edges {
            deg[a] += 1;
            deg[b] += 1;
        }
        deg
    }

    /// The intersection matrix: Euler numbers on the diagonal, one off the
    /// diagonal per edge, zero elsewhere.
    pub fn intersection_matrix(&self) -> Vec<Vec<Int>> {
        let n = self.len();
        let mut m = vec![vec![Int::from(0); n]; n];
        for v in 0..n {
            m[v][v] = Int::from(self.vertices[v].1);
        }
        for &(a, b) in &self.edges {
            m[a][b] = Int::from(1);
            m[b][a] = Int::from(1);
        }
        m
    }

    /// Checks the hypotheses: connected tree, Euler numbers <= -1 and a
    /// negative-definite intersection matrix. Negative definiteness is
    /// decided exactly, by the signs of the leading principal minors of the
    /// negated matrix.
    pub fn validate(&self) -> ValidationReport {
        let mut violations = Vec::new();
        let n = self.len();
        if n == 0 {
            return ValidationReport { violations: vec![Violation::Empty] };
        }

        let mut seen = HashSet::new();
        for &(a, b) in &self.edges {
            if a == b {
                violations.push(Violation::SelfLoop(self.vertices[a].0.clone()));
                continue;
            }
            if !seen.insert((a, b)) {
                violations.push(Violation::DuplicateEdge(
                    self.vertices[a].0.clone(),
                    self.vertices[b].0.clone(),
                ));
            }
        }

        // component count over the deduplicated loop-free edge set
        let mut adj = vec![BTreeSet::new(); n];
        for &(a, b) in &seen {
            adj[a].insert(b);
            adj[b].insert(a);
        }
        let mut comp = vec![usize::MAX; n];
        let mut ncomp = 0usize;
        for start in 0..n {
            if comp[start] != usize::MAX {
                continue;
            }
            let mut stack = vec![start];
            while let Some(v) = stack.pop() {
                if comp[v] != usize::MAX {
                    continue;
                }
                comp[v] = ncomp;
                stack.extend(adj[v].iter().copied());
            }
            ncomp += 1;
        }
        if ncomp > 1 {
            violations.push(Violation::NotConnected);
        }
        // a forest has exactly |V| - #components simple edges
        if seen.len() > n - ncomp {
            violations.push(Violation::NotATree);
        }

        for (id, e) in &self.vertices {
            if *e > -1 {
                violations.push(Violation::EulerNotNegative(id.clone()));
            }
        }

        let neg = linalg::negate(&self.intersection_matrix());
        let minors = linalg::leading_principal_minors(&neg);
        if !minors.iter().all(|m| m.is_positive()) {
            violations.push(Violation::NotNegativeDefinite);
        }

        ValidationReport { violations }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn graph(vertices: &[(&str, i64)], edges: &[(&str, &str)]) -> PlumbingGraph {
        PlumbingGraph::new(vertices, edges).unwrap()
    }

    #[test]
    fn parses_single_vertex() {
        let g = PlumbingGraph::parse(r#"{"vertices":[{"id":"v","euler":-2}],"edges":[]}"#).unwrap();
        assert_eq!(g.len(), 1);
        assert_eq!(g.euler(0), -2);
        assert!(g.validate().ok());
    }

    #[test]
    fn parses_twin_m8_fixture() {
        let text = std::fs::read_to_string(concat!(
            env!("CARGO_MANIFEST_DIR"),
            "/fixtures/twin_m8.json"
        ))
        .unwrap();
        let g = PlumbingGraph::parse(&text).unwrap();
        assert_eq!(g.len(), 8);
        let chain: Vec<i64> = ["z1", "n1", "m1", "m2", "n2", "z3"]
            .iter()
            .map(|id| g.euler(g.vertex_index(id).unwrap()))
            .collect();
        assert_eq!(chain, vec![-2, -1, -8, -8, -1, -2]);
        assert_eq!(g.euler(g.vertex_index("z2").unwrap()), -3);
        assert_eq!(g.euler(g.vertex_index("z4").unwrap()), -3);
        assert!(g.validate().ok());
    }

    #[test]
    fn rejects_unknown_endpoint() {
        let err = PlumbingGraph::parse(
            r#"{"vertices":[{"id":"v","euler":-2}],"edges":[["v","w"]]}"#,
        )
        .unwrap_err();
        assert_eq!(err, Error::UnknownEndpoint("w".into()));
    }

    #[test]
    fn rejects_duplicate_id() {
        let err = PlumbingGraph::parse(
            r#"{"vertices":[{"id":"v","euler":-2},{"id":"v","euler":-3}],"edges":[]}"#,
        )
        .unwrap_err();
        assert_eq!(err, Error::DuplicateId("v".into()));
    }

    #[test]
    fn rejects_nonzero_genus() {
        let err = PlumbingGraph::parse(
            r#"{"vertices":[{"id":"v","euler":-2,"genus":1}],"edges":[]}"#,
        )
        .unwrap_err();
        assert_eq!(err, Error::NonZeroGenus("v".into()));
        // genus 0 is accepted
        PlumbingGraph::parse(r#"{"vertices":[{"id":"v","euler":-2,"genus":0}],"edges":[]}"#)
            .unwrap();
    }

    #[test]
    fn validates_single_m1() {
        assert!(graph(&[("v", -1)], &[]).validate().ok());
    }

    #[test]
    fn rejects_zero_determinant_pair() {
        let rep = graph(&[("a", -1), ("b", -1)], &[("a", "b")]).validate();
        assert!(rep.violations.contains(&Violation::NotNegativeDefinite));
    }

    #[test]
    fn rejects_triangle() {
        let rep = graph(
            &[("a", -2), ("b", -2), ("c", -2)],
            &[("a", "b"), ("b", "c"), ("c", "a")],
        )
        .validate();
        assert!(rep.violations.contains(&Violation::NotATree));
    }

    #[test]
    fn rejects_disconnected() {
        let rep = graph(&[("a", -2), ("b", -2)], &[]).validate();
        assert!(rep.violations.contains(&Violation::NotConnected));
    }

    #[test]
    fn rejects_nonnegative_euler() {
        let rep = graph(&[("a", 0)], &[]).validate();
        assert!(rep.violations.contains(&Violation::EulerNotNegative("a".into())));
        assert!(rep.violations.contains(&Violation::NotNegativeDefinite));
    }

    #[test]
    fn rejects_empty() {
        let rep = PlumbingGraph::parse(r#"{"vertices":[],"edges":[]}"#).unwrap().validate();
        assert_eq!(rep.violations, vec![Violation::Empty]);
    }

    #[test]
    fn canonical_roundtrip() {
        let g = graph(&[("b", -3), ("a", -2), ("c", -7)], &[("c", "a"), ("b", "a")]);
        let text = g.serialize();
        let reparsed = PlumbingGraph::parse(&text).unwrap();
        assert_eq!(reparsed.serialize(), text);
        // canonical form sorts ids
        assert_eq!(reparsed.vertex_id(0), "a");
        assert_eq!(reparsed.vertex_id(1), "b");
        assert_eq!(reparsed.vertex_id(2), "c");
    }

    #[test]
    fn minors_match_cofactor_expansion_on_small_graphs() {
        // independent exact check of the minor computation
        let cases = [
            graph(&[("a", -2)], &[]),
            graph(&[("a", -2), ("b", -3)], &[("a", "b")]),
            graph(&[("a", -2), ("b", -2), ("c", -2)], &[("a", "b"), ("b", "c")]),
            graph(
                &[("a", -1), ("b", -2), ("c", -3), ("d", -7)],
                &[("a", "b"), ("a", "c"), ("a", "d")],
            ),
            graph(
                &[("a", -2), ("b", -7), ("c", -1), ("d", -2), ("e", -3)],
                &[("a", "b"), ("b", "c"), ("c", "d"), ("c", "e")],
            ),
            graph(
                &[("a", -2), ("b", -1), ("c", -8), ("d", -8), ("e", -1), ("f", -2)],
                &[("a", "b"), ("b", "c"), ("c", "d"), ("d", "e"), ("e", "f")],
            ),
        ];
        for g in &cases {
            let neg = linalg::negate(&g.intersection_matrix());
            let minors = linalg::leading_principal_minors(&neg);
            for k in 1..=g.len() {
                let sub: Vec<Vec<Int>> =
                    (0..k).map(|i| neg[i][..k].to_vec()).collect();
                assert_eq!(minors[k - 1], linalg::det_cofactor(&sub), "minor {k} of {g:?}");
            }
            assert!(minors.iter().all(|m| m.is_positive()));
        }
    }
}
