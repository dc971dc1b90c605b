//! Graph builders shared by the unit tests.

use crate::graph::PlumbingGraph;
use crate::lattice::LatticeContext;
use crate::{Int, Rat};

pub fn rat(p: i64, q: i64) -> Rat {
    Rat::new(Int::from(p), Int::from(q))
}

pub fn single(p: i64) -> PlumbingGraph {
    PlumbingGraph::new(&[("v", -p)], &[]).unwrap()
}

/// A path graph with the given Euler numbers, ids `v0`, `v1`, ...
pub fn string(eulers: &[i64]) -> PlumbingGraph {
    let vertices: Vec<(String, i64)> = eulers
        .iter()
        .enumerate()
        .map(|(i, &e)| (format!("v{i}"), e))
        .collect();
    let edges: Vec<(String, String)> = (1..eulers.len())
        .map(|i| (format!("v{}", i - 1), format!("v{i}")))
        .collect();
    PlumbingGraph::new(
        &vertices.iter().map(|(s, e)| (s.as_str(), *e)).collect::<Vec<_>>(),
        &edges.iter().map(|(a, b)| (a.as_str(), b.as_str())).collect::<Vec<_>>(),
    )
    .unwrap()
}

/// A star: center `c` with straight legs; `legs[i]` lists the Euler numbers
/// along the i-th leg, center outward.
pub fn star(center: i64, legs: &[&[i64]]) -> PlumbingGraph {
    let mut vertices = vec![("c".to_string(), center)];
    let mut edges = Vec::new();
    for (li, leg) in legs.iter().enumerate() {
        let mut prev = "c".to_string();
        for (i, &e) in leg.iter().enumerate() {
            let id = format!("l{li}_{i}");
            vertices.push((id.clone(), e));
            edges.push((prev.clone(), id.clone()));
            prev = id;
        }
    }
    PlumbingGraph::new(
        &vertices.iter().map(|(s, e)| (s.as_str(), *e)).collect::<Vec<_>>(),
        &edges.iter().map(|(a, b)| (a.as_str(), b.as_str())).collect::<Vec<_>>(),
    )
    .unwrap()
}

/// The chain -2,-1,-8,-8,-1,-2 with a -3 leg on each -1 vertex.
pub fn twin_m8() -> PlumbingGraph {
    PlumbingGraph::new(
        &[
            ("z1", -2),
            ("n1", -1),
            ("m1", -8),
            ("m2", -8),
            ("n2", -1),
            ("z3", -2),
            ("z2", -3),
            ("z4", -3),
        ],
        &[
            ("z1", "n1"),
            ("n1", "m1"),
            ("m1", "m2"),
            ("m2", "n2"),
            ("n2", "z3"),
            ("n1", "z2"),
            ("n2", "z4"),
        ],
    )
    .unwrap()
}

/// Unimodular tree with one node: chain -2,-7,-1,-2 plus a -3 leg on the -1.
/// `e0` is the -2 end of the -7 arm, `e1` the -7 vertex.
pub fn one_node_m7() -> PlumbingGraph {
    PlumbingGraph::new(
        &[("e0", -2), ("e1", -7), ("c", -1), ("a", -2), ("b", -3)],
        &[("e0", "e1"), ("e1", "c"), ("c", "a"), ("c", "b")],
    )
    .unwrap()
}

/// Unimodular tree with two nodes: chain -2,-1,-13,-1,-2 plus a -3 leg on
/// each -1 vertex. `e1` is the -13 vertex.
pub fn two_node_m13() -> PlumbingGraph {
    PlumbingGraph::new(
        &[
            ("a", -2),
            ("n1", -1),
            ("e1", -13),
            ("n2", -1),
            ("b", -2),
            ("f", -3),
            ("g", -3),
        ],
        &[
            ("a", "n1"),
            ("n1", "e1"),
            ("e1", "n2"),
            ("n2", "b"),
            ("n1", "f"),
            ("n2", "g"),
        ],
    )
    .unwrap()
}

/// The E8 tree: all -2, star with legs of lengths 1, 2 and 4.
pub fn e8() -> PlumbingGraph {
    star(-2, &[&[-2], &[-2, -2], &[-2, -2, -2, -2]])
}

/// The Brieskorn sphere star: center -1 with legs -2, -3, -7.
pub fn brieskorn_2_3_7() -> PlumbingGraph {
    star(-1, &[&[-2], &[-3], &[-7]])
}

pub fn ctx(g: &PlumbingGraph) -> LatticeContext {
    LatticeContext::build(g).unwrap()
}

pub fn ctx_single(p: i64) -> LatticeContext {
    ctx(&single(p))
}

pub fn ctx_string(eulers: &[i64]) -> LatticeContext {
    ctx(&string(eulers))
}

pub fn ctx_twin_m8() -> LatticeContext {
    ctx(&twin_m8())
}

pub fn ctx_one_node_m7() -> LatticeContext {
    ctx(&one_node_m7())
}

pub fn ctx_two_node_m13() -> LatticeContext {
    ctx(&two_node_m13())
}

pub fn ctx_e8() -> LatticeContext {
    ctx(&e8())
}

pub fn ctx_brieskorn_2_3_7() -> LatticeContext {
    ctx(&brieskorn_2_3_7())
}
