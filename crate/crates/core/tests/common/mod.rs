//! Shared fixtures and random generators for the integration suites.

use rand::Rng;
use rand_chacha::rand_core::SeedableRng;
use rand_chacha::ChaCha8Rng;

use plumbcalc_core::{HClass, Int, LatticeContext, PlumbingGraph, QCycle};

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

pub fn fixture_path(name: &str) -> String {
    format!("{}/fixtures/{name}.json", env!("CARGO_MANIFEST_DIR"))
}

pub fn load_fixture(name: &str) -> LatticeContext {
    let text = std::fs::read_to_string(fixture_path(name)).unwrap();
    let graph = PlumbingGraph::parse(&text).unwrap();
    LatticeContext::build(&graph).unwrap()
}

/// All valid committed fixtures.
pub const FIXTURES: &[&str] = &[
    "vertex_m2",
    "vertex_m3",
    "string_m2_m3",
    "chain_m2_m2",
    "one_node_m7",
    "two_node_m13",
    "twin_m8",
    "e8",
    "brieskorn_2_3_7",
];

pub fn string_graph(eulers: &[i64]) -> PlumbingGraph {
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

pub fn star_graph(center: i64, legs: &[Vec<i64>]) -> PlumbingGraph {
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

/// A random string with all Euler numbers <= -2 (always negative definite).
pub fn random_string(rng: &mut ChaCha8Rng, max_len: usize) -> PlumbingGraph {
    let len = rng.gen_range(1..=max_len);
    let eulers: Vec<i64> = (0..len).map(|_| -rng.gen_range(2..=5i64)).collect();
    string_graph(&eulers)
}

/// A random string kept small in both size and discriminant-group order.
pub fn random_small_string(rng: &mut ChaCha8Rng, max_order: i64) -> LatticeContext {
    loop {
        let g = random_string(rng, 4);
        let ctx = LatticeContext::build(&g).unwrap();
        if ctx.h_order() <= Int::from(max_order) {
            return ctx;
        }
    }
}

/// A random valid star with three short legs; retries until negative
/// definite and with a small discriminant group.
pub fn random_star(rng: &mut ChaCha8Rng, max_order: i64) -> LatticeContext {
    loop {
        let center = -rng.gen_range(1..=3i64);
        let legs: Vec<Vec<i64>> = (0..3)
            .map(|_| {
                (0..rng.gen_range(1..=2usize))
                    .map(|_| -rng.gen_range(2..=4i64))
                    .collect()
            })
            .collect();
        let g = star_graph(center, &legs);
        if !g.validate().ok() {
            continue;
        }
        let ctx = LatticeContext::build(&g).unwrap();
        if ctx.h_order() <= Int::from(max_order) {
            return ctx;
        }
    }
}

/// A random point of `L'`: a small nonnegative dual combination plus a small
/// integral cycle (coordinates may be negative).
pub fn random_lattice_point(rng: &mut ChaCha8Rng, ctx: &LatticeContext) -> QCycle {
    let mut acc = ctx.zero_cycle();
    for v in 0..ctx.len() {
        let k = rng.gen_range(0..=3i64);
        if k > 0 {
            acc = acc.add(&ctx.dual(v).scale(&Int::from(k)));
        }
    }
    let shift: Vec<Int> = (0..ctx.len()).map(|_| Int::from(rng.gen_range(-2..=2i64))).collect();
    acc.add(&ctx.integral_cycle(&shift))
}

pub fn random_class(rng: &mut ChaCha8Rng, ctx: &LatticeContext) -> HClass {
    let residues: Vec<Int> = ctx
        .class_moduli()
        .iter()
        .map(|_| Int::from(rng.gen_range(0..=64i64)))
        .collect();
    ctx.h_from_residues(&residues).unwrap()
}

/// A random integral anti-nef cycle: a nonnegative combination of the
/// integral generators `e_v E_v^*`.
pub fn random_antinef_integral(rng: &mut ChaCha8Rng, ctx: &LatticeContext) -> QCycle {
    let mut acc = ctx.zero_cycle();
    for v in 0..ctx.len() {
        let a = rng.gen_range(0..=1i64);
        if a > 0 {
            acc = acc.add(&ctx.dual(v).scale(&(ctx.order_e(v) * Int::from(a))));
        }
    }
    acc
}

/// A random `l'` with `l' + K` anti-nef: a cone representative of a random
/// class, shifted further into the cone.
pub fn random_cone_point(rng: &mut ChaCha8Rng, ctx: &LatticeContext) -> QCycle {
    let h = random_class(rng, ctx);
    ctx.artin_shift(&h).add(&random_antinef_integral(rng, ctx))
}
