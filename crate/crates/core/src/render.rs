//! JSON rendering of exact values and the aggregate invariant report.
//!
//! Every number in the output is exact: integers appear as JSON numbers
//! when they fit 64 bits (decimal strings otherwise), non-integral
//! rationals as `"p/q"` strings. `serde_json` maps are ordered, so a
//! rendered document is byte-identical across runs and thread counts.

use num_traits::ToPrimitive;
use serde_json::{json, Map, Value};

use crate::cycles::{self, DoublePoint, MultiplicityReport, NewtonStaircase, PrincipalCertificate};
use crate::error::Error;
use crate::invariants;
use crate::lattice::{HClass, LatticeContext, QCycle};
use crate::{Int, Rat};

pub fn int_value(x: &Int) -> Value {
    match x.to_i64() {
        Some(v) => json!(v),
        None => json!(x.to_string()),
    }
}

pub fn rat_value(x: &Rat) -> Value {
    if x.is_integer() {
        int_value(&x.to_integer())
    } else {
        json!(format!("{}/{}", x.numer(), x.denom()))
    }
}

/// A cycle as an id-to-coordinate map (all vertices, zeros included).
pub fn cycle_value(ctx: &LatticeContext, x: &QCycle) -> Value {
    let mut map = Map::new();
    let coords = ctx.coords(x);
    let mut ids: Vec<usize> = (0..ctx.len()).collect();
    ids.sort_by(|&a, &b| ctx.graph().vertex_id(a).cmp(ctx.graph().vertex_id(b)));
    for v in ids {
        map.insert(ctx.graph().vertex_id(v).to_owned(), rat_value(&coords[v]));
    }
    Value::Object(map)
}

/// A class as its residue tuple against the nontrivial invariant factors.
pub fn class_value(h: &HClass) -> Value {
    Value::Array(h.residues().iter().map(int_value).collect())
}

pub fn double_point_value(ctx: &LatticeContext, p: &DoublePoint) -> Value {
    match *p {
        DoublePoint::Edge { a, b } => json!({
            "type": "edge",
            "between": [ctx.graph().vertex_id(a), ctx.graph().vertex_id(b)],
        }),
        DoublePoint::EndCurve { slot, vertex } => json!({
            "type": "end-curve",
            "at": ctx.graph().vertex_id(vertex),
            "slot": slot,
        }),
    }
}

pub fn staircase_value(ctx: &LatticeContext, s: &NewtonStaircase) -> Value {
    json!({
        "point": double_point_value(ctx, &s.point),
        "base_point": s.base_point,
        "minimal_points": s.minimal_points,
        "boundary": s.boundary,
        "doubled_area": s.doubled_area,
    })
}

/// Witnesses or the refuting vertex, with the slot labels spelled out.
pub fn certificate_value(ctx: &LatticeContext, c: &PrincipalCertificate) -> Value {
    let slot_ids: Vec<&str> = ctx
        .end_slots()
        .iter()
        .map(|&v| ctx.graph().vertex_id(v))
        .collect();
    match c {
        PrincipalCertificate::Principal { witnesses } => {
            let mut map = Map::new();
            for (v, w) in witnesses.iter().enumerate() {
                map.insert(ctx.graph().vertex_id(v).to_owned(), json!(w));
            }
            json!({ "principal": true, "slots": slot_ids, "witnesses": Value::Object(map) })
        }
        PrincipalCertificate::NotPrincipal { refuted } => json!({
            "principal": false,
            "refuted_at": ctx.graph().vertex_id(*refuted),
        }),
    }
}

pub fn sw_table_value(table: &[(HClass, Rat)]) -> Value {
    Value::Array(
        table
            .iter()
            .map(|(h, v)| json!({ "class": class_value(h), "sw": rat_value(v) }))
            .collect(),
    )
}

/// The aggregate report: lattice data, minimal/maximal cycles, geometric
/// genus, multiplicity and the full Seiberg-Witten table, plus the tool
/// version and the canonical graph for provenance.
pub fn invariant_report(ctx: &LatticeContext, cap: u64) -> Result<Value, Error> {
    let graph_doc: Value = serde_json::from_str(&ctx.graph().serialize())
        .expect("canonical serialization is valid JSON");
    let k = ctx.canonical_class();
    let k2 = ctx.pair(k, k);
    let zmin = ctx.minimal_cycle();
    let mult: MultiplicityReport = cycles::multiplicity(ctx, cap)?;
    let pg = invariants::geometric_genus(ctx)?;
    let table = invariants::sw_table(ctx);
    let zmin2 = ctx.pair(&zmin, &zmin);
    let zmax2 = ctx.pair(&mult.zmax, &mult.zmax);
    Ok(json!({
        "version": crate::VERSION,
        "graph": graph_doc,
        "det": int_value(ctx.det()),
        "invariant_factors": ctx.invariant_factors().iter().map(int_value).collect::<Vec<_>>(),
        "k": cycle_value(ctx, k),
        "k_squared": rat_value(&k2),
        "zmin": cycle_value(ctx, &zmin),
        "zmin_squared": rat_value(&zmin2),
        "zmax": cycle_value(ctx, &mult.zmax),
        "zmax_squared": rat_value(&zmax2),
        "pg": int_value(&pg),
        "multiplicity": int_value(&mult.total),
        "basepoints": mult
            .staircases
            .iter()
            .filter(|s| s.base_point)
            .map(|s| staircase_value(ctx, s))
            .collect::<Vec<_>>(),
        "sw": sw_table_value(&table),
    }))
}
