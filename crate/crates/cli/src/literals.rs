//! Command-line literal syntax for cycles and classes.
//!
//! Cycles: `"v1:3/2,v2:1"` assigns rational `E`-basis coordinates to
//! vertices by id; omitted vertices are zero, and `"0"` or the empty string
//! is the zero cycle. With `--dual-coords` the numbers are coefficients of
//! the dual basis elements `E_v^*` instead. Classes: comma-separated
//! residues against the nontrivial invariant factors, e.g. `"1,0"`; the
//! empty string is the identity.

use plumbcalc_core::{Error, HClass, Int, LatticeContext, QCycle, Rat};

fn parse_rat(s: &str) -> Result<Rat, Error> {
    let bad = || Error::BadLiteral(format!("expected integer or p/q, got {s:?}"));
    match s.split_once('/') {
        Some((p, q)) => {
            let p: Int = p.trim().parse().map_err(|_| bad())?;
            let q: Int = q.trim().parse().map_err(|_| bad())?;
            if q == Int::from(0) {
                return Err(Error::BadLiteral("zero denominator".into()));
            }
            Ok(Rat::new(p, q))
        }
        None => {
            let p: Int = s.trim().parse().map_err(|_| bad())?;
            Ok(Rat::from_integer(p))
        }
    }
}

pub fn parse_cycle(ctx: &LatticeContext, text: &str, dual_coords: bool) -> Result<QCycle, Error> {
    let text = text.trim();
    if text.is_empty() || text == "0" {
        return Ok(ctx.zero_cycle());
    }
    let zero = Rat::from_integer(Int::from(0));
    let mut coords = vec![zero.clone(); ctx.len()];
    let mut assigned = vec![false; ctx.len()];
    for part in text.split(',') {
        let (id, value) = part
            .split_once(':')
            .ok_or_else(|| Error::BadLiteral(format!("expected id:value, got {part:?}")))?;
        let id = id.trim();
        let v = ctx
            .graph()
            .vertex_index(id)
            .ok_or_else(|| Error::UnknownVertex(id.to_owned()))?;
        if assigned[v] {
            return Err(Error::BadLiteral(format!("vertex {id:?} assigned twice")));
        }
        assigned[v] = true;
        coords[v] = parse_rat(value)?;
    }
    if dual_coords {
        let mut acc = vec![zero; ctx.len()];
        for (v, c) in coords.iter().enumerate() {
            if *c == Rat::from_integer(Int::from(0)) {
                continue;
            }
            for (u, dc) in ctx.coords(&ctx.dual(v)).iter().enumerate() {
                acc[u] += c * dc;
            }
        }
        ctx.cycle_from_coords(&acc)
    } else {
        ctx.cycle_from_coords(&coords)
    }
}

pub fn parse_class(ctx: &LatticeContext, text: &str) -> Result<HClass, Error> {
    let text = text.trim();
    if text.is_empty() {
        return Ok(ctx.h_identity());
    }
    let mut residues = Vec::new();
    for part in text.split(',') {
        let r: Int = part
            .trim()
            .parse()
            .map_err(|_| Error::BadLiteral(format!("expected integer residue, got {part:?}")))?;
        residues.push(r);
    }
    ctx.h_from_residues(&residues)
}
