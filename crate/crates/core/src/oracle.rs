//! Brute-force reference implementations.
//!
//! Everything here exists to pin test expectations independently of the
//! main engine: plain box enumerations with no pruning, no shared search
//! code, and locally recomputed weights. Congruence mod `L` is decided by
//! integrality of differences rather than through the Smith-form class map.
//! None of this is fast, and none of it needs to be.

use num_integer::Integer;
use num_traits::{Signed, ToPrimitive, Zero};

use crate::error::Error;
use crate::lattice::{LatticeContext, QCycle};
use crate::Int;

/// Region selector for [`naive_series_region`].
#[derive(Debug, Clone)]
pub enum Region {
    /// Support points congruent to the query that do not dominate it.
    NotGeq,
    /// Support points congruent to the query that dominate it but not the
    /// query shifted by the given integral effective cycle.
    EffNotGeq(QCycle),
}

fn oracle_binom(n: u64, k: u64) -> i64 {
    if k > n {
        return 0;
    }
    let mut num: i64 = 1;
    let mut den: i64 = 1;
    for i in 0..k.min(n - k) {
        num *= (n - i) as i64;
        den *= i as i64 + 1;
    }
    num / den
}

fn oracle_weight(valency: usize, k: u64) -> i64 {
    match valency {
        0 => k as i64 + 1,
        1 => 1,
        2 => i64::from(k == 0),
        dv => {
            let b = oracle_binom((dv - 2) as u64, k);
            if k % 2 == 0 {
                b
            } else {
                -b
            }
        }
    }
}

fn congruent(ctx: &LatticeContext, a: &[Int], b: &[Int]) -> bool {
    a.iter().zip(b).all(|(x, y)| (x - y).mod_floor(&ctx.d).is_zero())
}

fn geq(a: &[Int], b: &[Int]) -> bool {
    a.iter().zip(b).all(|(x, y)| x >= y)
}

/// The per-slot enumeration bound the engine would use against `target`,
/// recomputed here from scratch.
pub fn box_bound(ctx: &LatticeContext, v: usize, target: &QCycle) -> u64 {
    let mut best = Int::zero();
    for u in 0..ctx.len() {
        let b = target.raw()[u].div_ceil(&ctx.dual_num[u][v]);
        if b > best {
            best = b;
        }
    }
    best.to_u64().expect("oracle bound fits in u64")
}

/// Counts monomials in two variables, graded by the end duals, lying in the
/// eigenclass of `l'` and not dominating it. On a string graph this is the
/// Hilbert coefficient of `l'` counted directly on the abelian cover plane.
pub fn string_hilbert_count(ctx: &LatticeContext, l: &QCycle, bound: u64) -> Result<i64, Error> {
    if !ctx.nodes().is_empty() {
        return Err(Error::NotAString);
    }
    let slots = ctx.end_slots();
    assert_eq!(slots.len(), 2);
    let mut count = 0i64;
    for a1 in 0..=bound {
        for a2 in 0..=bound {
            let mut pt = vec![Int::zero(); ctx.len()];
            for u in 0..ctx.len() {
                pt[u] = Int::from(a1) * &ctx.dual_num[u][slots[0]]
                    + Int::from(a2) * &ctx.dual_num[u][slots[1]];
            }
            if congruent(ctx, &pt, l.raw()) && !geq(&pt, l.raw()) {
                count += 1;
            }
        }
    }
    Ok(count)
}

/// Unpruned box enumeration of the engine's region sums.
pub fn naive_series_region(ctx: &LatticeContext, l: &QCycle, region: &Region) -> i64 {
    let target = match region {
        Region::NotGeq => l.clone(),
        Region::EffNotGeq(by) => l.add(by),
    };
    let active: Vec<usize> = (0..ctx.len()).filter(|&v| ctx.valency(v) != 2).collect();
    let bounds: Vec<u64> = active
        .iter()
        .map(|&v| {
            if ctx.valency(v) >= 3 {
                (ctx.valency(v) - 2) as u64
            } else {
                box_bound(ctx, v, &target)
            }
        })
        .collect();
    let mut exps = vec![0u64; active.len()];
    let mut total = 0i64;
    loop {
        let mut pt = vec![Int::zero(); ctx.len()];
        let mut w = 1i64;
        for (i, &v) in active.iter().enumerate() {
            w *= oracle_weight(ctx.valency(v), exps[i]);
            for u in 0..ctx.len() {
                pt[u] += Int::from(exps[i]) * &ctx.dual_num[u][v];
            }
        }
        if w != 0 && congruent(ctx, &pt, l.raw()) {
            let keep = match region {
                Region::NotGeq => !geq(&pt, l.raw()),
                Region::EffNotGeq(_) => geq(&pt, l.raw()) && !geq(&pt, target.raw()),
            };
            if keep {
                total += w;
            }
        }
        // odometer
        let mut i = exps.len();
        loop {
            if i == 0 {
                return total;
            }
            i -= 1;
            exps[i] += 1;
            if exps[i] <= bounds[i] {
                break;
            }
            exps[i] = 0;
        }
    }
}

/// Exhaustive minimal nonzero anti-nef integral cycle within the box
/// `[0, bound]^n`.
pub fn brute_zmin(ctx: &LatticeContext, bound: u64) -> Result<QCycle, Error> {
    let n = ctx.len();
    let mut coords = vec![0u64; n];
    let mut best: Option<Vec<Int>> = None;
    loop {
        if coords.iter().any(|&c| c > 0) {
            let nums: Vec<Int> = coords.iter().map(|&c| Int::from(c) * &ctx.d).collect();
            let antinef = (0..n).all(|v| {
                let mut acc = Int::zero();
                for u in 0..n {
                    acc += &ctx.intersection[v][u] * &nums[u];
                }
                !acc.is_positive()
            });
            if antinef {
                match &mut best {
                    None => best = Some(nums),
                    Some(b) => {
                        for (acc, c) in b.iter_mut().zip(&nums) {
                            if c < acc {
                                *acc = c.clone();
                            }
                        }
                    }
                }
            }
        }
        let mut i = n;
        loop {
            if i == 0 {
                return match best {
                    Some(nums) => Ok(QCycle { nums }),
                    None => Err(Error::BoxTooSmall),
                };
            }
            i -= 1;
            coords[i] += 1;
            if coords[i] <= bound {
                break;
            }
            coords[i] = 0;
        }
    }
}

/// Exhaustive check of the per-vertex pairing characterization of principal
/// cycles: for each vertex `v` some integral effective cycle avoiding `v`
/// pairs like `-l'` off the ends and at most like `-l'` at the ends. The
/// search ranges over the box `[0, bound]^n`.
pub fn brute_principal(ctx: &LatticeContext, l: &QCycle, bound: u64) -> Result<bool, Error> {
    if !ctx.is_antinef(l) {
        return Err(Error::InputOutsideCone);
    }
    let n = ctx.len();
    let is_end = {
        let mut flags = vec![false; n];
        for &e in ctx.ends() {
            flags[e] = true;
        }
        if n == 1 {
            flags[0] = true;
        }
        flags
    };
    let pair_row = |nums: &[Int], v: usize| -> Int {
        let mut acc = Int::zero();
        for u in 0..n {
            acc += &ctx.intersection[v][u] * &nums[u];
        }
        acc
    };
    'vertex: for v in 0..n {
        let mut coords = vec![0u64; n];
        loop {
            if coords[v] == 0 {
                let nums: Vec<Int> = coords.iter().map(|&c| Int::from(c) * &ctx.d).collect();
                let mut ok = true;
                for u in 0..n {
                    let lhs = pair_row(&nums, u);
                    let rhs = -pair_row(l.raw(), u);
                    if is_end[u] {
                        if lhs > rhs {
                            ok = false;
                            break;
                        }
                    } else if lhs != rhs {
                        ok = false;
                        break;
                    }
                }
                if ok {
                    continue 'vertex;
                }
            }
            let mut i = n;
            loop {
                if i == 0 {
                    return Ok(false);
                }
                i -= 1;
                coords[i] += 1;
                if coords[i] <= bound && !(i == v && coords[i] > 0) {
                    break;
                }
                coords[i] = 0;
            }
        }
    }
    Ok(true)
}
