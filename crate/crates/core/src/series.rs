//! The combinatorial series `prod_v (1 - t^{E_v^*})^{delta_v - 2}` and its
//! truncated sums over lattice regions.
//!
//! Support points of the product are the lattice points `sum_v k_v E_v^*`
//! with nonnegative integer exponents; because the `E_v^*` form a basis,
//! every point has a unique exponent vector and its coefficient is a closed
//! form `prod_v w_v(k_v)`, so single coefficients never require expanding
//! anything. Region sums are depth-first enumerations over the exponents of
//! the vertices with valency different from two (a valency-two factor is the
//! constant one), pruned componentwise: all regions of interest exclude the
//! points dominating a fixed cycle, and coordinates only grow along a branch.
//!
//! The one-vertex graph takes exponent `delta - 2 = -2`, i.e. weights
//! `k + 1`, matching its two formal end slots.
//!
//! Enumeration state lives in overflow-checked machine integers scaled by
//! the exact lattice data; inputs too large for that would be infeasible to
//! enumerate anyway and panic up front rather than degrade.

use std::collections::BTreeMap;

use num_integer::Integer;
use num_traits::{Signed, ToPrimitive, Zero};

use crate::error::Error;
use crate::lattice::{HClass, LatticeContext, QCycle};
use crate::{Int, Rat};

fn binom(n: u64, k: u64) -> i64 {
    let k = k.min(n - k.min(n));
    let mut acc: i64 = 1;
    for i in 0..k {
        acc = acc * ((n - i) as i64) / (i as i64 + 1);
    }
    acc
}

/// Per-vertex closed-form factor of the product series.
pub fn vertex_weight(ctx: &LatticeContext, v: usize, k: u64) -> i64 {
    match ctx.valency(v) {
        0 => k as i64 + 1,
        1 => 1,
        2 => {
            if k == 0 {
                1
            } else {
                0
            }
        }
        dv => {
            let m = (dv - 2) as u64;
            if k > m {
                0
            } else if k % 2 == 0 {
                binom(m, k)
            } else {
                -binom(m, k)
            }
        }
    }
}

/// The coefficient `c_{l'}` of the product series at `l'`, in closed form
/// from the unique dual-basis exponent vector.
pub fn coefficient(ctx: &LatticeContext, l: &QCycle) -> i64 {
    let exps = ctx.dual_exponents(l);
    let mut acc: i64 = 1;
    for (v, k) in exps.iter().enumerate() {
        if k.is_negative() {
            return 0;
        }
        let Some(k) = k.to_u64() else { return 0 };
        match ctx.valency(v) {
            2 if k != 0 => return 0,
            dv if dv >= 3 && k > (dv - 2) as u64 => return 0,
            _ => acc *= vertex_weight(ctx, v, k),
        }
    }
    acc
}

pub(crate) fn to_i128(x: &Int) -> i128 {
    x.to_i128().expect("lattice datum too large for enumeration")
}

pub(crate) fn nums_i128(x: &QCycle) -> Vec<i128> {
    x.raw().iter().map(to_i128).collect()
}

fn class_i64(h: &HClass) -> Vec<i64> {
    h.residues()
        .iter()
        .map(|r| r.to_i64().expect("class residue fits in i64"))
        .collect()
}

/// Vertices whose series factor is not the constant one, in vertex order.
fn active_vertices(ctx: &LatticeContext) -> Vec<usize> {
    (0..ctx.len()).filter(|&v| ctx.valency(v) != 2).collect()
}

/// Enumeration bound for a free (valency <= 1) vertex against a target
/// cycle: the smallest `B` with `k E_v^* >= target` componentwise for every
/// `k > B`, padded for the stability check.
fn free_bound(ctx: &LatticeContext, v: usize, target: &QCycle, pad: u64) -> u64 {
    let mut best = Int::zero();
    for u in 0..ctx.len() {
        let b = target.raw()[u].div_ceil(&ctx.dual_num[u][v]);
        if b > best {
            best = b;
        }
    }
    best.to_u64().expect("enumeration bound does not fit in u64") + pad
}

struct ActiveVertex {
    v: usize,
    bound: u64,
    /// `d`-scaled dual column of `v`.
    col: Vec<i128>,
    /// Class residues of `E_v^*`.
    cls: Vec<i64>,
}

/// Pruned depth-first enumeration over support-point exponents.
struct Scan<'a> {
    ctx: &'a LatticeContext,
    active: Vec<ActiveVertex>,
    moduli: Vec<i64>,
}

impl<'a> Scan<'a> {
    fn new(ctx: &'a LatticeContext, bounds: Vec<(usize, u64)>) -> Self {
        let moduli: Vec<i64> = ctx
            .class_moduli()
            .iter()
            .map(|m| m.to_i64().expect("invariant factor fits in i64"))
            .collect();
        let active = bounds
            .into_iter()
            .map(|(v, bound)| ActiveVertex {
                v,
                bound,
                col: (0..ctx.len()).map(|u| to_i128(&ctx.dual_num[u][v])).collect(),
                cls: class_i64(&ctx.class_of(&ctx.dual(v))),
            })
            .collect();
        Scan { ctx, active, moduli }
    }

    /// Walks all exponent vectors within the bounds, skipping every subtree
    /// on which `prune` holds. `prune` must be monotone: once true it stays
    /// true as coordinates grow.
    fn walk(
        &self,
        prune: &impl Fn(&[i128]) -> bool,
        visit: &mut impl FnMut(&[u64], &[i128], &[i64], i64),
    ) {
        let mut point = vec![0i128; self.ctx.len()];
        let mut exps = vec![0u64; self.active.len()];
        let cls = vec![0i64; self.moduli.len()];
        self.step(0, &mut point, &cls, 1, &mut exps, prune, visit);
    }

    #[allow(clippy::too_many_arguments)]
    fn step(
        &self,
        level: usize,
        point: &mut Vec<i128>,
        cls: &[i64],
        weight: i64,
        exps: &mut Vec<u64>,
        prune: &impl Fn(&[i128]) -> bool,
        visit: &mut impl FnMut(&[u64], &[i128], &[i64], i64),
    ) {
        if level == self.active.len() {
            if !prune(point) {
                visit(exps, point, cls, weight);
            }
            return;
        }
        let av = &self.active[level];
        let mut added = 0i128;
        let mut cur = cls.to_vec();
        for k in 0..=av.bound {
            if k > 0 {
                for (p, c) in point.iter_mut().zip(&av.col) {
                    *p += c;
                }
                for (r, (c, m)) in cur.iter_mut().zip(av.cls.iter().zip(&self.moduli)) {
                    *r = (*r + c) % m;
                }
                added += 1;
            }
            if prune(point) {
                break;
            }
            exps[level] = k;
            let w = weight * vertex_weight(self.ctx, av.v, k);
            self.step(level + 1, point, &cur, w, exps, prune, visit);
        }
        exps[level] = 0;
        if added > 0 {
            for (p, c) in point.iter_mut().zip(&av.col) {
                *p -= added * c;
            }
        }
    }
}

fn scan_against<'a>(ctx: &'a LatticeContext, target: &QCycle, pad: u64) -> Scan<'a> {
    let bounds = active_vertices(ctx)
        .into_iter()
        .map(|v| {
            let b = if ctx.valency(v) >= 3 {
                (ctx.valency(v) - 2) as u64
            } else {
                free_bound(ctx, v, target, pad)
            };
            (v, b)
        })
        .collect();
    Scan::new(ctx, bounds)
}

fn dominates(point: &[i128], target: &[i128]) -> bool {
    point.iter().zip(target).all(|(a, b)| a >= b)
}

/// The truncated sum of series coefficients over `{a in L : a not >= 0}`
/// shifted by `l'`; this equals the equivariant divisorial Hilbert
/// coefficient of `l'`.
pub fn truncated_sum(ctx: &LatticeContext, l: &QCycle) -> i64 {
    truncated_sum_padded(ctx, l, 0)
}

/// [`truncated_sum`] with the free-vertex enumeration bounds enlarged by
/// `pad`; the result must not depend on `pad`.
pub fn truncated_sum_padded(ctx: &LatticeContext, l: &QCycle, pad: u64) -> i64 {
    let target_class = class_i64(&ctx.class_of(l));
    let target = nums_i128(l);
    let scan = scan_against(ctx, l, pad);
    let mut total: i64 = 0;
    scan.walk(&|pt| dominates(pt, &target), &mut |_, _, cls, w| {
        if cls == target_class {
            total += w;
        }
    });
    total
}

/// `dim H^0(O(-l')) / H^0(O(-l'-l))` for natural line bundles: the sum of
/// coefficients over support points congruent to `l'` mod `L` that dominate
/// `l'` but not `l' + l`. Requires `l` integral and effective.
pub fn section_quotient_dim(ctx: &LatticeContext, l: &QCycle, by: &QCycle) -> Result<i64, Error> {
    section_quotient_dim_padded(ctx, l, by, 0)
}

pub fn section_quotient_dim_padded(
    ctx: &LatticeContext,
    l: &QCycle,
    by: &QCycle,
    pad: u64,
) -> Result<i64, Error> {
    if !ctx.is_integral(by) || !ctx.is_effective(by) {
        return Err(Error::NotEffective);
    }
    if by.is_zero() {
        return Ok(0);
    }
    let target_class = class_i64(&ctx.class_of(l));
    let lower = nums_i128(l);
    let upper_cycle = l.add(by);
    let upper = nums_i128(&upper_cycle);
    let scan = scan_against(ctx, &upper_cycle, pad);
    let mut total: i64 = 0;
    scan.walk(&|pt| dominates(pt, &upper), &mut |_, pt, cls, w| {
        if cls == target_class && dominates(pt, &lower) {
            total += w;
        }
    });
    Ok(total)
}

/// The `h`-eigenpart of the series reduced to the valuation of one vertex
/// `u`: all support points of class `h` are collapsed to their `E_u`
/// coordinate and coefficients aggregated per exponent, up to exponent
/// `max_degree`. Exponents are exact rationals with denominator dividing
/// `det`; for the identity class they are integers.
pub fn vertex_poincare(
    ctx: &LatticeContext,
    u: usize,
    h: &HClass,
    max_degree: u64,
) -> Vec<(Rat, i64)> {
    let cap_int = Int::from(max_degree) * &ctx.d;
    let cap = to_i128(&cap_int);
    let bounds = active_vertices(ctx)
        .into_iter()
        .map(|v| {
            let by_degree = cap_int.div_floor(&ctx.dual_num[u][v]);
            let by_degree = by_degree.to_u64().expect("degree bound does not fit in u64");
            let b = if ctx.valency(v) >= 3 {
                by_degree.min((ctx.valency(v) - 2) as u64)
            } else {
                by_degree
            };
            (v, b)
        })
        .collect();
    let scan = Scan::new(ctx, bounds);
    let target_class = class_i64(h);
    let mut agg: BTreeMap<i128, i64> = BTreeMap::new();
    scan.walk(&|pt| pt[u] > cap, &mut |_, pt, cls, w| {
        if cls == target_class {
            *agg.entry(pt[u]).or_insert(0) += w;
        }
    });
    agg.into_iter()
        .filter(|(_, c)| *c != 0)
        .map(|(num, c)| (Rat::new(Int::from(num), ctx.d.clone()), c))
        .collect()
}

/// Exposes the pruned enumeration to the test suite so that accumulated
/// weights can be cross-checked against the closed form point by point.
pub fn scan_region(
    ctx: &LatticeContext,
    target: &QCycle,
    pad: u64,
    visit: &mut impl FnMut(&QCycle, &HClass, i64),
) {
    let target_nums = nums_i128(target);
    let scan = scan_against(ctx, target, pad);
    scan.walk(&|pt| dominates(pt, &target_nums), &mut |_, pt, _, w| {
        let cycle = QCycle { nums: pt.iter().map(|&x| Int::from(x)).collect() };
        let cls = ctx.class_of(&cycle);
        visit(&cycle, &cls, w)
    });
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::testutil::*;

    #[test]
    fn constant_term_is_one() {
        for ctx in [ctx_single(2), ctx_string(&[-2, -3]), ctx_twin_m8(), ctx_e8()] {
            assert_eq!(coefficient(&ctx, &ctx.zero_cycle()), 1);
        }
    }

    #[test]
    fn one_vertex_coefficients_count_sections() {
        for p in 2..=7 {
            let ctx = ctx_single(p);
            for k in 0..=20i64 {
                let pt = ctx.dual(0).scale(&Int::from(k));
                assert_eq!(coefficient(&ctx, &pt), k + 1, "p={p} k={k}");
            }
        }
    }

    #[test]
    fn string_coefficient_at_mixed_point() {
        let ctx = ctx_string(&[-2, -3]);
        let pt = ctx.cycle_from_coords(&[rat(4, 5), rat(3, 5)]).unwrap();
        assert_eq!(coefficient(&ctx, &pt), 1);
        // E_1 has a negative dual exponent, off the support
        assert_eq!(coefficient(&ctx, &ctx.e_basis(0)), 0);
    }

    #[test]
    fn node_coefficients_alternate() {
        // valency-3 node: weights 1, -1 at exponents 0, 1
        let ctx = ctx_brieskorn_2_3_7();
        let c = ctx.graph().vertex_index("c").unwrap();
        assert_eq!(vertex_weight(&ctx, c, 0), 1);
        assert_eq!(vertex_weight(&ctx, c, 1), -1);
        assert_eq!(vertex_weight(&ctx, c, 2), 0);
    }

    #[test]
    fn truncated_sum_examples() {
        for ctx in [ctx_single(2), ctx_string(&[-2, -3]), ctx_twin_m8()] {
            assert_eq!(truncated_sum(&ctx, &ctx.zero_cycle()), 0);
        }
        let ctx = ctx_single(2);
        assert_eq!(truncated_sum(&ctx, &ctx.e_basis(0)), 1);
        let ctx = ctx_string(&[-2, -3]);
        assert_eq!(truncated_sum(&ctx, &ctx.dual(0)), 0);
    }

    #[test]
    fn truncated_sum_monotone_in_effective_shifts() {
        let ctx = ctx_string(&[-2, -3]);
        let l = ctx.dual(0);
        let mut prev = truncated_sum(&ctx, &l);
        let mut cur = l;
        for _ in 0..4 {
            cur = cur.add(&ctx.e_basis(0));
            let next = truncated_sum(&ctx, &cur);
            assert!(next >= prev);
            prev = next;
        }
    }

    #[test]
    fn section_quotient_examples() {
        let ctx = ctx_single(2);
        let zero = ctx.zero_cycle();
        let e = ctx.e_basis(0);
        assert_eq!(section_quotient_dim(&ctx, &zero, &zero).unwrap(), 0);
        assert_eq!(section_quotient_dim(&ctx, &zero, &e).unwrap(), 1);
        let two_e = e.scale(&Int::from(2));
        assert_eq!(section_quotient_dim(&ctx, &zero, &two_e).unwrap(), 4);
    }

    #[test]
    fn section_quotient_rejects_non_effective() {
        let ctx = ctx_single(2);
        let neg = ctx.zero_cycle().sub(&ctx.e_basis(0));
        assert_eq!(
            section_quotient_dim(&ctx, &ctx.zero_cycle(), &neg),
            Err(Error::NotEffective)
        );
        let frac = ctx.dual(0); // (1/2) E is not integral
        assert_eq!(
            section_quotient_dim(&ctx, &ctx.zero_cycle(), &frac),
            Err(Error::NotEffective)
        );
    }

    #[test]
    fn section_quotient_monotone_in_the_quotient_cycle() {
        let ctx = ctx_string(&[-2, -3]);
        let l = ctx.dual(1);
        let l1 = ctx.e_basis(0);
        let l2 = ctx.e_basis(1);
        let a = section_quotient_dim(&ctx, &l, &l1).unwrap();
        let b = section_quotient_dim(&ctx, &l, &l1.add(&l2)).unwrap();
        assert!(b >= a);
    }

    #[test]
    fn vertex_poincare_single_m2() {
        let ctx = ctx_single(2);
        let id = ctx.h_identity();
        let terms = vertex_poincare(&ctx, 0, &id, 3);
        let expect: Vec<(Rat, i64)> =
            vec![(rat(0, 1), 1), (rat(1, 1), 3), (rat(2, 1), 5), (rat(3, 1), 7)];
        assert_eq!(terms, expect);
        // nontrivial class: genuinely fractional exponents
        let g = ctx.class_of(&ctx.dual(0));
        let terms = vertex_poincare(&ctx, 0, &g, 3);
        let expect: Vec<(Rat, i64)> = vec![(rat(1, 2), 2), (rat(3, 2), 4), (rat(5, 2), 6)];
        assert_eq!(terms, expect);
    }

    #[test]
    fn vertex_poincare_single_m3_identity() {
        let ctx = ctx_single(3);
        let terms = vertex_poincare(&ctx, 0, &ctx.h_identity(), 5);
        for (m, (exp, c)) in terms.iter().enumerate() {
            assert_eq!(*exp, rat(m as i64, 1));
            assert_eq!(*c, 3 * m as i64 + 1);
        }
        assert_eq!(terms.len(), 6);
    }

    #[test]
    fn vertex_poincare_identity_constant_term() {
        for ctx in [ctx_twin_m8(), ctx_e8(), ctx_brieskorn_2_3_7()] {
            for u in 0..ctx.len() {
                let terms = vertex_poincare(&ctx, u, &ctx.h_identity(), 0);
                assert_eq!(terms, vec![(rat(0, 1), 1)]);
            }
        }
    }

    #[test]
    fn enumeration_weights_match_closed_form() {
        for ctx in [ctx_string(&[-2, -3]), ctx_twin_m8(), ctx_brieskorn_2_3_7()] {
            let target = ctx.minimal_cycle();
            scan_region(&ctx, &target, 1, &mut |pt, cls, w| {
                assert_eq!(w, coefficient(&ctx, pt));
                assert_eq!(*cls, ctx.class_of(pt));
            });
        }
    }

    #[test]
    fn bound_padding_is_invisible() {
        let ctx = ctx_twin_m8();
        let l = ctx.minimal_cycle();
        let base = truncated_sum_padded(&ctx, &l, 0);
        for pad in 1..=3 {
            assert_eq!(truncated_sum_padded(&ctx, &l, pad), base);
        }
    }
}
