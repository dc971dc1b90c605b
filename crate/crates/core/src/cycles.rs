//! Monomial cycles, principal cycles, the maximal cycle, base points and
//! the multiplicity.
//!
//! Monomial cycles are the nonnegative integer combinations of the duals of
//! the end vertices; a one-vertex graph carries two formal end slots on its
//! vertex. They are the divisor shapes of the monomials in the end-curve
//! sections, which is what makes every decision procedure here a bounded
//! search over exponent vectors: pinning one coordinate of a monomial cycle
//! bounds every exponent, because all entries of every `E_v^*` are strictly
//! positive.

use std::collections::BTreeSet;

use num_traits::Signed;

use crate::error::Error;
use crate::lattice::{LatticeContext, QCycle};
use crate::series::{nums_i128, to_i128};
use crate::Int;

/// Default per-coordinate cap for staircase searches; overridable from the
/// command line.
pub const DEFAULT_STAIRCASE_CAP: u64 = 1 << 16;

/// Outcome of the principal-cycle test: either a monomial witness per
/// vertex, or the first vertex with no witness.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum PrincipalCertificate {
    /// `witnesses[v]` is an exponent vector over the end slots whose
    /// monomial cycle dominates the query, agrees with it at `v`, and
    /// differs from it by an integral effective cycle.
    Principal { witnesses: Vec<Vec<u64>> },
    NotPrincipal { refuted: usize },
}

impl PrincipalCertificate {
    pub fn is_principal(&self) -> bool {
        matches!(self, PrincipalCertificate::Principal { .. })
    }
}

/// Verdict of the per-node, per-branch monomial condition.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BranchVerdict {
    pub node: usize,
    /// The neighbor of `node` identifying the branch.
    pub branch_root: usize,
    /// Exponent vector over all end slots (zero outside the branch), when
    /// one exists.
    pub witness: Option<Vec<u64>>,
}

#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct MonomialConditionReport {
    pub verdicts: Vec<BranchVerdict>,
}

impl MonomialConditionReport {
    pub fn satisfied(&self) -> bool {
        self.verdicts.iter().all(|v| v.witness.is_some())
    }
}

/// A double point of the divisor `E + end curves`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum DoublePoint {
    /// Intersection of two exceptional curves; components ordered by
    /// vertex id.
    Edge { a: usize, b: usize },
    /// Intersection of the end curve of `slot` with its exceptional curve.
    EndCurve { slot: usize, vertex: usize },
}

/// The monomial-ideal staircase at one double point.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct NewtonStaircase {
    pub point: DoublePoint,
    /// True iff the staircase misses the origin, i.e. the ideal is proper.
    pub base_point: bool,
    /// Pairwise incomparable points, sorted by the first coordinate.
    pub minimal_points: Vec<(u64, u64)>,
    /// Vertices of the convex boundary, sorted by the first coordinate;
    /// for a base point it runs from the `b`-axis to the `a`-axis.
    pub boundary: Vec<(u64, u64)>,
    /// Twice the area cut off below the boundary.
    pub doubled_area: u64,
}

/// The assembled multiplicity.
#[derive(Debug, Clone)]
pub struct MultiplicityReport {
    pub zmax: QCycle,
    pub neg_zmax_square: Int,
    pub staircases: Vec<NewtonStaircase>,
    pub total: Int,
}

/// The monomial cycle `D(alpha) = sum_i alpha_i E_i^*` over the end slots.
pub fn monomial_cycle(ctx: &LatticeContext, alpha: &[u64]) -> Result<QCycle, Error> {
    let slots = ctx.end_slots();
    if alpha.len() != slots.len() {
        return Err(Error::UnknownEnd);
    }
    let mut acc = ctx.zero_cycle();
    for (&a, &v) in alpha.iter().zip(slots) {
        if a > 0 {
            acc = acc.add(&ctx.dual(v).scale(&Int::from(a)));
        }
    }
    Ok(acc)
}

/// Depth-first enumeration of monomial-cycle exponent vectors within
/// per-slot caps.
struct SlotScan {
    n: usize,
    /// `d`-scaled dual column per slot.
    cols: Vec<Vec<i128>>,
}

impl SlotScan {
    fn new(ctx: &LatticeContext, slots: &[usize]) -> Self {
        SlotScan {
            n: ctx.len(),
            cols: slots
                .iter()
                .map(|&s| (0..ctx.len()).map(|u| to_i128(&ctx.dual_num[u][s])).collect())
                .collect(),
        }
    }

    /// `prune` must be monotone in the coordinates; `visit` returns `true`
    /// to abort the whole walk.
    fn walk(
        &self,
        caps: &[u64],
        prune: &impl Fn(&[i128]) -> bool,
        visit: &mut impl FnMut(&[u64], &[i128]) -> bool,
    ) {
        let mut point = vec![0i128; self.n];
        let mut alpha = vec![0u64; self.cols.len()];
        self.step(0, caps, &mut point, &mut alpha, prune, visit);
    }

    fn step(
        &self,
        level: usize,
        caps: &[u64],
        point: &mut Vec<i128>,
        alpha: &mut Vec<u64>,
        prune: &impl Fn(&[i128]) -> bool,
        visit: &mut impl FnMut(&[u64], &[i128]) -> bool,
    ) -> bool {
        if level == self.cols.len() {
            if prune(point) {
                return false;
            }
            return visit(alpha, point);
        }
        let col = &self.cols[level];
        let mut added = 0i128;
        let mut stop = false;
        for k in 0..=caps[level] {
            if k > 0 {
                for (p, c) in point.iter_mut().zip(col) {
                    *p += c;
                }
                added += 1;
            }
            if prune(point) {
                break;
            }
            alpha[level] = k;
            if self.step(level + 1, caps, point, alpha, prune, visit) {
                stop = true;
                break;
            }
        }
        alpha[level] = 0;
        if added > 0 {
            for (p, c) in point.iter_mut().zip(col) {
                *p -= added * c;
            }
        }
        stop
    }
}

fn floor_u64(num: i128, den: i128) -> u64 {
    if num < 0 {
        0
    } else {
        u64::try_from(num / den).expect("search bound does not fit in u64")
    }
}

/// Decides membership in the semigroup of principal rational cycles. Only
/// defined on the anti-nef cone.
///
/// For each vertex `v` the search looks for a monomial cycle that equals the
/// query at `v` and exceeds it by an integral effective cycle elsewhere;
/// the query's `v`-coordinate pins every exponent.
pub fn is_principal(ctx: &LatticeContext, l: &QCycle) -> Result<PrincipalCertificate, Error> {
    if !ctx.is_antinef(l) {
        return Err(Error::InputOutsideCone);
    }
    let slots = ctx.end_slots().to_vec();
    let scan = SlotScan::new(ctx, &slots);
    let lnums = nums_i128(l);
    let d = to_i128(&ctx.d);
    let mut witnesses = Vec::with_capacity(ctx.len());
    for v in 0..ctx.len() {
        let caps: Vec<u64> = (0..slots.len())
            .map(|i| floor_u64(lnums[v], scan.cols[i][v]))
            .collect();
        let pin = lnums[v];
        let mut found: Option<Vec<u64>> = None;
        scan.walk(
            &caps,
            &|pt| pt[v] > pin,
            &mut |alpha, pt| {
                if pt[v] != pin {
                    return false;
                }
                let good = pt
                    .iter()
                    .zip(&lnums)
                    .all(|(p, q)| p - q >= 0 && (p - q) % d == 0);
                if good {
                    found = Some(alpha.to_vec());
                    true
                } else {
                    false
                }
            },
        );
        match found {
            Some(w) => witnesses.push(w),
            None => return Ok(PrincipalCertificate::NotPrincipal { refuted: v }),
        }
    }
    Ok(PrincipalCertificate::Principal { witnesses })
}

/// The maximal cycle: the componentwise infimum of the nonzero integral
/// monomial cycles.
///
/// The infimum over the infinite semigroup equals the infimum over a finite
/// generating set: reducing an exponent vector componentwise modulo the
/// orders `e_i` keeps the cycle integral and never increases it, and a
/// vector that reduces to zero dominates some `e_i E_i^*`.
pub fn maximal_cycle(ctx: &LatticeContext) -> QCycle {
    let slots = ctx.end_slots().to_vec();
    let scan = SlotScan::new(ctx, &slots);
    let d = to_i128(&ctx.d);
    let mut best: Option<Vec<i128>> = None;
    let mut consider = |cand: &[i128], best: &mut Option<Vec<i128>>| match best {
        None => *best = Some(cand.to_vec()),
        Some(b) => {
            for (acc, c) in b.iter_mut().zip(cand) {
                if c < acc {
                    *acc = *c;
                }
            }
        }
    };
    let orders: Vec<u64> = slots
        .iter()
        .map(|&s| {
            use num_traits::ToPrimitive;
            ctx.order_e(s).to_u64().expect("order fits in u64")
        })
        .collect();
    for (i, &e) in orders.iter().enumerate() {
        let axis: Vec<i128> = scan.cols[i].iter().map(|c| c * e as i128).collect();
        consider(&axis, &mut best);
    }
    let caps: Vec<u64> = orders.iter().map(|&e| e - 1).collect();
    scan.walk(&caps, &|_| false, &mut |alpha, pt| {
        if alpha.iter().any(|&a| a > 0) && pt.iter().all(|x| x % d == 0) {
            consider(pt, &mut best);
        }
        false
    });
    QCycle {
        nums: best.expect("generating set is nonempty").iter().map(|&x| Int::from(x)).collect(),
    }
}

/// Checks, for every node and every branch at it, that some monomial cycle
/// supported on the branch's ends exceeds the node's dual by an integral
/// effective cycle supported on the branch.
pub fn monomial_condition(ctx: &LatticeContext) -> MonomialConditionReport {
    let graph = ctx.graph();
    let n = ctx.len();
    let mut adj = vec![Vec::new(); n];
    for &(a, b) in graph.edges() {
        adj[a].push(b);
        adj[b].push(a);
    }
    for l in adj.iter_mut() {
        l.sort_unstable();
    }
    let slots = ctx.end_slots().to_vec();
    let d = to_i128(&ctx.d);
    let mut verdicts = Vec::new();
    for &v in ctx.nodes() {
        for &root in &adj[v] {
            // branch component of `root` in the tree minus `v`
            let mut in_branch = vec![false; n];
            let mut stack = vec![root];
            while let Some(x) = stack.pop() {
                if in_branch[x] {
                    continue;
                }
                in_branch[x] = true;
                for &y in &adj[x] {
                    if y != v && !in_branch[y] {
                        stack.push(y);
                    }
                }
            }
            let branch_slots: Vec<usize> =
                (0..slots.len()).filter(|&i| in_branch[slots[i]]).collect();
            let sub_slots: Vec<usize> = branch_slots.iter().map(|&i| slots[i]).collect();
            let scan = SlotScan::new(ctx, &sub_slots);
            let target = nums_i128(&ctx.dual(v));
            let pin = target[v];
            let caps: Vec<u64> = (0..sub_slots.len())
                .map(|i| floor_u64(pin, scan.cols[i][v]))
                .collect();
            let mut found: Option<Vec<u64>> = None;
            scan.walk(
                &caps,
                &|pt| pt[v] > pin,
                &mut |alpha, pt| {
                    if pt[v] != pin {
                        return false;
                    }
                    let mut ok = true;
                    for u in 0..n {
                        let diff = pt[u] - target[u];
                        if diff < 0 || diff % d != 0 {
                            ok = false;
                            break;
                        }
                        if u != v && !in_branch[u] && diff != 0 {
                            ok = false;
                            break;
                        }
                    }
                    if ok {
                        let mut full = vec![0u64; slots.len()];
                        for (j, &i) in branch_slots.iter().enumerate() {
                            full[i] = alpha[j];
                        }
                        found = Some(full);
                        true
                    } else {
                        false
                    }
                },
            );
            verdicts.push(BranchVerdict { node: v, branch_root: root, witness: found });
        }
    }
    MonomialConditionReport { verdicts }
}

/// All double points of `E + end curves` in deterministic order: edges
/// sorted by id pair, then end-curve points in slot order.
pub fn double_points(ctx: &LatticeContext) -> Vec<DoublePoint> {
    let graph = ctx.graph();
    let mut edges: Vec<DoublePoint> = graph
        .edges()
        .iter()
        .map(|&(a, b)| {
            if graph.vertex_id(a) <= graph.vertex_id(b) {
                DoublePoint::Edge { a, b }
            } else {
                DoublePoint::Edge { a: b, b: a }
            }
        })
        .collect();
    edges.sort_by(|x, y| {
        let key = |p: &DoublePoint| match *p {
            DoublePoint::Edge { a, b } => {
                (graph.vertex_id(a).to_owned(), graph.vertex_id(b).to_owned())
            }
            _ => unreachable!(),
        };
        key(x).cmp(&key(y))
    });
    for (slot, &v) in ctx.end_slots().iter().enumerate() {
        edges.push(DoublePoint::EndCurve { slot, vertex: v });
    }
    edges
}

fn checked_caps(caps: Vec<u64>, cap: u64, what: &str) -> Result<Vec<u64>, Error> {
    if let Some(bad) = caps.iter().find(|&&c| c > cap) {
        return Err(Error::UnboundedStaircase(format!(
            "{what} needs per-slot bound {bad} > cap {cap}"
        )));
    }
    Ok(caps)
}

/// Orders of a monomial cycle relative to the maximal cycle at the two
/// components of a double point.
fn orders_at(
    point: &DoublePoint,
    alpha: &[u64],
    pt: &[i128],
    zmax: &[i128],
    d: i128,
) -> (u64, u64) {
    let ord = |vertex: usize| -> u64 {
        let diff = pt[vertex] - zmax[vertex];
        debug_assert!(diff >= 0 && diff % d == 0);
        u64::try_from(diff / d).expect("order fits in u64")
    };
    match *point {
        DoublePoint::Edge { a, b } => (ord(a), ord(b)),
        DoublePoint::EndCurve { slot, vertex } => (alpha[slot], ord(vertex)),
    }
}

/// Collects the staircase of one double point.
///
/// Both axis values come from searches in which one coordinate of the
/// monomial cycle is pinned, which bounds every exponent: a point with
/// `b = 0` agrees with the maximal cycle at the second component, and the
/// componentwise-infimum description of the maximal cycle guarantees such a
/// point exists. Points beyond either axis value lie inside an axis
/// quadrant and cannot touch the boundary, so the final enumeration is
/// bounded by the axis values.
fn staircase_at(
    ctx: &LatticeContext,
    zmax: &QCycle,
    point: &DoublePoint,
    cap: u64,
) -> Result<NewtonStaircase, Error> {
    let slots = ctx.end_slots().to_vec();
    let scan = SlotScan::new(ctx, &slots);
    let d = to_i128(&ctx.d);
    let zm = nums_i128(zmax);
    let n = ctx.len();

    let is_candidate = |pt: &[i128]| -> bool {
        pt.iter().zip(&zm).all(|(p, z)| p >= z && p % d == 0)
    };

    // minimal first or second staircase coordinate over the monomial cycles
    // agreeing with the maximal cycle at `pin_vertex`
    let pinned_axis = |pin_vertex: usize, minimize_first: bool| -> Result<Option<u64>, Error> {
        let pin = zm[pin_vertex];
        let caps = checked_caps(
            (0..slots.len()).map(|i| floor_u64(pin, scan.cols[i][pin_vertex])).collect(),
            cap,
            "axis search",
        )?;
        let mut best: Option<u64> = None;
        scan.walk(
            &caps,
            &|pt| pt[pin_vertex] > pin,
            &mut |alpha, pt| {
                if pt[pin_vertex] == pin && is_candidate(pt) {
                    let (a, b) = orders_at(point, alpha, pt, &zm, d);
                    let val = if minimize_first { a } else { b };
                    best = Some(best.map_or(val, |cur| cur.min(val)));
                }
                false
            },
        );
        Ok(best)
    };

    let (a_star, b_star) = match *point {
        DoublePoint::Edge { a: va, b: vb } => {
            (pinned_axis(vb, true)?, pinned_axis(va, false)?)
        }
        DoublePoint::EndCurve { slot, vertex } => {
            let a_star = pinned_axis(vertex, true)?;
            // b-axis: the slot exponent is zero; a large multiple of any
            // other slot is a candidate, and the value it attains bounds
            // the exact search
            let other = (0..slots.len()).find(|&j| j != slot).expect("at least two slots");
            let e = to_i128(&ctx.order_e(slots[other]));
            let step: Vec<i128> = scan.cols[other].iter().map(|c| c * e).collect();
            let mut reach = 0i128;
            for u in 0..n {
                let need = zm[u].div_ceil(step[u]);
                if need > reach {
                    reach = need;
                }
            }
            let limit = step[vertex] * reach;
            let caps = checked_caps(
                (0..slots.len())
                    .map(|j| if j == slot { 0 } else { floor_u64(limit, scan.cols[j][vertex]) })
                    .collect(),
                cap,
                "axis search",
            )?;
            let mut best: Option<u64> = None;
            scan.walk(
                &caps,
                &|pt| pt[vertex] > limit,
                &mut |alpha, pt| {
                    if alpha[slot] == 0 && is_candidate(pt) {
                        let (_, b) = orders_at(point, alpha, pt, &zm, d);
                        best = Some(best.map_or(b, |cur| cur.min(b)));
                    }
                    false
                },
            );
            (a_star, best)
        }
    };
    let (a_star, b_star) = match (a_star, b_star) {
        (Some(a), Some(b)) => (a, b),
        _ => {
            return Err(Error::UnboundedStaircase(
                "no monomial cycle reaches a staircase axis".into(),
            ))
        }
    };

    // collect all points with a <= A*, b <= B*; anything beyond is inside
    // an axis quadrant
    let (va, limit_a, vb, limit_b, slot_cap) = match *point {
        DoublePoint::Edge { a: va, b: vb } => {
            let la = zm[va] + a_star as i128 * d;
            let lb = zm[vb] + b_star as i128 * d;
            (va, la, vb, lb, None)
        }
        DoublePoint::EndCurve { slot, vertex } => {
            let lb = zm[vertex] + b_star as i128 * d;
            (vertex, lb, vertex, lb, Some(slot))
        }
    };
    let caps = checked_caps(
        (0..slots.len())
            .map(|j| {
                let mut c = floor_u64(limit_a, scan.cols[j][va])
                    .min(floor_u64(limit_b, scan.cols[j][vb]));
                if slot_cap == Some(j) {
                    c = c.min(a_star);
                }
                c
            })
            .collect(),
        cap,
        "staircase enumeration",
    )?;
    let mut pts: BTreeSet<(u64, u64)> = BTreeSet::new();
    scan.walk(
        &caps,
        &|pt| pt[va] > limit_a || pt[vb] > limit_b,
        &mut |alpha, pt| {
            if is_candidate(pt) {
                let (a, b) = orders_at(point, alpha, pt, &zm, d);
                if a <= a_star && b <= b_star {
                    pts.insert((a, b));
                }
            }
            false
        },
    );

    let base_point = !pts.contains(&(0, 0));
    let minimal: Vec<(u64, u64)> = pts
        .iter()
        .filter(|p| !pts.iter().any(|q| q != *p && q.0 <= p.0 && q.1 <= p.1))
        .copied()
        .collect();
    let (boundary, doubled_area) = if !base_point {
        (vec![(0, 0)], 0)
    } else {
        let hull = lower_hull(&minimal);
        let area: u64 = hull
            .windows(2)
            .map(|w| (w[1].0 - w[0].0) * (w[0].1 + w[1].1))
            .sum();
        (hull, area)
    };
    Ok(NewtonStaircase {
        point: *point,
        base_point,
        minimal_points: minimal,
        boundary,
        doubled_area,
    })
}

/// Lower-left convex hull of an antichain sorted by the first coordinate.
fn lower_hull(minimal: &[(u64, u64)]) -> Vec<(u64, u64)> {
    let mut hull: Vec<(u64, u64)> = Vec::new();
    for &p in minimal {
        while hull.len() >= 2 {
            let (x1, y1) = hull[hull.len() - 2];
            let (x2, y2) = hull[hull.len() - 1];
            // pop the middle point if it lies on or above the chord
            let cross = (x2 as i128 - x1 as i128) * (p.1 as i128 - y1 as i128)
                - (y2 as i128 - y1 as i128) * (p.0 as i128 - x1 as i128);
            if cross >= 0 {
                hull.pop();
            } else {
                break;
            }
        }
        hull.push(p);
    }
    hull
}

/// Newton staircases at all double points, relative to the given maximal
/// cycle.
pub fn newton_staircases(
    ctx: &LatticeContext,
    zmax: &QCycle,
    cap: u64,
) -> Result<Vec<NewtonStaircase>, Error> {
    double_points(ctx)
        .iter()
        .map(|p| staircase_at(ctx, zmax, p, cap))
        .collect()
}

/// The multiplicity: `-Z_max^2` plus the doubled staircase areas over the
/// base points.
pub fn multiplicity(ctx: &LatticeContext, cap: u64) -> Result<MultiplicityReport, Error> {
    let zmax = maximal_cycle(ctx);
    let staircases = newton_staircases(ctx, &zmax, cap)?;
    let sq = ctx.pair(&zmax, &zmax);
    debug_assert!(sq.is_integer());
    let neg_zmax_square = -sq.to_integer();
    let mut total = neg_zmax_square.clone();
    for s in &staircases {
        if s.base_point {
            total += Int::from(s.doubled_area);
        }
    }
    Ok(MultiplicityReport { zmax, neg_zmax_square, staircases, total })
}
