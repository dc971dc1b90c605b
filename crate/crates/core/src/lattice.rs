//! The lattice context: exact arithmetic on `L`, its dual `L'` and the
//! discriminant group `H = L'/L`.
//!
//! All cycles are stored in the `E`-basis with a shared denominator
//! `d = |det I|`; a coordinate is the stored integer divided by `d`. Points
//! of `L` are exactly those whose stored numerators are divisible by `d`,
//! so integrality tests, fractional parts and class computations are all
//! exact integer arithmetic.

use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use crate::error::Error;
use crate::graph::PlumbingGraph;
use crate::linalg;
use crate::{Int, Rat};

/// A rational cycle: a point of the dual lattice `L'` written in the
/// `E`-basis. Construction goes through [`LatticeContext`], which guarantees
/// membership in `L'`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct QCycle {
    /// `d`-scaled coordinates in the `E`-basis.
    pub(crate) nums: Vec<Int>,
}

impl QCycle {
    pub(crate) fn raw(&self) -> &[Int] {
        &self.nums
    }

    pub fn len(&self) -> usize {
        self.nums.len()
    }

    pub fn is_empty(&self) -> bool {
        self.nums.is_empty()
    }

    pub fn is_zero(&self) -> bool {
        self.nums.iter().all(|x| x.is_zero())
    }

    /// Componentwise sum. Panics if the cycles have different lengths.
    pub fn add(&self, other: &QCycle) -> QCycle {
        assert_eq!(self.nums.len(), other.nums.len());
        QCycle {
            nums: self.nums.iter().zip(&other.nums).map(|(a, b)| a + b).collect(),
        }
    }

    /// Componentwise difference. Panics if the cycles have different lengths.
    pub fn sub(&self, other: &QCycle) -> QCycle {
        assert_eq!(self.nums.len(), other.nums.len());
        QCycle {
            nums: self.nums.iter().zip(&other.nums).map(|(a, b)| a - b).collect(),
        }
    }

    pub fn scale(&self, c: &Int) -> QCycle {
        QCycle { nums: self.nums.iter().map(|x| x * c).collect() }
    }

    /// Componentwise `x >= y`.
    pub fn dominates(&self, other: &QCycle) -> bool {
        self.nums.iter().zip(&other.nums).all(|(a, b)| a >= b)
    }
}

/// An element of the discriminant group `H = L'/L`, stored as the residue
/// tuple with respect to the nontrivial invariant factors of the
/// intersection matrix.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct HClass {
    pub(crate) residues: Vec<Int>,
}

impl HClass {
    pub fn residues(&self) -> &[Int] {
        &self.residues
    }

    pub fn is_identity(&self) -> bool {
        self.residues.iter().all(|r| r.is_zero())
    }
}

/// Immutable derived data of a validated plumbing graph.
pub struct LatticeContext {
    graph: PlumbingGraph,
    pub(crate) intersection: Vec<Vec<Int>>,
    /// `|det I|`, the shared denominator of all `L'` coordinates.
    pub(crate) d: Int,
    /// `dual_num[u][v] = d * (E_v^*)_u`; all entries strictly positive.
    pub(crate) dual_num: Vec<Vec<Int>>,
    canonical: QCycle,
    valency: Vec<usize>,
    ends: Vec<usize>,
    /// End slots used for monomial cycles: the ends of the graph, except
    /// that a one-vertex graph carries two formal slots on its vertex.
    end_slots: Vec<usize>,
    nodes: Vec<usize>,
    /// Order of `[E_v^*]` in `H`, per vertex.
    orders: Vec<Int>,
    /// All invariant factors of `I` (nonnegative, divisibility order).
    invariant_factors: Vec<Int>,
    /// Rows of `u_mat` carrying the nontrivial factors, with those factors.
    class_rows: Vec<(usize, Int)>,
    u_mat: Vec<Vec<Int>>,
    u_inv: Vec<Vec<Int>>,
    /// Vertex indices sorted by id string; tie-break order for Laufer's loop.
    id_order: Vec<usize>,
}

impl LatticeContext {
    /// Builds the context from a graph that passed validation. All derived
    /// data is computed exactly and re-verified against its defining
    /// equations before the context is returned.
    pub fn build(graph: &PlumbingGraph) -> Result<LatticeContext, Error> {
        let report = graph.validate();
        if !report.ok() {
            return Err(Error::InvalidGraph(report.violations));
        }
        let n = graph.len();
        let intersection = graph.intersection_matrix();
        let neg = linalg::negate(&intersection);
        let d = linalg::det_bareiss(&neg);
        debug_assert!(d.is_positive());

        // dual basis: column v of -(I^-1) is E_v^* in the E-basis
        let inv = linalg::inverse_rational(&intersection);
        let mut dual_num = vec![vec![Int::zero(); n]; n];
        for u in 0..n {
            for v in 0..n {
                let scaled = -&inv[u][v] * Rat::from_integer(d.clone());
                if !scaled.is_integer() {
                    return Err(Error::NonIntegralResult(format!(
                        "dual basis entry ({u},{v}) times det is not integral"
                    )));
                }
                let entry = scaled.to_integer();
                if !entry.is_positive() {
                    return Err(Error::NegativeResult(format!(
                        "dual basis entry ({u},{v}) is not strictly positive"
                    )));
                }
                dual_num[u][v] = entry;
            }
        }
        // (E_v^*, E_w) = -delta, checked exactly
        for v in 0..n {
            let col: Vec<Int> = (0..n).map(|u| dual_num[u][v].clone()).collect();
            let prod = linalg::mat_vec(&intersection, &col);
            for w in 0..n {
                let expect = if v == w { -&d } else { Int::zero() };
                assert_eq!(prod[w], expect, "dual basis defining property failed");
            }
        }

        let valency = graph.valencies();
        let ends: Vec<usize> = (0..n).filter(|&v| valency[v] == 1).collect();
        let nodes: Vec<usize> = (0..n).filter(|&v| valency[v] >= 3).collect();
        let end_slots = if n == 1 { vec![0, 0] } else { ends.clone() };

        // K = sum_v (euler_v + 2) E_v^*
        let mut k_num = vec![Int::zero(); n];
        for v in 0..n {
            let c = Int::from(graph.euler(v) + 2);
            for u in 0..n {
                k_num[u] += &c * &dual_num[u][v];
            }
        }
        let canonical = QCycle { nums: k_num };
        // (K + E_v, E_v) = -2, checked exactly
        {
            let prod = linalg::mat_vec(&intersection, &canonical.nums);
            for v in 0..n {
                let lhs = &prod[v] + &d * &intersection[v][v];
                assert_eq!(lhs, Int::from(-2) * &d, "canonical class equation failed");
            }
        }

        // Smith normal form of I: class map L' -> H
        let smith = linalg::smith_normal_form(&intersection);
        let recon = linalg::mat_mul(&linalg::mat_mul(&smith.u, &intersection), &smith.v);
        assert_eq!(recon, smith.d, "Smith form does not reconstruct");
        let invariant_factors: Vec<Int> = (0..n).map(|i| smith.d[i][i].clone()).collect();
        let product: Int = invariant_factors.iter().product();
        assert_eq!(product, d, "invariant factors must multiply to |det|");
        let class_rows: Vec<(usize, Int)> = invariant_factors
            .iter()
            .enumerate()
            .filter(|(_, f)| **f > Int::one())
            .map(|(i, f)| (i, f.clone()))
            .collect();
        let u_inv_rat = linalg::inverse_rational(&smith.u);
        let u_inv: Vec<Vec<Int>> = u_inv_rat
            .iter()
            .map(|row| {
                row.iter()
                    .map(|x| {
                        assert!(x.is_integer(), "inverse of unimodular matrix is integral");
                        x.to_integer()
                    })
                    .collect()
            })
            .collect();

        // e_v = d / gcd(d, gcd_u of column v)
        let orders: Vec<Int> = (0..n)
            .map(|v| {
                let g = (0..n).fold(d.clone(), |acc, u| acc.gcd(&dual_num[u][v]));
                &d / g
            })
            .collect();

        let mut id_order: Vec<usize> = (0..n).collect();
        id_order.sort_by(|&a, &b| graph.vertex_id(a).cmp(graph.vertex_id(b)));

        Ok(LatticeContext {
            graph: graph.clone(),
            intersection,
            d,
            dual_num,
            canonical,
            valency,
            ends,
            end_slots,
            nodes,
            orders,
            invariant_factors,
            class_rows,
            u_mat: smith.u,
            u_inv,
            id_order,
        })
    }

    pub fn graph(&self) -> &PlumbingGraph {
        &self.graph
    }

    pub fn len(&self) -> usize {
        self.graph.len()
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    /// `|det I|`.
    pub fn det(&self) -> &Int {
        &self.d
    }

    pub fn valency(&self, v: usize) -> usize {
        self.valency[v]
    }

    /// Vertices of valency one. Empty only for the one-vertex graph; see
    /// [`LatticeContext::end_slots`] for the monomial-cycle index set.
    pub fn ends(&self) -> &[usize] {
        &self.ends
    }

    /// Index set for monomial exponents: the end vertices, with the
    /// convention that a one-vertex graph carries two formal slots.
    pub fn end_slots(&self) -> &[usize] {
        &self.end_slots
    }

    pub fn nodes(&self) -> &[usize] {
        &self.nodes
    }

    /// All invariant factors of the intersection matrix (including ones).
    pub fn invariant_factors(&self) -> &[Int] {
        &self.invariant_factors
    }

    /// The nontrivial invariant factors; residues of [`HClass`] are taken
    /// against exactly this list.
    pub fn class_moduli(&self) -> Vec<Int> {
        self.class_rows.iter().map(|(_, f)| f.clone()).collect()
    }

    /// Order of the discriminant group (equals `|det I|`).
    pub fn h_order(&self) -> Int {
        self.d.clone()
    }

    pub fn zero_cycle(&self) -> QCycle {
        QCycle { nums: vec![Int::zero(); self.len()] }
    }

    /// The base cycle `E_v`.
    pub fn e_basis(&self, v: usize) -> QCycle {
        let mut nums = vec![Int::zero(); self.len()];
        nums[v] = self.d.clone();
        QCycle { nums }
    }

    /// The dual base cycle `E_v^*`.
    pub fn dual(&self, v: usize) -> QCycle {
        QCycle { nums: (0..self.len()).map(|u| self.dual_num[u][v].clone()).collect() }
    }

    /// An integral cycle from plain `E`-coordinates.
    pub fn integral_cycle(&self, coords: &[Int]) -> QCycle {
        assert_eq!(coords.len(), self.len());
        QCycle { nums: coords.iter().map(|c| c * &self.d).collect() }
    }

    /// A cycle from rational `E`-coordinates, verifying membership in `L'`.
    pub fn cycle_from_coords(&self, coords: &[Rat]) -> Result<QCycle, Error> {
        if coords.len() != self.len() {
            return Err(Error::ContextMismatch);
        }
        let mut nums = Vec::with_capacity(coords.len());
        for c in coords {
            let scaled = c * Rat::from_integer(self.d.clone());
            if !scaled.is_integer() {
                return Err(Error::NotInDualLattice(format!(
                    "coordinate {c} has denominator not dividing {}",
                    self.d
                )));
            }
            nums.push(scaled.to_integer());
        }
        let q = QCycle { nums };
        // genuine L' membership: all pairings with the E_v are integral
        let prod = linalg::mat_vec(&self.intersection, &q.nums);
        for (v, p) in prod.iter().enumerate() {
            if !p.mod_floor(&self.d).is_zero() {
                return Err(Error::NotInDualLattice(format!(
                    "pairing with E_{} is not an integer",
                    self.graph.vertex_id(v)
                )));
            }
        }
        Ok(q)
    }

    /// Rational `E`-coordinates of a cycle.
    pub fn coords(&self, x: &QCycle) -> Vec<Rat> {
        x.nums
            .iter()
            .map(|nu| Rat::new(nu.clone(), self.d.clone()))
            .collect()
    }

    /// The extended intersection form, exact.
    pub fn pair(&self, x: &QCycle, y: &QCycle) -> Rat {
        assert_eq!(x.nums.len(), self.len());
        assert_eq!(y.nums.len(), self.len());
        let prod = linalg::mat_vec(&self.intersection, &y.nums);
        let num: Int = x.nums.iter().zip(&prod).map(|(a, b)| a * b).sum();
        Rat::new(num, &self.d * &self.d)
    }

    /// [`LatticeContext::pair`] with an explicit context check instead of a
    /// panic; the entry point for cycles of unknown provenance.
    pub fn checked_pair(&self, x: &QCycle, y: &QCycle) -> Result<Rat, Error> {
        if x.nums.len() != self.len() || y.nums.len() != self.len() {
            return Err(Error::ContextMismatch);
        }
        Ok(self.pair(x, y))
    }

    /// `(x, E_v)`, an integer for every point of `L'`.
    pub fn pair_e(&self, x: &QCycle, v: usize) -> Int {
        let num: Int = self
            .intersection[v]
            .iter()
            .zip(&x.nums)
            .map(|(c, nu)| c * nu)
            .sum();
        let (q, r) = num.div_rem(&self.d);
        debug_assert!(r.is_zero(), "QCycle must lie in L'");
        q
    }

    /// Exponents of `x` against the dual basis: `k_v = -(x, E_v)`. Unique
    /// because the `E_v^*` form a basis of `L'`.
    pub fn dual_exponents(&self, x: &QCycle) -> Vec<Int> {
        (0..self.len()).map(|v| -self.pair_e(x, v)).collect()
    }

    /// The canonical class `K`, the unique solution of `(K+E_v, E_v) = -2`.
    pub fn canonical_class(&self) -> &QCycle {
        &self.canonical
    }

    pub fn is_integral(&self, x: &QCycle) -> bool {
        x.nums.iter().all(|nu| nu.mod_floor(&self.d).is_zero())
    }

    pub fn is_effective(&self, x: &QCycle) -> bool {
        x.nums.iter().all(|nu| !nu.is_negative())
    }

    /// True iff `(x, E_v) <= 0` for every vertex: membership in the
    /// anti-nef cone.
    pub fn is_antinef(&self, x: &QCycle) -> bool {
        (0..self.len()).all(|v| !self.pair_e(x, v).is_positive())
    }

    /// Componentwise fractional part: the representative of `[x]` in the
    /// half-open unit box, with `x - r_rep(x)` integral.
    pub fn r_rep(&self, x: &QCycle) -> QCycle {
        QCycle { nums: x.nums.iter().map(|nu| nu.mod_floor(&self.d)).collect() }
    }

    /// Componentwise `max(x, 0)`.
    pub fn pos_part(&self, x: &QCycle) -> QCycle {
        QCycle {
            nums: x
                .nums
                .iter()
                .map(|nu| if nu.is_negative() { Int::zero() } else { nu.clone() })
                .collect(),
        }
    }

    /// Order of `[E_v^*]` in `H`: the least `k > 0` with `k E_v^*` integral.
    pub fn order_e(&self, v: usize) -> Int {
        self.orders[v].clone()
    }

    /// Class of `x` in `H`, via the Smith normal form of the intersection
    /// matrix.
    pub fn class_of(&self, x: &QCycle) -> HClass {
        let k = self.dual_exponents(x);
        let image = linalg::mat_vec(&self.u_mat, &k);
        HClass {
            residues: self
                .class_rows
                .iter()
                .map(|(row, f)| image[*row].mod_floor(f))
                .collect(),
        }
    }

    pub fn h_identity(&self) -> HClass {
        HClass { residues: vec![Int::zero(); self.class_rows.len()] }
    }

    pub fn h_add(&self, a: &HClass, b: &HClass) -> HClass {
        HClass {
            residues: self
                .class_rows
                .iter()
                .zip(a.residues.iter().zip(&b.residues))
                .map(|((_, f), (x, y))| (x + y).mod_floor(f))
                .collect(),
        }
    }

    pub fn h_neg(&self, a: &HClass) -> HClass {
        HClass {
            residues: self
                .class_rows
                .iter()
                .zip(&a.residues)
                .map(|((_, f), x)| (-x).mod_floor(f))
                .collect(),
        }
    }

    /// Residue tuple from raw integers, reduced componentwise.
    pub fn h_from_residues(&self, rs: &[Int]) -> Result<HClass, Error> {
        if rs.len() != self.class_rows.len() {
            return Err(Error::BadLiteral(format!(
                "class tuple must have {} components",
                self.class_rows.len()
            )));
        }
        Ok(HClass {
            residues: self
                .class_rows
                .iter()
                .zip(rs)
                .map(|((_, f), x)| x.mod_floor(f))
                .collect(),
        })
    }

    /// All classes of `H` in lexicographic residue order. The first element
    /// is the identity.
    pub fn enumerate_classes(&self) -> Vec<HClass> {
        let moduli: Vec<Int> = self.class_rows.iter().map(|(_, f)| f.clone()).collect();
        let mut out = Vec::new();
        let mut cur = vec![Int::zero(); moduli.len()];
        loop {
            out.push(HClass { residues: cur.clone() });
            let mut i = moduli.len();
            loop {
                if i == 0 {
                    return out;
                }
                i -= 1;
                cur[i] += 1;
                if cur[i] < moduli[i] {
                    break;
                }
                cur[i] = Int::zero();
            }
        }
    }

    /// The representative of a class inside the half-open unit box `Q`.
    pub fn rep_in_q(&self, h: &HClass) -> QCycle {
        let n = self.len();
        let mut padded = vec![Int::zero(); n];
        for ((row, _), r) in self.class_rows.iter().zip(&h.residues) {
            padded[*row] = r.clone();
        }
        let y = linalg::mat_vec(&self.u_inv, &padded);
        let mut nums = vec![Int::zero(); n];
        for (v, yv) in y.iter().enumerate() {
            for u in 0..n {
                nums[u] += yv * &self.dual_num[u][v];
            }
        }
        self.r_rep(&QCycle { nums })
    }

    /// Laufer's algorithm: starting from the reduced cycle, repeatedly add
    /// `E_v` for a vertex pairing positively (smallest id first) until the
    /// cycle is anti-nef. Returns the minimal cycle `Z_min`, the unique
    /// minimal nonzero element of the integral anti-nef cone.
    pub fn minimal_cycle(&self) -> QCycle {
        let mut z = QCycle { nums: vec![self.d.clone(); self.len()] };
        'outer: loop {
            for &v in &self.id_order {
                if self.pair_e(&z, v).is_positive() {
                    z.nums[v] += &self.d;
                    continue 'outer;
                }
            }
            return z;
        }
    }

    /// A representative `x` of the class `h` with `x + K` anti-nef:
    /// the unit-box representative shifted by multiples of
    /// `sum_v e_v E_v^*` (an integral cycle) until the cone condition holds.
    pub fn artin_shift(&self, h: &HClass) -> QCycle {
        let n = self.len();
        let mut step = self.zero_cycle();
        for v in 0..n {
            step = step.add(&self.dual(v).scale(&self.orders[v]));
        }
        debug_assert!(self.is_integral(&step));
        let mut x = self.rep_in_q(h);
        while !self.is_antinef(&x.add(self.canonical_class())) {
            x = x.add(&step);
        }
        x
    }

    /// Exact fractional phase of the discriminant pairing: the value
    /// `(rep(a), rep(b)) mod 1` in `[0, 1)`. The character attached to `a`
    /// sends `b` to `exp(2 pi i * theta_phase(a, b))`.
    pub fn theta_phase(&self, a: &HClass, b: &HClass) -> Rat {
        let p = self.pair(&self.rep_in_q(a), &self.rep_in_q(b));
        let f = p.floor();
        p - f
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::testutil::*;

    #[test]
    fn single_minus2_context() {
        let ctx = ctx_single(2);
        assert_eq!(*ctx.det(), Int::from(2));
        // E^* = (1/2) E
        assert_eq!(ctx.coords(&ctx.dual(0)), vec![rat(1, 2)]);
        assert!(ctx.canonical_class().is_zero());
        assert_eq!(ctx.class_moduli(), vec![Int::from(2)]);
        assert_eq!(ctx.order_e(0), Int::from(2));
        assert_eq!(ctx.end_slots(), &[0, 0]);
    }

    #[test]
    fn unimodular_fixture_has_integral_duals() {
        let ctx = ctx_one_node_m7();
        assert_eq!(*ctx.det(), Int::from(1));
        for v in 0..ctx.len() {
            assert!(ctx.is_integral(&ctx.dual(v)));
        }
        assert!(ctx.class_moduli().is_empty());
    }

    #[test]
    fn twin_m8_discriminant_group() {
        let ctx = ctx_twin_m8();
        assert_eq!(*ctx.det(), Int::from(3));
        assert_eq!(ctx.class_moduli(), vec![Int::from(3)]);
        // the first -3 leg has order 3 in H and generates it
        let z2 = ctx.graph().vertex_index("z2").unwrap();
        assert_eq!(ctx.order_e(z2), Int::from(3));
        let g = ctx.class_of(&ctx.dual(z2));
        assert!(!g.is_identity());
        assert!(!ctx.h_add(&g, &g).is_identity());
        assert!(ctx.h_add(&ctx.h_add(&g, &g), &g).is_identity());
    }

    #[test]
    fn pairing_defining_properties() {
        for ctx in [ctx_single(2), ctx_string(&[-2, -3]), ctx_twin_m8()] {
            for v in 0..ctx.len() {
                for w in 0..ctx.len() {
                    let expect = if v == w { rat(-1, 1) } else { rat(0, 1) };
                    assert_eq!(ctx.pair(&ctx.dual(v), &ctx.e_basis(w)), expect);
                }
            }
        }
        let ctx = ctx_single(2);
        assert_eq!(ctx.pair(&ctx.dual(0), &ctx.dual(0)), rat(-1, 2));
    }

    #[test]
    fn canonical_class_of_ade_tree_vanishes() {
        let ctx = ctx_e8();
        assert!(ctx.canonical_class().is_zero());
        assert_eq!(ctx.pair(ctx.canonical_class(), ctx.canonical_class()), rat(0, 1));
    }

    #[test]
    fn canonical_class_examples() {
        let ctx = ctx_single(3);
        // K = (-3+2) E^* = -(1/3) E
        assert_eq!(ctx.coords(ctx.canonical_class()), vec![rat(-1, 3)]);

        let ctx = ctx_brieskorn_2_3_7();
        let center = ctx.graph().vertex_index("c").unwrap();
        assert_eq!(
            ctx.pair(ctx.canonical_class(), &ctx.e_basis(center)),
            rat(-1, 1)
        );
    }

    #[test]
    fn class_map_and_r_rep() {
        let ctx = ctx_single(2);
        let es = ctx.dual(0);
        // class_of restricted to L is trivial
        assert!(ctx.class_of(&ctx.e_basis(0)).is_identity());
        assert!(ctx.class_of(&ctx.integral_cycle(&[Int::from(5)])).is_identity());
        // r_rep(3 E^*) = E^*, and [E^*] generates Z/2
        let three = es.scale(&Int::from(3));
        assert_eq!(ctx.r_rep(&three), es);
        let g = ctx.class_of(&es);
        assert!(!g.is_identity());
        assert!(ctx.h_add(&g, &g).is_identity());
        // rep_in_q inverts class_of
        assert_eq!(ctx.class_of(&ctx.rep_in_q(&g)), g);
    }

    #[test]
    fn antinef_membership() {
        let ctx = ctx_single(2);
        assert!(ctx.is_antinef(&ctx.zero_cycle()));
        assert!(ctx.is_antinef(&ctx.dual(0)));
        let neg_e = ctx.zero_cycle().sub(&ctx.e_basis(0));
        assert!(!ctx.is_antinef(&neg_e));
        for ctx in [ctx_twin_m8(), ctx_e8()] {
            for v in 0..ctx.len() {
                assert!(ctx.is_antinef(&ctx.dual(v)));
            }
        }
    }

    #[test]
    fn minimal_cycle_examples() {
        for p in 2..=7 {
            let ctx = ctx_single(p);
            assert_eq!(ctx.minimal_cycle(), ctx.e_basis(0));
        }
        let ctx = ctx_string(&[-2, -2]);
        assert_eq!(
            ctx.minimal_cycle(),
            ctx.integral_cycle(&[Int::from(1), Int::from(1)])
        );
        let ctx = ctx_twin_m8();
        let z = ctx.minimal_cycle();
        assert_eq!(ctx.pair(&z, &z), rat(-2, 1));
    }

    #[test]
    fn artin_shift_contract() {
        let ctx = ctx_e8();
        // ADE tree: K = 0 and the zero cycle already sits in the cone
        assert!(ctx.artin_shift(&ctx.h_identity()).is_zero());

        let ctx = ctx_single(2);
        let g = ctx.class_of(&ctx.dual(0));
        assert_eq!(ctx.artin_shift(&g), ctx.dual(0));

        for ctx in [ctx_single(3), ctx_string(&[-2, -3]), ctx_twin_m8()] {
            for h in ctx.enumerate_classes() {
                let x = ctx.artin_shift(&h);
                assert_eq!(ctx.class_of(&x), h);
                assert!(ctx.is_antinef(&x.add(ctx.canonical_class())));
            }
        }
    }

    #[test]
    fn class_enumeration_size() {
        let ctx = ctx_string(&[-2, -3]);
        assert_eq!(Int::from(ctx.enumerate_classes().len()), ctx.h_order());
        assert_eq!(*ctx.det(), Int::from(5));
    }
}
