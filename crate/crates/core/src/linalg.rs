//! Exact integer/rational linear algebra: determinants, inverses, Smith
//! normal form. Everything here works on dense `Vec<Vec<_>>` matrices; the
//! graphs this crate handles are desk-scale, so no sparsity or performance
//! tricks are attempted.

use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use crate::{Int, Rat};

pub fn negate(m: &[Vec<Int>]) -> Vec<Vec<Int>> {
    m.iter().map(|row| row.iter().map(|x| -x).collect()).collect()
}

/// Determinant by fraction-free (Bareiss) elimination with row pivoting.
pub fn det_bareiss(m: &[Vec<Int>]) -> Int {
    let n = m.len();
    if n == 0 {
        return Int::one();
    }
    let mut a: Vec<Vec<Int>> = m.to_vec();
    let mut sign = 1i32;
    let mut prev = Int::one();
    for k in 0..n {
        if a[k][k].is_zero() {
            match (k + 1..n).find(|&i| !a[i][k].is_zero()) {
                Some(i) => {
                    a.swap(k, i);
                    sign = -sign;
                }
                None => return Int::zero(),
            }
        }
        for i in k + 1..n {
            for j in k + 1..n {
                let num = &a[i][j] * &a[k][k] - &a[i][k] * &a[k][j];
                let (q, r) = num.div_rem(&prev);
                debug_assert!(r.is_zero(), "Bareiss division must be exact");
                a[i][j] = q;
            }
            a[i][k] = Int::zero();
        }
        prev = a[k][k].clone();
    }
    if sign < 0 {
        -a[n - 1][n - 1].clone()
    } else {
        a[n - 1][n - 1].clone()
    }
}

/// Determinants of all leading principal submatrices, in size order.
pub fn leading_principal_minors(m: &[Vec<Int>]) -> Vec<Int> {
    (1..=m.len())
        .map(|k| {
            let sub: Vec<Vec<Int>> = (0..k).map(|i| m[i][..k].to_vec()).collect();
            det_bareiss(&sub)
        })
        .collect()
}

/// Determinant by cofactor expansion. Exponential; used only as an
/// independent cross-check on small matrices.
#[cfg_attr(not(test), allow(dead_code))]
pub fn det_cofactor(m: &[Vec<Int>]) -> Int {
    let n = m.len();
    if n == 0 {
        return Int::one();
    }
    if n == 1 {
        return m[0][0].clone();
    }
    let mut acc = Int::zero();
    for j in 0..n {
        if m[0][j].is_zero() {
            continue;
        }
        let minor: Vec<Vec<Int>> = (1..n)
            .map(|i| (0..n).filter(|&c| c != j).map(|c| m[i][c].clone()).collect())
            .collect();
        let term = &m[0][j] * det_cofactor(&minor);
        if j % 2 == 0 {
            acc += term;
        } else {
            acc -= term;
        }
    }
    acc
}

/// Inverse of a nonsingular integer matrix as exact rationals, by
/// Gauss-Jordan elimination.
pub fn inverse_rational(m: &[Vec<Int>]) -> Vec<Vec<Rat>> {
    let n = m.len();
    let mut a: Vec<Vec<Rat>> = m
        .iter()
        .map(|row| row.iter().map(|x| Rat::from_integer(x.clone())).collect())
        .collect();
    let mut inv: Vec<Vec<Rat>> = (0..n)
        .map(|i| {
            (0..n)
                .map(|j| if i == j { Rat::one() } else { Rat::zero() })
                .collect()
        })
        .collect();
    for k in 0..n {
        let pivot_row = (k..n)
            .find(|&i| !a[i][k].is_zero())
            .expect("matrix must be nonsingular");
        a.swap(k, pivot_row);
        inv.swap(k, pivot_row);
        let pivot = a[k][k].clone();
        for j in 0..n {
            a[k][j] /= pivot.clone();
            inv[k][j] /= pivot.clone();
        }
        for i in 0..n {
            if i == k || a[i][k].is_zero() {
                continue;
            }
            let factor = a[i][k].clone();
            for j in 0..n {
                let t = &factor * &a[k][j];
                a[i][j] -= t;
                let t = &factor * &inv[k][j];
                inv[i][j] -= t;
            }
        }
    }
    inv
}

fn identity(n: usize) -> Vec<Vec<Int>> {
    (0..n)
        .map(|i| {
            (0..n)
                .map(|j| if i == j { Int::one() } else { Int::zero() })
                .collect()
        })
        .collect()
}

pub fn mat_mul(a: &[Vec<Int>], b: &[Vec<Int>]) -> Vec<Vec<Int>> {
    let n = a.len();
    let m = b[0].len();
    let k = b.len();
    let mut out = vec![vec![Int::zero(); m]; n];
    for i in 0..n {
        for j in 0..m {
            let mut acc = Int::zero();
            for t in 0..k {
                acc += &a[i][t] * &b[t][j];
            }
            out[i][j] = acc;
        }
    }
    out
}

pub fn mat_vec(a: &[Vec<Int>], x: &[Int]) -> Vec<Int> {
    a.iter()
        .map(|row| row.iter().zip(x).map(|(c, v)| c * v).sum())
        .collect()
}

/// Smith normal form `u * m * v = d` with unimodular `u`, `v` and `d`
/// diagonal with nonnegative entries in divisibility order.
pub struct Smith {
    pub d: Vec<Vec<Int>>,
    pub u: Vec<Vec<Int>>,
    pub v: Vec<Vec<Int>>,
}

pub fn smith_normal_form(m: &[Vec<Int>]) -> Smith {
    let n = m.len();
    let mut d: Vec<Vec<Int>> = m.to_vec();
    let mut u = identity(n);
    let mut v = identity(n);

    fn swap_rows(d: &mut [Vec<Int>], u: &mut [Vec<Int>], a: usize, b: usize) {
        d.swap(a, b);
        u.swap(a, b);
    }
    fn swap_cols(d: &mut [Vec<Int>], v: &mut [Vec<Int>], a: usize, b: usize) {
        for row in d.iter_mut() {
            row.swap(a, b);
        }
        for row in v.iter_mut() {
            row.swap(a, b);
        }
    }
    fn add_row(d: &mut [Vec<Int>], u: &mut [Vec<Int>], dst: usize, src: usize, c: &Int) {
        for j in 0..d.len() {
            let t = c * &d[src][j];
            d[dst][j] += t;
            let t = c * &u[src][j];
            u[dst][j] += t;
        }
    }
    fn add_col(d: &mut [Vec<Int>], v: &mut [Vec<Int>], dst: usize, src: usize, c: &Int) {
        for i in 0..d.len() {
            let t = c * &d[i][src];
            d[i][dst] += t;
            let t = c * &v[i][src];
            v[i][dst] += t;
        }
    }

    for k in 0..n {
        loop {
            // smallest nonzero |entry| in the trailing submatrix to (k, k)
            let mut best: Option<(usize, usize)> = None;
            for i in k..n {
                for j in k..n {
                    if d[i][j].is_zero() {
                        continue;
                    }
                    if best
                        .map(|(bi, bj)| d[i][j].abs() < d[bi][bj].abs())
                        .unwrap_or(true)
                    {
                        best = Some((i, j));
                    }
                }
            }
            let Some((pi, pj)) = best else { break };
            if pi != k {
                swap_rows(&mut d, &mut u, k, pi);
            }
            if pj != k {
                swap_cols(&mut d, &mut v, k, pj);
            }

            // reduce column and row k by the pivot
            let mut dirty = false;
            for i in k + 1..n {
                if !d[i][k].is_zero() {
                    let q = -div_round(&d[i][k], &d[k][k]);
                    add_row(&mut d, &mut u, i, k, &q);
                    dirty = dirty || !d[i][k].is_zero();
                }
            }
            for j in k + 1..n {
                if !d[k][j].is_zero() {
                    let q = -div_round(&d[k][j], &d[k][k]);
                    add_col(&mut d, &mut v, j, k, &q);
                    dirty = dirty || !d[k][j].is_zero();
                }
            }
            if dirty {
                continue;
            }
            let row_clear = (k + 1..n).all(|i| d[i][k].is_zero());
            let col_clear = (k + 1..n).all(|j| d[k][j].is_zero());
            if !(row_clear && col_clear) {
                continue;
            }
            // divisibility: pivot must divide the whole trailing block
            let mut fixed = true;
            'outer: for i in k + 1..n {
                for j in k + 1..n {
                    if !d[i][j].mod_floor(&d[k][k]).is_zero() {
                        add_row(&mut d, &mut u, k, i, &Int::one());
                        fixed = false;
                        break 'outer;
                    }
                }
            }
            if fixed {
                break;
            }
        }
        if d[k][k].is_negative() {
            for j in 0..n {
                d[k][j] = -d[k][j].clone();
                u[k][j] = -u[k][j].clone();
            }
        }
    }
    Smith { d, u, v }
}

/// Round-to-nearest integer quotient, used to shrink remainders fast.
fn div_round(a: &Int, b: &Int) -> Int {
    let (q, r) = a.div_rem(b);
    if (&r * 2i32).abs() > b.abs() {
        if (r.is_negative()) == (b.is_negative()) {
            q + 1
        } else {
            q - 1
        }
    } else {
        q
    }
}
