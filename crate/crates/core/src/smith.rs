//! Smith diagonalization over the local ring `Z/p^k`.
//!
//! `U * A * V = D` with `U`, `V` invertible and `D` diagonal with entries
//! `p^{c_0}, p^{c_1}, ...` in non-decreasing exponent order (`c = k` marks a
//! zero entry). Pivots are chosen by minimal p-adic valuation, first in
//! row-major order; the decomposition is deterministic.

use crate::arith::{Residue, ResidueRing};
use crate::matrix::Matrix;

#[derive(Clone, Debug)]
pub struct Smith<T> {
    pub u: Matrix<T>,
    pub u_inv: Matrix<T>,
    pub v: Matrix<T>,
    pub v_inv: Matrix<T>,
    /// Exponents of the diagonal entries, length `min(rows, cols)`.
    pub exponents: Vec<u32>,
}

pub fn smith<T: Residue>(a: &Matrix<T>, ring: &ResidueRing<T>) -> Smith<T> {
    let (m, n) = a.shape();
    let k = ring.k();
    let mut d = a.clone();
    let mut u = Matrix::identity(m);
    let mut u_inv = Matrix::identity(m);
    let mut v = Matrix::identity(n);
    let mut v_inv = Matrix::identity(n);
    let mut exponents = Vec::with_capacity(m.min(n));

    for t in 0..m.min(n) {
        let mut best: Option<(u32, usize, usize)> = None;
        for i in t..m {
            for j in t..n {
                let val = ring.valuation(d[(i, j)]);
                if val < k && best.is_none_or(|(b, _, _)| val < b) {
                    best = Some((val, i, j));
                }
            }
        }
        let Some((c, pi, pj)) = best else {
            exponents.extend(std::iter::repeat_n(k, m.min(n) - t));
            break;
        };

        d.swap_rows(t, pi);
        u.swap_rows(t, pi);
        u_inv.swap_cols(t, pi);
        d.swap_cols(t, pj);
        v.swap_cols(t, pj);
        v_inv.swap_rows(t, pj);

        // normalize the pivot to exactly p^c
        let (_, unit) = ring.split(d[(t, t)]);
        let inv = ring.inverse(unit).expect("unit part is invertible");
        d.scale_row(t, inv, ring);
        u.scale_row(t, inv, ring);
        u_inv.scale_col(t, unit, ring);

        for i in t + 1..m {
            if d[(i, t)].is_zero() {
                continue;
            }
            let factor = ring.neg(ring.div_p_pow(d[(i, t)], c));
            d.add_row_multiple(i, t, factor, ring);
            u.add_row_multiple(i, t, factor, ring);
            // inverse op on U^{-1}: col_t -= factor * col_i
            u_inv.add_col_multiple(t, i, ring.neg(factor), ring);
        }
        for j in t + 1..n {
            if d[(t, j)].is_zero() {
                continue;
            }
            let factor = ring.neg(ring.div_p_pow(d[(t, j)], c));
            d.add_col_multiple(j, t, factor, ring);
            v.add_col_multiple(j, t, factor, ring);
            // inverse op on V^{-1}: row_t -= factor * row_j
            v_inv.add_row_multiple(t, j, ring.neg(factor), ring);
        }
        exponents.push(c);
    }

    Smith { u, u_inv, v, v_inv, exponents }
}

/// Canonical solution of `A x = b` over `Z/p^k`: free coordinates of the
/// diagonal system are set to zero. Returns `None` when inconsistent.
pub fn solve<T: Residue>(a: &Matrix<T>, b: &[T], ring: &ResidueRing<T>) -> Option<Vec<T>> {
    let s = smith(a, ring);
    solve_with(&s, a.shape(), b, ring)
}

pub fn solve_with<T: Residue>(s: &Smith<T>, (m, n): (usize, usize), b: &[T], ring: &ResidueRing<T>) -> Option<Vec<T>> {
    assert_eq!(b.len(), m);
    let k = ring.k();
    let c = s.u.mul_vec(b, ring);
    let mut y = vec![T::zero(); n];
    for (i, ci) in c.iter().enumerate() {
        let e = s.exponents.get(i).copied().unwrap_or(k);
        if e >= k {
            if !ci.is_zero() {
                return None;
            }
        } else {
            if ring.valuation(*ci) < e {
                return None;
            }
            y[i] = ring.div_p_pow(*ci, e);
        }
    }
    Some(s.v.mul_vec(&y, ring))
}

/// Generators (as columns) of the null space `{x : A x = 0}`.
pub fn null_space<T: Residue>(a: &Matrix<T>, ring: &ResidueRing<T>) -> Matrix<T> {
    let (_, n) = a.shape();
    let k = ring.k();
    let s = smith(a, ring);
    let mut columns = Vec::new();
    for i in 0..n {
        let e = s.exponents.get(i).copied().unwrap_or(k);
        if e == 0 {
            continue;
        }
        let scale = ring.p_pow(k - e);
        columns.push(s.v.column(i).into_iter().map(|x| ring.mul(x, scale)).collect::<Vec<_>>());
    }
    Matrix::from_columns(n, &columns)
}

/// Structure of the presented module `Z/p^k^n / colspan(R)`.
#[derive(Clone, Debug)]
pub struct Presentation<T> {
    /// Exponents `d_i >= 1` of the cyclic summands, non-decreasing.
    pub exponents: Vec<u32>,
    /// `t x n`: coordinates of an element in the summands (row `i` taken mod `p^{d_i}`).
    pub projection: Matrix<T>,
    /// `n x t`: a representative of each summand generator.
    pub generators: Matrix<T>,
}

pub fn present_quotient<T: Residue>(relations: &Matrix<T>, ring: &ResidueRing<T>) -> Presentation<T> {
    let (n, _) = relations.shape();
    let k = ring.k();
    let s = smith(relations, ring);
    let keep: Vec<(usize, u32)> =
        (0..n).map(|i| (i, s.exponents.get(i).copied().unwrap_or(k))).filter(|&(_, e)| e > 0).collect();
    let exponents = keep.iter().map(|&(_, e)| e).collect();
    let projection = Matrix::from_fn(keep.len(), n, |r, j| {
        let (i, e) = keep[r];
        ring.reduce_to(s.u[(i, j)], e)
    });
    let generators = Matrix::from_fn(n, keep.len(), |j, r| s.u_inv[(j, keep[r].0)]);
    Presentation { exponents, projection, generators }
}
