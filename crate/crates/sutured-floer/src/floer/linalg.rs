//! Exact linear algebra: F₂ matrices, integer linear systems via Smith
//! normal form, semipositivity of a rational subspace via Fourier–Motzkin,
//! and rational rank.

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};

// ---------------------------------------------------------------- F₂ ----

/// Dense matrix over the two-element field, rows as bit blocks.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Mat2 {
    pub rows: usize,
    pub cols: usize,
    data: Vec<Vec<u64>>,
}

impl Mat2 {
    pub fn zero(rows: usize, cols: usize) -> Self {
        let w = cols.div_ceil(64);
        Mat2 {
            rows,
            cols,
            data: vec![vec![0u64; w]; rows],
        }
    }

    pub fn get(&self, r: usize, c: usize) -> bool {
        self.data[r][c / 64] >> (c % 64) & 1 == 1
    }

    pub fn set(&mut self, r: usize, c: usize, v: bool) {
        if v {
            self.data[r][c / 64] |= 1 << (c % 64);
        } else {
            self.data[r][c / 64] &= !(1 << (c % 64));
        }
    }

    pub fn flip(&mut self, r: usize, c: usize) {
        self.data[r][c / 64] ^= 1 << (c % 64);
    }

    fn xor_row(&mut self, target: usize, source: usize) {
        let (lo, hi) = if target < source {
            let (a, b) = self.data.split_at_mut(source);
            (&mut a[target], &b[0])
        } else {
            let (a, b) = self.data.split_at_mut(target);
            (&mut b[0], &a[source])
        };
        for (t, s) in lo.iter_mut().zip(hi.iter()) {
            *t ^= *s;
        }
    }

    pub fn row_is_zero(&self, r: usize) -> bool {
        self.data[r].iter().all(|&b| b == 0)
    }

    /// Rank via Gaussian elimination (copies the matrix).
    pub fn rank(&self) -> usize {
        self.clone().eliminate().0
    }

    /// In-place elimination; returns (rank, pivot column per pivot row).
    fn eliminate(&mut self) -> (usize, Vec<usize>) {
        let mut pivots = Vec::new();
        let mut row = 0;
        for col in 0..self.cols {
            if row == self.rows {
                break;
            }
            let mut piv = None;
            for r in row..self.rows {
                if self.get(r, col) {
                    piv = Some(r);
                    break;
                }
            }
            let Some(p) = piv else { continue };
            self.data.swap(row, p);
            for r in 0..self.rows {
                if r != row && self.get(r, col) {
                    self.xor_row(r, row);
                }
            }
            pivots.push(col);
            row += 1;
        }
        (row, pivots)
    }

    /// Solve `self * x = b` over F₂. Returns one solution if consistent.
    pub fn solve(&self, b: &[bool]) -> Option<Vec<bool>> {
        assert_eq!(b.len(), self.rows);
        let mut aug = Mat2::zero(self.rows, self.cols + 1);
        for r in 0..self.rows {
            aug.data[r][..self.data[r].len()].copy_from_slice(&self.data[r]);
            // clear possible tail bits beyond cols? data width may grow by one block
            for c in 0..self.cols {
                aug.set(r, c, self.get(r, c));
            }
            aug.set(r, self.cols, b[r]);
        }
        let (_, pivots) = aug.eliminate();
        // inconsistent if a pivot is in the augmented column
        if pivots.contains(&self.cols) {
            return None;
        }
        let mut x = vec![false; self.cols];
        for (r, &c) in pivots.iter().enumerate() {
            x[c] = aug.get(r, self.cols);
        }
        Some(x)
    }

    /// Basis of the kernel (column vectors with `self * v = 0`).
    pub fn kernel_basis(&self) -> Vec<Vec<bool>> {
        let mut m = self.clone();
        let (_, pivots) = m.eliminate();
        let pivot_set: std::collections::BTreeSet<usize> = pivots.iter().copied().collect();
        let mut basis = Vec::new();
        for free in 0..self.cols {
            if pivot_set.contains(&free) {
                continue;
            }
            let mut v = vec![false; self.cols];
            v[free] = true;
            for (r, &pc) in pivots.iter().enumerate() {
                if m.get(r, free) {
                    v[pc] = true;
                }
            }
            basis.push(v);
        }
        basis
    }

    pub fn mul_vec(&self, x: &[bool]) -> Vec<bool> {
        assert_eq!(x.len(), self.cols);
        (0..self.rows)
            .map(|r| {
                let mut acc = false;
                for (c, &xc) in x.iter().enumerate() {
                    if xc && self.get(r, c) {
                        acc = !acc;
                    }
                }
                acc
            })
            .collect()
    }

    pub fn compose(&self, rhs: &Mat2) -> Mat2 {
        assert_eq!(self.cols, rhs.rows);
        let mut out = Mat2::zero(self.rows, rhs.cols);
        for r in 0..self.rows {
            for k in 0..self.cols {
                if self.get(r, k) {
                    for c in 0..rhs.cols {
                        if rhs.get(k, c) {
                            out.flip(r, c);
                        }
                    }
                }
            }
        }
        out
    }
}

// ------------------------------------------------------ integer SNF ----

type Z = BigInt;

#[derive(Clone, Debug)]
pub struct ZMat {
    pub rows: usize,
    pub cols: usize,
    pub data: Vec<Vec<Z>>,
}

impl ZMat {
    pub fn zero(rows: usize, cols: usize) -> Self {
        ZMat {
            rows,
            cols,
            data: vec![vec![Z::zero(); cols]; rows],
        }
    }

    pub fn from_i64(rows: &[Vec<i64>]) -> Self {
        let r = rows.len();
        let c = rows.first().map(|x| x.len()).unwrap_or(0);
        ZMat {
            rows: r,
            cols: c,
            data: rows
                .iter()
                .map(|row| row.iter().map(|&x| Z::from(x)).collect())
                .collect(),
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = ZMat::zero(n, n);
        for i in 0..n {
            m.data[i][i] = Z::one();
        }
        m
    }

    fn swap_rows(&mut self, a: usize, b: usize) {
        self.data.swap(a, b);
    }

    fn swap_cols(&mut self, a: usize, b: usize) {
        for row in &mut self.data {
            row.swap(a, b);
        }
    }

    fn add_row(&mut self, target: usize, source: usize, factor: &Z) {
        if factor.is_zero() {
            return;
        }
        for c in 0..self.cols {
            let add = &self.data[source][c] * factor;
            self.data[target][c] += add;
        }
    }

    fn add_col(&mut self, target: usize, source: usize, factor: &Z) {
        if factor.is_zero() {
            return;
        }
        for r in 0..self.rows {
            let add = &self.data[r][source] * factor;
            self.data[r][target] += add;
        }
    }

    fn negate_row(&mut self, r: usize) {
        for c in 0..self.cols {
            let v = -self.data[r][c].clone();
            self.data[r][c] = v;
        }
    }

    pub fn mul_vec(&self, x: &[Z]) -> Vec<Z> {
        assert_eq!(x.len(), self.cols);
        (0..self.rows)
            .map(|r| {
                let mut acc = Z::zero();
                for c in 0..self.cols {
                    acc += &self.data[r][c] * &x[c];
                }
                acc
            })
            .collect()
    }
}

/// Smith normal form solver for `A x = b` with a fixed `A`: factors once,
/// solves per right-hand side, and exposes an integer kernel basis.
pub struct SnfSolver {
    /// U A V = D with U, V unimodular and D diagonal (first `rank` entries
    /// nonzero).
    u: ZMat,
    v: ZMat,
    diag: Vec<Z>,
    rank: usize,
    cols: usize,
}

impl SnfSolver {
    pub fn new(a: &ZMat) -> SnfSolver {
        let mut d = a.clone();
        let mut u = ZMat::identity(a.rows);
        let mut v = ZMat::identity(a.cols);
        let n = a.rows.min(a.cols);
        let mut k = 0;
        while k < n {
            // find a nonzero pivot with minimal absolute value in the
            // remaining block
            let mut piv: Option<(usize, usize)> = None;
            for r in k..a.rows {
                for c in k..a.cols {
                    if d.data[r][c].is_zero() {
                        continue;
                    }
                    match piv {
                        None => piv = Some((r, c)),
                        Some((pr, pc)) => {
                            if d.data[r][c].abs() < d.data[pr][pc].abs() {
                                piv = Some((r, c));
                            }
                        }
                    }
                }
            }
            let Some((pr, pc)) = piv else { break };
            d.swap_rows(k, pr);
            u.swap_rows(k, pr);
            d.swap_cols(k, pc);
            v.swap_cols(k, pc);

            // clear row and column k
            let mut again = false;
            for r in (k + 1)..a.rows {
                if d.data[r][k].is_zero() {
                    continue;
                }
                let q = -(&d.data[r][k] / &d.data[k][k]);
                d.add_row(r, k, &q);
                u.add_row(r, k, &q);
                if !d.data[r][k].is_zero() {
                    again = true;
                }
            }
            for c in (k + 1)..a.cols {
                if d.data[k][c].is_zero() {
                    continue;
                }
                let q = -(&d.data[k][c] / &d.data[k][k]);
                d.add_col(c, k, &q);
                v.add_col(c, k, &q);
                if !d.data[k][c].is_zero() {
                    again = true;
                }
            }
            if again {
                continue; // smaller remainders appeared; repick pivot
            }
            if d.data[k][k].is_negative() {
                d.negate_row(k);
                u.negate_row(k);
            }
            k += 1;
        }
        let diag: Vec<Z> = (0..n).map(|i| d.data[i][i].clone()).collect();
        let rank = diag.iter().filter(|x| !x.is_zero()).count();
        SnfSolver {
            u,
            v,
            diag,
            rank,
            cols: a.cols,
        }
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    /// One integer solution of `A x = b`, if any.
    pub fn solve(&self, b: &[Z]) -> Option<Vec<Z>> {
        let ub = self.u.mul_vec(b);
        let mut y = vec![Z::zero(); self.cols];
        for (i, ubi) in ub.iter().enumerate() {
            if i < self.rank {
                let di = &self.diag[i];
                if (ubi % di).is_zero() {
                    y[i] = ubi / di;
                } else {
                    return None;
                }
            } else if !ubi.is_zero() {
                return None;
            }
        }
        Some(self.v.mul_vec(&y))
    }

    /// Basis of the integer kernel of `A` (saturated lattice).
    pub fn kernel_basis(&self) -> Vec<Vec<Z>> {
        (self.rank..self.cols)
            .map(|j| (0..self.v.rows).map(|i| self.v.data[i][j].clone()).collect())
            .collect()
    }
}

// ------------------------------------------- semipositive span test ----

/// Does the rational span of the given integer vectors contain a nonzero
/// vector with all coordinates >= 0?
///
/// Decided exactly: for each coordinate `r` we test feasibility of
/// `{ B c >= 0, (B c)_r >= 1 }` by Fourier–Motzkin elimination over the
/// combination variables `c` (there are few of them at desk scale).
pub fn span_contains_semipositive(basis: &[Vec<Z>]) -> Result<bool> {
    if basis.is_empty() {
        return Ok(false);
    }
    let n = basis[0].len();
    let k = basis.len();
    if k == 1 {
        let v = &basis[0];
        let nonneg = v.iter().all(|x| !x.is_negative());
        let nonpos = v.iter().all(|x| !x.is_positive());
        let nonzero = v.iter().any(|x| !x.is_zero());
        return Ok(nonzero && (nonneg || nonpos));
    }
    for r in 0..n {
        if basis.iter().all(|v| v[r].is_zero()) {
            continue;
        }
        // constraints: rows of [B | rhs] meaning sum_j row[j] c_j >= rhs
        let mut cons: Vec<(Vec<Z>, Z)> = Vec::new();
        for i in 0..n {
            let row: Vec<Z> = (0..k).map(|j| basis[j][i].clone()).collect();
            let rhs = if i == r { Z::one() } else { Z::zero() };
            if row.iter().all(|x| x.is_zero()) {
                if rhs.is_positive() {
                    // 0 >= 1: infeasible for this r
                    cons.clear();
                    break;
                }
                continue;
            }
            cons.push((row, rhs));
        }
        if cons.is_empty() {
            continue;
        }
        if fourier_motzkin_feasible(cons, k)? {
            return Ok(true);
        }
    }
    Ok(false)
}

/// Feasibility of `{ sum_j a_ij x_j >= b_i }` over the rationals.
fn fourier_motzkin_feasible(mut cons: Vec<(Vec<Z>, Z)>, k: usize) -> Result<bool> {
    for var in (0..k).rev() {
        let mut pos: Vec<(Vec<Z>, Z)> = Vec::new();
        let mut neg: Vec<(Vec<Z>, Z)> = Vec::new();
        let mut rest: Vec<(Vec<Z>, Z)> = Vec::new();
        for (row, rhs) in cons {
            if row[var].is_positive() {
                pos.push((row, rhs));
            } else if row[var].is_negative() {
                neg.push((row, rhs));
            } else {
                rest.push((row, rhs));
            }
        }
        // x_var can absorb any constraint if only one sign is present
        let mut new_cons = rest;
        for (prow, prhs) in &pos {
            for (nrow, nrhs) in &neg {
                // prow: a x >= b with a_var > 0; nrow: a' x >= b' with a'_var < 0
                // combine: (-a'_var) * prow + a_var * nrow, eliminating var
                let fp = -nrow[var].clone();
                let fn_ = prow[var].clone();
                let mut row: Vec<Z> = (0..var)
                    .map(|j| &prow[j] * &fp + &nrow[j] * &fn_)
                    .collect();
                row.resize(var, Z::zero());
                let rhs = prhs * &fp + nrhs * &fn_;
                // normalize by gcd
                let mut g = rhs.abs();
                for x in &row {
                    g = num_integer::gcd(g, x.abs());
                }
                let (row, rhs) = if g > Z::one() {
                    (
                        row.iter().map(|x| x / &g).collect::<Vec<_>>(),
                        &rhs / &g,
                    )
                } else {
                    (row, rhs)
                };
                if row.iter().all(|x| x.is_zero()) {
                    if rhs.is_positive() {
                        return Ok(false);
                    }
                    continue;
                }
                new_cons.push((row, rhs));
            }
        }
        // truncate rows of remaining constraints to `var` entries
        for (row, _) in &mut new_cons {
            row.truncate(var);
        }
        new_cons.sort();
        new_cons.dedup();
        if new_cons.len() > 200_000 {
            return Err(Error::internal(
                "Fourier-Motzkin constraint explosion beyond desk scale",
            ));
        }
        cons = new_cons;
    }
    // all variables eliminated: constraints are `0 >= rhs`
    Ok(cons.iter().all(|(_, rhs)| !rhs.is_positive()))
}

// ---------------------------------------------------- rational rank ----

/// Rank of an integer matrix over the rationals (fraction-free Gaussian
/// elimination).
pub fn rank_rational(m: &ZMat) -> usize {
    let mut a = m.data.clone();
    let rows = m.rows;
    let cols = m.cols;
    let mut rank = 0;
    let mut row = 0;
    for col in 0..cols {
        if row == rows {
            break;
        }
        let Some(p) = (row..rows).find(|&r| !a[r][col].is_zero()) else {
            continue;
        };
        a.swap(row, p);
        for r in (row + 1)..rows {
            if a[r][col].is_zero() {
                continue;
            }
            let f1 = a[row][col].clone();
            let f2 = a[r][col].clone();
            for c in col..cols {
                let v = &a[r][c] * &f1 - &a[row][c] * &f2;
                a[r][c] = v;
            }
        }
        rank += 1;
        row += 1;
    }
    rank
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn f2_solve_and_kernel() {
        // x + y = 1, y + z = 0
        let mut m = Mat2::zero(2, 3);
        m.set(0, 0, true);
        m.set(0, 1, true);
        m.set(1, 1, true);
        m.set(1, 2, true);
        let x = m.solve(&[true, false]).unwrap();
        let mx = m.mul_vec(&x);
        assert_eq!(mx, vec![true, false]);
        assert_eq!(m.kernel_basis().len(), 1);
        assert_eq!(m.rank(), 2);
        assert!(m.solve(&[true, true]).is_some());
    }

    #[test]
    fn snf_solves_integer_system() {
        // 2x + 4y = 6; x + y = 2  -> x = 1, y = 1
        let a = ZMat::from_i64(&[vec![2, 4], vec![1, 1]]);
        let s = SnfSolver::new(&a);
        let b = vec![Z::from(6), Z::from(2)];
        let x = s.solve(&b).unwrap();
        assert_eq!(a.mul_vec(&x), b);
        assert!(s.kernel_basis().is_empty());

        // inconsistent over Z: 2x = 1
        let a2 = ZMat::from_i64(&[vec![2]]);
        let s2 = SnfSolver::new(&a2);
        assert!(s2.solve(&[Z::one()]).is_none());
    }

    #[test]
    fn snf_kernel() {
        // x + y + z = 0 has kernel rank 2
        let a = ZMat::from_i64(&[vec![1, 1, 1]]);
        let s = SnfSolver::new(&a);
        let kb = s.kernel_basis();
        assert_eq!(kb.len(), 2);
        for v in &kb {
            assert!(a.mul_vec(v).iter().all(|x| x.is_zero()));
        }
    }

    #[test]
    fn semipositive_detection() {
        // span{(1, -1)}: no semipositive vector... except none
        let b1 = vec![vec![Z::from(1), Z::from(-1)]];
        assert!(!span_contains_semipositive(&b1).unwrap());
        // span{(1, 0)}: yes
        let b2 = vec![vec![Z::from(1), Z::from(0)]];
        assert!(span_contains_semipositive(&b2).unwrap());
        // span{(1,-1,0),(0,1,-1)}: contains (1,0,-1)... all combos have a
        // negative entry unless zero
        let b3 = vec![
            vec![Z::from(1), Z::from(-1), Z::from(0)],
            vec![Z::from(0), Z::from(1), Z::from(-1)],
        ];
        assert!(!span_contains_semipositive(&b3).unwrap());
        // span{(1,-1),( -1, 2)}: contains (1,-1)+(-1,2)=(0,1): yes
        let b4 = vec![
            vec![Z::from(1), Z::from(-1)],
            vec![Z::from(-1), Z::from(2)],
        ];
        assert!(span_contains_semipositive(&b4).unwrap());
    }

    #[test]
    fn rational_rank() {
        let m = ZMat::from_i64(&[vec![1, 2, 3], vec![2, 4, 6], vec![1, 0, 1]]);
        assert_eq!(rank_rational(&m), 2);
    }
}
