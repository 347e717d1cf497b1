//! Dense exact matrices over the integers and rationals.
//!
//! Everything downstream (lattice invariants, discriminant groups, gluing)
//! reduces to a handful of normal forms computed here: Bareiss determinants,
//! row Hermite normal form with its unimodular transform, Smith normal form
//! with both transforms, rational inversion and symmetric congruence
//! diagonalization. Matrices are small (rank <= 29 in this crate), so the
//! classical algorithms are used without any reduction preprocessing.

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

pub type Int = BigInt;
pub type Rat = BigRational;

pub fn int(v: i64) -> Int {
    Int::from(v)
}

pub fn rat(n: i64, d: i64) -> Rat {
    Rat::new(Int::from(n), Int::from(d))
}

/// Floor of a rational as a big integer.
pub fn rat_floor(x: &Rat) -> Int {
    x.numer().div_floor(x.denom())
}

/// Ceiling of a rational as a big integer.
pub fn rat_ceil(x: &Rat) -> Int {
    x.numer().div_ceil(x.denom())
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IntMatrix {
    rows: usize,
    cols: usize,
    data: Vec<Int>,
}

impl IntMatrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        IntMatrix {
            rows,
            cols,
            data: vec![Int::zero(); rows * cols],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m.set(i, i, Int::one());
        }
        m
    }

    pub fn from_fn(rows: usize, cols: usize, mut f: impl FnMut(usize, usize) -> Int) -> Self {
        let mut data = Vec::with_capacity(rows * cols);
        for i in 0..rows {
            for j in 0..cols {
                data.push(f(i, j));
            }
        }
        IntMatrix { rows, cols, data }
    }

    pub fn from_rows(rows: &[Vec<i64>]) -> Self {
        let r = rows.len();
        let c = if r == 0 { 0 } else { rows[0].len() };
        assert!(rows.iter().all(|row| row.len() == c), "ragged rows");
        Self::from_fn(r, c, |i, j| Int::from(rows[i][j]))
    }

    pub fn from_int_rows(rows: &[Vec<Int>]) -> Self {
        let r = rows.len();
        let c = if r == 0 { 0 } else { rows[0].len() };
        assert!(rows.iter().all(|row| row.len() == c), "ragged rows");
        Self::from_fn(r, c, |i, j| rows[i][j].clone())
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn at(&self, i: usize, j: usize) -> &Int {
        &self.data[i * self.cols + j]
    }

    pub fn set(&mut self, i: usize, j: usize, v: Int) {
        self.data[i * self.cols + j] = v;
    }

    pub fn row(&self, i: usize) -> Vec<Int> {
        (0..self.cols).map(|j| self.at(i, j).clone()).collect()
    }

    pub fn row_vectors(&self) -> Vec<Vec<Int>> {
        (0..self.rows).map(|i| self.row(i)).collect()
    }

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    pub fn is_symmetric(&self) -> bool {
        self.is_square() && (0..self.rows).all(|i| (0..i).all(|j| self.at(i, j) == self.at(j, i)))
    }

    pub fn transpose(&self) -> Self {
        Self::from_fn(self.cols, self.rows, |i, j| self.at(j, i).clone())
    }

    pub fn mul(&self, other: &Self) -> Self {
        assert_eq!(self.cols, other.rows, "dimension mismatch in mul");
        Self::from_fn(self.rows, other.cols, |i, j| {
            let mut acc = Int::zero();
            for k in 0..self.cols {
                acc += self.at(i, k) * other.at(k, j);
            }
            acc
        })
    }

    pub fn mul_vec(&self, v: &[Int]) -> Vec<Int> {
        assert_eq!(self.cols, v.len(), "dimension mismatch in mul_vec");
        (0..self.rows)
            .map(|i| (0..self.cols).map(|j| self.at(i, j) * &v[j]).sum())
            .collect()
    }

    pub fn to_rational(&self) -> QMatrix {
        QMatrix::from_fn(self.rows, self.cols, |i, j| {
            Rat::from_integer(self.at(i, j).clone())
        })
    }

    fn swap_rows(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for j in 0..self.cols {
            self.data.swap(a * self.cols + j, b * self.cols + j);
        }
    }

    fn negate_row(&mut self, r: usize) {
        for j in 0..self.cols {
            let v = -self.at(r, j).clone();
            self.set(r, j, v);
        }
    }

    /// row_i -= q * row_r
    fn row_sub_mul(&mut self, i: usize, r: usize, q: &Int) {
        for j in 0..self.cols {
            let v = self.at(i, j) - q * self.at(r, j);
            self.set(i, j, v);
        }
    }

    fn row_add(&mut self, i: usize, r: usize) {
        for j in 0..self.cols {
            let v = self.at(i, j) + self.at(r, j);
            self.set(i, j, v);
        }
    }

    fn swap_cols(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for i in 0..self.rows {
            self.data.swap(i * self.cols + a, i * self.cols + b);
        }
    }

    fn col_sub_mul(&mut self, j: usize, c: usize, q: &Int) {
        for i in 0..self.rows {
            let v = self.at(i, j) - q * self.at(i, c);
            self.set(i, j, v);
        }
    }

    /// Exact determinant by fraction-free (Bareiss) elimination.
    pub fn det(&self) -> Int {
        assert!(self.is_square(), "determinant of a non-square matrix");
        let n = self.rows;
        if n == 0 {
            return Int::one();
        }
        let mut m = self.clone();
        let mut sign = Int::one();
        let mut prev = Int::one();
        for k in 0..n - 1 {
            if m.at(k, k).is_zero() {
                match (k + 1..n).find(|&i| !m.at(i, k).is_zero()) {
                    Some(i) => {
                        m.swap_rows(k, i);
                        sign = -sign;
                    }
                    None => return Int::zero(),
                }
            }
            for i in k + 1..n {
                for j in k + 1..n {
                    let v = (m.at(i, j) * m.at(k, k) - m.at(i, k) * m.at(k, j)) / &prev;
                    m.set(i, j, v);
                }
                m.set(i, k, Int::zero());
            }
            prev = m.at(k, k).clone();
        }
        sign * m.at(n - 1, n - 1).clone()
    }

    /// Row Hermite normal form. Returns `(h, u)` with `u * self = h`, `u`
    /// unimodular, pivots positive, entries above each pivot reduced into
    /// `[0, pivot)`. Zero rows sink to the bottom.
    pub fn row_hnf(&self) -> (Self, Self) {
        let mut h = self.clone();
        let mut u = Self::identity(self.rows);
        let mut r = 0;
        for c in 0..self.cols {
            if r >= self.rows {
                break;
            }
            loop {
                let pivot_row = (r..self.rows)
                    .filter(|&i| !h.at(i, c).is_zero())
                    .min_by_key(|&i| h.at(i, c).abs());
                let Some(p) = pivot_row else { break };
                h.swap_rows(r, p);
                u.swap_rows(r, p);
                if h.at(r, c).is_negative() {
                    h.negate_row(r);
                    u.negate_row(r);
                }
                let pivot = h.at(r, c).clone();
                let mut clean = true;
                for i in r + 1..self.rows {
                    if !h.at(i, c).is_zero() {
                        let q = h.at(i, c).div_floor(&pivot);
                        if !q.is_zero() {
                            h.row_sub_mul(i, r, &q);
                            u.row_sub_mul(i, r, &q);
                        }
                        if !h.at(i, c).is_zero() {
                            clean = false;
                        }
                    }
                }
                if clean {
                    break;
                }
            }
            if !h.at(r, c).is_zero() {
                let pivot = h.at(r, c).clone();
                for i in 0..r {
                    let q = h.at(i, c).div_floor(&pivot);
                    if !q.is_zero() {
                        h.row_sub_mul(i, r, &q);
                        u.row_sub_mul(i, r, &q);
                    }
                }
                r += 1;
            }
        }
        (h, u)
    }

    /// Canonical basis of the row space: HNF with zero rows removed.
    pub fn row_space_hnf(&self) -> Self {
        let (h, _) = self.row_hnf();
        let nonzero: Vec<Vec<Int>> = (0..h.rows)
            .map(|i| h.row(i))
            .filter(|row| row.iter().any(|x| !x.is_zero()))
            .collect();
        if nonzero.is_empty() {
            Self::zeros(0, self.cols)
        } else {
            Self::from_int_rows(&nonzero)
        }
    }

    pub fn rank(&self) -> usize {
        self.row_space_hnf().rows()
    }

    /// Basis of the right kernel `{x : self * x = 0}` as the rows of the
    /// returned matrix. The basis spans a saturated sublattice of Z^cols.
    pub fn kernel(&self) -> Self {
        let (h, u) = self.transpose().row_hnf();
        let mut rows = Vec::new();
        for i in 0..h.rows() {
            if (0..h.cols()).all(|j| h.at(i, j).is_zero()) {
                rows.push(u.row(i));
            }
        }
        if rows.is_empty() {
            Self::zeros(0, self.cols)
        } else {
            Self::from_int_rows(&rows)
        }
    }

    /// Smith normal form: `left * self * right = d` with `d` diagonal,
    /// nonnegative, and each diagonal entry dividing the next.
    pub fn snf(&self) -> Snf {
        let mut d = self.clone();
        let mut left = Self::identity(self.rows);
        let mut right = Self::identity(self.cols);
        let n = self.rows.min(self.cols);
        let mut t = 0;
        while t < n {
            let pivot = {
                let mut best: Option<(usize, usize)> = None;
                for i in t..self.rows {
                    for j in t..self.cols {
                        if !d.at(i, j).is_zero()
                            && best
                                .map(|(bi, bj)| d.at(i, j).abs() < d.at(bi, bj).abs())
                                .unwrap_or(true)
                        {
                            best = Some((i, j));
                        }
                    }
                }
                best
            };
            let Some((pi, pj)) = pivot else { break };
            d.swap_rows(t, pi);
            left.swap_rows(t, pi);
            d.swap_cols(t, pj);
            right.swap_cols(t, pj);
            loop {
                if d.at(t, t).is_negative() {
                    d.negate_row(t);
                    left.negate_row(t);
                }
                let p = d.at(t, t).clone();
                let mut dirty = false;
                for i in t + 1..self.rows {
                    if !d.at(i, t).is_zero() {
                        let q = d.at(i, t).div_floor(&p);
                        if !q.is_zero() {
                            d.row_sub_mul(i, t, &q);
                            left.row_sub_mul(i, t, &q);
                        }
                        if !d.at(i, t).is_zero() {
                            d.swap_rows(t, i);
                            left.swap_rows(t, i);
                            dirty = true;
                        }
                    }
                }
                if dirty {
                    continue;
                }
                for j in t + 1..self.cols {
                    if !d.at(t, j).is_zero() {
                        let q = d.at(t, j).div_floor(&p);
                        if !q.is_zero() {
                            d.col_sub_mul(j, t, &q);
                            right.col_sub_mul(j, t, &q);
                        }
                        if !d.at(t, j).is_zero() {
                            d.swap_cols(t, j);
                            right.swap_cols(t, j);
                            dirty = true;
                        }
                    }
                }
                if dirty {
                    continue;
                }
                // pivot must divide the remaining block
                let bad = (t + 1..self.rows)
                    .flat_map(|i| (t + 1..self.cols).map(move |j| (i, j)))
                    .find(|&(i, j)| !d.at(i, j).is_multiple_of(&p));
                match bad {
                    Some((i, _)) => {
                        d.row_add(t, i);
                        left.row_add(t, i);
                    }
                    None => break,
                }
            }
            t += 1;
        }
        Snf { d, left, right }
    }
}

#[derive(Clone, Debug)]
pub struct Snf {
    pub d: IntMatrix,
    pub left: IntMatrix,
    pub right: IntMatrix,
}

impl Snf {
    pub fn diagonal(&self) -> Vec<Int> {
        let n = self.d.rows().min(self.d.cols());
        (0..n).map(|i| self.d.at(i, i).clone()).collect()
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct QMatrix {
    rows: usize,
    cols: usize,
    data: Vec<Rat>,
}

impl QMatrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        QMatrix {
            rows,
            cols,
            data: vec![Rat::zero(); rows * cols],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m.set(i, i, Rat::one());
        }
        m
    }

    pub fn from_fn(rows: usize, cols: usize, mut f: impl FnMut(usize, usize) -> Rat) -> Self {
        let mut data = Vec::with_capacity(rows * cols);
        for i in 0..rows {
            for j in 0..cols {
                data.push(f(i, j));
            }
        }
        QMatrix { rows, cols, data }
    }

    pub fn from_rat_rows(rows: &[Vec<Rat>]) -> Self {
        let r = rows.len();
        let c = if r == 0 { 0 } else { rows[0].len() };
        assert!(rows.iter().all(|row| row.len() == c), "ragged rows");
        Self::from_fn(r, c, |i, j| rows[i][j].clone())
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn at(&self, i: usize, j: usize) -> &Rat {
        &self.data[i * self.cols + j]
    }

    pub fn set(&mut self, i: usize, j: usize, v: Rat) {
        self.data[i * self.cols + j] = v;
    }

    pub fn row(&self, i: usize) -> Vec<Rat> {
        (0..self.cols).map(|j| self.at(i, j).clone()).collect()
    }

    pub fn transpose(&self) -> Self {
        Self::from_fn(self.cols, self.rows, |i, j| self.at(j, i).clone())
    }

    pub fn mul(&self, other: &Self) -> Self {
        assert_eq!(self.cols, other.rows, "dimension mismatch in mul");
        Self::from_fn(self.rows, other.cols, |i, j| {
            let mut acc = Rat::zero();
            for k in 0..self.cols {
                acc += self.at(i, k) * other.at(k, j);
            }
            acc
        })
    }

    pub fn mul_vec(&self, v: &[Rat]) -> Vec<Rat> {
        assert_eq!(self.cols, v.len(), "dimension mismatch in mul_vec");
        (0..self.rows)
            .map(|i| (0..self.cols).map(|j| self.at(i, j) * &v[j]).sum())
            .collect()
    }

    pub fn is_integral(&self) -> bool {
        self.data.iter().all(|x| x.is_integer())
    }

    pub fn to_integer(&self) -> Option<IntMatrix> {
        if !self.is_integral() {
            return None;
        }
        Some(IntMatrix::from_fn(self.rows, self.cols, |i, j| {
            self.at(i, j).to_integer()
        }))
    }

    pub fn det(&self) -> Rat {
        assert!(self.rows == self.cols, "determinant of a non-square matrix");
        let n = self.rows;
        let mut m = self.clone();
        let mut det = Rat::one();
        for c in 0..n {
            let Some(p) = (c..n).find(|&r| !m.at(r, c).is_zero()) else {
                return Rat::zero();
            };
            if p != c {
                for j in 0..n {
                    let (a, b) = (m.at(c, j).clone(), m.at(p, j).clone());
                    m.set(c, j, b);
                    m.set(p, j, a);
                }
                det = -det;
            }
            let pivot = m.at(c, c).clone();
            det *= pivot.clone();
            for r in c + 1..n {
                if m.at(r, c).is_zero() {
                    continue;
                }
                let f = m.at(r, c) / &pivot;
                for j in c..n {
                    let v = m.at(r, j) - &f * m.at(c, j);
                    m.set(r, j, v);
                }
            }
        }
        det
    }

    pub fn inverse(&self) -> Option<Self> {
        assert!(self.rows == self.cols, "inverse of a non-square matrix");
        let n = self.rows;
        let mut m = self.clone();
        let mut inv = Self::identity(n);
        for c in 0..n {
            let p = (c..n).find(|&r| !m.at(r, c).is_zero())?;
            if p != c {
                for j in 0..n {
                    let (a, b) = (m.at(c, j).clone(), m.at(p, j).clone());
                    m.set(c, j, b);
                    m.set(p, j, a);
                    let (a, b) = (inv.at(c, j).clone(), inv.at(p, j).clone());
                    inv.set(c, j, b);
                    inv.set(p, j, a);
                }
            }
            let pivot = m.at(c, c).clone();
            for j in 0..n {
                let v = m.at(c, j) / &pivot;
                m.set(c, j, v);
                let v = inv.at(c, j) / &pivot;
                inv.set(c, j, v);
            }
            for r in 0..n {
                if r == c || m.at(r, c).is_zero() {
                    continue;
                }
                let f = m.at(r, c).clone();
                for j in 0..n {
                    let v = m.at(r, j) - &f * m.at(c, j);
                    m.set(r, j, v);
                    let v = inv.at(r, j) - &f * inv.at(c, j);
                    inv.set(r, j, v);
                }
            }
        }
        Some(inv)
    }

    /// Solve `self * x = rhs` when `self` has full column rank. Returns
    /// `None` when the system is inconsistent.
    pub fn solve(&self, rhs: &[Rat]) -> Option<Vec<Rat>> {
        assert_eq!(self.rows, rhs.len(), "dimension mismatch in solve");
        let n = self.rows;
        let m = self.cols;
        let mut a = self.clone();
        let mut b: Vec<Rat> = rhs.to_vec();
        let mut pivots: Vec<(usize, usize)> = Vec::new();
        let mut r = 0;
        for c in 0..m {
            let Some(p) = (r..n).find(|&i| !a.at(i, c).is_zero()) else {
                continue;
            };
            if p != r {
                for j in 0..m {
                    let (x, y) = (a.at(r, j).clone(), a.at(p, j).clone());
                    a.set(r, j, y);
                    a.set(p, j, x);
                }
                b.swap(r, p);
            }
            let pivot = a.at(r, c).clone();
            for j in 0..m {
                let v = a.at(r, j) / &pivot;
                a.set(r, j, v);
            }
            b[r] = &b[r] / &pivot;
            for i in 0..n {
                if i == r || a.at(i, c).is_zero() {
                    continue;
                }
                let f = a.at(i, c).clone();
                for j in 0..m {
                    let v = a.at(i, j) - &f * a.at(r, j);
                    a.set(i, j, v);
                }
                b[i] = &b[i] - &f * &b[r];
            }
            pivots.push((r, c));
            r += 1;
        }
        for i in r..n {
            if !b[i].is_zero() {
                return None;
            }
        }
        let mut x = vec![Rat::zero(); m];
        for (row, col) in pivots {
            x[col] = b[row].clone();
        }
        Some(x)
    }

    /// Signature of a symmetric matrix by congruence diagonalization:
    /// `(positive, negative, zero)` counts of diagonal entries.
    pub fn symmetric_signature(&self) -> (usize, usize, usize) {
        assert!(self.rows == self.cols, "signature of a non-square matrix");
        let n = self.rows;
        let mut m = self.clone();
        let mut k = 0;
        let (mut pos, mut neg, mut zero) = (0usize, 0usize, 0usize);
        while k < n {
            if m.at(k, k).is_zero() {
                if let Some(i) = (k + 1..n).find(|&i| !m.at(i, i).is_zero()) {
                    // congruence swap of rows+cols k and i
                    for j in 0..n {
                        let (a, b) = (m.at(k, j).clone(), m.at(i, j).clone());
                        m.set(k, j, b);
                        m.set(i, j, a);
                    }
                    for j in 0..n {
                        let (a, b) = (m.at(j, k).clone(), m.at(j, i).clone());
                        m.set(j, k, b);
                        m.set(j, i, a);
                    }
                } else if let Some(i) = (k + 1..n).find(|&i| !m.at(i, k).is_zero()) {
                    // all later diagonals vanish: row/col addition makes
                    // m[k][k] = 2*m[i][k] != 0
                    for j in 0..n {
                        let v = m.at(k, j) + m.at(i, j);
                        m.set(k, j, v);
                    }
                    for j in 0..n {
                        let v = m.at(j, k) + m.at(j, i);
                        m.set(j, k, v);
                    }
                } else {
                    zero += 1;
                    k += 1;
                    continue;
                }
            }
            let pivot = m.at(k, k).clone();
            if pivot.is_positive() {
                pos += 1;
            } else {
                neg += 1;
            }
            for i in k + 1..n {
                if m.at(i, k).is_zero() {
                    continue;
                }
                let f = m.at(i, k) / &pivot;
                for j in 0..n {
                    let v = m.at(i, j) - &f * m.at(k, j);
                    m.set(i, j, v);
                }
                for j in 0..n {
                    let v = m.at(j, i) - &f * m.at(j, k);
                    m.set(j, i, v);
                }
            }
            k += 1;
        }
        (pos, neg, zero)
    }
}
