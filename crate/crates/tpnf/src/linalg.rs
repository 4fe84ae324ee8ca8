//! Exact linear algebra: dense rational matrices, reduced echelon row
//! spaces, and a fraction-free integer eliminator used by the bracket
//! solver.
//!
//! Matrix rows and columns are 0-based here; 1-based basis labels appear
//! only in the domain types built on top of this module.

use crate::scalar::Scalar;
use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Matrix {
    rows: usize,
    cols: usize,
    data: Vec<Scalar>,
}

impl Matrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        Matrix {
            rows,
            cols,
            data: vec![Scalar::zero(); rows * cols],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Matrix::zeros(n, n);
        for i in 0..n {
            m.set(i, i, Scalar::one());
        }
        m
    }

    /// Build from row vectors; all rows must have equal length.
    pub fn from_rows(rows: Vec<Vec<Scalar>>) -> Self {
        let nrows = rows.len();
        let ncols = rows.first().map_or(0, Vec::len);
        assert!(rows.iter().all(|r| r.len() == ncols));
        Matrix {
            rows: nrows,
            cols: ncols,
            data: rows.into_iter().flatten().collect(),
        }
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, r: usize, c: usize) -> &Scalar {
        &self.data[r * self.cols + c]
    }

    pub fn set(&mut self, r: usize, c: usize, v: Scalar) {
        self.data[r * self.cols + c] = v;
    }

    pub fn add_to(&mut self, r: usize, c: usize, v: &Scalar) {
        let slot = &mut self.data[r * self.cols + c];
        *slot = &*slot + v;
    }

    pub fn column(&self, c: usize) -> Vec<Scalar> {
        (0..self.rows).map(|r| self.get(r, c).clone()).collect()
    }

    pub fn mul(&self, rhs: &Matrix) -> Matrix {
        assert_eq!(self.cols, rhs.rows);
        let mut out = Matrix::zeros(self.rows, rhs.cols);
        for r in 0..self.rows {
            for k in 0..self.cols {
                let a = self.get(r, k);
                if a.is_zero() {
                    continue;
                }
                for c in 0..rhs.cols {
                    let b = rhs.get(k, c);
                    if !b.is_zero() {
                        out.add_to(r, c, &(a * b));
                    }
                }
            }
        }
        out
    }

    pub fn mul_vec(&self, v: &[Scalar]) -> Vec<Scalar> {
        assert_eq!(self.cols, v.len());
        (0..self.rows)
            .map(|r| {
                let mut acc = Scalar::zero();
                for (c, vc) in v.iter().enumerate() {
                    let a = self.get(r, c);
                    if !a.is_zero() && !vc.is_zero() {
                        acc += a * vc;
                    }
                }
                acc
            })
            .collect()
    }

    /// In-place reduction to reduced row echelon form; returns pivot columns.
    pub fn rref(&mut self) -> Vec<usize> {
        let mut pivots = Vec::new();
        let mut row = 0;
        for col in 0..self.cols {
            if row == self.rows {
                break;
            }
            let Some(p) = (row..self.rows).find(|&r| !self.get(r, col).is_zero()) else {
                continue;
            };
            if p != row {
                for c in 0..self.cols {
                    self.data.swap(p * self.cols + c, row * self.cols + c);
                }
            }
            let inv = self.get(row, col).recip();
            for c in col..self.cols {
                let v = self.get(row, c) * &inv;
                self.set(row, c, v);
            }
            for r in 0..self.rows {
                if r == row || self.get(r, col).is_zero() {
                    continue;
                }
                let factor = self.get(r, col).clone();
                for c in col..self.cols {
                    let v = self.get(r, c) - &factor * self.get(row, c);
                    self.set(r, c, v);
                }
            }
            pivots.push(col);
            row += 1;
        }
        pivots
    }

    pub fn rank(&self) -> usize {
        self.clone().rref().len()
    }

    /// Exact inverse, or `None` when singular. Requires a square matrix.
    pub fn inverse(&self) -> Option<Matrix> {
        assert_eq!(self.rows, self.cols);
        let n = self.rows;
        let mut aug = Matrix::zeros(n, 2 * n);
        for r in 0..n {
            for c in 0..n {
                aug.set(r, c, self.get(r, c).clone());
            }
            aug.set(r, n + r, Scalar::one());
        }
        let pivots = aug.rref();
        if pivots.len() != n || pivots.iter().enumerate().any(|(i, &p)| p != i) {
            return None;
        }
        let mut inv = Matrix::zeros(n, n);
        for r in 0..n {
            for c in 0..n {
                inv.set(r, c, aug.get(r, n + c).clone());
            }
        }
        Some(inv)
    }

    /// Nullspace basis (one vector per free column, that column set to 1).
    pub fn nullspace(&self) -> Vec<Vec<Scalar>> {
        let mut work = self.clone();
        let pivots = work.rref();
        let pivot_of_col: Vec<Option<usize>> = {
            let mut v = vec![None; self.cols];
            for (r, &c) in pivots.iter().enumerate() {
                v[c] = Some(r);
            }
            v
        };
        let mut basis = Vec::new();
        for free in 0..self.cols {
            if pivot_of_col[free].is_some() {
                continue;
            }
            let mut vec = vec![Scalar::zero(); self.cols];
            vec[free] = Scalar::one();
            for (r, &pc) in pivots.iter().enumerate() {
                vec[pc] = -work.get(r, free).clone();
            }
            basis.push(vec);
        }
        basis
    }
}

/// A subspace kept as a reduced row-echelon basis. Two `RowSpace` values
/// are equal exactly when they span the same subspace.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RowSpace {
    cols: usize,
    rows: Vec<Vec<Scalar>>,
    pivots: Vec<usize>,
}

impl RowSpace {
    pub fn new(cols: usize) -> Self {
        RowSpace {
            cols,
            rows: Vec::new(),
            pivots: Vec::new(),
        }
    }

    pub fn from_vectors<I: IntoIterator<Item = Vec<Scalar>>>(cols: usize, vecs: I) -> Self {
        let mut s = RowSpace::new(cols);
        for v in vecs {
            s.insert(v);
        }
        s
    }

    pub fn dim(&self) -> usize {
        self.rows.len()
    }

    pub fn basis(&self) -> &[Vec<Scalar>] {
        &self.rows
    }

    fn reduce(&self, mut v: Vec<Scalar>) -> Vec<Scalar> {
        for (row, &p) in self.rows.iter().zip(&self.pivots) {
            if v[p].is_zero() {
                continue;
            }
            let factor = v[p].clone();
            for c in p..self.cols {
                if !row[c].is_zero() {
                    v[c] = &v[c] - &factor * &row[c];
                }
            }
        }
        v
    }

    /// Insert a vector; returns true when the dimension grew.
    pub fn insert(&mut self, v: Vec<Scalar>) -> bool {
        assert_eq!(v.len(), self.cols);
        let mut v = self.reduce(v);
        let Some(lead) = v.iter().position(|x| !x.is_zero()) else {
            return false;
        };
        let inv = v[lead].recip();
        for x in v.iter_mut().skip(lead) {
            if !x.is_zero() {
                *x = &*x * &inv;
            }
        }
        // Back-eliminate the new pivot from existing rows to keep RREF canonical.
        for row in self.rows.iter_mut() {
            if row[lead].is_zero() {
                continue;
            }
            let factor = row[lead].clone();
            for c in lead..self.cols {
                if !v[c].is_zero() {
                    row[c] = &row[c] - &factor * &v[c];
                }
            }
        }
        let pos = self.pivots.partition_point(|&p| p < lead);
        self.pivots.insert(pos, lead);
        self.rows.insert(pos, v);
        true
    }

    pub fn contains(&self, v: &[Scalar]) -> bool {
        self.reduce(v.to_vec()).iter().all(Scalar::is_zero)
    }

    pub fn contains_space(&self, other: &RowSpace) -> bool {
        other.rows.iter().all(|r| self.contains(r))
    }
}

/// A sparse integer row: sorted, nonzero (column, coefficient) pairs.
pub type SparseRow = Vec<(usize, BigInt)>;

/// `fa*a + fb*b` over sparse rows, dropping cancelled entries.
fn row_combine(a: &SparseRow, fa: &BigInt, b: &SparseRow, fb: &BigInt) -> SparseRow {
    let mut out = Vec::with_capacity(a.len() + b.len());
    let (mut i, mut j) = (0, 0);
    while i < a.len() || j < b.len() {
        match (a.get(i), b.get(j)) {
            (Some((ca, va)), Some((cb, vb))) if ca == cb => {
                let v = va * fa + vb * fb;
                if !v.is_zero() {
                    out.push((*ca, v));
                }
                i += 1;
                j += 1;
            }
            (Some((ca, va)), Some((cb, _))) if ca < cb => {
                out.push((*ca, va * fa));
                i += 1;
            }
            (Some(_), Some((cb, vb))) => {
                out.push((*cb, vb * fb));
                j += 1;
            }
            (Some((ca, va)), None) => {
                out.push((*ca, va * fa));
                i += 1;
            }
            (None, Some((cb, vb))) => {
                out.push((*cb, vb * fb));
                j += 1;
            }
            (None, None) => unreachable!(),
        }
    }
    out
}

/// Divide a row by the gcd of its entries and make the leading entry positive.
fn row_primitive(mut row: SparseRow) -> SparseRow {
    if row.is_empty() {
        return row;
    }
    let mut g = BigInt::zero();
    for (_, v) in &row {
        g = g.gcd(v);
    }
    if row[0].1.is_negative() {
        g = -g;
    }
    if !g.is_one() {
        for (_, v) in row.iter_mut() {
            *v = &*v / &g;
        }
    }
    row
}

/// Echelon form of a sparse integer matrix, produced fraction-free.
///
/// Columns are processed left to right; among the rows currently leading at
/// a column, the pivot is the entry of largest magnitude. Eliminations use
/// integer cross-multiplication followed by content stripping, so no
/// rationals ever appear.
pub struct IntEchelon {
    cols: usize,
    /// Pivot rows, strictly increasing leading columns.
    rows: Vec<SparseRow>,
}

pub fn int_echelon(input: Vec<SparseRow>, cols: usize) -> IntEchelon {
    let mut buckets: Vec<Vec<SparseRow>> = vec![Vec::new(); cols];
    for row in input {
        let row = row_primitive(row);
        if let Some(&(lead, _)) = row.first() {
            buckets[lead].push(row);
        }
    }
    let mut rows = Vec::new();
    for col in 0..cols {
        let mut bucket = std::mem::take(&mut buckets[col]);
        if bucket.is_empty() {
            continue;
        }
        let pivot_at = bucket
            .iter()
            .enumerate()
            .max_by(|(_, a), (_, b)| a[0].1.magnitude().cmp(b[0].1.magnitude()))
            .map(|(i, _)| i)
            .unwrap();
        let pivot = bucket.swap_remove(pivot_at);
        let plead = pivot[0].1.clone();
        for row in bucket {
            let rlead = row[0].1.clone();
            // Leading entries cancel, so the combined row lands in a later bucket.
            let combined = row_primitive(row_combine(&row, &plead, &pivot, &(-rlead)));
            if let Some(&(lead, _)) = combined.first() {
                buckets[lead].push(combined);
            }
        }
        rows.push(pivot);
    }
    IntEchelon { cols, rows }
}

impl IntEchelon {
    pub fn rank(&self) -> usize {
        self.rows.len()
    }

    /// Rational nullspace basis, one vector per free column.
    ///
    /// Each vector is scaled to a primitive integer vector whose entry at
    /// its free column is positive, so output is deterministic.
    pub fn nullspace(&self) -> Vec<Vec<Scalar>> {
        let pivot_cols: Vec<usize> = self.rows.iter().map(|r| r[0].0).collect();
        let is_pivot = {
            let mut v = vec![false; self.cols];
            for &c in &pivot_cols {
                v[c] = true;
            }
            v
        };
        let mut basis = Vec::new();
        for free in 0..self.cols {
            if is_pivot[free] {
                continue;
            }
            let mut x = vec![Scalar::zero(); self.cols];
            x[free] = Scalar::one();
            for row in self.rows.iter().rev() {
                let (pcol, pval) = (&row[0].0, &row[0].1);
                let mut acc = Scalar::zero();
                for (c, v) in row.iter().skip(1) {
                    if !x[*c].is_zero() {
                        acc += Scalar::from_integer(v.clone()) * &x[*c];
                    }
                }
                if !acc.is_zero() {
                    x[*pcol] = -acc / Scalar::from_integer(pval.clone());
                }
            }
            basis.push(scale_primitive(x));
        }
        basis
    }
}

/// Scale a rational vector to a primitive integer vector, keeping the sign
/// of the first nonzero entry.
pub fn scale_primitive(v: Vec<Scalar>) -> Vec<Scalar> {
    let mut lcm = BigInt::one();
    for x in &v {
        lcm = lcm.lcm(x.denom());
    }
    let mut gcd = BigInt::zero();
    for x in &v {
        gcd = gcd.gcd(&(x.numer() * &lcm / x.denom()));
    }
    if gcd.is_zero() {
        return v;
    }
    let factor = Scalar::new(lcm, gcd);
    v.into_iter().map(|x| x * &factor).collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::{frac, int};

    fn m(rows: &[&[i64]]) -> Matrix {
        Matrix::from_rows(
            rows.iter()
                .map(|r| r.iter().map(|&x| int(x)).collect())
                .collect(),
        )
    }

    #[test]
    fn rref_and_rank() {
        let a = m(&[&[1, 2, 3], &[2, 4, 6], &[1, 0, 1]]);
        assert_eq!(a.rank(), 2);
        assert_eq!(Matrix::identity(4).rank(), 4);
    }

    #[test]
    fn inverse_roundtrip() {
        let a = m(&[&[2, 1], &[5, 3]]);
        let inv = a.inverse().unwrap();
        assert_eq!(a.mul(&inv), Matrix::identity(2));
        assert_eq!(inv.mul(&a), Matrix::identity(2));
        assert!(m(&[&[1, 2], &[2, 4]]).inverse().is_none());
    }

    #[test]
    fn dense_nullspace() {
        let a = m(&[&[1, 2, 3], &[0, 0, 1]]);
        let ns = a.nullspace();
        assert_eq!(ns.len(), 1);
        for v in &ns {
            assert!(a.mul_vec(v).iter().all(Scalar::is_zero));
        }
    }

    #[test]
    fn rowspace_membership_and_equality() {
        let mut s = RowSpace::new(3);
        assert!(s.insert(vec![int(1), int(1), int(0)]));
        assert!(s.insert(vec![int(0), int(2), int(0)]));
        assert!(!s.insert(vec![int(3), int(-1), int(0)]));
        assert_eq!(s.dim(), 2);
        assert!(s.contains(&[int(5), int(7), int(0)]));
        assert!(!s.contains(&[int(0), int(0), int(1)]));

        let t = RowSpace::from_vectors(
            3,
            vec![
                vec![int(2), int(0), int(0)],
                vec![frac(0, 1), frac(1, 3), frac(0, 1)],
            ],
        );
        assert_eq!(s, t);
    }

    #[test]
    fn sparse_echelon_matches_dense_rank_and_kernel() {
        let rows: Vec<SparseRow> = vec![
            vec![(0, BigInt::from(2)), (1, BigInt::from(4))],
            vec![
                (0, BigInt::from(1)),
                (1, BigInt::from(2)),
                (3, BigInt::from(1)),
            ],
            vec![(2, BigInt::from(5))],
        ];
        let ech = int_echelon(rows.clone(), 4);
        assert_eq!(ech.rank(), 3);
        let ns = ech.nullspace();
        assert_eq!(ns.len(), 1);
        for v in &ns {
            for row in &rows {
                let mut acc = Scalar::zero();
                for (c, coef) in row {
                    acc += Scalar::from_integer(coef.clone()) * &v[*c];
                }
                assert!(acc.is_zero());
            }
        }
    }

    #[test]
    fn primitive_scaling() {
        let v = scale_primitive(vec![frac(1, 2), frac(-3, 4), int(0)]);
        assert_eq!(v, vec![int(2), int(-3), int(0)]);
    }
}
