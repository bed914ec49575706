//! Sparse exact linear algebra over the rationals.
//!
//! Vectors are sorted `(index, value)` lists without stored zeros. All
//! elimination goes through [`Echelon`], an incrementally maintained reduced
//! row echelon form. Two pivot rules are supported: `Leading` picks the
//! smallest index (used wherever a canonical, order-respecting basis is
//! required) and `Markowitz` picks the candidate column with the fewest
//! nonzeros in the input, which limits fill-in for plain rank and kernel
//! queries.

use std::collections::{BTreeMap, HashMap};

use num_traits::{One, Zero};

use crate::scalar::Scalar;

pub type SparseVec = Vec<(usize, Scalar)>;

pub fn to_sparse(v: &[Scalar]) -> SparseVec {
    v.iter()
        .enumerate()
        .filter(|(_, x)| !x.is_zero())
        .map(|(i, x)| (i, x.clone()))
        .collect()
}

pub fn to_dense(v: &SparseVec, dim: usize) -> Vec<Scalar> {
    let mut out = vec![Scalar::zero(); dim];
    for (i, x) in v {
        out[*i] = x.clone();
    }
    out
}

/// `a - s * b` for sorted sparse vectors.
pub fn sub_scaled(a: &SparseVec, s: &Scalar, b: &SparseVec) -> SparseVec {
    let mut out = Vec::with_capacity(a.len() + b.len());
    let (mut i, mut j) = (0, 0);
    while i < a.len() || j < b.len() {
        let take_a = j >= b.len() || (i < a.len() && a[i].0 < b[j].0);
        let take_b = i >= a.len() || (j < b.len() && b[j].0 < a[i].0);
        if take_a {
            out.push(a[i].clone());
            i += 1;
        } else if take_b {
            out.push((b[j].0, -(s * &b[j].1)));
            j += 1;
        } else {
            let x = &a[i].1 - s * &b[j].1;
            if !x.is_zero() {
                out.push((a[i].0, x));
            }
            i += 1;
            j += 1;
        }
    }
    out
}

pub fn scale(v: &SparseVec, s: &Scalar) -> SparseVec {
    if s.is_zero() {
        return Vec::new();
    }
    v.iter().map(|(i, x)| (*i, x * s)).collect()
}

fn lookup(v: &SparseVec, idx: usize) -> Option<&Scalar> {
    v.binary_search_by_key(&idx, |(i, _)| *i).ok().map(|k| &v[k].1)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum PivotRule {
    Leading,
    Markowitz,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Insert {
    /// Independent of the rows so far; new pivot column.
    Pivot(usize),
    /// Already in the row span.
    Dependent,
    /// Independent, but only in columns that may not pivot.
    Beyond,
}

/// Reduced row echelon form, grown one row at a time.
#[derive(Debug, Clone)]
pub struct Echelon {
    dim: usize,
    limit: usize,
    rule: PivotRule,
    col_weight: Vec<usize>,
    rows: Vec<SparseVec>,
    pivots: Vec<usize>,
    by_col: HashMap<usize, usize>,
}

impl Echelon {
    pub fn new(dim: usize, rule: PivotRule) -> Self {
        Echelon {
            dim,
            limit: dim,
            rule,
            col_weight: Vec::new(),
            rows: Vec::new(),
            pivots: Vec::new(),
            by_col: HashMap::new(),
        }
    }

    /// Columns at index `>= limit` never become pivots.
    pub fn with_pivot_limit(mut self, limit: usize) -> Self {
        self.limit = limit.min(self.dim);
        self
    }

    pub fn with_column_weights(mut self, weights: Vec<usize>) -> Self {
        self.col_weight = weights;
        self
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn rank(&self) -> usize {
        self.rows.len()
    }

    pub fn rows(&self) -> &[SparseVec] {
        &self.rows
    }

    pub fn pivots(&self) -> &[usize] {
        &self.pivots
    }

    pub fn pivot_row(&self, col: usize) -> Option<&SparseVec> {
        self.by_col.get(&col).map(|&r| &self.rows[r])
    }

    /// Remainder of `v` after eliminating every pivot column.
    pub fn reduce(&self, v: &SparseVec) -> SparseVec {
        let hits: Vec<(usize, &Scalar)> = v
            .iter()
            .filter_map(|(c, x)| self.by_col.get(c).map(|&r| (r, x)))
            .collect();
        if hits.is_empty() {
            return v.clone();
        }
        let mut acc: BTreeMap<usize, Scalar> = v.iter().cloned().collect();
        for (r, x) in hits {
            for (c, y) in &self.rows[r] {
                let slot = acc.entry(*c).or_insert_with(Scalar::zero);
                *slot -= x * y;
            }
        }
        acc.into_iter().filter(|(_, x)| !x.is_zero()).collect()
    }

    pub fn contains(&self, v: &SparseVec) -> bool {
        self.reduce(v).is_empty()
    }

    pub fn insert(&mut self, v: &SparseVec) -> Insert {
        let r = self.reduce(v);
        if r.is_empty() {
            return Insert::Dependent;
        }
        let candidates = r.iter().filter(|(c, _)| *c < self.limit);
        let pivot = match self.rule {
            PivotRule::Leading => candidates.map(|(c, _)| *c).next(),
            PivotRule::Markowitz => candidates
                .map(|(c, _)| *c)
                .min_by_key(|c| (self.col_weight.get(*c).copied().unwrap_or(0), *c)),
        };
        let Some(p) = pivot else {
            return Insert::Beyond;
        };
        let inv = lookup(&r, p).expect("pivot entry").recip();
        let r = scale(&r, &inv);
        for row in &mut self.rows {
            if let Some(x) = lookup(row, p).cloned() {
                *row = sub_scaled(row, &x, &r);
            }
        }
        self.by_col.insert(p, self.rows.len());
        self.rows.push(r);
        self.pivots.push(p);
        Insert::Pivot(p)
    }
}

/// Column-stored sparse matrix.
#[derive(Debug, Clone, PartialEq)]
pub struct SparseMatrix {
    rows: usize,
    cols: usize,
    columns: Vec<SparseVec>,
}

impl SparseMatrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        SparseMatrix {
            rows,
            cols,
            columns: vec![Vec::new(); cols],
        }
    }

    pub fn identity(n: usize) -> Self {
        SparseMatrix {
            rows: n,
            cols: n,
            columns: (0..n).map(|i| vec![(i, Scalar::one())]).collect(),
        }
    }

    /// Duplicate coordinates are summed; zero sums are dropped.
    pub fn from_triplets<I>(rows: usize, cols: usize, entries: I) -> Self
    where
        I: IntoIterator<Item = (usize, usize, Scalar)>,
    {
        let mut acc: Vec<BTreeMap<usize, Scalar>> = vec![BTreeMap::new(); cols];
        for (r, c, x) in entries {
            assert!(r < rows && c < cols, "entry ({r},{c}) outside {rows}x{cols}");
            *acc[c].entry(r).or_insert_with(Scalar::zero) += x;
        }
        let columns = acc
            .into_iter()
            .map(|m| m.into_iter().filter(|(_, x)| !x.is_zero()).collect())
            .collect();
        SparseMatrix { rows, cols, columns }
    }

    /// Columns must already be sorted and free of zeros.
    pub fn from_columns(rows: usize, columns: Vec<SparseVec>) -> Self {
        debug_assert!(columns
            .iter()
            .all(|c| c.windows(2).all(|w| w[0].0 < w[1].0) && c.iter().all(|(i, x)| *i < rows && !x.is_zero())));
        SparseMatrix {
            rows,
            cols: columns.len(),
            columns,
        }
    }

    pub fn from_dense(rows: &[Vec<Scalar>]) -> Self {
        let nrows = rows.len();
        let ncols = rows.first().map_or(0, |r| r.len());
        let entries = rows.iter().enumerate().flat_map(|(i, row)| {
            row.iter()
                .enumerate()
                .filter(|(_, x)| !x.is_zero())
                .map(move |(j, x)| (i, j, x.clone()))
        });
        Self::from_triplets(nrows, ncols, entries)
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn nnz(&self) -> usize {
        self.columns.iter().map(Vec::len).sum()
    }

    pub fn column(&self, j: usize) -> &SparseVec {
        &self.columns[j]
    }

    pub fn columns(&self) -> &[SparseVec] {
        &self.columns
    }

    pub fn get(&self, r: usize, c: usize) -> Scalar {
        lookup(&self.columns[c], r).cloned().unwrap_or_else(Scalar::zero)
    }

    /// `(row, col, value)` in column-major order.
    pub fn entries(&self) -> impl Iterator<Item = (usize, usize, &Scalar)> {
        self.columns
            .iter()
            .enumerate()
            .flat_map(|(c, col)| col.iter().map(move |(r, x)| (*r, c, x)))
    }

    pub fn is_zero(&self) -> bool {
        self.columns.iter().all(Vec::is_empty)
    }

    pub fn mul_vec(&self, x: &[Scalar]) -> Vec<Scalar> {
        assert_eq!(x.len(), self.cols);
        let mut out = vec![Scalar::zero(); self.rows];
        for (c, col) in self.columns.iter().enumerate() {
            if x[c].is_zero() {
                continue;
            }
            for (r, v) in col {
                out[*r] += v * &x[c];
            }
        }
        out
    }

    pub fn to_row_major(&self) -> Vec<SparseVec> {
        let mut rows = vec![Vec::new(); self.rows];
        for (c, col) in self.columns.iter().enumerate() {
            for (r, x) in col {
                rows[*r].push((c, x.clone()));
            }
        }
        rows
    }

    fn row_echelon(&self, extra: Option<&[Scalar]>) -> (Echelon, bool) {
        let mut rows = self.to_row_major();
        let width = self.cols + usize::from(extra.is_some());
        if let Some(v) = extra {
            for (r, x) in v.iter().enumerate() {
                if !x.is_zero() {
                    rows[r].push((self.cols, x.clone()));
                }
            }
        }
        let weights = self.columns.iter().map(Vec::len).collect();
        let mut ech = Echelon::new(width, PivotRule::Markowitz)
            .with_pivot_limit(self.cols)
            .with_column_weights(weights);
        rows.sort_by_key(Vec::len);
        let mut consistent = true;
        for row in &rows {
            if ech.insert(row) == Insert::Beyond {
                consistent = false;
            }
        }
        (ech, consistent)
    }

    pub fn rank(&self) -> usize {
        if self.rows == 0 || self.cols == 0 {
            return 0;
        }
        self.row_echelon(None).0.rank()
    }

    /// Null-space basis; each vector is scaled so its first nonzero entry is 1.
    pub fn kernel_basis(&self) -> Vec<Vec<Scalar>> {
        self.kernel_basis_sparse().iter().map(|v| to_dense(v, self.cols)).collect()
    }

    /// [`kernel_basis`](Self::kernel_basis) without densifying, one vector per
    /// free column in increasing order.
    pub fn kernel_basis_sparse(&self) -> Vec<SparseVec> {
        let (ech, _) = self.row_echelon(None);
        let mut is_pivot = vec![false; self.cols];
        for &p in ech.pivots() {
            is_pivot[p] = true;
        }
        let mut slot = vec![usize::MAX; self.cols];
        let mut basis: Vec<SparseVec> = Vec::new();
        for c in (0..self.cols).filter(|&c| !is_pivot[c]) {
            slot[c] = basis.len();
            basis.push(vec![(c, Scalar::one())]);
        }
        for (row, &p) in ech.rows().iter().zip(ech.pivots()) {
            for (c, x) in row {
                if *c != p && !is_pivot[*c] {
                    basis[slot[*c]].push((p, -x.clone()));
                }
            }
        }
        for v in &mut basis {
            v.sort_by_key(|(i, _)| *i);
            let inv = v[0].1.recip();
            if !inv.is_one() {
                for (_, x) in v.iter_mut() {
                    *x *= &inv;
                }
            }
        }
        basis
    }

    /// Coordinates `c` with `self * c = v`, when `v` is in the column space.
    pub fn membership(&self, v: &[Scalar]) -> Option<Vec<Scalar>> {
        assert_eq!(v.len(), self.rows);
        if v.iter().all(Zero::is_zero) {
            return Some(vec![Scalar::zero(); self.cols]);
        }
        let (ech, consistent) = self.row_echelon(Some(v));
        if !consistent {
            return None;
        }
        let mut c = vec![Scalar::zero(); self.cols];
        for (row, &p) in ech.rows().iter().zip(ech.pivots()) {
            if let Some(x) = lookup(row, self.cols) {
                c[p] = x.clone();
            }
        }
        Some(c)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::int;

    fn dense(rows: &[&[i64]]) -> SparseMatrix {
        let rows: Vec<Vec<Scalar>> = rows
            .iter()
            .map(|r| r.iter().map(|&x| int(x)).collect())
            .collect();
        SparseMatrix::from_dense(&rows)
    }

    #[test]
    fn empty_and_identity() {
        assert_eq!(SparseMatrix::zeros(0, 0).rank(), 0);
        assert_eq!(SparseMatrix::identity(3).rank(), 3);
        assert!(SparseMatrix::identity(3).kernel_basis().is_empty());
    }

    #[test]
    fn kernel_of_row_sum() {
        let m = dense(&[&[1, 1]]);
        assert_eq!(m.kernel_basis(), vec![vec![int(1), int(-1)]]);
    }

    #[test]
    fn membership_cases() {
        let m = dense(&[&[1, 2], &[2, 4], &[0, 1]]);
        assert_eq!(m.membership(&[int(0), int(0), int(0)]), Some(vec![int(0), int(0)]));
        let first: Vec<Scalar> = (0..3).map(|r| m.get(r, 0)).collect();
        assert_eq!(m.membership(&first), Some(vec![int(1), int(0)]));
        assert_eq!(m.membership(&[int(1), int(0), int(0)]), None);
    }

    #[test]
    fn triplets_accumulate_and_drop_zeros() {
        let m = SparseMatrix::from_triplets(2, 2, [(0, 0, int(1)), (0, 0, int(-1)), (1, 1, int(2))]);
        assert_eq!(m.nnz(), 1);
        assert_eq!(m.get(1, 1), int(2));
    }

    #[test]
    fn echelon_leading_rule_is_reduced() {
        let mut e = Echelon::new(3, PivotRule::Leading);
        assert_eq!(e.insert(&vec![(1, int(2)), (2, int(2))]), Insert::Pivot(1));
        assert_eq!(e.insert(&vec![(0, int(1)), (1, int(1))]), Insert::Pivot(0));
        assert_eq!(e.insert(&vec![(0, int(1)), (2, int(-1))]), Insert::Dependent);
        // row for pivot 0 must have been cleared in column 1
        assert_eq!(e.pivot_row(0).unwrap(), &vec![(0, int(1)), (2, int(-1))]);
    }
}
