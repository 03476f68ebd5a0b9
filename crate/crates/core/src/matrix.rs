//! Sparse exact linear algebra over a prime field.
//!
//! Two shapes cover everything this crate needs:
//!
//! * [`SparseMatrix::rank`] — column elimination keyed on the lowest nonzero
//!   row of each column, the cheap path for boundary-matrix ranks;
//! * [`RowEchelon`] — an incrementally maintained reduced row-echelon basis
//!   of a subspace, used where we also need pivot columns, the complement
//!   basis, and normal forms (face-ring quotients).
//!
//! Elimination order is fixed by construction, so every result is
//! deterministic for a given input order.

use crate::field::PrimeField;
use alloc::collections::BTreeMap;
use alloc::vec::Vec;

/// Sparse vector: `(index, coefficient)` pairs, sorted by index, all
/// coefficients nonzero mod p.
pub type SparseVec = Vec<(usize, u64)>;

/// Returns `a + c * b`, keeping the sparse representation normalized.
pub fn add_scaled(field: &PrimeField, a: &SparseVec, c: u64, b: &SparseVec) -> SparseVec {
    let mut out = Vec::with_capacity(a.len() + b.len());
    let (mut i, mut j) = (0, 0);
    while i < a.len() || j < b.len() {
        match (a.get(i), b.get(j)) {
            (Some(&(ia, va)), Some(&(ib, vb))) => {
                if ia < ib {
                    out.push((ia, va));
                    i += 1;
                } else if ib < ia {
                    let v = field.mul(c, vb);
                    if v != 0 {
                        out.push((ib, v));
                    }
                    j += 1;
                } else {
                    let v = field.add(va, field.mul(c, vb));
                    if v != 0 {
                        out.push((ia, v));
                    }
                    i += 1;
                    j += 1;
                }
            }
            (Some(&(ia, va)), None) => {
                out.push((ia, va));
                i += 1;
            }
            (None, Some(&(ib, vb))) => {
                let v = field.mul(c, vb);
                if v != 0 {
                    out.push((ib, v));
                }
                j += 1;
            }
            (None, None) => unreachable!(),
        }
    }
    out
}

fn scale(field: &PrimeField, v: &mut SparseVec, c: u64) {
    for (_, x) in v.iter_mut() {
        *x = field.mul(*x, c);
    }
}

/// A matrix stored column-wise.
#[derive(Clone, Debug)]
pub struct SparseMatrix {
    nrows: usize,
    cols: Vec<SparseVec>,
}

impl SparseMatrix {
    pub fn new(nrows: usize) -> Self {
        SparseMatrix { nrows, cols: Vec::new() }
    }

    pub fn push_col(&mut self, col: SparseVec) {
        debug_assert!(col.iter().all(|&(i, v)| i < self.nrows && v != 0));
        debug_assert!(col.windows(2).all(|w| w[0].0 < w[1].0));
        self.cols.push(col);
    }

    pub fn ncols(&self) -> usize {
        self.cols.len()
    }

    pub fn nrows(&self) -> usize {
        self.nrows
    }

    /// Rank by left-to-right column reduction: each column is reduced against
    /// the recorded column owning its lowest nonzero row until it dies or
    /// claims a new row.
    pub fn rank(&self, field: &PrimeField) -> usize {
        let mut owners: BTreeMap<usize, SparseVec> = BTreeMap::new();
        for col in &self.cols {
            let mut col = col.clone();
            while let Some(&(low, c)) = col.last() {
                match owners.get(&low) {
                    Some(owner) => {
                        // owner's low coefficient is 1, so subtracting c*owner
                        // clears the shared low row
                        col = add_scaled(field, &col, field.neg(c), owner);
                    }
                    None => {
                        scale(field, &mut col, field.inv(c));
                        owners.insert(low, col);
                        break;
                    }
                }
            }
        }
        owners.len()
    }

    /// `dim ker = ncols - rank`.
    pub fn kernel_dim(&self, field: &PrimeField) -> usize {
        self.ncols() - self.rank(field)
    }
}

/// Reduced row-echelon basis of a subspace of `F_p^ncols`, grown one vector
/// at a time. Pivots are leftmost nonzero entries; every row is normalized to
/// pivot coefficient 1 and reduced against all other pivots.
#[derive(Clone, Debug)]
pub struct RowEchelon {
    field: PrimeField,
    ncols: usize,
    rows: Vec<SparseVec>,
    pivot_to_row: BTreeMap<usize, usize>,
}

impl RowEchelon {
    pub fn new(field: PrimeField, ncols: usize) -> Self {
        RowEchelon { field, ncols, rows: Vec::new(), pivot_to_row: BTreeMap::new() }
    }

    pub fn rank(&self) -> usize {
        self.rows.len()
    }

    pub fn ncols(&self) -> usize {
        self.ncols
    }

    pub fn field(&self) -> PrimeField {
        self.field
    }

    /// Normal form of `v` modulo the subspace: entries at pivot columns are
    /// eliminated, leaving a vector supported on complement columns.
    pub fn reduce(&self, mut v: SparseVec) -> SparseVec {
        let mut i = 0;
        while i < v.len() {
            let (idx, coeff) = v[i];
            if let Some(&r) = self.pivot_to_row.get(&idx) {
                // the row begins at its pivot, so this cannot disturb v before i
                v = add_scaled(&self.field, &v, self.field.neg(coeff), &self.rows[r]);
            } else {
                i += 1;
            }
        }
        v
    }

    /// Reduces `v` and, if anything is left, adds it as a new basis row.
    /// Returns whether the rank grew.
    pub fn insert(&mut self, v: SparseVec) -> bool {
        let mut v = self.reduce(v);
        let Some(&(pivot, c)) = v.first() else { return false };
        scale(&self.field, &mut v, self.field.inv(c));
        // keep the basis fully reduced: clear the new pivot from older rows
        for row in self.rows.iter_mut() {
            if let Ok(pos) = row.binary_search_by_key(&pivot, |e| e.0) {
                let coeff = row[pos].1;
                *row = add_scaled(&self.field, row, self.field.neg(coeff), &v);
            }
        }
        let r = self.rows.len();
        self.rows.push(v);
        self.pivot_to_row.insert(pivot, r);
        true
    }

    /// Pivot column indices, ascending.
    pub fn pivot_cols(&self) -> Vec<usize> {
        self.pivot_to_row.keys().copied().collect()
    }

    /// Non-pivot column indices, ascending: a basis of the quotient space.
    pub fn complement_cols(&self) -> Vec<usize> {
        let mut out = Vec::with_capacity(self.ncols - self.rows.len());
        let mut pivots = self.pivot_to_row.keys().copied().peekable();
        for c in 0..self.ncols {
            if pivots.peek() == Some(&c) {
                pivots.next();
            } else {
                out.push(c);
            }
        }
        out
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::vec;

    fn f() -> PrimeField {
        PrimeField::new(5).unwrap()
    }

    #[test]
    fn rank_of_known_matrix() {
        // rows of [[1,2],[2,4],[0,1]] as columns: [[1,2,0],[2,4,1]]
        let field = f();
        let mut m = SparseMatrix::new(3);
        m.push_col(vec![(0, 1), (1, 2)]);
        m.push_col(vec![(0, 2), (1, 4), (2, 1)]);
        assert_eq!(m.rank(&field), 2);

        let mut sing = SparseMatrix::new(2);
        sing.push_col(vec![(0, 1), (1, 2)]);
        sing.push_col(vec![(0, 2), (1, 4)]); // 2 * first column
        sing.push_col(vec![(0, 3), (1, 2)]);
        assert_eq!(sing.rank(&field), 2);
        assert_eq!(sing.kernel_dim(&field), 1);
    }

    #[test]
    fn echelon_reduce_and_complement() {
        let field = f();
        let mut e = RowEchelon::new(field, 4);
        assert!(e.insert(vec![(0, 1), (2, 1)]));
        assert!(e.insert(vec![(0, 1), (1, 1)]));
        assert!(!e.insert(vec![(1, 1), (2, 4)])); // = row2 - row1 (mod 5)
        assert_eq!(e.rank(), 2);
        assert_eq!(e.pivot_cols(), vec![0, 1]);
        assert_eq!(e.complement_cols(), vec![2, 3]);
        // normal forms live on complement columns only
        let nf = e.reduce(vec![(0, 2), (3, 1)]);
        assert!(nf.iter().all(|&(i, _)| i == 2 || i == 3));
        // reducing a vector in the span gives zero
        assert!(!e.reduce(vec![(0, 1), (1, 3), (2, 1)]).is_empty());
        assert!(e.reduce(vec![(1, 1), (2, 4)]).is_empty());
    }

    #[test]
    fn echelon_rank_matches_column_rank_on_random_data() {
        let field = PrimeField::new(32003).unwrap();
        // a deterministic pseudo-random fill
        let mut state = 1u64;
        let mut next = move || {
            state = state.wrapping_mul(6364136223846793005).wrapping_add(1442695040888963407);
            state >> 33
        };
        for _ in 0..10 {
            let nrows = 8;
            let ncols = 12;
            let mut cols: Vec<SparseVec> = Vec::new();
            for _ in 0..ncols {
                let mut col: SparseVec = Vec::new();
                for r in 0..nrows {
                    let v = next() % 7;
                    if v < 3 {
                        col.push((r, v % 32003 + 1));
                    }
                }
                cols.push(col);
            }
            let mut m = SparseMatrix::new(nrows);
            let mut e = RowEchelon::new(field, nrows);
            for c in &cols {
                m.push_col(c.clone());
                e.insert(c.clone());
            }
            // column rank equals row rank of the transpose-as-rows insert
            assert_eq!(m.rank(&field), e.rank());
        }
    }
}
