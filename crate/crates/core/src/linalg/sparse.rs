use crate::error::{Error, Result};
use crate::field::Field;

/// Sparse vector with entries sorted by index and no stored zeros.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct SparseVec<E> {
    dim: usize,
    entries: Vec<(usize, E)>,
}

impl<E: Clone + PartialEq> SparseVec<E> {
    pub fn zero(dim: usize) -> Self {
        SparseVec { dim, entries: Vec::new() }
    }

    pub fn unit<F: Field<Elem = E>>(field: &F, dim: usize, index: usize) -> Self {
        assert!(index < dim, "unit index {index} out of range {dim}");
        SparseVec { dim, entries: vec![(index, field.one())] }
    }

    /// Builds a vector from arbitrary `(index, value)` pairs, summing repeats
    /// and dropping zeros.
    pub fn from_entries<F: Field<Elem = E>>(
        field: &F,
        dim: usize,
        mut entries: Vec<(usize, E)>,
    ) -> Result<Self> {
        if let Some(&(bad, _)) = entries.iter().find(|(i, _)| *i >= dim) {
            return Err(Error::DimensionMismatch { expected: dim, found: bad + 1 });
        }
        entries.sort_by_key(|(i, _)| *i);
        let mut merged: Vec<(usize, E)> = Vec::with_capacity(entries.len());
        for (i, v) in entries {
            match merged.last_mut() {
                Some((j, acc)) if *j == i => *acc = field.add(acc, &v),
                _ => merged.push((i, v)),
            }
        }
        merged.retain(|(_, v)| !field.is_zero(v));
        Ok(SparseVec { dim, entries: merged })
    }

    pub fn from_dense<F: Field<Elem = E>>(field: &F, values: &[E]) -> Self {
        let entries = values
            .iter()
            .enumerate()
            .filter(|(_, v)| !field.is_zero(v))
            .map(|(i, v)| (i, v.clone()))
            .collect();
        SparseVec { dim: values.len(), entries }
    }

    pub fn to_dense<F: Field<Elem = E>>(&self, field: &F) -> Vec<E> {
        let mut out = vec![field.zero(); self.dim];
        for (i, v) in &self.entries {
            out[*i] = v.clone();
        }
        out
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn entries(&self) -> &[(usize, E)] {
        &self.entries
    }

    pub fn nnz(&self) -> usize {
        self.entries.len()
    }

    pub fn is_zero(&self) -> bool {
        self.entries.is_empty()
    }

    pub fn get(&self, index: usize) -> Option<&E> {
        self.entries
            .binary_search_by_key(&index, |(i, _)| *i)
            .ok()
            .map(|pos| &self.entries[pos].1)
    }

    pub fn leading(&self) -> Option<&(usize, E)> {
        self.entries.first()
    }

    pub fn scale<F: Field<Elem = E>>(&self, field: &F, c: &E) -> Self {
        if field.is_zero(c) {
            return SparseVec::zero(self.dim);
        }
        let entries = self
            .entries
            .iter()
            .map(|(i, v)| (*i, field.mul(v, c)))
            .filter(|(_, v)| !field.is_zero(v))
            .collect();
        SparseVec { dim: self.dim, entries }
    }

    /// `self + c * other`.
    pub fn add_scaled<F: Field<Elem = E>>(&self, field: &F, c: &E, other: &Self) -> Self {
        debug_assert_eq!(self.dim, other.dim);
        if field.is_zero(c) || other.is_zero() {
            return self.clone();
        }
        let mut out = Vec::with_capacity(self.entries.len() + other.entries.len());
        let (mut a, mut b) = (self.entries.iter().peekable(), other.entries.iter().peekable());
        loop {
            match (a.peek(), b.peek()) {
                (Some((i, x)), Some((j, y))) => {
                    if i < j {
                        out.push((*i, x.clone()));
                        a.next();
                    } else if j < i {
                        out.push((*j, field.mul(c, y)));
                        b.next();
                    } else {
                        let s = field.add(x, &field.mul(c, y));
                        if !field.is_zero(&s) {
                            out.push((*i, s));
                        }
                        a.next();
                        b.next();
                    }
                }
                (Some((i, x)), None) => {
                    out.push((*i, x.clone()));
                    a.next();
                }
                (None, Some((j, y))) => {
                    out.push((*j, field.mul(c, y)));
                    b.next();
                }
                (None, None) => break,
            }
        }
        SparseVec { dim: self.dim, entries: out }
    }

    pub fn add<F: Field<Elem = E>>(&self, field: &F, other: &Self) -> Self {
        self.add_scaled(field, &field.one(), other)
    }

    pub fn sub<F: Field<Elem = E>>(&self, field: &F, other: &Self) -> Self {
        self.add_scaled(field, &field.neg(&field.one()), other)
    }

    /// Keeps only the coordinates for which `keep` holds.
    pub fn restrict(&self, keep: impl Fn(usize) -> bool) -> Self {
        SparseVec {
            dim: self.dim,
            entries: self.entries.iter().filter(|(i, _)| keep(*i)).cloned().collect(),
        }
    }
}

/// Column-major sparse matrix: column `j` is the image of the `j`-th domain
/// basis vector.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct SparseMatrix<E> {
    rows: usize,
    cols: usize,
    columns: Vec<SparseVec<E>>,
}

impl<E: Clone + PartialEq> SparseMatrix<E> {
    pub fn zero(rows: usize, cols: usize) -> Self {
        SparseMatrix { rows, cols, columns: vec![SparseVec::zero(rows); cols] }
    }

    pub fn identity<F: Field<Elem = E>>(field: &F, dim: usize) -> Self {
        SparseMatrix {
            rows: dim,
            cols: dim,
            columns: (0..dim).map(|j| SparseVec::unit(field, dim, j)).collect(),
        }
    }

    pub fn from_columns(rows: usize, columns: Vec<SparseVec<E>>) -> Result<Self> {
        if let Some(c) = columns.iter().find(|c| c.dim() != rows) {
            return Err(Error::DimensionMismatch { expected: rows, found: c.dim() });
        }
        Ok(SparseMatrix { rows, cols: columns.len(), columns })
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn column(&self, j: usize) -> &SparseVec<E> {
        &self.columns[j]
    }

    pub fn columns(&self) -> &[SparseVec<E>] {
        &self.columns
    }

    pub fn entry(&self, i: usize, j: usize) -> Option<&E> {
        self.columns[j].get(i)
    }

    pub fn is_zero(&self) -> bool {
        self.columns.iter().all(SparseVec::is_zero)
    }

    pub fn nnz(&self) -> usize {
        self.columns.iter().map(SparseVec::nnz).sum()
    }

    pub fn apply<F: Field<Elem = E>>(&self, field: &F, v: &SparseVec<E>) -> Result<SparseVec<E>> {
        if v.dim() != self.cols {
            return Err(Error::DimensionMismatch { expected: self.cols, found: v.dim() });
        }
        let mut acc = SparseVec::zero(self.rows);
        for (j, c) in v.entries() {
            acc = acc.add_scaled(field, c, &self.columns[*j]);
        }
        Ok(acc)
    }

    /// `self * rhs`, i.e. apply `rhs` first.
    pub fn compose<F: Field<Elem = E>>(&self, field: &F, rhs: &Self) -> Result<Self> {
        if rhs.rows != self.cols {
            return Err(Error::DimensionMismatch { expected: self.cols, found: rhs.rows });
        }
        let columns = rhs
            .columns
            .iter()
            .map(|c| self.apply(field, c))
            .collect::<Result<Vec<_>>>()?;
        Ok(SparseMatrix { rows: self.rows, cols: rhs.cols, columns })
    }

    pub fn add_scaled<F: Field<Elem = E>>(&self, field: &F, c: &E, other: &Self) -> Result<Self> {
        if (self.rows, self.cols) != (other.rows, other.cols) {
            return Err(Error::DimensionMismatch {
                expected: self.rows * self.cols,
                found: other.rows * other.cols,
            });
        }
        let columns = self
            .columns
            .iter()
            .zip(&other.columns)
            .map(|(a, b)| a.add_scaled(field, c, b))
            .collect();
        Ok(SparseMatrix { rows: self.rows, cols: self.cols, columns })
    }

    pub fn add<F: Field<Elem = E>>(&self, field: &F, other: &Self) -> Result<Self> {
        self.add_scaled(field, &field.one(), other)
    }

    pub fn sub<F: Field<Elem = E>>(&self, field: &F, other: &Self) -> Result<Self> {
        self.add_scaled(field, &field.neg(&field.one()), other)
    }

    /// Rows of the matrix as sparse vectors over the domain.
    pub fn row_vectors(&self) -> Vec<SparseVec<E>> {
        let mut rows: Vec<Vec<(usize, E)>> = vec![Vec::new(); self.rows];
        for (j, col) in self.columns.iter().enumerate() {
            for (i, v) in col.entries() {
                rows[*i].push((j, v.clone()));
            }
        }
        rows.into_iter()
            .map(|entries| SparseVec { dim: self.cols, entries })
            .collect()
    }

    pub fn transpose(&self) -> Self {
        SparseMatrix { rows: self.cols, cols: self.rows, columns: self.row_vectors() }
    }

    /// Largest number of nonzeros in any single row and any single column.
    pub fn max_row_col_nnz(&self) -> (usize, usize) {
        let mut row_counts = vec![0usize; self.rows];
        let mut col_max = 0;
        for col in &self.columns {
            col_max = col_max.max(col.nnz());
            for (i, _) in col.entries() {
                row_counts[*i] += 1;
            }
        }
        (row_counts.into_iter().max().unwrap_or(0), col_max)
    }

    /// First column where the two matrices differ.
    pub fn first_difference(&self, other: &Self) -> Option<usize> {
        if (self.rows, self.cols) != (other.rows, other.cols) {
            return Some(0);
        }
        (0..self.cols).find(|&j| self.columns[j] != other.columns[j])
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::{PrimeField, Rationals};

    #[test]
    fn add_scaled_cancels() {
        let q = Rationals;
        let a = SparseVec::from_dense(&q, &[q.from_i64(1), q.from_i64(2), q.zero()]);
        let b = SparseVec::from_dense(&q, &[q.from_i64(1), q.zero(), q.from_i64(3)]);
        let c = a.sub(&q, &b);
        assert_eq!(c.entries().len(), 2);
        assert!(c.get(0).is_none());
        assert_eq!(c.get(2), Some(&q.from_i64(-3)));
    }

    #[test]
    fn from_entries_merges_and_checks_range() {
        let f = PrimeField::new(3).unwrap();
        let v = SparseVec::from_entries(&f, 4, vec![(2, 1), (0, 1), (2, 2)]).unwrap();
        assert_eq!(v.entries(), &[(0, 1)]);
        assert!(SparseVec::from_entries(&f, 4, vec![(4, 1)]).is_err());
    }

    #[test]
    fn compose_matches_sequential_application() {
        let q = Rationals;
        let one = q.one();
        let shift = SparseMatrix::from_columns(
            3,
            vec![
                SparseVec::from_entries(&q, 3, vec![(1, one.clone())]).unwrap(),
                SparseVec::from_entries(&q, 3, vec![(2, one.clone())]).unwrap(),
                SparseVec::zero(3),
            ],
        )
        .unwrap();
        let sq = shift.compose(&q, &shift).unwrap();
        let e0 = SparseVec::unit(&q, 3, 0);
        assert_eq!(sq.apply(&q, &e0).unwrap(), SparseVec::unit(&q, 3, 2));
        assert_eq!(shift.transpose().transpose(), shift);
        assert_eq!(shift.max_row_col_nnz(), (1, 1));
    }
}
