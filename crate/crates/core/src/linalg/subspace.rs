use std::collections::{BTreeMap, VecDeque};

use crate::error::{Error, Result};
use crate::field::Field;
use crate::linalg::sparse::{SparseMatrix, SparseVec};

/// A subspace held in reduced row-echelon form.
///
/// Rows are keyed by pivot column. Each pivot entry is 1 and is the only
/// nonzero in its column among the rows, so the representation is canonical
/// and equality of subspaces is structural equality.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Subspace<E> {
    ambient: usize,
    rows: BTreeMap<usize, SparseVec<E>>,
}

impl<E: Clone + PartialEq> Subspace<E> {
    pub fn zero(ambient: usize) -> Self {
        Subspace { ambient, rows: BTreeMap::new() }
    }

    pub fn full<F: Field<Elem = E>>(field: &F, ambient: usize) -> Self {
        Subspace {
            ambient,
            rows: (0..ambient).map(|i| (i, SparseVec::unit(field, ambient, i))).collect(),
        }
    }

    /// Span of the given coordinate axes.
    pub fn coordinate<F: Field<Elem = E>>(
        field: &F,
        ambient: usize,
        axes: impl IntoIterator<Item = usize>,
    ) -> Self {
        Subspace {
            ambient,
            rows: axes
                .into_iter()
                .map(|i| (i, SparseVec::unit(field, ambient, i)))
                .collect(),
        }
    }

    pub fn ambient_dim(&self) -> usize {
        self.ambient
    }

    pub fn dim(&self) -> usize {
        self.rows.len()
    }

    pub fn is_zero(&self) -> bool {
        self.rows.is_empty()
    }

    pub fn is_full(&self) -> bool {
        self.rows.len() == self.ambient
    }

    pub fn pivots(&self) -> Vec<usize> {
        self.rows.keys().copied().collect()
    }

    pub fn basis(&self) -> impl Iterator<Item = &SparseVec<E>> {
        self.rows.values()
    }

    /// True when every basis row is a coordinate axis.
    pub fn is_coordinate(&self) -> bool {
        self.rows.values().all(|r| r.nnz() == 1)
    }

    /// Normal form of `v` modulo this subspace. Zero iff `v` lies in it.
    pub fn reduce<F: Field<Elem = E>>(&self, field: &F, v: &SparseVec<E>) -> SparseVec<E> {
        let mut out = v.clone();
        for (idx, c) in v.entries() {
            if let Some(row) = self.rows.get(idx) {
                out = out.add_scaled(field, &field.neg(c), row);
            }
        }
        out
    }

    pub fn contains<F: Field<Elem = E>>(&self, field: &F, v: &SparseVec<E>) -> bool {
        self.reduce(field, v).is_zero()
    }

    /// Adds `v` to the span. Returns the new (reduced, normalised) basis
    /// row if the span grew.
    pub fn insert<F: Field<Elem = E>>(
        &mut self,
        field: &F,
        v: &SparseVec<E>,
    ) -> Result<Option<SparseVec<E>>> {
        if v.dim() != self.ambient {
            return Err(Error::DimensionMismatch { expected: self.ambient, found: v.dim() });
        }
        let reduced = self.reduce(field, v);
        let Some((pivot, lead)) = reduced.leading().cloned() else {
            return Ok(None);
        };
        let inv = field.inv(&lead).expect("leading entry is nonzero");
        let row = reduced.scale(field, &inv);
        for other in self.rows.values_mut() {
            if let Some(c) = other.get(pivot).cloned() {
                *other = other.add_scaled(field, &field.neg(&c), &row);
            }
        }
        self.rows.insert(pivot, row.clone());
        Ok(Some(row))
    }

    /// Coordinates of `v` with respect to the echelon basis, in pivot order.
    /// Returns `None` if `v` is not in the subspace.
    pub fn coordinates<F: Field<Elem = E>>(&self, field: &F, v: &SparseVec<E>) -> Option<SparseVec<E>> {
        if !self.contains(field, v) {
            return None;
        }
        let entries = self
            .rows
            .keys()
            .enumerate()
            .filter_map(|(k, p)| v.get(*p).map(|c| (k, c.clone())))
            .collect();
        Some(SparseVec::from_entries(field, self.dim(), entries).expect("indices in range"))
    }

    pub fn is_subspace_of<F: Field<Elem = E>>(&self, field: &F, other: &Self) -> bool {
        self.ambient == other.ambient && self.rows.values().all(|r| other.contains(field, r))
    }

    pub fn sum<F: Field<Elem = E>>(&self, field: &F, other: &Self) -> Result<Self> {
        let mut out = self.clone();
        for r in other.rows.values() {
            out.insert(field, r)?;
        }
        Ok(out)
    }

    pub fn intersection<F: Field<Elem = E>>(&self, field: &F, other: &Self) -> Result<Self> {
        if self.ambient != other.ambient {
            return Err(Error::DimensionMismatch { expected: self.ambient, found: other.ambient });
        }
        // Solve sum a_i u_i = sum b_j w_j via the kernel of [U | -W].
        let u: Vec<_> = self.rows.values().cloned().collect();
        let w: Vec<_> = other.rows.values().map(|r| r.scale(field, &field.neg(&field.one()))).collect();
        let stacked = SparseMatrix::from_columns(self.ambient, u.iter().cloned().chain(w).collect())?;
        let (_, kernel) = map_image_kernel(field, &stacked)?;
        let mut out = Subspace::zero(self.ambient);
        for k in kernel.basis() {
            let mut x = SparseVec::zero(self.ambient);
            for (i, a) in k.entries() {
                if *i < u.len() {
                    x = x.add_scaled(field, a, &u[*i]);
                }
            }
            out.insert(field, &x)?;
        }
        Ok(out)
    }
}

/// Canonical echelon basis of the span of `vectors`.
pub fn rref_span<F: Field>(
    field: &F,
    vectors: &[SparseVec<F::Elem>],
    ambient: usize,
) -> Result<Subspace<F::Elem>> {
    let mut out = Subspace::zero(ambient);
    for v in vectors {
        out.insert(field, v)?;
    }
    Ok(out)
}

/// Smallest subspace containing `seeds` and closed under every generator.
pub fn spin<F: Field>(
    field: &F,
    seeds: &[SparseVec<F::Elem>],
    generators: &[SparseMatrix<F::Elem>],
) -> Result<Subspace<F::Elem>> {
    let ambient = match (seeds.first(), generators.first()) {
        (Some(v), _) => v.dim(),
        (None, Some(g)) => g.cols(),
        (None, None) => 0,
    };
    spin_from(field, Subspace::zero(ambient), seeds, generators)
}

/// Like [`spin`], but starting from an already generator-closed subspace.
/// Used to spin inside a quotient.
pub fn spin_from<F: Field>(
    field: &F,
    start: Subspace<F::Elem>,
    seeds: &[SparseVec<F::Elem>],
    generators: &[SparseMatrix<F::Elem>],
) -> Result<Subspace<F::Elem>> {
    let ambient = start.ambient_dim();
    for g in generators {
        if g.rows() != ambient || g.cols() != ambient {
            return Err(Error::DimensionMismatch { expected: ambient, found: g.cols() });
        }
    }
    let mut span = start;
    let mut queue: VecDeque<SparseVec<F::Elem>> = seeds.iter().cloned().collect();
    while let Some(v) = queue.pop_front() {
        if let Some(row) = span.insert(field, &v)? {
            for g in generators {
                let image = g.apply(field, &row)?;
                if !image.is_zero() {
                    queue.push_back(image);
                }
            }
        }
    }
    Ok(span)
}

/// Image (in the codomain) and kernel (in the domain) of a linear map.
pub fn map_image_kernel<F: Field>(
    field: &F,
    map: &SparseMatrix<F::Elem>,
) -> Result<(Subspace<F::Elem>, Subspace<F::Elem>)> {
    let image = rref_span(field, map.columns(), map.rows())?;

    let row_space = rref_span(field, &map.row_vectors(), map.cols())?;
    let pivots = row_space.pivots();
    let mut kernel_vectors = Vec::new();
    let mut is_pivot = vec![false; map.cols()];
    for p in &pivots {
        is_pivot[*p] = true;
    }
    for free in (0..map.cols()).filter(|j| !is_pivot[*j]) {
        let mut entries = vec![(free, field.one())];
        for (p, row) in row_space.rows.iter() {
            if let Some(c) = row.get(free) {
                entries.push((*p, field.neg(c)));
            }
        }
        kernel_vectors.push(SparseVec::from_entries(field, map.cols(), entries)?);
    }
    let kernel = rref_span(field, &kernel_vectors, map.cols())?;
    Ok((image, kernel))
}
