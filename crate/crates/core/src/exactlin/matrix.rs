//! Sparse exact matrices and vectors.

use std::collections::BTreeMap;

use super::field::Field;
use crate::error::{Error, Result};

/// Sparse vector: strictly increasing indices, no stored zeros.
pub type SVec<E> = Vec<(usize, E)>;

/// Builds a sparse vector from a dense slice.
pub fn sparse_from_dense<F: Field>(field: &F, dense: &[F::Elem]) -> SVec<F::Elem> {
    dense
        .iter()
        .enumerate()
        .filter(|(_, e)| !field.is_zero(e))
        .map(|(i, e)| (i, e.clone()))
        .collect()
}

pub fn dense_from_sparse<F: Field>(field: &F, dim: usize, v: &[(usize, F::Elem)]) -> Vec<F::Elem> {
    let mut out = vec![field.zero(); dim];
    for (i, e) in v {
        out[*i] = e.clone();
    }
    out
}

/// Sums possibly unsorted (index, value) pairs into a canonical sparse vector.
pub fn sparse_collect<F: Field>(
    field: &F,
    entries: impl IntoIterator<Item = (usize, F::Elem)>,
) -> SVec<F::Elem> {
    let mut acc: BTreeMap<usize, F::Elem> = BTreeMap::new();
    for (i, e) in entries {
        if field.is_zero(&e) {
            continue;
        }
        match acc.get_mut(&i) {
            Some(x) => *x = field.add(x, &e),
            None => {
                acc.insert(i, e);
            }
        }
    }
    acc.into_iter().filter(|(_, e)| !field.is_zero(e)).collect()
}

/// `a*x + b*y`
pub fn sparse_lincomb<F: Field>(
    field: &F,
    a: &F::Elem,
    x: &[(usize, F::Elem)],
    b: &F::Elem,
    y: &[(usize, F::Elem)],
) -> SVec<F::Elem> {
    let mut out = Vec::with_capacity(x.len() + y.len());
    let (mut i, mut j) = (0, 0);
    while i < x.len() || j < y.len() {
        let (idx, val) = if j >= y.len() || (i < x.len() && x[i].0 < y[j].0) {
            i += 1;
            (x[i - 1].0, field.mul(a, &x[i - 1].1))
        } else if i >= x.len() || y[j].0 < x[i].0 {
            j += 1;
            (y[j - 1].0, field.mul(b, &y[j - 1].1))
        } else {
            i += 1;
            j += 1;
            (
                x[i - 1].0,
                field.add(&field.mul(a, &x[i - 1].1), &field.mul(b, &y[j - 1].1)),
            )
        };
        if !field.is_zero(&val) {
            out.push((idx, val));
        }
    }
    out
}

pub fn sparse_add<F: Field>(field: &F, x: &[(usize, F::Elem)], y: &[(usize, F::Elem)]) -> SVec<F::Elem> {
    sparse_lincomb(field, &field.one(), x, &field.one(), y)
}

pub fn sparse_sub<F: Field>(field: &F, x: &[(usize, F::Elem)], y: &[(usize, F::Elem)]) -> SVec<F::Elem> {
    sparse_lincomb(field, &field.one(), x, &field.from_i64(-1), y)
}

pub fn sparse_scale<F: Field>(field: &F, a: &F::Elem, x: &[(usize, F::Elem)]) -> SVec<F::Elem> {
    if field.is_zero(a) {
        return Vec::new();
    }
    x.iter().map(|(i, e)| (*i, field.mul(a, e))).collect()
}

/// Sparse matrix stored by rows.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Matrix<F: Field> {
    field: F,
    rows: usize,
    cols: usize,
    data: Vec<SVec<F::Elem>>,
}

impl<F: Field> Matrix<F> {
    pub fn zeros(field: &F, rows: usize, cols: usize) -> Self {
        Matrix { field: field.clone(), rows, cols, data: vec![Vec::new(); rows] }
    }

    pub fn identity(field: &F, n: usize) -> Self {
        let data = (0..n).map(|i| vec![(i, field.one())]).collect();
        Matrix { field: field.clone(), rows: n, cols: n, data }
    }

    /// Accumulates (row, col, value) triplets; repeated positions are summed.
    pub fn from_triplets(
        field: &F,
        rows: usize,
        cols: usize,
        triplets: impl IntoIterator<Item = (usize, usize, F::Elem)>,
    ) -> Self {
        let mut per_row: Vec<Vec<(usize, F::Elem)>> = vec![Vec::new(); rows];
        for (r, c, v) in triplets {
            assert!(r < rows && c < cols, "triplet ({r},{c}) out of range {rows}x{cols}");
            per_row[r].push((c, v));
        }
        let data = per_row.into_iter().map(|r| sparse_collect(field, r)).collect();
        Matrix { field: field.clone(), rows, cols, data }
    }

    /// Builds from sparse rows; rows are canonicalized.
    pub fn from_rows(field: &F, cols: usize, rows: Vec<SVec<F::Elem>>) -> Self {
        let data: Vec<_> = rows.into_iter().map(|r| sparse_collect(field, r)).collect();
        for r in &data {
            if let Some((c, _)) = r.last() {
                assert!(*c < cols, "column {c} out of range {cols}");
            }
        }
        Matrix { field: field.clone(), rows: data.len(), cols, data }
    }

    /// Builds from sparse columns.
    pub fn from_cols(field: &F, rows: usize, cols: Vec<SVec<F::Elem>>) -> Self {
        let n = cols.len();
        let trip = cols
            .into_iter()
            .enumerate()
            .flat_map(|(j, col)| col.into_iter().map(move |(i, e)| (i, j, e)));
        Self::from_triplets(field, rows, n, trip)
    }

    pub fn from_dense(field: &F, dense: &[Vec<F::Elem>]) -> Self {
        let cols = dense.first().map_or(0, |r| r.len());
        let data = dense
            .iter()
            .map(|r| {
                assert_eq!(r.len(), cols, "ragged dense matrix");
                sparse_from_dense(field, r)
            })
            .collect();
        Matrix { field: field.clone(), rows: dense.len(), cols, data }
    }

    pub fn from_i64(field: &F, dense: &[Vec<i64>]) -> Self {
        let d: Vec<Vec<F::Elem>> =
            dense.iter().map(|r| r.iter().map(|&x| field.from_i64(x)).collect()).collect();
        if dense.is_empty() {
            return Self::zeros(field, 0, 0);
        }
        Self::from_dense(field, &d)
    }

    pub fn field(&self) -> &F {
        &self.field
    }
    pub fn rows(&self) -> usize {
        self.rows
    }
    pub fn cols(&self) -> usize {
        self.cols
    }
    pub fn row(&self, i: usize) -> &[(usize, F::Elem)] {
        &self.data[i]
    }
    pub fn row_vecs(&self) -> &[SVec<F::Elem>] {
        &self.data
    }
    pub fn nnz(&self) -> usize {
        self.data.iter().map(|r| r.len()).sum()
    }

    pub fn get(&self, i: usize, j: usize) -> F::Elem {
        match self.data[i].binary_search_by_key(&j, |(c, _)| *c) {
            Ok(k) => self.data[i][k].1.clone(),
            Err(_) => self.field.zero(),
        }
    }

    pub fn set(&mut self, i: usize, j: usize, v: F::Elem) {
        let row = &mut self.data[i];
        match row.binary_search_by_key(&j, |(c, _)| *c) {
            Ok(k) => {
                if self.field.is_zero(&v) {
                    row.remove(k);
                } else {
                    row[k].1 = v;
                }
            }
            Err(k) => {
                if !self.field.is_zero(&v) {
                    row.insert(k, (j, v));
                }
            }
        }
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(|r| r.is_empty())
    }

    pub fn to_dense(&self) -> Vec<Vec<F::Elem>> {
        self.data.iter().map(|r| dense_from_sparse(&self.field, self.cols, r)).collect()
    }

    pub fn transpose(&self) -> Self {
        let mut cols: Vec<SVec<F::Elem>> = vec![Vec::new(); self.cols];
        for (i, r) in self.data.iter().enumerate() {
            for (j, e) in r {
                cols[*j].push((i, e.clone()));
            }
        }
        Matrix { field: self.field.clone(), rows: self.cols, cols: self.rows, data: cols }
    }

    /// Column `j` as a sparse vector.
    pub fn col(&self, j: usize) -> SVec<F::Elem> {
        self.data
            .iter()
            .enumerate()
            .filter_map(|(i, r)| {
                r.binary_search_by_key(&j, |(c, _)| *c).ok().map(|k| (i, r[k].1.clone()))
            })
            .collect()
    }

    /// Number of stored entries per column.
    pub fn col_counts(&self) -> Vec<usize> {
        let mut counts = vec![0; self.cols];
        for r in &self.data {
            for (j, _) in r {
                counts[*j] += 1;
            }
        }
        counts
    }

    /// `self * v`
    pub fn mul_vec(&self, v: &[(usize, F::Elem)]) -> SVec<F::Elem> {
        let mut dense = vec![self.field.zero(); self.cols];
        for (i, e) in v {
            dense[*i] = e.clone();
        }
        let mut out = Vec::new();
        for (i, r) in self.data.iter().enumerate() {
            let mut acc = self.field.zero();
            for (j, e) in r {
                if !self.field.is_zero(&dense[*j]) {
                    self.field.add_mul_assign(&mut acc, e, &dense[*j]);
                }
            }
            if !self.field.is_zero(&acc) {
                out.push((i, acc));
            }
        }
        out
    }

    /// Matrix product `self * other`.
    pub fn mul(&self, other: &Matrix<F>) -> Result<Matrix<F>> {
        if self.cols != other.rows {
            return Err(Error::ShapeMismatch(format!(
                "{}x{} times {}x{}",
                self.rows, self.cols, other.rows, other.cols
            )));
        }
        let f = &self.field;
        let mut acc = vec![f.zero(); other.cols];
        let mut touched: Vec<usize> = Vec::new();
        let mut mark = vec![false; other.cols];
        let mut data = Vec::with_capacity(self.rows);
        for r in &self.data {
            for (k, a) in r {
                for (j, b) in &other.data[*k] {
                    if !mark[*j] {
                        mark[*j] = true;
                        touched.push(*j);
                    }
                    f.add_mul_assign(&mut acc[*j], a, b);
                }
            }
            touched.sort_unstable();
            let mut row = Vec::with_capacity(touched.len());
            for &j in &touched {
                let v = std::mem::replace(&mut acc[j], f.zero());
                mark[j] = false;
                if !f.is_zero(&v) {
                    row.push((j, v));
                }
            }
            touched.clear();
            data.push(row);
        }
        Ok(Matrix { field: f.clone(), rows: self.rows, cols: other.cols, data })
    }

    pub fn add(&self, other: &Matrix<F>) -> Result<Matrix<F>> {
        self.combine(&self.field.one(), other, &self.field.one())
    }

    pub fn sub(&self, other: &Matrix<F>) -> Result<Matrix<F>> {
        self.combine(&self.field.one(), other, &self.field.from_i64(-1))
    }

    /// `a*self + b*other`
    pub fn combine(&self, a: &F::Elem, other: &Matrix<F>, b: &F::Elem) -> Result<Matrix<F>> {
        if self.rows != other.rows || self.cols != other.cols {
            return Err(Error::ShapeMismatch(format!(
                "{}x{} vs {}x{}",
                self.rows, self.cols, other.rows, other.cols
            )));
        }
        let data = self
            .data
            .iter()
            .zip(&other.data)
            .map(|(x, y)| sparse_lincomb(&self.field, a, x, b, y))
            .collect();
        Ok(Matrix { field: self.field.clone(), rows: self.rows, cols: self.cols, data })
    }

    pub fn scale(&self, a: &F::Elem) -> Matrix<F> {
        let data = self.data.iter().map(|r| sparse_scale(&self.field, a, r)).collect();
        Matrix { field: self.field.clone(), rows: self.rows, cols: self.cols, data }
    }

    pub fn neg(&self) -> Matrix<F> {
        self.scale(&self.field.from_i64(-1))
    }

    /// Assembles a block matrix. `blocks` lists (block row, block col, matrix).
    pub fn from_blocks(
        field: &F,
        row_dims: &[usize],
        col_dims: &[usize],
        blocks: &[(usize, usize, Matrix<F>)],
    ) -> Result<Matrix<F>> {
        let row_off: Vec<usize> = prefix_sums(row_dims);
        let col_off: Vec<usize> = prefix_sums(col_dims);
        let rows = *row_off.last().unwrap_or(&0);
        let cols = *col_off.last().unwrap_or(&0);
        let mut trip = Vec::new();
        for (bi, bj, m) in blocks {
            if m.rows != row_dims[*bi] || m.cols != col_dims[*bj] {
                return Err(Error::ShapeMismatch(format!(
                    "block ({bi},{bj}) is {}x{}, expected {}x{}",
                    m.rows, m.cols, row_dims[*bi], col_dims[*bj]
                )));
            }
            for (i, r) in m.data.iter().enumerate() {
                for (j, e) in r {
                    trip.push((row_off[*bi] + i, col_off[*bj] + j, e.clone()));
                }
            }
        }
        Ok(Matrix::from_triplets(field, rows, cols, trip))
    }

    /// Extracts the submatrix on row range × column range.
    pub fn block(&self, rows: std::ops::Range<usize>, cols: std::ops::Range<usize>) -> Matrix<F> {
        let data = self.data[rows.clone()]
            .iter()
            .map(|r| {
                r.iter()
                    .filter(|(j, _)| cols.contains(j))
                    .map(|(j, e)| (j - cols.start, e.clone()))
                    .collect()
            })
            .collect();
        Matrix { field: self.field.clone(), rows: rows.len(), cols: cols.len(), data }
    }

    /// Renders entries with the field's formatter, one row per line.
    pub fn pretty(&self) -> String {
        self.to_dense()
            .iter()
            .map(|r| r.iter().map(|e| self.field.format_elem(e)).collect::<Vec<_>>().join(" "))
            .collect::<Vec<_>>()
            .join("\n")
    }
}

pub fn prefix_sums(dims: &[usize]) -> Vec<usize> {
    let mut out = Vec::with_capacity(dims.len() + 1);
    let mut s = 0;
    out.push(0);
    for d in dims {
        s += d;
        out.push(s);
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactlin::field::{PrimeField, Rationals};

    #[test]
    fn mul_and_transpose() {
        let q = Rationals;
        let a = Matrix::from_i64(&q, &[vec![1, 2], vec![0, 1]]);
        let b = Matrix::from_i64(&q, &[vec![1, 0], vec![3, 1]]);
        let c = a.mul(&b).unwrap();
        assert_eq!(c, Matrix::from_i64(&q, &[vec![7, 2], vec![3, 1]]));
        assert_eq!(c.transpose().transpose(), c);
        let lhs = c.transpose();
        let rhs = b.transpose().mul(&a.transpose()).unwrap();
        assert_eq!(lhs, rhs);
    }

    #[test]
    fn triplets_cancel() {
        let f = PrimeField::new(2).unwrap();
        let m = Matrix::from_triplets(&f, 2, 2, vec![(0, 0, 1), (0, 0, 1), (1, 1, 1)]);
        assert_eq!(m.nnz(), 1);
        assert_eq!(m.get(0, 0), 0);
    }

    #[test]
    fn blocks_roundtrip() {
        let q = Rationals;
        let a = Matrix::from_i64(&q, &[vec![1, 2]]);
        let b = Matrix::identity(&q, 1);
        let m = Matrix::from_blocks(&q, &[1, 1], &[2, 1], &[(0, 0, a.clone()), (1, 1, b.clone())]).unwrap();
        assert_eq!(m.block(0..1, 0..2), a);
        assert_eq!(m.block(1..2, 2..3), b);
        assert!(m.block(0..1, 2..3).is_zero());
    }
}
