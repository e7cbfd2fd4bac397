//! Finite-dimensional algebras with a dot product and a bracket, given by structure constants.

mod constructions;
mod identities;
mod io;

pub use constructions::{
    center, commutator_bracket, derivation_bracket, ideal_closure, is_square_zero_derivation,
    poissonification, quotient, underlying, DerivationSide, Underlying,
};
pub use identities::{
    check_derived_identities, check_identity, classify, identity_witness, DerivedIdentityEntry,
    DerivedIdentityReport, IdentityTag, VarietyTag,
};
pub(crate) use identities::defect;
pub use io::{algebra_from_json, algebra_to_json, field_spec_from_json, field_spec_to_json};

use crate::error::{Error, Result};
use crate::exactlin::{sparse_collect, Field, Matrix, SVec};

/// A vector space with two bilinear products given on a basis.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BiAlgebra<F: Field> {
    field: F,
    names: Vec<String>,
    dot: Vec<SVec<F::Elem>>,
    bracket: Vec<SVec<F::Elem>>,
}

impl<F: Field> BiAlgebra<F> {
    /// All products zero; basis named `e1, e2, ...`.
    pub fn zero(field: &F, dim: usize) -> Self {
        Self::zero_named(field, (1..=dim).map(|i| format!("e{i}")).collect())
    }

    pub fn zero_named(field: &F, names: Vec<String>) -> Self {
        let n = names.len();
        BiAlgebra { field: field.clone(), names, dot: vec![Vec::new(); n * n], bracket: vec![Vec::new(); n * n] }
    }

    /// From dense structure constants `dot[i][j][k]`, `bracket[i][j][k]`.
    pub fn from_constants(
        field: &F,
        names: Vec<String>,
        dot: &[Vec<Vec<F::Elem>>],
        bracket: &[Vec<Vec<F::Elem>>],
    ) -> Result<Self> {
        let n = names.len();
        let mut a = Self::zero_named(field, names);
        for (which, tensor) in [(0, dot), (1, bracket)] {
            if tensor.len() != n || tensor.iter().any(|r| r.len() != n || r.iter().any(|c| c.len() != n)) {
                return Err(Error::ShapeMismatch(format!("structure constants must be {n}x{n}x{n}")));
            }
            for i in 0..n {
                for j in 0..n {
                    let v = crate::exactlin::sparse_from_dense(field, &tensor[i][j]);
                    if which == 0 {
                        a.dot[i * n + j] = v;
                    } else {
                        a.bracket[i * n + j] = v;
                    }
                }
            }
        }
        Ok(a)
    }

    /// Small-integer constructor used by tests and examples: lists of (i, j, k, c).
    pub fn from_entries(
        field: &F,
        dim: usize,
        dot: &[(usize, usize, usize, i64)],
        bracket: &[(usize, usize, usize, i64)],
    ) -> Self {
        let mut a = Self::zero(field, dim);
        for &(i, j, k, c) in dot {
            let mut v = a.dot_basis(i, j).to_vec();
            v.push((k, field.from_i64(c)));
            a.set_dot(i, j, v);
        }
        for &(i, j, k, c) in bracket {
            let mut v = a.bracket_basis(i, j).to_vec();
            v.push((k, field.from_i64(c)));
            a.set_bracket(i, j, v);
        }
        a
    }

    pub fn with_names(mut self, names: Vec<String>) -> Self {
        assert_eq!(names.len(), self.dim());
        self.names = names;
        self
    }

    pub fn field(&self) -> &F {
        &self.field
    }
    pub fn dim(&self) -> usize {
        self.names.len()
    }
    pub fn basis_names(&self) -> &[String] {
        &self.names
    }

    pub fn dot_basis(&self, i: usize, j: usize) -> &[(usize, F::Elem)] {
        &self.dot[i * self.dim() + j]
    }
    pub fn bracket_basis(&self, i: usize, j: usize) -> &[(usize, F::Elem)] {
        &self.bracket[i * self.dim() + j]
    }
    pub fn set_dot(&mut self, i: usize, j: usize, v: SVec<F::Elem>) {
        let n = self.dim();
        self.dot[i * n + j] = sparse_collect(&self.field, v);
    }
    pub fn set_bracket(&mut self, i: usize, j: usize, v: SVec<F::Elem>) {
        let n = self.dim();
        self.bracket[i * n + j] = sparse_collect(&self.field, v);
    }

    /// Structure constant `d[i][j][k]`.
    pub fn dot_const(&self, i: usize, j: usize, k: usize) -> F::Elem {
        lookup(&self.field, self.dot_basis(i, j), k)
    }
    pub fn bracket_const(&self, i: usize, j: usize, k: usize) -> F::Elem {
        lookup(&self.field, self.bracket_basis(i, j), k)
    }

    pub fn basis_vec(&self, i: usize) -> SVec<F::Elem> {
        vec![(i, self.field.one())]
    }

    fn product(&self, table: &[SVec<F::Elem>], u: &[(usize, F::Elem)], v: &[(usize, F::Elem)]) -> SVec<F::Elem> {
        let n = self.dim();
        let f = &self.field;
        let mut acc = vec![f.zero(); n];
        let mut any = false;
        for (i, a) in u {
            for (j, b) in v {
                let ab = f.mul(a, b);
                for (k, c) in &table[i * n + j] {
                    f.add_mul_assign(&mut acc[*k], &ab, c);
                    any = true;
                }
            }
        }
        if !any {
            return Vec::new();
        }
        acc.into_iter().enumerate().filter(|(_, e)| !f.is_zero(e)).collect()
    }

    /// `u · v` for coordinate vectors.
    pub fn dot(&self, u: &[(usize, F::Elem)], v: &[(usize, F::Elem)]) -> SVec<F::Elem> {
        self.product(&self.dot, u, v)
    }

    /// `[u, v]` for coordinate vectors.
    pub fn bracket(&self, u: &[(usize, F::Elem)], v: &[(usize, F::Elem)]) -> SVec<F::Elem> {
        self.product(&self.bracket, u, v)
    }

    pub fn has_zero_dot(&self) -> bool {
        self.dot.iter().all(|v| v.is_empty())
    }
    pub fn has_zero_bracket(&self) -> bool {
        self.bracket.iter().all(|v| v.is_empty())
    }

    /// Matrix of left multiplication `x ↦ e_i · x`.
    pub fn left_dot_matrix(&self, i: usize) -> Matrix<F> {
        let n = self.dim();
        Matrix::from_cols(&self.field, n, (0..n).map(|j| self.dot_basis(i, j).to_vec()).collect())
    }
    pub fn right_dot_matrix(&self, i: usize) -> Matrix<F> {
        let n = self.dim();
        Matrix::from_cols(&self.field, n, (0..n).map(|j| self.dot_basis(j, i).to_vec()).collect())
    }
    pub fn left_bracket_matrix(&self, i: usize) -> Matrix<F> {
        let n = self.dim();
        Matrix::from_cols(&self.field, n, (0..n).map(|j| self.bracket_basis(i, j).to_vec()).collect())
    }
    pub fn right_bracket_matrix(&self, i: usize) -> Matrix<F> {
        let n = self.dim();
        Matrix::from_cols(&self.field, n, (0..n).map(|j| self.bracket_basis(j, i).to_vec()).collect())
    }

    /// Re-expresses the algebra in a new basis: column `j` of `change` is the
    /// `j`-th new basis vector in old coordinates. `change` must be invertible.
    pub fn change_basis(&self, change: &Matrix<F>) -> Result<Self> {
        let n = self.dim();
        if change.rows() != n || change.cols() != n {
            return Err(Error::ShapeMismatch("change of basis must be square".into()));
        }
        let inv = invert(change).ok_or_else(|| Error::ShapeMismatch("change of basis is singular".into()))?;
        let cols: Vec<SVec<F::Elem>> = (0..n).map(|j| change.col(j)).collect();
        let mut out = Self::zero_named(&self.field, self.names.clone());
        for i in 0..n {
            for j in 0..n {
                out.set_dot(i, j, inv.mul_vec(&self.dot(&cols[i], &cols[j])));
                out.set_bracket(i, j, inv.mul_vec(&self.bracket(&cols[i], &cols[j])));
            }
        }
        Ok(out)
    }

    /// Direct product of two algebras; basis of `self` first.
    pub fn direct_sum(&self, other: &BiAlgebra<F>) -> Self {
        let (n, m) = (self.dim(), other.dim());
        let mut names = self.names.clone();
        names.extend(other.names.iter().map(|s| {
            if self.names.contains(s) { format!("{s}'") } else { s.clone() }
        }));
        let mut out = Self::zero_named(&self.field, names);
        let shift = |v: &[(usize, F::Elem)]| v.iter().map(|(k, c)| (k + n, c.clone())).collect::<SVec<_>>();
        for i in 0..n {
            for j in 0..n {
                out.set_dot(i, j, self.dot_basis(i, j).to_vec());
                out.set_bracket(i, j, self.bracket_basis(i, j).to_vec());
            }
        }
        for i in 0..m {
            for j in 0..m {
                out.set_dot(n + i, n + j, shift(other.dot_basis(i, j)));
                out.set_bracket(n + i, n + j, shift(other.bracket_basis(i, j)));
            }
        }
        out
    }
}

fn lookup<F: Field>(field: &F, v: &[(usize, F::Elem)], k: usize) -> F::Elem {
    match v.binary_search_by_key(&k, |(i, _)| *i) {
        Ok(p) => v[p].1.clone(),
        Err(_) => field.zero(),
    }
}

/// Inverse of a square matrix, if it exists.
pub fn invert<F: Field>(m: &Matrix<F>) -> Option<Matrix<F>> {
    let n = m.rows();
    if m.cols() != n {
        return None;
    }
    let f = m.field();
    let mut cols = Vec::with_capacity(n);
    for j in 0..n {
        let x = crate::exactlin::solve(m, &[(j, f.one())], crate::exactlin::PivotRule::LowestIndex)?;
        cols.push(x);
    }
    Some(Matrix::from_cols(f, n, cols))
}

/// A linear map between coordinate spaces; `matrix` is `target_dim × source_dim`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LinearMap<F: Field> {
    pub source_dim: usize,
    pub target_dim: usize,
    pub matrix: Matrix<F>,
}

impl<F: Field> LinearMap<F> {
    pub fn new(matrix: Matrix<F>) -> Self {
        LinearMap { source_dim: matrix.cols(), target_dim: matrix.rows(), matrix }
    }
    pub fn zero(field: &F, source_dim: usize, target_dim: usize) -> Self {
        Self::new(Matrix::zeros(field, target_dim, source_dim))
    }
    pub fn identity(field: &F, n: usize) -> Self {
        Self::new(Matrix::identity(field, n))
    }
    pub fn apply(&self, v: &[(usize, F::Elem)]) -> SVec<F::Elem> {
        self.matrix.mul_vec(v)
    }
    /// `self ∘ other`
    pub fn compose(&self, other: &LinearMap<F>) -> Result<LinearMap<F>> {
        Ok(Self::new(self.matrix.mul(&other.matrix)?))
    }
}

#[cfg(test)]
pub(crate) mod samples {
    //! Small named algebras shared by unit tests.
    use super::*;

    /// Upper-triangular matrix units E11, E12, E22 with matrix product and zero bracket.
    pub fn upper_triangular<F: Field>(f: &F) -> BiAlgebra<F> {
        // E11 E11 = E11, E11 E12 = E12, E12 E22 = E12, E22 E22 = E22
        BiAlgebra::from_entries(f, 3, &[(0, 0, 0, 1), (0, 1, 1, 1), (1, 2, 1, 1), (2, 2, 2, 1)], &[])
            .with_names(vec!["E11".into(), "E12".into(), "E22".into()])
    }

    /// Dot-zero Leibniz algebra with [x,x] = y.
    pub fn leibniz_xx<F: Field>(f: &F) -> BiAlgebra<F> {
        BiAlgebra::from_entries(f, 2, &[], &[(0, 0, 1, 1)]).with_names(vec!["x".into(), "y".into()])
    }

    /// One-dimensional algebra e·e = e.
    pub fn idempotent<F: Field>(f: &F) -> BiAlgebra<F> {
        BiAlgebra::from_entries(f, 1, &[(0, 0, 0, 1)], &[]).with_names(vec!["e".into()])
    }

    /// Dual numbers span{1, ε}.
    pub fn dual_numbers<F: Field>(f: &F) -> BiAlgebra<F> {
        BiAlgebra::from_entries(f, 2, &[(0, 0, 0, 1), (0, 1, 1, 1), (1, 0, 1, 1)], &[])
            .with_names(vec!["1".into(), "eps".into()])
    }
}

#[cfg(test)]
mod tests {
    use super::samples::*;
    use super::*;
    use crate::exactlin::Rationals;

    #[test]
    fn products_match_constants() {
        let q = Rationals;
        let a = upper_triangular(&q);
        assert_eq!(a.dot(&a.basis_vec(0), &a.basis_vec(1)), a.basis_vec(1));
        assert!(a.dot(&a.basis_vec(1), &a.basis_vec(0)).is_empty());
        assert_eq!(a.dot_const(1, 2, 1), q.one());
    }

    #[test]
    fn change_basis_roundtrip() {
        let q = Rationals;
        let a = upper_triangular(&q);
        let c = Matrix::from_i64(&q, &[vec![1, 1, 0], vec![0, 1, 2], vec![0, 0, 1]]);
        let b = a.change_basis(&c).unwrap();
        let back = b.change_basis(&invert(&c).unwrap()).unwrap();
        assert_eq!(back, a);
    }
}
