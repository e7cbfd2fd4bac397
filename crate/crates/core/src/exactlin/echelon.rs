//! Incremental exact elimination: rank, kernels, solving, subspaces and quotients.

use super::field::Field;
use super::matrix::{dense_from_sparse, Matrix, SVec};
use crate::error::{Error, Result};

const NONE: usize = usize::MAX;

/// Column order used to choose pivots.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Default)]
pub enum PivotRule {
    /// Fewest stored entries first, ties by lowest index.
    #[default]
    ShortestColumn,
    LowestIndex,
    HighestIndex,
}

impl PivotRule {
    /// Elimination order of columns given per-column entry counts.
    pub fn order(self, dim: usize, counts: Option<&[usize]>) -> Vec<usize> {
        let mut order: Vec<usize> = (0..dim).collect();
        match self {
            PivotRule::ShortestColumn => {
                if let Some(c) = counts {
                    order.sort_by_key(|&j| (c[j], j));
                }
            }
            PivotRule::LowestIndex => {}
            PivotRule::HighestIndex => order.reverse(),
        }
        order
    }
}

fn counts_of<E>(dim: usize, vecs: &[SVec<E>]) -> Vec<usize> {
    let mut c = vec![0; dim];
    for v in vecs {
        for (j, _) in v {
            c[*j] += 1;
        }
    }
    c
}

/// Outcome of inserting a vector into an [`Echelon`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Insert<E> {
    /// New row index.
    Independent(usize),
    /// The vector was dependent; with tracking, the dependency among inserted vectors.
    Dependent(Option<SVec<E>>),
}

/// Row echelon basis built by insertion. Each row has leading entry 1 at its pivot
/// (in elimination order) and zeros at earlier positions.
#[derive(Clone, Debug)]
pub struct Echelon<F: Field> {
    field: F,
    dim: usize,
    order: Vec<usize>,
    pos: Vec<usize>,
    row_of: Vec<usize>,
    rows: Vec<SVec<F::Elem>>,
    pivots: Vec<usize>,
    combos: Option<Vec<SVec<F::Elem>>>,
    inserted: usize,
}

impl<F: Field> Echelon<F> {
    pub fn new(field: &F, dim: usize, order: Vec<usize>, track: bool) -> Self {
        assert_eq!(order.len(), dim);
        let mut pos = vec![0; dim];
        for (p, &c) in order.iter().enumerate() {
            pos[c] = p;
        }
        Echelon {
            field: field.clone(),
            dim,
            order,
            pos,
            row_of: vec![NONE; dim],
            rows: Vec::new(),
            pivots: Vec::new(),
            combos: if track { Some(Vec::new()) } else { None },
            inserted: 0,
        }
    }

    /// Echelon whose column order follows `rule` applied to the given vectors.
    pub fn for_vectors(field: &F, dim: usize, rule: PivotRule, vecs: &[SVec<F::Elem>], track: bool) -> Self {
        let counts = if rule == PivotRule::ShortestColumn { Some(counts_of(dim, vecs)) } else { None };
        Self::new(field, dim, rule.order(dim, counts.as_deref()), track)
    }

    pub fn dim(&self) -> usize {
        self.dim
    }
    pub fn rank(&self) -> usize {
        self.rows.len()
    }
    pub fn rows(&self) -> &[SVec<F::Elem>] {
        &self.rows
    }
    pub fn pivots(&self) -> &[usize] {
        &self.pivots
    }
    /// Expression of each row in terms of inserted vectors (tracking only).
    pub fn combos(&self) -> Option<&[SVec<F::Elem>]> {
        self.combos.as_deref()
    }
    pub fn inserted(&self) -> usize {
        self.inserted
    }

    fn first_pos(&self, v: &[(usize, F::Elem)]) -> usize {
        v.iter().map(|(j, _)| self.pos[*j]).min().unwrap_or(self.dim)
    }

    pub fn insert(&mut self, v: &[(usize, F::Elem)]) -> Insert<F::Elem> {
        let f = self.field.clone();
        let t = self.inserted;
        self.inserted += 1;
        let mut acc = dense_from_sparse(&f, self.dim, v);
        let mut comb: Option<Vec<F::Elem>> = self.combos.as_ref().map(|_| {
            let mut c = vec![f.zero(); t + 1];
            c[t] = f.one();
            c
        });
        let mut lead = NONE;
        for p in self.first_pos(v)..self.dim {
            let c = self.order[p];
            if f.is_zero(&acc[c]) {
                continue;
            }
            let r = self.row_of[c];
            if r == NONE {
                lead = c;
                break;
            }
            let coef = acc[c].clone();
            let neg = f.neg(&coef);
            for (j, e) in &self.rows[r] {
                f.add_mul_assign(&mut acc[*j], &neg, e);
            }
            if let (Some(cb), Some(combos)) = (comb.as_mut(), self.combos.as_ref()) {
                for (j, e) in &combos[r] {
                    f.add_mul_assign(&mut cb[*j], &neg, e);
                }
            }
        }
        let sparse_comb = |cb: Vec<F::Elem>, scale: &F::Elem| -> SVec<F::Elem> {
            cb.into_iter()
                .enumerate()
                .filter(|(_, e)| !f.is_zero(e))
                .map(|(j, e)| (j, f.mul(&e, scale)))
                .collect()
        };
        if lead == NONE {
            return Insert::Dependent(comb.map(|cb| sparse_comb(cb, &f.one())));
        }
        let inv = f.inv(&acc[lead]).expect("nonzero pivot");
        let row: SVec<F::Elem> = acc
            .into_iter()
            .enumerate()
            .filter(|(_, e)| !f.is_zero(e))
            .map(|(j, e)| (j, f.mul(&e, &inv)))
            .collect();
        let idx = self.rows.len();
        self.row_of[lead] = idx;
        self.pivots.push(lead);
        self.rows.push(row);
        if let (Some(cb), Some(combos)) = (comb, self.combos.as_mut()) {
            combos.push(sparse_comb(cb, &inv));
        }
        Insert::Independent(idx)
    }

    /// Full reduction: `v = Σ coef_r row_r + residual`, residual zero at every pivot.
    pub fn reduce(&self, v: &[(usize, F::Elem)]) -> (Vec<(usize, F::Elem)>, SVec<F::Elem>) {
        let f = &self.field;
        let mut acc = dense_from_sparse(f, self.dim, v);
        let mut coefs = Vec::new();
        for p in self.first_pos(v)..self.dim {
            let c = self.order[p];
            if f.is_zero(&acc[c]) {
                continue;
            }
            let r = self.row_of[c];
            if r == NONE {
                continue;
            }
            let coef = acc[c].clone();
            let neg = f.neg(&coef);
            for (j, e) in &self.rows[r] {
                f.add_mul_assign(&mut acc[*j], &neg, e);
            }
            coefs.push((r, coef));
        }
        coefs.sort_by_key(|(r, _)| *r);
        let residual =
            acc.into_iter().enumerate().filter(|(_, e)| !f.is_zero(e)).collect::<SVec<F::Elem>>();
        (coefs, residual)
    }

    pub fn contains(&self, v: &[(usize, F::Elem)]) -> bool {
        self.reduce(v).1.is_empty()
    }

    /// Rows in reduced form: each row is zero at every other pivot column.
    pub fn reduced_rows(&self) -> Vec<SVec<F::Elem>> {
        let f = &self.field;
        self.rows
            .iter()
            .zip(&self.pivots)
            .map(|(row, &piv)| {
                let tail: SVec<F::Elem> = row.iter().filter(|(j, _)| *j != piv).cloned().collect();
                let (_, mut res) = self.reduce(&tail);
                let k = res.binary_search_by_key(&piv, |(j, _)| *j).unwrap_err();
                res.insert(k, (piv, f.one()));
                res
            })
            .collect()
    }
}

/// Rank with the default pivot rule.
pub fn rank<F: Field>(m: &Matrix<F>) -> usize {
    rank_with(m, PivotRule::default())
}

pub fn rank_with<F: Field>(m: &Matrix<F>, rule: PivotRule) -> usize {
    let counts = m.col_counts();
    let mut e = Echelon::new(m.field(), m.cols(), rule.order(m.cols(), Some(&counts)), false);
    for r in m.row_vecs() {
        if e.rank() == m.cols() {
            break;
        }
        e.insert(r);
    }
    e.rank()
}

/// Null space of `x ↦ m x`.
pub fn kernel<F: Field>(m: &Matrix<F>) -> Subspace<F> {
    kernel_with(m, PivotRule::default())
}

pub fn kernel_with<F: Field>(m: &Matrix<F>, rule: PivotRule) -> Subspace<F> {
    let f = m.field();
    let counts = m.col_counts();
    let mut e = Echelon::new(f, m.cols(), rule.order(m.cols(), Some(&counts)), false);
    for r in m.row_vecs() {
        e.insert(r);
    }
    let rref = e.reduced_rows();
    let mut is_pivot = vec![false; m.cols()];
    for &p in e.pivots() {
        is_pivot[p] = true;
    }
    // column j of the reduced rows, for free j
    let mut col_entries: Vec<Vec<(usize, F::Elem)>> = vec![Vec::new(); m.cols()];
    for (row, &piv) in rref.iter().zip(e.pivots()) {
        for (j, v) in row {
            if !is_pivot[*j] {
                col_entries[*j].push((piv, f.neg(v)));
            }
        }
    }
    let basis = (0..m.cols())
        .filter(|&j| !is_pivot[j])
        .map(|j| {
            let mut v = std::mem::take(&mut col_entries[j]);
            v.push((j, f.one()));
            v.sort_by_key(|(i, _)| *i);
            v
        })
        .collect();
    Subspace::from_independent(f, m.cols(), basis)
}

/// Column space of `m`.
pub fn image<F: Field>(m: &Matrix<F>) -> Subspace<F> {
    let t = m.transpose();
    Subspace::span(m.field(), m.rows(), t.row_vecs().to_vec())
}

/// Some `x` with `m x = b`, or `None`.
pub fn solve<F: Field>(m: &Matrix<F>, b: &[(usize, F::Elem)], rule: PivotRule) -> Option<SVec<F::Elem>> {
    Solver::new(m, rule).solve(b)
}

/// Column echelon of a fixed matrix, reusable across right-hand sides.
#[derive(Clone, Debug)]
pub struct Solver<F: Field> {
    ech: Echelon<F>,
    cols: usize,
}

impl<F: Field> Solver<F> {
    pub fn new(m: &Matrix<F>, rule: PivotRule) -> Self {
        let t = m.transpose();
        let mut ech = Echelon::for_vectors(m.field(), m.rows(), rule, t.row_vecs(), true);
        for c in t.row_vecs() {
            ech.insert(c);
        }
        Solver { ech, cols: m.cols() }
    }

    pub fn rank(&self) -> usize {
        self.ech.rank()
    }

    pub fn solve(&self, b: &[(usize, F::Elem)]) -> Option<SVec<F::Elem>> {
        let f = &self.ech.field;
        let (coefs, residual) = self.ech.reduce(b);
        if !residual.is_empty() {
            return None;
        }
        let combos = self.ech.combos().expect("tracking");
        let mut acc = vec![f.zero(); self.cols];
        for (r, c) in coefs {
            for (j, v) in &combos[r] {
                f.add_mul_assign(&mut acc[*j], &c, v);
            }
        }
        Some(acc.into_iter().enumerate().filter(|(_, e)| !f.is_zero(e)).collect())
    }
}

/// A linear subspace of `F^ambient` with an independent basis.
#[derive(Clone, Debug)]
pub struct Subspace<F: Field> {
    ambient: usize,
    basis: Vec<SVec<F::Elem>>,
    ech: Echelon<F>,
}

impl<F: Field> Subspace<F> {
    pub fn zero(field: &F, ambient: usize) -> Self {
        Subspace { ambient, basis: Vec::new(), ech: Echelon::new(field, ambient, (0..ambient).collect(), false) }
    }

    pub fn full(field: &F, ambient: usize) -> Self {
        let basis = (0..ambient).map(|i| vec![(i, field.one())]).collect();
        Self::from_independent(field, ambient, basis)
    }

    /// Span of arbitrary vectors; the basis keeps the independent inputs in order.
    pub fn span(field: &F, ambient: usize, vecs: Vec<SVec<F::Elem>>) -> Self {
        let mut ech = Echelon::for_vectors(field, ambient, PivotRule::default(), &vecs, false);
        let mut basis = Vec::new();
        for v in vecs {
            if let Insert::Independent(_) = ech.insert(&v) {
                basis.push(v);
            }
        }
        Subspace { ambient, basis, ech }
    }

    fn from_independent(field: &F, ambient: usize, basis: Vec<SVec<F::Elem>>) -> Self {
        let mut ech = Echelon::for_vectors(field, ambient, PivotRule::default(), &basis, false);
        for v in &basis {
            let ok = matches!(ech.insert(v), Insert::Independent(_));
            debug_assert!(ok, "basis not independent");
        }
        Subspace { ambient, basis, ech }
    }

    pub fn ambient_dim(&self) -> usize {
        self.ambient
    }
    pub fn dim(&self) -> usize {
        self.basis.len()
    }
    pub fn basis(&self) -> &[SVec<F::Elem>] {
        &self.basis
    }
    pub fn contains(&self, v: &[(usize, F::Elem)]) -> bool {
        self.ech.contains(v)
    }
    pub fn is_subspace_of(&self, other: &Subspace<F>) -> bool {
        self.ambient == other.ambient && self.basis.iter().all(|v| other.contains(v))
    }
    pub fn same_as(&self, other: &Subspace<F>) -> bool {
        self.dim() == other.dim() && self.is_subspace_of(other)
    }
    /// Sum of two subspaces.
    pub fn join(&self, other: &Subspace<F>) -> Subspace<F> {
        let mut v = self.basis.clone();
        v.extend(other.basis.iter().cloned());
        Subspace::span(&self.ech.field, self.ambient, v)
    }
    /// Basis vectors as the columns of an `ambient × dim` matrix.
    pub fn as_matrix(&self) -> Matrix<F> {
        Matrix::from_cols(&self.ech.field, self.ambient, self.basis.clone())
    }
}

/// `dim(outer) − dim(inner)`, after checking containment.
pub fn quotient_dim<F: Field>(inner: &Subspace<F>, outer: &Subspace<F>) -> Result<usize> {
    if !inner.is_subspace_of(outer) {
        return Err(Error::NotContained);
    }
    Ok(outer.dim() - inner.dim())
}

/// Coordinates on `sup / sub` with fixed representatives.
#[derive(Clone, Debug)]
pub struct QuotientSpace<F: Field> {
    field: F,
    ech: Echelon<F>,
    n_sub: usize,
}

impl<F: Field> QuotientSpace<F> {
    pub fn new(sub: &Subspace<F>, sup: &Subspace<F>, rule: PivotRule) -> Result<Self> {
        if !sub.is_subspace_of(sup) {
            return Err(Error::NotContained);
        }
        let field = sub.ech.field.clone();
        let mut all = sub.basis.clone();
        all.extend(sup.basis.iter().cloned());
        let mut ech = Echelon::for_vectors(&field, sup.ambient, rule, &all, false);
        for v in &sub.basis {
            ech.insert(v);
        }
        let n_sub = ech.rank();
        for v in &sup.basis {
            ech.insert(v);
        }
        Ok(QuotientSpace { field, ech, n_sub })
    }

    pub fn dim(&self) -> usize {
        self.ech.rank() - self.n_sub
    }

    /// Chosen representatives of a basis of the quotient.
    pub fn reps(&self) -> &[SVec<F::Elem>] {
        &self.ech.rows()[self.n_sub..]
    }

    /// Coordinates of the class of `v`; errors if `v` is outside `sup`.
    pub fn coords(&self, v: &[(usize, F::Elem)]) -> Result<Vec<F::Elem>> {
        let (coefs, residual) = self.ech.reduce(v);
        if !residual.is_empty() {
            return Err(Error::NotContained);
        }
        let mut out = vec![self.field.zero(); self.dim()];
        for (r, c) in coefs {
            if r >= self.n_sub {
                out[r - self.n_sub] = c;
            }
        }
        Ok(out)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactlin::field::{PrimeField, Rationals};

    #[test]
    fn spec_rank_examples() {
        let q = Rationals;
        assert_eq!(rank(&Matrix::identity(&q, 2)), 2);
        assert_eq!(rank(&Matrix::<Rationals>::zeros(&q, 3, 4)), 0);
        assert_eq!(rank(&Matrix::from_i64(&q, &[vec![1, 2], vec![2, 4]])), 1);
    }

    #[test]
    fn spec_kernel_examples() {
        let q = Rationals;
        assert_eq!(kernel(&Matrix::identity(&q, 3)).dim(), 0);
        assert_eq!(kernel(&Matrix::<Rationals>::zeros(&q, 3, 3)).dim(), 3);
        let f2 = PrimeField::new(2).unwrap();
        let k = kernel(&Matrix::from_i64(&f2, &[vec![1, 1]]));
        assert_eq!(k.dim(), 1);
        assert_eq!(k.basis()[0], vec![(0, 1), (1, 1)]);
    }

    #[test]
    fn spec_quotient_examples() {
        let q = Rationals;
        let full = Subspace::full(&q, 3);
        assert_eq!(quotient_dim(&full, &full).unwrap(), 0);
        assert_eq!(quotient_dim(&Subspace::zero(&q, 3), &full).unwrap(), 3);
        let line = Subspace::span(&q, 2, vec![vec![(0, q.one())]]);
        assert_eq!(quotient_dim(&line, &Subspace::full(&q, 2)).unwrap(), 1);
        let other = Subspace::span(&q, 2, vec![vec![(1, q.one())]]);
        assert_eq!(quotient_dim(&line, &other), Err(Error::NotContained));
    }

    #[test]
    fn solve_and_quotient_coords() {
        let q = Rationals;
        let m = Matrix::from_i64(&q, &[vec![1, 1, 0], vec![0, 1, 1]]);
        let b = vec![(0, q.from_i64(2)), (1, q.from_i64(3))];
        for rule in [PivotRule::ShortestColumn, PivotRule::LowestIndex, PivotRule::HighestIndex] {
            let x = solve(&m, &b, rule).unwrap();
            assert_eq!(m.mul_vec(&x), b);
        }
        let sub = Subspace::span(&q, 3, vec![vec![(0, q.one()), (1, q.one())]]);
        let sup = Subspace::full(&q, 3);
        let qs = QuotientSpace::new(&sub, &sup, PivotRule::LowestIndex).unwrap();
        assert_eq!(qs.dim(), 2);
        assert!(qs.coords(&[(0, q.one()), (1, q.one())]).unwrap().iter().all(|c| c == &q.zero()));
        for (i, r) in qs.reps().iter().enumerate() {
            let c = qs.coords(r).unwrap();
            for (j, x) in c.iter().enumerate() {
                assert_eq!(*x, if i == j { q.one() } else { q.zero() });
            }
        }
    }
}
