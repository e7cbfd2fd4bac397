//! Example families, center, ideals, quotients, Poissonification.

use super::identities::{check_identity, IdentityTag};
use super::{BiAlgebra, LinearMap};
use crate::error::{Error, Result};
use crate::exactlin::{kernel, sparse_lincomb, sparse_sub, Echelon, Field, Insert, Matrix, PivotRule, SVec, Subspace};

/// Which formula [`derivation_bracket`] uses.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum DerivationSide {
    /// `[a,b] = a(Db) − (Db)a`
    Left,
    /// `[a,b] = (Da)b − b(Da)`
    Right,
}

/// Which product [`underlying`] keeps.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Underlying {
    Assoc,
    Leibniz,
}

/// Replaces the bracket by the commutator `ab − ba`.
pub fn commutator_bracket<F: Field>(a: &BiAlgebra<F>) -> Result<BiAlgebra<F>> {
    if !check_identity(a, IdentityTag::Associativity) {
        return Err(Error::NotAssociative);
    }
    let mut out = a.clone();
    let n = a.dim();
    for i in 0..n {
        for j in 0..n {
            out.set_bracket(i, j, sparse_sub(a.field(), a.dot_basis(i, j), a.dot_basis(j, i)));
        }
    }
    Ok(out)
}

fn check_square<F: Field>(a: &BiAlgebra<F>, d: &LinearMap<F>) -> Result<()> {
    if d.source_dim != a.dim() || d.target_dim != a.dim() {
        return Err(Error::ShapeMismatch(format!(
            "map is {}→{}, algebra has dim {}",
            d.source_dim,
            d.target_dim,
            a.dim()
        )));
    }
    Ok(())
}

/// Replaces the bracket by one built from a linear map `D`.
pub fn derivation_bracket<F: Field>(a: &BiAlgebra<F>, d: &LinearMap<F>, side: DerivationSide) -> Result<BiAlgebra<F>> {
    check_square(a, d)?;
    let n = a.dim();
    let f = a.field();
    let mut out = a.clone();
    let images: Vec<SVec<F::Elem>> = (0..n).map(|i| d.apply(&a.basis_vec(i))).collect();
    for i in 0..n {
        for j in 0..n {
            let (ei, ej) = (a.basis_vec(i), a.basis_vec(j));
            let v = match side {
                DerivationSide::Left => sparse_sub(f, &a.dot(&ei, &images[j]), &a.dot(&images[j], &ei)),
                DerivationSide::Right => sparse_sub(f, &a.dot(&images[i], &ej), &a.dot(&ej, &images[i])),
            };
            out.set_bracket(i, j, v);
        }
    }
    Ok(out)
}

/// `D² = 0` and `D(ab) = (Da)b + a(Db)` on all basis pairs.
pub fn is_square_zero_derivation<F: Field>(a: &BiAlgebra<F>, d: &LinearMap<F>) -> Result<bool> {
    check_square(a, d)?;
    if !d.matrix.mul(&d.matrix)?.is_zero() {
        return Ok(false);
    }
    let n = a.dim();
    let f = a.field();
    let images: Vec<SVec<F::Elem>> = (0..n).map(|i| d.apply(&a.basis_vec(i))).collect();
    for i in 0..n {
        for j in 0..n {
            let lhs = d.apply(a.dot_basis(i, j));
            let rhs = sparse_lincomb(f, &f.one(), &a.dot(&images[i], &a.basis_vec(j)), &f.one(), &a.dot(&a.basis_vec(i), &images[j]));
            if lhs != rhs {
                return Ok(false);
            }
        }
    }
    Ok(true)
}

/// `{z : z·p = p·z = [z,p] = [p,z] = 0 for all p}`
pub fn center<F: Field>(p: &BiAlgebra<F>) -> Subspace<F> {
    let n = p.dim();
    let f = p.field();
    // rows indexed by (condition, p, output k); column i is z = e_i
    let mut trip = Vec::new();
    let mut row = 0;
    for q in 0..n {
        for kind in 0..4 {
            for i in 0..n {
                let v = match kind {
                    0 => p.dot_basis(i, q),
                    1 => p.dot_basis(q, i),
                    2 => p.bracket_basis(i, q),
                    _ => p.bracket_basis(q, i),
                };
                for (k, c) in v {
                    trip.push((row + k, i, c.clone()));
                }
            }
            row += n;
        }
    }
    kernel(&Matrix::from_triplets(f, row, n, trip))
}

/// Smallest two-sided ideal containing the generators.
pub fn ideal_closure<F: Field>(p: &BiAlgebra<F>, generators: &[SVec<F::Elem>]) -> Subspace<F> {
    let n = p.dim();
    let f = p.field();
    let mut ech = Echelon::new(f, n, (0..n).collect(), false);
    let mut basis: Vec<SVec<F::Elem>> = Vec::new();
    let mut queue: Vec<SVec<F::Elem>> = generators.to_vec();
    while let Some(v) = queue.pop() {
        if let Insert::Independent(_) = ech.insert(&v) {
            for q in 0..n {
                let e = p.basis_vec(q);
                queue.push(p.dot(&e, &v));
                queue.push(p.dot(&v, &e));
                queue.push(p.bracket(&e, &v));
                queue.push(p.bracket(&v, &e));
            }
            basis.push(v);
        }
    }
    Subspace::span(f, n, basis)
}

/// `P / I` on the complement spanned by non-pivot coordinate vectors.
pub fn quotient<F: Field>(p: &BiAlgebra<F>, ideal: &Subspace<F>) -> Result<BiAlgebra<F>> {
    let n = p.dim();
    let f = p.field();
    if ideal.ambient_dim() != n {
        return Err(Error::ShapeMismatch("ideal lives in a different space".into()));
    }
    if ideal_closure(p, ideal.basis()).dim() != ideal.dim() {
        return Err(Error::NotAnIdeal);
    }
    let mut ech = Echelon::new(f, n, PivotRule::LowestIndex.order(n, None), false);
    for v in ideal.basis() {
        ech.insert(v);
    }
    let mut is_pivot = vec![false; n];
    for &c in ech.pivots() {
        is_pivot[c] = true;
    }
    let keep: Vec<usize> = (0..n).filter(|&j| !is_pivot[j]).collect();
    let mut new_index = vec![usize::MAX; n];
    for (t, &j) in keep.iter().enumerate() {
        new_index[j] = t;
    }
    let project = |v: &[(usize, F::Elem)]| -> SVec<F::Elem> {
        let (_, residual) = ech.reduce(v);
        residual.into_iter().map(|(j, c)| (new_index[j], c)).collect()
    };
    let names = keep.iter().map(|&j| p.basis_names()[j].clone()).collect();
    let mut out = BiAlgebra::zero_named(f, names);
    for (s, &i) in keep.iter().enumerate() {
        for (t, &j) in keep.iter().enumerate() {
            out.set_dot(s, t, project(p.dot_basis(i, j)));
            out.set_bracket(s, t, project(p.bracket_basis(i, j)));
        }
    }
    Ok(out)
}

/// Quotient by the ideal generated by all `[x,x]` and `xy − yx`.
pub fn poissonification<F: Field>(p: &BiAlgebra<F>) -> BiAlgebra<F> {
    let n = p.dim();
    let f = p.field();
    let mut gens = Vec::new();
    for i in 0..n {
        gens.push(p.bracket_basis(i, i).to_vec());
        for j in i + 1..n {
            // [e_i+e_j, e_i+e_j] − [e_i,e_i] − [e_j,e_j]
            gens.push(sparse_lincomb(f, &f.one(), p.bracket_basis(i, j), &f.one(), p.bracket_basis(j, i)));
            gens.push(sparse_sub(f, p.dot_basis(i, j), p.dot_basis(j, i)));
        }
    }
    let ideal = ideal_closure(p, &gens);
    quotient(p, &ideal).expect("closure is an ideal")
}

/// Copy keeping one product, the other set to zero.
pub fn underlying<F: Field>(p: &BiAlgebra<F>, which: Underlying) -> BiAlgebra<F> {
    let n = p.dim();
    let mut out = p.clone();
    for i in 0..n {
        for j in 0..n {
            match which {
                Underlying::Assoc => out.set_bracket(i, j, Vec::new()),
                Underlying::Leibniz => out.set_dot(i, j, Vec::new()),
            }
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::super::samples::*;
    use super::super::{classify, VarietyTag};
    use super::*;
    use crate::exactlin::{PrimeField, Rationals};

    #[test]
    fn commutator_examples() {
        let q = Rationals;
        let u = commutator_bracket(&upper_triangular(&q)).unwrap();
        assert_eq!(u.bracket_basis(0, 1), &[(1, q.one())]);
        assert!(commutator_bracket(&idempotent(&q)).unwrap().has_zero_bracket());
        assert!(commutator_bracket(&dual_numbers(&q)).unwrap().has_zero_bracket());
        let mut bad = upper_triangular(&q);
        bad.set_dot(1, 2, vec![]);
        bad.set_dot(0, 0, vec![(1, q.one())]);
        assert_eq!(commutator_bracket(&bad), Err(Error::NotAssociative));
    }

    #[test]
    fn square_zero_derivation_examples() {
        let q = Rationals;
        let dn = dual_numbers(&q);
        let d = LinearMap::new(Matrix::from_i64(&q, &[vec![0, 1], vec![0, 0]]));
        // D(ε·ε) = 0 but (Dε)ε + ε(Dε) = 2ε: only a derivation in characteristic 2
        assert!(!is_square_zero_derivation(&dn, &d).unwrap());
        let f2 = PrimeField::new(2).unwrap();
        let d2 = LinearMap::new(Matrix::from_i64(&f2, &[vec![0, 1], vec![0, 0]]));
        assert!(is_square_zero_derivation(&dual_numbers(&f2), &d2).unwrap());
        assert!(is_square_zero_derivation(&dn, &LinearMap::zero(&q, 2, 2)).unwrap());
        let e = idempotent(&q);
        assert!(!is_square_zero_derivation(&e, &LinearMap::identity(&q, 1)).unwrap());
        assert!(matches!(
            is_square_zero_derivation(&e, &LinearMap::identity(&q, 2)),
            Err(Error::ShapeMismatch(_))
        ));
        let zero_br = derivation_bracket(&upper_triangular(&q), &LinearMap::zero(&q, 3, 3), DerivationSide::Left).unwrap();
        assert!(zero_br.has_zero_bracket());
        assert!(derivation_bracket(&dn, &d, DerivationSide::Right).unwrap().has_zero_bracket());
    }

    #[test]
    fn center_examples() {
        let q = Rationals;
        assert_eq!(center(&BiAlgebra::zero(&q, 3)).dim(), 3);
        assert_eq!(center(&idempotent(&q)).dim(), 0);
        let z = center(&leibniz_xx(&q));
        assert_eq!(z.dim(), 1);
        assert!(z.contains(&[(1, q.one())]));
    }

    #[test]
    fn ideal_and_quotient_examples() {
        let q = Rationals;
        let l = leibniz_xx(&q);
        assert_eq!(ideal_closure(&l, &[]).dim(), 0);
        assert_eq!(ideal_closure(&l, &[vec![(0, q.one())]]).dim(), 2);
        assert_eq!(ideal_closure(&l, &[vec![(0, q.one())], vec![(1, q.one())]]).dim(), 2);
        assert_eq!(quotient(&l, &Subspace::zero(&q, 2)).unwrap(), l);
        assert_eq!(quotient(&l, &Subspace::full(&q, 2)).unwrap().dim(), 0);
        let y = Subspace::span(&q, 2, vec![vec![(1, q.one())]]);
        let m = quotient(&l, &y).unwrap();
        assert_eq!(m.dim(), 1);
        assert!(m.has_zero_bracket() && m.has_zero_dot());
        let x = Subspace::span(&q, 2, vec![vec![(0, q.one())]]);
        assert_eq!(quotient(&l, &x), Err(Error::NotAnIdeal));
    }

    #[test]
    fn poissonification_examples() {
        let q = Rationals;
        let l = poissonification(&leibniz_xx(&q));
        assert_eq!(l.dim(), 1);
        let c = commutator_bracket(&upper_triangular(&q)).unwrap();
        let pc = poissonification(&c);
        assert!(pc.has_zero_bracket());
        assert!(classify(&pc).contains(&VarietyTag::Poisson));
        let d = dual_numbers(&PrimeField::new(3).unwrap());
        assert_eq!(poissonification(&d), d);
    }

    #[test]
    fn underlying_examples() {
        let q = Rationals;
        let c = commutator_bracket(&upper_triangular(&q)).unwrap();
        assert_eq!(underlying(&c, Underlying::Assoc), upper_triangular(&q));
        let l = underlying(&c, Underlying::Leibniz);
        assert!(l.has_zero_dot());
        for i in 0..3 {
            for j in 0..3 {
                assert_eq!(l.bracket_basis(i, j), c.bracket_basis(i, j));
            }
        }
    }
}
