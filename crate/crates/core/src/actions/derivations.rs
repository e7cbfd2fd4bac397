//! Derivations `P → M`, in coordinates `f(e_i)_k ↦ i·dim M + k`.

use super::{ActionKind, Representation};
use crate::algebra::VarietyTag;
use crate::exactlin::{kernel, Field, Matrix, SVec, Subspace};

/// Solution space of the Leibniz rules for the products the variety has.
pub fn derivations<F: Field>(variety: VarietyTag, r: &Representation<F>) -> Subspace<F> {
    let p = &r.algebra;
    let f = p.field();
    let (n, m) = (p.dim(), r.module_dim);
    let mut trip = Vec::new();
    let mut row = 0;
    let mut rules: Vec<(bool, ActionKind, ActionKind)> = Vec::new();
    if variety.has_assoc() {
        rules.push((false, ActionKind::DotR, ActionKind::DotL));
    }
    if variety != VarietyTag::Assoc {
        rules.push((true, ActionKind::BrR, ActionKind::BrL));
    }
    for (is_bracket, right, left) in rules {
        for i in 0..n {
            for j in 0..n {
                // d(e_i ∘ e_j) − d(e_i) ∘ e_j − e_i ∘ d(e_j), output coordinate k
                let prod = if is_bracket { p.bracket_basis(i, j) } else { p.dot_basis(i, j) };
                for (l, c) in prod {
                    for k in 0..m {
                        trip.push((row + k, l * m + k, c.clone()));
                    }
                }
                push_action(&mut trip, row, &r.tensor(right)[j], i * m, f);
                push_action(&mut trip, row, &r.tensor(left)[i], j * m, f);
                row += m;
            }
        }
    }
    kernel(&Matrix::from_triplets(f, row, n * m, trip))
}

fn push_action<F: Field>(trip: &mut Vec<(usize, usize, F::Elem)>, row: usize, a: &Matrix<F>, col_off: usize, f: &F) {
    for k in 0..a.rows() {
        for (kk, c) in a.row(k) {
            trip.push((row + k, col_off + kk, f.neg(c)));
        }
    }
}

/// `ad_p(p') = −[p', p]` as a vector in the derivation coordinates of the regular representation.
pub fn inner_derivation<F: Field>(r: &Representation<F>, p: &[(usize, F::Elem)]) -> SVec<F::Elem> {
    let alg = &r.algebra;
    let f = alg.field();
    let n = alg.dim();
    let mut out = Vec::new();
    for i in 0..n {
        let v = alg.bracket(&alg.basis_vec(i), p);
        for (k, c) in v {
            out.push((i * n + k, f.neg(&c)));
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::{commutator_bracket, BiAlgebra};
    use crate::exactlin::Rationals;

    #[test]
    fn zero_algebra_all_maps() {
        let q = Rationals;
        let p = BiAlgebra::zero(&q, 2);
        assert_eq!(derivations(VarietyTag::NPlr, &Representation::zero(&p, 3)).dim(), 6);
    }

    #[test]
    fn idempotent_regular_has_none() {
        let q = Rationals;
        let p = BiAlgebra::from_entries(&q, 1, &[(0, 0, 0, 1)], &[]);
        assert_eq!(derivations(VarietyTag::NPlr, &Representation::regular(&p)).dim(), 0);
    }

    #[test]
    fn inner_derivations_are_derivations() {
        let q = Rationals;
        let p = commutator_bracket(&BiAlgebra::from_entries(
            &q,
            3,
            &[(0, 0, 0, 1), (0, 1, 1, 1), (1, 2, 1, 1), (2, 2, 2, 1)],
            &[],
        ))
        .unwrap();
        let r = Representation::regular(&p);
        let der = derivations(VarietyTag::NPlr, &r);
        for i in 0..3 {
            assert!(der.contains(&inner_derivation(&r, &p.basis_vec(i))));
        }
    }
}
