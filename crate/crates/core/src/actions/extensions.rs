//! Brute-force enumeration of abelian extensions over a finite field.

use std::collections::HashSet;

use serde::Serialize;

use super::axioms::semidirect_sum;
use super::Representation;
use crate::algebra::{check_identity, BiAlgebra, VarietyTag};
use crate::error::{Error, Result};
use crate::exactlin::{Field, SVec};

/// Limits on the brute-force search.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct ExtensionGuard {
    pub max_total_dim: usize,
    pub max_candidates: u64,
}

impl Default for ExtensionGuard {
    fn default() -> Self {
        ExtensionGuard { max_total_dim: 4, max_candidates: 1 << 16 }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ExtensionCount {
    /// Equivalence classes of extensions.
    pub classes: u64,
    /// Factor-set pairs whose total algebra lies in the variety.
    pub valid: u64,
    pub candidates: u64,
}

/// Counts equivalence classes of abelian extensions `0 → M → Q → P → 0` in the variety
/// with the given induced actions. Unknowns are the `M`-components `φ(i,j)` of `s(e_i)·s(e_j)`
/// and `ψ(i,j)` of `[s(e_i), s(e_j)]`; two factor sets are equivalent when a change of
/// section `s' = s + g`, `g: P → M`, carries one to the other.
pub fn enumerate_extensions<F: Field>(
    r: &Representation<F>,
    variety: VarietyTag,
    guard: ExtensionGuard,
) -> Result<ExtensionCount> {
    let f = r.field();
    let elems = f
        .elements()
        .ok_or_else(|| Error::FieldMismatch("extension enumeration needs a finite field".into()))?;
    let q = elems.len() as u64;
    let p = &r.algebra;
    let (n, m) = (p.dim(), r.module_dim);
    if n + m > guard.max_total_dim {
        return Err(Error::GuardExceeded(format!("dim P + dim M = {} > {}", n + m, guard.max_total_dim)));
    }
    let unknowns = 2 * m * n * n;
    let candidates = q
        .checked_pow(unknowns as u32)
        .filter(|c| *c <= guard.max_candidates)
        .ok_or_else(|| Error::GuardExceeded(format!("{q}^{unknowns} candidates > {}", guard.max_candidates)))?;
    let base = semidirect_sum(None, r);
    let decode = |mut c: u64| -> Vec<F::Elem> {
        (0..unknowns)
            .map(|_| {
                let d = (c % q) as usize;
                c /= q;
                elems[d].clone()
            })
            .collect()
    };
    let encode = |v: &[F::Elem]| -> u64 {
        v.iter().rev().fold(0u64, |acc, e| acc * q + elems.iter().position(|x| x == e).expect("field element") as u64)
    };
    let build = |coords: &[F::Elem]| -> BiAlgebra<F> {
        let mut t = base.clone();
        for i in 0..n {
            for j in 0..n {
                let off = (i * n + j) * m;
                let mut dv: SVec<F::Elem> = t.dot_basis(m + i, m + j).to_vec();
                let mut bv: SVec<F::Elem> = t.bracket_basis(m + i, m + j).to_vec();
                for k in 0..m {
                    dv.push((k, coords[off + k].clone()));
                    bv.push((k, coords[m * n * n + off + k].clone()));
                }
                t.set_dot(m + i, m + j, dv);
                t.set_bracket(m + i, m + j, bv);
            }
        }
        t
    };
    let ids = variety.defining_identities();
    let mut valid: Vec<u64> = Vec::new();
    for c in 0..candidates {
        let t = build(&decode(c));
        if ids.iter().all(|&id| check_identity(&t, id)) {
            valid.push(c);
        }
    }
    // all section changes g: P → M
    let g_count = q.pow((n * m) as u32);
    let sections: Vec<Vec<SVec<F::Elem>>> = (0..g_count)
        .map(|c| {
            let digits = {
                let mut c = c;
                (0..n * m)
                    .map(|_| {
                        let d = (c % q) as usize;
                        c /= q;
                        elems[d].clone()
                    })
                    .collect::<Vec<_>>()
            };
            (0..n)
                .map(|i| {
                    let mut v: SVec<F::Elem> = (0..m).map(|k| (k, digits[i * m + k].clone())).collect();
                    v.retain(|(_, e)| !f.is_zero(e));
                    v.push((m + i, f.one()));
                    v
                })
                .collect()
        })
        .collect();
    let valid_set: HashSet<u64> = valid.iter().copied().collect();
    let mut seen: HashSet<u64> = HashSet::new();
    let mut classes = 0u64;
    for &c in &valid {
        if seen.contains(&c) {
            continue;
        }
        classes += 1;
        let t = build(&decode(c));
        for s in &sections {
            let code = encode(&transported_factor_set(&t, s, m, n));
            debug_assert!(valid_set.contains(&code), "orbit left the valid set");
            seen.insert(code);
        }
    }
    Ok(ExtensionCount { classes, valid: valid.len() as u64, candidates })
}

/// Factor set of `t` read in the basis `(m_1..m_k, s_1..s_n)`.
fn transported_factor_set<F: Field>(t: &BiAlgebra<F>, s: &[SVec<F::Elem>], m: usize, n: usize) -> Vec<F::Elem> {
    let f = t.field();
    let mut out = vec![f.zero(); 2 * m * n * n];
    for (which, base) in [(0, 0), (1, m * n * n)] {
        for i in 0..n {
            for j in 0..n {
                let v = if which == 0 { t.dot(&s[i], &s[j]) } else { t.bracket(&s[i], &s[j]) };
                // v = Σ_k a_k m_k + Σ_l b_l e_l ;  e_l = s_l − g_l
                let mut mpart = vec![f.zero(); m];
                for (idx, c) in &v {
                    if *idx < m {
                        mpart[*idx] = f.add(&mpart[*idx], c);
                    } else {
                        let l = idx - m;
                        for (k, g) in &s[l] {
                            if *k < m {
                                mpart[*k] = f.sub(&mpart[*k], &f.mul(c, g));
                            }
                        }
                    }
                }
                for k in 0..m {
                    out[base + (i * n + j) * m + k] = mpart[k].clone();
                }
            }
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactlin::{PrimeField, Rationals};

    #[test]
    fn trivial_one_by_one_over_f2() {
        // all products and actions zero: every (φ, ψ) is valid, coboundaries vanish
        let f = PrimeField::new(2).unwrap();
        let p = BiAlgebra::zero(&f, 1);
        let r = Representation::zero(&p, 1);
        let c = enumerate_extensions(&r, VarietyTag::NPlr, ExtensionGuard::default()).unwrap();
        assert_eq!(c.candidates, 4);
        assert_eq!(c.valid, 4);
        assert_eq!(c.classes, 4);
    }

    #[test]
    fn split_extension_always_counted() {
        let f = PrimeField::new(2).unwrap();
        let p = BiAlgebra::from_entries(&f, 1, &[(0, 0, 0, 1)], &[]);
        let r = Representation::regular(&p);
        let c = enumerate_extensions(&r, VarietyTag::NPlr, ExtensionGuard::default()).unwrap();
        assert!(c.classes >= 1);
    }

    #[test]
    fn guards() {
        let f = PrimeField::new(2).unwrap();
        let p = BiAlgebra::zero(&f, 3);
        let r = Representation::zero(&p, 2);
        assert!(matches!(
            enumerate_extensions(&r, VarietyTag::NPlr, ExtensionGuard::default()),
            Err(Error::GuardExceeded(_))
        ));
        let pq = BiAlgebra::zero(&Rationals, 1);
        assert!(matches!(
            enumerate_extensions(&Representation::zero(&pq, 1), VarietyTag::NPlr, ExtensionGuard::default()),
            Err(Error::FieldMismatch(_))
        ));
    }
}
