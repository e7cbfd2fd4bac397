//! Seeded random instances: algebras in a variety, representations, terms.
//!
//! Candidates come from a handful of structured families (nilpotent constants, small unital
//! associative algebras with commutator, derivation or zero brackets), are moved by a random
//! change of basis and kept only when `classify` accepts them. Everything is driven by a
//! `ChaCha8Rng`, so a seed fixes every instance.

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::actions::{check_action, Representation};
use crate::algebra::{
    classify, commutator_bracket, derivation_bracket, ideal_closure, invert, BiAlgebra, DerivationSide, LinearMap,
    VarietyTag,
};
use crate::error::{Error, Result};
use crate::exactlin::{Field, Matrix, SVec};
use crate::freealg::Term;

pub type InstanceRng = ChaCha8Rng;

/// Candidates drawn before giving up on a variety.
const MAX_CANDIDATES: usize = 400;
/// Candidates drawn while still hoping for a member outside every proper subvariety.
const STRICT_CANDIDATES: usize = 60;

/// Independent stream for `(seed, label)`.
pub fn stream(seed: u64, label: &str) -> InstanceRng {
    // FNV-1a over the label, folded into the seed
    let mut h: u64 = 0xcbf2_9ce4_8422_2325;
    for b in label.bytes() {
        h ^= b as u64;
        h = h.wrapping_mul(0x0100_0000_01b3);
    }
    ChaCha8Rng::seed_from_u64(seed ^ h.rotate_left(17))
}

/// Small scalar: an integer in `[-2, 2]` over Q, uniform over a prime field.
pub fn scalar<F: Field>(f: &F, rng: &mut InstanceRng) -> F::Elem {
    match f.elements() {
        Some(all) => all.choose(rng).expect("nonempty field").clone(),
        None => f.from_i64(rng.gen_range(-2..=2)),
    }
}

fn sparse_scalar<F: Field>(f: &F, rng: &mut InstanceRng, density: f64) -> F::Elem {
    if rng.gen_bool(density) {
        scalar(f, rng)
    } else {
        f.zero()
    }
}

fn random_matrix<F: Field>(f: &F, rows: usize, cols: usize, density: f64, rng: &mut InstanceRng) -> Matrix<F> {
    let dense: Vec<Vec<F::Elem>> =
        (0..rows).map(|_| (0..cols).map(|_| sparse_scalar(f, rng, density)).collect()).collect();
    Matrix::from_dense(f, &dense)
}

/// Random linear endomorphism of an `n`-dimensional space.
pub fn linear_map<F: Field>(f: &F, n: usize, rng: &mut InstanceRng) -> LinearMap<F> {
    LinearMap::new(random_matrix(f, n, n, 0.5, rng))
}

/// Random invertible matrix.
pub fn invertible<F: Field>(f: &F, n: usize, rng: &mut InstanceRng) -> Matrix<F> {
    loop {
        let m = random_matrix(f, n, n, 0.6, rng);
        if invert(&m).is_some() {
            return m;
        }
    }
}

/// `e_i ∘ e_j ∈ span{e_k : k > max(i, j)}` for both products.
fn nilpotent<F: Field>(f: &F, n: usize, with_dot: bool, with_bracket: bool, rng: &mut InstanceRng) -> BiAlgebra<F> {
    let mut a = BiAlgebra::zero(f, n);
    for i in 0..n {
        for j in 0..n {
            let upper = |rng: &mut InstanceRng| -> SVec<F::Elem> {
                ((i.max(j) + 1)..n)
                    .map(|k| (k, sparse_scalar(f, rng, 0.5)))
                    .filter(|(_, c)| !f.is_zero(c))
                    .collect()
            };
            if with_dot {
                let v = upper(rng);
                a.set_dot(i, j, v);
            }
            if with_bracket {
                let v = upper(rng);
                a.set_bracket(i, j, v);
            }
        }
    }
    a
}

/// A small associative algebra of dimension `n` with zero bracket.
pub fn associative<F: Field>(f: &F, n: usize, rng: &mut InstanceRng) -> BiAlgebra<F> {
    let idempotent = || BiAlgebra::from_entries(f, 1, &[(0, 0, 0, 1)], &[]);
    let dual = || BiAlgebra::from_entries(f, 2, &[(0, 0, 0, 1), (0, 1, 1, 1), (1, 0, 1, 1)], &[]);
    let upper = || BiAlgebra::from_entries(f, 3, &[(0, 0, 0, 1), (0, 1, 1, 1), (1, 2, 1, 1), (2, 2, 2, 1)], &[]);
    let lower_half = || BiAlgebra::from_entries(f, 2, &[(0, 0, 0, 1), (0, 1, 1, 1)], &[]);
    let mut pieces: Vec<BiAlgebra<F>> = Vec::new();
    let mut left = n;
    while left > 0 {
        let choice = rng.gen_range(0..6);
        let piece = match choice {
            0 if left >= 3 => upper(),
            1 if left >= 2 => dual(),
            2 if left >= 2 => lower_half(),
            3 => idempotent(),
            4 => {
                let k = rng.gen_range(1..=left);
                let c = nilpotent(f, k, true, false, rng);
                if crate::algebra::check_identity(&c, crate::algebra::IdentityTag::Associativity) {
                    c
                } else {
                    BiAlgebra::zero(f, k)
                }
            }
            _ => BiAlgebra::zero(f, 1),
        };
        left -= piece.dim();
        pieces.push(piece);
    }
    let mut out = pieces.remove(0);
    for p in pieces {
        out = out.direct_sum(&p);
    }
    out
}

fn candidate<F: Field>(f: &F, n: usize, rng: &mut InstanceRng) -> BiAlgebra<F> {
    let base = match rng.gen_range(0..8) {
        0 => nilpotent(f, n, true, true, rng),
        1 => nilpotent(f, n, false, true, rng),
        2 => {
            let mut a = associative(f, n, rng);
            let b = nilpotent(f, n, false, true, rng);
            for i in 0..n {
                for j in 0..n {
                    a.set_bracket(i, j, b.bracket_basis(i, j).to_vec());
                }
            }
            a
        }
        3 => associative(f, n, rng),
        4 => commutator_bracket(&associative(f, n, rng)).expect("associative"),
        5 | 6 => {
            let a = associative(f, n, rng);
            let side = if rng.gen_bool(0.5) { DerivationSide::Left } else { DerivationSide::Right };
            let d = linear_map(f, n, rng);
            derivation_bracket(&a, &d, side).expect("square map")
        }
        _ => {
            // unconstrained sparse constants
            let mut a = BiAlgebra::zero(f, n);
            for i in 0..n {
                for j in 0..n {
                    let d: SVec<F::Elem> =
                        (0..n).map(|k| (k, sparse_scalar(f, rng, 0.15))).filter(|(_, c)| !f.is_zero(c)).collect();
                    let b: SVec<F::Elem> =
                        (0..n).map(|k| (k, sparse_scalar(f, rng, 0.15))).filter(|(_, c)| !f.is_zero(c)).collect();
                    a.set_dot(i, j, d);
                    a.set_bracket(i, j, b);
                }
            }
            a
        }
    };
    base.change_basis(&invertible(f, n, rng)).expect("invertible change of basis")
}

/// Proper subvarieties among the bracketed ones and Poisson: more identities, same ambient.
fn proper_subvarieties(v: VarietyTag) -> Vec<VarietyTag> {
    let ids = v.defining_identities();
    VarietyTag::BRACKETED
        .into_iter()
        .filter(|w| *w != v && ids.iter().all(|i| w.defining_identities().contains(i)))
        .collect()
}

/// Random algebra of dimension `dim` in `variety`, preferring members of no proper subvariety.
pub fn random_algebra<F: Field>(f: &F, variety: VarietyTag, dim: usize, rng: &mut InstanceRng) -> Result<BiAlgebra<F>> {
    let subs = proper_subvarieties(variety);
    let mut fallback = None;
    for t in 0..MAX_CANDIDATES {
        let a = candidate(f, dim, rng);
        let tags = classify(&a);
        if !tags.contains(&variety) {
            continue;
        }
        if subs.iter().all(|w| !tags.contains(w)) || dim == 0 {
            return Ok(a);
        }
        if fallback.is_none() {
            fallback = Some(a);
        }
        if t >= STRICT_CANDIDATES {
            if let Some(a) = fallback {
                return Ok(a);
            }
        }
    }
    fallback.ok_or_else(|| Error::VarietyMismatch(format!("no {variety} algebra of dim {dim} after {MAX_CANDIDATES} candidates")))
}

/// Random valid representation of `p` with `1 <= dim M <= max_module_dim`, preferring nonzero actions.
pub fn random_representation<F: Field>(
    variety: VarietyTag,
    p: &BiAlgebra<F>,
    max_module_dim: usize,
    rng: &mut InstanceRng,
) -> Representation<F> {
    let f = p.field();
    let n = p.dim();
    let mut fallback = None;
    for t in 0..MAX_CANDIDATES {
        let r = match rng.gen_range(0..10) {
            0 if n <= max_module_dim && n > 0 => Some(Representation::regular(p)),
            1 | 2 if n > 0 => {
                let gens = vec![(0..n).map(|k| (k, scalar(f, rng))).filter(|(_, c)| !f.is_zero(c)).collect()];
                let ideal = ideal_closure(p, &gens);
                if (1..=max_module_dim).contains(&ideal.dim()) {
                    Representation::on_ideal(p, &ideal).ok()
                } else {
                    None
                }
            }
            3 | 4 if n > 0 => {
                let gens = vec![(0..n).map(|k| (k, scalar(f, rng))).filter(|(_, c)| !f.is_zero(c)).collect()];
                let ideal = ideal_closure(p, &gens);
                if (1..=max_module_dim).contains(&(n - ideal.dim())) {
                    Representation::on_quotient(p, &ideal).ok()
                } else {
                    None
                }
            }
            5..=8 => {
                let m = rng.gen_range(1..=max_module_dim.max(1));
                let mut mats = || (0..n).map(|_| random_matrix(f, m, m, 0.3, rng)).collect::<Vec<_>>();
                let (a, b, c, d) = (mats(), mats(), mats(), mats());
                Representation::new(p.clone(), m, a, b, c, d).ok()
            }
            _ => Some(Representation::zero(p, rng.gen_range(1..=max_module_dim.max(1)))),
        };
        if let Some(r) = r {
            if r.module_dim >= 1 && r.module_dim <= max_module_dim.max(1) && check_action(variety, &r) {
                let acts = r.dot_l.iter().chain(&r.dot_r).chain(&r.br_l).chain(&r.br_r).any(|m| !m.is_zero());
                if acts {
                    return r;
                }
                fallback.get_or_insert(r);
            }
        }
        if t >= 3 * STRICT_CANDIDATES && fallback.is_some() {
            break;
        }
    }
    fallback.unwrap_or_else(|| Representation::zero(p, 1))
}

/// Random term of exact degree `degree` over `gens` generators.
pub fn random_term(gens: usize, degree: usize, rng: &mut InstanceRng) -> Term {
    if degree <= 1 {
        return Term::Gen(rng.gen_range(0..gens));
    }
    let k = rng.gen_range(1..degree);
    let (a, b) = (random_term(gens, k, rng), random_term(gens, degree - k, rng));
    if rng.gen_bool(0.5) {
        Term::dot(a, b)
    } else {
        Term::bracket(a, b)
    }
}

/// Random element of `b`, as a coordinate vector.
pub fn random_vector<F: Field>(f: &F, dim: usize, rng: &mut InstanceRng) -> SVec<F::Elem> {
    (0..dim).map(|k| (k, scalar(f, rng))).filter(|(_, c)| !f.is_zero(c)).collect()
}

/// First random candidate of dimension `<= max_dim` satisfying `pred`.
pub fn search<F: Field>(
    f: &F,
    max_dim: usize,
    tries: usize,
    rng: &mut InstanceRng,
    pred: impl Fn(&BiAlgebra<F>) -> bool,
) -> Option<BiAlgebra<F>> {
    (0..tries).find_map(|_| {
        let dim = rng.gen_range(1..=max_dim);
        let a = candidate(f, dim, rng);
        pred(&a).then_some(a)
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactlin::{PrimeField, Rationals};

    #[test]
    fn streams_are_reproducible() {
        let q = Rationals;
        let a = random_algebra(&q, VarietyTag::NPl, 3, &mut stream(7, "x")).unwrap();
        let b = random_algebra(&q, VarietyTag::NPl, 3, &mut stream(7, "x")).unwrap();
        assert_eq!(a, b);
        let c = random_algebra(&q, VarietyTag::NPl, 3, &mut stream(7, "y")).unwrap();
        assert!(classify(&c).contains(&VarietyTag::NPl));
    }

    #[test]
    fn every_variety_has_members_and_valid_reps() {
        let f2 = PrimeField::new(2).unwrap();
        let mut rng = stream(1, "members");
        for v in VarietyTag::BRACKETED {
            for dim in 1..=3 {
                let a = random_algebra(&f2, v, dim, &mut rng).unwrap();
                assert!(classify(&a).contains(&v));
                let r = random_representation(v, &a, 2, &mut rng);
                assert!(check_action(v, &r));
            }
        }
    }

    #[test]
    fn terms_have_requested_degree() {
        let mut rng = stream(3, "terms");
        for d in 1..=5 {
            assert_eq!(random_term(2, d, &mut rng).degree(), d);
        }
    }
}
