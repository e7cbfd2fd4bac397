//! Cochain coordinates and the elementary maps between cochain spaces.
//!
//! A cochain `f ∈ C^n(P,M)` is stored as the vector of coefficients of
//! `f(e_{i1},…,e_{in})`, index `((i1·p + i2)·p + … + in)·m + k`.
//! `M^e = Hom(P,M)` uses `j·m + k`, so `C^n(P,M^e)` and `C^{n+1}(P,M)` share coordinates.

use crate::actions::Representation;
use crate::exactlin::{Field, Matrix};

pub(crate) fn digits(mut idx: usize, p: usize, len: usize) -> Vec<usize> {
    let mut t = vec![0; len];
    for q in (0..len).rev() {
        t[q] = idx % p;
        idx /= p;
    }
    t
}

pub(crate) fn index_of(t: impl IntoIterator<Item = usize>, p: usize) -> usize {
    t.into_iter().fold(0, |acc, d| acc * p + d)
}

/// `dim C^n(P,M) = m·p^n`.
pub fn cochain_dim(p: usize, m: usize, n: usize) -> usize {
    m * p.pow(n as u32)
}

fn sign<F: Field>(f: &F, odd: bool) -> F::Elem {
    if odd {
        f.neg(&f.one())
    } else {
        f.one()
    }
}

fn push_action<F: Field>(
    trip: &mut Vec<(usize, usize, F::Elem)>,
    f: &F,
    act: &Matrix<F>,
    row_base: usize,
    col_base: usize,
    s: &F::Elem,
) {
    for k in 0..act.rows() {
        for (k2, c) in act.row(k) {
            trip.push((row_base + k, col_base + k2, f.mul(s, c)));
        }
    }
}

/// Hochschild coboundary `∂^n_H : C^n → C^{n+1}` with the global sign `(-1)^{n+1}`.
pub fn hochschild_coboundary<F: Field>(r: &Representation<F>, n: usize) -> Matrix<F> {
    let f = r.field();
    let a = &r.algebra;
    let (p, m) = (a.dim(), r.module_dim);
    let rows = cochain_dim(p, m, n + 1);
    let cols = cochain_dim(p, m, n);
    let s = sign(f, (n + 1) % 2 == 1);
    let pn = p.pow(n as u32);
    let mut trip = Vec::new();
    for tt in 0..p.pow(n as u32 + 1) {
        let t = digits(tt, p, n + 1);
        // p1 · f(p2,…)
        push_action(&mut trip, f, &r.dot_l[t[0]], tt * m, (tt % pn) * m, &s);
        for i in 0..n {
            let si = f.mul(&s, &sign(f, i % 2 == 0));
            for (l, d) in a.dot_basis(t[i], t[i + 1]) {
                let idx = index_of(t[..i].iter().copied().chain([*l]).chain(t[i + 2..].iter().copied()), p);
                let c = f.mul(&si, d);
                for k in 0..m {
                    trip.push((tt * m + k, idx * m + k, c.clone()));
                }
            }
        }
        // f(p1,…,pn) · p_{n+1}, total sign (-1)^{n+1}(-1)^{n+1} = +1
        push_action(&mut trip, f, &r.dot_r[t[n]], tt * m, (tt / p) * m, &f.one());
    }
    Matrix::from_triplets(f, rows, cols, trip)
}

/// Leibniz coboundary `∂^n_L : C^n → C^{n+1}`.
pub fn leibniz_coboundary<F: Field>(r: &Representation<F>, n: usize) -> Matrix<F> {
    let f = r.field();
    let a = &r.algebra;
    let (p, m) = (a.dim(), r.module_dim);
    let rows = cochain_dim(p, m, n + 1);
    let cols = cochain_dim(p, m, n);
    let pn = p.pow(n as u32);
    let mut trip = Vec::new();
    for tt in 0..p.pow(n as u32 + 1) {
        let t = digits(tt, p, n + 1);
        push_action(&mut trip, f, &r.br_l[t[0]], tt * m, (tt % pn) * m, &f.one());
        // 0-based q = i-1, sign (-1)^{q+1}
        for q in 1..=n {
            let idx = index_of(t.iter().enumerate().filter(|(x, _)| *x != q).map(|(_, d)| *d), p);
            push_action(&mut trip, f, &r.br_r[t[q]], tt * m, idx * m, &sign(f, q % 2 == 0));
        }
        for b in 1..=n {
            let sb = sign(f, b % 2 == 1);
            for a_pos in 0..b {
                for (l, c) in a.bracket_basis(t[a_pos], t[b]) {
                    let idx = index_of(
                        t.iter()
                            .enumerate()
                            .filter(|(x, _)| *x != b)
                            .map(|(x, d)| if x == a_pos { *l } else { *d }),
                        p,
                    );
                    let v = f.mul(&sb, c);
                    for k in 0..m {
                        trip.push((tt * m + k, idx * m + k, v.clone()));
                    }
                }
            }
        }
    }
    Matrix::from_triplets(f, rows, cols, trip)
}

fn kron_identity<F: Field>(f: &F, p: usize, x: &Matrix<F>) -> Matrix<F> {
    let m = x.rows();
    let mut trip = Vec::new();
    for j in 0..p {
        push_action(&mut trip, f, x, j * m, j * m, &f.one());
    }
    Matrix::from_triplets(f, p * m, p * m, trip)
}

/// `M^e = Hom(P,M)` with `(p·g)(q) = p·g(q)`, `(g·p)(q) = g(q)·p` and no bracket actions.
pub fn me_module<F: Field>(r: &Representation<F>) -> Representation<F> {
    let f = r.field();
    let p = r.algebra.dim();
    let me = p * r.module_dim;
    let zero = vec![Matrix::zeros(f, me, me); p];
    Representation {
        algebra: r.algebra.clone(),
        module_dim: me,
        dot_l: r.dot_l.iter().map(|x| kron_identity(f, p, x)).collect(),
        dot_r: r.dot_r.iter().map(|x| kron_identity(f, p, x)).collect(),
        br_l: zero.clone(),
        br_r: zero,
    }
}

/// `θ_n : C^{n+1}(P,M) → C^n(P,M^e)`, the identity in these coordinates.
pub fn theta<F: Field>(r: &Representation<F>, n: usize) -> Matrix<F> {
    Matrix::identity(r.field(), cochain_dim(r.algebra.dim(), r.module_dim, n + 1))
}

/// `θ'_n(f)(p1,…,pn)(p_{n+1}) = f(p_{n+1},p1,…,pn)`.
pub fn theta_prime<F: Field>(r: &Representation<F>, n: usize) -> Matrix<F> {
    let f = r.field();
    let (p, m) = (r.algebra.dim(), r.module_dim);
    let dim = cochain_dim(p, m, n + 1);
    let mut trip = Vec::with_capacity(dim);
    for tt in 0..p.pow(n as u32 + 1) {
        let t = digits(tt, p, n + 1);
        let src = index_of([t[n]].into_iter().chain(t[..n].iter().copied()), p);
        for k in 0..m {
            trip.push((tt * m + k, src * m + k, f.one()));
        }
    }
    Matrix::from_triplets(f, dim, dim, trip)
}

fn alpha_impl<F: Field>(r: &Representation<F>, n: usize, primed: bool) -> Matrix<F> {
    assert!(n >= 1, "alpha is defined from degree 1");
    let f = r.field();
    let a = &r.algebra;
    let (p, m) = (a.dim(), r.module_dim);
    let minus = f.neg(&f.one());
    let mut trip = Vec::new();
    for uu in 0..p.pow(n as u32 + 1) {
        let u = digits(uu, p, n + 1);
        let last = u[n];
        if n == 1 {
            let (t1, t2) = (u[0], u[1]);
            if !primed {
                push_action(&mut trip, f, &r.br_l[t1], uu * m, t2 * m, &f.one());
                push_action(&mut trip, f, &r.br_r[t2], uu * m, t1 * m, &f.one());
            } else {
                push_action(&mut trip, f, &r.br_r[t1], uu * m, t2 * m, &f.one());
                push_action(&mut trip, f, &r.br_l[t2], uu * m, t1 * m, &f.one());
            }
            let (x, y) = if primed { (t2, t1) } else { (t1, t2) };
            for (l, c) in a.bracket_basis(x, y) {
                let v = f.neg(c);
                for k in 0..m {
                    trip.push((uu * m + k, l * m + k, v.clone()));
                }
            }
            continue;
        }
        let base = uu / p;
        let act = if primed { &r.br_l[last] } else { &r.br_r[last] };
        push_action(&mut trip, f, act, uu * m, base * m, &f.one());
        for i in 0..n {
            let prod = if primed { a.bracket_basis(last, u[i]) } else { a.bracket_basis(u[i], last) };
            for (l, c) in prod {
                let idx = index_of(u[..n].iter().enumerate().map(|(x, d)| if x == i { *l } else { *d }), p);
                let v = f.mul(&minus, c);
                for k in 0..m {
                    trip.push((uu * m + k, idx * m + k, v.clone()));
                }
            }
        }
    }
    let dim_out = cochain_dim(p, m, n + 1);
    Matrix::from_triplets(f, dim_out, cochain_dim(p, m, n), trip)
}

/// `α^n : C^n_H(P,M) → C^n_H(P,M^e)`.
pub fn alpha<F: Field>(r: &Representation<F>, n: usize) -> Matrix<F> {
    alpha_impl(r, n, false)
}

/// `α'^n : C^n_H(P,M) → C^n_H(P,M^e)`.
pub fn alpha_prime<F: Field>(r: &Representation<F>, n: usize) -> Matrix<F> {
    alpha_impl(r, n, true)
}

fn beta_impl<F: Field>(r: &Representation<F>, n: usize, primed: bool) -> Matrix<F> {
    assert!(n >= 1, "beta is defined from degree 1");
    let th = |k: usize| if primed { theta_prime(r, k) } else { theta(r, k) };
    if n % 2 == 1 {
        th(n).mul(&leibniz_coboundary(r, n)).expect("shapes agree")
    } else {
        let me = me_module(r);
        hochschild_coboundary(&me, n - 1).mul(&th(n - 1)).expect("shapes agree")
    }
}

/// `β^n : C^n_L(P,M) → C^n_H(P,M^e)`.
pub fn beta<F: Field>(r: &Representation<F>, n: usize) -> Matrix<F> {
    beta_impl(r, n, false)
}

/// `β'^n : C^n_L(P,M) → C^n_H(P,M^e)`; odd degrees use `θ'_n`.
pub fn beta_prime<F: Field>(r: &Representation<F>, n: usize) -> Matrix<F> {
    beta_impl(r, n, true)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::samples;
    use crate::exactlin::{PrimeField, Rationals};

    #[test]
    fn hochschild_degree_one_on_idempotent() {
        let q = Rationals;
        let p = samples::idempotent(&q);
        let r = Representation::regular(&p);
        let d = hochschild_coboundary(&r, 1);
        // f = id: e·e − e + e = e
        let out = d.mul_vec(&[(0, q.one())]);
        assert_eq!(out, vec![(0, q.one())]);
    }

    #[test]
    fn squares_vanish_on_samples() {
        let f = PrimeField::new(3).unwrap();
        for p in [samples::upper_triangular(&f), samples::leibniz_xx(&f)] {
            let r = Representation::regular(&p);
            for n in 0..3 {
                let h = hochschild_coboundary(&r, n + 1).mul(&hochschild_coboundary(&r, n)).unwrap();
                assert!(h.is_zero(), "Hochschild d∘d at {n}");
            }
        }
        let p = samples::leibniz_xx(&f);
        let r = Representation::regular(&p);
        for n in 0..3 {
            let l = leibniz_coboundary(&r, n + 1).mul(&leibniz_coboundary(&r, n)).unwrap();
            assert!(l.is_zero(), "Leibniz d∘d at {n}");
        }
    }

    #[test]
    fn theta_prime_one_transposes() {
        let q = Rationals;
        let p = crate::algebra::BiAlgebra::zero(&q, 2);
        let r = Representation::zero(&p, 1);
        let t = theta_prime(&r, 1);
        // f(e1,e2) lands at (e2)(e1)
        assert_eq!(t.get(index_of([1, 0], 2), index_of([0, 1], 2)), q.one());
        assert_eq!(t.get(0, 0), q.one());
    }

    #[test]
    fn alpha_one_is_beta_one_on_regular() {
        let f = PrimeField::new(5).unwrap();
        let p = samples::upper_triangular(&f);
        let p = crate::algebra::commutator_bracket(&p).unwrap();
        let r = Representation::regular(&p);
        assert_eq!(alpha(&r, 1), beta(&r, 1));
        assert_eq!(alpha_prime(&r, 1), beta_prime(&r, 1));
    }
}
