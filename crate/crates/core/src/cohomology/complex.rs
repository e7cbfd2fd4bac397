//! Complexes assembled from summands, chain maps between them, and cohomology dimensions.

use std::cell::{OnceCell, RefCell};
use std::collections::HashMap;
use std::ops::Range;

use serde::Serialize;

use super::cochains::{
    alpha, alpha_prime, beta, beta_prime, cochain_dim, hochschild_coboundary, leibniz_coboundary, me_module,
};
use crate::actions::Representation;
use crate::algebra::{classify, VarietyTag};
use crate::exactlin::{rank, Field, Matrix};
use crate::{Error, Result};

/// Which `M^e` column: the one fed by `α`/`β` or by `α'`/`β'`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub enum Col {
    Left,
    Right,
}

/// Summand type. `Hom` is the degree-1 term `Hom(P,M)` of the NP complexes.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub enum Kind {
    Hom,
    H,
    L,
    E(Col),
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct Slot {
    pub part: u8,
    pub kind: Kind,
    pub dim: usize,
}

/// Recipe for a complex in terms of the cochain spaces of `(P, M)`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub enum Shape {
    Hochschild { negated: bool },
    Leibniz { negated: bool },
    /// `C^{*-1}_H(P,M^e)`, one copy per column, zero below degree 2.
    Shifted(Vec<Col>),
    ConeAlpha(Vec<Col>),
    ConeBeta(Vec<Col>),
    Np(Vec<Col>),
    Sum(Vec<Shape>),
}

impl Shape {
    fn kinds(&self, n: usize) -> Vec<Kind> {
        let cols = |cs: &[Col], lo: usize| -> Vec<Kind> {
            if n >= lo {
                cs.iter().map(|c| Kind::E(*c)).collect()
            } else {
                Vec::new()
            }
        };
        if n == 0 {
            return Vec::new();
        }
        match self {
            Shape::Hochschild { .. } => vec![Kind::H],
            Shape::Leibniz { .. } => vec![Kind::L],
            Shape::Shifted(cs) => cols(cs, 2),
            Shape::ConeAlpha(cs) => [vec![Kind::H], cols(cs, 2)].concat(),
            Shape::ConeBeta(cs) => [vec![Kind::L], cols(cs, 2)].concat(),
            Shape::Np(cs) if n == 1 => {
                let _ = cs;
                vec![Kind::Hom]
            }
            Shape::Np(cs) => [vec![Kind::H], cols(cs, 2), vec![Kind::L]].concat(),
            Shape::Sum(_) => unreachable!("sums are flattened by the caller"),
        }
    }

    fn parts(&self) -> Vec<&Shape> {
        match self {
            Shape::Sum(v) => v.iter().collect(),
            s => vec![s],
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
enum Key {
    DH,
    DL,
    DE,
    Alpha(Col),
    Beta(Col),
}

/// Lazily computed coboundaries and comparison maps for one `(P, M)`.
pub struct Ingredients<'a, F: Field> {
    rep: &'a Representation<F>,
    me: OnceCell<Representation<F>>,
    cache: RefCell<HashMap<(Key, usize), Matrix<F>>>,
}

impl<'a, F: Field> Ingredients<'a, F> {
    pub fn new(rep: &'a Representation<F>) -> Self {
        Ingredients { rep, me: OnceCell::new(), cache: RefCell::new(HashMap::new()) }
    }

    pub fn rep(&self) -> &Representation<F> {
        self.rep
    }

    pub fn me(&self) -> &Representation<F> {
        self.me.get_or_init(|| me_module(self.rep))
    }

    fn get(&self, key: Key, n: usize) -> Matrix<F> {
        if let Some(m) = self.cache.borrow().get(&(key, n)) {
            return m.clone();
        }
        let r = self.rep;
        let m = match key {
            Key::DH => hochschild_coboundary(r, n),
            Key::DL => leibniz_coboundary(r, n),
            Key::DE => hochschild_coboundary(self.me(), n),
            Key::Alpha(Col::Left) => alpha(r, n),
            Key::Alpha(Col::Right) => alpha_prime(r, n),
            Key::Beta(Col::Left) => beta(r, n),
            Key::Beta(Col::Right) => beta_prime(r, n),
        };
        self.cache.borrow_mut().insert((key, n), m.clone());
        m
    }

    pub fn d_h(&self, n: usize) -> Matrix<F> {
        self.get(Key::DH, n)
    }
    pub fn d_l(&self, n: usize) -> Matrix<F> {
        self.get(Key::DL, n)
    }
    /// Hochschild coboundary with coefficients in `M^e`.
    pub fn d_e(&self, n: usize) -> Matrix<F> {
        self.get(Key::DE, n)
    }
    pub fn alpha(&self, c: Col, n: usize) -> Matrix<F> {
        self.get(Key::Alpha(c), n)
    }
    pub fn beta(&self, c: Col, n: usize) -> Matrix<F> {
        self.get(Key::Beta(c), n)
    }

    /// `m·p^n`: every summand in degree `n` has this dimension.
    pub fn level_dim(&self, n: usize) -> usize {
        cochain_dim(self.rep.algebra.dim(), self.rep.module_dim, n)
    }

    /// The differential block from a `src` summand in degree `n` to a `tgt` summand in degree `n+1`.
    fn block(&self, shape: &Shape, n: usize, src: Kind, tgt: Kind) -> Option<Matrix<F>> {
        use Kind::*;
        let inside_cone = !matches!(shape, Shape::Hochschild { .. } | Shape::Leibniz { .. } | Shape::Shifted(_));
        match (shape, src, tgt) {
            (Shape::Hochschild { negated }, H, H) => Some(self.signed(self.d_h(n), *negated)),
            (Shape::Leibniz { negated }, L, L) => Some(self.signed(self.d_l(n), *negated)),
            (_, E(a), E(b)) if a == b => Some(self.d_e(n - 1)),
            (_, H, H) if inside_cone => Some(self.d_h(n).neg()),
            (_, L, L) if inside_cone => Some(self.d_l(n).neg()),
            (Shape::ConeAlpha(_) | Shape::Np(_), H, E(c)) => Some(self.alpha(c, n)),
            (Shape::ConeBeta(_) | Shape::Np(_), L, E(c)) => Some(self.beta(c, n).neg()),
            // α¹ − β¹ = 0, so the degree-1 term only feeds the outer summands
            (Shape::Np(_), Hom, H) => Some(self.d_h(n).neg()),
            (Shape::Np(_), Hom, L) => Some(self.d_l(n).neg()),
            _ => None,
        }
    }

    fn signed(&self, m: Matrix<F>, negated: bool) -> Matrix<F> {
        if negated {
            m.neg()
        } else {
            m
        }
    }
}

/// A bounded cochain complex `C^0 → … → C^top` with its summand layout.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Complex<F: Field> {
    pub label: String,
    pub shape: Shape,
    pub layouts: Vec<Vec<Slot>>,
    /// `diffs[n] : C^n → C^{n+1}` for `n < top`.
    pub diffs: Vec<Matrix<F>>,
}

impl<F: Field> Complex<F> {
    pub fn from_shape(label: impl Into<String>, shape: Shape, ing: &Ingredients<'_, F>, top: usize) -> Self {
        let f = ing.rep().field().clone();
        let parts = shape.parts();
        let layouts: Vec<Vec<Slot>> = (0..=top)
            .map(|n| {
                let mut v = Vec::new();
                for (pi, s) in parts.iter().enumerate() {
                    for kind in s.kinds(n) {
                        v.push(Slot { part: pi as u8, kind, dim: ing.level_dim(n) });
                    }
                }
                v
            })
            .collect();
        let mut diffs = Vec::with_capacity(top);
        for n in 0..top {
            let (src, tgt) = (&layouts[n], &layouts[n + 1]);
            let mut blocks = Vec::new();
            for (j, s) in src.iter().enumerate() {
                for (i, t) in tgt.iter().enumerate() {
                    if s.part != t.part {
                        continue;
                    }
                    if let Some(b) = ing.block(parts[s.part as usize], n, s.kind, t.kind) {
                        blocks.push((i, j, b));
                    }
                }
            }
            let rd: Vec<usize> = tgt.iter().map(|s| s.dim).collect();
            let cd: Vec<usize> = src.iter().map(|s| s.dim).collect();
            diffs.push(Matrix::from_blocks(&f, &rd, &cd, &blocks).expect("block shapes follow the layout"));
        }
        Complex { label: label.into(), shape, layouts, diffs }
    }

    pub fn top(&self) -> usize {
        self.diffs.len()
    }

    pub fn dim(&self, n: usize) -> usize {
        self.layouts[n].iter().map(|s| s.dim).sum()
    }

    pub fn dims(&self) -> Vec<usize> {
        (0..=self.top()).map(|n| self.dim(n)).collect()
    }

    pub fn field(&self) -> F {
        self.diffs.first().map(|d| d.field().clone()).expect("complex has at least one differential")
    }

    /// Coordinate range of a summand in degree `n`.
    pub fn slot_range(&self, n: usize, part: u8, kind: Kind) -> Option<Range<usize>> {
        let mut off = 0;
        for s in &self.layouts[n] {
            if s.part == part && s.kind == kind {
                return Some(off..off + s.dim);
            }
            off += s.dim;
        }
        None
    }

    /// First degree where `d∘d ≠ 0`, if any.
    pub fn square_defect(&self) -> Option<usize> {
        (0..self.top().saturating_sub(1))
            .find(|&n| !self.diffs[n + 1].mul(&self.diffs[n]).expect("consecutive shapes agree").is_zero())
    }
}

/// Degree-preserving maps `src^n → tgt^n` for every degree.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ChainMap<F: Field> {
    pub maps: Vec<Matrix<F>>,
}

/// One identity block of a summand map, with sign.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct SlotPair {
    pub from: (u8, Kind),
    pub to: (u8, Kind),
    pub negate: bool,
}

impl SlotPair {
    pub fn new(from: (u8, Kind), to: (u8, Kind)) -> Self {
        SlotPair { from, to, negate: false }
    }
    pub fn neg(from: (u8, Kind), to: (u8, Kind)) -> Self {
        SlotPair { from, to, negate: true }
    }
}

impl<F: Field> ChainMap<F> {
    /// Summand inclusions and projections. Pairs whose summands are absent in a degree are skipped.
    pub fn from_slots(src: &Complex<F>, tgt: &Complex<F>, pairs: &[SlotPair]) -> Self {
        let f = src.field();
        let top = src.top().min(tgt.top());
        let maps = (0..=top)
            .map(|n| {
                let mut trip = Vec::new();
                for pr in pairs {
                    let (Some(a), Some(b)) =
                        (src.slot_range(n, pr.from.0, pr.from.1), tgt.slot_range(n, pr.to.0, pr.to.1))
                    else {
                        continue;
                    };
                    assert_eq!(a.len(), b.len(), "identity block between summands of equal size");
                    let v = if pr.negate { f.neg(&f.one()) } else { f.one() };
                    for (x, y) in a.zip(b) {
                        trip.push((y, x, v.clone()));
                    }
                }
                Matrix::from_triplets(&f, tgt.dim(n), src.dim(n), trip)
            })
            .collect();
        ChainMap { maps }
    }

    pub fn top(&self) -> usize {
        self.maps.len() - 1
    }

    /// First degree `n ≥ from` with `d_tgt ∘ φ^n ≠ φ^{n+1} ∘ d_src`.
    pub fn commutation_defect(&self, src: &Complex<F>, tgt: &Complex<F>, from: usize) -> Option<usize> {
        let top = self.top().min(src.top()).min(tgt.top());
        (from..top).find(|&n| {
            let l = tgt.diffs[n].mul(&self.maps[n]).expect("shape");
            let r = self.maps[n + 1].mul(&src.diffs[n]).expect("shape");
            l != r
        })
    }
}

/// `dim H^n` for `n ≤ max`, with `H^n = ker d^n / im d^{n-1}`.
pub fn cohomology_dims<F: Field>(c: &Complex<F>, max: usize) -> Result<Vec<usize>> {
    Ok(cohomology_table(c, max)?.into_iter().map(|r| r.h_dim).collect())
}

/// Per-degree cochain dimension, rank of `d^n`, and `dim H^n`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct DegreeRow {
    pub n: usize,
    pub cochain_dim: usize,
    pub rank: usize,
    pub h_dim: usize,
}

pub fn cohomology_table<F: Field>(c: &Complex<F>, max: usize) -> Result<Vec<DegreeRow>> {
    if c.top() < max + 1 {
        return Err(Error::RangeTooSmall(format!("complex built to degree {}, need {}", c.top(), max + 1)));
    }
    let ranks: Vec<usize> = crate::par::map_ordered(&c.diffs[..=max], |d| rank(d));
    Ok((0..=max)
        .map(|n| {
            let prev = if n == 0 { 0 } else { ranks[n - 1] };
            DegreeRow { n, cochain_dim: c.dim(n), rank: ranks[n], h_dim: c.dim(n) - ranks[n] - prev }
        })
        .collect())
}

/// Complex shape for one of the six bracketed varieties.
pub fn variety_shape(v: VarietyTag) -> Result<Shape> {
    use VarietyTag::*;
    Ok(match v {
        NPl => Shape::Np(vec![Col::Left]),
        NPr => Shape::Np(vec![Col::Right]),
        NPlr => Shape::Np(vec![Col::Left, Col::Right]),
        AWBl => Shape::ConeAlpha(vec![Col::Left]),
        AWBr => Shape::ConeAlpha(vec![Col::Right]),
        AWBlr => Shape::ConeAlpha(vec![Col::Left, Col::Right]),
        other => return Err(Error::VarietyMismatch(format!("no cohomology complex for {other}"))),
    })
}

pub(crate) fn require_variety<F: Field>(v: VarietyTag, r: &Representation<F>) -> Result<()> {
    if classify(&r.algebra).contains(&v) {
        Ok(())
    } else {
        Err(Error::VarietyMismatch(format!("algebra is not {v}")))
    }
}

/// The cohomology complex of `P` with coefficients in `M` for a bracketed variety, degrees `0..=top`.
pub fn build_complex<F: Field>(v: VarietyTag, r: &Representation<F>, top: usize) -> Result<Complex<F>> {
    let shape = variety_shape(v)?;
    require_variety(v, r)?;
    let ing = Ingredients::new(r);
    Ok(Complex::from_shape(v.name(), shape, &ing, top))
}

/// `dim ker(d² restricted to C²_H ⊕ C²_L) − rank d¹` for the NP varieties.
pub fn restricted_h2<F: Field>(v: VarietyTag, r: &Representation<F>) -> Result<usize> {
    if !matches!(v, VarietyTag::NPl | VarietyTag::NPr | VarietyTag::NPlr) {
        return Err(Error::VarietyMismatch(format!("restricted H² is defined for NP varieties, not {v}")));
    }
    let c = build_complex(v, r, 3)?;
    let h = c.slot_range(2, 0, Kind::H).expect("H summand");
    let l = c.slot_range(2, 0, Kind::L).expect("L summand");
    let d2 = &c.diffs[2];
    let f = c.field();
    let cols: Vec<usize> = h.clone().chain(l.clone()).collect();
    let restricted = Matrix::from_cols(&f, d2.rows(), cols.iter().map(|&j| d2.col(j)).collect());
    Ok(cols.len() - rank(&restricted) - rank(&c.diffs[1]))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::{commutator_bracket, samples, BiAlgebra};
    use crate::exactlin::{PrimeField, Rationals};

    #[test]
    fn nplr_degree_two_dims() {
        let q = Rationals;
        let p = BiAlgebra::zero(&q, 2);
        let r = Representation::zero(&p, 3);
        let c = build_complex(VarietyTag::NPlr, &r, 3).unwrap();
        let (pp, m) = (2, 3);
        assert_eq!(c.dim(2), m * pp * pp + 2 * (m * pp) * pp + m * pp * pp);
        assert_eq!(c.dim(0), 0);
        assert_eq!(c.dim(1), m * pp);
        assert!(c.diffs.iter().all(|d| d.is_zero()));
        let h = cohomology_dims(&c, 2).unwrap();
        assert_eq!(h, c.dims()[..3].to_vec());
    }

    #[test]
    fn every_variety_squares_to_zero() {
        let f = PrimeField::new(3).unwrap();
        let p = commutator_bracket(&samples::upper_triangular(&f)).unwrap();
        let r = crate::actions::Representation::regular(&p);
        for v in VarietyTag::BRACKETED {
            let c = build_complex(v, &r, 4).unwrap();
            assert_eq!(c.square_defect(), None, "{v}");
        }
    }

    #[test]
    fn chain_map_identities_hold() {
        let f = PrimeField::new(5).unwrap();
        let p = commutator_bracket(&samples::upper_triangular(&f)).unwrap();
        let r = crate::actions::Representation::regular(&p);
        let ing = Ingredients::new(&r);
        for n in 1..4 {
            for c in [Col::Left, Col::Right] {
                let lhs = ing.d_e(n).mul(&ing.alpha(c, n)).unwrap();
                let rhs = ing.alpha(c, n + 1).mul(&ing.d_h(n)).unwrap();
                assert_eq!(lhs, rhs, "alpha {c:?} at {n}");
                let lhs = ing.d_e(n).mul(&ing.beta(c, n)).unwrap();
                let rhs = ing.beta(c, n + 1).mul(&ing.d_l(n)).unwrap();
                assert_eq!(lhs, rhs, "beta {c:?} at {n}");
            }
        }
    }

    #[test]
    fn h1_of_idempotent_regular_is_zero() {
        let q = Rationals;
        let p = samples::idempotent(&q);
        let r = crate::actions::Representation::regular(&p);
        let c = build_complex(VarietyTag::NPlr, &r, 3).unwrap();
        assert_eq!(cohomology_dims(&c, 1).unwrap(), vec![0, 0]);
    }

    #[test]
    fn restricted_h2_of_zero_algebra() {
        let q = Rationals;
        let p = BiAlgebra::zero(&q, 2);
        let r = Representation::zero(&p, 1);
        assert_eq!(restricted_h2(VarietyTag::NPlr, &r).unwrap(), 4 + 4);
    }

    #[test]
    fn variety_mismatch_is_reported() {
        let q = Rationals;
        // zero dot, [e,e] = e is not Leibniz
        let mut p = BiAlgebra::zero(&q, 1);
        p.set_bracket(0, 0, vec![(0, q.one())]);
        let r = Representation::zero(&p, 1);
        assert!(matches!(build_complex(VarietyTag::NPlr, &r, 2), Err(Error::VarietyMismatch(_))));
    }
}
