//! Defining and derived identities, checked on basis tuples.

use std::collections::BTreeSet;
use std::fmt;

use serde::Serialize;

use super::BiAlgebra;
use crate::error::{Error, Result};
use crate::exactlin::{sparse_add, sparse_sub, Field, SVec};

/// Varieties of algebras with bracket.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub enum VarietyTag {
    Assoc,
    Leibniz,
    AWBl,
    AWBr,
    AWBlr,
    NPl,
    NPr,
    NPlr,
    Poisson,
}

impl VarietyTag {
    pub const ALL: [VarietyTag; 9] = [
        VarietyTag::Assoc,
        VarietyTag::Leibniz,
        VarietyTag::AWBl,
        VarietyTag::AWBr,
        VarietyTag::AWBlr,
        VarietyTag::NPl,
        VarietyTag::NPr,
        VarietyTag::NPlr,
        VarietyTag::Poisson,
    ];

    /// The six bracketed varieties with free objects and cohomology.
    pub const BRACKETED: [VarietyTag; 6] = [
        VarietyTag::NPl,
        VarietyTag::NPr,
        VarietyTag::NPlr,
        VarietyTag::AWBl,
        VarietyTag::AWBr,
        VarietyTag::AWBlr,
    ];

    pub fn name(self) -> &'static str {
        match self {
            VarietyTag::Assoc => "Assoc",
            VarietyTag::Leibniz => "Leibniz",
            VarietyTag::AWBl => "AWBl",
            VarietyTag::AWBr => "AWBr",
            VarietyTag::AWBlr => "AWBlr",
            VarietyTag::NPl => "NPl",
            VarietyTag::NPr => "NPr",
            VarietyTag::NPlr => "NPlr",
            VarietyTag::Poisson => "Poisson",
        }
    }

    pub fn parse(s: &str) -> Result<Self> {
        Self::ALL
            .into_iter()
            .find(|t| t.name().eq_ignore_ascii_case(s.trim()))
            .ok_or_else(|| Error::Parse(format!("unknown variety `{s}`")))
    }

    /// Whether the left Poisson rule is part of the definition.
    pub fn has_left(self) -> bool {
        matches!(self, VarietyTag::AWBl | VarietyTag::AWBlr | VarietyTag::NPl | VarietyTag::NPlr | VarietyTag::Poisson)
    }
    /// Whether the right Poisson rule is part of the definition.
    pub fn has_right(self) -> bool {
        matches!(self, VarietyTag::AWBr | VarietyTag::AWBlr | VarietyTag::NPr | VarietyTag::NPlr | VarietyTag::Poisson)
    }
    /// Whether the bracket is required to be Leibniz.
    pub fn has_leibniz(self) -> bool {
        matches!(self, VarietyTag::Leibniz | VarietyTag::NPl | VarietyTag::NPr | VarietyTag::NPlr | VarietyTag::Poisson)
    }
    pub fn has_assoc(self) -> bool {
        !matches!(self, VarietyTag::Leibniz)
    }

    /// Identities whose conjunction defines the variety.
    pub fn defining_identities(self) -> Vec<IdentityTag> {
        let mut out = Vec::new();
        if self.has_assoc() {
            out.push(IdentityTag::Associativity);
        }
        if self.has_left() {
            out.push(IdentityTag::LeftPoisson);
        }
        if self.has_right() {
            out.push(IdentityTag::RightPoisson);
        }
        if self.has_leibniz() {
            out.push(IdentityTag::Leibniz);
        }
        if self == VarietyTag::Poisson {
            out.extend([IdentityTag::DotCommutative, IdentityTag::BracketAntisymmetric, IdentityTag::BracketAlternating]);
        }
        out
    }
}

impl fmt::Display for VarietyTag {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

/// Multilinear identities that can be checked on an algebra.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub enum IdentityTag {
    Associativity,
    /// `[a·b,c] = a·[b,c] + [a,c]·b`
    LeftPoisson,
    /// `[a,b·c] = b·[a,c] + [a,b]·c`
    RightPoisson,
    /// `[a,[b,c]] = [[a,b],c] − [[a,c],b]`
    Leibniz,
    DotCommutative,
    /// `[a,b] + [b,a] = 0`
    BracketAntisymmetric,
    /// `[a,a] = 0`
    BracketAlternating,
    /// `[a,c]·[b,d] + [a,c]·[d,b] + [b,c]·[a,d] + [c,b]·[a,d] = 0`
    BracketProducts,
    /// `a·c·[b,d] + [a,c]·d·b = c·a·[b,d] + [a,c]·b·d`
    DotBracketExchange,
    /// `[a,[b,c]] + [a,[c,b]] = 0`
    RightAntisymmetry,
    /// `[[a,c]·d,b] = [[a,c],b]·d − [a,c]·[b,d] − [b,c]·[a,d] + c·[[a,d],b] − [c·[a,d],b]`
    RightDotExpansion,
    /// `[a,b·[c,d]] + [a,[b,d]·c] = [[a,b·c],d] − [[a,d],b·c]`
    LeftDotExpansion,
    /// `[a·b,c] − [a,c·b] = a·[b,c] − c·[a,b]`
    MixedPoisson,
    /// Term-by-term form of the right side of `RightDotExpansion`.
    RightDecomposition,
    /// `[a·b,c] − [a,c·b] + [b·c,a] − [b,a·c] + [c·a,b] − [c,b·a] = 0`
    CyclicPoisson,
}

impl IdentityTag {
    pub const DERIVED: [IdentityTag; 8] = [
        IdentityTag::BracketProducts,
        IdentityTag::DotBracketExchange,
        IdentityTag::RightAntisymmetry,
        IdentityTag::RightDotExpansion,
        IdentityTag::LeftDotExpansion,
        IdentityTag::MixedPoisson,
        IdentityTag::RightDecomposition,
        IdentityTag::CyclicPoisson,
    ];

    pub const ALL: [IdentityTag; 15] = [
        IdentityTag::Associativity,
        IdentityTag::LeftPoisson,
        IdentityTag::RightPoisson,
        IdentityTag::Leibniz,
        IdentityTag::DotCommutative,
        IdentityTag::BracketAntisymmetric,
        IdentityTag::BracketAlternating,
        IdentityTag::BracketProducts,
        IdentityTag::DotBracketExchange,
        IdentityTag::RightAntisymmetry,
        IdentityTag::RightDotExpansion,
        IdentityTag::LeftDotExpansion,
        IdentityTag::MixedPoisson,
        IdentityTag::RightDecomposition,
        IdentityTag::CyclicPoisson,
    ];

    pub fn label(self) -> &'static str {
        match self {
            IdentityTag::Associativity => "assoc",
            IdentityTag::LeftPoisson => "left-poisson",
            IdentityTag::RightPoisson => "right-poisson",
            IdentityTag::Leibniz => "leibniz",
            IdentityTag::DotCommutative => "comm",
            IdentityTag::BracketAntisymmetric => "antisym",
            IdentityTag::BracketAlternating => "alt",
            IdentityTag::BracketProducts => "bracket-products",
            IdentityTag::DotBracketExchange => "dot-bracket-exchange",
            IdentityTag::RightAntisymmetry => "right-antisym",
            IdentityTag::RightDotExpansion => "right-dot-expansion",
            IdentityTag::LeftDotExpansion => "left-dot-expansion",
            IdentityTag::MixedPoisson => "mixed-poisson",
            IdentityTag::RightDecomposition => "right-decomposition",
            IdentityTag::CyclicPoisson => "cyclic-poisson",
        }
    }

    pub fn parse(s: &str) -> Result<Self> {
        let t = s.trim();
        Self::ALL
            .into_iter()
            .find(|i| i.label().eq_ignore_ascii_case(t))
            .ok_or_else(|| Error::Parse(format!("unknown identity `{s}`")))
    }

    /// Number of variables.
    pub fn arity(self) -> usize {
        match self {
            IdentityTag::BracketAlternating => 1,
            IdentityTag::DotCommutative | IdentityTag::BracketAntisymmetric => 2,
            IdentityTag::Associativity
            | IdentityTag::LeftPoisson
            | IdentityTag::RightPoisson
            | IdentityTag::Leibniz
            | IdentityTag::RightAntisymmetry
            | IdentityTag::MixedPoisson
            | IdentityTag::CyclicPoisson => 3,
            _ => 4,
        }
    }

    /// Varieties in which a derived identity is a consequence of the definitions.
    pub fn premise(self) -> Option<VarietyTag> {
        match self {
            IdentityTag::BracketProducts => Some(VarietyTag::NPlr),
            IdentityTag::DotBracketExchange => Some(VarietyTag::AWBlr),
            IdentityTag::RightAntisymmetry => Some(VarietyTag::Leibniz),
            IdentityTag::RightDotExpansion => Some(VarietyTag::NPr),
            IdentityTag::LeftDotExpansion => Some(VarietyTag::NPl),
            IdentityTag::MixedPoisson => Some(VarietyTag::AWBlr),
            IdentityTag::RightDecomposition => Some(VarietyTag::NPr),
            IdentityTag::CyclicPoisson => Some(VarietyTag::AWBlr),
            _ => None,
        }
    }
}

impl fmt::Display for IdentityTag {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.label())
    }
}

/// Operations on coordinate vectors of a fixed algebra.
struct Ev<'a, F: Field> {
    a: &'a BiAlgebra<F>,
}

type V<F> = SVec<<F as Field>::Elem>;

impl<F: Field> Ev<'_, F> {
    fn d(&self, x: &V<F>, y: &V<F>) -> V<F> {
        self.a.dot(x, y)
    }
    fn d3(&self, x: &V<F>, y: &V<F>, z: &V<F>) -> V<F> {
        self.d(&self.d(x, y), z)
    }
    fn b(&self, x: &V<F>, y: &V<F>) -> V<F> {
        self.a.bracket(x, y)
    }
    fn add(&self, x: &V<F>, y: &V<F>) -> V<F> {
        sparse_add(self.a.field(), x, y)
    }
    fn sub(&self, x: &V<F>, y: &V<F>) -> V<F> {
        sparse_sub(self.a.field(), x, y)
    }
    /// Signed sum of terms.
    fn sum(&self, terms: &[(i64, V<F>)]) -> V<F> {
        let f = self.a.field();
        let mut acc: V<F> = Vec::new();
        for (s, t) in terms {
            acc = crate::exactlin::sparse_lincomb(f, &f.one(), &acc, &f.from_i64(*s), t);
        }
        acc
    }
}

/// `lhs − rhs` of the identity at the given elements.
pub(crate) fn defect<F: Field>(a: &BiAlgebra<F>, id: IdentityTag, x: &[V<F>]) -> V<F> {
    let e = Ev { a };
    match id {
        IdentityTag::Associativity => e.sub(&e.d(&e.d(&x[0], &x[1]), &x[2]), &e.d(&x[0], &e.d(&x[1], &x[2]))),
        IdentityTag::LeftPoisson => {
            let (p, q, r) = (&x[0], &x[1], &x[2]);
            e.sum(&[(1, e.b(&e.d(p, q), r)), (-1, e.d(p, &e.b(q, r))), (-1, e.d(&e.b(p, r), q))])
        }
        IdentityTag::RightPoisson => {
            let (p, q, r) = (&x[0], &x[1], &x[2]);
            e.sum(&[(1, e.b(p, &e.d(q, r))), (-1, e.d(q, &e.b(p, r))), (-1, e.d(&e.b(p, q), r))])
        }
        IdentityTag::Leibniz => {
            let (p, q, r) = (&x[0], &x[1], &x[2]);
            e.sum(&[(1, e.b(p, &e.b(q, r))), (-1, e.b(&e.b(p, q), r)), (1, e.b(&e.b(p, r), q))])
        }
        IdentityTag::DotCommutative => e.sub(&e.d(&x[0], &x[1]), &e.d(&x[1], &x[0])),
        IdentityTag::BracketAntisymmetric => e.add(&e.b(&x[0], &x[1]), &e.b(&x[1], &x[0])),
        IdentityTag::BracketAlternating => e.b(&x[0], &x[0]),
        IdentityTag::BracketProducts => {
            let (a_, b_, c_, d_) = (&x[0], &x[1], &x[2], &x[3]);
            e.sum(&[
                (1, e.d(&e.b(a_, c_), &e.b(b_, d_))),
                (1, e.d(&e.b(a_, c_), &e.b(d_, b_))),
                (1, e.d(&e.b(b_, c_), &e.b(a_, d_))),
                (1, e.d(&e.b(c_, b_), &e.b(a_, d_))),
            ])
        }
        IdentityTag::DotBracketExchange => {
            let (a_, b_, c_, d_) = (&x[0], &x[1], &x[2], &x[3]);
            e.sum(&[
                (1, e.d3(a_, c_, &e.b(b_, d_))),
                (1, e.d3(&e.b(a_, c_), d_, b_)),
                (-1, e.d3(c_, a_, &e.b(b_, d_))),
                (-1, e.d3(&e.b(a_, c_), b_, d_)),
            ])
        }
        IdentityTag::RightAntisymmetry => {
            let (a_, b_, c_) = (&x[0], &x[1], &x[2]);
            e.add(&e.b(a_, &e.b(b_, c_)), &e.b(a_, &e.b(c_, b_)))
        }
        IdentityTag::RightDotExpansion => {
            let (a_, b_, c_, d_) = (&x[0], &x[1], &x[2], &x[3]);
            let ac = e.b(a_, c_);
            let ad = e.b(a_, d_);
            e.sum(&[
                (1, e.b(&e.d(&ac, d_), b_)),
                (-1, e.d(&e.b(&ac, b_), d_)),
                (1, e.d(&ac, &e.b(b_, d_))),
                (1, e.d(&e.b(b_, c_), &ad)),
                (-1, e.d(c_, &e.b(&ad, b_))),
                (1, e.b(&e.d(c_, &ad), b_)),
            ])
        }
        IdentityTag::LeftDotExpansion => {
            let (a_, b_, c_, d_) = (&x[0], &x[1], &x[2], &x[3]);
            let bc = e.d(b_, c_);
            e.sum(&[
                (1, e.b(a_, &e.d(b_, &e.b(c_, d_)))),
                (1, e.b(a_, &e.d(&e.b(b_, d_), c_))),
                (-1, e.b(&e.b(a_, &bc), d_)),
                (1, e.b(&e.b(a_, d_), &bc)),
            ])
        }
        IdentityTag::MixedPoisson => {
            let (a_, b_, c_) = (&x[0], &x[1], &x[2]);
            e.sum(&[
                (1, e.b(&e.d(a_, b_), c_)),
                (-1, e.b(a_, &e.d(c_, b_))),
                (-1, e.d(a_, &e.b(b_, c_))),
                (1, e.d(c_, &e.b(a_, b_))),
            ])
        }
        IdentityTag::RightDecomposition => {
            let (a_, b_, c_, d_) = (&x[0], &x[1], &x[2], &x[3]);
            let ac = e.b(a_, c_);
            let ad = e.b(a_, d_);
            e.sum(&[
                (1, e.b(&e.d(&ac, d_), b_)),
                (1, e.b(b_, &e.d(&ac, d_))),
                (-1, e.d(&e.b(&e.b(b_, a_), c_), d_)),
                (1, e.d(&e.b(&e.b(b_, c_), a_), d_)),
                (1, e.b(a_, &e.d(&e.b(b_, c_), d_))),
                (-1, e.d(&e.b(&e.b(a_, b_), c_), d_)),
                (-1, e.b(&ad, &e.d(c_, b_))),
                (1, e.d(&e.b(&ad, c_), b_)),
                (1, e.b(&e.d(c_, &ad), b_)),
            ])
        }
        IdentityTag::CyclicPoisson => {
            let (a_, b_, c_) = (&x[0], &x[1], &x[2]);
            e.sum(&[
                (1, e.b(&e.d(a_, b_), c_)),
                (-1, e.b(a_, &e.d(c_, b_))),
                (1, e.b(&e.d(b_, c_), a_)),
                (-1, e.b(b_, &e.d(a_, c_))),
                (1, e.b(&e.d(c_, a_), b_)),
                (-1, e.b(c_, &e.d(b_, a_))),
            ])
        }
    }
}

/// First basis tuple on which the identity fails.
pub fn identity_witness<F: Field>(a: &BiAlgebra<F>, id: IdentityTag) -> Option<Vec<usize>> {
    let n = a.dim();
    let k = id.arity();
    if n == 0 {
        return None;
    }
    let basis: Vec<V<F>> = (0..n).map(|i| a.basis_vec(i)).collect();
    let mut idx = vec![0usize; k];
    loop {
        let args: Vec<V<F>> = idx.iter().map(|&i| basis[i].clone()).collect();
        if !defect(a, id, &args).is_empty() {
            return Some(idx);
        }
        // for the alternating law a basis check is not enough: [x+y,x+y] involves [x,y]+[y,x]
        let mut p = k;
        loop {
            if p == 0 {
                if id == IdentityTag::BracketAlternating {
                    return alternating_pair_witness(a);
                }
                return None;
            }
            p -= 1;
            idx[p] += 1;
            if idx[p] < n {
                break;
            }
            idx[p] = 0;
        }
    }
}

/// `[x,x] = 0` on all elements needs `[e_i,e_i] = 0` and `[e_i,e_j] + [e_j,e_i] = 0`.
fn alternating_pair_witness<F: Field>(a: &BiAlgebra<F>) -> Option<Vec<usize>> {
    identity_witness(a, IdentityTag::BracketAntisymmetric)
}

/// Whether the multilinear identity holds on all of `a`.
pub fn check_identity<F: Field>(a: &BiAlgebra<F>, id: IdentityTag) -> bool {
    identity_witness(a, id).is_none()
}

/// All variety tags whose defining identities hold.
pub fn classify<F: Field>(a: &BiAlgebra<F>) -> BTreeSet<VarietyTag> {
    let mut holds = std::collections::HashMap::new();
    let mut check = |id: IdentityTag| *holds.entry(id).or_insert_with(|| check_identity(a, id));
    VarietyTag::ALL
        .into_iter()
        .filter(|t| t.defining_identities().into_iter().all(&mut check))
        .collect()
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct DerivedIdentityEntry {
    pub identity: IdentityTag,
    pub premise: VarietyTag,
    pub premise_holds: bool,
    pub holds: bool,
    /// Premise holds but the identity fails.
    pub violation: bool,
    pub witness: Option<Vec<usize>>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct DerivedIdentityReport {
    pub entries: Vec<DerivedIdentityEntry>,
    /// Characteristic 2: antisymmetry and alternation differ.
    pub char2: bool,
}

impl DerivedIdentityReport {
    pub fn has_violation(&self) -> bool {
        self.entries.iter().any(|e| e.violation)
    }
}

pub fn check_derived_identities<F: Field>(a: &BiAlgebra<F>) -> DerivedIdentityReport {
    let tags = classify(a);
    let entries = IdentityTag::DERIVED
        .into_iter()
        .map(|id| {
            let premise = id.premise().expect("derived identity has a premise");
            let witness = identity_witness(a, id);
            let premise_holds = tags.contains(&premise);
            DerivedIdentityEntry {
                identity: id,
                premise,
                premise_holds,
                holds: witness.is_none(),
                violation: premise_holds && witness.is_some(),
                witness,
            }
        })
        .collect();
    DerivedIdentityReport { entries, char2: a.field().characteristic() == 2 }
}

#[cfg(test)]
mod tests {
    use super::super::samples::*;
    use super::super::{commutator_bracket, BiAlgebra};
    use super::*;
    use crate::exactlin::{PrimeField, Rationals};

    #[test]
    fn zero_algebra_has_every_tag() {
        let a = BiAlgebra::zero(&Rationals, 3);
        assert_eq!(classify(&a).len(), 9);
        for id in IdentityTag::ALL {
            assert!(check_identity(&a, id));
        }
    }

    #[test]
    fn upper_triangular_commutator_is_nplr_not_poisson() {
        let a = commutator_bracket(&upper_triangular(&Rationals)).unwrap();
        assert!(check_identity(&a, IdentityTag::LeftPoisson));
        let tags = classify(&a);
        assert!(tags.contains(&VarietyTag::NPlr));
        assert!(!tags.contains(&VarietyTag::Poisson));
        assert!(!check_derived_identities(&a).has_violation());
    }

    #[test]
    fn dot_zero_leibniz() {
        let a = leibniz_xx(&Rationals);
        assert!(check_identity(&a, IdentityTag::Leibniz));
        let expected: BTreeSet<_> = VarietyTag::ALL.into_iter().filter(|t| *t != VarietyTag::Poisson).collect();
        assert_eq!(classify(&a), expected);
        let b = leibniz_xx(&PrimeField::new(2).unwrap());
        assert!(!classify(&b).contains(&VarietyTag::Poisson));
    }

    #[test]
    fn alternating_in_char_two() {
        // [x,y] = z = [y,x], [x,x] = [y,y] = 0: antisymmetric in char 2 only, never alternating on x+y
        let f2 = PrimeField::new(2).unwrap();
        let a = BiAlgebra::from_entries(&f2, 3, &[], &[(0, 1, 2, 1), (1, 0, 2, 1)]);
        assert!(check_identity(&a, IdentityTag::BracketAntisymmetric));
        assert!(check_identity(&a, IdentityTag::BracketAlternating));
        let b = BiAlgebra::from_entries(&f2, 2, &[], &[(0, 0, 1, 1)]);
        assert!(check_identity(&b, IdentityTag::BracketAntisymmetric));
        assert!(!check_identity(&b, IdentityTag::BracketAlternating));
    }

    #[test]
    fn witness_is_located() {
        let mut a = commutator_bracket(&upper_triangular(&Rationals)).unwrap();
        a.set_dot(0, 1, vec![(1, Rationals.from_i64(2))]);
        assert!(identity_witness(&a, IdentityTag::Associativity).is_some());
        assert!(!classify(&a).contains(&VarietyTag::NPlr));
    }
}
