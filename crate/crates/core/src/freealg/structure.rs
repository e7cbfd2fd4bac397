//! Finite stand-ins for free algebras and the checks on their underlying algebras.

use std::collections::{BTreeMap, HashMap};

use serde::Serialize;

use super::free::{FreeAlgebra, FreeElement};
use super::term::Term;
use super::word::{multidegrees, Word};
use crate::algebra::{BiAlgebra, VarietyTag};
use crate::exactlin::{Echelon, Field, PivotRule, SVec};
use crate::{Error, Result};

/// Normal words of degree `≤ d` with products landing above `d` set to zero.
pub fn truncated_free_algebra<F: Field>(alg: &FreeAlgebra<F>, d: usize) -> Result<(BiAlgebra<F>, Vec<Word>)> {
    if d == 0 {
        return Err(Error::RangeTooSmall("truncation degree must be at least 1".into()));
    }
    let mut words = Vec::new();
    for n in 1..=d {
        words.extend(alg.enumerate_basis(n)?);
    }
    let index: HashMap<&Word, usize> = words.iter().enumerate().map(|(i, w)| (w, i)).collect();
    let f = alg.field();
    let mut out = BiAlgebra::zero(f, words.len());
    let single = |w: &Word| FreeElement { variety: alg.variety(), terms: BTreeMap::from([(w.clone(), f.one())]) };
    let coords = |x: FreeElement<F>| -> SVec<F::Elem> {
        let mut v: SVec<F::Elem> = x.terms.into_iter().map(|(w, c)| (index[&w], c)).collect();
        v.sort_by_key(|(i, _)| *i);
        v
    };
    for (i, u) in words.iter().enumerate() {
        for (j, v) in words.iter().enumerate() {
            if u.degree() + v.degree() > d {
                continue;
            }
            out.set_dot(i, j, coords(alg.free_dot(&single(u), &single(v))?));
            out.set_bracket(i, j, coords(alg.free_bracket(&single(u), &single(v))?));
        }
    }
    let names = words.iter().map(|w| alg.format_word(w)).collect();
    Ok((out.with_names(names), words))
}

/// Which underlying structure is claimed to be free.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum UnderlyingKind {
    Assoc,
    Leibniz,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct MultidegreeCheck {
    pub multidegree: Vec<u8>,
    pub dim: usize,
    /// New free generators chosen in this multidegree.
    pub chosen: Vec<String>,
    /// Free associative (resp. left-normed Leibniz) words on the chosen generators.
    pub free_words: usize,
    pub rank: usize,
    pub spans: bool,
    pub independent: bool,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct FreeBasisReport {
    pub variety: VarietyTag,
    pub kind: UnderlyingKind,
    pub generators: Vec<String>,
    pub max_degree: usize,
    pub checks: Vec<MultidegreeCheck>,
    pub holds: bool,
}

/// Chooses free generators degree by degree (bracket-type words for the associative
/// structure, dot-type words for the Leibniz one) and checks that the free words on
/// them form a basis of every graded piece up to `max_degree`.
pub fn underlying_free_basis_report<F: Field>(
    alg: &FreeAlgebra<F>,
    kind: UnderlyingKind,
    max_degree: usize,
) -> Result<FreeBasisReport> {
    let f = alg.field();
    let g = alg.gens().len();
    let op = |a: &FreeElement<F>, b: &FreeElement<F>| match kind {
        UnderlyingKind::Assoc => alg.free_dot(a, b),
        UnderlyingKind::Leibniz => alg.free_bracket(a, b),
    };
    let single = |w: &Word| FreeElement { variety: alg.variety(), terms: BTreeMap::from([(w.clone(), f.one())]) };
    let mut chosen: BTreeMap<Vec<u8>, Vec<FreeElement<F>>> = BTreeMap::new();
    let mut free_words: BTreeMap<Vec<u8>, Vec<FreeElement<F>>> = BTreeMap::new();
    let mut checks = Vec::new();
    for n in 1..=max_degree {
        for md in multidegrees(g, n) {
            let basis = alg.basis_in(&md)?;
            let index: HashMap<&Word, usize> = basis.iter().enumerate().map(|(i, w)| (w, i)).collect();
            let to_vec = |x: &FreeElement<F>| -> SVec<F::Elem> {
                let mut v: SVec<F::Elem> = x.terms.iter().map(|(w, c)| (index[w], c.clone())).collect();
                v.sort_by_key(|(i, _)| *i);
                v
            };
            let splits: Vec<(Vec<u8>, Vec<u8>)> = free_words
                .keys()
                .filter(|a| a.iter().zip(&md).all(|(x, y)| x <= y) && **a != md)
                .map(|a| (a.clone(), md.iter().zip(a).map(|(x, y)| x - y).collect()))
                .collect();
            // decomposables: products of lower-degree elements
            let mut span = Echelon::new(f, basis.len(), PivotRule::LowestIndex.order(basis.len(), None), false);
            for (a, b) in &splits {
                for u in alg.basis_in(a)? {
                    for v in alg.basis_in(b)? {
                        span.insert(&to_vec(&op(&single(&u), &single(&v))?));
                    }
                }
            }
            let mut new_gens = Vec::new();
            for w in &basis {
                let candidate = match kind {
                    UnderlyingKind::Assoc => !matches!(w, Word::Dot(_)),
                    UnderlyingKind::Leibniz => !w.is_bracket(),
                };
                if candidate && matches!(span.insert(&to_vec(&single(w))), crate::exactlin::Insert::Independent(_)) {
                    new_gens.push(single(w));
                }
            }
            let spans = span.rank() == basis.len();
            let mut words: Vec<FreeElement<F>> = new_gens.clone();
            for (a, b) in &splits {
                if let (Some(left), Some(right)) = (free_words.get(a), chosen.get(b)) {
                    for u in left {
                        for y in right {
                            words.push(op(u, y)?);
                        }
                    }
                }
            }
            let mut ech = Echelon::new(f, basis.len(), PivotRule::LowestIndex.order(basis.len(), None), false);
            for w in &words {
                ech.insert(&to_vec(w));
            }
            let rank = ech.rank();
            checks.push(MultidegreeCheck {
                multidegree: md.clone(),
                dim: basis.len(),
                chosen: new_gens
                    .iter()
                    .map(|x| alg.format_word(x.terms.keys().next().expect("single word")))
                    .collect(),
                free_words: words.len(),
                rank,
                spans,
                independent: rank == words.len(),
            });
            chosen.insert(md.clone(), new_gens);
            free_words.insert(md, words);
        }
    }
    let holds = checks.iter().all(|c| c.spans && c.independent && c.rank == c.dim);
    Ok(FreeBasisReport {
        variety: alg.variety(),
        kind,
        generators: alg.gens().to_vec(),
        max_degree,
        checks,
        holds,
    })
}

/// A vanishing combination of distinct associative words on brackets and generators.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct DependenceWitness {
    pub variety: VarietyTag,
    pub words: Vec<String>,
    pub coefficients: Vec<i64>,
    pub words_nonzero: bool,
    pub combination_vanishes: bool,
}

impl DependenceWitness {
    pub fn holds(&self) -> bool {
        self.words_nonzero && self.combination_vanishes
    }
}

/// `a·c·[b,d] + [a,c]·d·b − c·a·[b,d] − [a,c]·b·d` in the free algebra on `a, b, c, d`.
pub fn associative_dependence_witness<F: Field>(field: &F, variety: VarietyTag) -> Result<DependenceWitness> {
    let gens: Vec<String> = ["a", "b", "c", "d"].iter().map(|s| s.to_string()).collect();
    let alg = FreeAlgebra::new(field, variety, gens)?;
    let words = ["a*c*[b,d]", "[a,c]*d*b", "c*a*[b,d]", "[a,c]*b*d"];
    let coefficients = vec![1, 1, -1, -1];
    let mut total = FreeElement::zero(variety);
    let mut nonzero = true;
    for (w, c) in words.iter().zip(&coefficients) {
        let x = alg.normalize(&Term::parse(w, alg.gens())?)?;
        nonzero &= !x.is_zero();
        total = alg.add(&total, &x, &field.from_i64(*c));
    }
    Ok(DependenceWitness {
        variety,
        words: words.iter().map(|s| s.to_string()).collect(),
        coefficients,
        words_nonzero: nonzero,
        combination_vanishes: total.is_zero(),
    })
}
