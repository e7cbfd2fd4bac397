//! Evaluation of words and terms in a target algebra.

use super::free::FreeElement;
use super::term::Term;
use super::word::Word;
use crate::algebra::{classify, BiAlgebra, VarietyTag};
use crate::exactlin::{sparse_lincomb, Field, SVec};
use crate::{Error, Result};

/// Direct recursive evaluation of a term under generator images.
pub fn interpret<F: Field>(t: &Term, images: &[SVec<F::Elem>], b: &BiAlgebra<F>) -> SVec<F::Elem> {
    match t {
        Term::Gen(i) => images[*i].clone(),
        Term::Dot(x, y) => b.dot(&interpret(x, images, b), &interpret(y, images, b)),
        Term::Bracket(x, y) => b.bracket(&interpret(x, images, b), &interpret(y, images, b)),
    }
}

/// The homomorphism from the free algebra extending generator images.
pub struct Evaluator<'a, F: Field> {
    target: &'a BiAlgebra<F>,
    images: Vec<SVec<F::Elem>>,
}

pub fn extend_map<'a, F: Field>(
    variety: VarietyTag,
    images: Vec<SVec<F::Elem>>,
    target: &'a BiAlgebra<F>,
) -> Result<Evaluator<'a, F>> {
    if !classify(target).contains(&variety) {
        return Err(Error::VarietyMismatch(format!("target algebra is not {variety}")));
    }
    Ok(Evaluator { target, images })
}

impl<F: Field> Evaluator<'_, F> {
    pub fn eval_word(&self, w: &Word) -> SVec<F::Elem> {
        match w {
            Word::Gen(i) => self.images[*i as usize].clone(),
            Word::Dot(v) => {
                let mut acc = self.eval_word(&v[0]);
                for x in &v[1..] {
                    acc = self.target.dot(&acc, &self.eval_word(x));
                }
                acc
            }
            Word::Bracket(a, b) => self.target.bracket(&self.eval_word(a), &self.eval_word(b)),
        }
    }

    pub fn eval(&self, x: &FreeElement<F>) -> SVec<F::Elem> {
        let f = self.target.field();
        let mut acc = Vec::new();
        for (w, c) in &x.terms {
            acc = sparse_lincomb(f, &f.one(), &acc, c, &self.eval_word(w));
        }
        acc
    }
}
