//! Free algebras of the bracketed varieties: rewriting, relation tables, normal forms.
//!
//! Normal forms come in two stages. First the defining identities are applied as rewrite
//! rules (each strictly lowers the multiset of (right size, left size) over bracket nodes,
//! so rewriting stops). Then the result is reduced modulo the span of
//! `ρ(t) − ρ(t')` over all words `t` and all single rule applications `t → t'` in that
//! multidegree, which is exactly the image of the defining relations. The residual is
//! canonical, whatever strategy produced the first stage.

use std::collections::{BTreeMap, HashMap};
use std::sync::{Arc, Mutex};

use super::term::Term;
use super::word::{multidegrees, RawWords, Word};
use crate::algebra::VarietyTag;
use crate::exactlin::{Echelon, Field, SVec};
use crate::{Error, Result};

pub type Lin<E> = BTreeMap<Word, E>;

pub const DEFAULT_DEGREE_CAP: usize = 12;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Strategy {
    /// Children first; at a bracket try the left Poisson rule, then the right one, then Leibniz, splitting off the first factor.
    Innermost,
    /// Outermost redex first; Leibniz, then the right Poisson rule, then the left one, splitting off the last factor.
    Outermost,
}

/// Element of a free algebra: normal words with nonzero coefficients.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FreeElement<F: Field> {
    pub variety: VarietyTag,
    pub terms: Lin<F::Elem>,
}

impl<F: Field> FreeElement<F> {
    pub fn zero(variety: VarietyTag) -> Self {
        FreeElement { variety, terms: Lin::new() }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }
}

fn lin_add<F: Field>(f: &F, acc: &mut Lin<F::Elem>, w: Word, c: &F::Elem) {
    if f.is_zero(c) {
        return;
    }
    match acc.get_mut(&w) {
        Some(x) => {
            *x = f.add(x, c);
            if f.is_zero(x) {
                acc.remove(&w);
            }
        }
        None => {
            acc.insert(w, c.clone());
        }
    }
}

fn splice(list: &[Word], i: usize, w: Word) -> Word {
    let mut v = list[..i].to_vec();
    match w {
        Word::Dot(x) => v.extend(x),
        x => v.push(x),
    }
    v.extend_from_slice(&list[i + 1..]);
    Word::Dot(v)
}

struct Table<F: Field> {
    index: HashMap<Word, usize>,
    words: Vec<Word>,
    ech: Echelon<F>,
    normal: Vec<Word>,
}

pub struct FreeAlgebra<F: Field> {
    field: F,
    variety: VarietyTag,
    gens: Vec<String>,
    degree_cap: usize,
    raw: Mutex<RawWords>,
    rho: Mutex<HashMap<(Strategy, Word), Lin<F::Elem>>>,
    tables: Mutex<HashMap<Vec<u8>, Arc<Table<F>>>>,
}

impl<F: Field> FreeAlgebra<F> {
    pub fn new(field: &F, variety: VarietyTag, gens: Vec<String>) -> Result<Self> {
        if !VarietyTag::BRACKETED.contains(&variety) {
            return Err(Error::VarietyMismatch(format!("no free algebra construction for {variety}")));
        }
        if gens.is_empty() {
            return Err(Error::Parse("at least one generator is needed".into()));
        }
        Ok(FreeAlgebra {
            field: field.clone(),
            variety,
            gens,
            degree_cap: DEFAULT_DEGREE_CAP,
            raw: Mutex::new(RawWords::default()),
            rho: Mutex::new(HashMap::new()),
            tables: Mutex::new(HashMap::new()),
        })
    }

    pub fn with_degree_cap(mut self, cap: usize) -> Self {
        self.degree_cap = cap;
        self
    }

    pub fn field(&self) -> &F {
        &self.field
    }
    pub fn variety(&self) -> VarietyTag {
        self.variety
    }
    pub fn gens(&self) -> &[String] {
        &self.gens
    }

    fn check_degree(&self, d: usize) -> Result<()> {
        if d > self.degree_cap {
            Err(Error::DegreeCap(d, self.degree_cap))
        } else {
            Ok(())
        }
    }

    pub fn parse(&self, s: &str) -> Result<Term> {
        Term::parse(s, &self.gens)
    }

    // ---- stage one ----

    fn root_rewrite(&self, u: &Word, v: &Word, s: Strategy) -> Option<Vec<(Word, F::Elem)>> {
        let f = &self.field;
        let one = f.one();
        let left = || -> Option<Vec<(Word, F::Elem)>> {
            let Word::Dot(l) = u else { return None };
            if !self.variety.has_left() {
                return None;
            }
            let k = if s == Strategy::Innermost { 1 } else { l.len() - 1 };
            let (a, b) = (Word::product(&l[..k]), Word::product(&l[k..]));
            Some(vec![
                (Word::dot(a.clone(), Word::bracket(b.clone(), v.clone())), one.clone()),
                (Word::dot(Word::bracket(a, v.clone()), b), one.clone()),
            ])
        };
        let right = || -> Option<Vec<(Word, F::Elem)>> {
            let Word::Dot(l) = v else { return None };
            if !self.variety.has_right() {
                return None;
            }
            let k = if s == Strategy::Innermost { 1 } else { l.len() - 1 };
            let (b, c) = (Word::product(&l[..k]), Word::product(&l[k..]));
            Some(vec![
                (Word::dot(b.clone(), Word::bracket(u.clone(), c.clone())), one.clone()),
                (Word::dot(Word::bracket(u.clone(), b), c), one.clone()),
            ])
        };
        let jacobi = || -> Option<Vec<(Word, F::Elem)>> {
            let Word::Bracket(b, c) = v else { return None };
            if !self.variety.has_leibniz() {
                return None;
            }
            Some(vec![
                (Word::bracket(Word::bracket(u.clone(), (**b).clone()), (**c).clone()), one.clone()),
                (Word::bracket(Word::bracket(u.clone(), (**c).clone()), (**b).clone()), f.neg(&one)),
            ])
        };
        match s {
            Strategy::Innermost => left().or_else(right).or_else(jacobi),
            Strategy::Outermost => jacobi().or_else(right).or_else(left),
        }
    }

    /// Every single application of a defining identity, at every position and split.
    fn all_steps(&self, w: &Word) -> Vec<Vec<(Word, F::Elem)>> {
        let f = &self.field;
        let one = f.one();
        let mut out = Vec::new();
        match w {
            Word::Gen(_) => {}
            Word::Dot(list) => {
                for (i, x) in list.iter().enumerate() {
                    for st in self.all_steps(x) {
                        out.push(st.into_iter().map(|(y, c)| (splice(list, i, y), c)).collect());
                    }
                }
            }
            Word::Bracket(u, v) => {
                if let (Word::Dot(l), true) = (&**u, self.variety.has_left()) {
                    for k in 1..l.len() {
                        let (a, b) = (Word::product(&l[..k]), Word::product(&l[k..]));
                        out.push(vec![
                            (Word::dot(a.clone(), Word::bracket(b.clone(), (**v).clone())), one.clone()),
                            (Word::dot(Word::bracket(a, (**v).clone()), b), one.clone()),
                        ]);
                    }
                }
                if let (Word::Dot(l), true) = (&**v, self.variety.has_right()) {
                    for k in 1..l.len() {
                        let (b, c) = (Word::product(&l[..k]), Word::product(&l[k..]));
                        out.push(vec![
                            (Word::dot(b.clone(), Word::bracket((**u).clone(), c.clone())), one.clone()),
                            (Word::dot(Word::bracket((**u).clone(), b), c), one.clone()),
                        ]);
                    }
                }
                if let (Word::Bracket(b, c), true) = (&**v, self.variety.has_leibniz()) {
                    out.push(vec![
                        (Word::bracket(Word::bracket((**u).clone(), (**b).clone()), (**c).clone()), one.clone()),
                        (Word::bracket(Word::bracket((**u).clone(), (**c).clone()), (**b).clone()), f.neg(&one)),
                    ]);
                }
                for st in self.all_steps(u) {
                    out.push(st.into_iter().map(|(y, c)| (Word::bracket(y, (**v).clone()), c)).collect());
                }
                for st in self.all_steps(v) {
                    out.push(st.into_iter().map(|(y, c)| (Word::bracket((**u).clone(), y), c)).collect());
                }
            }
        }
        out
    }

    fn outer_step(&self, w: &Word) -> Option<Vec<(Word, F::Elem)>> {
        match w {
            Word::Gen(_) => None,
            Word::Dot(list) => list.iter().enumerate().find_map(|(i, x)| {
                self.outer_step(x).map(|st| st.into_iter().map(|(y, c)| (splice(list, i, y), c)).collect())
            }),
            Word::Bracket(u, v) => self
                .root_rewrite(u, v, Strategy::Outermost)
                .or_else(|| {
                    self.outer_step(u).map(|st| st.into_iter().map(|(y, c)| (Word::bracket(y, (**v).clone()), c)).collect())
                })
                .or_else(|| {
                    self.outer_step(v).map(|st| st.into_iter().map(|(y, c)| (Word::bracket((**u).clone(), y), c)).collect())
                }),
        }
    }

    /// True when no rewrite rule applies anywhere in `w`.
    pub fn is_reduced(&self, w: &Word) -> bool {
        self.outer_step(w).is_none()
    }

    fn single(&self, w: &Word) -> Lin<F::Elem> {
        let mut l = Lin::new();
        l.insert(w.clone(), self.field.one());
        l
    }

    /// First-stage rewriting only.
    pub fn rewrite(&self, w: &Word, s: Strategy) -> Lin<F::Elem> {
        if let Some(l) = self.rho.lock().expect("cache").get(&(s, w.clone())) {
            return l.clone();
        }
        let f = &self.field;
        let out = match s {
            Strategy::Outermost => match self.outer_step(w) {
                None => self.single(w),
                Some(st) => self.rewrite_sum(&st, s),
            },
            Strategy::Innermost => match w {
                Word::Gen(_) => self.single(w),
                Word::Dot(list) => {
                    let mut acc = self.rewrite(&list[0], s);
                    for x in &list[1..] {
                        let rx = self.rewrite(x, s);
                        let mut next = Lin::new();
                        for (a, ca) in &acc {
                            for (b, cb) in &rx {
                                lin_add(f, &mut next, Word::dot(a.clone(), b.clone()), &f.mul(ca, cb));
                            }
                        }
                        acc = next;
                    }
                    acc
                }
                Word::Bracket(a, b) => {
                    let (ra, rb) = (self.rewrite(a, s), self.rewrite(b, s));
                    let trivial = |r: &Lin<F::Elem>, x: &Word| r.len() == 1 && r.get(x).is_some_and(|c| f.is_one(c));
                    if trivial(&ra, a) && trivial(&rb, b) {
                        match self.root_rewrite(a, b, s) {
                            None => self.single(w),
                            Some(st) => self.rewrite_sum(&st, s),
                        }
                    } else {
                        let mut acc = Lin::new();
                        for (u, cu) in &ra {
                            for (v, cv) in &rb {
                                let c = f.mul(cu, cv);
                                for (y, cy) in self.rewrite(&Word::bracket(u.clone(), v.clone()), s) {
                                    lin_add(f, &mut acc, y, &f.mul(&c, &cy));
                                }
                            }
                        }
                        acc
                    }
                }
            },
        };
        self.rho.lock().expect("cache").insert((s, w.clone()), out.clone());
        out
    }

    fn rewrite_sum(&self, terms: &[(Word, F::Elem)], s: Strategy) -> Lin<F::Elem> {
        let f = &self.field;
        let mut acc = Lin::new();
        for (y, c) in terms {
            for (z, cz) in self.rewrite(y, s) {
                lin_add(f, &mut acc, z, &f.mul(c, &cz));
            }
        }
        acc
    }

    // ---- stage two ----

    fn table(&self, md: &[u8]) -> Arc<Table<F>> {
        if let Some(t) = self.tables.lock().expect("cache").get(md) {
            return t.clone();
        }
        let f = &self.field;
        let raw = self.raw.lock().expect("cache").all(md);
        let mut words: Vec<Word> = raw.iter().filter(|w| self.is_reduced(w)).cloned().collect();
        words.sort();
        let index: HashMap<Word, usize> = words.iter().cloned().enumerate().map(|(i, w)| (w, i)).collect();
        let mut order: Vec<usize> = (0..words.len()).collect();
        order.sort_by(|&i, &j| {
            let key = |k: usize| (words[k].badness(self.variety), &words[k]);
            key(j).cmp(&key(i))
        });
        let mut ech = Echelon::new(f, words.len(), order, false);
        let to_vec = |l: &Lin<F::Elem>| -> SVec<F::Elem> {
            let mut v: SVec<F::Elem> = l.iter().map(|(w, c)| (index[w], c.clone())).collect();
            v.sort_by_key(|(i, _)| *i);
            v
        };
        for t in &raw {
            let steps = self.all_steps(t);
            if steps.is_empty() {
                continue;
            }
            let rt = self.rewrite(t, Strategy::Innermost);
            for st in steps {
                let mut rel = rt.clone();
                for (z, c) in self.rewrite_sum(&st, Strategy::Innermost) {
                    lin_add(f, &mut rel, z, &f.neg(&c));
                }
                if !rel.is_empty() {
                    ech.insert(&to_vec(&rel));
                }
            }
        }
        let mut is_pivot = vec![false; words.len()];
        for &p in ech.pivots() {
            is_pivot[p] = true;
        }
        let normal = words.iter().enumerate().filter(|(i, _)| !is_pivot[*i]).map(|(_, w)| w.clone()).collect();
        let t = Arc::new(Table { index, words, ech, normal });
        self.tables.lock().expect("cache").insert(md.to_vec(), t.clone());
        t
    }

    /// Canonical representative of a combination of reduced words.
    fn reduce(&self, l: Lin<F::Elem>) -> Lin<F::Elem> {
        let f = &self.field;
        let mut groups: BTreeMap<Vec<u8>, Vec<(Word, F::Elem)>> = BTreeMap::new();
        for (w, c) in l {
            groups.entry(w.multidegree(self.gens.len())).or_default().push((w, c));
        }
        let mut out = Lin::new();
        for (md, terms) in groups {
            let t = self.table(&md);
            let mut v: SVec<F::Elem> = terms.iter().map(|(w, c)| (t.index[w], c.clone())).collect();
            v.sort_by_key(|(i, _)| *i);
            let (_, res) = t.ech.reduce(&v);
            for (i, c) in res {
                lin_add(f, &mut out, t.words[i].clone(), &c);
            }
        }
        out
    }

    pub fn normalize_word(&self, w: &Word, s: Strategy) -> Result<FreeElement<F>> {
        self.check_degree(w.degree())?;
        if w.max_gen() as usize >= self.gens.len() {
            return Err(Error::UnknownGenerator(format!("generator index {}", w.max_gen())));
        }
        let terms = self.reduce(self.rewrite(w, s));
        Ok(FreeElement { variety: self.variety, terms })
    }

    pub fn normalize(&self, t: &Term) -> Result<FreeElement<F>> {
        self.normalize_with(t, Strategy::Innermost)
    }

    pub fn normalize_with(&self, t: &Term, s: Strategy) -> Result<FreeElement<F>> {
        self.check_degree(t.degree())?;
        self.normalize_word(&t.to_word(), s)
    }

    pub fn generator(&self, i: usize) -> FreeElement<F> {
        let mut terms = Lin::new();
        terms.insert(Word::Gen(i as u32), self.field.one());
        FreeElement { variety: self.variety, terms }
    }

    fn product(&self, a: &FreeElement<F>, b: &FreeElement<F>, op: fn(Word, Word) -> Word) -> Result<FreeElement<F>> {
        for x in [a, b] {
            if x.variety != self.variety {
                return Err(Error::VarietyMismatch(format!("element of {} in free {}", x.variety, self.variety)));
            }
        }
        let f = &self.field;
        let mut acc = Lin::new();
        for (u, cu) in &a.terms {
            for (v, cv) in &b.terms {
                self.check_degree(u.degree() + v.degree())?;
                let c = f.mul(cu, cv);
                for (z, cz) in self.rewrite(&op(u.clone(), v.clone()), Strategy::Innermost) {
                    lin_add(f, &mut acc, z, &f.mul(&c, &cz));
                }
            }
        }
        Ok(FreeElement { variety: self.variety, terms: self.reduce(acc) })
    }

    pub fn free_dot(&self, a: &FreeElement<F>, b: &FreeElement<F>) -> Result<FreeElement<F>> {
        self.product(a, b, Word::dot)
    }

    pub fn free_bracket(&self, a: &FreeElement<F>, b: &FreeElement<F>) -> Result<FreeElement<F>> {
        self.product(a, b, Word::bracket)
    }

    pub fn add(&self, a: &FreeElement<F>, b: &FreeElement<F>, cb: &F::Elem) -> FreeElement<F> {
        let mut terms = a.terms.clone();
        for (w, c) in &b.terms {
            lin_add(&self.field, &mut terms, w.clone(), &self.field.mul(cb, c));
        }
        FreeElement { variety: self.variety, terms }
    }

    /// Normal words of one multidegree, sorted.
    pub fn basis_in(&self, md: &[u8]) -> Result<Vec<Word>> {
        self.check_degree(md.iter().map(|&x| x as usize).sum())?;
        Ok(self.table(md).normal.clone())
    }

    /// Normal words of total degree `n`, sorted.
    pub fn enumerate_basis(&self, n: usize) -> Result<Vec<Word>> {
        if n == 0 {
            return Ok(Vec::new());
        }
        let mut out = Vec::new();
        for md in multidegrees(self.gens.len(), n) {
            out.extend(self.basis_in(&md)?);
        }
        out.sort();
        Ok(out)
    }

    pub fn format_word(&self, w: &Word) -> String {
        w.format(&self.gens)
    }

    pub fn format(&self, x: &FreeElement<F>) -> String {
        if x.terms.is_empty() {
            return "0".into();
        }
        let f = &self.field;
        x.terms
            .iter()
            .map(|(w, c)| {
                let ws = self.format_word(w);
                if f.is_one(c) {
                    ws
                } else {
                    format!("{} {ws}", f.format_elem(c))
                }
            })
            .collect::<Vec<_>>()
            .join(" + ")
    }
}

/// Result of comparing the two rewriting strategies on every word up to a degree.
#[derive(Clone, Debug, PartialEq, Eq, serde::Serialize)]
pub struct ConfluenceReport {
    pub words_checked: usize,
    /// Words where the two first-stage results already coincide.
    pub first_stage_agreements: usize,
    pub disagreements: usize,
}

pub fn confluence_check<F: Field>(alg: &FreeAlgebra<F>, max_degree: usize) -> Result<ConfluenceReport> {
    alg.check_degree(max_degree)?;
    let mut rep = ConfluenceReport { words_checked: 0, first_stage_agreements: 0, disagreements: 0 };
    for n in 1..=max_degree {
        for md in multidegrees(alg.gens.len(), n) {
            let raw = alg.raw.lock().expect("cache").all(&md);
            for w in raw {
                let a = alg.rewrite(&w, Strategy::Innermost);
                let b = alg.rewrite(&w, Strategy::Outermost);
                rep.words_checked += 1;
                if a == b {
                    rep.first_stage_agreements += 1;
                }
                if alg.reduce(a) != alg.reduce(b) {
                    rep.disagreements += 1;
                }
            }
        }
    }
    Ok(rep)
}

/// All words of a multidegree, reduced or not.
pub fn raw_words<F: Field>(alg: &FreeAlgebra<F>, md: &[u8]) -> Vec<Word> {
    alg.raw.lock().expect("cache").all(md)
}
