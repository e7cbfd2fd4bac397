//! Words: terms with associativity of the dot product built in.

use std::collections::HashMap;

use crate::algebra::VarietyTag;

/// `Dot` holds at least two factors, none of them a `Dot`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Word {
    Gen(u32),
    Dot(Vec<Word>),
    Bracket(Box<Word>, Box<Word>),
}

impl Word {
    /// Flattening product.
    pub fn dot(a: Word, b: Word) -> Word {
        let mut v = match a {
            Word::Dot(v) => v,
            w => vec![w],
        };
        match b {
            Word::Dot(w) => v.extend(w),
            w => v.push(w),
        }
        Word::Dot(v)
    }

    pub fn bracket(a: Word, b: Word) -> Word {
        Word::Bracket(Box::new(a), Box::new(b))
    }

    /// Product of a nonempty factor list.
    pub fn product(factors: &[Word]) -> Word {
        match factors {
            [w] => w.clone(),
            _ => Word::Dot(factors.to_vec()),
        }
    }

    pub fn degree(&self) -> usize {
        match self {
            Word::Gen(_) => 1,
            Word::Dot(v) => v.iter().map(Word::degree).sum(),
            Word::Bracket(a, b) => a.degree() + b.degree(),
        }
    }

    pub fn multidegree(&self, gens: usize) -> Vec<u8> {
        let mut md = vec![0u8; gens];
        self.add_multidegree(&mut md);
        md
    }

    fn add_multidegree(&self, md: &mut [u8]) {
        match self {
            Word::Gen(i) => md[*i as usize] += 1,
            Word::Dot(v) => v.iter().for_each(|w| w.add_multidegree(md)),
            Word::Bracket(a, b) => {
                a.add_multidegree(md);
                b.add_multidegree(md);
            }
        }
    }

    pub fn max_gen(&self) -> u32 {
        match self {
            Word::Gen(i) => *i,
            Word::Dot(v) => v.iter().map(Word::max_gen).max().unwrap_or(0),
            Word::Bracket(a, b) => a.max_gen().max(b.max_gen()),
        }
    }

    pub fn is_bracket(&self) -> bool {
        matches!(self, Word::Bracket(..))
    }

    pub fn format(&self, gens: &[String]) -> String {
        match self {
            Word::Gen(i) => gens[*i as usize].clone(),
            Word::Dot(v) => v.iter().map(|w| w.format(gens)).collect::<Vec<_>>().join("*"),
            Word::Bracket(a, b) => format!("[{},{}]", a.format(gens), b.format(gens)),
        }
    }

    fn visit(&self, f: &mut impl FnMut(&Word)) {
        f(self);
        match self {
            Word::Gen(_) => {}
            Word::Dot(v) => v.iter().for_each(|w| w.visit(f)),
            Word::Bracket(a, b) => {
                a.visit(f);
                b.visit(f);
            }
        }
    }

    /// Preference weight for elimination: words with more disfavoured patterns are
    /// rewritten in terms of the others when the free algebra has a choice.
    pub fn badness(&self, v: VarietyTag) -> usize {
        let mut n = 0;
        self.visit(&mut |w| match (v, w) {
            (VarietyTag::NPr, Word::Bracket(a, _)) => {
                if matches!(&**a, Word::Dot(f) if f[0].is_bracket()) {
                    n += 1;
                }
            }
            (VarietyTag::NPl, Word::Bracket(_, b)) => {
                if matches!(&**b, Word::Dot(f) if f[0].is_bracket()) {
                    n += 1;
                }
            }
            (VarietyTag::NPlr | VarietyTag::AWBlr, Word::Dot(f)) => {
                for k in 0..f.len() {
                    if k + 2 < f.len() && !f[k].is_bracket() && !f[k + 1].is_bracket() && f[k + 2].is_bracket() && f[k] > f[k + 1] {
                        n += 1;
                    }
                    if k + 1 < f.len() && f[k].is_bracket() {
                        if let Word::Bracket(u, w) = &f[k + 1] {
                            if u > w {
                                n += 1;
                            }
                        }
                    }
                }
            }
            _ => {}
        });
        n
    }

    /// Subword patterns the rewriting removes for the variety.
    pub fn forbidden_patterns(&self, v: VarietyTag) -> Vec<&'static str> {
        let mut out = Vec::new();
        self.visit(&mut |w| {
            if let Word::Bracket(a, b) = w {
                if v.has_leibniz() && b.is_bracket() {
                    out.push("[a,[b,c]]");
                }
                if v.has_left() && matches!(&**a, Word::Dot(_)) {
                    out.push("[a*b,c]");
                }
                if v.has_right() && matches!(&**b, Word::Dot(_)) {
                    out.push("[a,b*c]");
                }
            }
        });
        out
    }
}

fn sub_multidegrees(md: &[u8]) -> Vec<Vec<u8>> {
    let mut out = vec![Vec::new()];
    for &k in md {
        out = out
            .into_iter()
            .flat_map(|p: Vec<u8>| {
                (0..=k).map(move |x| {
                    let mut q = p.clone();
                    q.push(x);
                    q
                })
            })
            .collect();
    }
    let total: usize = md.iter().map(|&x| x as usize).sum();
    out.retain(|a| {
        let s: usize = a.iter().map(|&x| x as usize).sum();
        s > 0 && s < total
    });
    out
}

fn minus(md: &[u8], a: &[u8]) -> Vec<u8> {
    md.iter().zip(a).map(|(x, y)| x - y).collect()
}

/// All words of a given multidegree, memoized.
#[derive(Default)]
pub struct RawWords {
    nondot: HashMap<Vec<u8>, Vec<Word>>,
    dots: HashMap<Vec<u8>, Vec<Word>>,
}

impl RawWords {
    pub fn all(&mut self, md: &[u8]) -> Vec<Word> {
        let mut v = self.nondot(md);
        v.extend(self.dots(md));
        v
    }

    fn nondot(&mut self, md: &[u8]) -> Vec<Word> {
        if let Some(v) = self.nondot.get(md) {
            return v.clone();
        }
        let total: usize = md.iter().map(|&x| x as usize).sum();
        let mut out = Vec::new();
        if total == 1 {
            out.push(Word::Gen(md.iter().position(|&x| x == 1).expect("one generator") as u32));
        } else {
            for a in sub_multidegrees(md) {
                let b = minus(md, &a);
                let left = self.all(&a);
                let right = self.all(&b);
                for u in &left {
                    for w in &right {
                        out.push(Word::bracket(u.clone(), w.clone()));
                    }
                }
            }
        }
        self.nondot.insert(md.to_vec(), out.clone());
        out
    }

    fn dots(&mut self, md: &[u8]) -> Vec<Word> {
        if let Some(v) = self.dots.get(md) {
            return v.clone();
        }
        let mut out = Vec::new();
        for a in sub_multidegrees(md) {
            let b = minus(md, &a);
            let first = self.nondot(&a);
            let rest = self.all(&b);
            for u in &first {
                for w in &rest {
                    out.push(Word::dot(u.clone(), w.clone()));
                }
            }
        }
        self.dots.insert(md.to_vec(), out.clone());
        out
    }
}

/// Multidegrees over `gens` generators with total degree `n`.
pub fn multidegrees(gens: usize, n: usize) -> Vec<Vec<u8>> {
    fn rec(gens: usize, n: usize, prefix: &mut Vec<u8>, out: &mut Vec<Vec<u8>>) {
        if prefix.len() + 1 == gens {
            prefix.push(n as u8);
            out.push(prefix.clone());
            prefix.pop();
            return;
        }
        for k in (0..=n).rev() {
            prefix.push(k as u8);
            rec(gens, n - k, prefix, out);
            prefix.pop();
        }
    }
    let mut out = Vec::new();
    if gens > 0 {
        rec(gens, n, &mut Vec::new(), &mut out);
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn flattening() {
        let x = Word::Gen(0);
        let w = Word::dot(Word::dot(x.clone(), x.clone()), Word::dot(x.clone(), x.clone()));
        assert_eq!(w, Word::Dot(vec![x.clone(), x.clone(), x.clone(), x]));
    }

    #[test]
    fn raw_counts_one_generator() {
        // x*x, [x,x]; degree 3: 3 dot-free-of-dot shapes... counted directly
        let mut r = RawWords::default();
        assert_eq!(r.all(&[1]).len(), 1);
        assert_eq!(r.all(&[2]).len(), 2);
        // [x,x*x],[x,[x,x]],[x*x,x],[[x,x],x],x*x*x,x*[x,x],[x,x]*x
        assert_eq!(r.all(&[3]).len(), 7);
    }

    #[test]
    fn multidegree_listing() {
        assert_eq!(multidegrees(2, 2), vec![vec![2, 0], vec![1, 1], vec![0, 2]]);
    }
}
