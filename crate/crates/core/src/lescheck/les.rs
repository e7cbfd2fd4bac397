//! Long exact cohomology sequences: induced maps, connecting maps, node exactness.

use serde::Serialize;

use super::ses::{build_ses, LevelwiseReport, SesTag, ShortExactSeq};
use crate::actions::Representation;
use crate::algebra::VarietyTag;
use crate::cohomology::Complex;
use crate::exactlin::{image, kernel, rank, Field, Matrix, PivotRule, QuotientSpace, SVec, Solver, Subspace};
use crate::{Error, Result};

/// `H^n` of the complex truncated below `from`, with fixed representatives.
struct Truncated<F: Field> {
    spaces: Vec<Option<QuotientSpace<F>>>,
}

impl<F: Field> Truncated<F> {
    fn new(c: &Complex<F>, from: usize, upto: usize) -> Result<Self> {
        let f = c.field();
        let mut spaces = Vec::new();
        for n in 0..=upto {
            if n < from {
                spaces.push(None);
                continue;
            }
            let z = kernel(&c.diffs[n]);
            let b = if n > from { image(&c.diffs[n - 1]) } else { Subspace::zero(&f, c.dim(n)) };
            spaces.push(Some(QuotientSpace::new(&b, &z, PivotRule::default())?));
        }
        Ok(Truncated { spaces })
    }

    fn at(&self, n: usize) -> &QuotientSpace<F> {
        self.spaces[n].as_ref().expect("degree within the truncation")
    }

    fn dim(&self, n: usize) -> usize {
        self.at(n).dim()
    }
}

fn coords_matrix<F: Field>(f: &F, q: &QuotientSpace<F>, images: &[SVec<F::Elem>]) -> Result<Matrix<F>> {
    let mut trip = Vec::new();
    for (j, v) in images.iter().enumerate() {
        let c = q.coords(v).map_err(|_| Error::NotExact("image is not a cocycle".into()))?;
        for (i, x) in c.into_iter().enumerate() {
            if !f.is_zero(&x) {
                trip.push((i, j, x));
            }
        }
    }
    Ok(Matrix::from_triplets(f, q.dim(), images.len(), trip))
}

fn induced<F: Field>(map: &Matrix<F>, src: &QuotientSpace<F>, tgt: &QuotientSpace<F>) -> Result<Matrix<F>> {
    let imgs: Vec<_> = src.reps().iter().map(|v| map.mul_vec(v)).collect();
    coords_matrix(map.field(), tgt, &imgs)
}

fn all_ones<F: Field>(f: &F, n: usize) -> SVec<F::Elem> {
    (0..n).map(|i| (i, f.one())).collect()
}

struct LesData<F: Field> {
    a: Truncated<F>,
    b: Truncated<F>,
    c: Truncated<F>,
}

impl<F: Field> ShortExactSeq<F> {
    fn les_data(&self, max_degree: usize) -> Result<LesData<F>> {
        Ok(LesData {
            a: Truncated::new(&self.left, self.from, max_degree + 1)?,
            b: Truncated::new(&self.mid, self.from, max_degree)?,
            c: Truncated::new(&self.right, self.from, max_degree)?,
        })
    }

    /// Zigzag `H^n(right) → H^{n+1}(left)`. `perturb` shifts the cocycle representatives by a
    /// coboundary and the lifts by an element of the kernel of the projection.
    fn connecting_with(&self, d: &LesData<F>, n: usize, rule: PivotRule, perturb: bool) -> Result<Matrix<F>> {
        let f = self.mid.field();
        let lift = Solver::new(&self.surj.maps[n], rule);
        let pull = Solver::new(&self.inj.maps[n + 1], rule);
        let shift_c =
            if perturb && n > self.from { self.right.diffs[n - 1].mul_vec(&all_ones(&f, self.right.dim(n - 1))) } else { Vec::new() };
        let shift_b = if perturb { self.inj.maps[n].mul_vec(&all_ones(&f, self.left.dim(n))) } else { Vec::new() };
        let mut imgs = Vec::new();
        for z in d.c.at(n).reps() {
            let z = crate::exactlin::sparse_add(&f, z, &shift_c);
            let y = lift.solve(&z).ok_or_else(|| Error::NotExact(format!("no lift in degree {n}")))?;
            let y = crate::exactlin::sparse_add(&f, &y, &shift_b);
            let dy = self.mid.diffs[n].mul_vec(&y);
            let x = pull.solve(&dy).ok_or_else(|| Error::NotExact(format!("no pullback in degree {}", n + 1)))?;
            imgs.push(x);
        }
        coords_matrix(&f, d.a.at(n + 1), &imgs)
    }
}

/// The connecting map `H^n(right) → H^{n+1}(left)` in the default coordinates.
pub fn connecting_hom<F: Field>(s: &ShortExactSeq<F>, n: usize) -> Result<Matrix<F>> {
    if !s.levelwise().exact {
        return Err(Error::NotExact(format!("sequence ({}) is not levelwise exact", s.tag)));
    }
    if n < s.from || n + 2 > s.top() {
        return Err(Error::RangeTooSmall(format!("degree {n} outside {}..={}", s.from, s.top() - 2)));
    }
    let d = s.les_data(n)?;
    s.connecting_with(&d, n, PivotRule::default(), false)
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct LesRow {
    pub n: usize,
    pub left: usize,
    pub mid: usize,
    pub right: usize,
    pub rank_inj: usize,
    pub rank_surj: usize,
    pub rank_connecting: usize,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct LesNode {
    pub label: String,
    pub degree: usize,
    pub dim: usize,
    pub in_rank: usize,
    pub out_rank: usize,
    pub exact: bool,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct LesReport {
    pub tag: SesTag,
    pub variety: VarietyTag,
    pub from: usize,
    pub max_degree: usize,
    pub levelwise: LevelwiseReport,
    pub rows: Vec<LesRow>,
    pub nodes: Vec<LesNode>,
    pub representative_independent: bool,
    pub exact: bool,
}

fn node_label(name: &str, n: usize) -> String {
    if name.starts_with("H(M^e)") {
        name.replace("H(M^e)", &format!("H^{}_H(M^e)", n - 1))
    } else {
        format!("H^{n}({name})")
    }
}

fn exact_at<F: Field>(inc: Option<&Matrix<F>>, out: &Matrix<F>, dim: usize) -> (usize, usize, bool) {
    let ri = inc.map(rank).unwrap_or(0);
    let ro = rank(out);
    let composite = inc.map(|i| out.mul(i).expect("shape").is_zero()).unwrap_or(true);
    (ri, ro, composite && ri + ro == dim)
}

/// Builds the sequence and checks the long exact sequence through `H^{max_degree}` of the right term.
pub fn verify_les<F: Field>(tag: SesTag, r: &Representation<F>, max_degree: usize) -> Result<LesReport> {
    let s = build_ses(tag, r, max_degree)?;
    les_report(&s, max_degree)
}

pub fn les_report<F: Field>(s: &ShortExactSeq<F>, max_degree: usize) -> Result<LesReport> {
    let levelwise = s.levelwise();
    let mut report = LesReport {
        tag: s.tag,
        variety: s.tag.variety(),
        from: s.from,
        max_degree,
        levelwise: levelwise.clone(),
        rows: Vec::new(),
        nodes: Vec::new(),
        representative_independent: false,
        exact: false,
    };
    if !levelwise.exact {
        return Ok(report);
    }
    let d = s.les_data(max_degree)?;
    let mut independent = true;
    let mut prev_delta: Option<Matrix<F>> = None;
    for n in s.from..=max_degree {
        let i = induced(&s.inj.maps[n], d.a.at(n), d.b.at(n))?;
        let p = induced(&s.surj.maps[n], d.b.at(n), d.c.at(n))?;
        let delta = s.connecting_with(&d, n, PivotRule::default(), false)?;
        for rule in [PivotRule::LowestIndex, PivotRule::HighestIndex] {
            independent &= s.connecting_with(&d, n, rule, true)? == delta;
        }
        let nodes = [
            (node_label(&s.names[0], n), d.a.dim(n), prev_delta.as_ref(), &i),
            (node_label(&s.names[1], n), d.b.dim(n), Some(&i), &p),
            (node_label(&s.names[2], n), d.c.dim(n), Some(&p), &delta),
        ];
        for (label, dim, inc, out) in nodes {
            let (in_rank, out_rank, exact) = exact_at(inc, out, dim);
            report.nodes.push(LesNode { label, degree: n, dim, in_rank, out_rank, exact });
        }
        report.rows.push(LesRow {
            n,
            left: d.a.dim(n),
            mid: d.b.dim(n),
            right: d.c.dim(n),
            rank_inj: rank(&i),
            rank_surj: rank(&p),
            rank_connecting: rank(&delta),
        });
        prev_delta = Some(delta);
    }
    report.representative_independent = independent;
    report.exact = report.nodes.iter().all(|x| x.exact) && independent;
    Ok(report)
}

impl LesReport {
    /// Human-readable rendering, one line per degree.
    pub fn table(&self) -> String {
        let mut out = format!("({}) over {} from degree {}\n", self.tag, self.variety, self.from);
        if let Some(n) = self.levelwise.failed_degree {
            out.push_str(&format!(
                "levelwise exactness fails in degree {n}: {}\n",
                self.levelwise.reason.as_deref().unwrap_or("")
            ));
            return out;
        }
        for row in self.nodes.chunks(3) {
            let n = row[0].degree;
            let rc = self.rows.iter().find(|r| r.n == n).map(|r| r.rank_connecting).unwrap_or(0);
            let cells: Vec<String> = row
                .iter()
                .map(|x| format!("{}[{}]{}", x.label, x.dim, if x.exact { "" } else { "!" }))
                .collect();
            out.push_str(&format!("{}  --δ(rank {rc})-->\n", cells.join(" → ")));
        }
        out.push_str(if self.exact { "exact\n" } else { "NOT exact\n" });
        out
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::{commutator_bracket, samples, BiAlgebra};
    use crate::exactlin::{PrimeField, Rationals};

    #[test]
    fn zero_algebra_every_tag() {
        let q = Rationals;
        let p = BiAlgebra::zero(&q, 1);
        let r = Representation::zero(&p, 1);
        for tag in SesTag::ALL {
            let s = build_ses(tag, &r, 3).unwrap();
            assert!(s.levelwise().exact, "{tag}");
            for c in [&s.left, &s.mid, &s.right] {
                assert!(c.diffs.iter().all(|d| d.is_zero()));
            }
            let rep = les_report(&s, 3).unwrap();
            assert!(rep.exact, "{tag}");
            assert!(rep.rows.iter().all(|r| r.rank_connecting == 0));
        }
    }

    #[test]
    fn every_tag_on_upper_triangular_commutator() {
        let f = PrimeField::new(3).unwrap();
        let p = commutator_bracket(&samples::upper_triangular(&f)).unwrap();
        let r = Representation::regular(&p);
        for tag in SesTag::ALL {
            let rep = verify_les(tag, &r, 3).unwrap();
            assert!(rep.exact, "{}", rep.table());
            // telescoping: Σ(-1)^j dim V_j = (-1)^last rank(last outgoing)
            let mut alt: i64 = 0;
            for (j, node) in rep.nodes.iter().enumerate() {
                alt += if j % 2 == 0 { node.dim as i64 } else { -(node.dim as i64) };
            }
            let last = rep.nodes.last().unwrap();
            let tail = if (rep.nodes.len() - 1) % 2 == 0 { last.out_rank as i64 } else { -(last.out_rank as i64) };
            assert_eq!(alt, tail, "{tag}");
        }
    }

    #[test]
    fn f_dims_add_up() {
        let q = Rationals;
        let p = commutator_bracket(&samples::upper_triangular(&q)).unwrap();
        let r = Representation::zero(&p, 1);
        let s = build_ses(SesTag::F, &r, 3).unwrap();
        for n in 3..=s.top() {
            assert_eq!(s.mid.dim(n), s.left.dim(n) + s.right.dim(n));
        }
    }

    #[test]
    fn corrupted_inclusion_is_located() {
        let f = PrimeField::new(3).unwrap();
        let p = commutator_bracket(&samples::upper_triangular(&f)).unwrap();
        let r = Representation::regular(&p);
        let mut s = build_ses(SesTag::A1, &r, 3).unwrap();
        let m = &mut s.inj.maps[4];
        assert_eq!(m.get(0, 0), f.one());
        m.set(0, 0, f.zero());
        let rep = s.levelwise();
        assert!(!rep.exact);
        assert_eq!(rep.failed_degree, Some(4));
    }

    #[test]
    fn c1_is_split_with_alpha_as_connecting_map() {
        let f = PrimeField::new(3).unwrap();
        let p = commutator_bracket(&samples::upper_triangular(&f)).unwrap();
        let r = Representation::regular(&p);
        let s = build_ses(SesTag::C1, &r, 2).unwrap();
        let delta = connecting_hom(&s, 1).unwrap();
        // H^1(right) = Z^1_H; its image is the class of α¹ in H^1_H(M^e)
        let d = s.les_data(1).unwrap();
        let ing = crate::cohomology::Ingredients::new(&r);
        let direct = induced(&ing.alpha(crate::cohomology::Col::Left, 1), d.c.at(1), d.a.at(2)).unwrap();
        assert_eq!(delta, direct);
    }

    #[test]
    fn tag_parsing() {
        assert_eq!(SesTag::parse("A1").unwrap(), SesTag::A1);
        assert_eq!(SesTag::parse("c'").unwrap(), SesTag::CPrime);
        assert_eq!(SesTag::parse("(dPrime)").unwrap(), SesTag::DPrime);
        assert!(SesTag::parse("z").is_err());
    }
}
