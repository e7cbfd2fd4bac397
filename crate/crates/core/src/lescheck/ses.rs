//! The 22 short exact sequences of cochain complexes and their levelwise check.

use std::fmt;

use serde::Serialize;

use crate::actions::Representation;
use crate::algebra::VarietyTag;
use crate::cohomology::{require_variety, ChainMap, Col, Complex, Ingredients, Kind, Shape, SlotPair};
use crate::exactlin::{rank, Field};
use crate::{Error, Result};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub enum SesTag {
    A1,
    A2,
    A,
    B1,
    B2,
    B,
    C1,
    C2,
    C,
    CPrime,
    D1,
    D2,
    D,
    DPrime,
    E,
    F,
    G1,
    G2,
    G,
    H1,
    H2,
    H,
}

impl SesTag {
    pub const ALL: [SesTag; 22] = [
        SesTag::A1,
        SesTag::A2,
        SesTag::A,
        SesTag::B1,
        SesTag::B2,
        SesTag::B,
        SesTag::C1,
        SesTag::C2,
        SesTag::C,
        SesTag::CPrime,
        SesTag::D1,
        SesTag::D2,
        SesTag::D,
        SesTag::DPrime,
        SesTag::E,
        SesTag::F,
        SesTag::G1,
        SesTag::G2,
        SesTag::G,
        SesTag::H1,
        SesTag::H2,
        SesTag::H,
    ];

    pub fn name(self) -> &'static str {
        use SesTag::*;
        match self {
            A1 => "a1",
            A2 => "a2",
            A => "a",
            B1 => "b1",
            B2 => "b2",
            B => "b",
            C1 => "c1",
            C2 => "c2",
            C => "c",
            CPrime => "cPrime",
            D1 => "d1",
            D2 => "d2",
            D => "d",
            DPrime => "dPrime",
            E => "e",
            F => "f",
            G1 => "g1",
            G2 => "g2",
            G => "g",
            H1 => "h1",
            H2 => "h2",
            H => "h",
        }
    }

    /// Case-insensitive; accepts `c'`, `cprime`, and the parenthesized forms.
    pub fn parse(s: &str) -> Result<SesTag> {
        let t = s.trim().trim_start_matches('(').trim_end_matches(')').to_ascii_lowercase().replace('\'', "prime");
        SesTag::ALL
            .into_iter()
            .find(|x| x.name().to_ascii_lowercase() == t)
            .ok_or_else(|| Error::Parse(format!("unknown sequence tag `{s}`")))
    }

    /// Variety the algebra must belong to.
    pub fn variety(self) -> VarietyTag {
        use SesTag::*;
        match self {
            A1 | B1 | D1 | G1 | H1 => VarietyTag::NPl,
            A2 | B2 | D2 | G2 | H2 => VarietyTag::NPr,
            A | B | D | DPrime | F | G | H => VarietyTag::NPlr,
            C1 => VarietyTag::AWBl,
            C2 => VarietyTag::AWBr,
            C | CPrime | E => VarietyTag::AWBlr,
        }
    }

    /// Lowest degree from which the sequence is built and checked.
    pub fn lower_bound(self) -> usize {
        use SesTag::*;
        match self {
            C1 | C2 | C | CPrime => 1,
            // printed from degree 1, but the degree-1 terms are Hom, Hom, Hom
            B => 2,
            _ => 3,
        }
    }
}

impl fmt::Display for SesTag {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

/// Complexes and maps of `0 → left → mid → right → 0`, built in degrees `0..=top`.
#[derive(Clone, Debug)]
pub struct ShortExactSeq<F: Field> {
    pub tag: SesTag,
    pub names: [String; 3],
    pub left: Complex<F>,
    pub mid: Complex<F>,
    pub right: Complex<F>,
    pub inj: ChainMap<F>,
    pub surj: ChainMap<F>,
    pub from: usize,
}

struct Plan {
    shapes: [Shape; 3],
    names: [&'static str; 3],
    inj: Vec<SlotPair>,
    surj: Vec<SlotPair>,
}

fn e(c: Col) -> Kind {
    Kind::E(c)
}

fn cols_of(tag: SesTag) -> Vec<Col> {
    match tag.variety() {
        VarietyTag::NPl | VarietyTag::AWBl => vec![Col::Left],
        VarietyTag::NPr | VarietyTag::AWBr => vec![Col::Right],
        _ => vec![Col::Left, Col::Right],
    }
}

fn same(kinds: impl IntoIterator<Item = Kind>) -> Vec<SlotPair> {
    kinds.into_iter().map(|k| SlotPair::new((0, k), (0, k))).collect()
}

fn plan(tag: SesTag) -> Plan {
    use SesTag::*;
    let cs = cols_of(tag);
    let ecols = || cs.iter().map(|c| e(*c)).collect::<Vec<_>>();
    let hneg = Shape::Hochschild { negated: true };
    let lneg = Shape::Leibniz { negated: true };
    let h_and_l = Shape::Sum(vec![hneg.clone(), lneg.clone()]);
    let h_and_l_surj = vec![SlotPair::new((0, Kind::H), (0, Kind::H)), SlotPair::new((0, Kind::L), (1, Kind::L))];
    match tag {
        A1 | A2 | A => Plan {
            shapes: [Shape::ConeAlpha(cs.clone()), Shape::Np(cs.clone()), lneg],
            names: ["cone(α)", "NP", "L"],
            inj: same([vec![Kind::H], ecols()].concat()),
            surj: same([Kind::L]),
        },
        B1 | B2 | B => Plan {
            shapes: [Shape::ConeBeta(cs.clone()), Shape::Np(cs.clone()), hneg],
            names: ["cone(-β)", "NP", "H"],
            inj: same([vec![Kind::L], ecols()].concat()),
            surj: same([Kind::H]),
        },
        C1 | C2 => Plan {
            shapes: [Shape::Shifted(cs.clone()), Shape::ConeAlpha(cs.clone()), hneg],
            names: ["H(M^e)", "AWB", "H"],
            inj: same(ecols()),
            surj: same([Kind::H]),
        },
        C | CPrime => {
            let (kept, dropped) = if tag == C { (Col::Left, Col::Right) } else { (Col::Right, Col::Left) };
            Plan {
                shapes: [Shape::Shifted(vec![dropped]), Shape::ConeAlpha(cs.clone()), Shape::ConeAlpha(vec![kept])],
                names: ["H(M^e)", "AWBlr", if tag == C { "AWBl" } else { "AWBr" }],
                inj: same([e(dropped)]),
                surj: same([Kind::H, e(kept)]),
            }
        }
        D1 | D2 | F => Plan {
            shapes: [Shape::Shifted(cs.clone()), Shape::Np(cs.clone()), h_and_l],
            names: ["H(M^e)", "NP", "H⊕L"],
            inj: same(ecols()),
            surj: h_and_l_surj,
        },
        D | DPrime => {
            let (kept, dropped) = if tag == D { (Col::Left, Col::Right) } else { (Col::Right, Col::Left) };
            Plan {
                shapes: [Shape::Shifted(vec![dropped]), Shape::Np(cs.clone()), Shape::Np(vec![kept])],
                names: ["H(M^e)", "NPlr", if tag == D { "NPl" } else { "NPr" }],
                inj: same([e(dropped)]),
                surj: same([Kind::H, e(kept), Kind::L]),
            }
        }
        E => Plan {
            shapes: [Shape::Shifted(cs.clone()), Shape::ConeAlpha(cs.clone()), hneg],
            names: ["H(M^e)⊕H(M^e)", "AWBlr", "H"],
            inj: same(ecols()),
            surj: same([Kind::H]),
        },
        G1 | G2 | G => {
            // each M^e copy enters the α-cone with + and the β-cone with −
            let mut inj = Vec::new();
            let mut surj = vec![SlotPair::new((0, Kind::H), (0, Kind::H)), SlotPair::new((1, Kind::L), (0, Kind::L))];
            for c in &cs {
                inj.push(SlotPair::new((0, e(*c)), (0, e(*c))));
                inj.push(SlotPair::neg((0, e(*c)), (1, e(*c))));
                surj.push(SlotPair::new((0, e(*c)), (0, e(*c))));
                surj.push(SlotPair::new((1, e(*c)), (0, e(*c))));
            }
            Plan {
                shapes: [
                    Shape::Shifted(cs.clone()),
                    Shape::Sum(vec![Shape::ConeAlpha(cs.clone()), Shape::ConeBeta(cs.clone())]),
                    Shape::Np(cs.clone()),
                ],
                names: ["H(M^e)", "cone(α)⊕cone(-β)", "NP"],
                inj,
                surj,
            }
        }
        H1 | H2 | H => Plan {
            shapes: [Shape::Shifted(cs.clone()), Shape::ConeBeta(cs.clone()), lneg],
            names: ["H(M^e)", "cone(-β)", "L"],
            inj: same(ecols()),
            surj: same([Kind::L]),
        },
    }
}

/// Builds the sequence with complexes up to degree `max_degree + 2`, enough for the long
/// exact sequence through `H^{max_degree}` of the right-hand term.
pub fn build_ses<F: Field>(tag: SesTag, r: &Representation<F>, max_degree: usize) -> Result<ShortExactSeq<F>> {
    require_variety(tag.variety(), r)?;
    let from = tag.lower_bound();
    if max_degree < from {
        return Err(Error::RangeTooSmall(format!("sequence ({tag}) starts in degree {from}, asked for {max_degree}")));
    }
    let top = max_degree + 2;
    let p = plan(tag);
    let ing = Ingredients::new(r);
    let [ls, ms, rs] = p.shapes;
    let left = Complex::from_shape(p.names[0], ls, &ing, top);
    let mid = Complex::from_shape(p.names[1], ms, &ing, top);
    let right = Complex::from_shape(p.names[2], rs, &ing, top);
    let inj = ChainMap::from_slots(&left, &mid, &p.inj);
    let surj = ChainMap::from_slots(&mid, &right, &p.surj);
    let names = p.names.map(|s| s.to_string());
    Ok(ShortExactSeq { tag, names, left, mid, right, inj, surj, from })
}

/// Outcome of the levelwise check; `failed_degree` locates the first failure.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct LevelwiseReport {
    pub exact: bool,
    pub failed_degree: Option<usize>,
    pub reason: Option<String>,
}

impl<F: Field> ShortExactSeq<F> {
    pub fn top(&self) -> usize {
        self.mid.top()
    }

    /// Injectivity, surjectivity, `Im inj = Ker surj` and the chain-map squares, per degree.
    pub fn levelwise(&self) -> LevelwiseReport {
        let fail = |n: usize, why: &str| LevelwiseReport {
            exact: false,
            failed_degree: Some(n),
            reason: Some(why.to_string()),
        };
        for n in self.from..=self.top() {
            let (a, b, c) = (self.left.dim(n), self.mid.dim(n), self.right.dim(n));
            let (i, s) = (&self.inj.maps[n], &self.surj.maps[n]);
            if rank(i) != a {
                return fail(n, "inclusion is not injective");
            }
            if rank(s) != c {
                return fail(n, "projection is not surjective");
            }
            if a + c != b || !s.mul(i).expect("shape").is_zero() {
                return fail(n, "image of the inclusion differs from the kernel of the projection");
            }
        }
        if let Some(n) = self.inj.commutation_defect(&self.left, &self.mid, self.from) {
            return fail(n, "inclusion does not commute with differentials");
        }
        if let Some(n) = self.surj.commutation_defect(&self.mid, &self.right, self.from) {
            return fail(n, "projection does not commute with differentials");
        }
        LevelwiseReport { exact: true, failed_degree: None, reason: None }
    }
}

pub fn verify_levelwise_exact<F: Field>(s: &ShortExactSeq<F>) -> bool {
    s.levelwise().exact
}
