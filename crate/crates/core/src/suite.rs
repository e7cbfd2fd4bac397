//! The seeded property suite: twelve numbered checks over random and exhaustive instances.
//!
//! Every instance draws from its own `(seed, label)` stream and results are merged in input
//! order, so the rendered report depends on the seed alone.

use serde::Serialize;
use serde_json::json;

use crate::actions::{check_action, derivations, enumerate_extensions, ExtensionGuard, Representation};
use crate::algebra::{
    check_derived_identities, check_identity, classify, commutator_bracket, derivation_bracket, identity_witness,
    is_square_zero_derivation, BiAlgebra, DerivationSide, IdentityTag, VarietyTag,
};
use crate::cohomology::{build_complex, cohomology_dims, restricted_h2, Col, Ingredients};
use crate::error::Result;
use crate::exactlin::{Field, PrimeField, Rationals};
use crate::freealg::{
    associative_dependence_witness, confluence_check, extend_map, interpret, underlying_free_basis_report,
    FreeAlgebra, UnderlyingKind,
};
use crate::lescheck::{verify_les, SesTag};
use crate::par::map_ordered;
use crate::random::{self, stream, InstanceRng};

/// Failures listed in a rendered report; the count is always complete.
const LISTED_FAILURES: usize = 8;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum Scale {
    /// Instance counts as required for acceptance.
    Full,
    /// A tenth of the instances (at least two), for smoke runs.
    Quick,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct SuiteConfig {
    pub seed: u64,
    pub scale: Scale,
}

impl SuiteConfig {
    pub fn new(seed: u64, scale: Scale) -> Self {
        SuiteConfig { seed, scale }
    }

    fn count(&self, full: usize) -> usize {
        match self.scale {
            Scale::Full => full,
            Scale::Quick => (full / 10).max(2),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CriterionResult {
    pub id: u8,
    pub title: String,
    pub passed: bool,
    pub checks: u64,
    pub failure_count: usize,
    pub failures: Vec<String>,
    pub notes: Vec<String>,
}

impl CriterionResult {
    pub fn line(&self) -> String {
        format!(
            "criterion {:>2}: {} {} ({} checks, {} failures)",
            self.id,
            if self.passed { "PASS" } else { "FAIL" },
            self.title,
            self.checks,
            self.failure_count
        )
    }
}

#[derive(Default)]
struct Tally {
    checks: u64,
    failures: Vec<String>,
    notes: Vec<String>,
}

impl Tally {
    fn check(&mut self, ok: bool, what: impl FnOnce() -> String) {
        self.checks += 1;
        if !ok {
            self.failures.push(what());
        }
    }

    fn error(&mut self, what: String) {
        self.checks += 1;
        self.failures.push(what);
    }

    fn merge(&mut self, other: Tally) {
        self.checks += other.checks;
        self.failures.extend(other.failures);
        self.notes.extend(other.notes);
    }

    fn finish(self, id: u8, title: &str) -> CriterionResult {
        CriterionResult {
            id,
            title: title.to_string(),
            passed: self.failures.is_empty() && self.checks > 0,
            checks: self.checks,
            failure_count: self.failures.len(),
            failures: self.failures.into_iter().take(LISTED_FAILURES).collect(),
            notes: self.notes,
        }
    }
}

pub const TITLES: [&str; 12] = [
    "coboundaries square to zero",
    "comparison maps are chain maps",
    "H^0 vanishes and H^1 equals derivations",
    "restricted H^2 counts NP extensions",
    "AWB H^2 counts extensions",
    "short sequences exact, long sequences exact",
    "free algebras have the universal property",
    "rewriting strategies agree",
    "underlying free bases and the lr dependence",
    "derived identities and mutation",
    "example regressions",
    "deterministic reports",
];

/// Runs one numbered check. Criterion 12 renders criteria 1 to 11 twice and compares the bytes.
pub fn run_criterion(id: u8, cfg: &SuiteConfig) -> CriterionResult {
    let f2 = PrimeField::new(2).expect("prime");
    let q = Rationals;
    let mut t = Tally::default();
    match id {
        1 => {
            t.merge(squares(&q, cfg));
            t.merge(squares(&f2, cfg));
        }
        2 => {
            t.merge(chain_maps(&q, cfg));
            t.merge(chain_maps(&f2, cfg));
        }
        3 => {
            t.merge(low_degrees(&q, cfg));
            t.merge(low_degrees(&f2, cfg));
        }
        4 => t = extension_counts(cfg, &[VarietyTag::NPl, VarietyTag::NPr, VarietyTag::NPlr], true),
        5 => t = extension_counts(cfg, &[VarietyTag::AWBl, VarietyTag::AWBr, VarietyTag::AWBlr], false),
        6 => t = exact_sequences(cfg),
        7 => t = universal_property(cfg),
        8 => t = confluence(),
        9 => t = free_bases(),
        10 => {
            t.merge(derived(&q, cfg));
            t.merge(derived(&f2, cfg));
            t.merge(mutation(cfg));
        }
        11 => {
            t.merge(examples_basic(&q, cfg));
            t.merge(examples_basic(&f2, cfg));
            t.merge(examples_derivation(cfg));
        }
        12 => {
            let ids: Vec<u8> = (1..=11).collect();
            let first = render(cfg, &ids.iter().map(|&i| run_criterion(i, cfg)).collect::<Vec<_>>());
            return determinism_check(cfg, &ids, &first);
        }
        _ => t.error(format!("no criterion {id}")),
    }
    let title = (id as usize).checked_sub(1).and_then(|i| TITLES.get(i)).copied().unwrap_or("unknown");
    t.finish(id, title)
}

/// Criteria 1 to 11 in order.
pub fn run_suite(cfg: &SuiteConfig) -> Vec<CriterionResult> {
    (1..=11).map(|id| run_criterion(id, cfg)).collect()
}

/// Re-runs `ids` and compares the rendered report with `first`.
pub fn determinism_check(cfg: &SuiteConfig, ids: &[u8], first: &str) -> CriterionResult {
    let second = render(cfg, &ids.iter().map(|&i| run_criterion(i, cfg)).collect::<Vec<_>>());
    let mut t = Tally::default();
    t.check(first == second, || {
        let at = first.bytes().zip(second.bytes()).position(|(a, b)| a != b);
        format!("reports differ at byte {}", at.unwrap_or(first.len().min(second.len())))
    });
    t.notes.push(format!("criteria {ids:?} rendered twice, {} bytes", first.len()));
    t.finish(12, TITLES[11])
}

/// JSON lines: a header with the configuration, then one line per criterion.
pub fn render(cfg: &SuiteConfig, results: &[CriterionResult]) -> String {
    let mut out = json!({ "suite": "npb", "seed": cfg.seed, "scale": cfg.scale }).to_string();
    out.push('\n');
    for r in results {
        out.push_str(&serde_json::to_string(r).expect("serializable"));
        out.push('\n');
    }
    out
}

fn instance<F: Field>(
    f: &F,
    v: VarietyTag,
    dim_p: usize,
    max_m: usize,
    rng: &mut InstanceRng,
) -> Result<Representation<F>> {
    let p = random::random_algebra(f, v, dim_p, rng)?;
    Ok(random::random_representation(v, &p, max_m, rng))
}

fn label<F: Field>(f: &F, what: &str, v: impl std::fmt::Display, i: usize) -> String {
    format!("{what}/{}/{v}/{i}", f.spec())
}

fn per_instance<F: Field>(
    f: &F,
    cfg: &SuiteConfig,
    what: &str,
    varieties: &[VarietyTag],
    full: usize,
    body: impl Fn(VarietyTag, usize, &mut InstanceRng, &mut Tally) + Sync,
) -> Tally {
    let jobs: Vec<(VarietyTag, usize)> =
        varieties.iter().flat_map(|&v| (0..cfg.count(full)).map(move |i| (v, i))).collect();
    let parts = map_ordered(&jobs, |&(v, i)| {
        let mut t = Tally::default();
        let mut rng = stream(cfg.seed, &label(f, what, v, i));
        body(v, i, &mut rng, &mut t);
        t
    });
    let mut t = Tally::default();
    for p in parts {
        t.merge(p);
    }
    t
}

fn squares<F: Field>(f: &F, cfg: &SuiteConfig) -> Tally {
    per_instance(f, cfg, "squares", &VarietyTag::BRACKETED, 30, |v, i, rng, t| {
        let tag = label(f, "", v, i);
        match instance(f, v, 1 + i % 3, 2, rng).and_then(|r| build_complex(v, &r, 5)) {
            Ok(c) => {
                let defect = c.square_defect();
                t.check(defect.is_none(), || format!("{tag}: d∘d ≠ 0 at degree {}", defect.unwrap_or(0)));
            }
            Err(e) => t.error(format!("{tag}: {e}")),
        }
    })
}

fn chain_maps<F: Field>(f: &F, cfg: &SuiteConfig) -> Tally {
    per_instance(f, cfg, "chain", &[VarietyTag::NPl, VarietyTag::NPr], 20, |v, i, rng, t| {
        let tag = label(f, "", v, i);
        let r = match instance(f, v, 1 + i % 3, 2, rng) {
            Ok(r) => r,
            Err(e) => return t.error(format!("{tag}: {e}")),
        };
        let c = if v == VarietyTag::NPl { Col::Left } else { Col::Right };
        let ing = Ingredients::new(&r);
        t.check(ing.alpha(c, 1) == ing.beta(c, 1), || format!("{tag}: alpha^1 ≠ beta^1"));
        for n in 1..=4 {
            let a = ing.d_e(n).mul(&ing.alpha(c, n)).expect("shape") == ing.alpha(c, n + 1).mul(&ing.d_h(n)).expect("shape");
            t.check(a, || format!("{tag}: alpha fails to commute at degree {n}"));
            let b = ing.d_e(n).mul(&ing.beta(c, n)).expect("shape") == ing.beta(c, n + 1).mul(&ing.d_l(n)).expect("shape");
            t.check(b, || format!("{tag}: beta fails to commute at degree {n}"));
        }
    })
}

fn low_degrees<F: Field>(f: &F, cfg: &SuiteConfig) -> Tally {
    per_instance(f, cfg, "low", &VarietyTag::BRACKETED, 30, |v, i, rng, t| {
        let tag = label(f, "", v, i);
        let r = match instance(f, v, 1 + i % 3, 2, rng) {
            Ok(r) => r,
            Err(e) => return t.error(format!("{tag}: {e}")),
        };
        match build_complex(v, &r, 2).and_then(|c| cohomology_dims(&c, 1)) {
            Ok(h) => {
                let der = derivations(v, &r).dim();
                t.check(h[0] == 0, || format!("{tag}: H^0 = {}", h[0]));
                t.check(h[1] == der, || format!("{tag}: H^1 = {} but Der has dim {der}", h[1]));
            }
            Err(e) => t.error(format!("{tag}: {e}")),
        }
    })
}

/// All one-dimensional algebras and modules over F2, plus one random two-dimensional algebra per variety.
fn micro_instances(cfg: &SuiteConfig, v: VarietyTag) -> Vec<Representation<PrimeField>> {
    let f2 = PrimeField::new(2).expect("prime");
    let mut out = Vec::new();
    for (dot, br) in [(0, 0), (0, 1), (1, 0), (1, 1)] {
        let p = BiAlgebra::from_entries(&f2, 1, &[(0, 0, 0, dot)], &[(0, 0, 0, br)]);
        if !classify(&p).contains(&v) {
            continue;
        }
        for bits in 0..16u8 {
            let m = |b: u8| vec![crate::exactlin::Matrix::from_i64(&f2, &[vec![((bits >> b) & 1) as i64]])];
            let r = Representation::new(p.clone(), 1, m(0), m(1), m(2), m(3)).expect("shapes");
            if check_action(v, &r) {
                out.push(r);
            }
        }
    }
    let mut rng = stream(cfg.seed, &format!("micro/{v}"));
    if let Ok(p) = random::random_algebra(&f2, v, 2, &mut rng) {
        out.push(random::random_representation(v, &p, 1, &mut rng));
    }
    out
}

fn extension_counts(cfg: &SuiteConfig, varieties: &[VarietyTag], restricted: bool) -> Tally {
    let mut t = Tally::default();
    for &v in varieties {
        let reps = micro_instances(cfg, v);
        let parts = map_ordered(&reps, |r| {
            let h2 = if restricted {
                restricted_h2(v, r)
            } else {
                build_complex(v, r, 3).and_then(|c| cohomology_dims(&c, 2)).map(|h| h[2])
            };
            (h2, enumerate_extensions(r, v, ExtensionGuard::default()))
        });
        for (i, (h2, ext)) in parts.into_iter().enumerate() {
            let tag = format!("{v}/{i}");
            match (h2, ext) {
                (Ok(h), Ok(e)) => t.check(1u64 << h == e.classes, || {
                    format!("{tag}: 2^{h} ≠ {} extension classes", e.classes)
                }),
                (Err(e), _) | (_, Err(e)) => t.error(format!("{tag}: {e}")),
            }
        }
        t.notes.push(format!("{v}: {} micro-instances", reps.len()));
    }
    t
}

fn exact_sequences(cfg: &SuiteConfig) -> Tally {
    let jobs: Vec<(SesTag, usize)> =
        SesTag::ALL.iter().flat_map(|&s| (0..cfg.count(20)).map(move |i| (s, i))).collect();
    let parts = map_ordered(&jobs, |&(s, i)| {
        let mut t = Tally::default();
        if i % 2 == 0 {
            les_instance(&Rationals, cfg, s, i, &mut t);
        } else {
            les_instance(&PrimeField::new(2).expect("prime"), cfg, s, i, &mut t);
        }
        t
    });
    let mut t = Tally::default();
    for p in parts {
        t.merge(p);
    }
    t.notes.push("dim P <= 2, dim M <= 2, degrees through 5".into());
    t
}

fn les_instance<F: Field>(f: &F, cfg: &SuiteConfig, s: SesTag, i: usize, t: &mut Tally) {
    let tag = label(f, "les", s.name(), i);
    let mut rng = stream(cfg.seed, &tag);
    let v = s.variety();
    match instance(f, v, 1 + i % 2, 2, &mut rng).and_then(|r| verify_les(s, &r, 5)) {
        Ok(rep) => {
            t.check(rep.levelwise.exact, || {
                format!("{tag}: not levelwise exact at {:?}: {:?}", rep.levelwise.failed_degree, rep.levelwise.reason)
            });
            let bad: Vec<&str> = rep.nodes.iter().filter(|n| !n.exact).map(|n| n.label.as_str()).collect();
            t.check(rep.exact, || format!("{tag}: inexact at {bad:?}"));
            t.check(rep.representative_independent, || format!("{tag}: connecting map depends on representatives"));
        }
        Err(e) => t.error(format!("{tag}: {e}")),
    }
}

fn universal_property(cfg: &SuiteConfig) -> Tally {
    let q = Rationals;
    let varieties = [VarietyTag::NPr, VarietyTag::NPlr, VarietyTag::AWBr, VarietyTag::AWBlr];
    let mut t = Tally::default();
    for v in varieties {
        let alg = FreeAlgebra::new(&q, v, vec!["x".into(), "y".into()]).expect("bracketed variety");
        let mut rng = stream(cfg.seed, &format!("terms/{v}"));
        let terms: Vec<_> = (0..cfg.count(100)).map(|k| random::random_term(2, 1 + k % 5, &mut rng)).collect();
        let normal: Vec<_> = terms.iter().map(|s| alg.normalize(s)).collect();
        let targets: Vec<usize> = (0..cfg.count(10)).collect();
        let parts = map_ordered(&targets, |&j| {
            let mut t = Tally::default();
            let mut rng = stream(cfg.seed, &format!("targets/{v}/{j}"));
            let b = match random::random_algebra(&q, v, 2 + j % 2, &mut rng) {
                Ok(b) => b,
                Err(e) => {
                    t.error(format!("{v}/{j}: {e}"));
                    return t;
                }
            };
            let images: Vec<_> = (0..2).map(|_| random::random_vector(&q, b.dim(), &mut rng)).collect();
            let ev = match extend_map(v, images.clone(), &b) {
                Ok(ev) => ev,
                Err(e) => {
                    t.error(format!("{v}/{j}: {e}"));
                    return t;
                }
            };
            for (k, (s, n)) in terms.iter().zip(&normal).enumerate() {
                match n {
                    Ok(n) => t.check(ev.eval(n) == interpret(s, &images, &b), || format!("{v}/{j}: term {k} differs")),
                    Err(e) => t.error(format!("{v}/{j}: term {k}: {e}")),
                }
            }
            t
        });
        for p in parts {
            t.merge(p);
        }
    }
    t
}

fn confluence() -> Tally {
    let mut t = Tally::default();
    let parts = map_ordered(&VarietyTag::BRACKETED, |&v| {
        let alg = FreeAlgebra::new(&Rationals, v, vec!["x".into(), "y".into()]).expect("bracketed variety");
        (v, confluence_check(&alg, 5))
    });
    for (v, rep) in parts {
        match rep {
            Ok(r) => {
                t.check(r.disagreements == 0, || format!("{v}: {} disagreements", r.disagreements));
                t.notes.push(format!(
                    "{v}: {} words, first-stage agreement on {}",
                    r.words_checked, r.first_stage_agreements
                ));
            }
            Err(e) => t.error(format!("{v}: {e}")),
        }
    }
    t
}

fn free_bases() -> Tally {
    let q = Rationals;
    let mut t = Tally::default();
    let mut jobs = Vec::new();
    for v in [VarietyTag::NPl, VarietyTag::NPr] {
        for kind in [UnderlyingKind::Assoc, UnderlyingKind::Leibniz] {
            for gens in [1usize, 2] {
                jobs.push((v, kind, gens));
            }
        }
    }
    let parts = map_ordered(&jobs, |&(v, kind, gens)| {
        let names = ["x", "y"][..gens].iter().map(|s| s.to_string()).collect();
        let alg = FreeAlgebra::new(&q, v, names).expect("bracketed variety");
        underlying_free_basis_report(&alg, kind, 4)
    });
    for ((v, kind, gens), rep) in jobs.into_iter().zip(parts) {
        let tag = format!("{v}/{kind:?}/{gens} generators");
        match rep {
            Ok(r) => {
                let first_bad = r.checks.iter().find(|c| !(c.spans && c.independent && c.rank == c.dim));
                t.check(r.holds, || match first_bad {
                    Some(c) => format!(
                        "{tag}: multidegree {:?} has dim {} but {} free words of rank {}",
                        c.multidegree, c.dim, c.free_words, c.rank
                    ),
                    None => format!("{tag}: fails"),
                });
            }
            Err(e) => t.error(format!("{tag}: {e}")),
        }
    }
    match associative_dependence_witness(&q, VarietyTag::NPlr) {
        Ok(w) => t.check(w.holds(), || "NPlr dependence witness does not vanish".into()),
        Err(e) => t.error(format!("NPlr witness: {e}")),
    }
    t
}

fn derived<F: Field>(f: &F, cfg: &SuiteConfig) -> Tally {
    let premises = [VarietyTag::NPlr, VarietyTag::AWBlr, VarietyTag::Leibniz, VarietyTag::NPr, VarietyTag::NPl];
    per_instance(f, cfg, "derived", &premises, 20, |v, i, rng, t| {
        let tag = label(f, "", v, i);
        match random::random_algebra(f, v, 2 + i % 2, rng) {
            Ok(a) => {
                let rep = check_derived_identities(&a);
                for e in rep.entries.iter().filter(|e| e.premise_holds) {
                    t.check(e.holds, || format!("{tag}: {} fails at {:?}", e.identity, e.witness));
                }
            }
            Err(e) => t.error(format!("{tag}: {e}")),
        }
    })
}

fn mutation(cfg: &SuiteConfig) -> Tally {
    let q = Rationals;
    per_instance(&q, cfg, "mutation", &[VarietyTag::NPlr], 20, |v, i, rng, t| {
        let tag = label(&q, "", v, i);
        let a = match random::random_algebra(&q, v, 3, rng) {
            Ok(a) => a,
            Err(e) => return t.error(format!("{tag}: {e}")),
        };
        let n = a.dim();
        let mut slots: Vec<(bool, usize, usize, usize)> = Vec::new();
        for which in [false, true] {
            for i in 0..n {
                for j in 0..n {
                    for k in 0..n {
                        slots.push((which, i, j, k));
                    }
                }
            }
        }
        rand::seq::SliceRandom::shuffle(slots.as_mut_slice(), rng);
        let broken = slots.into_iter().find_map(|(bracket, i, j, k)| {
            let mut b = a.clone();
            let mut v = if bracket { a.bracket_basis(i, j).to_vec() } else { a.dot_basis(i, j).to_vec() };
            v = crate::exactlin::sparse_add(&q, &v, &[(k, q.one())]);
            if bracket {
                b.set_bracket(i, j, v);
            } else {
                b.set_dot(i, j, v);
            }
            let lost = !classify(&b).contains(&VarietyTag::NPlr);
            let witness = VarietyTag::NPlr.defining_identities().into_iter().find(|id| identity_witness(&b, *id).is_some());
            (lost && witness.is_some()).then_some(witness)
        });
        t.check(broken.is_some(), || format!("{tag}: no single-constant perturbation leaves NPlr"));
    })
}

fn examples_basic<F: Field>(f: &F, cfg: &SuiteConfig) -> Tally {
    let mut t = Tally::default();
    let mut rng = stream(cfg.seed, &format!("examples/{}", f.spec()));
    let leibniz = |a: &BiAlgebra<F>| a.has_zero_dot() && !a.has_zero_bracket() && check_identity(a, IdentityTag::Leibniz);
    for k in 0..cfg.count(20) {
        match random::search(f, 3, 20_000, &mut rng, leibniz) {
            Some(a) => t.check(classify(&a).contains(&VarietyTag::NPlr), || format!("{}: dot-zero Leibniz #{k} not NPlr", f.spec())),
            None => t.error(format!("{}: no dot-zero Leibniz algebra found", f.spec())),
        }
        let n = 1 + k % 3;
        let a = random::associative(f, n, &mut rng).change_basis(&random::invertible(f, n, &mut rng)).expect("invertible");
        match commutator_bracket(&a) {
            Ok(c) => t.check(classify(&c).contains(&VarietyTag::NPlr), || format!("{}: commutator #{k} not NPlr", f.spec())),
            Err(e) => t.error(format!("{}: {e}", f.spec())),
        }
    }
    t
}

/// Brackets built from a map `D` on small associative algebras over F2.
fn examples_derivation(cfg: &SuiteConfig) -> Tally {
    let f2 = PrimeField::new(2).expect("prime");
    let mut t = Tally::default();
    let mut rng = stream(cfg.seed, "examples/derivation");
    let (mut sq_zero, mut linear) = (Vec::new(), Vec::new());
    for _ in 0..20_000 {
        if sq_zero.len() >= 40 && linear.len() >= 40 {
            break;
        }
        let n = rand::Rng::gen_range(&mut rng, 1..=3);
        let a = random::associative(&f2, n, &mut rng).change_basis(&random::invertible(&f2, n, &mut rng)).expect("invertible");
        let d = random::linear_map(&f2, n, &mut rng);
        if is_square_zero_derivation(&a, &d).unwrap_or(false) && !d.matrix.is_zero() {
            if sq_zero.len() < 40 {
                sq_zero.push((a, d));
            }
        } else if linear.len() < 40 {
            linear.push((a, d));
        }
    }
    let sides = [(DerivationSide::Left, VarietyTag::NPl, VarietyTag::NPr, VarietyTag::AWBl), (DerivationSide::Right, VarietyTag::NPr, VarietyTag::NPl, VarietyTag::AWBr)];
    for (side, np, other, awb) in sides {
        // square-zero derivation: always np
        let tags: Vec<_> = sq_zero.iter().map(|(a, d)| classify(&derivation_bracket(a, d, side).expect("square"))).collect();
        for (k, s) in tags.iter().enumerate() {
            t.check(s.contains(&np), || format!("square-zero {side:?} #{k} is not {np}"));
        }
        let in_family = tags.iter().filter(|s| !s.contains(&other)).count();
        t.notes.push(format!("{np} from square-zero derivations: {in_family} of {} avoid {other}", tags.len()));
        // a witness of np without the other side, from the general search
        let w = random::search(&f2, 3, 200_000, &mut rng, |a| {
            let s = classify(a);
            s.contains(&np) && !s.contains(&other)
        });
        t.check(w.is_some(), || format!("no F2 witness of {np} without {other} up to dim 3"));
        if let Some(a) = w {
            t.notes.push(format!("{np} and not {other}: {}", crate::algebra::algebra_to_json(&a)));
        }
        // merely linear map: always awb, and a witness outside np
        let tags: Vec<_> = linear.iter().map(|(a, d)| classify(&derivation_bracket(a, d, side).expect("square"))).collect();
        for (k, s) in tags.iter().enumerate() {
            t.check(s.contains(&awb), || format!("linear {side:?} #{k} is not {awb}"));
        }
        let w = tags.iter().position(|s| !s.contains(&np));
        t.check(w.is_some(), || format!("no F2 witness of {awb} without {np}"));
        if let Some(k) = w {
            let b = derivation_bracket(&linear[k].0, &linear[k].1, side).expect("square");
            t.notes.push(format!("{awb} and not {np}: {}", crate::algebra::algebra_to_json(&b)));
        }
    }
    t
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn quick_suite_is_deterministic() {
        let cfg = SuiteConfig::new(5, Scale::Quick);
        let a: Vec<_> = [1u8, 3, 10].iter().map(|&i| run_criterion(i, &cfg)).collect();
        let b: Vec<_> = [1u8, 3, 10].iter().map(|&i| run_criterion(i, &cfg)).collect();
        assert_eq!(render(&cfg, &a), render(&cfg, &b));
        assert!(a.iter().all(|r| r.passed), "{:#?}", a);
        assert!(determinism_check(&cfg, &[1, 3, 10], &render(&cfg, &a)).passed);
        assert!(!determinism_check(&cfg, &[1], &render(&cfg, &a)).passed);
    }

    #[test]
    fn unknown_criterion_fails() {
        let r = run_criterion(0, &SuiteConfig::new(1, Scale::Quick));
        assert!(!r.passed);
        assert_eq!(r.title, "unknown");
    }
}
