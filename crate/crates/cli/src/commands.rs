//! Subcommand implementations. Each returns the rendered output and whether every check passed.

use anyhow::{bail, Result};
use npb_core::actions::{action_witness, enumerate_extensions, ExtensionGuard, Representation};
use npb_core::algebra::{check_derived_identities, classify, identity_witness, BiAlgebra, VarietyTag};
use npb_core::cohomology::{build_complex, cohomology_dims, cohomology_report, restricted_h2};
use npb_core::exactlin::{Field, FieldSpec, PrimeField, Rationals};
use npb_core::freealg::{
    confluence_check, multidegrees, underlying_free_basis_report, FreeAlgebra, UnderlyingKind,
};
use npb_core::lescheck::{verify_les, SesTag};
use npb_core::suite::{determinism_check, render, run_criterion, Scale, SuiteConfig};
use serde_json::{json, Map, Value};

use crate::input::{digest, guard_dim, Source};
use crate::{CheckArgs, Cli, Command, CohomologyArgs, ExtensionsArgs, Format, FreeArgs, LesArgs, ReportArgs, Underlying};

/// Default bound on `dim P + dim M` for cohomology and sequences.
const COHOMOLOGY_GUARD: usize = 8;

pub struct Outcome {
    pub text: String,
    pub ok: bool,
}

impl Outcome {
    fn new(text: String, ok: bool) -> Self {
        Outcome { text, ok }
    }
}

/// Instantiates the field named by a spec and evaluates `$body` with it bound to `$f`.
macro_rules! with_field {
    ($spec:expr, |$f:ident| $body:expr) => {
        match $spec {
            FieldSpec::Rationals => {
                let $f = Rationals;
                $body
            }
            FieldSpec::PrimeField(p) => {
                let $f = PrimeField::new(p)?;
                $body
            }
        }
    };
}

pub fn run(cli: &Cli) -> Result<Outcome> {
    let requested = cli.field.as_deref().map(FieldSpec::parse).transpose()?;
    let fmt = cli.format;
    match &cli.command {
        Command::Check(a) => {
            let src = Source::read(&a.algebra)?;
            let rep = a.rep.as_deref().map(Source::read).transpose()?;
            with_field!(src.field_spec(requested)?, |f| check(&f, &src, rep.as_ref(), a, fmt))
        }
        Command::Classify { algebra } => {
            let src = Source::read(algebra)?;
            with_field!(src.field_spec(requested)?, |f| classify_cmd(&f, &src, fmt))
        }
        Command::Free(a) => with_field!(requested.unwrap_or(FieldSpec::Rationals), |f| free(&f, a, fmt)),
        Command::Cohomology(a) => {
            let src = Source::read(&a.algebra)?;
            let rep = a.rep.as_deref().map(Source::read).transpose()?;
            with_field!(src.field_spec(requested)?, |f| cohomology(&f, &src, rep.as_ref(), a, fmt))
        }
        Command::Les(a) => {
            let src = Source::read(&a.algebra)?;
            let rep = a.rep.as_deref().map(Source::read).transpose()?;
            with_field!(src.field_spec(requested)?, |f| les(&f, &src, rep.as_ref(), a, fmt))
        }
        Command::Extensions(a) => {
            let src = Source::read(&a.algebra)?;
            let rep = a.rep.as_deref().map(Source::read).transpose()?;
            with_field!(src.field_spec(requested)?, |f| extensions(&f, &src, rep.as_ref(), a, fmt))
        }
        Command::Report(a) => report(cli.seed, a, fmt),
    }
}

fn variety(s: &str) -> Result<VarietyTag> {
    Ok(VarietyTag::parse(s)?)
}

fn bracketed(s: &str) -> Result<VarietyTag> {
    let v = variety(s)?;
    if !VarietyTag::BRACKETED.contains(&v) {
        bail!("--variety must be one of npl, npr, nplr, awbl, awbr, awblr, got `{s}`");
    }
    Ok(v)
}

fn line(v: Value) -> String {
    let mut s = v.to_string();
    s.push('\n');
    s
}

/// First failing defining identity of `v`, located on basis elements.
fn membership_witness<F: Field>(p: &BiAlgebra<F>, v: VarietyTag) -> Option<(String, Vec<String>)> {
    v.defining_identities().into_iter().find_map(|id| {
        identity_witness(p, id).map(|w| (id.to_string(), w.iter().map(|&i| p.basis_names()[i].clone()).collect()))
    })
}

/// Loads `P` and `M`, defaulting to the regular representation, and checks that `r` is a
/// representation for `v` with `P` in `v`. A failure is returned as a rendered witness.
fn load_instance<F: Field>(
    f: &F,
    src: &Source,
    rep: Option<&Source>,
    v: VarietyTag,
) -> Result<std::result::Result<Representation<F>, String>> {
    let p = src.algebra(f)?;
    let r = match rep {
        Some(s) => s.representation(&p)?,
        None => Representation::regular(&p),
    };
    if let Some((id, args)) = membership_witness(&p, v) {
        return Ok(Err(format!("algebra is not {v}: {id} fails at ({})", args.join(", "))));
    }
    if let Some(w) = action_witness(v, &r) {
        return Ok(Err(format!("not a {v} representation: {w}")));
    }
    Ok(Ok(r))
}

fn witness_outcome(msg: String, fmt: Format) -> Outcome {
    let text = match fmt {
        Format::Text => format!("FAIL {msg}\n"),
        Format::Json => line(json!({ "ok": false, "witness": msg })),
    };
    Outcome::new(text, false)
}

fn check_size<F: Field>(r: &Representation<F>, default: usize) -> Result<()> {
    let limit = guard_dim(default)?;
    let total = r.algebra.dim() + r.module_dim;
    if total > limit {
        bail!("guard exceeded: dim P + dim M = {total} > {limit} (set NPB_GUARD_DIM to raise)");
    }
    Ok(())
}

fn check<F: Field>(f: &F, src: &Source, rep: Option<&Source>, a: &CheckArgs, fmt: Format) -> Result<Outcome> {
    let p = src.algebra(f)?;
    let Some(name) = &a.variety else {
        if rep.is_some() {
            bail!("--rep needs --variety");
        }
        let report = check_derived_identities(&p);
        let ok = !report.has_violation();
        let text = match fmt {
            Format::Json => line(serde_json::to_value(&report)?),
            Format::Text => {
                let mut s = String::new();
                for e in &report.entries {
                    let status = match (e.premise_holds, e.holds) {
                        (true, true) => "holds",
                        (true, false) => "VIOLATED",
                        (false, true) => "holds (premise fails)",
                        (false, false) => "fails (premise fails)",
                    };
                    s.push_str(&format!("{:<28} {:<8} {status}", e.identity.to_string(), e.premise.to_string()));
                    if let Some(w) = &e.witness {
                        let names: Vec<&str> = w.iter().map(|&i| p.basis_names()[i].as_str()).collect();
                        s.push_str(&format!(" at ({})", names.join(", ")));
                    }
                    s.push('\n');
                }
                s
            }
        };
        return Ok(Outcome::new(text, ok));
    };
    let v = variety(name)?;
    if let Some((id, args)) = membership_witness(&p, v) {
        return Ok(witness_outcome(format!("algebra is not {v}: {id} fails at ({})", args.join(", ")), fmt));
    }
    if let Some(s) = rep {
        let r = s.representation(&p)?;
        if let Some(w) = action_witness(v, &r) {
            return Ok(witness_outcome(format!("not a {v} representation: {w}"), fmt));
        }
    }
    let text = match fmt {
        Format::Text => format!("PASS {v}\n"),
        Format::Json => line(json!({ "ok": true, "variety": v.name() })),
    };
    Ok(Outcome::new(text, true))
}

fn classify_cmd<F: Field>(f: &F, src: &Source, fmt: Format) -> Result<Outcome> {
    let p = src.algebra(f)?;
    let tags: Vec<&str> = classify(&p).into_iter().map(VarietyTag::name).collect();
    let text = match fmt {
        Format::Text => format!("{}\n", tags.join(" ")),
        Format::Json => line(json!({ "field": f.spec().to_string(), "dim": p.dim(), "varieties": tags })),
    };
    Ok(Outcome::new(text, true))
}

fn free<F: Field>(f: &F, a: &FreeArgs, fmt: Format) -> Result<Outcome> {
    let v = bracketed(&a.variety)?;
    let alg = FreeAlgebra::new(f, v, a.gens.clone())?;
    if let Some(t) = &a.term {
        let x = alg.normalize(&alg.parse(t)?)?;
        let text = match fmt {
            Format::Text => format!("{}\n", alg.format(&x)),
            Format::Json => line(json!({ "variety": v.name(), "term": t, "normal_form": alg.format(&x) })),
        };
        return Ok(Outcome::new(text, true));
    }
    if a.confluence {
        let r = confluence_check(&alg, a.max_degree)?;
        let text = match fmt {
            Format::Text => format!(
                "{} words through degree {}: {} disagreements ({} agree after the first stage)\n",
                r.words_checked, a.max_degree, r.disagreements, r.first_stage_agreements
            ),
            Format::Json => line(serde_json::to_value(&r)?),
        };
        return Ok(Outcome::new(text, r.disagreements == 0));
    }
    if let Some(u) = a.underlying {
        let kind = match u {
            Underlying::Assoc => UnderlyingKind::Assoc,
            Underlying::Leibniz => UnderlyingKind::Leibniz,
        };
        let r = underlying_free_basis_report(&alg, kind, a.max_degree)?;
        let text = match fmt {
            Format::Json => r.checks.iter().map(|c| line(serde_json::to_value(c).expect("plain struct"))).collect(),
            Format::Text => {
                let mut s = format!("{:<12} {:>5} {:>6} {:>5}  new generators\n", "multidegree", "dim", "words", "rank");
                for c in &r.checks {
                    let md: Vec<String> = c.multidegree.iter().map(u8::to_string).collect();
                    s.push_str(&format!(
                        "{:<12} {:>5} {:>6} {:>5}  {}\n",
                        md.join(","),
                        c.dim,
                        c.free_words,
                        c.rank,
                        c.chosen.join(" ")
                    ));
                }
                s.push_str(if r.holds { "free\n" } else { "NOT free\n" });
                s
            }
        };
        return Ok(Outcome::new(text, r.holds));
    }
    let mut text = String::new();
    for n in 1..=a.max_degree {
        for md in multidegrees(a.gens.len(), n) {
            let words: Vec<String> = alg.basis_in(&md)?.iter().map(|w| alg.format_word(w)).collect();
            text.push_str(&match fmt {
                Format::Json => line(json!({ "multidegree": md, "dim": words.len(), "basis": words })),
                Format::Text => {
                    let md: Vec<String> = md.iter().map(u8::to_string).collect();
                    format!("[{}] dim {}: {}\n", md.join(","), words.len(), words.join(", "))
                }
            });
        }
    }
    Ok(Outcome::new(text, true))
}

fn cohomology<F: Field>(
    f: &F,
    src: &Source,
    rep: Option<&Source>,
    a: &CohomologyArgs,
    fmt: Format,
) -> Result<Outcome> {
    let v = bracketed(&a.variety)?;
    let r = match load_instance(f, src, rep, v)? {
        Ok(r) => r,
        Err(w) => return Ok(witness_outcome(w, fmt)),
    };
    check_size(&r, COHOMOLOGY_GUARD)?;
    let report = cohomology_report(v, &r, a.max_degree)?;
    let text = match fmt {
        Format::Text => report.text(),
        Format::Json => {
            let mut extra = Map::new();
            let inputs: Vec<&Source> = std::iter::once(src).chain(rep).collect();
            extra.insert("input_sha256".into(), json!(digest(&inputs)));
            report.json_lines(extra)
        }
    };
    Ok(Outcome::new(text, true))
}

fn les<F: Field>(f: &F, src: &Source, rep: Option<&Source>, a: &LesArgs, fmt: Format) -> Result<Outcome> {
    let tag = SesTag::parse(&a.tag)?;
    let r = match load_instance(f, src, rep, tag.variety())? {
        Ok(r) => r,
        Err(w) => return Ok(witness_outcome(w, fmt)),
    };
    check_size(&r, COHOMOLOGY_GUARD)?;
    let report = verify_les(tag, &r, a.max_degree)?;
    let text = match fmt {
        Format::Text => report.table(),
        Format::Json => line(serde_json::to_value(&report)?),
    };
    Ok(Outcome::new(text, report.exact))
}

fn extensions<F: Field>(
    f: &F,
    src: &Source,
    rep: Option<&Source>,
    a: &ExtensionsArgs,
    fmt: Format,
) -> Result<Outcome> {
    let v = bracketed(&a.variety)?;
    let Some(q) = f.elements().map(|e| e.len() as u64) else {
        bail!("extension enumeration needs a finite field, got {}", f.spec());
    };
    let r = match load_instance(f, src, rep, v)? {
        Ok(r) => r,
        Err(w) => return Ok(witness_outcome(w, fmt)),
    };
    let guard = ExtensionGuard { max_total_dim: guard_dim(ExtensionGuard::default().max_total_dim)?, ..Default::default() };
    let count = enumerate_extensions(&r, v, guard)?;
    let h = match v {
        VarietyTag::NPl | VarietyTag::NPr | VarietyTag::NPlr => restricted_h2(v, &r)?,
        _ => cohomology_dims(&build_complex(v, &r, 3)?, 2)?[2],
    };
    let predicted = q.checked_pow(h as u32);
    let ok = predicted == Some(count.classes);
    let text = match fmt {
        Format::Text => format!(
            "{v} over {}: dim H^2 = {h}, {q}^{h} = {}, extension classes = {} ({} valid of {} candidates)\n{}\n",
            f.spec(),
            predicted.map_or("overflow".to_string(), |p| p.to_string()),
            count.classes,
            count.valid,
            count.candidates,
            if ok { "match" } else { "MISMATCH" }
        ),
        Format::Json => line(json!({
            "variety": v.name(),
            "field": f.spec().to_string(),
            "h2": h,
            "predicted": predicted,
            "classes": count.classes,
            "valid": count.valid,
            "candidates": count.candidates,
            "match": ok,
        })),
    };
    Ok(Outcome::new(text, ok))
}

fn report(seed: u64, a: &ReportArgs, fmt: Format) -> Result<Outcome> {
    let cfg = SuiteConfig::new(seed, if a.quick { Scale::Quick } else { Scale::Full });
    let mut ids: Vec<u8> = if a.criteria.is_empty() { (1..=12).collect() } else { a.criteria.clone() };
    ids.sort_unstable();
    ids.dedup();
    let checked: Vec<u8> = ids.iter().copied().filter(|&i| i != 12).collect();
    let mut results: Vec<_> = checked.iter().map(|&i| run_criterion(i, &cfg)).collect();
    if ids.contains(&12) {
        let ids11: Vec<u8> = if checked.is_empty() { (1..=11).collect() } else { checked.clone() };
        let first = if checked.is_empty() {
            render(&cfg, &ids11.iter().map(|&i| run_criterion(i, &cfg)).collect::<Vec<_>>())
        } else {
            render(&cfg, &results)
        };
        results.push(determinism_check(&cfg, &ids11, &first));
    }
    let ok = results.iter().all(|r| r.passed);
    let text = match fmt {
        Format::Json => render(&cfg, &results),
        Format::Text => {
            let mut s = format!("seed {} ({:?} scale)\n", cfg.seed, cfg.scale);
            for r in &results {
                s.push_str(&r.line());
                s.push('\n');
                for f in &r.failures {
                    s.push_str(&format!("    failure: {f}\n"));
                }
            }
            s
        }
    };
    Ok(Outcome::new(text, ok))
}
