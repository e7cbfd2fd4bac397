use super::*;
use crate::algebra::{classify, commutator_bracket, samples, VarietyTag};
use crate::exactlin::{Field, PrimeField, Rationals};

fn x() -> Vec<String> {
    vec!["x".into()]
}

fn xyz() -> Vec<String> {
    vec!["x".into(), "y".into(), "z".into()]
}

#[test]
fn nplr_one_generator_counts() {
    let alg = FreeAlgebra::new(&Rationals, VarietyTag::NPlr, x()).unwrap();
    let fmt = |n| alg.enumerate_basis(n).unwrap().iter().map(|w| alg.format_word(w)).collect::<Vec<_>>();
    assert_eq!(fmt(1), vec!["x"]);
    assert_eq!(fmt(2), vec!["x*x", "[x,x]"]);
    assert_eq!(fmt(3), vec!["x*x*x", "x*[x,x]", "[x,x]*x", "[[x,x],x]"]);
}

#[test]
fn defining_identities_as_rewrites() {
    let alg = FreeAlgebra::new(&Rationals, VarietyTag::NPlr, xyz()).unwrap();
    let n = |s: &str| alg.format(&alg.normalize(&alg.parse(s).unwrap()).unwrap());
    assert_eq!(n("[x*y,z]"), "x*[y,z] + [x,z]*y");
    assert_eq!(n("[x,[y,z]]"), "[[x,y],z] + -1 [[x,z],y]");
    let r = FreeAlgebra::new(&Rationals, VarietyTag::NPr, xyz()).unwrap();
    let xe = r.generator(0);
    let xy = r.normalize(&r.parse("x*y").unwrap()).unwrap();
    assert_eq!(r.format(&r.free_bracket(&xe, &xy).unwrap()), "x*[x,y] + [x,x]*y");
}

#[test]
fn dot_is_associative_and_zero_absorbs() {
    let alg = FreeAlgebra::new(&Rationals, VarietyTag::AWBl, xyz()).unwrap();
    let g: Vec<_> = (0..3).map(|i| alg.generator(i)).collect();
    let l = alg.free_dot(&alg.free_dot(&g[0], &g[1]).unwrap(), &g[2]).unwrap();
    let r = alg.free_dot(&g[0], &alg.free_dot(&g[1], &g[2]).unwrap()).unwrap();
    assert_eq!(l, r);
    assert!(alg.free_dot(&g[0], &FreeElement::zero(VarietyTag::AWBl)).unwrap().is_zero());
}

#[test]
fn degree_cap_is_enforced() {
    let alg = FreeAlgebra::new(&Rationals, VarietyTag::NPlr, x()).unwrap().with_degree_cap(3);
    let t = alg.parse("x*x*x*x").unwrap();
    assert_eq!(alg.normalize(&t), Err(crate::Error::DegreeCap(4, 3)));
}

#[test]
fn strategies_agree_through_degree_four() {
    for v in VarietyTag::BRACKETED {
        let alg = FreeAlgebra::new(&PrimeField::new(5).unwrap(), v, vec!["x".into(), "y".into()]).unwrap();
        let rep = confluence_check(&alg, 4).unwrap();
        assert_eq!(rep.disagreements, 0, "{v}");
    }
}

#[test]
fn normal_words_avoid_rewritten_patterns() {
    for v in VarietyTag::BRACKETED {
        let alg = FreeAlgebra::new(&Rationals, v, vec!["x".into(), "y".into()]).unwrap();
        for n in 1..=4 {
            for w in alg.enumerate_basis(n).unwrap() {
                assert!(w.forbidden_patterns(v).is_empty(), "{v}: {}", alg.format_word(&w));
            }
        }
    }
}

#[test]
fn truncated_algebra_small_cases() {
    let alg = FreeAlgebra::new(&Rationals, VarietyTag::NPlr, x()).unwrap();
    let (a1, _) = truncated_free_algebra(&alg, 1).unwrap();
    assert_eq!(a1.dim(), 1);
    assert!(a1.has_zero_dot() && a1.has_zero_bracket());
    let (a2, words) = truncated_free_algebra(&alg, 2).unwrap();
    assert_eq!(a2.dim(), 3);
    assert_eq!(a2.basis_names(), &["x", "x*x", "[x,x]"]);
    assert_eq!(a2.dot_basis(0, 0), &[(1, Rationals.one())]);
    assert_eq!(a2.bracket_basis(0, 0), &[(2, Rationals.one())]);
    assert!(a2.dot_basis(0, 1).is_empty());
    assert_eq!(words.len(), 3);
}

#[test]
fn truncated_algebras_carry_their_tags() {
    let f = PrimeField::new(3).unwrap();
    for v in VarietyTag::BRACKETED {
        let alg = FreeAlgebra::new(&f, v, vec!["x".into(), "y".into()]).unwrap();
        let (a, _) = truncated_free_algebra(&alg, 3).unwrap();
        assert!(classify(&a).contains(&v), "{v}");
    }
}

#[test]
fn evaluation_matches_interpretation() {
    let f = PrimeField::new(7).unwrap();
    let b = commutator_bracket(&samples::upper_triangular(&f)).unwrap();
    let images = vec![vec![(0, f.one()), (1, f.from_i64(3))], vec![(1, f.one()), (2, f.from_i64(2))]];
    for v in VarietyTag::BRACKETED {
        let alg = FreeAlgebra::new(&f, v, vec!["x".into(), "y".into()]).unwrap();
        let ev = extend_map(v, images.clone(), &b).unwrap();
        for s in ["[x*y,x]", "[x,[y,x*y]]", "[[x,y]*x,y]", "x*[y,[x,y]]*y", "[x*y,y*x]"] {
            let t = alg.parse(s).unwrap();
            assert_eq!(ev.eval(&alg.normalize(&t).unwrap()), interpret(&t, &images, &b), "{v} {s}");
        }
    }
}

#[test]
fn zero_images_evaluate_to_zero() {
    let q = Rationals;
    let b = commutator_bracket(&samples::upper_triangular(&q)).unwrap();
    let alg = FreeAlgebra::new(&q, VarietyTag::NPlr, x()).unwrap();
    let ev = extend_map(VarietyTag::NPlr, vec![vec![]], &b).unwrap();
    for w in alg.enumerate_basis(3).unwrap() {
        assert!(ev.eval_word(&w).is_empty());
    }
}

#[test]
fn underlying_free_structures_small() {
    let q = Rationals;
    let npl = FreeAlgebra::new(&q, VarietyTag::NPl, x()).unwrap();
    assert!(underlying_free_basis_report(&npl, UnderlyingKind::Assoc, 3).unwrap().holds);
    let npr = FreeAlgebra::new(&q, VarietyTag::NPr, x()).unwrap();
    assert!(underlying_free_basis_report(&npr, UnderlyingKind::Leibniz, 3).unwrap().holds);
}

#[test]
fn nplr_dependence_witness() {
    let w = associative_dependence_witness(&Rationals, VarietyTag::NPlr).unwrap();
    assert!(w.holds());
}

// Leibniz plus the right Poisson rule force a relation among brackets of lower-degree elements in degree 4,
// so the degree-4 Leibniz check for one-generator NPr cannot pass for any generator choice.
#[test]
fn npr_degree_four_bracket_relation() {
    let q = Rationals;
    let alg = FreeAlgebra::new(&q, VarietyTag::NPr, x()).unwrap();
    let n = |s: &str| alg.normalize(&alg.parse(s).unwrap()).unwrap();
    let lhs = n("[[x,x*x],x]");
    let rhs = alg.add(&n("[[x,x],x*x]"), &n("[x,x*[x,x]]"), &q.from_i64(-2));
    assert_eq!(lhs, rhs);
    let r = underlying_free_basis_report(&alg, UnderlyingKind::Leibniz, 4).unwrap();
    let c4 = r.checks.iter().find(|c| c.multidegree == vec![4]).unwrap();
    assert_eq!((c4.dim, c4.free_words, c4.rank), (13, 14, 13));
}
