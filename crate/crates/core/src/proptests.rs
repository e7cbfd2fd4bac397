//! Property tests for invariants of the exact linear algebra, free algebras and complexes.

use crate::actions::{check_action, derivations};
use crate::algebra::{classify, VarietyTag};
use crate::cohomology::{build_complex, cohomology_dims};
use crate::exactlin::{kernel, rank, solve, Field, Matrix, PivotRule, PrimeField, Rationals};
use crate::freealg::{extend_map, interpret, FreeAlgebra, Strategy as Rewrite};
use crate::random::{self, stream};
use proptest::prelude::*;

/// Dense Gaussian elimination, independent of the sparse echelon code.
fn dense_rank<F: Field>(f: &F, rows: &[Vec<i64>]) -> usize {
    let mut m: Vec<Vec<F::Elem>> = rows.iter().map(|r| r.iter().map(|&x| f.from_i64(x)).collect()).collect();
    let cols = m.first().map_or(0, Vec::len);
    let mut r = 0;
    for c in 0..cols {
        let Some(p) = (r..m.len()).find(|&i| !f.is_zero(&m[i][c])) else { continue };
        m.swap(r, p);
        let inv = f.inv(&m[r][c]).expect("nonzero pivot");
        for i in 0..m.len() {
            if i != r && !f.is_zero(&m[i][c]) {
                let k = f.mul(&m[i][c], &inv);
                for j in 0..cols {
                    let t = f.mul(&k, &m[r][j]);
                    m[i][j] = f.sub(&m[i][j], &t);
                }
            }
        }
        r += 1;
    }
    r
}

fn matrix_strategy() -> impl Strategy<Value = Vec<Vec<i64>>> {
    (1usize..7, 1usize..7).prop_flat_map(|(r, c)| prop::collection::vec(prop::collection::vec(-3i64..=3, c), r))
}

fn variety_strategy() -> impl Strategy<Value = VarietyTag> {
    prop::sample::select(VarietyTag::BRACKETED.to_vec())
}

fn check_rank_laws<F: Field>(f: &F, rows: &[Vec<i64>]) -> Result<(), TestCaseError> {
    let m = Matrix::from_i64(f, rows);
    let r = rank(&m);
    prop_assert_eq!(r, dense_rank(f, rows));
    prop_assert_eq!(r, rank(&m.transpose()));
    let k = kernel(&m);
    prop_assert_eq!(k.dim() + r, m.cols());
    for v in k.basis() {
        prop_assert!(m.mul_vec(v).is_empty());
    }
    Ok(())
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn rank_matches_dense_elimination(rows in matrix_strategy()) {
        check_rank_laws(&Rationals, &rows)?;
        check_rank_laws(&PrimeField::new(2).unwrap(), &rows)?;
        check_rank_laws(&PrimeField::new(5).unwrap(), &rows)?;
    }

    #[test]
    fn solve_recovers_consistent_systems(rows in matrix_strategy(), seed in any::<u64>()) {
        let q = Rationals;
        let m = Matrix::from_i64(&q, &rows);
        let mut rng = stream(seed, "solve");
        let x = random::random_vector(&q, m.cols(), &mut rng);
        let b = m.mul_vec(&x);
        for rule in [PivotRule::LowestIndex, PivotRule::HighestIndex] {
            let y = solve(&m, &b, rule);
            prop_assert!(y.is_some());
            prop_assert_eq!(m.mul_vec(&y.unwrap()), b.clone());
        }
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(24))]

    #[test]
    fn normal_forms_evaluate_like_terms(v in variety_strategy(), degree in 1usize..=5, seed in any::<u64>()) {
        let f = PrimeField::new(3).unwrap();
        let mut rng = stream(seed, "eval");
        let alg = FreeAlgebra::new(&f, v, vec!["x".into(), "y".into()]).unwrap();
        let t = random::random_term(2, degree, &mut rng);
        let inner = alg.normalize_with(&t, Rewrite::Innermost).unwrap();
        prop_assert_eq!(&inner, &alg.normalize_with(&t, Rewrite::Outermost).unwrap());
        let target = random::random_algebra(&f, v, 2, &mut rng).unwrap();
        let images: Vec<_> = (0..2).map(|_| random::random_vector(&f, 2, &mut rng)).collect();
        let ev = extend_map(v, images.clone(), &target).unwrap();
        prop_assert_eq!(ev.eval(&inner), interpret(&t, &images, &target));
    }

    #[test]
    fn classification_is_basis_independent(v in variety_strategy(), dim in 1usize..=3, seed in any::<u64>()) {
        let f = PrimeField::new(3).unwrap();
        let mut rng = stream(seed, "basis");
        let a = random::random_algebra(&f, v, dim, &mut rng).unwrap();
        let g = random::invertible(&f, dim, &mut rng);
        prop_assert_eq!(classify(&a), classify(&a.change_basis(&g).unwrap()));
    }

    #[test]
    fn complexes_square_to_zero_over_f3(v in variety_strategy(), dim in 1usize..=2, seed in any::<u64>()) {
        let f = PrimeField::new(3).unwrap();
        let mut rng = stream(seed, "square");
        let p = random::random_algebra(&f, v, dim, &mut rng).unwrap();
        let r = random::random_representation(v, &p, 2, &mut rng);
        prop_assert!(check_action(v, &r));
        prop_assert_eq!(build_complex(v, &r, 4).unwrap().square_defect(), None);
    }

    #[test]
    fn first_cohomology_counts_derivations(v in variety_strategy(), dim in 1usize..=3, seed in any::<u64>()) {
        let q = Rationals;
        let mut rng = stream(seed, "h1");
        let p = random::random_algebra(&q, v, dim, &mut rng).unwrap();
        let r = random::random_representation(v, &p, 2, &mut rng);
        let h = cohomology_dims(&build_complex(v, &r, 2).unwrap(), 1).unwrap();
        prop_assert_eq!(h[0], 0);
        prop_assert_eq!(h[1], derivations(v, &r).dim());
    }
}
