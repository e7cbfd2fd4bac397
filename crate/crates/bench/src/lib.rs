//! Fixed inputs shared by the benchmarks.

use npb_core::actions::Representation;
use npb_core::algebra::VarietyTag;
use npb_core::exactlin::{Field, Matrix};
use npb_core::freealg::Term;
use npb_core::random::{self, stream};
use rand::Rng;

/// A `rows x cols` matrix with roughly `density` nonzero entries in `[-2, 2]`.
pub fn sparse_matrix<F: Field>(f: &F, rows: usize, cols: usize, density: f64, seed: u64) -> Matrix<F> {
    let mut rng = stream(seed, "bench/matrix");
    let triplets: Vec<(usize, usize, F::Elem)> = (0..rows)
        .flat_map(|i| (0..cols).map(move |j| (i, j)))
        .filter_map(|(i, j)| rng.gen_bool(density).then(|| (i, j, f.from_i64(rng.gen_range(-2..=2)))))
        .collect();
    Matrix::from_triplets(f, rows, cols, triplets)
}

/// A random representation of a random algebra in the variety.
pub fn instance<F: Field>(f: &F, v: VarietyTag, dim_p: usize, dim_m: usize, seed: u64) -> Representation<F> {
    let mut rng = stream(seed, "bench/instance");
    let p = random::random_algebra(f, v, dim_p, &mut rng).expect("variety has members");
    random::random_representation(v, &p, dim_m, &mut rng)
}

/// Random terms of the given degree on `gens` generators.
pub fn terms(gens: usize, degree: usize, count: usize, seed: u64) -> Vec<Term> {
    let mut rng = stream(seed, "bench/terms");
    (0..count).map(|_| random::random_term(gens, degree, &mut rng)).collect()
}
