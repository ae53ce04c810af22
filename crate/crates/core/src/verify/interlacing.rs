use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use super::{
    ReportBuilder, TreeSpectrum, VerificationReport, VerifyError, VerifyOptions, ASSERT_TOL,
};
use crate::enumerate::prufer_decode;
use crate::graph::Graph;
use crate::linalg::{symmetric_eigenvalues, Matrix};

pub const MAX_SAMPLES: usize = 100_000;
pub const SAMPLE_MAX_ORDER: usize = 12;

/// Cauchy interlacing `λ_{i+n−k} ≤ μ_i ≤ λ_i` for principal submatrices of
/// ε(T), on seeded random trees and random vertex subsets.
pub fn verify_interlacing(
    samples: usize,
    opts: &VerifyOptions,
) -> Result<VerificationReport, VerifyError> {
    if samples == 0 || samples > MAX_SAMPLES {
        return Err(VerifyError::ParameterOutOfRange(format!(
            "samples must be in 1..={MAX_SAMPLES}, got {samples}"
        )));
    }
    let mut report = ReportBuilder::new("interlacing")
        .param("samples", samples)
        .param("n_max", SAMPLE_MAX_ORDER)
        .seed(opts.seed);
    // draw everything up front so the sample set is independent of `jobs`
    let mut rng = ChaCha8Rng::seed_from_u64(opts.seed);
    let cases: Vec<(Graph, Vec<usize>)> = (0..samples).map(|_| sample(&mut rng)).collect();
    let results = opts.par_map(&cases, |(g, subset)| {
        let t = TreeSpectrum::new(g.clone());
        let m: Matrix<f64> = t.matrix.to_matrix();
        let mu = symmetric_eigenvalues(&m.principal_submatrix(subset)).expect("small matrix");
        let (n, k) = (t.spectrum.len(), subset.len());
        let lambda = &t.spectrum.values;
        let ok = mu
            .values
            .iter()
            .enumerate()
            .all(|(i, &m)| lambda[i + n - k] <= m + ASSERT_TOL && m <= lambda[i] + ASSERT_TOL);
        (ok, t, subset.clone())
    });
    for (ok, t, subset) in results {
        report.check(ok, || {
            t.witness("interlacing-violation")
                .with_detail(format!("subset {subset:?}"))
        });
    }
    Ok(report.finish())
}

fn sample(rng: &mut ChaCha8Rng) -> (Graph, Vec<usize>) {
    let n = rng.gen_range(2..=SAMPLE_MAX_ORDER);
    let seq: Vec<usize> = (0..n - 2).map(|_| rng.gen_range(0..n)).collect();
    let k = rng.gen_range(1..=n);
    let mut vertices: Vec<usize> = (0..n).collect();
    vertices.shuffle(rng);
    let mut subset = vertices[..k].to_vec();
    subset.sort_unstable();
    (prufer_decode(&seq), subset)
}
