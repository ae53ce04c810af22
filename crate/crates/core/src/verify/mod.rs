//! Exhaustive, machine-checkable restatements of the eigenvalue bounds and
//! extremal results for trees.
//!
//! Every check returns a [`VerificationReport`]. Trees are processed in
//! enumeration order; work is sharded over a rayon pool of `jobs` threads and
//! merged back in order, so a report never depends on the worker count.

mod bounds;
mod extremal;
mod formulas;
mod interlacing;
mod least;
mod report;
mod transforms;

use rayon::prelude::*;

use crate::eccentricity::{eccentricity_matrix, eigenvalues_symmetric, EccentricityMatrix};
use crate::enumerate::{free_trees, trees_with_diameter};
use crate::graph::Graph;
use crate::linalg::Spectrum;

pub use bounds::verify_basic_bounds;
pub use extremal::{verify_diam3_max, verify_odd_diam_max};
pub use formulas::verify_closed_forms;
pub use interlacing::verify_interlacing;
pub use least::{classification_members, verify_least_interval};
pub use report::{round_sig, ReportBuilder, Status, VerificationReport, Witness};
pub use transforms::verify_transforms;

/// Generic assertion tolerance for eigenvalue comparisons.
pub const ASSERT_TOL: f64 = 1e-8;
/// Closed form against eigensolver.
pub const FORMULA_TOL: f64 = 1e-7;
/// Minimum gap for a strict inequality between two ε₁ values.
pub const GAP_TOL: f64 = 1e-9;
/// Differences in `(ASSERT_TOL, AMBIGUOUS_BAND)` are neither equal nor
/// strictly different; they are reported as numerically ambiguous.
pub const AMBIGUOUS_BAND: f64 = 1e-6;

pub const MAX_VERIFY_ORDER: usize = 14;

#[derive(Clone, Debug, PartialEq, Eq, thiserror::Error)]
pub enum VerifyError {
    #[error("parameter out of range: {0}")]
    ParameterOutOfRange(String),
    #[error("diameter {0} is even; this check needs an odd diameter")]
    EvenDiameter(usize),
}

/// Worker count and random seed shared by all checks.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct VerifyOptions {
    pub jobs: usize,
    pub seed: u64,
}

pub const DEFAULT_SEED: u64 = 20_240_917;

impl Default for VerifyOptions {
    fn default() -> Self {
        VerifyOptions {
            jobs: std::thread::available_parallelism().map_or(1, |n| n.get()),
            seed: DEFAULT_SEED,
        }
    }
}

impl VerifyOptions {
    pub(crate) fn par_map<I, O, F>(&self, items: &[I], f: F) -> Vec<O>
    where
        I: Sync,
        O: Send,
        F: Fn(&I) -> O + Sync + Send,
    {
        if self.jobs <= 1 {
            return items.iter().map(f).collect();
        }
        let pool = rayon::ThreadPoolBuilder::new()
            .num_threads(self.jobs)
            .build()
            .expect("thread pool");
        pool.install(|| items.par_iter().map(f).collect())
    }
}

/// A tree together with ε(T) and its spectrum.
#[derive(Clone, Debug)]
pub(crate) struct TreeSpectrum {
    pub graph: Graph,
    pub diameter: u32,
    pub matrix: EccentricityMatrix,
    pub spectrum: Spectrum<f64>,
}

impl TreeSpectrum {
    pub fn new(graph: Graph) -> TreeSpectrum {
        let matrix = eccentricity_matrix(&graph);
        let spectrum = eigenvalues_symmetric(&matrix).expect("Jacobi converges on small matrices");
        TreeSpectrum {
            diameter: graph.tree_diameter(),
            graph,
            matrix,
            spectrum,
        }
    }

    pub fn eps1(&self) -> f64 {
        self.spectrum.largest().unwrap_or(0.0)
    }

    pub fn eps_n(&self) -> f64 {
        self.spectrum.least().unwrap_or(0.0)
    }

    pub fn witness(&self, label: impl Into<String>) -> Witness {
        Witness::new(label, &self.graph, self.eps1(), self.eps_n())
    }
}

pub(crate) fn check_order(n: usize, min: usize, max: usize, what: &str) -> Result<(), VerifyError> {
    if !(min..=max).contains(&n) {
        return Err(VerifyError::ParameterOutOfRange(format!(
            "{what} must be in {min}..={max}, got {n}"
        )));
    }
    Ok(())
}

pub(crate) fn all_trees(n: usize) -> Vec<Graph> {
    free_trees(n).expect("order validated").collect()
}

pub(crate) fn diameter_trees(n: usize, d: usize) -> Vec<Graph> {
    trees_with_diameter(n, d)
        .expect("parameters validated")
        .collect()
}

/// Trace ≈ 0 and Σλ² ≈ ‖ε‖²_F, both relative to the Frobenius norm.
pub(crate) fn spectrum_identities_hold(t: &TreeSpectrum) -> bool {
    let frob2 = t.matrix.frobenius_squared() as f64;
    let scale = frob2.sqrt().max(1.0);
    t.spectrum.sum().abs() <= ASSERT_TOL * scale
        && (t.spectrum.sum_of_squares() - frob2).abs() <= ASSERT_TOL * frob2.max(1.0)
}

/// Checks selected by the command line's `--check all`.
pub fn verify_all(
    n_max: usize,
    d_max: usize,
    samples: usize,
    opts: &VerifyOptions,
) -> Result<Vec<VerificationReport>, VerifyError> {
    check_order(n_max, 4, MAX_VERIFY_ORDER, "n_max")?;
    check_order(d_max, 5, 9, "d_max")?;
    let mut out = vec![verify_basic_bounds(n_max, opts)?];
    for n in 4..=n_max {
        out.push(verify_diam3_max(n, opts)?);
    }
    for d in (5..=d_max).step_by(2) {
        for n in d + 1..=n_max {
            out.push(verify_odd_diam_max(n, d, opts)?);
        }
    }
    out.push(verify_least_interval(n_max, opts)?);
    for d in (5..=d_max.min(7)).step_by(2) {
        for n in d + 1..=n_max.min(12) {
            out.push(verify_transforms(n, d, opts)?);
        }
    }
    out.push(verify_closed_forms(opts));
    out.push(verify_interlacing(samples, opts)?);
    Ok(out)
}
