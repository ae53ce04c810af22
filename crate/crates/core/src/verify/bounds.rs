use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use super::{
    all_trees, check_order, spectrum_identities_hold, ReportBuilder, TreeSpectrum,
    VerificationReport, VerifyError, VerifyOptions, ASSERT_TOL, GAP_TOL, MAX_VERIFY_ORDER,
};
use crate::eccentricity::perron_pair;
use crate::enumerate::prufer_decode;
use crate::linalg::{symmetric_eigenvalues, Matrix};

pub const DOMINATION_SAMPLES: usize = 100;

#[derive(Debug, Default)]
struct Outcome {
    lower_upper: bool,
    least_two: bool,
    star_iff: bool,
    support: bool,
    identities: bool,
    perron: bool,
}

impl Outcome {
    fn failures(&self) -> Vec<&'static str> {
        let mut out = Vec::new();
        for (ok, name) in [
            (self.lower_upper, "eps1 >= d and eps_n <= -d"),
            (self.least_two, "eps_n <= -2"),
            (self.star_iff, "eps_n = -2 iff star"),
            (self.support, "irreducible"),
            (self.identities, "trace and Frobenius identities"),
            (self.perron, "Perron pair"),
        ] {
            if !ok {
                out.push(name);
            }
        }
        out
    }
}

fn check_tree(t: &TreeSpectrum) -> Outcome {
    let n = t.graph.order();
    let d = f64::from(t.diameter);
    let (e1, en) = (t.eps1(), t.eps_n());
    let perron = match perron_pair::<f64>(&t.matrix) {
        Ok(p) => {
            (p.value - e1).abs() <= ASSERT_TOL * e1.max(1.0) && p.vector.iter().all(|&x| x > 0.0)
        }
        Err(_) => false,
    };
    let is_star = t.diameter == 2;
    Outcome {
        lower_upper: e1 >= d - ASSERT_TOL && en <= -d + ASSERT_TOL,
        least_two: n < 3 || en <= -2.0 + ASSERT_TOL,
        star_iff: n < 3 || ((en + 2.0).abs() <= ASSERT_TOL) == is_star,
        support: t.matrix.support_is_connected().unwrap_or(false),
        identities: spectrum_identities_hold(t),
        perron,
    }
}

/// Spectral-radius bounds ε₁ ≥ d and ε_n ≤ −d, the −2 bound with its star
/// equality case, irreducibility of ε(T), the Perron pair, trace and
/// Frobenius identities for every tree on 2..=`n_max` vertices, plus
/// seeded checks of strict domination ρ(B) < ρ(M) for 0 ≤ B ≤ M, B ≠ M.
pub fn verify_basic_bounds(
    n_max: usize,
    opts: &VerifyOptions,
) -> Result<VerificationReport, VerifyError> {
    check_order(n_max, 3, MAX_VERIFY_ORDER, "n_max")?;
    let mut report = ReportBuilder::new("basic-bounds")
        .param("n_max", n_max)
        .param("domination_samples", DOMINATION_SAMPLES)
        .seed(opts.seed);
    for n in 2..=n_max {
        let trees = all_trees(n);
        let results = opts.par_map(&trees, |g| {
            let t = TreeSpectrum::new(g.clone());
            let failed = check_tree(&t).failures();
            (t, failed)
        });
        report.count(&format!("trees_n{n:02}"), trees.len() as u64);
        for (t, failed) in results {
            report.check(failed.is_empty(), || {
                t.witness("counterexample").with_detail(failed.join("; "))
            });
        }
    }

    let mut rng = ChaCha8Rng::seed_from_u64(opts.seed);
    let samples: Vec<_> = (0..DOMINATION_SAMPLES)
        .map(|_| domination_sample(&mut rng))
        .collect();
    let results = opts.par_map(&samples, |s| {
        let t = TreeSpectrum::new(s.tree.clone());
        let m: Matrix<f64> = t.matrix.to_matrix();
        let mut b = m.clone();
        b[(s.u, s.v)] *= s.factor;
        b[(s.v, s.u)] *= s.factor;
        let rho_b = symmetric_eigenvalues(&b).map(|sp| sp.spectral_radius());
        let ok = matches!(rho_b, Ok(r) if r < t.eps1() - GAP_TOL);
        (t, ok, s.clone())
    });
    for (t, ok, s) in results {
        report.count("domination_samples", 1);
        report.check(ok, || {
            t.witness("domination-counterexample")
                .with_detail(format!("entry ({}, {}) scaled by {}", s.u, s.v, s.factor))
        });
    }
    Ok(report.finish())
}

#[derive(Clone, Debug)]
struct DominationSample {
    tree: crate::graph::Graph,
    u: usize,
    v: usize,
    factor: f64,
}

fn domination_sample(rng: &mut ChaCha8Rng) -> DominationSample {
    let n = rng.gen_range(3..=12);
    let seq: Vec<usize> = (0..n - 2).map(|_| rng.gen_range(0..n)).collect();
    let tree = prufer_decode(&seq);
    let em = crate::eccentricity::eccentricity_matrix(&tree);
    let support: Vec<(usize, usize)> = (0..n)
        .flat_map(|u| (u + 1..n).map(move |v| (u, v)))
        .filter(|&(u, v)| em.entry(u, v) > 0)
        .collect();
    let (u, v) = support[rng.gen_range(0..support.len())];
    // quantized so the sample serializes exactly
    let factor = f64::from(rng.gen_range(0..10u32)) / 10.0;
    DominationSample { tree, u, v, factor }
}
