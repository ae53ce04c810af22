//! The eccentricity matrix ε(G) and its spectrum.
//!
//! Entry `(u, v)` of ε(G) is `d(u, v)` when that distance equals
//! `min(e(u), e(v))` and zero otherwise. For trees with at least two vertices
//! the matrix is irreducible, so the largest eigenvalue is the Perron root.

use crate::graph::{distance_profile, DistanceProfile, Graph};
use crate::linalg::{self, LinalgError, Matrix, PerronPair, Spectrum};
use crate::scalar::Scalar;

#[derive(Clone, Debug, PartialEq, Eq, thiserror::Error)]
pub enum SpectraError {
    #[error("order {n} is too small (need at least {min})")]
    OrderTooSmall { n: usize, min: usize },
    #[error("eccentricity matrix is reducible")]
    ReducibleMatrix,
    #[error("eigensolver did not converge after {0} iterations")]
    ConvergenceFailure(usize),
}

impl From<LinalgError> for SpectraError {
    fn from(e: LinalgError) -> Self {
        match e {
            LinalgError::Reducible => SpectraError::ReducibleMatrix,
            LinalgError::ConvergenceFailure { sweeps } => SpectraError::ConvergenceFailure(sweeps),
            LinalgError::Empty => SpectraError::OrderTooSmall { n: 0, min: 1 },
            // ε(G) is symmetric and nonnegative by construction
            LinalgError::NotSymmetric | LinalgError::NegativeEntry => {
                unreachable!("eccentricity matrices are symmetric and nonnegative")
            }
        }
    }
}

/// ε(G) as a dense integer matrix, with the eccentricities it was built from.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct EccentricityMatrix {
    n: usize,
    entries: Vec<u32>,
    pub ecc: Vec<u32>,
}

impl EccentricityMatrix {
    pub fn from_profile(profile: &DistanceProfile) -> Self {
        let n = profile.order();
        let mut entries = vec![0; n * n];
        for u in 0..n {
            for v in 0..n {
                let d = profile.dist(u, v);
                if u != v && d == profile.ecc[u].min(profile.ecc[v]) {
                    entries[u * n + v] = d;
                }
            }
        }
        EccentricityMatrix {
            n,
            entries,
            ecc: profile.ecc.clone(),
        }
    }

    pub fn order(&self) -> usize {
        self.n
    }

    pub fn entry(&self, u: usize, v: usize) -> u32 {
        self.entries[u * self.n + v]
    }

    pub fn rows(&self) -> Vec<Vec<u32>> {
        self.entries
            .chunks(self.n.max(1))
            .map(<[u32]>::to_vec)
            .collect()
    }

    pub fn to_matrix<T: Scalar>(&self) -> Matrix<T> {
        Matrix::from_fn(self.n, |i, j| T::from_int(i64::from(self.entry(i, j))))
    }

    /// Squared Frobenius norm, computed exactly.
    pub fn frobenius_squared(&self) -> u64 {
        self.entries
            .iter()
            .map(|&x| u64::from(x) * u64::from(x))
            .sum()
    }

    /// Whether the nonzero pattern forms a connected graph, i.e. whether the
    /// matrix is irreducible.
    pub fn support_is_connected(&self) -> Result<bool, SpectraError> {
        if self.n < 2 {
            return Err(SpectraError::OrderTooSmall { n: self.n, min: 2 });
        }
        Ok(self.to_matrix::<f64>().support_is_connected())
    }
}

pub fn eccentricity_matrix(g: &Graph) -> EccentricityMatrix {
    EccentricityMatrix::from_profile(&distance_profile(g))
}

/// All eigenvalues, largest first, by cyclic Jacobi.
pub fn eigenvalues_symmetric<T: Scalar>(
    em: &EccentricityMatrix,
) -> Result<Spectrum<T>, SpectraError> {
    Ok(linalg::symmetric_eigenvalues(&em.to_matrix())?)
}

/// Same as [`eigenvalues_symmetric`] with an explicit relative convergence threshold.
pub fn eigenvalues_symmetric_with_tol<T: Scalar>(
    em: &EccentricityMatrix,
    tol: T,
) -> Result<Spectrum<T>, SpectraError> {
    Ok(linalg::symmetric_eigenvalues_with_tol(
        &em.to_matrix(),
        tol,
    )?)
}

/// ε₁ with a positive unit Perron vector, by shifted power iteration.
pub fn perron_pair<T: Scalar>(em: &EccentricityMatrix) -> Result<PerronPair<T>, SpectraError> {
    if em.order() < 2 {
        return Err(SpectraError::OrderTooSmall {
            n: em.order(),
            min: 2,
        });
    }
    Ok(linalg::perron_pair(&em.to_matrix())?)
}

/// `det(λI − ε(G))`.
pub fn char_poly_eval<T: Scalar>(em: &EccentricityMatrix, lambda: T) -> T {
    linalg::characteristic_value(&em.to_matrix(), lambda)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn graph(n: usize, edges: &[(usize, usize)]) -> Graph {
        Graph::from_edges(n, edges).unwrap()
    }

    fn p4() -> Graph {
        graph(4, &[(0, 1), (1, 2), (2, 3)])
    }

    #[test]
    fn path_matrix_by_hand() {
        let em = eccentricity_matrix(&p4());
        assert_eq!(
            em.rows(),
            vec![
                vec![0, 0, 2, 3],
                vec![0, 0, 0, 2],
                vec![2, 0, 0, 0],
                vec![3, 2, 0, 0],
            ]
        );
        assert_eq!(em.ecc, vec![3, 2, 2, 3]);
    }

    #[test]
    fn star_matrix() {
        let em = eccentricity_matrix(&graph(4, &[(0, 1), (0, 2), (0, 3)]));
        for leaf in 1..4 {
            assert_eq!(em.entry(0, leaf), 1);
            for other in 1..4 {
                assert_eq!(em.entry(leaf, other), if leaf == other { 0 } else { 2 });
            }
        }
    }

    #[test]
    fn k2_matrix() {
        let em = eccentricity_matrix(&graph(2, &[(0, 1)]));
        assert_eq!(em.rows(), vec![vec![0, 1], vec![1, 0]]);
    }

    #[test]
    fn support_connectivity_cases() {
        assert_eq!(eccentricity_matrix(&p4()).support_is_connected(), Ok(true));
        // C4 keeps only the antipodal pairs: a perfect matching
        let c4 = graph(4, &[(0, 1), (1, 2), (2, 3), (3, 0)]);
        let em = eccentricity_matrix(&c4);
        assert_eq!(em.rows()[0], vec![0, 0, 2, 0]);
        assert_eq!(em.support_is_connected(), Ok(false));
        let k1 = eccentricity_matrix(&graph(1, &[]));
        assert_eq!(
            k1.support_is_connected(),
            Err(SpectraError::OrderTooSmall { n: 1, min: 2 })
        );
    }

    #[test]
    fn path_spectrum() {
        let s: Spectrum<f64> = eigenvalues_symmetric(&eccentricity_matrix(&p4())).unwrap();
        for (got, want) in s.values.iter().zip([4.0, 1.0, -1.0, -4.0]) {
            assert!((got - want).abs() < 1e-10);
        }
    }

    #[test]
    fn single_vertex_spectrum_and_perron_error() {
        let em = eccentricity_matrix(&graph(1, &[]));
        let s: Spectrum<f64> = eigenvalues_symmetric(&em).unwrap();
        assert_eq!(s.values, vec![0.0]);
        assert_eq!(
            perron_pair::<f64>(&em),
            Err(SpectraError::OrderTooSmall { n: 1, min: 2 })
        );
    }

    #[test]
    fn reducible_cycle_has_no_perron_pair() {
        let c4 = graph(4, &[(0, 1), (1, 2), (2, 3), (3, 0)]);
        let em = eccentricity_matrix(&c4);
        assert_eq!(perron_pair::<f64>(&em), Err(SpectraError::ReducibleMatrix));
        let s: Spectrum<f64> = eigenvalues_symmetric(&em).unwrap();
        assert!((s.spectral_radius() - 2.0).abs() < 1e-12);
    }

    #[test]
    fn characteristic_polynomial_values() {
        let em = eccentricity_matrix(&p4());
        // product of eigenvalues 4·1·(−1)·(−4)
        assert!((char_poly_eval(&em, 0.0_f64) - 16.0).abs() < 1e-9);
        assert!(char_poly_eval(&em, 4.0_f64).abs() < 1e-6);
        let k2 = eccentricity_matrix(&graph(2, &[(0, 1)]));
        assert!((char_poly_eval(&k2, 2.0_f64) - 3.0).abs() < 1e-12);
    }
}
