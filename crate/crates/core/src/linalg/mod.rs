//! Small dense linear algebra, generic over [`Scalar`](crate::Scalar).

mod det;
mod jacobi;
mod matrix;
mod power;

pub use det::{characteristic_value, determinant};
pub use jacobi::{symmetric_eigenvalues, symmetric_eigenvalues_with_tol, Spectrum};
pub use matrix::Matrix;
pub use power::{perron_pair, perron_pair_with_tol, PerronPair};

#[derive(Clone, Debug, PartialEq, Eq, thiserror::Error)]
pub enum LinalgError {
    #[error("matrix is not symmetric")]
    NotSymmetric,
    #[error("matrix has a negative entry")]
    NegativeEntry,
    #[error("matrix is reducible (support graph is disconnected)")]
    Reducible,
    #[error("matrix is empty")]
    Empty,
    #[error("no convergence after {sweeps} iterations")]
    ConvergenceFailure { sweeps: usize },
}
