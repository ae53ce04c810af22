//! Eccentricity matrices of trees and their spectra.
//!
//! The eccentricity matrix ε(G) keeps the distance `d(u, v)` exactly when it
//! equals `min(e(u), e(v))` and is zero elsewhere. This crate builds ε(T) for
//! trees, computes its spectrum, enumerates trees exhaustively, evaluates the
//! closed forms known for double brooms and spiders, and checks the extremal
//! results about them with [`verify`].
//!
//! Numeric kernels are generic over [`Scalar`] (`f32` or `f64`); the aliases
//! below fix `f64`.

pub mod canonical;
pub mod closed_forms;
pub mod eccentricity;
pub mod enumerate;
pub mod families;
pub mod graph;
pub mod graph6;
pub mod linalg;
pub mod scalar;
pub mod verify;

pub use canonical::{ahu_canonical, CanonicalCode};
pub use closed_forms::{
    broom_argmax_candidates, broom_max_rho, f_a_quartic, gamma_d, h_eps_poly, h_equality_condition,
    h_least_eigenvalue, rho_squared_broom, FactoredPoly, FormulaError, Quartic,
};
pub use eccentricity::{
    char_poly_eval, eccentricity_matrix, eigenvalues_symmetric, eigenvalues_symmetric_with_tol,
    perron_pair, EccentricityMatrix, SpectraError,
};
pub use enumerate::{
    free_trees, labeled_tree_oracle, prufer_decode, trees_with_diameter, EnumError, TreeStream,
};
pub use families::{double_broom, path, spider_h, star, FamilyError, FamilySpec};
pub use graph::{distance_profile, DistanceProfile, EdgeList, Graph, GraphError};
pub use graph6::Graph6Error;
pub use linalg::LinalgError;
pub use scalar::Scalar;
pub use verify::{VerificationReport, VerifyError, VerifyOptions};

pub type Spectrum = linalg::Spectrum<f64>;
pub type PerronPair = linalg::PerronPair<f64>;
pub type Matrix = linalg::Matrix<f64>;
pub type BroomSpectralData = closed_forms::BroomSpectralData<f64>;
pub type BroomCandidate = closed_forms::BroomCandidate<f64>;

pub type Spectrum32 = linalg::Spectrum<f32>;
pub type Matrix32 = linalg::Matrix<f32>;

pub const VERSION: &str = env!("CARGO_PKG_VERSION");

/// Any error this crate can return.
#[derive(Clone, Debug, PartialEq, Eq, thiserror::Error)]
pub enum Error {
    #[error(transparent)]
    Graph(#[from] GraphError),
    #[error(transparent)]
    Graph6(#[from] Graph6Error),
    #[error(transparent)]
    Linalg(#[from] LinalgError),
    #[error(transparent)]
    Spectra(#[from] SpectraError),
    #[error(transparent)]
    Family(#[from] FamilyError),
    #[error(transparent)]
    Formula(#[from] FormulaError),
    #[error(transparent)]
    Enumerate(#[from] EnumError),
    #[error(transparent)]
    Verify(#[from] VerifyError),
}
