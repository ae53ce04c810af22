use crate::linalg::{LinalgError, Matrix};
use crate::scalar::Scalar;

const MAX_ITERATIONS: usize = 200_000;

/// Dominant eigenvalue and its entrywise-positive unit eigenvector.
#[derive(Clone, Debug, PartialEq)]
pub struct PerronPair<T> {
    pub value: T,
    pub vector: Vec<T>,
    pub iterations: usize,
}

/// Power iteration for an irreducible nonnegative symmetric matrix.
///
/// Iterates on `M + σI` with `σ` half the maximum row sum. The shift makes
/// the Perron root strictly dominant even when `-ρ` is also an eigenvalue
/// (bipartite-like supports), and keeps every iterate positive.
pub fn perron_pair<T: Scalar>(m: &Matrix<T>) -> Result<PerronPair<T>, LinalgError> {
    perron_pair_with_tol(m, T::power_tolerance())
}

pub fn perron_pair_with_tol<T: Scalar>(
    m: &Matrix<T>,
    tol: T,
) -> Result<PerronPair<T>, LinalgError> {
    let n = m.order();
    if n == 0 {
        return Err(LinalgError::Empty);
    }
    if !m.is_symmetric() {
        return Err(LinalgError::NotSymmetric);
    }
    if (0..n).any(|i| m.row(i).iter().any(|&x| x < T::zero())) {
        return Err(LinalgError::NegativeEntry);
    }
    if n > 1 && !m.support_is_connected() {
        return Err(LinalgError::Reducible);
    }

    let two = T::one() + T::one();
    let shift = (0..n)
        .map(|i| m.row(i).iter().copied().sum::<T>())
        .fold(T::zero(), T::max)
        / two;

    let inv_sqrt_n = T::one() / T::from_count(n).sqrt();
    let mut x = vec![inv_sqrt_n; n];
    let mut value = rayleigh(m, &x);
    for it in 1..=MAX_ITERATIONS {
        let mx = m.mul_vec(&x);
        let mut y: Vec<T> = mx.iter().zip(&x).map(|(&a, &b)| a + shift * b).collect();
        let norm = y.iter().map(|&v| v * v).sum::<T>().sqrt();
        if norm == T::zero() {
            // zero matrix (n = 1)
            return Ok(PerronPair {
                value: T::zero(),
                vector: x,
                iterations: it,
            });
        }
        for v in &mut y {
            *v /= norm;
        }
        let next = rayleigh(m, &y);
        let scale = next.abs().max(T::one());
        let residual = residual_norm(m, &y, next);
        x = y;
        let settled = (next - value).abs() <= tol * scale;
        value = next;
        if settled && residual <= tol.sqrt() * scale {
            return Ok(PerronPair {
                value,
                vector: x,
                iterations: it,
            });
        }
    }
    Err(LinalgError::ConvergenceFailure {
        sweeps: MAX_ITERATIONS,
    })
}

fn rayleigh<T: Scalar>(m: &Matrix<T>, x: &[T]) -> T {
    let mx = m.mul_vec(x);
    let num: T = mx.iter().zip(x).map(|(&a, &b)| a * b).sum();
    let den: T = x.iter().map(|&v| v * v).sum();
    num / den
}

fn residual_norm<T: Scalar>(m: &Matrix<T>, x: &[T], value: T) -> T {
    m.mul_vec(x)
        .iter()
        .zip(x)
        .map(|(&a, &b)| (a - value * b) * (a - value * b))
        .sum::<T>()
        .sqrt()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn bipartite_support_still_converges() {
        // ±4 are both eigenvalues; the unshifted iteration would oscillate.
        let m = Matrix::<f64>::from_rows(&[
            vec![0.0, 0.0, 2.0, 3.0],
            vec![0.0, 0.0, 0.0, 2.0],
            vec![2.0, 0.0, 0.0, 0.0],
            vec![3.0, 2.0, 0.0, 0.0],
        ]);
        let pair = perron_pair(&m).unwrap();
        assert!((pair.value - 4.0).abs() < 1e-10);
        assert!(pair.vector.iter().all(|&v| v > 0.0));
        let norm: f64 = pair.vector.iter().map(|v| v * v).sum();
        assert!((norm - 1.0).abs() < 1e-12);
    }

    #[test]
    fn reducible_matrix_is_rejected() {
        let m = Matrix::from_rows(&[
            vec![0.0, 0.0, 2.0, 0.0],
            vec![0.0, 0.0, 0.0, 2.0],
            vec![2.0, 0.0, 0.0, 0.0],
            vec![0.0, 2.0, 0.0, 0.0],
        ]);
        assert_eq!(perron_pair(&m), Err(LinalgError::Reducible));
    }

    #[test]
    fn negative_entries_are_rejected() {
        let m = Matrix::from_rows(&[vec![0.0, -1.0], vec![-1.0, 0.0]]);
        assert_eq!(perron_pair(&m), Err(LinalgError::NegativeEntry));
    }

    #[test]
    fn empty_matrix_is_an_error() {
        assert_eq!(
            perron_pair(&Matrix::<f64>::zeros(0)),
            Err(LinalgError::Empty)
        );
    }
}
