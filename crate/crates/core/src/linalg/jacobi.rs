use crate::linalg::{LinalgError, Matrix};
use crate::scalar::Scalar;

const MAX_SWEEPS: usize = 100;

/// Sorted eigenvalues of a real symmetric matrix plus convergence metadata.
#[derive(Clone, Debug, PartialEq)]
pub struct Spectrum<T> {
    /// Eigenvalues, largest first.
    pub values: Vec<T>,
    /// Number of full Jacobi sweeps performed.
    pub iterations: usize,
    /// Off-diagonal Frobenius norm left after the last sweep.
    pub offdiag_residual: T,
}

impl<T: Scalar> Spectrum<T> {
    pub fn len(&self) -> usize {
        self.values.len()
    }

    pub fn is_empty(&self) -> bool {
        self.values.is_empty()
    }

    pub fn largest(&self) -> Option<T> {
        self.values.first().copied()
    }

    pub fn least(&self) -> Option<T> {
        self.values.last().copied()
    }

    /// Maximum modulus over the spectrum.
    pub fn spectral_radius(&self) -> T {
        self.values.iter().fold(
            T::zero(),
            |acc, &x| if x.abs() > acc { x.abs() } else { acc },
        )
    }

    pub fn sum(&self) -> T {
        self.values.iter().copied().sum()
    }

    pub fn sum_of_squares(&self) -> T {
        self.values.iter().map(|&x| x * x).sum()
    }

    /// Number of eigenvalues with `|λ| <= tol`.
    pub fn count_near_zero(&self, tol: T) -> usize {
        self.values.iter().filter(|x| x.abs() <= tol).count()
    }
}

/// Cyclic Jacobi with the default convergence threshold for `T`.
pub fn symmetric_eigenvalues<T: Scalar>(m: &Matrix<T>) -> Result<Spectrum<T>, LinalgError> {
    symmetric_eigenvalues_with_tol(m, T::jacobi_tolerance())
}

/// Cyclic Jacobi rotations until the off-diagonal norm drops below
/// `tol · ‖M‖_F`. The input must be symmetric.
pub fn symmetric_eigenvalues_with_tol<T: Scalar>(
    m: &Matrix<T>,
    tol: T,
) -> Result<Spectrum<T>, LinalgError> {
    if !m.is_symmetric() {
        return Err(LinalgError::NotSymmetric);
    }
    let n = m.order();
    let mut a = m.clone();
    let threshold = tol * m.frobenius_norm();
    let mut sweeps = 0;
    loop {
        let off = offdiag_norm(&a);
        if off <= threshold {
            let mut values: Vec<T> = (0..n).map(|i| a[(i, i)]).collect();
            // stable: equal values keep index order
            values.sort_by(|x, y| y.partial_cmp(x).expect("eigenvalues are finite"));
            return Ok(Spectrum {
                values,
                iterations: sweeps,
                offdiag_residual: off,
            });
        }
        if sweeps == MAX_SWEEPS {
            return Err(LinalgError::ConvergenceFailure { sweeps });
        }
        for p in 0..n {
            for q in (p + 1)..n {
                rotate(&mut a, p, q);
            }
        }
        sweeps += 1;
    }
}

fn offdiag_norm<T: Scalar>(a: &Matrix<T>) -> T {
    let n = a.order();
    let mut s = T::zero();
    for i in 0..n {
        for j in (i + 1)..n {
            s += a[(i, j)] * a[(i, j)];
        }
    }
    (s + s).sqrt()
}

/// Annihilates `a[p][q]` with a plane rotation applied from both sides.
fn rotate<T: Scalar>(a: &mut Matrix<T>, p: usize, q: usize) {
    let apq = a[(p, q)];
    if apq == T::zero() {
        return;
    }
    let two = T::one() + T::one();
    let theta = (a[(q, q)] - a[(p, p)]) / (two * apq);
    let t = theta.signum() / (theta.abs() + (T::one() + theta * theta).sqrt());
    let c = T::one() / (T::one() + t * t).sqrt();
    let s = t * c;

    let n = a.order();
    for k in 0..n {
        if k == p || k == q {
            continue;
        }
        let akp = a[(k, p)];
        let akq = a[(k, q)];
        let new_kp = c * akp - s * akq;
        let new_kq = s * akp + c * akq;
        a[(k, p)] = new_kp;
        a[(p, k)] = new_kp;
        a[(k, q)] = new_kq;
        a[(q, k)] = new_kq;
    }
    a[(p, p)] -= t * apq;
    a[(q, q)] += t * apq;
    a[(p, q)] = T::zero();
    a[(q, p)] = T::zero();
}

#[cfg(test)]
mod tests {
    use super::*;

    fn assert_values(got: &[f64], want: &[f64], tol: f64) {
        assert_eq!(got.len(), want.len());
        for (g, w) in got.iter().zip(want) {
            assert!((g - w).abs() < tol, "{got:?} vs {want:?}");
        }
    }

    #[test]
    fn diagonal_matrix_needs_no_sweeps() {
        let m = Matrix::from_rows(&[vec![2.0, 0.0], vec![0.0, -3.0]]);
        let s = symmetric_eigenvalues(&m).unwrap();
        assert_eq!(s.values, vec![2.0, -3.0]);
        assert_eq!(s.iterations, 0);
    }

    #[test]
    fn small_dense_matrices() {
        let m = Matrix::from_rows(&[
            vec![2.0, 0.0, 0.0],
            vec![0.0, 3.0, 4.0],
            vec![0.0, 4.0, 9.0],
        ]);
        let s = symmetric_eigenvalues(&m).unwrap();
        assert_values(&s.values, &[11.0, 2.0, 1.0], 1e-12);

        let m = Matrix::from_rows(&[
            vec![1.0, 2.0, 3.0],
            vec![2.0, 3.0, 2.0],
            vec![3.0, 2.0, 2.0],
        ]);
        let s = symmetric_eigenvalues(&m).unwrap();
        assert_values(
            &s.values,
            &[
                6.695_373_904_044_595,
                0.862_725_343_814_443_7,
                -1.558_099_247_859_038,
            ],
            1e-12,
        );
    }

    #[test]
    fn path_eccentricity_matrix() {
        let m = Matrix::from_rows(&[
            vec![0.0, 0.0, 2.0, 3.0],
            vec![0.0, 0.0, 0.0, 2.0],
            vec![2.0, 0.0, 0.0, 0.0],
            vec![3.0, 2.0, 0.0, 0.0],
        ]);
        let s = symmetric_eigenvalues(&m).unwrap();
        assert_values(&s.values, &[4.0, 1.0, -1.0, -4.0], 1e-12);
        assert!(s.offdiag_residual <= 1e-12 * m.frobenius_norm());
    }

    #[test]
    fn single_precision_runs_too() {
        let m = Matrix::from_rows(&[vec![0.0_f32, 1.0], vec![1.0, 0.0]]);
        let s = symmetric_eigenvalues(&m).unwrap();
        assert!((s.values[0] - 1.0).abs() < 1e-6);
        assert!((s.values[1] + 1.0).abs() < 1e-6);
    }

    #[test]
    fn rejects_asymmetric_input() {
        let m = Matrix::from_rows(&[vec![0.0, 1.0], vec![2.0, 0.0]]);
        assert_eq!(symmetric_eigenvalues(&m), Err(LinalgError::NotSymmetric));
    }

    #[test]
    fn empty_and_zero_matrices() {
        let s = symmetric_eigenvalues(&Matrix::<f64>::zeros(0)).unwrap();
        assert!(s.is_empty());
        let s = symmetric_eigenvalues(&Matrix::<f64>::zeros(1)).unwrap();
        assert_eq!(s.values, vec![0.0]);
        assert_eq!(s.spectral_radius(), 0.0);
    }
}
