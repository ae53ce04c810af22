use crate::linalg::Matrix;
use crate::scalar::Scalar;

/// Determinant by Gaussian elimination with partial pivoting.
pub fn determinant<T: Scalar>(m: &Matrix<T>) -> T {
    let n = m.order();
    let mut a = m.clone();
    let mut det = T::one();
    for col in 0..n {
        let pivot = (col..n)
            .max_by(|&i, &j| {
                a[(i, col)]
                    .abs()
                    .partial_cmp(&a[(j, col)].abs())
                    .expect("finite entries")
            })
            .expect("non-empty pivot range");
        if a[(pivot, col)] == T::zero() {
            return T::zero();
        }
        if pivot != col {
            for k in 0..n {
                let tmp = a[(col, k)];
                a[(col, k)] = a[(pivot, k)];
                a[(pivot, k)] = tmp;
            }
            det = -det;
        }
        let p = a[(col, col)];
        det *= p;
        for i in (col + 1)..n {
            let factor = a[(i, col)] / p;
            if factor == T::zero() {
                continue;
            }
            for k in col..n {
                let v = a[(col, k)];
                a[(i, k)] -= factor * v;
            }
        }
    }
    det
}

/// `det(λI − M)`.
pub fn characteristic_value<T: Scalar>(m: &Matrix<T>, lambda: T) -> T {
    let n = m.order();
    let shifted = Matrix::from_fn(n, |i, j| {
        let d = if i == j { lambda } else { T::zero() };
        d - m[(i, j)]
    });
    determinant(&shifted)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn determinant_needs_pivoting() {
        let m = Matrix::<f64>::from_rows(&[vec![0.0, 1.0], vec![1.0, 0.0]]);
        assert_eq!(determinant(&m), -1.0);
        let m = Matrix::<f64>::from_rows(&[
            vec![0.0, 2.0, 1.0],
            vec![1.0, 1.0, 1.0],
            vec![2.0, 1.0, 3.0],
        ]);
        // expansion along the first row: -2·(3-2) + 1·(1-2) = -3
        assert!((determinant(&m) + 3.0).abs() < 1e-14);
    }

    #[test]
    fn singular_and_empty() {
        let m = Matrix::<f64>::from_rows(&[vec![1.0, 2.0], vec![2.0, 4.0]]);
        assert!(determinant(&m).abs() < 1e-14);
        assert_eq!(determinant(&Matrix::<f64>::zeros(0)), 1.0);
    }

    #[test]
    fn characteristic_value_of_k2() {
        let m = Matrix::<f64>::from_rows(&[vec![0.0, 1.0], vec![1.0, 0.0]]);
        assert_eq!(characteristic_value(&m, 2.0), 3.0);
        assert_eq!(characteristic_value(&m, 1.0), 0.0);
    }
}
