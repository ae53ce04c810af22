use std::fmt::{Debug, Display};
use std::iter::Sum;

use num_traits::{Float, FromPrimitive, NumAssign};

/// Floating-point type the numeric kernels are written against.
///
/// Implemented for `f32` and `f64`. The default tolerances scale with the
/// precision of the type: `f64` gets the tight thresholds used throughout the
/// verifier, `f32` gets thresholds it can actually reach.
pub trait Scalar:
    Float + FromPrimitive + NumAssign + Sum + Debug + Display + Send + Sync + 'static
{
    /// Relative off-diagonal norm at which a Jacobi sweep counts as converged.
    fn jacobi_tolerance() -> Self;

    /// Relative change of the Rayleigh quotient that stops power iteration.
    fn power_tolerance() -> Self;

    fn from_count(value: usize) -> Self {
        Self::from_usize(value).expect("count representable as float")
    }

    fn from_int(value: i64) -> Self {
        Self::from_i64(value).expect("integer representable as float")
    }

    fn from_f64_lossy(value: f64) -> Self {
        Self::from_f64(value).expect("finite f64")
    }
}

impl Scalar for f64 {
    fn jacobi_tolerance() -> Self {
        1e-12
    }

    fn power_tolerance() -> Self {
        1e-12
    }
}

impl Scalar for f32 {
    fn jacobi_tolerance() -> Self {
        1e-6
    }

    fn power_tolerance() -> Self {
        1e-6
    }
}

/// Roots of `x² + b·x + c`, larger first, or `None` when they are complex.
///
/// The larger-magnitude root is computed directly and the other one through
/// the product of the roots, which avoids cancellation when `|c| ≪ b²`.
pub fn monic_quadratic_roots<T: Scalar>(b: T, c: T) -> Option<(T, T)> {
    let two = T::one() + T::one();
    let four = two * two;
    let disc = b * b - four * c;
    if disc < T::zero() {
        return None;
    }
    let sqrt_disc = disc.sqrt();
    let q = if b >= T::zero() {
        -(b + sqrt_disc) / two
    } else {
        (-b + sqrt_disc) / two
    };
    let (r1, r2) = if q == T::zero() {
        (T::zero(), T::zero())
    } else {
        (q, c / q)
    };
    Some(if r1 >= r2 { (r1, r2) } else { (r2, r1) })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn quadratic_roots_match_textbook_formula() {
        let (hi, lo) = monic_quadratic_roots(-4.0_f64, -17.0).unwrap();
        assert!((hi - (2.0 + 21f64.sqrt())).abs() < 1e-14);
        assert!((lo - (2.0 - 21f64.sqrt())).abs() < 1e-14);
    }

    #[test]
    fn quadratic_roots_small_constant_term() {
        // x² - 1e8 x + 1 has a root near 1e-8 that the naive formula loses.
        let (hi, lo) = monic_quadratic_roots(-1e8_f64, 1.0).unwrap();
        assert!((hi - 1e8).abs() < 1e-6);
        assert!((lo - 1e-8).abs() < 1e-20);
    }

    #[test]
    fn quadratic_complex_roots() {
        assert!(monic_quadratic_roots(0.0_f64, 1.0).is_none());
        assert_eq!(monic_quadratic_roots(0.0_f32, 0.0), Some((0.0, 0.0)));
    }
}
