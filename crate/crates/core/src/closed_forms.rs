//! Explicit formulas for the ε-spectra of double brooms and spiders.
//!
//! Coefficients are exact integers. Roots are evaluated in the caller's
//! [`Scalar`] type with the cancellation-free quadratic formula from
//! [`monic_quadratic_roots`].

use serde::Serialize;

use crate::scalar::{monic_quadratic_roots, Scalar};

#[derive(Clone, Debug, PartialEq, Eq, thiserror::Error)]
pub enum FormulaError {
    #[error("parameter out of range: {0}")]
    ParameterOutOfRange(String),
    #[error("diameter {0} is even; this formula needs an odd diameter")]
    EvenDiameter(usize),
    #[error("broom parameters need a + b = n − d − 1, got n={n}, d={d}, a={a}, b={b}")]
    ParameterMismatch {
        n: usize,
        d: usize,
        a: usize,
        b: usize,
    },
}

fn out_of_range(msg: String) -> FormulaError {
    FormulaError::ParameterOutOfRange(msg)
}

fn to_i64(v: usize) -> i64 {
    i64::try_from(v).expect("parameter fits in i64")
}

/// `λ⁴ + c₂λ² + c₀`, the even quartic whose largest root is ε₁(D_{n,3}^{a,b}).
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct Quartic {
    pub c2: i64,
    pub c0: i64,
}

impl Quartic {
    pub fn eval<T: Scalar>(&self, lambda: T) -> T {
        let l2 = lambda * lambda;
        l2 * l2 + T::from_int(self.c2) * l2 + T::from_int(self.c0)
    }

    /// Real roots, largest first. Roots come in `±` pairs.
    pub fn real_roots<T: Scalar>(&self) -> Vec<T> {
        let Some((hi, lo)) = monic_quadratic_roots(T::from_int(self.c2), T::from_int(self.c0))
        else {
            return Vec::new();
        };
        let mut roots = Vec::with_capacity(4);
        for mu in [hi, lo] {
            if mu >= T::zero() {
                roots.push(mu.sqrt());
                roots.push(-mu.sqrt());
            }
        }
        roots.sort_by(|x, y| y.partial_cmp(x).expect("finite roots"));
        roots
    }

    pub fn largest_root<T: Scalar>(&self) -> Option<T> {
        self.real_roots().first().copied()
    }
}

/// f_a(λ) for trees of diameter 3 with `a` pendants on one side.
pub fn f_a_quartic(n: usize, a: usize) -> Result<Quartic, FormulaError> {
    if n < 4 || a > n - 4 {
        return Err(out_of_range(format!(
            "need n >= 4 and 0 <= a <= n - 4, got n={n}, a={a}"
        )));
    }
    let (n, a) = (to_i64(n), to_i64(a));
    Ok(Quartic {
        c2: 9 * a * a + 36 * a - 9 * n * a - 13 * n + 35,
        c0: -16 * a * a - 64 * a + 16 * n * a + 16 * n - 48,
    })
}

fn require_odd_diameter(d: usize, min: usize) -> Result<(), FormulaError> {
    if d.is_multiple_of(2) {
        return Err(FormulaError::EvenDiameter(d));
    }
    if d < min {
        return Err(out_of_range(format!(
            "diameter must be at least {min}, got {d}"
        )));
    }
    Ok(())
}

/// Γ(d) = ((d+1)/2)² + … + (d−1)² = d(d−1)(7d−5)/24 for odd `d ≥ 3`.
pub fn gamma_d(d: usize) -> Result<u64, FormulaError> {
    require_odd_diameter(d, 3)?;
    let d = d as u64;
    Ok(d * (d - 1) * (7 * d - 5) / 24)
}

/// Quantities entering ρ² = ½·base + ½·√Δ for D_{n,d}^{a,b}.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct BroomSpectralData<T> {
    pub gamma: u64,
    /// (a+1)(b+1)
    pub x: u64,
    /// Γ(d)(n−d+1) + x·d²
    pub base: u64,
    /// base² − 4·x·Γ(d)²
    pub delta: i128,
    pub rho_squared: T,
}

impl<T: Scalar> BroomSpectralData<T> {
    pub fn rho(&self) -> T {
        self.rho_squared.sqrt()
    }
}

fn broom_rho_squared<T: Scalar>(n: usize, d: usize, x: u64) -> BroomSpectralData<T> {
    let gamma = gamma_d(d).expect("diameter validated by caller");
    let (nn, dd) = (n as u64, d as u64);
    let base = gamma * (nn - dd + 1) + x * dd * dd;
    let delta = i128::from(base) * i128::from(base) - 4 * i128::from(x) * i128::from(gamma).pow(2);
    let half = T::from_f64_lossy(0.5);
    let as_t = |v: i128| T::from_f64_lossy(v as f64);
    let rho_squared = half * as_t(i128::from(base)) + half * as_t(delta).sqrt();
    BroomSpectralData {
        gamma,
        x,
        base,
        delta,
        rho_squared,
    }
}

/// ρ² of ε(D_{n,d}^{a,b}) for odd `d ≥ 3`.
pub fn rho_squared_broom<T: Scalar>(
    n: usize,
    d: usize,
    a: usize,
    b: usize,
) -> Result<BroomSpectralData<T>, FormulaError> {
    require_odd_diameter(d, 3)?;
    if a + b + d + 1 != n {
        return Err(FormulaError::ParameterMismatch { n, d, a, b });
    }
    Ok(broom_rho_squared(n, d, ((a + 1) * (b + 1)) as u64))
}

/// One endpoint of the interval the convex ρ²(x) is maximized over.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct BroomCandidate<T> {
    pub a: usize,
    pub b: usize,
    pub x: u64,
    pub rho: T,
}

/// ρ at `x = n − d` (all pendants on one side) and at the balanced split.
///
/// The two coincide when `n − d − 1 ≤ 1`, in which case a single candidate is
/// returned.
pub fn broom_argmax_candidates<T: Scalar>(
    n: usize,
    d: usize,
) -> Result<Vec<BroomCandidate<T>>, FormulaError> {
    require_odd_diameter(d, 5)?;
    if n < d + 1 {
        return Err(out_of_range(format!("need n >= d + 1, got n={n}, d={d}")));
    }
    let extra = n - d - 1;
    let mut out = Vec::with_capacity(2);
    for (a, b) in [(0, extra), (extra / 2, extra - extra / 2)] {
        let x = ((a + 1) * (b + 1)) as u64;
        if out.iter().any(|c: &BroomCandidate<T>| c.x == x) {
            continue;
        }
        out.push(BroomCandidate {
            a,
            b,
            x,
            rho: broom_rho_squared::<T>(n, d, x).rho(),
        });
    }
    Ok(out)
}

/// Largest candidate value from [`broom_argmax_candidates`].
pub fn broom_max_rho<T: Scalar>(n: usize, d: usize) -> Result<T, FormulaError> {
    Ok(broom_argmax_candidates::<T>(n, d)?
        .into_iter()
        .map(|c| c.rho)
        .fold(T::neg_infinity(), T::max))
}

/// The ε-polynomial of H_{p,q} in factored form:
/// `λ^{p+1} · (λ² + 4λ − 9)^{q−1} · (λ² + (4−4q)λ − (9pq + 9q² + 9 − 14q))`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct FactoredPoly {
    pub zero_multiplicity: usize,
    /// `[1, 4, −9]`
    pub repeated_quadratic: [i64; 3],
    pub repeated_multiplicity: usize,
    pub main_quadratic: [i64; 3],
}

impl FactoredPoly {
    pub fn degree(&self) -> usize {
        self.zero_multiplicity + 2 * self.repeated_multiplicity + 2
    }

    pub fn eval<T: Scalar>(&self, lambda: T) -> T {
        let quad = |c: [i64; 3]| {
            T::from_int(c[0]) * lambda * lambda + T::from_int(c[1]) * lambda + T::from_int(c[2])
        };
        let mut v = lambda.powi(self.zero_multiplicity as i32);
        v *= quad(self.repeated_quadratic).powi(self.repeated_multiplicity as i32);
        v * quad(self.main_quadratic)
    }

    /// Coefficients of the expanded polynomial, leading coefficient first.
    pub fn expand(&self) -> Vec<i128> {
        let mut poly = vec![1i128];
        for _ in 0..self.repeated_multiplicity {
            poly = poly_mul(&poly, &self.repeated_quadratic.map(i128::from));
        }
        poly = poly_mul(&poly, &self.main_quadratic.map(i128::from));
        poly.extend(std::iter::repeat_n(0, self.zero_multiplicity));
        poly
    }

    /// All roots with multiplicity, largest first.
    pub fn roots<T: Scalar>(&self) -> Vec<T> {
        let mut roots = vec![T::zero(); self.zero_multiplicity];
        let pair = |c: [i64; 3]| {
            monic_quadratic_roots(T::from_int(c[1]), T::from_int(c[2]))
                .expect("both quadratics have positive discriminant")
        };
        let (r1, r2) = pair(self.repeated_quadratic);
        for _ in 0..self.repeated_multiplicity {
            roots.push(r1);
            roots.push(r2);
        }
        let (m1, m2) = pair(self.main_quadratic);
        roots.push(m1);
        roots.push(m2);
        roots.sort_by(|x, y| y.partial_cmp(x).expect("finite roots"));
        roots
    }
}

fn poly_mul(a: &[i128], b: &[i128]) -> Vec<i128> {
    let mut out = vec![0i128; a.len() + b.len() - 1];
    for (i, &x) in a.iter().enumerate() {
        for (j, &y) in b.iter().enumerate() {
            out[i + j] += x * y;
        }
    }
    out
}

fn check_spider(p: usize, q: usize) -> Result<(), FormulaError> {
    if q < 2 {
        return Err(out_of_range(format!(
            "spider needs q >= 2, got p={p}, q={q}"
        )));
    }
    Ok(())
}

/// Constant term of the main quadratic is `−main_constant(p, q)`.
fn main_constant(p: i64, q: i64) -> i64 {
    9 * p * q + 9 * q * q + 9 - 14 * q
}

pub fn h_eps_poly(p: usize, q: usize) -> Result<FactoredPoly, FormulaError> {
    check_spider(p, q)?;
    let (pi, qi) = (to_i64(p), to_i64(q));
    Ok(FactoredPoly {
        zero_multiplicity: p + 1,
        repeated_quadratic: [1, 4, -9],
        repeated_multiplicity: q - 1,
        main_quadratic: [1, 4 - 4 * qi, -main_constant(pi, qi)],
    })
}

/// `−2 − √13`, the smaller root of `λ² + 4λ − 9`.
pub fn minus_two_minus_sqrt13<T: Scalar>() -> T {
    let two = T::one() + T::one();
    -two - T::from_int(13).sqrt()
}

/// Least ε-eigenvalue of H_{p,q}: the smaller of `−2−√13` and the smaller
/// root of the main quadratic.
pub fn h_least_eigenvalue<T: Scalar>(p: usize, q: usize) -> Result<T, FormulaError> {
    let poly = h_eps_poly(p, q)?;
    let [_, b, c] = poly.main_quadratic;
    let (_, lo) = monic_quadratic_roots(T::from_int(b), T::from_int(c))
        .expect("main quadratic has positive discriminant");
    Ok(lo.min(minus_two_minus_sqrt13()))
}

/// `9p + 9q − 4√13 − 22 ≤ 0`, decided in exact integer arithmetic.
///
/// With `s = 9(p+q) − 22`, the condition is `s ≤ 4√13`, i.e. `s ≤ 0` or
/// `s² ≤ 208`.
pub fn h_equality_condition(p: usize, q: usize) -> Result<bool, FormulaError> {
    check_spider(p, q)?;
    let s = 9 * to_i64(p + q) - 22;
    Ok(s <= 0 || s * s <= 208)
}
