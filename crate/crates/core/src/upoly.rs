//! Polynomials in `u = sin^2(theta)` with exact rational coefficients.
//!
//! Every order of the superpotential hierarchy has the shape
//! `W(theta) = sin(theta) cos(theta) * P(u)` for a polynomial `P`, and the
//! three operations the hierarchy performs on such factors close over
//! polynomials in `u`:
//!
//! - applying the first-order linear operator
//!   `W  |->  W' + (2m + 1) cot(theta) W` ([`UPoly::lop_apply`]),
//! - multiplying two factors, `W_a W_b = u (1 - u) P_a P_b`
//!   ([`UPoly::mul_w`]),
//! - integrating a factor over `theta`, which under `u = sin^2(theta)`
//!   is `u^k |-> u^(k+1) / (2k + 2)` ([`UPoly::integrate_w`]).
//!
//! Coefficient vectors are kept trimmed (no trailing zeros), so the zero
//! polynomial is the empty vector and equality is structural.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use crate::exact::Rational;

/// A polynomial in `u` with exact rational coefficients.
///
/// `coeffs[k]` multiplies `u^k`; trailing zeros are always trimmed.
#[derive(Clone, PartialEq, Eq, Default)]
pub struct UPoly {
    coeffs: Vec<Rational>,
}

impl UPoly {
    /// Builds a polynomial from coefficients in ascending powers of `u`.
    pub fn new(mut coeffs: Vec<Rational>) -> Self {
        while coeffs.last().is_some_and(Rational::is_zero) {
            coeffs.pop();
        }
        UPoly { coeffs }
    }

    pub fn zero() -> Self {
        UPoly { coeffs: Vec::new() }
    }

    pub fn constant(c: Rational) -> Self {
        UPoly::new(vec![c])
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Degree, or `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    /// Coefficient of `u^k` (zero beyond the stored length).
    pub fn coeff(&self, k: usize) -> Rational {
        self.coeffs.get(k).cloned().unwrap_or_else(Rational::zero)
    }

    /// Coefficients in ascending powers of `u`, trailing zeros trimmed.
    pub fn coeffs(&self) -> &[Rational] {
        &self.coeffs
    }

    /// Coefficients converted to `f64`, for callers that evaluate in hot
    /// loops and want the conversion done once.
    pub fn coeffs_f64(&self) -> Vec<f64> {
        self.coeffs.iter().map(Rational::to_f64).collect()
    }

    /// Image under the first-order linear operator
    /// `sin cos P(u)  |->  (sin cos P)' + (2m + 1) cot * sin cos P`,
    /// which maps monomials as
    /// `u^k |-> (2m + 2k + 2) u^k - (2m + 2k + 3) u^(k+1)`.
    ///
    /// The result is the plain `u`-polynomial on the right-hand side of the
    /// hierarchy (no `sin cos` prefactor).
    pub fn lop_apply(&self, m: u32) -> UPoly {
        let mut out = vec![Rational::zero(); self.coeffs.len() + 1];
        let two_m = 2 * m as i64;
        for (k, c) in self.coeffs.iter().enumerate() {
            let k = k as i64;
            out[k as usize] += c * Rational::from_int(two_m + 2 * k + 2);
            out[k as usize + 1] -= c * Rational::from_int(two_m + 2 * k + 3);
        }
        UPoly::new(out)
    }

    /// Product of two superpotential factors:
    /// `(sin cos P_a)(sin cos P_b) = u (1 - u) P_a(u) P_b(u)`.
    pub fn mul_w(&self, other: &UPoly) -> UPoly {
        let u_one_minus_u = UPoly::new(vec![
            Rational::zero(),
            Rational::one(),
            Rational::from_int(-1),
        ]);
        &(self * other) * &u_one_minus_u
    }

    /// Antiderivative over `theta` of `sin cos P(u)`, expressed in `u`:
    /// since `du = 2 sin cos d(theta)`, each `u^k` maps to
    /// `u^(k+1) / (2k + 2)`. The integration constant is zero.
    pub fn integrate_w(&self) -> UPoly {
        let mut out = vec![Rational::zero(); self.coeffs.len() + 1];
        for (k, c) in self.coeffs.iter().enumerate() {
            out[k + 1] = c / Rational::from_int(2 * (k as i64) + 2);
        }
        UPoly::new(out)
    }

    /// Derivative with respect to `u`.
    pub fn derivative(&self) -> UPoly {
        let d = self
            .coeffs
            .iter()
            .enumerate()
            .skip(1)
            .map(|(k, c)| c * Rational::from_int(k as i64))
            .collect();
        UPoly::new(d)
    }

    /// Exact evaluation by Horner's rule.
    ///
    /// # Panics
    ///
    /// Panics if `u` is outside `[0, 1]`; the variable is `sin^2(theta)`.
    pub fn eval_exact(&self, u: &Rational) -> Rational {
        assert!(
            !u.is_negative() && *u <= Rational::one(),
            "u = sin^2(theta) must lie in [0, 1], got {u}"
        );
        let mut acc = Rational::zero();
        for c in self.coeffs.iter().rev() {
            acc = acc * u + c;
        }
        acc
    }

    /// Floating-point evaluation by Horner's rule.
    ///
    /// # Panics
    ///
    /// Panics if `u` is outside `[0, 1]`; the variable is `sin^2(theta)`.
    pub fn eval_f64(&self, u: f64) -> f64 {
        assert!(
            (0.0..=1.0).contains(&u),
            "u = sin^2(theta) must lie in [0, 1], got {u}"
        );
        self.coeffs
            .iter()
            .rev()
            .fold(0.0, |acc, c| acc * u + c.to_f64())
    }

    /// Scalar multiple.
    pub fn scale(&self, s: &Rational) -> UPoly {
        UPoly::new(self.coeffs.iter().map(|c| c * s).collect())
    }
}

impl fmt::Debug for UPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let terms: Vec<String> = self
            .coeffs
            .iter()
            .enumerate()
            .filter(|(_, c)| !c.is_zero())
            .map(|(k, c)| match k {
                0 => format!("{c}"),
                1 => format!("({c}) u"),
                _ => format!("({c}) u^{k}"),
            })
            .collect();
        write!(f, "{}", terms.join(" + "))
    }
}

impl Add for &UPoly {
    type Output = UPoly;
    fn add(self, rhs: &UPoly) -> UPoly {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        let sum = (0..n).map(|k| self.coeff(k) + rhs.coeff(k)).collect();
        UPoly::new(sum)
    }
}

impl Sub for &UPoly {
    type Output = UPoly;
    fn sub(self, rhs: &UPoly) -> UPoly {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        let diff = (0..n).map(|k| self.coeff(k) - rhs.coeff(k)).collect();
        UPoly::new(diff)
    }
}

impl Neg for &UPoly {
    type Output = UPoly;
    fn neg(self) -> UPoly {
        UPoly::new(self.coeffs.iter().map(|c| -c).collect())
    }
}

impl Mul for &UPoly {
    type Output = UPoly;
    fn mul(self, rhs: &UPoly) -> UPoly {
        if self.is_zero() || rhs.is_zero() {
            return UPoly::zero();
        }
        let mut out = vec![Rational::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            for (j, b) in rhs.coeffs.iter().enumerate() {
                out[i + j] += a * b;
            }
        }
        UPoly::new(out)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn upoly(coeffs: &[(i64, i64)]) -> UPoly {
        UPoly::new(coeffs.iter().map(|&(n, d)| Rational::new(n, d)).collect())
    }

    #[test]
    fn trailing_zeros_are_trimmed() {
        let p = UPoly::new(vec![Rational::zero(), Rational::zero()]);
        assert!(p.is_zero());
        assert_eq!(p.degree(), None);
        let q = upoly(&[(1, 1), (0, 1), (2, 1), (0, 1)]);
        assert_eq!(q.degree(), Some(2));
    }

    #[test]
    fn addition_cancels_to_zero() {
        let p = upoly(&[(1, 2), (-3, 4)]);
        assert!((&p + &(-&p)).is_zero());
        assert!((&p - &p).is_zero());
    }

    #[test]
    fn lop_on_constants() {
        // u^0 |-> (2m + 2) - (2m + 3) u.
        assert_eq!(UPoly::constant(Rational::one()).lop_apply(0), upoly(&[(2, 1), (-3, 1)]));
        assert_eq!(UPoly::constant(Rational::one()).lop_apply(3), upoly(&[(8, 1), (-9, 1)]));
    }

    #[test]
    fn lop_on_linear_monomial() {
        // u |-> (2m + 4) u - (2m + 5) u^2.
        let u = upoly(&[(0, 1), (1, 1)]);
        assert_eq!(u.lop_apply(1), upoly(&[(0, 1), (6, 1), (-7, 1)]));
    }

    #[test]
    fn mul_w_of_constants_is_u_one_minus_u() {
        let one = UPoly::constant(Rational::one());
        assert_eq!(one.mul_w(&one), upoly(&[(0, 1), (1, 1), (-1, 1)]));
    }

    #[test]
    fn integrate_w_halves_and_shifts() {
        let p = upoly(&[(1, 1), (3, 1)]);
        // 1 |-> u/2, 3u |-> 3u^2/4.
        assert_eq!(p.integrate_w(), upoly(&[(0, 1), (1, 2), (3, 4)]));
    }

    #[test]
    fn derivative_inverts_integration_in_u() {
        let p = upoly(&[(5, 3), (-1, 7), (2, 1)]);
        let mut integrated = vec![Rational::zero()];
        for (k, c) in p.coeffs().iter().enumerate() {
            integrated.push(c / Rational::from_int(k as i64 + 1));
        }
        assert_eq!(UPoly::new(integrated).derivative(), p);
    }

    #[test]
    fn eval_exact_matches_horner_by_hand() {
        let p = upoly(&[(1, 1), (-2, 1), (3, 1)]);
        let u = Rational::new(1, 2);
        // 1 - 2*(1/2) + 3*(1/4) = 3/4.
        assert_eq!(p.eval_exact(&u), Rational::new(3, 4));
    }

    #[test]
    #[should_panic(expected = "must lie in [0, 1]")]
    fn eval_rejects_out_of_domain() {
        upoly(&[(1, 1)]).eval_f64(1.5);
    }

    /// 5-point central first-derivative stencil, O(h^4).
    fn d1(f: impl Fn(f64) -> f64, x: f64, h: f64) -> f64 {
        (f(x - 2.0 * h) - 8.0 * f(x - h) + 8.0 * f(x + h) - f(x + 2.0 * h)) / (12.0 * h)
    }

    fn small_poly() -> impl Strategy<Value = UPoly> {
        // Degree <= 6; small integer coefficients keep the finite-difference
        // round-off budget below the 1e-9 comparison tolerance.
        proptest::collection::vec(-3i64..=3, 1..=7)
            .prop_map(|v| UPoly::new(v.into_iter().map(Rational::from_int).collect()))
    }

    fn interior_theta() -> impl Strategy<Value = f64> {
        0.1f64..(std::f64::consts::PI - 0.1)
    }

    proptest! {
        /// The operator maps monomials exactly like its defining expression
        /// `(1 - 2u) P + 2 u (1 - u) P' + (2m + 1)(1 - u) P`.
        #[test]
        fn lop_matches_defining_expression(p in small_poly(), m in 0u32..6) {
            let one_minus_2u = upoly(&[(1, 1), (-2, 1)]);
            let two_u_one_minus_u = upoly(&[(0, 1), (2, 1), (-2, 1)]);
            let damping = upoly(&[(1, 1), (-1, 1)]).scale(&Rational::from_int(2 * m as i64 + 1));
            let direct = &(&(&one_minus_2u * &p) + &(&two_u_one_minus_u * &p.derivative()))
                + &(&damping * &p);
            prop_assert_eq!(p.lop_apply(m), direct);
        }

        /// Linearity of the operator over random rational weights.
        #[test]
        fn lop_is_linear(
            p in small_poly(),
            q in small_poly(),
            m in 0u32..6,
            (an, ad) in (-9i64..=9, 1i64..=9),
            (bn, bd) in (-9i64..=9, 1i64..=9),
        ) {
            let a = Rational::new(an, ad);
            let b = Rational::new(bn, bd);
            let combined = (&p.scale(&a) + &q.scale(&b)).lop_apply(m);
            let separate = &p.lop_apply(m).scale(&a) + &q.lop_apply(m).scale(&b);
            prop_assert_eq!(combined, separate);
        }

        /// Numerical consistency of the operator: differentiate
        /// `W(theta) = sin cos P(sin^2)` by central finite differences and
        /// compare against the exact image evaluated at the same point.
        #[test]
        fn lop_numerical_consistency(p in small_poly(), m in 0u32..6, theta0 in interior_theta()) {
            let w = |theta: f64| {
                let (s, c) = theta.sin_cos();
                s * c * p.eval_f64(s * s)
            };
            let h = 1e-5;
            let fd = d1(w, theta0, h) + (2.0 * m as f64 + 1.0) / theta0.tan() * w(theta0);
            let exact = p.lop_apply(m).eval_f64(theta0.sin().powi(2));
            prop_assert!((fd - exact).abs() < 1e-9, "fd = {fd}, exact = {exact}");
        }

        /// Fundamental theorem: the theta-derivative of the integrated
        /// factor recovers the factor, checked by central finite
        /// differences.
        #[test]
        fn integrate_w_numerical_consistency(p in small_poly(), theta0 in interior_theta()) {
            let j = p.integrate_w();
            let g = |theta: f64| {
                let s = theta.sin();
                j.eval_f64(s * s)
            };
            let h = 1e-5;
            let fd = d1(g, theta0, h);
            let (s, c) = theta0.sin_cos();
            let exact = s * c * p.eval_f64(s * s);
            prop_assert!((fd - exact).abs() < 1e-9, "fd = {fd}, exact = {exact}");
        }

        /// mul_w is symmetric, bilinear, and matches pointwise
        /// multiplication of the two factors.
        #[test]
        fn mul_w_is_symmetric_bilinear_pointwise(
            a in small_poly(),
            b in small_poly(),
            c in small_poly(),
            (sn, sd) in (-9i64..=9, 1i64..=9),
            u0 in 0.0f64..=1.0,
        ) {
            let ab = a.mul_w(&b);
            prop_assert_eq!(&ab, &b.mul_w(&a));
            let s = Rational::new(sn, sd);
            let left = a.mul_w(&(&b.scale(&s) + &c));
            let right = &ab.scale(&s) + &a.mul_w(&c);
            prop_assert_eq!(left, right);
            let direct = u0 * (1.0 - u0) * a.eval_f64(u0) * b.eval_f64(u0);
            prop_assert!((ab.eval_f64(u0) - direct).abs() < 1e-9);
        }
    }
}
