//! Orthonormalized associated Legendre functions of fixed order m.
//!
//! The basis is Lbar_l^m(x), l = m, m+1, ..., normalized so that the
//! L^2[-1, 1] inner products satisfy `int Lbar_l Lbar_k dx = delta_lk`.
//! The lowest member is the closed form
//!
//! ```text
//! Lbar_m^m(x) = sqrt( (m + 1/2) * prod_{j=1..m} (2j-1)/(2j) ) * (1 - x^2)^(m/2)
//! ```
//!
//! and the rest follow from the symmetric three-term recurrence
//!
//! ```text
//! x Lbar_l = a_l Lbar_{l+1} + a_{l-1} Lbar_{l-1},
//! a_l = sqrt( ((l+1-m)(l+1+m)) / ((2l+1)(2l+3)) ),
//! ```
//!
//! which is the multiplication-by-x operator in this basis — exactly the
//! data the spectral matrix needs. Note a_{m-1} = 0, so the upward
//! recurrence starts cleanly from Lbar_m alone.

/// The recurrence coefficient `a_l` coupling `Lbar_l` to `Lbar_{l+1}`.
///
/// # Panics
///
/// Panics if `l + 1 < m` (the coefficient refers to basis members that do
/// not exist for order `m`).
pub fn coupling(m: u32, l: u32) -> f64 {
    assert!(l + 1 >= m, "coupling a_{l} undefined below order m = {m}");
    let lf = l as f64;
    let mf = m as f64;
    (((lf + 1.0 - mf) * (lf + 1.0 + mf)) / ((2.0 * lf + 1.0) * (2.0 * lf + 3.0))).sqrt()
}

/// The normalization constant of the lowest basis member `Lbar_m^m`.
fn base_norm(m: u32) -> f64 {
    let mut c = m as f64 + 0.5;
    for j in 1..=m {
        c *= (2.0 * j as f64 - 1.0) / (2.0 * j as f64);
    }
    c.sqrt()
}

/// Values of `Lbar_l^m(x)` for `l = m..=l_max`, by upward recurrence.
///
/// # Panics
///
/// Panics if `l_max < m` or `|x| > 1`.
pub fn eval_normalized(m: u32, l_max: u32, x: f64) -> Vec<f64> {
    assert!(l_max >= m, "l_max = {l_max} below order m = {m}");
    assert!(x.abs() <= 1.0, "argument {x} outside [-1, 1]");
    let count = (l_max - m + 1) as usize;
    let mut values = Vec::with_capacity(count);
    let start = base_norm(m) * (1.0 - x * x).powf(m as f64 / 2.0);
    values.push(start);
    if count == 1 {
        return values;
    }
    // First step: a_{m-1} = 0 removes the lower neighbour.
    values.push(x * start / coupling(m, m));
    for l in (m + 1)..l_max {
        let idx = (l - m) as usize;
        let next =
            (x * values[idx] - coupling(m, l - 1) * values[idx - 1]) / coupling(m, l);
        values.push(next);
    }
    values
}

/// Evaluates a coefficient vector over the stride-2 sector
/// `l = m, m+2, m+4, ...` at `x`: the sum of `coefficients[r] *
/// Lbar_{m+2r}^m(x)`.
pub fn eval_even_sector(m: u32, coefficients: &[f64], x: f64) -> f64 {
    assert!(!coefficients.is_empty(), "empty coefficient vector");
    let l_max = m + 2 * (coefficients.len() as u32 - 1);
    let values = eval_normalized(m, l_max, x);
    coefficients
        .iter()
        .enumerate()
        .map(|(r, c)| c * values[2 * r])
        .sum()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::oracle::quadrature::GaussLegendre;

    #[test]
    fn low_order_closed_forms() {
        for &x in &[-0.9, -0.3, 0.0, 0.5, 0.77] {
            let v = eval_normalized(0, 2, x);
            assert!((v[0] - 0.5f64.sqrt()).abs() < 1e-15);
            assert!((v[1] - 1.5f64.sqrt() * x).abs() < 1e-15);
            let p2 = 2.5f64.sqrt() * (1.5 * x * x - 0.5);
            assert!((v[2] - p2).abs() < 1e-14, "x = {x}: {} vs {p2}", v[2]);
        }
    }

    #[test]
    fn vanishes_at_endpoints_for_positive_order() {
        for m in 1..=5u32 {
            for &x in &[-1.0, 1.0] {
                let v = eval_normalized(m, m + 4, x);
                assert!(v.iter().all(|t| t.abs() < 1e-300), "m = {m}, x = {x}: {v:?}");
            }
        }
    }

    #[test]
    fn orthonormal_under_quadrature() {
        for m in [0u32, 1, 3] {
            let l_max = m + 6;
            // Integrands are polynomials of degree <= 2 l_max.
            let rule = GaussLegendre::new((l_max + 1) as usize);
            for l in m..=l_max {
                for k in l..=l_max {
                    let got = rule.integrate(|x| {
                        let v = eval_normalized(m, l_max, x);
                        v[(l - m) as usize] * v[(k - m) as usize]
                    });
                    let want = if l == k { 1.0 } else { 0.0 };
                    assert!(
                        (got - want).abs() < 1e-13,
                        "m = {m}, (l, k) = ({l}, {k}): {got}"
                    );
                }
            }
        }
    }

    #[test]
    fn coupling_matches_quadrature_inner_product() {
        for m in [0u32, 2, 5] {
            let l_max = m + 5;
            let rule = GaussLegendre::new((l_max + 2) as usize);
            for l in m..l_max {
                let got = rule.integrate(|x| {
                    let v = eval_normalized(m, l_max, x);
                    x * v[(l - m) as usize] * v[(l + 1 - m) as usize]
                });
                let want = coupling(m, l);
                assert!((got - want).abs() < 1e-13, "m = {m}, l = {l}: {got} vs {want}");
            }
        }
    }

    #[test]
    fn lowest_coupling_squared_is_one_third_at_order_zero() {
        let a0 = coupling(0, 0);
        assert!((a0 * a0 - 1.0 / 3.0).abs() < 1e-15);
        // Below the order the coefficient is exactly zero.
        assert_eq!(coupling(3, 2), 0.0);
    }

    #[test]
    #[should_panic(expected = "undefined below order")]
    fn coupling_rejects_indices_below_order() {
        coupling(5, 3);
    }

    #[test]
    fn even_sector_evaluation_matches_manual_sum() {
        let coeffs = [0.6, -0.3, 0.1];
        let x = 0.42;
        let v = eval_normalized(1, 5, x);
        let want = 0.6 * v[0] - 0.3 * v[2] + 0.1 * v[4];
        let got = eval_even_sector(1, &coeffs, x);
        assert!((got - want).abs() < 1e-15);
    }
}
