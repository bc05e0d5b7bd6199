//! Gauss–Legendre quadrature on [-1, 1].
//!
//! An n-point rule integrates polynomials of degree 2n - 1 exactly, which
//! is what makes it the right tool here: every inner product this crate
//! needs is a polynomial (or a rapidly converging analytic function)
//! against a polynomial weight. Nodes are the roots of the degree-n
//! Legendre polynomial, found by Newton iteration from the Chebyshev-like
//! initial guess cos(pi (i + 3/4) / (n + 1/2)), which is accurate enough
//! that a handful of iterations reaches machine precision; the weight at
//! a root x is 2 / ((1 - x^2) P_n'(x)^2).

/// A fixed Gauss–Legendre rule.
#[derive(Debug, Clone)]
pub struct GaussLegendre {
    nodes: Vec<f64>,
    weights: Vec<f64>,
}

/// Legendre polynomial value and derivative at `x` by the three-term
/// recurrence; the derivative uses the standard identity
/// `(x^2 - 1) P_n'(x) = n (x P_n(x) - P_{n-1}(x))`.
fn legendre_with_derivative(n: usize, x: f64) -> (f64, f64) {
    assert!(n >= 1, "degree must be positive");
    let mut p_prev = 1.0;
    let mut p = x;
    for k in 2..=n {
        let kf = k as f64;
        let next = ((2.0 * kf - 1.0) * x * p - (kf - 1.0) * p_prev) / kf;
        p_prev = p;
        p = next;
    }
    let dp = (n as f64) * (x * p - p_prev) / (x * x - 1.0);
    (p, dp)
}

impl GaussLegendre {
    /// Builds the n-point rule.
    ///
    /// # Panics
    ///
    /// Panics if `n == 0` or if Newton iteration fails to settle (which
    /// would indicate a broken floating-point environment).
    pub fn new(n: usize) -> Self {
        assert!(n >= 1, "a quadrature rule needs at least one node");
        let mut nodes = vec![0.0; n];
        let mut weights = vec![0.0; n];
        for i in 0..n {
            let mut x = (std::f64::consts::PI * (i as f64 + 0.75) / (n as f64 + 0.5)).cos();
            let mut converged = false;
            for _ in 0..100 {
                let (p, dp) = legendre_with_derivative(n, x);
                let dx = p / dp;
                x -= dx;
                if dx.abs() < 1e-15 {
                    converged = true;
                    break;
                }
            }
            assert!(converged, "Newton iteration for node {i} of {n} did not settle");
            let (_, dp) = legendre_with_derivative(n, x);
            nodes[i] = x;
            weights[i] = 2.0 / ((1.0 - x * x) * dp * dp);
        }
        // The initial guesses enumerate roots from +1 toward -1; store
        // them in increasing order.
        nodes.reverse();
        weights.reverse();
        GaussLegendre { nodes, weights }
    }

    pub fn len(&self) -> usize {
        self.nodes.len()
    }

    pub fn is_empty(&self) -> bool {
        self.nodes.is_empty()
    }

    pub fn nodes(&self) -> &[f64] {
        &self.nodes
    }

    pub fn weights(&self) -> &[f64] {
        &self.weights
    }

    /// Integrates `f` over [-1, 1].
    pub fn integrate(&self, mut f: impl FnMut(f64) -> f64) -> f64 {
        self.nodes
            .iter()
            .zip(&self.weights)
            .map(|(&x, &w)| w * f(x))
            .sum()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn nodes_are_symmetric_and_sorted() {
        for n in [1usize, 2, 3, 7, 16, 41] {
            let rule = GaussLegendre::new(n);
            assert_eq!(rule.len(), n);
            for w in rule.weights() {
                assert!(*w > 0.0);
            }
            for pair in rule.nodes().windows(2) {
                assert!(pair[0] < pair[1], "nodes not increasing for n = {n}");
            }
            for i in 0..n {
                let mirror = rule.nodes()[n - 1 - i];
                assert!(
                    (rule.nodes()[i] + mirror).abs() < 1e-14,
                    "asymmetric nodes for n = {n}"
                );
            }
        }
    }

    #[test]
    fn weights_sum_to_interval_length() {
        for n in [1usize, 5, 20, 64] {
            let rule = GaussLegendre::new(n);
            let total: f64 = rule.weights().iter().sum();
            assert!((total - 2.0).abs() < 1e-13, "n = {n}: {total}");
        }
    }

    #[test]
    fn integrates_monomials_exactly_up_to_design_degree() {
        let n = 6;
        let rule = GaussLegendre::new(n);
        for k in 0..=(2 * n - 1) {
            let got = rule.integrate(|x| x.powi(k as i32));
            let want = if k % 2 == 0 { 2.0 / (k as f64 + 1.0) } else { 0.0 };
            assert!((got - want).abs() < 1e-14, "x^{k}: {got} vs {want}");
        }
    }

    #[test]
    fn integrates_analytic_function_accurately() {
        let rule = GaussLegendre::new(24);
        let got = rule.integrate(f64::exp);
        let want = std::f64::consts::E - 1.0 / std::f64::consts::E;
        assert!((got - want).abs() < 1e-13, "{got} vs {want}");
    }
}
