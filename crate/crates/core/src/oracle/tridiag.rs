//! Symmetric tridiagonal eigenvalue tools: Sturm-sequence counting,
//! bisection for the smallest eigenvalue, and inverse iteration for its
//! eigenvector.
//!
//! For a symmetric tridiagonal matrix T the number of eigenvalues below a
//! shift x equals the number of negative pivots in the LDL^T
//! factorization of T - xI, computed by the scalar recurrence
//! d_i = (a_i - x) - b_{i-1}^2 / d_{i-1}. That count is monotone in x, so
//! bisection brackets any eigenvalue to the last floating-point bit
//! without ever forming a characteristic polynomial. The eigenvector then
//! comes from a few rounds of inverse iteration with the bisected value
//! as shift, using a partial-pivoting solve that stays stable even though
//! the shifted matrix is numerically singular by construction.

/// Number of eigenvalues of the symmetric tridiagonal matrix strictly
/// below `x`.
///
/// `diag` holds the diagonal, `offdiag` the sub/superdiagonal
/// (`offdiag.len() == diag.len() - 1`).
pub fn sturm_count(diag: &[f64], offdiag: &[f64], x: f64) -> usize {
    assert!(!diag.is_empty(), "empty matrix");
    assert_eq!(offdiag.len(), diag.len() - 1, "off-diagonal length mismatch");
    let mut count = 0;
    let mut d = diag[0] - x;
    if d.abs() < 1e-300 {
        d = -1e-300;
    }
    if d < 0.0 {
        count += 1;
    }
    for i in 1..diag.len() {
        d = (diag[i] - x) - offdiag[i - 1] * offdiag[i - 1] / d;
        if d.abs() < 1e-300 {
            d = -1e-300;
        }
        if d < 0.0 {
            count += 1;
        }
    }
    count
}

/// An interval certainly containing every eigenvalue (Gershgorin discs,
/// slightly widened so the endpoints are strict).
pub fn gershgorin_interval(diag: &[f64], offdiag: &[f64]) -> (f64, f64) {
    assert!(!diag.is_empty(), "empty matrix");
    let mut lo = f64::INFINITY;
    let mut hi = f64::NEG_INFINITY;
    for i in 0..diag.len() {
        let mut radius = 0.0;
        if i > 0 {
            radius += offdiag[i - 1].abs();
        }
        if i + 1 < diag.len() {
            radius += offdiag[i].abs();
        }
        lo = lo.min(diag[i] - radius);
        hi = hi.max(diag[i] + radius);
    }
    let margin = 1e-8 + 1e-12 * lo.abs().max(hi.abs());
    (lo - margin, hi + margin)
}

/// Smallest eigenvalue, bisected until the bracket cannot shrink any
/// further in f64 — i.e. to the last representable bit, not to a fixed
/// tolerance.
pub fn smallest_eigenvalue(diag: &[f64], offdiag: &[f64]) -> f64 {
    let (mut lo, mut hi) = gershgorin_interval(diag, offdiag);
    debug_assert_eq!(sturm_count(diag, offdiag, lo), 0);
    debug_assert!(sturm_count(diag, offdiag, hi) >= 1);
    loop {
        let mid = 0.5 * (lo + hi);
        if mid <= lo || mid >= hi {
            return hi;
        }
        if sturm_count(diag, offdiag, mid) >= 1 {
            hi = mid;
        } else {
            lo = mid;
        }
    }
}

/// Solves `(T - shift I) x = rhs` by Gaussian elimination with partial
/// pivoting (row swaps introduce a second superdiagonal). Near-zero
/// pivots are replaced by `eps * scale`, which is exactly what inverse
/// iteration wants: the solve stays finite and the growth lands in the
/// eigendirection.
fn solve_shifted(diag: &[f64], offdiag: &[f64], shift: f64, rhs: &[f64]) -> Vec<f64> {
    let n = diag.len();
    assert_eq!(rhs.len(), n);
    assert_eq!(offdiag.len(), n.saturating_sub(1));
    let mut scale: f64 = 0.0;
    for i in 0..n {
        scale = scale.max((diag[i] - shift).abs());
        if i + 1 < n {
            scale = scale.max(offdiag[i].abs());
        }
    }
    let guard = f64::EPSILON * scale.max(1.0);
    let fix = |p: f64| {
        if p.abs() < guard {
            if p < 0.0 {
                -guard
            } else {
                guard
            }
        } else {
            p
        }
    };

    let mut d: Vec<f64> = diag.iter().map(|a| a - shift).collect();
    let mut u1: Vec<f64> = offdiag.to_vec();
    let mut u2 = vec![0.0; n.saturating_sub(2)];
    let mut b = rhs.to_vec();

    for i in 0..n.saturating_sub(1) {
        // The entry to eliminate is the original subdiagonal: earlier
        // steps never touch row i+1's leftmost nonzero.
        let sub = offdiag[i];
        if d[i].abs() >= sub.abs() {
            let pivot = fix(d[i]);
            d[i] = pivot;
            let mult = sub / pivot;
            d[i + 1] -= mult * u1[i];
            if i + 2 < n {
                u1[i + 1] -= mult * u2[i];
            }
            b[i + 1] -= mult * b[i];
        } else {
            // Swap rows i and i+1; row i+1 (formerly i) keeps its full
            // three entries, which is where the second superdiagonal
            // comes from.
            let pivot = fix(sub);
            let old_d = d[i];
            let old_u1 = u1[i];
            let old_u2 = if i + 2 < n { u2[i] } else { 0.0 };
            d[i] = pivot;
            u1[i] = d[i + 1];
            if i + 2 < n {
                u2[i] = u1[i + 1];
            }
            b.swap(i, i + 1);
            let mult = old_d / pivot;
            d[i + 1] = old_u1 - mult * u1[i];
            if i + 2 < n {
                u1[i + 1] = old_u2 - mult * u2[i];
            }
            b[i + 1] -= mult * b[i];
        }
    }
    d[n - 1] = fix(d[n - 1]);

    let mut x = vec![0.0; n];
    for i in (0..n).rev() {
        let mut s = b[i];
        if i + 1 < n {
            s -= u1[i] * x[i + 1];
        }
        if i + 2 < n {
            s -= u2[i] * x[i + 2];
        }
        x[i] = s / d[i];
    }
    x
}

/// Euclidean norm.
fn norm(v: &[f64]) -> f64 {
    v.iter().map(|t| t * t).sum::<f64>().sqrt()
}

/// Inverse iteration for the eigenvector belonging to the eigenvalue
/// nearest `shift`. Returns a unit vector whose first
/// nonnegligible component is positive.
pub fn inverse_iteration(diag: &[f64], offdiag: &[f64], shift: f64) -> Vec<f64> {
    let n = diag.len();
    assert!(n >= 1, "empty matrix");
    let mut v = vec![1.0 / (n as f64).sqrt(); n];
    for _ in 0..4 {
        let w = solve_shifted(diag, offdiag, shift, &v);
        let len = norm(&w);
        assert!(len.is_finite() && len > 0.0, "inverse iteration produced a degenerate vector");
        v = w.iter().map(|t| t / len).collect();
    }
    let lead = v
        .iter()
        .find(|t| t.abs() > 1e-8)
        .copied()
        .unwrap_or(v[0]);
    if lead < 0.0 {
        for t in &mut v {
            *t = -*t;
        }
    }
    v
}

/// Rayleigh quotient `v^T T v / v^T v` of a tridiagonal matrix.
pub fn rayleigh_quotient(diag: &[f64], offdiag: &[f64], v: &[f64]) -> f64 {
    assert_eq!(v.len(), diag.len());
    let mut num = 0.0;
    for i in 0..diag.len() {
        num += diag[i] * v[i] * v[i];
        if i + 1 < diag.len() {
            num += 2.0 * offdiag[i] * v[i] * v[i + 1];
        }
    }
    let den: f64 = v.iter().map(|t| t * t).sum();
    num / den
}
