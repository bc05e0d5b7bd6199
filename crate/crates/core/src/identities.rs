//! The combinatorial machinery behind the closed forms of the first two
//! series orders, implemented as machine-checkable exact identities.
//!
//! Integrating the low-order superpotentials with `tau = sin(theta)`
//! produces double binomial sums whose `tau^(2l-2m)` coefficients must
//! vanish for the reconstructed eigenfunction to stay finite at the
//! interval ends; that single requirement fixes the first- and
//! second-order eigenvalue coefficients. This module implements every sum
//! family involved, the step recurrences connecting neighbouring `l`, the
//! vanishing lemmas that close the induction, and the final collapses of
//! the raw double sums to their one- and two-term tidy forms — all in
//! exact rational arithmetic. Floating point is deliberately absent here:
//! an identity that holds only approximately has not been checked.
//!
//! Naming of the families:
//!
//! - `S1, S2, S3` are the pure sums over `k` (see [`n_sum`] for the
//!   defining expressions).
//! - `N1, N2, N3, N4` are the same sums divided by `(2l - 2m)`, the form
//!   in which they appear as integral coefficients; they are singular at
//!   `l = m`, which is exactly the logarithmic term of the integral, so
//!   every cancellation statement is phrased on the S-side where it holds
//!   uniformly for `l = 0..=m` (and for every `m`, including `m = 0`).
//!   `N4` and `N2` have literally identical defining sums; both names are
//!   kept because both appear in the second-order selection ratio.
//! - `Q1, Q2, Q3` are the inhomogeneous terms of the step recurrences;
//!   they vanish for `l < m` (first two) and `l < m + 1` (third), which is
//!   what propagates the cancellation from `l = 0` to all `l`.

use std::collections::BTreeMap;
use std::fmt;

use num_bigint::BigInt;

use crate::exact::{binom, double_factorial, Rational};

/// The ten sum families. See the module docs for the naming scheme.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Family {
    N1,
    N2,
    N3,
    N4,
    Q1,
    Q2,
    Q3,
    S1,
    S2,
    S3,
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let name = match self {
            Family::N1 => "N1",
            Family::N2 => "N2",
            Family::N3 => "N3",
            Family::N4 => "N4",
            Family::Q1 => "Q1",
            Family::Q2 => "Q2",
            Family::Q3 => "Q3",
            Family::S1 => "S1",
            Family::S2 => "S2",
            Family::S3 => "S3",
        };
        f.write_str(name)
    }
}

/// Error produced by [`n_sum`].
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum IdentitiesError {
    /// An N-family was requested at `l = m`, where its `1/(2l - 2m)`
    /// factor is singular; the S-family carries the finite content there.
    SingularIndex { family: Family, m: u32 },
}

impl fmt::Display for IdentitiesError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            IdentitiesError::SingularIndex { family, m } => {
                write!(f, "singular index: {family} at l = m = {m} (use the S-family there)")
            }
        }
    }
}

impl std::error::Error for IdentitiesError {}

/// `(-1)^e` as a big integer.
fn neg_one_pow(e: u32) -> BigInt {
    if e % 2 == 0 {
        BigInt::from(1)
    } else {
        BigInt::from(-1)
    }
}

/// `S1_l = sum_{k = max(l-1, 0)}^{m} (-1)^(k+l+1) C(m, k) C(k+1, l) / (2k+3)`.
fn s1(m: u32, l: u32) -> Rational {
    let mut acc = Rational::zero();
    for k in l.saturating_sub(1)..=m {
        let num = neg_one_pow(k + l + 1) * binom(m as u64, k as i64) * binom(k as u64 + 1, l as i64);
        acc += Rational::ratio(num, BigInt::from(2 * k + 3));
    }
    acc
}

/// `S2_l = sum_{k = l}^{m} (-1)^(k+l+1) C(m, k) C(k, l) / (2k+1)`.
fn s2(m: u32, l: u32) -> Rational {
    let mut acc = Rational::zero();
    for k in l..=m {
        let num = neg_one_pow(k + l + 1) * binom(m as u64, k as i64) * binom(k as u64, l as i64);
        acc += Rational::ratio(num, BigInt::from(2 * k + 1));
    }
    acc
}

/// `S3_l = sum_{k = max(l-1, 0)}^{m+1} (-1)^(k+l+1) C(m+1, k) C(k+1, l)
///         / ((2m+3)^2 (2k+3))`.
fn s3(m: u32, l: u32) -> Rational {
    let scale = BigInt::from(2 * m + 3) * BigInt::from(2 * m + 3);
    let mut acc = Rational::zero();
    for k in l.saturating_sub(1)..=(m + 1) {
        let num =
            neg_one_pow(k + l + 1) * binom(m as u64 + 1, k as i64) * binom(k as u64 + 1, l as i64);
        acc += Rational::ratio(num, &scale * BigInt::from(2 * k + 3));
    }
    acc
}

/// `Q1_l = (1/(2l+2)) sum_{k = l-1}^{m} (-1)^(k+l) C(m, k) C(k+1, l)`.
fn q1(m: u32, l: u32) -> Rational {
    let mut acc = BigInt::from(0);
    for k in l.saturating_sub(1)..=m {
        acc += neg_one_pow(k + l) * binom(m as u64, k as i64) * binom(k as u64 + 1, l as i64);
    }
    Rational::ratio(acc, BigInt::from(2 * l + 2))
}

/// `Q2_l = (1/(2l+2)) sum_{k = l}^{m} (-1)^(k+l) C(m, k) C(k, l)`.
fn q2(m: u32, l: u32) -> Rational {
    let mut acc = BigInt::from(0);
    for k in l..=m {
        acc += neg_one_pow(k + l) * binom(m as u64, k as i64) * binom(k as u64, l as i64);
    }
    Rational::ratio(acc, BigInt::from(2 * l + 2))
}

/// `Q3_l = (1/(2l+2)) sum_{k = l-1}^{m+1} (-1)^(k+l) C(m+1, k) C(k+1, l)`.
fn q3(m: u32, l: u32) -> Rational {
    let mut acc = BigInt::from(0);
    for k in l.saturating_sub(1)..=(m + 1) {
        acc += neg_one_pow(k + l) * binom(m as u64 + 1, k as i64) * binom(k as u64 + 1, l as i64);
    }
    Rational::ratio(acc, BigInt::from(2 * l + 2))
}

/// Exact value of the requested family at `(m, l)`.
///
/// # Errors
///
/// [`IdentitiesError::SingularIndex`] when an N-family is requested at
/// `l = m`.
pub fn n_sum(family: Family, m: u32, l: u32) -> Result<Rational, IdentitiesError> {
    let divide = |s: Rational| {
        if l == m {
            Err(IdentitiesError::SingularIndex { family, m })
        } else {
            Ok(s / Rational::from_int(2 * l as i64 - 2 * m as i64))
        }
    };
    match family {
        Family::S1 => Ok(s1(m, l)),
        Family::S2 => Ok(s2(m, l)),
        Family::S3 => Ok(s3(m, l)),
        Family::Q1 => Ok(q1(m, l)),
        Family::Q2 => Ok(q2(m, l)),
        Family::Q3 => Ok(q3(m, l)),
        Family::N1 => divide(s1(m, l)),
        Family::N2 | Family::N4 => divide(s2(m, l)),
        Family::N3 => divide(s3(m, l)),
    }
}

/// Evaluates a Q-family for every `l` in `0..m`; all returned values are
/// expected to be zero.
///
/// # Panics
///
/// Panics if the family is not one of `Q1, Q2, Q3` or if `m == 0`.
pub fn q_vanishing(family: Family, m: u32) -> Vec<(u32, Rational)> {
    assert!(
        matches!(family, Family::Q1 | Family::Q2 | Family::Q3),
        "q_vanishing is defined for the Q-families, got {family}"
    );
    assert!(m >= 1, "the vanishing range 0..m is empty for m = 0");
    (0..m)
        .map(|l| (l, n_sum(family, m, l).expect("Q-families are never singular")))
        .collect()
}

/// First-order eigenvalue coefficient selected by the boundary condition:
/// the ratio `-S1_0 / S2_0`, which the closed forms reduce to
/// `-1/(2m+3)`.
pub fn select_e01(m: u32) -> Rational {
    -s1(m, 0) / s2(m, 0)
}

/// Second-order eigenvalue coefficient selected the same way at the next
/// order: `-S3_0 / S2_0`, which reduces to `-(2m+2)/((2m+3)^3 (2m+5))`.
pub fn select_e02(m: u32) -> Rational {
    -s3(m, 0) / s2(m, 0)
}

/// One checked identity instance inside a [`RecurrenceReport`].
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RecurrenceCheck {
    /// Which identity was checked (stable label, e.g. `"s1-step"`).
    pub identity: &'static str,
    /// The `l` the step or cancellation was evaluated at.
    pub l: u32,
    /// Left side minus right side; the identity holds iff this is zero.
    pub defect: Rational,
    pub pass: bool,
}

/// Outcome of [`verify_recurrences`] for one `m`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RecurrenceReport {
    pub m: u32,
    pub checks: Vec<RecurrenceCheck>,
}

impl RecurrenceReport {
    pub fn all_pass(&self) -> bool {
        self.checks.iter().all(|c| c.pass)
    }

    /// The failed checks, if any.
    pub fn violations(&self) -> impl Iterator<Item = &RecurrenceCheck> {
        self.checks.iter().filter(|c| !c.pass)
    }
}

/// Checks every step recurrence and cancellation as an exact rational
/// identity for one `m >= 1`.
///
/// Checked per `l`:
///
/// - `"s1-step"`, `"s2-step"` (`l = 0..m-1`): the singularity-free step
///   `S_(l+1) = ((2l+1)/(2l+2)) S_l + Q_l`.
/// - `"s3-step"` (`l = 0..m-1`): as above with inhomogeneity
///   `Q3_l / (2m+3)^2`.
/// - `"n1-step"`, `"n2-step"`, `"n3-step"` (`l = 0..m-2`): the same steps
///   multiplied back into the `1/(2l-2m)` normalization,
///   `(2l+2-2m) N_(l+1) = ((2l+1)/(2l+2)) (2l-2m) N_l + Q_l`.
/// - `"m1-step"` (`l = 0..m-1`): the combined step for
///   `S1_l + e1 S2_l` with inhomogeneity `Q1_l + e1 Q2_l`, where `e1` is
///   [`select_e01`].
/// - `"m1-frac-step"`, `"m2-frac-step"` (`l = 0..m-2`): the divided form
///   `M_(l+1) = ((2l+1)(2l-2m)) / ((2l+2)(2l-2m+2)) M_l + (...)`, stated
///   on N-values where both sides are finite.
/// - `"m2-step"` (`l = 0..m-1`): the homogeneous second-order step for
///   `S3_l + e2 S2_l` with `e2` from [`select_e02`].
/// - `"m1-zero"`, `"m2-zero"` (`l = 0..=m`): the cancellations
///   `S1_l + e1 S2_l = 0` and `S3_l + e2 S2_l = 0`; `l = m` is the
///   logarithmic-term condition the N-side cannot express.
/// - `"n4-eq-n2"` (`l = 0..m-1`): `N4_l = N2_l`.
///
/// # Panics
///
/// Panics if `m == 0` (every checked range is empty there).
pub fn verify_recurrences(m: u32) -> RecurrenceReport {
    assert!(m >= 1, "recurrence ranges are empty for m = 0");
    let e1 = select_e01(m);
    let e2 = select_e02(m);
    let scale3 = Rational::from_int((2 * m as i64 + 3).pow(2));
    let two_m = 2 * m as i64;
    let mut checks = Vec::new();
    let mut push = |identity: &'static str, l: u32, lhs: Rational, rhs: Rational| {
        let defect = lhs - rhs;
        let pass = defect.is_zero();
        checks.push(RecurrenceCheck { identity, l, defect, pass });
    };

    let sm1 = |l: u32| s1(m, l) + &e1 * s2(m, l);
    let sm2 = |l: u32| s3(m, l) + &e2 * s2(m, l);

    for l in 0..m {
        let step = Rational::new(2 * l as i64 + 1, 2 * l as i64 + 2);
        push("s1-step", l, s1(m, l + 1), &step * s1(m, l) + q1(m, l));
        push("s2-step", l, s2(m, l + 1), &step * s2(m, l) + q2(m, l));
        push("s3-step", l, s3(m, l + 1), &step * s3(m, l) + q3(m, l) / &scale3);
        push("m1-step", l, sm1(l + 1), &step * sm1(l) + (q1(m, l) + &e1 * q2(m, l)));
        push("m2-step", l, sm2(l + 1), &step * sm2(l));
        let n2 = n_sum(Family::N2, m, l).expect("l < m");
        let n4 = n_sum(Family::N4, m, l).expect("l < m");
        push("n4-eq-n2", l, n4, n2);
    }

    for l in 0..m.saturating_sub(1) {
        let l_i = l as i64;
        let step = Rational::new(2 * l_i + 1, 2 * l_i + 2);
        let lhs_scale = Rational::from_int(2 * l_i + 2 - two_m);
        let rhs_scale = Rational::from_int(2 * l_i - two_m);
        let n = |fam| n_sum(fam, m, l).expect("l < m");
        let n_up = |fam| n_sum(fam, m, l + 1).expect("l + 1 < m");
        push(
            "n1-step",
            l,
            &lhs_scale * n_up(Family::N1),
            &step * (&rhs_scale * n(Family::N1)) + q1(m, l),
        );
        push(
            "n2-step",
            l,
            &lhs_scale * n_up(Family::N2),
            &step * (&rhs_scale * n(Family::N2)) + q2(m, l),
        );
        push(
            "n3-step",
            l,
            &lhs_scale * n_up(Family::N3),
            &step * (&rhs_scale * n(Family::N3)) + q3(m, l) / &scale3,
        );
        let frac = &step * &rhs_scale / &lhs_scale;
        let m1 = |l| {
            n_sum(Family::N1, m, l).expect("finite") + &e1 * n_sum(Family::N2, m, l).expect("finite")
        };
        let m2 = |l| {
            n_sum(Family::N3, m, l).expect("finite") + &e2 * n_sum(Family::N4, m, l).expect("finite")
        };
        push(
            "m1-frac-step",
            l,
            m1(l + 1),
            &frac * m1(l) + (q1(m, l) + &e1 * q2(m, l)) / &lhs_scale,
        );
        push("m2-frac-step", l, m2(l + 1), &frac * m2(l) + q3(m, l) / (&scale3 * &lhs_scale));
    }

    for l in 0..=m {
        push("m1-zero", l, sm1(l), Rational::zero());
        push("m2-zero", l, sm2(l), Rational::zero());
    }

    RecurrenceReport { m, checks }
}

/// Which factor the product-rule evaluation is applied to in the
/// vanishing lemma: the `l`-th derivative of `tau (1 - tau)^p` at
/// `tau = 1`, expanded through the binomial theorem.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum LeibnizVariant {
    /// `p = m`: `sum_{k = l-1}^{m} (-1)^k C(m, k) C(k+1, l)`.
    A1,
    /// `p = m + 1`: `sum_{k = l-1}^{m+1} (-1)^k C(m+1, k) C(k+1, l)`.
    A2,
}

/// The raw vanishing-lemma sum. Zero whenever `1 <= l < p` (with `p` as
/// in [`LeibnizVariant`]); at the boundary `l = p` the derivative no
/// longer vanishes at `tau = 1` and the sum is `(-1)^p` times a positive
/// integer, so the function computes rather than rejects out-of-range
/// indices.
pub fn leibniz_vanishing(m: u32, l: u32, variant: LeibnizVariant) -> Rational {
    let p = match variant {
        LeibnizVariant::A1 => m,
        LeibnizVariant::A2 => m + 1,
    };
    let mut acc = BigInt::from(0);
    for k in l.saturating_sub(1)..=p {
        acc += neg_one_pow(k) * binom(p as u64, k as i64) * binom(k as u64 + 1, l as i64);
    }
    Rational::from_bigint(acc)
}

/// The two base integrals `int_0^1 (1 - tau^2)^m dtau` and
/// `int_0^1 tau^2 (1 - tau^2)^m dtau`, each computed two independent
/// ways: term-by-term binomial expansion, and the double-factorial closed
/// form. Returns `((sum, closed), (sum, closed))`; the pairs are expected
/// to agree.
pub fn double_factorial_integrals(m: u32) -> ((Rational, Rational), (Rational, Rational)) {
    let mut plain_sum = Rational::zero();
    let mut tau2_sum = Rational::zero();
    for k in 0..=m {
        let c = Rational::from_bigint(neg_one_pow(k) * binom(m as u64, k as i64));
        plain_sum += &c / Rational::from_int(2 * k as i64 + 1);
        tau2_sum += &c / Rational::from_int(2 * k as i64 + 3);
    }
    let df = |n: i64| Rational::from_bigint(double_factorial(n));
    let plain_closed = df(2 * m as i64) / df(2 * m as i64 + 1);
    let tau2_closed = &plain_closed - df(2 * m as i64 + 2) / df(2 * m as i64 + 3);
    ((plain_sum, plain_closed), (tau2_sum, tau2_closed))
}

/// Adds `value` to `map[key]`, dropping the entry if it cancels to zero.
fn accumulate(map: &mut BTreeMap<i64, Rational>, key: i64, value: Rational) {
    let entry = map.entry(key).or_insert_with(Rational::zero);
    *entry += value;
    if entry.is_zero() {
        map.remove(&key);
    }
}

/// Collapses the raw first-order double sum for
/// `W_1 / (1 - tau^2)^(1/2)` into its `tau`-power coefficients
/// (`tau = sin(theta)`; exponents `2l - 2m - 1` can be negative).
///
/// The boundary-selected coefficient from [`select_e01`] is inserted, so
/// the cancellation collapses everything to the single monomial
/// `tau / (2m + 3)`.
pub fn w1_tidy_sum(m: u32) -> BTreeMap<i64, Rational> {
    let e1 = select_e01(m);
    let two_m = 2 * m as i64;
    let mut map = BTreeMap::new();
    for l in 0..=(m + 1) {
        for k in l.saturating_sub(1)..=m {
            let num = neg_one_pow(k + l + 1) * binom(m as u64, k as i64) * binom(k as u64 + 1, l as i64);
            let term = Rational::ratio(num, BigInt::from(2 * k + 3));
            accumulate(&mut map, 2 * l as i64 - two_m - 1, term);
        }
    }
    for l in 0..=m {
        for k in l..=m {
            let num = neg_one_pow(k + l + 1) * binom(m as u64, k as i64) * binom(k as u64, l as i64);
            let term = &e1 * Rational::ratio(num, BigInt::from(2 * k + 1));
            accumulate(&mut map, 2 * l as i64 - two_m - 1, term);
        }
    }
    map
}

/// Second-order analogue of [`w1_tidy_sum`]: collapses the raw double sum
/// for `W_2 / cos(theta)` with [`select_e02`] inserted; expected result
/// `-tau/((2m+3)^3 (2m+5)) + tau^3/((2m+3)^2 (2m+5))`.
pub fn w2_tidy_sum(m: u32) -> BTreeMap<i64, Rational> {
    let e2 = select_e02(m);
    let scale = BigInt::from(2 * m + 3) * BigInt::from(2 * m + 3);
    let two_m = 2 * m as i64;
    let mut map = BTreeMap::new();
    for l in 0..=(m + 2) {
        for k in l.saturating_sub(1)..=(m + 1) {
            let num =
                neg_one_pow(k + l + 1) * binom(m as u64 + 1, k as i64) * binom(k as u64 + 1, l as i64);
            let term = Rational::ratio(num, &scale * BigInt::from(2 * k + 3));
            accumulate(&mut map, 2 * l as i64 - two_m - 1, term);
        }
    }
    for l in 0..=m {
        for k in l..=m {
            let num = neg_one_pow(k + l + 1) * binom(m as u64, k as i64) * binom(k as u64, l as i64);
            let term = &e2 * Rational::ratio(num, BigInt::from(2 * k + 1));
            accumulate(&mut map, 2 * l as i64 - two_m - 1, term);
        }
    }
    map
}

/// Collapses the raw double sum for `int W_1 d(theta)` into
/// `tau`-power coefficients plus the coefficient of `ln(tau)`
/// (contributed by the `l = m` terms, whose antiderivative is
/// logarithmic). Expected: polynomial part `tau^2 / (4m + 6)`, log
/// coefficient zero.
pub fn w1_integral_sum(m: u32) -> (BTreeMap<i64, Rational>, Rational) {
    let e1 = select_e01(m);
    let two_m = 2 * m as i64;
    let mut map = BTreeMap::new();
    let mut log_coeff = Rational::zero();
    {
        let mut add = |l: u32, term: Rational| {
            if l == m {
                log_coeff += term;
            } else {
                let exponent = 2 * l as i64 - two_m;
                accumulate(&mut map, exponent, term / Rational::from_int(exponent));
            }
        };
        for l in 0..=(m + 1) {
            for k in l.saturating_sub(1)..=m {
                let num =
                    neg_one_pow(k + l + 1) * binom(m as u64, k as i64) * binom(k as u64 + 1, l as i64);
                add(l, Rational::ratio(num, BigInt::from(2 * k + 3)));
            }
        }
        for l in 0..=m {
            for k in l..=m {
                let num =
                    neg_one_pow(k + l + 1) * binom(m as u64, k as i64) * binom(k as u64, l as i64);
                add(l, &e1 * Rational::ratio(num, BigInt::from(2 * k + 1)));
            }
        }
    }
    (map, log_coeff)
}

/// Second-order analogue of [`w1_integral_sum`] for `int W_2 d(theta)`.
/// Expected: polynomial part
/// `-tau^2/(2 (2m+3)^3 (2m+5)) + tau^4/(4 (2m+3)^2 (2m+5))`, log
/// coefficient zero. The surviving part comes entirely from the boundary
/// indices `l = m + 1, m + 2` — see [`w2_integral_boundary`].
pub fn w2_integral_sum(m: u32) -> (BTreeMap<i64, Rational>, Rational) {
    let e2 = select_e02(m);
    let scale = BigInt::from(2 * m + 3) * BigInt::from(2 * m + 3);
    let two_m = 2 * m as i64;
    let mut map = BTreeMap::new();
    let mut log_coeff = Rational::zero();
    {
        let mut add = |l: u32, term: Rational| {
            if l == m {
                log_coeff += term;
            } else {
                let exponent = 2 * l as i64 - two_m;
                accumulate(&mut map, exponent, term / Rational::from_int(exponent));
            }
        };
        for l in 0..=(m + 2) {
            for k in l.saturating_sub(1)..=(m + 1) {
                let num = neg_one_pow(k + l + 1)
                    * binom(m as u64 + 1, k as i64)
                    * binom(k as u64 + 1, l as i64);
                add(l, Rational::ratio(num, &scale * BigInt::from(2 * k + 3)));
            }
        }
        for l in 0..=m {
            for k in l..=m {
                let num =
                    neg_one_pow(k + l + 1) * binom(m as u64, k as i64) * binom(k as u64, l as i64);
                add(l, &e2 * Rational::ratio(num, BigInt::from(2 * k + 1)));
            }
        }
    }
    (map, log_coeff)
}

/// Just the `l = m + 1, m + 2` boundary terms of the second-order
/// integral — the only part its cancellation leaves standing. Computed
/// from the raw sum so it can arbitrate between closed forms: the correct
/// collapse is `-tau^2/(2 (2m+3)^3 (2m+5)) + tau^4/(4 (2m+3)^2 (2m+5))`
/// (even powers, no `(2m+7)`).
pub fn w2_integral_boundary(m: u32) -> BTreeMap<i64, Rational> {
    let scale = BigInt::from(2 * m + 3) * BigInt::from(2 * m + 3);
    let two_m = 2 * m as i64;
    let mut map = BTreeMap::new();
    for l in (m + 1)..=(m + 2) {
        for k in l.saturating_sub(1)..=(m + 1) {
            let num = neg_one_pow(k + l + 1)
                * binom(m as u64 + 1, k as i64)
                * binom(k as u64 + 1, l as i64);
            let term = Rational::ratio(num, &scale * BigInt::from(2 * k + 3));
            let exponent = 2 * l as i64 - two_m;
            accumulate(&mut map, exponent, term / Rational::from_int(exponent));
        }
    }
    map
}

/// One row of the full identity report.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ReportRow {
    /// Family or identity label (`"Q1"`, `"m2-step"`, `"tidy1"`, ...).
    pub family: String,
    pub m: u32,
    /// Index within the family: the `l` of a sum or step, or the
    /// `tau`-exponent of a collapse coefficient.
    pub l: i64,
    /// Computed value (exact).
    pub value: Rational,
    /// Expected value (exact).
    pub expected: Rational,
    pub pass: bool,
}

fn row(family: impl Into<String>, m: u32, l: i64, value: Rational, expected: Rational) -> ReportRow {
    let pass = value == expected;
    ReportRow { family: family.into(), m, l, value, expected, pass }
}

/// Evaluates the whole identity suite for every `m` in `0..=m_max` and
/// returns one row per checked instance. Everything is exact; a row
/// passes only on rational equality.
pub fn report(m_max: u32) -> Vec<ReportRow> {
    let mut rows = Vec::new();
    for m in 0..=m_max {
        let mm = m as i64;

        // Vanishing of the recurrence inhomogeneities.
        for fam in [Family::Q1, Family::Q2, Family::Q3] {
            for l in 0..m {
                let v = n_sum(fam, m, l).expect("Q-families are total");
                rows.push(row(fam.to_string(), m, l as i64, v, Rational::zero()));
            }
        }

        // Cancellations in singularity-free form, including the l = m
        // logarithmic condition.
        let e1 = select_e01(m);
        let e2 = select_e02(m);
        for l in 0..=m {
            let v1 = s1(m, l) + &e1 * s2(m, l);
            rows.push(row("M1", m, l as i64, v1, Rational::zero()));
            let v2 = s3(m, l) + &e2 * s2(m, l);
            rows.push(row("M2", m, l as i64, v2, Rational::zero()));
        }

        // The two selected coefficients against their closed forms.
        rows.push(row("select1", m, 0, e1, Rational::new(-1, 2 * mm + 3)));
        rows.push(row(
            "select2",
            m,
            0,
            e2,
            Rational::from_int(-(2 * mm + 2))
                / Rational::from_int((2 * mm + 3).pow(3) * (2 * mm + 5)),
        ));

        // N4 = N2 where both are finite.
        for l in 0..m {
            let n2 = n_sum(Family::N2, m, l).expect("l < m");
            let n4 = n_sum(Family::N4, m, l).expect("l < m");
            rows.push(row("N4-N2", m, l as i64, n4 - &n2, Rational::zero()));
        }

        // Step recurrences (left side minus right side, expected zero).
        if m >= 1 {
            for check in verify_recurrences(m).checks {
                rows.push(ReportRow {
                    family: check.identity.to_string(),
                    m,
                    l: check.l as i64,
                    value: check.defect,
                    expected: Rational::zero(),
                    pass: check.pass,
                });
            }
        }

        // Collapses of the raw double sums.
        let tidy1 = w1_tidy_sum(m);
        let mut expect1 = BTreeMap::new();
        expect1.insert(1, Rational::new(1, 2 * mm + 3));
        push_map_rows(&mut rows, "tidy1", m, &tidy1, &expect1);

        let tidy2 = w2_tidy_sum(m);
        let cube = (2 * mm + 3).pow(3);
        let mut expect2 = BTreeMap::new();
        expect2.insert(1, Rational::new(-1, cube * (2 * mm + 5)));
        expect2.insert(3, Rational::new(1, (2 * mm + 3).pow(2) * (2 * mm + 5)));
        push_map_rows(&mut rows, "tidy2", m, &tidy2, &expect2);

        let (int1, log1) = w1_integral_sum(m);
        let mut expect_int1 = BTreeMap::new();
        expect_int1.insert(2, Rational::new(1, 4 * mm + 6));
        push_map_rows(&mut rows, "integral1", m, &int1, &expect_int1);
        rows.push(row("integral1-log", m, 0, log1, Rational::zero()));

        let (int2, log2) = w2_integral_sum(m);
        let mut expect_int2 = BTreeMap::new();
        expect_int2.insert(2, Rational::new(-1, 2 * cube * (2 * mm + 5)));
        expect_int2.insert(4, Rational::new(1, 4 * (2 * mm + 3).pow(2) * (2 * mm + 5)));
        push_map_rows(&mut rows, "integral2", m, &int2, &expect_int2);
        rows.push(row("integral2-log", m, 0, log2, Rational::zero()));

        // Base integrals, two routes each.
        let ((plain_sum, plain_closed), (tau2_sum, tau2_closed)) = double_factorial_integrals(m);
        rows.push(row("integral-base", m, 0, plain_sum, plain_closed));
        rows.push(row("integral-base-tau2", m, 0, tau2_sum, tau2_closed));
    }
    rows
}

/// Emits one row per exponent present in either the computed or expected
/// collapse map.
fn push_map_rows(
    rows: &mut Vec<ReportRow>,
    family: &str,
    m: u32,
    got: &BTreeMap<i64, Rational>,
    expected: &BTreeMap<i64, Rational>,
) {
    let keys: std::collections::BTreeSet<i64> =
        got.keys().chain(expected.keys()).copied().collect();
    for key in keys {
        let v = got.get(&key).cloned().unwrap_or_else(Rational::zero);
        let e = expected.get(&key).cloned().unwrap_or_else(Rational::zero);
        rows.push(row(family, m, key, v, e));
    }
}
