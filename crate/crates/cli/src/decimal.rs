//! Exact decimal rendering of rationals: round-half-even at 17
//! significant digits, computed entirely in integer arithmetic so the
//! printed digits are a property of the number, not of any intermediate
//! float. The exact "p/q" form always travels alongside this rendering;
//! the decimal is a convenience, never a replacement.

use num_bigint::BigInt;
use num_traits::{Signed, Zero};
use susy_spheroidal::Rational;

const DIGITS: usize = 17;

fn pow10(k: u32) -> BigInt {
    BigInt::from(10).pow(k)
}

/// Renders `r` as a plain decimal string with exactly 17 significant
/// digits, ties going to the even last digit. Zero renders as "0".
pub fn decimal17(r: &Rational) -> String {
    if r.is_zero() {
        return "0".to_string();
    }
    let negative = r.is_negative();
    let p = r.numer().abs();
    let q = r.denom().clone();
    debu_assert_positive(&q);

    // Scale so the integer quotient has exactly DIGITS digits.
    let mut k: i64 = DIGITS as i64 - (digit_count(&p) as i64 - digit_count(&q) as i64);
    let (quot, exponent);
    loop {
        let (num, den) = if k >= 0 {
            (&p * pow10(k as u32), q.clone())
        } else {
            (p.clone(), &q * pow10((-k) as u32))
        };
        let candidate = &num / &den;
        let len = digit_count(&candidate);
        if len > DIGITS {
            k -= (len - DIGITS) as i64;
            continue;
        }
        if len < DIGITS {
            k += (DIGITS - len) as i64;
            continue;
        }
        let rem = &num - &candidate * &den;
        let twice = &rem * BigInt::from(2);
        let mut rounded = candidate;
        let round_up = match twice.cmp(&den) {
            std::cmp::Ordering::Greater => true,
            std::cmp::Ordering::Less => false,
            std::cmp::Ordering::Equal => (&rounded % BigInt::from(2)) == BigInt::from(1),
        };
        if round_up {
            rounded += 1;
        }
        if digit_count(&rounded) > DIGITS {
            // 999... rolled over to 1000...: drop the extra zero.
            rounded /= BigInt::from(10);
            k -= 1;
        }
        quot = rounded;
        exponent = DIGITS as i64 - 1 - k;
        break;
    }

    let digits = quot.to_string();
    debug_assert_eq!(digits.len(), DIGITS);
    let mut out = String::new();
    if negative {
        out.push('-');
    }
    if exponent >= DIGITS as i64 - 1 {
        // Pure integer, possibly with trailing zeros past the digits.
        out.push_str(&digits);
        for _ in 0..(exponent - (DIGITS as i64 - 1)) {
            out.push('0');
        }
    } else if exponent >= 0 {
        let split = (exponent + 1) as usize;
        out.push_str(&digits[..split]);
        out.push('.');
        out.push_str(&digits[split..]);
    } else {
        out.push_str("0.");
        for _ in 0..(-exponent - 1) {
            out.push('0');
        }
        out.push_str(&digits);
    }
    out
}

fn digit_count(n: &BigInt) -> usize {
    let s = n.to_string();
    if let Some(stripped) = s.strip_prefix('-') {
        stripped.len()
    } else {
        s.len()
    }
}

fn debu_assert_positive(q: &BigInt) {
    debug_assert!(!q.is_zero() && !q.is_negative(), "denominator must be positive");
}

#[cfg(test)]
mod tests {
    use super::*;

    fn r(n: i64, d: i64) -> Rational {
        Rational::new(n, d)
    }

    #[test]
    fn renders_simple_fractions() {
        assert_eq!(decimal17(&Rational::zero()), "0");
        assert_eq!(decimal17(&r(1, 3)), "0.33333333333333333");
        assert_eq!(decimal17(&r(-2, 135)), "-0.014814814814814815");
        assert_eq!(decimal17(&r(1, 2)), "0.50000000000000000");
        assert_eq!(decimal17(&r(2, 1)), "2.0000000000000000");
        assert_eq!(decimal17(&r(-1, 5)), "-0.20000000000000000");
    }

    #[test]
    fn renders_large_and_small_magnitudes() {
        // An 18-digit integer rounds to 17 significant digits.
        assert_eq!(decimal17(&r(123_456_789_012_345_678, 1)), "123456789012345680");
        assert_eq!(
            decimal17(&r(1, 1_000_000)),
            "0.0000010000000000000000"
        );
        // 10^18 has more zeros than significant digits can carry.
        let big = Rational::new(1_000_000_000_000_000_000, 1);
        assert_eq!(decimal17(&big), "1000000000000000000");
    }

    #[test]
    fn two_thirds_rounds_up() {
        assert_eq!(decimal17(&r(2, 3)), "0.66666666666666667");
    }

    #[test]
    fn ties_round_to_even() {
        // 20000000000000001/2 = 1.00000000000000005e16: tie, last kept
        // digit 0 is even, stays down.
        let v = Rational::new(20_000_000_000_000_001, 2);
        assert_eq!(decimal17(&v), "10000000000000000");
        // 30000000000000001/2 = 1.50000000000000005e16: tie again, last
        // kept digit 0, stays down.
        let v = Rational::new(30_000_000_000_000_001, 2);
        assert_eq!(decimal17(&v), "15000000000000000");
        // 2000000000000000299/200 = 1.00000000000000015e16 - 0.005:
        // hmm, build an odd-last-digit tie directly instead:
        // 20000000000000003/2 = 1.00000000000000015e16: tie with last
        // kept digit 1 (odd) rounds up to 2.
        let v = Rational::new(20_000_000_000_000_003, 2);
        assert_eq!(decimal17(&v), "10000000000000002");
    }

    #[test]
    fn exact_halves_keep_their_digits() {
        // 10000000000000001/2 needs 17 significant digits and an exact
        // trailing 5; no rounding happens at all.
        let v = Rational::new(10_000_000_000_000_001, 2);
        assert_eq!(decimal17(&v), "5000000000000000.5");
    }

    #[test]
    fn agrees_with_float_parsing_on_round_trip() {
        for &(n, d) in &[(1i64, 3i64), (-2, 135), (22, 7), (-355, 113), (1, 999_983)] {
            let rendered = decimal17(&r(n, d));
            let parsed: f64 = rendered.parse().unwrap();
            let direct = n as f64 / d as f64;
            assert!(
                ((parsed - direct) / direct).abs() < 1e-15,
                "{n}/{d}: {rendered} vs {direct}"
            );
        }
    }
}
