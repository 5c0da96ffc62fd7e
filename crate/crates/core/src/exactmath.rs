//! Arbitrary-precision integers and rationals, memoized factorials, and
//! binomial/multinomial coefficients: the arithmetic substrate for every
//! formula in this crate.
//!
//! All arithmetic is exact. Scalars are [`ExactRational`] (reduced
//! big-integer fractions backed by `num-rational`); values of the form
//! `a + b * pi^2` are kept symbolic as [`PiExpression`]. Nothing in this
//! module (or the crates built on it) touches floating point.

use alloc::string::String;
use alloc::vec::Vec;

use num_bigint::{BigInt, BigUint};
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use spin::RwLock;

/// Reduced fraction of arbitrary-precision integers.
///
/// `num_rational::BigRational` already maintains the invariants we need:
/// the denominator is positive and the fraction is normalized eagerly on
/// construction, so equality is componentwise.
pub type ExactRational = BigRational;

/// Convenience constructor for small rationals.
///
/// Panics if `den` is zero.
pub fn ratio(num: i64, den: i64) -> ExactRational {
    assert!(den != 0, "zero denominator");
    BigRational::new(BigInt::from(num), BigInt::from(den))
}

/// A value of the form `rational_part + pi_squared_coefficient * pi^2`.
///
/// The sum of the nonnegative Lyapunov exponents of the Teichmueller
/// geodesic flow mixes a rational term with a rational multiple of pi^2;
/// this type keeps that value symbolic instead of approximating pi.
/// Equality is componentwise.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PiExpression {
    pub rational_part: ExactRational,
    pub pi_squared_coefficient: ExactRational,
}

impl PiExpression {
    pub fn new(rational_part: ExactRational, pi_squared_coefficient: ExactRational) -> Self {
        Self {
            rational_part,
            pi_squared_coefficient,
        }
    }
}

impl core::fmt::Display for PiExpression {
    fn fmt(&self, f: &mut core::fmt::Formatter<'_>) -> core::fmt::Result {
        if self.pi_squared_coefficient.is_negative() {
            write!(
                f,
                "{} - {} * pi^2",
                self.rational_part,
                -self.pi_squared_coefficient.clone()
            )
        } else {
            write!(
                f,
                "{} + {} * pi^2",
                self.rational_part, self.pi_squared_coefficient
            )
        }
    }
}

// Append-only factorial table. Every evaluator in this crate is
// factorial-dominated, so entries are never evicted; the read lock is the
// hot path and the write section only extends the table.
static FACTORIALS: RwLock<Vec<BigUint>> = RwLock::new(Vec::new());

/// `n!` as a big integer, memoized across the whole process.
///
/// Repeated calls are O(1) lookups; the table is safe to use from
/// concurrent callers.
pub fn factorial(n: u64) -> BigUint {
    let idx = usize::try_from(n).expect("factorial index overflow");
    if let Some(v) = FACTORIALS.read().get(idx) {
        return v.clone();
    }
    let mut table = FACTORIALS.write();
    if table.is_empty() {
        table.push(BigUint::one());
    }
    while table.len() <= idx {
        let k = table.len() as u64;
        let next = table.last().unwrap() * k;
        table.push(next);
    }
    table[idx].clone()
}

/// Binomial coefficient `C(n, k)`; zero when `k < 0` or `k > n`.
pub fn binomial(n: u64, k: i64) -> BigUint {
    if k < 0 || k as u64 > n {
        return BigUint::zero();
    }
    let k = k as u64;
    factorial(n) / (factorial(k) * factorial(n - k))
}

/// Error from [`multinomial`]: the parts do not sum to `n`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PartsSumMismatch {
    pub n: u64,
    pub parts_sum: u64,
}

impl core::fmt::Display for PartsSumMismatch {
    fn fmt(&self, f: &mut core::fmt::Formatter<'_>) -> core::fmt::Result {
        write!(
            f,
            "multinomial parts sum to {} but n = {}",
            self.parts_sum, self.n
        )
    }
}

impl core::error::Error for PartsSumMismatch {}

/// Multinomial coefficient `n! / (parts_1! * ... * parts_k!)`.
///
/// Rejects inputs whose parts do not sum to `n`.
pub fn multinomial(n: u64, parts: &[u64]) -> Result<BigUint, PartsSumMismatch> {
    let parts_sum: u64 = parts.iter().sum();
    if parts_sum != n {
        return Err(PartsSumMismatch { n, parts_sum });
    }
    let mut denom = BigUint::one();
    for &p in parts {
        denom *= factorial(p);
    }
    Ok(factorial(n) / denom)
}

/// Error from [`parse_rational`].
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum ParseRationalError {
    Malformed,
    ZeroDenominator,
}

impl core::fmt::Display for ParseRationalError {
    fn fmt(&self, f: &mut core::fmt::Formatter<'_>) -> core::fmt::Result {
        match self {
            ParseRationalError::Malformed => write!(f, "expected `p` or `p/q`"),
            ParseRationalError::ZeroDenominator => write!(f, "zero denominator"),
        }
    }
}

impl core::error::Error for ParseRationalError {}

/// Parse `p` or `p/q` (optionally signed) into a reduced rational.
pub fn parse_rational(s: &str) -> Result<ExactRational, ParseRationalError> {
    let s = s.trim();
    let (num_str, den_str) = match s.split_once('/') {
        Some((a, b)) => (a, b),
        None => (s, "1"),
    };
    let num: BigInt = num_str
        .trim()
        .parse()
        .map_err(|_| ParseRationalError::Malformed)?;
    let den: BigInt = den_str
        .trim()
        .parse()
        .map_err(|_| ParseRationalError::Malformed)?;
    if den.is_zero() {
        return Err(ParseRationalError::ZeroDenominator);
    }
    Ok(BigRational::new(num, den))
}

fn decimal_digit_count(n: &BigUint) -> i64 {
    // to_str_radix is fine here; callers are presentation paths.
    n.to_str_radix(10).len() as i64
}

fn pow10(e: u64) -> BigUint {
    BigUint::from(10u32).pow(u32::try_from(e).expect("exponent overflow"))
}

/// Render `r` as a decimal string with at most `sig_digits` significant
/// digits, rounding half to even. Trailing zeros are trimmed; magnitudes
/// outside a readable fixed-point range fall back to `d.dddde<exp>`
/// notation. This is presentation only -- the exact value is the rational.
pub fn decimal_string(r: &ExactRational, sig_digits: usize) -> String {
    use alloc::format;

    let sig_digits = sig_digits.max(1);
    if r.is_zero() {
        return String::from("0");
    }
    let negative = r.is_negative();
    let a = r.numer().magnitude().clone();
    let b = r.denom().magnitude().clone();

    // Exponent e with 10^e <= a/b < 10^(e+1).
    let mut e = decimal_digit_count(&a) - decimal_digit_count(&b);
    let ge = if e >= 0 {
        a >= &b * pow10(e as u64)
    } else {
        &a * pow10((-e) as u64) >= b
    };
    if !ge {
        e -= 1;
    }

    // Round a/b / 10^(e - sig + 1) to an integer of exactly sig digits.
    let shift = sig_digits as i64 - 1 - e;
    let (num, den) = if shift >= 0 {
        (a * pow10(shift as u64), b)
    } else {
        (a, b * pow10((-shift) as u64))
    };
    let mut q = &num / &den;
    let rem = &num - &q * &den;
    let twice = &rem * 2u32;
    if twice > den || (twice == den && (&q % 2u32) == BigUint::one()) {
        q += 1u32;
    }
    let mut digits = q.to_str_radix(10);
    if digits.len() > sig_digits {
        // Rounding carried into a new leading digit (e.g. 9.99 -> 10.0).
        digits.truncate(sig_digits);
        e += 1;
    }

    let body = if e >= 0 && (e as usize) < sig_digits {
        let point = e as usize + 1;
        let (int_part, frac_part) = digits.split_at(point);
        let frac_part = frac_part.trim_end_matches('0');
        if frac_part.is_empty() {
            String::from(int_part)
        } else {
            format!("{int_part}.{frac_part}")
        }
    } else if (-5..0).contains(&e) {
        let digits = digits.trim_end_matches('0');
        let mut s = String::from("0.");
        for _ in 0..(-e - 1) {
            s.push('0');
        }
        s.push_str(digits);
        s
    } else {
        let digits = digits.trim_end_matches('0');
        let (first, rest) = digits.split_at(1);
        if rest.is_empty() {
            format!("{first}e{e}")
        } else {
            format!("{first}.{rest}e{e}")
        }
    };

    if negative {
        let mut s = String::from("-");
        s.push_str(&body);
        s
    } else {
        body
    }
}
