//! Exact rational scalars.
//!
//! Every coefficient in this crate is a [`Scalar`]: an arbitrary-precision
//! rational number, always in lowest terms with a positive denominator.
//! There is no floating point anywhere; equality is exact.

use crate::error::Error;
use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

/// The only scalar type of the library.
pub type Scalar = BigRational;

/// Scalar from a machine integer.
pub fn int(n: i64) -> Scalar {
    BigRational::from_integer(BigInt::from(n))
}

/// Scalar `n/d`. Panics if `d == 0`; reduces to lowest terms.
pub fn frac(n: i64, d: i64) -> Scalar {
    BigRational::new(BigInt::from(n), BigInt::from(d))
}

/// Parse a rational literal matching `-?[0-9]+(/[1-9][0-9]*)?`.
///
/// The input need not be in lowest terms (`"4/6"` parses to `2/3`), but the
/// grammar is strict: no whitespace, no `+` sign, no zero or negative
/// denominator, no leading zero in the denominator.
pub fn parse_scalar(text: &str) -> Result<Scalar, Error> {
    let bad = || Error::BadRational {
        text: text.to_string(),
    };
    let (num_part, den_part) = match text.split_once('/') {
        Some((a, b)) => (a, Some(b)),
        None => (text, None),
    };
    let digits = num_part.strip_prefix('-').unwrap_or(num_part);
    if digits.is_empty() || !digits.bytes().all(|b| b.is_ascii_digit()) {
        return Err(bad());
    }
    let numer: BigInt = num_part.parse().map_err(|_| bad())?;
    let denom: BigInt = match den_part {
        None => BigInt::one(),
        Some(d) => {
            if d.is_empty() || d.starts_with('0') || !d.bytes().all(|b| b.is_ascii_digit()) {
                return Err(bad());
            }
            d.parse().map_err(|_| bad())?
        }
    };
    Ok(BigRational::new(numer, denom))
}

/// Lowest-terms rendering: `p` when the denominator is 1, else `p/q`.
pub fn format_scalar(s: &Scalar) -> String {
    s.to_string()
}

/// Exact rational k-th root, if one exists.
///
/// Returns `None` when `q` is not a perfect k-th power in the rationals
/// (including the case of a negative `q` with even `k`).
pub fn rational_nth_root(q: &Scalar, k: u32) -> Option<Scalar> {
    assert!(k >= 1, "root order must be positive");
    if k == 1 {
        return Some(q.clone());
    }
    if q.is_zero() {
        return Some(Scalar::zero());
    }
    if q.is_negative() && k.is_multiple_of(2) {
        return None;
    }
    let root_of = |x: &BigInt| -> Option<BigInt> {
        let mag = x.abs().nth_root(k);
        let candidate = if x.is_negative() { -mag } else { mag };
        if num_traits::pow(candidate.clone(), k as usize) == *x {
            Some(candidate)
        } else {
            None
        }
    };
    let n = root_of(q.numer())?;
    let d = root_of(q.denom())?;
    Some(BigRational::new(n, d))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parse_reduces_to_lowest_terms() {
        assert_eq!(parse_scalar("4/6").unwrap(), frac(2, 3));
        assert_eq!(format_scalar(&parse_scalar("4/6").unwrap()), "2/3");
        assert_eq!(parse_scalar("-10/4").unwrap(), frac(-5, 2));
        assert_eq!(parse_scalar("007").unwrap(), int(7));
    }

    #[test]
    fn integer_rendering_omits_denominator() {
        assert_eq!(format_scalar(&int(5)), "5");
        assert_eq!(format_scalar(&int(-3)), "-3");
        assert_eq!(format_scalar(&frac(6, 3)), "2");
        assert_eq!(format_scalar(&frac(-1, 2)), "-1/2");
    }

    #[test]
    fn grammar_rejections() {
        for bad in [
            "", "-", "/2", "1/", "1/0", "1/02", "1/-2", "+1", " 1", "1 ", "1.5", "a", "1//2",
        ] {
            assert!(parse_scalar(bad).is_err(), "{bad:?} should be rejected");
        }
    }

    #[test]
    fn nth_roots() {
        assert_eq!(rational_nth_root(&frac(8, 27), 3), Some(frac(2, 3)));
        assert_eq!(rational_nth_root(&frac(-8, 27), 3), Some(frac(-2, 3)));
        assert_eq!(rational_nth_root(&frac(4, 9), 2), Some(frac(2, 3)));
        assert_eq!(rational_nth_root(&frac(-4, 9), 2), None);
        assert_eq!(rational_nth_root(&int(2), 2), None);
        assert_eq!(rational_nth_root(&int(0), 5), Some(int(0)));
        assert_eq!(rational_nth_root(&frac(5, 7), 1), Some(frac(5, 7)));
    }
}
