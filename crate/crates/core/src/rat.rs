//! Arbitrary-precision rational scalars.
//!
//! All body coordinates in this crate are [`Rat`] values, kept reduced with a
//! positive denominator by `num-rational`.

use alloc::string::String;
use core::str::FromStr;

use num_bigint::BigInt;
use num_traits::{Signed, ToPrimitive, Zero};

pub use num_rational::BigRational as RatInner;

/// Exact rational number: reduced fraction with positive denominator.
pub type Rat = num_rational::BigRational;

/// Rational from an integer.
pub fn rat_int(n: i64) -> Rat {
    Rat::from_integer(BigInt::from(n))
}

/// Rational `p/q`. Panics if `q == 0`.
pub fn rat(p: i64, q: i64) -> Rat {
    Rat::new(BigInt::from(p), BigInt::from(q))
}

/// Exact dyadic rational equal to the given finite float.
pub fn rat_from_f64(x: f64) -> Option<Rat> {
    Rat::from_float(x)
}

/// Nearest dyadic rational with denominator `2^bits`. Bounded coordinate
/// sizes keep downstream exact arithmetic fast.
pub fn rat_from_f64_dyadic(x: f64, bits: u32) -> Option<Rat> {
    if !x.is_finite() {
        return None;
    }
    let scale = (1u64 << bits) as f64;
    let scaled = libm::round(x * scale);
    let numer = Rat::from_float(scaled)?;
    Some(numer / Rat::from_integer(BigInt::from(1u64 << bits)))
}

/// Nearest double to a rational.
pub fn rat_to_f64(x: &Rat) -> f64 {
    x.to_f64().unwrap_or(f64::NAN)
}

/// Parses `"p/q"` or a plain integer `"p"`.
pub fn rat_parse(s: &str) -> Option<Rat> {
    Rat::from_str(s.trim()).ok()
}

/// Canonical display form: `"p/q"`, or `"p"` when the denominator is 1.
pub fn rat_display(x: &Rat) -> String {
    use alloc::format;
    format!("{x}")
}

pub fn is_zero(x: &Rat) -> bool {
    x.is_zero()
}

pub fn abs(x: &Rat) -> Rat {
    x.abs()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parse_and_display_round_trip() {
        let half = rat(1, 2);
        assert_eq!(rat_display(&half), "1/2");
        assert_eq!(rat_parse("1/2"), Some(half));
        assert_eq!(rat_parse("-4/6"), Some(rat(-2, 3)));
        assert_eq!(rat_display(&rat_int(5)), "5");
        assert_eq!(rat_parse("5"), Some(rat_int(5)));
        assert_eq!(rat_parse("nope"), None);
    }

    #[test]
    fn dyadic_conversion_is_exact() {
        let x = rat_from_f64(0.375).unwrap();
        assert_eq!(x, rat(3, 8));
        assert_eq!(rat_to_f64(&x), 0.375);
    }
}
