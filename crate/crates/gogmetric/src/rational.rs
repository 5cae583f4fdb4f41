//! Exact rational arithmetic helpers.
//!
//! All metric data in this crate (edge lengths, covolumes, stretch factors)
//! is kept as exact rationals. Logarithms are taken only at the presentation
//! layer, via [`to_f64`] / [`log_f64`].

use num::bigint::BigInt;
use num::rational::BigRational;
use num::{One, Signed, ToPrimitive, Zero};

/// Exact rational number used for all lengths and stretch factors.
pub type Rat = BigRational;

/// Builds a rational from an integer pair.
pub fn rat(num: i64, den: i64) -> Rat {
    Rat::new(BigInt::from(num), BigInt::from(den))
}

/// Builds a rational from an integer.
pub fn rint(n: i64) -> Rat {
    Rat::from(BigInt::from(n))
}

/// The rational zero.
pub fn rzero() -> Rat {
    Rat::zero()
}

/// The rational one.
pub fn rone() -> Rat {
    Rat::one()
}

/// True if `r > 0`.
pub fn is_positive(r: &Rat) -> bool {
    r.is_positive()
}

/// Renders a rational as `p/q` (or `p` when the denominator is one), the
/// form used by the machine-readable CLI output.
pub fn format_rat(r: &Rat) -> String {
    if r.denom().is_one() {
        format!("{}", r.numer())
    } else {
        format!("{}/{}", r.numer(), r.denom())
    }
}

/// Parses `p/q` or `p` into a rational.
pub fn parse_rat(s: &str) -> Option<Rat> {
    let s = s.trim();
    if let Some((p, q)) = s.split_once('/') {
        let p: BigInt = p.trim().parse().ok()?;
        let q: BigInt = q.trim().parse().ok()?;
        if q.is_zero() {
            return None;
        }
        Some(Rat::new(p, q))
    } else {
        let p: BigInt = s.parse().ok()?;
        Some(Rat::from(p))
    }
}

/// Lossy conversion for presentation output.
pub fn to_f64(r: &Rat) -> f64 {
    r.to_f64().unwrap_or_else(|| {
        // Fall back to a quotient of lossy conversions for huge operands.
        let n = r.numer().to_f64().unwrap_or(f64::MAX);
        let d = r.denom().to_f64().unwrap_or(f64::MAX);
        n / d
    })
}

/// Natural logarithm of a positive rational, for presentation output only.
pub fn log_f64(r: &Rat) -> f64 {
    to_f64(r).ln()
}

/// Formats a float with 12 significant digits, the pinned presentation
/// precision for logarithmic output.
pub fn format_sig12(x: f64) -> String {
    format!("{:.*e}", 11, x)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn format_and_parse_roundtrip() {
        let r = rat(4, 3);
        assert_eq!(format_rat(&r), "4/3");
        assert_eq!(parse_rat("4/3").unwrap(), r);
        assert_eq!(format_rat(&rat(6, 3)), "2");
        assert_eq!(parse_rat("-7/2").unwrap(), rat(-7, 2));
        assert!(parse_rat("1/0").is_none());
    }

    #[test]
    fn sig12_formatting() {
        // 12 significant digits in scientific notation.
        let s = format_sig12(std::f64::consts::LN_2);
        assert!(s.starts_with("6.93147180560"));
    }
}
