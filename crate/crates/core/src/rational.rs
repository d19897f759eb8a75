//! Exact rational scalar used for eigenvalues, degrees and energies.
//!
//! Expression orders are capped at [`crate::expr::MAX_ORDER`] (2^32), which
//! keeps every numerator and denominator produced by the calculus and the
//! energy sums well inside `i128`.

use num_rational::Ratio;
use num_traits::ToPrimitive;

pub type Rational = Ratio<i128>;

pub fn int(v: i128) -> Rational {
    Rational::from_integer(v)
}

pub fn to_f64(r: &Rational) -> f64 {
    r.to_f64().unwrap_or(f64::NAN)
}

/// `[numerator, denominator]`, the pair layout used in JSON output.
pub fn to_pair(r: &Rational) -> [i128; 2] {
    [*r.numer(), *r.denom()]
}

/// Fraction followed by a 6-decimal rendering, e.g. `5/2 (2.500000)`.
pub fn display(r: &Rational) -> String {
    format!("{} ({:.6})", r, to_f64(r))
}
