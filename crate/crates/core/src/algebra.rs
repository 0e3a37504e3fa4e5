//! Exact arithmetic on the unit interval.
//!
//! Every coefficient and every unknown lives in `[0, 1] ∩ ℚ`. The three
//! operators the solver is built from are the product t-norm, its residual
//! implication (the Goguen residuum) and the standard negation `x ↦ 1 - x`.

use std::cmp::Ordering;
use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};

/// A rational number in `[0, 1]`, always held in lowest terms.
///
/// Structural equality is numeric equality because the underlying
/// `BigRational` normalises on construction.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct UnitRational(BigRational);

impl UnitRational {
    pub fn zero() -> Self {
        UnitRational(BigRational::zero())
    }

    pub fn one() -> Self {
        UnitRational(BigRational::one())
    }

    /// `numerator / denominator`, rejecting values outside the unit interval.
    pub fn new(numerator: i64, denominator: i64) -> Result<Self> {
        if denominator == 0 {
            return Err(Error::Scalar {
                text: format!("{numerator}/{denominator}"),
                reason: "zero denominator".into(),
            });
        }
        Self::try_from(BigRational::new(numerator.into(), denominator.into()))
    }

    /// Like [`UnitRational::new`] but panics on bad input. Handy for literals.
    pub fn frac(numerator: i64, denominator: i64) -> Self {
        Self::new(numerator, denominator).expect("fraction outside [0, 1]")
    }

    pub fn numerator(&self) -> &BigInt {
        self.0.numer()
    }

    pub fn denominator(&self) -> &BigInt {
        self.0.denom()
    }

    pub fn as_rational(&self) -> &BigRational {
        &self.0
    }

    pub fn is_zero(&self) -> bool {
        self.0.is_zero()
    }

    pub fn is_one(&self) -> bool {
        self.0.is_one()
    }

    /// Decimal rendering rounded half-up to `places` digits. Display only.
    pub fn to_decimal(&self, places: usize) -> String {
        let scale = BigInt::from(10u32).pow(places as u32);
        let scaled = self.0.numer() * &scale * 2 + self.0.denom();
        let rounded: BigInt = scaled / (self.0.denom() * 2);
        let int_part = &rounded / &scale;
        let frac_part = &rounded % &scale;
        if places == 0 {
            return int_part.to_string();
        }
        format!("{int_part}.{:0>width$}", frac_part.to_string(), width = places)
    }
}

impl TryFrom<BigRational> for UnitRational {
    type Error = Error;

    fn try_from(value: BigRational) -> Result<Self> {
        if value.is_negative() || value > BigRational::one() {
            return Err(Error::Scalar {
                text: value.to_string(),
                reason: "value lies outside [0, 1]".into(),
            });
        }
        Ok(UnitRational(value))
    }
}

impl From<UnitRational> for BigRational {
    fn from(value: UnitRational) -> Self {
        value.0
    }
}

impl fmt::Display for UnitRational {
    /// `p/q` in lowest terms, or a bare integer when `q = 1`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.denom().is_one() {
            write!(f, "{}", self.0.numer())
        } else {
            write!(f, "{}/{}", self.0.numer(), self.0.denom())
        }
    }
}

impl fmt::Debug for UnitRational {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

/// Parses an exact non-negative rational from decimal (`"0.25"`, `"1"`) or
/// fraction (`"1/4"`) notation. Decimals are read exactly, never via `f64`,
/// so `"0.3333333"` is `3333333/10000000`, not `1/3`.
pub fn parse_rational(text: &str) -> Result<BigRational> {
    let fail = |reason: &str| Error::Scalar {
        text: text.to_string(),
        reason: reason.to_string(),
    };
    let s = text.trim();
    if s.is_empty() {
        return Err(fail("empty scalar"));
    }
    if let Some((num, den)) = s.split_once('/') {
        let num = parse_digits(num.trim()).ok_or_else(|| fail("numerator is not a non-negative integer"))?;
        let den = parse_digits(den.trim()).ok_or_else(|| fail("denominator is not a non-negative integer"))?;
        if den.is_zero() {
            return Err(fail("zero denominator"));
        }
        return Ok(BigRational::new(num, den));
    }
    let (int_part, frac_part) = match s.split_once('.') {
        Some((i, f)) => (i, f),
        None => (s, ""),
    };
    if int_part.is_empty() && frac_part.is_empty() {
        return Err(fail("no digits"));
    }
    let int_value = if int_part.is_empty() {
        BigInt::zero()
    } else {
        parse_digits(int_part).ok_or_else(|| fail("malformed decimal"))?
    };
    if frac_part.is_empty() {
        return Ok(BigRational::from_integer(int_value));
    }
    let frac_value = parse_digits(frac_part).ok_or_else(|| fail("malformed decimal"))?;
    let scale = BigInt::from(10u32).pow(frac_part.len() as u32);
    Ok(BigRational::new(int_value * &scale + frac_value, scale))
}

fn parse_digits(s: &str) -> Option<BigInt> {
    if s.is_empty() || !s.bytes().all(|b| b.is_ascii_digit()) {
        return None;
    }
    BigInt::parse_bytes(s.as_bytes(), 10)
}

impl FromStr for UnitRational {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let value = parse_rational(s)?;
        UnitRational::try_from(value).map_err(|_| Error::Scalar {
            text: s.to_string(),
            reason: "value lies outside [0, 1]".into(),
        })
    }
}

/// Product t-norm.
pub fn tnorm(a: &UnitRational, b: &UnitRational) -> UnitRational {
    UnitRational(&a.0 * &b.0)
}

/// Goguen residuum: the greatest `z` in `[0, 1]` with `a * z <= b`.
pub fn residuum(a: &UnitRational, b: &UnitRational) -> UnitRational {
    if a <= b {
        UnitRational::one()
    } else {
        // a > b >= 0, so a is nonzero and b / a < 1.
        UnitRational(&b.0 / &a.0)
    }
}

/// Standard negation `1 - x`.
pub fn negate(x: &UnitRational) -> UnitRational {
    UnitRational(BigRational::one() - &x.0)
}

fn check_lengths(lengths: &[usize]) -> Result<()> {
    match lengths.split_first() {
        Some((first, rest)) if rest.iter().any(|l| l != first) => Err(Error::Dimension(format!(
            "row vectors have lengths {lengths:?}"
        ))),
        _ => Ok(()),
    }
}

/// `max_j (a⁺_j * x_j) ∨ (a⁻_j * (1 - x_j))`; the empty maximum is 0.
pub fn eval_bipolar_row(
    a_plus: &[UnitRational],
    a_minus: &[UnitRational],
    x: &[UnitRational],
) -> Result<UnitRational> {
    check_lengths(&[a_plus.len(), a_minus.len(), x.len()])?;
    Ok(a_plus
        .iter()
        .zip(a_minus)
        .zip(x)
        .map(|((ap, am), xj)| std::cmp::max(tnorm(ap, xj), tnorm(am, &negate(xj))))
        .max()
        .unwrap_or_else(UnitRational::zero))
}

/// `max_j (a⁺_j * x_j) ∨ (a⁻_j * y_j)`; the empty maximum is 0.
pub fn eval_fre_row(
    a_plus: &[UnitRational],
    a_minus: &[UnitRational],
    x: &[UnitRational],
    y: &[UnitRational],
) -> Result<UnitRational> {
    check_lengths(&[a_plus.len(), a_minus.len(), x.len(), y.len()])?;
    Ok(a_plus
        .iter()
        .zip(a_minus)
        .zip(x.iter().zip(y))
        .map(|((ap, am), (xj, yj))| std::cmp::max(tnorm(ap, xj), tnorm(am, yj)))
        .max()
        .unwrap_or_else(UnitRational::zero))
}

/// Component-wise order on equal-length tuples. `None` when incomparable.
pub fn compare_tuples(a: &[UnitRational], b: &[UnitRational]) -> Option<Ordering> {
    if a.len() != b.len() {
        return None;
    }
    let mut le = true;
    let mut ge = true;
    for (u, v) in a.iter().zip(b) {
        match u.cmp(v) {
            Ordering::Less => ge = false,
            Ordering::Greater => le = false,
            Ordering::Equal => {}
        }
    }
    match (le, ge) {
        (true, true) => Some(Ordering::Equal),
        (true, false) => Some(Ordering::Less),
        (false, true) => Some(Ordering::Greater),
        (false, false) => None,
    }
}

/// `true` iff `a <= b` component-wise.
pub fn dominated_by(a: &[UnitRational], b: &[UnitRational]) -> bool {
    matches!(compare_tuples(a, b), Some(Ordering::Less | Ordering::Equal))
}

pub(crate) fn in_unit_interval(value: &BigRational) -> bool {
    !value.is_negative() && *value <= BigRational::one()
}
