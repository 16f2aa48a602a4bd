//! Fixed-point decimals.
//!
//! Inputs are plain decimal strings. A sequence stores every value and weight
//! as an integer multiple of `10^-scale`, where `scale` is at most
//! [`MAX_SCALE`].

use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};

/// Largest number of decimal places accepted on the exact path.
pub const MAX_SCALE: u32 = 9;

/// A parsed decimal `mantissa * 10^-places`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Decimal {
    mantissa: i128,
    places: u32,
}

impl Decimal {
    pub fn new(mantissa: i128, places: u32) -> Self {
        Decimal { mantissa, places }
    }

    pub fn from_int(v: i64) -> Self {
        Decimal {
            mantissa: v as i128,
            places: 0,
        }
    }

    /// Number of decimal places as written (trailing zeros count).
    pub fn places(&self) -> u32 {
        self.places
    }

    pub fn is_negative(&self) -> bool {
        self.mantissa < 0
    }

    /// Integer value in units of `10^-scale`. Fails if this decimal needs
    /// more places than `scale` or does not fit in an `i64`.
    pub fn to_scaled(&self, scale: u32) -> Result<i64> {
        if scale > MAX_SCALE {
            return Err(Error::NumericRange(format!(
                "scale {scale} exceeds {MAX_SCALE} decimal places"
            )));
        }
        let v = if self.places <= scale {
            self.mantissa
                .checked_mul(10i128.pow(scale - self.places))
                .ok_or_else(|| Error::NumericRange(format!("{self} overflows")))?
        } else {
            let div = 10i128.pow(self.places - scale);
            if self.mantissa % div != 0 {
                return Err(Error::NumericRange(format!(
                    "{self} has more than {scale} significant decimal places"
                )));
            }
            self.mantissa / div
        };
        i64::try_from(v).map_err(|_| Error::NumericRange(format!("{self} overflows")))
    }

    /// Places actually needed to represent the value exactly.
    pub fn significant_places(&self) -> u32 {
        let mut m = self.mantissa;
        let mut p = self.places;
        while p > 0 && m % 10 == 0 {
            m /= 10;
            p -= 1;
        }
        p
    }
}

impl FromStr for Decimal {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let bad = || Error::InvalidNumber(s.to_string());
        let t = s.trim();
        let (neg, body) = match t.as_bytes().first() {
            Some(b'-') => (true, &t[1..]),
            Some(b'+') => (false, &t[1..]),
            _ => (false, t),
        };
        let (int_part, frac_part) = match body.split_once('.') {
            Some((a, b)) => (a, b),
            None => (body, ""),
        };
        if int_part.is_empty() && frac_part.is_empty() {
            return Err(bad());
        }
        if !int_part
            .bytes()
            .chain(frac_part.bytes())
            .all(|b| b.is_ascii_digit())
        {
            return Err(bad());
        }
        let places = frac_part.len() as u32;
        let mut mantissa: i128 = 0;
        for b in int_part.bytes().chain(frac_part.bytes()) {
            mantissa = mantissa
                .checked_mul(10)
                .and_then(|m| m.checked_add((b - b'0') as i128))
                .ok_or_else(|| Error::NumericRange(format!("{s:?} is too large")))?;
        }
        if neg {
            mantissa = -mantissa;
        }
        Ok(Decimal { mantissa, places })
    }
}

impl fmt::Display for Decimal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&render_i128(self.mantissa, self.places))
    }
}

pub fn pow10(scale: u32) -> i64 {
    10i64.pow(scale)
}

/// Render `raw * 10^-scale` with trailing fractional zeros removed.
pub fn render_scaled(raw: i64, scale: u32) -> String {
    let mut m = raw as i128;
    let mut p = scale;
    while p > 0 && m % 10 == 0 {
        m /= 10;
        p -= 1;
    }
    render_i128(m, p)
}

fn render_i128(mantissa: i128, places: u32) -> String {
    let neg = mantissa < 0;
    let digits = mantissa.unsigned_abs().to_string();
    let mut out = String::with_capacity(digits.len() + 3);
    if neg {
        out.push('-');
    }
    let places = places as usize;
    if places == 0 {
        out.push_str(&digits);
    } else if digits.len() > places {
        let (a, b) = digits.split_at(digits.len() - places);
        out.push_str(a);
        out.push('.');
        out.push_str(b);
    } else {
        out.push_str("0.");
        out.extend(std::iter::repeat_n('0', places - digits.len()));
        out.push_str(&digits);
    }
    out
}

/// Render `num / den` to exactly `digits` decimal places, rounding half away
/// from zero. `den` must be positive.
pub fn render_ratio(num: i64, den: i64, digits: u32) -> String {
    assert!(den > 0, "ratio denominator must be positive");
    let scale = 10i128.pow(digits);
    let n = num as i128 * scale;
    let d = den as i128;
    let q = n / d;
    let r = n % d;
    let rounded = if 2 * r.abs() >= d { q + n.signum() } else { q };
    let s = render_i128(rounded, digits);
    // "-0.000" for tiny negatives rounds to zero; keep the sign off.
    if rounded == 0 && s.starts_with('-') {
        s[1..].to_string()
    } else {
        s
    }
}
