//! Exact rational helpers. Every verdict in the crate goes through these;
//! nothing on a verdict path touches floating point.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};

/// Arbitrary-precision fraction, always in lowest terms with a positive
/// denominator.
pub type Rational = num_rational::BigRational;

pub fn int(v: i64) -> Rational {
    Rational::from_integer(BigInt::from(v))
}

pub fn ratio(num: i64, den: i64) -> Rational {
    Rational::new(BigInt::from(num), BigInt::from(den))
}

pub fn ceil(x: &Rational) -> BigInt {
    x.ceil().to_integer()
}

pub fn floor(x: &Rational) -> BigInt {
    x.floor().to_integer()
}

/// `⌈x⌉` clamped at zero, as a machine integer. Saturates on absurdly large
/// values rather than wrapping.
pub fn ceil_nonneg(x: &Rational) -> u64 {
    let c = ceil(x);
    if c.is_negative() {
        0
    } else {
        c.to_u64().unwrap_or(u64::MAX)
    }
}

/// `⌈num / 2⌉` for an integer numerator.
pub fn ceil_half(num: i64) -> i64 {
    Integer::div_ceil(&num, &2)
}

pub fn pow(x: &Rational, exp: u32) -> Rational {
    num_traits::pow(x.clone(), exp as usize)
}

pub fn binomial(n: u64, k: u64) -> BigInt {
    if k > n {
        return BigInt::zero();
    }
    let k = k.min(n - k);
    let mut acc = BigInt::one();
    for i in 0..k {
        acc = acc * BigInt::from(n - i) / BigInt::from(i + 1);
    }
    acc
}

/// Decimal rendering rounded half away from zero to `places` digits.
pub fn to_decimal(x: &Rational, places: u32) -> String {
    let scale = BigInt::from(10u32).pow(places);
    let scaled = x * Rational::from_integer(scale.clone());
    let rounded = scaled.round().to_integer();
    let negative = rounded.is_negative();
    let digits = rounded.abs().to_str_radix(10);
    let places = places as usize;
    let body = if places == 0 {
        digits
    } else {
        let padded = format!("{digits:0>width$}", width = places + 1);
        let (whole, frac) = padded.split_at(padded.len() - places);
        format!("{whole}.{frac}")
    };
    if negative {
        format!("-{body}")
    } else {
        body
    }
}

/// Renders `x` as a terminating decimal with exactly `places` digits if that
/// is lossless, otherwise as `num/den`.
pub fn to_exact_decimal(x: &Rational, places: u32) -> String {
    let scale = Rational::from_integer(BigInt::from(10u32).pow(places));
    if (x * scale).is_integer() {
        to_decimal(x, places)
    } else {
        to_fraction(x)
    }
}

pub fn to_fraction(x: &Rational) -> String {
    if x.is_integer() {
        x.numer().to_string()
    } else {
        format!("{}/{}", x.numer(), x.denom())
    }
}

/// Parses `a`, `a/b`, or a finite decimal such as `0.764` into an exact
/// rational.
pub fn parse_rational(text: &str) -> Option<Rational> {
    let text = text.trim();
    if let Some((num, den)) = text.split_once('/') {
        let num: BigInt = num.trim().parse().ok()?;
        let den: BigInt = den.trim().parse().ok()?;
        if den.is_zero() {
            return None;
        }
        return Some(Rational::new(num, den));
    }
    if let Some((whole, frac)) = text.split_once('.') {
        if frac.is_empty() || !frac.bytes().all(|b| b.is_ascii_digit()) {
            return None;
        }
        let negative = whole.starts_with('-');
        let whole: BigInt = match whole.trim_start_matches(['-', '+']) {
            "" => BigInt::zero(),
            w => w.parse().ok()?,
        };
        let frac_val: BigInt = frac.parse().ok()?;
        let den = BigInt::from(10u32).pow(frac.len() as u32);
        let mag = Rational::new(whole * &den + frac_val, den);
        return Some(if negative { -mag } else { mag });
    }
    text.parse::<BigInt>().ok().map(Rational::from_integer)
}

/// Lossy view for display only.
pub fn to_f64(x: &Rational) -> f64 {
    x.to_f64().unwrap_or(f64::NAN)
}

pub(crate) mod serde_rational {
    use super::{parse_rational, to_fraction, Rational};
    use serde::{de::Error, Deserialize, Deserializer, Serializer};

    pub fn serialize<S: Serializer>(x: &Rational, s: S) -> Result<S::Ok, S::Error> {
        s.serialize_str(&to_fraction(x))
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> Result<Rational, D::Error> {
        let text = String::deserialize(d)?;
        parse_rational(&text).ok_or_else(|| D::Error::custom(format!("bad rational {text:?}")))
    }
}
