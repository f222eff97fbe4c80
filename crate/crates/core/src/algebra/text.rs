//! Canonical plain-text rendering shared by the polynomial types.

use std::fmt;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed};

pub fn format_rational(c: &BigRational) -> String {
    if c.is_integer() {
        c.numer().to_string()
    } else {
        format!("{}/{}", c.numer(), c.denom())
    }
}

pub fn parse_rational(s: &str) -> Result<BigRational, String> {
    let s = s.trim();
    let (n, d) = match s.split_once('/') {
        Some((n, d)) => (n.trim(), d.trim()),
        None => (s, "1"),
    };
    let n: BigInt = n.parse().map_err(|_| format!("bad rational {s:?}"))?;
    let d: BigInt = d.parse().map_err(|_| format!("bad rational {s:?}"))?;
    if d == BigInt::from(0) {
        return Err(format!("zero denominator in {s:?}"));
    }
    Ok(BigRational::new(n, d))
}

/// Exponent `doubled/2` as it appears after `^`.
pub fn format_exp(doubled: i32) -> String {
    if doubled % 2 == 0 {
        (doubled / 2).to_string()
    } else {
        format!("({doubled}/2)")
    }
}

/// `q^(1/2) t x1^-1`; unit exponents omitted, empty for the unit monomial.
pub fn format_monomial(names: &[String], doubled: &[i32]) -> String {
    let mut parts = Vec::new();
    for (name, &e) in names.iter().zip(doubled) {
        match e {
            0 => {}
            2 => parts.push(name.clone()),
            _ => parts.push(format!("{name}^{}", format_exp(e))),
        }
    }
    parts.join(" ")
}

/// Writes `c1 * m1 + c2 * m2 - ...`; an empty sum renders as `0`.
pub fn write_terms<'a>(
    f: &mut fmt::Formatter<'_>,
    terms: impl IntoIterator<Item = (String, &'a BigRational)>,
) -> fmt::Result {
    let mut first = true;
    for (mono, c) in terms {
        let neg = c.is_negative();
        let abs = c.abs();
        let body = match (mono.is_empty(), abs.is_one()) {
            (true, _) => format_rational(&abs),
            (false, true) => mono,
            (false, false) => format!("{} * {mono}", format_rational(&abs)),
        };
        match (first, neg) {
            (true, false) => write!(f, "{body}")?,
            (true, true) => write!(f, "-{body}")?,
            (false, false) => write!(f, " + {body}")?,
            (false, true) => write!(f, " - {body}")?,
        }
        first = false;
    }
    if first {
        write!(f, "0")?;
    }
    Ok(())
}
