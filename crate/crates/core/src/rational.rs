//! Exact rational numbers used for every expansion value and parameter.

use num_rational::Ratio;
use num_traits::{Signed, Zero};

use crate::error::{Error, Result};

pub type Rational = Ratio<i128>;

/// Parses `p/q` or a bare integer `p`.
pub fn parse_rational(text: &str) -> Result<Rational> {
    let text = text.trim();
    let bad = |why: &str| Error::Parse {
        line: 0,
        message: format!("invalid rational `{text}`: {why}"),
    };
    let (num, den) = match text.split_once('/') {
        Some((n, d)) => (n.trim(), d.trim()),
        None => (text, "1"),
    };
    let num: i128 = num.parse().map_err(|_| bad("numerator is not an integer"))?;
    let den: i128 = den.parse().map_err(|_| bad("denominator is not an integer"))?;
    if den.is_zero() {
        return Err(bad("zero denominator"));
    }
    Ok(Rational::new(num, den))
}

pub fn ratio(num: u64, den: u64) -> Rational {
    Rational::new(num as i128, den as i128)
}

pub fn int(n: u64) -> Rational {
    Rational::from_integer(n as i128)
}

/// Smallest integer strictly greater than `x`.
pub(crate) fn next_integer_above(x: Rational) -> i128 {
    x.floor().to_integer() + 1
}

/// Smallest integer greater than or equal to `x`.
pub(crate) fn ceil(x: Rational) -> i128 {
    x.ceil().to_integer()
}

pub(crate) fn ensure_positive(name: &str, x: Rational) -> Result<()> {
    if x.is_positive() {
        Ok(())
    } else {
        Err(Error::precondition(format!("{name} must be positive, got {x}")))
    }
}

/// Serde adapter writing a [`Rational`] as the string `p/q` (or `p` for integers).
pub mod serde_string {
    use serde::{de, Deserialize, Deserializer, Serializer};

    use super::{parse_rational, Rational};

    pub fn serialize<S: Serializer>(value: &Rational, s: S) -> Result<S::Ok, S::Error> {
        s.collect_str(value)
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> Result<Rational, D::Error> {
        let text = String::deserialize(d)?;
        parse_rational(&text).map_err(de::Error::custom)
    }

    pub mod option {
        use super::*;

        pub fn serialize<S: Serializer>(value: &Option<Rational>, s: S) -> Result<S::Ok, S::Error> {
            match value {
                Some(v) => s.collect_str(v),
                None => s.serialize_none(),
            }
        }

        pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> Result<Option<Rational>, D::Error> {
            let text: Option<String> = Option::deserialize(d)?;
            text.map(|t| parse_rational(&t).map_err(de::Error::custom))
                .transpose()
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parses_fractions_and_integers() {
        assert_eq!(parse_rational("2/3").unwrap(), Rational::new(2, 3));
        assert_eq!(parse_rational(" 4/6 ").unwrap(), Rational::new(2, 3));
        assert_eq!(parse_rational("3").unwrap(), Rational::from_integer(3));
        assert!(parse_rational("0.5").is_err());
        assert!(parse_rational("1/0").is_err());
        assert!(parse_rational("a/b").is_err());
    }

    #[test]
    fn display_is_reduced() {
        assert_eq!(Rational::new(4, 6).to_string(), "2/3");
        assert_eq!(Rational::new(6, 3).to_string(), "2");
    }

    #[test]
    fn integer_rounding() {
        assert_eq!(next_integer_above(Rational::from_integer(12)), 13);
        assert_eq!(next_integer_above(Rational::new(25, 2)), 13);
        assert_eq!(ceil(Rational::new(25, 2)), 13);
        assert_eq!(ceil(Rational::from_integer(4)), 4);
    }
}
