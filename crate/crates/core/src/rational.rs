//! Exact rational arithmetic and decimal rendering.
//!
//! Every fractional quantity in the crate is a [`Rat`]: a reduced
//! `i128` ratio with positive denominator. Decimal strings exist only
//! for presentation and always carry an explicit [`Rounding`] mode,
//! because published decimal values in this area are sometimes rounded
//! and sometimes truncated.

use std::fmt;
use std::iter::Sum;
use std::ops::{Add, Div, Mul, Neg, Sub};

use num_rational::Ratio;
use num_traits::{Signed, Zero};
use serde::de::Error as _;
use serde::{Deserialize, Deserializer, Serialize, Serializer};

/// An exact rational number in canonical form (gcd 1, denominator > 0).
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub struct Rat(Ratio<i128>);

/// Rounding mode for decimal rendering.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum Rounding {
    /// Round to nearest, ties to the even digit.
    HalfEven,
    /// Drop digits beyond the requested precision (toward zero).
    Truncate,
}

impl Rat {
    pub fn new(numer: i128, denom: i128) -> Rat {
        assert!(denom != 0, "zero denominator");
        Rat(Ratio::new(numer, denom))
    }

    pub fn int(value: i128) -> Rat {
        Rat(Ratio::from_integer(value))
    }

    pub fn zero() -> Rat {
        Rat(Ratio::zero())
    }

    pub fn numer(&self) -> i128 {
        *self.0.numer()
    }

    pub fn denom(&self) -> i128 {
        *self.0.denom()
    }

    pub fn abs(&self) -> Rat {
        Rat(self.0.abs())
    }

    pub fn is_integer(&self) -> bool {
        self.0.is_integer()
    }

    /// Render with exactly `digits` fractional digits.
    pub fn decimal(&self, digits: u32, mode: Rounding) -> String {
        let scale = 10i128.pow(digits);
        let n = self.numer() * scale;
        let d = self.denom();
        let scaled = match mode {
            Rounding::Truncate => n / d,
            Rounding::HalfEven => {
                // Floor division, then resolve the remainder half-to-even.
                let q = n.div_euclid(d);
                let r = n.rem_euclid(d);
                match (2 * r).cmp(&d) {
                    std::cmp::Ordering::Less => q,
                    std::cmp::Ordering::Greater => q + 1,
                    std::cmp::Ordering::Equal => {
                        if q % 2 == 0 {
                            q
                        } else {
                            q + 1
                        }
                    }
                }
            }
        };
        let sign = if scaled < 0 { "-" } else { "" };
        let mag = scaled.unsigned_abs();
        let whole = mag / scale.unsigned_abs();
        let frac = mag % scale.unsigned_abs();
        if digits == 0 {
            format!("{sign}{whole}")
        } else {
            format!("{sign}{whole}.{frac:0width$}", width = digits as usize)
        }
    }
}

impl fmt::Display for Rat {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}/{}", self.numer(), self.denom())
    }
}

impl From<u32> for Rat {
    fn from(v: u32) -> Rat {
        Rat::int(v as i128)
    }
}

impl From<u64> for Rat {
    fn from(v: u64) -> Rat {
        Rat::int(v as i128)
    }
}

macro_rules! rat_binop {
    ($trait:ident, $method:ident) => {
        impl $trait for Rat {
            type Output = Rat;
            fn $method(self, rhs: Rat) -> Rat {
                Rat(self.0.$method(rhs.0))
            }
        }
    };
}

rat_binop!(Add, add);
rat_binop!(Sub, sub);
rat_binop!(Mul, mul);
rat_binop!(Div, div);

impl Neg for Rat {
    type Output = Rat;
    fn neg(self) -> Rat {
        Rat(-self.0)
    }
}

impl Sum for Rat {
    fn sum<I: Iterator<Item = Rat>>(iter: I) -> Rat {
        iter.fold(Rat::zero(), |a, b| a + b)
    }
}

// Serialized as {"num": .., "den": ..} so values survive JSON exactly.
// Fields go out as i64 (plenty for this domain; i128 does not survive
// serde's untagged-enum buffering).
impl Serialize for Rat {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        use serde::ser::Error as _;
        use serde::ser::SerializeStruct;
        let num = i64::try_from(self.numer())
            .map_err(|_| S::Error::custom("numerator exceeds i64"))?;
        let den = i64::try_from(self.denom())
            .map_err(|_| S::Error::custom("denominator exceeds i64"))?;
        let mut s = serializer.serialize_struct("Rat", 2)?;
        s.serialize_field("num", &num)?;
        s.serialize_field("den", &den)?;
        s.end()
    }
}

impl<'de> Deserialize<'de> for Rat {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> Result<Rat, D::Error> {
        #[derive(Deserialize)]
        struct Raw {
            num: i64,
            den: i64,
        }
        let raw = Raw::deserialize(deserializer)?;
        if raw.den == 0 {
            return Err(D::Error::custom("zero denominator"));
        }
        Ok(Rat::new(raw.num as i128, raw.den as i128))
    }
}
