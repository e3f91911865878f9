//! Exact scalar fields: prime fields GF(p) and the rationals.
//!
//! Elements carry no field context; all arithmetic goes through the field value.

use std::fmt;
use std::hash::Hash;
use std::str::FromStr;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Which field a computation runs over.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "lowercase")]
pub enum FieldSpec {
    Rational,
    Prime { p: u64 },
}

impl FieldSpec {
    pub fn characteristic(&self) -> u64 {
        match self {
            FieldSpec::Rational => 0,
            FieldSpec::Prime { p } => *p,
        }
    }

    pub fn validate(&self) -> Result<()> {
        match self {
            FieldSpec::Rational => Ok(()),
            FieldSpec::Prime { p } => {
                if is_prime(*p) && *p < (1 << 31) {
                    Ok(())
                } else {
                    Err(Error::InvalidPrime(*p))
                }
            }
        }
    }
}

impl fmt::Display for FieldSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            FieldSpec::Rational => write!(f, "q"),
            FieldSpec::Prime { p } => write!(f, "gf:{p}"),
        }
    }
}

impl FromStr for FieldSpec {
    type Err = Error;

    /// Accepts `q`, `Q`, `rational`, `gf:<p>` and `GF(<p>)`.
    fn from_str(s: &str) -> Result<Self> {
        let t = s.trim();
        let lower = t.to_ascii_lowercase();
        if lower == "q" || lower == "rational" || lower == "qq" {
            return Ok(FieldSpec::Rational);
        }
        let digits = lower
            .strip_prefix("gf:")
            .or_else(|| lower.strip_prefix("gf(").and_then(|r| r.strip_suffix(')')))
            .or_else(|| lower.strip_prefix("f"));
        match digits.map(|d| d.parse::<u64>()) {
            Some(Ok(p)) => {
                let spec = FieldSpec::Prime { p };
                spec.validate()?;
                Ok(spec)
            }
            _ => Err(Error::Schema(format!("unrecognised field '{s}'"))),
        }
    }
}

pub fn is_prime(p: u64) -> bool {
    if p < 2 {
        return false;
    }
    let mut q = 2;
    while q * q <= p {
        if p % q == 0 {
            return false;
        }
        q += 1;
    }
    true
}

/// An exact field. Implementations must be cheap to clone.
pub trait Field: Clone + fmt::Debug + Send + Sync + 'static {
    type Elem: Clone + PartialEq + Eq + Hash + fmt::Debug + Send + Sync;

    fn spec(&self) -> FieldSpec;
    fn zero(&self) -> Self::Elem;
    fn one(&self) -> Self::Elem;
    fn is_zero(&self, a: &Self::Elem) -> bool;
    fn add(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem;
    fn sub(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem;
    fn mul(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem;
    fn neg(&self, a: &Self::Elem) -> Self::Elem;
    /// Multiplicative inverse; `None` for zero.
    fn inv(&self, a: &Self::Elem) -> Option<Self::Elem>;
    fn from_i64(&self, v: i64) -> Self::Elem;
    /// Parse a decimal string such as `"2"`, `"-1"` or `"2/3"`.
    fn parse(&self, s: &str) -> Result<Self::Elem>;
    fn format(&self, a: &Self::Elem) -> String;

    fn characteristic(&self) -> u64 {
        self.spec().characteristic()
    }

    fn is_one(&self, a: &Self::Elem) -> bool {
        *a == self.one()
    }

    /// `acc += c * b`
    fn mul_add_assign(&self, acc: &mut Self::Elem, c: &Self::Elem, b: &Self::Elem) {
        let prod = self.mul(c, b);
        *acc = self.add(acc, &prod);
    }

    fn div(&self, a: &Self::Elem, b: &Self::Elem) -> Option<Self::Elem> {
        self.inv(b).map(|ib| self.mul(a, &ib))
    }
}

/// GF(p) for a prime `p < 2^31`; elements are canonical residues.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct PrimeField {
    p: u64,
}

impl PrimeField {
    pub fn new(p: u64) -> Result<Self> {
        FieldSpec::Prime { p }.validate()?;
        Ok(PrimeField { p })
    }

    pub fn modulus(&self) -> u64 {
        self.p
    }

    fn pow(&self, mut base: u64, mut exp: u64) -> u64 {
        let mut acc = 1 % self.p;
        base %= self.p;
        while exp > 0 {
            if exp & 1 == 1 {
                acc = acc * base % self.p;
            }
            base = base * base % self.p;
            exp >>= 1;
        }
        acc
    }
}

impl Field for PrimeField {
    type Elem = u64;

    fn spec(&self) -> FieldSpec {
        FieldSpec::Prime { p: self.p }
    }
    fn zero(&self) -> u64 {
        0
    }
    fn one(&self) -> u64 {
        1
    }
    fn is_zero(&self, a: &u64) -> bool {
        *a == 0
    }
    fn add(&self, a: &u64, b: &u64) -> u64 {
        let s = a + b;
        if s >= self.p {
            s - self.p
        } else {
            s
        }
    }
    fn sub(&self, a: &u64, b: &u64) -> u64 {
        if a >= b {
            a - b
        } else {
            a + self.p - b
        }
    }
    fn mul(&self, a: &u64, b: &u64) -> u64 {
        a * b % self.p
    }
    fn neg(&self, a: &u64) -> u64 {
        if *a == 0 {
            0
        } else {
            self.p - a
        }
    }
    fn inv(&self, a: &u64) -> Option<u64> {
        if *a == 0 {
            None
        } else {
            Some(self.pow(*a, self.p - 2))
        }
    }
    fn from_i64(&self, v: i64) -> u64 {
        v.rem_euclid(self.p as i64) as u64
    }
    fn parse(&self, s: &str) -> Result<u64> {
        let s = s.trim();
        let (num, den) = match s.split_once('/') {
            Some((n, d)) => (n.trim(), d.trim()),
            None => (s, "1"),
        };
        let parse_int = |t: &str| -> Result<u64> {
            let v: BigInt = t
                .parse()
                .map_err(|_| Error::Schema(format!("bad coefficient '{s}'")))?;
            let r = ((v % BigInt::from(self.p)) + BigInt::from(self.p)) % BigInt::from(self.p);
            Ok(r.try_into().expect("residue fits in u64"))
        };
        let n = parse_int(num)?;
        let d = parse_int(den)?;
        let di = self
            .inv(&d)
            .ok_or_else(|| Error::Schema(format!("coefficient '{s}' has denominator divisible by {}", self.p)))?;
        Ok(self.mul(&n, &di))
    }
    fn format(&self, a: &u64) -> String {
        a.to_string()
    }
}

/// The rationals, with arbitrary-precision normalized fractions.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Hash)]
pub struct RationalField;

impl Field for RationalField {
    type Elem = BigRational;

    fn spec(&self) -> FieldSpec {
        FieldSpec::Rational
    }
    fn zero(&self) -> BigRational {
        BigRational::zero()
    }
    fn one(&self) -> BigRational {
        BigRational::one()
    }
    fn is_zero(&self, a: &BigRational) -> bool {
        a.is_zero()
    }
    fn add(&self, a: &BigRational, b: &BigRational) -> BigRational {
        a + b
    }
    fn sub(&self, a: &BigRational, b: &BigRational) -> BigRational {
        a - b
    }
    fn mul(&self, a: &BigRational, b: &BigRational) -> BigRational {
        a * b
    }
    fn neg(&self, a: &BigRational) -> BigRational {
        -a
    }
    fn inv(&self, a: &BigRational) -> Option<BigRational> {
        if a.is_zero() {
            None
        } else {
            Some(a.recip())
        }
    }
    fn from_i64(&self, v: i64) -> BigRational {
        BigRational::from_integer(BigInt::from(v))
    }
    fn parse(&self, s: &str) -> Result<BigRational> {
        let s = s.trim();
        let bad = || Error::Schema(format!("bad coefficient '{s}'"));
        match s.split_once('/') {
            Some((n, d)) => {
                let n: BigInt = n.trim().parse().map_err(|_| bad())?;
                let d: BigInt = d.trim().parse().map_err(|_| bad())?;
                if d.is_zero() {
                    return Err(bad());
                }
                Ok(BigRational::new(n, d))
            }
            None => Ok(BigRational::from_integer(s.parse().map_err(|_| bad())?)),
        }
    }
    fn format(&self, a: &BigRational) -> String {
        if a.denom().is_one() {
            a.numer().to_string()
        } else if a.is_negative() {
            format!("-{}/{}", a.numer().abs(), a.denom())
        } else {
            format!("{}/{}", a.numer(), a.denom())
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    #[test]
    fn parses_field_specs() {
        assert_eq!("gf:5".parse::<FieldSpec>().unwrap(), FieldSpec::Prime { p: 5 });
        assert_eq!("GF(7)".parse::<FieldSpec>().unwrap(), FieldSpec::Prime { p: 7 });
        assert_eq!("q".parse::<FieldSpec>().unwrap(), FieldSpec::Rational);
        assert!(matches!("gf:6".parse::<FieldSpec>(), Err(Error::InvalidPrime(6))));
        assert!("reals".parse::<FieldSpec>().is_err());
    }

    #[test]
    fn prime_field_parses_fractions() {
        let f = PrimeField::new(5).unwrap();
        assert_eq!(f.parse("2/3").unwrap(), 4); // 3 * 4 = 12 = 2 mod 5
        assert_eq!(f.parse("-1").unwrap(), 4);
        assert!(f.parse("1/5").is_err());
    }

    #[test]
    fn rational_format_round_trips() {
        let q = RationalField;
        for s in ["0", "3", "-2/3", "7/4"] {
            assert_eq!(q.format(&q.parse(s).unwrap()), s);
        }
        assert_eq!(q.format(&q.parse("4/6").unwrap()), "2/3");
    }

    proptest! {
        #[test]
        fn prime_field_axioms(a in 0u64..13, b in 0u64..13, c in 0u64..13) {
            let f = PrimeField::new(13).unwrap();
            prop_assert_eq!(f.mul(&a, &f.add(&b, &c)), f.add(&f.mul(&a, &b), &f.mul(&a, &c)));
            prop_assert_eq!(f.add(&f.sub(&a, &b), &b), a);
            if a != 0 {
                prop_assert_eq!(f.mul(&a, &f.inv(&a).unwrap()), 1);
            }
        }
    }
}
