use std::fmt;

use num_rational::BigRational;
use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};

use super::Int;
use crate::error::{LinalgError, LinalgResult};

/// Arithmetic context for elimination. Elements carry no modulus of their
/// own; the ring value supplies it.
pub trait Ring: Sync {
    type Elem: Clone + PartialEq + fmt::Debug + Send + Sync;

    fn zero(&self) -> Self::Elem;
    fn one(&self) -> Self::Elem;
    fn from_int(&self, x: &Int) -> Self::Elem;
    fn is_zero(&self, a: &Self::Elem) -> bool;
    fn is_unit(&self, a: &Self::Elem) -> bool;
    fn add(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem;
    fn sub(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem;
    fn mul(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem;
    fn neg(&self, a: &Self::Elem) -> Self::Elem;
    /// Inverse of a unit; panics on non-units.
    fn unit_inverse(&self, a: &Self::Elem) -> Self::Elem;
}

/// A ring in which every nonzero element is a unit.
pub trait Field: Ring {}

#[derive(Clone, Copy, Debug, Default)]
pub struct Integers;

impl Ring for Integers {
    type Elem = Int;

    fn zero(&self) -> Int {
        Int::ZERO
    }
    fn one(&self) -> Int {
        Int::ONE
    }
    fn from_int(&self, x: &Int) -> Int {
        x.clone()
    }
    fn is_zero(&self, a: &Int) -> bool {
        a.is_zero()
    }
    fn is_unit(&self, a: &Int) -> bool {
        a.is_unit()
    }
    fn add(&self, a: &Int, b: &Int) -> Int {
        a.add(b)
    }
    fn sub(&self, a: &Int, b: &Int) -> Int {
        a.sub(b)
    }
    fn mul(&self, a: &Int, b: &Int) -> Int {
        a.mul(b)
    }
    fn neg(&self, a: &Int) -> Int {
        a.neg()
    }
    fn unit_inverse(&self, a: &Int) -> Int {
        assert!(a.is_unit(), "{a} is not a unit in Z");
        a.clone()
    }
}

/// The prime field `Z/p`, with `p < 2^32`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct PrimeField {
    p: u64,
}

impl PrimeField {
    pub fn new(p: u64) -> LinalgResult<Self> {
        if p < 2 || p >= (1 << 32) || !is_prime(p) {
            return Err(LinalgError::NotPrime(p));
        }
        Ok(PrimeField { p })
    }

    pub fn modulus(&self) -> u64 {
        self.p
    }

    fn pow(&self, mut base: u64, mut exp: u64) -> u64 {
        let mut acc = 1;
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

fn is_prime(p: u64) -> bool {
    p >= 2 && (2..).take_while(|d| d * d <= p).all(|d| p % d != 0)
}

impl Ring for PrimeField {
    type Elem = u64;

    fn zero(&self) -> u64 {
        0
    }
    fn one(&self) -> u64 {
        1
    }
    fn from_int(&self, x: &Int) -> u64 {
        x.rem_euclid(self.p)
    }
    fn is_zero(&self, a: &u64) -> bool {
        *a == 0
    }
    fn is_unit(&self, a: &u64) -> bool {
        *a != 0
    }
    fn add(&self, a: &u64, b: &u64) -> u64 {
        (a + b) % self.p
    }
    fn sub(&self, a: &u64, b: &u64) -> u64 {
        (a + self.p - b) % self.p
    }
    fn mul(&self, a: &u64, b: &u64) -> u64 {
        a * b % self.p
    }
    fn neg(&self, a: &u64) -> u64 {
        (self.p - a) % self.p
    }
    fn unit_inverse(&self, a: &u64) -> u64 {
        assert!(*a != 0, "zero has no inverse");
        self.pow(*a, self.p - 2)
    }
}

impl Field for PrimeField {}

#[derive(Clone, Copy, Debug, Default)]
pub struct Rationals;

impl Ring for Rationals {
    type Elem = BigRational;

    fn zero(&self) -> BigRational {
        BigRational::zero()
    }
    fn one(&self) -> BigRational {
        BigRational::one()
    }
    fn from_int(&self, x: &Int) -> BigRational {
        BigRational::from_integer(x.to_big())
    }
    fn is_zero(&self, a: &BigRational) -> bool {
        a.is_zero()
    }
    fn is_unit(&self, a: &BigRational) -> bool {
        !a.is_zero()
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
    fn unit_inverse(&self, a: &BigRational) -> BigRational {
        a.recip()
    }
}

impl Field for Rationals {}

/// Coefficient ring of a homology computation.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Coefficients {
    Z,
    Q,
    Fp(u32),
}

impl Coefficients {
    pub fn is_field(&self) -> bool {
        !matches!(self, Coefficients::Z)
    }

    pub fn prime_field(&self) -> Option<LinalgResult<PrimeField>> {
        match self {
            Coefficients::Fp(p) => Some(PrimeField::new(u64::from(*p))),
            _ => None,
        }
    }

    /// Tag used in JSON records: `Z`, `Q` or `Fp`.
    pub fn tag(&self) -> &'static str {
        match self {
            Coefficients::Z => "Z",
            Coefficients::Q => "Q",
            Coefficients::Fp(_) => "Fp",
        }
    }

    pub fn prime(&self) -> Option<u32> {
        match self {
            Coefficients::Fp(p) => Some(*p),
            _ => None,
        }
    }
}

impl fmt::Display for Coefficients {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Coefficients::Z => f.write_str("Z"),
            Coefficients::Q => f.write_str("Q"),
            Coefficients::Fp(p) => write!(f, "F{p}"),
        }
    }
}

impl std::str::FromStr for Coefficients {
    type Err = String;

    /// Accepts `Z`, `Q`, `F<p>` and `Fp:<p>`.
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "Z" | "z" => Ok(Coefficients::Z),
            "Q" | "q" => Ok(Coefficients::Q),
            _ => {
                let digits = s
                    .strip_prefix("Fp:")
                    .or_else(|| s.strip_prefix('F'))
                    .or_else(|| s.strip_prefix('f'))
                    .ok_or_else(|| format!("unknown coefficients `{s}`"))?;
                let p: u32 = digits.parse().map_err(|_| format!("bad prime in `{s}`"))?;
                PrimeField::new(u64::from(p)).map_err(|e| e.to_string())?;
                Ok(Coefficients::Fp(p))
            }
        }
    }
}

/// Converts an exact rational to an integer when its denominator is one.
pub fn rational_to_int(q: &BigRational) -> Option<Int> {
    q.is_integer().then(|| Int::from(q.to_integer()))
}
