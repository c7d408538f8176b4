//! Exact scalar domains.
//!
//! A [`Ring`] is a context object: elements carry no information about the
//! domain they live in, so that `u64` can serve as a prime-field element for
//! any modulus chosen at run time. Operations between matrices check that
//! their contexts agree.

use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

pub trait Ring: Clone + PartialEq + fmt::Debug + Send + Sync {
    type Elem: Clone + PartialEq + fmt::Debug + Send + Sync;

    /// Short name used in error messages and serialized output, e.g. `GF(5)`.
    fn name(&self) -> String;

    fn zero(&self) -> Self::Elem;
    fn one(&self) -> Self::Elem;
    fn from_int(&self, v: &BigInt) -> Self::Elem;

    fn from_i64(&self, v: i64) -> Self::Elem {
        self.from_int(&BigInt::from(v))
    }

    fn add(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem;
    fn neg(&self, a: &Self::Elem) -> Self::Elem;
    fn mul(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem;
    fn is_zero(&self, a: &Self::Elem) -> bool;

    fn sub(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem {
        self.add(a, &self.neg(b))
    }

    fn add_assign(&self, a: &mut Self::Elem, b: &Self::Elem) {
        *a = self.add(a, b);
    }

    fn is_one(&self, a: &Self::Elem) -> bool {
        *a == self.one()
    }

    fn pow(&self, a: &Self::Elem, mut e: u32) -> Self::Elem {
        let mut base = a.clone();
        let mut acc = self.one();
        while e > 0 {
            if e & 1 == 1 {
                acc = self.mul(&acc, &base);
            }
            base = self.mul(&base, &base);
            e >>= 1;
        }
        acc
    }

    fn to_scalar(&self, a: &Self::Elem) -> Scalar;
    fn from_scalar(&self, s: &Scalar) -> Result<Self::Elem>;
}

pub trait Field: Ring {
    fn inv(&self, a: &Self::Elem) -> Option<Self::Elem>;

    /// Characteristic of the field (0 for ℚ).
    fn characteristic(&self) -> u64;
}

/// A scalar detached from its ring, used for serialization and display.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "domain")]
pub enum Scalar {
    Integer {
        #[serde(with = "super::decimal")]
        value: BigInt,
    },
    Rational {
        #[serde(with = "super::decimal")]
        numerator: BigInt,
        #[serde(with = "super::decimal")]
        denominator: BigInt,
    },
    Modular {
        value: u64,
        modulus: u64,
    },
}

impl Scalar {
    /// `(numerator, denominator-or-modulus)` as stored in vector records.
    pub fn record_parts(&self) -> (BigInt, BigInt) {
        match self {
            Scalar::Integer { value } => (value.clone(), BigInt::one()),
            Scalar::Rational {
                numerator,
                denominator,
            } => (numerator.clone(), denominator.clone()),
            Scalar::Modular { value, modulus } => (BigInt::from(*value), BigInt::from(*modulus)),
        }
    }
}

impl fmt::Display for Scalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Scalar::Integer { value } => write!(f, "{value}"),
            Scalar::Rational {
                numerator,
                denominator,
            } if denominator.is_one() => {
                write!(f, "{numerator}")
            }
            Scalar::Rational {
                numerator,
                denominator,
            } => write!(f, "{numerator}/{denominator}"),
            Scalar::Modular { value, .. } => write!(f, "{value}"),
        }
    }
}

/// The integers ℤ with arbitrary precision.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub struct Integers;

impl Ring for Integers {
    type Elem = BigInt;

    fn name(&self) -> String {
        "Z".into()
    }
    fn zero(&self) -> BigInt {
        BigInt::zero()
    }
    fn one(&self) -> BigInt {
        BigInt::one()
    }
    fn from_int(&self, v: &BigInt) -> BigInt {
        v.clone()
    }
    fn from_i64(&self, v: i64) -> BigInt {
        BigInt::from(v)
    }
    fn add(&self, a: &BigInt, b: &BigInt) -> BigInt {
        a + b
    }
    fn neg(&self, a: &BigInt) -> BigInt {
        -a
    }
    fn mul(&self, a: &BigInt, b: &BigInt) -> BigInt {
        a * b
    }
    fn sub(&self, a: &BigInt, b: &BigInt) -> BigInt {
        a - b
    }
    fn add_assign(&self, a: &mut BigInt, b: &BigInt) {
        *a += b;
    }
    fn is_zero(&self, a: &BigInt) -> bool {
        a.is_zero()
    }
    fn to_scalar(&self, a: &BigInt) -> Scalar {
        Scalar::Integer { value: a.clone() }
    }
    fn from_scalar(&self, s: &Scalar) -> Result<BigInt> {
        match s {
            Scalar::Integer { value } => Ok(value.clone()),
            Scalar::Rational {
                numerator,
                denominator,
            } if denominator.is_one() => Ok(numerator.clone()),
            other => Err(Error::DomainMismatch(self.name(), format!("{other:?}"))),
        }
    }
}

/// The rationals ℚ, stored as reduced fractions with positive denominator.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub struct Rationals;

impl Ring for Rationals {
    type Elem = BigRational;

    fn name(&self) -> String {
        "Q".into()
    }
    fn zero(&self) -> BigRational {
        BigRational::zero()
    }
    fn one(&self) -> BigRational {
        BigRational::one()
    }
    fn from_int(&self, v: &BigInt) -> BigRational {
        BigRational::from_integer(v.clone())
    }
    fn add(&self, a: &BigRational, b: &BigRational) -> BigRational {
        a + b
    }
    fn neg(&self, a: &BigRational) -> BigRational {
        -a
    }
    fn mul(&self, a: &BigRational, b: &BigRational) -> BigRational {
        a * b
    }
    fn sub(&self, a: &BigRational, b: &BigRational) -> BigRational {
        a - b
    }
    fn is_zero(&self, a: &BigRational) -> bool {
        a.is_zero()
    }
    fn to_scalar(&self, a: &BigRational) -> Scalar {
        Scalar::Rational {
            numerator: a.numer().clone(),
            denominator: a.denom().clone(),
        }
    }
    fn from_scalar(&self, s: &Scalar) -> Result<BigRational> {
        match s {
            Scalar::Integer { value } => Ok(BigRational::from_integer(value.clone())),
            Scalar::Rational {
                numerator,
                denominator,
            } => {
                if denominator.is_zero() {
                    return Err(Error::Parse("zero denominator".into()));
                }
                Ok(BigRational::new(numerator.clone(), denominator.clone()))
            }
            other => Err(Error::DomainMismatch(self.name(), format!("{other:?}"))),
        }
    }
}

impl Field for Rationals {
    fn inv(&self, a: &BigRational) -> Option<BigRational> {
        if a.is_zero() {
            None
        } else {
            Some(a.recip())
        }
    }
    fn characteristic(&self) -> u64 {
        0
    }
}

/// The prime field GF(p), elements stored as canonical representatives in `0..p`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct PrimeField {
    p: u64,
}

pub fn is_prime(p: u64) -> bool {
    if p < 2 {
        return false;
    }
    let mut d = 2u64;
    while d * d <= p {
        if p % d == 0 {
            return false;
        }
        d += 1;
    }
    true
}

impl PrimeField {
    /// Accepts every prime, including 2; theorem-backed operations perform
    /// their own characteristic check.
    pub fn new(p: u64) -> Result<Self> {
        if !is_prime(p) || p >= (1 << 32) {
            return Err(Error::NotPrime(p));
        }
        Ok(PrimeField { p })
    }

    pub fn modulus(&self) -> u64 {
        self.p
    }

    pub fn reduce_i64(&self, v: i64) -> u64 {
        v.rem_euclid(self.p as i64) as u64
    }

    /// Refuses characteristic 2 for operations that rely on `char F ≠ 2`.
    pub fn require_odd(&self) -> Result<()> {
        if self.p == 2 {
            Err(Error::CharacteristicTwo)
        } else {
            Ok(())
        }
    }
}

impl Ring for PrimeField {
    type Elem = u64;

    fn name(&self) -> String {
        format!("GF({})", self.p)
    }
    fn zero(&self) -> u64 {
        0
    }
    fn one(&self) -> u64 {
        1
    }
    fn from_int(&self, v: &BigInt) -> u64 {
        let p = BigInt::from(self.p);
        v.mod_floor(&p).to_u64().expect("residue fits in u64")
    }
    fn from_i64(&self, v: i64) -> u64 {
        self.reduce_i64(v)
    }
    fn add(&self, a: &u64, b: &u64) -> u64 {
        let s = a + b;
        if s >= self.p {
            s - self.p
        } else {
            s
        }
    }
    fn neg(&self, a: &u64) -> u64 {
        if *a == 0 {
            0
        } else {
            self.p - a
        }
    }
    fn mul(&self, a: &u64, b: &u64) -> u64 {
        ((*a as u128 * *b as u128) % self.p as u128) as u64
    }
    fn sub(&self, a: &u64, b: &u64) -> u64 {
        if a >= b {
            a - b
        } else {
            self.p - (b - a)
        }
    }
    fn is_zero(&self, a: &u64) -> bool {
        *a == 0
    }
    fn to_scalar(&self, a: &u64) -> Scalar {
        Scalar::Modular {
            value: *a,
            modulus: self.p,
        }
    }
    fn from_scalar(&self, s: &Scalar) -> Result<u64> {
        match s {
            Scalar::Modular { value, modulus } if *modulus == self.p => Ok(value % self.p),
            Scalar::Integer { value } => Ok(self.from_int(value)),
            other => Err(Error::DomainMismatch(self.name(), format!("{other:?}"))),
        }
    }
}

impl Field for PrimeField {
    fn inv(&self, a: &u64) -> Option<u64> {
        if *a == 0 {
            return None;
        }
        // Fermat: a^(p-2)
        let mut base = *a;
        let mut e = self.p - 2;
        let mut acc = 1u64;
        while e > 0 {
            if e & 1 == 1 {
                acc = self.mul(&acc, &base);
            }
            base = self.mul(&base, &base);
            e >>= 1;
        }
        Some(acc)
    }
    fn characteristic(&self) -> u64 {
        self.p
    }
}

/// p-adic valuation of a nonzero integer; `None` for zero.
pub fn p_adic_valuation(v: &BigInt, p: u64) -> Option<u32> {
    if v.is_zero() {
        return None;
    }
    let p = BigInt::from(p);
    let mut v = v.abs();
    let mut k = 0;
    while (&v % &p).is_zero() {
        v /= &p;
        k += 1;
    }
    Some(k)
}
