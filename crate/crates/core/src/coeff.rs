//! Exact scalars: arbitrary-precision rationals and prime fields.
//!
//! A [`Coeff`] always carries enough information to know which field it
//! lives in, so mixing a rational with a residue (or residues for two
//! different primes) is caught at the point of arithmetic. Values are kept
//! in canonical form at every step, which makes structural equality the
//! same as field equality.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};

/// The coefficient field of the free algebra.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Field {
    Rationals,
    Prime(u64),
}

impl Field {
    /// Builds the prime field `F_p`, checking primality by trial division.
    pub fn prime(modulus: u64) -> Result<Self> {
        if is_prime(modulus) {
            Ok(Field::Prime(modulus))
        } else {
            Err(Error::NotPrime(modulus))
        }
    }

    pub fn zero(&self) -> Coeff {
        self.from_i64(0)
    }

    pub fn one(&self) -> Coeff {
        self.from_i64(1)
    }

    pub fn from_i64(&self, n: i64) -> Coeff {
        match *self {
            Field::Rationals => Coeff::Rational(BigRational::from_integer(BigInt::from(n))),
            Field::Prime(p) => Coeff::Residue {
                value: (n as i128).rem_euclid(p as i128) as u64,
                modulus: p,
            },
        }
    }

    /// Maps an integer of any size into the field.
    pub fn from_bigint(&self, n: &BigInt) -> Coeff {
        match *self {
            Field::Rationals => Coeff::Rational(BigRational::from_integer(n.clone())),
            Field::Prime(p) => {
                let r = n.mod_floor_u64(p);
                Coeff::Residue { value: r, modulus: p }
            }
        }
    }

    /// Maps `num / den` into the field; fails when `den` vanishes there.
    pub fn from_ratio(&self, num: &BigInt, den: &BigInt) -> Result<Coeff> {
        let den = self.from_bigint(den);
        if den.is_zero() {
            return Err(Error::ZeroInverse);
        }
        Ok(self.from_bigint(num).mul(&den.inv()?))
    }

    /// The field a coefficient belongs to.
    pub fn of(c: &Coeff) -> Field {
        match c {
            Coeff::Rational(_) => Field::Rationals,
            Coeff::Residue { modulus, .. } => Field::Prime(*modulus),
        }
    }
}

impl fmt::Display for Field {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Field::Rationals => write!(f, "Q"),
            Field::Prime(p) => write!(f, "F {p}"),
        }
    }
}

trait ModFloor {
    fn mod_floor_u64(&self, p: u64) -> u64;
}

impl ModFloor for BigInt {
    fn mod_floor_u64(&self, p: u64) -> u64 {
        use num_integer::Integer;
        use num_traits::ToPrimitive;
        self.mod_floor(&BigInt::from(p))
            .to_u64()
            .expect("residue fits in u64")
    }
}

fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    let mut d = 2u64;
    while d.saturating_mul(d) <= n {
        if n.is_multiple_of(d) {
            return false;
        }
        d += 1;
    }
    true
}

/// A field element in canonical form.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Coeff {
    Rational(BigRational),
    Residue { value: u64, modulus: u64 },
}

impl Coeff {
    pub fn field(&self) -> Field {
        Field::of(self)
    }

    pub fn is_zero(&self) -> bool {
        match self {
            Coeff::Rational(q) => q.is_zero(),
            Coeff::Residue { value, .. } => *value == 0,
        }
    }

    pub fn is_one(&self) -> bool {
        match self {
            Coeff::Rational(q) => q.is_one(),
            Coeff::Residue { value, .. } => *value == 1,
        }
    }

    fn same_field(&self, other: &Coeff) -> Result<()> {
        if self.field() == other.field() {
            Ok(())
        } else {
            Err(Error::FieldMismatch {
                left: self.field().to_string(),
                right: other.field().to_string(),
            })
        }
    }

    pub fn checked_add(&self, other: &Coeff) -> Result<Coeff> {
        self.same_field(other)?;
        Ok(self.add(other))
    }

    pub fn checked_sub(&self, other: &Coeff) -> Result<Coeff> {
        self.same_field(other)?;
        Ok(self.sub(other))
    }

    pub fn checked_mul(&self, other: &Coeff) -> Result<Coeff> {
        self.same_field(other)?;
        Ok(self.mul(other))
    }

    /// Multiplicative inverse; zero has none.
    pub fn inv(&self) -> Result<Coeff> {
        if self.is_zero() {
            return Err(Error::ZeroInverse);
        }
        Ok(match self {
            Coeff::Rational(q) => Coeff::Rational(q.recip()),
            Coeff::Residue { value, modulus } => Coeff::Residue {
                value: inverse_mod(*value, *modulus),
                modulus: *modulus,
            },
        })
    }

    // The unchecked operations below panic on a field mismatch. They are
    // used inside polynomials, which guarantee a single field per value.

    pub fn add(&self, other: &Coeff) -> Coeff {
        match (self, other) {
            (Coeff::Rational(a), Coeff::Rational(b)) => Coeff::Rational(a + b),
            (Coeff::Residue { value: a, modulus: p }, Coeff::Residue { value: b, modulus: q }) if p == q => {
                Coeff::Residue {
                    value: ((*a as u128 + *b as u128) % *p as u128) as u64,
                    modulus: *p,
                }
            }
            _ => panic!("coefficient field mismatch: {self:?} + {other:?}"),
        }
    }

    pub fn neg(&self) -> Coeff {
        match self {
            Coeff::Rational(a) => Coeff::Rational(-a),
            Coeff::Residue { value, modulus } => Coeff::Residue {
                value: (modulus - value) % modulus,
                modulus: *modulus,
            },
        }
    }

    pub fn sub(&self, other: &Coeff) -> Coeff {
        self.add(&other.neg())
    }

    pub fn mul(&self, other: &Coeff) -> Coeff {
        match (self, other) {
            (Coeff::Rational(a), Coeff::Rational(b)) => Coeff::Rational(a * b),
            (Coeff::Residue { value: a, modulus: p }, Coeff::Residue { value: b, modulus: q }) if p == q => {
                Coeff::Residue {
                    value: ((*a as u128 * *b as u128) % *p as u128) as u64,
                    modulus: *p,
                }
            }
            _ => panic!("coefficient field mismatch: {self:?} * {other:?}"),
        }
    }

    /// True when the value prints with a leading minus sign.
    pub(crate) fn is_negative_literal(&self) -> bool {
        match self {
            Coeff::Rational(q) => q.is_negative(),
            Coeff::Residue { .. } => false,
        }
    }
}

// Extended Euclid on (value, p); p is prime and value is nonzero.
fn inverse_mod(value: u64, p: u64) -> u64 {
    let (mut r0, mut r1) = (p as i128, value as i128);
    let (mut t0, mut t1) = (0i128, 1i128);
    while r1 != 0 {
        let q = r0 / r1;
        (r0, r1) = (r1, r0 - q * r1);
        (t0, t1) = (t1, t0 - q * t1);
    }
    debug_assert_eq!(r0, 1);
    t0.rem_euclid(p as i128) as u64
}

impl fmt::Display for Coeff {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Coeff::Rational(q) => {
                if q.denom().is_one() {
                    write!(f, "{}", q.numer())
                } else {
                    write!(f, "{}/{}", q.numer(), q.denom())
                }
            }
            Coeff::Residue { value, .. } => write!(f, "{value}"),
        }
    }
}

impl Add for &Coeff {
    type Output = Coeff;
    fn add(self, rhs: &Coeff) -> Coeff {
        Coeff::add(self, rhs)
    }
}

impl Sub for &Coeff {
    type Output = Coeff;
    fn sub(self, rhs: &Coeff) -> Coeff {
        Coeff::sub(self, rhs)
    }
}

impl Mul for &Coeff {
    type Output = Coeff;
    fn mul(self, rhs: &Coeff) -> Coeff {
        Coeff::mul(self, rhs)
    }
}

impl Neg for &Coeff {
    type Output = Coeff;
    fn neg(self) -> Coeff {
        Coeff::neg(self)
    }
}
