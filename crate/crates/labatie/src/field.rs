//! Exact scalar arithmetic over Q and over prime fields GF(p).
//!
//! Every coefficient in the crate is a [`FieldElement`]: a fully reduced
//! arbitrary-precision fraction, or a canonical residue in `[0, p)`.
//! There is no floating point anywhere.

use std::cmp::Ordering;
use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::error::Error;

/// Exclusive upper bound on prime-field moduli; keeps residue products in u64.
pub const MAX_MODULUS: u64 = 1 << 31;

/// The ground field: the rationals, or GF(p) for a prime `p < 2^31`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum FieldSpec {
    Rationals,
    PrimeField { modulus: u64 },
}

impl FieldSpec {
    pub fn rationals() -> Self {
        FieldSpec::Rationals
    }

    /// GF(p). Rejects `p` outside `[2, 2^31)` and composite `p` (trial division).
    pub fn prime_field(modulus: u64) -> Result<Self, Error> {
        if modulus < 2 || modulus >= MAX_MODULUS || !is_prime(modulus) {
            return Err(Error::InvalidModulus { modulus });
        }
        Ok(FieldSpec::PrimeField { modulus })
    }

    pub fn modulus(&self) -> Option<u64> {
        match self {
            FieldSpec::Rationals => None,
            FieldSpec::PrimeField { modulus } => Some(*modulus),
        }
    }

    pub fn zero(&self) -> FieldElement {
        self.integer(0)
    }

    pub fn one(&self) -> FieldElement {
        self.integer(1)
    }

    pub fn integer(&self, n: i64) -> FieldElement {
        match self {
            FieldSpec::Rationals => FieldElement {
                scalar: Scalar::Rational(BigRational::from_integer(BigInt::from(n))),
                spec: *self,
            },
            FieldSpec::PrimeField { modulus } => {
                let p = *modulus as i128;
                let r = ((n as i128 % p) + p) % p;
                FieldElement {
                    scalar: Scalar::Residue(r as u64),
                    spec: *self,
                }
            }
        }
    }

    /// `num / den`. Over GF(p) this is `num * den^-1`; panics when `den = 0`
    /// or `p | den`.
    pub fn ratio(&self, num: i64, den: i64) -> FieldElement {
        assert!(den != 0, "zero denominator");
        match self {
            FieldSpec::Rationals => FieldElement {
                scalar: Scalar::Rational(BigRational::new(BigInt::from(num), BigInt::from(den))),
                spec: *self,
            },
            FieldSpec::PrimeField { .. } => {
                let d = self.integer(den);
                assert!(!d.is_zero(), "denominator divisible by the modulus");
                &self.integer(num) * &d.inv()
            }
        }
    }

    /// Canonical element for an arbitrary-precision integer.
    pub fn from_bigint(&self, n: &BigInt) -> FieldElement {
        match self {
            FieldSpec::Rationals => FieldElement {
                scalar: Scalar::Rational(BigRational::from_integer(n.clone())),
                spec: *self,
            },
            FieldSpec::PrimeField { modulus } => {
                let p = BigInt::from(*modulus);
                let r = n.mod_floor(&p).to_u64().expect("residue fits in u64");
                FieldElement {
                    scalar: Scalar::Residue(r),
                    spec: *self,
                }
            }
        }
    }

    /// All field elements in residue order. Prime fields only.
    pub fn elements(&self) -> Result<impl Iterator<Item = FieldElement> + '_, Error> {
        match self {
            FieldSpec::Rationals => Err(Error::FieldMismatch),
            FieldSpec::PrimeField { modulus } => {
                let spec = *self;
                Ok((0..*modulus).map(move |r| FieldElement {
                    scalar: Scalar::Residue(r),
                    spec,
                }))
            }
        }
    }
}

fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    if n % 2 == 0 {
        return n == 2;
    }
    let mut d = 3u64;
    while d * d <= n {
        if n % d == 0 {
            return false;
        }
        d += 2;
    }
    true
}

#[derive(Debug, Clone, PartialEq, Eq)]
enum Scalar {
    Rational(BigRational),
    Residue(u64),
}

/// An exact element of the ground field.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FieldElement {
    scalar: Scalar,
    spec: FieldSpec,
}

impl FieldElement {
    pub fn from_rational(value: BigRational, spec: FieldSpec) -> Self {
        match spec {
            FieldSpec::Rationals => FieldElement {
                scalar: Scalar::Rational(value),
                spec,
            },
            FieldSpec::PrimeField { .. } => {
                let num = spec.from_bigint(value.numer());
                let den = spec.from_bigint(value.denom());
                assert!(!den.is_zero(), "denominator divisible by the modulus");
                &num * &den.inv()
            }
        }
    }

    pub fn spec(&self) -> FieldSpec {
        self.spec
    }

    pub fn is_zero(&self) -> bool {
        match &self.scalar {
            Scalar::Rational(r) => r.is_zero(),
            Scalar::Residue(r) => *r == 0,
        }
    }

    pub fn is_one(&self) -> bool {
        match &self.scalar {
            Scalar::Rational(r) => r.is_one(),
            Scalar::Residue(r) => *r == 1,
        }
    }

    /// Multiplicative inverse. Panics on zero: callers guard.
    pub fn inv(&self) -> FieldElement {
        match &self.scalar {
            Scalar::Rational(r) => {
                assert!(!r.is_zero(), "inverse of zero");
                FieldElement {
                    scalar: Scalar::Rational(r.recip()),
                    spec: self.spec,
                }
            }
            Scalar::Residue(r) => {
                assert!(*r != 0, "inverse of zero");
                let p = self.spec.modulus().unwrap();
                FieldElement {
                    scalar: Scalar::Residue(inv_mod(*r, p)),
                    spec: self.spec,
                }
            }
        }
    }

    pub fn div(&self, other: &FieldElement) -> FieldElement {
        self * &other.inv()
    }

    pub fn pow(&self, e: u32) -> FieldElement {
        let mut acc = self.spec.one();
        for _ in 0..e {
            acc = &acc * self;
        }
        acc
    }

    /// True only for negative rationals; residues are canonical, never negative.
    pub fn is_negative(&self) -> bool {
        match &self.scalar {
            Scalar::Rational(r) => r.is_negative(),
            Scalar::Residue(_) => false,
        }
    }

    pub fn abs(&self) -> FieldElement {
        match &self.scalar {
            Scalar::Rational(r) => FieldElement {
                scalar: Scalar::Rational(r.abs()),
                spec: self.spec,
            },
            Scalar::Residue(_) => self.clone(),
        }
    }

    pub fn as_rational(&self) -> Option<&BigRational> {
        match &self.scalar {
            Scalar::Rational(r) => Some(r),
            Scalar::Residue(_) => None,
        }
    }

    pub fn as_residue(&self) -> Option<u64> {
        match &self.scalar {
            Scalar::Rational(_) => None,
            Scalar::Residue(r) => Some(*r),
        }
    }

    fn check_spec(&self, other: &FieldElement) {
        assert_eq!(
            self.spec, other.spec,
            "arithmetic between elements of different fields is rejected"
        );
    }
}

fn inv_mod(a: u64, p: u64) -> u64 {
    let (mut t, mut new_t) = (0i128, 1i128);
    let (mut r, mut new_r) = (p as i128, a as i128);
    while new_r != 0 {
        let q = r / new_r;
        (t, new_t) = (new_t, t - q * new_t);
        (r, new_r) = (new_r, r - q * new_r);
    }
    debug_assert_eq!(r, 1, "modulus must be prime");
    (((t % p as i128) + p as i128) % p as i128) as u64
}

impl std::ops::Add for &FieldElement {
    type Output = FieldElement;
    fn add(self, rhs: &FieldElement) -> FieldElement {
        self.check_spec(rhs);
        match (&self.scalar, &rhs.scalar) {
            (Scalar::Rational(a), Scalar::Rational(b)) => FieldElement {
                scalar: Scalar::Rational(a + b),
                spec: self.spec,
            },
            (Scalar::Residue(a), Scalar::Residue(b)) => {
                let p = self.spec.modulus().unwrap();
                FieldElement {
                    scalar: Scalar::Residue((a + b) % p),
                    spec: self.spec,
                }
            }
            _ => unreachable!("spec equality implies matching scalar kinds"),
        }
    }
}

impl std::ops::Sub for &FieldElement {
    type Output = FieldElement;
    fn sub(self, rhs: &FieldElement) -> FieldElement {
        self.check_spec(rhs);
        match (&self.scalar, &rhs.scalar) {
            (Scalar::Rational(a), Scalar::Rational(b)) => FieldElement {
                scalar: Scalar::Rational(a - b),
                spec: self.spec,
            },
            (Scalar::Residue(a), Scalar::Residue(b)) => {
                let p = self.spec.modulus().unwrap();
                FieldElement {
                    scalar: Scalar::Residue((a + p - b) % p),
                    spec: self.spec,
                }
            }
            _ => unreachable!("spec equality implies matching scalar kinds"),
        }
    }
}

impl std::ops::Mul for &FieldElement {
    type Output = FieldElement;
    fn mul(self, rhs: &FieldElement) -> FieldElement {
        self.check_spec(rhs);
        match (&self.scalar, &rhs.scalar) {
            (Scalar::Rational(a), Scalar::Rational(b)) => FieldElement {
                scalar: Scalar::Rational(a * b),
                spec: self.spec,
            },
            (Scalar::Residue(a), Scalar::Residue(b)) => {
                let p = self.spec.modulus().unwrap();
                FieldElement {
                    scalar: Scalar::Residue(a * b % p),
                    spec: self.spec,
                }
            }
            _ => unreachable!("spec equality implies matching scalar kinds"),
        }
    }
}

impl std::ops::Neg for &FieldElement {
    type Output = FieldElement;
    fn neg(self) -> FieldElement {
        match &self.scalar {
            Scalar::Rational(a) => FieldElement {
                scalar: Scalar::Rational(-a),
                spec: self.spec,
            },
            Scalar::Residue(a) => {
                let p = self.spec.modulus().unwrap();
                FieldElement {
                    scalar: Scalar::Residue((p - a) % p),
                    spec: self.spec,
                }
            }
        }
    }
}

impl PartialOrd for FieldElement {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

/// Total order within a single field: rational order over Q, residue order
/// over GF(p). Used for deterministic solution listings.
impl Ord for FieldElement {
    fn cmp(&self, other: &Self) -> Ordering {
        self.check_spec(other);
        match (&self.scalar, &other.scalar) {
            (Scalar::Rational(a), Scalar::Rational(b)) => a.cmp(b),
            (Scalar::Residue(a), Scalar::Residue(b)) => a.cmp(b),
            _ => unreachable!("spec equality implies matching scalar kinds"),
        }
    }
}

impl fmt::Display for FieldElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match &self.scalar {
            Scalar::Rational(r) => write!(f, "{}", r),
            Scalar::Residue(r) => write!(f, "{}", r),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn prime_field_construction_rejects_composites() {
        assert!(FieldSpec::prime_field(7).is_ok());
        assert_eq!(
            FieldSpec::prime_field(9),
            Err(Error::InvalidModulus { modulus: 9 })
        );
        assert_eq!(
            FieldSpec::prime_field(1),
            Err(Error::InvalidModulus { modulus: 1 })
        );
        assert_eq!(
            FieldSpec::prime_field(1 << 31),
            Err(Error::InvalidModulus { modulus: 1 << 31 })
        );
    }

    #[test]
    fn rational_arithmetic_is_reduced() {
        let q = FieldSpec::rationals();
        let half = q.ratio(1, 2);
        let third = q.ratio(1, 3);
        let sum = &half + &third;
        assert_eq!(sum, q.ratio(5, 6));
        assert_eq!(&half * &q.ratio(2, 1), q.one());
        assert_eq!(sum.as_rational().unwrap().to_string(), "5/6");
    }

    #[test]
    fn residues_are_canonical() {
        let f = FieldSpec::prime_field(7).unwrap();
        assert_eq!(f.integer(-1), f.integer(6));
        assert_eq!((&f.integer(3) * &f.integer(5)).as_residue(), Some(1));
        assert_eq!(f.integer(3).inv(), f.integer(5));
        assert_eq!((-&f.integer(0)).as_residue(), Some(0));
    }

    #[test]
    #[should_panic(expected = "different fields")]
    fn cross_field_arithmetic_is_rejected() {
        let a = FieldSpec::rationals().one();
        let b = FieldSpec::prime_field(5).unwrap().one();
        let _ = &a + &b;
    }

    #[test]
    fn pow_and_ratio_over_prime_field() {
        let f = FieldSpec::prime_field(5).unwrap();
        assert_eq!(f.integer(2).pow(4), f.integer(1));
        // 1/2 = 3 mod 5
        assert_eq!(f.ratio(1, 2), f.integer(3));
    }
}
