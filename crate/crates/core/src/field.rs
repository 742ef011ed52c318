//! Ground fields: the rationals and prime fields, with exact scalars.

use alloc::string::String;
use core::fmt;

use num_bigint::BigInt;

pub use crate::rational::Rational;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::ToPrimitive;

/// The ground field every object is defined over.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum FieldSpec {
    Rationals,
    /// `F_p`; `p` is prime (checked by [`FieldSpec::prime`]).
    Prime(u64),
}

impl FieldSpec {
    /// Build `F_p`, rejecting composite or out-of-range moduli.
    pub fn prime(p: u64) -> Option<FieldSpec> {
        if is_prime(p) && p < (1 << 31) {
            Some(FieldSpec::Prime(p))
        } else {
            None
        }
    }

    pub fn characteristic(self) -> u64 {
        match self {
            FieldSpec::Rationals => 0,
            FieldSpec::Prime(p) => p,
        }
    }

    pub fn zero(self) -> Scalar {
        match self {
            FieldSpec::Rationals => Scalar::Q(Rational::ZERO),
            FieldSpec::Prime(p) => Scalar::P { v: 0, p },
        }
    }

    pub fn one(self) -> Scalar {
        self.from_i64(1)
    }

    pub fn from_i64(self, n: i64) -> Scalar {
        match self {
            FieldSpec::Rationals => Scalar::Q(Rational::from_i64(n)),
            FieldSpec::Prime(p) => Scalar::P {
                v: n.rem_euclid(p as i64) as u64,
                p,
            },
        }
    }

    /// Map a rational number into the field. Fails over `F_p` when `p` divides the denominator.
    pub fn from_rational(self, q: &BigRational) -> Option<Scalar> {
        match self {
            FieldSpec::Rationals => Some(Scalar::Q(Rational::from_big(q.clone()))),
            FieldSpec::Prime(p) => {
                let pb = BigInt::from(p);
                let num = q.numer().mod_floor(&pb).to_u64()?;
                let den = q.denom().mod_floor(&pb).to_u64()?;
                if den == 0 {
                    return None;
                }
                Some(Scalar::P {
                    v: mul_mod(num, inv_mod(den, p), p),
                    p,
                })
            }
        }
    }

    /// Enumerate all field elements (prime fields only).
    pub fn elements(self) -> Option<impl Iterator<Item = Scalar>> {
        match self {
            FieldSpec::Rationals => None,
            FieldSpec::Prime(p) => Some((0..p).map(move |v| Scalar::P { v, p })),
        }
    }

    pub fn name(self) -> String {
        match self {
            FieldSpec::Rationals => String::from("Q"),
            FieldSpec::Prime(p) => alloc::format!("F{p}"),
        }
    }
}

impl fmt::Display for FieldSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.name())
    }
}

pub(crate) fn is_prime(p: u64) -> bool {
    if p < 2 {
        return false;
    }
    let mut d = 2;
    while d * d <= p {
        if p % d == 0 {
            return false;
        }
        d += 1;
    }
    true
}

fn mul_mod(a: u64, b: u64, p: u64) -> u64 {
    ((a as u128 * b as u128) % p as u128) as u64
}

fn inv_mod(a: u64, p: u64) -> u64 {
    // Fermat; p prime and a != 0 mod p.
    let mut base = a % p;
    let mut e = p - 2;
    let mut acc = 1;
    while e > 0 {
        if e & 1 == 1 {
            acc = mul_mod(acc, base, p);
        }
        base = mul_mod(base, base, p);
        e >>= 1;
    }
    acc
}

/// An exact field element. Mixing elements of different fields is a contract violation.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub enum Scalar {
    Q(Rational),
    P { v: u64, p: u64 },
}

impl Scalar {
    pub fn field(&self) -> FieldSpec {
        match self {
            Scalar::Q(_) => FieldSpec::Rationals,
            Scalar::P { p, .. } => FieldSpec::Prime(*p),
        }
    }

    pub fn is_zero(&self) -> bool {
        match self {
            Scalar::Q(q) => q.is_zero(),
            Scalar::P { v, .. } => *v == 0,
        }
    }

    pub fn is_one(&self) -> bool {
        match self {
            Scalar::Q(q) => q.is_one(),
            Scalar::P { v, .. } => *v == 1,
        }
    }

    pub fn add(&self, o: &Scalar) -> Scalar {
        match (self, o) {
            (Scalar::Q(a), Scalar::Q(b)) => Scalar::Q(a.add(b)),
            (Scalar::P { v: a, p }, Scalar::P { v: b, p: q }) if p == q => Scalar::P {
                v: (a + b) % p,
                p: *p,
            },
            _ => panic!("scalar field mismatch"),
        }
    }

    pub fn sub(&self, o: &Scalar) -> Scalar {
        self.add(&o.neg())
    }

    pub fn neg(&self) -> Scalar {
        match self {
            Scalar::Q(a) => Scalar::Q(a.neg()),
            Scalar::P { v, p } => Scalar::P {
                v: (p - v) % p,
                p: *p,
            },
        }
    }

    pub fn mul(&self, o: &Scalar) -> Scalar {
        match (self, o) {
            (Scalar::Q(a), Scalar::Q(b)) => Scalar::Q(a.mul(b)),
            (Scalar::P { v: a, p }, Scalar::P { v: b, p: q }) if p == q => Scalar::P {
                v: mul_mod(*a, *b, *p),
                p: *p,
            },
            _ => panic!("scalar field mismatch"),
        }
    }

    /// Multiplicative inverse; panics on zero.
    pub fn inv(&self) -> Scalar {
        assert!(!self.is_zero(), "inverse of zero");
        match self {
            Scalar::Q(a) => Scalar::Q(a.recip()),
            Scalar::P { v, p } => Scalar::P {
                v: inv_mod(*v, *p),
                p: *p,
            },
        }
    }

    pub fn div(&self, o: &Scalar) -> Scalar {
        self.mul(&o.inv())
    }

    /// `self += a * b`, the inner loop of every elimination.
    pub fn add_mul(&mut self, a: &Scalar, b: &Scalar) {
        match (&mut *self, a, b) {
            (Scalar::P { v, p }, Scalar::P { v: x, .. }, Scalar::P { v: y, .. }) => {
                *v = ((*v as u128 + *x as u128 * *y as u128) % *p as u128) as u64;
            }
            _ => *self = self.add(&a.mul(b)),
        }
    }

    /// Rational view used when serializing; prime-field elements map to `0..p`.
    pub fn to_rational(&self) -> BigRational {
        match self {
            Scalar::Q(q) => q.to_big(),
            Scalar::P { v, .. } => BigRational::from_integer(BigInt::from(*v)),
        }
    }

    pub fn is_negative(&self) -> bool {
        match self {
            Scalar::Q(q) => q.is_negative(),
            Scalar::P { .. } => false,
        }
    }
}

impl fmt::Display for Scalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Scalar::Q(q) => {
                if q.is_integer() {
                    write!(f, "{}", q.numer())
                } else {
                    write!(f, "{}/{}", q.numer(), q.denom())
                }
            }
            Scalar::P { v, .. } => write!(f, "{v}"),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn prime_field_arithmetic() {
        let f = FieldSpec::prime(5).unwrap();
        let a = f.from_i64(3);
        let b = f.from_i64(4);
        assert_eq!(a.add(&b), f.from_i64(2));
        assert_eq!(a.mul(&b), f.from_i64(2));
        assert_eq!(a.mul(&a.inv()), f.one());
        assert_eq!(f.from_i64(-1), f.from_i64(4));
        assert!(FieldSpec::prime(6).is_none());
    }

    #[test]
    fn rational_reduction_mod_p() {
        let f = FieldSpec::Prime(7);
        let half = BigRational::new(BigInt::from(1), BigInt::from(2));
        assert_eq!(f.from_rational(&half), Some(f.from_i64(4)));
        let seventh = BigRational::new(BigInt::from(1), BigInt::from(7));
        assert_eq!(f.from_rational(&seventh), None);
    }
}
