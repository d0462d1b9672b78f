//! Exact scalars: arbitrary-precision rationals in characteristic zero and
//! machine-word residues modulo a prime `p < 2^31` otherwise.

use core::fmt;
use core::ops::{Add, AddAssign, Mul, MulAssign, Neg, Sub, SubAssign};

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

/// Largest modulus accepted for prime fields.
pub const MAX_PRIME: u32 = (1 << 31) - 1;

/// Characteristic of the coefficient field: `0` for the rationals, otherwise a prime.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Characteristic(u32);

impl Characteristic {
    pub const ZERO: Characteristic = Characteristic(0);

    /// Returns `None` unless `p` is zero or a prime below `2^31`.
    pub fn new(p: u32) -> Option<Self> {
        if p == 0 || (p <= MAX_PRIME && is_prime(p)) {
            Some(Characteristic(p))
        } else {
            None
        }
    }

    pub fn value(self) -> u32 {
        self.0
    }

    pub fn is_zero(self) -> bool {
        self.0 == 0
    }

    /// Number of elements of the prime field, `None` for the rationals.
    pub fn field_size(self) -> Option<u64> {
        (self.0 != 0).then_some(self.0 as u64)
    }
}

impl fmt::Display for Characteristic {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

pub(crate) fn is_prime(n: u32) -> bool {
    if n < 2 {
        return false;
    }
    if n.is_multiple_of(2) {
        return n == 2;
    }
    let mut d = 3u32;
    while (d as u64) * (d as u64) <= n as u64 {
        if n.is_multiple_of(d) {
            return false;
        }
        d += 2;
    }
    true
}

/// An element of `Q` or of `F_p`.
///
/// Mixing scalars of different characteristic is a logic error and panics.
#[derive(Clone, PartialEq, Eq, Hash)]
pub enum Scalar {
    Rational(BigRational),
    Modular { value: u32, modulus: u32 },
}

impl Scalar {
    pub fn zero(ch: Characteristic) -> Self {
        Self::from_i64(0, ch)
    }

    pub fn one(ch: Characteristic) -> Self {
        Self::from_i64(1, ch)
    }

    pub fn from_i64(v: i64, ch: Characteristic) -> Self {
        match ch.0 {
            0 => Scalar::Rational(BigRational::from_integer(BigInt::from(v))),
            p => Scalar::Modular {
                value: v.rem_euclid(p as i64) as u32,
                modulus: p,
            },
        }
    }

    pub fn from_bigint(v: &BigInt, ch: Characteristic) -> Self {
        match ch.0 {
            0 => Scalar::Rational(BigRational::from_integer(v.clone())),
            p => {
                let r = v.mod_floor(&BigInt::from(p));
                Scalar::Modular {
                    value: r.to_u32().expect("residue fits in u32"),
                    modulus: p,
                }
            }
        }
    }

    /// `num / den`, or `None` when `den` vanishes in the field.
    pub fn from_fraction(num: &BigInt, den: &BigInt, ch: Characteristic) -> Option<Self> {
        let d = Self::from_bigint(den, ch);
        let n = Self::from_bigint(num, ch);
        d.inv().map(|inv| n * inv)
    }

    pub fn characteristic(&self) -> Characteristic {
        match self {
            Scalar::Rational(_) => Characteristic(0),
            Scalar::Modular { modulus, .. } => Characteristic(*modulus),
        }
    }

    pub fn is_zero(&self) -> bool {
        match self {
            Scalar::Rational(r) => r.is_zero(),
            Scalar::Modular { value, .. } => *value == 0,
        }
    }

    pub fn is_one(&self) -> bool {
        match self {
            Scalar::Rational(r) => r.is_one(),
            Scalar::Modular { value, .. } => *value == 1,
        }
    }

    /// True for rationals with negative sign; residues are never negative.
    pub fn is_negative(&self) -> bool {
        match self {
            Scalar::Rational(r) => r.is_negative(),
            Scalar::Modular { .. } => false,
        }
    }

    pub fn inv(&self) -> Option<Self> {
        match self {
            Scalar::Rational(r) => (!r.is_zero()).then(|| Scalar::Rational(r.recip())),
            Scalar::Modular { value, modulus } => {
                if *value == 0 {
                    None
                } else {
                    Some(Scalar::Modular {
                        value: pow_mod(*value, *modulus - 2, *modulus),
                        modulus: *modulus,
                    })
                }
            }
        }
    }

    pub fn pow(&self, mut e: u32) -> Self {
        let mut base = self.clone();
        let mut acc = Scalar::one(self.characteristic());
        while e > 0 {
            if e & 1 == 1 {
                acc = &acc * &base;
            }
            base = &base * &base;
            e >>= 1;
        }
        acc
    }

    pub fn as_rational(&self) -> Option<&BigRational> {
        match self {
            Scalar::Rational(r) => Some(r),
            Scalar::Modular { .. } => None,
        }
    }

    /// Rough size in bits, used to prefer small pivots during elimination.
    pub(crate) fn size_hint(&self) -> u64 {
        match self {
            Scalar::Rational(r) => r.numer().bits() + r.denom().bits(),
            Scalar::Modular { .. } => 1,
        }
    }

    fn check_same(&self, other: &Self) {
        assert_eq!(
            self.characteristic(),
            other.characteristic(),
            "scalar characteristic mismatch"
        );
    }
}

fn pow_mod(b: u32, mut e: u32, m: u32) -> u32 {
    let m64 = m as u64;
    let mut acc = 1u64 % m64;
    let mut base = b as u64 % m64;
    while e > 0 {
        if e & 1 == 1 {
            acc = acc * base % m64;
        }
        base = base * base % m64;
        e >>= 1;
    }
    acc as u32
}

impl fmt::Debug for Scalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl fmt::Display for Scalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Scalar::Rational(r) => {
                if r.is_integer() {
                    write!(f, "{}", r.numer())
                } else {
                    write!(f, "{}/{}", r.numer(), r.denom())
                }
            }
            Scalar::Modular { value, .. } => write!(f, "{}", value),
        }
    }
}

impl<'a> Add<&'a Scalar> for &'a Scalar {
    type Output = Scalar;
    fn add(self, rhs: &'a Scalar) -> Scalar {
        match (self, rhs) {
            (Scalar::Rational(a), Scalar::Rational(b)) => Scalar::Rational(a + b),
            (Scalar::Modular { value: a, modulus }, Scalar::Modular { value: b, .. }) => {
                self.check_same(rhs);
                Scalar::Modular {
                    value: ((*a as u64 + *b as u64) % *modulus as u64) as u32,
                    modulus: *modulus,
                }
            }
            _ => {
                self.check_same(rhs);
                unreachable!()
            }
        }
    }
}

impl<'a> Sub<&'a Scalar> for &'a Scalar {
    type Output = Scalar;
    fn sub(self, rhs: &'a Scalar) -> Scalar {
        self + &(-rhs)
    }
}

impl<'a> Mul<&'a Scalar> for &'a Scalar {
    type Output = Scalar;
    fn mul(self, rhs: &'a Scalar) -> Scalar {
        match (self, rhs) {
            (Scalar::Rational(a), Scalar::Rational(b)) => Scalar::Rational(a * b),
            (Scalar::Modular { value: a, modulus }, Scalar::Modular { value: b, .. }) => {
                self.check_same(rhs);
                Scalar::Modular {
                    value: ((*a as u64 * *b as u64) % *modulus as u64) as u32,
                    modulus: *modulus,
                }
            }
            _ => {
                self.check_same(rhs);
                unreachable!()
            }
        }
    }
}

impl Neg for &Scalar {
    type Output = Scalar;
    fn neg(self) -> Scalar {
        match self {
            Scalar::Rational(a) => Scalar::Rational(-a),
            Scalar::Modular { value, modulus } => Scalar::Modular {
                value: if *value == 0 { 0 } else { modulus - value },
                modulus: *modulus,
            },
        }
    }
}

impl Neg for Scalar {
    type Output = Scalar;
    fn neg(self) -> Scalar {
        -&self
    }
}

macro_rules! forward_owned {
    ($tr:ident, $m:ident) => {
        impl $tr<Scalar> for Scalar {
            type Output = Scalar;
            fn $m(self, rhs: Scalar) -> Scalar {
                (&self).$m(&rhs)
            }
        }
        impl<'a> $tr<&'a Scalar> for Scalar {
            type Output = Scalar;
            fn $m(self, rhs: &'a Scalar) -> Scalar {
                (&self).$m(rhs)
            }
        }
    };
}
forward_owned!(Add, add);
forward_owned!(Sub, sub);
forward_owned!(Mul, mul);

impl AddAssign<&Scalar> for Scalar {
    fn add_assign(&mut self, rhs: &Scalar) {
        match (self as &mut Scalar, rhs) {
            (Scalar::Rational(a), Scalar::Rational(b)) => *a += b,
            (s, r) => *s = &*s + r,
        }
    }
}

impl SubAssign<&Scalar> for Scalar {
    fn sub_assign(&mut self, rhs: &Scalar) {
        match (self as &mut Scalar, rhs) {
            (Scalar::Rational(a), Scalar::Rational(b)) => *a -= b,
            (s, r) => *s = &*s - r,
        }
    }
}

impl MulAssign<&Scalar> for Scalar {
    fn mul_assign(&mut self, rhs: &Scalar) {
        match (self as &mut Scalar, rhs) {
            (Scalar::Rational(a), Scalar::Rational(b)) => *a *= b,
            (s, r) => *s = &*s * r,
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn characteristic_accepts_only_zero_and_primes() {
        assert!(Characteristic::new(0).is_some());
        assert!(Characteristic::new(2).is_some());
        assert!(Characteristic::new(MAX_PRIME).is_some());
        assert!(Characteristic::new(1).is_none());
        assert!(Characteristic::new(9).is_none());
        assert!(Characteristic::new(u32::MAX).is_none());
    }

    #[test]
    fn modular_arithmetic() {
        let ch = Characteristic::new(7).unwrap();
        let a = Scalar::from_i64(5, ch);
        let b = Scalar::from_i64(-3, ch);
        assert_eq!(&a + &b, Scalar::from_i64(2, ch));
        assert_eq!(&a * &b, Scalar::from_i64(-15, ch));
        assert_eq!(&a * &a.inv().unwrap(), Scalar::one(ch));
        assert!(Scalar::zero(ch).inv().is_none());
    }

    #[test]
    fn rational_arithmetic_is_exact() {
        let q = Characteristic::ZERO;
        let third = Scalar::from_fraction(&BigInt::from(1), &BigInt::from(3), q).unwrap();
        let sum = &(&third + &third) + &third;
        assert!(sum.is_one());
        assert_eq!(third.pow(2).inv().unwrap(), Scalar::from_i64(9, q));
    }

    #[test]
    #[should_panic(expected = "characteristic mismatch")]
    fn mixing_characteristics_panics() {
        let a = Scalar::one(Characteristic::new(5).unwrap());
        let b = Scalar::one(Characteristic::new(7).unwrap());
        let _ = &a + &b;
    }
}
