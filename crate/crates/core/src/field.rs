//! Exact scalars: the rationals, or a prime field of odd characteristic.

use std::cmp::Ordering;
use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::error::AlgebraError;

/// The coefficient field of every ring in the crate.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Default)]
pub enum Field {
    #[default]
    Rational,
    /// `F_p` with `p` an odd prime.
    Prime(u64),
}

impl Field {
    /// `F_p`, rejecting `p = 2` and composite moduli.
    pub fn prime(p: u64) -> Result<Field, AlgebraError> {
        if p == 2 {
            return Err(AlgebraError::Characteristic(p));
        }
        if p < 3 || !is_prime(p) || p > u32::MAX as u64 {
            return Err(AlgebraError::Characteristic(p));
        }
        Ok(Field::Prime(p))
    }

    pub fn characteristic(self) -> u64 {
        match self {
            Field::Rational => 0,
            Field::Prime(p) => p,
        }
    }

    pub fn zero(self) -> Scalar {
        self.int(0)
    }

    pub fn one(self) -> Scalar {
        self.int(1)
    }

    pub fn int(self, n: i64) -> Scalar {
        match self {
            Field::Rational => Scalar::Q(BigRational::from_integer(BigInt::from(n))),
            Field::Prime(p) => Scalar::P {
                v: n.rem_euclid(p as i64) as u64,
                p,
            },
        }
    }

    pub fn big_int(self, n: &BigInt) -> Scalar {
        match self {
            Field::Rational => Scalar::Q(BigRational::from_integer(n.clone())),
            Field::Prime(p) => {
                let r = n.mod_floor(&BigInt::from(p));
                Scalar::P {
                    v: r.to_u64().expect("reduced residue fits"),
                    p,
                }
            }
        }
    }

    /// `num / den`; `None` when the denominator vanishes in this field.
    pub fn ratio(self, num: &BigInt, den: &BigInt) -> Option<Scalar> {
        let d = self.big_int(den);
        if d.is_zero() {
            return None;
        }
        Some(&self.big_int(num) * &d.inv())
    }

    pub fn contains(self, s: &Scalar) -> bool {
        matches!(
            (self, s),
            (Field::Rational, Scalar::Q(_)) | (Field::Prime(_), Scalar::P { .. })
        ) && match (self, s) {
            (Field::Prime(p), Scalar::P { p: q, .. }) => p == *q,
            _ => true,
        }
    }
}

impl fmt::Display for Field {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Field::Rational => write!(f, "Q"),
            Field::Prime(p) => write!(f, "F_{p}"),
        }
    }
}

fn is_prime(p: u64) -> bool {
    if p < 2 {
        return false;
    }
    let mut d = 2u64;
    while d * d <= p {
        if p.is_multiple_of(d) {
            return false;
        }
        d += 1;
    }
    true
}

/// An exact field element. Mixing elements of different fields is a bug in the
/// caller and panics.
#[derive(Clone, PartialEq, Eq, Hash)]
pub enum Scalar {
    Q(BigRational),
    P { v: u64, p: u64 },
}

impl Scalar {
    pub fn field(&self) -> Field {
        match self {
            Scalar::Q(_) => Field::Rational,
            Scalar::P { p, .. } => Field::Prime(*p),
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

    /// True for rationals below zero. Prime-field elements are never negative.
    pub fn is_negative(&self) -> bool {
        match self {
            Scalar::Q(q) => q.is_negative(),
            Scalar::P { .. } => false,
        }
    }

    /// Multiplicative inverse. Panics on zero.
    pub fn inv(&self) -> Scalar {
        assert!(!self.is_zero(), "inverse of zero scalar");
        match self {
            Scalar::Q(q) => Scalar::Q(q.recip()),
            Scalar::P { v, p } => Scalar::P {
                v: pow_mod(*v, p - 2, *p),
                p: *p,
            },
        }
    }

    pub fn abs(&self) -> Scalar {
        match self {
            Scalar::Q(q) => Scalar::Q(q.abs()),
            s => s.clone(),
        }
    }

    fn same_field(&self, other: &Scalar) {
        assert!(
            self.field() == other.field(),
            "scalar field mismatch: {} vs {}",
            self.field(),
            other.field()
        );
    }
}

fn pow_mod(b: u64, mut e: u64, m: u64) -> u64 {
    let mut r = 1u128;
    let mut base = b as u128 % m as u128;
    while e > 0 {
        if e & 1 == 1 {
            r = r * base % m as u128;
        }
        base = base * base % m as u128;
        e >>= 1;
    }
    r as u64
}

impl<'a> std::ops::Add<&'a Scalar> for &'a Scalar {
    type Output = Scalar;
    fn add(self, rhs: &Scalar) -> Scalar {
        self.same_field(rhs);
        match (self, rhs) {
            (Scalar::Q(a), Scalar::Q(b)) => Scalar::Q(a + b),
            (Scalar::P { v: a, p }, Scalar::P { v: b, .. }) => Scalar::P {
                v: (a + b) % p,
                p: *p,
            },
            _ => unreachable!(),
        }
    }
}

impl<'a> std::ops::Sub<&'a Scalar> for &'a Scalar {
    type Output = Scalar;
    fn sub(self, rhs: &Scalar) -> Scalar {
        self.same_field(rhs);
        match (self, rhs) {
            (Scalar::Q(a), Scalar::Q(b)) => Scalar::Q(a - b),
            (Scalar::P { v: a, p }, Scalar::P { v: b, .. }) => Scalar::P {
                v: (a + p - b) % p,
                p: *p,
            },
            _ => unreachable!(),
        }
    }
}

impl<'a> std::ops::Mul<&'a Scalar> for &'a Scalar {
    type Output = Scalar;
    fn mul(self, rhs: &Scalar) -> Scalar {
        self.same_field(rhs);
        match (self, rhs) {
            (Scalar::Q(a), Scalar::Q(b)) => Scalar::Q(a * b),
            (Scalar::P { v: a, p }, Scalar::P { v: b, .. }) => Scalar::P {
                v: ((*a as u128 * *b as u128) % *p as u128) as u64,
                p: *p,
            },
            _ => unreachable!(),
        }
    }
}

#[allow(clippy::suspicious_arithmetic_impl)]
impl<'a> std::ops::Div<&'a Scalar> for &'a Scalar {
    type Output = Scalar;
    fn div(self, rhs: &Scalar) -> Scalar {
        self * &rhs.inv()
    }
}

impl std::ops::Neg for &Scalar {
    type Output = Scalar;
    fn neg(self) -> Scalar {
        match self {
            Scalar::Q(a) => Scalar::Q(-a),
            Scalar::P { v, p } => Scalar::P {
                v: (p - v) % p,
                p: *p,
            },
        }
    }
}

impl std::ops::Neg for Scalar {
    type Output = Scalar;
    fn neg(self) -> Scalar {
        -&self
    }
}

impl PartialOrd for Scalar {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

/// Total order used only for deterministic sorting, not field structure.
impl Ord for Scalar {
    fn cmp(&self, other: &Self) -> Ordering {
        match (self, other) {
            (Scalar::Q(a), Scalar::Q(b)) => a.cmp(b),
            (Scalar::P { v: a, p }, Scalar::P { v: b, p: q }) => (p, a).cmp(&(q, b)),
            (Scalar::Q(_), Scalar::P { .. }) => Ordering::Less,
            (Scalar::P { .. }, Scalar::Q(_)) => Ordering::Greater,
        }
    }
}

impl fmt::Display for Scalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Scalar::Q(q) => {
                if q.denom().is_one() {
                    write!(f, "{}", q.numer())
                } else {
                    write!(f, "{}/{}", q.numer(), q.denom())
                }
            }
            Scalar::P { v, .. } => write!(f, "{v}"),
        }
    }
}

impl fmt::Debug for Scalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rejects_characteristic_two() {
        assert!(Field::prime(2).is_err());
        assert!(Field::prime(9).is_err());
        assert_eq!(Field::prime(7).unwrap().characteristic(), 7);
    }

    #[test]
    fn prime_field_inverse() {
        let f = Field::prime(7).unwrap();
        let three = f.int(3);
        assert!((&three * &three.inv()).is_one());
        assert_eq!(f.int(-1), f.int(6));
    }

    #[test]
    fn rational_display() {
        let f = Field::Rational;
        let half = f.ratio(&BigInt::from(1), &BigInt::from(2)).unwrap();
        assert_eq!(half.to_string(), "1/2");
        assert_eq!((-&half).to_string(), "-1/2");
        assert_eq!(f.int(4).to_string(), "4");
    }
}
