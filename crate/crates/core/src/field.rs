//! Exact scalars over ℚ and prime fields.
//!
//! A [`Scalar`] carries its field with it. Arithmetic between scalars of
//! different fields is a programming error and panics, in the same way that
//! dividing by zero does; matrix-level operations check fields up front and
//! report [`Error::FieldMismatch`] instead.

use std::cmp::Ordering;
use std::fmt;
use std::ops::{Add, Div, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, ToPrimitive, Zero};

use crate::error::{Error, Result};

/// A prime modulus, checked by trial division at construction.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Modulus(u64);

impl Modulus {
    pub fn new(p: u64) -> Result<Self> {
        if is_prime(p) {
            Ok(Modulus(p))
        } else {
            Err(Error::NotPrime(p))
        }
    }

    pub fn get(self) -> u64 {
        self.0
    }
}

/// The base field: ℚ or `F_p`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum FieldSpec {
    Rational,
    Prime(Modulus),
}

impl FieldSpec {
    pub fn rational() -> Self {
        FieldSpec::Rational
    }

    pub fn prime(p: u64) -> Result<Self> {
        Modulus::new(p).map(FieldSpec::Prime)
    }

    pub fn modulus(&self) -> Option<u64> {
        match self {
            FieldSpec::Rational => None,
            FieldSpec::Prime(m) => Some(m.get()),
        }
    }

    pub fn zero(&self) -> Scalar {
        self.from_i64(0)
    }

    pub fn one(&self) -> Scalar {
        self.from_i64(1)
    }

    pub fn from_i64(&self, n: i64) -> Scalar {
        self.from_bigint(&BigInt::from(n))
    }

    pub fn from_bigint(&self, n: &BigInt) -> Scalar {
        match *self {
            FieldSpec::Rational => Scalar::rational(BigRational::from_integer(n.clone())),
            FieldSpec::Prime(m) => {
                let p = m.get();
                let r = n.mod_floor(&BigInt::from(p));
                Scalar::residue(r.to_u64().expect("residue fits in u64"), p)
            }
        }
    }

    /// `num / den` in this field; `None` when `den` vanishes in the field.
    pub fn from_ratio(&self, num: i64, den: i64) -> Option<Scalar> {
        self.from_i64(num).checked_div(&self.from_i64(den))
    }

    /// Parses the exact-scalar grammar: an optionally negative decimal
    /// integer, optionally followed by `/` and a positive decimal integer.
    /// Prime-field values are reduced mod `p`.
    pub fn parse(&self, text: &str) -> Result<Scalar> {
        let err = || Error::Parse(text.to_string());
        let s = text.trim();
        let (num, den) = match s.split_once('/') {
            Some((n, d)) => (n, Some(d)),
            None => (s, None),
        };
        let num = parse_integer(num, true).ok_or_else(err)?;
        let den = match den {
            Some(d) => parse_integer(d, false).ok_or_else(err)?,
            None => BigInt::one(),
        };
        if den.is_zero() {
            return Err(err());
        }
        self.from_bigint(&num)
            .checked_div(&self.from_bigint(&den))
            .ok_or_else(err)
    }

    /// Every element of a prime field in residue order; `None` for ℚ.
    pub fn elements(&self) -> Option<impl Iterator<Item = Scalar>> {
        let p = self.modulus()?;
        Some((0..p).map(move |v| Scalar::residue(v, p)))
    }
}

impl fmt::Display for FieldSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            FieldSpec::Rational => f.write_str("Q"),
            FieldSpec::Prime(m) => write!(f, "F_{}", m.get()),
        }
    }
}

fn parse_integer(s: &str, allow_sign: bool) -> Option<BigInt> {
    let digits = match s.strip_prefix('-') {
        Some(rest) if allow_sign => rest,
        Some(_) => return None,
        None => s,
    };
    if digits.is_empty() || !digits.bytes().all(|b| b.is_ascii_digit()) {
        return None;
    }
    s.parse().ok()
}

pub(crate) fn is_prime(p: u64) -> bool {
    if p < 2 {
        return false;
    }
    if p < 4 {
        return true;
    }
    if p % 2 == 0 || p % 3 == 0 {
        return false;
    }
    let mut i: u64 = 5;
    while (i as u128) * (i as u128) <= p as u128 {
        if p % i == 0 || p % (i + 2) == 0 {
            return false;
        }
        i += 6;
    }
    true
}

#[derive(Clone, PartialEq, Eq, Hash)]
enum Repr {
    Rational(BigRational),
    Residue { value: u64, modulus: u64 },
}

/// An exact field element. Rationals are kept in lowest terms with a
/// positive denominator; residues are kept in `[0, p)`.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Scalar(Repr);

impl Scalar {
    fn rational(q: BigRational) -> Self {
        Scalar(Repr::Rational(q))
    }

    fn residue(value: u64, modulus: u64) -> Self {
        debug_assert!(value < modulus);
        Scalar(Repr::Residue { value, modulus })
    }

    pub fn field(&self) -> FieldSpec {
        match self.0 {
            Repr::Rational(_) => FieldSpec::Rational,
            Repr::Residue { modulus, .. } => FieldSpec::Prime(Modulus(modulus)),
        }
    }

    pub fn is_zero(&self) -> bool {
        match &self.0 {
            Repr::Rational(q) => q.is_zero(),
            Repr::Residue { value, .. } => *value == 0,
        }
    }

    pub fn is_one(&self) -> bool {
        match &self.0 {
            Repr::Rational(q) => q.is_one(),
            Repr::Residue { value, .. } => *value == 1,
        }
    }

    pub fn as_rational(&self) -> Option<&BigRational> {
        match &self.0 {
            Repr::Rational(q) => Some(q),
            Repr::Residue { .. } => None,
        }
    }

    pub fn residue_value(&self) -> Option<u64> {
        match self.0 {
            Repr::Rational(_) => None,
            Repr::Residue { value, .. } => Some(value),
        }
    }

    pub fn inv(&self) -> Option<Scalar> {
        match &self.0 {
            Repr::Rational(q) => (!q.is_zero()).then(|| Scalar::rational(q.recip())),
            Repr::Residue { value, modulus } => {
                inv_mod(*value, *modulus).map(|v| Scalar::residue(v, *modulus))
            }
        }
    }

    pub fn checked_div(&self, rhs: &Scalar) -> Option<Scalar> {
        rhs.inv().map(|r| self * &r)
    }

    pub fn pow(&self, mut e: u64) -> Scalar {
        let mut base = self.clone();
        let mut acc = self.field().one();
        while e > 0 {
            if e & 1 == 1 {
                acc = &acc * &base;
            }
            base = &base * &base;
            e >>= 1;
        }
        acc
    }

    fn combine(&self, rhs: &Scalar, op: BinOp) -> Scalar {
        match (&self.0, &rhs.0) {
            (Repr::Rational(a), Repr::Rational(b)) => Scalar::rational(match op {
                BinOp::Add => a + b,
                BinOp::Sub => a - b,
                BinOp::Mul => a * b,
            }),
            (
                Repr::Residue {
                    value: a,
                    modulus: p,
                },
                Repr::Residue {
                    value: b,
                    modulus: q,
                },
            ) if p == q => {
                let (a, b, p128) = (*a as u128, *b as u128, *p as u128);
                let v = match op {
                    BinOp::Add => (a + b) % p128,
                    BinOp::Sub => (a + p128 - b) % p128,
                    BinOp::Mul => a * b % p128,
                };
                Scalar::residue(v as u64, *p)
            }
            _ => panic!(
                "scalar arithmetic across fields: {} and {}",
                self.field(),
                rhs.field()
            ),
        }
    }
}

enum BinOp {
    Add,
    Sub,
    Mul,
}

fn inv_mod(a: u64, p: u64) -> Option<u64> {
    if a == 0 {
        return None;
    }
    let (mut r0, mut r1) = (p as i128, a as i128);
    let (mut t0, mut t1) = (0i128, 1i128);
    while r1 != 0 {
        let q = r0 / r1;
        (r0, r1) = (r1, r0 - q * r1);
        (t0, t1) = (t1, t0 - q * t1);
    }
    if r0 != 1 {
        return None;
    }
    Some(t0.rem_euclid(p as i128) as u64)
}

macro_rules! forward_binop {
    ($trait:ident, $method:ident, $op:expr) => {
        impl $trait<&Scalar> for &Scalar {
            type Output = Scalar;
            fn $method(self, rhs: &Scalar) -> Scalar {
                self.combine(rhs, $op)
            }
        }
        impl $trait<Scalar> for Scalar {
            type Output = Scalar;
            fn $method(self, rhs: Scalar) -> Scalar {
                self.combine(&rhs, $op)
            }
        }
        impl $trait<&Scalar> for Scalar {
            type Output = Scalar;
            fn $method(self, rhs: &Scalar) -> Scalar {
                self.combine(rhs, $op)
            }
        }
        impl $trait<Scalar> for &Scalar {
            type Output = Scalar;
            fn $method(self, rhs: Scalar) -> Scalar {
                self.combine(&rhs, $op)
            }
        }
    };
}

forward_binop!(Add, add, BinOp::Add);
forward_binop!(Sub, sub, BinOp::Sub);
forward_binop!(Mul, mul, BinOp::Mul);

impl Div<&Scalar> for &Scalar {
    type Output = Scalar;
    fn div(self, rhs: &Scalar) -> Scalar {
        self.checked_div(rhs).expect("division by zero")
    }
}

impl Div<Scalar> for Scalar {
    type Output = Scalar;
    fn div(self, rhs: Scalar) -> Scalar {
        &self / &rhs
    }
}

impl Div<&Scalar> for Scalar {
    type Output = Scalar;
    fn div(self, rhs: &Scalar) -> Scalar {
        &self / rhs
    }
}

impl Neg for &Scalar {
    type Output = Scalar;
    fn neg(self) -> Scalar {
        match &self.0 {
            Repr::Rational(q) => Scalar::rational(-q),
            Repr::Residue { value, modulus } => {
                Scalar::residue((modulus - value) % modulus, *modulus)
            }
        }
    }
}

impl Neg for Scalar {
    type Output = Scalar;
    fn neg(self) -> Scalar {
        -&self
    }
}

/// Rationals compare numerically and residues by their canonical
/// representative; scalars from different fields are incomparable.
impl PartialOrd for Scalar {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        match (&self.0, &other.0) {
            (Repr::Rational(a), Repr::Rational(b)) => Some(a.cmp(b)),
            (
                Repr::Residue {
                    value: a,
                    modulus: p,
                },
                Repr::Residue {
                    value: b,
                    modulus: q,
                },
            ) if p == q => Some(a.cmp(b)),
            _ => None,
        }
    }
}

impl fmt::Display for Scalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match &self.0 {
            Repr::Rational(q) if q.denom().is_one() => write!(f, "{}", q.numer()),
            Repr::Rational(q) => write!(f, "{}/{}", q.numer(), q.denom()),
            Repr::Residue { value, .. } => write!(f, "{value}"),
        }
    }
}

impl fmt::Debug for Scalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match &self.0 {
            Repr::Rational(_) => write!(f, "{self}"),
            Repr::Residue { modulus, .. } => write!(f, "{self} (mod {modulus})"),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q() -> FieldSpec {
        FieldSpec::rational()
    }

    #[test]
    fn primality_by_trial_division() {
        let primes: Vec<u64> = (0..60).filter(|&n| is_prime(n)).collect();
        assert_eq!(
            primes,
            vec![2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41, 43, 47, 53, 59]
        );
        assert!(is_prime(1_000_000_007));
        assert!(!is_prime(1_000_000_007 * 3));
        assert_eq!(FieldSpec::prime(9), Err(Error::NotPrime(9)));
    }

    #[test]
    fn rationals_are_reduced() {
        let a = q().parse("6/-4");
        assert!(a.is_err(), "sign belongs to the numerator");
        let a = q().parse("-6/4").unwrap();
        assert_eq!(a.to_string(), "-3/2");
        let b = q().parse("4/2").unwrap();
        assert_eq!(b.to_string(), "2");
        assert_eq!(q().parse("0/7").unwrap(), q().zero());
    }

    #[test]
    fn parse_rejects_malformed() {
        for bad in ["1/0", "", "-", "1/", "/2", "1.5", "+3", "1/-2", "a", "--1"] {
            assert!(matches!(q().parse(bad), Err(Error::Parse(_))), "{bad:?}");
        }
        let f5 = FieldSpec::prime(5).unwrap();
        assert!(f5.parse("1/5").is_err());
    }

    #[test]
    fn residues_reduce_on_parse() {
        let f5 = FieldSpec::prime(5).unwrap();
        assert_eq!(f5.parse("-1").unwrap().to_string(), "4");
        assert_eq!(f5.parse("17").unwrap().to_string(), "2");
        // 1/2 = 3 in F_5
        assert_eq!(f5.parse("1/2").unwrap().to_string(), "3");
    }

    #[test]
    fn prime_field_inverse_table() {
        let f7 = FieldSpec::prime(7).unwrap();
        for a in f7.elements().unwrap().skip(1) {
            let inv = a.inv().unwrap();
            assert!((&a * &inv).is_one());
        }
        assert!(f7.zero().inv().is_none());
    }

    #[test]
    fn large_modulus_does_not_overflow() {
        let p = 18_446_744_073_709_551_557; // largest prime below 2^64
        let f = FieldSpec::Prime(Modulus(p));
        let a = f.from_i64(-1);
        assert_eq!((&a * &a), f.one());
        assert_eq!(&a + &f.from_i64(2), f.one());
    }

    #[test]
    fn ordering_is_numeric_for_rationals() {
        let a = q().parse("-1/2").unwrap();
        let b = q().parse("1/3").unwrap();
        assert!(a < b);
        let f3 = FieldSpec::prime(3).unwrap();
        assert_eq!(a.partial_cmp(&f3.one()), None);
    }

    #[test]
    #[should_panic(expected = "across fields")]
    fn mixing_fields_panics() {
        let _ = FieldSpec::rational().one() + FieldSpec::prime(3).unwrap().one();
    }
}
