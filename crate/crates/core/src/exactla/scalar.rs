//! Field elements over ℚ or 𝔽ₚ (p an odd prime).

use std::fmt;
use std::ops::{Add, AddAssign, Div, Mul, Neg, Sub, SubAssign};

use super::rational::Rational;
use crate::error::{Error, Result};

/// The ground field. Characteristic 2 is rejected.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum FieldSpec {
    Rationals,
    Prime(u64),
}

impl FieldSpec {
    /// Largest modulus accepted; keeps products inside `u64`.
    pub const MAX_PRIME: u64 = (1 << 31) - 1;

    pub fn prime(p: u64) -> Result<Self> {
        if p == 2 {
            return Err(Error::Field("characteristic 2 is not supported".into()));
        }
        if p > Self::MAX_PRIME || !is_prime(p) {
            return Err(Error::Field(format!("{p} is not an odd prime below 2^31")));
        }
        Ok(FieldSpec::Prime(p))
    }

    pub fn characteristic(&self) -> u64 {
        match self {
            FieldSpec::Rationals => 0,
            FieldSpec::Prime(p) => *p,
        }
    }

    pub fn zero(&self) -> Scalar {
        match self {
            FieldSpec::Rationals => Scalar::Q(Rational::ZERO),
            FieldSpec::Prime(p) => Scalar::Fp { value: 0, modulus: *p },
        }
    }

    pub fn one(&self) -> Scalar {
        self.int(1)
    }

    pub fn int(&self, n: i64) -> Scalar {
        match self {
            FieldSpec::Rationals => Scalar::Q(Rational::from_integer(n)),
            FieldSpec::Prime(p) => Scalar::Fp { value: (n.rem_euclid(*p as i64)) as u64, modulus: *p },
        }
    }

    /// `(-1)^k` as a field element.
    pub fn sign(&self, odd: bool) -> Scalar {
        self.int(if odd { -1 } else { 1 })
    }

    pub fn rational(&self, num: i64, den: i64) -> Scalar {
        self.int(num) / self.int(den)
    }

    pub fn zeros(&self, n: usize) -> Vec<Scalar> {
        vec![self.zero(); n]
    }

    pub fn unit_vector(&self, n: usize, i: usize) -> Vec<Scalar> {
        let mut v = self.zeros(n);
        v[i] = self.one();
        v
    }

    /// Parse `"a/b"` or `"a"`; over 𝔽ₚ fractions are interpreted as a·b⁻¹.
    pub fn parse(&self, s: &str) -> Result<Scalar> {
        let r: Rational = s.parse().map_err(|e: super::rational::ParseRationalError| Error::Parse(e.to_string()))?;
        match self {
            FieldSpec::Rationals => Ok(Scalar::Q(r)),
            FieldSpec::Prime(p) => {
                let reduce = |b: num_bigint::BigInt| -> u64 {
                    let m = num_bigint::BigInt::from(*p);
                    let r = ((b % &m) + &m) % &m;
                    r.try_into().expect("residue fits")
                };
                let num = reduce(r.numer());
                let den = reduce(r.denom());
                if den == 0 {
                    return Err(Error::Parse(format!("`{s}` has a denominator divisible by {p}")));
                }
                let n = Scalar::Fp { value: num, modulus: *p };
                let d = Scalar::Fp { value: den, modulus: *p };
                Ok(n / d)
            }
        }
    }

    pub fn contains(&self, s: &Scalar) -> bool {
        matches!((self, s), (FieldSpec::Rationals, Scalar::Q(_)) | (FieldSpec::Prime(_), Scalar::Fp { .. }))
            && match (self, s) {
                (FieldSpec::Prime(p), Scalar::Fp { modulus, .. }) => p == modulus,
                _ => true,
            }
    }
}

impl fmt::Display for FieldSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            FieldSpec::Rationals => write!(f, "Q"),
            FieldSpec::Prime(p) => write!(f, "Fp:{p}"),
        }
    }
}

impl std::str::FromStr for FieldSpec {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s.trim() {
            "Q" => Ok(FieldSpec::Rationals),
            t => match t.strip_prefix("Fp:") {
                Some(p) => FieldSpec::prime(p.parse().map_err(|_| Error::Parse(format!("bad field `{s}`")))?),
                None => Err(Error::Parse(format!("unknown field `{s}` (expected Q or Fp:p)"))),
            },
        }
    }
}

fn is_prime(p: u64) -> bool {
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

/// An exact field element.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum Scalar {
    Q(Rational),
    Fp { value: u64, modulus: u64 },
}

impl Scalar {
    pub fn is_zero(&self) -> bool {
        match self {
            Scalar::Q(r) => r.is_zero(),
            Scalar::Fp { value, .. } => *value == 0,
        }
    }

    pub fn is_one(&self) -> bool {
        match self {
            Scalar::Q(r) => r.is_one(),
            Scalar::Fp { value, .. } => *value == 1,
        }
    }

    pub fn field(&self) -> FieldSpec {
        match self {
            Scalar::Q(_) => FieldSpec::Rationals,
            Scalar::Fp { modulus, .. } => FieldSpec::Prime(*modulus),
        }
    }

    pub fn inv(&self) -> Option<Scalar> {
        match self {
            Scalar::Q(r) => r.inv().map(Scalar::Q),
            Scalar::Fp { value, modulus } => {
                if *value == 0 {
                    None
                } else {
                    Some(Scalar::Fp { value: pow_mod(*value, modulus - 2, *modulus), modulus: *modulus })
                }
            }
        }
    }

    /// `self * other` without moving either.
    pub fn times(&self, other: &Scalar) -> Scalar {
        match (self, other) {
            (Scalar::Q(a), Scalar::Q(b)) => Scalar::Q(a.mul(b)),
            (Scalar::Fp { value: a, modulus: p }, Scalar::Fp { value: b, modulus: q }) => {
                assert_eq!(p, q, "mixed prime fields");
                Scalar::Fp { value: a * b % p, modulus: *p }
            }
            _ => panic!("mixed fields in scalar arithmetic"),
        }
    }

    pub fn plus(&self, other: &Scalar) -> Scalar {
        match (self, other) {
            (Scalar::Q(a), Scalar::Q(b)) => Scalar::Q(a.add(b)),
            (Scalar::Fp { value: a, modulus: p }, Scalar::Fp { value: b, modulus: q }) => {
                assert_eq!(p, q, "mixed prime fields");
                Scalar::Fp { value: (a + b) % p, modulus: *p }
            }
            _ => panic!("mixed fields in scalar arithmetic"),
        }
    }

    pub fn negated(&self) -> Scalar {
        match self {
            Scalar::Q(a) => Scalar::Q(a.neg()),
            Scalar::Fp { value, modulus } => Scalar::Fp { value: (modulus - value) % modulus, modulus: *modulus },
        }
    }

    pub fn minus(&self, other: &Scalar) -> Scalar {
        self.plus(&other.negated())
    }
}

fn pow_mod(mut b: u64, mut e: u64, m: u64) -> u64 {
    let mut r = 1 % m;
    b %= m;
    while e > 0 {
        if e & 1 == 1 {
            r = r * b % m;
        }
        b = b * b % m;
        e >>= 1;
    }
    r
}

impl fmt::Display for Scalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Scalar::Q(r) => write!(f, "{r}"),
            Scalar::Fp { value, .. } => write!(f, "{value}"),
        }
    }
}

macro_rules! forward_binop {
    ($tr:ident, $m:ident, $inner:ident) => {
        impl $tr<Scalar> for Scalar {
            type Output = Scalar;
            fn $m(self, rhs: Scalar) -> Scalar {
                self.$inner(&rhs)
            }
        }
        impl $tr<&Scalar> for Scalar {
            type Output = Scalar;
            fn $m(self, rhs: &Scalar) -> Scalar {
                self.$inner(rhs)
            }
        }
        impl $tr<&Scalar> for &Scalar {
            type Output = Scalar;
            fn $m(self, rhs: &Scalar) -> Scalar {
                self.$inner(rhs)
            }
        }
        impl $tr<Scalar> for &Scalar {
            type Output = Scalar;
            fn $m(self, rhs: Scalar) -> Scalar {
                self.$inner(&rhs)
            }
        }
    };
}

forward_binop!(Add, add, plus);
forward_binop!(Sub, sub, minus);
forward_binop!(Mul, mul, times);

impl Div<Scalar> for Scalar {
    type Output = Scalar;
    fn div(self, rhs: Scalar) -> Scalar {
        self.times(&rhs.inv().expect("division by zero"))
    }
}

impl Div<&Scalar> for &Scalar {
    type Output = Scalar;
    fn div(self, rhs: &Scalar) -> Scalar {
        self.times(&rhs.inv().expect("division by zero"))
    }
}

impl Neg for Scalar {
    type Output = Scalar;
    fn neg(self) -> Scalar {
        self.negated()
    }
}

impl Neg for &Scalar {
    type Output = Scalar;
    fn neg(self) -> Scalar {
        self.negated()
    }
}

impl AddAssign<&Scalar> for Scalar {
    fn add_assign(&mut self, rhs: &Scalar) {
        *self = self.plus(rhs);
    }
}

impl SubAssign<&Scalar> for Scalar {
    fn sub_assign(&mut self, rhs: &Scalar) {
        *self = self.minus(rhs);
    }
}
