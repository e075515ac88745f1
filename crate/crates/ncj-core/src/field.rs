//! Exact scalars: arbitrary-precision rationals and residues modulo an odd prime.

use std::fmt;
use std::ops::{Add, AddAssign, Mul, Neg, Sub, SubAssign};

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};
use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum FieldError {
    #[error("characteristic 2 is not supported")]
    CharacteristicTwo,
    #[error("{0} is not prime")]
    NotPrime(u64),
    #[error("cannot parse scalar {0:?}")]
    Parse(String),
    #[error("cannot parse field descriptor {0:?} (expected `q` or `p<N>`)")]
    Descriptor(String),
    #[error("denominator vanishes in {0}")]
    ZeroDenominator(String),
}

/// The base field: ℚ or 𝔽_p with p an odd prime.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Field {
    Rational,
    Prime(u64),
}

fn is_prime(p: u64) -> bool {
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

impl Field {
    pub fn prime(p: u64) -> Result<Field, FieldError> {
        if p == 2 {
            return Err(FieldError::CharacteristicTwo);
        }
        if !is_prime(p) || p >= (1 << 31) {
            return Err(FieldError::NotPrime(p));
        }
        Ok(Field::Prime(p))
    }

    /// Parses `q` / `Q` or `p<N>`.
    pub fn parse(s: &str) -> Result<Field, FieldError> {
        let s = s.trim();
        if s.eq_ignore_ascii_case("q") {
            return Ok(Field::Rational);
        }
        if let Some(rest) = s.strip_prefix('p').or_else(|| s.strip_prefix('P')) {
            let p: u64 = rest.parse().map_err(|_| FieldError::Descriptor(s.into()))?;
            return Field::prime(p);
        }
        Err(FieldError::Descriptor(s.into()))
    }

    pub fn characteristic(&self) -> u64 {
        match self {
            Field::Rational => 0,
            Field::Prime(p) => *p,
        }
    }

    pub fn zero(&self) -> Scalar {
        match self {
            Field::Rational => Scalar::Q(BigRational::zero()),
            Field::Prime(p) => Scalar::F { v: 0, p: *p },
        }
    }

    pub fn one(&self) -> Scalar {
        self.int(1)
    }

    pub fn int(&self, n: i64) -> Scalar {
        match self {
            Field::Rational => Scalar::Q(BigRational::from_integer(n.into())),
            Field::Prime(p) => Scalar::F { v: reduce_i128(n as i128, *p), p: *p },
        }
    }

    /// n/d; panics if d vanishes in the field.
    pub fn ratio(&self, n: i64, d: i64) -> Scalar {
        self.try_ratio(n, d).expect("denominator vanishes in field")
    }

    pub fn try_ratio(&self, n: i64, d: i64) -> Result<Scalar, FieldError> {
        let den = self.int(d);
        let inv = den.inv().ok_or_else(|| FieldError::ZeroDenominator(format!("{n}/{d}")))?;
        Ok(&self.int(n) * &inv)
    }

    pub fn half(&self) -> Scalar {
        self.ratio(1, 2)
    }

    /// Parses "p/q", "p", or a decimal residue.
    pub fn parse_scalar(&self, s: &str) -> Result<Scalar, FieldError> {
        let t = s.trim();
        let bad = || FieldError::Parse(s.to_string());
        let (n, d) = match t.split_once('/') {
            Some((a, b)) => (
                a.trim().parse::<BigInt>().map_err(|_| bad())?,
                b.trim().parse::<BigInt>().map_err(|_| bad())?,
            ),
            None => (t.parse::<BigInt>().map_err(|_| bad())?, BigInt::one()),
        };
        self.from_bigints(n, d).ok_or_else(|| FieldError::ZeroDenominator(s.to_string()))
    }

    pub fn from_bigints(&self, n: BigInt, d: BigInt) -> Option<Scalar> {
        match self {
            Field::Rational => {
                if d.is_zero() {
                    None
                } else {
                    Some(Scalar::Q(BigRational::new(n, d)))
                }
            }
            Field::Prime(p) => {
                let pb = BigInt::from(*p);
                let nv = n.mod_floor(&pb).to_u64().unwrap();
                let dv = d.mod_floor(&pb).to_u64().unwrap();
                let den = Scalar::F { v: dv, p: *p }.inv()?;
                Some(&Scalar::F { v: nv, p: *p } * &den)
            }
        }
    }

    /// Maps a rational into this field (None if the denominator vanishes mod p).
    pub fn from_rational(&self, q: &BigRational) -> Option<Scalar> {
        self.from_bigints(q.numer().clone(), q.denom().clone())
    }
}

impl fmt::Display for Field {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Field::Rational => write!(f, "q"),
            Field::Prime(p) => write!(f, "p{p}"),
        }
    }
}

fn reduce_i128(n: i128, p: u64) -> u64 {
    n.rem_euclid(p as i128) as u64
}

fn pow_mod(mut b: u64, mut e: u64, p: u64) -> u64 {
    let mut r = 1u64;
    b %= p;
    while e > 0 {
        if e & 1 == 1 {
            r = ((r as u128 * b as u128) % p as u128) as u64;
        }
        b = ((b as u128 * b as u128) % p as u128) as u64;
        e >>= 1;
    }
    r
}

/// A field element. Mixing elements of different fields is a programming error and panics.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum Scalar {
    Q(BigRational),
    F { v: u64, p: u64 },
}

impl Scalar {
    pub fn field(&self) -> Field {
        match self {
            Scalar::Q(_) => Field::Rational,
            Scalar::F { p, .. } => Field::Prime(*p),
        }
    }

    pub fn is_zero(&self) -> bool {
        match self {
            Scalar::Q(q) => q.is_zero(),
            Scalar::F { v, .. } => *v == 0,
        }
    }

    pub fn is_one(&self) -> bool {
        match self {
            Scalar::Q(q) => q.is_one(),
            Scalar::F { v, .. } => *v == 1,
        }
    }

    pub fn inv(&self) -> Option<Scalar> {
        if self.is_zero() {
            return None;
        }
        Some(match self {
            Scalar::Q(q) => Scalar::Q(q.recip()),
            Scalar::F { v, p } => Scalar::F { v: pow_mod(*v, p - 2, *p), p: *p },
        })
    }

    pub fn div(&self, other: &Scalar) -> Option<Scalar> {
        other.inv().map(|i| self * &i)
    }

    /// Exact square root when one exists in the field.
    pub fn sqrt(&self) -> Option<Scalar> {
        match self {
            Scalar::Q(q) => {
                if q.is_negative() {
                    return None;
                }
                let n = q.numer().sqrt();
                let d = q.denom().sqrt();
                if &(&n * &n) == q.numer() && &(&d * &d) == q.denom() {
                    Some(Scalar::Q(BigRational::new(n, d)))
                } else {
                    None
                }
            }
            Scalar::F { v, p } => sqrt_mod(*v, *p).map(|r| Scalar::F { v: r, p: *p }),
        }
    }

    /// Rational value, if this is a rational scalar.
    pub fn as_rational(&self) -> Option<&BigRational> {
        match self {
            Scalar::Q(q) => Some(q),
            Scalar::F { .. } => None,
        }
    }

    fn check(&self, other: &Scalar) {
        if let (Scalar::F { p, .. }, Scalar::F { p: q, .. }) = (self, other) {
            assert_eq!(p, q, "scalar field mismatch");
        } else if std::mem::discriminant(self) != std::mem::discriminant(other) {
            panic!("scalar field mismatch");
        }
    }
}

/// Tonelli–Shanks.
fn sqrt_mod(a: u64, p: u64) -> Option<u64> {
    let a = a % p;
    if a == 0 {
        return Some(0);
    }
    if pow_mod(a, (p - 1) / 2, p) != 1 {
        return None;
    }
    if p % 4 == 3 {
        let r = pow_mod(a, (p + 1) / 4, p);
        return Some(r.min(p - r));
    }
    let (mut q, mut s) = (p - 1, 0u32);
    while q % 2 == 0 {
        q /= 2;
        s += 1;
    }
    let mut z = 2;
    while pow_mod(z, (p - 1) / 2, p) != p - 1 {
        z += 1;
    }
    let mulm = |x: u64, y: u64| ((x as u128 * y as u128) % p as u128) as u64;
    let (mut m, mut c, mut t, mut r) = (s, pow_mod(z, q, p), pow_mod(a, q, p), pow_mod(a, (q + 1) / 2, p));
    while t != 1 {
        let mut i = 0;
        let mut tt = t;
        while tt != 1 {
            tt = mulm(tt, tt);
            i += 1;
        }
        let b = pow_mod(c, 1 << (m - i - 1), p);
        m = i;
        c = mulm(b, b);
        t = mulm(t, c);
        r = mulm(r, b);
    }
    Some(r.min(p - r))
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
            Scalar::F { v, .. } => write!(f, "{v}"),
        }
    }
}

impl<'a> Add<&'a Scalar> for &'a Scalar {
    type Output = Scalar;
    fn add(self, o: &Scalar) -> Scalar {
        self.check(o);
        match (self, o) {
            (Scalar::Q(a), Scalar::Q(b)) => Scalar::Q(a + b),
            (Scalar::F { v, p }, Scalar::F { v: w, .. }) => Scalar::F { v: (v + w) % p, p: *p },
            _ => unreachable!(),
        }
    }
}

impl<'a> Sub<&'a Scalar> for &'a Scalar {
    type Output = Scalar;
    fn sub(self, o: &Scalar) -> Scalar {
        self.check(o);
        match (self, o) {
            (Scalar::Q(a), Scalar::Q(b)) => Scalar::Q(a - b),
            (Scalar::F { v, p }, Scalar::F { v: w, .. }) => Scalar::F { v: (v + p - w) % p, p: *p },
            _ => unreachable!(),
        }
    }
}

impl<'a> Mul<&'a Scalar> for &'a Scalar {
    type Output = Scalar;
    fn mul(self, o: &Scalar) -> Scalar {
        self.check(o);
        match (self, o) {
            (Scalar::Q(a), Scalar::Q(b)) => Scalar::Q(a * b),
            (Scalar::F { v, p }, Scalar::F { v: w, .. }) => {
                Scalar::F { v: ((*v as u128 * *w as u128) % *p as u128) as u64, p: *p }
            }
            _ => unreachable!(),
        }
    }
}

impl Neg for &Scalar {
    type Output = Scalar;
    fn neg(self) -> Scalar {
        match self {
            Scalar::Q(a) => Scalar::Q(-a),
            Scalar::F { v, p } => Scalar::F { v: (p - v) % p, p: *p },
        }
    }
}

impl Neg for Scalar {
    type Output = Scalar;
    fn neg(self) -> Scalar {
        -&self
    }
}

macro_rules! owned_binop {
    ($tr:ident, $m:ident) => {
        impl $tr<Scalar> for Scalar {
            type Output = Scalar;
            fn $m(self, o: Scalar) -> Scalar {
                (&self).$m(&o)
            }
        }
        impl<'a> $tr<&'a Scalar> for Scalar {
            type Output = Scalar;
            fn $m(self, o: &Scalar) -> Scalar {
                (&self).$m(o)
            }
        }
    };
}
owned_binop!(Add, add);
owned_binop!(Sub, sub);
owned_binop!(Mul, mul);

impl AddAssign<&Scalar> for Scalar {
    fn add_assign(&mut self, o: &Scalar) {
        match (&mut *self, o) {
            (Scalar::Q(a), Scalar::Q(b)) => *a += b,
            _ => *self = &*self + o,
        }
    }
}

impl SubAssign<&Scalar> for Scalar {
    fn sub_assign(&mut self, o: &Scalar) {
        match (&mut *self, o) {
            (Scalar::Q(a), Scalar::Q(b)) => *a -= b,
            _ => *self = &*self - o,
        }
    }
}
