//! Exact base-field scalars: arbitrary-precision rationals or integers mod p.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

use crate::error::{Error, Result};

/// The base field every computation is carried out over.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug)]
pub enum Field {
    /// Arbitrary-precision rationals.
    Q,
    /// Integers modulo a prime `p < 2^31`.
    Fp(u32),
}

impl Field {
    pub fn prime(p: u64) -> Result<Field> {
        if p >= (1 << 31) || !is_prime(p) {
            return Err(Error::BadModulus(p));
        }
        Ok(Field::Fp(p as u32))
    }
}

impl Default for Field {
    fn default() -> Field {
        Field::Q
    }
}

impl fmt::Display for Field {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Field::Q => write!(f, "Q"),
            Field::Fp(p) => write!(f, "F{p}"),
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

/// One exact field element. Rationals are kept in lowest terms with a
/// positive denominator; mod-p values lie in `[0, p)`.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub enum Scalar {
    Q(BigRational),
    Fp { p: u32, val: u32 },
}

impl Scalar {
    pub fn zero(field: Field) -> Scalar {
        match field {
            Field::Q => Scalar::Q(BigRational::zero()),
            Field::Fp(p) => Scalar::Fp { p, val: 0 },
        }
    }

    pub fn one(field: Field) -> Scalar {
        match field {
            Field::Q => Scalar::Q(BigRational::one()),
            Field::Fp(p) => Scalar::Fp { p, val: 1 % p },
        }
    }

    pub fn from_i64(n: i64, field: Field) -> Scalar {
        match field {
            Field::Q => Scalar::Q(BigRational::from_integer(BigInt::from(n))),
            Field::Fp(p) => {
                let m = n.rem_euclid(p as i64) as u32;
                Scalar::Fp { p, val: m }
            }
        }
    }

    pub fn ratio(num: i64, den: i64, field: Field) -> Result<Scalar> {
        if den == 0 {
            return Err(Error::DivisionByZero);
        }
        match field {
            Field::Q => Ok(Scalar::Q(BigRational::new(
                BigInt::from(num),
                BigInt::from(den),
            ))),
            Field::Fp(_) => {
                let d = Scalar::from_i64(den, field);
                Scalar::from_i64(num, field).div(&d)
            }
        }
    }

    pub fn field(&self) -> Field {
        match self {
            Scalar::Q(_) => Field::Q,
            Scalar::Fp { p, .. } => Field::Fp(*p),
        }
    }

    pub fn is_zero(&self) -> bool {
        match self {
            Scalar::Q(r) => r.is_zero(),
            Scalar::Fp { val, .. } => *val == 0,
        }
    }

    pub fn is_one(&self) -> bool {
        self == &Scalar::one(self.field())
    }

    fn check(&self, other: &Scalar) -> Result<()> {
        if self.field() != other.field() {
            return Err(Error::FieldMismatch(self.field(), other.field()));
        }
        Ok(())
    }

    pub fn add(&self, other: &Scalar) -> Result<Scalar> {
        self.check(other)?;
        Ok(match (self, other) {
            (Scalar::Q(a), Scalar::Q(b)) => Scalar::Q(a + b),
            (Scalar::Fp { p, val: a }, Scalar::Fp { val: b, .. }) => Scalar::Fp {
                p: *p,
                val: ((*a as u64 + *b as u64) % *p as u64) as u32,
            },
            _ => unreachable!(),
        })
    }

    pub fn sub(&self, other: &Scalar) -> Result<Scalar> {
        self.add(&other.neg())
    }

    pub fn mul(&self, other: &Scalar) -> Result<Scalar> {
        self.check(other)?;
        Ok(match (self, other) {
            (Scalar::Q(a), Scalar::Q(b)) => Scalar::Q(a * b),
            (Scalar::Fp { p, val: a }, Scalar::Fp { val: b, .. }) => Scalar::Fp {
                p: *p,
                val: ((*a as u64 * *b as u64) % *p as u64) as u32,
            },
            _ => unreachable!(),
        })
    }

    pub fn neg(&self) -> Scalar {
        match self {
            Scalar::Q(a) => Scalar::Q(-a),
            Scalar::Fp { p, val } => Scalar::Fp {
                p: *p,
                val: if *val == 0 { 0 } else { p - val },
            },
        }
    }

    /// Multiplicative inverse; errors on zero.
    pub fn inv(&self) -> Result<Scalar> {
        if self.is_zero() {
            return Err(Error::DivisionByZero);
        }
        Ok(match self {
            Scalar::Q(a) => Scalar::Q(a.recip()),
            Scalar::Fp { p, val } => Scalar::Fp {
                p: *p,
                val: mod_pow(*val as u64, *p as u64 - 2, *p as u64) as u32,
            },
        })
    }

    pub fn div(&self, other: &Scalar) -> Result<Scalar> {
        self.mul(&other.inv()?)
    }

    /// Parses the canonical literal forms: `"3"`, `"-7/4"` over Q and
    /// `"12"` or `"12 mod 101"` over F_p.
    pub fn parse(text: &str, field: Field) -> Result<Scalar> {
        let bad = |reason: &str| Error::BadScalar {
            text: text.to_string(),
            reason: reason.to_string(),
        };
        let text = text.trim();
        match field {
            Field::Q => {
                if text.contains("mod") {
                    return Err(bad("`mod` literal in a rational workspace"));
                }
                let (num, den) = match text.split_once('/') {
                    Some((n, d)) => (n.trim(), d.trim()),
                    None => (text, "1"),
                };
                let n: BigInt = num.parse().map_err(|_| bad("bad numerator"))?;
                let d: BigInt = den.parse().map_err(|_| bad("bad denominator"))?;
                if d.is_zero() {
                    return Err(bad("zero denominator"));
                }
                Ok(Scalar::Q(BigRational::new(n, d)))
            }
            Field::Fp(p) => {
                let body = match text.split_once("mod") {
                    Some((v, m)) => {
                        let m: u64 = m.trim().parse().map_err(|_| bad("bad modulus"))?;
                        if m != p as u64 {
                            return Err(bad(&format!("modulus {m} does not match field F{p}")));
                        }
                        v.trim()
                    }
                    None => text,
                };
                if body.contains('/') {
                    let (n, d) = body.split_once('/').unwrap();
                    let n: i64 = n.trim().parse().map_err(|_| bad("bad numerator"))?;
                    let d: i64 = d.trim().parse().map_err(|_| bad("bad denominator"))?;
                    return Scalar::ratio(n, d, field);
                }
                let v: i64 = body.parse().map_err(|_| bad("bad residue"))?;
                Ok(Scalar::from_i64(v, field))
            }
        }
    }

    /// Canonical text form, the inverse of [`Scalar::parse`].
    pub fn canonical(&self) -> String {
        match self {
            Scalar::Q(r) => {
                if r.denom().is_one() {
                    r.numer().to_string()
                } else {
                    format!("{}/{}", r.numer(), r.denom())
                }
            }
            Scalar::Fp { p, val } => format!("{val} mod {p}"),
        }
    }

    pub(crate) fn as_rational(&self) -> Option<&BigRational> {
        match self {
            Scalar::Q(r) => Some(r),
            _ => None,
        }
    }

}

fn mod_pow(mut base: u64, mut exp: u64, modulus: u64) -> u64 {
    let mut acc = 1u64;
    base %= modulus;
    while exp > 0 {
        if exp & 1 == 1 {
            acc = acc * base % modulus;
        }
        base = base * base % modulus;
        exp >>= 1;
    }
    acc
}

impl fmt::Display for Scalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Scalar::Q(r) => write!(f, "{r}"),
            Scalar::Fp { val, .. } => write!(f, "{val}"),
        }
    }
}

// Operator impls panic on field mismatch; matrix-level entry points validate
// fields before any entrywise arithmetic runs.
impl Add for &Scalar {
    type Output = Scalar;
    fn add(self, rhs: &Scalar) -> Scalar {
        Scalar::add(self, rhs).expect("scalar field mismatch")
    }
}

impl Sub for &Scalar {
    type Output = Scalar;
    fn sub(self, rhs: &Scalar) -> Scalar {
        Scalar::sub(self, rhs).expect("scalar field mismatch")
    }
}

impl Mul for &Scalar {
    type Output = Scalar;
    fn mul(self, rhs: &Scalar) -> Scalar {
        Scalar::mul(self, rhs).expect("scalar field mismatch")
    }
}

impl Neg for &Scalar {
    type Output = Scalar;
    fn neg(self) -> Scalar {
        Scalar::neg(self)
    }
}
