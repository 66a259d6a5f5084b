//! Exact integer and rational arithmetic.
//!
//! [`Rational`] keeps a canonical representation at all times: the
//! denominator is strictly positive, numerator and denominator are coprime,
//! and zero is `0/1`. Two rationals are therefore equal exactly when their
//! fields are equal, which is what the derived `Eq` and `Hash` rely on.
//!
//! Integers are [`num_bigint::BigInt`], so no value arising from the
//! factorials used throughout the crate can overflow.

use std::cmp::Ordering;
use std::fmt;
use std::iter::{Product, Sum};
use std::ops::{Add, AddAssign, Div, Mul, MulAssign, Neg, Sub, SubAssign};
use std::str::FromStr;
use std::sync::RwLock;

pub use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{Error, Result};

/// An arbitrary-precision fraction in lowest terms.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Rational {
    num: BigInt,
    den: BigInt,
}

impl Rational {
    /// Builds the canonical form of `num / den`.
    pub fn new(num: BigInt, den: BigInt) -> Result<Self> {
        if den.is_zero() {
            return Err(Error::ZeroDenominator);
        }
        Ok(Self::reduce(num, den))
    }

    pub fn from_integer(value: impl Into<BigInt>) -> Self {
        Rational {
            num: value.into(),
            den: BigInt::one(),
        }
    }

    /// Convenience constructor for small literals. Panics on a zero denominator.
    pub fn ratio(num: i64, den: i64) -> Self {
        Self::new(num.into(), den.into()).expect("ratio with zero denominator")
    }

    pub fn zero() -> Self {
        Self::from_integer(0)
    }

    pub fn one() -> Self {
        Self::from_integer(1)
    }

    fn reduce(num: BigInt, den: BigInt) -> Self {
        let g = num.gcd(&den);
        let (mut num, mut den) = if g.is_one() { (num, den) } else { (num / &g, den / &g) };
        if den.is_negative() {
            num = -num;
            den = -den;
        }
        if num.is_zero() {
            den = BigInt::one();
        }
        let r = Rational { num, den };
        debug_assert!(r.is_canonical());
        r
    }

    pub fn numer(&self) -> &BigInt {
        &self.num
    }

    pub fn denom(&self) -> &BigInt {
        &self.den
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    pub fn is_one(&self) -> bool {
        self.num.is_one() && self.den.is_one()
    }

    pub fn is_integer(&self) -> bool {
        self.den.is_one()
    }

    pub fn is_negative(&self) -> bool {
        self.num.is_negative()
    }

    /// The integer value, if this rational is an integer fitting in `i64`.
    pub fn to_i64(&self) -> Option<i64> {
        if self.is_integer() {
            self.num.to_i64()
        } else {
            None
        }
    }

    /// Checks the representation invariants: positive denominator, coprime
    /// fields, zero stored as `0/1`.
    pub fn is_canonical(&self) -> bool {
        self.den.is_positive()
            && self.num.gcd(&self.den).is_one()
            && (!self.num.is_zero() || self.den.is_one())
    }

    pub fn recip(&self) -> Result<Self> {
        Self::new(self.den.clone(), self.num.clone())
    }

    pub fn pow(&self, exp: u32) -> Self {
        // Powers of coprime integers stay coprime.
        Rational {
            num: num_traits::pow(self.num.clone(), exp as usize),
            den: num_traits::pow(self.den.clone(), exp as usize),
        }
    }

    pub fn mul_int(&self, k: &BigInt) -> Self {
        if k.is_zero() || self.is_zero() {
            return Self::zero();
        }
        let g = k.gcd(&self.den);
        if g.is_one() {
            Rational {
                num: &self.num * k,
                den: self.den.clone(),
            }
        } else {
            Self::reduce(&self.num * (k / &g), &self.den / &g)
        }
    }

    pub fn div_int(&self, k: &BigInt) -> Result<Self> {
        Self::new(self.num.clone(), &self.den * k)
    }

    /// Text form that always carries a denominator, e.g. `21/1`.
    pub fn to_canonical_string(&self) -> String {
        format!("{}/{}", self.num, self.den)
    }

    /// Parses `[-]digits[/digits]`. Non-canonical input such as `4/8` is
    /// reduced rather than rejected.
    pub fn parse(text: &str) -> Result<Self> {
        let err = |position: usize, reason: &'static str| Error::Parse {
            text: text.to_string(),
            position,
            reason,
        };
        let bytes = text.as_bytes();
        let mut pos = 0;
        let negative = bytes.first() == Some(&b'-');
        if negative {
            pos += 1;
        }
        let num_start = pos;
        while pos < bytes.len() && bytes[pos].is_ascii_digit() {
            pos += 1;
        }
        if pos == num_start {
            return Err(err(pos, "expected a decimal digit"));
        }
        let num_end = pos;
        let den = if pos < bytes.len() {
            if bytes[pos] != b'/' {
                return Err(err(pos, "expected '/' or end of input"));
            }
            pos += 1;
            let den_start = pos;
            while pos < bytes.len() && bytes[pos].is_ascii_digit() {
                pos += 1;
            }
            if pos == den_start {
                return Err(err(pos, "expected a decimal digit after '/'"));
            }
            if pos < bytes.len() {
                return Err(err(pos, "unexpected trailing character"));
            }
            let den: BigInt = text[den_start..pos].parse().expect("ascii digits");
            if den.is_zero() {
                return Err(err(den_start, "zero denominator"));
            }
            den
        } else {
            BigInt::one()
        };
        let mut num: BigInt = text[num_start..num_end].parse().expect("ascii digits");
        if negative {
            num = -num;
        }
        Ok(Self::reduce(num, den))
    }
}

impl Default for Rational {
    fn default() -> Self {
        Self::zero()
    }
}

impl From<i64> for Rational {
    fn from(v: i64) -> Self {
        Self::from_integer(v)
    }
}

impl From<BigInt> for Rational {
    fn from(v: BigInt) -> Self {
        Self::from_integer(v)
    }
}

impl FromStr for Rational {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        Self::parse(s)
    }
}

/// Plain form: integers print without `/1`.
impl fmt::Display for Rational {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.den.is_one() {
            write!(f, "{}", self.num)
        } else {
            write!(f, "{}/{}", self.num, self.den)
        }
    }
}

impl fmt::Debug for Rational {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}/{}", self.num, self.den)
    }
}

impl Serialize for Rational {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.collect_str(self)
    }
}

impl<'de> Deserialize<'de> for Rational {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let text = String::deserialize(d)?;
        Rational::parse(&text).map_err(serde::de::Error::custom)
    }
}

impl Ord for Rational {
    fn cmp(&self, other: &Self) -> Ordering {
        (&self.num * &other.den).cmp(&(&other.num * &self.den))
    }
}

impl PartialOrd for Rational {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Add<&Rational> for &Rational {
    type Output = Rational;
    fn add(self, rhs: &Rational) -> Rational {
        if self.is_zero() {
            return rhs.clone();
        }
        if rhs.is_zero() {
            return self.clone();
        }
        if self.den == rhs.den {
            return Rational::reduce(&self.num + &rhs.num, self.den.clone());
        }
        // Henrici: only the shared factor of the denominators can cancel.
        let g = self.den.gcd(&rhs.den);
        if g.is_one() {
            return Rational {
                num: &self.num * &rhs.den + &rhs.num * &self.den,
                den: &self.den * &rhs.den,
            };
        }
        let ld = &self.den / &g;
        let rd = &rhs.den / &g;
        let t = &self.num * &rd + &rhs.num * &ld;
        let g2 = t.gcd(&g);
        if t.is_zero() {
            return Rational::zero();
        }
        Rational {
            num: &t / &g2,
            den: ld * (&rhs.den / &g2),
        }
    }
}

impl Mul<&Rational> for &Rational {
    type Output = Rational;
    fn mul(self, rhs: &Rational) -> Rational {
        if self.is_zero() || rhs.is_zero() {
            return Rational::zero();
        }
        if self.den.is_one() && rhs.den.is_one() {
            return Rational::from_integer(&self.num * &rhs.num);
        }
        let g1 = self.num.gcd(&rhs.den);
        let g2 = rhs.num.gcd(&self.den);
        Rational {
            num: (&self.num / &g1) * (&rhs.num / &g2),
            den: (&self.den / &g2) * (&rhs.den / &g1),
        }
    }
}

impl Neg for &Rational {
    type Output = Rational;
    fn neg(self) -> Rational {
        Rational {
            num: -&self.num,
            den: self.den.clone(),
        }
    }
}

impl Neg for Rational {
    type Output = Rational;
    fn neg(self) -> Rational {
        Rational {
            num: -self.num,
            den: self.den,
        }
    }
}

impl Sub<&Rational> for &Rational {
    type Output = Rational;
    fn sub(self, rhs: &Rational) -> Rational {
        self + &(-rhs)
    }
}

/// Panics on division by zero, like integer division.
impl Div<&Rational> for &Rational {
    type Output = Rational;
    #[allow(clippy::suspicious_arithmetic_impl)]
    fn div(self, rhs: &Rational) -> Rational {
        self * &rhs.recip().expect("division by zero rational")
    }
}

macro_rules! forward_owned {
    ($($tr:ident $m:ident),*) => {$(
        impl $tr<Rational> for Rational {
            type Output = Rational;
            fn $m(self, rhs: Rational) -> Rational { (&self).$m(&rhs) }
        }
        impl $tr<&Rational> for Rational {
            type Output = Rational;
            fn $m(self, rhs: &Rational) -> Rational { (&self).$m(rhs) }
        }
        impl $tr<Rational> for &Rational {
            type Output = Rational;
            fn $m(self, rhs: Rational) -> Rational { self.$m(&rhs) }
        }
    )*};
}
forward_owned!(Add add, Sub sub, Mul mul, Div div);

impl AddAssign<&Rational> for Rational {
    fn add_assign(&mut self, rhs: &Rational) {
        *self = &*self + rhs;
    }
}

impl AddAssign for Rational {
    fn add_assign(&mut self, rhs: Rational) {
        *self = &*self + &rhs;
    }
}

impl SubAssign<&Rational> for Rational {
    fn sub_assign(&mut self, rhs: &Rational) {
        *self = &*self - rhs;
    }
}

impl MulAssign<&Rational> for Rational {
    fn mul_assign(&mut self, rhs: &Rational) {
        *self = &*self * rhs;
    }
}

impl Sum for Rational {
    fn sum<I: Iterator<Item = Rational>>(iter: I) -> Self {
        iter.fold(Rational::zero(), |acc, x| acc + x)
    }
}

impl<'a> Sum<&'a Rational> for Rational {
    fn sum<I: Iterator<Item = &'a Rational>>(iter: I) -> Self {
        iter.fold(Rational::zero(), |acc, x| acc + x)
    }
}

impl Product for Rational {
    fn product<I: Iterator<Item = Rational>>(iter: I) -> Self {
        iter.fold(Rational::one(), |acc, x| acc * x)
    }
}

impl<'a> Product<&'a Rational> for Rational {
    fn product<I: Iterator<Item = &'a Rational>>(iter: I) -> Self {
        iter.fold(Rational::one(), |acc, x| acc * x)
    }
}

// Process-wide memo of 0!, 1!, 2!, ... grown on demand.
static FACTORIALS: RwLock<Vec<BigInt>> = RwLock::new(Vec::new());

/// `n!`, served from a shared table that grows to the largest index requested.
pub fn factorial(n: usize) -> BigInt {
    {
        let table = FACTORIALS.read().unwrap_or_else(|e| e.into_inner());
        if let Some(f) = table.get(n) {
            return f.clone();
        }
    }
    let mut table = FACTORIALS.write().unwrap_or_else(|e| e.into_inner());
    if table.is_empty() {
        table.push(BigInt::one());
    }
    while table.len() <= n {
        let k = table.len();
        let next = &table[k - 1] * BigInt::from(k);
        table.push(next);
    }
    table[n].clone()
}

/// `(k1 + k2 + ...)! / (k1! k2! ...)`.
pub fn multinomial(counts: &[usize]) -> BigInt {
    let total: usize = counts.iter().sum();
    let mut denom = BigInt::one();
    for &k in counts {
        if k > 1 {
            denom *= factorial(k);
        }
    }
    factorial(total) / denom
}
