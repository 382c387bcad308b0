use std::cmp::Ordering;
use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Serialize};

use super::{format_rational, parse_rational, rational_to_f64, square_free_split, Rational};
use crate::error::{Error, Result};

/// An element `a + b·√d` of ℚ(√d).
///
/// The representation is canonical: `d` is square-free, and a value with
/// `b = 0` is stored with `d = 1`, so derived equality is value equality.
/// Binary operations require both operands to live in the same field (or one
/// of them to be rational); anything else is [`Error::RadicandMismatch`].
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct QuadExt {
    a: Rational,
    b: Rational,
    d: u64,
}

impl QuadExt {
    /// Builds `a + b√d`, pulling square factors out of `d`.
    pub fn new(a: Rational, b: Rational, d: u64) -> Result<Self> {
        if d == 0 {
            return Err(Error::OutOfRange("radicand must be positive".into()));
        }
        let (s, d) = square_free_split(d);
        let b = b * BigInt::from(s);
        Ok(Self::normalized(a, b, d))
    }

    fn normalized(a: Rational, b: Rational, d: u64) -> Self {
        if b.is_zero() || d == 1 {
            let a = if d == 1 { a + b } else { a };
            QuadExt {
                a,
                b: Rational::zero(),
                d: 1,
            }
        } else {
            QuadExt { a, b, d }
        }
    }

    pub fn rational(a: Rational) -> Self {
        QuadExt {
            a,
            b: Rational::zero(),
            d: 1,
        }
    }

    pub fn from_int(v: i64) -> Self {
        Self::rational(Rational::from_integer(BigInt::from(v)))
    }

    pub fn zero() -> Self {
        Self::from_int(0)
    }

    pub fn one() -> Self {
        Self::from_int(1)
    }

    /// `√q` for a non-negative rational `q`, written as `(s/den)·√d`.
    pub fn sqrt_rational(q: &Rational) -> Result<Self> {
        if q.is_negative() {
            return Err(Error::OutOfRange(format!(
                "√ of negative {}",
                format_rational(q)
            )));
        }
        // √(p/q) = √(p·q)/q
        let prod = q.numer() * q.denom();
        let prod: u64 = u64::try_from(prod)
            .map_err(|_| Error::OutOfRange("radicand exceeds 64 bits".into()))?;
        let (s, d) = square_free_split(prod);
        let coef = Rational::new(BigInt::from(s), q.denom().clone());
        Ok(Self::normalized(Rational::zero(), coef, d))
    }

    pub fn a(&self) -> &Rational {
        &self.a
    }

    pub fn b(&self) -> &Rational {
        &self.b
    }

    /// Square-free radicand; `1` for rational values.
    pub fn d(&self) -> u64 {
        self.d
    }

    pub fn is_rational(&self) -> bool {
        self.b.is_zero()
    }

    pub fn as_rational(&self) -> Option<&Rational> {
        self.is_rational().then_some(&self.a)
    }

    /// The value as an integer, if it is one.
    pub fn as_integer(&self) -> Option<BigInt> {
        self.as_rational()
            .filter(|q| q.is_integer())
            .map(|q| q.to_integer())
    }

    pub fn is_zero(&self) -> bool {
        self.a.is_zero() && self.b.is_zero()
    }

    fn common_radicand(&self, other: &Self) -> Result<u64> {
        match (self.d, other.d) {
            (1, d) | (d, 1) => Ok(d),
            (x, y) if x == y => Ok(x),
            (x, y) => Err(Error::RadicandMismatch(x, y)),
        }
    }

    pub fn try_add(&self, other: &Self) -> Result<Self> {
        let d = self.common_radicand(other)?;
        Ok(Self::normalized(&self.a + &other.a, &self.b + &other.b, d))
    }

    pub fn try_sub(&self, other: &Self) -> Result<Self> {
        let d = self.common_radicand(other)?;
        Ok(Self::normalized(&self.a - &other.a, &self.b - &other.b, d))
    }

    pub fn try_mul(&self, other: &Self) -> Result<Self> {
        let d = self.common_radicand(other)?;
        let dd = Rational::from_integer(BigInt::from(d));
        let a = &self.a * &other.a + &self.b * &other.b * dd;
        let b = &self.a * &other.b + &self.b * &other.a;
        Ok(Self::normalized(a, b, d))
    }

    pub fn inverse(&self) -> Result<Self> {
        if self.is_zero() {
            return Err(Error::DivisionByZero);
        }
        // (a - b√d) / (a² - b²d); the norm is nonzero because d is not a square
        let dd = Rational::from_integer(BigInt::from(self.d));
        let norm = &self.a * &self.a - &self.b * &self.b * dd;
        Ok(Self::normalized(&self.a / &norm, -&self.b / &norm, self.d))
    }

    pub fn try_div(&self, other: &Self) -> Result<Self> {
        self.common_radicand(other)?;
        self.try_mul(&other.inverse()?)
    }

    pub fn scale(&self, q: &Rational) -> Self {
        Self::normalized(&self.a * q, &self.b * q, self.d)
    }

    /// Exact sign of `a + b√d`.
    pub fn signum(&self) -> Ordering {
        let sa = self.a.cmp(&Rational::zero());
        let sb = self.b.cmp(&Rational::zero());
        match (sa, sb) {
            (x, Ordering::Equal) => x,
            (Ordering::Equal, y) => y,
            (x, y) if x == y => x,
            (x, _) => {
                // opposite signs: compare a² with b²d
                let lhs = &self.a * &self.a;
                let rhs = &self.b * &self.b * Rational::from_integer(BigInt::from(self.d));
                match lhs.cmp(&rhs) {
                    Ordering::Greater => x,
                    Ordering::Less => x.reverse(),
                    Ordering::Equal => Ordering::Equal,
                }
            }
        }
    }

    pub fn is_positive(&self) -> bool {
        self.signum() == Ordering::Greater
    }

    pub fn is_negative(&self) -> bool {
        self.signum() == Ordering::Less
    }

    pub fn to_f64(&self) -> f64 {
        rational_to_f64(&self.a) + rational_to_f64(&self.b) * (self.d as f64).sqrt()
    }
}

impl std::ops::Neg for QuadExt {
    type Output = QuadExt;
    fn neg(self) -> QuadExt {
        QuadExt {
            a: -self.a,
            b: -self.b,
            d: self.d,
        }
    }
}

impl std::ops::Neg for &QuadExt {
    type Output = QuadExt;
    fn neg(self) -> QuadExt {
        -self.clone()
    }
}

/// Values in different fields are incomparable.
impl PartialOrd for QuadExt {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        self.try_sub(other).ok().map(|diff| diff.signum())
    }
}

impl From<Rational> for QuadExt {
    fn from(q: Rational) -> Self {
        QuadExt::rational(q)
    }
}

impl fmt::Display for QuadExt {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.b.is_zero() {
            return f.write_str(&format_rational(&self.a));
        }
        let mut out = String::new();
        if !self.a.is_zero() {
            out.push_str(&format_rational(&self.a));
            out.push(if self.b.is_negative() { '-' } else { '+' });
        } else if self.b.is_negative() {
            out.push('-');
        }
        let mag = self.b.abs();
        if !mag.is_one() {
            out.push_str(&format_rational(&mag));
            out.push('*');
        }
        out.push('√');
        out.push_str(&self.d.to_string());
        f.write_str(&out)
    }
}

/// Accepts `"2"`, `"3/2"`, `"7/4+1/4√33"`, `"(7+√33)/4"`, `"-2*sqrt(6)"`,
/// `"√33/4"` and similar; whitespace is ignored.
impl FromStr for QuadExt {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let compact: String = s.chars().filter(|c| !c.is_whitespace()).collect();
        let err = |reason: &str| Error::ParseNumber {
            input: s.to_string(),
            reason: reason.to_string(),
        };
        if compact.is_empty() {
            return Err(err("empty"));
        }
        if compact.starts_with('(') {
            let close = matching_paren(&compact).ok_or_else(|| err("unbalanced parenthesis"))?;
            let value = parse_sum(&compact[1..close], s)?;
            let rest = &compact[close + 1..];
            if rest.is_empty() {
                return Ok(value);
            }
            let divisor = rest
                .strip_prefix('/')
                .ok_or_else(|| err("expected '/' after ')'"))?;
            let q = parse_rational(divisor)?;
            if q.is_zero() {
                return Err(Error::DivisionByZero);
            }
            return Ok(value.scale(&q.recip()));
        }
        parse_sum(&compact, s)
    }
}

fn matching_paren(s: &str) -> Option<usize> {
    let mut depth = 0i32;
    for (i, c) in s.char_indices() {
        match c {
            '(' => depth += 1,
            ')' => {
                depth -= 1;
                if depth == 0 {
                    return Some(i);
                }
            }
            _ => {}
        }
    }
    None
}

fn parse_sum(s: &str, original: &str) -> Result<QuadExt> {
    let mut depth = 0i32;
    let mut prev = None;
    let mut split = None;
    for (i, c) in s.char_indices() {
        match c {
            '(' => depth += 1,
            ')' => depth -= 1,
            '+' | '-' if i > 0 && depth == 0 && !matches!(prev, Some('/') | Some('*')) => {
                split = Some(i);
                break;
            }
            _ => {}
        }
        prev = Some(c);
    }
    match split {
        None => parse_term(s, original),
        Some(i) => parse_term(&s[..i], original)?.try_add(&parse_term(&s[i..], original)?),
    }
}

fn parse_term(s: &str, original: &str) -> Result<QuadExt> {
    let err = |reason: &str| Error::ParseNumber {
        input: original.to_string(),
        reason: reason.to_string(),
    };
    let (pos, marker_len) = match (s.find('√'), s.find("sqrt")) {
        (Some(p), _) => (p, '√'.len_utf8()),
        (None, Some(p)) => (p, 4),
        (None, None) => return Ok(QuadExt::rational(parse_rational(s)?)),
    };
    let coef_str = s[..pos].strip_suffix('*').unwrap_or(&s[..pos]);
    let coef = match coef_str {
        "" | "+" => Rational::one(),
        "-" => -Rational::one(),
        c => parse_rational(c)?,
    };
    let mut rest = &s[pos + marker_len..];
    let mut divisor = Rational::one();
    let radicand_str;
    if let Some(inner) = rest.strip_prefix('(') {
        let close = inner
            .find(')')
            .ok_or_else(|| err("unbalanced parenthesis"))?;
        radicand_str = &inner[..close];
        rest = &inner[close + 1..];
        if let Some(den) = rest.strip_prefix('/') {
            divisor = parse_rational(den)?;
        } else if !rest.is_empty() {
            return Err(err("trailing characters after radicand"));
        }
    } else {
        match rest.split_once('/') {
            Some((r, den)) => {
                radicand_str = r;
                divisor = parse_rational(den)?;
            }
            None => radicand_str = rest,
        }
    }
    if divisor.is_zero() {
        return Err(Error::DivisionByZero);
    }
    if radicand_str.is_empty() || !radicand_str.bytes().all(|b| b.is_ascii_digit()) {
        return Err(err("radicand must be a positive integer"));
    }
    let d: u64 = radicand_str
        .parse()
        .map_err(|_| err("radicand out of range"))?;
    QuadExt::new(Rational::zero(), coef / divisor, d)
}

#[derive(Serialize, Deserialize)]
struct QuadExtJson {
    #[serde(with = "super::serde_rational")]
    a: Rational,
    #[serde(with = "super::serde_rational")]
    b: Rational,
    d: u64,
}

impl Serialize for QuadExt {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        QuadExtJson {
            a: self.a.clone(),
            b: self.b.clone(),
            d: self.d,
        }
        .serialize(s)
    }
}

impl<'de> Deserialize<'de> for QuadExt {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let raw = QuadExtJson::deserialize(d)?;
        QuadExt::new(raw.a, raw.b, raw.d).map_err(serde::de::Error::custom)
    }
}

impl QuadExt {
    pub fn from_json_str(s: &str) -> Result<Self> {
        Ok(serde_json::from_str(s)?)
    }

    pub fn to_json_string(&self) -> String {
        serde_json::to_string(self).expect("QuadExt serializes")
    }
}
