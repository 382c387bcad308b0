use std::cmp::Ordering;
use std::fmt;

use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use super::{format_rational, parse_rational, Rational};
use crate::error::{Error, Result};

/// Univariate polynomial over ℚ, coefficients in ascending degree.
/// Trailing zeros are stripped, so the zero polynomial has no coefficients.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Default)]
pub struct RationalPoly {
    coeffs: Vec<Rational>,
}

/// Interval endpoint for root counting.
#[derive(Clone, Debug, PartialEq)]
pub enum Bound {
    NegInf,
    Finite(Rational),
    PosInf,
}

impl RationalPoly {
    pub fn new(mut coeffs: Vec<Rational>) -> Self {
        while coeffs.last().is_some_and(Zero::is_zero) {
            coeffs.pop();
        }
        RationalPoly { coeffs }
    }

    pub fn from_i64(coeffs: &[i64]) -> Self {
        Self::new(
            coeffs
                .iter()
                .map(|&c| Rational::from_integer(c.into()))
                .collect(),
        )
    }

    pub fn zero() -> Self {
        RationalPoly { coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        Self::constant(Rational::one())
    }

    pub fn constant(c: Rational) -> Self {
        Self::new(vec![c])
    }

    /// `x`
    pub fn x() -> Self {
        Self::from_i64(&[0, 1])
    }

    pub fn coeffs(&self) -> &[Rational] {
        &self.coeffs
    }

    pub fn coeff(&self, k: usize) -> Rational {
        self.coeffs.get(k).cloned().unwrap_or_else(Rational::zero)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn leading(&self) -> Option<&Rational> {
        self.coeffs.last()
    }

    pub fn eval(&self, x: &Rational) -> Rational {
        self.coeffs
            .iter()
            .rev()
            .fold(Rational::zero(), |acc, c| acc * x + c)
    }

    pub fn eval_f64(&self, x: f64) -> f64 {
        self.coeffs
            .iter()
            .rev()
            .fold(0.0, |acc, c| acc * x + super::rational_to_f64(c))
    }

    pub fn add(&self, other: &Self) -> Self {
        let len = self.coeffs.len().max(other.coeffs.len());
        Self::new((0..len).map(|k| self.coeff(k) + other.coeff(k)).collect())
    }

    pub fn sub(&self, other: &Self) -> Self {
        let len = self.coeffs.len().max(other.coeffs.len());
        Self::new((0..len).map(|k| self.coeff(k) - other.coeff(k)).collect())
    }

    pub fn neg(&self) -> Self {
        Self::new(self.coeffs.iter().map(|c| -c).collect())
    }

    pub fn scale(&self, s: &Rational) -> Self {
        Self::new(self.coeffs.iter().map(|c| c * s).collect())
    }

    /// Exact product; this is how factorization identities are confirmed.
    pub fn mul(&self, other: &Self) -> Self {
        if self.is_zero() || other.is_zero() {
            return Self::zero();
        }
        let mut out = vec![Rational::zero(); self.coeffs.len() + other.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.coeffs.iter().enumerate() {
                out[i + j] += a * b;
            }
        }
        Self::new(out)
    }

    pub fn derivative(&self) -> Self {
        Self::new(
            self.coeffs
                .iter()
                .enumerate()
                .skip(1)
                .map(|(k, c)| c * Rational::from_integer(k.into()))
                .collect(),
        )
    }

    /// Euclidean division `self = q·divisor + r` with `deg r < deg divisor`.
    pub fn div_rem(&self, divisor: &Self) -> Result<(Self, Self)> {
        let dlead = divisor.leading().ok_or(Error::DivisionByZero)?;
        let ddeg = divisor.coeffs.len() - 1;
        let mut rem = self.coeffs.clone();
        if rem.len() <= ddeg {
            return Ok((Self::zero(), self.clone()));
        }
        let mut quot = vec![Rational::zero(); rem.len() - ddeg];
        for k in (0..quot.len()).rev() {
            let c = &rem[k + ddeg] / dlead;
            if !c.is_zero() {
                for (j, dc) in divisor.coeffs.iter().enumerate() {
                    rem[k + j] -= &c * dc;
                }
            }
            quot[k] = c;
        }
        rem.truncate(ddeg);
        Ok((Self::new(quot), Self::new(rem)))
    }

    pub fn monic(&self) -> Self {
        match self.leading() {
            Some(l) => self.scale(&l.recip()),
            None => Self::zero(),
        }
    }

    /// Monic greatest common divisor; zero only if both inputs are zero.
    pub fn gcd(&self, other: &Self) -> Self {
        let (mut a, mut b) = (self.clone(), other.clone());
        while !b.is_zero() {
            let (_, r) = a.div_rem(&b).expect("nonzero divisor");
            a = b;
            b = r;
        }
        a.monic()
    }

    /// `p / gcd(p, p')`: same roots, all simple.
    pub fn square_free_part(&self) -> Result<Self> {
        if self.is_zero() {
            return Err(Error::ZeroPolynomial);
        }
        let g = self.gcd(&self.derivative());
        Ok(self.div_rem(&g)?.0)
    }

    pub fn is_square_free(&self) -> bool {
        !self.is_zero() && self.gcd(&self.derivative()).degree() == Some(0)
    }

    /// Sturm chain `p, p', -rem(p, p'), …`.
    pub fn sturm_sequence(&self) -> Result<Vec<Self>> {
        if self.is_zero() {
            return Err(Error::ZeroPolynomial);
        }
        let mut seq = vec![self.clone()];
        let mut next = self.derivative();
        while !next.is_zero() {
            let prev = seq.last().expect("nonempty");
            let (_, r) = prev.div_rem(&next)?;
            seq.push(next);
            next = r.neg();
        }
        Ok(seq)
    }

    fn sign_at(&self, at: &Bound) -> Ordering {
        let Some(lead) = self.leading() else {
            return Ordering::Equal;
        };
        let lead_sign = lead.cmp(&Rational::zero());
        match at {
            Bound::PosInf => lead_sign,
            Bound::NegInf => {
                if self.coeffs.len() % 2 == 0 {
                    lead_sign.reverse()
                } else {
                    lead_sign
                }
            }
            Bound::Finite(x) => self.eval(x).cmp(&Rational::zero()),
        }
    }

    /// Number of distinct real roots in `(lo, hi]`, by Sturm's theorem.
    /// The polynomial should be square-free (see [`Self::square_free_part`]).
    pub fn sturm_count_roots(&self, lo: &Bound, hi: &Bound) -> Result<usize> {
        let seq = self.sturm_sequence()?;
        let ordered = match (lo, hi) {
            (Bound::PosInf, _) | (_, Bound::NegInf) => false,
            (Bound::NegInf, _) | (_, Bound::PosInf) => true,
            (Bound::Finite(a), Bound::Finite(b)) => a < b,
        };
        if !ordered {
            return Err(Error::InvalidInterval);
        }
        let variations = |at: &Bound| {
            let signs: Vec<Ordering> = seq
                .iter()
                .map(|p| p.sign_at(at))
                .filter(|s| *s != Ordering::Equal)
                .collect();
            signs.windows(2).filter(|w| w[0] != w[1]).count()
        };
        Ok(variations(lo) - variations(hi))
    }

    pub fn count_real_roots(&self) -> Result<usize> {
        self.sturm_count_roots(&Bound::NegInf, &Bound::PosInf)
    }

    pub fn from_json_str(s: &str) -> Result<Self> {
        Ok(serde_json::from_str(s)?)
    }

    pub fn to_json_string(&self) -> String {
        serde_json::to_string(self).expect("polynomial serializes")
    }
}

impl Serialize for RationalPoly {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.collect_seq(self.coeffs.iter().map(format_rational))
    }
}

impl<'de> Deserialize<'de> for RationalPoly {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let raw = Vec::<String>::deserialize(d)?;
        raw.iter()
            .map(|s| parse_rational(s))
            .collect::<Result<Vec<_>>>()
            .map(RationalPoly::new)
            .map_err(serde::de::Error::custom)
    }
}

impl fmt::Display for RationalPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        let mut first = true;
        for (k, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            let sign = if c.is_negative() { "-" } else { "+" };
            if first {
                if c.is_negative() {
                    f.write_str("-")?;
                }
            } else {
                write!(f, " {sign} ")?;
            }
            first = false;
            let mag = c.abs();
            let show_coef = !mag.is_one() || k == 0;
            if show_coef {
                f.write_str(&format_rational(&mag))?;
            }
            match k {
                0 => {}
                1 => f.write_str("x")?,
                _ => write!(f, "x^{k}")?,
            }
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactnum::{int, rat};

    #[test]
    fn products() {
        let p = RationalPoly::from_i64(&[-1, 1]);
        let q = RationalPoly::from_i64(&[1, 1]);
        assert_eq!(p.mul(&q), RationalPoly::from_i64(&[-1, 0, 1]));
        assert_eq!(p.mul(&RationalPoly::one()), p);
        assert!(p.mul(&RationalPoly::zero()).is_zero());
    }

    #[test]
    fn division() {
        let p = RationalPoly::from_i64(&[-1, 0, 0, 1]); // x³ - 1
        let d = RationalPoly::from_i64(&[-1, 1]);
        let (q, r) = p.div_rem(&d).unwrap();
        assert_eq!(q, RationalPoly::from_i64(&[1, 1, 1]));
        assert!(r.is_zero());
        assert_eq!(p.div_rem(&RationalPoly::zero()), Err(Error::DivisionByZero));
    }

    #[test]
    fn gcd_and_square_free() {
        // (x-1)²(x+2)
        let p = RationalPoly::from_i64(&[-1, 1])
            .mul(&RationalPoly::from_i64(&[-1, 1]))
            .mul(&RationalPoly::from_i64(&[2, 1]));
        assert!(!p.is_square_free());
        let sf = p.square_free_part().unwrap();
        assert_eq!(sf.monic(), RationalPoly::from_i64(&[-2, 1, 1]));
        assert_eq!(p.count_real_roots().unwrap(), 2);
    }

    #[test]
    fn sturm_simple_cases() {
        let p = RationalPoly::from_i64(&[1, 0, 1]); // x² + 1
        assert_eq!(p.count_real_roots().unwrap(), 0);
        let q = RationalPoly::from_i64(&[-2, 0, 1]); // x² - 2
        assert_eq!(q.count_real_roots().unwrap(), 2);
        let zero = Bound::Finite(int(0));
        assert_eq!(q.sturm_count_roots(&zero, &Bound::PosInf).unwrap(), 1);
        // (lo, hi] includes a root at hi and excludes one at lo
        let c = RationalPoly::from_i64(&[0, -1, 0, 1]); // x³ - x
        let one = Bound::Finite(int(1));
        assert_eq!(c.sturm_count_roots(&zero, &one).unwrap(), 1);
        assert_eq!(
            c.sturm_count_roots(&Bound::Finite(int(-1)), &zero).unwrap(),
            1
        );
        assert_eq!(
            c.sturm_count_roots(&Bound::Finite(rat(1, 2)), &Bound::Finite(rat(3, 4)))
                .unwrap(),
            0
        );
        assert_eq!(
            RationalPoly::zero().count_real_roots(),
            Err(Error::ZeroPolynomial)
        );
        assert_eq!(
            c.sturm_count_roots(&one, &zero),
            Err(Error::InvalidInterval)
        );
        assert_eq!(RationalPoly::from_i64(&[5]).count_real_roots().unwrap(), 0);
    }

    #[test]
    fn json_and_display() {
        let p = RationalPoly::new(vec![rat(1, 2), int(0), int(-3)]);
        assert_eq!(p.to_json_string(), r#"["1/2","0","-3"]"#);
        assert_eq!(
            RationalPoly::from_json_str(r#"["1/2","0","-3","0"]"#).unwrap(),
            p
        );
        assert!(RationalPoly::from_json_str(r#"["1/0"]"#).is_err());
        assert_eq!(p.to_string(), "-3x^2 + 1/2");
    }
}
