//! Dense univariate polynomials and rationals over exact integers.

use std::fmt;
use std::ops::{Add, Mul, Sub};

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Deserializer, Serialize, Serializer};

/// `coeffs[i]` is the coefficient of `x^i`. Trailing zeros are trimmed, so the
/// zero polynomial has no coefficients.
#[derive(Clone, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Polynomial {
    coeffs: Vec<BigInt>,
}

impl Polynomial {
    pub fn new(coeffs: Vec<BigInt>) -> Self {
        let mut p = Polynomial { coeffs };
        p.normalize();
        p
    }

    pub fn from_i64s(coeffs: &[i64]) -> Self {
        Self::new(coeffs.iter().map(|&c| BigInt::from(c)).collect())
    }

    pub fn zero() -> Self {
        Polynomial { coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        Self::monomial(BigInt::one(), 0)
    }

    /// `x^k`.
    pub fn x_pow(k: usize) -> Self {
        Self::monomial(BigInt::one(), k)
    }

    pub fn monomial(c: BigInt, k: usize) -> Self {
        let mut coeffs = vec![BigInt::zero(); k + 1];
        coeffs[k] = c;
        Self::new(coeffs)
    }

    fn normalize(&mut self) {
        while self.coeffs.last().is_some_and(Zero::is_zero) {
            self.coeffs.pop();
        }
    }

    pub fn coeffs(&self) -> &[BigInt] {
        &self.coeffs
    }

    pub fn coeff(&self, i: usize) -> BigInt {
        self.coeffs.get(i).cloned().unwrap_or_default()
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    /// Degree of the lowest non-zero term.
    pub fn low_degree(&self) -> Option<usize> {
        self.coeffs.iter().position(|c| !c.is_zero())
    }

    /// Horner evaluation.
    pub fn evaluate(&self, x: &BigInt) -> BigInt {
        self.coeffs.iter().rev().fold(BigInt::zero(), |acc, c| acc * x + c)
    }

    pub fn evaluate_i64(&self, x: i64) -> BigInt {
        self.evaluate(&BigInt::from(x))
    }

    /// Multiply by `x^k`.
    pub fn shift(&self, k: usize) -> Self {
        if self.is_zero() {
            return Self::zero();
        }
        let mut coeffs = vec![BigInt::zero(); k];
        coeffs.extend(self.coeffs.iter().cloned());
        Polynomial { coeffs }
    }

    pub fn scale(&self, c: &BigInt) -> Self {
        Self::new(self.coeffs.iter().map(|a| a * c).collect())
    }

    /// `p(x + 1)`.
    pub fn shift_argument_by_one(&self) -> Self {
        // Horner with (x + 1) as the variable
        let x_plus_one = Polynomial::from_i64s(&[1, 1]);
        self.coeffs
            .iter()
            .rev()
            .fold(Polynomial::zero(), |acc, c| &(&acc * &x_plus_one) + &Polynomial::monomial(c.clone(), 0))
    }

    /// Coefficients `a_1, ..., a_len` (index 0 dropped), zero padded to `len`.
    pub fn padded_tail(&self, len: usize) -> Vec<BigInt> {
        (1..=len).map(|i| self.coeff(i)).collect()
    }

    /// Decimal coefficient strings, index = power.
    pub fn to_json(&self) -> serde_json::Value {
        serde_json::Value::Array(self.coeffs.iter().map(|c| serde_json::Value::String(c.to_string())).collect())
    }
}

impl Serialize for Polynomial {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        s.collect_seq(self.coeffs.iter().map(|c| c.to_string()))
    }
}

impl<'de> Deserialize<'de> for Polynomial {
    fn deserialize<D: Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        let strs = Vec::<String>::deserialize(d)?;
        let coeffs = strs
            .iter()
            .map(|s| s.parse::<BigInt>().map_err(serde::de::Error::custom))
            .collect::<Result<Vec<_>, _>>()?;
        Ok(Polynomial::new(coeffs))
    }
}

impl Add for &Polynomial {
    type Output = Polynomial;

    fn add(self, rhs: &Polynomial) -> Polynomial {
        let len = self.coeffs.len().max(rhs.coeffs.len());
        Polynomial::new((0..len).map(|i| self.coeff(i) + rhs.coeff(i)).collect())
    }
}

impl Sub for &Polynomial {
    type Output = Polynomial;

    fn sub(self, rhs: &Polynomial) -> Polynomial {
        let len = self.coeffs.len().max(rhs.coeffs.len());
        Polynomial::new((0..len).map(|i| self.coeff(i) - rhs.coeff(i)).collect())
    }
}

impl Mul for &Polynomial {
    type Output = Polynomial;

    fn mul(self, rhs: &Polynomial) -> Polynomial {
        if self.is_zero() || rhs.is_zero() {
            return Polynomial::zero();
        }
        let mut out = vec![BigInt::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                out[i + j] += a * b;
            }
        }
        Polynomial::new(out)
    }
}

/// Non-zero terms in descending powers: `10x^2 + 12x`. The zero polynomial is `0`.
impl fmt::Display for Polynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for (i, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            let mag = c.abs();
            if first {
                if c.is_negative() {
                    f.write_str("-")?;
                }
            } else {
                f.write_str(if c.is_negative() { " - " } else { " + " })?;
            }
            first = false;
            let show_coeff = i == 0 || !mag.is_one();
            if show_coeff {
                write!(f, "{mag}")?;
            }
            match i {
                0 => {}
                1 => f.write_str("x")?,
                _ => write!(f, "x^{i}")?,
            }
        }
        if first {
            f.write_str("0")?;
        }
        Ok(())
    }
}

impl fmt::Debug for Polynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Polynomial({self})")
    }
}

/// Reduced fraction with positive denominator.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Rational {
    num: BigInt,
    den: BigInt,
}

impl Rational {
    /// `None` when `den` is zero.
    pub fn new(num: BigInt, den: BigInt) -> Option<Self> {
        if den.is_zero() {
            return None;
        }
        let g = num.gcd(&den);
        let (mut num, mut den) = (num / &g, den / &g);
        if den.is_negative() {
            num = -num;
            den = -den;
        }
        Some(Rational { num, den })
    }

    pub fn num(&self) -> &BigInt {
        &self.num
    }

    pub fn den(&self) -> &BigInt {
        &self.den
    }

    pub fn floor(&self) -> BigInt {
        self.num.div_floor(&self.den)
    }

    pub fn to_f64(&self) -> f64 {
        use num_traits::ToPrimitive;
        // fine for display; exact values live in num/den
        match (self.num.to_f64(), self.den.to_f64()) {
            (Some(a), Some(b)) => a / b,
            _ => f64::NAN,
        }
    }
}

impl PartialOrd for Rational {
    fn partial_cmp(&self, other: &Self) -> Option<std::cmp::Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for Rational {
    fn cmp(&self, other: &Self) -> std::cmp::Ordering {
        (&self.num * &other.den).cmp(&(&other.num * &self.den))
    }
}

impl fmt::Display for Rational {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}/{}", self.num, self.den)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(c: &[i64]) -> Polynomial {
        Polynomial::from_i64s(c)
    }

    #[test]
    fn normalizes_trailing_zeros() {
        assert_eq!(p(&[0, 2, 0, 0]).coeffs().len(), 2);
        assert!(p(&[0, 0]).is_zero());
        assert_eq!(p(&[0, 0]).degree(), None);
    }

    #[test]
    fn arithmetic() {
        let a = p(&[0, 2]);
        let b = p(&[0, 1, 1]);
        assert_eq!(&a * &b, p(&[0, 0, 2, 2]));
        assert_eq!(&a + &b, p(&[0, 3, 1]));
        assert_eq!(&b - &b, Polynomial::zero());
        assert_eq!(b.shift(2), p(&[0, 0, 0, 1, 1]));
        assert_eq!(b.evaluate_i64(2), BigInt::from(6));
        assert_eq!(p(&[0, 2]).evaluate_i64(-1), BigInt::from(-2));
        // x^2 + 2x at x + 1 is x^2 + 4x + 3
        assert_eq!(p(&[0, 2, 1]).shift_argument_by_one(), p(&[3, 4, 1]));
    }

    #[test]
    fn display_forms() {
        assert_eq!(p(&[0, 12, 10]).to_string(), "10x^2 + 12x");
        assert_eq!(p(&[0, 4]).to_string(), "4x");
        assert_eq!(p(&[0, 1]).to_string(), "x");
        assert_eq!(p(&[1]).to_string(), "1");
        assert_eq!(p(&[]).to_string(), "0");
        assert_eq!(p(&[0, -1, 0, 2]).to_string(), "2x^3 - x");
    }

    #[test]
    fn json_round_trip() {
        let a = p(&[0, 108, 45]);
        let s = serde_json::to_string(&a).unwrap();
        assert_eq!(s, r#"["0","108","45"]"#);
        assert_eq!(serde_json::from_str::<Polynomial>(&s).unwrap(), a);
    }

    #[test]
    fn rationals_reduce() {
        let r = Rational::new(BigInt::from(46656), BigInt::from(27072)).unwrap();
        assert_eq!(r.to_string(), "81/47");
        let r = Rational::new(BigInt::from(3), BigInt::from(-6)).unwrap();
        assert_eq!(r.to_string(), "-1/2");
        assert_eq!(r.floor(), BigInt::from(-1));
        assert!(Rational::new(BigInt::from(1), BigInt::zero()).is_none());
    }
}
