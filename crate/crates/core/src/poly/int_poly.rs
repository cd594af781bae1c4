use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Serialize};

/// Polynomial in one variable `q` with arbitrary-precision integer
/// coefficients. `coeffs[n]` is the coefficient of `q^n`.
///
/// The coefficient vector never ends in a zero; the zero polynomial is the
/// empty vector.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(into = "Vec<String>", try_from = "Vec<String>")]
pub struct IntPolynomial {
    coeffs: Vec<BigInt>,
}

impl IntPolynomial {
    pub fn new(coeffs: Vec<BigInt>) -> Self {
        let mut p = IntPolynomial { coeffs };
        p.trim();
        p
    }

    pub fn from_i64s(coeffs: &[i64]) -> Self {
        Self::new(coeffs.iter().map(|&c| BigInt::from(c)).collect())
    }

    pub fn zero() -> Self {
        IntPolynomial { coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        Self::constant(BigInt::one())
    }

    pub fn constant(c: BigInt) -> Self {
        Self::new(vec![c])
    }

    /// `c * q^n`.
    pub fn monomial(c: BigInt, n: usize) -> Self {
        let mut coeffs = vec![BigInt::zero(); n + 1];
        coeffs[n] = c;
        Self::new(coeffs)
    }

    fn trim(&mut self) {
        while self.coeffs.last().is_some_and(Zero::is_zero) {
            self.coeffs.pop();
        }
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Degree, or `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn coeffs(&self) -> &[BigInt] {
        &self.coeffs
    }

    pub fn coeff(&self, n: usize) -> BigInt {
        self.coeffs.get(n).cloned().unwrap_or_default()
    }

    pub fn leading(&self) -> Option<&BigInt> {
        self.coeffs.last()
    }

    pub fn eval(&self, x: &BigInt) -> BigInt {
        self.coeffs
            .iter()
            .rev()
            .fold(BigInt::zero(), |acc, c| acc * x + c)
    }

    /// Sum of the coefficients, i.e. the value at `q = 1`.
    pub fn eval_one(&self) -> BigInt {
        self.coeffs.iter().sum()
    }

    /// Substitutes `q -> q^k`.
    pub fn compose_power(&self, k: usize) -> Self {
        assert!(k >= 1, "compose_power needs k >= 1");
        if k == 1 || self.is_zero() {
            return self.clone();
        }
        let mut coeffs = vec![BigInt::zero(); (self.coeffs.len() - 1) * k + 1];
        for (n, c) in self.coeffs.iter().enumerate() {
            coeffs[n * k] = c.clone();
        }
        Self::new(coeffs)
    }

    /// `q^shift * p(q^{-1})`; requires `shift >= deg p`.
    pub fn reverse_within(&self, shift: usize) -> Self {
        let mut coeffs = vec![BigInt::zero(); shift + 1];
        for (n, c) in self.coeffs.iter().enumerate() {
            assert!(n <= shift, "reverse_within: degree exceeds shift");
            coeffs[shift - n] = c.clone();
        }
        Self::new(coeffs)
    }

    pub fn scale(&self, c: &BigInt) -> Self {
        Self::new(self.coeffs.iter().map(|x| x * c).collect())
    }

    /// Sum of the coefficients of `q^n` over `n ≡ k (mod e)`.
    pub fn residue_class_sum(&self, e: usize, k: usize) -> BigInt {
        self.coeffs
            .iter()
            .enumerate()
            .filter(|(n, _)| n % e == k % e)
            .map(|(_, c)| c)
            .sum()
    }

    /// Long division, `self = quot * divisor + rem` with `deg rem < deg divisor`.
    /// Returns `None` if some step would need a non-integral quotient
    /// coefficient (the leading coefficient of `divisor` does not divide).
    pub fn div_rem(&self, divisor: &Self) -> Option<(Self, Self)> {
        let dlen = divisor.coeffs.len();
        assert!(dlen > 0, "division by the zero polynomial");
        let lead = divisor.leading().unwrap();
        let mut rem = self.coeffs.clone();
        if rem.len() < dlen {
            return Some((Self::zero(), self.clone()));
        }
        let mut quot = vec![BigInt::zero(); rem.len() - dlen + 1];
        for i in (0..quot.len()).rev() {
            let top = &rem[i + dlen - 1];
            if top.is_zero() {
                continue;
            }
            let (q, r) = top.div_rem(lead);
            if !r.is_zero() {
                return None;
            }
            for (j, d) in divisor.coeffs.iter().enumerate() {
                rem[i + j] -= &q * d;
            }
            quot[i] = q;
        }
        Some((Self::new(quot), Self::new(rem)))
    }

    /// Exact quotient, `None` unless `divisor` divides `self` in `Z[q]`.
    pub fn checked_div(&self, divisor: &Self) -> Option<Self> {
        match self.div_rem(divisor) {
            Some((q, r)) if r.is_zero() => Some(q),
            _ => None,
        }
    }

    pub fn pow(&self, k: u32) -> Self {
        (0..k).fold(Self::one(), |acc, _| &acc * self)
    }
}

impl From<IntPolynomial> for Vec<String> {
    fn from(p: IntPolynomial) -> Self {
        p.coeffs.iter().map(ToString::to_string).collect()
    }
}

impl TryFrom<Vec<String>> for IntPolynomial {
    type Error = num_bigint::ParseBigIntError;

    fn try_from(v: Vec<String>) -> Result<Self, Self::Error> {
        let coeffs = v
            .iter()
            .map(|s| s.parse())
            .collect::<Result<Vec<BigInt>, _>>()?;
        Ok(Self::new(coeffs))
    }
}

impl<'a> Add<&'a IntPolynomial> for &'a IntPolynomial {
    type Output = IntPolynomial;

    fn add(self, rhs: &IntPolynomial) -> IntPolynomial {
        let len = self.coeffs.len().max(rhs.coeffs.len());
        let coeffs = (0..len).map(|i| self.coeff(i) + rhs.coeff(i)).collect();
        IntPolynomial::new(coeffs)
    }
}

impl<'a> Sub<&'a IntPolynomial> for &'a IntPolynomial {
    type Output = IntPolynomial;

    fn sub(self, rhs: &IntPolynomial) -> IntPolynomial {
        let len = self.coeffs.len().max(rhs.coeffs.len());
        let coeffs = (0..len).map(|i| self.coeff(i) - rhs.coeff(i)).collect();
        IntPolynomial::new(coeffs)
    }
}

impl<'a> Mul<&'a IntPolynomial> for &'a IntPolynomial {
    type Output = IntPolynomial;

    fn mul(self, rhs: &IntPolynomial) -> IntPolynomial {
        if self.is_zero() || rhs.is_zero() {
            return IntPolynomial::zero();
        }
        let mut coeffs = vec![BigInt::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                coeffs[i + j] += a * b;
            }
        }
        IntPolynomial::new(coeffs)
    }
}

impl Neg for &IntPolynomial {
    type Output = IntPolynomial;

    fn neg(self) -> IntPolynomial {
        IntPolynomial::new(self.coeffs.iter().map(|c| -c).collect())
    }
}

impl std::iter::Sum for IntPolynomial {
    fn sum<I: Iterator<Item = Self>>(iter: I) -> Self {
        iter.fold(IntPolynomial::zero(), |acc, p| &acc + &p)
    }
}

impl fmt::Display for IntPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (n, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let abs = c.abs();
            if first {
                if c.is_negative() {
                    write!(f, "-")?;
                }
            } else if c.is_negative() {
                write!(f, " - ")?;
            } else {
                write!(f, " + ")?;
            }
            first = false;
            match (n, abs.is_one()) {
                (0, _) => write!(f, "{abs}")?,
                (1, true) => write!(f, "q")?,
                (1, false) => write!(f, "{abs}q")?,
                (_, true) => write!(f, "q^{n}")?,
                (_, false) => write!(f, "{abs}q^{n}")?,
            }
        }
        Ok(())
    }
}

/// The `e`-th cyclotomic polynomial, computed by dividing `x^e - 1` by
/// `Φ_d` for every proper divisor `d` of `e`.
pub fn cyclotomic_poly(e: usize) -> IntPolynomial {
    assert!(e >= 1, "cyclotomic_poly needs e >= 1");
    let mut p = x_pow_minus_one(e);
    for d in 1..e {
        if e.is_multiple_of(d) {
            p = p
                .checked_div(&cyclotomic_poly(d))
                .expect("Φ_d divides x^e - 1 for d | e");
        }
    }
    p
}

/// `x^e - 1`.
pub fn x_pow_minus_one(e: usize) -> IntPolynomial {
    let mut coeffs = vec![BigInt::zero(); e + 1];
    coeffs[0] = -BigInt::one();
    coeffs[e] = BigInt::one();
    IntPolynomial::new(coeffs)
}

/// Euler's totient.
pub fn euler_phi(e: usize) -> usize {
    (1..=e).filter(|k| k.gcd(&e) == 1).count()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(c: &[i64]) -> IntPolynomial {
        IntPolynomial::from_i64s(c)
    }

    #[test]
    fn canonical_form_drops_trailing_zeros() {
        assert_eq!(p(&[1, 2, 0, 0]), p(&[1, 2]));
        assert!(p(&[0, 0]).is_zero());
        assert_eq!(p(&[0, 0]).degree(), None);
        assert_eq!(p(&[3, 0, 5]).degree(), Some(2));
    }

    #[test]
    fn small_cyclotomic_polynomials() {
        assert_eq!(cyclotomic_poly(1), p(&[-1, 1]));
        assert_eq!(cyclotomic_poly(2), p(&[1, 1]));
        assert_eq!(cyclotomic_poly(6), p(&[1, -1, 1]));
        assert_eq!(cyclotomic_poly(12), p(&[1, 0, -1, 0, 1]));
    }

    #[test]
    fn product_over_divisors_is_x_pow_minus_one() {
        for e in 1..=30 {
            let prod = (1..=e)
                .filter(|d| e % d == 0)
                .fold(IntPolynomial::one(), |acc, d| &acc * &cyclotomic_poly(d));
            assert_eq!(prod, x_pow_minus_one(e), "e = {e}");
            let phi = cyclotomic_poly(e);
            assert_eq!(phi.degree(), Some(euler_phi(e)));
            assert!(phi.leading().unwrap().is_one());
            assert!(x_pow_minus_one(e).checked_div(&phi).is_some());
        }
    }

    #[test]
    fn division_and_substitution() {
        let a = p(&[1, 1]);
        let b = p(&[1, -1, 1]);
        let prod = &a * &b;
        assert_eq!(prod, p(&[1, 0, 0, 1]));
        assert_eq!(prod.checked_div(&a), Some(b.clone()));
        assert_eq!(p(&[1, 0, 1]).checked_div(&a), None);
        assert_eq!(p(&[2, 0, 0]).checked_div(&p(&[0, 2])), None);
        assert_eq!(a.compose_power(3), p(&[1, 0, 0, 1]));
        assert_eq!(p(&[0, 1, 2]).reverse_within(3), p(&[0, 2, 1]));
        assert_eq!(p(&[1, -1, 2]).residue_class_sum(2, 0), BigInt::from(3));
        assert_eq!(p(&[1, -1, 2]).residue_class_sum(2, 1), BigInt::from(-1));
    }

    #[test]
    fn display() {
        assert_eq!(p(&[1, 3, 2]).to_string(), "1 + 3q + 2q^2");
        assert_eq!(p(&[0, -1, 0, 1]).to_string(), "-q + q^3");
        assert_eq!(IntPolynomial::zero().to_string(), "0");
    }

    #[test]
    fn serde_is_coefficient_array_of_decimal_strings() {
        let json = serde_json::to_string(&p(&[1, -3, 2])).unwrap();
        assert_eq!(json, r#"["1","-3","2"]"#);
        let back: IntPolynomial = serde_json::from_str(&json).unwrap();
        assert_eq!(back, p(&[1, -3, 2]));
    }
}
