//! Dense univariate polynomials over the rationals.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use serde::{Deserialize, Deserializer, Serialize, Serializer};

use super::{ExactError, Rational};

/// Degree of a polynomial. The zero polynomial has degree `NegInfinity`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord)]
pub enum Degree {
    NegInfinity,
    Finite(usize),
}

impl Degree {
    pub fn finite(self) -> Option<usize> {
        match self {
            Degree::NegInfinity => None,
            Degree::Finite(d) => Some(d),
        }
    }
}

impl fmt::Display for Degree {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Degree::NegInfinity => f.write_str("-inf"),
            Degree::Finite(d) => write!(f, "{d}"),
        }
    }
}

/// A polynomial `c_0 + c_1 z + ... + c_k z^k`; `coeffs[i]` is the coefficient
/// of `z^i`. The highest stored coefficient is never zero, so the zero
/// polynomial is the empty sequence.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct Poly {
    coeffs: Vec<Rational>,
}

impl Poly {
    pub fn new(mut coeffs: Vec<Rational>) -> Self {
        while coeffs.last().is_some_and(Rational::is_zero) {
            coeffs.pop();
        }
        Poly { coeffs }
    }

    pub fn from_i64(coeffs: &[i64]) -> Self {
        Poly::new(coeffs.iter().map(|&c| Rational::from(c)).collect())
    }

    pub fn zero() -> Self {
        Poly { coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        Poly::constant(Rational::one())
    }

    pub fn constant(c: Rational) -> Self {
        Poly::new(vec![c])
    }

    /// `c * z^k`.
    pub fn monomial(c: Rational, k: usize) -> Self {
        let mut coeffs = vec![Rational::zero(); k + 1];
        coeffs[k] = c;
        Poly::new(coeffs)
    }

    /// `1 - z^k`.
    pub fn one_minus_power(k: usize) -> Self {
        let mut coeffs = vec![Rational::zero(); k + 1];
        coeffs[0] = Rational::one();
        coeffs[k] = &coeffs[k] - &Rational::one();
        Poly::new(coeffs)
    }

    pub fn coeffs(&self) -> &[Rational] {
        &self.coeffs
    }

    pub fn into_coeffs(self) -> Vec<Rational> {
        self.coeffs
    }

    /// Coefficient of `z^i`, zero beyond the degree.
    pub fn coeff(&self, i: usize) -> Rational {
        self.coeffs.get(i).cloned().unwrap_or_else(Rational::zero)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn is_constant(&self) -> bool {
        self.coeffs.len() <= 1
    }

    pub fn degree(&self) -> Degree {
        match self.coeffs.len() {
            0 => Degree::NegInfinity,
            n => Degree::Finite(n - 1),
        }
    }

    pub fn leading_coeff(&self) -> Option<&Rational> {
        self.coeffs.last()
    }

    pub fn eval(&self, z: &Rational) -> Rational {
        self.coeffs
            .iter()
            .rev()
            .fold(Rational::zero(), |acc, c| acc * z + c)
    }

    pub fn scale(&self, c: &Rational) -> Poly {
        Poly::new(self.coeffs.iter().map(|a| a * c).collect())
    }

    pub fn monic(&self) -> Poly {
        match self.leading_coeff() {
            None => Poly::zero(),
            Some(lc) => {
                let inv = lc.recip().expect("leading coefficient is nonzero");
                self.scale(&inv)
            }
        }
    }

    /// Exact product.
    pub fn mul(&self, other: &Poly) -> Poly {
        if self.is_zero() || other.is_zero() {
            return Poly::zero();
        }
        let mut out = vec![Rational::zero(); self.coeffs.len() + other.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.coeffs.iter().enumerate() {
                if !b.is_zero() {
                    out[i + j] += a * b;
                }
            }
        }
        Poly::new(out)
    }

    /// Quotient and remainder with `self = q * divisor + r`, `deg r < deg divisor`.
    pub fn divrem(&self, divisor: &Poly) -> Result<(Poly, Poly), ExactError> {
        let Degree::Finite(db) = divisor.degree() else {
            return Err(ExactError::ZeroDivisor);
        };
        let Degree::Finite(da) = self.degree() else {
            return Ok((Poly::zero(), Poly::zero()));
        };
        if da < db {
            return Ok((Poly::zero(), self.clone()));
        }
        let lead_inv = divisor.coeffs[db].recip()?;
        // Sparse divisors (1 - z^k, cyclotomics) dominate; only walk their support.
        let support: Vec<(usize, &Rational)> = divisor.coeffs[..db]
            .iter()
            .enumerate()
            .filter(|(_, c)| !c.is_zero())
            .collect();
        let mut rem = self.coeffs.clone();
        let mut quot = vec![Rational::zero(); da - db + 1];
        for k in (0..=da - db).rev() {
            let top = &rem[k + db];
            if top.is_zero() {
                continue;
            }
            let q = top * &lead_inv;
            for &(i, c) in &support {
                rem[k + i] -= &q * c;
            }
            rem[k + db] = Rational::zero();
            quot[k] = q;
        }
        rem.truncate(db);
        Ok((Poly::new(quot), Poly::new(rem)))
    }

    /// Exact division; errors unless `divisor` divides `self`.
    pub fn div_exact(&self, divisor: &Poly) -> Result<Poly, ExactError> {
        let (q, r) = self.divrem(divisor)?;
        if !r.is_zero() {
            return Err(ExactError::InexactDivision);
        }
        Ok(q)
    }

    /// Monic greatest common divisor by the Euclidean algorithm, normalizing
    /// each remainder to be monic.
    pub fn gcd(&self, other: &Poly) -> Result<Poly, ExactError> {
        if self.is_zero() && other.is_zero() {
            return Err(ExactError::GcdOfZeros);
        }
        let mut a = self.monic();
        let mut b = other.monic();
        while !b.is_zero() {
            let (_, r) = a.divrem(&b)?;
            a = b;
            b = r.monic();
        }
        Ok(a)
    }

    /// Multiplies by `z^k`.
    pub fn shift(&self, k: usize) -> Poly {
        if self.is_zero() {
            return Poly::zero();
        }
        let mut coeffs = vec![Rational::zero(); k];
        coeffs.extend(self.coeffs.iter().cloned());
        Poly { coeffs }
    }

    /// Keeps terms of degree `< n`.
    pub fn truncate(&self, n: usize) -> Poly {
        Poly::new(self.coeffs.iter().take(n).cloned().collect())
    }
}

impl Add<&Poly> for &Poly {
    type Output = Poly;
    fn add(self, rhs: &Poly) -> Poly {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        Poly::new((0..n).map(|i| self.coeff(i) + rhs.coeff(i)).collect())
    }
}

impl Sub<&Poly> for &Poly {
    type Output = Poly;
    fn sub(self, rhs: &Poly) -> Poly {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        Poly::new((0..n).map(|i| self.coeff(i) - rhs.coeff(i)).collect())
    }
}

impl Mul<&Poly> for &Poly {
    type Output = Poly;
    fn mul(self, rhs: &Poly) -> Poly {
        Poly::mul(self, rhs)
    }
}

impl Neg for &Poly {
    type Output = Poly;
    fn neg(self) -> Poly {
        Poly {
            coeffs: self.coeffs.iter().map(|c| -c).collect(),
        }
    }
}

impl fmt::Debug for Poly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Poly({})", self.to_string_in("z"))
    }
}

impl fmt::Display for Poly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.to_string_in("z"))
    }
}

impl Poly {
    /// Ascending-power text such as `1 - z + 2*z^3`, in the given variable.
    pub fn to_string_in(&self, var: &str) -> String {
        let terms: Vec<(usize, &Rational)> = self
            .coeffs
            .iter()
            .enumerate()
            .filter(|(_, c)| !c.is_zero())
            .collect();
        format_terms(&terms, var)
    }

    /// Descending-power text such as `1/6*n + 5/12`.
    pub fn to_string_desc(&self, var: &str) -> String {
        let terms: Vec<(usize, &Rational)> = self
            .coeffs
            .iter()
            .enumerate()
            .rev()
            .filter(|(_, c)| !c.is_zero())
            .collect();
        format_terms(&terms, var)
    }
}

fn format_terms(terms: &[(usize, &Rational)], var: &str) -> String {
    if terms.is_empty() {
        return "0".to_string();
    }
    let mut out = String::new();
    for (idx, &(k, c)) in terms.iter().enumerate() {
        let mag = c.abs();
        if idx == 0 {
            if c.is_negative() {
                out.push('-');
            }
        } else {
            out.push_str(if c.is_negative() { " - " } else { " + " });
        }
        let power = match k {
            0 => String::new(),
            1 => var.to_string(),
            _ => format!("{var}^{k}"),
        };
        if k == 0 {
            out.push_str(&mag.to_string());
        } else if mag.is_one() {
            out.push_str(&power);
        } else {
            out.push_str(&format!("{mag}*{power}"));
        }
    }
    out
}

impl Serialize for Poly {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        self.coeffs.serialize(serializer)
    }
}

impl<'de> Deserialize<'de> for Poly {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        Ok(Poly::new(Vec::<Rational>::deserialize(deserializer)?))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(c: &[i64]) -> Poly {
        Poly::from_i64(c)
    }

    #[test]
    fn product_by_hand() {
        // (1 - q)(1 + q + 2q^2 + q^3 + q^4) = 1 + q^2 - q^3 - q^5
        let prod = p(&[1, -1]).mul(&p(&[1, 1, 2, 1, 1]));
        assert_eq!(prod, p(&[1, 0, 1, -1, 0, -1]));
        assert_eq!(prod.degree(), Degree::Finite(5));
    }

    #[test]
    fn product_identity_and_annihilator() {
        let a = p(&[3, 0, -2]);
        assert_eq!(a.mul(&Poly::one()), a);
        assert_eq!(a.mul(&Poly::zero()), Poly::zero());
    }

    #[test]
    fn zero_degree_is_sentinel() {
        assert_eq!(Poly::zero().degree(), Degree::NegInfinity);
        assert!(Degree::NegInfinity < Degree::Finite(0));
        assert_eq!(p(&[0, 0]).degree(), Degree::NegInfinity);
    }

    #[test]
    fn division_examples() {
        let (q, r) = p(&[1, 0, 0, -1]).divrem(&p(&[1, -1])).unwrap();
        assert_eq!(q, p(&[1, 1, 1]));
        assert!(r.is_zero());

        let (q, r) = p(&[1, 0, 1]).divrem(&p(&[1, 1])).unwrap();
        assert_eq!(q, p(&[-1, 1]));
        assert_eq!(r, p(&[2]));

        let a = p(&[5, -3, 0, 7]);
        let (q, r) = a.divrem(&a).unwrap();
        assert_eq!(q, Poly::one());
        assert!(r.is_zero());
    }

    #[test]
    fn division_by_zero_errors() {
        assert_eq!(p(&[1]).divrem(&Poly::zero()), Err(ExactError::ZeroDivisor));
    }

    #[test]
    fn gcd_examples() {
        let g = p(&[1, 0, -1]).gcd(&p(&[1, 0, 0, -1])).unwrap();
        assert_eq!(g, p(&[-1, 1]));
        assert_eq!(p(&[2, 4]).gcd(&Poly::zero()).unwrap(), p(&[1, 2]).monic());
        assert_eq!(Poly::zero().gcd(&Poly::zero()), Err(ExactError::GcdOfZeros));
    }

    #[test]
    fn gcd_of_two_forms_series_is_one() {
        let num = p(&[1, -1, 1, -1, 1, -1, 1]);
        let den = p(&[1, -1, 0, -1, 0, 0, 1, 1, 0, 0, -1, 0, -1, 1]);
        assert_eq!(num.gcd(&den).unwrap(), Poly::one());
    }

    #[test]
    fn rendering() {
        assert_eq!(p(&[1, -1, 0, 2]).to_string(), "1 - z + 2*z^3");
        assert_eq!(Poly::zero().to_string(), "0");
        let q = Poly::new(vec![Rational::new(5, 12).unwrap(), Rational::new(1, 6).unwrap()]);
        assert_eq!(q.to_string_desc("n"), "1/6*n + 5/12");
        assert_eq!(p(&[0, -1]).to_string(), "-z");
    }
}
