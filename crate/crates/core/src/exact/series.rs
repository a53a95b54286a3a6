use serde::{Deserialize, Serialize};

use super::{ExactError, Poly, Rational};

/// A power series known modulo `z^order`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SeriesPrefix {
    coeffs: Vec<Rational>,
}

impl SeriesPrefix {
    pub fn new(coeffs: Vec<Rational>) -> Result<Self, ExactError> {
        if coeffs.is_empty() {
            return Err(ExactError::EmptySeries);
        }
        Ok(SeriesPrefix { coeffs })
    }

    pub fn order(&self) -> usize {
        self.coeffs.len()
    }

    pub fn coeffs(&self) -> &[Rational] {
        &self.coeffs
    }

    pub fn truncate(&self, order: usize) -> Result<SeriesPrefix, ExactError> {
        SeriesPrefix::new(self.coeffs.iter().take(order).cloned().collect())
    }
}

/// The first `order` Taylor coefficients of `num/den` at `z = 0`.
pub fn series_of_ratfun(num: &Poly, den: &Poly, order: usize) -> Result<SeriesPrefix, ExactError> {
    let d0 = den.coeff(0);
    if d0.is_zero() {
        return Err(ExactError::NotAPowerSeries);
    }
    let d0_inv = d0.recip()?;
    let den_support: Vec<(usize, &Rational)> = den
        .coeffs()
        .iter()
        .enumerate()
        .skip(1)
        .filter(|(_, c)| !c.is_zero())
        .collect();
    // den * s = num  =>  s_k = (num_k - sum_{i>=1} den_i s_{k-i}) / den_0
    let mut out: Vec<Rational> = Vec::with_capacity(order);
    for k in 0..order {
        let mut acc = num.coeff(k);
        for &(i, c) in &den_support {
            if i > k {
                break;
            }
            acc -= c * &out[k - i];
        }
        out.push(acc * &d0_inv);
    }
    SeriesPrefix::new(out)
}
