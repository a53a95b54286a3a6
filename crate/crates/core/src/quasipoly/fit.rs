use serde::{Deserialize, Serialize};

use crate::exact::{solve_linear, ExactError, Poly, Rational};
use crate::series_recon::{period_and_degree, CyclotomicFactorization, RationalFunction};
use crate::slmod::{DegreeVector, HilbertOracle};

use super::QuasiPolyError;

/// A function `n -> constituents[n mod period](n)`, matching the Hilbert
/// function it was fitted to for all `n >= valid_from`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct QuasiPolynomial {
    pub degrees: DegreeVector,
    pub period: u64,
    pub valid_from: usize,
    pub constituents: Vec<Poly>,
}

impl QuasiPolynomial {
    pub fn evaluate(&self, n: usize) -> Rational {
        let r = (n as u64 % self.period) as usize;
        self.constituents[r].eval(&Rational::from(n))
    }

    /// Largest constituent degree; `None` for the zero function.
    pub fn degree(&self) -> Option<usize> {
        self.constituents
            .iter()
            .filter_map(|p| p.degree().finite())
            .max()
    }

    pub fn is_zero(&self) -> bool {
        self.constituents.iter().all(Poly::is_zero)
    }

    /// Same function written with period `k * period`.
    pub fn unfold(&self, k: u64) -> QuasiPolynomial {
        let period = self.period * k;
        QuasiPolynomial {
            degrees: self.degrees.clone(),
            period,
            valid_from: self.valid_from,
            constituents: (0..period)
                .map(|r| self.constituents[(r % self.period) as usize].clone())
                .collect(),
        }
    }
}

/// Fits the Hilbert quasi-polynomial of `V_d` given its Poincaré series and
/// the cyclotomic factorization of the series' denominator.
pub fn fit(
    oracle: &mut HilbertOracle,
    rf: &RationalFunction,
    fac: &CyclotomicFactorization,
) -> Result<QuasiPolynomial, QuasiPolyError> {
    let info = period_and_degree(fac);
    fit_with_period(oracle, rf, info.period, info.degree_bound)
}

/// Fitting with an explicit period, which must be a multiple of the true one.
pub fn fit_with_period(
    oracle: &mut HilbertOracle,
    rf: &RationalFunction,
    period: u64,
    degree_bound: Option<usize>,
) -> Result<QuasiPolynomial, QuasiPolyError> {
    let valid_from = validity_threshold(rf);
    let unknowns = degree_bound.map_or(0, |b| b + 1);
    let samples = unknowns + 2;
    let l = period as usize;
    let last = valid_from + l - 1 + l * (samples - 1);
    oracle.reserve(last);
    let values = oracle.range(0, last + 1)?;

    let mut constituents = Vec::with_capacity(l);
    for r in 0..l {
        // first n >= valid_from with n = r (mod period)
        let first = valid_from + (r + l - valid_from % l) % l;
        let points: Vec<usize> = (0..samples).map(|i| first + i * l).collect();
        let poly = if unknowns == 0 {
            if let Some(&n) = points.iter().find(|&&n| !values[n].is_zero()) {
                return Err(QuasiPolyError::Verification {
                    residue: r,
                    n,
                    expected: values[n].clone(),
                });
            }
            Poly::zero()
        } else {
            let matrix: Vec<Vec<Rational>> = points
                .iter()
                .map(|&n| {
                    let x = Rational::from(n);
                    let mut row = Vec::with_capacity(unknowns);
                    let mut p = Rational::one();
                    for _ in 0..unknowns {
                        row.push(p.clone());
                        p *= &x;
                    }
                    row
                })
                .collect();
            let rhs: Vec<Rational> = points.iter().map(|&n| values[n].clone()).collect();
            match solve_linear(&matrix, &rhs) {
                Ok(c) => Poly::new(c),
                Err(ExactError::Inconsistent { equation }) => {
                    let n = points[equation];
                    return Err(QuasiPolyError::Verification {
                        residue: r,
                        n,
                        expected: values[n].clone(),
                    });
                }
                Err(e) => return Err(e.into()),
            }
        };
        constituents.push(poly);
    }
    Ok(QuasiPolynomial {
        degrees: oracle.degree_vector().clone(),
        period,
        valid_from,
        constituents,
    })
}

/// Start of the range where the quasi-polynomial formula holds:
/// `max(0, deg num - deg den + 1)`.
pub fn validity_threshold(rf: &RationalFunction) -> usize {
    let num = rf.num().degree().finite();
    let den = rf.den().degree().finite().unwrap_or(0);
    match num {
        Some(n) if n >= den => n - den + 1,
        _ => 0,
    }
}

/// Convenience wrapper building its own oracle.
pub fn fit_degrees(
    d: &DegreeVector,
    rf: &RationalFunction,
    fac: &CyclotomicFactorization,
) -> Result<QuasiPolynomial, QuasiPolyError> {
    fit(&mut HilbertOracle::new(d), rf, fac)
}
