//! Recovering the Poincaré series `P(z) = sum H(n) z^n` as a reduced rational
//! function, and splitting its denominator into cyclotomic factors.
//!
//! The series is rebuilt from exact Hilbert-function values: the minimal
//! linear recurrence of a long enough prefix gives the denominator, the
//! prefix times the denominator gives the numerator, and the result is
//! checked against freshly computed values beyond the prefix. Denominator
//! roots are never computed numerically; they are carried as cyclotomic
//! orders with multiplicities.

mod cyclotomic;
mod recurrence;

pub use cyclotomic::{cyclotomic, euler_phi, CyclotomicCache};
pub use recurrence::{berlekamp_massey, Recurrence};

use num_integer::Integer;
use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::exact::{series_of_ratfun, Degree, ExactError, Poly, Rational};
use crate::slmod::{DegreeVector, HilbertOracle, SlmodError};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ReconError {
    #[error("term budget must be at least 4, got {0}")]
    BudgetTooSmall(usize),
    #[error(
        "no stable rational reconstruction within {terms} terms \
         (last attempt: numerator degree {num_degree}, denominator degree {den_degree})"
    )]
    Unstable {
        terms: usize,
        num_degree: Degree,
        den_degree: Degree,
    },
    #[error("denominator must be nonzero with nonzero constant term")]
    BadDenominator,
    #[error("denominator keeps a factor {residual} without roots of unity")]
    NonCyclotomic { residual: Poly },
    #[error(transparent)]
    Slmod(#[from] SlmodError),
    #[error(transparent)]
    Exact(#[from] ExactError),
}

/// `num/den` in lowest terms with `den(0) = 1`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(try_from = "RawRationalFunction", into = "RawRationalFunction")]
pub struct RationalFunction {
    num: Poly,
    den: Poly,
}

#[derive(Serialize, Deserialize)]
struct RawRationalFunction {
    num: Poly,
    den: Poly,
}

impl TryFrom<RawRationalFunction> for RationalFunction {
    type Error = ReconError;
    fn try_from(raw: RawRationalFunction) -> Result<Self, Self::Error> {
        RationalFunction::new(raw.num, raw.den)
    }
}

impl From<RationalFunction> for RawRationalFunction {
    fn from(rf: RationalFunction) -> Self {
        RawRationalFunction {
            num: rf.num,
            den: rf.den,
        }
    }
}

impl RationalFunction {
    /// Reduces `num/den` to lowest terms and scales so that `den(0) = 1`.
    pub fn new(num: Poly, den: Poly) -> Result<Self, ReconError> {
        if den.is_zero() || den.coeff(0).is_zero() {
            return Err(ReconError::BadDenominator);
        }
        let g = num.gcd(&den)?;
        let mut num = num.div_exact(&g)?;
        let mut den = den.div_exact(&g)?;
        let unit = den.coeff(0).recip()?;
        num = num.scale(&unit);
        den = den.scale(&unit);
        Ok(RationalFunction { num, den })
    }

    pub fn num(&self) -> &Poly {
        &self.num
    }

    pub fn den(&self) -> &Poly {
        &self.den
    }

    pub fn series(&self, order: usize) -> Result<Vec<Rational>, ExactError> {
        Ok(series_of_ratfun(&self.num, &self.den, order)?.coeffs().to_vec())
    }
}

/// `den = unit * prod Phi_m^k` over the listed `(m, k)`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CyclotomicFactorization {
    pub factors: Vec<(u64, usize)>,
    pub unit: Rational,
}

impl CyclotomicFactorization {
    pub fn multiplicity(&self, m: u64) -> usize {
        self.factors
            .iter()
            .find(|&&(order, _)| order == m)
            .map_or(0, |&(_, k)| k)
    }

    /// Multiplies the factors back out.
    pub fn expand(&self) -> Poly {
        let mut cache = CyclotomicCache::default();
        let mut acc = Poly::constant(self.unit.clone());
        for &(m, k) in &self.factors {
            let phi = cache.get(m);
            for _ in 0..k {
                acc = acc.mul(&phi);
            }
        }
        acc
    }

    /// Number of roots of order `m`, counted with multiplicity.
    pub fn root_count(&self) -> usize {
        self.factors
            .iter()
            .map(|&(m, k)| euler_phi(m) as usize * k)
            .sum()
    }
}

/// Quantities read off a cyclotomic factorization.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct PeriodInfo {
    /// lcm of the root orders; 1 with no roots.
    pub period: u64,
    /// Largest multiplicity minus one; `None` when there are no roots.
    pub degree_bound: Option<usize>,
    /// Multiplicity of the root `z = 1`.
    pub pole_order_at_one: usize,
}

pub fn period_and_degree(fac: &CyclotomicFactorization) -> PeriodInfo {
    let period = fac.factors.iter().fold(1u64, |acc, &(m, _)| acc.lcm(&m));
    let degree_bound = fac.factors.iter().map(|&(_, k)| k - 1).max();
    PeriodInfo {
        period,
        degree_bound,
        pole_order_at_one: fac.multiplicity(1),
    }
}

/// Trial-divides the denominator by cyclotomic polynomials.
///
/// Orders are searched up to `2 deg^2`, enough because `phi(m) >= sqrt(m/2)`.
pub fn factor_denominator(rf: &RationalFunction) -> Result<CyclotomicFactorization, ReconError> {
    factor_poly(rf.den())
}

pub(crate) fn factor_poly(den: &Poly) -> Result<CyclotomicFactorization, ReconError> {
    let Degree::Finite(deg) = den.degree() else {
        return Err(ReconError::BadDenominator);
    };
    let mut residual = den.clone();
    let mut factors = Vec::new();
    let mut cache = CyclotomicCache::default();
    let bound = 2 * (deg as u64).pow(2);
    for m in 1..=bound {
        let left = residual.degree().finite().unwrap_or(0);
        if left == 0 {
            break;
        }
        if euler_phi(m) as usize > left {
            continue;
        }
        let phi = cache.get(m);
        let mut mult = 0;
        loop {
            let (q, r) = residual.divrem(&phi)?;
            if !r.is_zero() {
                break;
            }
            residual = q;
            mult += 1;
        }
        if mult > 0 {
            factors.push((m, mult));
        }
    }
    if !residual.is_constant() || residual.is_zero() {
        return Err(ReconError::NonCyclotomic { residual });
    }
    Ok(CyclotomicFactorization {
        factors,
        unit: residual.coeff(0),
    })
}

/// Knobs for [`reconstruct_with`].
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct ReconOptions {
    /// Extra coefficients beyond the fitted prefix that must also match.
    pub guard: usize,
    /// Largest prefix length tried before giving up.
    pub max_terms: usize,
}

impl Default for ReconOptions {
    fn default() -> Self {
        ReconOptions {
            guard: 4,
            max_terms: 4096,
        }
    }
}

/// Starting prefix length: `4 * (sum (d_i + 1))^2`.
pub fn default_term_budget(d: &DegreeVector) -> usize {
    4 * d.dimension().pow(2)
}

/// Poincaré series of the invariants of `V_d`, from `term_budget` Hilbert values.
pub fn reconstruct(d: &DegreeVector, term_budget: usize) -> Result<RationalFunction, ReconError> {
    let mut oracle = HilbertOracle::with_capacity(d, term_budget + 8);
    reconstruct_with(&mut oracle, term_budget, ReconOptions::default())
}

pub fn reconstruct_with(
    oracle: &mut HilbertOracle,
    term_budget: usize,
    opts: ReconOptions,
) -> Result<RationalFunction, ReconError> {
    if term_budget < 4 {
        return Err(ReconError::BudgetTooSmall(term_budget));
    }
    let mut terms = term_budget.min(opts.max_terms);
    let mut last = (Degree::NegInfinity, Degree::NegInfinity);
    loop {
        let values = oracle.values(terms + opts.guard)?;
        let (prefix, _) = values.split_at(terms);
        let rec = berlekamp_massey(prefix);
        if 2 * rec.length + opts.guard <= terms {
            let num = Poly::new(prefix.to_vec())
                .mul(&rec.connection)
                .truncate(rec.length);
            let rf = RationalFunction::new(num, rec.connection)?;
            last = (rf.num.degree(), rf.den.degree());
            if rf.series(values.len())? == values {
                return Ok(rf);
            }
        }
        if terms >= opts.max_terms {
            return Err(ReconError::Unstable {
                terms,
                num_degree: last.0,
                den_degree: last.1,
            });
        }
        terms = (terms * 2).min(opts.max_terms);
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn dv(d: &[u32]) -> DegreeVector {
        DegreeVector::new(d.to_vec()).unwrap()
    }

    fn two_forms_den() -> Poly {
        Poly::from_i64(&[1, -1, 0, -1, 0, 0, 1, 1, 0, 0, -1, 0, -1, 1])
    }

    #[test]
    fn two_forms_series_recovered() {
        let rf = reconstruct(&dv(&[2, 3]), 60).unwrap();
        assert_eq!(rf.num(), &Poly::from_i64(&[1, -1, 1, -1, 1, -1, 1]));
        assert_eq!(rf.den(), &two_forms_den());
    }

    #[test]
    fn trivial_and_quadratic() {
        let rf = reconstruct(&dv(&[1]), 8).unwrap();
        assert_eq!(rf.num(), &Poly::one());
        assert_eq!(rf.den(), &Poly::one());
        let rf = reconstruct(&dv(&[2]), 8).unwrap();
        assert_eq!(rf.num(), &Poly::one());
        assert_eq!(rf.den(), &Poly::from_i64(&[1, 0, -1]));
    }

    #[test]
    fn small_budget_grows() {
        // 8 terms cannot pin a degree-13 denominator; doubling must kick in
        let rf = reconstruct(&dv(&[2, 3]), 8).unwrap();
        assert_eq!(rf.den(), &two_forms_den());
    }

    #[test]
    fn budget_precondition_and_cap() {
        assert_eq!(reconstruct(&dv(&[2]), 3), Err(ReconError::BudgetTooSmall(3)));
        let mut o = HilbertOracle::new(&dv(&[2, 3]));
        let opts = ReconOptions { guard: 4, max_terms: 12 };
        let err = reconstruct_with(&mut o, 8, opts).unwrap_err();
        assert!(matches!(err, ReconError::Unstable { terms: 12, .. }), "{err:?}");
    }

    #[test]
    fn factor_two_forms() {
        let rf = RationalFunction::new(Poly::from_i64(&[1, -1, 1, -1, 1, -1, 1]), two_forms_den()).unwrap();
        let fac = factor_denominator(&rf).unwrap();
        assert_eq!(fac.factors, vec![(1, 4), (2, 1), (3, 1), (4, 1), (5, 1)]);
        assert_eq!(fac.unit, Rational::one());
        assert_eq!(fac.expand(), two_forms_den());
        assert_eq!(fac.root_count(), 13);
    }

    #[test]
    fn factor_simple_denominators() {
        let rf = RationalFunction::new(Poly::one(), Poly::from_i64(&[1, 0, -1])).unwrap();
        let fac = factor_denominator(&rf).unwrap();
        assert_eq!(fac.factors, vec![(1, 1), (2, 1)]);
        assert_eq!(fac.unit, Rational::from(-1));
        assert_eq!(fac.expand(), Poly::from_i64(&[1, 0, -1]));

        let rf = RationalFunction::new(Poly::one(), Poly::one()).unwrap();
        let fac = factor_denominator(&rf).unwrap();
        assert!(fac.factors.is_empty());
        assert_eq!(fac.unit, Rational::one());
    }

    #[test]
    fn non_cyclotomic_root_rejected() {
        let rf = RationalFunction::new(Poly::one(), Poly::from_i64(&[1, -2])).unwrap();
        assert!(matches!(factor_denominator(&rf), Err(ReconError::NonCyclotomic { .. })));
    }

    #[test]
    fn period_info() {
        let fac = CyclotomicFactorization {
            factors: vec![(1, 4), (2, 1), (3, 1), (4, 1), (5, 1)],
            unit: Rational::one(),
        };
        assert_eq!(
            period_and_degree(&fac),
            PeriodInfo { period: 60, degree_bound: Some(3), pole_order_at_one: 4 }
        );
        let one = |f| CyclotomicFactorization { factors: vec![f], unit: Rational::one() };
        assert_eq!(
            period_and_degree(&one((1, 1))),
            PeriodInfo { period: 1, degree_bound: Some(0), pole_order_at_one: 1 }
        );
        assert_eq!(
            period_and_degree(&one((2, 1))),
            PeriodInfo { period: 2, degree_bound: Some(0), pole_order_at_one: 0 }
        );
        let empty = CyclotomicFactorization { factors: vec![], unit: Rational::one() };
        assert_eq!(
            period_and_degree(&empty),
            PeriodInfo { period: 1, degree_bound: None, pole_order_at_one: 0 }
        );
    }

    #[test]
    fn rational_function_normalizes() {
        // (1 - z^2) / (2 - 2z) = (1 + z) / 2 -> den(0) = 1 gives (1/2 + z/2) / 1
        let rf = RationalFunction::new(Poly::from_i64(&[1, 0, -1]), Poly::from_i64(&[2, -2])).unwrap();
        assert_eq!(rf.den(), &Poly::one());
        assert_eq!(rf.num(), &Poly::new(vec![Rational::new(1, 2).unwrap(), Rational::new(1, 2).unwrap()]));
        assert!(RationalFunction::new(Poly::one(), Poly::from_i64(&[0, 1])).is_err());
    }

    #[test]
    fn json_shapes() {
        let rf = RationalFunction::new(Poly::one(), Poly::from_i64(&[1, 0, -1])).unwrap();
        assert_eq!(serde_json::to_string(&rf).unwrap(), r#"{"num":["1"],"den":["1","0","-1"]}"#);
        let fac = factor_denominator(&rf).unwrap();
        assert_eq!(serde_json::to_string(&fac).unwrap(), r#"{"factors":[[1,1],[2,1]],"unit":"-1"}"#);
        let back: RationalFunction = serde_json::from_str(r#"{"num":["2"],"den":["2","0","-2"]}"#).unwrap();
        assert_eq!(back, rf);
    }
}
