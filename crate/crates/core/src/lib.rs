//! Hilbert functions, Poincaré series and Hilbert quasi-polynomials of the
//! algebras of joint `SL_2`-invariants of binary forms, in exact arithmetic.
//!
//! The pipeline is: count weights to get exact Hilbert values ([`slmod`]),
//! rebuild the Poincaré series as a rational function and factor its
//! denominator into cyclotomic polynomials ([`series_recon`]), then fit one
//! polynomial per residue class and render the result ([`quasipoly`]).

pub mod exact;
pub mod quasipoly;
pub mod series_recon;
pub mod slmod;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use quasipoly::{QuasiPolyError, QuasiPolynomial};
use series_recon::{CyclotomicFactorization, RationalFunction, ReconError, ReconOptions};
use slmod::{DegreeVector, HilbertOracle};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error(transparent)]
    Recon(#[from] ReconError),
    #[error(transparent)]
    QuasiPoly(#[from] QuasiPolyError),
}

/// Everything computed for one degree vector.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Analysis {
    pub degrees: DegreeVector,
    pub poincare: RationalFunction,
    pub factorization: CyclotomicFactorization,
    pub quasi_polynomial: QuasiPolynomial,
}

/// Runs reconstruction, factorization and fitting for `V_d`, starting from
/// the default term budget. The degrees are taken in canonical order.
pub fn analyze(d: &DegreeVector) -> Result<Analysis, Error> {
    analyze_with(d, series_recon::default_term_budget(d), ReconOptions::default())
}

pub fn analyze_with(d: &DegreeVector, term_budget: usize, opts: ReconOptions) -> Result<Analysis, Error> {
    let degrees = d.canonical();
    let mut oracle = HilbertOracle::with_capacity(&degrees, term_budget + opts.guard);
    let poincare = series_recon::reconstruct_with(&mut oracle, term_budget, opts)?;
    let factorization = series_recon::factor_denominator(&poincare)?;
    let quasi_polynomial = quasipoly::fit(&mut oracle, &poincare, &factorization)?;
    Ok(Analysis {
        degrees,
        poincare,
        factorization,
        quasi_polynomial,
    })
}
