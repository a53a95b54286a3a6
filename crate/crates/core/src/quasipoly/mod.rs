//! The Hilbert quasi-polynomial: per-residue polynomial constituents fitted
//! to exact Hilbert values, its trigonometric form and text renderings.

mod cyclo_real;
mod fit;
mod fourier;
mod render;

pub use cyclo_real::{CyclotomicField, CyclotomicNumber, CyclotomicReal, NestedRoot, Surd};
pub use fit::{fit, fit_degrees, fit_with_period, validity_threshold, QuasiPolynomial};
pub use fourier::{to_fourier, FourierForm, FourierTerm};
pub use render::{render, render_constituents, render_fourier, Style};

use thiserror::Error;

use crate::exact::{ExactError, Rational};
use crate::slmod::SlmodError;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum QuasiPolyError {
    #[error("constituent for residue {residue} does not reproduce H({n}) = {expected}")]
    Verification {
        residue: usize,
        n: usize,
        expected: Rational,
    },
    #[error(transparent)]
    Slmod(#[from] SlmodError),
    #[error(transparent)]
    Exact(#[from] ExactError),
}
