//! Trigonometric form of a quasi-polynomial:
//! `sum_t n^t sum_j (a_{t,j} cos(2 pi j n / L) + b_{t,j} sin(2 pi j n / L))`.
//!
//! For each power `t` the periodic sequence of `n^t` coefficients is expanded
//! by a discrete Fourier transform over `Z/L`. The transform lives in
//! `Q(zeta_L)`, but sine coefficients carry a factor `i`, so all coefficients
//! are held in `Q(zeta_N)` with `N = lcm(L, 4)`.

use num_integer::Integer;

use crate::exact::Rational;

use super::cyclo_real::{CyclotomicField, CyclotomicNumber, CyclotomicReal};
use super::QuasiPolynomial;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FourierTerm {
    pub power: usize,
    /// `j` in `cos(2 pi j n / L)`, with `0 <= j <= L/2`.
    pub frequency: u64,
    pub cos_coeff: CyclotomicReal,
    /// Always zero for `j = 0` and `j = L/2`.
    pub sin_coeff: CyclotomicReal,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FourierForm {
    pub period: u64,
    pub valid_from: usize,
    pub terms: Vec<FourierTerm>,
    field: CyclotomicField,
}

impl FourierForm {
    pub fn field(&self) -> &CyclotomicField {
        &self.field
    }

    /// Term for a given power and frequency, if nonzero.
    pub fn term(&self, power: usize, frequency: u64) -> Option<&FourierTerm> {
        self.terms
            .iter()
            .find(|t| t.power == power && t.frequency == frequency)
    }

    /// Exact value at an integer, computed in the cyclotomic field.
    pub fn evaluate(&self, n: usize) -> Rational {
        let f = &self.field;
        let step = f.order() / self.period;
        let mut acc = f.zero();
        for t in &self.terms {
            let k = ((t.frequency * step) as u128 * n as u128 % f.order() as u128) as i64;
            let mut term = &f.cos_2pi(k) * t.cos_coeff.number();
            if !t.sin_coeff.is_zero() {
                let s = f.sin_2pi(k).expect("field order divisible by 4");
                term = &term + &(&s * t.sin_coeff.number());
            }
            let nt = Rational::from(n).pow(t.power as u32);
            acc = &acc + &term.scale(&nt);
        }
        acc.as_rational()
            .expect("trigonometric sum of a rational quasi-polynomial is rational")
    }
}

pub fn to_fourier(qp: &QuasiPolynomial) -> FourierForm {
    let l = qp.period;
    let field = CyclotomicField::new(l.lcm(&4));
    let step = (field.order() / l) as i64;
    let mut terms = Vec::new();
    let inv_l = Rational::new(1, l as i64).expect("period is positive");
    let i_unit = field.imaginary_unit().expect("order divisible by 4");

    for power in 0..qp.degree().map_or(0, |d| d + 1) {
        let seq: Vec<Rational> = qp.constituents.iter().map(|p| p.coeff(power)).collect();
        for j in 0..=l / 2 {
            // A_j = (1/L) sum_r a_r zeta_L^{-j r}
            let mut coords = vec![Rational::zero(); field.order() as usize];
            for (r, a) in seq.iter().enumerate() {
                if a.is_zero() {
                    continue;
                }
                let e = (-(j as i64) * r as i64 * step).rem_euclid(field.order() as i64);
                coords[e as usize] += a;
            }
            let a_j: CyclotomicNumber = field.from_coords(coords).scale(&inv_l);
            let self_paired = j == 0 || 2 * j == l;
            let (cos_c, sin_c) = if self_paired {
                (a_j, field.zero())
            } else {
                // A z^{jn} + conj(A) z^{-jn} = (A + conj A) cos + i (A - conj A) sin
                let conj = a_j.conj();
                let cos_c = &a_j + &conj;
                let sin_c = &i_unit * &(&a_j - &conj);
                (cos_c, sin_c)
            };
            if cos_c.is_zero() && sin_c.is_zero() {
                continue;
            }
            terms.push(FourierTerm {
                power,
                frequency: j,
                cos_coeff: CyclotomicReal::new(cos_c).expect("cosine coefficient is real"),
                sin_coeff: CyclotomicReal::new(sin_c).expect("sine coefficient is real"),
            });
        }
    }
    FourierForm {
        period: l,
        valid_from: qp.valid_from,
        terms,
        field,
    }
}
