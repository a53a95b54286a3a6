//! Exact arithmetic in cyclotomic fields `Q(zeta_N)`, `zeta_N = exp(2 pi i / N)`.
//!
//! Elements are kept reduced modulo `Phi_N` in the power basis
//! `1, zeta, ..., zeta^{phi(N)-1}`, so equality is coordinate equality.

use std::fmt;
use std::sync::Arc;

use num_bigint::{BigInt, Sign};
use num_integer::Integer;
use num_traits::{One, Signed};

use crate::exact::{solve_linear, Poly, Rational};
use crate::series_recon::cyclotomic;

/// The field `Q(zeta_N)`.
#[derive(Clone, Debug)]
pub struct CyclotomicField {
    order: u64,
    modulus: Arc<Poly>,
}

impl PartialEq for CyclotomicField {
    fn eq(&self, other: &Self) -> bool {
        self.order == other.order
    }
}

impl Eq for CyclotomicField {}

impl CyclotomicField {
    pub fn new(order: u64) -> Self {
        assert!(order >= 1, "cyclotomic field order must be positive");
        CyclotomicField {
            order,
            modulus: Arc::new(cyclotomic(order)),
        }
    }

    pub fn order(&self) -> u64 {
        self.order
    }

    fn wrap(&self, p: Poly) -> CyclotomicNumber {
        let (_, r) = p.divrem(&self.modulus).expect("modulus is nonzero");
        CyclotomicNumber {
            field: self.clone(),
            coords: r,
        }
    }

    pub fn zero(&self) -> CyclotomicNumber {
        self.wrap(Poly::zero())
    }

    pub fn rational(&self, r: Rational) -> CyclotomicNumber {
        self.wrap(Poly::constant(r))
    }

    /// `zeta_N^k` for any integer `k`.
    pub fn zeta_pow(&self, k: i64) -> CyclotomicNumber {
        let e = k.rem_euclid(self.order as i64) as usize;
        self.wrap(Poly::monomial(Rational::one(), e))
    }

    /// `i`, present when `4 | N`.
    pub fn imaginary_unit(&self) -> Option<CyclotomicNumber> {
        self.order.is_multiple_of(4).then(|| self.zeta_pow(self.order as i64 / 4))
    }

    /// `cos(2 pi k / N)`.
    pub fn cos_2pi(&self, k: i64) -> CyclotomicNumber {
        let half = Rational::new(1, 2).unwrap();
        (&self.zeta_pow(k) + &self.zeta_pow(-k)).scale(&half)
    }

    /// `sin(2 pi k / N)`; requires `4 | N`.
    pub fn sin_2pi(&self, k: i64) -> Option<CyclotomicNumber> {
        let i = self.imaginary_unit()?;
        // (z - z^-1) / (2i) = -i (z - z^-1) / 2
        let diff = &self.zeta_pow(k) - &self.zeta_pow(-k);
        Some((&i * &diff).scale(&Rational::new(-1, 2).unwrap()))
    }

    /// Power-basis coordinates `coords` read as an element.
    pub fn from_coords(&self, coords: Vec<Rational>) -> CyclotomicNumber {
        self.wrap(Poly::new(coords))
    }
}

/// An element of `Q(zeta_N)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CyclotomicNumber {
    field: CyclotomicField,
    coords: Poly,
}

impl CyclotomicNumber {
    pub fn field(&self) -> &CyclotomicField {
        &self.field
    }

    pub fn coords(&self) -> &[Rational] {
        self.coords.coeffs()
    }

    pub fn is_zero(&self) -> bool {
        self.coords.is_zero()
    }

    /// The value if it lies in `Q`.
    pub fn as_rational(&self) -> Option<Rational> {
        self.coords.is_constant().then(|| self.coords.coeff(0))
    }

    pub fn scale(&self, c: &Rational) -> CyclotomicNumber {
        CyclotomicNumber {
            field: self.field.clone(),
            coords: self.coords.scale(c),
        }
    }

    /// Complex conjugation, `zeta -> zeta^{-1}`.
    pub fn conj(&self) -> CyclotomicNumber {
        let n = self.field.order as usize;
        let mut out = vec![Rational::zero(); n];
        for (k, c) in self.coords.coeffs().iter().enumerate() {
            out[(n - k) % n] += c;
        }
        self.field.wrap(Poly::new(out))
    }

    pub fn is_real(&self) -> bool {
        self.conj() == *self
    }

    /// Real part as a float: `sum c_k cos(2 pi k / N)`.
    pub fn re_f64(&self) -> f64 {
        let n = self.field.order as f64;
        self.coords
            .coeffs()
            .iter()
            .enumerate()
            .map(|(k, c)| c.to_f64() * (std::f64::consts::TAU * k as f64 / n).cos())
            .sum()
    }

    fn check_same_field(&self, other: &CyclotomicNumber) {
        assert_eq!(
            self.field.order, other.field.order,
            "mixing elements of different cyclotomic fields"
        );
    }
}

impl std::ops::Add for &CyclotomicNumber {
    type Output = CyclotomicNumber;
    fn add(self, rhs: &CyclotomicNumber) -> CyclotomicNumber {
        self.check_same_field(rhs);
        CyclotomicNumber {
            field: self.field.clone(),
            coords: &self.coords + &rhs.coords,
        }
    }
}

impl std::ops::Sub for &CyclotomicNumber {
    type Output = CyclotomicNumber;
    fn sub(self, rhs: &CyclotomicNumber) -> CyclotomicNumber {
        self.check_same_field(rhs);
        CyclotomicNumber {
            field: self.field.clone(),
            coords: &self.coords - &rhs.coords,
        }
    }
}

impl std::ops::Mul for &CyclotomicNumber {
    type Output = CyclotomicNumber;
    fn mul(self, rhs: &CyclotomicNumber) -> CyclotomicNumber {
        self.check_same_field(rhs);
        self.field.wrap(self.coords.mul(&rhs.coords))
    }
}

impl std::ops::Neg for &CyclotomicNumber {
    type Output = CyclotomicNumber;
    fn neg(self) -> CyclotomicNumber {
        CyclotomicNumber {
            field: self.field.clone(),
            coords: -&self.coords,
        }
    }
}

/// A real element of a cyclotomic field (fixed by complex conjugation).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CyclotomicReal(CyclotomicNumber);

impl CyclotomicReal {
    /// `None` unless `x` is fixed by conjugation.
    pub fn new(x: CyclotomicNumber) -> Option<Self> {
        x.is_real().then_some(CyclotomicReal(x))
    }

    pub fn rational(field: &CyclotomicField, r: Rational) -> Self {
        CyclotomicReal(field.rational(r))
    }

    pub fn number(&self) -> &CyclotomicNumber {
        &self.0
    }

    pub fn field_order(&self) -> u64 {
        self.0.field.order
    }

    pub fn coords(&self) -> &[Rational] {
        self.0.coords()
    }

    pub fn is_zero(&self) -> bool {
        self.0.is_zero()
    }

    pub fn as_rational(&self) -> Option<Rational> {
        self.0.as_rational()
    }

    pub fn square(&self) -> CyclotomicReal {
        CyclotomicReal(&self.0 * &self.0)
    }

    pub fn to_f64(&self) -> f64 {
        self.0.re_f64()
    }

    /// Sign of the value: -1, 0 or 1. Decided exactly for rationals and by
    /// a float evaluation otherwise.
    pub fn signum(&self) -> i32 {
        if let Some(r) = self.as_rational() {
            return r.signum();
        }
        if self.to_f64() < 0.0 {
            -1
        } else {
            1
        }
    }

    /// `x = a + b*sqrt(m)` with rational `a`, when `x` has degree two over `Q`.
    pub fn as_quadratic(&self) -> Option<(Rational, Surd)> {
        if self.as_rational().is_some() {
            return None;
        }
        let x = &self.0;
        let x2 = x * x;
        // x^2 = p x + q, read coordinate-wise
        let len = x.coords().len().max(x2.coords().len());
        let coord = |v: &CyclotomicNumber, k: usize| v.coords.coeff(k);
        let matrix: Vec<Vec<Rational>> = (0..len)
            .map(|k| {
                let one = if k == 0 { Rational::one() } else { Rational::zero() };
                vec![coord(x, k), one]
            })
            .collect();
        let rhs: Vec<Rational> = (0..len).map(|k| coord(&x2, k)).collect();
        let pq = solve_linear(&matrix, &rhs).ok()?;
        let shift = &pq[0] / &Rational::from(2);
        let rest = CyclotomicReal(x - &x.field.rational(shift.clone()));
        let surd = rest.as_surd()?;
        Some((shift, surd))
    }

    /// `x = sign * a * sqrt(m)` with `a` rational and `m > 1` a squarefree
    /// integer, when `x^2` is rational.
    pub fn as_surd(&self) -> Option<Surd> {
        if self.as_rational().is_some() {
            return None;
        }
        let sq = self.square().as_rational()?;
        if sq.is_negative() {
            return None;
        }
        // sqrt(p/q) = sqrt(p q) / q
        let pq = sq.numer() * sq.denom();
        let (outer, radicand) = square_part(&pq)?;
        if radicand.is_one() {
            return None;
        }
        let mut coeff = Rational::new(outer, sq.denom().clone()).ok()?;
        if self.signum() < 0 {
            coeff = -coeff;
        }
        Some(Surd { coeff, radicand })
    }
}

impl CyclotomicReal {
    /// `x = c * sqrt(a + b*sqrt(m))` with integers `a`, `b`, when `x^2` has
    /// degree two over `Q` and `x` itself is not quadratic.
    pub fn as_nested_root(&self) -> Option<NestedRoot> {
        if self.as_rational().is_some() || self.as_surd().is_some() || self.as_quadratic().is_some() {
            return None;
        }
        let (a, b) = self.square().as_quadratic()?;
        let d = a.denom().lcm(b.coeff.denom());
        let d2 = Rational::from(&d * &d);
        let (big_a, big_b) = ((&a * &d2).numer().clone(), (&b.coeff * &d2).numer().clone());
        let (s, _) = square_part(&big_a.gcd(&big_b))?;
        let s2 = &s * &s;
        let mut coeff = Rational::new(s, d).ok()?;
        if self.signum() < 0 {
            coeff = -coeff;
        }
        Some(NestedRoot {
            coeff,
            rational_part: big_a / &s2,
            surd: Surd {
                coeff: Rational::from(big_b / &s2),
                radicand: b.radicand,
            },
        })
    }
}

/// `coeff * sqrt(rational_part + surd)`; `rational_part` and the surd
/// coefficient are integers.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct NestedRoot {
    pub coeff: Rational,
    pub rational_part: BigInt,
    pub surd: Surd,
}

impl NestedRoot {
    /// Text of `|x|`, so the caller controls the sign.
    pub fn magnitude_text(&self, latex: bool) -> String {
        let sign = if self.surd.coeff.is_negative() { "-" } else { "+" };
        let b = self.surd.coeff.abs();
        let m = &self.surd.radicand;
        let c = self.coeff.abs();
        if latex {
            let inner_b = if b.is_one() { String::new() } else { b.to_string() };
            let outer = if c.is_one() { String::new() } else { latex_rational(&c) };
            format!("{outer}\\sqrt{{{} {sign} {inner_b}\\sqrt{{{m}}}}}", self.rational_part)
        } else {
            let inner_b = if b.is_one() { String::new() } else { format!("{b}*") };
            let outer = if c.is_one() { String::new() } else { format!("{c}*") };
            format!("{outer}sqrt({} {sign} {inner_b}sqrt({m}))", self.rational_part)
        }
    }
}

/// `coeff * sqrt(radicand)` with a squarefree radicand.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Surd {
    pub coeff: Rational,
    pub radicand: BigInt,
}

/// Splits `n > 0` as `a^2 * m` with `m` squarefree. Gives up (None) when the
/// cofactor left after trial division cannot be classified.
fn square_part(n: &BigInt) -> Option<(BigInt, BigInt)> {
    if n.sign() != Sign::Plus {
        return None;
    }
    let mut rest = n.clone();
    let mut outer = BigInt::one();
    let mut free = BigInt::one();
    let limit: u64 = 100_000;
    let mut p: u64 = 2;
    while p <= limit {
        let bp = BigInt::from(p);
        if &bp * &bp > rest {
            break;
        }
        let mut e = 0;
        while rest.is_multiple_of(&bp) {
            rest /= &bp;
            e += 1;
        }
        for _ in 0..e / 2 {
            outer *= &bp;
        }
        if e % 2 == 1 {
            free *= &bp;
        }
        p += if p == 2 { 1 } else { 2 };
    }
    if rest.is_one() {
        return Some((outer, free));
    }
    let lim = BigInt::from(limit);
    if rest <= &lim * &lim {
        // no factor up to sqrt(rest): prime
        return Some((outer, free * rest));
    }
    let r = rest.sqrt();
    if &r * &r == rest {
        // square of a cofactor without small factors, possibly composite;
        // its square root is still exact
        return Some((outer * r, free));
    }
    None
}

/// Angle `2 pi k / N` rendered as a reduced multiple of pi, e.g. `2*Pi/3`.
pub(crate) fn pi_multiple(k: u64, n: u64, latex: bool) -> String {
    let g = (2 * k).gcd(&n);
    let (p, q) = (2 * k / g, n / g);
    let pi = if latex { "\\pi" } else { "Pi" };
    match (p, q, latex) {
        (1, 1, _) => pi.to_string(),
        (p, 1, false) => format!("{p}*{pi}"),
        (p, 1, true) => format!("{p}{pi}"),
        (1, q, false) => format!("{pi}/{q}"),
        (p, q, false) => format!("{p}*{pi}/{q}"),
        (1, q, true) => format!("\\frac{{{pi}}}{{{q}}}"),
        (p, q, true) => format!("\\frac{{{p}{pi}}}{{{q}}}"),
    }
}

impl CyclotomicReal {
    /// Exact text for the value: a rational, `a*sqrt(m)`, `(a + b*sqrt(m))`,
    /// `c*sqrt(a + b*sqrt(m))`, or a combination of cosines `c_0 + c_1*cos(2*Pi/N) + ...` read off the power basis.
    pub fn to_expr(&self) -> String {
        if let Some(r) = self.as_rational() {
            return r.to_string();
        }
        if let Some(s) = self.as_surd() {
            return if s.coeff.is_one() {
                format!("sqrt({})", s.radicand)
            } else if (-&s.coeff).is_one() {
                format!("-sqrt({})", s.radicand)
            } else {
                format!("{}*sqrt({})", s.coeff, s.radicand)
            };
        }
        if let Some((a, s)) = self.as_quadratic() {
            let sign = if s.coeff.is_negative() { "-" } else { "+" };
            let mag = s.coeff.abs();
            let root = if mag.is_one() {
                format!("sqrt({})", s.radicand)
            } else {
                format!("{mag}*sqrt({})", s.radicand)
            };
            return format!("({a} {sign} {root})");
        }
        if let Some(r) = self.as_nested_root() {
            let sign = if r.coeff.is_negative() { "-" } else { "" };
            return format!("{sign}{}", r.magnitude_text(false));
        }
        let n = self.field_order();
        let mut parts: Vec<String> = Vec::new();
        for (k, c) in self.coords().iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let term = if k == 0 {
                c.abs().to_string()
            } else {
                format!("{}*cos({})", c.abs(), pi_multiple(k as u64, n, false))
            };
            let sign = if c.is_negative() { "-" } else { "+" };
            if parts.is_empty() {
                parts.push(if c.is_negative() { format!("-{term}") } else { term });
            } else {
                parts.push(format!("{sign} {term}"));
            }
        }
        format!("({})", parts.join(" "))
    }

    pub fn to_latex(&self) -> String {
        if let Some(r) = self.as_rational() {
            return latex_rational(&r);
        }
        if let Some(s) = self.as_surd() {
            let mag = s.coeff.abs();
            let sign = if s.coeff.is_negative() { "-" } else { "" };
            return if mag.is_one() {
                format!("{sign}\\sqrt{{{}}}", s.radicand)
            } else {
                format!("{sign}{}\\sqrt{{{}}}", latex_rational(&mag), s.radicand)
            };
        }
        if let Some((a, s)) = self.as_quadratic() {
            let sign = if s.coeff.is_negative() { "-" } else { "+" };
            let mag = s.coeff.abs();
            let coeff = if mag.is_one() { String::new() } else { latex_rational(&mag) };
            return format!("\\left({} {sign} {coeff}\\sqrt{{{}}}\\right)", latex_rational(&a), s.radicand);
        }
        if let Some(r) = self.as_nested_root() {
            let sign = if r.coeff.is_negative() { "-" } else { "" };
            return format!("{sign}{}", r.magnitude_text(true));
        }
        let n = self.field_order();
        let mut out = String::from("\\left(");
        let mut first = true;
        for (k, c) in self.coords().iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            if c.is_negative() {
                out.push_str(if first { "-" } else { " - " });
            } else if !first {
                out.push_str(" + ");
            }
            out.push_str(&latex_rational(&c.abs()));
            if k > 0 {
                out.push_str(&format!("\\cos\\left({}\\right)", pi_multiple(k as u64, n, true)));
            }
            first = false;
        }
        out.push_str("\\right)");
        out
    }
}

pub(crate) fn latex_rational(r: &Rational) -> String {
    let sign = if r.is_negative() { "-" } else { "" };
    if r.is_integer() {
        format!("{sign}{}", r.numer().abs())
    } else {
        format!("{sign}\\frac{{{}}}{{{}}}", r.numer().abs(), r.denom())
    }
}

impl fmt::Display for CyclotomicReal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.to_expr())
    }
}

/// Twelve significant digits.
pub(crate) fn approx(x: f64) -> String {
    if x == 0.0 {
        return "0".to_string();
    }
    let s = format!("{:.11e}", x);
    // shorten to plain notation when the exponent is moderate
    let mag = x.abs().log10().floor() as i32;
    if (-4..12).contains(&mag) {
        let decimals = (11 - mag).max(0) as usize;
        format!("{:.*}", decimals, x)
    } else {
        s
    }
}
