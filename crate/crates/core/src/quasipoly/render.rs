use std::fmt;
use std::str::FromStr;

use num_integer::Integer;

use crate::exact::Poly;

use super::cyclo_real::{approx, latex_rational, CyclotomicReal};
use super::fourier::{to_fourier, FourierForm};
use super::QuasiPolynomial;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Style {
    Constituents,
    Fourier,
    Latex,
    Json,
}

impl Style {
    pub fn name(self) -> &'static str {
        match self {
            Style::Constituents => "constituents",
            Style::Fourier => "fourier",
            Style::Latex => "latex",
            Style::Json => "json",
        }
    }
}

impl fmt::Display for Style {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Style {
    type Err = String;
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "constituents" => Ok(Style::Constituents),
            "fourier" => Ok(Style::Fourier),
            "latex" => Ok(Style::Latex),
            "json" => Ok(Style::Json),
            other => Err(format!("unknown format {other:?}")),
        }
    }
}

pub fn render(qp: &QuasiPolynomial, style: Style) -> String {
    match style {
        Style::Constituents => render_constituents(qp),
        Style::Fourier => render_fourier(&to_fourier(qp), false),
        Style::Latex => render_fourier(&to_fourier(qp), true),
        Style::Json => serde_json::to_string_pretty(qp).expect("quasi-polynomial serializes"),
    }
}

/// Lists `n≡r (mod L): P_r(n)` for residues whose constituent differs from
/// the most common one, which is printed last as `otherwise`.
pub fn render_constituents(qp: &QuasiPolynomial) -> String {
    let cs = &qp.constituents;
    if cs.iter().all(|p| p == &cs[0]) {
        return poly_in_n(&cs[0]);
    }
    // most frequent constituent; ties go to the one seen at the larger residue
    let mut best = 0;
    let mut best_count = 0;
    for (r, p) in cs.iter().enumerate() {
        let count = cs.iter().filter(|q| *q == p).count();
        if count >= best_count {
            best = r;
            best_count = count;
        }
    }
    let common = &cs[best];
    let mut parts: Vec<String> = cs
        .iter()
        .enumerate()
        .filter(|(_, p)| *p != common)
        .map(|(r, p)| format!("n≡{r} (mod {}): {}", qp.period, poly_in_n(p)))
        .collect();
    parts.push(format!("otherwise: {}", poly_in_n(common)));
    parts.join(" ; ")
}

fn poly_in_n(p: &Poly) -> String {
    p.to_string_desc("n")
}

/// `2 pi j n / L` in lowest terms.
fn angle(j: u64, l: u64, latex: bool) -> String {
    let g = (2 * j).gcd(&l);
    let (p, q) = (2 * j / g, l / g);
    if latex {
        let top = if p == 1 { "\\pi n".to_string() } else { format!("{p}\\pi n") };
        if q == 1 {
            top
        } else {
            format!("\\frac{{{top}}}{{{q}}}")
        }
    } else {
        let top = if p == 1 { "Pi*n".to_string() } else { format!("{p}*Pi*n") };
        if q == 1 {
            top
        } else {
            format!("{top}/{q}")
        }
    }
}

/// Sign and magnitude text of a coefficient; irrational values that are not
/// surds print as a parenthesized exact expression with a plus sign.
fn coefficient(c: &CyclotomicReal, latex: bool) -> (bool, String) {
    if let Some(r) = c.as_rational() {
        let mag = r.abs();
        let text = if latex { latex_rational(&mag) } else { mag.to_string() };
        return (r.is_negative(), text);
    }
    if let Some(s) = c.as_surd() {
        let mag = s.coeff.abs();
        let text = match (mag.is_one(), latex) {
            (true, false) => format!("sqrt({})", s.radicand),
            (false, false) => format!("{mag}*sqrt({})", s.radicand),
            (true, true) => format!("\\sqrt{{{}}}", s.radicand),
            (false, true) => format!("{}\\sqrt{{{}}}", latex_rational(&mag), s.radicand),
        };
        return (s.coeff.is_negative(), text);
    }
    if let Some(r) = c.as_nested_root() {
        return (r.coeff.is_negative(), r.magnitude_text(latex));
    }
    (false, if latex { c.to_latex() } else { c.to_expr() })
}

fn power_text(t: usize, latex: bool) -> Option<String> {
    match (t, latex) {
        (0, _) => None,
        (1, _) => Some("n".to_string()),
        (t, false) => Some(format!("n^{t}")),
        (t, true) => Some(format!("n^{{{t}}}")),
    }
}

/// Text (`latex = false`) or LaTeX rendering of a trigonometric form.
///
/// Terms run by descending power of `n`, then ascending frequency, cosine
/// before sine. Coefficients that are not rational get an extra comment line
/// with a 12-digit decimal value.
pub fn render_fourier(form: &FourierForm, latex: bool) -> String {
    let mut terms: Vec<_> = form.terms.iter().collect();
    terms.sort_by(|a, b| b.power.cmp(&a.power).then(a.frequency.cmp(&b.frequency)));

    let mut pieces: Vec<(bool, String)> = Vec::new();
    let mut notes: Vec<String> = Vec::new();
    for t in terms {
        for (coeff, trig) in [(&t.cos_coeff, "cos"), (&t.sin_coeff, "sin")] {
            if coeff.is_zero() {
                continue;
            }
            let mut basis: Vec<String> = Vec::new();
            if let Some(p) = power_text(t.power, latex) {
                basis.push(p);
            }
            if t.frequency != 0 {
                let a = angle(t.frequency, form.period, latex);
                basis.push(if latex {
                    format!("\\{trig}\\left({a}\\right)")
                } else {
                    format!("{trig}({a})")
                });
            }
            let (neg, mag) = coefficient(coeff, latex);
            if coeff.as_rational().is_none() {
                let exact = if latex { coeff.to_latex() } else { coeff.to_expr() };
                notes.push(format!("{exact} ~ {}", approx(coeff.to_f64())));
            }
            let body = if basis.is_empty() {
                mag
            } else if mag == "1" {
                basis.join(if latex { " " } else { "*" })
            } else {
                let sep = if latex { " " } else { "*" };
                format!("{mag}{sep}{}", basis.join(sep))
            };
            pieces.push((neg, body));
        }
    }

    let mut out = String::new();
    if pieces.is_empty() {
        out.push('0');
    }
    for (idx, (neg, body)) in pieces.iter().enumerate() {
        match (idx, neg) {
            (0, true) => out.push('-'),
            (0, false) => {}
            (_, true) => out.push_str(" - "),
            (_, false) => out.push_str(" + "),
        }
        out.push_str(body);
    }
    let marker = if latex { "%" } else { "#" };
    for note in notes {
        out.push('\n');
        out.push_str(&format!("{marker} {note}"));
    }
    out
}
