//! Acceptance checks, one line per criterion on stderr (bypassing the test
//! harness capture so the lines show up in plain `cargo test` output).

use std::io::Write;
use std::process::Command;
use std::time::{Duration, Instant};

use proptest::prelude::*;
use proptest::test_runner::{Config, TestRunner};

use hilbpoly::exact::{Poly, Rational};
use hilbpoly::quasipoly::{to_fourier, QuasiPolynomial};
use hilbpoly::series_recon::period_and_degree;
use hilbpoly::slmod::{build_weight_table, hilbert_value_qbin, DegreeVector, HilbertOracle};
use hilbpoly::{analyze, Analysis};
use hilbpoly_cli::{run, Command as Cmd, JobConfig};

type Check = Result<(), String>;

fn dv(d: &[u32]) -> DegreeVector {
    DegreeVector::new(d.to_vec()).unwrap()
}

fn q(n: i64, d: i64) -> Rational {
    Rational::new(n, d).unwrap()
}

fn ensure(cond: bool, msg: impl FnOnce() -> String) -> Check {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

fn analysis(d: &[u32]) -> Result<Analysis, String> {
    analyze(&dv(d)).map_err(|e| format!("{d:?}: {e}"))
}

fn series_fixture() -> Check {
    let out = Command::new(env!("CARGO_BIN_EXE_hilbpoly"))
        .args(["series", "2", "3", "--terms", "13", "--no-cache"])
        .output()
        .map_err(|e| e.to_string())?;
    ensure(out.status.success(), || format!("exit status {}", out.status))?;
    let text = String::from_utf8(out.stdout).map_err(|e| e.to_string())?;
    let want: String = [1, 0, 1, 1, 2, 2, 3, 4, 5, 6, 8, 9, 12]
        .iter()
        .enumerate()
        .map(|(n, v)| format!("{n}: {v}\n"))
        .collect();
    ensure(text == want, || format!("got {text:?}"))
}

fn poincare_fixture() -> Check {
    let a = analysis(&[2, 3])?;
    let num = Poly::from_i64(&[1, -1, 1, -1, 1, -1, 1]);
    ensure(a.poincare.num() == &num, || format!("numerator {}", a.poincare.num().to_string_in("z")))?;
    // z^13 - z^12 - z^10 + z^7 + z^6 - z^3 - z + 1, up to a unit
    let den = Poly::from_i64(&[1, -1, 0, -1, 0, 0, 1, 1, 0, 0, -1, 0, -1, 1]);
    let ratio = den.divrem(a.poincare.den()).map_err(|e| e.to_string())?;
    ensure(ratio.1.is_zero() && ratio.0.is_constant(), || {
        format!("denominator {}", a.poincare.den().to_string_in("z"))
    })?;
    let fac = &a.factorization;
    ensure(fac.multiplicity(1) == 4, || format!("root 1 has multiplicity {}", fac.multiplicity(1)))?;
    let others: Vec<(u64, usize)> = fac.factors.iter().copied().filter(|&(m, _)| m != 1).collect();
    ensure(others == vec![(2, 1), (3, 1), (4, 1), (5, 1)], || format!("other factors {others:?}"))?;
    ensure(fac.root_count() - 4 == 9, || format!("{} roots", fac.root_count()))
}

const FAMILY: [&[u32]; 11] = [
    &[2],
    &[3],
    &[4],
    &[5],
    &[6],
    &[1, 1],
    &[1, 2],
    &[1, 3],
    &[1, 4],
    &[2, 3],
    &[1, 2, 3],
];

fn oracle_equivalence() -> Check {
    for d in FAMILY {
        let qp = analysis(d)?.quasi_polynomial;
        let mut oracle = HilbertOracle::new(&dv(d));
        let values = oracle.values(201).map_err(|e| e.to_string())?;
        for n in qp.valid_from..=200 {
            ensure(qp.evaluate(n) == values[n], || {
                format!("{d:?} at n = {n}: {} vs {}", qp.evaluate(n), values[n])
            })?;
        }
    }
    Ok(())
}

fn coeffs_at(qp: &QuasiPolynomial, power: usize) -> Vec<Rational> {
    qp.constituents.iter().map(|p| p.coeff(power)).collect()
}

fn leading_coefficients() -> Check {
    let all = |qp: &QuasiPolynomial, power: usize, want: Rational| -> Check {
        let got = coeffs_at(qp, power);
        ensure(got.iter().all(|c| *c == want), || {
            format!("{} n^{power}: {got:?}, want {want}", qp.degrees)
        })
    };
    let qp = analysis(&[2, 3])?.quasi_polynomial;
    all(&qp, 3, q(1, 360))?;
    all(&qp, 2, q(7, 240))?;
    all(&analysis(&[6])?.quasi_polynomial, 3, q(1, 1440))?;
    let qp = analysis(&[1, 2, 3])?.quasi_polynomial;
    all(&qp, 5, q(17, 172800))?;
    all(&qp, 4, q(17, 7680))?;
    let qp = analysis(&[5])?.quasi_polynomial;
    for (r, p) in qp.constituents.iter().enumerate() {
        let (want2, odd) = if r % 2 == 0 { (q(1, 192), false) } else { (Rational::zero(), true) };
        ensure(p.coeff(2) == want2, || format!("(5) residue {r}: n^2 coefficient {}", p.coeff(2)))?;
        if odd {
            ensure(p.coeff(1).is_zero(), || format!("(5) residue {r}: n coefficient {}", p.coeff(1)))?;
        }
    }
    Ok(())
}

/// `(power, j, L, cos, sin^2, sign of sin)` for the term `cos/sin(2 pi j n / L)`.
type Expected = (usize, u64, u64, Rational, Rational, i32);

fn fourier_matches(d: &[u32], want: &[Expected]) -> Check {
    let qp = analysis(d)?.quasi_polynomial;
    let form = to_fourier(&qp);
    ensure(form.terms.len() == want.len(), || format!("{d:?}: {} terms", form.terms.len()))?;
    for (power, j, l, cos, sin2, sign) in want {
        let freq = j * form.period / l;
        ensure(freq * l == j * form.period, || format!("{d:?}: period {}", form.period))?;
        let term = form
            .term(*power, freq)
            .ok_or_else(|| format!("{d:?}: no term n^{power} at 2 pi {j}/{l}"))?;
        ensure(term.cos_coeff.as_rational().as_ref() == Some(cos), || {
            format!("{d:?}: cos coefficient {} at {j}/{l}", term.cos_coeff)
        })?;
        let s = &term.sin_coeff;
        ensure(s.square().as_rational().as_ref() == Some(sin2), || {
            format!("{d:?}: sin coefficient {s} at {j}/{l}")
        })?;
        ensure(sin2.is_zero() || s.signum() == *sign, || format!("{d:?}: sign of {s}"))?;
    }
    Ok(())
}

fn fourier_fixtures() -> Check {
    let z = Rational::zero;
    fourier_matches(&[2], &[(0, 0, 1, q(1, 2), z(), 0), (0, 1, 2, q(1, 2), z(), 0)])?;
    fourier_matches(
        &[3],
        &[
            (0, 0, 1, q(1, 4), z(), 0),
            (0, 1, 2, q(1, 4), z(), 0),
            (0, 1, 4, q(1, 2), z(), 0),
        ],
    )?;
    let quartic = [
        (1, 0, 1, q(1, 6), z(), 0),
        (0, 0, 1, q(5, 12), z(), 0),
        (0, 1, 2, q(1, 4), z(), 0),
        (0, 1, 3, q(1, 3), q(1, 27), -1),
    ];
    fourier_matches(&[4], &quartic)?;
    fourier_matches(&[1, 2], &quartic)
}

fn qbinomial_cross_check() -> Check {
    for d in 1..=8u32 {
        let mut oracle = HilbertOracle::new(&DegreeVector::single(d).unwrap());
        for n in 0..=40 {
            let a = oracle.value(n).map_err(|e| e.to_string())?;
            let b = hilbert_value_qbin(d as usize, n).map_err(|e| e.to_string())?;
            ensure(a == b, || format!("d = {d}, n = {n}: {a} vs {b}"))?;
        }
    }
    Ok(())
}

fn degree_and_pole_order() -> Check {
    for d in FAMILY {
        let a = analysis(d)?;
        let pole = period_and_degree(&a.factorization).pole_order_at_one;
        let deg = a.quasi_polynomial.degree();
        ensure(deg.map(|x| x + 1) == Some(pole), || format!("{d:?}: degree {deg:?}, pole order {pole}"))?;
        if *d == [2, 3] {
            ensure(pole == 4, || format!("(2,3) pole order {pole}"))?;
        }
    }
    Ok(())
}

fn property_suite() -> Check {
    let runner = || {
        TestRunner::new(Config {
            cases: 24,
            failure_persistence: None,
            ..Config::default()
        })
    };
    let forms = prop::collection::vec(1u32..=5, 1..=3);

    runner()
        .run(&(forms.clone(), 0usize..10), |(d, n)| {
            let t = build_weight_table(&dv(&d), n);
            for (w, c) in t.row(n) {
                prop_assert_eq!(&t.count(n, -w), c);
            }
            let total: num_bigint::BigUint = t.row(n).map(|(_, c)| c.clone()).sum();
            let dim = dv(&d).dimension() as u64;
            let binom = (0..n as u64).fold(num_bigint::BigUint::from(1u32), |acc, i| acc * (dim + i) / (i + 1));
            prop_assert_eq!(total, binom);
            Ok(())
        })
        .map_err(|e| format!("weights: {e}"))?;

    let small = forms.prop_filter("small", |d| d.iter().sum::<u32>() <= 6);
    runner()
        .run(&small, |d| {
            let d = dv(&d);
            let a = analyze(&d).unwrap();
            let count = hilbpoly::series_recon::default_term_budget(&d) + 16;
            let mut oracle = HilbertOracle::new(&d);
            prop_assert_eq!(a.poincare.series(count).unwrap(), oracle.values(count).unwrap());
            Ok(())
        })
        .map_err(|e| format!("round trip: {e}"))?;

    let perms = prop::collection::vec(1u32..=4, 2..=3).prop_filter("small", |d| d.iter().sum::<u32>() <= 6);
    runner()
        .run(&(perms, 0usize..6), |(d, rot)| {
            let mut other = d.clone();
            other.rotate_left(rot % d.len());
            other.reverse();
            let pol = |d: Vec<u32>| {
                let cfg = JobConfig {
                    degrees: dv(&d),
                    command: Cmd::Pol,
                    format: hilbpoly::quasipoly::Style::Fourier,
                    n: None,
                    terms: None,
                    cache_dir: None,
                };
                run(&cfg).unwrap().stdout
            };
            prop_assert_eq!(pol(d), pol(other));
            Ok(())
        })
        .map_err(|e| format!("permutation: {e}"))
}

#[test]
fn acceptance() {
    let criteria: [(&str, fn() -> Check, Duration); 8] = [
        ("series fixture", series_fixture, Duration::from_secs(1)),
        ("Poincare fixture", poincare_fixture, Duration::from_secs(5)),
        ("quasi-polynomial equals H for n0..200", oracle_equivalence, Duration::from_secs(120)),
        ("leading coefficients", leading_coefficients, Duration::MAX),
        ("trigonometric form coefficients", fourier_fixtures, Duration::MAX),
        ("weight count equals q-binomial", qbinomial_cross_check, Duration::from_secs(30)),
        ("degree + 1 equals pole order at 1", degree_and_pole_order, Duration::MAX),
        ("property suite", property_suite, Duration::MAX),
    ];
    let mut failed = Vec::new();
    let mut err = std::io::stderr().lock();
    for (i, (name, check, limit)) in criteria.iter().enumerate() {
        let start = Instant::now();
        let result = check();
        let took = start.elapsed();
        let result = result.and_then(|()| {
            ensure(took < *limit, || format!("took {:.2} s, limit {:.0} s", took.as_secs_f64(), limit.as_secs_f64()))
        });
        let status = match &result {
            Ok(()) => "PASS".to_string(),
            Err(e) => format!("FAIL: {e}"),
        };
        writeln!(err, "criterion {} [{name}] {status} ({:.3} s)", i + 1, took.as_secs_f64()).unwrap();
        if result.is_err() {
            failed.push(i + 1);
        }
    }
    assert!(failed.is_empty(), "failed criteria: {failed:?}");
}
