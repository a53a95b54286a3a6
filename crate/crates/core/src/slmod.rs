//! Weight multiplicities of symmetric powers of `V_d = V_{d_1} + ... + V_{d_s}`
//! and the two classical formulas for the dimension of the degree-`n`
//! invariants.
//!
//! A coefficient variable `x_{i,j}` of the form of degree `d_i` (`0 <= j <= d_i`)
//! carries torus weight `d_i - 2j`. A monomial of degree `n` has the sum of its
//! variables' weights as weight, and the number of invariants of degree `n` is
//! `omega(n, 0) - omega(n, 2)`: the dimension of the zero weight space minus
//! that of weight two.

use std::fmt;

use num_bigint::BigUint;
use num_traits::Zero;
use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::exact::{ExactError, Poly, Rational};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum SlmodError {
    #[error("a degree vector needs at least one form")]
    EmptyDegrees,
    #[error("form degrees must be positive, got {0}")]
    NonPositiveDegree(i64),
    #[error("omega({n}, 0) < omega({n}, 2): weight counts are inconsistent")]
    NegativeHilbertValue { n: usize },
    #[error("q-binomial coefficient is not a non-negative integer at degree {n}")]
    BadQBinomialCoefficient { n: usize },
    #[error(transparent)]
    Exact(#[from] ExactError),
}

/// The degrees `(d_1, ..., d_s)` of the binary forms.
#[derive(Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(try_from = "Vec<i64>", into = "Vec<i64>")]
pub struct DegreeVector(Vec<u32>);

impl DegreeVector {
    pub fn new(degrees: Vec<u32>) -> Result<Self, SlmodError> {
        if degrees.is_empty() {
            return Err(SlmodError::EmptyDegrees);
        }
        if degrees.contains(&0) {
            return Err(SlmodError::NonPositiveDegree(0));
        }
        Ok(DegreeVector(degrees))
    }

    pub fn single(d: u32) -> Result<Self, SlmodError> {
        DegreeVector::new(vec![d])
    }

    pub fn degrees(&self) -> &[u32] {
        &self.0
    }

    pub fn max_degree(&self) -> u32 {
        self.0.iter().copied().max().unwrap_or(0)
    }

    /// Number of coefficient variables, `sum (d_i + 1)`.
    pub fn dimension(&self) -> usize {
        self.0.iter().map(|&d| d as usize + 1).sum()
    }

    /// Same module with the degrees sorted in descending order. The invariant
    /// algebra does not depend on the order of the summands.
    pub fn canonical(&self) -> DegreeVector {
        let mut v = self.0.clone();
        v.sort_unstable_by(|a, b| b.cmp(a));
        DegreeVector(v)
    }

    /// Torus weights of all coefficient variables.
    pub fn variable_weights(&self) -> impl Iterator<Item = i64> + '_ {
        self.0
            .iter()
            .flat_map(|&d| (0..=d as i64).map(move |j| d as i64 - 2 * j))
    }
}

impl TryFrom<Vec<i64>> for DegreeVector {
    type Error = SlmodError;

    fn try_from(v: Vec<i64>) -> Result<Self, Self::Error> {
        let mut out = Vec::with_capacity(v.len());
        for d in v {
            match u32::try_from(d) {
                Ok(d) if d > 0 => out.push(d),
                _ => return Err(SlmodError::NonPositiveDegree(d)),
            }
        }
        DegreeVector::new(out)
    }
}

impl From<DegreeVector> for Vec<i64> {
    fn from(d: DegreeVector) -> Self {
        d.0.into_iter().map(i64::from).collect()
    }
}

impl fmt::Display for DegreeVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.0.iter().map(u32::to_string).collect();
        write!(f, "({})", parts.join(","))
    }
}

impl fmt::Debug for DegreeVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "DegreeVector{self}")
    }
}

/// Weight multiplicities of `S^n(V_d)` for all `n <= max_n`.
///
/// Row `n` stores weights `-n*D ..= n*D` (D the largest form degree) at
/// offset `n*D`.
#[derive(Clone, Debug)]
pub struct WeightTable {
    degrees: DegreeVector,
    max_n: usize,
    rows: Vec<Vec<BigUint>>,
}

impl WeightTable {
    pub fn degree_vector(&self) -> &DegreeVector {
        &self.degrees
    }

    pub fn max_n(&self) -> usize {
        self.max_n
    }

    fn offset(&self, n: usize) -> usize {
        n * self.degrees.max_degree() as usize
    }

    /// Multiplicity of weight `w` in `S^n(V_d)`; zero outside the table's
    /// weight range. Panics if `n > max_n`.
    pub fn count(&self, n: usize, w: i64) -> BigUint {
        assert!(n <= self.max_n, "degree {n} beyond table bound {}", self.max_n);
        let idx = w + self.offset(n) as i64;
        if idx < 0 {
            return BigUint::zero();
        }
        self.rows[n]
            .get(idx as usize)
            .cloned()
            .unwrap_or_else(BigUint::zero)
    }

    /// All `(weight, multiplicity)` pairs with nonzero multiplicity in degree `n`.
    pub fn row(&self, n: usize) -> impl Iterator<Item = (i64, &BigUint)> + '_ {
        let off = self.offset(n) as i64;
        self.rows[n]
            .iter()
            .enumerate()
            .filter(|(_, c)| !c.is_zero())
            .map(move |(i, c)| (i as i64 - off, c))
    }
}

/// Builds the weight table by convolving in one variable at a time.
pub fn build_weight_table(d: &DegreeVector, max_n: usize) -> WeightTable {
    let big_d = d.max_degree() as usize;
    let mut rows: Vec<Vec<BigUint>> = (0..=max_n)
        .map(|n| vec![BigUint::zero(); 2 * n * big_d + 1])
        .collect();
    rows[0][0] = BigUint::from(1u32);
    for wt in d.variable_weights() {
        // Ascending n: row n-1 already contains monomials using this variable,
        // so each pass multiplies by 1/(1 - t x^wt).
        for n in 1..=max_n {
            let (lower, upper) = rows.split_at_mut(n);
            let prev = &lower[n - 1];
            let cur = &mut upper[0];
            // weight w in row n at index w + n*D; previous index w - wt + (n-1)*D
            let shift = big_d as i64 - wt;
            for (j, src) in prev.iter().enumerate() {
                if !src.is_zero() {
                    let target = (j as i64 + shift) as usize;
                    cur[target] += src;
                }
            }
        }
    }
    WeightTable {
        degrees: d.clone(),
        max_n,
        rows,
    }
}

/// `omega_d(n, k)`: the multiplicity of weight `k` in `S^n(V_d)`.
pub fn omega(d: &DegreeVector, n: usize, k: i64) -> BigUint {
    build_weight_table(d, n).count(n, k)
}

fn hilbert_from_table(table: &WeightTable, n: usize) -> Result<BigUint, SlmodError> {
    let zero = table.count(n, 0);
    let two = table.count(n, 2);
    if zero < two {
        return Err(SlmodError::NegativeHilbertValue { n });
    }
    Ok(zero - two)
}

/// Dimension of the degree-`n` invariants, `omega(n, 0) - omega(n, 2)`.
pub fn hilbert_value(d: &DegreeVector, n: usize) -> Result<BigUint, SlmodError> {
    hilbert_from_table(&build_weight_table(d, n), n)
}

/// Caches the weight table of one degree vector and answers Hilbert-function
/// queries from it, rebuilding with a larger bound when asked past its end.
#[derive(Clone, Debug)]
pub struct HilbertOracle {
    table: WeightTable,
}

impl HilbertOracle {
    pub fn new(d: &DegreeVector) -> Self {
        HilbertOracle::with_capacity(d, 16)
    }

    pub fn with_capacity(d: &DegreeVector, max_n: usize) -> Self {
        HilbertOracle {
            table: build_weight_table(&d.canonical(), max_n),
        }
    }

    pub fn degree_vector(&self) -> &DegreeVector {
        self.table.degree_vector()
    }

    pub fn table(&self) -> &WeightTable {
        &self.table
    }

    /// Makes sure the table covers every degree `<= n`.
    pub fn reserve(&mut self, n: usize) {
        if n > self.table.max_n {
            let bound = n.max(2 * self.table.max_n);
            self.table = build_weight_table(&self.table.degrees, bound);
        }
    }

    pub fn value(&mut self, n: usize) -> Result<BigUint, SlmodError> {
        self.reserve(n);
        hilbert_from_table(&self.table, n)
    }

    /// `H(0), ..., H(count - 1)` as rationals.
    pub fn values(&mut self, count: usize) -> Result<Vec<Rational>, SlmodError> {
        self.range(0, count)
    }

    /// `H(start), ..., H(end - 1)` as rationals.
    pub fn range(&mut self, start: usize, end: usize) -> Result<Vec<Rational>, SlmodError> {
        if end > 0 {
            self.reserve(end - 1);
        }
        (start..end)
            .map(|n| hilbert_from_table(&self.table, n).map(Rational::from))
            .collect()
    }
}

/// The Gaussian binomial
/// `(1-q^{d+1})...(1-q^{d+n}) / ((1-q)...(1-q^n))` as a polynomial in `q`.
pub fn gaussian_binomial(d: usize, n: usize) -> Result<Poly, SlmodError> {
    let mut acc = Poly::one();
    // After step i the accumulator is the binomial with i in the bottom
    // slot, which is a polynomial, so every division here is exact.
    for i in 1..=n {
        acc = acc.mul(&Poly::one_minus_power(d + i));
        acc = acc.div_exact(&Poly::one_minus_power(i))?;
    }
    Ok(acc)
}

/// `[q^{nd/2}] (1 - q) * gaussian_binomial(d, n)`, zero when `nd` is odd.
pub fn hilbert_value_qbin(d: usize, n: usize) -> Result<BigUint, SlmodError> {
    if (n * d) % 2 == 1 {
        return Ok(BigUint::zero());
    }
    let half = n * d / 2;
    let g = gaussian_binomial(d, n)?;
    let c = if half == 0 {
        g.coeff(0)
    } else {
        g.coeff(half) - g.coeff(half - 1)
    };
    c.to_biguint()
        .ok_or(SlmodError::BadQBinomialCoefficient { n })
}
