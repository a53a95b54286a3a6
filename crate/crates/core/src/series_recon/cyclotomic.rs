use std::collections::BTreeMap;

use crate::exact::{Poly, Rational};

pub(crate) fn divisors(m: u64) -> Vec<u64> {
    let mut small = Vec::new();
    let mut large = Vec::new();
    let mut i = 1;
    while i * i <= m {
        if m.is_multiple_of(i) {
            small.push(i);
            if i != m / i {
                large.push(m / i);
            }
        }
        i += 1;
    }
    small.extend(large.into_iter().rev());
    small
}

/// Euler's totient.
pub fn euler_phi(mut m: u64) -> u64 {
    let mut result = m;
    let mut p = 2;
    while p * p <= m {
        if m.is_multiple_of(p) {
            while m.is_multiple_of(p) {
                m /= p;
            }
            result -= result / p;
        }
        p += 1;
    }
    if m > 1 {
        result -= result / m;
    }
    result
}

/// Memoizing source of cyclotomic polynomials.
#[derive(Default, Debug)]
pub struct CyclotomicCache {
    known: BTreeMap<u64, Poly>,
}

impl CyclotomicCache {
    pub fn get(&mut self, m: u64) -> Poly {
        assert!(m >= 1, "cyclotomic order must be positive");
        if let Some(p) = self.known.get(&m) {
            return p.clone();
        }
        // z^m - 1 divided by every Phi_k with k a proper divisor of m
        let mut acc = Poly::monomial(Rational::one(), m as usize);
        acc = &acc - &Poly::one();
        for k in divisors(m) {
            if k == m {
                continue;
            }
            let phi = self.get(k);
            acc = acc
                .div_exact(&phi)
                .expect("Phi_k divides z^m - 1 for k | m");
        }
        self.known.insert(m, acc.clone());
        acc
    }
}

/// The `m`-th cyclotomic polynomial.
pub fn cyclotomic(m: u64) -> Poly {
    CyclotomicCache::default().get(m)
}
