//! Minimal linear recurrences over the rationals (Berlekamp–Massey).

use crate::exact::{Poly, Rational};

/// Shortest recurrence found for a finite sequence.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Recurrence {
    /// Connection polynomial `C(z) = 1 + c_1 z + ... + c_k z^k` with
    /// `s_i + c_1 s_{i-1} + ... + c_k s_{i-k} = 0` for all `i >= length`.
    pub connection: Poly,
    /// Linear complexity: the number of leading terms not governed by the
    /// recurrence.
    pub length: usize,
}

pub fn berlekamp_massey(seq: &[Rational]) -> Recurrence {
    let mut c: Vec<Rational> = vec![Rational::one()];
    let mut b: Vec<Rational> = vec![Rational::one()];
    let mut length = 0usize;
    let mut gap = 1usize;
    let mut last_discrepancy = Rational::one();

    for i in 0..seq.len() {
        let mut delta = seq[i].clone();
        for (j, cj) in c.iter().enumerate().skip(1).take(i) {
            if !cj.is_zero() {
                delta += cj * &seq[i - j];
            }
        }
        if delta.is_zero() {
            gap += 1;
            continue;
        }
        let factor = &delta / &last_discrepancy;
        let previous = c.clone();
        if c.len() < b.len() + gap {
            c.resize(b.len() + gap, Rational::zero());
        }
        for (j, bj) in b.iter().enumerate() {
            if !bj.is_zero() {
                c[j + gap] -= &factor * bj;
            }
        }
        if 2 * length <= i {
            length = i + 1 - length;
            b = previous;
            last_discrepancy = delta;
            gap = 1;
        } else {
            gap += 1;
        }
    }
    Recurrence {
        connection: Poly::new(c),
        length,
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn seq(v: &[i64]) -> Vec<Rational> {
        v.iter().map(|&x| Rational::from(x)).collect()
    }

    #[test]
    fn fibonacci() {
        let r = berlekamp_massey(&seq(&[1, 1, 2, 3, 5, 8, 13, 21, 34]));
        assert_eq!(r.length, 2);
        assert_eq!(r.connection, Poly::from_i64(&[1, -1, -1]));
    }

    #[test]
    fn impulse_then_zeros() {
        let r = berlekamp_massey(&seq(&[1, 0, 0, 0, 0, 0]));
        assert_eq!(r.length, 1);
        assert_eq!(r.connection, Poly::one());
    }

    #[test]
    fn alternating_parity() {
        let r = berlekamp_massey(&seq(&[1, 0, 1, 0, 1, 0, 1, 0]));
        assert_eq!(r.length, 2);
        assert_eq!(r.connection, Poly::from_i64(&[1, 0, -1]));
    }

    #[test]
    fn all_zero() {
        let r = berlekamp_massey(&seq(&[0, 0, 0]));
        assert_eq!(r.length, 0);
        assert_eq!(r.connection, Poly::one());
    }

    #[test]
    fn rational_geometric() {
        let s: Vec<Rational> = (0..8).map(|k| Rational::new(1, 1i64 << k).unwrap()).collect();
        let r = berlekamp_massey(&s);
        assert_eq!(r.length, 1);
        assert_eq!(r.connection, Poly::new(vec![Rational::one(), Rational::new(-1, 2).unwrap()]));
    }
}
