//! Quantum integers, binomials and step sums.

use crate::coeff::Coeff;
use crate::laurent::{Laurent, LaurentPoly};

/// `[m] = (v^m - v^-m) / (v - v^-1)`, zero for `m = 0`.
pub fn quantum_int(m: u32) -> LaurentPoly {
    Laurent::quantum_int_base(m as i64, 1)
}

/// `[m]! = [1][2]...[m]`.
pub fn quantum_factorial<C: Coeff>(m: u32) -> Laurent<C> {
    (1..=m as i64).fold(Laurent::one(), |acc, i| {
        &acc * &Laurent::quantum_int_base(i, 1)
    })
}

/// Gaussian binomial `[m choose s]` in any coefficient ring, by exact division of factorials.
///
/// Panics if the division leaves a remainder.
pub fn quantum_binom_in<C: Coeff>(m: u32, s: u32) -> Laurent<C> {
    if s > m {
        return Laurent::zero();
    }
    let den = &quantum_factorial::<C>(s) * &quantum_factorial::<C>(m - s);
    quantum_factorial::<C>(m)
        .div_exact(&den)
        .expect("quantum binomial must divide exactly")
}

/// `[m choose s]` with rational coefficients; zero when `s > m`.
pub fn quantum_binom(m: u32, s: u32) -> LaurentPoly {
    quantum_binom_in(m, s)
}

/// `1 + v^{2k} + ... + v^{2k(m-1)}`.
pub fn step_poly(m: u32, k: u32) -> LaurentPoly {
    Laurent::from_terms((0..m as i64).map(|i| (2 * k as i64 * i, Coeff::one())))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn lp(s: &str) -> LaurentPoly {
        s.parse().unwrap()
    }

    #[test]
    fn quantum_int_examples() {
        assert!(quantum_int(0).is_zero());
        assert_eq!(quantum_int(2), lp("v + v^-1"));
        assert_eq!(quantum_int(3), lp("v^2 + 1 + v^-2"));
    }

    #[test]
    fn binom_examples() {
        assert_eq!(quantum_binom(3, 1), lp("v^2 + 1 + v^-2"));
        assert_eq!(quantum_binom(2, 2), lp("1"));
        assert_eq!(quantum_binom(4, 2), lp("v^4 + v^2 + 2 + v^-2 + v^-4"));
        assert!(quantum_binom(2, 3).is_zero());
    }

    #[test]
    fn step_examples() {
        assert_eq!(step_poly(3, 1), lp("1 + v^2 + v^4"));
        assert!(step_poly(0, 1).is_zero());
        assert_eq!(step_poly(2, 2), lp("1 + v^4"));
    }
}
