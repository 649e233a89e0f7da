//! Exact phase exponents for the Heisenberg calculus.

use super::{GaussRational, LaurentPoly};
use num::rational::BigRational;
use num::{BigInt, Zero};
use std::fmt;

/// A phase e^{i pi c(b)} stored through its exponent c, a Laurent
/// polynomial in the deformation parameter b. The constant part of c only
/// matters modulo 2, and canonicalization reduces its real part into
/// [0, 2). The natural variable of the calculus is tau = b^2 (q = e^{i pi
/// tau}); tau-exponents embed as even powers of b, and `as_tau` recovers
/// them when possible.
#[derive(Clone, PartialEq, Eq)]
pub struct PhaseExp {
    c: LaurentPoly,
}

impl PhaseExp {
    pub fn new(c: LaurentPoly) -> Self {
        PhaseExp { c }.canonical()
    }

    /// The trivial phase 1.
    pub fn one() -> Self {
        PhaseExp { c: LaurentPoly::zero() }
    }

    /// Phase with exponent c(tau); exponents are doubled into the b
    /// variable (tau = b^2).
    pub fn from_tau(c_tau: &LaurentPoly) -> Self {
        Self::new(c_tau.stretched(2))
    }

    /// Exponent as a polynomial in tau, when only even powers of b occur.
    pub fn as_tau(&self) -> Option<LaurentPoly> {
        let mut out = LaurentPoly::zero();
        for (k, coeff) in self.c.iter_terms() {
            if k % 2 != 0 {
                return None;
            }
            out = out + LaurentPoly::monomial(coeff.clone(), k / 2);
        }
        Some(out)
    }

    pub fn exponent(&self) -> &LaurentPoly {
        &self.c
    }

    /// Reduces the real part of the b^0 coefficient modulo 2 into [0, 2).
    pub fn canonical(&self) -> Self {
        let c0 = self.c.coeff(0);
        let two = BigRational::from_integer(BigInt::from(2));
        let wraps = (c0.re.clone() / two.clone()).floor();
        if wraps.is_zero() {
            return self.clone();
        }
        let shift = GaussRational::new(wraps * two, BigRational::zero());
        let c = &self.c - &LaurentPoly::constant(shift);
        PhaseExp { c }
    }

    pub fn is_one(&self) -> bool {
        self.c.is_zero()
    }

    /// Phase multiplication (exponent addition).
    pub fn times(&self, other: &Self) -> Self {
        Self::new(&self.c + &other.c)
    }

    /// Phase inversion (exponent negation).
    pub fn inverse(&self) -> Self {
        Self::new(-&self.c)
    }
}

impl fmt::Debug for PhaseExp {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl fmt::Display for PhaseExp {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_one() {
            write!(f, "1")
        } else {
            write!(f, "e^{{i pi ({})}}", self.c.display_with("b"))
        }
    }
}

#[cfg(test)]
mod tests {
    use super::super::{gr_int, gr_ratio};
    use super::*;

    fn tau_poly(terms: &[(i64, i64)]) -> LaurentPoly {
        let mut p = LaurentPoly::zero();
        for &(k, c) in terms {
            p = p + LaurentPoly::monomial(gr_int(c), k);
        }
        p
    }

    #[test]
    fn full_turn_is_trivial() {
        let p = PhaseExp::from_tau(&tau_poly(&[(0, -2)]));
        assert!(p.is_one());
    }

    #[test]
    fn tau_linear_part_is_untouched() {
        let p = PhaseExp::from_tau(&tau_poly(&[(1, 1)]));
        assert_eq!(p.as_tau().unwrap(), tau_poly(&[(1, 1)]));
        assert!(!p.is_one());
    }

    #[test]
    fn constant_part_reduces_mod_two() {
        let p = PhaseExp::from_tau(&tau_poly(&[(0, 3), (-1, 2)]));
        assert_eq!(p.as_tau().unwrap(), tau_poly(&[(0, 1), (-1, 2)]));
    }

    #[test]
    fn negative_fraction_lands_in_window() {
        let c = LaurentPoly::constant(gr_ratio(-1, 2));
        let p = PhaseExp::new(c);
        assert_eq!(p.exponent().coeff(0), gr_ratio(3, 2));
    }

    #[test]
    fn exponent_addition() {
        let a = PhaseExp::from_tau(&tau_poly(&[(0, 1), (1, 1)]));
        let b = PhaseExp::from_tau(&tau_poly(&[(0, 1), (1, 2)]));
        let prod = a.times(&b);
        assert_eq!(prod.as_tau().unwrap(), tau_poly(&[(1, 3)]));
    }

    #[test]
    fn odd_b_powers_have_no_tau_form() {
        let p = PhaseExp::new(LaurentPoly::monomial(gr_int(1), 1));
        assert!(p.as_tau().is_none());
    }
}
