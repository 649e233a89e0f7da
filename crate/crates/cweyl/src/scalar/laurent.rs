//! Dense Laurent polynomials in one formal variable over Gaussian rationals.

use super::{gr_display, gr_to_c64, gr_zero, Complex64, GaussRational};
use num::{One, Zero};
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

/// Laurent polynomial sum_k c_k x^k, stored densely from the lowest power.
///
/// Canonical form: `coeffs` is empty exactly for the zero polynomial and
/// otherwise has nonzero first and last entries; the zero polynomial has
/// `low = 0`.
#[derive(Clone, PartialEq, Eq)]
pub struct LaurentPoly {
    low: i64,
    coeffs: Vec<GaussRational>,
}

impl LaurentPoly {
    pub fn zero() -> Self {
        LaurentPoly { low: 0, coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        Self::monomial(super::gr_one(), 0)
    }

    pub fn constant(c: GaussRational) -> Self {
        Self::monomial(c, 0)
    }

    /// c x^k.
    pub fn monomial(c: GaussRational, k: i64) -> Self {
        if c.is_zero() {
            Self::zero()
        } else {
            LaurentPoly { low: k, coeffs: vec![c] }
        }
    }

    pub fn from_coeffs(low: i64, coeffs: Vec<GaussRational>) -> Self {
        let mut p = LaurentPoly { low, coeffs };
        p.trim();
        p
    }

    fn trim(&mut self) {
        while self.coeffs.last().map(|c| c.is_zero()).unwrap_or(false) {
            self.coeffs.pop();
        }
        let lead_zeros = self.coeffs.iter().take_while(|c| c.is_zero()).count();
        if lead_zeros > 0 {
            self.coeffs.drain(..lead_zeros);
            self.low += lead_zeros as i64;
        }
        if self.coeffs.is_empty() {
            self.low = 0;
        }
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.low == 0 && self.coeffs.len() == 1 && self.coeffs[0].is_one()
    }

    pub fn is_constant(&self) -> bool {
        self.is_zero() || (self.low == 0 && self.coeffs.len() == 1)
    }

    /// Lowest power with nonzero coefficient; 0 for the zero polynomial.
    pub fn low(&self) -> i64 {
        self.low
    }

    /// Highest power with nonzero coefficient; 0 for the zero polynomial.
    pub fn high(&self) -> i64 {
        if self.coeffs.is_empty() {
            0
        } else {
            self.low + self.coeffs.len() as i64 - 1
        }
    }

    pub fn coeff(&self, k: i64) -> GaussRational {
        if k < self.low || k > self.high() || self.coeffs.is_empty() {
            gr_zero()
        } else {
            self.coeffs[(k - self.low) as usize].clone()
        }
    }

    pub fn leading_coeff(&self) -> GaussRational {
        self.coeffs.last().cloned().unwrap_or_else(gr_zero)
    }

    pub fn iter_terms(&self) -> impl Iterator<Item = (i64, &GaussRational)> {
        self.coeffs
            .iter()
            .enumerate()
            .filter(|(_, c)| !c.is_zero())
            .map(move |(j, c)| (self.low + j as i64, c))
    }

    /// Multiplies by x^k.
    pub fn shifted(&self, k: i64) -> Self {
        if self.is_zero() {
            Self::zero()
        } else {
            LaurentPoly { low: self.low + k, coeffs: self.coeffs.clone() }
        }
    }

    pub fn scaled(&self, c: &GaussRational) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        LaurentPoly {
            low: self.low,
            coeffs: self.coeffs.iter().map(|a| a * c).collect(),
        }
    }

    /// Substitutes x -> x^m for m >= 1 (spaces exponents out by m).
    pub fn stretched(&self, m: i64) -> Self {
        assert!(m >= 1, "exponent stretch must be positive");
        let mut out = Self::zero();
        for (k, c) in self.iter_terms() {
            out = out + LaurentPoly::monomial(c.clone(), k * m);
        }
        out
    }

    /// Horner evaluation at a complex point (x^low factored out first).
    pub fn eval(&self, x: Complex64) -> Complex64 {
        if self.is_zero() {
            return Complex64::new(0.0, 0.0);
        }
        let mut acc = Complex64::new(0.0, 0.0);
        for c in self.coeffs.iter().rev() {
            acc = acc * x + gr_to_c64(c);
        }
        acc * x.powi(self.low as i32)
    }

    /// Largest coefficient magnitude, as a crude evaluation scale.
    pub fn coeff_scale(&self) -> f64 {
        self.coeffs.iter().map(|c| gr_to_c64(c).norm()).fold(0.0, f64::max)
    }

    /// The polynomial with the x^low prefactor stripped (its "core"),
    /// together with that low exponent.
    pub(crate) fn core(&self) -> (i64, LaurentPoly) {
        (self.low, self.shifted(-self.low))
    }

    /// Makes the leading coefficient one. Zero stays zero.
    pub(crate) fn monic(&self) -> LaurentPoly {
        match self.coeffs.last() {
            None => Self::zero(),
            Some(lead) if lead.is_one() => self.clone(),
            Some(lead) => {
                let inv = GaussRational::one() / lead.clone();
                self.scaled(&inv)
            }
        }
    }

    /// Euclidean division for ordinary polynomials (`low >= 0` required on
    /// both sides). Returns (quotient, remainder).
    pub(crate) fn divrem(&self, d: &LaurentPoly) -> (LaurentPoly, LaurentPoly) {
        assert!(self.low >= 0 && d.low >= 0, "divrem needs ordinary polynomials");
        assert!(!d.is_zero(), "polynomial division by zero");
        let dd = d.high();
        let mut rem: Vec<GaussRational> = vec![gr_zero(); (self.high() + 1).max(0) as usize];
        for (k, c) in self.iter_terms() {
            rem[k as usize] = c.clone();
        }
        let lead = d.coeff(dd);
        let mut quo: Vec<GaussRational> = vec![gr_zero(); rem.len()];
        let mut top = rem.len() as i64 - 1;
        while top >= dd {
            if rem[top as usize].is_zero() {
                top -= 1;
                continue;
            }
            let f = rem[top as usize].clone() / lead.clone();
            let shift = top - dd;
            for (k, c) in d.iter_terms() {
                let idx = (k + shift) as usize;
                rem[idx] = rem[idx].clone() - c * &f;
            }
            quo[shift as usize] = f;
            top -= 1;
        }
        (
            LaurentPoly::from_coeffs(0, quo),
            LaurentPoly::from_coeffs(0, rem),
        )
    }

    /// Monic gcd of the cores (x-power prefactors are units and ignored).
    pub(crate) fn gcd_core(&self, other: &LaurentPoly) -> LaurentPoly {
        let (_, mut a) = self.core();
        let (_, mut b) = other.core();
        if a.is_zero() {
            return b.monic();
        }
        if b.is_zero() {
            return a.monic();
        }
        if a.is_constant() || b.is_constant() {
            return Self::one();
        }
        if a == b {
            return a.monic();
        }
        a = a.monic();
        b = b.monic();
        while !b.is_zero() {
            if b.is_constant() {
                return Self::one();
            }
            let (_, r) = a.divrem(&b);
            let (_, rcore) = r.core();
            a = b;
            b = rcore.monic();
        }
        a
    }

    /// Exact division of cores; panics if the division is not exact.
    pub(crate) fn div_exact_core(&self, d: &LaurentPoly) -> LaurentPoly {
        let (alow, a) = self.core();
        let (_, dc) = d.core();
        if a.is_zero() {
            return Self::zero();
        }
        if dc.is_one() {
            return a.shifted(alow);
        }
        let (q, r) = a.divrem(&dc);
        assert!(r.is_zero(), "inexact polynomial division");
        q.shifted(alow)
    }
}

impl Add for &LaurentPoly {
    type Output = LaurentPoly;
    fn add(self, rhs: &LaurentPoly) -> LaurentPoly {
        if self.is_zero() {
            return rhs.clone();
        }
        if rhs.is_zero() {
            return self.clone();
        }
        let low = self.low.min(rhs.low);
        let high = self.high().max(rhs.high());
        let mut coeffs = vec![gr_zero(); (high - low + 1) as usize];
        for (k, c) in self.iter_terms() {
            coeffs[(k - low) as usize] = c.clone();
        }
        for (k, c) in rhs.iter_terms() {
            let idx = (k - low) as usize;
            coeffs[idx] = coeffs[idx].clone() + c;
        }
        LaurentPoly::from_coeffs(low, coeffs)
    }
}

impl Sub for &LaurentPoly {
    type Output = LaurentPoly;
    fn sub(self, rhs: &LaurentPoly) -> LaurentPoly {
        self + &(-rhs)
    }
}

impl Neg for &LaurentPoly {
    type Output = LaurentPoly;
    fn neg(self) -> LaurentPoly {
        LaurentPoly {
            low: self.low,
            coeffs: self.coeffs.iter().map(|c| -c.clone()).collect(),
        }
    }
}

impl Mul for &LaurentPoly {
    type Output = LaurentPoly;
    fn mul(self, rhs: &LaurentPoly) -> LaurentPoly {
        if self.is_zero() || rhs.is_zero() {
            return LaurentPoly::zero();
        }
        let low = self.low + rhs.low;
        let mut coeffs = vec![gr_zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                if b.is_zero() {
                    continue;
                }
                coeffs[i + j] = coeffs[i + j].clone() + a * b;
            }
        }
        LaurentPoly::from_coeffs(low, coeffs)
    }
}

macro_rules! forward_value_ops {
    ($($trait:ident :: $method:ident),*) => {$(
        impl $trait for LaurentPoly {
            type Output = LaurentPoly;
            fn $method(self, rhs: LaurentPoly) -> LaurentPoly {
                (&self).$method(&rhs)
            }
        }
    )*};
}
forward_value_ops!(Add::add, Sub::sub, Mul::mul);

impl Neg for LaurentPoly {
    type Output = LaurentPoly;
    fn neg(self) -> LaurentPoly {
        -&self
    }
}

impl LaurentPoly {
    /// Renders with the given variable name, lowest power first.
    pub fn display_with(&self, var: &str) -> String {
        if self.is_zero() {
            return "0".to_string();
        }
        let mut parts = Vec::new();
        for (k, c) in self.iter_terms() {
            let cs = gr_display(c);
            let term = match k {
                0 => cs,
                _ => {
                    let pow = if k == 1 { var.to_string() } else { format!("{}^{}", var, k) };
                    if cs == "1" {
                        pow
                    } else if cs == "-1" {
                        format!("-{}", pow)
                    } else {
                        format!("{}{}", cs, pow)
                    }
                }
            };
            parts.push(term);
        }
        let mut out = String::new();
        for (n, part) in parts.iter().enumerate() {
            if n == 0 {
                out.push_str(part);
            } else if let Some(rest) = part.strip_prefix('-') {
                out.push_str(" - ");
                out.push_str(rest);
            } else {
                out.push_str(" + ");
                out.push_str(part);
            }
        }
        out
    }
}

impl fmt::Debug for LaurentPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl fmt::Display for LaurentPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.display_with("q"))
    }
}

#[cfg(test)]
mod tests {
    use super::super::{gr_i, gr_int, gr_one};
    use super::*;

    fn q_pow(k: i64) -> LaurentPoly {
        LaurentPoly::monomial(gr_one(), k)
    }

    #[test]
    fn trim_normalizes() {
        let p = LaurentPoly::from_coeffs(-1, vec![gr_zero(), gr_one(), gr_zero()]);
        assert_eq!(p, q_pow(0));
        assert!(LaurentPoly::from_coeffs(5, vec![gr_zero()]).is_zero());
    }

    #[test]
    fn laurent_arithmetic() {
        let a = &q_pow(1) - &q_pow(-1);
        let b = &q_pow(1) + &q_pow(-1);
        assert_eq!(&a * &b, &q_pow(2) - &q_pow(-2));
        assert_eq!(a.low(), -1);
        assert_eq!(a.high(), 1);
    }

    #[test]
    fn divrem_and_gcd() {
        let a = &q_pow(4) - &LaurentPoly::one();
        let b = &q_pow(2) - &LaurentPoly::one();
        let (quo, rem) = a.divrem(&b);
        assert!(rem.is_zero());
        assert_eq!(quo, &q_pow(2) + &LaurentPoly::one());
        assert_eq!(a.gcd_core(&b), b);

        let c = &q_pow(2) + &LaurentPoly::one();
        assert!( (&a.gcd_core(&c)) == &c, "q^4-1 = (q^2-1)(q^2+1)");
    }

    #[test]
    fn gcd_ignores_laurent_shift() {
        let a = (&q_pow(2) - &LaurentPoly::one()).shifted(-3);
        let b = &q_pow(1) - &q_pow(-1);
        let g = a.gcd_core(&b);
        assert_eq!(g, &q_pow(2) - &LaurentPoly::one());
    }

    #[test]
    fn eval_matches_direct_sum() {
        let p = LaurentPoly::from_coeffs(-2, vec![gr_int(3), gr_i(), gr_zero(), gr_one()]);
        let x = Complex64::new(0.3, -1.2);
        let direct = gr_to_c64(&gr_int(3)) * x.powi(-2)
            + gr_to_c64(&gr_i()) * x.powi(-1)
            + x.powi(1);
        assert!((p.eval(x) - direct).norm() < 1e-13);
    }

    #[test]
    fn display_reads_naturally() {
        let p = &(&q_pow(1) - &q_pow(-1)) + &LaurentPoly::monomial(gr_i(), 3);
        assert_eq!(p.to_string(), "-q^-1 + q + iq^3");
    }
}
