//! Exact rational functions of the formal variable q over Gaussian rationals.

use super::{gr_i, gr_int, gr_one, Complex64, GaussRational, LaurentPoly};
use crate::{Error, Result};
use num::One;
use std::fmt;
use std::ops::{Add, Div, Mul, Neg, Sub};

/// num/den with den an ordinary monic polynomial with nonzero constant
/// term, gcd(num core, den) = 1. Any power of q sits in the numerator's
/// Laurent shift, so equality is plain structural equality.
#[derive(Clone, PartialEq, Eq)]
pub struct QScalar {
    num: LaurentPoly,
    den: LaurentPoly,
}

impl QScalar {
    fn canonical(num: LaurentPoly, den: LaurentPoly) -> Self {
        assert!(!den.is_zero(), "zero denominator in q-scalar");
        if num.is_zero() {
            return QScalar { num, den: LaurentPoly::one() };
        }
        let (dlow, mut den) = den.core();
        let mut num = num.shifted(-dlow);
        if !den.is_one() {
            let g = num.gcd_core(&den);
            if !g.is_constant() {
                num = num.div_exact_core(&g);
                den = den.div_exact_core(&g);
            }
            let lead = den.leading_coeff();
            if !lead.is_one() {
                let inv = super::gr_one() / lead;
                den = den.scaled(&inv);
                num = num.scaled(&inv);
            }
        }
        QScalar { num, den }
    }

    pub fn zero() -> Self {
        QScalar { num: LaurentPoly::zero(), den: LaurentPoly::one() }
    }

    pub fn one() -> Self {
        QScalar { num: LaurentPoly::one(), den: LaurentPoly::one() }
    }

    /// The imaginary unit as a constant.
    pub fn i() -> Self {
        QScalar { num: LaurentPoly::constant(gr_i()), den: LaurentPoly::one() }
    }

    pub fn int(n: i64) -> Self {
        QScalar { num: LaurentPoly::constant(gr_int(n)), den: LaurentPoly::one() }
    }

    pub fn gauss(c: GaussRational) -> Self {
        QScalar { num: LaurentPoly::constant(c), den: LaurentPoly::one() }
    }

    /// q^k.
    pub fn q_pow(k: i64) -> Self {
        QScalar { num: LaurentPoly::monomial(gr_one(), k), den: LaurentPoly::one() }
    }

    /// q - q^-1 scaled combinations are common; this is the general embed.
    pub fn laurent(p: LaurentPoly) -> Self {
        QScalar { num: p, den: LaurentPoly::one() }
    }

    pub fn ratio(num: LaurentPoly, den: LaurentPoly) -> Result<Self> {
        if den.is_zero() {
            return Err(Error::DivisionByZero);
        }
        Ok(Self::canonical(num, den))
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    pub fn is_one(&self) -> bool {
        self.num.is_one() && self.den.is_one()
    }

    pub fn numerator(&self) -> &LaurentPoly {
        &self.num
    }

    pub fn denominator(&self) -> &LaurentPoly {
        &self.den
    }

    pub fn is_polynomial(&self) -> bool {
        self.den.is_one()
    }

    pub fn try_inv(&self) -> Result<Self> {
        if self.is_zero() {
            return Err(Error::DivisionByZero);
        }
        Ok(Self::canonical(self.den.clone(), self.num.clone()))
    }

    pub fn try_div(&self, rhs: &Self) -> Result<Self> {
        Ok(self * &rhs.try_inv()?)
    }

    pub fn pow(&self, k: i64) -> Self {
        if k < 0 {
            return self.try_inv().expect("negative power of zero scalar").pow(-k);
        }
        let mut acc = Self::one();
        let mut base = self.clone();
        let mut e = k as u64;
        while e > 0 {
            if e & 1 == 1 {
                acc = &acc * &base;
            }
            base = &base * &base;
            e >>= 1;
        }
        acc
    }

    /// Evaluates at q0 (both halves by Horner). Rejects non-finite input
    /// and evaluation at a denominator zero.
    pub fn eval(&self, q0: Complex64) -> Result<Complex64> {
        if !q0.re.is_finite() || !q0.im.is_finite() {
            return Err(Error::NonFinite(format!("{}", q0)));
        }
        let dval = self.den.eval(q0);
        let scale = self.den.coeff_scale().max(1.0);
        if dval.norm() < 1e-12 * scale {
            return Err(Error::Pole {
                q0: format!("{}", q0),
                denominator: self.den.to_string(),
            });
        }
        Ok(self.num.eval(q0) / dval)
    }
}

impl Add for &QScalar {
    type Output = QScalar;
    fn add(self, rhs: &QScalar) -> QScalar {
        if self.is_zero() {
            return rhs.clone();
        }
        if rhs.is_zero() {
            return self.clone();
        }
        if self.den == rhs.den {
            let num = &self.num + &rhs.num;
            if self.den.is_one() {
                return QScalar { num, den: LaurentPoly::one() };
            }
            return QScalar::canonical(num, self.den.clone());
        }
        // a/b + c/d = (a d' + c b') / (g b' d') with g = gcd(b, d).
        let g = self.den.gcd_core(&rhs.den);
        let (bp, dp) = if g.is_constant() {
            (self.den.clone(), rhs.den.clone())
        } else {
            (self.den.div_exact_core(&g), rhs.den.div_exact_core(&g))
        };
        let num = &(&self.num * &dp) + &(&rhs.num * &bp);
        // Common factors of the new numerator and denominator divide g.
        let h = num.gcd_core(&g);
        let (num, g) = if h.is_constant() {
            (num, g)
        } else {
            (num.div_exact_core(&h), g.div_exact_core(&h))
        };
        QScalar::canonical_reduced(num, &(&g * &bp) * &dp)
    }
}

impl QScalar {
    /// Like `canonical` but the fraction is already known reduced; only
    /// normalizes the q-power and the leading denominator coefficient.
    fn canonical_reduced(num: LaurentPoly, den: LaurentPoly) -> Self {
        if num.is_zero() {
            return Self::zero();
        }
        let (dlow, mut den) = den.core();
        let mut num = num.shifted(-dlow);
        let lead = den.leading_coeff();
        if !lead.is_one() {
            let inv = super::gr_one() / lead;
            den = den.scaled(&inv);
            num = num.scaled(&inv);
        }
        QScalar { num, den }
    }
}

impl Sub for &QScalar {
    type Output = QScalar;
    fn sub(self, rhs: &QScalar) -> QScalar {
        self + &(-rhs)
    }
}

impl Neg for &QScalar {
    type Output = QScalar;
    fn neg(self) -> QScalar {
        QScalar { num: -&self.num, den: self.den.clone() }
    }
}

impl Mul for &QScalar {
    type Output = QScalar;
    fn mul(self, rhs: &QScalar) -> QScalar {
        if self.is_zero() || rhs.is_zero() {
            return QScalar::zero();
        }
        if self.is_one() {
            return rhs.clone();
        }
        if rhs.is_one() {
            return self.clone();
        }
        // Cross-reduce: each side is already in lowest terms, so the only
        // cancellations are numerator of one side against denominator of
        // the other. The result is then reduced by construction.
        let g1 = self.num.gcd_core(&rhs.den);
        let g2 = rhs.num.gcd_core(&self.den);
        let (n1, d2) = if g1.is_constant() {
            (self.num.clone(), rhs.den.clone())
        } else {
            (self.num.div_exact_core(&g1), rhs.den.div_exact_core(&g1))
        };
        let (n2, d1) = if g2.is_constant() {
            (rhs.num.clone(), self.den.clone())
        } else {
            (rhs.num.div_exact_core(&g2), self.den.div_exact_core(&g2))
        };
        QScalar::canonical_reduced(&n1 * &n2, &d1 * &d2)
    }
}

impl Div for &QScalar {
    type Output = QScalar;
    fn div(self, rhs: &QScalar) -> QScalar {
        self.try_div(rhs).expect("division by zero scalar")
    }
}

macro_rules! forward_value_ops {
    ($($trait:ident :: $method:ident),*) => {$(
        impl $trait for QScalar {
            type Output = QScalar;
            fn $method(self, rhs: QScalar) -> QScalar {
                (&self).$method(&rhs)
            }
        }
    )*};
}
forward_value_ops!(Add::add, Sub::sub, Mul::mul, Div::div);

impl Neg for QScalar {
    type Output = QScalar;
    fn neg(self) -> QScalar {
        -&self
    }
}

impl fmt::Debug for QScalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl fmt::Display for QScalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.den.is_one() {
            write!(f, "{}", self.num)
        } else {
            write!(f, "({}) / ({})", self.num, self.den)
        }
    }
}
