//! Exact coefficient arithmetic: Gaussian rationals, Laurent polynomials
//! and rational functions in one formal variable, and exact phase exponents.

mod laurent;
mod phase;
mod qscalar;

pub use laurent::LaurentPoly;
pub use phase::PhaseExp;
pub use qscalar::QScalar;

use num::complex::Complex;
use num::rational::BigRational;
use num::BigInt;
use num::{One, Zero};

/// Exact complex number with arbitrary-precision rational parts.
pub type GaussRational = Complex<BigRational>;

/// Double-precision complex value (the numeric boundary of the engine).
pub type Complex64 = num::complex::Complex64;

pub fn gr_zero() -> GaussRational {
    GaussRational::new(BigRational::zero(), BigRational::zero())
}

pub fn gr_one() -> GaussRational {
    GaussRational::new(BigRational::one(), BigRational::zero())
}

/// The imaginary unit.
pub fn gr_i() -> GaussRational {
    GaussRational::new(BigRational::zero(), BigRational::one())
}

pub fn gr_int(n: i64) -> GaussRational {
    GaussRational::new(BigRational::from_integer(BigInt::from(n)), BigRational::zero())
}

pub fn gr_ratio(num: i64, den: i64) -> GaussRational {
    assert!(den != 0, "zero denominator in exact rational");
    GaussRational::new(
        BigRational::new(BigInt::from(num), BigInt::from(den)),
        BigRational::zero(),
    )
}

pub fn gr_to_c64(x: &GaussRational) -> Complex64 {
    use num::ToPrimitive;
    Complex64::new(
        x.re.to_f64().expect("rational out of f64 range"),
        x.im.to_f64().expect("rational out of f64 range"),
    )
}

/// Renders a Gaussian rational compactly: "2", "i", "-3/2i", "(1/2+i)".
pub fn gr_display(x: &GaussRational) -> String {
    let re_zero = x.re.is_zero();
    let im_zero = x.im.is_zero();
    match (re_zero, im_zero) {
        (true, true) => "0".to_string(),
        (false, true) => format!("{}", x.re),
        (true, false) => {
            if x.im.is_one() {
                "i".to_string()
            } else if (-x.im.clone()).is_one() {
                "-i".to_string()
            } else {
                format!("{}i", x.im)
            }
        }
        (false, false) => {
            let (sign, im_abs) = if x.im.is_negative() {
                ("-", -x.im.clone())
            } else {
                ("+", x.im.clone())
            };
            if im_abs.is_one() {
                format!("({}{}i)", x.re, sign)
            } else {
                format!("({}{}{}i)", x.re, sign, im_abs)
            }
        }
    }
}

use num::Signed;

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn gauss_rational_field_ops_are_exact() {
        let a = gr_ratio(1, 3) + gr_i() * gr_ratio(2, 5);
        let b = gr_int(4) - gr_i();
        let prod = a.clone() * b.clone();
        assert_eq!(prod / b, a);
    }

    #[test]
    fn display_forms() {
        assert_eq!(gr_display(&gr_zero()), "0");
        assert_eq!(gr_display(&gr_i()), "i");
        assert_eq!(gr_display(&(gr_int(-1) * gr_i())), "-i");
        assert_eq!(gr_display(&gr_ratio(-3, 2)), "-3/2");
        assert_eq!(gr_display(&(gr_ratio(1, 2) + gr_i())), "(1/2+i)");
        assert_eq!(gr_display(&(gr_int(2) - gr_i() * gr_ratio(1, 3))), "(2-1/3i)");
    }
}
