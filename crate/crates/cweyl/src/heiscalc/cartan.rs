//! Exact comparison of the Cartan-twist exponents. Writing K = q^H forces
//! H = (p2 + p3)/(i pi b), and the Gaussian twist factor in front of the
//! series part of the R-matrix is exp(gamma (p2+p3) x (p2+p3)) with
//! gamma = -(1/2) ln q c_H^2 where c_H is the coefficient of (p2+p3) in H.
//! Everything here is a rational multiple of a power of pi times a power
//! of b, so gamma comes out exactly and its integer twist weight can be
//! read off and checked against the convention adopted by the R-matrix
//! construction.

use std::fmt;

use num::{ToPrimitive, Zero};

use crate::heiscalc::PSpace;
use crate::scalar::{gr_display, gr_i, gr_int, gr_one, gr_ratio, GaussRational};

/// coeff * pi^pi_pow * b^b_pow
#[derive(Clone)]
struct PiMonomial {
    coeff: GaussRational,
    pi_pow: i32,
    b_pow: i32,
}

impl PiMonomial {
    fn new(coeff: GaussRational, pi_pow: i32, b_pow: i32) -> Self {
        PiMonomial {
            coeff,
            pi_pow,
            b_pow,
        }
    }

    fn mul(&self, other: &Self) -> Self {
        PiMonomial {
            coeff: self.coeff.clone() * other.coeff.clone(),
            pi_pow: self.pi_pow + other.pi_pow,
            b_pow: self.b_pow + other.b_pow,
        }
    }

    fn div(&self, other: &Self) -> Self {
        assert!(!other.coeff.is_zero());
        PiMonomial {
            coeff: self.coeff.clone() * other.coeff.inv(),
            pi_pow: self.pi_pow - other.pi_pow,
            b_pow: self.b_pow - other.b_pow,
        }
    }

    fn scale(&self, s: GaussRational) -> Self {
        PiMonomial {
            coeff: self.coeff.clone() * s,
            pi_pow: self.pi_pow,
            b_pow: self.b_pow,
        }
    }
}

/// An exact scalar of the form a/pi + c pi, the only shapes the twist
/// exponents take.
#[derive(Clone, PartialEq, Eq)]
pub struct PiScalar {
    over_pi: GaussRational,
    times_pi: GaussRational,
}

impl PiScalar {
    fn from_monomial(m: &PiMonomial) -> Self {
        assert_eq!(m.b_pow, 0, "twist exponent must be b-independent");
        match m.pi_pow {
            -1 => PiScalar {
                over_pi: m.coeff.clone(),
                times_pi: GaussRational::zero(),
            },
            1 => PiScalar {
                over_pi: GaussRational::zero(),
                times_pi: m.coeff.clone(),
            },
            p => panic!("unexpected pi power {p}"),
        }
    }

    pub fn over_pi(&self) -> &GaussRational {
        &self.over_pi
    }

    pub fn times_pi(&self) -> &GaussRational {
        &self.times_pi
    }

    /// gamma = -k i/(2 pi) for an integer k is the exponent of a genuine
    /// integer-power Cartan twist pairing the two Cartan directions;
    /// anything else encodes no such twist. Returns that k.
    pub fn twist_integer(&self) -> Option<i64> {
        if !self.times_pi.is_zero() {
            return None;
        }
        let k = self.over_pi.clone() * gr_i() * gr_int(2);
        if !k.im.is_zero() || !k.re.is_integer() {
            return None;
        }
        k.re.to_integer().to_i64()
    }
}

impl fmt::Display for PiScalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.over_pi.is_zero() && self.times_pi.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        if !self.over_pi.is_zero() {
            write!(f, "({})/pi", gr_display(&self.over_pi))?;
            first = false;
        }
        if !self.times_pi.is_zero() {
            if !first {
                write!(f, " + ")?;
            }
            write!(f, "({}) pi", gr_display(&self.times_pi))?;
        }
        Ok(())
    }
}

impl fmt::Debug for PiScalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

/// gamma = -(1/2) ln q c_H^2
fn gamma_from(ln_q: &PiMonomial, c_h: &PiMonomial) -> PiScalar {
    let m = ln_q.mul(&c_h.mul(c_h)).scale(gr_ratio(-1, 2));
    PiScalar::from_monomial(&m)
}

/// The two exact twist exponents, the commonly quoted alternative pi/(2 i),
/// and the integer twist weight each one encodes.
pub struct CartanExponentReport {
    pub gamma_q: PiScalar,
    pub gamma_q_tilde: PiScalar,
    pub alternative_gamma: PiScalar,
    pub twist_q: Option<i64>,
    pub twist_q_tilde: Option<i64>,
    pub twist_alternative: Option<i64>,
    pub cartan_forms_commute: bool,
}

impl CartanExponentReport {
    /// Whether the quoted alternative agrees with the derived exponent.
    pub fn alternative_matches(&self) -> bool {
        self.alternative_gamma == self.gamma_q
    }
}

pub fn cartan_exponent_compare() -> CartanExponentReport {
    // ln K = b (p2+p3) and ln q = i pi b^2, so c_H = b / ln q.
    let b = PiMonomial::new(gr_one(), 0, 1);
    let ln_q = PiMonomial::new(gr_i(), 1, 2);
    let c_h = b.div(&ln_q);
    // ln K~ = (p2+p3)/b and ln q~ = -i pi / b^2.
    let b_inv = PiMonomial::new(gr_one(), 0, -1);
    let ln_qt = PiMonomial::new(-gr_i(), 1, -2);
    let c_ht = b_inv.div(&ln_qt);

    let gamma_q = gamma_from(&ln_q, &c_h);
    let gamma_q_tilde = gamma_from(&ln_qt, &c_ht);
    // pi/(2i) = -(i/2) pi
    let alternative_gamma = PiScalar {
        over_pi: GaussRational::zero(),
        times_pi: gr_i() * gr_ratio(-1, 2),
    };

    let space = PSpace::quad();
    let mut cross = 0;
    for i in [1, 2] {
        for j in [3, 0] {
            cross += space.pairing(i, j);
        }
    }

    let twist_q = gamma_q.twist_integer();
    let twist_q_tilde = gamma_q_tilde.twist_integer();
    let twist_alternative = alternative_gamma.twist_integer();
    CartanExponentReport {
        gamma_q,
        gamma_q_tilde,
        alternative_gamma,
        twist_q,
        twist_q_tilde,
        twist_alternative,
        cartan_forms_commute: cross == 0,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::gr_int;

    #[test]
    fn derived_exponents_are_plus_minus_i_over_two_pi() {
        let r = cartan_exponent_compare();
        let half_i = gr_i() * gr_ratio(1, 2);
        assert_eq!(r.gamma_q.over_pi(), &half_i);
        assert!(r.gamma_q.times_pi().is_zero());
        assert_eq!(r.gamma_q_tilde.over_pi(), &(-half_i));
        assert!(r.gamma_q_tilde.times_pi().is_zero());
    }

    #[test]
    fn twist_weights_are_opposite_unit_integers() {
        let r = cartan_exponent_compare();
        assert_eq!(r.twist_q, Some(-1));
        assert_eq!(r.twist_q_tilde, Some(1));
    }

    #[test]
    fn quoted_alternative_is_not_a_twist() {
        let r = cartan_exponent_compare();
        assert_eq!(r.twist_alternative, None);
        assert!(!r.alternative_matches());
        assert_eq!(r.alternative_gamma.to_string(), "(-1/2i) pi");
    }

    #[test]
    fn the_two_cartan_exponentials_commute() {
        assert!(cartan_exponent_compare().cartan_forms_commute);
    }

    #[test]
    fn non_twist_scalars_are_rejected() {
        let half = PiScalar {
            over_pi: gr_ratio(1, 2),
            times_pi: GaussRational::zero(),
        };
        assert_eq!(half.twist_integer(), None);
        let third = PiScalar {
            over_pi: gr_i() * gr_ratio(1, 3),
            times_pi: GaussRational::zero(),
        };
        assert_eq!(third.twist_integer(), None);
    }

    #[test]
    fn display_forms() {
        let r = cartan_exponent_compare();
        assert_eq!(r.gamma_q.to_string(), "(1/2i)/pi");
        let zero = PiScalar {
            over_pi: GaussRational::zero(),
            times_pi: GaussRational::zero(),
        };
        assert_eq!(zero.to_string(), "0");
        assert_eq!(zero.twist_integer(), Some(0));
        let _ = gr_int(0);
    }
}
