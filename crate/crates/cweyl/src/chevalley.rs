//! Chevalley generators inside the cyclic lattice algebra: the embedding,
//! the defining relation residuals, the central elements with the derived
//! Casimir expression, and the star-structure classification with its
//! central charge.

use crate::scalar::{Complex64, QScalar};
use crate::weyl::{conjugation_weight, Lattice, WeylElement};
use crate::{Error, Result};

/// The embedded generators, all normal-ordered elements of the cyclic lattice.
#[derive(Clone)]
pub struct GeneratorSet {
    pub e: WeylElement,
    pub f: WeylElement,
    pub k: WeylElement,
    pub k_prime: WeylElement,
    pub k_inv: WeylElement,
    pub k_prime_inv: WeylElement,
}

impl GeneratorSet {
    pub fn lattice(&self) -> &Lattice {
        self.e.lattice()
    }
}

fn q_minus_q_inv() -> QScalar {
    &QScalar::q_pow(1) - &QScalar::q_pow(-1)
}

/// e = i (w1 + w2)/(q - q^-1), f = i (w3 + w4)/(q - q^-1), K = q w2 w3,
/// K' = q w4 w1. The K, K' prefactor is q, not the tempting q^-1: only q
/// makes the commutator relation and the exponential realization of the
/// Cartan elements hold at once.
pub fn embed() -> GeneratorSet {
    let lat = Lattice::cyclic();
    let w = |i| WeylElement::generator(&lat, i);
    let lam = &QScalar::i() / &q_minus_q_inv();
    let q = QScalar::q_pow(1);
    GeneratorSet {
        e: (&w(0) + &w(1)).scale(&lam),
        f: (&w(2) + &w(3)).scale(&lam),
        k: (&w(1) * &w(2)).scale(&q),
        k_prime: (&w(3) * &w(0)).scale(&q),
        k_inv: WeylElement::term(&lat, QScalar::q_pow(1), &[0, -1, -1, 0]),
        k_prime_inv: WeylElement::term(&lat, QScalar::q_pow(-1), &[-1, 0, 0, -1]),
    }
}

/// One defining relation, stated as an identity whose residual must vanish.
pub struct RelationResidual {
    pub name: &'static str,
    pub residual: WeylElement,
}

/// Residuals of the seven defining relations of the generator set.
pub fn verify_uq(g: &GeneratorSet) -> Vec<RelationResidual> {
    let one = WeylElement::one(g.lattice());
    let q2 = QScalar::q_pow(2);
    let qm2 = QScalar::q_pow(-2);
    let inverses = &(&(&g.k * &g.k_inv) - &one) + &(&(&g.k_prime * &g.k_prime_inv) - &one);
    let ke = &(&g.k * &g.e) - &(&g.e * &g.k).scale(&q2);
    let kpe = &(&g.k_prime * &g.e) - &(&g.e * &g.k_prime).scale(&qm2);
    let kf = &(&g.k * &g.f) - &(&g.f * &g.k).scale(&qm2);
    let kpf = &(&g.k_prime * &g.f) - &(&g.f * &g.k_prime).scale(&q2);
    let comm = &(&(&g.e * &g.f) - &(&g.f * &g.e))
        - &(&g.k - &g.k_prime).scale(&(&QScalar::one() / &q_minus_q_inv()));
    let kk = &(&g.k * &g.k_prime) - &(&g.k_prime * &g.k);
    vec![
        RelationResidual { name: "K K^-1 = 1 and K' K'^-1 = 1", residual: inverses },
        RelationResidual { name: "K e = q^2 e K", residual: ke },
        RelationResidual { name: "K' e = q^-2 e K'", residual: kpe },
        RelationResidual { name: "K f = q^-2 f K", residual: kf },
        RelationResidual { name: "K' f = q^2 f K'", residual: kpf },
        RelationResidual { name: "e f - f e = (K - K')/(q - q^-1)", residual: comm },
        RelationResidual { name: "K K' = K' K", residual: kk },
    ]
}

/// The central elements and the Casimir re-expressed through the generators.
pub struct CentralSet {
    pub j: WeylElement,
    pub c: WeylElement,
    pub z1: WeylElement,
    pub z2: WeylElement,
    /// (alpha, beta) in C = -(q - q^-1)^2 e f + alpha K + beta K'.
    pub chevalley_coeffs: (QScalar, QScalar),
}

impl CentralSet {
    /// The derived expression as display text.
    pub fn chevalley_form(&self) -> String {
        let (a, b) = &self.chevalley_coeffs;
        format!("C = -(q - q^-1)^2 e f + ({a}) K + ({b}) K'")
    }
}

fn commutes_with_generators(x: &WeylElement) -> bool {
    let lat = x.lattice();
    for n in 0..lat.rank() {
        let g = WeylElement::generator(lat, n);
        if !(&(x * &g) - &(&g * x)).is_zero() {
            return false;
        }
    }
    true
}

/// Builds J = K K', C = Z1 + Z2 with Z1 = w1 w3, Z2 = w2 w4, checks J = Z1 Z2
/// and centrality of all four, then solves for the Casimir in terms of the
/// generators: with D = C + (q - q^-1)^2 e f supported on the two Cartan
/// monomials, alpha and beta are read off and D = alpha K + beta K' verified.
pub fn casimirs(g: &GeneratorSet) -> Result<CentralSet> {
    let lat = g.lattice();
    let w = |i| WeylElement::generator(lat, i);
    let z1 = &w(0) * &w(2);
    let z2 = &w(1) * &w(3);
    let j = &g.k * &g.k_prime;
    let c = &z1 + &z2;

    let j_split = &j - &(&z1 * &z2);
    if !j_split.is_zero() {
        return Err(Error::CentralityBroken(format!(
            "J - Z1 Z2 = {j_split}, expected 0"
        )));
    }
    for (name, x) in [("Z1", &z1), ("Z2", &z2), ("J", &j), ("C", &c)] {
        if !commutes_with_generators(x) {
            return Err(Error::CentralityBroken(format!(
                "{name} fails to commute with a lattice generator"
            )));
        }
    }

    let coupling = q_minus_q_inv().pow(2);
    let d = &c + &(&g.e * &g.f).scale(&coupling);
    let alpha = &d.coeff(&[0, 1, 1, 0]) / &QScalar::q_pow(1);
    let beta = &d.coeff(&[1, 0, 0, 1]) * &QScalar::q_pow(1);
    let leftover = &d - &(&g.k.scale(&alpha) + &g.k_prime.scale(&beta));
    if !leftover.is_zero() {
        return Err(Error::CentralityBroken(format!(
            "C + (q - q^-1)^2 e f is not a combination of K and K': leftover {leftover}"
        )));
    }
    Ok(CentralSet {
        j,
        c,
        z1,
        z2,
        chevalley_coeffs: (alpha, beta),
    })
}

/// The other natural reading of the Casimir, (K - K')/(q - q^-1) plus
/// (q - q^-1)^2 (ef - fe). By the commutator relation it is proportional to
/// K - K', which is not central; the returned commutator with e witnesses
/// that. Kept as a negative control for the conventions report.
pub fn alternative_casimir_defect(g: &GeneratorSet) -> WeylElement {
    let dq = q_minus_q_inv();
    let comm = &(&g.e * &g.f) - &(&g.f * &g.e);
    let candidate = &(&g.k - &g.k_prime).scale(&(&QScalar::one() / &dq)) + &comm.scale(&dq.pow(2));
    &(&candidate * &g.e) - &(&g.e * &candidate)
}

/// Which star structure a value of b selects.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum StarFamily {
    SLq2R,
    SUq2,
    FactorInterchange,
    Generic,
}

impl StarFamily {
    /// Stable machine-readable label.
    pub fn token(&self) -> &'static str {
        match self {
            StarFamily::SLq2R => "slq2r",
            StarFamily::SUq2 => "suq2",
            StarFamily::FactorInterchange => "factor-interchange",
            StarFamily::Generic => "generic",
        }
    }
}

impl std::fmt::Display for StarFamily {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        let name = match self {
            StarFamily::SLq2R => "SL_q(2,R)",
            StarFamily::SUq2 => "SU_q(2)",
            StarFamily::FactorInterchange => "factor interchange",
            StarFamily::Generic => "generic",
        };
        write!(f, "{name}")
    }
}

/// A classified star structure with its central charge.
#[derive(Clone, Copy, Debug)]
pub struct StarCase {
    pub family: StarFamily,
    pub central_charge: Complex64,
}

const STAR_TOL: f64 = 1e-12;

/// Classify by tau = b^2: real positive selects the SL_q(2,R) star, real
/// negative the SU_q(2) star, unimodular non-real the involution that swaps
/// the q and q-tilde halves. The central charge is 1 + 6 (b + 1/b)^2.
pub fn star_classify(b: Complex64) -> Result<StarCase> {
    if b.norm() < STAR_TOL {
        return Err(Error::ZeroCentralParameter("b"));
    }
    let tau = b * b;
    let family = if tau.im.abs() < STAR_TOL && tau.re > STAR_TOL {
        StarFamily::SLq2R
    } else if tau.im.abs() < STAR_TOL && tau.re < -STAR_TOL {
        StarFamily::SUq2
    } else if (tau.norm() - 1.0).abs() < STAR_TOL {
        StarFamily::FactorInterchange
    } else {
        StarFamily::Generic
    };
    let s = b + b.inv();
    let central_charge = Complex64::new(1.0, 0.0) + s * s * 6.0;
    Ok(StarCase {
        family,
        central_charge,
    })
}

/// Exchange phases of the central elements against every generator, as
/// integer conjugation weights; all zero.
pub fn central_weights() -> Vec<i64> {
    let lat = Lattice::cyclic();
    let mut out = Vec::new();
    for z in [[1i64, 0, 1, 0], [0, 1, 0, 1]] {
        for n in 0..4 {
            let mut u = [0i64; 4];
            u[n] = 1;
            out.push(conjugation_weight(&lat, &z, &u));
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn embedding_has_the_stated_support() {
        let g = embed();
        let lam = &QScalar::i() / &q_minus_q_inv();
        assert_eq!(g.e.num_terms(), 2);
        assert_eq!(g.e.coeff(&[1, 0, 0, 0]), lam);
        assert_eq!(g.e.coeff(&[0, 1, 0, 0]), lam);
        assert_eq!(g.f.coeff(&[0, 0, 1, 0]), lam);
        assert_eq!(g.f.coeff(&[0, 0, 0, 1]), lam);
        assert_eq!(g.k.coeff(&[0, 1, 1, 0]), QScalar::q_pow(1));
        assert_eq!(g.k_prime.coeff(&[1, 0, 0, 1]), QScalar::q_pow(-1));
    }

    #[test]
    fn cartan_elements_invert() {
        let g = embed();
        let one = WeylElement::one(g.lattice());
        assert_eq!(&g.k * &g.k_inv, one);
        assert_eq!(&g.k_prime * &g.k_prime_inv, one);
    }

    #[test]
    fn all_seven_relations_hold_exactly() {
        for r in verify_uq(&embed()) {
            assert!(r.residual.is_zero(), "{} has residual {}", r.name, r.residual);
        }
    }

    #[test]
    fn wrong_cartan_prefactor_breaks_the_commutator_relation() {
        let mut g = embed();
        g.k = g.k.scale(&QScalar::q_pow(-2));
        g.k_prime = g.k_prime.scale(&QScalar::q_pow(-2));
        let bad = verify_uq(&g)
            .into_iter()
            .find(|r| r.name.starts_with("e f"))
            .unwrap();
        assert!(!bad.residual.is_zero());
    }

    #[test]
    fn central_set_is_consistent() {
        let g = embed();
        let cs = casimirs(&g).unwrap();
        assert_eq!(cs.j, &cs.z1 * &cs.z2);
        assert_eq!(cs.c, &cs.z1 + &cs.z2);
        let (alpha, beta) = &cs.chevalley_coeffs;
        assert_eq!(alpha, &-QScalar::q_pow(-1));
        assert_eq!(beta, &-QScalar::q_pow(1));
        let rebuilt = &(&g.e * &g.f).scale(&-q_minus_q_inv().pow(2))
            + &(&g.k.scale(alpha) + &g.k_prime.scale(beta));
        assert_eq!(rebuilt, cs.c);
        assert!(cs.chevalley_form().contains("-(q - q^-1)^2 e f"));
    }

    #[test]
    fn central_weights_vanish() {
        assert!(central_weights().iter().all(|&w| w == 0));
    }

    #[test]
    fn the_alternative_casimir_reading_is_not_central() {
        assert!(!alternative_casimir_defect(&embed()).is_zero());
    }

    #[test]
    fn star_cases_cover_the_three_reductions() {
        let one = star_classify(Complex64::new(1.0, 0.0)).unwrap();
        assert_eq!(one.family, StarFamily::SLq2R);
        assert!((one.central_charge - Complex64::new(25.0, 0.0)).norm() < 1e-14);

        let real = star_classify(Complex64::new(2.0, 0.0)).unwrap();
        assert_eq!(real.family, StarFamily::SLq2R);
        assert!((real.central_charge.re - 38.5).abs() < 1e-12);

        let imag = star_classify(Complex64::new(0.0, 2.0)).unwrap();
        assert_eq!(imag.family, StarFamily::SUq2);
        assert!((imag.central_charge.re + 12.5).abs() < 1e-12);
        assert!(imag.central_charge.im.abs() < 1e-12);

        let phase = Complex64::from_polar(1.0, std::f64::consts::FRAC_PI_4);
        let swap = star_classify(phase).unwrap();
        assert_eq!(swap.family, StarFamily::FactorInterchange);
        assert!((swap.central_charge - Complex64::new(13.0, 0.0)).norm() < 1e-12);

        let generic = star_classify(Complex64::from_polar(1.1, 1.0)).unwrap();
        assert_eq!(generic.family, StarFamily::Generic);
    }

    #[test]
    fn vanishing_b_is_rejected() {
        assert!(star_classify(Complex64::new(0.0, 0.0)).is_err());
        assert!(star_classify(Complex64::new(1e-15, 0.0)).is_err());
    }
}
