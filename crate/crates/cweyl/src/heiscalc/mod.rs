//! Exact calculus of exponentials of linear forms in the Heisenberg
//! generators p1..p4, with the cyclic commutators [p_n, p_{n+1}] = -2 pi i.
//! Products use the central-commutator rule e^X e^Y = e^{<X,Y>/2} e^{X+Y};
//! exponents are Laurent polynomials in b and phases exact i-pi
//! exponentials, so the modular-double commutation and the exponential
//! realization of the Cartan elements are verified without floats.

use std::fmt;

use crate::scalar::{gr_int, LaurentPoly, PhaseExp};
use crate::{Error, Result};

mod cartan;

pub use cartan::{cartan_exponent_compare, CartanExponentReport, PiScalar};

/// The commutator data: an antisymmetric integer pairing in units of 2 pi i.
#[derive(Clone, PartialEq, Eq)]
pub struct PSpace {
    pairing: Vec<Vec<i64>>,
}

impl PSpace {
    /// p1..p4 with [p_n, p_{n+1}] = -2 pi i cyclically (indices mod 4) and
    /// all other pairs commuting.
    pub fn quad() -> Self {
        let mut pairing = vec![vec![0i64; 4]; 4];
        for n in 0..4 {
            let m = (n + 1) % 4;
            pairing[n][m] = -1;
            pairing[m][n] = 1;
        }
        PSpace { pairing }
    }

    /// Block-diagonal tensor power; distinct blocks commute.
    pub fn tensor(&self, arity: usize) -> Self {
        assert!(arity >= 1);
        let w = self.rank();
        let mut pairing = vec![vec![0i64; w * arity]; w * arity];
        for s in 0..arity {
            for i in 0..w {
                for j in 0..w {
                    pairing[s * w + i][s * w + j] = self.pairing[i][j];
                }
            }
        }
        PSpace { pairing }
    }

    pub fn rank(&self) -> usize {
        self.pairing.len()
    }

    /// Pairing entry <p_i, p_j> / (2 pi i).
    pub fn pairing(&self, i: usize, j: usize) -> i64 {
        self.pairing[i][j]
    }
}

impl fmt::Display for PSpace {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}-generator p-space", self.rank())
    }
}

impl fmt::Debug for PSpace {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

/// A phase times the exponential of a linear form sum_n c_n(b) p_n.
#[derive(Clone)]
pub struct PExp {
    space: PSpace,
    coeffs: Vec<LaurentPoly>,
    phase: PhaseExp,
}

impl PExp {
    pub fn identity(space: &PSpace) -> Self {
        PExp {
            space: space.clone(),
            coeffs: vec![LaurentPoly::zero(); space.rank()],
            phase: PhaseExp::one(),
        }
    }

    /// e^{sum c_n p_n} with trivial phase.
    pub fn exponential(space: &PSpace, coeffs: Vec<LaurentPoly>) -> Self {
        assert_eq!(coeffs.len(), space.rank(), "coefficient vector length");
        PExp {
            space: space.clone(),
            coeffs,
            phase: PhaseExp::one(),
        }
    }

    /// w_n = e^{b p_n} on the four-generator space.
    pub fn w(n: usize) -> Self {
        let space = PSpace::quad();
        let mut coeffs = vec![LaurentPoly::zero(); 4];
        coeffs[n] = LaurentPoly::monomial(crate::scalar::gr_one(), 1);
        Self::exponential(&space, coeffs)
    }

    /// The dual generator w~_n = e^{p_n / b}.
    pub fn w_tilde(n: usize) -> Self {
        let space = PSpace::quad();
        let mut coeffs = vec![LaurentPoly::zero(); 4];
        coeffs[n] = LaurentPoly::monomial(crate::scalar::gr_one(), -1);
        Self::exponential(&space, coeffs)
    }

    pub fn space(&self) -> &PSpace {
        &self.space
    }

    pub fn coeffs(&self) -> &[LaurentPoly] {
        &self.coeffs
    }

    pub fn phase(&self) -> &PhaseExp {
        &self.phase
    }

    /// Multiply the scalar phase in front.
    pub fn scale_phase(&self, ph: &PhaseExp) -> Self {
        PExp {
            space: self.space.clone(),
            coeffs: self.coeffs.clone(),
            phase: self.phase.times(ph),
        }
    }

    /// e^{-X} with inverted phase; pmul(a, a.inverse()) is the identity.
    pub fn inverse(&self) -> Self {
        PExp {
            space: self.space.clone(),
            coeffs: self.coeffs.iter().map(|c| -c).collect(),
            phase: self.phase.inverse(),
        }
    }
}

impl PartialEq for PExp {
    fn eq(&self, other: &Self) -> bool {
        self.space == other.space && self.coeffs == other.coeffs && self.phase == other.phase
    }
}
impl Eq for PExp {}

impl fmt::Display for PExp {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} exp(", self.phase)?;
        let mut first = true;
        for (n, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            if !first {
                write!(f, " + ")?;
            }
            write!(f, "({}) p{}", c.display_with("b"), n + 1)?;
            first = false;
        }
        if first {
            write!(f, "0")?;
        }
        write!(f, ")")
    }
}

impl fmt::Debug for PExp {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

/// x^T P y in units of 2 pi i, for coefficient vectors over b.
fn pairing_form(space: &PSpace, x: &[LaurentPoly], y: &[LaurentPoly]) -> LaurentPoly {
    let mut acc = LaurentPoly::zero();
    for i in 0..space.rank() {
        if x[i].is_zero() {
            continue;
        }
        for j in 0..space.rank() {
            let p = space.pairing(i, j);
            if p != 0 && !y[j].is_zero() {
                acc = acc + (&x[i] * &y[j]).scaled(&gr_int(p));
            }
        }
    }
    acc
}

/// e^X e^Y = e^{<X,Y>/2} e^{X+Y}: the half-commutator is central, so the
/// product is again a phased exponential. In i-pi units the extra exponent
/// is exactly x^T P y.
pub fn pmul(a: &PExp, b: &PExp) -> PExp {
    assert_eq!(a.space, b.space, "exponentials live on different p-spaces");
    let cross = PhaseExp::new(pairing_form(&a.space, &a.coeffs, &b.coeffs));
    PExp {
        space: a.space.clone(),
        coeffs: a
            .coeffs
            .iter()
            .zip(&b.coeffs)
            .map(|(x, y)| x + y)
            .collect(),
        phase: a.phase.times(&b.phase).times(&cross),
    }
}

/// Phase of (a b)(b a)^{-1}, the exact commutation factor: exponent
/// 2 x^T P y in i-pi units, independent of the phases of a and b.
pub fn commutation_phase(a: &PExp, b: &PExp) -> PhaseExp {
    assert_eq!(a.space, b.space, "exponentials live on different p-spaces");
    PhaseExp::new(pairing_form(&a.space, &a.coeffs, &b.coeffs).scaled(&gr_int(2)))
}

/// One commutation check: the computed phase against the expected one.
pub struct PhaseCheck {
    pub name: String,
    pub found: PhaseExp,
    pub expected: PhaseExp,
}

impl PhaseCheck {
    pub fn pass(&self) -> bool {
        self.found == self.expected
    }
}

/// The modular-double commutation table: every w_n commutes with every
/// w~_m (their 2 pi i phases canonicalize away), while the w~ generators
/// satisfy the dual Weyl relations with the phase exponent -2/tau.
pub fn check_modular_commutation() -> Vec<PhaseCheck> {
    let mut out = Vec::new();
    for n in 0..4 {
        for m in 0..4 {
            out.push(PhaseCheck {
                name: format!("w{} vs w~{}", n + 1, m + 1),
                found: commutation_phase(&PExp::w(n), &PExp::w_tilde(m)),
                expected: PhaseExp::one(),
            });
        }
    }
    let dual = LaurentPoly::monomial(gr_int(-2), -2);
    for n in 0..4 {
        let m = (n + 1) % 4;
        out.push(PhaseCheck {
            name: format!("w~{} w~{} ratio", n + 1, m + 1),
            found: commutation_phase(&PExp::w_tilde(n), &PExp::w_tilde(m)),
            expected: PhaseExp::new(dual.clone()),
        });
    }
    for (n, m) in [(0, 2), (1, 3)] {
        out.push(PhaseCheck {
            name: format!("w~{} vs w~{}", n + 1, m + 1),
            found: commutation_phase(&PExp::w_tilde(n), &PExp::w_tilde(m)),
            expected: PhaseExp::one(),
        });
    }
    out
}

/// The four Cartan elements in exponential form.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum CartanSymbol {
    K,
    KPrime,
    KTilde,
    KTildePrime,
}

impl fmt::Display for CartanSymbol {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            CartanSymbol::K => "K",
            CartanSymbol::KPrime => "K'",
            CartanSymbol::KTilde => "K~",
            CartanSymbol::KTildePrime => "K~'",
        };
        write!(f, "{s}")
    }
}

fn realize_checked(sym: CartanSymbol, prefactor: &PhaseExp) -> Result<PExp> {
    let (slots, scale) = match sym {
        CartanSymbol::K => ([1usize, 2], 1i64),
        CartanSymbol::KPrime => ([3, 0], 1),
        CartanSymbol::KTilde => ([1, 2], -1),
        CartanSymbol::KTildePrime => ([3, 0], -1),
    };
    let gen = |n: usize| {
        if scale == 1 {
            PExp::w(n)
        } else {
            PExp::w_tilde(n)
        }
    };
    let candidate = pmul(&gen(slots[0]), &gen(slots[1])).scale_phase(prefactor);

    let space = PSpace::quad();
    let mut coeffs = vec![LaurentPoly::zero(); 4];
    for n in slots {
        coeffs[n] = LaurentPoly::monomial(crate::scalar::gr_one(), scale);
    }
    let expected = PExp::exponential(&space, coeffs);
    if candidate != expected {
        return Err(Error::CartanMismatch(sym.to_string()));
    }
    Ok(expected)
}

/// Build a Cartan element as a pure exponential and verify it against the
/// generator-product form with the adopted prefactor: K = q w2 w3,
/// K' = q w4 w1, while the dual pair needs the inverted prefactor,
/// K~ = q~^{-1} w~2 w~3 and K~' = q~^{-1} w~4 w~1, because the dual phase
/// convention q~ = e^{-i pi / tau} flips the sign of the cross term.
pub fn realize_cartan(sym: CartanSymbol) -> Result<PExp> {
    let prefactor = match sym {
        // q = e^{i pi tau}
        CartanSymbol::K | CartanSymbol::KPrime => {
            PhaseExp::from_tau(&LaurentPoly::monomial(crate::scalar::gr_one(), 1))
        }
        // q~^{-1} = e^{i pi / tau}
        CartanSymbol::KTilde | CartanSymbol::KTildePrime => {
            PhaseExp::new(LaurentPoly::monomial(crate::scalar::gr_one(), -2))
        }
    };
    realize_checked(sym, &prefactor)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::gr_one;

    fn tau_const(n: i64) -> LaurentPoly {
        LaurentPoly::monomial(gr_int(n), 2)
    }

    #[test]
    fn adjacent_product_picks_up_the_central_phase() {
        let p = pmul(&PExp::w(0), &PExp::w(1));
        assert_eq!(p.phase().exponent(), &tau_const(-1));
        assert_eq!(p.coeffs()[0], LaurentPoly::monomial(gr_one(), 1));
        assert_eq!(p.coeffs()[1], LaurentPoly::monomial(gr_one(), 1));
        assert!(p.coeffs()[2].is_zero());
    }

    #[test]
    fn distant_generators_commute() {
        assert_eq!(
            pmul(&PExp::w(0), &PExp::w(2)),
            pmul(&PExp::w(2), &PExp::w(0))
        );
        assert!(commutation_phase(&PExp::w(0), &PExp::w(2)).is_one());
    }

    #[test]
    fn commutation_exponent_matches_the_skew_form_of_the_lattice() {
        let lat = crate::weyl::Lattice::cyclic();
        for i in 0..4 {
            for j in 0..4 {
                let ph = commutation_phase(&PExp::w(i), &PExp::w(j));
                assert_eq!(ph.exponent(), &tau_const(2 * lat.skew(i, j)), "({i},{j})");
            }
        }
    }

    #[test]
    fn pmul_is_associative() {
        let a = pmul(&PExp::w(0), &PExp::w_tilde(1));
        let b = pmul(&PExp::w(2), &PExp::w(1)).scale_phase(&PhaseExp::from_tau(&tau_const(3)));
        let c = PExp::w_tilde(3).inverse();
        assert_eq!(pmul(&pmul(&a, &b), &c), pmul(&a, &pmul(&b, &c)));
    }

    #[test]
    fn inverses_cancel() {
        let a = pmul(&PExp::w(1), &PExp::w(0));
        assert_eq!(pmul(&a, &a.inverse()), PExp::identity(&PSpace::quad()));
    }

    #[test]
    fn tensor_blocks_commute() {
        let big = PSpace::quad().tensor(2);
        assert_eq!(big.rank(), 8);
        let mut x = vec![LaurentPoly::zero(); 8];
        x[1] = LaurentPoly::one();
        let mut y = vec![LaurentPoly::zero(); 8];
        y[6] = LaurentPoly::one();
        assert!(pairing_form(&big, &x, &y).is_zero());
        assert_eq!(big.pairing(4, 5), -1);
    }

    #[test]
    fn modular_commutation_table_passes() {
        let checks = check_modular_commutation();
        assert_eq!(checks.len(), 22);
        for c in &checks {
            assert!(c.pass(), "{}: found {:?}", c.name, c.found.exponent());
        }
        let dual = checks.iter().find(|c| c.name == "w~1 w~2 ratio").unwrap();
        assert_eq!(dual.found.exponent(), &LaurentPoly::monomial(gr_int(-2), -2));
    }

    #[test]
    fn cartan_realizations_verify() {
        let k = realize_cartan(CartanSymbol::K).unwrap();
        assert!(k.phase().is_one());
        assert_eq!(k.coeffs()[1], LaurentPoly::monomial(gr_one(), 1));
        assert_eq!(k.coeffs()[2], LaurentPoly::monomial(gr_one(), 1));
        assert!(k.coeffs()[0].is_zero() && k.coeffs()[3].is_zero());

        let kp = realize_cartan(CartanSymbol::KPrime).unwrap();
        assert_eq!(kp.coeffs()[0], LaurentPoly::monomial(gr_one(), 1));
        assert_eq!(kp.coeffs()[3], LaurentPoly::monomial(gr_one(), 1));

        let kt = realize_cartan(CartanSymbol::KTilde).unwrap();
        let scale = LaurentPoly::monomial(gr_one(), -2);
        for n in 0..4 {
            assert_eq!(kt.coeffs()[n], &k.coeffs()[n] * &scale, "K~ = K^(1/tau)");
        }
        realize_cartan(CartanSymbol::KTildePrime).unwrap();
    }

    #[test]
    fn k_commutes_with_its_dual() {
        let k = realize_cartan(CartanSymbol::K).unwrap();
        let kt = realize_cartan(CartanSymbol::KTilde).unwrap();
        assert_eq!(pmul(&k, &kt), pmul(&kt, &k));
        let kp = realize_cartan(CartanSymbol::KPrime).unwrap();
        assert!(commutation_phase(&k, &kp).is_one());
    }

    #[test]
    fn wrong_prefactor_is_a_hard_error() {
        let q = PhaseExp::from_tau(&LaurentPoly::monomial(gr_one(), 1));
        let err = realize_checked(CartanSymbol::K, &q.inverse()).unwrap_err();
        assert!(err.to_string().contains("Cartan realization mismatch"));
        assert!(realize_checked(CartanSymbol::KTilde, &q).is_err());
    }
}
