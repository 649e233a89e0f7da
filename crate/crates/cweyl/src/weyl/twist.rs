//! The Cartan twist: an integer-parameter automorphism family on tensor
//! powers of the cyclic lattice, realized lattice-intrinsically through
//! adjoint charges instead of transcendental conjugation.

use super::{Lattice, WeylElement};
use crate::scalar::QScalar;

/// Bilinear pairing g^T S u. Conjugating the monomial u by the monomial g
/// rescales it: g u g^{-1} = q^{2 conjugation_weight(g,u)} u.
pub fn conjugation_weight(lat: &Lattice, g: &[i64], u: &[i64]) -> i64 {
    let n = lat.rank();
    assert_eq!(g.len(), n);
    assert_eq!(u.len(), n);
    let mut w = 0;
    for i in 0..n {
        if g[i] == 0 {
            continue;
        }
        for j in 0..n {
            w += g[i] * lat.skew(i, j) * u[j];
        }
    }
    w
}

/// Integer charge of a cyclic-slot monomial under conjugation by the Cartan
/// direction (the w2 w3 exponent pattern): e1 + e2 - e3 - e4.
pub fn adjoint_charge(block: &[i64]) -> i64 {
    assert_eq!(block.len(), 4, "adjoint charge is defined on cyclic slots");
    block[0] + block[1] - block[2] - block[3]
}

/// Adjoint charge of each tensor slot of a monomial.
pub fn slot_charges(lat: &Lattice, m: &[i64]) -> Vec<i64> {
    assert_eq!(lat.slot_width(), 4, "charges are defined on cyclic slots");
    (0..lat.slots())
        .map(|s| adjoint_charge(&m[lat.slot_range(s)]))
        .collect()
}

/// q^{m^2} w2^m w3^m placed in one slot: the m-th power of the Cartan
/// monomial q w2 w3, by the square phase of its self-ordering.
fn k_power(lat: &Lattice, slot: usize, m: i64) -> WeylElement {
    let mut e = vec![0; lat.rank()];
    let r = lat.slot_range(slot);
    e[r.start + 1] = m;
    e[r.start + 2] = m;
    WeylElement::term(lat, QScalar::q_pow(m * m), &e)
}

/// q^{-m^2} w1^m w4^m placed in one slot: the m-th power of q w4 w1.
fn k_prime_power(lat: &Lattice, slot: usize, m: i64) -> WeylElement {
    let mut e = vec![0; lat.rank()];
    let r = lat.slot_range(slot);
    e[r.start] = m;
    e[r.start + 3] = m;
    WeylElement::term(lat, QScalar::q_pow(-m * m), &e)
}

/// Twist acting on the (slot_i, slot_j) pair of a tensor element: the
/// monomial with slot charges (a_i, a_j) picks up q^{-2k a_i a_j} and gets
/// multiplied by the slot-i Cartan power of order -k a_j and the slot-j
/// primed Cartan power of order k a_i. An automorphism for every integer k;
/// the charges are integers, so the result stays inside the algebra.
pub fn twist_pair(a: &WeylElement, k: i64, slot_i: usize, slot_j: usize) -> WeylElement {
    let lat = a.lattice().clone();
    assert_eq!(lat.slot_width(), 4, "twist acts on cyclic-lattice slots");
    assert!(slot_i < lat.slots() && slot_j < lat.slots() && slot_i != slot_j);
    if k == 0 {
        return a.clone();
    }
    let ri = lat.slot_range(slot_i);
    let rj = lat.slot_range(slot_j);
    let mut out = WeylElement::zero(&lat);
    for (m, c) in a.terms() {
        let ai = adjoint_charge(&m[ri.clone()]);
        let aj = adjoint_charge(&m[rj.clone()]);
        let t = WeylElement::term(&lat, c * &QScalar::q_pow(-2 * k * ai * aj), m);
        let t = &(&t * &k_power(&lat, slot_i, -k * aj)) * &k_prime_power(&lat, slot_j, k * ai);
        out = &out + &t;
    }
    out
}

/// The twist on a two-slot element, acting on the slot pair (0, 1).
pub fn cartan_twist(a: &WeylElement, k: i64) -> WeylElement {
    assert_eq!(a.lattice().slots(), 2, "cartan_twist takes a two-slot element");
    twist_pair(a, k, 0, 1)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn pair_lattice() -> Lattice {
        Lattice::cyclic().tensor(2)
    }

    fn wt(i: usize, j: usize) -> WeylElement {
        let w = |n| WeylElement::generator(&Lattice::cyclic(), n);
        &w(i).tensor_embed(0, 2) * &w(j).tensor_embed(1, 2)
    }

    #[test]
    fn identity_is_fixed() {
        let one = WeylElement::one(&pair_lattice());
        for k in [-2, -1, 0, 1, 3] {
            assert_eq!(cartan_twist(&one, k), one);
        }
    }

    #[test]
    fn cartan_monomials_are_fixed() {
        let lat = pair_lattice();
        let kk = &k_power(&lat, 0, 1) * &k_prime_power(&lat, 1, 1);
        for k in [-2, -1, 1, 3] {
            assert_eq!(cartan_twist(&kk, k), kk);
        }
    }

    #[test]
    fn twist_of_a_charged_pair_attaches_cartan_powers() {
        let lat = pair_lattice();
        let a = wt(0, 2);
        let expected = (&(&a * &k_power(&lat, 0, -1)) * &k_prime_power(&lat, 1, -1))
            .scale(&QScalar::q_pow(-2));
        assert_eq!(cartan_twist(&a, -1), expected);
        assert_eq!(
            expected,
            WeylElement::term(&lat, QScalar::q_pow(-2), &[1, -1, -1, 0, -1, 0, 1, -1])
        );
    }

    #[test]
    fn twist_is_an_algebra_automorphism() {
        let a = &wt(0, 2) + &wt(1, 3).scale(&QScalar::q_pow(3));
        let b = &wt(3, 0) + &WeylElement::one(&pair_lattice());
        for k in [-1, 2] {
            let lhs = cartan_twist(&(&a * &b), k);
            let rhs = &cartan_twist(&a, k) * &cartan_twist(&b, k);
            assert_eq!(lhs, rhs, "k = {k}");
        }
    }

    #[test]
    fn opposite_parameters_invert_each_other() {
        let a = &wt(1, 2) + &wt(0, 3);
        for k in [-2, 1] {
            assert_eq!(cartan_twist(&cartan_twist(&a, k), -k), a);
        }
    }

    #[test]
    fn conjugation_weight_predicts_the_exchange_phase() {
        let lat = Lattice::cyclic();
        let samples: [&[i64]; 4] = [&[1, 0, 0, 0], &[0, 1, 1, 0], &[2, 0, -1, 1], &[0, -1, 0, 2]];
        for g in samples {
            for u in samples {
                let ge = WeylElement::monomial(&lat, g);
                let ue = WeylElement::monomial(&lat, u);
                let w = conjugation_weight(&lat, g, u);
                assert_eq!(&ge * &ue, (&ue * &ge).scale(&QScalar::q_pow(2 * w)));
            }
        }
    }

    #[test]
    fn charges_match_the_conjugation_weight_form() {
        let lat = Lattice::cyclic();
        let cartan = [0, 1, 1, 0];
        for u in [[1i64, 0, 0, 0], [0, 0, 1, 0], [1, 2, 0, -1], [0, 1, 1, 0]] {
            assert_eq!(adjoint_charge(&u), conjugation_weight(&lat, &cartan, &u));
        }
        assert_eq!(slot_charges(&pair_lattice(), &[1, 0, 0, 0, 0, 0, 1, 0]), vec![1, -1]);
    }
}
