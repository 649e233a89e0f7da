//! Finite-dimensional numerical oracle. Clock and shift matrices realize
//! the four cyclic Weyl generators at a root of unity, entirely
//! independently of the symbolic normal-ordering engine; evaluating
//! symbolic elements under this representation and comparing matrix
//! products against symbolic ones cross-checks both sides.
//!
//! Only polynomial identities are covered: q-series coefficients have
//! q-integer denominators that vanish at roots of unity, so series objects
//! are rejected rather than regularized.

use std::f64::consts::PI;

use nalgebra::DMatrix;
use num::integer::gcd;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::chevalley;
use crate::scalar::{gr_int, Complex64, LaurentPoly, QScalar};
use crate::weyl::{Lattice, WeylElement};
use crate::{Error, Result};

pub type CMat = DMatrix<Complex64>;

/// Phase numerator m of the root q0 = e^{i pi m / N}. For odd N an even m
/// makes q0 itself a primitive N-th root (an odd-denominator fraction of
/// 2 pi); for even N only a primitive 2N-th root can square to a
/// primitive N-th root, so m is odd. Among the admissible m the one
/// nearest N/2 wins (ties to the smaller), keeping |q0 - q0^{-1}| and the
/// small q-integer denominators as large as possible.
fn root_phase(n: usize) -> i64 {
    let n_i = n as i64;
    let mut best: Option<i64> = None;
    for m in 1..n_i {
        if m % 2 == n_i % 2 || gcd(m, n_i) != 1 {
            continue;
        }
        let better = match best {
            None => true,
            Some(b) => (2 * m - n_i).abs() < (2 * b - n_i).abs(),
        };
        if better {
            best = Some(m);
        }
    }
    best.expect("no admissible root phase")
}

/// The root of unity the oracle works at: q0 with q0^2 a primitive N-th
/// root of unity.
pub fn root_unity(n: usize) -> Complex64 {
    assert!(n >= 2, "need a dimension of at least 2");
    Complex64::from_polar(1.0, PI * root_phase(n) as f64 / n as f64)
}

fn shift_matrix(n: usize, s: i64) -> CMat {
    let mut m = CMat::zeros(n, n);
    for j in 0..n {
        let i = (j as i64 + s).rem_euclid(n as i64) as usize;
        m[(i, j)] = Complex64::new(1.0, 0.0);
    }
    m
}

/// diag(omega^{j e}) for omega = e^{i angle}, with the exponent reduced
/// mod N before touching floats.
fn diag_power(n: usize, angle: f64, e: i64) -> CMat {
    let mut m = CMat::zeros(n, n);
    for j in 0..n {
        let k = (j as i64 * e).rem_euclid(n as i64);
        m[(j, j)] = Complex64::from_polar(1.0, angle * k as f64);
    }
    m
}

fn zpow(z: Complex64, e: i64) -> Complex64 {
    if e >= 0 {
        z.powu(e as u32)
    } else {
        z.inv().powu((-e) as u32)
    }
}

/// Weyl pair at the root: V = diag(1, omega, ..., omega^{N-1}) and U the
/// cyclic shift, so that U V = omega^{-1} V U matches the adopted sign of
/// the skew form for adjacent generators.
pub fn clock_shift(n: usize) -> (CMat, CMat) {
    let q0 = root_unity(n);
    let omega = q0 * q0;
    (shift_matrix(n, 1), diag_power(n, omega.arg(), 1))
}

/// The four cyclic generators as N x N matrices: W1 = U, W2 = V,
/// W3 = z1 U^{-1}, W4 = z2 V^{-1}. The rank-2 radical of the cyclic skew
/// form is what lets two of the four be carried by the same Weyl pair, at
/// the price of the two central parameters z1, z2.
#[derive(Debug)]
pub struct MatrixRep {
    n: usize,
    q0: Complex64,
    omega_angle: f64,
    z: [Complex64; 2],
    w: [CMat; 4],
}

pub fn realize_w(n: usize, z1: Complex64, z2: Complex64) -> Result<MatrixRep> {
    if !(2..=32).contains(&n) {
        return Err(Error::BadParameter(format!(
            "oracle dimension {n} outside 2..=32"
        )));
    }
    for (name, z) in [("z1", z1), ("z2", z2)] {
        if !z.re.is_finite() || !z.im.is_finite() {
            return Err(Error::NonFinite(format!("{name} = {z}")));
        }
        if z.norm() == 0.0 {
            return Err(Error::ZeroCentralParameter(if name == "z1" {
                "z1"
            } else {
                "z2"
            }));
        }
    }
    let q0 = root_unity(n);
    let omega_angle = (q0 * q0).arg();
    let (u, v) = clock_shift(n);
    let w3 = shift_matrix(n, -1) * z1;
    let w4 = diag_power(n, omega_angle, -1) * z2;
    Ok(MatrixRep {
        n,
        q0,
        omega_angle,
        z: [z1, z2],
        w: [u, v, w3, w4],
    })
}

impl MatrixRep {
    pub fn dim(&self) -> usize {
        self.n
    }

    pub fn q0(&self) -> Complex64 {
        self.q0
    }

    pub fn omega(&self) -> Complex64 {
        self.q0 * self.q0
    }

    pub fn z1(&self) -> Complex64 {
        self.z[0]
    }

    pub fn z2(&self) -> Complex64 {
        self.z[1]
    }

    /// Generator matrix by 0-based lattice slot.
    pub fn w(&self, idx: usize) -> &CMat {
        &self.w[idx]
    }

    fn gen_power(&self, idx: usize, e: i64) -> CMat {
        match idx {
            0 => shift_matrix(self.n, e),
            1 => diag_power(self.n, self.omega_angle, e),
            2 => shift_matrix(self.n, -e) * zpow(self.z[0], e),
            3 => diag_power(self.n, self.omega_angle, -e) * zpow(self.z[1], e),
            _ => panic!("generator index {idx} out of range"),
        }
    }

    /// Frobenius norms of the defining relations: the four cyclic
    /// exchange relations and the two central identifications.
    pub fn relation_residuals(&self) -> Vec<(String, f64)> {
        let omega_inv = Complex64::from_polar(1.0, -self.omega_angle);
        let mut out = Vec::new();
        for i in 0..4 {
            let j = (i + 1) % 4;
            let r = (&self.w[i] * &self.w[j] - (&self.w[j] * &self.w[i]) * omega_inv).norm();
            out.push((format!("w{} w{} = q^-2 w{} w{}", i + 1, j + 1, j + 1, i + 1), r));
        }
        let id = CMat::identity(self.n, self.n);
        out.push((
            "w1 w3 = z1".to_string(),
            (&self.w[0] * &self.w[2] - &id * self.z[0]).norm(),
        ));
        out.push((
            "w2 w4 = z2".to_string(),
            (&self.w[1] * &self.w[3] - &id * self.z[1]).norm(),
        ));
        out
    }

    /// Commutator norms of the two central products against every
    /// generator.
    pub fn centrality_residuals(&self) -> Vec<(String, f64)> {
        let mut out = Vec::new();
        for (name, z) in [("z1", &self.w[0] * &self.w[2]), ("z2", &self.w[1] * &self.w[3])] {
            for i in 0..4 {
                let r = (&z * &self.w[i] - &self.w[i] * &z).norm();
                out.push((format!("[{}, w{}] = 0", name, i + 1), r));
            }
        }
        out
    }
}

/// Whether the closed form of a monomial's matrix forces a zero trace:
/// W1^a W2^b W3^c W4^d is a scalar times U^{a-c} V^{b-d}, so the trace
/// vanishes unless both reduced exponents are 0 mod N. (Exponents on the
/// central sublattice spanned by w1 w3 and w2 w4 survive even though they
/// are not multiples of N.)
pub fn monomial_trace_vanishes(n: usize, exponents: &[i64]) -> bool {
    assert_eq!(exponents.len(), 4);
    let ni = n as i64;
    (exponents[0] - exponents[2]).rem_euclid(ni) != 0
        || (exponents[1] - exponents[3]).rem_euclid(ni) != 0
}

/// Evaluate a symbolic element at the representation: each normal-ordered
/// monomial becomes the matrix product of generator powers, weighted by
/// its coefficient evaluated at q0. Summation follows the monomial order,
/// so results are bit-for-bit reproducible.
pub fn evaluate(a: &WeylElement, rep: &MatrixRep) -> Result<CMat> {
    let cyclic = Lattice::cyclic();
    if a.lattice() != &cyclic {
        return Err(Error::LatticeMismatch(
            a.lattice().to_string(),
            cyclic.to_string(),
        ));
    }
    let mut acc = CMat::zeros(rep.n, rep.n);
    for (mono, coeff) in a.terms() {
        let c = coeff.eval(rep.q0).map_err(|e| match e {
            Error::Pole { q0, .. } => Error::CoefficientPole {
                monomial: WeylElement::monomial(&cyclic, mono).to_string(),
                q0,
            },
            other => other,
        })?;
        let mut m = rep.gen_power(0, mono[0]);
        for idx in 1..4 {
            if mono[idx] != 0 {
                m *= rep.gen_power(idx, mono[idx]);
            }
        }
        acc += m * c;
    }
    Ok(acc)
}

fn random_element(rng: &mut ChaCha8Rng, lat: &Lattice) -> WeylElement {
    let mut acc = WeylElement::zero(lat);
    for _ in 0..rng.gen_range(1..=3) {
        let exps: Vec<i64> = (0..4).map(|_| rng.gen_range(-1..=1)).collect();
        let c = gr_int(rng.gen_range(-3..=3));
        let k = rng.gen_range(-2..=2);
        let coeff = QScalar::laurent(LaurentPoly::monomial(c, k));
        acc = acc + WeylElement::term(lat, coeff, &exps);
    }
    acc
}

/// The oracle property itself: evaluate(a b) against evaluate(a)
/// evaluate(b) over seeded random pairs with small integer q-Laurent
/// coefficients (pole-free by construction). Returns the worst relative
/// Frobenius residual.
pub fn homomorphism_trials(rep: &MatrixRep, trials: usize, seed: u64) -> Result<f64> {
    let lat = Lattice::cyclic();
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut worst = 0.0f64;
    for _ in 0..trials {
        let a = random_element(&mut rng, &lat);
        let b = random_element(&mut rng, &lat);
        let ab = a.normal_product(&b)?;
        let left = evaluate(&ab, rep)?;
        let right = evaluate(&a, rep)? * evaluate(&b, rep)?;
        let scale = right.norm().max(1.0);
        worst = worst.max((left - right).norm() / scale);
    }
    Ok(worst)
}

/// Evaluate the Chevalley generators and redo the quantum-group relations
/// in plain matrix arithmetic.
pub fn uq_matrix_residuals(rep: &MatrixRep) -> Result<Vec<(String, f64)>> {
    let g = chevalley::embed();
    let e = evaluate(&g.e, rep)?;
    let f = evaluate(&g.f, rep)?;
    let k = evaluate(&g.k, rep)?;
    let kp = evaluate(&g.k_prime, rep)?;
    let k_inv = evaluate(&g.k_inv, rep)?;
    let kp_inv = evaluate(&g.k_prime_inv, rep)?;
    let id = CMat::identity(rep.n, rep.n);
    let q0 = rep.q0;
    let q2 = q0 * q0;
    let q2_inv = q2.inv();
    let gap = q0 - q0.inv();
    Ok(vec![
        ("K K^-1 = 1".into(), (&k * &k_inv - &id).norm()),
        ("K' K'^-1 = 1".into(), (&kp * &kp_inv - &id).norm()),
        ("K e = q^2 e K".into(), (&k * &e - (&e * &k) * q2).norm()),
        (
            "K' e = q^-2 e K'".into(),
            (&kp * &e - (&e * &kp) * q2_inv).norm(),
        ),
        ("K f = q^-2 f K".into(), (&k * &f - (&f * &k) * q2_inv).norm()),
        ("K' f = q^2 f K'".into(), (&kp * &f - (&f * &kp) * q2).norm()),
        (
            "e f - f e = (K - K')/(q - q^-1)".into(),
            (&e * &f - &f * &e - (&k - &kp) / gap).norm(),
        ),
        ("K K' = K' K".into(), (&k * &kp - &kp * &k).norm()),
    ])
}

/// The Casimir element must evaluate to (z1 + z2) I.
pub fn casimir_matrix_defect(rep: &MatrixRep) -> Result<f64> {
    let g = chevalley::embed();
    let cs = chevalley::casimirs(&g)?;
    let c = evaluate(&cs.c, rep)?;
    let id = CMat::identity(rep.n, rep.n);
    Ok((c - id * (rep.z1() + rep.z2())).norm())
}
