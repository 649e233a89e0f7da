//! The ten acceptance gates. Each test checks one criterion end to end
//! and prints a single pass/fail line.

use std::f64::consts::PI;
use std::time::Instant;

use cweyl::chevalley::{self, StarFamily};
use cweyl::heiscalc::{self, CartanSymbol};
use cweyl::matoracle;
use cweyl::qdilog;
use cweyl::qseries::{self, SeriesCheck};
use cweyl::rmat::{self, CoproductConvention};
use cweyl::scalar::Complex64;
use cweyl::suites;
use cweyl::weyl::WeylElement;

fn gate(number: u32, name: &str, pass: bool) {
    println!(
        "criterion {number:02} ({name}): {}",
        if pass { "pass" } else { "FAIL" }
    );
    assert!(pass, "criterion {number:02} ({name})");
}

/// Ordinary checks must vanish, controls must not.
fn settled(checks: &[SeriesCheck]) -> bool {
    checks
        .iter()
        .all(|c| c.residual.is_zero() != c.negative_control)
}

fn commutes(z: &WeylElement, gens: &[&WeylElement]) -> bool {
    gens.iter().all(|x| (&(z * *x) - &(*x * z)).is_zero())
}

#[test]
fn criterion_01_uq_relations_exact() {
    let start = Instant::now();
    let g = chevalley::embed();
    let residuals = chevalley::verify_uq(&g);
    let ok = residuals.len() == 7 && residuals.iter().all(|r| r.residual.is_zero());
    let fast = start.elapsed().as_secs_f64() < 1.0;
    gate(1, "seven U_q relations hold exactly in under a second", ok && fast);
}

#[test]
fn criterion_02_central_elements_and_reported_casimir() {
    let g = chevalley::embed();
    let cs = chevalley::casimirs(&g).unwrap();
    let j_ok = (&cs.j - &(&cs.z1 * &cs.z2)).is_zero();
    let c_ok = (&cs.c - &(&cs.z1 + &cs.z2)).is_zero();
    let gens = [&g.e, &g.f, &g.k, &g.k_prime];
    let central = [&cs.z1, &cs.z2, &cs.j, &cs.c]
        .iter()
        .all(|z| commutes(z, &gens));

    let conv = suites::conventions().unwrap();
    let states_form = conv.casimir_chevalley_form == cs.chevalley_form();
    let flags_alternative = conv.discrepancies.iter().any(|d| {
        d.alternative.contains("(K - K')/(q - q^-1)")
            && d.alternative_outcome.contains("nonzero commutator")
    });

    gate(
        2,
        "central elements exact and the Casimir form is reported",
        j_ok && c_ok && central && states_form && flags_alternative,
    );
}

#[test]
fn criterion_03_series_identities() {
    let start = Instant::now();
    let schutz = qseries::check_schutzenberger(6).unwrap();
    let pentagon = qseries::check_pentagon(6).unwrap();
    let forms = qseries::check_sq_forms(8).unwrap();
    let within = start.elapsed().as_secs_f64() < 300.0;
    gate(
        3,
        "product, pentagon, and coefficient-form identities",
        settled(&schutz) && settled(&pentagon) && settled(&forms) && within,
    );
}

#[test]
fn criterion_04_four_factor_split() {
    let checks = rmat::check_factorization(6).unwrap();
    gate(4, "four-factor split of the joint series", settled(&checks));
}

#[test]
fn criterion_05_intertwining_selects_one_candidate() {
    let start = Instant::now();
    let rep = rmat::check_intertwining(5).unwrap();
    let mut passing = 0;
    for k in [-1i64, 1] {
        for conv in CoproductConvention::all() {
            let all = rep
                .records
                .iter()
                .filter(|r| r.k == k && r.convention == conv)
                .all(|r| r.pass);
            passing += all as usize;
        }
    }
    let ok = rep.records.len() == 32 && passing == 1 && rep.control_nonzero();
    let within = start.elapsed().as_secs_f64() < 600.0;
    gate(
        5,
        "exactly one twist and coproduct pair intertwines",
        ok && within,
    );
}

#[test]
fn criterion_06_yang_baxter() {
    let rep = rmat::check_yang_baxter(4).unwrap();
    gate(
        6,
        "Yang-Baxter on the tensor cube with scrambled control",
        rep.residual.is_zero() && !rep.control_residual.is_zero(),
    );
}

#[test]
fn criterion_07_modular_pair_and_cartan_exponents() {
    let checks = heiscalc::check_modular_commutation();
    let mixed: Vec<_> = checks
        .iter()
        .filter(|c| c.name.starts_with('w') && !c.name.starts_with("w~") && c.name.contains("vs w~"))
        .collect();
    let mixed_ok = mixed.len() == 16 && mixed.iter().all(|c| c.pass());
    let table_ok = checks.iter().all(|c| c.pass());

    let cartan_ok = [
        CartanSymbol::K,
        CartanSymbol::KPrime,
        CartanSymbol::KTilde,
        CartanSymbol::KTildePrime,
    ]
    .into_iter()
    .all(|sym| heiscalc::realize_cartan(sym).is_ok());

    let cmp = heiscalc::cartan_exponent_compare();
    let gamma_ok = cmp.twist_q == Some(-1)
        && cmp.twist_q_tilde == Some(1)
        && format!("{}", cmp.gamma_q) == "(1/2i)/pi"
        && format!("{}", cmp.gamma_q_tilde) == "(-1/2i)/pi";
    let alternative_flagged = cmp.twist_alternative.is_none() && !cmp.alternative_matches();

    gate(
        7,
        "the two Weyl copies commute and the Cartan exponents are pinned",
        mixed_ok && table_ok && cartan_ok && gamma_ok && alternative_flagged,
    );
}

#[test]
fn criterion_08_matrix_oracle() {
    let z1 = Complex64::new(0.7, -0.3);
    let z2 = Complex64::new(1.2, 0.5);
    let mut ok = true;
    for n in [3usize, 5, 8] {
        let rep = matoracle::realize_w(n, z1, z2).unwrap();
        let relations = rep
            .relation_residuals()
            .into_iter()
            .chain(rep.centrality_residuals())
            .map(|(_, r)| r)
            .fold(0.0f64, f64::max);
        let hom = matoracle::homomorphism_trials(&rep, 100, 1000 + n as u64).unwrap();
        let uq = matoracle::uq_matrix_residuals(&rep)
            .unwrap()
            .into_iter()
            .map(|(_, r)| r)
            .fold(0.0f64, f64::max);
        ok &= relations < 1e-12 && hom < 1e-10 && uq < 1e-10;
    }
    gate(8, "clock-shift model at dimensions 3, 5, 8", ok);
}

#[test]
fn criterion_09_psi_representations_and_shifts() {
    let b = Complex64::from_polar(1.0, PI / 4.0);
    let grid20: Vec<f64> = (0..20).map(|i| -2.0 + 4.0 * i as f64 / 19.0).collect();
    let cross_ok = qdilog::cross_representation_error(b, &grid20).unwrap() < 1e-8;
    let inversion_ok = qdilog::inversion_symmetry_error(b, &grid20).unwrap() < 1e-10;

    let grid7: Vec<f64> = (0..7).map(|i| -1.2 + 2.4 * i as f64 / 6.0).collect();
    let eqs = qdilog::check_functional_equations(b, &grid7).unwrap();
    let shifts_ok = eqs.iter().all(|c| c.pass())
        && eqs
            .iter()
            .filter(|c| !c.negative_control && c.name.contains("= psi(p)"))
            .all(|c| c.max_residual < 1e-8);

    let params = qdilog::PsiParams::new(b).unwrap();
    let timed = |f: &dyn Fn() -> Complex64| {
        let start = Instant::now();
        let v = f();
        (start.elapsed().as_secs_f64(), v)
    };
    let (t1, v1) = timed(&|| qdilog::psi_integral(Complex64::new(0.3, 0.0), &params).unwrap());
    let (t2, v2) = timed(&|| qdilog::psi(Complex64::new(0.3, 0.0), b).unwrap());
    let (t3, v3) = timed(&|| {
        qdilog::psi(Complex64::new(1.7, 0.0), Complex64::new(0.7, 0.0)).unwrap()
    });
    let fast = t1 < 0.5 && t2 < 0.5 && t3 < 0.5;
    let finite = [v1, v2, v3].iter().all(|v| v.is_finite());

    gate(
        9,
        "psi representations, inversion, and shift equations",
        cross_ok && inversion_ok && shifts_ok && fast && finite,
    );
}

#[test]
fn criterion_10_central_charge_ranges() {
    let classical = chevalley::star_classify(Complex64::new(1.0, 0.0)).unwrap();
    let classical_ok = classical.central_charge == Complex64::new(25.0, 0.0)
        && classical.family == StarFamily::SLq2R;

    let real_ok = [0.3, 0.5, 0.8, 1.0, 1.6, 2.5].iter().all(|&x| {
        let c = chevalley::star_classify(Complex64::new(x, 0.0)).unwrap();
        c.family == StarFamily::SLq2R
            && c.central_charge.im == 0.0
            && c.central_charge.re >= 25.0
    });

    let imaginary_ok = [0.4, 1.0, 1.5].iter().all(|&y| {
        let c = chevalley::star_classify(Complex64::new(0.0, y)).unwrap();
        c.family == StarFamily::SUq2
            && c.central_charge.im == 0.0
            && c.central_charge.re <= 1.0
    });

    let circle_ok = [0.3, 0.6, PI / 4.0, 1.0, 1.2].iter().all(|&t| {
        let c = chevalley::star_classify(Complex64::from_polar(1.0, t)).unwrap();
        c.family == StarFamily::FactorInterchange
            && c.central_charge.im.abs() < 1e-12
            && c.central_charge.re >= 1.0 - 1e-12
            && c.central_charge.re <= 25.0 + 1e-12
    });

    gate(
        10,
        "central charge ranges across the three star families",
        classical_ok && real_ok && imaginary_ok && circle_ok,
    );
}
