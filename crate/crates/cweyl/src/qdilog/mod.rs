//! Floating-point evaluation of the noncompact quantum dilogarithm
//! psi(p): the contour-integral representation, valid whenever the
//! integrand decays, and the dual product ratio s_q(e^{bp}) / s_q~(e^{p/b}),
//! valid for Im(b^2) > 0. The two overlap on a large region and
//! cross-validate each other; the shift equations in p tie both to the
//! q-exponent factorization.
//!
//! The integral is taken along the real axis with the third-order pole at
//! the origin circled from above: symmetric quadrature over r <= |xi| <= Xi
//! plus the analytic contribution of a small upper semicircle, computed
//! from the Laurent expansion of the integrand at 0.

mod quad;

use std::f64::consts::PI;

use crate::scalar::Complex64;
use crate::{Error, Result};

/// Tunable knobs of the contour evaluation. The cutoff is a floor: each
/// evaluation extends it as needed so that the discarded tail stays below
/// 1e-13 at that particular p.
#[derive(Debug, Clone, Copy)]
pub struct PsiParams {
    b: Complex64,
    cutoff: f64,
    panels: usize,
    radius: f64,
    laurent_order: usize,
}

impl PsiParams {
    /// Default evaluation parameters. The base b must lie in the open
    /// right half plane or on the unit circle away from the poles at +-i.
    pub fn new(b: Complex64) -> Result<Self> {
        if !b.is_finite() {
            return Err(Error::NonFinite(format!("b = {b}")));
        }
        let on_circle = (b.norm() - 1.0).abs() < 1e-12
            && (b - Complex64::new(0.0, 1.0)).norm() > 1e-9
            && (b + Complex64::new(0.0, 1.0)).norm() > 1e-9;
        if b.re <= 0.0 && !on_circle {
            return Err(Error::BadParameter(format!(
                "b = {b} is outside the right half plane and not on the unit circle"
            )));
        }
        Ok(PsiParams {
            b,
            cutoff: 2.0,
            panels: 8,
            radius: 0.1,
            laurent_order: 8,
        })
    }

    pub fn b(&self) -> Complex64 {
        self.b
    }

    pub fn cutoff(&self) -> f64 {
        self.cutoff
    }

    pub fn panels(&self) -> usize {
        self.panels
    }

    pub fn radius(&self) -> f64 {
        self.radius
    }

    pub fn laurent_order(&self) -> usize {
        self.laurent_order
    }

    pub fn with_cutoff(mut self, cutoff: f64) -> Result<Self> {
        if !(cutoff > 1.0) {
            return Err(Error::BadParameter(format!("cutoff {cutoff} must exceed 1")));
        }
        self.cutoff = cutoff;
        Ok(self)
    }

    pub fn with_panels(mut self, panels: usize) -> Result<Self> {
        if panels == 0 {
            return Err(Error::BadParameter("panel count must be positive".into()));
        }
        self.panels = panels;
        Ok(self)
    }

    pub fn with_radius(mut self, radius: f64) -> Result<Self> {
        if !(radius > 0.0 && radius < 1.0) {
            return Err(Error::BadParameter(format!(
                "semicircle radius {radius} must lie in (0, 1)"
            )));
        }
        self.radius = radius;
        Ok(self)
    }

    pub fn with_laurent_order(mut self, order: usize) -> Result<Self> {
        if order < 2 {
            return Err(Error::BadParameter(format!(
                "laurent order {order} is below the order of the pole"
            )));
        }
        self.laurent_order = order;
        Ok(self)
    }
}

/// Exponential decay rate of the integrand along the real axis, before
/// the e^{ip xi/pi} factor is taken into account.
fn decay_rate(b: Complex64) -> f64 {
    (b + b.inv()).re
}

/// Margin of the decay condition |Im p|/pi < Re(b + 1/b); the integral
/// representation exists iff this is positive.
pub fn decay_margin(p: Complex64, b: Complex64) -> f64 {
    decay_rate(b) - p.im.abs() / PI
}

/// Laurent coefficients of e^{-ip xi/pi} / (sh(b xi) sh(xi/b) xi) at
/// xi = 0, from the cube pole up to xi^order; entry [k + 3] holds the
/// coefficient of xi^k. The denominator is xi^3 s(b^2 xi^2) s(xi^2/b^2)
/// with s(y) = sh(sqrt y)/sqrt y, so the even part inverts as a power
/// series in xi^2 and the exponential supplies the odd orders.
///
/// The exponent sign is pinned by the product ratio: with s_q the series
/// whose coefficients are q^{k^2} / prod_{j<=k}(1 - q^{2j}), the ratio
/// s_q(e^{bp}) / s_q~(e^{p/b}) matches the contour integral only with
/// e^{-ip xi/pi}; the opposite sign reproduces the value at -p instead.
fn laurent_coeffs(p: Complex64, b: Complex64, order: usize) -> Vec<Complex64> {
    let top = order + 3;
    let mut e = vec![Complex64::new(1.0, 0.0); top + 1];
    let step = Complex64::new(0.0, -1.0) * p / PI;
    for k in 1..=top {
        e[k] = e[k - 1] * step / k as f64;
    }
    let half = top / 2;
    let mut s = vec![1.0f64; half + 1];
    for m in 1..=half {
        s[m] = s[m - 1] / ((2 * m) as f64 * (2 * m + 1) as f64);
    }
    let tau = b * b;
    let mut tau_pow = vec![Complex64::new(1.0, 0.0); half + 1];
    for j in 1..=half {
        tau_pow[j] = tau_pow[j - 1] * tau;
    }
    let mut prod = vec![Complex64::new(0.0, 0.0); half + 1];
    for m in 0..=half {
        for j in 0..=m {
            // s(b^2 y) contributes tau^j, s(y/b^2) contributes tau^{j-m}
            prod[m] += tau_pow[j] / tau_pow[m - j] * (s[j] * s[m - j]);
        }
    }
    let mut h = vec![Complex64::new(0.0, 0.0); half + 1];
    h[0] = Complex64::new(1.0, 0.0);
    for m in 1..=half {
        let mut acc = Complex64::new(0.0, 0.0);
        for j in 1..=m {
            acc += prod[j] * h[m - j];
        }
        h[m] = -acc;
    }
    let mut c = vec![Complex64::new(0.0, 0.0); top + 1];
    for (idx, ck) in c.iter_mut().enumerate() {
        let mut m = 0;
        while 2 * m <= idx {
            *ck += e[idx - 2 * m] * h[m];
            m += 1;
        }
    }
    c
}

/// Contribution of the upper semicircle of radius r around the pole,
/// traversed from angle pi to 0. Odd Laurent orders other than -1 cancel
/// between the two endpoints; the residue term enters as -i pi c_{-1}.
fn arc_term(c: &[Complex64], order: usize, r: f64) -> Complex64 {
    let mut arc = Complex64::new(0.0, -PI) * c[2] - c[1] * (2.0 / r);
    let mut m = 0usize;
    while 2 * m <= order {
        let k = 2 * m;
        arc += c[k + 3] * (2.0 * r.powi(k as i32 + 1) / (k as f64 + 1.0));
        m += 1;
    }
    arc
}

/// Contour-integral evaluation of psi(p): exp of a quarter of the
/// regularized integral of e^{-ip xi/pi} / (sh(b xi) sh(xi/b) xi). The
/// two real half-axes fold into -2i sin(p xi/pi) over the denominator,
/// which also avoids the cancellation between them near the origin.
pub fn psi_integral(p: Complex64, params: &PsiParams) -> Result<Complex64> {
    if !p.is_finite() {
        return Err(Error::NonFinite(format!("p = {p}")));
    }
    let b = params.b;
    let margin = decay_margin(p, b);
    if margin <= 0.0 {
        return Err(Error::DecayCondition {
            im_p_over_pi: p.im.abs() / PI,
            rate: decay_rate(b),
        });
    }
    // |integrand| <~ (4/xi) e^{-margin xi} for large xi, so this cutoff
    // keeps the discarded tail under 1e-13.
    let xi_max = params.cutoff.max((4.0 / (margin * 1e-13)).ln() / margin);
    let folded = |x: f64| {
        let num = Complex64::new(0.0, -2.0) * (p * (x / PI)).sin();
        num / ((b * x).sinh() * (x / b).sinh() * x)
    };
    let line = quad::integrate(folded, params.radius, xi_max, params.panels, 5e-13)?;
    let coeffs = laurent_coeffs(p, b, params.laurent_order);
    let arc = arc_term(&coeffs, params.laurent_order, params.radius);
    let value = ((line + arc) * 0.25).exp();
    if !value.is_finite() {
        return Err(Error::NonFinite(format!("psi({p})")));
    }
    Ok(value)
}

fn half_product(q: Complex64, w: Complex64, factors: usize) -> Complex64 {
    let q2 = q * q;
    let mut qodd = q;
    let mut acc = Complex64::new(1.0, 0.0);
    for _ in 0..factors {
        acc *= 1.0 + qodd * w;
        qodd *= q2;
    }
    acc
}

/// Factor count that pushes both geometric product tails below 1e-13 at
/// this point.
pub fn product_factor_count(p: Complex64, b: Complex64) -> Result<usize> {
    let tau = b * b;
    if tau.im <= 0.0 {
        return Err(Error::ProductRepInvalid { im_tau: tau.im });
    }
    let need = |q: Complex64, w: Complex64| -> f64 {
        let qa = q.norm();
        let wa = w.norm().max(1e-300);
        // log-tail of the product is below |q|^{2M+1} |w| / (1 - |q|^2)
        let tol = 1e-13 * (1.0 - qa * qa);
        ((tol.ln() - wa.ln()) / (2.0 * qa.ln()) - 0.5).ceil().max(4.0)
    };
    let q = (Complex64::new(0.0, PI) * tau).exp();
    let qt = (Complex64::new(0.0, -PI) / tau).exp();
    let m = need(q, (b * p).exp()).max(need(qt, (p / b).exp()));
    if m > 200_000.0 {
        return Err(Error::BadParameter(format!(
            "product representation needs {m:.0} factors at b = {b}"
        )));
    }
    Ok(m as usize)
}

/// Product-ratio evaluation of psi(p): M factors of (1 + q^{2n+1} e^{bp})
/// over M factors of (1 + q~^{2n+1} e^{p/b}). Both halves contract only
/// when Im(b^2) > 0.
pub fn psi_product(p: Complex64, b: Complex64, factors: usize) -> Result<Complex64> {
    if !p.is_finite() || !b.is_finite() {
        return Err(Error::NonFinite(format!("p = {p}, b = {b}")));
    }
    let tau = b * b;
    if tau.im <= 0.0 {
        return Err(Error::ProductRepInvalid { im_tau: tau.im });
    }
    let q = (Complex64::new(0.0, PI) * tau).exp();
    let qt = (Complex64::new(0.0, -PI) / tau).exp();
    let num = half_product(q, (b * p).exp(), factors);
    let den = half_product(qt, (p / b).exp(), factors);
    let value = num / den;
    if !value.is_finite() {
        return Err(Error::NonFinite(format!("psi({p})")));
    }
    Ok(value)
}

/// Evaluate by whichever representation covers this base: the product
/// ratio when Im(b^2) > 0 (valid at every p), the contour integral
/// otherwise (valid under the decay condition).
pub fn psi(p: Complex64, b: Complex64) -> Result<Complex64> {
    if (b * b).im > 0.0 {
        psi_product(p, b, product_factor_count(p, b)?)
    } else {
        psi_integral(p, &PsiParams::new(b)?)
    }
}

/// Worst relative disagreement between the two representations over real
/// sample points, inside the overlap region Im(b^2) > 0.
pub fn cross_representation_error(b: Complex64, points: &[f64]) -> Result<f64> {
    let params = PsiParams::new(b)?;
    let mut worst = 0.0f64;
    for &x in points {
        let p = Complex64::new(x, 0.0);
        let integral = psi_integral(p, &params)?;
        let product = psi_product(p, b, product_factor_count(p, b)?)?;
        worst = worst.max((integral - product).norm() / product.norm());
    }
    Ok(worst)
}

/// Worst disagreement of the contour integral under b -> 1/b, whose
/// integrand is symmetric term by term.
pub fn inversion_symmetry_error(b: Complex64, points: &[f64]) -> Result<f64> {
    let direct = PsiParams::new(b)?;
    let inverted = PsiParams::new(b.inv())?;
    let mut worst = 0.0f64;
    for &x in points {
        let p = Complex64::new(x, 0.0);
        worst = worst.max((psi_integral(p, &direct)? - psi_integral(p, &inverted)?).norm());
    }
    Ok(worst)
}

/// One functional-equation residual, maximized over the sample grid.
#[derive(Debug, Clone)]
pub struct PsiCheck {
    pub name: String,
    pub max_residual: f64,
    pub tolerance: f64,
    pub negative_control: bool,
}

impl PsiCheck {
    pub fn pass(&self) -> bool {
        if self.negative_control {
            self.max_residual >= self.tolerance
        } else {
            self.max_residual < self.tolerance
        }
    }
}

/// Shift equations over a real grid. The shift p -> p + 2 i pi b scales
/// e^{bp} by q^2 and fixes e^{p/b}, so the numerator product telescopes to
/// the factor (1 + q e^{bp}); the dual shift p -> p + 2 i pi / b scales
/// e^{p/b} by q~^{-2} and telescopes the denominator to (1 + q~^{-1}
/// e^{p/b}). A deliberately wrong dual factor q~ is kept as a control.
/// Branches whose shifted points leave the validity region of the
/// available representation are skipped; at least one must survive.
pub fn check_functional_equations(b: Complex64, grid: &[f64]) -> Result<Vec<PsiCheck>> {
    if grid.is_empty() {
        return Err(Error::BadParameter("empty functional-equation grid".into()));
    }
    let tau = b * b;
    let product_ok = tau.im > 0.0;
    let rate = decay_rate(b);
    let s1 = Complex64::new(0.0, 2.0 * PI) * b;
    let s2 = Complex64::new(0.0, 2.0 * PI) / b;
    let valid = |p: Complex64| product_ok || rate - p.im.abs() / PI > 0.0;
    let pts: Vec<Complex64> = grid.iter().map(|&x| Complex64::new(x, 0.0)).collect();
    let e1_ok = pts.iter().all(|&p| valid(p) && valid(p + s1));
    let e2_ok = pts.iter().all(|&p| valid(p) && valid(p + s2));
    let dd_ok = e1_ok && e2_ok && pts.iter().all(|&p| valid(p + s1 + s2));
    let q = (Complex64::new(0.0, PI) * tau).exp();
    let qt = (Complex64::new(0.0, -PI) / tau).exp();
    let eval = |p: Complex64| -> Result<Complex64> {
        if product_ok {
            psi_product(p, b, product_factor_count(p, b)?)
        } else {
            psi_integral(p, &PsiParams::new(b)?)
        }
    };
    let residual = |shift: Complex64, factor: &dyn Fn(Complex64) -> Complex64| -> Result<f64> {
        let mut worst = 0.0f64;
        for &p in &pts {
            let chained = eval(p + shift)? * factor(p);
            worst = worst.max((chained - eval(p)?).norm());
        }
        Ok(worst)
    };
    let mut out = Vec::new();
    if e1_ok {
        out.push(PsiCheck {
            name: "psi(p + 2 i pi b) (1 + q e^{b p}) = psi(p)".into(),
            max_residual: residual(s1, &|p| 1.0 + q * (b * p).exp())?,
            tolerance: 1e-8,
            negative_control: false,
        });
    }
    if e2_ok {
        out.push(PsiCheck {
            name: "psi(p + 2 i pi / b) (1 + q~^-1 e^{p / b}) = psi(p)".into(),
            max_residual: residual(s2, &|p| 1.0 + qt.inv() * (p / b).exp())?,
            tolerance: 1e-8,
            negative_control: false,
        });
        out.push(PsiCheck {
            name: "psi(p + 2 i pi / b) (1 + q~ e^{p / b}) = psi(p)".into(),
            max_residual: residual(s2, &|p| 1.0 + qt * (p / b).exp())?,
            tolerance: 1e-8,
            negative_control: true,
        });
    } else if e1_ok {
        out.push(PsiCheck {
            name: "psi(p + 2 i pi b) (1 + q^-1 e^{b p}) = psi(p)".into(),
            max_residual: residual(s1, &|p| 1.0 + q.inv() * (b * p).exp())?,
            tolerance: 1e-8,
            negative_control: true,
        });
    }
    if dd_ok {
        let mut worst = 0.0f64;
        for &p in &pts {
            let base = eval(p)?;
            let double = eval(p + s1 + s2)?;
            let first_dual = double
                * (1.0 + q * (b * (p + s2)).exp())
                * (1.0 + qt.inv() * (p / b).exp());
            let first_direct = double
                * (1.0 + qt.inv() * ((p + s1) / b).exp())
                * (1.0 + q * (b * p).exp());
            worst = worst
                .max((first_dual - base).norm())
                .max((first_direct - base).norm());
        }
        out.push(PsiCheck {
            name: "double shift chained in both orders returns psi(p)".into(),
            max_residual: worst,
            tolerance: 1e-7,
            negative_control: false,
        });
    }
    if out.is_empty() {
        return Err(Error::BadParameter(format!(
            "no functional-equation branch is valid at b = {b}"
        )));
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn unit_phase() -> Complex64 {
        Complex64::from_polar(1.0, PI / 4.0)
    }

    fn grid(n: usize, lo: f64, hi: f64) -> Vec<f64> {
        (0..n)
            .map(|i| lo + (hi - lo) * i as f64 / (n - 1) as f64)
            .collect()
    }

    #[test]
    fn vanishing_argument_makes_a_half_product_one() {
        let q = Complex64::new(0.3, 0.1);
        let one = half_product(q, Complex64::new(0.0, 0.0), 40);
        assert_eq!(one, Complex64::new(1.0, 0.0));
    }

    #[test]
    fn doubling_the_factor_count_is_inert() {
        let b = unit_phase();
        for &x in &[-1.3, 0.0, 0.7, 2.0] {
            let p = Complex64::new(x, 0.0);
            let m = product_factor_count(p, b).unwrap();
            let short = psi_product(p, b, m).unwrap();
            let long = psi_product(p, b, 2 * m).unwrap();
            assert!((short - long).norm() < 1e-12, "p = {x}: {short} vs {long}");
        }
    }

    #[test]
    fn the_two_representations_agree_on_the_overlap() {
        let b = unit_phase();
        let pts = grid(20, -2.0, 2.0);
        let worst = cross_representation_error(b, &pts).unwrap();
        assert!(worst < 1e-8, "worst relative disagreement {worst:e}");
    }

    #[test]
    fn inverting_b_is_inert_on_the_integral_branch() {
        let pts = grid(7, -1.5, 1.5);
        for b in [Complex64::new(0.7, 0.0), unit_phase()] {
            let worst = inversion_symmetry_error(b, &pts).unwrap();
            assert!(worst < 1e-10, "b = {b}: worst {worst:e}");
        }
    }

    #[test]
    fn shift_equations_hold_at_the_unit_phase() {
        let checks = check_functional_equations(unit_phase(), &grid(10, -2.0, 2.0)).unwrap();
        assert_eq!(checks.len(), 4);
        for c in &checks {
            assert!(c.pass(), "{}: residual {:e}", c.name, c.max_residual);
        }
        let control = checks.iter().find(|c| c.negative_control).unwrap();
        assert!(control.max_residual > 1e-2, "control too quiet: {:e}", control.max_residual);
    }

    #[test]
    fn real_bases_keep_one_shift_branch_each() {
        let small = check_functional_equations(Complex64::new(0.7, 0.0), &grid(5, -1.0, 1.0)).unwrap();
        assert_eq!(small.len(), 2);
        assert!(small[0].name.contains("2 i pi b)"), "{}", small[0].name);
        assert!(small[1].negative_control);
        for c in &small {
            assert!(c.pass(), "{}: residual {:e}", c.name, c.max_residual);
        }
        let large = check_functional_equations(Complex64::new(1.0 / 0.7, 0.0), &grid(5, -1.0, 1.0)).unwrap();
        assert_eq!(large.len(), 2);
        assert!(large[0].name.contains("2 i pi / b)"), "{}", large[0].name);
        assert!(large[1].negative_control);
        for c in &large {
            assert!(c.pass(), "{}: residual {:e}", c.name, c.max_residual);
        }
    }

    #[test]
    fn broken_decay_is_an_error() {
        let params = PsiParams::new(Complex64::new(0.7, 0.0)).unwrap();
        let p = Complex64::new(0.0, 3.0 * PI);
        let err = psi_integral(p, &params).unwrap_err();
        assert!(matches!(err, Error::DecayCondition { .. }), "{err}");
    }

    #[test]
    fn real_bases_reject_the_product() {
        let p = Complex64::new(0.5, 0.0);
        let err = psi_product(p, Complex64::new(0.7, 0.0), 10).unwrap_err();
        assert!(matches!(err, Error::ProductRepInvalid { .. }), "{err}");
    }

    #[test]
    fn halving_the_arc_radius_is_inert() {
        let base = PsiParams::new(Complex64::new(0.9, 0.0)).unwrap();
        let tight = base.with_radius(0.05).unwrap();
        for &x in &[-1.0, 0.4, 1.7] {
            let p = Complex64::new(x, 0.3);
            let a = psi_integral(p, &base).unwrap();
            let b = psi_integral(p, &tight).unwrap();
            assert!((a - b).norm() < 1e-10, "p = {p}: {a} vs {b}");
        }
    }

    #[test]
    fn the_panel_seed_does_not_matter() {
        let coarse = PsiParams::new(Complex64::new(0.8, 0.0)).unwrap().with_panels(4).unwrap();
        let fine = coarse.with_panels(32).unwrap();
        let p = Complex64::new(0.6, -0.4);
        let a = psi_integral(p, &coarse).unwrap();
        let b = psi_integral(p, &fine).unwrap();
        assert!((a - b).norm() < 1e-10, "{a} vs {b}");
    }

    #[test]
    fn laurent_expansion_starts_at_the_cube_pole() {
        let b = Complex64::new(0.8, 0.1);
        let p = Complex64::new(1.3, -0.2);
        let c = laurent_coeffs(p, b, 8);
        let ip = Complex64::new(0.0, -1.0) * p / PI;
        let tau = b * b;
        let sub_leading = ip * ip / 2.0 - (tau + tau.inv()) / 6.0;
        assert!((c[0] - 1.0).norm() < 1e-15);
        assert!((c[1] - ip).norm() < 1e-15);
        assert!((c[2] - sub_leading).norm() < 1e-14, "{} vs {sub_leading}", c[2]);
    }

    #[test]
    fn parameter_validation_rejects_nonsense() {
        assert!(PsiParams::new(Complex64::new(0.0, 1.0)).is_err());
        assert!(PsiParams::new(Complex64::new(-0.5, 0.2)).is_err());
        let ok = PsiParams::new(Complex64::new(0.7, 0.0)).unwrap();
        assert!(ok.with_radius(1.3).is_err());
        assert!(ok.with_cutoff(0.5).is_err());
        assert!(ok.with_laurent_order(1).is_err());
        assert!(ok.with_panels(0).is_err());
    }
}
