//! Panel quadrature for the contour representation: fixed-order
//! Gauss-Legendre panels refined by doubling until two successive levels
//! agree.

use crate::scalar::Complex64;
use crate::{Error, Result};

const GAUSS_ORDER: usize = 16;
const MAX_DOUBLINGS: usize = 14;

/// Nodes and weights of the g-point Gauss-Legendre rule on [-1, 1],
/// located by Newton iteration from the Chebyshev initial guess.
fn legendre_rule(g: usize) -> (Vec<f64>, Vec<f64>) {
    let mut nodes = vec![0.0; g];
    let mut weights = vec![0.0; g];
    for i in 0..g {
        let mut x = (std::f64::consts::PI * (i as f64 + 0.75) / (g as f64 + 0.5)).cos();
        for _ in 0..60 {
            let (p, dp) = legendre_eval(g, x);
            let step = p / dp;
            x -= step;
            if step.abs() < 1e-15 {
                break;
            }
        }
        let (_, dp) = legendre_eval(g, x);
        nodes[i] = x;
        weights[i] = 2.0 / ((1.0 - x * x) * dp * dp);
    }
    (nodes, weights)
}

/// P_g(x) and its derivative by the three-term recurrence; the nodes are
/// interior, so the (x^2 - 1) factor below never vanishes.
fn legendre_eval(g: usize, x: f64) -> (f64, f64) {
    let mut prev = 1.0;
    let mut cur = x;
    for k in 2..=g {
        let kf = k as f64;
        let next = ((2.0 * kf - 1.0) * x * cur - (kf - 1.0) * prev) / kf;
        prev = cur;
        cur = next;
    }
    let dp = g as f64 * (x * cur - prev) / (x * x - 1.0);
    (cur, dp)
}

fn panel_sum<F>(f: &F, a: f64, b: f64, panels: usize, rule: &(Vec<f64>, Vec<f64>)) -> Complex64
where
    F: Fn(f64) -> Complex64,
{
    let (nodes, weights) = rule;
    let h = (b - a) / panels as f64;
    let mut acc = Complex64::new(0.0, 0.0);
    for j in 0..panels {
        let mid = a + (j as f64 + 0.5) * h;
        let half = 0.5 * h;
        for (x, w) in nodes.iter().zip(weights) {
            acc += f(mid + half * x) * (w * half);
        }
    }
    acc
}

/// Integrate a smooth complex integrand over [a, b], doubling the panel
/// count from the given start until two refinement levels agree to the
/// tolerance (relative to the magnitude of the result).
pub(super) fn integrate<F>(f: F, a: f64, b: f64, start_panels: usize, tol: f64) -> Result<Complex64>
where
    F: Fn(f64) -> Complex64,
{
    let rule = legendre_rule(GAUSS_ORDER);
    let mut panels = start_panels.max(1);
    let mut prev = panel_sum(&f, a, b, panels, &rule);
    let mut residual = f64::INFINITY;
    for _ in 0..MAX_DOUBLINGS {
        panels *= 2;
        let next = panel_sum(&f, a, b, panels, &rule);
        residual = (next - prev).norm();
        if residual.is_finite() && residual < tol * (1.0 + next.norm()) {
            return Ok(next);
        }
        prev = next;
    }
    Err(Error::QuadratureNotConverged { residual })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn gauss_nodes_integrate_polynomials_exactly() {
        // Degree 2g-1 is exact for the g-point rule.
        let rule = legendre_rule(GAUSS_ORDER);
        let f = |x: f64| Complex64::new(x.powi(31) + 3.0 * x.powi(8), x.powi(5));
        let got = panel_sum(&f, -1.0, 1.0, 1, &rule);
        let want = Complex64::new(2.0 * 3.0 / 9.0, 0.0);
        assert!((got - want).norm() < 1e-14, "got {got}");
    }

    #[test]
    fn doubling_converges_on_a_smooth_integrand() {
        let f = |x: f64| Complex64::new((-x).exp(), 0.0) * Complex64::new(0.0, x).exp();
        let got = integrate(f, 0.0, 30.0, 2, 1e-13).unwrap();
        // Antiderivative of e^{(i-1)x} evaluated at the endpoints.
        let k = Complex64::new(-1.0, 1.0);
        let want = ((k * 30.0).exp() - 1.0) / k;
        assert!((got - want).norm() < 1e-12, "got {got} want {want}");
    }

    #[test]
    fn hopeless_refinement_reports_non_convergence() {
        // A pseudo-random jitter never settles under refinement.
        let f = |x: f64| Complex64::new((x * 1e8).sin().signum(), 0.0);
        let err = integrate(f, 0.0, 1.0, 1, 1e-13).unwrap_err();
        assert!(matches!(err, Error::QuadratureNotConverged { .. }));
    }
}
