//! The truncated q-exponent s_q in its three equivalent forms, plus machine
//! checks of the Schützenberger addition identity and the pentagon identity
//! on two-generator Weyl lattices.
//!
//! All three forms are reduced to one exact coefficient sequence c_0..c_N
//! and assembled as sum of c_k arg^k, which is well defined for any argument
//! because only powers of a single element appear. The product form is
//! encoded through its shift equation s_q(w) = (1 + qw) s_q(q^2 w), the only
//! exact finite encoding of the infinite product.

use crate::scalar::{gr_ratio, QScalar};
use crate::weyl::{graded_degree, Lattice, WeylElement};
use crate::{Error, Result};

/// Which printed form of s_q to expand.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum SqForm {
    Product,
    Sum,
    ExpLog,
}

/// A series truncated at a weighted degree bound.
#[derive(Clone, PartialEq, Eq)]
pub struct TruncSeries {
    body: WeylElement,
    bound: i64,
    grading: Vec<i64>,
}

impl TruncSeries {
    /// Wrap an element, dropping terms above the bound.
    pub fn new(body: WeylElement, bound: i64, grading: &[i64]) -> Self {
        let body = body.truncate(bound, grading);
        TruncSeries {
            body,
            bound,
            grading: grading.to_vec(),
        }
    }

    pub fn one(lattice: &Lattice, bound: i64, grading: &[i64]) -> Self {
        Self::new(WeylElement::one(lattice), bound, grading)
    }

    pub fn body(&self) -> &WeylElement {
        &self.body
    }

    pub fn bound(&self) -> i64 {
        self.bound
    }

    pub fn grading(&self) -> &[i64] {
        &self.grading
    }

    pub fn is_zero(&self) -> bool {
        self.body.is_zero()
    }

    /// Lowest weighted degree carrying a nonzero coefficient.
    pub fn min_nonzero_degree(&self) -> Option<i64> {
        self.body.degree_range(&self.grading).map(|(lo, _)| lo)
    }

    /// Re-truncate to a smaller bound.
    pub fn truncate_to(&self, bound: i64) -> Self {
        assert!(bound <= self.bound, "can only tighten a truncation");
        Self::new(self.body.clone(), bound, &self.grading)
    }

    fn assert_compatible(&self, other: &Self) {
        assert_eq!(self.bound, other.bound, "mismatched truncation bounds");
        assert_eq!(self.grading, other.grading, "mismatched gradings");
    }
}

impl std::ops::Mul for &TruncSeries {
    type Output = TruncSeries;
    fn mul(self, rhs: &TruncSeries) -> TruncSeries {
        self.assert_compatible(rhs);
        TruncSeries::new(&self.body * &rhs.body, self.bound, &self.grading)
    }
}

impl std::ops::Sub for &TruncSeries {
    type Output = TruncSeries;
    fn sub(self, rhs: &TruncSeries) -> TruncSeries {
        self.assert_compatible(rhs);
        TruncSeries {
            body: &self.body - &rhs.body,
            bound: self.bound,
            grading: self.grading.clone(),
        }
    }
}

impl std::fmt::Display for TruncSeries {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "{} + O(deg {})", self.body, self.bound + 1)
    }
}

impl std::fmt::Debug for TruncSeries {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        std::fmt::Display::fmt(self, f)
    }
}

fn q_gap(k: i64) -> QScalar {
    &QScalar::q_pow(k) - &QScalar::q_pow(-k)
}

/// c_k from the shift equation: c_k = c_{k-1} q^{2k-1}/(1 - q^{2k}).
fn product_coeffs(n: usize) -> Vec<QScalar> {
    let mut c = vec![QScalar::one()];
    for k in 1..=n as i64 {
        let step = &QScalar::q_pow(2 * k - 1) / &(&QScalar::one() - &QScalar::q_pow(2 * k));
        c.push(&c[c.len() - 1] * &step);
    }
    c
}

/// c_k = (-1)^k q^{k(k-1)/2} / prod_{j=1..k} (q^j - q^-j), read with the
/// summation index in the exponent.
fn sum_coeffs(n: usize) -> Vec<QScalar> {
    let mut c = vec![QScalar::one()];
    let mut den = QScalar::one();
    for k in 1..=n as i64 {
        den = &den * &q_gap(k);
        let sign = if k % 2 == 0 { 1 } else { -1 };
        let num = &QScalar::gauss(gr_ratio(sign, 1)) * &QScalar::q_pow(k * (k - 1) / 2);
        c.push(&num / &den);
    }
    c
}

/// exp of sum_{j>=1} (-1)^j w^j / (j (q^j - q^-j)), through the power-series
/// exponential recurrence n E_n = sum_j (j a_j) E_{n-j}.
fn explog_coeffs(n: usize) -> Vec<QScalar> {
    let mut ja: Vec<QScalar> = vec![QScalar::zero()];
    for j in 1..=n as i64 {
        let sign = if j % 2 == 0 { 1 } else { -1 };
        ja.push(&QScalar::gauss(gr_ratio(sign, 1)) / &q_gap(j));
    }
    let mut e = vec![QScalar::one()];
    for m in 1..=n {
        let mut s = QScalar::zero();
        for j in 1..=m {
            s = &s + &(&ja[j] * &e[m - j]);
        }
        e.push(&s * &QScalar::gauss(gr_ratio(1, m as i64)));
    }
    e
}

fn coefficients(n: usize, form: SqForm) -> Vec<QScalar> {
    match form {
        SqForm::Product => product_coeffs(n),
        SqForm::Sum => sum_coeffs(n),
        SqForm::ExpLog => explog_coeffs(n),
    }
}

/// Truncated q-exponent of an argument whose monomials all have weighted
/// degree at least 1, so that powers terminate at the bound.
pub fn sq(arg: &WeylElement, bound: i64, grading: &[i64], form: SqForm) -> Result<TruncSeries> {
    assert!(bound >= 0, "truncation bound must be nonnegative");
    assert_eq!(grading.len(), arg.lattice().rank(), "grading length");
    for (m, _) in arg.terms() {
        let d = graded_degree(m, grading);
        if d < 1 {
            return Err(Error::NonNilpotentArgument {
                monomial: WeylElement::monomial(arg.lattice(), m).to_string(),
                degree: d,
            });
        }
    }
    let c = coefficients(bound as usize, form);
    let mut acc = WeylElement::one(arg.lattice());
    let mut power = WeylElement::one(arg.lattice());
    for k in 1..=bound as usize {
        power = (&power * arg).truncate(bound, grading);
        if power.is_zero() {
            break;
        }
        acc = &acc + &power.scale(&c[k]);
    }
    Ok(TruncSeries::new(acc, bound, grading))
}

/// One checked series identity: the residual and where it first fails.
pub struct SeriesCheck {
    pub name: &'static str,
    pub degree: i64,
    pub residual: WeylElement,
    pub first_failure: Option<i64>,
    pub negative_control: bool,
}

fn check(name: &'static str, lhs: &TruncSeries, rhs: &TruncSeries, control: bool) -> SeriesCheck {
    let r = lhs - rhs;
    SeriesCheck {
        name,
        degree: lhs.bound(),
        first_failure: r.min_nonzero_degree(),
        residual: r.body().clone(),
        negative_control: control,
    }
}

/// s_q(u) s_q(v) = s_q(u + v) on the lattice with u v = q^2 v u, truncated
/// at the given bound, plus the q^4-commutation negative control.
pub fn check_schutzenberger(bound: i64) -> Result<Vec<SeriesCheck>> {
    assert!(bound >= 1);
    let grading = [1, 1];
    let mut out = Vec::new();
    for (name, s, control) in [
        ("s_q(u) s_q(v) = s_q(u + v) for u v = q^2 v u", 1, false),
        (
            "s_q(u) s_q(v) = s_q(u + v) for u v = q^4 v u (control)",
            2,
            true,
        ),
    ] {
        let lat = Lattice::weyl_pair(s);
        let u = WeylElement::generator(&lat, 0);
        let v = WeylElement::generator(&lat, 1);
        let lhs = &sq(&u, bound, &grading, SqForm::Product)?
            * &sq(&v, bound, &grading, SqForm::Product)?;
        let rhs = sq(&(&u + &v), bound, &grading, SqForm::Product)?;
        out.push(check(name, &lhs, &rhs, control));
    }
    Ok(out)
}

/// Pairwise agreement of the three coefficient constructions, applied to a
/// single commuting generator so only the scalars are under test.
pub fn check_sq_forms(bound: i64) -> Result<Vec<SeriesCheck>> {
    assert!(bound >= 1);
    let lat = Lattice::custom(vec![vec![0]]);
    let u = WeylElement::generator(&lat, 0);
    let grading = [1];
    let p = sq(&u, bound, &grading, SqForm::Product)?;
    let s = sq(&u, bound, &grading, SqForm::Sum)?;
    let e = sq(&u, bound, &grading, SqForm::ExpLog)?;
    Ok(vec![
        check("shift-recursion and closed-sum coefficients agree", &p, &s, false),
        check("shift-recursion and exp-log coefficients agree", &p, &e, false),
        check("closed-sum and exp-log coefficients agree", &s, &e, false),
    ])
}

/// The two printed pentagon equalities for u v = q^2 v u, truncated at the
/// given bound, plus the control that drops the q^-1 from the middle factor.
pub fn check_pentagon(bound: i64) -> Result<Vec<SeriesCheck>> {
    assert!(bound >= 2);
    let grading = [1, 1];
    let lat = Lattice::weyl_pair(1);
    let u = WeylElement::generator(&lat, 0);
    let v = WeylElement::generator(&lat, 1);
    let form = SqForm::Product;
    let lhs = &sq(&v, bound, &grading, form)? * &sq(&u, bound, &grading, form)?;

    let middle_sum = &(&u + &v) + &(&u * &v).scale(&QScalar::q_pow(-1));
    let joined = sq(&middle_sum, bound, &grading, form)?;

    let triple = |mid: &WeylElement| -> Result<TruncSeries> {
        let m = sq(mid, bound, &grading, form)?;
        Ok(&(&sq(&u, bound, &grading, form)? * &m) * &sq(&v, bound, &grading, form)?)
    };
    let split = triple(&(&u * &v).scale(&QScalar::q_pow(-1)))?;
    let split_control = triple(&(&u * &v))?;

    Ok(vec![
        check("s_q(v) s_q(u) = s_q(u + v + q^-1 u v)", &lhs, &joined, false),
        check(
            "s_q(v) s_q(u) = s_q(u) s_q(q^-1 u v) s_q(v)",
            &lhs,
            &split,
            false,
        ),
        check(
            "s_q(v) s_q(u) = s_q(u) s_q(u v) s_q(v) (control)",
            &lhs,
            &split_control,
            true,
        ),
    ])
}

#[cfg(test)]
mod tests {
    use super::*;

    fn pair() -> (Lattice, WeylElement, WeylElement) {
        let lat = Lattice::weyl_pair(1);
        let u = WeylElement::generator(&lat, 0);
        let v = WeylElement::generator(&lat, 1);
        (lat, u, v)
    }

    #[test]
    fn first_coefficients_match_the_closed_forms() {
        let gamma = &-QScalar::one() / &q_gap(1);
        let c2 = &QScalar::q_pow(4)
            / &(&(&QScalar::one() - &QScalar::q_pow(2)) * &(&QScalar::one() - &QScalar::q_pow(4)));
        for form in [SqForm::Product, SqForm::Sum, SqForm::ExpLog] {
            let c = coefficients(2, form);
            assert!(c[0].is_one(), "{form:?}");
            assert_eq!(c[1], gamma, "{form:?}");
            assert_eq!(c[2], c2, "{form:?}");
        }
    }

    #[test]
    fn the_three_forms_agree_to_degree_eight() {
        let (_, u, _) = pair();
        let grading = [1, 1];
        let p = sq(&u, 8, &grading, SqForm::Product).unwrap();
        let s = sq(&u, 8, &grading, SqForm::Sum).unwrap();
        let e = sq(&u, 8, &grading, SqForm::ExpLog).unwrap();
        assert!((&p - &s).is_zero());
        assert!((&p - &e).is_zero());
    }

    #[test]
    fn sq_of_zero_is_one() {
        let (lat, _, _) = pair();
        let z = WeylElement::zero(&lat);
        for form in [SqForm::Product, SqForm::Sum, SqForm::ExpLog] {
            let s = sq(&z, 5, &[1, 1], form).unwrap();
            assert_eq!(s.body(), &WeylElement::one(&lat));
        }
    }

    #[test]
    fn degree_zero_terms_are_rejected() {
        let (lat, u, _) = pair();
        let bad = &u + &WeylElement::one(&lat);
        let err = sq(&bad, 4, &[1, 1], SqForm::Product).unwrap_err();
        assert!(err.to_string().contains("graded degree 0"));
        let inv = WeylElement::monomial(&lat, &[-1, 0]);
        assert!(sq(&inv, 4, &[1, 1], SqForm::Product).is_err());
    }

    #[test]
    fn schutzenberger_holds_and_its_control_fails_at_degree_two() {
        let checks = check_schutzenberger(6).unwrap();
        assert!(!checks[0].negative_control && checks[0].residual.is_zero());
        assert!(checks[1].negative_control);
        assert_eq!(checks[1].first_failure, Some(2));
    }

    #[test]
    fn pentagon_holds_and_its_control_fails_at_degree_two() {
        let checks = check_pentagon(6).unwrap();
        assert!(checks[0].residual.is_zero(), "joined form");
        assert!(checks[1].residual.is_zero(), "split form");
        assert_eq!(checks[2].first_failure, Some(2));
    }

    #[test]
    fn truncation_is_consistent_across_bounds() {
        let (_, u, v) = pair();
        let grading = [1, 1];
        let wide = sq(&(&u + &v), 6, &grading, SqForm::Sum).unwrap();
        let narrow = sq(&(&u + &v), 4, &grading, SqForm::Sum).unwrap();
        assert_eq!(wide.truncate_to(4), narrow);

        let pw = &sq(&u, 6, &grading, SqForm::Product).unwrap()
            * &sq(&v, 6, &grading, SqForm::Product).unwrap();
        let pn = &sq(&u, 4, &grading, SqForm::Product).unwrap()
            * &sq(&v, 4, &grading, SqForm::Product).unwrap();
        assert_eq!(pw.truncate_to(4), pn);
    }

    #[test]
    fn trunc_series_reports_lowest_failure_degree() {
        let (lat, u, _) = pair();
        let s = TruncSeries::new(&u + &u.pow(3), 5, &[1, 1]);
        assert_eq!(s.min_nonzero_degree(), Some(1));
        assert!(!s.is_zero());
        assert!(TruncSeries::new(WeylElement::zero(&lat), 5, &[1, 1])
            .min_nonzero_degree()
            .is_none());
    }
}
