//! Verification reports.
//!
//! Every suite produces a [`SuiteReport`]: one record per checked identity,
//! stating the identity itself, the truncation degree or numeric tolerance
//! it ran at, a residual summary, and a pass flag. The pass flag describes
//! the residual alone (exactly zero for symbolic checks, below tolerance
//! for numeric ones); negative controls are expected to fail, and the
//! suite-level verdict accounts for that.
//!
//! Reports serialize to JSON with a fixed field order and fixed float
//! formatting, so identical runs produce byte-identical files.

use serde::Serialize;

/// Format a float with 17 significant digits, enough to round-trip f64.
pub fn float_repr(x: f64) -> String {
    format!("{x:.16e}")
}

/// One checked identity.
#[derive(Debug, Clone, Serialize)]
pub struct IdentityRecord {
    /// Stable machine id, unique within its suite.
    pub id: String,
    /// The identity in formula form; this is the anchor for the record.
    pub identity: String,
    /// Truncation degree, for symbolic checks.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub degree: Option<i64>,
    /// Tolerance, for numeric checks.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub tolerance: Option<String>,
    /// "0" for an exact zero, a magnitude for numeric residuals, or a short
    /// description of how a nonzero symbolic residual looks.
    pub residual: String,
    /// True iff the residual vanished (symbolic) or stayed below tolerance
    /// (numeric), regardless of whether that was the desired outcome.
    pub pass: bool,
    /// Deliberately broken variant; the suite passes only if this fails.
    pub negative_control: bool,
}

impl IdentityRecord {
    /// Whether the record's outcome is the desired one.
    pub fn ok(&self) -> bool {
        self.pass != self.negative_control
    }
}

/// A printed formula whose stated form disagrees with what the engine
/// derives, together with what happens when the printed form is used.
#[derive(Debug, Clone, Serialize)]
pub struct Discrepancy {
    pub topic: String,
    pub adopted: String,
    pub alternative: String,
    /// Outcome of running the alternative through the same checks.
    pub alternative_outcome: String,
}

/// The global convention choices the engine settled on, with the
/// printed-formula discrepancies flagged alongside.
#[derive(Debug, Clone, Serialize)]
pub struct Conventions {
    /// Direction of the cyclic Weyl relation.
    pub relation_direction: String,
    /// Scalar prefactors in the Cartan generators.
    pub cartan_prefactor: String,
    /// Cartan twist weight selected by the intertwining scan.
    pub selected_twist: i64,
    /// Coproduct selected by the intertwining scan.
    pub selected_coproduct: String,
    /// The Casimir element solved into Chevalley generators.
    pub casimir_chevalley_form: String,
    pub discrepancies: Vec<Discrepancy>,
}

/// All records of one verification suite.
#[derive(Debug, Clone, Serialize)]
pub struct SuiteReport {
    pub suite: String,
    pub records: Vec<IdentityRecord>,
    /// True iff every ordinary record passed and every control failed.
    pub passed: bool,
}

impl SuiteReport {
    pub fn new(suite: impl Into<String>, records: Vec<IdentityRecord>) -> Self {
        let passed = records.iter().all(|r| r.ok());
        SuiteReport {
            suite: suite.into(),
            records,
            passed,
        }
    }
}

/// The full artifact a verification run writes: the suites that ran, the
/// conventions section, and the overall verdict.
#[derive(Debug, Clone, Serialize)]
pub struct Report {
    pub suites: Vec<SuiteReport>,
    pub conventions: Conventions,
    pub passed: bool,
}

impl Report {
    pub fn new(suites: Vec<SuiteReport>, conventions: Conventions) -> Self {
        let passed = suites.iter().all(|s| s.passed);
        Report {
            suites,
            conventions,
            passed,
        }
    }

    pub fn to_json(&self) -> String {
        let mut s = serde_json::to_string_pretty(self).expect("report serialization");
        s.push('\n');
        s
    }

    pub fn to_text(&self) -> String {
        let mut out = String::new();
        for suite in &self.suites {
            out.push_str(&format!(
                "suite {} ... {}\n",
                suite.suite,
                verdict(suite.passed)
            ));
            for r in &suite.records {
                let scale = match (&r.degree, &r.tolerance) {
                    (Some(d), _) => format!("degree {d}"),
                    (None, Some(t)) => format!("tol {t}"),
                    (None, None) => "exact".to_string(),
                };
                let role = if r.negative_control { " [control]" } else { "" };
                out.push_str(&format!(
                    "  {} {}{}: {} ({}; residual {})\n",
                    verdict(r.ok()),
                    r.id,
                    role,
                    r.identity,
                    scale,
                    r.residual
                ));
            }
        }
        out.push_str(&conventions_text(&self.conventions));
        out.push_str(&format!("overall: {}\n", verdict(self.passed)));
        out
    }
}

pub fn conventions_text(c: &Conventions) -> String {
    let mut out = String::new();
    out.push_str("conventions\n");
    out.push_str(&format!("  relation direction: {}\n", c.relation_direction));
    out.push_str(&format!("  cartan prefactor:   {}\n", c.cartan_prefactor));
    out.push_str(&format!("  selected twist:     k = {}\n", c.selected_twist));
    out.push_str(&format!("  selected coproduct: {}\n", c.selected_coproduct));
    out.push_str(&format!("  casimir:            {}\n", c.casimir_chevalley_form));
    for d in &c.discrepancies {
        out.push_str(&format!(
            "  flagged: {}\n    adopted:     {}\n    alternative: {}\n    outcome:     {}\n",
            d.topic, d.adopted, d.alternative, d.alternative_outcome
        ));
    }
    out
}

fn verdict(ok: bool) -> &'static str {
    if ok {
        "pass"
    } else {
        "FAIL"
    }
}
