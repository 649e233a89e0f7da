//! The two structural checks on the twisted series: the intertwining scan
//! that pins down the twist power and the coproduct convention, and the
//! Yang-Baxter identity on the tensor cube.
//!
//! Truncation discipline: a truncated series computation is exact on a
//! monomial grade only when every order of the full series that could
//! land there is below the cutoff. Residuals are therefore projected onto
//! those complete grades before being compared with zero; the projection
//! is what turns "small truncation noise" into an exact statement.

use crate::qseries::{sq, SqForm};
use crate::scalar::QScalar;
use crate::weyl::{cartan_twist, slot_charges, twist_pair, Lattice, WeylElement};
use crate::{Error, Result};

use super::{
    build_r, charge_grading, coproduct, joint_argument, pair_lattice, CoproductConvention,
    ADOPTED_TWIST,
};

/// Bigrade of a two-slot monomial: slot-0 charge and negated slot-1
/// charge, so the order-m part of the R series sits at (m, m).
fn bigrade(lat: &Lattice, m: &[i64]) -> (i64, i64) {
    let c = slot_charges(lat, m);
    (c[0], -c[1])
}

/// Bigrade displacements a generator image can contribute.
const D_CARTAN: &[(i64, i64)] = &[(0, 0)];
const D_E: &[(i64, i64)] = &[(1, 0), (0, -1)];
const D_F: &[(i64, i64)] = &[(-1, 0), (0, 1)];

/// Complete part of S Δx - twist(σΔx, -k) S: a grade is kept unless some
/// series order m > n could reach it through one of the displacements.
fn intertwining_residual(
    s: &WeylElement,
    image: &WeylElement,
    k: i64,
    n: i64,
    dset: &[(i64, i64)],
    lat: &Lattice,
) -> Result<WeylElement> {
    let sigma = image.swap_slots();
    let left = s.normal_product(image)?;
    let right = cartan_twist(&sigma, -k).normal_product(s)?;
    let raw = &left - &right;
    Ok(raw.project(|m| {
        let (g0, g1) = bigrade(lat, m);
        !dset
            .iter()
            .any(|&(d0, d1)| g0 - d0 == g1 - d1 && g0 - d0 > n)
    }))
}

/// One generator of one candidate pair: the complete residual and whether
/// it vanished.
pub struct InterRecord {
    pub k: i64,
    pub convention: CoproductConvention,
    pub generator: &'static str,
    pub residual: WeylElement,
    pub pass: bool,
}

pub struct IntertwiningReport {
    pub degree: i64,
    pub records: Vec<InterRecord>,
    pub selected_twist: i64,
    pub selected_convention: CoproductConvention,
    /// Residual of the untwisted (k = 0) run on e for the selected
    /// convention; its failure is what makes the twist necessary.
    pub control_residual: WeylElement,
}

impl IntertwiningReport {
    pub fn control_nonzero(&self) -> bool {
        !self.control_residual.is_zero()
    }
}

/// Scan twist powers {-1, +1} against all catalogued coproducts, checking
/// R Δx = (σ∘Δ)(x) R on K, K', e, f at truncation order n. Exactly one
/// pair must survive; none or several is a hard error, since everything
/// downstream depends on the selection being forced.
pub fn check_intertwining(n: i64) -> Result<IntertwiningReport> {
    assert!(n >= 2, "the scan needs at least degree 2 to separate candidates");
    let lat = pair_lattice();
    let s = build_r(n, 0).series().body().clone();
    let mut records = Vec::new();
    let mut passing = Vec::new();
    for k in [-1i64, 1] {
        for conv in CoproductConvention::all() {
            let table = coproduct(conv)?;
            let images: [(&'static str, &WeylElement, &[(i64, i64)]); 4] = [
                ("K", &table.k, D_CARTAN),
                ("K'", &table.k_prime, D_CARTAN),
                ("e", &table.e, D_E),
                ("f", &table.f, D_F),
            ];
            let mut all = true;
            for (name, image, dset) in images {
                let residual = intertwining_residual(&s, image, k, n, dset, &lat)?;
                let pass = residual.is_zero();
                all &= pass;
                records.push(InterRecord {
                    k,
                    convention: conv,
                    generator: name,
                    residual,
                    pass,
                });
            }
            if all {
                passing.push((k, conv));
            }
        }
    }
    match passing[..] {
        [] => Err(Error::NoPassingConvention),
        [(k, conv)] => {
            let table = coproduct(conv)?;
            let control_residual = intertwining_residual(&s, &table.e, 0, n, D_E, &lat)?;
            Ok(IntertwiningReport {
                degree: n,
                records,
                selected_twist: k,
                selected_convention: conv,
                control_residual,
            })
        }
        _ => Err(Error::AmbiguousConvention(passing.len())),
    }
}

pub struct YangBaxterReport {
    pub degree: i64,
    pub twist: i64,
    /// Complete part of R12 R13 R23 - R23 R13 R12 (series brackets; the
    /// commuting twist prefactors cancel).
    pub residual: WeylElement,
    /// Same with the two left factors R13, R23 traded, which must not
    /// vanish.
    pub control_residual: WeylElement,
}

impl YangBaxterReport {
    pub fn pass(&self) -> bool {
        self.residual.is_zero() && !self.control_residual.is_zero()
    }
}

/// Yang-Baxter on the tensor cube at the adopted twist. Pair twists are
/// pulled to the front through the twist_pair automorphism; the series
/// brackets are multiplied with eager pruning onto the grades where the
/// truncated computation is exact (both pruning coordinates only grow
/// along the product, so pruned terms can never re-enter a kept grade).
pub fn check_yang_baxter(n: i64) -> Result<YangBaxterReport> {
    assert!(n >= 2, "Yang-Baxter needs at least degree 2");
    let k = ADOPTED_TWIST;
    let lat = Lattice::cyclic().tensor(3);
    // The series coefficients share the denominator prod_{j<=n}(1 - q^{2j}).
    // Clearing it from every factor keeps the large products polynomial;
    // both brackets are trilinear, so the residuals just pick up the same
    // nonzero overall scale.
    let mut clear = QScalar::one();
    for j in 1..=n {
        clear = &clear * &(&QScalar::one() - &QScalar::q_pow(2 * j));
    }
    let series = |i: usize, j: usize| -> Result<WeylElement> {
        let t = sq(
            &joint_argument(&lat, i, j),
            n,
            &charge_grading(&lat, i),
            SqForm::Product,
        )?;
        Ok(t.body().scale(&clear))
    };
    let s12 = series(0, 1)?;
    let s13 = series(0, 2)?;
    let s23 = series(1, 2)?;
    let keep = |m: &[i64]| {
        let c = slot_charges(&lat, m);
        c[0] <= n && c[0] + c[1] <= n
    };
    // Both pruning coordinates only grow along a product and the twists
    // insert charge-neutral Cartan monomials, so each factor can be pruned
    // before multiplying without losing any kept grade.
    let prune = |x: WeylElement| x.project(|m| keep(m));
    let mul = |a: &WeylElement, b: &WeylElement| -> Result<WeylElement> {
        Ok(a.normal_product(b)?.project(|m| keep(m)))
    };

    let lhs = mul(
        &mul(
            &prune(twist_pair(&twist_pair(&s12, -k, 0, 2), -k, 1, 2)),
            &prune(twist_pair(&s13, -k, 1, 2)),
        )?,
        &prune(s23.clone()),
    )?;
    let rhs = mul(
        &mul(
            &prune(twist_pair(&twist_pair(&s23, -k, 0, 2), -k, 0, 1)),
            &prune(twist_pair(&s13, -k, 0, 1)),
        )?,
        &prune(s12.clone()),
    )?;
    let scrambled = mul(
        &mul(
            &prune(twist_pair(&twist_pair(&s12, -k, 1, 2), -k, 0, 2)),
            &prune(twist_pair(&s23, -k, 0, 2)),
        )?,
        &prune(s13.clone()),
    )?;
    Ok(YangBaxterReport {
        degree: n,
        twist: k,
        residual: &lhs - &rhs,
        control_residual: &scrambled - &rhs,
    })
}
