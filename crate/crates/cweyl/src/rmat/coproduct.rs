//! Coproduct candidates on the tensor square. The group-likes always map
//! as K -> K (x) K and K' -> K' (x) K'; the free choice is which Cartan
//! element rides along with e (and on which side), and the pairing with f
//! is then forced by the commutator relation. All four pairings below are
//! genuine homomorphisms; the intertwining scan is what singles one out.

use std::fmt;

use crate::chevalley::{self, GeneratorSet};
use crate::weyl::WeylElement;
use crate::{Error, Result};

use super::pair_lattice;

/// Which group-like accompanies e, and on which tensor side.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum CoproductConvention {
    /// Δe = e⊗1 + K⊗e, Δf = f⊗K' + 1⊗f
    KLeftOnE,
    /// Δe = e⊗K' + 1⊗e, Δf = f⊗1 + K⊗f
    KPrimeRightOnE,
    /// Δe = e⊗K + 1⊗e, Δf = f⊗1 + K'⊗f
    KRightOnE,
    /// Δe = e⊗1 + K'⊗e, Δf = f⊗K + 1⊗f
    KPrimeLeftOnE,
}

impl CoproductConvention {
    pub fn all() -> [CoproductConvention; 4] {
        [
            CoproductConvention::KLeftOnE,
            CoproductConvention::KPrimeRightOnE,
            CoproductConvention::KRightOnE,
            CoproductConvention::KPrimeLeftOnE,
        ]
    }

    pub fn token(&self) -> &'static str {
        match self {
            CoproductConvention::KLeftOnE => "k-left",
            CoproductConvention::KPrimeRightOnE => "kp-right",
            CoproductConvention::KRightOnE => "k-right",
            CoproductConvention::KPrimeLeftOnE => "kp-left",
        }
    }

    /// The explicit images, for reports.
    pub fn describe(&self) -> &'static str {
        match self {
            CoproductConvention::KLeftOnE => "Δe = e⊗1 + K⊗e, Δf = f⊗K' + 1⊗f",
            CoproductConvention::KPrimeRightOnE => "Δe = e⊗K' + 1⊗e, Δf = f⊗1 + K⊗f",
            CoproductConvention::KRightOnE => "Δe = e⊗K + 1⊗e, Δf = f⊗1 + K'⊗f",
            CoproductConvention::KPrimeLeftOnE => "Δe = e⊗1 + K'⊗e, Δf = f⊗K + 1⊗f",
        }
    }
}

impl fmt::Display for CoproductConvention {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.token())
    }
}

/// Images of the six generators in the tensor square, tagged with the
/// convention that produced them.
pub struct CoproductTable {
    convention: String,
    pub e: WeylElement,
    pub f: WeylElement,
    pub k: WeylElement,
    pub k_prime: WeylElement,
    pub k_inv: WeylElement,
    pub k_prime_inv: WeylElement,
}

impl CoproductTable {
    pub fn convention(&self) -> &str {
        &self.convention
    }

    /// Check all seven defining relations on the images; the first broken
    /// one is reported by name.
    pub fn verify(&self) -> Result<()> {
        let images = GeneratorSet {
            e: self.e.clone(),
            f: self.f.clone(),
            k: self.k.clone(),
            k_prime: self.k_prime.clone(),
            k_inv: self.k_inv.clone(),
            k_prime_inv: self.k_prime_inv.clone(),
        };
        for r in chevalley::verify_uq(&images) {
            if !r.residual.is_zero() {
                return Err(Error::HomomorphismFailed {
                    convention: self.convention.clone(),
                    relation: r.name.to_string(),
                });
            }
        }
        Ok(())
    }
}

/// Assemble a table from explicit e and f images; the group-likes are not
/// negotiable. No verification: callers choose when to pay for it, and
/// deliberately broken pairings are useful as negative controls.
pub fn coproduct_from_parts(label: &str, de: WeylElement, df: WeylElement) -> CoproductTable {
    let g = chevalley::embed();
    let both = |x: &WeylElement| {
        x.tensor_embed(0, 2)
            .normal_product(&x.tensor_embed(1, 2))
            .expect("embeddings share the tensor lattice")
    };
    CoproductTable {
        convention: label.to_string(),
        e: de,
        f: df,
        k: both(&g.k),
        k_prime: both(&g.k_prime),
        k_inv: both(&g.k_inv),
        k_prime_inv: both(&g.k_prime_inv),
    }
}

/// The verified coproduct for one of the catalogued conventions.
pub fn coproduct(convention: CoproductConvention) -> Result<CoproductTable> {
    let g = chevalley::embed();
    let lat = pair_lattice();
    let one = WeylElement::one(&lat);
    let left = |x: &WeylElement| x.tensor_embed(0, 2);
    let right = |x: &WeylElement| x.tensor_embed(1, 2);
    let pair = |a: &WeylElement, b: &WeylElement| {
        a.normal_product(b).expect("embeddings share the tensor lattice")
    };
    let (de, df) = match convention {
        CoproductConvention::KLeftOnE => (
            &pair(&left(&g.e), &one) + &pair(&left(&g.k), &right(&g.e)),
            &pair(&left(&g.f), &right(&g.k_prime)) + &pair(&one, &right(&g.f)),
        ),
        CoproductConvention::KPrimeRightOnE => (
            &pair(&left(&g.e), &right(&g.k_prime)) + &pair(&one, &right(&g.e)),
            &pair(&left(&g.f), &one) + &pair(&left(&g.k), &right(&g.f)),
        ),
        CoproductConvention::KRightOnE => (
            &pair(&left(&g.e), &right(&g.k)) + &pair(&one, &right(&g.e)),
            &pair(&left(&g.f), &one) + &pair(&left(&g.k_prime), &right(&g.f)),
        ),
        CoproductConvention::KPrimeLeftOnE => (
            &pair(&left(&g.e), &one) + &pair(&left(&g.k_prime), &right(&g.e)),
            &pair(&left(&g.f), &right(&g.k)) + &pair(&one, &right(&g.f)),
        ),
    };
    let table = coproduct_from_parts(convention.token(), de, df);
    table.verify()?;
    Ok(table)
}
