//! Brute-force normal ordering by adjacent transpositions. Quadratic in the
//! word length and kept only as an independent cross-check for the one-pass
//! bilinear phase used by the fast product.

use super::{Monomial, WeylElement};
use crate::scalar::QScalar;
use crate::{Error, Result};

/// Letters of a monomial as (generator index, +1 or -1) factors.
fn letters(m: &Monomial) -> Vec<(usize, i64)> {
    let mut word = Vec::new();
    for (i, &e) in m.iter().enumerate() {
        let s = e.signum();
        for _ in 0..e.abs() {
            word.push((i, s));
        }
    }
    word
}

/// Sort the word by generator index with adjacent swaps, accumulating the
/// exchange phase g_i^s g_j^r = q^{2 s r S[i][j]} g_j^r g_i^s per swap.
/// Returns the q exponent.
fn sort_phase(word: &mut [(usize, i64)], skew: impl Fn(usize, usize) -> i64) -> i64 {
    let mut phase = 0;
    let n = word.len();
    if n == 0 {
        return 0;
    }
    loop {
        let mut swapped = false;
        for t in 0..n - 1 {
            let (i, s) = word[t];
            let (j, r) = word[t + 1];
            if i > j {
                phase += 2 * s * r * skew(i, j);
                word.swap(t, t + 1);
                swapped = true;
            }
        }
        if !swapped {
            return phase;
        }
    }
}

/// Same contract as `WeylElement::normal_product`, computed the slow way.
pub fn transposition_normal_product(a: &WeylElement, b: &WeylElement) -> Result<WeylElement> {
    if a.lattice() != b.lattice() {
        return Err(Error::LatticeMismatch(
            a.lattice().to_string(),
            b.lattice().to_string(),
        ));
    }
    let lat = a.lattice();
    let mut out = WeylElement::zero(lat);
    for (x, cx) in a.terms() {
        for (y, cy) in b.terms() {
            let mut word = letters(x);
            word.extend(letters(y));
            let phase = sort_phase(&mut word, |i, j| lat.skew(i, j));
            let e: Monomial = x.iter().zip(y).map(|(p, q)| p + q).collect();
            let t = WeylElement::term(lat, &(cx * cy) * &QScalar::q_pow(phase), &e);
            out = &out + &t;
        }
    }
    Ok(out)
}
