//! Normal ordering on lattices of Weyl-type generators with an integer skew form.
//!
//! A `Lattice` fixes the commutation data: generators g1..gn obeying
//! gi gj = q^{2 S[i][j]} gj gi with S integer and antisymmetric. A
//! `WeylElement` is a finite sum of Laurent monomials in the generators with
//! exact scalar coefficients, stored in normal form (factors in index order),
//! so structural equality is algebraic equality.

use std::collections::btree_map::Entry;
use std::collections::BTreeMap;
use std::fmt;

use crate::scalar::QScalar;
use crate::{Error, Result};

pub mod oracle;
mod twist;

pub use twist::{adjoint_charge, cartan_twist, conjugation_weight, slot_charges, twist_pair};

/// Commutation data for a family of Weyl-type generators.
#[derive(Clone, PartialEq, Eq)]
pub struct Lattice {
    skew: Vec<Vec<i64>>,
    slots: usize,
}

impl Lattice {
    /// The four-generator cyclic lattice: each adjacent pair (indices mod 4)
    /// satisfies w_n w_{n+1} = q^{-2} w_{n+1} w_n, opposite pairs commute.
    pub fn cyclic() -> Self {
        let mut skew = vec![vec![0i64; 4]; 4];
        for n in 0..4 {
            let m = (n + 1) % 4;
            skew[n][m] = -1;
            skew[m][n] = 1;
        }
        Lattice { skew, slots: 1 }
    }

    /// Two generators u, v with u v = q^{2s} v u.
    pub fn weyl_pair(s: i64) -> Self {
        Lattice {
            skew: vec![vec![0, s], vec![-s, 0]],
            slots: 1,
        }
    }

    /// Arbitrary integer skew form. Panics unless square and antisymmetric.
    pub fn custom(skew: Vec<Vec<i64>>) -> Self {
        let n = skew.len();
        for row in &skew {
            assert_eq!(row.len(), n, "skew matrix must be square");
        }
        for i in 0..n {
            for j in 0..n {
                assert_eq!(skew[i][j], -skew[j][i], "skew matrix must be antisymmetric");
            }
        }
        Lattice { skew, slots: 1 }
    }

    /// Block-diagonal tensor power; generators in distinct slots commute.
    pub fn tensor(&self, arity: usize) -> Self {
        assert!(arity >= 1, "tensor arity must be positive");
        let w = self.rank();
        let n = w * arity;
        let mut skew = vec![vec![0i64; n]; n];
        for s in 0..arity {
            for i in 0..w {
                for j in 0..w {
                    skew[s * w + i][s * w + j] = self.skew[i][j];
                }
            }
        }
        Lattice {
            skew,
            slots: self.slots * arity,
        }
    }

    /// Total number of generators.
    pub fn rank(&self) -> usize {
        self.skew.len()
    }

    /// Number of tensor slots this lattice was built from.
    pub fn slots(&self) -> usize {
        self.slots
    }

    /// Generators per tensor slot.
    pub fn slot_width(&self) -> usize {
        self.rank() / self.slots
    }

    /// Skew form entry S[i][j].
    pub fn skew(&self, i: usize, j: usize) -> i64 {
        self.skew[i][j]
    }

    /// Index range of the generators living in the given slot.
    pub fn slot_range(&self, slot: usize) -> std::ops::Range<usize> {
        assert!(slot < self.slots, "slot out of range");
        let w = self.slot_width();
        slot * w..(slot + 1) * w
    }
}

impl fmt::Debug for Lattice {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl fmt::Display for Lattice {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.slots == 1 {
            write!(f, "{}-generator lattice", self.rank())
        } else {
            write!(
                f,
                "{}-generator lattice ({} slots of {})",
                self.rank(),
                self.slots,
                self.slot_width()
            )
        }
    }
}

/// Exponent vector of a normal-ordered monomial; negative entries are inverse powers.
pub type Monomial = Vec<i64>;

/// Weighted total degree of an exponent vector.
pub fn graded_degree(exponents: &[i64], grading: &[i64]) -> i64 {
    exponents.iter().zip(grading).map(|(e, g)| e * g).sum()
}

/// An element of the lattice algebra: finite scalar combination of normal-ordered monomials.
#[derive(Clone, PartialEq, Eq)]
pub struct WeylElement {
    lattice: Lattice,
    terms: BTreeMap<Monomial, QScalar>,
}

fn accumulate(terms: &mut BTreeMap<Monomial, QScalar>, key: Monomial, c: QScalar) {
    if c.is_zero() {
        return;
    }
    match terms.entry(key) {
        Entry::Vacant(v) => {
            v.insert(c);
        }
        Entry::Occupied(mut o) => {
            let s = o.get() + &c;
            if s.is_zero() {
                o.remove();
            } else {
                *o.get_mut() = s;
            }
        }
    }
}

impl WeylElement {
    pub fn zero(lattice: &Lattice) -> Self {
        WeylElement {
            lattice: lattice.clone(),
            terms: BTreeMap::new(),
        }
    }

    pub fn one(lattice: &Lattice) -> Self {
        Self::term(lattice, QScalar::one(), &vec![0; lattice.rank()])
    }

    /// Single monomial with coefficient 1.
    pub fn monomial(lattice: &Lattice, exponents: &[i64]) -> Self {
        Self::term(lattice, QScalar::one(), exponents)
    }

    /// Single monomial with the given coefficient.
    pub fn term(lattice: &Lattice, coeff: QScalar, exponents: &[i64]) -> Self {
        assert_eq!(exponents.len(), lattice.rank(), "exponent vector length");
        let mut terms = BTreeMap::new();
        accumulate(&mut terms, exponents.to_vec(), coeff);
        WeylElement {
            lattice: lattice.clone(),
            terms,
        }
    }

    /// The generator with the given index.
    pub fn generator(lattice: &Lattice, index: usize) -> Self {
        let mut e = vec![0; lattice.rank()];
        e[index] = 1;
        Self::monomial(lattice, &e)
    }

    pub fn lattice(&self) -> &Lattice {
        &self.lattice
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    /// Iterate terms in lexicographic monomial order.
    pub fn terms(&self) -> impl Iterator<Item = (&Monomial, &QScalar)> {
        self.terms.iter()
    }

    /// Coefficient of the given monomial (zero if absent).
    pub fn coeff(&self, exponents: &[i64]) -> QScalar {
        self.terms.get(exponents).cloned().unwrap_or_else(QScalar::zero)
    }

    /// Coefficient of the zero monomial. Linear, kills every nonconstant
    /// monomial, and cyclic for products by antisymmetry of the skew form.
    pub fn trace(&self) -> QScalar {
        self.coeff(&vec![0; self.lattice.rank()])
    }

    /// Phase exponent picked up when normal-ordering the concatenation x y:
    /// every factor of x with index i must pass every factor of y with index
    /// j < i, contributing q^{2 S[i][j]} per crossing.
    fn ordering_phase(&self, x: &[i64], y: &[i64]) -> i64 {
        let mut phi = 0;
        for i in 1..x.len() {
            if x[i] == 0 {
                continue;
            }
            for j in 0..i {
                if y[j] != 0 {
                    phi += x[i] * self.lattice.skew[i][j] * y[j];
                }
            }
        }
        phi
    }

    fn mul_impl(&self, other: &Self) -> Self {
        let mut terms = BTreeMap::new();
        for (x, cx) in &self.terms {
            for (y, cy) in &other.terms {
                let phi = self.ordering_phase(x, y);
                let c = &(cx * cy) * &QScalar::q_pow(2 * phi);
                let e: Monomial = x.iter().zip(y).map(|(a, b)| a + b).collect();
                accumulate(&mut terms, e, c);
            }
        }
        WeylElement {
            lattice: self.lattice.clone(),
            terms,
        }
    }

    /// Normal-ordered product; errors when the lattices differ.
    pub fn normal_product(&self, other: &Self) -> Result<Self> {
        if self.lattice != other.lattice {
            return Err(Error::LatticeMismatch(
                self.lattice.to_string(),
                other.lattice.to_string(),
            ));
        }
        Ok(self.mul_impl(other))
    }

    pub fn scale(&self, c: &QScalar) -> Self {
        if c.is_zero() {
            return Self::zero(&self.lattice);
        }
        WeylElement {
            lattice: self.lattice.clone(),
            terms: self.terms.iter().map(|(m, a)| (m.clone(), a * c)).collect(),
        }
    }

    pub fn pow(&self, k: u32) -> Self {
        let mut acc = Self::one(&self.lattice);
        for _ in 0..k {
            acc = acc.mul_impl(self);
        }
        acc
    }

    /// Place this element into one slot of an arity-fold tensor power,
    /// identity elsewhere.
    pub fn tensor_embed(&self, slot: usize, arity: usize) -> Self {
        assert!(slot < arity, "slot must be below arity");
        let big = self.lattice.tensor(arity);
        let w = self.lattice.rank();
        let terms = self
            .terms
            .iter()
            .map(|(m, c)| {
                let mut e = vec![0; big.rank()];
                e[slot * w..(slot + 1) * w].copy_from_slice(m);
                (e, c.clone())
            })
            .collect();
        WeylElement { lattice: big, terms }
    }

    /// Drop monomials of weighted degree above the bound.
    pub fn truncate(&self, bound: i64, grading: &[i64]) -> Self {
        assert_eq!(grading.len(), self.lattice.rank(), "grading length");
        self.project(|m| graded_degree(m, grading) <= bound)
    }

    /// Keep only monomials satisfying the predicate.
    pub fn project<F: Fn(&[i64]) -> bool>(&self, keep: F) -> Self {
        WeylElement {
            lattice: self.lattice.clone(),
            terms: self
                .terms
                .iter()
                .filter(|(m, _)| keep(m))
                .map(|(m, c)| (m.clone(), c.clone()))
                .collect(),
        }
    }

    /// Smallest and largest weighted degree over the terms; None when zero.
    pub fn degree_range(&self, grading: &[i64]) -> Option<(i64, i64)> {
        let mut range: Option<(i64, i64)> = None;
        for m in self.terms.keys() {
            let d = graded_degree(m, grading);
            range = Some(match range {
                None => (d, d),
                Some((lo, hi)) => (lo.min(d), hi.max(d)),
            });
        }
        range
    }

    /// Exchange the two halves of a two-slot tensor element. An algebra
    /// automorphism: slots commute, so no reordering phase appears.
    pub fn swap_slots(&self) -> Self {
        assert_eq!(self.lattice.slots(), 2, "swap_slots needs a two-slot lattice");
        let w = self.lattice.slot_width();
        let terms = self
            .terms
            .iter()
            .map(|(m, c)| {
                let mut e = Vec::with_capacity(2 * w);
                e.extend_from_slice(&m[w..]);
                e.extend_from_slice(&m[..w]);
                (e, c.clone())
            })
            .collect();
        WeylElement {
            lattice: self.lattice.clone(),
            terms,
        }
    }

    fn add_impl(&self, other: &Self, negate: bool) -> Self {
        assert_eq!(self.lattice, other.lattice, "elements live on different lattices");
        let mut terms = self.terms.clone();
        for (m, c) in &other.terms {
            let c = if negate { -c } else { c.clone() };
            accumulate(&mut terms, m.clone(), c);
        }
        WeylElement {
            lattice: self.lattice.clone(),
            terms,
        }
    }
}

impl std::ops::Add for &WeylElement {
    type Output = WeylElement;
    fn add(self, rhs: &WeylElement) -> WeylElement {
        self.add_impl(rhs, false)
    }
}

impl std::ops::Sub for &WeylElement {
    type Output = WeylElement;
    fn sub(self, rhs: &WeylElement) -> WeylElement {
        self.add_impl(rhs, true)
    }
}

impl std::ops::Mul for &WeylElement {
    type Output = WeylElement;
    fn mul(self, rhs: &WeylElement) -> WeylElement {
        assert_eq!(self.lattice, rhs.lattice, "elements live on different lattices");
        self.mul_impl(rhs)
    }
}

impl std::ops::Neg for &WeylElement {
    type Output = WeylElement;
    fn neg(self) -> WeylElement {
        WeylElement {
            lattice: self.lattice.clone(),
            terms: self.terms.iter().map(|(m, c)| (m.clone(), -c)).collect(),
        }
    }
}

macro_rules! forward_value_ops {
    ($($trait:ident :: $method:ident),*) => {$(
        impl std::ops::$trait for WeylElement {
            type Output = WeylElement;
            fn $method(self, rhs: WeylElement) -> WeylElement {
                (&self).$method(&rhs)
            }
        }
    )*};
}
forward_value_ops!(Add::add, Sub::sub, Mul::mul);

impl std::ops::Neg for WeylElement {
    type Output = WeylElement;
    fn neg(self) -> WeylElement {
        -&self
    }
}

fn write_monomial(f: &mut fmt::Formatter<'_>, m: &[i64], width: usize) -> fmt::Result {
    let slots = m.len() / width;
    let mut wrote_any = false;
    for s in 0..slots {
        if s > 0 {
            write!(f, " ⊗ ")?;
            wrote_any = false;
        }
        let block = &m[s * width..(s + 1) * width];
        if block.iter().all(|&e| e == 0) {
            write!(f, "1")?;
            continue;
        }
        for (i, &e) in block.iter().enumerate() {
            if e == 0 {
                continue;
            }
            if wrote_any {
                write!(f, " ")?;
            }
            if e == 1 {
                write!(f, "w{}", i + 1)?;
            } else {
                write!(f, "w{}^{}", i + 1, e)?;
            }
            wrote_any = true;
        }
    }
    Ok(())
}

impl fmt::Display for WeylElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        let width = self.lattice.slot_width();
        for (k, (m, c)) in self.terms.iter().enumerate() {
            if k > 0 {
                write!(f, " + ")?;
            }
            let trivial = m.iter().all(|&e| e == 0);
            if trivial {
                write!(f, "{c}")?;
            } else if c.is_one() {
                write_monomial(f, m, width)?;
            } else {
                write!(f, "{c} ")?;
                write_monomial(f, m, width)?;
            }
        }
        Ok(())
    }
}

impl fmt::Debug for WeylElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn w(i: usize) -> WeylElement {
        WeylElement::generator(&Lattice::cyclic(), i)
    }

    #[test]
    fn defining_relations_hold_for_every_pair() {
        let lat = Lattice::cyclic();
        for i in 0..4 {
            for j in 0..4 {
                let lhs = &w(i) * &w(j);
                let rhs = (&w(j) * &w(i)).scale(&QScalar::q_pow(2 * lat.skew(i, j)));
                assert_eq!(lhs, rhs, "pair ({i},{j})");
            }
        }
    }

    #[test]
    fn product_reorders_a_swapped_adjacent_pair() {
        let expected = WeylElement::term(
            &Lattice::cyclic(),
            QScalar::q_pow(2),
            &[1, 1, 0, 0],
        );
        assert_eq!(&w(1) * &w(0), expected);
    }

    #[test]
    fn opposite_generators_commute() {
        let plain = WeylElement::monomial(&Lattice::cyclic(), &[1, 0, 1, 0]);
        assert_eq!(&w(0) * &w(2), plain);
        assert_eq!(&w(2) * &w(0), plain);
    }

    #[test]
    fn square_of_a_sum_collects_the_cross_term() {
        let lat = Lattice::cyclic();
        let s = &w(0) + &w(1);
        let q2 = QScalar::q_pow(2);
        let expected = &(&WeylElement::monomial(&lat, &[2, 0, 0, 0])
            + &WeylElement::term(&lat, &QScalar::one() + &q2, &[1, 1, 0, 0]))
            + &WeylElement::monomial(&lat, &[0, 2, 0, 0]);
        assert_eq!(&s * &s, expected);
    }

    #[test]
    fn product_is_associative_with_inverse_powers() {
        let lat = Lattice::cyclic();
        let a = &WeylElement::monomial(&lat, &[1, -2, 0, 1]) + &w(2);
        let b = &WeylElement::term(&lat, QScalar::q_pow(-3), &[0, 1, 1, -1]) - &w(0);
        let c = &w(3) + &WeylElement::monomial(&lat, &[-1, 0, 2, 0]);
        assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
    }

    #[test]
    fn trace_reads_the_constant_coefficient() {
        let lat = Lattice::cyclic();
        assert!(WeylElement::one(&lat).trace().is_one());
        assert!((&w(0) * &w(1)).trace().is_zero());
        let e = &WeylElement::term(&lat, QScalar::int(7), &[0; 4]) + &w(2);
        assert_eq!(e.trace(), QScalar::int(7));
    }

    #[test]
    fn trace_is_cyclic_on_a_sample() {
        let lat = Lattice::cyclic();
        let a = &WeylElement::monomial(&lat, &[1, 0, -1, 0]) + &(&w(1) * &w(2));
        let b = &WeylElement::monomial(&lat, &[-1, 0, 1, 0])
            + &WeylElement::term(&lat, QScalar::q_pow(5), &[0, -1, 0, -1]);
        assert_eq!((&a * &b).trace(), (&b * &a).trace());
        assert!(!(&a * &b).trace().is_zero());
    }

    #[test]
    fn mismatched_lattices_are_an_error() {
        let a = WeylElement::generator(&Lattice::cyclic(), 0);
        let b = WeylElement::generator(&Lattice::weyl_pair(1), 0);
        assert!(a.normal_product(&b).is_err());
    }

    #[test]
    fn embedding_into_slots_keeps_blocks_independent() {
        let left = w(0).tensor_embed(0, 2);
        let right = w(0).tensor_embed(1, 2);
        assert_eq!(&left * &right, &right * &left);
        let big = Lattice::cyclic().tensor(2);
        assert_eq!(left, WeylElement::monomial(&big, &[1, 0, 0, 0, 0, 0, 0, 0]));
        assert_eq!(
            WeylElement::one(&Lattice::cyclic()).tensor_embed(1, 3),
            WeylElement::one(&Lattice::cyclic().tensor(3))
        );
    }

    #[test]
    fn embedded_slots_reproduce_the_slot_relation() {
        let a = w(1).tensor_embed(1, 2);
        let b = w(0).tensor_embed(1, 2);
        assert_eq!(&a * &b, (&b * &a).scale(&QScalar::q_pow(2)));
    }

    #[test]
    fn truncate_drops_high_degree_terms() {
        let lat = Lattice::cyclic();
        let e = &(&WeylElement::one(&lat) + &w(0)) + &WeylElement::monomial(&lat, &[2, 0, 0, 0]);
        let grading = [1, 1, 1, 1];
        let cut = e.truncate(1, &grading);
        assert_eq!(cut, &WeylElement::one(&lat) + &w(0));
        assert_eq!(cut.truncate(1, &grading), cut);
    }

    #[test]
    fn truncation_commutes_with_products_of_positively_graded_elements() {
        let lat = Lattice::cyclic();
        let grading = [1, 1, 1, 1];
        let a = &(&w(0) + &w(1)) + &WeylElement::one(&lat);
        let b = &(&w(2) * &w(3)) + &w(1);
        let n = 2;
        let direct = (&a * &b).truncate(n, &grading);
        let eager = (&a.truncate(n, &grading) * &b.truncate(n, &grading)).truncate(n, &grading);
        assert_eq!(direct, eager);
    }

    #[test]
    fn swap_slots_is_an_algebra_automorphism() {
        let a = &w(0).tensor_embed(0, 2) + &w(1).tensor_embed(1, 2);
        let b = &w(3).tensor_embed(0, 2) * &w(2).tensor_embed(1, 2);
        assert_eq!((&a * &b).swap_slots(), &a.swap_slots() * &b.swap_slots());
        assert_eq!(a.swap_slots().swap_slots(), a);
    }

    #[test]
    fn degree_range_tracks_the_grading() {
        let lat = Lattice::cyclic();
        let e = &WeylElement::monomial(&lat, &[1, 0, 0, -2]) + &w(1);
        assert_eq!(e.degree_range(&[1, 1, 1, 1]), Some((-1, 1)));
        assert_eq!(e.degree_range(&[1, 0, 0, 0]), Some((0, 1)));
        assert_eq!(WeylElement::zero(&lat).degree_range(&[1, 1, 1, 1]), None);
    }

    #[test]
    fn display_orders_terms_and_marks_slots() {
        let lat = Lattice::cyclic();
        let e = &WeylElement::term(&lat, QScalar::q_pow(2), &[1, 1, 0, 0])
            + &WeylElement::one(&lat);
        assert_eq!(e.to_string(), "1 + q^2 w1 w2");
        let t = w(0).tensor_embed(0, 2) * w(2).tensor_embed(1, 2);
        assert_eq!(t.to_string(), "w1 ⊗ w3");
    }
}
