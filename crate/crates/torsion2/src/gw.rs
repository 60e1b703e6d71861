//! Diagonal quadratic forms over ℚ and their complete invariant set.
//!
//! Forms are compared through rank, signature, discriminant and the Hasse
//! invariants at every place; by Hasse–Minkowski this decides isometry over
//! ℚ, so no Witt decomposition is needed. The Hasse invariant follows the
//! convention c(⟨a₁,…,aₙ⟩) = Π_{i<j} (aᵢ,aⱼ)_v; any consistent choice gives
//! the same isometry verdicts since it is applied to both sides of every
//! comparison.

// index loops mirror the symmetric row/column updates of the matrix algebra
#![allow(clippy::needless_range_loop)]

use std::collections::BTreeMap;
use std::fmt;
use std::ops::Add;

use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::poly::Poly;
use crate::rational::Rational;
use crate::square::{
    hilbert_symbol_classes, relevant_places, square_class, Place, Sign, SquareClass,
};

/// A diagonal quadratic form ⟨a₁,…,aₙ⟩, stored as a sorted multiset of
/// square classes. The empty multiset is the zero form.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GwElement {
    entries: Vec<SquareClass>,
}

impl GwElement {
    pub fn zero() -> GwElement {
        GwElement {
            entries: Vec::new(),
        }
    }

    pub fn new(mut entries: Vec<SquareClass>) -> GwElement {
        entries.sort();
        GwElement { entries }
    }

    /// The rank-one form ⟨a⟩.
    pub fn generator(a: SquareClass) -> GwElement {
        GwElement { entries: vec![a] }
    }

    /// k·⟨1⟩ + l·⟨−1⟩.
    pub fn units(plus: usize, minus: usize) -> GwElement {
        let mut entries = vec![SquareClass::one(); plus];
        entries.extend(std::iter::repeat_n(SquareClass::minus_one(), minus));
        GwElement::new(entries)
    }

    pub fn entries(&self) -> &[SquareClass] {
        &self.entries
    }

    pub fn rank(&self) -> usize {
        self.entries.len()
    }

    pub fn invariants(&self) -> FormInvariants {
        let rank = self.entries.len();
        let mut signature: i64 = 0;
        let mut discriminant = SquareClass::one();
        for e in &self.entries {
            signature += e.real_sign().value();
            discriminant = &discriminant * e;
        }
        // Hasse at v = Π_{i<j} (a_i, a_j)_v, folded with bimultiplicativity:
        // Π_j (a_1 ⋯ a_{j-1}, a_j)_v, so only O(n) symbol evaluations.
        let refs: Vec<&SquareClass> = self.entries.iter().collect();
        let places = relevant_places(&refs);
        let mut hasse = BTreeMap::new();
        for v in places {
            let mut c = Sign::Plus;
            let mut prefix = SquareClass::one();
            for (j, a) in self.entries.iter().enumerate() {
                if j > 0 {
                    c = c * hilbert_symbol_classes(&prefix, a, &v);
                }
                prefix = &prefix * a;
            }
            if c == Sign::Minus {
                hasse.insert(v, Sign::Minus);
            }
        }
        FormInvariants {
            rank,
            signature,
            discriminant,
            hasse,
        }
    }
}

impl Add for &GwElement {
    type Output = GwElement;

    /// Orthogonal sum: multiset union.
    fn add(self, rhs: &GwElement) -> GwElement {
        let mut entries = self.entries.clone();
        entries.extend_from_slice(&rhs.entries);
        GwElement::new(entries)
    }
}

impl Add for GwElement {
    type Output = GwElement;
    fn add(self, rhs: GwElement) -> GwElement {
        &self + &rhs
    }
}

impl fmt::Display for GwElement {
    /// `3*<1> + <-1> + <5>`: unit entries aggregated, the rest listed.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.entries.is_empty() {
            return write!(f, "0");
        }
        let plus = self.entries.iter().filter(|e| e.is_one()).count();
        let minus = self
            .entries
            .iter()
            .filter(|e| **e == SquareClass::minus_one())
            .count();
        let mut parts: Vec<String> = Vec::new();
        if plus == 1 {
            parts.push("<1>".to_string());
        } else if plus > 1 {
            parts.push(format!("{plus}*<1>"));
        }
        if minus == 1 {
            parts.push("<-1>".to_string());
        } else if minus > 1 {
            parts.push(format!("{minus}*<-1>"));
        }
        for e in &self.entries {
            if !e.is_one() && *e != SquareClass::minus_one() {
                parts.push(format!("<{e}>"));
            }
        }
        write!(f, "{}", parts.join(" + "))
    }
}

/// The complete invariant set of a nonsingular form over ℚ.
///
/// `hasse` stores the places with invariant −1; every absent place has
/// invariant +1 (only finitely many are nontrivial).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FormInvariants {
    pub rank: usize,
    pub signature: i64,
    pub discriminant: SquareClass,
    pub hasse: BTreeMap<Place, Sign>,
}

impl FormInvariants {
    pub fn hasse_at(&self, v: &Place) -> Sign {
        self.hasse.get(v).copied().unwrap_or(Sign::Plus)
    }
}

/// Two forms over ℚ are isometric iff rank, signature, discriminant and all
/// Hasse invariants agree.
pub fn is_isometric(e1: &GwElement, e2: &GwElement) -> bool {
    e1.invariants() == e2.invariants()
}

/// A symmetric matrix of rationals, the Gram matrix of a bilinear form.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GramMatrix {
    entries: Vec<Vec<Rational>>,
}

impl GramMatrix {
    pub fn new(entries: Vec<Vec<Rational>>) -> Result<GramMatrix> {
        let n = entries.len();
        if n == 0 {
            return Err(Error::InvalidModel("empty Gram matrix".into()));
        }
        if entries.iter().any(|row| row.len() != n) {
            return Err(Error::InvalidModel("Gram matrix is not square".into()));
        }
        for i in 0..n {
            for j in 0..i {
                if entries[i][j] != entries[j][i] {
                    return Err(Error::InvalidModel("Gram matrix is not symmetric".into()));
                }
            }
        }
        Ok(GramMatrix { entries })
    }

    pub fn from_int_rows(rows: &[&[i64]]) -> Result<GramMatrix> {
        GramMatrix::new(
            rows.iter()
                .map(|r| r.iter().map(|&v| crate::rational::int(v)).collect())
                .collect(),
        )
    }

    pub fn size(&self) -> usize {
        self.entries.len()
    }

    pub fn entry(&self, i: usize, j: usize) -> &Rational {
        &self.entries[i][j]
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
#[cfg_attr(not(test), allow(dead_code))]
pub(crate) enum PivotStrategy {
    FirstNonzero,
    LastNonzero,
}

/// Diagonalize a nonsingular Gram matrix by symmetric congruence
/// elimination; the result is a diagonal form congruent to it over ℚ.
pub fn diagonalize(g: &GramMatrix) -> Result<GwElement> {
    diagonalize_with(g, PivotStrategy::FirstNonzero)
}

pub(crate) fn diagonalize_with(g: &GramMatrix, strategy: PivotStrategy) -> Result<GwElement> {
    let n = g.size();
    let mut m = g.entries.clone();
    let mut diag: Vec<SquareClass> = Vec::with_capacity(n);
    for k in 0..n {
        if m[k][k].is_zero() {
            // prefer a symmetric swap with a later nonzero diagonal entry
            let candidates: Vec<usize> = (k + 1..n).filter(|&j| !m[j][j].is_zero()).collect();
            let pick = match strategy {
                PivotStrategy::FirstNonzero => candidates.first().copied(),
                PivotStrategy::LastNonzero => candidates.last().copied(),
            };
            if let Some(j) = pick {
                m.swap(k, j);
                for row in m.iter_mut() {
                    row.swap(k, j);
                }
            } else {
                // every remaining diagonal entry vanishes: add a row with
                // nonzero coupling (char 0, so 2·m[k][j] cannot cancel)
                let js: Vec<usize> = (k + 1..n).filter(|&j| !m[k][j].is_zero()).collect();
                let pick = match strategy {
                    PivotStrategy::FirstNonzero => js.first().copied(),
                    PivotStrategy::LastNonzero => js.last().copied(),
                };
                let Some(j) = pick else {
                    return Err(Error::SingularGram);
                };
                for col in 0..n {
                    let t = m[j][col].clone();
                    m[k][col] += t;
                }
                for row in m.iter_mut() {
                    let t = row[j].clone();
                    row[k] += t;
                }
            }
        }
        let pivot = m[k][k].clone();
        debug_assert!(!pivot.is_zero());
        for i in k + 1..n {
            if m[i][k].is_zero() {
                continue;
            }
            let factor = &m[i][k] / &pivot;
            for col in 0..n {
                let t = &m[k][col] * &factor;
                m[i][col] -= t;
            }
            for row in m.iter_mut() {
                let t = &row[k] * &factor;
                row[i] -= t;
            }
        }
        diag.push(square_class(&pivot).expect("pivot is nonzero"));
    }
    Ok(GwElement::new(diag))
}

/// Power sums s_k of the roots of a monic polynomial, for k = 0..count,
/// via Newton's identities (O(n²) exact arithmetic, no companion-matrix
/// powers).
fn power_sums(monic: &Poly, count: usize) -> Vec<Rational> {
    let n = monic.degree().expect("nonzero polynomial");
    debug_assert!(monic.leading().is_one());
    let c = |j: usize| monic.coeff(j);
    let mut s: Vec<Rational> = Vec::with_capacity(count);
    s.push(Rational::from_integer(n.into()));
    for k in 1..count {
        let mut acc = Rational::zero();
        for i in 1..k.min(n + 1) {
            acc += c(n - i) * &s[k - i];
        }
        if k <= n {
            acc += Rational::from_integer(k.into()) * c(n - k);
        }
        s.push(-acc);
    }
    s
}

/// Trace of f in ℚ[x]/(monic); f must already be reduced.
fn trace(f: &Poly, sums: &[Rational]) -> Rational {
    let mut acc = Rational::zero();
    for (k, coeff) in f.coeffs().iter().enumerate() {
        acc += coeff * &sums[k];
    }
    acc
}

/// Gram matrix of (f,g) ↦ tr_{ℚ[x]/(q)}(w·f·g) on the power basis, then
/// diagonalized; q must be monic.
fn weighted_trace_gram(monic: &Poly, w: &Poly) -> Result<GwElement> {
    let n = monic.degree().expect("degree checked by callers");
    let sums = power_sums(monic, n);
    // x^m · w mod q for m = 0..2n-2, built incrementally
    let mut powers = Vec::with_capacity(2 * n - 1);
    powers.push(w.rem(monic));
    for m in 1..2 * n - 1 {
        let next = (&powers[m - 1] * &Poly::x()).rem(monic);
        powers.push(next);
    }
    let mut rows = Vec::with_capacity(n);
    for i in 0..n {
        let mut row = Vec::with_capacity(n);
        for j in 0..n {
            row.push(trace(&powers[i + j], &sums));
        }
        rows.push(row);
    }
    diagonalize(&GramMatrix::new(rows)?)
}

/// The quadratic form f ↦ tr(f²/p′) on ℚ\[x\]/(p) in diagonal form, where the
/// weight is the inverse of p′ modulo p (extended Euclid).
pub fn trace_form_weighted(p: &Poly) -> Result<GwElement> {
    if p.degree().is_none_or(|d| d < 1) || !p.is_squarefree() {
        return Err(Error::NotSquarefree);
    }
    let monic = p.monic();
    let w = p.derivative().inverse_mod(&monic)?;
    weighted_trace_gram(&monic, &w)
}

/// The scaled trace form (f,g) ↦ tr(α·f·g) on ℚ\[x\]/(q) in diagonal form —
/// the transfer Tr_{K/ℚ}⟨α⟩ when q is irreducible.
pub fn scaled_trace_transfer(q: &Poly, alpha: &Poly) -> Result<GwElement> {
    if q.degree().is_none_or(|d| d < 1) || !q.is_squarefree() {
        return Err(Error::NotSquarefree);
    }
    let monic = q.monic();
    let red = alpha.rem(&monic);
    if red.is_zero() || red.gcd(&monic).degree() != Some(0) {
        return Err(Error::NotInvertible);
    }
    weighted_trace_gram(&monic, &red)
}

/// 2^{g−1}·((2^g+1)·⟨1⟩ + (2^g−1)·⟨−1⟩): rank 2^{2g}, signature 2^g.
pub fn conjecture_rhs(g: u32) -> GwElement {
    assert!(g >= 1, "defined for g >= 1");
    let half = 1usize << (g - 1);
    let plus = half * ((1usize << g) + 1);
    let minus = half * ((1usize << g) - 1);
    GwElement::units(plus, minus)
}

/// Orthogonal sum.
pub fn gw_sum(e1: &GwElement, e2: &GwElement) -> GwElement {
    e1 + e2
}
