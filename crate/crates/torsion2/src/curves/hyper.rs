//! Split hyperelliptic Jacobians: y² = u·Π(x − zᵢ) with all 2g+2
//! Weierstrass roots rational, so the whole of J[2] is rational.
//!
//! A 2-torsion class is an even subset of root indices modulo complement,
//! canonicalized to the lexicographically smaller of {S, Sᶜ}. The sign
//! invariant q₂ is the square class of Π_{z∈S, w∈Sᶜ}(z−w); the pairing b₂
//! decomposes the second argument into Weierstrass pairs. Both closed
//! forms are validated against a divisor-evaluation oracle.

use std::collections::hash_map::DefaultHasher;
use std::collections::BTreeMap;
use std::hash::{Hash, Hasher};

use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::gw::GwElement;
use crate::poly::Poly;
use crate::rational::{int, pow_i64, rat, signum, Rational};
use crate::square::{square_class, Sign, SquareClass};

/// y² = u·Π(x − zᵢ), u ≠ 0, with 2g+2 distinct rational roots, g ≥ 1.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct HyperellipticModel {
    u: Rational,
    roots: Vec<Rational>,
    id: u64,
}

/// A 2-torsion point as an even subset of Weierstrass indices modulo
/// complement; stored canonically as the lexicographically smaller of
/// {S, Sᶜ}, so the identity is the empty set.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct TwoTorsionClass {
    subset: Vec<usize>,
    num_roots: usize,
    model_id: u64,
}

impl TwoTorsionClass {
    /// The stored canonical representative.
    pub fn subset(&self) -> &[usize] {
        &self.subset
    }

    /// The representative of minimal cardinality (canonical on ties) —
    /// the natural one to print, e.g. a pair {i, j} instead of its
    /// complement.
    pub fn display_subset(&self) -> Vec<usize> {
        let comp = complement(&self.subset, self.num_roots);
        if comp.len() < self.subset.len() {
            comp
        } else {
            self.subset.clone()
        }
    }

    pub fn is_identity(&self) -> bool {
        self.subset.is_empty()
    }

    /// Symmetric difference: the group law on the 2-torsion.
    pub fn add(&self, other: &TwoTorsionClass) -> Result<TwoTorsionClass> {
        if self.model_id != other.model_id || self.num_roots != other.num_roots {
            return Err(Error::ModelMismatch);
        }
        let mut sym: Vec<usize> = Vec::new();
        let (mut i, mut j) = (0, 0);
        while i < self.subset.len() && j < other.subset.len() {
            match self.subset[i].cmp(&other.subset[j]) {
                std::cmp::Ordering::Less => {
                    sym.push(self.subset[i]);
                    i += 1;
                }
                std::cmp::Ordering::Greater => {
                    sym.push(other.subset[j]);
                    j += 1;
                }
                std::cmp::Ordering::Equal => {
                    i += 1;
                    j += 1;
                }
            }
        }
        sym.extend_from_slice(&self.subset[i..]);
        sym.extend_from_slice(&other.subset[j..]);
        Ok(TwoTorsionClass {
            subset: canonicalize(sym, self.num_roots),
            num_roots: self.num_roots,
            model_id: self.model_id,
        })
    }
}

impl std::fmt::Display for TwoTorsionClass {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        let d = self.display_subset();
        let items: Vec<String> = d.iter().map(|i| i.to_string()).collect();
        write!(f, "{{{}}}", items.join(","))
    }
}

fn complement(subset: &[usize], n: usize) -> Vec<usize> {
    let mut out = Vec::with_capacity(n - subset.len());
    let mut it = subset.iter().peekable();
    for i in 0..n {
        if it.peek() == Some(&&i) {
            it.next();
        } else {
            out.push(i);
        }
    }
    out
}

fn canonicalize(subset: Vec<usize>, n: usize) -> Vec<usize> {
    let comp = complement(&subset, n);
    if comp < subset {
        comp
    } else {
        subset
    }
}

/// A point of a principal divisor: a Weierstrass point (zᵢ, 0) or the pair
/// of points at infinity taken together.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum DivisorPoint {
    Root(usize),
    InfinityPair,
}

/// A degree-zero ratio of products of (x − zᵢ): the exponent of each root
/// index, summing to zero. On the curve its divisor is 2·Σ mᵢ·(zᵢ, 0).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RootFunction {
    exps: BTreeMap<usize, i64>,
    model_id: u64,
}

impl RootFunction {
    pub fn exponents(&self) -> &BTreeMap<usize, i64> {
        &self.exps
    }

    fn numerator_denominator(&self, model: &HyperellipticModel) -> (Poly, Poly) {
        let mut num = Poly::one();
        let mut den = Poly::one();
        for (&i, &m) in &self.exps {
            let lin = Poly::new(vec![-model.roots[i].clone(), Rational::one()]);
            let p = lin.pow(m.unsigned_abs() as u32);
            if m > 0 {
                num = &num * &p;
            } else {
                den = &den * &p;
            }
        }
        (num, den)
    }
}

/// One connected component of the real locus: its x-interval(s), the two
/// Weierstrass root indices it carries, and a rational sample point where
/// the defining polynomial is strictly positive.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RealComponent {
    pub intervals: Vec<Interval>,
    pub root_indices: Vec<usize>,
    pub sample: Rational,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Interval {
    /// [a, b]
    Bounded(Rational, Rational),
    /// (−∞, a]
    LeftRay(Rational),
    /// [a, ∞)
    RightRay(Rational),
}

/// The components X₀, …, X_s of the real locus; X₀ is the component
/// containing the smallest Weierstrass root. Split models always have
/// s = g.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ComponentDecomposition {
    components: Vec<RealComponent>,
}

impl ComponentDecomposition {
    pub fn components(&self) -> &[RealComponent] {
        &self.components
    }

    pub fn s(&self) -> usize {
        self.components.len() - 1
    }
}

impl HyperellipticModel {
    pub fn new(u: Rational, mut roots: Vec<Rational>) -> Result<HyperellipticModel> {
        if u.is_zero() {
            return Err(Error::InvalidModel("leading coefficient is zero".into()));
        }
        if roots.len() < 4 || !roots.len().is_multiple_of(2) {
            return Err(Error::InvalidModel(format!(
                "need an even number of roots, at least 4, got {}",
                roots.len()
            )));
        }
        roots.sort();
        if roots.windows(2).any(|w| w[0] == w[1]) {
            return Err(Error::InvalidModel("repeated root".into()));
        }
        let mut hasher = DefaultHasher::new();
        u.hash(&mut hasher);
        roots.hash(&mut hasher);
        let id = hasher.finish();
        Ok(HyperellipticModel { u, roots, id })
    }

    pub fn from_int_roots(u: i64, roots: &[i64]) -> Result<HyperellipticModel> {
        HyperellipticModel::new(int(u), roots.iter().map(|&r| int(r)).collect())
    }

    /// Build from a polynomial right-hand side, which must split over ℚ
    /// with simple roots.
    pub fn from_poly(p: &Poly) -> Result<HyperellipticModel> {
        let deg = p
            .degree()
            .ok_or_else(|| Error::InvalidModel("zero polynomial".into()))?;
        let roots = p.rational_roots();
        if roots.len() != deg {
            return Err(Error::InvalidModel(
                "polynomial does not split over the rationals".into(),
            ));
        }
        HyperellipticModel::new(p.leading(), roots)
    }

    pub fn u(&self) -> &Rational {
        &self.u
    }

    pub fn roots(&self) -> &[Rational] {
        &self.roots
    }

    pub fn num_roots(&self) -> usize {
        self.roots.len()
    }

    pub fn genus(&self) -> usize {
        self.roots.len() / 2 - 1
    }

    /// u·Π(x − zᵢ).
    pub fn rhs(&self) -> Poly {
        Poly::from_roots(&self.u, &self.roots)
    }

    /// The class of an even subset of root indices.
    pub fn class(&self, indices: &[usize]) -> Result<TwoTorsionClass> {
        let mut subset: Vec<usize> = indices.to_vec();
        subset.sort();
        subset.dedup();
        if subset.len() != indices.len() {
            return Err(Error::InvalidModel("repeated index in subset".into()));
        }
        if let Some(&bad) = subset.iter().find(|&&i| i >= self.roots.len()) {
            return Err(Error::BadIndex(bad));
        }
        if !subset.len().is_multiple_of(2) {
            return Err(Error::InvalidModel(
                "a 2-torsion class needs an even subset".into(),
            ));
        }
        Ok(TwoTorsionClass {
            subset: canonicalize(subset, self.roots.len()),
            num_roots: self.roots.len(),
            model_id: self.id,
        })
    }

    pub fn identity_class(&self) -> TwoTorsionClass {
        TwoTorsionClass {
            subset: Vec::new(),
            num_roots: self.roots.len(),
            model_id: self.id,
        }
    }

    /// All 2^{2g} classes, ordered by the size of the displayed
    /// representative and then lexicographically: the identity first, then
    /// the pairs {0,1}, {0,2}, …, then larger subsets.
    pub fn classes(&self) -> Vec<TwoTorsionClass> {
        let n = self.roots.len();
        let mut reps: Vec<Vec<usize>> = Vec::with_capacity(1 << (n - 1));
        for mask in 0u64..(1 << (n - 1)) {
            // enumerating subsets of {1,…,n−1} keyed by whether they
            // contain index 0 after complementing yields each class once
            let subset: Vec<usize> = (0..n - 1).filter(|i| (mask >> i) & 1 == 1).map(|i| i + 1).collect();
            let subset = if subset.len().is_multiple_of(2) {
                subset
            } else {
                let mut s = vec![0];
                s.extend(subset);
                s
            };
            reps.push(canonicalize(subset, n));
        }
        reps.sort_by(|a, b| {
            let da = display_of(a, n);
            let db = display_of(b, n);
            da.len().cmp(&db.len()).then_with(|| da.cmp(&db))
        });
        reps.dedup();
        debug_assert_eq!(reps.len(), 1 << (2 * self.genus()));
        reps.into_iter()
            .map(|subset| TwoTorsionClass {
                subset,
                num_roots: n,
                model_id: self.id,
            })
            .collect()
    }

    fn check_class(&self, c: &TwoTorsionClass) -> Result<()> {
        if c.model_id != self.id || c.num_roots != self.roots.len() {
            return Err(Error::ModelMismatch);
        }
        Ok(())
    }

    /// Weil pairing e₂(a_S, λ(a_T)) = (−1)^{|S∩T|}; alternating, and
    /// invariant under complementing either argument since subsets are
    /// even.
    pub fn e2(&self, s: &TwoTorsionClass, t: &TwoTorsionClass) -> Result<Sign> {
        self.check_class(s)?;
        self.check_class(t)?;
        Ok(e2_of_subsets(&s.subset, &t.subset))
    }

    /// q₂(a_S) = b₂(a_S, λ(a_S)): the square class of
    /// Π_{z∈S, w∈Sᶜ}(z − w), computed factorwise.
    pub fn q2(&self, s: &TwoTorsionClass) -> Result<SquareClass> {
        self.check_class(s)?;
        Ok(self.q2_of_subset(&s.subset))
    }

    fn q2_of_subset(&self, subset: &[usize]) -> SquareClass {
        let comp = complement(subset, self.roots.len());
        let mut acc = SquareClass::one();
        for &i in subset {
            for &j in &comp {
                let diff = &self.roots[i] - &self.roots[j];
                acc = &acc * &square_class(&diff).expect("roots are distinct");
            }
        }
        acc
    }

    /// b₂(a_S, λ(a_T)) for classes with even intersection; the second
    /// argument is decomposed into Weierstrass pairs lying inside or
    /// outside S. An odd intersection has no x-only representative pair,
    /// so it is a typed error; the real sign is still available through
    /// [`HyperellipticModel::b2_real_sign`].
    pub fn b2(&self, s: &TwoTorsionClass, t: &TwoTorsionClass) -> Result<SquareClass> {
        self.check_class(s)?;
        self.check_class(t)?;
        self.b2_of_subsets(&s.subset, &t.subset)
    }

    fn b2_of_subsets(&self, s: &[usize], t: &[usize]) -> Result<SquareClass> {
        let inside: Vec<usize> = t.iter().copied().filter(|i| s.contains(i)).collect();
        let outside: Vec<usize> = t.iter().copied().filter(|i| !s.contains(i)).collect();
        if !inside.len().is_multiple_of(2) {
            return Err(Error::OddIntersection);
        }
        let mut acc = SquareClass::one();
        for pair in outside.chunks(2) {
            for &z in s {
                for &w in pair {
                    let diff = &self.roots[z] - &self.roots[w];
                    acc = &acc * &square_class(&diff).expect("distinct");
                }
            }
        }
        for pair in inside.chunks(2) {
            acc = &acc * &self.q2_of_subset(pair);
            for &z in s.iter().filter(|z| !pair.contains(z)) {
                for &w in pair {
                    let diff = &self.roots[z] - &self.roots[w];
                    acc = &acc * &square_class(&diff).expect("distinct");
                }
            }
        }
        Ok(acc)
    }

    /// The real components. For u > 0 the two unbounded rays join through
    /// the real points at infinity into a single component, which contains
    /// the smallest root and is therefore X₀.
    pub fn components(&self) -> ComponentDecomposition {
        let n = self.roots.len();
        let mut components = Vec::with_capacity(n / 2);
        if signum(&self.u) > 0 {
            components.push(RealComponent {
                intervals: vec![
                    Interval::LeftRay(self.roots[0].clone()),
                    Interval::RightRay(self.roots[n - 1].clone()),
                ],
                root_indices: vec![0, n - 1],
                sample: &self.roots[0] - int(1),
            });
            let mut i = 1;
            while i + 1 < n {
                components.push(RealComponent {
                    intervals: vec![Interval::Bounded(
                        self.roots[i].clone(),
                        self.roots[i + 1].clone(),
                    )],
                    root_indices: vec![i, i + 1],
                    sample: (&self.roots[i] + &self.roots[i + 1]) * rat(1, 2),
                });
                i += 2;
            }
        } else {
            let mut i = 0;
            while i + 1 < n {
                components.push(RealComponent {
                    intervals: vec![Interval::Bounded(
                        self.roots[i].clone(),
                        self.roots[i + 1].clone(),
                    )],
                    root_indices: vec![i, i + 1],
                    sample: (&self.roots[i] + &self.roots[i + 1]) * rat(1, 2),
                });
                i += 2;
            }
        }
        ComponentDecomposition { components }
    }

    /// par_i(a_S) for i = 1..s: the parity of the number of roots of S on
    /// each component beyond X₀.
    pub fn par_vec(&self, s: &TwoTorsionClass) -> Result<Vec<bool>> {
        self.check_class(s)?;
        Ok(self.par_of_subset(&s.subset, &self.components()))
    }

    fn par_of_subset(&self, subset: &[usize], decomp: &ComponentDecomposition) -> Vec<bool> {
        decomp.components()[1..]
            .iter()
            .map(|c| {
                c.root_indices
                    .iter()
                    .filter(|i| subset.contains(i))
                    .count()
                    % 2
                    == 1
            })
            .collect()
    }

    /// sg_i(a_S) for i = 1..s: the sign pattern of f_S = Π_{z∈S}(x − z) at
    /// the component samples, normalized to be nonnegative on X₀.
    pub fn sg_vec(&self, s: &TwoTorsionClass) -> Result<Vec<bool>> {
        self.check_class(s)?;
        Ok(self.sg_of_subset(&s.subset, &self.components()))
    }

    fn sg_of_subset(&self, subset: &[usize], decomp: &ComponentDecomposition) -> Vec<bool> {
        let f = |x: &Rational| -> i32 {
            let mut sign = 1;
            for &i in subset {
                sign *= signum(&(x - &self.roots[i]));
            }
            sign
        };
        let reference = f(&decomp.components()[0].sample);
        decomp.components()[1..]
            .iter()
            .map(|c| f(&c.sample) != reference)
            .collect()
    }

    /// The real sign of b₂(a_S, λ(a_T)) through the component model:
    /// (−1)^{Σ par_i(S)·sg_i(T)}. Works for every pair, including the ones
    /// with odd intersection.
    pub fn b2_real_sign(&self, s: &TwoTorsionClass, t: &TwoTorsionClass) -> Result<Sign> {
        self.check_class(s)?;
        self.check_class(t)?;
        let decomp = self.components();
        let par = self.par_of_subset(&s.subset, &decomp);
        let sg = self.sg_of_subset(&t.subset, &decomp);
        let n = par.iter().zip(sg.iter()).filter(|(&p, &q)| p && q).count();
        Ok(Sign::from_parity(n % 2 == 1))
    }

    /// Σ over all 2^{2g} classes of the real sign of q₂; always 2^g.
    pub fn signed_count(&self) -> i64 {
        self.classes()
            .iter()
            .map(|c| self.q2_of_subset(&c.subset).real_sign().value())
            .sum()
    }

    /// Π over all classes of q₂: −1 for g = 1 and +1 for g ≥ 2.
    pub fn q2_product(&self) -> SquareClass {
        let mut acc = SquareClass::one();
        for c in self.classes() {
            acc = &acc * &self.q2_of_subset(&c.subset);
        }
        acc
    }

    /// The multiset ⟨q₂(a)⟩ over all 2-torsion classes; every residue
    /// field is ℚ for a split model, so no transfers appear.
    pub fn conjecture_lhs(&self) -> GwElement {
        GwElement::new(
            self.classes()
                .iter()
                .map(|c| self.q2_of_subset(&c.subset))
                .collect(),
        )
    }

    /// Exact evaluation Π f(P)^{n_P} of f = num/den at a formal sum of
    /// Weierstrass points and infinity pairs. Requires deg num = deg den,
    /// so the value at infinity is the ratio of leading coefficients.
    pub fn divisor_eval(
        &self,
        num: &Poly,
        den: &Poly,
        d: &[(DivisorPoint, i64)],
    ) -> Result<Rational> {
        if num.is_zero() || den.is_zero() || num.degree() != den.degree() {
            return Err(Error::DegreeMismatch);
        }
        let mut acc = Rational::one();
        for &(pt, k) in d {
            if k == 0 {
                continue;
            }
            let value = match pt {
                DivisorPoint::Root(i) => {
                    if i >= self.roots.len() {
                        return Err(Error::BadIndex(i));
                    }
                    let x = &self.roots[i];
                    let n = num.eval(x);
                    let dv = den.eval(x);
                    if n.is_zero() || dv.is_zero() {
                        return Err(Error::SupportCollision);
                    }
                    pow_i64(&(n / dv), k)
                }
                DivisorPoint::InfinityPair => {
                    let ratio = num.leading() / den.leading();
                    pow_i64(&ratio, 2 * k)
                }
            };
            acc *= value;
        }
        Ok(acc)
    }

    /// A degree-zero ratio of (x − zᵢ) powers from (index, exponent) pairs.
    pub fn root_function(&self, pairs: &[(usize, i64)]) -> Result<RootFunction> {
        let mut exps: BTreeMap<usize, i64> = BTreeMap::new();
        for &(i, m) in pairs {
            if i >= self.roots.len() {
                return Err(Error::BadIndex(i));
            }
            *exps.entry(i).or_insert(0) += m;
        }
        exps.retain(|_, m| *m != 0);
        if exps.values().sum::<i64>() != 0 {
            return Err(Error::DegreeMismatch);
        }
        Ok(RootFunction {
            exps,
            model_id: self.id,
        })
    }

    /// Weil reciprocity for two root functions with disjoint supports:
    /// evaluates f on div(g) and g on div(f) exactly and compares.
    pub fn weil_reciprocity(&self, f: &RootFunction, g: &RootFunction) -> Result<bool> {
        if f.model_id != self.id || g.model_id != self.id {
            return Err(Error::ModelMismatch);
        }
        if f.exps.keys().any(|i| g.exps.contains_key(i)) {
            return Err(Error::SharedSupport);
        }
        let (fn_, fd) = f.numerator_denominator(self);
        let (gn, gd) = g.numerator_denominator(self);
        // div of a root function on the curve is 2·Σ mᵢ·(zᵢ, 0)
        let div_g: Vec<(DivisorPoint, i64)> = g
            .exps
            .iter()
            .map(|(&i, &m)| (DivisorPoint::Root(i), 2 * m))
            .collect();
        let div_f: Vec<(DivisorPoint, i64)> = f
            .exps
            .iter()
            .map(|(&i, &m)| (DivisorPoint::Root(i), 2 * m))
            .collect();
        let lhs = self.divisor_eval(&fn_, &fd, &div_g)?;
        let rhs = self.divisor_eval(&gn, &gd, &div_f)?;
        Ok(lhs == rhs)
    }

    /// The q₂ value re-derived through the divisor oracle: evaluates
    /// f = Π_{z∈S}(x−z)ᐟ(x−c)^{|S|} (an x-only function with divisor
    /// 2·D_S) against the complementary representative of the same class.
    /// c must be rational and distinct from every root.
    pub fn q2_via_divisor_oracle(
        &self,
        s: &TwoTorsionClass,
        c: &Rational,
    ) -> Result<SquareClass> {
        self.check_class(s)?;
        if self.roots.contains(c) {
            return Err(Error::SupportCollision);
        }
        if s.subset.is_empty() {
            return Ok(SquareClass::one());
        }
        let mut num = Poly::one();
        for &i in &s.subset {
            num = &num * &Poly::new(vec![-self.roots[i].clone(), Rational::one()]);
        }
        let den = Poly::new(vec![-c.clone(), Rational::one()]).pow(s.subset.len() as u32);
        let comp = complement(&s.subset, self.roots.len());
        // −D₁ = (|Sᶜ|/2)·∞-pair − Σ_{w∈Sᶜ} (z_w, 0)
        let mut d: Vec<(DivisorPoint, i64)> = comp
            .iter()
            .map(|&i| (DivisorPoint::Root(i), -1))
            .collect();
        d.push((DivisorPoint::InfinityPair, comp.len() as i64 / 2));
        square_class(&self.divisor_eval(&num, &den, &d)?)
    }
}

fn display_of(subset: &[usize], n: usize) -> Vec<usize> {
    let comp = complement(subset, n);
    if comp.len() < subset.len() {
        comp
    } else {
        subset.to_vec()
    }
}

fn e2_of_subsets(s: &[usize], t: &[usize]) -> Sign {
    let shared = s.iter().filter(|i| t.contains(i)).count();
    Sign::from_parity(shared % 2 == 1)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::square::square_class_of_int;

    fn sc(n: i64) -> SquareClass {
        square_class_of_int(n).unwrap()
    }

    /// y² = x(x−1)(x−2)(x−3)(x−4)(x−5), the worked genus-2 example.
    fn paper_curve() -> HyperellipticModel {
        HyperellipticModel::from_int_roots(1, &[0, 1, 2, 3, 4, 5]).unwrap()
    }

    #[test]
    fn model_validation() {
        assert!(matches!(
            HyperellipticModel::from_int_roots(0, &[0, 1, 2, 3]),
            Err(Error::InvalidModel(_))
        ));
        assert!(matches!(
            HyperellipticModel::from_int_roots(1, &[0, 1, 2]),
            Err(Error::InvalidModel(_))
        ));
        assert!(matches!(
            HyperellipticModel::from_int_roots(1, &[0, 1, 2, 2]),
            Err(Error::InvalidModel(_))
        ));
        let m = HyperellipticModel::from_poly(&Poly::from_roots(
            &int(2),
            &[int(0), int(1), int(2), int(3)],
        ))
        .unwrap();
        assert_eq!(m.genus(), 1);
        assert_eq!(m.u(), &int(2));
        // x^4 + 1 does not split
        assert!(matches!(
            HyperellipticModel::from_poly(&Poly::from_int_coeffs(&[1, 0, 0, 0, 1])),
            Err(Error::InvalidModel(_))
        ));
    }

    #[test]
    fn class_census() {
        let m = paper_curve();
        let classes = m.classes();
        assert_eq!(classes.len(), 16);
        assert!(classes[0].is_identity());
        // the fifteen nontrivial classes are the pairs
        for c in &classes[1..] {
            assert_eq!(c.display_subset().len(), 2);
        }

        let g1 = HyperellipticModel::from_int_roots(1, &[0, 1, 2, 3]).unwrap();
        assert_eq!(g1.classes().len(), 4);

        let g3 = HyperellipticModel::from_int_roots(1, &[0, 1, 2, 3, 4, 5, 6, 7]).unwrap();
        assert_eq!(g3.classes().len(), 64);
    }

    #[test]
    fn canonical_complement() {
        let m = paper_curve();
        let a = m.class(&[1, 2]).unwrap();
        let b = m.class(&[0, 3, 4, 5]).unwrap();
        assert_eq!(a, b);
        assert_eq!(a.display_subset(), vec![1, 2]);
        // the full set is the identity
        let full = m.class(&[0, 1, 2, 3, 4, 5]).unwrap();
        assert!(full.is_identity());
    }

    #[test]
    fn weil_pairing_on_subsets() {
        let m = paper_curve();
        let a01 = m.class(&[0, 1]).unwrap();
        let a12 = m.class(&[1, 2]).unwrap();
        let a23 = m.class(&[2, 3]).unwrap();
        assert_eq!(m.e2(&a01, &a12).unwrap(), Sign::Minus);
        assert_eq!(m.e2(&a01, &a23).unwrap(), Sign::Plus);
        assert_eq!(m.e2(&a01, &a01).unwrap(), Sign::Plus);
    }

    #[test]
    fn q2_paper_values() {
        let m = paper_curve();
        let expected = [(1, sc(5)), (2, sc(-10)), (3, sc(10)), (4, sc(-5)), (5, sc(1))];
        for (j, want) in expected {
            let c = m.class(&[0, j]).unwrap();
            assert_eq!(m.q2(&c).unwrap(), want, "a_0{j}");
        }
        assert!(m.q2(&m.identity_class()).unwrap().is_one());
        // both routes to q₂(a_12): the direct product and the group law
        let a12 = m.class(&[1, 2]).unwrap();
        assert_eq!(m.q2(&a12).unwrap(), sc(2));
    }

    #[test]
    fn q2_complement_invariance() {
        let m = paper_curve();
        for c in m.classes() {
            let comp = complement(c.subset(), 6);
            assert_eq!(m.q2_of_subset(c.subset()), m.q2_of_subset(&comp));
        }
    }

    #[test]
    fn e2_complement_invariance() {
        let m = paper_curve();
        for s in m.classes() {
            let sc = complement(s.subset(), 6);
            for t in m.classes() {
                let tc = complement(t.subset(), 6);
                let base = e2_of_subsets(s.subset(), t.subset());
                assert_eq!(e2_of_subsets(&sc, t.subset()), base);
                assert_eq!(e2_of_subsets(s.subset(), &tc), base);
                assert_eq!(e2_of_subsets(&sc, &tc), base);
            }
        }
    }

    #[test]
    fn b2_examples() {
        let m = paper_curve();
        let a01 = m.class(&[0, 1]).unwrap();
        let a23 = m.class(&[2, 3]).unwrap();
        let a12 = m.class(&[1, 2]).unwrap();
        assert_eq!(m.b2(&a01, &a23).unwrap(), sc(3));
        assert_eq!(m.b2(&a01, &a01).unwrap(), m.q2(&a01).unwrap());
        assert_eq!(m.b2(&a01, &a12), Err(Error::OddIntersection));
    }

    #[test]
    fn b2_respects_representatives() {
        // T and Tᶜ give the same value: {0,1} paired against {2,3} ~ {0,1,4,5}
        let m = paper_curve();
        assert_eq!(
            m.b2_of_subsets(&[0, 1], &[2, 3]).unwrap(),
            m.b2_of_subsets(&[0, 1], &[0, 1, 4, 5]).unwrap()
        );
        assert_eq!(
            m.b2_of_subsets(&[2, 3], &[0, 1]).unwrap(),
            m.b2_of_subsets(&[0, 1, 4, 5], &[0, 1]).unwrap()
        );
    }

    #[test]
    fn components_of_paper_curve() {
        let m = paper_curve();
        let decomp = m.components();
        assert_eq!(decomp.s(), 2);
        let c0 = &decomp.components()[0];
        assert_eq!(c0.root_indices, vec![0, 5]);
        assert_eq!(
            c0.intervals,
            vec![Interval::LeftRay(int(0)), Interval::RightRay(int(5))]
        );
        assert_eq!(decomp.components()[1].root_indices, vec![1, 2]);
        assert_eq!(decomp.components()[2].root_indices, vec![3, 4]);
    }

    #[test]
    fn components_negative_lead() {
        let m = HyperellipticModel::from_int_roots(-1, &[0, 1, 2, 3]).unwrap();
        let decomp = m.components();
        assert_eq!(decomp.s(), 1);
        assert_eq!(
            decomp.components()[0].intervals,
            vec![Interval::Bounded(int(0), int(1))]
        );
        assert_eq!(
            decomp.components()[1].intervals,
            vec![Interval::Bounded(int(2), int(3))]
        );
    }

    #[test]
    fn genus_equals_component_count() {
        for (u, roots) in [
            (1i64, vec![0i64, 1, 2, 3]),
            (-2, vec![-3, -1, 0, 2, 4, 7]),
            (3, vec![0, 1, 2, 3, 4, 5, 6, 7]),
        ] {
            let m = HyperellipticModel::from_int_roots(u, &roots).unwrap();
            assert_eq!(m.components().s(), m.genus());
        }
    }

    #[test]
    fn par_and_sg_examples() {
        let m = paper_curve();
        let a12 = m.class(&[1, 2]).unwrap();
        assert_eq!(m.par_vec(&a12).unwrap(), vec![false, false]);
        let a01 = m.class(&[0, 1]).unwrap();
        assert_eq!(m.sg_vec(&a01).unwrap(), vec![false, false]);
        assert_eq!(m.par_vec(&a01).unwrap(), vec![true, false]);
        let empty = m.identity_class();
        assert_eq!(m.par_vec(&empty).unwrap(), vec![false, false]);
        assert_eq!(m.sg_vec(&empty).unwrap(), vec![false, false]);
    }

    #[test]
    fn real_sign_route() {
        let m = paper_curve();
        let a02 = m.class(&[0, 2]).unwrap();
        assert_eq!(m.b2_real_sign(&a02, &a02).unwrap(), Sign::Minus);
        let a01 = m.class(&[0, 1]).unwrap();
        assert_eq!(m.b2_real_sign(&a01, &a01).unwrap(), Sign::Plus);
        assert_eq!(
            m.b2_real_sign(&m.identity_class(), &a02).unwrap(),
            Sign::Plus
        );
        // matches the rational route everywhere it applies
        for s in m.classes() {
            for t in m.classes() {
                if let Ok(v) = m.b2(&s, &t) {
                    assert_eq!(v.real_sign(), m.b2_real_sign(&s, &t).unwrap());
                }
            }
        }
    }

    #[test]
    fn census_and_product() {
        let m = paper_curve();
        let signs: Vec<i64> = m
            .classes()
            .iter()
            .map(|c| m.q2(c).unwrap().real_sign().value())
            .collect();
        assert_eq!(signs.iter().filter(|&&s| s > 0).count(), 10);
        assert_eq!(signs.iter().filter(|&&s| s < 0).count(), 6);
        assert_eq!(m.signed_count(), 4);
        assert!(m.q2_product().is_one());

        let g1 = HyperellipticModel::from_int_roots(2, &[-2, 0, 1, 5]).unwrap();
        assert_eq!(g1.signed_count(), 2);
        assert_eq!(g1.q2_product(), sc(-1));
    }

    #[test]
    fn conjecture_lhs_shape() {
        let m = paper_curve();
        let lhs = m.conjecture_lhs();
        let inv = lhs.invariants();
        assert_eq!(inv.rank, 16);
        assert_eq!(inv.signature, 4);
        assert!(inv.discriminant.is_one());
    }

    #[test]
    fn divisor_evaluation() {
        let m = paper_curve();
        // f = (x−1)/x at 2·P₂ − 2·P₃
        let num = Poly::from_int_coeffs(&[-1, 1]);
        let den = Poly::from_int_coeffs(&[0, 1]);
        let d = [
            (DivisorPoint::Root(2), 2i64),
            (DivisorPoint::Root(3), -2i64),
        ];
        let v = m.divisor_eval(&num, &den, &d).unwrap();
        // f(2) = 1/2, f(3) = 2/3: (1/2)²·(2/3)^{−2} = 9/16
        assert_eq!(v, rat(9, 16));

        // constant f on a degree-0 divisor is 1
        let c = Poly::from_int_coeffs(&[7]);
        assert_eq!(
            m.divisor_eval(&c, &c, &d).unwrap(),
            Rational::one()
        );

        // support collision: evaluating (x−1)/x at P₀ = (0,0)
        assert_eq!(
            m.divisor_eval(&num, &den, &[(DivisorPoint::Root(0), 1)]),
            Err(Error::SupportCollision)
        );
        // degree mismatch
        assert_eq!(
            m.divisor_eval(&num, &Poly::one(), &d),
            Err(Error::DegreeMismatch)
        );
    }

    #[test]
    fn weil_reciprocity_example() {
        let m = paper_curve();
        let f = m.root_function(&[(0, 1), (1, -1)]).unwrap(); // x/(x−1)
        let g = m.root_function(&[(2, 1), (3, -1)]).unwrap(); // (x−2)/(x−3)
        assert!(m.weil_reciprocity(&f, &g).unwrap());

        // both sides are 16/9
        let (gn, gd) = g.numerator_denominator(&m);
        let div_f = [
            (DivisorPoint::Root(0), 2i64),
            (DivisorPoint::Root(1), -2i64),
        ];
        assert_eq!(m.divisor_eval(&gn, &gd, &div_f).unwrap(), rat(16, 9));

        let shared = m.root_function(&[(0, 1), (2, -1)]).unwrap();
        assert_eq!(m.weil_reciprocity(&f, &shared), Err(Error::SharedSupport));
        // a ratio of unequal degrees is rejected at construction
        assert_eq!(m.root_function(&[(0, 1)]), Err(Error::DegreeMismatch));
    }

    #[test]
    fn oracle_agrees_with_closed_form() {
        let m = paper_curve();
        for c in m.classes() {
            let direct = m.q2(&c).unwrap();
            let via_oracle = m.q2_via_divisor_oracle(&c, &rat(13, 2)).unwrap();
            assert_eq!(direct, via_oracle, "class {c}");
        }
    }

    #[test]
    fn quadratic_refinement_identity() {
        // q₂(S △ T) = e₂(S,T)·q₂(S)·q₂(T)
        let m = paper_curve();
        for s in m.classes() {
            for t in m.classes() {
                let sum = s.add(&t).unwrap();
                let lhs = m.q2(&sum).unwrap();
                let mut rhs = &m.q2(&s).unwrap() * &m.q2(&t).unwrap();
                if m.e2(&s, &t).unwrap() == Sign::Minus {
                    rhs = &rhs * &SquareClass::minus_one();
                }
                assert_eq!(lhs, rhs, "S={s} T={t}");
            }
        }
    }

    #[test]
    fn model_mismatch_detected() {
        let m1 = paper_curve();
        let m2 = HyperellipticModel::from_int_roots(1, &[0, 1, 2, 3]).unwrap();
        let c = m2.class(&[0, 1]).unwrap();
        assert_eq!(m1.q2(&c), Err(Error::ModelMismatch));
        let c1 = m1.class(&[0, 1]).unwrap();
        assert_eq!(m1.e2(&c1, &c), Err(Error::ModelMismatch));
    }
}
