//! The symplectic F₂-model of 2-torsion on a real abelian variety.
//!
//! Vectors live in Z₂^{2g}, split into an upper and a lower block of length
//! g with respect to a symplectic basis adapted to the real structure: real
//! points are exactly the vectors whose lower block is supported in the
//! first s coordinates. The Galois action is determined by a topological
//! type (g, s, a) — genus, number of real components minus one, and the
//! dividing bit — through an off-diagonal block matrix H.
//!
//! All theorem-level counts here are exhaustive enumerations over the
//! vector space; closed forms are asserted against them in the test suites,
//! never trusted.

use crate::error::{Error, Result};

/// A vector in Z₂^{2g} in symplectic coordinates, as an (upper, lower)
/// pair of g-bit blocks. Bit i holds coordinate i+1.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct F2Vector {
    g: u32,
    upper: u64,
    lower: u64,
}

impl F2Vector {
    pub fn new(g: u32, upper: u64, lower: u64) -> Result<F2Vector> {
        if g == 0 || g > 62 {
            return Err(Error::InvalidType(format!("g = {g} out of range")));
        }
        let mask = (1u64 << g) - 1;
        if upper & !mask != 0 || lower & !mask != 0 {
            return Err(Error::DimensionMismatch);
        }
        Ok(F2Vector { g, upper, lower })
    }

    pub fn zero(g: u32) -> F2Vector {
        F2Vector {
            g,
            upper: 0,
            lower: 0,
        }
    }

    /// Coordinate-order bit slices, index 0 first.
    pub fn from_bits(upper: &[u8], lower: &[u8]) -> Result<F2Vector> {
        if upper.len() != lower.len() || upper.is_empty() {
            return Err(Error::DimensionMismatch);
        }
        let pack = |bits: &[u8]| -> u64 {
            bits.iter()
                .enumerate()
                .fold(0u64, |acc, (i, &b)| acc | (u64::from(b & 1) << i))
        };
        F2Vector::new(upper.len() as u32, pack(upper), pack(lower))
    }

    pub fn g(&self) -> u32 {
        self.g
    }

    pub fn upper(&self) -> u64 {
        self.upper
    }

    pub fn lower(&self) -> u64 {
        self.lower
    }

    pub fn upper_bit(&self, i: u32) -> bool {
        (self.upper >> i) & 1 == 1
    }

    pub fn lower_bit(&self, i: u32) -> bool {
        (self.lower >> i) & 1 == 1
    }

    pub fn add(&self, other: &F2Vector) -> Result<F2Vector> {
        if self.g != other.g {
            return Err(Error::DimensionMismatch);
        }
        Ok(F2Vector {
            g: self.g,
            upper: self.upper ^ other.upper,
            lower: self.lower ^ other.lower,
        })
    }
}

impl std::fmt::Display for F2Vector {
    /// `(10|01)`: upper block then lower block, coordinates left to right.
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        let block = |bits: u64, g: u32| -> String {
            (0..g)
                .map(|i| if (bits >> i) & 1 == 1 { '1' } else { '0' })
                .collect()
        };
        write!(
            f,
            "({}|{})",
            block(self.upper, self.g),
            block(self.lower, self.g)
        )
    }
}

fn parity(x: u64) -> bool {
    x.count_ones() % 2 == 1
}

/// The standard symplectic form ⟨v,w⟩ = v_u·w_l + v_l·w_u mod 2.
pub fn symplectic(v: &F2Vector, w: &F2Vector) -> Result<bool> {
    if v.g != w.g {
        return Err(Error::DimensionMismatch);
    }
    Ok(parity(v.upper & w.lower) ^ parity(v.lower & w.upper))
}

/// The distinguished quadratic refinement q₀(v) = v_u·v_l.
pub fn q0(v: &F2Vector) -> bool {
    parity(v.upper & v.lower)
}

/// q_c(v) = q₀(v) + ⟨c,v⟩, the refinement attached to the theta
/// characteristic c + η₀.
pub fn qc(c: &F2Vector, v: &F2Vector) -> Result<bool> {
    Ok(q0(v) ^ symplectic(c, v)?)
}

/// Arf invariant of q_c; the characteristic c + η₀ is odd iff this is 1.
pub fn arf(c: &F2Vector) -> bool {
    q0(c)
}

/// Topological type of a real curve: genus g, s+1 real components, and
/// a = 1 iff the complement of the real locus in the complex locus is
/// connected.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct RealCurveType {
    g: u32,
    s: u32,
    a: u8,
}

impl RealCurveType {
    /// Validity: s ≤ g; a = 0 forces g − s even (the symmetric off-diagonal
    /// block decomposes into 2×2 swaps); a = 1 forces s < g (the block is
    /// an identity of positive size).
    pub fn new(g: u32, s: u32, a: u8) -> Result<RealCurveType> {
        if g == 0 || g > 30 {
            return Err(Error::InvalidType(format!("g = {g} out of range")));
        }
        if a > 1 {
            return Err(Error::InvalidType(format!("a = {a} must be 0 or 1")));
        }
        if s > g {
            return Err(Error::InvalidType(format!("s = {s} exceeds g = {g}")));
        }
        if a == 0 && !(g - s).is_multiple_of(2) {
            return Err(Error::InvalidType(format!(
                "a = 0 requires g - s even, got g = {g}, s = {s}"
            )));
        }
        if a == 1 && s == g {
            return Err(Error::InvalidType(format!(
                "a = 1 requires s < g, got s = g = {g}"
            )));
        }
        Ok(RealCurveType { g, s, a })
    }

    pub fn g(&self) -> u32 {
        self.g
    }

    pub fn s(&self) -> u32 {
        self.s
    }

    pub fn a(&self) -> u8 {
        self.a
    }

    pub fn galois_matrix(&self) -> GaloisMatrix {
        GaloisMatrix::for_type(self)
    }

    /// The vector h with q₀∘σ = q_h: the sum of the last g−s upper basis
    /// vectors when a = 1, zero when a = 0.
    pub fn h_vector(&self) -> F2Vector {
        let upper = if self.a == 1 {
            let mask = (1u64 << self.g) - 1;
            mask & !((1u64 << self.s) - 1)
        } else {
            0
        };
        F2Vector {
            g: self.g,
            upper,
            lower: 0,
        }
    }
}

impl std::fmt::Display for RealCurveType {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "(g, s, a) = ({}, {}, {})", self.g, self.s, self.a)
    }
}

/// The off-diagonal block of the complex-conjugation matrix: H = diag(0_s, H′)
/// with H′ the identity (a = 1) or a chain of 2×2 swap blocks (a = 0);
/// rank g − s either way.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GaloisMatrix {
    g: u32,
    s: u32,
    rows: Vec<u64>,
}

impl GaloisMatrix {
    fn for_type(t: &RealCurveType) -> GaloisMatrix {
        let mut rows = vec![0u64; t.g as usize];
        if t.a == 1 {
            for i in t.s..t.g {
                rows[i as usize] = 1u64 << i;
            }
        } else {
            let mut i = t.s;
            while i < t.g {
                rows[i as usize] = 1u64 << (i + 1);
                rows[(i + 1) as usize] = 1u64 << i;
                i += 2;
            }
        }
        GaloisMatrix {
            g: t.g,
            s: t.s,
            rows,
        }
    }

    pub fn rank(&self) -> u32 {
        self.g - self.s
    }

    /// H·x for a g-bit column x.
    pub fn apply(&self, x: u64) -> u64 {
        let mut out = 0u64;
        for (i, row) in self.rows.iter().enumerate() {
            if parity(row & x) {
                out |= 1u64 << i;
            }
        }
        out
    }
}

/// Complex conjugation in coordinates: (c_u, c_l) ↦ (c_u + H·c_l, c_l).
/// An involution that preserves the symplectic form.
pub fn sigma_apply(t: &RealCurveType, v: &F2Vector) -> Result<F2Vector> {
    if v.g != t.g {
        return Err(Error::DimensionMismatch);
    }
    let h = t.galois_matrix();
    Ok(F2Vector {
        g: v.g,
        upper: v.upper ^ h.apply(v.lower),
        lower: v.lower,
    })
}

/// The fixed space of σ: all vectors whose lower block is supported in the
/// first s coordinates. Cardinality 2^{g+s}.
pub fn real_points(t: &RealCurveType) -> Vec<F2Vector> {
    let mut out = Vec::with_capacity(1usize << (t.g + t.s));
    for upper in 0..1u64 << t.g {
        for lower in 0..1u64 << t.s {
            out.push(F2Vector {
                g: t.g,
                upper,
                lower,
            });
        }
    }
    out
}

/// Σ over real 2-torsion of (−1)^{q₀}; equals 2^g for every valid type.
pub fn signed_count(t: &RealCurveType) -> i64 {
    let mut total = 0i64;
    for upper in 0..1u64 << t.g {
        for lower in 0..1u64 << t.s {
            total += if parity(upper & lower) { -1 } else { 1 };
        }
    }
    total
}

/// Whether c + η₀ is a real theta characteristic: the last g−s entries of
/// c_l must all equal a.
pub fn is_real_theta(t: &RealCurveType, c: &F2Vector) -> Result<bool> {
    if c.g != t.g {
        return Err(Error::DimensionMismatch);
    }
    let tail = ((1u64 << t.g) - 1) & !((1u64 << t.s) - 1);
    let expected = if t.a == 1 { tail } else { 0 };
    Ok(c.lower & tail == expected)
}

/// Offsets from the reference data: u1 is the semi-orientation class
/// relative to the reference and eps the parity vector, both of length s.
/// The reference itself is the zero pair; for a = 0 it is pinned to the
/// distinguished characteristic η₀, which induces the complex
/// semi-orientation and has parity (1,…,1).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct OrientationParity {
    u1: Vec<bool>,
    eps: Vec<bool>,
}

impl OrientationParity {
    pub fn new(u1: Vec<bool>, eps: Vec<bool>) -> OrientationParity {
        OrientationParity { u1, eps }
    }

    pub fn trivial(s: u32) -> OrientationParity {
        OrientationParity {
            u1: vec![false; s as usize],
            eps: vec![false; s as usize],
        }
    }

    pub fn u1(&self) -> &[bool] {
        &self.u1
    }

    pub fn eps(&self) -> &[bool] {
        &self.eps
    }

    fn u1_bits(&self) -> u64 {
        self.u1
            .iter()
            .enumerate()
            .fold(0, |acc, (i, &b)| acc | (u64::from(b) << i))
    }

    fn eps_bits(&self) -> u64 {
        self.eps
            .iter()
            .enumerate()
            .fold(0, |acc, (i, &b)| acc | (u64::from(b) << i))
    }
}

/// Brute-force census of real theta characteristics with the given
/// orientation and parity offsets: (number even, number odd).
pub fn theta_counts(t: &RealCurveType, op: &OrientationParity) -> Result<(u64, u64)> {
    if op.u1.len() != t.s as usize || op.eps.len() != t.s as usize {
        return Err(Error::DimensionMismatch);
    }
    let low_mask = (1u64 << t.s) - 1;
    let u1 = op.u1_bits();
    // lower block: parities sit against the reference parity, which is
    // all-ones for a = 0 (the parity of η₀) and the zero reference for a = 1
    let u2 = if t.a == 0 {
        !op.eps_bits() & low_mask
    } else {
        op.eps_bits()
    };
    let tail = ((1u64 << t.g) - 1) & !low_mask;
    let lower = if t.a == 1 { u2 | tail } else { u2 };
    let (mut even, mut odd) = (0u64, 0u64);
    for free in 0..1u64 << (t.g - t.s) {
        let upper = u1 | (free << t.s);
        if parity(upper & lower) {
            odd += 1;
        } else {
            even += 1;
        }
    }
    Ok((even, odd))
}

/// The closed-form prediction for [`theta_counts`]: a = 1 gives an even
/// split 2^{g−s−1}/2^{g−s−1}; a = 0 puts all 2^{g−s} on one side, decided
/// by the parity of n = #{i : u1ᵢ = 1 and epsᵢ = 0}.
pub fn theta_counts_predicted(t: &RealCurveType, op: &OrientationParity) -> Result<(u64, u64)> {
    if op.u1.len() != t.s as usize || op.eps.len() != t.s as usize {
        return Err(Error::DimensionMismatch);
    }
    if t.a == 1 {
        let half = 1u64 << (t.g - t.s - 1);
        Ok((half, half))
    } else {
        let n = op
            .u1
            .iter()
            .zip(op.eps.iter())
            .filter(|(&u, &e)| u && !e)
            .count();
        let all = 1u64 << (t.g - t.s);
        if n % 2 == 0 {
            Ok((all, 0))
        } else {
            Ok((0, all))
        }
    }
}

/// Σ over real 2-torsion b with arf(q_{b+ν}) = 1 of (−1)^{q₀(b)}; equals
/// 2^{g−1} for every admissible ν.
///
/// ν must be a real theta characteristic vector; when a = 0 its first-s
/// upper block must be nonzero (a zero block means ν induces the complex
/// semi-orientation, where the count degenerates).
pub fn odd_theta_signed_sum(t: &RealCurveType, nu: &F2Vector) -> Result<i64> {
    if !is_real_theta(t, nu)? {
        return Err(Error::NotRealTheta);
    }
    if t.a == 0 && nu.upper & ((1u64 << t.s) - 1) == 0 {
        return Err(Error::ComplexSemiOrientation);
    }
    let mut total = 0i64;
    for upper in 0..1u64 << t.g {
        for lower in 0..1u64 << t.s {
            if parity((upper ^ nu.upper) & (lower ^ nu.lower)) {
                total += if parity(upper & lower) { -1 } else { 1 };
            }
        }
    }
    Ok(total)
}

/// #{a : a_l = 0, arf(q_{a+c}) = 1}, always 2^{g−1} when c_l ≠ 0.
pub fn lagrangian_odd_count(t: &RealCurveType, c: &F2Vector) -> Result<u64> {
    if c.g != t.g {
        return Err(Error::DimensionMismatch);
    }
    if c.lower == 0 {
        return Err(Error::ZeroLowerBlock);
    }
    let mut count = 0u64;
    for upper in 0..1u64 << t.g {
        if parity((upper ^ c.upper) & c.lower) {
            count += 1;
        }
    }
    Ok(count)
}

fn binomial(n: u64, k: u64) -> u64 {
    if k > n {
        return 0;
    }
    let k = k.min(n - k);
    let mut acc: u128 = 1;
    for i in 0..k {
        acc = acc * u128::from(n - i) / u128::from(i + 1);
    }
    acc as u64
}

/// Lower bound binom(s+1, g−1)·2^{g−1} on the number of totally real odd
/// theta characteristics, valid when g ≤ s + a + 1.
pub fn totally_real_lower_bound(t: &RealCurveType) -> Result<u64> {
    if t.g > t.s + u32::from(t.a) + 1 {
        return Err(Error::OutOfRegime);
    }
    Ok(binomial(u64::from(t.s) + 1, u64::from(t.g) - 1) << (t.g - 1))
}

/// All valid types with genus at most `max_g`, for exhaustive suites.
pub fn all_valid_types(max_g: u32) -> Vec<RealCurveType> {
    let mut out = Vec::new();
    for g in 1..=max_g {
        for s in 0..=g {
            for a in 0..=1u8 {
                if let Ok(t) = RealCurveType::new(g, s, a) {
                    out.push(t);
                }
            }
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    fn v(g: u32, upper: u64, lower: u64) -> F2Vector {
        F2Vector::new(g, upper, lower).unwrap()
    }

    #[test]
    fn symplectic_form() {
        // basis pair v_1, w_1 at g = 2
        let v1 = v(2, 0b01, 0);
        let w1 = v(2, 0, 0b01);
        assert!(symplectic(&v1, &w1).unwrap());
        assert!(!symplectic(&v1, &v1).unwrap());
        // (10|01) vs (01|10)
        let x = v(2, 0b01, 0b10);
        let y = v(2, 0b10, 0b01);
        assert!(!symplectic(&x, &y).unwrap());
        assert_eq!(symplectic(&v1, &v(3, 0, 0)), Err(Error::DimensionMismatch));
    }

    #[test]
    fn quadratic_refinements() {
        assert!(!q0(&F2Vector::zero(3)));
        // only (1|1) is odd at g = 1
        let odd: Vec<_> = (0..2u64)
            .flat_map(|u| (0..2u64).map(move |l| (u, l)))
            .filter(|&(u, l)| arf(&v(1, u, l)))
            .collect();
        assert_eq!(odd, vec![(1, 1)]);
        // polarization identity
        for cu in 0..4u64 {
            for cl in 0..4u64 {
                for vu in 0..4u64 {
                    for vl in 0..4u64 {
                        let c = v(2, cu, cl);
                        let w = v(2, vu, vl);
                        assert_eq!(qc(&c, &w).unwrap() ^ q0(&w), symplectic(&c, &w).unwrap());
                    }
                }
            }
        }
    }

    #[test]
    fn type_validity() {
        assert!(RealCurveType::new(2, 1, 1).is_ok());
        assert!(RealCurveType::new(2, 2, 0).is_ok());
        assert!(RealCurveType::new(2, 0, 0).is_ok());
        assert!(matches!(
            RealCurveType::new(2, 1, 0),
            Err(Error::InvalidType(_))
        ));
        assert!(matches!(
            RealCurveType::new(2, 2, 1),
            Err(Error::InvalidType(_))
        ));
        assert!(matches!(
            RealCurveType::new(2, 3, 0),
            Err(Error::InvalidType(_))
        ));
    }

    #[test]
    fn sigma_action() {
        let t = RealCurveType::new(2, 1, 1).unwrap();
        // real basis vectors are fixed
        let fixed = v(2, 0b11, 0);
        assert_eq!(sigma_apply(&t, &fixed).unwrap(), fixed);
        // second lower coordinate picks up the H' = identity block
        let w = v(2, 0, 0b10);
        let sw = sigma_apply(&t, &w).unwrap();
        assert_eq!(sw, v(2, 0b10, 0b10));
        assert_eq!(sw.to_string(), "(01|01)");
    }

    #[test]
    fn sigma_is_symplectic_involution() {
        for t in all_valid_types(4) {
            let g = t.g();
            assert_eq!(t.galois_matrix().rank(), g - t.s());
            for cu in 0..1u64 << g {
                for cl in 0..1u64 << g {
                    let x = v(g, cu, cl);
                    let sx = sigma_apply(&t, &x).unwrap();
                    assert_eq!(sigma_apply(&t, &sx).unwrap(), x);
                }
            }
            // preserves the symplectic form
            for cu in 0..1u64 << g {
                for cl in 0..1u64 << g {
                    let x = v(g, cu, cl);
                    let y = v(g, cl, cu);
                    let sx = sigma_apply(&t, &x).unwrap();
                    let sy = sigma_apply(&t, &y).unwrap();
                    assert_eq!(symplectic(&x, &y).unwrap(), symplectic(&sx, &sy).unwrap());
                }
            }
        }
    }

    #[test]
    fn sigma_twists_q0_by_h() {
        // q₀∘σ = q_h exhaustively
        for t in all_valid_types(4) {
            let h = t.h_vector();
            let g = t.g();
            for cu in 0..1u64 << g {
                for cl in 0..1u64 << g {
                    let x = v(g, cu, cl);
                    let sx = sigma_apply(&t, &x).unwrap();
                    assert_eq!(q0(&sx), qc(&h, &x).unwrap(), "{t} at {x}");
                }
            }
        }
    }

    #[test]
    fn real_point_census() {
        let t = RealCurveType::new(1, 0, 1).unwrap();
        let pts = real_points(&t);
        assert_eq!(pts, vec![v(1, 0, 0), v(1, 1, 0)]);

        let t = RealCurveType::new(2, 2, 0).unwrap();
        assert_eq!(real_points(&t).len(), 16);

        for t in all_valid_types(6) {
            assert_eq!(real_points(&t).len(), 1usize << (t.g() + t.s()), "{t}");
        }
    }

    #[test]
    fn signed_counts() {
        assert_eq!(signed_count(&RealCurveType::new(1, 0, 1).unwrap()), 2);
        assert_eq!(signed_count(&RealCurveType::new(2, 2, 0).unwrap()), 4);
        for t in all_valid_types(6) {
            assert_eq!(signed_count(&t), 1i64 << t.g(), "{t}");
        }
    }

    #[test]
    fn real_theta_characteristics() {
        let t0 = RealCurveType::new(2, 0, 0).unwrap();
        assert!(is_real_theta(&t0, &F2Vector::zero(2)).unwrap());
        let t1 = RealCurveType::new(2, 1, 1).unwrap();
        assert!(!is_real_theta(&t1, &F2Vector::zero(2)).unwrap());

        for t in all_valid_types(5) {
            let g = t.g();
            let count = (0..1u64 << g)
                .flat_map(|u| (0..1u64 << g).map(move |l| (u, l)))
                .filter(|&(u, l)| is_real_theta(&t, &v(g, u, l)).unwrap())
                .count();
            assert_eq!(count, 1usize << (g + t.s()), "{t}");
        }
    }

    #[test]
    fn real_theta_matches_fixed_refinements() {
        // c + η₀ real ⟺ q_c ∘ σ = q_c
        for t in all_valid_types(4) {
            let g = t.g();
            for cu in 0..1u64 << g {
                for cl in 0..1u64 << g {
                    let c = v(g, cu, cl);
                    let invariant = (0..1u64 << g)
                        .flat_map(|u| (0..1u64 << g).map(move |l| (u, l)))
                        .all(|(u, l)| {
                            let w = v(g, u, l);
                            let sw = sigma_apply(&t, &w).unwrap();
                            qc(&c, &sw).unwrap() == qc(&c, &w).unwrap()
                        });
                    assert_eq!(is_real_theta(&t, &c).unwrap(), invariant, "{t} {c}");
                }
            }
        }
    }

    #[test]
    fn arf_census() {
        for g in 1..=6u32 {
            let odd = (0..1u64 << g)
                .flat_map(|u| (0..1u64 << g).map(move |l| (u, l)))
                .filter(|&(u, l)| arf(&v(g, u, l)))
                .count() as u64;
            assert_eq!(odd, (1u64 << (g - 1)) * ((1u64 << g) - 1));
        }
    }

    #[test]
    fn theta_count_examples() {
        let t = RealCurveType::new(2, 1, 1).unwrap();
        for u1 in [false, true] {
            for e in [false, true] {
                let op = OrientationParity::new(vec![u1], vec![e]);
                assert_eq!(theta_counts(&t, &op).unwrap(), (1, 1));
            }
        }

        let t = RealCurveType::new(2, 2, 0).unwrap();
        // n even: the trivial offset pair
        let op = OrientationParity::trivial(2);
        assert_eq!(theta_counts(&t, &op).unwrap(), (1, 0));
        // n odd: one component with u1 = 1, eps = 0
        let op = OrientationParity::new(vec![true, false], vec![false, true]);
        assert_eq!(theta_counts(&t, &op).unwrap(), (0, 1));

        let t = RealCurveType::new(3, 0, 1).unwrap();
        let op = OrientationParity::trivial(0);
        assert_eq!(theta_counts(&t, &op).unwrap(), (4, 4));
    }

    #[test]
    fn theta_counts_match_closed_forms() {
        for t in all_valid_types(5) {
            let s = t.s();
            for u1 in 0..1u64 << s {
                for eps in 0..1u64 << s {
                    let op = OrientationParity::new(
                        (0..s).map(|i| (u1 >> i) & 1 == 1).collect(),
                        (0..s).map(|i| (eps >> i) & 1 == 1).collect(),
                    );
                    assert_eq!(
                        theta_counts(&t, &op).unwrap(),
                        theta_counts_predicted(&t, &op).unwrap(),
                        "{t} u1={u1:b} eps={eps:b}"
                    );
                }
            }
        }
    }

    #[test]
    fn theta_counts_sum_to_real_theta_census() {
        for t in all_valid_types(5) {
            let s = t.s();
            let mut total = 0u64;
            for u1 in 0..1u64 << s {
                for eps in 0..1u64 << s {
                    let op = OrientationParity::new(
                        (0..s).map(|i| (u1 >> i) & 1 == 1).collect(),
                        (0..s).map(|i| (eps >> i) & 1 == 1).collect(),
                    );
                    let (e, o) = theta_counts(&t, &op).unwrap();
                    total += e + o;
                }
            }
            assert_eq!(total, 1u64 << (t.g() + s), "{t}");
        }
    }

    #[test]
    fn odd_signed_sum_examples() {
        let t = RealCurveType::new(2, 2, 0).unwrap();
        let nu = v(2, 0b01, 0);
        assert_eq!(odd_theta_signed_sum(&t, &nu).unwrap(), 2);

        let t = RealCurveType::new(1, 1, 0).unwrap();
        let nu = v(1, 1, 0);
        assert_eq!(odd_theta_signed_sum(&t, &nu).unwrap(), 1);
    }

    #[test]
    fn odd_signed_sum_errors() {
        let t = RealCurveType::new(2, 2, 0).unwrap();
        assert_eq!(
            odd_theta_signed_sum(&t, &F2Vector::zero(2)),
            Err(Error::ComplexSemiOrientation)
        );
        let t1 = RealCurveType::new(2, 1, 1).unwrap();
        assert_eq!(
            odd_theta_signed_sum(&t1, &F2Vector::zero(2)),
            Err(Error::NotRealTheta)
        );
        // a = 0, s = 0: every real theta characteristic is excluded
        let t00 = RealCurveType::new(2, 0, 0).unwrap();
        assert_eq!(
            odd_theta_signed_sum(&t00, &v(2, 0b11, 0)),
            Err(Error::ComplexSemiOrientation)
        );
    }

    #[test]
    fn odd_signed_sum_independent_of_nu() {
        for t in all_valid_types(5) {
            let g = t.g();
            for cu in 0..1u64 << g {
                for cl in 0..1u64 << g {
                    let nu = v(g, cu, cl);
                    match odd_theta_signed_sum(&t, &nu) {
                        Ok(total) => assert_eq!(total, 1i64 << (g - 1), "{t} {nu}"),
                        Err(Error::NotRealTheta) => {
                            assert!(!is_real_theta(&t, &nu).unwrap())
                        }
                        Err(Error::ComplexSemiOrientation) => {
                            assert!(t.a() == 0 && nu.upper() & ((1 << t.s()) - 1) == 0)
                        }
                        Err(e) => panic!("unexpected error {e:?}"),
                    }
                }
            }
        }
    }

    #[test]
    fn lagrangian_counts() {
        let t = RealCurveType::new(2, 2, 0).unwrap();
        assert_eq!(lagrangian_odd_count(&t, &v(2, 0, 0b01)).unwrap(), 2);
        let t1 = RealCurveType::new(1, 1, 0).unwrap();
        assert_eq!(lagrangian_odd_count(&t1, &v(1, 0, 1)).unwrap(), 1);
        assert_eq!(
            lagrangian_odd_count(&t, &v(2, 0b11, 0)),
            Err(Error::ZeroLowerBlock)
        );
        for t in all_valid_types(5) {
            let g = t.g();
            for cu in 0..1u64 << g {
                for cl in 1..1u64 << g {
                    assert_eq!(
                        lagrangian_odd_count(&t, &v(g, cu, cl)).unwrap(),
                        1u64 << (g - 1)
                    );
                }
            }
        }
    }

    #[test]
    fn totally_real_bounds() {
        let t = RealCurveType::new(3, 2, 1).unwrap();
        assert_eq!(totally_real_lower_bound(&t).unwrap(), 12);
        let t = RealCurveType::new(2, 0, 1).unwrap();
        assert_eq!(totally_real_lower_bound(&t).unwrap(), 2);
        // M-curve of genus 3: binom(4, 2)·4
        let t = RealCurveType::new(3, 3, 0).unwrap();
        assert_eq!(totally_real_lower_bound(&t).unwrap(), 24);
        let t = RealCurveType::new(4, 1, 1).unwrap();
        assert_eq!(totally_real_lower_bound(&t), Err(Error::OutOfRegime));
    }
}
