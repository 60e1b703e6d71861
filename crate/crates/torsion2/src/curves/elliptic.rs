//! Elliptic curves y² = p(x) and the pairing on their 2-torsion.

use num_traits::Zero;

use crate::error::{Error, Result};
use crate::gw::{self, GwElement};
use crate::poly::Poly;
use crate::rational::{signum, Rational};
use crate::square::{square_class, SquareClass};

/// y² = p(x) with p a squarefree cubic. The leading coefficient u is kept
/// separate, so p = u·(monic part); the pairing values only depend on the
/// monic part for the diagonal and pick up u off the diagonal.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct EllipticModel {
    u: Rational,
    monic: Poly,
}

impl EllipticModel {
    pub fn new(p: &Poly) -> Result<EllipticModel> {
        if p.degree() != Some(3) {
            return Err(Error::InvalidModel(format!(
                "expected a cubic, got degree {:?}",
                p.degree()
            )));
        }
        if p.discriminant().is_none_or(|d| d.is_zero()) {
            return Err(Error::NotSquarefree);
        }
        Ok(EllipticModel {
            u: p.leading(),
            monic: p.monic(),
        })
    }

    /// Leading coefficient u.
    pub fn u(&self) -> &Rational {
        &self.u
    }

    pub fn monic_part(&self) -> &Poly {
        &self.monic
    }

    /// The full right-hand side u·(monic part).
    pub fn rhs(&self) -> Poly {
        self.monic.scale(&self.u)
    }

    /// The x-coordinates of the rational nontrivial 2-torsion points,
    /// ascending.
    pub fn two_torsion_roots(&self) -> Vec<Rational> {
        self.monic.rational_roots()
    }

    /// q₂ at the 2-torsion point (z, 0): the square class of p′(z)/u.
    ///
    /// With f = (x−zⱼ)(x−zₖ)/(x−c)², the value f(z)/f(∞) is p′(z)/u up to
    /// squares, independent of the auxiliary c.
    pub fn q2(&self, z: &Rational) -> Result<SquareClass> {
        if !self.monic.eval(z).is_zero() {
            return Err(Error::NotARoot(z.to_string()));
        }
        square_class(&self.monic.derivative().eval(z))
    }

    /// b₂ of two distinct rational 2-torsion points: the square class of
    /// u·(zᵢ − zⱼ), cut by a line through (zⱼ, 0) — the slope only enters
    /// squared, so the value does not depend on it.
    pub fn b2_offdiag(&self, z_i: &Rational, z_j: &Rational) -> Result<SquareClass> {
        if !self.monic.eval(z_i).is_zero() {
            return Err(Error::NotARoot(z_i.to_string()));
        }
        if !self.monic.eval(z_j).is_zero() {
            return Err(Error::NotARoot(z_j.to_string()));
        }
        if z_i == z_j {
            return Err(Error::EqualRoots);
        }
        square_class(&(&self.u * (z_i - z_j)))
    }

    /// 1 (for the origin) plus the sum of the real signs of q₂ over the
    /// real 2-torsion points; always 2.
    ///
    /// Signs of irrational points would need real-algebraic arithmetic, so
    /// a cubic with an irrational real root is rejected instead of
    /// approximated.
    pub fn signed_count(&self) -> Result<i64> {
        let roots = self.two_torsion_roots();
        let mut rest = self.monic.clone();
        for z in &roots {
            let lin = Poly::new(vec![-z.clone(), Rational::from_integer(1.into())]);
            rest = rest.div_rem(&lin).0;
        }
        match rest.degree() {
            Some(0) => {}
            Some(2) => {
                let disc = rest.discriminant().expect("quadratic");
                if signum(&disc) > 0 {
                    return Err(Error::IrrationalRealRoot);
                }
            }
            // a real cubic without rational roots still has a real root
            _ => return Err(Error::IrrationalRealRoot),
        }
        let mut total = 1i64;
        for z in &roots {
            total += self.q2(z)?.real_sign().value();
        }
        Ok(total)
    }

    /// ⟨1⟩ ⊥ (the weighted trace form of the monic part): rank 4.
    ///
    /// Models with u ≠ 1 are rescaled to the monic Weierstrass model via
    /// (x, y) ↦ (ux, uy), which leaves every q₂ class unchanged.
    pub fn conjecture_lhs(&self) -> Result<GwElement> {
        let trace = gw::trace_form_weighted(&self.monic)?;
        Ok(gw::gw_sum(&GwElement::units(1, 0), &trace))
    }
}
