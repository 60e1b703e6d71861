//! Pairings on 2-torsion of curves over ℚ.
//!
//! Two families of models are supported exactly:
//!
//! * [`EllipticModel`] — y² = p(x) with p a squarefree cubic; 2-torsion
//!   points are the rational roots of p.
//! * [`HyperellipticModel`] — y² = u·Π(x − zᵢ) with 2g+2 distinct rational
//!   roots; 2-torsion classes are even subsets of Weierstrass indices
//!   modulo complement, and all of the 2-torsion is rational.
//!
//! The sign invariant q₂ and the pairing b₂ are computed by closed-form
//! products of root differences; an independent divisor-evaluation oracle
//! and a component-sign route are provided to cross-check them.

mod elliptic;
mod hyper;

pub use elliptic::EllipticModel;
pub use hyper::{
    ComponentDecomposition, DivisorPoint, HyperellipticModel, Interval, RealComponent,
    RootFunction, TwoTorsionClass,
};
