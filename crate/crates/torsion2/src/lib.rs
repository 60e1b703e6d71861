//! Exact arithmetic for square-class pairings on 2-torsion of principally
//! polarized abelian varieties over ℚ and ℝ.
//!
//! The library has four layers:
//!
//! * [`rational`], [`square`], [`poly`] — exact rationals, square classes
//!   of ℚ^×/(ℚ^×)², Legendre and Hilbert symbols, and polynomial primitives;
//! * [`gw`] — diagonal quadratic forms over ℚ with rank, signature,
//!   discriminant and Hasse invariants, trace forms and transfers;
//! * [`f2`] — the symplectic F₂-model of the 2-torsion of a real abelian
//!   variety, with theta-characteristic counting;
//! * [`curves`] — the pairings e₂, b₂ and the sign invariant q₂ on
//!   2-torsion of elliptic curves and split hyperelliptic Jacobians,
//!   together with divisor-evaluation and Weil-reciprocity oracles.
//!
//! Everything is exact: no floating point anywhere.

pub mod curves;
mod error;
pub mod f2;
mod factor;
pub mod gw;
pub mod poly;
pub mod rational;
pub mod square;

pub use error::{Error, Result};
pub use poly::Poly;
pub use rational::Rational;
pub use square::{Place, Sign, SquareClass};

#[cfg(doctest)]
mod book {
    //! Keeps the guide's code blocks compiling; `cargo test --doc` runs
    //! every fenced snippet in `book/src/`.

    #[doc = include_str!("../../../book/src/introduction.md")]
    pub mod introduction {}

    #[doc = include_str!("../../../book/src/square-classes.md")]
    pub mod square_classes {}

    #[doc = include_str!("../../../book/src/pairings-on-curves.md")]
    pub mod pairings_on_curves {}

    #[doc = include_str!("../../../book/src/real-theta.md")]
    pub mod real_theta {}

    #[doc = include_str!("../../../book/src/grothendieck-witt.md")]
    pub mod grothendieck_witt {}
}
