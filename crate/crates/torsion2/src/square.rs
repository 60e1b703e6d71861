//! Square classes of ℚ^×/(ℚ^×)² and the local symbols used to compare
//! quadratic forms.
//!
//! A square class is canonically a signed squarefree integer: a sign and a
//! strictly increasing list of primes. Canonical forms make equality,
//! hashing and ordering trivial.

use std::cmp::Ordering;
use std::fmt;
use std::ops::{Mul, Neg};

use num_bigint::{BigInt, BigUint};
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};
use crate::factor;
use crate::rational::Rational;

/// A sign, the image of a square class in ℝ^×/(ℝ^×)² ≅ {±1}.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Sign {
    Plus,
    Minus,
}

impl Sign {
    pub fn value(self) -> i64 {
        match self {
            Sign::Plus => 1,
            Sign::Minus => -1,
        }
    }

    pub fn of_rational(r: &Rational) -> Sign {
        if r.is_negative() {
            Sign::Minus
        } else {
            Sign::Plus
        }
    }

    pub fn from_parity(odd: bool) -> Sign {
        if odd {
            Sign::Minus
        } else {
            Sign::Plus
        }
    }
}

impl Mul for Sign {
    type Output = Sign;
    fn mul(self, rhs: Sign) -> Sign {
        if self == rhs {
            Sign::Plus
        } else {
            Sign::Minus
        }
    }
}

impl Neg for Sign {
    type Output = Sign;
    fn neg(self) -> Sign {
        match self {
            Sign::Plus => Sign::Minus,
            Sign::Minus => Sign::Plus,
        }
    }
}

impl fmt::Display for Sign {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Sign::Plus => write!(f, "+1"),
            Sign::Minus => write!(f, "-1"),
        }
    }
}

/// An element of ℚ^×/(ℚ^×)², stored as a signed squarefree integer.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct SquareClass {
    sign: Sign,
    primes: Vec<BigUint>,
}

impl SquareClass {
    /// The class of 1.
    pub fn one() -> SquareClass {
        SquareClass {
            sign: Sign::Plus,
            primes: Vec::new(),
        }
    }

    /// The class of −1.
    pub fn minus_one() -> SquareClass {
        SquareClass {
            sign: Sign::Minus,
            primes: Vec::new(),
        }
    }

    pub fn is_one(&self) -> bool {
        self.sign == Sign::Plus && self.primes.is_empty()
    }

    pub fn sign(&self) -> Sign {
        self.sign
    }

    pub fn primes(&self) -> &[BigUint] {
        &self.primes
    }

    /// Image in ℝ^×/(ℝ^×)² ≅ {±1}.
    pub fn real_sign(&self) -> Sign {
        self.sign
    }

    pub fn divisible_by(&self, p: &BigUint) -> bool {
        self.primes.binary_search(p).is_ok()
    }

    /// |representative|: the product of the primes.
    pub fn magnitude(&self) -> BigUint {
        self.primes.iter().product()
    }

    /// The canonical signed squarefree representative.
    pub fn to_integer(&self) -> BigInt {
        let m = BigInt::from(self.magnitude());
        match self.sign {
            Sign::Plus => m,
            Sign::Minus => -m,
        }
    }
}

/// Square class of a nonzero rational. `square_class(r·s²) = square_class(r)`
/// for every nonzero rational s; num/den and num·den land in the same class,
/// which keeps the factorization integral.
pub fn square_class(r: &Rational) -> Result<SquareClass> {
    if r.is_zero() {
        return Err(Error::ZeroInput);
    }
    let n = r.numer() * r.denom();
    let sign = if n.is_negative() {
        Sign::Minus
    } else {
        Sign::Plus
    };
    let primes = factor::factorize(n.magnitude())
        .into_iter()
        .filter(|(_, e)| e % 2 == 1)
        .map(|(p, _)| p)
        .collect();
    Ok(SquareClass { sign, primes })
}

/// Square class of a nonzero integer.
pub fn square_class_of_int(n: i64) -> Result<SquareClass> {
    square_class(&Rational::from_integer(BigInt::from(n)))
}

impl Mul for &SquareClass {
    type Output = SquareClass;

    /// Group law: product of signs, symmetric difference of prime lists.
    fn mul(self, rhs: &SquareClass) -> SquareClass {
        let mut primes = Vec::with_capacity(self.primes.len() + rhs.primes.len());
        let (mut i, mut j) = (0, 0);
        while i < self.primes.len() && j < rhs.primes.len() {
            match self.primes[i].cmp(&rhs.primes[j]) {
                Ordering::Less => {
                    primes.push(self.primes[i].clone());
                    i += 1;
                }
                Ordering::Greater => {
                    primes.push(rhs.primes[j].clone());
                    j += 1;
                }
                Ordering::Equal => {
                    i += 1;
                    j += 1;
                }
            }
        }
        primes.extend_from_slice(&self.primes[i..]);
        primes.extend_from_slice(&rhs.primes[j..]);
        SquareClass {
            sign: self.sign * rhs.sign,
            primes,
        }
    }
}

impl Mul for SquareClass {
    type Output = SquareClass;
    fn mul(self, rhs: SquareClass) -> SquareClass {
        &self * &rhs
    }
}

impl PartialOrd for SquareClass {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for SquareClass {
    /// Positive classes first, then by magnitude; a stable order for
    /// canonical multisets of form entries.
    fn cmp(&self, other: &Self) -> Ordering {
        self.sign
            .cmp(&other.sign)
            .then_with(|| self.magnitude().cmp(&other.magnitude()))
    }
}

impl fmt::Display for SquareClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.to_integer())
    }
}

/// A place of ℚ: the real place or a finite prime.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Place {
    Real,
    Finite(BigUint),
}

impl Place {
    pub fn finite(p: u64) -> Place {
        Place::Finite(BigUint::from(p))
    }
}

impl fmt::Display for Place {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Place::Real => write!(f, "real"),
            Place::Finite(p) => write!(f, "{p}"),
        }
    }
}

/// Legendre symbol (a|p) for an odd prime p.
pub fn legendre(a: &BigInt, p: &BigUint) -> Result<i32> {
    if p == &BigUint::from(2u32) || !factor::is_prime(p) {
        return Err(Error::BadPrime(p.to_string()));
    }
    let pb = BigInt::from(p.clone());
    let a_mod = a.mod_floor(&pb);
    if a_mod.is_zero() {
        return Ok(0);
    }
    let exp = (p - BigUint::one()) >> 1;
    let r = a_mod.modpow(&BigInt::from(exp), &pb);
    if r.is_one() {
        Ok(1)
    } else {
        Ok(-1)
    }
}

fn eps_mod2(u: &BigInt) -> u8 {
    // (u-1)/2 mod 2 for odd u.
    if u.mod_floor(&BigInt::from(4)) == BigInt::from(3) {
        1
    } else {
        0
    }
}

fn omega_mod2(u: &BigInt) -> u8 {
    // (u^2-1)/8 mod 2 for odd u.
    let m = u.mod_floor(&BigInt::from(8));
    if m == BigInt::from(3) || m == BigInt::from(5) {
        1
    } else {
        0
    }
}

/// Hilbert symbol (a,b)_v on ℚ^× × ℚ^×. Bimultiplicative in each slot and
/// symmetric; the product over all places is +1.
///
/// At p = 2 the standard ε/ω formula on odd parts is used; at odd p the tame
/// formula with Legendre symbols. Only the square classes of a and b matter.
pub fn hilbert_symbol(a: &Rational, b: &Rational, v: &Place) -> Result<Sign> {
    if a.is_zero() || b.is_zero() {
        return Err(Error::ZeroInput);
    }
    let ca = square_class(a)?;
    let cb = square_class(b)?;
    Ok(hilbert_symbol_classes(&ca, &cb, v))
}

/// Hilbert symbol on canonical square classes.
pub fn hilbert_symbol_classes(a: &SquareClass, b: &SquareClass, v: &Place) -> Sign {
    match v {
        Place::Real => {
            if a.sign() == Sign::Minus && b.sign() == Sign::Minus {
                Sign::Minus
            } else {
                Sign::Plus
            }
        }
        Place::Finite(p) => {
            let alpha = a.divisible_by(p);
            let beta = b.divisible_by(p);
            // Unit parts: the representative with one factor of p removed.
            let unit = |c: &SquareClass| -> BigInt {
                let m: BigUint = c
                    .primes()
                    .iter()
                    .filter(|q| *q != p)
                    .product();
                let m = BigInt::from(m);
                match c.sign() {
                    Sign::Plus => m,
                    Sign::Minus => -m,
                }
            };
            let ua = unit(a);
            let ub = unit(b);
            if p == &BigUint::from(2u32) {
                let mut e = eps_mod2(&ua) * eps_mod2(&ub);
                if alpha {
                    e += omega_mod2(&ub);
                }
                if beta {
                    e += omega_mod2(&ua);
                }
                Sign::from_parity(e % 2 == 1)
            } else {
                let mut s = Sign::Plus;
                if alpha && beta {
                    // (-1)^((p-1)/2)
                    let pm = BigInt::from(p.clone()).mod_floor(&BigInt::from(4));
                    if pm == BigInt::from(3) {
                        s = -s;
                    }
                }
                if beta && legendre(&ua, p).expect("odd prime") == -1 {
                    s = -s;
                }
                if alpha && legendre(&ub, p).expect("odd prime") == -1 {
                    s = -s;
                }
                s
            }
        }
    }
}

/// The finite places where either class could have a nontrivial symbol:
/// 2 together with every prime dividing a or b.
pub fn relevant_places(classes: &[&SquareClass]) -> Vec<Place> {
    let mut primes: Vec<BigUint> = vec![BigUint::from(2u32)];
    for c in classes {
        primes.extend_from_slice(c.primes());
    }
    primes.sort();
    primes.dedup();
    let mut places = vec![Place::Real];
    places.extend(primes.into_iter().map(Place::Finite));
    places
}
