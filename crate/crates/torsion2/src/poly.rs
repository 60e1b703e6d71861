//! Dense univariate polynomials over ℚ.
//!
//! Coefficients are stored lowest degree first with trailing zeros stripped;
//! the zero polynomial is the empty vector.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};
use crate::factor;
use crate::rational::Rational;

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Poly {
    coeffs: Vec<Rational>,
}

impl Poly {
    pub fn new(mut coeffs: Vec<Rational>) -> Poly {
        while coeffs.last().is_some_and(Zero::is_zero) {
            coeffs.pop();
        }
        Poly { coeffs }
    }

    pub fn zero() -> Poly {
        Poly { coeffs: Vec::new() }
    }

    pub fn one() -> Poly {
        Poly::constant(Rational::one())
    }

    pub fn constant(c: Rational) -> Poly {
        Poly::new(vec![c])
    }

    /// The monomial x.
    pub fn x() -> Poly {
        Poly::new(vec![Rational::zero(), Rational::one()])
    }

    pub fn from_int_coeffs(coeffs: &[i64]) -> Poly {
        Poly::new(
            coeffs
                .iter()
                .map(|&c| Rational::from_integer(BigInt::from(c)))
                .collect(),
        )
    }

    /// u · Π (x − rᵢ).
    pub fn from_roots(lead: &Rational, roots: &[Rational]) -> Poly {
        let mut p = Poly::constant(lead.clone());
        for r in roots {
            p = &p * &Poly::new(vec![-r.clone(), Rational::one()]);
        }
        p
    }

    pub fn coeffs(&self) -> &[Rational] {
        &self.coeffs
    }

    pub fn coeff(&self, k: usize) -> Rational {
        self.coeffs.get(k).cloned().unwrap_or_else(Rational::zero)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// None for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn leading(&self) -> Rational {
        self.coeffs.last().cloned().unwrap_or_else(Rational::zero)
    }

    pub fn eval(&self, x: &Rational) -> Rational {
        let mut acc = Rational::zero();
        for c in self.coeffs.iter().rev() {
            acc = acc * x + c;
        }
        acc
    }

    pub fn derivative(&self) -> Poly {
        if self.coeffs.len() <= 1 {
            return Poly::zero();
        }
        Poly::new(
            self.coeffs[1..]
                .iter()
                .enumerate()
                .map(|(i, c)| c * Rational::from_integer(BigInt::from(i + 1)))
                .collect(),
        )
    }

    pub fn monic(&self) -> Poly {
        if self.is_zero() {
            return Poly::zero();
        }
        let lead = self.leading();
        Poly::new(self.coeffs.iter().map(|c| c / &lead).collect())
    }

    pub fn scale(&self, c: &Rational) -> Poly {
        Poly::new(self.coeffs.iter().map(|a| a * c).collect())
    }

    pub fn pow(&self, mut e: u32) -> Poly {
        let mut base = self.clone();
        let mut acc = Poly::one();
        while e > 0 {
            if e & 1 == 1 {
                acc = &acc * &base;
            }
            e >>= 1;
            if e > 0 {
                base = &base * &base;
            }
        }
        acc
    }

    /// Euclidean division; the divisor must be nonzero.
    pub fn div_rem(&self, d: &Poly) -> (Poly, Poly) {
        assert!(!d.is_zero(), "division by the zero polynomial");
        let dd = d.degree().unwrap();
        let lead = d.leading();
        let mut rem = self.coeffs.clone();
        let mut quo = vec![Rational::zero(); self.coeffs.len().saturating_sub(dd)];
        while rem.len() > dd {
            let k = rem.len() - 1 - dd;
            let factor = rem.last().unwrap() / &lead;
            for i in 0..=dd {
                let t = &d.coeffs[i] * &factor;
                rem[k + i] -= t;
            }
            while rem.last().is_some_and(Zero::is_zero) {
                rem.pop();
            }
            quo[k] = factor;
        }
        (Poly::new(quo), Poly::new(rem))
    }

    pub fn rem(&self, d: &Poly) -> Poly {
        self.div_rem(d).1
    }

    /// Monic gcd (zero if both arguments are zero).
    pub fn gcd(&self, other: &Poly) -> Poly {
        let (mut a, mut b) = (self.clone(), other.clone());
        while !b.is_zero() {
            let r = a.rem(&b);
            a = b;
            b = r;
        }
        a.monic()
    }

    pub fn is_squarefree(&self) -> bool {
        match self.degree() {
            None | Some(0) => false,
            Some(_) => self.gcd(&self.derivative()).degree() == Some(0),
        }
    }

    /// Extended Euclid: returns (d, s, t) with s·self + t·other = d, d the
    /// monic gcd.
    pub fn xgcd(&self, other: &Poly) -> (Poly, Poly, Poly) {
        let (mut r0, mut r1) = (self.clone(), other.clone());
        let (mut s0, mut s1) = (Poly::one(), Poly::zero());
        let (mut t0, mut t1) = (Poly::zero(), Poly::one());
        while !r1.is_zero() {
            let (q, r) = r0.div_rem(&r1);
            let s = &s0 - &(&q * &s1);
            let t = &t0 - &(&q * &t1);
            r0 = r1;
            r1 = r;
            s0 = s1;
            s1 = s;
            t0 = t1;
            t1 = t;
        }
        if r0.is_zero() {
            return (r0, s0, t0);
        }
        let lead = r0.leading();
        let inv = lead.recip();
        (r0.scale(&inv), s0.scale(&inv), t0.scale(&inv))
    }

    /// Inverse of self modulo q; fails when gcd(self, q) is non-constant.
    pub fn inverse_mod(&self, q: &Poly) -> Result<Poly> {
        let a = self.rem(q);
        if a.is_zero() {
            return Err(Error::NotInvertible);
        }
        let (d, s, _) = a.xgcd(q);
        if d.degree() != Some(0) {
            return Err(Error::NotInvertible);
        }
        Ok(s.rem(q))
    }

    /// res(self, other); zero iff the two share a root.
    pub fn resultant(&self, other: &Poly) -> Rational {
        fn go(f: &Poly, g: &Poly) -> Rational {
            let df = f.degree().expect("nonzero");
            match g.degree() {
                None => Rational::zero(),
                Some(0) => crate::rational::pow_i64(&g.leading(), df as i64),
                Some(dg) => {
                    let r = f.rem(g);
                    if r.is_zero() {
                        return Rational::zero();
                    }
                    let dr = r.degree().unwrap();
                    let sign = if (df * dg) % 2 == 1 {
                        -Rational::one()
                    } else {
                        Rational::one()
                    };
                    sign * crate::rational::pow_i64(&g.leading(), (df - dr) as i64) * go(g, &r)
                }
            }
        }
        if self.is_zero() || other.is_zero() {
            return Rational::zero();
        }
        if self.degree() == Some(0) {
            return crate::rational::pow_i64(&self.leading(), other.degree().unwrap() as i64);
        }
        go(self, other)
    }

    /// Discriminant; None when deg < 1.
    pub fn discriminant(&self) -> Option<Rational> {
        let n = self.degree()?;
        if n < 1 {
            return None;
        }
        let res = self.resultant(&self.derivative());
        let sign = if (n * (n - 1) / 2) % 2 == 1 {
            -Rational::one()
        } else {
            Rational::one()
        };
        Some(sign * res / self.leading())
    }

    /// All rational roots with multiplicity, ascending, via the rational-root
    /// test on the primitive integer form.
    pub fn rational_roots(&self) -> Vec<Rational> {
        if self.is_zero() || self.degree() == Some(0) {
            return Vec::new();
        }
        let mut roots = Vec::new();
        let mut p = self.clone();
        // factor out x^k
        while p.coeff(0).is_zero() && !p.is_zero() {
            roots.push(Rational::zero());
            let (q, _) = p.div_rem(&Poly::x());
            p = q;
        }
        if p.degree().is_none() || p.degree() == Some(0) {
            roots.sort();
            return roots;
        }
        // primitive integer form
        let mut denom_lcm = BigInt::one();
        for c in p.coeffs() {
            denom_lcm = denom_lcm.lcm(c.denom());
        }
        let ints: Vec<BigInt> = p
            .coeffs()
            .iter()
            .map(|c| {
                let v = c * Rational::from_integer(denom_lcm.clone());
                debug_assert!(v.is_integer());
                v.to_integer()
            })
            .collect();
        let a0 = ints[0].magnitude().clone();
        let an = ints.last().unwrap().magnitude().clone();
        let mut candidates: Vec<Rational> = Vec::new();
        for num in factor::divisors(&a0) {
            for den in factor::divisors(&an) {
                let r = Rational::new(BigInt::from(num.clone()), BigInt::from(den.clone()));
                candidates.push(r.clone());
                candidates.push(-r);
            }
        }
        candidates.sort();
        candidates.dedup();
        for cand in candidates {
            while !p.is_zero() && p.degree() > Some(0) && p.eval(&cand).is_zero() {
                roots.push(cand.clone());
                let lin = Poly::new(vec![-cand.clone(), Rational::one()]);
                let (q, r) = p.div_rem(&lin);
                debug_assert!(r.is_zero());
                p = q;
            }
        }
        roots.sort();
        roots
    }
}

impl Add for &Poly {
    type Output = Poly;
    fn add(self, rhs: &Poly) -> Poly {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        Poly::new((0..n).map(|i| self.coeff(i) + rhs.coeff(i)).collect())
    }
}

impl Sub for &Poly {
    type Output = Poly;
    fn sub(self, rhs: &Poly) -> Poly {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        Poly::new((0..n).map(|i| self.coeff(i) - rhs.coeff(i)).collect())
    }
}

impl Neg for &Poly {
    type Output = Poly;
    fn neg(self) -> Poly {
        Poly::new(self.coeffs.iter().map(|c| -c.clone()).collect())
    }
}

impl Mul for &Poly {
    type Output = Poly;
    fn mul(self, rhs: &Poly) -> Poly {
        if self.is_zero() || rhs.is_zero() {
            return Poly::zero();
        }
        let mut out = vec![Rational::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                out[i + j] += a * b;
            }
        }
        Poly::new(out)
    }
}

fn coeff_str(c: &Rational) -> String {
    if c.is_integer() {
        c.numer().to_string()
    } else {
        format!("{}/{}", c.numer(), c.denom())
    }
}

impl fmt::Display for Poly {
    /// Renders in the grammar the CLI parses: `1/3*x^3 + 2/3*x^2 - 1*x`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (k, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            let mag = c.abs();
            let body = if k == 0 {
                coeff_str(&mag)
            } else {
                let var = if k == 1 {
                    "x".to_string()
                } else {
                    format!("x^{k}")
                };
                if mag.is_one() {
                    var
                } else {
                    format!("{}*{}", coeff_str(&mag), var)
                }
            };
            if first {
                if c.is_negative() {
                    // a leading minus must live inside the rational literal
                    if mag.is_one() && k > 0 {
                        write!(f, "-1*{body}")?;
                    } else {
                        write!(f, "-{body}")?;
                    }
                } else {
                    write!(f, "{body}")?;
                }
                first = false;
            } else if c.is_negative() {
                write!(f, " - {body}")?;
            } else {
                write!(f, " + {body}")?;
            }
        }
        Ok(())
    }
}
