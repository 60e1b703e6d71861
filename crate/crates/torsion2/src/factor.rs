//! Integer factorization: trial division up to 10^6, then Pollard rho with
//! Brent cycle detection for whatever survives. Inputs in this crate are
//! products of small differences, so the rho stage is rarely reached.

use num_bigint::BigUint;
use num_integer::Integer;
use num_traits::{One, Zero};

const TRIAL_BOUND: u64 = 1_000_000;

/// Prime factorization of n > 0 as sorted (prime, exponent) pairs.
pub fn factorize(n: &BigUint) -> Vec<(BigUint, u32)> {
    assert!(!n.is_zero(), "cannot factor zero");
    let mut out: Vec<(BigUint, u32)> = Vec::new();
    let mut rest = n.clone();
    let one = BigUint::one();
    if rest == one {
        return out;
    }

    let push = |p: BigUint, e: u32, out: &mut Vec<(BigUint, u32)>| {
        out.push((p, e));
    };

    let mut d: u64 = 2;
    while d <= TRIAL_BOUND {
        let db = BigUint::from(d);
        if &db * &db > rest {
            break;
        }
        if (&rest % &db).is_zero() {
            let mut e = 0u32;
            while (&rest % &db).is_zero() {
                rest /= &db;
                e += 1;
            }
            push(db, e, &mut out);
        }
        d = if d == 2 { 3 } else { d + 2 };
    }
    if rest > one {
        if rest <= BigUint::from(TRIAL_BOUND) * BigUint::from(TRIAL_BOUND) || is_prime(&rest) {
            push(rest, 1, &mut out);
        } else {
            let mut stack = vec![rest];
            let mut found: Vec<BigUint> = Vec::new();
            while let Some(m) = stack.pop() {
                if is_prime(&m) {
                    found.push(m);
                    continue;
                }
                let f = pollard_rho(&m);
                stack.push(&m / &f);
                stack.push(f);
            }
            found.sort();
            let mut i = 0;
            while i < found.len() {
                let mut j = i;
                while j < found.len() && found[j] == found[i] {
                    j += 1;
                }
                push(found[i].clone(), (j - i) as u32, &mut out);
                i = j;
            }
        }
    }
    out.sort_by(|a, b| a.0.cmp(&b.0));
    out
}

/// Miller–Rabin with the deterministic base set for n < 3.3·10^24; for the
/// sizes this crate produces that is a proof, not a probability.
pub fn is_prime(n: &BigUint) -> bool {
    let two = BigUint::from(2u32);
    if n < &two {
        return false;
    }
    for small in [2u64, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37] {
        let p = BigUint::from(small);
        if n == &p {
            return true;
        }
        if (n % &p).is_zero() {
            return false;
        }
    }
    let n_minus_1 = n - BigUint::one();
    let s = n_minus_1.trailing_zeros().unwrap_or(0);
    let d = &n_minus_1 >> s;
    'witness: for a in [2u64, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37] {
        let mut x = BigUint::from(a).modpow(&d, n);
        if x.is_one() || x == n_minus_1 {
            continue;
        }
        for _ in 1..s {
            x = x.modpow(&two, n);
            if x == n_minus_1 {
                continue 'witness;
            }
        }
        return false;
    }
    true
}

/// Brent-style Pollard rho; n must be odd composite and not a prime power
/// handled elsewhere. Deterministic: the (c, x0) pairs are tried in order.
fn pollard_rho(n: &BigUint) -> BigUint {
    let one = BigUint::one();
    // Perfect squares defeat rho's random walk surprisingly often.
    let r = n.sqrt();
    if &r * &r == *n {
        return r;
    }
    for c in 1u64..64 {
        let cbig = BigUint::from(c);
        let mut x = BigUint::from(2u64 + c);
        let mut y = x.clone();
        let mut d = one.clone();
        while d.is_one() {
            x = (&x * &x + &cbig) % n;
            y = (&y * &y + &cbig) % n;
            y = (&y * &y + &cbig) % n;
            let diff = if x > y { &x - &y } else { &y - &x };
            if diff.is_zero() {
                break;
            }
            d = diff.gcd(n);
        }
        if !d.is_one() && d != *n {
            return d;
        }
    }
    unreachable!("pollard rho exhausted its parameter schedule");
}

/// All positive divisors of n, unsorted.
pub fn divisors(n: &BigUint) -> Vec<BigUint> {
    let mut out = vec![BigUint::one()];
    for (p, e) in factorize(n) {
        let base = out.clone();
        let mut pk = BigUint::one();
        for _ in 0..e {
            pk *= &p;
            out.extend(base.iter().map(|d| d * &pk));
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    fn fac(n: u64) -> Vec<(u64, u32)> {
        factorize(&BigUint::from(n))
            .into_iter()
            .map(|(p, e)| (u64::try_from(&p).unwrap(), e))
            .collect()
    }

    #[test]
    fn small_factorizations() {
        assert_eq!(fac(1), vec![]);
        assert_eq!(fac(2), vec![(2, 1)]);
        assert_eq!(fac(2880), vec![(2, 6), (3, 2), (5, 1)]);
        assert_eq!(fac(97), vec![(97, 1)]);
        assert_eq!(fac(1_000_003), vec![(1_000_003, 1)]);
    }

    #[test]
    fn semiprime_beyond_trial_bound() {
        // 1000003 * 1000033 forces the rho stage.
        let n = BigUint::from(1_000_003u64) * BigUint::from(1_000_033u64);
        let f = factorize(&n);
        assert_eq!(
            f,
            vec![
                (BigUint::from(1_000_003u64), 1),
                (BigUint::from(1_000_033u64), 1)
            ]
        );
    }

    #[test]
    fn square_of_large_prime() {
        let p = BigUint::from(1_000_003u64);
        let f = factorize(&(&p * &p));
        assert_eq!(f, vec![(p, 2)]);
    }

    #[test]
    fn divisor_lists() {
        let mut d: Vec<u64> = divisors(&BigUint::from(12u32))
            .into_iter()
            .map(|x| u64::try_from(&x).unwrap())
            .collect();
        d.sort();
        assert_eq!(d, vec![1, 2, 3, 4, 6, 12]);
    }

    #[test]
    fn primality() {
        assert!(is_prime(&BigUint::from(2u32)));
        assert!(is_prime(&BigUint::from(1_000_003u64)));
        assert!(!is_prime(&BigUint::from(1u32)));
        assert!(!is_prime(&BigUint::from(1_000_001u64))); // 101 * 9901
    }
}
