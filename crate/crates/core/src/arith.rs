//! Small number-theoretic helpers: primality, Jacobi symbols, modular
//! inverses, and exact rational utilities used throughout the crate.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{Signed, Zero};

/// Exact rational scalar used everywhere in this crate.
pub type Rat = BigRational;

pub fn int(n: i64) -> BigInt {
    BigInt::from(n)
}

pub fn rat(n: i64) -> Rat {
    Rat::from_integer(BigInt::from(n))
}

pub fn ratio(num: i64, den: i64) -> Rat {
    Rat::new(BigInt::from(num), BigInt::from(den))
}

pub fn rat_of(n: BigInt) -> Rat {
    Rat::from_integer(n)
}

/// Trial-division primality test; all primes handled here are desk-scale.
pub fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    if n % 2 == 0 {
        return n == 2;
    }
    if n % 3 == 0 {
        return n == 3;
    }
    let mut d = 5u64;
    while d * d <= n {
        if n % d == 0 || n % (d + 2) == 0 {
            return false;
        }
        d += 6;
    }
    true
}

pub fn primes_below(bound: u64) -> Vec<u64> {
    (2..bound).filter(|&n| is_prime(n)).collect()
}

pub fn odd_primes_below(bound: u64) -> Vec<u64> {
    (3..bound).step_by(2).filter(|&n| is_prime(n)).collect()
}

/// Jacobi symbol (a/n) for odd n > 0. Coincides with the Legendre symbol
/// when n is prime.
pub fn jacobi(a: i64, n: u64) -> i32 {
    debug_assert!(n % 2 == 1 && n > 0);
    let mut a = a.rem_euclid(n as i64) as u64;
    let mut n = n;
    let mut t = 1i32;
    while a != 0 {
        while a % 2 == 0 {
            a /= 2;
            let r = n % 8;
            if r == 3 || r == 5 {
                t = -t;
            }
        }
        std::mem::swap(&mut a, &mut n);
        if a % 4 == 3 && n % 4 == 3 {
            t = -t;
        }
        a %= n;
    }
    if n == 1 {
        t
    } else {
        0
    }
}

/// Inverse of a modulo m, if gcd(a, m) = 1.
pub fn mod_inverse(a: i64, m: u64) -> Option<u64> {
    let m_i = m as i64;
    let (mut r0, mut r1) = (m_i, a.rem_euclid(m_i));
    let (mut s0, mut s1) = (0i64, 1i64);
    while r1 != 0 {
        let q = r0 / r1;
        (r0, r1) = (r1, r0 - q * r1);
        (s0, s1) = (s1, s0 - q * s1);
    }
    if r0 != 1 {
        None
    } else {
        Some(s0.rem_euclid(m_i) as u64)
    }
}

/// Floor of sqrt(r) for a non-negative rational is not rational in general;
/// this returns an integer B with sqrt(r) <= B, tight to within 1.
/// Candidate ranges derived from B are then filtered by exact sign tests.
pub fn sqrt_upper_bound(r: &Rat) -> BigInt {
    debug_assert!(!r.is_negative());
    if r.is_zero() {
        return BigInt::zero();
    }
    // sqrt(n/d) = sqrt(n*d)/d <= (isqrt(n*d)+1)/d, so ceil((isqrt(n*d)+1)/d) works.
    let nd = r.numer() * r.denom();
    let s = nd.sqrt() + 1;
    // ceil(s / d)
    let d = r.denom();
    (&s + d - 1) / d
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn primality() {
        assert!(is_prime(2));
        assert!(is_prime(3));
        assert!(is_prime(41));
        assert!(is_prime(163));
        assert!(!is_prime(1));
        assert!(!is_prime(9));
        assert!(!is_prime(91));
        assert_eq!(odd_primes_below(20), vec![3, 5, 7, 11, 13, 17, 19]);
    }

    #[test]
    fn jacobi_symbols() {
        // (-3/41) = -1 since 41 = 2 mod 3; (-3/p) = 1 iff p = 1 mod 3.
        assert_eq!(jacobi(-3, 41), -1);
        assert_eq!(jacobi(-3, 61), 1);
        assert_eq!(jacobi(-11, 61), -1);
        assert_eq!(jacobi(-67, 53), -1);
        assert_eq!(jacobi(0, 3), 0);
    }

    #[test]
    fn inverses() {
        assert_eq!(mod_inverse(3, 7), Some(5));
        assert_eq!(mod_inverse(6, 9), None);
        for a in 1..41 {
            let inv = mod_inverse(a, 41).unwrap();
            assert_eq!((a as u64 * inv) % 41, 1);
        }
    }

    #[test]
    fn sqrt_bounds() {
        for (num, den) in [(2, 1), (1, 4), (7, 3), (0, 1), (1000, 7)] {
            let r = ratio(num, den);
            let b = sqrt_upper_bound(&r);
            let b = Rat::from_integer(b);
            assert!(&b * &b >= r);
        }
    }
}
