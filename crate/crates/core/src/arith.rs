//! Elementary number theory on machine integers.
//!
//! Factorization is plain trial division: every integer this crate factors
//! is a group order or an element order, and those stay far below the range
//! where trial division becomes slow.

use std::collections::BTreeMap;

use num_integer::Integer;

use crate::count::Count;
use crate::error::{Error, Result};

/// Prime factorization as `prime -> exponent`.
pub type Factorization = BTreeMap<u64, u32>;

pub fn gcd(a: u64, b: u64) -> u64 {
    a.gcd(&b)
}

pub fn lcm(a: u64, b: u64) -> u64 {
    a.lcm(&b)
}

pub fn checked_lcm(a: u64, b: u64) -> Result<u64> {
    if a == 0 || b == 0 {
        return Ok(0);
    }
    (a / gcd(a, b))
        .checked_mul(b)
        .ok_or_else(|| Error::limit("lcm of element orders", format!("lcm({a}, {b})"), u64::MAX))
}

pub fn factorize(mut n: u64) -> Factorization {
    let mut out = Factorization::new();
    if n <= 1 {
        return out;
    }
    for p in [2u64, 3, 5] {
        while n % p == 0 {
            *out.entry(p).or_insert(0) += 1;
            n /= p;
        }
    }
    // wheel mod 30
    const STEPS: [u64; 8] = [4, 2, 4, 2, 4, 6, 2, 6];
    let mut p = 7u64;
    let mut i = 0;
    while p.saturating_mul(p) <= n {
        while n % p == 0 {
            *out.entry(p).or_insert(0) += 1;
            n /= p;
        }
        p += STEPS[i];
        i = (i + 1) % STEPS.len();
    }
    if n > 1 {
        *out.entry(n).or_insert(0) += 1;
    }
    out
}

pub fn mul_mod(a: u64, b: u64, m: u64) -> u64 {
    ((a as u128 * b as u128) % m as u128) as u64
}

pub fn pow_mod(mut base: u64, mut exp: u64, m: u64) -> u64 {
    if m == 1 {
        return 0;
    }
    let mut acc = 1u64;
    base %= m;
    while exp > 0 {
        if exp & 1 == 1 {
            acc = mul_mod(acc, base, m);
        }
        base = mul_mod(base, base, m);
        exp >>= 1;
    }
    acc
}

/// Deterministic Miller-Rabin for the full `u64` range.
pub fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    const WITNESSES: [u64; 12] = [2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37];
    for p in WITNESSES {
        if n % p == 0 {
            return n == p;
        }
    }
    let mut d = n - 1;
    let mut s = 0;
    while d % 2 == 0 {
        d /= 2;
        s += 1;
    }
    'witness: for a in WITNESSES {
        let mut x = pow_mod(a, d, n);
        if x == 1 || x == n - 1 {
            continue;
        }
        for _ in 1..s {
            x = mul_mod(x, x, n);
            if x == n - 1 {
                continue 'witness;
            }
        }
        return false;
    }
    true
}

/// If `n = p^k` with `k >= 1`, returns `(p, k)`.
pub fn prime_power(n: u64) -> Option<(u64, u32)> {
    let f = factorize(n);
    if f.len() == 1 {
        f.into_iter().next()
    } else {
        None
    }
}

pub fn divisors(n: u64) -> Vec<u64> {
    let mut out = vec![1u64];
    for (p, k) in factorize(n) {
        let len = out.len();
        let mut pk = 1u64;
        for _ in 0..k {
            pk *= p;
            for i in 0..len {
                out.push(out[i] * pk);
            }
        }
    }
    out.sort_unstable();
    out
}

/// Classical Euler totient.
pub fn euler_phi(n: u64) -> u64 {
    assert!(n >= 1, "euler_phi is defined for n >= 1");
    factorize(n)
        .into_iter()
        .fold(1, |acc, (p, k)| acc * (p - 1) * p.pow(k - 1))
}

/// Totient of the integer with the given factorization, in any count type.
pub fn euler_phi_of<C: Count>(factors: &Factorization) -> C {
    let mut acc = C::one();
    for (&p, &k) in factors {
        let pc = C::from_u64(p).expect("count type holds primes");
        acc = acc * (pc.clone() - C::one());
        for _ in 1..k {
            acc = acc * pc.clone();
        }
    }
    acc
}

/// The integer with the given factorization, in any count type.
pub fn from_factorization<C: Count>(factors: &Factorization) -> C {
    let mut acc = C::one();
    for (&p, &k) in factors {
        let pc = C::from_u64(p).expect("count type holds primes");
        for _ in 0..k {
            acc = acc * pc.clone();
        }
    }
    acc
}

pub fn merge_factorizations(a: &mut Factorization, b: &Factorization) {
    for (&p, &k) in b {
        *a.entry(p).or_insert(0) += k;
    }
}

/// Least `t > 1` with `t^q = 1 (mod p)`, for prime `p` and `q | p - 1`.
pub fn least_root_of_unity(p: u64, q: u64) -> Option<u64> {
    (2..p).find(|&t| pow_mod(t, q, p) == 1)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn brute_phi(n: u64) -> u64 {
        (1..=n).filter(|&a| gcd(a, n) == 1).count() as u64
    }

    #[test]
    fn totient_matches_counting_definition() {
        for n in 1..=500 {
            assert_eq!(euler_phi(n), brute_phi(n), "n = {n}");
        }
    }

    #[test]
    fn totient_examples() {
        assert_eq!(euler_phi(1), 1);
        assert_eq!(euler_phi(6), 2);
        assert_eq!(euler_phi(1320), 320);
    }

    #[test]
    fn primality_agrees_with_sieve() {
        let limit = 10_000usize;
        let mut sieve = vec![true; limit];
        sieve[0] = false;
        sieve[1] = false;
        for i in 2..limit {
            if sieve[i] {
                for j in (i * i..limit).step_by(i) {
                    sieve[j] = false;
                }
            }
        }
        for (n, &p) in sieve.iter().enumerate() {
            assert_eq!(is_prime(n as u64), p, "n = {n}");
        }
        assert!(is_prime(2_305_843_009_213_693_951)); // 2^61 - 1
        assert!(!is_prime(3_215_031_751));
    }

    #[test]
    fn factorization_roundtrips() {
        for n in 1..2000u64 {
            let f = factorize(n);
            assert_eq!(from_factorization::<u64>(&f), n);
            assert_eq!(euler_phi_of::<u64>(&f), euler_phi(n));
        }
    }

    #[test]
    fn divisors_of_twelve() {
        assert_eq!(divisors(12), vec![1, 2, 3, 4, 6, 12]);
        assert_eq!(divisors(1), vec![1]);
    }

    #[test]
    fn roots_of_unity() {
        assert_eq!(least_root_of_unity(7, 3), Some(2));
        assert_eq!(least_root_of_unity(3, 2), Some(2));
        assert_eq!(least_root_of_unity(13, 3), Some(3));
    }
}
