use crate::arith::{self, gcd, is_prime, lcm};
use crate::count::{self, Count};
use crate::error::{Error, Result};
use crate::group::{AbelianType, MetacyclicParams};

use super::partition::{count_order_alternating, count_order_symmetric, MAX_PARTITION_DEGREE};

pub use crate::arith::euler_phi;

fn pow<C: Count>(p: u64, e: u32) -> C {
    let base: C = count::from_u64(p);
    (0..e).fold(C::one(), |acc, _| acc * base.clone())
}

/// Number of elements of maximal order in the abelian `p`-group
/// `Z_{p^a1} x ... x Z_{p^ar}` with `a1 <= ... <= ar`.
pub fn phi_abelian_p<C: Count>(p: u64, alphas: &[u32]) -> Result<C> {
    if alphas.is_empty() {
        return Err(Error::InvalidParams("empty exponent list".into()));
    }
    if !is_prime(p) {
        return Err(Error::InvalidParams(format!("{p} is not prime")));
    }
    if alphas.windows(2).any(|w| w[0] > w[1]) || alphas[0] == 0 {
        return Err(Error::InvalidParams(format!(
            "exponents must be positive and nondecreasing, got {alphas:?}"
        )));
    }
    let top = *alphas.last().unwrap();
    // 1-based s is the first index holding the top exponent; r - s + 1 is its
    // multiplicity.
    let s = alphas.iter().position(|&a| a == top).unwrap() + 1;
    let t = (alphas.len() - s + 1) as u32;
    let total: u32 = alphas.iter().sum();
    let pt: C = pow(p, t);
    Ok(pow::<C>(p, total - t) * (pt - C::one()))
}

/// Product of the per-prime closed forms.
pub fn phi_abelian<C: Count>(ty: &AbelianType) -> Result<C> {
    ty.factors()
        .iter()
        .try_fold(C::one(), |acc, (p, alphas)| Ok(acc * phi_abelian_p::<C>(*p, alphas)?))
}

/// `phi(Q_8 x Z_2^rank x A)` for `A` abelian of odd order.
pub fn phi_hamiltonian<C: Count>(rank: u32, odd: &AbelianType) -> Result<C> {
    if odd.factors().iter().any(|(p, _)| *p == 2) {
        return Err(Error::InvalidParams(format!(
            "hamiltonian factor {odd} must have odd order"
        )));
    }
    Ok(count::from_u64::<C>(3) * pow::<C>(2, rank + 1) * phi_abelian::<C>(odd)?)
}

/// `phi(D_{2n})`. `D_4` is the Klein four-group, whose three involutions all
/// have the exponent as order.
pub fn phi_dihedral(n: u64) -> Result<u64> {
    match n {
        0 | 1 => Err(Error::InvalidParams(format!("dihedral needs n >= 2, got {n}"))),
        2 => Ok(3),
        n if n % 2 == 1 => Ok(0),
        n => Ok(euler_phi(n)),
    }
}

/// Highest power of each prime `p <= n` that is still `<= n`.
pub fn prime_power_parts(n: u64) -> Vec<(u64, u32)> {
    (2..=n)
        .filter(|&p| is_prime(p))
        .map(|p| {
            let mut a = 1;
            let mut q = p;
            while q * p <= n {
                q *= p;
                a += 1;
            }
            (p, a)
        })
        .collect()
}

/// `exp(S_n) = lcm(1, ..., n)`.
pub fn exp_symmetric<C: Count>(n: u64) -> C {
    prime_power_parts(n)
        .into_iter()
        .fold(C::one(), |acc, (p, a)| acc * pow::<C>(p, a))
}

fn is_power_of_two_or_next(n: u64) -> bool {
    n.is_power_of_two() || (n - 1).is_power_of_two()
}

/// `exp(A_n)`: half of `exp(S_n)` when `n` is `2^l` or `2^l + 1`.
pub fn exp_alternating<C: Count>(n: u64) -> Result<C> {
    if n < 2 {
        return Err(Error::InvalidParams(format!("alternating needs n >= 2, got {n}")));
    }
    let e = exp_symmetric::<C>(n);
    Ok(if is_power_of_two_or_next(n) {
        e / count::from_u64(2)
    } else {
        e
    })
}

fn small_exp(n: u64, alternating: bool) -> Result<u64> {
    if n as usize > MAX_PARTITION_DEGREE {
        return Err(Error::limit(
            format!("exponent of degree-{n} permutation group"),
            n,
            MAX_PARTITION_DEGREE as u64,
        ));
    }
    if alternating {
        exp_alternating::<u64>(n)
    } else {
        Ok(exp_symmetric::<u64>(n))
    }
}

/// `phi(S_n)`, counted over cycle types of order `exp(S_n)`.
pub fn phi_symmetric<C: Count>(n: u64) -> Result<C> {
    count_order_symmetric(n as usize, small_exp(n, false)?)
}

/// `phi(A_n)`, counted over even cycle types of order `exp(A_n)`.
pub fn phi_alternating<C: Count>(n: u64) -> Result<C> {
    count_order_alternating(n as usize, small_exp(n, true)?)
}

/// Exponent of `<a, b | a^m, b^n = a^s, b^-1 a b = a^r>`, with `gcd(m, 0) = m`.
pub fn metacyclic_exponent(m: u64, n: u64, s: u64, r: u64) -> Result<u64> {
    let params = MetacyclicParams::new(m, n, s, r)?;
    let (m, n, s) = (params.m, params.n, params.s);
    let g = gcd(m, s);
    Ok((m / g) * lcm(g, n))
}

/// The p-part `p^a` of `exp(S_n)` as computed by the closed form, for
/// checking `n/p < p^a <= n`.
pub fn symmetric_exp_p_part(n: u64, p: u64) -> u64 {
    let e = exp_symmetric::<u64>(n);
    arith::factorize(e)
        .get(&p)
        .map_or(1, |&a| p.pow(a))
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_bigint::BigUint;

    #[test]
    fn totient_examples() {
        assert_eq!(euler_phi(1), 1);
        assert_eq!(euler_phi(6), 2);
        assert_eq!(euler_phi(1320), 320);
    }

    #[test]
    fn abelian_p_examples() {
        assert_eq!(phi_abelian_p::<u64>(2, &[1, 2]).unwrap(), 4);
        assert_eq!(phi_abelian_p::<u64>(3, &[1]).unwrap(), 2);
        assert_eq!(phi_abelian_p::<u64>(2, &[1, 1, 1]).unwrap(), 7);
        assert!(phi_abelian_p::<u64>(2, &[]).is_err());
        assert!(phi_abelian_p::<u64>(2, &[2, 1]).is_err());
        assert!(phi_abelian_p::<u64>(4, &[1]).is_err());
    }

    #[test]
    fn abelian_examples() {
        let z6 = AbelianType::from_cyclic_orders(&[6]).unwrap();
        assert_eq!(phi_abelian::<u64>(&z6).unwrap(), 2);
        let g = AbelianType::from_cyclic_orders(&[2, 4, 9]).unwrap();
        assert_eq!(phi_abelian::<u64>(&g).unwrap(), 24);
        let h = AbelianType::from_cyclic_orders(&[2, 2, 3]).unwrap();
        assert_eq!(phi_abelian::<BigUint>(&h).unwrap(), BigUint::from(6u32));
    }

    #[test]
    fn hamiltonian_examples() {
        let one = AbelianType::from_cyclic_orders(&[]).unwrap();
        let z3 = AbelianType::from_cyclic_orders(&[3]).unwrap();
        assert_eq!(phi_hamiltonian::<u64>(0, &one).unwrap(), 6);
        assert_eq!(phi_hamiltonian::<u64>(2, &one).unwrap(), 24);
        assert_eq!(phi_hamiltonian::<u64>(0, &z3).unwrap(), 12);
        let z2 = AbelianType::from_cyclic_orders(&[2]).unwrap();
        assert!(phi_hamiltonian::<u64>(0, &z2).is_err());
    }

    #[test]
    fn dihedral_examples() {
        assert_eq!(phi_dihedral(4).unwrap(), 2);
        assert_eq!(phi_dihedral(3).unwrap(), 0);
        assert_eq!(phi_dihedral(6).unwrap(), 2);
        assert_eq!(phi_dihedral(2).unwrap(), 3);
        assert!(phi_dihedral(1).is_err());
    }

    #[test]
    fn symmetric_and_alternating() {
        assert_eq!(exp_symmetric::<u64>(4), 12);
        assert_eq!(exp_symmetric::<u64>(1), 1);
        assert_eq!(exp_symmetric::<u64>(10), 2520);
        assert_eq!(exp_alternating::<u64>(4).unwrap(), 6);
        assert_eq!(exp_alternating::<u64>(5).unwrap(), 30);
        assert_eq!(exp_alternating::<u64>(6).unwrap(), 60);
        assert_eq!(phi_symmetric::<u64>(1).unwrap(), 1);
        assert_eq!(phi_symmetric::<u64>(2).unwrap(), 1);
        assert_eq!(phi_symmetric::<u64>(7).unwrap(), 0);
        assert_eq!(phi_alternating::<u64>(2).unwrap(), 1);
        assert_eq!(phi_alternating::<u64>(3).unwrap(), 2);
        assert_eq!(phi_alternating::<BigUint>(10).unwrap(), BigUint::from(0u32));
    }

    #[test]
    fn exp_of_large_symmetric_is_exact() {
        let e: BigUint = exp_symmetric(100);
        let direct = (1..=100u64).fold(BigUint::from(1u32), |acc, k| {
            num_integer::Integer::lcm(&acc, &BigUint::from(k))
        });
        assert_eq!(e, direct);
    }

    #[test]
    fn metacyclic_examples() {
        assert_eq!(metacyclic_exponent(4, 2, 2, 3).unwrap(), 4);
        assert_eq!(metacyclic_exponent(7, 1, 0, 1).unwrap(), 7);
        assert_eq!(metacyclic_exponent(6, 2, 0, 5).unwrap(), 6);
        assert!(metacyclic_exponent(4, 2, 1, 3).is_err());
    }

    #[test]
    fn prime_power_bound() {
        for n in 2..=40u64 {
            for (p, _) in prime_power_parts(n) {
                let q = symmetric_exp_p_part(n, p);
                assert!(n < p * q && q <= n, "n={n} p={p}");
            }
        }
    }

    #[test]
    fn prime_power_sum_exceeds_n() {
        for n in 5..=40u64 {
            let s: u64 = prime_power_parts(n).iter().map(|&(p, a)| p.pow(a)).sum();
            assert!(s > n, "n={n}");
        }
    }
}
