//! Constructors for the group families: cyclic, abelian, dihedral and other
//! metacyclic presets, hamiltonian, the nonabelian `P`-groups, symmetric,
//! alternating, M11 and direct products.

use crate::arith;
use crate::closed_forms::Partitions;
use crate::error::{Error, Result};
use crate::group::{AbelianType, GroupSpec, MetacyclicParams, MetacyclicPreset, PGroupParams};

pub fn cyclic(n: u64) -> Result<GroupSpec> {
    if n == 0 {
        return Err(Error::InvalidParams("cyclic group order must be positive".into()));
    }
    Ok(GroupSpec::Cyclic { n })
}

/// Direct sum of `Z_{p^a}` over the given `(p, [a, ...])` entries.
pub fn abelian(factors: &[(u64, Vec<u32>)]) -> Result<GroupSpec> {
    Ok(GroupSpec::Abelian(AbelianType::new(factors)?))
}

pub fn elementary_abelian(p: u64, rank: u32) -> Result<GroupSpec> {
    if !arith::is_prime(p) {
        return Err(Error::InvalidParams(format!("{p} is not a prime")));
    }
    if rank == 0 {
        return Err(Error::InvalidParams("elementary abelian rank must be positive".into()));
    }
    Ok(GroupSpec::ElementaryAbelian { p, rank })
}

/// `D_{2n}` of order `two_n`, realized as `MC(n, 2, 0, n - 1)`.
pub fn dihedral(two_n: u64) -> Result<GroupSpec> {
    if two_n < 4 || two_n % 2 != 0 {
        return Err(Error::InvalidParams(format!(
            "dihedral order must be even and at least 4, got {two_n}"
        )));
    }
    let n = two_n / 2;
    Ok(GroupSpec::Metacyclic {
        params: MetacyclicParams::new(n, 2, 0, n - 1)?,
        preset: Some(MetacyclicPreset::Dihedral),
    })
}

pub fn metacyclic(m: u64, n: u64, s: u64, r: u64) -> Result<GroupSpec> {
    Ok(GroupSpec::Metacyclic {
        params: MetacyclicParams::new(m, n, s, r)?,
        preset: None,
    })
}

fn two_power_exponent(order: u64, min: u32, family: &str) -> Result<u32> {
    match arith::prime_power(order) {
        Some((2, k)) if k >= min => Ok(k),
        _ => Err(Error::InvalidParams(format!(
            "{family} order must be 2^k with k >= {min}, got {order}"
        ))),
    }
}

/// `Q_{2^k} = MC(2^{k-1}, 2, 2^{k-2}, 2^{k-1} - 1)`, `k >= 3`.
pub fn generalized_quaternion(order: u64) -> Result<GroupSpec> {
    let k = two_power_exponent(order, 3, "generalized quaternion")?;
    let m = 1u64 << (k - 1);
    Ok(GroupSpec::Metacyclic {
        params: MetacyclicParams::new(m, 2, m / 2, m - 1)?,
        preset: Some(MetacyclicPreset::GeneralizedQuaternion),
    })
}

/// `SD_{2^k} = MC(2^{k-1}, 2, 0, 2^{k-2} - 1)`, `k >= 4`.
pub fn quasidihedral(order: u64) -> Result<GroupSpec> {
    let k = two_power_exponent(order, 4, "quasidihedral")?;
    let m = 1u64 << (k - 1);
    Ok(GroupSpec::Metacyclic {
        params: MetacyclicParams::new(m, 2, 0, m / 2 - 1)?,
        preset: Some(MetacyclicPreset::Quasidihedral),
    })
}

/// The abelian type of a spec, if the spec is one of the abelian families.
pub fn abelian_type_of(g: &GroupSpec) -> Option<AbelianType> {
    match g {
        GroupSpec::Cyclic { n } => AbelianType::from_cyclic_orders(&[*n]).ok(),
        GroupSpec::Abelian(t) => Some(t.clone()),
        GroupSpec::ElementaryAbelian { p, rank } => {
            AbelianType::new(&[(*p, vec![1; *rank as usize])]).ok()
        }
        GroupSpec::DirectProduct(fs) => {
            let mut all = Vec::new();
            for f in fs {
                all.extend(abelian_type_of(f)?.factors().iter().cloned());
            }
            AbelianType::new(&all).ok()
        }
        _ => None,
    }
}

/// `Q_8 x Z_2^rank x A` with `A` abelian of odd order.
pub fn hamiltonian(rank: u32, odd: &GroupSpec) -> Result<GroupSpec> {
    let t = abelian_type_of(odd).ok_or_else(|| {
        Error::InvalidParams(format!("hamiltonian factor {odd} is not an abelian family"))
    })?;
    if t.factors().iter().any(|(p, _)| *p == 2) {
        return Err(Error::InvalidParams(format!(
            "hamiltonian factor {odd} must have odd order"
        )));
    }
    Ok(GroupSpec::Hamiltonian { rank, odd: t })
}

/// Nonabelian `Z_p^{n-1} x| Z_q`, `q | p - 1`, the generator of `Z_q`
/// acting by `v -> t v` for the least `t > 1` of multiplicative order `q`.
pub fn p_group_p(p: u64, q: u64, n: u32) -> Result<GroupSpec> {
    if p <= 2 || !arith::is_prime(p) {
        return Err(Error::InvalidParams(format!("p = {p} must be an odd prime")));
    }
    if !arith::is_prime(q) || (p - 1) % q != 0 {
        return Err(Error::InvalidParams(format!(
            "q = {q} must be a prime dividing p - 1 = {}",
            p - 1
        )));
    }
    if n < 2 {
        return Err(Error::InvalidParams(format!("n = {n} must be at least 2")));
    }
    let t = arith::least_root_of_unity(p, q).expect("q | p - 1 gives a root of unity");
    Ok(GroupSpec::PGroup(PGroupParams { p, q, n, t }))
}

pub fn symmetric(degree: usize) -> Result<GroupSpec> {
    if degree == 0 {
        return Err(Error::InvalidParams("symmetric degree must be at least 1".into()));
    }
    Ok(GroupSpec::Symmetric { degree })
}

pub fn alternating(degree: usize) -> Result<GroupSpec> {
    if degree < 2 {
        return Err(Error::InvalidParams("alternating degree must be at least 2".into()));
    }
    Ok(GroupSpec::Alternating { degree })
}

/// M11 as a permutation group on 11 points. Enumeration checks that the
/// generators close to exactly 7920 elements.
pub fn mathieu11() -> GroupSpec {
    GroupSpec::Mathieu11
}

pub fn direct_product(factors: Vec<GroupSpec>) -> Result<GroupSpec> {
    match factors.len() {
        0 => Err(Error::InvalidParams("direct product needs at least one factor".into())),
        _ => Ok(GroupSpec::DirectProduct(factors)),
    }
}

/// Every abelian type of order exactly `n`, one per isomorphism class.
pub fn abelian_types_of_order(n: u64) -> Vec<AbelianType> {
    let mut types: Vec<Vec<(u64, Vec<u32>)>> = vec![vec![]];
    for (p, k) in arith::factorize(n) {
        let shapes: Vec<Vec<u32>> = Partitions::new(k).map(|l| l.parts().to_vec()).collect();
        types = types
            .into_iter()
            .flat_map(|t| {
                shapes.iter().map(move |e| {
                    let mut t = t.clone();
                    t.push((p, e.clone()));
                    t
                })
            })
            .collect();
    }
    types
        .into_iter()
        .map(|t| AbelianType::new(&t).expect("prime factors"))
        .collect()
}

/// Every abelian type of order `1..=bound`.
pub fn abelian_types_up_to(bound: u64) -> Vec<AbelianType> {
    (1..=bound).flat_map(abelian_types_of_order).collect()
}

/// The most specific abelian family for a type: cyclic, elementary abelian
/// of rank at least 2, or general.
pub fn from_abelian_type(t: &AbelianType) -> GroupSpec {
    let moduli = t.moduli();
    if t.is_cyclic() {
        return GroupSpec::Cyclic {
            n: moduli.iter().product(),
        };
    }
    match t.factors() {
        [(p, exps)] if exps.iter().all(|&e| e == 1) => GroupSpec::ElementaryAbelian {
            p: *p,
            rank: exps.len() as u32,
        },
        _ => GroupSpec::Abelian(t.clone()),
    }
}

#[cfg(test)]
mod tests {
    #[test]
    fn abelian_type_counts() {
        // number of abelian groups of order n, OEIS A000688
        let expect = [1, 1, 1, 2, 1, 1, 1, 3, 2, 1, 1, 2, 1, 1, 1, 5];
        for (i, &c) in expect.iter().enumerate() {
            assert_eq!(abelian_types_of_order(i as u64 + 1).len(), c, "n = {}", i + 1);
        }
        assert_eq!(abelian_types_of_order(64).len(), 11);
        assert_eq!(abelian_types_of_order(720).len(), 10);
        assert!(matches!(
            from_abelian_type(&AbelianType::from_cyclic_orders(&[2, 2]).unwrap()),
            GroupSpec::ElementaryAbelian { p: 2, rank: 2 }
        ));
        assert!(matches!(
            from_abelian_type(&AbelianType::from_cyclic_orders(&[1]).unwrap()),
            GroupSpec::Cyclic { n: 1 }
        ));
    }

    use super::*;
    use crate::group::{enumerated_spectrum, exponent, phi};
    use num_bigint::BigUint;
    use num_traits::{ToPrimitive, Zero};

    fn phi_u64(g: &GroupSpec) -> u64 {
        phi(g).unwrap().to_u64().unwrap()
    }

    #[test]
    fn cyclic_phi_is_classical() {
        assert!(cyclic(0).is_err());
        for n in 1..=60 {
            let g = cyclic(n).unwrap();
            assert_eq!(phi_u64(&g), arith::euler_phi(n));
            assert_eq!(
                enumerated_spectrum(&g).unwrap().phi().unwrap().to_u64(),
                Some(arith::euler_phi(n))
            );
        }
        let z6: Vec<_> = enumerated_spectrum(&cyclic(6).unwrap())
            .unwrap()
            .counts()
            .iter()
            .map(|(d, c)| (*d, c.to_u64().unwrap()))
            .collect();
        assert_eq!(z6, vec![(1, 1), (2, 1), (3, 2), (6, 2)]);
    }

    #[test]
    fn abelian_examples() {
        let z2z4 = abelian(&[(2, vec![1, 2])]).unwrap();
        assert_eq!(enumerated_spectrum(&z2z4).unwrap().phi().unwrap(), BigUint::from(4u32));
        let k = abelian(&[(2, vec![1, 1])]).unwrap();
        assert_eq!(phi_u64(&k), 3);
        assert!(abelian(&[(6, vec![1])]).is_err());
    }

    #[test]
    fn elementary_abelian_examples() {
        assert_eq!(phi_u64(&elementary_abelian(3, 2).unwrap()), 8);
        assert_eq!(phi_u64(&elementary_abelian(5, 1).unwrap()), 4);
        assert!(elementary_abelian(4, 2).is_err());
    }

    #[test]
    fn dihedral_examples() {
        assert_eq!(phi_u64(&dihedral(8).unwrap()), 2);
        assert_eq!(phi_u64(&dihedral(12).unwrap()), 2);
        assert_eq!(phi_u64(&dihedral(10).unwrap()), 0);
        assert!(dihedral(6).is_ok());
        assert!(dihedral(7).is_err());
        assert!(dihedral(2).is_err());
    }

    #[test]
    fn metacyclic_presets() {
        let q16 = generalized_quaternion(16).unwrap();
        assert_eq!(phi_u64(&q16), 4);
        let q8 = generalized_quaternion(8).unwrap();
        assert_eq!(q8.params(), metacyclic(4, 2, 2, 3).unwrap().params());
        let sd16 = quasidihedral(16).unwrap();
        assert_eq!(exponent(&sd16).unwrap(), 8);
        assert_eq!(phi_u64(&sd16), 4);
        assert!(quasidihedral(8).is_err());
        assert!(generalized_quaternion(12).is_err());
        assert_eq!(dihedral(8).unwrap().params(), metacyclic(4, 2, 0, 3).unwrap().params());
    }

    #[test]
    fn hamiltonian_examples() {
        assert_eq!(phi_u64(&hamiltonian(0, &cyclic(1).unwrap()).unwrap()), 6);
        assert_eq!(phi_u64(&hamiltonian(1, &cyclic(1).unwrap()).unwrap()), 12);
        let h = hamiltonian(1, &cyclic(9).unwrap()).unwrap();
        assert_eq!(phi_u64(&h), 72);
        assert_eq!(enumerated_spectrum(&h).unwrap().phi().unwrap(), BigUint::from(72u32));
        assert!(hamiltonian(0, &cyclic(2).unwrap()).is_err());
        assert!(hamiltonian(0, &symmetric(3).unwrap()).is_err());
    }

    #[test]
    fn p_groups() {
        let g = p_group_p(3, 2, 2).unwrap();
        let s: Vec<_> = enumerated_spectrum(&g)
            .unwrap()
            .counts()
            .iter()
            .map(|(d, c)| (*d, c.to_u64().unwrap()))
            .collect();
        assert_eq!(s, vec![(1, 1), (2, 3), (3, 2)]);
        for (p, q, n) in [(3, 2, 3), (5, 2, 2), (7, 3, 2)] {
            let g = p_group_p(p, q, n).unwrap();
            assert!(phi(&g).unwrap().is_zero());
            assert_eq!(exponent(&g).unwrap(), p * q);
        }
        assert!(p_group_p(7, 5, 2).is_err());
        assert!(p_group_p(2, 1, 2).is_err());
        assert!(p_group_p(7, 3, 1).is_err());
    }

    #[test]
    fn symmetric_and_alternating_small_cases() {
        assert_eq!(phi_u64(&symmetric(1).unwrap()), 1);
        assert_eq!(phi_u64(&symmetric(2).unwrap()), 1);
        assert_eq!(phi_u64(&alternating(2).unwrap()), 1);
        assert_eq!(phi_u64(&alternating(3).unwrap()), 2);
        assert_eq!(phi_u64(&alternating(5).unwrap()), 0);
        assert!(alternating(1).is_err());
        assert!(symmetric(0).is_err());
    }

    #[test]
    fn mathieu11_closure() {
        let m = mathieu11();
        let s = enumerated_spectrum(&m).unwrap();
        assert_eq!(*s.group_order(), BigUint::from(7920u32));
        assert_eq!(s.exponent().unwrap(), 1320);
        assert_eq!(s.support(), vec![1, 2, 3, 4, 5, 6, 8, 11]);
    }

    #[test]
    fn direct_products() {
        assert!(direct_product(vec![]).is_err());
        let g = direct_product(vec![cyclic(3).unwrap(), symmetric(3).unwrap()]).unwrap();
        assert_eq!(phi_u64(&g), 6);
        let s3 = symmetric(3).unwrap();
        let with_trivial = direct_product(vec![s3.clone(), cyclic(1).unwrap()]).unwrap();
        assert_eq!(
            enumerated_spectrum(&with_trivial).unwrap(),
            enumerated_spectrum(&s3).unwrap()
        );
    }
}
