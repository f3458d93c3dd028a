//! Membership in the class of groups whose exponent is an element order,
//! the equivalent criteria, and the equation `phi(G) = p`.

use std::collections::HashSet;

use num_bigint::BigUint;
use num_traits::Zero;
use rayon::prelude::*;
use serde::Serialize;

use crate::arith::{self, gcd, is_prime, lcm};
use crate::error::{Error, Result};
use crate::families::{self, from_abelian_type};
use crate::group::{self, GroupSpec, MetacyclicParams, MAX_ENUMERATED_DEGREE};
use crate::OrderSpectrum;

/// Bound on the modulus `m` of metacyclic presentations in the catalog.
pub const CATALOG_METACYCLIC_M: u64 = 40;
/// Bound on the index `n` of metacyclic presentations in the catalog.
pub const CATALOG_METACYCLIC_N: u64 = 12;

/// `phi(G) != 0`.
pub fn in_class_c(g: &GroupSpec) -> Result<bool> {
    Ok(!group::phi(g)?.is_zero())
}

/// The element orders are closed under `lcm` (and `gcd`) inside the divisor
/// lattice of `|G|`.
pub fn sublattice_check(g: &GroupSpec) -> Result<bool> {
    Ok(support_is_sublattice(&group::order_spectrum(g)?.support()))
}

pub fn support_is_sublattice(support: &[u64]) -> bool {
    let set: HashSet<u64> = support.iter().copied().collect();
    support.iter().all(|&a| {
        support
            .iter()
            .all(|&b| set.contains(&lcm(a, b)) && set.contains(&gcd(a, b)))
    })
}

/// The three equivalent membership tests, each computed on its own.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct MembershipCheck {
    pub phi_nonzero: bool,
    pub sublattice: bool,
    pub commuting_witness: bool,
}

impl MembershipCheck {
    pub fn agrees(&self) -> bool {
        self.phi_nonzero == self.sublattice && self.sublattice == self.commuting_witness
    }
}

pub fn membership_check(g: &GroupSpec) -> Result<MembershipCheck> {
    Ok(MembershipCheck {
        phi_nonzero: in_class_c(g)?,
        sublattice: sublattice_check(g)?,
        commuting_witness: group::commuting_witness(g)?.is_some(),
    })
}

/// The divisibility criterion `n | gcd(m, s)` (with `gcd(m, 0) = m`) for
/// `<a, b | a^m, b^n = a^s, b^-1 a b = a^r>`. This is sufficient for
/// membership but not necessary: abelian presentations such as
/// `(m, n, s, r) = (2, 3, 0, 1)` give `Z_6` yet fail it.
pub fn metacyclic_in_c(m: u64, n: u64, s: u64, r: u64) -> Result<bool> {
    let p = MetacyclicParams::new(m, n, s, r)?;
    Ok(gcd(p.m, p.s) % p.n == 0)
}

/// `Z_{exp(G)} x G`, which always contains an element of order `exp(G)`.
pub fn embed_in_c(g: &GroupSpec) -> Result<GroupSpec> {
    families::direct_product(vec![families::cyclic(group::exponent(g)?)?, g.clone()])
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum SolutionKind {
    Empty,
    SingleElementaryAbelian,
    FiveGroups,
}

/// All groups with `phi(G) = p`, up to isomorphism.
#[derive(Clone, Debug)]
pub struct SolutionSet {
    pub kind: SolutionKind,
    pub specs: Vec<GroupSpec>,
    pub p: u64,
}

fn spectrum_for_check(g: &GroupSpec) -> Result<OrderSpectrum> {
    if g.is_enumerable(group::enumeration_cap()) {
        group::enumerated_spectrum(g)
    } else {
        group::order_spectrum(g)
    }
}

/// Solves `phi(G) = p` for a prime `p`: five groups for `p = 2`, `Z_2^q`
/// when `p = 2^q - 1`, nothing otherwise. Each group is checked against the
/// counting oracle before it is returned.
pub fn solve_phi_eq_prime(p: u64) -> Result<SolutionSet> {
    if !is_prime(p) {
        return Err(Error::Domain(format!("{p} is not prime")));
    }
    let (kind, specs) = if p == 2 {
        (
            SolutionKind::FiveGroups,
            vec![
                families::cyclic(3)?,
                families::cyclic(4)?,
                families::cyclic(6)?,
                families::dihedral(8)?,
                families::dihedral(12)?,
            ],
        )
    } else if (p + 1).is_power_of_two() {
        let q = (p + 1).trailing_zeros();
        (
            SolutionKind::SingleElementaryAbelian,
            vec![families::elementary_abelian(2, q)?],
        )
    } else {
        (SolutionKind::Empty, vec![])
    };
    let target = BigUint::from(p);
    let mut fingerprints = HashSet::new();
    for g in &specs {
        let s = spectrum_for_check(g)?;
        if s.phi()? != target {
            return Err(Error::Integrity(format!(
                "{g}: phi = {}, expected {p}",
                s.phi()?
            )));
        }
        let counts: Vec<(u64, BigUint)> = s.counts().iter().map(|(d, c)| (*d, c.clone())).collect();
        if !fingerprints.insert(counts) {
            return Err(Error::Integrity(format!("{g}: repeated solution")));
        }
    }
    Ok(SolutionSet { kind, specs, p })
}

/// One group of the scan catalog with its oracle data.
#[derive(Clone, Debug)]
pub struct CatalogEntry {
    pub spec: GroupSpec,
    pub order: u64,
    pub spectrum: OrderSpectrum,
    pub center_order: u64,
}

impl CatalogEntry {
    pub fn phi(&self) -> BigUint {
        self.spectrum.phi().expect("catalog exponents fit in u64")
    }
}

fn candidates(bound: u64) -> Result<Vec<GroupSpec>> {
    let mut out = Vec::new();
    for t in families::abelian_types_up_to(bound) {
        out.push(from_abelian_type(&t));
    }
    // cyclic first, then elementary abelian, then the rest
    out.sort_by_key(|g| match g {
        GroupSpec::Cyclic { .. } => 0,
        GroupSpec::ElementaryAbelian { .. } => 1,
        _ => 2,
    });
    for n in 3..=bound / 2 {
        out.push(families::dihedral(2 * n)?);
    }
    let mut k = 8;
    while k <= bound {
        out.push(families::generalized_quaternion(k)?);
        if k >= 16 {
            out.push(families::quasidihedral(k)?);
        }
        k *= 2;
    }
    for rank in 0.. {
        let base = 8u64 << rank;
        if base > bound {
            break;
        }
        for t in families::abelian_types_up_to(bound / base) {
            if t.factors().iter().all(|(p, _)| *p != 2) {
                out.push(families::hamiltonian(rank, &from_abelian_type(&t))?);
            }
        }
    }
    for p in (3..bound).filter(|&p| is_prime(p)) {
        for q in arith::factorize(p - 1).into_keys() {
            let mut n = 2;
            while p.saturating_pow(n - 1).saturating_mul(q) <= bound {
                out.push(families::p_group_p(p, q, n)?);
                n += 1;
            }
        }
    }
    let mut fact = 2u64;
    for d in 3..=MAX_ENUMERATED_DEGREE {
        fact *= d as u64;
        if fact <= bound {
            out.push(families::symmetric(d)?);
        }
    }
    let mut fact = 6u64;
    for d in 4..=MAX_ENUMERATED_DEGREE {
        fact *= d as u64;
        if fact / 2 <= bound {
            out.push(families::alternating(d)?);
        }
    }
    if bound >= 7920 {
        out.push(families::mathieu11());
    }
    for m in 1..=CATALOG_METACYCLIC_M {
        for n in 2..=CATALOG_METACYCLIC_N {
            if m * n > bound {
                continue;
            }
            for s in 0..m {
                for r in 1..m.max(2) {
                    if MetacyclicParams::is_valid(m, n, s, r) {
                        let p = MetacyclicParams::new(m, n, s, r)?;
                        if !p.is_abelian() {
                            out.push(families::metacyclic(m, n, s, r)?);
                        }
                    }
                }
            }
        }
    }
    Ok(out)
}

/// Every family member of order at most `bound`, one per isomorphism
/// fingerprint (order, spectrum, center order), sorted by order, family
/// and parameters.
pub fn catalog(bound: u64) -> Result<Vec<CatalogEntry>> {
    catalog_with(bound, &[])
}

/// [`catalog`] plus the given (imported) groups.
pub fn catalog_with(bound: u64, registered: &[GroupSpec]) -> Result<Vec<CatalogEntry>> {
    let mut specs = candidates(bound)?;
    specs.extend(
        registered
            .iter()
            .filter(|g| g.order_u64().is_some_and(|n| n <= bound))
            .cloned(),
    );
    let entries = specs
        .into_par_iter()
        .map(|spec| {
            let spectrum = group::enumerated_spectrum(&spec)?;
            let center_order = group::center_order(&spec)?;
            let order = spec.order_u64().expect("bounded order");
            Ok(CatalogEntry {
                spec,
                order,
                spectrum,
                center_order,
            })
        })
        .collect::<Result<Vec<_>>>()?;
    let mut seen = HashSet::new();
    let mut kept: Vec<CatalogEntry> = entries
        .into_iter()
        .filter(|e| {
            let counts: Vec<(u64, BigUint)> =
                e.spectrum.counts().iter().map(|(d, c)| (*d, c.clone())).collect();
            seen.insert((e.order, counts, e.center_order))
        })
        .collect();
    kept.sort_by(|a, b| {
        (a.order, a.spec.kind(), a.spec.params(), a.spec.to_string()).cmp(&(
            b.order,
            b.spec.kind(),
            b.spec.params(),
            b.spec.to_string(),
        ))
    });
    Ok(kept)
}

/// Catalog groups of order at most `bound` with `phi(G) = target`.
pub fn catalog_scan(target: u64, bound: u64) -> Result<Vec<GroupSpec>> {
    catalog_scan_with(target, bound, &[])
}

pub fn catalog_scan_with(target: u64, bound: u64, registered: &[GroupSpec]) -> Result<Vec<GroupSpec>> {
    let target = BigUint::from(target);
    Ok(catalog_with(bound, registered)?
        .into_iter()
        .filter(|e| e.phi() == target)
        .map(|e| e.spec)
        .collect())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::families::*;

    fn names(v: &[GroupSpec]) -> Vec<String> {
        v.iter().map(|g| g.to_string()).collect()
    }

    #[test]
    fn membership_examples() {
        assert!(in_class_c(&dihedral(12).unwrap()).unwrap());
        assert!(!in_class_c(&symmetric(3).unwrap()).unwrap());
        assert!(sublattice_check(&cyclic(12).unwrap()).unwrap());
        assert!(!sublattice_check(&symmetric(3).unwrap()).unwrap());
        assert!(!sublattice_check(&alternating(4).unwrap()).unwrap());
        for g in [dihedral(12).unwrap(), symmetric(4).unwrap(), generalized_quaternion(8).unwrap()] {
            assert!(membership_check(&g).unwrap().agrees(), "{g}");
        }
    }

    #[test]
    fn metacyclic_criterion_examples() {
        assert!(metacyclic_in_c(4, 2, 2, 3).unwrap());
        assert!(!metacyclic_in_c(5, 2, 0, 4).unwrap());
        assert!(metacyclic_in_c(6, 2, 0, 5).unwrap());
        // Z_6 presented with n = 3 fails the criterion although phi(Z_6) = 2
        assert!(!metacyclic_in_c(2, 3, 0, 1).unwrap());
        assert!(in_class_c(&metacyclic(2, 3, 0, 1).unwrap()).unwrap());
        assert!(metacyclic_in_c(4, 2, 1, 3).is_err());
    }

    #[test]
    fn embedding() {
        let e = embed_in_c(&symmetric(3).unwrap()).unwrap();
        assert_eq!(group::phi(&e).unwrap(), BigUint::from(20u32));
        let z5 = embed_in_c(&cyclic(5).unwrap()).unwrap();
        assert!(in_class_c(&z5).unwrap());
        assert_eq!(z5.order(), BigUint::from(25u32));
        let a5 = embed_in_c(&alternating(5).unwrap()).unwrap();
        assert_eq!(a5.to_string(), "Z30xA5");
        assert!(in_class_c(&a5).unwrap());
    }

    #[test]
    fn prime_equation() {
        let two = solve_phi_eq_prime(2).unwrap();
        assert_eq!(two.kind, SolutionKind::FiveGroups);
        assert_eq!(two.specs.len(), 5);
        let three = solve_phi_eq_prime(3).unwrap();
        assert_eq!(names(&three.specs), vec!["Z2^2"]);
        assert_eq!(solve_phi_eq_prime(5).unwrap().kind, SolutionKind::Empty);
        assert_eq!(names(&solve_phi_eq_prime(7).unwrap().specs), vec!["Z2^3"]);
        assert!(matches!(solve_phi_eq_prime(9), Err(Error::Domain(_))));
        let big = solve_phi_eq_prime((1 << 31) - 1).unwrap();
        assert_eq!(names(&big.specs), vec!["Z2^31"]);
    }

    #[test]
    fn scans() {
        assert_eq!(names(&catalog_scan(2, 16).unwrap()), ["Z3", "Z4", "Z6", "D8", "D12"]);
        assert_eq!(names(&catalog_scan(1, 4).unwrap()), ["Z1", "Z2"]);
        let six = names(&catalog_scan(6, 20).unwrap());
        for g in ["Q8", "Z7", "Z9", "Z14", "Z18"] {
            assert!(six.contains(&g.to_string()), "{g} missing from {six:?}");
        }
    }

    #[test]
    fn catalog_is_sorted_and_deduplicated() {
        let c = catalog(32).unwrap();
        assert!(c.windows(2).all(|w| w[0].order <= w[1].order));
        // 1 + 1 + 1 + 2 + 1 + 2 + 1 + 5 ... groups of order <= 8 up to
        // isomorphism: all of them are in the catalog
        assert_eq!(c.iter().filter(|e| e.order <= 8).count(), 1 + 1 + 1 + 2 + 1 + 2 + 1 + 5);
        let order16 = c.iter().filter(|e| e.order == 16).count();
        assert!(order16 <= 14);
    }
}
