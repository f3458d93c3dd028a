//! Order statistics of a group: spectra, exponent, `phi(G)` and friends.

use std::collections::HashSet;

use num_bigint::BigUint;
use num_integer::Integer;
use num_traits::{ToPrimitive, Zero};
use serde::Serialize;

use super::element::Element;
use super::spec::GroupSpec;
use super::spectrum::Spectrum;
use crate::arith::{self, gcd};
use crate::closed_forms::partition;
use crate::count::serialize_big;
use crate::error::{Error, Result};
use crate::OrderSpectrum;

/// Spectrum by brute force: enumerate every element and take its order.
/// This is the oracle every closed form is checked against.
pub fn enumerated_spectrum(g: &GroupSpec) -> Result<OrderSpectrum> {
    let mut orders = Vec::new();
    for x in g.enumerate()? {
        orders.push(g.element_order(&x)?);
    }
    let spectrum = Spectrum::from_orders(orders);
    if *spectrum.group_order() != g.order() {
        return Err(Error::Integrity(format!(
            "{g}: enumerated {} elements, declared order {}",
            spectrum.group_order(),
            g.order()
        )));
    }
    Ok(spectrum)
}

/// Spectrum using structural shortcuts where they exist: the divisor formula
/// for cyclic groups, lcm-convolution for direct products (abelian and
/// hamiltonian groups included), and cycle-type counting for symmetric and
/// alternating groups. Everything else is enumerated.
pub fn order_spectrum(g: &GroupSpec) -> Result<OrderSpectrum> {
    match g {
        GroupSpec::Cyclic { n } => Ok(cyclic_spectrum(*n)),
        GroupSpec::Abelian(t) => t
            .moduli()
            .into_iter()
            .try_fold(Spectrum::trivial(), |acc, q| acc.lcm_convolve(&cyclic_spectrum(q))),
        GroupSpec::ElementaryAbelian { p, rank } => {
            let zp = cyclic_spectrum(*p);
            (0..*rank).try_fold(Spectrum::trivial(), |acc, _| acc.lcm_convolve(&zp))
        }
        GroupSpec::DirectProduct(_) | GroupSpec::Hamiltonian { .. } => g
            .product_factors()
            .expect("product spec")
            .iter()
            .try_fold(Spectrum::trivial(), |acc, f| acc.lcm_convolve(&order_spectrum(f)?)),
        GroupSpec::Symmetric { degree } => partition::symmetric_spectrum(*degree),
        GroupSpec::Alternating { degree } => partition::alternating_spectrum(*degree),
        _ => enumerated_spectrum(g),
    }
}

/// `Z_n` has `phi(d)` elements of order `d` for each `d | n`.
fn cyclic_spectrum(n: u64) -> OrderSpectrum {
    Spectrum::from_counts(
        arith::divisors(n)
            .into_iter()
            .map(|d| (d, BigUint::from(arith::euler_phi(d))))
            .collect(),
    )
}

pub fn exponent(g: &GroupSpec) -> Result<u64> {
    order_spectrum(g)?.exponent()
}

/// `phi(G)`: the number of elements of order `exp(G)`.
pub fn phi(g: &GroupSpec) -> Result<BigUint> {
    order_spectrum(g)?.phi()
}

/// `k = phi(G) / phi(exp(G))`, the number of cyclic subgroups of order
/// `exp(G)`, read off the spectrum.
pub fn cyclic_count_max(g: &GroupSpec) -> Result<BigUint> {
    k_from_spectrum(&order_spectrum(g)?)
}

pub(crate) fn k_from_spectrum(s: &OrderSpectrum) -> Result<BigUint> {
    let exp = s.exponent()?;
    let phi_g = s.count(exp);
    let phi_exp = BigUint::from(arith::euler_phi(exp));
    let (k, rem) = phi_g.div_rem(&phi_exp);
    if !rem.is_zero() {
        return Err(Error::Integrity(format!(
            "phi(G) = {phi_g} is not a multiple of phi(exp) = {phi_exp}"
        )));
    }
    Ok(k)
}

/// Counts the cyclic subgroups of order `m` directly, by grouping the
/// elements of order `m` into generator classes `{a^j : gcd(j, m) = 1}`.
pub fn count_cyclic_subgroups(g: &GroupSpec, m: u64) -> Result<u64> {
    let mut pending: HashSet<Element> = HashSet::new();
    for x in g.enumerate()? {
        if g.element_order(&x)? == m {
            pending.insert(x);
        }
    }
    let mut k = 0;
    while let Some(a) = pending.iter().next().cloned() {
        k += 1;
        let mut x = a.clone();
        for j in 1..=m {
            if gcd(j, m) == 1 && !pending.remove(&x) {
                return Err(Error::Integrity(format!(
                    "{g}: generator {x} of <{a}> missing from the order-{m} set"
                )));
            }
            x = g.multiply(&x, &a)?;
        }
    }
    Ok(k)
}

/// Size of the center, by testing every element against a generating set.
pub fn center_order(g: &GroupSpec) -> Result<u64> {
    let gens = g.generators()?;
    let mut count = 0;
    for x in g.enumerate()? {
        let mut central = true;
        for y in &gens {
            if g.multiply(&x, y)? != g.multiply(y, &x)? {
                central = false;
                break;
            }
        }
        if central {
            count += 1;
        }
    }
    Ok(count)
}

/// Searches for pairwise commuting `a_1, ..., a_k` with `o(a_i) = p_i^b_i`,
/// where `exp(G) = prod p_i^b_i`. Such a tuple exists exactly when some
/// element has order `exp(G)`.
///
/// Returns `None` when no tuple exists; the trivial group yields the empty
/// tuple.
pub fn commuting_witness(g: &GroupSpec) -> Result<Option<Vec<Element>>> {
    let mut elements = Vec::new();
    let mut exp = 1u64;
    for x in g.enumerate()? {
        let o = g.element_order(&x)?;
        exp = arith::checked_lcm(exp, o)?;
        elements.push((x, o));
    }
    let targets: Vec<u64> = arith::factorize(exp)
        .into_iter()
        .map(|(p, b)| p.pow(b))
        .collect();
    let mut lists: Vec<Vec<Element>> = targets
        .iter()
        .map(|&q| {
            elements
                .iter()
                .filter(|(_, o)| *o == q)
                .map(|(x, _)| x.clone())
                .collect()
        })
        .collect();
    // Smallest candidate lists first prunes hardest.
    lists.sort_by_key(|l| l.len());
    let mut chosen = Vec::with_capacity(lists.len());
    if search_commuting(g, &lists, &mut chosen)? {
        Ok(Some(chosen))
    } else {
        Ok(None)
    }
}

fn search_commuting(
    g: &GroupSpec,
    lists: &[Vec<Element>],
    chosen: &mut Vec<Element>,
) -> Result<bool> {
    let level = chosen.len();
    if level == lists.len() {
        return Ok(true);
    }
    'candidates: for x in &lists[level] {
        for y in chosen.iter() {
            if g.multiply(x, y)? != g.multiply(y, x)? {
                continue 'candidates;
            }
        }
        chosen.push(x.clone());
        if search_commuting(g, lists, chosen)? {
            return Ok(true);
        }
        chosen.pop();
    }
    Ok(false)
}

/// Summary of the totient-related quantities of one group.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct PhiReport {
    pub group: String,
    #[serde(serialize_with = "serialize_big")]
    pub order: BigUint,
    pub exponent: u64,
    #[serde(serialize_with = "serialize_big")]
    pub phi_g: BigUint,
    #[serde(serialize_with = "serialize_big")]
    pub k: BigUint,
    pub pi_e: Vec<u64>,
    pub in_class_c: bool,
    #[serde(serialize_with = "serialize_big")]
    pub phi_of_order: BigUint,
    pub phi_of_exp: u64,
    /// `phi(G) = phi(|G|)`.
    pub eq_order_flag: bool,
    /// `phi(G) = phi(exp(G))`, equivalently `k = 1`.
    pub eq_exp_flag: bool,
}

pub fn report(g: &GroupSpec) -> Result<PhiReport> {
    let spectrum = order_spectrum(g)?;
    report_from_spectrum(g, &spectrum)
}

pub fn report_from_spectrum(g: &GroupSpec, spectrum: &OrderSpectrum) -> Result<PhiReport> {
    let exponent = spectrum.exponent()?;
    let phi_g = spectrum.count(exponent);
    let k = k_from_spectrum(spectrum)?;
    let phi_of_order: BigUint = arith::euler_phi_of(&g.order_factorization());
    let phi_of_exp = arith::euler_phi(exponent);
    Ok(PhiReport {
        group: g.to_string(),
        order: spectrum.group_order().clone(),
        exponent,
        in_class_c: !phi_g.is_zero(),
        eq_order_flag: phi_g == phi_of_order,
        eq_exp_flag: phi_g.to_u64() == Some(phi_of_exp),
        phi_g,
        k,
        pi_e: spectrum.support(),
        phi_of_order,
        phi_of_exp,
    })
}
