use std::collections::BTreeMap;

use crate::arith::{self, checked_lcm};
use crate::count::{self, Count};
use crate::error::{Error, Result};

/// Exact element-order histogram of a finite group: `d -> N_d`, the number
/// of elements of order `d`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Spectrum<C> {
    counts: BTreeMap<u64, C>,
    group_order: C,
}

impl<C: Count> Spectrum<C> {
    /// Builds a spectrum from a histogram; zero entries are dropped and the
    /// group order is the total.
    pub fn from_counts(counts: BTreeMap<u64, C>) -> Self {
        let counts: BTreeMap<u64, C> = counts.into_iter().filter(|(_, c)| !c.is_zero()).collect();
        let mut total = C::zero();
        for c in counts.values() {
            total += c;
        }
        Spectrum {
            counts,
            group_order: total,
        }
    }

    /// Histogram of a stream of element orders.
    pub fn from_orders(orders: impl IntoIterator<Item = u64>) -> Self {
        let mut raw: BTreeMap<u64, u64> = BTreeMap::new();
        for d in orders {
            *raw.entry(d).or_insert(0) += 1;
        }
        Self::from_counts(
            raw.into_iter()
                .map(|(d, c)| (d, count::from_u64(c)))
                .collect(),
        )
    }

    /// The trivial group's spectrum `{1: 1}`.
    pub fn trivial() -> Self {
        Self::from_counts([(1, count::one())].into_iter().collect())
    }

    pub fn group_order(&self) -> &C {
        &self.group_order
    }

    /// `N_d`, zero when no element has order `d`.
    pub fn count(&self, d: u64) -> C {
        self.counts.get(&d).cloned().unwrap_or_else(C::zero)
    }

    pub fn counts(&self) -> &BTreeMap<u64, C> {
        &self.counts
    }

    /// `pi_e(G)`: the sorted set of element orders.
    pub fn support(&self) -> Vec<u64> {
        self.counts.keys().copied().collect()
    }

    /// `exp(G)`, the lcm of all element orders.
    pub fn exponent(&self) -> Result<u64> {
        self.counts.keys().try_fold(1, |acc, &d| checked_lcm(acc, d))
    }

    /// Number of elements whose order equals the exponent.
    pub fn phi(&self) -> Result<C> {
        Ok(self.count(self.exponent()?))
    }

    /// Pointwise sum; merges spectra of disjoint parts of one group.
    pub fn merge(&mut self, other: &Spectrum<C>) {
        for (d, c) in &other.counts {
            *self.counts.entry(*d).or_insert_with(C::zero) += c;
        }
        self.group_order += &other.group_order;
    }

    /// Spectrum of `G x H` from the spectra of `G` and `H`:
    /// `N_d(G x H) = sum_{lcm(e, f) = d} N_e(G) N_f(H)`.
    pub fn lcm_convolve(&self, other: &Spectrum<C>) -> Result<Spectrum<C>> {
        let mut out: BTreeMap<u64, C> = BTreeMap::new();
        for (e, a) in &self.counts {
            for (f, b) in &other.counts {
                let d = checked_lcm(*e, *f)?;
                *out.entry(d).or_insert_with(C::zero) += &(a.clone() * b.clone());
            }
        }
        Ok(Spectrum {
            counts: out,
            group_order: self.group_order.clone() * other.group_order.clone(),
        })
    }

    /// Re-expresses the counts in another count type.
    pub fn convert<D: Count>(&self) -> Option<Spectrum<D>> {
        let counts = self
            .counts
            .iter()
            .map(|(d, c)| count::convert::<C, D>(c).map(|c| (*d, c)))
            .collect::<Option<BTreeMap<_, _>>>()?;
        Some(Spectrum {
            counts,
            group_order: count::convert(&self.group_order)?,
        })
    }

    /// Checks the structural invariants every order spectrum satisfies:
    /// the counts sum to `|G|`, `N_1 = 1`, orders divide `exp(G)`, the
    /// support is closed under divisors and `phi(d) | N_d`.
    pub fn check_invariants(&self) -> Result<()> {
        let mut total = C::zero();
        for c in self.counts.values() {
            total += c;
        }
        if total != self.group_order {
            return Err(Error::Integrity(format!(
                "spectrum counts sum to {total}, group order is {}",
                self.group_order
            )));
        }
        if self.count(1) != C::one() {
            return Err(Error::Integrity("N_1 must be 1".into()));
        }
        let exp = self.exponent()?;
        for (&d, c) in &self.counts {
            if exp % d != 0 {
                return Err(Error::Integrity(format!("order {d} does not divide exp {exp}")));
            }
            for e in arith::divisors(d) {
                if !self.counts.contains_key(&e) {
                    return Err(Error::Integrity(format!(
                        "order {d} present but its divisor {e} is not"
                    )));
                }
            }
            let phi_d: C = count::from_u64(arith::euler_phi(d));
            if !(c.clone() % phi_d.clone()).is_zero() {
                return Err(Error::Integrity(format!(
                    "phi({d}) = {phi_d} does not divide N_{d} = {c}"
                )));
            }
        }
        Ok(())
    }
}
