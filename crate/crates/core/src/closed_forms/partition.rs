//! Integer partitions and cycle-type counting in `S_n` and `A_n`.
//!
//! A permutation's order is the lcm of its cycle lengths, and the number of
//! permutations of cycle type `1^{m_1} 2^{m_2} ...` is
//! `n! / prod_k (k^{m_k} m_k!)`. Summing over partitions gives exact order
//! spectra without touching a single permutation.

use std::collections::BTreeMap;

use crate::arith::checked_lcm;
use crate::count::{self, Count};
use crate::error::{Error, Result};
use crate::group::Spectrum;
use crate::OrderSpectrum;

/// Largest degree the partition engine accepts (p(40) = 37338 partitions).
pub const MAX_PARTITION_DEGREE: usize = 40;

/// A partition of `n`: nonincreasing positive parts summing to `n`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Partition {
    parts: Vec<u32>,
}

impl Partition {
    pub fn new(mut parts: Vec<u32>) -> Result<Self> {
        if parts.contains(&0) {
            return Err(Error::InvalidParams("partition parts must be positive".into()));
        }
        parts.sort_unstable_by(|a, b| b.cmp(a));
        Ok(Partition { parts })
    }

    pub fn parts(&self) -> &[u32] {
        &self.parts
    }

    /// The integer being partitioned.
    pub fn n(&self) -> u32 {
        self.parts.iter().sum()
    }

    /// `part size -> how many times it occurs`.
    pub fn multiplicities(&self) -> BTreeMap<u32, u32> {
        let mut m = BTreeMap::new();
        for &p in &self.parts {
            *m.entry(p).or_insert(0) += 1;
        }
        m
    }

    pub fn lcm(&self) -> u64 {
        self.parts
            .iter()
            .try_fold(1u64, |acc, &p| checked_lcm(acc, p as u64))
            .expect("partition lcm fits in u64 for supported degrees")
    }

    /// Permutations of this cycle type are even.
    pub fn is_even(&self) -> bool {
        (self.n() as usize - self.parts.len()) % 2 == 0
    }

    /// Number of permutations of `S_n` with this cycle type.
    pub fn class_size<C: Count>(&self) -> C {
        let n = self.n() as u64;
        let mut num = C::one();
        for k in 2..=n {
            num = num * count::from_u64(k);
        }
        let mut den = C::one();
        for (k, m) in self.multiplicities() {
            let kc: C = count::from_u64(k as u64);
            for j in 1..=m {
                den = den * kc.clone() * count::from_u64(j as u64);
            }
        }
        num / den
    }
}

/// All partitions of `n` in reverse lexicographic order, generated lazily.
pub struct Partitions {
    current: Option<Vec<u32>>,
}

impl Partitions {
    pub fn new(n: u32) -> Self {
        Partitions {
            current: Some(if n == 0 { vec![] } else { vec![n] }),
        }
    }
}

impl Iterator for Partitions {
    type Item = Partition;

    fn next(&mut self) -> Option<Partition> {
        let cur = self.current.take()?;
        // Successor: lower the rightmost part above 1 and spread what is left
        // over parts no larger than it.
        if let Some(i) = cur.iter().rposition(|&p| p > 1) {
            let v = cur[i] - 1;
            let mut rest = (cur.len() - i - 1) as u32 + 1;
            let mut succ = cur[..i].to_vec();
            succ.push(v);
            while rest > v {
                succ.push(v);
                rest -= v;
            }
            if rest > 0 {
                succ.push(rest);
            }
            self.current = Some(succ);
        }
        Some(Partition { parts: cur })
    }
}

fn check_degree(n: usize) -> Result<()> {
    if n > MAX_PARTITION_DEGREE {
        return Err(Error::limit(
            format!("partition counting for degree {n}"),
            n,
            MAX_PARTITION_DEGREE as u64,
        ));
    }
    Ok(())
}

fn spectrum_over<C: Count>(n: usize, keep: impl Fn(&Partition) -> bool) -> Result<Spectrum<C>> {
    check_degree(n)?;
    let mut counts: BTreeMap<u64, C> = BTreeMap::new();
    for lambda in Partitions::new(n as u32).filter(|l| keep(l)) {
        *counts.entry(lambda.lcm()).or_insert_with(C::zero) += &lambda.class_size::<C>();
    }
    Ok(Spectrum::from_counts(counts))
}

/// Order spectrum of `S_n` from cycle types.
pub fn symmetric_spectrum_in<C: Count>(n: usize) -> Result<Spectrum<C>> {
    spectrum_over(n, |_| true)
}

/// Order spectrum of `A_n` from even cycle types.
pub fn alternating_spectrum_in<C: Count>(n: usize) -> Result<Spectrum<C>> {
    spectrum_over(n, Partition::is_even)
}

pub fn symmetric_spectrum(n: usize) -> Result<OrderSpectrum> {
    symmetric_spectrum_in(n)
}

pub fn alternating_spectrum(n: usize) -> Result<OrderSpectrum> {
    alternating_spectrum_in(n)
}

fn count_with_lcm<C: Count>(n: usize, m: u64, keep: impl Fn(&Partition) -> bool) -> Result<C> {
    check_degree(n)?;
    let mut total = C::zero();
    for lambda in Partitions::new(n as u32) {
        // every part divides m; cheap filter before the lcm
        if lambda.parts().iter().all(|&p| m % p as u64 == 0) && lambda.lcm() == m && keep(&lambda)
        {
            total += &lambda.class_size::<C>();
        }
    }
    Ok(total)
}

/// Number of elements of order `m` in `S_n`.
pub fn count_order_symmetric<C: Count>(n: usize, m: u64) -> Result<C> {
    count_with_lcm(n, m, |_| true)
}

/// Number of elements of order `m` in `A_n`.
pub fn count_order_alternating<C: Count>(n: usize, m: u64) -> Result<C> {
    count_with_lcm(n, m, Partition::is_even)
}

/// Lcm of the cycle-type lcms over all (or only even) partitions of `n`;
/// the exponent of `S_n` (or `A_n`) read off the partition engine.
pub fn partition_exponent(n: usize, even_only: bool) -> Result<u64> {
    check_degree(n)?;
    Partitions::new(n as u32)
        .filter(|l| !even_only || l.is_even())
        .try_fold(1u64, |acc, l| checked_lcm(acc, l.lcm()))
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_bigint::BigUint;

    // p(n) for n = 0..=20, OEIS A000041.
    const PARTITION_NUMBERS: [usize; 21] = [
        1, 1, 2, 3, 5, 7, 11, 15, 22, 30, 42, 56, 77, 101, 135, 176, 231, 297, 385, 490, 627,
    ];

    #[test]
    fn partition_counts() {
        for (n, &p) in PARTITION_NUMBERS.iter().enumerate() {
            assert_eq!(Partitions::new(n as u32).count(), p, "n = {n}");
        }
        assert_eq!(Partitions::new(40).count(), 37338);
    }

    #[test]
    fn reverse_lexicographic_order() {
        let all: Vec<Vec<u32>> = Partitions::new(5).map(|p| p.parts().to_vec()).collect();
        assert_eq!(
            all,
            vec![
                vec![5],
                vec![4, 1],
                vec![3, 2],
                vec![3, 1, 1],
                vec![2, 2, 1],
                vec![2, 1, 1, 1],
                vec![1, 1, 1, 1, 1],
            ]
        );
        for w in Partitions::new(12).collect::<Vec<_>>().windows(2) {
            assert!(w[0] > w[1]);
        }
    }

    #[test]
    fn class_sizes_sum_to_factorial() {
        for n in 0..=20u32 {
            let total: BigUint = Partitions::new(n).map(|l| l.class_size::<BigUint>()).sum();
            let fact: BigUint = (1..=n as u64).map(BigUint::from).product();
            assert_eq!(total, fact, "n = {n}");
        }
    }

    #[test]
    fn counts_by_order() {
        assert_eq!(count_order_symmetric::<u64>(5, 6).unwrap(), 20);
        assert_eq!(count_order_symmetric::<u64>(3, 1).unwrap(), 1);
        assert_eq!(count_order_symmetric::<u64>(4, 12).unwrap(), 0);
        assert_eq!(count_order_alternating::<u64>(5, 5).unwrap(), 24);
        assert_eq!(count_order_alternating::<u64>(5, 6).unwrap(), 0);
    }

    #[test]
    fn partition_helpers() {
        let l = Partition::new(vec![2, 3, 1, 3]).unwrap();
        assert_eq!(l.parts(), &[3, 3, 2, 1]);
        assert_eq!(l.n(), 9);
        assert_eq!(l.lcm(), 6);
        assert!(!l.is_even()); // 9 - 4 = 5
        assert_eq!(l.multiplicities().get(&3), Some(&2));
        assert!(Partition::new(vec![0, 1]).is_err());
    }

    #[test]
    fn degree_cap() {
        assert!(symmetric_spectrum(41).is_err());
        assert!(symmetric_spectrum(40).is_ok());
    }
}
