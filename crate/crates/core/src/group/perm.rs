use std::collections::{HashSet, VecDeque};
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::arith::lcm;
use crate::error::{Error, Result};

/// A permutation of `0..degree`, stored as its image array.
///
/// Products act left to right: `(x * y)(i) = y(x(i))`.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct Perm(Vec<u16>);

impl Perm {
    pub fn identity(degree: usize) -> Self {
        Perm((0..degree as u16).collect())
    }

    /// Validates that `images` is a bijection of `0..images.len()`.
    pub fn from_images(images: &[usize]) -> Result<Self> {
        let n = images.len();
        if n > u16::MAX as usize {
            return Err(Error::InvalidParams(format!("degree {n} is too large")));
        }
        let mut seen = vec![false; n];
        for (i, &img) in images.iter().enumerate() {
            if img >= n {
                return Err(Error::InvalidParams(format!(
                    "image {img} of point {i} is outside 0..{n}"
                )));
            }
            if std::mem::replace(&mut seen[img], true) {
                return Err(Error::InvalidParams(format!(
                    "point {img} is the image of more than one point"
                )));
            }
        }
        Ok(Perm(images.iter().map(|&i| i as u16).collect()))
    }

    /// Builds a permutation from disjoint cycles on `0..degree`.
    pub fn from_cycles(degree: usize, cycles: &[&[usize]]) -> Result<Self> {
        let mut images: Vec<usize> = (0..degree).collect();
        for cycle in cycles {
            for (k, &a) in cycle.iter().enumerate() {
                let b = cycle[(k + 1) % cycle.len()];
                if a >= degree || b >= degree {
                    return Err(Error::InvalidParams(format!(
                        "cycle point out of range 0..{degree}"
                    )));
                }
                images[a] = b;
            }
        }
        Perm::from_images(&images)
    }

    pub fn degree(&self) -> usize {
        self.0.len()
    }

    pub fn images(&self) -> &[u16] {
        &self.0
    }

    pub fn apply(&self, point: usize) -> usize {
        self.0[point] as usize
    }

    pub fn compose(&self, other: &Perm) -> Perm {
        debug_assert_eq!(self.degree(), other.degree());
        Perm(self.0.iter().map(|&i| other.0[i as usize]).collect())
    }

    pub fn inverse(&self) -> Perm {
        let mut inv = vec![0u16; self.0.len()];
        for (i, &img) in self.0.iter().enumerate() {
            inv[img as usize] = i as u16;
        }
        Perm(inv)
    }

    pub fn is_identity(&self) -> bool {
        self.0.iter().enumerate().all(|(i, &img)| i == img as usize)
    }

    /// Lengths of all cycles, fixed points included.
    pub fn cycle_type(&self) -> Vec<usize> {
        let n = self.0.len();
        let mut seen = vec![false; n];
        let mut lengths = Vec::new();
        for start in 0..n {
            if seen[start] {
                continue;
            }
            let mut len = 0;
            let mut i = start;
            while !seen[i] {
                seen[i] = true;
                i = self.0[i] as usize;
                len += 1;
            }
            lengths.push(len);
        }
        lengths
    }

    pub fn order(&self) -> u64 {
        self.cycle_type().into_iter().fold(1, |acc, l| lcm(acc, l as u64))
    }

    pub fn is_even(&self) -> bool {
        let cycles = self.cycle_type();
        (self.0.len() - cycles.len()) % 2 == 0
    }
}

impl fmt::Debug for Perm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Perm{:?}", self.0)
    }
}

impl fmt::Display for Perm {
    /// Disjoint cycle notation, `()` for the identity.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let n = self.0.len();
        let mut seen = vec![false; n];
        let mut wrote = false;
        for start in 0..n {
            if seen[start] || self.0[start] as usize == start {
                continue;
            }
            write!(f, "(")?;
            let mut i = start;
            let mut first = true;
            while !seen[i] {
                seen[i] = true;
                if !first {
                    write!(f, " ")?;
                }
                write!(f, "{i}")?;
                first = false;
                i = self.0[i] as usize;
            }
            write!(f, ")")?;
            wrote = true;
        }
        if !wrote {
            write!(f, "()")?;
        }
        Ok(())
    }
}

/// Breadth-first closure of a generating set. Fails once more than `cap`
/// elements have been discovered.
pub fn closure(degree: usize, generators: &[Perm], cap: u64) -> Result<Vec<Perm>> {
    let id = Perm::identity(degree);
    let mut seen: HashSet<Perm> = HashSet::new();
    let mut queue = VecDeque::new();
    let mut out = Vec::new();
    seen.insert(id.clone());
    queue.push_back(id);
    while let Some(x) = queue.pop_front() {
        for g in generators {
            let y = x.compose(g);
            if !seen.contains(&y) {
                if seen.len() as u64 >= cap {
                    return Err(Error::limit(
                        "permutation closure",
                        format!("more than {cap} elements"),
                        cap,
                    ));
                }
                seen.insert(y.clone());
                queue.push_back(y);
            }
        }
        out.push(x);
    }
    Ok(out)
}

/// Lexicographic successor of an arrangement; `false` once exhausted.
pub(crate) fn next_permutation(a: &mut [u16]) -> bool {
    if a.len() < 2 {
        return false;
    }
    let mut i = a.len() - 1;
    while i > 0 && a[i - 1] >= a[i] {
        i -= 1;
    }
    if i == 0 {
        return false;
    }
    let mut j = a.len() - 1;
    while a[j] <= a[i - 1] {
        j -= 1;
    }
    a.swap(i - 1, j);
    a[i..].reverse();
    true
}

/// Iterates over all permutations of `0..degree` in lexicographic order.
pub(crate) struct AllPerms {
    current: Option<Vec<u16>>,
}

impl AllPerms {
    pub(crate) fn new(degree: usize) -> Self {
        AllPerms {
            current: Some((0..degree as u16).collect()),
        }
    }
}

impl Iterator for AllPerms {
    type Item = Perm;

    fn next(&mut self) -> Option<Perm> {
        let cur = self.current.take()?;
        let mut succ = cur.clone();
        if next_permutation(&mut succ) {
            self.current = Some(succ);
        }
        Some(Perm(cur))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn order_is_lcm_of_cycles() {
        // (1 2 3)(4 5) in 1-based notation
        let p = Perm::from_cycles(5, &[&[0, 1, 2], &[3, 4]]).unwrap();
        assert_eq!(p.order(), 6);
        let mut q = p.clone();
        let mut t = 1;
        while !q.is_identity() {
            q = q.compose(&p);
            t += 1;
        }
        assert_eq!(t, 6);
        assert_eq!(p.to_string(), "(0 1 2)(3 4)");
    }

    #[test]
    fn rejects_non_bijections() {
        assert!(Perm::from_images(&[0, 0, 1]).is_err());
        assert!(Perm::from_images(&[0, 3]).is_err());
    }

    #[test]
    fn all_perms_counts() {
        assert_eq!(AllPerms::new(0).count(), 1);
        assert_eq!(AllPerms::new(1).count(), 1);
        assert_eq!(AllPerms::new(5).count(), 120);
        assert_eq!(AllPerms::new(5).filter(|p| p.is_even()).count(), 60);
    }

    #[test]
    fn closure_of_s4_generators() {
        let a = Perm::from_cycles(4, &[&[0, 1]]).unwrap();
        let b = Perm::from_cycles(4, &[&[0, 1, 2, 3]]).unwrap();
        assert_eq!(closure(4, &[a.clone(), b.clone()], 100).unwrap().len(), 24);
        assert!(closure(4, &[a, b], 10).is_err());
    }

    #[test]
    fn inverse_composes_to_identity() {
        let p = Perm::from_cycles(6, &[&[0, 3, 5], &[1, 4]]).unwrap();
        assert!(p.compose(&p.inverse()).is_identity());
    }
}
