use std::fmt;

use serde::Serialize;

use super::perm::Perm;

/// A group element in the canonical payload of its realization.
///
/// Each realization maps group elements one-to-one onto payloads, so payload
/// equality is group-element equality.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Debug, Serialize)]
pub enum Element {
    /// `a mod n` in `Z_n`.
    Residue(u64),
    /// One residue per cyclic factor of an abelian group.
    Tuple(Vec<u64>),
    Perm(Perm),
    /// `b^i a^j` in a metacyclic group, `0 <= i < n`, `0 <= j < m`.
    Meta { i: u64, j: u64 },
    /// `(v, c)` in `Z_p^{n-1} x| Z_q`.
    Affine { vector: Vec<u64>, power: u64 },
    /// One component per direct factor.
    Product(Vec<Element>),
    /// Row index into a Cayley table.
    Index(u32),
}

impl fmt::Display for Element {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Element::Residue(a) => write!(f, "{a}"),
            Element::Tuple(v) => write_tuple(f, v),
            Element::Perm(p) => write!(f, "{p}"),
            Element::Meta { i, j } => write!(f, "b^{i}a^{j}"),
            Element::Affine { vector, power } => {
                write!(f, "(")?;
                write_tuple(f, vector)?;
                write!(f, ", {power})")
            }
            Element::Product(parts) => {
                write!(f, "(")?;
                for (k, p) in parts.iter().enumerate() {
                    if k > 0 {
                        write!(f, ", ")?;
                    }
                    write!(f, "{p}")?;
                }
                write!(f, ")")
            }
            Element::Index(i) => write!(f, "x{i}"),
        }
    }
}

fn write_tuple(f: &mut fmt::Formatter<'_>, v: &[u64]) -> fmt::Result {
    write!(f, "(")?;
    for (k, x) in v.iter().enumerate() {
        if k > 0 {
            write!(f, ", ")?;
        }
        write!(f, "{x}")?;
    }
    write!(f, ")")
}
