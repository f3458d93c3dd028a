//! The exact counting type used for element counts and group orders.
//!
//! Everything that counts elements is generic over [`Count`]; the crate root
//! fixes the default to [`num_bigint::BigUint`] because symmetric-group
//! orders overflow machine words quickly. Primitive unsigned integers also
//! satisfy the bound and are handy in tests where the values are small.

use std::fmt::{Debug, Display};
use std::ops::AddAssign;

use num_bigint::BigUint;
use num_traits::{FromPrimitive, Num, ToPrimitive, Unsigned};
use serde::Serializer;

pub trait Count:
    Num
    + Unsigned
    + Clone
    + Ord
    + Debug
    + Display
    + FromPrimitive
    + ToPrimitive
    + for<'a> AddAssign<&'a Self>
    + Send
    + Sync
{
}

impl<T> Count for T where
    T: Num
        + Unsigned
        + Clone
        + Ord
        + Debug
        + Display
        + FromPrimitive
        + ToPrimitive
        + for<'a> AddAssign<&'a Self>
        + Send
        + Sync
{
}

pub(crate) fn from_u64<C: Count>(n: u64) -> C {
    C::from_u64(n).expect("every count type represents u64 values")
}

pub(crate) fn convert<C: Count, D: Count>(c: &C) -> Option<D> {
    if let Some(v) = c.to_u64() {
        return D::from_u64(v);
    }
    // Fall back to the decimal representation for values beyond u64.
    D::from_str_radix(&c.to_string(), 10).ok()
}

pub(crate) fn one<C: Count>() -> C {
    C::one()
}

/// Serializes a big integer as a JSON number when it fits in `u64` and as a
/// decimal string otherwise.
pub fn serialize_big<S: Serializer>(v: &BigUint, s: S) -> Result<S::Ok, S::Error> {
    match v.to_u64() {
        Some(x) => s.serialize_u64(x),
        None => s.serialize_str(&v.to_string()),
    }
}

pub fn serialize_big_opt<S: Serializer>(v: &Option<BigUint>, s: S) -> Result<S::Ok, S::Error> {
    match v {
        Some(x) => serialize_big(x, s),
        None => s.serialize_none(),
    }
}
