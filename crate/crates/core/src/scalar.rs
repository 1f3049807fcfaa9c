//! Integer scalar abstraction shared by every label-carrying type.
//!
//! Labels, vertex weights and magic constants are all exact integers. The
//! constructors compute in `i128` and narrow into the caller's scalar, so the
//! same code serves `i32` for tiny instances and `i128` for very large ones.

use std::fmt::{Debug, Display};
use std::hash::Hash;
use std::iter::Sum;
use std::str::FromStr;

use num_integer::Integer;
use num_traits::{PrimInt, Signed};
use serde::de::DeserializeOwned;
use serde::Serialize;

use crate::error::{Error, Result};

/// A signed primitive integer usable as a label, weight or magic constant.
pub trait Label:
    PrimInt
    + Signed
    + Integer
    + Hash
    + Debug
    + Display
    + FromStr
    + Sum
    + Serialize
    + DeserializeOwned
    + Send
    + Sync
    + 'static
{
    /// Narrowing conversion from the wide intermediate type.
    fn try_from_wide(value: i128) -> Result<Self> {
        Self::from(value).ok_or(Error::Overflow { value })
    }

    /// Conversion from a count (vertex id, dimension, ...).
    fn from_count(value: usize) -> Result<Self> {
        Self::try_from_wide(value as i128)
    }

    fn to_wide(self) -> i128 {
        // every `Label` is a signed primitive of at most 128 bits
        self.to_i128().expect("label fits in i128")
    }
}

impl<T> Label for T where
    T: PrimInt
        + Signed
        + Integer
        + Hash
        + Debug
        + Display
        + FromStr
        + Sum
        + Serialize
        + DeserializeOwned
        + Send
        + Sync
        + 'static
{
}
