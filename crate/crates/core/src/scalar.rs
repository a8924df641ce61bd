//! Integer scalar abstraction for sequence terms and game values.

use std::fmt::{Debug, Display};
use std::hash::Hash;

use num_traits::{CheckedAdd, CheckedMul, PrimInt, Unsigned};

/// Unsigned primitive integer usable as a sequence term.
///
/// All arithmetic on terms goes through the checked operations, so a term
/// type that is too narrow fails loudly instead of wrapping.
pub trait Term:
    PrimInt + Unsigned + CheckedAdd + CheckedMul + Debug + Display + Hash + Default + Send + Sync
{
    /// Lossless widening from a small machine count (multiplicities, `c`).
    fn from_u32(v: u32) -> Option<Self>;
}

impl<T> Term for T
where
    T: PrimInt + Unsigned + CheckedAdd + CheckedMul + Debug + Display + Hash + Default + Send + Sync,
{
    fn from_u32(v: u32) -> Option<Self> {
        T::from(v)
    }
}
