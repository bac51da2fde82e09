//! Scalar abstraction for critical values, event times, and bar endpoints.
//!
//! The combinatorics never does arithmetic on these values beyond picking
//! regular values between critical ones, so the requirements are a total
//! order on the values actually used plus a way to generate slicing points.

use std::fmt;

use num_traits::Float;

/// Ordered scalar usable as a critical value / event time / bar endpoint.
///
/// `midpoint`, `below` and `above` only need to produce *some* value strictly
/// between / below / above their arguments; they are used to build slicings.
pub trait Scalar: Copy + PartialOrd + PartialEq + fmt::Debug + fmt::Display {
    fn midpoint(a: Self, b: Self) -> Self;
    fn below(a: Self) -> Self;
    fn above(a: Self) -> Self;
}

impl<T: Float + fmt::Debug + fmt::Display> Scalar for T {
    fn midpoint(a: Self, b: Self) -> Self {
        let two = T::one() + T::one();
        a + (b - a) / two
    }

    fn below(a: Self) -> Self {
        a - T::one()
    }

    fn above(a: Self) -> Self {
        a + T::one()
    }
}

/// Total-order comparison; panics on incomparable values (NaN). Inputs are
/// screened at construction time, so this never fires on accepted data.
pub fn cmp_scalar<V: Scalar>(a: &V, b: &V) -> std::cmp::Ordering {
    a.partial_cmp(b).expect("scalar values must be comparable")
}

/// True when every value is comparable and pairwise distinct.
pub fn all_distinct<V: Scalar>(values: &[V]) -> bool {
    let mut sorted: Vec<V> = values.to_vec();
    for v in &sorted {
        if v.partial_cmp(v).is_none() {
            return false;
        }
    }
    sorted.sort_by(cmp_scalar);
    sorted.windows(2).all(|w| w[0] != w[1])
}
