use std::fmt::{Debug, Display};

use num_traits::{FromPrimitive, Signed};

/// An exact ordered field.
///
/// Every predicate in this crate decides signs of polynomial expressions in
/// the coordinates, so the scalar must be exact: `BigRational` (the default,
/// see [`crate::Rational`]) or a fixed-width `Ratio<i64>`/`Ratio<i128>` when
/// the caller can bound coordinate growth.
pub trait Scalar:
    Clone + Ord + Signed + FromPrimitive + Debug + Display + Send + Sync + 'static
{
    fn from_int(value: i64) -> Self {
        Self::from_i64(value).expect("every exact field embeds the integers")
    }

    fn from_count(value: usize) -> Self {
        Self::from_usize(value).expect("every exact field embeds the integers")
    }

    fn two() -> Self {
        Self::one() + Self::one()
    }
}

impl<T> Scalar for T where
    T: Clone + Ord + Signed + FromPrimitive + Debug + Display + Send + Sync + 'static
{
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_rational::{BigRational, Ratio};

    fn third<T: Scalar>() -> T {
        T::one() / T::from_int(3)
    }

    #[test]
    fn big_and_fixed_width_ratios_are_scalars() {
        let a: BigRational = third();
        let b: Ratio<i64> = third();
        assert_eq!(a.to_string(), "1/3");
        assert_eq!(b.to_string(), "1/3");
        assert_eq!(third::<Ratio<i128>>() * Ratio::from_integer(3), Ratio::from_integer(1));
    }
}
