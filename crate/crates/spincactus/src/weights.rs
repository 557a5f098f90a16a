//! The weight lattice P of type D_n.
//!
//! A weight `λ = (λ_1, ..., λ_n)` has coordinates that are either all
//! integers or all half-integers. It is stored in doubled form: entry `j`
//! holds `2·λ_j`, so all arithmetic is exact.

use alloc::vec::Vec;
use core::fmt;

use crate::{Error, Result};

/// Largest supported rank.
pub const MAX_RANK: usize = 64;

/// A weight of D_n stored as doubled coordinates.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Weight {
    doubled: Vec<i32>,
}

impl Weight {
    /// Builds a weight from doubled coordinates.
    ///
    /// Fails when the rank is outside `2..=64` or the entries mix parities.
    pub fn from_doubled(doubled: Vec<i32>) -> Result<Self> {
        check_rank(doubled.len())?;
        let parity = doubled[0].rem_euclid(2);
        if doubled.iter().any(|d| d.rem_euclid(2) != parity) {
            return Err(Error::MixedParity);
        }
        Ok(Weight { doubled })
    }

    /// The zero weight of rank `n`.
    pub fn zero(n: usize) -> Result<Self> {
        check_rank(n)?;
        Ok(Weight {
            doubled: alloc::vec![0; n],
        })
    }

    /// The rank `n`.
    pub fn rank(&self) -> usize {
        self.doubled.len()
    }

    /// The doubled coordinates `2·λ_j`.
    pub fn doubled(&self) -> &[i32] {
        &self.doubled
    }

    /// Returns `⟨λ, α_j^∨⟩` for `1 <= j <= n`.
    ///
    /// For `j < n` this is `λ_j − λ_{j+1}`, and for `j = n` it is `λ_{n−1} + λ_n`.
    pub fn coroot_pairing(&self, j: usize) -> Result<i32> {
        let n = self.rank();
        if j == 0 || j > n {
            return Err(Error::IndexOutOfRange { index: j, max: n });
        }
        Ok(self.pairing(j))
    }

    /// Unchecked pairing for indices already known to be valid.
    pub(crate) fn pairing(&self, j: usize) -> i32 {
        let d = &self.doubled;
        let n = d.len();
        let twice = if j < n { d[j - 1] - d[j] } else { d[n - 2] + d[n - 1] };
        twice / 2
    }

    /// True iff every coroot pairing is nonnegative.
    pub fn is_dominant(&self) -> bool {
        (1..=self.rank()).all(|j| self.pairing(j) >= 0)
    }

    /// True iff every coordinate is `±1/2`.
    pub fn is_spin_weight(&self) -> bool {
        self.doubled.iter().all(|d| d.abs() == 1)
    }

    /// Coordinatewise sum.
    pub fn add(&self, other: &Weight) -> Result<Weight> {
        self.zip_with(other, |a, b| a + b)
    }

    /// Coordinatewise difference.
    pub fn sub(&self, other: &Weight) -> Result<Weight> {
        self.zip_with(other, |a, b| a - b)
    }

    fn zip_with(&self, other: &Weight, op: impl Fn(i32, i32) -> i32) -> Result<Weight> {
        if self.rank() != other.rank() {
            return Err(Error::RankMismatch {
                left: self.rank(),
                right: other.rank(),
            });
        }
        Weight::from_doubled(
            self.doubled
                .iter()
                .zip(&other.doubled)
                .map(|(&a, &b)| op(a, b))
                .collect(),
        )
    }
}

impl fmt::Debug for Weight {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Weight(")?;
        for (k, d) in self.doubled.iter().enumerate() {
            if k > 0 {
                write!(f, ", ")?;
            }
            if d % 2 == 0 {
                write!(f, "{}", d / 2)?;
            } else {
                write!(f, "{d}/2")?;
            }
        }
        write!(f, ")")
    }
}

pub(crate) fn check_rank(n: usize) -> Result<()> {
    if (2..=MAX_RANK).contains(&n) {
        Ok(())
    } else {
        Err(Error::InvalidRank(n))
    }
}

/// Coroot pairing `⟨λ, α_j^∨⟩`.
pub fn coroot_pairing(lambda: &Weight, j: usize) -> Result<i32> {
    lambda.coroot_pairing(j)
}

/// Dominance test.
pub fn is_dominant(lambda: &Weight) -> bool {
    lambda.is_dominant()
}

/// Coordinatewise sum of two weights of equal rank.
pub fn weight_add(a: &Weight, b: &Weight) -> Result<Weight> {
    a.add(b)
}

/// Coordinatewise difference of two weights of equal rank.
pub fn weight_sub(a: &Weight, b: &Weight) -> Result<Weight> {
    a.sub(b)
}

/// All `2^n` spin weights `(±1/2, ..., ±1/2)`.
///
/// The order is binary counting where a `+` sign is bit 0 and the most
/// significant bit is coordinate 1. The first entry is all `+`; the first
/// coordinate varies slowest.
pub fn spin_weight_set(n: usize) -> Result<Vec<Weight>> {
    check_rank(n)?;
    if n > 20 {
        return Err(Error::InstanceTooLarge { size: n, limit: 20 });
    }
    Ok((0u64..(1u64 << n))
        .map(|k| Weight {
            doubled: (0..n)
                .map(|c| if (k >> (n - 1 - c)) & 1 == 0 { 1 } else { -1 })
                .collect(),
        })
        .collect())
}

/// The neighbours `AD(i)` of node `i` in the D_n Dynkin diagram, for `n >= 4`.
pub fn dynkin_adjacent(n: usize, i: usize) -> Result<Vec<usize>> {
    if n < 4 {
        return Err(Error::UnsupportedSmallRank(n));
    }
    check_rank(n)?;
    if i == 0 || i > n {
        return Err(Error::IndexOutOfRange { index: i, max: n });
    }
    Ok(if i == 1 {
        alloc::vec![2]
    } else if i < n - 2 {
        alloc::vec![i - 1, i + 1]
    } else if i == n - 2 {
        alloc::vec![n - 3, n - 1, n]
    } else {
        alloc::vec![n - 2]
    })
}
