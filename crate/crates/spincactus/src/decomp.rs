//! Index sets of highest-weight elements in B_S^⊗N.
//!
//! `T^N` is the set of sequences of spin weights whose prefix sums are all
//! dominant, `T_λ^N` the subset summing to `λ`, and `Δ^N` the set of weights
//! reached. The map [`seq_to_tensor`] identifies `T^N` with the highest-weight
//! elements of B_S^⊗N.

use alloc::collections::{BTreeMap, BTreeSet};
use alloc::vec::Vec;

use crate::crystal::{self, SpinorElement, TensorElement};
use crate::weights::{check_rank, spin_weight_set, Weight};
use crate::{Error, Result};

/// Default bound on `n * N` for the depth-first enumerations of `T^N`.
pub const DEFAULT_ENUM_LIMIT: usize = 48;

/// A sequence `(μ_1, ..., μ_N)` of spin weights of a common rank.
///
/// Construction checks only the entries; membership in `T^N` is checked by
/// [`is_in_t`] or [`WeightSequence::validate`].
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Debug)]
pub struct WeightSequence {
    rank: usize,
    mus: Vec<Weight>,
}

impl WeightSequence {
    /// Builds a raw sequence; every entry must be a spin weight of rank `n`.
    pub fn new(n: usize, mus: Vec<Weight>) -> Result<Self> {
        check_rank(n)?;
        for m in &mus {
            if m.rank() != n {
                return Err(Error::RankMismatch {
                    left: n,
                    right: m.rank(),
                });
            }
            if !m.is_spin_weight() {
                return Err(Error::NotSpinWeight);
            }
        }
        Ok(WeightSequence { rank: n, mus })
    }

    /// Builds a sequence and checks membership in `T^N`.
    pub fn new_in_t(n: usize, mus: Vec<Weight>) -> Result<Self> {
        let s = Self::new(n, mus)?;
        s.validate()?;
        Ok(s)
    }

    /// Fails with the length of the first non-dominant prefix, if any.
    pub fn validate(&self) -> Result<()> {
        let mut sum = Weight::zero(self.rank)?;
        for (k, m) in self.mus.iter().enumerate() {
            sum = sum.add(m)?;
            if !sum.is_dominant() {
                return Err(Error::NotInT(k + 1));
            }
        }
        Ok(())
    }

    /// The rank `n`.
    pub fn rank(&self) -> usize {
        self.rank
    }

    /// The entries `μ_1, ..., μ_N`.
    pub fn mus(&self) -> &[Weight] {
        &self.mus
    }

    /// The length `N`.
    pub fn len(&self) -> usize {
        self.mus.len()
    }

    /// True for the empty sequence.
    pub fn is_empty(&self) -> bool {
        self.mus.is_empty()
    }

    /// `μ_1 + ... + μ_k`; the empty sum is zero.
    pub fn prefix_sum(&self, k: usize) -> Weight {
        let mut sum = Weight::zero(self.rank).expect("rank checked at construction");
        for m in &self.mus[..k] {
            sum = sum.add(m).expect("equal ranks");
        }
        sum
    }

    /// The total weight `μ_1 + ... + μ_N`.
    pub fn total(&self) -> Weight {
        self.prefix_sum(self.mus.len())
    }

    /// Returns a copy with entries `i` and `i + 1` (1-based) replaced.
    pub(crate) fn with_pair(&self, i: usize, first: Weight, second: Weight) -> Self {
        let mut mus = self.mus.clone();
        mus[i - 1] = first;
        mus[i] = second;
        WeightSequence { rank: self.rank, mus }
    }
}

/// True iff every prefix sum is dominant. Fails if an entry is not a spin weight.
pub fn is_in_t(n: usize, mus: &[Weight]) -> Result<bool> {
    let s = WeightSequence::new(n, mus.to_vec())?;
    Ok(s.validate().is_ok())
}

/// True iff `λ` is dominant and every `N/2 ± λ_i` is a nonnegative integer.
pub fn is_in_delta(lambda: &Weight, big_n: usize) -> bool {
    let n2 = big_n as i64;
    lambda.is_dominant()
        && lambda.doubled().iter().all(|&d| {
            let r2 = n2 + i64::from(d);
            let l2 = n2 - i64::from(d);
            r2 >= 0 && l2 >= 0 && r2 % 2 == 0
        })
}

/// `{λ + μ : μ ∈ P[S], λ + μ dominant}` in the enumeration order of spin weights.
pub fn branch(lambda: &Weight) -> Result<Vec<Weight>> {
    if !lambda.is_dominant() {
        return Err(Error::NotDominant);
    }
    branch_steps(lambda).map(|v| v.into_iter().map(|(_, w)| w).collect())
}

/// The pairs `(μ, λ + μ)` of [`branch`].
fn branch_steps(lambda: &Weight) -> Result<Vec<(Weight, Weight)>> {
    let mut out = Vec::new();
    for mu in spin_weight_set(lambda.rank())? {
        let next = lambda.add(&mu)?;
        if next.is_dominant() {
            out.push((mu, next));
        }
    }
    Ok(out)
}

fn check_enum_size(n: usize, big_n: usize, limit: usize) -> Result<()> {
    check_rank(n)?;
    if n * big_n > limit || n > 20 {
        return Err(Error::InstanceTooLarge { size: n * big_n, limit });
    }
    Ok(())
}

/// All of `T^N` in depth-first order over the spin-weight order.
pub fn enumerate_t(n: usize, big_n: usize, limit: usize) -> Result<Vec<WeightSequence>> {
    check_enum_size(n, big_n, limit)?;
    let mut out = Vec::new();
    dfs(n, big_n, None, &mut Vec::new(), &Weight::zero(n)?, &mut out)?;
    Ok(out)
}

/// The sequences of `T^N` with total weight `λ`, in depth-first order.
pub fn enumerate_t_lambda(lambda: &Weight, big_n: usize, limit: usize) -> Result<Vec<WeightSequence>> {
    let n = lambda.rank();
    check_enum_size(n, big_n, limit)?;
    let mut out = Vec::new();
    if is_in_delta(lambda, big_n) {
        dfs(n, big_n, Some(lambda), &mut Vec::new(), &Weight::zero(n)?, &mut out)?;
    }
    Ok(out)
}

fn dfs(
    n: usize,
    big_n: usize,
    target: Option<&Weight>,
    prefix: &mut Vec<Weight>,
    sum: &Weight,
    out: &mut Vec<WeightSequence>,
) -> Result<()> {
    if prefix.len() == big_n {
        if target.is_none_or(|t| t == sum) {
            out.push(WeightSequence {
                rank: n,
                mus: prefix.clone(),
            });
        }
        return Ok(());
    }
    let remaining = (big_n - prefix.len() - 1) as i32;
    for (mu, next) in branch_steps(sum)? {
        if let Some(t) = target {
            let reachable = t
                .doubled()
                .iter()
                .zip(next.doubled())
                .all(|(a, b)| (a - b).abs() <= remaining);
            if !reachable {
                continue;
            }
        }
        prefix.push(mu);
        dfs(n, big_n, target, prefix, &next, out)?;
        prefix.pop();
    }
    Ok(())
}

/// The distinct weights `Δ^N` reached by sequences in `T^N`, in decreasing order.
pub fn enumerate_delta(n: usize, big_n: usize, limit: usize) -> Result<Vec<Weight>> {
    check_enum_size(n, big_n, limit)?;
    let mut level: BTreeSet<Weight> = BTreeSet::new();
    level.insert(Weight::zero(n)?);
    for _ in 0..big_n {
        let mut next = BTreeSet::new();
        for lambda in &level {
            next.extend(branch(lambda)?);
        }
        level = next;
    }
    Ok(level.into_iter().rev().collect())
}

/// The tensor element `b_{μ_1} ⊗ ... ⊗ b_{μ_N}`; requires `seq ∈ T^N`.
pub fn seq_to_tensor(seq: &WeightSequence) -> Result<TensorElement> {
    seq.validate()?;
    raw_tensor(seq)
}

/// The tensor element with factor weights `μ_k`, without checking membership in `T^N`.
pub(crate) fn raw_tensor(seq: &WeightSequence) -> Result<TensorElement> {
    TensorElement::new(
        seq.mus
            .iter()
            .map(SpinorElement::from_weight)
            .collect::<Result<Vec<_>>>()?,
    )
}

/// Reads the factor weights of a highest-weight tensor element.
pub fn tensor_to_seq(t: &TensorElement) -> Result<WeightSequence> {
    if !crystal::is_highest(t) {
        return Err(Error::NotHighest);
    }
    Ok(WeightSequence {
        rank: t.rank(),
        mus: t.factors().iter().map(crystal::spin_wt).collect(),
    })
}

/// Highest-weight census of `B_λ ⊗ B_S`, with `B_λ` realized as the component of
/// `seq_to_tensor(x)` for the first `x ∈ T_λ^k`.
///
/// Returns the weight of every highest-weight element with its multiplicity.
pub fn branch_census(lambda: &Weight, k: usize, limit: usize) -> Result<BTreeMap<Weight, usize>> {
    let n = lambda.rank();
    let witness = enumerate_t_lambda(lambda, k, limit)?
        .into_iter()
        .next()
        .ok_or(Error::NotInDelta)?;
    let comp = crystal::component(&seq_to_tensor(&witness)?);
    let mut census = BTreeMap::new();
    for c in comp {
        for m in 0..(1u64 << n) {
            let mut factors = c.factors().to_vec();
            factors.push(SpinorElement::from_mask(n, m)?);
            let t = TensorElement::new(factors)?;
            if crystal::is_highest(&t) {
                *census.entry(crystal::tensor_wt(&t)).or_insert(0) += 1;
            }
        }
    }
    Ok(census)
}
