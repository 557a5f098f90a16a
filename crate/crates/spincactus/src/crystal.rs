//! The spinor crystal B_S of D_n and its tensor powers B_S^⊗N.
//!
//! An element of B_S is a sign vector of length `n`. Tensor products follow
//! the signature rule: `ẽ_i` acts on the right factor of `a ⊗ b` iff
//! `ε_i(b) > φ_i(a)`, and `f̃_i` acts on the right factor iff
//! `ε_i(b) >= φ_i(a)`. N-fold products are folded left-associatively.
//! A missing result (`None`) stands for the zero element.

use alloc::boxed::Box;
use alloc::string::String;
use alloc::vec::Vec;
use core::fmt;

use crate::weights::{check_rank, Weight};
use crate::{Error, Result};

/// An element of the spinor crystal: a sign vector `(±, ..., ±)`.
///
/// Bit `j − 1` of the mask is set iff coordinate `j` carries `+`.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct SpinorElement {
    rank: u8,
    plus: u64,
}

impl SpinorElement {
    /// Builds an element from its `+` mask (bit `j − 1` for coordinate `j`).
    pub fn from_mask(n: usize, plus: u64) -> Result<Self> {
        check_rank(n)?;
        let mask = if n == 64 { u64::MAX } else { (1u64 << n) - 1 };
        Ok(SpinorElement {
            rank: n as u8,
            plus: plus & mask,
        })
    }

    /// The all-plus element `b_{Λ_n}`.
    pub fn all_plus(n: usize) -> Result<Self> {
        Self::from_mask(n, u64::MAX)
    }

    /// Parses the text form, e.g. `"+-++"`; the leftmost character is coordinate 1.
    ///
    /// Accepts `+`, `-` and the minus sign `−`.
    pub fn from_signs(text: &str) -> Result<Self> {
        let mut plus = 0u64;
        let mut n = 0usize;
        for ch in text.chars() {
            match ch {
                '+' => plus |= 1u64 << n.min(63),
                '-' | '−' => {}
                _ => return Err(Error::Parse(String::from(text))),
            }
            n += 1;
            if n > 64 {
                return Err(Error::InvalidRank(n));
            }
        }
        Self::from_mask(n, plus)
    }

    /// The unique element whose weight is the given spin weight.
    pub fn from_weight(w: &Weight) -> Result<Self> {
        if !w.is_spin_weight() {
            return Err(Error::NotSpinWeight);
        }
        let mut plus = 0u64;
        for (k, &d) in w.doubled().iter().enumerate() {
            if d > 0 {
                plus |= 1u64 << k;
            }
        }
        Self::from_mask(w.rank(), plus)
    }

    /// The rank `n`.
    pub fn rank(&self) -> usize {
        self.rank as usize
    }

    /// The `+` mask.
    pub fn mask(&self) -> u64 {
        self.plus
    }

    /// True iff coordinate `j` (1-based) carries `+`.
    pub fn is_plus(&self, j: usize) -> bool {
        (self.plus >> (j - 1)) & 1 == 1
    }

    /// The text form over `{+, -}`.
    pub fn signs(&self) -> String {
        (1..=self.rank())
            .map(|j| if self.is_plus(j) { '+' } else { '-' })
            .collect()
    }

    fn flip(self, positions: u64) -> Self {
        SpinorElement {
            rank: self.rank,
            plus: self.plus ^ positions,
        }
    }

    fn check_index(&self, j: usize) -> Result<()> {
        if j == 0 || j > self.rank() {
            Err(Error::IndexOutOfRange {
                index: j,
                max: self.rank(),
            })
        } else {
            Ok(())
        }
    }

    /// `⟨wt(b), α_j^∨⟩`, one of `−1, 0, 1`.
    pub(crate) fn wt_i(&self, j: usize) -> i32 {
        let s = |k: usize| if self.is_plus(k) { 1 } else { -1 };
        let n = self.rank();
        if j < n {
            (s(j) - s(j + 1)) / 2
        } else {
            (s(n - 1) + s(n)) / 2
        }
    }

    /// Pair of positions touched by the operators of index `j`, as a mask.
    fn pair_mask(&self, j: usize) -> u64 {
        let n = self.rank();
        if j < n {
            0b11u64 << (j - 1)
        } else {
            0b11u64 << (n - 2)
        }
    }

    fn e_unchecked(&self, j: usize) -> Option<Self> {
        let n = self.rank();
        if j < n {
            (!self.is_plus(j) && self.is_plus(j + 1)).then(|| self.flip(self.pair_mask(j)))
        } else {
            (!self.is_plus(n - 1) && !self.is_plus(n)).then(|| self.flip(self.pair_mask(j)))
        }
    }

    fn f_unchecked(&self, j: usize) -> Option<Self> {
        let n = self.rank();
        if j < n {
            (self.is_plus(j) && !self.is_plus(j + 1)).then(|| self.flip(self.pair_mask(j)))
        } else {
            (self.is_plus(n - 1) && self.is_plus(n)).then(|| self.flip(self.pair_mask(j)))
        }
    }

    fn eps_unchecked(&self, j: usize) -> i32 {
        i32::from(self.e_unchecked(j).is_some())
    }

    fn phi_unchecked(&self, j: usize) -> i32 {
        i32::from(self.f_unchecked(j).is_some())
    }
}

impl fmt::Debug for SpinorElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Spinor({})", self.signs())
    }
}

impl fmt::Display for SpinorElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.signs())
    }
}

/// Weight of a spinor element: `±1/2` per coordinate.
pub fn spin_wt(b: &SpinorElement) -> Weight {
    let doubled = (1..=b.rank()).map(|j| if b.is_plus(j) { 1 } else { -1 }).collect();
    Weight::from_doubled(doubled).expect("spin weights are well formed")
}

/// Raising operator `ẽ_j` on B_S.
pub fn spin_e(b: &SpinorElement, j: usize) -> Result<Option<SpinorElement>> {
    b.check_index(j)?;
    Ok(b.e_unchecked(j))
}

/// Lowering operator `f̃_j` on B_S.
pub fn spin_f(b: &SpinorElement, j: usize) -> Result<Option<SpinorElement>> {
    b.check_index(j)?;
    Ok(b.f_unchecked(j))
}

/// `ε_j(b)` on B_S, either 0 or 1.
pub fn spin_eps(b: &SpinorElement, j: usize) -> Result<i32> {
    b.check_index(j)?;
    Ok(b.eps_unchecked(j))
}

/// `φ_j(b)` on B_S, either 0 or 1.
pub fn spin_phi(b: &SpinorElement, j: usize) -> Result<i32> {
    b.check_index(j)?;
    Ok(b.phi_unchecked(j))
}

/// Raises `b` to a highest-weight element by always applying the smallest applicable `ẽ_j`.
///
/// Returns the highest element and the indices applied, first applied first.
/// The result is `(+, ..., +)` or `(+, ..., +, −)`.
pub fn raise_to_highest(b: &SpinorElement) -> (SpinorElement, Vec<usize>) {
    raise_to_highest_with(b, |candidates| candidates[0])
}

/// Raises `b` to a highest-weight element, letting `choose` pick among the applicable indices.
///
/// `choose` receives the applicable indices in increasing order and returns one of them.
pub fn raise_to_highest_with(
    b: &SpinorElement,
    mut choose: impl FnMut(&[usize]) -> usize,
) -> (SpinorElement, Vec<usize>) {
    let mut cur = *b;
    let mut seq = Vec::new();
    loop {
        let candidates: Vec<usize> = (1..=cur.rank()).filter(|&j| cur.e_unchecked(j).is_some()).collect();
        if candidates.is_empty() {
            return (cur, seq);
        }
        let j = choose(&candidates);
        assert!(candidates.contains(&j), "chooser returned a non-applicable index");
        cur = cur.e_unchecked(j).expect("candidate index applies");
        seq.push(j);
    }
}

/// An element of B_S^⊗N; factor 1 is the leftmost tensor factor.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Debug)]
pub struct TensorElement {
    factors: Vec<SpinorElement>,
}

impl TensorElement {
    /// Builds a tensor element; requires at least one factor and a common rank.
    pub fn new(factors: Vec<SpinorElement>) -> Result<Self> {
        let first = factors.first().ok_or(Error::InvalidRank(0))?.rank();
        for f in &factors {
            if f.rank() != first {
                return Err(Error::RankMismatch {
                    left: first,
                    right: f.rank(),
                });
            }
        }
        Ok(TensorElement { factors })
    }

    /// The factors, leftmost first.
    pub fn factors(&self) -> &[SpinorElement] {
        &self.factors
    }

    /// The number of factors N.
    pub fn len(&self) -> usize {
        self.factors.len()
    }

    /// Always false: tensor elements have at least one factor.
    pub fn is_empty(&self) -> bool {
        self.factors.is_empty()
    }

    /// The common rank n.
    pub fn rank(&self) -> usize {
        self.factors[0].rank()
    }

    fn check_index(&self, j: usize) -> Result<()> {
        self.factors[0].check_index(j)
    }

    /// `φ_j` of every prefix `f_1 ⊗ ... ⊗ f_k`, for `k = 1..=N`.
    fn phi_prefixes(&self, j: usize) -> Vec<i32> {
        let mut out = Vec::with_capacity(self.factors.len());
        let mut phi = 0;
        for (k, f) in self.factors.iter().enumerate() {
            phi = if k == 0 {
                f.phi_unchecked(j)
            } else {
                core::cmp::max(f.phi_unchecked(j), phi + f.wt_i(j))
            };
            out.push(phi);
        }
        out
    }

    fn eps_unchecked(&self, j: usize) -> i32 {
        let mut eps = 0;
        let mut wt = 0;
        for (k, f) in self.factors.iter().enumerate() {
            eps = if k == 0 {
                f.eps_unchecked(j)
            } else {
                core::cmp::max(eps, f.eps_unchecked(j) - wt)
            };
            wt += f.wt_i(j);
        }
        eps
    }

    /// Position of the factor acted on by `ẽ_j` (`raise`) or `f̃_j`.
    fn acting_factor(&self, j: usize, raise: bool) -> usize {
        let phis = self.phi_prefixes(j);
        for k in (1..self.factors.len()).rev() {
            let eps_right = self.factors[k].eps_unchecked(j);
            let phi_left = phis[k - 1];
            let right = if raise {
                eps_right > phi_left
            } else {
                eps_right >= phi_left
            };
            if right {
                return k;
            }
        }
        0
    }

    fn e_unchecked(&self, j: usize) -> Option<TensorElement> {
        let k = self.acting_factor(j, true);
        let new = self.factors[k].e_unchecked(j)?;
        let mut factors = self.factors.clone();
        factors[k] = new;
        Some(TensorElement { factors })
    }

    fn f_unchecked(&self, j: usize) -> Option<TensorElement> {
        let k = self.acting_factor(j, false);
        let new = self.factors[k].f_unchecked(j)?;
        let mut factors = self.factors.clone();
        factors[k] = new;
        Some(TensorElement { factors })
    }
}

/// `ε_j` of a tensor element, folding the two-factor rule left-associatively.
pub fn tensor_eps(t: &TensorElement, j: usize) -> Result<i32> {
    t.check_index(j)?;
    Ok(t.eps_unchecked(j))
}

/// `φ_j` of a tensor element, folding the two-factor rule left-associatively.
pub fn tensor_phi(t: &TensorElement, j: usize) -> Result<i32> {
    t.check_index(j)?;
    Ok(*t.phi_prefixes(j).last().expect("nonempty"))
}

/// Raising operator `ẽ_j` on B_S^⊗N.
pub fn tensor_e(t: &TensorElement, j: usize) -> Result<Option<TensorElement>> {
    t.check_index(j)?;
    Ok(t.e_unchecked(j))
}

/// Lowering operator `f̃_j` on B_S^⊗N.
pub fn tensor_f(t: &TensorElement, j: usize) -> Result<Option<TensorElement>> {
    t.check_index(j)?;
    Ok(t.f_unchecked(j))
}

/// Weight of a tensor element: the sum of the factor weights.
pub fn tensor_wt(t: &TensorElement) -> Weight {
    let n = t.rank();
    let mut doubled = alloc::vec![0i32; n];
    for f in &t.factors {
        for (c, d) in doubled.iter_mut().enumerate() {
            *d += if f.is_plus(c + 1) { 1 } else { -1 };
        }
    }
    Weight::from_doubled(doubled).expect("sum of spin weights is well formed")
}

/// True iff no raising operator applies.
pub fn is_highest(t: &TensorElement) -> bool {
    (1..=t.rank()).all(|j| t.e_unchecked(j).is_none())
}

/// Applies `f̃_{i_1}`, then `f̃_{i_2}`, and so on; `None` as soon as a step vanishes.
pub fn apply_lowering_sequence(t: &TensorElement, indices: &[usize]) -> Result<Option<TensorElement>> {
    for &j in indices {
        t.check_index(j)?;
    }
    let mut cur = t.clone();
    for &j in indices {
        match cur.f_unchecked(j) {
            Some(next) => cur = next,
            None => return Ok(None),
        }
    }
    Ok(Some(cur))
}

/// All highest-weight elements of B_S^⊗N by scanning all `2^(nN)` elements.
///
/// Fails when `n·N` exceeds `limit`. The output is sorted by weight, then by factors.
pub fn enumerate_highest(n: usize, big_n: usize, limit: usize) -> Result<Vec<TensorElement>> {
    check_rank(n)?;
    let size = n * big_n;
    if big_n == 0 || size > limit || size > 40 {
        return Err(Error::InstanceTooLarge { size, limit });
    }
    let factor_mask = (1u64 << n) - 1;
    let mut found = Vec::new();
    let mut factors = alloc::vec![SpinorElement::from_mask(n, 0)?; big_n];
    for code in 0u64..(1u64 << size) {
        for (k, f) in factors.iter_mut().enumerate() {
            f.plus = (code >> (n * k)) & factor_mask;
        }
        let t = TensorElement {
            factors: factors.clone(),
        };
        if is_highest(&t) {
            found.push(t);
        }
    }
    found.sort_by_cached_key(|t| (tensor_wt(t), t.clone()));
    Ok(found)
}

/// The connected component of `t` under all `ẽ_j` and `f̃_j`, sorted.
pub fn component(t: &TensorElement) -> Vec<TensorElement> {
    let mut seen = alloc::collections::BTreeSet::new();
    let mut stack = alloc::vec![t.clone()];
    seen.insert(t.clone());
    while let Some(cur) = stack.pop() {
        for j in 1..=cur.rank() {
            for next in [cur.e_unchecked(j), cur.f_unchecked(j)].into_iter().flatten() {
                if seen.insert(next.clone()) {
                    stack.push(next);
                }
            }
        }
    }
    seen.into_iter().collect()
}

/// A bracketing of `N` tensor factors, used to evaluate products in any association order.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Bracketing {
    /// A single factor, by 0-based position.
    Leaf(usize),
    /// The product of two bracketed blocks.
    Node(Box<Bracketing>, Box<Bracketing>),
}

impl Bracketing {
    /// `((f_1 ⊗ f_2) ⊗ f_3) ⊗ ...`
    pub fn left(len: usize) -> Self {
        let mut b = Bracketing::Leaf(0);
        for k in 1..len {
            b = Bracketing::Node(Box::new(b), Box::new(Bracketing::Leaf(k)));
        }
        b
    }

    /// `f_1 ⊗ (f_2 ⊗ (f_3 ⊗ ...))`
    pub fn right(len: usize) -> Self {
        let mut b = Bracketing::Leaf(len - 1);
        for k in (0..len - 1).rev() {
            b = Bracketing::Node(Box::new(Bracketing::Leaf(k)), Box::new(b));
        }
        b
    }

    /// `(ε_j, φ_j, ⟨wt, α_j^∨⟩)` of the block.
    fn stats(&self, t: &TensorElement, j: usize) -> (i32, i32, i32) {
        match self {
            Bracketing::Leaf(k) => {
                let f = &t.factors[*k];
                (f.eps_unchecked(j), f.phi_unchecked(j), f.wt_i(j))
            }
            Bracketing::Node(a, b) => {
                let (ea, pa, wa) = a.stats(t, j);
                let (eb, pb, wb) = b.stats(t, j);
                (core::cmp::max(ea, eb - wa), core::cmp::max(pb, pa + wb), wa + wb)
            }
        }
    }

    fn acting_factor(&self, t: &TensorElement, j: usize, raise: bool) -> usize {
        match self {
            Bracketing::Leaf(k) => *k,
            Bracketing::Node(a, b) => {
                let (_, phi_a, _) = a.stats(t, j);
                let (eps_b, _, _) = b.stats(t, j);
                let right = if raise { eps_b > phi_a } else { eps_b >= phi_a };
                if right {
                    b.acting_factor(t, j, raise)
                } else {
                    a.acting_factor(t, j, raise)
                }
            }
        }
    }

    /// `ε_j` of `t` evaluated with this bracketing.
    pub fn eps(&self, t: &TensorElement, j: usize) -> i32 {
        self.stats(t, j).0
    }

    /// `φ_j` of `t` evaluated with this bracketing.
    pub fn phi(&self, t: &TensorElement, j: usize) -> i32 {
        self.stats(t, j).1
    }

    /// `ẽ_j` (when `raise`) or `f̃_j` applied to `t` with this bracketing.
    pub fn apply(&self, t: &TensorElement, j: usize, raise: bool) -> Option<TensorElement> {
        let k = self.acting_factor(t, j, raise);
        let f = &t.factors[k];
        let new = if raise { f.e_unchecked(j) } else { f.f_unchecked(j) }?;
        let mut factors = t.factors.clone();
        factors[k] = new;
        Some(TensorElement { factors })
    }
}
