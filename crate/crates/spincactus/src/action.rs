//! The generators `τ_i` of the cactus-group action.
//!
//! At the level of weight sequences, `τ_i` rewrites the pair `(μ_i, μ_{i+1})`
//! using free intervals and the `μ*`, `μ◇`, `μ◇◇` surgeries. At the level of
//! tableaux, it is the Bender-Knuth involution with a correction in the last
//! rows when the result would not be short. [`oracle_tau`] computes the same
//! map through crystal operators only.

use alloc::collections::{BTreeSet, VecDeque};
use alloc::vec::Vec;

use crate::crystal::{self, SpinorElement, TensorElement};
use crate::decomp::{self, WeightSequence};
use crate::shapes::{self, Sssyt};
use crate::weights::Weight;
use crate::{Error, Result};

/// A triple `(γ, μ_a, μ_b)` with `γ`, `γ + μ_a` and `γ + μ_a + μ_b` dominant.
///
/// Inside a sequence, `γ = μ_1 + ... + μ_{i−1}`, `μ_a = μ_i` and `μ_b = μ_{i+1}`.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct AdmissibleTriple {
    gamma: Weight,
    mu_a: Weight,
    mu_b: Weight,
}

impl AdmissibleTriple {
    /// Builds a triple, checking ranks, spin weights and the three dominance conditions.
    pub fn new(gamma: Weight, mu_a: Weight, mu_b: Weight) -> Result<Self> {
        if !mu_a.is_spin_weight() || !mu_b.is_spin_weight() {
            return Err(Error::NotSpinWeight);
        }
        let ga = gamma.add(&mu_a)?;
        let gab = ga.add(&mu_b)?;
        if !gamma.is_dominant() || !ga.is_dominant() || !gab.is_dominant() {
            return Err(Error::NotAdmissible);
        }
        Ok(AdmissibleTriple { gamma, mu_a, mu_b })
    }

    /// The triple at positions `(i, i + 1)` of a sequence in `T^N`.
    pub fn from_sequence(seq: &WeightSequence, i: usize) -> Result<Self> {
        seq.validate()?;
        check_generator(i, seq.len())?;
        Self::new(seq.prefix_sum(i - 1), seq.mus()[i - 1].clone(), seq.mus()[i].clone())
    }

    /// The prefix weight `γ`.
    pub fn gamma(&self) -> &Weight {
        &self.gamma
    }

    /// The first spin weight `μ_a`.
    pub fn mu_a(&self) -> &Weight {
        &self.mu_a
    }

    /// The second spin weight `μ_b`.
    pub fn mu_b(&self) -> &Weight {
        &self.mu_b
    }

    fn rank(&self) -> usize {
        self.gamma.rank()
    }
}

fn check_generator(i: usize, big_n: usize) -> Result<()> {
    if i == 0 || i + 1 > big_n {
        Err(Error::IndexOutOfRange {
            index: i,
            max: big_n.saturating_sub(1),
        })
    } else {
        Ok(())
    }
}

/// A free interval `[min, max]`: its first `neg` indices carry `−` in `μ_b`, the rest `+`.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub struct FreeInterval {
    min: usize,
    max: usize,
    neg: usize,
}

impl FreeInterval {
    /// First index.
    pub fn min(&self) -> usize {
        self.min
    }

    /// Last index.
    pub fn max(&self) -> usize {
        self.max
    }

    /// Last index of the negative part, absent when the interval is degenerate.
    pub fn mid(&self) -> Option<usize> {
        (!self.is_degenerate()).then(|| self.min + self.neg - 1)
    }

    /// `|Fr_−|`, the number of indices where `μ_b` is `−`.
    pub fn neg_count(&self) -> usize {
        self.neg
    }

    /// `|Fr_+|`, the number of indices where `μ_b` is `+`.
    pub fn pos_count(&self) -> usize {
        self.max + 1 - self.min - self.neg
    }

    /// True iff one of the two parts is empty.
    pub fn is_degenerate(&self) -> bool {
        self.neg == 0 || self.pos_count() == 0
    }

    /// True iff `min <= j <= max`.
    pub fn contains(&self, j: usize) -> bool {
        self.min <= j && j <= self.max
    }
}

/// Type of an admissible triple, or of a tableau with a generator index.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Debug)]
pub enum TripleType {
    /// The plain Bender-Knuth case.
    Type0,
    /// `n` and `n − 1` lie in different free intervals.
    Type1,
    /// `n` and `n − 1` lie in the same free interval.
    Type2,
}

/// The maximal runs of indices where `μ_a` and `μ_b` disagree in sign and `γ` is constant.
pub fn free_intervals(tr: &AdmissibleTriple) -> Vec<FreeInterval> {
    let n = tr.rank();
    let a = tr.mu_a.doubled();
    let b = tr.mu_b.doubled();
    let g = tr.gamma.doubled();
    let free = |j: usize| a[j - 1] != b[j - 1];
    let mut out = Vec::new();
    let mut j = 1;
    while j <= n {
        if !free(j) {
            j += 1;
            continue;
        }
        let min = j;
        while j < n && free(j + 1) && g[j] == g[j - 1] {
            j += 1;
        }
        let max = j;
        let neg = (min..=max).take_while(|&k| b[k - 1] < 0).count();
        assert!(
            (min + neg..=max).all(|k| b[k - 1] > 0),
            "free interval [{min}, {max}] does not list the negative part first"
        );
        out.push(FreeInterval { min, max, neg });
        j += 1;
    }
    out
}

fn set_sign(w: &mut [i32], j: usize, plus: bool) {
    w[j - 1] = if plus { 1 } else { -1 };
}

fn weight(doubled: Vec<i32>) -> Weight {
    Weight::from_doubled(doubled).expect("spin weights are well formed")
}

/// Returns `(μ_a*, μ_b*)`.
///
/// On each non-degenerate interval with `a = |Fr_−|` and `b = |Fr_+|`, `μ_b*`
/// becomes `(+^b, −^a)` and `μ_a*` becomes `(−^b, +^a)`. Elsewhere nothing changes.
pub fn star(tr: &AdmissibleTriple) -> (Weight, Weight) {
    let mut a_star = tr.mu_a.doubled().to_vec();
    let mut b_star = tr.mu_b.doubled().to_vec();
    for fr in free_intervals(tr) {
        if fr.is_degenerate() {
            continue;
        }
        let b = fr.pos_count();
        for j in fr.min..=fr.max {
            let first_block = j < fr.min + b;
            set_sign(&mut b_star, j, first_block);
            set_sign(&mut a_star, j, !first_block);
        }
    }
    (weight(a_star), weight(b_star))
}

/// Classifies an admissible triple.
///
/// Type0 iff `⟨γ + μ_b*, α_n^∨⟩ >= 0`. Otherwise Type1 when `n` and `n − 1`
/// lie in different free intervals, and Type2 when they share one.
pub fn classify(tr: &AdmissibleTriple) -> TripleType {
    let (_, b_star) = star(tr);
    let n = tr.rank();
    let sum = tr.gamma.add(&b_star).expect("equal ranks");
    if sum.pairing(n) >= 0 {
        return TripleType::Type0;
    }
    let intervals = free_intervals(tr);
    let find = |j: usize| {
        intervals
            .iter()
            .position(|fr| fr.contains(j))
            .unwrap_or_else(|| panic!("index {j} lies in no free interval of a non-Type0 triple"))
    };
    if find(n) != find(n - 1) {
        TripleType::Type1
    } else {
        TripleType::Type2
    }
}

/// The triple with coordinate `n` negated in `γ`, `μ_a` and `μ_b`.
///
/// This is the diagram automorphism of D_n exchanging the nodes `n − 1` and `n`;
/// it preserves admissibility.
pub fn diagram_automorphism(tr: &AdmissibleTriple) -> AdmissibleTriple {
    let flip = |w: &Weight| {
        let mut d = w.doubled().to_vec();
        let n = d.len();
        d[n - 1] = -d[n - 1];
        Weight::from_doubled(d).expect("negation keeps parity")
    };
    AdmissibleTriple::new(flip(&tr.gamma), flip(&tr.mu_a), flip(&tr.mu_b))
        .expect("the automorphism preserves dominance")
}

/// The type that [`tableau_type`] reads off the tableau of a triple.
///
/// For even `n` this is [`classify`]. For odd `n` the first column of a tableau
/// records `r_n` instead of `l_n`, and the tableau sees the classification of
/// [`diagram_automorphism`] applied to the triple.
pub fn classify_in_tableau_frame(tr: &AdmissibleTriple) -> TripleType {
    if tr.rank().is_multiple_of(2) {
        classify(tr)
    } else {
        classify(&diagram_automorphism(tr))
    }
}

/// Returns `(μ_a◇, μ_b◇)` for a Type1 triple.
///
/// With `a = |Fr_−|` of the interval containing `n − 1`, coordinates `n` and
/// `n − a` of `μ_b*` turn from `−` to `+` and those of `μ_a*` from `+` to `−`.
pub fn diamond(tr: &AdmissibleTriple) -> Result<(Weight, Weight)> {
    if classify(tr) != TripleType::Type1 {
        return Err(Error::WrongType);
    }
    let n = tr.rank();
    let (a_star, b_star) = star(tr);
    let fr = free_intervals(tr)
        .into_iter()
        .find(|fr| fr.contains(n - 1))
        .expect("Type1 places n - 1 in a free interval");
    let a = fr.neg_count();
    let mut a_new = a_star.doubled().to_vec();
    let mut b_new = b_star.doubled().to_vec();
    for j in [n, n - a] {
        assert!(
            b_new[j - 1] < 0 && a_new[j - 1] > 0,
            "diamond flip at {j} expects (-, +)"
        );
        set_sign(&mut b_new, j, true);
        set_sign(&mut a_new, j, false);
    }
    Ok((weight(a_new), weight(b_new)))
}

/// Returns `(μ_a◇◇, μ_b◇◇)` for a Type2 triple.
///
/// On the last free interval, with `a = |Fr_−|` and `b = |Fr_+|`, `μ_b◇◇` reads
/// `(+, ..., +, σ)` with `σ = +` iff `a` is even, and `μ_a◇◇` is its complement.
pub fn double_diamond(tr: &AdmissibleTriple) -> Result<(Weight, Weight)> {
    if classify(tr) != TripleType::Type2 {
        return Err(Error::WrongType);
    }
    let n = tr.rank();
    let (a_star, b_star) = star(tr);
    let fr = *free_intervals(tr).last().expect("Type2 has free intervals");
    let (a, b) = (fr.neg_count(), fr.pos_count());
    assert!(
        fr.max == n && a >= 2 && b <= 1,
        "last free interval of a Type2 triple must end at n with a >= 2, b <= 1"
    );
    let mut a_new = a_star.doubled().to_vec();
    let mut b_new = b_star.doubled().to_vec();
    for j in fr.min..=n {
        let plus = j < n || a % 2 == 0;
        set_sign(&mut b_new, j, plus);
        set_sign(&mut a_new, j, !plus);
    }
    Ok((weight(a_new), weight(b_new)))
}

/// The new pair `(μ_i', μ_{i+1}')` for an admissible triple.
pub fn tau_pair(tr: &AdmissibleTriple) -> (Weight, Weight) {
    let (a_new, b_new) = match classify(tr) {
        TripleType::Type0 => star(tr),
        TripleType::Type1 => diamond(tr).expect("type checked"),
        TripleType::Type2 => double_diamond(tr).expect("type checked"),
    };
    (b_new, a_new)
}

/// `τ_i` on a sequence of `T^N`: positions `(i, i + 1)` become `(μ_b', μ_a')`.
pub fn tau_seq(seq: &WeightSequence, i: usize) -> Result<WeightSequence> {
    let tr = AdmissibleTriple::from_sequence(seq, i)?;
    let (first, second) = tau_pair(&tr);
    Ok(seq.with_pair(i, first, second))
}

/// `τ_i` on a sequence of `T^N`, computed with crystal operators only.
///
/// The prefix `b_{μ_1} ⊗ ... ⊗ b_{μ_i}` is lowered along the indices that raise
/// `b_{μ_{i+1}}` to a highest element; the last factor of the result has
/// weight `μ_{i+1}'`, and `μ_i' = μ_i + μ_{i+1} − μ_{i+1}'`.
pub fn oracle_tau(seq: &WeightSequence, i: usize) -> Result<WeightSequence> {
    oracle_tau_with(seq, i, |c| c[0])
}

/// [`oracle_tau`] with a caller-chosen raising order for `b_{μ_{i+1}}`.
///
/// # Panics
///
/// Panics if the lowering sequence vanishes on the prefix, or if the last
/// prefix factor moves although `γ + μ_{i+1}` is dominant. Either would be a
/// bug in this library.
pub fn oracle_tau_with(
    seq: &WeightSequence,
    i: usize,
    choose: impl FnMut(&[usize]) -> usize,
) -> Result<WeightSequence> {
    seq.validate()?;
    check_generator(i, seq.len())?;
    let mus = seq.mus();
    let prefix = WeightSequence::new(seq.rank(), mus[..i].to_vec())?;
    let t: TensorElement = decomp::raw_tensor(&prefix)?;
    let b = SpinorElement::from_weight(&mus[i])?;
    let (_, indices) = crystal::raise_to_highest_with(&b, choose);
    let lowered = crystal::apply_lowering_sequence(&t, &indices)?
        .unwrap_or_else(|| panic!("library bug: lowering sequence {indices:?} vanished on a highest-weight prefix"));
    let gamma = seq.prefix_sum(i - 1);
    if gamma.add(&mus[i])?.is_dominant() {
        assert_eq!(
            lowered.factors()[i - 1],
            t.factors()[i - 1],
            "library bug: last prefix factor moved although gamma + mu_(i+1) is dominant"
        );
    }
    let second = crystal::spin_wt(&lowered.factors()[i - 1]);
    let first = mus[i - 1].add(&mus[i])?.sub(&second)?;
    Ok(seq.with_pair(i, first, second))
}

/// Layout of the `{i, i+1}` cells in one row of a fill.
#[derive(Clone, Copy, Debug, Default)]
struct RowSplit {
    /// Column of the first free cell.
    start: usize,
    /// Free cells labelled `i`.
    free_i: usize,
    /// Free cells labelled `i + 1`.
    free_next: usize,
}

fn row_split(rows: &[Vec<u32>], r: usize, i: u32) -> RowSplit {
    let row = &rows[r];
    let mut split = RowSplit {
        start: usize::MAX,
        ..RowSplit::default()
    };
    for (c, &v) in row.iter().enumerate() {
        let free = if v == i {
            rows.get(r + 1).and_then(|below| below.get(c)) != Some(&(i + 1))
        } else if v == i + 1 {
            r == 0 || rows[r - 1].get(c) != Some(&i)
        } else {
            false
        };
        if free {
            split.start = split.start.min(c);
            if v == i {
                split.free_i += 1;
            } else {
                split.free_next += 1;
            }
        }
    }
    split
}

fn write_free_block(row: &mut [u32], split: RowSplit, count_i: usize, count_next: usize, i: u32) {
    for k in 0..count_i + count_next {
        row[split.start + k] = if k < count_i { i } else { i + 1 };
    }
}

/// Bender-Knuth involution on any semi-standard fill.
///
/// In each row, the free cells labelled `i` and `i + 1` form a block of `b`
/// copies of `i` followed by `c` copies of `i + 1`; the block is rewritten with
/// `c` copies of `i` followed by `b` copies of `i + 1`.
pub fn bk(rows: &[Vec<u32>], i: u32) -> Result<Vec<Vec<u32>>> {
    if !shapes::is_semistandard(rows) {
        return Err(Error::InvalidTableau("fill is not semi-standard"));
    }
    let mut out = rows.to_vec();
    for r in 0..rows.len() {
        bk_row(rows, &mut out, r, i);
    }
    Ok(out)
}

fn bk_row(rows: &[Vec<u32>], out: &mut [Vec<u32>], r: usize, i: u32) {
    let split = row_split(rows, r, i);
    if split.free_i + split.free_next > 0 {
        write_free_block(&mut out[r], split, split.free_next, split.free_i, i);
    }
}

/// Rows containing a label `i` or `i + 1`, top to bottom.
fn skew_rows(rows: &[Vec<u32>], i: u32) -> Vec<usize> {
    (0..rows.len())
        .filter(|&r| rows[r].iter().any(|&v| v == i || v == i + 1))
        .collect()
}

/// Type of `x` with respect to `τ_i`, read from the tableau.
///
/// Type0 iff `bk(x, i)` is short. Otherwise the last rows of the skew tableau
/// `ν^(i+1) − ν^(i−1)` decide between Type1 and Type2.
pub fn tableau_type(x: &Sssyt, i: usize) -> Result<TripleType> {
    check_generator(i, x.big_n())?;
    let rows = x.fill();
    let label = i as u32;
    let flipped = bk(&rows, label)?;
    if Sssyt::from_fill(x.rank(), x.big_n(), &flipped).is_ok() {
        return Ok(TripleType::Type0);
    }
    let next_shape = &x.steps()[i];
    let columns_full = (next_shape.col(1) + next_shape.col(2)) as usize == i + 1;
    let skew = skew_rows(&rows, label);
    let (&last, rest) = skew
        .split_last()
        .ok_or(Error::InvalidTableau("non-Type0 tableau without skew cells"))?;
    let last_split = row_split(&rows, last, label);
    let skew_cells = rows[last].iter().filter(|&&v| v == label || v == label + 1).count();
    let count_i = rows[last].iter().filter(|&&v| v == label).count();
    let type1 = skew_cells == 1
        && last_split.free_next == 1
        && rest
            .last()
            .is_some_and(|&pen| row_split(&rows, pen, label).free_next >= 1);
    let type2 = last_split.free_next >= 2 && count_i < 2;
    match (columns_full, type1, type2) {
        (true, true, false) => Ok(TripleType::Type1),
        (true, false, true) => Ok(TripleType::Type2),
        _ => Err(Error::InvalidTableau("tableau matches neither correction type")),
    }
}

/// `τ_i` on a short tableau.
///
/// Type0: the Bender-Knuth involution. Type1: Bender-Knuth on all skew rows but
/// the last two; the last row is kept; in the penultimate row the first free
/// `i + 1` becomes `i` before the row is flipped. Type2: Bender-Knuth on all
/// skew rows but the last; the first cell of the last row toggles between `i`
/// and `i + 1` iff that row has an odd number of free cells.
pub fn tau_tableau(x: &Sssyt, i: usize) -> Result<Sssyt> {
    let kind = tableau_type(x, i)?;
    let rows = x.fill();
    let label = i as u32;
    let mut out = rows.clone();
    let skew = skew_rows(&rows, label);
    match kind {
        TripleType::Type0 => {
            for &r in &skew {
                bk_row(&rows, &mut out, r, label);
            }
        }
        TripleType::Type1 => {
            let (last, pen) = (skew[skew.len() - 1], skew[skew.len() - 2]);
            for &r in &skew {
                if r != last && r != pen {
                    bk_row(&rows, &mut out, r, label);
                }
            }
            let split = row_split(&rows, pen, label);
            write_free_block(&mut out[pen], split, split.free_next - 1, split.free_i + 1, label);
        }
        TripleType::Type2 => {
            let last = skew[skew.len() - 1];
            for &r in &skew {
                if r != last {
                    bk_row(&rows, &mut out, r, label);
                }
            }
            let split = row_split(&rows, last, label);
            if (split.free_i + split.free_next) % 2 == 1 {
                let first = rows[last]
                    .iter()
                    .position(|&v| v == label || v == label + 1)
                    .expect("last skew row has a skew cell");
                out[last][first] = if rows[last][first] == label { label + 1 } else { label };
            }
        }
    }
    Sssyt::from_fill(x.rank(), x.big_n(), &out)
}

/// The orbit of `x` under the generators `τ_i`, `i ∈ gens`, sorted.
pub fn orbit(x: &Sssyt, gens: &[usize]) -> Result<Vec<Sssyt>> {
    for &i in gens {
        check_generator(i, x.big_n())?;
    }
    let mut seen = BTreeSet::new();
    let mut queue = VecDeque::new();
    seen.insert(x.clone());
    queue.push_back(x.clone());
    while let Some(cur) = queue.pop_front() {
        for &i in gens {
            let next = tau_tableau(&cur, i)?;
            if seen.insert(next.clone()) {
                queue.push_back(next);
            }
        }
    }
    Ok(seen.into_iter().collect())
}
