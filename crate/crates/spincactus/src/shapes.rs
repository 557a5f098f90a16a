//! Cell diagrams, short Young diagrams and their tableaux.
//!
//! The bijections are
//! - [`kappa`]: dominant weights in `Δ^N` to regular cell diagrams,
//! - [`f_map`]: regular cell diagrams to short Young diagrams,
//! - [`i_map`]: weight sequences in `T_λ^N` to cell tableaux,
//! - [`y_map`]: cell tableaux to short semi-standard Young tableaux,
//!
//! each with an inverse. Short Young diagrams are stored by column lengths.

use alloc::collections::BTreeSet;
use alloc::string::String;
use alloc::vec::Vec;
use core::fmt::Write as _;

use crate::decomp::{self, WeightSequence};
use crate::weights::{check_rank, Weight};
use crate::{Error, Result};

/// A regular cell diagram `D(l, r)`: row `i` has `l_i` cells left of the axis and `r_i` right of it.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Debug)]
pub struct CellDiagram {
    n: usize,
    big_n: usize,
    l: Vec<u32>,
    r: Vec<u32>,
}

impl CellDiagram {
    /// Builds a diagram, checking `r_i + l_i = N`, `r` non-increasing and `r_{n−1} >= l_n`.
    pub fn new(n: usize, big_n: usize, l: Vec<u32>, r: Vec<u32>) -> Result<Self> {
        check_rank(n)?;
        if l.len() != n || r.len() != n {
            return Err(Error::InvalidDiagram("l and r must have n entries"));
        }
        if l.iter().zip(&r).any(|(a, b)| (a + b) as usize != big_n) {
            return Err(Error::InvalidDiagram("r_i + l_i must equal N"));
        }
        if r.windows(2).any(|p| p[0] < p[1]) {
            return Err(Error::InvalidDiagram("r must be non-increasing"));
        }
        if r[n - 2] < l[n - 1] {
            return Err(Error::InvalidDiagram("r_{n-1} must be at least l_n"));
        }
        Ok(CellDiagram { n, big_n, l, r })
    }

    /// The rank `n` (number of rows).
    pub fn rank(&self) -> usize {
        self.n
    }

    /// The length `N` (cells per row).
    pub fn big_n(&self) -> usize {
        self.big_n
    }

    /// Cells left of the axis, per row.
    pub fn l(&self) -> &[u32] {
        &self.l
    }

    /// Cells right of the axis, per row.
    pub fn r(&self) -> &[u32] {
        &self.r
    }
}

/// A short Young diagram stored by column lengths, trailing zeros trimmed.
///
/// It has at most `n` columns and its first two columns hold at most `N` cells.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Debug)]
pub struct ShortYoungDiagram {
    n: usize,
    big_n: usize,
    cols: Vec<u32>,
}

impl ShortYoungDiagram {
    /// Builds a diagram from column lengths; trailing zeros are trimmed.
    pub fn new(n: usize, big_n: usize, mut cols: Vec<u32>) -> Result<Self> {
        check_rank(n)?;
        while cols.last() == Some(&0) {
            cols.pop();
        }
        if cols.len() > n {
            return Err(Error::InvalidDiagram("more than n columns"));
        }
        if cols.windows(2).any(|p| p[0] < p[1]) {
            return Err(Error::InvalidDiagram("column lengths must be non-increasing"));
        }
        let first_two = cols.iter().take(2).sum::<u32>() as usize;
        if first_two > big_n {
            return Err(Error::InvalidDiagram("first two columns exceed N cells"));
        }
        Ok(ShortYoungDiagram { n, big_n, cols })
    }

    /// The column bound `n`.
    pub fn rank(&self) -> usize {
        self.n
    }

    /// The bound `N` on the first two columns.
    pub fn big_n(&self) -> usize {
        self.big_n
    }

    /// Column lengths without trailing zeros.
    pub fn cols(&self) -> &[u32] {
        &self.cols
    }

    /// Length of column `c` (1-based); zero past the last column.
    pub fn col(&self, c: usize) -> u32 {
        self.cols.get(c - 1).copied().unwrap_or(0)
    }

    /// Column lengths padded with zeros to `n` entries.
    pub fn padded(&self) -> Vec<u32> {
        (1..=self.n).map(|c| self.col(c)).collect()
    }

    /// Row lengths, top row first.
    pub fn rows(&self) -> Vec<u32> {
        let height = self.col(1);
        (1..=height)
            .map(|r| self.cols.iter().filter(|&&c| c >= r).count() as u32)
            .collect()
    }

    /// Number of cells.
    pub fn size(&self) -> u32 {
        self.cols.iter().sum()
    }
}

/// A cell tableau: nested regular cell diagrams `D^(1) ⊂ ... ⊂ D^(N)` with `D^(i)` of length `i`.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Debug)]
pub struct CellTableau {
    steps: Vec<CellDiagram>,
}

impl CellTableau {
    /// Builds a cell tableau, checking lengths, ranks and containment.
    pub fn new(steps: Vec<CellDiagram>) -> Result<Self> {
        let n = steps.first().ok_or(Error::InvalidTableau("no steps"))?.n;
        for (k, d) in steps.iter().enumerate() {
            if d.n != n || d.big_n != k + 1 {
                return Err(Error::InvalidTableau("step i must have rank n and length i"));
            }
            if k > 0 {
                let p = &steps[k - 1];
                let contained = (0..n).all(|c| p.l[c] <= d.l[c] && p.r[c] <= d.r[c]);
                if !contained {
                    return Err(Error::InvalidTableau("steps must be nested"));
                }
            }
        }
        Ok(CellTableau { steps })
    }

    /// The diagrams `D^(1), ..., D^(N)`.
    pub fn steps(&self) -> &[CellDiagram] {
        &self.steps
    }
}

/// A short semi-standard Young tableau as a chain `ν^(1) ⊆ ... ⊆ ν^(N)` of short diagrams.
///
/// Step `i` lies in `SYD(i, n)` and consecutive steps differ by a horizontal strip.
/// The cells of `ν^(i) − ν^(i−1)` carry the label `i`.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Debug)]
pub struct Sssyt {
    steps: Vec<ShortYoungDiagram>,
}

impl Sssyt {
    /// Builds a tableau from its chain of diagrams.
    pub fn new(steps: Vec<ShortYoungDiagram>) -> Result<Self> {
        let n = steps.first().ok_or(Error::InvalidTableau("no steps"))?.n;
        for (k, d) in steps.iter().enumerate() {
            if d.n != n || d.big_n != k + 1 {
                return Err(Error::InvalidTableau("step i must have rank n and bound i"));
            }
            let prev = if k == 0 {
                alloc::vec![0; n]
            } else {
                steps[k - 1].padded()
            };
            let strip = prev.iter().zip(d.padded()).all(|(&a, b)| b == a || b == a + 1);
            if !strip {
                return Err(Error::InvalidTableau("steps must differ by horizontal strips"));
            }
        }
        Ok(Sssyt { steps })
    }

    /// Builds a tableau from a row-wise fill with entries in `1..=N`.
    pub fn from_fill(n: usize, big_n: usize, rows: &[Vec<u32>]) -> Result<Self> {
        check_rank(n)?;
        if big_n == 0 {
            return Err(Error::InvalidTableau("N must be positive"));
        }
        if !is_semistandard(rows) {
            return Err(Error::InvalidTableau("fill is not semi-standard"));
        }
        if rows.iter().flatten().any(|&e| e as usize > big_n) {
            return Err(Error::InvalidTableau("entry exceeds N"));
        }
        let width = rows.first().map_or(0, Vec::len);
        if width > n {
            return Err(Error::InvalidTableau("more than n columns"));
        }
        let steps = (1..=big_n)
            .map(|i| {
                let cols = (0..width)
                    .map(|c| {
                        rows.iter()
                            .take_while(|row| row.len() > c && row[c] as usize <= i)
                            .count() as u32
                    })
                    .collect();
                ShortYoungDiagram::new(n, i, cols)
            })
            .collect::<Result<Vec<_>>>()
            .map_err(|_| Error::InvalidTableau("some step is not a short diagram"))?;
        Sssyt::new(steps)
    }

    /// The diagrams `ν^(1), ..., ν^(N)`.
    pub fn steps(&self) -> &[ShortYoungDiagram] {
        &self.steps
    }

    /// The rank `n`.
    pub fn rank(&self) -> usize {
        self.steps[0].n
    }

    /// The number of steps `N`.
    pub fn big_n(&self) -> usize {
        self.steps.len()
    }

    /// The final shape `ν^(N)`.
    pub fn shape(&self) -> &ShortYoungDiagram {
        self.steps.last().expect("at least one step")
    }

    /// The row-wise fill: entry `(row, col)` is the first `i` with the cell in `ν^(i)`.
    pub fn fill(&self) -> Vec<Vec<u32>> {
        let shape = self.shape();
        shape
            .rows()
            .iter()
            .enumerate()
            .map(|(r, &len)| {
                (1..=len as usize)
                    .map(|c| {
                        let k = self
                            .steps
                            .iter()
                            .position(|s| s.col(c) as usize > r)
                            .expect("cell lies in the final shape");
                        k as u32 + 1
                    })
                    .collect()
            })
            .collect()
    }
}

/// True iff rows have non-increasing lengths, entries are positive, rows weakly
/// increase and columns strictly increase.
pub fn is_semistandard(rows: &[Vec<u32>]) -> bool {
    if rows.iter().any(Vec::is_empty) {
        return false;
    }
    if rows.windows(2).any(|p| p[0].len() < p[1].len()) {
        return false;
    }
    if rows.iter().flatten().any(|&e| e == 0) {
        return false;
    }
    if rows.iter().any(|row| row.windows(2).any(|p| p[0] > p[1])) {
        return false;
    }
    rows.windows(2)
        .all(|p| p[1].iter().zip(&p[0]).all(|(below, above)| below > above))
}

/// The cell diagram `D_λ^N` with `r_i = N/2 + λ_i` and `l_i = N/2 − λ_i`.
pub fn kappa(lambda: &Weight, big_n: usize) -> Result<CellDiagram> {
    if !decomp::is_in_delta(lambda, big_n) {
        return Err(Error::NotInDelta);
    }
    let n2 = big_n as i32;
    let r = lambda.doubled().iter().map(|&d| ((n2 + d) / 2) as u32).collect();
    let l = lambda.doubled().iter().map(|&d| ((n2 - d) / 2) as u32).collect();
    CellDiagram::new(lambda.rank(), big_n, l, r)
}

/// Recovers `λ_i = (r_i − l_i) / 2`.
pub fn kappa_inv(d: &CellDiagram) -> Weight {
    Weight::from_doubled(d.r.iter().zip(&d.l).map(|(&r, &l)| r as i32 - l as i32).collect())
        .expect("r_i - l_i has the parity of N")
}

/// Short Young diagram of a cell diagram: columns `(l_n, ..., l_1)` for even `n`,
/// `(r_n, l_{n−1}, ..., l_1)` for odd `n`.
pub fn f_map(d: &CellDiagram) -> Result<ShortYoungDiagram> {
    let n = d.n;
    let cols = (1..=n)
        .map(|c| {
            let j = n + 1 - c;
            if c == 1 && n % 2 == 1 {
                d.r[j - 1]
            } else {
                d.l[j - 1]
            }
        })
        .collect();
    ShortYoungDiagram::new(n, d.big_n, cols)
}

/// Inverse of [`f_map`], using `r_i + l_i = N`.
pub fn f_inv(nu: &ShortYoungDiagram) -> Result<CellDiagram> {
    let n = nu.n;
    let big_n = nu.big_n as u32;
    let mut l = alloc::vec![0u32; n];
    for (j, slot) in l.iter_mut().enumerate().map(|(k, s)| (k + 1, s)) {
        let c = n + 1 - j;
        let v = nu.col(c);
        *slot = if c == 1 && n % 2 == 1 {
            big_n
                .checked_sub(v)
                .ok_or(Error::InvalidDiagram("column longer than N"))?
        } else {
            v
        };
    }
    let r = l
        .iter()
        .map(|&x| {
            big_n
                .checked_sub(x)
                .ok_or(Error::InvalidDiagram("column longer than N"))
        })
        .collect::<Result<Vec<_>>>()?;
    CellDiagram::new(n, nu.big_n, l, r)
}

/// The cell tableau with steps `kappa(μ_1 + ... + μ_i, i)`.
pub fn i_map(seq: &WeightSequence) -> Result<CellTableau> {
    seq.validate()?;
    let steps = (1..=seq.len())
        .map(|i| kappa(&seq.prefix_sum(i), i))
        .collect::<Result<Vec<_>>>()?;
    CellTableau::new(steps)
}

/// Inverse of [`i_map`]: successive differences of `kappa_inv`.
pub fn i_inv(ct: &CellTableau) -> Result<WeightSequence> {
    let n = ct.steps[0].n;
    let mut prev = Weight::zero(n)?;
    let mut mus = Vec::with_capacity(ct.steps.len());
    for d in &ct.steps {
        let cur = kappa_inv(d);
        mus.push(cur.sub(&prev)?);
        prev = cur;
    }
    WeightSequence::new_in_t(n, mus)
}

/// Applies [`f_map`] stepwise.
pub fn y_map(ct: &CellTableau) -> Result<Sssyt> {
    Sssyt::new(ct.steps.iter().map(f_map).collect::<Result<Vec<_>>>()?)
}

/// Applies [`f_inv`] stepwise.
pub fn y_inv(x: &Sssyt) -> Result<CellTableau> {
    CellTableau::new(x.steps.iter().map(f_inv).collect::<Result<Vec<_>>>()?)
}

/// The composite `y_map ∘ i_map`.
pub fn seq_to_sssyt(seq: &WeightSequence) -> Result<Sssyt> {
    y_map(&i_map(seq)?)
}

/// The composite `i_inv ∘ y_inv`.
pub fn sssyt_to_seq(x: &Sssyt) -> Result<WeightSequence> {
    i_inv(&y_inv(x)?)
}

/// The weight `λ` indexing a short diagram `ν ∈ SYD(N, n)`.
pub fn shape_weight(nu: &ShortYoungDiagram) -> Result<Weight> {
    Ok(kappa_inv(&f_inv(nu)?))
}

/// All short tableaux of shape `ν` with `N = ν.big_n()` steps, built directly by
/// adding horizontal strips; sorted.
pub fn enumerate_sssyt(nu: &ShortYoungDiagram) -> Result<Vec<Sssyt>> {
    let n = nu.n;
    if n > 20 {
        return Err(Error::InstanceTooLarge { size: n, limit: 20 });
    }
    let target = nu.padded();
    let mut out = Vec::new();
    let mut chain = Vec::new();
    strip_dfs(n, nu.big_n, &target, &alloc::vec![0; n], &mut chain, &mut out)?;
    out.sort();
    Ok(out)
}

fn strip_dfs(
    n: usize,
    big_n: usize,
    target: &[u32],
    cur: &[u32],
    chain: &mut Vec<ShortYoungDiagram>,
    out: &mut Vec<Sssyt>,
) -> Result<()> {
    let i = chain.len() + 1;
    if i > big_n {
        out.push(Sssyt { steps: chain.clone() });
        return Ok(());
    }
    let left_after = (big_n - i) as u32;
    for mask in 0u32..(1u32 << n) {
        let next: Vec<u32> = (0..n).map(|c| cur[c] + ((mask >> c) & 1)).collect();
        let fits = (0..n).all(|c| next[c] <= target[c] && target[c] - next[c] <= left_after);
        let young = next.windows(2).all(|p| p[0] >= p[1]);
        if !fits || !young || (next[0] + next[1]) as usize > i {
            continue;
        }
        chain.push(ShortYoungDiagram::new(n, i, next.clone())?);
        strip_dfs(n, big_n, target, &next, chain, out)?;
        chain.pop();
    }
    Ok(())
}

/// All short diagrams in `SYD(N, n)`, obtained as `f_map(kappa(λ, N))` over `λ ∈ Δ^N`; sorted.
pub fn enumerate_shapes(n: usize, big_n: usize, limit: usize) -> Result<Vec<ShortYoungDiagram>> {
    let set: BTreeSet<ShortYoungDiagram> = decomp::enumerate_delta(n, big_n, limit)?
        .iter()
        .map(|lambda| f_map(&kappa(lambda, big_n)?))
        .collect::<Result<_>>()?;
    Ok(set.into_iter().collect())
}

/// Draws a cell diagram: one line per row, `l_i` cells left of the axis `|` and `r_i` right of it.
pub fn render_cell_diagram(d: &CellDiagram) -> String {
    let width = d.l.iter().copied().max().unwrap_or(0) as usize;
    let mut out = String::new();
    for (&l, &r) in d.l.iter().zip(&d.r) {
        let l = l as usize;
        let r = r as usize;
        out.push_str(&" ".repeat(2 * (width - l)));
        out.push_str(&"[]".repeat(l));
        out.push('|');
        out.push_str(&"[]".repeat(r));
        out.push('\n');
    }
    out
}

/// Draws the final diagram of a cell tableau with each cell numbered by the step that added it.
///
/// Left cells are listed from the outside in, so the cell next to the axis was added first.
pub fn render_cell_tableau(ct: &CellTableau) -> String {
    let last = ct.steps.last().expect("at least one step");
    let n = last.n;
    let digits = digit_count(ct.steps.len());
    let mut rows = Vec::with_capacity(n);
    for j in 0..n {
        let mut left = Vec::new();
        let mut right = Vec::new();
        for (k, d) in ct.steps.iter().enumerate() {
            let (pl, pr) = if k == 0 {
                (0, 0)
            } else {
                (ct.steps[k - 1].l[j], ct.steps[k - 1].r[j])
            };
            if d.l[j] > pl {
                left.push(k + 1);
            }
            if d.r[j] > pr {
                right.push(k + 1);
            }
        }
        left.reverse();
        rows.push((left, right));
    }
    let width = rows.iter().map(|(l, _)| l.len()).max().unwrap_or(0);
    let mut out = String::new();
    for (left, right) in rows {
        out.push_str(&" ".repeat((digits + 1) * (width - left.len())));
        for v in left {
            let _ = write!(out, "{v:>digits$} ");
        }
        out.push('|');
        for v in right {
            let _ = write!(out, " {v:>digits$}");
        }
        out.push('\n');
    }
    out
}

/// Draws the fill of a tableau, one line per row; the empty tableau renders as `(empty)`.
pub fn render_sssyt(x: &Sssyt) -> String {
    render_fill(&x.fill(), x.big_n())
}

/// Draws any row-wise fill with entries right-aligned to the width of `max_entry`.
pub fn render_fill(rows: &[Vec<u32>], max_entry: usize) -> String {
    if rows.is_empty() {
        return String::from("(empty)\n");
    }
    let digits = digit_count(max_entry);
    let mut out = String::new();
    for row in rows {
        let cells: Vec<String> = row.iter().map(|v| alloc::format!("{v:>digits$}")).collect();
        out.push_str(&cells.join(" "));
        out.push('\n');
    }
    out
}

fn digit_count(mut v: usize) -> usize {
    let mut d = 1;
    while v >= 10 {
        v /= 10;
        d += 1;
    }
    d
}
