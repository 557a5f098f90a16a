//! Cactus-group words and a relation checker for finite actions.
//!
//! Words use either the interval reversers `s_{p,q}` or the Bender-Knuth
//! generators `t_i`. A word `g_1 g_2 ... g_k` acts right to left: `g_k` first.

use alloc::collections::BTreeMap;
use alloc::string::{String, ToString};
use alloc::vec::Vec;
use core::fmt;
use core::str::FromStr;

use crate::action;
use crate::shapes::{self, ShortYoungDiagram, Sssyt};
use crate::{Error, Result};

/// A generator of the cactus group on `N` strands.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Debug)]
pub enum CactusGenerator {
    /// The interval reverser `s_{p,q}` with `1 <= p < q <= N`.
    S(usize, usize),
    /// The Bender-Knuth generator `t_i` with `1 <= i <= N − 1`.
    T(usize),
}

impl CactusGenerator {
    /// Checks the index bounds for `N` strands.
    pub fn check(&self, big_n: usize) -> Result<()> {
        match *self {
            CactusGenerator::S(p, q) if p >= 1 && p < q && q <= big_n => Ok(()),
            CactusGenerator::S(_, q) => Err(Error::IndexOutOfRange { index: q, max: big_n }),
            CactusGenerator::T(i) if i >= 1 && i < big_n => Ok(()),
            CactusGenerator::T(i) => Err(Error::IndexOutOfRange {
                index: i,
                max: big_n.saturating_sub(1),
            }),
        }
    }
}

impl fmt::Display for CactusGenerator {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CactusGenerator::S(p, q) => write!(f, "s{p},{q}"),
            CactusGenerator::T(i) => write!(f, "t{i}"),
        }
    }
}

impl FromStr for CactusGenerator {
    type Err = Error;

    /// Parses `t3` or `s1,4`.
    fn from_str(token: &str) -> Result<Self> {
        let bad = || Error::Parse(token.to_string());
        if let Some(rest) = token.strip_prefix('t') {
            return rest.parse().map(CactusGenerator::T).map_err(|_| bad());
        }
        if let Some(rest) = token.strip_prefix('s') {
            let (p, q) = rest.split_once(',').ok_or_else(bad)?;
            let p = p.trim().parse().map_err(|_| bad())?;
            let q = q.trim().parse().map_err(|_| bad())?;
            return Ok(CactusGenerator::S(p, q));
        }
        Err(bad())
    }
}

/// A word in the cactus generators on `N` strands.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct CactusWord {
    big_n: usize,
    gens: Vec<CactusGenerator>,
}

impl CactusWord {
    /// Builds a word, checking every generator against `N`.
    pub fn new(big_n: usize, gens: Vec<CactusGenerator>) -> Result<Self> {
        for g in &gens {
            g.check(big_n)?;
        }
        Ok(CactusWord { big_n, gens })
    }

    /// Parses whitespace-separated tokens such as `t1 s2,5 t4`.
    pub fn parse(big_n: usize, text: &str) -> Result<Self> {
        let gens = text.split_whitespace().map(str::parse).collect::<Result<Vec<_>>>()?;
        Self::new(big_n, gens)
    }

    /// The generators, leftmost first.
    pub fn gens(&self) -> &[CactusGenerator] {
        &self.gens
    }

    /// The number of strands `N`.
    pub fn big_n(&self) -> usize {
        self.big_n
    }

    /// The word `self · other` (apply `other` first).
    pub fn concat(&self, other: &CactusWord) -> CactusWord {
        let mut gens = self.gens.clone();
        gens.extend_from_slice(&other.gens);
        CactusWord {
            big_n: self.big_n,
            gens,
        }
    }

    /// The `t`-indices of the word with every `s_{p,q}` expanded by [`s_to_t`], leftmost first.
    pub fn expand_to_t(&self) -> Vec<usize> {
        let mut out = Vec::new();
        for g in &self.gens {
            match *g {
                CactusGenerator::T(i) => out.push(i),
                CactusGenerator::S(p, q) => out.extend(s_expansion(p, q)),
            }
        }
        out
    }
}

impl fmt::Display for CactusWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (k, g) in self.gens.iter().enumerate() {
            if k > 0 {
                f.write_str(" ")?;
            }
            write!(f, "{g}")?;
        }
        Ok(())
    }
}

/// The `t`-word `s_k = t_1 (t_2 t_1) ... (t_k t_{k−1} ... t_1)`; `s_0` is empty.
pub fn s_word(k: usize) -> Vec<usize> {
    let mut out = Vec::new();
    for top in 1..=k {
        out.extend((1..=top).rev());
    }
    out
}

fn s_expansion(p: usize, q: usize) -> Vec<usize> {
    let outer = s_word(q - 1);
    let mut out = outer.clone();
    out.extend(s_word(q - p));
    out.extend(outer);
    out
}

/// The image of `t_i` over the `s` generators.
///
/// `t_1 ↦ s_{1,2}`, `t_2 ↦ s_{1,2} s_{1,3} s_{1,2}`, and
/// `t_i ↦ s_{1,i} s_{1,i+1} s_{1,i} s_{1,i−1}` for `i > 2`.
pub fn t_to_s(i: usize, big_n: usize) -> Result<CactusWord> {
    CactusGenerator::T(i).check(big_n)?;
    let s = |q| CactusGenerator::S(1, q);
    let gens = match i {
        1 => alloc::vec![s(2)],
        2 => alloc::vec![s(2), s(3), s(2)],
        _ => alloc::vec![s(i), s(i + 1), s(i), s(i - 1)],
    };
    CactusWord::new(big_n, gens)
}

/// The image `s_{q−1} s_{q−p} s_{q−1}` of `s_{p,q}` over the `t` generators.
pub fn s_to_t(p: usize, q: usize, big_n: usize) -> Result<CactusWord> {
    CactusGenerator::S(p, q).check(big_n)?;
    CactusWord::new(big_n, s_expansion(p, q).into_iter().map(CactusGenerator::T).collect())
}

/// Applies a word to `x`, rightmost generator first, with `tau` supplying each `t_i`.
pub fn apply_word_with<X: Clone>(w: &CactusWord, x: &X, mut tau: impl FnMut(&X, usize) -> Result<X>) -> Result<X> {
    let mut cur = x.clone();
    for i in w.expand_to_t().into_iter().rev() {
        cur = tau(&cur, i)?;
    }
    Ok(cur)
}

/// Applies a word to a short tableau through [`action::tau_tableau`].
pub fn apply_word(w: &CactusWord, x: &Sssyt) -> Result<Sssyt> {
    if w.big_n != x.big_n() {
        return Err(Error::IndexOutOfRange {
            index: w.big_n,
            max: x.big_n(),
        });
    }
    apply_word_with(w, x, action::tau_tableau)
}

/// One checked relation instance on one shape.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct RelationCheck {
    /// The shape `ν` whose tableaux were permuted.
    pub shape: ShortYoungDiagram,
    /// The relation family, `a` through `f`, or `presentation` for the `t_to_s` consistency check.
    pub relation: &'static str,
    /// The indices instantiating the family.
    pub indices: Vec<usize>,
    /// A tableau on which the two sides differ, if any.
    pub witness: Option<Sssyt>,
}

impl RelationCheck {
    /// True iff no witness was found.
    pub fn passed(&self) -> bool {
        self.witness.is_none()
    }
}

/// A permutation of `0..len` stored as images.
type Perm = Vec<usize>;

/// `a ∘ b`: apply `b` first.
fn compose(a: &Perm, b: &Perm) -> Perm {
    b.iter().map(|&k| a[k]).collect()
}

fn identity(len: usize) -> Perm {
    (0..len).collect()
}

fn word_perm(t_perms: &[Perm], word: &[usize], len: usize) -> Perm {
    let mut p = identity(len);
    for &i in word {
        p = compose(&p, &t_perms[i]);
    }
    p
}

/// Checks every cactus relation on every shape of `SYD(N, n)` with the action [`action::tau_tableau`].
pub fn check_relations(n: usize, big_n: usize, limit: usize) -> Result<Vec<RelationCheck>> {
    check_relations_with(n, big_n, limit, action::tau_tableau)
}

/// Checks the cactus relations with a caller-supplied action of the `t_i`.
///
/// For each shape, the `t_i` become permutations of the tableaux and the
/// following are verified:
/// (a) `s_{p,q}^2 = 1`; (b) `s_{p1,q1}` and `s_{p2,q2}` commute when `q1 < p2`;
/// (c) `s_{p1,q1} s_{p2,q2} s_{p1,q1} = s_{p1+q1−q2, p1+q1−p2}` for nested intervals;
/// (d) `t_i^2 = 1`; (e) `t_i t_j = t_j t_i` for `|i − j| > 1`;
/// (f) `(t_i s_{k−1} s_{k−j} s_{k−1})^2 = 1` for `i + 1 < j < k <= N`;
/// and the presentation check `t_to_s(i)` acts as `t_i`.
pub fn check_relations_with(
    n: usize,
    big_n: usize,
    limit: usize,
    mut tau: impl FnMut(&Sssyt, usize) -> Result<Sssyt>,
) -> Result<Vec<RelationCheck>> {
    let mut report = Vec::new();
    for shape in shapes::enumerate_shapes(n, big_n, limit)? {
        let elems = shapes::enumerate_sssyt(&shape)?;
        let len = elems.len();
        let index: BTreeMap<&Sssyt, usize> = elems.iter().enumerate().map(|(k, x)| (x, k)).collect();
        let mut t_perms: Vec<Perm> = alloc::vec![identity(len)];
        for i in 1..big_n {
            let mut p = Vec::with_capacity(len);
            for x in &elems {
                let y = tau(x, i)?;
                let k = *index
                    .get(&y)
                    .ok_or(Error::InvalidTableau("generator image leaves the shape"))?;
                p.push(k);
            }
            t_perms.push(p);
        }
        let mut s_perms = BTreeMap::new();
        for q in 2..=big_n {
            for p in 1..q {
                s_perms.insert((p, q), word_perm(&t_perms, &s_expansion(p, q), len));
            }
        }
        let id = identity(len);
        let mut record = |relation: &'static str, indices: Vec<usize>, lhs: &Perm, rhs: &Perm| {
            let witness = (0..len).find(|&k| lhs[k] != rhs[k]).map(|k| elems[k].clone());
            report.push(RelationCheck {
                shape: shape.clone(),
                relation,
                indices,
                witness,
            });
        };
        let intervals: Vec<(usize, usize)> = s_perms.keys().copied().collect();
        for &(p, q) in &intervals {
            let s = &s_perms[&(p, q)];
            record("a", alloc::vec![p, q], &compose(s, s), &id);
        }
        for &(p1, q1) in &intervals {
            for &(p2, q2) in &intervals {
                let (a, b) = (&s_perms[&(p1, q1)], &s_perms[&(p2, q2)]);
                if q1 < p2 {
                    record("b", alloc::vec![p1, q1, p2, q2], &compose(a, b), &compose(b, a));
                }
                let nested = p1 <= p2 && q2 <= q1 && (p1, q1) != (p2, q2);
                if nested {
                    let target = &s_perms[&(p1 + q1 - q2, p1 + q1 - p2)];
                    record("c", alloc::vec![p1, q1, p2, q2], &compose(a, &compose(b, a)), target);
                }
            }
        }
        for i in 1..big_n {
            let t = &t_perms[i];
            record("d", alloc::vec![i], &compose(t, t), &id);
            for (j, u) in t_perms.iter().enumerate().take(big_n).skip(i + 2) {
                record("e", alloc::vec![i, j], &compose(t, u), &compose(u, t));
            }
            for j in i + 2..big_n {
                for k in j + 1..=big_n {
                    let mut word = alloc::vec![i];
                    word.extend(s_word(k - 1));
                    word.extend(s_word(k - j));
                    word.extend(s_word(k - 1));
                    let g = word_perm(&t_perms, &word, len);
                    record("f", alloc::vec![i, j, k], &compose(&g, &g), &id);
                }
            }
            let via_s = t_to_s(i, big_n)?;
            record(
                "presentation",
                alloc::vec![i],
                &word_perm(&t_perms, &via_s.expand_to_t(), len),
                t,
            );
        }
    }
    Ok(report)
}

/// Text form of the failed checks, one per line.
pub fn describe_failures(report: &[RelationCheck]) -> String {
    let mut out = String::new();
    for c in report.iter().filter(|c| !c.passed()) {
        out.push_str(&alloc::format!(
            "{} {:?} on {:?}\n",
            c.relation,
            c.indices,
            c.shape.cols()
        ));
    }
    out
}
