//! Crystal properties checked element by element.
//!
//! These back the `normality` verification suite and the randomized checks on
//! larger tensor powers. Each check yields a property name, the index tuple it
//! was instantiated with, and a pass flag.

use std::collections::BTreeSet;

use spincactus::crystal::{self, Bracketing, SpinorElement, TensorElement};
use spincactus::weights::{self, Weight};

use crate::error::ToolResult;

/// One instantiated property with its outcome.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Check {
    /// Property name, e.g. `axiom-pairing`.
    pub property: &'static str,
    /// The Dynkin index or other parameters.
    pub index: Vec<usize>,
    /// Outcome.
    pub pass: bool,
}

fn check(property: &'static str, index: Vec<usize>, pass: bool) -> Check {
    Check { property, index, pass }
}

/// The simple root `α_j` in doubled coordinates.
pub fn simple_root(n: usize, j: usize) -> Weight {
    let mut d = vec![0; n];
    if j < n {
        d[j - 1] = 2;
        d[j] = -2;
    } else {
        d[n - 2] = 2;
        d[n - 1] = 2;
    }
    Weight::from_doubled(d).expect("simple roots are integral")
}

/// Outcome of the signature rule: `ε_j`, `φ_j` and the factors that `ẽ_j` and `f̃_j` act on.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Signature {
    /// Number of uncancelled `−` signs.
    pub eps: i32,
    /// Number of uncancelled `+` signs.
    pub phi: i32,
    /// Factor carrying the rightmost uncancelled `−`.
    pub raise_at: Option<usize>,
    /// Factor carrying the leftmost uncancelled `+`.
    pub lower_at: Option<usize>,
}

/// Evaluates the signature rule on `t` for index `j`.
///
/// Each factor contributes `ε_j` minus signs followed by `φ_j` plus signs;
/// every `+` cancels against the nearest later `−`.
pub fn signature(t: &TensorElement, j: usize) -> Signature {
    let mut minuses: Vec<usize> = Vec::new();
    let mut pluses: Vec<usize> = Vec::new();
    for (k, f) in t.factors().iter().enumerate() {
        let eps = crystal::spin_eps(f, j).expect("index checked by caller");
        let phi = crystal::spin_phi(f, j).expect("index checked by caller");
        for _ in 0..eps {
            if pluses.pop().is_none() {
                minuses.push(k);
            }
        }
        pluses.extend(std::iter::repeat_n(k, phi as usize));
    }
    Signature {
        eps: minuses.len() as i32,
        phi: pluses.len() as i32,
        raise_at: minuses.last().copied(),
        lower_at: pluses.first().copied(),
    }
}

fn replace_factor(t: &TensorElement, k: usize, new: Option<SpinorElement>) -> Option<TensorElement> {
    let mut factors = t.factors().to_vec();
    factors[k] = new?;
    Some(TensorElement::new(factors).expect("same rank"))
}

/// `((f_1 ⊗ f_2) ⊗ (f_3 ⊗ f_4)) ⊗ ...`, splitting each block in half.
pub fn balanced(lo: usize, hi: usize) -> Bracketing {
    if hi - lo == 1 {
        Bracketing::Leaf(lo)
    } else {
        let mid = lo + (hi - lo) / 2;
        Bracketing::Node(Box::new(balanced(lo, mid)), Box::new(balanced(mid, hi)))
    }
}

fn push_power_counts(t: &TensorElement, j: usize, out: &mut Vec<Check>) {
    let power = |raise: bool| {
        let mut cur = t.clone();
        let mut k = 0;
        loop {
            let next = if raise {
                crystal::tensor_e(&cur, j)
            } else {
                crystal::tensor_f(&cur, j)
            }
            .expect("index in range");
            match next {
                Some(u) => {
                    cur = u;
                    k += 1;
                }
                None => return k,
            }
        }
    };
    let eps = crystal::tensor_eps(t, j).expect("index in range");
    let phi = crystal::tensor_phi(t, j).expect("index in range");
    out.push(check("normality", vec![j], power(true) == eps && power(false) == phi));
}

/// Axioms, normality, signature rule and associativity at every index.
pub fn operator_checks(t: &TensorElement) -> Vec<Check> {
    let n = t.rank();
    let wt = crystal::tensor_wt(t);
    let bracketings = [Bracketing::right(t.len()), balanced(0, t.len())];
    let mut out = Vec::new();
    for j in 1..=n {
        let eps = crystal::tensor_eps(t, j).expect("index in range");
        let phi = crystal::tensor_phi(t, j).expect("index in range");
        let e = crystal::tensor_e(t, j).expect("index in range");
        let f = crystal::tensor_f(t, j).expect("index in range");
        let alpha = simple_root(n, j);
        out.push(check(
            "axiom-pairing",
            vec![j],
            phi - eps == wt.coroot_pairing(j).expect("index in range"),
        ));
        let raise_ok = match &e {
            Some(u) => {
                crystal::tensor_wt(u) == wt.add(&alpha).expect("same rank")
                    && crystal::tensor_eps(u, j) == Ok(eps - 1)
                    && crystal::tensor_phi(u, j) == Ok(phi + 1)
                    && crystal::tensor_f(u, j) == Ok(Some(t.clone()))
            }
            None => true,
        };
        out.push(check("axiom-raise", vec![j], raise_ok));
        let lower_ok = match &f {
            Some(u) => {
                crystal::tensor_wt(u) == wt.sub(&alpha).expect("same rank")
                    && crystal::tensor_eps(u, j) == Ok(eps + 1)
                    && crystal::tensor_phi(u, j) == Ok(phi - 1)
                    && crystal::tensor_e(u, j) == Ok(Some(t.clone()))
            }
            None => true,
        };
        out.push(check("axiom-lower", vec![j], lower_ok));
        push_power_counts(t, j, &mut out);

        let sig = signature(t, j);
        let e_sig = sig
            .raise_at
            .and_then(|k| replace_factor(t, k, crystal::spin_e(&t.factors()[k], j).expect("index")));
        let f_sig = sig
            .lower_at
            .and_then(|k| replace_factor(t, k, crystal::spin_f(&t.factors()[k], j).expect("index")));
        out.push(check(
            "signature-rule",
            vec![j],
            sig.eps == eps && sig.phi == phi && e_sig == e && f_sig == f,
        ));

        let assoc = bracketings
            .iter()
            .all(|b| b.eps(t, j) == eps && b.phi(t, j) == phi && b.apply(t, j, true) == e && b.apply(t, j, false) == f);
        out.push(check("associativity", vec![j], assoc));
    }
    out
}

/// With `b = t`: if `wt(t) + wt(b_μ)` is dominant and `ẽ_j b_μ` is defined, so is `f̃_j t`.
pub fn dominant_lowering_checks(t: &TensorElement, spinors: &[SpinorElement]) -> Vec<Check> {
    let n = t.rank();
    let wt = crystal::tensor_wt(t);
    let mut ok = vec![true; n + 1];
    for mu in spinors {
        if !wt.add(&crystal::spin_wt(mu)).expect("same rank").is_dominant() {
            continue;
        }
        for (j, ok_j) in ok.iter_mut().enumerate().skip(1) {
            let raisable = crystal::spin_e(mu, j).expect("index").is_some();
            let lowerable = crystal::tensor_f(t, j).expect("index").is_some();
            if raisable && !lowerable {
                *ok_j = false;
            }
        }
    }
    (1..=n).map(|j| check("dominant-lowering", vec![j], ok[j])).collect()
}

/// Lowering paths with `b` the first `N − 1` factors of `t` and `b_μ` the last one.
///
/// For every `b_ν` with `wt(b) + wt(b_ν)` and `wt(t) + wt(b_ν)` dominant and
/// every raising path `ẽ_{i_r} ... ẽ_{i_1} b_ν ≠ 0`, the lowering path on `t`
/// must be defined and must act on `b` only. Paths are explored through their
/// distinct states `(ẽ... b_ν, f̃... b)`, which covers every path. The index
/// of each record is the first Dynkin index at which a step is taken.
pub fn lowering_path_checks(t: &TensorElement, spinors: &[SpinorElement]) -> Vec<Check> {
    let n = t.rank();
    if t.len() < 2 {
        return Vec::new();
    }
    let (prefix, last) = t.factors().split_at(t.len() - 1);
    let mu = last[0];
    let b = TensorElement::new(prefix.to_vec()).expect("non-empty prefix");
    let wt_b = crystal::tensor_wt(&b);
    let wt_t = crystal::tensor_wt(t);
    let append = |x: &TensorElement| {
        let mut f = x.factors().to_vec();
        f.push(mu);
        TensorElement::new(f).expect("same rank")
    };
    let mut ok = vec![true; n + 1];
    for nu in spinors {
        let wn = crystal::spin_wt(nu);
        if !wt_b.add(&wn).expect("rank").is_dominant() || !wt_t.add(&wn).expect("rank").is_dominant() {
            continue;
        }
        let mut seen: BTreeSet<(SpinorElement, TensorElement)> = BTreeSet::new();
        let mut stack = vec![(*nu, b.clone(), 0usize)];
        while let Some((cur_nu, cur_b, first)) = stack.pop() {
            for j in 1..=n {
                let Some(next_nu) = crystal::spin_e(&cur_nu, j).expect("index") else {
                    continue;
                };
                let tag = if first == 0 { j } else { first };
                let next_b = crystal::tensor_f(&cur_b, j).expect("index");
                let whole = crystal::tensor_f(&append(&cur_b), j).expect("index");
                match next_b {
                    Some(nb) if whole.as_ref() == Some(&append(&nb)) => {
                        if seen.insert((next_nu, nb.clone())) {
                            stack.push((next_nu, nb, tag));
                        }
                    }
                    _ => ok[tag] = false,
                }
            }
        }
    }
    (1..=n).map(|j| check("lowering-path", vec![j], ok[j])).collect()
}

/// Every per-element check on `t`.
pub fn tensor_checks(t: &TensorElement, spinors: &[SpinorElement]) -> Vec<Check> {
    let mut out = operator_checks(t);
    out.extend(dominant_lowering_checks(t, spinors));
    out.extend(lowering_path_checks(t, spinors));
    out
}

/// All `2^n` spinor elements in mask order.
pub fn all_spinors(n: usize) -> ToolResult<Vec<SpinorElement>> {
    Ok((0..1u64 << n)
        .map(|m| SpinorElement::from_mask(n, m))
        .collect::<Result<Vec<_>, _>>()?)
}

/// Structure of the spinor crystal of rank `n`.
///
/// `ε_j + φ_j <= 1`; for adjacent `i, j` (when `n >= 4`) `ε_i ε_j = 0 = φ_i φ_j`;
/// distinct elements have distinct weights.
pub fn spinor_checks(n: usize) -> ToolResult<Vec<Check>> {
    let all = all_spinors(n)?;
    let mut out = Vec::new();
    for j in 1..=n {
        let bounded = all
            .iter()
            .all(|b| crystal::spin_eps(b, j).expect("index") + crystal::spin_phi(b, j).expect("index") <= 1);
        out.push(check("spinor-bound", vec![j], bounded));
        if n >= 4 {
            for i in weights::dynkin_adjacent(n, j)? {
                let exclusive = all.iter().all(|b| {
                    let e = |k| crystal::spin_eps(b, k).expect("index");
                    let p = |k| crystal::spin_phi(b, k).expect("index");
                    e(i) * e(j) == 0 && p(i) * p(j) == 0
                });
                out.push(check("spinor-adjacent", vec![i, j], exclusive));
            }
        }
    }
    let distinct: BTreeSet<Weight> = all.iter().map(crystal::spin_wt).collect();
    out.push(check("spinor-unique-weight", Vec::new(), distinct.len() == all.len()));
    Ok(out)
}
