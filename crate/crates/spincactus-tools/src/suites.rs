//! The verification suites behind `spincactus verify`.
//!
//! Each suite returns one [`Record`] per (shape, property, index) key. A record
//! passes iff every element checked under its key passes; otherwise it carries
//! the first failing element as witness. Work fans out over shapes or element
//! chunks and is merged in enumeration order, so reports are deterministic.

use std::collections::{BTreeMap, BTreeSet};

use clap::ValueEnum;
use rayon::prelude::*;
use serde::Serialize;
use serde_json::Value;
use spincactus::action;
use spincactus::cactus;
use spincactus::crystal::{SpinorElement, TensorElement};
use spincactus::decomp::{self, WeightSequence, DEFAULT_ENUM_LIMIT};
use spincactus::shapes::{self, Sssyt};
use spincactus::weights::Weight;
use spincactus::{Error, DEFAULT_BRUTE_LIMIT};

use crate::checks;
use crate::error::ToolResult;
use crate::formats::{seq_json, sssyt_json, tensor_json};

/// The named suites.
#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Suite {
    /// `τ_i^2 = 1` on every short tableau.
    Involution,
    /// `tau_seq` agrees with the crystal-operator oracle on all of `T^N`.
    Oracle,
    /// Cactus group relations as permutations of every tableau set.
    CactusRelations,
    /// Round trips of `K_N`, `F_N`, `I_λ`, `Y_λ` and the composite bijection.
    Bijections,
    /// Crystal axioms, normality, signature rule, associativity, spinor structure and lowering paths.
    Normality,
}

impl Suite {
    /// The default bound on `n * N` when neither the flag nor the environment sets one.
    pub fn default_limit(self) -> usize {
        match self {
            Suite::Normality => DEFAULT_BRUTE_LIMIT,
            _ => DEFAULT_ENUM_LIMIT,
        }
    }
}

/// One line of a verification report.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct Record {
    /// Column lengths of the shape, or `null` when the property is not tied to a shape.
    pub shape: Option<Vec<u32>>,
    /// Generator or Dynkin indices instantiating the property.
    pub index: Vec<usize>,
    /// Property name.
    pub property: String,
    /// Outcome.
    pub pass: bool,
    /// First failing element, encoded in its JSON format.
    pub witness: Option<Value>,
}

type Key = (Option<Vec<u32>>, String, Vec<usize>);

/// Records keyed by (shape, property, index), merged in insertion order.
#[derive(Default, Debug)]
pub struct Report {
    entries: BTreeMap<Key, (bool, Option<Value>)>,
}

impl Report {
    /// Adds one outcome; the witness is only built on the first failure under the key.
    pub fn add(
        &mut self,
        shape: Option<&[u32]>,
        property: &str,
        index: Vec<usize>,
        pass: bool,
        witness: impl FnOnce() -> Value,
    ) {
        let key = (shape.map(<[u32]>::to_vec), property.to_string(), index);
        let entry = self.entries.entry(key).or_insert((true, None));
        if !pass && entry.0 {
            *entry = (false, Some(witness()));
        }
    }

    /// Folds `other` into `self`; earlier failures keep their witnesses.
    pub fn merge(&mut self, other: Report) {
        for (key, (pass, witness)) in other.entries {
            let entry = self.entries.entry(key).or_insert((true, None));
            if !pass && entry.0 {
                *entry = (false, witness);
            }
        }
    }

    /// The records in key order.
    pub fn records(&self) -> Vec<Record> {
        self.entries
            .iter()
            .map(|((shape, property, index), (pass, witness))| Record {
                shape: shape.clone(),
                index: index.clone(),
                property: property.clone(),
                pass: *pass,
                witness: witness.clone(),
            })
            .collect()
    }

    /// True iff every record passes.
    pub fn all_passed(&self) -> bool {
        self.entries.values().all(|(pass, _)| *pass)
    }

    /// Number of records.
    pub fn len(&self) -> usize {
        self.entries.len()
    }

    /// True iff there are no records.
    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }
}

fn merge_all(parts: Vec<Report>) -> Report {
    let mut out = Report::default();
    for p in parts {
        out.merge(p);
    }
    out
}

/// Runs a suite for rank `n` and length `N` under the size bound `limit`.
pub fn run_suite(suite: Suite, n: usize, big_n: usize, limit: usize) -> ToolResult<Report> {
    match suite {
        Suite::Involution => involution(n, big_n, limit),
        Suite::Oracle => oracle(n, big_n, limit),
        Suite::CactusRelations => cactus_relations(n, big_n, limit),
        Suite::Bijections => bijections(n, big_n, limit),
        Suite::Normality => normality(n, big_n, limit),
    }
}

/// `τ_i(τ_i(x)) = x` and `τ_i` keeps the shape, for every tableau and every `i < N`.
pub fn involution(n: usize, big_n: usize, limit: usize) -> ToolResult<Report> {
    let shapes = shapes::enumerate_shapes(n, big_n, limit)?;
    let parts = shapes
        .par_iter()
        .map(|shape| -> ToolResult<Report> {
            let mut report = Report::default();
            for x in shapes::enumerate_sssyt(shape)? {
                for i in 1..big_n {
                    let pass = action::tau_tableau(&x, i)
                        .and_then(|y| Ok(y.shape() == x.shape() && action::tau_tableau(&y, i)? == x))
                        .unwrap_or(false);
                    report.add(Some(shape.cols()), "involution", vec![i], pass, || {
                        serde_json::to_value(sssyt_json(&x)).expect("serializable")
                    });
                }
            }
            Ok(report)
        })
        .collect::<ToolResult<Vec<_>>>()?;
    Ok(merge_all(parts))
}

fn final_shape(seq: &WeightSequence) -> Option<Vec<u32>> {
    let d = shapes::kappa(&seq.total(), seq.len()).ok()?;
    Some(shapes::f_map(&d).ok()?.cols().to_vec())
}

/// `tau_seq(x, i) = oracle_tau(x, i)` for every `x ∈ T^N` and every `i < N`.
pub fn oracle(n: usize, big_n: usize, limit: usize) -> ToolResult<Report> {
    let seqs = decomp::enumerate_t(n, big_n, limit)?;
    let parts = seqs
        .par_chunks(256)
        .map(|chunk| {
            let mut report = Report::default();
            for seq in chunk {
                let shape = final_shape(seq);
                for i in 1..big_n {
                    let closed = action::tau_seq(seq, i);
                    let pass = closed.is_ok() && closed == action::oracle_tau(seq, i);
                    report.add(shape.as_deref(), "oracle", vec![i], pass, || {
                        serde_json::to_value(seq_json(seq)).expect("serializable")
                    });
                }
            }
            report
        })
        .collect();
    Ok(merge_all(parts))
}

/// The cactus relations, one record per shape, relation family and index tuple.
pub fn cactus_relations(n: usize, big_n: usize, limit: usize) -> ToolResult<Report> {
    let mut report = Report::default();
    for c in cactus::check_relations(n, big_n, limit)? {
        let property = format!("relation-{}", c.relation);
        let witness = c.witness.clone();
        report.add(Some(c.shape.cols()), &property, c.indices.clone(), c.passed(), || {
            serde_json::to_value(sssyt_json(&witness.expect("failed checks carry a witness"))).expect("serializable")
        });
    }
    Ok(report)
}

/// Round trips of every bijection and the cardinality and injectivity of the composite.
pub fn bijections(n: usize, big_n: usize, limit: usize) -> ToolResult<Report> {
    let deltas = decomp::enumerate_delta(n, big_n, limit)?;
    let parts = deltas
        .par_iter()
        .map(|lambda| bijections_for(lambda, big_n, limit))
        .collect::<ToolResult<Vec<_>>>()?;
    Ok(merge_all(parts))
}

fn bijections_for(lambda: &Weight, big_n: usize, limit: usize) -> ToolResult<Report> {
    let mut report = Report::default();
    let d = shapes::kappa(lambda, big_n)?;
    let nu = shapes::f_map(&d)?;
    let shape = nu.cols().to_vec();
    let key = Some(shape.as_slice());
    let no_witness = || Value::Null;
    report.add(
        key,
        "kappa-roundtrip",
        vec![],
        shapes::kappa_inv(&d) == *lambda,
        no_witness,
    );
    let f_ok = shapes::f_inv(&nu).is_ok_and(|back| back == d && shapes::f_map(&back).as_ref() == Ok(&nu));
    report.add(key, "f-roundtrip", vec![], f_ok, no_witness);
    report.add(
        key,
        "shape-weight",
        vec![],
        shapes::shape_weight(&nu).as_ref() == Ok(lambda),
        no_witness,
    );

    let seqs = decomp::enumerate_t_lambda(lambda, big_n, limit)?;
    let mut images: BTreeSet<Sssyt> = BTreeSet::new();
    for seq in &seqs {
        let witness = || serde_json::to_value(seq_json(seq)).expect("serializable");
        let ct = shapes::i_map(seq);
        let i_ok = ct.as_ref().is_ok_and(|ct| shapes::i_inv(ct).as_ref() == Ok(seq));
        report.add(key, "i-roundtrip", vec![], i_ok, witness);
        let x = ct.and_then(|ct| {
            let x = shapes::y_map(&ct)?;
            Ok((shapes::y_inv(&x)? == ct, x))
        });
        let (y_ok, x) = match x {
            Ok((ok, x)) => (ok, Some(x)),
            Err(_) => (false, None),
        };
        report.add(key, "y-roundtrip", vec![], y_ok, witness);
        let in_shape = x.as_ref().is_some_and(|x| *x.shape() == nu);
        report.add(key, "composite-shape", vec![], in_shape, witness);
        images.extend(x);
    }
    report.add(
        key,
        "composite-injective",
        vec![],
        images.len() == seqs.len(),
        no_witness,
    );
    let tableaux = shapes::enumerate_sssyt(&nu)?;
    let onto = tableaux.len() == seqs.len() && tableaux.iter().all(|x| images.contains(x));
    report.add(key, "composite-cardinality", vec![], onto, no_witness);
    for x in &tableaux {
        let back = shapes::sssyt_to_seq(x).and_then(|s| shapes::seq_to_sssyt(&s));
        report.add(key, "composite-inverse", vec![], back.as_ref() == Ok(x), || {
            serde_json::to_value(sssyt_json(x)).expect("serializable")
        });
    }
    Ok(report)
}

/// The tensor element with the given index in mask order, factor `k` taking bits `n k .. n k + n`.
pub fn tensor_from_index(n: usize, big_n: usize, index: u64) -> TensorElement {
    let mask = (1u64 << n) - 1;
    let factors = (0..big_n)
        .map(|k| SpinorElement::from_mask(n, (index >> (n * k)) & mask).expect("rank checked"))
        .collect();
    TensorElement::new(factors).expect("non-empty")
}

/// Every per-element crystal check over all of B_S^⊗N, plus the spinor structure checks on B_S.
pub fn normality(n: usize, big_n: usize, limit: usize) -> ToolResult<Report> {
    let size = n * big_n;
    if big_n == 0 || size > limit || size > 40 {
        return Err(Error::InstanceTooLarge { size, limit }.into());
    }
    let spinors = checks::all_spinors(n)?;
    let mut report = Report::default();
    for c in checks::spinor_checks(n)? {
        report.add(None, c.property, c.index, c.pass, || Value::Null);
    }
    let total = 1u64 << size;
    let chunk = 4096u64;
    let parts: Vec<Report> = (0..total.div_ceil(chunk))
        .into_par_iter()
        .map(|c| {
            let mut part = Report::default();
            for index in c * chunk..((c + 1) * chunk).min(total) {
                let t = tensor_from_index(n, big_n, index);
                for ch in checks::tensor_checks(&t, &spinors) {
                    part.add(None, ch.property, ch.index, ch.pass, || {
                        serde_json::to_value(tensor_json(&t)).expect("serializable")
                    });
                }
            }
            part
        })
        .collect();
    report.merge(merge_all(parts));
    Ok(report)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn first_failure_keeps_its_witness() {
        let mut report = Report::default();
        report.add(Some(&[2, 1]), "p", vec![1], true, || Value::from(0));
        report.add(Some(&[2, 1]), "p", vec![1], false, || Value::from(1));
        report.add(Some(&[2, 1]), "p", vec![1], false, || Value::from(2));
        report.add(None, "q", vec![], true, || Value::Null);
        assert_eq!(report.len(), 2);
        assert!(!report.all_passed());
        let failed: Vec<_> = report.records().into_iter().filter(|r| !r.pass).collect();
        assert_eq!(failed.len(), 1);
        assert_eq!(failed[0].witness, Some(Value::from(1)));
    }

    #[test]
    fn merge_is_order_stable() {
        let mut a = Report::default();
        a.add(None, "p", vec![2], false, || Value::from("first"));
        let mut b = Report::default();
        b.add(None, "p", vec![2], false, || Value::from("second"));
        b.add(None, "p", vec![1], true, || Value::Null);
        a.merge(b);
        let records = a.records();
        assert_eq!(records[0].index, vec![1]);
        assert_eq!(records[1].witness, Some(Value::from("first")));
    }

    #[test]
    fn tensor_indices_follow_mask_order() {
        let t = tensor_from_index(4, 2, 0b0001_1111);
        assert_eq!(t.factors()[0].mask(), 0b1111);
        assert_eq!(t.factors()[1].mask(), 0b0001);
    }

    #[test]
    fn oversized_normality_is_rejected() {
        assert!(normality(4, 6, 20).is_err());
    }
}
