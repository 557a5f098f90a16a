//! JSON encodings of every engine type, input auto-detection and conversions.
//!
//! Weights are always exchanged in doubled coordinates. The schemas are
//! documented in `docs/formats.md`.

use clap::ValueEnum;
use serde::{Deserialize, Serialize};
use serde_json::Value;
use spincactus::action::AdmissibleTriple;
use spincactus::crystal::{SpinorElement, TensorElement};
use spincactus::decomp::{self, WeightSequence};
use spincactus::shapes::{self, CellDiagram, CellTableau, ShortYoungDiagram, Sssyt};
use spincactus::weights::Weight;

use crate::error::{ToolError, ToolResult};

/// `{"n":4,"doubled":[3,1,1,-1]}`
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct WeightJson {
    /// Rank.
    pub n: usize,
    /// Doubled coordinates.
    pub doubled: Vec<i32>,
}

/// `{"n":4,"factors":["+-++", ...]}`
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct TensorJson {
    /// Rank.
    pub n: usize,
    /// Sign strings, leftmost character is coordinate 1.
    pub factors: Vec<String>,
}

/// `{"n":4,"mus":[[1,1,1,-1], ...]}`
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct SeqJson {
    /// Rank.
    pub n: usize,
    /// Doubled spin weights.
    pub mus: Vec<Vec<i32>>,
}

/// `{"n":4,"N":7,"l":[2,3,3,4],"r":[5,4,4,3]}`
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct CellDiagramJson {
    /// Height.
    pub n: usize,
    /// Length.
    #[serde(rename = "N")]
    pub big_n: usize,
    /// Cells left of the axis, row by row.
    pub l: Vec<u32>,
    /// Cells right of the axis, row by row.
    pub r: Vec<u32>,
}

/// `{"n":4,"N":7,"cols":[4,3,3,2]}`
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ShapeJson {
    /// Maximal number of columns.
    pub n: usize,
    /// Bound on the first two columns.
    #[serde(rename = "N")]
    pub big_n: usize,
    /// Column lengths, left to right, without trailing zeros.
    pub cols: Vec<u32>,
}

/// `{"n":4,"N":7,"rows":[[1,1,2,4],[2,3],...]}`
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct SssytJson {
    /// Maximal number of columns.
    pub n: usize,
    /// Largest admissible entry.
    #[serde(rename = "N")]
    pub big_n: usize,
    /// Row-wise fill, top row first.
    pub rows: Vec<Vec<u32>>,
}

/// `{"n":12,"gamma":[...],"mu_a":[...],"mu_b":[...]}`
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct TripleJson {
    /// Rank.
    pub n: usize,
    /// Doubled prefix weight.
    pub gamma: Vec<i32>,
    /// Doubled first spin weight (position `i`).
    pub mu_a: Vec<i32>,
    /// Doubled second spin weight (position `i + 1`).
    pub mu_b: Vec<i32>,
}

/// The representations understood by the front end.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, ValueEnum)]
pub enum Kind {
    /// A weight.
    Weight,
    /// A tensor element of B_S^⊗N.
    Tensor,
    /// A weight sequence.
    Seq,
    /// A regular cell diagram.
    Cells,
    /// A cell tableau.
    Celltab,
    /// A short Young diagram.
    Shape,
    /// A short semi-standard Young tableau.
    Sssyt,
    /// An admissible triple.
    Triple,
}

impl Kind {
    /// True for the four encodings of an element of `T^N`.
    pub fn is_element(self) -> bool {
        matches!(self, Kind::Tensor | Kind::Seq | Kind::Celltab | Kind::Sssyt)
    }

    /// True for the three encodings of a component label.
    pub fn is_label(self) -> bool {
        matches!(self, Kind::Weight | Kind::Cells | Kind::Shape)
    }

    /// The lower-case name used on the command line.
    pub fn name(self) -> &'static str {
        match self {
            Kind::Weight => "weight",
            Kind::Tensor => "tensor",
            Kind::Seq => "seq",
            Kind::Cells => "cells",
            Kind::Celltab => "celltab",
            Kind::Shape => "shape",
            Kind::Sssyt => "sssyt",
            Kind::Triple => "triple",
        }
    }
}

/// A decoded input of any kind.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Item {
    /// A weight.
    Weight(Weight),
    /// A tensor element.
    Tensor(TensorElement),
    /// A weight sequence.
    Seq(WeightSequence),
    /// A regular cell diagram.
    Cells(CellDiagram),
    /// A cell tableau.
    Celltab(CellTableau),
    /// A short Young diagram.
    Shape(ShortYoungDiagram),
    /// A short semi-standard Young tableau.
    Sssyt(Sssyt),
    /// An admissible triple.
    Triple(AdmissibleTriple),
}

impl Item {
    /// The kind of this item.
    pub fn kind(&self) -> Kind {
        match self {
            Item::Weight(_) => Kind::Weight,
            Item::Tensor(_) => Kind::Tensor,
            Item::Seq(_) => Kind::Seq,
            Item::Cells(_) => Kind::Cells,
            Item::Celltab(_) => Kind::Celltab,
            Item::Shape(_) => Kind::Shape,
            Item::Sssyt(_) => Kind::Sssyt,
            Item::Triple(_) => Kind::Triple,
        }
    }

    /// The JSON value of this item.
    pub fn to_value(&self) -> Value {
        match self {
            Item::Weight(w) => to_value(&weight_json(w)),
            Item::Tensor(t) => to_value(&tensor_json(t)),
            Item::Seq(s) => to_value(&seq_json(s)),
            Item::Cells(d) => to_value(&cells_json(d)),
            Item::Celltab(ct) => Value::Array(ct.steps().iter().map(|d| to_value(&cells_json(d))).collect()),
            Item::Shape(s) => to_value(&shape_json(s)),
            Item::Sssyt(x) => to_value(&sssyt_json(x)),
            Item::Triple(tr) => to_value(&triple_json(tr)),
        }
    }

    /// Compact single-line JSON text.
    pub fn to_json(&self) -> String {
        self.to_value().to_string()
    }
}

fn to_value<T: Serialize>(v: &T) -> Value {
    serde_json::to_value(v).expect("plain data serializes")
}

/// JSON form of a weight.
pub fn weight_json(w: &Weight) -> WeightJson {
    WeightJson {
        n: w.rank(),
        doubled: w.doubled().to_vec(),
    }
}

/// JSON form of a tensor element.
pub fn tensor_json(t: &TensorElement) -> TensorJson {
    TensorJson {
        n: t.rank(),
        factors: t.factors().iter().map(SpinorElement::signs).collect(),
    }
}

/// JSON form of a weight sequence.
pub fn seq_json(s: &WeightSequence) -> SeqJson {
    SeqJson {
        n: s.rank(),
        mus: s.mus().iter().map(|m| m.doubled().to_vec()).collect(),
    }
}

/// JSON form of a cell diagram.
pub fn cells_json(d: &CellDiagram) -> CellDiagramJson {
    CellDiagramJson {
        n: d.rank(),
        big_n: d.big_n(),
        l: d.l().to_vec(),
        r: d.r().to_vec(),
    }
}

/// JSON form of a short Young diagram.
pub fn shape_json(s: &ShortYoungDiagram) -> ShapeJson {
    ShapeJson {
        n: s.rank(),
        big_n: s.big_n(),
        cols: s.cols().to_vec(),
    }
}

/// JSON form of a tableau.
pub fn sssyt_json(x: &Sssyt) -> SssytJson {
    SssytJson {
        n: x.rank(),
        big_n: x.big_n(),
        rows: x.fill(),
    }
}

/// JSON form of a triple.
pub fn triple_json(tr: &AdmissibleTriple) -> TripleJson {
    TripleJson {
        n: tr.gamma().rank(),
        gamma: tr.gamma().doubled().to_vec(),
        mu_a: tr.mu_a().doubled().to_vec(),
        mu_b: tr.mu_b().doubled().to_vec(),
    }
}

fn weight_of(n: usize, doubled: Vec<i32>) -> ToolResult<Weight> {
    if doubled.len() != n {
        return Err(ToolError::Usage(format!(
            "weight has {} coordinates but n = {n}",
            doubled.len()
        )));
    }
    Ok(Weight::from_doubled(doubled)?)
}

impl WeightJson {
    /// Decodes into an engine weight.
    pub fn decode(self) -> ToolResult<Weight> {
        weight_of(self.n, self.doubled)
    }
}

impl TensorJson {
    /// Decodes into an engine tensor element.
    pub fn decode(self) -> ToolResult<TensorElement> {
        let factors = self
            .factors
            .iter()
            .map(|s| {
                let b = SpinorElement::from_signs(s)?;
                if b.rank() != self.n {
                    return Err(ToolError::Usage(format!("factor {s:?} does not have rank {}", self.n)));
                }
                Ok(b)
            })
            .collect::<ToolResult<Vec<_>>>()?;
        Ok(TensorElement::new(factors)?)
    }
}

impl SeqJson {
    /// Decodes into an engine weight sequence.
    pub fn decode(self) -> ToolResult<WeightSequence> {
        let n = self.n;
        let mus = self
            .mus
            .into_iter()
            .map(|m| weight_of(n, m))
            .collect::<ToolResult<Vec<_>>>()?;
        Ok(WeightSequence::new(n, mus)?)
    }
}

impl CellDiagramJson {
    /// Decodes into an engine cell diagram.
    pub fn decode(self) -> ToolResult<CellDiagram> {
        Ok(CellDiagram::new(self.n, self.big_n, self.l, self.r)?)
    }
}

impl ShapeJson {
    /// Decodes into an engine short Young diagram.
    pub fn decode(self) -> ToolResult<ShortYoungDiagram> {
        Ok(ShortYoungDiagram::new(self.n, self.big_n, self.cols)?)
    }
}

impl SssytJson {
    /// Decodes into an engine tableau.
    pub fn decode(self) -> ToolResult<Sssyt> {
        Ok(Sssyt::from_fill(self.n, self.big_n, &self.rows)?)
    }
}

impl TripleJson {
    /// Decodes into an engine admissible triple.
    pub fn decode(self) -> ToolResult<AdmissibleTriple> {
        let n = self.n;
        Ok(AdmissibleTriple::new(
            weight_of(n, self.gamma)?,
            weight_of(n, self.mu_a)?,
            weight_of(n, self.mu_b)?,
        )?)
    }
}

/// Recognizes the kind of a JSON value from its shape and keys.
pub fn detect_kind(v: &Value) -> ToolResult<Kind> {
    let kind = match v {
        Value::Array(_) => Kind::Celltab,
        Value::Object(map) => {
            let has = |k: &str| map.contains_key(k);
            if has("doubled") {
                Kind::Weight
            } else if has("factors") {
                Kind::Tensor
            } else if has("mus") {
                Kind::Seq
            } else if has("l") || has("r") {
                Kind::Cells
            } else if has("cols") {
                Kind::Shape
            } else if has("rows") {
                Kind::Sssyt
            } else if has("gamma") {
                Kind::Triple
            } else {
                return Err(ToolError::Usage("unrecognized JSON object".into()));
            }
        }
        _ => return Err(ToolError::Usage("input must be a JSON object or array".into())),
    };
    Ok(kind)
}

/// Decodes a JSON value as the given kind.
pub fn decode_as(v: Value, kind: Kind) -> ToolResult<Item> {
    let item = match kind {
        Kind::Weight => Item::Weight(serde_json::from_value::<WeightJson>(v)?.decode()?),
        Kind::Tensor => Item::Tensor(serde_json::from_value::<TensorJson>(v)?.decode()?),
        Kind::Seq => Item::Seq(serde_json::from_value::<SeqJson>(v)?.decode()?),
        Kind::Cells => Item::Cells(serde_json::from_value::<CellDiagramJson>(v)?.decode()?),
        Kind::Celltab => {
            let steps = serde_json::from_value::<Vec<CellDiagramJson>>(v)?
                .into_iter()
                .map(CellDiagramJson::decode)
                .collect::<ToolResult<Vec<_>>>()?;
            Item::Celltab(CellTableau::new(steps)?)
        }
        Kind::Shape => Item::Shape(serde_json::from_value::<ShapeJson>(v)?.decode()?),
        Kind::Sssyt => Item::Sssyt(serde_json::from_value::<SssytJson>(v)?.decode()?),
        Kind::Triple => Item::Triple(serde_json::from_value::<TripleJson>(v)?.decode()?),
    };
    Ok(item)
}

/// Parses JSON text and decodes it as its detected kind.
pub fn parse_item(text: &str) -> ToolResult<Item> {
    let v: Value = serde_json::from_str(text)?;
    let kind = detect_kind(&v)?;
    decode_as(v, kind)
}

/// Parses JSON text that must be of the given kind.
pub fn parse_as(text: &str, kind: Kind) -> ToolResult<Item> {
    let v: Value = serde_json::from_str(text)?;
    let found = detect_kind(&v)?;
    if found != kind {
        return Err(ToolError::Usage(format!(
            "expected a {} input, found a {}",
            kind.name(),
            found.name()
        )));
    }
    decode_as(v, kind)
}

/// The weight sequence behind any encoding of an element of `T^N`.
pub fn element_to_seq(item: &Item) -> ToolResult<WeightSequence> {
    let seq = match item {
        Item::Seq(s) => s.clone(),
        Item::Tensor(t) => decomp::tensor_to_seq(t)?,
        Item::Celltab(ct) => shapes::i_inv(ct)?,
        Item::Sssyt(x) => shapes::sssyt_to_seq(x)?,
        other => {
            return Err(ToolError::Usage(format!(
                "expected an element (tensor, seq, celltab or sssyt), found a {}",
                other.kind().name()
            )))
        }
    };
    seq.validate()?;
    Ok(seq)
}

/// Encodes an element of `T^N` as the given element kind.
pub fn seq_to_kind(seq: &WeightSequence, kind: Kind) -> ToolResult<Item> {
    let item = match kind {
        Kind::Seq => {
            seq.validate()?;
            Item::Seq(seq.clone())
        }
        Kind::Tensor => Item::Tensor(decomp::seq_to_tensor(seq)?),
        Kind::Celltab => Item::Celltab(shapes::i_map(seq)?),
        Kind::Sssyt => Item::Sssyt(shapes::seq_to_sssyt(seq)?),
        other => {
            return Err(ToolError::Usage(format!(
                "cannot encode an element as a {}",
                other.name()
            )))
        }
    };
    Ok(item)
}

/// The dominant weight behind any encoding of a component label.
pub fn label_to_weight(item: &Item) -> ToolResult<(Weight, usize)> {
    match item {
        Item::Weight(_) => Err(ToolError::Usage("a weight needs --N to become a diagram".into())),
        Item::Cells(d) => Ok((shapes::kappa_inv(d), d.big_n())),
        Item::Shape(s) => Ok((shapes::kappa_inv(&shapes::f_inv(s)?), s.big_n())),
        other => Err(ToolError::Usage(format!(
            "expected a label (weight, cells or shape), found a {}",
            other.kind().name()
        ))),
    }
}

/// Converts between encodings of the same object.
///
/// Elements convert among tensor, seq, celltab and sssyt. Labels convert among
/// weight, cells and shape; leaving `weight` requires `big_n`.
pub fn convert(item: &Item, to: Kind, big_n: Option<usize>) -> ToolResult<Item> {
    let from = item.kind();
    if from == to {
        return Ok(item.clone());
    }
    if from.is_element() && to.is_element() {
        return seq_to_kind(&element_to_seq(item)?, to);
    }
    if from.is_label() && to.is_label() {
        let (lambda, n_big) = match item {
            Item::Weight(w) => {
                let n_big = big_n.ok_or_else(|| ToolError::Usage("converting a weight needs --N".into()))?;
                (w.clone(), n_big)
            }
            _ => label_to_weight(item)?,
        };
        let out = match to {
            Kind::Weight => Item::Weight(lambda),
            Kind::Cells => Item::Cells(shapes::kappa(&lambda, n_big)?),
            _ => Item::Shape(shapes::f_map(&shapes::kappa(&lambda, n_big)?)?),
        };
        return Ok(out);
    }
    Err(ToolError::Usage(format!(
        "no conversion from {} to {}",
        from.name(),
        to.name()
    )))
}
