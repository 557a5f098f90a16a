//! The `spincactus` command line.
//!
//! Exit status: 0 on success, 1 when a verification suite finds a failure,
//! 2 for invalid flags or inputs.

use std::ffi::OsString;
use std::io::{Read, Write};
use std::path::{Path, PathBuf};

use clap::{Parser, Subcommand, ValueEnum};
use serde::Serialize;
use spincactus::action::{self, AdmissibleTriple, TripleType};
use spincactus::cactus::{self, CactusWord};
use spincactus::decomp::{self, DEFAULT_ENUM_LIMIT};
use spincactus::shapes;

use crate::error::{ToolError, ToolResult};
use crate::formats::{self, Item, Kind, ShapeJson, WeightJson};
use crate::suites::{self, Suite};

/// Environment variable that supplies `--limit` when the flag is absent.
pub const LIMIT_ENV: &str = "SPINCACTUS_LIMIT";

/// Exit status for success.
pub const EXIT_OK: i32 = 0;
/// Exit status for a failed verification.
pub const EXIT_FAILED: i32 = 1;
/// Exit status for invalid flags or inputs.
pub const EXIT_USAGE: i32 = 2;

#[derive(Debug, Parser)]
#[command(
    name = "spincactus",
    version,
    about = "Cactus group action on highest-weight elements of spinor tensor powers"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

/// Encodings accepted by `enumerate --as`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum ElementKind {
    Seq,
    Tensor,
    Celltab,
    Sssyt,
}

impl From<ElementKind> for Kind {
    fn from(k: ElementKind) -> Kind {
        match k {
            ElementKind::Seq => Kind::Seq,
            ElementKind::Tensor => Kind::Tensor,
            ElementKind::Celltab => Kind::Celltab,
            ElementKind::Sssyt => Kind::Sssyt,
        }
    }
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Lists T^N, or T_λ^N for one component, one JSON document per line.
    Enumerate {
        /// Rank n.
        #[arg(long)]
        n: Option<usize>,
        /// Length N.
        #[arg(long = "N", value_name = "N")]
        big_n: Option<usize>,
        /// A short Young diagram file selecting the component.
        #[arg(long, conflicts_with = "lambda")]
        shape: Option<PathBuf>,
        /// A weight file selecting the component.
        #[arg(long)]
        lambda: Option<PathBuf>,
        /// Output encoding.
        #[arg(long = "as", value_enum, default_value = "seq")]
        as_kind: ElementKind,
        /// Bound on n*N.
        #[arg(long, env = LIMIT_ENV)]
        limit: Option<usize>,
    },
    /// Applies one generator or a cactus word to an element.
    Act {
        /// A single generator, `t3` or `s1,4`.
        #[arg(long, conflicts_with = "word", required_unless_present = "word")]
        gen: Option<String>,
        /// A whitespace-separated word; the rightmost generator acts first.
        #[arg(long)]
        word: Option<String>,
        /// Input file, `-` for standard input.
        #[arg(long = "in", value_name = "FILE")]
        input: PathBuf,
    },
    /// Lists the orbit of an element under the generators t_i, i in the list.
    Orbit {
        /// Comma-separated generator indices.
        #[arg(long, value_delimiter = ',', required = true)]
        gens: Vec<usize>,
        /// Input file, `-` for standard input.
        #[arg(long = "in", value_name = "FILE")]
        input: PathBuf,
    },
    /// Prints the type of the triple at positions (i, i+1) and its free intervals.
    Classify {
        /// Generator index; not needed for triple inputs.
        #[arg(long)]
        i: Option<usize>,
        /// Input file, `-` for standard input.
        #[arg(long = "in", value_name = "FILE")]
        input: PathBuf,
    },
    /// Runs a verification suite and prints its JSON-lines report.
    Verify {
        /// Suite name.
        #[arg(long, value_enum)]
        suite: Suite,
        /// Rank n.
        #[arg(long)]
        n: usize,
        /// Length N.
        #[arg(long = "N", value_name = "N")]
        big_n: usize,
        /// Bound on n*N.
        #[arg(long, env = LIMIT_ENV)]
        limit: Option<usize>,
    },
    /// Draws a cell diagram, cell tableau or tableau as text.
    Render {
        /// Input file, `-` for standard input.
        #[arg(long = "in", value_name = "FILE")]
        input: PathBuf,
    },
    /// Converts between encodings of the same element or label.
    Convert {
        /// Input encoding.
        #[arg(long, value_enum)]
        from: Kind,
        /// Output encoding.
        #[arg(long, value_enum)]
        to: Kind,
        /// Input file, `-` for standard input.
        #[arg(long = "in", value_name = "FILE")]
        input: PathBuf,
        /// Length N, needed when converting a weight to a diagram.
        #[arg(long = "N", value_name = "N")]
        big_n: Option<usize>,
    },
}

/// Parses `args` (including the program name), runs the command and returns the exit status.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_USAGE } else { EXIT_OK };
            let text = e.render().to_string();
            if e.use_stderr() {
                let _ = err.write_all(text.as_bytes());
            } else {
                let _ = out.write_all(text.as_bytes());
            }
            return code;
        }
    };
    match execute(cli.command, out) {
        Ok(code) => code,
        Err(ToolError::Output(e)) if e.kind() == std::io::ErrorKind::BrokenPipe => EXIT_OK,
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            EXIT_USAGE
        }
    }
}

fn read_input(path: &Path) -> ToolResult<String> {
    let io_err = |source| ToolError::Io {
        path: path.display().to_string(),
        source,
    };
    if path.as_os_str() == "-" {
        let mut text = String::new();
        std::io::stdin().read_to_string(&mut text).map_err(io_err)?;
        Ok(text)
    } else {
        std::fs::read_to_string(path).map_err(io_err)
    }
}

fn emit(out: &mut dyn Write, line: &str) -> ToolResult<()> {
    writeln!(out, "{line}").map_err(ToolError::Output)
}

fn execute(command: Command, out: &mut dyn Write) -> ToolResult<i32> {
    match command {
        Command::Enumerate {
            n,
            big_n,
            shape,
            lambda,
            as_kind,
            limit,
        } => enumerate(n, big_n, shape, lambda, as_kind.into(), limit, out),
        Command::Act { gen, word, input } => {
            let item = formats::parse_item(&read_input(&input)?)?;
            let (text, single) = match (gen, word) {
                (Some(g), _) => (g, true),
                (None, Some(w)) => (w, false),
                (None, None) => return Err(ToolError::Usage("one of --gen or --word is required".into())),
            };
            let result = act(&item, &text, single)?;
            emit(out, &result.to_json())?;
            Ok(EXIT_OK)
        }
        Command::Orbit { gens, input } => {
            let item = formats::parse_item(&read_input(&input)?)?;
            let seq = formats::element_to_seq(&item)?;
            let start = shapes::seq_to_sssyt(&seq)?;
            for x in action::orbit(&start, &gens)? {
                let back = formats::seq_to_kind(&shapes::sssyt_to_seq(&x)?, item.kind())?;
                emit(out, &back.to_json())?;
            }
            Ok(EXIT_OK)
        }
        Command::Classify { i, input } => {
            let item = formats::parse_item(&read_input(&input)?)?;
            let report = classify(&item, i)?;
            emit(out, &serde_json::to_string(&report)?)?;
            Ok(EXIT_OK)
        }
        Command::Verify { suite, n, big_n, limit } => {
            let limit = limit.unwrap_or(suite.default_limit());
            let report = suites::run_suite(suite, n, big_n, limit)?;
            for record in report.records() {
                emit(out, &serde_json::to_string(&record)?)?;
            }
            Ok(if report.all_passed() { EXIT_OK } else { EXIT_FAILED })
        }
        Command::Render { input } => {
            let item = formats::parse_item(&read_input(&input)?)?;
            let text = render(&item)?;
            out.write_all(text.as_bytes()).map_err(ToolError::Output)?;
            Ok(EXIT_OK)
        }
        Command::Convert { from, to, input, big_n } => {
            let item = formats::parse_as(&read_input(&input)?, from)?;
            emit(out, &formats::convert(&item, to, big_n)?.to_json())?;
            Ok(EXIT_OK)
        }
    }
}

fn agree(flag: Option<usize>, found: usize, name: &str) -> ToolResult<()> {
    match flag {
        Some(v) if v != found => Err(ToolError::Usage(format!(
            "--{name} {v} disagrees with the input file ({found})"
        ))),
        _ => Ok(()),
    }
}

fn enumerate(
    n: Option<usize>,
    big_n: Option<usize>,
    shape: Option<PathBuf>,
    lambda: Option<PathBuf>,
    kind: Kind,
    limit: Option<usize>,
    out: &mut dyn Write,
) -> ToolResult<i32> {
    let limit = limit.unwrap_or(DEFAULT_ENUM_LIMIT);
    let seqs = if let Some(path) = shape {
        let nu = serde_json::from_str::<ShapeJson>(&read_input(&path)?)?.decode()?;
        agree(n, nu.rank(), "n")?;
        agree(big_n, nu.big_n(), "N")?;
        let lambda = shapes::shape_weight(&nu)?;
        decomp::enumerate_t_lambda(&lambda, nu.big_n(), limit)?
    } else if let Some(path) = lambda {
        let lambda = serde_json::from_str::<WeightJson>(&read_input(&path)?)?.decode()?;
        agree(n, lambda.rank(), "n")?;
        let big_n = big_n.ok_or_else(|| ToolError::Usage("--lambda needs --N".into()))?;
        decomp::enumerate_t_lambda(&lambda, big_n, limit)?
    } else {
        let (Some(n), Some(big_n)) = (n, big_n) else {
            return Err(ToolError::Usage(
                "enumerate needs --n and --N, or a --shape file".into(),
            ));
        };
        decomp::enumerate_t(n, big_n, limit)?
    };
    for seq in &seqs {
        emit(out, &formats::seq_to_kind(seq, kind)?.to_json())?;
    }
    Ok(EXIT_OK)
}

/// Applies a generator or word to an element, returning it in the input encoding.
pub fn act(item: &Item, text: &str, single: bool) -> ToolResult<Item> {
    let seq = formats::element_to_seq(item)?;
    let word = CactusWord::parse(seq.len(), text)?;
    if single && word.gens().len() != 1 {
        return Err(ToolError::Usage(format!("--gen expects one generator, got {:?}", text)));
    }
    let result = match item {
        Item::Sssyt(x) => Item::Sssyt(cactus::apply_word(&word, x)?),
        _ => {
            let moved = cactus::apply_word_with(&word, &seq, action::tau_seq)?;
            formats::seq_to_kind(&moved, item.kind())?
        }
    };
    Ok(result)
}

/// One free interval in the `classify` output.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct IntervalReport {
    /// First index.
    pub min: usize,
    /// Last index.
    pub max: usize,
    /// Number of indices where the second weight is negative.
    pub neg: usize,
    /// Number of indices where the second weight is positive.
    pub pos: usize,
}

/// The `classify` output.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ClassifyReport {
    /// `Type0`, `Type1` or `Type2`.
    #[serde(rename = "type")]
    pub kind: String,
    /// The free intervals in increasing order.
    pub free_intervals: Vec<IntervalReport>,
    /// The type read from the tableau, for element inputs.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub tableau_type: Option<String>,
}

fn type_name(t: TripleType) -> String {
    format!("{t:?}")
}

/// Classifies a triple, or the triple at `(i, i + 1)` of an element.
pub fn classify(item: &Item, i: Option<usize>) -> ToolResult<ClassifyReport> {
    let (triple, tableau_type) = match item {
        Item::Triple(tr) => (tr.clone(), None),
        _ => {
            let i = i.ok_or_else(|| ToolError::Usage("classify needs --i for element inputs".into()))?;
            let seq = formats::element_to_seq(item)?;
            let tr = AdmissibleTriple::from_sequence(&seq, i)?;
            let tab = action::tableau_type(&shapes::seq_to_sssyt(&seq)?, i)?;
            (tr, Some(type_name(tab)))
        }
    };
    let free_intervals = action::free_intervals(&triple)
        .iter()
        .map(|fr| IntervalReport {
            min: fr.min(),
            max: fr.max(),
            neg: fr.neg_count(),
            pos: fr.pos_count(),
        })
        .collect();
    Ok(ClassifyReport {
        kind: type_name(action::classify(&triple)),
        free_intervals,
        tableau_type,
    })
}

/// Text drawing of a cell diagram, cell tableau or tableau.
pub fn render(item: &Item) -> ToolResult<String> {
    match item {
        Item::Cells(d) => Ok(shapes::render_cell_diagram(d)),
        Item::Celltab(ct) => Ok(shapes::render_cell_tableau(ct)),
        Item::Sssyt(x) => Ok(shapes::render_sssyt(x)),
        other => Err(ToolError::Usage(format!(
            "render accepts cells, celltab or sssyt, found a {}",
            other.kind().name()
        ))),
    }
}
