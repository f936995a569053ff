//! The `gmk` command line. Exit status: 0 for success or a positive verdict,
//! 1 for a negative verdict, 2 for usage and input errors.

use std::ffi::OsString;
use std::fs;
use std::io::Write;
use std::num::NonZeroU32;
use std::path::{Path, PathBuf};

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::{Deserialize, Serialize};

use crate::bitmatrix::{BitMatrix, MatrixRecord};
use crate::braid::{BraidRecord, Permutation};
use crate::gauss::{ChordDiagram, CodeRecord, GaussCode};
use crate::limits::Limits;
use crate::meander::{
    canonical_visitation, collect_meander_matrices, encode_meander, is_meander_matrix,
    oracle_enumerate_meanders, reconstruct_meander, MeanderReconstruction, MeanderRecord,
};
use crate::realize::{
    audit, matrix_conditions, oracle_realizable, theorem34_realizable_with, ConditionViolation,
    IsolatedChords, OracleVerdict, RealizabilityReport,
};
use crate::render::{render_chord_diagram, render_meander, RenderSpec};

#[derive(Parser, Debug)]
#[command(
    name = "gmk",
    version,
    about = "Gauss diagrams, planar realizability and meander matrices"
)]
pub struct Cli {
    /// Print machine-readable JSON instead of text.
    #[arg(long, global = true)]
    json: bool,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Decide whether a Gauss code is drawn by a planar closed curve.
    Check {
        code: String,
        #[arg(long, value_enum, default_value_t = CheckMethod::Thm34)]
        method: CheckMethod,
        /// Reject chords that cross nothing instead of deleting them.
        #[arg(long)]
        strict: bool,
    },
    /// Compare the smoothing criterion with the face-counting oracle on every code.
    Audit {
        #[arg(long, default_value_t = 2)]
        min_n: usize,
        #[arg(long, default_value_t = 6)]
        max_n: usize,
    },
    /// Conway smoothing of one chord.
    Smooth { code: String, chord: String },
    /// Interlacement matrix of a code (or of a matrix file) and its parity conditions.
    Matrix {
        code: Option<String>,
        #[arg(long, conflicts_with = "code")]
        file: Option<PathBuf>,
    },
    /// Inversion set and non-repeating braid word of a permutation.
    Braid {
        /// Images π(1),...,π(n), e.g. 4,2,6,1,5,3
        permutation: String,
    },
    /// Test whether a matrix file is a meander matrix.
    IsMeanderMatrix { file: PathBuf },
    /// Enumerate meander matrices with N crossings as JSON lines.
    Meanders {
        n: usize,
        #[arg(long)]
        count_only: bool,
        /// Use the direct search instead of the tableau construction.
        #[arg(long)]
        oracle: bool,
        /// Forced start of the visitation order, e.g. 5,2,3
        #[arg(long, value_delimiter = ',')]
        prefix: Vec<usize>,
        /// Keep one visitation per symmetry class.
        #[arg(long)]
        canonical: bool,
    },
    /// Recover the meander described by a matrix file.
    Reconstruct { file: PathBuf },
    /// Draw a chord diagram or a meander as SVG.
    Render(RenderArgs),
}

#[derive(Args, Debug)]
struct RenderArgs {
    #[command(subcommand)]
    what: RenderWhat,
    /// Write the SVG here instead of standard output.
    #[arg(long, short, global = true)]
    output: Option<PathBuf>,
    #[arg(long, global = true)]
    width: Option<NonZeroU32>,
    #[arg(long, global = true)]
    height: Option<NonZeroU32>,
}

#[derive(Subcommand, Debug)]
enum RenderWhat {
    Chord {
        code: String,
    },
    Meander {
        /// Matrix or meander record file.
        file: Option<PathBuf>,
        #[arg(long, value_delimiter = ',', conflicts_with = "file")]
        visitation: Vec<usize>,
    },
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum CheckMethod {
    Thm34,
    Oracle,
    Both,
}

/// A matrix file: either `{"size", "rows"}` or a meander record.
#[derive(Deserialize)]
#[serde(untagged)]
enum MatrixInput {
    Plain(MatrixRecord),
    Meander(MeanderRecord),
}

/// `check --json` record.
#[derive(Debug, Serialize, Deserialize, PartialEq)]
pub struct CheckOutput {
    pub code: String,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub report: Option<RealizabilityReport>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub oracle: Option<OracleVerdict>,
}

/// `smooth --json` record.
#[derive(Debug, Serialize, Deserialize, PartialEq)]
pub struct SmoothOutput {
    pub code: CodeRecord,
    pub chord: String,
    pub smoothed: CodeRecord,
    pub routes_agree: bool,
}

/// `matrix --json` record: the matrix schema plus row labels and violations.
#[derive(Debug, Serialize, Deserialize, PartialEq)]
pub struct MatrixOutput {
    #[serde(flatten)]
    pub matrix: MatrixRecord,
    pub labels: Vec<String>,
    pub violations: Vec<ConditionViolation>,
}

struct Failure(String);

impl<E: std::fmt::Display> From<E> for Failure {
    fn from(e: E) -> Self {
        Failure(e.to_string())
    }
}

type Outcome = Result<bool, Failure>;

/// Runs the command line and returns the exit status.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            let text = e.render().to_string();
            let _ = if code == 0 {
                write!(out, "{text}")
            } else {
                write!(err, "{text}")
            };
            return code;
        }
    };
    match dispatch(&cli, out) {
        Ok(true) => 0,
        Ok(false) => 1,
        Err(Failure(msg)) => {
            let _ = writeln!(err, "error: {msg}");
            2
        }
    }
}

fn dispatch(cli: &Cli, out: &mut dyn Write) -> Outcome {
    let json = cli.json;
    match &cli.command {
        Command::Check {
            code,
            method,
            strict,
        } => check(code, *method, *strict, json, out),
        Command::Audit { min_n, max_n } => run_audit(*min_n, *max_n, json, out),
        Command::Smooth { code, chord } => smooth(code, chord, json, out),
        Command::Matrix { code, file } => matrix(code.as_deref(), file.as_deref(), json, out),
        Command::Braid { permutation } => braid(permutation, json, out),
        Command::IsMeanderMatrix { file } => meander_check(file, json, out),
        Command::Meanders {
            n,
            count_only,
            oracle,
            prefix,
            canonical,
        } => meanders(*n, *count_only, *oracle, prefix, *canonical, out),
        Command::Reconstruct { file } => reconstruct(file, json, out),
        Command::Render(args) => render(args, out),
    }
}

fn parse_code(text: &str) -> Result<ChordDiagram, Failure> {
    let code = GaussCode::parse(text)
        .map_err(|e| Failure(format!("{e}; give a double-occurrence word such as abab")))?;
    Ok(ChordDiagram::new(code)?)
}

fn read_matrix(path: &Path) -> Result<BitMatrix, Failure> {
    let text = fs::read_to_string(path)
        .map_err(|e| Failure(format!("cannot read {}: {e}", path.display())))?;
    let input: MatrixInput = serde_json::from_str(&text).map_err(|e| {
        Failure(format!(
            "{}: {e}; expected {{\"size\": k, \"rows\": [[0,1,...],...]}}",
            path.display()
        ))
    })?;
    Ok(match input {
        MatrixInput::Plain(r) => BitMatrix::try_from(&r)?,
        MatrixInput::Meander(r) => r.matrix()?,
    })
}

fn line(out: &mut dyn Write, text: impl std::fmt::Display) -> Result<(), Failure> {
    writeln!(out, "{text}").map_err(Failure::from)
}

fn oracle_text(v: &OracleVerdict) -> String {
    format!("{} (genus {})", v.verdict(), v.genus)
}

fn check(
    code: &str,
    method: CheckMethod,
    strict: bool,
    json: bool,
    out: &mut dyn Write,
) -> Outcome {
    let d = parse_code(code)?;
    let isolated = if strict {
        IsolatedChords::Reject
    } else {
        IsolatedChords::Delete
    };
    let thm = |d: &ChordDiagram| -> Result<RealizabilityReport, Failure> {
        theorem34_realizable_with(d, isolated).map_err(|e| {
            Failure(format!(
                "{e}; drop --strict to delete chords that cross nothing"
            ))
        })
    };
    let oracle = |d: &ChordDiagram| -> Result<OracleVerdict, Failure> {
        oracle_realizable(d.code())
            .map_err(|e| Failure(format!("{e}; raise GMK_MAX_N to allow larger codes")))
    };
    let code_text = d.code().to_string();
    match method {
        CheckMethod::Thm34 => {
            let r = thm(&d)?;
            if json {
                line(
                    out,
                    serde_json::to_string(&CheckOutput {
                        code: code_text,
                        report: Some(r.clone()),
                        oracle: None,
                    })?,
                )?;
            } else {
                line(out, &r)?;
            }
            Ok(r.is_realizable())
        }
        CheckMethod::Oracle => {
            let v = oracle(&d)?;
            if json {
                line(
                    out,
                    serde_json::to_string(&CheckOutput {
                        code: code_text,
                        report: None,
                        oracle: Some(v),
                    })?,
                )?;
            } else {
                line(out, oracle_text(&v))?;
            }
            Ok(v.realizable)
        }
        CheckMethod::Both => {
            let r = thm(&d)?;
            let v = oracle(&d)?;
            if json {
                line(
                    out,
                    serde_json::to_string(&CheckOutput {
                        code: code_text,
                        report: Some(r.clone()),
                        oracle: Some(v),
                    })?,
                )?;
            } else {
                line(out, format!("thm34: {r}"))?;
                line(out, format!("oracle: {}", oracle_text(&v)))?;
                if r.is_realizable() != v.realizable {
                    line(out, "the two methods disagree")?;
                }
            }
            Ok(v.realizable)
        }
    }
}

fn run_audit(min_n: usize, max_n: usize, json: bool, out: &mut dyn Write) -> Outcome {
    let limits = Limits::from_env();
    let summary = audit(min_n, max_n, &limits)
        .map_err(|e| Failure(format!("{e}; lower --max-n or raise GMK_MAX_N")))?;
    if json {
        for rec in &summary.disagreements {
            line(out, serde_json::to_string(rec)?)?;
        }
    } else {
        for (n, count) in &summary.checked {
            line(out, format!("n = {n}: {count} codes checked"))?;
        }
        match summary.minimal_counterexample() {
            None => line(
                out,
                format!("no disagreements in {} codes", summary.total_checked()),
            )?,
            Some(rec) => {
                line(
                    out,
                    format!("{} disagreements", summary.disagreements.len()),
                )?;
                line(
                    out,
                    format!(
                        "minimal counterexample: {} (thm34 {}, oracle {})",
                        rec.code, rec.thm34, rec.oracle
                    ),
                )?;
            }
        }
    }
    Ok(summary.disagreements.is_empty())
}

fn smooth(code: &str, chord: &str, json: bool, out: &mut dyn Write) -> Outcome {
    let d = parse_code(code)?;
    let c = d.chord(chord)?;
    let smoothed = d.smooth_index(c)?;
    let toggled = d.smoothed_interlacement(c)?;
    let agree = smoothed
        .interlacement_for_labels(&d.labels_without(c))
        .as_ref()
        == Some(&toggled);
    if json {
        let record = SmoothOutput {
            code: d.code().to_record(),
            chord: chord.to_string(),
            smoothed: smoothed.code().to_record(),
            routes_agree: agree,
        };
        line(out, serde_json::to_string(&record)?)?;
    } else {
        line(out, smoothed.code())?;
        if !agree {
            line(out, "word rewrite and interlacement toggle disagree")?;
        }
    }
    Ok(agree)
}

fn matrix(code: Option<&str>, file: Option<&Path>, json: bool, out: &mut dyn Write) -> Outcome {
    let (m, labels) = match (code, file) {
        (Some(code), None) => {
            let d = parse_code(code)?;
            (d.interlacement_matrix(), d.code().labels().to_vec())
        }
        (None, Some(path)) => {
            let m = read_matrix(path)?;
            let labels = (0..m.size()).map(|i| i.to_string()).collect();
            (m, labels)
        }
        _ => {
            return Err(Failure(
                "give either a Gauss code or --file <matrix.json>".to_string(),
            ))
        }
    };
    let conditions = matrix_conditions(&m)?;
    if json {
        let record = MatrixOutput {
            matrix: MatrixRecord::from(&m),
            labels,
            violations: conditions.violations.clone(),
        };
        line(out, serde_json::to_string(&record)?)?;
    } else {
        line(out, format!("rows: {}", labels.join(" ")))?;
        write!(out, "{m}")?;
        if conditions.holds() {
            line(out, "conditions (1)-(3) hold")?;
        }
        for v in &conditions.violations {
            line(out, v)?;
        }
    }
    Ok(conditions.holds())
}

fn braid(text: &str, json: bool, out: &mut dyn Write) -> Outcome {
    let pi = Permutation::parse(text)
        .map_err(|e| Failure(format!("{e}; give images as a comma list such as 2,1,3")))?;
    let rec = BraidRecord::new(&pi);
    if json {
        line(out, serde_json::to_string(&rec)?)?;
    } else {
        let pairs: Vec<String> = rec
            .inversions
            .iter()
            .map(|(i, j)| format!("({i},{j})"))
            .collect();
        line(out, format!("R = {{{}}}", pairs.join(",")))?;
        line(out, format!("word: {}", rec.word))?;
    }
    Ok(true)
}

fn meander_check(path: &Path, json: bool, out: &mut dyn Write) -> Outcome {
    let m = read_matrix(path)?;
    let check = is_meander_matrix(&m)?;
    if json {
        line(out, serde_json::to_string(&check)?)?;
    } else if check.holds() {
        line(out, "true")?;
    } else {
        let reasons: Vec<String> = check.definition.iter().map(|v| v.to_string()).collect();
        line(out, format!("false: {}", reasons.join("; ")))?;
    }
    Ok(check.holds())
}

fn meanders(
    n: usize,
    count_only: bool,
    oracle: bool,
    prefix: &[usize],
    canonical: bool,
    out: &mut dyn Write,
) -> Outcome {
    let found: Vec<(BitMatrix, MeanderReconstruction)> = if oracle {
        oracle_enumerate_meanders(n)
            .map_err(|e| Failure(format!("{e}; raise GMK_MAX_N for larger searches")))?
            .into_iter()
            .filter(|rec| rec.visitation().starts_with(prefix))
            .filter(|rec| !canonical || canonical_visitation(rec.visitation()) == rec.visitation())
            .map(|rec| (encode_meander(&rec), rec))
            .collect()
    } else {
        collect_meander_matrices(n, prefix, canonical)?
            .into_iter()
            .map(|e| {
                (
                    e.matrix,
                    MeanderReconstruction::from_visitation(e.visitation),
                )
            })
            .collect()
    };
    if count_only {
        line(out, found.len())?;
    } else {
        for (m, rec) in &found {
            line(out, serde_json::to_string(&MeanderRecord::new(m, rec))?)?;
        }
    }
    Ok(true)
}

fn reconstruct(path: &Path, json: bool, out: &mut dyn Write) -> Outcome {
    let m = read_matrix(path)?;
    let rec = reconstruct_meander(&m)?;
    if json {
        line(out, serde_json::to_string(&MeanderRecord::new(&m, &rec))?)?;
    } else {
        let w: Vec<String> = rec.visitation().iter().map(usize::to_string).collect();
        line(out, format!("visitation: {}", w.join(" ")))?;
        line(out, format!("code: {}", rec.gauss_code().spaced()))?;
        line(out, format!("upper: {:?}", rec.upper()))?;
        line(out, format!("lower: {:?}", rec.lower()))?;
    }
    Ok(true)
}

fn render(args: &RenderArgs, out: &mut dyn Write) -> Outcome {
    let sized = |spec: RenderSpec| {
        let (w, h) = (
            args.width.unwrap_or(spec.width),
            args.height.unwrap_or(spec.height),
        );
        spec.with_size(w, h)
    };
    let svg = match &args.what {
        RenderWhat::Chord { code } => {
            render_chord_diagram(&parse_code(code)?, &sized(RenderSpec::chord_diagram()))
        }
        RenderWhat::Meander { file, visitation } => {
            let rec = match file {
                Some(path) => reconstruct_meander(&read_matrix(path)?)?,
                None if !visitation.is_empty() => {
                    let rec = MeanderReconstruction::from_visitation(visitation.clone());
                    rec.verify(Limits::from_env().meander_oracle + 1)
                        .map_err(|e| {
                            Failure(format!(
                                "{e}; the visitation must describe a closed meander"
                            ))
                        })?;
                    rec
                }
                None => return Err(Failure("give a matrix file or --visitation".to_string())),
            };
            render_meander(&rec, &sized(RenderSpec::meander()))
        }
    };
    match &args.output {
        Some(path) => fs::write(path, svg)
            .map_err(|e| Failure(format!("cannot write {}: {e}", path.display())))?,
        None => out.write_all(svg.as_bytes())?,
    }
    Ok(true)
}
