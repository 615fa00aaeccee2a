use std::path::{Path, PathBuf};
use std::process::ExitCode;
use std::time::Duration;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

use satdom::covers::{triangular_cover, x_exact, x_triangular_value};
use satdom::domgraph::{
    adjacency_graph, gamma_exact, gamma_rect_dp, gamma_rect_dp_witness, star_partition,
    DominatingSet, SolverOptions, DEFAULT_BUDGET, DP_MAX_ROWS,
};
use satdom::formulas::{sequence, verify_sequence, SequenceId};
use satdom::grid::{
    make_rectangle, make_square, make_triangle, parse_board, Board, BoardFormat, GridKind,
};
use satdom::render;
use satdom::tilings::{saturated_to_tiling, tiling_to_saturated, FragmentTiling};
use satdom::{Error, ErrorCategory, Witness};

const SCHEMA_VERSION: &str = "1";

/// Exact fragment tilings, saturated domino coverings and domination numbers
/// of boards on square, triangular and hexagonal grids.
///
/// Exit codes: 0 success, 2 input error, 3 capability or budget exceeded,
/// 4 domain precondition violated, 5 verification failure.
#[derive(Parser)]
#[command(name = "satdom", version)]
struct Cli {
    #[command(subcommand)]
    command: Command,

    /// Output format.
    #[arg(long, global = true, value_enum, default_value_t = Format::Json)]
    format: Format,

    /// Worker threads for the branch-and-bound solvers.
    #[arg(long, global = true, default_value_t = 1)]
    threads: usize,

    /// Search node budget.
    #[arg(long, global = true, env = "SATDOM_NODE_BUDGET", default_value_t = DEFAULT_BUDGET)]
    budget: u64,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Json,
    Ascii,
    Svg,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum GammaMethod {
    /// Profile DP for full rectangles within the DP guard, else bb.
    Auto,
    /// Branch and bound.
    Bb,
    /// Profile DP; rectangles only.
    Dp,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum CoverMethod {
    /// Branch and bound over ambient centers.
    Exact,
    /// The explicit construction for full triangular boards.
    Construction,
}

#[derive(Args, Clone)]
#[group(required = true, multiple = false)]
struct BoardSource {
    /// An M x N rectangle on the square grid.
    #[arg(long, num_args = 2, value_names = ["M", "N"])]
    rect: Option<Vec<usize>>,
    /// An N x N square.
    #[arg(long, value_name = "N")]
    square: Option<usize>,
    /// The triangular board of side N.
    #[arg(long, value_name = "N")]
    tri: Option<usize>,
    /// A board file: `.cells` or `.json` for a cell list, anything else is
    /// read as ASCII art.
    #[arg(long, value_name = "PATH")]
    board: Option<PathBuf>,
}

#[derive(Args, Clone)]
#[group(required = false, multiple = false)]
struct OptionalBoardSource {
    #[arg(long, num_args = 2, value_names = ["M", "N"])]
    rect: Option<Vec<usize>>,
    #[arg(long, value_name = "N")]
    square: Option<usize>,
    #[arg(long, value_name = "N")]
    tri: Option<usize>,
    #[arg(long, value_name = "PATH")]
    board: Option<PathBuf>,
}

#[derive(Subcommand)]
enum Command {
    /// Domination number of the board's adjacency graph.
    Gamma {
        #[command(flatten)]
        source: BoardSource,
        #[arg(long, value_enum, default_value_t = GammaMethod::Auto)]
        method: GammaMethod,
    },
    /// Minimal fragment tiling.
    Tile {
        #[command(flatten)]
        source: BoardSource,
    },
    /// Largest saturated domino covering.
    Saturate {
        #[command(flatten)]
        source: BoardSource,
    },
    /// Fewest maximal fragments covering the board.
    Xcover {
        #[command(flatten)]
        source: BoardSource,
        #[arg(long, value_enum, default_value_t = CoverMethod::Exact)]
        method: CoverMethod,
    },
    /// Terms of an integer sequence.
    Seq {
        #[arg(value_parser = parse_sequence_id)]
        id: SequenceId,
        count: usize,
        /// Recompute every term within solver reach.
        #[arg(long)]
        verify: bool,
    },
    /// Validate a witness file or a document written by another command.
    Check {
        #[command(flatten)]
        source: OptionalBoardSource,
        #[arg(long, value_name = "PATH")]
        witness: PathBuf,
    },
    /// Whether the board is regular.
    Regular {
        #[command(flatten)]
        source: BoardSource,
    },
}

fn parse_sequence_id(s: &str) -> Result<SequenceId, String> {
    s.parse().map_err(|e: Error| e.to_string())
}

/// A failure with its exit code; `document` is still printed when present.
struct Failure {
    code: u8,
    message: String,
    document: Option<String>,
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        let code = match e.category() {
            ErrorCategory::Input => 2,
            ErrorCategory::Capability => 3,
            ErrorCategory::Domain => 4,
            ErrorCategory::Verification => 5,
        };
        Failure {
            code,
            message: e.to_string(),
            document: None,
        }
    }
}

fn input_error(message: impl Into<String>) -> Failure {
    Failure {
        code: 2,
        message: message.into(),
        document: None,
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(&cli) {
        Ok(out) => {
            print!("{out}");
            ExitCode::SUCCESS
        }
        Err(f) => {
            if let Some(doc) = f.document {
                print!("{doc}");
            }
            eprintln!("satdom: {}", f.message);
            ExitCode::from(f.code)
        }
    }
}

fn read_board(path: &Path) -> Result<Board, Failure> {
    let text = std::fs::read_to_string(path)
        .map_err(|e| input_error(format!("cannot read {}: {e}", path.display())))?;
    let format = match path.extension().and_then(|e| e.to_str()) {
        Some("cells" | "json") => BoardFormat::CellList,
        _ => BoardFormat::Ascii,
    };
    Ok(parse_board(&text, format)?)
}

fn load_board(
    rect: &Option<Vec<usize>>,
    square: Option<usize>,
    tri: Option<usize>,
    board: &Option<PathBuf>,
) -> Result<Option<(Board, String)>, Failure> {
    Ok(Some(if let Some(r) = rect {
        (
            make_rectangle(r[0], r[1])?,
            format!("rect {} {}", r[0], r[1]),
        )
    } else if let Some(n) = square {
        (make_square(n)?, format!("square {n}"))
    } else if let Some(n) = tri {
        (make_triangle(n)?, format!("tri {n}"))
    } else if let Some(p) = board {
        (read_board(p)?, format!("board {}", p.display()))
    } else {
        return Ok(None);
    }))
}

impl BoardSource {
    fn load(&self) -> Result<(Board, String), Failure> {
        Ok(load_board(&self.rect, self.square, self.tri, &self.board)?
            .expect("clap requires one source"))
    }
}

impl OptionalBoardSource {
    fn load(&self) -> Result<Option<(Board, String)>, Failure> {
        load_board(&self.rect, self.square, self.tri, &self.board)
    }
}

/// `(rows, cols)` when the board is a full rectangle on the square grid.
fn rectangle_shape(b: &Board) -> Option<(usize, usize)> {
    if b.kind() != GridKind::Square {
        return None;
    }
    let r0 = b.cells().iter().map(|c| c.0).min()?;
    let r1 = b.cells().iter().map(|c| c.0).max()?;
    let c0 = b.cells().iter().map(|c| c.1).min()?;
    let c1 = b.cells().iter().map(|c| c.1).max()?;
    let (m, n) = ((r1 - r0 + 1) as usize, (c1 - c0 + 1) as usize);
    (m * n == b.len()).then_some((m, n))
}

fn dp_applies(b: &Board) -> bool {
    rectangle_shape(b).is_some_and(|(m, n)| m.min(n) <= DP_MAX_ROWS)
}

struct Domination {
    value: usize,
    witness: Option<DominatingSet>,
    method: &'static str,
    nodes: u64,
    elapsed: Duration,
}

/// Cells of a full rectangle are stored row-major, so DP vertex indices are
/// board indices.
fn dominate(b: &Board, method: GammaMethod, opts: SolverOptions) -> Result<Domination, Failure> {
    let use_dp = match method {
        GammaMethod::Bb => false,
        GammaMethod::Dp => {
            if rectangle_shape(b).is_none() {
                return Err(
                    Error::Format("the profile DP only handles full rectangles".into()).into(),
                );
            }
            true
        }
        GammaMethod::Auto => dp_applies(b),
    };
    if use_dp {
        let (m, n) = rectangle_shape(b).unwrap();
        match gamma_rect_dp_witness(m, n) {
            Ok(r) => {
                return Ok(Domination {
                    value: r.value,
                    witness: Some(r.witness),
                    method: "dp",
                    nodes: r.nodes_explored,
                    elapsed: r.elapsed,
                })
            }
            Err(Error::Capacity(_)) if method == GammaMethod::Dp => {
                let start = std::time::Instant::now();
                let value = gamma_rect_dp(m, n)?;
                return Ok(Domination {
                    value,
                    witness: None,
                    method: "dp",
                    nodes: 0,
                    elapsed: start.elapsed(),
                });
            }
            Err(Error::Capacity(_)) => {}
            Err(e) => return Err(e.into()),
        }
    }
    let r = gamma_exact(&adjacency_graph(b), opts)?;
    Ok(Domination {
        value: r.value,
        witness: Some(r.witness),
        method: "bb",
        nodes: r.nodes_explored,
        elapsed: r.elapsed,
    })
}

fn minimal_tiling(b: &Board, opts: SolverOptions) -> Result<(FragmentTiling, Domination), Failure> {
    b.require_no_isolated()?;
    let dom = dominate(b, GammaMethod::Auto, opts)?;
    let g = adjacency_graph(b);
    let d = dom.witness.as_ref().expect("auto always yields a witness");
    let tiling = star_partition(&g, d)?.to_tiling(&g, b)?;
    Ok((tiling, dom))
}

fn millis(d: Duration) -> f64 {
    d.as_secs_f64() * 1e3
}

fn document(command: &str, inputs: Value, result: Value) -> String {
    let doc = json!({
        "schema_version": SCHEMA_VERSION,
        "command": command,
        "inputs": inputs,
        "result": result,
    });
    serde_json::to_string_pretty(&doc).expect("documents serialize") + "\n"
}

fn board_inputs(source: &str, b: &Board) -> Value {
    json!({ "source": source, "kind": b.kind(), "cells": b.len() })
}

fn no_picture(format: Format, command: &str) -> Result<(), Failure> {
    if format == Format::Svg {
        return Err(input_error(format!("`{command}` has no SVG rendering")));
    }
    Ok(())
}

fn run(cli: &Cli) -> Result<String, Failure> {
    if cli.threads == 0 {
        return Err(input_error("--threads must be at least 1"));
    }
    let opts = SolverOptions {
        budget: cli.budget,
        threads: cli.threads,
    };
    let solver_inputs = json!({ "threads": cli.threads, "budget": cli.budget });
    let with = |base: Value, extra: &Value| {
        let mut base = base;
        for (k, v) in extra.as_object().unwrap() {
            base[k] = v.clone();
        }
        base
    };

    match &cli.command {
        Command::Gamma { source, method } => {
            let (b, src) = source.load()?;
            let dom = dominate(&b, *method, opts)?;
            let cells: Option<Vec<_>> = dom
                .witness
                .as_ref()
                .map(|d| d.members().iter().map(|&v| b.cells()[v]).collect());
            match cli.format {
                Format::Ascii => Ok(render::marked_ascii(&b, cells.as_deref().unwrap_or(&[]))),
                Format::Svg => Ok(render::marked_svg(&b, cells.as_deref().unwrap_or(&[]))),
                Format::Json => {
                    let witness = dom.witness.as_ref().map(|d| Witness::dominating_set(&b, d));
                    let mut inputs = with(board_inputs(&src, &b), &solver_inputs);
                    inputs["method"] = json!(match method {
                        GammaMethod::Auto => "auto",
                        GammaMethod::Bb => "bb",
                        GammaMethod::Dp => "dp",
                    });
                    Ok(document(
                        "gamma",
                        inputs,
                        json!({
                            "value": dom.value,
                            "method": dom.method,
                            "witness": witness,
                            "nodes_explored": dom.nodes,
                            "elapsed_ms": millis(dom.elapsed),
                        }),
                    ))
                }
            }
        }
        Command::Tile { source } => {
            let (b, src) = source.load()?;
            let (t, dom) = minimal_tiling(&b, opts)?;
            match cli.format {
                Format::Ascii => Ok(render::tiling_ascii(&t)),
                Format::Svg => Ok(render::tiling_svg(&t)),
                Format::Json => Ok(document(
                    "tile",
                    with(board_inputs(&src, &b), &solver_inputs),
                    json!({
                        "value": t.len(),
                        "method": dom.method,
                        "witness": Witness::from(&t),
                        "nodes_explored": dom.nodes,
                        "elapsed_ms": millis(dom.elapsed),
                    }),
                )),
            }
        }
        Command::Saturate { source } => {
            let (b, src) = source.load()?;
            let (t, dom) = minimal_tiling(&b, opts)?;
            let covering = tiling_to_saturated(&t);
            match cli.format {
                Format::Ascii => Ok(render::tiling_ascii(&saturated_to_tiling(&covering)?)),
                Format::Svg => Ok(render::tiling_svg(&saturated_to_tiling(&covering)?)),
                Format::Json => Ok(document(
                    "saturate",
                    with(board_inputs(&src, &b), &solver_inputs),
                    json!({
                        "value": covering.len(),
                        "saturated": covering.is_saturated(),
                        "fragments": t.len(),
                        "method": dom.method,
                        "witness": Witness::from(&covering),
                        "nodes_explored": dom.nodes,
                        "elapsed_ms": millis(dom.elapsed),
                    }),
                )),
            }
        }
        Command::Xcover { source, method } => {
            let (b, src) = source.load()?;
            let (cover, nodes, elapsed, name) = match method {
                CoverMethod::Exact => {
                    let r = x_exact(&b, opts)?;
                    (r.witness, r.nodes_explored, r.elapsed, "exact")
                }
                CoverMethod::Construction => {
                    let n = match source.tri {
                        Some(n) => n,
                        None => (1..=b.len())
                            .find(|&n| make_triangle(n).is_ok_and(|t| t == b))
                            .ok_or_else(|| {
                                input_error("the construction needs a full triangular board")
                            })?,
                    };
                    let start = std::time::Instant::now();
                    let c = triangular_cover(n)?;
                    debug_assert_eq!(c.len(), x_triangular_value(n));
                    (c, 0, start.elapsed(), "construction")
                }
            };
            match cli.format {
                Format::Ascii => Ok(render::cover_ascii(&cover)),
                Format::Svg => Ok(render::cover_svg(&cover)),
                Format::Json => Ok(document(
                    "xcover",
                    with(board_inputs(&src, &b), &solver_inputs),
                    json!({
                        "value": cover.len(),
                        "method": name,
                        "witness": Witness::from(&cover),
                        "nodes_explored": nodes,
                        "elapsed_ms": millis(elapsed),
                    }),
                )),
            }
        }
        Command::Seq { id, count, verify } => {
            no_picture(cli.format, "seq")?;
            let inputs = json!({ "id": id.to_string(), "count": count, "verify": verify });
            let (terms, checks) = if *verify {
                let checks = verify_sequence(*id, *count, opts)?;
                (
                    checks.iter().map(|c| c.value).collect::<Vec<_>>(),
                    Some(checks),
                )
            } else {
                (sequence(*id, *count)?, None)
            };
            let text = match cli.format {
                Format::Ascii => {
                    terms
                        .iter()
                        .map(usize::to_string)
                        .collect::<Vec<_>>()
                        .join(" ")
                        + "\n"
                }
                _ => document(
                    "seq",
                    inputs,
                    json!({
                        "id": id.to_string(),
                        "description": id.description(),
                        "offset": id.offset(),
                        "terms": terms,
                        "checks": checks,
                    }),
                ),
            };
            if let Some(bad) = checks.iter().flatten().find(|c| !c.agrees()) {
                return Err(Failure {
                    code: 5,
                    message: format!(
                        "{id} term {} is {} but the solver gives {}",
                        bad.index,
                        bad.value,
                        bad.recomputed.unwrap()
                    ),
                    document: Some(text),
                });
            }
            Ok(text)
        }
        Command::Check { source, witness } => {
            no_picture(cli.format, "check")?;
            let text = std::fs::read_to_string(witness)
                .map_err(|e| input_error(format!("cannot read {}: {e}", witness.display())))?;
            let value: Value = serde_json::from_str(&text).map_err(|e| Error::Parse {
                line: e.line(),
                column: e.column(),
                message: e.to_string(),
            })?;
            let (claimed, raw) = match value.get("result") {
                Some(result) => (
                    result.get("value").and_then(Value::as_u64),
                    result.get("witness").cloned(),
                ),
                None => (None, Some(value.clone())),
            };
            let raw = raw
                .filter(|w| !w.is_null())
                .ok_or_else(|| input_error("the document carries no witness"))?;
            let w: Witness = serde_json::from_value(raw)
                .map_err(|e| input_error(format!("malformed witness: {e}")))?;
            let mut report = w.check();
            if report.valid {
                if let Some(v) = claimed.filter(|&v| v as usize != report.size) {
                    report.valid = false;
                    report.message = Some(format!(
                        "document claims {v} but the witness has {}",
                        report.size
                    ));
                }
            }
            let mut inputs = json!({ "witness": witness.display().to_string() });
            if let Some((b, src)) = source.load()? {
                inputs["source"] = json!(src);
                if report.valid && &b != w.board() {
                    report.valid = false;
                    report.message = Some("the witness is for a different board".into());
                }
            }
            let out = match cli.format {
                Format::Ascii => match &report.message {
                    None => format!("valid {} of size {}\n", report.witness_type, report.size),
                    Some(m) => format!("invalid {}: {m}\n", report.witness_type),
                },
                _ => document(
                    "check",
                    inputs,
                    serde_json::to_value(&report).expect("reports serialize"),
                ),
            };
            if report.valid {
                Ok(out)
            } else {
                Err(Failure {
                    code: 5,
                    message: report.message.unwrap_or_default(),
                    document: Some(out),
                })
            }
        }
        Command::Regular { source } => {
            no_picture(cli.format, "regular")?;
            let (b, src) = source.load()?;
            let pair = b.irregular_pair();
            match cli.format {
                Format::Ascii => Ok(match pair {
                    None => "true\n".to_string(),
                    Some((a, c)) => format!("false {a} {c}\n"),
                }),
                _ => Ok(document(
                    "regular",
                    board_inputs(&src, &b),
                    json!({ "value": pair.is_none(), "witness": pair.map(|(a, c)| [a, c]) }),
                )),
            }
        }
    }
}
