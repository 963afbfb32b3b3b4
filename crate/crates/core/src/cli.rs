//! The `spoly` command line.
//!
//! Exit codes: 0 success, 1 invalid input, 2 hypotheses not met,
//! 3 budget or limit exceeded, 4 internal verification failure.

use std::ffi::OsString;
use std::fmt::Write as _;
use std::io::Write as _;
use std::path::PathBuf;

use clap::{Parser, Subcommand, ValueEnum};

use crate::codec::{emit_report_json, emit_spoly, emit_tri3, parse_spoly};
use crate::complexes::{collapse_search, replay, triangulate, CollapseBudget, CollapseOutcome, CollapseTarget, Pi1Status};
use crate::decisions::{analyze, DecisionOptions};
use crate::model::{catalog, validate, CATALOG_NAMES};
use crate::thickening::{certify, thicken_detailed, Gluing};
use crate::{Error, SimplePolyhedron};

pub const EXIT_OK: i32 = 0;
pub const EXIT_INVALID: i32 = 1;
pub const EXIT_HYPOTHESES: i32 = 2;
pub const EXIT_BUDGET: i32 = 3;
pub const EXIT_INTERNAL: i32 = 4;

#[derive(Parser, Debug)]
#[command(name = "spoly", version, about = "Simple polyhedra, their monodromy, homology and 3-dimensional thickenings")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Check a .spoly file or catalog entry.
    Validate {
        /// Path, or catalog:<name>.
        input: String,
        #[arg(long)]
        json: bool,
    },
    /// Homology, fundamental group, compatibility and decisions for a source dimension.
    Analyze {
        input: String,
        /// Dimension of the source manifold.
        #[arg(long)]
        dim: u32,
        #[arg(long)]
        json: bool,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        /// Presentation simplification moves.
        #[arg(long)]
        budget: Option<usize>,
        #[arg(long)]
        exhaustive_max: Option<usize>,
    },
    /// Build and check the 3-dimensional thickening.
    Thicken {
        input: String,
        /// Where to write the .tri3 file; standard output if absent.
        #[arg(short = 'o', long)]
        output: Option<PathBuf>,
        #[arg(long)]
        json: bool,
    },
    /// Search for a simplicial collapse of the canonical triangulation.
    Collapse {
        input: String,
        #[arg(long, value_enum, default_value_t = Target::Point)]
        target: Target,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        /// Steps per restart.
        #[arg(long)]
        budget: Option<usize>,
        #[arg(long)]
        restarts: Option<usize>,
        #[arg(long)]
        exhaustive_max: Option<usize>,
        #[arg(long)]
        json: bool,
    },
    /// List catalog entries, or print one as .spoly.
    Examples {
        name: Option<String>,
        #[arg(long)]
        json: bool,
    },
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum Target {
    Point,
    Disc,
}

/// Faults injected after construction, to exercise the verification path.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct Faults {
    /// Glue the first boundary face of the thickening to itself.
    pub self_glued_face: bool,
    /// Drop the last step of a successful collapse sequence.
    pub truncated_collapse: bool,
}

/// Captured result of one invocation.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct Outcome {
    pub code: i32,
    pub stdout: String,
    pub stderr: String,
}

pub fn run<I, T>(args: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let o = run_captured(args, Faults::default());
    let _ = std::io::stdout().write_all(o.stdout.as_bytes());
    let _ = std::io::stderr().write_all(o.stderr.as_bytes());
    o.code
}

pub fn run_captured<I, T>(args: I, faults: Faults) -> Outcome
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let mut o = Outcome::default();
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let text = e.render().to_string();
            if e.use_stderr() {
                o.stderr = text;
                o.code = EXIT_INVALID;
            } else {
                o.stdout = text;
            }
            return o;
        }
    };
    o.code = dispatch(cli.command, faults, &mut o);
    o
}

fn exit_code(e: &Error) -> i32 {
    match e {
        Error::Incompatible { .. } | Error::ChartUnsupported(_) => EXIT_HYPOTHESES,
        Error::Overflow(_) => EXIT_BUDGET,
        Error::Internal(_) | Error::NotAComplex(_) => EXIT_INTERNAL,
        _ => EXIT_INVALID,
    }
}

fn fail(o: &mut Outcome, e: &Error) -> i32 {
    let _ = writeln!(o.stderr, "error: {e}");
    exit_code(e)
}

fn load(input: &str, o: &mut Outcome) -> Result<SimplePolyhedron, i32> {
    if let Some(name) = input.strip_prefix("catalog:") {
        return catalog(name).map_err(|e| fail(o, &e));
    }
    let text = match std::fs::read_to_string(input) {
        Ok(t) => t,
        Err(e) => {
            let _ = writeln!(o.stderr, "error: cannot read {input}: {e}");
            return Err(EXIT_INVALID);
        }
    };
    parse_spoly(&text).map_err(|errs| {
        for e in errs {
            let _ = writeln!(o.stderr, "{input}:{e}");
        }
        EXIT_INVALID
    })
}

fn dispatch(cmd: Command, faults: Faults, o: &mut Outcome) -> i32 {
    match cmd {
        Command::Validate { input, json } => cmd_validate(&input, json, o),
        Command::Analyze { input, dim, json, seed, budget, exhaustive_max } => {
            let mut opts = DecisionOptions::default();
            opts.collapse.seed = seed;
            if let Some(b) = budget {
                opts.moves = b;
            }
            if let Some(x) = exhaustive_max {
                opts.collapse.exhaustive_max = x;
            }
            cmd_analyze(&input, dim, json, &opts, o)
        }
        Command::Thicken { input, output, json } => cmd_thicken(&input, output, json, faults, o),
        Command::Collapse { input, target, seed, budget, restarts, exhaustive_max, json } => {
            let d = CollapseBudget::default();
            let b = CollapseBudget {
                steps: budget.unwrap_or(d.steps),
                restarts: restarts.unwrap_or(d.restarts),
                exhaustive_max: exhaustive_max.unwrap_or(d.exhaustive_max),
                seed,
            };
            let t = match target {
                Target::Point => CollapseTarget::Point,
                Target::Disc => CollapseTarget::Disc,
            };
            cmd_collapse(&input, t, b, json, faults, o)
        }
        Command::Examples { name, json } => cmd_examples(name.as_deref(), json, o),
    }
}

fn cmd_validate(input: &str, json: bool, o: &mut Outcome) -> i32 {
    let p = match load(input, o) {
        Ok(p) => p,
        Err(code) => return code,
    };
    let r = validate(&p);
    if json {
        o.stdout.push_str(&emit_report_json(&r));
    } else {
        let s = &r.summary;
        let _ = writeln!(o.stdout, "{}: {}", p.name, if r.ok { "ok" } else { "invalid" });
        let _ = writeln!(
            o.stdout,
            "double points {}, triple intervals {}, triple circles {}, free circles {}, regions {}",
            s.double_points, s.triple_intervals, s.triple_circles, s.free_circles, s.regions
        );
        for i in &r.errors {
            let _ = writeln!(o.stdout, "error {i}");
        }
        for i in &r.warnings {
            let _ = writeln!(o.stdout, "warning {i}");
        }
    }
    if r.ok {
        EXIT_OK
    } else {
        EXIT_INVALID
    }
}

fn cmd_analyze(input: &str, m: u32, json: bool, opts: &DecisionOptions, o: &mut Outcome) -> i32 {
    let p = match load(input, o) {
        Ok(p) => p,
        Err(code) => return code,
    };
    let b = match analyze(&p, m, opts) {
        Ok(b) => b,
        Err(e) => return fail(o, &e),
    };
    if json {
        o.stdout.push_str(&emit_report_json(&b));
    } else {
        let out = &mut o.stdout;
        let _ = writeln!(out, "polyhedron {} (m = {m})", b.polyhedron);
        let _ = writeln!(out, "euler {}", b.euler);
        let _ = writeln!(out, "homology {}", b.homology);
        let _ = writeln!(out, "pi1 {} {}", b.pi1.status.as_str(), b.pi1);
        let compat = b.compatible.map(|c| c.to_string()).unwrap_or_else(|| "n/a".into());
        let _ = writeln!(out, "compatible {compat}");
        let _ = writeln!(out, "double points {}", b.double_points);
        let _ = write!(out, "{}", b.source);
        let report = crate::decisions::DecisionReport { polyhedron: b.polyhedron.clone(), dimension: m, claims: b.decisions.clone() };
        let _ = write!(out, "{report}");
    }
    if b.pi1.status == Pi1Status::Unknown {
        let _ = writeln!(o.stderr, "note: fundamental group undecided within {} moves", opts.moves);
        return EXIT_BUDGET;
    }
    EXIT_OK
}

fn cmd_thicken(input: &str, output: Option<PathBuf>, json: bool, faults: Faults, o: &mut Outcome) -> i32 {
    let p = match load(input, o) {
        Ok(p) => p,
        Err(code) => return code,
    };
    let mut t = match thicken_detailed(&p) {
        Ok(t) => t.triangulation,
        Err(e) => return fail(o, &e),
    };
    if faults.self_glued_face {
        if let Some(&(i, f)) = t.boundary_faces().first() {
            t.tets[i].gluings[f as usize] = Some(Gluing { tet: i, face: f, perm: [0, 1, 2] });
        }
    }
    let cert = match certify(&p, &t) {
        Ok(c) => c,
        Err(e) => return fail(o, &e),
    };
    let text = match emit_tri3(&t) {
        Ok(s) => s,
        Err(e) => return fail(o, &Error::Internal(e.to_string())),
    };
    let m = &cert.manifold;
    let summary = format!(
        "{}: {} tetrahedra, euler {}, {} boundary component(s), homology {}\n",
        p.name,
        t.len(),
        m.euler,
        m.boundary.len(),
        cert.homology
    );
    match output {
        Some(path) => {
            if let Err(e) = std::fs::write(&path, &text) {
                let _ = writeln!(o.stderr, "error: cannot write {}: {e}", path.display());
                return EXIT_INVALID;
            }
            if json {
                o.stdout.push_str(&emit_report_json(&cert));
            } else {
                o.stdout.push_str(&summary);
            }
        }
        None => {
            o.stdout.push_str(&text);
            o.stderr.push_str(&summary);
        }
    }
    EXIT_OK
}

fn cmd_collapse(input: &str, target: CollapseTarget, budget: CollapseBudget, json: bool, faults: Faults, o: &mut Outcome) -> i32 {
    let p = match load(input, o) {
        Ok(p) => p,
        Err(code) => return code,
    };
    let k = match triangulate(&p) {
        Ok(k) => k,
        Err(e) => return fail(o, &e),
    };
    let mut r = collapse_search(&k, target, budget);
    if faults.truncated_collapse && r.outcome == CollapseOutcome::Collapsed {
        r.sequence.pop();
    }
    if r.outcome == CollapseOutcome::Collapsed {
        match replay(&k, &r.sequence) {
            Ok(res) if res == r.residual => {}
            Ok(_) => return fail(o, &Error::Internal("collapse replay leaves a different residual".into())),
            Err(e) => return fail(o, &Error::Internal(format!("collapse replay failed: {e}"))),
        }
    }
    if json {
        o.stdout.push_str(&emit_report_json(&r));
    } else {
        let [v, e, f] = r.residual_counts();
        let _ = writeln!(o.stdout, "outcome {}", r.outcome.as_str());
        let _ = writeln!(o.stdout, "steps {}", r.sequence.len());
        let _ = writeln!(o.stdout, "residual {v} vertices, {e} edges, {f} triangles");
        if !r.note.is_empty() {
            let _ = writeln!(o.stdout, "note {}", r.note);
        }
    }
    match r.outcome {
        CollapseOutcome::ExhaustedBudget => EXIT_BUDGET,
        _ => EXIT_OK,
    }
}

fn cmd_examples(name: Option<&str>, json: bool, o: &mut Outcome) -> i32 {
    match name {
        None if json => {
            o.stdout.push_str(&serde_json::to_string(&CATALOG_NAMES).expect("names serialize"));
            o.stdout.push('\n');
        }
        None => {
            for n in CATALOG_NAMES {
                let _ = writeln!(o.stdout, "{n}");
            }
        }
        Some(n) => {
            let n = n.strip_prefix("catalog:").unwrap_or(n);
            match catalog(n).and_then(|p| emit_spoly(&p)) {
                Ok(text) => o.stdout.push_str(&text),
                Err(e) => return fail(o, &e),
            }
        }
    }
    EXIT_OK
}
