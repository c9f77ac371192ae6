//! `qspec`: quasi-prime spectra of finite rings from the command line.

use std::path::PathBuf;
use std::process::ExitCode;
use std::sync::Arc;
use std::time::Instant;

use clap::{Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

use qspec_core::checks::{self, Context, REGISTRY};
use qspec_core::error::Error;
use qspec_core::finring::DEFAULT_MAX_RING_SIZE;
use qspec_core::ideals::DEFAULT_MAX_IDEALS;
use qspec_core::report::IdealEntry;
use qspec_core::spectra::{clopen_sets, connected_components, t_phi};
use qspec_core::topspace::DEFAULT_MAX_CLOSED_SETS;
use qspec_core::{
    build_ring, AxiomCheck, BitSet, CheckOptions, CheckResult, FiniteRing, Report, RingOptions, Spectrum,
    SpectrumKind, Status, TopOptions,
};

#[derive(Parser, Debug)]
#[command(name = "qspec", version, about = "Quasi-prime spectra of finite commutative rings")]
struct Cli {
    /// Ring expression, e.g. "Prod(Zmod(4),Zmod(3))".
    #[arg(long, global = true)]
    ring: Option<String>,
    #[arg(long, global = true, value_enum, default_value_t = Format::Json)]
    format: Format,
    #[arg(long, global = true, default_value_t = DEFAULT_MAX_RING_SIZE)]
    max_ring_size: usize,
    #[arg(long, global = true, default_value_t = DEFAULT_MAX_IDEALS)]
    max_ideals: usize,
    #[arg(long, global = true, default_value_t = DEFAULT_MAX_CLOSED_SETS)]
    max_closed_sets: usize,
    /// Add wall-clock timings to the report (output is then not reproducible).
    #[arg(long, global = true)]
    timing: bool,
    /// Run checks on one thread.
    #[arg(long, global = true)]
    sequential: bool,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Build the ring and verify the axioms.
    Ring,
    /// Ideal lattice with classifications.
    Ideals,
    /// Points and point closures of a spectrum.
    Spectrum {
        #[arg(long, value_enum, default_value_t = Kind::Quasi)]
        kind: Kind,
        /// Also write the specialization graph to FILE.
        #[arg(long, value_name = "FILE")]
        dot: Option<PathBuf>,
    },
    /// Closures, components, clopens and minimal opens of a spectrum.
    Topology {
        #[arg(long, value_enum, default_value_t = Kind::Quasi)]
        kind: Kind,
        #[arg(long, value_name = "FILE")]
        dot: Option<PathBuf>,
    },
    /// The comparison map from t(Sp A) to Spec A.
    Tfunctor,
    /// Run registered checks.
    Check {
        /// Comma-separated check names (default: all).
        #[arg(long, value_delimiter = ',')]
        only: Option<Vec<String>>,
        /// Print the registry and exit.
        #[arg(long)]
        list: bool,
    },
}

#[derive(ValueEnum, Clone, Copy, Debug, PartialEq, Eq)]
enum Format {
    Json,
    Text,
}

#[derive(ValueEnum, Clone, Copy, Debug, PartialEq, Eq)]
enum Kind {
    Quasi,
    Prime,
    Max,
    Primary,
    All,
}

impl Kind {
    fn kinds(self) -> Vec<SpectrumKind> {
        match self {
            Kind::Quasi => vec![SpectrumKind::Quasi],
            Kind::Prime => vec![SpectrumKind::Prime],
            Kind::Max => vec![SpectrumKind::Maximal],
            Kind::Primary => vec![SpectrumKind::Primary],
            Kind::All => SpectrumKind::ALL.to_vec(),
        }
    }
}

/// Failures that abort a subcommand, tagged with their exit code.
struct Fatal {
    code: u8,
    message: String,
}

impl From<Error> for Fatal {
    fn from(e: Error) -> Self {
        let code = match &e {
            e if e.is_cap() => 3,
            Error::Parse { .. }
            | Error::ZeroRing(_)
            | Error::NonMonic(_)
            | Error::Literal { .. }
            | Error::Invalid(_) => 2,
            _ => 1,
        };
        Fatal {
            code,
            message: e.to_string(),
        }
    }
}

fn usage(message: impl Into<String>) -> Fatal {
    Fatal {
        code: 2,
        message: message.into(),
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(&cli) {
        Ok((out, code)) => {
            print!("{out}");
            ExitCode::from(code)
        }
        Err(f) => {
            eprintln!("error: {}", f.message);
            ExitCode::from(f.code)
        }
    }
}

fn run(cli: &Cli) -> Result<(String, u8), Fatal> {
    if let Command::Check { list: true, .. } = cli.command {
        let width = REGISTRY.iter().map(|c| c.name.len()).max().unwrap_or(0);
        let out: String = REGISTRY
            .iter()
            .map(|c| format!("{:<width$}  {}\n", c.name, c.summary))
            .collect();
        return Ok((out, 0));
    }
    let start = Instant::now();
    let expr = cli.ring.as_deref().ok_or_else(|| usage("--ring is required"))?;
    let ring_opts = RingOptions {
        max_size: cli.max_ring_size,
        // `ring` reports axiom violations as a check result instead of aborting
        axioms: if matches!(cli.command, Command::Ring) {
            AxiomCheck::Never
        } else {
            AxiomCheck::Auto
        },
    };
    let ring = build_ring(expr, &ring_opts)?;
    let opts = CheckOptions {
        max_ideals: cli.max_ideals,
        top: TopOptions {
            max_closed_sets: cli.max_closed_sets,
            point_closures_only: false,
        },
        parallel: !cli.sequential,
        timing: cli.timing,
    };
    let mut report = Report::new(ring.recipe(), &ring);

    match &cli.command {
        Command::Ring => {
            report.ring.elements = Some(ring.names().to_vec());
            report.results.push(axiom_result(&ring, cli.timing));
        }
        Command::Ideals => {
            let ctx = Context::new(&ring, opts)?;
            report.ideals = Some(IdealEntry::from_lattice(&ctx.data.lattice));
            report.results = run_named(&ctx, &["ideal:quasi-prime-radical", "ideal:hierarchy", "ideal:finite-coincidence"])?;
        }
        Command::Spectrum { kind, dot } => {
            let ctx = Context::new(&ring, opts)?;
            let kinds = kind.kinds();
            report.spectra = Some(kinds.iter().map(|&k| (k.to_string(), ctx.data.get(k).to_json())).collect());
            if let Some(path) = dot {
                write_dot(path, ctx.data.get(kinds[0]))?;
            }
            report.results = run_named(&ctx, &["sp:structure"])?;
        }
        Command::Topology { kind, dot } => {
            let ctx = Context::new(&ring, opts)?;
            let kinds = kind.kinds();
            let mut topo = serde_json::Map::new();
            for &k in &kinds {
                topo.insert(k.to_string(), topology(ctx.data.get(k), &ctx.opts.top)?);
            }
            report.topology = Some(Value::Object(topo));
            if let Some(path) = dot {
                write_dot(path, ctx.data.get(kinds[0]))?;
            }
            report.results = run_named(
                &ctx,
                &[
                    "thm:closure-of-point",
                    "cor:closed-sets",
                    "prop:clopen-idempotents",
                    "cor:connected",
                    "thm:components",
                ],
            )?;
        }
        Command::Tfunctor => {
            let ctx = Context::new(&ring, opts)?;
            report.tfunctor = Some(tfunctor(&ctx.data.quasi, &ctx.opts.top)?);
            report.results = run_named(&ctx, &["thm:t-functor", "prop:generic-points"])?;
        }
        Command::Check { only, .. } => {
            let selection = checks::select(only.as_deref())?;
            let ctx = Context::new(&ring, opts)?;
            report.results = checks::run_selected(&ctx, &selection);
        }
    }

    if cli.timing {
        report.total_ms = Some(start.elapsed().as_secs_f64() * 1e3);
    }
    let code = if report.hit_cap() {
        3
    } else if report.has_failures() {
        1
    } else {
        0
    };
    let out = match cli.format {
        Format::Json => report.to_json(),
        Format::Text => report.to_text(),
    };
    Ok((out, code))
}

fn run_named(ctx: &Context, names: &[&str]) -> Result<Vec<CheckResult>, Fatal> {
    let names: Vec<String> = names.iter().map(|s| s.to_string()).collect();
    let selection = checks::select(Some(&names))?;
    Ok(checks::run_selected(ctx, &selection))
}

/// Axioms only; skips the ideal lattice so huge rings still get a verdict.
fn axiom_result(ring: &Arc<FiniteRing>, timing: bool) -> CheckResult {
    let start = Instant::now();
    let (status, details) = match ring.verify_axioms() {
        Ok(()) => (Status::Pass, json!({ "size": ring.size() })),
        Err(e) => (Status::Fail, json!({ "violation": e.to_string() })),
    };
    CheckResult {
        name: "ring:axioms",
        status,
        details,
        elapsed_ms: timing.then(|| start.elapsed().as_secs_f64() * 1e3),
    }
}

fn write_dot(path: &PathBuf, sp: &Spectrum) -> Result<(), Fatal> {
    std::fs::write(path, sp.to_dot()).map_err(|e| Fatal {
        code: 1,
        message: format!("cannot write {}: {e}", path.display()),
    })
}

fn names(sp: &Spectrum, s: &BitSet) -> Vec<String> {
    s.iter().map(|i| sp.points()[i].name()).collect()
}

fn topology(sp: &Spectrum, top: &TopOptions) -> Result<Value, Fatal> {
    let space = sp.space();
    let closures: Vec<Vec<String>> = (0..sp.len()).map(|q| names(sp, &sp.closure_of_point(q))).collect();
    let min_opens: Vec<Vec<String>> = space.min_opens().iter().map(|u| names(sp, u)).collect();
    let closed_points: Vec<String> = space.closed_points().into_iter().map(|q| sp.points()[q].name()).collect();
    let mut v = json!({
        "points": sp.points().iter().map(|p| p.name()).collect::<Vec<_>>(),
        "closures": closures,
        "min_opens": min_opens,
        "closed_points": closed_points,
        "t0": space.is_t0(),
        "sober": space.is_sober(top)?,
        "hausdorff": space.is_hausdorff(),
        "normal": space.is_normal(top)?,
    });
    // the idempotent pairing and the max-regular check only make sense on Sp A
    let components: Vec<Vec<String>> = if sp.kind() == SpectrumKind::Quasi {
        connected_components(sp)?.iter().map(|c| names(sp, c)).collect()
    } else {
        space.connected_components().iter().map(|c| names(sp, c)).collect()
    };
    v["components"] = json!(components);
    if sp.kind() == SpectrumKind::Quasi {
        let clopens: Vec<Value> = clopen_sets(sp, top)?
            .iter()
            .map(|(c, e)| json!({ "set": names(sp, c), "idempotent": sp.ring().name(*e) }))
            .collect();
        v["clopens"] = json!(clopens);
    } else {
        let clopens: Vec<Vec<String>> = space
            .clopen_sets(top.max_closed_sets)?
            .iter()
            .map(|c| names(sp, c))
            .collect();
        v["clopens"] = json!(clopens);
    }
    Ok(v)
}

fn tfunctor(quasi: &Spectrum, top: &TopOptions) -> Result<Value, Fatal> {
    let (t, phi) = t_phi(quasi, top)?;
    let space = quasi.space();
    let points: Vec<Value> = t
        .sets
        .iter()
        .zip(phi.map())
        .map(|(z, &p)| -> Result<Value, Fatal> {
            let generic = space.generic_points(z, top)?;
            Ok(json!({
                "set": names(quasi, z),
                "generic": names(quasi, &generic),
                "phi": phi.target().labels()[p],
            }))
        })
        .collect::<Result<_, _>>()?;
    Ok(json!({
        "points": points,
        "spec": phi.target().labels(),
        "homeomorphism": phi.is_homeomorphism(),
    }))
}
