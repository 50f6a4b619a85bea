//! `iepg`: command-line front end with JSON in and out.
//!
//! Exit codes: 0 success or the property holds, 1 the property fails or the
//! request is infeasible, 2 usage or input error.

mod input;

use std::collections::BTreeMap;
use std::io::Write;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

use iepg::catalog::{attainable, catalog, spectrally_arbitrary_demo, verify_catalog, Mode, Scope};
use iepg::graph::{classify, family_minor_check, find_minor, MinorFamily, DEFAULT_MINOR_LIMIT};
use iepg::matrix::default_cluster_tol;
use iepg::realize::{
    augment, build_family, decontract, family_for_targets, isospectral_lift, realize_spectrum, DecontractOptions,
    Family, SolveOptions,
};
use iepg::strong::{has_property, RankOptions};
use iepg::{IepgError, PropertyKind, Result, Spectrum};

#[derive(Parser)]
#[command(name = "iepg", version, about = "Inverse eigenvalue problem of a graph: strong properties, realizations, catalog")]
struct Cli {
    #[command(flatten)]
    global: Global,
    #[command(subcommand)]
    command: Command,
}

#[derive(Args, Clone)]
struct Global {
    /// Property to certify: ssp, smp or sap.
    #[arg(long, global = true, default_value = "ssp")]
    prop: PropArg,
    /// Absolute rank threshold on sigma_p [default: max(p, cols) * eps * sigma_1].
    #[arg(long, global = true)]
    tol_rank: Option<f64>,
    /// Eigenvalue clustering gap [default: 1e-8 * max(1, spectral radius)].
    #[arg(long, global = true)]
    tol_cluster: Option<f64>,
    #[arg(long, global = true, default_value_t = 0x5eed)]
    seed: u64,
    /// Newton iterations per attempt.
    #[arg(long, global = true, default_value_t = 100)]
    max_iters: usize,
    #[arg(long, global = true, default_value = "json")]
    format: Format,
    /// Require a matrix's nonzero pattern to equal its "graph" field.
    #[arg(long, global = true)]
    strict_pattern: bool,
}

#[derive(Clone, Copy, ValueEnum)]
enum PropArg {
    Ssp,
    Smp,
    Sap,
}

impl From<PropArg> for PropertyKind {
    fn from(p: PropArg) -> PropertyKind {
        match p {
            PropArg::Ssp => PropertyKind::Ssp,
            PropArg::Smp => PropertyKind::Smp,
            PropArg::Sap => PropertyKind::Sap,
        }
    }
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Json,
    Text,
}

#[derive(Subcommand)]
enum Command {
    /// Certify a strong property of a matrix.
    Check { matrix: String },
    /// Ordered multiplicity list of a matrix.
    Oml { matrix: String },
    /// Clustered spectrum of a matrix.
    Spectrum { matrix: String },
    /// Is PATTERN a minor of HOST? Prints the operations if so.
    Minor {
        pattern: String,
        host: String,
        #[arg(long, default_value_t = DEFAULT_MINOR_LIMIT)]
        limit: usize,
    },
    /// Structural classes and minors from both families.
    Classify {
        graph: String,
        #[arg(long, default_value_t = DEFAULT_MINOR_LIMIT)]
        limit: usize,
    },
    /// Minors from one family: two-multiple (eleven graphs) or consecutive (six graphs).
    FamilyCheck {
        graph: String,
        #[arg(long, default_value = "two-multiple")]
        family: String,
        #[arg(long, default_value_t = DEFAULT_MINOR_LIMIT)]
        limit: usize,
    },
    /// Build a matrix: a named family, a catalog list, or a searched spectrum.
    Realize(RealizeArgs),
    /// Add a vertex adjacent to ALPHA raising the multiplicity of LAMBDA.
    Augment {
        matrix: String,
        #[arg(long, allow_hyphen_values = true)]
        lambda: f64,
        /// 1-based vertex labels.
        #[arg(long)]
        alpha: String,
    },
    /// Split VERTEX into an edge; ALPHA stays with it, BETA moves to the new vertex.
    Decontract {
        matrix: String,
        #[arg(long)]
        vertex: usize,
        #[arg(long, default_value = "")]
        alpha: String,
        #[arg(long, default_value = "")]
        beta: String,
        #[arg(long, allow_hyphen_values = true)]
        lambda: Option<f64>,
    },
    /// Move isospectrally to a spanning supergraph.
    Lift {
        matrix: String,
        #[arg(long)]
        target: String,
    },
    /// Catalog entry for a graph of order at most five, or the summary.
    Catalog {
        graph: Option<String>,
        #[arg(long, default_value = "any")]
        mode: String,
    },
    /// Re-run the catalog checks.
    Verify {
        #[arg(long, default_value = "order4")]
        scope: String,
    },
}

#[derive(Args)]
struct RealizeArgs {
    /// Graph for a catalog list or a spectrum search.
    #[arg(long)]
    graph: Option<String>,
    #[arg(long)]
    oml: Option<String>,
    /// Distinct values for --oml, or all eigenvalues with --search.
    #[arg(long, allow_hyphen_values = true)]
    spectrum: Option<String>,
    /// any or ssp.
    #[arg(long, default_value = "any")]
    mode: String,
    /// Family name (M1..M5, B12, C4_TABLE1, ...).
    #[arg(long)]
    family: Option<String>,
    /// Family parameter as key=value; repeatable.
    #[arg(long = "param")]
    params: Vec<String>,
    /// Target values for a family (scaled and shifted to fit).
    #[arg(long, allow_hyphen_values = true)]
    targets: Option<String>,
    /// Unguided numerical search for --spectrum on --graph.
    #[arg(long)]
    search: bool,
    /// Whole request as JSON (file or inline); other options are ignored.
    #[arg(long)]
    request: Option<String>,
}

struct Outcome {
    value: Value,
    ok: bool,
    text: Option<String>,
}

impl Outcome {
    fn ok(value: Value) -> Outcome {
        Outcome { value, ok: true, text: None }
    }

    fn holds(value: Value, ok: bool) -> Outcome {
        Outcome { value, ok, text: None }
    }
}

impl Global {
    fn rank(&self) -> RankOptions {
        RankOptions { rank_tol: self.tol_rank, cluster_tol: self.tol_cluster }
    }

    fn solve(&self) -> SolveOptions {
        SolveOptions {
            seed: self.seed,
            max_iters: self.max_iters,
            rank: self.rank(),
            require: self.prop.into(),
            ..SolveOptions::default()
        }
    }

    fn tolerances(&self) -> Value {
        json!({"rank": self.tol_rank, "cluster": self.tol_cluster, "rank_default": "max(p, cols) * eps * sigma_1", "cluster_default": "1e-8 * max(1, spectral radius)"})
    }
}

fn run(cli: &Cli) -> Result<Outcome> {
    let g = &cli.global;
    match &cli.command {
        Command::Check { matrix } => {
            let a = input::matrix(matrix, g.strict_pattern)?;
            let cert = has_property(&a, g.prop.into(), &g.rank());
            let mut v = cert.to_json();
            v["margin"] = json!(finite_or_null(cert.margin()));
            v["tolerances"] = g.tolerances();
            Ok(Outcome::holds(v, cert.holds))
        }
        Command::Oml { matrix } => {
            let a = input::matrix(matrix, g.strict_pattern)?;
            let s = Spectrum::from_eigenvalues(a.eigenvalues(), g.tol_cluster);
            let o = s.oml();
            Ok(Outcome { value: json!({"oml": o.0, "tol": s.tol}), ok: true, text: Some(o.to_string()) })
        }
        Command::Spectrum { matrix } => {
            let a = input::matrix(matrix, g.strict_pattern)?;
            let eig = a.eigenvalues();
            let tol = g.tol_cluster.unwrap_or_else(|| default_cluster_tol(&eig));
            Ok(Outcome::ok(Spectrum::from_eigenvalues(eig, Some(tol)).to_json()))
        }
        Command::Minor { pattern, host, limit } => {
            let (p, h) = (input::graph(pattern)?, input::graph(host)?);
            let w = find_minor(&p, &h, *limit)?;
            let v = json!({
                "is_minor": w.is_some(),
                "witness": w.as_ref().map(|w| w.to_json()["ops"].clone()),
                "embedding": w.as_ref().map(|w| w.to_json()["embedding"].clone()),
            });
            Ok(Outcome::holds(v, w.is_some()))
        }
        Command::Classify { graph, limit } => Ok(Outcome::ok(classify(&input::graph(graph)?, *limit)?.to_json())),
        Command::FamilyCheck { graph, family, limit } => {
            let r = family_minor_check(&input::graph(graph)?, MinorFamily::parse(family)?, *limit)?;
            Ok(Outcome::holds(r.to_json(), r.has_minor))
        }
        Command::Realize(r) => realize(r, g),
        Command::Augment { matrix, lambda, alpha } => {
            let a = input::matrix(matrix, g.strict_pattern)?;
            let r = augment(&a, *lambda, &input::vertices(alpha)?, &g.solve())?;
            Ok(Outcome::holds(r.to_json(), r.certificate.holds))
        }
        Command::Decontract { matrix, vertex, alpha, beta, lambda } => {
            let a = input::matrix(matrix, g.strict_pattern)?;
            let v = vertex.checked_sub(1).ok_or_else(|| IepgError::Parse("vertex labels are 1-based".into()))?;
            let opts = DecontractOptions { solve: g.solve(), lambda: *lambda };
            let r = decontract(&a, v, &input::vertices(alpha)?, &input::vertices(beta)?, &opts)?;
            Ok(Outcome::holds(r.to_json(), r.certificate.holds))
        }
        Command::Lift { matrix, target } => {
            let a = input::matrix(matrix, g.strict_pattern)?;
            let r = isospectral_lift(&a, &input::graph(target)?, &g.solve())?;
            Ok(Outcome::holds(r.to_json(), r.certificate.holds))
        }
        Command::Catalog { graph, mode } => {
            let cat = catalog();
            match graph {
                None => Ok(Outcome { value: cat.summary(), ok: true, text: Some(cat.summary_text()) }),
                Some(name) => {
                    let gr = input::graph(name)?;
                    let mode: Mode = mode.parse()?;
                    let lists = attainable(&gr, mode)?;
                    let mut v = json!({
                        "graph": gr.to_json(),
                        "mode": mode.to_string(),
                        "attainable": lists.iter().map(|o| o.to_string()).collect::<Vec<_>>(),
                    });
                    if let Some(e) = cat.entry(&gr) {
                        v["entry"] = e.to_json();
                    } else {
                        v["note"] = json!("disconnected graph; lists combine the component entries");
                    }
                    Ok(Outcome::ok(v))
                }
            }
        }
        Command::Verify { scope } => {
            let report = verify_catalog(scope.parse::<Scope>()?, g.seed)?;
            Ok(Outcome { value: report.to_json(), ok: report.all_passed(), text: Some(report.to_text()) })
        }
    }
}

fn realize(r: &RealizeArgs, g: &Global) -> Result<Outcome> {
    let mut opts = g.solve();
    if let Some(req) = &r.request {
        let req = input::request(req)?;
        opts.seed = req.seed.unwrap_or(opts.seed);
        opts.rank.cluster_tol = req.tol.or(opts.rank.cluster_tol);
        // with no requirement the certificate is still reported for the SSP
        opts.require = req.require.unwrap_or(PropertyKind::Ssp);
        let res = match req.target {
            input::Target::Spectrum(values) => realize_spectrum(&req.graph, &values, &opts)?,
            input::Target::Oml(oml, anchor) => {
                let mode = if req.require == Some(PropertyKind::Ssp) { Mode::Ssp } else { Mode::Any };
                spectrally_arbitrary_demo(&req.graph, &oml, &anchor, mode, &opts)?
            }
        };
        return Ok(Outcome::ok(res.to_json()));
    }
    if let Some(name) = &r.family {
        let fm = match &r.targets {
            Some(t) => family_for_targets(name, &input::numbers(t)?)?,
            None => {
                let params: BTreeMap<String, f64> = r.params.iter().map(|p| input::param(p)).collect::<Result<_>>()?;
                build_family(Family::from_name(name, &params)?)?
            }
        };
        let cert = has_property(&fm.matrix, opts.require, &opts.rank);
        let mut v = fm.to_json();
        v["oml"] = json!(fm.matrix.oml().0);
        v["eigenvalues"] = json!(fm.matrix.eigenvalues());
        v["certificate"] = cert.to_json();
        return Ok(Outcome::ok(v));
    }
    let graph = input::graph(r.graph.as_deref().ok_or_else(|| IepgError::Parse("give --family or --graph".into()))?)?;
    let values = input::numbers(r.spectrum.as_deref().ok_or_else(|| IepgError::Parse("--spectrum is required".into()))?)?;
    if r.search {
        let res = realize_spectrum(&graph, &values, &opts)?;
        return Ok(Outcome::ok(res.to_json()));
    }
    let oml = input::oml(r.oml.as_deref().ok_or_else(|| IepgError::Parse("--oml is required without --search".into()))?)?;
    let res = spectrally_arbitrary_demo(&graph, &oml, &values, r.mode.parse()?, &opts)?;
    Ok(Outcome::ok(res.to_json()))
}

fn finite_or_null(x: f64) -> Option<f64> {
    x.is_finite().then_some(x)
}

fn exit_for(e: &IepgError) -> u8 {
    match e {
        IepgError::NotAttainable(_) | IepgError::NoConvergence(_) | IepgError::Hypothesis(_) => 1,
        _ => 2,
    }
}

// a closed pipe (`iepg ... | head`) is not an error worth a panic
fn write_out(text: &str) {
    let mut out = std::io::stdout().lock();
    let _ = out.write_all(text.as_bytes()).and_then(|_| out.flush());
}

fn emit(v: &Value) {
    write_out(&format!("{}\n", serde_json::to_string_pretty(v).expect("serializable")));
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(c) => c,
        Err(e) if matches!(e.kind(), clap::error::ErrorKind::DisplayHelp | clap::error::ErrorKind::DisplayVersion) => {
            write_out(&e.to_string());
            return ExitCode::SUCCESS;
        }
        Err(e) => {
            emit(&json!({"error": e.to_string().trim(), "kind": "usage"}));
            return ExitCode::from(2);
        }
    };
    match run(&cli) {
        Ok(out) => {
            match (&cli.global.format, &out.text) {
                (Format::Text, Some(t)) => write_out(&format!("{}{}", t, if t.ends_with('\n') { "" } else { "\n" })),
                _ => emit(&out.value),
            }
            if out.ok {
                ExitCode::SUCCESS
            } else {
                ExitCode::from(1)
            }
        }
        Err(e) => {
            let code = exit_for(&e);
            emit(&json!({"error": e.to_string(), "kind": if code == 1 { "infeasible" } else { "input" }}));
            ExitCode::from(code)
        }
    }
}
