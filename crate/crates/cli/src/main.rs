use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

use superjack::exactalg::parse_rational;
use superjack::interpbc::{
    derive_k, expansion_identity, grid_point, interpolation_J, k_mu, verify_properties, weyl_vectors, InterpError,
    InterpolationResult, Mode, Property, VerifySpec,
};
use superjack::partitions::{enumerate_hooks, SizeMode};
use superjack::superpoly::{squared_substitution, super_jack, SuperError};
use superjack::symmfunc::{basis_convert, jack_p, Basis, JackCache, JackParam, SymError, SymExpansion};
use superjack::{HookParams, Partition};

const USAGE: u8 = 2;
const FAILURE: u8 = 1;
const DEGENERATE: u8 = 3;

#[derive(Parser, Debug)]
#[command(name = "superjack", version, about = "Exact super Jack and Type BC interpolation polynomials")]
struct Cli {
    /// output format
    #[arg(long, global = true, value_enum, default_value_t = Format::Text)]
    format: Format,
    /// JSON file for persisting Jack expansions between runs
    #[arg(long, global = true, env = "SUPERJACK_CACHE")]
    cache: Option<PathBuf>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Structured,
}

#[derive(Args, Debug, Clone, Copy)]
struct Hook {
    #[arg(long, value_parser = clap::value_parser!(u32).range(1..))]
    p: u32,
    #[arg(long, value_parser = clap::value_parser!(u32).range(1..))]
    q: u32,
}

impl Hook {
    fn params(self) -> HookParams {
        HookParams::new(self.p as usize, self.q as usize).expect("validated by the parser")
    }
}

#[derive(Subcommand, Debug)]
enum Command {
    /// List (p,q)-hook partitions of a given size, or up to a size
    Hooks {
        #[command(flatten)]
        hp: Hook,
        #[arg(long, conflicts_with = "max_size", required_unless_present = "max_size")]
        size: Option<usize>,
        #[arg(long)]
        max_size: Option<usize>,
    },
    /// Jack symmetric function P_λ(x; θ)
    Jack {
        #[arg(long, value_parser = parse_partition)]
        lambda: Partition,
        #[arg(long, value_parser = parse_theta, default_value = "generic")]
        theta: JackParam,
        /// target basis: m (monomial) or p (power sums)
        #[arg(long, value_parser = parse_basis, default_value = "m")]
        basis: Basis,
    },
    /// Super Jack polynomial SP_λ(x, y; θ)
    Superjack {
        #[arg(long, value_parser = parse_partition)]
        lambda: Partition,
        #[command(flatten)]
        hp: Hook,
        #[arg(long, value_parser = parse_theta, default_value = "1")]
        theta: JackParam,
        /// substitute x ↦ x², y ↦ y²
        #[arg(long)]
        squared: bool,
    },
    /// Grid point 2λ̄^♮ + ρ, or the Weyl vectors when no partition is given
    Grid {
        #[arg(long, value_parser = parse_partition)]
        lambda: Option<Partition>,
        #[command(flatten)]
        hp: Hook,
    },
    /// Interpolation polynomial J_μ
    Interp {
        #[arg(long, value_parser = parse_partition)]
        mu: Partition,
        #[command(flatten)]
        hp: Hook,
        #[arg(long, value_parser = parse_mode, default_value = "paper")]
        mode: Mode,
    },
    /// The constant k_μ, and the derived constant when (p,q) is given
    Kmu {
        #[arg(long, value_parser = parse_partition)]
        mu: Partition,
        #[arg(long, requires = "q", value_parser = clap::value_parser!(u32).range(1..))]
        p: Option<u32>,
        #[arg(long, requires = "p", value_parser = clap::value_parser!(u32).range(1..))]
        q: Option<u32>,
    },
    /// Expand (Σx² - Σy²)^m / m! in the squared super Jack basis
    Expand {
        #[arg(long)]
        size: usize,
        #[command(flatten)]
        hp: Hook,
    },
    /// Run a verification suite
    Verify {
        #[arg(value_parser = parse_property)]
        property: Property,
        #[arg(long, requires = "q", value_parser = clap::value_parser!(u32).range(1..))]
        p: Option<u32>,
        #[arg(long, requires = "p", value_parser = clap::value_parser!(u32).range(1..))]
        q: Option<u32>,
        #[arg(long, default_value_t = 4)]
        max_size: usize,
        #[arg(long, default_value_t = 2)]
        window: usize,
    },
}

fn parse_partition(s: &str) -> Result<Partition, String> {
    s.parse().map_err(|e: superjack::partitions::PartitionError| e.to_string())
}

fn parse_theta(s: &str) -> Result<JackParam, String> {
    if s == "generic" {
        return Ok(JackParam::Generic);
    }
    parse_rational(s).map(JackParam::Value).map_err(|e| e.to_string())
}

fn parse_basis(s: &str) -> Result<Basis, String> {
    match s {
        "m" => Ok(Basis::Monomial),
        "p" => Ok(Basis::PowerSum),
        _ => Err(format!("unknown basis {s:?}, expected m or p")),
    }
}

fn parse_mode(s: &str) -> Result<Mode, String> {
    s.parse()
}

fn parse_property(s: &str) -> Result<Property, String> {
    s.parse()
}

/// What a subcommand produced: text lines, a structured result and an exit
/// status.
struct Outcome {
    text: Vec<String>,
    result: Value,
    code: u8,
}

impl Outcome {
    fn ok(text: Vec<String>, result: Value) -> Self {
        Outcome { text, result, code: 0 }
    }
}

enum Failure {
    Usage(String),
    Compute(String),
}

impl From<SymError> for Failure {
    fn from(e: SymError) -> Self {
        match e {
            SymError::DegenerateParameter(_) => Failure::Compute(e.to_string()),
            _ => Failure::Usage(e.to_string()),
        }
    }
}

impl From<SuperError> for Failure {
    fn from(e: SuperError) -> Self {
        match e {
            SuperError::ZeroTheta => Failure::Usage(e.to_string()),
            SuperError::Sym(s) => s.into(),
            SuperError::Algebra(a) => Failure::Compute(a.to_string()),
        }
    }
}

impl From<InterpError> for Failure {
    fn from(e: InterpError) -> Self {
        match e {
            InterpError::NotAHook { .. } => Failure::Usage(e.to_string()),
            _ => Failure::Compute(e.to_string()),
        }
    }
}

fn to_value<T: serde::Serialize>(v: &T) -> Value {
    serde_json::to_value(v).expect("serializable")
}

fn interp_outcome(j: &InterpolationResult, requested: Mode, fallback: Option<&str>) -> (Vec<String>, Value) {
    let text = vec![
        format!("J_{} at {} mode={}", j.mu, j.hp, j.mode),
        format!("poly: {}", j.poly),
        format!("top coefficient: {}", j.measured_top_coefficient),
        format!("normalization J(grid(mu)): {}", j.normalization_value),
        format!("paper target: {}", j.paper_target),
        format!("transposed target: {}", j.transposed_target),
        format!("window: {}", j.window),
        format!("extended grid used: {}", j.extended_grid_used),
    ]
    .into_iter()
    .chain(fallback.map(|f| format!("fallback: {f}")))
    .collect();
    let result = json!({
        "mu": j.mu,
        "p": j.hp.p,
        "q": j.hp.q,
        "requested_mode": requested.to_string(),
        "mode": j.mode.to_string(),
        "fallback": fallback,
        "polynomial": j.poly.to_record(),
        "measured_top_coefficient": j.measured_top_coefficient,
        "normalization_value": j.normalization_value,
        "paper_target": j.paper_target,
        "transposed_target": j.transposed_target,
        "coefficients": j.coefficients.iter()
            .map(|(nu, c)| json!({"partition": nu, "coefficient": c}))
            .collect::<Vec<_>>(),
        "window": j.window,
        "degenerate_normalization": j.degenerate_normalization,
        "extended_grid_used": j.extended_grid_used,
    });
    (text, result)
}

fn run(command: &Command) -> Result<Outcome, Failure> {
    match command {
        Command::Hooks { hp, size, max_size } => {
            let (d, mode) = match (size, max_size) {
                (Some(d), _) => (*d, SizeMode::Exact),
                (None, Some(d)) => (*d, SizeMode::UpTo),
                (None, None) => unreachable!("clap requires one of the sizes"),
            };
            let hooks = enumerate_hooks(hp.params(), d, mode);
            let text = hooks.iter().map(Partition::to_string).collect();
            Ok(Outcome::ok(
                text,
                json!({
                    "p": hp.p, "q": hp.q, "size": d,
                    "mode": if mode == SizeMode::Exact { "exact" } else { "up-to" },
                    "partitions": hooks,
                }),
            ))
        }
        Command::Jack { lambda, theta, basis } => {
            let f = jack_p(lambda, theta)?;
            let e = basis_convert(&SymExpansion::power_sums(&f), *basis, lambda.size())?;
            Ok(Outcome::ok(
                vec![format!("P_{lambda}(θ={theta}) = {e}")],
                json!({"partition": lambda, "theta": theta.to_string(), "expansion": e.to_record()}),
            ))
        }
        Command::Superjack { lambda, hp, theta, squared } => {
            let mut f = super_jack(lambda, hp.params(), theta)?;
            if *squared {
                f = squared_substitution(&f);
            }
            Ok(Outcome::ok(
                vec![format!("poly: {f}")],
                json!({
                    "partition": lambda, "p": hp.p, "q": hp.q, "theta": theta.to_string(),
                    "squared": squared, "polynomial": f.to_record(),
                }),
            ))
        }
        Command::Grid { lambda, hp } => {
            let h = hp.params();
            match lambda {
                Some(l) => {
                    let g = grid_point(l, h).map_err(|e| Failure::Usage(e.to_string()))?;
                    let coords: Vec<String> = g.coords.iter().map(|c| c.to_string()).collect();
                    Ok(Outcome::ok(
                        vec![format!("grid({l}) = {g}")],
                        json!({"lambda": l, "p": hp.p, "q": hp.q, "space": "a", "coords": coords}),
                    ))
                }
                None => {
                    let (rho, rho_h) = weyl_vectors(h);
                    let show = |v: &[superjack::Rational]| v.iter().map(|c| c.to_string()).collect::<Vec<_>>();
                    Ok(Outcome::ok(
                        vec![format!("rho = {rho}"), format!("rho_h = {rho_h}")],
                        json!({"p": hp.p, "q": hp.q, "rho": show(&rho.coords), "rho_h": show(&rho_h.coords)}),
                    ))
                }
            }
        }
        Command::Interp { mu, hp, mode } => {
            let h = hp.params();
            match interpolation_J(mu, h, *mode) {
                Ok(j) => {
                    let (text, result) = interp_outcome(&j, *mode, None);
                    Ok(Outcome::ok(text, result))
                }
                Err(InterpError::DegenerateNormalization { .. }) => {
                    let mut j = (*interpolation_J(mu, h, Mode::Top)?).clone();
                    j.degenerate_normalization = true;
                    let (text, result) = interp_outcome(&j, *mode, Some("degenerate"));
                    Ok(Outcome { text, result, code: DEGENERATE })
                }
                Err(e) => Err(e.into()),
            }
        }
        Command::Kmu { mu, p, q } => {
            let k = k_mu(mu);
            let mut text = vec![format!("k_{mu} = {k}")];
            let mut result = json!({"mu": mu, "k_mu": k});
            if let (Some(p), Some(q)) = (p, q) {
                let hp = Hook { p: *p, q: *q }.params();
                let d = derive_k(mu, hp)?;
                text.push(format!(
                    "derived at {hp}: e = {}, t = {}, k~ = {}, consistent = {}, top matches (-1/2)^|mu| = {}",
                    d.e_mu, d.t_mu, d.k_tilde, d.consistent, d.top_matches_claim
                ));
                result["derived"] = to_value(&d);
            }
            Ok(Outcome::ok(text, result))
        }
        Command::Expand { size, hp } => {
            let r = expansion_identity(*size, hp.params());
            let mut text: Vec<String> = r
                .entries
                .iter()
                .map(|e| format!("{} e={} C-(1;-1)={}", e.nu, e.e, e.hook_product))
                .collect();
            text.push(format!("orientation: {}", r.orientation));
            let code = if r.exact { 0 } else { FAILURE };
            Ok(Outcome { text, result: to_value(&r), code })
        }
        Command::Verify { property, p, q, max_size, window } => {
            let hps = match (p, q) {
                (Some(p), Some(q)) => vec![Hook { p: *p, q: *q }.params()],
                _ => VerifySpec::default_hps(),
            };
            let mut spec = VerifySpec::new(*property, hps, *max_size);
            spec.window = *window;
            let report = verify_properties(&spec);
            let code = report.exit_code();
            let mut text: Vec<String> = report.records.iter().map(|r| r.to_string()).collect();
            text.extend(report.notes.iter().cloned());
            text.push(format!(
                "summary: {} pass, {} fail, {} degenerate, exit {code}",
                report.count(superjack::interpbc::Status::Pass),
                report.count(superjack::interpbc::Status::Fail),
                report.count(superjack::interpbc::Status::Degenerate),
            ));
            let mut result = to_value(&report);
            result["exit_code"] = json!(code);
            Ok(Outcome { text, result, code: code as u8 })
        }
    }
}

fn subcommand_name(c: &Command) -> &'static str {
    match c {
        Command::Hooks { .. } => "hooks",
        Command::Jack { .. } => "jack",
        Command::Superjack { .. } => "superjack",
        Command::Grid { .. } => "grid",
        Command::Interp { .. } => "interp",
        Command::Kmu { .. } => "kmu",
        Command::Expand { .. } => "expand",
        Command::Verify { .. } => "verify",
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let cache = JackCache::global();
    if let Some(path) = &cli.cache {
        if let Err(e) = cache.load(path) {
            eprintln!("error: {e}");
            return ExitCode::from(USAGE);
        }
    }
    let args: Vec<String> = std::env::args().skip(1).collect();
    let outcome = run(&cli.command);
    if let Some(path) = &cli.cache {
        if let Err(e) = cache.save(path) {
            eprintln!("warning: {e}");
        }
    }
    match outcome {
        Ok(o) => {
            match cli.format {
                Format::Text => {
                    for line in &o.text {
                        println!("{line}");
                    }
                }
                Format::Structured => {
                    let doc = json!({
                        "tool": "superjack",
                        "version": env!("CARGO_PKG_VERSION"),
                        "invocation": {"subcommand": subcommand_name(&cli.command), "args": args},
                        "result": o.result,
                    });
                    println!("{}", serde_json::to_string_pretty(&doc).expect("serializable"));
                }
            }
            ExitCode::from(o.code)
        }
        Err(Failure::Usage(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(USAGE)
        }
        Err(Failure::Compute(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(FAILURE)
        }
    }
}
