//! Command-line front end: Gaussian frontiers as CSV, the large-relay-power
//! limit, finite-alphabet bound evaluation and the acceptance suite.
//!
//! Exit codes: 0 success, 1 verification failure, 2 invalid input,
//! 3 no feasible point.

pub mod values;

use std::fmt::Write as _;
use std::fs;
use std::io::Write;
use std::path::{Path, PathBuf};

use anyhow::{anyhow, bail, Context, Result};
use clap::{Args, Parser, Subcommand};

use crbc::acceptance::{self, AcceptanceConfig, AnchorChannel};
use crbc::dmc::format::{parse_channel, parse_factors, FactorFile};
use crbc::dmc::{self, DmcSpec, RegionEvaluation};
use crbc::frontier::{
    trace_family, ChannelParams, Frontier, FrontierPoint, NcPolicy, RelayPower, Scheme, SweepConfig,
};
use crbc::gaussian::{
    corollary1_limit, gaussian_sato_bound, GaussianCrbcParams, SchemeParams, TwoSidedGaussianParams,
};

pub const EXIT_VERIFY_FAILED: u8 = 1;
pub const EXIT_INVALID: u8 = 2;
pub const EXIT_INFEASIBLE: u8 = 3;

#[derive(Debug, Parser)]
#[command(
    name = "crbc",
    version,
    about = "Secrecy equivocation regions of cooperative relay broadcast channels"
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Pareto frontier of a Gaussian scheme, as CSV.
    Region(RegionArgs),
    /// Largest user-2 equivocation as the relay power grows, and the outer bound.
    Limit(NoiseArgs),
    /// Evaluate a bound on a discrete memoryless channel.
    DmcEval(DmcEvalArgs),
    /// Run the acceptance suite.
    Verify(VerifyArgs),
}

#[derive(Debug, Args)]
pub struct NoiseArgs {
    /// Transmit power.
    #[arg(long = "P", allow_negative_numbers = true)]
    pub p: f64,
    /// Noise variance at user 1.
    #[arg(long = "N1", allow_negative_numbers = true)]
    pub n1: f64,
    /// Noise variance at user 2.
    #[arg(long = "N2", allow_negative_numbers = true)]
    pub n2: f64,
}

#[derive(Debug, Args)]
pub struct RegionArgs {
    /// prop1 .. prop5
    #[arg(long)]
    pub scheme: Scheme,
    #[command(flatten)]
    pub noise: NoiseArgs,
    /// Relay power ratios, one frontier per value (`1,10,100`).
    #[arg(long, allow_hyphen_values = true)]
    pub a: Option<String>,
    /// User 1 relay power ratios (prop5).
    #[arg(long, allow_hyphen_values = true)]
    pub a1: Option<String>,
    /// User 2 relay power ratios (prop5), paired with `--a1`.
    #[arg(long, allow_hyphen_values = true)]
    pub a2: Option<String>,
    /// Grid point counts `alpha[,beta[,gamma]]`.
    #[arg(long)]
    pub grid: Option<String>,
    /// DPC coefficient range `lo:hi`.
    #[arg(long, allow_hyphen_values = true)]
    pub gamma_range: Option<String>,
    /// Fixed compression noise instead of the per-point minimum.
    #[arg(long, allow_negative_numbers = true)]
    pub nc: Option<f64>,
    /// Write the CSV here instead of standard output.
    #[arg(long)]
    pub out: Option<PathBuf>,
}

#[derive(Debug, Args)]
pub struct DmcEvalArgs {
    #[arg(long)]
    pub channel: PathBuf,
    /// Factor file with the auxiliary distributions.
    #[arg(long)]
    pub dist: Option<PathBuf>,
    #[arg(long, value_parser = clap::value_parser!(u8).range(1..=5))]
    pub theorem: u8,
    /// Input distribution `pxx1` (theorem 3).
    #[arg(long, conflicts_with = "maximize")]
    pub input_dist: Option<PathBuf>,
    /// Maximize the theorem 3 bound over input distributions.
    #[arg(long)]
    pub maximize: bool,
    /// Simplex grid resolution for `--maximize`.
    #[arg(long, default_value_t = 16)]
    pub resolution: usize,
}

#[derive(Debug, Args)]
pub struct VerifyArgs {
    /// Run only criteria with this tag, id or name.
    #[arg(long)]
    pub filter: Option<String>,
    #[arg(long, allow_negative_numbers = true)]
    pub anchor_p: Option<f64>,
    #[arg(long, allow_negative_numbers = true)]
    pub anchor_a: Option<f64>,
    #[arg(long, allow_negative_numbers = true)]
    pub anchor_n1: Option<f64>,
    #[arg(long, allow_negative_numbers = true)]
    pub anchor_n2: Option<f64>,
}

/// Caps the worker pool from the `CRBC_THREADS` value, if any.
pub fn configure_threads(value: Option<&str>) -> Result<()> {
    let Some(v) = value else { return Ok(()) };
    let n: usize = v
        .trim()
        .parse()
        .ok()
        .filter(|&n| n > 0)
        .ok_or_else(|| anyhow!("CRBC_THREADS must be a positive integer, got `{v}`"))?;
    rayon::ThreadPoolBuilder::new()
        .num_threads(n)
        .build_global()
        .context("configuring worker threads")
}

/// Runs one command and returns its exit code. Errors mean invalid input.
pub fn run(cli: Cli, out: &mut dyn Write, err: &mut dyn Write) -> Result<u8> {
    match cli.command {
        Command::Region(args) => region(&args, out, err),
        Command::Limit(args) => limit(&args, out),
        Command::DmcEval(args) => dmc_eval(&args, out),
        Command::Verify(args) => verify(&args, out),
    }
}

/// Six decimals, without a sign on zero.
pub fn fmt6(x: f64) -> String {
    let s = format!("{x:.6}");
    if s == "-0.000000" {
        s[1..].to_string()
    } else {
        s
    }
}

fn list_flag(name: &str, value: &str) -> Result<Vec<f64>> {
    values::parse_list(value).map_err(|e| anyhow!("--{name}: {e}"))
}

fn sweep_config(args: &RegionArgs) -> Result<SweepConfig> {
    let mut config = SweepConfig::new(args.scheme);
    if let Some(g) = &args.grid {
        let counts = values::parse_grid(g).map_err(|e| anyhow!("--grid: {e}"))?;
        let slots = [
            &mut config.alpha_points,
            &mut config.beta_points,
            &mut config.gamma_points,
        ];
        for (slot, n) in slots.into_iter().zip(counts) {
            *slot = n;
        }
    }
    if let Some(r) = &args.gamma_range {
        config.gamma_range = values::parse_range(r).map_err(|e| anyhow!("--gamma-range: {e}"))?;
    }
    if let Some(nc) = args.nc {
        config.nc = NcPolicy::Explicit(nc);
    }
    config.validate()?;
    Ok(config)
}

fn families(args: &RegionArgs) -> Result<(ChannelParams, Vec<RelayPower>)> {
    let NoiseArgs { p, n1, n2 } = args.noise;
    if args.scheme.is_two_sided() {
        if args.a.is_some() {
            bail!("--a is not used by {}; give --a1 and --a2", args.scheme);
        }
        let (Some(a1), Some(a2)) = (&args.a1, &args.a2) else {
            bail!("{} needs --a1 and --a2", args.scheme);
        };
        let (a1, a2) = (list_flag("a1", a1)?, list_flag("a2", a2)?);
        if a1.len() != a2.len() {
            bail!("--a1 and --a2 must list the same number of values");
        }
        let base = TwoSidedGaussianParams::new(p, a1[0], a2[0], n1, n2)?;
        let powers = a1
            .into_iter()
            .zip(a2)
            .map(|(x, y)| RelayPower::Pair(x, y))
            .collect();
        Ok((ChannelParams::TwoSided(base), powers))
    } else {
        if args.a1.is_some() || args.a2.is_some() {
            bail!("--a1/--a2 are only used by prop5; give --a");
        }
        let a = list_flag(
            "a",
            args.a
                .as_deref()
                .ok_or_else(|| anyhow!("missing required flag --a"))?,
        )?;
        let base = GaussianCrbcParams::new(p, a[0], n1, n2)?;
        let powers = a.into_iter().map(RelayPower::Single).collect();
        Ok((ChannelParams::OneSided(base), powers))
    }
}

/// Drops points that are only dominated once the rates are rounded to the
/// printed precision. Input is sorted by `re1` ascending, `re2` descending.
fn printable(points: &[FrontierPoint]) -> Vec<&FrontierPoint> {
    let mut kept: Vec<&FrontierPoint> = Vec::new();
    for p in points {
        if kept.last().is_some_and(|q| fmt6(q.re1) == fmt6(p.re1)) {
            continue;
        }
        kept.push(p);
    }
    let mut out: Vec<&FrontierPoint> = Vec::new();
    for p in kept {
        if out.last().is_some_and(|q| fmt6(q.re2) == fmt6(p.re2)) {
            out.pop();
        }
        out.push(p);
    }
    out
}

/// CSV text for a set of frontier families.
pub fn frontier_csv(scheme: Scheme, families: &[Frontier]) -> String {
    let mut s = String::new();
    if scheme.is_two_sided() {
        s.push_str("scheme,a1,a2,alpha,beta1,beta2,nc1,nc2,re1,re2\n");
    } else {
        s.push_str("scheme,a,alpha,beta,gamma,nc,re1,re2\n");
    }
    for f in families {
        for pt in printable(&f.points) {
            let mut cols = vec![scheme.name().to_string()];
            match (pt.power, pt.params) {
                (
                    RelayPower::Pair(a1, a2),
                    SchemeParams::Prop5 {
                        alpha,
                        beta1,
                        beta2,
                        nc1,
                        nc2,
                    },
                ) => {
                    cols.extend([a1, a2, alpha, beta1, beta2, nc1, nc2].map(fmt6));
                }
                (RelayPower::Single(a), params) => {
                    cols.extend(
                        [
                            a,
                            params.alpha(),
                            params.beta(),
                            params.gamma(),
                            params.nc(),
                        ]
                        .map(fmt6),
                    );
                }
                _ => unreachable!("relay power always matches the scheme"),
            }
            cols.push(fmt6(pt.re1));
            cols.push(fmt6(pt.re2));
            s.push_str(&cols.join(","));
            s.push('\n');
        }
    }
    s
}

fn power_label(p: RelayPower) -> String {
    match p {
        RelayPower::Single(a) => format!("a={a}"),
        RelayPower::Pair(a1, a2) => format!("a1={a1} a2={a2}"),
    }
}

fn region(args: &RegionArgs, out: &mut dyn Write, err: &mut dyn Write) -> Result<u8> {
    let config = sweep_config(args)?;
    let (base, powers) = families(args)?;
    let fams = trace_family(&config, &base, &powers)?;
    if fams.iter().all(|f| f.points.is_empty()) {
        writeln!(
            err,
            "no feasible point for {} at any relay power",
            args.scheme
        )?;
        return Ok(EXIT_INFEASIBLE);
    }
    let csv = frontier_csv(args.scheme, &fams);
    let mut summary = String::new();
    for f in &fams {
        let re1 = f.points.iter().map(|p| p.re1).fold(0.0, f64::max);
        let re2 = f.points.iter().map(|p| p.re2).fold(0.0, f64::max);
        writeln!(
            summary,
            "{} {}: {} point(s), max re1 {}, max re2 {}",
            args.scheme,
            power_label(f.power),
            printable(&f.points).len(),
            fmt6(re1),
            fmt6(re2)
        )?;
    }
    match &args.out {
        Some(path) => {
            fs::write(path, csv).with_context(|| format!("writing {}", path.display()))?;
            out.write_all(summary.as_bytes())?;
        }
        None => {
            out.write_all(csv.as_bytes())?;
            err.write_all(summary.as_bytes())?;
        }
    }
    Ok(0)
}

fn limit(args: &NoiseArgs, out: &mut dyn Write) -> Result<u8> {
    let l = corollary1_limit(args.p, args.n1, args.n2)?;
    let s = gaussian_sato_bound(args.p, args.n1, args.n2)?;
    writeln!(out, "corollary1_limit = {}", fmt6(l))?;
    writeln!(out, "gaussian_sato_bound = {}", fmt6(s))?;
    Ok(0)
}

fn read(path: &Path) -> Result<String> {
    fs::read_to_string(path).with_context(|| format!("reading {}", path.display()))
}

fn load_channel(path: &Path) -> Result<DmcSpec> {
    parse_channel(&read(path)?).with_context(|| path.display().to_string())
}

fn load_factors(path: &Path) -> Result<FactorFile> {
    parse_factors(&read(path)?).with_context(|| path.display().to_string())
}

fn required_dist(args: &DmcEvalArgs) -> Result<FactorFile> {
    let path = args
        .dist
        .as_deref()
        .ok_or_else(|| anyhow!("theorem {} needs --dist", args.theorem))?;
    load_factors(path)
}

fn print_region(out: &mut dyn Write, e: &RegionEvaluation) -> Result<()> {
    let fields = [
        ("r1", e.r1),
        ("r2", e.r2),
        ("r_sum", e.r_sum),
        ("re1_bound", e.re1_bound),
        ("re2_bound", e.re2_bound),
        ("re1", e.re1),
        ("re2", e.re2),
    ];
    for (name, v) in fields {
        writeln!(out, "{name} = {}", fmt6(v))?;
    }
    for (i, s) in e.slacks.iter().enumerate() {
        let flag = if e.constraints_satisfied || *s <= 1e-9 {
            ""
        } else {
            "  VIOLATED"
        };
        writeln!(out, "slack{} = {}{flag}", i + 1, fmt6(*s))?;
    }
    let status = if e.constraints_satisfied {
        "satisfied"
    } else {
        "VIOLATED"
    };
    writeln!(out, "constraints = {status}")?;
    Ok(())
}

fn dmc_eval(args: &DmcEvalArgs, out: &mut dyn Write) -> Result<u8> {
    let channel = load_channel(&args.channel)?;
    match args.theorem {
        1 => print_region(
            out,
            &dmc::eval_theorem1(&channel, &required_dist(args)?.relay_factors()?)?,
        )?,
        4 => print_region(
            out,
            &dmc::eval_theorem4(&channel, &required_dist(args)?.jam_relay_factors()?)?,
        )?,
        5 => print_region(
            out,
            &dmc::eval_theorem5(&channel, &required_dist(args)?.two_sided_factors()?)?,
        )?,
        2 => {
            let pt = dmc::eval_theorem2_point(&channel, &required_dist(args)?.aux_joint()?)?;
            let fields = [
                ("re1_tilde", pt.re1_tilde),
                ("re2_tilde", pt.re2_tilde),
                ("re1_bar", pt.re1_bar),
                ("re2_bar", pt.re2_bar),
                ("r1", pt.r1),
                ("r2", pt.r2),
                ("re1_bound", pt.re1_bound()),
                ("re2_bound", pt.re2_bound()),
            ];
            for (name, v) in fields {
                writeln!(out, "{name} = {}", fmt6(v))?;
            }
        }
        _ => {
            if let Some(path) = &args.input_dist {
                let input = load_factors(path)?.input()?;
                writeln!(
                    out,
                    "re2_bound = {}",
                    fmt6(dmc::eval_theorem3(&channel, &input)?)
                )?;
            } else if args.maximize {
                let m = dmc::maximize_theorem3(&channel, args.resolution)?;
                writeln!(out, "re2_bound = {}", fmt6(m.value))?;
                let nx1 = m.argmax.shape()[1];
                for (k, p) in m.argmax.data().iter().enumerate() {
                    writeln!(out, "argmax x={} x1={} p={}", k / nx1, k % nx1, fmt6(*p))?;
                }
            } else {
                bail!("theorem 3 needs --input-dist or --maximize");
            }
        }
    }
    Ok(0)
}

fn verify(args: &VerifyArgs, out: &mut dyn Write) -> Result<u8> {
    let d = AnchorChannel::default();
    let config = AcceptanceConfig {
        anchor: AnchorChannel {
            p: args.anchor_p.unwrap_or(d.p),
            a: args.anchor_a.unwrap_or(d.a),
            n1: args.anchor_n1.unwrap_or(d.n1),
            n2: args.anchor_n2.unwrap_or(d.n2),
        },
    };
    let outcomes = acceptance::run(&config, args.filter.as_deref());
    if outcomes.is_empty() {
        bail!(
            "--filter `{}` matches no criterion",
            args.filter.as_deref().unwrap_or_default()
        );
    }
    for o in &outcomes {
        writeln!(out, "{o}")?;
    }
    let passed = outcomes.iter().filter(|o| o.passed).count();
    writeln!(out, "{passed}/{} criteria passed", outcomes.len())?;
    Ok(if passed == outcomes.len() {
        0
    } else {
        EXIT_VERIFY_FAILED
    })
}
