//! The `dyckanyon` command: argument parsing and one handler per
//! subcommand, callable in-process through [`execute`].
//!
//! Every subcommand writes one JSON artifact (to `--out` or standard
//! output). Exit status is 0 on success, 2 when input or a verified
//! property is rejected, 3 when a resource guard refuses the job and 1 for
//! anything else.

mod config;
mod output;

use std::ffi::OsString;
use std::io::Write;
use std::path::{Path, PathBuf};

use anyhow::{bail, Context, Result};
use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::{Deserialize, Serialize};
use serde_json::{json, Value};

use dyckanyon::combinatorics::{
    catalan, enumerate_dyck_paths, enumerate_fib_strings, enumerate_standard_tableaux, fredkin_orbit,
    hook_dimension, DyckPath, Shape,
};
use dyckanyon::gatesynth::{
    exhaustive_search, random_weave_search, reference_sweep, rotated_generators, GateTarget, SearchConfig, U2,
};
use dyckanyon::spinchain::{expected_gap, full_spectrum, gap_formula, validate_params, ChainParams};
use dyckanyon::stability::{
    band_norm_experiment, bandwidth_for, gap_survival_mc, EntryDistribution, NoiseKind, NoiseSpec,
};
use dyckanyon::tl::{
    build_tableau_rep, check_x_conjugation_equivalence, fib_sequence_rep, fibonacci_fusion_rep, golden_ratio,
    jones_beta_for_unit_alpha, jones_braid, pauli_string_tl4, unitary_jones_params, verify_tl_relations, TLRep,
};
use dyckanyon::{Complex64, ErrorKind};

const DEFAULT_SEED: u64 = 7;
/// Largest list `enumerate` will print.
const MAX_LISTED: u64 = 1_000_000;

#[derive(Parser)]
#[command(name = "dyckanyon", version, about = "Temperley-Lieb representations, Fredkin chains and braid gate synthesis")]
#[command(args_override_self = true)]
struct Cli {
    /// Worker threads; defaults to the available parallelism. Results do not depend on it.
    #[arg(long, global = true, env = "DYCKANYON_WORKERS")]
    workers: Option<usize>,

    /// JSON file whose keys are long option names of the subcommand;
    /// options given on the command line take precedence.
    // Removed by `config::expand` before parsing; declared so `--help` lists it.
    #[allow(dead_code)]
    #[arg(long, global = true, value_name = "FILE")]
    config: Option<PathBuf>,

    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// List Dyck paths, standard tableaux, Fibonacci block strings or a Fredkin orbit.
    Enumerate(EnumerateArgs),
    /// Check Temperley-Lieb and braid relations for one representation.
    VerifyAlgebra(VerifyAlgebraArgs),
    /// Exact level table of the block chain.
    Spectrum(SpectrumArgs),
    /// Spectral gap from the closed form, optionally checked by enumeration.
    Gap(GapArgs),
    /// Noise experiments: gap survival on the chain or band-matrix norms.
    Noise(NoiseArgs),
    /// Search for a braid word approximating a gate.
    Synth(SynthArgs),
    /// Evaluate the reference gate words under every reading convention.
    VerifyReferenceGates(OutArgs),
}

#[derive(Args)]
struct OutArgs {
    /// Artifact path; standard output when omitted.
    #[arg(long)]
    out: Option<PathBuf>,
}

#[derive(Clone, Copy, ValueEnum, Serialize)]
#[serde(rename_all = "kebab-case")]
enum EnumerateKind {
    Dyck,
    Tableaux,
    Fib,
    Fredkin,
}

#[derive(Args)]
struct EnumerateArgs {
    #[arg(long, value_enum)]
    kind: EnumerateKind,
    /// Half-length for `dyck` and `fredkin`, block count for `fib`.
    #[arg(long)]
    n: Option<usize>,
    /// Two-row shape `r1,r2` for `tableaux`.
    #[arg(long)]
    shape: Option<Shape>,
    #[command(flatten)]
    out: OutArgs,
}

#[derive(Clone, Copy, ValueEnum, Serialize)]
#[serde(rename_all = "kebab-case")]
enum RepKind {
    Tableau,
    Fusion,
    Pauli,
    Fib,
}

/// Loop parameter: a number, or `golden` for φ at full precision.
#[derive(Clone, Copy, Debug)]
struct LoopParam(f64);

impl std::str::FromStr for LoopParam {
    type Err = String;
    fn from_str(s: &str) -> std::result::Result<Self, String> {
        match s.to_ascii_lowercase().as_str() {
            "golden" | "phi" => Ok(LoopParam(golden_ratio())),
            _ => s
                .parse::<f64>()
                .ok()
                .filter(|x| x.is_finite())
                .map(LoopParam)
                .ok_or_else(|| format!("expected a finite number or `golden`, got {s:?}")),
        }
    }
}

#[derive(Args)]
struct VerifyAlgebraArgs {
    #[arg(long, value_enum)]
    rep: RepKind,
    /// Number of strands.
    #[arg(long = "N", alias = "strands")]
    strands: Option<usize>,
    #[arg(long)]
    shape: Option<Shape>,
    #[arg(long)]
    x: Option<LoopParam>,
    #[arg(long, default_value_t = 1e-10)]
    tol: f64,
    #[command(flatten)]
    out: OutArgs,
}

#[derive(Args)]
struct SpectrumArgs {
    #[arg(long)]
    blocks: usize,
    /// `alpha1,alpha2,beta1,beta2,lambda`
    #[arg(long, allow_hyphen_values = true)]
    params: ChainParams,
    #[command(flatten)]
    out: OutArgs,
}

#[derive(Args)]
struct GapArgs {
    #[arg(long, allow_hyphen_values = true)]
    params: ChainParams,
    /// Also enumerate the spectrum of this many blocks and compare.
    #[arg(long)]
    blocks: Option<usize>,
    #[command(flatten)]
    out: OutArgs,
}

#[derive(Clone, Copy, ValueEnum, Serialize)]
#[serde(rename_all = "kebab-case")]
enum NoiseMode {
    Survival,
    BandNorm,
}

#[derive(Clone, Copy, ValueEnum, Serialize)]
#[serde(rename_all = "kebab-case")]
enum KindArg {
    Band,
    Sparse,
}

#[derive(Clone, Copy, ValueEnum)]
enum DistributionArg {
    Uniform,
    Gaussian,
}

impl From<DistributionArg> for EntryDistribution {
    fn from(d: DistributionArg) -> Self {
        match d {
            DistributionArg::Uniform => EntryDistribution::UniformSymmetric,
            DistributionArg::Gaussian => EntryDistribution::Gaussian,
        }
    }
}

#[derive(Args)]
struct NoiseArgs {
    #[arg(long, value_enum, default_value = "survival")]
    mode: NoiseMode,
    /// Chain length for `survival`.
    #[arg(long)]
    blocks: Option<usize>,
    #[arg(long, allow_hyphen_values = true)]
    params: Option<ChainParams>,
    /// Matrix dimension for `band-norm`.
    #[arg(long)]
    n: Option<usize>,
    #[arg(long, value_enum, default_value = "band")]
    kind: KindArg,
    /// Bandwidth exponent: `b = floor(n^gamma)`.
    #[arg(long, default_value_t = 0.7)]
    gamma: f64,
    /// Explicit bandwidth, overriding `--gamma` in survival mode.
    #[arg(long)]
    bandwidth: Option<usize>,
    /// Expected nonzeros per row for sparse noise.
    #[arg(long, default_value_t = 3.0)]
    nnz: f64,
    /// Entry variance.
    #[arg(long, default_value_t = 1.0)]
    v: f64,
    #[arg(long, value_enum, default_value = "gaussian")]
    distribution: DistributionArg,
    #[arg(long, default_value_t = 20)]
    trials: usize,
    #[arg(long, env = "DYCKANYON_SEED", default_value_t = DEFAULT_SEED)]
    seed: u64,
    #[command(flatten)]
    out: OutArgs,
}

#[derive(Args)]
struct SynthArgs {
    /// `H`, `X`/`NOT`, `S`, `T`, `I`, or a path to a JSON matrix file.
    #[arg(long)]
    target: String,
    #[arg(long, default_value_t = 10_000_000)]
    budget: u64,
    #[arg(long, default_value_t = 56)]
    max_length: u32,
    #[arg(long, env = "DYCKANYON_SEED", default_value_t = DEFAULT_SEED)]
    seed: u64,
    #[arg(long, default_value_t = 1e-2)]
    goal: f64,
    /// Weights of exponent magnitudes 0, 1, 2, ...; magnitude 0 ends a word.
    #[arg(long, value_delimiter = ',', default_values_t = [0.2, 0.2, 0.5, 0.2, 0.25])]
    weights: Vec<f64>,
    #[arg(long, default_value_t = 1 << 16)]
    batch_size: u64,
    /// Enumerate every word up to this braid length instead of sampling.
    #[arg(long)]
    exhaustive: Option<u32>,
    /// Cap on words visited by `--exhaustive`.
    #[arg(long)]
    node_budget: Option<u64>,
    #[command(flatten)]
    out: OutArgs,
}

/// Raised when a computation ran but the property it checks failed.
#[derive(Debug)]
struct CheckFailed(String);

impl std::fmt::Display for CheckFailed {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(&self.0)
    }
}

impl std::error::Error for CheckFailed {}

fn exit_code(err: &anyhow::Error) -> u8 {
    if let Some(e) = err.downcast_ref::<dyckanyon::Error>() {
        return match e.kind() {
            ErrorKind::Validation => 2,
            ErrorKind::Resource => 3,
        };
    }
    if err.downcast_ref::<CheckFailed>().is_some() {
        return 2;
    }
    1
}

/// Runs one invocation; `args[0]` is the program name. Artifacts without
/// `--out` go to `stdout`. Returns the process exit status.
pub fn execute<I, T>(args: I, stdout: &mut dyn Write) -> u8
where
    I: IntoIterator<Item = T>,
    T: Into<OsString>,
{
    let args = match config::expand(args.into_iter().map(Into::into).collect()) {
        Ok(a) => a,
        Err(e) => {
            eprintln!("error: {e:#}");
            return 2;
        }
    };
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let _ = e.print();
            return if e.use_stderr() { 2 } else { 0 };
        }
    };
    match run(cli, stdout) {
        Ok(()) => 0,
        Err(e) => {
            eprintln!("error: {e:#}");
            exit_code(&e)
        }
    }
}

fn run(cli: Cli, stdout: &mut dyn Write) -> Result<()> {
    if let Some(n) = cli.workers {
        if n == 0 {
            bail!(dyckanyon::Error::InvalidArgument("--workers must be positive".into()));
        }
        // A second in-process call keeps the pool it already has.
        let _ = rayon::ThreadPoolBuilder::new().num_threads(n).build_global();
    }
    match cli.command {
        Command::Enumerate(a) => enumerate(a, stdout),
        Command::VerifyAlgebra(a) => verify_algebra(a, stdout),
        Command::Spectrum(a) => spectrum(a, stdout),
        Command::Gap(a) => gap(a, stdout),
        Command::Noise(a) => noise(a, stdout),
        Command::Synth(a) => synth(a, stdout),
        Command::VerifyReferenceGates(a) => verify_reference_gates(a, stdout),
    }
}

fn finish<R: Serialize>(
    command: &str,
    input: Value,
    result: &R,
    out: Option<&Path>,
    stdout: &mut dyn Write,
) -> Result<()> {
    let text = output::render(command, &input, result)?;
    output::emit(out, &text, stdout)
}

fn require<T>(v: Option<T>, flag: &str, why: &str) -> Result<T> {
    v.ok_or_else(|| dyckanyon::Error::InvalidArgument(format!("{flag} is required {why}")).into())
}

fn guard_count(count: u64) -> Result<()> {
    if count > MAX_LISTED {
        bail!(dyckanyon::Error::Resource(format!("{count} items exceed the listing limit of {MAX_LISTED}")));
    }
    Ok(())
}

fn enumerate(a: EnumerateArgs, stdout: &mut dyn Write) -> Result<()> {
    let input = json!({ "kind": a.kind, "n": a.n, "shape": a.shape.map(|s| s.to_string()) });
    let (items, extra): (Vec<String>, Value) = match a.kind {
        EnumerateKind::Dyck | EnumerateKind::Fredkin => {
            let n = require(a.n, "--n", "for Dyck paths")?;
            let c = catalan(n as u32)?;
            guard_count(c)?;
            let paths = match a.kind {
                EnumerateKind::Dyck => enumerate_dyck_paths(n),
                _ => fredkin_orbit(&DyckPath::zigzag(n)),
            };
            let closes = paths.len() as u64 == c;
            (paths.iter().map(|p| p.to_string()).collect(), json!({ "catalan": c, "matches_catalan": closes }))
        }
        EnumerateKind::Tableaux => {
            let shape = require(a.shape, "--shape", "for tableaux")?;
            let h = hook_dimension(shape)?;
            guard_count(h)?;
            let ts = enumerate_standard_tableaux(shape);
            (ts.iter().map(|t| t.to_string()).collect(), json!({ "hook_dimension": h }))
        }
        EnumerateKind::Fib => {
            let n = require(a.n, "--n", "for block strings")?;
            if n > 28 {
                bail!(dyckanyon::Error::Resource(format!("{n} blocks exceed the listing limit")));
            }
            (enumerate_fib_strings(n).iter().map(|s| s.to_string()).collect(), json!({}))
        }
    };
    let result = json!({ "count": items.len(), "items": items, "checks": extra });
    finish("enumerate", input, &result, a.out.out.as_deref(), stdout)
}

fn default_shape(strands: usize) -> Result<Shape> {
    Ok(Shape::new(strands.div_ceil(2), strands / 2)?)
}

fn verify_algebra(a: VerifyAlgebraArgs, stdout: &mut dyn Write) -> Result<()> {
    let phi = golden_ratio();
    let x_arg = a.x.map(|l| l.0);
    let (rep, shape): (TLRep, Option<Shape>) = match a.rep {
        RepKind::Tableau => {
            let strands = require(a.strands, "--N", "for tableau representations")?;
            let shape = match a.shape {
                Some(s) => s,
                None => default_shape(strands)?,
            };
            (build_tableau_rep(strands, shape, x_arg.unwrap_or(phi))?, Some(shape))
        }
        RepKind::Fusion => {
            if x_arg.is_some_and(|x| x != phi) {
                bail!(dyckanyon::Error::InvalidArgument("the fusion representation exists only at x = golden".into()));
            }
            if a.strands.is_some_and(|n| n != 3) {
                bail!(dyckanyon::Error::InvalidArgument("the fusion representation has 3 strands".into()));
            }
            (fibonacci_fusion_rep().tl_rep(), None)
        }
        RepKind::Pauli => {
            if a.strands.is_some_and(|n| n != 4) {
                bail!(dyckanyon::Error::InvalidArgument("the Pauli-string representation has 4 strands".into()));
            }
            (pauli_string_tl4(x_arg.unwrap_or(phi)).as_rep(), None)
        }
        RepKind::Fib => {
            let strands = require(a.strands, "--N", "for the Fibonacci-string representation")?;
            (fib_sequence_rep(strands, x_arg.unwrap_or(phi))?, None)
        }
    };
    let x = rep.x();
    let tl = verify_tl_relations(&rep, a.tol);
    let (alpha, beta) = match unitary_jones_params(x) {
        Ok(ab) => ab,
        Err(_) => (Complex64::new(1.0, 0.0), jones_beta_for_unit_alpha(x)),
    };
    let braid = jones_braid(&rep, alpha, beta)?.check_relations(a.tol);
    let equivalence = matches!(a.rep, RepKind::Fusion).then(check_x_conjugation_equivalence);
    let input = json!({
        "rep": a.rep,
        "strands": rep.strands(),
        "shape": shape.map(|s| s.to_string()),
        "x": x,
        "tol": a.tol,
    });
    let result = json!({
        "dim": rep.dim(),
        "basis": rep.basis().iter().map(|b| b.to_string()).collect::<Vec<_>>(),
        "tl": tl,
        "jones": { "alpha": alpha, "beta": beta },
        "braid": braid,
        "x_conjugation": equivalence,
        "passed": tl.passed && braid.passed,
    });
    finish("verify-algebra", input, &result, a.out.out.as_deref(), stdout)?;
    if !(tl.passed && braid.passed) {
        bail!(CheckFailed(format!(
            "relations fail at tolerance {:e}: TL deviation {:e}, braid deviation {:e}",
            a.tol,
            tl.max_deviation(),
            braid.braid.max(braid.far_commutation)
        )));
    }
    Ok(())
}

fn spectrum(a: SpectrumArgs, stdout: &mut dyn Write) -> Result<()> {
    let report = full_spectrum(a.blocks, &a.params)?;
    let validity = validate_params(&a.params);
    let expected = validity.valid.then(|| expected_gap(a.blocks, &a.params)).transpose()?;
    let input = json!({ "blocks": a.blocks, "params": a.params });
    let result = json!({ "spectrum": report, "validity": validity, "expected_gap": expected });
    finish("spectrum", input, &result, a.out.out.as_deref(), stdout)
}

fn gap(a: GapArgs, stdout: &mut dyn Write) -> Result<()> {
    let formula = gap_formula(&a.params)?;
    let single_block = expected_gap(1, &a.params)?;
    let enumerated = match a.blocks {
        Some(n) => {
            let expected = expected_gap(n, &a.params)?;
            let spec = full_spectrum(n, &a.params)?;
            Some(json!({ "blocks": n, "expected_gap": expected, "spectrum_gap": spec.gap, "agrees": spec.gap == Some(expected) }))
        }
        None => None,
    };
    let input = json!({ "params": a.params, "blocks": a.blocks });
    let result = json!({
        "gap": formula,
        "single_block_gap": single_block,
        "adjacency_gap": -a.params.lambda,
        "validity": validate_params(&a.params),
        "enumeration": enumerated,
    });
    finish("gap", input, &result, a.out.out.as_deref(), stdout)
}

fn noise(a: NoiseArgs, stdout: &mut dyn Write) -> Result<()> {
    let distribution: EntryDistribution = a.distribution.into();
    match a.mode {
        NoiseMode::BandNorm => {
            let n = require(a.n, "--n", "in band-norm mode")?;
            let report = band_norm_experiment(n, a.gamma, a.v, a.trials, a.seed, distribution)?;
            let input = json!({
                "mode": a.mode, "n": n, "gamma": a.gamma, "v": a.v,
                "distribution": distribution, "trials": a.trials, "seed": a.seed,
            });
            finish("noise", input, &report, a.out.out.as_deref(), stdout)
        }
        NoiseMode::Survival => {
            let blocks = require(a.blocks, "--blocks", "in survival mode")?;
            let params = require(a.params, "--params", "in survival mode")?;
            if blocks > dyckanyon::spinchain::MAX_DIAGONAL_BLOCKS {
                bail!(dyckanyon::Error::Resource(format!("{blocks} blocks exceed the dense limit")));
            }
            let dim = 1usize << (4 * blocks);
            let kind = match a.kind {
                KindArg::Band => NoiseKind::Band { bandwidth: a.bandwidth.unwrap_or_else(|| bandwidth_for(dim, a.gamma)) },
                KindArg::Sparse => NoiseKind::SparseBounded { nonzeros_per_row: a.nnz },
            };
            let spec = NoiseSpec { kind, variance: a.v, distribution, seed: a.seed };
            let report = gap_survival_mc(blocks, &params, &spec, a.trials)?;
            let input = json!({
                "mode": a.mode, "blocks": blocks, "params": params, "spec": spec, "trials": a.trials,
            });
            finish("noise", input, &report, a.out.out.as_deref(), stdout)
        }
    }
}

/// A target read from disk: `{"name": ..., "matrix": [[[re, im], [re, im]], [[re, im], [re, im]]]}`.
#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct MatrixFile {
    name: Option<String>,
    matrix: [[Complex64; 2]; 2],
}

fn load_target(spec: &str) -> Result<GateTarget> {
    if let Ok(t) = GateTarget::by_name(spec) {
        return Ok(t);
    }
    let path = Path::new(spec);
    if !path.exists() {
        bail!(dyckanyon::Error::InvalidArgument(format!("{spec:?} is neither a gate name nor a file")));
    }
    let text = std::fs::read_to_string(path).with_context(|| format!("reading {}", path.display()))?;
    let file: MatrixFile = serde_json::from_str(&text)
        .map_err(|e| dyckanyon::Error::Parse(format!("{}: {e}", path.display())))?;
    let [[a, b], [c, d]] = file.matrix;
    let name = file.name.unwrap_or_else(|| spec.to_string());
    Ok(GateTarget::new(name, U2::new(a, b, c, d))?)
}

fn synth(a: SynthArgs, stdout: &mut dyn Write) -> Result<()> {
    let target = load_target(&a.target)?;
    let gens = rotated_generators();
    let (input, result) = match a.exhaustive {
        Some(max_length) => {
            let r = exhaustive_search(&target, max_length, &gens, a.node_budget)?;
            let input = json!({
                "target": target, "method": "exhaustive", "max_length": max_length, "node_budget": a.node_budget,
            });
            (input, r)
        }
        None => {
            let cfg = SearchConfig {
                max_length: a.max_length,
                exponent_weights: a.weights,
                candidates: a.budget,
                seed: a.seed,
                epsilon_goal: a.goal,
                batch_size: a.batch_size,
            };
            let r = random_weave_search(&target, &cfg, &gens)?;
            (json!({ "target": target, "method": "random-weave", "config": cfg }), r)
        }
    };
    result.check(&target, &gens)?;
    finish("synth", input, &result, a.out.out.as_deref(), stdout)
}

fn verify_reference_gates(a: OutArgs, stdout: &mut dyn Write) -> Result<()> {
    let sweep = reference_sweep();
    let summary: Vec<Value> = sweep
        .iter()
        .map(|v| {
            json!({
                "name": v.name,
                "braid_length": v.braid_length,
                "quoted_length": v.quoted_length,
                "quoted_epsilon": v.quoted_epsilon,
                "default_epsilon": v.default_epsilon,
                "any_match": v.any_match,
            })
        })
        .collect();
    let result = json!({ "summary": summary, "records": sweep });
    finish("verify-reference-gates", json!({}), &result, a.out.as_deref(), stdout)
}

#[cfg(test)]
mod tests;
