//! Command-line surface. Every command prints one JSON document on stdout and
//! human-readable diagnostics on stderr.
//!
//! Exit codes: 0 success, 1 verification failure, 2 usage or parse error,
//! 3 numerical failure, 4 domain-precondition failure.

use std::ffi::OsString;
use std::io::Write;
use std::path::{Path, PathBuf};

use clap::{Parser, Subcommand, ValueEnum};
use serde::{Deserialize, Serialize};
use serde_json::{json, Value};

use crate::analysis::{check_simple, ghz, s_rank_per_slot, w_state, RankOptions, Statistics, SymmetryClass};
use crate::error::Error;
use crate::measures::{convex_roof_upper, RoofOptions};
use crate::random::{random_product, random_tensor, seeded};
use crate::states::{seg_alpha, seg_bosonic, seg_fermionic, DensityOperator, PureState};
use crate::tensor::{antisymmetrize, symmetrize, Complex64, ComplexTensor};
use crate::verify::{dims_table, run_verify, VerifyOptions};
use crate::young::{enumerate_partitions, projector_alpha, CentralSymmetrizer, YoungTableau};

pub const EXIT_OK: i32 = 0;
pub const EXIT_VERIFY_FAILED: i32 = 1;
pub const EXIT_USAGE: i32 = 2;
pub const EXIT_NUMERICAL: i32 = 3;
pub const EXIT_DOMAIN: i32 = 4;

/// Environment variable overriding the default rank tolerance.
pub const TOL_ENV: &str = "PARASTAT_TOL";

/// `{"dim": n, "order": k, "re": [...], "im": [...]}`, row-major with slot 1
/// most significant. `im` may be omitted for real data.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct TensorFile {
    pub dim: usize,
    pub order: usize,
    pub re: Vec<f64>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub im: Option<Vec<f64>>,
}

impl TensorFile {
    pub fn from_tensor(u: &ComplexTensor) -> Self {
        Self {
            dim: u.dim(),
            order: u.order(),
            re: u.coeffs().iter().map(|c| c.re).collect(),
            im: Some(u.coeffs().iter().map(|c| c.im).collect()),
        }
    }

    pub fn to_tensor(&self) -> crate::Result<ComplexTensor> {
        let zeros;
        let im = match &self.im {
            Some(im) => im.as_slice(),
            None => {
                zeros = vec![0.0; self.re.len()];
                &zeros
            }
        };
        ComplexTensor::from_parts(self.dim, self.order, &self.re, im)
    }
}

/// `{"rows": [[1, 2], [3]]}` with 1-based box labels.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct TableauFile {
    pub rows: Vec<Vec<usize>>,
}

/// One-particle vectors for the Segre commands.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct FactorsFile {
    pub vectors: Vec<VectorEntry>,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct VectorEntry {
    pub re: Vec<f64>,
    #[serde(default)]
    pub im: Option<Vec<f64>>,
}

/// `{"dim": N, "re": [N·N], "im": [N·N]}`, row-major, optionally declaring
/// the ambient `n` and `k` with `N = n^k`.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct DensityFile {
    pub dim: usize,
    pub re: Vec<f64>,
    #[serde(default)]
    pub im: Option<Vec<f64>>,
    #[serde(default)]
    pub n: Option<usize>,
    #[serde(default)]
    pub k: Option<usize>,
}

#[derive(Parser, Debug)]
#[command(name = "parastat", version, about = "S-rank, simplicity checks and Segre maps for multipartite states")]
pub struct Cli {
    /// Relative singular-value tolerance for ranks (default 1e-9, or $PARASTAT_TOL).
    #[arg(long, global = true)]
    pub tol: Option<f64>,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, ValueEnum)]
pub enum StatsArg {
    Dist,
    Bose,
    Fermi,
    Alpha,
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, ValueEnum)]
pub enum GenKind {
    Ghz,
    W,
    Product,
    Bose,
    Fermi,
    Alpha,
    Random,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// S-rank of a tensor, with the unfolding rank of every slot.
    Srank { input: PathBuf },
    /// Simplicity report for a tensor of the given statistics.
    Check {
        #[arg(long, value_enum)]
        stats: StatsArg,
        #[arg(long)]
        tableau: Option<PathBuf>,
        input: PathBuf,
    },
    /// Image of one-particle vectors under a Segre map.
    Segre {
        #[arg(long, value_enum)]
        stats: StatsArg,
        #[arg(long)]
        tableau: Option<PathBuf>,
        /// Number of factors for the bosonic map.
        #[arg(long)]
        k: Option<usize>,
        /// Also write the tensor as a tensor file.
        #[arg(long)]
        out: Option<PathBuf>,
        factors: PathBuf,
    },
    /// Dimension table: f^λ, GL_n dimension and μ(λ) for every partition of k.
    Dims {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        k: usize,
    },
    /// Isotypic decomposition by the central Young symmetrizers.
    Decompose { input: PathBuf },
    /// Convex-roof upper bound for a density matrix.
    Roof {
        #[arg(long, value_enum)]
        stats: StatsArg,
        #[arg(long)]
        n: Option<usize>,
        #[arg(long)]
        k: Option<usize>,
        #[arg(long, default_value_t = 200)]
        restarts: usize,
        /// Refinement sweeps per restart.
        #[arg(long, default_value_t = 100)]
        steps: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        input: PathBuf,
    },
    /// Randomized verification of every identity family; exit 1 on any failure.
    Verify {
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long, default_value_t = 20)]
        trials: usize,
        #[arg(long, default_value_t = 4)]
        kmax: usize,
        #[arg(long, default_value_t = 4)]
        nmax: usize,
    },
    /// Generate a tensor file.
    Gen {
        #[arg(long, value_enum)]
        what: GenKind,
        #[arg(long)]
        n: usize,
        #[arg(long)]
        k: Option<usize>,
        #[arg(long)]
        tableau: Option<PathBuf>,
        #[arg(long, default_value_t = 0)]
        seed: u64,
    },
}

/// A failure with its exit code and stdout payload.
#[derive(Debug)]
struct Failure {
    code: i32,
    message: String,
}

impl Failure {
    fn usage(message: impl Into<String>) -> Self {
        Self {
            code: EXIT_USAGE,
            message: message.into(),
        }
    }
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        let code = match &e {
            Error::NonFinite(_) | Error::ZeroTensor | Error::Internal(_) => EXIT_NUMERICAL,
            Error::NotInClass(_)
            | Error::DependentFactors
            | Error::InvalidOperator(_)
            | Error::InvalidWeights(_)
            | Error::DimensionMismatch { .. }
            | Error::OrderMismatch { .. }
            | Error::NotSquare { .. } => EXIT_DOMAIN,
            Error::LengthMismatch { .. }
            | Error::InvalidPermutation(_)
            | Error::InvalidPartition(_)
            | Error::InvalidTableau(_)
            | Error::OutOfRange { .. }
            | Error::InvalidOption(_) => EXIT_USAGE,
        };
        let message = match &e {
            Error::NotInClass(_) => "not in symmetry class".to_string(),
            other => other.to_string(),
        };
        Self { code, message }
    }
}

type CmdResult = std::result::Result<(Value, i32), Failure>;

fn read_json<T: serde::de::DeserializeOwned>(path: &Path) -> std::result::Result<T, Failure> {
    let text = std::fs::read_to_string(path)
        .map_err(|e| Failure::usage(format!("cannot read {}: {e}", path.display())))?;
    serde_json::from_str(&text).map_err(|e| Failure::usage(format!("cannot parse {}: {e}", path.display())))
}

pub fn read_tensor(path: &Path) -> crate::Result<ComplexTensor> {
    let text = std::fs::read_to_string(path).map_err(|e| Error::InvalidOption(e.to_string()))?;
    let file: TensorFile = serde_json::from_str(&text).map_err(|e| Error::InvalidOption(e.to_string()))?;
    file.to_tensor()
}

pub fn write_tensor(path: &Path, u: &ComplexTensor) -> std::io::Result<()> {
    let text = serde_json::to_string_pretty(&TensorFile::from_tensor(u)).expect("serializable");
    std::fs::write(path, text + "\n")
}

fn load_tensor(path: &Path) -> std::result::Result<ComplexTensor, Failure> {
    let file: TensorFile = read_json(path)?;
    Ok(file.to_tensor()?)
}

fn load_tableau(path: Option<&Path>) -> std::result::Result<YoungTableau, Failure> {
    let path = path.ok_or_else(|| Failure::usage("--tableau is required for alpha statistics"))?;
    let file: TableauFile = read_json(path)?;
    Ok(YoungTableau::from_rows(file.rows)?)
}

fn rank_options(flag: Option<f64>) -> std::result::Result<RankOptions, Failure> {
    let tol = match flag {
        Some(t) => Some(t),
        None => match std::env::var(TOL_ENV) {
            Ok(s) => Some(
                s.trim()
                    .parse::<f64>()
                    .map_err(|_| Failure::usage(format!("{TOL_ENV}={s} is not a number")))?,
            ),
            Err(_) => None,
        },
    };
    match tol {
        Some(t) => Ok(RankOptions::new(t)?),
        None => Ok(RankOptions::default()),
    }
}

fn statistics(stats: StatsArg) -> std::result::Result<Statistics, Failure> {
    match stats {
        StatsArg::Dist => Ok(Statistics::Distinguishable),
        StatsArg::Bose => Ok(Statistics::Bosonic),
        StatsArg::Fermi => Ok(Statistics::Fermionic),
        StatsArg::Alpha => Err(Failure {
            code: EXIT_DOMAIN,
            message: "alpha statistics have no convex-roof functional".into(),
        }),
    }
}

fn cmd_srank(input: &Path, opts: &RankOptions) -> CmdResult {
    let u = load_tensor(input)?;
    let per_slot = s_rank_per_slot(&u, opts)?;
    if u.is_zero() {
        return Err(Error::ZeroTensor.into());
    }
    let s_rank = per_slot.iter().copied().max().unwrap_or(0);
    Ok((json!({ "s_rank": s_rank, "per_slot": per_slot }), EXIT_OK))
}

fn report_json(report: &crate::SimplicityReport) -> Value {
    let mut v = serde_json::to_value(report).expect("serializable");
    v["witness"] = match &report.witness {
        Some(w) => serde_json::to_value(w.one_based()).expect("serializable"),
        None => Value::Null,
    };
    v
}

fn cmd_check(stats: StatsArg, tableau: Option<&Path>, input: &Path, opts: &RankOptions) -> CmdResult {
    let class = match stats {
        StatsArg::Dist => SymmetryClass::Distinguishable,
        StatsArg::Bose => SymmetryClass::Bosonic,
        StatsArg::Fermi => SymmetryClass::Fermionic,
        StatsArg::Alpha => SymmetryClass::Alpha(load_tableau(tableau)?),
    };
    let u = load_tensor(input)?;
    let report = check_simple(&u, &class, opts)?;
    Ok((report_json(&report), EXIT_OK))
}

fn load_factors(path: &Path) -> std::result::Result<Vec<ComplexTensor>, Failure> {
    let file: FactorsFile = read_json(path)?;
    file.vectors
        .iter()
        .map(|v| {
            let im = v.im.clone().unwrap_or_else(|| vec![0.0; v.re.len()]);
            Ok(ComplexTensor::from_parts(v.re.len(), 1, &v.re, &im)?)
        })
        .collect()
}

fn cmd_segre(
    stats: StatsArg,
    tableau: Option<&Path>,
    k: Option<usize>,
    out: Option<&Path>,
    factors: &Path,
    opts: &RankOptions,
) -> CmdResult {
    let xs = load_factors(factors)?;
    let (state, class): (PureState, SymmetryClass) = match stats {
        StatsArg::Dist => (crate::states::seg_distinguishable(&xs)?, SymmetryClass::Distinguishable),
        StatsArg::Bose => {
            let k = k.ok_or_else(|| Failure::usage("--k is required for the bosonic Segre map"))?;
            if xs.len() != 1 {
                return Err(Failure::usage(format!("bosonic Segre map takes 1 vector, got {}", xs.len())));
            }
            (seg_bosonic(&xs[0], k)?, SymmetryClass::Bosonic)
        }
        StatsArg::Fermi => (seg_fermionic(&xs)?, SymmetryClass::Fermionic),
        StatsArg::Alpha => {
            let alpha = load_tableau(tableau)?;
            (seg_alpha(&alpha, &xs)?, SymmetryClass::Alpha(alpha))
        }
    };
    let report = check_simple(state.vector(), &class, opts)?;
    if let Some(path) = out {
        write_tensor(path, state.vector())
            .map_err(|e| Failure::usage(format!("cannot write {}: {e}", path.display())))?;
    }
    Ok((
        json!({
            "tensor": TensorFile::from_tensor(state.vector()),
            "norm": state.norm(),
            "simple": report.simple,
            "s_rank": report.s_rank,
        }),
        EXIT_OK,
    ))
}

fn cmd_dims(n: usize, k: usize) -> CmdResult {
    if n == 0 {
        return Err(Failure::usage("--n must be at least 1"));
    }
    let table = dims_table(n, k)?;
    Ok((serde_json::to_value(table).expect("serializable"), EXIT_OK))
}

fn cmd_decompose(input: &Path) -> CmdResult {
    let u = load_tensor(input)?;
    if u.order() == 0 {
        return Err(Failure::usage("order-0 tensors have no isotypic decomposition"));
    }
    let mut sum = ComplexTensor::zeros(u.dim(), u.order());
    let mut rows = Vec::new();
    for shape in enumerate_partitions(u.order())? {
        let part = CentralSymmetrizer::new(&shape).apply(&u)?;
        sum += &part;
        rows.push(json!({ "partition": shape, "norm_sq": part.norm_sqr() }));
    }
    let residual = (&sum - &u).norm();
    Ok((
        json!({ "norm_sq": u.norm_sqr(), "components": rows, "residual": residual }),
        EXIT_OK,
    ))
}

fn load_density(path: &Path) -> std::result::Result<(DensityOperator, Option<usize>, Option<usize>), Failure> {
    let file: DensityFile = read_json(path)?;
    let len = file.dim * file.dim;
    let im = file.im.clone().unwrap_or_else(|| vec![0.0; len]);
    if file.re.len() != len || im.len() != len {
        return Err(Error::LengthMismatch {
            expected: len,
            found: file.re.len().max(im.len()),
        }
        .into());
    }
    let entries: Vec<Complex64> = file.re.iter().zip(&im).map(|(&r, &i)| Complex64::new(r, i)).collect();
    if let Some(pos) = entries.iter().position(|c| !c.is_finite()) {
        return Err(Error::NonFinite(pos).into());
    }
    let m = crate::matrix::ComplexMatrix::from_row_slice(file.dim, file.dim, &entries);
    Ok((DensityOperator::new(m)?, file.n, file.k))
}

#[allow(clippy::too_many_arguments)]
fn cmd_roof(
    stats: StatsArg,
    n: Option<usize>,
    k: Option<usize>,
    restarts: usize,
    steps: usize,
    seed: u64,
    input: &Path,
    rank: &RankOptions,
) -> CmdResult {
    let stats = statistics(stats)?;
    let (rho, file_n, file_k) = load_density(input)?;
    let n = n.or(file_n).ok_or_else(|| Failure::usage("the one-particle dimension n is required"))?;
    let k = k.or(file_k).ok_or_else(|| Failure::usage("the particle number k is required"))?;
    let opts = RoofOptions {
        restarts,
        steps,
        seed,
        rank: *rank,
        ..RoofOptions::default()
    };
    let est = convex_roof_upper(&rho, n, k, stats, &opts)?;
    let states: Vec<TensorFile> = est.states.iter().map(TensorFile::from_tensor).collect();
    Ok((
        json!({
            "upper_bound": est.value,
            "weights": est.weights,
            "states": states,
            "iterations": est.iterations,
            "converged": est.converged,
            "trace": est.trace,
        }),
        EXIT_OK,
    ))
}

fn cmd_verify(opts: VerifyOptions, err: &mut dyn Write) -> CmdResult {
    let summary = run_verify(&opts);
    for w in &summary.warnings {
        let _ = writeln!(err, "warning: {w}");
    }
    for s in &summary.suites {
        let _ = writeln!(
            err,
            "{} {} ({} checks, {} failures)",
            if s.passed { "PASS" } else { "FAIL" },
            s.name,
            s.checks,
            s.failures
        );
    }
    let code = if summary.passed { EXIT_OK } else { EXIT_VERIFY_FAILED };
    Ok((serde_json::to_value(summary).expect("serializable"), code))
}

fn cmd_gen(what: GenKind, n: usize, k: Option<usize>, tableau: Option<&Path>, seed: u64) -> CmdResult {
    if n == 0 {
        return Err(Failure::usage("--n must be at least 1"));
    }
    let mut rng = seeded(seed);
    let need_k = || k.ok_or_else(|| Failure::usage("--k is required"));
    let u = match what {
        GenKind::Ghz => ghz(n, need_k()?)?,
        GenKind::W => w_state(n, need_k()?)?,
        GenKind::Product => random_product(&mut rng, n, need_k()?),
        GenKind::Random => random_tensor(&mut rng, n, need_k()?),
        GenKind::Bose => {
            let k = need_k()?;
            symmetrize(&random_tensor(&mut rng, n, k))
        }
        GenKind::Fermi => {
            let k = need_k()?;
            if k > n {
                return Err(Failure::usage(format!("no nonzero antisymmetric tensors of order {k} in dimension {n}")));
            }
            antisymmetrize(&random_tensor(&mut rng, n, k))
        }
        GenKind::Alpha => {
            let alpha = load_tableau(tableau)?;
            if let Some(k) = k {
                if k != alpha.size() {
                    return Err(Failure::usage(format!("--k {k} does not match the tableau size {}", alpha.size())));
                }
            }
            if alpha.num_rows() > n {
                return Err(Failure::usage(format!("H^{alpha} is zero in dimension {n}")));
            }
            projector_alpha(&alpha, &random_tensor(&mut rng, n, alpha.size()))?
        }
    };
    Ok((serde_json::to_value(TensorFile::from_tensor(&u)).expect("serializable"), EXIT_OK))
}

fn dispatch(cli: Cli, err: &mut dyn Write) -> CmdResult {
    let rank = rank_options(cli.tol)?;
    match cli.command {
        Command::Srank { input } => cmd_srank(&input, &rank),
        Command::Check { stats, tableau, input } => cmd_check(stats, tableau.as_deref(), &input, &rank),
        Command::Segre {
            stats,
            tableau,
            k,
            out,
            factors,
        } => cmd_segre(stats, tableau.as_deref(), k, out.as_deref(), &factors, &rank),
        Command::Dims { n, k } => cmd_dims(n, k),
        Command::Decompose { input } => cmd_decompose(&input),
        Command::Roof {
            stats,
            n,
            k,
            restarts,
            steps,
            seed,
            input,
        } => cmd_roof(stats, n, k, restarts, steps, seed, &input, &rank),
        Command::Verify {
            seed,
            trials,
            kmax,
            nmax,
        } => {
            if kmax == 0 || kmax > 6 || nmax == 0 || nmax > 6 {
                return Err(Failure::usage("--kmax and --nmax must lie in 1..=6"));
            }
            let opts = VerifyOptions {
                seed,
                trials,
                kmax,
                nmax,
                rank,
            };
            cmd_verify(opts, err)
        }
        Command::Gen {
            what,
            n,
            k,
            tableau,
            seed,
        } => cmd_gen(what, n, k, tableau.as_deref(), seed),
    }
}

/// Parses `args` (including the program name), runs the command and returns
/// the exit code, writing the JSON result to `out` and diagnostics to `err`.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_USAGE } else { EXIT_OK };
            let _ = if e.use_stderr() {
                write!(err, "{e}")
            } else {
                write!(out, "{e}")
            };
            return code;
        }
    };
    match dispatch(cli, err) {
        Ok((value, code)) => {
            let _ = writeln!(out, "{}", serde_json::to_string_pretty(&value).expect("serializable"));
            code
        }
        Err(f) => {
            let _ = writeln!(err, "error: {}", f.message);
            let _ = writeln!(out, "{}", json!({ "error": f.message }));
            f.code
        }
    }
}

/// Entry point for the binary.
pub fn main_with_args<I, T>(args: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let stdout = std::io::stdout();
    let stderr = std::io::stderr();
    run(args, &mut stdout.lock(), &mut stderr.lock())
}
