use std::fs;
use std::path::PathBuf;
use std::process::ExitCode;

use anyhow::{bail, ensure, Context, Result};
use clap::{Parser, Subcommand, ValueEnum};
use serde::Serialize;

use relprop_cli::report::{self, BoxDoc, LieDoc, RpcReportDoc, Sl2Doc, SurfaceDoc, VerdictDoc};
use relprop_cli::scenario::{
    hermitian_family, parse_rational, parse_rpc_document, parse_scenario, AmbientKind,
    CurveSection, FamilyName,
};
use relprop_cli::verdict::{curve_report, run_verdict, Conclusion};
use relprop_core::{
    check_lie, enumerate_box, rpc_check_ag, surface_check, surface_from_general, CurveNumerics,
    Error, HodgeVector, LieStatus, Pairing, PolystablePiece, RpcReport, Sl2Decomposition,
    SurfaceKind,
};

/// Exact-arithmetic checks for configurations of compactified special curves
/// inside a candidate subvariety: slope proportionality per level, surface
/// closed forms, representation decompositions and Lie dimension counts,
/// plus an aggregate verdict over a scenario document.
#[derive(Parser)]
#[command(name = "relprop", version)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// General per-level proportionality check from a TOML document
    Rpc {
        /// Input document (schema_version, genus, cusps, ambient_levels, sub_levels)
        file: PathBuf,
    },
    /// Three-level check for moduli of principally polarized abelian varieties
    RpcAg {
        #[arg(long)]
        genus: u32,
        #[arg(long)]
        cusps: u32,
        /// Three comma-separated levels, each `rank:slope` or `0` for an empty level
        #[arg(long, allow_hyphen_values = true)]
        levels: String,
    },
    /// Closed-form surface criteria from intersection numbers
    Surface {
        #[arg(long, value_enum)]
        kind: SurfaceArg,
        /// (K_Y + S_Y) . C
        #[arg(long, allow_hyphen_values = true)]
        ksc: i64,
        /// C^2
        #[arg(long, allow_hyphen_values = true)]
        c2: i64,
    },
    /// Decompose a tensor power of a local system and report its unitary rank
    Sl2 {
        /// Base decomposition as comma-separated `index:rank` pairs, e.g. `1:1,0:2`
        #[arg(long)]
        rep: String,
        /// Covariant tensor exponent
        #[arg(long, default_value_t = 1)]
        tensor_i: u32,
        /// Dual tensor exponent
        #[arg(long, default_value_t = 0)]
        tensor_j: u32,
    },
    /// Enumerate the morphism index set for an ambient weight
    Box {
        #[arg(long)]
        weight: u32,
    },
    /// Lie-algebra dimensions, the Hermitian-type test and the dimension condition
    Lie {
        /// Weight of the Hodge structure (hodge route, with --hodge and --group)
        #[arg(long)]
        weight: Option<u32>,
        /// Comma-separated Hodge numbers, `h^{k,0}` down to `h^{0,k}`
        #[arg(long)]
        hodge: Option<String>,
        #[arg(long, value_enum)]
        group: Option<GroupArg>,
        /// Closed-form family (family route, with --params)
        #[arg(long, value_enum)]
        family: Option<FamilyArg>,
        /// Comma-separated family parameters
        #[arg(long, value_delimiter = ',')]
        params: Option<Vec<u32>>,
        /// Compare dim H/K against this subvariety dimension
        #[arg(long)]
        dim_y: Option<u64>,
    },
    /// Run every check in a scenario document and aggregate a verdict
    Verdict {
        /// Scenario document
        file: PathBuf,
    },
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum SurfaceArg {
    #[value(alias = "hilbert_modular")]
    Hilbert,
    #[value(alias = "ball_quotient")]
    Ball,
}

impl From<SurfaceArg> for SurfaceKind {
    fn from(arg: SurfaceArg) -> Self {
        match arg {
            SurfaceArg::Hilbert => SurfaceKind::HilbertModular,
            SurfaceArg::Ball => SurfaceKind::BallQuotient,
        }
    }
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum GroupArg {
    Symplectic,
    Orthogonal,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum FamilyArg {
    Sp,
    Su,
    So2n,
    #[value(name = "so_star")]
    SoStar,
}

impl From<FamilyArg> for FamilyName {
    fn from(arg: FamilyArg) -> Self {
        match arg {
            FamilyArg::Sp => FamilyName::Sp,
            FamilyArg::Su => FamilyName::Su,
            FamilyArg::So2n => FamilyName::So2n,
            FamilyArg::SoStar => FamilyName::SoStar,
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli.command) {
        Ok(code) => code,
        Err(err) => {
            eprintln!("error: {err:#}");
            ExitCode::from(2)
        }
    }
}

fn emit<T: Serialize>(doc: &T) -> Result<()> {
    println!("{}", report::render(doc)?);
    Ok(())
}

/// Exit-code contract: 0 = the checked property holds, 1 = it fails on
/// well-formed input, 2 = inconsistent or invalid input.
fn rpc_exit(report: &RpcReport) -> ExitCode {
    if report.any_violated() {
        ExitCode::from(2)
    } else if report.rpc_holds {
        ExitCode::SUCCESS
    } else {
        ExitCode::from(1)
    }
}

fn run(command: Command) -> Result<ExitCode> {
    match command {
        Command::Rpc { file } => {
            let text = fs::read_to_string(&file)
                .with_context(|| format!("cannot read {}", file.display()))?;
            let doc = parse_rpc_document(&text)?;
            let curve = CurveSection {
                name: "rpc".into(),
                genus: doc.genus,
                cusps: doc.cusps,
                ambient_levels: Some(doc.ambient_levels),
                sub_levels: doc.sub_levels,
            };
            let report = curve_report(AmbientKind::General, &curve)?;
            emit(&RpcReportDoc::from(&report))?;
            eprintln!(
                "rpc: {} (r = {})",
                if report.rpc_holds { "holds" } else { "fails" },
                report.r_constant
            );
            Ok(rpc_exit(&report))
        }
        Command::RpcAg {
            genus,
            cusps,
            levels,
        } => {
            let sub = parse_ag_levels(&levels)?;
            let report = rpc_check_ag(CurveNumerics::new(genus, cusps), sub)?;
            emit(&RpcReportDoc::from(&report))?;
            eprintln!(
                "rpc-ag: {} (r = {}, combined {} vs {})",
                if report.rpc_holds { "holds" } else { "fails" },
                report.r_constant,
                report.combined_lhs,
                report.combined_rhs
            );
            Ok(rpc_exit(&report))
        }
        Command::Surface { kind, ksc, c2 } => {
            let kind: SurfaceKind = kind.into();
            let check = surface_check(kind, ksc, c2);
            let general = match surface_from_general(kind, ksc, c2) {
                Ok(report) => Some(report),
                Err(Error::DegenerateCurve) => None,
                Err(e) => return Err(e.into()),
            };
            emit(&SurfaceDoc::new(kind, ksc, c2, check, general.as_ref()))?;
            eprintln!(
                "surface {}: lhs = {}, {}",
                report::surface_kind_label(kind),
                check.lhs,
                if check.holds { "holds" } else { "fails" }
            );
            Ok(if check.holds {
                ExitCode::SUCCESS
            } else {
                ExitCode::from(1)
            })
        }
        Command::Sl2 {
            rep,
            tensor_i,
            tensor_j,
        } => {
            let base = parse_sl2(&rep)?;
            let result = base.tensor_power(tensor_i, tensor_j);
            emit(&Sl2Doc::from(&result))?;
            eprintln!(
                "sl2: total rank {}, unitary rank {}",
                result.total_rank(),
                result.unitary_rank()
            );
            Ok(ExitCode::SUCCESS)
        }
        Command::Box { weight } => {
            let tuples = enumerate_box(weight);
            eprintln!("box: {} tuples at weight {weight}", tuples.len());
            emit(&BoxDoc::new(weight, tuples))?;
            Ok(ExitCode::SUCCESS)
        }
        Command::Lie {
            weight,
            hodge,
            group,
            family,
            params,
            dim_y,
        } => {
            let mut doc = match (weight, hodge, group, family, params) {
                (Some(weight), Some(hodge), Some(group), None, None) => {
                    let numbers = parse_u64_list(&hodge)?;
                    let v = HodgeVector::new(weight as i64, numbers)?;
                    let pairing = match group {
                        GroupArg::Symplectic => Pairing::Symplectic,
                        GroupArg::Orthogonal => Pairing::Orthogonal,
                    };
                    LieDoc::from_dims(&v.lie_hodge_dims(pairing)?)
                }
                (None, None, None, Some(family), Some(params)) => {
                    let family = hermitian_family(family.into(), &params)?;
                    LieDoc::from_family(family.dim()?)
                }
                _ => bail!(
                    "provide either --weight/--hodge/--group or --family/--params, not a mixture"
                ),
            };
            let mut exit = ExitCode::SUCCESS;
            if let Some(dim_y) = dim_y {
                let status = check_lie(doc.dim_hk, dim_y);
                doc = doc.with_dim_y(dim_y, status);
                exit = match status {
                    LieStatus::Equality => ExitCode::SUCCESS,
                    LieStatus::Fails => ExitCode::from(1),
                    LieStatus::Inconsistent => ExitCode::from(2),
                };
            }
            emit(&doc)?;
            eprintln!(
                "lie: dim H/K = {}{}",
                doc.dim_hk,
                doc.lie_status
                    .map(|s| format!(", vs dim Y: {s}"))
                    .unwrap_or_default()
            );
            Ok(exit)
        }
        Command::Verdict { file } => {
            let text = fs::read_to_string(&file)
                .with_context(|| format!("cannot read {}", file.display()))?;
            let scenario = parse_scenario(&text)?;
            let verdict = run_verdict(&scenario)?;
            emit(&VerdictDoc::from(&verdict))?;
            for curve in &verdict.per_curve {
                eprintln!(
                    "curve {}: rpc {} (r = {})",
                    curve.name,
                    if curve.report.rpc_holds {
                        "holds"
                    } else {
                        "fails"
                    },
                    curve.report.r_constant
                );
            }
            eprintln!(
                "lie: dim H/K = {} vs dim Y = {} ({})",
                verdict.dim_hk,
                verdict.dim_y,
                report::lie_label(verdict.lie_status)
            );
            eprintln!("conclusion: {}", verdict.conclusion.label());
            Ok(match verdict.conclusion {
                Conclusion::SpecialShimuraTypeConditional => ExitCode::SUCCESS,
                Conclusion::NotSpecialRpcFails
                | Conclusion::NotSpecialLieFails
                | Conclusion::InconclusiveMissingAssertions => ExitCode::from(1),
                Conclusion::InconsistentInput => ExitCode::from(2),
            })
        }
    }
}

/// Parses `--levels` for the three-level check: `rank:slope` per level, `0`
/// for a level where the sub filtration does not move.
fn parse_ag_levels(s: &str) -> Result<[Option<PolystablePiece>; 3]> {
    let parts: Vec<&str> = s.split(',').collect();
    ensure!(
        parts.len() == 3,
        "--levels takes exactly three comma-separated entries, got {}",
        parts.len()
    );
    let mut out = [None, None, None];
    for (i, part) in parts.iter().enumerate() {
        let part = part.trim();
        if part == "0" || part == "_" {
            continue;
        }
        let (rank, slope) = part
            .split_once(':')
            .with_context(|| format!("level {i}: expected `rank:slope` or `0`, got `{part}`"))?;
        let rank: u64 = rank
            .trim()
            .parse()
            .with_context(|| format!("level {i}: bad rank `{rank}`"))?;
        ensure!(rank >= 1, "level {i}: rank must be positive (use `0` for an empty level)");
        let slope = parse_rational(slope).with_context(|| format!("level {i}"))?;
        out[i] = Some(PolystablePiece::new(slope, rank)?);
    }
    Ok(out)
}

/// Parses `--rep`: comma-separated `index:rank` pairs.
fn parse_sl2(s: &str) -> Result<Sl2Decomposition> {
    let mut components = Vec::new();
    for part in s.split(',') {
        let part = part.trim();
        if part.is_empty() {
            continue;
        }
        let (index, rank) = part
            .split_once(':')
            .with_context(|| format!("expected `index:rank`, got `{part}`"))?;
        let index: u32 = index
            .trim()
            .parse()
            .with_context(|| format!("bad symmetric-power index `{index}`"))?;
        let rank: u64 = rank
            .trim()
            .parse()
            .with_context(|| format!("bad rank `{rank}`"))?;
        components.push((index, rank));
    }
    Ok(Sl2Decomposition::from_components(components))
}

fn parse_u64_list(s: &str) -> Result<Vec<u64>> {
    s.split(',')
        .map(|part| {
            part.trim()
                .parse::<u64>()
                .with_context(|| format!("bad entry `{part}` in list"))
        })
        .collect()
}
