//! Relative proportionality checks.
//!
//! The input is the slope shadow of a compactified special curve sitting
//! inside a candidate subvariety: the slope decomposition of the ambient
//! normal bundle and, aligned level by level with it, the graded quotients of
//! the induced filtration on the sub normal bundle. The check compares slopes
//! level by level and aggregates them into the combined inequality
//! `deg N_{C/Y} <= r * deg T_C(-log S_C)` with `r` computed from the data.

use crate::bundle::{frac, rat, CurveNumerics, PolystablePiece, Rational, SlopeFiltration};
use crate::error::{Error, Result};
use crate::sl2::Sl2Decomposition;
use num_traits::Zero;

/// Outcome of one slope comparison.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum LevelStatus {
    /// `mu_sub = mu_amb`; what proportionality requires.
    Equality,
    /// `mu_sub < mu_amb`; allowed by the inequality, so the curve is not
    /// relatively proportional in this subvariety.
    StrictInequality,
    /// `mu_sub > mu_amb`; never happens for geometric data, so the input is
    /// inconsistent. Reported, not errored.
    Violated,
    /// The sub filtration does not move at this level.
    EmptyLevel,
}

/// One row of the per-level comparison.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct LevelReport {
    pub level: usize,
    pub mu_sub: Option<Rational>,
    pub mu_amb: Rational,
    pub status: LevelStatus,
}

/// Full outcome of a relative proportionality check.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RpcReport {
    pub per_level: Vec<LevelReport>,
    /// `sum rank_sub(level) * mu_amb(level) / deg T_C(-log S_C)`.
    pub r_constant: Rational,
    /// `deg N_{C/Y}`.
    pub combined_lhs: Rational,
    /// `r_constant * deg T_C(-log S_C)`.
    pub combined_rhs: Rational,
    /// True iff every nonempty level is an equality.
    pub rpc_holds: bool,
}

impl RpcReport {
    pub fn any_violated(&self) -> bool {
        self.per_level
            .iter()
            .any(|l| l.status == LevelStatus::Violated)
    }
}

/// Slope data of one curve-in-subvariety configuration.
///
/// `sub[i]` is the graded quotient `N^i_{C/Y}/N^{i-1}_{C/Y}` refining ambient
/// level `i`; `None` marks a level where the induced filtration does not
/// move. Trailing levels may be omitted.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RpcInput {
    pub curve: CurveNumerics,
    pub ambient: SlopeFiltration,
    pub sub: Vec<Option<PolystablePiece>>,
}

impl RpcInput {
    pub fn new(
        curve: CurveNumerics,
        ambient: SlopeFiltration,
        sub: Vec<Option<PolystablePiece>>,
    ) -> Result<Self> {
        if sub.len() > ambient.len() {
            return Err(Error::TooManySubLevels {
                sub: sub.len(),
                ambient: ambient.len(),
            });
        }
        Ok(Self {
            curve,
            ambient,
            sub,
        })
    }
}

/// Per-level slope comparison and the combined inequality.
pub fn rpc_check(input: &RpcInput) -> Result<RpcReport> {
    check_levels(
        input.curve.deg_log_tangent(),
        &input.ambient,
        &input.sub,
    )
}

fn check_levels(
    deg_t: Rational,
    ambient: &SlopeFiltration,
    sub: &[Option<PolystablePiece>],
) -> Result<RpcReport> {
    if deg_t.is_zero() {
        return Err(Error::DegenerateCurve);
    }
    if sub.len() > ambient.len() {
        return Err(Error::TooManySubLevels {
            sub: sub.len(),
            ambient: ambient.len(),
        });
    }

    let mut per_level = Vec::with_capacity(ambient.len());
    let mut weighted_ambient = Rational::zero();
    let mut combined_lhs = Rational::zero();
    let mut rpc_holds = true;

    for (level, amb) in ambient.quotients().iter().enumerate() {
        let mu_amb = amb.slope();
        let report = match sub.get(level).copied().flatten() {
            None => LevelReport {
                level,
                mu_sub: None,
                mu_amb,
                status: LevelStatus::EmptyLevel,
            },
            Some(quotient) => {
                let mu_sub = quotient.slope();
                let status = match mu_sub.cmp(&mu_amb) {
                    std::cmp::Ordering::Equal => LevelStatus::Equality,
                    std::cmp::Ordering::Less => LevelStatus::StrictInequality,
                    std::cmp::Ordering::Greater => LevelStatus::Violated,
                };
                if status != LevelStatus::Equality {
                    rpc_holds = false;
                }
                weighted_ambient += mu_amb * rat(quotient.rank() as i64);
                combined_lhs += quotient.degree();
                LevelReport {
                    level,
                    mu_sub: Some(mu_sub),
                    mu_amb,
                    status,
                }
            }
        };
        per_level.push(report);
    }

    let r_constant = weighted_ambient / deg_t;
    Ok(RpcReport {
        per_level,
        r_constant,
        combined_lhs,
        combined_rhs: weighted_ambient,
        rpc_holds,
    })
}

/// The moduli-of-abelian-varieties specialization: the ambient filtration has
/// three levels of slopes `deg T_C`, `deg T_C / 2` and `0`.
///
/// `sub[i]` gives the quotient refining level `i` (`None` for an empty
/// level). Errors unless the curve is a Shimura-curve base.
pub fn rpc_check_ag(
    curve: CurveNumerics,
    sub: [Option<PolystablePiece>; 3],
) -> Result<RpcReport> {
    let deg_t = curve.deg_log_tangent();
    if deg_t.is_zero() {
        return Err(Error::DegenerateCurve);
    }
    if deg_t > Rational::zero() {
        return Err(Error::NotShimuraBase(curve.chi_log()));
    }
    let slopes = [deg_t, deg_t / rat(2), Rational::zero()];
    // Ambient quotient ranks never enter the slope comparison; placeholders
    // keep the filtration well formed.
    let quotients = slopes
        .iter()
        .zip(sub.iter())
        .map(|(&slope, s)| {
            let rank = s.map_or(1, |q| q.rank());
            PolystablePiece::new(slope, rank.max(1))
        })
        .collect::<Result<Vec<_>>>()?;
    let ambient = SlopeFiltration::new(quotients)?;
    check_levels(deg_t, &ambient, &sub)
}

/// The two surface geometries with closed-form proportionality constants.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum SurfaceKind {
    HilbertModular,
    BallQuotient,
}

impl SurfaceKind {
    /// Coefficient of `C^2` in the closed-form criterion.
    pub fn c2_coefficient(self) -> i64 {
        match self {
            SurfaceKind::HilbertModular => 2,
            SurfaceKind::BallQuotient => 3,
        }
    }

    /// The proportionality constant of the one-level general check.
    pub fn r_constant(self) -> Rational {
        match self {
            SurfaceKind::HilbertModular => rat(1),
            SurfaceKind::BallQuotient => frac(1, 2),
        }
    }
}

/// Result of the closed-form surface criterion.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct SurfaceCheck {
    /// `(K_Y + S_Y).C + 2 C^2` (Hilbert modular) or `... + 3 C^2` (ball quotient).
    pub lhs: i64,
    pub holds: bool,
}

/// Closed-form check from intersection numbers alone.
pub fn surface_check(kind: SurfaceKind, ks_dot_c: i64, c_squared: i64) -> SurfaceCheck {
    let lhs = ks_dot_c + kind.c2_coefficient() * c_squared;
    SurfaceCheck {
        lhs,
        holds: lhs == 0,
    }
}

/// The same surface criterion routed through the general one-level check.
///
/// Adjunction fixes the instance: `deg T_C(-log S_C) = -((K_Y+S_Y).C + C^2)`
/// and `deg N_{C/Y} = C^2`; the ambient level has slope `r * deg T_C`.
pub fn surface_from_general(
    kind: SurfaceKind,
    ks_dot_c: i64,
    c_squared: i64,
) -> Result<RpcReport> {
    let deg_t = rat(-(ks_dot_c + c_squared));
    if deg_t.is_zero() {
        return Err(Error::DegenerateCurve);
    }
    let ambient = SlopeFiltration::new(vec![PolystablePiece::new(
        kind.r_constant() * deg_t,
        1,
    )?])?;
    let sub = vec![Some(PolystablePiece::new(rat(c_squared), 1)?)];
    check_levels(deg_t, &ambient, &sub)
}

/// The splitting of `phi^* T_Y(-log S_Y)` under proportionality: the log
/// tangent line of the curve followed by the sub filtration quotients.
///
/// Errors unless `rpc_check` reports that proportionality holds.
pub fn splitting_report(input: &RpcInput) -> Result<Vec<PolystablePiece>> {
    let report = rpc_check(input)?;
    if !report.rpc_holds {
        return Err(Error::SplittingRequiresRpc);
    }
    let mut pieces = vec![PolystablePiece::new(input.curve.deg_log_tangent(), 1)?];
    pieces.extend(input.sub.iter().copied().flatten());
    Ok(pieces)
}

/// Whether a thickening component `source -> target (x) (N^i/N^{i-1})^v` is
/// slope-preserving: `mu(source) = mu(target) - mu(N^i/N^{i-1})`.
pub fn thickening_slope_check(
    source: &PolystablePiece,
    target: &PolystablePiece,
    normal_quotient_slope: Rational,
) -> bool {
    source.slope() == target.slope() - normal_quotient_slope
}

/// Rank of the infinitesimally fixed subspace of an even-weight tensor system
/// restricted to a special curve: the slope-zero Higgs kernel, which is the
/// unitary part of the decomposition.
pub fn fixed_part_rank(w: &Sl2Decomposition) -> u64 {
    w.unitary_rank()
}
