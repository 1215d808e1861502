//! Aggregation of per-curve proportionality reports, the dimension condition
//! and the asserted hypotheses into a single conclusion.

use anyhow::{Context, Result};

use relprop_core::{
    check_lie, rpc_check, rpc_check_ag, CurveNumerics, LieStatus, PolystablePiece, RpcInput,
    RpcReport, SlopeFiltration,
};

use crate::scenario::{resolve_lie_dim, AmbientKind, CurveSection, ScenarioDocument};

/// Overall conclusion of a verdict run.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Conclusion {
    /// All checks pass; special of Shimura type, conditional on the asserted
    /// hypotheses.
    SpecialShimuraTypeConditional,
    /// A proportionality level is a strict inequality.
    NotSpecialRpcFails,
    /// `dim H/K > dim Y`.
    NotSpecialLieFails,
    /// Checks pass but a required hypothesis is not asserted.
    InconclusiveMissingAssertions,
    /// A violated slope level or `dim H/K < dim Y`; the input cannot come
    /// from geometry.
    InconsistentInput,
}

impl Conclusion {
    pub fn label(self) -> &'static str {
        match self {
            Conclusion::SpecialShimuraTypeConditional => "special_shimura_type_conditional",
            Conclusion::NotSpecialRpcFails => "not_special_rpc_fails",
            Conclusion::NotSpecialLieFails => "not_special_lie_fails",
            Conclusion::InconclusiveMissingAssertions => "inconclusive_missing_assertions",
            Conclusion::InconsistentInput => "inconsistent_input",
        }
    }
}

#[derive(Clone, Debug, PartialEq)]
pub struct CurveVerdict {
    pub name: String,
    pub report: RpcReport,
}

#[derive(Clone, Debug, PartialEq)]
pub struct Verdict {
    pub per_curve: Vec<CurveVerdict>,
    pub dim_hk: u64,
    pub dim_y: u64,
    pub lie_status: LieStatus,
    pub big_asserted: bool,
    pub unipotent_asserted: bool,
    pub connected_union_asserted: bool,
    pub conclusion: Conclusion,
}

/// Builds the proportionality input for one curve under the given ambient
/// kind and runs the check.
pub fn curve_report(kind: AmbientKind, curve: &CurveSection) -> Result<RpcReport> {
    let numerics = CurveNumerics::new(curve.genus, curve.cusps);
    let report = match kind {
        AmbientKind::Ag => {
            let mut sub: [Option<PolystablePiece>; 3] = [None, None, None];
            for entry in &curve.sub_levels {
                sub[entry.level] = Some(PolystablePiece::new(entry.slope.0, entry.rank)?);
            }
            rpc_check_ag(numerics, sub)?
        }
        AmbientKind::General => {
            let levels = curve
                .ambient_levels
                .as_ref()
                .context("ambient_levels are required for kind `general`")?;
            let quotients = levels
                .iter()
                .map(|l| PolystablePiece::new(l.slope.0, l.rank))
                .collect::<relprop_core::Result<Vec<_>>>()?;
            let ambient = SlopeFiltration::new(quotients)?;
            let mut sub = vec![None; ambient.len()];
            for entry in &curve.sub_levels {
                sub[entry.level] = Some(PolystablePiece::new(entry.slope.0, entry.rank)?);
            }
            rpc_check(&RpcInput::new(numerics, ambient, sub)?)?
        }
        AmbientKind::HilbertSurface | AmbientKind::BallSurface => {
            let surface = kind.surface_kind().expect("surface kinds map to a geometry");
            let slope = surface.r_constant() * numerics.deg_log_tangent();
            let ambient = SlopeFiltration::new(vec![PolystablePiece::new(slope, 1)?])?;
            let mut sub = vec![None];
            for entry in &curve.sub_levels {
                sub[entry.level] = Some(PolystablePiece::new(entry.slope.0, entry.rank)?);
            }
            rpc_check(&RpcInput::new(numerics, ambient, sub)?)?
        }
    };
    Ok(report)
}

/// Runs every check in the scenario and aggregates the conclusion.
///
/// The bigness and unipotent-monodromy hypotheses are read from the asserted
/// flags and never computed; a passing conclusion is always conditional on
/// them.
pub fn run_verdict(doc: &ScenarioDocument) -> Result<Verdict> {
    let mut per_curve = Vec::with_capacity(doc.curves.len());
    for (idx, curve) in doc.curves.iter().enumerate() {
        let report = curve_report(doc.ambient.kind, curve)
            .with_context(|| format!("curves[{idx}] (`{}`)", curve.name))?;
        per_curve.push(CurveVerdict {
            name: curve.name.clone(),
            report,
        });
    }

    let dim_hk = resolve_lie_dim(&doc.lie)?;
    let dim_y = doc.subvariety.dim_y;
    let lie_status = check_lie(dim_hk, dim_y);

    let any_violated = per_curve.iter().any(|c| c.report.any_violated());
    let all_rpc = per_curve.iter().all(|c| c.report.rpc_holds);
    let big = doc.subvariety.asserted_big;
    let unipotent = doc.subvariety.asserted_unipotent_monodromy;

    let conclusion = if any_violated || lie_status == LieStatus::Inconsistent {
        Conclusion::InconsistentInput
    } else if !all_rpc {
        Conclusion::NotSpecialRpcFails
    } else if lie_status == LieStatus::Fails {
        Conclusion::NotSpecialLieFails
    } else if !(big && unipotent) {
        Conclusion::InconclusiveMissingAssertions
    } else {
        Conclusion::SpecialShimuraTypeConditional
    };

    Ok(Verdict {
        per_curve,
        dim_hk,
        dim_y,
        lie_status,
        big_asserted: big,
        unipotent_asserted: unipotent,
        connected_union_asserted: doc.subvariety.asserted_connected_union,
        conclusion,
    })
}
