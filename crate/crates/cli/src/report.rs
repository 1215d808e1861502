//! Machine-readable report documents written to standard output.
//!
//! Reports are JSON with a fixed field order and rationals rendered as
//! `"p/q"` strings, so identical inputs produce byte-identical output.

use serde::Serialize;

use relprop_core::{
    BoxTuple, LevelStatus, LieHodgeDims, LieStatus, RpcReport, Sl2Decomposition, SurfaceCheck,
    SurfaceKind,
};

use crate::verdict::Verdict;

pub fn status_label(status: LevelStatus) -> &'static str {
    match status {
        LevelStatus::Equality => "equality",
        LevelStatus::StrictInequality => "strict_inequality",
        LevelStatus::Violated => "violated",
        LevelStatus::EmptyLevel => "empty_level",
    }
}

pub fn lie_label(status: LieStatus) -> &'static str {
    match status {
        LieStatus::Equality => "lie_equality",
        LieStatus::Fails => "lie_fails",
        LieStatus::Inconsistent => "inconsistent",
    }
}

pub fn surface_kind_label(kind: SurfaceKind) -> &'static str {
    match kind {
        SurfaceKind::HilbertModular => "hilbert_modular",
        SurfaceKind::BallQuotient => "ball_quotient",
    }
}

#[derive(Debug, Serialize)]
pub struct LevelDoc {
    pub level: usize,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub mu_sub: Option<String>,
    pub mu_amb: String,
    pub status: &'static str,
}

#[derive(Debug, Serialize)]
pub struct RpcReportDoc {
    pub per_level: Vec<LevelDoc>,
    pub r_constant: String,
    pub combined_lhs: String,
    pub combined_rhs: String,
    pub rpc_holds: bool,
}

impl From<&RpcReport> for RpcReportDoc {
    fn from(report: &RpcReport) -> Self {
        RpcReportDoc {
            per_level: report
                .per_level
                .iter()
                .map(|l| LevelDoc {
                    level: l.level,
                    mu_sub: l.mu_sub.map(|m| m.to_string()),
                    mu_amb: l.mu_amb.to_string(),
                    status: status_label(l.status),
                })
                .collect(),
            r_constant: report.r_constant.to_string(),
            combined_lhs: report.combined_lhs.to_string(),
            combined_rhs: report.combined_rhs.to_string(),
            rpc_holds: report.rpc_holds,
        }
    }
}

#[derive(Debug, Serialize)]
pub struct SurfaceDoc {
    pub kind: &'static str,
    pub ks_dot_c: i64,
    pub c_squared: i64,
    pub lhs: i64,
    pub holds: bool,
    /// One-level general check on the same data; absent when the adjunction
    /// degree degenerates.
    pub general_route: Option<RpcReportDoc>,
}

impl SurfaceDoc {
    pub fn new(
        kind: SurfaceKind,
        ks_dot_c: i64,
        c_squared: i64,
        check: SurfaceCheck,
        general: Option<&RpcReport>,
    ) -> Self {
        SurfaceDoc {
            kind: surface_kind_label(kind),
            ks_dot_c,
            c_squared,
            lhs: check.lhs,
            holds: check.holds,
            general_route: general.map(RpcReportDoc::from),
        }
    }
}

#[derive(Debug, Serialize)]
pub struct Sl2ComponentDoc {
    pub index: u32,
    pub rank: u64,
}

#[derive(Debug, Serialize)]
pub struct Sl2Doc {
    pub components: Vec<Sl2ComponentDoc>,
    pub total_rank: u64,
    pub unitary_rank: u64,
}

impl From<&Sl2Decomposition> for Sl2Doc {
    fn from(d: &Sl2Decomposition) -> Self {
        Sl2Doc {
            components: d
                .components()
                .map(|(index, rank)| Sl2ComponentDoc { index, rank })
                .collect(),
            total_rank: d.total_rank(),
            unitary_rank: d.unitary_rank(),
        }
    }
}

#[derive(Debug, Serialize)]
pub struct BoxDoc {
    pub weight: u32,
    pub count: usize,
    /// Tuples `[mu, i, nu, j, a, b]` in lexicographic order.
    pub tuples: Vec<[u32; 6]>,
}

impl BoxDoc {
    pub fn new(weight: u32, tuples: impl IntoIterator<Item = BoxTuple>) -> Self {
        let tuples: Vec<[u32; 6]> = tuples
            .into_iter()
            .map(|t| [t.mu, t.i, t.nu, t.j, t.a, t.b])
            .collect();
        BoxDoc {
            weight,
            count: tuples.len(),
            tuples,
        }
    }
}

#[derive(Debug, Serialize)]
pub struct LieDimDoc {
    pub p: i64,
    pub dim: u64,
}

#[derive(Debug, Serialize)]
pub struct LieDoc {
    pub route: &'static str,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub dims: Option<Vec<LieDimDoc>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub dim_horizontal: Option<u64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub dim_domain: Option<u64>,
    pub hermitian_type: bool,
    pub dim_hk: u64,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub dim_y: Option<u64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub lie_status: Option<&'static str>,
}

impl LieDoc {
    pub fn from_dims(dims: &LieHodgeDims) -> Self {
        LieDoc {
            route: "hodge",
            dims: Some(
                dims.entries()
                    .map(|(p, dim)| LieDimDoc { p, dim })
                    .collect(),
            ),
            dim_horizontal: Some(dims.dim_horizontal()),
            dim_domain: Some(dims.dim_domain()),
            hermitian_type: dims.is_hermitian_type(),
            dim_hk: dims.dim_domain(),
            dim_y: None,
            lie_status: None,
        }
    }

    pub fn from_family(dim: u64) -> Self {
        LieDoc {
            route: "family",
            dims: None,
            dim_horizontal: None,
            dim_domain: None,
            hermitian_type: true,
            dim_hk: dim,
            dim_y: None,
            lie_status: None,
        }
    }

    pub fn with_dim_y(mut self, dim_y: u64, status: LieStatus) -> Self {
        self.dim_y = Some(dim_y);
        self.lie_status = Some(lie_label(status));
        self
    }
}

pub const ASSERTIONS_NOTE: &str = "bigness of the curve-union monodromy and unipotent local \
monodromy are user assertions, never computed; any passing conclusion is conditional on them";

#[derive(Debug, Serialize)]
pub struct CurveRpcDoc {
    pub curve: String,
    pub report: RpcReportDoc,
}

#[derive(Debug, Serialize)]
pub struct VerdictDoc {
    pub per_curve_rpc: Vec<CurveRpcDoc>,
    pub lie_status: &'static str,
    pub lie_dim_hk: u64,
    pub lie_dim_y: u64,
    pub big_asserted: bool,
    pub unipotent_asserted: bool,
    pub connected_union_asserted: bool,
    pub conclusion: &'static str,
    pub assertions_note: &'static str,
}

impl From<&Verdict> for VerdictDoc {
    fn from(v: &Verdict) -> Self {
        VerdictDoc {
            per_curve_rpc: v
                .per_curve
                .iter()
                .map(|c| CurveRpcDoc {
                    curve: c.name.clone(),
                    report: RpcReportDoc::from(&c.report),
                })
                .collect(),
            lie_status: lie_label(v.lie_status),
            lie_dim_hk: v.dim_hk,
            lie_dim_y: v.dim_y,
            big_asserted: v.big_asserted,
            unipotent_asserted: v.unipotent_asserted,
            connected_union_asserted: v.connected_union_asserted,
            conclusion: v.conclusion.label(),
            assertions_note: ASSERTIONS_NOTE,
        }
    }
}

/// Serializes a report to the canonical output form.
pub fn render<T: Serialize>(doc: &T) -> anyhow::Result<String> {
    Ok(serde_json::to_string_pretty(doc)?)
}
