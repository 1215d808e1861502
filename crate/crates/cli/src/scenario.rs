//! Scenario documents: the declarative input format of the tool.
//!
//! A scenario is a TOML document with lowercase snake_case keys describing
//! the ambient space, the candidate subvariety with its asserted hypotheses,
//! the dimension data for the Lie condition, and one entry per compactified
//! special curve. Rationals are written as `"p/q"` (or `"p"`) strings and are
//! parsed exactly. Unknown fields are rejected.

use std::fmt;
use std::str::FromStr;

use anyhow::{bail, ensure, Context, Result};
use serde::{de, Deserialize, Deserializer, Serialize, Serializer};

use relprop_core::{HermitianFamily, HodgeVector, Rational, SurfaceKind};

pub const SCHEMA_VERSION: u32 = 1;

/// Exact rational carried as a `"p/q"` string in documents.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct RationalText(pub Rational);

impl fmt::Display for RationalText {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

impl FromStr for RationalText {
    type Err = anyhow::Error;

    fn from_str(s: &str) -> Result<Self> {
        parse_rational(s).map(RationalText)
    }
}

/// Parses `"p"` or `"p/q"` exactly; `q = 0` is rejected.
pub fn parse_rational(s: &str) -> Result<Rational> {
    let s = s.trim();
    let (p, q) = match s.split_once('/') {
        Some((p, q)) => (p.trim(), q.trim()),
        None => (s, "1"),
    };
    let p: i64 = p
        .parse()
        .with_context(|| format!("invalid rational `{s}`: bad numerator"))?;
    let q: i64 = q
        .parse()
        .with_context(|| format!("invalid rational `{s}`: bad denominator"))?;
    ensure!(q != 0, "invalid rational `{s}`: denominator must be nonzero");
    Ok(Rational::new(p, q))
}

impl Serialize for RationalText {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        serializer.collect_str(&self.0)
    }
}

impl<'de> Deserialize<'de> for RationalText {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        let s = String::deserialize(deserializer)?;
        s.parse().map_err(|e| de::Error::custom(format!("{e:#}")))
    }
}

/// How per-curve ambient data is obtained.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum AmbientKind {
    /// Moduli of principally polarized abelian varieties: three ambient
    /// levels of slopes `deg T_C`, `deg T_C / 2`, `0`, derived per curve.
    Ag,
    /// Ambient slope filtration spelled out per curve.
    General,
    /// One ambient level of slope `deg T_C`, derived per curve.
    HilbertSurface,
    /// One ambient level of slope `deg T_C / 2`, derived per curve.
    BallSurface,
}

impl AmbientKind {
    pub fn surface_kind(self) -> Option<SurfaceKind> {
        match self {
            AmbientKind::HilbertSurface => Some(SurfaceKind::HilbertModular),
            AmbientKind::BallSurface => Some(SurfaceKind::BallQuotient),
            _ => None,
        }
    }

    /// Number of ambient levels when they are derived rather than given.
    fn derived_level_count(self) -> Option<usize> {
        match self {
            AmbientKind::Ag => Some(3),
            AmbientKind::HilbertSurface | AmbientKind::BallSurface => Some(1),
            AmbientKind::General => None,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ScenarioDocument {
    pub schema_version: u32,
    pub ambient: AmbientSection,
    pub subvariety: SubvarietySection,
    pub lie: LieSection,
    pub curves: Vec<CurveSection>,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct AmbientSection {
    pub kind: AmbientKind,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub weight: Option<u32>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub hodge_numbers: Option<Vec<u64>>,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct SubvarietySection {
    pub dim_y: u64,
    /// Monodromy of the curve union is asserted to be as big as that of the
    /// subvariety. Never computed.
    pub asserted_big: bool,
    /// The union of the open curves is asserted to be connected.
    pub asserted_connected_union: bool,
    /// Local monodromies at the boundary are asserted unipotent.
    pub asserted_unipotent_monodromy: bool,
}

/// Either `dim_hk` directly, or a classical family with parameters.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct LieSection {
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub dim_hk: Option<u64>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub family: Option<FamilyName>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub params: Option<Vec<u32>>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum FamilyName {
    /// `sp(2g)`; one parameter `g`.
    Sp,
    /// `su(p,q)`; two parameters.
    Su,
    /// `so(2,n)`; one parameter `n`.
    So2n,
    /// `so*(2n)`; one parameter `n`.
    SoStar,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct CurveSection {
    pub name: String,
    pub genus: u32,
    pub cusps: u32,
    /// Required for kind `general`; must be omitted when levels are derived.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub ambient_levels: Option<Vec<LevelEntry>>,
    pub sub_levels: Vec<SubLevelEntry>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct LevelEntry {
    pub slope: RationalText,
    pub rank: u64,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct SubLevelEntry {
    /// Index of the ambient level this quotient refines.
    pub level: usize,
    pub slope: RationalText,
    pub rank: u64,
}

/// Parses and fully validates a scenario document.
pub fn parse_scenario(text: &str) -> Result<ScenarioDocument> {
    let doc: ScenarioDocument = toml::from_str(text).context("scenario parse error")?;
    validate_scenario(&doc)?;
    Ok(doc)
}

/// Canonical serialization; inverse of [`parse_scenario`] on valid documents.
pub fn serialize_scenario(doc: &ScenarioDocument) -> Result<String> {
    toml::to_string_pretty(doc).context("scenario serialize error")
}

fn validate_scenario(doc: &ScenarioDocument) -> Result<()> {
    ensure!(
        doc.schema_version == SCHEMA_VERSION,
        "unsupported schema_version {} (expected {SCHEMA_VERSION})",
        doc.schema_version
    );
    ensure!(!doc.curves.is_empty(), "at least one curve is required");
    ensure!(doc.subvariety.dim_y >= 1, "subvariety.dim_y must be positive");
    validate_ambient(&doc.ambient)?;
    resolve_lie_dim(&doc.lie)?;
    for (idx, curve) in doc.curves.iter().enumerate() {
        validate_curve(doc.ambient.kind, curve)
            .with_context(|| format!("curves[{idx}] (`{}`)", curve.name))?;
    }
    Ok(())
}

fn validate_ambient(ambient: &AmbientSection) -> Result<()> {
    if let Some(weight) = ambient.weight {
        ensure!(weight >= 1, "ambient.weight must be at least 1");
    }
    match (&ambient.hodge_numbers, ambient.weight) {
        (Some(numbers), Some(weight)) => {
            HodgeVector::new(weight as i64, numbers.clone())
                .map_err(|e| anyhow::anyhow!("ambient.hodge_numbers: {e}"))?;
        }
        (Some(_), None) => bail!("ambient.hodge_numbers requires ambient.weight"),
        _ => {}
    }
    Ok(())
}

/// Resolves the `dim H/K` input: direct value or closed-form family.
pub fn resolve_lie_dim(lie: &LieSection) -> Result<u64> {
    match (lie.dim_hk, lie.family, &lie.params) {
        (Some(dim), None, None) => Ok(dim),
        (None, Some(family), Some(params)) => {
            let family = hermitian_family(family, params)?;
            family.dim().map_err(|e| anyhow::anyhow!("lie: {e}"))
        }
        _ => bail!("lie: provide exactly one of `dim_hk` or `family` with `params`"),
    }
}

pub fn hermitian_family(name: FamilyName, params: &[u32]) -> Result<HermitianFamily> {
    match (name, params) {
        (FamilyName::Sp, &[g]) => Ok(HermitianFamily::Sp { g }),
        (FamilyName::Su, &[p, q]) => Ok(HermitianFamily::Su { p, q }),
        (FamilyName::So2n, &[n]) => Ok(HermitianFamily::SoTwo { n }),
        (FamilyName::SoStar, &[n]) => Ok(HermitianFamily::SoStar { n }),
        (FamilyName::Su, _) => bail!("family `su` takes exactly two parameters"),
        _ => bail!("this family takes exactly one parameter"),
    }
}

fn validate_curve(kind: AmbientKind, curve: &CurveSection) -> Result<()> {
    ensure!(!curve.name.is_empty(), "curve name must be nonempty");
    let level_count = match (kind.derived_level_count(), &curve.ambient_levels) {
        (Some(n), None) => n,
        (Some(_), Some(_)) => {
            bail!("ambient_levels are derived for this ambient kind and must be omitted")
        }
        (None, Some(levels)) => {
            ensure!(!levels.is_empty(), "ambient_levels must be nonempty");
            for (i, level) in levels.iter().enumerate() {
                ensure!(level.rank >= 1, "ambient_levels[{i}].rank must be positive");
            }
            for (i, pair) in levels.windows(2).enumerate() {
                ensure!(
                    pair[0].slope < pair[1].slope,
                    "ambient_levels: slopes must be strictly increasing (levels {i} and {})",
                    i + 1
                );
            }
            levels.len()
        }
        (None, None) => bail!("ambient_levels are required for kind `general`"),
    };
    ensure!(
        curve.sub_levels.len() <= level_count,
        "sub_levels: {} entries but only {level_count} ambient levels",
        curve.sub_levels.len()
    );
    let mut previous: Option<usize> = None;
    for (i, entry) in curve.sub_levels.iter().enumerate() {
        ensure!(entry.rank >= 1, "sub_levels[{i}].rank must be positive");
        ensure!(
            entry.level < level_count,
            "sub_levels[{i}].level = {} out of range (ambient has {level_count} levels)",
            entry.level
        );
        if let Some(prev) = previous {
            ensure!(
                entry.level > prev,
                "sub_levels[{i}].level = {} must exceed the previous level {prev}",
                entry.level
            );
        }
        previous = Some(entry.level);
    }
    Ok(())
}

/// Standalone input document for the plain `rpc` subcommand: one curve with
/// explicit ambient levels.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct RpcDocument {
    pub schema_version: u32,
    pub genus: u32,
    pub cusps: u32,
    pub ambient_levels: Vec<LevelEntry>,
    pub sub_levels: Vec<SubLevelEntry>,
}

pub fn parse_rpc_document(text: &str) -> Result<RpcDocument> {
    let doc: RpcDocument = toml::from_str(text).context("rpc document parse error")?;
    ensure!(
        doc.schema_version == SCHEMA_VERSION,
        "unsupported schema_version {} (expected {SCHEMA_VERSION})",
        doc.schema_version
    );
    let curve = CurveSection {
        name: "rpc".into(),
        genus: doc.genus,
        cusps: doc.cusps,
        ambient_levels: Some(doc.ambient_levels.clone()),
        sub_levels: doc.sub_levels.clone(),
    };
    validate_curve(AmbientKind::General, &curve)?;
    Ok(doc)
}

#[cfg(test)]
mod tests {
    use super::*;

    const MINIMAL: &str = r#"
schema_version = 1

[ambient]
kind = "ag"

[subvariety]
dim_y = 3
asserted_big = true
asserted_connected_union = true
asserted_unipotent_monodromy = true

[lie]
dim_hk = 3

[[curves]]
name = "main"
genus = 0
cusps = 4
sub_levels = [
  { level = 0, slope = "-2", rank = 1 },
  { level = 1, slope = "-1", rank = 2 },
  { level = 2, slope = "0", rank = 1 },
]
"#;

    #[test]
    fn minimal_document_parses() {
        let doc = parse_scenario(MINIMAL).unwrap();
        assert_eq!(doc.curves.len(), 1);
        assert_eq!(doc.curves[0].sub_levels[1].slope.0, Rational::new(-1, 1));
    }

    #[test]
    fn round_trips_through_serialization() {
        let doc = parse_scenario(MINIMAL).unwrap();
        let text = serialize_scenario(&doc).unwrap();
        assert_eq!(parse_scenario(&text).unwrap(), doc);
    }

    #[test]
    fn zero_denominator_is_rejected() {
        let bad = MINIMAL.replace("{ level = 2, slope = \"0\", rank = 1 }",
                                  "{ level = 2, slope = \"1/0\", rank = 1 }");
        let err = parse_scenario(&bad).unwrap_err();
        assert!(format!("{err:#}").contains("denominator"));
    }

    #[test]
    fn unknown_fields_are_rejected() {
        let bad = MINIMAL.replace("dim_y = 3", "dim_y = 3\nsurprise = 1");
        assert!(parse_scenario(&bad).is_err());
    }

    #[test]
    fn unknown_ambient_kind_is_rejected() {
        let bad = MINIMAL.replace("kind = \"ag\"", "kind = \"mystery\"");
        assert!(parse_scenario(&bad).is_err());
    }

    #[test]
    fn out_of_range_sub_level_is_rejected() {
        let bad = MINIMAL.replace("{ level = 2,", "{ level = 7,");
        let err = parse_scenario(&bad).unwrap_err();
        assert!(format!("{err:#}").contains("out of range"));
    }

    #[test]
    fn too_many_sub_levels_are_rejected() {
        let bad = MINIMAL.replace(
            "  { level = 2, slope = \"0\", rank = 1 },",
            "  { level = 2, slope = \"0\", rank = 1 },\n  { level = 3, slope = \"0\", rank = 1 },",
        );
        assert!(parse_scenario(&bad).is_err());
    }

    #[test]
    fn lie_section_requires_one_route() {
        let both = MINIMAL.replace("dim_hk = 3", "dim_hk = 3\nfamily = \"sp\"\nparams = [2]");
        assert!(parse_scenario(&both).is_err());
        let family = MINIMAL.replace("dim_hk = 3", "family = \"sp\"\nparams = [2]");
        let doc = parse_scenario(&family).unwrap();
        assert_eq!(resolve_lie_dim(&doc.lie).unwrap(), 3);
    }

    #[test]
    fn ambient_levels_rejected_when_derived() {
        let bad = MINIMAL.replace(
            "sub_levels = [",
            "ambient_levels = [ { slope = \"-2\", rank = 1 } ]\nsub_levels = [",
        );
        let err = parse_scenario(&bad).unwrap_err();
        assert!(format!("{err:#}").contains("must be omitted"));
    }

    #[test]
    fn rational_text_parses_integers_and_fractions() {
        assert_eq!(parse_rational("-3/2").unwrap(), Rational::new(-3, 2));
        assert_eq!(parse_rational("4").unwrap(), Rational::new(4, 1));
        assert_eq!(parse_rational("2/4").unwrap(), Rational::new(1, 2));
        assert!(parse_rational("1/0").is_err());
        assert!(parse_rational("a/b").is_err());
    }
}
