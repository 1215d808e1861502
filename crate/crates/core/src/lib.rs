//! Exact-arithmetic engines for deciding whether configurations of
//! compactified special curves inside a candidate subvariety of a
//! period-domain quotient satisfy the slope-proportionality, Lie-dimension
//! and representation-theoretic consistency criteria.
//!
//! Everything works on combinatorial shadows of the geometry: slopes and
//! ranks of polystable pieces, symmetric-power indices with unitary
//! multiplicities, Hodge numbers. All arithmetic is exact rational.
//!
//! - [`bundle`]: rationals, graded bundles, slope decompositions, curve
//!   numerics.
//! - [`sl2`]: decompositions into symmetric powers with unitary factors,
//!   Clebsch-Gordan calculus, Higgs gradings, the morphism index set.
//! - [`rpc`]: relative proportionality checks, surface closed forms,
//!   splitting and thickening slope tests.
//! - [`hodge`]: Hodge vectors, adjoint-algebra graded dimensions, the
//!   Hermitian-type test and the dimension condition.

pub mod bundle;
pub mod error;
pub mod hodge;
pub mod rpc;
pub mod sl2;

pub use bundle::{
    frac, rat, CurveNumerics, GradedBundle, PolystablePiece, Rational, SlopeFiltration,
};
pub use error::{Error, Result};
pub use hodge::{check_lie, HermitianFamily, HodgeVector, LieHodgeDims, LieStatus, Pairing};
pub use rpc::{
    fixed_part_rank, rpc_check, rpc_check_ag, splitting_report, surface_check,
    surface_from_general, thickening_slope_check, LevelReport, LevelStatus, RpcInput, RpcReport,
    SurfaceCheck, SurfaceKind,
};
pub use sl2::{clebsch_gordan, enumerate_box, higgs_grading, BoxTuple, Sl2Decomposition};
