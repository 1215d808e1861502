use thiserror::Error;

/// Errors shared by all engine modules.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    /// A polystable piece with rank zero is not a value; use the empty bundle.
    #[error("polystable piece must have positive rank")]
    ZeroRankPiece,

    /// `slope` on the rank-zero bundle.
    #[error("slope undefined for a bundle of rank zero")]
    SlopeUndefined,

    /// deg Omega^1_C(log S_C) = 2g - 2 + s must be positive for a Shimura-curve base.
    #[error("not a Shimura-curve base: 2g - 2 + s = {0} is not positive")]
    NotShimuraBase(i64),

    /// deg T_C(-log S_C) = 0, so slope normalization by it is impossible.
    #[error("degenerate curve: deg T_C(-log S_C) = 0")]
    DegenerateCurve,

    /// Filtration quotients must come in strictly increasing slope order.
    #[error("filtration slopes must be strictly increasing (violated at quotient {0})")]
    NonIncreasingSlopes(usize),

    /// The sub filtration refines the ambient one level by level and cannot be longer.
    #[error("sub filtration has {sub} levels but the ambient filtration has {ambient}")]
    TooManySubLevels { sub: usize, ambient: usize },

    /// `splitting_report` is only defined when the proportionality equalities hold.
    #[error("splitting only under RPC")]
    SplittingRequiresRpc,

    /// Symplectic pairings need odd weight, orthogonal ones even weight.
    #[error("parity mismatch: {pairing} pairing requires {expected} weight, got weight {weight}")]
    ParityMismatch {
        pairing: &'static str,
        expected: &'static str,
        weight: i64,
    },

    /// Hermitian family parameters outside their validity range.
    #[error("invalid Hermitian family parameters: {0}")]
    InvalidFamily(String),

    /// Polarized real structures satisfy h^{p,q} = h^{q,p}.
    #[error("hodge numbers must satisfy h^{{p,q}} = h^{{q,p}}")]
    AsymmetricHodge,

    /// A Hodge vector describes a nonzero space.
    #[error("hodge vector must have positive total dimension")]
    ZeroHodge,

    /// Weight-k Hodge numbers are a list of k+1 entries, h^{k,0} down to h^{0,k}.
    #[error("weight {weight} needs {expected} hodge numbers, got {got}")]
    HodgeLength {
        weight: i64,
        expected: usize,
        got: usize,
    },

    /// The list form of a Hodge vector is only defined for nonnegative weight.
    #[error("hodge numbers in list form require nonnegative weight, got {0}")]
    NegativeWeight(i64),

    /// Lie-algebra dimension tables must be symmetric under p <-> -p.
    #[error("lie dimensions must satisfy dim g^{{-p,p}} = dim g^{{p,-p}} (violated at p = {0})")]
    AsymmetricLieDims(i64),
}

pub type Result<T> = std::result::Result<T, Error>;
