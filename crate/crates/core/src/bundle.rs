//! Exact slope arithmetic for graded bundles on compactified curves.
//!
//! A bundle enters the checks only through its multiset of polystable pieces
//! `(slope, rank)`. All degrees and slopes are exact rationals; nothing here
//! touches floating point. Slope decompositions are ordered by *increasing*
//! slope, so that the graded quotient at level `i` matches the filtration step
//! `N^i` used by the proportionality checks.

use num_rational::Rational64;
use num_traits::Zero;

use crate::error::{Error, Result};

/// Universal exact scalar for degrees and slopes.
pub type Rational = Rational64;

/// Integral rational.
pub fn rat(n: i64) -> Rational {
    Rational::from_integer(n)
}

/// `p/q` in lowest terms. `q` must be nonzero.
pub fn frac(p: i64, q: i64) -> Rational {
    Rational::new(p, q)
}

/// A polystable bundle, recorded by slope and rank only.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct PolystablePiece {
    slope: Rational,
    rank: u64,
}

impl PolystablePiece {
    pub fn new(slope: Rational, rank: u64) -> Result<Self> {
        if rank == 0 {
            return Err(Error::ZeroRankPiece);
        }
        Ok(Self { slope, rank })
    }

    pub fn slope(&self) -> Rational {
        self.slope
    }

    pub fn rank(&self) -> u64 {
        self.rank
    }

    pub fn degree(&self) -> Rational {
        self.slope * rat(self.rank as i64)
    }

    /// The dual piece: slope negated, rank unchanged.
    pub fn dual(&self) -> Self {
        Self {
            slope: -self.slope,
            rank: self.rank,
        }
    }
}

/// A finite direct sum of polystable pieces.
///
/// Kept in canonical form: sorted by slope with equal-slope pieces merged, so
/// multiset equality is plain `==`. The empty bundle is a legal value of rank
/// and degree zero.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct GradedBundle {
    pieces: Vec<PolystablePiece>,
}

impl GradedBundle {
    pub fn empty() -> Self {
        Self::default()
    }

    /// Builds the bundle and normalizes: sort by slope, merge equal slopes.
    pub fn new(pieces: impl IntoIterator<Item = PolystablePiece>) -> Self {
        let mut pieces: Vec<PolystablePiece> = pieces.into_iter().collect();
        pieces.sort_by(|a, b| a.slope.cmp(&b.slope));
        let mut merged: Vec<PolystablePiece> = Vec::with_capacity(pieces.len());
        for p in pieces {
            match merged.last_mut() {
                Some(last) if last.slope == p.slope => last.rank += p.rank,
                _ => merged.push(p),
            }
        }
        Self { pieces: merged }
    }

    /// One piece per occurring slope, in increasing slope order.
    pub fn pieces(&self) -> &[PolystablePiece] {
        &self.pieces
    }

    pub fn is_empty(&self) -> bool {
        self.pieces.is_empty()
    }

    pub fn rank(&self) -> u64 {
        self.pieces.iter().map(|p| p.rank).sum()
    }

    pub fn degree(&self) -> Rational {
        self.pieces
            .iter()
            .fold(Rational::zero(), |acc, p| acc + p.degree())
    }

    /// degree / rank. Undefined on the empty bundle.
    pub fn slope(&self) -> Result<Rational> {
        let rank = self.rank();
        if rank == 0 {
            return Err(Error::SlopeUndefined);
        }
        Ok(self.degree() / rat(rank as i64))
    }

    /// The slope decomposition: graded quotients of strictly increasing slope.
    ///
    /// Idempotent, and preserves total rank and degree.
    pub fn slope_decompose(&self) -> SlopeFiltration {
        SlopeFiltration {
            quotients: self.pieces.clone(),
        }
    }

    pub fn dual(&self) -> Self {
        Self::new(self.pieces.iter().map(PolystablePiece::dual))
    }

    /// Tensor product: slopes add pairwise, ranks multiply.
    pub fn tensor(&self, other: &Self) -> Self {
        let mut pieces = Vec::with_capacity(self.pieces.len() * other.pieces.len());
        for a in &self.pieces {
            for b in &other.pieces {
                pieces.push(PolystablePiece {
                    slope: a.slope + b.slope,
                    rank: a.rank * b.rank,
                });
            }
        }
        Self::new(pieces)
    }

    /// Multiset union of the pieces.
    pub fn direct_sum(&self, other: &Self) -> Self {
        Self::new(self.pieces.iter().chain(other.pieces.iter()).copied())
    }
}

impl FromIterator<PolystablePiece> for GradedBundle {
    fn from_iter<T: IntoIterator<Item = PolystablePiece>>(iter: T) -> Self {
        Self::new(iter)
    }
}

/// Graded quotients of a filtration ordered by strictly increasing slope,
/// `N^0 subset N^1 subset ... subset N^s`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct SlopeFiltration {
    quotients: Vec<PolystablePiece>,
}

impl SlopeFiltration {
    /// Validates the strict increase of slopes along the quotients.
    pub fn new(quotients: Vec<PolystablePiece>) -> Result<Self> {
        for (i, pair) in quotients.windows(2).enumerate() {
            if pair[0].slope >= pair[1].slope {
                return Err(Error::NonIncreasingSlopes(i + 1));
            }
        }
        Ok(Self { quotients })
    }

    pub fn quotients(&self) -> &[PolystablePiece] {
        &self.quotients
    }

    pub fn len(&self) -> usize {
        self.quotients.len()
    }

    pub fn is_empty(&self) -> bool {
        self.quotients.is_empty()
    }

    pub fn total_rank(&self) -> u64 {
        self.quotients.iter().map(|q| q.rank).sum()
    }

    pub fn total_degree(&self) -> Rational {
        self.quotients
            .iter()
            .fold(Rational::zero(), |acc, q| acc + q.degree())
    }

    /// Partial ranks `rk N^i`; nondecreasing by construction.
    pub fn partial_ranks(&self) -> Vec<u64> {
        self.quotients
            .iter()
            .scan(0u64, |acc, q| {
                *acc += q.rank;
                Some(*acc)
            })
            .collect()
    }

    /// Forgets the ordering and returns the underlying graded bundle.
    pub fn to_bundle(&self) -> GradedBundle {
        GradedBundle {
            pieces: self.quotients.clone(),
        }
    }
}

/// Numerical shadow of a compactified curve: genus and number of cusps.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct CurveNumerics {
    pub genus: u32,
    pub cusps: u32,
}

impl CurveNumerics {
    pub fn new(genus: u32, cusps: u32) -> Self {
        Self { genus, cusps }
    }

    /// 2g - 2 + s, the degree of Omega^1_C(log S_C).
    pub fn chi_log(&self) -> i64 {
        2 * self.genus as i64 - 2 + self.cusps as i64
    }

    /// deg T_C(-log S_C) = 2 - 2g - s.
    pub fn deg_log_tangent(&self) -> Rational {
        rat(-self.chi_log())
    }

    /// deg L = (2g - 2 + s)/2, where L^2 = Omega^1_C(log S_C).
    ///
    /// Half-integral values are allowed; errors unless 2g - 2 + s > 0.
    pub fn deg_l(&self) -> Result<Rational> {
        let chi = self.chi_log();
        if chi <= 0 {
            return Err(Error::NotShimuraBase(chi));
        }
        Ok(frac(chi, 2))
    }
}
