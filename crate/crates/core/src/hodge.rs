//! Hodge-number bookkeeping and Lie-algebra dimension counts.
//!
//! A Hodge vector records the dimensions `h^{p,q}` of a polarized structure;
//! the adjoint algebra of its symmetry group sits inside `Sym^2 V` (odd
//! weight, symplectic pairing) or `Lambda^2 V` (even weight, orthogonal
//! pairing). Reindexing the square to weight zero gives the graded dimensions
//! `dim g^{-p,p}`, from which the horizontal tangent dimension, the period
//! domain dimension and the Hermitian-type test all read off directly.

use std::collections::BTreeMap;

use crate::error::{Error, Result};

/// Hodge numbers of a pure structure: `numbers[idx] = h^{p_top - idx, q}`.
///
/// Kept canonical (zero entries trimmed at both ends), so equality is
/// structural. The zero vector is a legal result of `wedge2` on a line,
/// although `new` rejects it as an input.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct HodgeVector {
    weight: i64,
    p_top: i64,
    numbers: Vec<u64>,
}

impl HodgeVector {
    /// Standard list form: `h^{k,0}` down to `h^{0,k}` for weight `k >= 1`,
    /// or an odd-length list centered on `h^{0,0}` for weight zero.
    pub fn new(weight: i64, numbers: Vec<u64>) -> Result<Self> {
        if weight < 0 {
            return Err(Error::NegativeWeight(weight));
        }
        let expected = if weight == 0 {
            if numbers.len() % 2 == 0 {
                return Err(Error::HodgeLength {
                    weight,
                    expected: numbers.len() + 1,
                    got: numbers.len(),
                });
            }
            numbers.len()
        } else {
            weight as usize + 1
        };
        if numbers.len() != expected {
            return Err(Error::HodgeLength {
                weight,
                expected,
                got: numbers.len(),
            });
        }
        if numbers.iter().all(|&h| h == 0) {
            return Err(Error::ZeroHodge);
        }
        if !is_palindrome(&numbers) {
            return Err(Error::AsymmetricHodge);
        }
        let p_top = (weight + numbers.len() as i64 - 1) / 2;
        Ok(Self::from_raw(weight, p_top, numbers))
    }

    /// Weight 0, `h^{0,0} = 1`; neutral for `convolve`.
    pub fn trivial() -> Self {
        Self::new(0, vec![1]).expect("trivial vector is valid")
    }

    fn from_raw(weight: i64, p_top: i64, numbers: Vec<u64>) -> Self {
        let mut v = Self {
            weight,
            p_top,
            numbers,
        };
        v.trim();
        v
    }

    fn from_map(weight: i64, map: &BTreeMap<i64, u64>) -> Self {
        let nonzero: Vec<i64> = map
            .iter()
            .filter(|&(_, &h)| h > 0)
            .map(|(&p, _)| p)
            .collect();
        let (Some(&lo), Some(&hi)) = (nonzero.first(), nonzero.last()) else {
            return Self {
                weight,
                p_top: 0,
                numbers: Vec::new(),
            };
        };
        let numbers = (lo..=hi)
            .rev()
            .map(|p| map.get(&p).copied().unwrap_or(0))
            .collect();
        Self::from_raw(weight, hi, numbers)
    }

    fn trim(&mut self) {
        while self.numbers.first() == Some(&0) {
            self.numbers.remove(0);
            self.p_top -= 1;
        }
        while self.numbers.last() == Some(&0) {
            self.numbers.pop();
        }
        if self.numbers.is_empty() {
            self.p_top = 0;
        }
    }

    pub fn weight(&self) -> i64 {
        self.weight
    }

    /// Largest `p` carrying a nonzero `h^{p,q}`.
    pub fn p_top(&self) -> i64 {
        self.p_top
    }

    pub fn is_zero(&self) -> bool {
        self.numbers.is_empty()
    }

    /// Total dimension.
    pub fn dim(&self) -> u64 {
        self.numbers.iter().sum()
    }

    /// `h^{p, weight - p}`, zero outside the stored range.
    pub fn h(&self, p: i64) -> u64 {
        let idx = self.p_top - p;
        if idx < 0 {
            return 0;
        }
        self.numbers.get(idx as usize).copied().unwrap_or(0)
    }

    /// `(p, h^{p,q})` pairs with `h > 0`, decreasing in `p`.
    pub fn entries(&self) -> impl Iterator<Item = (i64, u64)> + '_ {
        self.numbers
            .iter()
            .enumerate()
            .filter(|&(_, &h)| h > 0)
            .map(|(idx, &h)| (self.p_top - idx as i64, h))
    }

    /// Hodge numbers of the tensor product: weights add, lists convolve.
    pub fn convolve(&self, other: &Self) -> Self {
        if self.is_zero() || other.is_zero() {
            return Self::from_map(self.weight + other.weight, &BTreeMap::new());
        }
        let mut numbers = vec![0u64; self.numbers.len() + other.numbers.len() - 1];
        for (i, &a) in self.numbers.iter().enumerate() {
            for (j, &b) in other.numbers.iter().enumerate() {
                numbers[i + j] += a * b;
            }
        }
        Self::from_raw(
            self.weight + other.weight,
            self.p_top + other.p_top,
            numbers,
        )
    }

    /// Dual structure: weight negates, `h^{-p,-q} = h^{p,q}`. An involution.
    pub fn dual(&self) -> Self {
        let mut numbers = self.numbers.clone();
        numbers.reverse();
        let p_bottom = self.p_top - (self.numbers.len() as i64 - 1).max(0);
        Self::from_raw(-self.weight, -p_bottom, numbers)
    }

    /// Hodge numbers of `Sym^2`; dimension `d(d+1)/2`.
    pub fn sym2(&self) -> Self {
        self.square(true)
    }

    /// Hodge numbers of `Lambda^2`; dimension `d(d-1)/2`.
    pub fn wedge2(&self) -> Self {
        self.square(false)
    }

    fn square(&self, symmetric: bool) -> Self {
        let entries: Vec<(i64, u64)> = self.entries().collect();
        let mut map: BTreeMap<i64, u64> = BTreeMap::new();
        for (idx, &(p, d)) in entries.iter().enumerate() {
            let diagonal = if symmetric {
                d * (d + 1) / 2
            } else {
                d * (d - 1) / 2
            };
            *map.entry(2 * p).or_insert(0) += diagonal;
            for &(p2, d2) in &entries[idx + 1..] {
                *map.entry(p + p2).or_insert(0) += d * d2;
            }
        }
        Self::from_map(2 * self.weight, &map)
    }

    /// Graded dimensions of the adjoint algebra attached to this structure:
    /// `Sym^2` under a symplectic pairing (odd weight), `Lambda^2` under an
    /// orthogonal one (even weight), reindexed to weight zero.
    pub fn lie_hodge_dims(&self, pairing: Pairing) -> Result<LieHodgeDims> {
        let odd = self.weight.rem_euclid(2) == 1;
        let square = match pairing {
            Pairing::Symplectic => {
                if !odd {
                    return Err(Error::ParityMismatch {
                        pairing: "symplectic",
                        expected: "odd",
                        weight: self.weight,
                    });
                }
                self.sym2()
            }
            Pairing::Orthogonal => {
                if odd {
                    return Err(Error::ParityMismatch {
                        pairing: "orthogonal",
                        expected: "even",
                        weight: self.weight,
                    });
                }
                self.wedge2()
            }
        };
        let dims = square
            .entries()
            .map(|(p, h)| (p - self.weight, h))
            .collect();
        Ok(LieHodgeDims { dims })
    }
}

fn is_palindrome(numbers: &[u64]) -> bool {
    numbers
        .iter()
        .zip(numbers.iter().rev())
        .all(|(a, b)| a == b)
}

/// Invariant pairing carried by the structure, selecting the adjoint model.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Pairing {
    Symplectic,
    Orthogonal,
}

/// Weight-zero graded dimensions `p -> dim g^{-p,p}` of a real Lie algebra.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct LieHodgeDims {
    dims: BTreeMap<i64, u64>,
}

impl LieHodgeDims {
    /// Validates the symmetry `dim g^{-p,p} = dim g^{p,-p}`.
    pub fn new(dims: impl IntoIterator<Item = (i64, u64)>) -> Result<Self> {
        let dims: BTreeMap<i64, u64> = dims.into_iter().filter(|&(_, d)| d > 0).collect();
        for (&p, &d) in &dims {
            if dims.get(&-p).copied().unwrap_or(0) != d {
                return Err(Error::AsymmetricLieDims(p));
            }
        }
        Ok(Self { dims })
    }

    pub fn dim(&self, p: i64) -> u64 {
        self.dims.get(&p).copied().unwrap_or(0)
    }

    pub fn entries(&self) -> impl Iterator<Item = (i64, u64)> + '_ {
        self.dims.iter().map(|(&p, &d)| (p, d))
    }

    pub fn total_dim(&self) -> u64 {
        self.dims.values().sum()
    }

    /// `dim g^{-1,1}`, the horizontal tangent dimension.
    pub fn dim_horizontal(&self) -> u64 {
        self.dim(1)
    }

    /// Complex dimension of the period domain: `sum_{p >= 1} dim g^{-p,p}`.
    pub fn dim_domain(&self) -> u64 {
        self.dims
            .iter()
            .filter(|&(&p, _)| p >= 1)
            .map(|(_, &d)| d)
            .sum()
    }

    /// True iff the decomposition is of type `(-1,1) + (0,0) + (1,-1)`.
    pub fn is_hermitian_type(&self) -> bool {
        self.dims.keys().all(|&p| p.abs() <= 1)
    }
}

/// Classical Hermitian families with closed-form domain dimensions.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum HermitianFamily {
    /// `Sp(2g)`, the Siegel space of genus `g`.
    Sp { g: u32 },
    /// `SU(p,q)`.
    Su { p: u32, q: u32 },
    /// `SO(2,n)`.
    SoTwo { n: u32 },
    /// `SO*(2n)`.
    SoStar { n: u32 },
}

impl HermitianFamily {
    /// Complex dimension of the associated domain `H/K`.
    pub fn dim(&self) -> Result<u64> {
        match *self {
            HermitianFamily::Sp { g } => {
                if g == 0 {
                    return Err(Error::InvalidFamily("sp(2g) requires g >= 1".into()));
                }
                let g = g as u64;
                Ok(g * (g + 1) / 2)
            }
            HermitianFamily::Su { p, q } => {
                if p == 0 || q == 0 {
                    return Err(Error::InvalidFamily("su(p,q) requires p, q >= 1".into()));
                }
                Ok(p as u64 * q as u64)
            }
            HermitianFamily::SoTwo { n } => {
                if n == 0 {
                    return Err(Error::InvalidFamily("so(2,n) requires n >= 1".into()));
                }
                Ok(n as u64)
            }
            HermitianFamily::SoStar { n } => {
                if n == 0 {
                    return Err(Error::InvalidFamily("so*(2n) requires n >= 1".into()));
                }
                let n = n as u64;
                Ok(n * (n - 1) / 2)
            }
        }
    }
}

/// Verdict of the dimension comparison `dim H/K` against `dim Y`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum LieStatus {
    /// `dim H/K = dim Y`; the condition holds (the reverse inequality always
    /// does, so equality is forced).
    Equality,
    /// `dim H/K > dim Y`; the condition fails.
    Fails,
    /// `dim H/K < dim Y` contradicts `dim H/K >= dim Y^0`; bad input.
    Inconsistent,
}

pub fn check_lie(dim_hk: u64, dim_y: u64) -> LieStatus {
    match dim_hk.cmp(&dim_y) {
        std::cmp::Ordering::Equal => LieStatus::Equality,
        std::cmp::Ordering::Greater => LieStatus::Fails,
        std::cmp::Ordering::Less => LieStatus::Inconsistent,
    }
}
