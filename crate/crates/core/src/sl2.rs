//! SL(2)-representation bookkeeping on special curves.
//!
//! A local system restricted to a special curve splits into symmetric powers
//! of a rank-2 system tensored with unitary factors, plus a purely unitary
//! part. Only the symmetric-power index and the unitary ranks survive to the
//! slope level, so that is all we track: `components[i]` is the rank of the
//! unitary factor attached to the i-th symmetric power, with `i = 0` the
//! unitary part itself.

use std::collections::{BTreeMap, BTreeSet};

use crate::bundle::{rat, CurveNumerics, GradedBundle, PolystablePiece};
use crate::error::Result;

/// Decomposition of a local system into `S^i (x) T_i` pieces, by ranks.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct Sl2Decomposition {
    components: BTreeMap<u32, u64>,
}

impl Sl2Decomposition {
    /// The zero system.
    pub fn empty() -> Self {
        Self::default()
    }

    /// The trivial line, `{0: 1}`. Neutral for the tensor product.
    pub fn trivial() -> Self {
        Self::from_components([(0, 1)])
    }

    /// The standard rank-2 representation, `{1: 1}`.
    pub fn standard() -> Self {
        Self::from_components([(1, 1)])
    }

    /// A purely unitary system of the given rank.
    pub fn unitary(rank: u64) -> Self {
        Self::from_components([(0, rank)])
    }

    /// Builds from `(index, multiplicity)` pairs; zero multiplicities are
    /// dropped, repeated indices accumulate.
    pub fn from_components(components: impl IntoIterator<Item = (u32, u64)>) -> Self {
        let mut d = Self::empty();
        for (i, mult) in components {
            d.add(i, mult);
        }
        d
    }

    pub fn add(&mut self, index: u32, multiplicity: u64) {
        if multiplicity > 0 {
            *self.components.entry(index).or_insert(0) += multiplicity;
        }
    }

    /// Rank of the unitary factor at symmetric power `index` (0 if absent).
    pub fn multiplicity(&self, index: u32) -> u64 {
        self.components.get(&index).copied().unwrap_or(0)
    }

    pub fn components(&self) -> impl Iterator<Item = (u32, u64)> + '_ {
        self.components.iter().map(|(&i, &m)| (i, m))
    }

    pub fn max_index(&self) -> Option<u32> {
        self.components.keys().next_back().copied()
    }

    /// Total rank, `sum (i+1) * rank(T_i)`.
    pub fn total_rank(&self) -> u64 {
        self.components
            .iter()
            .map(|(&i, &m)| (i as u64 + 1) * m)
            .sum()
    }

    /// Rank of the maximal unitary subsystem, the `S^0`-isotypic part.
    pub fn unitary_rank(&self) -> u64 {
        self.multiplicity(0)
    }

    /// SL(2) representations are self-dual and unitary duals stay unitary,
    /// so duality is the identity at this level of bookkeeping.
    pub fn dual(&self) -> Self {
        self.clone()
    }

    /// Tensor product: bilinear extension of Clebsch-Gordan, with unitary
    /// multiplicities multiplying. Total rank multiplies.
    pub fn tensor(&self, other: &Self) -> Self {
        let mut out = Self::empty();
        for (i, mi) in self.components() {
            for (j, mj) in other.components() {
                for index in clebsch_gordan_indices(i, j) {
                    out.add(index, mi * mj);
                }
            }
        }
        out
    }

    /// `V^{(x)i} (x) V^{v(x)j}`, the single tensor-algebra summand.
    pub fn tensor_power(&self, i: u32, j: u32) -> Self {
        let dual = self.dual();
        let mut out = Self::trivial();
        for _ in 0..i {
            out = out.tensor(self);
        }
        for _ in 0..j {
            out = out.tensor(&dual);
        }
        out
    }
}

fn clebsch_gordan_indices(a: u32, b: u32) -> impl Iterator<Item = u32> {
    (a.abs_diff(b)..=a + b).step_by(2)
}

/// `S^a (x) S^b = S^{a+b} (+) S^{a+b-2} (+) ... (+) S^{|a-b|}`.
pub fn clebsch_gordan(a: u32, b: u32) -> Sl2Decomposition {
    Sl2Decomposition::from_components(clebsch_gordan_indices(a, b).map(|i| (i, 1)))
}

/// Higgs grading of `S^i(L) (x) T` on a curve: pieces `L^{i-2m} (x) T` of
/// slope `(i - 2m) deg L` for `m = 0..=i`, each of rank `t_rank`.
///
/// The total degree is zero and the slope multiset is symmetric under
/// negation. Errors when the curve is not a Shimura-curve base.
pub fn higgs_grading(i: u32, curve: &CurveNumerics, t_rank: u64) -> Result<GradedBundle> {
    let deg_l = curve.deg_l()?;
    let pieces = (0..=i)
        .map(|m| {
            let exponent = i as i64 - 2 * m as i64;
            PolystablePiece::new(rat(exponent) * deg_l, t_rank)
        })
        .collect::<Result<Vec<_>>>()?;
    Ok(GradedBundle::new(pieces))
}

/// One index of the weight-k morphism bookkeeping set: constraints
/// `mu <= i <= k`, `nu <= j <= k`, `a <= k - i`, `b <= k - j` and
/// `j + b - nu = i + a - mu - 1`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct BoxTuple {
    pub mu: u32,
    pub i: u32,
    pub nu: u32,
    pub j: u32,
    pub a: u32,
    pub b: u32,
}

impl BoxTuple {
    pub fn satisfies_constraints(&self, k: u32) -> bool {
        let Self { mu, i, nu, j, a, b } = *self;
        mu <= i
            && i <= k
            && nu <= j
            && j <= k
            && a <= k - i
            && b <= k - j
            && j as i64 + b as i64 - nu as i64 == i as i64 + a as i64 - mu as i64 - 1
    }
}

/// Enumerates the full index set for ambient weight `k`.
pub fn enumerate_box(k: u32) -> BTreeSet<BoxTuple> {
    let mut out = BTreeSet::new();
    for i in 0..=k {
        for mu in 0..=i {
            for a in 0..=k - i {
                for j in 0..=k {
                    for nu in 0..=j {
                        for b in 0..=k - j {
                            let t = BoxTuple { mu, i, nu, j, a, b };
                            if j as i64 + b as i64 - nu as i64
                                == i as i64 + a as i64 - mu as i64 - 1
                            {
                                out.insert(t);
                            }
                        }
                    }
                }
            }
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::bundle::frac;

    fn decomp(parts: &[(u32, u64)]) -> Sl2Decomposition {
        Sl2Decomposition::from_components(parts.iter().copied())
    }

    #[test]
    fn clebsch_gordan_small_cases() {
        // weight multiset of S^1 (x) S^1 is {2, 0, 0, -2}
        assert_eq!(clebsch_gordan(1, 1), decomp(&[(2, 1), (0, 1)]));
        assert_eq!(clebsch_gordan(3, 0), decomp(&[(3, 1)]));
        assert_eq!(clebsch_gordan(2, 1), decomp(&[(3, 1), (1, 1)]));
    }

    #[test]
    fn clebsch_gordan_dimension() {
        for a in 0..=12u32 {
            for b in 0..=12u32 {
                assert_eq!(
                    clebsch_gordan(a, b).total_rank(),
                    (a as u64 + 1) * (b as u64 + 1)
                );
            }
        }
    }

    #[test]
    fn tensor_of_standards() {
        let std = Sl2Decomposition::standard();
        assert_eq!(std.tensor(&std), decomp(&[(2, 1), (0, 1)]));
    }

    #[test]
    fn tensor_of_mixed_decompositions() {
        let v = decomp(&[(1, 1), (0, 1)]);
        let got = v.tensor(&v);
        assert_eq!(got, decomp(&[(2, 1), (1, 2), (0, 2)]));
        assert_eq!(got.total_rank(), 9);
    }

    #[test]
    fn trivial_is_tensor_identity() {
        let x = decomp(&[(4, 2), (1, 3), (0, 1)]);
        assert_eq!(x.tensor(&Sl2Decomposition::trivial()), x);
    }

    #[test]
    fn dual_is_identity() {
        let x = decomp(&[(1, 2), (0, 3)]);
        assert_eq!(x.dual(), x);
        assert_eq!(Sl2Decomposition::empty().dual(), Sl2Decomposition::empty());
        assert_eq!(decomp(&[(4, 1)]).dual(), decomp(&[(4, 1)]));
    }

    #[test]
    fn tensor_power_cases() {
        let std = Sl2Decomposition::standard();
        assert_eq!(std.tensor_power(2, 0), decomp(&[(2, 1), (0, 1)]));
        assert_eq!(
            decomp(&[(3, 2), (0, 7)]).tensor_power(0, 0),
            Sl2Decomposition::trivial()
        );
        let v = decomp(&[(1, 1), (0, 1)]);
        assert_eq!(v.tensor_power(1, 1), decomp(&[(2, 1), (1, 2), (0, 2)]));
        assert_eq!(v.tensor_power(2, 1), v.tensor(&v).tensor(&v));
    }

    #[test]
    fn tensor_power_rank_is_power_of_rank() {
        let v = decomp(&[(1, 1), (0, 2)]);
        assert_eq!(v.tensor_power(2, 1), v.tensor(&v).tensor(&v));
        assert_eq!(v.tensor_power(2, 1).total_rank(), 4u64.pow(3));
    }

    #[test]
    fn higgs_grading_cases() {
        let c = CurveNumerics::new(0, 4); // deg L = 1
        let got = higgs_grading(2, &c, 1).unwrap();
        let expected = GradedBundle::new(vec![
            PolystablePiece::new(rat(2), 1).unwrap(),
            PolystablePiece::new(rat(0), 1).unwrap(),
            PolystablePiece::new(rat(-2), 1).unwrap(),
        ]);
        assert_eq!(got, expected);

        let got = higgs_grading(0, &c, 5).unwrap();
        assert_eq!(
            got,
            GradedBundle::new(vec![PolystablePiece::new(rat(0), 5).unwrap()])
        );

        let c3 = CurveNumerics::new(0, 3); // deg L = 1/2
        let got = higgs_grading(1, &c3, 2).unwrap();
        let expected = GradedBundle::new(vec![
            PolystablePiece::new(frac(1, 2), 2).unwrap(),
            PolystablePiece::new(frac(-1, 2), 2).unwrap(),
        ]);
        assert_eq!(got, expected);
    }

    #[test]
    fn higgs_grading_propagates_base_error() {
        let bad = CurveNumerics::new(0, 0);
        assert!(higgs_grading(2, &bad, 1).is_err());
    }

    #[test]
    fn unitary_rank_reads_index_zero() {
        assert_eq!(decomp(&[(1, 2), (0, 3)]).unitary_rank(), 3);
        assert_eq!(Sl2Decomposition::empty().unitary_rank(), 0);
        let end_of_standard = Sl2Decomposition::standard().tensor_power(1, 1);
        assert_eq!(end_of_standard, decomp(&[(2, 1), (0, 1)]));
        assert_eq!(end_of_standard.unitary_rank(), 1);
    }

    #[test]
    fn box_weight_one() {
        let got = enumerate_box(1);
        assert_eq!(got.len(), 4);
        let m = |mu, i, nu, j, a, b| BoxTuple { mu, i, nu, j, a, b };
        assert!(got.contains(&m(0, 1, 0, 0, 0, 0)));
        assert!(got.contains(&m(0, 0, 0, 0, 1, 0)));
        assert!(got.contains(&m(0, 1, 1, 1, 0, 0)));
        assert!(got.contains(&m(0, 0, 1, 1, 1, 0)));
    }

    #[test]
    fn box_tuples_satisfy_defining_constraint() {
        for k in 0..=3 {
            for t in enumerate_box(k) {
                assert!(t.satisfies_constraints(k));
                assert_eq!(
                    t.j as i64 + t.b as i64 - t.nu as i64,
                    t.i as i64 + t.a as i64 - t.mu as i64 - 1
                );
            }
        }
    }

    #[test]
    fn box_weight_zero_is_empty() {
        assert!(enumerate_box(0).is_empty());
    }
}
