//! Property tests for the exact-arithmetic invariants of the engines.

use proptest::collection::vec;
use proptest::prelude::*;

use relprop_core::bundle::{rat, CurveNumerics, GradedBundle, PolystablePiece, Rational};
use relprop_core::hodge::{HodgeVector, Pairing};
use relprop_core::rpc::{rpc_check, RpcInput};
use relprop_core::sl2::{higgs_grading, Sl2Decomposition};

fn gcd(mut a: u64, mut b: u64) -> u64 {
    while b != 0 {
        (a, b) = (b, a % b);
    }
    a
}

fn small_rational() -> impl Strategy<Value = Rational> {
    (-60i64..=60, 1i64..=12).prop_map(|(p, q)| Rational::new(p, q))
}

fn piece() -> impl Strategy<Value = PolystablePiece> {
    (small_rational(), 1u64..=9).prop_map(|(s, r)| PolystablePiece::new(s, r).unwrap())
}

fn bundle() -> impl Strategy<Value = GradedBundle> {
    vec(piece(), 0..8).prop_map(GradedBundle::new)
}

fn shimura_curve() -> impl Strategy<Value = CurveNumerics> {
    (0u32..=3, 0u32..=8)
        .prop_map(|(genus, cusps)| CurveNumerics::new(genus, cusps))
        .prop_filter("needs 2g - 2 + s > 0", |c| c.chi_log() > 0)
}

fn sl2_decomp() -> impl Strategy<Value = Sl2Decomposition> {
    vec((0u32..=6, 1u64..=4), 0..4).prop_map(Sl2Decomposition::from_components)
}

fn hodge_vector() -> impl Strategy<Value = HodgeVector> {
    (0i64..=4)
        .prop_flat_map(|weight| {
            let len = weight as usize + 1;
            let half = len.div_ceil(2);
            (Just(weight), vec(0u64..=5, half))
        })
        .prop_map(|(weight, half)| {
            let len = weight as usize + 1;
            let mut numbers = vec![0u64; len];
            for (i, &h) in half.iter().enumerate() {
                numbers[i] = h;
                numbers[len - 1 - i] = h;
            }
            if numbers.iter().all(|&h| h == 0) {
                numbers[0] = 1;
                numbers[len - 1] = 1;
            }
            HodgeVector::new(weight, numbers).unwrap()
        })
}

proptest! {
    #[test]
    fn rational_addition_cross_multiplies(
        a in -1_000_000i64..=1_000_000, b in 1i64..=1_000,
        c in -1_000_000i64..=1_000_000, d in 1i64..=1_000,
    ) {
        let sum = Rational::new(a, b) + Rational::new(c, d);
        // (a/b + c/d) = (ad + cb)/(bd), compared exactly after reduction
        prop_assert_eq!(sum * rat(b) * rat(d), rat(a * d + c * b));
        prop_assert!(*sum.denom() > 0);
        prop_assert_eq!(gcd(sum.numer().unsigned_abs(), sum.denom().unsigned_abs()), 1);
    }

    #[test]
    fn slope_decompose_is_idempotent_and_preserving(b in bundle()) {
        let f = b.slope_decompose();
        prop_assert_eq!(f.total_rank(), b.rank());
        prop_assert_eq!(f.total_degree(), b.degree());
        for w in f.quotients().windows(2) {
            prop_assert!(w[0].slope() < w[1].slope());
        }
        prop_assert_eq!(f.to_bundle().slope_decompose(), f);
    }

    #[test]
    fn decomposition_ignores_piece_order(pieces in vec(piece(), 0..8)) {
        let forward = GradedBundle::new(pieces.clone());
        let mut reversed = pieces;
        reversed.reverse();
        prop_assert_eq!(forward.slope_decompose(), GradedBundle::new(reversed).slope_decompose());
    }

    #[test]
    fn tensor_degree_formula(a in bundle(), b in bundle()) {
        let t = a.tensor(&b);
        prop_assert_eq!(
            t.degree(),
            rat(a.rank() as i64) * b.degree() + rat(b.rank() as i64) * a.degree()
        );
        prop_assert_eq!(t.rank(), a.rank() * b.rank());
    }

    #[test]
    fn direct_sum_adds_rank_and_degree(a in bundle(), b in bundle()) {
        let s = a.direct_sum(&b);
        prop_assert_eq!(s.rank(), a.rank() + b.rank());
        prop_assert_eq!(s.degree(), a.degree() + b.degree());
    }

    #[test]
    fn dual_is_an_involution(b in bundle()) {
        prop_assert_eq!(b.dual().dual(), b.clone());
        prop_assert_eq!(b.dual().degree(), -b.degree());
    }

    #[test]
    fn deg_l_is_half_the_negated_log_tangent(genus in 0u32..=6, cusps in 0u32..=12) {
        let c = CurveNumerics::new(genus, cusps);
        match c.deg_l() {
            Ok(l) => prop_assert_eq!(l, -c.deg_log_tangent() / rat(2)),
            Err(_) => prop_assert!(c.chi_log() <= 0),
        }
    }

    #[test]
    fn sl2_tensor_commutes_and_associates(
        x in sl2_decomp(), y in sl2_decomp(), z in sl2_decomp()
    ) {
        prop_assert_eq!(x.tensor(&y), y.tensor(&x));
        prop_assert_eq!(x.tensor(&y).tensor(&z), x.tensor(&y.tensor(&z)));
        prop_assert_eq!(x.tensor(&y).total_rank(), x.total_rank() * y.total_rank());
    }

    #[test]
    fn higgs_grading_is_balanced(i in 0u32..=7, c in shimura_curve(), t_rank in 1u64..=5) {
        let g = higgs_grading(i, &c, t_rank).unwrap();
        prop_assert_eq!(g.degree(), rat(0));
        prop_assert_eq!(g.rank(), (i as u64 + 1) * t_rank);
        // slope multiset symmetric under negation
        prop_assert_eq!(g.dual(), g);
    }

    #[test]
    fn unitary_rank_counts_slope_zero_higgs_kernels(x in sl2_decomp(), c in shimura_curve()) {
        // The Higgs kernel of S^i(L) (x) T_i is its lowest graded piece, of
        // slope -i deg L; it contributes at slope zero only for i = 0.
        let mut kernel_rank_at_zero = 0;
        for (i, t) in x.components() {
            let grading = higgs_grading(i, &c, t).unwrap();
            let lowest = grading.pieces().first().copied().unwrap();
            prop_assert_eq!(lowest.slope(), rat(-(i as i64)) * c.deg_l().unwrap());
            if lowest.slope() == rat(0) {
                kernel_rank_at_zero += lowest.rank();
            }
        }
        prop_assert_eq!(kernel_rank_at_zero, x.unitary_rank());
    }

    #[test]
    fn hodge_convolve_commutes_and_associates(
        x in hodge_vector(), y in hodge_vector(), z in hodge_vector()
    ) {
        prop_assert_eq!(x.convolve(&y), y.convolve(&x));
        prop_assert_eq!(x.convolve(&y).convolve(&z), x.convolve(&y.convolve(&z)));
        prop_assert_eq!(x.convolve(&y).dim(), x.dim() * y.dim());
    }

    #[test]
    fn hodge_dual_is_an_involution(x in hodge_vector()) {
        prop_assert_eq!(x.dual().dual(), x.clone());
        prop_assert_eq!(x.dual().weight(), -x.weight());
        prop_assert_eq!(x.dual().dim(), x.dim());
    }

    #[test]
    fn squares_split_the_tensor_square(x in hodge_vector()) {
        let d = x.dim();
        prop_assert_eq!(x.sym2().dim(), d * (d + 1) / 2);
        prop_assert_eq!(x.wedge2().dim(), d * (d - 1) / 2);
        prop_assert_eq!(x.sym2().dim() + x.wedge2().dim(), d * d);
    }

    #[test]
    fn lie_dims_are_symmetric(x in hodge_vector()) {
        let pairing = if x.weight() % 2 == 0 { Pairing::Orthogonal } else { Pairing::Symplectic };
        let dims = x.lie_hodge_dims(pairing).unwrap();
        for (p, d) in dims.entries() {
            prop_assert_eq!(dims.dim(-p), d);
        }
    }

    #[test]
    fn rpc_report_ignores_input_piece_order(pieces in vec(piece(), 1..6)) {
        let curve = CurveNumerics::new(0, 4);
        let forward = GradedBundle::new(pieces.clone()).slope_decompose();
        let mut shuffled = pieces;
        let mid = shuffled.len() / 2;
        shuffled.rotate_left(mid);
        shuffled.reverse();
        let backward = GradedBundle::new(shuffled).slope_decompose();
        // matching sub data: take each ambient quotient itself
        let sub: Vec<_> = forward.quotients().iter().copied().map(Some).collect();
        let a = rpc_check(&RpcInput::new(curve, forward, sub.clone()).unwrap()).unwrap();
        let b = rpc_check(&RpcInput::new(curve, backward, sub).unwrap()).unwrap();
        prop_assert_eq!(&a, &b);
        prop_assert!(a.rpc_holds);
        prop_assert_eq!(a.combined_lhs, a.combined_rhs);
    }
}
