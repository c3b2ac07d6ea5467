use proptest::prelude::*;

use flagorbits::classifier::classify;
use flagorbits::truncation::{minimum_total, stabilization_threshold};
use flagorbits::{
    truncate, Block, GeneralizedFlagDescriptor, LieType, ParabolicSignature, TruncationPolicy,
};

fn block() -> impl Strategy<Value = Block> {
    prop_oneof![(1u32..=4).prop_map(Block::Finite), Just(Block::Inf)]
}

fn signature(t: LieType) -> impl Strategy<Value = ParabolicSignature> {
    prop::collection::vec(block(), 2..=6)
        .prop_filter_map("invalid", move |b| ParabolicSignature::new(t, b).ok())
}

/// Palindromes built from a random half, so self-dual types are hit often.
fn mirrored(t: LieType) -> impl Strategy<Value = ParabolicSignature> {
    (
        prop::collection::vec(block(), 1..=3),
        prop::option::of(block()),
    )
        .prop_filter_map("invalid", move |(half, mid)| {
            let mut b = half.clone();
            b.extend(mid);
            b.extend(half.into_iter().rev());
            ParabolicSignature::new(t, b).ok()
        })
}

fn lie_type() -> impl Strategy<Value = LieType> {
    prop_oneof![
        Just(LieType::A),
        Just(LieType::B),
        Just(LieType::C),
        Just(LieType::D)
    ]
}

fn any_signature() -> impl Strategy<Value = ParabolicSignature> {
    lie_type().prop_flat_map(|t| prop_oneof![signature(t), mirrored(t)])
}

fn descriptors(sigs: &[&ParabolicSignature]) -> Vec<GeneralizedFlagDescriptor> {
    sigs.iter().map(|s| (*s).clone().into()).collect()
}

proptest! {
    #[test]
    fn display_round_trips(sig in any_signature()) {
        let back: ParabolicSignature = sig.to_string().parse().unwrap();
        prop_assert_eq!(back, sig);
    }

    #[test]
    fn large_means_one_infinite_block(sig in any_signature()) {
        prop_assert_eq!(sig.is_large(), sig.infinite_count() == 1);
        prop_assert_eq!(sig.lambda_profile().is_large(), sig.is_large());
    }

    #[test]
    fn truncation_fills_the_total(sig in any_signature(), extra in 0usize..12) {
        let t = sig.lie_type();
        let total = (minimum_total(&sig)..).filter(|&n| t.accepts_total(n)).nth(extra).unwrap();
        let shape = truncate(&sig, total, &TruncationPolicy::Balanced).unwrap();
        prop_assert_eq!(shape.dims().iter().sum::<usize>(), total);
        for (d, b) in shape.dims().iter().zip(sig.blocks()) {
            match b {
                Block::Finite(c) => prop_assert_eq!(*d, *c as usize),
                Block::Inf => prop_assert!(*d >= 1),
            }
        }
        if t.has_form() {
            let m = shape.dims().len();
            for k in 0..m {
                prop_assert_eq!(shape.dims()[k], shape.dims()[m - 1 - k]);
            }
        }
    }

    #[test]
    fn large_totals_put_infinite_blocks_on_top(sig in signature(LieType::A), extra in 1usize..10) {
        let total = stabilization_threshold(&sig) + extra;
        let shape = truncate(&sig, total, &TruncationPolicy::Balanced).unwrap();
        let max_finite = sig.blocks().iter().filter_map(|b| b.finite()).max().unwrap_or(0) as usize;
        for (d, b) in shape.dims().iter().zip(sig.blocks()) {
            if b.is_inf() {
                prop_assert!(*d > max_finite);
            }
        }
    }

    #[test]
    fn pairs_are_finite_iff_one_is_large(
        (t, a, b) in lie_type().prop_flat_map(|t| (Just(t), mirrored(t), mirrored(t)))
    ) {
        let v = classify(t, &descriptors(&[&a, &b])).unwrap();
        prop_assert_eq!(v.is_finite(), a.is_large() || b.is_large());
    }

    #[test]
    fn triple_decision_ignores_order(
        (t, a, b, c) in lie_type().prop_flat_map(|t| (Just(t), mirrored(t), mirrored(t), mirrored(t)))
    ) {
        let base = classify(t, &descriptors(&[&a, &b, &c])).unwrap();
        for order in [[&b, &a, &c], [&c, &b, &a], [&a, &c, &b], [&b, &c, &a], [&c, &a, &b]] {
            let v = classify(t, &descriptors(&order)).unwrap();
            prop_assert_eq!(v.is_finite(), base.is_finite());
            prop_assert_eq!(v.reason(), base.reason());
        }
    }

    #[test]
    fn four_or_more_factors_are_infinite(
        (t, sigs) in lie_type().prop_flat_map(|t| (Just(t), prop::collection::vec(mirrored(t), 4..=6)))
    ) {
        let refs: Vec<&ParabolicSignature> = sigs.iter().collect();
        prop_assert!(!classify(t, &descriptors(&refs)).unwrap().is_finite());
    }
}
