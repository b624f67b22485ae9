use hwdesign::compose::status::necessary;
use hwdesign::compose::{hwp_status, HwpStatus};
use proptest::prelude::*;

proptest! {
    #[test]
    fn never_solvable_when_necessary_fails(
        v in 3u64..400,
        m in 3u64..40,
        n in 3u64..40,
        alpha in 0u64..200,
        beta in 0u64..200,
    ) {
        let s = hwp_status(v, m, n, alpha, beta);
        if necessary(v, m, n, alpha, beta).is_err() {
            prop_assert!(matches!(s, HwpStatus::NecessaryFail(_)), "{s}");
        }
    }

    #[test]
    fn symmetric_in_the_two_lengths(v in 3u64..400, m in 3u64..40, n in 3u64..40, alpha in 0u64..200) {
        let beta = ((v - 1) / 2).saturating_sub(alpha);
        let a = hwp_status(v, m, n, alpha, beta);
        let b = hwp_status(v, n, m, beta, alpha);
        prop_assert_eq!(std::mem::discriminant(&a), std::mem::discriminant(&b));
    }

    #[test]
    fn every_split_of_a_valid_order_is_classified(m in prop::sample::select(vec![3u64, 5, 7, 9]), t in 1u64..4) {
        let n = 2 * m * t + 1;
        let v = m * n;
        for beta in 0..=(v - 1) / 2 {
            let s = hwp_status(v, m, n, (v - 1) / 2 - beta, beta);
            prop_assert!(!matches!(s, HwpStatus::NecessaryFail(_)), "beta={} {}", beta, s);
        }
    }
}
