mod common;

use common::*;
use proptest::prelude::*;

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn laurent_ring_laws(a in laurent(), b in laurent(), c in laurent()) {
        ring_laws(&a, &b, &c)?;
    }

    #[test]
    fn qbinomial_is_palindromic((n, k) in (0u64..=30).prop_flat_map(|n| (Just(n), 0..=n))) {
        qbinomial_shape(n, k)?;
    }

    #[test]
    fn qbinomial_methods_agree((n, k) in (0u64..=30).prop_flat_map(|n| (Just(n), 0..=n))) {
        qbinomial_methods(n, k)?;
    }

    #[test]
    fn cyclotomic_product_and_value_at_one(m in 1u64..=120) {
        cyclotomic_laws(m)?;
    }

    #[test]
    fn inverse_satisfies_bezout(f in laurent(), m in 1u64..=12, k in 1u32..=3) {
        bezout(&f, m, k)?;
    }

    #[test]
    fn ljunggren_specializes_to_wolstenholme(n in 1u64..=15) {
        ljunggren_matches_wolstenholme(n)?;
    }

    #[test]
    fn main_congruence_is_trivial_at_m_one(
        n in prop::array::uniform4(0u64..=3),
        alpha in prop::sample::select(vec!["ksq", "nonsym"]),
    ) {
        main_at_m_one(n, alpha)?;
    }

    #[test]
    fn parallel_sweep_equals_serial(hi in 1i64..=6, jobs in 2usize..=6) {
        parallel_matches_serial(hi, jobs)?;
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(6))]

    #[test]
    fn specialization_at_one(p in prop::sample::select(vec![5u64, 7]), n in 1u64..=3) {
        q_one_pathway(p, n)?;
    }
}
