//! Randomized checks of the constructive bound pipelines.

mod common;

use idcode_core::bound::{ball_size_bound, closest_violation, code_from_independent_set, constructive_upper_bound, greedy_independent_set};
use idcode_core::codes::is_identifying;
use idcode_core::{Error, Radius, VertexSet};
use num_bigint::BigInt;
use num_rational::BigRational;
use proptest::prelude::*;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn pipeline_codes_are_valid_and_within_bound(seed in any::<u64>(), n in 8usize..=60, delta in 3usize..=5, r in 1usize..=2) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let g = common::random_connected_twin_free(&mut rng, n, delta);
        let r = Radius::new(r).unwrap();
        match constructive_upper_bound(&g, r) {
            Ok(rep) => {
                prop_assert!(is_identifying(&g, &rep.code, r).unwrap().valid);
                prop_assert_eq!(rep.code.len(), n - rep.mapped_set.len());
                prop_assert_eq!(rep.mapped_set.len(), rep.independent_set.len());
                let ceiling = rep.bound_value.expect("Δ >= 3");
                prop_assert!(ceiling.admits(rep.code.len()));
            }
            Err(Error::Twins { .. }) => prop_assert!(r.get() > 1),
            Err(e) => prop_assert!(false, "{}", e),
        }
    }

    #[test]
    fn greedy_set_covers_and_is_large(seed in any::<u64>(), n in 8usize..=60, delta in 3usize..=5, d in 1usize..=7) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let g = common::random_connected_twin_free(&mut rng, n, delta);
        let set = greedy_independent_set(&g, d).unwrap();
        prop_assert_eq!(closest_violation(&g, &set, d), None);
        let mut covered = VertexSet::empty(n);
        for x in &set {
            covered.union_with(&g.closed_ball(x, d - 1).unwrap());
        }
        prop_assert_eq!(covered, VertexSet::full(n));

        let largest = (0..n).map(|x| g.closed_ball(x, d - 1).unwrap().len()).max().unwrap();
        prop_assert!(set.len() * largest >= n);
        // n / max |B_{d-1}| >= n (Δ-2) / (Δ(Δ-1)^{d-1} - 2)
        let delta = BigInt::from(g.max_degree());
        let closed = BigRational::new(
            BigInt::from(n) * (&delta - 2),
            &delta * num_traits::pow(&delta - 1, d - 1) - 2,
        );
        prop_assert_eq!(BigRational::new(BigInt::from(n), ball_size_bound(g.max_degree(), d)), closed.clone());
        prop_assert!(BigRational::new(BigInt::from(n), BigInt::from(largest)) >= closed);
    }

    #[test]
    fn radius_transfer(seed in any::<u64>(), n in 8usize..=30, delta in 3usize..=4, r in 1usize..=3, start in 0usize..8) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let g = common::random_connected_twin_free(&mut rng, n, delta);
        let r = Radius::new(r).unwrap();
        let power = g.power(r);
        let i = greedy_independent_set(&g, 3 * r.get() + 1).unwrap();
        let shifted = VertexSet::from_vertices(n, [start % n]).unwrap().union(&i);
        for candidate in [i, shifted] {
            prop_assert_eq!(
                code_from_independent_set(&g, &candidate, r).is_ok(),
                code_from_independent_set(&power, &candidate, Radius::ONE).is_ok()
            );
        }
    }
}
