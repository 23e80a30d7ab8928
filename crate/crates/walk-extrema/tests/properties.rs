//! Randomized property checks over step biases and horizons, complementing
//! the fixed-value oracle tests in the unit suites.

use num_traits::{One, Zero};
use proptest::prelude::*;
use walk_extrema::exactnum::{rat, rat_int, theta_series, PowerSeries, Rat};
use walk_extrema::extrema_joint::{joint_pmf, joint_pmf_band, marginal_max_pmf, Side};
use walk_extrema::montecarlo::{self, coupled_reflection_maxima, PathStat, Variant};
use walk_extrema::walkcore::{dominates, Mode, WalkParams};
use walk_extrema::{reflect_strong, reflect_weak};

/// Step bias p = num/den with 0 < p ≤ 1/2 (the exact formulas require
/// p ≤ q), denominators kept small so exact DPs stay cheap.
fn bias() -> impl Strategy<Value = (i64, i64)> {
    (2i64..=9).prop_flat_map(|den| (1i64..=den / 2).prop_map(move |num| (num, den)))
}

fn plain(num: i64, den: i64) -> WalkParams {
    WalkParams::plain(rat(num, den)).unwrap()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(24))]

    /// The exit-law recurrence and the band double-difference are two
    /// independent derivations of the same joint law.
    #[test]
    fn joint_routes_agree((num, den) in bias(), n in 0usize..=10) {
        let params = plain(num, den);
        prop_assert_eq!(
            joint_pmf(n, &params).unwrap(),
            joint_pmf_band(n, &params).unwrap()
        );
    }

    /// Marginalizing the joint law reproduces the reflection-sum marginals.
    #[test]
    fn joint_marginals_match((num, den) in bias(), n in 0usize..=10) {
        let params = plain(num, den);
        let joint = joint_pmf(n, &params).unwrap();
        prop_assert_eq!(
            joint.marginal(true),
            marginal_max_pmf(n, Side::Plus, &params).unwrap()
        );
        prop_assert_eq!(
            joint.marginal(false),
            marginal_max_pmf(n, Side::Minus, &params).unwrap()
        );
    }

    /// The strong-reflected maximum stochastically dominates the weak one.
    #[test]
    fn strong_dominates_weak((num, den) in bias(), n in 0usize..=12) {
        let strong = plain(num, den).with_mode(Mode::StrongReflect);
        let weak = plain(num, den).with_mode(Mode::WeakReflect);
        let s = reflect_strong::max_pmf_recurrence(n, &strong).unwrap();
        let w = reflect_weak::max_pmf_recurrence(n, &weak).unwrap();
        prop_assert!(dominates(&s, &w));
    }

    /// Under a shared step sequence the weak maximum never exceeds the
    /// strong one pathwise (a stronger statement than dominance in law).
    #[test]
    fn coupled_paths_ordered((num, den) in bias(), seed in any::<u64>()) {
        let params = plain(num, den);
        for (s, w) in coupled_reflection_maxima(64, &params, seed, 32) {
            prop_assert!(s >= w, "strong {s} < weak {w}");
        }
    }

    /// θ(λ) satisfies its defining quadratic λθ² − 2θ + 4pqλ = 0 and the
    /// inversion λ = 2θ/(θ² + 4pq), coefficientwise.
    #[test]
    fn theta_identities((num, den) in bias()) {
        let params = plain(num, den);
        let order = 24usize;
        let theta = theta_series(params.p(), params.q(), order).unwrap();
        let lambda = PowerSeries::lambda(order);
        let four_pq = rat_int(4) * params.p() * params.q();
        let quad = &(&(&lambda * &(&theta * &theta)) - &theta.scale(&rat_int(2)))
            + &lambda.scale(&four_pq);
        prop_assert!(quad.is_zero());
        let recovered = theta
            .scale(&rat_int(2))
            .div(&(&(&theta * &theta) + &PowerSeries::constant(four_pq, order)))
            .unwrap();
        prop_assert_eq!(recovered, lambda);
    }

    /// Every exact pmf the library produces is normalized with support in
    /// [0, n] — checked here through the reflected recurrences.
    #[test]
    fn reflected_pmfs_normalized((num, den) in bias(), n in 0usize..=12) {
        for mode in [Mode::StrongReflect, Mode::WeakReflect] {
            let params = plain(num, den).with_mode(mode);
            let pmf = if mode == Mode::StrongReflect {
                reflect_strong::max_pmf_recurrence(n, &params).unwrap()
            } else {
                reflect_weak::max_pmf_recurrence(n, &params).unwrap()
            };
            let total: Rat = pmf.entries().iter().map(|(_, m)| m.clone()).sum();
            prop_assert!(total.is_one());
            for (v, m) in pmf.entries() {
                prop_assert!(*v >= 0 && *v <= n as i64);
                prop_assert!(!m.is_zero());
            }
        }
    }

    /// The simulator is a pure function of (seed, spec): repeated runs give
    /// bitwise-identical estimates.
    #[test]
    fn simulate_is_deterministic(seed in any::<u64>()) {
        let spec = montecarlo::spec_for_params(
            Variant::Plain,
            256,
            2_000,
            seed,
            plain(1, 2),
            PathStat::Max,
        );
        let a = montecarlo::simulate(&spec).unwrap();
        let b = montecarlo::simulate(&spec).unwrap();
        prop_assert_eq!(a.mean.to_bits(), b.mean.to_bits());
        prop_assert_eq!(a.second_moment.to_bits(), b.second_moment.to_bits());
        prop_assert_eq!(a.std_error.to_bits(), b.std_error.to_bits());
    }
}
