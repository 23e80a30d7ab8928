//! Reproducible Monte Carlo for the walk variants with no exact theory:
//! the traffic-light walk (deterministic −1 every third step, weakly
//! reflected) and the persistent walk (direction follows a two-state Markov
//! chain). Estimates are deterministic functions of the seed, independent of
//! the worker count.

use walk_extrema::asymptotics::{persistent_prediction, traffic_light_constants};
use walk_extrema::exactnum::rat;
use walk_extrema::montecarlo::{simulate, PathStat, SimSpec, Variant};
use walk_extrema::walkcore::{Mode, WalkParams};

fn main() {
    let fair = WalkParams::plain(rat(1, 2)).unwrap();

    // traffic-light walk: E(M)/√n → √(π/12), E(M²)/n → G/3
    let spec = SimSpec {
        variant: Variant::Traffic,
        n: 30_000,
        trials: 20_000,
        seed: 7,
        params: fair.clone(),
        alpha: None,
        stat: PathStat::Max,
    };
    let est = simulate(&spec).unwrap();
    let (c_mean, c_m2) = traffic_light_constants();
    println!(
        "traffic light: E(M)/√n = {:.4} (limit {c_mean:.4}), E(M²)/n = {:.4} (limit {c_m2:.4})",
        est.mean / (spec.n as f64).sqrt(),
        est.second_moment / spec.n as f64
    );

    // persistent walk: amplitude scales by √(α/β) relative to the plain walk
    for alpha in [0.3f64, 0.5, 0.7] {
        let spec = SimSpec {
            variant: Variant::Persistent,
            n: 10_000,
            trials: 20_000,
            seed: 8,
            params: fair.clone(),
            alpha: Some(alpha),
            stat: PathStat::Max,
        };
        let est = simulate(&spec).unwrap();
        let pred = persistent_prediction(spec.n, alpha).unwrap();
        println!(
            "persistent α = {alpha}: E(M) = {:.2} ± {:.2}, predicted {:.2}",
            est.mean, est.std_error, pred.mean
        );
    }

    // determinism: rerunning the same spec reproduces the estimate bitwise
    let spec = SimSpec {
        variant: Variant::Weak,
        n: 1_000,
        trials: 10_000,
        seed: 9,
        params: fair.with_mode(Mode::WeakReflect),
        alpha: None,
        stat: PathStat::Max,
    };
    let a = simulate(&spec).unwrap();
    let b = simulate(&spec).unwrap();
    assert_eq!(a.mean.to_bits(), b.mean.to_bits());
    println!(
        "weak reflected, seed 9: E(M) = {} (bitwise reproducible)",
        a.mean
    );
}
