//! Walks with a stay probability r (a zero step): exact joint law via the
//! band double-difference, the max|S| law, and reflected maxima via the
//! absorbing-matrix method. A lazy walk spreads like a plain walk slowed by
//! the factor (1 − r), and the predictions scale accordingly.

use num_traits::ToPrimitive;
use walk_extrema::asymptotics::reflected_prediction;
use walk_extrema::exactnum::rat;
use walk_extrema::extrema_joint::{joint_pmf_band, max_abs_pmf};
use walk_extrema::walkcore::{Arith, Mode, WalkParams};
use walk_extrema::{reflect_strong, reflect_weak};

fn main() {
    let lazy = WalkParams::lazy(rat(1, 3), rat(1, 3), Mode::Plain).unwrap();
    let n = 6;

    let joint = joint_pmf_band(n, &lazy).unwrap();
    println!("lazy walk (p = q = r = 1/3), joint law at n = {n}:");
    for (&(a, b), prob) in joint.entries() {
        println!("  P(max = {a}, |min| = {b}) = {prob}");
    }
    // the all-zero path leaves both extremes at 0
    assert_eq!(joint.prob(0, 0), rat(1, 729));

    let ab = max_abs_pmf(n, &lazy, Arith::Exact).unwrap();
    println!(
        "\nmax |S| law: E = {:.6}",
        ab.mean_exact().to_f64().unwrap()
    );

    // reflected maxima: the absorbing-matrix route handles r > 0 exactly
    let strong = lazy.with_mode(Mode::StrongReflect);
    let weak = lazy.with_mode(Mode::WeakReflect);
    let s = reflect_strong::max_pmf_matrix_method(n, &strong).unwrap();
    let w = reflect_weak::max_pmf_matrix_method(n, &weak).unwrap();
    println!("\nreflected maxima at n = {n}:");
    println!("  a   strong           weak");
    for a in 0..=n as i64 {
        println!("  {a:<3} {:<16} {}", s.prob(a), w.prob(a));
    }

    // large horizons: E(M_n) ≈ √(π(1−r)n/2)
    let n = 2_000usize;
    let m = reflect_weak::moments_float(n, &weak).unwrap();
    let pred = reflected_prediction(n, &weak).unwrap();
    println!(
        "\nn = {n}: weak reflected E(M) = {:.3}, slowed-diffusion prediction {:.3}",
        m.mean, pred.mean
    );
}
