//! Joint law of the running maximum M⁺ and absolute running minimum M⁻ of a
//! plain ±1 walk: the full exact table, its marginals, and the cross-moment
//! E(M⁺M⁻) against its large-n limit (2 ln 2 − 1)·n for the fair walk.

use num_traits::ToPrimitive;
use walk_extrema::asymptotics::plain_cross_prediction;
use walk_extrema::exactnum::rat;
use walk_extrema::extrema_joint::{
    cross_moment_band, cross_moment_f64, joint_pmf, marginal_max_pmf, Side,
};
use walk_extrema::walkcore::{Arith, WalkParams};

fn main() {
    let params = WalkParams::plain(rat(1, 3)).unwrap();
    let n = 6;
    let joint = joint_pmf(n, &params).unwrap();
    println!("joint law of (max, |min|) at n = {n}, p = 1/3:");
    for (&(a, b), prob) in joint.entries() {
        println!("  P(max = {a}, |min| = {b}) = {prob}");
    }

    let plus = marginal_max_pmf(n, Side::Plus, &params).unwrap();
    let minus = marginal_max_pmf(n, Side::Minus, &params).unwrap();
    assert_eq!(
        joint.marginal(true),
        plus,
        "marginals agree with the direct formula"
    );
    assert_eq!(joint.marginal(false), minus);
    println!(
        "\nE(max)  = {} = {:.6}",
        plus.mean_exact(),
        plus.mean_exact().to_f64().unwrap()
    );
    println!(
        "E(|min|) = {} = {:.6}",
        minus.mean_exact(),
        minus.mean_exact().to_f64().unwrap()
    );

    // fair walk: E(M⁺M⁻)/n approaches 2 ln 2 − 1 ≈ 0.3863
    let fair = WalkParams::plain(rat(1, 2)).unwrap();
    let exact = cross_moment_band(16, &fair, Arith::Exact).unwrap();
    println!(
        "n =   16: E(max·|min|) = {} = {:.4}, large-n prediction {:.4}",
        exact,
        exact.to_f64().unwrap(),
        plain_cross_prediction(16, &fair).unwrap()
    );
    for n in [64usize, 256] {
        let float = cross_moment_f64(n, &fair).unwrap();
        let predicted = plain_cross_prediction(n, &fair).unwrap();
        println!("n = {n:4}: E(max·|min|) = {float:.4}, large-n prediction {predicted:.4}");
    }
}
