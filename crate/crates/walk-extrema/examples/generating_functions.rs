//! The exact power-series layer: the first-passage kernel θ(λ), the
//! identities it satisfies, and closed-form generating functions whose
//! coefficients reproduce the dynamic-programming answers.

use num_traits::Zero;
use walk_extrema::exactnum::{rat, rat_int, theta_series, PowerSeries, Rat};
use walk_extrema::extrema_joint::{symmetric_eta, symmetric_max_mean, symmetric_xi};
use walk_extrema::reflect_strong;
use walk_extrema::walkcore::{Mode, WalkParams};

fn main() {
    let params = WalkParams::plain(rat(1, 3)).unwrap();
    let order = 12;
    let theta = theta_series(params.p(), params.q(), order).unwrap();
    println!("θ(λ) = (1 − √(1 − 4pqλ²))/λ at p = 1/3, first coefficients:");
    for (k, c) in theta.coeffs().iter().enumerate().take(8) {
        if !c.is_zero() {
            println!("  [λ^{k}] = {c}");
        }
    }

    // defining quadratic: λθ² − 2θ + 4pqλ = 0
    let lambda = PowerSeries::lambda(order);
    let four_pq = rat_int(4) * params.p() * params.q();
    let quad =
        &(&(&lambda * &(&theta * &theta)) - &theta.scale(&rat_int(2))) + &lambda.scale(&four_pq);
    assert!(quad.is_zero());
    println!("λθ² − 2θ + 4pqλ = 0 holds to order {order}");

    // closed-form GF of P(M_n = a) for the strongly reflected walk matches
    // the recurrence coefficientwise
    let strong = params.with_mode(Mode::StrongReflect);
    let a = 2;
    let gf = reflect_strong::max_level_gf(a, order, &strong).unwrap();
    println!("\nstrong reflection, P(M_n = {a}) from the closed-form GF:");
    for n in 1..8 {
        let direct = reflect_strong::max_pmf_recurrence(n, &strong)
            .unwrap()
            .prob(a as i64);
        assert_eq!(gf.coeff(n), &direct);
        println!("  n = {n}: {direct}");
    }

    // symmetric walk: ξ and η generate 2^n·E(M_n) and 2^n·E(M_n²), and
    // ξ_n + η_n = n·2^n
    let xi = symmetric_xi(10);
    let eta = symmetric_eta(10);
    println!("\nfair walk, E(max) from the ξ series:");
    for n in 1..8usize {
        let scale = Rat::from_integer(2i64.pow(n as u32).into());
        assert_eq!(xi.coeff(n), &(symmetric_max_mean(n) * &scale));
        assert_eq!(xi.coeff(n) + eta.coeff(n), rat_int(n as i64) * scale);
        println!("  n = {n}: E(max) = {}", symmetric_max_mean(n));
    }
}
