//! Maximum of the weakly reflected walk `S_j = max(S_{j-1} + X_j, 0)`
//! (a down-step at the origin is absorbed in place), by the same three
//! exact methods as the strong variant.

use crate::exactnum::{rat_int, theta_series, PowerSeries, Rat};
use crate::reflect_common::{max_moments_f64, max_pmf_matrix, ReflectRule};
use crate::walkcore::{Mode, Moments, Pmf, WalkError, WalkParams};
use num_traits::{One, Zero};
use std::collections::HashMap;

fn check(params: &WalkParams) -> Result<(), WalkError> {
    params.expect_mode(Mode::WeakReflect)
}

/// pmf of `M_n = max_j S_j` via absorbing-barrier matrices.
pub fn max_pmf_matrix_method(n: usize, params: &WalkParams) -> Result<Pmf, WalkError> {
    check(params)?;
    max_pmf_matrix(n, ReflectRule::Weak, params)
}

/// Joint table G_n(x, a) = P{S_n = x, M_n = a}:
///   G_1(x, a) = p[x = a = 1] + q[x = a = 0];
///   G_{n+1}(0, a) = q G_n(0, a) + q G_n(1, a);
///   G_{n+1}(1, a) = p G_n(0, 0)[a = 1] + p G_n(0, a) + q G_n(2, a) for a > 1,
///     with the G_n(2, ·) term absent when a = 1;
///   interior and top rows mirror the strong recurrence.
pub fn joint_endpoint_max(
    n: usize,
    params: &WalkParams,
) -> Result<HashMap<(i64, i64), Rat>, WalkError> {
    check(params)?;
    if params.is_lazy() {
        return Err(WalkError::Unsupported(
            "the endpoint/maximum recurrence requires r = 0; use the matrix method".into(),
        ));
    }
    let p = params.p();
    let q = params.q();
    let mut g: HashMap<(i64, i64), Rat> = HashMap::new();
    if n == 0 {
        g.insert((0, 0), Rat::one());
        return Ok(g);
    }
    g.insert((1, 1), p.clone());
    g.insert((0, 0), q.clone());
    let get = |g: &HashMap<(i64, i64), Rat>, x: i64, a: i64| -> Rat {
        g.get(&(x, a)).cloned().unwrap_or_else(Rat::zero)
    };
    for m in 1..n {
        let mut next: HashMap<(i64, i64), Rat> = HashMap::new();
        let hi = (m + 1) as i64;
        for a in 0..=hi {
            for x in 0..=a {
                let v = if a == 0 {
                    // stuck at the origin so far
                    get(&g, 0, 0) * q
                } else if x == 0 {
                    (get(&g, 0, a) + get(&g, 1, a)) * q
                } else if x == a {
                    if a == 1 {
                        (get(&g, 0, 0) + get(&g, 0, 1)) * p
                    } else {
                        (get(&g, a - 1, a - 1) + get(&g, a - 1, a)) * p
                    }
                } else if x == 1 {
                    get(&g, 0, a) * p + get(&g, 2, a) * q
                } else {
                    get(&g, x - 1, a) * p + get(&g, x + 1, a) * q
                };
                if !v.is_zero() {
                    next.insert((x, a), v);
                }
            }
        }
        g = next;
    }
    Ok(g)
}

/// pmf of the maximum by summing the endpoint/maximum recurrence.
pub fn max_pmf_recurrence(n: usize, params: &WalkParams) -> Result<Pmf, WalkError> {
    let table = joint_endpoint_max(n, params)?;
    let mut acc: HashMap<i64, Rat> = HashMap::new();
    for ((_x, a), v) in table {
        *acc.entry(a).or_insert_with(Rat::zero) += v;
    }
    Pmf::new(acc.into_iter().collect())
}

/// T_a(λ) = 2^a p^a θ^a /
///          (2^{2a+1} p^a q^{a+1} (θ − 2p) + θ^{2a+1} (θ − 2q)) for a >= 1.
fn t_series(a: usize, theta: &PowerSeries, params: &WalkParams, order: usize) -> PowerSeries {
    debug_assert!(a >= 1);
    let p = params.p();
    let q = params.q();
    let pow_rat = |base: &Rat, e: usize| -> Rat {
        let mut out = Rat::one();
        for _ in 0..e {
            out *= base;
        }
        out
    };
    let numerator = theta
        .pow(a)
        .scale(&(pow_rat(&rat_int(2), a) * pow_rat(p, a)));
    let d1 = (theta - &PowerSeries::constant(rat_int(2) * p, order))
        .scale(&(pow_rat(&rat_int(2), 2 * a + 1) * pow_rat(p, a) * pow_rat(q, a + 1)));
    let d2 = &(theta - &PowerSeries::constant(rat_int(2) * q, order)) * &theta.pow(2 * a + 1);
    let denominator = &d1 + &d2;
    numerator.div(&denominator).expect("nonzero constant term")
}

/// pmf of the maximum via generating functions:
/// P{M_n = a} = [λ^n] (θ² − 4pq)/(1 − λ) (T_a − T_{a+1}) for a >= 1, and
/// P{M_n = 0} = q^n exactly (the walk must refuse every up-step).
pub fn max_pmf_series(n: usize, params: &WalkParams) -> Result<Pmf, WalkError> {
    check(params)?;
    if params.is_lazy() {
        return Err(WalkError::Unsupported(
            "the generating-function route requires r = 0; use the matrix method".into(),
        ));
    }
    if n == 0 {
        return Ok(Pmf::point_mass(0));
    }
    let order = n + 1;
    let theta = theta_series(params.p(), params.q(), order).expect("valid step law");
    let theta2 = &theta * &theta;
    let four_pq = PowerSeries::constant(rat_int(4) * params.p() * params.q(), order);
    let geom = PowerSeries::one(order)
        .div(&(&PowerSeries::one(order) - &PowerSeries::lambda(order)))
        .unwrap();
    let front = &(&theta2 - &four_pq) * &geom;
    let q = params.q();
    let mut entries = Vec::new();
    let mut zero_mass = Rat::one();
    for _ in 0..n {
        zero_mass *= q;
    }
    entries.push((0, zero_mass));
    let mut t_cur = t_series(1, &theta, params, order);
    for a in 1..=n {
        let t_next = t_series(a + 1, &theta, params, order);
        let gf = &front * &(&t_cur - &t_next);
        let mass = gf.coeff(n).clone();
        if !mass.is_zero() {
            entries.push((a as i64, mass));
        }
        t_cur = t_next;
    }
    Pmf::new(entries)
}

/// Closed-form generating function of P{S_n = a, M_n = a} for a >= 1:
/// G(λ, a, a) = 2^a p^a (θ² − 4pq)(θ² + 4pq) θ^a /
///              (2^{2a+3} p^{a+1} q^{a+2} (θ − 2p) + θ^{2a+3} (θ − 2q)),
/// plus G(λ, 0, 0) = qλ/(1 − qλ).
pub fn endpoint_at_max_gf(
    a: usize,
    order: usize,
    params: &WalkParams,
) -> Result<PowerSeries, WalkError> {
    check(params)?;
    let p = params.p();
    let q = params.q();
    if a == 0 {
        let lam = PowerSeries::lambda(order);
        let numerator = lam.scale(q);
        let denominator = &PowerSeries::one(order) - &PowerSeries::lambda(order).scale(q);
        return Ok(numerator.div(&denominator).unwrap());
    }
    let theta = theta_series(p, q, order).expect("valid step law");
    let theta2 = &theta * &theta;
    let pow_rat = |base: &Rat, e: usize| -> Rat {
        let mut out = Rat::one();
        for _ in 0..e {
            out *= base;
        }
        out
    };
    let four_pq = rat_int(4) * p * q;
    let minus = &theta2 - &PowerSeries::constant(four_pq.clone(), order);
    let plus = &theta2 + &PowerSeries::constant(four_pq, order);
    let numerator =
        (&(&minus * &plus) * &theta.pow(a)).scale(&(pow_rat(&rat_int(2), a) * pow_rat(p, a)));
    let d1 = (&theta - &PowerSeries::constant(rat_int(2) * p, order))
        .scale(&(pow_rat(&rat_int(2), 2 * a + 3) * pow_rat(p, a + 1) * pow_rat(q, a + 2)));
    let d2 = &(&theta - &PowerSeries::constant(rat_int(2) * q, order)) * &theta.pow(2 * a + 3);
    let denominator = &d1 + &d2;
    Ok(numerator.div(&denominator).expect("nonzero constant term"))
}

/// Closed-form generating function of P{M_n = 1}:
/// pλ / ((1 − qλ)(1 − qλ − pqλ²)).
pub fn max_level_one_gf(order: usize, params: &WalkParams) -> Result<PowerSeries, WalkError> {
    check(params)?;
    let p = params.p();
    let q = params.q();
    let lam = PowerSeries::lambda(order);
    let one = PowerSeries::one(order);
    let numerator = lam.scale(p);
    let f1 = &one - &lam.scale(q);
    let f2 = &(&one - &lam.scale(q)) - &(&lam * &lam).scale(&(p * q));
    let denominator = &f1 * &f2;
    Ok(numerator.div(&denominator).unwrap())
}

/// Moments via the exact recurrence.
pub fn moments_exact(n: usize, params: &WalkParams) -> Result<Moments, WalkError> {
    if params.is_lazy() {
        return Ok(max_pmf_matrix_method(n, params)?.moments());
    }
    Ok(max_pmf_recurrence(n, params)?.moments())
}

/// Float moments by parallel survival DP; intended for large n.
pub fn moments_float(n: usize, params: &WalkParams) -> Result<Moments, WalkError> {
    check(params)?;
    Ok(max_moments_f64(n, ReflectRule::Weak, params))
}

/// Exact recurrence up to n = 512, float survival DP beyond.
pub fn moments_auto(n: usize, params: &WalkParams) -> Result<Moments, WalkError> {
    if n <= 512 {
        moments_exact(n, params)
    } else {
        moments_float(n, params)
    }
}
