//! Maximum of the strongly reflected walk `S_j = |S_{j-1} + X_j|`
//! (reflection by absolute value), by three independent exact methods:
//! absorbing matrices, an endpoint/maximum recurrence, and rational
//! generating functions in the first-passage kernel θ(λ).

use crate::exactnum::{rat_int, theta_series, PowerSeries, Rat};
use crate::reflect_common::{max_moments_f64, max_pmf_matrix, ReflectRule};
use crate::walkcore::{Mode, Moments, Pmf, WalkError, WalkParams};
use num_traits::{One, Zero};
use std::collections::HashMap;

fn check(params: &WalkParams) -> Result<(), WalkError> {
    params.expect_mode(Mode::StrongReflect)
}

/// pmf of `M_n = max_j S_j` via absorbing-barrier matrices.
pub fn max_pmf_matrix_method(n: usize, params: &WalkParams) -> Result<Pmf, WalkError> {
    check(params)?;
    max_pmf_matrix(n, ReflectRule::Strong, params)
}

/// Joint table F_n(x, a) = P{S_n = x, M_n = a} by forward recurrence:
///   F_1(x, a) = [x = 1][a = 1];
///   F_{n+1}(0, a) = q F_n(1, a);
///   F_{n+1}(1, a) = F_n(0, a) + q F_n(2, a) for a > 1,
///   F_{n+1}(1, 1) = F_n(0, 1);
///   F_{n+1}(x, a) = p F_n(x−1, a) + q F_n(x+1, a) for 1 < x < a;
///   F_{n+1}(a, a) = p F_n(a−1, a−1) + p F_n(a−1, a) for a > 1 (new record
///   or repeat visit), and F_{n+1}(1, 1) as above.
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
    let mut f: HashMap<(i64, i64), Rat> = HashMap::new();
    if n == 0 {
        f.insert((0, 0), Rat::one());
        return Ok(f);
    }
    f.insert((1, 1), Rat::one());
    let get = |f: &HashMap<(i64, i64), Rat>, x: i64, a: i64| -> Rat {
        f.get(&(x, a)).cloned().unwrap_or_else(Rat::zero)
    };
    for m in 1..n {
        let mut next: HashMap<(i64, i64), Rat> = HashMap::new();
        let hi = (m + 1) as i64;
        for a in 1..=hi {
            for x in 0..=a {
                let v = if x == 0 {
                    get(&f, 1, a) * q
                } else if x == a {
                    if a == 1 {
                        get(&f, 0, 1)
                    } else {
                        (get(&f, a - 1, a - 1) + get(&f, a - 1, a)) * p
                    }
                } else if x == 1 {
                    get(&f, 0, a) + get(&f, 2, a) * q
                } else {
                    get(&f, x - 1, a) * p + get(&f, x + 1, a) * q
                };
                if !v.is_zero() {
                    next.insert((x, a), v);
                }
            }
        }
        f = next;
    }
    Ok(f)
}

/// pmf of the maximum by summing the endpoint/maximum recurrence over
/// endpoints.
pub fn max_pmf_recurrence(n: usize, params: &WalkParams) -> Result<Pmf, WalkError> {
    let table = joint_endpoint_max(n, params)?;
    let mut acc: HashMap<i64, Rat> = HashMap::new();
    for ((_x, a), v) in table {
        *acc.entry(a).or_insert_with(Rat::zero) += v;
    }
    Pmf::new(acc.into_iter().collect())
}

/// Generating function Σ_n P{M_n >= a, walk confined appropriately} piece:
/// T_a(λ) = 2^a p^{a−1} θ^a /
///          (2^{2a} p^{a−1} q^{a+1} (θ² − 4p²) + θ^{2a} (θ² − 4q²)),
/// so that P{M_n <= a} is the λ^n coefficient of
/// (θ² − 4pq)/(1 − λ) · T-difference expressions; see [`max_pmf_series`].
fn t_series(a: usize, theta: &PowerSeries, params: &WalkParams, order: usize) -> PowerSeries {
    let p = params.p();
    let q = params.q();
    let two = rat_int(2);
    let theta2 = theta * theta;
    let four_p2 = rat_int(4) * p * p;
    let four_q2 = rat_int(4) * q * q;
    let pow_rat = |base: &Rat, e: usize| -> Rat {
        let mut out = Rat::one();
        for _ in 0..e {
            out *= base;
        }
        out
    };
    debug_assert!(a >= 1);
    let c_num = pow_rat(&two, a) * pow_rat(p, a - 1);
    let numerator = theta.pow(a).scale(&c_num);
    let d1 = (&theta2 - &PowerSeries::constant(four_p2.clone(), order))
        .scale(&(pow_rat(&two, 2 * a) * pow_rat(p, a - 1) * pow_rat(q, a + 1)));
    let d2 = &(&theta2 - &PowerSeries::constant(four_q2.clone(), order)) * &theta.pow(2 * a);
    let denominator = &d1 + &d2;
    numerator.div(&denominator).expect("nonzero constant term")
}

/// pmf of the maximum via generating functions: for a >= 1,
/// P{M_n = a} = [λ^n] (θ² − 4pq)/(1 − λ) (T_a − T_{a+1}), and
/// P{M_n = 0} = 1 − Σ_{a>=1} P{M_n = a} (zero for n >= 1, since the first
/// reflected step forces level 1).
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
    let mut entries = Vec::new();
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

/// Closed-form generating function of P{S_n = a, M_n = a} (walk sitting at a
/// fresh or revisited maximum):
/// F(λ, a, a) = 2^a p^{a−1} (θ² − 4pq)(θ² + 4pq) θ^a /
///              (2^{2a+2} p^a q^{a+2} (θ² − 4p²) + θ^{2a+2} (θ² − 4q²)).
pub fn endpoint_at_max_gf(
    a: usize,
    order: usize,
    params: &WalkParams,
) -> Result<PowerSeries, WalkError> {
    check(params)?;
    assert!(a >= 1);
    let p = params.p();
    let q = params.q();
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
        (&(&minus * &plus) * &theta.pow(a)).scale(&(pow_rat(&rat_int(2), a) * pow_rat(p, a - 1)));
    let d1 = (&theta2 - &PowerSeries::constant(rat_int(4) * p * p, order))
        .scale(&(pow_rat(&rat_int(2), 2 * a + 2) * pow_rat(p, a) * pow_rat(q, a + 2)));
    let d2 = &(&theta2 - &PowerSeries::constant(rat_int(4) * q * q, order)) * &theta.pow(2 * a + 2);
    let denominator = &d1 + &d2;
    Ok(numerator.div(&denominator).expect("nonzero constant term"))
}

/// Alternative generating function of P{M_n = a} built from the diagonal
/// closed forms: (1/(1 − λ)) (2pθ/(θ² + 4pq)) (F(a−1,a−1) − F(a,a)) for
/// a >= 2, and λ(1 + qλ)/(1 − qλ²) for a = 1. Matching [`max_pmf_series`]
/// coefficientwise ties the diagonal closed forms to the barrier series.
pub fn max_level_gf(a: usize, order: usize, params: &WalkParams) -> Result<PowerSeries, WalkError> {
    check(params)?;
    assert!(a >= 1);
    let p = params.p();
    let q = params.q();
    if a == 1 {
        let lam = PowerSeries::lambda(order);
        let lam2 = &lam * &lam;
        let numerator = &lam * &(&PowerSeries::one(order) + &lam.scale(q));
        let denominator = &PowerSeries::one(order) - &lam2.scale(q);
        return Ok(numerator.div(&denominator).unwrap());
    }
    let theta = theta_series(p, q, order).expect("valid step law");
    let theta2 = &theta * &theta;
    let four_pq = PowerSeries::constant(rat_int(4) * p * q, order);
    let geom = PowerSeries::one(order)
        .div(&(&PowerSeries::one(order) - &PowerSeries::lambda(order)))
        .unwrap();
    let kernel = theta
        .scale(&(rat_int(2) * p))
        .div(&(&theta2 + &four_pq))
        .unwrap();
    let diff = &endpoint_at_max_gf(a - 1, order, params)? - &endpoint_at_max_gf(a, order, params)?;
    Ok(&(&geom * &kernel) * &diff)
}

/// Moments of the maximum: exact when n is small enough for the recurrence,
/// float survival DP beyond (`exact_cutoff` defaults to 512 via
/// [`moments_auto`]).
pub fn moments_exact(n: usize, params: &WalkParams) -> Result<Moments, WalkError> {
    if params.is_lazy() {
        return Ok(max_pmf_matrix_method(n, params)?.moments());
    }
    Ok(max_pmf_recurrence(n, params)?.moments())
}

/// Float moments by parallel survival DP; intended for large n.
pub fn moments_float(n: usize, params: &WalkParams) -> Result<Moments, WalkError> {
    check(params)?;
    Ok(max_moments_f64(n, ReflectRule::Strong, params))
}

/// Exact recurrence up to n = 512, float survival DP beyond.
pub fn moments_auto(n: usize, params: &WalkParams) -> Result<Moments, WalkError> {
    if n <= 512 {
        moments_exact(n, params)
    } else {
        moments_float(n, params)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactnum::rat;
    use crate::oracle;

    fn strong(pn: i64, pd: i64) -> WalkParams {
        WalkParams::plain(rat(pn, pd))
            .unwrap()
            .with_mode(Mode::StrongReflect)
    }

    #[test]
    fn three_methods_agree_with_oracle() {
        for params in [strong(1, 2), strong(1, 3), strong(2, 5)] {
            for n in 1..=8usize {
                let or =
                    oracle::enumerate_pmf(n, &params, oracle::WalkStatistic::ReflectedMax).unwrap();
                assert_eq!(
                    max_pmf_matrix_method(n, &params).unwrap(),
                    or,
                    "matrix n={n}"
                );
                assert_eq!(
                    max_pmf_recurrence(n, &params).unwrap(),
                    or,
                    "recurrence n={n}"
                );
                assert_eq!(max_pmf_series(n, &params).unwrap(), or, "series n={n}");
            }
        }
    }

    #[test]
    fn methods_agree_beyond_oracle() {
        let params = strong(1, 3);
        for n in [12usize, 20] {
            let m = max_pmf_matrix_method(n, &params).unwrap();
            assert_eq!(m, max_pmf_recurrence(n, &params).unwrap());
            assert_eq!(m, max_pmf_series(n, &params).unwrap());
        }
    }

    #[test]
    fn endpoint_gfs_match_recurrence() {
        let params = strong(1, 3);
        let order = 14;
        for a in 1..=4usize {
            let gf = endpoint_at_max_gf(a, order, &params).unwrap();
            let gf1 = max_level_gf(a, order, &params).unwrap();
            for n in 1..order {
                let table = joint_endpoint_max(n, &params).unwrap();
                let at_max = table
                    .get(&(a as i64, a as i64))
                    .cloned()
                    .unwrap_or_else(Rat::zero);
                assert_eq!(gf.coeff(n), &at_max, "F(a,a) a={a} n={n}");
                let level = max_pmf_recurrence(n, &params).unwrap().prob(a as i64);
                assert_eq!(gf1.coeff(n), &level, "P(M={a}) n={n}");
            }
        }
    }

    #[test]
    fn first_step_forces_level_one() {
        let params = strong(1, 2);
        let pmf = max_pmf_matrix_method(1, &params).unwrap();
        assert_eq!(pmf, crate::walkcore::Pmf::point_mass(1));
        for n in 1..=6usize {
            assert!(max_pmf_recurrence(n, &params).unwrap().prob(0).is_zero());
        }
    }

    #[test]
    fn float_moments_match_exact() {
        let params = strong(1, 2);
        let e = moments_exact(40, &params).unwrap();
        let f = moments_float(40, &params).unwrap();
        assert!((e.mean - f.mean).abs() < 1e-10);
        assert!((e.second_moment - f.second_moment).abs() < 1e-9);
    }
}
