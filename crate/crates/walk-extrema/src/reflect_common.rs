//! Shared machinery for the two reflected-walk variants: exact nonnegative
//! state vectors, absorbing-barrier transition matrices, and the float
//! survival DP used for large-horizon moment computation.

use crate::exactnum::Rat;
use crate::walkcore::{Moments, Pmf, WalkError, WalkParams};
use num_traits::{One, ToPrimitive, Zero};
use rayon::prelude::*;

/// Which reflection rule a shared routine should apply at the origin.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ReflectRule {
    /// `S_j = |S_{j-1} + X_j|`: from 0 the next state is 1 with probability 1.
    Strong,
    /// `S_j = max(S_{j-1} + X_j, 0)`: from 0 the walk stays at 0 with
    /// probability q and moves to 1 with probability p.
    Weak,
}

/// One step of the absorbing-barrier chain on {0, 1, …, a}: interior states
/// move up with probability p, down with q, and stay with r, state a is
/// absorbing, and the origin row is set by the reflection rule. `v[x]` is
/// the probability of being at x with the barrier not yet hit.
pub fn step_absorbing_exact(
    v: &[Rat],
    a: usize,
    rule: ReflectRule,
    params: &WalkParams,
) -> Vec<Rat> {
    let p = params.p();
    let q = params.q();
    let r = params.r();
    let mut out = vec![Rat::zero(); a + 1];
    for (x, mass) in v.iter().enumerate() {
        if mass.is_zero() {
            continue;
        }
        if x == a {
            out[a] += mass; // absorbed
            continue;
        }
        if x == 0 {
            match rule {
                // |0 ± 1| = 1, so any nonzero step leaves the origin
                ReflectRule::Strong => {
                    out[1] += mass * (p + q);
                    if !r.is_zero() {
                        out[0] += mass * r;
                    }
                }
                ReflectRule::Weak => {
                    out[0] += mass * (q + r);
                    out[1] += mass * p;
                }
            }
        } else {
            out[x + 1] += mass * p;
            out[x - 1] += mass * q;
            if !r.is_zero() {
                out[x] += mass * r;
            }
        }
    }
    out
}

/// P{the reflected walk hits level a by time n}, exact, via the absorbing
/// chain. `hit(0, n) = 1` by convention (the walk starts at 0).
pub fn hit_probability_exact(a: usize, n: usize, rule: ReflectRule, params: &WalkParams) -> Rat {
    if a == 0 {
        return Rat::one();
    }
    let mut v = vec![Rat::zero(); a + 1];
    v[0] = Rat::one();
    for _ in 0..n {
        v = step_absorbing_exact(&v, a, rule, params);
    }
    v[a].clone()
}

/// Exact pmf of the running maximum of the reflected walk via absorbing
/// matrices: P{M_n = a} = hit(a, n) − hit(a+1, n).
pub fn max_pmf_matrix(n: usize, rule: ReflectRule, params: &WalkParams) -> Result<Pmf, WalkError> {
    let amax = match rule {
        ReflectRule::Strong => n.max(1), // first step forces level 1
        ReflectRule::Weak => n,
    };
    let mut entries = Vec::new();
    let mut upper = Rat::one();
    for a in 0..=amax as i64 {
        let next = if (a as usize) < amax {
            hit_probability_exact(a as usize + 1, n, rule, params)
        } else {
            Rat::zero()
        };
        let mass = &upper - &next;
        if !mass.is_zero() {
            entries.push((a, mass));
        }
        upper = next;
    }
    Pmf::new(entries)
}

/// Float survival probability P{M_n < a} for the reflected walk with barrier
/// a, by powering the sub-stochastic chain on {0, …, a−1}.
fn survive_below_f64(a: usize, n: usize, rule: ReflectRule, p: f64, q: f64, r: f64) -> f64 {
    debug_assert!(a >= 1);
    let dim = a; // states 0..a-1
    let mut v = vec![0.0f64; dim];
    v[0] = 1.0;
    let mut buf = vec![0.0f64; dim];
    for _ in 0..n {
        for slot in buf.iter_mut() {
            *slot = 0.0;
        }
        for x in 0..dim {
            let mass = v[x];
            if mass == 0.0 {
                continue;
            }
            if x == 0 {
                match rule {
                    ReflectRule::Strong => {
                        if dim > 1 {
                            buf[1] += mass * (p + q);
                        }
                        // a == 1: any nonzero step from 0 is absorbed
                        buf[0] += mass * r;
                    }
                    ReflectRule::Weak => {
                        buf[0] += mass * (q + r);
                        if dim > 1 {
                            buf[1] += mass * p;
                        }
                    }
                }
            } else {
                if x + 1 < dim {
                    buf[x + 1] += mass * p;
                }
                buf[x - 1] += mass * q;
                buf[x] += mass * r;
            }
        }
        std::mem::swap(&mut v, &mut buf);
        let total: f64 = v.iter().sum();
        if total < 1e-300 {
            return 0.0;
        }
    }
    v.iter().sum()
}

/// Float mean and second moment of the reflected-walk maximum at large
/// horizons, by the tail-sum identities E(M) = Σ_a P{M >= a} and
/// E(M²) = Σ_a (2a − 1) P{M >= a}, each tail obtained from its own survival
/// DP. Barriers run in parallel; the tail is cut once P{M >= a} < 1e−14.
pub fn max_moments_f64(n: usize, rule: ReflectRule, params: &WalkParams) -> Moments {
    let p = params.p().to_f64().unwrap();
    let q = params.q().to_f64().unwrap();
    let r = params.r().to_f64().unwrap();
    // generous barrier bound: fluctuations are O(√n) for p = q and O(1)/O(n)
    // otherwise; 12√n + 64 covers the symmetric case far past 1e−14 mass
    let bound = ((12.0 * (n as f64).sqrt()) as usize + 64).min(n + 1);
    // find the actual cutoff cheaply and then parallelize the heavy DPs
    let tails: Vec<f64> = (1..=bound)
        .into_par_iter()
        .map(|a| 1.0 - survive_below_f64(a, n, rule, p, q, r))
        .collect();
    let mut mean = 0.0;
    let mut m2 = 0.0;
    let mut c_mean = 0.0;
    let mut c_m2 = 0.0;
    for (i, &t) in tails.iter().enumerate() {
        if t < 1e-14 {
            break;
        }
        let a = (i + 1) as f64;
        // Kahan-compensated accumulation in fixed index order
        let y = t - c_mean;
        let s = mean + y;
        c_mean = (s - mean) - y;
        mean = s;
        let y2 = (2.0 * a - 1.0) * t - c_m2;
        let s2 = m2 + y2;
        c_m2 = (s2 - m2) - y2;
        m2 = s2;
    }
    Moments::from_mean_m2(mean, m2)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactnum::rat;

    fn plain(pn: i64, pd: i64) -> WalkParams {
        WalkParams::plain(rat(pn, pd)).unwrap()
    }

    #[test]
    fn strong_hits_level_one_immediately() {
        let params = plain(1, 2);
        assert_eq!(
            hit_probability_exact(1, 1, ReflectRule::Strong, &params),
            Rat::one()
        );
        // weak walk reaches 1 by time 1 only via an up-step
        assert_eq!(
            hit_probability_exact(1, 1, ReflectRule::Weak, &params),
            rat(1, 2)
        );
    }

    #[test]
    fn float_matches_exact_moments() {
        for params in [plain(1, 2), plain(1, 3)] {
            for rule in [ReflectRule::Strong, ReflectRule::Weak] {
                let pmf = max_pmf_matrix(12, rule, &params).unwrap();
                let exact = pmf.moments();
                let float = max_moments_f64(12, rule, &params);
                assert!((exact.mean - float.mean).abs() < 1e-10);
                assert!((exact.second_moment - float.second_moment).abs() < 1e-10);
            }
        }
    }
}
