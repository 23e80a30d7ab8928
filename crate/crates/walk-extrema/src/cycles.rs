//! Maximum of a downward-biased walk over one excursion from the origin
//! back to the origin ("cycle"), exact distribution and float moments, plus
//! the independent-copies maximum and its log-periodic asymptotic profile.

use crate::exactnum::Rat;
use crate::walkcore::{WalkError, WalkParams};
use num_traits::{One, ToPrimitive, Zero};

/// Cycle-maximum law for p < q with x = p/q.
#[derive(Debug, Clone)]
pub struct CycleLaw {
    x: f64,
    x_exact: Rat,
}

impl CycleLaw {
    /// Requires a strictly downward-biased plain walk (p < q).
    pub fn new(params: &WalkParams) -> Result<Self, WalkError> {
        if params.p() >= params.q() {
            return Err(WalkError::Unsupported(
                "cycle maxima need p < q so the excursion returns".into(),
            ));
        }
        if params.is_lazy() {
            return Err(WalkError::Unsupported(
                "cycle maxima are defined for r = 0".into(),
            ));
        }
        let x_exact = params.p() / params.q();
        let x = x_exact.to_f64().unwrap();
        Ok(Self { x, x_exact })
    }

    pub fn x(&self) -> f64 {
        self.x
    }

    /// Exact P{M < k} = (1 − x^{k−1}) / (1 − x^k) for k >= 1.
    pub fn cdf_below_exact(&self, k: u32) -> Rat {
        assert!(k >= 1);
        let num = Rat::one() - pow_rat(&self.x_exact, k - 1);
        let den = Rat::one() - pow_rat(&self.x_exact, k);
        num / den
    }

    /// Exact P{M = k} for k >= 0 (the k = 0 case is impossible: the first
    /// step of an excursion that returns must first leave 0, so M >= 1).
    pub fn pmf_exact(&self, k: u32) -> Rat {
        if k == 0 {
            return Rat::zero();
        }
        self.cdf_below_exact(k + 1) - self.cdf_below_exact(k)
    }

    /// P{M = k} in closed form:
    /// (1/x − 1)(x^k/(1 − x^k) − x^{k+1}/(1 − x^{k+1})).
    pub fn pmf_closed_form(&self, k: u32) -> Rat {
        if k == 0 {
            return Rat::zero();
        }
        let lead = self.x_exact.recip() - Rat::one();
        let t1 = pow_rat(&self.x_exact, k) / (Rat::one() - pow_rat(&self.x_exact, k));
        let t2 = pow_rat(&self.x_exact, k + 1) / (Rat::one() - pow_rat(&self.x_exact, k + 1));
        lead * (t1 - t2)
    }

    /// E(M) = ((1 − x)/x) Σ_{k>=1} x^k / (1 − x^k), to absolute tolerance.
    pub fn mean(&self, tol: f64) -> f64 {
        let lead = (1.0 - self.x) / self.x;
        lead * self.sum(tol / lead, |_k, xk| xk / (1.0 - xk))
    }

    /// E(M²) = ((1 − x)/x) (2 Σ k x^k/(1 − x^k) − Σ x^k/(1 − x^k)).
    pub fn second_moment(&self, tol: f64) -> f64 {
        let lead = (1.0 - self.x) / self.x;
        let s1 = self.sum(tol / (4.0 * lead), |k, xk| k as f64 * xk / (1.0 - xk));
        let s0 = self.sum(tol / (4.0 * lead), |_k, xk| xk / (1.0 - xk));
        lead * (2.0 * s1 - s0)
    }

    fn sum(&self, tol: f64, term: impl Fn(u32, f64) -> f64) -> f64 {
        let mut total = 0.0;
        let mut c = 0.0;
        let mut xk = self.x;
        for k in 1..100_000u32 {
            let t = term(k, xk);
            let y = t - c;
            let s = total + y;
            c = (s - total) - y;
            total = s;
            if t.abs() < tol && k > 4 {
                break;
            }
            xk *= self.x;
        }
        total
    }

    /// Mean of the maximum over n independent cycles, by the tail sum
    /// E(max) = Σ_{k>=1} (1 − P{M < k}^n) = Σ_{k>=1} (1 − cdf(k−1)^n)
    /// where cdf(k) = P{M <= k}.
    pub fn copies_mean(&self, n: u64, tol: f64) -> f64 {
        let mut total = 0.0;
        let mut c = 0.0;
        for k in 1..1_000_000u32 {
            let cdf = self.cdf_below_exact(k).to_f64().unwrap(); // P{M <= k-1}
            let t = 1.0 - cdf.powf(n as f64);
            let y = t - c;
            let s = total + y;
            c = (s - total) - y;
            total = s;
            if t < tol && k as f64 > (n as f64).log2() {
                break;
            }
        }
        total
    }

    /// Same mean by weighting the copies pmf directly:
    /// Σ_k k (cdf(k)^n − cdf(k−1)^n); used as a cross-check of the tail sum.
    pub fn copies_mean_pmf(&self, n: u64, tol: f64) -> f64 {
        let mut total = 0.0;
        let mut prev = 0.0f64; // cdf(0)^n = P{M <= 0}^n = 0
        for k in 1..1_000_000u32 {
            let cdf = self.cdf_below_exact(k + 1).to_f64().unwrap(); // P{M <= k}
            let cur = cdf.powf(n as f64);
            total += k as f64 * (cur - prev);
            if 1.0 - cur < tol && k as f64 > (n as f64).log2() {
                break;
            }
            prev = cur;
        }
        total
    }
}

fn pow_rat(base: &Rat, e: u32) -> Rat {
    let mut out = Rat::one();
    for _ in 0..e {
        out *= base;
    }
    out
}

/// Auxiliary constant Σ_{k>=1} k / (2^k − 1) that appears in the second
/// moment at x = 1/2.
pub fn aux_sum_k_over_2k_minus_1(tol: f64) -> f64 {
    let mut total = 0.0;
    let mut c = 0.0;
    let mut p2 = 2.0f64;
    for k in 1..10_000u32 {
        let t = k as f64 / (p2 - 1.0);
        let y = t - c;
        let s = total + y;
        c = (s - total) - y;
        total = s;
        if t < tol && k > 4 {
            break;
        }
        p2 *= 2.0;
    }
    total
}

/// Residual of the copies mean against the profile log2(n) + γ/ln2 + c.
/// Returns (copies mean, profile value with the supplied constant c).
pub fn copies_profile(n: u64, c: f64, tol: f64, law: &CycleLaw) -> (f64, f64) {
    let mean = law.copies_mean(n, tol);
    let gamma = crate::asymptotics::euler_gamma();
    let profile = (n as f64).log2() + gamma / std::f64::consts::LN_2 + c;
    (mean, profile)
}
