//! Large-n predictions for the extreme-value moments, the special constants
//! they involve, and the sech-sum probes that recover those constants from
//! the reflected-walk limit laws.

use crate::walkcore::{Mode, Moments, WalkError, WalkParams};
use num_traits::ToPrimitive;
use std::f64::consts::PI;

/// Catalan's constant Σ (−1)^k / (2k+1)², summed in adjacent pairs so each
/// pair decays like 1/k³; the pair tail after J pairs is below 1/(16J²).
pub fn catalan(tol: f64) -> f64 {
    let pairs = ((1.0 / (16.0 * tol)).sqrt().ceil() as usize).max(4);
    let mut total = 0.0;
    let mut c = 0.0;
    for j in 0..pairs {
        let k = 2 * j; // terms k and k+1 share a sign pattern +,−
        let a = 1.0 / ((2 * k + 1) as f64).powi(2);
        let b = 1.0 / ((2 * k + 3) as f64).powi(2);
        let t = a - b;
        let y = t - c;
        let s = total + y;
        c = (s - total) - y;
        total = s;
    }
    total
}

/// Euler's constant via H_N − ln N − 1/(2N) + 1/(12N²) − 1/(120N⁴) with a
/// compensated harmonic sum; N = 10⁴ leaves an error far below 1e−12.
pub fn euler_gamma() -> f64 {
    let n = 10_000u64;
    let mut h = 0.0;
    let mut c = 0.0;
    for k in 1..=n {
        let t = 1.0 / k as f64;
        let y = t - c;
        let s = h + y;
        c = (s - h) - y;
        h = s;
    }
    let nf = n as f64;
    h - nf.ln() - 1.0 / (2.0 * nf) + 1.0 / (12.0 * nf * nf) - 1.0 / (120.0 * nf.powi(4))
}

/// Scenario selector for the sech probes of [`sech_probe`].
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ProbeScenario {
    /// Integer levels a = 1, 2, …: the strong-reflection limit law.
    Strong,
    /// Half-integer levels a + 1/2: the weak-reflection limit law.
    Weak,
}

/// First-moment probe √(2/π) · t · Σ_a sech(a·t) (strong) or
/// sech((a + 1/2)·t) (weak); both converge to √(π/2) as t → 0.
/// Terms are dropped once sech < 1e−18.
pub fn sech_probe(scenario: ProbeScenario, t: f64) -> f64 {
    assert!(t > 0.0, "probe needs t > 0");
    let mut total = 0.0;
    for a in 1..usize::MAX {
        let level = match scenario {
            ProbeScenario::Strong => a as f64,
            ProbeScenario::Weak => a as f64 - 0.5,
        };
        let s = 1.0 / (level * t).cosh();
        if s < 1e-18 {
            break;
        }
        total += s;
    }
    (2.0 / PI).sqrt() * t * total
}

/// Second-moment probe t² Σ_a a·sech(a·t) (strong) or the (a + 1/2)-weighted
/// analogue (weak); both converge to 2G, twice Catalan's constant.
pub fn sech_probe_second_moment(scenario: ProbeScenario, t: f64) -> f64 {
    assert!(t > 0.0, "probe needs t > 0");
    let mut total = 0.0;
    for a in 1..usize::MAX {
        let level = match scenario {
            ProbeScenario::Strong => a as f64,
            ProbeScenario::Weak => a as f64 - 0.5,
        };
        let s = level / (level * t).cosh();
        if s * t < 1e-18 && level * t > 1.0 {
            break;
        }
        total += s;
    }
    t * t * total
}

/// Leading-order predictions for the plain-walk one-sided maximum M_n^+.
pub fn plain_max_prediction(n: usize, params: &WalkParams) -> Result<Moments, WalkError> {
    params.expect_mode(Mode::Plain)?;
    let n = n as f64;
    let p = params.p().to_f64().unwrap();
    if params.p() == params.q() {
        let scale = 1.0 - params.r().to_f64().unwrap();
        let mean = (2.0 * scale * n / PI).sqrt() - 0.5;
        let m2 = scale * n - (2.0 * scale * n / PI).sqrt() + 0.5;
        Ok(Moments::from_mean_m2(mean, m2))
    } else {
        // p < q: the maximum converges to a geometric-type limit
        if params.is_lazy() {
            return Err(WalkError::Unsupported(
                "no lazy biased prediction implemented".into(),
            ));
        }
        let mean = p / (1.0 - 2.0 * p);
        let m2 = p / (1.0 - 2.0 * p).powi(2);
        Ok(Moments::from_mean_m2(mean, m2))
    }
}

/// Leading-order predictions for the two-sided minimum statistic M_n^-
/// (depth below the origin) for a biased walk.
pub fn plain_min_prediction(n: usize, params: &WalkParams) -> Result<Moments, WalkError> {
    params.expect_mode(Mode::Plain)?;
    if params.p() == params.q() {
        // symmetric: same law as the maximum
        return plain_max_prediction(n, params);
    }
    if params.is_lazy() {
        return Err(WalkError::TooLarge(
            "no lazy biased prediction implemented".into(),
        ));
    }
    let n = n as f64;
    let p = params.p().to_f64().unwrap();
    let drift = 1.0 - 2.0 * p;
    let mean = drift * n + p / drift;
    let m2 =
        drift * drift * n * n + 2.0 * (3.0 - 2.0 * p) * p * n - (3.0 - 4.0 * p) * p / drift.powi(2);
    Ok(Moments::from_mean_m2(mean, m2))
}

/// Leading-order cross-moment prediction E(M_n^+ M_n^-).
pub fn plain_cross_prediction(n: usize, params: &WalkParams) -> Result<f64, WalkError> {
    params.expect_mode(Mode::Plain)?;
    let nf = n as f64;
    if params.p() == params.q() {
        if params.is_lazy() {
            return Err(WalkError::Unsupported(
                "no lazy cross prediction implemented".into(),
            ));
        }
        return Ok((2.0 * std::f64::consts::LN_2 - 1.0) * nf);
    }
    if params.is_lazy() {
        return Err(WalkError::TooLarge(
            "no lazy biased prediction implemented".into(),
        ));
    }
    let p = params.p().to_f64().unwrap();
    let drift = 1.0 - 2.0 * p;
    Ok(p * nf - (2.0 - 3.0 * p) * p / drift.powi(2))
}

/// Reflected-walk predictions at p = q (possibly lazy): mean √(π(1−r)n/2),
/// second moment 2G(1−r)n where G is Catalan's constant. The same limit law
/// covers both reflection rules.
pub fn reflected_prediction(n: usize, params: &WalkParams) -> Result<Moments, WalkError> {
    match params.mode() {
        Mode::StrongReflect | Mode::WeakReflect => {}
        other => {
            return Err(WalkError::WrongMode {
                expected: Mode::StrongReflect,
                actual: other,
            })
        }
    }
    if params.p() != params.q() {
        return Err(WalkError::Unsupported(
            "reflected prediction implemented for p = q only".into(),
        ));
    }
    let scale = 1.0 - params.r().to_f64().unwrap();
    let nf = n as f64;
    let mean = (PI * scale * nf / 2.0).sqrt();
    let m2 = 2.0 * catalan(1e-14) * scale * nf;
    Ok(Moments::from_mean_m2(mean, m2))
}

/// Scaling constants of the traffic-light walk (period-3 step law with one
/// forced down-step per period, weak reflection):
/// E(M_n) ∼ c₁√n with c₁ = √(π/12) and E(M_n²) ∼ c₂·n with c₂ = G/3.
pub fn traffic_light_constants() -> (f64, f64) {
    ((PI / 12.0).sqrt(), catalan(1e-14) / 3.0)
}

/// Persistent-walk predictions: with repeat probability α = 1 − β the
/// maximum obeys E(M_n) ∼ √(α/β)(√(2n/π) − (1/2)√(α/β)) and
/// Var(M_n) ∼ (α/β)(1 − 2/π)n.
pub fn persistent_prediction(n: usize, alpha: f64) -> Result<Moments, WalkError> {
    if !(0.0..1.0).contains(&alpha) {
        return Err(WalkError::Unsupported(format!(
            "persistence parameter must be in [0, 1), got {alpha}"
        )));
    }
    let beta = 1.0 - alpha;
    let rho = (alpha / beta).sqrt();
    let nf = n as f64;
    let mean = rho * ((2.0 * nf / PI).sqrt() - 0.5 * rho);
    let var = rho * rho * (1.0 - 2.0 / PI) * nf;
    let m2 = var + mean * mean;
    Ok(Moments::from_mean_m2(mean, m2))
}

/// Named constants surfaced by the `constants` command.
pub fn constant_table(tol: f64) -> Vec<(&'static str, f64)> {
    vec![
        ("catalan", catalan(tol)),
        ("euler_gamma", euler_gamma()),
        ("sqrt_pi_over_2", (PI / 2.0).sqrt()),
        ("two_catalan", 2.0 * catalan(tol)),
        ("sqrt_pi_over_12", (PI / 12.0).sqrt()),
        ("catalan_over_3", catalan(tol) / 3.0),
        ("two_ln2_minus_1", 2.0 * std::f64::consts::LN_2 - 1.0),
        ("one_minus_2_over_pi", 1.0 - 2.0 / PI),
    ]
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactnum::rat;

    #[test]
    fn catalan_reference_value() {
        let g = catalan(1e-14);
        assert!((g - 0.915_965_594_177_219).abs() < 1e-12, "G={g}");
    }

    #[test]
    fn gamma_reference_value() {
        let g = euler_gamma();
        assert!((g - 0.577_215_664_901_532_9).abs() < 1e-12, "gamma={g}");
    }

    #[test]
    fn probes_converge_to_constants() {
        let target1 = (PI / 2.0).sqrt();
        let target2 = 2.0 * catalan(1e-14);
        for scenario in [ProbeScenario::Strong, ProbeScenario::Weak] {
            // the integer-level sum carries an O(t) endpoint correction
            // (≈ √(2/π)·t/2); the half-integer sum converges much faster
            let fine = sech_probe(scenario, 0.001);
            assert!((fine - target1).abs() < 1e-3, "{scenario:?}: {fine}");
            let fine2 = sech_probe_second_moment(scenario, 0.001);
            assert!((fine2 - target2).abs() < 1e-4, "{scenario:?}: {fine2}");
        }
        // the integer-level probe error shrinks with t
        let coarse = sech_probe(ProbeScenario::Strong, 0.1);
        let fine = sech_probe(ProbeScenario::Strong, 0.001);
        assert!((fine - target1).abs() < (coarse - target1).abs());
    }

    #[test]
    fn symmetric_plain_prediction_tracks_exact() {
        let params = WalkParams::plain(rat(1, 2)).unwrap();
        let n = 400;
        let exact = crate::extrema_joint::symmetric_max_mean(n)
            .to_f64()
            .unwrap();
        let predicted = plain_max_prediction(n, &params).unwrap().mean;
        assert!((exact - predicted).abs() < 0.02, "{exact} vs {predicted}");
    }

    #[test]
    fn biased_min_prediction_reasonable() {
        let params = WalkParams::plain(rat(1, 3)).unwrap();
        let m = plain_min_prediction(200, &params).unwrap();
        assert!((m.mean - 203.0 / 3.0).abs() < 1e-12);
    }

    #[test]
    fn traffic_light_values() {
        let (c1, c2) = traffic_light_constants();
        assert!((c1 - 0.511_663_353_972_5).abs() < 1e-10, "c1={c1}");
        assert!((c2 - 0.305_321_864_725_7).abs() < 1e-10, "c2={c2}");
    }

    #[test]
    fn persistent_reduces_to_plain_at_half() {
        // α = 1/2 makes every step an independent fair coin
        let pers = persistent_prediction(1000, 0.5).unwrap();
        let plain = plain_max_prediction(1000, &WalkParams::plain(rat(1, 2)).unwrap()).unwrap();
        assert!((pers.mean - plain.mean).abs() < 1e-12);
        // the plain prediction keeps the +1/4 constant term in the variance
        assert!((pers.variance - plain.variance).abs() < 0.26);
    }
}
