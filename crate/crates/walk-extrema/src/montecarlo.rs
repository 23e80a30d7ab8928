//! Monte Carlo estimation of the extreme-value moments for every walk
//! variant. Each trial derives its own counter-based random stream from the
//! seed and trial index, so results are bit-identical regardless of how many
//! worker threads run the trials; per-trial statistics are reduced in fixed
//! chunk order.

use crate::exactnum::Rat;
use crate::walkcore::{WalkError, WalkParams};
use num_traits::ToPrimitive;
use rayon::prelude::*;

/// splitmix64 step: advances the state by the golden-gamma increment and
/// returns the avalanche-mixed output.
#[derive(Debug, Clone)]
pub struct SplitMix64 {
    state: u64,
}

impl SplitMix64 {
    pub fn new(seed: u64) -> Self {
        Self { state: seed }
    }

    /// Stream for one trial: mixes the seed and trial index through the
    /// output avalanche twice so neighbouring trials decorrelate.
    pub fn for_trial(seed: u64, trial: u64) -> Self {
        let mut s = Self::new(seed ^ mix(trial.wrapping_mul(0x9E37_79B9_7F4A_7C15)));
        s.state = mix(s.state);
        s
    }

    pub fn next_u64(&mut self) -> u64 {
        self.state = self.state.wrapping_add(0x9E37_79B9_7F4A_7C15);
        mix(self.state)
    }

    /// Bernoulli draw with exact rational threshold num/den: true with
    /// probability exactly num/den, by comparing a 64-bit uniform draw
    /// against floor(num · 2^64 / den).
    pub fn bernoulli_exact(&mut self, num: u64, den: u64) -> bool {
        debug_assert!(den > 0 && num <= den);
        let threshold = ((num as u128) << 64) / den as u128;
        ((self.next_u64() as u128) < threshold) || num == den
    }

    /// Uniform f64 in [0, 1) with 53 random bits.
    pub fn next_f64(&mut self) -> f64 {
        (self.next_u64() >> 11) as f64 * (1.0 / (1u64 << 53) as f64)
    }
}

fn mix(mut z: u64) -> u64 {
    z = (z ^ (z >> 30)).wrapping_mul(0xBF58_476D_1CE4_E5B9);
    z = (z ^ (z >> 27)).wrapping_mul(0x94D0_49BB_1331_11EB);
    z ^ (z >> 31)
}

/// Walk variant to simulate.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Variant {
    Plain,
    Strong,
    Weak,
    Lazy,
    Traffic,
    Persistent,
}

/// Which scalar statistic of the path a simulation reports.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum PathStat {
    /// max_j S_j (the reflected variants apply their reflection first).
    Max,
    /// −min_j S_j for the plain/lazy variants.
    AbsMin,
    /// max_j |S_j|.
    MaxAbs,
}

/// Estimated moments with the standard error of the mean.
#[derive(Debug, Clone, Copy)]
pub struct Estimate {
    pub mean: f64,
    pub second_moment: f64,
    pub std_error: f64,
    pub trials: u64,
}

/// Simulation request. For `Variant::Persistent` the step law is ignored
/// except through `alpha`; for `Variant::Traffic` the step law is built in
/// and n must be divisible by 3.
#[derive(Debug, Clone)]
pub struct SimSpec {
    pub variant: Variant,
    pub n: usize,
    pub trials: u64,
    pub seed: u64,
    pub params: WalkParams,
    pub alpha: Option<f64>,
    pub stat: PathStat,
}

fn rat_u64_parts(r: &Rat) -> (u64, u64) {
    let num = r.numer().to_u64().expect("nonnegative numerator fits u64");
    let den = r.denom().to_u64().expect("denominator fits u64");
    (num, den)
}

/// Cumulative thresholds for a three-outcome step: draws u ~ U64 and maps
/// u < t_p → +1, u < t_pr → 0, else −1, with exact rational cut points.
#[derive(Debug, Clone, Copy)]
struct StepLaw {
    t_up: u128,
    t_up_or_zero: u128,
}

impl StepLaw {
    fn from_params(params: &WalkParams) -> Self {
        let (pn, pd) = rat_u64_parts(params.p());
        let (rn, rd) = rat_u64_parts(params.r());
        // common denominator pd·rd keeps the cut points exact
        let den = pd as u128 * rd as u128;
        let up = pn as u128 * rd as u128;
        let zero = rn as u128 * pd as u128;
        let t_up = (up << 64) / den;
        let t_up_or_zero = ((up + zero) << 64) / den;
        Self { t_up, t_up_or_zero }
    }

    #[inline]
    fn draw(&self, rng: &mut SplitMix64) -> i64 {
        let u = rng.next_u64() as u128;
        if u < self.t_up {
            1
        } else if u < self.t_up_or_zero {
            0
        } else {
            -1
        }
    }
}

fn run_trial(spec: &SimSpec, law: &StepLaw, trial: u64) -> (f64, f64) {
    let mut rng = SplitMix64::for_trial(spec.seed, trial);
    let mut s: i64 = 0;
    let mut max = 0i64;
    let mut min = 0i64;
    let mut max_abs = 0i64;
    match spec.variant {
        Variant::Plain | Variant::Lazy => {
            for _ in 0..spec.n {
                s += law.draw(&mut rng);
                max = max.max(s);
                min = min.min(s);
                max_abs = max_abs.max(s.abs());
            }
        }
        Variant::Strong => {
            for _ in 0..spec.n {
                s = (s + law.draw(&mut rng)).abs();
                max = max.max(s);
            }
        }
        Variant::Weak => {
            for _ in 0..spec.n {
                s = (s + law.draw(&mut rng)).max(0);
                max = max.max(s);
            }
        }
        Variant::Traffic => {
            for j in 0..spec.n {
                let step = if j % 3 == 0 {
                    -1
                } else if rng.bernoulli_exact(1, 2) {
                    1
                } else {
                    0
                };
                s = (s + step).max(0);
                max = max.max(s);
            }
        }
        Variant::Persistent => {
            let alpha = spec.alpha.expect("persistent walk needs alpha");
            let mut prev: i64 = if rng.bernoulli_exact(1, 2) { 1 } else { -1 };
            s += prev;
            max = max.max(s);
            min = min.min(s);
            max_abs = max_abs.max(s.abs());
            for _ in 1..spec.n {
                let step = if rng.next_f64() < alpha { prev } else { -prev };
                prev = step;
                s += step;
                max = max.max(s);
                min = min.min(s);
                max_abs = max_abs.max(s.abs());
            }
        }
    }
    let v = match spec.stat {
        PathStat::Max => max,
        PathStat::AbsMin => -min,
        PathStat::MaxAbs => max_abs,
    } as f64;
    (v, v * v)
}

/// Fixed chunk size of the deterministic reduction: chunk sums are computed
/// sequentially within a chunk and combined in chunk-index order, so the
/// totals do not depend on the rayon worker count.
const CHUNK: u64 = 4096;

/// Runs the simulation. Trials are distributed over rayon workers in fixed
/// chunks; the result is a pure function of (spec, seed).
pub fn simulate(spec: &SimSpec) -> Result<Estimate, WalkError> {
    validate(spec)?;
    let law = StepLaw::from_params(&spec.params);
    let n_chunks = spec.trials.div_ceil(CHUNK);
    let partials: Vec<(f64, f64)> = (0..n_chunks)
        .into_par_iter()
        .map(|c| {
            let lo = c * CHUNK;
            let hi = (lo + CHUNK).min(spec.trials);
            let mut s1 = 0.0;
            let mut s2 = 0.0;
            for t in lo..hi {
                let (v, v2) = run_trial(spec, &law, t);
                s1 += v;
                s2 += v2;
            }
            (s1, s2)
        })
        .collect();
    let mut sum = 0.0;
    let mut sum2 = 0.0;
    for (a, b) in partials {
        sum += a;
        sum2 += b;
    }
    let t = spec.trials as f64;
    let mean = sum / t;
    let m2 = sum2 / t;
    let var = (m2 - mean * mean).max(0.0);
    Ok(Estimate {
        mean,
        second_moment: m2,
        std_error: (var / t).sqrt(),
        trials: spec.trials,
    })
}

fn validate(spec: &SimSpec) -> Result<(), WalkError> {
    if spec.trials == 0 {
        return Err(WalkError::Unsupported("trials must be positive".into()));
    }
    match spec.variant {
        Variant::Traffic => {
            if spec.n % 3 != 0 {
                return Err(WalkError::Unsupported(
                    "traffic-light horizon must be divisible by 3".into(),
                ));
            }
        }
        Variant::Persistent => match spec.alpha {
            Some(a) if (0.0..1.0).contains(&a) => {}
            _ => {
                return Err(WalkError::Unsupported(
                    "persistent walk needs alpha in [0, 1)".into(),
                ))
            }
        },
        Variant::Strong | Variant::Weak => {
            if spec.stat != PathStat::Max {
                return Err(WalkError::Unsupported(
                    "reflected variants report the maximum only".into(),
                ));
            }
        }
        Variant::Plain | Variant::Lazy => {}
    }
    Ok(())
}

/// Shared-stream coupling of the two reflection rules: both walks consume
/// the same step sequence, so the weak maximum never exceeds the strong one
/// pathwise. Returns (strong max, weak max) per trial for the first
/// `trials` trials.
pub fn coupled_reflection_maxima(
    n: usize,
    params: &WalkParams,
    seed: u64,
    trials: u64,
) -> Vec<(i64, i64)> {
    let law = StepLaw::from_params(params);
    (0..trials)
        .map(|t| {
            let mut rng = SplitMix64::for_trial(seed, t);
            let mut strong = 0i64;
            let mut weak = 0i64;
            let mut ms = 0i64;
            let mut mw = 0i64;
            for _ in 0..n {
                let step = law.draw(&mut rng);
                strong = (strong + step).abs();
                weak = (weak + step).max(0);
                ms = ms.max(strong);
                mw = mw.max(weak);
            }
            (ms, mw)
        })
        .collect()
}

/// Convenience: a SimSpec for a plain or lazy walk.
pub fn spec_for_params(
    variant: Variant,
    n: usize,
    trials: u64,
    seed: u64,
    params: WalkParams,
    stat: PathStat,
) -> SimSpec {
    SimSpec {
        variant,
        n,
        trials,
        seed,
        params,
        alpha: None,
        stat,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactnum::rat;
    use crate::walkcore::Mode;

    #[test]
    fn splitmix_reference_vectors() {
        // published test vectors for splitmix64 with seed 0
        let mut g = SplitMix64::new(0);
        assert_eq!(g.next_u64(), 0xE220_A839_7B1D_CDAF);
        assert_eq!(g.next_u64(), 0x6E78_9E6A_A1B9_65F4);
        assert_eq!(g.next_u64(), 0x06C4_5D18_8009_454F);
    }

    #[test]
    fn deterministic_across_worker_counts() {
        let params = WalkParams::plain(rat(1, 2)).unwrap();
        let spec = spec_for_params(Variant::Plain, 64, 20_000, 42, params, PathStat::Max);
        let run = |threads: usize| {
            let pool = rayon::ThreadPoolBuilder::new()
                .num_threads(threads)
                .build()
                .unwrap();
            pool.install(|| simulate(&spec).unwrap())
        };
        let base = run(1);
        for threads in [2usize, 8] {
            let other = run(threads);
            assert_eq!(base.mean.to_bits(), other.mean.to_bits());
            assert_eq!(base.second_moment.to_bits(), other.second_moment.to_bits());
        }
    }

    #[test]
    fn deterministic_all_up_walk() {
        // p = 1 via the unrestricted constructor: the maximum is always n
        let params =
            WalkParams::new_unrestricted(rat(1, 1), rat(0, 1), rat(0, 1), Mode::Plain).unwrap();
        let spec = spec_for_params(Variant::Plain, 17, 100, 7, params, PathStat::Max);
        let est = simulate(&spec).unwrap();
        assert_eq!(est.mean, 17.0);
        assert_eq!(est.std_error, 0.0);
    }

    #[test]
    fn matches_exact_mean_within_error() {
        let params = WalkParams::plain(rat(1, 2)).unwrap();
        let n = 32;
        let exact = crate::extrema_joint::symmetric_max_mean(n)
            .to_f64()
            .unwrap();
        let spec = spec_for_params(Variant::Plain, n, 200_000, 9, params, PathStat::Max);
        let est = simulate(&spec).unwrap();
        assert!(
            (est.mean - exact).abs() < 5.0 * est.std_error,
            "{} vs {} (se {})",
            est.mean,
            exact,
            est.std_error
        );
    }

    #[test]
    fn coupled_weak_never_exceeds_strong() {
        let params = WalkParams::plain(rat(1, 3)).unwrap();
        for (s, w) in coupled_reflection_maxima(128, &params, 5, 2_000) {
            assert!(w <= s);
        }
    }

    #[test]
    fn traffic_requires_multiple_of_three() {
        let params = WalkParams::plain(rat(1, 2)).unwrap();
        let mut spec = spec_for_params(Variant::Traffic, 10, 10, 1, params, PathStat::Max);
        assert!(simulate(&spec).is_err());
        spec.n = 12;
        assert!(simulate(&spec).is_ok());
    }
}
