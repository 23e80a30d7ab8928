//! Shared domain types: walk parameters, exact and floating pmfs, moments,
//! band-confinement DP and stochastic dominance.

use crate::exactnum::{rat_int, Rat};
use num_traits::{One, Signed, ToPrimitive, Zero};
use std::collections::BTreeMap;
use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum WalkError {
    #[error("step probabilities must be in [0,1] and sum to 1 (got p={p}, q={q}, r={r})")]
    BadStepLaw { p: String, q: String, r: String },
    #[error("upward bias p > q is not supported; mirror the walk by swapping p and q")]
    UpwardBias,
    #[error("band must satisfy lo < 0 < hi (got lo={lo}, hi={hi})")]
    BadBand { lo: i64, hi: i64 },
    #[error("operation requires mode {expected:?}, walk has {actual:?}")]
    WrongMode { expected: Mode, actual: Mode },
    #[error("pmf entries must be nonnegative and sum to 1")]
    NotNormalized,
    #[error("pmf support values must be distinct")]
    DuplicateSupport,
    #[error("problem size exceeds the guard: {0}")]
    TooLarge(String),
    #[error("unsupported parameters: {0}")]
    Unsupported(String),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Mode {
    Plain,
    StrongReflect,
    WeakReflect,
    /// Deterministic −1 step at times divisible by 3, fair {+1, 0} otherwise,
    /// with weak reflection. The (p, q, r) fields are ignored by this mode.
    TrafficLight,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Arith {
    Exact,
    Float,
}

/// Step law and walk mode. `p` is the probability of +1, `q` of −1 and `r`
/// of 0. Construction rejects `p > q`: none of the exact formulas cover an
/// upward-biased walk, and mirroring by swapping the roles of p and q is the
/// caller's responsibility.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct WalkParams {
    p: Rat,
    q: Rat,
    r: Rat,
    mode: Mode,
}

impl WalkParams {
    pub fn new(p: Rat, q: Rat, r: Rat, mode: Mode) -> Result<Self, WalkError> {
        let bad = || WalkError::BadStepLaw {
            p: p.to_string(),
            q: q.to_string(),
            r: r.to_string(),
        };
        let one = Rat::one();
        for v in [&p, &q, &r] {
            if v.is_negative() || v > &one {
                return Err(bad());
            }
        }
        if !(&p + &q + &r).is_one() {
            return Err(bad());
        }
        if p > q {
            return Err(WalkError::UpwardBias);
        }
        Ok(WalkParams { p, q, r, mode })
    }

    /// Plain ±1 walk with `P{+1} = p`.
    pub fn plain(p: Rat) -> Result<Self, WalkError> {
        let q = Rat::one() - &p;
        Self::new(p, q, Rat::zero(), Mode::Plain)
    }

    /// Lazy walk: `P{+1} = p`, `P{0} = r`, `P{−1} = 1 − p − r`.
    pub fn lazy(p: Rat, r: Rat, mode: Mode) -> Result<Self, WalkError> {
        let q = Rat::one() - &p - &r;
        Self::new(p, q, r, mode)
    }

    pub fn with_mode(&self, mode: Mode) -> Self {
        WalkParams {
            mode,
            ..self.clone()
        }
    }

    /// Bypasses the `p <= q` restriction. Exact-formula modules must not see
    /// such parameters; the simulator accepts them (a deterministic all-up
    /// walk is a useful test case).
    pub fn new_unrestricted(p: Rat, q: Rat, r: Rat, mode: Mode) -> Result<Self, WalkError> {
        match Self::new(p.clone(), q.clone(), r.clone(), mode) {
            Err(WalkError::UpwardBias) => Ok(WalkParams { p, q, r, mode }),
            other => other,
        }
    }

    pub fn p(&self) -> &Rat {
        &self.p
    }
    pub fn q(&self) -> &Rat {
        &self.q
    }
    pub fn r(&self) -> &Rat {
        &self.r
    }
    pub fn mode(&self) -> Mode {
        self.mode
    }
    pub fn is_lazy(&self) -> bool {
        !self.r.is_zero()
    }

    pub fn p_f64(&self) -> f64 {
        self.p.to_f64().unwrap()
    }
    pub fn q_f64(&self) -> f64 {
        self.q.to_f64().unwrap()
    }
    pub fn r_f64(&self) -> f64 {
        self.r.to_f64().unwrap()
    }

    pub fn expect_mode(&self, expected: Mode) -> Result<(), WalkError> {
        if self.mode == expected {
            Ok(())
        } else {
            Err(WalkError::WrongMode {
                expected,
                actual: self.mode,
            })
        }
    }
}

/// First and second moments (floating view). Exact moments are available
/// directly on [`Pmf`].
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Moments {
    pub mean: f64,
    pub second_moment: f64,
    pub variance: f64,
    pub cross_moment: Option<f64>,
}

impl Moments {
    pub fn from_mean_m2(mean: f64, second_moment: f64) -> Self {
        Moments {
            mean,
            second_moment,
            variance: second_moment - mean * mean,
            cross_moment: None,
        }
    }
}

/// Exact probability mass function over integer support. Only points with
/// nonzero probability are stored; entries are sorted by value and sum to 1.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Pmf {
    entries: Vec<(i64, Rat)>,
}

impl Pmf {
    pub fn new(mut entries: Vec<(i64, Rat)>) -> Result<Self, WalkError> {
        entries.retain(|(_, p)| !p.is_zero());
        entries.sort_by_key(|(v, _)| *v);
        if entries.windows(2).any(|w| w[0].0 == w[1].0) {
            return Err(WalkError::DuplicateSupport);
        }
        let mut total = Rat::zero();
        for (_, p) in &entries {
            if p.is_negative() {
                return Err(WalkError::NotNormalized);
            }
            total += p;
        }
        if !total.is_one() {
            return Err(WalkError::NotNormalized);
        }
        Ok(Pmf { entries })
    }

    pub fn point_mass(v: i64) -> Self {
        Pmf {
            entries: vec![(v, Rat::one())],
        }
    }

    pub fn entries(&self) -> &[(i64, Rat)] {
        &self.entries
    }

    pub fn support(&self) -> impl Iterator<Item = i64> + '_ {
        self.entries.iter().map(|(v, _)| *v)
    }

    pub fn prob(&self, v: i64) -> Rat {
        self.entries
            .iter()
            .find(|(x, _)| *x == v)
            .map(|(_, p)| p.clone())
            .unwrap_or_else(Rat::zero)
    }

    /// Upper tail P{X >= a}.
    pub fn tail(&self, a: i64) -> Rat {
        self.entries
            .iter()
            .filter(|(v, _)| *v >= a)
            .map(|(_, p)| p)
            .sum()
    }

    pub fn mean_exact(&self) -> Rat {
        self.entries.iter().map(|(v, p)| rat_int(*v) * p).sum()
    }

    pub fn second_moment_exact(&self) -> Rat {
        self.entries.iter().map(|(v, p)| rat_int(v * v) * p).sum()
    }

    pub fn moments(&self) -> Moments {
        let mean = self.mean_exact().to_f64().unwrap();
        let m2 = self.second_moment_exact().to_f64().unwrap();
        Moments::from_mean_m2(mean, m2)
    }

    pub fn to_float(&self) -> FloatPmf {
        FloatPmf {
            entries: self
                .entries
                .iter()
                .map(|(v, p)| (*v, p.to_f64().unwrap()))
                .collect(),
        }
    }
}

/// Floating-point pmf, used where exact arithmetic is out of reach.
/// Probabilities must sum to 1 within 1e-12.
#[derive(Debug, Clone, PartialEq)]
pub struct FloatPmf {
    entries: Vec<(i64, f64)>,
}

impl FloatPmf {
    pub fn new(mut entries: Vec<(i64, f64)>) -> Result<Self, WalkError> {
        entries.retain(|(_, p)| *p != 0.0);
        entries.sort_by_key(|(v, _)| *v);
        if entries.windows(2).any(|w| w[0].0 == w[1].0) {
            return Err(WalkError::DuplicateSupport);
        }
        let total: f64 = entries.iter().map(|(_, p)| *p).sum();
        if entries.iter().any(|(_, p)| *p < 0.0) || (total - 1.0).abs() > 1e-12 {
            return Err(WalkError::NotNormalized);
        }
        Ok(FloatPmf { entries })
    }

    pub fn entries(&self) -> &[(i64, f64)] {
        &self.entries
    }

    pub fn moments(&self) -> Moments {
        let mean = self.entries.iter().map(|(v, p)| *v as f64 * p).sum();
        let m2 = self
            .entries
            .iter()
            .map(|(v, p)| (*v as f64) * (*v as f64) * p)
            .sum();
        Moments::from_mean_m2(mean, m2)
    }
}

/// Exact joint law of `(M_n^+, M_n^-)` at horizon `n`. Keys `(a, b)` with
/// zero probability are omitted.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct JointPmf {
    n: usize,
    entries: BTreeMap<(i64, i64), Rat>,
}

impl JointPmf {
    pub fn new(n: usize, mut entries: BTreeMap<(i64, i64), Rat>) -> Result<Self, WalkError> {
        entries.retain(|_, p| !p.is_zero());
        let mut total = Rat::zero();
        for (&(a, b), p) in &entries {
            if p.is_negative() || a < 0 || b < 0 || a as usize > n || b as usize > n {
                return Err(WalkError::NotNormalized);
            }
            total += p;
        }
        if !total.is_one() {
            return Err(WalkError::NotNormalized);
        }
        Ok(JointPmf { n, entries })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn entries(&self) -> &BTreeMap<(i64, i64), Rat> {
        &self.entries
    }

    pub fn prob(&self, a: i64, b: i64) -> Rat {
        self.entries.get(&(a, b)).cloned().unwrap_or_else(Rat::zero)
    }

    /// Marginal of `M_n^+` (rows) or `M_n^-` (columns).
    pub fn marginal(&self, plus: bool) -> Pmf {
        let mut acc: BTreeMap<i64, Rat> = BTreeMap::new();
        for (&(a, b), p) in &self.entries {
            let key = if plus { a } else { b };
            *acc.entry(key).or_insert_with(Rat::zero) += p;
        }
        Pmf::new(acc.into_iter().collect()).expect("marginal of a valid joint pmf")
    }

    /// E(M_n^+ · M_n^-), exactly.
    pub fn cross_moment_exact(&self) -> Rat {
        self.entries
            .iter()
            .map(|(&(a, b), p)| rat_int(a * b) * p)
            .sum()
    }
}

/// First-order stochastic dominance: true iff P{upper >= a} >= P{lower >= a}
/// for every threshold a.
pub fn dominates(upper: &Pmf, lower: &Pmf) -> bool {
    let thresholds: Vec<i64> = upper.support().chain(lower.support()).collect();
    thresholds.iter().all(|&a| upper.tail(a) >= lower.tail(a))
}

/// P{lo < S_j < hi for all j <= n} for the plain walk started at 0, by dense
/// tridiagonal DP over the open band. Exact arithmetic.
pub fn band_stay_exact(n: usize, lo: i64, hi: i64, params: &WalkParams) -> Result<Rat, WalkError> {
    params.expect_mode(Mode::Plain)?;
    if lo >= 0 || hi <= 0 {
        return Err(WalkError::BadBand { lo, hi });
    }
    let width = (hi - lo - 1) as usize; // interior positions lo+1 ..= hi-1
    let origin = (-lo - 1) as usize;
    let (p, q, r) = (params.p(), params.q(), params.r());
    let mut v = vec![Rat::zero(); width];
    v[origin] = Rat::one();
    for _ in 0..n {
        let mut next = vec![Rat::zero(); width];
        for (i, mass) in v.iter().enumerate() {
            if mass.is_zero() {
                continue;
            }
            if i > 0 {
                next[i - 1] += mass * q;
            }
            if i + 1 < width {
                next[i + 1] += mass * p;
            }
            if !r.is_zero() {
                next[i] += mass * r;
            }
        }
        v = next;
    }
    Ok(v.into_iter().sum())
}

/// Floating-point version of [`band_stay_exact`]. The DP iterates
/// probabilities in [0,1], so plain double precision is adequate at the
/// band widths this library targets.
pub fn band_stay_f64(n: usize, lo: i64, hi: i64, params: &WalkParams) -> Result<f64, WalkError> {
    params.expect_mode(Mode::Plain)?;
    if lo >= 0 || hi <= 0 {
        return Err(WalkError::BadBand { lo, hi });
    }
    let width = (hi - lo - 1) as usize;
    let origin = (-lo - 1) as usize;
    let (p, q, r) = (params.p_f64(), params.q_f64(), params.r_f64());
    let mut v = vec![0.0f64; width];
    v[origin] = 1.0;
    let mut next = vec![0.0f64; width];
    for _ in 0..n {
        next.iter_mut().for_each(|x| *x = 0.0);
        for i in 0..width {
            let mass = v[i];
            if mass == 0.0 {
                continue;
            }
            if i > 0 {
                next[i - 1] += mass * q;
            }
            if i + 1 < width {
                next[i + 1] += mass * p;
            }
            if r != 0.0 {
                next[i] += mass * r;
            }
        }
        std::mem::swap(&mut v, &mut next);
    }
    Ok(v.iter().sum())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactnum::rat;

    fn plain(pn: i64, pd: i64) -> WalkParams {
        WalkParams::plain(rat(pn, pd)).unwrap()
    }

    #[test]
    fn params_validation() {
        assert!(WalkParams::plain(rat(1, 2)).is_ok());
        assert_eq!(
            WalkParams::plain(rat(2, 3)).unwrap_err(),
            WalkError::UpwardBias
        );
        assert!(matches!(
            WalkParams::new(rat(1, 2), rat(1, 3), Rat::zero(), Mode::Plain),
            Err(WalkError::BadStepLaw { .. })
        ));
        assert!(
            WalkParams::new_unrestricted(Rat::one(), Rat::zero(), Rat::zero(), Mode::Plain).is_ok()
        );
        let lazy = WalkParams::lazy(rat(1, 3), rat(1, 3), Mode::Plain).unwrap();
        assert_eq!(lazy.q(), &rat(1, 3));
    }

    #[test]
    fn pmf_validation_and_moments() {
        assert!(matches!(
            Pmf::new(vec![(0, rat(1, 2))]),
            Err(WalkError::NotNormalized)
        ));
        assert!(matches!(
            Pmf::new(vec![(0, rat(1, 2)), (0, rat(1, 2))]),
            Err(WalkError::DuplicateSupport)
        ));

        let p = Pmf::point_mass(0);
        assert_eq!(p.mean_exact(), Rat::zero());
        let p = Pmf::point_mass(5);
        let m = p.moments();
        assert_eq!(m.mean, 5.0);
        assert_eq!(m.variance, 0.0);

        // symmetric n=2 max pmf {0: 1/2, 1: 1/4, 2: 1/4} (4-path enumeration)
        let p = Pmf::new(vec![(0, rat(1, 2)), (1, rat(1, 4)), (2, rat(1, 4))]).unwrap();
        assert_eq!(p.mean_exact(), rat(3, 4));
        assert_eq!(p.second_moment_exact(), rat(5, 4));
    }

    #[test]
    fn zero_probability_entries_dropped() {
        let p = Pmf::new(vec![(0, rat(1, 2)), (1, rat(0, 1)), (2, rat(1, 2))]).unwrap();
        assert_eq!(p.support().collect::<Vec<_>>(), vec![0, 2]);
    }

    #[test]
    fn band_stay_small_cases() {
        let params = plain(1, 3);
        // n=1, band (−1,1): the first step always exits.
        assert_eq!(band_stay_exact(1, -1, 1, &params).unwrap(), Rat::zero());
        // n=2, band (−2,2): survive iff the path returns, probability 2pq.
        let expect = rat_int(2) * params.p() * params.q();
        assert_eq!(band_stay_exact(2, -2, 2, &params).unwrap(), expect);
        assert_eq!(band_stay_exact(2, -2, 2, &plain(1, 2)).unwrap(), rat(1, 2));
        assert!(matches!(
            band_stay_exact(2, 0, 2, &params),
            Err(WalkError::BadBand { .. })
        ));
        let f = band_stay_f64(2, -2, 2, &plain(1, 2)).unwrap();
        assert!((f - 0.5).abs() < 1e-15);
    }

    #[test]
    fn band_stay_monotonicity() {
        let params = plain(2, 5);
        for n in 1..=8usize {
            let base = band_stay_exact(n, -2, 3, &params).unwrap();
            let wider = band_stay_exact(n, -3, 3, &params).unwrap();
            let longer = band_stay_exact(n + 1, -2, 3, &params).unwrap();
            assert!(wider >= base);
            assert!(longer <= base);
        }
    }

    #[test]
    fn dominance_basics() {
        let x = Pmf::new(vec![(0, rat(1, 2)), (1, rat(1, 2))]).unwrap();
        assert!(dominates(&x, &x));
        let zero = Pmf::point_mass(0);
        let one = Pmf::point_mass(1);
        assert!(dominates(&one, &zero));
        assert!(!dominates(&zero, &one));

        // strong-reflect M_2 {1: q, 2: p} dominates weak-reflect M_2
        // {0: q², 1: 2pq, 2: p²} at p = 1/3.
        let (p, q) = (rat(1, 3), rat(2, 3));
        let strong = Pmf::new(vec![(1, q.clone()), (2, p.clone())]).unwrap();
        let weak = Pmf::new(vec![(0, &q * &q), (1, rat_int(2) * &p * &q), (2, &p * &p)]).unwrap();
        assert!(dominates(&strong, &weak));
        assert!(!dominates(&weak, &strong));
    }

    #[test]
    fn joint_pmf_validation() {
        let mut m = BTreeMap::new();
        m.insert((1, 0), rat(1, 3));
        m.insert((0, 1), rat(2, 3));
        let j = JointPmf::new(1, m).unwrap();
        assert_eq!(j.prob(1, 0), rat(1, 3));
        assert_eq!(j.marginal(true).prob(0), rat(2, 3));
        assert_eq!(j.cross_moment_exact(), Rat::zero());

        // mass at (0, 0) is legal (the all-zero path of a lazy walk)
        let mut lazy = BTreeMap::new();
        lazy.insert((0, 0), rat(1, 2));
        lazy.insert((1, 0), rat(1, 2));
        assert!(JointPmf::new(1, lazy).is_ok());

        let mut bad = BTreeMap::new();
        bad.insert((2, 0), Rat::one());
        assert!(JointPmf::new(1, bad).is_err(), "support exceeds n");

        let mut bad = BTreeMap::new();
        bad.insert((1, 0), rat(1, 2));
        assert!(JointPmf::new(1, bad).is_err(), "not normalized");
    }
}
