//! Exhaustive weighted enumeration of all step sequences at small horizons.
//!
//! Every cross-module equivalence test in this crate bottoms out here: the
//! oracle iterates literally every trajectory, so whatever it returns is the
//! definition of correct. Capped at n = 16 for two-letter step alphabets and
//! n = 10 when a zero step is possible.

use crate::exactnum::Rat;
use crate::walkcore::{JointPmf, Mode, Pmf, WalkParams};
use num_traits::{One, Zero};
use std::collections::BTreeMap;
use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum OracleError {
    #[error("enumeration cap exceeded: n={n} with {letters}-letter alphabet")]
    TooLarge { n: usize, letters: usize },
    #[error("statistic {stat:?} is incompatible with walk mode {mode:?}")]
    WrongMode { stat: WalkStatistic, mode: Mode },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum WalkStatistic {
    /// Running maximum M_n^+ of the plain walk.
    Max,
    /// Absolute running minimum M_n^- of the plain walk.
    AbsMin,
    /// Joint (M_n^+, M_n^-); use [`enumerate_joint`].
    JointMaxMin,
    /// max_j |S_j| of the plain walk.
    MaxAbs,
    /// Maximum of a reflected walk (strong or weak per the walk mode).
    ReflectedMax,
    /// Maximum distance from 0 before the first return to 0, conditional on
    /// the return happening within the horizon. Non-returning trajectories
    /// are discarded and the remainder renormalized.
    CycleMax,
}

fn check_cap(n: usize, params: &WalkParams) -> Result<usize, OracleError> {
    let letters = if params.is_lazy() { 3 } else { 2 };
    let cap = if letters == 3 { 10 } else { 16 };
    if n > cap {
        return Err(OracleError::TooLarge { n, letters });
    }
    Ok(letters)
}

fn check_mode(stat: WalkStatistic, params: &WalkParams) -> Result<(), OracleError> {
    let ok = match stat {
        WalkStatistic::ReflectedMax => {
            matches!(params.mode(), Mode::StrongReflect | Mode::WeakReflect)
        }
        _ => params.mode() == Mode::Plain,
    };
    if ok {
        Ok(())
    } else {
        Err(OracleError::WrongMode {
            stat,
            mode: params.mode(),
        })
    }
}

/// Walks all step sequences in lexicographic order (+1 < 0 < −1 per digit)
/// and hands each realized trajectory's weight to `visit`.
fn for_each_path<F: FnMut(&[i64], &Rat)>(
    n: usize,
    params: &WalkParams,
    letters: usize,
    mut visit: F,
) {
    // weight = p^(#up) q^(#down) r^(#zero), built from power tables
    let pow_table = |base: &Rat| -> Vec<Rat> {
        let mut t = vec![Rat::one()];
        for i in 1..=n {
            let next = &t[i - 1] * base;
            t.push(next);
        }
        t
    };
    let pp = pow_table(params.p());
    let pq = pow_table(params.q());
    let pr = pow_table(params.r());

    let steps_of_digit: &[i64] = if letters == 2 { &[1, -1] } else { &[1, 0, -1] };
    let mut digits = vec![0usize; n];
    let mut positions = vec![0i64; n + 1];
    loop {
        let (mut ups, mut downs, mut zeros) = (0usize, 0usize, 0usize);
        for j in 0..n {
            let step = steps_of_digit[digits[j]];
            positions[j + 1] = positions[j] + step;
            match step {
                1 => ups += 1,
                -1 => downs += 1,
                _ => zeros += 1,
            }
        }
        let w = &(&pp[ups] * &pq[downs]) * &pr[zeros];
        visit(&positions, &w);

        // odometer increment
        let mut i = n;
        loop {
            if i == 0 {
                return;
            }
            i -= 1;
            digits[i] += 1;
            if digits[i] < letters {
                break;
            }
            digits[i] = 0;
        }
    }
}

fn apply_reflection(positions: &mut [i64], mode: Mode) {
    let mut s = 0i64;
    let mut prev_raw = positions[0];
    for j in 1..positions.len() {
        let step = positions[j] - prev_raw;
        prev_raw = positions[j];
        s = match mode {
            Mode::StrongReflect => (s + step).abs(),
            Mode::WeakReflect => (s + step).max(0),
            _ => s + step,
        };
        positions[j] = s;
    }
}

/// Exact distribution of `stat` over all length-`n` trajectories.
pub fn enumerate_pmf(
    n: usize,
    params: &WalkParams,
    stat: WalkStatistic,
) -> Result<Pmf, OracleError> {
    check_mode(stat, params)?;
    let letters = check_cap(n, params)?;
    let mut acc: BTreeMap<i64, Rat> = BTreeMap::new();
    let mut discarded = Rat::zero();
    for_each_path(n, params, letters, |raw, w| {
        let mut positions = raw.to_vec();
        if stat == WalkStatistic::ReflectedMax {
            apply_reflection(&mut positions, params.mode());
        }
        let value = match stat {
            WalkStatistic::Max | WalkStatistic::ReflectedMax => *positions.iter().max().unwrap(),
            WalkStatistic::AbsMin => -*positions.iter().min().unwrap(),
            WalkStatistic::MaxAbs => positions.iter().map(|s| s.abs()).max().unwrap(),
            WalkStatistic::CycleMax => {
                match positions[1..].iter().position(|&s| s == 0) {
                    Some(idx) => {
                        // first return at time idx+1; max distance up to it
                        positions[..=idx + 1].iter().map(|s| s.abs()).max().unwrap()
                    }
                    None => {
                        discarded += w;
                        return;
                    }
                }
            }
            WalkStatistic::JointMaxMin => unreachable!("use enumerate_joint"),
        };
        *acc.entry(value).or_insert_with(Rat::zero) += w;
    });
    if stat == WalkStatistic::CycleMax && !discarded.is_zero() {
        let kept = Rat::one() - &discarded;
        for v in acc.values_mut() {
            *v = &*v / &kept;
        }
    }
    Ok(Pmf::new(acc.into_iter().collect()).expect("oracle masses sum to 1"))
}

/// Exact joint distribution of `(M_n^+, M_n^-)` for the plain walk.
pub fn enumerate_joint(n: usize, params: &WalkParams) -> Result<JointPmf, OracleError> {
    check_mode(WalkStatistic::JointMaxMin, params)?;
    let letters = check_cap(n, params)?;
    let mut acc: BTreeMap<(i64, i64), Rat> = BTreeMap::new();
    for_each_path(n, params, letters, |positions, w| {
        let mx = *positions.iter().max().unwrap();
        let mn = -*positions.iter().min().unwrap();
        *acc.entry((mx, mn)).or_insert_with(Rat::zero) += w;
    });
    Ok(JointPmf::new(n, acc).expect("oracle masses sum to 1"))
}
