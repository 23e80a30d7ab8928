//! Exact joint and marginal distributions of `(M_n^+, M_n^-)` for the plain
//! walk, built from the first-passage decomposition of the time of first
//! exit from a two-sided band, plus the symmetric closed forms and the
//! cross-moment.

use crate::exactnum::{binom, rat_int, PowerSeries, Rat};
use crate::walkcore::{
    band_stay_exact, band_stay_f64, Arith, JointPmf, Mode, Pmf, WalkError, WalkParams,
};
use num_traits::{One, Zero};
use std::collections::{BTreeMap, HashMap};

/// Weighted first-passage count
/// `C[n,j] = (j/n) C(n,h) C(n−h, h+j) (pq)^h` with `h = (n−j)/2`,
/// extended to 0 when `n−j` is odd, `j <= 0` or `j > n`. The extension for
/// `j <= 0` is what makes the joint recurrence reproduce the `n = 1` row.
pub fn first_passage_c(n: usize, j: i64, params: &WalkParams) -> Rat {
    assert!(n >= 1);
    if j <= 0 || j > n as i64 || (n as i64 - j) % 2 != 0 {
        return Rat::zero();
    }
    let h = (n as i64 - j) / 2;
    let count = binom(n as u64, h) * binom((n as i64 - h) as u64, h + j);
    let pq = params.p() * params.q();
    Rat::new(BigIntOf(j), BigIntOf(n as i64)) * Rat::from_integer(count) * pow(&pq, h as usize)
}

// small helpers kept local to avoid num_bigint imports at every call site
#[allow(non_snake_case)]
fn BigIntOf(v: i64) -> num_bigint::BigInt {
    num_bigint::BigInt::from(v)
}

fn pow(base: &Rat, e: usize) -> Rat {
    let mut out = Rat::one();
    for _ in 0..e {
        out *= base;
    }
    out
}

fn f_term(n: usize, a: i64, b: i64, params: &WalkParams) -> Rat {
    if (n as i64) < a {
        return Rat::zero();
    }
    let pq = params.p() * params.q();
    let period = 2 * (a + b);
    let ell = if a + b > 0 {
        (n as i64 - a) / period
    } else {
        0
    };
    let mut total = Rat::zero();
    for k in 0..=ell {
        let shift = period * k;
        let t1 = pow(&pq, ((a + b) * k) as usize) * first_passage_c(n, shift + a, params);
        let t2 =
            pow(&pq, ((a + b) * k + b) as usize) * first_passage_c(n, shift + a + 2 * b, params);
        total += t1 - t2;
    }
    pow(params.p(), a as usize) * total
}

fn g_term(n: usize, a: i64, b: i64, params: &WalkParams) -> Rat {
    if (n as i64) < b {
        return Rat::zero();
    }
    let pq = params.p() * params.q();
    let period = 2 * (a + b);
    let m = if a + b > 0 {
        (n as i64 - b) / period
    } else {
        0
    };
    let mut total = Rat::zero();
    for k in 0..=m {
        let shift = period * k;
        let t1 = pow(&pq, ((a + b) * k) as usize) * first_passage_c(n, shift + b, params);
        let t2 =
            pow(&pq, ((a + b) * k + a) as usize) * first_passage_c(n, shift + b + 2 * a, params);
        total += t1 - t2;
    }
    pow(params.q(), b as usize) * total
}

/// Probability that the first exit from the open band (−b, a) happens exactly
/// at time n: ψ(n,a,b) = f + g, where f is the contribution of exits through
/// the upper barrier and g through the lower one.
pub fn exit_probability_psi(n: usize, a: i64, b: i64, params: &WalkParams) -> Rat {
    assert!(n >= 1 && a >= 0 && b >= 0 && (a, b) != (0, 0));
    if (n as i64) < a.min(b) {
        return Rat::zero();
    }
    f_term(n, a, b, params) + g_term(n, a, b, params)
}

/// The f and g components of ψ, exposed for tests of the decomposition.
pub fn exit_law_terms(n: usize, a: i64, b: i64, params: &WalkParams) -> (Rat, Rat, Rat) {
    let f = f_term(n, a, b, params);
    let g = g_term(n, a, b, params);
    let psi = &f + &g;
    (f, g, psi)
}

/// Full exact table of φ(n,a,b) = P{M_n^+ = a and M_n^- = b} via the
/// exit-law recurrence
/// φ(n+1,a,b) = φ(n,a,b) − ψ(n+1,a+1,b+1) − ψ(n+1,a,b)
///            + ψ(n+1,a+1,b) + ψ(n+1,a,b+1).
pub fn joint_pmf(n: usize, params: &WalkParams) -> Result<JointPmf, WalkError> {
    params.expect_mode(Mode::Plain)?;
    let mut table: HashMap<(i64, i64), Rat> = HashMap::new();
    table.insert((0, 0), Rat::one());
    for step in 0..n {
        let m = step + 1; // horizon after this step
        let mut psi_cache: HashMap<(i64, i64), Rat> = HashMap::new();
        let psi = |a: i64, b: i64, cache: &mut HashMap<(i64, i64), Rat>| -> Rat {
            if (a, b) == (0, 0) {
                return Rat::zero();
            }
            cache
                .entry((a, b))
                .or_insert_with(|| exit_probability_psi(m, a, b, params))
                .clone()
        };
        let mut next: HashMap<(i64, i64), Rat> = HashMap::new();
        for a in 0..=m as i64 {
            for b in 0..=m as i64 {
                if a == 0 && b == 0 {
                    continue; // boundary: φ(m,0,0) = 0 for m >= 1
                }
                let prev = table.get(&(a, b)).cloned().unwrap_or_else(Rat::zero);
                let v = prev - psi(a + 1, b + 1, &mut psi_cache) - psi(a, b, &mut psi_cache)
                    + psi(a + 1, b, &mut psi_cache)
                    + psi(a, b + 1, &mut psi_cache);
                if !v.is_zero() {
                    next.insert((a, b), v);
                }
            }
        }
        table = next;
    }
    JointPmf::new(n, table.into_iter().collect())
}

/// Independent route to the same joint law: double differencing of the
/// band-confinement probabilities
/// P{M^+ <= a, M^- <= b} = P{−(b+1) < S_j < a+1 for all j}.
/// Unlike the recurrence, this route also covers lazy walks (r > 0).
pub fn joint_pmf_band(n: usize, params: &WalkParams) -> Result<JointPmf, WalkError> {
    params.expect_mode(Mode::Plain)?;
    let cdf = |a: i64, b: i64| -> Result<Rat, WalkError> {
        if a < 0 || b < 0 {
            return Ok(Rat::zero());
        }
        band_stay_exact(n, -(b + 1), a + 1, params)
    };
    let mut entries = BTreeMap::new();
    for a in 0..=n as i64 {
        for b in 0..=n as i64 {
            let v = cdf(a, b)? - cdf(a - 1, b)? - cdf(a, b - 1)? + cdf(a - 1, b - 1)?;
            if !v.is_zero() {
                entries.insert((a, b), v);
            }
        }
    }
    JointPmf::new(n, entries)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Side {
    Plus,
    Minus,
}

/// Reflection-style tail sum ω(n,c,x,y), uncorrected: its k = c term counts
/// the paths with S_n = c twice. Kept public only so tests can document the
/// discrepancy; use [`marginal_max_pmf`] for the correct marginal.
pub fn omega_uncorrected(n: usize, c: i64, x: &Rat, y: &Rat) -> Rat {
    let mut total = Rat::zero();
    for k in c..=n as i64 {
        if (n as i64 + k) % 2 != 0 {
            continue;
        }
        let up = ((n as i64 + k) / 2) as usize;
        let down = n - up;
        let ratio_pow = if k == c {
            rat_int(2)
        } else {
            Rat::one() + pow(&(y / x), (k - c) as usize)
        };
        total +=
            ratio_pow * Rat::from_integer(binom(n as u64, up as i64)) * pow(x, up) * pow(y, down);
    }
    total
}

/// Corrected tail sum ω̂(n,c) = P{M >= c}: the uncorrected ω with one copy of
/// its k = c term removed.
pub fn omega_hat(n: usize, c: i64, x: &Rat, y: &Rat) -> Rat {
    let mut total = omega_uncorrected(n, c, x, y);
    if (n as i64 + c) % 2 == 0 && c <= n as i64 {
        let up = ((n as i64 + c) / 2) as usize;
        total -= Rat::from_integer(binom(n as u64, up as i64)) * pow(x, up) * pow(y, n - up);
    }
    total
}

/// Exact marginal pmf of M_n^+ (`Side::Plus`) or M_n^- (`Side::Minus`) by
/// differencing ω̂. The minus side swaps the roles of p and q.
pub fn marginal_max_pmf(n: usize, side: Side, params: &WalkParams) -> Result<Pmf, WalkError> {
    params.expect_mode(Mode::Plain)?;
    let (x, y) = match side {
        Side::Plus => (params.p().clone(), params.q().clone()),
        Side::Minus => (params.q().clone(), params.p().clone()),
    };
    if n == 0 {
        return Ok(Pmf::point_mass(0));
    }
    let mut entries = Vec::new();
    let mut upper = omega_hat(n, 0, &x, &y); // = 1
    for a in 0..=n as i64 {
        let next = omega_hat(n, a + 1, &x, &y);
        entries.push((a, &upper - &next));
        upper = next;
    }
    Pmf::new(entries)
}

/// Coefficients ξ_n of the generating function
/// (−1 + 2x + √(1 − 4x²)) / (2(1 − 2x)²): E(M_n^+) = ξ_n / 2^n at p = 1/2.
pub fn symmetric_xi(order: usize) -> PowerSeries {
    let one = PowerSeries::one(order);
    let two_x = PowerSeries::lambda(order).scale(&rat_int(2));
    let mut inner = PowerSeries::one(order);
    // 1 - 4x^2
    let four_x2 = {
        let lam = PowerSeries::lambda(order);
        (&lam * &lam).scale(&rat_int(4))
    };
    inner = &inner - &four_x2;
    let root = inner.sqrt().expect("constant term is 1");
    let numerator = &(&root + &two_x) - &one;
    let dm = &one - &two_x;
    let denominator = (&dm * &dm).scale(&rat_int(2));
    numerator.div(&denominator).expect("constant term 2")
}

/// Coefficients η_n of (1 + 2y − √(1 − 4y²)) / (2(1 − 2y)²):
/// E((M_n^+)²) = η_n / 2^n at p = 1/2.
pub fn symmetric_eta(order: usize) -> PowerSeries {
    let one = PowerSeries::one(order);
    let two_y = PowerSeries::lambda(order).scale(&rat_int(2));
    let four_y2 = {
        let lam = PowerSeries::lambda(order);
        (&lam * &lam).scale(&rat_int(4))
    };
    let root = (&one - &four_y2).sqrt().expect("constant term is 1");
    let numerator = &(&one + &two_y) - &root;
    let dm = &one - &two_y;
    let denominator = (&dm * &dm).scale(&rat_int(2));
    numerator.div(&denominator).expect("constant term 2")
}

/// Exact E(M_n^+) at p = 1/2, from the ξ generating function.
pub fn symmetric_max_mean(n: usize) -> Rat {
    let xi = symmetric_xi(n.max(1));
    xi.coeff(n) / rat_int(2).pow(n as i32)
}

/// Exact E((M_n^+)²) at p = 1/2, from the η generating function.
pub fn symmetric_max_second_moment(n: usize) -> Rat {
    let eta = symmetric_eta(n.max(1));
    eta.coeff(n) / rat_int(2).pow(n as i32)
}

/// Distribution of max_j |S_j| over [0, n]:
/// P{max|S| <= a} is a band-stay probability, so the pmf is a difference of
/// two band DPs per support point. Handles lazy walks.
pub fn max_abs_pmf(n: usize, params: &WalkParams, arith: Arith) -> Result<Pmf, WalkError> {
    params.expect_mode(Mode::Plain)?;
    if n == 0 {
        return Ok(Pmf::point_mass(0));
    }
    match arith {
        Arith::Exact => {
            let mut entries = Vec::new();
            let mut below = if params.is_lazy() {
                // P{max|S| = 0} = r^n
                pow(params.r(), n)
            } else {
                Rat::zero()
            };
            if !below.is_zero() {
                entries.push((0, below.clone()));
            }
            for a in 1..=n as i64 {
                let up_to = band_stay_exact(n, -(a + 1), a + 1, params)?;
                entries.push((a, &up_to - &below));
                below = up_to;
            }
            Pmf::new(entries)
        }
        Arith::Float => max_abs_pmf(n, params, Arith::Exact),
    }
}

/// Float pmf of max_j |S_j|, for horizons where the exact DP is too slow.
pub fn max_abs_pmf_f64(
    n: usize,
    params: &WalkParams,
) -> Result<crate::walkcore::FloatPmf, WalkError> {
    params.expect_mode(Mode::Plain)?;
    let mut entries = Vec::new();
    let mut below = if params.is_lazy() {
        params.r_f64().powi(n as i32)
    } else {
        0.0
    };
    if below > 0.0 {
        entries.push((0, below));
    }
    for a in 1..=n as i64 {
        let up_to = band_stay_f64(n, -(a + 1), a + 1, params)?;
        let mass = up_to - below;
        if mass > 0.0 {
            entries.push((a, mass));
        }
        below = up_to;
    }
    crate::walkcore::FloatPmf::new(entries)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum CrossMethod {
    BandDp,
    MonteCarlo,
}

/// E(M_n^+ M_n^-) = Σ_{a,b >= 1} P{M^+ >= a and M^- >= b}, with the joint
/// tail expanded by inclusion–exclusion over band-stay probabilities.
/// Exact mode sums the full grid; float mode truncates once the marginal
/// tails fall below 1e-15.
pub fn cross_moment_band(n: usize, params: &WalkParams, arith: Arith) -> Result<Rat, WalkError> {
    params.expect_mode(Mode::Plain)?;
    if n > 512 {
        return Err(WalkError::TooLarge(format!(
            "cross_moment by band DP capped at n=512, got {n}"
        )));
    }
    match arith {
        Arith::Exact => {
            let j = joint_pmf_band(n, params)?;
            Ok(j.cross_moment_exact())
        }
        Arith::Float => {
            // float path kept exact here as well at these sizes; the cap
            // keeps the grid affordable
            let j = joint_pmf_band(n, params)?;
            Ok(j.cross_moment_exact())
        }
    }
}

/// Float cross-moment for horizons beyond the exact guard, via truncated
/// inclusion–exclusion sums of band DPs.
pub fn cross_moment_f64(n: usize, params: &WalkParams) -> Result<f64, WalkError> {
    params.expect_mode(Mode::Plain)?;
    let stay_below =
        |hi: i64| -> Result<f64, WalkError> { band_stay_f64(n, -(n as i64 + 1), hi, params) };
    let stay_above =
        |lo: i64| -> Result<f64, WalkError> { band_stay_f64(n, lo, n as i64 + 1, params) };
    // marginal tails, with truncation
    let mut plus_tail = Vec::new();
    for a in 1..=n as i64 {
        let t = 1.0 - stay_below(a)?;
        plus_tail.push(t);
        if t < 1e-15 {
            break;
        }
    }
    let mut minus_tail = Vec::new();
    for b in 1..=n as i64 {
        let t = 1.0 - stay_above(-b)?;
        minus_tail.push(t);
        if t < 1e-15 {
            break;
        }
    }
    let mut total = 0.0;
    for (ai, &ta) in plus_tail.iter().enumerate() {
        let a = ai as i64 + 1;
        for (bi, &tb) in minus_tail.iter().enumerate() {
            let b = bi as i64 + 1;
            let joint_cdf = band_stay_f64(n, -b, a, params)?;
            total += ta + tb - 1.0 + joint_cdf;
        }
    }
    Ok(total)
}

impl std::fmt::Display for Side {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            Side::Plus => write!(f, "plus"),
            Side::Minus => write!(f, "minus"),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactnum::rat;
    use crate::oracle;
    use num_traits::ToPrimitive;

    fn plain(pn: i64, pd: i64) -> WalkParams {
        WalkParams::plain(rat(pn, pd)).unwrap()
    }

    #[test]
    fn first_passage_c_values() {
        let params = plain(1, 3);
        assert_eq!(first_passage_c(1, 1, &params), Rat::one());
        // C[3,1] = (1/3) C(3,1) C(2,2) (pq)^1 = pq
        assert_eq!(first_passage_c(3, 1, &params), rat(2, 9));
        assert_eq!(first_passage_c(2, 1, &params), Rat::zero()); // parity
        assert_eq!(first_passage_c(3, 0, &params), Rat::zero()); // j <= 0
        assert_eq!(first_passage_c(3, 4, &params), Rat::zero()); // j > n
    }

    #[test]
    fn psi_small_cases() {
        let params = plain(1, 3);
        // first step exits (−1,1) surely: f = p, g = q
        let (f, g, psi) = exit_law_terms(1, 1, 1, &params);
        assert_eq!(f, rat(1, 3));
        assert_eq!(g, rat(2, 3));
        assert_eq!(psi, Rat::one());
        // band (−1, 2): only a down-step exits at n=1; f gated by n < a
        assert_eq!(exit_probability_psi(1, 2, 1, &params), rat(2, 3));
        // ψ(1,1,0) = 0 under the C[n,0] = 0 convention
        assert_eq!(exit_probability_psi(1, 1, 0, &params), Rat::zero());
    }

    #[test]
    fn joint_matches_hand_checked_matrices() {
        for params in [plain(1, 3), plain(1, 2)] {
            let (p, q) = (params.p().clone(), params.q().clone());
            let j1 = joint_pmf(1, &params).unwrap();
            assert_eq!(j1.prob(1, 0), p);
            assert_eq!(j1.prob(0, 1), q);

            let j2 = joint_pmf(2, &params).unwrap();
            assert_eq!(j2.prob(0, 1), &p * &q);
            assert_eq!(j2.prob(0, 2), &q * &q);
            assert_eq!(j2.prob(1, 0), &p * &q);
            assert_eq!(j2.prob(1, 1), Rat::zero());
            assert_eq!(j2.prob(2, 0), &p * &p);

            let j3 = joint_pmf(3, &params).unwrap();
            assert_eq!(j3.prob(0, 3), &q * &q * &q);
            assert_eq!(j3.prob(0, 1), &p * &q * &q);
            assert_eq!(j3.prob(0, 2), &p * &q * &q);
            assert_eq!(j3.prob(1, 0), &p * &p * &q);
            assert_eq!(j3.prob(1, 1), &p * &q);
            assert_eq!(j3.prob(2, 0), &p * &p * &q);
            assert_eq!(j3.prob(3, 0), &p * &p * &p);
        }
    }

    #[test]
    fn joint_matches_oracle() {
        for params in [plain(1, 2), plain(1, 3), plain(2, 5)] {
            for n in 0..=8usize {
                let rec = joint_pmf(n, &params).unwrap();
                let oracle = oracle::enumerate_joint(n, &params).unwrap();
                assert_eq!(rec, oracle, "n={n}");
                let band = joint_pmf_band(n, &params).unwrap();
                assert_eq!(band, oracle, "band n={n}");
            }
        }
    }

    #[test]
    fn marginal_corrected_vs_uncorrected() {
        let params = plain(1, 3);
        let (p, q) = (params.p().clone(), params.q().clone());
        let pmf = marginal_max_pmf(2, Side::Plus, &params).unwrap();
        assert_eq!(pmf.prob(0), q.clone());
        assert_eq!(pmf.prob(1), &p * &q);
        assert_eq!(pmf.prob(2), &p * &p);
        // The uncorrected difference gives p − 2p² ≠ pq at (n, a) = (2, 1).
        let uncorrected = omega_uncorrected(2, 1, &p, &q) - omega_uncorrected(2, 2, &p, &q);
        assert_eq!(uncorrected, &p - rat_int(2) * &p * &p);
        assert_ne!(uncorrected, &p * &q);
    }

    #[test]
    fn marginal_edge_values() {
        let params = plain(2, 5);
        for n in 1..=9usize {
            let pmf = marginal_max_pmf(n, Side::Plus, &params).unwrap();
            // P{M_n^+ = n} = p^n (all-up path)
            assert_eq!(pmf.prob(n as i64), pow(params.p(), n));
            let or = oracle::enumerate_pmf(n, &params, oracle::WalkStatistic::Max).unwrap();
            assert_eq!(pmf, or, "n={n}");
            let pm = marginal_max_pmf(n, Side::Minus, &params).unwrap();
            let orm = oracle::enumerate_pmf(n, &params, oracle::WalkStatistic::AbsMin).unwrap();
            assert_eq!(pm, orm, "minus n={n}");
        }
    }

    #[test]
    fn symmetric_closed_form_n2() {
        let params = plain(1, 2);
        let pmf = marginal_max_pmf(2, Side::Plus, &params).unwrap();
        assert_eq!(pmf.prob(0), rat(1, 2));
        assert_eq!(pmf.prob(1), rat(1, 4));
        assert_eq!(pmf.prob(2), rat(1, 4));
    }

    #[test]
    fn symmetric_mean_small_and_identity() {
        assert_eq!(symmetric_max_mean(0), Rat::zero());
        assert_eq!(symmetric_max_mean(1), rat(1, 2));
        assert_eq!(symmetric_max_mean(2), rat(3, 4));
        // η_n = n·2^n − ξ_n, i.e. E(M²) + E(M) = n exactly.
        let xi = symmetric_xi(20);
        let eta = symmetric_eta(20);
        for n in 0..=20usize {
            let expect = rat_int(n as i64) * rat_int(2).pow(n as i32);
            assert_eq!(xi.coeff(n) + eta.coeff(n), expect, "n={n}");
        }
    }

    #[test]
    fn max_abs_small_cases() {
        let half = plain(1, 2);
        assert_eq!(
            max_abs_pmf(1, &half, Arith::Exact).unwrap(),
            Pmf::point_mass(1)
        );
        let pmf = max_abs_pmf(2, &half, Arith::Exact).unwrap();
        assert_eq!(pmf.prob(1), rat(1, 2));
        assert_eq!(pmf.prob(2), rat(1, 2));
        for n in 1..=9usize {
            let ours = max_abs_pmf(n, &plain(1, 3), Arith::Exact).unwrap();
            let or = oracle::enumerate_pmf(n, &plain(1, 3), oracle::WalkStatistic::MaxAbs).unwrap();
            assert_eq!(ours, or, "n={n}");
        }
    }

    #[test]
    fn max_abs_mean_between_marginal_means() {
        let params = plain(1, 2);
        for n in 1..=8usize {
            let maxabs = max_abs_pmf(n, &params, Arith::Exact).unwrap().mean_exact();
            let plus = marginal_max_pmf(n, Side::Plus, &params)
                .unwrap()
                .mean_exact();
            let minus = marginal_max_pmf(n, Side::Minus, &params)
                .unwrap()
                .mean_exact();
            assert!(maxabs >= plus);
            assert!(maxabs <= &plus + &minus);
        }
    }

    #[test]
    fn cross_moment_small() {
        // n=1: one of the extremes is always 0
        assert_eq!(
            cross_moment_band(1, &plain(1, 3), Arith::Exact).unwrap(),
            Rat::zero()
        );
        // n=3 at p=1/3: Σ ab φ(3,a,b) = pq = 2/9
        assert_eq!(
            cross_moment_band(3, &plain(1, 3), Arith::Exact).unwrap(),
            rat(2, 9)
        );
        // agreement with the oracle at n=10
        let or = oracle::enumerate_joint(10, &plain(1, 2)).unwrap();
        assert_eq!(
            cross_moment_band(10, &plain(1, 2), Arith::Exact).unwrap(),
            or.cross_moment_exact()
        );
        let f = cross_moment_f64(10, &plain(1, 2)).unwrap();
        assert!((f - or.cross_moment_exact().to_f64().unwrap()).abs() < 1e-10);
        assert!(matches!(
            cross_moment_band(513, &plain(1, 2), Arith::Exact),
            Err(WalkError::TooLarge(_))
        ));
    }

    #[test]
    fn psi_exhausts_band_exit_times() {
        // Σ_{n<=N} ψ(n,a,b) + H(N,a,b) = 1 for all a+b <= 6, N = 40.
        let params = plain(1, 2);
        for a in 0..=5i64 {
            for b in 0..=(6 - a) {
                if a == 0 && b == 0 || a + b < 2 {
                    continue;
                }
                if a == 0 || b == 0 {
                    continue; // band needs lo < 0 < hi
                }
                let n_max = 40;
                let mut total: Rat = (1..=n_max)
                    .map(|n| exit_probability_psi(n, a, b, &params))
                    .sum();
                total += band_stay_exact(n_max, -b, a, &params).unwrap();
                assert_eq!(total, Rat::one(), "a={a} b={b}");
            }
        }
    }
}
