//! Command-line interface: exact pmfs and moments, cycle maxima, constants,
//! limit-law probes, Monte Carlo simulation and self-verification suites.
//!
//! Exit codes: 0 success, 1 runtime or verification failure, 2 flag
//! validation failure. Errors are emitted as a JSON object on stderr.

use crate::asymptotics::{self, ProbeScenario};
use crate::cycles::CycleLaw;
use crate::exactnum::{parse_rat, Rat};
use crate::extrema_joint::{self, Side};
use crate::montecarlo::{self, PathStat, SimSpec, Variant};
use crate::oracle;
use crate::walkcore::{Arith, JointPmf, Mode, Pmf, WalkParams};
use crate::{reflect_strong, reflect_weak};
use clap::{Parser, Subcommand, ValueEnum};
use num_traits::{One, Signed, ToPrimitive, Zero};
use serde_json::{json, Value};

#[derive(Parser)]
#[command(
    name = "walk-extrema",
    about = "Exact distributions and asymptotics of random-walk extremes",
    disable_help_subcommand = true
)]
struct Cli {
    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Subcommand)]
enum Cmd {
    /// Exact pmf of a walk extreme statistic.
    Pmf {
        #[arg(long, value_enum)]
        stat: StatArg,
        #[arg(long)]
        n: usize,
        /// Up-step probability as NUM/DEN (or an integer).
        #[arg(long)]
        p: String,
        /// Zero-step probability as NUM/DEN; defaults to 0.
        #[arg(long)]
        r: Option<String>,
        #[arg(long, value_enum, default_value = "auto")]
        method: MethodArg,
        #[arg(long, value_enum, default_value = "exact")]
        arith: ArithArg,
        #[arg(long, value_enum, default_value = "json")]
        format: FormatArg,
    },
    /// Moments of a walk extreme, optionally with the asymptotic prediction.
    Moments {
        #[arg(long, value_enum)]
        stat: StatArg,
        #[arg(long)]
        n: usize,
        #[arg(long)]
        p: String,
        #[arg(long)]
        r: Option<String>,
        /// Include the large-n prediction alongside the computed values.
        #[arg(long)]
        predict: bool,
    },
    /// Distribution and moments of the maximum over one return cycle (p < q).
    Cycle {
        #[arg(long)]
        p: String,
        /// Also report the mean maximum over this many independent cycles.
        #[arg(long)]
        copies: Option<u64>,
        /// Compare the copies mean against the logarithmic profile.
        #[arg(long)]
        profile: bool,
    },
    /// Print the special constants used by the asymptotic predictions.
    Constants {
        #[arg(long, default_value = "1e-12")]
        tol: f64,
    },
    /// Evaluate a sech-sum probe of the reflected-walk limit law at scale t.
    Probe {
        #[arg(long, value_enum)]
        scenario: ScenarioArg,
        #[arg(long)]
        t: f64,
        /// Probe the second-moment constant 2G instead of √(π/2).
        #[arg(long)]
        second_moment: bool,
    },
    /// Monte Carlo estimate of the mean and second moment of the maximum.
    Simulate {
        #[arg(long, value_enum)]
        variant: VariantArg,
        #[arg(long)]
        n: usize,
        #[arg(long)]
        trials: u64,
        #[arg(long)]
        seed: u64,
        /// Up-step probability (plain/lazy/strong/weak variants).
        #[arg(long)]
        p: Option<String>,
        /// Zero-step probability (lazy variant).
        #[arg(long)]
        r: Option<String>,
        /// Direction-repeat probability (persistent variant).
        #[arg(long)]
        alpha: Option<f64>,
    },
    /// Run an internal consistency suite; exits 1 if any check fails.
    Verify {
        #[arg(long, value_enum)]
        suite: SuiteArg,
    },
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum StatArg {
    Max,
    Min,
    Joint,
    Maxabs,
    Strong,
    Weak,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum MethodArg {
    Matrix,
    Recurrence,
    Series,
    Band,
    Auto,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum ArithArg {
    Exact,
    Float,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum FormatArg {
    Json,
    Csv,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum ScenarioArg {
    Strong,
    Weak,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum VariantArg {
    Plain,
    Strong,
    Weak,
    Lazy,
    Traffic,
    Persistent,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum SuiteArg {
    CrossMethod,
    Oracle,
    Marginals,
    Constants,
    Asymptotics,
    All,
}

struct CliError {
    code: i32,
    message: String,
}

impl CliError {
    fn flags(message: impl Into<String>) -> Self {
        Self {
            code: 2,
            message: message.into(),
        }
    }
    fn runtime(message: impl Into<String>) -> Self {
        Self {
            code: 1,
            message: message.into(),
        }
    }
}

fn rat_json(r: &Rat) -> Value {
    json!({"num": r.numer().to_string(), "den": r.denom().to_string()})
}

fn parse_prob(label: &str, s: &str) -> Result<Rat, CliError> {
    let v = parse_rat(s).map_err(|e| CliError::flags(format!("bad {label}: {e}")))?;
    if v.is_negative() || v > Rat::one() {
        return Err(CliError::flags(format!(
            "{label} must lie in [0, 1], got {s}"
        )));
    }
    Ok(v)
}

fn build_params(p: &str, r: Option<&str>, mode: Mode) -> Result<WalkParams, CliError> {
    let p = parse_prob("--p", p)?;
    let r = match r {
        Some(s) => parse_prob("--r", s)?,
        None => Rat::zero(),
    };
    WalkParams::lazy(p, r, mode).map_err(|e| CliError::flags(e.to_string()))
}

/// Entry point used by the binary; parses `args` (including argv[0]) and
/// returns the process exit code after writing output.
pub fn run<I, T>(args: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            // clap handles --help/--version on stdout with code 0
            if e.use_stderr() {
                eprintln!("{}", json!({"error": e.render().to_string().trim_end()}));
                return 2;
            }
            print!("{e}");
            return 0;
        }
    };
    match dispatch(cli.cmd) {
        Ok(()) => 0,
        Err(e) => {
            eprintln!("{}", json!({"error": e.message}));
            e.code
        }
    }
}

fn dispatch(cmd: Cmd) -> Result<(), CliError> {
    match cmd {
        Cmd::Pmf {
            stat,
            n,
            p,
            r,
            method,
            arith,
            format,
        } => cmd_pmf(stat, n, &p, r.as_deref(), method, arith, format),
        Cmd::Moments {
            stat,
            n,
            p,
            r,
            predict,
        } => cmd_moments(stat, n, &p, r.as_deref(), predict),
        Cmd::Cycle { p, copies, profile } => cmd_cycle(&p, copies, profile),
        Cmd::Constants { tol } => cmd_constants(tol),
        Cmd::Probe {
            scenario,
            t,
            second_moment,
        } => cmd_probe(scenario, t, second_moment),
        Cmd::Simulate {
            variant,
            n,
            trials,
            seed,
            p,
            r,
            alpha,
        } => cmd_simulate(variant, n, trials, seed, p.as_deref(), r.as_deref(), alpha),
        Cmd::Verify { suite } => cmd_verify(suite),
    }
}

fn runtime(e: impl std::fmt::Display) -> CliError {
    CliError::runtime(e.to_string())
}

const EXACT_N_GUARD: usize = 512;

fn compute_pmf(
    stat: StatArg,
    n: usize,
    params: &WalkParams,
    method: MethodArg,
) -> Result<PmfOut, CliError> {
    match stat {
        StatArg::Max | StatArg::Min => {
            let side = if stat == StatArg::Max {
                Side::Plus
            } else {
                Side::Minus
            };
            let pmf = match method {
                MethodArg::Band => {
                    let j = extrema_joint::joint_pmf_band(n, params).map_err(runtime)?;
                    j.marginal(side == Side::Plus)
                }
                MethodArg::Recurrence => {
                    let j = extrema_joint::joint_pmf(n, params).map_err(runtime)?;
                    j.marginal(side == Side::Plus)
                }
                MethodArg::Series | MethodArg::Auto => {
                    if params.is_lazy() {
                        let j = extrema_joint::joint_pmf_band(n, params).map_err(runtime)?;
                        j.marginal(side == Side::Plus)
                    } else {
                        extrema_joint::marginal_max_pmf(n, side, params).map_err(runtime)?
                    }
                }
                MethodArg::Matrix => {
                    return Err(CliError::flags(
                        "--method matrix applies to the reflected statistics",
                    ))
                }
            };
            Ok(PmfOut::Scalar(pmf))
        }
        StatArg::Joint => {
            let j = match method {
                MethodArg::Band => extrema_joint::joint_pmf_band(n, params).map_err(runtime)?,
                MethodArg::Recurrence => extrema_joint::joint_pmf(n, params).map_err(runtime)?,
                MethodArg::Auto | MethodArg::Series => {
                    if params.is_lazy() {
                        extrema_joint::joint_pmf_band(n, params).map_err(runtime)?
                    } else {
                        extrema_joint::joint_pmf(n, params).map_err(runtime)?
                    }
                }
                MethodArg::Matrix => {
                    return Err(CliError::flags(
                        "--method matrix applies to the reflected statistics",
                    ))
                }
            };
            Ok(PmfOut::Joint(j))
        }
        StatArg::Maxabs => {
            let pmf = extrema_joint::max_abs_pmf(n, params, Arith::Exact).map_err(runtime)?;
            Ok(PmfOut::Scalar(pmf))
        }
        StatArg::Strong | StatArg::Weak => {
            let params = params.with_mode(if stat == StatArg::Strong {
                Mode::StrongReflect
            } else {
                Mode::WeakReflect
            });
            type PmfFn = fn(usize, &WalkParams) -> Result<Pmf, crate::walkcore::WalkError>;
            let (matrix, recurrence, series): (PmfFn, PmfFn, PmfFn) = if stat == StatArg::Strong {
                (
                    reflect_strong::max_pmf_matrix_method,
                    reflect_strong::max_pmf_recurrence,
                    reflect_strong::max_pmf_series,
                )
            } else {
                (
                    reflect_weak::max_pmf_matrix_method,
                    reflect_weak::max_pmf_recurrence,
                    reflect_weak::max_pmf_series,
                )
            };
            let pmf = match method {
                MethodArg::Matrix => matrix(n, &params).map_err(runtime)?,
                MethodArg::Recurrence => recurrence(n, &params).map_err(runtime)?,
                MethodArg::Series => series(n, &params).map_err(runtime)?,
                MethodArg::Auto => {
                    if n <= EXACT_N_GUARD && !params.is_lazy() {
                        recurrence(n, &params).map_err(runtime)?
                    } else {
                        matrix(n, &params).map_err(runtime)?
                    }
                }
                MethodArg::Band => {
                    return Err(CliError::flags(
                        "--method band applies to the plain-walk statistics",
                    ))
                }
            };
            Ok(PmfOut::Scalar(pmf))
        }
    }
}

enum PmfOut {
    Scalar(Pmf),
    Joint(JointPmf),
}

fn cmd_pmf(
    stat: StatArg,
    n: usize,
    p: &str,
    r: Option<&str>,
    method: MethodArg,
    arith: ArithArg,
    format: FormatArg,
) -> Result<(), CliError> {
    let params = build_params(p, r, Mode::Plain)?;
    let out = compute_pmf(stat, n, &params, method)?;
    let stat_name = stat_label(stat);
    match (out, format) {
        (PmfOut::Scalar(pmf), FormatArg::Json) => {
            let entries: Vec<Value> = pmf
                .entries()
                .iter()
                .map(|(v, pr)| {
                    let mut e = json!({"value": v, "prob_float": pr.to_f64().unwrap()});
                    if arith == ArithArg::Exact {
                        e["prob"] = rat_json(pr);
                    }
                    e
                })
                .collect();
            println!(
                "{}",
                json!({
                    "stat": stat_name,
                    "n": n,
                    "p": rat_json(params.p()),
                    "r": rat_json(params.r()),
                    "entries": entries,
                })
            );
        }
        (PmfOut::Scalar(pmf), FormatArg::Csv) => {
            println!("value,prob_num,prob_den,prob_float");
            for (v, pr) in pmf.entries() {
                println!(
                    "{},{},{},{}",
                    v,
                    pr.numer(),
                    pr.denom(),
                    pr.to_f64().unwrap()
                );
            }
        }
        (PmfOut::Joint(j), FormatArg::Json) => {
            let entries: Vec<Value> = j
                .entries()
                .iter()
                .map(|((a, b), pr)| {
                    let mut e = json!({
                        "plus": a,
                        "minus": b,
                        "prob_float": pr.to_f64().unwrap(),
                    });
                    if arith == ArithArg::Exact {
                        e["prob"] = rat_json(pr);
                    }
                    e
                })
                .collect();
            println!(
                "{}",
                json!({
                    "stat": stat_name,
                    "n": n,
                    "p": rat_json(params.p()),
                    "r": rat_json(params.r()),
                    "entries": entries,
                })
            );
        }
        (PmfOut::Joint(j), FormatArg::Csv) => {
            println!("value,prob_num,prob_den,prob_float");
            for ((a, b), pr) in j.entries() {
                println!(
                    "{}:{},{},{},{}",
                    a,
                    b,
                    pr.numer(),
                    pr.denom(),
                    pr.to_f64().unwrap()
                );
            }
        }
    }
    Ok(())
}

fn stat_label(stat: StatArg) -> &'static str {
    match stat {
        StatArg::Max => "max",
        StatArg::Min => "min",
        StatArg::Joint => "joint",
        StatArg::Maxabs => "maxabs",
        StatArg::Strong => "strong",
        StatArg::Weak => "weak",
    }
}

fn cmd_moments(
    stat: StatArg,
    n: usize,
    p: &str,
    r: Option<&str>,
    predict: bool,
) -> Result<(), CliError> {
    let params = build_params(p, r, Mode::Plain)?;
    let mut out = json!({
        "stat": stat_label(stat),
        "n": n,
        "p": rat_json(params.p()),
        "r": rat_json(params.r()),
    });
    match stat {
        StatArg::Joint => {
            let cross = if n <= EXACT_N_GUARD {
                extrema_joint::cross_moment_band(n, &params, Arith::Exact)
                    .map_err(runtime)?
                    .to_f64()
                    .unwrap()
            } else {
                extrema_joint::cross_moment_f64(n, &params).map_err(runtime)?
            };
            out["cross_moment"] = json!(cross);
            if predict {
                let pred = asymptotics::plain_cross_prediction(n, &params).map_err(runtime)?;
                out["predicted"] = json!({ "cross_moment": pred });
            }
        }
        StatArg::Strong | StatArg::Weak => {
            let reflected = params.with_mode(if stat == StatArg::Strong {
                Mode::StrongReflect
            } else {
                Mode::WeakReflect
            });
            let m = if stat == StatArg::Strong {
                reflect_strong::moments_auto(n, &reflected).map_err(runtime)?
            } else {
                reflect_weak::moments_auto(n, &reflected).map_err(runtime)?
            };
            out["mean"] = json!(m.mean);
            out["second_moment"] = json!(m.second_moment);
            out["variance"] = json!(m.variance);
            if predict {
                let pred = asymptotics::reflected_prediction(n, &reflected).map_err(runtime)?;
                out["predicted"] = json!({
                    "mean": pred.mean,
                    "second_moment": pred.second_moment,
                });
            }
        }
        _ => {
            let pmf = if n <= EXACT_N_GUARD {
                match compute_pmf(stat, n, &params, MethodArg::Auto)? {
                    PmfOut::Scalar(p) => p,
                    PmfOut::Joint(_) => unreachable!(),
                }
            } else {
                return Err(CliError::runtime(format!(
                    "exact moments capped at n={EXACT_N_GUARD}; use simulate for larger horizons"
                )));
            };
            let m = pmf.moments();
            out["mean"] = json!(m.mean);
            out["second_moment"] = json!(m.second_moment);
            out["variance"] = json!(m.variance);
            out["mean_exact"] = rat_json(&pmf.mean_exact());
            if predict {
                let pred = match stat {
                    StatArg::Max => asymptotics::plain_max_prediction(n, &params),
                    StatArg::Min => asymptotics::plain_min_prediction(n, &params),
                    StatArg::Maxabs => {
                        return Err(CliError::flags("no prediction implemented for maxabs"))
                    }
                    _ => unreachable!(),
                }
                .map_err(runtime)?;
                out["predicted"] = json!({
                    "mean": pred.mean,
                    "second_moment": pred.second_moment,
                });
            }
        }
    }
    println!("{out}");
    Ok(())
}

fn cmd_cycle(p: &str, copies: Option<u64>, profile: bool) -> Result<(), CliError> {
    let prob = parse_prob("--p", p)?;
    let params = WalkParams::plain(prob).map_err(|e| CliError::flags(e.to_string()))?;
    let law = CycleLaw::new(&params).map_err(|e| CliError::flags(e.to_string()))?;
    let tol = 1e-12;
    let pmf_head: Vec<Value> = (1..=8u32)
        .map(|k| json!({"value": k, "prob": rat_json(&law.pmf_exact(k))}))
        .collect();
    let mut out = json!({
        "p": rat_json(params.p()),
        "x": law.x(),
        "mean": law.mean(tol),
        "second_moment": law.second_moment(tol),
        "pmf_head": pmf_head,
    });
    if let Some(ncopies) = copies {
        if ncopies == 0 {
            return Err(CliError::flags("--copies must be positive"));
        }
        let mean = law.copies_mean(ncopies, tol);
        let mut c = json!({"n": ncopies, "mean": mean});
        if profile {
            let gamma = asymptotics::euler_gamma();
            let profile = (ncopies as f64).log2() + gamma / std::f64::consts::LN_2 + 0.5;
            c["profile"] = json!(profile);
            c["residual"] = json!(mean - profile);
        }
        out["copies"] = c;
    } else if profile {
        return Err(CliError::flags("--profile requires --copies"));
    }
    println!("{out}");
    Ok(())
}

fn cmd_constants(tol: f64) -> Result<(), CliError> {
    if !(tol > 0.0 && tol < 1.0) {
        return Err(CliError::flags("--tol must be in (0, 1)"));
    }
    let mut out = serde_json::Map::new();
    for (name, value) in asymptotics::constant_table(tol) {
        out.insert(name.to_string(), json!(value));
    }
    println!("{}", Value::Object(out));
    Ok(())
}

fn cmd_probe(scenario: ScenarioArg, t: f64, second_moment: bool) -> Result<(), CliError> {
    if !(t > 0.0) {
        return Err(CliError::flags("--t must be positive"));
    }
    let sc = match scenario {
        ScenarioArg::Strong => ProbeScenario::Strong,
        ScenarioArg::Weak => ProbeScenario::Weak,
    };
    let (value, target) = if second_moment {
        (
            asymptotics::sech_probe_second_moment(sc, t),
            2.0 * asymptotics::catalan(1e-14),
        )
    } else {
        (
            asymptotics::sech_probe(sc, t),
            (std::f64::consts::PI / 2.0).sqrt(),
        )
    };
    println!(
        "{}",
        json!({
            "scenario": match scenario { ScenarioArg::Strong => "strong", ScenarioArg::Weak => "weak" },
            "t": t,
            "second_moment": second_moment,
            "value": value,
            "target": target,
            "abs_error": (value - target).abs(),
        })
    );
    Ok(())
}

fn cmd_simulate(
    variant: VariantArg,
    n: usize,
    trials: u64,
    seed: u64,
    p: Option<&str>,
    r: Option<&str>,
    alpha: Option<f64>,
) -> Result<(), CliError> {
    let (mc_variant, name) = match variant {
        VariantArg::Plain => (Variant::Plain, "plain"),
        VariantArg::Strong => (Variant::Strong, "strong"),
        VariantArg::Weak => (Variant::Weak, "weak"),
        VariantArg::Lazy => (Variant::Lazy, "lazy"),
        VariantArg::Traffic => (Variant::Traffic, "traffic"),
        VariantArg::Persistent => (Variant::Persistent, "persistent"),
    };
    let params = match variant {
        VariantArg::Traffic | VariantArg::Persistent => {
            WalkParams::plain(crate::exactnum::rat(1, 2)).unwrap()
        }
        _ => {
            let p = p.ok_or_else(|| CliError::flags("this variant needs --p"))?;
            let pv = parse_prob("--p", p)?;
            let rv = match r {
                Some(s) => parse_prob("--r", s)?,
                None => Rat::zero(),
            };
            if variant != VariantArg::Lazy && !rv.is_zero() {
                return Err(CliError::flags("--r applies to the lazy variant"));
            }
            let q = Rat::one() - &pv - &rv;
            if q.is_negative() {
                return Err(CliError::flags("step probabilities exceed 1"));
            }
            WalkParams::new_unrestricted(pv, q, rv, Mode::Plain)
                .map_err(|e| CliError::flags(e.to_string()))?
        }
    };
    let spec = SimSpec {
        variant: mc_variant,
        n,
        trials,
        seed,
        params,
        alpha,
        stat: PathStat::Max,
    };
    let est = montecarlo::simulate(&spec).map_err(|e| CliError::flags(e.to_string()))?;
    println!(
        "{}",
        json!({
            "variant": name,
            "n": n,
            "trials": trials,
            "seed": seed,
            "mean": est.mean,
            "second_moment": est.second_moment,
            "std_error": est.std_error,
        })
    );
    Ok(())
}

struct SuiteRunner {
    failures: usize,
}

impl SuiteRunner {
    fn new() -> Self {
        Self { failures: 0 }
    }

    fn check(&mut self, name: &str, ok: bool) {
        if ok {
            println!("PASS {name}");
        } else {
            println!("FAIL {name}");
            self.failures += 1;
        }
    }
}

fn suite_cross_method(r: &mut SuiteRunner) {
    for (pn, pd) in [(1i64, 2i64), (1, 3)] {
        let base = WalkParams::plain(crate::exactnum::rat(pn, pd)).unwrap();
        let strong = base.with_mode(Mode::StrongReflect);
        let weak = base.with_mode(Mode::WeakReflect);
        let mut ok_s = true;
        let mut ok_w = true;
        let mut ok_j = true;
        for n in 1..=14usize {
            let m = reflect_strong::max_pmf_matrix_method(n, &strong).unwrap();
            ok_s &= m == reflect_strong::max_pmf_recurrence(n, &strong).unwrap();
            ok_s &= m == reflect_strong::max_pmf_series(n, &strong).unwrap();
            let m = reflect_weak::max_pmf_matrix_method(n, &weak).unwrap();
            ok_w &= m == reflect_weak::max_pmf_recurrence(n, &weak).unwrap();
            ok_w &= m == reflect_weak::max_pmf_series(n, &weak).unwrap();
            if n <= 10 {
                ok_j &= extrema_joint::joint_pmf(n, &base).unwrap()
                    == extrema_joint::joint_pmf_band(n, &base).unwrap();
            }
        }
        r.check(&format!("cross-method strong p={pn}/{pd}"), ok_s);
        r.check(&format!("cross-method weak p={pn}/{pd}"), ok_w);
        r.check(&format!("cross-method joint p={pn}/{pd}"), ok_j);
    }
}

fn suite_oracle(r: &mut SuiteRunner) {
    for (pn, pd) in [(1i64, 2i64), (1, 3), (2, 5)] {
        let base = WalkParams::plain(crate::exactnum::rat(pn, pd)).unwrap();
        let mut ok = true;
        for n in 0..=8usize {
            ok &= extrema_joint::joint_pmf(n, &base).unwrap()
                == oracle::enumerate_joint(n, &base).unwrap();
            if n >= 1 {
                ok &= extrema_joint::max_abs_pmf(n, &base, Arith::Exact).unwrap()
                    == oracle::enumerate_pmf(n, &base, oracle::WalkStatistic::MaxAbs).unwrap();
                let strong = base.with_mode(Mode::StrongReflect);
                ok &= reflect_strong::max_pmf_recurrence(n, &strong).unwrap()
                    == oracle::enumerate_pmf(n, &strong, oracle::WalkStatistic::ReflectedMax)
                        .unwrap();
                let weak = base.with_mode(Mode::WeakReflect);
                ok &= reflect_weak::max_pmf_recurrence(n, &weak).unwrap()
                    == oracle::enumerate_pmf(n, &weak, oracle::WalkStatistic::ReflectedMax)
                        .unwrap();
            }
        }
        r.check(&format!("oracle agreement p={pn}/{pd}"), ok);
    }
}

fn suite_marginals(r: &mut SuiteRunner) {
    for (pn, pd) in [(1i64, 2i64), (1, 3)] {
        let base = WalkParams::plain(crate::exactnum::rat(pn, pd)).unwrap();
        let mut ok = true;
        for n in 1..=10usize {
            let j = extrema_joint::joint_pmf(n, &base).unwrap();
            ok &=
                j.marginal(true) == extrema_joint::marginal_max_pmf(n, Side::Plus, &base).unwrap();
            ok &= j.marginal(false)
                == extrema_joint::marginal_max_pmf(n, Side::Minus, &base).unwrap();
        }
        r.check(&format!("joint marginals p={pn}/{pd}"), ok);
    }
    // the uncorrected tail sum double-counts terminal visits to the barrier
    let base = WalkParams::plain(crate::exactnum::rat(1, 3)).unwrap();
    let (p, q) = (base.p().clone(), base.q().clone());
    let uncorrected = extrema_joint::omega_uncorrected(2, 1, &p, &q)
        - extrema_joint::omega_uncorrected(2, 2, &p, &q);
    let corrected = extrema_joint::marginal_max_pmf(2, Side::Plus, &base)
        .unwrap()
        .prob(1);
    r.check(
        "corrected marginal differs from naive reflection count",
        uncorrected != corrected && corrected == &p * &q,
    );
}

fn suite_constants(r: &mut SuiteRunner) {
    let g = asymptotics::catalan(1e-14);
    r.check(
        "catalan constant",
        (g - 0.915_965_594_177_219).abs() < 1e-12,
    );
    let gamma = asymptotics::euler_gamma();
    r.check(
        "euler gamma",
        (gamma - 0.577_215_664_901_532_9).abs() < 1e-12,
    );
    let t1 = asymptotics::sech_probe(ProbeScenario::Strong, 0.001);
    let t2 = asymptotics::sech_probe(ProbeScenario::Weak, 0.001);
    let target = (std::f64::consts::PI / 2.0).sqrt();
    // the integer-level probe carries an O(t) endpoint correction
    // (≈ √(2/π)·t/2); the half-integer one converges much faster
    r.check("sech probes near sqrt(pi/2)", {
        (t1 - target).abs() < 1e-3 && (t2 - target).abs() < 1e-5
    });
    let s1 = asymptotics::sech_probe_second_moment(ProbeScenario::Strong, 0.001);
    let s2 = asymptotics::sech_probe_second_moment(ProbeScenario::Weak, 0.001);
    r.check("second-moment probes near 2G", {
        (s1 - 2.0 * g).abs() < 1e-4 && (s2 - 2.0 * g).abs() < 1e-4
    });
}

fn suite_asymptotics(r: &mut SuiteRunner) {
    let sym = WalkParams::plain(crate::exactnum::rat(1, 2)).unwrap();
    let n = 400;
    let exact = extrema_joint::symmetric_max_mean(n).to_f64().unwrap();
    let pred = asymptotics::plain_max_prediction(n, &sym).unwrap();
    r.check(
        "symmetric max mean prediction",
        (exact - pred.mean).abs() < 0.02,
    );
    let biased = WalkParams::plain(crate::exactnum::rat(1, 3)).unwrap();
    let pmf = extrema_joint::marginal_max_pmf(200, Side::Plus, &biased).unwrap();
    let pred = asymptotics::plain_max_prediction(200, &biased).unwrap();
    r.check(
        "biased max mean limit",
        (pmf.moments().mean - pred.mean).abs() < 1e-4,
    );
    let pmf = extrema_joint::marginal_max_pmf(200, Side::Minus, &biased).unwrap();
    let pred = asymptotics::plain_min_prediction(200, &biased).unwrap();
    r.check(
        "biased min mean drift",
        (pmf.moments().mean - pred.mean).abs() < 0.02,
    );
}

fn cmd_verify(suite: SuiteArg) -> Result<(), CliError> {
    let mut r = SuiteRunner::new();
    match suite {
        SuiteArg::CrossMethod => suite_cross_method(&mut r),
        SuiteArg::Oracle => suite_oracle(&mut r),
        SuiteArg::Marginals => suite_marginals(&mut r),
        SuiteArg::Constants => suite_constants(&mut r),
        SuiteArg::Asymptotics => suite_asymptotics(&mut r),
        SuiteArg::All => {
            suite_cross_method(&mut r);
            suite_oracle(&mut r);
            suite_marginals(&mut r);
            suite_constants(&mut r);
            suite_asymptotics(&mut r);
        }
    }
    if r.failures == 0 {
        Ok(())
    } else {
        Err(CliError::runtime(format!(
            "{} verification check(s) failed",
            r.failures
        )))
    }
}
