//! Randomized certification suites. Trial `i` of a suite draws from a
//! ChaCha8 stream selected by `i`, so results do not depend on scheduling.

use std::f64::consts::TAU;

use num_complex::Complex64;
use numrange_core::blaschke::BlaschkeProduct;
use numrange_core::dilation::{circumscription_check_with_boundary, poncelet_polygon};
use numrange_core::inequalities::{random_nilpotent_contraction, schwarz_pick_chain, schwarz_pick_check, AnalyticSelfMap};
use numrange_core::model_operator::single_zero_matrix;
use numrange_core::numerical_range::{boundary, numerical_radius_default};
use numrange_core::radius_formula::{radius_closed_form, radius_single_zero};
use numrange_core::subspace::subspace_cos_angle;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde_json::Value;

use crate::cli::{Suite, VerifyArgs};
use crate::commands::Outcome;
use crate::report::{obj, RunReport};

pub const RADIUS_TOL: f64 = 1e-9;
pub const PONCELET_TOL: f64 = 1e-6;
pub const SCHWARZ_PICK_TOL: f64 = 1e-9;
pub const ANGLE_TOL: f64 = 1e-6;

/// Signed slack of one trial; `None` when the trial raised an error.
type Margin = Option<f64>;

fn trial_rng(seed: u64, suite: u64, trial: u64) -> ChaCha8Rng {
    let mut rng = ChaCha8Rng::seed_from_u64(seed ^ suite.rotate_left(32));
    rng.set_stream(trial);
    rng
}

fn disc_point(rng: &mut ChaCha8Rng, max: f64) -> Complex64 {
    Complex64::from_polar(rng.gen_range(0.0..max), rng.gen_range(0.0..TAU))
}

/// `tol − max |formula − eigen|` (and closed form for n ≤ 4).
fn radius_trial(rng: &mut ChaCha8Rng) -> Margin {
    let alpha = disc_point(rng, 0.8);
    let n = rng.gen_range(2..=12);
    let eigen = numerical_radius_default(single_zero_matrix(alpha, n).ok()?.matrix()).ok()?;
    let formula = radius_single_zero(alpha, n).ok()?;
    let mut gap = (eigen - formula).abs();
    if n <= 4 {
        let closed = radius_closed_form(alpha, n).ok()?;
        gap = gap.max((closed - formula).abs()).max((closed - eigen).abs());
    }
    Some(RADIUS_TOL - gap)
}

/// `tol − max(|edge violation|, boundary excursion)`.
fn poncelet_trial(rng: &mut ChaCha8Rng) -> Margin {
    let alpha = disc_point(rng, 0.6);
    let n = rng.gen_range(2..=5);
    let lambda = Complex64::from_polar(1.0, rng.gen_range(0.0..TAU));
    let t = single_zero_matrix(alpha, n).ok()?.compressed_shift();
    let p = poncelet_polygon(&t, lambda).ok()?;
    let b = boundary(&t, 1024).ok()?;
    let rep = circumscription_check_with_boundary(&p, &t, &b.points).ok()?;
    let worst = rep.max_violation.abs().max(rep.min_violation.abs()).max(rep.boundary_excursion);
    let distinct = p.vertices().len() == n + 1 && p.min_vertex_gap() > 1e-8 && p.source_distance() < 1e-8;
    Some(if distinct { PONCELET_TOL - worst } else { -1.0 })
}

/// Smallest of the inequality margin and both chain-link margins.
fn schwarz_pick_trial(rng: &mut ChaCha8Rng, trial: u64) -> Margin {
    let n = rng.gen_range(2..=6);
    let t = random_nilpotent_contraction(n, rng.gen());
    let alpha = disc_point(rng, 0.8);
    let f = &AnalyticSelfMap::standard_family()[(trial % 4) as usize];
    let rep = schwarz_pick_check(&t, f, alpha).ok()?;
    let (l1, l2) = schwarz_pick_chain(&t, f, alpha).ok()?.margins();
    Some(rep.margin.min(l1).min(l2))
}

/// `sin θ − F`.
fn angles_trial(rng: &mut ChaCha8Rng) -> Margin {
    let a1 = disc_point(rng, 0.7);
    let mut a2 = disc_point(rng, 0.7);
    while (a1 - a2).norm() < 1e-3 {
        a2 = disc_point(rng, 0.7);
    }
    let (n1, n2) = (rng.gen_range(1..=3), rng.gen_range(1..=3));
    let r = subspace_cos_angle(&BlaschkeProduct::single_zero(a1, n1).ok()?, &BlaschkeProduct::single_zero(a2, n2).ok()?).ok()?;
    Some(r.sin_angle - r.f_lower_bound?)
}

fn run_suite(suite: Suite, trials: u64, seed: u64) -> (Value, bool) {
    let (id, tol): (u64, f64) = match suite {
        Suite::Radius => (1, 0.0),
        Suite::Poncelet => (2, 0.0),
        Suite::SchwarzPick => (3, -SCHWARZ_PICK_TOL),
        Suite::Angles => (4, -ANGLE_TOL),
        Suite::All => unreachable!("expanded by caller"),
    };
    let margins: Vec<Margin> = (0..trials)
        .into_par_iter()
        .map(|i| {
            let mut rng = trial_rng(seed, id, i);
            match suite {
                Suite::Radius => radius_trial(&mut rng),
                Suite::Poncelet => poncelet_trial(&mut rng),
                Suite::SchwarzPick => schwarz_pick_trial(&mut rng, i),
                Suite::Angles => angles_trial(&mut rng),
                Suite::All => unreachable!(),
            }
        })
        .collect();
    let failures = margins.iter().filter(|m| !matches!(m, Some(v) if *v >= tol)).count();
    let errors = margins.iter().filter(|m| m.is_none()).count();
    let min_margin = margins.iter().flatten().copied().fold(f64::INFINITY, f64::min);
    let value = obj([
        ("trials", trials.into()),
        ("failures", (failures as u64).into()),
        ("errors", (errors as u64).into()),
        ("min_margin", if min_margin.is_finite() { min_margin.into() } else { Value::Null }),
        ("pass_threshold", tol.into()),
        ("margins", Value::Array(margins.iter().map(|m| m.map_or(Value::Null, Value::from)).collect())),
    ]);
    (value, failures == 0)
}

fn suite_name(s: Suite) -> &'static str {
    match s {
        Suite::Radius => "radius",
        Suite::Poncelet => "poncelet",
        Suite::SchwarzPick => "schwarz-pick",
        Suite::Angles => "angles",
        Suite::All => "all",
    }
}

pub fn verify(args: &VerifyArgs) -> Outcome {
    let mut report = RunReport::new("verify");
    report.input("suite", suite_name(args.suite)).input("trials", args.trials).input("seed", args.seed);
    report
        .tolerance("radius_agreement", RADIUS_TOL)
        .tolerance("poncelet_tangency", PONCELET_TOL)
        .tolerance("schwarz_pick_margin", SCHWARZ_PICK_TOL)
        .tolerance("angle_f_slack", ANGLE_TOL);
    let suites: Vec<Suite> = match args.suite {
        Suite::All => vec![Suite::Radius, Suite::Poncelet, Suite::SchwarzPick, Suite::Angles],
        s => vec![s],
    };
    let mut certified = true;
    for s in suites {
        let (value, ok) = run_suite(s, args.trials, args.seed);
        certified &= ok;
        report.result(suite_name(s), value);
    }
    report.result("certified", certified);
    Outcome { report, certified }
}
