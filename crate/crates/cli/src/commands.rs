use std::f64::consts::{PI, TAU};

use numrange_core::blaschke::BlaschkeProduct;
use numrange_core::dilation::{circumscription_check_with_boundary, poncelet_polygon, PonceletPolygon};
use numrange_core::kms::{kms_eigenvalues, real_part_spectrum, KmsRootSystem};
use numrange_core::model_operator::compress_shift_adjoint;
use numrange_core::numerical_range::{assemble_boundary, numerical_radius, support_function};
use numrange_core::radius_formula::{radius_closed_form, radius_single_zero};
use numrange_core::subspace::{g_estimate, subspace_cos_angle, GEstimate, RhoSource};
use numrange_core::ComplexMatrix;
use rayon::prelude::*;
use serde_json::Value;

use crate::cli::{AnglesArgs, BoundaryArgs, KmsArgs, OperatorArgs, PonceletArgs, RadiusArgs};
use crate::error::{CliError, Result};
use crate::parse::ZeroSpec;
use crate::report::{complex, complex_list, obj, RunReport};

/// A report plus whether every certificate it carries passed.
#[derive(Debug, Clone)]
pub struct Outcome {
    pub report: RunReport,
    pub certified: bool,
}

fn zero_specs(op: &OperatorArgs) -> Result<Vec<ZeroSpec>> {
    match (op.alpha, op.n) {
        (Some(zero), Some(n)) => Ok(vec![ZeroSpec { zero, mult: n as usize }]),
        _ if !op.zeros.is_empty() => Ok(op.zeros.clone()),
        _ => Err(CliError::Usage("give --zero (repeatable) or --alpha with --n".into())),
    }
}

fn zeros_value(specs: &[ZeroSpec]) -> Value {
    Value::Array(specs.iter().map(|s| Value::from(vec![s.zero.re, s.zero.im, s.mult as f64])).collect())
}

fn product(specs: &[ZeroSpec]) -> Result<BlaschkeProduct> {
    Ok(BlaschkeProduct::new(specs.iter().map(|s| (s.zero, s.mult)).collect())?)
}

/// Echo the symbol into the report and return `S(φ)`.
fn operator(report: &mut RunReport, op: &OperatorArgs) -> Result<(BlaschkeProduct, ComplexMatrix)> {
    let specs = zero_specs(op)?;
    report.input("zeros", zeros_value(&specs));
    let phi = product(&specs)?;
    let t = compress_shift_adjoint(&phi).compressed_shift();
    Ok((phi, t))
}

fn g_value(est: &GEstimate) -> Value {
    obj([
        ("rho", est.rho.into()),
        ("delta", est.delta.into()),
        ("factors", (est.p as u64).into()),
        ("applicable", est.applicable.into()),
        ("bound", est.bound.map_or(Value::Null, Value::from)),
        ("threshold", ((1.0 - est.delta) / (2.0 * (est.p as f64 - 1.0))).into()),
    ])
}

pub fn radius(args: &RadiusArgs) -> Result<Outcome> {
    let mut report = RunReport::new("radius");
    let (phi, t) = operator(&mut report, &args.operator)?;
    report.input("grid", args.grid).input("refine_tol", args.refine_tol);
    report.tolerance("agreement", args.agreement_tol).tolerance("refine_theta", args.refine_tol);

    let eigen = numerical_radius(&t, args.grid as usize, args.refine_tol)?;
    let n = phi.degree();
    report.result("degree", n as u64).result("radius_eigen", eigen);
    let mut certified = true;

    if n >= 3 {
        let lower = (PI / n as f64).cos();
        report.result("lower_bound_cos_pi_over_n", lower);
        certified &= lower < eigen;
    }
    if let Some((alpha, mult)) = phi.as_single_zero() {
        let formula = radius_single_zero(alpha, mult)?;
        let delta = (formula - eigen).abs();
        report.result("radius_formula", formula).result("delta_formula_eigen", delta);
        certified &= delta <= args.agreement_tol;
        if (2..=4).contains(&mult) {
            let closed = radius_closed_form(alpha, mult)?;
            let dc = (closed - formula).abs().max((closed - eigen).abs());
            report.result("radius_closed_form", closed).result("delta_closed_form", dc);
            certified &= dc <= args.agreement_tol;
        }
    }
    let distinct = phi.distinct_zeros();
    if distinct.len() >= 2 {
        let factors = distinct
            .iter()
            .map(|&(a, m)| BlaschkeProduct::single_zero(a, m))
            .collect::<std::result::Result<Vec<_>, _>>()?;
        let numeric = g_estimate(&factors, RhoSource::Numeric)?;
        let proxy = g_estimate(&factors, RhoSource::FProxy)?;
        if let Some(b) = numeric.bound {
            certified &= eigen <= b + 1e-8;
        }
        report.result("g_estimate", obj([("numeric", g_value(&numeric)), ("f_proxy", g_value(&proxy))]));
    }
    report.result("certified", certified);
    Ok(Outcome { report, certified })
}

fn polygon_value(p: &PonceletPolygon) -> Value {
    obj([
        ("vertices", complex_list(p.vertices())),
        ("source", complex(p.source_vertex())),
        ("phase", p.phase().into()),
        ("min_vertex_gap", p.min_vertex_gap().into()),
        ("source_distance", p.source_distance().into()),
    ])
}

fn support_grid(t: &ComplexMatrix, grid: usize) -> Result<(Vec<f64>, Vec<f64>)> {
    let h = TAU / grid as f64;
    let thetas: Vec<f64> = (0..grid).map(|j| j as f64 * h).collect();
    let support = thetas
        .par_iter()
        .map(|&th| support_function(t, th))
        .collect::<std::result::Result<Vec<_>, _>>()?;
    Ok((thetas, support))
}

pub fn boundary(args: &BoundaryArgs) -> Result<Outcome> {
    let mut report = RunReport::new("boundary");
    let (_, t) = operator(&mut report, &args.operator)?;
    report.input("grid", args.grid);
    if let Some(l) = args.poncelet {
        report.input("poncelet", complex(l));
    }
    let (thetas, support) = support_grid(&t, args.grid as usize)?;
    let b = assemble_boundary(thetas, support);
    let max_modulus = b.points.iter().map(|&(x, y)| x.hypot(y)).fold(0.0, f64::max);
    report
        .result(
            "boundary",
            obj([
                ("theta", b.thetas.clone().into()),
                ("lambda", b.support.clone().into()),
                ("x", b.points.iter().map(|p| p.0).collect::<Vec<_>>().into()),
                ("y", b.points.iter().map(|p| p.1).collect::<Vec<_>>().into()),
            ]),
        )
        .result("envelope_residual", b.envelope_residual())
        .result("max_point_modulus", max_modulus);
    let mut certified = true;
    if let Some(l) = args.poncelet {
        let p = poncelet_polygon(&t, l)?;
        let rep = circumscription_check_with_boundary(&p, &t, &b.points)?;
        certified = rep.certified();
        report.result("poncelet", polygon_value(&p));
        report.result("circumscribed", certified);
    }
    Ok(Outcome { report, certified })
}

pub fn poncelet(args: &PonceletArgs) -> Result<Outcome> {
    let mut report = RunReport::new("poncelet");
    let (_, t) = operator(&mut report, &args.operator)?;
    if args.lambda.norm() == 0.0 {
        return Err(CliError::Usage("--lambda must be nonzero".into()));
    }
    report.input("lambda", complex(args.lambda)).input("grid", args.grid);
    report.tolerance("tangency", args.tangency_tol);
    let p = poncelet_polygon(&t, args.lambda)?;
    let (thetas, support) = support_grid(&t, args.grid as usize)?;
    let b = assemble_boundary(thetas, support);
    let rep = circumscription_check_with_boundary(&p, &t, &b.points)?;
    let certified = rep.max_violation.abs() <= args.tangency_tol
        && rep.min_violation.abs() <= args.tangency_tol
        && rep.boundary_excursion <= args.tangency_tol
        && p.vertices().len() == t.rows() + 1;
    report
        .result("polygon", polygon_value(&p))
        .result("max_violation", rep.max_violation)
        .result("min_violation", rep.min_violation)
        .result("boundary_excursion", rep.boundary_excursion)
        .result("certified", certified);
    Ok(Outcome { report, certified })
}

pub fn kms(args: &KmsArgs) -> Result<Outcome> {
    let mut report = RunReport::new("kms");
    let n = args.n as usize;
    report.input("alpha", args.alpha).input("n", args.n);
    let sys = KmsRootSystem::new(args.alpha, n)?;
    let spectrum = real_part_spectrum(args.alpha, n)?;
    let radius = spectrum.iter().fold(0.0f64, |acc, v| acc.max(v.abs()));
    report
        .result("roots", sys.roots().to_vec())
        .result("brackets", sys.brackets().iter().map(|&(a, b)| vec![a, b]).collect::<Vec<_>>())
        .result("kms_eigenvalues", kms_eigenvalues(args.alpha, n)?)
        .result("real_part_spectrum", spectrum)
        .result("radius", radius);
    Ok(Outcome { report, certified: true })
}

pub fn angles(args: &AnglesArgs) -> Result<Outcome> {
    let mut report = RunReport::new("angles");
    report.input("first", zeros_value(&args.first)).input("second", zeros_value(&args.second));
    report.tolerance("f_bound", args.f_tol);
    let a = subspace_cos_angle(&product(&args.first)?, &product(&args.second)?)?;
    let certified = a.satisfies_f_bound(args.f_tol);
    report
        .result("cos_angle", a.cos_angle)
        .result("sin_angle", a.sin_angle)
        .result("f_lower_bound", a.f_lower_bound.map_or(Value::Null, Value::from))
        .result("truncation", a.truncation as u64)
        .result("certified", certified);
    Ok(Outcome { report, certified })
}
