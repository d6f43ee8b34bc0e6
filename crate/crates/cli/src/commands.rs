use anyhow::{anyhow, Result};
use desitter::curves::{catenary_residual, first_integral, frame_at, normal_angle_residual};
use desitter::solver::{solve, CatenaryProblem};
use desitter::surfaces::{minimality_sweep, surface_point, MinimalityStats, FD_STEP, S_GRID};
use desitter::variational::{critical_lambda_scan, criticality_score, random_basis, DiscreteCurve};
use desitter::{CaseKind, CatenaryResult, CurveUV, FormsMode, Termination};
use serde_json::Value;

use crate::config::{Command, CurveChoice, RunConfig};
use crate::output::Artifact;

/// Step of the central-difference first variation.
pub const VARIATION_STEP: f64 = 1e-6;
/// Perturbations in the criticality certificate.
pub const BASIS_SIZE: usize = 20;
/// Most `t` values used by the surface sweeps.
const SWEEP_POINTS: usize = 100;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ExitKind {
    Success,
    Failure,
    EarlyTermination,
}

impl ExitKind {
    pub fn code(self) -> i32 {
        match self {
            ExitKind::Success => 0,
            ExitKind::Failure => 1,
            ExitKind::EarlyTermination => 2,
        }
    }
}

#[derive(Debug, Clone)]
pub struct Outcome {
    pub artifact: Artifact,
    pub surface: Option<Artifact>,
    pub exit: ExitKind,
    /// One-line human summary.
    pub message: String,
}

pub fn run_command(cfg: &RunConfig) -> Result<Outcome> {
    cfg.validate()?;
    match cfg.command {
        Command::Solve => cmd_solve(cfg),
        Command::Verify => cmd_verify(cfg),
        Command::Scan => cmd_scan(cfg),
        Command::Export => cmd_export(cfg),
    }
}

fn problem(cfg: &RunConfig) -> CatenaryProblem {
    CatenaryProblem::new(cfg.case, cfg.lambda, cfg.u0, cfg.du0, cfg.t0, cfg.span).with_step(cfg.step)
}

fn solve_cfg(cfg: &RunConfig) -> Result<CatenaryResult> {
    solve(&problem(cfg)).map_err(|e| anyhow!(e))
}

fn termination_exit(t: Termination) -> ExitKind {
    if t == Termination::SpanCompleted {
        ExitKind::Success
    } else {
        ExitKind::EarlyTermination
    }
}

pub fn cmd_solve(cfg: &RunConfig) -> Result<Outcome> {
    let r = solve_cfg(cfg)?;
    let mut a = Artifact::new("solve", cfg.meta(), vec!["t", "u", "du", "kappa", "residual"]);
    let mut max_res: f64 = 0.0;
    for s in &r.samples {
        let kappa = frame_at(&r.curve, s.t)?.kappa;
        let res = catenary_residual(&r.curve, s.t, cfg.case, cfg.lambda)?;
        max_res = max_res.max(res.abs());
        a.rows.push(vec![s.t, s.u, s.du, kappa, res]);
    }
    a.note("termination", r.termination.name());
    a.note("epsilon", r.epsilon);
    a.note("samples", r.samples.len());
    a.note("max_residual", max_res);
    let message = format!(
        "solve: {} samples, termination {}, max residual {max_res:e}",
        r.samples.len(),
        r.termination.name()
    );
    Ok(Outcome {
        artifact: a,
        surface: None,
        exit: termination_exit(r.termination),
        message,
    })
}

/// `t` values for the surface sweeps: interior samples thinned to at most
/// `SWEEP_POINTS`.
fn sweep_ts(r: &CatenaryResult) -> Vec<f64> {
    let interior = r.interior();
    let stride = interior.len().div_ceil(SWEEP_POINTS).max(1);
    interior.iter().step_by(stride).map(|s| s.t).collect()
}

fn certificate(cfg: &RunConfig, curve: &CurveUV, lambda: f64) -> Result<f64> {
    let (a, b) = curve.domain();
    let discrete = DiscreteCurve::from_curve(curve, a, b, cfg.grid_n)?;
    let basis = random_basis(cfg.grid_n + 1, BASIS_SIZE, cfg.seed);
    Ok(criticality_score(&discrete, cfg.case, lambda, &basis, VARIATION_STEP)?)
}

/// Verdict of a verification run.
#[derive(Debug, Clone, PartialEq)]
pub struct Verdict {
    pub is_catenary: bool,
    pub minimal: bool,
    pub bounded_away: bool,
    pub expect_minimal: bool,
    pub routes_agree: bool,
    pub label: &'static str,
    pub pass: bool,
}

pub fn cmd_verify(cfg: &RunConfig) -> Result<Outcome> {
    let th = &cfg.thresholds;
    let r = solve_cfg(cfg)?;
    let (case, lambda) = (cfg.case, cfg.lambda);

    let interior = r.interior();
    let mut max_res: f64 = 0.0;
    let mut max_angle: f64 = 0.0;
    for s in interior {
        max_res = max_res.max(catenary_residual(&r.curve, s.t, case, lambda)?.abs());
        max_angle = max_angle.max(normal_angle_residual(&r.curve, s.t, case, lambda)?.abs());
    }
    let drift = if case == CaseKind::Spherical {
        let c0 = first_integral(&r.curve, cfg.t0, lambda)?;
        let mut d: f64 = 0.0;
        for s in &r.samples {
            d = d.max((first_integral(&r.curve, s.t, lambda)? - c0).abs() / c0.abs());
        }
        Some(d)
    } else {
        None
    };
    let score = certificate(cfg, &r.curve, lambda)?;

    let ts = sweep_ts(&r);
    let analytic = minimality_sweep(&r.curve, &ts, &S_GRID, case, FormsMode::Analytic)?;
    let fd = minimality_sweep(&r.curve, &ts, &S_GRID, case, FormsMode::FiniteDifference { h: FD_STEP })?;
    // The intrinsic closed display holds only for lambda = 0.
    let closed_applies = case != CaseKind::Intrinsic || lambda == 0.0;

    let is_catenary = max_res < th.residual && score < th.variation && drift.is_none_or(|d| d < th.drift);
    let max_h = analytic.max_abs_h.max(fd.max_abs_h);
    let min_h = analytic.min_abs_h.min(fd.min_abs_h);
    let (max_h, min_h) = if closed_applies {
        (max_h.max(analytic.max_abs_h_closed), min_h.min(analytic.min_abs_h_closed))
    } else {
        (max_h, min_h)
    };
    let minimal = max_h < th.h_zero;
    let bounded_away = min_h > th.h_floor;
    let routes_agree = !closed_applies || analytic.max_route_gap < th.route_gap;
    let expect_minimal = case != CaseKind::Intrinsic && lambda == 0.0;
    let label = match (is_catenary, minimal, bounded_away) {
        (false, _, _) => "not a catenary",
        (true, true, _) => "catenary, minimal",
        (true, false, true) if case == CaseKind::Intrinsic => "intrinsic catenary, not minimal",
        (true, false, true) => "catenary, not minimal",
        (true, false, false) => "inconclusive",
    };
    let verdict = Verdict {
        is_catenary,
        minimal,
        bounded_away,
        expect_minimal,
        routes_agree,
        label,
        pass: is_catenary && routes_agree && if expect_minimal { minimal } else { bounded_away },
    };

    let mut a = Artifact::new(
        "verify",
        cfg.meta(),
        vec!["t", "u", "residual", "h_forms", "h_fd", "h_closed"],
    );
    a.note("termination", r.termination.name());
    a.note("epsilon", r.epsilon);
    a.note("max_residual", max_res);
    a.note("max_normal_angle_residual", max_angle);
    a.note("first_integral_drift", drift.map_or(Value::Null, Value::from));
    a.note("criticality_score", score);
    stats_notes(&mut a, "forms", &analytic, false);
    stats_notes(&mut a, "fd", &fd, false);
    if closed_applies {
        stats_notes(&mut a, "closed", &analytic, true);
        a.note("route_gap_forms_closed", analytic.max_route_gap);
        a.note("route_gap_fd_closed", fd.max_route_gap);
    } else {
        a.note("closed_form", "not applicable");
    }
    a.note("verdict", label);
    a.note("status", if verdict.pass { "PASS" } else { "FAIL" });

    for &t in &ts {
        let u = r.curve.jet(t).u;
        let res = catenary_residual(&r.curve, t, case, lambda)?;
        let hf = desitter::surfaces::fundamental_forms(&r.curve, t, 0.0, case, FormsMode::Analytic)?.mean_curvature;
        let hd = desitter::surfaces::fundamental_forms(&r.curve, t, 0.0, case, FormsMode::FiniteDifference { h: FD_STEP })?
            .mean_curvature;
        let hc = if closed_applies {
            desitter::surfaces::mean_curvature_closed_form(&r.curve, t, case)?
        } else {
            f64::NAN
        };
        a.rows.push(vec![t, u, res, hf, hd, hc]);
    }

    let exit = if !verdict.pass {
        ExitKind::Failure
    } else {
        termination_exit(r.termination)
    };
    let message = format!(
        "verify: {} ({}), termination {}",
        label,
        if verdict.pass { "PASS" } else { "FAIL" },
        r.termination.name()
    );
    Ok(Outcome {
        artifact: a,
        surface: None,
        exit,
        message,
    })
}

fn stats_notes(a: &mut Artifact, route: &str, st: &MinimalityStats, closed: bool) {
    let (max, min) = if closed {
        (st.max_abs_h_closed, st.min_abs_h_closed)
    } else {
        (st.max_abs_h, st.min_abs_h)
    };
    a.note(&format!("max_abs_h_{route}"), max);
    a.note(&format!("min_abs_h_{route}"), min);
    if !closed {
        a.note(&format!("orbit_spread_{route}"), st.max_orbit_spread);
    }
}

pub fn cmd_scan(cfg: &RunConfig) -> Result<Outcome> {
    let r = solve_cfg(cfg)?;
    let (a, b) = r.curve.domain();
    let discrete = DiscreteCurve::from_curve(&r.curve, a, b, cfg.grid_n)?;
    let basis = random_basis(cfg.grid_n + 1, BASIS_SIZE, cfg.seed);
    let scan = critical_lambda_scan(&discrete, cfg.case, &cfg.lambdas, &basis, VARIATION_STEP)?;
    let best = scan
        .iter()
        .copied()
        .min_by(|x, y| x.1.total_cmp(&y.1))
        .ok_or_else(|| anyhow!("lambda grid must not be empty"))?;
    let mut art = Artifact::new("scan", cfg.meta(), vec!["lambda", "score"]);
    art.rows = scan.iter().map(|&(l, s)| vec![l, s]).collect();
    art.note("termination", r.termination.name());
    art.note("best_lambda", best.0);
    art.note("best_score", best.1);
    Ok(Outcome {
        artifact: art,
        surface: None,
        exit: termination_exit(r.termination),
        message: format!("scan: best lambda {} (score {:e})", best.0, best.1),
    })
}

pub fn cmd_export(cfg: &RunConfig) -> Result<Outcome> {
    let (curve, termination) = match cfg.curve {
        CurveChoice::Catenary => {
            let r = solve_cfg(cfg)?;
            (r.curve, r.termination)
        }
        CurveChoice::Equator => (CurveUV::equator(cfg.span), Termination::SpanCompleted),
        CurveChoice::Parallel => (CurveUV::parallel(cfg.u0, cfg.span), Termination::SpanCompleted),
        CurveChoice::Meridian => (CurveUV::meridian(cfg.t0, cfg.span), Termination::SpanCompleted),
    };
    let (a, b) = curve.domain();
    let n = cfg.grid_n;
    let ts: Vec<f64> = (0..=n).map(|i| a + (b - a) * i as f64 / n as f64).collect();

    let mut art = Artifact::new("export", cfg.meta(), vec!["t", "x", "y", "z"]);
    art.note("curve", cfg.curve.name());
    art.note("termination", termination.name());
    for &t in &ts {
        let p = curve.point(t);
        art.rows.push(vec![t, p.x, p.y, p.z]);
    }

    let surface = cfg.surface_path.as_ref().map(|_| {
        let mut s_art = Artifact::new("export", cfg.meta(), vec!["x1", "x2", "x3", "x4", "t", "s"]);
        s_art.note("curve", cfg.curve.name());
        s_art.note("surface", "rotation");
        let m = cfg.s_count;
        for &t in &ts {
            for j in 0..m {
                let s = if m == 1 { 0.0 } else { -1.0 + 2.0 * j as f64 / (m - 1) as f64 };
                let p = surface_point(&curve, t, s, cfg.case);
                s_art.rows.push(vec![p.x1, p.x2, p.x3, p.x4, t, s]);
            }
        }
        s_art
    });
    Ok(Outcome {
        artifact: art,
        surface,
        exit: termination_exit(termination),
        message: format!("export: {} rows of the {}", ts.len(), cfg.curve.name()),
    })
}
