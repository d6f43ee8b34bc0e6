use std::f64::consts::FRAC_PI_2;
use std::path::PathBuf;

use anyhow::{bail, Result};
use desitter::CaseKind;
use serde_json::{json, Value};

#[derive(Debug, Clone, Copy, PartialEq, Eq, clap::ValueEnum)]
pub enum Command {
    Solve,
    Verify,
    Scan,
    Export,
}

impl Command {
    pub fn name(self) -> &'static str {
        match self {
            Command::Solve => "solve",
            Command::Verify => "verify",
            Command::Scan => "scan",
            Command::Export => "export",
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, clap::ValueEnum)]
pub enum Format {
    Csv,
    Json,
}

/// Generating curve of an export.
#[derive(Debug, Clone, Copy, PartialEq, Eq, clap::ValueEnum)]
pub enum CurveChoice {
    Catenary,
    Equator,
    /// `u = u0`.
    Parallel,
    /// `v = t0`, parametrized by `u` over the span.
    Meridian,
}

impl CurveChoice {
    pub fn name(self) -> &'static str {
        match self {
            CurveChoice::Catenary => "catenary",
            CurveChoice::Equator => "equator",
            CurveChoice::Parallel => "parallel",
            CurveChoice::Meridian => "meridian",
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Thresholds {
    pub residual: f64,
    pub h_zero: f64,
    pub h_floor: f64,
    /// Scaled first-variation bound of the criticality certificate.
    pub variation: f64,
    /// Relative first-integral drift (spherical case).
    pub drift: f64,
    /// Agreement of the two mean-curvature routes.
    pub route_gap: f64,
}

impl Default for Thresholds {
    fn default() -> Self {
        Self {
            residual: 1e-6,
            h_zero: 1e-6,
            h_floor: 1e-2,
            variation: 1e-4,
            drift: 1e-6,
            route_gap: 1e-8,
        }
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct RunConfig {
    pub command: Command,
    pub case: CaseKind,
    pub lambda: f64,
    pub u0: f64,
    pub du0: f64,
    pub t0: f64,
    pub span: (f64, f64),
    pub step: f64,
    pub grid_n: usize,
    pub output_path: Option<PathBuf>,
    pub format: Format,
    pub seed: u64,
    pub thresholds: Thresholds,
    pub lambdas: Vec<f64>,
    pub curve: CurveChoice,
    pub surface_path: Option<PathBuf>,
    pub s_count: usize,
}

/// Initial data `(u0, du0, t0, half-width)` whose catenaries stay well inside
/// the half-space and away from the light cone.
pub fn case_defaults(case: CaseKind) -> (f64, f64, f64, f64) {
    match case {
        CaseKind::Spherical | CaseKind::Intrinsic => (1.0, 0.0, 0.0, 0.5),
        CaseKind::Hyperbolic => (0.3, 0.0, FRAC_PI_2, 0.8),
        CaseKind::Parabolic => (0.0, 0.0, FRAC_PI_2, 0.8),
    }
}

/// Optional user inputs before defaults are filled in.
#[derive(Debug, Clone, Default, PartialEq)]
pub struct Overrides {
    pub u0: Option<f64>,
    pub du0: Option<f64>,
    pub t0: Option<f64>,
    pub span: Option<(f64, f64)>,
}

/// Fills `u0`, `du0`, `t0` and `span` from the case defaults. Without `t0` the
/// start is the midpoint of the span; without a span it is centred on `t0`.
pub fn resolve(case: CaseKind, o: &Overrides) -> (f64, f64, f64, (f64, f64)) {
    let (u0, du0, t0, half) = case_defaults(case);
    let (t0, span) = match (o.t0, o.span) {
        (Some(t), Some(s)) => (t, s),
        (None, Some(s)) => (0.5 * (s.0 + s.1), s),
        (Some(t), None) => (t, (t - half, t + half)),
        (None, None) => (t0, (t0 - half, t0 + half)),
    };
    (o.u0.unwrap_or(u0), o.du0.unwrap_or(du0), t0, span)
}

impl RunConfig {
    pub fn new(command: Command, case: CaseKind) -> Self {
        let (u0, du0, t0, span) = resolve(case, &Overrides::default());
        Self {
            command,
            case,
            lambda: 0.0,
            u0,
            du0,
            t0,
            span,
            step: desitter::solver::DEFAULT_STEP,
            grid_n: 200,
            output_path: None,
            format: Format::Csv,
            seed: 42,
            thresholds: Thresholds::default(),
            lambdas: vec![0.0, 0.25, 0.5, 0.75, 1.0],
            curve: CurveChoice::Catenary,
            surface_path: None,
            s_count: 9,
        }
    }

    pub fn validate(&self) -> Result<()> {
        let th = &self.thresholds;
        let numeric = [
            ("lambda", self.lambda),
            ("u0", self.u0),
            ("du0", self.du0),
            ("t0", self.t0),
            ("span start", self.span.0),
            ("span end", self.span.1),
            ("step", self.step),
            ("residual threshold", th.residual),
            ("H-zero threshold", th.h_zero),
            ("H-floor threshold", th.h_floor),
            ("variation threshold", th.variation),
            ("drift threshold", th.drift),
            ("route-gap threshold", th.route_gap),
        ];
        for (name, x) in numeric {
            if !x.is_finite() {
                bail!("{name} must be finite, got {x}");
            }
        }
        if let Some(l) = self.lambdas.iter().find(|l| !l.is_finite()) {
            bail!("lambda grid entries must be finite, got {l}");
        }
        if self.step <= 0.0 {
            bail!("step must be positive, got {}", self.step);
        }
        if self.grid_n < desitter::variational::MIN_INTERVALS {
            bail!("grid_n must be at least {}, got {}", desitter::variational::MIN_INTERVALS, self.grid_n);
        }
        if self.span.0 >= self.span.1 {
            bail!("span must be an increasing interval, got [{}, {}]", self.span.0, self.span.1);
        }
        if self.s_count < 1 {
            bail!("s_count must be at least 1");
        }
        let positive = [th.residual, th.h_zero, th.h_floor, th.variation, th.drift, th.route_gap];
        if positive.iter().any(|&x| x <= 0.0) {
            bail!("thresholds must be positive");
        }
        if self.command == Command::Scan && self.lambdas.is_empty() {
            bail!("lambda grid must not be empty");
        }
        Ok(())
    }

    /// Full configuration echo written into every artifact.
    pub fn meta(&self) -> Value {
        let th = &self.thresholds;
        let path = |p: &Option<PathBuf>| p.as_ref().map(|p| p.display().to_string());
        json!({
            "command": self.command.name(),
            "case": self.case.name(),
            "lambda": self.lambda,
            "u0": self.u0,
            "du0": self.du0,
            "t0": self.t0,
            "span": [self.span.0, self.span.1],
            "step": self.step,
            "grid_n": self.grid_n,
            "output_path": path(&self.output_path),
            "format": match self.format { Format::Csv => "csv", Format::Json => "json" },
            "seed": self.seed,
            "thresholds": {
                "residual": th.residual,
                "h_zero": th.h_zero,
                "h_floor": th.h_floor,
                "variation": th.variation,
                "drift": th.drift,
                "route_gap": th.route_gap,
            },
            "lambdas": self.lambdas,
            "curve": self.curve.name(),
            "surface_path": path(&self.surface_path),
            "s_count": self.s_count,
        })
    }
}
