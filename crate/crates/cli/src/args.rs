use std::path::PathBuf;

use clap::{Args, Parser, Subcommand};
use desitter::CaseKind;

use crate::config::{resolve, Command, CurveChoice, Format, Overrides, RunConfig, Thresholds};

#[derive(Debug, Parser)]
#[command(name = "desitter-cat", version, about = "Catenaries of de Sitter space and their rotational surfaces")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Sub,
}

#[derive(Debug, Subcommand)]
pub enum Sub {
    /// Integrate a catenary and write (t, u, u', kappa, residual) rows.
    Solve(Common),
    /// Solve, build the rotational surface and check minimality.
    Verify(Common),
    /// Criticality score of a solved catenary over a grid of multipliers.
    Scan {
        #[command(flatten)]
        common: Common,
        /// Comma-separated multipliers to test.
        #[arg(long, value_delimiter = ',', allow_hyphen_values = true, default_value = "0,0.25,0.5,0.75,1")]
        lambdas: Vec<f64>,
    },
    /// Write embedded coordinates of a curve and optionally its surface.
    Export {
        #[command(flatten)]
        common: Common,
        #[arg(long, value_enum, default_value = "catenary")]
        curve: CurveChoice,
        /// Also write the (x1..x4, t, s) surface grid here.
        #[arg(long)]
        surface_output: Option<PathBuf>,
        /// Number of rotation parameters in [-1, 1].
        #[arg(long, default_value_t = 9)]
        s_count: usize,
    },
}

#[derive(Debug, Args)]
pub struct Common {
    /// spherical, hyperbolic, parabolic or intrinsic.
    #[arg(long, default_value = "spherical")]
    pub case: CaseKind,
    #[arg(long, default_value_t = 0.0, allow_hyphen_values = true)]
    pub lambda: f64,
    #[arg(long, allow_hyphen_values = true)]
    pub u0: Option<f64>,
    #[arg(long, allow_hyphen_values = true)]
    pub du0: Option<f64>,
    /// Start parameter; defaults to the span midpoint.
    #[arg(long, allow_hyphen_values = true)]
    pub t0: Option<f64>,
    #[arg(long, num_args = 2, value_names = ["A", "B"], allow_hyphen_values = true)]
    pub span: Option<Vec<f64>>,
    #[arg(long, default_value_t = desitter::solver::DEFAULT_STEP)]
    pub step: f64,
    /// Intervals of the discretized curve (and export rows - 1).
    #[arg(long, default_value_t = 200)]
    pub grid_n: usize,
    #[arg(long, short)]
    pub output: Option<PathBuf>,
    #[arg(long, value_enum, default_value = "csv")]
    pub format: Format,
    #[arg(long, default_value_t = 42)]
    pub seed: u64,
    #[arg(long, default_value_t = 1e-6)]
    pub residual_tol: f64,
    #[arg(long, default_value_t = 1e-6)]
    pub h_zero_tol: f64,
    #[arg(long, default_value_t = 1e-2)]
    pub h_floor: f64,
    #[arg(long, default_value_t = 1e-4)]
    pub variation_tol: f64,
    #[arg(long, default_value_t = 1e-6)]
    pub drift_tol: f64,
    #[arg(long, default_value_t = 1e-8)]
    pub route_gap_tol: f64,
}

impl Common {
    fn config(&self, command: Command) -> RunConfig {
        let o = Overrides {
            u0: self.u0,
            du0: self.du0,
            t0: self.t0,
            span: self.span.as_ref().map(|s| (s[0], s[1])),
        };
        let (u0, du0, t0, span) = resolve(self.case, &o);
        RunConfig {
            lambda: self.lambda,
            u0,
            du0,
            t0,
            span,
            step: self.step,
            grid_n: self.grid_n,
            output_path: self.output.clone(),
            format: self.format,
            seed: self.seed,
            thresholds: Thresholds {
                residual: self.residual_tol,
                h_zero: self.h_zero_tol,
                h_floor: self.h_floor,
                variation: self.variation_tol,
                drift: self.drift_tol,
                route_gap: self.route_gap_tol,
            },
            ..RunConfig::new(command, self.case)
        }
    }
}

impl Cli {
    pub fn config(&self) -> RunConfig {
        match &self.command {
            Sub::Solve(c) => c.config(Command::Solve),
            Sub::Verify(c) => c.config(Command::Verify),
            Sub::Scan { common, lambdas } => RunConfig {
                lambdas: lambdas.clone(),
                ..common.config(Command::Scan)
            },
            Sub::Export {
                common,
                curve,
                surface_output,
                s_count,
            } => RunConfig {
                curve: *curve,
                surface_path: surface_output.clone(),
                s_count: *s_count,
                ..common.config(Command::Export)
            },
        }
    }
}
