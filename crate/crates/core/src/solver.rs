//! Initial-value integration of the catenary equations with `v = t`.
//!
//! Substituting `v' = 1`, `v'' = 0` and the target curvature of the case into
//! the geodesic-curvature formula leaves one scalar second-order ODE in `u`,
//! integrated here with fixed-step classical RK4.

use crate::curves::{
    catenary_numerator, half_space_predicate, signed_distance, CaseKind, ChartJet, CurveUV,
    DENOM_TOL,
};
use crate::error::{GeometryError, Result};
use crate::lorentz::{causal_character, Causal, CAUSAL_TOL};

pub const DEFAULT_STEP: f64 = 1e-3;

/// Initial-value problem for a catenary `t -> Psi(u(t), t)`.
#[derive(Debug, Clone, PartialEq)]
pub struct CatenaryProblem {
    pub case: CaseKind,
    pub lambda: f64,
    pub u0: f64,
    pub du0: f64,
    pub t0: f64,
    pub t_span: (f64, f64),
    pub step: f64,
    /// Expected causal character; checked against the initial data if set.
    pub epsilon_hint: Option<Causal>,
}

impl CatenaryProblem {
    pub fn new(case: CaseKind, lambda: f64, u0: f64, du0: f64, t0: f64, t_span: (f64, f64)) -> Self {
        Self {
            case,
            lambda,
            u0,
            du0,
            t0,
            t_span,
            step: DEFAULT_STEP,
            epsilon_hint: None,
        }
    }

    pub fn with_step(mut self, step: f64) -> Self {
        self.step = step;
        self
    }

    /// Checks the problem invariants and returns the causal sign of the
    /// initial velocity.
    pub fn validate(&self) -> Result<f64> {
        let invalid = |m: String| Err(GeometryError::InvalidProblem(m));
        let fields = [self.lambda, self.u0, self.du0, self.t0, self.t_span.0, self.t_span.1, self.step];
        if fields.iter().any(|x| !x.is_finite()) {
            return invalid("all numeric fields must be finite".into());
        }
        if self.step <= 0.0 {
            return invalid(format!("step {} must be positive", self.step));
        }
        let predicate = half_space_predicate(self.case, self.u0, self.t0);
        if !(predicate > 0.0) {
            return invalid(format!(
                "initial point (u0, t0) = ({}, {}) is outside positive half-space of the {} case",
                self.u0, self.t0, self.case
            ));
        }
        let speed2 = speed2(self.u0, self.du0);
        let causal = causal_character(speed2, CAUSAL_TOL);
        if causal == Causal::Lightlike {
            return invalid(format!("degenerate initial velocity: <g', g'> = {speed2:e}"));
        }
        if let Some(hint) = self.epsilon_hint {
            if hint != causal {
                return invalid(format!("epsilon hint {hint:?} contradicts the initial data ({causal:?})"));
            }
        }
        let (a, b) = self.t_span;
        if !(a <= self.t0 && self.t0 <= b) || a == b {
            return invalid(format!("t_span [{a}, {b}] must be a non-empty interval containing t0 = {}", self.t0));
        }
        let w = signed_distance(self.case, self.u0, self.t0) + self.lambda;
        if w.abs() <= DENOM_TOL {
            return invalid(format!("singular denominator at the initial point: d + lambda = {w:e}"));
        }
        Ok(causal.sign())
    }
}

/// One accepted integration state.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SolverSample {
    pub t: f64,
    pub u: f64,
    pub du: f64,
}

/// Why integration stopped.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Termination {
    SpanCompleted,
    LightlikeApproach,
    /// Weight `d + lambda` vanished, or the state blew up in finite time.
    DenominatorSingularity,
    LeftHalfSpace,
}

impl Termination {
    pub fn name(self) -> &'static str {
        match self {
            Termination::SpanCompleted => "SpanCompleted",
            Termination::LightlikeApproach => "LightlikeApproach",
            Termination::DenominatorSingularity => "DenominatorSingularity",
            Termination::LeftHalfSpace => "LeftHalfSpace",
        }
    }
}

#[derive(Debug, Clone)]
pub struct CatenaryResult {
    /// Accepted states in increasing `t`.
    pub samples: Vec<SolverSample>,
    /// Quintic Hermite interpolant of the samples (`v = t`).
    pub curve: CurveUV,
    /// `SpanCompleted` only if both directions reached the span ends;
    /// otherwise the tag of the forward (then backward) early stop.
    pub termination: Termination,
    pub epsilon: f64,
}

impl CatenaryResult {
    /// Samples without the two end points.
    pub fn interior(&self) -> &[SolverSample] {
        let n = self.samples.len();
        if n <= 2 {
            &[]
        } else {
            &self.samples[1..n - 1]
        }
    }
}

fn speed2(u: f64, du: f64) -> f64 {
    let ch = u.cosh();
    ch * ch - du * du
}

/// `u''` of a catenary parametrized with `v = t`.
///
/// With `q = cosh(u)^2 - u'^2` the curvature target enters as
/// `eps kappa |g'|^3 = -N q / (d + lambda)`, which is smooth across the light
/// cone.
pub fn u_accel(case: CaseKind, lambda: f64, t: f64, u: f64, du: f64) -> f64 {
    let jet = ChartJet {
        u,
        du,
        ddu: 0.0,
        v: t,
        dv: 1.0,
        ddv: 0.0,
    };
    let (sh, ch) = (u.sinh(), u.cosh());
    let w = signed_distance(case, u, t) + lambda;
    let scaled_kappa = -catenary_numerator(case, &jet) * speed2(u, du) / w;
    (scaled_kappa - sh * ch * ch + 2.0 * du * du * sh) / ch
}

struct Integrator {
    case: CaseKind,
    lambda: f64,
    epsilon: f64,
    weight_sign: f64,
}

#[derive(Debug, Clone, Copy, PartialEq)]
enum StateCheck {
    Ok,
    Lightlike,
    Denominator,
    HalfSpace,
}

impl Integrator {
    fn rhs(&self, t: f64, y: [f64; 2]) -> [f64; 2] {
        [y[1], u_accel(self.case, self.lambda, t, y[0], y[1])]
    }

    fn rk4(&self, s: SolverSample, h: f64) -> SolverSample {
        let y = [s.u, s.du];
        let add = |y: [f64; 2], k: [f64; 2], c: f64| [y[0] + c * k[0], y[1] + c * k[1]];
        let k1 = self.rhs(s.t, y);
        let k2 = self.rhs(s.t + 0.5 * h, add(y, k1, 0.5 * h));
        let k3 = self.rhs(s.t + 0.5 * h, add(y, k2, 0.5 * h));
        let k4 = self.rhs(s.t + h, add(y, k3, h));
        SolverSample {
            t: s.t + h,
            u: y[0] + h / 6.0 * (k1[0] + 2.0 * k2[0] + 2.0 * k3[0] + k4[0]),
            du: y[1] + h / 6.0 * (k1[1] + 2.0 * k2[1] + 2.0 * k3[1] + k4[1]),
        }
    }

    fn check(&self, s: &SolverSample) -> StateCheck {
        if !(s.u.is_finite() && s.du.is_finite()) {
            return StateCheck::Denominator;
        }
        if self.epsilon * speed2(s.u, s.du) < 10.0 * CAUSAL_TOL {
            return StateCheck::Lightlike;
        }
        self.check_domain(s)
    }

    fn check_domain(&self, s: &SolverSample) -> StateCheck {
        if !(s.u.is_finite() && s.du.is_finite()) {
            return StateCheck::Denominator;
        }
        let w = self.weight_sign * (signed_distance(self.case, s.u, s.t) + self.lambda);
        if !(w > DENOM_TOL) {
            return StateCheck::Denominator;
        }
        if !(half_space_predicate(self.case, s.u, s.t) > 0.0) {
            return StateCheck::HalfSpace;
        }
        StateCheck::Ok
    }

    // Shortened step from `s` landing with eps <g', g'> in [2, 10) tau_c.
    // Fails with the tag of whatever blocks the landing: a vanishing weight,
    // the half-space boundary, or a jump across the cone (blow-up).
    fn approach_cone(&self, s: SolverSample, h: f64) -> std::result::Result<SolverSample, Termination> {
        let (mut lo, mut hi) = (0.0, h);
        for _ in 0..200 {
            let mid = 0.5 * (lo + hi);
            let mut trial = self.rk4(s, mid);
            trial.t = s.t + mid;
            let q = self.epsilon * speed2(trial.u, trial.du);
            if q.is_finite() && q >= 10.0 * CAUSAL_TOL {
                lo = mid;
            } else if !q.is_finite() || q < 2.0 * CAUSAL_TOL {
                hi = mid;
            } else {
                return match self.check_domain(&trial) {
                    StateCheck::Ok if mid != 0.0 => Ok(trial),
                    StateCheck::HalfSpace => Err(Termination::LeftHalfSpace),
                    _ => Err(Termination::DenominatorSingularity),
                };
            }
        }
        match self.check_domain(&self.rk4(s, hi)) {
            StateCheck::HalfSpace => Err(Termination::LeftHalfSpace),
            _ => Err(Termination::DenominatorSingularity),
        }
    }

    fn run(&self, start: SolverSample, t_end: f64, step: f64) -> (Vec<SolverSample>, Termination) {
        let dir = if t_end >= start.t { 1.0 } else { -1.0 };
        let mut out = Vec::new();
        let mut s = start;
        let n_steps = ((t_end - start.t).abs() / step - 1e-9).ceil().max(0.0) as usize;
        for i in 0..n_steps {
            let target = if i + 1 == n_steps {
                t_end
            } else {
                start.t + dir * step * (i + 1) as f64
            };
            let h = target - s.t;
            let mut next = self.rk4(s, h);
            next.t = target;
            match self.check(&next) {
                StateCheck::Ok => {
                    out.push(next);
                    s = next;
                }
                StateCheck::Lightlike => {
                    return match self.approach_cone(s, h) {
                        Ok(last) => {
                            out.push(last);
                            (out, Termination::LightlikeApproach)
                        }
                        Err(tag) => (out, tag),
                    };
                }
                StateCheck::Denominator => return (out, Termination::DenominatorSingularity),
                StateCheck::HalfSpace => return (out, Termination::LeftHalfSpace),
            }
        }
        (out, Termination::SpanCompleted)
    }
}

/// Integrates the catenary ODE of `problem.case` forward and backward from
/// `t0` over `t_span`.
pub fn solve(problem: &CatenaryProblem) -> Result<CatenaryResult> {
    let epsilon = problem.validate()?;
    let w0 = signed_distance(problem.case, problem.u0, problem.t0) + problem.lambda;
    let integrator = Integrator {
        case: problem.case,
        lambda: problem.lambda,
        epsilon,
        weight_sign: w0.signum(),
    };
    let start = SolverSample {
        t: problem.t0,
        u: problem.u0,
        du: problem.du0,
    };
    let (forward, fwd_tag) = integrator.run(start, problem.t_span.1, problem.step);
    let (backward, bwd_tag) = integrator.run(start, problem.t_span.0, problem.step);

    let mut samples: Vec<SolverSample> = backward.into_iter().rev().collect();
    samples.push(start);
    samples.extend(forward);
    samples.dedup_by(|b, a| b.t <= a.t);
    if samples.len() < 2 {
        return Err(GeometryError::InvalidProblem(
            "trajectory terminated before completing a single step".into(),
        ));
    }

    let termination = if fwd_tag != Termination::SpanCompleted {
        fwd_tag
    } else {
        bwd_tag
    };

    let ts: Vec<f64> = samples.iter().map(|s| s.t).collect();
    let us: Vec<f64> = samples.iter().map(|s| s.u).collect();
    let dus: Vec<f64> = samples.iter().map(|s| s.du).collect();
    let ddus: Vec<f64> = samples
        .iter()
        .map(|s| u_accel(problem.case, problem.lambda, s.t, s.u, s.du))
        .collect();
    let curve = CurveUV::from_graph_samples(ts, &us, &dus, &ddus)?;

    Ok(CatenaryResult {
        samples,
        curve,
        termination,
        epsilon,
    })
}

/// Closed-form plane catenary `y(x) = cosh(c x + a) / c - lambda`.
pub fn euclidean_catenary(c: f64, a: f64, lambda: f64, x: f64) -> f64 {
    (c * x + a).cosh() / c - lambda
}

/// `y'' / (1 + y'^2) - 1 / (y + lambda)` on the closed-form catenary.
pub fn euclidean_el_residual(c: f64, a: f64, lambda: f64, x: f64) -> Result<f64> {
    if !(c > 0.0) {
        return Err(GeometryError::InvalidProblem(format!("catenary parameter c = {c} must be positive")));
    }
    let arg = c * x + a;
    let y = euclidean_catenary(c, a, lambda, x);
    let dy = arg.sinh();
    let ddy = c * arg.cosh();
    let w = y + lambda;
    if w.abs() <= DENOM_TOL {
        return Err(GeometryError::SingularDenominator { value: w.abs() });
    }
    Ok(ddy / (1.0 + dy * dy) - 1.0 / w)
}
