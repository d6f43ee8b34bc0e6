//! Curves of the de Sitter plane S²₁ written in the chart
//! `Psi(u, v) = (cosh u cos v, cosh u sin v, sinh u)`, their geodesic
//! curvature and principal normal, and the pointwise catenary equations for
//! the four reference configurations.

use std::fmt;
use std::str::FromStr;
use std::sync::Arc;

use crate::error::{GeometryError, Result};
use crate::lorentz::{cross3, det3, inner3, LVec3, CAUSAL_TOL};
use crate::spline::{CubicSpline, Jet1, QuinticHermite};

/// Guard on `|d + lambda|` below which catenary equations are not evaluated.
pub const DENOM_TOL: f64 = 1e-8;

/// Reference object against which the weight of a curve is measured.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum CaseKind {
    /// Spacelike plane `z = 0`, field `Z = d/dz`.
    Spherical,
    /// Timelike plane `y = 0`, field `Y = d/dy`.
    Hyperbolic,
    /// Degenerate plane `y = z`, field `T = d/dy + d/dz`.
    Parabolic,
    /// Intrinsic distance to the geodesic `z = 0`, field `V = Psi_u`.
    Intrinsic,
}

impl CaseKind {
    pub const ALL: [CaseKind; 4] = [
        CaseKind::Spherical,
        CaseKind::Hyperbolic,
        CaseKind::Parabolic,
        CaseKind::Intrinsic,
    ];

    pub fn name(self) -> &'static str {
        match self {
            CaseKind::Spherical => "spherical",
            CaseKind::Hyperbolic => "hyperbolic",
            CaseKind::Parabolic => "parabolic",
            CaseKind::Intrinsic => "intrinsic",
        }
    }

    /// Sign relating the curvature to the normal angle:
    /// `kappa (d + lambda) = sign * <n, field>` on catenaries.
    pub fn field_sign(self) -> f64 {
        match self {
            CaseKind::Spherical | CaseKind::Intrinsic => 1.0,
            CaseKind::Hyperbolic | CaseKind::Parabolic => -1.0,
        }
    }
}

impl fmt::Display for CaseKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for CaseKind {
    type Err = String;

    fn from_str(s: &str) -> std::result::Result<Self, Self::Err> {
        match s.to_ascii_lowercase().as_str() {
            "spherical" | "xy" => Ok(CaseKind::Spherical),
            "hyperbolic" | "xz" => Ok(CaseKind::Hyperbolic),
            "parabolic" | "y-z" => Ok(CaseKind::Parabolic),
            "intrinsic" | "in" => Ok(CaseKind::Intrinsic),
            other => Err(format!("unknown case '{other}'")),
        }
    }
}

/// The chart of S²₁.
pub fn psi(u: f64, v: f64) -> LVec3 {
    let (s, c) = v.sin_cos();
    LVec3::new_unchecked(u.cosh() * c, u.cosh() * s, u.sinh())
}

/// Partial derivative of the chart in `u`.
pub fn psi_u(u: f64, v: f64) -> LVec3 {
    let (s, c) = v.sin_cos();
    LVec3::new_unchecked(u.sinh() * c, u.sinh() * s, u.cosh())
}

/// Partial derivative of the chart in `v`.
pub fn psi_v(u: f64, v: f64) -> LVec3 {
    let (s, c) = v.sin_cos();
    LVec3::new_unchecked(-u.cosh() * s, u.cosh() * c, 0.0)
}

/// Chart coordinates of a curve and their first two derivatives at one `t`.
#[derive(Debug, Clone, Copy, PartialEq, Default)]
pub struct ChartJet {
    pub u: f64,
    pub du: f64,
    pub ddu: f64,
    pub v: f64,
    pub dv: f64,
    pub ddv: f64,
}

impl ChartJet {
    /// `<g', g'> = v'^2 cosh(u)^2 - u'^2`.
    pub fn speed2(&self) -> f64 {
        let ch = self.u.cosh();
        self.dv * self.dv * ch * ch - self.du * self.du
    }

    pub fn point(&self) -> LVec3 {
        psi(self.u, self.v)
    }

    pub fn velocity(&self) -> LVec3 {
        self.du * psi_u(self.u, self.v) + self.dv * psi_v(self.u, self.v)
    }
}

pub type ScalarFn = Arc<dyn Fn(f64) -> Jet1 + Send + Sync>;

#[derive(Clone)]
enum Repr {
    Analytic { u: ScalarFn, v: ScalarFn },
    Sampled { u: CubicSpline, v: CubicSpline },
    /// `v = t`, `u` interpolated from value/slope/curvature samples.
    HermiteGraph { u: QuinticHermite },
}

/// A curve `t -> Psi(u(t), v(t))` on a parameter interval.
#[derive(Clone)]
pub struct CurveUV {
    repr: Repr,
    domain: (f64, f64),
}

impl fmt::Debug for CurveUV {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let kind = match self.repr {
            Repr::Analytic { .. } => "analytic",
            Repr::Sampled { .. } => "sampled",
            Repr::HermiteGraph { .. } => "hermite-graph",
        };
        f.debug_struct("CurveUV")
            .field("kind", &kind)
            .field("domain", &self.domain)
            .finish()
    }
}

fn constant(c: f64) -> ScalarFn {
    Arc::new(move |_| Jet1 {
        value: c,
        d1: 0.0,
        d2: 0.0,
    })
}

fn identity() -> ScalarFn {
    Arc::new(|t| Jet1 {
        value: t,
        d1: 1.0,
        d2: 0.0,
    })
}

impl CurveUV {
    /// Curve given by callables returning `(f, f', f'')` for `u` and `v`.
    pub fn analytic(domain: (f64, f64), u: ScalarFn, v: ScalarFn) -> Self {
        Self {
            repr: Repr::Analytic { u, v },
            domain,
        }
    }

    /// Curve with `v = t` and `u` given by a callable.
    pub fn graph(domain: (f64, f64), u: ScalarFn) -> Self {
        Self::analytic(domain, u, identity())
    }

    /// The geodesic `u = 0`, `v = t`.
    pub fn equator(domain: (f64, f64)) -> Self {
        Self::analytic(domain, constant(0.0), identity())
    }

    /// The parallel `u = u0`, `v = t`.
    pub fn parallel(u0: f64, domain: (f64, f64)) -> Self {
        Self::analytic(domain, constant(u0), identity())
    }

    /// The meridian `u = t`, `v = v0`.
    pub fn meridian(v0: f64, domain: (f64, f64)) -> Self {
        Self::analytic(domain, identity(), constant(v0))
    }

    /// Interpolates chart samples with natural cubic splines.
    pub fn from_samples(ts: Vec<f64>, us: Vec<f64>, vs: Vec<f64>) -> Result<Self> {
        let u = CubicSpline::natural(ts.clone(), us)?;
        let v = CubicSpline::natural(ts, vs)?;
        let domain = u.domain();
        Ok(Self {
            repr: Repr::Sampled { u, v },
            domain,
        })
    }

    /// Curve `v = t` whose `u` interpolates values, slopes and curvatures.
    pub fn from_graph_samples(ts: Vec<f64>, us: &[f64], dus: &[f64], ddus: &[f64]) -> Result<Self> {
        let u = QuinticHermite::new(ts, us, dus, ddus)?;
        let domain = u.domain();
        Ok(Self {
            repr: Repr::HermiteGraph { u },
            domain,
        })
    }

    pub fn domain(&self) -> (f64, f64) {
        self.domain
    }

    /// Whether the curve is parametrized with `v = t` by construction.
    pub fn is_graph(&self) -> bool {
        match &self.repr {
            Repr::HermiteGraph { .. } => true,
            Repr::Sampled { .. } => false,
            Repr::Analytic { v, .. } => {
                let (a, b) = self.domain;
                [a, 0.5 * (a + b), b].iter().all(|&t| {
                    let j = v(t);
                    j.value == t && j.d1 == 1.0 && j.d2 == 0.0
                })
            }
        }
    }

    pub fn jet(&self, t: f64) -> ChartJet {
        let (u, v) = match &self.repr {
            Repr::Analytic { u, v } => (u(t), v(t)),
            Repr::Sampled { u, v } => (u.eval(t), v.eval(t)),
            Repr::HermiteGraph { u } => (
                u.eval(t),
                Jet1 {
                    value: t,
                    d1: 1.0,
                    d2: 0.0,
                },
            ),
        };
        ChartJet {
            u: u.value,
            du: u.d1,
            ddu: u.d2,
            v: v.value,
            dv: v.d1,
            ddv: v.d2,
        }
    }

    pub fn point_uv(&self, t: f64) -> (f64, f64) {
        let j = self.jet(t);
        (j.u, j.v)
    }

    /// Embedded point `Psi(u(t), v(t))`.
    pub fn point(&self, t: f64) -> LVec3 {
        let (u, v) = self.point_uv(t);
        psi(u, v)
    }
}

/// Kinematics and curvature of a curve at one parameter value.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct FrameAtT {
    pub point: LVec3,
    pub velocity: LVec3,
    /// `|g'| = sqrt(|<g', g'>|)`.
    pub speed: f64,
    /// `+1` spacelike, `-1` timelike.
    pub epsilon: f64,
    pub kappa: f64,
    /// Principal normal `n = -g x g' / |g'|`.
    pub normal: LVec3,
}

fn checked_speed2(jet: &ChartJet, t: f64) -> Result<f64> {
    let speed2 = jet.speed2();
    if !speed2.is_finite() {
        return Err(GeometryError::NonFinite("curve velocity"));
    }
    if speed2.abs() <= CAUSAL_TOL {
        return Err(GeometryError::DegenerateCurve { t, speed2 });
    }
    Ok(speed2)
}

/// Geodesic curvature from the chart derivatives.
pub fn kappa_from_jet(jet: &ChartJet, t: f64) -> Result<f64> {
    let speed2 = checked_speed2(jet, t)?;
    let eps = speed2.signum();
    let speed = speed2.abs().sqrt();
    let (sh, ch) = (jet.u.sinh(), jet.u.cosh());
    let num = jet.dv * (jet.dv * jet.dv * sh * ch * ch - 2.0 * jet.du * jet.du * sh)
        - ch * (jet.du * jet.ddv - jet.dv * jet.ddu);
    Ok(eps * num / (speed * speed * speed))
}

pub fn frame_from_jet(jet: &ChartJet, t: f64) -> Result<FrameAtT> {
    let kappa = kappa_from_jet(jet, t)?;
    let speed2 = jet.speed2();
    let speed = speed2.abs().sqrt();
    let point = jet.point();
    let velocity = jet.velocity();
    let normal = -(1.0 / speed) * cross3(point, velocity);
    Ok(FrameAtT {
        point,
        velocity,
        speed,
        epsilon: speed2.signum(),
        kappa,
        normal,
    })
}

/// Frame, causal sign and geodesic curvature of `curve` at `t`.
pub fn frame_at(curve: &CurveUV, t: f64) -> Result<FrameAtT> {
    frame_from_jet(&curve.jet(t), t)
}

/// Geodesic curvature `eps det(g, g', g'') / |g'|^3` from central differences
/// of the embedded points only.
pub fn kappa_fd_oracle(curve: &CurveUV, t: f64, h: f64) -> Result<f64> {
    if !(h > 0.0) {
        return Err(GeometryError::InvalidCurve(format!("step h = {h} must be positive")));
    }
    let g0 = curve.point(t);
    let gp = curve.point(t + h);
    let gm = curve.point(t - h);
    let d1 = (1.0 / (2.0 * h)) * (gp - gm);
    let d2 = (1.0 / (h * h)) * (gp - 2.0 * g0 + gm);
    let speed2 = inner3(d1, d1);
    if speed2.abs() <= CAUSAL_TOL {
        return Err(GeometryError::DegenerateCurve { t, speed2 });
    }
    let speed = speed2.abs().sqrt();
    Ok(speed2.signum() * det3(g0, d1, d2) / (speed * speed * speed))
}

/// Value of the half-space predicate; the positive side is `> 0`.
pub fn half_space_predicate(case: CaseKind, u: f64, v: f64) -> f64 {
    match case {
        CaseKind::Spherical | CaseKind::Intrinsic => u.sinh(),
        CaseKind::Hyperbolic => u.cosh() * v.sin(),
        CaseKind::Parabolic => u.cosh() * v.sin() - u.sinh(),
    }
}

/// Distance function of the case without the half-space check.
pub fn signed_distance(case: CaseKind, u: f64, v: f64) -> f64 {
    match case {
        CaseKind::Intrinsic => u,
        _ => half_space_predicate(case, u, v),
    }
}

/// Distance from `Psi(u, v)` to the reference of `case`.
pub fn distance(point_uv: (f64, f64), case: CaseKind) -> Result<f64> {
    let (u, v) = point_uv;
    let predicate = half_space_predicate(case, u, v);
    if !(predicate > 0.0) {
        return Err(GeometryError::OutOfHalfSpace {
            case,
            u,
            v,
            predicate,
        });
    }
    Ok(signed_distance(case, u, v))
}

/// Unit field orthogonal to the reference (or tangent to the meridians in the
/// intrinsic case), evaluated at `Psi(u, v)`.
pub fn reference_field(case: CaseKind, u: f64, v: f64) -> LVec3 {
    match case {
        CaseKind::Spherical => LVec3::E3,
        CaseKind::Hyperbolic => LVec3::E2,
        CaseKind::Parabolic => LVec3::new_unchecked(0.0, 1.0, 1.0),
        CaseKind::Intrinsic => psi_u(u, v),
    }
}

/// Numerator `N` of the catenary equation `kappa = -N / ((d + lambda) |g'|)`.
pub fn catenary_numerator(case: CaseKind, jet: &ChartJet) -> f64 {
    let (sh, ch) = (jet.u.sinh(), jet.u.cosh());
    let (sv, cv) = jet.v.sin_cos();
    match case {
        CaseKind::Spherical => jet.dv * ch * ch,
        CaseKind::Hyperbolic => jet.du * cv + jet.dv * sh * ch * sv,
        CaseKind::Parabolic => jet.dv * ch * (sh * sv - ch) + jet.du * cv,
        CaseKind::Intrinsic => jet.dv * ch,
    }
}

fn guarded_weight(case: CaseKind, jet: &ChartJet, lambda: f64) -> Result<f64> {
    let w = signed_distance(case, jet.u, jet.v) + lambda;
    if !(w.abs() > DENOM_TOL) {
        return Err(GeometryError::SingularDenominator { value: w.abs() });
    }
    Ok(w)
}

/// Curvature a catenary of `case` with multiplier `lambda` must have at `jet`.
pub fn catenary_kappa(case: CaseKind, lambda: f64, jet: &ChartJet, t: f64) -> Result<f64> {
    let speed = checked_speed2(jet, t)?.abs().sqrt();
    let w = guarded_weight(case, jet, lambda)?;
    Ok(-catenary_numerator(case, jet) / (w * speed))
}

/// `kappa(t)` minus the right-hand side of the case's catenary equation.
pub fn catenary_residual(curve: &CurveUV, t: f64, case: CaseKind, lambda: f64) -> Result<f64> {
    let jet = curve.jet(t);
    let kappa = kappa_from_jet(&jet, t)?;
    Ok(kappa - catenary_kappa(case, lambda, &jet, t)?)
}

/// `kappa (d + lambda) - sign <n, field>`, the normal-angle form of the
/// catenary equation.
pub fn normal_angle_residual(curve: &CurveUV, t: f64, case: CaseKind, lambda: f64) -> Result<f64> {
    let jet = curve.jet(t);
    let frame = frame_from_jet(&jet, t)?;
    let w = guarded_weight(case, &jet, lambda)?;
    let field = reference_field(case, jet.u, jet.v);
    Ok(frame.kappa * w - case.field_sign() * inner3(frame.normal, field))
}

/// Conserved momentum `eps v' cosh(u)^2 (sinh u + lambda) / |g'|` of the
/// spherical energy, which does not depend on `v`.
pub fn first_integral(curve: &CurveUV, t: f64, lambda: f64) -> Result<f64> {
    let jet = curve.jet(t);
    let speed2 = checked_speed2(&jet, t)?;
    let ch = jet.u.cosh();
    Ok(speed2.signum() * jet.dv * ch * ch * (jet.u.sinh() + lambda) / speed2.abs().sqrt())
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::f64::consts::FRAC_PI_2;

    fn wavy() -> CurveUV {
        CurveUV::graph(
            (-3.0, 3.0),
            Arc::new(|t: f64| Jet1 {
                value: 0.3 * t.sin(),
                d1: 0.3 * t.cos(),
                d2: -0.3 * t.sin(),
            }),
        )
    }

    #[test]
    fn chart_points() {
        assert_eq!(psi(0.0, 0.0), LVec3::new_unchecked(1.0, 0.0, 0.0));
        let p = psi(0.0, FRAC_PI_2);
        assert!(p.x.abs() < 1e-16 && (p.y - 1.0).abs() < 1e-16 && p.z == 0.0);
        let p = psi(1.0, 0.0);
        assert!((p.x - 1.0_f64.cosh()).abs() < 1e-15 && (p.z - 1.0_f64.sinh()).abs() < 1e-15);
        for &(u, v) in &[(0.3, -2.0), (-1.7, 4.0), (2.5, 0.1)] {
            let p = psi(u, v);
            assert!((inner3(p, p) - 1.0).abs() < 1e-12);
        }
    }

    #[test]
    fn geodesics_have_zero_curvature() {
        let eq = CurveUV::equator((0.0, 6.0));
        let me = CurveUV::meridian(0.4, (-1.0, 1.0));
        for k in 0..10 {
            let t = 0.1 * k as f64;
            assert!(frame_at(&eq, t).unwrap().kappa.abs() < 1e-15);
            assert!(frame_at(&me, t - 0.5).unwrap().kappa.abs() < 1e-15);
        }
    }

    #[test]
    fn parallel_curvature_is_tanh() {
        let c = CurveUV::parallel(1.0, (0.0, 1.0));
        let f = frame_at(&c, 0.3).unwrap();
        assert_eq!(f.epsilon, 1.0);
        assert!((f.kappa - 1.0_f64.tanh()).abs() < 1e-14);
        assert!((f.kappa - 0.76159).abs() < 1e-5);
        let fd = kappa_fd_oracle(&c, 0.3, 1e-4).unwrap();
        assert!((fd - 1.0_f64.tanh()).abs() < 1e-6);
    }

    #[test]
    fn fd_oracle_matches_on_wavy_curve() {
        let c = wavy();
        let a = frame_at(&c, 0.7).unwrap().kappa;
        let b = kappa_fd_oracle(&c, 0.7, 1e-4).unwrap();
        assert!((a - b).abs() < 1e-6, "{a} vs {b}");
        assert!(kappa_fd_oracle(&CurveUV::equator((0.0, 1.0)), 0.4, 1e-4).unwrap().abs() < 1e-6);
    }

    #[test]
    fn frame_invariants_on_timelike_curve() {
        // u = 2t, v = t is timelike near u = 0.
        let c = CurveUV::analytic(
            (-0.5, 0.5),
            Arc::new(|t: f64| Jet1 {
                value: 2.0 * t,
                d1: 2.0,
                d2: 0.0,
            }),
            identity(),
        );
        let f = frame_at(&c, 0.1).unwrap();
        assert_eq!(f.epsilon, -1.0);
        assert!((inner3(f.point, f.point) - 1.0).abs() < 1e-12);
        assert!(inner3(f.point, f.velocity).abs() < 1e-12);
        assert!(inner3(f.normal, f.velocity).abs() < 1e-12);
        assert!(inner3(f.normal, f.point).abs() < 1e-12);
        assert!((inner3(f.normal, f.normal) - 1.0).abs() < 1e-12);
    }

    #[test]
    fn degenerate_velocity_is_rejected() {
        // u = t, v = t is lightlike at u = 0.
        let c = CurveUV::analytic((-1.0, 1.0), identity(), identity());
        assert!(matches!(
            frame_at(&c, 0.0),
            Err(GeometryError::DegenerateCurve { .. })
        ));
        assert!(first_integral(&c, 0.0, 0.0).is_err());
    }

    #[test]
    fn distances() {
        assert!((distance((1.0, 0.3), CaseKind::Spherical).unwrap() - 1.0_f64.sinh()).abs() < 1e-15);
        assert!((distance((0.0, FRAC_PI_2), CaseKind::Hyperbolic).unwrap() - 1.0).abs() < 1e-15);
        assert!((distance((0.0, FRAC_PI_2), CaseKind::Parabolic).unwrap() - 1.0).abs() < 1e-15);
        assert_eq!(distance((0.7, 2.0), CaseKind::Intrinsic).unwrap(), 0.7);
        assert!(matches!(
            distance((-0.1, 0.0), CaseKind::Spherical),
            Err(GeometryError::OutOfHalfSpace { .. })
        ));
        assert!(distance((0.5, 0.0), CaseKind::Hyperbolic).is_err());
        assert!(distance((0.5, -1.0), CaseKind::Hyperbolic).is_err());
        // cosh(2) sin(0.2) < sinh(2)
        assert!(distance((2.0, 0.2), CaseKind::Parabolic).is_err());
    }

    #[test]
    fn meridian_satisfies_spherical_equation_for_any_lambda() {
        let m = CurveUV::meridian(0.3, (0.2, 1.5));
        for &lambda in &[0.0, 0.5, -0.1, 3.0] {
            assert_eq!(catenary_residual(&m, 0.8, CaseKind::Spherical, lambda).unwrap(), 0.0);
            assert!(normal_angle_residual(&m, 0.8, CaseKind::Spherical, lambda).unwrap().abs() < 1e-15);
        }
        assert_eq!(first_integral(&m, 0.9, 0.2).unwrap(), 0.0);
    }

    #[test]
    fn parallel_is_not_a_spherical_catenary() {
        let p = CurveUV::parallel(1.0, (0.0, 1.0));
        let r = catenary_residual(&p, 0.5, CaseKind::Spherical, 0.0).unwrap();
        let expected = 1.0_f64.tanh() + 1.0_f64.cosh() / 1.0_f64.sinh();
        assert!((r - expected).abs() < 1e-14);
        assert!((r - 2.0746).abs() < 1e-4);
        let c = first_integral(&p, 0.5, 0.0).unwrap();
        assert!((c - 1.0_f64.sinh() * 1.0_f64.cosh()).abs() < 1e-14);
    }

    #[test]
    fn singular_denominator() {
        let p = CurveUV::parallel(1.0, (0.0, 1.0));
        let lambda = -1.0_f64.sinh();
        assert!(matches!(
            catenary_residual(&p, 0.5, CaseKind::Spherical, lambda),
            Err(GeometryError::SingularDenominator { .. })
        ));
        assert!(normal_angle_residual(&p, 0.5, CaseKind::Spherical, lambda).is_err());
    }

    #[test]
    fn case_names_round_trip() {
        for c in CaseKind::ALL {
            assert_eq!(c.name().parse::<CaseKind>().unwrap(), c);
        }
        assert!("elliptic".parse::<CaseKind>().is_err());
    }
}
