//! Rotational surfaces of S³₁ generated by curves of S²₁ × {0}, their first
//! and second fundamental forms and mean curvature.
//!
//! Three one-parameter groups fix the axis geodesic `L = Pi ∩ S²₁`:
//! boosts in the `(x3, x4)` plane (spherical type, `Pi = {z = 0}`), rotations
//! in the `(x2, x4)` plane (hyperbolic type, `Pi = {y = 0}`) and null
//! rotations (parabolic type, `Pi = {y = z}`).

use crate::curves::{frame_from_jet, CaseKind, ChartJet, CurveUV};
use crate::error::{GeometryError, Result};
use crate::lorentz::{cross4, inner4, LVec4, CAUSAL_TOL};

pub type Mat4 = [[f64; 4]; 4];

/// Rotation parameters used for minimality verdicts.
pub const S_GRID: [f64; 5] = [-1.0, -0.5, 0.0, 0.5, 1.0];

/// Default step of the finite-difference fundamental forms.
pub const FD_STEP: f64 = 1e-3;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum RotationKind {
    Spherical,
    Hyperbolic,
    Parabolic,
}

/// One-parameter isometry group of L⁴ fixing the axis of a case.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct RotationGroup {
    pub kind: RotationKind,
}

impl RotationGroup {
    /// The intrinsic case rotates about the same geodesic as the spherical one.
    pub fn for_case(case: CaseKind) -> Self {
        let kind = match case {
            CaseKind::Spherical | CaseKind::Intrinsic => RotationKind::Spherical,
            CaseKind::Hyperbolic => RotationKind::Hyperbolic,
            CaseKind::Parabolic => RotationKind::Parabolic,
        };
        Self { kind }
    }

    pub fn matrix(&self, s: f64) -> Mat4 {
        match self.kind {
            RotationKind::Spherical => {
                let (sh, ch) = (s.sinh(), s.cosh());
                [
                    [1.0, 0.0, 0.0, 0.0],
                    [0.0, 1.0, 0.0, 0.0],
                    [0.0, 0.0, ch, sh],
                    [0.0, 0.0, sh, ch],
                ]
            }
            RotationKind::Hyperbolic => {
                let (sn, cs) = s.sin_cos();
                [
                    [1.0, 0.0, 0.0, 0.0],
                    [0.0, cs, 0.0, -sn],
                    [0.0, 0.0, 1.0, 0.0],
                    [0.0, sn, 0.0, cs],
                ]
            }
            RotationKind::Parabolic => {
                let q = 0.5 * s * s;
                [
                    [1.0, 0.0, 0.0, 0.0],
                    [0.0, 1.0 - q, q, s],
                    [0.0, -q, q + 1.0, s],
                    [0.0, -s, s, 1.0],
                ]
            }
        }
    }

    pub fn apply(&self, s: f64, p: LVec4) -> LVec4 {
        mat_vec(&self.matrix(s), p)
    }

    /// Point of the fixed axis `L × {0}` with parameter `theta`.
    pub fn axis_point(&self, theta: f64) -> LVec4 {
        match self.kind {
            RotationKind::Spherical => LVec4::new_unchecked(theta.cos(), theta.sin(), 0.0, 0.0),
            RotationKind::Hyperbolic => LVec4::new_unchecked(theta.cosh(), 0.0, theta.sinh(), 0.0),
            RotationKind::Parabolic => LVec4::new_unchecked(1.0, theta, theta, 0.0),
        }
    }

    // Sign making the L⁴ cross product of (r, r_t, r_s) agree with the lifted
    // principal normal (n, 0) on the positive half-space: r_s at s = 0 is
    // the fourth axis scaled by sinh(u), cosh(u) sin(t) or sinh(u) - cosh(u) sin(t).
    fn normal_orientation(&self) -> f64 {
        match self.kind {
            RotationKind::Spherical | RotationKind::Hyperbolic => 1.0,
            RotationKind::Parabolic => -1.0,
        }
    }
}

pub fn mat_vec(m: &Mat4, p: LVec4) -> LVec4 {
    let p = p.to_array();
    let row = |i: usize| (0..4).map(|j| m[i][j] * p[j]).sum::<f64>();
    LVec4::new_unchecked(row(0), row(1), row(2), row(3))
}

pub fn mat_mul(a: &Mat4, b: &Mat4) -> Mat4 {
    let mut c = [[0.0; 4]; 4];
    for (i, row) in c.iter_mut().enumerate() {
        for (j, cell) in row.iter_mut().enumerate() {
            *cell = (0..4).map(|k| a[i][k] * b[k][j]).sum();
        }
    }
    c
}

/// Point, fundamental forms, normal and mean curvature at `(t, s)`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SurfaceSample {
    pub t: f64,
    pub s: f64,
    pub point: LVec4,
    pub e: f64,
    pub f: f64,
    pub g: f64,
    pub h11: f64,
    pub h12: f64,
    pub h22: f64,
    pub normal: LVec4,
    /// Causal sign of the generating curve.
    pub epsilon: f64,
    /// `sign(EG - F^2)`: `+1` spacelike surface, `-1` timelike.
    pub delta: f64,
    pub mean_curvature: f64,
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub enum FormsMode {
    /// Closed-form coefficients for curves with `v = t`.
    Analytic,
    /// Fourth-order central differences of `surface_point` with step `h`.
    FiniteDifference { h: f64 },
}

/// `R_s (Psi(u(t), v(t)), 0)`.
pub fn surface_point(curve: &CurveUV, t: f64, s: f64, case: CaseKind) -> LVec4 {
    RotationGroup::for_case(case).apply(s, curve.point(t).lift())
}

/// Unit normal `R_s (n, 0)` from the principal normal of the generating curve.
pub fn analytic_normal(curve: &CurveUV, t: f64, s: f64, case: CaseKind) -> Result<LVec4> {
    let frame = frame_from_jet(&curve.jet(t), t)?;
    Ok(RotationGroup::for_case(case).apply(s, frame.normal.lift()))
}

/// Mean curvature `(delta / 2)(E h22 - 2 F h12 + G h11) / (EG - F^2)`.
pub fn mean_curvature(sample: &SurfaceSample) -> Result<f64> {
    let det = sample.e * sample.g - sample.f * sample.f;
    if !(det.abs() > CAUSAL_TOL) {
        return Err(GeometryError::DegenerateSurface {
            t: sample.t,
            s: sample.s,
            det,
        });
    }
    let trace = sample.e * sample.h22 - 2.0 * sample.f * sample.h12 + sample.g * sample.h11;
    Ok(0.5 * det.signum() * trace / det)
}

fn graph_jet(curve: &CurveUV, t: f64) -> Result<ChartJet> {
    if !curve.is_graph() {
        return Err(GeometryError::InvalidCurve(
            "closed-form surface coefficients need a curve parametrized with v = t".into(),
        ));
    }
    Ok(curve.jet(t))
}

// Metric coefficient G = <r_s, r_s> on the generating curve, per group.
fn g_coefficient(kind: RotationKind, u: f64, t: f64) -> f64 {
    match kind {
        RotationKind::Spherical => u.sinh().powi(2),
        RotationKind::Hyperbolic => (t.sin() * u.cosh()).powi(2),
        RotationKind::Parabolic => (u.sinh() - u.cosh() * t.sin()).powi(2),
    }
}

fn analytic_sample(curve: &CurveUV, t: f64, s: f64, case: CaseKind) -> Result<SurfaceSample> {
    let jet = graph_jet(curve, t)?;
    let frame = frame_from_jet(&jet, t)?;
    let group = RotationGroup::for_case(case);
    let (u, du, ddu) = (jet.u, jet.du, jet.ddu);
    let (sh, ch) = (u.sinh(), u.cosh());
    let (st, ct) = t.sin_cos();
    let speed = frame.speed;

    let e = ch * ch - du * du;
    let g = g_coefficient(group.kind, u, t);
    let h11 = (-ch * ddu + 2.0 * du * du * sh - sh * ch * ch) / speed;
    let h22 = match group.kind {
        RotationKind::Spherical => -sh * ch * ch / speed,
        RotationKind::Hyperbolic => -ch * st * (du * ct + sh * ch * st) / speed,
        RotationKind::Parabolic => (ch * st - sh) * (ch * ch - sh * ch * st - du * ct) / speed,
    };
    let mut sample = SurfaceSample {
        t,
        s,
        point: surface_point(curve, t, s, case),
        e,
        f: 0.0,
        g,
        h11,
        h12: 0.0,
        h22,
        normal: group.apply(s, frame.normal.lift()),
        epsilon: frame.epsilon,
        delta: (e * g).signum(),
        mean_curvature: 0.0,
    };
    sample.mean_curvature = mean_curvature(&sample)?;
    Ok(sample)
}

// Fourth-order central first and second differences of a vector function.
fn stencil<F: Fn(f64) -> LVec4>(f: F, x: f64, h: f64) -> (LVec4, LVec4) {
    let (m2, m1, p1, p2) = (f(x - 2.0 * h), f(x - h), f(x + h), f(x + 2.0 * h));
    let d1 = (1.0 / (12.0 * h)) * (m2 - 8.0 * m1 + 8.0 * p1 - p2);
    let d2 = (1.0 / (12.0 * h * h)) * (-1.0 * m2 + 16.0 * m1 - 30.0 * f(x) + 16.0 * p1 - p2);
    (d1, d2)
}

fn fd_sample(curve: &CurveUV, t: f64, s: f64, case: CaseKind, h: f64) -> Result<SurfaceSample> {
    if !(h > 0.0) {
        return Err(GeometryError::InvalidCurve(format!("finite-difference step {h} must be positive")));
    }
    let group = RotationGroup::for_case(case);
    let r = |t: f64, s: f64| surface_point(curve, t, s, case);
    let point = r(t, s);
    let (r_t, r_tt) = stencil(|x| r(x, s), t, h);
    let (r_s, r_ss) = stencil(|y| r(t, y), s, h);
    let (r_ts, _) = stencil(|y| stencil(|x| r(x, y), t, h).0, s, h);

    let e = inner4(r_t, r_t);
    let f = inner4(r_t, r_s);
    let g = inner4(r_s, r_s);
    let det = e * g - f * f;
    if !(det.abs() > CAUSAL_TOL) {
        return Err(GeometryError::DegenerateSurface { t, s, det });
    }

    let w = cross4(point, r_t, r_s);
    let w2 = inner4(w, w);
    if !(w2.abs() > 0.0) {
        return Err(GeometryError::DegenerateSurface { t, s, det });
    }
    let normal = (group.normal_orientation() / w2.abs().sqrt()) * w;
    let mut sample = SurfaceSample {
        t,
        s,
        point,
        e,
        f,
        g,
        h11: inner4(normal, r_tt),
        h12: inner4(normal, r_ts),
        h22: inner4(normal, r_ss),
        normal,
        // <N, N> = -eps for these surfaces.
        epsilon: -w2.signum(),
        delta: det.signum(),
        mean_curvature: 0.0,
    };
    sample.mean_curvature = mean_curvature(&sample)?;
    Ok(sample)
}

/// First and second fundamental forms of the rotational surface of `curve`.
pub fn fundamental_forms(
    curve: &CurveUV,
    t: f64,
    s: f64,
    case: CaseKind,
    mode: FormsMode,
) -> Result<SurfaceSample> {
    match mode {
        FormsMode::Analytic => analytic_sample(curve, t, s, case),
        FormsMode::FiniteDifference { h } => fd_sample(curve, t, s, case, h),
    }
}

/// Mean curvature written through the geodesic curvature of the generating
/// curve (`v = t`).
///
/// The intrinsic case evaluates the expression valid on intrinsic catenaries
/// with `lambda = 0`, where `kappa` has been eliminated.
pub fn mean_curvature_closed_form(curve: &CurveUV, t: f64, case: CaseKind) -> Result<f64> {
    let jet = graph_jet(curve, t)?;
    let frame = frame_from_jet(&jet, t)?;
    let kind = RotationGroup::for_case(case).kind;
    let (u, du) = (jet.u, jet.du);
    let (sh, ch) = (u.sinh(), u.cosh());
    let (st, ct) = t.sin_cos();
    let (eps, speed, kappa) = (frame.epsilon, frame.speed, frame.kappa);

    let e = eps * speed * speed;
    let g = g_coefficient(kind, u, t);
    let eg = e * g;
    if !(eg.abs() > CAUSAL_TOL) {
        return Err(GeometryError::DegenerateSurface { t, s: 0.0, det: eg });
    }
    let delta = eg.signum();
    let h = match case {
        CaseKind::Spherical => {
            -delta * eps * sh * speed / (2.0 * eg) * (ch * ch + kappa * sh * speed)
        }
        CaseKind::Hyperbolic => {
            -delta * eps * speed * ch * st / (2.0 * eg)
                * (du * ct + sh * ch * st + ch * st * speed * kappa)
        }
        CaseKind::Parabolic => {
            let d = ch * st - sh;
            -delta * eps * speed * d / (2.0 * eg)
                * (kappa * d * speed + ch * (sh * st - ch) + du * ct)
        }
        CaseKind::Intrinsic => {
            if u.abs() <= f64::EPSILON || sh.abs() <= f64::EPSILON {
                return Err(GeometryError::SingularDenominator { value: u.abs() });
            }
            -delta * ch / (2.0 * speed * sh) * (ch - jet.dv * sh / u)
        }
    };
    Ok(h)
}

/// Summary of `|H|` over a `(t, s)` grid for both evaluation routes.
#[derive(Debug, Clone, Copy, PartialEq, Default)]
pub struct MinimalityStats {
    pub points: usize,
    pub max_abs_h: f64,
    pub min_abs_h: f64,
    pub max_abs_h_closed: f64,
    pub min_abs_h_closed: f64,
    /// Largest `|H_forms - H_closed|`.
    pub max_route_gap: f64,
    /// Largest spread of `H` along a single orbit.
    pub max_orbit_spread: f64,
}

/// Evaluates `H` through `fundamental_forms` (in `mode`) and through
/// `mean_curvature_closed_form` at every `(t, s)`.
pub fn minimality_sweep(
    curve: &CurveUV,
    ts: &[f64],
    s_grid: &[f64],
    case: CaseKind,
    mode: FormsMode,
) -> Result<MinimalityStats> {
    let mut st = MinimalityStats {
        min_abs_h: f64::INFINITY,
        min_abs_h_closed: f64::INFINITY,
        ..Default::default()
    };
    for &t in ts {
        let closed = mean_curvature_closed_form(curve, t, case)?;
        st.max_abs_h_closed = st.max_abs_h_closed.max(closed.abs());
        st.min_abs_h_closed = st.min_abs_h_closed.min(closed.abs());
        let (mut lo, mut hi) = (f64::INFINITY, f64::NEG_INFINITY);
        for &s in s_grid {
            let h = fundamental_forms(curve, t, s, case, mode)?.mean_curvature;
            st.points += 1;
            st.max_abs_h = st.max_abs_h.max(h.abs());
            st.min_abs_h = st.min_abs_h.min(h.abs());
            st.max_route_gap = st.max_route_gap.max((h - closed).abs());
            lo = lo.min(h);
            hi = hi.max(h);
        }
        if hi >= lo {
            st.max_orbit_spread = st.max_orbit_spread.max(hi - lo);
        }
    }
    Ok(st)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn close(a: f64, b: f64, tol: f64) -> bool {
        (a - b).abs() <= tol * (1.0 + a.abs().max(b.abs()))
    }

    #[test]
    fn spherical_rotation_of_parallel() {
        let c = CurveUV::parallel(1.0, (-1.0, 1.0));
        let (sh, ch) = (1.0_f64.sinh(), 1.0_f64.cosh());
        let p = surface_point(&c, 0.0, 1.0, CaseKind::Spherical);
        assert!((p.x1 - ch).abs() < 1e-15 && p.x2.abs() < 1e-15);
        assert!((p.x3 - ch * sh).abs() < 1e-14 && (p.x4 - sh * sh).abs() < 1e-14);

        let a = fundamental_forms(&c, 0.0, 0.0, CaseKind::Spherical, FormsMode::Analytic).unwrap();
        assert!(close(a.e, ch * ch, 1e-15) && close(a.g, sh * sh, 1e-15) && a.f == 0.0);
        let expected = LVec4::new_unchecked(sh * ch / ch, 0.0, ch * ch / ch, 0.0);
        assert!((a.normal - expected).max_abs() < 1e-14);
        assert!((inner4(a.normal, a.normal) + 1.0).abs() < 1e-14);
        assert!(close(a.mean_curvature, -(2.0_f64).cosh() / (2.0_f64).sinh(), 1e-14));
    }

    #[test]
    fn fd_and_analytic_agree_on_parallel() {
        let c = CurveUV::parallel(1.0, (-1.0, 1.0));
        for case in [CaseKind::Spherical, CaseKind::Hyperbolic, CaseKind::Parabolic] {
            let t = 0.4 + 0.3 * (case as usize as f64);
            let t = if case == CaseKind::Parabolic { 1.3 } else { t };
            let a = fundamental_forms(&c, t, 0.3, case, FormsMode::Analytic).unwrap();
            let f = fundamental_forms(&c, t, 0.3, case, FormsMode::FiniteDifference { h: FD_STEP }).unwrap();
            for (x, y) in [(a.e, f.e), (a.g, f.g), (a.h11, f.h11), (a.h22, f.h22)] {
                assert!(close(x, y, 1e-8), "{case}: {x} vs {y}");
            }
            assert!((a.normal - f.normal).max_abs() < 1e-8, "{case}");
            assert!(f.f.abs() < 1e-8 && f.h12.abs() < 1e-8);
        }
    }

    #[test]
    fn group_axioms() {
        for kind in [RotationKind::Spherical, RotationKind::Hyperbolic, RotationKind::Parabolic] {
            let g = RotationGroup { kind };
            let id = g.matrix(0.0);
            for (i, row) in id.iter().enumerate() {
                for (j, &x) in row.iter().enumerate() {
                    assert_eq!(x, if i == j { 1.0 } else { 0.0 });
                }
            }
            let ab = mat_mul(&g.matrix(0.3), &g.matrix(-1.1));
            let c = g.matrix(-0.8);
            for i in 0..4 {
                for j in 0..4 {
                    assert!((ab[i][j] - c[i][j]).abs() < 1e-12);
                }
            }
            let p = g.axis_point(0.7);
            assert!((g.apply(2.3, p) - p).max_abs() < 1e-12);
        }
    }

    #[test]
    fn intrinsic_closed_form_needs_nonzero_u() {
        let c = CurveUV::parallel(0.0, (-1.0, 1.0));
        assert!(mean_curvature_closed_form(&c, 0.2, CaseKind::Intrinsic).is_err());
    }

    #[test]
    fn analytic_mode_rejects_non_graph_curves() {
        let m = CurveUV::meridian(0.2, (0.1, 1.0));
        assert!(fundamental_forms(&m, 0.5, 0.0, CaseKind::Spherical, FormsMode::Analytic).is_err());
        // The finite-difference route accepts any parametrization.
        let f = fundamental_forms(&m, 0.5, 0.0, CaseKind::Spherical, FormsMode::FiniteDifference { h: FD_STEP })
            .unwrap();
        assert_eq!(f.epsilon, -1.0);
    }
}
