//! Discretized weighted-length energies `∫ (d + lambda) |g'| dt` and a
//! finite-difference first-variation certificate for criticality.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::curves::{distance, signed_distance, CaseKind, CurveUV};
use crate::error::{GeometryError, Result};
use crate::lorentz::CAUSAL_TOL;

pub const MIN_INTERVALS: usize = 8;

/// Polygon in chart coordinates on a uniform parameter grid over `[a, b]`.
#[derive(Debug, Clone, PartialEq)]
pub struct DiscreteCurve {
    pub t_range: (f64, f64),
    pub nodes: Vec<(f64, f64)>,
}

impl DiscreteCurve {
    pub fn new(t_range: (f64, f64), nodes: Vec<(f64, f64)>) -> Result<Self> {
        let c = Self { t_range, nodes };
        c.validate()?;
        Ok(c)
    }

    /// Samples `curve` at `n + 1` uniform parameter values on `[a, b]`.
    pub fn from_curve(curve: &CurveUV, a: f64, b: f64, n: usize) -> Result<Self> {
        let nodes = (0..=n)
            .map(|i| curve.point_uv(a + (b - a) * i as f64 / n as f64))
            .collect();
        Self::new((a, b), nodes)
    }

    /// Number of chords.
    pub fn intervals(&self) -> usize {
        self.nodes.len().saturating_sub(1)
    }

    pub fn dt(&self) -> f64 {
        (self.t_range.1 - self.t_range.0) / self.intervals() as f64
    }

    // Signed chord quantity dv^2 cosh(u_mid)^2 - du^2, one per chord.
    fn chord_q(&self) -> impl Iterator<Item = f64> + '_ {
        self.nodes.windows(2).map(|w| {
            let (du, dv) = (w[1].0 - w[0].0, w[1].1 - w[0].1);
            let ch = (0.5 * (w[0].0 + w[1].0)).cosh();
            dv * dv * ch * ch - du * du
        })
    }

    pub fn validate(&self) -> Result<()> {
        if self.intervals() < MIN_INTERVALS {
            return Err(GeometryError::InvalidCurve(format!(
                "need at least {MIN_INTERVALS} intervals, got {}",
                self.intervals()
            )));
        }
        let (a, b) = self.t_range;
        if !(a.is_finite() && b.is_finite() && b > a) {
            return Err(GeometryError::InvalidCurve(format!("bad parameter range [{a}, {b}]")));
        }
        if self.nodes.iter().any(|(u, v)| !(u.is_finite() && v.is_finite())) {
            return Err(GeometryError::NonFinite("discrete curve nodes"));
        }
        let dt = self.dt();
        let floor = CAUSAL_TOL * dt * dt;
        let mut sign = 0.0;
        for (i, q) in self.chord_q().enumerate() {
            let t = a + (i as f64 + 0.5) * dt;
            if q.abs() <= floor {
                return Err(GeometryError::DegenerateCurve { t, speed2: q / (dt * dt) });
            }
            if sign == 0.0 {
                sign = q.signum();
            } else if q.signum() != sign {
                return Err(GeometryError::InvalidCurve(format!(
                    "causal character changes at chord {i}"
                )));
            }
        }
        Ok(())
    }

    /// Copy displaced by `h * pert`.
    pub fn perturbed(&self, pert: &Perturbation, h: f64) -> Result<Self> {
        if pert.deltas.len() != self.nodes.len() {
            return Err(GeometryError::InvalidCurve(format!(
                "perturbation has {} nodes, curve has {}",
                pert.deltas.len(),
                self.nodes.len()
            )));
        }
        let nodes = self
            .nodes
            .iter()
            .zip(&pert.deltas)
            .map(|(&(u, v), &(du, dv))| (u + h * du, v + h * dv))
            .collect();
        Ok(Self {
            t_range: self.t_range,
            nodes,
        })
    }
}

/// Node displacements with both endpoints pinned.
#[derive(Debug, Clone, PartialEq)]
pub struct Perturbation {
    pub deltas: Vec<(f64, f64)>,
}

impl Perturbation {
    pub fn new(deltas: Vec<(f64, f64)>) -> Result<Self> {
        let pinned = |d: Option<&(f64, f64)>| matches!(d, Some(&(0.0, 0.0)));
        if !pinned(deltas.first()) || !pinned(deltas.last()) {
            return Err(GeometryError::InvalidCurve(
                "perturbation must vanish at both endpoints".into(),
            ));
        }
        Ok(Self { deltas })
    }

    pub fn zero(nodes: usize) -> Self {
        Self {
            deltas: vec![(0.0, 0.0); nodes],
        }
    }

    /// Piecewise-linear hat centred at node `center` with half-width `half`
    /// (in nodes) and peak displacement `(amp_u, amp_v)`.
    pub fn hat(nodes: usize, center: usize, half: usize, amp_u: f64, amp_v: f64) -> Self {
        let half = half.max(1) as f64;
        let deltas = (0..nodes)
            .map(|i| {
                if i == 0 || i + 1 == nodes {
                    return (0.0, 0.0);
                }
                let w = (1.0 - (i as f64 - center as f64).abs() / half).max(0.0);
                (w * amp_u, w * amp_v)
            })
            .collect();
        Self { deltas }
    }

    /// Largest absolute displacement component.
    pub fn sup_norm(&self) -> f64 {
        self.deltas
            .iter()
            .fold(0.0_f64, |m, &(a, b)| m.max(a.abs()).max(b.abs()))
    }
}

/// Deterministic family of `count` random hats with unit peak in `u` (random
/// sign) and a random peak in `[-1, 1]` in `v`.
pub fn random_basis(nodes: usize, count: usize, seed: u64) -> Vec<Perturbation> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let interior = nodes.saturating_sub(2).max(1);
    (0..count)
        .map(|_| {
            let center = 1 + rng.gen_range(0..interior);
            let half = rng.gen_range(2..=(nodes / 4).max(3));
            let amp_u = if rng.gen_bool(0.5) { 1.0 } else { -1.0 };
            let amp_v = rng.gen_range(-1.0..=1.0);
            Perturbation::hat(nodes, center, half, amp_u, amp_v)
        })
        .collect()
}

/// Midpoint-rule energy `sum (d(mid) + lambda) |chord|`.
pub fn energy(curve: &DiscreteCurve, case: CaseKind, lambda: f64) -> Result<f64> {
    curve.validate()?;
    for &p in &curve.nodes {
        distance(p, case)?;
    }
    Ok(curve
        .nodes
        .windows(2)
        .zip(curve.chord_q())
        .map(|(w, q)| {
            let (um, vm) = (0.5 * (w[0].0 + w[1].0), 0.5 * (w[0].1 + w[1].1));
            (signed_distance(case, um, vm) + lambda) * q.abs().sqrt()
        })
        .sum())
}

/// Polygon length `sum |chord|`.
pub fn length(curve: &DiscreteCurve) -> Result<f64> {
    curve.validate()?;
    Ok(curve.chord_q().map(|q| q.abs().sqrt()).sum())
}

/// Central difference of the energy along `pert`.
pub fn first_variation(
    curve: &DiscreteCurve,
    case: CaseKind,
    lambda: f64,
    pert: &Perturbation,
    h: f64,
) -> Result<f64> {
    if pert.sup_norm() == 0.0 {
        return Ok(0.0);
    }
    let plus = energy(&curve.perturbed(pert, h)?, case, lambda)?;
    let minus = energy(&curve.perturbed(pert, -h)?, case, lambda)?;
    Ok((plus - minus) / (2.0 * h))
}

/// Largest `|first_variation| / sup_norm(pert)` over `basis`; `0` for an
/// empty basis.
pub fn criticality_score(
    curve: &DiscreteCurve,
    case: CaseKind,
    lambda: f64,
    basis: &[Perturbation],
    h: f64,
) -> Result<f64> {
    basis.iter().try_fold(0.0_f64, |m, p| {
        let norm = p.sup_norm();
        if norm == 0.0 {
            return Ok(m);
        }
        Ok(m.max(first_variation(curve, case, lambda, p, h)?.abs() / norm))
    })
}

/// Criticality score for each multiplier of `lambdas`.
pub fn critical_lambda_scan(
    curve: &DiscreteCurve,
    case: CaseKind,
    lambdas: &[f64],
    basis: &[Perturbation],
    h: f64,
) -> Result<Vec<(f64, f64)>> {
    if lambdas.is_empty() {
        return Err(GeometryError::InvalidProblem("empty lambda grid".into()));
    }
    lambdas
        .iter()
        .map(|&l| Ok((l, criticality_score(curve, case, l, basis, h)?)))
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn parallel(u0: f64, n: usize) -> DiscreteCurve {
        DiscreteCurve::new((0.0, 1.0), (0..=n).map(|i| (u0, i as f64 / n as f64)).collect()).unwrap()
    }

    #[test]
    fn parallel_energy_is_exact() {
        let e = energy(&parallel(1.0, 50), CaseKind::Spherical, 0.0).unwrap();
        assert!((e - 1.0_f64.sinh() * 1.0_f64.cosh()).abs() < 1e-13);
        assert!((e - 1.8134).abs() < 1e-4);
    }

    #[test]
    fn lengths() {
        let n = 64;
        let eq = DiscreteCurve::new(
            (0.0, 1.0),
            (0..=n).map(|i| (0.0, std::f64::consts::PI * i as f64 / n as f64)).collect(),
        )
        .unwrap();
        assert!((length(&eq).unwrap() - std::f64::consts::PI).abs() < 1e-12);
        let me = DiscreteCurve::new((0.0, 1.0), (0..=n).map(|i| (i as f64 / n as f64, 0.0)).collect()).unwrap();
        assert!((length(&me).unwrap() - 1.0).abs() < 1e-12);
        assert!((length(&parallel(1.0, n)).unwrap() - 1.0_f64.cosh()).abs() < 1e-12);
    }

    #[test]
    fn intrinsic_meridian_energy() {
        let n = 40;
        let c = DiscreteCurve::new((0.5, 1.0), (0..=n).map(|i| (0.5 + 0.5 * i as f64 / n as f64, 0.0)).collect())
            .unwrap();
        assert!((energy(&c, CaseKind::Intrinsic, 0.0).unwrap() - 0.375).abs() < 1e-12);
    }

    #[test]
    fn rejects_short_or_mixed_curves() {
        assert!(DiscreteCurve::new((0.0, 1.0), vec![(1.0, 0.0); 5]).is_err());
        // Spacelike chords followed by timelike chords.
        let mut nodes: Vec<(f64, f64)> = (0..=10).map(|i| (1.0, 0.1 * i as f64)).collect();
        for (i, n) in nodes.iter_mut().enumerate().skip(6) {
            n.0 = 1.0 + 0.5 * (i - 5) as f64;
        }
        assert!(DiscreteCurve::new((0.0, 1.0), nodes).is_err());
    }

    #[test]
    fn energy_needs_half_space() {
        let c = parallel(-0.2, 10);
        assert!(matches!(
            energy(&c, CaseKind::Spherical, 0.0),
            Err(GeometryError::OutOfHalfSpace { .. })
        ));
    }

    #[test]
    fn zero_perturbation_and_empty_basis() {
        let c = parallel(1.0, 20);
        let z = Perturbation::zero(21);
        assert_eq!(first_variation(&c, CaseKind::Spherical, 0.0, &z, 1e-5).unwrap(), 0.0);
        let scan = critical_lambda_scan(&c, CaseKind::Spherical, &[0.0, 1.0], &[], 1e-5).unwrap();
        assert_eq!(scan, vec![(0.0, 0.0), (1.0, 0.0)]);
        assert!(critical_lambda_scan(&c, CaseKind::Spherical, &[], &[], 1e-5).is_err());
    }

    #[test]
    fn perturbation_endpoints_pinned() {
        assert!(Perturbation::new(vec![(0.1, 0.0), (0.0, 0.0)]).is_err());
        for p in random_basis(30, 20, 7) {
            assert_eq!(p.deltas[0], (0.0, 0.0));
            assert_eq!(p.deltas[29], (0.0, 0.0));
            assert_eq!(p.sup_norm(), 1.0);
        }
        assert_eq!(random_basis(30, 5, 11), random_basis(30, 5, 11));
    }

    #[test]
    fn parallel_is_not_critical() {
        let n = 200;
        let c = parallel(1.0, n);
        let bump = Perturbation::hat(n + 1, n / 2, n / 4, 1.0, 0.0);
        let fv = first_variation(&c, CaseKind::Spherical, 0.0, &bump, 1e-5).unwrap();
        assert!(fv.abs() > 1e-2, "{fv}");
    }
}
