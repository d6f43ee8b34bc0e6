#![allow(dead_code)]

use std::sync::Arc;

use desitter::spline::Jet1;
use desitter::CurveUV;
use rand::Rng;
use rand_chacha::ChaCha8Rng;

/// `u = a + b sin(w t + p)` with value and two derivatives.
pub fn sine(a: f64, b: f64, w: f64, p: f64) -> Arc<dyn Fn(f64) -> Jet1 + Send + Sync> {
    Arc::new(move |t: f64| Jet1 {
        value: a + b * (w * t + p).sin(),
        d1: b * w * (w * t + p).cos(),
        d2: -b * w * w * (w * t + p).sin(),
    })
}

/// `v = c + d t + e sin(t)`.
pub fn drift(c: f64, d: f64, e: f64) -> Arc<dyn Fn(f64) -> Jet1 + Send + Sync> {
    Arc::new(move |t: f64| Jet1 {
        value: c + d * t + e * t.sin(),
        d1: d + e * t.cos(),
        d2: -e * t.sin(),
    })
}

/// A smooth random curve in the chart, spacelike or timelike depending on
/// the draw.
pub fn random_curve(rng: &mut ChaCha8Rng) -> CurveUV {
    let u = sine(
        rng.gen_range(0.2..1.2),
        rng.gen_range(-0.4..0.4),
        rng.gen_range(0.5..2.0),
        rng.gen_range(0.0..6.0),
    );
    let v = drift(
        rng.gen_range(0.3..1.0),
        rng.gen_range(-1.5..1.5),
        rng.gen_range(-0.3..0.3),
    );
    CurveUV::analytic((-1.0, 1.0), u, v)
}

/// The five analytic test curves of the curvature checks.
pub fn test_curves() -> Vec<(&'static str, CurveUV)> {
    vec![
        ("equator", CurveUV::equator((-3.0, 3.0))),
        ("meridian", CurveUV::meridian(0.4, (-1.0, 1.0))),
        ("parallel", CurveUV::parallel(1.0, (-3.0, 3.0))),
        ("sine graph", CurveUV::graph((-3.0, 3.0), sine(0.0, 0.3, 1.0, 0.0))),
        (
            "linear graph",
            CurveUV::graph(
                (-3.0, 3.0),
                Arc::new(|t: f64| Jet1 {
                    value: 0.2 * t,
                    d1: 0.2,
                    d2: 0.0,
                }),
            ),
        ),
    ]
}

pub fn rel_close(a: f64, b: f64, tol: f64) -> bool {
    (a - b).abs() <= tol * (1.0 + a.abs().max(b.abs()))
}
