//! Piecewise-polynomial interpolants returning value, first and second
//! derivative. Both are C² across knots.

use crate::error::{GeometryError, Result};

/// Value and first two derivatives at a point.
#[derive(Debug, Clone, Copy, PartialEq, Default)]
pub struct Jet1 {
    pub value: f64,
    pub d1: f64,
    pub d2: f64,
}

fn check_knots(xs: &[f64], min_len: usize) -> Result<()> {
    if xs.len() < min_len {
        return Err(GeometryError::InvalidCurve(format!(
            "need at least {min_len} knots, got {}",
            xs.len()
        )));
    }
    if xs.iter().any(|x| !x.is_finite()) {
        return Err(GeometryError::NonFinite("interpolation knots"));
    }
    if xs.windows(2).any(|w| w[1] <= w[0]) {
        return Err(GeometryError::InvalidCurve(
            "knots must be strictly increasing".into(),
        ));
    }
    Ok(())
}

// Index of the interval containing x, clamped so that extrapolation uses the
// outermost pieces.
fn interval(xs: &[f64], x: f64) -> usize {
    let i = xs.partition_point(|&k| k <= x);
    i.saturating_sub(1).min(xs.len() - 2)
}

/// Quintic Hermite interpolant through values, slopes and curvatures.
#[derive(Debug, Clone)]
pub struct QuinticHermite {
    xs: Vec<f64>,
    // Per interval: coefficients of p(s), s = (x - x_i) / h_i.
    coeffs: Vec<[f64; 6]>,
}

impl QuinticHermite {
    pub fn new(xs: Vec<f64>, ys: &[f64], dys: &[f64], ddys: &[f64]) -> Result<Self> {
        check_knots(&xs, 2)?;
        let n = xs.len();
        if ys.len() != n || dys.len() != n || ddys.len() != n {
            return Err(GeometryError::InvalidCurve(
                "knot/value length mismatch".into(),
            ));
        }
        let coeffs = (0..n - 1)
            .map(|i| {
                let h = xs[i + 1] - xs[i];
                let (c0, c1, c2) = (ys[i], h * dys[i], 0.5 * h * h * ddys[i]);
                let r0 = ys[i + 1] - c0 - c1 - c2;
                let r1 = h * dys[i + 1] - c1 - 2.0 * c2;
                let r2 = h * h * ddys[i + 1] - 2.0 * c2;
                [
                    c0,
                    c1,
                    c2,
                    10.0 * r0 - 4.0 * r1 + 0.5 * r2,
                    -15.0 * r0 + 7.0 * r1 - r2,
                    6.0 * r0 - 3.0 * r1 + 0.5 * r2,
                ]
            })
            .collect();
        Ok(Self { xs, coeffs })
    }

    pub fn domain(&self) -> (f64, f64) {
        (self.xs[0], self.xs[self.xs.len() - 1])
    }

    pub fn knots(&self) -> &[f64] {
        &self.xs
    }

    pub fn eval(&self, x: f64) -> Jet1 {
        let i = interval(&self.xs, x);
        let h = self.xs[i + 1] - self.xs[i];
        let s = (x - self.xs[i]) / h;
        let c = &self.coeffs[i];
        let value = c[0] + s * (c[1] + s * (c[2] + s * (c[3] + s * (c[4] + s * c[5]))));
        let ds = c[1] + s * (2.0 * c[2] + s * (3.0 * c[3] + s * (4.0 * c[4] + s * 5.0 * c[5])));
        let dds = 2.0 * c[2] + s * (6.0 * c[3] + s * (12.0 * c[4] + s * 20.0 * c[5]));
        Jet1 {
            value,
            d1: ds / h,
            d2: dds / (h * h),
        }
    }
}

/// Natural cubic spline (zero second derivative at both ends).
#[derive(Debug, Clone)]
pub struct CubicSpline {
    xs: Vec<f64>,
    ys: Vec<f64>,
    // Second derivatives at the knots.
    m: Vec<f64>,
}

impl CubicSpline {
    pub fn natural(xs: Vec<f64>, ys: Vec<f64>) -> Result<Self> {
        check_knots(&xs, 3)?;
        let n = xs.len();
        if ys.len() != n {
            return Err(GeometryError::InvalidCurve(
                "knot/value length mismatch".into(),
            ));
        }
        if ys.iter().any(|y| !y.is_finite()) {
            return Err(GeometryError::NonFinite("spline values"));
        }
        // Thomas algorithm on the interior second derivatives.
        let h: Vec<f64> = xs.windows(2).map(|w| w[1] - w[0]).collect();
        let mut diag = vec![0.0; n];
        let mut rhs = vec![0.0; n];
        let mut upper = vec![0.0; n];
        for i in 1..n - 1 {
            let lower = h[i - 1];
            diag[i] = 2.0 * (h[i - 1] + h[i]);
            upper[i] = h[i];
            rhs[i] = 6.0 * ((ys[i + 1] - ys[i]) / h[i] - (ys[i] - ys[i - 1]) / h[i - 1]);
            if i > 1 {
                let w = lower / diag[i - 1];
                diag[i] -= w * upper[i - 1];
                rhs[i] -= w * rhs[i - 1];
            }
        }
        let mut m = vec![0.0; n];
        for i in (1..n - 1).rev() {
            m[i] = (rhs[i] - upper[i] * m[i + 1]) / diag[i];
        }
        Ok(Self { xs, ys, m })
    }

    pub fn domain(&self) -> (f64, f64) {
        (self.xs[0], self.xs[self.xs.len() - 1])
    }

    pub fn eval(&self, x: f64) -> Jet1 {
        let i = interval(&self.xs, x);
        let h = self.xs[i + 1] - self.xs[i];
        let a = (self.xs[i + 1] - x) / h;
        let b = (x - self.xs[i]) / h;
        let (m0, m1) = (self.m[i], self.m[i + 1]);
        let (y0, y1) = (self.ys[i], self.ys[i + 1]);
        let value = a * y0 + b * y1 + ((a * a * a - a) * m0 + (b * b * b - b) * m1) * h * h / 6.0;
        let d1 = (y1 - y0) / h + ((1.0 - 3.0 * a * a) * m0 + (3.0 * b * b - 1.0) * m1) * h / 6.0;
        let d2 = a * m0 + b * m1;
        Jet1 { value, d1, d2 }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn quintic_hermite_reproduces_quintics() {
        let p = |x: f64| 1.0 - 2.0 * x + 0.5 * x.powi(3) + 0.1 * x.powi(5);
        let dp = |x: f64| -2.0 + 1.5 * x * x + 0.5 * x.powi(4);
        let ddp = |x: f64| 3.0 * x + 2.0 * x.powi(3);
        let xs = vec![-1.0, -0.2, 0.7, 1.5];
        let ys: Vec<f64> = xs.iter().map(|&x| p(x)).collect();
        let ds: Vec<f64> = xs.iter().map(|&x| dp(x)).collect();
        let dds: Vec<f64> = xs.iter().map(|&x| ddp(x)).collect();
        let q = QuinticHermite::new(xs, &ys, &ds, &dds).unwrap();
        for k in 0..=50 {
            let x = -1.0 + 2.5 * k as f64 / 50.0;
            let j = q.eval(x);
            assert!((j.value - p(x)).abs() < 1e-12);
            assert!((j.d1 - dp(x)).abs() < 1e-11);
            assert!((j.d2 - ddp(x)).abs() < 1e-10);
        }
    }

    #[test]
    fn natural_spline_is_exact_on_lines_and_converges_on_sine() {
        let xs: Vec<f64> = (0..11).map(|i| i as f64 * 0.1).collect();
        let ys: Vec<f64> = xs.iter().map(|x| 3.0 * x - 1.0).collect();
        let s = CubicSpline::natural(xs, ys).unwrap();
        let j = s.eval(0.437);
        assert!((j.value - (3.0 * 0.437 - 1.0)).abs() < 1e-13);
        assert!((j.d1 - 3.0).abs() < 1e-12);
        assert!(j.d2.abs() < 1e-10);

        let xs: Vec<f64> = (0..=400).map(|i| i as f64 * 0.01).collect();
        let ys: Vec<f64> = xs.iter().map(|x| x.sin()).collect();
        let s = CubicSpline::natural(xs, ys).unwrap();
        let j = s.eval(2.003);
        assert!((j.value - 2.003_f64.sin()).abs() < 1e-8);
        assert!((j.d2 + 2.003_f64.sin()).abs() < 1e-4);
    }

    #[test]
    fn rejects_bad_knots() {
        assert!(CubicSpline::natural(vec![0.0, 1.0], vec![0.0, 1.0]).is_err());
        assert!(CubicSpline::natural(vec![0.0, 1.0, 1.0], vec![0.0; 3]).is_err());
        assert!(QuinticHermite::new(vec![0.0, 1.0], &[0.0], &[0.0, 0.0], &[0.0, 0.0]).is_err());
    }
}
