//! Least-squares fits for runtime-scaling analysis.

use serde::Serialize;

use crate::error::CoreError;
use crate::Result;

/// Ordinary least-squares line `y = slope * x + intercept`.
#[derive(Debug, Clone, Serialize)]
pub struct LinearFit {
    pub slope: f64,
    pub intercept: f64,
    /// Standard error of the slope.
    pub stderr: f64,
    pub r_squared: f64,
    pub n: usize,
}

impl LinearFit {
    pub fn predict(&self, x: f64) -> f64 {
        self.slope * x + self.intercept
    }
}

/// Power-law fit of a `(x, y)` table performed in log–log space.
#[derive(Debug, Clone, Serialize)]
pub struct ScalingFit {
    /// Fitted slope of `log y` vs. `log x`.
    pub exponent: f64,
    pub intercept: f64,
    /// Standard error of the exponent.
    pub stderr: f64,
    pub r_squared: f64,
    /// The fitted `(x, y)` table.
    pub points: Vec<(f64, f64)>,
}

/// Fit a straight line through `(x, y)` pairs.
pub fn fit_line(x: &[f64], y: &[f64]) -> Result<LinearFit> {
    if x.len() != y.len() {
        return Err(CoreError::InvalidParameter(
            "fit_line: mismatched lengths".into(),
        ));
    }
    let n = x.len();
    if n < 3 {
        return Err(CoreError::InvalidParameter(format!(
            "fit_line: need at least 3 points, got {n}"
        )));
    }
    let nf = n as f64;
    let mx = x.iter().sum::<f64>() / nf;
    let my = y.iter().sum::<f64>() / nf;
    let mut sxx = 0.0;
    let mut sxy = 0.0;
    let mut syy = 0.0;
    for (&xi, &yi) in x.iter().zip(y) {
        sxx += (xi - mx) * (xi - mx);
        sxy += (xi - mx) * (yi - my);
        syy += (yi - my) * (yi - my);
    }
    if sxx == 0.0 {
        return Err(CoreError::InvalidParameter(
            "fit_line: degenerate abscissae".into(),
        ));
    }
    let slope = sxy / sxx;
    let intercept = my - slope * mx;
    let sse = (syy - slope * sxy).max(0.0);
    let stderr = (sse / (nf - 2.0) / sxx).sqrt();
    let r_squared = if syy > 0.0 { 1.0 - sse / syy } else { 1.0 };
    Ok(LinearFit {
        slope,
        intercept,
        stderr,
        r_squared,
        n,
    })
}

/// Fit `y = C x^p` by least squares on `(ln x, ln y)`.
///
/// Requires at least 5 strictly positive points.
pub fn fit_loglog(points: &[(f64, f64)]) -> Result<ScalingFit> {
    if points.len() < 5 {
        return Err(CoreError::InvalidParameter(format!(
            "scaling fit needs at least 5 points, got {}",
            points.len()
        )));
    }
    if points.iter().any(|&(x, y)| x <= 0.0 || y <= 0.0) {
        return Err(CoreError::InvalidParameter(
            "scaling fit needs strictly positive data".into(),
        ));
    }
    let x: Vec<f64> = points.iter().map(|p| p.0.ln()).collect();
    let y: Vec<f64> = points.iter().map(|p| p.1.ln()).collect();
    let lf = fit_line(&x, &y)?;
    Ok(ScalingFit {
        exponent: lf.slope,
        intercept: lf.intercept,
        stderr: lf.stderr,
        r_squared: lf.r_squared,
        points: points.to_vec(),
    })
}

/// Extract the local maxima of an oscillating series (strictly above both
/// neighbours), keeping only entries with `y > floor`.
pub fn envelope_maxima(points: &[(f64, f64)], floor: f64) -> Vec<(f64, f64)> {
    let mut out = Vec::new();
    for k in 1..points.len().saturating_sub(1) {
        let (_, ym) = points[k - 1];
        let (x, y) = points[k];
        let (_, yp) = points[k + 1];
        if y > ym && y >= yp && y > floor {
            out.push((x, y));
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use approx::assert_relative_eq;

    #[test]
    fn exact_line_recovered() {
        let x: Vec<f64> = (0..10).map(|k| k as f64).collect();
        let y: Vec<f64> = x.iter().map(|&v| 3.5 * v - 1.25).collect();
        let f = fit_line(&x, &y).unwrap();
        assert_relative_eq!(f.slope, 3.5, epsilon = 1e-12);
        assert_relative_eq!(f.intercept, -1.25, epsilon = 1e-12);
        assert!(f.stderr < 1e-12);
        assert_relative_eq!(f.r_squared, 1.0, epsilon = 1e-12);
    }

    #[test]
    fn power_law_recovered() {
        let pts: Vec<(f64, f64)> = (1..=8)
            .map(|k| {
                let x = 2.0_f64.powi(k);
                (x, 0.7 * x.powf(0.5))
            })
            .collect();
        let f = fit_loglog(&pts).unwrap();
        assert_relative_eq!(f.exponent, 0.5, epsilon = 1e-10);
        assert_relative_eq!(f.intercept.exp(), 0.7, epsilon = 1e-10);
    }

    #[test]
    fn too_few_points_rejected() {
        let pts = vec![(1.0, 1.0), (2.0, 2.0)];
        assert!(fit_loglog(&pts).is_err());
    }

    #[test]
    fn envelope_picks_local_maxima() {
        let pts: Vec<(f64, f64)> = (0..100)
            .map(|k| {
                let t = k as f64 * 0.1;
                (t, (1.0 + (3.0 * t).sin()) * (-0.1 * t).exp() + 1e-12)
            })
            .collect();
        let env = envelope_maxima(&pts, 1e-9);
        assert!(env.len() >= 4);
        // maxima follow the decaying envelope
        for w in env.windows(2) {
            assert!(w[1].1 < w[0].1 * 1.05);
        }
    }
}
