//! Ordinary least-squares line fit, shared by the scaling-exponent fits.

/// Result of fitting y = intercept + slope * x.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct LineFit {
    pub slope: f64,
    pub intercept: f64,
    /// Standard error of the slope; 0 when there are no residual degrees of
    /// freedom (two points).
    pub slope_stderr: f64,
    /// Coefficient of determination; 1 for a degenerate flat target.
    pub r2: f64,
}

/// Unweighted OLS through the given points. Caller guarantees at least two
/// points with distinct x.
pub fn line_fit(points: &[(f64, f64)]) -> LineFit {
    let n = points.len() as f64;
    debug_assert!(points.len() >= 2);

    let mean_x = points.iter().map(|p| p.0).sum::<f64>() / n;
    let mean_y = points.iter().map(|p| p.1).sum::<f64>() / n;
    let mut sxx = 0.0;
    let mut sxy = 0.0;
    let mut syy = 0.0;
    for &(x, y) in points {
        let dx = x - mean_x;
        let dy = y - mean_y;
        sxx += dx * dx;
        sxy += dx * dy;
        syy += dy * dy;
    }

    let slope = sxy / sxx;
    let intercept = mean_y - slope * mean_x;

    let ss_res: f64 = points
        .iter()
        .map(|&(x, y)| {
            let r = y - (intercept + slope * x);
            r * r
        })
        .sum();

    let dof = points.len().saturating_sub(2);
    let slope_stderr = if dof > 0 {
        (ss_res / dof as f64 / sxx).sqrt()
    } else {
        0.0
    };
    let r2 = if syy > 0.0 { 1.0 - ss_res / syy } else { 1.0 };

    LineFit {
        slope,
        intercept,
        slope_stderr,
        r2,
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn exact_line_recovered() {
        let pts: Vec<(f64, f64)> = (0..10).map(|i| (i as f64, 3.0 - 0.25 * i as f64)).collect();
        let fit = line_fit(&pts);
        assert!((fit.slope + 0.25).abs() < 1e-12);
        assert!((fit.intercept - 3.0).abs() < 1e-12);
        assert!(fit.slope_stderr < 1e-12);
        assert!((fit.r2 - 1.0).abs() < 1e-12);
    }

    #[test]
    fn stderr_matches_hand_computation() {
        // y = x with one point perturbed by +1 at x=2: residual analysis by hand.
        let pts = vec![(0.0, 0.0), (1.0, 1.0), (2.0, 3.0), (3.0, 3.0)];
        let fit = line_fit(&pts);
        // mean_x=1.5, mean_y=1.75, sxy=5.5, sxx=5 -> slope=1.1, intercept=0.1
        assert!((fit.slope - 1.1).abs() < 1e-12);
        assert!((fit.intercept - 0.1).abs() < 1e-12);
        // residuals: -0.1, -0.2, 0.7, -0.4 -> ss_res = 0.7; se = sqrt(0.7/2/5)
        assert!((fit.slope_stderr - (0.7f64 / 2.0 / 5.0).sqrt()).abs() < 1e-12);
    }
}
