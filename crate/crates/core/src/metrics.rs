//! Reconstruction quality metrics: pixelwise MSE and windowed SSIM.

use ndarray::ArrayView1;
use serde::{Deserialize, Serialize};
use thiserror::Error;

#[derive(Debug, Error)]
pub enum MetricsError {
    #[error("shape mismatch: expected length {expected}, got {got}")]
    ShapeMismatch { expected: usize, got: usize },
    #[error("SSIM window {window} exceeds image side {side}")]
    WindowTooLarge { window: usize, side: usize },
    #[error("signal of length {len} is not a square image")]
    NotSquare { len: usize },
}

/// SSIM parameters. The stability constants correspond to an 8-bit
/// dynamic range, so unit-range images are scaled by `dynamic_range`
/// before comparison.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct SsimConfig {
    pub c1: f64,
    pub c2: f64,
    /// Square window side; must be odd and no larger than the image side.
    pub window: usize,
    /// Gaussian weighting std-dev within the window.
    pub sigma: f64,
    pub dynamic_range: f64,
}

impl Default for SsimConfig {
    fn default() -> Self {
        Self {
            c1: 6.5025,
            c2: 58.5225,
            window: 11,
            sigma: 1.5,
            dynamic_range: 255.0,
        }
    }
}

/// Mean squared error between two equal-length signals.
pub fn mse(x: ArrayView1<'_, f32>, x_hat: ArrayView1<'_, f32>) -> Result<f64, MetricsError> {
    if x.len() != x_hat.len() {
        return Err(MetricsError::ShapeMismatch {
            expected: x.len(),
            got: x_hat.len(),
        });
    }
    let sum: f64 = x
        .iter()
        .zip(x_hat.iter())
        .map(|(&a, &b)| {
            let d = f64::from(b) - f64::from(a);
            d * d
        })
        .sum();
    Ok(sum / x.len() as f64)
}

/// Structural similarity over all fully-contained window positions,
/// Gaussian-weighted local statistics, mean-pooled. Symmetric in its
/// arguments; 1.0 iff the images are identical.
pub fn ssim(
    x: ArrayView1<'_, f32>,
    x_hat: ArrayView1<'_, f32>,
    cfg: &SsimConfig,
) -> Result<f64, MetricsError> {
    if x.len() != x_hat.len() {
        return Err(MetricsError::ShapeMismatch {
            expected: x.len(),
            got: x_hat.len(),
        });
    }
    let side = (x.len() as f64).sqrt().round() as usize;
    if side * side != x.len() {
        return Err(MetricsError::NotSquare { len: x.len() });
    }
    if cfg.window > side {
        return Err(MetricsError::WindowTooLarge {
            window: cfg.window,
            side,
        });
    }
    assert!(cfg.window % 2 == 1, "SSIM window must be odd");
    assert!(cfg.c1 > 0.0 && cfg.c2 > 0.0, "stability constants must be positive");

    let w = gaussian_window(cfg.window, cfg.sigma);
    let scale = cfg.dynamic_range;
    let at = |img: &ArrayView1<'_, f32>, r: usize, c: usize| f64::from(img[r * side + c]) * scale;

    let valid = side - cfg.window + 1;
    let mut total = 0.0;
    for wr in 0..valid {
        for wc in 0..valid {
            let (mut mu_x, mut mu_y) = (0.0, 0.0);
            let (mut xx, mut yy, mut xy) = (0.0, 0.0, 0.0);
            for r in 0..cfg.window {
                for c in 0..cfg.window {
                    let weight = w[r * cfg.window + c];
                    let a = at(&x, wr + r, wc + c);
                    let b = at(&x_hat, wr + r, wc + c);
                    mu_x += weight * a;
                    mu_y += weight * b;
                    xx += weight * a * a;
                    yy += weight * b * b;
                    xy += weight * a * b;
                }
            }
            let var_x = xx - mu_x * mu_x;
            let var_y = yy - mu_y * mu_y;
            let cov = xy - mu_x * mu_y;
            let num = (2.0 * mu_x * mu_y + cfg.c1) * (2.0 * cov + cfg.c2);
            let den = (mu_x * mu_x + mu_y * mu_y + cfg.c1) * (var_x + var_y + cfg.c2);
            total += num / den;
        }
    }
    Ok(total / (valid * valid) as f64)
}

fn gaussian_window(window: usize, sigma: f64) -> Vec<f64> {
    let half = (window / 2) as f64;
    let mut w: Vec<f64> = (0..window * window)
        .map(|i| {
            let (r, c) = ((i / window) as f64 - half, (i % window) as f64 - half);
            (-(r * r + c * c) / (2.0 * sigma * sigma)).exp()
        })
        .collect();
    let sum: f64 = w.iter().sum();
    for v in &mut w {
        *v /= sum;
    }
    w
}
