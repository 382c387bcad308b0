use serde::{Deserialize, Serialize};
use statrs::function::gamma::gamma;

use crate::error::{Error, Result};

/// Bracketing step for the first-zero scan.
pub const ZERO_SCAN_STEP: f64 = 1e-2;

/// Below this argument the ascending series is used, above it Miller's
/// backward recurrence.
const SERIES_LIMIT: f64 = 10.0;

#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
pub struct BesselSpec {
    alpha: f64,
}

impl BesselSpec {
    pub fn new(alpha: f64) -> Result<Self> {
        if !alpha.is_finite() || alpha < 0.0 {
            return Err(Error::InvalidBesselOrder(alpha));
        }
        Ok(BesselSpec { alpha })
    }

    pub fn alpha(&self) -> f64 {
        self.alpha
    }
}

fn series(nu: f64, z: f64) -> f64 {
    let half = 0.5 * z;
    let q = half * half;
    let mut term = if nu == 0.0 {
        1.0
    } else {
        half.powf(nu) / gamma(nu + 1.0)
    };
    let mut sum = term;
    for k in 1..500 {
        let k = k as f64;
        term *= -q / (k * (k + nu));
        sum += term;
        if term.abs() <= 1e-17 * sum.abs() && k > q.sqrt() {
            break;
        }
    }
    sum
}

/// Miller's backward recurrence normalized with
/// `(z/2)^ν = Σ_k (ν+2k)·Γ(ν+k)/k!·J_{ν+2k}(z)`.
fn miller(nu: f64, z: f64) -> f64 {
    let start = ((1.2 * z + 40.0) / 2.0).ceil() as usize * 2;
    let mut vals = vec![0.0f64; start + 2];
    vals[start] = 1e-30;
    for k in (1..=start).rev() {
        let order = nu + k as f64;
        vals[k - 1] = 2.0 * order / z * vals[k] - vals[k + 1];
        if vals[k - 1].abs() > 1e250 {
            for v in vals[k - 1..].iter_mut() {
                *v *= 1e-250;
            }
        }
    }
    // weights divided by Γ(ν+1): w_0 = 1, w_i = (ν+2i)·h_i, h_1 = 1,
    // h_{i+1} = h_i·(ν+i)/(i+1)
    let mut sum = vals[0];
    let mut h = 1.0;
    for i in 1..=start / 2 {
        let i_f = i as f64;
        sum += (nu + 2.0 * i_f) * h * vals[2 * i];
        h *= (nu + i_f) / (i_f + 1.0);
    }
    vals[0] * (0.5 * z).powf(nu) / (gamma(nu + 1.0) * sum)
}

/// `J_α(z)` for `z ≥ 0`.
pub fn bessel_j(spec: BesselSpec, z: f64) -> Result<f64> {
    if !(z >= 0.0) {
        return Err(Error::NegativeBesselArgument(z));
    }
    let nu = spec.alpha;
    if z == 0.0 {
        return Ok(if nu == 0.0 { 1.0 } else { 0.0 });
    }
    Ok(if z <= SERIES_LIMIT {
        series(nu, z)
    } else {
        miller(nu, z)
    })
}

/// First positive zero `j_{α,1}`: scan upward from `z = α` in steps of
/// [`ZERO_SCAN_STEP`] for a sign change, then bisect to machine precision.
pub fn bessel_first_zero(spec: BesselSpec) -> Result<f64> {
    let alpha = spec.alpha;
    let window_end = alpha + std::f64::consts::PI * (1.0 + alpha);
    let j = |z: f64| bessel_j(spec, z);
    // J_α(0) = 0 for α > 0, so start just off the origin
    let mut lo = if alpha > 0.0 {
        alpha.max(ZERO_SCAN_STEP)
    } else {
        0.0
    };
    let mut f_lo = j(lo)?;
    let mut hi = lo;
    loop {
        hi += ZERO_SCAN_STEP;
        if hi > window_end {
            return Err(Error::NoBesselZero {
                alpha,
                lo: alpha,
                hi: window_end,
            });
        }
        let f_hi = j(hi)?;
        if f_hi == 0.0 {
            return Ok(hi);
        }
        if f_hi.signum() != f_lo.signum() {
            break;
        }
        lo = hi;
        f_lo = f_hi;
    }
    for _ in 0..200 {
        let mid = 0.5 * (lo + hi);
        if mid <= lo || mid >= hi {
            break;
        }
        let fm = j(mid)?;
        if fm == 0.0 {
            return Ok(mid);
        }
        if fm.signum() == f_lo.signum() {
            lo = mid;
            f_lo = fm;
        } else {
            hi = mid;
        }
    }
    Ok(0.5 * (lo + hi))
}
