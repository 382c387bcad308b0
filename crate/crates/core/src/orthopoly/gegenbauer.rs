use nalgebra::{DMatrix, SymmetricEigen};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Root acceptance: `|Q(r)| < ROOT_RESIDUAL_TOL · Q(1)`.
pub const ROOT_RESIDUAL_TOL: f64 = 1e-9;
/// Relative tolerance for ties between minimum candidates.
pub const MIN_RELATIVE_TOL: f64 = 1e-12;

/// Parameters `(n, t)` of the kernel `Q_{n,t}` on `S^{n-1}`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct KernelSpec {
    n: u32,
    t: u32,
}

impl KernelSpec {
    pub fn new(n: u32, t: u32) -> Result<Self> {
        if n < 2 {
            return Err(Error::InvalidKernel {
                n,
                t,
                reason: "dimension must be at least 2",
            });
        }
        if t < 1 {
            return Err(Error::InvalidKernel {
                n,
                t,
                reason: "degree must be at least 1",
            });
        }
        Ok(KernelSpec { n, t })
    }

    pub fn n(&self) -> u32 {
        self.n
    }

    pub fn t(&self) -> u32 {
        self.t
    }

    /// Gegenbauer parameter `λ = (n-2)/2`.
    pub fn lambda(&self) -> f64 {
        (self.n as f64 - 2.0) / 2.0
    }

    /// `Q_{n,t}(1)`, the dimension of the harmonic space.
    pub fn dim(&self) -> u64 {
        dim_harmonic(self.n, self.t).expect("validated spec")
    }

    pub fn eval(&self, x: f64) -> f64 {
        kernel_value(self.n, self.t, x)
    }
}

fn binomial(n: u64, k: u64) -> Option<u128> {
    if k > n {
        return Some(0);
    }
    let k = k.min(n - k);
    let mut acc: u128 = 1;
    for i in 0..k {
        // acc·(n-i) is divisible by (i+1) after the multiplication
        acc = acc.checked_mul((n - i) as u128)? / (i as u128 + 1);
    }
    Some(acc)
}

/// `dim H_t(ℝⁿ) = C(n+t-1, t) - C(n+t-3, t-2)`.
pub fn dim_harmonic(n: u32, t: u32) -> Result<u64> {
    if n < 2 {
        return Err(Error::InvalidKernel {
            n,
            t,
            reason: "dimension must be at least 2",
        });
    }
    let (n, t) = (n as u64, t as u64);
    let overflow = || Error::InvalidKernel {
        n: n as u32,
        t: t as u32,
        reason: "dimension overflows 64 bits",
    };
    let first = binomial(n + t - 1, t).ok_or_else(overflow)?;
    let second = if t >= 2 {
        binomial(n + t - 3, t - 2).ok_or_else(overflow)?
    } else {
        0
    };
    u64::try_from(first - second).map_err(|_| overflow())
}

/// `Q_{n,t}(x) / Q_{n,t}(1)` via the three-term recurrence normalized at 1:
/// `R_{k+1} = (2k+n-2)/(k+n-2)·x·R_k - k/(k+n-2)·R_{k-1}`.
fn unit_normalized(n: u32, t: u32, x: f64) -> f64 {
    if t == 0 {
        return 1.0;
    }
    let nf = n as f64;
    let (mut prev, mut cur) = (1.0, x);
    for k in 1..t {
        let k = k as f64;
        let denom = k + nf - 2.0;
        let next = (2.0 * k + nf - 2.0) / denom * x * cur - k / denom * prev;
        prev = cur;
        cur = next;
    }
    cur
}

/// `Q_{n,t}(x)` for any `t ≥ 0`; `n = 2` uses `2·cos(t·arccos x)` on `[-1, 1]`.
pub fn kernel_value(n: u32, t: u32, x: f64) -> f64 {
    if n == 2 && t > 0 && x.abs() <= 1.0 {
        return 2.0 * (t as f64 * x.acos()).cos();
    }
    let dim = dim_harmonic(n, t).expect("kernel dimension") as f64;
    dim * unit_normalized(n, t, x)
}

pub fn q_eval(spec: KernelSpec, x: f64) -> f64 {
    spec.eval(x)
}

/// Symmetric Jacobi polynomial `P_t^{(α,α)}`, `α = (n-3)/2`, normalized so that
/// `P(1) = C(t+α, t)`.
pub fn jacobi_symmetric_p(n: u32, t: u32, x: f64) -> f64 {
    let alpha = (n as f64 - 3.0) / 2.0;
    let at_one: f64 = (1..=t).map(|i| (alpha + i as f64) / i as f64).product();
    at_one * unit_normalized(n, t, x)
}

/// Off-diagonal entries of the monic recurrence's Jacobi matrix.
fn jacobi_offdiag(n: u32, k: u32) -> f64 {
    if n == 2 && k == 1 {
        return 0.5f64.sqrt();
    }
    let (k, n) = (k as f64, n as f64);
    (k * (k + n - 3.0) / ((2.0 * k + n - 2.0) * (2.0 * k + n - 4.0))).sqrt()
}

/// All roots of `Q_{n,t}` in ascending order; empty for `t = 0`.
pub(crate) fn roots_of(n: u32, t: u32) -> Vec<f64> {
    let size = t as usize;
    if size == 0 {
        return Vec::new();
    }
    let mut jac = DMatrix::<f64>::zeros(size, size);
    for k in 1..size {
        let b = jacobi_offdiag(n, k as u32);
        jac[(k - 1, k)] = b;
        jac[(k, k - 1)] = b;
    }
    let mut roots: Vec<f64> = SymmetricEigen::new(jac)
        .eigenvalues
        .iter()
        .copied()
        .collect();
    roots.sort_by(f64::total_cmp);

    let f = |x: f64| unit_normalized(n, t, x);
    let approx = roots.clone();
    for (i, root) in roots.iter_mut().enumerate() {
        let left_gap = if i > 0 {
            approx[i] - approx[i - 1]
        } else {
            approx[i] + 1.0
        };
        let right_gap = if i + 1 < size {
            approx[i + 1] - approx[i]
        } else {
            1.0 - approx[i]
        };
        let half = 0.45 * left_gap.min(right_gap);
        let (mut lo, mut hi) = (approx[i] - half, approx[i] + half);
        let (mut flo, fhi) = (f(lo), f(hi));
        if flo == 0.0 || fhi == 0.0 || flo.signum() == fhi.signum() {
            continue;
        }
        loop {
            let mid = 0.5 * (lo + hi);
            if mid <= lo || mid >= hi {
                break;
            }
            let fm = f(mid);
            if fm == 0.0 {
                lo = mid;
                hi = mid;
                break;
            }
            if fm.signum() == flo.signum() {
                lo = mid;
                flo = fm;
            } else {
                hi = mid;
            }
        }
        *root = if f(lo).abs() <= f(hi).abs() { lo } else { hi };
    }
    roots
}

/// Roots of `Q_{n,t}` from the Jacobi-matrix eigenvalues, polished by bisection.
pub fn q_roots(spec: KernelSpec) -> Vec<f64> {
    roots_of(spec.n, spec.t)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum MinimumMethod {
    DerivativeRoots,
    ChebyshevClosedForm,
}

/// `c = -min_{[-1,1]} Q_{n,t}` and where it is attained.
#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
pub struct MinimumReport {
    pub c: f64,
    pub argmin: f64,
    pub method: MinimumMethod,
}

/// Minimum of `Q_{n,t}` over `[-1, 1]`.
///
/// `Q'_{n,t}` is a multiple of `Q_{n+2,t-1}`, so every interior critical point
/// is a root of that kernel. All of them are evaluated together with the
/// endpoints; ties (even `t` is symmetric) resolve to the largest location.
pub fn q_min(spec: KernelSpec) -> MinimumReport {
    let (n, t) = (spec.n, spec.t);
    if n == 2 {
        return MinimumReport {
            c: 2.0,
            argmin: (std::f64::consts::PI / t as f64).cos(),
            method: MinimumMethod::ChebyshevClosedForm,
        };
    }
    let mut candidates = roots_of(n + 2, t - 1);
    candidates.push(-1.0);
    candidates.push(1.0);
    let values: Vec<(f64, f64)> = candidates.iter().map(|&x| (x, spec.eval(x))).collect();
    let min = values.iter().map(|&(_, v)| v).fold(f64::INFINITY, f64::min);
    let slack = MIN_RELATIVE_TOL * min.abs();
    let argmin = values
        .iter()
        .filter(|&&(_, v)| v <= min + slack)
        .map(|&(x, _)| x)
        .fold(f64::NEG_INFINITY, f64::max);
    MinimumReport {
        c: -min,
        argmin,
        method: MinimumMethod::DerivativeRoots,
    }
}
