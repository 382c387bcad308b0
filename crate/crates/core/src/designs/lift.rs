use serde::{Deserialize, Serialize};

use super::PointSet;
use crate::error::{Error, Result};
use crate::orthopoly::{kernel_value, q_roots, KernelSpec, ROOT_RESIDUAL_TOL};

/// `X′ = {(r, √(1−r²)·x) : x ∈ X}` for `X` on `S^{n-2}` and a root `r` of
/// `Q_{n,t}`. When `X` is a spherical `t`-design, `X′` is a harmonic index
/// `t`-design on `S^{n-1}`.
pub fn lift_design(x: &PointSet, t: u32, r: f64) -> Result<PointSet> {
    let n = x.dim() as u32 + 1;
    let spec = KernelSpec::new(n, t)?;
    let residual = spec.eval(r).abs();
    if !(r.abs() <= 1.0) || residual >= ROOT_RESIDUAL_TOL * spec.eval(1.0) {
        return Err(Error::NotARoot {
            n,
            t,
            value: r,
            residual,
        });
    }
    let scale = (1.0 - r * r).sqrt();
    let points = x
        .points()
        .iter()
        .map(|p| {
            std::iter::once(r)
                .chain(p.iter().map(|c| scale * c))
                .collect()
        })
        .collect();
    PointSet::with_labels(
        n as usize,
        points,
        x.labels().map(<[String]>::to_vec),
        format!("lift({}, t={t}, r={r})", x.source()),
    )
}

/// Lift with the `index`-th root of `Q_{n,t}`, counted from 1 in descending order.
pub fn lift_by_root_index(x: &PointSet, t: u32, index: usize) -> Result<PointSet> {
    let n = x.dim() as u32 + 1;
    let mut roots = q_roots(KernelSpec::new(n, t)?);
    roots.sort_by(|a, b| b.total_cmp(a));
    let count = roots.len();
    let r = *index
        .checked_sub(1)
        .and_then(|i| roots.get(i))
        .ok_or(Error::RootIndexOutOfRange { index, count })?;
    lift_design(x, t, r)
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct ComponentSum {
    pub j: u32,
    pub magnitude: f64,
    /// `magnitude / (|X|·Q_{3,t}(1))`
    pub relative: f64,
}

/// Splits `Σ_{x∈X′} f` for the degree-`t` harmonic basis of `S²` adapted to
/// the lift of a set on `S¹`. Component `j` collects
/// `cos jθ, sin jθ · (1−s²)^{j/2}·Q_{2j+3,t−j}(s)`; its magnitude is
/// `(1−r²)^{j/2}·|Q_{2j+3,t−j}(r)|·|Σ e^{ijθ}|`.
pub fn separated_component_sums(x: &PointSet, r: f64, t: u32) -> Result<Vec<ComponentSum>> {
    if x.dim() != 2 {
        return Err(Error::Unsupported(format!(
            "component split needs a base set on S¹, got dimension {}",
            x.dim()
        )));
    }
    if !(r.abs() <= 1.0) {
        return Err(Error::OutOfRange(format!("height {r} outside [-1, 1]")));
    }
    let norm = x.len() as f64 * KernelSpec::new(3, t)?.eval(1.0);
    let out = (0..=t)
        .map(|j| {
            let (mut c, mut s) = (0.0, 0.0);
            for p in x.points() {
                let theta = p[1].atan2(p[0]);
                c += (j as f64 * theta).cos();
                s += (j as f64 * theta).sin();
            }
            let radial = (1.0 - r * r).powf(j as f64 / 2.0) * kernel_value(2 * j + 3, t - j, r);
            let magnitude = radial.abs() * c.hypot(s);
            ComponentSum {
                j,
                magnitude,
                relative: magnitude / norm,
            }
        })
        .collect();
    Ok(out)
}
