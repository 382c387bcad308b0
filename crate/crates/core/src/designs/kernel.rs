use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use super::pointset::dot;
use super::PointSet;
use crate::error::{Error, Result};
use crate::orthopoly::KernelSpec;

/// Pass tolerance for analytically exact constructions.
pub const DEFAULT_TOL: f64 = 1e-9;
/// Looser tolerance for very high degrees (the 600-cell at `t = 58`).
pub const HIGH_DEGREE_TOL: f64 = 1e-8;
/// Inner products closer than this are merged.
pub const MERGE_TOL: f64 = 1e-8;

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct DegreeResidual {
    pub t: u32,
    pub raw_sum: f64,
    pub relative_residual: f64,
    pub passed: bool,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct KernelCertificate {
    pub n: u32,
    pub size: usize,
    pub tolerance: f64,
    pub degrees: Vec<DegreeResidual>,
    pub passed: bool,
}

fn spec_for(x: &PointSet, t: u32) -> Result<KernelSpec> {
    let n =
        u32::try_from(x.dim()).map_err(|_| Error::OutOfRange(format!("dimension {}", x.dim())))?;
    KernelSpec::new(n, t)
}

/// `Σ_{x,y∈X} Q_{n,t}(⟨x,y⟩)` over ordered pairs, diagonal included.
pub fn kernel_sum(x: &PointSet, t: u32) -> Result<f64> {
    let spec = spec_for(x, t)?;
    let pts = x.points();
    let sum = (0..pts.len())
        .into_par_iter()
        .map(|i| {
            let off: f64 = (i + 1..pts.len())
                .map(|j| spec.eval(dot(&pts[i], &pts[j]).clamp(-1.0, 1.0)))
                .sum();
            spec.eval(1.0) + 2.0 * off
        })
        .collect::<Vec<f64>>()
        .into_iter()
        .sum();
    Ok(sum)
}

fn residual(x: &PointSet, t: u32, tol: f64) -> Result<DegreeResidual> {
    let spec = spec_for(x, t)?;
    let raw_sum = kernel_sum(x, t)?;
    let relative_residual = raw_sum.abs() / (x.len() as f64 * spec.eval(1.0));
    Ok(DegreeResidual {
        t,
        raw_sum,
        relative_residual,
        passed: relative_residual <= tol,
    })
}

fn certificate(x: &PointSet, tol: f64, degrees: Vec<DegreeResidual>) -> KernelCertificate {
    KernelCertificate {
        n: x.dim() as u32,
        size: x.len(),
        tolerance: tol,
        passed: degrees.iter().all(|d| d.passed),
        degrees,
    }
}

/// Kernel criterion for a harmonic index `t`-design.
pub fn verify_harmonic_index(x: &PointSet, t: u32, tol: f64) -> Result<KernelCertificate> {
    Ok(certificate(x, tol, vec![residual(x, t, tol)?]))
}

/// Kernel criterion at every degree `1..=t`.
pub fn verify_spherical_design(x: &PointSet, t: u32, tol: f64) -> Result<KernelCertificate> {
    if t == 0 {
        spec_for(x, 0)?;
    }
    let degrees = (1..=t)
        .map(|j| residual(x, j, tol))
        .collect::<Result<Vec<_>>>()?;
    Ok(certificate(x, tol, degrees))
}

/// Degrees `t ≤ t_max`, ascending, at which `X` is a harmonic index design.
pub fn harmonic_index_spectrum(x: &PointSet, t_max: u32, tol: f64) -> Result<Vec<u32>> {
    if t_max == 0 {
        spec_for(x, 0)?;
    }
    let mut out = Vec::new();
    for t in 1..=t_max {
        if residual(x, t, tol)?.passed {
            out.push(t);
        }
    }
    Ok(out)
}

/// Distinct off-diagonal inner products with pair counts.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct InnerProductSet {
    pub values: Vec<f64>,
    pub multiplicities: Vec<usize>,
    /// `−v` occurs whenever `v` does.
    pub symmetric: bool,
}

impl InnerProductSet {
    pub fn len(&self) -> usize {
        self.values.len()
    }

    pub fn is_empty(&self) -> bool {
        self.values.is_empty()
    }

    pub fn contains(&self, v: f64, tol: f64) -> bool {
        self.values.iter().any(|w| (w - v).abs() <= tol)
    }

    /// Union of several sets, re-clustered at `merge_tol`.
    pub fn merge(sets: &[InnerProductSet], merge_tol: f64) -> InnerProductSet {
        let mut all: Vec<(f64, usize)> = sets
            .iter()
            .flat_map(|s| {
                s.values
                    .iter()
                    .copied()
                    .zip(s.multiplicities.iter().copied())
            })
            .collect();
        all.sort_by(|a, b| a.0.total_cmp(&b.0));
        cluster(all, merge_tol)
    }
}

/// Clusters start at their smallest member; a value joins the current cluster
/// while within `merge_tol` of its start. Reported values are weighted means.
fn cluster(sorted: Vec<(f64, usize)>, merge_tol: f64) -> InnerProductSet {
    let mut groups: Vec<(f64, f64, usize)> = Vec::new();
    for (v, m) in sorted {
        match groups.last_mut() {
            Some((start, acc, count)) if v - *start <= merge_tol => {
                *acc += v * m as f64;
                *count += m;
            }
            _ => groups.push((v, v * m as f64, m)),
        }
    }
    let values: Vec<f64> = groups.iter().map(|(_, acc, c)| acc / *c as f64).collect();
    let multiplicities = groups.iter().map(|g| g.2).collect();
    let symmetric = values
        .iter()
        .all(|v| values.iter().any(|w| (w + v).abs() <= merge_tol));
    InnerProductSet {
        values,
        multiplicities,
        symmetric,
    }
}

pub fn inner_product_set(x: &PointSet, merge_tol: f64) -> InnerProductSet {
    let p = x.points();
    let mut all: Vec<(f64, usize)> = (0..p.len())
        .flat_map(|i| (i + 1..p.len()).map(move |j| (i, j)))
        .map(|(i, j)| (dot(&p[i], &p[j]).clamp(-1.0, 1.0), 1))
        .collect();
    all.sort_by(|a, b| a.0.total_cmp(&b.0));
    cluster(all, merge_tol)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::designs::{generate, GeneratorKind};

    fn ps(dim: usize, pts: Vec<Vec<f64>>) -> PointSet {
        PointSet::new(dim, pts, "").unwrap()
    }

    #[test]
    fn diagonal_only_for_a_single_point() {
        let x = ps(3, vec![vec![0.0, 0.0, 1.0]]);
        let c = verify_harmonic_index(&x, 2, DEFAULT_TOL).unwrap();
        assert!((c.degrees[0].raw_sum - 5.0).abs() < 1e-12);
        assert!((c.degrees[0].relative_residual - 1.0).abs() < 1e-12);
        assert!(!c.passed);
        let s = verify_spherical_design(&x, 1, DEFAULT_TOL).unwrap();
        assert!(!s.degrees[0].passed);
    }

    #[test]
    fn antipodal_pair_spectrum() {
        let x = ps(3, vec![vec![0.0, 0.6, 0.8], vec![0.0, -0.6, -0.8]]);
        assert_eq!(
            harmonic_index_spectrum(&x, 5, DEFAULT_TOL).unwrap(),
            vec![1, 3, 5]
        );
    }

    #[test]
    fn zero_degree_is_rejected() {
        let x = ps(2, vec![vec![1.0, 0.0]]);
        assert!(verify_harmonic_index(&x, 0, DEFAULT_TOL).is_err());
        assert!(verify_spherical_design(&x, 0, DEFAULT_TOL).is_err());
        let y = ps(1, vec![vec![1.0]]);
        assert!(verify_harmonic_index(&y, 2, DEFAULT_TOL).is_err());
    }

    #[test]
    fn inner_products() {
        let x = generate(GeneratorKind::CrossPolytopeHalf { n: 4 }).unwrap();
        let ip = inner_product_set(&x, MERGE_TOL);
        assert_eq!(ip.values, vec![0.0]);
        assert_eq!(ip.multiplicities, vec![6]);
        assert!(ip.symmetric);
        let s = inner_product_set(
            &generate(GeneratorKind::Simplex { n: 3 }).unwrap(),
            MERGE_TOL,
        );
        assert_eq!(s.len(), 1);
        assert!((s.values[0] + 1.0 / 3.0).abs() < 1e-12);
        assert!(!s.symmetric);
        let pent = inner_product_set(
            &generate(GeneratorKind::RegularPolygon { m: 5 }).unwrap(),
            MERGE_TOL,
        );
        assert_eq!(pent.multiplicities, vec![5, 5]);
        let both = InnerProductSet::merge(&[s.clone(), s], MERGE_TOL);
        assert_eq!(both.multiplicities, vec![12]);
    }
}
