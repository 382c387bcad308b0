use std::f64::consts::PI;

use serde::{Deserialize, Serialize};

use super::PointSet;
use crate::error::{Error, Result};

/// Canonical point sets.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum GeneratorKind {
    /// Vertices of the regular `m`-gon on `S¹`, starting at `(1, 0)`.
    RegularPolygon {
        m: usize,
    },
    /// `(1, 0)` and the unit vector at angle `jπ/(2e)`, `j` odd.
    TwoPointS1 {
        e: u32,
        j: u32,
    },
    /// `e₁, …, eₙ`.
    CrossPolytopeHalf {
        n: usize,
    },
    /// `n + 1` vertices of the regular simplex on `S^{n-1}`.
    Simplex {
        n: usize,
    },
    IcosahedronHalf,
    E8Half,
    /// All 240 normalized roots.
    E8Roots,
    Cell600Half,
    X0Plus,
    X0Minus,
}

impl GeneratorKind {
    pub fn name(&self) -> String {
        match self {
            GeneratorKind::RegularPolygon { m } => format!("regular_polygon(m={m})"),
            GeneratorKind::TwoPointS1 { e, j } => format!("two_point_s1(e={e},j={j})"),
            GeneratorKind::CrossPolytopeHalf { n } => format!("cross_polytope_half(n={n})"),
            GeneratorKind::Simplex { n } => format!("simplex(n={n})"),
            GeneratorKind::IcosahedronHalf => "icosahedron_half".into(),
            GeneratorKind::E8Half => "e8_half".into(),
            GeneratorKind::E8Roots => "e8_roots".into(),
            GeneratorKind::Cell600Half => "cell600_half".into(),
            GeneratorKind::X0Plus => "x0_plus".into(),
            GeneratorKind::X0Minus => "x0_minus".into(),
        }
    }
}

pub fn generate(kind: GeneratorKind) -> Result<PointSet> {
    let source = kind.name();
    let (dim, points) = match kind {
        GeneratorKind::RegularPolygon { m } => {
            if m < 2 {
                return Err(Error::InvalidGenerator(format!(
                    "polygon needs m ≥ 2, got {m}"
                )));
            }
            (
                2,
                (0..m)
                    .map(|k| angle(2.0 * PI * k as f64 / m as f64))
                    .collect(),
            )
        }
        GeneratorKind::TwoPointS1 { e, j } => {
            if e == 0 || j % 2 == 0 {
                return Err(Error::InvalidGenerator(format!(
                    "two_point_s1 needs e ≥ 1 and odd j, got e={e}, j={j}"
                )));
            }
            let theta = j as f64 * PI / (2.0 * e as f64);
            (2, vec![vec![1.0, 0.0], angle(theta)])
        }
        GeneratorKind::CrossPolytopeHalf { n } => {
            check_dim(n)?;
            (n, (0..n).map(|i| unit(n, i)).collect())
        }
        GeneratorKind::Simplex { n } => {
            check_dim(n)?;
            (n, simplex(n))
        }
        GeneratorKind::IcosahedronHalf => (3, half(icosahedron())),
        GeneratorKind::E8Half => (8, half(e8_roots())),
        GeneratorKind::E8Roots => (8, e8_roots()),
        GeneratorKind::Cell600Half => (4, half(cell600())),
        GeneratorKind::X0Plus => (3, x0(true)),
        GeneratorKind::X0Minus => (3, x0(false)),
    };
    PointSet::new(dim, points, source)
}

fn check_dim(n: usize) -> Result<()> {
    if n < 2 {
        return Err(Error::InvalidGenerator(format!(
            "dimension must be ≥ 2, got {n}"
        )));
    }
    Ok(())
}

fn angle(theta: f64) -> Vec<f64> {
    vec![theta.cos(), theta.sin()]
}

fn unit(n: usize, i: usize) -> Vec<f64> {
    let mut v = vec![0.0; n];
    v[i] = 1.0;
    v
}

fn normalize(mut v: Vec<f64>) -> Vec<f64> {
    let norm = v.iter().map(|c| c * c).sum::<f64>().sqrt();
    v.iter_mut().for_each(|c| *c /= norm);
    v
}

/// First coordinate with `|c| > 1e-12` is positive.
pub fn is_lex_positive(v: &[f64]) -> bool {
    v.iter().find(|c| c.abs() > 1e-12).is_some_and(|&c| c > 0.0)
}

fn half(points: Vec<Vec<f64>>) -> Vec<Vec<f64>> {
    points.into_iter().filter(|p| is_lex_positive(p)).collect()
}

// eᵢ·√(1+1/n) shifted so the centroid of all n+1 points is the origin
fn simplex(n: usize) -> Vec<Vec<f64>> {
    let nf = n as f64;
    let shift = ((nf + 1.0).sqrt() + 1.0) / nf.powf(1.5);
    let scale = (1.0 + 1.0 / nf).sqrt();
    let mut pts: Vec<Vec<f64>> = (0..n)
        .map(|i| {
            (0..n)
                .map(|k| if k == i { scale - shift } else { -shift })
                .collect()
        })
        .collect();
    pts.push(vec![1.0 / nf.sqrt(); n]);
    pts.into_iter().map(normalize).collect()
}

fn icosahedron() -> Vec<Vec<f64>> {
    let phi = (1.0 + 5f64.sqrt()) / 2.0;
    let mut pts = Vec::with_capacity(12);
    for s1 in [1.0, -1.0] {
        for s2 in [1.0, -1.0] {
            let (a, b) = (s1, s2 * phi);
            pts.push(vec![0.0, a, b]);
            pts.push(vec![a, b, 0.0]);
            pts.push(vec![b, 0.0, a]);
        }
    }
    pts.into_iter().map(normalize).collect()
}

fn e8_roots() -> Vec<Vec<f64>> {
    let mut pts = Vec::with_capacity(240);
    let r = 0.5f64.sqrt();
    for i in 0..8 {
        for j in i + 1..8 {
            for si in [1.0, -1.0] {
                for sj in [1.0, -1.0] {
                    let mut v = vec![0.0; 8];
                    v[i] = si * r;
                    v[j] = sj * r;
                    pts.push(v);
                }
            }
        }
    }
    // (±1/2)^8 with an even number of minus signs, norm √2 before scaling
    let c = 0.5 * r;
    for mask in 0u32..256 {
        if mask.count_ones() % 2 == 0 {
            pts.push(
                (0..8)
                    .map(|k| if mask >> k & 1 == 1 { -c } else { c })
                    .collect(),
            );
        }
    }
    pts
}

fn cell600() -> Vec<Vec<f64>> {
    let phi = (1.0 + 5f64.sqrt()) / 2.0;
    let mut pts = Vec::with_capacity(120);
    for i in 0..4 {
        for s in [1.0, -1.0] {
            let mut v = vec![0.0; 4];
            v[i] = s;
            pts.push(v);
        }
    }
    for mask in 0u32..16 {
        pts.push(
            (0..4)
                .map(|k| if mask >> k & 1 == 1 { -0.5 } else { 0.5 })
                .collect(),
        );
    }
    let base = [phi / 2.0, 0.5, 0.5 / phi, 0.0];
    for perm in even_permutations4() {
        // signs on the three nonzero entries
        for mask in 0u32..8 {
            let mut v = vec![0.0; 4];
            for (slot, &src) in perm.iter().enumerate() {
                let sign = if src < 3 && mask >> src & 1 == 1 {
                    -1.0
                } else {
                    1.0
                };
                v[slot] = sign * base[src];
            }
            pts.push(v);
        }
    }
    pts
}

fn even_permutations4() -> Vec<[usize; 4]> {
    let mut out = Vec::with_capacity(12);
    for a in 0..4 {
        for b in 0..4 {
            for c in 0..4 {
                for d in 0..4 {
                    let p = [a, b, c, d];
                    let distinct = (0..4).all(|i| (i + 1..4).all(|j| p[i] != p[j]));
                    let inversions = (0..4)
                        .flat_map(|i| (i + 1..4).map(move |j| (i, j)))
                        .filter(|&(i, j)| p[i] > p[j])
                        .count();
                    if distinct && inversions % 2 == 0 {
                        out.push(p);
                    }
                }
            }
        }
    }
    out
}

// first coordinate √(525 ± 70√30)/35, the rest a pentagon of radius √(700 ∓ 70√30)/35
fn x0(plus: bool) -> Vec<Vec<f64>> {
    let s30 = 30f64.sqrt();
    let s5 = 5f64.sqrt();
    let sign = if plus { 1.0 } else { -1.0 };
    let h = (525.0 + sign * 70.0 * s30).sqrt() / 35.0;
    let w = (700.0 - sign * 70.0 * s30).sqrt();
    let c1 = (s5 - 1.0) / 140.0 * w;
    let c2 = (s5 + 1.0) / 140.0 * w;
    let s1 = (10.0 + 2.0 * s5).sqrt() / 140.0 * w;
    let s2 = (10.0 - 2.0 * s5).sqrt() / 140.0 * w;
    vec![
        vec![h, w / 35.0, 0.0],
        vec![h, c1, s1],
        vec![h, -c2, s2],
        vec![h, -c2, -s2],
        vec![h, c1, -s1],
    ]
}
