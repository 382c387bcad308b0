use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Unit-norm tolerance enforced on every point.
pub const NORM_TOL: f64 = 1e-12;
/// Minimum pairwise distance for points to count as distinct.
pub const DISTINCT_TOL: f64 = 1e-9;

/// A finite nonempty set of distinct unit vectors in ℝⁿ.
#[derive(Clone, Debug, PartialEq)]
pub struct PointSet {
    dim: usize,
    points: Vec<Vec<f64>>,
    labels: Option<Vec<String>>,
    source: String,
}

impl PointSet {
    /// Validates norms and distinctness.
    pub fn new(dim: usize, points: Vec<Vec<f64>>, source: impl Into<String>) -> Result<Self> {
        Self::with_labels(dim, points, None, source)
    }

    pub fn with_labels(
        dim: usize,
        points: Vec<Vec<f64>>,
        labels: Option<Vec<String>>,
        source: impl Into<String>,
    ) -> Result<Self> {
        if points.is_empty() {
            return Err(Error::EmptyPointSet);
        }
        for (index, p) in points.iter().enumerate() {
            if p.len() != dim {
                return Err(Error::DimensionMismatch {
                    index,
                    expected: dim,
                    found: p.len(),
                });
            }
            if p.iter().any(|c| !c.is_finite()) {
                return Err(Error::NonFiniteCoordinate { index });
            }
            let norm = dot(p, p).sqrt();
            if (norm - 1.0).abs() > NORM_TOL {
                return Err(Error::NotUnitVector { index, norm });
            }
        }
        if let Some(l) = &labels {
            if l.len() != points.len() {
                return Err(Error::LabelCountMismatch(l.len(), points.len()));
            }
        }
        for i in 0..points.len() {
            for j in i + 1..points.len() {
                let distance = points[i]
                    .iter()
                    .zip(&points[j])
                    .map(|(a, b)| (a - b) * (a - b))
                    .sum::<f64>()
                    .sqrt();
                if distance <= DISTINCT_TOL {
                    return Err(Error::DuplicatePoint {
                        first: i,
                        second: j,
                        distance,
                    });
                }
            }
        }
        Ok(PointSet {
            dim,
            points,
            labels,
            source: source.into(),
        })
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn len(&self) -> usize {
        self.points.len()
    }

    /// Always false; kept for the `len`/`is_empty` convention.
    pub fn is_empty(&self) -> bool {
        self.points.is_empty()
    }

    pub fn points(&self) -> &[Vec<f64>] {
        &self.points
    }

    pub fn labels(&self) -> Option<&[String]> {
        self.labels.as_deref()
    }

    pub fn source(&self) -> &str {
        &self.source
    }

    pub fn with_source(mut self, source: impl Into<String>) -> Self {
        self.source = source.into();
        self
    }

    /// The set with every point in `flip` replaced by its antipode.
    pub fn flip_points(&self, flip: &[usize]) -> Result<Self> {
        let mut points = self.points.clone();
        for &i in flip {
            let p = points.get_mut(i).ok_or_else(|| {
                Error::OutOfRange(format!("point index {i} of {}", self.points.len()))
            })?;
            p.iter_mut().for_each(|c| *c = -*c);
        }
        PointSet::with_labels(self.dim, points, self.labels.clone(), self.source.clone())
    }

    /// Applies `x ↦ M·x` for a square matrix given row-major.
    pub fn transform(&self, rows: &[Vec<f64>]) -> Result<Self> {
        if rows.len() != self.dim || rows.iter().any(|r| r.len() != self.dim) {
            return Err(Error::Unsupported(format!(
                "transform must be {0}×{0}",
                self.dim
            )));
        }
        let points = self
            .points
            .iter()
            .map(|p| rows.iter().map(|r| dot(r, p)).collect())
            .collect();
        PointSet::with_labels(self.dim, points, self.labels.clone(), self.source.clone())
    }

    /// `X ∪ Y` (same dimension, still distinct).
    pub fn union(&self, other: &PointSet) -> Result<Self> {
        let mut points = self.points.clone();
        points.extend(other.points.iter().cloned());
        PointSet::new(
            self.dim,
            points,
            format!("{} ∪ {}", self.source, other.source),
        )
    }

    pub fn from_json_str(s: &str) -> Result<Self> {
        let raw: PointSetFile = serde_json::from_str(s)?;
        let points = raw
            .points
            .into_iter()
            .map(|p| {
                p.into_iter()
                    .map(Coordinate::value)
                    .collect::<Result<Vec<f64>>>()
            })
            .collect::<Result<Vec<_>>>()?;
        PointSet::with_labels(raw.dim, points, raw.labels, raw.source.unwrap_or_default())
    }

    /// Deterministic JSON; coordinates are decimal strings with 17 significant digits.
    pub fn to_json_string(&self) -> String {
        let file = PointSetFile {
            dim: self.dim,
            points: self
                .points
                .iter()
                .map(|p| {
                    p.iter()
                        .map(|&c| Coordinate::Text(format_coordinate(c)))
                        .collect()
                })
                .collect(),
            labels: self.labels.clone(),
            source: Some(self.source.clone()),
        };
        serde_json::to_string_pretty(&file).expect("point set serializes")
    }
}

pub(crate) fn dot(a: &[f64], b: &[f64]) -> f64 {
    a.iter().zip(b).map(|(x, y)| x * y).sum()
}

pub fn format_coordinate(c: f64) -> String {
    // normalize -0 so files are byte-identical across equivalent inputs
    let c = if c == 0.0 { 0.0 } else { c };
    format!("{c:.16e}")
}

#[derive(Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct PointSetFile {
    dim: usize,
    points: Vec<Vec<Coordinate>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    labels: Option<Vec<String>>,
    #[serde(default)]
    source: Option<String>,
}

#[derive(Serialize, Deserialize)]
#[serde(untagged)]
enum Coordinate {
    Text(String),
    Number(f64),
}

impl Coordinate {
    fn value(self) -> Result<f64> {
        match self {
            Coordinate::Number(v) => Ok(v),
            Coordinate::Text(s) => s.trim().parse::<f64>().map_err(|e| Error::ParseNumber {
                input: s.clone(),
                reason: e.to_string(),
            }),
        }
    }
}
