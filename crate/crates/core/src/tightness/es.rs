use std::cmp::Ordering;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use super::SimpleGraph;
use crate::error::{Error, Result};
use crate::exactnum::{fraction_free_rank, QuadExt};

/// A two-distance configuration: edges join pairs at the larger distance,
/// distances scaled so the smaller one is 1 and the larger squared is `b2`.
#[derive(Clone, Debug, PartialEq)]
pub struct TwoDistGraph {
    graph: SimpleGraph,
    b2: QuadExt,
}

impl TwoDistGraph {
    pub fn new(graph: SimpleGraph, b2: QuadExt) -> Result<Self> {
        if b2.try_sub(&QuadExt::one())?.signum() != Ordering::Greater {
            return Err(Error::RatioNotAboveOne);
        }
        Ok(TwoDistGraph { graph, b2 })
    }

    /// Classifies each pair of `points` by its squared distance relative to
    /// the smallest one: ratio 1 is a non-edge, ratio `b2` an edge.
    pub fn from_points(points: &[Vec<f64>], b2: QuadExt, tol: f64) -> Result<Self> {
        let m = points.len();
        let d2 = |i: usize, j: usize| -> f64 {
            points[i]
                .iter()
                .zip(&points[j])
                .map(|(a, b)| (a - b) * (a - b))
                .sum()
        };
        let pairs: Vec<(usize, usize)> = (0..m)
            .flat_map(|i| (i + 1..m).map(move |j| (i, j)))
            .collect();
        let unit = pairs
            .iter()
            .map(|&(i, j)| d2(i, j))
            .fold(f64::INFINITY, f64::min);
        let ratio = b2.to_f64();
        let mut edges = Vec::new();
        for &(i, j) in &pairs {
            let r = d2(i, j) / unit;
            if (r - ratio).abs() <= tol {
                edges.push((i, j));
            } else if (r - 1.0).abs() > tol {
                return Err(Error::MalformedGraph(format!(
                    "pair ({i}, {j}) has squared distance ratio {r}, neither 1 nor {ratio}"
                )));
            }
        }
        TwoDistGraph::new(SimpleGraph::from_edges(m, &edges)?, b2)
    }

    pub fn graph(&self) -> &SimpleGraph {
        &self.graph
    }

    pub fn b2(&self) -> &QuadExt {
        &self.b2
    }

    pub fn order(&self) -> usize {
        self.graph.order()
    }
}

/// `L_{i-1,j-1} = C_{1i} + C_{1j} − C_{ij}` for `i, j = 2..m`, where
/// `C = (b²−1)B + J − I` holds the squared distances.
pub fn es_matrix(g: &TwoDistGraph) -> Result<Vec<Vec<QuadExt>>> {
    let m = g.order();
    if m < 2 {
        return Err(Error::OutOfRange(format!(
            "need at least 2 vertices, got {m}"
        )));
    }
    let one = QuadExt::one();
    let c = |i: usize, j: usize| -> QuadExt {
        if i == j {
            QuadExt::zero()
        } else if g.graph.has_edge(i, j) {
            g.b2.clone()
        } else {
            one.clone()
        }
    };
    (1..m)
        .map(|i| {
            (1..m)
                .map(|j| c(0, i).try_add(&c(0, j))?.try_sub(&c(i, j)))
                .collect()
        })
        .collect()
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct EmbeddingReport {
    pub rank: usize,
    pub dimension: usize,
    /// `rank ≤ dimension`; false certifies that no embedding exists.
    pub feasible: bool,
}

pub fn es_embeddable(g: &TwoDistGraph, n: usize) -> Result<EmbeddingReport> {
    let rank = fraction_free_rank(&es_matrix(g)?)?;
    Ok(EmbeddingReport {
        rank,
        dimension: n,
        feasible: rank <= n,
    })
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ScanRecord {
    pub index: usize,
    pub graph6: String,
    pub rank: usize,
    pub feasible: bool,
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct ScanSummary {
    pub scanned: usize,
    pub feasible: usize,
}

/// Graphs per parallel batch in [`scan_graph_corpus`].
pub const SCAN_CHUNK: usize = 1024;

/// Runs the rank test on every graph of a stream, in input order. Batches of
/// [`SCAN_CHUNK`] graphs are ranked in parallel; `sink` sees every record
/// (feasible or not) in order. The first malformed record aborts the scan.
pub fn scan_graph_corpus<I, F>(
    graphs: I,
    b2: &QuadExt,
    n: usize,
    mut sink: F,
) -> Result<ScanSummary>
where
    I: IntoIterator<Item = Result<SimpleGraph>>,
    F: FnMut(&ScanRecord) -> Result<()>,
{
    let mut summary = ScanSummary::default();
    let mut iter = graphs.into_iter();
    loop {
        let mut batch = Vec::with_capacity(SCAN_CHUNK);
        for g in iter.by_ref().take(SCAN_CHUNK) {
            batch.push(g?);
        }
        if batch.is_empty() {
            return Ok(summary);
        }
        let base = summary.scanned;
        let records: Vec<ScanRecord> = batch
            .into_par_iter()
            .enumerate()
            .map(|(k, g)| {
                let index = base + k;
                let graph6 = g.to_graph6();
                let tg = TwoDistGraph::new(g, b2.clone())?;
                let report = es_embeddable(&tg, n)
                    .map_err(|e| Error::MalformedGraph(format!("graph {index}: {e}")))?;
                Ok(ScanRecord {
                    index,
                    graph6,
                    rank: report.rank,
                    feasible: report.feasible,
                })
            })
            .collect::<Result<_>>()?;
        for r in &records {
            summary.scanned += 1;
            summary.feasible += r.feasible as usize;
            sink(r)?;
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactnum::{int, rat};

    fn square() -> TwoDistGraph {
        // vertices in cyclic order; diagonals (0,2), (1,3) are the long pairs
        let g = SimpleGraph::from_edges(4, &[(0, 2), (1, 3)]).unwrap();
        TwoDistGraph::new(g, QuadExt::from_int(2)).unwrap()
    }

    #[test]
    fn square_embeds_in_the_plane_only() {
        assert!(!es_embeddable(&square(), 1).unwrap().feasible);
        let r = es_embeddable(&square(), 2).unwrap();
        assert_eq!(r.rank, 2);
        assert!(r.feasible);
    }

    #[test]
    fn empty_graph_is_a_simplex() {
        let g = TwoDistGraph::new(SimpleGraph::empty(10), QuadExt::from_int(3)).unwrap();
        let l = es_matrix(&g).unwrap();
        assert!(l.iter().enumerate().all(|(i, row)| row
            .iter()
            .enumerate()
            .all(|(j, v)| { *v == QuadExt::from_int(if i == j { 2 } else { 1 }) })));
        let r = es_embeddable(&g, 8).unwrap();
        assert_eq!(r.rank, 9);
        assert!(!r.feasible);
    }

    #[test]
    fn single_edge() {
        let b2: QuadExt = "(7+√33)/4".parse().unwrap();
        let g =
            TwoDistGraph::new(SimpleGraph::from_edges(2, &[(0, 1)]).unwrap(), b2.clone()).unwrap();
        assert_eq!(es_matrix(&g).unwrap(), vec![vec![b2.scale(&int(2))]]);
        assert!(es_matrix(&TwoDistGraph::new(SimpleGraph::empty(1), b2).unwrap()).is_err());
    }

    #[test]
    fn ratio_must_exceed_one() {
        let g = SimpleGraph::empty(3);
        assert_eq!(
            TwoDistGraph::new(g.clone(), QuadExt::one()),
            Err(Error::RatioNotAboveOne)
        );
        assert!(TwoDistGraph::new(g.clone(), QuadExt::rational(rat(1, 2))).is_err());
        let just_above: QuadExt = "-1+√5".parse().unwrap(); // ≈ 1.236
        assert!(TwoDistGraph::new(g, just_above).is_ok());
    }

    #[test]
    fn scan_preserves_order_across_batches() {
        let graphs: Vec<SimpleGraph> = (0..2500)
            .map(|k| {
                if k % 3 == 0 {
                    SimpleGraph::empty(4)
                } else {
                    square().graph().clone()
                }
            })
            .collect();
        let mut seen = Vec::new();
        let summary =
            scan_graph_corpus(graphs.into_iter().map(Ok), &QuadExt::from_int(2), 2, |r| {
                seen.push(r.clone());
                Ok(())
            })
            .unwrap();
        assert_eq!(summary.scanned, 2500);
        assert!(seen
            .iter()
            .enumerate()
            .all(|(k, r)| r.index == k && r.feasible == (k % 3 != 0)));
        assert_eq!(summary.feasible, 2500 - 834);
        let empty = scan_graph_corpus(Vec::new(), &QuadExt::from_int(2), 2, |_| Ok(())).unwrap();
        assert_eq!(empty, ScanSummary::default());
    }

    #[test]
    fn scan_stops_at_bad_record() {
        let items = vec![
            Ok(SimpleGraph::empty(3)),
            Err(Error::Graph6 {
                line: 2,
                reason: "x".into(),
            }),
        ];
        assert!(matches!(
            scan_graph_corpus(items, &QuadExt::from_int(2), 2, |_| Ok(())),
            Err(Error::Graph6 { line: 2, .. })
        ));
    }

    #[test]
    fn pentagon_from_coordinates() {
        let pts: Vec<Vec<f64>> = (0..5)
            .map(|k| {
                let a = 2.0 * std::f64::consts::PI * k as f64 / 5.0;
                vec![a.cos(), a.sin()]
            })
            .collect();
        let b2: QuadExt = "(3+√5)/2".parse().unwrap();
        let g = TwoDistGraph::from_points(&pts, b2, 1e-9).unwrap();
        assert_eq!(g.graph().edge_count(), 5);
        assert_eq!(es_embeddable(&g, 2).unwrap().rank, 2);
        assert!(TwoDistGraph::from_points(&pts, QuadExt::from_int(3), 1e-9).is_err());
    }
}
