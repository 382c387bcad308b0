//! Exact feasibility tests for tight harmonic index 4-designs: two-distance
//! graphs and the Einhorn–Schoenberg rank test, the Musin reduction, the
//! Larman–Rogers–Seidel integrality condition, and per-dimension dossiers.

mod dossier;
mod es;
mod graph;
mod reduce;

pub use dossier::{
    tightness_dossier, Criterion, Evidence, LineCitation, Status, TightnessDossier, Verdict,
    EQUIANGULAR_CITATIONS, ES_SEARCH_CITATIONS,
};
pub use es::{
    es_embeddable, es_matrix, scan_graph_corpus, EmbeddingReport, ScanRecord, ScanSummary,
    TwoDistGraph, SCAN_CHUNK,
};
pub use graph::{parse_graph6_lines, Graph6Reader, SimpleGraph, MAX_ORDER};
pub use reduce::{lrs_check, musin_reduce, MusinReduction};
