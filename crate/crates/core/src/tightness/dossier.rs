use serde::{Deserialize, Serialize};

use super::{lrs_check, musin_reduce};
use crate::bounds::tight_inner_product;
use crate::error::{Error, Result};
use crate::exactnum::{format_rational, rat, Rational};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Criterion {
    /// `b_{n,4} = (n+1)(n+2)/6` must be an integer.
    Integrality,
    /// `b/2 + 1` equiangular lines must fit under `n(n+1)/2`.
    AbsoluteBound,
    /// For `α > 1/2` the reduced set has `b − 1` points at one positive
    /// inner product; its Gram matrix has full rank, so `b − 1 ≤ n − 1`.
    MusinSingleAngle,
    /// Exhaustive two-distance graph searches with the rank test.
    EinhornSchoenberg,
    /// `|X| > 2n + 3` forces `(1+α)/(2α)` to be an integer.
    LarmanRogersSeidel,
    /// Known maxima of equiangular line systems at angle `1/p`.
    EquiangularMaximum,
    /// A tight design is known to exist.
    Existence,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Status {
    Pass,
    Fail,
    Inapplicable,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Evidence {
    Computed,
    Cited,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct Verdict {
    pub criterion: Criterion,
    pub status: Status,
    pub evidence: Evidence,
    pub detail: String,
}

/// Maximum number of equiangular lines at angle `arccos(1/p)` in `ℝ^{3p²−4}`.
pub struct LineCitation {
    pub p: u64,
    pub max_lines: u64,
    pub source: &'static str,
}

pub const EQUIANGULAR_CITATIONS: [LineCitation; 4] = [
    LineCitation {
        p: 3,
        max_lines: 44,
        source: "Lemmens–Seidel, equiangular lines at angle 1/3",
    },
    LineCitation {
        p: 5,
        max_lines: 416,
        source: "W.-H. Yu, semidefinite programming (private communication)",
    },
    LineCitation {
        p: 7,
        max_lines: 1506,
        source: "W.-H. Yu, semidefinite programming (private communication)",
    },
    LineCitation {
        p: 9,
        max_lines: 3952,
        source: "W.-H. Yu, semidefinite programming (private communication)",
    },
];

/// Dimensions excluded by exhaustive graph searches that are not rerun here.
pub const ES_SEARCH_CITATIONS: [(u32, &str); 3] = [
    (7, "no 10-point two-distance set in ℝ⁷ with b² = (7+√33)/4 (60 feasible 9-point graphs, none extend)"),
    (8, "no 10-point two-distance set in ℝ⁸ with b² = 3 (all 10-vertex graphs)"),
    (10, "latitude split of the reduced 21-point set; no 10-point two-distance set in ℝ⁸ (all 10-vertex graphs)"),
];

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct TightnessDossier {
    pub n: u32,
    pub t: u32,
    #[serde(with = "crate::exactnum::serde_rational")]
    pub b: Rational,
    pub integral: bool,
    pub alpha: crate::exactnum::QuadExt,
    pub lrs_k: Option<u64>,
    pub p: Option<u64>,
    pub absolute_bound: u64,
    /// `b/2 + 1` when `b` is an integer.
    pub required_lines: Option<u64>,
    pub verdicts: Vec<Verdict>,
    /// Some necessary condition fails.
    pub excluded: bool,
}

impl TightnessDossier {
    pub fn verdict(&self, criterion: Criterion) -> Option<&Verdict> {
        self.verdicts.iter().find(|v| v.criterion == criterion)
    }
}

fn verdict(criterion: Criterion, status: Status, evidence: Evidence, detail: String) -> Verdict {
    Verdict {
        criterion,
        status,
        evidence,
        detail,
    }
}

/// Necessary conditions for a tight harmonic index 4-design on `S^{n-1}`.
pub fn tightness_dossier(n: u32) -> Result<TightnessDossier> {
    use Criterion::*;
    use Evidence::*;
    use Status::*;
    if n < 2 {
        return Err(Error::OutOfRange(format!("dossier needs n ≥ 2, got {n}")));
    }
    let ni = n as i64;
    let b = rat((ni + 1) * (ni + 2), 6);
    let integral = b.is_integer();
    let alpha = tight_inner_product(n)?;
    let lrs_k = lrs_check(&alpha)?;
    let p = lrs_k.map(|k| 2 * k - 1);
    let absolute_bound = n as u64 * (n as u64 + 1) / 2;
    let size = integral.then(|| ((ni + 1) * (ni + 2) / 6) as u64);
    let required_lines = size.map(|s| s / 2 + 1);
    let mut verdicts = Vec::new();

    verdicts.push(verdict(
        Integrality,
        if integral { Pass } else { Fail },
        Computed,
        format!("b = {}", format_rational(&b)),
    ));

    verdicts.push(match required_lines {
        Some(lines) => verdict(
            AbsoluteBound,
            if lines <= absolute_bound { Pass } else { Fail },
            Computed,
            format!("{lines} lines needed, at most {absolute_bound} exist"),
        ),
        None => verdict(
            AbsoluteBound,
            Inapplicable,
            Computed,
            "b is not an integer".into(),
        ),
    });

    let musin = musin_reduce(&alpha)?;
    verdicts.push(match size {
        Some(s) if musin.only_first => verdict(
            MusinSingleAngle,
            if s <= n as u64 { Pass } else { Fail },
            Computed,
            format!(
                "{} points on S^{} at inner product {} need rank {} ≤ {}",
                s - 1,
                n - 2,
                musin.first,
                s - 1,
                n - 1
            ),
        ),
        Some(_) => verdict(
            MusinSingleAngle,
            Inapplicable,
            Computed,
            format!("α = {alpha} ≤ 1/2"),
        ),
        None => verdict(
            MusinSingleAngle,
            Inapplicable,
            Computed,
            "b is not an integer".into(),
        ),
    });

    if let Some((_, text)) = ES_SEARCH_CITATIONS.iter().find(|(m, _)| *m == n) {
        verdicts.push(verdict(EinhornSchoenberg, Fail, Cited, (*text).into()));
    }

    // |X| = b > 2n + 3 with b rational
    let lrs_applies = b > rat(2 * ni + 3, 1);
    verdicts.push(if lrs_applies {
        verdict(
            LarmanRogersSeidel,
            if lrs_k.is_some() { Pass } else { Fail },
            Computed,
            match (lrs_k, p) {
                (Some(k), Some(p)) => format!("k = {k}, p = {p}, n = 3p² − 4"),
                _ => format!("(1+α)/(2α) with α = {alpha} is not an integer"),
            },
        )
    } else {
        verdict(
            LarmanRogersSeidel,
            Inapplicable,
            Computed,
            format!("b ≤ 2n + 3 = {}", 2 * n + 3),
        )
    });

    if let (Some(p), Some(lines)) = (p, required_lines) {
        if lrs_applies {
            if let Some(c) = EQUIANGULAR_CITATIONS.iter().find(|c| c.p == p) {
                verdicts.push(verdict(
                    EquiangularMaximum,
                    if lines <= c.max_lines { Pass } else { Fail },
                    Cited,
                    format!(
                        "{lines} lines needed at angle 1/{p}, at most {} ({})",
                        c.max_lines, c.source
                    ),
                ));
            }
        }
    }

    if n == 2 {
        verdicts.push(verdict(
            Existence,
            Pass,
            Computed,
            "two unit vectors at angle π/4 on S¹".into(),
        ));
    }

    let excluded = verdicts.iter().any(|v| v.status == Fail);
    Ok(TightnessDossier {
        n,
        t: 4,
        b,
        integral,
        alpha,
        lrs_k,
        p,
        absolute_bound,
        required_lines,
        verdicts,
        excluded,
    })
}
