//! The Fisher-type lower bound `b_{n,t} = 1 + dim H_t / c_{n,t}` and its
//! large-`t` limit.

use rayon::prelude::*;
use serde::{Deserialize, Serialize};
use statrs::function::gamma::gamma;

use crate::error::{Error, Result};
use crate::exactnum::{format_rational, rat, rational_to_f64, QuadExt, Rational};
use crate::orthopoly::{bessel_first_zero, bessel_j, q_min, BesselSpec, KernelSpec};

/// `b` counts as an integer when this close to one.
pub const INTEGRAL_TOL: f64 = 1e-9;

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct BoundReport {
    pub n: u32,
    pub t: u32,
    pub c: f64,
    pub b: f64,
    pub argmin: f64,
    pub integral: bool,
    #[serde(
        with = "opt_rational",
        default,
        skip_serializing_if = "Option::is_none"
    )]
    pub closed_form: Option<Rational>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub note: Option<String>,
}

mod opt_rational {
    use crate::exactnum::{format_rational, parse_rational, Rational};
    use serde::{de::Error as _, Deserialize, Deserializer, Serializer};

    pub fn serialize<S: Serializer>(q: &Option<Rational>, s: S) -> Result<S::Ok, S::Error> {
        match q {
            Some(q) => s.serialize_str(&format_rational(q)),
            None => s.serialize_none(),
        }
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> Result<Option<Rational>, D::Error> {
        Option::<String>::deserialize(d)?
            .map(|s| parse_rational(&s).map_err(D::Error::custom))
            .transpose()
    }
}

fn is_integral(v: f64) -> bool {
    (v - v.round()).abs() <= INTEGRAL_TOL
}

/// `b_{n,t}` from the minimum of `Q_{n,t}`.
pub fn fisher_bound(n: u32, t: u32) -> Result<BoundReport> {
    let spec = KernelSpec::new(n, t)?;
    let min = q_min(spec);
    let b = 1.0 + spec.dim() as f64 / min.c;
    let closed_form = match t {
        2 => Some(rat(n as i64, 1)),
        4 => Some(rat((n as i64 + 1) * (n as i64 + 2), 6)),
        _ => None,
    };
    let note = (t % 2 == 1)
        .then(|| "odd t: any antipodal pair is a design, so the minimum size is 2".to_string());
    Ok(BoundReport {
        n,
        t,
        c: min.c,
        b,
        argmin: min.argmin,
        integral: is_integral(b),
        closed_form,
        note,
    })
}

/// Row-major over `t`, then `n`, matching the printed table layout.
pub fn bound_table(ns: &[u32], ts: &[u32]) -> Result<Vec<BoundReport>> {
    if ns.is_empty() || ts.is_empty() {
        return Err(Error::OutOfRange(
            "bound table needs nonempty n and t ranges".into(),
        ));
    }
    let cells: Vec<(u32, u32)> = ts
        .iter()
        .flat_map(|&t| ns.iter().map(move |&n| (n, t)))
        .collect();
    cells.par_iter().map(|&(n, t)| fisher_bound(n, t)).collect()
}

/// `v` cut (not rounded) to `digits` decimals.
pub fn truncate(v: f64, digits: u32) -> f64 {
    let scale = 10f64.powi(digits as i32);
    // absorb representation error just below a cut point
    (v * scale + 1e-9).floor() / scale
}

/// Table display: integers print bare, other values are cut to `digits`
/// decimals and marked `..`. When the cut digits are all zero, more digits
/// are shown until a nonzero one appears (`27.004..`).
pub fn display_truncated(report: &BoundReport, digits: u32) -> String {
    if let Some(q) = &report.closed_form {
        if q.is_integer() {
            return format_rational(q);
        }
    } else if report.integral {
        return format!("{}", report.b.round());
    }
    let b = report
        .closed_form
        .as_ref()
        .map_or(report.b, rational_to_f64);
    let mut d = digits;
    loop {
        let cut = truncate(b, d);
        let frac = ((cut - cut.trunc()) * 10f64.powi(d as i32)).round();
        if frac != 0.0 || d >= digits + 6 {
            return format!("{cut:.prec$}..", prec = d as usize);
        }
        d += 1;
    }
}

/// CSV with header `n,t,c,b,b_printed,integral`; `c` and `b` at full precision.
pub fn table_to_csv(reports: &[BoundReport], digits: u32) -> String {
    let mut out = String::from("n,t,c,b,b_printed,integral\n");
    for r in reports {
        out.push_str(&format!(
            "{},{},{},{},{},{}\n",
            r.n,
            r.t,
            r.c,
            r.b,
            display_truncated(r, digits),
            r.integral
        ));
    }
    out
}

pub fn table_to_json(reports: &[BoundReport]) -> String {
    serde_json::to_string_pretty(reports).expect("reports serialize")
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct AsymptoteReport {
    pub n: u32,
    /// `j_{(n−1)/2, 1}`
    pub j1: f64,
    /// `F_n(j1)` with `F_n(z) = (z/2)^{−(n−3)/2}·J_{(n−3)/2}(z)`
    pub fvalue: f64,
    /// `1 − 1/F_n(j1)`
    pub limit: f64,
    /// `1 − 1/(Γ((n−1)/2)·F_n(j1))`, the limit of `b_{n,t}` under Mehler–Heine
    pub gamma_corrected_limit: f64,
    /// `n(n+1)/2`, the bound on equiangular lines in ℝⁿ
    pub absolute_bound: u64,
}

pub fn asymptotic_bound(n: u32) -> Result<AsymptoteReport> {
    if n < 3 {
        return Err(Error::OutOfRange(format!("asymptote needs n ≥ 3, got {n}")));
    }
    let alpha = (n as f64 - 3.0) / 2.0;
    let j1 = bessel_first_zero(BesselSpec::new(alpha + 1.0)?)?;
    let fvalue = (j1 / 2.0).powf(-alpha) * bessel_j(BesselSpec::new(alpha)?, j1)?;
    Ok(AsymptoteReport {
        n,
        j1,
        fvalue,
        limit: 1.0 - 1.0 / fvalue,
        gamma_corrected_limit: 1.0 - 1.0 / (gamma(alpha + 1.0) * fvalue),
        absolute_bound: n as u64 * (n as u64 + 1) / 2,
    })
}

/// The inner product `√(3/(n+4))` of a tight harmonic index 4-design.
pub fn tight_inner_product(n: u32) -> Result<QuadExt> {
    if n < 2 {
        return Err(Error::OutOfRange(format!(
            "tight inner product needs n ≥ 2, got {n}"
        )));
    }
    QuadExt::sqrt_rational(&rat(3, n as i64 + 4))
}
