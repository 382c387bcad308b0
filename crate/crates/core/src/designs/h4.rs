use super::PointSet;
use crate::error::{Error, Result};

/// A basis of the harmonic quartics on ℝ³.
pub const H4_BASIS: [&str; 9] = [
    "x^3y - xy^3",
    "x^3z - 3xy^2z",
    "3x^2yz - y^3z",
    "x^4 - 6x^2y^2 + y^4",
    "4xz^3 - 3x^3z - 3xy^2z",
    "4yz^3 - 3x^2yz - 3y^3z",
    "6xyz^2 - x^3y - xy^3",
    "6x^2z^2 - x^4 - 6y^2z^2 + y^4",
    "8z^4 - 24x^2z^2 - 24y^2z^2 + 3x^4 + 6x^2y^2 + 3y^4",
];

/// The fifth element as it circulates in print, `4xz³ − 3x³z − xy²z`.
/// Its Laplacian is `4xz`, so it is not harmonic; [`H4_BASIS`] uses the
/// coefficient `−3` on `xy²z`, mirroring the sixth element.
pub const H4_PRINTED_FIFTH: &str = "4xz^3 - 3x^3z - xy^2z";

pub fn eval_h4_basis(p: &[f64]) -> [f64; 9] {
    let (x, y, z) = (p[0], p[1], p[2]);
    let (x2, y2, z2) = (x * x, y * y, z * z);
    [
        x * x2 * y - x * y * y2,
        x * x2 * z - 3.0 * x * y2 * z,
        3.0 * x2 * y * z - y * y2 * z,
        x2 * x2 - 6.0 * x2 * y2 + y2 * y2,
        4.0 * x * z * z2 - 3.0 * x * x2 * z - 3.0 * x * y2 * z,
        4.0 * y * z * z2 - 3.0 * x2 * y * z - 3.0 * y * y2 * z,
        6.0 * x * y * z2 - x * x2 * y - x * y * y2,
        6.0 * x2 * z2 - x2 * x2 - 6.0 * y2 * z2 + y2 * y2,
        8.0 * z2 * z2 - 24.0 * x2 * z2 - 24.0 * y2 * z2
            + 3.0 * x2 * x2
            + 6.0 * x2 * y2
            + 3.0 * y2 * y2,
    ]
}

pub fn eval_h4_printed_fifth(p: &[f64]) -> f64 {
    let (x, y, z) = (p[0], p[1], p[2]);
    4.0 * x * z * z * z - 3.0 * x * x * x * z - x * y * y * z
}

/// `Σ_{x∈X} h(x)` for each element of [`H4_BASIS`].
pub fn eval_h4_basis_sum(x: &PointSet) -> Result<[f64; 9]> {
    if x.dim() != 3 {
        return Err(Error::Unsupported(format!(
            "quartic basis lives on S², got dimension {}",
            x.dim()
        )));
    }
    let mut acc = [0.0; 9];
    for p in x.points() {
        for (a, v) in acc.iter_mut().zip(eval_h4_basis(p)) {
            *a += v;
        }
    }
    Ok(acc)
}
