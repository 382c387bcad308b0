use std::cmp::Ordering;

use num_traits::ToPrimitive;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::exactnum::{rat, QuadExt};

fn check_unit_interval(alpha: &QuadExt) -> Result<()> {
    let below_one = QuadExt::one().try_sub(alpha)?.is_positive();
    if !alpha.is_positive() || !below_one {
        return Err(Error::OutOfRange(format!(
            "α = {alpha} must lie strictly between 0 and 1"
        )));
    }
    Ok(())
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct MusinReduction {
    /// `α/(1+α)`
    pub first: QuadExt,
    /// `−α/(1−α)`
    pub second: QuadExt,
    /// `α > 1/2`: the reduced set may be taken with the single value `first`.
    pub only_first: bool,
    /// `α = 1/2`: `second` is `−1` (antipodal pairs).
    pub degenerate: bool,
}

/// One-point-smaller reduction of a set with inner products `±α` on
/// `S^{n-1}` to a set on `S^{n-2}`.
pub fn musin_reduce(alpha: &QuadExt) -> Result<MusinReduction> {
    check_unit_interval(alpha)?;
    let one = QuadExt::one();
    let first = alpha.try_div(&one.try_add(alpha)?)?;
    let second = (-alpha).try_div(&one.try_sub(alpha)?)?;
    let half = QuadExt::rational(rat(1, 2));
    let cmp = alpha.try_sub(&half)?.signum();
    Ok(MusinReduction {
        first,
        second,
        only_first: cmp == Ordering::Greater,
        degenerate: cmp == Ordering::Equal,
    })
}

/// `k = (1+α)/(2α)` when it is an integer `≥ 2`; decided exactly.
pub fn lrs_check(alpha: &QuadExt) -> Result<Option<u64>> {
    check_unit_interval(alpha)?;
    let k = QuadExt::one()
        .try_add(alpha)?
        .try_div(&alpha.scale(&rat(2, 1)))?;
    Ok(k.as_integer().and_then(|k| k.to_u64()).filter(|&k| k >= 2))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactnum::int;

    fn q(s: &str) -> QuadExt {
        s.parse().unwrap()
    }

    #[test]
    fn reductions() {
        let r = musin_reduce(&q("√6/4")).unwrap();
        assert_eq!(r.first, q("(2√6-3)/5"));
        assert!(r.only_first && !r.degenerate);
        let r = musin_reduce(&q("1/3")).unwrap();
        assert_eq!((r.first, r.second), (q("1/4"), q("-1/2")));
        assert!(!r.only_first);
        let r = musin_reduce(&q("1/2")).unwrap();
        assert_eq!((r.first, r.second), (q("1/3"), q("-1")));
        assert!(r.degenerate && !r.only_first);
        for bad in ["0", "1", "-1/3", "3/2", "√2"] {
            assert!(musin_reduce(&q(bad)).is_err(), "{bad}");
        }
    }

    #[test]
    fn lrs_integers() {
        assert_eq!(lrs_check(&q("1/3")).unwrap(), Some(2));
        assert_eq!(lrs_check(&q("1/5")).unwrap(), Some(3));
        assert_eq!(lrs_check(&q("√6/4")).unwrap(), None);
        assert_eq!(lrs_check(&q("2/5")).unwrap(), None);
        // k = 1 would need α = 1
        assert!(lrs_check(&QuadExt::rational(int(1))).is_err());
    }
}
