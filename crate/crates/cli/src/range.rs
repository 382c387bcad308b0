use std::str::FromStr;

/// Inclusive integer list: `5`, `3..10`, or `3,5,8`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IntRange(pub Vec<u32>);

impl FromStr for IntRange {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, String> {
        let num = |v: &str| {
            v.trim()
                .parse::<u32>()
                .map_err(|_| format!("bad integer {v:?} in {s:?}"))
        };
        let values = if let Some((lo, hi)) = s.split_once("..") {
            let hi = hi.strip_prefix('=').unwrap_or(hi);
            let (lo, hi) = (num(lo)?, num(hi)?);
            if lo > hi {
                return Err(format!("empty range {s:?}"));
            }
            (lo..=hi).collect()
        } else {
            s.split(',').map(num).collect::<Result<Vec<_>, _>>()?
        };
        Ok(IntRange(values))
    }
}
