use num_bigint::BigUint;
use serde::Serialize;

use crate::error::{Error, Result};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Family {
    PencilOdd,
    PencilEven,
    CollapsedStar,
}

impl Family {
    pub fn name(self) -> &'static str {
        match self {
            Family::PencilOdd => "pencil_odd",
            Family::PencilEven => "pencil_even",
            Family::CollapsedStar => "collapsed_star",
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ExponentRow {
    #[serde(rename = "N")]
    pub n: u32,
    #[serde(rename = "M")]
    pub m: u32,
    /// log M / log N truncated to three decimals, e.g. "1.489".
    pub tau: String,
    pub family: Family,
}

pub fn m_of_n(n: u32) -> Result<u32> {
    if n < 5 {
        return Err(Error::Precondition(format!("M(N) is defined for N ≥ 5, got {n}")));
    }
    Ok(match n % 12 {
        11 => 2 * n + 3,
        0 | 1 | 3 | 5 | 7 | 9 => 2 * n + 1,
        _ => 2 * n,
    })
}

pub fn family_for(n: u32) -> Family {
    match n % 12 {
        0 | 11 => Family::CollapsedStar,
        r if r % 2 == 1 => Family::PencilOdd,
        _ => Family::PencilEven,
    }
}

/// floor(1000 · log_N M), decided exactly: the largest k with N^k ≤ M^1000.
pub fn tau_millis(n: u32, m: u32) -> u32 {
    let target = BigUint::from(m).pow(1000);
    let base = BigUint::from(n);
    let estimate = (1000.0 * (m as f64).ln() / (n as f64).ln()).floor() as u32;
    let mut k = estimate.saturating_sub(2);
    while base.pow(k + 1) <= target {
        k += 1;
    }
    while base.pow(k) > target {
        k -= 1;
    }
    k
}

pub fn format_millis(k: u32) -> String {
    format!("{}.{:03}", k / 1000, k % 1000)
}

pub fn table1(from: u32, to: u32) -> Result<Vec<ExponentRow>> {
    if from < 5 || from > to {
        return Err(Error::Precondition(format!(
            "table range needs 5 ≤ from ≤ to, got {from}..{to}"
        )));
    }
    (from..=to)
        .map(|n| {
            let m = m_of_n(n)?;
            Ok(ExponentRow {
                n,
                m,
                tau: format_millis(tau_millis(n, m)),
                family: family_for(n),
            })
        })
        .collect()
}

pub fn format_table(rows: &[ExponentRow]) -> String {
    let mut out = format!("{:>4} {:>4} {:>6}  {}\n", "N", "M", "tau", "family");
    for r in rows {
        out.push_str(&format!(
            "{:>4} {:>4} {:>6}  {}\n",
            r.n,
            r.m,
            r.tau,
            r.family.name()
        ));
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn case_split() {
        assert_eq!(m_of_n(11).unwrap(), 25);
        assert_eq!(m_of_n(6).unwrap(), 12);
        assert_eq!(m_of_n(24).unwrap(), 49);
        assert!(m_of_n(4).is_err());
    }

    #[test]
    fn truncation_not_rounding() {
        // log_5 11 = 1.48989…
        assert_eq!(format_millis(tau_millis(5, 11)), "1.489");
        // exact powers land on the boundary: log_4 8 = 1.5
        assert_eq!(format_millis(tau_millis(4, 8)), "1.500");
        assert_eq!(format_millis(tau_millis(8, 16)), "1.333");
    }
}
