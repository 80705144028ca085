//! Brass transversal instances, the N + 4 baseline, and the exponent table.

mod brass;
mod table;

pub use brass::{verify_brass, BrassInstance};
pub use table::{family_for, format_millis, format_table, m_of_n, table1, tau_millis, ExponentRow, Family};

use crate::constructions::{collapsed_star_instances, pencil_even, pencil_odd_instance};
use crate::error::{Error, Result};
use crate::projgeom::ProjLine;

/// Parallels x = i (0 < i < N) plus the line at infinity; transversals
/// y = j (1 ≤ j ≤ N), y = x, y = x + 1, x + y = N and x + y = N + 1.
pub fn baseline_n_plus_4(n: u32) -> Result<BrassInstance> {
    if n < 3 {
        return Err(Error::Precondition(format!("baseline needs N ≥ 3, got {n}")));
    }
    let n = n as i64;
    let line = |v: [i64; 3]| ProjLine::from_integers(1, v);
    let mut parallels = (1..n).map(|i| line([1, 0, -i])).collect::<Result<Vec<_>>>()?;
    parallels.push(ProjLine::infinity(1));
    let mut transversals = (1..=n).map(|j| line([0, 1, -j])).collect::<Result<Vec<_>>>()?;
    for v in [[1, -1, 0], [1, -1, 1], [1, 1, -n], [1, 1, -n - 1]] {
        transversals.push(line(v)?);
    }
    let mut b = BrassInstance::new(parallels, transversals)?;
    b.set_meta("family", "baseline");
    Ok(b)
}

/// An instance with N parallels and M(N) transversals from the family that
/// achieves it.
pub fn witness(n: u32) -> Result<BrassInstance> {
    let m = m_of_n(n)?;
    let mut b = match n % 12 {
        0 => collapsed_star_instances(n / 12)?.0,
        11 => {
            let mut b = collapsed_star_instances((n + 1) / 12)?.1;
            b.set_meta(
                "open_question",
                "the spare parallel l_{N+1} is unused; whether it helps asymptotically is open",
            );
            b
        }
        r if r % 2 == 1 => pencil_odd_instance(n)?,
        _ => pencil_even(n)?,
    };
    if b.n() != n as usize || b.m() != m as usize {
        return Err(Error::Verification(format!(
            "witness({n}) has N = {}, M = {}, expected M = {m}",
            b.n(),
            b.m()
        )));
    }
    if !verify_brass(&b).0 {
        return Err(Error::Verification(format!("witness({n}) exceeds N points on a parallel")));
    }
    b.set_meta("family", family_for(n).name());
    Ok(b)
}
