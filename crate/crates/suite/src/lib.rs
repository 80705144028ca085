//! One PASS/FAIL line per acceptance criterion.
//!
//! Lines go straight to the stderr handle, which the test harness does not
//! capture, so they appear in a plain `cargo test` run.

use std::io::Write;

pub type Check = Result<String, String>;

/// Fails with `msg` unless `cond` holds.
pub fn ensure(cond: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

/// Prints the verdict line and panics on failure.
pub fn verdict(id: &str, name: &str, outcome: Check) {
    let line = match &outcome {
        Ok(detail) => format!("criterion {id:>3} PASS {name}: {detail}"),
        Err(why) => format!("criterion {id:>3} FAIL {name}: {why}"),
    };
    let _ = writeln!(std::io::stderr(), "{line}");
    if let Err(why) = outcome {
        panic!("criterion {id} ({name}) failed: {why}");
    }
}
