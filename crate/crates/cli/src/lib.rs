//! Batch commands behind the `domsub` binary. Every command returns a
//! serializable report; the binary prints it as JSON and maps failures to
//! exit codes.

use std::fmt;
use std::time::Instant;

use domsub::Error;

pub mod classify;
pub mod reduce;
pub mod report;
pub mod suite;

pub use report::*;

/// Process exit codes.
pub mod exit {
    pub const OK: u8 = 0;
    pub const VIOLATION: u8 = 1;
    pub const INPUT: u8 = 2;
    pub const PRECONDITION: u8 = 3;
}

/// A failure carrying the exit code it maps to.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CliError {
    pub code: u8,
    pub message: String,
}

impl CliError {
    pub fn new(code: u8, message: impl Into<String>) -> Self {
        CliError {
            code,
            message: message.into(),
        }
    }
}

impl fmt::Display for CliError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.message)
    }
}

impl std::error::Error for CliError {}

impl From<Error> for CliError {
    fn from(e: Error) -> Self {
        let code = match e {
            Error::Violation(_) | Error::Timeout(_) => exit::VIOLATION,
            Error::NotConnected
            | Error::NotATree
            | Error::TooSmall { .. }
            | Error::Edgeless
            | Error::Preprocess(_)
            | Error::CapExceeded { .. } => exit::PRECONDITION,
            _ => exit::INPUT,
        };
        CliError::new(code, e.to_string())
    }
}

pub type CliResult<T> = std::result::Result<T, CliError>;

pub fn read_input(path: &std::path::Path) -> CliResult<String> {
    std::fs::read_to_string(path)
        .map_err(|e| CliError::new(exit::INPUT, format!("{}: {e}", path.display())))
}

pub fn read_graph(path: &std::path::Path) -> CliResult<domsub::Graph> {
    let text = read_input(path)?;
    domsub::Graph::parse_edge_list(&text)
        .map_err(|e| CliError::new(exit::INPUT, format!("{}: {e}", path.display())))
}

pub(crate) fn millis_since(start: Instant) -> f64 {
    start.elapsed().as_secs_f64() * 1000.0
}

/// `gamma` command.
pub fn gamma(g: &domsub::Graph) -> GammaReport {
    let start = Instant::now();
    let (method, r) = match domsub::gamma_tree(g) {
        Ok(r) => (Method::TreeDp, r),
        Err(_) => (Method::BranchAndBound, domsub::gamma(g)),
    };
    GammaReport {
        n: g.n(),
        m: g.m(),
        gamma: r.gamma,
        witness: r.witness.vertices().to_vec(),
        method,
        timings: GammaTimings {
            total_ms: millis_since(start),
        },
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn error_codes() {
        assert_eq!(CliError::from(Error::NotConnected).code, exit::PRECONDITION);
        assert_eq!(CliError::from(Error::Parse { line: 3, message: "x".into() }).code, exit::INPUT);
        assert_eq!(CliError::from(Error::Violation("x".into())).code, exit::VIOLATION);
        assert_eq!(CliError::from(Error::Preprocess("x".into())).code, exit::PRECONDITION);
    }

    #[test]
    fn sd_field_encoding() {
        let exact: SdField = domsub::SdValue::Exact(2).into();
        let over: SdField = domsub::SdValue::ExceedsBudget.into();
        assert_eq!(serde_json::to_string(&exact).unwrap(), "2");
        assert_eq!(serde_json::to_string(&over).unwrap(), "\"exceeds-budget\"");
        assert_eq!(serde_json::from_str::<SdField>("\"exceeds-budget\"").unwrap(), over);
        assert!(serde_json::from_str::<SdField>("\"other\"").is_err());
    }
}
