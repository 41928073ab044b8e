use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum CliError {
    #[error("{0}")]
    Usage(String),
    #[error("parse error at line {line}, column {column}: {message}")]
    Parse {
        line: usize,
        column: usize,
        message: String,
    },
    #[error("cannot access {path}: {message}")]
    Io { path: String, message: String },
}

/// Process exit codes.
pub mod exit {
    pub const OK: i32 = 0;
    pub const VIOLATION: i32 = 1;
    pub const USAGE: i32 = 2;
    pub const CAPPED: i32 = 3;

    /// Violations win over skips; skips count only when `skips_fail`.
    pub fn outcome(violations: usize, skips: usize, skips_fail: bool) -> i32 {
        if violations > 0 {
            VIOLATION
        } else if skips > 0 && skips_fail {
            CAPPED
        } else {
            OK
        }
    }
}

#[cfg(test)]
mod tests {
    use super::exit::*;

    #[test]
    fn exit_code_precedence() {
        assert_eq!(outcome(0, 0, true), OK);
        assert_eq!(outcome(0, 4, false), OK);
        assert_eq!(outcome(0, 4, true), CAPPED);
        assert_eq!(outcome(2, 4, true), VIOLATION);
        assert_eq!(outcome(1, 0, false), VIOLATION);
    }
}
