use std::fmt;

use cgrefine::Error;

/// Why a command stopped; each kind has a fixed exit code.
#[derive(Debug)]
pub enum Failure {
    /// Bad flags or an input the command does not accept (exit 2).
    Usage(String),
    /// Unreadable or invalid files, write errors, internal errors (exit 1).
    Io(String),
    /// An identity or census claim failed (exit 3).
    Violation(String),
}

impl Failure {
    pub fn code(&self) -> u8 {
        match self {
            Failure::Io(_) => 1,
            Failure::Usage(_) => 2,
            Failure::Violation(_) => 3,
        }
    }
}

impl fmt::Display for Failure {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Failure::Usage(m) => write!(f, "usage: {m}"),
            Failure::Io(m) => f.write_str(m),
            Failure::Violation(m) => write!(f, "identity violation: {m}"),
        }
    }
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        match e {
            Error::Argument(m) => Failure::Usage(m),
            Error::InvariantViolation(m) => Failure::Violation(m),
            e @ (Error::Precondition(_) | Error::Internal(_) | Error::Format(_)) => {
                Failure::Io(e.to_string())
            }
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn exit_codes_follow_error_kinds() {
        let code = |e: Error| Failure::from(e).code();
        assert_eq!(code(Error::Argument("x".into())), 2);
        assert_eq!(code(Error::InvariantViolation("x".into())), 3);
        assert_eq!(code(Error::Format("x".into())), 1);
        assert_eq!(code(Error::Internal("x".into())), 1);
        assert_eq!(code(Error::Precondition("x".into())), 1);
    }
}
