use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum BraidError {
    #[error("at token {position}: unknown token `{token}`")]
    UnknownToken { position: usize, token: String },

    #[error("at token {position}: index {index} out of range for {strands} strands (allowed {min}..={max})")]
    IndexOutOfRange {
        position: usize,
        index: usize,
        strands: usize,
        min: usize,
        max: usize,
    },

    #[error("at token {position}: `{token}` is not allowed in the {dialect} dialect")]
    IllegalToken {
        position: usize,
        token: String,
        dialect: String,
    },

    #[error("at token {position}: unknown label {label} (label group has {order} elements)")]
    UnknownLabel {
        position: usize,
        label: usize,
        order: usize,
    },

    #[error("strand count must be at least {min}, got {got}")]
    TooFewStrands { min: usize, got: usize },

    #[error("dialect mismatch: expected {expected}, got {got}")]
    DialectMismatch { expected: String, got: String },

    #[error("strand count mismatch: expected {expected}, got {got}")]
    StrandMismatch { expected: usize, got: usize },

    #[error("word is not good: strand {strand} carries {dots} dots")]
    NotGood { strand: usize, dots: u32 },

    #[error("invalid group table: {0}")]
    InvalidGroup(String),

    #[error("unknown dialect `{0}`")]
    UnknownDialect(String),

    #[error("inadmissible label triple ({0}, {1}, {2})")]
    InadmissibleTriple(usize, usize, usize),

    #[error("trace error: {0}")]
    Trace(String),

    #[error("{0}")]
    Usage(String),
}

pub type Result<T> = std::result::Result<T, BraidError>;

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn messages_are_single_line_and_positioned() {
        let e = BraidError::IllegalToken { position: 2, token: "d2".into(), dialect: "z2".into() };
        assert_eq!(e.to_string(), "at token 2: `d2` is not allowed in the z2 dialect");
        let e = BraidError::NotGood { strand: 1, dots: 1 };
        assert!(!e.to_string().contains('\n'));
    }
}
