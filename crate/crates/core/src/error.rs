use std::fmt;

pub type Result<T> = std::result::Result<T, Error>;

/// Errors produced anywhere in the engine.
#[derive(Debug, thiserror::Error)]
pub enum Error {
    /// A resource file (lexicon, rules, graph, schema) failed to parse.
    #[error("parse error at line {line}: {msg}")]
    Parse { line: usize, msg: String },

    /// Inflection could not generate surface forms for an entry.
    #[error("inflection error: {0}")]
    Inflect(String),

    /// A graph set or compiled automaton violates a structural requirement.
    #[error("validation error: {0}")]
    Validation(String),

    /// Tag emissions along an accepting path were malformed.
    #[error("annotation error in graph {graph}: {msg}")]
    Annotation { graph: String, msg: String },

    /// Inline-tagged text could not be parsed back into annotations.
    #[error("tag error at offset {offset}: {msg}")]
    Tag { offset: usize, msg: String },

    /// Gold and predicted documents do not line up.
    #[error("alignment error: {0}")]
    Alignment(String),

    /// Call flattening was asked for an impossible expansion.
    #[error("flatten error: {0}")]
    Flatten(String),

    /// A per-document failure inside a corpus run, tagged with its line number.
    #[error("line {line}: {source}")]
    Corpus {
        line: usize,
        #[source]
        source: Box<Error>,
    },

    #[error(transparent)]
    Io(#[from] std::io::Error),
}

impl Error {
    pub fn parse(line: usize, msg: impl fmt::Display) -> Self {
        Error::Parse {
            line,
            msg: msg.to_string(),
        }
    }

    pub fn at_line(self, line: usize) -> Self {
        Error::Corpus {
            line,
            source: Box::new(self),
        }
    }
}
