use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    /// A letter refers to a generator outside the ambient alphabet.
    #[error("letter {letter} is outside the alphabet of rank {rank}")]
    Alphabet { letter: i64, rank: usize },

    #[error("operation requires a connected graph")]
    Disconnected,

    #[error("ambient rank mismatch: {left} vs {right}")]
    RankMismatch { left: usize, right: usize },

    /// A generator of the would-be subgroup is not a member of the supergroup.
    #[error("not a subgroup: generator {word} is not a member")]
    NotASubgroup { word: String },

    #[error("graph is not a folded core graph: {0}")]
    NotCore(&'static str),

    #[error("rejection budget of {attempts} attempts exhausted")]
    SamplingFailure { attempts: usize },

    #[error("sampling failed at parameter {param}: {source}")]
    Experiment {
        param: usize,
        #[source]
        source: Box<Error>,
    },

    #[error("line {line}: {message}")]
    Format { line: usize, message: String },

    #[error("invalid parameter: {0}")]
    InvalidParameter(String),
}

impl Error {
    pub(crate) fn format(line: usize, message: impl Into<String>) -> Self {
        Error::Format {
            line,
            message: message.into(),
        }
    }
}
