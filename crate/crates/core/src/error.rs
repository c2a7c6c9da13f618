use thiserror::Error;

#[derive(Debug, Error)]
pub enum Error {
    #[error("{family}: parameter out of range, need {bound}")]
    ParameterOutOfRange {
        family: &'static str,
        bound: &'static str,
    },

    #[error("unknown vertex id {vertex} (graph has {vertex_count} vertices)")]
    UnknownVertex { vertex: usize, vertex_count: usize },

    #[error("invalid edge ({u}, {v}): {reason}")]
    InvalidEdge {
        u: usize,
        v: usize,
        reason: &'static str,
    },

    #[error("pattern has {got} entries, graph has {expected} vertices")]
    LengthMismatch { expected: usize, got: usize },

    #[error("insufficient even labels: need {required}, {available} available")]
    InsufficientEvenLabels { required: usize, available: usize },

    #[error("insufficient odd labels: need {required}, {available} available")]
    InsufficientOddLabels { required: usize, available: usize },

    #[error("invalid labeling: {0}")]
    InvalidLabeling(String),

    #[error("graph has {vertices} vertices, search cap is {cap}")]
    GraphTooLarge { vertices: usize, cap: usize },

    #[error("malformed JSON: {0}")]
    Json(#[from] serde_json::Error),

    #[error("schema violation at {field}: {reason}")]
    Schema { field: String, reason: String },
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
