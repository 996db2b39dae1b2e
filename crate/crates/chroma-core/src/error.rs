use thiserror::Error;

/// Crate-wide error type.
#[derive(Debug, Clone, Error)]
pub enum Error {
    /// A precondition on the inputs was violated.
    #[error("invalid input: {0}")]
    InvalidInput(String),

    /// An exact computation was requested beyond its desk-scale cap.
    #[error("{op}: {n} vertices exceeds the desk-scale cap of {cap}")]
    Capacity {
        op: &'static str,
        n: usize,
        cap: usize,
    },

    /// graph6 decoding failed; `offset` is the byte position in the record.
    #[error("graph6 parse error at byte {offset}: {reason}")]
    Graph6 { offset: usize, reason: String },

    /// The input contains a forbidden induced pattern; the certificate names
    /// the pattern and the host vertices, in pattern-vertex order.
    #[error("forbidden induced {pattern}: {vertices:?}")]
    ForbiddenPattern {
        pattern: String,
        vertices: Vec<usize>,
    },

    /// Falsification certificate: the case analysis did not apply to a graph
    /// that satisfies all preconditions. Must never fire on valid inputs.
    #[error("structure theorem violated on {n}-vertex graph {graph6}")]
    StructureViolation { n: usize, graph6: String },

    /// Falsification certificate: a produced coloring used more colors than
    /// the certified bound. Must never fire.
    #[error("coloring bound exceeded: used {used} colors, bound {bound} (graph {graph6})")]
    BoundExceeded {
        used: usize,
        bound: usize,
        graph6: String,
    },

    /// A seeded generator exhausted its retry budget.
    #[error("generation budget exhausted: {0}")]
    Generation(String),

    /// A named construction that the atlas deliberately does not provide.
    #[error("unsupported construction: {0}")]
    Unsupported(String),
}
