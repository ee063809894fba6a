use thiserror::Error;

use crate::ground::EdgeSet;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("vertex {vertex} out of range for n = {n}")]
    VertexOutOfRange { vertex: usize, n: usize },

    #[error("edge ({0}, {1}) is a loop")]
    LoopEdge(usize, usize),

    #[error("vertex count {0} exceeds the supported maximum of {max}", max = crate::ground::MAX_VERTICES)]
    TooManyVertices(usize),

    #[error("vertex {0} must not belong to the given vertex set")]
    VertexInSet(usize),

    #[error("anchors are not contained in the support of the edge set")]
    AnchorsOutsideSupport,

    #[error("edge set is empty")]
    EmptyEdgeSet,

    #[error("basis family is empty")]
    EmptyFamily,

    #[error("bases have unequal cardinality ({0} vs {1})")]
    UnequalCardinality(usize, usize),

    #[error("basis exchange fails for B1 = {b1:?}, B2 = {b2:?}, x = {x}")]
    ExchangeViolation { b1: EdgeSet, b2: EdgeSet, x: usize },

    #[error("a basis is not contained in the ground set")]
    BasisOutsideGround,

    #[error("{what} exceeds the enumeration cap ({size} > {cap})")]
    CapExceeded {
        what: String,
        size: usize,
        cap: usize,
    },

    #[error("requires n >= m + 1 (got n = {n}, m = {m})")]
    DimensionTooLarge { n: usize, m: usize },

    #[error("embedding has coincident points at vertices {0} and {1}")]
    CoincidentPoints(usize, usize),

    #[error("embedding coordinates do not match n = {n}, m = {m}")]
    MalformedEmbedding { n: usize, m: usize },

    #[error("genericity not certified after {attempts} embeddings")]
    GenericityNotCertified { attempts: usize },

    #[error("precondition not met for {suite}: {detail}")]
    PreconditionNotMet { suite: String, detail: String },

    #[error("the start set of a flat chain is not closed")]
    NotClosed,

    #[error("parse error: {0}")]
    Parse(String),

    #[error("unknown suite or condition: {0}")]
    UnknownSuite(String),
}

impl Error {
    pub(crate) fn cap(what: impl Into<String>, size: usize, cap: usize) -> Self {
        Error::CapExceeded {
            what: what.into(),
            size,
            cap,
        }
    }
}

pub type Result<T> = std::result::Result<T, Error>;
