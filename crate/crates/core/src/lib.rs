//! Exact symbolic workbench for ice quivers with potential.
//!
//! The crate builds, from a quiver with potential, the lifted ice quiver
//! with potential and its frozen Jacobian algebra, verifies the boundary
//! presentation and the internally Calabi–Yau exactness certificate, and
//! runs polarised-principal-coefficient cluster combinatorics (mutation,
//! gradings, g- and c-vectors).
//!
//! All arithmetic is exact: path-algebra coefficients are arbitrary
//! precision rationals and cluster variables are Laurent polynomials over
//! arbitrary precision integers. There are no floating point numbers and
//! no tolerances anywhere.

pub mod algebra;
pub mod cluster;
pub mod homcheck;
pub mod input;
pub mod lift;
pub mod linalg;
pub mod potential;
pub mod quiver;

pub use algebra::{preprojective_check, truncation_bound, verify_phi, GradedAlgebra, PhiReport};
pub use cluster::graph::{exchange_graph, exchange_graphs_isomorphic, ExchangeGraph};
pub use cluster::laurent::{LaurentPoly, VarRegistry};
pub use cluster::seed::{IntMat, Seed};
pub use homcheck::{cy_certificate, Certificate, CertificateOptions};
pub use input::Document;
pub use lift::{gamma_presentation, lift_qp, relation_set, zigzags, LiftedIqp, Presentation, ZigZag};
pub use potential::{
    check_grading, cyclic_derivative, right_derivative, AlgebraElement, Grading, Potential, Rat,
};
pub use quiver::{IceQuiver, Path, Quiver, ValidatedQuiver};

use thiserror::Error;

/// Crate-wide result type.
pub type Result<T> = std::result::Result<T, Error>;

/// Errors raised by validation and by the symbolic engines.
///
/// Validation errors carry the offending id so the CLI can point at the
/// exact piece of a malformed input.
#[derive(Debug, Error)]
pub enum Error {
    #[error("duplicate vertex id `{0}`")]
    DuplicateVertex(String),
    #[error("duplicate arrow id `{0}`")]
    DuplicateArrow(String),
    #[error("arrow `{id}` references undeclared vertex `{vertex}`")]
    DanglingEndpoint { id: String, vertex: String },
    #[error("arrow `{0}` is a loop")]
    LoopArrow(String),
    #[error("frozen arrow `{0}` has an unfrozen endpoint")]
    FrozenArrowUnfrozenEndpoint(String),
    #[error("unknown vertex id `{0}`")]
    UnknownVertex(String),
    #[error("unknown arrow id `{0}`")]
    UnknownArrow(String),
    #[error("generated id `{0}` collides with an existing id")]
    GeneratedIdCollision(String),
    #[error("quiver has a directed cycle")]
    CyclicQuiver,
    #[error("quiver has a 2-cycle between `{0}` and `{1}`")]
    TwoCycle(String, String),

    #[error("potential term is not a cycle: tail `{tail}` differs from head `{head}`")]
    NonCycleTerm { tail: String, head: String },
    #[error("potential cycle has length {0} < 2")]
    ShortCycle(usize),
    #[error("invalid rational literal `{0}`")]
    BadRational(String),
    #[error("grading is not positive on arrow `{0}`")]
    NonPositiveDegree(String),
    #[error("potential is not homogeneous under the given grading (term degrees {0:?})")]
    InhomogeneousPotential(Vec<i64>),
    #[error("relation generator `{0}` is not homogeneous")]
    InhomogeneousRelation(String),
    #[error("relation generator `{0}` is not a combination of parallel paths")]
    NonParallelRelation(String),

    #[error("no certified truncation bound: requires an acyclic quiver with zero potential; supply a bound explicitly")]
    NoCertifiedBound,
    #[error("no positive grading supplied or derivable for this potential")]
    NoGrading,
    #[error("truncation bound {0} exceeded: element of degree {1} cannot be reduced in an incomplete algebra")]
    BoundExceeded(i64, i64),
    #[error("operation requires a complete (finite-dimensional, certified) algebra")]
    IncompleteAlgebra,
    #[error("internal consistency failure: {0}")]
    Internal(String),

    #[error("exact division failed: {0}")]
    DivisionFailure(String),
    #[error("mutation index {0} out of range 1..={1}")]
    BadMutationIndex(usize, usize),
    #[error("seed is not polarised: expected {expected} exchange-matrix rows, found {found}")]
    NotPolarised { expected: usize, found: usize },
    #[error("cluster variable is not homogeneous under the seed grading")]
    InhomogeneousVariable,

    #[error("malformed input: {0}")]
    Parse(String),
}

impl From<serde_json::Error> for Error {
    fn from(e: serde_json::Error) -> Self {
        Error::Parse(e.to_string())
    }
}
