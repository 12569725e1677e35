use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("origin is not an interior point of the polytope")]
    OriginNotInterior,
    #[error("polar dual has a non-integral vertex {0}")]
    NonIntegralDual(String),
    #[error("polytope is not full dimensional")]
    NotFullDimensional,
    #[error("weight lies on a wall: lower face {0:?} is not a simplex")]
    DegenerateWeight(Vec<usize>),
    #[error("weight has length {got}, expected {expected}")]
    WeightLength { expected: usize, got: usize },
    #[error("primitive relation needs multiplicities for collection {0:?}")]
    NonUnimodularCone(Vec<usize>),
    #[error("cone has empty interior")]
    EmptyInterior,
    #[error("cone is not simplicial; rays {0:?}")]
    NotSimplicial(Vec<Vec<String>>),
    #[error("cone is not regular; rays {0:?}")]
    NotRegular(Vec<Vec<String>>),
    #[error("triangulation is not maximal")]
    NotMaximal,
    #[error("weight is not generic: tie in {0:?}")]
    NonGenericWeight(Vec<i64>),
    #[error("budget exceeded: {0}")]
    BudgetExceeded(String),
    #[error("psi argument {0} is not a positive integer")]
    DomainShift(i64),
    #[error("coefficient has a divisor with zero constant part")]
    SingularCoefficient,
    #[error("constant product leaves the span of 1, gamma, pi^2, zeta(3)")]
    ConstantOutOfClosure,
    #[error("euler characteristic is zero; prepotential normalization undefined")]
    ChiZero,
    #[error("only threefold hypersurfaces (rank 4) are supported here, got rank {0}")]
    UnsupportedDimension(usize),
    #[error("instanton extraction disagrees at degree {0:?}")]
    InconsistentExtraction(Vec<u32>),
    #[error("parse error at line {line}, column {column}: {message}")]
    ParseError {
        line: usize,
        column: usize,
        message: String,
    },
    #[error("vertex {0:?} is not extremal")]
    NonExtremalVertex(Vec<i64>),
    #[error("invalid input: {0}")]
    Invalid(String),
    #[error("stage {stage} failed: {source}")]
    Stage {
        stage: &'static str,
        source: Box<Error>,
    },
}

pub type Result<T> = std::result::Result<T, Error>;
