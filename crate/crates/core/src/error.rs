use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("division by zero")]
    DivisionByZero,
    #[error("incompatible fields: {0}")]
    IncompatibleFields(String),
    #[error("rank mismatch: expected {expected}, found {found}")]
    RankMismatch { expected: usize, found: usize },
    #[error("unsupported: {0}")]
    Unsupported(String),
    #[error("invalid field descriptor: {0}")]
    InvalidField(String),
    #[error("doubling limit reached at dimension {0}")]
    DimensionLimit(usize),
    #[error("incompatible algebras: {0}")]
    IncompatibleAlgebras(String),
    #[error("property violation in {identity}: {witness}")]
    PropertyViolation { identity: String, witness: String },
    #[error("characteristic {0} is excluded")]
    BadCharacteristic(u64),
    #[error("axiom failure in {identity}: {witness}")]
    AxiomFailure { identity: String, witness: String },
    #[error("insufficient sample: {0}")]
    InsufficientSample(String),
    #[error("slot mismatch: {0}")]
    SlotMismatch(String),
    #[error("shape mismatch: {0}")]
    ShapeMismatch(String),
    #[error("degenerate form: {0}")]
    DegenerateForm(String),
    #[error("incompatible presentation: {0}")]
    IncompatiblePresentation(String),
    #[error("subgroup is not central: {0}")]
    NotCentral(String),
    #[error("not a subgroup: {0}")]
    NotSubgroup(String),
    #[error("subgroup is not normal: {0}")]
    NotNormal(String),
    #[error("size bound exceeded: {0}")]
    SizeBound(String),
    #[error("snap failure: {0}")]
    SnapFailure(String),
    #[error("character is not irreducible: {0}")]
    NotIrreducible(String),
    #[error("hypothesis failure: {0}")]
    HypothesisFailure(String),
    #[error("intertwiner space has dimension {0}, expected 1")]
    SchurFailure(usize),
    #[error("identity failure in {identity}: lhs {lhs}, rhs {rhs}")]
    IdentityFailure { identity: String, lhs: String, rhs: String },
    #[error("group is not abelian: {0}")]
    NotAbelian(String),
    #[error("map is not injective: {0}")]
    NotInjective(String),
    #[error("similitude targets differ: {0}")]
    MismatchedS(String),
    #[error("bad seesaw fixture: {0}")]
    BadSeesawFixture(String),
    #[error("not a homomorphism: {0}")]
    NotHomomorphism(String),
    #[error("parse error: {0}")]
    Parse(String),
}

impl Error {
    pub fn violation(identity: impl Into<String>, witness: impl Into<String>) -> Self {
        Error::PropertyViolation { identity: identity.into(), witness: witness.into() }
    }
}
