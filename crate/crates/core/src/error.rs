use thiserror::Error;

/// Every failure mode of the library.
///
/// Variants whose doc says "bug" are postcondition failures of constructions
/// that the underlying theorems guarantee; seeing one means the
/// implementation is wrong, not the input.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("element {0} is not in the poset")]
    ElementNotInPoset(usize),
    #[error("element {0} is not in the universe")]
    ElementNotInUniverse(usize),
    #[error("unknown label `{0}`")]
    UnknownLabel(String),
    #[error("duplicate label `{0}`")]
    DuplicateLabel(String),
    #[error("relation is not a partial order: {0}")]
    NotAPartialOrder(String),
    #[error("{what} has size {size}, above the cap of {cap}")]
    SizeCapExceeded {
        what: &'static str,
        size: usize,
        cap: usize,
    },
    #[error("precondition violated: {0}")]
    PreconditionViolated(String),
    #[error("family of maps is empty")]
    EmptyFamily,
    #[error("parts do not cover the directed set")]
    NotACover,
    #[error("set is not directed")]
    NotDirected,
    #[error("map is not monotone: {0} <= {1} but images are unordered")]
    NotMonotone(usize, usize),
    #[error("map graph is malformed: {0}")]
    MalformedMap(String),
    #[error("maps or posets do not line up: {0}")]
    MapMismatch(String),
    #[error("universe is empty")]
    EmptyUniverse,
    #[error("relation is empty")]
    EmptyRelation,
    #[error("poset is empty")]
    EmptyPoset,
    #[error("family of finite subsets is empty")]
    EmptyFamilyOfSets,
    #[error("space has not passed CF validation")]
    SpaceNotValidated,
    #[error("space is not a CF-approximation space: {0}")]
    NotCfSpace(String),
    #[error("set is not CF-closed")]
    NotClosed,
    #[error("subset is not a member of the family")]
    NotInFamily,
    #[error("pair ({0}, {1}) is outside the families")]
    PairOutOfRange(usize, usize),
    #[error("relations do not share the middle space")]
    SpaceMismatch,
    #[error("relation has not passed approximable validation")]
    RelationNotValidated,
    #[error("relation is not CF-approximable: {0}")]
    NotApproximable(String),
    #[error("map is not Scott continuous")]
    MapNotContinuous,
    #[error("space is not topological (relation is not a preorder)")]
    NotTopological,
    #[error("selector violates TB conditions: {0}")]
    TbViolated(String),
    #[error("witness is invalid: {0}")]
    WitnessInvalid(String),
    #[error("no index covers the finite set (bug)")]
    NoCoveringIndex,
    #[error("isomorphism check failed (bug): {0}")]
    IsoCheckFailed(String),
    #[error("postcondition failed (bug): {0}")]
    Postcondition(String),
    #[error("malformed document: {0}")]
    Parse(String),
    #[error("i/o failure: {0}")]
    Io(String),
    #[error("unknown theorem `{0}`")]
    UnknownTheorem(String),
    #[error("theorem `{0}` expects {1} input(s), got {2}")]
    ArityMismatch(String, usize, usize),
}

pub type Result<T> = std::result::Result<T, Error>;
