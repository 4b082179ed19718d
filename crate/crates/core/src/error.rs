use alloc::string::String;
use alloc::vec::Vec;

pub type Result<T, E = Error> = core::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum Error {
    #[error("malformed table `{table}`: {detail}")]
    MalformedTable { table: &'static str, detail: String },

    #[error("empty carrier")]
    EmptyCarrier,

    #[error("duplicate element name `{0}`")]
    DuplicateName(String),

    #[error("not a group: {0}")]
    NotAGroup(String),

    #[error("not abelian: {0}")]
    NotAbelian(String),

    #[error("invalid action: {0}")]
    InvalidAction(String),

    #[error("invalid classical crossed module: {0}")]
    InvalidCrossedModule(String),

    #[error("choice for ({x}, {y}) lies outside the required fiber")]
    ChoiceOutsideFiber { x: String, y: String },

    #[error("map is not surjective: `{0}` has an empty fiber")]
    NotSurjective(String),

    #[error("element index {0} is outside the parent carrier")]
    ElementOutsideParent(usize),

    #[error("source/target mismatch: {0}")]
    SourceTargetMismatch(String),

    #[error("subset is not closed under the induced operations: {0}")]
    NotASubgroup(String),

    #[error("subset is not perfect and normal")]
    NotPerfectOrNormal,

    #[error("crossed module is not cssc: {0}")]
    NotCssc(String),

    #[error("({0}, {1}) is not a special pair")]
    NotSpecialPair(String, String),

    #[error("leg `{leg}` is not special: ({from}, {to})")]
    NotSpecialLeg {
        leg: &'static str,
        from: String,
        to: String,
    },

    #[error("no lift of `{c}` over `{r}`")]
    NoLift { c: String, r: String },

    #[error("lift of `{c}` over `{r}` is not unique: candidates {candidates:?}")]
    NonUniqueLift {
        c: String,
        r: String,
        candidates: Vec<String>,
    },

    #[error("arrows are not composable: {0}")]
    NotComposable(String),

    #[error("omega table is not normalized at ({0})")]
    NotNormalized(String),

    #[error("structure has {size} arrows, above the cap of {cap}")]
    TooLarge { size: usize, cap: usize },

    #[error("generated structure rejected by `{check}`: {witness}")]
    GeneratorRejected { check: String, witness: String },

    #[error("precondition violated: {0}")]
    Precondition(String),
}
