use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("invalid degree literal {0:?}")]
    InvalidDegree(String),
    #[error("degree {0} is outside [0, 1]")]
    DegreeOutOfRange(String),
    #[error("degree {literal:?} has more than {precision} fractional digits")]
    OffGrid { literal: String, precision: u32 },
    #[error("precision {0} exceeds the supported maximum")]
    PrecisionTooFine(u32),
    #[error("a hesitant element needs at least one degree")]
    EmptyElement,
    #[error("the universe is empty")]
    EmptyUniverse,
    #[error("object {0:?} appears twice in the universe")]
    DuplicateObject(String),
    #[error("parameter {0:?} appears twice")]
    DuplicateParameter(String),
    #[error("no parameters given")]
    EmptyParameters,
    #[error("unknown parameter {0:?}")]
    UnknownParameter(String),
    #[error("no value for object {object:?}{}", param.as_ref().map(|p| format!(" under parameter {p:?}")).unwrap_or_default())]
    MissingValue { object: String, param: Option<String> },
    #[error("operands are defined over different universes")]
    UniverseMismatch,
    #[error("cannot fold an empty family")]
    EmptyFamily,
    #[error("parameter sets do not intersect")]
    EmptyParameterIntersection,
    #[error("not a beta-covering: fails at object {object:?}")]
    NotABetaCovering { object: String },
    #[error("object {0:?} is not in the universe")]
    ObjectNotInUniverse(String),
    #[error("neighborhood of {0:?} is undefined")]
    UndefinedNeighborhood(String),
}
