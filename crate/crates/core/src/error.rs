use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("no {kind} sequence of order {order} exists")]
    NoSuchSequence { kind: String, order: u32 },
    #[error("unsupported order {order}: {reason}")]
    UnsupportedOrder { order: u32, reason: String },
    #[error("{what} out of range: {value}")]
    OutOfRange { what: &'static str, value: i64 },
    #[error("hooked operand cannot be concatenated or doubled")]
    HookedOperand,
    #[error("symbol {symbol} has no consistent pairing")]
    UnmatchedSymbol { symbol: u32 },
    #[error("unknown sequence kind: {0}")]
    UnknownKind(String),
    #[error("shift c={c} is too small, need c >= {need}")]
    ShiftTooSmall { c: u32, need: u32 },
    #[error("bound violated: {0}")]
    BoundViolation(String),
    #[error("precondition failed: {0}")]
    PreconditionFailed(String),
    #[error("label {label} is already in use")]
    LabelClash { label: u32 },
    #[error("no triple (0,{i},..) in variant-2 form")]
    MissingTriple { i: u32 },
    #[error("base labelling lacks the required triangle (0,{a},{b})")]
    MissingRequiredTriangle { a: u32, b: u32 },
    #[error("unsupported combination: {0}")]
    UnsupportedCombination(String),
    #[error("too many hexagons: h={h} exceeds {max}")]
    TooManyHexagons { h: u32, max: u32 },
    #[error("({t},{s}) is not in the small-case table")]
    NotInTable { t: u32, s: u32 },
    #[error("no rule produced a verified labelling for {0}")]
    Unlabellable(String),
    #[error("malformed labelling: {0}")]
    MalformedLabelling(String),
    #[error("spec too large for exhaustive search: m={m} exceeds {cap}")]
    SpecTooLarge { m: u32, cap: u32 },
    #[error("order {n} too large for enumeration (cap {cap})")]
    OrderTooLarge { n: u32, cap: u32 },
    #[error("parse error: {0}")]
    Parse(String),
}

pub type Result<T> = std::result::Result<T, Error>;
