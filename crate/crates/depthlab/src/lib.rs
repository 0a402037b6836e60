//! Desk-scale laboratory for monotone compression and depth margins.
//!
//! Everything here runs against one fixed, step-counted toy universal
//! machine (see [`utm`]), so complexity values, randomness thresholds and
//! compression curves are exact integers reproducible across runs. The
//! crate is organised around a handful of interacting pieces:
//!
//! * [`bits`] — bit strings, the length-lexicographic string enumeration,
//!   the prefix-free `dbl(x)01` code and the `.dseq` file format.
//! * [`utm`] — the machine itself: self-delimiting programs, budgeted
//!   step-counted execution, program enumeration and a run cache.
//! * [`complexity`] — Levin complexity `kt`, step-capped plain complexity,
//!   and the characteristic sequences of the random-string sets.
//! * [`compression`] — monotone compression pairs `(C, D, p)` with declared
//!   time-bound families, trace capture and conformance verification.
//! * [`martingale`], [`duality`], [`diagonal`] — exact dyadic betting
//!   strategies, both directions of the compressor/martingale
//!   correspondence, and the diagonal deep-sequence constructor.
//! * [`depth`] — margin series between weak and strong pairs, with
//!   finite-window verdicts.
//! * [`reduction`] — honest monotone reductions, the chunk-wise polynomial
//!   inverter, and the slow-growth transfer harness.

pub mod bits;
pub mod bounds;
pub mod complexity;
pub mod compression;
pub mod depth;
pub mod diagonal;
pub mod duality;
pub mod dyadic;
pub mod halting;
pub mod lang;
pub mod martingale;
pub mod reduction;
pub mod utm;

pub use bits::BitString;
pub use dyadic::Dyadic;

/// Errors shared across the crate.
#[derive(Debug, thiserror::Error)]
pub enum Error {
    #[error("malformed prefix-free encoding at bit {at}")]
    MalformedEncoding { at: usize },
    #[error("step budget exceeded: {used} steps against budget {budget}")]
    BudgetExceeded { used: u64, budget: u64 },
    #[error("decompressor output would exceed MD({j}) = {cap}")]
    MdCapViolation { j: usize, cap: u64 },
    #[error("kt search ceiling {ceiling} reached without a witness")]
    SearchBudgetExceeded { ceiling: u32 },
    #[error("halting table ceiling {ceiling} is below required code length {needed}")]
    TableIncomplete { ceiling: usize, needed: usize },
    #[error("run cache record failed its checksum at offset {offset}")]
    CacheCorrupt { offset: u64 },
    #[error("trace window [{lo}, {hi}] not covered by trace")]
    WindowUncovered { lo: usize, hi: usize },
    #[error("precondition failed: {0}")]
    PreconditionFailed(String),
    #[error("no chunk extension found while inverting at length {at}")]
    NoChunkFound { at: usize },
    #[error("ambiguous chunk while inverting: {z1} and {z2} both fit at length {at}")]
    AmbiguousChunk { at: usize, z1: String, z2: String },
    #[error("realized schedule does not match the padded stream: {0}")]
    ScheduleMismatch(String),
    #[error("martingale value is not a dyadic rational: {0}")]
    NonDyadicValue(String),
    #[error("slow-growth hypothesis unmet at j = {j}: margin {margin} below {needed}")]
    HypothesisUnmet { j: usize, margin: i64, needed: i64 },
    #[error("program stream provides only {have} bits, {want} requested")]
    PrefixUnavailable { have: usize, want: usize },
    #[error("enumeration ceiling {ceiling} exceeded (requested {requested})")]
    CeilingExceeded { ceiling: usize, requested: usize },
    #[error("language decider overran its declared step budget: {used} > {budget}")]
    DeciderBudget { used: u64, budget: u64 },
    #[error(transparent)]
    Io(#[from] std::io::Error),
    #[error(transparent)]
    Json(#[from] serde_json::Error),
}

pub type Result<T> = std::result::Result<T, Error>;
