use thiserror::Error;

/// Errors shared across the crate.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    /// Modulus 1 would make every coefficient zero and every statement vacuous.
    #[error("modulus 1 is rejected: the zero ring is not a valid coefficient ring")]
    ZeroRing,

    /// Modulus too large to keep canonical scalars inside `i64`.
    #[error("modulus {0} does not fit in a signed 64-bit scalar")]
    ModulusTooLarge(u64),

    /// Checked integer arithmetic overflowed in characteristic zero.
    #[error("integer overflow in characteristic-zero arithmetic")]
    Overflow,

    /// A group ring element needs at least one coefficient.
    #[error("group order must be at least 1")]
    EmptyOrder,

    /// Two operands live over different coefficient rings.
    #[error("coefficient ring mismatch: {0} vs {1}")]
    SpecMismatch(String, String),

    /// Two operands live over cyclic groups of different orders.
    #[error("group order mismatch: {0} vs {1}")]
    OrderMismatch(usize, usize),

    /// The operation needs sigma and tau to act differently on the generator.
    #[error("sigma and tau agree on the generator; the twist shift is zero")]
    ZeroShift,

    /// For the trivial group the generator is the identity, whose image must vanish.
    #[error("the generator image must be zero when the group is trivial")]
    NonzeroImageOfIdentity,

    /// Determinant work is capped to keep exact elimination cheap.
    #[error("group order {order} exceeds the determinant cost guard ({max})")]
    OrderTooLarge { order: usize, max: usize },

    /// Exhaustive enumeration would exceed the caller-supplied budget.
    #[error("enumeration space of {space} candidates exceeds budget {budget}")]
    BudgetExceeded { space: u128, budget: u64 },

    /// Enumeration only makes sense over a finite coefficient ring.
    #[error("enumeration requires a finite coefficient ring (positive characteristic)")]
    InfiniteRing,

    /// The hypotheses of the requested construction do not hold.
    #[error("precondition not met: {0}")]
    Precondition(&'static str),

    /// A coefficient list failed to parse.
    #[error("invalid coefficient list: {0}")]
    ParseCoeffs(String),

    /// Two routes that must agree disagreed; indicates a bug, never expected.
    #[error("internal consistency check failed: {0}")]
    Inconsistency(&'static str),
}

pub type Result<T> = std::result::Result<T, Error>;
