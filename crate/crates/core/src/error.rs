use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Error, Clone, PartialEq)]
pub enum Error {
    #[error("division by zero")]
    DivisionByZero,
    #[error("parse error: {0}")]
    Parse(String),
    #[error("unknown lattice name `{0}`")]
    UnknownLattice(String),
    #[error("dimension mismatch: expected {expected}, got {got}")]
    DimensionMismatch { expected: usize, got: usize },
    #[error("singular Gram matrix")]
    SingularGram,
    #[error("matrix is not an isometry of the given lattice")]
    NotIsometry,
    #[error("inadmissible point: {0}")]
    Inadmissible(String),
    #[error("lattice sum did not converge: {0}")]
    Convergence(String),
    #[error("series locus mismatch: {0} vs {1}")]
    LocusMismatch(&'static str, &'static str),
    #[error("zero series has no leading term")]
    ZeroSeries,
    #[error("truncation order {0} outside the supported range")]
    OrderOutOfRange(String),
    #[error("unknown weight {0}")]
    UnknownWeight(u32),
    #[error("unknown index {0}")]
    UnknownIndex(usize),
    #[error("weighted point must have a nonzero component")]
    ZeroPoint,
    #[error("CW + D is singular at this point")]
    SingularAction,
    #[error("boundary point: xi_1 = 0")]
    BoundaryPoint,
    #[error("group closure exceeded {0} elements")]
    ClosureTooLarge(usize),
    #[error("fibre is singular at x1 = {0}")]
    SingularFiber(String),
    #[error("vanishing orders {0:?} are outside the implemented Kodaira table")]
    KodairaOutOfTable((u32, u32, u32)),
    #[error("discriminant vanishes identically")]
    DegenerateDiscriminant,
}
