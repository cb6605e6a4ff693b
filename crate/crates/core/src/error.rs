use thiserror::Error;

use crate::coxeter::{CoxeterType, Side};

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("elements belong to different Coxeter systems ({left} vs {right})")]
    MismatchedSystems { left: CoxeterType, right: CoxeterType },

    #[error("generator s{gen} out of range for rank {rank}")]
    GeneratorOutOfRange { gen: usize, rank: usize },

    #[error("invalid permutation: {0}")]
    InvalidPermutation(String),

    #[error("permutations are only available in type A, not {0}")]
    NotTypeA(CoxeterType),

    #[error("cocharacter has {found} coordinates, expected {expected}")]
    DimensionMismatch { expected: usize, found: usize },

    #[error("cocharacter {0:?} is not dominant")]
    NotDominant(Vec<i64>),

    #[error("cocharacter {0:?} is not regular")]
    NotRegular(Vec<i64>),

    #[error("SL mode requires coordinates summing to 0, got {0}")]
    NonZeroSum(i64),

    #[error("s{gen} is not a {side} descent")]
    NotADescent { gen: usize, side: Side },

    #[error("element does not have full support")]
    NotFullSupport,

    #[error("not additive: l(v^-1 w) = {product} but l(v^-1) + l(w) = {sum}")]
    NotAdditive { product: usize, sum: usize },

    #[error("not Reuman type: finite part is missing generators {missing}")]
    NotReumanType { missing: String },

    #[error("s{gen} is not in the candidate set")]
    NotACandidate { gen: usize },

    #[error("{check} is only stated for type A, not {ty}")]
    TypeANotApplicable { check: &'static str, ty: CoxeterType },

    #[error("unsupported group: {0}")]
    UnsupportedGroup(String),

    #[error("parse error: {0}")]
    Parse(String),

    #[error("no admissible step from non-elliptic element {element}: {detail}")]
    Stuck { element: String, detail: String },

    #[error("internal contradiction: {0}")]
    InternalContradiction(String),
}
