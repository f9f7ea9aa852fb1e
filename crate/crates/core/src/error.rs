use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("{0} is not prime")]
    NotPrime(u64),
    #[error("{0} is not an odd prime")]
    NotOddPrime(u64),
    #[error("bracket needs at least one value")]
    EmptyBracket,
    #[error("D1*D2 does not fit in 64 bits")]
    TooLarge,
    #[error("expected a positive integer, got 0")]
    Zero,
    #[error("D not squarefree: {prime}^2 divides {n}")]
    NotSquarefree { n: u64, prime: u64 },
    #[error("odd ramification count: D = {d} has {count} prime factor(s), need an even number")]
    OddRamification { d: u64, count: usize },
    #[error("trivial discriminant: D = 1 is the split case, which is not supported")]
    TrivialDiscriminant,
    #[error("contributions defined for even j only (got j = {0})")]
    OddJ(u32),
    #[error("non-integral total {total} at k={k}, j={j}, level {level}; terms: {terms}")]
    NonIntegralTotal {
        k: u32,
        j: u32,
        level: String,
        total: String,
        terms: String,
    },
}
