use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("invalid root system: {0}")]
    InvalidRootSystem(String),

    #[error("group of order {order} exceeds the enumeration bound {bound}")]
    BoundExceeded { order: u128, bound: u128 },

    #[error("inadmissible regular element parameters: {0}")]
    Inadmissible(String),

    #[error("invalid induction configuration: {0}")]
    InvalidConfig(String),

    #[error("n = {n} exceeds the size bound {bound}")]
    SizeBound { n: usize, bound: usize },

    #[error("invalid partition: {0}")]
    InvalidPartition(String),

    #[error("charge is only defined for words with partition content: {0}")]
    NonPartitionContent(String),

    #[error("unsupported: {0}")]
    Unsupported(String),
}

pub type Result<T> = std::result::Result<T, Error>;
