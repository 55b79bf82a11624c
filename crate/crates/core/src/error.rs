//! Error type shared across the crate.

use thiserror::Error;

#[derive(Debug, Error)]
pub enum Error {
    #[error("invalid parameter: {0}")]
    InvalidParameter(String),

    /// Distance matrices are undefined for disconnected graphs; callers must
    /// not get an `n`-as-infinity sentinel by accident.
    #[error("graph is disconnected; distance matrix is undefined")]
    Disconnected,

    #[error("invalid input: {0}")]
    InvalidInput(String),

    #[error(
        "partition is not equitable: block ({cell_row},{cell_col}) rows {row_a} and {row_b} \
         have sums {sum_a} and {sum_b}"
    )]
    NotEquitable {
        cell_row: usize,
        cell_col: usize,
        row_a: usize,
        row_b: usize,
        sum_a: String,
        sum_b: String,
    },

    #[error("graph6 parse error at byte {offset}: {reason}")]
    Graph6 { offset: usize, reason: String },
}

pub type Result<T> = std::result::Result<T, Error>;
