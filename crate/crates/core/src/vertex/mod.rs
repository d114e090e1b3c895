//! The universal affine vertex superalgebra: states, modes and n-th products.

pub mod basis;
pub mod engine;
pub mod props;
pub mod serial;
pub mod state;

pub use engine::Vertex;
pub use state::{word_parity, word_weight, Acc, Letter, State, Word};
