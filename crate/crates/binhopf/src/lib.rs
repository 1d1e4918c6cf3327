//! Exact-arithmetic engine for the Hopf algebra of nonplanar rooted binary
//! forests: coproduct by binary-admissible cuts, antipode, the dual
//! edge-insertion pre-Lie structure with its simultaneous-grafting
//! extension, the symmetric pairing, growth/pruning operators, the pre-Lie
//! exponential, and verification suites for all of the above.

pub mod error;
pub mod hopf;
pub mod linear;
pub mod pairing;
pub mod parse;
pub mod prelie;
pub mod tree;
pub mod verify;

pub use error::{Error, Result};
pub use hopf::{antipode, coproduct, coproduct_tree, counit};
pub use linear::{LinComb, Rational, Tensor2, Tensor3, TensorN};
pub use pairing::{duality_check, duality_sweep, pair};
pub use parse::{parse_forest, parse_tree};
pub use prelie::{growth, prelie, prelie_exponential, pruning, shuffle_coproduct, star, triangle};
pub use tree::{enumerate_forests, enumerate_trees, Forest, Label, Tree};
