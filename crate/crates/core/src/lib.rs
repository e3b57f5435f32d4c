pub mod characters;
pub mod dunkl;
pub mod error;
pub mod fock;
pub mod hecke;
pub mod linalg;
pub mod partitions;
pub mod permutation;
pub mod rational;

pub use error::{Error, Result};
pub use partitions::{CSign, Partition};
pub use permutation::Permutation;
pub use rational::Rational;
