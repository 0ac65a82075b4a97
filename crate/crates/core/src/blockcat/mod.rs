//! A desk-scale model of a highest-weight block: modules over a quiver
//! algebra with relations, the wall-crossing, twisting, completion,
//! shuffling, coshuffling, parabolic-quotient and cokernel functors on it,
//! derived cohomology by minimal resolutions, natural transformation
//! spaces, and the suites verifying the expected identities.

pub mod algebra;
pub mod block;
pub mod checks;
pub mod functor;
pub mod module;
pub mod resolve;

pub use algebra::{AlgebraError, AlgebraSpec, BlockAlgebra};
pub use block::{Block, BlockError, Nat};
pub use functor::Functor;
pub use module::{BlockModule, Morphism};
