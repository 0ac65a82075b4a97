//! Verification toolkit for the algebra of wall-crossing endofunctors at a
//! simple root: symmetric-group combinatorics, finitely presented monoids
//! with Green's structure, integer matrices on Grothendieck groups,
//! coinvariant algebras over exact rationals, bimodule chain computations,
//! and a quiver-algebra model of a highest-weight block on which functors
//! and their derived cohomologies are computed.

pub mod blockcat;
pub mod coinvariant;
pub mod ktheory;
pub mod linalg;
pub mod report;
pub mod rewrite;
pub mod soergel;
pub mod weyl;
