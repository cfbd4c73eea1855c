//! Borsuk capacity of classified polyhedra.
//!
//! Finitely generated abelian groups ([`AbelianGroup`]), space descriptors
//! ([`SpaceDescriptor`]) with a text syntax, integral homology through the
//! Künneth formula, and capacity results for each supported family. The
//! [`oracle`] module re-derives the summand enumeration by brute force.

pub mod abelian;
pub mod capacity;
pub mod error;
pub mod homology;
pub mod oracle;
pub mod spaces;
pub mod syntax;

pub use abelian::{smith_normal_form, AbelianGroup, PresentationMatrix, PrimePower};
pub use capacity::{
    capacity_of, enumerate_dominated, unitary_divisor_products, zn_bound, CapacityKind,
    CapacityResult, UnitaryFactorization,
};
pub use error::{Error, ParseError, Result};
pub use homology::{default_max_dim, homology_of, kunneth, GradedGroup, Truncation};
pub use oracle::{ExplicitFiniteGroup, Subgroup, SubgroupLattice};
pub use spaces::{GroupDescriptor, SpaceDescriptor};
pub use syntax::{parse_expression, parse_group};
