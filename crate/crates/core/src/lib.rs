//! Exact-arithmetic toolkit for the Picard lattices of supersingular K3
//! surfaces in odd characteristic: lattice invariants, the concrete
//! constructions of the rank-22 lattices, enumeration of coset-lattice
//! points in quadratic bodies, ADE root-system classification, and
//! machine-checkable certificates that every such surface carries a degree-2
//! polarization realizing it as a sextic double plane.

pub mod arith;
pub mod constructions;
pub mod error;
pub mod lattice;
pub mod matrix;
pub mod quadbody;
pub mod roots;

pub use arith::Rat;
pub use error::{Error, Result};
pub use lattice::{DiscriminantGroupShape, IntegerLattice, LatticeVector, Signature};
pub use quadbody::{
    enumerate, interval_points, Comparison, CosetConstraint, EnumOutcome, OneVarImage,
    QuadraticForm,
};
pub use roots::{ade_type, enumerate_roots, AdeComponent, AdeType, RootInventory};
