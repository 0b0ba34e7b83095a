//! Group-level invariants of matroids under cut-and-paste relations: formal
//! sums of isomorphism classes, the collapse onto Tutte polynomials in the
//! isthmus and loop classes, covering-structure membership with tree
//! witnesses, and direct sums of coverings.

mod axioms;
mod coverings;
mod error;
mod k0;
mod pointed;
mod product;

pub use axioms::{verify_covering_axioms, AxiomCheck, CoveringAxiomReport};
pub use coverings::{
    compose_covering_witnesses, compose_coverings, is_covering, CoveringStructureTag,
    CoveringVerdict,
};
pub use error::KError;
pub use k0::{gamma, rho, rho_inverse, tg_invariant, K0IsoElement, K0TcElement};
pub use pointed::PointedObject;
pub use product::{direct_sum_covering, direct_sum_witness};
