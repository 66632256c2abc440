//! Covariant form of the Dirac Lagrangian in hydrodynamic variables, the
//! derivative split along the flux, and randomized field points for checks.

pub mod field;
pub mod kinetic;
pub mod pieces;
pub mod split;

pub use field::{FieldJet, ParamField, Quad};
pub use kinetic::kinetic_term_matrix;
pub use pieces::{lagrangian_pieces, pieces_from_jet, CovariantAux, LagrangianPieces};
pub use split::{effective_mass_branch, quasi_uniformity, split_derivative, MassBranch, STABLE_KAPPA};
