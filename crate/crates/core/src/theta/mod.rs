//! Finite-group model of the similitude theta correspondence: similitude
//! groups, `J̃^sim`, theta lifts as coinvariants, the lemmas relating lifts
//! for isometry and similitude groups, and similitude images over finite
//! fields.
//!
//! Finite groups are semisimple, so coinvariants are computed as invariants
//! and "irreducible quotient or zero" becomes "irreducible or zero".

mod checks;
mod instance;
mod jsim;
mod lift;
mod similitude;
mod simimage;

pub use checks::{
    central_character, central_character_check, howe_check, omega_blocks_exhaust, omega_chi_check, restriction_decomposition_check, seesaw_check, HoweFlags,
    RestrictionCheck,
};
pub use instance::{OmegaSpec, ThetaInstance};
pub use jsim::{build_jsim, JsimGroup};
pub use lift::{induced_omega, isometry_lift, isometry_lift_rev, theta_from_induced, theta_lift, theta_lift_rev, theta_via_induction, InducedOmega};
pub use similitude::{build_similitude, SimilitudeGroup};
pub use simimage::{sim_image_gl2e, sim_image_gu, sim_image_torus, SimImage, TORUS_BOUND};
