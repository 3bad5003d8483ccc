//! Augmented algebras given by presentations.
//!
//! [`PresentedAlgebra`] wraps a confirmed Gröbner basis and gives normal-form
//! arithmetic (possibly infinite dimensional, like `B`). [`QuotientAlgebra`] adds a
//! finite normal-word basis with cached structure constants. The example families
//! and the smash product construction live in [`families`] and [`smash`].

mod action;
pub mod families;
mod presented;
mod quotient;
pub mod smash;

#[cfg(test)]
mod tests;

pub use action::{validate_action, ActionReport, GroupAction};
pub use families::{build_a, build_b, build_b_smash, build_gr_a, shear_action, smash};
pub use presented::PresentedAlgebra;
pub use quotient::QuotientAlgebra;
pub use smash::{build_presented_smash, build_smash, smash_presentation, SmashProduct};
