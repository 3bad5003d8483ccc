//! Homological algebra of finite-dimensional augmented algebras over prime fields.
//!
//! The crate builds algebras from noncommutative presentations, resolves the trivial
//! module with Anick's resolution, cross-checks the resulting Ext dimensions against
//! the reduced bar complex, and carries the cohomology classes, products and group
//! actions needed for Lyndon-Hochschild-Serre bookkeeping over a cyclic group of
//! prime order.
//!
//! Module map:
//!  - [`ffmat`]: exact linear algebra over `F_p`.
//!  - [`freealg`]: words, monomial orders, reduction and Gröbner completion.
//!  - [`algebras`]: quotient algebras, the `A_p` / `B` families, group actions, smash products.
//!  - [`anick`]: chains, differentials and Ext dimensions from Anick's resolution.
//!  - [`barcoh`]: reduced bar cochains, cup products, the classes `xi` and `eta`.
//!  - [`lhs`]: cyclic group cohomology and the `E_2` page.
//!  - [`verify`]: verification suites and the report format used by the CLI.

pub mod algebras;
pub mod anick;
pub mod barcoh;
mod error;
pub mod exec;
pub mod ffmat;
pub mod freealg;
pub mod lhs;
pub mod verify;

pub use error::{Error, Result};
pub use exec::Exec;
