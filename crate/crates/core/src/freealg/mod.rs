//! Free associative algebras over `F_p`: words, admissible orders, elements,
//! two-sided reduction and noncommutative Gröbner completion.

mod element;
mod groebner;
mod order;
mod presentation;
mod word;

pub use element::FreeElement;
pub use groebner::{GbStatus, GroebnerBasis, Overlap, Rewrite};
pub use order::{MonomialOrder, OrderKey, OrderKind};
pub use presentation::Presentation;
pub use word::Word;
