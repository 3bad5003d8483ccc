//! Reduced bar cochains `Hom((A_+)^{(x)n}, k)` over a finite augmented algebra.
//!
//! A cochain of degree `n` is a dense table indexed by `n`-tuples of basis
//! elements of `A_+`, first index most significant. The differential is
//! `(df)(x_1..x_{n+1}) = sum_{i=1}^{n} (-1)^i f(.., x_i x_{i+1}, ..)` and the cup
//! product is concatenation, so `d(f g) = df g + (-1)^{|f|} f dg`.

mod classes;
mod cochain;
mod complex;

pub use classes::{
    coefficient_cochain, dual_cochain, free_basis_count, free_basis_hilbert_check, CohomologyBasis,
    CohomologyClass,
};
pub use cochain::Cochain;
pub use complex::{BarComplex, DEFAULT_BUDGET_MB};
