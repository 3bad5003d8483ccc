//! Anick's resolution of the trivial module.
//!
//! Chains are built right to left: an `(n+1)`-chain is `t c` where `c` is an
//! `n`-chain with first piece `u`, `t` is a proper prefix of a tip, and `t u`
//! contains exactly one tip, as a prefix. Free modules are left modules
//! `A (x) kC_n`, and `d_{n+1}(1 (x) tc) = t (x) c - i_{n-1}(t d_n(1 (x) c))` with
//! the contracting homotopy `i` computed by leading terms.

mod chains;
mod resolution;

pub use chains::{chain_degree_profile, chain_sets, chains, Chain, ChainSet};
pub use resolution::{AnickResolution, ExtDims, ModuleElement};

#[cfg(test)]
mod tests;
