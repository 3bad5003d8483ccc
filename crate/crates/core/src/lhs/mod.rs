//! Cohomology of `C_p` with coefficients and the `E_2` page
//! `E_2^{s,q} = H^s(C_p, H^q(A, k))`.
//!
//! Group cohomology uses the periodic resolution with maps `g - 1` and the norm
//! `N = 1 + g + ... + g^{p-1}`.

use serde::Serialize;

use crate::algebras::{build_a, smash, GroupAction};
use crate::barcoh::{BarComplex, CohomologyBasis};
use crate::ffmat::{FMatrix, PrimeField, SparseVec};
use crate::{Error, Exec, Result};

/// A finite-dimensional module over `k[C_n]`, given by the matrix of the generator.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GModule {
    matrix: FMatrix,
    order: usize,
}

impl GModule {
    pub fn new(matrix: FMatrix, order: usize) -> Result<Self> {
        if matrix.rows() != matrix.cols() {
            return Err(Error::DimensionMismatch {
                expected: matrix.rows(),
                got: matrix.cols(),
            });
        }
        if matrix.pow(order as u64)? != FMatrix::identity(matrix.field(), matrix.rows()) {
            return Err(Error::Action(format!("generator matrix does not have order dividing {order}")));
        }
        Ok(GModule { matrix, order })
    }

    pub fn trivial(field: PrimeField, dim: usize, order: usize) -> Self {
        GModule {
            matrix: FMatrix::identity(field, dim),
            order,
        }
    }

    /// The regular module `k[C_n]` with `g` permuting the group elements.
    pub fn regular(field: PrimeField, order: usize) -> Self {
        let cols = (0..order).map(|j| SparseVec::unit((j + 1) % order)).collect();
        GModule {
            matrix: FMatrix::from_columns(field, order, cols).expect("square permutation"),
            order,
        }
    }

    pub fn dim(&self) -> usize {
        self.matrix.rows()
    }

    pub fn order(&self) -> usize {
        self.order
    }

    pub fn matrix(&self) -> &FMatrix {
        &self.matrix
    }

    fn field(&self) -> PrimeField {
        self.matrix.field()
    }

    fn minus_one(&self) -> FMatrix {
        self.matrix
            .sub(&FMatrix::identity(self.field(), self.dim()))
            .expect("square")
    }

    fn norm(&self) -> FMatrix {
        let id = FMatrix::identity(self.field(), self.dim());
        let mut acc = FMatrix::zeros(self.field(), self.dim(), self.dim());
        let mut power = id;
        for _ in 0..self.order {
            acc = acc.add(&power).expect("square");
            power = power.mul(&self.matrix).expect("square");
        }
        acc
    }
}

/// `dim H^n(C_n, M)`.
pub fn cyclic_cohomology(m: &GModule, n: usize) -> usize {
    let d = m.minus_one().rank();
    if n == 0 {
        return m.dim() - d;
    }
    // ker N / im(g-1) in odd degrees and ker(g-1) / im N in even ones have the
    // same dimension.
    m.dim() - d - m.norm().rank()
}

/// `H^q(A, k)` as a `G`-module, in the canonical cocycle basis of [`CohomologyBasis`].
pub fn g_module_of_cohomology(bar: &BarComplex<'_>, action: &GroupAction, q: usize) -> Result<GModule> {
    let basis = CohomologyBasis::new(bar, q)?;
    let cols = basis
        .representatives
        .iter()
        .map(|z| {
            let gz = bar.g_action(z, action)?;
            let coords = basis
                .coordinates(&gz)
                .ok_or_else(|| Error::Action("image of a cocycle is not a cocycle".into()))?;
            Ok(SparseVec::from_dense(&coords))
        })
        .collect::<Result<Vec<_>>>()?;
    GModule::new(FMatrix::from_columns(bar.field(), basis.dim(), cols)?, action.order())
}

/// `dim E_2^{s,q}` for `s <= s_max`, `q <= q_max`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct E2Page {
    /// `dims[s][q]`.
    pub dims: Vec<Vec<usize>>,
}

impl E2Page {
    pub fn get(&self, s: usize, q: usize) -> usize {
        self.dims[s][q]
    }

    pub fn s_max(&self) -> usize {
        self.dims.len() - 1
    }

    pub fn q_max(&self) -> usize {
        self.dims[0].len() - 1
    }

    /// `sum_{s+q=n} dim E_2^{s,q}`; needs `n <= s_max` and `n <= q_max`.
    pub fn total(&self, n: usize) -> usize {
        (0..=n).map(|s| self.get(s, n - s)).sum()
    }
}

pub fn e2_page(bar: &BarComplex<'_>, action: &GroupAction, s_max: usize, q_max: usize) -> Result<E2Page> {
    let modules = (0..=q_max)
        .map(|q| g_module_of_cohomology(bar, action, q))
        .collect::<Result<Vec<_>>>()?;
    let dims = (0..=s_max)
        .map(|s| modules.iter().map(|m| cyclic_cohomology(m, s)).collect())
        .collect();
    Ok(E2Page { dims })
}

/// `dim H^n(A # kG, k) <= sum_{s+q=n} dim E_2^{s,q}`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ConvergenceReport {
    pub n: usize,
    pub smash_dim: usize,
    pub e2_total: usize,
    pub holds: bool,
}

/// Both sides of the inequality for `A_p` with the standard action, degrees `0..=top`.
pub fn convergence_check(p: u32, top: usize, budget_mb: u64, exec: Exec) -> Result<Vec<ConvergenceReport>> {
    let alg = build_a(p)?;
    let s = smash(p)?;
    let action = crate::algebras::shear_action(p)?;
    let bar = BarComplex::new(&alg, budget_mb, exec)?;
    let sbar = BarComplex::new(&s.algebra, budget_mb, exec)?;
    let page = e2_page(&bar, &action, top, top)?;
    (0..=top)
        .map(|n| {
            let smash_dim = sbar.ext_dim(n)?;
            let e2_total = page.total(n);
            Ok(ConvergenceReport {
                n,
                smash_dim,
                e2_total,
                holds: smash_dim <= e2_total,
            })
        })
        .collect()
}

#[cfg(test)]
mod tests;
