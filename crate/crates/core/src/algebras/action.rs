use serde::Serialize;

use super::{PresentedAlgebra, QuotientAlgebra};
use crate::ffmat::{FMatrix, SparseVec};
use crate::freealg::FreeElement;
use crate::{Error, Result};

/// A cyclic group `<g | g^n>` acting by algebra automorphisms, given by the images
/// of the generators under `g`.
#[derive(Clone, Debug)]
pub struct GroupAction {
    order: usize,
    images: Vec<FreeElement>,
}

/// Outcome of [`validate_action`].
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct ActionReport {
    pub respects_relations: bool,
    pub order_n: bool,
    pub preserves_augmentation: bool,
}

impl ActionReport {
    pub fn all_ok(&self) -> bool {
        self.respects_relations && self.order_n && self.preserves_augmentation
    }
}

impl GroupAction {
    pub fn new(order: usize, images: Vec<FreeElement>) -> Result<Self> {
        if order == 0 {
            return Err(Error::Action("group order must be positive".into()));
        }
        Ok(GroupAction { order, images })
    }

    pub fn order(&self) -> usize {
        self.order
    }

    pub fn images(&self) -> &[FreeElement] {
        &self.images
    }

    fn check_arity(&self, alg: &PresentedAlgebra) -> Result<()> {
        if self.images.len() != alg.generators() {
            return Err(Error::DimensionMismatch {
                expected: alg.generators(),
                got: self.images.len(),
            });
        }
        Ok(())
    }

    /// `g(x)` in normal form.
    pub fn apply(&self, alg: &PresentedAlgebra, x: &FreeElement) -> Result<FreeElement> {
        self.check_arity(alg)?;
        Ok(alg.normal_form(&x.substitute(alg.field(), &self.images)))
    }

    /// Images of the generators under `g^k`, reduced.
    pub fn power_images(&self, alg: &PresentedAlgebra, k: usize) -> Result<Vec<FreeElement>> {
        self.check_arity(alg)?;
        let f = alg.field();
        let mut cur: Vec<FreeElement> = (0..alg.generators()).map(FreeElement::generator).collect();
        for _ in 0..k % self.order {
            cur = cur
                .iter()
                .map(|x| alg.normal_form(&x.substitute(f, &self.images)))
                .collect();
        }
        Ok(cur)
    }

    /// Matrix of `g^k` on the basis of a finite algebra; column `j` holds the image
    /// of basis element `j`.
    pub fn matrix(&self, alg: &QuotientAlgebra, k: usize) -> Result<FMatrix> {
        let images = self.power_images(alg.presented(), k)?;
        let f = alg.field();
        let cols: Vec<SparseVec> = alg
            .basis()
            .iter()
            .map(|w| alg.to_vec(&FreeElement::word(w.clone()).substitute(f, &images)))
            .collect();
        FMatrix::from_columns(f, alg.dim(), cols)
    }

    /// Matrix of `g^-1`.
    pub fn inverse_matrix(&self, alg: &QuotientAlgebra) -> Result<FMatrix> {
        self.matrix(alg, self.order - 1)
    }
}

/// Checks that the images define an automorphism of order dividing `n` that
/// commutes with the augmentation.
pub fn validate_action(action: &GroupAction, alg: &PresentedAlgebra) -> Result<ActionReport> {
    action.check_arity(alg)?;
    let f = alg.field();
    let pres = alg.presentation();
    let respects_relations = pres
        .relations
        .iter()
        .all(|r| alg.normal_form(&r.substitute(f, action.images())).is_zero());
    let mut cur: Vec<FreeElement> = (0..alg.generators()).map(FreeElement::generator).collect();
    for _ in 0..action.order() {
        cur = cur
            .iter()
            .map(|x| alg.normal_form(&x.substitute(f, action.images())))
            .collect();
    }
    let order_n = cur
        .iter()
        .enumerate()
        .all(|(g, x)| *x == FreeElement::generator(g));
    let preserves_augmentation = action
        .images()
        .iter()
        .enumerate()
        .all(|(g, x)| alg.augment(x) == pres.augmentation[g]);
    Ok(ActionReport {
        respects_relations,
        order_n,
        preserves_augmentation,
    })
}
