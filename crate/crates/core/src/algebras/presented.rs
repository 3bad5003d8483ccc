use crate::ffmat::PrimeField;
use crate::freealg::{FreeElement, GroebnerBasis, Presentation, Word};
use crate::{Error, Result};

/// An augmented algebra `k<X>/I` with a confirmed Gröbner basis for `I`.
#[derive(Clone, Debug)]
pub struct PresentedAlgebra {
    presentation: Presentation,
    gb: GroebnerBasis,
}

impl PresentedAlgebra {
    /// Completes the relations; fails unless the basis is confirmed below
    /// `degree_cap` and the augmentation kills every relation.
    pub fn new(presentation: Presentation, degree_cap: usize) -> Result<Self> {
        for r in &presentation.relations {
            if presentation.augment(r) != 0 {
                return Err(Error::Augmentation(format!(
                    "relation {} does not vanish under the augmentation",
                    presentation.render(r)
                )));
            }
        }
        let gb = GroebnerBasis::complete(
            presentation.field,
            presentation.order.clone(),
            &presentation.relations,
            degree_cap,
        );
        if !gb.is_confirmed() {
            return Err(Error::Completion(format!(
                "degree cap {degree_cap} reached with {} basis elements",
                gb.relations().len()
            )));
        }
        Ok(PresentedAlgebra { presentation, gb })
    }

    pub fn presentation(&self) -> &Presentation {
        &self.presentation
    }

    pub fn gb(&self) -> &GroebnerBasis {
        &self.gb
    }

    pub fn field(&self) -> PrimeField {
        self.presentation.field
    }

    pub fn names(&self) -> &[String] {
        &self.presentation.names
    }

    pub fn generators(&self) -> usize {
        self.presentation.generators()
    }

    pub fn normal_form(&self, f: &FreeElement) -> FreeElement {
        self.gb.normal_form(f)
    }

    pub fn mul(&self, x: &FreeElement, y: &FreeElement) -> FreeElement {
        self.normal_form(&x.mul(self.field(), y))
    }

    pub fn parse(&self, text: &str) -> Result<FreeElement> {
        self.presentation.parse_expr(text)
    }

    pub fn render(&self, f: &FreeElement) -> String {
        self.presentation.render(f)
    }

    /// Monomial `name^n` for a generator name.
    pub fn power(&self, name: &str, n: usize) -> Result<FreeElement> {
        let g = self
            .presentation
            .generator(name)
            .ok_or_else(|| Error::Invalid(format!("no generator {name}")))?;
        Ok(FreeElement::word(Word::power(g, n)))
    }

    /// True iff `x` commutes with every generator.
    pub fn is_central(&self, x: &FreeElement) -> bool {
        let f = self.field();
        (0..self.generators()).all(|g| {
            let gen = FreeElement::generator(g);
            self.normal_form(&x.mul(f, &gen).sub(f, &gen.mul(f, x))).is_zero()
        })
    }

    pub fn augment(&self, x: &FreeElement) -> u32 {
        self.presentation.augment(x)
    }
}
