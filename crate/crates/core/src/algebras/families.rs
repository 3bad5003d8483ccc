//! The algebras `B`, `A_p`, `gr A_p` and `A_p # kC_p` over `F_p`.
//!
//! Generators are `a` (weight `(0,1)`) and `b` (weight `(1,0)`) with `b` above `a`
//! on ties, so the tip of `ba - ab - a^2/2` is `ba`.

use super::{build_presented_smash, build_smash, GroupAction, PresentedAlgebra, QuotientAlgebra, SmashProduct};
use crate::ffmat::PrimeField;
use crate::freealg::{FreeElement, MonomialOrder, OrderKind, Presentation, Word};
use crate::Result;

pub const A: usize = 0;
pub const B: usize = 1;

fn base_order() -> MonomialOrder {
    MonomialOrder::new(OrderKind::WeightedLex, vec![vec![0, 1], vec![1, 0]], vec![0, 1])
        .expect("valid order")
}

fn commutator(field: PrimeField, half_a2: u32) -> FreeElement {
    let a = FreeElement::generator(A);
    let b = FreeElement::generator(B);
    let mut r = b.mul(field, &a).sub(field, &a.mul(field, &b));
    r.add_term(field, Word::power(A, 2), field.neg(half_a2));
    r
}

fn with_relations(field: PrimeField, relations: Vec<FreeElement>) -> Result<Presentation> {
    Presentation::new(field, vec!["a".into(), "b".into()], base_order(), relations)
}

/// `B = k<a,b>/(ba - ab - a^2/2)`.
pub fn presentation_b(p: u32) -> Result<Presentation> {
    let field = PrimeField::new(p)?;
    with_relations(field, vec![commutator(field, field.half())])
}

/// `A_p = B/(a^p, b^p)`.
pub fn presentation_a(p: u32) -> Result<Presentation> {
    let field = PrimeField::new(p)?;
    let p = p as usize;
    with_relations(
        field,
        vec![
            FreeElement::word(Word::power(A, p)),
            FreeElement::word(Word::power(B, p)),
            commutator(field, field.half()),
        ],
    )
}

/// The associated graded `k<a,b>/(a^p, b^p, ba - ab)`.
pub fn presentation_gr_a(p: u32) -> Result<Presentation> {
    let field = PrimeField::new(p)?;
    let p = p as usize;
    with_relations(
        field,
        vec![
            FreeElement::word(Word::power(A, p)),
            FreeElement::word(Word::power(B, p)),
            commutator(field, 0),
        ],
    )
}

/// Presentation file text with the commutator written as `b*a - a*b - h*a^2`, where
/// `h` is the residue of `1/2`; every other line is as [`Presentation::to_text`].
pub fn export_text(pres: &Presentation) -> String {
    let field = pres.field;
    let plain = format!("relation {}", pres.render(&commutator(field, field.half())));
    let written = format!("relation b*a - a*b - {}*a^2", field.half());
    pres.to_text()
        .lines()
        .map(|line| if line == plain { written.as_str() } else { line })
        .map(|line| format!("{line}\n"))
        .collect()
}

fn cap(p: u32) -> usize {
    4 * p as usize + 4
}

pub fn build_b(p: u32) -> Result<PresentedAlgebra> {
    PresentedAlgebra::new(presentation_b(p)?, cap(p))
}

pub fn build_a(p: u32) -> Result<QuotientAlgebra> {
    QuotientAlgebra::new(format!("A_{p}"), presentation_a(p)?, cap(p))
}

pub fn build_gr_a(p: u32) -> Result<QuotientAlgebra> {
    QuotientAlgebra::new(format!("grA_{p}"), presentation_gr_a(p)?, cap(p))
}

/// `g(a) = a`, `g(b) = b - a`, of order `p`.
pub fn shear_action(p: u32) -> Result<GroupAction> {
    let field = PrimeField::new(p)?;
    let a = FreeElement::generator(A);
    let b = FreeElement::generator(B);
    GroupAction::new(p as usize, vec![a.clone(), b.sub(field, &a)])
}

/// `A_p # kC_p`.
pub fn smash(p: u32) -> Result<SmashProduct> {
    build_smash(&build_a(p)?, &shear_action(p)?)
}

/// `B # kC_p`, infinite dimensional.
pub fn build_b_smash(p: u32) -> Result<PresentedAlgebra> {
    build_presented_smash(&build_b(p)?, &shear_action(p)?, cap(p))
}
