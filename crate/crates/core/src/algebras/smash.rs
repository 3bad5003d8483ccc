//! Smash products `A # kG` for a cyclic `G = <g>` of order `p`.
//!
//! With `h = g - 1` the group algebra is `k[h]/(h^p)`, and the commutation
//! `g x = g(x) g` becomes `h x - x h - (g(x) - x)(h + 1)`.

use super::{validate_action, GroupAction, PresentedAlgebra, QuotientAlgebra};
use crate::freealg::{FreeElement, MonomialOrder, OrderKind, Presentation, Word};
use crate::{Error, Result};

/// Name of the extra generator `g - 1`.
pub const GROUP_GENERATOR: &str = "h";

/// Relations of `A # kG` in the generators of `A` and `h`, ordered deg-lex with `h`
/// above every generator of `A`.
pub fn smash_presentation(base: &Presentation, action: &GroupAction) -> Result<Presentation> {
    let n = base.generators();
    if action.images().len() != n {
        return Err(Error::DimensionMismatch {
            expected: n,
            got: action.images().len(),
        });
    }
    if base.names.iter().any(|s| s == GROUP_GENERATOR) {
        return Err(Error::Invalid(format!("generator name {GROUP_GENERATOR} is reserved")));
    }
    let field = base.field;
    let mut names = base.names.clone();
    names.push(GROUP_GENERATOR.into());
    let mut precedence = base.order.precedence().to_vec();
    precedence.push(n as u32);
    let order = MonomialOrder::new(OrderKind::DegLex, vec![vec![1]; n + 1], precedence)?;
    let h = FreeElement::generator(n);
    let h_plus_one = h.add(field, &FreeElement::one());
    let mut relations = base.relations.clone();
    relations.push(FreeElement::word(Word::power(n, action.order())));
    for (g, image) in action.images().iter().enumerate() {
        let x = FreeElement::generator(g);
        let twist = image.sub(field, &x).mul(field, &h_plus_one);
        relations.push(h.mul(field, &x).sub(field, &x.mul(field, &h)).sub(field, &twist));
    }
    let mut pres = Presentation::new(field, names, order, relations)?;
    pres.augmentation[..n].copy_from_slice(&base.augmentation);
    Ok(pres)
}

/// `A # kG` as a finite algebra together with the embedding of `A` and the
/// conjugation action of `g`.
#[derive(Debug)]
pub struct SmashProduct {
    pub algebra: QuotientAlgebra,
    pub base_dim: usize,
    pub group_order: usize,
    /// Index in the smash basis of each basis element of `A`.
    pub embedding: Vec<usize>,
    /// `g` acting by conjugation: `g(x)` on `A`, identity on `h`.
    pub conjugation: GroupAction,
}

/// Builds `A # kG`, checking the action first and the dimension `dim A * |G|` after.
pub fn build_smash(base: &QuotientAlgebra, action: &GroupAction) -> Result<SmashProduct> {
    let report = validate_action(action, base.presented())?;
    if !report.all_ok() {
        return Err(Error::Action(format!("not a valid action: {report:?}")));
    }
    let pres = smash_presentation(base.presentation(), action)?;
    let cap = 4 * pres.relations.iter().map(FreeElement::max_len).max().unwrap_or(1) + 4;
    let name = format!("{}#kC{}", base.name(), action.order());
    let algebra = QuotientAlgebra::new(name, pres, cap)?;
    let expected = base.dim() * action.order();
    if algebra.dim() != expected {
        return Err(Error::DimensionMismatch {
            expected,
            got: algebra.dim(),
        });
    }
    let embedding = base
        .basis()
        .iter()
        .map(|w| {
            algebra
                .index_of(w)
                .ok_or_else(|| Error::Invalid("base basis word is not normal in the smash product".into()))
        })
        .collect::<Result<Vec<_>>>()?;
    let n = base.generators();
    let mut images = action.images().to_vec();
    images.push(FreeElement::generator(n));
    let conjugation = GroupAction::new(action.order(), images)?;
    Ok(SmashProduct {
        algebra,
        base_dim: base.dim(),
        group_order: action.order(),
        embedding,
        conjugation,
    })
}

/// `B # kG` for an infinite-dimensional `B`, as a presented algebra.
pub fn build_presented_smash(base: &PresentedAlgebra, action: &GroupAction, degree_cap: usize) -> Result<PresentedAlgebra> {
    let report = validate_action(action, base)?;
    if !report.all_ok() {
        return Err(Error::Action(format!("not a valid action: {report:?}")));
    }
    PresentedAlgebra::new(smash_presentation(base.presentation(), action)?, degree_cap)
}
