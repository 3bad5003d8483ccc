use std::collections::BTreeMap;

use super::{MonomialOrder, Word};
use crate::ffmat::PrimeField;

/// A finite linear combination of words with nonzero `F_p` coefficients.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct FreeElement {
    terms: BTreeMap<Word, u32>,
}

impl FreeElement {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn one() -> Self {
        Self::word(Word::empty())
    }

    pub fn word(w: Word) -> Self {
        Self::term(w, 1)
    }

    pub fn generator(g: usize) -> Self {
        Self::word(Word::letter(g))
    }

    /// `c * w`; the coefficient must already be reduced.
    pub fn term(w: Word, c: u32) -> Self {
        let mut terms = BTreeMap::new();
        if c != 0 {
            terms.insert(w, c);
        }
        FreeElement { terms }
    }

    pub fn from_terms(field: PrimeField, terms: impl IntoIterator<Item = (Word, u32)>) -> Self {
        let mut e = Self::zero();
        for (w, c) in terms {
            e.add_term(field, w, c);
        }
        e
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coeff(&self, w: &Word) -> u32 {
        self.terms.get(w).copied().unwrap_or(0)
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Word, u32)> + '_ {
        self.terms.iter().map(|(w, &c)| (w, c))
    }

    pub fn into_terms(self) -> impl Iterator<Item = (Word, u32)> {
        self.terms.into_iter()
    }

    pub fn add_term(&mut self, field: PrimeField, w: Word, c: u32) {
        let c = c % field.p();
        if c == 0 {
            return;
        }
        use std::collections::btree_map::Entry;
        match self.terms.entry(w) {
            Entry::Vacant(e) => {
                e.insert(c);
            }
            Entry::Occupied(mut e) => {
                let v = field.add(*e.get(), c);
                if v == 0 {
                    e.remove();
                } else {
                    *e.get_mut() = v;
                }
            }
        }
    }

    /// `self += c * other`
    pub fn add_scaled(&mut self, field: PrimeField, other: &FreeElement, c: u32) {
        for (w, x) in other.terms() {
            self.add_term(field, w.clone(), field.mul(x, c));
        }
    }

    pub fn scaled(&self, field: PrimeField, c: u32) -> FreeElement {
        let mut out = FreeElement::zero();
        out.add_scaled(field, self, c);
        out
    }

    pub fn sub(&self, field: PrimeField, other: &FreeElement) -> FreeElement {
        let mut out = self.clone();
        out.add_scaled(field, other, field.neg(1));
        out
    }

    pub fn add(&self, field: PrimeField, other: &FreeElement) -> FreeElement {
        let mut out = self.clone();
        out.add_scaled(field, other, 1);
        out
    }

    pub fn mul(&self, field: PrimeField, other: &FreeElement) -> FreeElement {
        let mut out = FreeElement::zero();
        for (u, a) in self.terms() {
            for (v, b) in other.terms() {
                out.add_term(field, u.concat(v), field.mul(a, b));
            }
        }
        out
    }

    /// `c * left * self * right`
    pub fn wrapped(&self, field: PrimeField, left: &Word, right: &Word, c: u32) -> FreeElement {
        FreeElement::from_terms(
            field,
            self.terms().map(|(w, x)| (w.wrap(left, right), field.mul(x, c))),
        )
    }

    pub fn pow(&self, field: PrimeField, n: usize) -> FreeElement {
        (0..n).fold(FreeElement::one(), |acc, _| acc.mul(field, self))
    }

    /// Leading word and coefficient.
    pub fn leading(&self, order: &MonomialOrder) -> Option<(&Word, u32)> {
        self.terms
            .iter()
            .max_by_key(|(w, _)| order.key(w))
            .map(|(w, &c)| (w, c))
    }

    /// Scales so that the leading coefficient is 1.
    pub fn monic(&self, field: PrimeField, order: &MonomialOrder) -> FreeElement {
        match self.leading(order) {
            None => FreeElement::zero(),
            Some((_, c)) => self.scaled(field, field.inv(c)),
        }
    }

    pub fn max_len(&self) -> usize {
        self.terms.keys().map(Word::len).max().unwrap_or(0)
    }

    /// All terms have the same word length.
    pub fn is_homogeneous(&self) -> bool {
        let mut lens = self.terms.keys().map(Word::len);
        match lens.next() {
            None => true,
            Some(l) => lens.all(|m| m == l),
        }
    }

    /// Substitutes `images[g]` for every generator `g`.
    pub fn substitute(&self, field: PrimeField, images: &[FreeElement]) -> FreeElement {
        let mut out = FreeElement::zero();
        for (w, c) in self.terms() {
            let prod = w
                .letters()
                .iter()
                .fold(FreeElement::one(), |acc, &g| acc.mul(field, &images[g as usize]));
            out.add_scaled(field, &prod, c);
        }
        out
    }

    /// Infix rendering, terms in decreasing order, e.g. `b*a - a*b + a^2`.
    pub fn to_expr(&self, field: PrimeField, order: &MonomialOrder, names: &[String]) -> String {
        if self.is_zero() {
            return "0".into();
        }
        let mut terms: Vec<_> = self.terms().collect();
        terms.sort_by_key(|(w, _)| std::cmp::Reverse(order.key(w)));
        let mut s = String::new();
        for (i, (w, c)) in terms.into_iter().enumerate() {
            let sc = field.signed(c);
            let mag = sc.unsigned_abs();
            if i == 0 {
                if sc < 0 {
                    s.push('-');
                }
            } else {
                s.push_str(if sc < 0 { " - " } else { " + " });
            }
            match (mag, w.is_empty()) {
                (_, true) => s.push_str(&mag.to_string()),
                (1, false) => s.push_str(&w.to_expr(names)),
                (_, false) => s.push_str(&format!("{mag}*{}", w.to_expr(names))),
            }
        }
        s
    }
}
