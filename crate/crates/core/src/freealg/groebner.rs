use std::collections::BTreeMap;

use super::{FreeElement, MonomialOrder, OrderKey, Word};
use crate::ffmat::PrimeField;

#[derive(Clone, Copy, Debug, PartialEq, Eq, serde::Serialize)]
pub enum GbStatus {
    /// Every overlap reduces to zero.
    Confirmed,
    /// Some overlap exceeded the degree cap or the basis kept growing.
    DegreeCapped,
}

/// One rewriting step: `coeff * left * relation * right` was subtracted.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Rewrite {
    pub left: Word,
    pub relation: usize,
    pub right: Word,
    pub coeff: u32,
}

/// A proper overlap of two tips: `tip(first) = prefix * shared` and
/// `tip(second) = shared * suffix`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Overlap {
    pub first: usize,
    pub second: usize,
    pub shared: usize,
    pub word: Word,
}

/// An inter-reduced, monic noncommutative Gröbner basis.
#[derive(Clone, Debug)]
pub struct GroebnerBasis {
    field: PrimeField,
    order: MonomialOrder,
    relations: Vec<FreeElement>,
    tips: Vec<Word>,
    status: GbStatus,
}

/// Work list keyed by the order, so the leading term is the last entry.
struct Work(BTreeMap<OrderKey, (Word, u32)>);

impl Work {
    fn new(order: &MonomialOrder, f: &FreeElement) -> Self {
        Work(f.terms().map(|(w, c)| (order.key(w), (w.clone(), c))).collect())
    }

    fn add(&mut self, field: PrimeField, order: &MonomialOrder, w: Word, c: u32) {
        if c == 0 {
            return;
        }
        use std::collections::btree_map::Entry;
        match self.0.entry(order.key(&w)) {
            Entry::Vacant(e) => {
                e.insert((w, c));
            }
            Entry::Occupied(mut e) => {
                let v = field.add(e.get().1, c);
                if v == 0 {
                    e.remove();
                } else {
                    e.get_mut().1 = v;
                }
            }
        }
    }
}

/// Leftmost tip occurrence in `w` (ties broken by tip index).
fn find_tip(tips: &[Word], w: &Word) -> Option<(usize, usize)> {
    let mut best: Option<(usize, usize)> = None;
    for (k, t) in tips.iter().enumerate() {
        if let Some(pos) = w.find(t) {
            if best.is_none_or(|(p, _)| pos < p) {
                best = Some((pos, k));
            }
        }
    }
    best
}

/// Reduces `f` modulo monic `relations` with leading words `tips`.
fn reduce(
    field: PrimeField,
    order: &MonomialOrder,
    relations: &[FreeElement],
    tips: &[Word],
    f: &FreeElement,
    mut certificate: Option<&mut Vec<Rewrite>>,
) -> FreeElement {
    let mut work = Work::new(order, f);
    let mut out = FreeElement::zero();
    while let Some((_, (w, c))) = work.0.pop_last() {
        match find_tip(tips, &w) {
            None => out.add_term(field, w, c),
            Some((pos, k)) => {
                let left = w.prefix(pos);
                let right = w.suffix_from(pos + tips[k].len());
                let neg = field.neg(c);
                for (t, x) in relations[k].terms() {
                    if t != &tips[k] {
                        work.add(field, order, t.wrap(&left, &right), field.mul(x, neg));
                    }
                }
                if let Some(cert) = certificate.as_deref_mut() {
                    cert.push(Rewrite {
                        left,
                        relation: k,
                        right,
                        coeff: c,
                    });
                }
            }
        }
    }
    out
}

fn tips_of(order: &MonomialOrder, rels: &[FreeElement]) -> Vec<Word> {
    rels.iter()
        .map(|r| r.leading(order).expect("nonzero relation").0.clone())
        .collect()
}

/// Makes every element monic and reduced modulo all the others; drops zeros.
fn inter_reduce(field: PrimeField, order: &MonomialOrder, mut rels: Vec<FreeElement>) -> Vec<FreeElement> {
    rels = rels
        .into_iter()
        .filter(|r| !r.is_zero())
        .map(|r| r.monic(field, order))
        .collect();
    loop {
        rels.sort_by_key(|r| order.key(r.leading(order).unwrap().0));
        rels.dedup();
        let mut changed = false;
        let mut i = 0;
        while i < rels.len() {
            let others: Vec<FreeElement> = rels
                .iter()
                .enumerate()
                .filter(|&(j, _)| j != i)
                .map(|(_, r)| r.clone())
                .collect();
            let tips = tips_of(order, &others);
            let r = reduce(field, order, &others, &tips, &rels[i], None).monic(field, order);
            if r.is_zero() {
                rels.remove(i);
                changed = true;
                continue;
            }
            if r != rels[i] {
                rels[i] = r;
                changed = true;
            }
            i += 1;
        }
        if !changed {
            return rels;
        }
    }
}

/// Largest basis size before completion gives up.
const MAX_BASIS: usize = 4096;

impl GroebnerBasis {
    /// Overlap completion of `relations`. Overlaps whose word is longer than
    /// `degree_cap` are not examined; if any exist the status is `DegreeCapped`.
    pub fn complete(
        field: PrimeField,
        order: MonomialOrder,
        relations: &[FreeElement],
        degree_cap: usize,
    ) -> GroebnerBasis {
        let mut rels = inter_reduce(field, &order, relations.to_vec());
        loop {
            let tips = tips_of(&order, &rels);
            let mut overlaps = overlaps_of(&tips);
            overlaps.sort_by_key(|o| (o.word.len(), o.first, o.second, o.shared));
            let mut capped = false;
            let mut fresh: Vec<FreeElement> = Vec::new();
            for o in &overlaps {
                if o.word.len() > degree_cap {
                    capped = true;
                    continue;
                }
                let s = s_element(field, &rels, &tips, o);
                let mut all = rels.clone();
                all.extend(fresh.iter().cloned());
                let all_tips = tips_of(&order, &all);
                let r = reduce(field, &order, &all, &all_tips, &s, None);
                if !r.is_zero() {
                    fresh.push(r.monic(field, &order));
                }
            }
            if fresh.is_empty() || rels.len() + fresh.len() > MAX_BASIS {
                let status = if fresh.is_empty() && !capped {
                    GbStatus::Confirmed
                } else {
                    GbStatus::DegreeCapped
                };
                return GroebnerBasis {
                    field,
                    order,
                    tips,
                    relations: rels,
                    status,
                };
            }
            rels.extend(fresh);
            rels = inter_reduce(field, &order, rels);
        }
    }

    pub fn field(&self) -> PrimeField {
        self.field
    }

    pub fn order(&self) -> &MonomialOrder {
        &self.order
    }

    pub fn relations(&self) -> &[FreeElement] {
        &self.relations
    }

    pub fn tips(&self) -> &[Word] {
        &self.tips
    }

    pub fn status(&self) -> GbStatus {
        self.status
    }

    pub fn is_confirmed(&self) -> bool {
        self.status == GbStatus::Confirmed
    }

    pub fn generators(&self) -> usize {
        self.order.generators()
    }

    pub fn is_normal(&self, w: &Word) -> bool {
        self.tips.iter().all(|t| !w.contains(t))
    }

    pub fn is_homogeneous(&self) -> bool {
        self.relations.iter().all(FreeElement::is_homogeneous)
    }

    pub fn normal_form(&self, f: &FreeElement) -> FreeElement {
        reduce(self.field, &self.order, &self.relations, &self.tips, f, None)
    }

    /// Normal form together with the rewriting steps; `f - nf` equals the sum of
    /// `coeff * left * relations[relation] * right` over the certificate.
    pub fn normal_form_with_certificate(&self, f: &FreeElement) -> (FreeElement, Vec<Rewrite>) {
        let mut cert = Vec::new();
        let nf = reduce(self.field, &self.order, &self.relations, &self.tips, f, Some(&mut cert));
        (nf, cert)
    }

    pub fn reduce_word(&self, w: &Word) -> FreeElement {
        self.normal_form(&FreeElement::word(w.clone()))
    }

    pub fn overlaps(&self) -> Vec<Overlap> {
        overlaps_of(&self.tips)
    }

    /// The S-element of an overlap.
    pub fn s_element(&self, o: &Overlap) -> FreeElement {
        s_element(self.field, &self.relations, &self.tips, o)
    }

    /// Tip-free words of length at most `max_len`, sorted by length and then by the order.
    pub fn enumerate_normal_words(&self, max_len: usize) -> Vec<Word> {
        let mut out = vec![Word::empty()];
        let mut level = vec![Word::empty()];
        for _ in 0..max_len {
            let next = self.extend_level(&level);
            if next.is_empty() {
                break;
            }
            out.extend(next.iter().cloned());
            level = next;
        }
        out
    }

    /// Normal words of length `len + 1` extending the (normal) words of length `len`.
    pub(crate) fn extend_level(&self, level: &[Word]) -> Vec<Word> {
        let mut next: Vec<Word> = Vec::new();
        for w in level {
            for g in 0..self.generators() {
                let v = w.concat(&Word::letter(g));
                if self.tips.iter().all(|t| !v.ends_with(t)) {
                    next.push(v);
                }
            }
        }
        next.sort_by_key(|w| self.order.key(w));
        next
    }

    /// Every relation has a tip of length 2 and terms of length at most 2 (which then
    /// sit strictly below the tip).
    pub fn is_pbw(&self) -> bool {
        self.relations.iter().zip(&self.tips).all(|(r, t)| {
            t.len() == 2
                && r.terms()
                    .all(|(w, _)| w == t || (w.len() <= 2 && self.order.compare(w, t).is_lt()))
        })
    }
}

fn overlaps_of(tips: &[Word]) -> Vec<Overlap> {
    let mut out = Vec::new();
    for (i, s) in tips.iter().enumerate() {
        for (j, t) in tips.iter().enumerate() {
            for k in 1..s.len().min(t.len()) {
                if s.letters()[s.len() - k..] == t.letters()[..k] {
                    out.push(Overlap {
                        first: i,
                        second: j,
                        shared: k,
                        word: s.concat(&t.suffix_from(k)),
                    });
                }
            }
        }
    }
    out
}

fn s_element(field: PrimeField, rels: &[FreeElement], tips: &[Word], o: &Overlap) -> FreeElement {
    let s = &tips[o.first];
    let t = &tips[o.second];
    let prefix = s.prefix(s.len() - o.shared);
    let suffix = t.suffix_from(o.shared);
    let mut out = rels[o.first].wrapped(field, &Word::empty(), &suffix, 1);
    out.add_scaled(field, &rels[o.second].wrapped(field, &prefix, &Word::empty(), 1), field.neg(1));
    out
}
