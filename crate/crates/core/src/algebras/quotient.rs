use std::collections::HashMap;
use std::sync::OnceLock;

use super::PresentedAlgebra;
use crate::ffmat::{PrimeField, SparseVec};
use crate::freealg::{FreeElement, Presentation, Word};
use crate::{Error, Result};

/// Largest basis we are willing to enumerate.
const MAX_DIM: usize = 1 << 16;

/// A finite-dimensional augmented algebra with its normal-word basis.
///
/// Elements are sparse coordinate vectors over the basis. Products of basis
/// elements are computed on first use by left multiplication with generators and
/// cached; each cache slot is filled at most once.
#[derive(Debug)]
pub struct QuotientAlgebra {
    name: String,
    base: PresentedAlgebra,
    basis: Vec<Word>,
    index: HashMap<Word, usize>,
    /// `left_gen[g][i]` is `g * basis[i]`.
    left_gen: Vec<Vec<SparseVec>>,
    products: Vec<OnceLock<SparseVec>>,
}

impl QuotientAlgebra {
    pub fn new(name: impl Into<String>, presentation: Presentation, degree_cap: usize) -> Result<Self> {
        Self::from_presented(name, PresentedAlgebra::new(presentation, degree_cap)?)
    }

    pub fn from_presented(name: impl Into<String>, base: PresentedAlgebra) -> Result<Self> {
        let gb = base.gb();
        let mut basis = vec![Word::empty()];
        let mut level = vec![Word::empty()];
        loop {
            let next = gb.extend_level(&level);
            if next.is_empty() {
                break;
            }
            basis.extend(next.iter().cloned());
            if basis.len() > MAX_DIM {
                return Err(Error::NotFinite(next[0].len()));
            }
            level = next;
        }
        let index: HashMap<Word, usize> = basis.iter().cloned().enumerate().map(|(i, w)| (w, i)).collect();
        let field = base.field();
        let mut left_gen = Vec::with_capacity(base.generators());
        for g in 0..base.generators() {
            let row = basis
                .iter()
                .map(|w| {
                    let nf = gb.reduce_word(&Word::letter(g).concat(w));
                    SparseVec::from_pairs(field, nf.terms().map(|(u, c)| (index[u], c)).collect())
                })
                .collect();
            left_gen.push(row);
        }
        let products = (0..basis.len() * basis.len()).map(|_| OnceLock::new()).collect();
        Ok(QuotientAlgebra {
            name: name.into(),
            base,
            basis,
            index,
            left_gen,
            products,
        })
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn presented(&self) -> &PresentedAlgebra {
        &self.base
    }

    pub fn presentation(&self) -> &Presentation {
        self.base.presentation()
    }

    pub fn field(&self) -> PrimeField {
        self.base.field()
    }

    pub fn names(&self) -> &[String] {
        self.base.names()
    }

    pub fn generators(&self) -> usize {
        self.base.generators()
    }

    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    pub fn basis(&self) -> &[Word] {
        &self.basis
    }

    pub fn word(&self, i: usize) -> &Word {
        &self.basis[i]
    }

    pub fn index_of(&self, w: &Word) -> Option<usize> {
        self.index.get(w).copied()
    }

    /// Index of the unit (the empty word).
    pub fn unit(&self) -> usize {
        0
    }

    fn left_mul_gen(&self, g: usize, v: &SparseVec) -> SparseVec {
        let f = self.field();
        let mut out = SparseVec::new();
        for (i, c) in v.iter() {
            out.add_scaled(f, &self.left_gen[g][i], c);
        }
        out
    }

    /// Coordinates of `w * basis[j]`.
    fn word_times(&self, w: &Word, j: usize) -> SparseVec {
        w.letters()
            .iter()
            .rev()
            .fold(SparseVec::unit(j), |v, &g| self.left_mul_gen(g as usize, &v))
    }

    /// Product of two basis elements.
    pub fn mul_basis(&self, i: usize, j: usize) -> &SparseVec {
        self.products[i * self.dim() + j].get_or_init(|| self.word_times(&self.basis[i], j))
    }

    pub fn mul(&self, x: &SparseVec, y: &SparseVec) -> SparseVec {
        let f = self.field();
        let mut out = SparseVec::new();
        for (i, a) in x.iter() {
            for (j, b) in y.iter() {
                out.add_scaled(f, self.mul_basis(i, j), f.mul(a, b));
            }
        }
        out
    }

    /// Coordinates of the image of a free-algebra element.
    pub fn to_vec(&self, x: &FreeElement) -> SparseVec {
        let f = self.field();
        let mut out = SparseVec::new();
        for (w, c) in x.terms() {
            out.add_scaled(f, &self.word_times(w, self.unit()), c);
        }
        out
    }

    pub fn to_free(&self, v: &SparseVec) -> FreeElement {
        FreeElement::from_terms(self.field(), v.iter().map(|(i, c)| (self.basis[i].clone(), c)))
    }

    pub fn parse(&self, text: &str) -> Result<SparseVec> {
        Ok(self.to_vec(&self.base.parse(text)?))
    }

    pub fn render(&self, v: &SparseVec) -> String {
        self.base.render(&self.to_free(v))
    }

    pub fn augmentation_of_basis(&self, i: usize) -> u32 {
        let f = self.field();
        let aug = &self.presentation().augmentation;
        self.basis[i]
            .letters()
            .iter()
            .fold(1, |acc, &g| f.mul(acc, aug[g as usize]))
    }

    pub fn augment(&self, v: &SparseVec) -> u32 {
        let f = self.field();
        v.iter()
            .fold(0, |acc, (i, c)| f.mul_add(acc, c, self.augmentation_of_basis(i)))
    }

    /// Whether every generator lies in the augmentation ideal, in which case the
    /// nonempty normal words form a basis of it.
    pub fn generators_augmented_to_zero(&self) -> bool {
        self.presentation().augmentation.iter().all(|&e| e == 0)
    }

    /// Basis indices of the nonempty normal words.
    pub fn positive_indices(&self) -> Vec<usize> {
        (1..self.dim()).collect()
    }

    /// Word length of a basis element.
    pub fn degree(&self, i: usize) -> usize {
        self.basis[i].len()
    }

    /// `eps(uv) = eps(u) eps(v)` on every pair of basis elements.
    pub fn augmentation_is_multiplicative(&self) -> bool {
        let f = self.field();
        (0..self.dim()).all(|i| {
            (0..self.dim()).all(|j| {
                self.augment(self.mul_basis(i, j))
                    == f.mul(self.augmentation_of_basis(i), self.augmentation_of_basis(j))
            })
        })
    }

    pub fn is_central(&self, x: &SparseVec) -> bool {
        let f = self.field();
        (0..self.generators()).all(|g| {
            let gen = self.to_vec(&FreeElement::generator(g));
            let mut c = self.mul(x, &gen);
            c.add_scaled(f, &self.mul(&gen, x), f.neg(1));
            c.is_zero()
        })
    }
}
