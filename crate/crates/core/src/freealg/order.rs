use std::cmp::Ordering;

use super::Word;
use crate::{Error, Result};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum OrderKind {
    /// Compare weight vectors lexicographically, then length, then words
    /// lexicographically by generator precedence.
    WeightedLex,
    /// Compare total weight (sum of weight components), then length, then words
    /// lexicographically by generator precedence.
    DegLex,
}

/// Sort key realizing a monomial order: keys compare exactly as the words do.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct OrderKey(Vec<u32>);

/// An admissible order on words over a fixed alphabet.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct MonomialOrder {
    kind: OrderKind,
    weights: Vec<Vec<u32>>,
    rank: Vec<u32>,
}

impl MonomialOrder {
    /// `precedence[g]` is the rank of generator `g` in the word-lex tie-break
    /// (higher rank means larger).
    pub fn new(kind: OrderKind, weights: Vec<Vec<u32>>, precedence: Vec<u32>) -> Result<Self> {
        let n = weights.len();
        if precedence.len() != n {
            return Err(Error::DimensionMismatch {
                expected: n,
                got: precedence.len(),
            });
        }
        let dim = weights.first().map_or(0, Vec::len);
        if weights.iter().any(|w| w.len() != dim) {
            return Err(Error::Invalid("weight vectors must have equal length".into()));
        }
        if weights.iter().any(|w| w.iter().all(|&x| x == 0)) {
            return Err(Error::Invalid("every generator needs a nonzero weight".into()));
        }
        let mut sorted = precedence.clone();
        sorted.sort_unstable();
        if sorted != (0..n as u32).collect::<Vec<_>>() {
            return Err(Error::Invalid("precedence must be a permutation of the generators".into()));
        }
        if n > u8::MAX as usize {
            return Err(Error::Invalid("at most 255 generators".into()));
        }
        Ok(MonomialOrder {
            kind,
            weights,
            rank: precedence,
        })
    }

    /// Weighted-lex order with precedence following generator index.
    pub fn weighted_lex(weights: Vec<Vec<u32>>) -> Result<Self> {
        let n = weights.len() as u32;
        Self::new(OrderKind::WeightedLex, weights, (0..n).collect())
    }

    /// Length-lex order with every generator of weight 1 and precedence following index.
    pub fn deglex(generators: usize) -> Self {
        Self::new(
            OrderKind::DegLex,
            vec![vec![1]; generators],
            (0..generators as u32).collect(),
        )
        .expect("valid deglex order")
    }

    pub fn kind(&self) -> OrderKind {
        self.kind
    }

    pub fn generators(&self) -> usize {
        self.weights.len()
    }

    pub fn weights(&self) -> &[Vec<u32>] {
        &self.weights
    }

    pub fn precedence(&self) -> &[u32] {
        &self.rank
    }

    /// Summed weight vector of a word.
    pub fn weight(&self, w: &Word) -> Vec<u32> {
        let dim = self.weights.first().map_or(0, Vec::len);
        let mut acc = vec![0u32; dim];
        for &g in w.letters() {
            for (a, x) in acc.iter_mut().zip(&self.weights[g as usize]) {
                *a += x;
            }
        }
        acc
    }

    pub fn key(&self, w: &Word) -> OrderKey {
        let mut k = match self.kind {
            OrderKind::WeightedLex => self.weight(w),
            OrderKind::DegLex => vec![self.weight(w).iter().sum()],
        };
        k.reserve(w.len() + 1);
        k.push(w.len() as u32);
        k.extend(w.letters().iter().map(|&g| self.rank[g as usize]));
        OrderKey(k)
    }

    pub fn compare(&self, u: &Word, v: &Word) -> Ordering {
        if u == v {
            return Ordering::Equal;
        }
        self.key(u).cmp(&self.key(v))
    }
}
