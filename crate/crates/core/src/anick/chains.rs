use std::collections::{BTreeSet, HashMap};

use crate::freealg::{GroebnerBasis, Word};

/// An Anick chain with its factorization into pieces, leftmost piece first.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Chain {
    pub word: Word,
    pub pieces: Vec<Word>,
}

impl Chain {
    /// The chain obtained by dropping the first piece.
    pub fn tail_word(&self) -> Word {
        self.word.suffix_from(self.pieces.first().map_or(0, Word::len))
    }
}

/// All `n`-chains, in a canonical order (by the monomial order on their words).
#[derive(Clone, Debug)]
pub struct ChainSet {
    pub n: usize,
    pub chains: Vec<Chain>,
    index: HashMap<Word, usize>,
}

impl ChainSet {
    fn new(n: usize, chains: Vec<Chain>) -> Self {
        let index = chains.iter().enumerate().map(|(i, c)| (c.word.clone(), i)).collect();
        ChainSet { n, chains, index }
    }

    pub fn len(&self) -> usize {
        self.chains.len()
    }

    pub fn is_empty(&self) -> bool {
        self.chains.is_empty()
    }

    pub fn index_of(&self, w: &Word) -> Option<usize> {
        self.index.get(w).copied()
    }

    pub fn words(&self) -> Vec<Word> {
        self.chains.iter().map(|c| c.word.clone()).collect()
    }

    /// Total degree (word length) of each chain.
    pub fn degrees(&self) -> Vec<usize> {
        self.chains.iter().map(|c| c.word.len()).collect()
    }
}

/// Sorted multiset of chain degrees.
pub fn chain_degree_profile(cs: &ChainSet) -> Vec<usize> {
    let mut d = cs.degrees();
    d.sort_unstable();
    d
}

pub(crate) fn tip_count(tips: &[Word], w: &Word) -> usize {
    tips.iter().map(|t| w.occurrences(t).len()).sum()
}

/// Whether `t` can be prepended to a chain whose first piece is `u`.
pub(crate) fn extends(tips: &[Word], t: &Word, u: &Word) -> bool {
    let tu = t.concat(u);
    tip_count(tips, &tu) == 1 && tips.iter().any(|tip| tip.len() > t.len() && tu.starts_with(tip))
}

pub(crate) fn proper_prefixes(tips: &[Word]) -> Vec<Word> {
    let set: BTreeSet<Word> = tips
        .iter()
        .flat_map(|t| (1..t.len()).map(move |k| t.prefix(k)))
        .collect();
    set.into_iter().collect()
}

/// Chain sets `C_0, ..., C_max`.
pub fn chain_sets(gb: &GroebnerBasis, max: usize) -> Vec<ChainSet> {
    let tips = gb.tips();
    let order = gb.order();
    let prefixes = proper_prefixes(tips);
    let mut out = vec![ChainSet::new(
        0,
        vec![Chain {
            word: Word::empty(),
            pieces: Vec::new(),
        }],
    )];
    if max == 0 {
        return out;
    }
    let gens = (0..gb.generators())
        .map(|g| Chain {
            word: Word::letter(g),
            pieces: vec![Word::letter(g)],
        })
        .collect();
    out.push(ChainSet::new(1, gens));
    for n in 2..=max {
        let mut next: Vec<Chain> = Vec::new();
        for c in &out[n - 1].chains {
            for t in &prefixes {
                if extends(tips, t, &c.pieces[0]) {
                    let mut pieces = Vec::with_capacity(c.pieces.len() + 1);
                    pieces.push(t.clone());
                    pieces.extend(c.pieces.iter().cloned());
                    next.push(Chain {
                        word: t.concat(&c.word),
                        pieces,
                    });
                }
            }
        }
        next.sort_by_key(|c| order.key(&c.word));
        out.push(ChainSet::new(n, next));
    }
    out
}

/// The `n`-chains.
pub fn chains(gb: &GroebnerBasis, n: usize) -> ChainSet {
    chain_sets(gb, n).pop().expect("at least C_0")
}
