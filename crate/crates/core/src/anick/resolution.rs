use std::collections::BTreeMap;

use serde::Serialize;

use super::chains::{chain_sets, extends};
use super::ChainSet;
use crate::algebras::QuotientAlgebra;
use crate::ffmat::{FMatrix, SparseVec};
use crate::freealg::{OrderKey, Word};
use crate::{Error, Exec, Result};

/// Element of `A (x) kC_n`: `(chain, basis index) -> coefficient`.
pub type ModuleElement = BTreeMap<(usize, usize), u32>;

/// Dimensions of `H^n(A, k)` read off the dualized resolution.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ExtDims {
    pub dims: Vec<usize>,
    /// `minimal[n]`: both dualized differentials touching degree `n` vanish.
    pub minimal: Vec<bool>,
}

impl ExtDims {
    pub fn is_minimal(&self) -> bool {
        self.minimal.iter().all(|&m| m)
    }
}

/// Anick's resolution of `k` over a finite algebra, through a fixed degree.
#[derive(Debug)]
pub struct AnickResolution<'a> {
    alg: &'a QuotientAlgebra,
    chains: Vec<ChainSet>,
    /// `diffs[n][c] = d_n(1 (x) c)`; `diffs[0]` is empty.
    diffs: Vec<Vec<ModuleElement>>,
}

impl<'a> AnickResolution<'a> {
    pub fn new(alg: &'a QuotientAlgebra, max_degree: usize, exec: Exec) -> Result<Self> {
        if !alg.generators_augmented_to_zero() {
            return Err(Error::Augmentation(
                "Anick's resolution needs every generator in the augmentation ideal".into(),
            ));
        }
        let mut res = AnickResolution {
            alg,
            chains: chain_sets(alg.presented().gb(), max_degree),
            diffs: vec![Vec::new()],
        };
        for n in 1..=max_degree {
            let d = exec
                .map_range(res.chains[n].len(), |c| res.compute_differential(n, c))
                .into_iter()
                .collect::<Result<Vec<_>>>()?;
            res.diffs.push(d);
        }
        Ok(res)
    }

    pub fn algebra(&self) -> &QuotientAlgebra {
        self.alg
    }

    pub fn max_degree(&self) -> usize {
        self.diffs.len() - 1
    }

    pub fn chain_set(&self, n: usize) -> &ChainSet {
        &self.chains[n]
    }

    pub fn chain_sets(&self) -> &[ChainSet] {
        &self.chains
    }

    /// `d_n(1 (x) c)` for every `n`-chain `c`.
    pub fn differential(&self, n: usize) -> &[ModuleElement] {
        &self.diffs[n]
    }

    fn key(&self, n: usize, chain: usize, basis: usize) -> OrderKey {
        let w = self.alg.word(basis).concat(&self.chains[n].chains[chain].word);
        self.alg.presented().gb().order().key(&w)
    }

    /// `w x` for a basis word `w`.
    pub fn left_mul(&self, w: usize, x: &ModuleElement) -> ModuleElement {
        let f = self.alg.field();
        let mut out = ModuleElement::new();
        for (&(c, u), &l) in x {
            for (k, m) in self.alg.mul_basis(w, u).iter() {
                add_entry(f, &mut out, (c, k), f.mul(l, m));
            }
        }
        out
    }

    /// The contracting homotopy `A (x) kC_n -> A (x) kC_{n+1}` on a cycle.
    fn homotopy(&self, n: usize, x: &ModuleElement) -> Result<ModuleElement> {
        let f = self.alg.field();
        let tips = self.alg.presented().gb().tips();
        let mut work: BTreeMap<(OrderKey, usize, usize), u32> = x
            .iter()
            .map(|(&(c, w), &l)| ((self.key(n, c, w), c, w), l))
            .collect();
        let mut out = ModuleElement::new();
        while let Some((lead, &lambda)) = work.last_key_value() {
            let lead = lead.clone();
            let (_, c, w) = lead;
            let word = self.alg.word(w);
            let chain = &self.chains[n].chains[c];
            let split = (1..=word.len()).find(|&k| {
                let t = word.suffix_from(word.len() - k);
                match chain.pieces.first() {
                    None => k == 1,
                    Some(u) => extends(tips, &t, u),
                }
            });
            let Some(k) = split else {
                return Err(Error::Invalid(format!(
                    "homotopy: no chain extends {} in degree {n}",
                    word.display(self.alg.names())
                )));
            };
            let s = word.prefix(word.len() - k);
            let tc = word.suffix_from(word.len() - k).concat(&chain.word);
            let next = self.chains[n + 1]
                .index_of(&tc)
                .ok_or_else(|| Error::Invalid("homotopy: extended word is not a chain".into()))?;
            let s = self
                .alg
                .index_of(&s)
                .ok_or_else(|| Error::Invalid("homotopy: prefix is not normal".into()))?;
            add_entry(f, &mut out, (next, s), lambda);
            for ((c2, w2), l2) in self.left_mul(s, &self.diffs[n + 1][next]) {
                let key = (self.key(n, c2, w2), c2, w2);
                let v = f.sub(work.get(&key).copied().unwrap_or(0), f.mul(lambda, l2));
                if v == 0 {
                    work.remove(&key);
                } else {
                    work.insert(key, v);
                }
            }
            if work.contains_key(&(self.key(n, c, w), c, w)) {
                return Err(Error::Invalid("homotopy: leading term did not cancel".into()));
            }
        }
        Ok(out)
    }

    fn compute_differential(&self, n: usize, c: usize) -> Result<ModuleElement> {
        let chain = &self.chains[n].chains[c];
        let t = self
            .alg
            .index_of(&chain.pieces[0])
            .ok_or_else(|| Error::Invalid("first piece is not normal".into()))?;
        if n == 1 {
            return Ok(ModuleElement::from([((0, t), 1)]));
        }
        let tail = self.chains[n - 1]
            .index_of(&chain.tail_word())
            .ok_or_else(|| Error::Invalid("tail is not a chain".into()))?;
        let f = self.alg.field();
        let correction = self.homotopy(n - 2, &self.left_mul(t, &self.diffs[n - 1][tail]))?;
        let mut out = ModuleElement::from([((tail, t), 1)]);
        for (key, l) in correction {
            add_entry(f, &mut out, key, f.neg(l));
        }
        Ok(out)
    }

    /// `eps d_n` as a `|C_{n-1}| x |C_n|` scalar matrix.
    pub fn scalar_differential(&self, n: usize) -> Result<FMatrix> {
        let unit = self.alg.unit();
        let cols = self.diffs[n]
            .iter()
            .map(|x| {
                SparseVec::from_sorted(
                    x.iter()
                        .filter(|&(&(_, w), _)| w == unit)
                        .map(|(&(c, _), &l)| (c, l))
                        .collect(),
                )
            })
            .collect();
        FMatrix::from_columns(self.alg.field(), self.chains[n - 1].len(), cols)
    }

    /// `d_n` expanded over the basis of `A`: columns indexed by `c * dim + w`.
    pub fn expanded_differential(&self, n: usize, exec: Exec) -> Result<FMatrix> {
        let dim = self.alg.dim();
        let f = self.alg.field();
        let cols = exec.map_range(self.chains[n].len() * dim, |col| {
            let (c, w) = (col / dim, col % dim);
            SparseVec::from_pairs(
                f,
                self.left_mul(w, &self.diffs[n][c])
                    .into_iter()
                    .map(|((c2, u), l)| (c2 * dim + u, l))
                    .collect(),
            )
        });
        FMatrix::from_columns(f, self.chains[n - 1].len() * dim, cols)
    }

    fn require(&self, n: usize) -> Result<()> {
        if n > self.max_degree() {
            return Err(Error::Invalid(format!(
                "resolution computed through degree {}, need {n}",
                self.max_degree()
            )));
        }
        Ok(())
    }

    /// `dim H^n(A, k)` for `n <= top`; needs the resolution through `top + 1`.
    pub fn ext_dims(&self, top: usize) -> Result<ExtDims> {
        self.require(top + 1)?;
        let mut ranks = vec![0usize; top + 2];
        for (n, r) in ranks.iter_mut().enumerate().skip(1) {
            *r = self.scalar_differential(n)?.rank();
        }
        let dims = (0..=top)
            .map(|n| self.chains[n].len() - ranks[n] - ranks[n + 1])
            .collect();
        let minimal = (0..=top).map(|n| ranks[n] == 0 && ranks[n + 1] == 0).collect();
        Ok(ExtDims { dims, minimal })
    }

    /// `d_{n-1} d_n = 0` for `2 <= n <= max_degree`.
    pub fn d_squared_vanishes(&self) -> bool {
        let f = self.alg.field();
        (2..=self.max_degree()).all(|n| {
            self.diffs[n].iter().all(|x| {
                let mut acc = ModuleElement::new();
                for (&(c, w), &l) in x {
                    for (key, m) in self.left_mul(w, &self.diffs[n - 1][c]) {
                        add_entry(f, &mut acc, key, f.mul(l, m));
                    }
                }
                acc.is_empty()
            })
        })
    }

    /// Homology of the expanded complex `A (x) kC_n`, `n <= top`; needs the
    /// resolution through `top + 1`. Exactness means `[1, 0, 0, ...]`.
    pub fn homology_dims(&self, top: usize, exec: Exec) -> Result<Vec<usize>> {
        self.require(top + 1)?;
        let dim = self.alg.dim();
        let mut ranks = vec![0usize; top + 2];
        for (n, r) in ranks.iter_mut().enumerate().skip(1) {
            *r = self.expanded_differential(n, exec)?.rank();
        }
        Ok((0..=top)
            .map(|n| self.chains[n].len() * dim - ranks[n] - ranks[n + 1])
            .collect())
    }

    /// Every term `w (x) c'` of `d_n(1 (x) c)` has `|w| + |c'| = |c|`.
    pub fn is_degree_preserving(&self) -> bool {
        (1..=self.max_degree()).all(|n| {
            self.diffs[n].iter().enumerate().all(|(c, x)| {
                let deg = self.chains[n].chains[c].word.len();
                x.keys()
                    .all(|&(c2, w)| self.alg.degree(w) + self.chains[n - 1].chains[c2].word.len() == deg)
            })
        })
    }

    /// Human-readable `sum coeff word (x) chain`.
    pub fn render(&self, n: usize, x: &ModuleElement) -> String {
        let f = self.alg.field();
        let names = self.alg.names();
        let mut terms: Vec<_> = x.iter().collect();
        terms.sort_by_key(|&(&(c, w), _)| std::cmp::Reverse(self.key(n, c, w)));
        let mut s = String::new();
        for (i, (&(c, w), &l)) in terms.into_iter().enumerate() {
            let v = f.signed(l);
            let sign = if v < 0 { "-" } else { "+" };
            if i == 0 {
                if v < 0 {
                    s.push('-');
                }
            } else {
                s.push_str(&format!(" {sign} "));
            }
            if v.abs() != 1 {
                s.push_str(&v.abs().to_string());
            }
            let word = self.alg.word(w);
            if !(word.is_empty() && v.abs() != 1) {
                s.push_str(&word.display(names));
            }
            s.push('⊗');
            s.push_str(&self.chains[n].chains[c].word.display(names));
        }
        if s.is_empty() {
            s.push('0');
        }
        s
    }

    /// Rendered `d_n(1 (x) c)` for the chain with word `chain`.
    pub fn render_differential(&self, n: usize, chain: &Word) -> Option<String> {
        let c = self.chains.get(n)?.index_of(chain)?;
        Some(self.render(n - 1, self.diffs.get(n)?.get(c)?))
    }
}

fn add_entry(f: crate::ffmat::PrimeField, m: &mut ModuleElement, key: (usize, usize), v: u32) {
    if v == 0 {
        return;
    }
    let e = m.entry(key).or_insert(0);
    *e = f.add(*e, v);
    if *e == 0 {
        m.remove(&key);
    }
}
