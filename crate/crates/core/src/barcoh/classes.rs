use std::collections::HashMap;

use super::{BarComplex, Cochain};
use crate::algebras::PresentedAlgebra;
use crate::ffmat::{ColumnEchelon, Insert, SparseVec};
use crate::freealg::{FreeElement, Word};
use crate::{Error, Result};

/// Degree-2 cochain `(x, y) -> coefficient of target in NF(x y)`, with `x, y`
/// normal words of the bar complex's algebra multiplied in `lift`.
///
/// With `lift = B` and `target = a^p` this is `xi_a` on `A_p`; with
/// `lift = B # kG` it is the extension of `xi_a` to the smash product.
pub fn coefficient_cochain(bar: &BarComplex<'_>, lift: &PresentedAlgebra, target: &Word) -> Result<Cochain> {
    let alg = bar.algebra();
    if lift.names() != alg.names() || lift.field() != alg.field() {
        return Err(Error::Invalid("lift must use the same generators and field".into()));
    }
    let w = bar.width();
    let f = alg.field();
    let mut left = LeftMultiplier::new(lift);
    let mut values = Vec::with_capacity(w * w);
    for i in 1..=w {
        for j in 1..=w {
            let y = FreeElement::word(alg.word(j).clone());
            values.push(left.apply(alg.word(i), &y).coeff(target));
        }
    }
    Cochain::from_values(f, w, 2, values)
}

/// Left multiplication by words in a presented algebra, one letter at a time,
/// memoizing `NF(g u)` for letters `g` and normal words `u`.
struct LeftMultiplier<'a> {
    lift: &'a PresentedAlgebra,
    memo: HashMap<(u8, Word), FreeElement>,
}

impl<'a> LeftMultiplier<'a> {
    fn new(lift: &'a PresentedAlgebra) -> Self {
        LeftMultiplier {
            lift,
            memo: HashMap::new(),
        }
    }

    /// `NF(x y)` for a word `x` and an element `y` in normal form.
    fn apply(&mut self, x: &Word, y: &FreeElement) -> FreeElement {
        let f = self.lift.field();
        let mut cur = y.clone();
        for &g in x.letters().iter().rev() {
            let mut next = FreeElement::zero();
            for (u, c) in cur.terms() {
                let image = self
                    .memo
                    .entry((g, u.clone()))
                    .or_insert_with(|| self.lift.gb().reduce_word(&Word::letter(g as usize).concat(u)));
                next.add_scaled(f, image, c);
            }
            cur = next;
        }
        cur
    }
}

/// Degree-1 cochain dual to a basis word.
pub fn dual_cochain(bar: &BarComplex<'_>, word: &Word) -> Result<Cochain> {
    let alg = bar.algebra();
    let letter = alg
        .index_of(word)
        .and_then(|i| bar.letter(i))
        .ok_or_else(|| Error::Invalid(format!("{} is not a positive basis word", word.display(alg.names()))))?;
    let mut f = bar.zero(1);
    f.set(&[letter], 1);
    Ok(f)
}

/// A cocycle together with its coordinates in a [`CohomologyBasis`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CohomologyClass {
    pub representative: Cochain,
    pub coordinates: Vec<u32>,
}

/// Cocycle representatives of a basis of `H^n(A, k)`.
///
/// Representatives are chosen canonically: the kernel basis of `d^n` is scanned in
/// order and a vector is kept when it is independent of the coboundaries and the
/// vectors kept so far.
#[derive(Debug)]
pub struct CohomologyBasis {
    pub degree: usize,
    pub representatives: Vec<Cochain>,
    echelon: ColumnEchelon,
    boundary_columns: usize,
}

impl CohomologyBasis {
    pub fn new(bar: &BarComplex<'_>, n: usize) -> Result<Self> {
        let f = bar.field();
        let mut echelon = ColumnEchelon::new(f);
        let mut boundary_columns = 0;
        if n > 0 {
            for c in bar.differential_matrix(n - 1)?.columns() {
                echelon.insert(c);
                boundary_columns += 1;
            }
        }
        let mut representatives = Vec::new();
        for z in bar.differential_matrix(n)?.kernel_basis() {
            if let Insert::Independent(_) = echelon.insert(SparseVec::from_dense(&z)) {
                representatives.push(Cochain::from_values(f, bar.width(), n, z)?);
            }
        }
        Ok(CohomologyBasis {
            degree: n,
            representatives,
            echelon,
            boundary_columns,
        })
    }

    pub fn dim(&self) -> usize {
        self.representatives.len()
    }

    /// Coordinates of the class of a cocycle; `None` if `z` is not a cocycle.
    pub fn coordinates(&self, z: &Cochain) -> Option<Vec<u32>> {
        let x = self.echelon.solve(z.to_sparse())?;
        let mut out = vec![0; self.dim()];
        let independent = self.echelon.independent_columns();
        for (k, c) in x.iter() {
            if k >= self.boundary_columns {
                let pos = independent.iter().position(|&j| j == k)?;
                let rank_of_boundaries = independent.iter().filter(|&&j| j < self.boundary_columns).count();
                out[pos - rank_of_boundaries] = c;
            }
        }
        Some(out)
    }

    pub fn classify(&self, z: &Cochain) -> Option<CohomologyClass> {
        Some(CohomologyClass {
            representative: z.clone(),
            coordinates: self.coordinates(z)?,
        })
    }
}

/// `#{(i, j, l, m) : 2(i + j) + l + m = n, l, m in {0, 1}}`.
pub fn free_basis_count(n: usize) -> usize {
    let mut count = 0;
    for l in 0..=1 {
        for m in 0..=1 {
            if l + m <= n && (n - l - m).is_multiple_of(2) {
                count += (n - l - m) / 2 + 1;
            }
        }
    }
    count
}

/// `free_basis_count(n) = n + 1` for all `n <= top`.
pub fn free_basis_hilbert_check(top: usize) -> bool {
    (0..=top).all(|n| free_basis_count(n) == n + 1)
}
