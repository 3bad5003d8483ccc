use std::collections::HashMap;

use super::{PrimeField, SparseVec};

/// Incremental column echelon form with provenance.
///
/// Columns are inserted one at a time. Each stored echelon vector has leading entry 1
/// at a row no other echelon vector leads at, and carries the combination of inserted
/// columns that produces it. Reduction only clears leading entries, so the row of the
/// leading entry strictly increases while reducing.
#[derive(Clone, Debug)]
pub struct ColumnEchelon {
    field: PrimeField,
    vectors: Vec<SparseVec>,
    history: Vec<SparseVec>,
    lead: HashMap<usize, usize>,
    independent: Vec<usize>,
    inserted: usize,
}

/// Outcome of inserting a column.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Insert {
    /// The column is new; it became echelon vector number `usize`.
    Independent(usize),
    /// The column is dependent; the payload is a kernel vector with a 1 in its slot.
    Dependent(SparseVec),
}

impl ColumnEchelon {
    pub fn new(field: PrimeField) -> Self {
        ColumnEchelon {
            field,
            vectors: Vec::new(),
            history: Vec::new(),
            lead: HashMap::new(),
            independent: Vec::new(),
            inserted: 0,
        }
    }

    pub fn rank(&self) -> usize {
        self.vectors.len()
    }

    /// Indices of the inserted columns that were independent of their predecessors.
    pub fn independent_columns(&self) -> &[usize] {
        &self.independent
    }

    /// Reduces `v`; returns the residual and the combination `x` of inserted columns
    /// with `v - M x = residual`.
    fn reduce(&self, mut v: SparseVec) -> (SparseVec, SparseVec) {
        let f = self.field;
        let mut combo = SparseVec::new();
        while let Some((row, c)) = v.first() {
            let Some(&k) = self.lead.get(&row) else {
                break;
            };
            v.add_scaled(f, &self.vectors[k], f.neg(c));
            combo.add_scaled(f, &self.history[k], c);
        }
        (v, combo)
    }

    pub fn insert(&mut self, column: SparseVec) -> Insert {
        let f = self.field;
        let j = self.inserted;
        self.inserted += 1;
        let (mut residual, combo) = self.reduce(column);
        // residual = col_j - M combo
        let mut hist = SparseVec::unit(j);
        hist.add_scaled(f, &combo, f.neg(1));
        match residual.first() {
            None => Insert::Dependent(hist),
            Some((row, c)) => {
                let inv = f.inv(c);
                residual.scale(f, inv);
                hist.scale(f, inv);
                let k = self.vectors.len();
                self.vectors.push(residual);
                self.history.push(hist);
                self.lead.insert(row, k);
                self.independent.push(j);
                Insert::Independent(k)
            }
        }
    }

    /// Returns `x` with `M x = v` (supported on independent columns), if it exists.
    pub fn solve(&self, v: SparseVec) -> Option<SparseVec> {
        let (residual, combo) = self.reduce(v);
        residual.is_zero().then_some(combo)
    }

    pub fn contains(&self, v: SparseVec) -> bool {
        self.reduce(v).0.is_zero()
    }
}
