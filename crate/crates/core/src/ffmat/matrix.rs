use super::echelon::{ColumnEchelon, Insert};
use super::{PrimeField, SparseVec};
use crate::{Error, Exec, Result};

/// Which elimination algorithm to run.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Route {
    /// Dense below `sparse_threshold` entries, sparse at or above it.
    Auto,
    Dense,
    Sparse,
}

#[derive(Clone, Copy, Debug)]
pub struct Elimination {
    pub route: Route,
    /// Number of potential entries (`rows * cols`) from which `Auto` goes sparse.
    pub sparse_threshold: usize,
    pub exec: Exec,
}

impl Default for Elimination {
    fn default() -> Self {
        Elimination {
            route: Route::Auto,
            sparse_threshold: 1_000_000,
            exec: Exec::default(),
        }
    }
}

impl Elimination {
    pub fn with_exec(exec: Exec) -> Self {
        Elimination {
            exec,
            ..Default::default()
        }
    }

    pub fn with_route(route: Route) -> Self {
        Elimination {
            route,
            ..Default::default()
        }
    }

    fn sparse_for(&self, rows: usize, cols: usize) -> bool {
        match self.route {
            Route::Dense => false,
            Route::Sparse => true,
            Route::Auto => rows.saturating_mul(cols) >= self.sparse_threshold,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
enum Storage {
    /// Row-major.
    Dense(Vec<u32>),
    Columns(Vec<SparseVec>),
}

/// A matrix over `F_p`. Equality compares entries, not storage.
#[derive(Clone, Debug)]
pub struct FMatrix {
    field: PrimeField,
    rows: usize,
    cols: usize,
    storage: Storage,
}

impl PartialEq for FMatrix {
    fn eq(&self, other: &Self) -> bool {
        if (self.field, self.rows, self.cols) != (other.field, other.rows, other.cols) {
            return false;
        }
        match (&self.storage, &other.storage) {
            (Storage::Dense(x), Storage::Dense(y)) => x == y,
            (Storage::Columns(x), Storage::Columns(y)) => x == y,
            _ => self.columns() == other.columns(),
        }
    }
}

impl Eq for FMatrix {}

/// Reduced row echelon form of a dense row-major block; returns the pivot column of
/// each nonzero row.
fn dense_rref(field: PrimeField, rows: usize, cols: usize, data: &mut [u32], exec: Exec) -> Vec<usize> {
    let mut pivots = Vec::new();
    let mut r = 0;
    let exec = if rows * cols >= 1 << 14 { exec } else { Exec::Sequential };
    for c in 0..cols {
        if r == rows {
            break;
        }
        let Some(found) = (r..rows).find(|&i| data[i * cols + c] != 0) else {
            continue;
        };
        if found != r {
            for k in 0..cols {
                data.swap(found * cols + k, r * cols + k);
            }
        }
        let inv = field.inv(data[r * cols + c]);
        for k in c..cols {
            data[r * cols + k] = field.mul(data[r * cols + k], inv);
        }
        let pivot_row: Vec<u32> = data[r * cols..(r + 1) * cols].to_vec();
        exec.for_each_chunk_mut(data, cols, |i, row| {
            if i == r {
                return;
            }
            let factor = row[c];
            if factor == 0 {
                return;
            }
            let neg = field.neg(factor);
            for k in c..cols {
                if pivot_row[k] != 0 {
                    row[k] = field.mul_add(row[k], pivot_row[k], neg);
                }
            }
        });
        pivots.push(c);
        r += 1;
    }
    pivots
}

impl FMatrix {
    pub fn zeros(field: PrimeField, rows: usize, cols: usize) -> Self {
        FMatrix {
            field,
            rows,
            cols,
            storage: Storage::Dense(vec![0; rows * cols]),
        }
    }

    pub fn identity(field: PrimeField, n: usize) -> Self {
        let mut m = Self::zeros(field, n, n);
        for i in 0..n {
            m.set(i, i, 1);
        }
        m
    }

    /// Row-major data; entries are reduced mod `p`.
    pub fn from_dense(field: PrimeField, rows: usize, cols: usize, data: Vec<u32>) -> Result<Self> {
        if data.len() != rows * cols {
            return Err(Error::DimensionMismatch {
                expected: rows * cols,
                got: data.len(),
            });
        }
        let data = data.into_iter().map(|x| x % field.p()).collect();
        Ok(FMatrix {
            field,
            rows,
            cols,
            storage: Storage::Dense(data),
        })
    }

    pub fn from_rows(field: PrimeField, rows: &[Vec<u32>]) -> Result<Self> {
        let cols = rows.first().map_or(0, Vec::len);
        if let Some(bad) = rows.iter().find(|r| r.len() != cols) {
            return Err(Error::DimensionMismatch {
                expected: cols,
                got: bad.len(),
            });
        }
        Self::from_dense(field, rows.len(), cols, rows.concat())
    }

    pub fn from_columns(field: PrimeField, rows: usize, columns: Vec<SparseVec>) -> Result<Self> {
        if let Some(bad) = columns.iter().find(|c| c.entries().last().is_some_and(|&(i, _)| i >= rows)) {
            return Err(Error::DimensionMismatch {
                expected: rows,
                got: bad.entries().last().unwrap().0 + 1,
            });
        }
        Ok(FMatrix {
            field,
            rows,
            cols: columns.len(),
            storage: Storage::Columns(columns),
        })
    }

    pub fn field(&self) -> PrimeField {
        self.field
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn is_sparse(&self) -> bool {
        matches!(self.storage, Storage::Columns(_))
    }

    pub fn get(&self, r: usize, c: usize) -> u32 {
        match &self.storage {
            Storage::Dense(d) => d[r * self.cols + c],
            Storage::Columns(cs) => cs[c].get(r),
        }
    }

    /// Sets one entry, densifying sparse storage.
    pub fn set(&mut self, r: usize, c: usize, v: u32) {
        if self.is_sparse() {
            self.storage = Storage::Dense(self.dense_data());
        }
        let cols = self.cols;
        let p = self.field.p();
        if let Storage::Dense(d) = &mut self.storage {
            d[r * cols + c] = v % p;
        }
    }

    /// Row-major copy of the entries.
    pub fn dense_data(&self) -> Vec<u32> {
        match &self.storage {
            Storage::Dense(d) => d.clone(),
            Storage::Columns(cs) => {
                let mut d = vec![0; self.rows * self.cols];
                for (c, col) in cs.iter().enumerate() {
                    for (r, v) in col.iter() {
                        d[r * self.cols + c] = v;
                    }
                }
                d
            }
        }
    }

    pub fn to_rows(&self) -> Vec<Vec<u32>> {
        let d = self.dense_data();
        if self.cols == 0 {
            return vec![Vec::new(); self.rows];
        }
        d.chunks(self.cols).map(<[u32]>::to_vec).collect()
    }

    pub fn columns(&self) -> Vec<SparseVec> {
        match &self.storage {
            Storage::Columns(cs) => cs.clone(),
            Storage::Dense(d) => (0..self.cols)
                .map(|c| {
                    SparseVec::from_sorted(
                        (0..self.rows)
                            .filter_map(|r| {
                                let v = d[r * self.cols + c];
                                (v != 0).then_some((r, v))
                            })
                            .collect(),
                    )
                })
                .collect(),
        }
    }

    pub fn column(&self, c: usize) -> SparseVec {
        match &self.storage {
            Storage::Columns(cs) => cs[c].clone(),
            Storage::Dense(d) => SparseVec::from_sorted(
                (0..self.rows)
                    .filter_map(|r| {
                        let v = d[r * self.cols + c];
                        (v != 0).then_some((r, v))
                    })
                    .collect(),
            ),
        }
    }

    pub fn transpose(&self) -> FMatrix {
        let d = self.dense_data();
        let mut t = vec![0; d.len()];
        for r in 0..self.rows {
            for c in 0..self.cols {
                t[c * self.rows + r] = d[r * self.cols + c];
            }
        }
        FMatrix {
            field: self.field,
            rows: self.cols,
            cols: self.rows,
            storage: Storage::Dense(t),
        }
    }

    pub fn is_zero(&self) -> bool {
        match &self.storage {
            Storage::Dense(d) => d.iter().all(|&x| x == 0),
            Storage::Columns(cs) => cs.iter().all(SparseVec::is_zero),
        }
    }

    pub fn mul_vec(&self, x: &[u32]) -> Result<Vec<u32>> {
        if x.len() != self.cols {
            return Err(Error::DimensionMismatch {
                expected: self.cols,
                got: x.len(),
            });
        }
        let f = self.field;
        let mut out = vec![0u32; self.rows];
        match &self.storage {
            Storage::Dense(d) => {
                for (r, o) in out.iter_mut().enumerate() {
                    let row = &d[r * self.cols..(r + 1) * self.cols];
                    *o = row.iter().zip(x).fold(0, |acc, (&a, &b)| f.mul_add(acc, a, b));
                }
            }
            Storage::Columns(cs) => {
                for (col, &xc) in cs.iter().zip(x) {
                    if xc == 0 {
                        continue;
                    }
                    for (r, v) in col.iter() {
                        out[r] = f.mul_add(out[r], v, xc);
                    }
                }
            }
        }
        Ok(out)
    }

    pub fn mul(&self, other: &FMatrix) -> Result<FMatrix> {
        if self.cols != other.rows {
            return Err(Error::DimensionMismatch {
                expected: self.cols,
                got: other.rows,
            });
        }
        let f = self.field;
        let a = self.dense_data();
        let b = other.dense_data();
        let (n, m, k) = (self.rows, other.cols, self.cols);
        let mut out = vec![0u32; n * m];
        for i in 0..n {
            for l in 0..k {
                let x = a[i * k + l];
                if x == 0 {
                    continue;
                }
                for j in 0..m {
                    out[i * m + j] = f.mul_add(out[i * m + j], x, b[l * m + j]);
                }
            }
        }
        FMatrix::from_dense(f, n, m, out)
    }

    pub fn sub(&self, other: &FMatrix) -> Result<FMatrix> {
        if (self.rows, self.cols) != (other.rows, other.cols) {
            return Err(Error::DimensionMismatch {
                expected: self.rows * self.cols,
                got: other.rows * other.cols,
            });
        }
        let f = self.field;
        let data = self
            .dense_data()
            .into_iter()
            .zip(other.dense_data())
            .map(|(a, b)| f.sub(a, b))
            .collect();
        FMatrix::from_dense(f, self.rows, self.cols, data)
    }

    pub fn add(&self, other: &FMatrix) -> Result<FMatrix> {
        let neg = FMatrix::zeros(self.field, other.rows, other.cols).sub(other)?;
        self.sub(&neg)
    }

    pub fn pow(&self, mut e: u64) -> Result<FMatrix> {
        if self.rows != self.cols {
            return Err(Error::DimensionMismatch {
                expected: self.rows,
                got: self.cols,
            });
        }
        let mut acc = FMatrix::identity(self.field, self.rows);
        let mut base = self.clone();
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.mul(&base)?;
            }
            base = base.mul(&base)?;
            e >>= 1;
        }
        Ok(acc)
    }

    /// Column echelon form of the columns in order, with the kernel vectors found along the way.
    pub fn column_echelon(&self) -> (ColumnEchelon, Vec<SparseVec>) {
        let mut e = ColumnEchelon::new(self.field);
        let mut kernel = Vec::new();
        for col in self.columns() {
            if let Insert::Dependent(k) = e.insert(col) {
                kernel.push(k);
            }
        }
        (e, kernel)
    }

    pub fn rank(&self) -> usize {
        self.rank_with(&Elimination::default())
    }

    pub fn rank_with(&self, how: &Elimination) -> usize {
        if self.rows == 0 || self.cols == 0 {
            return 0;
        }
        if how.sparse_for(self.rows, self.cols) {
            self.column_echelon().0.rank()
        } else {
            let mut d = self.dense_data();
            dense_rref(self.field, self.rows, self.cols, &mut d, how.exec).len()
        }
    }

    pub fn nullity(&self) -> usize {
        self.cols - self.rank()
    }

    /// A basis of `{x : M x = 0}`. Vector number `i` has a 1 at the `i`-th non-pivot
    /// column and zeros at all other non-pivot columns.
    pub fn kernel_basis(&self) -> Vec<Vec<u32>> {
        self.kernel_basis_with(&Elimination::default())
    }

    pub fn kernel_basis_with(&self, how: &Elimination) -> Vec<Vec<u32>> {
        if self.cols == 0 {
            return Vec::new();
        }
        if self.rows == 0 {
            return (0..self.cols).map(|j| SparseVec::unit(j).to_dense(self.cols)).collect();
        }
        if how.sparse_for(self.rows, self.cols) {
            return self.column_echelon().1.iter().map(|k| k.to_dense(self.cols)).collect();
        }
        let f = self.field;
        let mut d = self.dense_data();
        let pivots = dense_rref(f, self.rows, self.cols, &mut d, how.exec);
        let mut is_pivot = vec![false; self.cols];
        for &c in &pivots {
            is_pivot[c] = true;
        }
        (0..self.cols)
            .filter(|&j| !is_pivot[j])
            .map(|j| {
                let mut x = vec![0; self.cols];
                x[j] = 1;
                for (i, &c) in pivots.iter().enumerate() {
                    x[c] = f.neg(d[i * self.cols + j]);
                }
                x
            })
            .collect()
    }

    /// Solves `M x = v`. Returns `Ok(None)` when `v` is not in the column span; the
    /// returned solution is supported on pivot columns.
    pub fn solve_membership(&self, v: &[u32]) -> Result<Option<Vec<u32>>> {
        self.solve_membership_with(v, &Elimination::default())
    }

    pub fn solve_membership_with(&self, v: &[u32], how: &Elimination) -> Result<Option<Vec<u32>>> {
        if v.len() != self.rows {
            return Err(Error::DimensionMismatch {
                expected: self.rows,
                got: v.len(),
            });
        }
        let f = self.field;
        let v: Vec<u32> = v.iter().map(|x| x % f.p()).collect();
        if how.sparse_for(self.rows, self.cols + 1) {
            let (e, _) = self.column_echelon();
            return Ok(e.solve(SparseVec::from_dense(&v)).map(|x| x.to_dense(self.cols)));
        }
        let w = self.cols + 1;
        let src = self.dense_data();
        let mut d = vec![0u32; self.rows * w];
        for r in 0..self.rows {
            d[r * w..r * w + self.cols].copy_from_slice(&src[r * self.cols..(r + 1) * self.cols]);
            d[r * w + self.cols] = v[r];
        }
        let pivots = dense_rref(f, self.rows, w, &mut d, how.exec);
        if pivots.last() == Some(&self.cols) {
            return Ok(None);
        }
        let mut x = vec![0; self.cols];
        for (i, &c) in pivots.iter().enumerate() {
            x[c] = d[i * w + self.cols];
        }
        Ok(Some(x))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn f(p: u32) -> PrimeField {
        PrimeField::new(p).unwrap()
    }

    #[test]
    fn rank_examples() {
        assert_eq!(FMatrix::identity(f(3), 2).rank(), 2);
        assert_eq!(FMatrix::zeros(f(3), 4, 7).rank(), 0);
        let m = FMatrix::from_rows(f(3), &[vec![1, 2], vec![2, 4]]).unwrap();
        assert_eq!(m.rank(), 1);
        assert_eq!(FMatrix::zeros(f(5), 0, 3).rank(), 0);
    }

    #[test]
    fn solve_examples() {
        let id = FMatrix::identity(f(7), 3);
        assert_eq!(id.solve_membership(&[4, 0, 6]).unwrap(), Some(vec![4, 0, 6]));
        let z = FMatrix::zeros(f(7), 2, 2);
        assert_eq!(z.solve_membership(&[0, 1]).unwrap(), None);
        let m = FMatrix::from_rows(f(5), &[vec![1], vec![2]]).unwrap();
        assert_eq!(m.solve_membership(&[3, 6]).unwrap(), Some(vec![3]));
        assert!(matches!(
            m.solve_membership(&[1]),
            Err(Error::DimensionMismatch { expected: 2, got: 1 })
        ));
    }

    #[test]
    fn kernel_examples() {
        assert!(FMatrix::identity(f(3), 4).kernel_basis().is_empty());
        assert_eq!(FMatrix::zeros(f(3), 3, 3).kernel_basis().len(), 3);
        let m = FMatrix::from_rows(f(3), &[vec![1, 1]]).unwrap();
        let k = m.kernel_basis();
        assert_eq!(k, vec![vec![2, 1]]);
        assert_eq!(m.mul_vec(&k[0]).unwrap(), vec![0]);
    }

    #[test]
    fn matrix_power_of_unipotent() {
        let m = FMatrix::from_rows(f(3), &[vec![1, 0], vec![1, 1]]).unwrap();
        assert_eq!(m.pow(3).unwrap(), FMatrix::identity(f(3), 2));
        assert_ne!(m.pow(2).unwrap(), FMatrix::identity(f(3), 2));
    }

    fn arb_matrix() -> impl Strategy<Value = (u32, usize, usize, Vec<u32>)> {
        (prop::sample::select(vec![3u32, 5, 7]), 1usize..9, 1usize..9).prop_flat_map(|(p, r, c)| {
            // bias towards zeros so that rank deficiency is common
            let entry = prop_oneof![3 => Just(0u32), 2 => 0..p];
            (Just(p), Just(r), Just(c), prop::collection::vec(entry, r * c))
        })
    }

    proptest! {
        #[test]
        fn routes_agree((p, r, c, data) in arb_matrix()) {
            let m = FMatrix::from_dense(f(p), r, c, data).unwrap();
            let dense = Elimination::with_route(Route::Dense);
            let sparse = Elimination::with_route(Route::Sparse);
            let rank = m.rank_with(&dense);
            prop_assert_eq!(rank, m.rank_with(&sparse));
            prop_assert!(rank <= r.min(c));
            let k = m.kernel_basis_with(&dense);
            prop_assert_eq!(&k, &m.kernel_basis_with(&sparse));
            prop_assert_eq!(rank + k.len(), c);
            for x in &k {
                prop_assert!(m.mul_vec(x).unwrap().iter().all(|&y| y == 0));
            }
            prop_assert_eq!(m.transpose().rank_with(&dense), rank);
        }

        #[test]
        fn membership_matches_augmented_rank((p, r, c, data) in arb_matrix(), seed in any::<u64>()) {
            let field = f(p);
            let m = FMatrix::from_dense(field, r, c, data).unwrap();
            let v: Vec<u32> = (0..r).map(|i| ((seed >> (i % 60)) as u32 ^ i as u32) % p).collect();
            let mut aug_rows = m.to_rows();
            for (row, &x) in aug_rows.iter_mut().zip(&v) {
                row.push(x);
            }
            let aug = FMatrix::from_rows(field, &aug_rows).unwrap();
            let solvable = aug.rank() == m.rank();
            for route in [Route::Dense, Route::Sparse] {
                let sol = m.solve_membership_with(&v, &Elimination::with_route(route)).unwrap();
                prop_assert_eq!(sol.is_some(), solvable);
                if let Some(x) = sol {
                    prop_assert_eq!(m.mul_vec(&x).unwrap(), v.clone());
                }
            }
        }

        #[test]
        fn parallel_elimination_is_deterministic((p, r, c, data) in arb_matrix()) {
            let m = FMatrix::from_dense(f(p), r, c, data).unwrap();
            let seq = Elimination { route: Route::Dense, exec: Exec::Sequential, ..Default::default() };
            let par = Elimination { route: Route::Dense, exec: Exec::Parallel, ..Default::default() };
            prop_assert_eq!(m.kernel_basis_with(&seq), m.kernel_basis_with(&par));
        }
    }
}
