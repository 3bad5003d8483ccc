use std::collections::HashMap;
use std::sync::{Arc, Mutex};

use super::cochain::table_len;
use super::Cochain;
use crate::algebras::{GroupAction, QuotientAlgebra, SmashProduct};
use crate::ffmat::{ColumnEchelon, FMatrix, PrimeField, SparseVec};
use crate::{Error, Exec, Result};

/// Default memory budget for bar differential matrices.
pub const DEFAULT_BUDGET_MB: u64 = 256;

/// Output rows handled per parallel task in the direct differential.
const CHUNK: usize = 1 << 12;

/// The reduced bar complex of a finite algebra with trivial coefficients.
///
/// Letter `i` of a tuple is basis element `i + 1` of the algebra (the unit is
/// basis element 0).
#[derive(Debug)]
pub struct BarComplex<'a> {
    alg: &'a QuotientAlgebra,
    width: usize,
    /// `products[i * width + j] = x_i x_j` in `A_+` coordinates.
    products: Vec<SparseVec>,
    /// `preimages[k]` lists `(i, j, c)` with `c` the coefficient of `x_k` in `x_i x_j`.
    preimages: Vec<Vec<(usize, usize, u32)>>,
    budget_mb: u64,
    exec: Exec,
    matrices: Mutex<HashMap<usize, Arc<FMatrix>>>,
    boundaries: Mutex<HashMap<usize, Arc<ColumnEchelon>>>,
}

impl<'a> BarComplex<'a> {
    pub fn new(alg: &'a QuotientAlgebra, budget_mb: u64, exec: Exec) -> Result<Self> {
        if !alg.generators_augmented_to_zero() {
            return Err(Error::Augmentation("generators must lie in the augmentation ideal".into()));
        }
        let width = alg.dim() - 1;
        let products: Vec<SparseVec> = exec.map_range(width * width, |ij| {
            let v = alg.mul_basis(ij / width + 1, ij % width + 1);
            SparseVec::from_sorted(v.iter().map(|(k, c)| (k - 1, c)).collect())
        });
        let mut preimages = vec![Vec::new(); width];
        for (ij, v) in products.iter().enumerate() {
            for (k, c) in v.iter() {
                preimages[k].push((ij / width, ij % width, c));
            }
        }
        Ok(BarComplex {
            alg,
            width,
            products,
            preimages,
            budget_mb,
            exec,
            matrices: Mutex::new(HashMap::new()),
            boundaries: Mutex::new(HashMap::new()),
        })
    }

    pub fn algebra(&self) -> &QuotientAlgebra {
        self.alg
    }

    pub fn field(&self) -> PrimeField {
        self.alg.field()
    }

    /// `dim A_+`.
    pub fn width(&self) -> usize {
        self.width
    }

    pub fn budget_mb(&self) -> u64 {
        self.budget_mb
    }

    pub fn zero(&self, degree: usize) -> Cochain {
        Cochain::zero(self.field(), self.width, degree)
    }

    /// Letter index of an algebra basis element other than the unit.
    pub fn letter(&self, basis: usize) -> Option<usize> {
        (basis >= 1 && basis < self.alg.dim()).then(|| basis - 1)
    }

    /// Worst-case memory (MB) for eliminating `d^n`.
    pub fn estimate_mb(&self, n: usize) -> u64 {
        let rows = table_len(self.width, n + 1) as u128;
        let cols = table_len(self.width, n) as u128;
        (rows.min(cols) * rows * 16 / (1 << 20)) as u64
    }

    fn check_budget(&self, n: usize) -> Result<()> {
        let needed_mb = self.estimate_mb(n);
        if needed_mb > self.budget_mb {
            return Err(Error::BudgetExceeded {
                needed_mb,
                budget_mb: self.budget_mb,
            });
        }
        Ok(())
    }

    /// `df`, computed entry by entry from the structure constants.
    pub fn differential(&self, f: &Cochain) -> Result<Cochain> {
        if f.width() != self.width {
            return Err(Error::DimensionMismatch {
                expected: self.width,
                got: f.width(),
            });
        }
        let n = f.degree();
        let field = self.field();
        let w = self.width;
        let len = table_len(w, n + 1);
        let mut out = vec![0u32; len];
        let src = f.values();
        self.exec.for_each_chunk_mut(&mut out, CHUNK, |chunk, slot| {
            let mut digits = vec![0usize; n + 1];
            for (off, v) in slot.iter_mut().enumerate() {
                let mut idx = chunk * CHUNK + off;
                for d in digits.iter_mut().rev() {
                    *d = idx % w;
                    idx /= w;
                }
                let mut acc = 0;
                for i in 0..n {
                    let prod = &self.products[digits[i] * w + digits[i + 1]];
                    let head = digits[..i].iter().fold(0, |a, &x| a * w + x);
                    let tail_len = n - 1 - i;
                    let tail = digits[i + 2..].iter().fold(0, |a, &x| a * w + x);
                    let scale = table_len(w, tail_len);
                    let mut term = 0;
                    for (k, c) in prod.iter() {
                        let at = (head * w + k) * scale + tail;
                        term = field.mul_add(term, c, src[at]);
                    }
                    acc = if i % 2 == 0 { field.sub(acc, term) } else { field.add(acc, term) };
                }
                *v = acc;
            }
        });
        Cochain::from_values(field, w, n + 1, out)
    }

    /// The matrix of `d^n : C^n -> C^{n+1}` in the tuple bases (cached).
    pub fn differential_matrix(&self, n: usize) -> Result<Arc<FMatrix>> {
        if let Some(m) = self.matrices.lock().expect("cache lock").get(&n) {
            return Ok(m.clone());
        }
        self.check_budget(n)?;
        let field = self.field();
        let w = self.width;
        let rows = table_len(w, n + 1);
        let cols = self.exec.map_range(table_len(w, n), |col| {
            let mut digits = vec![0usize; n];
            let mut idx = col;
            for d in digits.iter_mut().rev() {
                *d = idx % w;
                idx /= w;
            }
            let mut pairs = Vec::new();
            for i in 0..n {
                let sign = if i % 2 == 0 { field.neg(1) } else { 1 };
                let head = digits[..i].iter().fold(0, |a, &x| a * w + x);
                let tail = digits[i + 1..].iter().fold(0, |a, &x| a * w + x);
                let scale = table_len(w, n - 1 - i);
                for &(u, v, c) in &self.preimages[digits[i]] {
                    pairs.push((((head * w + u) * w + v) * scale + tail, field.mul(sign, c)));
                }
            }
            SparseVec::from_pairs(field, pairs)
        });
        let m = Arc::new(FMatrix::from_columns(field, rows, cols)?);
        self.matrices.lock().expect("cache lock").insert(n, m.clone());
        Ok(m)
    }

    /// Echelon form of the columns of `d^{n-1}`, i.e. of the coboundaries in degree `n`.
    fn boundary_echelon(&self, n: usize) -> Result<Arc<ColumnEchelon>> {
        if let Some(e) = self.boundaries.lock().expect("cache lock").get(&n) {
            return Ok(e.clone());
        }
        let e = Arc::new(self.differential_matrix(n - 1)?.column_echelon().0);
        self.boundaries.lock().expect("cache lock").insert(n, e.clone());
        Ok(e)
    }

    pub fn rank(&self, n: usize) -> Result<usize> {
        Ok(self.differential_matrix(n)?.rank())
    }

    /// `dim H^n(A, k)` from ranks of `d^n` and `d^{n-1}`.
    pub fn ext_dim(&self, n: usize) -> Result<usize> {
        let below = if n == 0 { 0 } else { self.rank(n - 1)? };
        Ok(table_len(self.width, n) - self.rank(n)? - below)
    }

    pub fn is_cocycle(&self, f: &Cochain) -> Result<bool> {
        Ok(self.differential(f)?.is_zero())
    }

    /// A cochain `g` with `dg = f`, or `None` when `f` is not a coboundary.
    pub fn coboundary_witness(&self, f: &Cochain) -> Result<Option<Cochain>> {
        let n = f.degree();
        if n == 0 {
            return Ok(f.is_zero().then(|| self.zero(0)));
        }
        let e = self.boundary_echelon(n)?;
        Ok(match e.solve(f.to_sparse()) {
            Some(x) => Some(Cochain::from_values(
                self.field(),
                self.width,
                n - 1,
                x.to_dense(table_len(self.width, n - 1)),
            )?),
            None => None,
        })
    }

    pub fn is_coboundary(&self, f: &Cochain) -> Result<bool> {
        let n = f.degree();
        if n == 0 {
            return Ok(f.is_zero());
        }
        Ok(self.boundary_echelon(n)?.contains(f.to_sparse()))
    }

    /// Whether `f - g` is a coboundary.
    pub fn cohomologous(&self, f: &Cochain, g: &Cochain) -> Result<bool> {
        self.is_coboundary(&f.sub(g)?)
    }

    /// Matrix of `g^k` on `A_+` (letters), column `j` the image of letter `j`.
    pub fn action_matrix(&self, action: &GroupAction, k: usize) -> Result<FMatrix> {
        let full = action.matrix(self.alg, k)?;
        let cols = (1..self.alg.dim())
            .map(|j| {
                let c = full.column(j);
                if c.get(0) != 0 {
                    return Err(Error::Action("action does not preserve the augmentation ideal".into()));
                }
                Ok(SparseVec::from_sorted(c.iter().map(|(i, v)| (i - 1, v)).collect()))
            })
            .collect::<Result<Vec<_>>>()?;
        FMatrix::from_columns(self.field(), self.width, cols)
    }

    /// `(m . f)(x_1..x_n) = f(m x_1, .., m x_n)` for a matrix `m` on `A_+`.
    pub fn pull_back(&self, f: &Cochain, m: &FMatrix) -> Result<Cochain> {
        let field = self.field();
        let w = self.width;
        let n = f.degree();
        let cols: Vec<SparseVec> = m.columns();
        let mut cur = f.values().to_vec();
        for mode in 0..n {
            let stride = table_len(w, n - 1 - mode);
            let mut next = vec![0u32; cur.len()];
            let block = stride * w;
            self.exec.for_each_chunk_mut(&mut next, block, |b, out| {
                let base = b * block;
                for (t, col) in cols.iter().enumerate() {
                    for r in 0..stride {
                        let mut acc = 0;
                        for (s, c) in col.iter() {
                            acc = field.mul_add(acc, c, cur[base + s * stride + r]);
                        }
                        out[t * stride + r] = acc;
                    }
                }
            });
            cur = next;
        }
        Cochain::from_values(field, w, n, cur)
    }

    /// `(g . f)(x_1..x_n) = f(g^{-1} x_1, .., g^{-1} x_n)`.
    pub fn g_action(&self, f: &Cochain, action: &GroupAction) -> Result<Cochain> {
        let inv = self.action_matrix(action, action.order() - 1)?;
        self.pull_back(f, &inv)
    }

    /// Restriction of a smash-product cochain along `A -> A # kG`; `self` is the
    /// bar complex of `A # kG` and `base` that of `A`.
    pub fn restrict(&self, f: &Cochain, smash: &SmashProduct, base: &BarComplex<'_>) -> Result<Cochain> {
        if f.width() != self.width || base.width + 1 != smash.base_dim {
            return Err(Error::DimensionMismatch {
                expected: self.width,
                got: f.width(),
            });
        }
        let map: Vec<usize> = (1..smash.base_dim).map(|i| smash.embedding[i] - 1).collect();
        let n = f.degree();
        let wb = base.width;
        let values = self.exec.map_range(table_len(wb, n), |mut idx| {
            let mut at = 0;
            let mut scale = 1;
            for _ in 0..n {
                at += map[idx % wb] * scale;
                scale *= self.width;
                idx /= wb;
            }
            f.values()[at]
        });
        Cochain::from_values(self.field(), wb, n, values)
    }
}
