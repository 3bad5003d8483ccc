use super::PrimeField;

/// A sparse vector: `(index, value)` pairs sorted by index, no zero values.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct SparseVec(Vec<(usize, u32)>);

impl SparseVec {
    pub fn new() -> Self {
        SparseVec(Vec::new())
    }

    pub fn unit(i: usize) -> Self {
        SparseVec(vec![(i, 1)])
    }

    /// Builds from arbitrary pairs; sorts, merges duplicates and drops zeros.
    pub fn from_pairs(field: PrimeField, mut pairs: Vec<(usize, u32)>) -> Self {
        pairs.sort_unstable_by_key(|&(i, _)| i);
        let mut out: Vec<(usize, u32)> = Vec::with_capacity(pairs.len());
        for (i, v) in pairs {
            match out.last_mut() {
                Some((j, w)) if *j == i => *w = field.add(*w, v),
                _ => out.push((i, v % field.p())),
            }
        }
        out.retain(|&(_, v)| v != 0);
        SparseVec(out)
    }

    /// Wraps pairs that are already sorted, distinct and nonzero.
    pub fn from_sorted(pairs: Vec<(usize, u32)>) -> Self {
        debug_assert!(pairs.windows(2).all(|w| w[0].0 < w[1].0));
        debug_assert!(pairs.iter().all(|&(_, v)| v != 0));
        SparseVec(pairs)
    }

    pub fn from_dense(v: &[u32]) -> Self {
        SparseVec(
            v.iter()
                .enumerate()
                .filter(|(_, &x)| x != 0)
                .map(|(i, &x)| (i, x))
                .collect(),
        )
    }

    pub fn to_dense(&self, len: usize) -> Vec<u32> {
        let mut out = vec![0; len];
        for &(i, v) in &self.0 {
            out[i] = v;
        }
        out
    }

    pub fn is_zero(&self) -> bool {
        self.0.is_empty()
    }

    pub fn nnz(&self) -> usize {
        self.0.len()
    }

    pub fn entries(&self) -> &[(usize, u32)] {
        &self.0
    }

    pub fn into_entries(self) -> Vec<(usize, u32)> {
        self.0
    }

    pub fn iter(&self) -> impl Iterator<Item = (usize, u32)> + '_ {
        self.0.iter().copied()
    }

    pub fn first(&self) -> Option<(usize, u32)> {
        self.0.first().copied()
    }

    pub fn get(&self, i: usize) -> u32 {
        match self.0.binary_search_by_key(&i, |&(j, _)| j) {
            Ok(k) => self.0[k].1,
            Err(_) => 0,
        }
    }

    pub fn scale(&mut self, field: PrimeField, c: u32) {
        if c.is_multiple_of(field.p()) {
            self.0.clear();
            return;
        }
        for (_, v) in self.0.iter_mut() {
            *v = field.mul(*v, c);
        }
    }

    /// `self += c * other`
    pub fn add_scaled(&mut self, field: PrimeField, other: &SparseVec, c: u32) {
        let c = c % field.p();
        if c == 0 || other.0.is_empty() {
            return;
        }
        if self.0.is_empty() {
            self.0 = other.0.iter().map(|&(i, v)| (i, field.mul(v, c))).collect();
            return;
        }
        let mut out = Vec::with_capacity(self.0.len() + other.0.len());
        let (a, b) = (&self.0, &other.0);
        let (mut i, mut j) = (0, 0);
        while i < a.len() && j < b.len() {
            match a[i].0.cmp(&b[j].0) {
                std::cmp::Ordering::Less => {
                    out.push(a[i]);
                    i += 1;
                }
                std::cmp::Ordering::Greater => {
                    out.push((b[j].0, field.mul(b[j].1, c)));
                    j += 1;
                }
                std::cmp::Ordering::Equal => {
                    let v = field.mul_add(a[i].1, b[j].1, c);
                    if v != 0 {
                        out.push((a[i].0, v));
                    }
                    i += 1;
                    j += 1;
                }
            }
        }
        out.extend_from_slice(&a[i..]);
        out.extend(b[j..].iter().map(|&(k, v)| (k, field.mul(v, c))));
        self.0 = out;
    }

    pub fn dot_dense(&self, field: PrimeField, dense: &[u32]) -> u32 {
        let mut acc = 0u64;
        let p = field.p() as u64;
        for &(i, v) in &self.0 {
            acc = (acc + v as u64 * dense[i] as u64) % p;
        }
        acc as u32
    }
}
