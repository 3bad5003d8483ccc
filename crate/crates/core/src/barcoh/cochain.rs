use rand::Rng;

use crate::ffmat::{PrimeField, SparseVec};
use crate::{Error, Result};

/// A reduced bar cochain of a fixed degree over `width = dim A_+` letters.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Cochain {
    field: PrimeField,
    width: usize,
    degree: usize,
    values: Vec<u32>,
}

pub(crate) fn table_len(width: usize, degree: usize) -> usize {
    width.pow(degree as u32)
}

impl Cochain {
    pub fn zero(field: PrimeField, width: usize, degree: usize) -> Self {
        Cochain {
            field,
            width,
            degree,
            values: vec![0; table_len(width, degree)],
        }
    }

    /// The degree-0 cochain `1`.
    pub fn unit(field: PrimeField, width: usize) -> Self {
        Cochain {
            field,
            width,
            degree: 0,
            values: vec![1],
        }
    }

    pub fn from_values(field: PrimeField, width: usize, degree: usize, values: Vec<u32>) -> Result<Self> {
        if values.len() != table_len(width, degree) {
            return Err(Error::DimensionMismatch {
                expected: table_len(width, degree),
                got: values.len(),
            });
        }
        let values = values.into_iter().map(|v| v % field.p()).collect();
        Ok(Cochain {
            field,
            width,
            degree,
            values,
        })
    }

    pub fn random<R: Rng>(field: PrimeField, width: usize, degree: usize, rng: &mut R) -> Self {
        let values = (0..table_len(width, degree)).map(|_| rng.gen_range(0..field.p())).collect();
        Cochain {
            field,
            width,
            degree,
            values,
        }
    }

    pub fn field(&self) -> PrimeField {
        self.field
    }

    pub fn width(&self) -> usize {
        self.width
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn values(&self) -> &[u32] {
        &self.values
    }

    pub fn to_sparse(&self) -> SparseVec {
        SparseVec::from_dense(&self.values)
    }

    pub fn index(&self, tuple: &[usize]) -> usize {
        debug_assert_eq!(tuple.len(), self.degree);
        tuple.iter().fold(0, |acc, &i| acc * self.width + i)
    }

    pub fn get(&self, tuple: &[usize]) -> u32 {
        self.values[self.index(tuple)]
    }

    pub fn set(&mut self, tuple: &[usize], v: u32) {
        let i = self.index(tuple);
        self.values[i] = v % self.field.p();
    }

    pub fn is_zero(&self) -> bool {
        self.values.iter().all(|&v| v == 0)
    }

    fn check(&self, other: &Cochain) -> Result<()> {
        if (self.width, self.degree) != (other.width, other.degree) {
            return Err(Error::DimensionMismatch {
                expected: self.degree,
                got: other.degree,
            });
        }
        Ok(())
    }

    /// `self + c * other`.
    pub fn add_scaled(&self, other: &Cochain, c: u32) -> Result<Cochain> {
        self.check(other)?;
        let f = self.field;
        let values = self
            .values
            .iter()
            .zip(&other.values)
            .map(|(&x, &y)| f.mul_add(x, y, c))
            .collect();
        Ok(Cochain {
            values,
            ..self.clone()
        })
    }

    pub fn add(&self, other: &Cochain) -> Result<Cochain> {
        self.add_scaled(other, 1)
    }

    pub fn sub(&self, other: &Cochain) -> Result<Cochain> {
        self.add_scaled(other, self.field.neg(1))
    }

    pub fn scaled(&self, c: u32) -> Cochain {
        let f = self.field;
        Cochain {
            values: self.values.iter().map(|&x| f.mul(x, c)).collect(),
            ..self.clone()
        }
    }

    /// Concatenation product `(f g)(x, y) = f(x) g(y)`.
    pub fn cup(&self, other: &Cochain) -> Result<Cochain> {
        if self.width != other.width {
            return Err(Error::DimensionMismatch {
                expected: self.width,
                got: other.width,
            });
        }
        let f = self.field;
        let mut values = Vec::with_capacity(self.values.len() * other.values.len());
        for &x in &self.values {
            values.extend(other.values.iter().map(|&y| f.mul(x, y)));
        }
        Ok(Cochain {
            field: f,
            width: self.width,
            degree: self.degree + other.degree,
            values,
        })
    }
}
