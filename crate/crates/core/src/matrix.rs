//! Dense square matrices over a [`Scalar`].

use std::ops::{Add, Mul};

use crate::scalar::{Field, Scalar};

#[derive(Clone, Debug, PartialEq)]
pub struct Matrix<T> {
    dim: usize,
    data: Vec<T>,
}

impl<T: Scalar> Matrix<T> {
    pub fn zeros(dim: usize) -> Self {
        Matrix { dim, data: vec![T::zero(); dim * dim] }
    }

    pub fn identity(dim: usize) -> Self {
        let mut m = Self::zeros(dim);
        for i in 0..dim {
            m[(i, i)] = T::one();
        }
        m
    }

    /// Builds a matrix from rows; panics on ragged or non-square input.
    pub fn from_rows(rows: &[Vec<T>]) -> Self {
        let dim = rows.len();
        assert!(rows.iter().all(|r| r.len() == dim), "matrix must be square");
        Matrix { dim, data: rows.iter().flatten().copied().collect() }
    }

    pub fn from_fn(dim: usize, mut f: impl FnMut(usize, usize) -> T) -> Self {
        let mut data = Vec::with_capacity(dim * dim);
        for i in 0..dim {
            for j in 0..dim {
                data.push(f(i, j));
            }
        }
        Matrix { dim, data }
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn row(&self, i: usize) -> &[T] {
        &self.data[i * self.dim..(i + 1) * self.dim]
    }

    pub fn trace(&self) -> T {
        (0..self.dim).fold(T::zero(), |acc, i| acc + self[(i, i)])
    }

    pub fn pow(&self, e: u32) -> Self {
        let mut acc = Self::identity(self.dim);
        for _ in 0..e {
            acc = &acc * self;
        }
        acc
    }

    /// Kronecker (tensor) product `self ⊗ other`, row-major block layout.
    pub fn kron(&self, other: &Matrix<T>) -> Matrix<T> {
        let (p, q) = (self.dim, other.dim);
        Matrix::from_fn(p * q, |r, c| self[(r / q, c / q)] * other[(r % q, c % q)])
    }

    pub fn mul_vec(&self, v: &[T]) -> Vec<T> {
        assert_eq!(v.len(), self.dim);
        (0..self.dim)
            .map(|i| self.row(i).iter().zip(v).fold(T::zero(), |acc, (&a, &b)| acc + a * b))
            .collect()
    }

    /// Determinant by fraction-free (Bareiss) elimination. Exact for integer
    /// and rational entries: every division is exact by construction.
    pub fn det(&self) -> T {
        let n = self.dim;
        if n == 0 {
            return T::one();
        }
        let mut a = self.data.clone();
        let mut sign = T::one();
        let mut prev = T::one();
        for k in 0..n - 1 {
            if a[k * n + k] == T::zero() {
                let Some(p) = (k + 1..n).find(|&r| a[r * n + k] != T::zero()) else {
                    return T::zero();
                };
                for c in 0..n {
                    a.swap(k * n + c, p * n + c);
                }
                sign = T::zero() - sign;
            }
            let pivot = a[k * n + k];
            for i in k + 1..n {
                for j in k + 1..n {
                    a[i * n + j] = (a[i * n + j] * pivot - a[i * n + k] * a[k * n + j]) / prev;
                }
            }
            prev = pivot;
        }
        sign * a[n * n - 1]
    }

    pub fn map<U: Scalar>(&self, f: impl Fn(T) -> U) -> Matrix<U> {
        Matrix { dim: self.dim, data: self.data.iter().map(|&x| f(x)).collect() }
    }

    pub fn approx_eq(&self, other: &Matrix<T>) -> bool {
        self.dim == other.dim && self.data.iter().zip(&other.data).all(|(&a, &b)| a.approx_eq(b))
    }
}

impl<T: Field> Matrix<T> {
    /// Solves `self · x = b` by Gauss-Jordan elimination; `None` when singular.
    pub fn solve(&self, b: &[T]) -> Option<Vec<T>> {
        let n = self.dim;
        assert_eq!(b.len(), n);
        let mut a = self.data.clone();
        let mut x = b.to_vec();
        for col in 0..n {
            let p = (col..n).find(|&r| a[r * n + col] != T::zero())?;
            if p != col {
                for c in 0..n {
                    a.swap(col * n + c, p * n + c);
                }
                x.swap(col, p);
            }
            let inv = T::one() / a[col * n + col];
            for c in 0..n {
                a[col * n + c] = a[col * n + c] * inv;
            }
            x[col] = x[col] * inv;
            for r in 0..n {
                if r != col && a[r * n + col] != T::zero() {
                    let f = a[r * n + col];
                    for c in 0..n {
                        a[r * n + c] = a[r * n + c] - f * a[col * n + c];
                    }
                    x[r] = x[r] - f * x[col];
                }
            }
        }
        Some(x)
    }
}

impl<T> std::ops::Index<(usize, usize)> for Matrix<T> {
    type Output = T;
    fn index(&self, (i, j): (usize, usize)) -> &T {
        &self.data[i * self.dim + j]
    }
}

impl<T> std::ops::IndexMut<(usize, usize)> for Matrix<T> {
    fn index_mut(&mut self, (i, j): (usize, usize)) -> &mut T {
        &mut self.data[i * self.dim + j]
    }
}

impl<T: Scalar> Add for &Matrix<T> {
    type Output = Matrix<T>;
    fn add(self, rhs: &Matrix<T>) -> Matrix<T> {
        assert_eq!(self.dim, rhs.dim);
        Matrix { dim: self.dim, data: self.data.iter().zip(&rhs.data).map(|(&a, &b)| a + b).collect() }
    }
}

impl<T: Scalar> Mul for &Matrix<T> {
    type Output = Matrix<T>;
    fn mul(self, rhs: &Matrix<T>) -> Matrix<T> {
        assert_eq!(self.dim, rhs.dim);
        let n = self.dim;
        let mut out = Matrix::zeros(n);
        for i in 0..n {
            for k in 0..n {
                let a = self[(i, k)];
                if a == T::zero() {
                    continue;
                }
                for j in 0..n {
                    out.data[i * n + j] = out.data[i * n + j] + a * rhs[(k, j)];
                }
            }
        }
        out
    }
}
