//! Dense exact matrices and rank computations.

use std::ops::Mul;

use num_traits::Zero;

use crate::scalar::{ExactDomain, Field, Ring};

/// Row-major dense matrix.
#[derive(Clone, Debug, PartialEq)]
pub struct Matrix<T> {
    rows: usize,
    cols: usize,
    data: Vec<T>,
}

impl<T: Ring> Matrix<T> {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        Matrix {
            rows,
            cols,
            data: vec![T::zero(); rows * cols],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m[(i, i)] = T::one();
        }
        m
    }

    pub fn from_rows(rows: Vec<Vec<T>>) -> Self {
        let r = rows.len();
        let c = rows.first().map_or(0, Vec::len);
        assert!(rows.iter().all(|row| row.len() == c), "ragged rows");
        Matrix {
            rows: r,
            cols: c,
            data: rows.into_iter().flatten().collect(),
        }
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn row(&self, i: usize) -> &[T] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(Zero::is_zero)
    }

    pub fn scale(&self, c: &T) -> Self {
        Matrix {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().map(|x| x.clone() * c.clone()).collect(),
        }
    }

    pub fn add(&self, other: &Self) -> Self {
        assert_eq!((self.rows, self.cols), (other.rows, other.cols));
        Matrix {
            rows: self.rows,
            cols: self.cols,
            data: self
                .data
                .iter()
                .zip(&other.data)
                .map(|(a, b)| a.clone() + b.clone())
                .collect(),
        }
    }

    pub fn transpose(&self) -> Self {
        let mut out = Self::zeros(self.cols, self.rows);
        for i in 0..self.rows {
            for j in 0..self.cols {
                out[(j, i)] = self[(i, j)].clone();
            }
        }
        out
    }

    pub fn map<U: Ring>(&self, f: impl Fn(&T) -> U) -> Matrix<U> {
        Matrix {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().map(f).collect(),
        }
    }
}

impl<T> std::ops::Index<(usize, usize)> for Matrix<T> {
    type Output = T;
    fn index(&self, (i, j): (usize, usize)) -> &T {
        &self.data[i * self.cols + j]
    }
}

impl<T> std::ops::IndexMut<(usize, usize)> for Matrix<T> {
    fn index_mut(&mut self, (i, j): (usize, usize)) -> &mut T {
        &mut self.data[i * self.cols + j]
    }
}

impl<T: Ring> Mul for &Matrix<T> {
    type Output = Matrix<T>;
    fn mul(self, rhs: &Matrix<T>) -> Matrix<T> {
        assert_eq!(self.cols, rhs.rows, "inner dimensions differ");
        let mut out: Matrix<T> = Matrix::zeros(self.rows, rhs.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = &self[(i, k)];
                if a.is_zero() {
                    continue;
                }
                for j in 0..rhs.cols {
                    let b = &rhs[(k, j)];
                    if !b.is_zero() {
                        out[(i, j)] = out[(i, j)].clone() + a.clone() * b.clone();
                    }
                }
            }
        }
        out
    }
}

/// Rank by Gaussian elimination over a field.
pub fn rank<F: Field>(m: &Matrix<F>) -> usize {
    let mut basis = EchelonBasis::new(m.cols());
    for i in 0..m.rows() {
        basis.insert(m.row(i).to_vec());
    }
    basis.rank()
}

/// Rank by fraction-free (Bareiss) elimination over an integral domain.
///
/// Every intermediate entry is a minor of the input, so divisions are exact.
pub fn rank_fraction_free<T: ExactDomain>(m: &Matrix<T>) -> usize {
    let (rows, cols) = (m.rows(), m.cols());
    let mut a: Vec<Vec<T>> = (0..rows).map(|i| m.row(i).to_vec()).collect();
    let mut prev = T::one();
    let mut r = 0;
    for c in 0..cols {
        if r == rows {
            break;
        }
        let Some(p) = (r..rows).find(|&i| !a[i][c].is_zero()) else {
            continue;
        };
        a.swap(r, p);
        for i in r + 1..rows {
            for j in c + 1..cols {
                let v = a[r][c].clone() * a[i][j].clone() - a[i][c].clone() * a[r][j].clone();
                a[i][j] = v / prev.clone();
            }
            a[i][c] = T::zero();
        }
        prev = a[r][c].clone();
        r += 1;
    }
    r
}

/// Incrementally maintained row-echelon basis of a subspace of `F^dim`.
///
/// Each stored row has a pivot (first nonzero) normalized to one, and pivots
/// are pairwise distinct, so inserting a vector reduces it in one pass.
#[derive(Clone, Debug)]
pub struct EchelonBasis<F> {
    dim: usize,
    rows: Vec<(usize, Vec<F>)>,
}

impl<F: Field> EchelonBasis<F> {
    pub fn new(dim: usize) -> Self {
        EchelonBasis {
            dim,
            rows: Vec::new(),
        }
    }

    pub fn rank(&self) -> usize {
        self.rows.len()
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    /// Reduce `v` against the basis; returns the residual.
    pub fn reduce(&self, mut v: Vec<F>) -> Vec<F> {
        assert_eq!(v.len(), self.dim);
        for (p, row) in &self.rows {
            if v[*p].is_zero() {
                continue;
            }
            let c = v[*p].clone();
            for (x, y) in v.iter_mut().zip(row).skip(*p) {
                if !y.is_zero() {
                    *x = x.clone() - c.clone() * y.clone();
                }
            }
        }
        v
    }

    /// Inserts `v`; returns true when it enlarged the span.
    pub fn insert(&mut self, v: Vec<F>) -> bool {
        let mut v = self.reduce(v);
        let Some(p) = v.iter().position(|x| !x.is_zero()) else {
            return false;
        };
        let inv = F::one() / v[p].clone();
        for x in v.iter_mut().skip(p) {
            *x = x.clone() * inv.clone();
        }
        // keep the invariant that every stored row is zero at every other pivot
        for (_, row) in self.rows.iter_mut() {
            if !row[p].is_zero() {
                let c = row[p].clone();
                for (x, y) in row.iter_mut().zip(&v).skip(p) {
                    if !y.is_zero() {
                        *x = x.clone() - c.clone() * y.clone();
                    }
                }
            }
        }
        self.rows.push((p, v));
        true
    }

    pub fn contains(&self, v: Vec<F>) -> bool {
        self.reduce(v).iter().all(Zero::is_zero)
    }

    pub fn vectors(&self) -> impl Iterator<Item = &[F]> {
        self.rows.iter().map(|(_, r)| r.as_slice())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_bigint::BigInt;
    use num_rational::BigRational;
    use proptest::prelude::*;

    fn q(v: i64) -> BigRational {
        BigRational::from_integer(v.into())
    }

    #[test]
    fn rank_of_small_matrices() {
        let m = Matrix::from_rows(vec![vec![q(1), q(2)], vec![q(2), q(4)]]);
        assert_eq!(rank(&m), 1);
        assert_eq!(rank(&Matrix::<BigRational>::identity(4)), 4);
        assert_eq!(rank(&Matrix::<BigRational>::zeros(3, 5)), 0);
        assert_eq!(rank(&Matrix::<BigRational>::zeros(0, 0)), 0);
    }

    #[test]
    fn product_with_identity() {
        let m = Matrix::from_rows(vec![vec![q(1), q(2), q(3)], vec![q(4), q(5), q(6)]]);
        assert_eq!(&m * &Matrix::identity(3), m);
        assert_eq!(&Matrix::identity(2) * &m, m);
    }

    #[test]
    fn echelon_membership() {
        let mut b = EchelonBasis::new(3);
        assert!(b.insert(vec![q(1), q(1), q(0)]));
        assert!(b.insert(vec![q(0), q(1), q(1)]));
        assert!(!b.insert(vec![q(1), q(2), q(1)]));
        assert!(b.contains(vec![q(2), q(0), q(-2)]));
        assert!(!b.contains(vec![q(0), q(0), q(1)]));
    }

    proptest! {
        // two independent elimination routes must agree
        #[test]
        fn field_and_fraction_free_ranks_agree(
            entries in prop::collection::vec(-3i64..4, 0..30),
            cols in 1usize..6,
        ) {
            let rows = entries.len() / cols;
            let ints: Vec<Vec<BigInt>> = (0..rows)
                .map(|i| entries[i * cols..(i + 1) * cols].iter().map(|&x| BigInt::from(x)).collect())
                .collect();
            let mi = if rows == 0 { Matrix::zeros(0, cols) } else { Matrix::from_rows(ints) };
            let mq = mi.map(|x| BigRational::from_integer(x.clone()));
            prop_assert_eq!(rank(&mq), rank_fraction_free(&mi));
            prop_assert_eq!(rank(&mq), rank(&mq.transpose()));
        }
    }
}
