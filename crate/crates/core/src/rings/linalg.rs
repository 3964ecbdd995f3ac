//! Dense exact linear algebra over a [`Field`].

use super::Field;
use crate::error::{Error, Result};

/// Row-major dense matrix.
#[derive(Clone, Debug, PartialEq)]
pub struct Matrix<C> {
    pub rows: usize,
    pub cols: usize,
    data: Vec<C>,
}

impl<C: super::Coeff> Matrix<C> {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        Matrix {
            rows,
            cols,
            data: vec![C::zero(); rows * cols],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m.set(i, i, C::one());
        }
        m
    }

    pub fn from_fn(rows: usize, cols: usize, mut f: impl FnMut(usize, usize) -> C) -> Self {
        let mut data = Vec::with_capacity(rows * cols);
        for i in 0..rows {
            for j in 0..cols {
                data.push(f(i, j));
            }
        }
        Matrix { rows, cols, data }
    }

    pub fn get(&self, i: usize, j: usize) -> &C {
        &self.data[i * self.cols + j]
    }

    pub fn set(&mut self, i: usize, j: usize, v: C) {
        self.data[i * self.cols + j] = v;
    }

    pub fn row(&self, i: usize) -> &[C] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }

    pub fn mul(&self, other: &Self) -> Self {
        assert_eq!(self.cols, other.rows, "dimension mismatch");
        Self::from_fn(self.rows, other.cols, |i, j| {
            (0..self.cols).fold(C::zero(), |acc, k| {
                let a = self.get(i, k);
                if a.is_zero() {
                    acc
                } else {
                    acc.plus(&a.times(other.get(k, j)))
                }
            })
        })
    }

    pub fn transpose(&self) -> Self {
        Self::from_fn(self.cols, self.rows, |i, j| self.get(j, i).clone())
    }

    pub fn map<D: super::Coeff>(&self, f: impl Fn(&C) -> D) -> Matrix<D> {
        Matrix {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().map(f).collect(),
        }
    }

    pub fn is_identity(&self) -> bool {
        self.rows == self.cols
            && (0..self.rows).all(|i| {
                (0..self.cols).all(|j| {
                    let v = self.get(i, j);
                    if i == j {
                        *v == C::one()
                    } else {
                        v.is_zero()
                    }
                })
            })
    }
}

/// Gauss-Jordan elimination on an augmented system. Returns the reduced
/// matrix and the pivot columns.
fn row_reduce<C: Field>(mut m: Matrix<C>, pivot_limit: usize) -> Result<(Matrix<C>, Vec<usize>)> {
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..pivot_limit {
        if r == m.rows {
            break;
        }
        let Some(p) = (r..m.rows).find(|&i| !m.get(i, c).is_zero()) else {
            continue;
        };
        if p != r {
            for j in 0..m.cols {
                m.data.swap(p * m.cols + j, r * m.cols + j);
            }
        }
        let inv = m.get(r, c).inv()?;
        for j in 0..m.cols {
            let v = m.get(r, j).times(&inv);
            m.set(r, j, v);
        }
        for i in 0..m.rows {
            if i == r || m.get(i, c).is_zero() {
                continue;
            }
            let f = m.get(i, c).clone();
            for j in 0..m.cols {
                if m.get(r, j).is_zero() {
                    continue;
                }
                let v = m.get(i, j).minus(&f.times(m.get(r, j)));
                m.set(i, j, v);
            }
        }
        pivots.push(c);
        r += 1;
    }
    Ok((m, pivots))
}

pub fn rank<C: Field>(m: &Matrix<C>) -> usize {
    row_reduce(m.clone(), m.cols).map(|(_, p)| p.len()).unwrap_or(0)
}

pub fn inverse<C: Field>(m: &Matrix<C>) -> Result<Matrix<C>> {
    let n = m.rows;
    if n != m.cols {
        return Err(Error::Singular);
    }
    let aug = Matrix::from_fn(n, 2 * n, |i, j| {
        if j < n {
            m.get(i, j).clone()
        } else if j - n == i {
            C::one()
        } else {
            C::zero()
        }
    });
    let (red, pivots) = row_reduce(aug, n)?;
    if pivots.len() < n {
        return Err(Error::Singular);
    }
    Ok(Matrix::from_fn(n, n, |i, j| red.get(i, n + j).clone()))
}

/// Solves `m x = b` for square nonsingular `m`.
pub fn solve<C: Field>(m: &Matrix<C>, b: &[C]) -> Result<Vec<C>> {
    let n = m.rows;
    if n != m.cols || b.len() != n {
        return Err(Error::Singular);
    }
    let aug = Matrix::from_fn(n, n + 1, |i, j| if j < n { m.get(i, j).clone() } else { b[i].clone() });
    let (red, pivots) = row_reduce(aug, n)?;
    if pivots.len() < n {
        return Err(Error::Singular);
    }
    Ok((0..n).map(|i| red.get(i, n).clone()).collect())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rings::{q_int, Coeff, Q};

    fn qm(rows: &[&[i64]]) -> Matrix<Q> {
        Matrix::from_fn(rows.len(), rows[0].len(), |i, j| q_int(rows[i][j]))
    }

    #[test]
    fn inverse_and_solve() {
        let m = qm(&[&[2, 1], &[1, 1]]);
        let inv = inverse(&m).unwrap();
        assert!(m.mul(&inv).is_identity());
        assert_eq!(solve(&m, &[q_int(3), q_int(2)]).unwrap(), vec![Q::one(), Q::one()]);
        assert_eq!(inverse(&qm(&[&[1, 2], &[2, 4]])), Err(Error::Singular));
        assert_eq!(rank(&qm(&[&[1, 2], &[2, 4]])), 1);
    }
}
