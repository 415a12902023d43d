//! Dense exact linear algebra, generic over the scalar field.
//!
//! Determinants use fraction-free (Bareiss) elimination so that entry growth
//! stays bounded when the scalars are big rationals with large numerators;
//! a cofactor-expansion determinant over a bare ring is kept alongside both
//! as an independent oracle and for polynomial-entry matrices.

use std::ops::{Add, Div, Mul, Neg, Sub};

use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::rat::{primitive_vector, Rat};

/// Commutative-ring scalar: what cofactor expansion needs.
pub trait Ring:
    Clone
    + PartialEq
    + Zero
    + One
    + Neg<Output = Self>
    + Add<Output = Self>
    + Sub<Output = Self>
    + Mul<Output = Self>
{
}
impl<T> Ring for T where
    T: Clone
        + PartialEq
        + Zero
        + One
        + Neg<Output = T>
        + Add<Output = T>
        + Sub<Output = T>
        + Mul<Output = T>
{
}

/// Field scalar: adds exact division, enabling elimination.
pub trait Field: Ring + Div<Output = Self> {}
impl<T> Field for T where T: Ring + Div<Output = T> {}

#[derive(Clone, Debug, PartialEq)]
pub struct Mat<T> {
    rows: usize,
    cols: usize,
    data: Vec<T>,
}

pub type MatQ = Mat<Rat>;

impl<T: Clone> Mat<T> {
    pub fn new(rows: usize, cols: usize, data: Vec<T>) -> Self {
        assert_eq!(rows * cols, data.len(), "entry count must be rows*cols");
        Mat { rows, cols, data }
    }

    pub fn from_rows(rows: Vec<Vec<T>>) -> Self {
        let r = rows.len();
        let c = rows.first().map_or(0, |row| row.len());
        assert!(rows.iter().all(|row| row.len() == c), "ragged rows");
        Mat {
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

    pub fn at(&self, i: usize, j: usize) -> &T {
        &self.data[i * self.cols + j]
    }

    pub fn set(&mut self, i: usize, j: usize, v: T) {
        self.data[i * self.cols + j] = v;
    }

    pub fn row(&self, i: usize) -> Vec<T> {
        self.data[i * self.cols..(i + 1) * self.cols].to_vec()
    }

    pub fn row_vecs(&self) -> Vec<Vec<T>> {
        (0..self.rows).map(|i| self.row(i)).collect()
    }

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    /// Vertical concatenation.
    pub fn stack(&self, other: &Mat<T>) -> Mat<T> {
        assert_eq!(self.cols, other.cols);
        let mut data = self.data.clone();
        data.extend_from_slice(&other.data);
        Mat {
            rows: self.rows + other.rows,
            cols: self.cols,
            data,
        }
    }

    /// Submatrix picked out by row and column index sets.
    pub fn minor_matrix(&self, rows: &[usize], cols: &[usize]) -> Mat<T> {
        let data = rows
            .iter()
            .flat_map(|&i| cols.iter().map(move |&j| self.at(i, j).clone()))
            .collect();
        Mat::new(rows.len(), cols.len(), data)
    }
}

impl<T: Ring> Mat<T> {
    pub fn zero(rows: usize, cols: usize) -> Self {
        Mat {
            rows,
            cols,
            data: vec![T::zero(); rows * cols],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zero(n, n);
        for i in 0..n {
            m.set(i, i, T::one());
        }
        m
    }

    pub fn mul(&self, other: &Mat<T>) -> Mat<T> {
        assert_eq!(self.cols, other.rows, "inner dimensions must agree");
        let mut out: Mat<T> = Mat::zero(self.rows, other.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = self.at(i, k);
                if a.is_zero() {
                    continue;
                }
                for j in 0..other.cols {
                    let v = out.at(i, j).clone() + a.clone() * other.at(k, j).clone();
                    out.set(i, j, v);
                }
            }
        }
        out
    }

    pub fn transpose(&self) -> Mat<T> {
        let mut out = Mat::zero(self.cols, self.rows);
        for i in 0..self.rows {
            for j in 0..self.cols {
                out.set(j, i, self.at(i, j).clone());
            }
        }
        out
    }

    /// Matrix-vector product `m * v`.
    pub fn apply(&self, v: &[T]) -> Vec<T> {
        assert_eq!(self.cols, v.len());
        (0..self.rows)
            .map(|i| {
                (0..self.cols).fold(T::zero(), |acc, j| {
                    acc + self.at(i, j).clone() * v[j].clone()
                })
            })
            .collect()
    }
}

impl<T: Field> Mat<T> {
    /// Fraction-free determinant (Bareiss one-step elimination).
    pub fn det(&self) -> Result<T> {
        if !self.is_square() {
            return Err(Error::NonSquare {
                rows: self.rows,
                cols: self.cols,
            });
        }
        let n = self.rows;
        if n == 0 {
            return Ok(T::one());
        }
        let mut a = self.clone();
        let mut sign_flip = false;
        let mut prev = T::one();
        for k in 0..n - 1 {
            if a.at(k, k).is_zero() {
                match (k + 1..n).find(|&i| !a.at(i, k).is_zero()) {
                    Some(p) => {
                        for j in 0..n {
                            let x = a.at(k, j).clone();
                            let y = a.at(p, j).clone();
                            a.set(k, j, y);
                            a.set(p, j, x);
                        }
                        sign_flip = !sign_flip;
                    }
                    None => return Ok(T::zero()),
                }
            }
            for i in k + 1..n {
                for j in k + 1..n {
                    let v = (a.at(k, k).clone() * a.at(i, j).clone()
                        - a.at(i, k).clone() * a.at(k, j).clone())
                        / prev.clone();
                    a.set(i, j, v);
                }
                a.set(i, k, T::zero());
            }
            prev = a.at(k, k).clone();
        }
        let d = a.at(n - 1, n - 1).clone();
        Ok(if sign_flip { -d } else { d })
    }

    /// Reduced row-echelon form together with the pivot columns.
    pub fn rref(&self) -> (Mat<T>, Vec<usize>) {
        let mut a = self.clone();
        let mut pivots = Vec::new();
        let mut r = 0;
        for c in 0..a.cols {
            if r == a.rows {
                break;
            }
            let Some(p) = (r..a.rows).find(|&i| !a.at(i, c).is_zero()) else {
                continue;
            };
            if p != r {
                for j in 0..a.cols {
                    let x = a.at(r, j).clone();
                    let y = a.at(p, j).clone();
                    a.set(r, j, y);
                    a.set(p, j, x);
                }
            }
            let inv = T::one() / a.at(r, c).clone();
            for j in 0..a.cols {
                let v = a.at(r, j).clone() * inv.clone();
                a.set(r, j, v);
            }
            for i in 0..a.rows {
                if i != r && !a.at(i, c).is_zero() {
                    let f = a.at(i, c).clone();
                    for j in 0..a.cols {
                        let v = a.at(i, j).clone() - f.clone() * a.at(r, j).clone();
                        a.set(i, j, v);
                    }
                }
            }
            pivots.push(c);
            r += 1;
        }
        (a, pivots)
    }

    pub fn rank(&self) -> usize {
        self.rref().1.len()
    }

    /// Basis of the right null space. Vectors are independent and each
    /// satisfies `m * v = 0`; the zero matrix yields the standard basis.
    pub fn kernel(&self) -> Vec<Vec<T>> {
        let (r, pivots) = self.rref();
        let mut basis = Vec::new();
        let mut is_pivot = vec![false; self.cols];
        for &col in &pivots {
            is_pivot[col] = true;
        }
        for free in (0..self.cols).filter(|&c| !is_pivot[c]) {
            let mut v = vec![T::zero(); self.cols];
            v[free] = T::one();
            for (row, &col) in pivots.iter().enumerate() {
                v[col] = -r.at(row, free).clone();
            }
            basis.push(v);
        }
        basis
    }
}

impl MatQ {
    /// Rational kernel with every basis vector scaled to a primitive integer
    /// vector whose first nonzero entry is positive.
    pub fn kernel_primitive(&self) -> Vec<Vec<Rat>> {
        self.kernel().iter().map(|v| primitive_vector(v)).collect()
    }
}

/// Determinant by cofactor expansion along the first row. Exponential, but
/// needs only ring operations; used for polynomial entries and as the
/// independent oracle for the Bareiss route.
pub fn det_cofactor<T: Ring>(m: &Mat<T>) -> Result<T> {
    if !m.is_square() {
        return Err(Error::NonSquare {
            rows: m.rows(),
            cols: m.cols(),
        });
    }
    Ok(det_cofactor_inner(m))
}

fn det_cofactor_inner<T: Ring>(m: &Mat<T>) -> T {
    let n = m.rows();
    if n == 0 {
        return T::one();
    }
    if n == 1 {
        return m.at(0, 0).clone();
    }
    let rows: Vec<usize> = (1..n).collect();
    let mut acc = T::zero();
    for j in 0..n {
        if m.at(0, j).is_zero() {
            continue;
        }
        let cols: Vec<usize> = (0..n).filter(|&c| c != j).collect();
        let sub = det_cofactor_inner(&m.minor_matrix(&rows, &cols));
        let term = m.at(0, j).clone() * sub;
        acc = if j % 2 == 0 { acc + term } else { acc - term };
    }
    acc
}
