//! Small dense matrices over arbitrary-precision integers.

use std::fmt;
use std::ops::{Add, Index, IndexMut, Mul, Sub};

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

/// A square matrix of `BigInt`, stored row-major.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct IntMatrix {
    n: usize,
    data: Vec<BigInt>,
}

impl IntMatrix {
    pub fn zeros(n: usize) -> IntMatrix {
        IntMatrix {
            n,
            data: vec![BigInt::zero(); n * n],
        }
    }

    pub fn identity(n: usize) -> IntMatrix {
        let mut m = IntMatrix::zeros(n);
        for i in 0..n {
            m[(i, i)] = BigInt::one();
        }
        m
    }

    /// Builds a matrix from rows; panics if the rows are not square.
    pub fn from_rows<T: Into<BigInt> + Clone>(rows: &[Vec<T>]) -> IntMatrix {
        let n = rows.len();
        let mut data = Vec::with_capacity(n * n);
        for row in rows {
            assert_eq!(row.len(), n, "matrix must be square");
            data.extend(row.iter().cloned().map(Into::into));
        }
        IntMatrix { n, data }
    }

    pub fn dim(&self) -> usize {
        self.n
    }

    pub fn row(&self, i: usize) -> &[BigInt] {
        &self.data[i * self.n..(i + 1) * self.n]
    }

    pub fn rows(&self) -> Vec<Vec<BigInt>> {
        (0..self.n).map(|i| self.row(i).to_vec()).collect()
    }

    pub fn row_sums(&self) -> Vec<BigInt> {
        (0..self.n).map(|i| self.row(i).iter().sum()).collect()
    }

    pub fn mul_vec(&self, v: &[BigInt]) -> Vec<BigInt> {
        assert_eq!(v.len(), self.n);
        (0..self.n)
            .map(|i| self.row(i).iter().zip(v).map(|(a, b)| a * b).sum())
            .collect()
    }

    pub fn is_nonnegative(&self) -> bool {
        self.data.iter().all(|x| !x.is_negative())
    }

    pub fn is_positive(&self) -> bool {
        self.data.iter().all(|x| x.is_positive())
    }

    /// `self^e` by repeated squaring.
    pub fn pow(&self, mut e: u64) -> IntMatrix {
        let mut base = self.clone();
        let mut acc = IntMatrix::identity(self.n);
        while e > 0 {
            if e & 1 == 1 {
                acc = &acc * &base;
            }
            e >>= 1;
            if e > 0 {
                base = &base * &base;
            }
        }
        acc
    }

    /// `self^e · v`, applying the binary powers to the vector so the
    /// largest products are matrix-vector ones.
    pub fn pow_mul_vec(&self, mut e: u64, v: &[BigInt]) -> Vec<BigInt> {
        let mut base = self.clone();
        let mut acc = v.to_vec();
        while e > 0 {
            if e & 1 == 1 {
                acc = base.mul_vec(&acc);
            }
            e >>= 1;
            if e > 0 {
                base = &base * &base;
            }
        }
        acc
    }

    /// The principal submatrix on `idx`.
    pub fn submatrix(&self, idx: &[usize]) -> IntMatrix {
        let mut out = IntMatrix::zeros(idx.len());
        for (a, &i) in idx.iter().enumerate() {
            for (b, &j) in idx.iter().enumerate() {
                out[(a, b)] = self[(i, j)].clone();
            }
        }
        out
    }

    /// Square block `[r0..r0+k) × [c0..c0+k)`.
    pub fn block(&self, r0: usize, c0: usize, k: usize) -> IntMatrix {
        let mut out = IntMatrix::zeros(k);
        for i in 0..k {
            for j in 0..k {
                out[(i, j)] = self[(r0 + i, c0 + j)].clone();
            }
        }
        out
    }

    /// Assembles `[[a, b], [c, d]]` from four equal-sized blocks.
    pub fn from_blocks(a: &IntMatrix, b: &IntMatrix, c: &IntMatrix, d: &IntMatrix) -> IntMatrix {
        let k = a.n;
        assert!(b.n == k && c.n == k && d.n == k);
        let mut out = IntMatrix::zeros(2 * k);
        for i in 0..k {
            for j in 0..k {
                out[(i, j)] = a[(i, j)].clone();
                out[(i, j + k)] = b[(i, j)].clone();
                out[(i + k, j)] = c[(i, j)].clone();
                out[(i + k, j + k)] = d[(i, j)].clone();
            }
        }
        out
    }
}

impl Index<(usize, usize)> for IntMatrix {
    type Output = BigInt;
    fn index(&self, (i, j): (usize, usize)) -> &BigInt {
        &self.data[i * self.n + j]
    }
}

impl IndexMut<(usize, usize)> for IntMatrix {
    fn index_mut(&mut self, (i, j): (usize, usize)) -> &mut BigInt {
        &mut self.data[i * self.n + j]
    }
}

impl Mul for &IntMatrix {
    type Output = IntMatrix;
    fn mul(self, rhs: &IntMatrix) -> IntMatrix {
        assert_eq!(self.n, rhs.n);
        let n = self.n;
        let mut out = IntMatrix::zeros(n);
        for i in 0..n {
            for k in 0..n {
                let a = &self[(i, k)];
                if a.is_zero() {
                    continue;
                }
                for j in 0..n {
                    let b = &rhs[(k, j)];
                    if !b.is_zero() {
                        out[(i, j)] += a * b;
                    }
                }
            }
        }
        out
    }
}

impl Add for &IntMatrix {
    type Output = IntMatrix;
    fn add(self, rhs: &IntMatrix) -> IntMatrix {
        assert_eq!(self.n, rhs.n);
        IntMatrix {
            n: self.n,
            data: self
                .data
                .iter()
                .zip(&rhs.data)
                .map(|(a, b)| a + b)
                .collect(),
        }
    }
}

impl Sub for &IntMatrix {
    type Output = IntMatrix;
    fn sub(self, rhs: &IntMatrix) -> IntMatrix {
        assert_eq!(self.n, rhs.n);
        IntMatrix {
            n: self.n,
            data: self
                .data
                .iter()
                .zip(&rhs.data)
                .map(|(a, b)| a - b)
                .collect(),
        }
    }
}

impl fmt::Display for IntMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let cells: Vec<String> = self.data.iter().map(|x| x.to_string()).collect();
        let width = cells.iter().map(String::len).max().unwrap_or(1);
        for i in 0..self.n {
            let row: Vec<String> = (0..self.n)
                .map(|j| format!("{:>width$}", cells[i * self.n + j]))
                .collect();
            writeln!(f, "[{}]", row.join(" "))?;
        }
        Ok(())
    }
}

/// A `2k × 2k` matrix of the shape `[[A, A - I], [B - I, B]]`, stored by
/// its two diagonal blocks.
///
/// Such matrices are closed under multiplication:
/// `(A, B)·(C, D) = (A(C+D) - A - D + I, B(C+D) - B - C + I)`,
/// which makes powers cost two `k × k` products per step instead of one
/// `2k × 2k` product.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BlockPair {
    pub a: IntMatrix,
    pub b: IntMatrix,
}

impl BlockPair {
    pub fn identity(k: usize) -> BlockPair {
        BlockPair {
            a: IntMatrix::identity(k),
            b: IntMatrix::identity(k),
        }
    }

    pub fn mul(&self, rhs: &BlockPair) -> BlockPair {
        let id = IntMatrix::identity(self.a.dim());
        let sum = &rhs.a + &rhs.b;
        let a = &(&(&(&self.a * &sum) - &self.a) - &rhs.b) + &id;
        let b = &(&(&(&self.b * &sum) - &self.b) - &rhs.a) + &id;
        BlockPair { a, b }
    }

    pub fn pow(&self, mut e: u64) -> BlockPair {
        let mut base = self.clone();
        let mut acc = BlockPair::identity(self.a.dim());
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.mul(&base);
            }
            e >>= 1;
            if e > 0 {
                base = base.mul(&base);
            }
        }
        acc
    }

    /// The full matrix times `v = (x, y)`: `(A(x+y) - y, B(x+y) - x)`.
    pub fn mul_vec(&self, v: &[BigInt]) -> Vec<BigInt> {
        let k = self.a.dim();
        assert_eq!(v.len(), 2 * k);
        let (x, y) = v.split_at(k);
        let sum: Vec<BigInt> = x.iter().zip(y).map(|(p, q)| p + q).collect();
        let top = self.a.mul_vec(&sum).into_iter().zip(y).map(|(p, q)| p - q);
        let bottom = self.b.mul_vec(&sum).into_iter().zip(x).map(|(p, q)| p - q);
        top.chain(bottom).collect()
    }

    /// `self^e · v` with matrix-vector products for the accumulator.
    pub fn pow_mul_vec(&self, mut e: u64, v: &[BigInt]) -> Vec<BigInt> {
        let mut base = self.clone();
        let mut acc = v.to_vec();
        while e > 0 {
            if e & 1 == 1 {
                acc = base.mul_vec(&acc);
            }
            e >>= 1;
            if e > 0 {
                base = base.mul(&base);
            }
        }
        acc
    }

    /// The full `2k × 2k` matrix.
    pub fn to_matrix(&self) -> IntMatrix {
        let id = IntMatrix::identity(self.a.dim());
        IntMatrix::from_blocks(&self.a, &(&self.a - &id), &(&self.b - &id), &self.b)
    }

    /// Row sums of the full matrix: `2A·1 - 1` followed by `2B·1 - 1`.
    pub fn row_sums(&self) -> Vec<BigInt> {
        let one = BigInt::one();
        self.a
            .row_sums()
            .into_iter()
            .chain(self.b.row_sums())
            .map(|s| (s << 1) - &one)
            .collect()
    }
}
