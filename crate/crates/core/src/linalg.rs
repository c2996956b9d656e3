//! Dense exact linear algebra over a prime field.
//!
//! Matrices act on column vectors. All entries are kept reduced modulo `p`.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize, PartialOrd, Ord)]
pub struct FieldPrime(u32);

impl FieldPrime {
    pub const TWO: FieldPrime = FieldPrime(2);

    pub fn new(p: u32) -> Result<Self> {
        if !(2..1 << 16).contains(&p) {
            return Err(Error::Input(format!("field characteristic {p} out of range")));
        }
        if (2..p).take_while(|d| d * d <= p).any(|d| p.is_multiple_of(d)) {
            return Err(Error::Input(format!("{p} is not prime")));
        }
        Ok(FieldPrime(p))
    }

    #[inline]
    pub fn p(self) -> u32 {
        self.0
    }

    #[inline]
    pub fn reduce(self, x: i64) -> u32 {
        x.rem_euclid(self.0 as i64) as u32
    }

    #[inline]
    pub fn add(self, a: u32, b: u32) -> u32 {
        let s = a + b;
        if s >= self.0 {
            s - self.0
        } else {
            s
        }
    }

    #[inline]
    pub fn sub(self, a: u32, b: u32) -> u32 {
        if a >= b {
            a - b
        } else {
            a + self.0 - b
        }
    }

    #[inline]
    pub fn neg(self, a: u32) -> u32 {
        if a == 0 {
            0
        } else {
            self.0 - a
        }
    }

    #[inline]
    pub fn mul(self, a: u32, b: u32) -> u32 {
        ((a as u64 * b as u64) % self.0 as u64) as u32
    }

    pub fn inv(self, a: u32) -> u32 {
        assert!(a != 0, "inverse of zero");
        // Fermat: a^(p-2)
        let mut result = 1u64;
        let mut base = a as u64;
        let mut e = self.0 - 2;
        let m = self.0 as u64;
        while e > 0 {
            if e & 1 == 1 {
                result = result * base % m;
            }
            base = base * base % m;
            e >>= 1;
        }
        result as u32
    }

    /// All field elements in increasing order.
    pub fn elements(self) -> impl Iterator<Item = u32> {
        0..self.0
    }
}

impl Default for FieldPrime {
    fn default() -> Self {
        FieldPrime::TWO
    }
}

#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Matrix {
    p: FieldPrime,
    rows: usize,
    cols: usize,
    data: Vec<u32>,
}

/// Reduced row echelon form together with its pivot columns.
#[derive(Clone, Debug)]
pub struct Rref {
    pub reduced: Matrix,
    pub pivots: Vec<usize>,
}

impl Rref {
    pub fn rank(&self) -> usize {
        self.pivots.len()
    }
}

impl fmt::Debug for Matrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "Matrix {}x{} over F_{} [", self.rows, self.cols, self.p.0)?;
        for i in 0..self.rows {
            write!(f, "  ")?;
            for j in 0..self.cols {
                write!(f, "{} ", self.get(i, j))?;
            }
            writeln!(f)?;
        }
        write!(f, "]")
    }
}

impl Matrix {
    pub fn zeros(p: FieldPrime, rows: usize, cols: usize) -> Self {
        Matrix { p, rows, cols, data: vec![0; rows * cols] }
    }

    pub fn identity(p: FieldPrime, n: usize) -> Self {
        let mut m = Matrix::zeros(p, n, n);
        for i in 0..n {
            m.data[i * n + i] = 1;
        }
        m
    }

    pub fn scalar(p: FieldPrime, n: usize, c: u32) -> Self {
        let mut m = Matrix::zeros(p, n, n);
        for i in 0..n {
            m.data[i * n + i] = c % p.0;
        }
        m
    }

    pub fn from_rows<R: AsRef<[i64]>>(p: FieldPrime, rows: &[R]) -> Self {
        let r = rows.len();
        let c = rows.first().map_or(0, |x| x.as_ref().len());
        let mut m = Matrix::zeros(p, r, c);
        for (i, row) in rows.iter().enumerate() {
            let row = row.as_ref();
            assert_eq!(row.len(), c, "ragged rows");
            for (j, &x) in row.iter().enumerate() {
                m.data[i * c + j] = p.reduce(x);
            }
        }
        m
    }

    pub fn from_fn(p: FieldPrime, rows: usize, cols: usize, f: impl Fn(usize, usize) -> u32) -> Self {
        let mut m = Matrix::zeros(p, rows, cols);
        for i in 0..rows {
            for j in 0..cols {
                m.data[i * cols + j] = f(i, j) % p.0;
            }
        }
        m
    }

    /// Builds a matrix whose columns are the given vectors.
    pub fn from_columns(p: FieldPrime, rows: usize, columns: &[Vec<u32>]) -> Self {
        let mut m = Matrix::zeros(p, rows, columns.len());
        for (j, col) in columns.iter().enumerate() {
            assert_eq!(col.len(), rows);
            for (i, &x) in col.iter().enumerate() {
                m.data[i * columns.len() + j] = x;
            }
        }
        m
    }

    pub fn column_vector(p: FieldPrime, v: &[u32]) -> Self {
        Matrix { p, rows: v.len(), cols: 1, data: v.to_vec() }
    }

    #[inline]
    pub fn field(&self) -> FieldPrime {
        self.p
    }

    #[inline]
    pub fn rows(&self) -> usize {
        self.rows
    }

    #[inline]
    pub fn cols(&self) -> usize {
        self.cols
    }

    #[inline]
    pub fn shape(&self) -> (usize, usize) {
        (self.rows, self.cols)
    }

    #[inline]
    pub fn get(&self, i: usize, j: usize) -> u32 {
        self.data[i * self.cols + j]
    }

    #[inline]
    pub fn set(&mut self, i: usize, j: usize, x: u32) {
        self.data[i * self.cols + j] = x % self.p.0;
    }

    pub fn entries(&self) -> &[u32] {
        &self.data
    }

    pub fn row(&self, i: usize) -> &[u32] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }

    pub fn column(&self, j: usize) -> Vec<u32> {
        (0..self.rows).map(|i| self.get(i, j)).collect()
    }

    pub fn columns(&self) -> Vec<Vec<u32>> {
        (0..self.cols).map(|j| self.column(j)).collect()
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(|&x| x == 0)
    }

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    pub fn transpose(&self) -> Matrix {
        let mut t = Matrix::zeros(self.p, self.cols, self.rows);
        for i in 0..self.rows {
            for j in 0..self.cols {
                t.data[j * self.rows + i] = self.data[i * self.cols + j];
            }
        }
        t
    }

    pub fn mul(&self, other: &Matrix) -> Matrix {
        assert_eq!(self.cols, other.rows, "matmul shape mismatch {:?} * {:?}", self.shape(), other.shape());
        let p = self.p.0 as u64;
        let (n, m) = (self.rows, other.cols);
        let mut out = Matrix::zeros(self.p, n, m);
        if m == 0 || n == 0 {
            return out;
        }
        let mut acc = vec![0u64; m];
        for i in 0..n {
            acc.iter_mut().for_each(|x| *x = 0);
            let mut pending = 0u32;
            for k in 0..self.cols {
                let a = self.data[i * self.cols + k] as u64;
                if a == 0 {
                    continue;
                }
                let brow = &other.data[k * m..(k + 1) * m];
                for (x, &b) in acc.iter_mut().zip(brow) {
                    *x += a * b as u64;
                }
                pending += 1;
                // keep the accumulator far from overflow
                if pending == 1 << 12 {
                    acc.iter_mut().for_each(|x| *x %= p);
                    pending = 0;
                }
            }
            for (j, x) in acc.iter().enumerate() {
                out.data[i * m + j] = (x % p) as u32;
            }
        }
        out
    }

    pub fn add(&self, other: &Matrix) -> Matrix {
        assert_eq!(self.shape(), other.shape(), "add shape mismatch");
        let p = self.p;
        Matrix {
            p,
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().zip(&other.data).map(|(&a, &b)| p.add(a, b)).collect(),
        }
    }

    pub fn sub(&self, other: &Matrix) -> Matrix {
        assert_eq!(self.shape(), other.shape(), "sub shape mismatch");
        let p = self.p;
        Matrix {
            p,
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().zip(&other.data).map(|(&a, &b)| p.sub(a, b)).collect(),
        }
    }

    pub fn scale(&self, c: u32) -> Matrix {
        let p = self.p;
        Matrix { p, rows: self.rows, cols: self.cols, data: self.data.iter().map(|&a| p.mul(a, c)).collect() }
    }

    pub fn neg(&self) -> Matrix {
        let p = self.p;
        Matrix { p, rows: self.rows, cols: self.cols, data: self.data.iter().map(|&a| p.neg(a)).collect() }
    }

    /// `self += c * other`
    pub fn add_scaled(&mut self, other: &Matrix, c: u32) {
        assert_eq!(self.shape(), other.shape(), "add_scaled shape mismatch");
        if c == 0 {
            return;
        }
        let p = self.p;
        for (a, &b) in self.data.iter_mut().zip(&other.data) {
            *a = p.add(*a, p.mul(b, c));
        }
    }

    pub fn hstack(&self, other: &Matrix) -> Matrix {
        assert_eq!(self.rows, other.rows, "hstack row mismatch");
        let cols = self.cols + other.cols;
        let mut m = Matrix::zeros(self.p, self.rows, cols);
        for i in 0..self.rows {
            m.data[i * cols..i * cols + self.cols].copy_from_slice(self.row(i));
            m.data[i * cols + self.cols..(i + 1) * cols].copy_from_slice(other.row(i));
        }
        m
    }

    pub fn vstack(&self, other: &Matrix) -> Matrix {
        assert_eq!(self.cols, other.cols, "vstack column mismatch");
        let mut data = self.data.clone();
        data.extend_from_slice(&other.data);
        Matrix { p: self.p, rows: self.rows + other.rows, cols: self.cols, data }
    }

    /// Block-diagonal sum.
    pub fn direct_sum(&self, other: &Matrix) -> Matrix {
        let mut m = Matrix::zeros(self.p, self.rows + other.rows, self.cols + other.cols);
        m.paste(0, 0, self);
        m.paste(self.rows, self.cols, other);
        m
    }

    pub fn paste(&mut self, r0: usize, c0: usize, block: &Matrix) {
        assert!(r0 + block.rows <= self.rows && c0 + block.cols <= self.cols, "paste out of bounds");
        for i in 0..block.rows {
            let dst = (r0 + i) * self.cols + c0;
            self.data[dst..dst + block.cols].copy_from_slice(block.row(i));
        }
    }

    pub fn block(&self, r0: usize, c0: usize, rows: usize, cols: usize) -> Matrix {
        assert!(r0 + rows <= self.rows && c0 + cols <= self.cols, "block out of bounds");
        let mut m = Matrix::zeros(self.p, rows, cols);
        for i in 0..rows {
            let src = (r0 + i) * self.cols + c0;
            m.data[i * cols..(i + 1) * cols].copy_from_slice(&self.data[src..src + cols]);
        }
        m
    }

    pub fn select_columns(&self, idx: &[usize]) -> Matrix {
        Matrix::from_fn(self.p, self.rows, idx.len(), |i, j| self.get(i, idx[j]))
    }

    pub fn select_rows(&self, idx: &[usize]) -> Matrix {
        Matrix::from_fn(self.p, idx.len(), self.cols, |i, j| self.get(idx[i], j))
    }

    /// Row-major flattening as a single column.
    pub fn flatten(&self) -> Vec<u32> {
        self.data.clone()
    }

    pub fn from_flat(p: FieldPrime, rows: usize, cols: usize, v: &[u32]) -> Matrix {
        assert_eq!(v.len(), rows * cols);
        Matrix { p, rows, cols, data: v.to_vec() }
    }

    /// Gaussian elimination restricted to pivots in the first `pivot_cols` columns.
    fn eliminate(&mut self, pivot_cols: usize) -> Vec<usize> {
        let p = self.p;
        let mut pivots = Vec::new();
        let mut r = 0;
        let cols = self.cols;
        for c in 0..pivot_cols {
            if r == self.rows {
                break;
            }
            let Some(pr) = (r..self.rows).find(|&i| self.data[i * cols + c] != 0) else {
                continue;
            };
            if pr != r {
                for j in 0..cols {
                    self.data.swap(pr * cols + j, r * cols + j);
                }
            }
            let inv = p.inv(self.data[r * cols + c]);
            if inv != 1 {
                for j in c..cols {
                    self.data[r * cols + j] = p.mul(self.data[r * cols + j], inv);
                }
            }
            let (before, rest) = self.data.split_at_mut(r * cols);
            let (pivot_row, after) = rest.split_at_mut(cols);
            let mut clear = |row: &mut [u32]| {
                let f = row[c];
                if f != 0 {
                    let nf = p.neg(f);
                    for j in c..cols {
                        if pivot_row[j] != 0 {
                            row[j] = p.add(row[j], p.mul(pivot_row[j], nf));
                        }
                    }
                }
            };
            before.chunks_mut(cols).for_each(&mut clear);
            after.chunks_mut(cols).for_each(&mut clear);
            pivots.push(c);
            r += 1;
        }
        pivots
    }

    pub fn rref(&self) -> Rref {
        let mut reduced = self.clone();
        let pivots = reduced.eliminate(self.cols);
        Rref { reduced, pivots }
    }

    pub fn rank(&self) -> usize {
        if self.rows == 0 || self.cols == 0 {
            return 0;
        }
        let mut m = self.clone();
        m.eliminate(self.cols).len()
    }

    /// Columns form a basis of the kernel.
    pub fn nullspace(&self) -> Matrix {
        let Rref { reduced, pivots } = self.rref();
        let free: Vec<usize> = (0..self.cols).filter(|c| !pivots.contains(c)).collect();
        let mut n = Matrix::zeros(self.p, self.cols, free.len());
        for (k, &f) in free.iter().enumerate() {
            n.set(f, k, 1);
            for (r, &pc) in pivots.iter().enumerate() {
                n.set(pc, k, self.p.neg(reduced.get(r, f)));
            }
        }
        n
    }

    /// Some `x` with `self * x = b`, free variables set to zero; `None` when inconsistent.
    pub fn solve(&self, b: &Matrix) -> Result<Option<Matrix>> {
        if b.rows != self.rows || b.p != self.p {
            return Err(Error::Shape(format!("solve {:?} against rhs {:?}", self.shape(), b.shape())));
        }
        let mut aug = self.hstack(b);
        let pivots = aug.eliminate(self.cols);
        let rank = pivots.len();
        let bc = b.cols;
        for i in rank..self.rows {
            if (0..bc).any(|j| aug.get(i, self.cols + j) != 0) {
                return Ok(None);
            }
        }
        let mut x = Matrix::zeros(self.p, self.cols, bc);
        for (r, &pc) in pivots.iter().enumerate() {
            for j in 0..bc {
                x.set(pc, j, aug.get(r, self.cols + j));
            }
        }
        Ok(Some(x))
    }

    pub fn inverse(&self) -> Option<Matrix> {
        if !self.is_square() {
            return None;
        }
        let n = self.rows;
        let mut aug = self.hstack(&Matrix::identity(self.p, n));
        let pivots = aug.eliminate(n);
        if pivots.len() < n {
            return None;
        }
        Some(aug.block(0, n, n, n))
    }

    pub fn is_invertible(&self) -> bool {
        self.is_square() && self.rank() == self.rows
    }

    /// A basis of the column space, taken from the original columns at pivot positions.
    pub fn column_basis(&self) -> Matrix {
        let pivots = self.rref().pivots;
        self.select_columns(&pivots)
    }

    /// Standard basis vectors completing the column space of `self` to the whole space.
    pub fn complement_basis(&self) -> Matrix {
        let n = self.rows;
        let aug = self.hstack(&Matrix::identity(self.p, n));
        let pivots = aug.rref().pivots;
        let extra: Vec<usize> = pivots.iter().filter(|&&c| c >= self.cols).map(|&c| c - self.cols).collect();
        Matrix::from_fn(self.p, n, extra.len(), |i, j| u32::from(i == extra[j]))
    }

    pub fn pow(&self, mut e: usize) -> Matrix {
        assert!(self.is_square());
        let mut result = Matrix::identity(self.p, self.rows);
        let mut base = self.clone();
        while e > 0 {
            if e & 1 == 1 {
                result = result.mul(&base);
            }
            base = base.mul(&base);
            e >>= 1;
        }
        result
    }

    pub fn is_nilpotent(&self) -> bool {
        self.pow(self.rows.max(1)).is_zero()
    }
}

/// Solver for coordinates with respect to a fixed set of independent columns.
#[derive(Clone, Debug)]
pub struct Coordinates {
    basis: Matrix,
    rows_used: Vec<usize>,
    inv: Matrix,
}

impl Coordinates {
    /// `basis` must have independent columns.
    pub fn new(basis: Matrix) -> Self {
        let k = basis.cols();
        let rows_used = basis.transpose().rref().pivots;
        assert_eq!(rows_used.len(), k, "coordinate basis is not independent");
        let square = basis.select_rows(&rows_used);
        let inv = square.inverse().expect("selected rows are independent");
        Coordinates { basis, rows_used, inv }
    }

    pub fn dim(&self) -> usize {
        self.basis.cols()
    }

    pub fn basis(&self) -> &Matrix {
        &self.basis
    }

    /// Coordinates of `v`, assumed to lie in the span.
    pub fn coords_unchecked(&self, v: &[u32]) -> Vec<u32> {
        let p = self.basis.field();
        let k = self.dim();
        let mut out = vec![0u32; k];
        for (r, &row) in self.rows_used.iter().enumerate() {
            let x = v[row];
            if x == 0 {
                continue;
            }
            for (i, o) in out.iter_mut().enumerate() {
                *o = p.add(*o, p.mul(self.inv.get(i, r), x));
            }
        }
        out
    }

    /// Coordinates of `v`, or `None` if `v` is outside the span.
    pub fn coords(&self, v: &[u32]) -> Option<Vec<u32>> {
        let c = self.coords_unchecked(v);
        let back = self.combine(&c);
        (back == v).then_some(c)
    }

    pub fn combine(&self, c: &[u32]) -> Vec<u32> {
        self.basis.mul(&Matrix::column_vector(self.basis.field(), c)).flatten()
    }
}

/// Integer vector helper: `a += c * b` over the field.
pub fn axpy(p: FieldPrime, a: &mut [u32], c: u32, b: &[u32]) {
    if c == 0 {
        return;
    }
    for (x, &y) in a.iter_mut().zip(b) {
        *x = p.add(*x, p.mul(c, y));
    }
}
