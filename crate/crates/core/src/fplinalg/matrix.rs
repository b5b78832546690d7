use super::field::Fp;
use super::reducer::Reducer;
use super::vec::FpVec;
use crate::error::{Error, Result};

/// Dense row-major matrix over `F_p`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FpMatrix {
    f: Fp,
    cols: usize,
    rows: Vec<FpVec>,
}

impl FpMatrix {
    pub fn zero(f: Fp, rows: usize, cols: usize) -> FpMatrix {
        FpMatrix { f, cols, rows: vec![FpVec::zero(f, cols); rows] }
    }

    pub fn identity(f: Fp, n: usize) -> FpMatrix {
        let mut m = FpMatrix::zero(f, n, n);
        for i in 0..n {
            m.set(i, i, 1);
        }
        m
    }

    pub fn from_rows(f: Fp, cols: usize, rows: Vec<FpVec>) -> FpMatrix {
        assert!(rows.iter().all(|r| r.len() == cols));
        FpMatrix { f, cols, rows }
    }

    pub fn from_u8(f: Fp, data: &[Vec<u8>]) -> FpMatrix {
        let cols = data.first().map_or(0, |r| r.len());
        FpMatrix { f, cols, rows: data.iter().map(|r| FpVec::from_slice(f, r)).collect() }
    }

    /// Matrix whose columns are the given vectors.
    pub fn from_cols(f: Fp, nrows: usize, cols: &[FpVec]) -> FpMatrix {
        let mut m = FpMatrix::zero(f, nrows, cols.len());
        for (j, c) in cols.iter().enumerate() {
            for i in 0..nrows {
                let x = c.get(i);
                if x != 0 {
                    m.set(i, j, x);
                }
            }
        }
        m
    }

    pub fn field(&self) -> Fp {
        self.f
    }

    pub fn nrows(&self) -> usize {
        self.rows.len()
    }

    pub fn ncols(&self) -> usize {
        self.cols
    }

    #[inline]
    pub fn get(&self, i: usize, j: usize) -> u8 {
        self.rows[i].get(j)
    }

    #[inline]
    pub fn set(&mut self, i: usize, j: usize, x: u8) {
        self.rows[i].set(j, x)
    }

    pub fn row(&self, i: usize) -> &FpVec {
        &self.rows[i]
    }

    pub fn rows(&self) -> &[FpVec] {
        &self.rows
    }

    pub fn col(&self, j: usize) -> FpVec {
        let mut v = FpVec::zero(self.f, self.nrows());
        for i in 0..self.nrows() {
            v.set(i, self.get(i, j));
        }
        v
    }

    pub fn to_u8(&self) -> Vec<Vec<u8>> {
        self.rows.iter().map(|r| r.to_vec()).collect()
    }

    pub fn transpose(&self) -> FpMatrix {
        let mut t = FpMatrix::zero(self.f, self.cols, self.nrows());
        for i in 0..self.nrows() {
            for j in 0..self.cols {
                let x = self.get(i, j);
                if x != 0 {
                    t.set(j, i, x);
                }
            }
        }
        t
    }

    pub fn mul(&self, other: &FpMatrix) -> FpMatrix {
        assert_eq!(self.cols, other.nrows());
        let rows = crate::par::map_slice(&self.rows, |r| {
            let mut out = FpVec::zero(self.f, other.cols);
            for k in 0..self.cols {
                let c = r.get(k);
                if c != 0 {
                    out.axpy(c, &other.rows[k]);
                }
            }
            out
        });
        FpMatrix { f: self.f, cols: other.cols, rows }
    }

    pub fn mul_vec(&self, v: &FpVec) -> Result<FpVec> {
        if v.len() != self.cols {
            return Err(Error::DimensionMismatch { expected: self.cols, found: v.len() });
        }
        let mut out = FpVec::zero(self.f, self.nrows());
        for (i, r) in self.rows.iter().enumerate() {
            out.set(i, r.dot(v));
        }
        Ok(out)
    }

    pub fn add(&self, other: &FpMatrix) -> FpMatrix {
        let mut m = self.clone();
        for (a, b) in m.rows.iter_mut().zip(&other.rows) {
            a.add_assign(b);
        }
        m
    }

    pub fn sub(&self, other: &FpMatrix) -> FpMatrix {
        let mut m = self.clone();
        for (a, b) in m.rows.iter_mut().zip(&other.rows) {
            a.sub_assign(b);
        }
        m
    }

    pub fn scale(&self, c: u8) -> FpMatrix {
        let mut m = self.clone();
        m.rows.iter_mut().for_each(|r| r.scale(c));
        m
    }

    pub fn pow(&self, mut e: u64) -> FpMatrix {
        let mut base = self.clone();
        let mut acc = FpMatrix::identity(self.f, self.nrows());
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.mul(&base);
            }
            base = base.mul(&base);
            e >>= 1;
        }
        acc
    }

    pub fn is_zero(&self) -> bool {
        self.rows.iter().all(|r| r.is_zero())
    }

    /// The matrix flattened row by row.
    pub fn flatten(&self) -> FpVec {
        let mut v = FpVec::zero(self.f, self.nrows() * self.cols);
        for i in 0..self.nrows() {
            for j in 0..self.cols {
                let x = self.get(i, j);
                if x != 0 {
                    v.set(i * self.cols + j, x);
                }
            }
        }
        v
    }

    pub fn rank(&self) -> usize {
        let mut r = Reducer::new(self.f, self.cols);
        for row in &self.rows {
            r.insert(row.clone());
        }
        r.rank()
    }

    /// Reduced row echelon form (nonzero rows only) with pivot columns.
    pub fn rref(&self) -> (Vec<FpVec>, Vec<usize>) {
        let mut r = Reducer::new(self.f, self.cols);
        for row in &self.rows {
            r.insert(row.clone());
        }
        r.rref()
    }

    /// Basis of `{v : M v = 0}`.
    pub fn kernel_basis(&self) -> Vec<FpVec> {
        let mut r = Reducer::new(self.f, self.cols);
        for row in &self.rows {
            r.insert(row.clone());
        }
        r.kernel_basis()
    }

    /// Some `v` with `M v = b`.
    pub fn solve(&self, b: &FpVec) -> Result<Option<FpVec>> {
        if b.len() != self.nrows() {
            return Err(Error::DimensionMismatch { expected: self.nrows(), found: b.len() });
        }
        let n = self.cols;
        let mut r = Reducer::new(self.f, n + 1);
        for (i, row) in self.rows.iter().enumerate() {
            let mut ext = FpVec::zero(self.f, n + 1);
            for j in 0..n {
                ext.set(j, row.get(j));
            }
            ext.set(n, b.get(i));
            r.insert(ext);
        }
        let (rows, pivots) = r.rref();
        if pivots.contains(&n) {
            return Ok(None);
        }
        let mut x = FpVec::zero(self.f, n);
        for (row, &c) in rows.iter().zip(&pivots) {
            x.set(c, row.get(n));
        }
        Ok(Some(x))
    }

    /// Inverse of a square matrix, if invertible.
    pub fn inverse(&self) -> Option<FpMatrix> {
        let n = self.nrows();
        assert_eq!(n, self.cols);
        let mut r = Reducer::new(self.f, 2 * n);
        for (i, row) in self.rows.iter().enumerate() {
            let mut ext = row.concat(&FpVec::zero(self.f, n));
            ext.set(n + i, 1);
            r.insert(ext);
        }
        let (rows, pivots) = r.rref();
        if pivots.len() < n || pivots[n - 1] >= n {
            return None;
        }
        Some(FpMatrix { f: self.f, cols: n, rows: rows.iter().map(|v| v.slice(n, 2 * n)).collect() })
    }
}
