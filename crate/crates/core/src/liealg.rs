//! Lie algebras over `F_p` given by structure constants.

use serde::Serialize;

use crate::error::{Error, Result};
use crate::fplinalg::{Fp, FpVec, Reducer};

/// `[e_i, e_j] = sum_k c[(i n + j) n + k] e_k`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LieAlgebraFp {
    f: Fp,
    n: usize,
    c: Vec<u8>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum LowDimClass {
    Zero,
    OneDimensional,
    Abelian2,
    Nonabelian2,
}

/// Largest dimension and prime for the exhaustive simplicity search.
pub const SIMPLE_MAX_DIM: usize = 4;
pub const SIMPLE_MAX_PRIME: u32 = 23;

impl LieAlgebraFp {
    pub fn new(f: Fp, n: usize, c: Vec<u8>) -> Self {
        assert_eq!(c.len(), n * n * n);
        LieAlgebraFp { f, n, c }
    }

    pub fn abelian(f: Fp, n: usize) -> Self {
        Self::new(f, n, vec![0; n * n * n])
    }

    /// Build from `[e_i, e_j]` for `i < j`; the rest follows by antisymmetry.
    pub fn from_brackets(f: Fp, n: usize, mut br: impl FnMut(usize, usize) -> FpVec) -> Self {
        let mut c = vec![0; n * n * n];
        for i in 0..n {
            for j in i + 1..n {
                let v = br(i, j);
                for k in 0..n {
                    c[(i * n + j) * n + k] = v.get(k);
                    c[(j * n + i) * n + k] = f.neg(v.get(k));
                }
            }
        }
        Self::new(f, n, c)
    }

    pub fn field(&self) -> Fp {
        self.f
    }

    pub fn dim(&self) -> usize {
        self.n
    }

    pub fn constant(&self, i: usize, j: usize, k: usize) -> u8 {
        self.c[(i * self.n + j) * self.n + k]
    }

    pub fn constants(&self) -> &[u8] {
        &self.c
    }

    pub fn basis_bracket(&self, i: usize, j: usize) -> FpVec {
        let n = self.n;
        FpVec::from_slice(self.f, &self.c[(i * n + j) * n..(i * n + j + 1) * n])
    }

    pub fn bracket(&self, x: &FpVec, y: &FpVec) -> FpVec {
        let mut out = FpVec::zero(self.f, self.n);
        for i in x.support() {
            for j in y.support() {
                let c = self.f.mul(x.get(i), y.get(j));
                out.axpy(c, &self.basis_bracket(i, j));
            }
        }
        out
    }

    /// Alternating and Jacobi, or the first offending basis triple.
    pub fn validate(&self) -> Result<()> {
        let n = self.n;
        for i in 0..n {
            for k in 0..n {
                if self.constant(i, i, k) != 0 {
                    return Err(Error::InvalidStructure(i, i, k));
                }
            }
            for j in 0..n {
                for k in 0..n {
                    if self.constant(i, j, k) != self.f.neg(self.constant(j, i, k)) {
                        return Err(Error::InvalidStructure(i, j, k));
                    }
                }
            }
        }
        let e = |i| FpVec::unit(self.f, n, i);
        for i in 0..n {
            for j in i + 1..n {
                for k in j + 1..n {
                    let mut s = self.bracket(&e(i), &self.basis_bracket(j, k));
                    s.add_assign(&self.bracket(&e(j), &self.basis_bracket(k, i)));
                    s.add_assign(&self.bracket(&e(k), &self.basis_bracket(i, j)));
                    if !s.is_zero() {
                        return Err(Error::InvalidStructure(i, j, k));
                    }
                }
            }
        }
        Ok(())
    }

    pub fn is_abelian(&self) -> bool {
        self.c.iter().all(|&x| x == 0)
    }

    /// Basis of `[U, V]`.
    fn bracket_span(&self, u: &[FpVec], v: &[FpVec]) -> Vec<FpVec> {
        let mut red = Reducer::new(self.f, self.n);
        for a in u {
            for b in v {
                red.insert(self.bracket(a, b));
            }
        }
        red.rref().0
    }

    fn full(&self) -> Vec<FpVec> {
        (0..self.n).map(|i| FpVec::unit(self.f, self.n, i)).collect()
    }

    /// Dimensions of `L, [L,L], [[L,L],[L,L]], ...` down to where it stops
    /// shrinking.
    pub fn derived_series(&self) -> Vec<usize> {
        let mut cur = self.full();
        let mut dims = vec![cur.len()];
        loop {
            let next = self.bracket_span(&cur, &cur);
            if next.len() == cur.len() {
                return dims;
            }
            dims.push(next.len());
            if next.is_empty() {
                return dims;
            }
            cur = next;
        }
    }

    pub fn lower_central_series(&self) -> Vec<usize> {
        let all = self.full();
        let mut cur = all.clone();
        let mut dims = vec![cur.len()];
        loop {
            let next = self.bracket_span(&all, &cur);
            if next.len() == cur.len() {
                return dims;
            }
            dims.push(next.len());
            if next.is_empty() {
                return dims;
            }
            cur = next;
        }
    }

    pub fn is_solvable(&self) -> bool {
        self.derived_series().last() == Some(&0)
    }

    pub fn is_nilpotent(&self) -> bool {
        self.lower_central_series().last() == Some(&0)
    }

    pub fn classify_dim_le_2(&self) -> Result<LowDimClass> {
        Ok(match self.n {
            0 => LowDimClass::Zero,
            1 => LowDimClass::OneDimensional,
            2 if self.is_abelian() => LowDimClass::Abelian2,
            2 => LowDimClass::Nonabelian2,
            n => return Err(Error::DimensionTooLarge(n)),
        })
    }

    fn is_ideal(&self, basis: &[FpVec]) -> bool {
        let mut red = Reducer::new(self.f, self.n);
        for b in basis {
            red.insert(b.clone());
        }
        (0..self.n).all(|i| {
            let e = FpVec::unit(self.f, self.n, i);
            basis.iter().all(|b| red.contains(&self.bracket(&e, b)))
        })
    }

    /// Non-abelian with no proper nonzero ideal, by enumerating every
    /// subspace in reduced echelon form.
    pub fn is_simple(&self) -> Result<bool> {
        let (n, p) = (self.n, self.f.p());
        if n > SIMPLE_MAX_DIM || p > SIMPLE_MAX_PRIME {
            return Err(Error::CapExceeded { order: (p as u128).pow(n as u32), cap: 23u128.pow(4) });
        }
        if self.is_abelian() {
            return Ok(false);
        }
        if self.bracket_span(&self.full(), &self.full()).len() < n {
            return Ok(false);
        }
        for k in 1..n {
            for pivots in combinations(n, k) {
                // free entries: row r, columns after its pivot that are not pivots
                let free: Vec<(usize, usize)> = pivots
                    .iter()
                    .enumerate()
                    .flat_map(|(r, &c)| (c + 1..n).filter(|x| !pivots.contains(x)).map(move |x| (r, x)))
                    .collect();
                let total = (p as u64).pow(free.len() as u32);
                for code in 0..total {
                    let mut rows: Vec<FpVec> = pivots.iter().map(|&c| FpVec::unit(self.f, n, c)).collect();
                    let mut x = code;
                    for &(r, c) in &free {
                        rows[r].set(c, (x % p as u64) as u8);
                        x /= p as u64;
                    }
                    if self.is_ideal(&rows) {
                        return Ok(false);
                    }
                }
            }
        }
        Ok(true)
    }

    /// A one-word summary: `zero`, `abelian`, `simple`, `solvable` or
    /// `non-solvable`.
    pub fn verdict(&self) -> &'static str {
        if self.n == 0 {
            "zero"
        } else if self.is_abelian() {
            "abelian"
        } else if self.is_solvable() {
            "solvable"
        } else if self.is_simple().unwrap_or(false) {
            "simple"
        } else {
            "non-solvable"
        }
    }
}

fn combinations(n: usize, k: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let mut cur = Vec::new();
    fn rec(start: usize, n: usize, k: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == k {
            out.push(cur.clone());
            return;
        }
        for i in start..n {
            cur.push(i);
            rec(i + 1, n, k, cur, out);
            cur.pop();
        }
    }
    rec(0, n, k, &mut cur, &mut out);
    out
}
