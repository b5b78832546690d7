use crate::error::Result;
use crate::fplinalg::{Fp, FpMatrix, FpVec};
use crate::permgroup::PermGroup;

/// The class-sum basis of `Z(F_p G)` with integer structure constants
/// `a[i][j][l] = #{(x, y) in C_i x C_j : x y = z_l}`.
#[derive(Clone, Debug)]
pub struct CenterTable {
    f: Fp,
    k: usize,
    counts: Vec<u64>,
    pub class_sizes: Vec<usize>,
    pub group_order: u128,
}

impl CenterTable {
    pub fn build(g: &PermGroup, p: u32) -> Result<CenterTable> {
        let f = Fp::new(p)?;
        let t = g.elements()?;
        let cls = g.classes()?;
        let k = cls.count();
        let n = t.len();
        let deg = g.degree();
        let mut counts = vec![0u64; k * k * k];
        for l in 0..k {
            let z = t.get(cls.reps[l] as usize).to_vec();
            let acc = crate::par::fold_chunks(
                n,
                || (vec![0u64; k * k], vec![0u8; deg], vec![0u8; deg]),
                |(acc, inv, y), xi| {
                    // y = x^-1 z
                    crate::perm::invert_into(t.get(xi), inv);
                    crate::perm::compose_into(inv, &z, y);
                    let yi = t.index_of(y).expect("closed group") as u32;
                    acc[cls.class_of(xi as u32) * k + cls.class_of(yi)] += 1;
                },
                |mut a, b| {
                    for (x, y) in a.0.iter_mut().zip(&b.0) {
                        *x += y;
                    }
                    a
                },
            );
            for i in 0..k {
                for j in 0..k {
                    counts[(i * k + j) * k + l] = acc.0[i * k + j];
                }
            }
        }
        Ok(CenterTable { f, k, counts, class_sizes: cls.sizes(), group_order: g.order() })
    }

    pub fn field(&self) -> Fp {
        self.f
    }

    pub fn dim(&self) -> usize {
        self.k
    }

    #[inline]
    pub fn count(&self, i: usize, j: usize, l: usize) -> u64 {
        self.counts[(i * self.k + j) * self.k + l]
    }

    /// Structure constant reduced mod `p`.
    #[inline]
    pub fn a(&self, i: usize, j: usize, l: usize) -> u8 {
        self.f.from_u64(self.count(i, j, l))
    }

    pub fn one(&self) -> FpVec {
        FpVec::unit(self.f, self.k, 0)
    }

    pub fn class_sum(&self, i: usize) -> FpVec {
        FpVec::unit(self.f, self.k, i)
    }

    pub fn mul(&self, a: &FpVec, b: &FpVec) -> FpVec {
        let k = self.k;
        let p = self.f.p() as u64;
        let mut acc = vec![0u64; k];
        for i in a.support() {
            let ai = a.get(i) as u64;
            for j in b.support() {
                let c = ai * b.get(j) as u64 % p;
                let base = (i * k + j) * k;
                for (l, x) in acc.iter_mut().enumerate() {
                    *x += c * (self.counts[base + l] % p);
                }
            }
        }
        let v: Vec<u8> = acc.into_iter().map(|x| (x % p) as u8).collect();
        FpVec::from_slice(self.f, &v)
    }

    /// Product of integer lifts modulo `m`.
    pub fn mul_mod(&self, a: &[u128], b: &[u128], m: u128) -> Vec<u128> {
        let k = self.k;
        let mut acc = vec![0u128; k];
        for i in 0..k {
            if a[i] == 0 {
                continue;
            }
            for j in 0..k {
                if b[j] == 0 {
                    continue;
                }
                let c = a[i] * b[j] % m;
                let base = (i * k + j) * k;
                for (l, x) in acc.iter_mut().enumerate() {
                    let n = self.counts[base + l] as u128;
                    if n != 0 {
                        *x = (*x + c * (n % m)) % m;
                    }
                }
            }
        }
        acc
    }

    /// Matrix of multiplication by `a`: column `j` is `a * C_j`.
    pub fn mult_matrix(&self, a: &FpVec) -> FpMatrix {
        let cols: Vec<FpVec> = (0..self.k).map(|j| self.mul(a, &self.class_sum(j))).collect();
        FpMatrix::from_cols(self.f, self.k, &cols)
    }

    pub fn pow(&self, a: &FpVec, mut e: u64) -> FpVec {
        let mut base = a.clone();
        let mut acc = self.one();
        while e > 0 {
            if e & 1 == 1 {
                acc = self.mul(&acc, &base);
            }
            base = self.mul(&base, &base);
            e >>= 1;
        }
        acc
    }

    /// Sum of coefficients times class sizes: the image under the trivial representation.
    pub fn augmentation(&self, a: &FpVec) -> u8 {
        let mut s = 0u8;
        for i in a.support() {
            s = self.f.add(s, self.f.mul(a.get(i), self.f.from_u64(self.class_sizes[i] as u64)));
        }
        s
    }
}

/// A commutative algebra with a distinguished basis, enough for splitting idempotents.
pub trait CommAlgebra {
    fn field(&self) -> Fp;
    fn dim(&self) -> usize;
    fn one(&self) -> FpVec;
    fn mul(&self, a: &FpVec, b: &FpVec) -> FpVec;
    fn basis(&self, i: usize) -> FpVec {
        FpVec::unit(self.field(), self.dim(), i)
    }
}

impl CommAlgebra for CenterTable {
    fn field(&self) -> Fp {
        self.f
    }
    fn dim(&self) -> usize {
        self.k
    }
    fn one(&self) -> FpVec {
        CenterTable::one(self)
    }
    fn mul(&self, a: &FpVec, b: &FpVec) -> FpVec {
        CenterTable::mul(self, a, b)
    }
}
