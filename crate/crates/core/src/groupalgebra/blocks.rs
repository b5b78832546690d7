use serde::Serialize;

use super::center::{CenterTable, CommAlgebra};
use super::split::{ideal_basis, primitive_idempotents, residue_degree};
use crate::error::Result;
use crate::fplinalg::{FpMatrix, FpVec};
use crate::permgroup::{p_valuation, PermGroup, Subgroup};

/// One primitive central idempotent of `F_p G`.
#[derive(Clone, Debug, Serialize)]
pub struct BlockRecord {
    pub index: usize,
    /// Coefficients on the class sums.
    #[serde(skip)]
    pub idempotent: FpVec,
    pub fp_dimension: u128,
    /// Degree of the residue field; the number of Galois-conjugate blocks
    /// over the algebraic closure that this record stands for.
    pub residue_degree: usize,
    pub principal: bool,
    pub defect_exponent: u32,
    /// A class in the support of the idempotent whose centraliser has
    /// maximal p-part; a Sylow subgroup of that centraliser is a defect group.
    pub defect_class: usize,
    /// Number of simple modules of each k-block.
    pub simples: usize,
    /// Dimension of the centre of each k-block.
    pub center_dim: usize,
}

impl BlockRecord {
    pub fn k_block_count(&self) -> usize {
        self.residue_degree
    }

    /// Dimension of each k-block.
    pub fn k_dimension(&self) -> u128 {
        self.fp_dimension / self.residue_degree as u128
    }
}

#[derive(Clone, Debug)]
pub struct BlockDecomposition {
    pub p: u32,
    pub center: CenterTable,
    /// Principal block first, then by decreasing defect.
    pub blocks: Vec<BlockRecord>,
}

impl BlockDecomposition {
    pub fn principal(&self) -> &BlockRecord {
        &self.blocks[0]
    }

    pub fn fp_block_count(&self) -> usize {
        self.blocks.len()
    }

    pub fn k_block_count(&self) -> usize {
        self.blocks.iter().map(|b| b.residue_degree).sum()
    }

    /// Defect exponents of the k-blocks, in block order.
    pub fn k_defects(&self) -> Vec<u32> {
        self.blocks
            .iter()
            .flat_map(|b| std::iter::repeat_n(b.defect_exponent, b.residue_degree))
            .collect()
    }
}

pub const DEFAULT_SEED: u64 = 0x6b6c;

/// Complete set of blocks of `F_p G`.
pub fn block_idempotents(g: &PermGroup, p: u32, seed: u64) -> Result<BlockDecomposition> {
    let center = CenterTable::build(g, p)?;
    let idems = primitive_idempotents(&center, seed);
    let cls = g.classes()?;
    let order = g.order();
    let a = p_valuation(order, p);
    let sections = section_sums(g, &center, p)?;
    let f = center.field();
    let mut blocks: Vec<BlockRecord> = idems
        .into_iter()
        .map(|e| {
            let d = residue_degree(&center, &e);
            let support = e.support();
            let (defect_class, defect_exponent) = support
                .iter()
                .map(|&c| (c, a - p_valuation(cls.size(c) as u128, p)))
                .max_by_key(|&(c, v)| (v, std::cmp::Reverse(c)))
                .expect("idempotents are nonzero");
            let ez = ideal_basis(&center, &e);
            let reynolds = FpMatrix::from_rows(f, center.dim(), sections.iter().map(|s| center.mul(s, &e)).collect());
            let r = reynolds.rank();
            BlockRecord {
                index: 0,
                fp_dimension: fp_dimension(&center, &e, order, p),
                residue_degree: d,
                principal: center.augmentation(&e) == 1,
                defect_exponent,
                defect_class,
                simples: r / d,
                center_dim: ez.len() / d,
                idempotent: e,
            }
        })
        .collect();
    blocks.sort_by(|x, y| {
        (y.principal, y.defect_exponent, y.fp_dimension, x.idempotent.to_vec())
            .cmp(&(x.principal, x.defect_exponent, x.fp_dimension, y.idempotent.to_vec()))
    });
    for (i, b) in blocks.iter_mut().enumerate() {
        b.index = i;
    }
    Ok(BlockDecomposition { p, center, blocks })
}

/// Sums of the p-sections of the p-regular classes, in class-sum coordinates.
/// They span the Reynolds ideal, whose intersection with a block has
/// dimension equal to the number of simple modules of that block.
pub fn section_sums(g: &PermGroup, z: &CenterTable, p: u32) -> Result<Vec<FpVec>> {
    let cls = g.classes()?;
    let k = cls.count();
    let f = z.field();
    let mut regular_part = vec![0usize; k];
    for c in 0..k {
        let x = g.element(cls.reps[c]);
        let o = cls.elem_orders[c];
        let mut pa = 1u64;
        while o % (pa * p as u64) == 0 {
            pa *= p as u64;
        }
        let m = o / pa;
        // u = 0 mod p^a, u = 1 mod m
        let u = if m == 1 { 0 } else { pa * modinv(pa % m, m) % (pa * m) };
        regular_part[c] = g.class_of(&x.pow(u))?;
    }
    let regular: Vec<usize> = (0..k).filter(|&c| cls.elem_orders[c] % p as u64 != 0).collect();
    Ok(regular
        .iter()
        .map(|&r| {
            let mut v = FpVec::zero(f, k);
            for c in 0..k {
                if regular_part[c] == r {
                    v.set(c, 1);
                }
            }
            v
        })
        .collect())
}

fn modinv(a: u64, m: u64) -> u64 {
    let (mut t, mut nt, mut r, mut nr) = (0i128, 1i128, m as i128, a as i128);
    while nr != 0 {
        let q = r / nr;
        (t, nt) = (nt, t - q * nt);
        (r, nr) = (nr, r - q * nr);
    }
    assert_eq!(r, 1, "not invertible");
    t.rem_euclid(m as i128) as u64
}

/// `dim_{F_p} e F_p G`, read off from the p-adic lift of `e` to an
/// idempotent over `Z / p^N` with `p^N > |G|`: the dimension is `|G|`
/// times the identity coefficient of the lift.
pub fn fp_dimension(z: &CenterTable, e: &FpVec, order: u128, p: u32) -> u128 {
    let p = p as u128;
    let mut m = p;
    let mut n = 1;
    while m <= order {
        m *= p;
        n += 1;
    }
    let mut x: Vec<u128> = e.to_vec().into_iter().map(|c| c as u128).collect();
    let mut prec = 1;
    while prec < n {
        let x2 = z.mul_mod(&x, &x, m);
        let x3 = z.mul_mod(&x2, &x, m);
        x = x2.iter().zip(&x3).map(|(&a, &b)| (3 * a % m + m * 2 - 2 * b % m) % m).collect();
        prec *= 2;
    }
    debug_assert_eq!(z.mul_mod(&x, &x, m), x);
    order * x[0] % m
}

impl PermGroup {
    /// A defect group of a block: a Sylow subgroup of the centraliser of its defect class.
    pub fn defect_group(&self, block: &BlockRecord, p: u32) -> Result<Subgroup> {
        let cls = self.classes()?;
        let x = self.element(cls.reps[block.defect_class]);
        let c = self.centralizer(&x)?;
        let cg = c.as_group(self);
        let s = cg.sylow(p)?;
        self.subgroup(&s.generator_perms(&cg))
    }
}

/// Check the idempotent axioms: orthogonal, idempotent, summing to 1.
pub fn check_idempotents(z: &CenterTable, blocks: &[BlockRecord]) -> bool {
    let mut sum = FpVec::zero(z.field(), z.dim());
    for (i, a) in blocks.iter().enumerate() {
        if z.mul(&a.idempotent, &a.idempotent) != a.idempotent {
            return false;
        }
        for b in &blocks[i + 1..] {
            if !z.mul(&a.idempotent, &b.idempotent).is_zero() {
                return false;
            }
        }
        sum.add_assign(&a.idempotent);
    }
    sum == CommAlgebra::one(z)
}
