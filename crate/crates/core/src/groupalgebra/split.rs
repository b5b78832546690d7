//! Primitive idempotents of a commutative algebra over `F_p`.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use super::center::CommAlgebra;
use crate::fplinalg::{minimal_polynomial, FpMatrix, FpPoly, FpVec, Reducer};

/// Basis of the ideal `e A`.
pub fn ideal_basis<A: CommAlgebra>(a: &A, e: &FpVec) -> Vec<FpVec> {
    let mut r = Reducer::new(a.field(), a.dim());
    for i in 0..a.dim() {
        r.insert(a.mul(e, &a.basis(i)));
    }
    r.rref().0
}

/// Matrix of multiplication by `z` on the subspace spanned by `basis`
/// (which must be stable under it).
pub fn restricted_mult<A: CommAlgebra>(a: &A, z: &FpVec, basis: &[FpVec]) -> FpMatrix {
    let f = a.field();
    let mut r = Reducer::new(f, a.dim());
    for b in basis {
        r.insert(b.clone());
    }
    // basis is in RREF, so coordinates against the reducer rows are direct
    let m = basis.len();
    let cols: Vec<FpVec> = basis
        .iter()
        .map(|b| {
            let c = r.coordinates(&a.mul(z, b)).expect("subspace is stable");
            FpVec::from_slice(f, &c)
        })
        .collect();
    FpMatrix::from_cols(f, m, &cols)
}

/// Number of local components: the dimension of the fixed space of `x -> x^p`.
pub fn component_count<A: CommAlgebra>(a: &A) -> usize {
    let f = a.field();
    let n = a.dim();
    let cols: Vec<FpVec> = (0..n)
        .map(|i| {
            let mut fr = frob(a, &a.basis(i));
            fr.sub_assign(&a.basis(i));
            fr
        })
        .collect();
    let m = FpMatrix::from_cols(f, n, &cols);
    n - m.rank()
}

pub fn frob<A: CommAlgebra>(a: &A, x: &FpVec) -> FpVec {
    let mut acc = a.one();
    let mut base = x.clone();
    let mut e = a.field().p();
    while e > 0 {
        if e & 1 == 1 {
            acc = a.mul(&acc, &base);
        }
        base = a.mul(&base, &base);
        e >>= 1;
    }
    acc
}

/// Degree of the residue field of the local algebra `e A`: the rank of a
/// high power of Frobenius on it.
pub fn residue_degree<A: CommAlgebra>(a: &A, e: &FpVec) -> usize {
    let basis = ideal_basis(a, e);
    let f = a.field();
    let m = basis.len();
    let imgs: Vec<FpVec> = basis.iter().map(|b| frob(a, b)).collect();
    let mut r = Reducer::new(f, a.dim());
    for b in &basis {
        r.insert(b.clone());
    }
    let cols: Vec<FpVec> = imgs.iter().map(|v| FpVec::from_slice(f, &r.coordinates(v).unwrap())).collect();
    let fm = FpMatrix::from_cols(f, m, &cols);
    let mut n = 1u64;
    let mut pk = f.p() as usize;
    while pk < m {
        pk *= f.p() as usize;
        n += 1;
    }
    fm.pow(n).rank()
}

/// Evaluate a polynomial at `z` inside `e A`, where `e` is the identity.
fn eval_in<A: CommAlgebra>(a: &A, poly: &FpPoly, z: &FpVec, e: &FpVec) -> FpVec {
    let mut acc = FpVec::zero(a.field(), a.dim());
    for &c in poly.coeffs().iter().rev() {
        acc = a.mul(&acc, z);
        acc.axpy(c, e);
    }
    acc
}

/// Split `e` along the factors of the minimal polynomial of `z e` on `e A`.
fn split_by<A: CommAlgebra>(a: &A, e: &FpVec, z: &FpVec, seed: u64) -> Vec<FpVec> {
    let basis = ideal_basis(a, e);
    let w = a.mul(z, e);
    let mu = minimal_polynomial(&restricted_mult(a, &w, &basis));
    let factors = mu.factor(seed);
    if factors.len() <= 1 {
        return vec![e.clone()];
    }
    let f = a.field();
    factors
        .iter()
        .map(|(g, k)| {
            let mut q = FpPoly::one(f);
            for _ in 0..*k {
                q = q.mul(g);
            }
            let rest = mu.div_exact(&q);
            // s q + t rest = 1, so t rest is 1 mod q and 0 mod rest
            let (_, _, t) = q.xgcd(&rest);
            let idem = t.mul(&rest).rem(&mu);
            eval_in(a, &idem, &w, e)
        })
        .collect()
}

/// A complete set of primitive orthogonal idempotents. Class-sum basis
/// elements are tried first, then seeded random combinations.
pub fn primitive_idempotents<A: CommAlgebra>(a: &A, seed: u64) -> Vec<FpVec> {
    let target = component_count(a);
    let mut comps = vec![a.one()];
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let f = a.field();
    let mut round = 0usize;
    while comps.len() < target {
        let z = if round < a.dim() {
            a.basis(round)
        } else {
            let v: Vec<u8> = (0..a.dim()).map(|_| rng.gen_range(0..f.p()) as u8).collect();
            FpVec::from_slice(f, &v)
        };
        round += 1;
        let mut next = Vec::new();
        for e in &comps {
            next.extend(split_by(a, e, &z, seed.wrapping_add(round as u64)));
        }
        comps = next;
    }
    comps
}
