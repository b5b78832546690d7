use super::algebra::AlgebraPresentation;
use super::center::CommAlgebra;
use super::split::{primitive_idempotents, residue_degree};
use crate::error::{Error, Result};
use crate::fplinalg::{Fp, FpMatrix, FpVec, Reducer};

/// Largest dimension accepted by [`radical_and_semisimple`].
pub const RADICAL_CAP: usize = 64;

#[derive(Clone, Debug)]
pub struct RadicalData {
    pub radical: Vec<FpVec>,
    pub components: usize,
    pub residue_degrees: Vec<usize>,
    /// Number of simple modules over the algebraic closure.
    pub simples: usize,
}

/// Jacobson radical by the trace-lift method: with `I_{-1} = A`,
/// `I_i = {x in I_{i-1} : g_i(x y) = 0 for all y}` where `g_i(z)` is the
/// trace of the `p^i`-th power of an integer lift of `L_z`, divided by `p^i`,
/// read mod `p`. Then `J(A) = I_l` for `p^l <= dim A < p^(l+1)`.
pub fn radical(a: &AlgebraPresentation) -> Result<Vec<FpVec>> {
    let d = a.dim();
    if d > RADICAL_CAP {
        return Err(Error::CapExceeded { order: d as u128, cap: RADICAL_CAP as u128 });
    }
    let f = a.field();
    let p = f.p() as u64;
    let mut l = 0;
    while p.pow(l + 1) <= d as u64 {
        l += 1;
    }
    let mut ideal: Vec<FpVec> = (0..d).map(|i| a.basis(i)).collect();
    for i in 0..=l {
        if ideal.is_empty() {
            break;
        }
        let modulus = p.pow(i + 1);
        let pi = p.pow(i);
        // rows: basis elements of the current ideal; columns: y
        let m = FpMatrix::from_rows(
            f,
            d,
            ideal
                .iter()
                .map(|b| {
                    let v: Vec<u8> = (0..d)
                        .map(|y| {
                            let z = a.mul(b, &a.basis(y));
                            let t = lifted_trace_power(&a.left_matrix(&z), pi, modulus);
                            debug_assert_eq!(t % pi, 0);
                            ((t / pi) % p) as u8
                        })
                        .collect();
                    FpVec::from_slice(f, &v)
                })
                .collect(),
        );
        // combinations c of ideal rows with c^T M = 0
        let ker = m.transpose().kernel_basis();
        let mut red = Reducer::new(f, d);
        for c in ker {
            let mut v = FpVec::zero(f, d);
            for k in c.support() {
                v.axpy(c.get(k), &ideal[k]);
            }
            red.insert(v);
        }
        ideal = red.rref().0;
    }
    Ok(ideal)
}

fn lifted_trace_power(m: &FpMatrix, e: u64, modulus: u64) -> u64 {
    let n = m.nrows();
    let lift: Vec<u64> = (0..n * n).map(|k| m.get(k / n, k % n) as u64).collect();
    let matmul = |a: &[u64], b: &[u64]| -> Vec<u64> {
        let mut c = vec![0u64; n * n];
        for i in 0..n {
            for k in 0..n {
                let x = a[i * n + k];
                if x == 0 {
                    continue;
                }
                for j in 0..n {
                    c[i * n + j] = (c[i * n + j] + x * b[k * n + j]) % modulus;
                }
            }
        }
        c
    };
    let mut acc: Vec<u64> = (0..n * n).map(|k| (k / n == k % n) as u64).collect();
    let mut base = lift;
    let mut e = e;
    while e > 0 {
        if e & 1 == 1 {
            acc = matmul(&acc, &base);
        }
        base = matmul(&base, &base);
        e >>= 1;
    }
    (0..n).map(|i| acc[i * n + i]).sum::<u64>() % modulus
}

/// The centre of a quotient `A / J`, as a commutative algebra on a basis of its own.
struct QuotientCentre {
    f: Fp,
    /// Basis of `Z(A/J)` in quotient coordinates.
    basis: Vec<FpVec>,
    /// Products of basis elements in the same basis.
    table: Vec<FpVec>,
    one: FpVec,
}

impl CommAlgebra for QuotientCentre {
    fn field(&self) -> Fp {
        self.f
    }
    fn dim(&self) -> usize {
        self.basis.len()
    }
    fn one(&self) -> FpVec {
        self.one.clone()
    }
    fn mul(&self, a: &FpVec, b: &FpVec) -> FpVec {
        let m = self.basis.len();
        let mut out = FpVec::zero(self.f, m);
        for i in a.support() {
            for j in b.support() {
                out.axpy(self.f.mul(a.get(i), b.get(j)), &self.table[i * m + j]);
            }
        }
        out
    }
}

pub fn radical_and_semisimple(a: &AlgebraPresentation) -> Result<RadicalData> {
    let j = radical(a)?;
    let f = a.field();
    let d = a.dim();
    let mut jr = Reducer::new(f, d);
    for v in &j {
        jr.insert(v.clone());
    }
    let (_, jp) = jr.rref();
    let free: Vec<usize> = (0..d).filter(|c| !jp.contains(c)).collect();
    let q = free.len();
    let project = |v: &FpVec| -> FpVec {
        let mut w = v.clone();
        jr.reduce(&mut w);
        FpVec::from_slice(f, &free.iter().map(|&c| w.get(c)).collect::<Vec<_>>())
    };
    let lift = |u: &FpVec| -> FpVec {
        let mut v = FpVec::zero(f, d);
        for k in u.support() {
            v.set(free[k], u.get(k));
        }
        v
    };
    // centre of A/J: u with [lift u, s] in J for each generator s
    let mut cr = Reducer::new(f, q);
    let gens_q = &a.generators;
    let cols: Vec<Vec<FpVec>> = (0..q)
        .map(|k| {
            let x = lift(&FpVec::unit(f, q, k));
            gens_q
                .iter()
                .map(|s| {
                    let mut c = a.mul(&x, s);
                    c.sub_assign(&a.mul(s, &x));
                    project(&c)
                })
                .collect()
        })
        .collect();
    for (gi, _) in gens_q.iter().enumerate() {
        for row in 0..q {
            let v: Vec<u8> = (0..q).map(|k| cols[k][gi].get(row)).collect();
            cr.insert(FpVec::from_slice(f, &v));
        }
    }
    let zbasis = cr.kernel_basis();
    let m = zbasis.len();
    let coord = |u: &FpVec| -> FpVec { FpVec::from_slice(f, &solve_in(&zbasis, u, f)) };
    let mut table = Vec::with_capacity(m * m);
    for x in &zbasis {
        for y in &zbasis {
            table.push(coord(&project(&a.mul(&lift(x), &lift(y)))));
        }
    }
    let one = coord(&project(&a.one));
    let zc = QuotientCentre { f, basis: zbasis.clone(), table, one };
    let idems = primitive_idempotents(&zc, 1);
    let residue_degrees: Vec<usize> = idems.iter().map(|e| residue_degree(&zc, e)).collect();
    Ok(RadicalData { radical: j, components: idems.len(), simples: residue_degrees.iter().sum(), residue_degrees })
}

fn solve_in(basis: &[FpVec], u: &FpVec, f: Fp) -> Vec<u8> {
    let m = FpMatrix::from_cols(f, u.len(), basis);
    m.solve(u).unwrap().expect("element lies in the span").to_vec()
}
