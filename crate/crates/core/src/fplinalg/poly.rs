use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use super::field::Fp;
use super::matrix::FpMatrix;
use super::vec::FpVec;

/// Univariate polynomial over `F_p`, coefficients from degree 0 upward,
/// trailing zeros trimmed.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct FpPoly {
    f: Fp,
    c: Vec<u8>,
}

impl FpPoly {
    pub fn new(f: Fp, mut c: Vec<u8>) -> FpPoly {
        for x in c.iter_mut() {
            *x = f.from_u64(*x as u64);
        }
        while c.last() == Some(&0) {
            c.pop();
        }
        FpPoly { f, c }
    }

    pub fn zero(f: Fp) -> FpPoly {
        FpPoly { f, c: Vec::new() }
    }

    pub fn one(f: Fp) -> FpPoly {
        FpPoly { f, c: vec![1] }
    }

    /// `X - a`.
    pub fn linear(f: Fp, a: u8) -> FpPoly {
        FpPoly::new(f, vec![f.neg(a), 1])
    }

    pub fn x(f: Fp) -> FpPoly {
        FpPoly { f, c: vec![0, 1] }
    }

    pub fn field(&self) -> Fp {
        self.f
    }

    pub fn coeffs(&self) -> &[u8] {
        &self.c
    }

    pub fn is_zero(&self) -> bool {
        self.c.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.c == [1]
    }

    /// Degree; `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.c.len().checked_sub(1)
    }

    pub fn lead(&self) -> u8 {
        *self.c.last().unwrap_or(&0)
    }

    pub fn monic(&self) -> FpPoly {
        if self.is_zero() {
            return self.clone();
        }
        self.scale(self.f.inv(self.lead()))
    }

    pub fn scale(&self, a: u8) -> FpPoly {
        FpPoly::new(self.f, self.c.iter().map(|&x| self.f.mul(x, a)).collect())
    }

    pub fn add(&self, o: &FpPoly) -> FpPoly {
        let n = self.c.len().max(o.c.len());
        let c = (0..n)
            .map(|i| self.f.add(*self.c.get(i).unwrap_or(&0), *o.c.get(i).unwrap_or(&0)))
            .collect();
        FpPoly::new(self.f, c)
    }

    pub fn sub(&self, o: &FpPoly) -> FpPoly {
        self.add(&o.scale(self.f.neg(1)))
    }

    pub fn mul(&self, o: &FpPoly) -> FpPoly {
        if self.is_zero() || o.is_zero() {
            return FpPoly::zero(self.f);
        }
        let p = self.f.p() as u64;
        let mut acc = vec![0u64; self.c.len() + o.c.len() - 1];
        for (i, &a) in self.c.iter().enumerate() {
            for (j, &b) in o.c.iter().enumerate() {
                acc[i + j] += a as u64 * b as u64;
            }
        }
        FpPoly::new(self.f, acc.into_iter().map(|x| (x % p) as u8).collect())
    }

    pub fn divrem(&self, d: &FpPoly) -> (FpPoly, FpPoly) {
        assert!(!d.is_zero(), "division by zero polynomial");
        let f = self.f;
        let mut r = self.c.clone();
        let dd = d.c.len() - 1;
        if r.len() <= dd {
            return (FpPoly::zero(f), self.clone());
        }
        let li = f.inv(d.lead());
        let mut q = vec![0u8; r.len() - dd];
        for k in (0..q.len()).rev() {
            let t = f.mul(r[k + dd], li);
            q[k] = t;
            if t != 0 {
                for (j, &b) in d.c.iter().enumerate() {
                    r[k + j] = f.sub(r[k + j], f.mul(t, b));
                }
            }
        }
        r.truncate(dd);
        (FpPoly::new(f, q), FpPoly::new(f, r))
    }

    pub fn rem(&self, d: &FpPoly) -> FpPoly {
        self.divrem(d).1
    }

    pub fn div_exact(&self, d: &FpPoly) -> FpPoly {
        let (q, r) = self.divrem(d);
        assert!(r.is_zero(), "inexact division");
        q
    }

    /// Monic gcd.
    pub fn gcd(&self, o: &FpPoly) -> FpPoly {
        let (mut a, mut b) = (self.clone(), o.clone());
        while !b.is_zero() {
            let r = a.rem(&b);
            a = b;
            b = r;
        }
        a.monic()
    }

    /// `(g, s, t)` with `s a + t b = g` monic.
    pub fn xgcd(&self, o: &FpPoly) -> (FpPoly, FpPoly, FpPoly) {
        let f = self.f;
        let (mut r0, mut r1) = (self.clone(), o.clone());
        let (mut s0, mut s1) = (FpPoly::one(f), FpPoly::zero(f));
        let (mut t0, mut t1) = (FpPoly::zero(f), FpPoly::one(f));
        while !r1.is_zero() {
            let (q, r) = r0.divrem(&r1);
            r0 = std::mem::replace(&mut r1, r);
            let s2 = s0.sub(&q.mul(&s1));
            s0 = std::mem::replace(&mut s1, s2);
            let t2 = t0.sub(&q.mul(&t1));
            t0 = std::mem::replace(&mut t1, t2);
        }
        let li = f.inv(r0.lead());
        (r0.scale(li), s0.scale(li), t0.scale(li))
    }

    pub fn derivative(&self) -> FpPoly {
        let c = self.c.iter().enumerate().skip(1).map(|(i, &a)| self.f.mul(a, self.f.from_u64(i as u64))).collect();
        FpPoly::new(self.f, c)
    }

    pub fn mulmod(&self, o: &FpPoly, m: &FpPoly) -> FpPoly {
        self.mul(o).rem(m)
    }

    pub fn powmod(&self, mut e: u128, m: &FpPoly) -> FpPoly {
        let mut base = self.rem(m);
        let mut acc = FpPoly::one(self.f).rem(m);
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.mulmod(&base, m);
            }
            base = base.mulmod(&base, m);
            e >>= 1;
        }
        acc
    }

    pub fn eval(&self, x: u8) -> u8 {
        self.c.iter().rev().fold(0, |acc, &a| self.f.add(self.f.mul(acc, x), a))
    }

    /// Evaluate at a square matrix.
    pub fn eval_matrix(&self, m: &FpMatrix) -> FpMatrix {
        let n = m.nrows();
        let mut acc = FpMatrix::zero(self.f, n, n);
        for &a in self.c.iter().rev() {
            acc = acc.mul(m).add(&FpMatrix::identity(self.f, n).scale(a));
        }
        acc
    }

    /// For `f(X) = g(X^p)`, return `g`; only valid when `f' = 0`.
    fn pth_root(&self) -> FpPoly {
        // coefficients are in F_p, where Frobenius is the identity
        let p = self.f.p() as usize;
        FpPoly::new(self.f, self.c.iter().step_by(p).copied().collect())
    }

    /// Squarefree decomposition: `(g, k)` with `self = lead * prod g^k`.
    pub fn squarefree(&self) -> Vec<(FpPoly, u32)> {
        let f = self.monic();
        let mut out = Vec::new();
        sqf_rec(&f, 1, &mut out);
        out.sort_by(|a, b| (a.1, &a.0.c).cmp(&(b.1, &b.0.c)));
        out
    }

    /// Complete factorisation into monic irreducibles with multiplicities,
    /// sorted by degree then coefficients. `seed` drives equal-degree splitting.
    pub fn factor(&self, seed: u64) -> Vec<(FpPoly, u32)> {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let mut out: Vec<(FpPoly, u32)> = Vec::new();
        for (g, k) in self.squarefree() {
            for (h, d) in distinct_degree(&g) {
                for irr in equal_degree(&h, d, &mut rng) {
                    out.push((irr, k));
                }
            }
        }
        out.sort_by(|a, b| (a.0.c.len(), &a.0.c, a.1).cmp(&(b.0.c.len(), &b.0.c, b.1)));
        out
    }

    pub fn is_irreducible(&self) -> bool {
        match self.degree() {
            None | Some(0) => false,
            _ => {
                let fs = self.factor(0);
                fs.len() == 1 && fs[0].1 == 1
            }
        }
    }
}

fn sqf_rec(f: &FpPoly, mult: u32, out: &mut Vec<(FpPoly, u32)>) {
    if f.degree().unwrap_or(0) == 0 {
        return;
    }
    let p = f.f.p();
    let d = f.derivative();
    if d.is_zero() {
        sqf_rec(&f.pth_root(), mult * p, out);
        return;
    }
    // Yun-style over characteristic p
    let mut c = f.gcd(&d);
    let mut w = f.div_exact(&c);
    let mut i = 1;
    while !w.is_one() {
        let y = w.gcd(&c);
        let z = w.div_exact(&y);
        if !z.is_one() {
            out.push((z, i * mult));
        }
        w = y;
        c = c.div_exact(&w);
        i += 1;
    }
    if !c.is_one() {
        sqf_rec(&c.pth_root(), mult * p, out);
    }
}

/// Split a squarefree monic polynomial into products of irreducibles of equal degree.
fn distinct_degree(f: &FpPoly) -> Vec<(FpPoly, usize)> {
    let fp = f.f;
    let p = fp.p() as u128;
    let mut out = Vec::new();
    let mut rest = f.clone();
    let mut h = FpPoly::x(fp).rem(&rest);
    let mut d = 0;
    while rest.degree().unwrap_or(0) > 0 {
        d += 1;
        if 2 * d > rest.degree().unwrap() {
            out.push((rest.clone(), rest.degree().unwrap()));
            break;
        }
        h = h.powmod(p, &rest);
        let g = rest.gcd(&h.sub(&FpPoly::x(fp)));
        if !g.is_one() {
            rest = rest.div_exact(&g);
            h = h.rem(&rest);
            out.push((g, d));
        }
    }
    out
}

fn equal_degree(f: &FpPoly, d: usize, rng: &mut ChaCha8Rng) -> Vec<FpPoly> {
    let n = f.degree().unwrap();
    if n == d {
        return vec![f.clone()];
    }
    let fp = f.f;
    let p = fp.p();
    loop {
        let a = FpPoly::new(fp, (0..n).map(|_| rng.gen_range(0..p) as u8).collect());
        if a.degree().unwrap_or(0) == 0 {
            continue;
        }
        let b = if p == 2 {
            // trace map a + a^2 + ... + a^(2^(d-1))
            let mut t = a.rem(f);
            let mut s = t.clone();
            for _ in 1..d {
                t = t.mulmod(&t, f);
                s = s.add(&t);
            }
            s
        } else {
            let e = ((p as u128).pow(d as u32) - 1) / 2;
            a.powmod(e, f).sub(&FpPoly::one(fp))
        };
        let g = f.gcd(&b);
        if !g.is_one() && g.degree() != f.degree() {
            let h = f.div_exact(&g);
            let mut out = equal_degree(&g, d, rng);
            out.extend(equal_degree(&h, d, rng));
            return out;
        }
    }
}

/// Minimal polynomial of a square matrix, from the first linear dependency
/// among `I, M, M^2, ...`.
pub fn minimal_polynomial(m: &FpMatrix) -> FpPoly {
    let f = m.field();
    let n = m.nrows();
    assert_eq!(n, m.ncols(), "minimal polynomial of a non-square matrix");
    // rows: reduced flattened powers; alongside, their expression in powers
    let mut basis: Vec<(FpVec, usize, Vec<u8>)> = Vec::new();
    let mut power = FpMatrix::identity(f, n);
    for k in 0..=n {
        let mut v = power.flatten();
        let mut comb = vec![0u8; n + 2];
        comb[k] = 1;
        for (b, piv, bc) in &basis {
            let x = v.get(*piv);
            if x != 0 {
                let c = f.neg(x);
                v.axpy(c, b);
                for (t, &y) in comb.iter_mut().zip(bc) {
                    *t = f.add(*t, f.mul(c, y));
                }
            }
        }
        match v.first_nonzero() {
            None => return FpPoly::new(f, comb).monic(),
            Some(piv) => {
                let inv = f.inv(v.get(piv));
                v.scale(inv);
                let comb: Vec<u8> = comb.iter().map(|&y| f.mul(y, inv)).collect();
                basis.push((v, piv, comb));
            }
        }
        power = power.mul(m);
    }
    unreachable!("Cayley-Hamilton bounds the degree");
}

#[cfg(test)]
mod tests {
    use super::*;

    fn poly(p: u32, c: &[i64]) -> FpPoly {
        let f = Fp::new(p).unwrap();
        FpPoly::new(f, c.iter().map(|&x| f.from_i64(x)).collect())
    }

    #[test]
    fn small_factorisations() {
        let fs = poly(3, &[-1, 0, 1]).factor(1);
        assert_eq!(fs, vec![(poly(3, &[1, 1]), 1), (poly(3, &[2, 1]), 1)]);
        assert!(poly(2, &[1, 1, 1]).is_irreducible());
        let fs = poly(5, &[0, -1, 0, 1]).factor(7);
        assert_eq!(fs.len(), 3);
        assert!(fs.iter().all(|(g, k)| g.degree() == Some(1) && *k == 1));
    }

    #[test]
    fn powers_of_p_and_repeated_factors() {
        // (X+1)^2 (X^2+X+1)^3 over F_2
        let a = poly(2, &[1, 1]);
        let b = poly(2, &[1, 1, 1]);
        let f = a.mul(&a).mul(&b).mul(&b).mul(&b);
        assert_eq!(f.factor(3), vec![(a, 2), (b, 3)]);
    }

    #[test]
    fn minpoly_examples() {
        let f = Fp::new(3).unwrap();
        assert_eq!(minimal_polynomial(&FpMatrix::identity(f, 3)), FpPoly::linear(f, 1));
        let j = FpMatrix::from_u8(f, &[vec![0, 1], vec![0, 0]]);
        assert_eq!(minimal_polynomial(&j), FpPoly::new(f, vec![0, 0, 1]));
    }
}
