//! Closed forms for blocks with cyclic defect group `P = C_q`, `q = p^t`,
//! and inertial quotient `E = <y>` acting by `y . x = x^s`.

use serde::Serialize;

use crate::derivations::DerivationMap;
use crate::error::{Error, Result};
use crate::fplinalg::{Fp, FpMatrix, FpVec, Reducer};
use crate::groupalgebra::AlgebraPresentation;
use crate::liealg::LieAlgebraFp;

#[derive(Clone, Debug, Serialize)]
pub struct CyclicSetup {
    pub p: u32,
    pub t: u32,
    pub q: usize,
    pub s: usize,
    pub e: usize,
}

fn mult_order(s: usize, q: usize) -> usize {
    let mut x = s % q;
    let mut k = 1;
    while x != 1 {
        x = x * s % q;
        k += 1;
    }
    k
}

fn pow_mod(mut b: usize, mut k: usize, q: usize) -> usize {
    let mut r = 1 % q;
    b %= q;
    while k > 0 {
        if k & 1 == 1 {
            r = r * b % q;
        }
        b = b * b % q;
        k >>= 1;
    }
    r
}

fn gcd(a: usize, b: usize) -> usize {
    if b == 0 {
        a
    } else {
        gcd(b, a % b)
    }
}

impl CyclicSetup {
    pub fn new(p: u32, t: u32, s: usize) -> Result<Self> {
        if !crate::fplinalg::is_prime(p) || t == 0 {
            return Err(Error::UnsupportedPrime(p));
        }
        let q = (p as usize).pow(t);
        if q > 4096 {
            return Err(Error::CapExceeded { order: q as u128, cap: 4096 });
        }
        let s = s % q;
        if gcd(s, p as usize) != 1 {
            return Err(Error::PreconditionUnmet(format!("s = {s} is not a unit mod {q}")));
        }
        let e = mult_order(s, q);
        if e % p as usize == 0 {
            return Err(Error::OrderDivisibleByP { order: e, p });
        }
        Ok(CyclicSetup { p, t, q, s, e })
    }

    /// The least `s` of multiplicative order `e` modulo `q`.
    pub fn with_order(p: u32, t: u32, e: usize) -> Result<Self> {
        let q = (p as usize).pow(t);
        if e == 0 || (p as usize - 1) % e != 0 {
            return Err(Error::NonIntegerDimension { p, e: e as u32 });
        }
        let primes: Vec<usize> = (2..=e).filter(|&r| e % r == 0 && (2..r).all(|d| r % d != 0)).collect();
        let has_order_e = |s: usize| {
            pow_mod(s, e, q) == 1 % q && primes.iter().all(|&r| pow_mod(s, e / r, q) != 1 % q)
        };
        let s = (1..q.max(2))
            .find(|&s| gcd(s, p as usize) == 1 && has_order_e(s))
            .ok_or(Error::NonIntegerDimension { p, e: e as u32 })?;
        Self::new(p, t, s)
    }

    pub fn field(&self) -> Fp {
        Fp::new(self.p).unwrap()
    }

    fn s_inv(&self) -> usize {
        (1..self.q).find(|&u| u * self.s % self.q == 1).unwrap_or(1)
    }

    /// `kP` on the basis `1, x, ..., x^(q-1)`.
    pub fn algebra(&self) -> AlgebraPresentation {
        AlgebraPresentation::abelian_group(self.p, &[self.q]).unwrap()
    }

    /// The generator of `E` as an automorphism of `kP`.
    pub fn action(&self) -> FpMatrix {
        let a = self.algebra();
        a.abelian_automorphism(&[self.q], &[vec![self.s]])
    }

    /// `s^-i mod q` for `i = 0..e`.
    fn inv_powers(&self) -> Vec<usize> {
        let u = self.s_inv();
        let mut out = vec![1; self.e];
        for i in 1..self.e {
            out[i] = out[i - 1] * u % self.q;
        }
        out
    }

    /// The exponent `(m - 1) s^-i + 1` reduced modulo `q`, given `s^-i`.
    fn exponent(&self, m: usize, si: usize) -> usize {
        let q = self.q;
        ((m + q - 1) % q * si + 1) % q
    }
}

#[derive(Clone, Debug)]
pub struct TraceDerivation {
    pub m: usize,
    /// `D_m(x)` on the basis `x^j`.
    pub image: FpVec,
}

impl TraceDerivation {
    pub fn to_map(&self, setup: &CyclicSetup) -> DerivationMap {
        derivation_from_image(setup, &self.image)
    }
}

/// The derivation of `kC_q` with `x -> v`: `x^j -> j x^(j-1) v`.
pub fn derivation_from_image(setup: &CyclicSetup, v: &FpVec) -> DerivationMap {
    let f = setup.field();
    let q = setup.q;
    let mut m = FpMatrix::zero(f, q, q);
    for j in 0..q {
        let c = f.from_u64(j as u64);
        if c == 0 {
            continue;
        }
        for k in v.support() {
            let r = (k + j - 1) % q;
            m.set(r, j, f.add(m.get(r, j), f.mul(c, v.get(k))));
        }
    }
    DerivationMap::new(m)
}

/// `D_m(x) = sum_i s^i x^((m-1) s^-i + 1)` for `m = 0..q`.
pub fn trace_basis(setup: &CyclicSetup) -> Vec<TraceDerivation> {
    let f = setup.field();
    let inv = setup.inv_powers();
    (0..setup.q)
        .map(|m| {
            let mut v = FpVec::zero(f, setup.q);
            let mut c = 1u8;
            let s = f.from_u64(setup.s as u64);
            for &si in &inv {
                let k = setup.exponent(m, si);
                v.set(k, f.add(v.get(k), c));
                c = f.mul(c, s);
            }
            TraceDerivation { m, image: v }
        })
        .collect()
}

/// Classes of `m ~ (m - 1) s^-i + 1`, each sorted, ordered by least element.
pub fn similarity_classes(setup: &CyclicSetup) -> Vec<Vec<usize>> {
    let inv = setup.inv_powers();
    let mut seen = vec![false; setup.q];
    let mut out = Vec::new();
    for m in 0..setup.q {
        if seen[m] {
            continue;
        }
        let mut cls: Vec<usize> = inv.iter().map(|&si| setup.exponent(m, si)).collect();
        cls.sort_unstable();
        cls.dedup();
        for &n in &cls {
            seen[n] = true;
        }
        out.push(cls);
    }
    out
}

/// Least-index representatives of the classes whose `D_m` is nonzero.
pub fn fixed_basis(setup: &CyclicSetup) -> Vec<TraceDerivation> {
    let basis = trace_basis(setup);
    similarity_classes(setup)
        .into_iter()
        .map(|c| basis[c[0]].clone())
        .filter(|d| !d.image.is_zero())
        .collect()
}

/// `HH^1(kP)^E` on the class representatives, bracket by commutators.
pub fn fixed_lie_algebra(setup: &CyclicSetup) -> Result<LieAlgebraFp> {
    let f = setup.field();
    let reps = fixed_basis(setup);
    let n = reps.len();
    let cols: Vec<FpVec> = reps.iter().map(|d| d.image.clone()).collect();
    let basis = FpMatrix::from_cols(f, setup.q, &cols);
    let maps: Vec<DerivationMap> = reps.iter().map(|d| d.to_map(setup)).collect();
    let x = FpVec::unit(f, setup.q, 1);
    let mut brackets = Vec::new();
    for i in 0..n {
        for j in i + 1..n {
            let img = maps[i].commutator(&maps[j]).apply(&x);
            let c = basis
                .solve(&img)?
                .ok_or_else(|| Error::PreconditionUnmet("bracket leaves the fixed span".into()))?;
            brackets.push(c);
        }
    }
    let mut it = brackets.into_iter();
    Ok(LieAlgebraFp::from_brackets(f, n, |_, _| it.next().unwrap()))
}

/// `dim HH^1` of a block with defect group `C_q` and `|E| = e`.
pub fn cyclic_block_dim(p: u32, t: u32, e: usize) -> Result<usize> {
    let setup = CyclicSetup::with_order(p, t, e)?;
    Ok(fixed_basis(&setup).len())
}

#[derive(Clone, Debug, Serialize)]
pub struct ToralReport {
    pub p: u32,
    pub t: u32,
    /// `w` on the basis `x^j`.
    pub w: Vec<u8>,
    pub in_radical: bool,
    pub not_in_radical_square: bool,
    pub w_p_is_zero: bool,
    pub powers_form_basis: bool,
    /// Indices `m != 1` with `D_m(w) = w`.
    pub fixes_w: Vec<usize>,
    /// Indices `m != 1` with `D_m^p(w) = D_m(w)`.
    pub p_power_agrees_on_w: Vec<usize>,
    /// Basis elements with `D^p = D` as maps.
    pub p_power_equal: Vec<usize>,
    /// Is the fixed-point basis pairwise commuting?
    pub commuting: bool,
}

impl ToralReport {
    /// The full check for `t = 1`, `e = p - 1`.
    pub fn toral_basis_verified(&self) -> bool {
        self.in_radical
            && self.not_in_radical_square
            && self.w_p_is_zero
            && self.powers_form_basis
            && self.fixes_w.contains(&0)
            && self.p_power_equal.contains(&0)
            && self.commuting
    }
}

/// The element `w = sum i^-1 x^i` over `0 < i < q`, `p` not dividing `i`,
/// and the checks made on it.
pub fn p_toral_witness(setup: &CyclicSetup) -> Result<ToralReport> {
    let (p, q) = (setup.p, setup.q);
    if p == 2 {
        return Err(Error::PreconditionUnmet("the witness needs p odd".into()));
    }
    if setup.t == 1 && setup.e != p as usize - 1 {
        return Err(Error::PreconditionUnmet(format!(
            "for t = 1 the witness check needs e = p - 1 = {}, got e = {}",
            p - 1,
            setup.e
        )));
    }
    let f = setup.field();
    let a = setup.algebra();
    let mut w = FpVec::zero(f, q);
    for i in (1..q).filter(|i| i % p as usize != 0) {
        w.set(i, f.inv(f.from_u64(i as u64)));
    }
    let aug = (0..q).fold(0u8, |acc, i| f.add(acc, w.get(i)));
    // J^2 is spanned by x^i (x - 1)^2
    let mut j2 = Reducer::new(f, q);
    for i in 0..q {
        let mut v = FpVec::zero(f, q);
        v.set(i % q, 1);
        v.set((i + 1) % q, f.add(v.get((i + 1) % q), f.from_i64(-2)));
        v.set((i + 2) % q, f.add(v.get((i + 2) % q), 1));
        j2.insert(v);
    }
    let mut powers = vec![a.one.clone()];
    for _ in 1..q {
        let next = a.mul(powers.last().unwrap(), &w);
        powers.push(next);
    }
    let wp = (1..p).fold(w.clone(), |acc, _| a.mul(&acc, &w));
    let mut pw = Reducer::new(f, q);
    for v in &powers {
        pw.insert(v.clone());
    }
    let reps = fixed_basis(setup);
    let maps: Vec<DerivationMap> = reps.iter().map(|d| d.to_map(setup)).collect();
    let mut fixes_w = Vec::new();
    let mut agrees = Vec::new();
    let mut equal = Vec::new();
    for (d, m) in reps.iter().zip(&maps) {
        let dw = m.apply(&w);
        let pp = m.p_power();
        if dw == w {
            fixes_w.push(d.m);
        }
        if pp.apply(&w) == dw {
            agrees.push(d.m);
        }
        if &pp == m {
            equal.push(d.m);
        }
    }
    let commuting =
        (0..maps.len()).all(|i| (i + 1..maps.len()).all(|j| maps[i].commutator(&maps[j]).is_zero()));
    Ok(ToralReport {
        p,
        t: setup.t,
        w: w.to_vec(),
        in_radical: aug == 0,
        not_in_radical_square: !j2.contains(&w),
        w_p_is_zero: wp.is_zero(),
        powers_form_basis: pw.rank() == q,
        fixes_w,
        p_power_agrees_on_w: agrees,
        p_power_equal: equal,
        commuting,
    })
}
