use super::DerivationMap;
use crate::error::{Error, Result};
use crate::fplinalg::{Fp, FpMatrix, FpVec, Reducer};
use crate::groupalgebra::{AlgebraPresentation, SOLVER_CAP};
use crate::liealg::LieAlgebraFp;

/// Linear system for derivations, with one unknown vector `D(s)` per
/// algebra generator `s`. A derivation is fixed by these values: along a
/// word basis `w_k = w_parent s` we have `D(w_k) = D(w_parent) s + w_parent D(s)`,
/// so `D(w_k) = E_k X` for a `d x rd` matrix `E_k`. The remaining products
/// `w_k s` that are not tree edges give the constraints.
pub struct DerivationSolver<'a> {
    a: &'a AlgebraPresentation,
    r: usize,
    /// Columns of the word basis in basis coordinates, inverted.
    winv: FpMatrix,
    /// Rows of each `E_k`.
    e: Vec<Vec<FpVec>>,
    der: Vec<FpVec>,
}

fn embed(f: Fp, v: &FpVec, offset: usize, width: usize) -> FpVec {
    let mut out = FpVec::zero(f, width);
    for i in v.support() {
        out.set(offset + i, v.get(i));
    }
    out
}

impl<'a> DerivationSolver<'a> {
    pub fn new(a: &'a AlgebraPresentation) -> Result<Self> {
        Self::with_cap(a, SOLVER_CAP)
    }

    pub fn with_cap(a: &'a AlgebraPresentation, cap: usize) -> Result<Self> {
        let (f, d) = (a.field(), a.dim());
        if d > cap {
            return Err(Error::CapExceeded { order: d as u128, cap: cap as u128 });
        }
        let r = a.generators.len().max(1);
        let gens: Vec<FpVec> =
            if a.generators.is_empty() { vec![a.one.clone()] } else { a.generators.clone() };
        let width = r * d;
        let words = a.word_basis();
        if words.len() != d {
            return Err(Error::PreconditionUnmet("the algebra generators do not span".into()));
        }
        let wcols: Vec<FpVec> = words.iter().map(|w| w.0.clone()).collect();
        let winv = FpMatrix::from_cols(f, d, &wcols).inverse().expect("word basis is a basis");
        let rmat: Vec<FpMatrix> = gens.iter().map(|s| a.right_matrix(s)).collect();
        let lmat: Vec<FpMatrix> = crate::par::map_slice(&wcols, |w| a.left_matrix(w));

        // R_s E rows: row i = sum_j R_s[i][j] E[j]
        let right_times = |s: usize, ek: &[FpVec]| -> Vec<FpVec> {
            (0..d)
                .map(|i| {
                    let row = rmat[s].row(i);
                    let mut out = FpVec::zero(f, width);
                    for j in row.support() {
                        out.axpy(row.get(j), &ek[j]);
                    }
                    out
                })
                .collect()
        };

        let mut e: Vec<Vec<FpVec>> = Vec::with_capacity(d);
        e.push(vec![FpVec::zero(f, width); d]);
        for k in 1..d {
            let (_, par, s) = words[k];
            let mut rows = right_times(s, &e[par]);
            for (i, row) in rows.iter_mut().enumerate() {
                row.add_assign(&embed(f, lmat[par].row(i), s * d, width));
            }
            e.push(rows);
        }

        let mut tree = vec![false; d * r];
        for &(_, par, s) in words.iter().skip(1) {
            tree[par * r + s] = true;
        }
        let pairs: Vec<usize> = (0..d * r).filter(|&ks| !tree[ks]).collect();
        let mut red = Reducer::new(f, width);
        let neg = f.neg(1);
        for chunk in pairs.chunks(64) {
            if red.is_full() {
                break;
            }
            let blocks: Vec<Vec<FpVec>> = crate::par::map_slice(chunk, |&ks| {
                let (k, s) = (ks / r, ks % r);
                let u = a.mul(&wcols[k], &gens[s]);
                let c = winv.mul_vec(&u).unwrap();
                let mut rows = right_times(s, &e[k]);
                for (i, row) in rows.iter_mut().enumerate() {
                    row.add_assign(&embed(f, lmat[k].row(i), s * d, width));
                    for l in c.support() {
                        row.axpy(f.mul(neg, c.get(l)), &e[l][i]);
                    }
                }
                rows
            });
            for rows in blocks {
                for row in rows {
                    if !row.is_zero() {
                        red.insert(row);
                    }
                }
            }
        }
        let der = red.kernel_basis();
        Ok(DerivationSolver { a, r, winv, e, der })
    }

    pub fn algebra(&self) -> &AlgebraPresentation {
        self.a
    }

    /// Basis of `Der(A)` in generator-image coordinates.
    pub fn der_vectors(&self) -> &[FpVec] {
        &self.der
    }

    pub fn der_dim(&self) -> usize {
        self.der.len()
    }

    fn gens(&self) -> Vec<FpVec> {
        if self.a.generators.is_empty() {
            vec![self.a.one.clone()]
        } else {
            self.a.generators.clone()
        }
    }

    /// The linear map determined by generator images `x`; a derivation when
    /// `x` satisfies the constraints.
    pub fn to_map(&self, x: &FpVec) -> DerivationMap {
        let (f, d) = (self.a.field(), self.a.dim());
        let dw: Vec<FpVec> = (0..d)
            .map(|k| {
                let mut v = FpVec::zero(f, d);
                for (i, row) in self.e[k].iter().enumerate() {
                    v.set(i, row.dot(x));
                }
                v
            })
            .collect();
        let dw = FpMatrix::from_cols(f, d, &dw);
        DerivationMap::new(dw.mul(&self.winv))
    }

    /// Generator images of a linear map.
    pub fn to_vector(&self, m: &DerivationMap) -> FpVec {
        let gens = self.gens();
        let mut v = m.apply(&gens[0]);
        for s in &gens[1..] {
            v = v.concat(&m.apply(s));
        }
        v
    }

    pub fn inner_vector(&self, b: &FpVec) -> FpVec {
        let gens = self.gens();
        let comm = |s: &FpVec| {
            let mut v = self.a.mul(b, s);
            v.sub_assign(&self.a.mul(s, b));
            v
        };
        let mut v = comm(&gens[0]);
        for s in &gens[1..] {
            v = v.concat(&comm(s));
        }
        v
    }

    pub fn generator_count(&self) -> usize {
        self.r
    }
}

pub fn derivation_space(a: &AlgebraPresentation) -> Result<Vec<DerivationMap>> {
    let s = DerivationSolver::new(a)?;
    Ok(s.der.iter().map(|x| s.to_map(x)).collect())
}

/// Basis of the inner derivations `x -> b x - x b`.
pub fn inner_derivation_space(a: &AlgebraPresentation) -> Result<Vec<DerivationMap>> {
    let s = DerivationSolver::new(a)?;
    let (red, _) = inner_reducer(&s);
    Ok(red.rref().0.iter().map(|x| s.to_map(x)).collect())
}

fn inner_reducer(s: &DerivationSolver) -> (Reducer, usize) {
    let a = s.a;
    let width = s.r * a.dim();
    let mut red = Reducer::new(a.field(), width);
    for b in 0..a.dim() {
        red.insert(s.inner_vector(&a.basis(b)));
    }
    let (rows, _) = red.rref();
    let mut canon = Reducer::new(a.field(), width);
    for row in rows {
        canon.insert(row);
    }
    let rank = canon.rank();
    (canon, rank)
}

/// `HH^1(A)` with a canonical basis of coset representatives: the reduced
/// echelon basis of the derivations that vanish on the pivot coordinates
/// of the inner derivations.
#[derive(Clone, Debug)]
pub struct HH1Presentation {
    pub reps: Vec<DerivationMap>,
    pub lie: LieAlgebraFp,
    pub der_dim: usize,
    pub ider_dim: usize,
    gens: Vec<FpVec>,
    ider: Reducer,
    rep_pivots: Vec<usize>,
    /// For sub-presentations: the basis in the coordinates of the parent.
    sub: Option<(FpMatrix, Box<HH1Presentation>)>,
}

impl HH1Presentation {
    pub fn dim(&self) -> usize {
        self.reps.len()
    }

    fn vector_of(&self, m: &DerivationMap) -> FpVec {
        let mut v = m.apply(&self.gens[0]);
        for s in &self.gens[1..] {
            v = v.concat(&m.apply(s));
        }
        v
    }

    /// Coordinates of a derivation's class against `reps`.
    pub fn project(&self, m: &DerivationMap) -> Vec<u8> {
        if let Some((basis, parent)) = &self.sub {
            let c = FpVec::from_slice(basis.field(), &parent.project(m));
            return basis.solve(&c).ok().flatten().map(|v| v.to_vec()).unwrap_or_default();
        }
        let mut v = self.vector_of(m);
        self.ider.reduce(&mut v);
        self.rep_pivots.iter().map(|&c| v.get(c)).collect()
    }

    /// Is the class of `m` zero, i.e. is `m` inner?
    pub fn is_inner(&self, m: &DerivationMap) -> bool {
        match &self.sub {
            Some((_, parent)) => parent.is_inner(m),
            None => {
                let mut v = self.vector_of(m);
                self.ider.reduce(&mut v);
                v.is_zero()
            }
        }
    }

    /// `sum c_i reps_i`.
    pub fn combine(&self, c: &[u8]) -> DerivationMap {
        let d = self.gens[0].len();
        let mut m = DerivationMap::new(FpMatrix::zero(self.lie.field(), d, d));
        for (i, &x) in c.iter().enumerate() {
            if x != 0 {
                m = m.add(&self.reps[i].scale(x));
            }
        }
        m
    }

    /// The subalgebra spanned by the given coordinate vectors, which must
    /// be closed under the bracket.
    pub fn subalgebra(&self, basis: Vec<FpVec>) -> Result<HH1Presentation> {
        let f = self.lie.field();
        let h = self.dim();
        let m = basis.len();
        let bmat = FpMatrix::from_cols(f, h, &basis);
        let reps: Vec<DerivationMap> = basis.iter().map(|c| self.combine(&c.to_vec())).collect();
        let mut brackets = Vec::new();
        for i in 0..m {
            for j in i + 1..m {
                let v = self.lie.bracket(&basis[i], &basis[j]);
                let c = bmat
                    .solve(&v)?
                    .ok_or_else(|| Error::PreconditionUnmet("subspace is not a subalgebra".into()))?;
                brackets.push(c);
            }
        }
        let mut it = brackets.into_iter();
        let lie = LieAlgebraFp::from_brackets(f, m, |_, _| it.next().unwrap());
        Ok(HH1Presentation {
            reps,
            lie,
            der_dim: self.der_dim,
            ider_dim: self.ider_dim,
            gens: self.gens.clone(),
            ider: self.ider.clone(),
            rep_pivots: Vec::new(),
            sub: Some((bmat, Box::new(self.clone()))),
        })
    }
}

pub fn hh1_lie_algebra(a: &AlgebraPresentation) -> Result<HH1Presentation> {
    let s = DerivationSolver::new(a)?;
    hh1_from_solver(&s)
}

pub(crate) fn hh1_from_solver(s: &DerivationSolver) -> Result<HH1Presentation> {
    let a = s.a;
    let f = a.field();
    let (ider, ider_dim) = inner_reducer(s);
    let mut comp = Reducer::new(f, s.r * a.dim());
    for x in &s.der {
        let mut v = x.clone();
        ider.reduce(&mut v);
        comp.insert(v);
    }
    let (rows, rep_pivots) = comp.rref();
    let reps: Vec<DerivationMap> = crate::par::map_slice(&rows, |x| s.to_map(x));
    let h = reps.len();
    let gens = s.gens();
    let mut pres = HH1Presentation {
        reps,
        lie: LieAlgebraFp::abelian(f, h),
        der_dim: s.der.len(),
        ider_dim,
        gens,
        ider,
        rep_pivots,
        sub: None,
    };
    let pairs: Vec<(usize, usize)> = (0..h).flat_map(|i| (i + 1..h).map(move |j| (i, j))).collect();
    let brs: Vec<FpVec> = crate::par::map_slice(&pairs, |&(i, j)| {
        let c = pres.reps[i].commutator(&pres.reps[j]);
        FpVec::from_slice(f, &pres.project(&c))
    });
    let mut it = brs.into_iter();
    pres.lie = LieAlgebraFp::from_brackets(f, h, |_, _| it.next().unwrap());
    Ok(pres)
}
