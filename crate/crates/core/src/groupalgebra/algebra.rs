use std::collections::VecDeque;

use super::blocks::BlockRecord;
use super::brauer::GroupElem;
use super::center::CenterTable;
use crate::error::{Error, Result};
use crate::fplinalg::{Fp, FpMatrix, FpVec, Reducer};
use crate::permgroup::PermGroup;

/// Block algebras above this dimension are not built.
pub const SOLVER_CAP: usize = 300;

/// A finite-dimensional unital algebra over `F_p` with a labelled basis.
/// The product of basis elements `i, j` is `coords[prod[i * d + j]]`, which
/// lets group algebras and their blocks share product vectors.
#[derive(Clone, Debug)]
pub struct AlgebraPresentation {
    f: Fp,
    d: usize,
    pub labels: Vec<String>,
    prod: Vec<u32>,
    coords: Vec<FpVec>,
    pub one: FpVec,
    /// Algebra generators, in basis coordinates.
    pub generators: Vec<FpVec>,
}

impl AlgebraPresentation {
    /// From a full table of basis products, row-major.
    pub fn from_products(f: Fp, labels: Vec<String>, products: Vec<FpVec>, one: FpVec, generators: Vec<FpVec>) -> Self {
        let d = labels.len();
        assert_eq!(products.len(), d * d);
        AlgebraPresentation { f, d, labels, prod: (0..(d * d) as u32).collect(), coords: products, one, generators }
    }

    /// The group algebra `F_p G` on the group-element basis.
    pub fn group_algebra(g: &PermGroup, p: u32) -> Result<Self> {
        let f = Fp::new(p)?;
        let t = g.elements()?;
        let n = t.len();
        let prod: Vec<u32> = crate::par::map_indices(n * n, |ij| g.mul_idx((ij / n) as u32, (ij % n) as u32));
        let coords: Vec<FpVec> = (0..n).map(|i| FpVec::unit(f, n, i)).collect();
        let generators = g.generators().iter().map(|s| Ok(coords[g.index_of(s)? as usize].clone())).collect::<Result<_>>()?;
        let labels = (0..n).map(|i| t.perm(i).to_string()).collect();
        Ok(AlgebraPresentation { f, d: n, labels, prod, one: coords[0].clone(), coords, generators })
    }

    /// The block `e F_p G` on a basis of translates `e g`, chosen greedily
    /// along a breadth-first walk of the Cayley graph.
    pub fn block_algebra(g: &PermGroup, center: &CenterTable, block: &BlockRecord) -> Result<Self> {
        let d = block.fp_dimension as usize;
        if d > SOLVER_CAP {
            return Err(Error::CapExceeded { order: d as u128, cap: SOLVER_CAP as u128 });
        }
        let f = center.field();
        let t = g.elements()?;
        let n = t.len();
        let e = GroupElem::from_central(g, center, &block.idempotent)?;
        let esupp = e.support();
        // e * x as a vector over G
        let translate = |x: u32| -> FpVec {
            let mut v = FpVec::zero(f, n + d);
            for &y in &esupp {
                v.set(g.mul_idx(y, x) as usize, e.coeffs[y as usize]);
            }
            v
        };
        let gens: Vec<u32> = g.generators().iter().map(|s| g.index_of(s)).collect::<Result<_>>()?;
        let mut red = Reducer::new(f, n + d);
        let mut words: Vec<u32> = Vec::new();
        let mut seen = vec![false; n];
        let mut queue = VecDeque::from([0u32]);
        seen[0] = true;
        let mut bfs_order = Vec::with_capacity(n);
        while let Some(x) = queue.pop_front() {
            bfs_order.push(x);
            for &s in &gens {
                let y = g.mul_idx(x, s);
                if !seen[y as usize] {
                    seen[y as usize] = true;
                    queue.push_back(y);
                }
            }
        }
        for &x in &bfs_order {
            if words.len() == d {
                break;
            }
            let mut probe = translate(x);
            red.reduce(&mut probe);
            if (0..n).all(|i| probe.get(i) == 0) {
                continue;
            }
            let mut v = translate(x);
            v.set(n + words.len(), 1);
            red.insert(v);
            words.push(x);
        }
        if words.len() != d {
            return Err(Error::DimensionMismatch { expected: d, found: words.len() });
        }
        let coords: Vec<FpVec> = crate::par::map_indices(n, |x| {
            let mut v = translate(x as u32);
            red.reduce(&mut v);
            debug_assert!((0..n).all(|i| v.get(i) == 0));
            let mut c = v.slice(n, n + d);
            c.scale(f.neg(1));
            c
        });
        let prod: Vec<u32> = crate::par::map_indices(d * d, |ij| g.mul_idx(words[ij / d], words[ij % d]));
        let generators = gens.iter().map(|&s| coords[s as usize].clone()).collect();
        let labels = words.iter().map(|&w| format!("e{}", t.perm(w as usize))).collect();
        Ok(AlgebraPresentation { f, d, labels, prod, one: coords[0].clone(), coords, generators })
    }

    /// `F_p[C_{n_1} x ... x C_{n_r}]` on monomials, with generators named
    /// `x, y, z, ...` and labels such as `x^2y`.
    pub fn abelian_group(p: u32, orders: &[usize]) -> Result<Self> {
        let f = Fp::new(p)?;
        let d: usize = orders.iter().product();
        let names = ["x", "y", "z", "u", "v", "w"];
        if orders.len() > names.len() || orders.iter().any(|&n| n == 0) {
            return Err(Error::PreconditionUnmet("at most six nontrivial cyclic factors".into()));
        }
        let decode = |mut a: usize| -> Vec<usize> {
            orders
                .iter()
                .map(|&n| {
                    let e = a % n;
                    a /= n;
                    e
                })
                .collect()
        };
        let encode = |e: &[usize]| -> usize { e.iter().zip(orders).rev().fold(0, |acc, (&x, &n)| acc * n + x % n) };
        let mut products = Vec::with_capacity(d * d);
        for a in 0..d {
            let ea = decode(a);
            for b in 0..d {
                let eb = decode(b);
                let s: Vec<usize> = ea.iter().zip(&eb).map(|(x, y)| x + y).collect();
                products.push(FpVec::unit(f, d, encode(&s)));
            }
        }
        let labels = (0..d).map(|a| monomial(&decode(a), &names)).collect();
        let generators = (0..orders.len())
            .map(|i| {
                let mut e = vec![0; orders.len()];
                e[i] = 1;
                FpVec::unit(f, d, encode(&e))
            })
            .collect();
        Ok(Self::from_products(f, labels, products, FpVec::unit(f, d, 0), generators))
    }

    /// Basis index of a monomial in an algebra built by [`abelian_group`](Self::abelian_group).
    pub fn monomial_index(orders: &[usize], exps: &[usize]) -> usize {
        exps.iter().zip(orders).rev().fold(0, |acc, (&x, &n)| acc * n + x % n)
    }

    /// Automorphism of an abelian group algebra induced by a group
    /// automorphism, given by the exponent vectors of the images of the
    /// generators.
    pub fn abelian_automorphism(&self, orders: &[usize], images: &[Vec<usize>]) -> FpMatrix {
        let d = self.d;
        let mut m = FpMatrix::zero(self.f, d, d);
        for a in 0..d {
            let mut x = a;
            let mut img = vec![0usize; orders.len()];
            for (i, &n) in orders.iter().enumerate() {
                let e = x % n;
                x /= n;
                for (t, v) in img.iter_mut().enumerate() {
                    *v += e * images[i][t];
                }
            }
            m.set(Self::monomial_index(orders, &img), a, 1);
        }
        m
    }

    /// `sum c_i t_i` written with the basis labels.
    pub fn format(&self, v: &FpVec) -> String {
        let terms: Vec<String> = v
            .support()
            .into_iter()
            .map(|i| match v.get(i) {
                1 => self.labels[i].clone(),
                c if self.labels[i] == "1" => c.to_string(),
                c => format!("{c}{}", self.labels[i]),
            })
            .collect();
        if terms.is_empty() {
            "0".into()
        } else {
            terms.join("+")
        }
    }

    /// Inverse of [`format`](Self::format): terms `c label` joined by `+`.
    pub fn parse(&self, s: &str) -> Result<FpVec> {
        let mut v = FpVec::zero(self.f, self.d);
        let s: String = s.chars().filter(|c| !c.is_whitespace()).collect();
        if s == "0" {
            return Ok(v);
        }
        for term in s.split('+') {
            let k = term.find(|c: char| !c.is_ascii_digit()).unwrap_or(term.len());
            let (c, label) = term.split_at(k);
            let c = if c.is_empty() { 1 } else { c.parse::<i64>().map_err(|e| Error::Parse(e.to_string()))? };
            let label = if label.is_empty() { "1" } else { label };
            let i = self
                .labels
                .iter()
                .position(|l| l == label)
                .ok_or_else(|| Error::Parse(format!("unknown basis element {label:?}")))?;
            v.set(i, self.f.add(v.get(i), self.f.from_i64(c)));
        }
        Ok(v)
    }

    /// `M_n(F_p)` on matrix units, generated by the off-diagonal neighbours.
    pub fn matrix_algebra(p: u32, n: usize) -> Result<Self> {
        let f = Fp::new(p)?;
        let d = n * n;
        let unit = |i: usize, j: usize| FpVec::unit(f, d, i * n + j);
        let mut products = Vec::with_capacity(d * d);
        for a in 0..d {
            for b in 0..d {
                let (i, j) = (a / n, a % n);
                let (k, l) = (b / n, b % n);
                products.push(if j == k { unit(i, l) } else { FpVec::zero(f, d) });
            }
        }
        let mut one = FpVec::zero(f, d);
        for i in 0..n {
            one.set(i * n + i, 1);
        }
        let mut generators = Vec::new();
        for i in 0..n.saturating_sub(1) {
            generators.push(unit(i, i + 1));
            generators.push(unit(i + 1, i));
        }
        if n == 1 {
            generators.push(unit(0, 0));
        }
        let labels = (0..d).map(|a| format!("E{}{}", a / n + 1, a % n + 1)).collect();
        Ok(Self::from_products(f, labels, products, one, generators))
    }

    pub fn field(&self) -> Fp {
        self.f
    }

    pub fn dim(&self) -> usize {
        self.d
    }

    #[inline]
    pub fn basis_mul(&self, i: usize, j: usize) -> &FpVec {
        &self.coords[self.prod[i * self.d + j] as usize]
    }

    pub fn basis(&self, i: usize) -> FpVec {
        FpVec::unit(self.f, self.d, i)
    }

    pub fn mul(&self, a: &FpVec, b: &FpVec) -> FpVec {
        let mut out = FpVec::zero(self.f, self.d);
        let sb = b.support();
        for i in a.support() {
            let ai = a.get(i);
            for &j in &sb {
                out.axpy(self.f.mul(ai, b.get(j)), self.basis_mul(i, j));
            }
        }
        out
    }

    /// Column `j` is `a * t_j`.
    pub fn left_matrix(&self, a: &FpVec) -> FpMatrix {
        let cols: Vec<FpVec> = crate::par::map_indices(self.d, |j| self.mul(a, &self.basis(j)));
        FpMatrix::from_cols(self.f, self.d, &cols)
    }

    /// Column `j` is `t_j * a`.
    pub fn right_matrix(&self, a: &FpVec) -> FpMatrix {
        let cols: Vec<FpVec> = crate::par::map_indices(self.d, |j| self.mul(&self.basis(j), a));
        FpMatrix::from_cols(self.f, self.d, &cols)
    }

    /// `(x y) s = x (y s)` for basis `x, y` and generators `s`, which implies
    /// associativity on all triples since the generators span by products.
    pub fn check_associative(&self) -> bool {
        let d = self.d;
        self.generators.iter().all(|s| {
            let rs: Vec<FpVec> = (0..d).map(|y| self.mul(&self.basis(y), s)).collect();
            (0..d * d).all(|xy| {
                let (x, y) = (xy / d, xy % d);
                self.mul(self.basis_mul(x, y), s) == self.mul(&self.basis(x), &rs[y])
            })
        })
    }

    pub fn check_identity(&self) -> bool {
        (0..self.d).all(|i| {
            let b = self.basis(i);
            self.mul(&self.one, &b) == b && self.mul(&b, &self.one) == b
        })
    }

    /// Do the generators span the algebra under products?
    pub fn generators_span(&self) -> bool {
        self.word_basis().len() == self.d
    }

    /// Breadth-first words in the generators that form a basis: entries are
    /// `(vector, parent, generator)` with `vector = vector[parent] * gen`.
    pub fn word_basis(&self) -> Vec<(FpVec, usize, usize)> {
        let mut red = Reducer::new(self.f, self.d);
        red.insert(self.one.clone());
        let mut out = vec![(self.one.clone(), usize::MAX, usize::MAX)];
        let mut head = 0;
        while head < out.len() && out.len() < self.d {
            for (s, gen) in self.generators.iter().enumerate() {
                let v = self.mul(&out[head].0, gen);
                if red.insert(v.clone()) {
                    out.push((v, head, s));
                }
            }
            head += 1;
        }
        out
    }

    /// Basis of the centre.
    pub fn centre(&self) -> Vec<FpVec> {
        let d = self.d;
        let mut red = Reducer::new(self.f, d);
        let cols: Vec<(FpMatrix, FpMatrix)> =
            self.generators.iter().map(|s| (self.right_matrix(s), self.left_matrix(s))).collect();
        // x s - s x = (R_s - L_s) x
        for (r, l) in &cols {
            let m = r.sub(l);
            for row in m.rows() {
                red.insert(row.clone());
            }
        }
        red.kernel_basis()
    }

    pub fn is_commutative(&self) -> bool {
        (0..self.d).all(|i| (0..self.d).all(|j| self.basis_mul(i, j) == self.basis_mul(j, i)))
    }

    /// Is the linear map with matrix `phi` an algebra automorphism?
    pub fn is_automorphism(&self, phi: &FpMatrix) -> bool {
        if phi.nrows() != self.d || phi.ncols() != self.d || phi.inverse().is_none() {
            return false;
        }
        let img: Vec<FpVec> = (0..self.d).map(|j| phi.col(j)).collect();
        if phi.mul_vec(&self.one).unwrap() != self.one {
            return false;
        }
        (0..self.d).all(|i| {
            (0..self.d).all(|j| phi.mul_vec(self.basis_mul(i, j)).unwrap() == self.mul(&img[i], &img[j]))
        })
    }
}

fn monomial(e: &[usize], names: &[&str]) -> String {
    let mut s = String::new();
    for (i, &x) in e.iter().enumerate() {
        match x {
            0 => {}
            1 => s.push_str(names[i]),
            _ => s.push_str(&format!("{}^{x}", names[i])),
        }
    }
    if s.is_empty() {
        "1".into()
    } else {
        s
    }
}
