use std::fmt;

use crate::error::{Error, Result};

/// A permutation of `{0, .., n-1}` stored as its image array.
///
/// Products compose right to left: `(a * b)(i) = a(b(i))`.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Perm {
    images: Vec<u8>,
}

impl Perm {
    pub fn identity(n: usize) -> Perm {
        assert!(n <= 256, "degree above 256 is not supported");
        Perm { images: (0..n).map(|i| i as u8).collect() }
    }

    /// Build from 0-based images, checking bijectivity.
    pub fn from_images(images: Vec<u8>) -> Result<Perm> {
        let n = images.len();
        let mut seen = vec![false; n];
        for &x in &images {
            let x = x as usize;
            if x >= n || seen[x] {
                return Err(Error::InvalidPermutation(format!("{images:?} is not a bijection")));
            }
            seen[x] = true;
        }
        Ok(Perm { images })
    }

    /// Images given on points `1..=n`.
    pub fn from_one_based(images: &[usize]) -> Result<Perm> {
        if images.len() > 256 {
            return Err(Error::InvalidPermutation("degree above 256".into()));
        }
        let mut v = Vec::with_capacity(images.len());
        for &x in images {
            if x == 0 || x > images.len() {
                return Err(Error::InvalidPermutation(format!("image {x} out of range")));
            }
            v.push((x - 1) as u8);
        }
        Perm::from_images(v)
    }

    /// Build from 1-based disjoint cycles.
    pub fn from_cycles(n: usize, cycles: &[&[usize]]) -> Result<Perm> {
        let mut im: Vec<u8> = (0..n).map(|i| i as u8).collect();
        let mut touched = vec![false; n];
        for c in cycles {
            for (k, &a) in c.iter().enumerate() {
                let b = c[(k + 1) % c.len()];
                if a == 0 || a > n || b == 0 || b > n || touched[a - 1] {
                    return Err(Error::InvalidPermutation(format!("bad cycle {c:?}")));
                }
                touched[a - 1] = true;
                im[a - 1] = (b - 1) as u8;
            }
        }
        Perm::from_images(im)
    }

    /// Trusted constructor for image arrays known to be bijections.
    pub(crate) fn from_raw(images: Vec<u8>) -> Perm {
        Perm { images }
    }

    pub fn degree(&self) -> usize {
        self.images.len()
    }

    pub fn images(&self) -> &[u8] {
        &self.images
    }

    pub fn one_based(&self) -> Vec<usize> {
        self.images.iter().map(|&x| x as usize + 1).collect()
    }

    #[inline]
    pub fn apply(&self, i: usize) -> usize {
        self.images[i] as usize
    }

    pub fn is_identity(&self) -> bool {
        self.images.iter().enumerate().all(|(i, &x)| i == x as usize)
    }

    pub fn mul(&self, other: &Perm) -> Perm {
        let mut out = vec![0u8; self.degree()];
        compose_into(&self.images, &other.images, &mut out);
        Perm { images: out }
    }

    pub fn inv(&self) -> Perm {
        let mut out = vec![0u8; self.degree()];
        invert_into(&self.images, &mut out);
        Perm { images: out }
    }

    pub fn pow(&self, mut e: u64) -> Perm {
        let mut base = self.clone();
        let mut acc = Perm::identity(self.degree());
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.mul(&base);
            }
            base = base.mul(&base);
            e >>= 1;
        }
        acc
    }

    /// `g * self * g^-1`.
    pub fn conj_by(&self, g: &Perm) -> Perm {
        // (g x g^-1)(g(i)) = g(x(i))
        let mut out = vec![0u8; self.degree()];
        for i in 0..self.degree() {
            out[g.images[i] as usize] = g.images[self.images[i] as usize];
        }
        Perm { images: out }
    }

    /// `a^-1 b^-1 a b`.
    pub fn commutator(a: &Perm, b: &Perm) -> Perm {
        a.inv().mul(&b.inv()).mul(a).mul(b)
    }

    pub fn order(&self) -> u64 {
        let mut seen = vec![false; self.degree()];
        let mut l: u64 = 1;
        for i in 0..self.degree() {
            if seen[i] {
                continue;
            }
            let mut len = 0u64;
            let mut j = i;
            while !seen[j] {
                seen[j] = true;
                j = self.images[j] as usize;
                len += 1;
            }
            l = lcm(l, len);
        }
        l
    }

    /// Disjoint cycles of length at least two, 0-based.
    pub fn cycles(&self) -> Vec<Vec<usize>> {
        let mut seen = vec![false; self.degree()];
        let mut out = Vec::new();
        for i in 0..self.degree() {
            if seen[i] || self.apply(i) == i {
                continue;
            }
            let mut c = Vec::new();
            let mut j = i;
            while !seen[j] {
                seen[j] = true;
                c.push(j);
                j = self.apply(j);
            }
            out.push(c);
        }
        out
    }

    /// Place `self` on points `offset..offset+degree` of a larger set.
    pub fn shifted(&self, offset: usize, total: usize) -> Perm {
        let mut im: Vec<u8> = (0..total).map(|i| i as u8).collect();
        for (i, &x) in self.images.iter().enumerate() {
            im[i + offset] = (x as usize + offset) as u8;
        }
        Perm { images: im }
    }
}

#[inline]
pub(crate) fn compose_into(a: &[u8], b: &[u8], out: &mut [u8]) {
    for (o, &bi) in out.iter_mut().zip(b) {
        *o = a[bi as usize];
    }
}

#[inline]
pub(crate) fn invert_into(a: &[u8], out: &mut [u8]) {
    for (i, &x) in a.iter().enumerate() {
        out[x as usize] = i as u8;
    }
}

/// `out = g a g^-1`, all as raw image slices.
#[inline]
pub(crate) fn conj_into(a: &[u8], g: &[u8], out: &mut [u8]) {
    for i in 0..a.len() {
        out[g[i] as usize] = g[a[i] as usize];
    }
}

pub(crate) fn gcd(a: u64, b: u64) -> u64 {
    if b == 0 {
        a
    } else {
        gcd(b, a % b)
    }
}

pub(crate) fn lcm(a: u64, b: u64) -> u64 {
    a / gcd(a, b) * b
}

impl fmt::Display for Perm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let cs = self.cycles();
        if cs.is_empty() {
            return write!(f, "()");
        }
        for c in cs {
            write!(f, "(")?;
            for (k, x) in c.iter().enumerate() {
                if k > 0 {
                    write!(f, ",")?;
                }
                write!(f, "{}", x + 1)?;
            }
            write!(f, ")")?;
        }
        Ok(())
    }
}

impl fmt::Debug for Perm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Perm{self}")
    }
}
