//! Subgroups of a small p-group as bitsets, and p-subgroup classes of G.

use std::collections::{HashMap, HashSet};

use super::{PermGroup, Subgroup};
use crate::error::{Error, Result};

pub const LATTICE_BUDGET: usize = 128;

/// All subgroups of a p-group `P <= G` with `|P| <= 128`, layer by layer.
#[derive(Clone, Debug)]
pub struct PSubgroupLattice {
    pub p: u32,
    /// Parent indices of the elements of `P`; bit `i` of a set refers to `elems[i]`.
    pub elems: Vec<u32>,
    mul: Vec<u8>,
    inv: Vec<u8>,
    /// `layers[k]` holds the subgroups of order `p^k`.
    pub layers: Vec<Vec<u128>>,
}

impl PSubgroupLattice {
    pub fn new(g: &PermGroup, pgrp: &Subgroup, p: u32) -> Result<PSubgroupLattice> {
        let n = pgrp.order();
        if n > LATTICE_BUDGET {
            return Err(Error::CapExceeded { order: n as u128, cap: LATTICE_BUDGET as u128 });
        }
        let elems = pgrp.elements().to_vec();
        let local = |gi: u32| elems.binary_search(&gi).unwrap() as u8;
        let mut mul = vec![0u8; n * n];
        for a in 0..n {
            for b in 0..n {
                mul[a * n + b] = local(g.mul_idx(elems[a], elems[b]));
            }
        }
        let inv: Vec<u8> = (0..n).map(|a| local(g.inv_idx(elems[a]))).collect();
        let mut lat = PSubgroupLattice { p, elems, mul, inv, layers: vec![vec![1u128]] };
        lat.grow();
        Ok(lat)
    }

    fn n(&self) -> usize {
        self.elems.len()
    }

    #[inline]
    fn m(&self, a: usize, b: usize) -> usize {
        self.mul[a * self.n() + b] as usize
    }

    fn pow(&self, x: usize, e: u32) -> usize {
        let mut r = 0;
        for _ in 0..e {
            r = self.m(r, x);
        }
        r
    }

    fn normalises(&self, x: usize, k: u128) -> bool {
        let xi = self.inv[x] as usize;
        bits(k).all(|h| k >> self.m(self.m(x, h), xi) & 1 == 1)
    }

    fn grow(&mut self) {
        let n = self.n();
        loop {
            let top = self.layers.last().unwrap();
            if top.iter().all(|&k| k.count_ones() as usize == n) {
                break;
            }
            let mut seen = HashSet::new();
            let mut next = Vec::new();
            for &k in top {
                for x in 0..n {
                    if k >> x & 1 == 1 || k >> self.pow(x, self.p) & 1 == 0 || !self.normalises(x, k) {
                        continue;
                    }
                    let mut s = k;
                    let mut xi = 0;
                    for _ in 1..self.p {
                        xi = self.m(xi, x);
                        for h in bits(k) {
                            s |= 1u128 << self.m(xi, h);
                        }
                    }
                    if seen.insert(s) {
                        next.push(s);
                    }
                }
            }
            if next.is_empty() {
                break;
            }
            self.layers.push(next);
        }
    }

    pub fn all(&self) -> impl Iterator<Item = u128> + '_ {
        self.layers.iter().flatten().copied()
    }

    pub fn count(&self) -> usize {
        self.layers.iter().map(|l| l.len()).sum()
    }

    pub fn to_subgroup(&self, g: &PermGroup, set: u128) -> Subgroup {
        let mut v: Vec<u32> = bits(set).map(|i| self.elems[i]).collect();
        v.sort_unstable();
        Subgroup::from_sorted(v, g)
    }

    /// Conjugate by the local element `x`.
    fn conj(&self, x: usize, k: u128) -> u128 {
        let xi = self.inv[x] as usize;
        bits(k).fold(0u128, |s, h| s | 1u128 << self.m(self.m(x, h), xi))
    }

    /// One representative per `P`-conjugacy class, in lattice order.
    pub fn p_classes(&self) -> Vec<u128> {
        let mut seen = HashSet::new();
        let mut out = Vec::new();
        for k in self.all() {
            if seen.contains(&k) {
                continue;
            }
            out.push(k);
            let mut stack = vec![k];
            seen.insert(k);
            while let Some(s) = stack.pop() {
                for x in 0..self.n() {
                    let c = self.conj(x, s);
                    if seen.insert(c) {
                        stack.push(c);
                    }
                }
            }
        }
        out
    }
}

fn bits(k: u128) -> impl Iterator<Item = usize> {
    (0..128).filter(move |&i| k >> i & 1 == 1)
}

impl PermGroup {
    /// Every p-subgroup up to conjugacy, one representative per class,
    /// ordered by order and then by discovery in a fixed Sylow subgroup.
    pub fn p_subgroup_classes(&self, p: u32) -> Result<Vec<Subgroup>> {
        let syl = self.sylow(p)?;
        let lat = PSubgroupLattice::new(self, &syl, p)?;
        self.dedup_conjugates(lat.p_classes().into_iter().map(|k| lat.to_subgroup(self, k)))
    }

    /// Keep the first member of each `G`-conjugacy class.
    pub fn dedup_conjugates(&self, items: impl IntoIterator<Item = Subgroup>) -> Result<Vec<Subgroup>> {
        let mut buckets: HashMap<(usize, Vec<u32>), Vec<usize>> = HashMap::new();
        let mut reps: Vec<Subgroup> = Vec::new();
        for h in items {
            let key = (h.order(), h.class_profile(self));
            let bucket = buckets.entry(key).or_default();
            let mut dup = false;
            for &r in bucket.iter() {
                if self.is_conjugate_subgroup(&h, &reps[r])?.is_some() {
                    dup = true;
                    break;
                }
            }
            if !dup {
                bucket.push(reps.len());
                reps.push(h);
            }
        }
        Ok(reps)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::perm::Perm;

    #[test]
    fn d8_lattice() {
        let g = PermGroup::new(
            4,
            vec![Perm::from_cycles(4, &[&[1, 2, 3, 4]]).unwrap(), Perm::from_cycles(4, &[&[1, 3]]).unwrap()],
        )
        .unwrap();
        let w = g.whole().unwrap();
        let lat = PSubgroupLattice::new(&g, &w, 2).unwrap();
        // D8 has 10 subgroups: 1, five of order 2, three of order 4, itself
        assert_eq!(lat.count(), 10);
        assert_eq!(lat.layers.iter().map(|l| l.len()).collect::<Vec<_>>(), vec![1, 5, 3, 1]);
        // up to conjugacy: 1, Z, two non-central reflection classes, three of order 4, D8
        assert_eq!(g.p_subgroup_classes(2).unwrap().len(), 8);
    }

    #[test]
    fn cyclic_p_group() {
        let c: Vec<usize> = (1..=9).collect();
        let g = PermGroup::new(9, vec![Perm::from_cycles(9, &[&c]).unwrap()]).unwrap();
        assert_eq!(g.p_subgroup_classes(3).unwrap().len(), 3);
        assert_eq!(g.p_subgroup_classes(2).unwrap().len(), 1);
    }
}
