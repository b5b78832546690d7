//! Permutation groups: stabiliser chains, element tables, conjugacy classes,
//! local subgroups and p-subgroup lattices.

mod classes;
mod elements;
mod local;
mod psub;
mod stabchain;
mod subgroup;

use std::sync::OnceLock;

pub use classes::ClassTable;
pub use elements::ElementTable;
pub use local::{hom_to_k_dim, normal_closure, CharacteristicP};
pub use psub::PSubgroupLattice;
pub use stabchain::StabChain;
pub use subgroup::Subgroup;

use crate::error::{Error, Result};
use crate::perm::{compose_into, Perm};

pub const DEFAULT_CAP: u128 = 2_000_000;

/// Enumeration cap: `BLOCKHH_CAP` if set, else [`DEFAULT_CAP`].
pub fn default_cap() -> u128 {
    std::env::var("BLOCKHH_CAP")
        .ok()
        .and_then(|s| s.trim().parse().ok())
        .unwrap_or(DEFAULT_CAP)
}

/// A finitely generated permutation group with fill-once caches.
#[derive(Debug)]
pub struct PermGroup {
    degree: usize,
    gens: Vec<Perm>,
    chain: StabChain,
    cap: u128,
    elements: OnceLock<ElementTable>,
    classes: OnceLock<ClassTable>,
    centralizers: OnceLock<Vec<Subgroup>>,
}

impl Clone for PermGroup {
    fn clone(&self) -> Self {
        PermGroup {
            degree: self.degree,
            gens: self.gens.clone(),
            chain: self.chain.clone(),
            cap: self.cap,
            elements: self.elements.clone(),
            classes: self.classes.clone(),
            centralizers: self.centralizers.clone(),
        }
    }
}

impl PermGroup {
    pub fn new(degree: usize, gens: Vec<Perm>) -> Result<PermGroup> {
        for g in &gens {
            if g.degree() != degree {
                return Err(Error::InvalidPermutation(format!(
                    "generator {g} has degree {}, expected {degree}",
                    g.degree()
                )));
            }
        }
        let chain = StabChain::new(degree, &gens);
        Ok(PermGroup {
            degree,
            gens,
            chain,
            cap: default_cap(),
            elements: OnceLock::new(),
            classes: OnceLock::new(),
            centralizers: OnceLock::new(),
        })
    }

    pub fn trivial(degree: usize) -> PermGroup {
        PermGroup::new(degree, Vec::new()).unwrap()
    }

    pub fn with_cap(mut self, cap: u128) -> PermGroup {
        self.cap = cap;
        self
    }

    pub fn cap(&self) -> u128 {
        self.cap
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn generators(&self) -> &[Perm] {
        &self.gens
    }

    pub fn chain(&self) -> &StabChain {
        &self.chain
    }

    pub fn order(&self) -> u128 {
        self.chain.order()
    }

    pub fn contains(&self, g: &Perm) -> bool {
        self.chain.contains(g)
    }

    pub fn is_abelian(&self) -> bool {
        self.gens.iter().all(|a| self.gens.iter().all(|b| a.mul(b) == b.mul(a)))
    }

    pub fn identity(&self) -> Perm {
        Perm::identity(self.degree)
    }

    pub fn elements(&self) -> Result<&ElementTable> {
        if let Some(t) = self.elements.get() {
            return Ok(t);
        }
        if self.order() > self.cap {
            return Err(Error::CapExceeded { order: self.order(), cap: self.cap });
        }
        Ok(self.elements.get_or_init(|| ElementTable::build(&self.chain)))
    }

    pub fn classes(&self) -> Result<&ClassTable> {
        if let Some(c) = self.classes.get() {
            return Ok(c);
        }
        let t = self.elements()?;
        Ok(self.classes.get_or_init(|| ClassTable::build(t, &self.gens)))
    }

    /// Centralisers of the class representatives, in class order.
    pub fn class_centralizers(&self) -> Result<&[Subgroup]> {
        if let Some(c) = self.centralizers.get() {
            return Ok(c);
        }
        let reps = self.class_reps()?;
        let v = reps.iter().map(|r| self.centralizer(r)).collect::<Result<Vec<_>>>()?;
        Ok(self.centralizers.get_or_init(|| v))
    }

    pub fn index_of(&self, g: &Perm) -> Result<u32> {
        if !self.contains(g) {
            return Err(Error::NotAMember);
        }
        Ok(self.elements()?.index_of(g.images()).expect("members are enumerated"))
    }

    pub fn element(&self, i: u32) -> Perm {
        self.elements().expect("element table").perm(i as usize)
    }

    /// Index of the product of two enumerated elements.
    pub fn mul_idx(&self, a: u32, b: u32) -> u32 {
        let t = self.elements().expect("element table");
        let mut buf = vec![0u8; self.degree];
        compose_into(t.get(a as usize), t.get(b as usize), &mut buf);
        t.index_of(&buf).expect("closed under products")
    }

    pub fn inv_idx(&self, a: u32) -> u32 {
        let t = self.elements().expect("element table");
        let mut buf = vec![0u8; self.degree];
        crate::perm::invert_into(t.get(a as usize), &mut buf);
        t.index_of(&buf).expect("closed under inverses")
    }

    pub fn class_of(&self, g: &Perm) -> Result<usize> {
        let i = self.index_of(g)?;
        Ok(self.classes()?.class_of(i))
    }

    /// Class representatives as permutations, in class order.
    pub fn class_reps(&self) -> Result<Vec<Perm>> {
        let c = self.classes()?;
        Ok(c.reps.iter().map(|&r| self.element(r)).collect())
    }

    pub fn class_sizes(&self) -> Result<Vec<usize>> {
        Ok(self.classes()?.sizes())
    }

    /// The whole group as a subgroup handle.
    pub fn whole(&self) -> Result<Subgroup> {
        let n = self.elements()?.len() as u32;
        Ok(Subgroup::from_sorted((0..n).collect(), self))
    }

    /// Group generated by `gens` inside `self`.
    pub fn subgroup(&self, gens: &[Perm]) -> Result<Subgroup> {
        for g in gens {
            if !self.contains(g) {
                return Err(Error::NotAMember);
            }
        }
        let h = PermGroup::new(self.degree, gens.to_vec())?.with_cap(self.cap);
        let t = h.elements()?;
        let mut idx: Vec<u32> = (0..t.len())
            .map(|i| self.elements().map(|e| e.index_of(t.get(i)).unwrap()))
            .collect::<Result<_>>()?;
        idx.sort_unstable();
        Ok(Subgroup::from_sorted(idx, self))
    }

    /// `{h in G : hg = gh}`.
    pub fn centralizer(&self, g: &Perm) -> Result<Subgroup> {
        if !self.contains(g) {
            return Err(Error::NotAMember);
        }
        let t = self.elements()?;
        let gi = g.images();
        let idx = crate::par::filter_indices(t.len(), |h| {
            let x = t.get(h);
            (0..self.degree).all(|i| x[gi[i] as usize] == gi[x[i] as usize])
        });
        Ok(Subgroup::from_sorted(idx, self))
    }

    /// Centraliser of a set of elements.
    pub fn centralizer_of_set(&self, xs: &[Perm]) -> Result<Subgroup> {
        for g in xs {
            if !self.contains(g) {
                return Err(Error::NotAMember);
            }
        }
        let t = self.elements()?;
        let idx = crate::par::filter_indices(t.len(), |h| {
            let x = t.get(h);
            xs.iter().all(|g| {
                let gi = g.images();
                (0..self.degree).all(|i| x[gi[i] as usize] == gi[x[i] as usize])
            })
        });
        Ok(Subgroup::from_sorted(idx, self))
    }

    /// `{g in G : g H g^-1 = H}`.
    pub fn normalizer(&self, h: &Subgroup) -> Result<Subgroup> {
        if !h.is_subgroup_of(self) {
            return Err(Error::NotASubgroup);
        }
        let t = self.elements()?;
        let gens: Vec<Perm> = h.generator_perms(self);
        let idx = crate::par::filter_indices(t.len(), |gi| {
            let g = t.get(gi);
            let mut buf = vec![0u8; self.degree];
            gens.iter().all(|x| {
                crate::perm::conj_into(x.images(), g, &mut buf);
                t.index_of(&buf).is_some_and(|j| h.contains_idx(j))
            })
        });
        Ok(Subgroup::from_sorted(idx, self))
    }

    /// Subgroup generated by `gens` as a group in its own right.
    pub fn sub_perm_group(&self, gens: Vec<Perm>) -> PermGroup {
        PermGroup::new(self.degree, gens).unwrap().with_cap(self.cap)
    }
}

/// `log_p` of a power of `p`, or `None`.
pub fn log_p(mut n: u128, p: u32) -> Option<u32> {
    let mut k = 0;
    while n > 1 {
        if n % p as u128 != 0 {
            return None;
        }
        n /= p as u128;
        k += 1;
    }
    (n == 1).then_some(k)
}

/// Exponent of `p` in `n`.
pub fn p_valuation(mut n: u128, p: u32) -> u32 {
    let mut k = 0;
    while n > 0 && n % p as u128 == 0 {
        n /= p as u128;
        k += 1;
    }
    k
}

#[cfg(test)]
mod tests {
    use super::*;

    fn s(n: usize) -> PermGroup {
        let c: Vec<usize> = (1..=n).collect();
        PermGroup::new(
            n,
            vec![Perm::from_cycles(n, &[&[1, 2]]).unwrap(), Perm::from_cycles(n, &[&c]).unwrap()],
        )
        .unwrap()
    }

    #[test]
    fn elements_are_sorted_and_complete() {
        let g = s(4);
        let t = g.elements().unwrap();
        assert_eq!(t.len(), 24);
        for i in 1..t.len() {
            assert!(t.get(i - 1) < t.get(i));
        }
        assert!(t.perm(0).is_identity());
    }

    #[test]
    fn classes_of_s3() {
        let g = s(3);
        let mut sizes = g.class_sizes().unwrap();
        sizes.sort();
        assert_eq!(sizes, vec![1, 2, 3]);
        let c = g.classes().unwrap();
        for i in 0..6u32 {
            let k = c.conjugator(i, g.generators(), 3);
            let r = g.element(c.reps[c.class_of(i)]);
            assert_eq!(r.conj_by(&k), g.element(i));
        }
    }

    #[test]
    fn cap_is_enforced() {
        let g = s(6).with_cap(100);
        assert!(matches!(g.elements(), Err(Error::CapExceeded { order: 720, cap: 100 })));
    }

    #[test]
    fn valuations() {
        assert_eq!(log_p(64, 2), Some(6));
        assert_eq!(log_p(12, 2), None);
        assert_eq!(p_valuation(7920, 2), 4);
    }
}
