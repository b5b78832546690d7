//! Sylow subgroups, p-cores, normal closures and conjugacy of subgroups.

use super::{log_p, p_valuation, PermGroup, StabChain, Subgroup};
use crate::error::{Error, Result};
use crate::perm::{conj_into, Perm};

/// The characteristic subgroups attached to a prime.
#[derive(Clone, Debug)]
pub struct CharacteristicP {
    pub o_p: Subgroup,
    pub o_p_prime: Subgroup,
    pub derived: Subgroup,
    pub frattini_rank: Option<u32>,
}

/// Normal closure of `seeds` under conjugation by `ambient`, computed on a
/// stabiliser chain without enumerating anything.
pub fn normal_closure(degree: usize, ambient: &[Perm], seeds: &[Perm]) -> (StabChain, Vec<Perm>) {
    let mut sc = StabChain::trivial(degree);
    let mut gens = Vec::new();
    let mut queue: Vec<Perm> = seeds.iter().rev().cloned().collect();
    while let Some(x) = queue.pop() {
        if sc.add(&x) {
            for g in ambient {
                queue.push(x.conj_by(g));
            }
            gens.push(x);
        }
    }
    (sc, gens)
}

/// `log_p [H : H' H^p]`, the dimension of `Hom(H, F_p)`.
pub fn hom_to_k_dim(h: &PermGroup, p: u32) -> u32 {
    if h.order() % p as u128 != 0 {
        return 0;
    }
    let gens = h.generators();
    let mut seeds = Vec::new();
    for (i, a) in gens.iter().enumerate() {
        seeds.push(a.pow(p as u64));
        for b in &gens[i + 1..] {
            seeds.push(Perm::commutator(a, b));
        }
    }
    let (sc, _) = normal_closure(h.degree(), gens, &seeds);
    log_p(h.order() / sc.order(), p).expect("quotient is a p-group")
}

impl PermGroup {
    /// A Sylow `p`-subgroup, grown from the trivial group by adjoining the
    /// least element of `N(S) \ S` whose `p`-th power lies in `S`.
    pub fn sylow(&self, p: u32) -> Result<Subgroup> {
        let t = self.elements()?;
        let target = (p as u128).pow(p_valuation(self.order(), p)) as usize;
        let mut s = Subgroup::from_sorted(vec![0], self);
        while s.order() < target {
            let gens = s.generator_perms(self);
            let found = crate::par::find_first(t.len(), |i| {
                let i = i as u32;
                if s.contains_idx(i) {
                    return false;
                }
                let x = t.perm(i as usize);
                let xp = x.pow(p as u64);
                if !t.index_of(xp.images()).is_some_and(|j| s.contains_idx(j)) {
                    return false;
                }
                let mut buf = vec![0u8; self.degree()];
                gens.iter().all(|h| {
                    conj_into(h.images(), x.images(), &mut buf);
                    t.index_of(&buf).is_some_and(|j| s.contains_idx(j))
                })
            });
            let x = found.expect("a p-subgroup below Sylow order has a larger normaliser p-part");
            let mut g2 = gens;
            g2.push(t.perm(x));
            s = self.subgroup(&g2)?;
        }
        Ok(s)
    }

    /// Largest normal subgroup contained in `h`.
    pub fn core(&self, h: &Subgroup) -> Subgroup {
        let mut c = h.clone();
        loop {
            let mut next = c.clone();
            for g in self.generators() {
                next = next.intersect(&c.conjugate(self, g), self);
            }
            if next.order() == c.order() {
                return c;
            }
            c = next;
        }
    }

    pub fn o_p(&self, p: u32) -> Result<Subgroup> {
        let s = self.sylow(p)?;
        Ok(self.core(&s))
    }

    /// Subgroup generated by the `p'`-elements.
    pub fn o_p_prime(&self, p: u32) -> Result<Subgroup> {
        let c = self.classes()?;
        let reps: Vec<Perm> = c
            .reps
            .iter()
            .zip(&c.elem_orders)
            .filter(|(_, &o)| o % p as u64 != 0)
            .map(|(&r, _)| self.element(r))
            .collect();
        let (_, gens) = normal_closure(self.degree(), self.generators(), &reps);
        self.subgroup(&gens)
    }

    pub fn derived_subgroup(&self) -> Result<Subgroup> {
        let gens = self.generators();
        let mut seeds = Vec::new();
        for (i, a) in gens.iter().enumerate() {
            for b in &gens[i + 1..] {
                seeds.push(Perm::commutator(a, b));
            }
        }
        let (_, ng) = normal_closure(self.degree(), gens, &seeds);
        self.subgroup(&ng)
    }

    /// Rank of `G / Phi(G)` for a `p`-group `G`.
    pub fn frattini_rank(&self, p: u32) -> Result<u32> {
        if log_p(self.order(), p).is_none() {
            return Err(Error::FrattiniRankOnNonPGroup);
        }
        Ok(hom_to_k_dim(self, p))
    }

    pub fn characteristic_p_data(&self, p: u32) -> Result<CharacteristicP> {
        Ok(CharacteristicP {
            o_p: self.o_p(p)?,
            o_p_prime: self.o_p_prime(p)?,
            derived: self.derived_subgroup()?,
            frattini_rank: self.frattini_rank(p).ok(),
        })
    }

    /// Some `g` with `g H1 g^-1 = H2`.
    pub fn is_conjugate_subgroup(&self, h1: &Subgroup, h2: &Subgroup) -> Result<Option<Perm>> {
        if h1.order() != h2.order() {
            return Ok(None);
        }
        if h1 == h2 || h1.elements() == h2.elements() {
            return Ok(Some(self.identity()));
        }
        if h1.class_profile(self) != h2.class_profile(self) {
            return Ok(None);
        }
        let cls = self.classes()?;
        let cents = self.class_centralizers()?;
        let t = self.elements()?;
        let g1 = h1.generator_perms(self);
        let idx1: Vec<u32> = h1.generators().to_vec();
        // pin the generator whose centraliser is smallest
        let (k, &h) = idx1
            .iter()
            .enumerate()
            .min_by_key(|(_, &x)| cents[cls.class_of(x)].order())
            .unwrap();
        let c = cls.class_of(h);
        let ch_inv = cls.conjugator(h, self.generators(), self.degree()).inv();
        let cent = &cents[c];
        let mut buf = vec![0u8; self.degree()];
        for &y in h2.elements() {
            if cls.class_of(y) != c {
                continue;
            }
            let cy = cls.conjugator(y, self.generators(), self.degree());
            for &z in cent.elements() {
                let g = cy.mul(&t.perm(z as usize)).mul(&ch_inv);
                let ok = g1.iter().enumerate().all(|(j, x)| {
                    if j == k {
                        return true;
                    }
                    conj_into(x.images(), g.images(), &mut buf);
                    t.index_of(&buf).is_some_and(|i| h2.contains_idx(i))
                });
                if ok {
                    return Ok(Some(g));
                }
            }
        }
        Ok(None)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn grp(n: usize, cycles: &[&[&[usize]]]) -> PermGroup {
        PermGroup::new(n, cycles.iter().map(|c| Perm::from_cycles(n, c).unwrap()).collect()).unwrap()
    }

    #[test]
    fn s3_cores() {
        let g = grp(3, &[&[&[1, 2]], &[&[1, 2, 3]]]);
        assert_eq!(g.o_p_prime(3).unwrap().order(), 6);
        assert_eq!(g.o_p_prime(2).unwrap().order(), 3);
        assert_eq!(hom_to_k_dim(&g, 2), 1);
        assert_eq!(hom_to_k_dim(&g, 3), 0);
        assert_eq!(g.o_p(3).unwrap().order(), 3);
        assert_eq!(g.o_p(2).unwrap().order(), 1);
        assert!(g.frattini_rank(2).is_err());
    }

    #[test]
    fn elementary_abelian_rank() {
        let g = grp(6, &[&[&[1, 2]], &[&[3, 4]], &[&[5, 6]]]);
        assert_eq!(g.frattini_rank(2).unwrap(), 3);
        let c4 = grp(4, &[&[&[1, 2, 3, 4]]]);
        assert_eq!(hom_to_k_dim(&c4, 2), 1);
    }

    #[test]
    fn sylows_are_conjugate() {
        let g = grp(4, &[&[&[1, 2]], &[&[1, 2, 3, 4]]]);
        let p = g.sylow(3).unwrap();
        assert_eq!(p.order(), 3);
        let q = g.subgroup(&[Perm::from_cycles(4, &[&[2, 3, 4]]).unwrap()]).unwrap();
        let c = g.is_conjugate_subgroup(&p, &q).unwrap().expect("Sylow conjugacy");
        assert_eq!(p.conjugate(&g, &c), q);
    }
}
