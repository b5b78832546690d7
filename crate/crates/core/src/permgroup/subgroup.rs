use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use super::{PermGroup, StabChain};
use crate::perm::{conj_into, Perm};

/// A subgroup of an enumerated group, held as the sorted list of its
/// element indices in the parent table plus a small generating set.
#[derive(Clone, Debug)]
pub struct Subgroup {
    elems: Vec<u32>,
    gens: Vec<u32>,
    parent_order: u128,
}

impl PartialEq for Subgroup {
    fn eq(&self, other: &Self) -> bool {
        self.parent_order == other.parent_order && self.elems == other.elems
    }
}

impl Eq for Subgroup {}

impl std::hash::Hash for Subgroup {
    fn hash<H: std::hash::Hasher>(&self, state: &mut H) {
        self.elems.hash(state);
    }
}

impl Subgroup {
    /// `elems` must be sorted and closed.
    pub fn from_sorted(elems: Vec<u32>, g: &PermGroup) -> Subgroup {
        debug_assert!(elems.windows(2).all(|w| w[0] < w[1]));
        let gens = generating_set(&elems, g);
        Subgroup { elems, gens, parent_order: g.order() }
    }

    pub fn order(&self) -> usize {
        self.elems.len()
    }

    pub fn elements(&self) -> &[u32] {
        &self.elems
    }

    pub fn generators(&self) -> &[u32] {
        &self.gens
    }

    pub fn generator_perms(&self, g: &PermGroup) -> Vec<Perm> {
        self.gens.iter().map(|&i| g.element(i)).collect()
    }

    pub fn is_subgroup_of(&self, g: &PermGroup) -> bool {
        self.parent_order == g.order()
    }

    #[inline]
    pub fn contains_idx(&self, i: u32) -> bool {
        self.elems.binary_search(&i).is_ok()
    }

    pub fn contains(&self, g: &PermGroup, x: &Perm) -> bool {
        g.elements()
            .ok()
            .and_then(|t| t.index_of(x.images()))
            .is_some_and(|i| self.contains_idx(i))
    }

    pub fn is_trivial(&self) -> bool {
        self.elems.len() == 1
    }

    pub fn is_subset(&self, other: &Subgroup) -> bool {
        self.elems.len() <= other.elems.len() && self.elems.iter().all(|&x| other.contains_idx(x))
    }

    /// The subgroup as a standalone permutation group (same degree).
    pub fn as_group(&self, g: &PermGroup) -> PermGroup {
        g.sub_perm_group(self.generator_perms(g))
    }

    pub fn intersect(&self, other: &Subgroup, g: &PermGroup) -> Subgroup {
        let v: Vec<u32> = self.elems.iter().copied().filter(|&x| other.contains_idx(x)).collect();
        Subgroup::from_sorted(v, g)
    }

    /// `c H c^-1`.
    pub fn conjugate(&self, g: &PermGroup, c: &Perm) -> Subgroup {
        let t = g.elements().expect("element table");
        let mut buf = vec![0u8; g.degree()];
        let mut v: Vec<u32> = self
            .elems
            .iter()
            .map(|&x| {
                conj_into(t.get(x as usize), c.images(), &mut buf);
                t.index_of(&buf).expect("conjugate is a member")
            })
            .collect();
        v.sort_unstable();
        let gens: Vec<u32> = self
            .gens
            .iter()
            .map(|&x| {
                conj_into(t.get(x as usize), c.images(), &mut buf);
                t.index_of(&buf).unwrap()
            })
            .collect();
        Subgroup { elems: v, gens, parent_order: self.parent_order }
    }

    pub fn is_normal_in(&self, g: &PermGroup) -> bool {
        let t = g.elements().expect("element table");
        let mut buf = vec![0u8; g.degree()];
        g.generators().iter().all(|s| {
            self.gens.iter().all(|&x| {
                conj_into(t.get(x as usize), s.images(), &mut buf);
                t.index_of(&buf).is_some_and(|j| self.contains_idx(j))
            })
        })
    }

    pub fn is_p_group(&self, p: u32) -> bool {
        super::log_p(self.order() as u128, p).is_some()
    }

    /// Sorted multiset of parent class ids; a conjugacy invariant.
    pub fn class_profile(&self, g: &PermGroup) -> Vec<u32> {
        let c = g.classes().expect("class table");
        let mut v: Vec<u32> = self.elems.iter().map(|&x| c.class_of(x) as u32).collect();
        v.sort_unstable();
        v
    }
}

/// A few elements generating the closed set `elems`, chosen by a fixed-seed
/// random walk so the result is reproducible.
fn generating_set(elems: &[u32], g: &PermGroup) -> Vec<u32> {
    if elems.len() <= 1 {
        return Vec::new();
    }
    let mut sc = StabChain::trivial(g.degree());
    let mut rng = ChaCha8Rng::seed_from_u64(elems.len() as u64 ^ 0x5eed);
    let mut gens = Vec::new();
    let target = elems.len() as u128;
    let mut tries = 0usize;
    while sc.order() < target {
        let i = if tries < 64 {
            elems[rng.gen_range(1..elems.len())]
        } else {
            // exhaustive fallback, reached only in pathological cases
            elems[(tries - 64) % (elems.len() - 1) + 1]
        };
        tries += 1;
        if sc.add(&g.element(i)) {
            gens.push(i);
        }
    }
    assert_eq!(sc.order(), target, "index set is not closed under products");
    gens.sort_unstable();
    gens
}
