use super::center::CenterTable;
use crate::error::{Error, Result};
use crate::fplinalg::{Fp, FpVec};
use crate::perm::Perm;
use crate::permgroup::{PermGroup, Subgroup};

/// An element of `F_p G`, one coefficient per enumerated group element.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GroupElem {
    pub f: Fp,
    pub coeffs: Vec<u8>,
}

impl GroupElem {
    pub fn zero(f: Fp, n: usize) -> GroupElem {
        GroupElem { f, coeffs: vec![0; n] }
    }

    /// Expand a class-sum combination.
    pub fn from_central(g: &PermGroup, z: &CenterTable, v: &FpVec) -> Result<GroupElem> {
        let cls = g.classes()?;
        let n = g.elements()?.len();
        let mut out = GroupElem::zero(z.field(), n);
        for c in v.support() {
            for &x in cls.members(c) {
                out.coeffs[x as usize] = v.get(c);
            }
        }
        Ok(out)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(|&c| c == 0)
    }

    pub fn support(&self) -> Vec<u32> {
        (0..self.coeffs.len() as u32).filter(|&i| self.coeffs[i as usize] != 0).collect()
    }

    pub fn add(&self, o: &GroupElem) -> GroupElem {
        GroupElem { f: self.f, coeffs: self.coeffs.iter().zip(&o.coeffs).map(|(&a, &b)| self.f.add(a, b)).collect() }
    }

    pub fn mul(&self, g: &PermGroup, o: &GroupElem) -> GroupElem {
        let mut out = GroupElem::zero(self.f, self.coeffs.len());
        let sb = o.support();
        for a in self.support() {
            let ca = self.coeffs[a as usize];
            for &b in &sb {
                let c = g.mul_idx(a, b) as usize;
                out.coeffs[c] = self.f.add(out.coeffs[c], self.f.mul(ca, o.coeffs[b as usize]));
            }
        }
        out
    }

    pub fn is_fixed_by(&self, g: &PermGroup, x: &Perm) -> bool {
        let t = g.elements().expect("element table");
        self.support().iter().all(|&i| {
            let y = t.perm(i as usize).conj_by(x);
            self.coeffs[t.index_of(y.images()).unwrap() as usize] == self.coeffs[i as usize]
        })
    }

    /// Is it central? Checked against the generators of `g`.
    pub fn is_central(&self, g: &PermGroup) -> bool {
        g.generators().iter().all(|s| self.is_fixed_by(g, s))
    }
}

/// `Br_Q(a)`: truncate to the coefficients on `C_G(Q)`. The result is
/// indexed like the parent group, with zeros off the centraliser.
pub fn brauer_map(g: &PermGroup, a: &GroupElem, q: &Subgroup) -> Result<GroupElem> {
    let qgens = q.generator_perms(g);
    if !qgens.iter().all(|x| a.is_fixed_by(g, x)) {
        return Err(Error::NotQFixed);
    }
    let c = g.centralizer_of_set(&qgens)?;
    let mut out = GroupElem::zero(a.f, a.coeffs.len());
    for &x in c.elements() {
        out.coeffs[x as usize] = a.coeffs[x as usize];
    }
    Ok(out)
}

/// Re-index an element supported on a subgroup into the element table of
/// that subgroup taken as a group in its own right.
pub fn restrict_to(g: &PermGroup, a: &GroupElem, h: &PermGroup) -> Result<GroupElem> {
    let t = g.elements()?;
    let th = h.elements()?;
    let mut out = GroupElem::zero(a.f, th.len());
    for i in a.support() {
        let j = th.index_of(t.get(i as usize)).ok_or(Error::NotAMember)?;
        out.coeffs[j as usize] = a.coeffs[i as usize];
    }
    Ok(out)
}

/// Class-sum coordinates of a central element.
pub fn to_central(g: &PermGroup, a: &GroupElem) -> Result<FpVec> {
    let cls = g.classes()?;
    let mut v = FpVec::zero(a.f, cls.count());
    for c in 0..cls.count() {
        let m = cls.members(c);
        let x = a.coeffs[m[0] as usize];
        if m.iter().any(|&i| a.coeffs[i as usize] != x) {
            return Err(Error::PreconditionUnmet("element is not central".into()));
        }
        v.set(c, x);
    }
    Ok(v)
}

/// Order of a maximal p-subgroup `Q` with `Br_Q(e) != 0`, searched over
/// the given subgroup classes. For a central idempotent the Brauer map is
/// nonzero exactly when some class in the support meets `C_G(Q)`.
pub fn brauer_defect_order(g: &PermGroup, e: &FpVec, classes: &[Subgroup]) -> Result<usize> {
    let cls = g.classes()?;
    let support: Vec<usize> = e.support();
    let mut best = 1;
    for q in classes {
        let c = g.centralizer_of_set(&q.generator_perms(g))?;
        let hit = c.elements().iter().any(|&x| support.contains(&cls.class_of(x)));
        if hit {
            best = best.max(q.order());
        }
    }
    Ok(best)
}
