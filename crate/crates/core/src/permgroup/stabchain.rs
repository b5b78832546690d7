//! Stabiliser chain on the fixed base `0, 1, .., n-2` (Knuth's sifting table).

use crate::perm::Perm;

#[derive(Clone, Debug)]
pub struct StabChain {
    n: usize,
    /// `table[k][j]` fixes `0..k` and sends `k` to `j`.
    table: Vec<Vec<Option<Perm>>>,
    /// Strong generating set; `strong[i]` fixes the base points below `level[i]`.
    strong: Vec<Perm>,
    level: Vec<usize>,
}

impl StabChain {
    pub fn trivial(n: usize) -> StabChain {
        let levels = n.saturating_sub(1);
        let mut table = vec![vec![None; n]; levels];
        for (k, row) in table.iter_mut().enumerate() {
            row[k] = Some(Perm::identity(n));
        }
        StabChain { n, table, strong: Vec::new(), level: Vec::new() }
    }

    pub fn new(n: usize, gens: &[Perm]) -> StabChain {
        let mut sc = StabChain::trivial(n);
        for g in gens {
            sc.add(g);
        }
        sc
    }

    pub fn degree(&self) -> usize {
        self.n
    }

    pub fn levels(&self) -> usize {
        self.table.len()
    }

    /// Add a generator. Returns false if it was already a member.
    pub fn add(&mut self, g: &Perm) -> bool {
        assert_eq!(g.degree(), self.n);
        let (j, h) = self.sift(0, g.clone());
        if j == self.levels() {
            return false;
        }
        self.push_strong(j, h);
        self.complete(j);
        true
    }

    fn push_strong(&mut self, j: usize, h: Perm) {
        self.strong.push(h);
        self.level.push(j);
    }

    fn gens_at(&self, k: usize) -> Vec<Perm> {
        self.strong
            .iter()
            .zip(&self.level)
            .filter(|(_, &l)| l >= k)
            .map(|(s, _)| s.clone())
            .collect()
    }

    fn rebuild_orbit(&mut self, k: usize) {
        let gens = self.gens_at(k);
        let n = self.n;
        let row = &mut self.table[k];
        let mut queue: Vec<usize> = (0..n).filter(|&j| row[j].is_some()).collect();
        let mut head = 0;
        while head < queue.len() {
            let j = queue[head];
            head += 1;
            let u = row[j].clone().unwrap();
            for s in &gens {
                let t = s.apply(j);
                if row[t].is_none() {
                    row[t] = Some(s.mul(&u));
                    queue.push(t);
                }
            }
        }
    }

    /// Restore the Schreier condition on levels `top` and below, assuming
    /// deeper levels already satisfy it.
    fn complete(&mut self, top: usize) {
        let mut i = top as isize;
        'outer: while i >= 0 {
            let k = i as usize;
            self.rebuild_orbit(k);
            let gens = self.gens_at(k);
            for b in 0..self.n {
                let Some(u) = self.table[k][b].clone() else { continue };
                for s in &gens {
                    let su = s.mul(&u);
                    let w = self.table[k][su.apply(k)].as_ref().unwrap();
                    let schreier = w.inv().mul(&su);
                    let (j, h) = self.sift(k + 1, schreier);
                    if j < self.levels() {
                        self.push_strong(j, h);
                        i = j as isize;
                        continue 'outer;
                    }
                    if !h.is_identity() {
                        unreachable!("full base sifts to the identity");
                    }
                }
            }
            i -= 1;
        }
    }

    /// Sift from level `k`; returns the first level whose transversal fails
    /// (or `levels()` when the residue is the identity) and the residue.
    fn sift(&self, k: usize, mut g: Perm) -> (usize, Perm) {
        for l in k..self.levels() {
            match &self.table[l][g.apply(l)] {
                Some(t) => g = t.inv().mul(&g),
                None => return (l, g),
            }
        }
        (self.levels(), g)
    }

    pub fn contains(&self, g: &Perm) -> bool {
        g.degree() == self.n && self.sift(0, g.clone()).0 == self.levels()
    }

    pub fn orbit(&self, k: usize) -> Vec<usize> {
        (0..self.n).filter(|&j| self.table[k][j].is_some()).collect()
    }

    pub fn transversal(&self, k: usize, j: usize) -> Option<&Perm> {
        self.table[k][j].as_ref()
    }

    pub fn order(&self) -> u128 {
        self.table
            .iter()
            .map(|row| row.iter().filter(|x| x.is_some()).count() as u128)
            .product()
    }

    /// One past the last level with a nontrivial orbit: the base prefix
    /// that already determines an element.
    pub fn key_len(&self) -> usize {
        (0..self.levels())
            .rev()
            .find(|&k| self.table[k].iter().filter(|x| x.is_some()).count() > 1)
            .map_or(0, |k| k + 1)
    }

    pub fn strong_generators(&self) -> &[Perm] {
        &self.strong
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn symmetric_orders() {
        for n in 1..=7usize {
            let mut gens = Vec::new();
            if n >= 2 {
                gens.push(Perm::from_cycles(n, &[&[1, 2]]).unwrap());
                let c: Vec<usize> = (1..=n).collect();
                gens.push(Perm::from_cycles(n, &[&c]).unwrap());
            }
            let sc = StabChain::new(n, &gens);
            assert_eq!(sc.order(), (1..=n as u128).product::<u128>());
        }
    }

    #[test]
    fn membership() {
        let a = Perm::from_cycles(4, &[&[1, 2, 3]]).unwrap();
        let b = Perm::from_cycles(4, &[&[1, 2], &[3, 4]]).unwrap();
        let sc = StabChain::new(4, &[a, b]);
        assert_eq!(sc.order(), 12);
        assert!(!sc.contains(&Perm::from_cycles(4, &[&[1, 2]]).unwrap()));
        assert!(sc.contains(&Perm::from_cycles(4, &[&[2, 3, 4]]).unwrap()));
    }
}
