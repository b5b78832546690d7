use super::elements::ElementTable;
use crate::perm::{conj_into, Perm};

/// Conjugacy classes of an enumerated group.
#[derive(Clone, Debug)]
pub struct ClassTable {
    /// Lowest element index in each class, ascending.
    pub reps: Vec<u32>,
    class_of: Vec<u32>,
    /// Element indices grouped by class; class `c` is `members[offsets[c]..offsets[c+1]]`.
    members: Vec<u32>,
    offsets: Vec<usize>,
    /// `parent[i] = (j, s)` with element `i = s j s^-1` for generator `s`; the BFS tree.
    parent: Vec<(u32, u8)>,
    pub elem_orders: Vec<u64>,
}

impl ClassTable {
    pub fn build(table: &ElementTable, gens: &[Perm]) -> ClassTable {
        let n = table.len();
        let d = table.degree();
        let mut class_of = vec![u32::MAX; n];
        let mut parent = vec![(u32::MAX, 0u8); n];
        let mut reps = Vec::new();
        let mut buf = vec![0u8; d];
        let mut queue: Vec<u32> = Vec::new();
        let mut by_class: Vec<Vec<u32>> = Vec::new();
        for start in 0..n {
            if class_of[start] != u32::MAX {
                continue;
            }
            let c = reps.len() as u32;
            reps.push(start as u32);
            class_of[start] = c;
            queue.clear();
            queue.push(start as u32);
            let mut head = 0;
            while head < queue.len() {
                let x = queue[head];
                head += 1;
                for (s, g) in gens.iter().enumerate() {
                    conj_into(table.get(x as usize), g.images(), &mut buf);
                    let y = table.index_of(&buf).expect("conjugate lies in the group") as usize;
                    if class_of[y] == u32::MAX {
                        class_of[y] = c;
                        parent[y] = (x, s as u8);
                        queue.push(y as u32);
                    }
                }
            }
            let mut m = queue.clone();
            m.sort_unstable();
            by_class.push(m);
        }
        let mut members = Vec::with_capacity(n);
        let mut offsets = vec![0];
        for m in &by_class {
            members.extend_from_slice(m);
            offsets.push(members.len());
        }
        let elem_orders = reps.iter().map(|&r| table.perm(r as usize).order()).collect();
        ClassTable { reps, class_of, members, offsets, parent, elem_orders }
    }

    pub fn count(&self) -> usize {
        self.reps.len()
    }

    #[inline]
    pub fn class_of(&self, i: u32) -> usize {
        self.class_of[i as usize] as usize
    }

    pub fn members(&self, c: usize) -> &[u32] {
        &self.members[self.offsets[c]..self.offsets[c + 1]]
    }

    pub fn size(&self, c: usize) -> usize {
        self.offsets[c + 1] - self.offsets[c]
    }

    pub fn sizes(&self) -> Vec<usize> {
        (0..self.count()).map(|c| self.size(c)).collect()
    }

    /// Some `c` with `c * rep * c^-1 = element i`, where `rep` is the class representative.
    pub fn conjugator(&self, i: u32, gens: &[Perm], degree: usize) -> Perm {
        let mut c = Perm::identity(degree);
        let mut x = i;
        let target = self.reps[self.class_of(i)];
        while x != target {
            let (px, s) = self.parent[x as usize];
            c = c.mul(&gens[s as usize]);
            x = px;
        }
        c
    }
}
