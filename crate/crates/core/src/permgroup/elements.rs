use std::cmp::Ordering;

use super::stabchain::StabChain;
use crate::perm::{compose_into, Perm};

/// Every element of a group as a flat, lexicographically sorted array of
/// image arrays.
#[derive(Clone, Debug)]
pub struct ElementTable {
    n: usize,
    key_len: usize,
    data: Vec<u8>,
}

impl ElementTable {
    pub fn build(sc: &StabChain) -> ElementTable {
        let n = sc.degree();
        let order = sc.order() as usize;
        let key_len = sc.key_len();
        let mut data = Vec::with_capacity(order * n);
        let levels: Vec<(usize, Vec<Perm>)> = (0..key_len)
            .map(|k| {
                let reps = sc.orbit(k).into_iter().map(|j| sc.transversal(k, j).unwrap().clone()).collect();
                (k, reps)
            })
            .collect();
        let id = Perm::identity(n);
        let mut bufs = vec![vec![0u8; n]; key_len + 1];
        bufs[0].copy_from_slice(id.images());
        walk(&levels, 0, &mut bufs, &mut data);
        debug_assert_eq!(data.len(), order * n);
        ElementTable { n, key_len, data }
    }

    pub fn len(&self) -> usize {
        if self.n == 0 {
            1
        } else {
            self.data.len() / self.n
        }
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    pub fn degree(&self) -> usize {
        self.n
    }

    #[inline]
    pub fn get(&self, i: usize) -> &[u8] {
        &self.data[i * self.n..(i + 1) * self.n]
    }

    pub fn perm(&self, i: usize) -> Perm {
        Perm::from_raw(self.get(i).to_vec())
    }

    /// Binary search on the base prefix. Only meaningful for group members.
    #[inline]
    pub fn index_of(&self, img: &[u8]) -> Option<u32> {
        let key = &img[..self.key_len];
        let (mut lo, mut hi) = (0usize, self.len());
        while lo < hi {
            let mid = (lo + hi) / 2;
            let m = &self.data[mid * self.n..mid * self.n + self.key_len];
            match m.cmp(key) {
                Ordering::Less => lo = mid + 1,
                Ordering::Greater => hi = mid,
                Ordering::Equal => {
                    return (self.get(mid) == img).then_some(mid as u32);
                }
            }
        }
        None
    }

    pub fn identity_index(&self) -> u32 {
        0
    }
}

fn walk(levels: &[(usize, Vec<Perm>)], depth: usize, bufs: &mut [Vec<u8>], out: &mut Vec<u8>) {
    if depth == levels.len() {
        out.extend_from_slice(&bufs[depth]);
        return;
    }
    let (k, reps) = &levels[depth];
    let mut order: Vec<(u8, usize)> = reps
        .iter()
        .enumerate()
        .map(|(r, t)| (bufs[depth][t.apply(*k)], r))
        .collect();
    order.sort_unstable();
    for (_, r) in order {
        let (head, tail) = bufs.split_at_mut(depth + 1);
        compose_into(&head[depth], reps[r].images(), &mut tail[0]);
        walk(levels, depth + 1, bufs, out);
    }
}
