use super::field::Fp;
use super::vec::FpVec;

/// Streaming row reduction: rows are reduced against the pivot set and
/// either become a new pivot or are dropped. Only pivots are stored.
#[derive(Clone, Debug)]
pub struct Reducer {
    f: Fp,
    width: usize,
    /// Pivot rows in insertion order, each normalised to 1 at its pivot and
    /// zero at the pivots of earlier rows.
    rows: Vec<FpVec>,
    pivots: Vec<usize>,
    pivot_of_col: Vec<Option<usize>>,
}

impl Reducer {
    pub fn new(f: Fp, width: usize) -> Reducer {
        Reducer { f, width, rows: Vec::new(), pivots: Vec::new(), pivot_of_col: vec![None; width] }
    }

    pub fn width(&self) -> usize {
        self.width
    }

    pub fn rank(&self) -> usize {
        self.rows.len()
    }

    pub fn is_full(&self) -> bool {
        self.rows.len() == self.width
    }

    /// Reduce `v` in place against the current pivots.
    pub fn reduce(&self, v: &mut FpVec) {
        for (row, &c) in self.rows.iter().zip(&self.pivots) {
            let x = v.get(c);
            if x != 0 {
                v.axpy(self.f.neg(x), row);
            }
        }
    }

    /// Returns true if `v` enlarged the span.
    pub fn insert(&mut self, mut v: FpVec) -> bool {
        debug_assert_eq!(v.len(), self.width);
        if self.is_full() {
            return false;
        }
        self.reduce(&mut v);
        let Some(c) = v.first_nonzero() else { return false };
        let inv = self.f.inv(v.get(c));
        v.scale(inv);
        self.pivot_of_col[c] = Some(self.rows.len());
        self.rows.push(v);
        self.pivots.push(c);
        true
    }

    pub fn contains(&self, v: &FpVec) -> bool {
        let mut w = v.clone();
        self.reduce(&mut w);
        w.is_zero()
    }

    /// Coordinates of `v` against the pivot rows if `v` is in the span.
    pub fn coordinates(&self, v: &FpVec) -> Option<Vec<u8>> {
        let mut w = v.clone();
        let mut coords = vec![0u8; self.rows.len()];
        for (k, (row, &c)) in self.rows.iter().zip(&self.pivots).enumerate() {
            let x = w.get(c);
            if x != 0 {
                coords[k] = x;
                w.axpy(self.f.neg(x), row);
            }
        }
        w.is_zero().then_some(coords)
    }

    pub fn rows(&self) -> &[FpVec] {
        &self.rows
    }

    pub fn pivots(&self) -> &[usize] {
        &self.pivots
    }

    /// Reduced row echelon basis of the span, sorted by pivot column.
    pub fn rref(&self) -> (Vec<FpVec>, Vec<usize>) {
        let mut order: Vec<usize> = (0..self.rows.len()).collect();
        order.sort_by_key(|&k| self.pivots[k]);
        let mut rows: Vec<FpVec> = order.iter().map(|&k| self.rows[k].clone()).collect();
        let pivots: Vec<usize> = order.iter().map(|&k| self.pivots[k]).collect();
        // back substitution: clear every pivot column above and below
        for i in (0..rows.len()).rev() {
            let (head, tail) = rows.split_at_mut(i);
            let pr = &tail[0];
            let c = pivots[i];
            for r in head.iter_mut() {
                let x = r.get(c);
                if x != 0 {
                    r.axpy(self.f.neg(x), pr);
                }
            }
        }
        for i in 0..rows.len() {
            let (head, tail) = rows.split_at_mut(i + 1);
            let pr = &head[i];
            let c = pivots[i];
            for r in tail.iter_mut() {
                let x = r.get(c);
                if x != 0 {
                    r.axpy(self.f.neg(x), pr);
                }
            }
        }
        (rows, pivots)
    }

    /// Basis of the vectors orthogonal to every row: the null space of the
    /// matrix whose rows were inserted.
    pub fn kernel_basis(&self) -> Vec<FpVec> {
        let (rows, pivots) = self.rref();
        let mut is_pivot = vec![false; self.width];
        for &c in &pivots {
            is_pivot[c] = true;
        }
        let mut out = Vec::new();
        for free in (0..self.width).filter(|&c| !is_pivot[c]) {
            let mut v = FpVec::zero(self.f, self.width);
            v.set(free, 1);
            for (row, &c) in rows.iter().zip(&pivots) {
                let x = row.get(free);
                if x != 0 {
                    v.set(c, self.f.neg(x));
                }
            }
            out.push(v);
        }
        out
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rref_is_reduced() {
        let f = Fp::new(7).unwrap();
        let mut r = Reducer::new(f, 4);
        r.insert(FpVec::from_slice(f, &[0, 3, 1, 2]));
        r.insert(FpVec::from_slice(f, &[1, 1, 1, 1]));
        r.insert(FpVec::from_slice(f, &[1, 4, 2, 3]));
        assert_eq!(r.rank(), 2);
        let (rows, piv) = r.rref();
        assert_eq!(piv, vec![0, 1]);
        for (i, row) in rows.iter().enumerate() {
            for (j, &c) in piv.iter().enumerate() {
                assert_eq!(row.get(c), (i == j) as u8);
            }
        }
        for k in r.kernel_basis() {
            assert_eq!(FpVec::from_slice(f, &[0, 3, 1, 2]).dot(&k), 0);
            assert_eq!(FpVec::from_slice(f, &[1, 1, 1, 1]).dot(&k), 0);
        }
    }
}
