use super::field::Fp;

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub(crate) enum Store {
    /// `F_2`, 64 entries per word.
    Bits(Vec<u64>),
    /// Odd primes, one entry per byte, kept reduced.
    Bytes(Vec<u8>),
}

/// A dense vector over `F_p`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct FpVec {
    f: Fp,
    len: usize,
    pub(crate) store: Store,
}

impl FpVec {
    pub fn zero(f: Fp, len: usize) -> FpVec {
        let store = if f.p() == 2 { Store::Bits(vec![0; len.div_ceil(64)]) } else { Store::Bytes(vec![0; len]) };
        FpVec { f, len, store }
    }

    pub fn from_slice(f: Fp, v: &[u8]) -> FpVec {
        let mut out = FpVec::zero(f, v.len());
        for (i, &x) in v.iter().enumerate() {
            out.set(i, f.from_u64(x as u64));
        }
        out
    }

    pub fn unit(f: Fp, len: usize, i: usize) -> FpVec {
        let mut v = FpVec::zero(f, len);
        v.set(i, 1);
        v
    }

    pub fn field(&self) -> Fp {
        self.f
    }

    pub fn len(&self) -> usize {
        self.len
    }

    pub fn is_empty(&self) -> bool {
        self.len == 0
    }

    #[inline]
    pub fn get(&self, i: usize) -> u8 {
        match &self.store {
            Store::Bits(w) => (w[i >> 6] >> (i & 63) & 1) as u8,
            Store::Bytes(b) => b[i],
        }
    }

    #[inline]
    pub fn set(&mut self, i: usize, x: u8) {
        match &mut self.store {
            Store::Bits(w) => {
                if x & 1 == 1 {
                    w[i >> 6] |= 1 << (i & 63);
                } else {
                    w[i >> 6] &= !(1 << (i & 63));
                }
            }
            Store::Bytes(b) => b[i] = x,
        }
    }

    pub fn to_vec(&self) -> Vec<u8> {
        (0..self.len).map(|i| self.get(i)).collect()
    }

    pub fn is_zero(&self) -> bool {
        match &self.store {
            Store::Bits(w) => w.iter().all(|&x| x == 0),
            Store::Bytes(b) => b.iter().all(|&x| x == 0),
        }
    }

    pub fn first_nonzero(&self) -> Option<usize> {
        match &self.store {
            Store::Bits(w) => w
                .iter()
                .enumerate()
                .find(|(_, &x)| x != 0)
                .map(|(k, &x)| k * 64 + x.trailing_zeros() as usize),
            Store::Bytes(b) => b.iter().position(|&x| x != 0),
        }
    }

    /// Indices of nonzero entries.
    pub fn support(&self) -> Vec<usize> {
        (0..self.len).filter(|&i| self.get(i) != 0).collect()
    }

    /// `self += c * other`.
    #[inline]
    pub fn axpy(&mut self, c: u8, other: &FpVec) {
        debug_assert_eq!(self.len, other.len);
        if c == 0 {
            return;
        }
        match (&mut self.store, &other.store) {
            (Store::Bits(a), Store::Bits(b)) => {
                for (x, y) in a.iter_mut().zip(b) {
                    *x ^= y;
                }
            }
            (Store::Bytes(a), Store::Bytes(b)) => {
                let p = self.f.p() as u16;
                let c = c as u16;
                for (x, &y) in a.iter_mut().zip(b) {
                    *x = ((*x as u16 + c * y as u16) % p) as u8;
                }
            }
            _ => unreachable!("mixed storage"),
        }
    }

    pub fn add_assign(&mut self, other: &FpVec) {
        self.axpy(1, other);
    }

    pub fn sub_assign(&mut self, other: &FpVec) {
        let m = self.f.neg(1);
        self.axpy(m, other);
    }

    pub fn scale(&mut self, c: u8) {
        match &mut self.store {
            Store::Bits(w) => {
                if c & 1 == 0 {
                    w.iter_mut().for_each(|x| *x = 0);
                }
            }
            Store::Bytes(b) => {
                let f = self.f;
                b.iter_mut().for_each(|x| *x = f.mul(*x, c));
            }
        }
    }

    pub fn scaled(&self, c: u8) -> FpVec {
        let mut v = self.clone();
        v.scale(c);
        v
    }

    pub fn dot(&self, other: &FpVec) -> u8 {
        match (&self.store, &other.store) {
            (Store::Bits(a), Store::Bits(b)) => {
                (a.iter().zip(b).map(|(x, y)| (x & y).count_ones()).sum::<u32>() & 1) as u8
            }
            (Store::Bytes(a), Store::Bytes(b)) => {
                let p = self.f.p() as u64;
                (a.iter().zip(b).map(|(&x, &y)| x as u64 * y as u64).sum::<u64>() % p) as u8
            }
            _ => unreachable!("mixed storage"),
        }
    }

    /// Concatenate.
    pub fn concat(&self, other: &FpVec) -> FpVec {
        let mut v = FpVec::zero(self.f, self.len + other.len);
        for i in 0..self.len {
            v.set(i, self.get(i));
        }
        for i in 0..other.len {
            v.set(self.len + i, other.get(i));
        }
        v
    }

    pub fn slice(&self, start: usize, end: usize) -> FpVec {
        let mut v = FpVec::zero(self.f, end - start);
        for i in start..end {
            v.set(i - start, self.get(i));
        }
        v
    }
}
