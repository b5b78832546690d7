use blockhh::fplinalg::{minimal_polynomial, Fp, FpMatrix, FpPoly, FpVec, Reducer, SUPPORTED_PRIMES};
use proptest::prelude::*;

fn f2_matrix() -> impl Strategy<Value = FpMatrix> {
    (1usize..=24, 1usize..=4096, any::<u64>()).prop_map(|(r, c, seed)| {
        let f = Fp::new(2).unwrap();
        let mut state = seed | 1;
        let rows = (0..r)
            .map(|_| {
                let bits: Vec<u8> = (0..c)
                    .map(|_| {
                        state ^= state << 13;
                        state ^= state >> 7;
                        state ^= state << 17;
                        (state & 1) as u8
                    })
                    .collect();
                FpVec::from_slice(f, &bits)
            })
            .collect();
        FpMatrix::from_rows(f, c, rows)
    })
}

fn prime() -> impl Strategy<Value = u32> {
    prop::sample::select(SUPPORTED_PRIMES.to_vec())
}

fn poly() -> impl Strategy<Value = FpPoly> {
    prime().prop_flat_map(|p| {
        prop::collection::vec(0..p as u8, 2..=9).prop_map(move |mut c| {
            let f = Fp::new(p).unwrap();
            if *c.last().unwrap() == 0 {
                *c.last_mut().unwrap() = 1;
            }
            FpPoly::new(f, c)
        })
    })
}

fn square() -> impl Strategy<Value = FpMatrix> {
    (prime(), 1usize..=6).prop_flat_map(|(p, n)| {
        prop::collection::vec(0..p as u8, n * n).prop_map(move |e| {
            let f = Fp::new(p).unwrap();
            let rows: Vec<Vec<u8>> = e.chunks(n).map(|r| r.to_vec()).collect();
            FpMatrix::from_u8(f, &rows)
        })
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn rank_nullity_over_f2(m in f2_matrix()) {
        let k = m.kernel_basis();
        prop_assert!(m.rank() <= m.nrows().min(m.ncols()));
        prop_assert_eq!(m.rank() + k.len(), m.ncols());
        for v in &k {
            prop_assert!(m.mul_vec(v).unwrap().is_zero());
        }
    }

    #[test]
    fn row_reduction_is_idempotent(m in square()) {
        let (rows, pivots) = m.rref();
        let again = FpMatrix::from_rows(m.field(), m.ncols(), rows.clone()).rref();
        prop_assert_eq!(again.1, pivots);
        prop_assert_eq!(again.0, rows);
    }

    #[test]
    fn reducer_agrees_with_rank(m in square()) {
        let mut r = Reducer::new(m.field(), m.ncols());
        for row in m.rows() {
            r.insert(row.clone());
        }
        prop_assert_eq!(r.rank(), m.rank());
    }

    #[test]
    fn factor_recombines(g in poly(), seed in any::<u64>()) {
        let f = g.field();
        let mut prod = FpPoly::one(f);
        let mut deg = 0;
        for (h, k) in g.factor(seed) {
            prop_assert!(h.is_irreducible());
            prop_assert_eq!(h.lead(), 1);
            for _ in 0..k {
                prod = prod.mul(&h);
            }
            deg += h.degree().unwrap() * k as usize;
        }
        prop_assert_eq!(deg, g.degree().unwrap());
        prop_assert_eq!(prod.scale(g.lead()), g);
    }

    #[test]
    fn product_degree(a in poly(), b in poly()) {
        prop_assume!(a.field().p() == b.field().p());
        prop_assert_eq!(a.mul(&b).degree().unwrap(), a.degree().unwrap() + b.degree().unwrap());
    }

    #[test]
    fn minimal_polynomial_is_minimal(m in square()) {
        let mu = minimal_polynomial(&m);
        prop_assert_eq!(mu.lead(), 1);
        prop_assert!(mu.eval_matrix(&m).is_zero());
        // every proper monic divisor divides mu / h for an irreducible factor h
        for (h, _) in mu.factor(7) {
            let q = mu.div_exact(&h);
            prop_assert!(!q.eval_matrix(&m).is_zero());
        }
    }
}

#[test]
fn small_cases() {
    let f = Fp::new(5).unwrap();
    assert!(FpMatrix::identity(f, 4).kernel_basis().is_empty());
    assert_eq!(FpMatrix::zero(f, 3, 3).kernel_basis().len(), 3);
    // x^2 - 1 = (x-1)(x+1) over F_5
    let g = FpPoly::new(f, vec![4, 0, 1]);
    let fs = g.factor(0);
    assert_eq!(fs.len(), 2);
    assert!(fs.iter().all(|(h, k)| h.degree() == Some(1) && *k == 1));
}
