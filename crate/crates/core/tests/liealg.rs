use blockhh::fplinalg::{Fp, FpMatrix, FpVec, Reducer};
use blockhh::liealg::LieAlgebraFp;
use proptest::prelude::*;

/// The Lie subalgebra of `gl_n` generated by some matrices, in the basis
/// kept by a reducer.
fn generated(f: Fp, n: usize, gens: Vec<FpMatrix>) -> LieAlgebraFp {
    let mut red = Reducer::new(f, n * n);
    let mut mats: Vec<FpMatrix> = Vec::new();
    let mut queue = gens;
    while let Some(m) = queue.pop() {
        if red.insert(m.flatten()) {
            for o in &mats {
                queue.push(m.mul(o).sub(&o.mul(&m)));
            }
            mats.push(m);
        }
    }
    let basis: Vec<FpMatrix> = red.rows().iter().map(|r| unflatten(f, n, r)).collect();
    LieAlgebraFp::from_brackets(f, basis.len(), |i, j| {
        let c = basis[i].mul(&basis[j]).sub(&basis[j].mul(&basis[i]));
        FpVec::from_slice(f, &red.coordinates(&c.flatten()).expect("closed under brackets"))
    })
}

fn unflatten(f: Fp, n: usize, v: &FpVec) -> FpMatrix {
    let rows: Vec<Vec<u8>> = (0..n).map(|i| (0..n).map(|j| v.get(i * n + j)).collect()).collect();
    FpMatrix::from_u8(f, &rows)
}

fn matrix_lie(upper: bool) -> impl Strategy<Value = LieAlgebraFp> {
    let dims = if upper { 3usize..=4 } else { 2usize..=2 };
    (prop::sample::select(vec![2u32, 3, 5, 7]), dims).prop_flat_map(move |(p, n)| {
        prop::collection::vec(prop::collection::vec(0..p as u8, n * n), 1..=3).prop_map(move |ms| {
            let f = Fp::new(p).unwrap();
            let gens = ms
                .into_iter()
                .map(|e| {
                    let mut m = FpMatrix::from_u8(f, &e.chunks(n).map(|r| r.to_vec()).collect::<Vec<_>>());
                    if upper {
                        for i in 0..n {
                            for j in 0..i {
                                m.set(i, j, 0);
                            }
                        }
                    }
                    m
                })
                .collect();
            generated(f, n, gens)
        })
    })
}

fn low_dim() -> impl Strategy<Value = LieAlgebraFp> {
    (prop::sample::select(vec![2u32, 3, 5, 11, 23]), 0usize..=2, any::<(u8, u8)>()).prop_map(|(p, n, (a, b))| {
        let f = Fp::new(p).unwrap();
        if n < 2 {
            return LieAlgebraFp::abelian(f, n);
        }
        LieAlgebraFp::from_brackets(f, 2, |_, _| FpVec::from_slice(f, &[a % p as u8, b % p as u8]))
    })
}

fn descends(s: &[usize]) -> bool {
    s.windows(2).all(|w| w[1] < w[0])
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn small_algebras_are_never_simple(l in low_dim()) {
        l.validate().unwrap();
        prop_assert!(l.is_solvable());
        prop_assert!(l.is_solvable() == !l.is_simple().unwrap());
        prop_assert!(l.classify_dim_le_2().is_ok());
    }

    #[test]
    fn gl2_subalgebras(l in matrix_lie(false)) {
        l.validate().unwrap();
        let simple = l.is_simple().unwrap();
        if simple {
            prop_assert_eq!(l.derived_series(), vec![l.dim()]);
            prop_assert!(!l.is_solvable());
        }
        let lcs = l.lower_central_series();
        prop_assert!(descends(&lcs));
        prop_assert!(descends(&l.derived_series()));
        if l.is_nilpotent() {
            prop_assert!(l.is_solvable());
        }
    }

    #[test]
    fn upper_triangular_is_solvable(l in matrix_lie(true)) {
        l.validate().unwrap();
        prop_assert!(l.is_solvable());
        prop_assert!(descends(&l.lower_central_series()));
        if l.dim() <= 4 {
            prop_assert!(!l.is_simple().unwrap());
        }
    }
}

#[test]
fn sl2_is_simple_in_odd_characteristic() {
    for p in [3u32, 5, 7, 11, 23] {
        let f = Fp::new(p).unwrap();
        let e = FpMatrix::from_u8(f, &[vec![0, 1], vec![0, 0]]);
        let h = FpMatrix::from_u8(f, &[vec![1, 0], vec![0, p as u8 - 1]]);
        let l = generated(f, 2, vec![e.clone(), e.transpose(), h]);
        assert_eq!(l.dim(), 3);
        assert!(l.is_simple().unwrap(), "p={p}");
        assert_eq!(l.derived_series(), vec![3]);
    }
    // in characteristic 2 it is nilpotent
    let f = Fp::new(2).unwrap();
    let e = FpMatrix::from_u8(f, &[vec![0, 1], vec![0, 0]]);
    let l = generated(f, 2, vec![e.clone(), e.transpose()]);
    assert_eq!(l.dim(), 3);
    assert!(l.is_nilpotent() && !l.is_simple().unwrap());
}

#[test]
fn jacobi_failure_is_reported() {
    // [e,f] = e+f, [f,g] = e, [e,g] = 0 over F_3
    let f = Fp::new(3).unwrap();
    let l = LieAlgebraFp::from_brackets(f, 3, |i, j| match (i, j) {
        (0, 1) => FpVec::from_slice(f, &[1, 1, 0]),
        (1, 2) => FpVec::from_slice(f, &[1, 0, 0]),
        _ => FpVec::zero(f, 3),
    });
    // [[e,f],g] + [[f,g],e] + [[g,e],f] = [e+f,g] + [e,e] + 0 = e
    assert!(l.validate().is_err());
}
