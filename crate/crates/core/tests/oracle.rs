use blockhh::derivations::hh1_lie_algebra;
use blockhh::engine::{dim_hh1_group, group_report, hom_to_k_dim, lookup, Engine, Policy, Strategy, SMALL_GROUPS};
use blockhh::groupalgebra::{AlgebraPresentation, DEFAULT_SEED};
use proptest::prelude::*;

fn primes_dividing(n: u128) -> Vec<u32> {
    [2u32, 3, 5, 7, 11].into_iter().filter(|&p| n % p as u128 == 0).collect()
}

/// Centraliser decomposition against the derivation solver on the whole
/// group algebra, with the Lie structure validated on the way.
#[test]
fn centraliser_sum_matches_solver() {
    let mut checked = 0;
    for name in SMALL_GROUPS {
        let g = lookup(name).unwrap().group;
        assert!(g.order() <= 100);
        for p in primes_dividing(g.order()) {
            let a = AlgebraPresentation::group_algebra(&g, p).unwrap();
            let h = hh1_lie_algebra(&a).unwrap();
            h.lie.validate().unwrap();
            for d in &h.reps {
                assert!(d.is_derivation(&a), "{name} p={p}");
            }
            assert_eq!(dim_hh1_group(&g, p).unwrap(), h.dim(), "{name} p={p}");
            checked += 1;
        }
    }
    assert!(checked >= 40);
    assert_eq!(dim_hh1_group(&lookup("trivial").unwrap().group, 2).unwrap(), 0);
}

#[test]
fn block_dims_add_up() {
    let mut names: Vec<&str> = SMALL_GROUPS.to_vec();
    names.extend(["A5", "S5", "C2xS5", "S3xA4"]);
    for name in names {
        let e = lookup(name).unwrap();
        for p in primes_dividing(e.group.order()) {
            let r = group_report(&e, p, &Policy::default(), DEFAULT_SEED).unwrap();
            let dims = r.k_dims();
            assert!(dims.iter().all(|d| d.is_some()), "{name} p={p}: {dims:?}");
            assert_eq!(dims.iter().map(|d| d.unwrap()).sum::<usize>(), r.total.unwrap(), "{name} p={p}");
            assert_eq!(r.consistent, Some(true));
        }
    }
}

/// Whenever two strategies apply to one block, they agree.
#[test]
fn strategies_agree() {
    let mut names: Vec<&str> = SMALL_GROUPS.iter().copied().filter(|n| *n != "trivial").collect();
    names.extend(["A5", "S3xA4"]);
    for name in names {
        let e = lookup(name).unwrap();
        for p in primes_dividing(e.group.order()) {
            let eng = Engine::new(&e, p, Policy::default(), DEFAULT_SEED).unwrap();
            for i in 0..eng.blocks.blocks.len() {
                let ok: Vec<(Strategy, usize)> =
                    eng.all_strategies(i).into_iter().filter_map(|(s, r)| r.ok().map(|d| (s, d.dim))).collect();
                assert!(!ok.is_empty(), "{name} p={p} block {i}");
                assert!(ok.iter().all(|x| x.1 == ok[0].1), "{name} p={p} block {i}: {ok:?}");
            }
        }
    }
}

#[test]
fn kunneth_against_solver_on_products() {
    for (name, want) in [("C2xS5", vec![22, 8]), ("S3xA4", vec![12, 2]), ("C2^2xS3", vec![24, 8])] {
        let e = lookup(name).unwrap();
        let eng = Engine::new(&e, 2, Policy::default(), DEFAULT_SEED).unwrap();
        assert_eq!(eng.blocks.blocks.len(), 2);
        for (i, &w) in want.iter().enumerate() {
            let k = eng.attempt(Strategy::Kunneth, i, &[]).unwrap().dim;
            let s = eng.attempt(Strategy::Solver, i, &[]).unwrap().dim;
            assert_eq!((k, s), (w, w), "{name} block {i}");
        }
    }
    assert_eq!(dim_hh1_group(&lookup("C2xS5").unwrap().group, 2).unwrap(), 30);
}

#[test]
fn hom_dims() {
    for (name, p, d) in [("C4", 2, 1), ("S3", 3, 0), ("C2^2", 2, 2), ("S4", 2, 1), ("C3^2:Q8", 2, 2)] {
        assert_eq!(hom_to_k_dim(&lookup(name).unwrap().group, p), d, "{name}");
    }
}

const FACTORS: &[&str] = &["C2", "C3", "C4", "C2^2", "S3", "D8", "Q8", "A4", "C6"];

proptest! {
    #![proptest_config(ProptestConfig::with_cases(24))]

    /// HH^1(k(A x B)) = HH^1(kA) Z(kB) + Z(kA) HH^1(kB).
    #[test]
    fn kunneth_total(a in prop::sample::select(FACTORS), b in prop::sample::select(FACTORS), p in prop::sample::select(vec![2u32, 3])) {
        let ga = lookup(a).unwrap().group;
        let gb = lookup(b).unwrap().group;
        let g = lookup(&format!("{a}x{b}")).unwrap().group;
        let (ka, kb) = (ga.classes().unwrap().count(), gb.classes().unwrap().count());
        let (ha, hb) = (dim_hh1_group(&ga, p).unwrap(), dim_hh1_group(&gb, p).unwrap());
        prop_assert_eq!(dim_hh1_group(&g, p).unwrap(), ha * kb + ka * hb);
    }
}
