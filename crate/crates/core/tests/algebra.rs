use blockhh::derivations::{derivation_space, equivariant_fixed_hh1, DerivationMap};
use blockhh::engine::{dim_hh1_group, lookup, SMALL_GROUPS};
use blockhh::fplinalg::{FpMatrix, FpVec};
use blockhh::groupalgebra::{
    block_idempotents, brauer_map, center_table, check_idempotents, AlgebraPresentation, GroupElem, DEFAULT_SEED,
};
use blockhh::permgroup::p_valuation;
use blockhh::PermGroup;
use proptest::prelude::*;

fn primes_dividing(n: u128) -> Vec<u32> {
    [2u32, 3, 5, 7, 11].into_iter().filter(|&p| n % p as u128 == 0).collect()
}

fn catalog() -> Vec<(String, PermGroup)> {
    let mut names: Vec<&str> = SMALL_GROUPS.to_vec();
    names.extend(["A5", "S3xA4", "C2xS5"]);
    names.into_iter().map(|n| (n.to_string(), lookup(n).unwrap().group)).collect()
}

/// Every computed decomposition satisfies the axioms, both in class-sum
/// coordinates and expanded in the group algebra.
#[test]
fn idempotent_suite() {
    for (name, g) in catalog() {
        for p in primes_dividing(g.order()).into_iter().chain([5]) {
            let b = block_idempotents(&g, p, DEFAULT_SEED).unwrap();
            assert!(check_idempotents(&b.center, &b.blocks), "{name} p={p}");
            assert_eq!(b.blocks.iter().filter(|x| x.principal).count(), 1);
            assert_eq!(b.center.augmentation(&b.blocks[0].idempotent), 1, "{name} p={p}");
            assert_eq!(b.blocks.iter().map(|x| x.fp_dimension).sum::<u128>(), g.order(), "{name} p={p}");
            if g.order() > 100 {
                continue;
            }
            let es: Vec<GroupElem> =
                b.blocks.iter().map(|x| GroupElem::from_central(&g, &b.center, &x.idempotent).unwrap()).collect();
            let mut sum = GroupElem::zero(es[0].f, es[0].coeffs.len());
            for (i, e) in es.iter().enumerate() {
                assert!(e.is_central(&g));
                assert_eq!(&e.mul(&g, e), e);
                for f in &es[i + 1..] {
                    assert!(e.mul(&g, f).is_zero());
                }
                sum = sum.add(e);
            }
            assert_eq!(sum.support(), vec![g.elements().unwrap().identity_index()]);
            assert_eq!(sum.coeffs[g.elements().unwrap().identity_index() as usize], 1);
        }
    }
}

#[test]
fn principal_defect_group_is_sylow() {
    for (name, g) in catalog() {
        for p in primes_dividing(g.order()) {
            let b = block_idempotents(&g, p, DEFAULT_SEED).unwrap();
            let d = g.defect_group(b.principal(), p).unwrap();
            let s = g.sylow(p).unwrap();
            assert_eq!(b.principal().defect_exponent, p_valuation(g.order(), p));
            assert!(g.is_conjugate_subgroup(&d, &s).unwrap().is_some(), "{name} p={p}");
        }
    }
}

#[test]
fn center_structure_constants() {
    for (name, g) in catalog().into_iter().filter(|(_, g)| g.order() <= 100) {
        let z = center_table(&g, 2).unwrap();
        let k = g.classes().unwrap().count();
        assert_eq!(z.dim(), k, "{name}");
        for i in 0..k {
            for j in 0..k {
                for l in 0..k {
                    assert_eq!(z.count(i, j, l), z.count(j, i, l), "{name}");
                }
            }
        }
    }
}

#[test]
fn block_algebras_are_unital_and_associative() {
    for (name, p) in [("S3", 2), ("S4", 3), ("A5", 2), ("A5", 5), ("D10", 2), ("C3xS3", 2), ("C2xA4", 3)] {
        let g = lookup(name).unwrap().group;
        let b = block_idempotents(&g, p, DEFAULT_SEED).unwrap();
        let mut dims = 0;
        for blk in &b.blocks {
            let a = AlgebraPresentation::block_algebra(&g, &b.center, blk).unwrap();
            assert!(a.check_identity() && a.check_associative(), "{name} p={p}");
            assert_eq!(a.dim() as u128, blk.fp_dimension);
            dims += a.dim();
        }
        assert_eq!(dims as u128, g.order());
    }
}

fn q_fixed(g: &PermGroup, qgens: &[blockhh::Perm], p: u32, coeffs: &[u8]) -> GroupElem {
    // constant on orbits of conjugation by Q
    let t = g.elements().unwrap();
    let n = t.len();
    let mut orbit = vec![usize::MAX; n];
    let mut next = 0;
    for s in 0..n {
        if orbit[s] != usize::MAX {
            continue;
        }
        let mut stack = vec![s];
        orbit[s] = next;
        while let Some(i) = stack.pop() {
            for x in qgens {
                let j = t.index_of(t.perm(i).conj_by(x).images()).unwrap() as usize;
                if orbit[j] == usize::MAX {
                    orbit[j] = next;
                    stack.push(j);
                }
            }
        }
        next += 1;
    }
    let f = blockhh::fplinalg::Fp::new(p).unwrap();
    GroupElem { f, coeffs: orbit.iter().map(|&o| coeffs[o % coeffs.len()] % p as u8).collect() }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(24))]

    #[test]
    fn brauer_map_is_multiplicative(
        gi in 0usize..4,
        qi in any::<prop::sample::Index>(),
        a in prop::collection::vec(any::<u8>(), 1..40),
        b in prop::collection::vec(any::<u8>(), 1..40),
    ) {
        let (name, p) = [("S4", 2), ("A4", 2), ("S3xS3", 3), ("D12", 2)][gi];
        let g = lookup(name).unwrap().group;
        let classes = g.p_subgroup_classes(p).unwrap();
        let q = &classes[qi.index(classes.len())];
        let qgens = q.generator_perms(&g);
        let a = q_fixed(&g, &qgens, p, &a);
        let b = q_fixed(&g, &qgens, p, &b);
        let ab = a.mul(&g, &b);
        prop_assert!(ab.is_fixed_by(&g, &qgens.first().cloned().unwrap_or(g.identity())));
        let lhs = brauer_map(&g, &ab, q).unwrap();
        let rhs = brauer_map(&g, &a, q).unwrap().mul(&g, &brauer_map(&g, &b, q).unwrap());
        prop_assert_eq!(lhs, rhs);
    }

    #[test]
    fn derivations_and_p_powers(gi in 0usize..7, coeffs in prop::collection::vec(any::<u8>(), 64)) {
        let (name, p) = [("C2^2", 2), ("S3", 3), ("S3", 2), ("D8", 2), ("C9", 3), ("A4", 2), ("C5", 5)][gi];
        let g = lookup(name).unwrap().group;
        let a = AlgebraPresentation::group_algebra(&g, p).unwrap();
        let basis = derivation_space(&a).unwrap();
        for d in &basis {
            prop_assert!(d.is_derivation(&a));
        }
        let mut d = DerivationMap::zero(&a);
        for (b, &c) in basis.iter().zip(coeffs.iter().cycle()) {
            d = d.add(&b.scale(c % p as u8));
        }
        prop_assert!(d.is_derivation(&a));
        prop_assert!(d.p_power().is_derivation(&a));
    }
}

/// Frobenius actions on elementary abelian `P`: the fixed points of `E`
/// on `HH^1(kP)` against the centraliser decomposition of `P:E`.
#[test]
fn frobenius_fixed_points_match_semidirect_products() {
    let cases: Vec<(u32, Vec<usize>, Vec<Vec<Vec<usize>>>, &str)> = vec![
        (2, vec![2, 2], vec![vec![vec![1, 1], vec![1, 0]]], "A4"),
        (3, vec![3, 3], vec![vec![vec![0, 2], vec![1, 0]], vec![vec![2, 1], vec![1, 1]]], "C3^2:Q8"),
        (3, vec![3, 3], vec![vec![vec![0, 2], vec![1, 0]]], "C3^2:C4"),
        (3, vec![3], vec![vec![vec![2]]], "S3"),
        (5, vec![5], vec![vec![vec![4]]], "D10"),
        (5, vec![5], vec![vec![vec![2]]], "C5:C4"),
        (7, vec![7], vec![vec![vec![2]]], "C7:C3"),
        (11, vec![11], vec![vec![vec![3]]], "C11:C5"),
    ];
    for (p, orders, images, name) in cases {
        let a = AlgebraPresentation::abelian_group(p, &orders).unwrap();
        let action: Vec<FpMatrix> = images.iter().map(|m| a.abelian_automorphism(&orders, m)).collect();
        let eq = equivariant_fixed_hh1(&a, &action).unwrap();
        for d in &eq.fixed.reps {
            assert!(eq.is_fixed(d), "{name}");
            for phi in &action {
                let inv = phi.inverse().unwrap();
                let moved = d.conjugate(phi, &inv);
                assert!(eq.full.is_inner(&moved.add(&d.scale(p as u8 - 1))), "{name}");
            }
        }
        let h = lookup(name).unwrap().group;
        assert_eq!(eq.group_order as u128, h.order() / a.dim() as u128);
        assert_eq!(eq.fixed.dim(), dim_hh1_group(&h, p).unwrap(), "{name}");
    }
}

#[test]
fn unit_vectors_parse() {
    let a = AlgebraPresentation::abelian_group(3, &[3]).unwrap();
    let v = a.parse("1+2x^2").unwrap();
    assert_eq!(v, FpVec::from_slice(a.field(), &[1, 0, 2]));
}
