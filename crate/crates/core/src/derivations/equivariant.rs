use std::collections::{HashSet, VecDeque};

use super::solver::{hh1_from_solver, DerivationSolver, HH1Presentation};
use super::DerivationMap;
use crate::error::{Error, Result};
use crate::fplinalg::{FpMatrix, FpVec, Reducer};
use crate::groupalgebra::AlgebraPresentation;

/// Groups generated by the action larger than this are rejected.
const ACTION_ORDER_CAP: usize = 10_000;

/// `HH^1(A)^E` together with how it was found.
#[derive(Clone, Debug)]
pub struct EquivariantHH1 {
    /// The whole of `HH^1(A)`.
    pub full: HH1Presentation,
    /// The fixed-point subalgebra; its first `trace_rank` basis elements are
    /// relative traces of the basis of `full`.
    pub fixed: HH1Presentation,
    pub group_order: usize,
    pub trace_rank: usize,
    /// Do the relative traces span the fixed points?
    pub traces_span: bool,
    /// The action of each element of `E` on `HH^1(A)`, in `full` coordinates.
    action: Vec<FpMatrix>,
}

impl EquivariantHH1 {
    /// `Tr_1^E` of a derivation, as a derivation.
    pub fn relative_trace(&self, d: &DerivationMap) -> DerivationMap {
        let f = self.full.lie.field();
        let c = FpVec::from_slice(f, &self.full.project(d));
        let t = self.trace_coords(&c);
        self.full.combine(&t.to_vec())
    }

    fn trace_coords(&self, c: &FpVec) -> FpVec {
        let mut t = FpVec::zero(c.field(), c.len());
        for a in &self.action {
            t.add_assign(&a.mul_vec(c).unwrap());
        }
        t
    }

    /// Is the class of `d` fixed by every element of `E`?
    pub fn is_fixed(&self, d: &DerivationMap) -> bool {
        let f = self.full.lie.field();
        let c = FpVec::from_slice(f, &self.full.project(d));
        self.action.iter().all(|a| a.mul_vec(&c).unwrap() == c)
    }
}

fn closure(gens: &[FpMatrix]) -> Result<Vec<FpMatrix>> {
    let f = gens[0].field();
    let id = FpMatrix::identity(f, gens[0].nrows());
    let mut seen: HashSet<Vec<Vec<u8>>> = HashSet::from([id.to_u8()]);
    let mut out = vec![id.clone()];
    let mut queue = VecDeque::from([id]);
    while let Some(x) = queue.pop_front() {
        for g in gens {
            let y = x.mul(g);
            if seen.insert(y.to_u8()) {
                if out.len() >= ACTION_ORDER_CAP {
                    return Err(Error::CapExceeded { order: out.len() as u128 + 1, cap: ACTION_ORDER_CAP as u128 });
                }
                out.push(y.clone());
                queue.push_back(y);
            }
        }
    }
    Ok(out)
}

/// Fixed points of the action of the group `E` generated by the given
/// algebra automorphisms on `HH^1(A)`, where `z` acts by `D -> z D z^-1`.
pub fn equivariant_fixed_hh1(a: &AlgebraPresentation, action: &[FpMatrix]) -> Result<EquivariantHH1> {
    let f = a.field();
    for phi in action {
        if !a.is_automorphism(phi) {
            return Err(Error::NotAnAutomorphism);
        }
    }
    let group = if action.is_empty() { vec![FpMatrix::identity(f, a.dim())] } else { closure(action)? };
    let order = group.len();
    if order % f.p() as usize == 0 {
        return Err(Error::OrderDivisibleByP { order, p: f.p() });
    }
    let solver = DerivationSolver::new(a)?;
    let full = hh1_from_solver(&solver)?;
    let h = full.dim();
    let act: Vec<FpMatrix> = crate::par::map_slice(&group, |z| {
        let zi = z.inverse().expect("automorphism");
        let cols: Vec<FpVec> = full
            .reps
            .iter()
            .map(|d| FpVec::from_slice(f, &full.project(&d.conjugate(z, &zi))))
            .collect();
        FpMatrix::from_cols(f, h, &cols)
    });

    // fixed points: kernel of (A_z - 1) over the generators
    let mut cons = Reducer::new(f, h);
    let id = FpMatrix::identity(f, h);
    for (z, m) in group.iter().zip(&act) {
        if action.iter().any(|g| g == z) {
            for row in m.sub(&id).rows() {
                cons.insert(row.clone());
            }
        }
    }
    let fixed_space = cons.kernel_basis();

    let mut tr = Reducer::new(f, h);
    let mut basis = Vec::new();
    for i in 0..h {
        let mut t = FpVec::zero(f, h);
        for m in &act {
            t.add_assign(&m.col(i));
        }
        if tr.insert(t.clone()) {
            basis.push(t);
        }
    }
    let trace_rank = basis.len();
    for v in &fixed_space {
        if tr.insert(v.clone()) {
            basis.push(v.clone());
        }
    }
    let traces_span = trace_rank == fixed_space.len();
    let fixed = full.subalgebra(basis)?;
    Ok(EquivariantHH1 { full, fixed, group_order: order, trace_rank, traces_span, action: act })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn trivial_action_is_everything() {
        let a = AlgebraPresentation::abelian_group(3, &[3]).unwrap();
        let r = equivariant_fixed_hh1(&a, &[]).unwrap();
        assert_eq!(r.fixed.dim(), 3);
        assert!(r.traces_span);
    }

    #[test]
    fn rejects_bad_input() {
        let a = AlgebraPresentation::abelian_group(2, &[2, 2]).unwrap();
        let swap = a.abelian_automorphism(&[2, 2], &[vec![0, 1], vec![1, 0]]);
        assert!(matches!(equivariant_fixed_hh1(&a, &[swap]), Err(Error::OrderDivisibleByP { .. })));
        let mut bad = FpMatrix::identity(a.field(), 4);
        bad.set(0, 1, 1);
        assert!(matches!(equivariant_fixed_hh1(&a, &[bad]), Err(Error::NotAnAutomorphism)));
    }

    #[test]
    fn frobenius_on_c5() {
        let a = AlgebraPresentation::abelian_group(5, &[5]).unwrap();
        let phi = a.abelian_automorphism(&[5], &[vec![2]]);
        let r = equivariant_fixed_hh1(&a, &[phi]).unwrap();
        assert_eq!(r.group_order, 4);
        assert_eq!(r.fixed.dim(), 1);
        for d in &r.fixed.reps {
            assert!(r.is_fixed(d));
            assert_eq!(&d.p_power(), d);
        }
    }
}
