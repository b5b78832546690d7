//! Derivations of structure-constant algebras and the Lie algebra
//! `HH^1(A) = Der(A) / IDer(A)`.

mod equivariant;
mod solver;

pub use equivariant::{equivariant_fixed_hh1, EquivariantHH1};
pub use solver::{derivation_space, hh1_lie_algebra, inner_derivation_space, DerivationSolver, HH1Presentation};

use crate::fplinalg::{FpMatrix, FpVec};
use crate::groupalgebra::AlgebraPresentation;

/// A linear endomorphism of an algebra; column `j` is the image of basis
/// element `j`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DerivationMap {
    pub matrix: FpMatrix,
}

impl DerivationMap {
    pub fn new(matrix: FpMatrix) -> Self {
        DerivationMap { matrix }
    }

    pub fn zero(a: &AlgebraPresentation) -> Self {
        DerivationMap { matrix: FpMatrix::zero(a.field(), a.dim(), a.dim()) }
    }

    pub fn apply(&self, v: &FpVec) -> FpVec {
        self.matrix.mul_vec(v).expect("dimensions agree")
    }

    /// Leibniz on every pair of basis elements, and `D(1) = 0`.
    pub fn is_derivation(&self, a: &AlgebraPresentation) -> bool {
        let d = a.dim();
        if self.matrix.nrows() != d || self.matrix.ncols() != d || !self.apply(&a.one).is_zero() {
            return false;
        }
        let imgs: Vec<FpVec> = (0..d).map(|j| self.matrix.col(j)).collect();
        crate::par::find_first(d, |i| {
            (0..d).any(|j| {
                let mut rhs = a.mul(&imgs[i], &a.basis(j));
                rhs.add_assign(&a.mul(&a.basis(i), &imgs[j]));
                self.apply(a.basis_mul(i, j)) != rhs
            })
        })
        .is_none()
    }

    /// `D1 D2 - D2 D1`.
    pub fn commutator(&self, other: &DerivationMap) -> DerivationMap {
        DerivationMap { matrix: self.matrix.mul(&other.matrix).sub(&other.matrix.mul(&self.matrix)) }
    }

    /// `D` composed with itself `p` times.
    pub fn p_power(&self) -> DerivationMap {
        let p = self.matrix.field().p() as u64;
        DerivationMap { matrix: self.matrix.pow(p) }
    }

    pub fn add(&self, other: &DerivationMap) -> DerivationMap {
        DerivationMap { matrix: self.matrix.add(&other.matrix) }
    }

    pub fn scale(&self, c: u8) -> DerivationMap {
        DerivationMap { matrix: self.matrix.scale(c) }
    }

    pub fn is_zero(&self) -> bool {
        self.matrix.is_zero()
    }

    /// `x -> a x - x a`.
    pub fn inner(a: &AlgebraPresentation, b: &FpVec) -> DerivationMap {
        DerivationMap { matrix: a.left_matrix(b).sub(&a.right_matrix(b)) }
    }

    /// The derivation with the given images of the algebra generators, if
    /// one exists.
    pub fn from_generator_images(a: &AlgebraPresentation, images: &[FpVec]) -> Option<DerivationMap> {
        let solver = DerivationSolver::new(a).ok()?;
        let x = images.iter().skip(1).fold(images.first()?.clone(), |acc, v| acc.concat(v));
        let m = solver.to_map(&x);
        m.is_derivation(a).then_some(m)
    }

    /// Images of the generators written with the basis labels.
    pub fn format_images(&self, a: &AlgebraPresentation) -> Vec<String> {
        a.generators.iter().map(|s| a.format(&self.apply(s))).collect()
    }

    /// Conjugate by an automorphism: `phi D phi^-1`.
    pub fn conjugate(&self, phi: &FpMatrix, phi_inv: &FpMatrix) -> DerivationMap {
        DerivationMap { matrix: phi.mul(&self.matrix).mul(phi_inv) }
    }
}
