//! Verification of SU(3) half-flat candidates (omega, Psi) on a six
//! dimensional Lie algebra.
//!
//! Checked conditions, each reported separately: d(omega ^ omega) = 0 (the
//! usual half-flat closedness condition; some write it "omega ^ Omega" --
//! the report carries a convention note), d(Re Psi) = 0,
//! the SU(3) compatibilities omega ^ Re Psi = 0 and omega ^ Im Psi = 0,
//! nondegeneracy of omega, and separately d omega = 0 for the symplectic
//! refinement.

use solvcoh_algebra::exterior::{ce_differential, ExteriorBasis, ExteriorForm};
use solvcoh_algebra::lie::LieAlgebra;
use solvcoh_algebra::AlgebraError;
use solvcoh_exact::scalar::Rat;

/// A candidate SU(3) structure: a 2-form and a complex volume form given by
/// its real and imaginary parts. No invariants hold at construction;
/// verification is the operation.
#[derive(Clone)]
pub struct Su3Candidate {
    pub omega: ExteriorForm<Rat>,
    pub re_psi: ExteriorForm<Rat>,
    pub im_psi: ExteriorForm<Rat>,
}

#[derive(Clone, Debug, PartialEq)]
pub struct HalfFlatReport {
    /// d(omega ^ omega) = 0.
    pub omega_sq_closed: bool,
    /// d(Re Psi) = 0.
    pub re_psi_closed: bool,
    /// omega ^ Re Psi = 0.
    pub compatible_re: bool,
    /// omega ^ Im Psi = 0.
    pub compatible_im: bool,
    /// omega^3 != 0.
    pub nondegenerate: bool,
    /// d omega = 0 (symplectic refinement).
    pub omega_closed: bool,
    /// Convention note for the ambiguous closedness condition.
    pub convention: &'static str,
}

impl HalfFlatReport {
    pub fn is_half_flat(&self) -> bool {
        self.omega_sq_closed
            && self.re_psi_closed
            && self.compatible_re
            && self.compatible_im
            && self.nondegenerate
    }

    pub fn is_symplectic_half_flat(&self) -> bool {
        self.is_half_flat() && self.omega_closed
    }
}

pub fn half_flat_verify(g: &LieAlgebra, cand: &Su3Candidate) -> Result<HalfFlatReport, AlgebraError> {
    if g.dim() != 6 {
        return Err(AlgebraError::Precondition {
            message: "half-flat verification needs dimension 6".into(),
        });
    }
    if cand.omega.degree != 2 || cand.re_psi.degree != 3 || cand.im_psi.degree != 3 {
        return Err(AlgebraError::Precondition {
            message: "omega must be a 2-form and Psi a 3-form".into(),
        });
    }
    let omega_sq = cand.omega.wedge(&cand.omega);
    let omega_sq_closed = ce_differential(g, &omega_sq).is_zero();
    let re_psi_closed = ce_differential(g, &cand.re_psi).is_zero();
    let compatible_re = cand.omega.wedge(&cand.re_psi).is_zero();
    let compatible_im = cand.omega.wedge(&cand.im_psi).is_zero();
    let top = ExteriorBasis::new(6, 6);
    let cube = omega_sq.wedge(&cand.omega).to_vec(&top);
    let nondegenerate = cube.iter().any(|c| !num_traits::Zero::is_zero(c));
    let omega_closed = ce_differential(g, &cand.omega).is_zero();
    Ok(HalfFlatReport {
        omega_sq_closed,
        re_psi_closed,
        compatible_re,
        compatible_im,
        nondegenerate,
        omega_closed,
        convention: "the closedness condition on the 4-form is read as d(omega^omega) = 0",
    })
}

/// The standard SU(3) data of a coframe pairing (1,2), (3,4), (5,6):
/// omega = a12 + a34 + a56, Psi = (a1 + i a2)^(a3 + i a4)^(a5 + i a6).
pub fn standard_su3() -> Su3Candidate {
    standard_su3_paired(&[(0, 1), (2, 3), (4, 5)])
}

/// Standard SU(3) data for an arbitrary pairing of the six coframe
/// directions into complex lines.
pub fn standard_su3_paired(pairs: &[(u8, u8)]) -> Su3Candidate {
    assert_eq!(pairs.len(), 3);
    let n = 6;
    let mut omega = ExteriorForm::<Rat>::zero(n, 2);
    for (a, b) in pairs {
        omega = omega.add(&ExteriorForm::basis(n, &[*a, *b]));
    }
    // Psi = prod (alpha^{a_k} + i alpha^{b_k}); expand over {1, i}.
    // Track (real, imag) parts of the 3-fold product.
    let mut re = ExteriorForm::<Rat>::basis(n, &[]);
    let mut im = ExteriorForm::<Rat>::zero(n, 0);
    for (a, b) in pairs {
        let fa = ExteriorForm::<Rat>::basis(n, &[*a]);
        let fb = ExteriorForm::<Rat>::basis(n, &[*b]);
        // (re + i im) ^ (fa + i fb) = (re^fa - im^fb) + i (re^fb + im^fa)
        let new_re = re.wedge(&fa).sub(&im.wedge(&fb));
        let new_im = re.wedge(&fb).add(&im.wedge(&fa));
        re = new_re;
        im = new_im;
    }
    Su3Candidate { omega, re_psi: re, im_psi: im }
}
