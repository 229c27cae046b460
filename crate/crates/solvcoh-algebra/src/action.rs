//! Finite-order automorphism actions on a Chevalley-Eilenberg complex and
//! the invariant cohomology of covered quotients.
//!
//! The deck group of Gamma_{q pi} over the connected-closure lattice acts on
//! H*(g~) through the monodromy. The transcendental factors of the full
//! monodromy act trivially on cohomology (they exponentiate Lie derivatives
//! of g~), so the generator used here is the compact rotation part
//! exp(q pi C) transposed onto the dual basis; its entries live in a
//! cyclotomic field and its order is finite exactly.

use solvcoh_exact::numfield::NumberFieldElement;
use solvcoh_exact::scalar::{Field, Rat};
use solvcoh_exact::Matrix;

use crate::almost_abelian::{AlmostAbelianPresentation, Frequency};
use crate::cohomology::CohomologyRing;
use crate::exterior::{exterior_power_matrix, ExteriorBasis};
use crate::lie::LieAlgebra;
use crate::subcomplex::SubComplex;
use crate::AlgebraError;

/// A finite-order action on the dual g* of a Lie algebra, compatible with
/// the Chevalley-Eilenberg differential.
pub struct FiniteAction {
    /// The target algebra (usually the modified g~).
    pub algebra: LieAlgebra,
    /// Generator on degree-1 forms (the dual/transposed matrix).
    pub psi: Matrix<NumberFieldElement>,
    pub order: usize,
}

impl FiniteAction {
    /// Build from an invertible dual-action matrix; validates finite order
    /// and compatibility with d.
    pub fn new(
        algebra: LieAlgebra,
        psi: Matrix<NumberFieldElement>,
        order: usize,
    ) -> Result<Self, AlgebraError> {
        let n = algebra.dim();
        assert_eq!(psi.rows(), n);
        let id = Matrix::from_fn(n, n, |r, c| {
            if r == c {
                NumberFieldElement::one()
            } else {
                NumberFieldElement::zero()
            }
        });
        if psi.pow(order) != id {
            return Err(AlgebraError::Precondition {
                message: format!("action is not of order {order}"),
            });
        }
        let action = FiniteAction { algebra, psi, order };
        if !action.commutes_with_d() {
            return Err(AlgebraError::ActionNotCompatible);
        }
        Ok(action)
    }

    /// The identity action.
    pub fn identity(algebra: LieAlgebra) -> Self {
        let n = algebra.dim();
        let psi = Matrix::from_fn(n, n, |r, c| {
            if r == c {
                NumberFieldElement::one()
            } else {
                NumberFieldElement::zero()
            }
        });
        FiniteAction { algebra, psi, order: 1 }
    }

    /// The deck action of Gamma_{q pi} on the modified algebra of the
    /// presentation: psi = exp(q pi C)^t on the dual, extended by the
    /// identity on the derivation direction.
    pub fn deck_action(
        pres: &AlmostAbelianPresentation,
        q: &Rat,
    ) -> Result<Self, AlgebraError> {
        let modified = pres.modify();
        let rot = pres.exp_compact_killed(q)?;
        let n = modified.dim();
        let mut psi = Matrix::from_fn(n, n, |r, c| {
            if r == c {
                NumberFieldElement::one()
            } else {
                NumberFieldElement::zero()
            }
        });
        for (a, &fa) in pres.fiber.iter().enumerate() {
            for (b, &fb) in pres.fiber.iter().enumerate() {
                // transpose: dual action
                psi.set(fa, fb, rot.at(b, a).clone());
            }
        }
        let order = deck_order(pres, q)?;
        Self::new(modified, psi, order)
    }

    /// psi commutes with the differential (checked on degree 1).
    fn commutes_with_d(&self) -> bool {
        let d1 = crate::exterior::ce_differential_matrix::<NumberFieldElement>(&self.algebra, 1);
        let psi2 = exterior_power_matrix(&self.psi, 2);
        psi2.mul(&d1) == d1.mul(&self.psi)
    }

    /// Induced action on degree-p forms.
    pub fn induced(&self, p: usize) -> Matrix<NumberFieldElement> {
        exterior_power_matrix(&self.psi, p)
    }

    /// The averaging projector (1/k) sum psi^j on degree-p forms; its image
    /// is the invariant subspace. The result is rational because the
    /// Galois action permutes the group elements.
    pub fn averaging_projector(&self, p: usize) -> Result<Matrix<Rat>, AlgebraError> {
        let lam = self.induced(p);
        let dim = lam.rows();
        let mut acc = Matrix::from_fn(dim, dim, |_, _| NumberFieldElement::zero());
        let mut pw = Matrix::from_fn(dim, dim, |r, c| {
            if r == c {
                NumberFieldElement::one()
            } else {
                NumberFieldElement::zero()
            }
        });
        for _ in 0..self.order {
            acc = acc.add(&pw);
            pw = pw.mul(&lam);
        }
        let scale = NumberFieldElement::from_rat(&Rat::new(1.into(), (self.order as i64).into()));
        let averaged = acc.mul_scalar(&scale);
        averaged.try_to_rat().ok_or(AlgebraError::Precondition {
            message: "averaging projector has irrational entries".into(),
        })
    }

    /// The invariant subcomplex of Lambda g* as a sub-CDGA with rational
    /// bases, restricted differential and product table.
    pub fn invariant_cdga(&self) -> Result<SubComplex, AlgebraError> {
        let n = self.algebra.dim();
        let mut bases = Vec::with_capacity(n + 1);
        for p in 0..=n {
            let proj = self.averaging_projector(p)?;
            // invariant subspace = image of the projector = kernel of (P - I)
            let dim = proj.rows();
            let pm = proj.sub(&Matrix::identity(dim));
            let kernel = pm.kernel_basis();
            let rows = if kernel.is_empty() {
                Matrix::zero(0, dim)
            } else {
                Matrix::from_rows(kernel)
            };
            bases.push(rows);
        }
        SubComplex::from_bases(self.algebra.clone(), bases)
    }

    /// Invariant cohomology H*(g~)^{<psi>} computed via the averaging
    /// projector acting on representative classes of the full cohomology.
    /// Output Betti numbers are those of the covered quotient.
    pub fn invariant_cohomology(&self) -> Result<CohomologyRing<Rat>, AlgebraError> {
        self.invariant_cdga().map(|sc| sc.cohomology())
    }
}

/// Order of exp(q pi C) as an automorphism: lcm over rotation blocks of the
/// denominators of (q b / 2) as a fraction of a full turn.
fn deck_order(pres: &AlmostAbelianPresentation, q: &Rat) -> Result<usize, AlgebraError> {
    let mut order: i64 = 1;
    for f in &pres.frequencies {
        match f {
            Frequency::Rational { b, .. } => {
                let turns = q * b * Rat::new(1.into(), 2.into());
                let den: i64 = turns.denom().try_into().map_err(|_| AlgebraError::Precondition {
                    message: "rotation order too large".into(),
                })?;
                order = num_integer::lcm(order, den);
            }
            Frequency::Irrational { .. } => {}
        }
    }
    Ok(order as usize)
}

/// Induced action of an arbitrary invertible matrix on the cohomology of
/// the full complex (used by tests to cross-check the projector).
pub fn action_on_cohomology(
    action: &FiniteAction,
    ring: &CohomologyRing<Rat>,
    p: usize,
) -> Result<Matrix<Rat>, AlgebraError> {
    let lam = action.induced(p);
    let reps = &ring.degrees[p].representatives;
    let b = reps.len();
    let mut m = Matrix::zero(b, b);
    for (j, rep) in reps.iter().enumerate() {
        let image_nf = lam.mul_vec(&rep.iter().map(NumberFieldElement::from_rat).collect::<Vec<_>>());
        let image: Option<Vec<Rat>> = image_nf.iter().map(|x| x.to_rat()).collect();
        let image = image.ok_or(AlgebraError::Precondition {
            message: "action image of a rational class is irrational".into(),
        })?;
        let class = ring.class_of(p, &image).ok_or(AlgebraError::Precondition {
            message: "action image is not a cocycle".into(),
        })?;
        for (i, c) in class.into_iter().enumerate() {
            m.set(i, j, c);
        }
    }
    Ok(m)
}

fn _exterior_basis_guard(n: usize, p: usize) -> usize {
    ExteriorBasis::new(n, p).dim()
}

#[cfg(test)]
mod tests {
    use super::*;
    use solvcoh_exact::scalar::{rat, rat_int};

    fn g35_r3() -> LieAlgebra {
        LieAlgebra::from_table(6, &[((1, 3), &[(2, -1, 1)]), ((2, 3), &[(1, 1, 1)])]).unwrap()
    }

    #[test]
    fn identity_action_gives_full_cohomology() {
        let g = g35_r3();
        let pres = AlmostAbelianPresentation::from_algebra(&g).unwrap();
        let tilde = pres.modify();
        let full = SubComplex::full(&tilde).cohomology();
        let act = FiniteAction::identity(tilde);
        let inv = act.invariant_cohomology().unwrap();
        assert_eq!(full.betti_vector(), inv.betti_vector());
    }

    #[test]
    fn order_four_rotation_on_torus() {
        // modified g_{3.5}+R^3 is R^6; deck action at t = pi/2 has order 4
        let g = g35_r3();
        let pres = AlmostAbelianPresentation::from_algebra(&g).unwrap();
        let act = FiniteAction::deck_action(&pres, &rat(1, 2)).unwrap();
        assert_eq!(act.order, 4);
        let inv = act.invariant_cohomology().unwrap();
        // paper: b1 = 4, b2 = 7, b3 = 8
        assert_eq!(inv.betti(1), 4);
        assert_eq!(inv.betti(2), 7);
        assert_eq!(inv.betti(3), 8);
        // projector idempotent
        for p in 0..=3 {
            let proj = act.averaging_projector(p).unwrap();
            assert_eq!(proj.mul(&proj), proj);
        }
    }

    #[test]
    fn invariants_shrink_with_divisibility() {
        // psi_{pi} = psi_{pi/2}^2: invariants of the order-4 action are
        // contained in those of the order-2 action.
        let g = g35_r3();
        let pres = AlmostAbelianPresentation::from_algebra(&g).unwrap();
        let a4 = FiniteAction::deck_action(&pres, &rat(1, 2)).unwrap();
        let a2 = FiniteAction::deck_action(&pres, &rat_int(1)).unwrap();
        for p in 0..=6 {
            let inv4 = a4.averaging_projector(p).unwrap();
            let inv2 = a2.averaging_projector(p).unwrap();
            // image(inv4) inside image(inv2): inv2 * inv4 = inv4
            assert_eq!(inv2.mul(&inv4), inv4);
        }
    }
}
