//! The largest submodule of H*(fiber) on which the monodromy acts
//! nilpotently (unipotently): per degree, the generalized eigenspace of
//! eigenvalue one, ker (rho - I)^dim. This is the fiber datum of the
//! Koszul-Sullivan model of the Mostow fibration.

use solvcoh_algebra::exterior::exterior_power_matrix;
use solvcoh_exact::scalar::Field;
use solvcoh_exact::Matrix;

/// Per-degree basis of U = largest unipotent submodule, from the per-degree
/// action matrices.
pub fn nilpotent_submodule<F: Field>(rho: &[Matrix<F>]) -> Vec<Vec<Vec<F>>> {
    rho.iter()
        .map(|m| {
            assert!(m.is_square());
            let n = m.rows();
            if n == 0 {
                return Vec::new();
            }
            let mut shifted = m.clone();
            for i in 0..n {
                shifted.set(i, i, shifted.at(i, i).sub(&F::one()));
            }
            shifted.pow(n).kernel_basis()
        })
        .collect()
}

/// Action of a monodromy matrix on H*(torus fiber) = Lambda (R^n)*: degree p
/// carries the p-th exterior power of the transpose.
pub fn torus_fiber_action<F: Field>(monodromy: &Matrix<F>) -> Vec<Matrix<F>> {
    let n = monodromy.rows();
    let dual = monodromy.transpose();
    (0..=n).map(|p| exterior_power_matrix(&dual, p)).collect()
}

/// Dimensions of U per degree.
pub fn u_dims<F: Field>(u: &[Vec<Vec<F>>]) -> Vec<usize> {
    u.iter().map(|b| b.len()).collect()
}

/// Cross-validation of the untwisted base (x) fiber assembly against the
/// invariant cohomology: over the circle base, the untwisted model of
/// Lambda(A) (x) U has Betti numbers U^p + U^{p-1}; a mismatch with the
/// quotient's Betti numbers is exactly the situation where a twisted
/// differential is required (resolved in the literature by comparing
/// cohomology). Also reports whether U is generated in degree one, the case
/// where the free assembly on U^1 is literal.
#[derive(Clone, Debug)]
pub struct OtDiagnostic {
    pub u_dims: Vec<usize>,
    pub untwisted_betti: Vec<usize>,
    pub quotient_betti: Vec<usize>,
    pub agrees: bool,
    pub u_generated_in_degree_one: bool,
}

pub fn ot_cross_check<F: Field>(u: &[Vec<Vec<F>>], quotient_betti: &[usize]) -> OtDiagnostic {
    let dims = u_dims(u);
    let mut untwisted = Vec::with_capacity(dims.len() + 1);
    for p in 0..=dims.len() {
        let up = dims.get(p).copied().unwrap_or(0);
        let um1 = if p == 0 { 0 } else { dims.get(p - 1).copied().unwrap_or(0) };
        untwisted.push(up + um1);
    }
    untwisted.truncate(quotient_betti.len());
    let agrees = untwisted == quotient_betti;
    // U generated in degree 1: dims match the binomial growth of Lambda(U^1)
    let u1 = dims.get(1).copied().unwrap_or(0);
    let u_generated_in_degree_one = dims
        .iter()
        .enumerate()
        .all(|(p, d)| *d == binomial(u1, p));
    OtDiagnostic {
        u_dims: dims,
        untwisted_betti: untwisted,
        quotient_betti: quotient_betti.to_vec(),
        agrees,
        u_generated_in_degree_one,
    }
}

fn binomial(n: usize, k: usize) -> usize {
    if k > n {
        return 0;
    }
    let mut acc = 1usize;
    for i in 0..k {
        acc = acc * (n - i) / (i + 1);
    }
    acc
}

#[cfg(test)]
mod tests {
    use super::*;
    use solvcoh_exact::scalar::{rat_int, Rat};

    #[test]
    fn identity_monodromy_gives_everything() {
        let id = Matrix::<Rat>::identity(3);
        let rho = torus_fiber_action(&id);
        let u = nilpotent_submodule(&rho);
        assert_eq!(u_dims(&u), vec![1, 3, 3, 1]);
    }

    #[test]
    fn scaling_by_two_gives_zero() {
        let m = Matrix::from_rows(vec![vec![rat_int(2)]]);
        let u = nilpotent_submodule(&[m]);
        assert_eq!(u_dims(&u), vec![0]);
    }

    #[test]
    fn unipotent_block_is_kept() {
        // [[1,1],[0,1]]: generalized 1-eigenspace is everything
        let m = Matrix::<Rat>::from_i64_rows(&[&[1, 1], &[0, 1]]);
        let u = nilpotent_submodule(&[m]);
        assert_eq!(u_dims(&u), vec![2]);
    }
}
