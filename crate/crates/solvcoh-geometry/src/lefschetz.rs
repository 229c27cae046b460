//! s-Lefschetz and hard Lefschetz verdicts: rank of the cup maps
//! L^{n-k} = [omega]^{n-k} cup - : H^k -> H^{2n-k}.
//!
//! Verdicts at a generic member of a symplectic family are certified
//! sample-independent: two independent samples are compared and any
//! disagreement triggers a fully symbolic rank computation over the
//! rational function field in the family's coefficients.

use solvcoh_algebra::cohomology::CohomologyRing;
use solvcoh_algebra::subcomplex::SubComplex;
use solvcoh_algebra::AlgebraError;
use solvcoh_exact::scalar::{Field, Rat};
use solvcoh_exact::{Matrix, RatFunc};

use crate::symplectic::TwoFormFamily;

#[derive(Clone, Debug, PartialEq)]
pub struct LefschetzReport {
    /// (k, is_isomorphism) for k = 0..=s.
    pub verdicts: Vec<(usize, bool)>,
}

impl LefschetzReport {
    pub fn is_lefschetz_up_to(&self, s: usize) -> bool {
        self.verdicts.iter().take_while(|(k, _)| *k <= s).all(|(_, ok)| *ok)
    }

    pub fn verdict(&self, k: usize) -> Option<bool> {
        self.verdicts.iter().find(|(kk, _)| *kk == k).map(|(_, ok)| *ok)
    }
}

/// Per-k verdicts for k <= s with a fixed cohomology class of a closed
/// 2-form (coordinates in the ring's H^2 representative basis).
pub fn lefschetz_degree(
    ring: &CohomologyRing<Rat>,
    wedge: &dyn Fn(usize, &[Rat], usize, &[Rat]) -> Vec<Rat>,
    omega_class: &[Rat],
    s: usize,
) -> Result<LefschetzReport, AlgebraError> {
    let top = ring.top_degree();
    if top % 2 != 0 {
        return Err(AlgebraError::Precondition { message: "even dimension required".into() });
    }
    let n = top / 2;
    let mut verdicts = Vec::new();
    for k in 0..=s.min(n) {
        let bk = ring.betti(k);
        let btarget = ring.betti(2 * n - k);
        if bk != btarget {
            verdicts.push((k, false));
            continue;
        }
        if bk == 0 {
            verdicts.push((k, true));
            continue;
        }
        // matrix of L^{n-k}: columns are omega^{n-k} cup e_i
        let mut m = Matrix::<Rat>::zero(btarget, bk);
        for i in 0..bk {
            let mut e = vec![Rat::from_integer(0.into()); bk];
            e[i] = Rat::from_integer(1.into());
            let mut acc = e;
            let mut deg = k;
            for _ in 0..n - k {
                acc = ring.cup(deg, &acc, 2, omega_class, wedge);
                deg += 2;
            }
            for (r, c) in acc.into_iter().enumerate() {
                m.set(r, i, c);
            }
        }
        verdicts.push((k, m.rank() == bk));
    }
    Ok(LefschetzReport { verdicts })
}

/// Hard Lefschetz = s-Lefschetz for s = n.
pub fn hard_lefschetz(
    ring: &CohomologyRing<Rat>,
    wedge: &dyn Fn(usize, &[Rat], usize, &[Rat]) -> Vec<Rat>,
    omega_class: &[Rat],
) -> Result<bool, AlgebraError> {
    let n = ring.top_degree() / 2;
    Ok(lefschetz_degree(ring, wedge, omega_class, n)?.is_lefschetz_up_to(n))
}

/// Lefschetz verdicts of the generic member of a closed-2-form family on
/// the given subcomplex, sample-independent by construction.
pub fn generic_lefschetz(
    sc: &SubComplex,
    family: &TwoFormFamily,
    s: usize,
    seed: u64,
) -> Result<LefschetzReport, AlgebraError> {
    let ring = sc.cohomology();
    let wedge = sc.wedge_fn();
    let point_a = family.generic_point(seed).ok_or(AlgebraError::Precondition {
        message: "family has no nondegenerate member".into(),
    })?;
    let point_b = family.generic_point(seed.wrapping_add(0x9e3779b9)).unwrap();
    let rep_a = run_at(&ring, &wedge, sc, family, &point_a, s)?;
    if point_a != point_b {
        let rep_b = run_at(&ring, &wedge, sc, family, &point_b, s)?;
        if rep_a != rep_b {
            return symbolic_lefschetz(sc, family, s);
        }
    }
    Ok(rep_a)
}

fn run_at(
    ring: &CohomologyRing<Rat>,
    wedge: &dyn Fn(usize, &[Rat], usize, &[Rat]) -> Vec<Rat>,
    _sc: &SubComplex,
    family: &TwoFormFamily,
    point: &[Rat],
    s: usize,
) -> Result<LefschetzReport, AlgebraError> {
    let omega = family.member(point);
    let class = ring.class_of(2, &omega).ok_or(AlgebraError::Precondition {
        message: "family member is not closed".into(),
    })?;
    lefschetz_degree(ring, wedge, &class, s)
}

/// Fully symbolic verdicts over the rational-function field in the family
/// coefficients; used when two samples disagree.
pub fn symbolic_lefschetz(
    sc: &SubComplex,
    family: &TwoFormFamily,
    s: usize,
) -> Result<LefschetzReport, AlgebraError> {
    let k = family.basis.len();
    type RF = RatFunc<Rat>;
    let diffs: Vec<Matrix<RF>> = (0..=sc.top_degree())
        .map(|p| sc.differential(p).map(|c| RF::from_rat(c)))
        .collect();
    let ring = CohomologyRing::<RF>::from_differentials(&diffs);
    let omega: Vec<RF> = {
        let m = sc.dim_at(2);
        let mut acc = vec![RF::constant(k, Rat::from_integer(0.into())); m];
        for (i, b) in family.basis.iter().enumerate() {
            let sym = RF::var(i, k);
            for (a, c) in acc.iter_mut().zip(b) {
                if !num_traits::Zero::is_zero(c) {
                    *a = a.add(&sym.mul(&RF::constant(k, c.clone())));
                }
            }
        }
        acc
    };
    let wedge = |p: usize, x: &[RF], q: usize, y: &[RF]| crate::symplectic::wedge_rf(sc, p, x, q, y);
    let class = ring.class_of(2, &omega).ok_or(AlgebraError::Precondition {
        message: "generic member is not closed".into(),
    })?;
    let top = ring.top_degree();
    let n = top / 2;
    let mut verdicts = Vec::new();
    for kk in 0..=s.min(n) {
        let bk = ring.betti(kk);
        let bt = ring.betti(2 * n - kk);
        if bk != bt {
            verdicts.push((kk, false));
            continue;
        }
        if bk == 0 {
            verdicts.push((kk, true));
            continue;
        }
        let mut m = Matrix::<RF>::zero(bt, bk);
        for i in 0..bk {
            let mut e = vec![RF::zero(); bk];
            e[i] = RF::one();
            let mut acc = e;
            let mut deg = kk;
            for _ in 0..n - kk {
                acc = ring.cup(deg, &acc, 2, &class, &wedge);
                deg += 2;
            }
            for (r, c) in acc.into_iter().enumerate() {
                m.set(r, i, c);
            }
        }
        verdicts.push((kk, m.rank() == bk));
    }
    Ok(LefschetzReport { verdicts })
}

#[cfg(test)]
mod tests {
    use super::*;
    use solvcoh_algebra::lie::LieAlgebra;
    use solvcoh_exact::scalar::rat_int;

    #[test]
    fn torus_standard_form_is_hard_lefschetz() {
        // R^{2n} with a12 + a34 + ... for n = 1, 2, 3
        for n in 1..=3usize {
            let g = LieAlgebra::abelian(2 * n);
            let sc = SubComplex::full(&g);
            let ring = sc.cohomology();
            let wedge = sc.wedge_fn();
            // omega = sum alpha^{2i-1, 2i}
            let basis2 = solvcoh_algebra::exterior::ExteriorBasis::new(2 * n, 2);
            let mut omega = vec![rat_int(0); basis2.dim()];
            for i in 0..n {
                let pos = basis2.position(&vec![(2 * i) as u8, (2 * i + 1) as u8]).unwrap();
                omega[pos] = rat_int(1);
            }
            let class = ring.class_of(2, &omega).unwrap();
            assert!(hard_lefschetz(&ring, &wedge, &class).unwrap(), "n = {n}");
        }
    }

    #[test]
    fn rescaling_does_not_change_verdicts() {
        let g = LieAlgebra::abelian(4);
        let sc = SubComplex::full(&g);
        let ring = sc.cohomology();
        let wedge = sc.wedge_fn();
        let basis2 = solvcoh_algebra::exterior::ExteriorBasis::new(4, 2);
        let mut omega = vec![rat_int(0); basis2.dim()];
        omega[basis2.position(&vec![0, 1]).unwrap()] = rat_int(1);
        omega[basis2.position(&vec![2, 3]).unwrap()] = rat_int(1);
        let c1 = ring.class_of(2, &omega).unwrap();
        let c2: Vec<_> = c1.iter().map(|x| x * &solvcoh_exact::scalar::rat(7, 3)).collect();
        let r1 = lefschetz_degree(&ring, &wedge, &c1, 2).unwrap();
        let r2 = lefschetz_degree(&ring, &wedge, &c2, 2).unwrap();
        assert_eq!(r1, r2);
    }
}
