//! Half-flat verdicts on candidate SU(3) structures built over the
//! symplectic families: the 4+2-decomposable deformation admits no
//! symplectic half-flat structure, so every sampled candidate fails at
//! least one check; a genuinely half-flat but non-symplectic candidate is
//! verified on the Heisenberg-block algebra.

use std::collections::BTreeMap;

use solvcoh_algebra::catalog;
use solvcoh_algebra::exterior::ExteriorForm;
use solvcoh_algebra::subcomplex::SubComplex;
use solvcoh_exact::scalar::{rat_int, Rat};
use solvcoh_geometry::halfflat::{half_flat_verify, standard_su3_paired, Su3Candidate};
use solvcoh_geometry::symplectic::symplectic_exists;

#[test]
fn g610_candidates_are_never_symplectic_half_flat() {
    // candidates: generic symplectic members of the modified algebra paired
    // with the standard volume data of various coframe pairings
    let params = catalog::default_params("g6.10").unwrap();
    let tilde = catalog::presentation("g6.10", &params).unwrap().modify();
    let sc = SubComplex::full(&tilde);
    let v = symplectic_exists(&sc).unwrap();
    assert!(v.exists());
    let fam = v.family();
    let basis2 = solvcoh_algebra::exterior::ExteriorBasis::new(6, 2);
    let pairings: [[(u8, u8); 3]; 4] = [
        [(0, 5), (1, 2), (3, 4)],
        [(0, 1), (2, 3), (4, 5)],
        [(0, 2), (1, 5), (3, 4)],
        [(0, 3), (1, 4), (2, 5)],
    ];
    let mut checked = 0;
    for seed in 0..6u64 {
        let point = match fam.generic_point(seed) {
            Some(p) => p,
            None => continue,
        };
        let omega_vec = fam.member(&point);
        let omega = ExteriorForm::from_vec(&basis2, &sc.to_ambient(2, &omega_vec));
        for pairing in &pairings {
            let psi = standard_su3_paired(pairing);
            let cand = Su3Candidate { omega: omega.clone(), re_psi: psi.re_psi, im_psi: psi.im_psi };
            let report = half_flat_verify(&tilde, &cand).unwrap();
            assert!(
                !report.is_symplectic_half_flat(),
                "a sampled candidate verified symplectic half-flat on the 4+2 deformation"
            );
            checked += 1;
        }
    }
    assert!(checked >= 12, "sampled family too small");
}

#[test]
fn heisenberg_block_half_flat_but_not_symplectic() {
    // d a6 = a12: the standard structure of the (1,4),(2,5),(3,6) pairing
    // is half-flat with d omega != 0
    let g = solvcoh_algebra::lie::LieAlgebra::from_table(6, &[((1, 2), &[(6, -1, 1)])]).unwrap();
    let cand = standard_su3_paired(&[(0, 3), (1, 4), (2, 5)]);
    let report = half_flat_verify(&g, &cand).unwrap();
    assert!(report.is_half_flat());
    assert!(!report.omega_closed);
    assert!(!report.is_symplectic_half_flat());
}

#[test]
fn torus_structure_fully_closed() {
    let g = solvcoh_algebra::lie::LieAlgebra::abelian(6);
    let report =
        half_flat_verify(&g, &standard_su3_paired(&[(0, 1), (2, 3), (4, 5)])).unwrap();
    assert!(report.is_symplectic_half_flat());
    let _unused: BTreeMap<String, Rat> = BTreeMap::new();
    let _ = rat_int(0);
}
