//! The Koszul-Sullivan fiber datum: U dimensions of the catalog monodromies
//! and the untwisted base-times-fiber cross-check (where a disagreement is
//! exactly the signal that a twisted differential is required).

use std::collections::BTreeMap;

use solvcoh_algebra::almost_abelian::{MonodromyMatrix, Surrogates};
use solvcoh_algebra::catalog;
use solvcoh_algebra::lattice::g68_full_turn_witness;
use solvcoh_algebra::subcomplex::SubComplex;
use solvcoh_exact::scalar::rat_int;
use solvcoh_homotopy::umodule::{nilpotent_submodule, ot_cross_check, torus_fiber_action, u_dims};

#[test]
fn g68_full_turn_u_and_untwisted_assembly_agree() {
    let w = g68_full_turn_witness().unwrap();
    let m = match &w.candidate.monodromy {
        MonodromyMatrix::NumberField(m) => m.clone(),
        _ => unreachable!(),
    };
    let u = nilpotent_submodule(&torus_fiber_action(&m));
    assert_eq!(u_dims(&u), vec![1, 2, 1, 1, 2, 1]);
    // the quotient Betti numbers (3,3,2) match Lambda(A) x U untwisted
    let params = catalog::default_params("g6.8").unwrap();
    let tilde = catalog::presentation("g6.8", &params).unwrap().modify();
    let betti = SubComplex::full(&tilde).cohomology().betti_vector();
    let diag = ot_cross_check(&u, &betti);
    assert!(diag.agrees, "{diag:?}");
}

#[test]
fn g610_full_turn_needs_a_twist() {
    // U = H*(T^5) in full; the untwisted assembly gives (1,6,...) but the
    // quotient has b1 = 4: the diagnostic flags the required twist.
    let params = catalog::default_params("g6.10").unwrap();
    let pres = catalog::presentation("g6.10", &params).unwrap();
    // the unipotent part makes the full-turn monodromy polynomial in pi;
    // the U computation runs over the rational function field
    let m = pres.monodromy_symbolic(&rat_int(2)).unwrap();
    let u = nilpotent_submodule(&torus_fiber_action(&m));
    assert_eq!(u_dims(&u), vec![1, 5, 10, 10, 5, 1]);
    let tilde = pres.modify();
    let betti = SubComplex::full(&tilde).cohomology().betti_vector();
    let diag = ot_cross_check(&u, &betti);
    assert!(!diag.agrees, "the untwisted model should disagree: {diag:?}");
    assert_eq!(diag.untwisted_betti[1], 6);
    assert_eq!(diag.quotient_betti[1], 4);
}

#[test]
fn g35_full_turn_torus_fiber() {
    let pres = catalog::presentation("g3.5+R3", &BTreeMap::new()).unwrap();
    let m = pres.monodromy(&rat_int(2), &Surrogates::none()).unwrap();
    let u = nilpotent_submodule(&torus_fiber_action(&m));
    // monodromy is the identity: U is all of H*(T^5)
    assert_eq!(u_dims(&u), vec![1, 5, 10, 10, 5, 1]);
    let betti = SubComplex::full(&pres.modify()).cohomology().betti_vector();
    let diag = ot_cross_check(&u, &betti);
    assert!(diag.agrees);
    assert!(diag.u_generated_in_degree_one);
}
