//! Worked examples: cup products against a brute-force oracle over
//! representative choices, exact monodromy values, invariant generator
//! spans, and the projector cross-checks.

use std::collections::BTreeMap;

use solvcoh_algebra::action::{action_on_cohomology, FiniteAction};
use solvcoh_algebra::almost_abelian::Surrogates;
use solvcoh_algebra::catalog;
use solvcoh_algebra::cohomology::EchelonSweep;
use solvcoh_algebra::exterior::{ExteriorBasis, ExteriorForm};
use solvcoh_algebra::subcomplex::SubComplex;
use solvcoh_exact::scalar::{rat, rat_int, Rat};
use solvcoh_exact::Matrix;

fn modified(name: &str) -> SubComplex {
    let params = catalog::default_params(name).unwrap();
    SubComplex::full(&catalog::presentation(name, &params).unwrap().modify())
}

/// Class coordinates of a named basis form.
fn class_of_form(sc: &SubComplex, ring: &solvcoh_algebra::cohomology::CohomologyRing<Rat>, idx: &[u8]) -> Vec<Rat> {
    let n = sc.algebra.dim();
    let basis = ExteriorBasis::new(n, idx.len());
    let v = ExteriorForm::<Rat>::basis(n, idx).to_vec(&basis);
    ring.class_of(idx.len(), &v).expect("closed form")
}

#[test]
fn cup_product_matches_brute_force_over_representatives() {
    // g~ of the shift family: [a16] cup [a23], checked against every
    // alternative choice of representatives (adding coboundaries).
    let sc = modified("g6.10");
    let ring = sc.cohomology();
    let wedge = sc.wedge_fn();
    let a16 = class_of_form(&sc, &ring, &[0, 5]);
    let a23 = class_of_form(&sc, &ring, &[1, 2]);
    let reference = ring.cup(2, &a16, 2, &a23, &wedge);

    // brute force: representatives shifted by all coboundary basis vectors
    let b2 = &ring.degrees[2].coboundaries;
    let rep16 = ring.representative(2, &a16);
    let rep23 = ring.representative(2, &a23);
    for db1 in b2 {
        for db2 in b2 {
            let alt16: Vec<Rat> = rep16.iter().zip(db1).map(|(a, b)| a + b).collect();
            let alt23: Vec<Rat> = rep23.iter().zip(db2).map(|(a, b)| a + b).collect();
            let prod = sc.wedge(2, &alt16, 2, &alt23).unwrap();
            let class = ring.class_of(4, &prod).expect("product of cocycles");
            assert_eq!(class, reference, "cup depends on representative choice");
        }
    }
}

#[test]
fn monodromy_of_double_rotation_at_half_turn() {
    // the (p, r) = (0, 2) family at t = pi: blocks R(pi) and R(2pi)
    let mut params = BTreeMap::new();
    params.insert("p".to_string(), rat_int(0));
    params.insert("r".to_string(), rat_int(2));
    let pres = catalog::presentation("g5.17+R", &params).unwrap();
    let m = pres.monodromy(&rat_int(1), &Surrogates::none()).unwrap();
    let mr = m.try_to_rat().unwrap();
    // fiber = (X1..X4, X6): diag(-1,-1,1,1) + 1
    let expect = Matrix::block_diag(&[
        Matrix::identity(2).mul_scalar(&rat_int(-1)),
        Matrix::identity(3),
    ]);
    assert_eq!(mr, expect);
}

#[test]
fn invariant_spans_of_g68_quarter_turn() {
    // H^1 = <a6>, H^2 = <a45>, H^3 = <a123, a456> as spans
    let params = catalog::default_params("g6.8").unwrap();
    let pres = catalog::presentation("g6.8", &params).unwrap();
    let act = FiniteAction::deck_action(&pres, &rat(1, 2)).unwrap();
    let sc = act.invariant_cdga().unwrap();
    let ring = sc.cohomology();
    assert_eq!(ring.betti_vector()[1..4].to_vec(), vec![1, 1, 2]);
    let n = 6;
    let span_contains = |p: usize, idx: &[u8]| {
        let basis = ExteriorBasis::new(n, p);
        let target = ExteriorForm::<Rat>::basis(n, idx).to_vec(&basis);
        let mut sweep = EchelonSweep::new(basis.dim());
        for rep in &ring.degrees[p].representatives {
            let amb = sc.to_ambient(p, rep);
            sweep.absorb(amb);
        }
        // modulo coboundaries
        for b in &ring.degrees[p].coboundaries {
            sweep.absorb(sc.to_ambient(p, b));
        }
        sweep.contains(&target)
    };
    assert!(span_contains(1, &[5]));
    assert!(span_contains(2, &[3, 4]));
    assert!(span_contains(3, &[0, 1, 2]));
    assert!(span_contains(3, &[3, 4, 5]));
}

#[test]
fn g518_k3_action_invariants() {
    let pres = catalog::presentation("g5.18+R", &BTreeMap::new()).unwrap();
    let act = FiniteAction::deck_action(&pres, &rat(2, 3)).unwrap();
    assert_eq!(act.order, 3);
    let ring = act.invariant_cohomology().unwrap();
    assert_eq!(ring.betti(1), 2);
    assert_eq!(ring.betti(2), 3);
    assert_eq!(ring.betti(3), 4);
}

#[test]
fn projector_image_equals_fixed_space_both_ways() {
    let pres = catalog::presentation("g3.5+R3", &BTreeMap::new()).unwrap();
    let act = FiniteAction::deck_action(&pres, &rat(1, 2)).unwrap();
    for p in 0..=4usize {
        let proj = act.averaging_projector(p).unwrap();
        let dim = proj.rows();
        // image of P = ker(P - I): P x = x for x in image, and both ranks agree
        let pm1 = proj.sub(&Matrix::identity(dim));
        assert!(pm1.mul(&proj).is_zero(), "P^2 = P fails at {p}");
        let fixed = pm1.kernel_basis();
        assert_eq!(fixed.len(), proj.rank(), "rank mismatch at {p}");
        for v in &fixed {
            assert_eq!(proj.mul_vec(v), *v, "fixed vector not preserved");
        }
        // induced action on cohomology has the same fixed dimension as the
        // invariant cohomology in that degree
        let full = SubComplex::full(&act.algebra).cohomology();
        let induced = action_on_cohomology(&act, &full, p).unwrap();
        let b = induced.rows();
        let fixed_classes =
            induced.sub(&Matrix::identity(b)).kernel_basis().len();
        let inv = act.invariant_cohomology().unwrap();
        assert_eq!(fixed_classes, inv.betti(p), "degree {p}");
    }
}

#[test]
fn ce_differential_of_modified_shift_family() {
    // modified shift family: d a1 = -a26, d a2 = -a36 (evaluation oracle:
    // d a(X_i, X_j) = -a([X_i, X_j]) on all pairs)
    let tilde = modified("g6.10");
    let n = tilde.algebra.dim();
    for k in 0..n as u8 {
        let d = solvcoh_algebra::exterior::ce_differential::<Rat>(
            &tilde.algebra,
            &ExteriorForm::basis(n, &[k]),
        );
        // oracle: coefficient of a^{ij} is -(coefficient of X_k in [X_i, X_j])
        for i in 0..n {
            for j in i + 1..n {
                let c = d.terms.get(&vec![i as u8, j as u8]).cloned().unwrap_or_else(|| rat_int(0));
                let bracket = tilde.algebra.bracket_basis(i, j);
                assert_eq!(c, -bracket[k as usize].clone(), "d a{} at ({i},{j})", k + 1);
            }
        }
    }
    let d1 = solvcoh_algebra::exterior::ce_differential::<Rat>(
        &tilde.algebra,
        &ExteriorForm::basis(6, &[0]),
    );
    assert_eq!(d1.terms.get(&vec![1, 5]), Some(&rat(-1, 1)));
    let d2 = solvcoh_algebra::exterior::ce_differential::<Rat>(
        &tilde.algebra,
        &ExteriorForm::basis(6, &[1]),
    );
    assert_eq!(d2.terms.get(&vec![2, 5]), Some(&rat(-1, 1)));
}

#[test]
fn poincare_check_rejects_non_unimodular() {
    let g = solvcoh_algebra::lie::LieAlgebra::from_table(2, &[((1, 2), &[(1, 1, 1)])]).unwrap();
    let sc = SubComplex::full(&g);
    assert!(sc.poincare_check().is_err());
    // and passes with duality data on a unimodular instance
    let sc = modified("g5.18+R");
    assert_eq!(sc.poincare_check().unwrap(), true);
}

#[test]
fn betti_integrality_of_invariants() {
    // trace of the averaging projector is the invariant dimension: an
    // integer even though the entries pass through a cyclotomic field
    let pres = catalog::presentation("g5.18+R", &BTreeMap::new()).unwrap();
    for q in [rat(2, 3), rat(1, 2), rat(1, 3)] {
        let act = FiniteAction::deck_action(&pres, &q).unwrap();
        for p in 0..=6usize {
            let proj = act.averaging_projector(p).unwrap();
            let tr = proj.trace();
            assert!(solvcoh_exact::scalar::rat_is_integer(&tr), "q={q} p={p}: trace {tr}");
        }
    }
}
