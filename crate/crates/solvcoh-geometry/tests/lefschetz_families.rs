//! Lefschetz verdicts for the generic symplectic form of each modified
//! algebra, against the published proposition: 0-Lefschetz but not 1- or
//! 2-Lefschetz for the deformations of g6.10, g5.14+R, g5.18+R; hard
//! Lefschetz for g5.17+R (p != 0) and the torus cases.

use std::collections::BTreeMap;

use solvcoh_algebra::catalog;
use solvcoh_algebra::subcomplex::SubComplex;
use solvcoh_exact::scalar::{rat_int, Rat};
use solvcoh_geometry::lefschetz::generic_lefschetz;
use solvcoh_geometry::symplectic::symplectic_exists;

fn modified_complex(name: &str, params: &[(&str, i64)]) -> SubComplex {
    let map: BTreeMap<String, Rat> =
        params.iter().map(|(k, v)| (k.to_string(), rat_int(*v))).collect();
    let tilde = catalog::presentation(name, &map).unwrap().modify();
    SubComplex::full(&tilde)
}

#[test]
fn zero_but_not_one_or_two_lefschetz() {
    for name in ["g6.10", "g5.14+R", "g5.18+R"] {
        let sc = modified_complex(name, &[]);
        let v = symplectic_exists(&sc).unwrap();
        assert!(v.exists(), "{name}");
        let rep = generic_lefschetz(&sc, v.family(), 3, 42).unwrap();
        assert_eq!(rep.verdict(0), Some(true), "{name} 0-Lefschetz");
        assert_eq!(rep.verdict(1), Some(false), "{name} 1-Lefschetz");
        assert_eq!(rep.verdict(2), Some(false), "{name} 2-Lefschetz");
    }
}

#[test]
fn hard_lefschetz_for_g517_and_torus() {
    // g5.17 with p != 0: modification is g5.7^{1,-1,-1} + R
    let sc = modified_complex("g5.17+R", &[("p", 1), ("r", 2)]);
    let v = symplectic_exists(&sc).unwrap();
    assert!(v.exists());
    let rep = generic_lefschetz(&sc, v.family(), 3, 42).unwrap();
    assert!(rep.is_lefschetz_up_to(3), "{rep:?}");
    // torus deformations: g3.5+R3 and g5.17 with p = 0
    for (name, params) in [("g3.5+R3", vec![]), ("g5.17+R", vec![("p", 0), ("r", 2)])] {
        let sc = modified_complex(name, &params);
        let v = symplectic_exists(&sc).unwrap();
        let rep = generic_lefschetz(&sc, v.family(), 3, 7).unwrap();
        assert!(rep.is_lefschetz_up_to(3), "{name}: {rep:?}");
    }
}

#[test]
fn invariant_form_lefschetz_on_quotients() {
    // At sub-angles the quotient carries only the invariant classes; the
    // generic invariant symplectic family decides the star-marked column.
    use solvcoh_algebra::action::FiniteAction;
    // g6.10 at pi: invariant ring (2,3,4); not hard Lefschetz
    let map = BTreeMap::new();
    let pres = catalog::presentation("g6.10", &map).unwrap();
    let act = FiniteAction::deck_action(&pres, &rat_int(1)).unwrap();
    let sc = act.invariant_cdga().unwrap();
    let v = symplectic_exists(&sc).unwrap();
    assert!(v.exists());
    let rep = generic_lefschetz(&sc, v.family(), 3, 11).unwrap();
    assert_eq!(rep.verdict(0), Some(true));
    assert!(!rep.is_lefschetz_up_to(3));
    // g5.17, p=0, r=2 at pi: invariant ring (4,7,8); hard Lefschetz holds
    let mut map = BTreeMap::new();
    map.insert("p".to_string(), rat_int(0));
    map.insert("r".to_string(), rat_int(2));
    let pres = catalog::presentation("g5.17+R", &map).unwrap();
    let act = FiniteAction::deck_action(&pres, &rat_int(1)).unwrap();
    let sc = act.invariant_cdga().unwrap();
    let v = symplectic_exists(&sc).unwrap();
    assert!(v.exists());
    let rep = generic_lefschetz(&sc, v.family(), 3, 11).unwrap();
    assert!(rep.is_lefschetz_up_to(3), "{rep:?}");
}
