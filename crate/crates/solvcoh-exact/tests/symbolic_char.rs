//! Symbolic characteristic coefficients of the weight-one monodromy family
//! against the published expressions, checked by exact cross-multiplied
//! identity after the substitutions r := w + v, s := w v.

use solvcoh_exact::matrix::symbolic_char_coeffs;
use solvcoh_exact::scalar::{rat, rat_int, Field, Rat};
use solvcoh_exact::{Matrix, RatFunc};

type RF = RatFunc<Rat>;

fn vars3() -> (RF, RF, RF) {
    // 0 = w, 1 = v, 2 = u (u = 2 cos of the rotation angle)
    (RF::var(0, 3), RF::var(1, 3), RF::var(2, 3))
}

/// Substitution map sending r -> w+v, s -> wv inside a 2-variable (r, s)
/// expression, landing in the 3-variable (w, v, u) ring.
fn subst_rs(expr: &RF) -> RF {
    let (w, v, _) = vars3();
    let r = w.add(&v);
    let s = w.mul(&v);
    expr.substitute(&[r, s])
}

fn rs(i: usize) -> RF {
    RF::var(i, 2)
}

#[test]
fn diag_w_v_coefficients() {
    let (w, v, _) = vars3();
    let zero = RF::zero();
    let m = Matrix::from_rows(vec![vec![w.clone(), zero.clone()], vec![zero, v.clone()]]);
    let coeffs = symbolic_char_coeffs(&m).unwrap();
    // x^2 - (w+v) x + wv
    assert_eq!(coeffs[1], w.add(&v).neg());
    assert_eq!(coeffs[0], w.mul(&v));
    assert_eq!(coeffs[2], RF::one());
}

/// The full-turn matrix diag(1/(wv), w, v) + I_2 of the weight-one family
/// with k = 1: a_4 = -2 - (rs+1)/s under r = w+v, s = wv.
#[test]
fn full_turn_a4_matches_published_expression() {
    let (w, v, _) = vars3();
    let one = RF::one();
    let zero = RF::zero();
    let inv_wv = one.div(&w.mul(&v)).unwrap();
    let rows = vec![
        vec![inv_wv, zero.clone(), zero.clone(), zero.clone(), zero.clone()],
        vec![zero.clone(), w.clone(), zero.clone(), zero.clone(), zero.clone()],
        vec![zero.clone(), zero.clone(), v.clone(), zero.clone(), zero.clone()],
        vec![zero.clone(), zero.clone(), zero.clone(), one.clone(), zero.clone()],
        vec![zero.clone(), zero.clone(), zero.clone(), zero.clone(), one.clone()],
    ];
    let m = Matrix::from_rows(rows);
    let coeffs = symbolic_char_coeffs(&m).unwrap();
    // a_4 = -2 - (rs + 1)/s
    let r = rs(0);
    let s = rs(1);
    let target = RF::from_rat(&rat_int(-2)).sub(
        &r.mul(&s).add(&RF::constant(2, rat_int(1))).div(&s).unwrap(),
    );
    assert_eq!(coeffs[4], subst_rs(&target));
    // a_0 = -1 (paper's list for the full-turn characteristic polynomial)
    assert_eq!(coeffs[0], RF::from_rat(&rat_int(-1)));
    // a_3 = 1 + 2(rs+1)/s + (s^2+r)/s
    let two = RF::constant(2, rat_int(2));
    let t3 = RF::constant(2, rat_int(1))
        .add(&two.mul(&r.mul(&s).add(&RF::constant(2, rat_int(1))).div(&s).unwrap()))
        .add(&s.mul(&s).add(&r).div(&s).unwrap());
    assert_eq!(coeffs[3], subst_rs(&t3));
}

/// The general-angle variant with u = 2 cos(2 pi / k):
/// a_1 = u + (r + s^2)/s.
#[test]
fn general_angle_a1_matches_published_expression() {
    let (w, v, u) = vars3();
    let one = RF::one();
    let zero = RF::zero();
    let inv_wv = one.div(&w.mul(&v)).unwrap();
    let half = RF::constant(3, rat(1, 2));
    let cos = u.mul(&half);
    // sin^2 = 1 - cos^2; the rotation block contributes x^2 - u x + 1
    // regardless of the sin entries, so represent sin symbolically via a
    // block with the right characteristic polynomial: [[cos, t],[-(1-cos^2)/t, cos]]
    // has trace u and determinant cos^2 + (1-cos^2) = 1 for any t != 0; take t = 1.
    let sin_sq = one.sub(&cos.mul(&cos));
    let rows = vec![
        vec![inv_wv, zero.clone(), zero.clone(), zero.clone(), zero.clone()],
        vec![zero.clone(), w.clone(), zero.clone(), zero.clone(), zero.clone()],
        vec![zero.clone(), zero.clone(), v.clone(), zero.clone(), zero.clone()],
        vec![zero.clone(), zero.clone(), zero.clone(), cos.clone(), one.clone()],
        vec![zero.clone(), zero.clone(), zero.clone(), sin_sq.neg(), cos.clone()],
    ];
    let m = Matrix::from_rows(rows);
    let coeffs = symbolic_char_coeffs(&m).unwrap();
    // a_1 = u + (r + s^2)/s with r = w+v, s = wv (and u passed through)
    let r = RF::var(0, 3).add(&RF::var(1, 3));
    let s = RF::var(0, 3).mul(&RF::var(1, 3));
    let target = u.add(&r.add(&s.mul(&s)).div(&s).unwrap());
    assert_eq!(coeffs[1], target);
}

#[test]
fn cayley_hamilton_on_symbolic_matrix() {
    let (w, v, _) = vars3();
    let m = Matrix::from_rows(vec![
        vec![w.clone(), RF::one()],
        vec![RF::zero(), v.clone()],
    ]);
    let chi = m.char_poly().unwrap();
    assert!(m.eval_poly(&chi).is_zero());
}
