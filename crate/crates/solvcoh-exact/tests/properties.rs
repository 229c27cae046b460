//! Property tests for the exact kernel.

use proptest::prelude::*;
use solvcoh_exact::scalar::{rat, Rat};
use solvcoh_exact::unipoly::UniPoly;
use solvcoh_exact::Matrix;

fn small_rat() -> impl Strategy<Value = Rat> {
    (-6i64..=6, 1i64..=3).prop_map(|(n, d)| rat(n, d))
}

fn small_matrix(max: usize) -> impl Strategy<Value = Matrix<Rat>> {
    (1..=max).prop_flat_map(move |n| {
        proptest::collection::vec(small_rat(), n * n)
            .prop_map(move |data| Matrix::from_fn(n, n, |r, c| data[r * n + c].clone()))
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn rank_plus_nullity_is_cols(m in small_matrix(5)) {
        let res = m.rref();
        prop_assert_eq!(res.rank + m.kernel_basis().len(), m.cols());
        for v in m.kernel_basis() {
            let image = m.mul_vec(&v);
            prop_assert!(image.iter().all(num_traits::Zero::is_zero));
        }
    }

    #[test]
    fn cayley_hamilton(m in small_matrix(5)) {
        let chi = m.char_poly().unwrap();
        prop_assert!(m.eval_poly(&chi).is_zero());
    }

    #[test]
    fn min_poly_divides_char_poly(m in small_matrix(4)) {
        let chi = m.char_poly().unwrap();
        let min = m.min_poly().unwrap();
        prop_assert!(chi.rem(&min).is_zero());
        prop_assert!(m.eval_poly(&min).is_zero());
    }

    #[test]
    fn poly_gcd_divides_both(
        a in proptest::collection::vec(-4i64..=4, 1..5),
        b in proptest::collection::vec(-4i64..=4, 1..5),
    ) {
        let pa = UniPoly::<Rat>::from_i64(&a);
        let pb = UniPoly::<Rat>::from_i64(&b);
        if pa.is_zero() || pb.is_zero() {
            return Ok(());
        }
        let g = pa.gcd(&pb);
        prop_assert!(pa.rem(&g).is_zero());
        prop_assert!(pb.rem(&g).is_zero());
        let (d, u, v) = pa.extended_gcd(&pb);
        prop_assert_eq!(u.mul(&pa).add(&v.mul(&pb)), d);
    }
}
