//! Triple Massey products on a finite-dimensional subcomplex, with exact
//! indeterminacy and a choice-independent vanishing verdict.
//!
//! Convention: with dx = a^b and dy = b^c, the representative is
//! (-1)^{|a|} (x^c - (-1)^{|a|} a^y); the indeterminacy is
//! [a] H^{|b|+|c|-1} + H^{|a|+|b|-1} [c].

use solvcoh_algebra::cohomology::CohomologyRing;
use solvcoh_algebra::subcomplex::SubComplex;
use solvcoh_algebra::AlgebraError;
use solvcoh_exact::scalar::{rat_int, Rat};
use solvcoh_exact::Matrix;

/// A computed triple product <[a],[b],[c]>.
#[derive(Clone, Debug)]
pub struct MasseyTriple {
    /// Degrees of a, b, c.
    pub degrees: (usize, usize, usize),
    /// Class coordinates of the inputs.
    pub classes: (Vec<Rat>, Vec<Rat>, Vec<Rat>),
    /// Chosen bounding cochains dx = a^b, dy = b^c (chain coordinates).
    pub x: Vec<Rat>,
    pub y: Vec<Rat>,
    /// Representative cocycle (chain coordinates, degree |a|+|b|+|c|-1).
    pub representative: Vec<Rat>,
    /// Class coordinates of a spanning set of the indeterminacy.
    pub indeterminacy: Vec<Vec<Rat>>,
    /// representative's class lies in the indeterminacy.
    pub vanishes: bool,
}

/// Compute <[a],[b],[c]>; errors if a product is nonzero in cohomology.
pub fn massey_triple(
    sc: &SubComplex,
    ring: &CohomologyRing<Rat>,
    (pa, class_a): (usize, &[Rat]),
    (pb, class_b): (usize, &[Rat]),
    (pc, class_c): (usize, &[Rat]),
) -> Result<MasseyTriple, AlgebraError> {
    massey_triple_with_shift(sc, ring, (pa, class_a), (pb, class_b), (pc, class_c), None, None)
}

/// As `massey_triple` but with explicit extra cocycles added to the chosen
/// bounding cochains (used to verify independence of the choice).
pub fn massey_triple_with_shift(
    sc: &SubComplex,
    ring: &CohomologyRing<Rat>,
    (pa, class_a): (usize, &[Rat]),
    (pb, class_b): (usize, &[Rat]),
    (pc, class_c): (usize, &[Rat]),
    shift_x: Option<&[Rat]>,
    shift_y: Option<&[Rat]>,
) -> Result<MasseyTriple, AlgebraError> {
    let a = ring.representative(pa, class_a);
    let b = ring.representative(pb, class_b);
    let c = ring.representative(pc, class_c);
    let ab = sc.wedge(pa, &a, pb, &b).expect("wedge stays inside");
    let bc = sc.wedge(pb, &b, pc, &c).expect("wedge stays inside");
    let mut x = solve_exact(sc, pa + pb - 1, &ab).ok_or(AlgebraError::Precondition {
        message: "undefined product: [a][b] != 0".into(),
    })?;
    let mut y = solve_exact(sc, pb + pc - 1, &bc).ok_or(AlgebraError::Precondition {
        message: "undefined product: [b][c] != 0".into(),
    })?;
    if let Some(sx) = shift_x {
        assert!(sc.d(pa + pb - 1, sx).iter().all(|v| num_traits::Zero::is_zero(v)));
        x = add_vec(&x, sx);
    }
    if let Some(sy) = shift_y {
        assert!(sc.d(pb + pc - 1, sy).iter().all(|v| num_traits::Zero::is_zero(v)));
        y = add_vec(&y, sy);
    }
    // representative (-1)^{|a|} (x ^ c - (-1)^{|a|} a ^ y)
    let xc = sc.wedge(pa + pb - 1, &x, pc, &c).unwrap();
    let ay = sc.wedge(pa, &a, pb + pc - 1, &y).unwrap();
    let sign_a = if pa % 2 == 1 { -1 } else { 1 };
    let inner = sub_vec(&xc, &scale_vec(&ay, rat_int(sign_a)));
    let representative = scale_vec(&inner, rat_int(sign_a));
    let out_deg = pa + pb + pc - 1;
    // must be a cocycle
    debug_assert!(sc.d(out_deg, &representative).iter().all(|v| num_traits::Zero::is_zero(v)));
    // indeterminacy: [a] H^{pb+pc-1} + H^{pa+pb-1} [c]
    let mut indeterminacy = Vec::new();
    let wedge = sc.wedge_fn();
    for h in 0..ring.betti(pb + pc - 1) {
        let mut e = vec![rat_int(0); ring.betti(pb + pc - 1)];
        e[h] = rat_int(1);
        indeterminacy.push(ring.cup(pa, class_a, pb + pc - 1, &e, &wedge));
    }
    for h in 0..ring.betti(pa + pb - 1) {
        let mut e = vec![rat_int(0); ring.betti(pa + pb - 1)];
        e[h] = rat_int(1);
        indeterminacy.push(ring.cup(pa + pb - 1, &e, pc, class_c, &wedge));
    }
    let rep_class = ring.class_of(out_deg, &representative).expect("representative is a cocycle");
    let vanishes = in_span(&indeterminacy, &rep_class);
    Ok(MasseyTriple {
        degrees: (pa, pb, pc),
        classes: (class_a.to_vec(), class_b.to_vec(), class_c.to_vec()),
        x,
        y,
        representative,
        indeterminacy,
        vanishes,
    })
}

/// Exhaustive scan over triples of basis classes in the given degree
/// patterns; returns the non-vanishing triples found.
pub fn massey_scan(
    sc: &SubComplex,
    ring: &CohomologyRing<Rat>,
    patterns: &[(usize, usize, usize)],
) -> Vec<MasseyTriple> {
    let mut found = Vec::new();
    for &(pa, pb, pc) in patterns {
        for ia in 0..ring.betti(pa) {
            for ib in 0..ring.betti(pb) {
                for ic in 0..ring.betti(pc) {
                    let ea = unit(ring.betti(pa), ia);
                    let eb = unit(ring.betti(pb), ib);
                    let ec = unit(ring.betti(pc), ic);
                    if let Ok(t) =
                        massey_triple(sc, ring, (pa, &ea), (pb, &eb), (pc, &ec))
                    {
                        if !t.vanishes {
                            found.push(t);
                        }
                    }
                }
            }
        }
    }
    found
}

/// Independent re-validation of a non-vanishing witness: recompute the
/// boundary equations, closedness, and non-membership with fresh solves.
pub fn verify_massey_witness(
    sc: &SubComplex,
    ring: &CohomologyRing<Rat>,
    t: &MasseyTriple,
) -> bool {
    let (pa, pb, pc) = t.degrees;
    let a = ring.representative(pa, &t.classes.0);
    let b = ring.representative(pb, &t.classes.1);
    let c = ring.representative(pc, &t.classes.2);
    let ab = sc.wedge(pa, &a, pb, &b).unwrap();
    let bc = sc.wedge(pb, &b, pc, &c).unwrap();
    if sc.d(pa + pb - 1, &t.x) != ab || sc.d(pb + pc - 1, &t.y) != bc {
        return false;
    }
    let out_deg = pa + pb + pc - 1;
    if !sc.d(out_deg, &t.representative).iter().all(|v| num_traits::Zero::is_zero(v)) {
        return false;
    }
    let rep_class = match ring.class_of(out_deg, &t.representative) {
        Some(cl) => cl,
        None => return false,
    };
    if t.vanishes {
        in_span(&t.indeterminacy, &rep_class)
    } else {
        !in_span(&t.indeterminacy, &rep_class)
    }
}

fn solve_exact(sc: &SubComplex, p: usize, v: &[Rat]) -> Option<Vec<Rat>> {
    if v.iter().all(|c| num_traits::Zero::is_zero(c)) {
        return Some(vec![rat_int(0); sc.dim_at(p)]);
    }
    sc.differential(p).solve(v)
}

fn in_span(span: &[Vec<Rat>], v: &[Rat]) -> bool {
    if v.iter().all(|c| num_traits::Zero::is_zero(c)) {
        return true;
    }
    if span.is_empty() {
        return false;
    }
    let m = Matrix::from_rows(span.to_vec()).transpose();
    m.solve(v).is_some()
}

fn unit(n: usize, i: usize) -> Vec<Rat> {
    let mut v = vec![rat_int(0); n];
    v[i] = rat_int(1);
    v
}

fn add_vec(a: &[Rat], b: &[Rat]) -> Vec<Rat> {
    a.iter().zip(b).map(|(x, y)| x + y).collect()
}

fn sub_vec(a: &[Rat], b: &[Rat]) -> Vec<Rat> {
    a.iter().zip(b).map(|(x, y)| x - y).collect()
}

fn scale_vec(a: &[Rat], c: Rat) -> Vec<Rat> {
    a.iter().map(|x| x * &c).collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use solvcoh_algebra::lie::LieAlgebra;

    #[test]
    fn torus_triples_all_vanish() {
        let sc = SubComplex::full(&LieAlgebra::abelian(4));
        let ring = sc.cohomology();
        let found = massey_scan(&sc, &ring, &[(1, 1, 1)]);
        assert!(found.is_empty());
    }

    #[test]
    fn heisenberg_block_has_nonvanishing_triple() {
        // g3.1 + R^3: [X2,X5] = X1; <[a2],[a5],[a2]> is the classic witness
        let g = LieAlgebra::from_table(6, &[((2, 5), &[(1, 1, 1)])]).unwrap();
        let sc = SubComplex::full(&g);
        let ring = sc.cohomology();
        let found = massey_scan(&sc, &ring, &[(1, 1, 1)]);
        assert!(!found.is_empty());
        for t in &found {
            assert!(verify_massey_witness(&sc, &ring, t));
        }
    }

    #[test]
    fn verdict_independent_of_bounding_cochain() {
        use rand::SeedableRng;
        let g = LieAlgebra::from_table(6, &[((2, 5), &[(1, 1, 1)])]).unwrap();
        let sc = SubComplex::full(&g);
        let ring = sc.cohomology();
        let found = massey_scan(&sc, &ring, &[(1, 1, 1)]);
        let t = &found[0];
        let (pa, pb, pc) = t.degrees;
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(17);
        for _ in 0..5 {
            // random cocycle shifts in the right degrees
            let zx = random_cocycle(&sc, pa + pb - 1, &mut rng);
            let zy = random_cocycle(&sc, pb + pc - 1, &mut rng);
            let t2 = massey_triple_with_shift(
                &sc,
                &ring,
                (pa, &t.classes.0),
                (pb, &t.classes.1),
                (pc, &t.classes.2),
                Some(&zx),
                Some(&zy),
            )
            .unwrap();
            assert_eq!(t2.vanishes, t.vanishes);
        }
    }

    fn random_cocycle(
        sc: &SubComplex,
        p: usize,
        rng: &mut rand_chacha::ChaCha8Rng,
    ) -> Vec<Rat> {
        use rand::Rng;
        let kernel = sc.differential(p).kernel_basis();
        let mut v = vec![rat_int(0); sc.dim_at(p)];
        for k in kernel {
            let c = rat_int(rng.gen_range(-3i64..=3));
            for (o, x) in v.iter_mut().zip(&k) {
                *o = &*o + &(&c * x);
            }
        }
        v
    }
}
