//! Sturm sequences: real root counting, isolation, and satisfiability of
//! polynomial sign constraints at a real root.
//!
//! All arithmetic is over exact rationals. Roots are never evaluated in
//! floating point; each is held as an isolating interval that can be refined
//! on demand.

use crate::scalar::{rat, Rat};
use crate::unipoly::UniPoly;
use crate::ExactError;
use num_traits::{Signed, Zero};

/// Sturm chain of a squarefree polynomial.
#[derive(Clone, Debug)]
pub struct SturmChain {
    chain: Vec<UniPoly<Rat>>,
}

/// Sign constraint `poly <cmp> 0` imposed at a root.
#[derive(Clone, Debug)]
pub struct Constraint {
    pub poly: UniPoly<Rat>,
    pub kind: ConstraintKind,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ConstraintKind {
    Positive,
    Negative,
    NonNegative,
    NonPositive,
    NonZero,
}

impl Constraint {
    pub fn positive(poly: UniPoly<Rat>) -> Self {
        Constraint { poly, kind: ConstraintKind::Positive }
    }
    pub fn negative(poly: UniPoly<Rat>) -> Self {
        Constraint { poly, kind: ConstraintKind::Negative }
    }
    pub fn non_negative(poly: UniPoly<Rat>) -> Self {
        Constraint { poly, kind: ConstraintKind::NonNegative }
    }
    pub fn non_positive(poly: UniPoly<Rat>) -> Self {
        Constraint { poly, kind: ConstraintKind::NonPositive }
    }
    pub fn non_zero(poly: UniPoly<Rat>) -> Self {
        Constraint { poly, kind: ConstraintKind::NonZero }
    }

    fn sign_ok(&self, sign: i8) -> bool {
        match self.kind {
            ConstraintKind::Positive => sign > 0,
            ConstraintKind::Negative => sign < 0,
            ConstraintKind::NonNegative => sign >= 0,
            ConstraintKind::NonPositive => sign <= 0,
            ConstraintKind::NonZero => sign != 0,
        }
    }
}

/// Result of root isolation: disjoint rational intervals, one per real root
/// of the squarefree part, plus the satisfiability verdict when constraints
/// were supplied.
#[derive(Clone, Debug)]
pub struct Isolation {
    pub squarefree: UniPoly<Rat>,
    /// Either an exact rational root or an open interval (lo, hi) containing
    /// exactly one root, with f(lo), f(hi) nonzero.
    pub roots: Vec<RootLocation>,
    pub satisfiable: bool,
    /// Indices into `roots` of the roots meeting every constraint.
    pub witnesses: Vec<usize>,
}

#[derive(Clone, Debug, PartialEq)]
pub enum RootLocation {
    Exact(Rat),
    Interval(Rat, Rat),
}

impl SturmChain {
    /// Build the chain for the squarefree part of `p`.
    pub fn new(p: &UniPoly<Rat>) -> Result<Self, ExactError> {
        if p.is_zero() {
            return Err(ExactError::ZeroPolynomial);
        }
        let f = p.squarefree_part();
        let mut chain = vec![f.clone(), f.derivative()];
        while !chain.last().unwrap().is_zero() {
            let n = chain.len();
            let r = chain[n - 2].rem(&chain[n - 1]).neg();
            chain.push(r);
        }
        chain.pop();
        Ok(SturmChain { chain })
    }

    pub fn squarefree(&self) -> &UniPoly<Rat> {
        &self.chain[0]
    }

    fn variations_at(&self, x: &Rat) -> usize {
        let signs: Vec<i8> = self.chain.iter().map(|p| sign_rat(&p.eval(x))).collect();
        count_variations(&signs)
    }

    fn variations_at_inf(&self, positive: bool) -> usize {
        let signs: Vec<i8> = self
            .chain
            .iter()
            .map(|p| match p.degree() {
                None => 0,
                Some(d) => {
                    let l = sign_rat(p.leading().unwrap());
                    if positive || d % 2 == 0 {
                        l
                    } else {
                        -l
                    }
                }
            })
            .collect();
        count_variations(&signs)
    }

    /// Number of distinct real roots in the half-open interval (lo, hi].
    pub fn count_roots_in(&self, lo: &Rat, hi: &Rat) -> usize {
        self.variations_at(lo) - self.variations_at(hi)
    }

    /// Number of distinct real roots.
    pub fn count_real_roots(&self) -> usize {
        self.variations_at_inf(false) - self.variations_at_inf(true)
    }

    /// A bound B with every real root in (-B, B): Cauchy bound.
    pub fn root_bound(&self) -> Rat {
        let f = &self.chain[0];
        let lead = f.leading().unwrap().clone();
        let mut max = Rat::zero();
        for c in f.coeffs() {
            let a = (c / &lead).abs();
            if a > max {
                max = a;
            }
        }
        max + rat(1, 1)
    }

    /// Isolating intervals for all real roots of the squarefree part.
    pub fn isolate_roots(&self) -> Vec<RootLocation> {
        let f = &self.chain[0];
        if f.degree().map_or(true, |d| d == 0) {
            return Vec::new();
        }
        let b = self.root_bound();
        let mut out = Vec::new();
        self.isolate_rec(&-&b, &b, &mut out);
        out
    }

    fn isolate_rec(&self, lo: &Rat, hi: &Rat, out: &mut Vec<RootLocation>) {
        let n = self.count_roots_in(lo, hi);
        if n == 0 {
            return;
        }
        let f = &self.chain[0];
        if n == 1 {
            // (lo, hi] holds one root; shrink until the endpoints are clean.
            let mut lo = lo.clone();
            let mut hi = hi.clone();
            if f.eval(&hi).is_zero() {
                out.push(RootLocation::Exact(hi));
                return;
            }
            loop {
                let mid = (&lo + &hi) * rat(1, 2);
                let fm = f.eval(&mid);
                if fm.is_zero() {
                    out.push(RootLocation::Exact(mid));
                    return;
                }
                if self.count_roots_in(&lo, &mid) == 1 {
                    hi = mid;
                } else {
                    lo = mid;
                }
                if !f.eval(&lo).is_zero() {
                    out.push(RootLocation::Interval(lo, hi));
                    return;
                }
            }
        }
        // Two or more roots: split. A root landing exactly on the midpoint is
        // picked up by the left half (intervals are half-open on the left).
        let mid = (lo + hi) * rat(1, 2);
        self.isolate_rec(lo, &mid, out);
        self.isolate_rec(&mid, hi, out);
    }

    /// Refine an interval around the single contained root until `g` has no
    /// root inside it, then report the (constant) sign of `g` there.
    fn sign_of_at_root(&self, loc: &RootLocation, g: &UniPoly<Rat>) -> i8 {
        match loc {
            RootLocation::Exact(r) => sign_rat(&g.eval(r)),
            RootLocation::Interval(lo, hi) => {
                let f = &self.chain[0];
                // Common roots of f and g: the root is a root of g exactly
                // when it is a root of gcd(f, g).
                let common = f.gcd(g);
                if common.degree().map_or(false, |d| d > 0) {
                    let gc = SturmChain::new(&common).unwrap();
                    if gc.count_roots_in(lo, hi) > 0 {
                        return 0;
                    }
                }
                if g.degree().map_or(true, |d| d == 0) {
                    return sign_rat(&g.eval(lo));
                }
                let gs = SturmChain::new(g).unwrap();
                let mut lo = lo.clone();
                let mut hi = hi.clone();
                loop {
                    if gs.count_roots_in(&lo, &hi) == 0 && !g.eval(&lo).is_zero() {
                        let mid = (&lo + &hi) * rat(1, 2);
                        let s = sign_rat(&g.eval(&mid));
                        if s != 0 {
                            return s;
                        }
                    }
                    let mid = (&lo + &hi) * rat(1, 2);
                    if f.eval(&mid).is_zero() {
                        return sign_rat(&g.eval(&mid));
                    }
                    if self.count_roots_in(&lo, &mid) == 1 {
                        hi = mid;
                    } else {
                        lo = mid;
                    }
                }
            }
        }
    }
}

/// Decide whether `p` has a real root satisfying all sign constraints.
///
/// The squarefree part is taken first. Each root is isolated exactly and the
/// constraint polynomials are signed at it by interval refinement; no
/// floating point is involved.
pub fn sturm_isolate(p: &UniPoly<Rat>, constraints: &[Constraint]) -> Result<Isolation, ExactError> {
    let chain = SturmChain::new(p)?;
    let roots = chain.isolate_roots();
    let mut witnesses = Vec::new();
    for (i, loc) in roots.iter().enumerate() {
        let ok = constraints.iter().all(|c| {
            if c.poly.is_zero() {
                return c.sign_ok(0);
            }
            c.sign_ok(chain.sign_of_at_root(loc, &c.poly))
        });
        if ok {
            witnesses.push(i);
        }
    }
    Ok(Isolation {
        squarefree: chain.squarefree().clone(),
        satisfiable: !witnesses.is_empty(),
        roots,
        witnesses,
    })
}

/// Sign of the algebraic number given by (minimal polynomial chain, interval)
/// evaluated under a polynomial expression; exposed for number-field use.
pub fn sign_at_root(chain: &SturmChain, loc: &RootLocation, g: &UniPoly<Rat>) -> i8 {
    chain.sign_of_at_root(loc, g)
}

fn sign_rat(q: &Rat) -> i8 {
    if q.is_zero() {
        0
    } else if q.is_positive() {
        1
    } else {
        -1
    }
}

fn count_variations(signs: &[i8]) -> usize {
    let mut count = 0;
    let mut last = 0i8;
    for &s in signs {
        if s == 0 {
            continue;
        }
        if last != 0 && s != last {
            count += 1;
        }
        last = s;
    }
    count
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(coeffs: &[i64]) -> UniPoly<Rat> {
        UniPoly::from_i64(coeffs)
    }

    #[test]
    fn cubic_with_unit_interval_constraint() {
        // s^3 - 5 s^2 + 6 s - 1: sign change on (0, 1), so a root in there.
        let f = p(&[-1, 6, -5, 1]);
        let cons = vec![
            Constraint::positive(p(&[0, 1])),
            Constraint::negative(p(&[-1, 1])),
        ];
        let iso = sturm_isolate(&f, &cons).unwrap();
        assert!(iso.satisfiable);
        assert_eq!(iso.roots.len(), 3);
    }

    #[test]
    fn no_real_roots() {
        let f = p(&[1, 0, 1]); // s^2 + 1
        let iso = sturm_isolate(&f, &[]).unwrap();
        assert!(!iso.satisfiable);
        assert!(iso.roots.is_empty());
    }

    #[test]
    fn sqrt_two_between_one_and_two() {
        let f = p(&[-2, 0, 1]);
        let cons = vec![
            Constraint::positive(p(&[-1, 1])),
            Constraint::negative(p(&[-2, 1])),
        ];
        let iso = sturm_isolate(&f, &cons).unwrap();
        assert!(iso.satisfiable);
        assert_eq!(iso.witnesses.len(), 1);
    }

    #[test]
    fn zero_polynomial_rejected() {
        assert!(SturmChain::new(&UniPoly::zero()).is_err());
    }

    #[test]
    fn exact_rational_roots_found() {
        // (x - 1/2)(x - 3)
        let f = p(&[3, -7, 2]);
        let iso = sturm_isolate(&f, &[]).unwrap();
        assert_eq!(iso.roots.len(), 2);
        // constraint x != 1/2 should leave only the root at 3
        let cons = vec![Constraint::non_zero(p(&[-1, 2]))];
        let iso = sturm_isolate(&f, &cons).unwrap();
        assert_eq!(iso.witnesses.len(), 1);
    }

    #[test]
    fn cross_check_against_float_refinement() {
        use rand::{Rng, SeedableRng};
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(7);
        for _ in 0..100 {
            let coeffs: Vec<i64> = (0..3).map(|_| rng.gen_range(-9..=9)).collect();
            let f = UniPoly::from_i64(&[coeffs[0], coeffs[1], coeffs[2], 1]);
            let chain = SturmChain::new(&f).unwrap();
            let locs = chain.isolate_roots();
            // float oracle: count sign changes of the squarefree part on a fine grid
            let fs = chain.squarefree();
            let ev = |x: f64| {
                fs.coeffs()
                    .iter()
                    .enumerate()
                    .map(|(i, c)| {
                        let c = c.numer().to_string().parse::<f64>().unwrap()
                            / c.denom().to_string().parse::<f64>().unwrap();
                        c * x.powi(i as i32)
                    })
                    .sum::<f64>()
            };
            for loc in &locs {
                match loc {
                    RootLocation::Exact(r) => {
                        let x = r.numer().to_string().parse::<f64>().unwrap()
                            / r.denom().to_string().parse::<f64>().unwrap();
                        assert!(ev(x).abs() < 1e-6);
                    }
                    RootLocation::Interval(lo, hi) => {
                        // refine by bisection in f64 from the exact endpoints
                        let mut a = lo.numer().to_string().parse::<f64>().unwrap()
                            / lo.denom().to_string().parse::<f64>().unwrap();
                        let mut b = hi.numer().to_string().parse::<f64>().unwrap()
                            / hi.denom().to_string().parse::<f64>().unwrap();
                        let fa = ev(a);
                        if fa == 0.0 {
                            continue;
                        }
                        for _ in 0..200 {
                            let m = 0.5 * (a + b);
                            if (ev(m) < 0.0) == (fa < 0.0) {
                                a = m;
                            } else {
                                b = m;
                            }
                        }
                        let root = 0.5 * (a + b);
                        assert!(ev(root).abs() < 1e-9, "float refinement disagrees");
                    }
                }
            }
        }
    }
}
