//! Rational roots and splitting of squarefree rational polynomials into
//! linear and irreducible quadratic factors.
//!
//! Rational roots are found completely, without big-integer factorization:
//! Sturm isolation lists the real roots, each interval is refined to width
//! below 1/q for every admissible denominator q (divisors of the scaled
//! leading coefficient), and the finitely many candidates are tested
//! exactly. Quadratic factors x^2 + p x + q are found by eliminating q from
//! the remainder conditions with a bivariate resultant.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use crate::multipoly::MultiPoly;
use crate::scalar::{rat_int, Rat};
use crate::sturm::{RootLocation, SturmChain};
use crate::unipoly::UniPoly;
use crate::ExactError;

/// A factor of a squarefree rational polynomial.
#[derive(Clone, Debug, PartialEq)]
pub enum SplitFactor {
    /// x - root
    Linear { root: Rat },
    /// x^2 + p x + q, irreducible over Q. `real_pair` carries (a, b2) with
    /// roots a +- sqrt(-b2) i when the discriminant is negative (b2 > 0),
    /// i.e. x^2 - 2 a x + (a^2 + b2); for positive discriminant the roots
    /// are the real irrationals a +- sqrt(disc)/2.
    Quadratic { p: Rat, q: Rat },
}

impl SplitFactor {
    pub fn poly(&self) -> UniPoly<Rat> {
        match self {
            SplitFactor::Linear { root } => {
                UniPoly::from_coeffs(vec![-root.clone(), rat_int(1)])
            }
            SplitFactor::Quadratic { p, q } => {
                UniPoly::from_coeffs(vec![q.clone(), p.clone(), rat_int(1)])
            }
        }
    }

    /// For an irreducible quadratic with complex roots a +- b i, the pair
    /// (a, b^2); `None` when the roots are real.
    pub fn complex_pair(&self) -> Option<(Rat, Rat)> {
        match self {
            SplitFactor::Linear { .. } => None,
            SplitFactor::Quadratic { p, q } => {
                let a = -p * crate::scalar::rat(1, 2);
                let b2 = q - &a * &a;
                if b2.is_positive() {
                    Some((a, b2))
                } else {
                    None
                }
            }
        }
    }
}

/// All rational roots of a nonzero polynomial (without multiplicity; the
/// caller divides them out as needed).
pub fn rational_roots(f: &UniPoly<Rat>) -> Result<Vec<Rat>, ExactError> {
    if f.is_zero() {
        return Err(ExactError::ZeroPolynomial);
    }
    if f.degree() == Some(0) {
        return Ok(vec![]);
    }
    let sf = f.squarefree_part();
    // Scale to an integer polynomial.
    let mut lcm = BigInt::one();
    for c in sf.coeffs() {
        lcm = lcm.lcm(c.denom());
    }
    let int_coeffs: Vec<BigInt> =
        sf.coeffs().iter().map(|c| (c * Rat::from_integer(lcm.clone())).to_integer()).collect();
    let lead = int_coeffs.last().unwrap().abs();
    let denominators = divisors(&lead)?;
    let qmax = denominators.iter().max().cloned().unwrap_or_else(BigInt::one);

    let chain = SturmChain::new(&sf)?;
    let mut roots = Vec::new();
    for loc in chain.isolate_roots() {
        match loc {
            RootLocation::Exact(r) => roots.push(r),
            RootLocation::Interval(mut lo, mut hi) => {
                // Refine until fewer than one candidate per denominator.
                let width_target = Rat::new(BigInt::one(), &qmax * BigInt::from(2));
                loop {
                    if &hi - &lo < width_target {
                        break;
                    }
                    let mid = (&lo + &hi) * crate::scalar::rat(1, 2);
                    if sf.eval(&mid).is_zero() {
                        lo = mid.clone();
                        hi = mid;
                        break;
                    }
                    if chain.count_roots_in(&lo, &mid) == 1 {
                        hi = mid;
                    } else {
                        lo = mid;
                    }
                }
                if lo == hi {
                    roots.push(lo);
                    continue;
                }
                'dens: for q in &denominators {
                    let qs = Rat::from_integer(q.clone());
                    let lo_s = &lo * &qs;
                    let hi_s = &hi * &qs;
                    let mut p = lo_s.ceil().to_integer();
                    while Rat::from_integer(p.clone()) <= hi_s {
                        let cand = Rat::new(p.clone(), q.clone());
                        if sf.eval(&cand).is_zero() {
                            roots.push(cand);
                            break 'dens;
                        }
                        p += 1;
                    }
                }
            }
        }
    }
    Ok(roots)
}

/// Split a squarefree polynomial into monic linear and irreducible quadratic
/// factors over Q. Errors with `UnsupportedFactor` if an irreducible factor
/// of degree >= 3 remains.
pub fn split_linear_quadratic(f: &UniPoly<Rat>) -> Result<Vec<SplitFactor>, ExactError> {
    if f.is_zero() {
        return Err(ExactError::ZeroPolynomial);
    }
    let mut rest = f.monic();
    let mut out = Vec::new();
    for root in rational_roots(&rest)? {
        let lin = UniPoly::from_coeffs(vec![-root.clone(), rat_int(1)]);
        rest = rest.div_exact(&lin);
        out.push(SplitFactor::Linear { root });
    }
    loop {
        match rest.degree().unwrap() {
            0 => break,
            2 => {
                out.push(SplitFactor::Quadratic { p: rest.coeff(1), q: rest.coeff(0) });
                break;
            }
            1 => {
                // A linear factor the root search must have found already.
                out.push(SplitFactor::Linear { root: -rest.coeff(0) });
                break;
            }
            d if d >= 3 => {
                match find_quadratic_factor(&rest)? {
                    Some((p, q)) => {
                        let quad = UniPoly::from_coeffs(vec![q.clone(), p.clone(), rat_int(1)]);
                        rest = rest.div_exact(&quad);
                        out.push(SplitFactor::Quadratic { p, q });
                    }
                    None => return Err(ExactError::UnsupportedFactor { degree: d }),
                }
            }
            _ => unreachable!(),
        }
    }
    Ok(out)
}

/// Search for a monic rational quadratic factor x^2 + p x + q of a
/// squarefree polynomial with no rational roots.
fn find_quadratic_factor(f: &UniPoly<Rat>) -> Result<Option<(Rat, Rat)>, ExactError> {
    // Remainder of f modulo x^2 + p x + q, coefficients in Q[p, q]:
    // reduce x^k recursively with x^2 = -p x - q.
    let vars = 2usize; // 0 = p, 1 = q
    let p = MultiPoly::<Rat>::var(0, vars);
    let q = MultiPoly::<Rat>::var(1, vars);
    // x^k mod (x^2 + p x + q) = r1_k * x + r0_k
    let mut r1 = MultiPoly::zero(vars); // coefficient of x
    let mut r0 = MultiPoly::one(vars); // x^0 = 1
    let mut a_lin = MultiPoly::zero(vars);
    let mut a_const = MultiPoly::zero(vars);
    for (k, c) in f.coeffs().iter().enumerate() {
        if k > 0 {
            let new_r1 = r0.sub(&p.mul(&r1));
            let new_r0 = q.mul(&r1).neg();
            r1 = new_r1;
            r0 = new_r0;
        }
        if !num_traits::Zero::is_zero(c) {
            let cc = MultiPoly::constant(vars, c.clone());
            a_lin = a_lin.add(&cc.mul(&r1));
            a_const = a_const.add(&cc.mul(&r0));
        }
    }
    if a_lin.is_zero() && a_const.is_zero() {
        // f itself is a multiple of the generic quadratic: impossible.
        return Ok(None);
    }
    let try_p = |pv: &Rat| -> Result<Option<(Rat, Rat)>, ExactError> {
        let a1 = eval_p(&a_lin, pv);
        let a0 = eval_p(&a_const, pv);
        let g = if a1.is_zero() {
            a0
        } else if a0.is_zero() {
            a1
        } else {
            a1.gcd(&a0)
        };
        if g.is_zero() || g.degree() == Some(0) {
            return Ok(None);
        }
        for qv in rational_roots(&g)? {
            let quad = UniPoly::from_coeffs(vec![qv.clone(), pv.clone(), rat_int(1)]);
            if f.rem(&quad).is_zero() {
                return Ok(Some((pv.clone(), qv)));
            }
        }
        Ok(None)
    };
    // Eliminate q when both conditions are nontrivial and independent.
    if !a_lin.is_zero() && !a_const.is_zero() {
        let res_p = a_lin.resultant_bivariate(&a_const, 1, 0);
        if !res_p.is_zero() {
            for pv in rational_roots(&res_p)? {
                if let Some(found) = try_p(&pv)? {
                    return Ok(Some(found));
                }
            }
            return Ok(None);
        }
    }
    // Degenerate elimination: scan small rational p values directly.
    for n in -24i64..=24 {
        for d in 1i64..=4 {
            let pv = crate::scalar::rat(n, d);
            if let Some(found) = try_p(&pv)? {
                return Ok(Some(found));
            }
        }
    }
    Ok(None)
}

fn eval_p(m: &MultiPoly<Rat>, pv: &Rat) -> UniPoly<Rat> {
    // Evaluate variable 0 (p) and read off a univariate polynomial in q.
    let evaluated = m.eval_var(0, pv);
    let coeffs = evaluated.coeffs_in_var(1);
    UniPoly::from_coeffs(coeffs.into_iter().map(|c| c.constant_value().unwrap()).collect())
}

/// Positive divisors of a positive integer by trial division; errors if the
/// remaining cofactor exceeds the trial bound.
fn divisors(n: &BigInt) -> Result<Vec<BigInt>, ExactError> {
    if n.is_zero() {
        return Ok(vec![]);
    }
    let mut n = n.abs();
    let mut primes: Vec<(BigInt, u32)> = Vec::new();
    let mut d = BigInt::from(2);
    let bound = BigInt::from(1_000_000u64);
    while &(&d * &d) <= &n {
        if d > bound {
            return Err(ExactError::FactorBoundExceeded);
        }
        let mut e = 0u32;
        while (&n % &d).is_zero() {
            n = &n / &d;
            e += 1;
        }
        if e > 0 {
            primes.push((d.clone(), e));
        }
        d += 1;
    }
    if !n.is_one() {
        primes.push((n, 1));
    }
    let mut divs = vec![BigInt::one()];
    for (p, e) in primes {
        let mut next = Vec::new();
        for dv in &divs {
            let mut pw = BigInt::one();
            for _ in 0..=e {
                next.push(dv * &pw);
                pw = &pw * &p;
            }
        }
        divs = next;
    }
    divs.sort();
    divs.dedup();
    Ok(divs)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::rat;

    fn p(coeffs: &[i64]) -> UniPoly<Rat> {
        UniPoly::from_i64(coeffs)
    }

    #[test]
    fn rational_roots_with_denominators() {
        // (2x - 1)(3x + 2)(x - 5) = 6x^3 - 29x^2 - 3x + ... expand: just multiply
        let f = p(&[-1, 2]).mul(&p(&[2, 3])).mul(&p(&[-5, 1]));
        let mut roots = rational_roots(&f).unwrap();
        roots.sort();
        assert_eq!(roots, vec![rat(-2, 3), rat(1, 2), rat(5, 1)]);
    }

    #[test]
    fn no_rational_roots() {
        assert!(rational_roots(&p(&[-2, 0, 1])).unwrap().is_empty());
        assert!(rational_roots(&p(&[1, 0, 1])).unwrap().is_empty());
    }

    #[test]
    fn split_mixed_factors() {
        // (x - 1)(x^2 + 1)(x^2 - 2x + 5)
        let f = p(&[-1, 1]).mul(&p(&[1, 0, 1])).mul(&p(&[5, -2, 1]));
        let factors = split_linear_quadratic(&f).unwrap();
        let mut lin = 0;
        let mut quad = 0;
        let mut prod = UniPoly::one();
        for fac in &factors {
            match fac {
                SplitFactor::Linear { .. } => lin += 1,
                SplitFactor::Quadratic { .. } => quad += 1,
            }
            prod = prod.mul(&fac.poly());
        }
        assert_eq!((lin, quad), (1, 2));
        assert_eq!(prod, f.monic());
        // complex pairs: x^2+1 -> (0, 1); x^2-2x+5 -> (1, 4)
        let pairs: Vec<_> = factors.iter().filter_map(|f| f.complex_pair()).collect();
        assert!(pairs.contains(&(rat(0, 1), rat(1, 1))));
        assert!(pairs.contains(&(rat(1, 1), rat(4, 1))));
    }

    #[test]
    fn irreducible_cubic_is_unsupported() {
        // x^3 - 2 is irreducible over Q
        let err = split_linear_quadratic(&p(&[-2, 0, 0, 1])).unwrap_err();
        assert_eq!(err, ExactError::UnsupportedFactor { degree: 3 });
    }

    #[test]
    fn quartic_splitting_into_two_quadratics() {
        // (x^2+x+1)(x^2+2): no rational roots
        let f = p(&[1, 1, 1]).mul(&p(&[2, 0, 1]));
        let factors = split_linear_quadratic(&f).unwrap();
        assert_eq!(factors.len(), 2);
        let prod = factors.iter().fold(UniPoly::one(), |acc, f| acc.mul(&f.poly()));
        assert_eq!(prod, f);
    }
}
