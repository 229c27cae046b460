//! Symbolic rational functions: quotients of multivariate polynomials.
//!
//! The representation is reduced by rational content only (the denominator
//! is normalized to have leading coefficient one); equality is decided
//! exactly by cross-multiplication, so a full polynomial gcd is never
//! needed.

use crate::multipoly::MultiPoly;
use crate::scalar::{Field, Rat};

#[derive(Clone, Debug)]
pub struct RatFunc<F: Field> {
    num: MultiPoly<F>,
    den: MultiPoly<F>,
}

impl<F: Field> RatFunc<F> {
    pub fn new(num: MultiPoly<F>, den: MultiPoly<F>) -> Self {
        assert!(!den.is_zero(), "identically-zero denominator");
        let mut rf = RatFunc { num, den };
        rf.normalize();
        rf
    }

    pub fn from_poly(p: MultiPoly<F>) -> Self {
        let n = p.nvars();
        RatFunc { num: p, den: MultiPoly::one(n) }
    }

    pub fn var(index: usize, nvars: usize) -> Self {
        Self::from_poly(MultiPoly::var(index, nvars))
    }

    pub fn constant(nvars: usize, c: F) -> Self {
        Self::from_poly(MultiPoly::constant(nvars, c))
    }

    pub fn numerator(&self) -> &MultiPoly<F> {
        &self.num
    }

    pub fn denominator(&self) -> &MultiPoly<F> {
        &self.den
    }

    pub fn nvars(&self) -> usize {
        self.num.nvars()
    }

    fn normalize(&mut self) {
        if self.num.is_zero() {
            self.den = MultiPoly::one(self.den.nvars());
            return;
        }
        if let Some((_, lc)) = self.den.leading() {
            if !lc.is_one() {
                let inv = lc.inv().unwrap();
                self.num = self.num.mul_scalar(&inv);
                self.den = self.den.mul_scalar(&inv);
            }
        }
        // Cheap common-factor cleanup: if the denominator is constant it is
        // already 1 by the normalization above.
    }

    /// Is this a polynomial with the given denominator trivial?
    pub fn as_poly(&self) -> Option<&MultiPoly<F>> {
        if self.den.is_constant() {
            Some(&self.num)
        } else {
            None
        }
    }

    /// Substitute rational functions for the variables.
    pub fn substitute(&self, images: &[RatFunc<F>]) -> RatFunc<F> {
        let subst_poly = |p: &MultiPoly<F>| -> RatFunc<F> {
            let nv = images.first().map(|r| r.nvars()).unwrap_or(p.nvars());
            let mut acc = RatFunc::constant(nv, F::zero());
            for (m, c) in p.terms() {
                let mut t = RatFunc::constant(nv, c.clone());
                for (v, &e) in m.0.iter().enumerate() {
                    for _ in 0..e {
                        t = t.mul(&images[v]);
                    }
                }
                acc = acc.add(&t);
            }
            acc
        };
        let n = subst_poly(&self.num);
        let d = subst_poly(&self.den);
        n.div(&d).expect("denominator substitutes to zero")
    }
}

impl<F: Field> PartialEq for RatFunc<F> {
    fn eq(&self, other: &Self) -> bool {
        // a/b = c/d  iff  a d = c b
        let (a, b) = lift_pair(self, other);
        a.num.mul(&b.den) == b.num.mul(&a.den)
    }
}

impl<F: Field> Field for RatFunc<F> {
    fn zero() -> Self {
        // Variable count is fixed per ring; a free-standing zero uses zero
        // variables and unifies through `lift` below.
        RatFunc { num: MultiPoly::zero(0), den: MultiPoly::one(0) }
    }
    fn one() -> Self {
        RatFunc { num: MultiPoly::one(0), den: MultiPoly::one(0) }
    }
    fn is_zero(&self) -> bool {
        self.num.is_zero()
    }
    fn add(&self, other: &Self) -> Self {
        let (a, b) = lift_pair(self, other);
        RatFunc::new(a.num.mul(&b.den).add(&b.num.mul(&a.den)), a.den.mul(&b.den))
    }
    fn sub(&self, other: &Self) -> Self {
        self.add(&other.neg())
    }
    fn neg(&self) -> Self {
        RatFunc { num: self.num.neg(), den: self.den.clone() }
    }
    fn mul(&self, other: &Self) -> Self {
        let (a, b) = lift_pair(self, other);
        RatFunc::new(a.num.mul(&b.num), a.den.mul(&b.den))
    }
    fn inv(&self) -> Option<Self> {
        if self.num.is_zero() {
            return None;
        }
        Some(RatFunc::new(self.den.clone(), self.num.clone()))
    }
    fn from_rat(q: &Rat) -> Self {
        RatFunc { num: MultiPoly::constant(0, F::from_rat(q)), den: MultiPoly::one(0) }
    }
    fn to_rat(&self) -> Option<Rat> {
        let n = self.num.constant_value()?;
        let d = self.den.constant_value()?;
        let q = n.div(&d)?;
        q.to_rat()
    }
}

/// Bring two rational functions over rings with possibly different variable
/// counts to a common ring (the larger count; constants embed).
fn lift_pair<F: Field>(a: &RatFunc<F>, b: &RatFunc<F>) -> (RatFunc<F>, RatFunc<F>) {
    let nv = a.nvars().max(b.nvars());
    (lift(a, nv), lift(b, nv))
}

fn lift<F: Field>(r: &RatFunc<F>, nvars: usize) -> RatFunc<F> {
    if r.nvars() == nvars {
        return r.clone();
    }
    assert!(
        r.num.is_constant() && r.den.is_constant(),
        "cannot lift a non-constant rational function between rings"
    );
    RatFunc {
        num: MultiPoly::constant(nvars, r.num.constant_value().unwrap()),
        den: MultiPoly::constant(nvars, r.den.constant_value().unwrap()),
    }
}

impl<F: Field> std::fmt::Display for RatFunc<F> {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        if self.den.is_constant() {
            write!(f, "{}", self.num)
        } else {
            write!(f, "({}) / ({})", self.num, self.den)
        }
    }
}
