//! Number fields Q[x]/(m(x)) with a designated embedding, and their
//! elements.
//!
//! The embedding tag either picks a real root of the modulus (held as an
//! exact isolating interval, so signs of real elements are decidable via
//! Sturm refinement) or declares the generator to be the primitive n-th
//! root of unity e^{2 pi i / n} for the cyclotomic field Q(zeta_n).
//!
//! Elements carry an `Arc` to their field; plain rationals may be built
//! without a field and unify on first contact with a proper element. This
//! keeps the `Field` trait context-free.

use std::sync::Arc;

use crate::scalar::{rat, rat_int, Field, Rat};
use crate::sturm::{sign_at_root, RootLocation, SturmChain};
use crate::unipoly::UniPoly;

#[derive(Clone, Debug)]
pub enum Embedding {
    /// The generator is the unique real root of the modulus inside the
    /// interval.
    RealInterval { lo: Rat, hi: Rat },
    /// The generator is e^{2 pi i / n}; the modulus is the n-th cyclotomic
    /// polynomial.
    PrimitiveRootOfUnity { n: u32 },
}

#[derive(Debug)]
pub struct NumberField {
    pub name: String,
    pub modulus: UniPoly<Rat>,
    pub embedding: Embedding,
    chain: Option<SturmChain>,
}

impl PartialEq for NumberField {
    fn eq(&self, other: &Self) -> bool {
        if self.modulus != other.modulus {
            return false;
        }
        match (&self.embedding, &other.embedding) {
            (Embedding::PrimitiveRootOfUnity { n: a }, Embedding::PrimitiveRootOfUnity { n: b }) => a == b,
            (Embedding::RealInterval { lo: a, hi: b }, Embedding::RealInterval { lo: c, hi: d }) => {
                a == c && b == d
            }
            _ => false,
        }
    }
}

impl NumberField {
    /// A field with a designated real root of `modulus` in (lo, hi).
    /// The modulus must be monic and squarefree with exactly one root there.
    pub fn real(name: &str, modulus: UniPoly<Rat>, lo: Rat, hi: Rat) -> Arc<NumberField> {
        assert!(modulus.is_monic(), "modulus must be monic");
        let chain = SturmChain::new(&modulus).expect("nonzero modulus");
        assert_eq!(
            chain.squarefree(),
            &modulus,
            "modulus must be squarefree (it should be irreducible)"
        );
        assert_eq!(chain.count_roots_in(&lo, &hi), 1, "interval must isolate one root");
        Arc::new(NumberField {
            name: name.to_string(),
            modulus,
            embedding: Embedding::RealInterval { lo, hi },
            chain: Some(chain),
        })
    }

    /// The cyclotomic field Q(zeta_n).
    pub fn cyclotomic(n: u32) -> Arc<NumberField> {
        assert!(n >= 1);
        let modulus = cyclotomic_polynomial(n);
        Arc::new(NumberField {
            name: format!("Q(zeta_{n})"),
            modulus,
            embedding: Embedding::PrimitiveRootOfUnity { n },
            chain: None,
        })
    }

    pub fn degree(&self) -> usize {
        self.modulus.degree().unwrap()
    }

    /// Exact sign of an element under the designated real embedding.
    pub fn sign_of(&self, poly: &UniPoly<Rat>) -> i8 {
        match &self.embedding {
            Embedding::RealInterval { lo, hi } => {
                let chain = self.chain.as_ref().unwrap();
                sign_at_root(chain, &RootLocation::Interval(lo.clone(), hi.clone()), poly)
            }
            Embedding::PrimitiveRootOfUnity { .. } => {
                panic!("sign_of requires a real embedding")
            }
        }
    }
}

/// The n-th cyclotomic polynomial, by dividing x^n - 1 by all lower Phi_d.
pub fn cyclotomic_polynomial(n: u32) -> UniPoly<Rat> {
    let mut xn1 = vec![Rat::from_integer((-1).into())];
    xn1.extend(std::iter::repeat(rat_int(0)).take(n as usize - 1));
    xn1.push(rat_int(1));
    let mut result = UniPoly::from_coeffs(xn1);
    for d in 1..n {
        if n % d == 0 {
            result = result.div_exact(&cyclotomic_polynomial(d));
        }
    }
    result
}

/// Element of a number field; `field: None` encodes a plain rational that
/// unifies with any field on contact.
#[derive(Clone, Debug)]
pub struct NumberFieldElement {
    field: Option<Arc<NumberField>>,
    poly: UniPoly<Rat>,
}

impl NumberFieldElement {
    pub fn new(field: &Arc<NumberField>, poly: UniPoly<Rat>) -> Self {
        let poly = poly.rem(&field.modulus);
        NumberFieldElement { field: Some(field.clone()), poly }
    }

    /// The generator (class of x).
    pub fn generator(field: &Arc<NumberField>) -> Self {
        Self::new(field, UniPoly::x())
    }

    pub fn rational(q: Rat) -> Self {
        NumberFieldElement { field: None, poly: UniPoly::constant(q) }
    }

    pub fn field(&self) -> Option<&Arc<NumberField>> {
        self.field.as_ref()
    }

    pub fn poly(&self) -> &UniPoly<Rat> {
        &self.poly
    }

    /// Coordinates in the power basis 1, x, ..., x^{deg-1}.
    pub fn coords(&self, field: &Arc<NumberField>) -> Vec<Rat> {
        (0..field.degree()).map(|i| self.poly.coeff(i)).collect()
    }

    fn unify(&self, other: &Self) -> Option<Arc<NumberField>> {
        match (&self.field, &other.field) {
            (None, None) => None,
            (Some(f), None) | (None, Some(f)) => Some(f.clone()),
            (Some(a), Some(b)) => {
                assert!(
                    Arc::ptr_eq(a, b) || **a == **b,
                    "mixed elements of different number fields: {} vs {}",
                    a.name,
                    b.name
                );
                Some(a.clone())
            }
        }
    }

    /// Exact sign under the field's real embedding (rationals work too).
    pub fn sign(&self) -> i8 {
        match &self.field {
            None => {
                use num_traits::Signed;
                let c = self.poly.coeff(0);
                if num_traits::Zero::is_zero(&c) {
                    0
                } else if c.is_positive() {
                    1
                } else {
                    -1
                }
            }
            Some(f) => f.sign_of(&self.poly),
        }
    }
}

impl PartialEq for NumberFieldElement {
    fn eq(&self, other: &Self) -> bool {
        self.unify(other);
        self.poly == other.poly
    }
}

impl Field for NumberFieldElement {
    fn zero() -> Self {
        Self::rational(rat_int(0))
    }
    fn one() -> Self {
        Self::rational(rat_int(1))
    }
    fn is_zero(&self) -> bool {
        self.poly.is_zero()
    }
    fn add(&self, other: &Self) -> Self {
        let field = self.unify(other);
        NumberFieldElement { field, poly: self.poly.add(&other.poly) }
    }
    fn sub(&self, other: &Self) -> Self {
        let field = self.unify(other);
        NumberFieldElement { field, poly: self.poly.sub(&other.poly) }
    }
    fn neg(&self) -> Self {
        NumberFieldElement { field: self.field.clone(), poly: self.poly.neg() }
    }
    fn mul(&self, other: &Self) -> Self {
        let field = self.unify(other);
        let raw = self.poly.mul(&other.poly);
        let poly = match &field {
            Some(f) => raw.rem(&f.modulus),
            None => raw,
        };
        NumberFieldElement { field, poly }
    }
    fn inv(&self) -> Option<Self> {
        if self.poly.is_zero() {
            return None;
        }
        match &self.field {
            None => {
                let c = self.poly.coeff(0);
                Some(Self::rational(c.recip()))
            }
            Some(f) => {
                let (g, u, _) = self.poly.extended_gcd(&f.modulus);
                if g.degree() != Some(0) {
                    // Zero divisor: only possible for a reducible modulus.
                    return None;
                }
                Some(NumberFieldElement {
                    field: self.field.clone(),
                    poly: u.rem(&f.modulus),
                })
            }
        }
    }
    fn from_rat(q: &Rat) -> Self {
        Self::rational(q.clone())
    }
    fn to_rat(&self) -> Option<Rat> {
        if self.poly.degree().map_or(true, |d| d == 0) {
            Some(self.poly.coeff(0))
        } else {
            None
        }
    }
}

impl std::fmt::Display for NumberFieldElement {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match &self.field {
            None => write!(f, "{}", self.poly),
            Some(k) => {
                let mut s = format!("{}", self.poly);
                // Print the generator by a nicer symbol than `x`.
                let sym = if matches!(k.embedding, Embedding::PrimitiveRootOfUnity { .. }) {
                    "z"
                } else {
                    "t"
                };
                s = s.replace('x', sym);
                write!(f, "{s}")
            }
        }
    }
}

/// Exact cos(2 pi m / n) and sin(2 pi m / n) inside Q(zeta_N) with n | N and
/// 4 | N (so that i = zeta^{N/4} exists).
pub struct CyclotomicAngles {
    pub field: Arc<NumberField>,
    n: u32,
}

impl CyclotomicAngles {
    pub fn new(n: u32) -> Self {
        let n = num_integer::lcm(n, 4);
        CyclotomicAngles { field: NumberField::cyclotomic(n), n }
    }

    pub fn order(&self) -> u32 {
        self.n
    }

    fn zeta_pow(&self, k: i64) -> NumberFieldElement {
        let k = k.rem_euclid(self.n as i64) as usize;
        NumberFieldElement::new(&self.field, UniPoly::monomial(rat_int(1), k))
    }

    /// cos(2 pi m / n) where the angle is given as fraction m/den of a turn.
    pub fn cos_turn(&self, num: i64, den: i64) -> NumberFieldElement {
        let k = self.scaled(num, den);
        let half = NumberFieldElement::rational(rat(1, 2));
        self.zeta_pow(k).add(&self.zeta_pow(-k)).mul(&half)
    }

    pub fn sin_turn(&self, num: i64, den: i64) -> NumberFieldElement {
        let k = self.scaled(num, den);
        let i_unit = self.zeta_pow(self.n as i64 / 4);
        let half = NumberFieldElement::rational(rat(1, 2));
        self.zeta_pow(k)
            .sub(&self.zeta_pow(-k))
            .mul(&half)
            .mul(&i_unit.inv().unwrap())
    }

    fn scaled(&self, num: i64, den: i64) -> i64 {
        let n = self.n as i64;
        assert!(den != 0 && n % den == 0, "angle denominator must divide the field order");
        num * (n / den)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn cyclotomic_polynomials() {
        assert_eq!(cyclotomic_polynomial(1), UniPoly::from_i64(&[-1, 1]));
        assert_eq!(cyclotomic_polynomial(4), UniPoly::from_i64(&[1, 0, 1]));
        assert_eq!(cyclotomic_polynomial(12), UniPoly::from_i64(&[1, 0, -1, 0, 1]));
        assert_eq!(cyclotomic_polynomial(24).degree(), Some(8));
    }

    #[test]
    fn arithmetic_in_q_i() {
        let f = NumberField::cyclotomic(4);
        let i = NumberFieldElement::generator(&f);
        let m1 = i.mul(&i);
        assert_eq!(m1, NumberFieldElement::rational(rat_int(-1)));
        let inv = i.inv().unwrap();
        assert_eq!(i.mul(&inv), NumberFieldElement::one());
    }

    #[test]
    fn cos_sin_exact_values() {
        let ang = CyclotomicAngles::new(12);
        // cos(pi/3) = 1/2 (1/6 of a turn), sin(pi/2) = 1 (1/4 turn)
        assert_eq!(ang.cos_turn(1, 6).to_rat(), Some(rat(1, 2)));
        assert_eq!(ang.sin_turn(1, 4).to_rat(), Some(rat_int(1)));
        // sin(pi/3)^2 = 3/4
        let s = ang.sin_turn(1, 6);
        assert_eq!(s.mul(&s).to_rat(), Some(rat(3, 4)));
        // cos^2 + sin^2 = 1 at 1/8 turn (needs Q(zeta_8))
        let ang8 = CyclotomicAngles::new(8);
        let c = ang8.cos_turn(1, 8);
        let s = ang8.sin_turn(1, 8);
        assert_eq!(c.mul(&c).add(&s.mul(&s)), NumberFieldElement::one());
    }

    #[test]
    fn real_embedding_signs() {
        // Q(sqrt 2) with the positive root designated
        let f = NumberField::real("Q(sqrt2)", UniPoly::from_i64(&[-2, 0, 1]), rat_int(1), rat_int(2));
        let s2 = NumberFieldElement::generator(&f);
        assert_eq!(s2.sign(), 1);
        assert_eq!(s2.neg().sign(), -1);
        // sqrt2 - 3/2 < 0, sqrt2 - 7/5 > 0
        assert_eq!(s2.sub(&NumberFieldElement::rational(rat(3, 2))).sign(), -1);
        assert_eq!(s2.sub(&NumberFieldElement::rational(rat(7, 5))).sign(), 1);
    }
}
