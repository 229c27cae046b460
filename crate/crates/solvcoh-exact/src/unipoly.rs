//! Dense univariate polynomials over an exact field.
//!
//! Coefficients are stored in ascending degree order; the vector is empty for
//! the zero polynomial and otherwise ends in a nonzero coefficient.

use crate::scalar::{Field, Rat};

#[derive(Clone, PartialEq)]
pub struct UniPoly<F: Field> {
    coeffs: Vec<F>,
}

impl<F: Field> UniPoly<F> {
    fn normalized(mut coeffs: Vec<F>) -> Self {
        while coeffs.last().map_or(false, |c| c.is_zero()) {
            coeffs.pop();
        }
        UniPoly { coeffs }
    }

    pub fn zero() -> Self {
        UniPoly { coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        UniPoly { coeffs: vec![F::one()] }
    }

    pub fn x() -> Self {
        UniPoly { coeffs: vec![F::zero(), F::one()] }
    }

    pub fn constant(c: F) -> Self {
        Self::normalized(vec![c])
    }

    pub fn monomial(c: F, deg: usize) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        let mut coeffs = vec![F::zero(); deg + 1];
        coeffs[deg] = c;
        UniPoly { coeffs }
    }

    pub fn from_coeffs(coeffs: Vec<F>) -> Self {
        Self::normalized(coeffs)
    }

    pub fn from_i64(coeffs: &[i64]) -> Self {
        Self::normalized(coeffs.iter().map(|&c| F::from_i64(c)).collect())
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Degree; the zero polynomial has degree `None`.
    pub fn degree(&self) -> Option<usize> {
        if self.coeffs.is_empty() {
            None
        } else {
            Some(self.coeffs.len() - 1)
        }
    }

    /// Degree with deg(0) = 0, convenient for loops.
    pub fn deg0(&self) -> usize {
        self.degree().unwrap_or(0)
    }

    pub fn coeff(&self, i: usize) -> F {
        self.coeffs.get(i).cloned().unwrap_or_else(F::zero)
    }

    pub fn coeffs(&self) -> &[F] {
        &self.coeffs
    }

    pub fn leading(&self) -> Option<&F> {
        self.coeffs.last()
    }

    pub fn is_monic(&self) -> bool {
        self.leading().map_or(false, |c| c.is_one())
    }

    pub fn add(&self, other: &Self) -> Self {
        let n = self.coeffs.len().max(other.coeffs.len());
        let mut out = Vec::with_capacity(n);
        for i in 0..n {
            out.push(self.coeff(i).add(&other.coeff(i)));
        }
        Self::normalized(out)
    }

    pub fn sub(&self, other: &Self) -> Self {
        let n = self.coeffs.len().max(other.coeffs.len());
        let mut out = Vec::with_capacity(n);
        for i in 0..n {
            out.push(self.coeff(i).sub(&other.coeff(i)));
        }
        Self::normalized(out)
    }

    pub fn neg(&self) -> Self {
        UniPoly { coeffs: self.coeffs.iter().map(|c| c.neg()).collect() }
    }

    pub fn mul(&self, other: &Self) -> Self {
        if self.is_zero() || other.is_zero() {
            return Self::zero();
        }
        let mut out = vec![F::zero(); self.coeffs.len() + other.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.coeffs.iter().enumerate() {
                out[i + j] = out[i + j].add(&a.mul(b));
            }
        }
        Self::normalized(out)
    }

    pub fn mul_scalar(&self, c: &F) -> Self {
        Self::normalized(self.coeffs.iter().map(|a| a.mul(c)).collect())
    }

    /// Euclidean division; panics on zero divisor.
    pub fn div_rem(&self, divisor: &Self) -> (Self, Self) {
        assert!(!divisor.is_zero(), "division by zero polynomial");
        let dd = divisor.degree().unwrap();
        let lead_inv = divisor.leading().unwrap().inv().expect("leading coeff invertible");
        let mut rem = self.clone();
        let mut quo = vec![F::zero(); self.coeffs.len().saturating_sub(dd)];
        while let Some(rd) = rem.degree() {
            if rd < dd {
                break;
            }
            let c = rem.leading().unwrap().mul(&lead_inv);
            let shift = rd - dd;
            quo[shift] = c.clone();
            // rem -= c * x^shift * divisor
            let mut coeffs = rem.coeffs;
            for (j, b) in divisor.coeffs.iter().enumerate() {
                coeffs[shift + j] = coeffs[shift + j].sub(&c.mul(b));
            }
            rem = Self::normalized(coeffs);
        }
        (Self::normalized(quo), rem)
    }

    pub fn rem(&self, divisor: &Self) -> Self {
        self.div_rem(divisor).1
    }

    /// Exact division; panics if the remainder is nonzero.
    pub fn div_exact(&self, divisor: &Self) -> Self {
        let (q, r) = self.div_rem(divisor);
        assert!(r.is_zero(), "inexact polynomial division");
        q
    }

    pub fn monic(&self) -> Self {
        match self.leading() {
            None => Self::zero(),
            Some(l) => self.mul_scalar(&l.inv().unwrap()),
        }
    }

    /// Monic gcd via the Euclidean algorithm.
    pub fn gcd(&self, other: &Self) -> Self {
        let mut a = self.clone();
        let mut b = other.clone();
        while !b.is_zero() {
            let r = a.rem(&b);
            a = b;
            b = r;
        }
        a.monic()
    }

    /// Extended gcd: returns (g, u, v) monic with u*self + v*other = g.
    pub fn extended_gcd(&self, other: &Self) -> (Self, Self, Self) {
        let mut r0 = self.clone();
        let mut r1 = other.clone();
        let (mut s0, mut s1) = (Self::one(), Self::zero());
        let (mut t0, mut t1) = (Self::zero(), Self::one());
        while !r1.is_zero() {
            let (q, r) = r0.div_rem(&r1);
            r0 = r1;
            r1 = r;
            let ns = s0.sub(&q.mul(&s1));
            s0 = s1;
            s1 = ns;
            let nt = t0.sub(&q.mul(&t1));
            t0 = t1;
            t1 = nt;
        }
        match r0.leading() {
            None => (Self::zero(), Self::zero(), Self::zero()),
            Some(l) => {
                let inv = l.inv().unwrap();
                (r0.mul_scalar(&inv), s0.mul_scalar(&inv), t0.mul_scalar(&inv))
            }
        }
    }

    pub fn derivative(&self) -> Self {
        if self.coeffs.len() <= 1 {
            return Self::zero();
        }
        let mut out = Vec::with_capacity(self.coeffs.len() - 1);
        for (i, c) in self.coeffs.iter().enumerate().skip(1) {
            out.push(c.mul(&F::from_i64(i as i64)));
        }
        Self::normalized(out)
    }

    pub fn eval(&self, x: &F) -> F {
        let mut acc = F::zero();
        for c in self.coeffs.iter().rev() {
            acc = acc.mul(x).add(c);
        }
        acc
    }

    /// Substitute another polynomial for the variable.
    pub fn compose(&self, inner: &Self) -> Self {
        let mut acc = Self::zero();
        for c in self.coeffs.iter().rev() {
            acc = acc.mul(inner).add(&Self::constant(c.clone()));
        }
        acc
    }

    /// Squarefree part f / gcd(f, f').
    pub fn squarefree_part(&self) -> Self {
        if self.is_zero() {
            return Self::zero();
        }
        let g = self.gcd(&self.derivative());
        self.div_exact(&g).monic()
    }

    /// Yun's squarefree decomposition: returns (f_1, f_2, ...) with
    /// f = lc * prod f_i^i, each f_i monic squarefree, pairwise coprime.
    pub fn squarefree_decomposition(&self) -> Vec<Self> {
        if self.is_zero() {
            return Vec::new();
        }
        let f = self.monic();
        let df = f.derivative();
        let a = f.gcd(&df);
        if a.degree() == Some(0) {
            return vec![f];
        }
        let mut out = Vec::new();
        let mut b = f.div_exact(&a);
        let mut c = df.div_exact(&a);
        let mut d = c.sub(&b.derivative());
        loop {
            let ai = b.gcd(&d).monic();
            out.push(ai.clone());
            b = b.div_exact(&ai);
            if b.degree() == Some(0) {
                break;
            }
            c = d.div_exact(&ai);
            d = c.sub(&b.derivative());
        }
        out
    }

    /// Resultant of two polynomials, by the Euclidean recursion.
    pub fn resultant(&self, other: &Self) -> F {
        fn go<F: Field>(a: &UniPoly<F>, b: &UniPoly<F>) -> F {
            if b.is_zero() {
                return if a.degree() == Some(0) { F::one() } else { F::zero() };
            }
            if a.is_zero() {
                return F::zero();
            }
            let da = a.degree().unwrap();
            let db = b.degree().unwrap();
            if db == 0 {
                return pow(b.leading().unwrap(), da);
            }
            let r = a.rem(b);
            let dr = r.degree();
            let sign = if (da * db) % 2 == 1 { F::from_i64(-1) } else { F::one() };
            match dr {
                None => F::zero(),
                Some(dr) => {
                    let lb = pow(b.leading().unwrap(), da - dr);
                    sign.mul(&lb).mul(&go(b, &r))
                }
            }
        }
        fn pow<F: Field>(base: &F, mut e: usize) -> F {
            let mut acc = F::one();
            let mut b = base.clone();
            while e > 0 {
                if e & 1 == 1 {
                    acc = acc.mul(&b);
                }
                b = b.mul(&b);
                e >>= 1;
            }
            acc
        }
        go(self, other)
    }

    /// Map coefficients into another field.
    pub fn map<G: Field>(&self, f: impl Fn(&F) -> G) -> UniPoly<G> {
        UniPoly::from_coeffs(self.coeffs.iter().map(f).collect())
    }
}

impl UniPoly<Rat> {
    /// True if every coefficient is a rational integer.
    pub fn has_integer_coeffs(&self) -> bool {
        self.coeffs.iter().all(crate::scalar::rat_is_integer)
    }
}

impl<F: Field> std::fmt::Debug for UniPoly<F> {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "{self}")
    }
}

impl<F: Field> std::fmt::Display for UniPoly<F> {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (i, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            if !first {
                write!(f, " + ")?;
            }
            first = false;
            match i {
                0 => write!(f, "{c}")?,
                1 => write!(f, "({c})*x")?,
                _ => write!(f, "({c})*x^{i}")?,
            }
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::rat_int;

    fn p(coeffs: &[i64]) -> UniPoly<Rat> {
        UniPoly::from_i64(coeffs)
    }

    #[test]
    fn division_and_gcd() {
        // (x-1)(x-2) = x^2 - 3x + 2
        let f = p(&[2, -3, 1]);
        let g = p(&[-1, 1]);
        let (q, r) = f.div_rem(&g);
        assert!(r.is_zero());
        assert_eq!(q, p(&[-2, 1]));
        assert_eq!(f.gcd(&p(&[-2, 1])), p(&[-2, 1]));
    }

    #[test]
    fn extended_gcd_bezout() {
        let f = p(&[2, -3, 1]);
        let g = p(&[-3, 1]);
        let (d, u, v) = f.extended_gcd(&g);
        assert_eq!(u.mul(&f).add(&v.mul(&g)), d);
        assert_eq!(d, UniPoly::one());
    }

    #[test]
    fn yun_decomposition() {
        // (x-1)^2 (x+2)^3
        let f = p(&[-1, 1]).mul(&p(&[-1, 1])).mul(&p(&[2, 1]).mul(&p(&[2, 1])).mul(&p(&[2, 1])));
        let parts = f.squarefree_decomposition();
        assert_eq!(parts.len(), 3);
        assert_eq!(parts[0], UniPoly::one());
        assert_eq!(parts[1], p(&[-1, 1]));
        assert_eq!(parts[2], p(&[2, 1]));
        assert_eq!(f.squarefree_part(), p(&[-1, 1]).mul(&p(&[2, 1])));
    }

    #[test]
    fn resultant_matches_known_values() {
        // res(x^2-1, x-2) = f(2) = 3
        let f = p(&[-1, 0, 1]);
        let g = p(&[-2, 1]);
        assert_eq!(f.resultant(&g), rat_int(3));
        // res(x^2+1, x^2-2) = (i^2-2)((-i)^2-2) = 9
        assert_eq!(p(&[1, 0, 1]).resultant(&p(&[-2, 0, 1])), rat_int(9));
    }
}
