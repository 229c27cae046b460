//! Free graded-commutative algebras on named generators with a differential
//! given on generators, truncated at a degree cap.
//!
//! Monomials are sorted generator powers; generators of odd degree square
//! to zero and produce Koszul signs when they cross.

use std::collections::BTreeMap;

use solvcoh_exact::scalar::{rat_int, Rat};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Generator {
    pub name: String,
    pub degree: usize,
}

/// Sorted list of (generator index, exponent), exponents positive.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord)]
pub struct CdgaMonomial(pub Vec<(usize, u32)>);

impl CdgaMonomial {
    pub fn one() -> Self {
        CdgaMonomial(vec![])
    }

    pub fn generator(i: usize) -> Self {
        CdgaMonomial(vec![(i, 1)])
    }

    pub fn degree(&self, gens: &[Generator]) -> usize {
        self.0.iter().map(|(i, e)| gens[*i].degree * (*e as usize)).sum()
    }

    /// Is this a single generator to the first power (a linear monomial)?
    pub fn is_linear(&self) -> bool {
        self.0.len() == 1 && self.0[0].1 == 1
    }

    /// Product with Koszul sign; None if an odd generator repeats.
    pub fn mul(&self, other: &Self, gens: &[Generator]) -> Option<(Self, i64)> {
        let mut sign = 1i64;
        // crossings: each odd generator of `other` passes the odd
        // generators of `self` with larger index
        let odd_self: Vec<usize> = self
            .0
            .iter()
            .filter(|(i, _)| gens[*i].degree % 2 == 1)
            .map(|(i, _)| *i)
            .collect();
        for (j, _) in other.0.iter().filter(|(j, _)| gens[*j].degree % 2 == 1) {
            let crossings = odd_self.iter().filter(|i| **i > *j).count();
            if crossings % 2 == 1 {
                sign = -sign;
            }
        }
        // merge exponents
        let mut map: BTreeMap<usize, u32> = self.0.iter().cloned().collect();
        for (j, e) in &other.0 {
            let entry = map.entry(*j).or_insert(0);
            *entry += e;
            if gens[*j].degree % 2 == 1 && *entry > 1 {
                return None;
            }
        }
        Some((CdgaMonomial(map.into_iter().collect()), sign))
    }

    pub fn display(&self, gens: &[Generator]) -> String {
        if self.0.is_empty() {
            return "1".into();
        }
        self.0
            .iter()
            .map(|(i, e)| {
                if *e == 1 {
                    gens[*i].name.clone()
                } else {
                    format!("{}^{}", gens[*i].name, e)
                }
            })
            .collect::<Vec<_>>()
            .join("*")
    }
}

/// Rational linear combination of monomials.
#[derive(Clone, Debug, PartialEq)]
pub struct CdgaElement {
    pub terms: BTreeMap<CdgaMonomial, Rat>,
}

impl CdgaElement {
    pub fn zero() -> Self {
        CdgaElement { terms: BTreeMap::new() }
    }

    pub fn one() -> Self {
        Self::monomial(CdgaMonomial::one(), rat_int(1))
    }

    pub fn generator(i: usize) -> Self {
        Self::monomial(CdgaMonomial::generator(i), rat_int(1))
    }

    pub fn monomial(m: CdgaMonomial, c: Rat) -> Self {
        let mut terms = BTreeMap::new();
        if !num_traits::Zero::is_zero(&c) {
            terms.insert(m, c);
        }
        CdgaElement { terms }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    fn insert(&mut self, m: CdgaMonomial, c: Rat) {
        if num_traits::Zero::is_zero(&c) {
            return;
        }
        match self.terms.get_mut(&m) {
            Some(v) => {
                let s = &*v + &c;
                if num_traits::Zero::is_zero(&s) {
                    self.terms.remove(&m);
                } else {
                    *v = s;
                }
            }
            None => {
                self.terms.insert(m, c);
            }
        }
    }

    pub fn add(&self, other: &Self) -> Self {
        let mut out = self.clone();
        for (m, c) in &other.terms {
            out.insert(m.clone(), c.clone());
        }
        out
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.add(&other.scale(&rat_int(-1)))
    }

    pub fn scale(&self, c: &Rat) -> Self {
        if num_traits::Zero::is_zero(c) {
            return Self::zero();
        }
        CdgaElement {
            terms: self.terms.iter().map(|(m, k)| (m.clone(), k * c)).collect(),
        }
    }

    pub fn mul(&self, other: &Self, gens: &[Generator]) -> Self {
        let mut out = Self::zero();
        for (m1, c1) in &self.terms {
            for (m2, c2) in &other.terms {
                if let Some((m, sign)) = m1.mul(m2, gens) {
                    out.insert(m, c1 * c2 * rat_int(sign));
                }
            }
        }
        out
    }

    /// All terms must share one degree; None for 0.
    pub fn degree(&self, gens: &[Generator]) -> Option<usize> {
        self.terms.keys().next().map(|m| m.degree(gens))
    }

    pub fn display(&self, gens: &[Generator]) -> String {
        if self.terms.is_empty() {
            return "0".into();
        }
        self.terms
            .iter()
            .map(|(m, c)| format!("({})*{}", c, m.display(gens)))
            .collect::<Vec<_>>()
            .join(" + ")
    }
}

/// A free CDGA (Lambda V, d) with d given on generators, plus a degree cap
/// for monomial enumeration.
#[derive(Clone, Debug)]
pub struct FreeCdga {
    pub generators: Vec<Generator>,
    pub differentials: Vec<CdgaElement>,
}

impl FreeCdga {
    pub fn new() -> Self {
        FreeCdga { generators: vec![], differentials: vec![] }
    }

    pub fn add_generator(&mut self, name: &str, degree: usize, d: CdgaElement) -> usize {
        assert!(degree >= 1);
        self.generators.push(Generator { name: name.into(), degree });
        self.differentials.push(d);
        self.generators.len() - 1
    }

    pub fn gen_count(&self) -> usize {
        self.generators.len()
    }

    /// d of an element by the graded Leibniz rule.
    pub fn d(&self, x: &CdgaElement) -> CdgaElement {
        let mut out = CdgaElement::zero();
        for (m, c) in &x.terms {
            out = out.add(&self.d_monomial(m).scale(c));
        }
        out
    }

    fn d_monomial(&self, m: &CdgaMonomial) -> CdgaElement {
        let gens = &self.generators;
        let mut out = CdgaElement::zero();
        let mut prefix_degree = 0usize;
        for (pos, (i, e)) in m.0.iter().enumerate() {
            let dg = &self.differentials[*i];
            if !dg.is_zero() {
                // prefix * g^{e-1} * dg * suffix, times e, with the Leibniz
                // sign (-1)^{prefix degree}; for odd generators e = 1.
                let mut factor = CdgaElement::one();
                for (j, (gi, ge)) in m.0.iter().enumerate() {
                    let exp = if j == pos { *ge - 1 } else { *ge };
                    if exp > 0 {
                        let part = CdgaElement::monomial(
                            CdgaMonomial(vec![(*gi, exp)]),
                            rat_int(1),
                        );
                        factor = factor.mul(&part, gens);
                    }
                    if j == pos {
                        factor = factor.mul(dg, gens);
                    }
                }
                let sign = if prefix_degree % 2 == 1 { -1 } else { 1 };
                out = out.add(&factor.scale(&rat_int(sign * (*e as i64))));
            }
            prefix_degree += gens[*i].degree * (*e as usize);
        }
        out
    }

    /// Monomial basis of one degree.
    pub fn basis(&self, degree: usize) -> Vec<CdgaMonomial> {
        let mut out = Vec::new();
        let mut current: Vec<(usize, u32)> = Vec::new();
        self.basis_rec(0, degree, &mut current, &mut out);
        out.sort();
        out
    }

    fn basis_rec(
        &self,
        from: usize,
        remaining: usize,
        current: &mut Vec<(usize, u32)>,
        out: &mut Vec<CdgaMonomial>,
    ) {
        if remaining == 0 {
            out.push(CdgaMonomial(current.clone()));
            return;
        }
        for i in from..self.generators.len() {
            let d = self.generators[i].degree;
            if d > remaining {
                continue;
            }
            let max_e = if d % 2 == 1 { 1 } else { (remaining / d) as u32 };
            for e in 1..=max_e {
                if (d * e as usize) <= remaining {
                    current.push((i, e));
                    self.basis_rec(i + 1, remaining - d * e as usize, current, out);
                    current.pop();
                }
            }
        }
    }

    /// Coordinates of an element in the degree basis.
    pub fn coords(&self, x: &CdgaElement, basis: &[CdgaMonomial]) -> Vec<Rat> {
        let index: BTreeMap<&CdgaMonomial, usize> =
            basis.iter().enumerate().map(|(i, m)| (m, i)).collect();
        let mut v = vec![rat_int(0); basis.len()];
        for (m, c) in &x.terms {
            let i = index.get(m).expect("monomial outside the degree basis");
            v[*i] = c.clone();
        }
        v
    }

    pub fn from_coords(&self, coords: &[Rat], basis: &[CdgaMonomial]) -> CdgaElement {
        let mut x = CdgaElement::zero();
        for (c, m) in coords.iter().zip(basis) {
            x = x.add(&CdgaElement::monomial(m.clone(), c.clone()));
        }
        x
    }

    /// Matrix of d from one degree basis to the next.
    pub fn d_matrix(
        &self,
        basis_p: &[CdgaMonomial],
        basis_p1: &[CdgaMonomial],
    ) -> solvcoh_exact::Matrix<Rat> {
        let mut m = solvcoh_exact::Matrix::zero(basis_p1.len(), basis_p.len());
        for (col, mono) in basis_p.iter().enumerate() {
            let dx = self.d(&CdgaElement::monomial(mono.clone(), rat_int(1)));
            for (r, c) in self.coords(&dx, basis_p1).into_iter().enumerate() {
                m.set(r, col, c);
            }
        }
        m
    }

    /// d^2 = 0 on every generator (hence everywhere).
    pub fn verify_d_squared(&self) -> bool {
        (0..self.gen_count()).all(|i| self.d(&self.differentials[i].clone()).is_zero())
    }

    /// The differential has no linear part (image in the decomposables).
    pub fn is_minimal(&self) -> bool {
        self.differentials.iter().all(|d| d.terms.keys().all(|m| !m.is_linear()))
    }
}

impl Default for FreeCdga {
    fn default() -> Self {
        Self::new()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn free_with(gens: &[(&str, usize)]) -> FreeCdga {
        let mut f = FreeCdga::new();
        for (n, d) in gens {
            f.add_generator(n, *d, CdgaElement::zero());
        }
        f
    }

    #[test]
    fn monomial_signs() {
        let f = free_with(&[("a", 1), ("b", 1), ("x", 2)]);
        let a = CdgaMonomial::generator(0);
        let b = CdgaMonomial::generator(1);
        // b * a = -(a b)
        let (ab, s1) = a.mul(&b, &f.generators).unwrap();
        let (ba, s2) = b.mul(&a, &f.generators).unwrap();
        assert_eq!(ab, ba);
        assert_eq!(s1, 1);
        assert_eq!(s2, -1);
        // a * a = 0
        assert!(a.mul(&a, &f.generators).is_none());
        // x commutes and powers up
        let x = CdgaMonomial::generator(2);
        let (xx, s) = x.mul(&x, &f.generators).unwrap();
        assert_eq!(s, 1);
        assert_eq!(xx, CdgaMonomial(vec![(2, 2)]));
    }

    #[test]
    fn basis_enumeration_with_even_generators() {
        // Lambda(a1, x2): degree 4 basis = {x^2, ...}: a has degree 1
        let f = free_with(&[("a", 1), ("x", 2)]);
        let b4 = f.basis(4);
        // x^2 and nothing else (a^2 = 0, a x needs degree 3)
        assert_eq!(b4.len(), 1);
        let b3 = f.basis(3);
        // a x
        assert_eq!(b3.len(), 1);
    }

    #[test]
    fn leibniz_rule() {
        // d beta = x^2 in Lambda(A1, x2, beta3)
        let mut f = FreeCdga::new();
        let _a = f.add_generator("A", 1, CdgaElement::zero());
        let x = f.add_generator("x", 2, CdgaElement::zero());
        let xsq = CdgaElement::monomial(CdgaMonomial(vec![(x, 2)]), rat_int(1));
        let beta = f.add_generator("beta", 3, xsq.clone());
        assert!(f.verify_d_squared());
        assert!(f.is_minimal());
        // d(A beta) = -A x^2
        let a_beta = CdgaElement::monomial(CdgaMonomial(vec![(0, 1), (beta, 1)]), rat_int(1));
        let d = f.d(&a_beta);
        let expect = CdgaElement::monomial(CdgaMonomial(vec![(0, 1), (x, 2)]), rat_int(-1));
        assert_eq!(d, expect);
        // d(beta x) = x^3
        let bx = CdgaElement::monomial(CdgaMonomial(vec![(x, 1), (beta, 1)]), rat_int(1));
        let d = f.d(&bx);
        let expect = CdgaElement::monomial(CdgaMonomial(vec![(x, 3)]), rat_int(1));
        assert_eq!(d, expect);
    }
}
