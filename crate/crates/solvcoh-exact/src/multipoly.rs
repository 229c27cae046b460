//! Sparse multivariate polynomials with deglex-ordered terms.
//!
//! A polynomial does not carry its symbol names, only the variable count;
//! `SymbolTable` maps names to indices at the boundaries where input is
//! parsed or output printed.

use std::collections::BTreeMap;

use crate::scalar::{Field, Rat};
use crate::unipoly::UniPoly;

/// Exponent vector with degree-lexicographic ordering.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Monomial(pub Vec<u32>);

impl Monomial {
    pub fn total_degree(&self) -> u32 {
        self.0.iter().sum()
    }

    fn mul(&self, other: &Monomial) -> Monomial {
        Monomial(self.0.iter().zip(&other.0).map(|(a, b)| a + b).collect())
    }
}

impl Ord for Monomial {
    fn cmp(&self, other: &Self) -> std::cmp::Ordering {
        self.total_degree()
            .cmp(&other.total_degree())
            .then_with(|| self.0.cmp(&other.0))
    }
}

impl PartialOrd for Monomial {
    fn partial_cmp(&self, other: &Self) -> Option<std::cmp::Ordering> {
        Some(self.cmp(other))
    }
}

/// Names for the variables of a polynomial ring.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SymbolTable {
    names: Vec<String>,
}

impl SymbolTable {
    pub fn new(names: &[&str]) -> Self {
        SymbolTable { names: names.iter().map(|s| s.to_string()).collect() }
    }

    pub fn len(&self) -> usize {
        self.names.len()
    }

    pub fn is_empty(&self) -> bool {
        self.names.is_empty()
    }

    pub fn index_of(&self, name: &str) -> Option<usize> {
        self.names.iter().position(|n| n == name)
    }

    pub fn name(&self, i: usize) -> &str {
        &self.names[i]
    }
}

/// Sparse multivariate polynomial; zero coefficients are never stored.
#[derive(Clone, PartialEq, Debug)]
pub struct MultiPoly<F: Field> {
    nvars: usize,
    terms: BTreeMap<Monomial, F>,
}

impl<F: Field> MultiPoly<F> {
    pub fn zero(nvars: usize) -> Self {
        MultiPoly { nvars, terms: BTreeMap::new() }
    }

    pub fn constant(nvars: usize, c: F) -> Self {
        let mut p = Self::zero(nvars);
        if !c.is_zero() {
            p.terms.insert(Monomial(vec![0; nvars]), c);
        }
        p
    }

    pub fn one(nvars: usize) -> Self {
        Self::constant(nvars, F::one())
    }

    pub fn var(index: usize, nvars: usize) -> Self {
        assert!(index < nvars);
        let mut exp = vec![0; nvars];
        exp[index] = 1;
        let mut p = Self::zero(nvars);
        p.terms.insert(Monomial(exp), F::one());
        p
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_constant(&self) -> bool {
        self.terms.keys().all(|m| m.total_degree() == 0)
    }

    pub fn constant_value(&self) -> Option<F> {
        if self.terms.is_empty() {
            return Some(F::zero());
        }
        if self.is_constant() {
            return self.terms.values().next().cloned();
        }
        None
    }

    pub fn total_degree(&self) -> u32 {
        self.terms.keys().map(|m| m.total_degree()).max().unwrap_or(0)
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Monomial, &F)> {
        self.terms.iter()
    }

    /// Leading term in deglex order.
    pub fn leading(&self) -> Option<(&Monomial, &F)> {
        self.terms.iter().next_back()
    }

    fn insert(&mut self, m: Monomial, c: F) {
        if c.is_zero() {
            return;
        }
        match self.terms.get_mut(&m) {
            Some(existing) => {
                let v = existing.add(&c);
                if v.is_zero() {
                    self.terms.remove(&m);
                } else {
                    *existing = v;
                }
            }
            None => {
                self.terms.insert(m, c);
            }
        }
    }

    pub fn add(&self, other: &Self) -> Self {
        assert_eq!(self.nvars, other.nvars);
        let mut out = self.clone();
        for (m, c) in &other.terms {
            out.insert(m.clone(), c.clone());
        }
        out
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.add(&other.neg())
    }

    pub fn neg(&self) -> Self {
        MultiPoly {
            nvars: self.nvars,
            terms: self.terms.iter().map(|(m, c)| (m.clone(), c.neg())).collect(),
        }
    }

    pub fn mul(&self, other: &Self) -> Self {
        assert_eq!(self.nvars, other.nvars);
        let mut out = Self::zero(self.nvars);
        for (m1, c1) in &self.terms {
            for (m2, c2) in &other.terms {
                out.insert(m1.mul(m2), c1.mul(c2));
            }
        }
        out
    }

    pub fn mul_scalar(&self, c: &F) -> Self {
        if c.is_zero() {
            return Self::zero(self.nvars);
        }
        MultiPoly {
            nvars: self.nvars,
            terms: self.terms.iter().map(|(m, k)| (m.clone(), k.mul(c))).collect(),
        }
    }

    pub fn pow(&self, mut e: u32) -> Self {
        let mut acc = Self::one(self.nvars);
        let mut base = self.clone();
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.mul(&base);
            }
            base = base.mul(&base);
            e >>= 1;
        }
        acc
    }

    /// Degree in a single variable.
    pub fn degree_in(&self, var: usize) -> u32 {
        self.terms.keys().map(|m| m.0[var]).max().unwrap_or(0)
    }

    /// Dense coefficient list with respect to one variable; entry `i` is the
    /// coefficient of `var^i`, a polynomial in all variables with `var`
    /// stripped to exponent zero.
    pub fn coeffs_in_var(&self, var: usize) -> Vec<MultiPoly<F>> {
        let d = self.degree_in(var) as usize;
        let mut out = vec![Self::zero(self.nvars); d + 1];
        for (m, c) in &self.terms {
            let e = m.0[var] as usize;
            let mut stripped = m.clone();
            stripped.0[var] = 0;
            out[e].insert(stripped, c.clone());
        }
        out
    }

    /// Substitute a value for one variable.
    pub fn eval_var(&self, var: usize, value: &F) -> Self {
        let mut out = Self::zero(self.nvars);
        for (m, c) in &self.terms {
            let e = m.0[var];
            let mut pw = F::one();
            for _ in 0..e {
                pw = pw.mul(value);
            }
            let mut stripped = m.clone();
            stripped.0[var] = 0;
            out.insert(stripped, c.mul(&pw));
        }
        out
    }

    /// Full evaluation at a point.
    pub fn eval(&self, point: &[F]) -> F {
        assert_eq!(point.len(), self.nvars);
        let mut acc = F::zero();
        for (m, c) in &self.terms {
            let mut t = c.clone();
            for (v, &e) in m.0.iter().enumerate() {
                for _ in 0..e {
                    t = t.mul(&point[v]);
                }
            }
            acc = acc.add(&t);
        }
        acc
    }

    /// Substitute polynomials for every variable (ring homomorphism).
    pub fn substitute(&self, images: &[MultiPoly<F>]) -> MultiPoly<F> {
        assert_eq!(images.len(), self.nvars);
        let nv = images.first().map_or(self.nvars, |p| p.nvars);
        let mut acc = MultiPoly::zero(nv);
        for (m, c) in &self.terms {
            let mut t = MultiPoly::constant(nv, c.clone());
            for (v, &e) in m.0.iter().enumerate() {
                if e > 0 {
                    t = t.mul(&images[v].pow(e));
                }
            }
            acc = acc.add(&t);
        }
        acc
    }

    /// View a 1-variable polynomial as univariate.
    pub fn to_unipoly(&self) -> Option<UniPoly<F>> {
        if self.nvars != 1 {
            return None;
        }
        let d = self.degree_in(0) as usize;
        let mut coeffs = vec![F::zero(); d + 1];
        for (m, c) in &self.terms {
            coeffs[m.0[0] as usize] = c.clone();
        }
        Some(UniPoly::from_coeffs(coeffs))
    }

    pub fn from_unipoly(p: &UniPoly<F>, var: usize, nvars: usize) -> Self {
        let mut out = Self::zero(nvars);
        for (i, c) in p.coeffs().iter().enumerate() {
            let mut exp = vec![0; nvars];
            exp[var] = i as u32;
            out.insert(Monomial(exp), c.clone());
        }
        out
    }

    pub fn map<G: Field>(&self, f: impl Fn(&F) -> G) -> MultiPoly<G> {
        let mut out = MultiPoly::zero(self.nvars);
        for (m, c) in &self.terms {
            out.insert(m.clone(), f(c));
        }
        out
    }

    pub fn display_with<'a>(&'a self, table: &'a SymbolTable) -> MultiPolyDisplay<'a, F> {
        MultiPolyDisplay { poly: self, table: Some(table) }
    }
}

impl MultiPoly<Rat> {
    /// Bivariate resultant eliminating `var`, by evaluation at rational
    /// points and Lagrange interpolation, with consistency checks at extra
    /// sample points.
    ///
    /// Both inputs must involve at most the two variables `var` and `keep`.
    pub fn resultant_bivariate(&self, other: &Self, var: usize, keep: usize) -> UniPoly<Rat> {
        let da = self.degree_in(var) as usize;
        let db = other.degree_in(var) as usize;
        let pa = self.degree_in(keep) as usize;
        let pb = other.degree_in(keep) as usize;
        // Formal degree bound of Res in the kept variable.
        let bound = da * pb + db * pa;
        let a_coeffs = self.coeffs_in_var(var);
        let b_coeffs = other.coeffs_in_var(var);
        let lead_a = a_coeffs.last().unwrap();
        let lead_b = b_coeffs.last().unwrap();

        let mut xs: Vec<Rat> = Vec::new();
        let mut ys: Vec<Rat> = Vec::new();
        let mut t: i64 = 0;
        while xs.len() < bound + 1 + 3 {
            let x = crate::scalar::rat_int(t);
            t += 1;
            // Skip points where a leading coefficient vanishes (degree drop).
            let la = lead_a.eval_var(keep, &x).constant_value().unwrap();
            let lb = lead_b.eval_var(keep, &x).constant_value().unwrap();
            if Field::is_zero(&la) || Field::is_zero(&lb) {
                continue;
            }
            let au = eval_to_unipoly(&a_coeffs, keep, &x);
            let bu = eval_to_unipoly(&b_coeffs, keep, &x);
            xs.push(x);
            ys.push(au.resultant(&bu));
        }
        let interp = lagrange_interpolate(&xs[..bound + 1], &ys[..bound + 1]);
        // Verify the remaining samples agree.
        for i in bound + 1..xs.len() {
            assert_eq!(interp.eval(&xs[i]), ys[i], "resultant interpolation inconsistent");
        }
        interp
    }
}

fn eval_to_unipoly(coeffs: &[MultiPoly<Rat>], keep: usize, x: &Rat) -> UniPoly<Rat> {
    UniPoly::from_coeffs(
        coeffs
            .iter()
            .map(|c| c.eval_var(keep, x).constant_value().expect("only two variables supported"))
            .collect(),
    )
}

/// Lagrange interpolation through distinct sample points.
pub fn lagrange_interpolate(xs: &[Rat], ys: &[Rat]) -> UniPoly<Rat> {
    let one = crate::scalar::rat_int(1);
    let mut acc = UniPoly::zero();
    for (i, yi) in ys.iter().enumerate() {
        let mut num = UniPoly::constant(yi.clone());
        let mut den = one.clone();
        for (j, xj) in xs.iter().enumerate() {
            if i == j {
                continue;
            }
            num = num.mul(&UniPoly::from_coeffs(vec![-xj.clone(), one.clone()]));
            den = &den * &(&xs[i] - xj);
        }
        acc = acc.add(&num.mul_scalar(&den.recip()));
    }
    acc
}

pub struct MultiPolyDisplay<'a, F: Field> {
    poly: &'a MultiPoly<F>,
    table: Option<&'a SymbolTable>,
}

impl<F: Field> std::fmt::Display for MultiPoly<F> {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "{}", MultiPolyDisplay { poly: self, table: None })
    }
}

impl<'a, F: Field> std::fmt::Display for MultiPolyDisplay<'a, F> {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        if self.poly.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (m, c) in self.poly.terms.iter().rev() {
            if !first {
                write!(f, " + ")?;
            }
            first = false;
            if m.total_degree() == 0 {
                write!(f, "{c}")?;
                continue;
            }
            write!(f, "({c})")?;
            for (v, &e) in m.0.iter().enumerate() {
                if e == 0 {
                    continue;
                }
                let name = match self.table {
                    Some(t) => t.name(v).to_string(),
                    None => format!("x{v}"),
                };
                if e == 1 {
                    write!(f, "*{name}")?;
                } else {
                    write!(f, "*{name}^{e}")?;
                }
            }
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::rat_int;

    #[test]
    fn deglex_ordering() {
        // x^2 > xy? deglex: same degree, lex on exponent vectors: (2,0) > (1,1)
        let a = Monomial(vec![2, 0]);
        let b = Monomial(vec![1, 1]);
        let c = Monomial(vec![0, 1]);
        assert!(a > b);
        assert!(b > c);
    }

    #[test]
    fn arithmetic_and_eval() {
        // (w + v)^2 = w^2 + 2wv + v^2
        let w = MultiPoly::<Rat>::var(0, 2);
        let v = MultiPoly::<Rat>::var(1, 2);
        let sq = w.add(&v).pow(2);
        assert_eq!(sq.terms().count(), 3);
        assert_eq!(sq.eval(&[rat_int(2), rat_int(3)]), rat_int(25));
    }

    #[test]
    fn bivariate_resultant_eliminates() {
        // eq1: s^2 + r - h1 s, eq2: r s + 1 - h2 s with h1=5, h2=6.
        // Eliminating r must give +/- (s^3 - 5 s^2 + 6 s - 1).
        let r = MultiPoly::<Rat>::var(0, 2);
        let s = MultiPoly::<Rat>::var(1, 2);
        let c = |n: i64| MultiPoly::<Rat>::constant(2, rat_int(n));
        let eq1 = s.pow(2).add(&r).sub(&c(5).mul(&s));
        let eq2 = r.mul(&s).add(&c(1)).sub(&c(6).mul(&s));
        let res = eq1.resultant_bivariate(&eq2, 0, 1);
        let target = UniPoly::from_i64(&[-1, 6, -5, 1]);
        let m = res.monic();
        assert!(m == target || m == target.neg().monic());
    }
}
