//! Exterior algebra on the dual basis alpha^1, ..., alpha^n: sparse forms,
//! wedge products, the Chevalley-Eilenberg differential, and exterior
//! powers of matrices.

use std::collections::BTreeMap;

use solvcoh_exact::scalar::Field;
#[cfg(test)]
use solvcoh_exact::scalar::Rat;
use solvcoh_exact::Matrix;

use crate::lie::LieAlgebra;

/// Strictly increasing index set (0-based) naming a basis p-form.
pub type MultiIndex = Vec<u8>;

/// Enumeration of the degree-p basis of Lambda^p (R^n)* in lexicographic
/// order, with index lookup.
#[derive(Clone, Debug)]
pub struct ExteriorBasis {
    pub n: usize,
    pub degree: usize,
    pub indices: Vec<MultiIndex>,
    lookup: BTreeMap<MultiIndex, usize>,
}

impl ExteriorBasis {
    pub fn new(n: usize, degree: usize) -> Self {
        let indices = combinations(n, degree);
        let lookup = indices.iter().cloned().enumerate().map(|(i, m)| (m, i)).collect();
        ExteriorBasis { n, degree, indices, lookup }
    }

    pub fn dim(&self) -> usize {
        self.indices.len()
    }

    pub fn position(&self, idx: &MultiIndex) -> Option<usize> {
        self.lookup.get(idx).copied()
    }
}

/// Sparse exterior form of a fixed degree.
#[derive(Clone, PartialEq)]
pub struct ExteriorForm<F: Field> {
    pub n: usize,
    pub degree: usize,
    pub terms: BTreeMap<MultiIndex, F>,
}

impl<F: Field> ExteriorForm<F> {
    pub fn zero(n: usize, degree: usize) -> Self {
        ExteriorForm { n, degree, terms: BTreeMap::new() }
    }

    /// A single basis form alpha^{i1...ip}; indices 0-based, strictly
    /// increasing.
    pub fn basis(n: usize, idx: &[u8]) -> Self {
        assert!(idx.windows(2).all(|w| w[0] < w[1]), "indices must be strictly increasing");
        let mut terms = BTreeMap::new();
        terms.insert(idx.to_vec(), F::one());
        ExteriorForm { n, degree: idx.len(), terms }
    }

    pub fn term(mut self, idx: &[u8], c: F) -> Self {
        assert_eq!(idx.len(), self.degree);
        self.insert(idx.to_vec(), c);
        self
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    fn insert(&mut self, idx: MultiIndex, c: F) {
        if c.is_zero() {
            return;
        }
        match self.terms.get_mut(&idx) {
            Some(v) => {
                let s = v.add(&c);
                if s.is_zero() {
                    self.terms.remove(&idx);
                } else {
                    *v = s;
                }
            }
            None => {
                self.terms.insert(idx, c);
            }
        }
    }

    pub fn add(&self, other: &Self) -> Self {
        assert_eq!(self.degree, other.degree);
        let mut out = self.clone();
        for (m, c) in &other.terms {
            out.insert(m.clone(), c.clone());
        }
        out
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.add(&other.scale(&F::from_i64(-1)))
    }

    pub fn scale(&self, c: &F) -> Self {
        if c.is_zero() {
            return Self::zero(self.n, self.degree);
        }
        ExteriorForm {
            n: self.n,
            degree: self.degree,
            terms: self.terms.iter().map(|(m, k)| (m.clone(), k.mul(c))).collect(),
        }
    }

    pub fn wedge(&self, other: &Self) -> Self {
        let mut out = Self::zero(self.n, self.degree + other.degree);
        for (m1, c1) in &self.terms {
            for (m2, c2) in &other.terms {
                if let Some((idx, sign)) = merge_indices(m1, m2) {
                    let mut c = c1.mul(c2);
                    if sign < 0 {
                        c = c.neg();
                    }
                    out.insert(idx, c);
                }
            }
        }
        out
    }

    /// Coordinates in the lexicographic degree basis.
    pub fn to_vec(&self, basis: &ExteriorBasis) -> Vec<F> {
        let mut v = vec![F::zero(); basis.dim()];
        for (m, c) in &self.terms {
            v[basis.position(m).expect("index in range")] = c.clone();
        }
        v
    }

    pub fn from_vec(basis: &ExteriorBasis, v: &[F]) -> Self {
        let mut out = Self::zero(basis.n, basis.degree);
        for (i, c) in v.iter().enumerate() {
            if !c.is_zero() {
                out.insert(basis.indices[i].clone(), c.clone());
            }
        }
        out
    }

    pub fn map<G: Field>(&self, f: impl Fn(&F) -> G) -> ExteriorForm<G> {
        let mut out = ExteriorForm::zero(self.n, self.degree);
        for (m, c) in &self.terms {
            out.insert(m.clone(), f(c));
        }
        out
    }
}

/// All k-subsets of {0..n-1} in lexicographic order.
pub fn combinations(n: usize, k: usize) -> Vec<MultiIndex> {
    if k > n {
        return Vec::new();
    }
    if k == 0 {
        return vec![vec![]];
    }
    let mut out = Vec::new();
    let mut c: Vec<u8> = (0..k as u8).collect();
    loop {
        out.push(c.clone());
        let mut i = k;
        let mut advanced = false;
        while i > 0 {
            i -= 1;
            if c[i] < (n - k + i) as u8 {
                c[i] += 1;
                for j in i + 1..k {
                    c[j] = c[j - 1] + 1;
                }
                advanced = true;
                break;
            }
        }
        if !advanced {
            return out;
        }
    }
}

/// Merge two strictly increasing index sets; None if they intersect,
/// otherwise the merged set and the permutation sign.
pub fn merge_indices(a: &[u8], b: &[u8]) -> Option<(MultiIndex, i8)> {
    let mut out = Vec::with_capacity(a.len() + b.len());
    let mut sign = 1i8;
    let (mut i, mut j) = (0, 0);
    while i < a.len() && j < b.len() {
        if a[i] == b[j] {
            return None;
        }
        if a[i] < b[j] {
            out.push(a[i]);
            i += 1;
        } else {
            // b[j] jumps over the remaining a-entries
            if (a.len() - i) % 2 == 1 {
                sign = -sign;
            }
            out.push(b[j]);
            j += 1;
        }
    }
    out.extend_from_slice(&a[i..]);
    out.extend_from_slice(&b[j..]);
    Some((out, sign))
}

/// Chevalley-Eilenberg differential, sign convention
/// d alpha(X, Y) = -alpha([X, Y]), extended as a graded derivation.
pub fn ce_differential<F: Field>(g: &LieAlgebra, form: &ExteriorForm<F>) -> ExteriorForm<F> {
    let n = g.dim();
    // d of the degree-1 basis forms
    let d1: Vec<ExteriorForm<F>> = (0..n).map(|k| d_alpha(g, k)).collect();
    let mut out = ExteriorForm::zero(n, form.degree + 1);
    for (idx, c) in &form.terms {
        for (t, &k) in idx.iter().enumerate() {
            // remove position t, wedge the rest with d(alpha^k) at sign (-1)^t
            let mut rest: MultiIndex = idx.clone();
            rest.remove(t);
            let rest_form = ExteriorForm::<F>::basis(n, &rest);
            let mut coeff = c.clone();
            if t % 2 == 1 {
                coeff = coeff.neg();
            }
            let wedge = d1[k as usize].wedge(&rest_form).scale(&coeff);
            out = out.add(&wedge);
        }
    }
    out
}

fn d_alpha<F: Field>(g: &LieAlgebra, k: usize) -> ExteriorForm<F> {
    let n = g.dim();
    let mut out = ExteriorForm::zero(n, 2);
    for ((i, j), coeffs) in g.bracket_table() {
        for (kk, c) in coeffs {
            if *kk == k {
                let val = F::from_rat(c).neg();
                out.insert(vec![*i as u8, *j as u8], val);
            }
        }
    }
    out
}

/// Matrix of d: Lambda^p -> Lambda^{p+1} in the lexicographic bases.
pub fn ce_differential_matrix<F: Field>(g: &LieAlgebra, p: usize) -> Matrix<F> {
    let src = ExteriorBasis::new(g.dim(), p);
    let dst = ExteriorBasis::new(g.dim(), p + 1);
    let mut m = Matrix::zero(dst.dim(), src.dim());
    for (col, idx) in src.indices.iter().enumerate() {
        let d = ce_differential::<F>(g, &ExteriorForm::basis(g.dim(), idx));
        for (mi, c) in &d.terms {
            m.set(dst.position(mi).unwrap(), col, c.clone());
        }
    }
    m
}

/// p-th exterior power of a square matrix: entries are the p x p minors,
/// rows and columns indexed by the lexicographic bases.
pub fn exterior_power_matrix<F: Field>(m: &Matrix<F>, p: usize) -> Matrix<F> {
    assert!(m.is_square());
    let basis = ExteriorBasis::new(m.rows(), p);
    Matrix::from_fn(basis.dim(), basis.dim(), |r, c| {
        let rows: Vec<usize> = basis.indices[r].iter().map(|&i| i as usize).collect();
        let cols: Vec<usize> = basis.indices[c].iter().map(|&i| i as usize).collect();
        m.submatrix(&rows, &cols).det()
    })
}

impl<F: Field> std::fmt::Debug for ExteriorForm<F> {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        let parts: Vec<String> = self
            .terms
            .iter()
            .map(|(m, c)| {
                let name: String = m.iter().map(|i| (i + 1).to_string()).collect();
                format!("({c})a{name}")
            })
            .collect();
        write!(f, "{}", parts.join(" + "))
    }
}
