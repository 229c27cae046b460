//! Finite-dimensional real Lie algebras given by exact rational structure
//! constants.
//!
//! Only brackets [X_i, X_j] with i < j are stored; antisymmetry is implicit.
//! Indices are 0-based internally and 1-based in input/output text.

use std::collections::BTreeMap;

use solvcoh_exact::scalar::{rat_int, Rat};
use solvcoh_exact::sturm::SturmChain;
use solvcoh_exact::Matrix;

use crate::AlgebraError;

pub const MAX_DIM: usize = 16;

#[derive(Clone)]
pub struct LieAlgebra {
    dim: usize,
    /// (i, j) with i < j -> sparse coefficient list (k, c) of [X_i, X_j].
    brackets: BTreeMap<(usize, usize), Vec<(usize, Rat)>>,
    /// Named parameter bindings recorded for provenance (surrogate values).
    params: BTreeMap<String, Rat>,
}

/// Structural equality: dimension and bracket table; the recorded parameter
/// bindings are provenance, not structure.
impl PartialEq for LieAlgebra {
    fn eq(&self, other: &Self) -> bool {
        self.dim == other.dim && self.brackets == other.brackets
    }
}

/// Outcome of the Jacobi validation.
#[derive(Clone, Debug, PartialEq)]
pub struct ValidationReport {
    /// First violating triple, 1-based, if any.
    pub first_failure: Option<(usize, usize, usize)>,
    pub checked_triples: usize,
}

impl ValidationReport {
    pub fn is_valid(&self) -> bool {
        self.first_failure.is_none()
    }
}

impl LieAlgebra {
    /// Build without validating Jacobi (use `validate` to inspect).
    pub fn new_unchecked(
        dim: usize,
        brackets: Vec<((usize, usize), Vec<(usize, Rat)>)>,
    ) -> Result<Self, AlgebraError> {
        if dim > MAX_DIM {
            return Err(AlgebraError::Precondition {
                message: format!("dimension {dim} exceeds the supported bound {MAX_DIM}"),
            });
        }
        let mut map = BTreeMap::new();
        for ((i, j), coeffs) in brackets {
            if i >= j || j >= dim || coeffs.iter().any(|(k, _)| *k >= dim) {
                return Err(AlgebraError::IndexOutOfRange);
            }
            let mut cleaned: Vec<(usize, Rat)> = coeffs
                .into_iter()
                .filter(|(_, c)| !num_traits::Zero::is_zero(c))
                .collect();
            cleaned.sort_by_key(|(k, _)| *k);
            if !cleaned.is_empty() {
                map.insert((i, j), cleaned);
            }
        }
        Ok(LieAlgebra { dim, brackets: map, params: BTreeMap::new() })
    }

    /// Build and require the Jacobi identity.
    pub fn new(
        dim: usize,
        brackets: Vec<((usize, usize), Vec<(usize, Rat)>)>,
    ) -> Result<Self, AlgebraError> {
        let g = Self::new_unchecked(dim, brackets)?;
        let report = g.validate();
        match report.first_failure {
            None => Ok(g),
            Some(triple) => Err(AlgebraError::JacobiFailure { triple }),
        }
    }

    /// Abelian algebra R^dim.
    pub fn abelian(dim: usize) -> Self {
        LieAlgebra { dim, brackets: BTreeMap::new(), params: BTreeMap::new() }
    }

    /// Convenience: brackets given as ((i, j), [(k, num, den), ...]) 1-based.
    pub fn from_table(dim: usize, table: &[((usize, usize), &[(usize, i64, i64)])]) -> Result<Self, AlgebraError> {
        let brackets = table
            .iter()
            .map(|((i, j), coeffs)| {
                (
                    (*i - 1, *j - 1),
                    coeffs
                        .iter()
                        .map(|(k, n, d)| (*k - 1, solvcoh_exact::scalar::rat(*n, *d)))
                        .collect(),
                )
            })
            .collect();
        Self::new(dim, brackets)
    }

    pub fn with_params(mut self, params: BTreeMap<String, Rat>) -> Self {
        self.params = params;
        self
    }

    pub fn params(&self) -> &BTreeMap<String, Rat> {
        &self.params
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn bracket_table(&self) -> &BTreeMap<(usize, usize), Vec<(usize, Rat)>> {
        &self.brackets
    }

    /// [X_i, X_j] as a dense coefficient vector, any i, j.
    pub fn bracket_basis(&self, i: usize, j: usize) -> Vec<Rat> {
        let mut out = vec![rat_int(0); self.dim];
        if i == j {
            return out;
        }
        let (key, sign) = if i < j { ((i, j), 1) } else { ((j, i), -1) };
        if let Some(coeffs) = self.brackets.get(&key) {
            for (k, c) in coeffs {
                out[*k] = if sign > 0 { c.clone() } else { -c.clone() };
            }
        }
        out
    }

    /// [x, y] for arbitrary vectors.
    pub fn bracket(&self, x: &[Rat], y: &[Rat]) -> Vec<Rat> {
        let mut out = vec![rat_int(0); self.dim];
        for i in 0..self.dim {
            if num_traits::Zero::is_zero(&x[i]) {
                continue;
            }
            for j in 0..self.dim {
                if num_traits::Zero::is_zero(&y[j]) {
                    continue;
                }
                let b = self.bracket_basis(i, j);
                let scale = &x[i] * &y[j];
                for k in 0..self.dim {
                    if !num_traits::Zero::is_zero(&b[k]) {
                        out[k] = &out[k] + &(&b[k] * &scale);
                    }
                }
            }
        }
        out
    }

    /// Matrix of ad_{X_i}: column j holds [X_i, X_j].
    pub fn ad(&self, i: usize) -> Matrix<Rat> {
        Matrix::from_fn(self.dim, self.dim, |r, c| self.bracket_basis(i, c)[r].clone())
    }

    /// Jacobi check over all i < j < k; reports the first violation.
    pub fn validate(&self) -> ValidationReport {
        let mut checked = 0;
        for i in 0..self.dim {
            for j in i + 1..self.dim {
                for k in j + 1..self.dim {
                    checked += 1;
                    let mut acc = vec![rat_int(0); self.dim];
                    let parts = [
                        self.bracket(&self.bracket_basis(i, j), &basis_vec(self.dim, k)),
                        self.bracket(&self.bracket_basis(j, k), &basis_vec(self.dim, i)),
                        self.bracket(&self.bracket_basis(k, i), &basis_vec(self.dim, j)),
                    ];
                    for part in &parts {
                        for t in 0..self.dim {
                            acc[t] = &acc[t] + &part[t];
                        }
                    }
                    if acc.iter().any(|c| !num_traits::Zero::is_zero(c)) {
                        return ValidationReport {
                            first_failure: Some((i + 1, j + 1, k + 1)),
                            checked_triples: checked,
                        };
                    }
                }
            }
        }
        ValidationReport { first_failure: None, checked_triples: checked }
    }

    /// Unimodularity: trace(ad_X) = 0 for every basis vector.
    pub fn is_unimodular(&self) -> bool {
        (0..self.dim).all(|i| num_traits::Zero::is_zero(&self.ad(i).trace()))
    }

    /// Complete solvability: every ad_{X_i} has only real eigenvalues,
    /// decided by Sturm root counting on the characteristic polynomial.
    pub fn is_completely_solvable(&self) -> bool {
        (0..self.dim).all(|i| {
            let chi = self.ad(i).char_poly().expect("square");
            let sf = chi.squarefree_part();
            match sf.degree() {
                None | Some(0) => true,
                Some(d) => {
                    let chain = SturmChain::new(&sf).unwrap();
                    chain.count_real_roots() == d
                }
            }
        })
    }

    /// Derived series as a list of subspace dimensions, ending at the first
    /// repeat; the algebra is solvable iff the last entry is 0.
    pub fn derived_series_dims(&self) -> Vec<usize> {
        // Current subspace as a row-span matrix.
        let mut current = Matrix::<Rat>::identity(self.dim);
        let mut dims = vec![self.dim];
        loop {
            let basis: Vec<Vec<Rat>> = (0..current.rows()).map(|r| current.row(r)).collect();
            let mut products: Vec<Vec<Rat>> = Vec::new();
            for (a, x) in basis.iter().enumerate() {
                for y in basis.iter().skip(a + 1) {
                    products.push(self.bracket(x, y));
                }
            }
            if products.is_empty() {
                dims.push(0);
                break;
            }
            let m = Matrix::from_rows(products);
            let res = m.rref();
            let next_dim = res.rank;
            let rows: Vec<Vec<Rat>> = (0..next_dim).map(|r| res.rref.row(r)).collect();
            dims.push(next_dim);
            if next_dim == 0 || next_dim == *dims.get(dims.len() - 2).unwrap() {
                break;
            }
            current = Matrix::from_rows(rows);
        }
        dims
    }

    pub fn is_solvable(&self) -> bool {
        self.derived_series_dims().last() == Some(&0)
    }

    /// Conjugate the structure constants by an invertible matrix: the new
    /// basis is X'_j = sum_i P[i][j] X_i.
    pub fn change_basis(&self, p: &Matrix<Rat>) -> Result<LieAlgebra, AlgebraError> {
        assert!(p.is_square() && p.rows() == self.dim);
        let pinv = p.inverse().ok_or(AlgebraError::Precondition {
            message: "basis change matrix must be invertible".into(),
        })?;
        let mut brackets = Vec::new();
        for a in 0..self.dim {
            for b in a + 1..self.dim {
                let xa = p.col(a);
                let xb = p.col(b);
                let prod = self.bracket(&xa, &xb);
                let coords = pinv.mul_vec(&prod);
                let coeffs: Vec<(usize, Rat)> = coords
                    .into_iter()
                    .enumerate()
                    .filter(|(_, c)| !num_traits::Zero::is_zero(c))
                    .collect();
                if !coeffs.is_empty() {
                    brackets.push(((a, b), coeffs));
                }
            }
        }
        LieAlgebra::new_unchecked(self.dim, brackets)
    }

    /// Direct sum with an abelian factor.
    pub fn plus_abelian(&self, extra: usize) -> LieAlgebra {
        let mut g = self.clone();
        g.dim += extra;
        g
    }
}

pub fn basis_vec(dim: usize, i: usize) -> Vec<Rat> {
    let mut v = vec![rat_int(0); dim];
    v[i] = rat_int(1);
    v
}

impl std::fmt::Debug for LieAlgebra {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        writeln!(f, "LieAlgebra(dim={})", self.dim)?;
        for ((i, j), coeffs) in &self.brackets {
            let terms: Vec<String> =
                coeffs.iter().map(|(k, c)| format!("{}*X{}", c, k + 1)).collect();
            writeln!(f, "  [X{},X{}] = {}", i + 1, j + 1, terms.join(" + "))?;
        }
        Ok(())
    }
}
