//! A differential graded subalgebra of the Chevalley-Eilenberg algebra
//! Lambda g*, presented by a basis per degree.
//!
//! The full complex is the special case where each degree carries the whole
//! lexicographic basis. Invariant subcomplexes of finite actions are the
//! other producer. The type exposes exactly what downstream consumers need:
//! dimensions, differentials and products in sub-coordinates, and the
//! cohomology ring.

use solvcoh_exact::scalar::{Field, Rat};
use solvcoh_exact::Matrix;

use crate::cohomology::CohomologyRing;
use crate::exterior::{ce_differential_matrix, ExteriorBasis, ExteriorForm};
use crate::lie::LieAlgebra;
use crate::AlgebraError;

#[derive(Clone)]
pub struct SubComplex {
    pub algebra: LieAlgebra,
    /// bases[p]: rows are basis vectors of the degree-p subspace, written in
    /// the ambient lexicographic coordinates of Lambda^p.
    pub bases: Vec<Matrix<Rat>>,
    /// Differentials in sub-coordinates: d[p]: C^p -> C^{p+1}.
    diffs: Vec<Matrix<Rat>>,
    ambient: Vec<ExteriorBasis>,
    /// Every degree carries the full ambient basis (identity bases).
    full: bool,
    /// Prepared per-degree solvers for expressing ambient vectors.
    express: Vec<solvcoh_exact::matrix::LinearSolver<Rat>>,
}

impl SubComplex {
    /// The full Chevalley-Eilenberg complex of an algebra.
    pub fn full(algebra: &LieAlgebra) -> Self {
        let n = algebra.dim();
        let bases = (0..=n)
            .map(|p| Matrix::identity(ExteriorBasis::new(n, p).dim()))
            .collect();
        Self::from_bases(algebra.clone(), bases).expect("full complex is d-stable")
    }

    /// A subcomplex from per-degree bases; checks d-stability.
    pub fn from_bases(algebra: LieAlgebra, bases: Vec<Matrix<Rat>>) -> Result<Self, AlgebraError> {
        let n = algebra.dim();
        assert_eq!(bases.len(), n + 1);
        let ambient: Vec<ExteriorBasis> = (0..=n).map(|p| ExteriorBasis::new(n, p)).collect();
        let mut diffs = Vec::with_capacity(n + 1);
        for p in 0..=n {
            let d_ambient = ce_differential_matrix::<Rat>(&algebra, p);
            let rows = bases[p].rows();
            let mut dp = Matrix::zero(if p + 1 <= n { bases[p + 1].rows() } else { 0 }, rows);
            for i in 0..rows {
                let v = bases[p].row(i);
                let dv = d_ambient.mul_vec(&v);
                if p + 1 > n {
                    if dv.iter().any(|c| !num_traits::Zero::is_zero(c)) {
                        return Err(AlgebraError::Precondition {
                            message: "differential leaves the top degree".into(),
                        });
                    }
                    continue;
                }
                match express_in_rows(&bases[p + 1], &dv) {
                    Some(coords) => {
                        for (r, c) in coords.into_iter().enumerate() {
                            dp.set(r, i, c);
                        }
                    }
                    None => {
                        return Err(AlgebraError::Precondition {
                            message: format!("subspace of degree {p} is not d-stable"),
                        })
                    }
                }
            }
            diffs.push(dp);
        }
        let full = bases
            .iter()
            .all(|b| b.rows() == b.cols() && *b == Matrix::identity(b.rows()));
        let express = bases
            .iter()
            .map(|b| solvcoh_exact::matrix::LinearSolver::new(&b.transpose()))
            .collect();
        Ok(SubComplex { algebra, bases, diffs, ambient, full, express })
    }

    pub fn is_full(&self) -> bool {
        self.full
    }

    pub fn top_degree(&self) -> usize {
        self.algebra.dim()
    }

    pub fn dim_at(&self, p: usize) -> usize {
        if p > self.top_degree() {
            0
        } else {
            self.bases[p].rows()
        }
    }

    pub fn differential(&self, p: usize) -> &Matrix<Rat> {
        &self.diffs[p]
    }

    /// d applied to sub-coordinates.
    pub fn d(&self, p: usize, v: &[Rat]) -> Vec<Rat> {
        if p >= self.top_degree() {
            return vec![];
        }
        self.diffs[p].mul_vec(v)
    }

    /// Ambient coordinate vector of a sub-coordinate vector.
    pub fn to_ambient(&self, p: usize, v: &[Rat]) -> Vec<Rat> {
        if self.full {
            return v.to_vec();
        }
        let mut out = vec![Rat::from_integer(0.into()); self.ambient[p].dim()];
        for (i, c) in v.iter().enumerate() {
            if num_traits::Zero::is_zero(c) {
                continue;
            }
            let row = self.bases[p].row(i);
            for (o, r) in out.iter_mut().zip(&row) {
                *o = &*o + &(c * r);
            }
        }
        out
    }

    /// Sub-coordinates of an ambient vector lying in the subspace.
    pub fn from_ambient(&self, p: usize, v: &[Rat]) -> Option<Vec<Rat>> {
        if self.full {
            return Some(v.to_vec());
        }
        if self.bases[p].rows() == 0 {
            return if v.iter().all(|c| num_traits::Zero::is_zero(c)) {
                Some(vec![])
            } else {
                None
            };
        }
        self.express[p].solve(v)
    }

    /// Wedge product in sub-coordinates; None if the product leaves the
    /// subalgebra (cannot happen for genuinely multiplicative subspaces).
    pub fn wedge(&self, p: usize, a: &[Rat], q: usize, b: &[Rat]) -> Option<Vec<Rat>> {
        if p + q > self.top_degree() {
            return Some(vec![]);
        }
        let fa = ExteriorForm::from_vec(&self.ambient[p], &self.to_ambient(p, a));
        let fb = ExteriorForm::from_vec(&self.ambient[q], &self.to_ambient(q, b));
        let prod = fa.wedge(&fb).to_vec(&self.ambient[p + q]);
        self.from_ambient(p + q, &prod)
    }

    /// Cohomology of the subcomplex (coordinates are sub-coordinates).
    pub fn cohomology(&self) -> CohomologyRing<Rat> {
        CohomologyRing::from_differentials(&self.diffs)
    }

    /// Poincare duality of the cohomology ring: Betti symmetry plus a
    /// nondegenerate top pairing. Defined for unimodular algebras only.
    pub fn poincare_check(&self) -> Result<bool, AlgebraError> {
        if !self.algebra.is_unimodular() {
            return Err(AlgebraError::Precondition {
                message: "Poincare duality check requires a unimodular algebra".into(),
            });
        }
        let ring = self.cohomology();
        let wedge = self.wedge_fn();
        ring.poincare_check(&wedge)
    }

    /// Wedge callback suitable for `CohomologyRing::cup`.
    pub fn wedge_fn(&self) -> impl Fn(usize, &[Rat], usize, &[Rat]) -> Vec<Rat> + '_ {
        move |p, a, q, b| self.wedge(p, a, q, b).expect("subalgebra closed under wedge")
    }

    /// Check that the subspaces really form a subalgebra (closed under
    /// wedge); subcomplex producers call this when the property is not
    /// guaranteed by construction.
    pub fn verify_multiplicative(&self) -> bool {
        for p in 1..=self.top_degree() {
            for q in p..=self.top_degree() - p {
                for i in 0..self.dim_at(p) {
                    for j in 0..self.dim_at(q) {
                        let a = unit(self.dim_at(p), i);
                        let b = unit(self.dim_at(q), j);
                        if self.wedge(p, &a, q, &b).is_none() {
                            return false;
                        }
                    }
                }
            }
        }
        true
    }
}

fn unit(n: usize, i: usize) -> Vec<Rat> {
    let mut v = vec![Rat::from_integer(0.into()); n];
    v[i] = Rat::from_integer(1.into());
    v
}

/// Solve x * rows = v (express v in the row space); None if outside.
pub fn express_in_rows<F: Field>(rows: &Matrix<F>, v: &[F]) -> Option<Vec<F>> {
    if rows.rows() == 0 {
        return if v.iter().all(|c| c.is_zero()) { Some(vec![]) } else { None };
    }
    rows.transpose().solve(v)
}
