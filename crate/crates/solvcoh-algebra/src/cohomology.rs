//! Cohomology of a cochain complex of exact matrices, with chosen
//! representatives, Betti numbers, cup products and the Poincare pairing.
//!
//! The complex is handed over as the list of differential matrices; the
//! ring structure comes from a wedge callback so the same code serves the
//! full Chevalley-Eilenberg complex and invariant subcomplexes.

use solvcoh_exact::matrix::LinearSolver;
use solvcoh_exact::scalar::Field;
use solvcoh_exact::Matrix;

use crate::AlgebraError;

/// Per-degree data of a cohomology computation.
#[derive(Clone)]
pub struct DegreeData<F: Field> {
    /// Cocycle basis vectors (in the complex's degree-p coordinates).
    pub cocycles: Vec<Vec<F>>,
    /// Coboundary basis vectors.
    pub coboundaries: Vec<Vec<F>>,
    /// Chosen representatives of a basis of H^p.
    pub representatives: Vec<Vec<F>>,
    pub betti: usize,
    /// Prepared solver for [representatives | coboundaries] x = v.
    class_solver: Option<LinearSolver<F>>,
}

impl<F: Field> std::fmt::Debug for DegreeData<F> {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.debug_struct("DegreeData").field("betti", &self.betti).finish()
    }
}

/// Cohomology of a finite complex 0 -> C^0 -> ... -> C^top -> 0.
#[derive(Clone)]
pub struct CohomologyRing<F: Field> {
    pub degrees: Vec<DegreeData<F>>,
    /// wedge(p, v_p, q, v_q) -> coordinates in degree p+q.
    dims: Vec<usize>,
}

impl<F: Field> std::fmt::Debug for CohomologyRing<F> {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "CohomologyRing(betti = {:?})", self.betti_vector())
    }
}

impl<F: Field> CohomologyRing<F> {
    /// Compute cohomology from differentials d[p]: C^p -> C^{p+1}.
    /// `d` must have length top+1 with d[top] mapping into a zero space
    /// (declare its row count 0).
    pub fn from_differentials(d: &[Matrix<F>]) -> Self {
        let top = d.len() - 1;
        let mut degrees = Vec::with_capacity(top + 1);
        let dims: Vec<usize> = d.iter().map(|m| m.cols()).collect();
        for p in 0..=top {
            let cocycles = d[p].kernel_basis();
            let coboundaries = if p == 0 {
                Vec::new()
            } else {
                image_basis(&d[p - 1])
            };
            let representatives = echelon_complement(&coboundaries, &cocycles, dims[p]);
            let betti = representatives.len();
            debug_assert_eq!(betti, cocycles.len() - coboundaries.len());
            let class_solver = if representatives.is_empty() && coboundaries.is_empty() {
                None
            } else {
                let mut cols: Vec<Vec<F>> = representatives.clone();
                cols.extend(coboundaries.iter().cloned());
                Some(LinearSolver::new(&Matrix::from_rows(cols).transpose()))
            };
            degrees.push(DegreeData {
                cocycles,
                coboundaries,
                representatives,
                betti,
                class_solver,
            });
        }
        CohomologyRing { degrees, dims }
    }

    pub fn top_degree(&self) -> usize {
        self.degrees.len() - 1
    }

    pub fn betti(&self, p: usize) -> usize {
        self.degrees.get(p).map_or(0, |d| d.betti)
    }

    pub fn betti_vector(&self) -> Vec<usize> {
        self.degrees.iter().map(|d| d.betti).collect()
    }

    pub fn dim_at(&self, p: usize) -> usize {
        self.dims.get(p).copied().unwrap_or(0)
    }

    /// Express a cocycle as class coordinates in the representative basis;
    /// None if the vector is not a cocycle of that degree.
    pub fn class_of(&self, p: usize, v: &[F]) -> Option<Vec<F>> {
        let data = self.degrees.get(p)?;
        if v.len() != self.dims[p] {
            return None;
        }
        // Solve [reps | coboundaries] x = v; the reps part is the class.
        match &data.class_solver {
            None => {
                if v.iter().all(|c| c.is_zero()) {
                    Some(vec![])
                } else {
                    None
                }
            }
            Some(solver) => {
                let x = solver.solve(v)?;
                Some(x[..data.representatives.len()].to_vec())
            }
        }
    }

    /// True when the cocycle is a coboundary.
    pub fn is_exact(&self, p: usize, v: &[F]) -> Option<bool> {
        let class = self.class_of(p, v)?;
        Some(class.iter().all(|c| c.is_zero()))
    }

    /// Representative cocycle of a class given by coordinates.
    pub fn representative(&self, p: usize, class: &[F]) -> Vec<F> {
        let data = &self.degrees[p];
        let mut out = vec![F::zero(); self.dims[p]];
        for (c, rep) in class.iter().zip(&data.representatives) {
            for (o, r) in out.iter_mut().zip(rep) {
                *o = o.add(&c.mul(r));
            }
        }
        out
    }

    /// Cup product of classes via a wedge callback on chain level.
    /// Degree overflow yields the zero class in the top+ degree.
    pub fn cup(
        &self,
        p: usize,
        class_a: &[F],
        q: usize,
        class_b: &[F],
        wedge: &dyn Fn(usize, &[F], usize, &[F]) -> Vec<F>,
    ) -> Vec<F> {
        if p + q > self.top_degree() {
            return vec![];
        }
        let a = self.representative(p, class_a);
        let b = self.representative(q, class_b);
        let prod = wedge(p, &a, q, &b);
        self.class_of(p + q, &prod).expect("product of cocycles is a cocycle")
    }

    /// Betti-number symmetry b_p = b_{top-p} plus nondegeneracy of the cup
    /// pairing H^p x H^{top-p} -> H^{top}.
    pub fn poincare_check(
        &self,
        wedge: &dyn Fn(usize, &[F], usize, &[F]) -> Vec<F>,
    ) -> Result<bool, AlgebraError> {
        let top = self.top_degree();
        if self.betti(top) != 1 {
            return Ok(false);
        }
        for p in 0..=top {
            let q = top - p;
            if self.betti(p) != self.betti(q) {
                return Ok(false);
            }
            let bp = self.betti(p);
            if bp == 0 {
                continue;
            }
            let mut pairing = Matrix::<F>::zero(bp, bp);
            for i in 0..bp {
                let mut ei = vec![F::zero(); bp];
                ei[i] = F::one();
                for j in 0..bp {
                    let mut ej = vec![F::zero(); bp];
                    ej[j] = F::one();
                    let prod = self.cup(p, &ei, q, &ej, wedge);
                    pairing.set(i, j, prod.first().cloned().unwrap_or_else(F::zero));
                }
            }
            if pairing.rank() < bp {
                return Ok(false);
            }
        }
        Ok(true)
    }
}

/// Basis of the column space: the pivot columns of the matrix.
pub fn image_basis<F: Field>(m: &Matrix<F>) -> Vec<Vec<F>> {
    let res = m.rref();
    res.pivots.iter().map(|&c| m.col(c)).collect()
}

/// Extend `base` (independent vectors) to span(base + candidates) by a
/// deterministic echelon sweep over `candidates`; returns the chosen
/// complement vectors. Single-pass incremental elimination.
pub fn echelon_complement<F: Field>(
    base: &[Vec<F>],
    candidates: &[Vec<F>],
    dim: usize,
) -> Vec<Vec<F>> {
    let mut sweep = EchelonSweep::new(dim);
    for b in base {
        sweep.absorb(b.clone());
    }
    let mut chosen = Vec::new();
    for cand in candidates {
        if sweep.rank() == dim {
            break;
        }
        if sweep.absorb(cand.clone()) {
            chosen.push(cand.clone());
        }
    }
    chosen
}

/// Incremental row echelon structure: rows normalized with recorded pivot
/// columns; `absorb` reduces the vector and reports whether it extended the
/// span.
pub struct EchelonSweep<F: Field> {
    dim: usize,
    rows: Vec<(usize, Vec<F>)>,
}

impl<F: Field> EchelonSweep<F> {
    pub fn new(dim: usize) -> Self {
        EchelonSweep { dim, rows: Vec::new() }
    }

    pub fn rank(&self) -> usize {
        self.rows.len()
    }

    pub fn absorb(&mut self, mut v: Vec<F>) -> bool {
        assert_eq!(v.len(), self.dim);
        for (piv, row) in &self.rows {
            if !v[*piv].is_zero() {
                let factor = v[*piv].clone();
                for (x, r) in v.iter_mut().zip(row) {
                    *x = x.sub(&factor.mul(r));
                }
            }
        }
        match v.iter().position(|c| !c.is_zero()) {
            None => false,
            Some(piv) => {
                let inv = v[piv].inv().unwrap();
                for x in v.iter_mut() {
                    *x = x.mul(&inv);
                }
                self.rows.push((piv, v));
                true
            }
        }
    }

    /// Membership test without mutating.
    pub fn contains(&self, v: &[F]) -> bool {
        let mut v = v.to_vec();
        for (piv, row) in &self.rows {
            if !v[*piv].is_zero() {
                let factor = v[*piv].clone();
                for (x, r) in v.iter_mut().zip(row) {
                    *x = x.sub(&factor.mul(r));
                }
            }
        }
        v.iter().all(|c| c.is_zero())
    }
}
