//! Dense matrices over an exact field: reduced row echelon form, kernels,
//! solving, determinants, characteristic and minimal polynomials.
//!
//! Row reduction of rational matrices goes through fraction-free Bareiss
//! elimination on an integer-scaled copy; other fields use plain
//! Gauss-Jordan elimination.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Zero};

use crate::scalar::{Field, Rat};
use crate::unipoly::UniPoly;
use crate::ExactError;

/// Row-major dense matrix. Rectangular; all entries in one field.
#[derive(Clone, PartialEq)]
pub struct Matrix<F: Field> {
    rows: usize,
    cols: usize,
    data: Vec<F>,
}

/// Output of `Matrix::rref`.
#[derive(Clone, Debug)]
pub struct RrefResult<F: Field> {
    pub rref: Matrix<F>,
    pub pivots: Vec<usize>,
    pub rank: usize,
}

impl<F: Field> Matrix<F> {
    pub fn zero(rows: usize, cols: usize) -> Self {
        Matrix { rows, cols, data: vec![F::zero(); rows * cols] }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zero(n, n);
        for i in 0..n {
            m.set(i, i, F::one());
        }
        m
    }

    pub fn from_fn(rows: usize, cols: usize, f: impl Fn(usize, usize) -> F) -> Self {
        let mut data = Vec::with_capacity(rows * cols);
        for r in 0..rows {
            for c in 0..cols {
                data.push(f(r, c));
            }
        }
        Matrix { rows, cols, data }
    }

    pub fn from_rows(rows: Vec<Vec<F>>) -> Self {
        let r = rows.len();
        let c = rows.first().map_or(0, |row| row.len());
        assert!(rows.iter().all(|row| row.len() == c), "ragged rows");
        Matrix { rows: r, cols: c, data: rows.into_iter().flatten().collect() }
    }

    pub fn from_i64_rows(rows: &[&[i64]]) -> Self {
        Self::from_rows(rows.iter().map(|r| r.iter().map(|&x| F::from_i64(x)).collect()).collect())
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn at(&self, r: usize, c: usize) -> &F {
        &self.data[r * self.cols + c]
    }

    pub fn set(&mut self, r: usize, c: usize, v: F) {
        self.data[r * self.cols + c] = v;
    }

    pub fn row(&self, r: usize) -> Vec<F> {
        (0..self.cols).map(|c| self.at(r, c).clone()).collect()
    }

    pub fn col(&self, c: usize) -> Vec<F> {
        (0..self.rows).map(|r| self.at(r, c).clone()).collect()
    }

    pub fn transpose(&self) -> Self {
        Self::from_fn(self.cols, self.rows, |r, c| self.at(c, r).clone())
    }

    pub fn add(&self, other: &Self) -> Self {
        assert_eq!((self.rows, self.cols), (other.rows, other.cols));
        Self::from_fn(self.rows, self.cols, |r, c| self.at(r, c).add(other.at(r, c)))
    }

    pub fn sub(&self, other: &Self) -> Self {
        assert_eq!((self.rows, self.cols), (other.rows, other.cols));
        Self::from_fn(self.rows, self.cols, |r, c| self.at(r, c).sub(other.at(r, c)))
    }

    pub fn neg(&self) -> Self {
        Self::from_fn(self.rows, self.cols, |r, c| self.at(r, c).neg())
    }

    pub fn mul(&self, other: &Self) -> Self {
        assert_eq!(self.cols, other.rows, "dimension mismatch");
        Self::from_fn(self.rows, other.cols, |r, c| {
            let mut acc = F::zero();
            for k in 0..self.cols {
                acc = acc.add(&self.at(r, k).mul(other.at(k, c)));
            }
            acc
        })
    }

    pub fn mul_vec(&self, v: &[F]) -> Vec<F> {
        assert_eq!(self.cols, v.len());
        (0..self.rows)
            .map(|r| {
                let mut acc = F::zero();
                for k in 0..self.cols {
                    acc = acc.add(&self.at(r, k).mul(&v[k]));
                }
                acc
            })
            .collect()
    }

    pub fn mul_scalar(&self, s: &F) -> Self {
        Self::from_fn(self.rows, self.cols, |r, c| self.at(r, c).mul(s))
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(|x| x.is_zero())
    }

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    pub fn trace(&self) -> F {
        let mut acc = F::zero();
        for i in 0..self.rows.min(self.cols) {
            acc = acc.add(self.at(i, i));
        }
        acc
    }

    pub fn hstack(&self, other: &Self) -> Self {
        assert_eq!(self.rows, other.rows);
        Self::from_fn(self.rows, self.cols + other.cols, |r, c| {
            if c < self.cols {
                self.at(r, c).clone()
            } else {
                other.at(r, c - self.cols).clone()
            }
        })
    }

    pub fn block_diag(blocks: &[Matrix<F>]) -> Self {
        let rows: usize = blocks.iter().map(|b| b.rows).sum();
        let cols: usize = blocks.iter().map(|b| b.cols).sum();
        let mut m = Self::zero(rows, cols);
        let (mut ro, mut co) = (0, 0);
        for b in blocks {
            for r in 0..b.rows {
                for c in 0..b.cols {
                    m.set(ro + r, co + c, b.at(r, c).clone());
                }
            }
            ro += b.rows;
            co += b.cols;
        }
        m
    }

    pub fn submatrix(&self, rows: &[usize], cols: &[usize]) -> Self {
        Self::from_fn(rows.len(), cols.len(), |r, c| self.at(rows[r], cols[c]).clone())
    }

    pub fn map<G: Field>(&self, f: impl Fn(&F) -> G) -> Matrix<G> {
        Matrix::from_fn(self.rows, self.cols, |r, c| f(self.at(r, c)))
    }

    /// All entries as rationals, when the matrix lies over the prime field.
    pub fn try_to_rat(&self) -> Option<Matrix<Rat>> {
        let mut data = Vec::with_capacity(self.data.len());
        for x in &self.data {
            data.push(x.to_rat()?);
        }
        Some(Matrix { rows: self.rows, cols: self.cols, data })
    }

    /// Reduced row echelon form with pivot columns and rank.
    pub fn rref(&self) -> RrefResult<F> {
        if let Some(rm) = self.try_to_rat() {
            let res = rref_bareiss(&rm);
            return RrefResult {
                rref: res.rref.map(|q| F::from_rat(q)),
                pivots: res.pivots,
                rank: res.rank,
            };
        }
        rref_gauss(self)
    }

    pub fn rank(&self) -> usize {
        self.rref().rank
    }

    /// Basis of the right kernel, one vector per non-pivot column.
    pub fn kernel_basis(&self) -> Vec<Vec<F>> {
        let RrefResult { rref, pivots, .. } = self.rref();
        let pivot_set: std::collections::BTreeSet<usize> = pivots.iter().copied().collect();
        let mut basis = Vec::new();
        for free in 0..self.cols {
            if pivot_set.contains(&free) {
                continue;
            }
            let mut v = vec![F::zero(); self.cols];
            v[free] = F::one();
            for (pr, &pc) in pivots.iter().enumerate() {
                v[pc] = rref.at(pr, free).neg();
            }
            basis.push(v);
        }
        basis
    }

    /// Solve `self * x = rhs` for one solution; `None` if inconsistent.
    pub fn solve(&self, rhs: &[F]) -> Option<Vec<F>> {
        assert_eq!(rhs.len(), self.rows);
        let aug = self.hstack(&Matrix::from_fn(self.rows, 1, |r, _| rhs[r].clone()));
        let RrefResult { rref, pivots, .. } = aug.rref();
        if pivots.contains(&self.cols) {
            return None;
        }
        let mut x = vec![F::zero(); self.cols];
        for (pr, &pc) in pivots.iter().enumerate() {
            x[pc] = rref.at(pr, self.cols).clone();
        }
        Some(x)
    }

    pub fn inverse(&self) -> Option<Self> {
        if !self.is_square() {
            return None;
        }
        let n = self.rows;
        let aug = self.hstack(&Self::identity(n));
        let RrefResult { rref, rank, .. } = aug.rref();
        if rank < n {
            return None;
        }
        Some(Self::from_fn(n, n, |r, c| rref.at(r, n + c).clone()))
    }

    pub fn det(&self) -> F {
        assert!(self.is_square());
        let n = self.rows;
        let mut m = self.clone();
        let mut det = F::one();
        for col in 0..n {
            let pivot = (col..n).find(|&r| !m.at(r, col).is_zero());
            let pr = match pivot {
                None => return F::zero(),
                Some(pr) => pr,
            };
            if pr != col {
                for c in 0..n {
                    let a = m.at(pr, c).clone();
                    let b = m.at(col, c).clone();
                    m.set(pr, c, b);
                    m.set(col, c, a);
                }
                det = det.neg();
            }
            let p = m.at(col, col).clone();
            det = det.mul(&p);
            let pinv = p.inv().unwrap();
            for r in col + 1..n {
                let factor = m.at(r, col).mul(&pinv);
                if factor.is_zero() {
                    continue;
                }
                for c in col..n {
                    let v = m.at(r, c).sub(&factor.mul(m.at(col, c)));
                    m.set(r, c, v);
                }
            }
        }
        det
    }

    /// Monic characteristic polynomial det(xI - A) by Faddeev-LeVerrier.
    pub fn char_poly(&self) -> Result<UniPoly<F>, ExactError> {
        if !self.is_square() {
            return Err(ExactError::NotSquare);
        }
        let n = self.rows;
        let mut coeffs = vec![F::zero(); n + 1];
        coeffs[n] = F::one();
        let mut m = Matrix::<F>::zero(n, n);
        let mut c = F::one();
        for k in 1..=n {
            // M_k = A * (M_{k-1} + c_{n-k+1} I)
            let mut shifted = m.clone();
            for i in 0..n {
                shifted.set(i, i, shifted.at(i, i).add(&c));
            }
            m = self.mul(&shifted);
            c = m.trace().mul(&F::from_rat(&crate::scalar::rat(-1, k as i64)));
            coeffs[n - k] = c.clone();
        }
        Ok(UniPoly::from_coeffs(coeffs))
    }

    /// Evaluate a polynomial at this matrix (Horner).
    pub fn eval_poly(&self, p: &UniPoly<F>) -> Self {
        assert!(self.is_square());
        let n = self.rows;
        let mut acc = Matrix::zero(n, n);
        for c in p.coeffs().iter().rev() {
            acc = acc.mul(self);
            for i in 0..n {
                acc.set(i, i, acc.at(i, i).add(c));
            }
        }
        acc
    }

    /// Minimal polynomial, computed from the squarefree decomposition of the
    /// characteristic polynomial by testing annihilation of factor products.
    pub fn min_poly(&self) -> Result<UniPoly<F>, ExactError> {
        let chi = self.char_poly()?;
        let parts = chi.squarefree_decomposition();
        // Exponent e_i for factor f_i starts at its char-poly multiplicity i
        // and is lowered while the full product still annihilates the matrix.
        let mut exps: Vec<usize> = (1..=parts.len()).collect();
        let product = |exps: &[usize]| -> UniPoly<F> {
            let mut acc = UniPoly::one();
            for (f, &e) in parts.iter().zip(exps) {
                for _ in 0..e {
                    acc = acc.mul(f);
                }
            }
            acc
        };
        for i in 0..parts.len() {
            if parts[i].degree() == Some(0) {
                exps[i] = 0;
                continue;
            }
            while exps[i] > 1 {
                let mut trial = exps.clone();
                trial[i] -= 1;
                if self.eval_poly(&product(&trial)).is_zero() {
                    exps[i] -= 1;
                } else {
                    break;
                }
            }
            if exps[i] == 1 {
                let mut trial = exps.clone();
                trial[i] = 0;
                if self.eval_poly(&product(&trial)).is_zero() {
                    exps[i] = 0;
                }
            }
        }
        let m = product(&exps);
        debug_assert!(self.eval_poly(&m).is_zero());
        Ok(m)
    }

    pub fn pow(&self, mut e: usize) -> Self {
        assert!(self.is_square());
        let mut acc = Self::identity(self.rows);
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
}

impl Matrix<Rat> {
    /// True if every entry is a rational integer.
    pub fn is_integer(&self) -> bool {
        self.data.iter().all(crate::scalar::rat_is_integer)
    }
}

/// Characteristic polynomial coefficients of a matrix of symbolic rational
/// functions, low degree first (the leading 1 included). Faddeev-LeVerrier
/// divides only by integers, so no symbolic denominator can vanish during
/// the elimination; the operation is total on square inputs.
pub fn symbolic_char_coeffs(
    m: &Matrix<crate::ratfunc::RatFunc<Rat>>,
) -> Result<Vec<crate::ratfunc::RatFunc<Rat>>, ExactError> {
    Ok(m.char_poly()?.coeffs().to_vec())
}

/// Prepared solver for repeated systems A x = b with the same A: one
/// elimination up front, then each solve is a matrix-vector product plus a
/// consistency check.
#[derive(Clone)]
pub struct LinearSolver<F: Field> {
    cols: usize,
    /// Row-operation matrix carrying A to its reduced echelon form.
    e: Matrix<F>,
    pivots: Vec<usize>,
}

impl<F: Field> LinearSolver<F> {
    pub fn new(a: &Matrix<F>) -> Self {
        let rows = a.rows();
        let aug = a.hstack(&Matrix::identity(rows));
        let res = aug.rref();
        let pivots: Vec<usize> = res.pivots.iter().copied().filter(|&c| c < a.cols()).collect();
        let e = Matrix::from_fn(rows, rows, |i, j| res.rref.at(i, a.cols() + j).clone());
        LinearSolver { cols: a.cols(), e, pivots }
    }

    pub fn rank(&self) -> usize {
        self.pivots.len()
    }

    /// One solution of A x = b (free variables zero), or None if
    /// inconsistent. In reduced echelon form row i pins its pivot variable
    /// directly once the free variables are zeroed.
    pub fn solve(&self, b: &[F]) -> Option<Vec<F>> {
        let w = self.e.mul_vec(b);
        if w.iter().skip(self.pivots.len()).any(|wi| !wi.is_zero()) {
            return None;
        }
        let mut x = vec![F::zero(); self.cols];
        for (i, &pc) in self.pivots.iter().enumerate() {
            x[pc] = w[i].clone();
        }
        Some(x)
    }
}

/// Gauss-Jordan over a general field.
fn rref_gauss<F: Field>(m: &Matrix<F>) -> RrefResult<F> {
    let (rows, cols) = (m.rows(), m.cols());
    let mut a = m.clone();
    let mut pivots = Vec::new();
    let mut prow = 0usize;
    for col in 0..cols {
        if prow >= rows {
            break;
        }
        let pivot = (prow..rows).find(|&r| !a.at(r, col).is_zero());
        let pr = match pivot {
            None => continue,
            Some(pr) => pr,
        };
        if pr != prow {
            for c in 0..cols {
                let x = a.at(pr, c).clone();
                let y = a.at(prow, c).clone();
                a.set(pr, c, y);
                a.set(prow, c, x);
            }
        }
        let pinv = a.at(prow, col).inv().unwrap();
        for c in col..cols {
            let v = a.at(prow, c).mul(&pinv);
            a.set(prow, c, v);
        }
        for r in 0..rows {
            if r == prow || a.at(r, col).is_zero() {
                continue;
            }
            let factor = a.at(r, col).clone();
            for c in col..cols {
                let v = a.at(r, c).sub(&factor.mul(a.at(prow, c)));
                a.set(r, c, v);
            }
        }
        pivots.push(col);
        prow += 1;
    }
    let rank = pivots.len();
    RrefResult { rref: a, pivots, rank }
}

/// Fraction-free Bareiss elimination on an integer-scaled copy, followed by
/// back-substitution to the reduced form.
fn rref_bareiss(m: &Matrix<Rat>) -> RrefResult<Rat> {
    let (rows, cols) = (m.rows(), m.cols());
    if rows == 0 || cols == 0 {
        return RrefResult { rref: m.clone(), pivots: vec![], rank: 0 };
    }
    // Scale each row to integers.
    let mut a: Vec<Vec<BigInt>> = (0..rows)
        .map(|r| {
            let mut lcm = BigInt::one();
            for c in 0..cols {
                lcm = lcm.lcm(m.at(r, c).denom());
            }
            (0..cols).map(|c| (m.at(r, c) * Rat::from_integer(lcm.clone())).to_integer()).collect()
        })
        .collect();

    let mut pivots = Vec::new();
    let mut prev = BigInt::one();
    let mut prow = 0usize;
    for col in 0..cols {
        if prow >= rows {
            break;
        }
        let pivot = (prow..rows).find(|&r| !a[r][col].is_zero());
        let pr = match pivot {
            None => continue,
            Some(pr) => pr,
        };
        a.swap(pr, prow);
        for r in prow + 1..rows {
            for c in col + 1..cols {
                let v = (&a[prow][col] * &a[r][c] - &a[r][col] * &a[prow][c]) / &prev;
                a[r][c] = v;
            }
            a[r][col] = BigInt::zero();
        }
        prev = a[prow][col].clone();
        pivots.push(col);
        prow += 1;
    }

    // Back-substitution over the rationals.
    let mut out = Matrix::<Rat>::zero(rows, cols);
    for (r, row) in a.iter().enumerate() {
        for (c, v) in row.iter().enumerate() {
            out.set(r, c, Rat::from_integer(v.clone()));
        }
    }
    for (pr, &pc) in pivots.iter().enumerate().rev() {
        let pinv = out.at(pr, pc).clone();
        for c in pc..cols {
            let v = out.at(pr, c) / &pinv;
            out.set(pr, c, v);
        }
        for r in 0..pr {
            let factor = out.at(r, pc).clone();
            if num_traits::Zero::is_zero(&factor) {
                continue;
            }
            for c in pc..cols {
                let v = out.at(r, c) - &factor * out.at(pr, c);
                out.set(r, c, v);
            }
        }
    }
    let rank = pivots.len();
    RrefResult { rref: out, pivots, rank }
}

impl<F: Field> std::fmt::Debug for Matrix<F> {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        writeln!(f, "[")?;
        for r in 0..self.rows {
            write!(f, "  [")?;
            for c in 0..self.cols {
                if c > 0 {
                    write!(f, ", ")?;
                }
                write!(f, "{}", self.at(r, c))?;
            }
            writeln!(f, "]")?;
        }
        write!(f, "]")
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::{rat, rat_int};

    fn m(rows: &[&[i64]]) -> Matrix<Rat> {
        Matrix::from_i64_rows(rows)
    }

    #[test]
    fn rref_identity_and_zero() {
        let id = Matrix::<Rat>::identity(3);
        let r = id.rref();
        assert_eq!(r.rank, 3);
        assert_eq!(r.pivots, vec![0, 1, 2]);
        assert!(id.kernel_basis().is_empty());

        let z = Matrix::<Rat>::zero(2, 5);
        let r = z.rref();
        assert_eq!(r.rank, 0);
        assert_eq!(z.kernel_basis().len(), 5);
    }

    #[test]
    fn rref_rotation_generator() {
        let rot = m(&[&[0, -1], &[1, 0]]);
        assert_eq!(rot.rank(), 2);
        assert_eq!(rot.det(), rat_int(1));
    }

    #[test]
    fn rank_nullity() {
        let a = m(&[&[1, 2, 3], &[2, 4, 6], &[0, 1, 1]]);
        let r = a.rref();
        assert_eq!(r.rank + a.kernel_basis().len(), a.cols());
        for v in a.kernel_basis() {
            assert!(a.mul_vec(&v).iter().all(|x| Field::is_zero(x)));
        }
    }

    #[test]
    fn char_poly_examples() {
        // identity 3x3 -> (x-1)^3
        let chi = Matrix::<Rat>::identity(3).char_poly().unwrap();
        let xm1 = UniPoly::from_i64(&[-1, 1]);
        assert_eq!(chi, xm1.mul(&xm1).mul(&xm1));
        // diag(2,3) -> x^2 - 5x + 6
        let chi = m(&[&[2, 0], &[0, 3]]).char_poly().unwrap();
        assert_eq!(chi, UniPoly::from_i64(&[6, -5, 1]));
    }

    #[test]
    fn companion_char_poly_matches_oracle() {
        // Companion of x^3 - 5x^2 + 6x - 1, multiplication-by-x form.
        // Oracle: cofactor expansion of det(xI - C) done with UniPoly arithmetic.
        let c = m(&[&[0, 0, 1], &[1, 0, -6], &[0, 1, 5]]);
        let chi = c.char_poly().unwrap();
        let oracle = det3_poly(&c);
        assert_eq!(chi, oracle);
        assert_eq!(chi, UniPoly::from_i64(&[-1, 6, -5, 1]));
    }

    /// 3x3 det(xI - A) by explicit cofactor expansion.
    fn det3_poly(a: &Matrix<Rat>) -> UniPoly<Rat> {
        let e = |r: usize, c: usize| -> UniPoly<Rat> {
            let diag = if r == c { UniPoly::x() } else { UniPoly::zero() };
            diag.sub(&UniPoly::constant(a.at(r, c).clone()))
        };
        let term = |c0: usize, c1: usize, c2: usize| e(0, c0).mul(&e(1, c1)).mul(&e(2, c2));
        term(0, 1, 2)
            .sub(&term(0, 2, 1))
            .add(&term(1, 2, 0))
            .sub(&term(1, 0, 2))
            .add(&term(2, 0, 1))
            .sub(&term(2, 1, 0))
    }

    #[test]
    fn min_poly_divides_char_poly() {
        // Jordan block J_2(1) ⊕ 1: char (x-1)^3, min (x-1)^2
        let a = m(&[&[1, 1, 0], &[0, 1, 0], &[0, 0, 1]]);
        let min = a.min_poly().unwrap();
        assert_eq!(min, UniPoly::from_i64(&[1, -2, 1]));
        let chi = a.char_poly().unwrap();
        assert!(chi.rem(&min).is_zero());
        assert!(a.eval_poly(&min).is_zero());
    }

    #[test]
    fn solve_and_inverse() {
        let a = m(&[&[2, 1], &[1, 1]]);
        let x = a.solve(&[rat_int(3), rat_int(2)]).unwrap();
        assert_eq!(x, vec![rat_int(1), rat_int(1)]);
        let inv = a.inverse().unwrap();
        assert_eq!(a.mul(&inv), Matrix::identity(2));
        assert_eq!(inv.at(0, 0), &rat(1, 1));
    }
}
