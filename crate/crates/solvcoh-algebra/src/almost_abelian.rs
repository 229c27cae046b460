//! Almost abelian structure: g = R x_A R^n with abelian codimension-one
//! ideal. Jordan-Chevalley decomposition of the derivation, extraction of
//! the compact part, the modification g -> g~, the Mostow condition at
//! rational multiples of pi, connectedness of the algebraic closure, and
//! exact monodromy matrices.

use std::collections::BTreeMap;

use solvcoh_exact::factor::{split_linear_quadratic, SplitFactor};
use solvcoh_exact::numfield::{CyclotomicAngles, NumberFieldElement};
use solvcoh_exact::scalar::{rat_int, rat_is_integer, rat_sqrt, Field, Rat};
use solvcoh_exact::unipoly::UniPoly;
use solvcoh_exact::{Matrix, MultiPoly, RatFunc};

use crate::lie::LieAlgebra;
use crate::AlgebraError;

/// A rotation frequency of the compact part: the eigenvalue pair a +- b i
/// with b > 0. `b` is rational for every catalog algebra; a frequency may
/// be declared irrational (a named symbol) for Mostow tests.
#[derive(Clone, Debug, PartialEq)]
pub enum Frequency {
    Rational { real: Rat, b: Rat },
    /// Known-irrational frequency sqrt(b2) or a declared symbol.
    Irrational { real: Rat, b2: Rat, name: String },
}

impl Frequency {
    pub fn real(&self) -> &Rat {
        match self {
            Frequency::Rational { real, .. } => real,
            Frequency::Irrational { real, .. } => real,
        }
    }

    pub fn b_squared(&self) -> Rat {
        match self {
            Frequency::Rational { b, .. } => b * b,
            Frequency::Irrational { b2, .. } => b2.clone(),
        }
    }
}

#[derive(Clone)]
pub struct AlmostAbelianPresentation {
    pub algebra: LieAlgebra,
    /// 0-based indices of the abelian ideal basis, increasing.
    pub fiber: Vec<usize>,
    /// 0-based index of the complementary derivation direction X_{n+1}.
    pub derivation: usize,
    /// A with A e_j = [X_{fiber[j]}, X_{derivation}] in fiber coordinates.
    pub a_matrix: Matrix<Rat>,
    pub semisimple: Matrix<Rat>,
    pub nilpotent: Matrix<Rat>,
    /// Full compact part of S: A - compact has only real eigenvalues.
    pub compact: Matrix<Rat>,
    /// The part of the compact generator the modification removes: rotation
    /// blocks with rational frequency close up into finite cyclic groups and
    /// are killed; a declared-irrational frequency has dense (connected)
    /// closure and survives in g~.
    pub killed_compact: Matrix<Rat>,
    pub frequencies: Vec<Frequency>,
}

impl AlmostAbelianPresentation {
    /// Detect a codimension-one abelian ideal spanned by basis vectors and
    /// build the presentation.
    pub fn from_algebra(g: &LieAlgebra) -> Result<Self, AlgebraError> {
        let n = g.dim();
        'cand: for der in 0..n {
            let fiber: Vec<usize> = (0..n).filter(|&i| i != der).collect();
            // fiber must be abelian,
            for (a, &i) in fiber.iter().enumerate() {
                for &j in fiber.iter().skip(a + 1) {
                    if g.bracket_basis(i, j).iter().any(|c| !num_traits::Zero::is_zero(c)) {
                        continue 'cand;
                    }
                }
            }
            // and an ideal: [X_i, X_der] in span(fiber).
            for &i in &fiber {
                let br = g.bracket_basis(i, der);
                if !num_traits::Zero::is_zero(&br[der]) {
                    continue 'cand;
                }
            }
            let a_matrix = Matrix::from_fn(n - 1, n - 1, |r, c| {
                g.bracket_basis(fiber[c], der)[fiber[r]].clone()
            });
            return Self::from_matrix_with_embedding(g.clone(), fiber, der, a_matrix);
        }
        Err(AlgebraError::NotAlmostAbelian)
    }

    /// Presentation directly from the action matrix (fiber = 0..n-1,
    /// derivation = n).
    pub fn from_action_matrix(a: Matrix<Rat>) -> Result<Self, AlgebraError> {
        assert!(a.is_square());
        let n = a.rows() + 1;
        let mut brackets = Vec::new();
        for j in 0..n - 1 {
            let coeffs: Vec<(usize, Rat)> = (0..n - 1)
                .map(|k| (k, a.at(k, j).clone()))
                .filter(|(_, c)| !num_traits::Zero::is_zero(c))
                .collect();
            if !coeffs.is_empty() {
                brackets.push(((j, n - 1), coeffs));
            }
        }
        let g = LieAlgebra::new(n, brackets)?;
        let fiber = (0..n - 1).collect();
        Self::from_matrix_with_embedding(g, fiber, n - 1, a)
    }

    fn from_matrix_with_embedding(
        algebra: LieAlgebra,
        fiber: Vec<usize>,
        derivation: usize,
        a_matrix: Matrix<Rat>,
    ) -> Result<Self, AlgebraError> {
        let (semisimple, nilpotent) = jordan_chevalley(&a_matrix)?;
        let (compact, frequencies) = compact_part(&semisimple)?;
        let killed_compact = compact.clone();
        Ok(AlmostAbelianPresentation {
            algebra,
            fiber,
            derivation,
            a_matrix,
            semisimple,
            nilpotent,
            compact,
            killed_compact,
            frequencies,
        })
    }

    pub fn fiber_dim(&self) -> usize {
        self.fiber.len()
    }

    /// Mark the frequency block (real part, b^2) as a declared irrational
    /// symbol: it then survives the modification and blocks monodromy
    /// representability.
    pub fn declare_irrational_frequency(mut self, real: &Rat, b2: &Rat, name: &str) -> Self {
        for f in self.frequencies.iter_mut() {
            if let Frequency::Rational { real: fr, b } = f {
                if fr == real && &(&*b * &*b) == b2 {
                    *f = Frequency::Irrational {
                        real: fr.clone(),
                        b2: b2.clone(),
                        name: name.to_string(),
                    };
                }
            }
        }
        self.killed_compact = killed_compact_matrix(&self.semisimple, &self.frequencies)
            .expect("killed compact recomputation");
        self
    }

    /// The modified algebra g~ = R x_{A-C} R^n in the original basis and
    /// indexing (C the killed compact part). The catalog records where each
    /// member lands under this deformation.
    pub fn modify(&self) -> LieAlgebra {
        let modified = self.a_matrix.sub(&self.killed_compact);
        let n = self.algebra.dim();
        let mut brackets = Vec::new();
        for (j, &fj) in self.fiber.iter().enumerate() {
            let coeffs: Vec<(usize, Rat)> = (0..self.fiber_dim())
                .map(|k| (self.fiber[k], modified.at(k, j).clone()))
                .filter(|(_, c)| !num_traits::Zero::is_zero(c))
                .collect();
            if !coeffs.is_empty() {
                let (lo, hi, flip) = if fj < self.derivation {
                    (fj, self.derivation, false)
                } else {
                    (self.derivation, fj, true)
                };
                let coeffs = if flip {
                    coeffs.into_iter().map(|(k, c)| (k, -c)).collect()
                } else {
                    coeffs
                };
                brackets.push(((lo, hi), coeffs));
            }
        }
        LieAlgebra::new(n, brackets)
            .expect("modified action defines a Lie algebra")
            .with_params(self.algebra.params().clone())
    }

    /// Gorbatsevich's criterion at t = q pi: the Mostow condition holds iff
    /// pi*i is NOT a rational combination of the eigenvalues of t*A.
    ///
    /// Reduced: representable iff q != 0 and some rotation frequency is a
    /// nonzero rational (declared-irrational frequencies cannot combine to
    /// a rational multiple of i, and real eigenvalues contribute nothing).
    pub fn mostow_test(&self, q: &Rat) -> bool {
        if num_traits::Zero::is_zero(q) {
            return true;
        }
        let representable = self.frequencies.iter().any(|f| match f {
            Frequency::Rational { b, .. } => !num_traits::Zero::is_zero(b),
            Frequency::Irrational { .. } => false,
        });
        !representable
    }

    /// Connectedness of the algebraic closure of Ad(Gamma_{q pi}): every
    /// rational rotation block must close up (q*b in 2Z); dense irrational
    /// rotations are connected already.
    pub fn closure_connected(&self, q: &Rat) -> bool {
        self.frequencies.iter().all(|f| match f {
            Frequency::Rational { b, .. } => {
                let qb = q * b;
                rat_is_integer(&(&qb * &Rat::new(1.into(), 2.into())))
            }
            Frequency::Irrational { .. } => true,
        })
    }

    /// Exact monodromy exp(q pi A) over a cyclotomic field, requiring the
    /// non-rotational part to be trivial up to surrogates: nilpotent part
    /// zero, and every nonzero real eigenvalue covered by a surrogate value
    /// for e^{q pi lambda}.
    pub fn monodromy(
        &self,
        q: &Rat,
        surrogates: &Surrogates,
    ) -> Result<Matrix<NumberFieldElement>, AlgebraError> {
        let real_part = self.exp_real_part(q, surrogates)?;
        let compact_part = self.exp_compact(q)?;
        if !self.nilpotent.is_zero() {
            return Err(AlgebraError::TranscendentalEntry {
                eigenvalue: "nilpotent block (polynomial in pi)".into(),
            });
        }
        Ok(real_part.mul(&compact_part))
    }

    /// exp(q pi (S - C)) via Lagrange interpolation over the rational
    /// eigenvalues; 0 maps to 1, nonzero eigenvalues need surrogates.
    fn exp_real_part(
        &self,
        q: &Rat,
        surrogates: &Surrogates,
    ) -> Result<Matrix<NumberFieldElement>, AlgebraError> {
        let s_real = self.semisimple.sub(&self.compact);
        let minpoly = s_real.min_poly()?;
        let factors = split_linear_quadratic(&minpoly)?;
        let mut eigs = Vec::new();
        for f in &factors {
            match f {
                SplitFactor::Linear { root } => eigs.push(root.clone()),
                SplitFactor::Quadratic { .. } => {
                    return Err(AlgebraError::UnsupportedFactor { degree: 2 })
                }
            }
        }
        // values e^{q pi lambda}
        let mut values = Vec::new();
        for lam in &eigs {
            if num_traits::Zero::is_zero(lam) {
                values.push(NumberFieldElement::one());
            } else {
                match surrogates.get(lam) {
                    Some(v) => values.push(v.clone()),
                    None => {
                        return Err(AlgebraError::TranscendentalEntry {
                            eigenvalue: format!("{lam}"),
                        })
                    }
                }
            }
        }
        let _ = q; // the surrogate is for e^{q pi lambda} at this q by contract
        // interpolation polynomial P with P(lambda_i) = value_i
        let m = s_real.map(|x| NumberFieldElement::from_rat(x));
        Ok(matrix_function(&m, &eigs, &values))
    }

    /// exp(q pi C) of the full compact part over Q(zeta_N): on each rotation
    /// block the angle is q b pi, i.e. (q b / 2) full turns. Errors when an
    /// irrational frequency is present (its exponential has no exact value).
    pub fn exp_compact(&self, q: &Rat) -> Result<Matrix<NumberFieldElement>, AlgebraError> {
        if self.frequencies.iter().any(|f| matches!(f, Frequency::Irrational { .. })) {
            return Err(AlgebraError::IrrationalFrequency);
        }
        self.exp_rotation(q, &self.compact)
    }

    /// exp(q pi C_killed): the deck rotation of the covering, which involves
    /// only the rational-frequency blocks.
    pub fn exp_compact_killed(&self, q: &Rat) -> Result<Matrix<NumberFieldElement>, AlgebraError> {
        self.exp_rotation(q, &self.killed_compact)
    }

    fn exp_rotation(
        &self,
        q: &Rat,
        compact: &Matrix<Rat>,
    ) -> Result<Matrix<NumberFieldElement>, AlgebraError> {
        let mut b2s: Vec<(Rat, Rat)> = Vec::new(); // (b, b^2), distinct
        for f in &self.frequencies {
            if let Frequency::Rational { b, .. } = f {
                if !b2s.iter().any(|(bb, _)| bb == b) {
                    b2s.push((b.clone(), b * b));
                }
            }
        }
        if b2s.is_empty() {
            return Ok(Matrix::from_fn(self.fiber_dim(), self.fiber_dim(), |r, c| {
                if r == c {
                    NumberFieldElement::one()
                } else {
                    NumberFieldElement::zero()
                }
            }));
        }
        // Field order: angles (q b / 2) turns; need denominators and 4.
        let mut denom_lcm: i64 = 4;
        let mut turns = Vec::new();
        for (b, _) in &b2s {
            let t = q * b * Rat::new(1.into(), 2.into());
            let (tn, td) = rat_to_i64_pair(&t)?;
            denom_lcm = num_integer::lcm(denom_lcm, td);
            turns.push((tn, td));
        }
        let ang = CyclotomicAngles::new(denom_lcm as u32);
        // Hermite data: P(0) = 1 (if C singular), P(+- i b) = cos(qb pi) +- i sin(qb pi).
        // Build P by CRT on the min poly factors of C: x (if present) and x^2 + b^2.
        let minpoly = compact.min_poly()?;
        let mut moduli: Vec<UniPoly<NumberFieldElement>> = Vec::new();
        let mut residues: Vec<UniPoly<NumberFieldElement>> = Vec::new();
        let zero_eig = {
            let x = UniPoly::<Rat>::x();
            minpoly.rem(&x).is_zero()
        };
        if zero_eig {
            moduli.push(UniPoly::x());
            residues.push(UniPoly::one());
        }
        for ((b, b2), (tn, td)) in b2s.iter().zip(&turns) {
            // only the frequencies actually present in C's min poly
            let quad = UniPoly::from_coeffs(vec![b2.clone(), rat_int(0), rat_int(1)]);
            if !minpoly.rem(&quad).is_zero() {
                continue;
            }
            let cos = ang.cos_turn(*tn, *td);
            let sin = ang.sin_turn(*tn, *td);
            // P = cos + (sin/b) x on this component: at x = i b gives cos + i sin.
            let lin = sin.mul(&NumberFieldElement::from_rat(&b.recip()));
            moduli.push(quad.map(|c| NumberFieldElement::from_rat(c)));
            residues.push(UniPoly::from_coeffs(vec![cos, lin]));
        }
        let p = crt_polynomial(&moduli, &residues);
        let c_nf = compact.map(|x| NumberFieldElement::from_rat(x));
        Ok(c_nf.eval_poly(&p))
    }

    /// Monodromy with symbolic pi entries: requires the real semisimple
    /// part to vanish and the compact rotation at this angle to be a
    /// rational matrix; the nilpotent part contributes polynomials in pi
    /// (variable 0 of the rational-function field).
    pub fn monodromy_symbolic(&self, q: &Rat) -> Result<Matrix<RatFunc<Rat>>, AlgebraError> {
        let s_real = self.semisimple.sub(&self.compact);
        if !s_real.is_zero() {
            return Err(AlgebraError::TranscendentalEntry {
                eigenvalue: "nonzero real semisimple part".into(),
            });
        }
        let rot = self.exp_compact(q)?;
        let rot_rat = rot.try_to_rat().ok_or(AlgebraError::TranscendentalEntry {
            eigenvalue: "irrational rotation entries mixed with pi terms".into(),
        })?;
        // exp(q pi N) = sum (q pi)^k N^k / k!
        let n = self.fiber_dim();
        let pi = MultiPoly::<Rat>::var(0, 1);
        let mut acc = Matrix::<RatFunc<Rat>>::zero(n, n);
        let mut nk = Matrix::<Rat>::identity(n);
        let mut k = 0usize;
        let mut factorial = rat_int(1);
        let mut qk = rat_int(1);
        loop {
            let scale = &qk / &factorial;
            let pik = RatFunc::from_poly(pi.pow(k as u32));
            for r in 0..n {
                for c in 0..n {
                    let coef = nk.at(r, c) * &scale;
                    if !num_traits::Zero::is_zero(&coef) {
                        let term = pik.mul(&RatFunc::constant(1, Rat::from(coef)));
                        acc.set(r, c, acc.at(r, c).add(&term));
                    }
                }
            }
            nk = nk.mul(&self.nilpotent);
            if nk.is_zero() {
                break;
            }
            k += 1;
            factorial = &factorial * &rat_int(k as i64);
            qk = &qk * q;
        }
        let rot_rf = rot_rat.map(|x| RatFunc::constant(1, x.clone()));
        Ok(rot_rf.mul(&acc))
    }
}

/// Surrogate values for transcendental exponentials e^{q pi lambda},
/// keyed by the rational eigenvalue lambda.
#[derive(Clone, Default)]
pub struct Surrogates {
    map: Vec<(Rat, NumberFieldElement)>,
}

impl Surrogates {
    pub fn none() -> Self {
        Surrogates { map: vec![] }
    }

    pub fn with(mut self, eigenvalue: Rat, value: NumberFieldElement) -> Self {
        self.map.push((eigenvalue, value));
        self
    }

    pub fn get(&self, eigenvalue: &Rat) -> Option<&NumberFieldElement> {
        self.map.iter().find(|(k, _)| k == eigenvalue).map(|(_, v)| v)
    }

    /// Positivity check under the real embedding, when available.
    pub fn all_positive(&self) -> bool {
        self.map.iter().all(|(_, v)| v.sign() > 0)
    }
}

/// Additive Jordan-Chevalley decomposition A = S + N with S semisimple,
/// N nilpotent, [S, N] = 0, both polynomials in A. Newton iteration against
/// the squarefree part of the characteristic polynomial, performed in
/// Q[x]/(min poly).
pub fn jordan_chevalley(a: &Matrix<Rat>) -> Result<(Matrix<Rat>, Matrix<Rat>), AlgebraError> {
    if !a.is_square() {
        return Err(AlgebraError::Exact(solvcoh_exact::ExactError::NotSquare));
    }
    let minpoly = a.min_poly()?;
    let radical = minpoly.squarefree_part();
    // Newton: s <- s - radical(s) / radical'(s) (mod minpoly)
    let mut s = UniPoly::<Rat>::x();
    let mut iterations = 0;
    loop {
        let val = radical.compose(&s).rem(&minpoly);
        if val.is_zero() {
            break;
        }
        iterations += 1;
        assert!(iterations <= 24, "Newton iteration failed to converge");
        let deriv = radical.derivative().compose(&s).rem(&minpoly);
        let (g, u, _) = deriv.extended_gcd(&minpoly);
        assert_eq!(g.degree(), Some(0), "derivative not invertible mod minimal polynomial");
        let uinv = u.mul_scalar(&g.coeff(0).recip());
        s = s.sub(&val.mul(&uinv).rem(&minpoly)).rem(&minpoly);
    }
    let s_mat = a.eval_poly(&s);
    let n_mat = a.sub(&s_mat);
    debug_assert!(s_mat.mul(&n_mat).sub(&n_mat.mul(&s_mat)).is_zero());
    debug_assert!(n_mat.pow(a.rows().max(1)).is_zero());
    Ok((s_mat, n_mat))
}

/// Compact part C of a semisimple rational matrix S: on the primary
/// component of a complex-pair factor x^2 - 2 a x + (a^2 + b^2) the value is
/// S - a I (eigenvalues +- b i); on components with real eigenvalues it is
/// zero. Requires the minimal polynomial to split into linear and quadratic
/// irreducible factors.
pub fn compact_part(s: &Matrix<Rat>) -> Result<(Matrix<Rat>, Vec<Frequency>), AlgebraError> {
    let minpoly = s.min_poly()?;
    let factors = match split_linear_quadratic(&minpoly) {
        Ok(f) => f,
        Err(solvcoh_exact::ExactError::UnsupportedFactor { degree }) => {
            return Err(AlgebraError::UnsupportedFactor { degree })
        }
        Err(e) => return Err(AlgebraError::Exact(e)),
    };
    // CRT: h = (x - a) on complex-pair components, 0 elsewhere.
    let mut moduli = Vec::new();
    let mut residues = Vec::new();
    let mut freqs = Vec::new();
    for f in &factors {
        moduli.push(f.poly());
        match f.complex_pair() {
            Some((a, b2)) => {
                residues.push(UniPoly::from_coeffs(vec![-a.clone(), rat_int(1)]));
                match rat_sqrt(&b2) {
                    Some(b) => freqs.push(Frequency::Rational { real: a, b }),
                    None => freqs.push(Frequency::Irrational {
                        real: a,
                        name: format!("sqrt({b2})"),
                        b2,
                    }),
                }
            }
            None => residues.push(UniPoly::zero()),
        }
    }
    let h = crt_polynomial_rat(&moduli, &residues);
    let c = s.eval_poly(&h);
    Ok((c, freqs))
}

/// The killed part of the compact generator: rotation components whose
/// frequency is still marked rational (declared-irrational blocks survive).
fn killed_compact_matrix(
    s: &Matrix<Rat>,
    frequencies: &[Frequency],
) -> Result<Matrix<Rat>, AlgebraError> {
    let minpoly = s.min_poly()?;
    let factors = split_linear_quadratic(&minpoly).map_err(AlgebraError::Exact)?;
    let mut moduli = Vec::new();
    let mut residues = Vec::new();
    for f in &factors {
        moduli.push(f.poly());
        match f.complex_pair() {
            Some((a, b2)) => {
                let keep_rational = frequencies.iter().any(|fr| {
                    matches!(fr, Frequency::Rational { .. })
                        && fr.real() == &a
                        && fr.b_squared() == b2
                });
                if keep_rational {
                    residues.push(UniPoly::from_coeffs(vec![-a.clone(), rat_int(1)]));
                } else {
                    residues.push(UniPoly::zero());
                }
            }
            None => residues.push(UniPoly::zero()),
        }
    }
    let h = crt_polynomial_rat(&moduli, &residues);
    Ok(s.eval_poly(&h))
}

/// CRT over Q[x]: h with h = r_i mod m_i for pairwise coprime monic m_i.
fn crt_polynomial_rat(moduli: &[UniPoly<Rat>], residues: &[UniPoly<Rat>]) -> UniPoly<Rat> {
    crt_impl(moduli, residues)
}

fn crt_polynomial(
    moduli: &[UniPoly<NumberFieldElement>],
    residues: &[UniPoly<NumberFieldElement>],
) -> UniPoly<NumberFieldElement> {
    crt_impl(moduli, residues)
}

fn crt_impl<F: Field>(moduli: &[UniPoly<F>], residues: &[UniPoly<F>]) -> UniPoly<F> {
    let total = moduli.iter().fold(UniPoly::one(), |acc, m| acc.mul(m));
    let mut h = UniPoly::zero();
    for (m, r) in moduli.iter().zip(residues) {
        if r.is_zero() {
            continue;
        }
        let cofactor = total.div_exact(m);
        let (g, u, _) = cofactor.extended_gcd(m);
        assert_eq!(g.degree(), Some(0), "moduli must be pairwise coprime");
        let uinv = u.mul_scalar(&g.coeff(0).inv().unwrap());
        h = h.add(&r.mul(&cofactor).mul(&uinv));
    }
    h.rem(&total)
}

/// f(M) for a semisimple matrix with known distinct rational eigenvalues and
/// prescribed values: Lagrange interpolation evaluated at the matrix.
fn matrix_function(
    m: &Matrix<NumberFieldElement>,
    eigs: &[Rat],
    values: &[NumberFieldElement],
) -> Matrix<NumberFieldElement> {
    // Lagrange basis over the field elements.
    let mut p = UniPoly::<NumberFieldElement>::zero();
    for (i, v) in values.iter().enumerate() {
        let mut basis = UniPoly::constant(v.clone());
        for (j, otherin) in eigs.iter().enumerate() {
            if i == j {
                continue;
            }
            let denom = NumberFieldElement::from_rat(&(&eigs[i] - otherin));
            let lin = UniPoly::from_coeffs(vec![
                NumberFieldElement::from_rat(otherin).neg(),
                NumberFieldElement::one(),
            ]);
            basis = basis.mul(&lin).mul_scalar(&denom.inv().unwrap());
        }
        p = p.add(&basis);
    }
    m.eval_poly(&p)
}

fn rat_to_i64_pair(q: &Rat) -> Result<(i64, i64), AlgebraError> {
    let n: i64 = q.numer().try_into().map_err(|_| AlgebraError::Precondition {
        message: "rotation angle numerator too large".into(),
    })?;
    let d: i64 = q.denom().try_into().map_err(|_| AlgebraError::Precondition {
        message: "rotation angle denominator too large".into(),
    })?;
    Ok((n, d))
}

/// The parameter map recording named parameter values.
pub fn params_of(pairs: &[(&str, Rat)]) -> BTreeMap<String, Rat> {
    pairs.iter().map(|(k, v)| (k.to_string(), v.clone())).collect()
}

/// Monodromy matrices in any of the supported scalar domains.
#[derive(Clone)]
pub enum MonodromyMatrix {
    Rational(Matrix<Rat>),
    NumberField(Matrix<NumberFieldElement>),
    Symbolic(Matrix<RatFunc<Rat>>),
}

impl MonodromyMatrix {
    pub fn size(&self) -> usize {
        match self {
            MonodromyMatrix::Rational(m) => m.rows(),
            MonodromyMatrix::NumberField(m) => m.rows(),
            MonodromyMatrix::Symbolic(m) => m.rows(),
        }
    }

    pub fn from_number_field(m: Matrix<NumberFieldElement>) -> Self {
        match m.try_to_rat() {
            Some(r) => MonodromyMatrix::Rational(r),
            None => MonodromyMatrix::NumberField(m),
        }
    }
}

pub use crate::lattice::{lattice_integrality, LatticeCandidate, LatticeVerdict};

#[cfg(test)]
mod tests {
    use super::*;
    use solvcoh_exact::scalar::rat;

    fn mat(rows: &[&[i64]]) -> Matrix<Rat> {
        Matrix::from_i64_rows(rows)
    }

    #[test]
    fn jc_of_rotation_is_semisimple() {
        let rot = mat(&[&[0, 1], &[-1, 0]]);
        let (s, n) = jordan_chevalley(&rot).unwrap();
        assert_eq!(s, rot);
        assert!(n.is_zero());
    }

    #[test]
    fn jc_of_jordan_block_is_nilpotent() {
        let j = mat(&[&[0, 1, 0], &[0, 0, 1], &[0, 0, 0]]);
        let (s, n) = jordan_chevalley(&j).unwrap();
        assert!(s.is_zero());
        assert_eq!(n, j);
    }

    #[test]
    fn jc_of_shift_plus_rotation() {
        // g_{6.10}^{a=0} action: shift block + rotation block
        let a = mat(&[
            &[0, 1, 0, 0, 0],
            &[0, 0, 1, 0, 0],
            &[0, 0, 0, 0, 0],
            &[0, 0, 0, 0, 1],
            &[0, 0, 0, -1, 0],
        ]);
        let (s, n) = jordan_chevalley(&a).unwrap();
        // S is the rotation block padded with zeros, N the shift block.
        let expect_s = mat(&[
            &[0, 0, 0, 0, 0],
            &[0, 0, 0, 0, 0],
            &[0, 0, 0, 0, 0],
            &[0, 0, 0, 0, 1],
            &[0, 0, 0, -1, 0],
        ]);
        assert_eq!(s, expect_s);
        assert_eq!(n, a.sub(&expect_s));
        // defining properties
        assert_eq!(s.add(&n), a);
        assert!(s.mul(&n).sub(&n.mul(&s)).is_zero());
        assert!(n.pow(5).is_zero());
        let ms = s.min_poly().unwrap();
        assert_eq!(ms.gcd(&ms.derivative()).degree(), Some(0));
    }

    #[test]
    fn compact_part_cases() {
        // pure rotation: C = S
        let rot = mat(&[&[0, 1], &[-1, 0]]);
        let (c, freqs) = compact_part(&rot).unwrap();
        assert_eq!(c, rot);
        assert_eq!(freqs, vec![Frequency::Rational { real: rat_int(0), b: rat_int(1) }]);
        // diagonal real: C = 0
        let d = mat(&[&[1, 0], &[0, 3]]);
        let (c, freqs) = compact_part(&d).unwrap();
        assert!(c.is_zero());
        assert!(freqs.is_empty());
        // shifted rotation [[p,1],[-1,p]]: C = [[0,1],[-1,0]]
        let sr = mat(&[&[2, 1], &[-1, 2]]);
        let (c, _) = compact_part(&sr).unwrap();
        assert_eq!(c, mat(&[&[0, 1], &[-1, 0]]));
        let s_minus_c = sr.sub(&c);
        let chi = s_minus_c.char_poly().unwrap();
        // (x-2)^2: real eigenvalues
        assert_eq!(chi, UniPoly::from_i64(&[4, -4, 1]));
    }

    #[test]
    fn modify_g35_gives_torus() {
        let g =
            LieAlgebra::from_table(6, &[((1, 3), &[(2, -1, 1)]), ((2, 3), &[(1, 1, 1)])]).unwrap();
        let pres = AlmostAbelianPresentation::from_algebra(&g).unwrap();
        assert_eq!(pres.derivation, 2);
        let tilde = pres.modify();
        assert_eq!(tilde, LieAlgebra::abelian(6));
        // idempotent
        let pres2 = AlmostAbelianPresentation::from_algebra(&tilde);
        // abelian algebra: every index works as derivation; modify is identity
        let tilde2 = pres2.unwrap().modify();
        assert_eq!(tilde2, LieAlgebra::abelian(6));
    }

    #[test]
    fn mostow_and_connectedness() {
        let g =
            LieAlgebra::from_table(6, &[((1, 3), &[(2, -1, 1)]), ((2, 3), &[(1, 1, 1)])]).unwrap();
        let pres = AlmostAbelianPresentation::from_algebra(&g).unwrap();
        // frequency 1 rational: Mostow fails at any rational multiple of pi
        assert!(!pres.mostow_test(&rat_int(2)));
        assert!(!pres.mostow_test(&rat(1, 2)));
        // no complex eigenvalues: holds
        let solv = LieAlgebra::from_table(2, &[((1, 2), &[(1, 1, 1)])]).unwrap();
        let pres2 = AlmostAbelianPresentation::from_algebra(&solv).unwrap();
        assert!(pres2.mostow_test(&rat_int(2)));
        // declared irrational frequency: representable via the rational block only
        let both = AlmostAbelianPresentation::from_action_matrix(mat(&[
            &[0, 1, 0, 0],
            &[-1, 0, 0, 0],
            &[0, 0, 0, 2],
            &[0, 0, -2, 0],
        ]))
        .unwrap()
        .declare_irrational_frequency(&rat_int(0), &rat_int(4), "s");
        assert!(!both.mostow_test(&rat_int(2)));
        // connectedness: g35 at 2pi connected, at pi/2 not
        assert!(pres.closure_connected(&rat_int(2)));
        assert!(!pres.closure_connected(&rat(1, 2)));
    }

    #[test]
    fn monodromy_rotation_values() {
        let g =
            LieAlgebra::from_table(6, &[((1, 3), &[(2, -1, 1)]), ((2, 3), &[(1, 1, 1)])]).unwrap();
        let pres = AlmostAbelianPresentation::from_algebra(&g).unwrap();
        // t = pi/2: R(pi/2) + I_4 with R = [[0,1],[-1,0]]
        let m = pres.monodromy(&rat(1, 2), &Surrogates::none()).unwrap();
        let mr = m.try_to_rat().unwrap();
        let expect = Matrix::block_diag(&[
            mat(&[&[0, 1], &[-1, 0]]),
            Matrix::identity(3),
        ]);
        assert_eq!(mr, expect);
        // t = 0: identity
        let m0 = pres.monodromy(&rat_int(0), &Surrogates::none()).unwrap();
        assert_eq!(m0.try_to_rat().unwrap(), Matrix::identity(5));
        // t = 2pi/3: entries in Q(zeta), not rational
        let m3 = pres.monodromy(&rat(2, 3), &Surrogates::none()).unwrap();
        assert!(m3.try_to_rat().is_none());
    }
}
