//! Lattice existence criteria for almost abelian groups: integrality of the
//! characteristic and minimal polynomials of the monodromy (necessary),
//! explicit integer-conjugacy witnesses (sufficient), the integer system
//! governing the weight-one family, and the family-specific symbolic
//! obstructions.

use solvcoh_exact::numfield::NumberFieldElement;
use solvcoh_exact::scalar::{rat_int, rat_is_integer, Field, Rat};
use solvcoh_exact::sturm::{sturm_isolate, Constraint};
use solvcoh_exact::unipoly::UniPoly;
use solvcoh_exact::{Matrix, MultiPoly, RatFunc};

use crate::almost_abelian::MonodromyMatrix;
use crate::AlgebraError;

/// A candidate lattice Gamma_{q pi}: the monodromy matrix plus an optional
/// integer-conjugacy witness (E integer, P over the monodromy's field).
pub struct LatticeCandidate {
    /// q with t = q pi; recorded for reports.
    pub q: Rat,
    pub monodromy: MonodromyMatrix,
    pub witness: Option<Witness>,
}

pub struct Witness {
    /// Integer matrix conjugate to the monodromy.
    pub integer_matrix: Matrix<Rat>,
    pub conjugator: MonodromyMatrix,
}

#[derive(Clone, Debug, PartialEq)]
pub enum LatticeVerdict {
    /// Char or min polynomial has a non-integer coefficient.
    NecessaryFail { reason: String },
    /// Integrality holds but no conjugacy was established.
    NecessaryPass,
    /// Explicit conjugation to an integer matrix verified exactly.
    Verified { method: String },
}

/// Necessary integrality checks plus witness verification / companion
/// construction when the matrix is cyclic.
pub fn lattice_integrality(cand: &LatticeCandidate) -> Result<LatticeVerdict, AlgebraError> {
    let (chi, min) = char_and_min(&cand.monodromy)?;
    if let Some(coeff) = first_non_integer(&chi) {
        return Ok(LatticeVerdict::NecessaryFail {
            reason: format!("characteristic polynomial coefficient {coeff} is not an integer"),
        });
    }
    if let Some(coeff) = first_non_integer(&min) {
        return Ok(LatticeVerdict::NecessaryFail {
            reason: format!("minimal polynomial coefficient {coeff} is not an integer"),
        });
    }
    if let Some(w) = &cand.witness {
        verify_witness(&cand.monodromy, w)?;
        return Ok(LatticeVerdict::Verified { method: "supplied witness".into() });
    }
    // Already integral?
    if let MonodromyMatrix::Rational(m) = &cand.monodromy {
        if m.is_integer() {
            return Ok(LatticeVerdict::Verified { method: "monodromy is an integer matrix".into() });
        }
    }
    // Cyclic case: min = char gives the companion conjugation directly.
    if min == chi {
        if companion_witness(&cand.monodromy, &chi)?.is_some() {
            return Ok(LatticeVerdict::Verified {
                method: "companion form via cyclic vector".into(),
            });
        }
    }
    // Primary decomposition: per irreducible factor, cyclic or scalar (or
    // cyclic-plus-eigenspace) components assemble into a block witness.
    let assembled = match &cand.monodromy {
        MonodromyMatrix::Rational(m) => decomposed_witness(m, &chi, &min),
        MonodromyMatrix::NumberField(m) => decomposed_witness(m, &chi, &min),
        MonodromyMatrix::Symbolic(m) => decomposed_witness(m, &chi, &min),
    };
    if assembled {
        return Ok(LatticeVerdict::Verified {
            method: "blockwise companion/scalar form on the primary components".into(),
        });
    }
    Ok(LatticeVerdict::NecessaryPass)
}

/// Try to conjugate M onto an integer block matrix by primary components:
/// each irreducible factor's component is handled when it is cyclic, scalar,
/// or a single cyclic chain plus eigenvectors. The assembled witness is
/// re-verified exactly before reporting success.
fn decomposed_witness<F: Field>(m: &Matrix<F>, chi: &UniPoly<Rat>, min: &UniPoly<Rat>) -> bool {
    let n = m.rows();
    let sf = chi.squarefree_part();
    let factors = match solvcoh_exact::factor::split_linear_quadratic(&sf) {
        Ok(f) => f,
        Err(_) => return false,
    };
    let mult_of = |f: &UniPoly<Rat>, p: &UniPoly<Rat>| {
        let mut k = 0;
        let mut rest = p.clone();
        loop {
            let (q, r) = rest.div_rem(f);
            if !r.is_zero() {
                break;
            }
            rest = q;
            k += 1;
        }
        k
    };
    let mut p_cols: Vec<Vec<F>> = Vec::new();
    let mut e_blocks: Vec<Matrix<Rat>> = Vec::new();
    for fac in &factors {
        let f = fac.poly();
        let k_char = mult_of(&f, chi);
        let k_min = mult_of(&f, min);
        let f_m = m.eval_poly(&f.map(|c| F::from_rat(c)));
        let component = f_m.pow(k_min).kernel_basis();
        let dim_c = component.len();
        if dim_c != k_char * f.degree().unwrap() {
            return false;
        }
        // restriction of m to the component
        let basis = Matrix::from_rows(component.clone()).transpose(); // columns
        let restrict = |v: &[F]| -> Option<Vec<F>> {
            // coordinates of m*v in the component basis
            let image = m.mul_vec(v);
            basis.solve(&image)
        };
        let mut m_i = Matrix::<F>::zero(dim_c, dim_c);
        for (j, b) in component.iter().enumerate() {
            match restrict(b) {
                None => return false,
                Some(coords) => {
                    for (i, c) in coords.into_iter().enumerate() {
                        m_i.set(i, j, c);
                    }
                }
            }
        }
        let local = component_witness(&m_i, &f, k_char, k_min);
        let (p_i, e_i) = match local {
            None => return false,
            Some(x) => x,
        };
        // lift component columns back to the ambient space
        for c in 0..p_i.cols() {
            let col = p_i.col(c);
            let mut ambient = vec![F::zero(); n];
            for (j, coef) in col.iter().enumerate() {
                for (a, b) in ambient.iter_mut().zip(&component[j]) {
                    *a = a.add(&coef.mul(b));
                }
            }
            p_cols.push(ambient);
        }
        e_blocks.push(e_i);
    }
    if p_cols.len() != n {
        return false;
    }
    let p = Matrix::from_rows(p_cols).transpose();
    let e = Matrix::block_diag(&e_blocks);
    if !e.is_integer() {
        return false;
    }
    let e_f = e.map(|x| F::from_rat(x));
    p.rank() == n && m.mul(&p) == p.mul(&e_f)
}

/// Witness for one primary component: cyclic, scalar, or one cyclic chain
/// plus an eigenspace complement (Jordan type (k, 1, ..., 1) for linear
/// factors). Returns (P, E) in component coordinates.
fn component_witness<F: Field>(
    m_i: &Matrix<F>,
    f: &UniPoly<Rat>,
    _k_char: usize,
    k_min: usize,
) -> Option<(Matrix<F>, Matrix<Rat>)> {
    let dim = m_i.rows();
    let fdeg = f.degree().unwrap();
    let local_min = pow_poly(f, k_min);
    // scalar case: linear factor with k_min = 1
    if fdeg == 1 && k_min == 1 {
        let lambda = -f.coeff(0);
        return Some((Matrix::identity(dim), Matrix::identity(dim).mul_scalar(&lambda)));
    }
    // cyclic case
    if k_min * fdeg == dim {
        let chi_local = local_min;
        if let Some((p, e)) = companion_impl(m_i, &chi_local) {
            return Some((p, e));
        }
        return None;
    }
    // cyclic chain + eigenvectors, linear factors only
    if fdeg == 1 {
        let lambda = -f.coeff(0);
        let lam_f = F::from_rat(&lambda);
        // find a vector whose chain has full length k_min
        let shifted = {
            let mut s = m_i.clone();
            for i in 0..dim {
                s.set(i, i, s.at(i, i).sub(&lam_f));
            }
            s
        };
        let mut chain: Option<Vec<Vec<F>>> = None;
        for cand in 0..dim {
            let mut v = vec![F::zero(); dim];
            v[cand] = F::one();
            // chain v, Mv, ..., M^{k_min-1}v must be independent
            let mut cols = vec![v.clone()];
            for _ in 1..k_min {
                let last = cols.last().unwrap();
                cols.push(m_i.mul_vec(last));
            }
            let rank = Matrix::from_rows(cols.clone()).rank();
            let full_height = {
                // (M - lambda)^{k_min - 1} v != 0
                let mut w = v.clone();
                for _ in 0..k_min - 1 {
                    w = shifted.mul_vec(&w);
                }
                w.iter().any(|c| !c.is_zero())
            };
            if rank == k_min && full_height {
                chain = Some(cols);
                break;
            }
        }
        let chain = chain?;
        // eigenvectors: complement of the chain inside ker(M - lambda)
        let eig = shifted.kernel_basis();
        let mut sweep = crate::cohomology::EchelonSweep::new(dim);
        for c in &chain {
            sweep.absorb(c.clone());
        }
        let mut extras = Vec::new();
        for v in eig {
            if sweep.absorb(v.clone()) {
                extras.push(v);
            }
        }
        if chain.len() + extras.len() != dim {
            return None;
        }
        let mut cols = chain;
        cols.extend(extras);
        let p = Matrix::from_rows(cols).transpose();
        let e = Matrix::block_diag(&[
            companion_matrix(&pow_poly(f, k_min)),
            Matrix::identity(dim - k_min).mul_scalar(&lambda),
        ]);
        return Some((p, e));
    }
    None
}

fn pow_poly(f: &UniPoly<Rat>, k: usize) -> UniPoly<Rat> {
    let mut acc = UniPoly::one();
    for _ in 0..k {
        acc = acc.mul(f);
    }
    acc
}

fn char_and_min(m: &MonodromyMatrix) -> Result<(UniPoly<Rat>, UniPoly<Rat>), AlgebraError> {
    match m {
        MonodromyMatrix::Rational(m) => Ok((m.char_poly()?, m.min_poly()?)),
        MonodromyMatrix::NumberField(m) => {
            let chi = m.char_poly()?;
            let min = m.min_poly()?;
            Ok((to_rat_poly(&chi)?, to_rat_poly(&min)?))
        }
        MonodromyMatrix::Symbolic(m) => {
            let chi = m.char_poly()?;
            let min = m.min_poly()?;
            Ok((sym_to_rat_poly(&chi)?, sym_to_rat_poly(&min)?))
        }
    }
}

fn to_rat_poly(p: &UniPoly<NumberFieldElement>) -> Result<UniPoly<Rat>, AlgebraError> {
    let mut coeffs = Vec::new();
    for c in p.coeffs() {
        coeffs.push(c.to_rat().ok_or_else(|| AlgebraError::Precondition {
            message: format!("polynomial coefficient {c} is irrational"),
        })?);
    }
    Ok(UniPoly::from_coeffs(coeffs))
}

fn sym_to_rat_poly(p: &UniPoly<RatFunc<Rat>>) -> Result<UniPoly<Rat>, AlgebraError> {
    // pi is transcendental: a coefficient is an integer only if it is a
    // constant rational function.
    let mut coeffs = Vec::new();
    for c in p.coeffs() {
        coeffs.push(c.to_rat().ok_or_else(|| AlgebraError::Precondition {
            message: format!("polynomial coefficient {c} involves pi"),
        })?);
    }
    Ok(UniPoly::from_coeffs(coeffs))
}

fn first_non_integer(p: &UniPoly<Rat>) -> Option<Rat> {
    p.coeffs().iter().find(|c| !rat_is_integer(c)).cloned()
}

fn verify_witness(m: &MonodromyMatrix, w: &Witness) -> Result<(), AlgebraError> {
    if !w.integer_matrix.is_integer() {
        return Err(AlgebraError::Precondition { message: "witness E is not integer".into() });
    }
    let ok = match (m, &w.conjugator) {
        (MonodromyMatrix::Rational(m), MonodromyMatrix::Rational(p)) => {
            check_conj(m, p, &w.integer_matrix)
        }
        (MonodromyMatrix::NumberField(m), MonodromyMatrix::NumberField(p)) => {
            let e = w.integer_matrix.map(|x| NumberFieldElement::from_rat(x));
            check_conj(m, p, &e)
        }
        (MonodromyMatrix::Symbolic(m), MonodromyMatrix::Symbolic(p)) => {
            let e = w.integer_matrix.map(|x| RatFunc::constant(1, x.clone()));
            check_conj(m, p, &e)
        }
        (MonodromyMatrix::NumberField(m), MonodromyMatrix::Rational(p)) => {
            let p = p.map(|x| NumberFieldElement::from_rat(x));
            let e = w.integer_matrix.map(|x| NumberFieldElement::from_rat(x));
            check_conj(m, &p, &e)
        }
        _ => {
            return Err(AlgebraError::Precondition {
                message: "witness scalars do not match the monodromy".into(),
            })
        }
    };
    if ok {
        Ok(())
    } else {
        Err(AlgebraError::Precondition { message: "witness fails M P = P E or invertibility".into() })
    }
}

fn check_conj<F: Field>(m: &Matrix<F>, p: &Matrix<F>, e: &Matrix<F>) -> bool {
    p.rank() == p.rows() && m.mul(p) == p.mul(e)
}

/// For a cyclic matrix with integer characteristic polynomial, build
/// P = [u, Mu, ..., M^{n-1}u] and the companion E; returns None if no cyclic
/// vector is found among the deterministic candidates.
pub fn companion_witness(
    m: &MonodromyMatrix,
    chi: &UniPoly<Rat>,
) -> Result<Option<Witness>, AlgebraError> {
    match m {
        MonodromyMatrix::Rational(m) => Ok(companion_impl(m, chi).map(|(p, e)| Witness {
            integer_matrix: e,
            conjugator: MonodromyMatrix::Rational(p),
        })),
        MonodromyMatrix::NumberField(m) => Ok(companion_impl(m, chi).map(|(p, e)| Witness {
            integer_matrix: e,
            conjugator: MonodromyMatrix::NumberField(p),
        })),
        MonodromyMatrix::Symbolic(m) => Ok(companion_impl(m, chi).map(|(p, e)| Witness {
            integer_matrix: e,
            conjugator: MonodromyMatrix::Symbolic(p),
        })),
    }
}

fn companion_impl<F: Field>(m: &Matrix<F>, chi: &UniPoly<Rat>) -> Option<(Matrix<F>, Matrix<Rat>)> {
    let n = m.rows();
    // candidate cyclic vectors: e_i, then sums of prefixes
    let mut candidates: Vec<Vec<F>> = Vec::new();
    for i in 0..n {
        let mut v = vec![F::zero(); n];
        v[i] = F::one();
        candidates.push(v);
    }
    for i in 1..n {
        let mut v = vec![F::zero(); n];
        for item in v.iter_mut().take(i + 1) {
            *item = F::one();
        }
        candidates.push(v);
    }
    for u in candidates {
        let mut cols = vec![u.clone()];
        for _ in 1..n {
            let last = cols.last().unwrap();
            cols.push(m.mul_vec(last));
        }
        let p = Matrix::from_rows(cols).transpose();
        if p.rank() == n {
            let e = companion_matrix(chi);
            return Some((p, e));
        }
    }
    None
}

/// Companion in the shift convention: E e_j = e_{j+1} for j < n, and
/// E e_n = -(c_0 e_1 + ... + c_{n-1} e_n) for monic chi = x^n + ... + c_0.
pub fn companion_matrix(chi: &UniPoly<Rat>) -> Matrix<Rat> {
    let n = chi.degree().unwrap();
    Matrix::from_fn(n, n, |r, c| {
        if c + 1 < n {
            if r == c + 1 {
                rat_int(1)
            } else {
                rat_int(0)
            }
        } else {
            -chi.coeff(r)
        }
    })
}

/// Decide solvability of the integer system governing the 2 pi lattice of
/// the diag(a, b, c) + rotation family:
///   (s^2 + r)/s = h1, (r s + 1)/s = h2, r > 0, 0 < s <= r^2/4,
/// excluding s = 1 and s = r - 1. The elimination of r is performed
/// symbolically (resultant), not hardcoded.
pub fn lattice_system_check(h1: i64, h2: i64) -> LatticeSystemReport {
    let r = MultiPoly::<Rat>::var(0, 2);
    let s = MultiPoly::<Rat>::var(1, 2);
    let c = |n: i64| MultiPoly::<Rat>::constant(2, rat_int(n));
    // s^2 + r - h1 s = 0 and r s + 1 - h2 s = 0
    let eq1 = s.pow(2).add(&r).sub(&c(h1).mul(&s));
    let eq2 = r.mul(&s).add(&c(1)).sub(&c(h2).mul(&s));
    let cubic = eq1.resultant_bivariate(&eq2, 0, 1).monic();
    // r = h1 s - s^2 from eq1
    let rpoly = UniPoly::from_coeffs(vec![rat_int(0), rat_int(h1), rat_int(-1)]);
    let constraints = vec![
        Constraint::positive(rpoly.clone()),
        Constraint::positive(UniPoly::x()),
        // s <= r^2/4  <=>  r^2 - 4 s >= 0
        Constraint::non_negative(rpoly.mul(&rpoly).sub(&UniPoly::monomial(rat_int(4), 1))),
        // s != 1 (would force a = 0), s != r - 1 (would force b or c = 0)
        Constraint::non_zero(UniPoly::from_i64(&[-1, 1])),
        Constraint::non_zero(UniPoly::x().sub(&rpoly).add(&UniPoly::one())),
    ];
    match sturm_isolate(&cubic, &constraints) {
        Ok(iso) => LatticeSystemReport { cubic, satisfiable: iso.satisfiable },
        Err(_) => LatticeSystemReport { cubic, satisfiable: false },
    }
}

#[derive(Clone, Debug)]
pub struct LatticeSystemReport {
    /// The eliminated univariate relation in s (monic).
    pub cubic: UniPoly<Rat>,
    pub satisfiable: bool,
}

/// The symbolic obstruction for the two-rotation diagonal family at full
/// turns (the 6.11-type analysis): monodromy diag(alpha^2, mu, mu, nu, nu)
/// with alpha = 1/(mu nu) and mu, nu positive transcendentals.
///
/// Machine-checks the algebraic identities behind the integrality chain:
///   e3 = alpha,
///   e2 = alpha beta + 1/alpha,
///   e1 = alpha^2 + beta/alpha,  with beta = 1/mu + 1/nu,
/// from which integer coefficients force alpha = 1, i.e. the excluded value
/// a = 0. Returns the verified steps; `holds` is true when every identity
/// checks out, establishing that no parameter choice with a != 0 yields
/// integer coefficients.
pub fn g611_full_turn_obstruction() -> SymbolicObstruction {
    let vars = 2usize; // 0 = mu, 1 = nu
    let mu = RatFunc::<Rat>::var(0, vars);
    let nu = RatFunc::<Rat>::var(1, vars);
    let one = RatFunc::<Rat>::constant(vars, rat_int(1));
    let alpha = one.div(&mu.mul(&nu)).unwrap();
    let beta = one.div(&mu).unwrap().add(&one.div(&nu).unwrap());
    // distinct eigenvalues of the diagonal monodromy
    let alpha2 = alpha.mul(&alpha);
    // elementary symmetric functions of (alpha^2, mu, nu)
    let e1 = alpha2.add(&mu).add(&nu);
    let e2 = alpha2.mul(&mu).add(&alpha2.mul(&nu)).add(&mu.mul(&nu));
    let e3 = alpha2.mul(&mu).mul(&nu);
    let mut steps = Vec::new();
    let id1 = e3 == alpha;
    steps.push(ObstructionStep {
        claim: "e3 = alpha, so integrality of the constant term forces alpha in Z".into(),
        verified: id1,
    });
    let id2 = e2 == alpha.mul(&beta).add(&alpha.inv().unwrap());
    steps.push(ObstructionStep {
        claim: "e2 = alpha*beta + 1/alpha, so with alpha in Z integrality forces beta in Q, then beta in Z".into(),
        verified: id2,
    });
    let id3 = e1 == alpha2.add(&beta.div(&alpha).unwrap());
    steps.push(ObstructionStep {
        claim: "e1 = alpha^2 + beta/alpha, closing the chain: 1/alpha in Z, hence alpha = 1".into(),
        verified: id3,
    });
    let holds = id1 && id2 && id3;
    SymbolicObstruction {
        steps,
        holds,
        conclusion: "alpha = e^{-2(p+q) pi s2} = 1 forces p + q = 0, i.e. a = 0, excluded by a s != 0; no lattice at t = 2 pi s2".into(),
    }
}

/// The half-turn lattice conditions of the double-rotation family with real
/// scale lambda = e^{pi p} (the 5.17-type analysis): monodromy
/// diag(-lambda, -lambda, sgn/lambda, sgn/lambda, 1) with sgn = +1 for even
/// rotation ratio and -1 for odd. Machine-checks
///   (x + lambda)(x - sgn/lambda) = x^2 + (lambda - sgn/lambda) x - sgn
/// and (lambda -+ 1/lambda)^2 = h -+ 2 with h = lambda^2 + 1/lambda^2, so
/// integrality reduces to h -+ 2 being a perfect square.
pub fn g517_half_turn_condition(r_even: bool) -> SymbolicObstruction {
    let vars = 1usize;
    let lam = RatFunc::<Rat>::var(0, vars);
    let one = RatFunc::<Rat>::constant(vars, rat_int(1));
    let sgn = if r_even { one.clone() } else { one.neg() };
    let inv = sgn.div(&lam).unwrap();
    // min poly factor: (x + lambda)(x - sgn/lambda)
    let x = UniPoly::<RatFunc<Rat>>::x();
    let f1 = x.add(&UniPoly::constant(lam.clone()));
    let f2 = x.sub(&UniPoly::constant(inv.clone()));
    let prod = f1.mul(&f2);
    let t = lam.sub(&inv);
    let expect = UniPoly::from_coeffs(vec![sgn.neg(), t.clone(), RatFunc::one()]);
    let id1 = prod == expect;
    let h = lam.mul(&lam).add(&one.div(&lam.mul(&lam)).unwrap());
    let shift = if r_even { h.sub(&RatFunc::from_rat(&rat_int(2))) } else { h.add(&RatFunc::from_rat(&rat_int(2))) };
    let id2 = t.mul(&t) == shift;
    let steps = vec![
        ObstructionStep {
            claim: "(x + lambda)(x - sgn/lambda) = x^2 + (lambda - sgn/lambda) x - sgn".into(),
            verified: id1,
        },
        ObstructionStep {
            claim: if r_even {
                "(lambda - 1/lambda)^2 = h - 2 with h = lambda^2 + lambda^{-2}".into()
            } else {
                "(lambda + 1/lambda)^2 = h + 2 with h = lambda^2 + lambda^{-2}".into()
            },
            verified: id2,
        },
    ];
    SymbolicObstruction {
        holds: id1 && id2,
        steps,
        conclusion: if r_even {
            "integer coefficients iff h - 2 = n^2 for some integer n".into()
        } else {
            "integer coefficients iff h + 2 = n^2 for some integer n".into()
        },
    }
}

/// The weight-one family's full-turn monodromy over the real cyclotomic
/// cubic field, with the companion-block witness:
/// diag(1/s, w, v, 1, 1) is conjugated onto C(f) + I_2 where
/// f = x^3 - h2 x^2 + h1 x - 1, for (h1, h2) = (5, 6).
///
/// The three diagonal entries are the roots of f. For (5, 6) the depressed
/// cubic is y^3 - 7y - 7 with square discriminant 49, so f is cyclic: all
/// roots lie in Q(eta) with eta^3 + eta^2 - 2 eta - 1 = 0 and conjugation
/// eta -> eta^2 - 2. The roots are (sigma^j(eta) + 1)^2, verified exactly.
pub struct FullTurnWitness {
    pub field: std::sync::Arc<solvcoh_exact::NumberField>,
    pub candidate: LatticeCandidate,
    /// (1/s, w, v) as field elements; s satisfies the system's cubic.
    pub roots: [NumberFieldElement; 3],
    /// Whether the system constraints (r > 0, 0 < s <= r^2/4, s != 1,
    /// s != r-1, w > 0, v > 0) were verified under the real embedding.
    pub constraints_verified: bool,
}

pub fn g68_full_turn_witness() -> Result<FullTurnWitness, AlgebraError> {
    let (h1, h2) = (5i64, 6i64);
    // Q(eta), eta = 2 cos(2 pi / 7) under the embedding eta in (1, 3/2).
    let modulus = UniPoly::from_i64(&[-1, -2, 1, 1]);
    let field = solvcoh_exact::NumberField::real(
        "Q(eta7)",
        modulus,
        solvcoh_exact::scalar::rat(1, 1),
        solvcoh_exact::scalar::rat(3, 2),
    );
    let eta = NumberFieldElement::generator(&field);
    let conj = |x: &NumberFieldElement| {
        x.mul(x).sub(&NumberFieldElement::from_rat(&rat_int(2)))
    };
    let root_of = |e: &NumberFieldElement| {
        let e1 = e.add(&NumberFieldElement::one());
        e1.mul(&e1)
    };
    let f = UniPoly::from_i64(&[-1, h1, -h2, 1]);
    let theta = root_of(&eta);
    let w = root_of(&conj(&eta));
    let v = root_of(&conj(&conj(&eta)));
    for r in [&theta, &w, &v] {
        let value = f.map(NumberFieldElement::from_rat).eval(r);
        if !value.is_zero() {
            return Err(AlgebraError::Precondition {
                message: "conjugate formula does not give a root".into(),
            });
        }
    }
    // Monodromy diag(e^{2 pi a}, e^{2 pi b}, e^{2 pi c}, 1, 1)
    // = diag(1/s, w, v, 1, 1) with 1/s = theta (the product of all three
    // roots is 1).
    let prod = theta.mul(&w).mul(&v);
    if !prod.is_one() {
        return Err(AlgebraError::Precondition { message: "roots do not multiply to 1".into() });
    }
    let one = NumberFieldElement::one();
    let zero = NumberFieldElement::zero();
    let diag = [theta.clone(), w.clone(), v.clone(), one.clone(), one.clone()];
    let m = Matrix::from_fn(5, 5, |r, c| if r == c { diag[r].clone() } else { zero.clone() });
    // Witness: Vandermonde rows (1, lambda, lambda^2) + identity.
    let lams = [theta.clone(), w.clone(), v.clone()];
    let mut p = Matrix::from_fn(5, 5, |r, c| {
        if r < 3 && c < 3 {
            let mut acc = NumberFieldElement::one();
            for _ in 0..c {
                acc = acc.mul(&lams[r]);
            }
            acc
        } else if r == c {
            NumberFieldElement::one()
        } else {
            NumberFieldElement::zero()
        }
    });
    // E = companion(f) + I_2
    let e = Matrix::block_diag(&[companion_matrix(&f), Matrix::identity(2)]);
    // transpose the Vandermonde so columns carry powers: rows are
    // (1, l, l^2); M P = P E needs rows as built (M diag acts on rows).
    // Check orientation and fall back to the transpose if needed.
    let e_nf = e.map(|x| NumberFieldElement::from_rat(x));
    if m.mul(&p) != p.mul(&e_nf) {
        p = p.transpose();
    }
    let candidate = LatticeCandidate {
        q: rat_int(2),
        monodromy: MonodromyMatrix::NumberField(m),
        witness: Some(Witness {
            integer_matrix: e,
            conjugator: MonodromyMatrix::NumberField(p),
        }),
    };
    // Constraint verification under the real embedding: s = 1/theta,
    // r = w + v; the system needs r > 0, 0 < s <= r^2/4, s != 1, s != r-1,
    // and w, v > 0 (so that b = log w / 2pi, c = log v / 2pi are real).
    let s = theta.inv().unwrap();
    let r = w.add(&v);
    let quarter = NumberFieldElement::from_rat(&solvcoh_exact::scalar::rat(1, 4));
    let r2_4_minus_s = r.mul(&r).mul(&quarter).sub(&s);
    let constraints_verified = w.sign() > 0
        && v.sign() > 0
        && s.sign() > 0
        && r.sign() > 0
        && r2_4_minus_s.sign() >= 0
        && !s.sub(&one).is_zero()
        && !s.sub(&r.sub(&one)).is_zero();
    Ok(FullTurnWitness { field, candidate, roots: [theta, w, v], constraints_verified })
}

#[derive(Clone, Debug)]
pub struct ObstructionStep {
    pub claim: String,
    pub verified: bool,
}

#[derive(Clone, Debug)]
pub struct SymbolicObstruction {
    pub steps: Vec<ObstructionStep>,
    pub holds: bool,
    pub conclusion: String,
}
