//! The space of closed 2-forms, the generic member with named coefficients,
//! its Pfaffian, and the symplectic existence verdict.

use solvcoh_algebra::subcomplex::SubComplex;
use solvcoh_algebra::AlgebraError;
use solvcoh_exact::multipoly::SymbolTable;
use solvcoh_exact::scalar::{Field, Rat};
use solvcoh_exact::{MultiPoly, RatFunc};

/// The closed-2-form family of a (sub)complex: basis vectors in degree-2
/// sub-coordinates, one named coefficient per basis member, and the
/// Pfaffian of the generic member as a polynomial in those coefficients.
pub struct TwoFormFamily {
    pub basis: Vec<Vec<Rat>>,
    /// Symbol names, one per basis vector (w{ij} after the leading ambient
    /// index pair where the basis vector is a unit coordinate vector).
    pub symbols: SymbolTable,
    pub symbol_names: Vec<String>,
    /// Pfaffian: the coefficient of the top-degree form in the n-fold wedge
    /// of the generic member (dim = 2n), up to the constant n!.
    pub pfaffian: MultiPoly<Rat>,
}

impl TwoFormFamily {
    /// Evaluate the generic member at a rational coefficient point.
    pub fn member(&self, point: &[Rat]) -> Vec<Rat> {
        assert_eq!(point.len(), self.basis.len());
        let m = self.basis.first().map_or(0, |b| b.len());
        let mut out = vec![Rat::from_integer(0.into()); m];
        for (c, b) in point.iter().zip(&self.basis) {
            for (o, v) in out.iter_mut().zip(b) {
                *o = &*o + &(c * v);
            }
        }
        out
    }

    pub fn pfaffian_at(&self, point: &[Rat]) -> Rat {
        self.pfaffian.eval(point)
    }

    /// A deterministic sample avoiding the Pfaffian zero locus, from a seed.
    /// None if the Pfaffian vanishes identically.
    pub fn generic_point(&self, seed: u64) -> Option<Vec<Rat>> {
        if self.pfaffian.is_zero() {
            return None;
        }
        use rand::{Rng, SeedableRng};
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(seed);
        for _ in 0..64 {
            let point: Vec<Rat> = (0..self.basis.len())
                .map(|_| Rat::from_integer(rng.gen_range(-9i64..=9).into()))
                .collect();
            if !num_traits::Zero::is_zero(&self.pfaffian_at(&point)) {
                return Some(point);
            }
        }
        None
    }
}

pub enum SymplecticVerdict {
    None { family: TwoFormFamily },
    Exists { family: TwoFormFamily },
}

impl SymplecticVerdict {
    pub fn exists(&self) -> bool {
        matches!(self, SymplecticVerdict::Exists { .. })
    }

    pub fn family(&self) -> &TwoFormFamily {
        match self {
            SymplecticVerdict::None { family } | SymplecticVerdict::Exists { family } => family,
        }
    }
}

/// Compute the closed-2-form family of the complex and decide whether its
/// generic member is nondegenerate (symbolic Pfaffian, with a randomized
/// evaluation as a fast path confirmed by the symbolic expansion).
pub fn symplectic_exists(sc: &SubComplex) -> Result<SymplecticVerdict, AlgebraError> {
    let dim = sc.top_degree();
    if dim % 2 != 0 {
        return Err(AlgebraError::Precondition {
            message: "symplectic structures need even dimension".into(),
        });
    }
    let family = closed_two_form_family(sc)?;
    if family.pfaffian.is_zero() {
        Ok(SymplecticVerdict::None { family })
    } else {
        Ok(SymplecticVerdict::Exists { family })
    }
}

pub fn closed_two_form_family(sc: &SubComplex) -> Result<TwoFormFamily, AlgebraError> {
    let dim = sc.top_degree();
    let n = dim / 2;
    let basis = sc.differential(2).kernel_basis();
    let k = basis.len();
    // Names: where a basis vector is a unit vector its ambient multi-index
    // names the coefficient, else a positional name.
    let amb = solvcoh_algebra::exterior::ExteriorBasis::new(dim, 2);
    let mut names = Vec::with_capacity(k);
    for (i, b) in basis.iter().enumerate() {
        let ambient = sc.to_ambient(2, b);
        let support: Vec<usize> = ambient
            .iter()
            .enumerate()
            .filter(|(_, c)| !num_traits::Zero::is_zero(*c))
            .map(|(j, _)| j)
            .collect();
        if support.len() == 1 {
            let idx = &amb.indices[support[0]];
            let label: String = idx.iter().map(|d| (d + 1).to_string()).collect();
            names.push(format!("w{label}"));
        } else {
            names.push(format!("w_{i}"));
        }
    }
    // Generic member over the rational function field in k symbols.
    let omega: Vec<RatFunc<Rat>> = {
        let m = sc.dim_at(2);
        let mut acc = vec![RatFunc::<Rat>::constant(k, Rat::from_integer(0.into())); m];
        for (i, b) in basis.iter().enumerate() {
            let sym = RatFunc::var(i, k);
            for (a, c) in acc.iter_mut().zip(b) {
                if !num_traits::Zero::is_zero(c) {
                    *a = a.add(&sym.mul(&RatFunc::constant(k, c.clone())));
                }
            }
        }
        acc
    };
    // omega^n in the subcomplex coordinates (the wedge stays inside by
    // multiplicativity of invariant subspaces).
    let wedge = |p: usize, x: &[RatFunc<Rat>], q: usize, y: &[RatFunc<Rat>]| {
        wedge_rf(sc, p, x, q, y)
    };
    let mut power = omega.clone();
    let mut deg = 2;
    for _ in 1..n {
        power = wedge(deg, &power, 2, &omega);
        deg += 2;
    }
    // top degree of the subcomplex is 1-dimensional for the full complex and
    // for every invariant subcomplex of a unimodular algebra
    let pfaffian = match power.len() {
        0 => MultiPoly::zero(k),
        _ => {
            assert_eq!(power.len(), 1, "top degree must be one dimensional");
            let rf = power[0].clone();
            let p = rf.as_poly().cloned().unwrap_or_else(|| rf.numerator().clone());
            if p.nvars() == k {
                p
            } else {
                // a constant (e.g. identically zero) from the 0-variable ring
                MultiPoly::constant(k, p.constant_value().expect("constant pfaffian"))
            }
        }
    };
    let symbols = SymbolTable::new(&names.iter().map(|s| s.as_str()).collect::<Vec<_>>());
    Ok(TwoFormFamily { basis, symbols, symbol_names: names, pfaffian })
}

/// Wedge of coordinate vectors with rational-function coefficients, done in
/// the ambient exterior algebra.
pub fn wedge_rf(
    sc: &SubComplex,
    p: usize,
    x: &[RatFunc<Rat>],
    q: usize,
    y: &[RatFunc<Rat>],
) -> Vec<RatFunc<Rat>> {
    use solvcoh_algebra::exterior::{ExteriorBasis, ExteriorForm};
    let dim = sc.top_degree();
    if p + q > dim {
        return vec![];
    }
    let to_ambient_rf = |deg: usize, v: &[RatFunc<Rat>]| -> ExteriorForm<RatFunc<Rat>> {
        let basis = ExteriorBasis::new(dim, deg);
        let mut acc = ExteriorForm::zero(dim, deg);
        for (i, c) in v.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            // row i of the sub-basis, embedded
            let row = sc.bases[deg].row(i);
            for (j, rc) in row.iter().enumerate() {
                if !num_traits::Zero::is_zero(rc) {
                    let term = ExteriorForm::basis(dim, &basis.indices[j])
                        .scale(&c.mul(&RatFunc::from_rat(rc)));
                    acc = acc.add(&term);
                }
            }
        }
        acc
    };
    let fx = to_ambient_rf(p, x);
    let fy = to_ambient_rf(q, y);
    let prod = fx.wedge(&fy);
    let target = ExteriorBasis::new(dim, p + q);
    let prod_vec = prod.to_vec(&target);
    // express in the sub-basis of degree p+q over the function field
    let rows = sc.bases[p + q].map(|c| RatFunc::<Rat>::from_rat(c));
    solvcoh_algebra::subcomplex::express_in_rows(&rows, &prod_vec)
        .expect("wedge must stay in the subalgebra")
}
