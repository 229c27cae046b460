//! Sullivan minimal model of a finite-dimensional CDGA, built degree by
//! degree up to a cap: closed generators hit the cohomology, further
//! generators kill kernel classes, and the quasi-isomorphism-up-to-cap map
//! into the source is carried along and re-verified.

use solvcoh_algebra::cohomology::CohomologyRing;
use solvcoh_algebra::subcomplex::SubComplex;
use solvcoh_exact::scalar::{rat_int, Rat};
use solvcoh_exact::Matrix;

use crate::freecdga::{CdgaElement, CdgaMonomial, FreeCdga};

#[derive(Debug, Clone, PartialEq)]
pub enum ModelError {
    /// Generator or monomial budget exceeded at the named stage; minimal
    /// models of some of these quotients genuinely explode, so the bound is
    /// part of the contract rather than a soft limit.
    Budget { stage: String },
    /// cap < 1.
    BadCap,
    Algebra(String),
}

impl std::fmt::Display for ModelError {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            ModelError::Budget { stage } => write!(f, "model growth budget exceeded at {stage}"),
            ModelError::BadCap => write!(f, "cap must be at least 1"),
            ModelError::Algebra(m) => write!(f, "{m}"),
        }
    }
}

/// Limits for the degree-by-degree construction.
#[derive(Clone, Copy, Debug)]
pub struct ModelBudget {
    pub max_generators: usize,
    pub max_basis: usize,
    pub max_rounds: usize,
}

impl Default for ModelBudget {
    fn default() -> Self {
        ModelBudget { max_generators: 40, max_basis: 900, max_rounds: 48 }
    }
}

pub struct MinimalModel {
    pub cdga: FreeCdga,
    /// Image of each generator: coordinates in the target complex at the
    /// generator's degree.
    pub images: Vec<Vec<Rat>>,
    pub target: SubComplex,
    /// The model is a quasi-isomorphism in degrees <= cap and injective on
    /// H^{cap+1}.
    pub cap: usize,
}

impl MinimalModel {
    /// Map an element of the model into the target complex.
    pub fn map_element(&self, x: &CdgaElement) -> Vec<Rat> {
        let deg = match x.degree(&self.cdga.generators) {
            None => return vec![],
            Some(d) => d,
        };
        let mut out = vec![rat_int(0); self.target.dim_at(deg)];
        for (m, c) in &x.terms {
            let v = self.map_monomial(m);
            for (o, t) in out.iter_mut().zip(&v) {
                *o = &*o + &(c * t);
            }
        }
        out
    }

    fn map_monomial(&self, m: &CdgaMonomial) -> Vec<Rat> {
        // wedge of generator images in canonical order
        let mut acc: Option<(usize, Vec<Rat>)> = None;
        for (i, e) in &m.0 {
            for _ in 0..*e {
                let gd = self.cdga.generators[*i].degree;
                acc = Some(match acc {
                    None => (gd, self.images[*i].clone()),
                    Some((d, v)) => {
                        let w = self
                            .target
                            .wedge(d, &v, gd, &self.images[*i])
                            .expect("images stay in the subalgebra");
                        (d + gd, w)
                    }
                });
            }
        }
        match acc {
            None => {
                // the empty monomial: the unit of the target in degree 0
                let mut v = vec![rat_int(0); self.target.dim_at(0)];
                if !v.is_empty() {
                    v[0] = rat_int(1);
                }
                v
            }
            Some((_, v)) => v,
        }
    }

    /// The recorded map commutes with d on every generator.
    pub fn verify_map_commutes(&self) -> bool {
        for i in 0..self.cdga.gen_count() {
            let deg = self.cdga.generators[i].degree;
            let lhs = self.target.d(deg, &self.images[i]);
            let rhs = self.map_element(&self.cdga.differentials[i]);
            let rhs_padded = if rhs.is_empty() && lhs.iter().all(|c| num_traits::Zero::is_zero(c))
            {
                lhs.clone()
            } else {
                rhs
            };
            if lhs != rhs_padded {
                return false;
            }
        }
        true
    }

    /// Per-degree generator counts, the canonical shape invariant.
    pub fn generator_degrees(&self) -> Vec<usize> {
        let mut degs: Vec<usize> = self.cdga.generators.iter().map(|g| g.degree).collect();
        degs.sort();
        degs
    }

    /// Cohomology of the model through degree `limit`, with the bases used.
    pub fn model_cohomology(&self, limit: usize) -> (CohomologyRing<Rat>, Vec<Vec<CdgaMonomial>>) {
        model_cohomology_of(&self.cdga, limit)
    }

    /// Matrix of the induced map H^p(model) -> H^p(target); above the
    /// target's top degree everything maps to the zero space.
    pub fn induced_map(
        &self,
        p: usize,
        model_ring: &CohomologyRing<Rat>,
        bases: &[Vec<CdgaMonomial>],
        target_ring: &CohomologyRing<Rat>,
    ) -> Matrix<Rat> {
        let reps = &model_ring.degrees[p].representatives;
        if p > self.target.top_degree() {
            return Matrix::zero(0, reps.len());
        }
        let rows = target_ring.betti(p);
        let mut m = Matrix::zero(rows, reps.len());
        for (j, rep) in reps.iter().enumerate() {
            let elem = self.cdga.from_coords(rep, &bases[p]);
            let image = self.map_element(&elem);
            let class = target_ring.class_of(p, &image).expect("image of a cocycle");
            for (i, c) in class.into_iter().enumerate() {
                m.set(i, j, c);
            }
        }
        m
    }
}

pub fn model_cohomology_of(
    cdga: &FreeCdga,
    limit: usize,
) -> (CohomologyRing<Rat>, Vec<Vec<CdgaMonomial>>) {
    let bases: Vec<Vec<CdgaMonomial>> = (0..=limit + 1).map(|p| cdga.basis(p)).collect();
    let mut diffs = Vec::new();
    for p in 0..=limit {
        diffs.push(cdga.d_matrix(&bases[p], &bases[p + 1]));
    }
    // top cap: map degree limit+1 into nothing (rank irrelevant above limit)
    diffs.push(Matrix::zero(0, bases[limit + 1].len()));
    (CohomologyRing::from_differentials(&diffs), bases)
}

/// Build the minimal model of the subcomplex: H^p isomorphism for p <= cap,
/// injectivity at cap + 1, generators in degrees <= cap.
pub fn minimal_model(target: &SubComplex, cap: usize) -> Result<MinimalModel, ModelError> {
    minimal_model_with_budget(target, cap, ModelBudget::default())
}

pub fn minimal_model_with_budget(
    target: &SubComplex,
    cap: usize,
    budget: ModelBudget,
) -> Result<MinimalModel, ModelError> {
    if cap < 1 {
        return Err(ModelError::BadCap);
    }
    let target_ring = target.cohomology();
    if target_ring.betti(0) != 1 {
        return Err(ModelError::Algebra("H^0 of the target must be Q".into()));
    }
    let mut model = MinimalModel {
        cdga: FreeCdga::new(),
        images: Vec::new(),
        target: target.clone(),
        cap,
    };
    let mut fresh_names = NameWell::new(target);

    for p in 1..=cap {
        let mut rounds = 0;
        loop {
            rounds += 1;
            if rounds > budget.max_rounds {
                return Err(ModelError::Budget { stage: format!("degree {p} stabilization") });
            }
            // enumerate bases first: the budget must trip before any large
            // matrix is built
            {
                let probe: Vec<usize> =
                    (0..=p + 2).map(|d| model.cdga.basis(d).len()).collect();
                if probe.iter().any(|n| *n > budget.max_basis) {
                    return Err(ModelError::Budget { stage: format!("degree {p} monomial basis") });
                }
            }
            let (model_ring, bases) = model.model_cohomology(p + 1);
            check_budget(&bases, &budget, p)?;
            // 1) surjectivity in degree p: add closed generators for a
            //    complement of the image.
            let phi_p = model.induced_map(p, &model_ring, &bases, &target_ring);
            let missing = cokernel_representatives(&phi_p, &target_ring, p);
            if !missing.is_empty() {
                for rep in missing {
                    let chain = target_ring.representative(p, &rep);
                    let name = fresh_names.next(p, Some(&chain), &model.target);
                    let idx = model.cdga.add_generator(&name, p, CdgaElement::zero());
                    model.images.push(chain);
                    debug_assert_eq!(idx + 1, model.images.len());
                    if model.cdga.gen_count() > budget.max_generators {
                        return Err(ModelError::Budget { stage: format!("degree {p} generators") });
                    }
                }
                continue;
            }
            // 2) injectivity in degree p + 1: kill kernel classes with new
            //    degree-p generators (the ring from step 1 is still valid:
            //    nothing was added on this path).
            let phi_p1 = model.induced_map(p + 1, &model_ring, &bases, &target_ring);
            let kernel = phi_p1.kernel_basis();
            if kernel.is_empty() {
                // also require injectivity (iso) at p itself
                let phi_p = model.induced_map(p, &model_ring, &bases, &target_ring);
                if phi_p.kernel_basis().is_empty() {
                    break;
                }
                return Err(ModelError::Algebra(format!(
                    "H^{p} of the model fails injectivity after surjectivity pass"
                )));
            }
            for kvec in kernel {
                // kernel class as a cocycle element of the model
                let rep_coords = class_to_chain(&model_ring, p + 1, &kvec);
                let cocycle = model.cdga.from_coords(&rep_coords, &bases[p + 1]);
                // bounding cochain in the target
                let image = model.map_element(&cocycle);
                let bound = solve_coboundary(&model.target, p, &image).ok_or_else(|| {
                    ModelError::Algebra("kernel class image is not exact in the target".into())
                })?;
                let name = fresh_names.next(p, None, &model.target);
                model.cdga.add_generator(&name, p, cocycle);
                model.images.push(bound);
                if model.cdga.gen_count() > budget.max_generators {
                    return Err(ModelError::Budget { stage: format!("degree {p} killers") });
                }
            }
        }
    }
    debug_assert!(model.cdga.verify_d_squared());
    debug_assert!(model.verify_map_commutes());
    Ok(model)
}

fn check_budget(
    bases: &[Vec<CdgaMonomial>],
    budget: &ModelBudget,
    p: usize,
) -> Result<(), ModelError> {
    for b in bases {
        if b.len() > budget.max_basis {
            return Err(ModelError::Budget { stage: format!("degree {p} monomial basis") });
        }
    }
    Ok(())
}

/// Representatives of a complement of the column space of `phi` in H^p.
fn cokernel_representatives(
    phi: &Matrix<Rat>,
    target_ring: &CohomologyRing<Rat>,
    p: usize,
) -> Vec<Vec<Rat>> {
    let b = target_ring.betti(p);
    let image: Vec<Vec<Rat>> = (0..phi.cols()).map(|c| phi.col(c)).collect();
    let mut unit_classes = Vec::new();
    for i in 0..b {
        let mut e = vec![rat_int(0); b];
        e[i] = rat_int(1);
        unit_classes.push(e);
    }
    solvcoh_algebra::cohomology::echelon_complement(&image, &unit_classes, b)
}

/// Lift class coordinates to chain coordinates via the representative basis.
fn class_to_chain(ring: &CohomologyRing<Rat>, p: usize, class: &[Rat]) -> Vec<Rat> {
    ring.representative(p, class)
}

/// Solve d u = v in the target; None if v is not exact. Above the top
/// degree the only value is zero, bounded by zero.
fn solve_coboundary(sc: &SubComplex, p: usize, v: &[Rat]) -> Option<Vec<Rat>> {
    if v.iter().all(|c| num_traits::Zero::is_zero(c)) {
        return Some(vec![rat_int(0); sc.dim_at(p)]);
    }
    if p >= sc.top_degree() {
        return None;
    }
    sc.differential(p).solve(v)
}

/// Deterministic generator naming, cosmetically matching the published
/// models: the degree-one class dual to the derivation direction is called
/// A; other closed degree-one generators run x, y, z, t, u, v, w; kernel
/// killers run p, q, r, s; degree >= 2 closed generators reuse x, y, z...
/// and higher killers are beta, gamma, delta.
struct NameWell {
    derivation_col: Option<usize>,
    used: std::collections::BTreeSet<String>,
}

impl NameWell {
    fn new(target: &SubComplex) -> Self {
        // locate the dual of the derivation direction if the target is the
        // full complex of an almost abelian algebra
        let derivation_col =
            solvcoh_algebra::almost_abelian::AlmostAbelianPresentation::from_algebra(
                &target.algebra,
            )
            .ok()
            .map(|p| p.derivation);
        NameWell { derivation_col, used: Default::default() }
    }

    fn next(&mut self, degree: usize, chain: Option<&[Rat]>, target: &SubComplex) -> String {
        if degree == 1 {
            if let (Some(col), Some(chain)) = (self.derivation_col, chain) {
                let ambient = target.to_ambient(1, chain);
                let is_derivation_dual = ambient
                    .iter()
                    .enumerate()
                    .all(|(i, c)| (i == col) != num_traits::Zero::is_zero(c));
                if is_derivation_dual && !self.used.contains("A") {
                    self.used.insert("A".into());
                    return "A".into();
                }
            }
        }
        let pools: [&[&str]; 2] = if chain.is_some() {
            [&["x", "y", "z", "t", "u", "v", "w"], &["x2", "y2", "z2", "t2"]]
        } else if degree == 1 {
            [&["p", "q", "r", "s"], &["p2", "q2", "r2", "s2"]]
        } else {
            [&["beta", "gamma", "delta", "epsilon"], &["beta2", "gamma2", "delta2", "eps2"]]
        };
        for pool in pools {
            for cand in pool {
                if !self.used.contains(*cand) {
                    self.used.insert(cand.to_string());
                    return cand.to_string();
                }
            }
        }
        let n = format!("g{}", self.used.len());
        self.used.insert(n.clone());
        n
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use solvcoh_algebra::lie::LieAlgebra;

    #[test]
    fn torus_model_is_free_on_degree_one() {
        let sc = SubComplex::full(&LieAlgebra::abelian(6));
        let model = minimal_model(&sc, 6).unwrap();
        assert_eq!(model.generator_degrees(), vec![1; 6]);
        assert!(model.cdga.differentials.iter().all(|d| d.is_zero()));
        assert!(model.cdga.is_minimal());
        assert!(model.verify_map_commutes());
    }
}
