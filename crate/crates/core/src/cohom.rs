//! Cohomology of (sub)complexes, finite-group invariants and cup products.

use std::sync::Arc;

use crate::ceforms::{
    ce_differential, induced_on_forms, ExteriorForm, RelativeComplex,
};
use crate::complex::CochainComplex;
use crate::error::{Error, Result};
use crate::exactla::{
    axpy, fixed_subspace, group_closure, intersect, solve, zero_vec, Rational, RationalMatrix,
    SubspaceBasis,
};
use crate::liealg::{LieAlgebra, LieAutomorphism};

/// Cohomology dimensions together with canonical cocycle representatives.
///
/// Representatives, cocycles and coboundaries are all expressed in the
/// coordinates of the ambient cochain spaces (Λᵏ for form complexes).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CohomologyResult {
    dims: Vec<usize>,
    representatives: Vec<Vec<Vec<Rational>>>,
    cocycles: Vec<SubspaceBasis>,
    coboundaries: Vec<SubspaceBasis>,
    form_dim: Option<usize>,
}

impl CohomologyResult {
    pub fn dims(&self) -> &[usize] {
        &self.dims
    }

    pub fn representatives(&self, k: usize) -> &[Vec<Rational>] {
        self.representatives.get(k).map_or(&[], Vec::as_slice)
    }

    pub fn cocycles(&self, k: usize) -> &SubspaceBasis {
        &self.cocycles[k]
    }

    pub fn coboundaries(&self, k: usize) -> &SubspaceBasis {
        &self.coboundaries[k]
    }

    /// Dimension of the Lie algebra when the underlying complex is a form complex.
    pub fn form_dim(&self) -> Option<usize> {
        self.form_dim
    }

    pub fn with_form_dim(mut self, dim: usize) -> Self {
        self.form_dim = Some(dim);
        self
    }

    pub fn representative_form(&self, k: usize, i: usize) -> Option<ExteriorForm> {
        let dim = self.form_dim?;
        let coeffs = self.representatives.get(k)?.get(i)?.clone();
        ExteriorForm::from_coeffs(dim, k, coeffs).ok()
    }

    pub fn euler_characteristic(&self) -> i64 {
        self.dims
            .iter()
            .enumerate()
            .map(|(k, &d)| if k % 2 == 0 { d as i64 } else { -(d as i64) })
            .sum()
    }

    /// Coordinates of the class of the cocycle `v` in the representative basis.
    pub fn class_of(&self, k: usize, v: &[Rational]) -> Result<Vec<Rational>> {
        if k >= self.dims.len() {
            return Err(Error::DimensionMismatch(format!("no degree {k}")));
        }
        if !self.cocycles[k].contains(v) {
            return Err(Error::Malformed(format!("vector is not a cocycle of degree {k}")));
        }
        let b = &self.coboundaries[k];
        let reduced: Vec<Vec<Rational>> =
            self.representatives[k].iter().map(|r| b.reduce(r)).collect();
        let m = RationalMatrix::from_columns(b.ambient_dim(), &reduced);
        solve(&m, &b.reduce(v))?
            .ok_or_else(|| Error::Malformed("cocycle outside the represented classes".into()))
    }
}

/// Cohomology of a complex with `d² = 0`.
pub fn cohomology(c: &CochainComplex) -> Result<CohomologyResult> {
    let spaces: Vec<SubspaceBasis> = c.dims().iter().map(|&d| SubspaceBasis::full(d)).collect();
    subcomplex_cohomology(c, &spaces)
}

/// Cohomology of the subcomplex `spaces[k] ⊆ C^k` (degrees past
/// `spaces.len()` are treated as zero). Requires `d(spaces[k]) ⊆ spaces[k+1]`.
pub fn subcomplex_cohomology(c: &CochainComplex, spaces: &[SubspaceBasis]) -> Result<CohomologyResult> {
    c.check_d_squared()?;
    if spaces.len() > c.dims().len() {
        return Err(Error::DimensionMismatch("more subspaces than degrees".into()));
    }
    for (k, s) in spaces.iter().enumerate() {
        if s.ambient_dim() != c.dim(k) {
            return Err(Error::DimensionMismatch(format!("subspace in degree {k}")));
        }
    }
    let mut dims = Vec::with_capacity(spaces.len());
    let mut representatives = Vec::with_capacity(spaces.len());
    let mut cocycles = Vec::with_capacity(spaces.len());
    let mut coboundaries = Vec::with_capacity(spaces.len());
    for (k, space) in spaces.iter().enumerate() {
        let d = c.differential(k);
        let z = space.kernel_within(&d)?;
        if k + 1 < spaces.len() {
            let img = space.image_under(&d)?;
            if !img.is_subspace_of(&spaces[k + 1]) {
                return Err(Error::NotAComplex { degree: k });
            }
        } else if k + 1 < c.dims().len() && !z.eq(space) {
            // truncated subcomplex: the top space must consist of cocycles
            return Err(Error::NotAComplex { degree: k });
        }
        let b = if k == 0 {
            SubspaceBasis::zero(c.dim(0))
        } else {
            spaces[k - 1].image_under(&c.differential(k - 1))?
        };
        let reps = z.complement_of(&b)?;
        dims.push(reps.len());
        representatives.push(reps);
        cocycles.push(z);
        coboundaries.push(b);
    }
    Ok(CohomologyResult {
        dims,
        representatives,
        cocycles,
        coboundaries,
        form_dim: None,
    })
}

/// H•(𝔤).
pub fn lie_cohomology(g: &Arc<LieAlgebra>) -> Result<CohomologyResult> {
    let ce = ce_differential(g)?;
    Ok(cohomology(&ce.to_cochain_complex())?.with_form_dim(g.dim()))
}

/// H•(𝔤, 𝔥) with representatives in Λ•𝔤* coordinates.
pub fn relative_cohomology(rel: &RelativeComplex) -> Result<CohomologyResult> {
    let ambient = rel.ce().to_cochain_complex();
    Ok(subcomplex_cohomology(&ambient, rel.spaces())?.with_form_dim(rel.ce().dim()))
}

/// A finite group acting on H^k, one matrix per generator and degree in the
/// representative basis.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GroupActionOnCohomology {
    generators: Vec<Vec<RationalMatrix>>,
    group_order: usize,
}

impl GroupActionOnCohomology {
    /// Builds the action from per-degree cochain maps (`maps[g][k]` acting on
    /// the ambient `C^k`). Each map must send cocycles to cocycles.
    pub fn from_cochain_maps(
        result: &CohomologyResult,
        maps: &[Vec<RationalMatrix>],
        bound: usize,
    ) -> Result<Self> {
        let mut generators = Vec::with_capacity(maps.len());
        for per_degree in maps {
            if per_degree.len() < result.dims.len() {
                return Err(Error::DimensionMismatch(
                    "cochain map missing degrees".into(),
                ));
            }
            let mut mats = Vec::with_capacity(result.dims.len());
            for k in 0..result.dims.len() {
                let a = &per_degree[k];
                let cols = result.representatives[k]
                    .iter()
                    .map(|r| {
                        let img = a.mul_vec(r)?;
                        result.class_of(k, &img).map_err(|_| {
                            Error::InvalidAction(format!(
                                "map does not preserve cocycles in degree {k}"
                            ))
                        })
                    })
                    .collect::<Result<Vec<_>>>()?;
                mats.push(RationalMatrix::from_columns(result.dims[k], &cols));
            }
            generators.push(mats);
        }
        Self::from_matrices(generators, bound)
    }

    /// The action induced by Lie algebra automorphisms on form cohomology.
    pub fn from_automorphisms(
        result: &CohomologyResult,
        auts: &[LieAutomorphism],
        bound: usize,
    ) -> Result<Self> {
        let dim = result
            .form_dim
            .ok_or_else(|| Error::Malformed("cohomology is not of a form complex".into()))?;
        let maps = auts
            .iter()
            .map(|a| {
                if a.algebra().dim() != dim {
                    return Err(Error::DimensionMismatch("automorphism of another algebra".into()));
                }
                (0..result.dims.len()).map(|k| induced_on_forms(a, k)).collect()
            })
            .collect::<Result<Vec<_>>>()?;
        Self::from_cochain_maps(result, &maps, bound)
    }

    /// Uses matrices already written in the representative basis.
    pub fn from_matrices(generators: Vec<Vec<RationalMatrix>>, bound: usize) -> Result<Self> {
        let block: Vec<RationalMatrix> = generators.iter().map(|g| block_diagonal(g)).collect();
        let total = block.first().map_or(0, RationalMatrix::rows);
        let group_order = group_closure(total, &block, bound)?.len();
        Ok(Self {
            generators,
            group_order,
        })
    }

    pub fn generators(&self) -> &[Vec<RationalMatrix>] {
        &self.generators
    }

    pub fn group_order(&self) -> usize {
        self.group_order
    }
}

fn block_diagonal(blocks: &[RationalMatrix]) -> RationalMatrix {
    let n: usize = blocks.iter().map(RationalMatrix::rows).sum();
    let mut m = RationalMatrix::zeros(n, n);
    let mut off = 0;
    for b in blocks {
        for i in 0..b.rows() {
            for j in 0..b.cols() {
                m.set(off + i, off + j, b.get(i, j).clone());
            }
        }
        off += b.rows();
    }
    m
}

/// Per-degree fixed classes of `action`, re-expressed as cocycles.
pub fn invariant_cohomology(
    result: &CohomologyResult,
    action: &GroupActionOnCohomology,
    bound: usize,
) -> Result<CohomologyResult> {
    let mut out = result.clone();
    for k in 0..result.dims.len() {
        let mats: Vec<RationalMatrix> = action
            .generators
            .iter()
            .map(|g| g.get(k).cloned())
            .collect::<Option<_>>()
            .ok_or_else(|| Error::DimensionMismatch("action missing degrees".into()))?;
        if mats.iter().any(|m| m.rows() != result.dims[k] || !m.is_square()) {
            return Err(Error::DimensionMismatch(format!(
                "action matrix does not match H^{k}"
            )));
        }
        let fixed = fixed_subspace(result.dims[k], &mats, bound)?;
        let reps: Vec<Vec<Rational>> = fixed
            .vectors()
            .iter()
            .map(|c| {
                let mut v = zero_vec(result.cocycles[k].ambient_dim());
                for (ci, r) in c.iter().zip(&result.representatives[k]) {
                    axpy(&mut v, ci, r);
                }
                v
            })
            .collect();
        let span = SubspaceBasis::from_spanning(result.cocycles[k].ambient_dim(), reps.clone())?;
        out.cocycles[k] = span.sum(&result.coboundaries[k])?;
        out.dims[k] = reps.len();
        out.representatives[k] = reps;
    }
    Ok(out)
}

/// Cohomology of the invariant subcomplex `{x ∈ spaces[k] : g x = x}`.
///
/// For finite groups this agrees with [`invariant_cohomology`]; it is the
/// complex-level route to the same numbers.
pub fn invariant_subcomplex_cohomology(
    c: &CochainComplex,
    spaces: &[SubspaceBasis],
    maps: &[Vec<RationalMatrix>],
    bound: usize,
) -> Result<CohomologyResult> {
    let fixed = spaces
        .iter()
        .enumerate()
        .map(|(k, s)| {
            let mats: Vec<RationalMatrix> = maps.iter().map(|g| g[k].clone()).collect();
            intersect(s, &fixed_subspace(c.dim(k), &mats, bound)?)
        })
        .collect::<Result<Vec<_>>>()?;
    subcomplex_cohomology(c, &fixed)
}

/// Class of `rep(a) ∧ rep(b)` in the representative basis of degree
/// `deg a + deg b`. Past the top degree the product is the zero class (an
/// empty vector).
pub fn cup_product(
    result: &CohomologyResult,
    a: (usize, usize),
    b: (usize, usize),
) -> Result<Vec<Rational>> {
    let fa = result
        .representative_form(a.0, a.1)
        .ok_or_else(|| Error::Malformed(format!("no class {} in degree {}", a.1, a.0)))?;
    let fb = result
        .representative_form(b.0, b.1)
        .ok_or_else(|| Error::Malformed(format!("no class {} in degree {}", b.1, b.0)))?;
    cup_forms(result, &fa, &fb)
}

/// Class of `a ∧ b` for arbitrary cocycles `a`, `b`.
pub fn cup_forms(result: &CohomologyResult, a: &ExteriorForm, b: &ExteriorForm) -> Result<Vec<Rational>> {
    let k = a.degree() + b.degree();
    if k >= result.dims.len() {
        return Ok(Vec::new());
    }
    let w = a.wedge(b)?;
    result.class_of(k, w.coeffs())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ceforms::relative_subcomplex;
    use crate::exactla::{rat, DEFAULT_GROUP_BOUND};
    use crate::liealg::{library, Subalgebra};

    #[test]
    fn su2_absolute() {
        let h = lie_cohomology(&Arc::new(library::su2())).unwrap();
        assert_eq!(h.dims(), &[1, 0, 0, 1]);
        assert_eq!(h.euler_characteristic(), 0);
    }

    #[test]
    fn abelian_is_binomial() {
        let h = lie_cohomology(&Arc::new(LieAlgebra::abelian(4))).unwrap();
        assert_eq!(h.dims(), &[1, 4, 6, 4, 1]);
    }

    #[test]
    fn su2_relative_circle() {
        let (_, h, _) = library::su2_circle();
        let res = relative_cohomology(&relative_subcomplex(&h).unwrap()).unwrap();
        assert_eq!(res.dims(), &[1, 0, 1]);
    }

    #[test]
    fn relative_to_zero_is_absolute() {
        let g = Arc::new(library::so(4));
        let abs = lie_cohomology(&g).unwrap();
        let rel = relative_cohomology(&relative_subcomplex(&Subalgebra::zero(g)).unwrap()).unwrap();
        assert_eq!(abs, rel);
    }

    #[test]
    fn so3_so2_invariants_under_reflection() {
        let (_, h, refl) = library::so_pair(2);
        let res = relative_cohomology(&relative_subcomplex(&h).unwrap()).unwrap();
        assert_eq!(res.dims(), &[1, 0, 1]);
        let act = GroupActionOnCohomology::from_automorphisms(&res, &[refl], DEFAULT_GROUP_BOUND)
            .unwrap();
        assert_eq!(act.group_order(), 2);
        assert_eq!(act.generators()[0][2], RationalMatrix::from_ints(1, 1, &[-1]));
        let inv = invariant_cohomology(&res, &act, DEFAULT_GROUP_BOUND).unwrap();
        assert_eq!(inv.dims(), &[1, 0, 0]);
    }

    #[test]
    fn so4_so3_invariants_under_reflection() {
        let (_, h, refl) = library::so_pair(3);
        let res = relative_cohomology(&relative_subcomplex(&h).unwrap()).unwrap();
        assert_eq!(res.dims(), &[1, 0, 0, 1]);
        let act = GroupActionOnCohomology::from_automorphisms(&res, &[refl], DEFAULT_GROUP_BOUND)
            .unwrap();
        let inv = invariant_cohomology(&res, &act, DEFAULT_GROUP_BOUND).unwrap();
        assert_eq!(inv.dims(), &[1, 0, 0, 1]);
    }

    #[test]
    fn trivial_group_leaves_cohomology_unchanged() {
        let g = Arc::new(library::su2());
        let res = lie_cohomology(&g).unwrap();
        let act = GroupActionOnCohomology::from_automorphisms(
            &res,
            &[LieAutomorphism::identity(g)],
            DEFAULT_GROUP_BOUND,
        )
        .unwrap();
        assert_eq!(act.group_order(), 1);
        assert_eq!(invariant_cohomology(&res, &act, DEFAULT_GROUP_BOUND).unwrap(), res);
    }

    #[test]
    fn cup_product_examples() {
        let (_, h, _) = library::su2_circle();
        let res = relative_cohomology(&relative_subcomplex(&h).unwrap()).unwrap();
        // unit
        assert_eq!(cup_product(&res, (0, 0), (2, 0)).unwrap(), vec![rat(1)]);
        // σ ∪ σ lands past the top degree
        assert!(cup_product(&res, (2, 0), (2, 0)).unwrap().is_empty());
        let su2 = lie_cohomology(&Arc::new(library::su2())).unwrap();
        assert!(su2.representatives(1).is_empty());
        assert!(cup_product(&su2, (1, 0), (1, 0)).is_err());
    }

    #[test]
    fn u2_cup_product_is_nonzero() {
        // H(u(2)) = H(S¹ × S³): the degree 1 and degree 3 generators multiply to the top class.
        let h = lie_cohomology(&Arc::new(library::u(2))).unwrap();
        assert_eq!(h.dims(), &[1, 1, 0, 1, 1]);
        let c = cup_product(&h, (1, 0), (3, 0)).unwrap();
        assert_eq!(c.len(), 1);
        assert_ne!(c[0], rat(0));
    }

    #[test]
    fn not_a_cocycle_is_rejected() {
        let h = lie_cohomology(&Arc::new(library::su2())).unwrap();
        assert!(h.class_of(1, &[rat(1), rat(0), rat(0)]).is_err());
    }

    #[test]
    fn complex_level_invariants_agree() {
        let (_, h, refl) = library::so_pair(2);
        let rel = relative_subcomplex(&h).unwrap();
        let ambient = rel.ce().to_cochain_complex();
        let maps = vec![(0..=3).map(|k| induced_on_forms(&refl, k).unwrap()).collect::<Vec<_>>()];
        let via_complex =
            invariant_subcomplex_cohomology(&ambient, rel.spaces(), &maps, DEFAULT_GROUP_BOUND)
                .unwrap();
        assert_eq!(via_complex.dims(), &[1, 0, 0]);
    }
}
