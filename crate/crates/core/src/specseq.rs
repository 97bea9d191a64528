//! Spectral sequence of a finite filtered cochain complex, product models
//! `base ⊗ Ω(𝔤,𝔥)` and their deck-twisted invariant subcomplexes.

pub mod models;

use std::collections::BTreeMap;

use crate::ceforms::{induced_on_forms, relative_subcomplex, RelativeComplex};
use crate::cohom::cohomology;
pub use crate::complex::CochainComplex;
use crate::error::{Error, Result};
use crate::exactla::{fixed_subspace, intersect, Rational, RationalMatrix, SubspaceBasis};
use crate::liealg::{LieAutomorphism, Subalgebra};

/// A cochain complex with a weight on every basis vector; `F^p` is spanned
/// by the basis vectors of weight `≥ p`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FilteredComplex {
    complex: CochainComplex,
    weights: Vec<Vec<usize>>,
}

/// Outcome of [`FilteredComplex::validate`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum FiltrationVerdict {
    Ok,
    NotAComplex {
        degree: usize,
    },
    /// `d` sends basis vector `source` (degree `degree`) to a nonzero
    /// multiple of `target`, which has lower weight.
    LowersFiltration {
        degree: usize,
        source: usize,
        source_weight: usize,
        target: usize,
        target_weight: usize,
    },
}

impl FiltrationVerdict {
    pub fn is_ok(&self) -> bool {
        matches!(self, Self::Ok)
    }
}

impl FilteredComplex {
    /// Checks the weight shapes only; see [`validate`](Self::validate).
    pub fn new(complex: CochainComplex, weights: Vec<Vec<usize>>) -> Result<Self> {
        if weights.len() != complex.dims().len() {
            return Err(Error::InvalidFiltration(format!(
                "{} weight lists for {} degrees",
                weights.len(),
                complex.dims().len()
            )));
        }
        for (n, w) in weights.iter().enumerate() {
            if w.len() != complex.dim(n) {
                return Err(Error::InvalidFiltration(format!(
                    "degree {n} has {} basis vectors but {} weights",
                    complex.dim(n),
                    w.len()
                )));
            }
        }
        Ok(Self { complex, weights })
    }

    /// Every basis vector in weight 0.
    pub fn trivial(complex: CochainComplex) -> Self {
        let weights = complex.dims().iter().map(|&d| vec![0; d]).collect();
        Self { complex, weights }
    }

    pub fn complex(&self) -> &CochainComplex {
        &self.complex
    }

    pub fn weights(&self) -> &[Vec<usize>] {
        &self.weights
    }

    pub fn max_weight(&self) -> usize {
        self.weights.iter().flatten().copied().max().unwrap_or(0)
    }

    /// `F^p C^n` as a coordinate subspace.
    pub fn filtration_subspace(&self, n: usize, p: usize) -> SubspaceBasis {
        let dim = self.complex.dim(n);
        match self.weights.get(n) {
            Some(w) => SubspaceBasis::coordinate(dim, (0..dim).filter(|&i| w[i] >= p)),
            None => SubspaceBasis::zero(dim),
        }
    }

    pub fn validate(&self) -> FiltrationVerdict {
        if let Some(degree) = self.complex.d_squared_failure() {
            return FiltrationVerdict::NotAComplex { degree };
        }
        for (n, d) in self.complex.differentials().iter().enumerate() {
            for source in 0..d.cols() {
                let source_weight = self.weights[n][source];
                for target in 0..d.rows() {
                    let target_weight = self.weights[n + 1][target];
                    if target_weight < source_weight && !num_traits::Zero::is_zero(d.get(target, source)) {
                        return FiltrationVerdict::LowersFiltration {
                            degree: n,
                            source,
                            source_weight,
                            target,
                            target_weight,
                        };
                    }
                }
            }
        }
        FiltrationVerdict::Ok
    }

    fn require_valid(&self) -> Result<()> {
        match self.validate() {
            FiltrationVerdict::Ok => Ok(()),
            FiltrationVerdict::NotAComplex { degree } => Err(Error::NotAComplex { degree }),
            FiltrationVerdict::LowersFiltration {
                degree,
                source,
                source_weight,
                target,
                target_weight,
            } => Err(Error::InvalidFiltration(format!(
                "d sends basis vector {} of degree {degree} (weight {source_weight}) onto vector {} of weight {target_weight}",
                source + 1,
                target + 1
            ))),
        }
    }
}

/// `E_r^{p,q}` with `n = p + q`; the basis lives in `C^n` coordinates and
/// projects to a basis of the quotient.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PageEntry {
    pub p: usize,
    pub n: usize,
    pub dim: usize,
    pub basis: Vec<Vec<Rational>>,
}

impl PageEntry {
    pub fn q(&self) -> i64 {
        self.n as i64 - self.p as i64
    }
}

/// The nonzero entries of one page, ordered by `(n, p)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Page {
    r: usize,
    entries: Vec<PageEntry>,
}

impl Page {
    pub fn r(&self) -> usize {
        self.r
    }

    pub fn entries(&self) -> &[PageEntry] {
        &self.entries
    }

    pub fn dim(&self, p: i64, q: i64) -> usize {
        self.entries
            .iter()
            .find(|e| e.p as i64 == p && e.q() == q)
            .map_or(0, |e| e.dim)
    }

    /// `(p, q) → dim` for the nonzero entries.
    pub fn dims(&self) -> BTreeMap<(usize, i64), usize> {
        self.entries.iter().map(|e| ((e.p, e.q()), e.dim)).collect()
    }

    /// `Σ_{p+q=n} dim E^{p,q}` for `n` in `0..degrees`.
    pub fn total_by_degree(&self, degrees: usize) -> Vec<usize> {
        let mut out = vec![0; degrees];
        for e in &self.entries {
            out[e.n] += e.dim;
        }
        out
    }

    fn same_dims(&self, other: &Self) -> bool {
        self.dims() == other.dims()
    }
}

/// `Z_r^{p,n} = {α ∈ F^p C^n : dα ∈ F^{p+r} C^{n+1}}`.
fn cycles_to(fc: &FilteredComplex, n: usize, p: usize, r: usize) -> Result<SubspaceBasis> {
    let d = fc.complex.differential(n);
    let low: Vec<usize> = (0..fc.complex.dim(n + 1))
        .filter(|&i| fc.weights.get(n + 1).is_some_and(|w| w[i] < p + r))
        .collect();
    let all: Vec<usize> = (0..d.cols()).collect();
    fc.filtration_subspace(n, p).kernel_within(&d.submatrix(&low, &all))
}

/// One entry by the closed form
/// `Z_r^p / (Z_r^p ∩ F^{p+1} + d(F^{p−r+1} C^{n−1}) ∩ F^p)`.
fn page_entry(fc: &FilteredComplex, n: usize, p: usize, r: usize) -> Result<PageEntry> {
    let z = cycles_to(fc, n, p, r)?;
    let fp = fc.filtration_subspace(n, p);
    let mut denom = intersect(&z, &fc.filtration_subspace(n, p + 1))?;
    if n > 0 {
        let src = fc.filtration_subspace(n - 1, (p + 1).saturating_sub(r));
        let b = src.image_under(&fc.complex.differential(n - 1))?;
        denom = denom.sum(&intersect(&b, &fp)?)?;
    }
    let basis = z.complement_of(&denom)?;
    Ok(PageEntry {
        p,
        n,
        dim: basis.len(),
        basis,
    })
}

/// The page `E_r` of a valid filtered complex.
pub fn page(fc: &FilteredComplex, r: usize) -> Result<Page> {
    fc.require_valid()?;
    page_unchecked(fc, r)
}

fn page_unchecked(fc: &FilteredComplex, r: usize) -> Result<Page> {
    let mut entries = Vec::new();
    for n in 0..fc.complex.dims().len() {
        let mut ps: Vec<usize> = fc.weights[n].clone();
        ps.sort_unstable();
        ps.dedup();
        for p in ps {
            let e = page_entry(fc, n, p, r)?;
            if e.dim > 0 {
                entries.push(e);
            }
        }
    }
    Ok(Page { r, entries })
}

/// Pages `E_0 … E_{R}` with `R = max weight + 2`, `E∞ = E_R`, and the
/// convergence audit against the cohomology of the total complex.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PageTable {
    pub pages: Vec<Page>,
    /// Smallest `r` with `E_r = E∞` dimension-wise.
    pub stabilized_at: usize,
    pub einf: Page,
    pub total_cohomology: Vec<usize>,
}

impl PageTable {
    pub fn einf_by_degree(&self) -> Vec<usize> {
        self.einf.total_by_degree(self.total_cohomology.len())
    }

    pub fn page(&self, r: usize) -> Option<&Page> {
        self.pages.get(r)
    }
}

/// Runs the spectral sequence until it is guaranteed to have stabilized and
/// audits `Σ_{p+q=n} E∞^{p,q} = dim Hⁿ`.
pub fn run_to_stabilization(fc: &FilteredComplex) -> Result<PageTable> {
    fc.require_valid()?;
    let last = fc.max_weight() + 2;
    let pages = (0..=last)
        .map(|r| page_unchecked(fc, r))
        .collect::<Result<Vec<_>>>()?;
    let einf = pages[last].clone();
    let stabilized_at = (0..=last)
        .find(|&r| pages[r..].iter().all(|pg| pg.same_dims(&einf)))
        .unwrap_or(last);
    let total_cohomology = cohomology(&fc.complex)?.dims().to_vec();
    let sums = einf.total_by_degree(total_cohomology.len());
    if let Some(degree) = (0..sums.len()).find(|&n| sums[n] != total_cohomology[n]) {
        return Err(Error::AuditFailure {
            degree,
            einf: sums[degree],
            cohomology: total_cohomology[degree],
        });
    }
    Ok(PageTable {
        pages,
        stabilized_at,
        einf,
        total_cohomology,
    })
}

/// `base ⊗ fibre` with `D = d_base ⊗ 1 + (−1)^p 1 ⊗ d_fibre`, filtered by
/// base degree. Degree `n` is ordered by base degree `p`, then base index,
/// then fibre index.
#[derive(Clone, Debug)]
pub struct ProductModel {
    filtered: FilteredComplex,
    base: CochainComplex,
    fibre: CochainComplex,
    relative: Option<RelativeComplex>,
    /// `offsets[n][p]`: start of the `(p, n−p)` block, `None` if empty
    offsets: Vec<Vec<Option<usize>>>,
}

impl ProductModel {
    pub fn filtered(&self) -> &FilteredComplex {
        &self.filtered
    }

    pub fn into_filtered(self) -> FilteredComplex {
        self.filtered
    }

    pub fn base(&self) -> &CochainComplex {
        &self.base
    }

    pub fn fibre(&self) -> &CochainComplex {
        &self.fibre
    }

    /// Present when the fibre came from a relative Chevalley–Eilenberg complex.
    pub fn relative(&self) -> Option<&RelativeComplex> {
        self.relative.as_ref()
    }

    /// Index of `b_i ⊗ f_j` with `b_i ∈ C^p(base)`, `f_j ∈ C^q(fibre)`.
    pub fn index(&self, p: usize, q: usize, i: usize, j: usize) -> Option<usize> {
        let off = (*self.offsets.get(p + q)?.get(p)?)?;
        Some(off + i * self.fibre.dim(q) + j)
    }
}

/// Tensor product of two complexes, filtered by the degree of the first.
pub fn tensor_product(base: &CochainComplex, fibre: &CochainComplex) -> Result<ProductModel> {
    base.check_d_squared()?;
    fibre.check_d_squared()?;
    let top = base.top_degree() + fibre.top_degree();
    let mut dims = vec![0; top + 1];
    let mut weights = vec![Vec::new(); top + 1];
    let mut offsets = vec![Vec::new(); top + 1];
    for n in 0..=top {
        for p in 0..=n {
            let size = base.dim(p) * fibre.dim(n - p);
            if size == 0 {
                offsets[n].push(None);
                continue;
            }
            offsets[n].push(Some(dims[n]));
            dims[n] += size;
            weights[n].extend(std::iter::repeat_n(p, size));
        }
    }
    let mut diffs = Vec::with_capacity(top);
    for n in 0..top {
        let mut d = RationalMatrix::zeros(dims[n + 1], dims[n]);
        for p in 0..=n {
            let q = n - p;
            let Some(src) = offsets[n][p] else { continue };
            if let Some(Some(dst)) = offsets[n + 1].get(p + 1) {
                let block = base.differential(p).kron(&RationalMatrix::identity(fibre.dim(q)));
                paste(&mut d, *dst, src, &block, &Rational::from_integer(1.into()));
            }
            if let Some(Some(dst)) = offsets[n + 1].get(p) {
                let block = RationalMatrix::identity(base.dim(p)).kron(&fibre.differential(q));
                let sign = if p % 2 == 0 { 1 } else { -1 };
                paste(&mut d, *dst, src, &block, &Rational::from_integer(sign.into()));
            }
        }
        diffs.push(d);
    }
    let name = format!("{} ⊗ {}", base.name(), fibre.name());
    let complex = CochainComplex::new(name, dims, diffs)?;
    Ok(ProductModel {
        filtered: FilteredComplex::new(complex, weights)?,
        base: base.clone(),
        fibre: fibre.clone(),
        relative: None,
        offsets,
    })
}

fn paste(m: &mut RationalMatrix, row: usize, col: usize, block: &RationalMatrix, c: &Rational) {
    for i in 0..block.rows() {
        for j in 0..block.cols() {
            let x = block.get(i, j);
            if !num_traits::Zero::is_zero(x) {
                m.add_to(row + i, col + j, &(x * c));
            }
        }
    }
}

/// `base ⊗ Ω(𝔤, 𝔥)`; pass [`Subalgebra::zero`] for the absolute complex.
pub fn product_model(base: &CochainComplex, h: &Subalgebra) -> Result<ProductModel> {
    let rel = relative_subcomplex(h)?;
    let mut model = tensor_product(base, &rel.restricted())?;
    model.relative = Some(rel);
    Ok(model)
}

/// A finite group acting degree-wise on a complex: `generators[g][n]`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DeckAction {
    generators: Vec<Vec<RationalMatrix>>,
}

impl DeckAction {
    pub fn new(generators: Vec<Vec<RationalMatrix>>) -> Self {
        Self { generators }
    }

    pub fn generators(&self) -> &[Vec<RationalMatrix>] {
        &self.generators
    }

    /// Shapes match, every generator commutes with `d` and preserves the filtration.
    pub fn validate(&self, fc: &FilteredComplex) -> Result<()> {
        let c = &fc.complex;
        for (g, mats) in self.generators.iter().enumerate() {
            if mats.len() != c.dims().len() {
                return Err(Error::InvalidAction(format!(
                    "generator {} has {} matrices for {} degrees",
                    g + 1,
                    mats.len(),
                    c.dims().len()
                )));
            }
            for (n, a) in mats.iter().enumerate() {
                if a.rows() != c.dim(n) || a.cols() != c.dim(n) {
                    return Err(Error::InvalidAction(format!(
                        "generator {} in degree {n} is {}x{}, expected {}x{}",
                        g + 1,
                        a.rows(),
                        a.cols(),
                        c.dim(n),
                        c.dim(n)
                    )));
                }
                for p in 0..=fc.max_weight() {
                    let f = fc.filtration_subspace(n, p);
                    if !f.image_under(a)?.is_subspace_of(&f) {
                        return Err(Error::InvalidAction(format!(
                            "generator {} does not preserve F^{p} in degree {n}",
                            g + 1
                        )));
                    }
                }
            }
            for n in 0..c.top_degree() {
                let d = c.differential(n);
                if mats[n + 1].mul(&d)? != d.mul(&mats[n])? {
                    return Err(Error::InvalidAction(format!(
                        "generator {} does not commute with d in degree {n}",
                        g + 1
                    )));
                }
            }
        }
        Ok(())
    }
}

/// The invariant subcomplex together with its inclusion into the original.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct InvariantSubcomplex {
    pub filtered: FilteredComplex,
    /// `inclusion[n]`: columns are the chosen basis of the invariants in `C^n`
    pub inclusion: Vec<RationalMatrix>,
}

/// `{x : g x = x for all g}` in a filtration-adapted basis: the basis of
/// `V ∩ F^p` extends that of `V ∩ F^{p+1}` by vectors of weight `p`.
pub fn invariant_subcomplex(
    fc: &FilteredComplex,
    action: &DeckAction,
    bound: usize,
) -> Result<InvariantSubcomplex> {
    fc.require_valid()?;
    action.validate(fc)?;
    let c = &fc.complex;
    let mut bases = Vec::with_capacity(c.dims().len());
    let mut weights = Vec::with_capacity(c.dims().len());
    for n in 0..c.dims().len() {
        let mats: Vec<RationalMatrix> = action.generators.iter().map(|g| g[n].clone()).collect();
        let v = fixed_subspace(c.dim(n), &mats, bound)?;
        let mut basis: Vec<Vec<Rational>> = Vec::new();
        let mut w = Vec::new();
        let mut above = SubspaceBasis::zero(c.dim(n));
        for p in (0..=fc.max_weight()).rev() {
            let here = intersect(&v, &fc.filtration_subspace(n, p))?;
            for x in here.complement_of(&above)? {
                basis.push(x);
                w.push(p);
            }
            above = here;
        }
        bases.push(basis);
        weights.push(w);
    }
    let dims: Vec<usize> = bases.iter().map(Vec::len).collect();
    let inclusion: Vec<RationalMatrix> = bases
        .iter()
        .enumerate()
        .map(|(n, b)| RationalMatrix::from_columns(c.dim(n), b))
        .collect();
    let mut diffs = Vec::with_capacity(dims.len().saturating_sub(1));
    for n in 0..c.top_degree() {
        let target = SubspaceBasis::from_independent(c.dim(n + 1), bases[n + 1].clone())?;
        let d = c.differential(n);
        let cols = bases[n]
            .iter()
            .map(|x| {
                let y = d.mul_vec(x)?;
                coordinates_in(&bases[n + 1], &target, &y)
            })
            .collect::<Result<Vec<_>>>()?;
        diffs.push(RationalMatrix::from_columns(dims[n + 1], &cols));
    }
    let name = format!("{}^inv", c.name());
    let complex = CochainComplex::new(name, dims, diffs)?;
    Ok(InvariantSubcomplex {
        filtered: FilteredComplex::new(complex, weights)?,
        inclusion,
    })
}

/// Coordinates of `y` in the (non-echelon) basis `basis` spanning `span`.
fn coordinates_in(basis: &[Vec<Rational>], span: &SubspaceBasis, y: &[Rational]) -> Result<Vec<Rational>> {
    if !span.contains(y) {
        return Err(Error::InvalidAction("invariant subspace is not d-closed".into()));
    }
    let m = RationalMatrix::from_columns(span.ambient_dim(), basis);
    crate::exactla::solve(&m, y)?
        .ok_or_else(|| Error::InvalidAction("invariant subspace is not d-closed".into()))
}

/// The diagonal action `A_p ⊗ B_q` on a product model, one generator.
pub fn diagonal_action(
    model: &ProductModel,
    base_action: &[RationalMatrix],
    fibre_action: &[RationalMatrix],
) -> Result<Vec<RationalMatrix>> {
    let (base, fibre) = (&model.base, &model.fibre);
    if base_action.len() != base.dims().len() || fibre_action.len() != fibre.dims().len() {
        return Err(Error::InvalidAction(
            "action needs one matrix per degree of base and fibre".into(),
        ));
    }
    for (n, a) in base_action.iter().enumerate() {
        if a.rows() != base.dim(n) || !a.is_square() {
            return Err(Error::InvalidAction(format!("base action in degree {n} has wrong shape")));
        }
    }
    for (n, a) in fibre_action.iter().enumerate() {
        if a.rows() != fibre.dim(n) || !a.is_square() {
            return Err(Error::InvalidAction(format!("fibre action in degree {n} has wrong shape")));
        }
    }
    for n in 0..base.top_degree() {
        let d = base.differential(n);
        if base_action[n + 1].mul(&d)? != d.mul(&base_action[n])? {
            return Err(Error::InvalidAction(format!(
                "base action does not commute with d in degree {n}"
            )));
        }
    }
    let c = model.filtered.complex();
    let mut out = Vec::with_capacity(c.dims().len());
    for n in 0..c.dims().len() {
        let mut m = RationalMatrix::zeros(c.dim(n), c.dim(n));
        for p in 0..=n {
            if let Some(Some(off)) = model.offsets[n].get(p) {
                let block = base_action[p].kron(&fibre_action[n - p]);
                paste(&mut m, *off, *off, &block, &Rational::from_integer(1.into()));
            }
        }
        out.push(m);
    }
    Ok(out)
}

/// The action of `a` on the relative fibre of `model`, in relative coordinates.
pub fn relative_action(model: &ProductModel, a: &LieAutomorphism) -> Result<Vec<RationalMatrix>> {
    let rel = model
        .relative
        .as_ref()
        .ok_or_else(|| Error::InvalidAction("fibre is not a relative complex".into()))?;
    if a.algebra().as_ref() != rel.ce().algebra().as_ref() {
        return Err(Error::InvalidAction(format!(
            "{} is an automorphism of another algebra",
            a.name()
        )));
    }
    if !a.preserves(rel.subalgebra().basis()) {
        return Err(Error::InvalidAction(format!(
            "{} does not preserve {}",
            a.name(),
            rel.subalgebra().name()
        )));
    }
    rel.spaces()
        .iter()
        .enumerate()
        .map(|(k, space)| {
            let m = induced_on_forms(a, k)?;
            let cols = space
                .vectors()
                .iter()
                .map(|v| {
                    space.coordinates(&m.mul_vec(v)?).ok_or_else(|| {
                        Error::InvalidAction(format!("{} does not act on Ω^{k}", a.name()))
                    })
                })
                .collect::<Result<Vec<_>>>()?;
            Ok(RationalMatrix::from_columns(space.dim(), &cols))
        })
        .collect()
}

/// Invariants of a product model under the diagonal ℤ-action generated by
/// `base_action ⊗ Λ(a^{-T})`.
pub fn twist_by_deck(
    model: &ProductModel,
    base_action: &[RationalMatrix],
    coeff_action: &LieAutomorphism,
    bound: usize,
) -> Result<InvariantSubcomplex> {
    let fibre_action = relative_action(model, coeff_action)?;
    let gen = diagonal_action(model, base_action, &fibre_action)?;
    invariant_subcomplex(&model.filtered, &DeckAction::new(vec![gen]), bound)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactla::DEFAULT_GROUP_BOUND;
    use crate::liealg::library;
    use std::sync::Arc;

    fn two_step(weights: [usize; 2]) -> FilteredComplex {
        let c = CochainComplex::new("x→y", vec![1, 1], vec![RationalMatrix::identity(1)]).unwrap();
        FilteredComplex::new(c, vec![vec![weights[0]], vec![weights[1]]]).unwrap()
    }

    #[test]
    fn validate_reports_witness() {
        assert!(two_step([0, 1]).validate().is_ok());
        assert_eq!(
            two_step([1, 0]).validate(),
            FiltrationVerdict::LowersFiltration {
                degree: 0,
                source: 0,
                source_weight: 1,
                target: 0,
                target_weight: 0
            }
        );
        let zero = CochainComplex::with_zero_differential("z", vec![2, 3]);
        let fc = FilteredComplex::new(zero, vec![vec![3, 0], vec![1, 2, 0]]).unwrap();
        assert!(fc.validate().is_ok());
    }

    #[test]
    fn two_step_pages() {
        // x (weight 0) ↦ y (weight 1): E₀ = E₁ has both, d₁ kills them.
        let fc = two_step([0, 1]);
        for r in 0..=1 {
            let pg = page(&fc, r).unwrap();
            assert_eq!(pg.dim(0, 0), 1);
            assert_eq!(pg.dim(1, 0), 1);
        }
        assert!(page(&fc, 2).unwrap().entries().is_empty());
        let t = run_to_stabilization(&fc).unwrap();
        assert_eq!(t.stabilized_at, 2);
        // same weights: d₀ is an isomorphism already
        let flat = two_step([0, 0]);
        assert_eq!(page(&flat, 0).unwrap().entries().len(), 2);
        assert!(page(&flat, 1).unwrap().entries().is_empty());
    }

    #[test]
    fn trivial_filtration_collapses_at_e1() {
        let fc = models::hopf_model();
        let trivial = FilteredComplex::trivial(fc.complex().clone());
        let t = run_to_stabilization(&trivial).unwrap();
        assert!(t.stabilized_at <= 1);
        let e1 = t.page(1).unwrap();
        assert!(e1.entries().iter().all(|e| e.p == 0));
        assert_eq!(e1.total_by_degree(4), vec![1, 0, 0, 1]);
    }

    #[test]
    fn hopf_model_has_a_d2() {
        let t = run_to_stabilization(&models::hopf_model()).unwrap();
        let e2 = t.page(2).unwrap();
        assert_eq!(e2.dim(0, 1), 1);
        assert_eq!(e2.dim(2, 0), 1);
        assert_eq!(t.einf_by_degree(), vec![1, 0, 0, 1]);
        assert_eq!(t.stabilized_at, 3);
    }

    #[test]
    fn product_with_point_is_ce_complex() {
        let g = Arc::new(library::su2());
        let m = product_model(&models::point(), &Subalgebra::zero(g.clone())).unwrap();
        let ce = crate::ceforms::ce_differential(&g).unwrap().to_cochain_complex();
        assert_eq!(m.filtered().complex().dims(), ce.dims());
        assert_eq!(m.filtered().complex().differentials(), ce.differentials());
    }

    #[test]
    fn circle_times_su2() {
        let g = Arc::new(library::su2());
        let m = product_model(&models::circle(), &Subalgebra::zero(g)).unwrap();
        let t = run_to_stabilization(m.filtered()).unwrap();
        assert_eq!(t.total_cohomology, vec![1, 1, 0, 1, 1]);
        let e2 = t.page(2).unwrap();
        for p in 0..2 {
            for q in [0, 3] {
                assert_eq!(e2.dim(p, q), 1);
            }
        }
        assert_eq!(e2.entries().len(), 4);
        assert!(t.stabilized_at <= 2);
    }

    #[test]
    fn sphere_times_sphere() {
        let (_, h, _) = library::so_pair(2);
        let m = product_model(&models::sphere(2), &h).unwrap();
        let t = run_to_stabilization(m.filtered()).unwrap();
        assert_eq!(t.total_cohomology, vec![1, 0, 2, 0, 1]);
    }

    #[test]
    fn antipodal_twist() {
        let (base, swap) = models::circle_double_cover();
        let (_, h, refl) = library::so_pair(2);
        let m = product_model(&base, &h).unwrap();
        let twisted = twist_by_deck(&m, &swap, &refl, DEFAULT_GROUP_BOUND).unwrap();
        let t = run_to_stabilization(&twisted.filtered).unwrap();
        assert_eq!(t.total_cohomology, vec![1, 1, 0, 0]);
        let id = LieAutomorphism::identity(h.parent().clone());
        let plain = twist_by_deck(&m, &swap, &id, DEFAULT_GROUP_BOUND).unwrap();
        let t = run_to_stabilization(&plain.filtered).unwrap();
        assert_eq!(t.total_cohomology, vec![1, 1, 1, 1]);
    }

    #[test]
    fn trivial_twist_is_identity() {
        let (_, h, _) = library::su2_circle();
        let m = product_model(&models::circle(), &h).unwrap();
        let base_id: Vec<RationalMatrix> =
            m.base().dims().iter().map(|&d| RationalMatrix::identity(d)).collect();
        let id = LieAutomorphism::identity(h.parent().clone());
        let inv = twist_by_deck(&m, &base_id, &id, DEFAULT_GROUP_BOUND).unwrap();
        assert_eq!(inv.filtered.complex().dims(), m.filtered().complex().dims());
        assert_eq!(
            run_to_stabilization(&inv.filtered).unwrap().total_cohomology,
            run_to_stabilization(m.filtered()).unwrap().total_cohomology
        );
    }

    #[test]
    fn twist_rejects_non_normalizing_automorphism() {
        let (g, h, _) = library::su2_circle();
        // cyclic permutation e1→e2→e3→e1 is an automorphism moving span{e3}
        let p = RationalMatrix::from_ints(3, 3, &[0, 0, 1, 1, 0, 0, 0, 1, 0]);
        let a = LieAutomorphism::new("cyc", g, p).unwrap();
        let m = product_model(&models::point(), &h).unwrap();
        assert!(matches!(
            twist_by_deck(&m, &[RationalMatrix::identity(1)], &a, DEFAULT_GROUP_BOUND),
            Err(Error::InvalidAction(_))
        ));
    }

    #[test]
    fn action_must_commute_with_d() {
        let (base, _) = models::circle_double_cover();
        let (_, h, refl) = library::so_pair(2);
        let m = product_model(&base, &h).unwrap();
        let bad = vec![
            RationalMatrix::identity(2),
            RationalMatrix::from_ints(2, 2, &[0, 1, 1, 0]),
        ];
        assert!(twist_by_deck(&m, &bad, &refl, DEFAULT_GROUP_BOUND).is_err());
    }
}
