//! The exterior algebra Λ•𝔤*, the Chevalley–Eilenberg differential and the
//! relative subcomplex Ω•(𝔤, 𝔥).
//!
//! Λᵏ𝔤* has the basis `e^I = e^{i_1} ∧ … ∧ e^{i_k}` over strictly increasing
//! multi-indices `I`, enumerated lexicographically. All matrices in this
//! module are written in that basis.
//!
//! The differential is fixed on generators by
//! `d e^k = −Σ_{i<j} c^k_{ij} e^i ∧ e^j` and extended as an antiderivation,
//! which agrees with the invariant formula
//! `dα(X_0,…,X_n) = Σ_{0≤i<j≤n} (−1)^{i+j} α([X_i,X_j], X_0,…,X̂_i,…,X̂_j,…,X_n)`.

use std::sync::Arc;

use num_traits::{One, Zero};

use crate::complex::CochainComplex;
use crate::error::{Error, Result};
use crate::exactla::{
    axpy, is_zero_vec, kernel_basis, zero_vec, Rational, RationalMatrix, SubspaceBasis,
};
use crate::liealg::{LieAlgebra, LieAutomorphism, Subalgebra};

pub fn binomial(n: usize, k: usize) -> usize {
    if k > n {
        return 0;
    }
    let k = k.min(n - k);
    (0..k).fold(1usize, |acc, i| acc * (n - i) / (i + 1))
}

/// A strictly increasing list of 0-based basis indices.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct MultiIndex(Vec<usize>);

impl MultiIndex {
    pub fn new(indices: Vec<usize>, dim: usize) -> Result<Self> {
        if indices.windows(2).any(|w| w[0] >= w[1]) {
            return Err(Error::Malformed(format!(
                "multi-index {indices:?} is not strictly increasing"
            )));
        }
        if indices.last().is_some_and(|&i| i >= dim) {
            return Err(Error::Malformed(format!(
                "multi-index {indices:?} exceeds dimension {dim}"
            )));
        }
        Ok(Self(indices))
    }

    pub fn indices(&self) -> &[usize] {
        &self.0
    }

    pub fn degree(&self) -> usize {
        self.0.len()
    }

    /// Position of this multi-index in the lexicographic basis of Λᵏ over `dim`.
    pub fn rank(&self, dim: usize) -> usize {
        lex_rank(dim, &self.0)
    }

    pub fn unrank(dim: usize, k: usize, rank: usize) -> Self {
        Self(lex_unrank(dim, k, rank))
    }
}

fn lex_rank(n: usize, idx: &[usize]) -> usize {
    let k = idx.len();
    let mut r = 0;
    let mut start = 0;
    for (pos, &c) in idx.iter().enumerate() {
        for j in start..c {
            r += binomial(n - 1 - j, k - 1 - pos);
        }
        start = c + 1;
    }
    r
}

fn lex_unrank(n: usize, k: usize, mut r: usize) -> Vec<usize> {
    let mut out = Vec::with_capacity(k);
    let mut j = 0;
    for pos in 0..k {
        loop {
            let block = binomial(n - 1 - j, k - 1 - pos);
            if r < block {
                break;
            }
            r -= block;
            j += 1;
        }
        out.push(j);
        j += 1;
    }
    out
}

/// All multi-indices of size `k` in `0..n`, lexicographic.
pub fn multi_indices(n: usize, k: usize) -> Vec<MultiIndex> {
    (0..binomial(n, k)).map(|r| MultiIndex::unrank(n, k, r)).collect()
}

/// Sorts `idx` in place; returns the sign of the sorting permutation, or
/// `None` when an index repeats.
pub fn sort_with_sign(idx: &mut [usize]) -> Option<i32> {
    let mut sign = 1;
    for i in 1..idx.len() {
        let mut j = i;
        while j > 0 && idx[j - 1] > idx[j] {
            idx.swap(j - 1, j);
            sign = -sign;
            j -= 1;
        }
    }
    if idx.windows(2).any(|w| w[0] == w[1]) {
        None
    } else {
        Some(sign)
    }
}

/// An element of Λᵏ of a `dim`-dimensional dual space.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ExteriorForm {
    dim: usize,
    degree: usize,
    coeffs: Vec<Rational>,
}

impl ExteriorForm {
    pub fn zero(dim: usize, degree: usize) -> Self {
        Self {
            dim,
            degree,
            coeffs: zero_vec(binomial(dim, degree)),
        }
    }

    pub fn from_coeffs(dim: usize, degree: usize, coeffs: Vec<Rational>) -> Result<Self> {
        if coeffs.len() != binomial(dim, degree) {
            return Err(Error::DimensionMismatch(format!(
                "{} coefficients for Λ^{degree} of a {dim}-dimensional space",
                coeffs.len()
            )));
        }
        Ok(Self { dim, degree, coeffs })
    }

    /// `e^{i_1} ∧ … ∧ e^{i_k}` for arbitrary (unsorted, 0-based) indices.
    pub fn monomial(dim: usize, indices: &[usize]) -> Result<Self> {
        if indices.iter().any(|&i| i >= dim) {
            return Err(Error::Malformed(format!("index out of range in {indices:?}")));
        }
        let mut out = Self::zero(dim, indices.len());
        let mut idx = indices.to_vec();
        if let Some(s) = sort_with_sign(&mut idx) {
            out.coeffs[lex_rank(dim, &idx)] = Rational::from_integer(s.into());
        }
        Ok(out)
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn coeffs(&self) -> &[Rational] {
        &self.coeffs
    }

    pub fn into_coeffs(self) -> Vec<Rational> {
        self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        is_zero_vec(&self.coeffs)
    }

    pub fn add(&self, other: &Self) -> Result<Self> {
        if self.dim != other.dim || self.degree != other.degree {
            return Err(Error::DimensionMismatch("adding forms of different type".into()));
        }
        Ok(Self {
            dim: self.dim,
            degree: self.degree,
            coeffs: self.coeffs.iter().zip(&other.coeffs).map(|(a, b)| a + b).collect(),
        })
    }

    pub fn scale(&self, c: &Rational) -> Self {
        Self {
            dim: self.dim,
            degree: self.degree,
            coeffs: self.coeffs.iter().map(|x| x * c).collect(),
        }
    }

    fn terms(&self) -> impl Iterator<Item = (Vec<usize>, &Rational)> {
        self.coeffs
            .iter()
            .enumerate()
            .filter(|(_, c)| !c.is_zero())
            .map(|(r, c)| (lex_unrank(self.dim, self.degree, r), c))
    }

    pub fn wedge(&self, other: &Self) -> Result<Self> {
        if self.dim != other.dim {
            return Err(Error::DimensionMismatch(format!(
                "wedge of forms over dimensions {} and {}",
                self.dim, other.dim
            )));
        }
        let mut out = Self::zero(self.dim, self.degree + other.degree);
        if out.coeffs.is_empty() {
            return Ok(out);
        }
        let rhs: Vec<_> = other.terms().collect();
        for (a, ca) in self.terms() {
            for (b, cb) in &rhs {
                let mut idx = a.clone();
                idx.extend_from_slice(b);
                if let Some(s) = sort_with_sign(&mut idx) {
                    let c = ca * *cb;
                    let r = lex_rank(self.dim, &idx);
                    if s > 0 {
                        out.coeffs[r] += c;
                    } else {
                        out.coeffs[r] -= c;
                    }
                }
            }
        }
        Ok(out)
    }

    /// Interior product `ι_x` of this form.
    pub fn contract(&self, x: &[Rational]) -> Result<Self> {
        if self.degree == 0 {
            return Err(Error::DegreeZeroContraction);
        }
        if x.len() != self.dim {
            return Err(Error::DimensionMismatch("contracting vector length".into()));
        }
        let m = contraction_matrix(self.dim, self.degree, x)?;
        Self::from_coeffs(self.dim, self.degree - 1, m.mul_vec(&self.coeffs)?)
    }
}

/// Matrix of `ι_x : Λᵏ → Λᵏ⁻¹` (`k ≥ 1`).
pub fn contraction_matrix(dim: usize, k: usize, x: &[Rational]) -> Result<RationalMatrix> {
    if k == 0 {
        return Err(Error::DegreeZeroContraction);
    }
    let mut m = RationalMatrix::zeros(binomial(dim, k - 1), binomial(dim, k));
    for (col, idx) in multi_indices(dim, k).iter().enumerate() {
        for (r, &j) in idx.indices().iter().enumerate() {
            if x[j].is_zero() {
                continue;
            }
            let mut rest = idx.indices().to_vec();
            rest.remove(r);
            let c = if r % 2 == 0 { x[j].clone() } else { -x[j].clone() };
            m.add_to(lex_rank(dim, &rest), col, &c);
        }
    }
    Ok(m)
}

/// The Chevalley–Eilenberg complex `(Λ•𝔤*, d_𝔤)`.
#[derive(Clone, Debug)]
pub struct CeComplex {
    algebra: Arc<LieAlgebra>,
    /// `differentials[k] : Λᵏ → Λᵏ⁺¹`, `k = 0..dim`
    differentials: Vec<RationalMatrix>,
}

impl CeComplex {
    pub fn algebra(&self) -> &Arc<LieAlgebra> {
        &self.algebra
    }

    pub fn dim(&self) -> usize {
        self.algebra.dim()
    }

    /// `d_k : Λᵏ → Λᵏ⁺¹`; for `k ≥ dim` the zero map out of Λᵏ.
    pub fn differential(&self, k: usize) -> RationalMatrix {
        self.differentials.get(k).cloned().unwrap_or_else(|| {
            RationalMatrix::zeros(binomial(self.dim(), k + 1), binomial(self.dim(), k))
        })
    }

    pub fn differentials(&self) -> &[RationalMatrix] {
        &self.differentials
    }

    pub fn d(&self, form: &ExteriorForm) -> Result<ExteriorForm> {
        if form.dim() != self.dim() {
            return Err(Error::DimensionMismatch("form over another algebra".into()));
        }
        let k = form.degree();
        ExteriorForm::from_coeffs(self.dim(), k + 1, self.differential(k).mul_vec(form.coeffs())?)
    }

    pub fn to_cochain_complex(&self) -> CochainComplex {
        let n = self.dim();
        let dims = (0..=n).map(|k| binomial(n, k)).collect();
        let diffs = self.differentials[..n].to_vec();
        CochainComplex::new(format!("CE({})", self.algebra.name()), dims, diffs)
            .expect("shapes are consistent")
    }
}

/// Builds `d_𝔤` in every degree and checks `d² = 0`.
pub fn ce_differential(g: &Arc<LieAlgebra>) -> Result<CeComplex> {
    if let crate::liealg::JacobiVerdict::Violation { triple, .. } = g.jacobi_check() {
        return Err(Error::JacobiFailure { triple });
    }
    let n = g.dim();
    // d e^k as a list of (i, j, coefficient) with i < j
    let gens: Vec<Vec<(usize, usize, Rational)>> = (0..n)
        .map(|k| {
            let mut terms = Vec::new();
            for i in 0..n {
                for j in i + 1..n {
                    let c = &g.structure_constants(i, j)[k];
                    if !c.is_zero() {
                        terms.push((i, j, -c.clone()));
                    }
                }
            }
            terms
        })
        .collect();
    let mut differentials = Vec::with_capacity(n);
    for k in 0..n {
        let mut m = RationalMatrix::zeros(binomial(n, k + 1), binomial(n, k));
        for (col, idx) in multi_indices(n, k).iter().enumerate() {
            let idx = idx.indices();
            for (r, &slot) in idx.iter().enumerate() {
                for (i, j, c) in &gens[slot] {
                    let mut new_idx = Vec::with_capacity(k + 1);
                    new_idx.extend_from_slice(&idx[..r]);
                    new_idx.push(*i);
                    new_idx.push(*j);
                    new_idx.extend_from_slice(&idx[r + 1..]);
                    if let Some(s) = sort_with_sign(&mut new_idx) {
                        // antiderivation sign (−1)^r for passing d across r generators
                        let neg = (s < 0) != (r % 2 == 1);
                        let term = if neg { -c.clone() } else { c.clone() };
                        m.add_to(lex_rank(n, &new_idx), col, &term);
                    }
                }
            }
        }
        differentials.push(m);
    }
    for k in 0..n.saturating_sub(1) {
        if !differentials[k + 1].mul(&differentials[k])?.is_zero() {
            return Err(Error::NotAComplex { degree: k });
        }
    }
    Ok(CeComplex {
        algebra: Arc::clone(g),
        differentials,
    })
}

/// Ω•(𝔤, 𝔥) as subspaces of Λ•𝔤*.
#[derive(Clone, Debug)]
pub struct RelativeComplex {
    ce: CeComplex,
    subalgebra: Subalgebra,
    /// `spaces[k] ⊆ Λᵏ`, truncated after the last nonzero degree
    spaces: Vec<SubspaceBasis>,
}

impl RelativeComplex {
    pub fn ce(&self) -> &CeComplex {
        &self.ce
    }

    pub fn subalgebra(&self) -> &Subalgebra {
        &self.subalgebra
    }

    pub fn spaces(&self) -> &[SubspaceBasis] {
        &self.spaces
    }

    pub fn top_degree(&self) -> usize {
        self.spaces.len() - 1
    }

    /// The complex in the coordinates of the canonical bases of `spaces`.
    pub fn restricted(&self) -> CochainComplex {
        let dims: Vec<usize> = self.spaces.iter().map(SubspaceBasis::dim).collect();
        let mut diffs = Vec::new();
        for k in 0..self.top_degree() {
            let d = self.ce.differential(k);
            let (src, dst) = (&self.spaces[k], &self.spaces[k + 1]);
            let mut m = RationalMatrix::zeros(dst.dim(), src.dim());
            for (j, v) in src.vectors().iter().enumerate() {
                let img = d.mul_vec(v).expect("dims");
                let c = dst.coordinates(&img).expect("subcomplex is d-closed");
                for (i, x) in c.into_iter().enumerate() {
                    m.set(i, j, x);
                }
            }
            diffs.push(m);
        }
        let name = format!("Ω({}, {})", self.ce.algebra().name(), self.subalgebra.name());
        CochainComplex::new(name, dims, diffs).expect("shapes are consistent")
    }
}

fn stacked_contractions(dim: usize, k: usize, h: &SubspaceBasis) -> Result<RationalMatrix> {
    let blocks = h
        .vectors()
        .iter()
        .map(|x| contraction_matrix(dim, k, x))
        .collect::<Result<Vec<_>>>()?;
    RationalMatrix::vstack(binomial(dim, k), &blocks)
}

/// Ω^k = {ω ∈ Λᵏ : ι_X ω = 0 and ι_X dω = 0 for X ∈ 𝔥}.
pub fn relative_subcomplex(h: &Subalgebra) -> Result<RelativeComplex> {
    h.require_valid()?;
    let g = h.parent();
    let ce = ce_differential(g)?;
    let n = g.dim();
    let hb = h.basis();
    // horizontal forms: killed by every ι_X
    let horizontal: Vec<SubspaceBasis> = (0..=n)
        .map(|k| {
            if k == 0 || hb.is_zero() {
                Ok(SubspaceBasis::full(binomial(n, k)))
            } else {
                Ok(kernel_basis(&stacked_contractions(n, k, hb)?))
            }
        })
        .collect::<Result<_>>()?;
    let mut spaces = Vec::with_capacity(n + 1);
    for k in 0..=n {
        let space = if k == n || hb.is_zero() {
            horizontal[k].clone()
        } else {
            let cond = stacked_contractions(n, k + 1, hb)?.mul(&ce.differential(k))?;
            horizontal[k].kernel_within(&cond)?
        };
        spaces.push(space);
    }
    for k in 0..n {
        let img = spaces[k].image_under(&ce.differential(k))?;
        if !img.is_subspace_of(&spaces[k + 1]) {
            return Err(Error::NotAComplex { degree: k });
        }
    }
    while spaces.len() > 1 && spaces.last().is_some_and(SubspaceBasis::is_zero) {
        spaces.pop();
    }
    Ok(RelativeComplex {
        ce,
        subalgebra: h.clone(),
        spaces,
    })
}

/// Λᵏ of the inverse transpose of `a`: the induced action on k-forms.
pub fn induced_on_forms(a: &LieAutomorphism, k: usize) -> Result<RationalMatrix> {
    a.require_valid()?;
    let inv_t = a
        .matrix()
        .inverse()
        .expect("automorphisms are invertible")
        .transpose();
    Ok(exterior_power(&inv_t, k))
}

/// Λᵏ(M): the matrix of k×k minors in the lexicographic multi-index basis.
pub fn exterior_power(m: &RationalMatrix, k: usize) -> RationalMatrix {
    let n = m.rows();
    let idx = multi_indices(n, k);
    let mut out = RationalMatrix::zeros(idx.len(), idx.len());
    if k == 0 {
        out.set(0, 0, Rational::one());
        return out;
    }
    for (r, rows) in idx.iter().enumerate() {
        for (c, cols) in idx.iter().enumerate() {
            let minor = m.submatrix(rows.indices(), cols.indices());
            out.set(r, c, minor.determinant().expect("square minor"));
        }
    }
    out
}

/// Induced action of `a` in every degree `0..=dim`, checked to commute with `d_𝔤`.
pub fn induced_action(ce: &CeComplex, a: &LieAutomorphism) -> Result<Vec<RationalMatrix>> {
    let n = ce.dim();
    let mats = (0..=n)
        .map(|k| induced_on_forms(a, k))
        .collect::<Result<Vec<_>>>()?;
    for k in 0..n {
        let d = ce.differential(k);
        if mats[k + 1].mul(&d)? != d.mul(&mats[k])? {
            return Err(Error::InvalidAction(format!(
                "induced action of {} does not commute with d in degree {k}",
                a.name()
            )));
        }
    }
    Ok(mats)
}

/// Embeds the coordinates of a relative cochain back into Λᵏ.
pub fn lift(space: &SubspaceBasis, coords: &[Rational]) -> Vec<Rational> {
    let mut v = zero_vec(space.ambient_dim());
    for (c, b) in coords.iter().zip(space.vectors()) {
        axpy(&mut v, c, b);
    }
    v
}
