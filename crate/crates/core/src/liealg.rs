//! Lie algebras given by structure constants, their subalgebras and
//! automorphisms.
//!
//! Basis indices are 0-based throughout the Rust API. The JSON input format
//! and human-readable reports use 1-based indices (`e1, e2, …`).

pub mod library;

use std::sync::Arc;

use num_traits::Zero;

use crate::error::{Error, Result};
use crate::exactla::{
    axpy, is_zero_vec, kernel_basis, rank, unit_vec, zero_vec, Rational, RationalMatrix,
    SubspaceBasis,
};

/// A finite-dimensional Lie algebra over ℚ.
///
/// Only the brackets `[e_i, e_j]` with `i < j` are stored; the others follow
/// from antisymmetry.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LieAlgebra {
    name: String,
    dim: usize,
    brackets: Vec<Vec<Rational>>,
}

fn pair_index(dim: usize, i: usize, j: usize) -> usize {
    debug_assert!(i < j && j < dim);
    // pairs (0,1),(0,2),…,(0,d-1),(1,2),…
    i * dim - i * (i + 1) / 2 + (j - i - 1)
}

impl LieAlgebra {
    /// Builds an algebra from `(i, j, [e_i, e_j])` triples. Pairs with
    /// `i > j` are stored negated; unspecified pairs bracket to zero.
    pub fn new(
        name: impl Into<String>,
        dim: usize,
        entries: impl IntoIterator<Item = (usize, usize, Vec<Rational>)>,
    ) -> Result<Self> {
        let npairs = dim * dim.saturating_sub(1) / 2;
        let mut brackets = vec![zero_vec(dim); npairs];
        let mut seen = vec![false; npairs];
        for (i, j, coeffs) in entries {
            if i >= dim || j >= dim {
                return Err(Error::Malformed(format!(
                    "bracket index ({}, {}) outside 1..={dim}",
                    i + 1,
                    j + 1
                )));
            }
            if coeffs.len() != dim {
                return Err(Error::Malformed(format!(
                    "bracket [e{}, e{}] has {} coefficients, expected {dim}",
                    i + 1,
                    j + 1,
                    coeffs.len()
                )));
            }
            if i == j {
                if !is_zero_vec(&coeffs) {
                    return Err(Error::Malformed(format!("[e{0}, e{0}] must vanish", i + 1)));
                }
                continue;
            }
            let (a, b, c) = if i < j {
                (i, j, coeffs)
            } else {
                (j, i, coeffs.into_iter().map(|x| -x).collect())
            };
            let k = pair_index(dim, a, b);
            if seen[k] {
                return Err(Error::Malformed(format!(
                    "bracket [e{}, e{}] given twice",
                    a + 1,
                    b + 1
                )));
            }
            seen[k] = true;
            brackets[k] = c;
        }
        Ok(Self {
            name: name.into(),
            dim,
            brackets,
        })
    }

    pub fn abelian(dim: usize) -> Self {
        Self::new(format!("abelian{dim}"), dim, []).expect("no brackets")
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn with_name(mut self, name: impl Into<String>) -> Self {
        self.name = name.into();
        self
    }

    /// `[e_i, e_j]` as a coordinate vector.
    pub fn structure_constants(&self, i: usize, j: usize) -> Vec<Rational> {
        use std::cmp::Ordering::*;
        match i.cmp(&j) {
            Less => self.brackets[pair_index(self.dim, i, j)].clone(),
            Equal => zero_vec(self.dim),
            Greater => self.brackets[pair_index(self.dim, j, i)]
                .iter()
                .map(|x| -x)
                .collect(),
        }
    }

    /// Nonzero brackets `(i, j, [e_i, e_j])` with `i < j`, in pair order.
    pub fn nonzero_brackets(&self) -> impl Iterator<Item = (usize, usize, &[Rational])> {
        let dim = self.dim;
        (0..dim)
            .flat_map(move |i| (i + 1..dim).map(move |j| (i, j)))
            .map(move |(i, j)| (i, j, self.brackets[pair_index(dim, i, j)].as_slice()))
            .filter(|(_, _, c)| !is_zero_vec(c))
    }

    pub fn is_abelian(&self) -> bool {
        self.brackets.iter().all(|c| is_zero_vec(c))
    }

    pub fn bracket(&self, x: &[Rational], y: &[Rational]) -> Result<Vec<Rational>> {
        if x.len() != self.dim || y.len() != self.dim {
            return Err(Error::DimensionMismatch(format!(
                "bracket of vectors of length {} and {} in a {}-dimensional algebra",
                x.len(),
                y.len(),
                self.dim
            )));
        }
        let mut out = zero_vec(self.dim);
        for i in 0..self.dim {
            if x[i].is_zero() {
                continue;
            }
            for j in 0..self.dim {
                if i == j || y[j].is_zero() {
                    continue;
                }
                let c = &x[i] * &y[j];
                axpy(&mut out, &c, &self.structure_constants(i, j));
            }
        }
        Ok(out)
    }

    /// Matrix of `ad_x : y ↦ [x, y]`.
    pub fn ad(&self, x: &[Rational]) -> Result<RationalMatrix> {
        let cols = (0..self.dim)
            .map(|j| self.bracket(x, &unit_vec(self.dim, j)))
            .collect::<Result<Vec<_>>>()?;
        Ok(RationalMatrix::from_columns(self.dim, &cols))
    }

    fn basis_bracket(&self, x: &[Rational], j: usize) -> Vec<Rational> {
        self.bracket(x, &unit_vec(self.dim, j)).expect("lengths match")
    }

    /// Checks `[[e_i,e_j],e_k] + [[e_j,e_k],e_i] + [[e_k,e_i],e_j] = 0` on all
    /// triples `i < j < k`.
    pub fn jacobi_check(&self) -> JacobiVerdict {
        let n = self.dim;
        for i in 0..n {
            for j in i + 1..n {
                for k in j + 1..n {
                    let mut jac = self.basis_bracket(&self.structure_constants(i, j), k);
                    let t2 = self.basis_bracket(&self.structure_constants(j, k), i);
                    let t3 = self.basis_bracket(&self.structure_constants(k, i), j);
                    for ((a, b), c) in jac.iter_mut().zip(t2).zip(t3) {
                        *a += b + c;
                    }
                    if !is_zero_vec(&jac) {
                        return JacobiVerdict::Violation {
                            triple: (i, j, k),
                            jacobiator: jac,
                        };
                    }
                }
            }
        }
        JacobiVerdict::Ok
    }

    /// The same algebra in the basis given by the columns of `p`:
    /// `f_i = p e_i`, with brackets `[f_i, f_j]` re-expressed in the `f` basis.
    pub fn change_basis(&self, p: &RationalMatrix) -> Result<Self> {
        if p.rows() != self.dim || p.cols() != self.dim {
            return Err(Error::DimensionMismatch("change of basis must be square".into()));
        }
        let pinv = p
            .inverse()
            .ok_or_else(|| Error::Malformed("change of basis is singular".into()))?;
        let cols: Vec<Vec<Rational>> = (0..self.dim).map(|j| p.column(j)).collect();
        let mut entries = Vec::new();
        for i in 0..self.dim {
            for j in i + 1..self.dim {
                let b = self.bracket(&cols[i], &cols[j])?;
                entries.push((i, j, pinv.mul_vec(&b)?));
            }
        }
        Self::new(self.name.clone(), self.dim, entries)
    }

    /// `self ⊕ other`, basis of `self` first.
    pub fn direct_sum(&self, other: &Self) -> Self {
        let n = self.dim + other.dim;
        let mut entries = Vec::new();
        for (i, j, c) in self.nonzero_brackets() {
            let mut v = c.to_vec();
            v.extend(zero_vec(other.dim));
            entries.push((i, j, v));
        }
        for (i, j, c) in other.nonzero_brackets() {
            let mut v = zero_vec(self.dim);
            v.extend(c.iter().cloned());
            entries.push((self.dim + i, self.dim + j, v));
        }
        Self::new(format!("{}+{}", self.name, other.name), n, entries).expect("valid sum")
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum JacobiVerdict {
    Ok,
    Violation {
        triple: (usize, usize, usize),
        jacobiator: Vec<Rational>,
    },
}

impl JacobiVerdict {
    pub fn is_ok(&self) -> bool {
        matches!(self, JacobiVerdict::Ok)
    }
}

/// A linear subspace of a Lie algebra, expected to be bracket-closed.
#[derive(Clone, Debug)]
pub struct Subalgebra {
    name: String,
    parent: Arc<LieAlgebra>,
    basis: SubspaceBasis,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum SubalgebraVerdict {
    Ok,
    NotClosed {
        pair: (usize, usize),
        bracket: Vec<Rational>,
    },
}

impl SubalgebraVerdict {
    pub fn is_ok(&self) -> bool {
        matches!(self, SubalgebraVerdict::Ok)
    }
}

impl Subalgebra {
    /// Requires linearly independent vectors of the parent's dimension.
    /// Closure under the bracket is *not* checked here; see
    /// [`is_subalgebra`](Self::is_subalgebra).
    pub fn new(
        name: impl Into<String>,
        parent: Arc<LieAlgebra>,
        vectors: Vec<Vec<Rational>>,
    ) -> Result<Self> {
        let basis = SubspaceBasis::from_independent(parent.dim(), vectors)?;
        Ok(Self {
            name: name.into(),
            parent,
            basis,
        })
    }

    pub fn zero(parent: Arc<LieAlgebra>) -> Self {
        let n = parent.dim();
        Self {
            name: "0".into(),
            parent,
            basis: SubspaceBasis::zero(n),
        }
    }

    pub fn full(parent: Arc<LieAlgebra>) -> Self {
        let n = parent.dim();
        Self {
            name: parent.name().to_string(),
            parent,
            basis: SubspaceBasis::full(n),
        }
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn parent(&self) -> &Arc<LieAlgebra> {
        &self.parent
    }

    pub fn basis(&self) -> &SubspaceBasis {
        &self.basis
    }

    pub fn dim(&self) -> usize {
        self.basis.dim()
    }

    pub fn is_subalgebra(&self) -> SubalgebraVerdict {
        let vs = self.basis.vectors();
        for a in 0..vs.len() {
            for b in a + 1..vs.len() {
                let br = self.parent.bracket(&vs[a], &vs[b]).expect("basis has parent dim");
                if !self.basis.contains(&br) {
                    return SubalgebraVerdict::NotClosed {
                        pair: (a, b),
                        bracket: br,
                    };
                }
            }
        }
        SubalgebraVerdict::Ok
    }

    pub(crate) fn require_valid(&self) -> Result<()> {
        match self.is_subalgebra() {
            SubalgebraVerdict::Ok => Ok(()),
            SubalgebraVerdict::NotClosed { pair, .. } => Err(Error::NotSubalgebra(format!(
                "{}: bracket of basis vectors {} and {} leaves the span",
                self.name,
                pair.0 + 1,
                pair.1 + 1
            ))),
        }
    }
}

/// The Lie-algebra normalizer `{X : [X, 𝔥] ⊆ 𝔥}`.
pub fn normalizer(h: &Subalgebra) -> Result<SubspaceBasis> {
    h.require_valid()?;
    let g = h.parent();
    let n = g.dim();
    if h.basis().is_zero() || h.basis().is_full() {
        return Ok(SubspaceBasis::full(n));
    }
    // rows of `ann` cut out span(h)
    let hrows = RationalMatrix::from_rows(h.basis().vectors().to_vec())?;
    let ann = RationalMatrix::from_rows(kernel_basis(&hrows).vectors().to_vec())?;
    // [X, h_b] = -ad(h_b) X must be annihilated by ann
    let blocks = h
        .basis()
        .vectors()
        .iter()
        .map(|hb| ann.mul(&g.ad(hb)?))
        .collect::<Result<Vec<_>>>()?;
    Ok(kernel_basis(&RationalMatrix::vstack(n, &blocks)?))
}

/// A linear map `𝔤 → 𝔤` acting on coordinate columns, `x ↦ M x`.
#[derive(Clone, Debug)]
pub struct LieAutomorphism {
    name: String,
    algebra: Arc<LieAlgebra>,
    matrix: RationalMatrix,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum AutomorphismVerdict {
    Ok,
    Singular,
    BreaksBracket { pair: (usize, usize) },
}

impl AutomorphismVerdict {
    pub fn is_ok(&self) -> bool {
        matches!(self, AutomorphismVerdict::Ok)
    }
}

impl LieAutomorphism {
    pub fn new(
        name: impl Into<String>,
        algebra: Arc<LieAlgebra>,
        matrix: RationalMatrix,
    ) -> Result<Self> {
        let n = algebra.dim();
        if matrix.rows() != n || matrix.cols() != n {
            return Err(Error::DimensionMismatch(format!(
                "{}x{} matrix for a {n}-dimensional algebra",
                matrix.rows(),
                matrix.cols()
            )));
        }
        Ok(Self {
            name: name.into(),
            algebra,
            matrix,
        })
    }

    pub fn identity(algebra: Arc<LieAlgebra>) -> Self {
        let n = algebra.dim();
        Self::new("id", algebra, RationalMatrix::identity(n)).expect("square")
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn algebra(&self) -> &Arc<LieAlgebra> {
        &self.algebra
    }

    pub fn matrix(&self) -> &RationalMatrix {
        &self.matrix
    }

    pub fn is_automorphism(&self) -> AutomorphismVerdict {
        let n = self.algebra.dim();
        if rank(&self.matrix) != n {
            return AutomorphismVerdict::Singular;
        }
        let cols: Vec<Vec<Rational>> = (0..n).map(|j| self.matrix.column(j)).collect();
        for i in 0..n {
            for j in i + 1..n {
                let lhs = self
                    .matrix
                    .mul_vec(&self.algebra.structure_constants(i, j))
                    .expect("square");
                let rhs = self.algebra.bracket(&cols[i], &cols[j]).expect("lengths");
                if lhs != rhs {
                    return AutomorphismVerdict::BreaksBracket { pair: (i, j) };
                }
            }
        }
        AutomorphismVerdict::Ok
    }

    pub(crate) fn require_valid(&self) -> Result<()> {
        match self.is_automorphism() {
            AutomorphismVerdict::Ok => Ok(()),
            AutomorphismVerdict::Singular => {
                Err(Error::NotAutomorphism(format!("{} is singular", self.name)))
            }
            AutomorphismVerdict::BreaksBracket { pair } => Err(Error::NotAutomorphism(format!(
                "{} does not preserve [e{}, e{}]",
                self.name,
                pair.0 + 1,
                pair.1 + 1
            ))),
        }
    }

    /// `self ∘ other`.
    pub fn compose(&self, other: &Self) -> Result<Self> {
        if self.algebra.dim() != other.algebra.dim() {
            return Err(Error::DimensionMismatch("composing automorphisms".into()));
        }
        Ok(Self {
            name: format!("{}*{}", self.name, other.name),
            algebra: Arc::clone(&self.algebra),
            matrix: self.matrix.mul(&other.matrix)?,
        })
    }

    /// Whether the map sends `space` into itself.
    pub fn preserves(&self, space: &SubspaceBasis) -> bool {
        space
            .vectors()
            .iter()
            .all(|v| space.contains(&self.matrix.mul_vec(v).expect("dims")))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactla::rat;

    fn v(xs: &[i64]) -> Vec<Rational> {
        xs.iter().map(|&x| rat(x)).collect()
    }

    #[test]
    fn su2_brackets() {
        let g = library::su2();
        assert_eq!(g.bracket(&v(&[1, 0, 0]), &v(&[0, 1, 0])).unwrap(), v(&[0, 0, 1]));
        assert_eq!(g.bracket(&v(&[0, 1, 0]), &v(&[0, 0, 1])).unwrap(), v(&[1, 0, 0]));
        assert_eq!(g.bracket(&v(&[0, 0, 1]), &v(&[1, 0, 0])).unwrap(), v(&[0, 1, 0]));
        let x = v(&[2, -1, 3]);
        assert!(is_zero_vec(&g.bracket(&x, &x).unwrap()));
        let ab = LieAlgebra::abelian(2);
        assert!(is_zero_vec(&ab.bracket(&v(&[1, 0]), &v(&[0, 1])).unwrap()));
        assert!(g.bracket(&v(&[1, 0]), &v(&[0, 1, 0])).is_err());
    }

    #[test]
    fn jacobi_examples() {
        assert!(library::su2().jacobi_check().is_ok());
        assert!(LieAlgebra::abelian(4).jacobi_check().is_ok());
        let bad = LieAlgebra::new(
            "bad",
            3,
            [
                (0, 1, v(&[0, 0, 1])),
                (0, 2, v(&[0, 0, 1])),
                (1, 2, v(&[1, 0, 0])),
            ],
        )
        .unwrap();
        match bad.jacobi_check() {
            JacobiVerdict::Violation { triple, jacobiator } => {
                assert_eq!(triple, (0, 1, 2));
                assert_eq!(jacobiator, v(&[1, 0, 0]));
            }
            JacobiVerdict::Ok => panic!("expected a violation"),
        }
    }

    #[test]
    fn subalgebra_examples() {
        let g = Arc::new(library::su2());
        let line = Subalgebra::new("l", g.clone(), vec![v(&[1, 2, -1])]).unwrap();
        assert!(line.is_subalgebra().is_ok());
        let plane = Subalgebra::new("p", g.clone(), vec![v(&[1, 0, 0]), v(&[0, 1, 0])]).unwrap();
        assert_eq!(
            plane.is_subalgebra(),
            SubalgebraVerdict::NotClosed {
                pair: (0, 1),
                bracket: v(&[0, 0, 1])
            }
        );
        assert!(Subalgebra::full(g.clone()).is_subalgebra().is_ok());
        assert!(Subalgebra::new("dep", g, vec![v(&[1, 0, 0]), v(&[2, 0, 0])]).is_err());
    }

    #[test]
    fn normalizer_examples() {
        let g = Arc::new(library::su2());
        let circle = Subalgebra::new("c", g.clone(), vec![v(&[0, 0, 1])]).unwrap();
        assert_eq!(normalizer(&circle).unwrap(), SubspaceBasis::coordinate(3, [2]));
        assert!(normalizer(&Subalgebra::full(g.clone())).unwrap().is_full());
        assert!(normalizer(&Subalgebra::zero(g.clone())).unwrap().is_full());
        let plane = Subalgebra::new("p", g, vec![v(&[1, 0, 0]), v(&[0, 1, 0])]).unwrap();
        assert!(matches!(normalizer(&plane), Err(Error::NotSubalgebra(_))));
    }

    #[test]
    fn automorphism_examples() {
        let g = Arc::new(library::su2());
        assert!(LieAutomorphism::identity(g.clone()).is_automorphism().is_ok());
        let flip = LieAutomorphism::new(
            "flip",
            g.clone(),
            RationalMatrix::diagonal(&v(&[1, -1, -1])),
        )
        .unwrap();
        assert!(flip.is_automorphism().is_ok());
        let scale =
            LieAutomorphism::new("s", g.clone(), RationalMatrix::diagonal(&v(&[2, 1, 1]))).unwrap();
        assert_eq!(
            scale.is_automorphism(),
            AutomorphismVerdict::BreaksBracket { pair: (0, 1) }
        );
        let sing =
            LieAutomorphism::new("z", g, RationalMatrix::diagonal(&v(&[0, 1, 1]))).unwrap();
        assert_eq!(sing.is_automorphism(), AutomorphismVerdict::Singular);
    }

    #[test]
    fn duplicate_or_malformed_brackets_rejected() {
        assert!(LieAlgebra::new("x", 2, [(0, 1, v(&[1, 0])), (1, 0, v(&[-1, 0]))]).is_err());
        assert!(LieAlgebra::new("x", 2, [(0, 2, v(&[1, 0]))]).is_err());
        assert!(LieAlgebra::new("x", 2, [(0, 1, v(&[1]))]).is_err());
        let g = LieAlgebra::new("x", 2, [(1, 0, v(&[1, 0]))]).unwrap();
        assert_eq!(g.structure_constants(0, 1), v(&[-1, 0]));
    }

    #[test]
    fn change_basis_preserves_jacobi_and_abelianness() {
        let p = RationalMatrix::from_ints(3, 3, &[1, 2, 0, 0, 1, 3, 1, 0, 1]);
        let g = library::su2().change_basis(&p).unwrap();
        assert!(g.jacobi_check().is_ok());
        assert!(!g.is_abelian());
        let s = library::su2().direct_sum(&LieAlgebra::abelian(1));
        assert_eq!(s.dim(), 4);
        assert!(s.jacobi_check().is_ok());
    }
}
