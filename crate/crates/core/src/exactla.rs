//! Exact rational linear algebra.
//!
//! Everything downstream (cohomology dimensions, spectral-sequence pages,
//! fixed subspaces) reduces to ranks and kernels computed here. Subspaces are
//! always stored in a canonical form: the nonzero rows of the reduced row
//! echelon form of any spanning set, ordered by pivot column, with every
//! pivot entry equal to one. Two `SubspaceBasis` values span the same space
//! iff they compare equal.

use std::collections::{HashSet, VecDeque};
use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};

pub type Rational = BigRational;

/// Default cap on the number of elements enumerated by [`group_closure`].
pub const DEFAULT_GROUP_BOUND: usize = 10_000;

pub fn rat(n: i64) -> Rational {
    Rational::from_integer(BigInt::from(n))
}

pub fn ratio(n: i64, d: i64) -> Rational {
    Rational::new(BigInt::from(n), BigInt::from(d))
}

/// Parses `"p/q"`, `"-p/q"` or an integer string.
pub fn parse_rational(s: &str) -> Result<Rational> {
    let s = s.trim();
    let bad = || Error::Malformed(format!("not a rational number: {s:?}"));
    match s.split_once('/') {
        Some((n, d)) => {
            let n: BigInt = n.trim().parse().map_err(|_| bad())?;
            let d: BigInt = d.trim().parse().map_err(|_| bad())?;
            if d.is_zero() {
                return Err(bad());
            }
            Ok(Rational::new(n, d))
        }
        None => {
            let n: BigInt = s.parse().map_err(|_| bad())?;
            Ok(Rational::from_integer(n))
        }
    }
}

pub fn zero_vec(n: usize) -> Vec<Rational> {
    vec![Rational::zero(); n]
}

pub fn unit_vec(n: usize, i: usize) -> Vec<Rational> {
    let mut v = zero_vec(n);
    v[i] = Rational::one();
    v
}

pub fn is_zero_vec(v: &[Rational]) -> bool {
    v.iter().all(Zero::is_zero)
}

pub fn dot(a: &[Rational], b: &[Rational]) -> Rational {
    a.iter()
        .zip(b)
        .filter(|(x, y)| !x.is_zero() && !y.is_zero())
        .fold(Rational::zero(), |acc, (x, y)| acc + x * y)
}

/// `acc += c * v`
pub fn axpy(acc: &mut [Rational], c: &Rational, v: &[Rational]) {
    if c.is_zero() {
        return;
    }
    for (a, x) in acc.iter_mut().zip(v) {
        if !x.is_zero() {
            *a += c * x;
        }
    }
}

/// Dense row-major matrix of exact rationals.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct RationalMatrix {
    rows: usize,
    cols: usize,
    data: Vec<Rational>,
}

impl fmt::Debug for RationalMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "RationalMatrix {}x{} [", self.rows, self.cols)?;
        for i in 0..self.rows {
            let row: Vec<String> = self.row(i).iter().map(|x| x.to_string()).collect();
            write!(f, "[{}]", row.join(", "))?;
        }
        write!(f, "]")
    }
}

impl RationalMatrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        Self {
            rows,
            cols,
            data: zero_vec(rows * cols),
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m.data[i * n + i] = Rational::one();
        }
        m
    }

    pub fn diagonal(entries: &[Rational]) -> Self {
        let n = entries.len();
        let mut m = Self::zeros(n, n);
        for (i, x) in entries.iter().enumerate() {
            m.data[i * n + i] = x.clone();
        }
        m
    }

    pub fn from_rows(rows: Vec<Vec<Rational>>) -> Result<Self> {
        let r = rows.len();
        let c = rows.first().map_or(0, Vec::len);
        if rows.iter().any(|row| row.len() != c) {
            return Err(Error::DimensionMismatch("ragged matrix rows".into()));
        }
        Ok(Self {
            rows: r,
            cols: c,
            data: rows.into_iter().flatten().collect(),
        })
    }

    /// Builds a matrix with an explicit shape; handy when `rows == 0` or `cols == 0`.
    pub fn from_flat(rows: usize, cols: usize, data: Vec<Rational>) -> Result<Self> {
        if data.len() != rows * cols {
            return Err(Error::DimensionMismatch(format!(
                "{} entries for a {rows}x{cols} matrix",
                data.len()
            )));
        }
        Ok(Self { rows, cols, data })
    }

    pub fn from_ints(rows: usize, cols: usize, entries: &[i64]) -> Self {
        assert_eq!(entries.len(), rows * cols, "entry count");
        Self {
            rows,
            cols,
            data: entries.iter().map(|&x| rat(x)).collect(),
        }
    }

    /// Matrix whose columns are the given vectors.
    pub fn from_columns(nrows: usize, columns: &[Vec<Rational>]) -> Self {
        let mut m = Self::zeros(nrows, columns.len());
        for (j, col) in columns.iter().enumerate() {
            debug_assert_eq!(col.len(), nrows);
            for (i, x) in col.iter().enumerate() {
                m.data[i * columns.len() + j] = x.clone();
            }
        }
        m
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    pub fn get(&self, i: usize, j: usize) -> &Rational {
        &self.data[i * self.cols + j]
    }

    pub fn set(&mut self, i: usize, j: usize, x: Rational) {
        self.data[i * self.cols + j] = x;
    }

    pub fn add_to(&mut self, i: usize, j: usize, x: &Rational) {
        if !x.is_zero() {
            self.data[i * self.cols + j] += x;
        }
    }

    pub fn row(&self, i: usize) -> &[Rational] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }

    pub fn column(&self, j: usize) -> Vec<Rational> {
        (0..self.rows).map(|i| self.get(i, j).clone()).collect()
    }

    pub fn to_rows(&self) -> Vec<Vec<Rational>> {
        (0..self.rows).map(|i| self.row(i).to_vec()).collect()
    }

    pub fn entries(&self) -> &[Rational] {
        &self.data
    }

    pub fn is_zero(&self) -> bool {
        is_zero_vec(&self.data)
    }

    pub fn is_identity(&self) -> bool {
        self.is_square() && *self == Self::identity(self.rows)
    }

    pub fn is_symmetric(&self) -> bool {
        self.is_square()
            && (0..self.rows).all(|i| (0..i).all(|j| self.get(i, j) == self.get(j, i)))
    }

    pub fn transpose(&self) -> Self {
        let mut t = Self::zeros(self.cols, self.rows);
        for i in 0..self.rows {
            for j in 0..self.cols {
                t.data[j * self.rows + i] = self.get(i, j).clone();
            }
        }
        t
    }

    pub fn mul(&self, other: &Self) -> Result<Self> {
        if self.cols != other.rows {
            return Err(Error::DimensionMismatch(format!(
                "cannot multiply {}x{} by {}x{}",
                self.rows, self.cols, other.rows, other.cols
            )));
        }
        let mut out = Self::zeros(self.rows, other.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = self.get(i, k);
                if a.is_zero() {
                    continue;
                }
                for j in 0..other.cols {
                    let b = other.get(k, j);
                    if !b.is_zero() {
                        out.data[i * other.cols + j] += a * b;
                    }
                }
            }
        }
        Ok(out)
    }

    pub fn mul_vec(&self, v: &[Rational]) -> Result<Vec<Rational>> {
        if v.len() != self.cols {
            return Err(Error::DimensionMismatch(format!(
                "vector of length {} for a {}x{} matrix",
                v.len(),
                self.rows,
                self.cols
            )));
        }
        Ok((0..self.rows).map(|i| dot(self.row(i), v)).collect())
    }

    pub fn add(&self, other: &Self) -> Result<Self> {
        self.zip_with(other, |a, b| a + b)
    }

    pub fn sub(&self, other: &Self) -> Result<Self> {
        self.zip_with(other, |a, b| a - b)
    }

    fn zip_with(&self, other: &Self, f: impl Fn(&Rational, &Rational) -> Rational) -> Result<Self> {
        if self.rows != other.rows || self.cols != other.cols {
            return Err(Error::DimensionMismatch(format!(
                "{}x{} vs {}x{}",
                self.rows, self.cols, other.rows, other.cols
            )));
        }
        Ok(Self {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().zip(&other.data).map(|(a, b)| f(a, b)).collect(),
        })
    }

    pub fn scale(&self, c: &Rational) -> Self {
        Self {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().map(|x| x * c).collect(),
        }
    }

    /// Stacks matrices with equal column counts on top of each other.
    pub fn vstack(cols: usize, blocks: &[RationalMatrix]) -> Result<Self> {
        let mut data = Vec::new();
        let mut rows = 0;
        for b in blocks {
            if b.cols != cols {
                return Err(Error::DimensionMismatch("vstack column count".into()));
            }
            rows += b.rows;
            data.extend(b.data.iter().cloned());
        }
        Ok(Self { rows, cols, data })
    }

    pub fn submatrix(&self, rows: &[usize], cols: &[usize]) -> Self {
        let mut m = Self::zeros(rows.len(), cols.len());
        for (a, &i) in rows.iter().enumerate() {
            for (b, &j) in cols.iter().enumerate() {
                m.data[a * cols.len() + b] = self.get(i, j).clone();
            }
        }
        m
    }

    /// Kronecker product `self ⊗ other`.
    pub fn kron(&self, other: &Self) -> Self {
        let rows = self.rows * other.rows;
        let cols = self.cols * other.cols;
        let mut m = Self::zeros(rows, cols);
        for i in 0..self.rows {
            for j in 0..self.cols {
                let a = self.get(i, j);
                if a.is_zero() {
                    continue;
                }
                for k in 0..other.rows {
                    for l in 0..other.cols {
                        let b = other.get(k, l);
                        if !b.is_zero() {
                            m.data[(i * other.rows + k) * cols + j * other.cols + l] = a * b;
                        }
                    }
                }
            }
        }
        m
    }

    pub fn determinant(&self) -> Result<Rational> {
        if !self.is_square() {
            return Err(Error::DimensionMismatch("determinant of a non-square matrix".into()));
        }
        let n = self.rows;
        let mut a = self.to_rows();
        let mut det = Rational::one();
        for col in 0..n {
            let Some(p) = (col..n).find(|&r| !a[r][col].is_zero()) else {
                return Ok(Rational::zero());
            };
            if p != col {
                a.swap(p, col);
                det = -det;
            }
            let pivot = a[col][col].clone();
            det *= &pivot;
            for r in col + 1..n {
                if a[r][col].is_zero() {
                    continue;
                }
                let f = &a[r][col] / &pivot;
                for c in col..n {
                    let sub = &f * &a[col][c];
                    a[r][c] -= sub;
                }
            }
        }
        Ok(det)
    }

    pub fn inverse(&self) -> Option<Self> {
        if !self.is_square() {
            return None;
        }
        let n = self.rows;
        let mut aug: Vec<Vec<Rational>> = (0..n)
            .map(|i| {
                let mut row = self.row(i).to_vec();
                row.extend(unit_vec(n, i));
                row
            })
            .collect();
        let (pivots, _) = rref_in_place(&mut aug, n);
        if pivots.len() != n {
            return None;
        }
        let rows = aug.into_iter().map(|r| r[n..].to_vec()).collect();
        Self::from_rows(rows).ok()
    }
}

/// Reduces `rows` in place to reduced row echelon form, only pivoting on the
/// first `pivot_cols` columns. Returns pivot columns and the number of
/// nonzero rows; the zero rows are left at the bottom.
fn rref_in_place(rows: &mut [Vec<Rational>], pivot_cols: usize) -> (Vec<usize>, usize) {
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..pivot_cols {
        if r == rows.len() {
            break;
        }
        let Some(p) = (r..rows.len()).find(|&i| !rows[i][c].is_zero()) else {
            continue;
        };
        rows.swap(r, p);
        let inv = rows[r][c].recip();
        if !inv.is_one() {
            for x in rows[r].iter_mut() {
                if !x.is_zero() {
                    *x *= &inv;
                }
            }
        }
        let pivot_row = rows[r].clone();
        for (i, row) in rows.iter_mut().enumerate() {
            if i == r || row[c].is_zero() {
                continue;
            }
            let f = row[c].clone();
            for (x, y) in row.iter_mut().zip(&pivot_row).skip(c) {
                if !y.is_zero() {
                    *x -= &f * y;
                }
            }
        }
        pivots.push(c);
        r += 1;
    }
    (pivots, r)
}

/// Reduced row echelon form and its pivot columns.
pub fn rref(m: &RationalMatrix) -> (RationalMatrix, Vec<usize>) {
    let mut rows = m.to_rows();
    let (pivots, _) = rref_in_place(&mut rows, m.cols);
    let out = RationalMatrix::from_flat(m.rows, m.cols, rows.into_iter().flatten().collect())
        .expect("shape preserved");
    (out, pivots)
}

/// Rank over ℚ by fraction-free (Bareiss) elimination on an integer copy.
pub fn rank(m: &RationalMatrix) -> usize {
    // Clear denominators row by row; row scaling does not change the rank.
    let mut a: Vec<Vec<BigInt>> = (0..m.rows)
        .map(|i| {
            let row = m.row(i);
            let l = row
                .iter()
                .fold(BigInt::one(), |acc, x| acc.lcm(x.denom()));
            row.iter()
                .map(|x| x.numer() * (&l / x.denom()))
                .collect()
        })
        .collect();
    let mut prev = BigInt::one();
    let mut r = 0;
    for c in 0..m.cols {
        if r == a.len() {
            break;
        }
        let Some(p) = (r..a.len()).find(|&i| !a[i][c].is_zero()) else {
            continue;
        };
        a.swap(r, p);
        for i in r + 1..a.len() {
            for j in c + 1..m.cols {
                let v = &a[r][c] * &a[i][j] - &a[i][c] * &a[r][j];
                a[i][j] = v / &prev;
            }
            a[i][c] = BigInt::zero();
        }
        prev = a[r][c].clone();
        r += 1;
    }
    r
}

/// Canonical basis of the null space `{x : m x = 0}`.
pub fn kernel_basis(m: &RationalMatrix) -> SubspaceBasis {
    let n = m.cols;
    let mut rows = m.to_rows();
    let (pivots, _) = rref_in_place(&mut rows, n);
    let pivot_set: HashSet<usize> = pivots.iter().copied().collect();
    let vectors = (0..n)
        .filter(|c| !pivot_set.contains(c))
        .map(|free| {
            let mut v = unit_vec(n, free);
            for (row, &pc) in rows.iter().zip(&pivots) {
                if !row[free].is_zero() {
                    v[pc] = -row[free].clone();
                }
            }
            v
        })
        .collect();
    SubspaceBasis::from_spanning(n, vectors).expect("kernel vectors have ambient length")
}

/// Canonical basis of the column space of `m`.
pub fn image_basis(m: &RationalMatrix) -> SubspaceBasis {
    let cols = (0..m.cols).map(|j| m.column(j)).collect();
    SubspaceBasis::from_spanning(m.rows, cols).expect("columns have ambient length")
}

/// Some `x` with `m x = b`, if the system is consistent.
pub fn solve(m: &RationalMatrix, b: &[Rational]) -> Result<Option<Vec<Rational>>> {
    if b.len() != m.rows {
        return Err(Error::DimensionMismatch("right-hand side length".into()));
    }
    let mut rows: Vec<Vec<Rational>> = (0..m.rows)
        .map(|i| {
            let mut r = m.row(i).to_vec();
            r.push(b[i].clone());
            r
        })
        .collect();
    let (pivots, nonzero) = rref_in_place(&mut rows, m.cols);
    if rows[nonzero..].iter().any(|r| !r[m.cols].is_zero()) {
        return Ok(None);
    }
    let mut x = zero_vec(m.cols);
    for (row, &pc) in rows.iter().zip(&pivots) {
        x[pc] = row[m.cols].clone();
    }
    Ok(Some(x))
}

/// A subspace of ℚⁿ held in canonical reduced echelon form.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct SubspaceBasis {
    ambient_dim: usize,
    vectors: Vec<Vec<Rational>>,
    pivots: Vec<usize>,
}

impl SubspaceBasis {
    pub fn zero(ambient_dim: usize) -> Self {
        Self {
            ambient_dim,
            vectors: Vec::new(),
            pivots: Vec::new(),
        }
    }

    pub fn full(ambient_dim: usize) -> Self {
        Self::coordinate(ambient_dim, 0..ambient_dim)
    }

    /// Span of the standard basis vectors with the given indices.
    pub fn coordinate(ambient_dim: usize, indices: impl IntoIterator<Item = usize>) -> Self {
        let mut idx: Vec<usize> = indices.into_iter().collect();
        idx.sort_unstable();
        idx.dedup();
        Self {
            ambient_dim,
            vectors: idx.iter().map(|&i| unit_vec(ambient_dim, i)).collect(),
            pivots: idx,
        }
    }

    /// Canonical basis of the span of an arbitrary list of vectors.
    pub fn from_spanning(ambient_dim: usize, vectors: Vec<Vec<Rational>>) -> Result<Self> {
        if let Some(v) = vectors.iter().find(|v| v.len() != ambient_dim) {
            return Err(Error::DimensionMismatch(format!(
                "vector of length {} in ambient dimension {ambient_dim}",
                v.len()
            )));
        }
        let mut rows = vectors;
        let (pivots, nonzero) = rref_in_place(&mut rows, ambient_dim);
        rows.truncate(nonzero);
        Ok(Self {
            ambient_dim,
            vectors: rows,
            pivots,
        })
    }

    /// Like [`from_spanning`](Self::from_spanning) but rejects dependent input.
    pub fn from_independent(ambient_dim: usize, vectors: Vec<Vec<Rational>>) -> Result<Self> {
        let count = vectors.len();
        let s = Self::from_spanning(ambient_dim, vectors)?;
        if s.dim() != count {
            return Err(Error::Malformed(format!(
                "{count} basis vectors span only a {}-dimensional space",
                s.dim()
            )));
        }
        Ok(s)
    }

    pub fn ambient_dim(&self) -> usize {
        self.ambient_dim
    }

    pub fn dim(&self) -> usize {
        self.vectors.len()
    }

    pub fn is_zero(&self) -> bool {
        self.vectors.is_empty()
    }

    pub fn is_full(&self) -> bool {
        self.dim() == self.ambient_dim
    }

    pub fn vectors(&self) -> &[Vec<Rational>] {
        &self.vectors
    }

    pub fn pivots(&self) -> &[usize] {
        &self.pivots
    }

    /// `ambient × dim` matrix with the basis vectors as columns.
    pub fn as_columns(&self) -> RationalMatrix {
        RationalMatrix::from_columns(self.ambient_dim, &self.vectors)
    }

    /// Coordinates of `v` in this basis, or `None` if `v` is not in the span.
    ///
    /// For a reduced echelon basis the coefficient of the i-th vector is the
    /// entry of `v` at the i-th pivot column.
    pub fn coordinates(&self, v: &[Rational]) -> Option<Vec<Rational>> {
        if v.len() != self.ambient_dim {
            return None;
        }
        let coeffs: Vec<Rational> = self.pivots.iter().map(|&p| v[p].clone()).collect();
        let mut residual = v.to_vec();
        for (c, b) in coeffs.iter().zip(&self.vectors) {
            axpy(&mut residual, &-c.clone(), b);
        }
        is_zero_vec(&residual).then_some(coeffs)
    }

    pub fn contains(&self, v: &[Rational]) -> bool {
        self.coordinates(v).is_some()
    }

    pub fn is_subspace_of(&self, other: &Self) -> bool {
        self.ambient_dim == other.ambient_dim && self.vectors.iter().all(|v| other.contains(v))
    }

    /// Reduces `v` modulo this subspace, zeroing every pivot coordinate.
    pub fn reduce(&self, v: &[Rational]) -> Vec<Rational> {
        let mut out = v.to_vec();
        for (b, &p) in self.vectors.iter().zip(&self.pivots) {
            if !out[p].is_zero() {
                let c = -out[p].clone();
                axpy(&mut out, &c, b);
            }
        }
        out
    }

    pub fn sum(&self, other: &Self) -> Result<Self> {
        if self.ambient_dim != other.ambient_dim {
            return Err(Error::DimensionMismatch("sum of subspaces".into()));
        }
        let mut vs = self.vectors.clone();
        vs.extend(other.vectors.iter().cloned());
        Self::from_spanning(self.ambient_dim, vs)
    }

    /// Image of this subspace under the linear map `m`.
    pub fn image_under(&self, m: &RationalMatrix) -> Result<Self> {
        if m.cols() != self.ambient_dim {
            return Err(Error::DimensionMismatch("image under a map".into()));
        }
        let imgs = self
            .vectors
            .iter()
            .map(|v| m.mul_vec(v))
            .collect::<Result<Vec<_>>>()?;
        Self::from_spanning(m.rows(), imgs)
    }

    /// `{x in self : m x = 0}`.
    pub fn kernel_within(&self, m: &RationalMatrix) -> Result<Self> {
        let b = self.as_columns();
        let coeffs = kernel_basis(&m.mul(&b)?);
        let vs = coeffs
            .vectors()
            .iter()
            .map(|c| b.mul_vec(c))
            .collect::<Result<Vec<_>>>()?;
        Self::from_spanning(self.ambient_dim, vs)
    }

    /// Canonical complement of `sub` inside `self`: the reduced echelon
    /// basis of `self` reduced modulo `sub`.
    pub fn complement_of(&self, sub: &Self) -> Result<Vec<Vec<Rational>>> {
        if !sub.is_subspace_of(self) {
            return Err(Error::NotContained("complement requires sub ⊆ space".into()));
        }
        let reduced: Vec<Vec<Rational>> = self.vectors.iter().map(|v| sub.reduce(v)).collect();
        Ok(Self::from_spanning(self.ambient_dim, reduced)?.vectors)
    }
}

/// Basis of `a ∩ b`.
pub fn intersect(a: &SubspaceBasis, b: &SubspaceBasis) -> Result<SubspaceBasis> {
    if a.ambient_dim != b.ambient_dim {
        return Err(Error::DimensionMismatch(format!(
            "intersecting subspaces of ℚ^{} and ℚ^{}",
            a.ambient_dim, b.ambient_dim
        )));
    }
    if a.is_zero() || b.is_zero() {
        return Ok(SubspaceBasis::zero(a.ambient_dim));
    }
    // x·A = y·B  <=>  [A^T | -B^T] (x, y) = 0
    let n = a.ambient_dim;
    let (da, db) = (a.dim(), b.dim());
    let mut m = RationalMatrix::zeros(n, da + db);
    for (j, v) in a.vectors.iter().enumerate() {
        for i in 0..n {
            m.set(i, j, v[i].clone());
        }
    }
    for (j, v) in b.vectors.iter().enumerate() {
        for i in 0..n {
            m.set(i, da + j, -v[i].clone());
        }
    }
    let sol = kernel_basis(&m);
    let vs = sol
        .vectors()
        .iter()
        .map(|c| {
            let mut v = zero_vec(n);
            for (ci, ai) in c[..da].iter().zip(&a.vectors) {
                axpy(&mut v, ci, ai);
            }
            v
        })
        .collect();
    SubspaceBasis::from_spanning(n, vs)
}

/// `dim(space) - dim(sub)`, after checking `sub ⊆ space`.
pub fn quotient_dim(space: &SubspaceBasis, sub: &SubspaceBasis) -> Result<usize> {
    if space.ambient_dim != sub.ambient_dim {
        return Err(Error::DimensionMismatch("quotient of different ambients".into()));
    }
    if !sub.is_subspace_of(space) {
        return Err(Error::NotContained(format!(
            "{}-dimensional subspace is not inside the {}-dimensional space",
            sub.dim(),
            space.dim()
        )));
    }
    Ok(space.dim() - sub.dim())
}

/// All elements of the group generated by `gens` (identity included),
/// in breadth-first discovery order.
pub fn group_closure(dim: usize, gens: &[RationalMatrix], bound: usize) -> Result<Vec<RationalMatrix>> {
    if let Some(g) = gens.iter().find(|g| g.rows() != dim || g.cols() != dim) {
        return Err(Error::DimensionMismatch(format!(
            "{}x{} generator for a group acting on ℚ^{dim}",
            g.rows(),
            g.cols()
        )));
    }
    let id = RationalMatrix::identity(dim);
    let mut seen: HashSet<RationalMatrix> = HashSet::from([id.clone()]);
    let mut elements = vec![id.clone()];
    let mut queue = VecDeque::from([id]);
    while let Some(x) = queue.pop_front() {
        for g in gens {
            let y = g.mul(&x)?;
            if seen.insert(y.clone()) {
                if seen.len() > bound {
                    return Err(Error::GroupBoundExceeded { bound });
                }
                elements.push(y.clone());
                queue.push_back(y);
            }
        }
    }
    Ok(elements)
}

/// Simultaneous fixed space `{v : g v = v}` of the finite group generated by `maps`.
pub fn fixed_subspace(dim: usize, maps: &[RationalMatrix], bound: usize) -> Result<SubspaceBasis> {
    let group = group_closure(dim, maps, bound)?;
    let id = RationalMatrix::identity(dim);
    let blocks = group
        .iter()
        .filter(|g| !g.is_identity())
        .map(|g| g.sub(&id))
        .collect::<Result<Vec<_>>>()?;
    if blocks.is_empty() {
        return Ok(SubspaceBasis::full(dim));
    }
    Ok(kernel_basis(&RationalMatrix::vstack(dim, &blocks)?))
}

/// `(1/|G|) Σ_g g` over an enumerated finite group.
pub fn averaging_projector(dim: usize, group: &[RationalMatrix]) -> Result<RationalMatrix> {
    let mut sum = RationalMatrix::zeros(dim, dim);
    for g in group {
        sum = sum.add(g)?;
    }
    Ok(sum.scale(&Rational::new(BigInt::one(), BigInt::from(group.len().max(1)))))
}

/// Largest absolute numerator or denominator, used for search heights.
pub fn height(x: &Rational) -> BigInt {
    x.numer().abs().max(x.denom().clone())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn v(xs: &[i64]) -> Vec<Rational> {
        xs.iter().map(|&x| rat(x)).collect()
    }

    #[test]
    fn rank_examples() {
        assert_eq!(rank(&RationalMatrix::identity(2)), 2);
        assert_eq!(rank(&RationalMatrix::zeros(2, 2)), 0);
        assert_eq!(rank(&RationalMatrix::from_ints(2, 2, &[1, 2, 2, 4])), 1);
        let m = RationalMatrix::from_rows(vec![
            vec![ratio(1, 2), ratio(1, 3)],
            vec![ratio(3, 2), rat(1)],
        ])
        .unwrap();
        assert_eq!(rank(&m), 1);
    }

    #[test]
    fn kernel_examples() {
        assert_eq!(kernel_basis(&RationalMatrix::zeros(3, 3)), SubspaceBasis::full(3));
        assert!(kernel_basis(&RationalMatrix::identity(3)).is_zero());
        let k = kernel_basis(&RationalMatrix::from_ints(1, 3, &[1, 1, 0]));
        // canonical form of span{(-1,1,0),(0,0,1)}
        assert_eq!(k.vectors(), &[v(&[1, -1, 0]), v(&[0, 0, 1])]);
        let expected = SubspaceBasis::from_spanning(3, vec![v(&[-1, 1, 0]), v(&[0, 0, 1])]).unwrap();
        assert_eq!(k, expected);
    }

    #[test]
    fn intersect_examples() {
        let full = SubspaceBasis::full(3);
        assert_eq!(intersect(&full, &full).unwrap(), full);
        let l1 = SubspaceBasis::from_spanning(2, vec![v(&[1, 2])]).unwrap();
        let l2 = SubspaceBasis::from_spanning(2, vec![v(&[1, -1])]).unwrap();
        assert!(intersect(&l1, &l2).unwrap().is_zero());
        let a = SubspaceBasis::coordinate(3, [0, 1]);
        let b = SubspaceBasis::coordinate(3, [1, 2]);
        assert_eq!(intersect(&a, &b).unwrap(), SubspaceBasis::coordinate(3, [1]));
        assert!(matches!(
            intersect(&a, &SubspaceBasis::full(2)),
            Err(Error::DimensionMismatch(_))
        ));
    }

    #[test]
    fn quotient_examples() {
        let full = SubspaceBasis::full(3);
        assert_eq!(quotient_dim(&full, &full).unwrap(), 0);
        let line = SubspaceBasis::coordinate(3, [1]);
        assert_eq!(quotient_dim(&full, &line).unwrap(), 2);
        let k = kernel_basis(&RationalMatrix::from_ints(1, 3, &[1, 1, 0]));
        assert_eq!(quotient_dim(&k, &SubspaceBasis::coordinate(3, [2])).unwrap(), 1);
        assert!(matches!(
            quotient_dim(&line, &full),
            Err(Error::NotContained(_))
        ));
    }

    #[test]
    fn fixed_subspace_examples() {
        let id = RationalMatrix::identity(2);
        assert_eq!(fixed_subspace(2, &[id], DEFAULT_GROUP_BOUND).unwrap(), SubspaceBasis::full(2));
        let neg = RationalMatrix::from_ints(1, 1, &[-1]);
        assert!(fixed_subspace(1, &[neg], DEFAULT_GROUP_BOUND).unwrap().is_zero());
        let swap = RationalMatrix::from_ints(2, 2, &[0, 1, 1, 0]);
        let fixed = fixed_subspace(2, &[swap], DEFAULT_GROUP_BOUND).unwrap();
        assert_eq!(fixed.vectors(), &[v(&[1, 1])]);
    }

    #[test]
    fn group_bound_is_enforced() {
        // infinite order
        let shear = RationalMatrix::from_ints(2, 2, &[1, 1, 0, 1]);
        assert_eq!(
            fixed_subspace(2, &[shear], 50),
            Err(Error::GroupBoundExceeded { bound: 50 })
        );
        // order 4 rotation fits a bound of 4 but not 3
        let rot = RationalMatrix::from_ints(2, 2, &[0, -1, 1, 0]);
        assert_eq!(group_closure(2, std::slice::from_ref(&rot), 4).unwrap().len(), 4);
        assert!(group_closure(2, &[rot], 3).is_err());
    }

    #[test]
    fn complement_is_canonical() {
        let space = SubspaceBasis::full(3);
        let sub = SubspaceBasis::from_spanning(3, vec![v(&[1, 1, 0])]).unwrap();
        let comp = space.complement_of(&sub).unwrap();
        assert_eq!(comp, vec![v(&[0, 1, 0]), v(&[0, 0, 1])]);
        assert_eq!(comp.len(), 2);
        let all = sub.sum(&SubspaceBasis::from_spanning(3, comp).unwrap()).unwrap();
        assert!(all.is_full());
    }

    #[test]
    fn solve_and_inverse() {
        let m = RationalMatrix::from_ints(2, 2, &[2, 1, 1, 1]);
        let x = solve(&m, &v(&[3, 2])).unwrap().unwrap();
        assert_eq!(x, v(&[1, 1]));
        let inv = m.inverse().unwrap();
        assert!(m.mul(&inv).unwrap().is_identity());
        let singular = RationalMatrix::from_ints(2, 2, &[1, 2, 2, 4]);
        assert!(singular.inverse().is_none());
        assert!(solve(&singular, &v(&[1, 0])).unwrap().is_none());
        assert_eq!(m.determinant().unwrap(), rat(1));
    }

    #[test]
    fn parse_rationals() {
        assert_eq!(parse_rational("3/6").unwrap(), ratio(1, 2));
        assert_eq!(parse_rational("-4").unwrap(), rat(-4));
        assert!(parse_rational("1/0").is_err());
        assert!(parse_rational("x").is_err());
    }
}
