//! S³ = SU(2) exclusion criteria for 4- and 5-manifolds, and the search for
//! a hyperplane of H² on which the cup product vanishes.

use num_traits::{Signed, Zero};

use super::surd::QuadraticSurd;
use super::{CheckReport, Verdict};
use crate::error::{Error, Result};
use crate::exactla::{image_basis, kernel_basis, rank, Rational, RationalMatrix, SubspaceBasis};

pub const S3_4M_CITATION: &str = "a compact connected smooth 4-manifold with dim H^2(M) ≥ 3 admits no non-trivial \
smooth action of S^3 = SU(2)";
pub const S3_5M_CITATION: &str = "a compact smooth 5-manifold with an effective S^3 action has a hyperplane in \
H_2(M;R) generated by spheres (3-dimensional generic orbits) or a hyperplane in H^2(M) on which the cup product \
vanishes (2-dimensional generic orbits)";

pub const DEFAULT_HEIGHT_BOUND: u64 = 5;
/// Largest number of normals tried by the bounded search.
pub const BOUNDED_SEARCH_LIMIT: usize = 200_000;

/// Components of `H² × H² → H⁴`: one symmetric `b2 × b2` matrix per basis vector of H⁴.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CupForm {
    b2: usize,
    matrices: Vec<RationalMatrix>,
}

impl CupForm {
    pub fn new(b2: usize, matrices: Vec<RationalMatrix>) -> Result<Self> {
        for (i, m) in matrices.iter().enumerate() {
            if m.rows() != b2 || m.cols() != b2 {
                return Err(Error::InconsistentCup(format!(
                    "component {} is {}x{}, expected {b2}x{b2}",
                    i + 1,
                    m.rows(),
                    m.cols()
                )));
            }
            if !m.is_symmetric() {
                return Err(Error::InconsistentCup(format!("component {} is not symmetric", i + 1)));
            }
        }
        Ok(Self { b2, matrices })
    }

    pub fn b2(&self) -> usize {
        self.b2
    }

    pub fn b4(&self) -> usize {
        self.matrices.len()
    }

    pub fn matrices(&self) -> &[RationalMatrix] {
        &self.matrices
    }

    /// Every component restricted to `w × w` is zero.
    pub fn vanishes_on(&self, w: &SubspaceBasis) -> bool {
        self.matrices.iter().all(|q| {
            w.vectors().iter().all(|x| {
                let qx = q.mul_vec(x).expect("dims");
                w.vectors()
                    .iter()
                    .all(|y| crate::exactla::dot(y, &qx).is_zero())
            })
        })
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Completeness {
    /// No hyperplane exists over ℝ.
    Exact,
    /// None found among rational normals of bounded height.
    BoundedSearch,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum NullMethod {
    ZeroSubspace,
    Candidate,
    BoundedSearch,
    ExactDecision,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum NullHyperplane {
    /// `ker(normal)` is cup-null. `basis` is present when the normal is rational.
    Found {
        normal: Vec<QuadraticSurd>,
        basis: Option<SubspaceBasis>,
        method: NullMethod,
    },
    NotFound {
        completeness: Completeness,
    },
}

impl NullHyperplane {
    pub fn is_found(&self) -> bool {
        matches!(self, Self::Found { .. })
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct NullSearchOptions {
    /// A normal vector to try first.
    pub candidate: Option<Vec<Rational>>,
    pub height_bound: u64,
    /// Run the exact decision for `b2 ≥ 3` as well.
    pub exact: bool,
}

impl Default for NullSearchOptions {
    fn default() -> Self {
        Self {
            candidate: None,
            height_bound: DEFAULT_HEIGHT_BOUND,
            exact: true,
        }
    }
}

/// `ker(n)` for a nonzero rational row vector `n`.
pub fn hyperplane_from_normal(n: &[Rational]) -> SubspaceBasis {
    kernel_basis(&RationalMatrix::from_rows(vec![n.to_vec()]).expect("one row"))
}

fn surd_vec(v: &[Rational]) -> Vec<QuadraticSurd> {
    v.iter().cloned().map(QuadraticSurd::rational).collect()
}

/// Whether every component vanishes on `ker(n)`, using the spanning set
/// `w_k = n_i e_k − n_k e_i` (`n_i ≠ 0`).
pub fn normal_is_null(cup: &CupForm, n: &[QuadraticSurd]) -> bool {
    let Some(i) = n.iter().position(|x| !x.is_zero()) else {
        return false;
    };
    let ni = &n[i];
    let others: Vec<usize> = (0..n.len()).filter(|&k| k != i).collect();
    cup.matrices.iter().all(|q| {
        let e = |r: usize, c: usize| QuadraticSurd::rational(q.get(r, c).clone());
        others.iter().all(|&k| {
            others.iter().filter(|&&l| l >= k).all(|&l| {
                let t = ni.mul(ni).mul(&e(k, l))
                    .sub(&ni.mul(&n[l]).mul(&e(k, i)))
                    .sub(&n[k].mul(ni).mul(&e(i, l)))
                    .add(&n[k].mul(&n[l]).mul(&e(i, i)));
                t.is_zero()
            })
        })
    })
}

/// Decides existence of a real cup-null hyperplane.
///
/// A symmetric form vanishing on `ker n` has the shape `n mᵀ + m nᵀ`, so
/// it has rank at most 2 and `n` is one of its (at most two) linear
/// factors; those are the only candidates, checked against every component.
pub fn exact_null_normal(cup: &CupForm) -> Option<Vec<QuadraticSurd>> {
    let b2 = cup.b2;
    if b2 == 0 {
        return None;
    }
    let first = |v: Vec<Rational>| surd_vec(&v);
    if b2 == 1 {
        return Some(first(vec![Rational::from_integer(1.into())]));
    }
    let Some(q) = cup.matrices.iter().find(|m| !m.is_zero()) else {
        return Some(first(crate::exactla::unit_vec(b2, 0)));
    };
    let candidates = match rank(q) {
        1 => {
            let row = (0..b2).map(|i| q.row(i)).find(|r| r.iter().any(|x| !x.is_zero()));
            vec![first(row.expect("nonzero").to_vec())]
        }
        2 => rank_two_factors(q),
        _ => Vec::new(),
    };
    candidates.into_iter().find(|n| normal_is_null(cup, n))
}

/// Normals `n` with `q = n mᵀ + m nᵀ` for a rank 2 symmetric `q`; empty if `q` is definite on its image.
fn rank_two_factors(q: &RationalMatrix) -> Vec<Vec<QuadraticSurd>> {
    let b = image_basis(q).as_columns();
    let bt = b.transpose();
    let c = bt.mul(q).unwrap().mul(&b).unwrap();
    let gram_inv = bt.mul(&b).unwrap().inverse().expect("independent columns");
    let (a, bb, cc) = (c.get(0, 0).clone(), c.get(0, 1).clone(), c.get(1, 1).clone());
    let disc = &bb * &bb - &a * &cc;
    if !disc.is_positive() {
        return Vec::new();
    }
    let zero = Rational::zero();
    let r = |x: Rational| QuadraticSurd::rational(x);
    let factors: Vec<[QuadraticSurd; 2]> = if a.is_zero() {
        vec![
            [r(zero.clone()), r(Rational::from_integer(1.into()))],
            [r(&bb * Rational::from_integer(2.into())), r(cc.clone())],
        ]
    } else {
        // a(y1 − t1 y2)(y1 − t2 y2), t = (−b ± √D)/a
        [1, -1]
            .into_iter()
            .map(|s| {
                let t = QuadraticSurd::new(-&bb / &a, Rational::from_integer(s.into()) / &a, disc.clone());
                [r(Rational::from_integer(1.into())), r(zero.clone()).sub(&t)]
            })
            .collect()
    };
    factors
        .into_iter()
        .map(|l| {
            let z: Vec<QuadraticSurd> = (0..2)
                .map(|i| {
                    l[0].scale(gram_inv.get(i, 0)).add(&l[1].scale(gram_inv.get(i, 1)))
                })
                .collect();
            (0..b.rows())
                .map(|k| z[0].scale(b.get(k, 0)).add(&z[1].scale(b.get(k, 1))))
                .collect()
        })
        .collect()
}

/// Rationals of height at most `h`, ordered by height then value.
fn bounded_rationals(h: u64) -> Vec<Rational> {
    let h = h as i64;
    let mut v: Vec<Rational> = Vec::new();
    for q in 1..=h {
        for p in -h..=h {
            let x = Rational::new(p.into(), q.into());
            if !v.contains(&x) {
                v.push(x);
            }
        }
    }
    v.sort_by(|x, y| {
        crate::exactla::height(x)
            .cmp(&crate::exactla::height(y))
            .then_with(|| x.cmp(y))
    });
    v
}

/// Tries normals whose first nonzero coordinate is 1 and whose other
/// coordinates have height `≤ h`, in a fixed order, up to [`BOUNDED_SEARCH_LIMIT`].
pub fn bounded_null_normal(cup: &CupForm, h: u64) -> Option<Vec<Rational>> {
    let b2 = cup.b2;
    let values = bounded_rationals(h);
    let mut tried = 0usize;
    for lead in 0..b2 {
        let free = b2 - lead - 1;
        let mut digits = vec![0usize; free];
        loop {
            tried += 1;
            if tried > BOUNDED_SEARCH_LIMIT {
                return None;
            }
            let mut n = vec![Rational::zero(); b2];
            n[lead] = Rational::from_integer(1.into());
            for (j, &d) in digits.iter().enumerate() {
                n[lead + 1 + j] = values[d].clone();
            }
            if normal_is_null(cup, &surd_vec(&n)) {
                return Some(n);
            }
            // odometer
            let mut pos = 0;
            while pos < free {
                digits[pos] += 1;
                if digits[pos] < values.len() {
                    break;
                }
                digits[pos] = 0;
                pos += 1;
            }
            if pos == free {
                break;
            }
        }
    }
    None
}

/// Candidate, then the exact decision (always for `b2 ≤ 2`, and for larger
/// `b2` when `opts.exact`), otherwise the bounded search.
pub fn null_hyperplane_search(cup: &CupForm, opts: &NullSearchOptions) -> NullHyperplane {
    let b2 = cup.b2;
    if b2 == 0 {
        return NullHyperplane::NotFound {
            completeness: Completeness::Exact,
        };
    }
    let found = |normal: Vec<QuadraticSurd>, method| {
        let basis = normal
            .iter()
            .all(QuadraticSurd::is_rational)
            .then(|| hyperplane_from_normal(&normal.iter().map(|x| x.a.clone()).collect::<Vec<_>>()));
        NullHyperplane::Found {
            normal,
            basis,
            method,
        }
    };
    if b2 == 1 {
        return found(surd_vec(&[Rational::from_integer(1.into())]), NullMethod::ZeroSubspace);
    }
    if let Some(c) = &opts.candidate {
        if c.len() == b2 && normal_is_null(cup, &surd_vec(c)) {
            return found(surd_vec(c), NullMethod::Candidate);
        }
    }
    if b2 <= 2 || opts.exact {
        return match exact_null_normal(cup) {
            Some(n) => found(n, NullMethod::ExactDecision),
            None => NullHyperplane::NotFound {
                completeness: Completeness::Exact,
            },
        };
    }
    match bounded_null_normal(cup, opts.height_bound) {
        Some(n) => found(surd_vec(&n), NullMethod::BoundedSearch),
        None => NullHyperplane::NotFound {
            completeness: Completeness::BoundedSearch,
        },
    }
}

/// Betti numbers `[b0, …, b4]` of a compact connected 4-manifold.
pub fn s3_check_4manifold(betti: &[usize]) -> Result<CheckReport> {
    if betti.len() != 5 {
        return Err(Error::Malformed(format!(
            "a 4-manifold has 5 Betti numbers, got {}",
            betti.len()
        )));
    }
    if betti[0] != 1 {
        return Err(Error::Hypothesis(format!("M must be connected (b0 = 1), got b0 = {}", betti[0])));
    }
    let b2 = betti[2];
    Ok(if b2 >= 3 {
        CheckReport::new(Verdict::Excluded, S3_4M_CITATION).note(format!("b2 = {b2} ≥ 3"))
    } else {
        CheckReport::new(Verdict::NotExcluded, S3_4M_CITATION)
            .note(format!("b2 = {b2} ≤ 2: an S^3 action forces b2 ≤ 2, which holds"))
    })
}

/// Excluded iff no sphere-generated hyperplane is asserted and no cup-null
/// hyperplane exists.
pub fn s3_check_5manifold(
    b2: usize,
    cup: &CupForm,
    sphere_hyperplane_exists: bool,
    opts: &NullSearchOptions,
) -> Result<CheckReport> {
    if cup.b2 != b2 {
        return Err(Error::InconsistentCup(format!(
            "cup form is on a {}-dimensional H^2, but b2 = {b2}",
            cup.b2
        )));
    }
    if b2 == 0 {
        return Ok(CheckReport::new(Verdict::NotExcluded, S3_5M_CITATION)
            .note("H^2 = 0: the criterion has no content"));
    }
    let search = null_hyperplane_search(cup, opts);
    let mut report = if sphere_hyperplane_exists {
        CheckReport::new(Verdict::NotExcluded, S3_5M_CITATION)
            .note("condition 1 (hyperplane generated by spheres) asserted by the caller")
    } else {
        let r = CheckReport::new(Verdict::Excluded, S3_5M_CITATION)
            .note("condition 1 (hyperplane generated by spheres) not asserted");
        match &search {
            NullHyperplane::Found { .. } => {
                let mut r = r.note("condition 2 holds: a cup-null hyperplane exists");
                r.verdict = Verdict::NotExcluded;
                r
            }
            NullHyperplane::NotFound {
                completeness: Completeness::Exact,
            } => r.note("condition 2 fails: no real hyperplane is cup-null"),
            NullHyperplane::NotFound {
                completeness: Completeness::BoundedSearch,
            } => {
                let mut r = r.note("condition 2 undecided: bounded search found no cup-null hyperplane");
                r.verdict = Verdict::Undetermined;
                r
            }
        }
    };
    report.hyperplane = Some(search);
    Ok(report)
}
