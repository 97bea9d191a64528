//! Built-in algebras: su(2), so(n), u(n), abelian ℝⁿ, and the standard
//! homogeneous pairs used by the example corpus.

use std::sync::Arc;

use super::{LieAlgebra, LieAutomorphism, Subalgebra};
use crate::exactla::{rat, unit_vec, Rational, RationalMatrix};

/// su(2) in the cross-product basis: `[e1,e2]=e3, [e2,e3]=e1, [e3,e1]=e2`.
pub fn su2() -> LieAlgebra {
    let e = |i| unit_vec(3, i);
    LieAlgebra::new("su2", 3, [(0, 1, e(2)), (1, 2, e(0)), (2, 0, e(1))]).expect("su(2)")
}

/// Index pairs `(a, b)`, `a < b`, in lexicographic order; the basis of so(n).
pub fn so_basis_pairs(n: usize) -> Vec<(usize, usize)> {
    (0..n)
        .flat_map(|a| (a + 1..n).map(move |b| (a, b)))
        .collect()
}

/// so(n) with basis `E_ab = e_a e_bᵀ − e_b e_aᵀ` for `a < b`, lexicographic.
pub fn so(n: usize) -> LieAlgebra {
    let pairs = so_basis_pairs(n);
    let dim = pairs.len();
    let elem = |(a, b): (usize, usize)| {
        let mut m = RationalMatrix::zeros(n, n);
        m.set(a, b, rat(1));
        m.set(b, a, rat(-1));
        m
    };
    let coords = |m: &RationalMatrix| -> Vec<Rational> {
        pairs.iter().map(|&(a, b)| m.get(a, b).clone()).collect()
    };
    let mut entries = Vec::new();
    for i in 0..dim {
        for j in i + 1..dim {
            let (x, y) = (elem(pairs[i]), elem(pairs[j]));
            let c = x.mul(&y).unwrap().sub(&y.mul(&x).unwrap()).unwrap();
            entries.push((i, j, coords(&c)));
        }
    }
    LieAlgebra::new(format!("so{n}"), dim, entries).expect("so(n)")
}

/// Complex n×n matrix as (real part, imaginary part).
#[derive(Clone)]
struct ComplexMatrix {
    re: RationalMatrix,
    im: RationalMatrix,
}

impl ComplexMatrix {
    fn mul(&self, o: &Self) -> Self {
        let rr = self.re.mul(&o.re).unwrap();
        let ii = self.im.mul(&o.im).unwrap();
        let ri = self.re.mul(&o.im).unwrap();
        let ir = self.im.mul(&o.re).unwrap();
        Self {
            re: rr.sub(&ii).unwrap(),
            im: ri.add(&ir).unwrap(),
        }
    }

    fn sub(&self, o: &Self) -> Self {
        Self {
            re: self.re.sub(&o.re).unwrap(),
            im: self.im.sub(&o.im).unwrap(),
        }
    }
}

/// Basis labels of u(n): diagonal `i E_aa` first, then for each pair
/// `a < b` the real skew `E_ab − E_ba` followed by `i(E_ab + E_ba)`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum UnitaryBasis {
    Diagonal(usize),
    Skew(usize, usize),
    Sym(usize, usize),
}

pub fn u_basis(n: usize) -> Vec<UnitaryBasis> {
    let mut out: Vec<UnitaryBasis> = (0..n).map(UnitaryBasis::Diagonal).collect();
    for (a, b) in so_basis_pairs(n) {
        out.push(UnitaryBasis::Skew(a, b));
        out.push(UnitaryBasis::Sym(a, b));
    }
    out
}

/// u(n) as real Lie algebra of skew-Hermitian matrices, basis [`u_basis`].
pub fn u(n: usize) -> LieAlgebra {
    let basis = u_basis(n);
    let dim = basis.len();
    let elem = |b: UnitaryBasis| {
        let mut re = RationalMatrix::zeros(n, n);
        let mut im = RationalMatrix::zeros(n, n);
        match b {
            UnitaryBasis::Diagonal(a) => im.set(a, a, rat(1)),
            UnitaryBasis::Skew(a, c) => {
                re.set(a, c, rat(1));
                re.set(c, a, rat(-1));
            }
            UnitaryBasis::Sym(a, c) => {
                im.set(a, c, rat(1));
                im.set(c, a, rat(1));
            }
        }
        ComplexMatrix { re, im }
    };
    let coords = |m: &ComplexMatrix| -> Vec<Rational> {
        basis
            .iter()
            .map(|&b| match b {
                UnitaryBasis::Diagonal(a) => m.im.get(a, a).clone(),
                UnitaryBasis::Skew(a, c) => m.re.get(a, c).clone(),
                UnitaryBasis::Sym(a, c) => m.im.get(a, c).clone(),
            })
            .collect()
    };
    let mut entries = Vec::new();
    for i in 0..dim {
        for j in i + 1..dim {
            let (x, y) = (elem(basis[i]), elem(basis[j]));
            let c = x.mul(&y).sub(&y.mul(&x));
            entries.push((i, j, coords(&c)));
        }
    }
    LieAlgebra::new(format!("u{n}"), dim, entries).expect("u(n)")
}

/// `(su(2), circle = span{e3}, flip = diag(1, −1, −1))`.
///
/// The flip normalizes the circle and represents the nontrivial component of
/// its normalizer; `su(2)/circle` models S² and the flip-invariants model ℝP².
pub fn su2_circle() -> (Arc<LieAlgebra>, Subalgebra, LieAutomorphism) {
    let g = Arc::new(su2());
    let h = Subalgebra::new("circle", g.clone(), vec![unit_vec(3, 2)]).expect("circle");
    let flip = LieAutomorphism::new(
        "flip",
        g.clone(),
        RationalMatrix::diagonal(&[rat(1), rat(-1), rat(-1)]),
    )
    .expect("flip");
    (g, h, flip)
}

/// `(so(l+1), so(l), reflection)`.
///
/// so(l) sits in the upper-left block. The reflection is conjugation by
/// `diag(A, det A)` with `A = diag(1, …, 1, −1) ∈ O(l)`, i.e. by
/// `diag(1, …, 1, −1, −1)`; on the basis `E_ab` it is `E_ab ↦ s_a s_b E_ab`.
pub fn so_pair(l: usize) -> (Arc<LieAlgebra>, Subalgebra, LieAutomorphism) {
    assert!(l >= 1, "so(l) needs l >= 1");
    let n = l + 1;
    let g = Arc::new(so(n));
    let pairs = so_basis_pairs(n);
    let dim = pairs.len();
    let sub: Vec<Vec<Rational>> = pairs
        .iter()
        .enumerate()
        .filter(|(_, &(_, b))| b < l)
        .map(|(i, _)| unit_vec(dim, i))
        .collect();
    let h = Subalgebra::new(format!("so{l}"), g.clone(), sub).expect("so(l)");
    let sign = |a: usize| if a + 2 >= n { -1 } else { 1 };
    let diag: Vec<Rational> = pairs.iter().map(|&(a, b)| rat(sign(a) * sign(b))).collect();
    let refl = LieAutomorphism::new("reflection", g.clone(), RationalMatrix::diagonal(&diag))
        .expect("reflection");
    (g, h, refl)
}

/// `(u(n), u(k))` with u(k) in the upper-left block.
pub fn u_pair(n: usize, k: usize) -> (Arc<LieAlgebra>, Subalgebra) {
    assert!(k <= n);
    let g = Arc::new(u(n));
    let basis = u_basis(n);
    let dim = basis.len();
    let inside = |b: &UnitaryBasis| match *b {
        UnitaryBasis::Diagonal(a) => a < k,
        UnitaryBasis::Skew(_, c) | UnitaryBasis::Sym(_, c) => c < k,
    };
    let sub = basis
        .iter()
        .enumerate()
        .filter(|(_, b)| inside(b))
        .map(|(i, _)| unit_vec(dim, i))
        .collect();
    let h = Subalgebra::new(format!("u{k}"), g.clone(), sub).expect("u(k)");
    (g, h)
}

/// Looks up a built-in algebra by name: `su2`, `so<n>`, `u<n>`, `abelian<n>`.
pub fn builtin(name: &str) -> Option<LieAlgebra> {
    let num = |prefix: &str| name.strip_prefix(prefix).and_then(|s| s.parse::<usize>().ok());
    if name == "su2" {
        Some(su2())
    } else if let Some(n) = num("abelian") {
        Some(LieAlgebra::abelian(n))
    } else if let Some(n) = num("so").filter(|&n| (2..=6).contains(&n)) {
        Some(so(n))
    } else {
        num("u").filter(|&n| (1..=3).contains(&n)).map(u)
    }
}
