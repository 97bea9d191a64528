//! Shared generators and independent oracles for the integration tests.
#![allow(dead_code, clippy::needless_range_loop)]

pub mod laws;

use std::collections::BTreeMap;
use std::sync::Arc;

use eqss::exactla::{rat, ratio, Rational, RationalMatrix};
use eqss::liealg::{library, LieAlgebra};
use eqss::specseq::{CochainComplex, FilteredComplex};
use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// Small rationals, zero with probability about one third.
pub fn small_rational(r: &mut impl Rng) -> Rational {
    match r.gen_range(0..9) {
        0..=2 => rat(0),
        3 => ratio(r.gen_range(-3..=3), r.gen_range(1..=3)),
        _ => rat(r.gen_range(-3..=3)),
    }
}

pub fn random_vec(r: &mut impl Rng, n: usize) -> Vec<Rational> {
    (0..n).map(|_| small_rational(r)).collect()
}

pub fn random_matrix(r: &mut impl Rng, rows: usize, cols: usize) -> RationalMatrix {
    RationalMatrix::from_flat(rows, cols, (0..rows * cols).map(|_| small_rational(r)).collect())
        .expect("shape")
}

/// `L U` with unit triangular factors: always invertible.
pub fn random_invertible(r: &mut impl Rng, n: usize) -> RationalMatrix {
    let mut l = RationalMatrix::identity(n);
    let mut u = RationalMatrix::identity(n);
    for i in 0..n {
        for j in 0..i {
            l.set(i, j, rat(r.gen_range(-2..=2)));
            u.set(j, i, rat(r.gen_range(-2..=2)));
        }
    }
    l.mul(&u).expect("square")
}

pub fn heisenberg() -> LieAlgebra {
    LieAlgebra::new("heis", 3, [(0, 1, vec![rat(0), rat(0), rat(1)])]).expect("heisenberg")
}

/// A direct sum of small Lie algebras in a random basis, dimension ≤ 6.
pub fn random_algebra(seed: u64) -> Arc<LieAlgebra> {
    let mut r = rng(seed);
    let pieces = [
        library::su2(),
        heisenberg(),
        LieAlgebra::abelian(1),
        LieAlgebra::abelian(2),
        library::u(2),
    ];
    let mut g = pieces.choose(&mut r).expect("nonempty").clone();
    while g.dim() < 6 && r.gen_bool(0.5) {
        let next = pieces.choose(&mut r).expect("nonempty");
        if g.dim() + next.dim() <= 6 {
            g = g.direct_sum(next);
        }
    }
    let p = random_invertible(&mut r, g.dim());
    Arc::new(g.change_basis(&p).expect("invertible"))
}

/// Sorted index sets of size `k` from `0..n`, lexicographic.
pub fn combinations(n: usize, k: usize) -> Vec<Vec<usize>> {
    fn go(start: usize, n: usize, k: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == k {
            out.push(cur.clone());
            return;
        }
        for i in start..n {
            cur.push(i);
            go(i + 1, n, k, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    go(0, n, k, &mut Vec::new(), &mut out);
    out
}

/// `α(v_1, …, v_k)` for `α = Σ α_I e^I` with `e^I(v_1, …, v_k) = det[v_b[I_a]]`.
pub fn evaluate(n: usize, alpha: &[Rational], vs: &[Vec<Rational>]) -> Rational {
    let k = vs.len();
    let mut total = rat(0);
    for (idx, set) in combinations(n, k).iter().enumerate() {
        if alpha[idx] == rat(0) {
            continue;
        }
        let m = RationalMatrix::from_flat(
            k,
            k,
            set.iter().flat_map(|&i| vs.iter().map(move |v| v[i].clone())).collect(),
        )
        .expect("square");
        total += &alpha[idx] * m.determinant().expect("square");
    }
    total
}

/// `d: Λᵏ → Λᵏ⁺¹` from the invariant formula
/// `dα(X_0, …, X_k) = Σ_{a<b} (−1)^{a+b} α([X_a, X_b], X_0, …, X̂_a, …, X̂_b, …, X_k)`.
pub fn ce_oracle(g: &LieAlgebra, k: usize) -> RationalMatrix {
    let n = g.dim();
    let src = combinations(n, k);
    let dst = combinations(n, k + 1);
    let e = |i: usize| {
        let mut v = vec![rat(0); n];
        v[i] = rat(1);
        v
    };
    let mut m = RationalMatrix::zeros(dst.len(), src.len());
    for (col, _) in src.iter().enumerate() {
        let mut alpha = vec![rat(0); src.len()];
        alpha[col] = rat(1);
        for (row, j) in dst.iter().enumerate() {
            let mut val = rat(0);
            for a in 0..=k {
                for b in a + 1..=k {
                    let br = g.bracket(&e(j[a]), &e(j[b])).expect("dims");
                    let mut args = vec![br];
                    args.extend((0..=k).filter(|&c| c != a && c != b).map(|c| e(j[c])));
                    let sign = if (a + b) % 2 == 0 { rat(1) } else { rat(-1) };
                    val += sign * evaluate(n, &alpha, &args);
                }
            }
            m.set(row, col, val);
        }
    }
    m
}

/// Elementary filtered pieces with known pages.
#[derive(Clone, Copy, Debug)]
pub enum Piece {
    /// One generator in degree `n`, weight `p`: survives to E∞.
    Single { n: usize, p: usize },
    /// `x ↦ y`, `x` in degree `n` of weight `p`, `y` of weight `p + s`:
    /// both survive exactly on pages `r ≤ s`.
    Pair { n: usize, p: usize, s: usize },
}

/// A filtered complex assembled from pieces and hidden by a
/// filtration-preserving change of basis, with its pages predicted from the pieces.
pub struct ConstructedFiltered {
    pub fc: FilteredComplex,
    pub pieces: Vec<Piece>,
    pub cohomology: Vec<usize>,
}

impl ConstructedFiltered {
    /// Predicted `E_r^{p,q}` dims, zeros omitted.
    pub fn expected_page(&self, r: usize) -> BTreeMap<(usize, i64), usize> {
        let mut out = BTreeMap::new();
        let mut bump = |p: usize, n: usize| {
            *out.entry((p, n as i64 - p as i64)).or_insert(0) += 1;
        };
        for piece in &self.pieces {
            match *piece {
                Piece::Single { n, p } => bump(p, n),
                Piece::Pair { n, p, s } if r <= s => {
                    bump(p, n);
                    bump(p + s, n + 1);
                }
                Piece::Pair { .. } => {}
            }
        }
        out
    }
}

/// Degrees `0..=top`, at most 8 basis vectors per degree, weights ≤ 3.
pub fn random_filtered(seed: u64) -> ConstructedFiltered {
    let mut r = rng(seed);
    let top = r.gen_range(1..=4usize);
    let mut dims = vec![0usize; top + 1];
    let mut pieces = Vec::new();
    for _ in 0..r.gen_range(1..=10) {
        let piece = if r.gen_bool(0.4) {
            Piece::Single {
                n: r.gen_range(0..=top),
                p: r.gen_range(0..=3),
            }
        } else {
            let p = r.gen_range(0..=2);
            Piece::Pair {
                n: r.gen_range(0..top),
                p,
                s: r.gen_range(0..=3 - p),
            }
        };
        let fits = match piece {
            Piece::Single { n, .. } => dims[n] < 8,
            Piece::Pair { n, .. } => dims[n] < 8 && dims[n + 1] < 8,
        };
        if !fits {
            continue;
        }
        match piece {
            Piece::Single { n, .. } => dims[n] += 1,
            Piece::Pair { n, .. } => {
                dims[n] += 1;
                dims[n + 1] += 1;
            }
        }
        pieces.push(piece);
    }
    // standard basis: vectors in piece order
    let mut weights: Vec<Vec<usize>> = vec![Vec::new(); top + 1];
    let mut links = Vec::new();
    let mut cohomology = vec![0; top + 1];
    for piece in &pieces {
        match *piece {
            Piece::Single { n, p } => {
                weights[n].push(p);
                cohomology[n] += 1;
            }
            Piece::Pair { n, p, s } => {
                links.push((n, weights[n].len(), weights[n + 1].len()));
                weights[n].push(p);
                weights[n + 1].push(p + s);
            }
        }
    }
    let mut diffs: Vec<RationalMatrix> = (0..top).map(|n| RationalMatrix::zeros(dims[n + 1], dims[n])).collect();
    for (n, x, y) in links {
        diffs[n].set(y, x, rat(1));
    }
    // filtration-preserving basis change, then a shuffle
    let mut changes = Vec::new();
    let mut new_weights = Vec::new();
    for n in 0..=top {
        let w = &weights[n];
        let d = w.len();
        let mut u = RationalMatrix::identity(d);
        for i in 0..d {
            for j in 0..d {
                if (w[j], j) > (w[i], i) && r.gen_bool(0.5) {
                    u.set(j, i, small_rational(&mut r));
                }
            }
        }
        let mut perm: Vec<usize> = (0..d).collect();
        perm.shuffle(&mut r);
        let cols: Vec<Vec<Rational>> = perm.iter().map(|&c| u.column(c)).collect();
        changes.push(RationalMatrix::from_columns(d, &cols));
        new_weights.push(perm.iter().map(|&c| w[c]).collect::<Vec<_>>());
    }
    let new_diffs = (0..top)
        .map(|n| {
            let inv = changes[n + 1].inverse().expect("unipotent times permutation");
            inv.mul(&diffs[n]).unwrap().mul(&changes[n]).unwrap()
        })
        .collect();
    let c = CochainComplex::new(format!("random{seed}"), dims, new_diffs).expect("shapes");
    ConstructedFiltered {
        fc: FilteredComplex::new(c, new_weights).expect("weights"),
        pieces,
        cohomology,
    }
}

/// A direct sum of su(2), Heisenberg and abelian pieces with an automorphism
/// built blockwise, both conjugated into a random basis. `finite` restricts
/// the blocks to signed permutations, so the automorphism has finite order.
pub fn random_algebra_with_automorphism(
    seed: u64,
    finite: bool,
) -> (Arc<LieAlgebra>, eqss::liealg::LieAutomorphism) {
    let mut r = rng(seed);
    let mut g: Option<LieAlgebra> = None;
    let mut blocks: Vec<RationalMatrix> = Vec::new();
    while g.as_ref().is_none_or(|g| g.dim() < 6 && r.gen_bool(0.5)) {
        let (piece, a) = match r.gen_range(0..3) {
            0 => {
                // signed permutations with det 1 are rotations of su(2)
                let mut m = random_signed_permutation(&mut r, 3);
                if m.determinant().expect("square") != rat(1) {
                    m = m.scale(&rat(-1));
                }
                (library::su2(), m)
            }
            1 => {
                let b = if finite {
                    random_signed_permutation(&mut r, 2)
                } else {
                    random_invertible(&mut r, 2)
                };
                let det = b.determinant().unwrap();
                let mut m = RationalMatrix::zeros(3, 3);
                for i in 0..2 {
                    for j in 0..2 {
                        m.set(i, j, b.get(i, j).clone());
                    }
                }
                m.set(2, 2, det);
                (heisenberg(), m)
            }
            _ => {
                let n = r.gen_range(1..=2);
                let m = if finite {
                    random_signed_permutation(&mut r, n)
                } else {
                    random_invertible(&mut r, n)
                };
                (LieAlgebra::abelian(n), m)
            }
        };
        if g.as_ref().map_or(0, LieAlgebra::dim) + piece.dim() > 6 {
            break;
        }
        g = Some(match g {
            None => piece,
            Some(g) => g.direct_sum(&piece),
        });
        blocks.push(a);
    }
    let g = g.expect("at least one piece");
    let n = g.dim();
    let mut a = RationalMatrix::zeros(n, n);
    let mut off = 0;
    for b in &blocks {
        for i in 0..b.rows() {
            for j in 0..b.cols() {
                a.set(off + i, off + j, b.get(i, j).clone());
            }
        }
        off += b.rows();
    }
    let p = random_invertible(&mut r, n);
    let pinv = p.inverse().expect("invertible");
    let g = Arc::new(g.change_basis(&p).expect("invertible"));
    let a = pinv.mul(&a).unwrap().mul(&p).unwrap();
    let aut = eqss::liealg::LieAutomorphism::new("a", g.clone(), a).expect("square");
    (g, aut)
}

/// A signed permutation matrix.
pub fn random_signed_permutation(r: &mut impl Rng, n: usize) -> RationalMatrix {
    let mut perm: Vec<usize> = (0..n).collect();
    perm.shuffle(r);
    let mut m = RationalMatrix::zeros(n, n);
    for (col, &row) in perm.iter().enumerate() {
        m.set(row, col, rat(if r.gen_bool(0.5) { 1 } else { -1 }));
    }
    m
}
