//! Algebraic laws checked on one seeded random instance each; shared by the
//! property suite and the acceptance run.

use rand::Rng;

use super::{random_algebra, random_matrix, random_signed_permutation, random_vec, rng};
use eqss::ceforms::{binomial, ce_differential, ExteriorForm};
use eqss::cohom::{cup_forms, cup_product, lie_cohomology};
use eqss::exactla::{
    averaging_projector, fixed_subspace, group_closure, image_basis, is_zero_vec, kernel_basis, rank, rat,
    Rational, DEFAULT_GROUP_BOUND,
};

pub type Law = fn(u64) -> Result<(), String>;

pub const ALL: [(&str, Law); 7] = [
    ("d^2 = 0", d_squared),
    ("Jacobi", jacobi),
    ("antiderivation", antiderivation),
    ("contraction antisymmetry", contraction_antisymmetry),
    ("rank-nullity", rank_nullity),
    ("averaging projector idempotent", averaging_idempotent),
    ("cup product representative independence", cup_independence),
];

macro_rules! ensure {
    ($cond:expr, $($msg:tt)+) => {
        if !$cond {
            return Err(format!($($msg)+));
        }
    };
}

pub fn random_form(r: &mut impl Rng, dim: usize, k: usize) -> ExteriorForm {
    ExteriorForm::from_coeffs(dim, k, random_vec(r, binomial(dim, k))).expect("length matches")
}

pub fn d_squared(seed: u64) -> Result<(), String> {
    let g = random_algebra(seed);
    let ce = ce_differential(&g).map_err(|e| e.to_string())?;
    for k in 1..g.dim() {
        let dd = ce.differential(k).mul(&ce.differential(k - 1)).expect("shapes");
        ensure!(dd.is_zero(), "d^2 != 0 in degree {}", k - 1);
    }
    Ok(())
}

pub fn jacobi(seed: u64) -> Result<(), String> {
    let g = random_algebra(seed);
    ensure!(g.jacobi_check().is_ok(), "jacobi_check fails: {:?}", g.jacobi_check());
    let mut r = rng(seed ^ 2);
    let n = g.dim();
    let (x, y, z) = (random_vec(&mut r, n), random_vec(&mut r, n), random_vec(&mut r, n));
    let b = |a: &[Rational], c: &[Rational]| g.bracket(a, c).expect("dims");
    let mut sum = b(&b(&x, &y), &z);
    for (s, (t, u)) in sum.iter_mut().zip(b(&b(&y, &z), &x).into_iter().zip(b(&b(&z, &x), &y))) {
        *s += t + u;
    }
    ensure!(is_zero_vec(&sum), "Jacobi sum on random vectors is {sum:?}");
    Ok(())
}

pub fn antiderivation(seed: u64) -> Result<(), String> {
    let g = random_algebra(seed);
    let ce = ce_differential(&g).map_err(|e| e.to_string())?;
    let n = g.dim();
    let mut r = rng(seed ^ 4);
    let ka = r.gen_range(0..n);
    let kb = r.gen_range(0..n - ka);
    let (a, b) = (random_form(&mut r, n, ka), random_form(&mut r, n, kb));
    let d = |f: &ExteriorForm| ce.d(f).expect("degree below top");
    let lhs = d(&a.wedge(&b).expect("dims"));
    let sign = rat(if ka % 2 == 0 { 1 } else { -1 });
    let rhs = d(&a)
        .wedge(&b)
        .expect("dims")
        .add(&a.wedge(&d(&b)).expect("dims").scale(&sign))
        .expect("dims");
    ensure!(lhs == rhs, "d(a^b) differs for degrees {ka}, {kb}");
    Ok(())
}

pub fn contraction_antisymmetry(seed: u64) -> Result<(), String> {
    let mut r = rng(seed ^ 5);
    let n = r.gen_range(2..=6);
    let k = r.gen_range(2..=n);
    let w = random_form(&mut r, n, k);
    let (x, y) = (random_vec(&mut r, n), random_vec(&mut r, n));
    let i = |f: &ExteriorForm, v: &[Rational]| f.contract(v).expect("positive degree");
    ensure!(i(&i(&w, &x), &x).is_zero(), "i_x i_x != 0");
    ensure!(
        i(&i(&w, &y), &x) == i(&i(&w, &x), &y).scale(&rat(-1)),
        "i_x i_y != -i_y i_x"
    );
    ensure!(ExteriorForm::zero(n, 0).contract(&x).is_err(), "degree 0 contraction accepted");
    Ok(())
}

pub fn rank_nullity(seed: u64) -> Result<(), String> {
    let mut r = rng(seed);
    let (rows, cols) = (r.gen_range(0..=6), r.gen_range(0..=6));
    let m = random_matrix(&mut r, rows, cols);
    let kernel = kernel_basis(&m);
    let k = rank(&m);
    ensure!(k + kernel.dim() == cols, "rank {k} + nullity {} != {cols}", kernel.dim());
    ensure!(image_basis(&m).dim() == k, "image dimension differs from rank");
    ensure!(rank(&m.transpose()) == k, "row rank differs from column rank");
    for v in kernel.vectors() {
        ensure!(is_zero_vec(&m.mul_vec(v).expect("dims")), "kernel vector not annihilated");
    }
    Ok(())
}

pub fn averaging_idempotent(seed: u64) -> Result<(), String> {
    let mut r = rng(seed);
    let n = r.gen_range(1..=5);
    let gens: Vec<_> = (0..r.gen_range(1..=2)).map(|_| random_signed_permutation(&mut r, n)).collect();
    let group = group_closure(n, &gens, DEFAULT_GROUP_BOUND).map_err(|e| e.to_string())?;
    let p = averaging_projector(n, &group).map_err(|e| e.to_string())?;
    ensure!(p.mul(&p).expect("square") == p, "P^2 != P");
    let fixed = fixed_subspace(n, &gens, DEFAULT_GROUP_BOUND).map_err(|e| e.to_string())?;
    ensure!(image_basis(&p) == fixed, "image of P is not the fixed subspace");
    Ok(())
}

/// `[a + dη] ∪ [b + dζ] = [a] ∪ [b]` for every pair of representatives.
pub fn cup_independence(seed: u64) -> Result<(), String> {
    let g = random_algebra(seed);
    let ce = ce_differential(&g).map_err(|e| e.to_string())?;
    let h = lie_cohomology(&g).map_err(|e| e.to_string())?;
    let n = g.dim();
    let mut r = rng(seed ^ 7);
    let mut perturbed = |k: usize, i: usize| {
        let form = h.representative_form(k, i).expect("class exists");
        if k == 0 {
            return form;
        }
        let eta = random_form(&mut r, n, k - 1);
        form.add(&ce.d(&eta).expect("degree below top")).expect("dims")
    };
    for ka in 0..=n {
        for kb in 0..=n - ka {
            for i in 0..h.dims()[ka] {
                for j in 0..h.dims()[kb] {
                    let base = cup_product(&h, (ka, i), (kb, j)).map_err(|e| e.to_string())?;
                    let (a, b) = (perturbed(ka, i), perturbed(kb, j));
                    let moved = cup_forms(&h, &a, &b).map_err(|e| e.to_string())?;
                    ensure!(moved == base, "class {i} in degree {ka} times class {j} in degree {kb}");
                }
            }
        }
    }
    Ok(())
}
