//! Gysin and Wang type sequences assembled as [`LesProblem`]s.

use super::les::{solve_les, LesProblem, LesTerm};
use super::{CheckReport, Verdict};
use crate::ceforms::relative_subcomplex;
use crate::cohom::relative_cohomology;
use crate::error::{Error, Result};
use crate::liealg::Subalgebra;

pub const GYSIN_CITATION: &str = "Gysin sequence for equidimensional actions with H(g,h) concentrated in degrees 0 and l: \
… → H^k(M) → H^{k-l}(M/F) → H^{k+1}(M/F) → H^{k+1}(M) → …";
pub const GYSIN_SPLIT_CITATION: &str = "for l even the normalizer acts on H^l(g,h) by -1, the transgression vanishes \
and the sequences split: 0 → H^k(M/F) → H^k(M) → H^{k-l}(M/F) → 0";
pub const ORIENTABLE_CITATION: &str = "an equidimensional action of a compact connected group on a connected compact \
orientable manifold induces a homologically orientable foliation (top basic cohomology = R)";
pub const WANG1_CITATION: &str = "a compact connected oriented M^{1+s} with an equidimensional action with s-dimensional \
orbits cannot be simply connected";
pub const WANG2_CITATION: &str = "compact connected simply connected oriented M^{2+s} with an equidimensional action: \
… → H^k(M) → H^k(g,h) → H^{k-1}(g,h) → H^{k+1}(M) → …";
pub const WANG3_CITATION: &str = "compact connected simply connected oriented M^{3+s} with an equidimensional action: \
… → H^k(M) → H^k(g,h) → H^{k-2}(g,h) → H^{k+1}(M) → …, and H^1(g,h) = 0";

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct GysinOptions {
    /// Require the top basic dimension to be 1.
    pub orientable: bool,
    /// Force the transgression arrows `H^{k−l}(B) → H^{k+1}(B)` to vanish (l even).
    pub split_even: bool,
}

fn total_label(k: usize) -> String {
    format!("h{k:02}")
}

fn dim_at(dims: &[usize], k: i64) -> usize {
    if k < 0 {
        0
    } else {
        dims.get(k as usize).copied().unwrap_or(0)
    }
}

fn total_term(k: i64, total: Option<&[usize]>, fixed: &[(usize, usize)]) -> LesTerm {
    let name = format!("H^{k}(M)");
    if k < 0 {
        return LesTerm::known(name, 0);
    }
    let ku = k as usize;
    if let Some(&(_, d)) = fixed.iter().find(|(deg, _)| *deg == ku) {
        return LesTerm::known(name, d);
    }
    match total {
        Some(t) => LesTerm::known(name, dim_at(t, k)),
        None => LesTerm::unknown(name, total_label(ku)),
    }
}

/// `… → H^k(M) → H^{k−l}(B) → H^{k+1}(B) → H^{k+1}(M) → …` for
/// `k = −1 … dim B + l`, with `H(M)` unknown unless `total` is given.
pub fn gysin_assemble(
    l: usize,
    basic: &[usize],
    total: Option<&[usize]>,
    opts: GysinOptions,
) -> Result<LesProblem> {
    if l == 0 {
        return Err(Error::Malformed("Gysin sequence needs l ≥ 1".into()));
    }
    if basic.is_empty() {
        return Err(Error::Malformed("basic dimensions are empty".into()));
    }
    let top = basic.len() - 1 + l;
    if let Some(t) = total {
        if t.len() != top + 1 {
            return Err(Error::Malformed(format!(
                "total dimensions must cover degrees 0..={top}, got {} entries",
                t.len()
            )));
        }
    }
    if opts.orientable && basic.last() != Some(&1) {
        return Err(Error::Hypothesis(format!(
            "homological orientability needs top basic dimension 1, got {}",
            basic.last().unwrap()
        )));
    }
    if opts.split_even && l % 2 == 1 {
        return Err(Error::Hypothesis(format!("splitting applies to even l, got l = {l}")));
    }
    let mut terms = Vec::new();
    let mut zero_arrows = Vec::new();
    for k in -1..=(top as i64) {
        terms.push(total_term(k, total, &[]));
        terms.push(LesTerm::known(format!("H^{}(B)", k - l as i64), dim_at(basic, k - l as i64)));
        if opts.split_even {
            zero_arrows.push(terms.len() - 1);
        }
        terms.push(LesTerm::known(format!("H^{}(B)", k + 1), dim_at(basic, k + 1)));
    }
    let mut p = LesProblem::new(format!("gysin l={l}"), terms);
    p.zero_arrows.extend(zero_arrows);
    p.period = 3;
    p.degree_range = (-1, top as i64);
    p.constraints.push(GYSIN_CITATION.into());
    if opts.orientable {
        p.constraints.push(ORIENTABLE_CITATION.into());
    }
    if opts.split_even {
        p.constraints.push(GYSIN_SPLIT_CITATION.into());
    }
    Ok(p)
}

/// Solves the Gysin sequence; no solution excludes the action.
pub fn gysin_check(
    l: usize,
    basic: &[usize],
    total: Option<&[usize]>,
    opts: GysinOptions,
    cap: usize,
) -> Result<CheckReport> {
    let problem = gysin_assemble(l, basic, total, opts)?;
    let solutions = solve_les(&problem, cap)?;
    let citation = if opts.split_even { GYSIN_SPLIT_CITATION } else { GYSIN_CITATION };
    let mut r = if solutions.is_empty() {
        CheckReport::new(Verdict::Excluded, citation).note(match total {
            Some(_) => "the given H(M) is incompatible with the sequence",
            None => "no Betti numbers of M are compatible with the sequence",
        })
    } else {
        CheckReport::new(Verdict::NotExcluded, citation)
            .note(format!("{} compatible assignment(s)", solutions.len()))
    };
    r.problem = Some(problem);
    r.solutions = solutions;
    Ok(r)
}

/// The gap `l` of a two-row pair: `H(𝔤,𝔥)` is ℚ in degrees 0 and `l` only.
pub fn gysin_gap(h: &Subalgebra) -> Result<usize> {
    let dims = relative_cohomology(&relative_subcomplex(h)?)?.dims().to_vec();
    let nonzero: Vec<usize> = (0..dims.len()).filter(|&k| dims[k] != 0).collect();
    match nonzero.as_slice() {
        [0, l] if dims[0] == 1 && dims[*l] == 1 => Ok(*l),
        _ => Err(Error::Hypothesis(format!(
            "H({}, {}) = {dims:?} is not concentrated in two degrees",
            h.parent().name(),
            h.name()
        ))),
    }
}

/// `… → H^k(M) → H^k(𝔤,𝔥) → H^{k+1−c}(𝔤,𝔥) → H^{k+1}(M) → …` for codimension `c`.
///
/// `fixed` pins selected total dimensions (degree, dim).
pub fn wang_assemble(
    codim: usize,
    gh_dims: &[usize],
    total: Option<&[usize]>,
    fixed: &[(usize, usize)],
) -> Result<LesProblem> {
    if !(2..=3).contains(&codim) {
        return Err(Error::Malformed(format!("no Wang sequence for codimension {codim}")));
    }
    if gh_dims.is_empty() {
        return Err(Error::Malformed("H(g,h) dimensions are empty".into()));
    }
    let top = gh_dims.len() - 1 + codim;
    if let Some(t) = total {
        if t.len() != top + 1 {
            return Err(Error::Malformed(format!(
                "total dimensions must cover degrees 0..={top}, got {} entries",
                t.len()
            )));
        }
    }
    let shift = codim as i64 - 1;
    let mut terms = Vec::new();
    for k in -1..=(top as i64) {
        terms.push(total_term(k, total, fixed));
        terms.push(LesTerm::known(format!("H^{k}(g,h)"), dim_at(gh_dims, k)));
        terms.push(LesTerm::known(format!("H^{}(g,h)", k - shift), dim_at(gh_dims, k - shift)));
    }
    let mut p = LesProblem::new(format!("wang codim={codim}"), terms);
    p.period = 3;
    p.degree_range = (-1, top as i64);
    p.constraints.push(if codim == 2 { WANG2_CITATION } else { WANG3_CITATION }.into());
    Ok(p)
}

/// Applies the codimension 1, 2 or 3 results to an equidimensional action
/// whose orbits have relative cohomology `gh_dims`.
pub fn wang_check(
    codim: usize,
    simply_connected: bool,
    oriented: bool,
    gh_dims: &[usize],
    cap: usize,
) -> Result<CheckReport> {
    match codim {
        1 => {
            if !oriented {
                return Err(Error::Hypothesis("codimension 1 result needs M oriented".into()));
            }
            if simply_connected {
                Ok(CheckReport::new(Verdict::Excluded, WANG1_CITATION).note(
                    "E2 degenerates; H^1(M) contains E2^{1,0} = H^0(g,h) ≠ 0, contradicting simple connectivity",
                ))
            } else {
                Ok(CheckReport::new(Verdict::NotExcluded, WANG1_CITATION)
                    .note("M is not assumed simply connected"))
            }
        }
        2 | 3 => {
            let mut missing = Vec::new();
            if !simply_connected {
                missing.push("simply connected");
            }
            if !oriented {
                missing.push("oriented");
            }
            if !missing.is_empty() {
                return Err(Error::Hypothesis(format!(
                    "codimension {codim} result needs M {}",
                    missing.join(" and ")
                )));
            }
            if gh_dims.first() != Some(&1) {
                return Err(Error::Hypothesis(format!(
                    "H^0(g,h) must be 1 for connected orbits, got {gh_dims:?}"
                )));
            }
            let top = gh_dims.len() - 1 + codim;
            let fixed = [(0, 1), (1, 0), (top, 1)];
            let problem = wang_assemble(codim, gh_dims, None, &fixed)?;
            let citation = if codim == 2 { WANG2_CITATION } else { WANG3_CITATION };
            if codim == 3 && gh_dims.get(1).copied().unwrap_or(0) != 0 {
                let mut r = CheckReport::new(Verdict::Inconsistent, citation).note(format!(
                    "H^1(g,h) = {} but codimension 3 forces H^1(g,h) = 0",
                    gh_dims[1]
                ));
                r.problem = Some(problem);
                return Ok(r);
            }
            let solutions = solve_les(&problem, cap)?;
            let verdict = if solutions.is_empty() {
                Verdict::Inconsistent
            } else {
                Verdict::NotExcluded
            };
            let mut r = CheckReport::new(verdict, citation)
                .note("injected: H^0(M) = 1, H^1(M) = 0 (simply connected), H^top(M) = 1 (oriented)");
            if solutions.is_empty() {
                r = r.note("no Betti numbers of M are compatible with the sequence");
            }
            r.problem = Some(problem);
            r.solutions = solutions;
            Ok(r)
        }
        _ => Err(Error::Malformed(format!("unsupported codimension {codim}"))),
    }
}
