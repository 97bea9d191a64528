//! Long exact sequences as rank bookkeeping: `0 → T_0 → T_1 → … → T_{m−1} → 0`
//! is exact iff `dim T_i = r_{i−1} + r_i` with `r_{−1} = r_{m−1} = 0`.

use std::collections::{BTreeMap, BTreeSet};

use crate::error::{Error, Result};

pub const DEFAULT_SOLVER_CAP: usize = 50;
pub const MAX_UNKNOWNS: usize = 12;

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum TermDim {
    Known(usize),
    Unknown(String),
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LesTerm {
    pub name: String,
    pub dim: TermDim,
}

impl LesTerm {
    pub fn known(name: impl Into<String>, dim: usize) -> Self {
        Self {
            name: name.into(),
            dim: TermDim::Known(dim),
        }
    }

    pub fn unknown(name: impl Into<String>, label: impl Into<String>) -> Self {
        Self {
            name: name.into(),
            dim: TermDim::Unknown(label.into()),
        }
    }
}

/// A finite exact sequence with some unknown term dimensions.
///
/// Arrow `i` goes from `terms[i]` to `terms[i+1]`. Arrows listed in
/// `zero_arrows` are forced to vanish. `period` and `degree_range` describe
/// how the sequence was unrolled and are informational.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LesProblem {
    pub name: String,
    pub terms: Vec<LesTerm>,
    pub zero_arrows: BTreeSet<usize>,
    pub period: usize,
    pub degree_range: (i64, i64),
    pub constraints: Vec<String>,
}

impl LesProblem {
    pub fn new(name: impl Into<String>, terms: Vec<LesTerm>) -> Self {
        let last = terms.len() as i64 - 1;
        Self {
            name: name.into(),
            terms,
            zero_arrows: BTreeSet::new(),
            period: 1,
            degree_range: (0, last.max(0)),
            constraints: Vec::new(),
        }
    }

    /// Unknown labels in lexicographic order.
    pub fn labels(&self) -> Vec<String> {
        let set: BTreeSet<&String> = self
            .terms
            .iter()
            .filter_map(|t| match &t.dim {
                TermDim::Unknown(l) => Some(l),
                TermDim::Known(_) => None,
            })
            .collect();
        set.into_iter().cloned().collect()
    }

    pub fn arrow_count(&self) -> usize {
        self.terms.len().saturating_sub(1)
    }

    /// Renames unknown labels; labels missing from `map` are kept.
    pub fn relabel(&self, map: &BTreeMap<String, String>) -> Self {
        let mut out = self.clone();
        for t in &mut out.terms {
            if let TermDim::Unknown(l) = &mut t.dim {
                if let Some(n) = map.get(l) {
                    *l = n.clone();
                }
            }
        }
        out
    }
}

/// An assignment of every unknown and the rank of every arrow.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord)]
pub struct LesSolution {
    pub assignments: BTreeMap<String, usize>,
    pub map_ranks: Vec<usize>,
}

impl LesSolution {
    pub fn term_dims(&self, p: &LesProblem) -> Option<Vec<usize>> {
        p.terms
            .iter()
            .map(|t| match &t.dim {
                TermDim::Known(d) => Some(*d),
                TermDim::Unknown(l) => self.assignments.get(l).copied(),
            })
            .collect()
    }
}

/// Ranks forced by exactness, or `None` if some rank would be negative,
/// a zero arrow would be nonzero, or the last term is not absorbed.
fn ranks_for(p: &LesProblem, dims: &[usize]) -> Option<Vec<usize>> {
    let m = dims.len();
    let mut ranks = Vec::with_capacity(m.saturating_sub(1));
    let mut prev = 0usize;
    for (i, &d) in dims.iter().enumerate() {
        let r = d.checked_sub(prev)?;
        if i + 1 == m {
            return (r == 0).then_some(ranks);
        }
        if p.zero_arrows.contains(&i) && r != 0 {
            return None;
        }
        ranks.push(r);
        prev = r;
    }
    Some(ranks)
}

/// Prunes a partial assignment from both ends up to the first unknown.
fn partial_ok(p: &LesProblem, dims: &[Option<usize>]) -> bool {
    let m = dims.len();
    let mut prev = 0usize;
    for i in 0..m {
        let Some(d) = dims[i] else { break };
        let Some(r) = d.checked_sub(prev) else { return false };
        if i + 1 == m {
            return r == 0;
        }
        if p.zero_arrows.contains(&i) && r != 0 {
            return false;
        }
        if let Some(next) = dims[i + 1] {
            if r > next {
                return false;
            }
        }
        prev = r;
    }
    // from the right: r_{m−1} = 0, r_{i−1} = dim T_i − r_i
    let mut next = 0usize;
    for i in (0..m).rev() {
        let Some(d) = dims[i] else { break };
        let Some(r) = d.checked_sub(next) else { return false };
        if i == 0 {
            return r == 0;
        }
        if p.zero_arrows.contains(&(i - 1)) && r != 0 {
            return false;
        }
        next = r;
    }
    true
}

/// All nonnegative assignments (each unknown `≤ cap`) making the sequence
/// exact, sorted by the values of the labels in lexicographic label order.
pub fn solve_les(p: &LesProblem, cap: usize) -> Result<Vec<LesSolution>> {
    let labels = p.labels();
    if labels.len() > MAX_UNKNOWNS {
        return Err(Error::SolverBound(format!(
            "{} unknowns exceed the limit of {MAX_UNKNOWNS}",
            labels.len()
        )));
    }
    // unknowns in order of first appearance, so each one meets a known prefix
    let mut order: Vec<String> = Vec::new();
    for t in &p.terms {
        if let TermDim::Unknown(l) = &t.dim {
            if !order.contains(l) {
                order.push(l.clone());
            }
        }
    }
    let mut values: BTreeMap<String, usize> = BTreeMap::new();
    let mut out = Vec::new();
    search(p, &order, 0, cap, &mut values, &mut out);
    out.sort_by(|a, b| {
        let key = |s: &LesSolution| labels.iter().map(|l| s.assignments[l]).collect::<Vec<_>>();
        key(a).cmp(&key(b))
    });
    Ok(out)
}

fn current_dims(p: &LesProblem, values: &BTreeMap<String, usize>) -> Vec<Option<usize>> {
    p.terms
        .iter()
        .map(|t| match &t.dim {
            TermDim::Known(d) => Some(*d),
            TermDim::Unknown(l) => values.get(l).copied(),
        })
        .collect()
}

fn search(
    p: &LesProblem,
    order: &[String],
    k: usize,
    cap: usize,
    values: &mut BTreeMap<String, usize>,
    out: &mut Vec<LesSolution>,
) {
    let dims = current_dims(p, values);
    if !partial_ok(p, &dims) {
        return;
    }
    if k == order.len() {
        let dims: Vec<usize> = dims.into_iter().map(|d| d.expect("all assigned")).collect();
        if let Some(map_ranks) = ranks_for(p, &dims) {
            out.push(LesSolution {
                assignments: values.clone(),
                map_ranks,
            });
        }
        return;
    }
    for x in 0..=cap {
        values.insert(order[k].clone(), x);
        search(p, order, k + 1, cap, values, out);
    }
    values.remove(&order[k]);
}

/// Independent re-check of a solution: every unknown assigned, ranks
/// nonnegative and bounded by both ends, exactness at every term, forced
/// zero arrows vanish.
pub fn verify_exactness(p: &LesProblem, s: &LesSolution) -> std::result::Result<(), String> {
    for l in p.labels() {
        if !s.assignments.contains_key(&l) {
            return Err(format!("unknown {l} is unassigned"));
        }
    }
    let dims = s.term_dims(p).ok_or("unassigned term")?;
    let m = dims.len();
    if s.map_ranks.len() != m.saturating_sub(1) {
        return Err(format!("{} ranks for {} arrows", s.map_ranks.len(), m.saturating_sub(1)));
    }
    for (i, &r) in s.map_ranks.iter().enumerate() {
        if r > dims[i] || r > dims[i + 1] {
            return Err(format!("arrow {i} has rank {r} exceeding its source or target"));
        }
        if p.zero_arrows.contains(&i) && r != 0 {
            return Err(format!("arrow {i} must vanish"));
        }
    }
    for i in 0..m {
        let incoming = if i == 0 { 0 } else { s.map_ranks[i - 1] };
        let outgoing = if i + 1 == m { 0 } else { s.map_ranks[i] };
        if dims[i] != incoming + outgoing {
            return Err(format!(
                "not exact at {}: dim {} ≠ {incoming} + {outgoing}",
                p.terms[i].name, dims[i]
            ));
        }
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn isomorphism_is_forced() {
        let p = LesProblem::new("iso", vec![LesTerm::unknown("A", "a"), LesTerm::known("B", 3)]);
        let s = solve_les(&p, DEFAULT_SOLVER_CAP).unwrap();
        assert_eq!(s.len(), 1);
        assert_eq!(s[0].assignments["a"], 3);
        assert_eq!(s[0].map_ranks, vec![3]);
    }

    #[test]
    fn middle_rank_enumeration() {
        let p = LesProblem::new(
            "four",
            vec![
                LesTerm::unknown("A", "a"),
                LesTerm::known("Q", 1),
                LesTerm::known("Q", 1),
                LesTerm::unknown("A'", "b"),
            ],
        );
        let s = solve_les(&p, DEFAULT_SOLVER_CAP).unwrap();
        let vals: Vec<(usize, usize)> = s.iter().map(|x| (x.assignments["a"], x.assignments["b"])).collect();
        assert_eq!(vals, vec![(0, 0), (1, 1)]);
        for x in &s {
            verify_exactness(&p, x).unwrap();
        }
    }

    #[test]
    fn repeated_labels_and_zero_arrows() {
        // 0 → A → 2 → A → 0 forces A = 1
        let mut p = LesProblem::new(
            "rep",
            vec![LesTerm::unknown("A", "a"), LesTerm::known("B", 2), LesTerm::unknown("A", "a")],
        );
        let s = solve_les(&p, 10).unwrap();
        assert_eq!(s.len(), 1);
        assert_eq!(s[0].assignments["a"], 1);
        p.zero_arrows.insert(0);
        assert!(solve_les(&p, 10).unwrap().is_empty());
    }

    #[test]
    fn too_many_unknowns() {
        let terms = (0..13).map(|i| LesTerm::unknown("T", format!("x{i:02}"))).collect();
        assert!(matches!(
            solve_les(&LesProblem::new("big", terms), 2),
            Err(Error::SolverBound(_))
        ));
    }

    #[test]
    fn verifier_rejects_bad_solutions() {
        let p = LesProblem::new("iso", vec![LesTerm::unknown("A", "a"), LesTerm::known("B", 3)]);
        let bad = LesSolution {
            assignments: BTreeMap::from([("a".to_string(), 2)]),
            map_ranks: vec![2],
        };
        assert!(verify_exactness(&p, &bad).is_err());
    }
}
