//! The JSON input document and its resolution into engine objects.
//!
//! Indices in the document (bracket pairs) are 1-based; rationals are
//! strings `"p/q"` or integers.

use std::collections::BTreeMap;
use std::fmt;
use std::sync::Arc;

use serde::de::{self, Visitor};
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::complex::CochainComplex;
use crate::error::{Error, Result};
use crate::exactla::{parse_rational, Rational, RationalMatrix};
use crate::liealg::{LieAlgebra, LieAutomorphism, Subalgebra};
use crate::obstruct::CupForm;
use crate::specseq::{product_model, twist_by_deck, FilteredComplex, ProductModel};

/// An exact rational in the document.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Num(pub Rational);

impl Serialize for Num {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.serialize_str(&self.0.to_string())
    }
}

impl<'de> Deserialize<'de> for Num {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        struct V;
        impl Visitor<'_> for V {
            type Value = Num;
            fn expecting(&self, f: &mut fmt::Formatter) -> fmt::Result {
                f.write_str("a rational as \"p/q\", an integer string or an integer")
            }
            fn visit_str<E: de::Error>(self, s: &str) -> std::result::Result<Num, E> {
                parse_rational(s).map(Num).map_err(E::custom)
            }
            fn visit_i64<E: de::Error>(self, n: i64) -> std::result::Result<Num, E> {
                Ok(Num(Rational::from_integer(n.into())))
            }
            fn visit_u64<E: de::Error>(self, n: u64) -> std::result::Result<Num, E> {
                Ok(Num(Rational::from_integer(n.into())))
            }
        }
        d.deserialize_any(V)
    }
}

pub fn nums(v: &[Rational]) -> Vec<Num> {
    v.iter().cloned().map(Num).collect()
}

fn rats(v: &[Num]) -> Vec<Rational> {
    v.iter().map(|x| x.0.clone()).collect()
}

fn matrix(name: &str, rows: usize, cols: usize, data: &[Vec<Num>]) -> Result<RationalMatrix> {
    if data.len() != rows || data.iter().any(|r| r.len() != cols) {
        return Err(Error::DimensionMismatch(format!("{name}: expected a {rows}x{cols} matrix")));
    }
    RationalMatrix::from_flat(rows, cols, data.iter().flat_map(|r| rats(r)).collect())
}

pub fn matrix_rows(m: &RationalMatrix) -> Vec<Vec<Num>> {
    m.to_rows().iter().map(|r| nums(r)).collect()
}

/// `[i, j, [c_1, …, c_n]]`: `[e_i, e_j] = Σ c_k e_k`, indices 1-based.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Bracket(pub usize, pub usize, pub Vec<Num>);

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct AlgebraEntry {
    pub name: String,
    pub dim: usize,
    #[serde(default)]
    pub brackets: Vec<Bracket>,
}

impl AlgebraEntry {
    pub fn from_algebra(g: &LieAlgebra) -> Self {
        Self {
            name: g.name().to_string(),
            dim: g.dim(),
            brackets: g
                .nonzero_brackets()
                .map(|(i, j, c)| Bracket(i + 1, j + 1, nums(c)))
                .collect(),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct SubalgebraEntry {
    pub name: String,
    pub parent: String,
    pub basis: Vec<Vec<Num>>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct AutomorphismEntry {
    pub name: String,
    pub algebra: String,
    pub matrix: Vec<Vec<Num>>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ComplexEntry {
    pub name: String,
    pub dims: Vec<usize>,
    /// `differentials[n]` is the `dims[n+1] × dims[n]` matrix of `d_n`, row-major.
    #[serde(default)]
    pub differentials: Vec<Vec<Vec<Num>>>,
    /// Weight of every basis vector, per degree.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub filtration: Option<Vec<Vec<usize>>>,
}

/// One group generator acting on a complex, one matrix per degree.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ActionEntry {
    pub name: String,
    pub complex: String,
    pub matrices: Vec<Vec<Vec<Num>>>,
}

/// `base ⊗ Ω(algebra, subalgebra)`; omit `subalgebra` for the absolute complex.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ProductEntry {
    pub name: String,
    pub base: String,
    pub algebra: String,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub subalgebra: Option<String>,
}

/// Invariants of a product under `base_action ⊗ automorphism`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct TwistEntry {
    pub name: String,
    pub product: String,
    pub base_action: String,
    pub automorphism: String,
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct InputDocument {
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub lie_algebras: Vec<AlgebraEntry>,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub subalgebras: Vec<SubalgebraEntry>,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub automorphisms: Vec<AutomorphismEntry>,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub complexes: Vec<ComplexEntry>,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub actions: Vec<ActionEntry>,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub products: Vec<ProductEntry>,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub twists: Vec<TwistEntry>,
}

impl InputDocument {
    /// Syntax and rational parsing only; references are checked by [`Workspace::build`].
    pub fn parse(text: &str) -> std::result::Result<Self, serde_json::Error> {
        serde_json::from_str(text)
    }

    pub fn to_json(&self) -> String {
        super::report::render_json(&serde_json::to_value(self).expect("document serializes"))
    }
}

/// `{"b2": n, "matrices": [...]}`: the cup product `H² × H² → H⁴` by components.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct CupFormEntry {
    pub b2: usize,
    pub matrices: Vec<Vec<Vec<Num>>>,
}

impl CupFormEntry {
    pub fn build(&self) -> Result<CupForm> {
        let ms = self
            .matrices
            .iter()
            .enumerate()
            .map(|(i, m)| matrix(&format!("cup component {}", i + 1), self.b2, self.b2, m))
            .collect::<Result<Vec<_>>>()
            .map_err(|e| Error::InconsistentCup(e.to_string()))?;
        CupForm::new(self.b2, ms)
    }
}

/// A complex with its filtration weights, if any were given.
pub type WeightedComplex = (CochainComplex, Option<Vec<Vec<usize>>>);

/// A resolved document: every name maps to a validated engine object.
#[derive(Clone, Debug, Default)]
pub struct Workspace {
    pub algebras: BTreeMap<String, Arc<LieAlgebra>>,
    pub subalgebras: BTreeMap<String, Subalgebra>,
    pub automorphisms: BTreeMap<String, LieAutomorphism>,
    pub complexes: BTreeMap<String, WeightedComplex>,
    pub actions: BTreeMap<String, (String, Vec<RationalMatrix>)>,
    pub products: BTreeMap<String, ProductModel>,
    pub twists: BTreeMap<String, FilteredComplex>,
}

fn unique<'a>(kind: &str, names: impl Iterator<Item = &'a String>) -> Result<()> {
    let mut seen = std::collections::BTreeSet::new();
    for n in names {
        if !seen.insert(n) {
            return Err(Error::Malformed(format!("duplicate {kind} name {n:?}")));
        }
    }
    Ok(())
}

fn lookup<'a, T>(map: &'a BTreeMap<String, T>, kind: &str, name: &str) -> Result<&'a T> {
    map.get(name)
        .ok_or_else(|| Error::Unresolved(format!("no {kind} named {name:?}")))
}

impl Workspace {
    pub fn build(doc: &InputDocument, group_bound: usize) -> Result<Self> {
        unique("lie_algebras", doc.lie_algebras.iter().map(|x| &x.name))?;
        unique("subalgebras", doc.subalgebras.iter().map(|x| &x.name))?;
        unique("automorphisms", doc.automorphisms.iter().map(|x| &x.name))?;
        let complex_names = doc
            .complexes
            .iter()
            .map(|x| &x.name)
            .chain(doc.products.iter().map(|x| &x.name))
            .chain(doc.twists.iter().map(|x| &x.name));
        unique("complexes/products/twists", complex_names)?;
        unique("actions", doc.actions.iter().map(|x| &x.name))?;

        let mut ws = Workspace::default();
        for a in &doc.lie_algebras {
            let mut entries = Vec::with_capacity(a.brackets.len());
            for Bracket(i, j, c) in &a.brackets {
                if *i == 0 || *j == 0 || *i > a.dim || *j > a.dim {
                    return Err(Error::Malformed(format!(
                        "{}: bracket index ({i}, {j}) outside 1..={}",
                        a.name, a.dim
                    )));
                }
                entries.push((i - 1, j - 1, rats(c)));
            }
            let g = LieAlgebra::new(a.name.clone(), a.dim, entries)?;
            if let crate::liealg::JacobiVerdict::Violation { triple, .. } = g.jacobi_check() {
                return Err(Error::JacobiFailure { triple });
            }
            ws.algebras.insert(a.name.clone(), Arc::new(g));
        }
        for s in &doc.subalgebras {
            let g = lookup(&ws.algebras, "Lie algebra", &s.parent)?.clone();
            let basis = s.basis.iter().map(|v| rats(v)).collect();
            let h = Subalgebra::new(s.name.clone(), g, basis)?;
            h.require_valid()?;
            ws.subalgebras.insert(s.name.clone(), h);
        }
        for a in &doc.automorphisms {
            let g = lookup(&ws.algebras, "Lie algebra", &a.algebra)?.clone();
            let m = matrix(&a.name, g.dim(), g.dim(), &a.matrix)?;
            let aut = LieAutomorphism::new(a.name.clone(), g, m)?;
            aut.require_valid()?;
            ws.automorphisms.insert(a.name.clone(), aut);
        }
        for c in &doc.complexes {
            if c.dims.is_empty() {
                return Err(Error::Malformed(format!("complex {} has no degrees", c.name)));
            }
            let diffs = if c.differentials.is_empty() {
                c.dims.windows(2).map(|w| RationalMatrix::zeros(w[1], w[0])).collect()
            } else {
                if c.differentials.len() + 1 != c.dims.len() {
                    return Err(Error::DimensionMismatch(format!(
                        "complex {}: {} degrees need {} differentials",
                        c.name,
                        c.dims.len(),
                        c.dims.len() - 1
                    )));
                }
                c.differentials
                    .iter()
                    .enumerate()
                    .map(|(n, d)| {
                        matrix(&format!("{} d_{n}", c.name), c.dims[n + 1], c.dims[n], d)
                    })
                    .collect::<Result<Vec<_>>>()?
            };
            let cx = CochainComplex::new(c.name.clone(), c.dims.clone(), diffs)?;
            cx.check_d_squared()?;
            if let Some(w) = &c.filtration {
                let fc = FilteredComplex::new(cx.clone(), w.clone())?;
                if !fc.validate().is_ok() {
                    return Err(Error::InvalidFiltration(format!(
                        "complex {}: {:?}",
                        c.name,
                        fc.validate()
                    )));
                }
            }
            ws.complexes.insert(c.name.clone(), (cx, c.filtration.clone()));
        }
        for a in &doc.actions {
            let (cx, _) = lookup(&ws.complexes, "complex", &a.complex)?;
            if a.matrices.len() != cx.dims().len() {
                return Err(Error::InvalidAction(format!(
                    "action {} needs {} matrices",
                    a.name,
                    cx.dims().len()
                )));
            }
            let mats = a
                .matrices
                .iter()
                .enumerate()
                .map(|(n, m)| matrix(&format!("{} degree {n}", a.name), cx.dim(n), cx.dim(n), m))
                .collect::<Result<Vec<_>>>()?;
            for n in 0..cx.top_degree() {
                let d = cx.differential(n);
                if mats[n + 1].mul(&d)? != d.mul(&mats[n])? {
                    return Err(Error::InvalidAction(format!(
                        "action {} does not commute with d in degree {n}",
                        a.name
                    )));
                }
            }
            crate::exactla::group_closure(
                mats.iter().map(RationalMatrix::rows).sum(),
                &[block_diag(&mats)],
                group_bound,
            )?;
            ws.actions.insert(a.name.clone(), (a.complex.clone(), mats));
        }
        for p in &doc.products {
            let (base, _) = lookup(&ws.complexes, "complex", &p.base)?;
            let g = lookup(&ws.algebras, "Lie algebra", &p.algebra)?.clone();
            let h = match &p.subalgebra {
                Some(s) => {
                    let h = lookup(&ws.subalgebras, "subalgebra", s)?;
                    if h.parent().as_ref() != g.as_ref() {
                        return Err(Error::Unresolved(format!(
                            "subalgebra {s} is not a subalgebra of {}",
                            p.algebra
                        )));
                    }
                    h.clone()
                }
                None => Subalgebra::zero(g),
            };
            ws.products.insert(p.name.clone(), product_model(base, &h)?);
        }
        for t in &doc.twists {
            let model = lookup(&ws.products, "product", &t.product)?;
            let (on, mats) = lookup(&ws.actions, "action", &t.base_action)?;
            let base_name = &doc.products.iter().find(|p| p.name == t.product).unwrap().base;
            if on != base_name {
                return Err(Error::InvalidAction(format!(
                    "action {} acts on {on}, not on the base {base_name}",
                    t.base_action
                )));
            }
            let aut = lookup(&ws.automorphisms, "automorphism", &t.automorphism)?;
            let inv = twist_by_deck(model, mats, aut, group_bound)?;
            ws.twists.insert(t.name.clone(), inv.filtered);
        }
        Ok(ws)
    }

    /// A filtered complex by name: a complex with filtration, a product or a twist.
    pub fn filtered(&self, name: &str) -> Result<FilteredComplex> {
        if let Some((cx, w)) = self.complexes.get(name) {
            let w = w.as_ref().ok_or_else(|| {
                Error::InvalidFiltration(format!("complex {name} has no filtration weights"))
            })?;
            return FilteredComplex::new(cx.clone(), w.clone());
        }
        if let Some(p) = self.products.get(name) {
            return Ok(p.filtered().clone());
        }
        if let Some(t) = self.twists.get(name) {
            return Ok(t.clone());
        }
        Err(Error::Unresolved(format!("no complex, product or twist named {name:?}")))
    }
}

fn block_diag(blocks: &[RationalMatrix]) -> RationalMatrix {
    let n: usize = blocks.iter().map(RationalMatrix::rows).sum();
    let mut m = RationalMatrix::zeros(n, n);
    let mut off = 0;
    for b in blocks {
        for i in 0..b.rows() {
            for j in 0..b.cols() {
                m.set(off + i, off + j, b.get(i, j).clone());
            }
        }
        off += b.rows();
    }
    m
}
