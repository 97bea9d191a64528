//! The shipped example corpus, generated from the built-in library.
//!
//! `cargo run --example export_corpus` writes these documents to `data/`;
//! the corpus test checks the files on disk against this module.

use crate::complex::CochainComplex;
use crate::exactla::{rat, RationalMatrix};
use crate::liealg::{library, LieAlgebra, LieAutomorphism, Subalgebra};
use crate::specseq::{models, FilteredComplex};

use super::input::{
    matrix_rows, nums, ActionEntry, AlgebraEntry, AutomorphismEntry, ComplexEntry, CupFormEntry,
    InputDocument, Num, ProductEntry, SubalgebraEntry, TwistEntry,
};

fn complex_entry(c: &CochainComplex, filtration: Option<Vec<Vec<usize>>>) -> ComplexEntry {
    let differentials = if c.differentials().iter().all(RationalMatrix::is_zero) {
        Vec::new()
    } else {
        c.differentials().iter().map(matrix_rows).collect()
    };
    ComplexEntry {
        name: c.name().to_string(),
        dims: c.dims().to_vec(),
        differentials,
        filtration,
    }
}

fn filtered_entry(name: &str, fc: &FilteredComplex) -> ComplexEntry {
    let mut s = complex_entry(fc.complex(), Some(fc.weights().to_vec()));
    s.name = name.to_string();
    s
}

fn subalgebra_entry(h: &Subalgebra) -> SubalgebraEntry {
    SubalgebraEntry {
        name: h.name().to_string(),
        parent: h.parent().name().to_string(),
        basis: h.basis().vectors().iter().map(|v| nums(v)).collect(),
    }
}

fn automorphism_entry(a: &LieAutomorphism) -> AutomorphismEntry {
    AutomorphismEntry {
        name: a.name().to_string(),
        algebra: a.algebra().name().to_string(),
        matrix: matrix_rows(a.matrix()),
    }
}

fn bases() -> Vec<CochainComplex> {
    vec![models::point(), models::circle(), models::sphere(2), models::sphere(4)]
}

fn products(algebra: &str, subalgebra: Option<&str>) -> Vec<ProductEntry> {
    bases()
        .iter()
        .map(|b| ProductEntry {
            name: match subalgebra {
                Some(s) => format!("{}_x_{algebra}_{s}", b.name()),
                None => format!("{}_x_{algebra}", b.name()),
            },
            base: b.name().to_string(),
            algebra: algebra.to_string(),
            subalgebra: subalgebra.map(str::to_string),
        })
        .collect()
}

fn pair_document(g: &LieAlgebra, h: &Subalgebra, auts: &[&LieAutomorphism]) -> InputDocument {
    let mut ps = products(g.name(), None);
    ps.extend(products(g.name(), Some(h.name())));
    InputDocument {
        lie_algebras: vec![AlgebraEntry::from_algebra(g)],
        subalgebras: vec![subalgebra_entry(h)],
        automorphisms: auts.iter().map(|a| automorphism_entry(a)).collect(),
        complexes: bases().iter().map(|b| complex_entry(b, None)).collect(),
        products: ps,
        ..InputDocument::default()
    }
}

fn antipodal() -> InputDocument {
    let (g, h, refl) = library::so_pair(2);
    let id = LieAutomorphism::identity(g.clone());
    let (cells, swap) = models::circle_double_cover();
    let base = "S1_cells";
    let product = format!("{base}_x_so3_so2");
    InputDocument {
        lie_algebras: vec![AlgebraEntry::from_algebra(&g)],
        subalgebras: vec![subalgebra_entry(&h)],
        automorphisms: vec![automorphism_entry(&refl), automorphism_entry(&id)],
        complexes: vec![ComplexEntry {
            name: base.into(),
            ..complex_entry(&cells, None)
        }],
        actions: vec![ActionEntry {
            name: "deck".into(),
            complex: base.into(),
            matrices: swap.iter().map(matrix_rows).collect(),
        }],
        products: vec![ProductEntry {
            name: product.clone(),
            base: base.into(),
            algebra: g.name().to_string(),
            subalgebra: Some(h.name().to_string()),
        }],
        twists: vec![
            TwistEntry {
                name: "antipodal".into(),
                product: product.clone(),
                base_action: "deck".into(),
                automorphism: refl.name().to_string(),
            },
            TwistEntry {
                name: "untwisted".into(),
                product,
                base_action: "deck".into(),
                automorphism: id.name().to_string(),
            },
        ],
    }
}

fn filtered() -> InputDocument {
    let two_step = CochainComplex::new(
        "two_step",
        vec![1, 1],
        vec![RationalMatrix::from_ints(1, 1, &[1])],
    )
    .expect("1x1");
    let s2 = models::sphere(2);
    InputDocument {
        complexes: vec![
            filtered_entry("hopf", &models::hopf_model()),
            filtered_entry("S2_trivial", &FilteredComplex::trivial(s2)),
            complex_entry(&two_step, Some(vec![vec![0], vec![1]])),
        ],
        ..InputDocument::default()
    }
}

/// `(file name, document)` for every input document.
pub fn documents() -> Vec<(&'static str, InputDocument)> {
    let (su2, circle, flip) = library::su2_circle();
    let (so3, so2, refl3) = library::so_pair(2);
    let (so4, so3_in_so4, refl4) = library::so_pair(3);
    let (u2, u1) = library::u_pair(2, 1);
    let mut su2_doc = pair_document(&su2, &circle, &[&flip]);
    su2_doc.subalgebras.push(subalgebra_entry(&Subalgebra::full(su2.clone())));
    vec![
        ("su2.json", su2_doc),
        ("so3_so2.json", pair_document(&so3, &so2, &[&refl3])),
        ("so4_so3.json", pair_document(&so4, &so3_in_so4, &[&refl4])),
        ("u2_u1.json", pair_document(&u2, &u1, &[])),
        ("antipodal.json", antipodal()),
        ("filtered.json", filtered()),
    ]
}

fn cup(b2: usize, ms: &[&[i64]]) -> CupFormEntry {
    CupFormEntry {
        b2,
        matrices: ms
            .iter()
            .map(|m| {
                m.chunks(b2)
                    .map(|row| row.iter().map(|&x| Num(rat(x))).collect())
                    .collect()
            })
            .collect(),
    }
}

/// `(file name, cup form)` for the 5-manifold examples.
pub fn cup_forms() -> Vec<(&'static str, CupFormEntry)> {
    vec![
        ("cup_line.json", cup(1, &[&[1]])),
        ("cup_hyperbolic.json", cup(2, &[&[0, 1, 1, 0]])),
        ("cup_definite.json", cup(2, &[&[1, 0, 0, 1]])),
        ("cup_sqrt2.json", cup(2, &[&[1, 0, 0, -2]])),
        ("cup_pair.json", cup(3, &[&[1, 0, 0, 0, 1, 0, 0, 0, 0], &[0, 0, 1, 0, 0, 0, 1, 0, 0]])),
    ]
}

pub fn cup_json(c: &CupFormEntry) -> String {
    super::report::render_json(&serde_json::to_value(c).expect("cup form serializes"))
}

/// `(report file, arguments)` for the golden reports in `data/golden/`.
///
/// Paths are relative to the crate root; reports ending in `.json` are run
/// with `--json`.
pub fn golden_runs() -> Vec<(&'static str, Vec<&'static str>)> {
    vec![
        ("su2.json", vec!["cohomology", "data/su2.json", "--algebra", "su2"]),
        ("su2.txt", vec!["cohomology", "data/su2.json", "--algebra", "su2"]),
        (
            "su2_circle.json",
            vec!["cohomology", "data/su2.json", "--algebra", "su2", "--relative", "circle", "--invariants", "flip"],
        ),
        (
            "so3_so2.json",
            vec!["cohomology", "data/so3_so2.json", "--algebra", "so3", "--relative", "so2", "--invariants", "reflection"],
        ),
        (
            "so4_so3.json",
            vec!["cohomology", "data/so4_so3.json", "--algebra", "so4", "--relative", "so3", "--invariants", "reflection"],
        ),
        ("u2_u1.json", vec!["cohomology", "data/u2_u1.json", "--algebra", "u2", "--relative", "u1"]),
        ("S1_x_su2.json", vec!["specseq", "data/su2.json", "--complex", "S1_x_su2"]),
        ("S1_x_su2.txt", vec!["specseq", "data/su2.json", "--complex", "S1_x_su2"]),
        ("S2_x_so3_so2.json", vec!["specseq", "data/so3_so2.json", "--complex", "S2_x_so3_so2"]),
        ("hopf.json", vec!["specseq", "data/filtered.json", "--complex", "hopf"]),
        ("S2_trivial.json", vec!["specseq", "data/filtered.json", "--complex", "S2_trivial"]),
        ("two_step.json", vec!["specseq", "data/filtered.json", "--complex", "two_step"]),
        ("antipodal.json", vec!["specseq", "data/antipodal.json", "--complex", "antipodal"]),
        ("untwisted.json", vec!["specseq", "data/antipodal.json", "--complex", "untwisted"]),
        ("s3_4m_b2_3.json", vec!["obstruct", "s3-4m", "--betti", "1,0,3,0,1"]),
        ("s3_4m_b2_2.json", vec!["obstruct", "s3-4m", "--betti", "1,0,2,0,1"]),
        ("s3_5m_line.json", vec!["obstruct", "s3-5m", "--b2", "1", "--cup", "data/cup_line.json"]),
        ("s3_5m_hyperbolic.json", vec!["obstruct", "s3-5m", "--b2", "2", "--cup", "data/cup_hyperbolic.json"]),
        ("s3_5m_definite.json", vec!["obstruct", "s3-5m", "--b2", "2", "--cup", "data/cup_definite.json"]),
        ("s3_5m_sqrt2.json", vec!["obstruct", "s3-5m", "--b2", "2", "--cup", "data/cup_sqrt2.json"]),
        ("s3_5m_pair.json", vec!["obstruct", "s3-5m", "--b2", "3", "--cup", "data/cup_pair.json"]),
        ("gysin_s1_s3.json", vec!["obstruct", "gysin", "--l", "3", "--basic", "1,1"]),
        ("gysin_s2_s2.json", vec!["obstruct", "gysin", "--l", "2", "--basic", "1,0,1", "--total", "1,0,2,0,1"]),
        (
            "gysin_split.json",
            vec!["obstruct", "gysin", "--l", "2", "--basic", "1,0,0,1", "--split", "--orientable"],
        ),
        (
            "gysin_from_pair.json",
            vec!["obstruct", "gysin", "--file", "data/so4_so3.json", "--algebra", "so4", "--relative", "so3", "--basic", "1,0,1"],
        ),
        ("wang_codim1.json", vec!["obstruct", "wang", "--codim", "1", "--simply-connected", "--oriented", "--gh", "1,0,1"]),
        ("wang_codim2.json", vec!["obstruct", "wang", "--codim", "2", "--simply-connected", "--oriented", "--gh", "1,0,0,1"]),
        ("wang_codim3.json", vec!["obstruct", "wang", "--codim", "3", "--simply-connected", "--oriented", "--gh", "1,1,0,1"]),
        ("orbit_table.json", vec!["obstruct", "orbit-table"]),
    ]
}

/// Arguments for `run`, with the program name and `--json` as needed.
pub fn golden_args(report: &str, args: &[&str]) -> Vec<String> {
    let mut out = vec!["eqss".to_string()];
    if report.ends_with(".json") {
        out.push("--json".into());
    }
    out.extend(args.iter().map(|a| a.to_string()));
    out
}
