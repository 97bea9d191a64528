//! Betti numbers of M compatible with the Gysin and Wang sequences.
//!
//! `cargo run --example gysin_wang`

use eqss::ceforms::relative_subcomplex;
use eqss::cohom::relative_cohomology;
use eqss::liealg::library;
use eqss::obstruct::{gysin_check, gysin_gap, wang_check, GysinOptions, DEFAULT_SOLVER_CAP};

fn totals(r: &eqss::obstruct::CheckReport) -> Vec<Vec<usize>> {
    let p = r.problem.as_ref().expect("sequence");
    r.solutions
        .iter()
        .map(|s| {
            let dims = s.term_dims(p).expect("complete");
            p.terms
                .iter()
                .zip(dims)
                .filter(|(t, _)| t.name.ends_with("(M)") && !t.name.starts_with("H^-"))
                .map(|(_, d)| d)
                .collect()
        })
        .collect()
}

fn main() -> eqss::Result<()> {
    let r = gysin_check(3, &[1, 1], None, GysinOptions::default(), DEFAULT_SOLVER_CAP)?;
    println!("Gysin l=3 over a circle: {} -> {:?}", r.verdict.as_str(), totals(&r));

    let (_, circle, _) = library::su2_circle();
    let l = gysin_gap(&circle)?;
    let opts = GysinOptions {
        orientable: true,
        split_even: true,
    };
    let r = gysin_check(l, &[1, 0, 0, 1], None, opts, DEFAULT_SOLVER_CAP)?;
    println!("Gysin l={l} split over [1,0,0,1]: {} -> {:?}", r.verdict.as_str(), totals(&r));

    let r = wang_check(1, true, true, &[], DEFAULT_SOLVER_CAP)?;
    println!("Wang codim 1, simply connected: {}", r.verdict.as_str());

    let gh = relative_cohomology(&relative_subcomplex(&eqss::liealg::Subalgebra::zero(
        std::sync::Arc::new(library::su2()),
    ))?)?;
    for codim in [2, 3] {
        let r = wang_check(codim, true, true, gh.dims(), DEFAULT_SOLVER_CAP)?;
        println!("Wang codim {codim} with H(g,h) = {:?}: {} -> {:?}", gh.dims(), r.verdict.as_str(), totals(&r));
    }
    Ok(())
}
