//! Pages of a filtered complex: the Hopf model, where the transgression
//! d₂ kills E₂^{0,1} and E₂^{2,0}, and a single-column trivial filtration.
//!
//! `cargo run --example spectral_sequence`

use eqss::specseq::{models, run_to_stabilization, FilteredComplex};

fn show(name: &str, fc: &FilteredComplex) -> eqss::Result<()> {
    let table = run_to_stabilization(fc)?;
    println!("{name}:");
    for pg in &table.pages {
        let cells: Vec<String> = pg
            .entries()
            .iter()
            .map(|e| format!("({},{})={}", e.p, e.q(), e.dim))
            .collect();
        println!("  E_{}: {}", pg.r(), cells.join(" "));
    }
    println!(
        "  stable from page {}, H = {:?}, E_inf by degree {:?}",
        table.stabilized_at,
        table.total_cohomology,
        table.einf_by_degree()
    );
    Ok(())
}

fn main() -> eqss::Result<()> {
    show("Hopf model of S3 over S2", &models::hopf_model())?;
    show("S2 with the trivial filtration", &FilteredComplex::trivial(models::sphere(2)))?;
    Ok(())
}
