//! Orbit types of SU(2) actions and the cohomology of each orbit, checked
//! against invariant relative Lie algebra cohomology.
//!
//! `cargo run --example orbit_table`

use eqss::obstruct::{orbit_table_verify, OrbitTypeTable};

fn main() -> eqss::Result<()> {
    let table = OrbitTypeTable::su2();
    for e in &table.entries {
        println!("{:<6} {:<40} dim {} H = {:?}", e.orbit, e.isotropy.describe(), e.dim, e.cohomology);
    }
    println!("{:?}", orbit_table_verify(&table)?);
    Ok(())
}
