//! Product models `base ⊗ Ω(g, h)` over sphere bases: E₂^{p,q} is
//! H^p(base) ⊗ H^q(g, h) and the sequence degenerates.
//!
//! `cargo run --example product_models`

use std::sync::Arc;

use eqss::liealg::{library, Subalgebra};
use eqss::specseq::{models, product_model, run_to_stabilization};

fn main() -> eqss::Result<()> {
    let su2 = Arc::new(library::su2());
    let (_, so2, _) = library::so_pair(2);
    let fibres = [Subalgebra::zero(su2), so2];
    let bases = [models::point(), models::circle(), models::sphere(2), models::sphere(4)];
    for h in &fibres {
        for b in &bases {
            let model = product_model(b, h)?;
            let table = run_to_stabilization(model.filtered())?;
            println!(
                "{} x H({}, {}): H = {:?}, stable from page {}",
                b.name(),
                h.parent().name(),
                h.name(),
                table.total_cohomology,
                table.stabilized_at
            );
        }
    }
    Ok(())
}
