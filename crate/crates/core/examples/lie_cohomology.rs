//! Absolute Lie algebra cohomology of the built-in compact algebras.
//!
//! `cargo run --release --example lie_cohomology`

use std::sync::Arc;

use eqss::cohom::lie_cohomology;
use eqss::liealg::library;

fn main() -> eqss::Result<()> {
    for g in [library::su2(), library::so(4), library::u(2), library::so(5)] {
        let g = Arc::new(g);
        let h = lie_cohomology(&g)?;
        println!(
            "H({}) = {:?}  (dim {}, Euler characteristic {})",
            g.name(),
            h.dims(),
            g.dim(),
            h.euler_characteristic()
        );
    }
    Ok(())
}
