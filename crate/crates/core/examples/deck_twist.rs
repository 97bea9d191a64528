//! The antipodal model: S¹ × S² twisted by the deck involution of the double
//! cover acting on S² = SO(3)/SO(2) by a reflection. The total cohomology is
//! that of a circle; with the trivial coefficient action it is that of S¹ × S².
//!
//! `cargo run --example deck_twist`

use eqss::exactla::DEFAULT_GROUP_BOUND;
use eqss::liealg::{library, LieAutomorphism};
use eqss::specseq::{models, product_model, run_to_stabilization, twist_by_deck};

fn main() -> eqss::Result<()> {
    let (g, so2, reflection) = library::so_pair(2);
    let (cells, deck) = models::circle_double_cover();
    let model = product_model(&cells, &so2)?;
    for a in [reflection, LieAutomorphism::identity(g)] {
        let inv = twist_by_deck(&model, &deck, &a, DEFAULT_GROUP_BOUND)?;
        let table = run_to_stabilization(&inv.filtered)?;
        println!(
            "coefficient action {}: invariant dims {:?}, H = {:?}",
            a.name(),
            inv.filtered.complex().dims(),
            table.total_cohomology
        );
    }
    Ok(())
}
