//! Relative cohomology of homogeneous pairs and its invariants under the
//! normalizer component group, computed on cohomology and on the complex.
//!
//! `cargo run --example relative_invariants`

use eqss::ceforms::{induced_action, relative_subcomplex};
use eqss::cohom::{
    invariant_cohomology, invariant_subcomplex_cohomology, relative_cohomology,
    GroupActionOnCohomology,
};
use eqss::exactla::DEFAULT_GROUP_BOUND;
use eqss::liealg::library;

fn main() -> eqss::Result<()> {
    let (su2, circle, flip) = library::su2_circle();
    let pairs = [
        (su2, circle, flip),
        library::so_pair(2),
        library::so_pair(3),
    ];
    for (g, h, a) in pairs {
        let rel = relative_subcomplex(&h)?;
        let full = relative_cohomology(&rel)?;
        let action = GroupActionOnCohomology::from_automorphisms(&full, std::slice::from_ref(&a), DEFAULT_GROUP_BOUND)?;
        let inv = invariant_cohomology(&full, &action, DEFAULT_GROUP_BOUND)?;
        let maps = vec![induced_action(rel.ce(), &a)?];
        let ambient = rel.ce().to_cochain_complex();
        let complex_level = invariant_subcomplex_cohomology(&ambient, rel.spaces(), &maps, DEFAULT_GROUP_BOUND)?;
        println!(
            "H({}, {}) = {:?}; invariants under {} (order {}): {:?}, complex level {:?}",
            g.name(),
            h.name(),
            full.dims(),
            a.name(),
            action.group_order(),
            inv.dims(),
            complex_level.dims()
        );
    }
    let (u2, u1) = library::u_pair(2, 1);
    let res = relative_cohomology(&relative_subcomplex(&u1)?)?;
    println!("H({}, {}) = {:?}", u2.name(), u1.name(), res.dims());
    Ok(())
}
