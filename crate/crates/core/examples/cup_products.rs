//! Cup products on relative cohomology through representatives.
//!
//! `cargo run --example cup_products`

use eqss::ceforms::relative_subcomplex;
use eqss::cohom::{cup_product, relative_cohomology};
use eqss::liealg::{library, Subalgebra};

fn main() -> eqss::Result<()> {
    let (u2, _) = library::u_pair(2, 1);
    let h = relative_cohomology(&relative_subcomplex(&Subalgebra::zero(u2.clone()))?)?;
    println!("H(u2) = {:?}", h.dims());
    let c = cup_product(&h, (1, 0), (3, 0))?;
    println!("[a1] ∪ [a3] = {} [a4]", c[0]);

    let (so4, so3, _) = library::so_pair(3);
    let s3 = relative_cohomology(&relative_subcomplex(&so3)?)?;
    println!("H({}, {}) = {:?}", so4.name(), so3.name(), s3.dims());
    let c = cup_product(&s3, (3, 0), (3, 0))?;
    println!("[vol] ∪ [vol] lies past the top degree: {}", c.is_empty());
    Ok(())
}
