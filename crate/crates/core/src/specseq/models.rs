//! Small base complexes and filtered complexes used as models of leaf spaces.

use super::{CochainComplex, FilteredComplex};
use crate::exactla::RationalMatrix;

pub fn point() -> CochainComplex {
    CochainComplex::with_zero_differential("pt", vec![1])
}

/// Minimal model of S¹: `[1, 1]`, `d = 0`.
pub fn circle() -> CochainComplex {
    CochainComplex::with_zero_differential("S1", vec![1, 1])
}

/// Minimal model of Sⁿ, `n ≥ 1`: one generator in degrees 0 and n, `d = 0`.
pub fn sphere(n: usize) -> CochainComplex {
    assert!(n >= 1, "sphere dimension must be positive");
    let mut dims = vec![0; n + 1];
    dims[0] = 1;
    dims[n] = 1;
    CochainComplex::with_zero_differential(format!("S{n}"), dims)
}

/// Cellular cochains of the circle with two vertices `v0, v1` and two edges
/// `e0: v0→v1`, `e1: v1→v0`, together with the deck involution of the
/// double cover `S¹ → S¹` (swaps `v0↔v1` and `e0↔e1`).
pub fn circle_double_cover() -> (CochainComplex, Vec<RationalMatrix>) {
    let d = RationalMatrix::from_ints(2, 2, &[-1, 1, 1, -1]);
    let c = CochainComplex::new("S1~", vec![2, 2], vec![d]).expect("2x2 differential");
    let swap = RationalMatrix::from_ints(2, 2, &[0, 1, 1, 0]);
    (c, vec![swap.clone(), swap])
}

/// `Λ(σ)/(σ²) ⊗ Λ(e)` with `d(1⊗e) = σ⊗1`, `deg σ = 2`, filtered by σ-degree.
///
/// Not a product: the transgression `d₂: E₂^{0,1} → E₂^{2,0}` is an
/// isomorphism, so E∞ is concentrated in total degrees 0 and 3.
pub fn hopf_model() -> FilteredComplex {
    let d0 = RationalMatrix::zeros(1, 1);
    let d1 = RationalMatrix::from_ints(1, 1, &[1]);
    let d2 = RationalMatrix::zeros(1, 1);
    let c = CochainComplex::new("hopf", vec![1, 1, 1, 1], vec![d0, d1, d2]).expect("shapes");
    FilteredComplex::new(c, vec![vec![0], vec![0], vec![2], vec![2]]).expect("weights")
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::cohom::cohomology;

    #[test]
    fn model_cohomology() {
        assert_eq!(cohomology(&point()).unwrap().dims(), &[1]);
        assert_eq!(cohomology(&circle()).unwrap().dims(), &[1, 1]);
        assert_eq!(cohomology(&sphere(4)).unwrap().dims(), &[1, 0, 0, 0, 1]);
        let (c, swap) = circle_double_cover();
        assert_eq!(cohomology(&c).unwrap().dims(), &[1, 1]);
        let d = c.differential(0);
        assert_eq!(swap[1].mul(&d).unwrap(), d.mul(&swap[0]).unwrap());
        assert!(hopf_model().validate().is_ok());
        assert_eq!(cohomology(hopf_model().complex()).unwrap().dims(), &[1, 0, 0, 1]);
    }
}
