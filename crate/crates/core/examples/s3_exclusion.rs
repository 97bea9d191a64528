//! S³ actions on 4- and 5-manifolds.
//!
//! `cargo run --example s3_exclusion`

use eqss::exactla::RationalMatrix;
use eqss::obstruct::{
    s3_check_4manifold, s3_check_5manifold, CupForm, NullHyperplane, NullSearchOptions,
};

fn main() -> eqss::Result<()> {
    for b2 in 0..=4 {
        let r = s3_check_4manifold(&[1, 0, b2, 0, 1])?;
        println!("4-manifold with b2 = {b2}: {}", r.verdict.as_str());
    }
    let forms = [
        ("hyperbolic", vec![RationalMatrix::from_ints(2, 2, &[0, 1, 1, 0])]),
        ("definite", vec![RationalMatrix::from_ints(2, 2, &[1, 0, 0, 1])]),
        ("x^2 - 2y^2", vec![RationalMatrix::from_ints(2, 2, &[1, 0, 0, -2])]),
    ];
    for (name, ms) in forms {
        let cup = CupForm::new(2, ms)?;
        let r = s3_check_5manifold(2, &cup, false, &NullSearchOptions::default())?;
        let witness = match &r.hyperplane {
            Some(NullHyperplane::Found { normal, .. }) => {
                let n: Vec<String> = normal.iter().map(ToString::to_string).collect();
                format!("null hyperplane with normal ({})", n.join(", "))
            }
            _ => "no null hyperplane".to_string(),
        };
        println!("5-manifold, cup form {name}: {}, {witness}", r.verdict.as_str());
    }
    Ok(())
}
