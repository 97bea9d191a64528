//! Finite cochain complexes over ℚ.

use crate::error::{Error, Result};
use crate::exactla::RationalMatrix;

/// `C^0 → C^1 → … → C^N` with `differentials[n] : C^n → C^{n+1}`
/// (an `dims[n+1] × dims[n]` matrix). The map out of the top degree is zero.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CochainComplex {
    name: String,
    dims: Vec<usize>,
    differentials: Vec<RationalMatrix>,
}

impl CochainComplex {
    /// Checks matrix shapes only; see [`check_d_squared`](Self::check_d_squared).
    pub fn new(
        name: impl Into<String>,
        dims: Vec<usize>,
        differentials: Vec<RationalMatrix>,
    ) -> Result<Self> {
        let name = name.into();
        if dims.is_empty() {
            return Err(Error::Malformed(format!("complex {name} has no degrees")));
        }
        if differentials.len() != dims.len() - 1 {
            return Err(Error::Malformed(format!(
                "complex {name}: {} degrees need {} differentials, got {}",
                dims.len(),
                dims.len() - 1,
                differentials.len()
            )));
        }
        for (n, d) in differentials.iter().enumerate() {
            if d.rows() != dims[n + 1] || d.cols() != dims[n] {
                return Err(Error::DimensionMismatch(format!(
                    "complex {name}: d_{n} is {}x{}, expected {}x{}",
                    d.rows(),
                    d.cols(),
                    dims[n + 1],
                    dims[n]
                )));
            }
        }
        Ok(Self {
            name,
            dims,
            differentials,
        })
    }

    /// A complex with zero differential.
    pub fn with_zero_differential(name: impl Into<String>, dims: Vec<usize>) -> Self {
        let diffs = dims
            .windows(2)
            .map(|w| RationalMatrix::zeros(w[1], w[0]))
            .collect();
        Self::new(name, dims, diffs).expect("shapes are consistent")
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn dims(&self) -> &[usize] {
        &self.dims
    }

    pub fn top_degree(&self) -> usize {
        self.dims.len() - 1
    }

    pub fn dim(&self, n: usize) -> usize {
        self.dims.get(n).copied().unwrap_or(0)
    }

    /// `d_n`, or the appropriate zero matrix outside the stored range.
    pub fn differential(&self, n: usize) -> RationalMatrix {
        self.differentials
            .get(n)
            .cloned()
            .unwrap_or_else(|| RationalMatrix::zeros(self.dim(n + 1), self.dim(n)))
    }

    pub fn differentials(&self) -> &[RationalMatrix] {
        &self.differentials
    }

    /// The lowest degree `n` with `d_{n+1} d_n ≠ 0`, if any.
    pub fn d_squared_failure(&self) -> Option<usize> {
        self.differentials.windows(2).enumerate().find_map(|(n, w)| {
            let dd = w[1].mul(&w[0]).expect("composable");
            (!dd.is_zero()).then_some(n)
        })
    }

    pub fn check_d_squared(&self) -> Result<()> {
        match self.d_squared_failure() {
            Some(degree) => Err(Error::NotAComplex { degree }),
            None => Ok(()),
        }
    }

    pub fn euler_characteristic(&self) -> i64 {
        self.dims
            .iter()
            .enumerate()
            .map(|(n, &d)| if n % 2 == 0 { d as i64 } else { -(d as i64) })
            .sum()
    }
}
