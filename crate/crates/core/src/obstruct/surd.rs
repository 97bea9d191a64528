//! Elements `a + b√d` of a real quadratic field ℚ(√d), `d > 0` not a square.

use std::fmt;

use num_bigint::BigInt;
use num_traits::{Signed, Zero};

use crate::exactla::Rational;

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct QuadraticSurd {
    pub a: Rational,
    pub b: Rational,
    /// Radicand; zero when the element is rational.
    pub d: Rational,
}

/// `Some(√x)` if `x ≥ 0` is the square of a rational.
pub fn rational_sqrt(x: &Rational) -> Option<Rational> {
    if x.is_negative() {
        return None;
    }
    let root = |n: &BigInt| {
        let r = n.sqrt();
        (&r * &r == *n).then_some(r)
    };
    Some(Rational::new(root(x.numer())?, root(x.denom())?))
}

impl QuadraticSurd {
    pub fn rational(a: Rational) -> Self {
        Self {
            a,
            b: Rational::zero(),
            d: Rational::zero(),
        }
    }

    /// `a + b√d`, folded into ℚ when `d` is a rational square.
    pub fn new(a: Rational, b: Rational, d: Rational) -> Self {
        assert!(!d.is_negative(), "radicand must be nonnegative");
        match rational_sqrt(&d) {
            Some(s) => Self::rational(a + b * s),
            None if b.is_zero() => Self::rational(a),
            None => Self { a, b, d },
        }
    }

    pub fn is_rational(&self) -> bool {
        self.b.is_zero()
    }

    pub fn is_zero(&self) -> bool {
        self.a.is_zero() && self.b.is_zero()
    }

    fn radicand(&self, other: &Self) -> Rational {
        match (self.is_rational(), other.is_rational()) {
            (true, _) => other.d.clone(),
            (_, true) => self.d.clone(),
            _ => {
                assert_eq!(self.d, other.d, "mixed quadratic fields");
                self.d.clone()
            }
        }
    }

    pub fn add(&self, other: &Self) -> Self {
        let d = self.radicand(other);
        Self::new(&self.a + &other.a, &self.b + &other.b, d)
    }

    pub fn sub(&self, other: &Self) -> Self {
        let d = self.radicand(other);
        Self::new(&self.a - &other.a, &self.b - &other.b, d)
    }

    pub fn mul(&self, other: &Self) -> Self {
        let d = self.radicand(other);
        let a = &self.a * &other.a + &self.b * &other.b * &d;
        let b = &self.a * &other.b + &self.b * &other.a;
        Self::new(a, b, d)
    }

    pub fn scale(&self, c: &Rational) -> Self {
        Self::new(&self.a * c, &self.b * c, self.d.clone())
    }
}

impl fmt::Display for QuadraticSurd {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_rational() {
            write!(f, "{}", self.a)
        } else if self.a.is_zero() {
            write!(f, "{}*sqrt({})", self.b, self.d)
        } else {
            write!(f, "{} + {}*sqrt({})", self.a, self.b, self.d)
        }
    }
}
