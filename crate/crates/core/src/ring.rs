//! Minimal commutative-ring capability shared by every coefficient type.

use std::fmt::Debug;

use num_complex::Complex64;
use num_traits::{One, Zero};

use crate::exactnum::{Cyclotomic, Rational};

/// Operations take `&self` so that types without a global zero (polynomials in a
/// fixed number of variables) can build neutral elements from a template.
pub trait Ring: Clone + PartialEq + Debug {
    fn zero_like(&self) -> Self;
    fn one_like(&self) -> Self;
    fn is_zero(&self) -> bool;
    fn plus(&self, rhs: &Self) -> Self;
    fn minus(&self, rhs: &Self) -> Self;
    fn times(&self, rhs: &Self) -> Self;
    fn negate(&self) -> Self;
}

/// Rings that can be multiplied by an exact cyclotomic scalar.
pub trait CycloScale: Ring {
    fn scale_cyc(&self, c: &Cyclotomic) -> Self;
}

macro_rules! std_ring {
    ($t:ty, $zero:expr, $one:expr) => {
        impl Ring for $t {
            fn zero_like(&self) -> Self {
                $zero
            }
            fn one_like(&self) -> Self {
                $one
            }
            fn is_zero(&self) -> bool {
                Zero::is_zero(self)
            }
            fn plus(&self, rhs: &Self) -> Self {
                self + rhs
            }
            fn minus(&self, rhs: &Self) -> Self {
                self - rhs
            }
            fn times(&self, rhs: &Self) -> Self {
                self * rhs
            }
            fn negate(&self) -> Self {
                -self
            }
        }
    };
}

std_ring!(Rational, Rational::zero(), Rational::one());
std_ring!(f64, 0.0, 1.0);
std_ring!(Complex64, Complex64::new(0.0, 0.0), Complex64::new(1.0, 0.0));

impl Ring for Cyclotomic {
    fn zero_like(&self) -> Self {
        Cyclotomic::zero()
    }
    fn one_like(&self) -> Self {
        Cyclotomic::one()
    }
    fn is_zero(&self) -> bool {
        Cyclotomic::is_zero(self)
    }
    fn plus(&self, rhs: &Self) -> Self {
        self + rhs
    }
    fn minus(&self, rhs: &Self) -> Self {
        self - rhs
    }
    fn times(&self, rhs: &Self) -> Self {
        self * rhs
    }
    fn negate(&self) -> Self {
        -self
    }
}

impl CycloScale for Cyclotomic {
    fn scale_cyc(&self, c: &Cyclotomic) -> Self {
        self * c
    }
}

impl CycloScale for Complex64 {
    fn scale_cyc(&self, c: &Cyclotomic) -> Self {
        self * c.to_complex()
    }
}
