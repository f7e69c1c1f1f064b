//! Sectional matrices of homogeneous ideals in `Q[x_1, ..., x_n]`.

pub mod poly;
pub mod binomial;
pub mod monomial;
pub mod groebner;
pub mod gin;
pub mod sectional;
pub mod document;
