//! Exact and floating-point machinery for the algebras R[q]/(q^N − ε):
//! cyclotomic arithmetic, norm forms, conjugate-coordinate calculus,
//! Dirac-type matrix families, cubic-surface geometry and Berger matrices.

pub mod exactnum;
pub mod ring;
pub mod polyring;
pub mod cn_algebra;
pub mod cyclic_repr;
pub mod eulermap;
pub mod holomorphy;
pub mod dirac;
pub mod geometry;
pub mod berger;
pub mod report;
pub mod suite;
