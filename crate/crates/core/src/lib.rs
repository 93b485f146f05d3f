//! Bigraded Artinian Gorenstein algebras attached to pure simplicial complexes.
//!
//! A pure complex with facets `g_1, ..., g_n` over vertices `u_1, ..., u_m`
//! determines the form `f = x_1 g_1 + ... + x_n g_n`; its annihilator in the
//! ring of differential operators gives a standard graded Gorenstein algebra.
//! This crate computes that algebra two ways, combinatorially from the face
//! lattice and by brute-force exact linear algebra, and uses both to study
//! quadratic presentation and the Lefschetz properties.
//!
//! Module map:
//!
//! * [`simplicial`]: complexes, faces, f-vectors, flag and facet-connectivity tests.
//! * [`exactla`]: exact rational sparse matrices (rank, kernel, span).
//! * [`apolarity`]: bigraded polynomials, catalecticants, brute-force annihilators.
//! * [`gorenstein`]: the combinatorial generators, basis and multiplication maps.
//! * [`lefschetz`]: WLP/SLP probes, unimodality, counterexample search.

pub mod apolarity;
pub mod counting;
pub mod exactla;
pub mod gorenstein;
pub mod lefschetz;
mod par;
pub mod simplicial;

pub use exactla::{Rational, SparseRationalMatrix, SparseVector};
pub use simplicial::{Face, FVector, SimplicialComplex};
pub use apolarity::{BiMonomial, BigradedForm, Form, HilbertVector, OperatorPolynomial};
pub use gorenstein::{AlgebraSummary, CombinatorialBasis, GradedIdealGenerators};
pub use lefschetz::{LinearForm, ProbeConfig, UnimodalityCertificate, Verdict, WlpReport};
