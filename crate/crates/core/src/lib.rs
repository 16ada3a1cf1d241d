//! A_α spectra of central graphs and central vertex joins: explicit
//! construction, eigensolver and exact characteristic polynomials, the
//! factored closed forms, and a verification harness comparing the two.

pub mod alpha;
pub mod closedform;
pub mod construct;
pub mod error;
pub mod exact;
pub mod graph;
pub mod matrix;
pub mod poly;
pub mod roots;
pub mod spectra;
pub mod tol;
pub mod verify;

pub use alpha::{parse_grid, Alpha};
pub use closedform::{
    charpoly_central_regular, charpoly_cvjoin, spectrum_central_regular, spectrum_cvjoin_kpq,
    spectrum_cvjoin_regular, FactoredCharPoly, JoinPartner,
};
pub use construct::{central_graph, central_vertex_join};
pub use error::{Error, Result};
pub use graph::{generate, parse_edge_list, DegreeSequence, Family, Graph};
pub use matrix::{Matrix, SymMatrix};
pub use poly::Polynomial;
pub use spectra::{a_alpha_energy, a_alpha_matrix, a_alpha_matrix_exact, a_alpha_spectrum, hoffman_poly, Spectrum};
pub use verify::{sweep, Case, VerificationReport};
