//! Exact solving of systems of two polynomial equations in two unknowns.
//!
//! A pair `{V_1(x, y) = 0, V_2(x, y) = 0}` over Q or GF(p) is replaced by an
//! equivalent collection of triangular systems via a Euclidean remainder
//! sequence (Labatie's elimination), and the intersection multiplicity of
//! every solution is recovered as a sum over those systems (Bonnet's
//! theorem). All arithmetic is exact; an independent oracle module recomputes
//! solution sets by brute force and multiplicities as local-algebra
//! dimensions so the engine's identities can be machine-checked.
//!
//! The pipeline, bottom to top:
//!
//! * [`field`]: exact scalars — reduced big rationals or canonical residues.
//! * [`unipoly`]: dense univariate arithmetic, gcds, root finding.
//! * [`bipoly`]: K[x][y] — contents, pseudo-division, sections.
//! * [`parser`]: the text format for polynomials, both directions.
//! * [`elimination`]: remainder/reduction/cofactor sequences, triangular
//!   systems, identity verification.
//! * [`solver`]: solutions, multiplicities, closure counting.
//! * [`oracle`]: independent ground truth.
//! * [`sample`]: seeded random instances for randomized verification.

pub mod bipoly;
pub mod elimination;
pub mod error;
pub mod field;
pub mod oracle;
pub mod parser;
pub mod sample;
pub mod solver;
pub mod unipoly;

pub use bipoly::BiPoly;
pub use elimination::{
    cofactor_sequences, normalize_pair, reduction_sequences, remainder_sequence,
    triangular_systems, verify_identities, EliminationTrace, NormalizedPair, TriangularSystem,
    VerificationReport,
};
pub use error::Error;
pub use field::{FieldElement, FieldSpec};
pub use oracle::{brute_force_zeros, local_dimension, oracle_multiplicity, LocalAlgebraInstance};
pub use parser::{format_poly, format_unipoly, parse_poly, parse_poly_str, parse_scalar, PolySource};
pub use solver::{
    closure_count, point_multiplicity, solve_in_field, triangular_multiplicity, SolutionPoint,
    SolutionReport,
};
pub use unipoly::{gcd_monic, supported_part_degree, UniPoly};
