//! Laurent polynomials, the Temperley–Lieb bracket and the Jones polynomial of braid closures.

pub mod burau;
mod jones;
pub mod laurent;
pub mod temperley_lieb;

pub use burau::{burau_equal, burau_matrix};
pub use jones::{
    bracket_to_jones, closure_component_count, is_palindromic, jones_polynomial,
    jones_polynomial_limited, kauffman_bracket, kauffman_bracket_limited, normalized_bracket,
    normalized_bracket_limited, rudolph_genus, DEFAULT_STRAND_LIMIT,
};
pub use laurent::{LaurentPoly, Variable};
pub use temperley_lieb::{all_matchings, loop_value, PlanarMatching, TLVector};
