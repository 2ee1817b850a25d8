//! Local complementation, interlace polynomials and circle graphs on small simple graphs.
//!
//! ```
//! # fn main() -> interlace::Result<()> {
//! use interlace::codes;
//! use interlace::{interlace_q, interlace_upper_q, lc_orbit, parse_graph6};
//!
//! let wheel = parse_graph6("Ehfw")?;
//! assert_eq!(interlace_q(&wheel).to_string(), "10x^2 + 12x");
//! assert_eq!(interlace_upper_q(&wheel).evaluate_i64(3), 729.into());
//! assert_eq!(lc_orbit(&wheel)?.len(), 2);
//!
//! let m = codes::metrics(&wheel)?;
//! assert_eq!(m.csv_row(), "6,3,2,18,81,47,II");
//! # Ok(())
//! # }
//! ```

pub mod census;
pub mod circle;
pub mod codes;
pub mod error;
pub mod graph;
pub mod interlace;
pub mod orbits;
pub mod poly;

pub use error::{Error, Result};
pub use graph::{canonical_form, encode_graph6, parse_graph6, CanonicalForm, Graph};
pub use interlace::{interlace_q, interlace_upper_q, InterlaceCache, PolyKind};
pub use orbits::{elc_orbit, lc_orbit, Orbit, OrbitKind};
pub use poly::{Polynomial, Rational};
