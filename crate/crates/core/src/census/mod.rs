//! Exhaustive censuses over small orders: graph generation, orbit
//! classification, counting sequences and tables of code parameters.

mod classify;
mod generate;
mod sequences;
mod store;
mod tables;

pub use classify::{classify_graphs, classify_orbits, Classification, OrbitRecord};
pub use generate::{all_graph_forms, generate_graphs, MAX_GENERATED_ORDER};
pub use sequences::{
    distinct_polynomials, euler_transform, product_closure, successor_identity, unimodality_scan,
    unimodality_scan_with, NonUnimodal, PolynomialSet, UnimodalityReport,
};
pub use store::Census;
pub use tables::{
    circle_counts_table, degq_q4_ranges, delta_table, orbit_counts_table, polynomial_counts_table, Cell, CountsTable,
    Family,
};
