//! The Floer engine: generators, domains, admissibility, index, the
//! differential for nice diagrams with a brute-force oracle, homology and
//! the relative Spin^c partition.

pub mod linalg;
