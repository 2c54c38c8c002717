//! Minimum Roman dominating distance energy of graphs.
//!
//! The pipeline is: [`graph`] builds a simple graph and its BFS distance
//! matrix, [`roman`] finds an exact minimum Roman dominating function,
//! [`spectral`] overwrites the distance-matrix diagonal with the Roman labels
//! and computes the exact characteristic polynomial and the eigenvalues, and
//! the energy is the sum of absolute eigenvalues. [`families`] holds closed
//! forms for standard families and [`verify`] checks moment identities and
//! energy bounds against computed ground truth.

pub mod error;
pub mod families;
pub mod graph;
pub mod roman;
pub mod spectral;
pub mod verify;

pub use error::{GraphError, PredictionError, RomanError, SpectralError, VerifyError};
pub use graph::{
    all_pairs_distances, disjoint_union, generate, random_batch, DistanceMatrix, Family,
    FamilySpec, Graph,
};
pub use roman::{min_roman_domination, RomanDominatingFunction};
pub use spectral::{
    build_mrdd, char_poly, eigenvalues, CharPoly, JacobiOptions, MrddMatrix, Spectrum,
};

#[cfg(test)]
pub(crate) mod test_graphs {
    use crate::graph::Graph;

    /// Nine vertices: a hub (0) adjacent to 1..=5 and 7, plus edges 1-2, 3-4,
    /// 5-6 and 7-8.
    pub fn nine_vertex_graph() -> Graph {
        Graph::new(
            9,
            &[
                (0, 1),
                (0, 2),
                (0, 3),
                (0, 4),
                (0, 5),
                (0, 7),
                (1, 2),
                (3, 4),
                (5, 6),
                (7, 8),
            ],
        )
        .unwrap()
    }

    pub const NINE_VERTEX_MATRIX: [[i64; 9]; 9] = [
        [2, 1, 1, 1, 1, 1, 2, 1, 2],
        [1, 0, 1, 2, 2, 2, 3, 2, 3],
        [1, 1, 0, 2, 2, 2, 3, 2, 3],
        [1, 2, 2, 0, 1, 2, 3, 2, 3],
        [1, 2, 2, 1, 0, 2, 3, 2, 3],
        [1, 2, 2, 2, 2, 0, 1, 2, 3],
        [2, 3, 3, 3, 3, 1, 1, 3, 4],
        [1, 2, 2, 2, 2, 2, 3, 0, 1],
        [2, 3, 3, 3, 3, 3, 4, 1, 1],
    ];
}
