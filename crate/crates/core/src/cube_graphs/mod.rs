//! Explicit construction of k-order Fibonacci cubes and Fibonacci p-cubes as
//! induced subgraphs of the hypercube. These graphs are the brute-force
//! oracle for every counting formula in [`crate::size_formulas`].

mod bitstring;
mod decomposition;
mod export;
mod graph;

pub use bitstring::BitString;
pub use decomposition::{check_decomposition, DecompositionBlock, DecompositionReport};
pub use graph::{
    brute_force_size, build_graph, construct, enumerate_k_vertices, enumerate_p_vertices,
    enumerate_vertices, Budget, CubeGraph, FamilyTag,
};
