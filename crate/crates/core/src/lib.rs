//! Wiener index computation for hypergraphs via cut decompositions.
//!
//! The Wiener index of a connected hypergraph is the sum of shortest-path
//! distances over all unordered vertex pairs, where a single step moves
//! between any two vertices sharing a hyperedge. Computing it by brute force
//! costs one BFS per vertex. For hypergraphs with enough metric structure the
//! index instead decomposes over edge cuts: each cut contributes the sum of
//! pairwise products of its component sizes, and the per-pair distances never
//! need to be materialised.
//!
//! This crate provides:
//!
//! * [`hypergraph`] — the immutable hypergraph representation with validation,
//!   incidence queries, edge removal, and connected components;
//! * [`metric`] — hypergraph BFS, the brute-force Wiener oracle, convexity and
//!   isometry tests;
//! * [`pc`] — edge-gated structure, the Θ relation on edges, and recognition
//!   of k-uniform partial cube-hypergraphs;
//! * [`cut`] — the cut method itself: Θ-class decomposition for recognized
//!   partial cube-hypergraphs, the hypertree specialization, and a
//!   generalized convex-cut method with residual correction;
//! * [`generators`] — constructors for cube-hypergraphs, Cartesian products,
//!   linear phenylenes, random hypertrees, and embedded example datasets.
//!
//! ```
//! use hypercut::generators;
//! use hypercut::metric::wiener_brute;
//! use hypercut::cut::wiener_cut;
//!
//! let (cube, _) = generators::cube(3, 2).unwrap();
//! let breakdown = wiener_cut(&cube).unwrap();
//! assert_eq!(breakdown.total, 54);
//! assert_eq!(wiener_brute(&cube).unwrap(), 54);
//! ```

pub mod cut;
pub mod generators;
pub mod hypergraph;
pub mod metric;
pub mod pc;

pub use hypergraph::{EdgeId, Hypergraph, VertexId};
