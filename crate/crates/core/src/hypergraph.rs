//! Immutable hypergraph representation with validation and incidence queries.
//!
//! Vertices are dense indices `0..n`; edges are non-empty vertex sets of size
//! at least two, stored in input order. The edge order is canonical: every
//! [`EdgeId`] used elsewhere (cut files, Θ-classes, reports) refers to it.

use std::collections::HashMap;
use std::fmt;

use thiserror::Error;

/// Index of a vertex, dense in `0..vertex_count`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
#[repr(transparent)]
pub struct VertexId(pub usize);

/// Index into the edge list of the owning hypergraph.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
#[repr(transparent)]
pub struct EdgeId(pub usize);

impl fmt::Display for VertexId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

impl fmt::Display for EdgeId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

/// Error raised while building a [`Hypergraph`].
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum BuildError {
    #[error("edge {0} is empty")]
    EmptyEdge(EdgeId),
    #[error("edge {edge} mentions vertex {vertex}, but the vertex count is {vertex_count}")]
    OutOfRangeVertex {
        edge: EdgeId,
        vertex: usize,
        vertex_count: usize,
    },
    #[error("edges {first} and {second} are equal as sets")]
    DuplicateEdge { first: EdgeId, second: EdgeId },
    #[error("edge {edge} has {size} vertex(es); edges must have size at least 2")]
    EdgeTooSmall { edge: EdgeId, size: usize },
}

/// Error raised when an [`EdgeId`] does not exist in the hypergraph.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Error)]
#[error("unknown edge id {0} (edge count is {1})")]
pub struct UnknownEdgeId(pub EdgeId, pub usize);

/// An immutable hypergraph: a vertex count plus an ordered list of edges.
///
/// Values are validated at construction and never change afterwards, so they
/// are safe to share read-only across threads.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Hypergraph {
    vertex_count: usize,
    /// Each edge sorted ascending; the outer order is the input order.
    edges: Vec<Vec<VertexId>>,
    /// Per-vertex list of incident edge ids, ascending.
    incidence: Vec<Vec<EdgeId>>,
}

impl Hypergraph {
    /// Builds a hypergraph from a vertex count and edge list.
    ///
    /// Vertices repeated inside one edge are deduplicated (callers that need
    /// to surface this, like file parsers, should pre-check); empty edges,
    /// singleton edges, out-of-range vertices, and duplicate edges are
    /// rejected. Edge order is preserved.
    pub fn new(
        vertex_count: usize,
        edges: impl IntoIterator<Item = Vec<usize>>,
    ) -> Result<Self, BuildError> {
        let mut cleaned: Vec<Vec<VertexId>> = Vec::new();
        let mut seen: HashMap<Vec<VertexId>, EdgeId> = HashMap::new();
        for (i, raw) in edges.into_iter().enumerate() {
            let id = EdgeId(i);
            if raw.is_empty() {
                return Err(BuildError::EmptyEdge(id));
            }
            let mut edge: Vec<usize> = raw;
            edge.sort_unstable();
            edge.dedup();
            if let Some(&v) = edge.iter().find(|&&v| v >= vertex_count) {
                return Err(BuildError::OutOfRangeVertex {
                    edge: id,
                    vertex: v,
                    vertex_count,
                });
            }
            if edge.len() < 2 {
                return Err(BuildError::EdgeTooSmall {
                    edge: id,
                    size: edge.len(),
                });
            }
            let edge: Vec<VertexId> = edge.into_iter().map(VertexId).collect();
            if let Some(&first) = seen.get(&edge) {
                return Err(BuildError::DuplicateEdge { first, second: id });
            }
            seen.insert(edge.clone(), id);
            cleaned.push(edge);
        }
        let mut incidence = vec![Vec::new(); vertex_count];
        for (i, edge) in cleaned.iter().enumerate() {
            for &v in edge {
                incidence[v.0].push(EdgeId(i));
            }
        }
        Ok(Self {
            vertex_count,
            edges: cleaned,
            incidence,
        })
    }

    pub fn vertex_count(&self) -> usize {
        self.vertex_count
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    /// Vertices of an edge, sorted ascending.
    ///
    /// Panics if `e` is out of range; use [`Hypergraph::check_edge_id`] first
    /// when the id comes from external input.
    pub fn edge(&self, e: EdgeId) -> &[VertexId] {
        &self.edges[e.0]
    }

    pub fn edges(&self) -> impl Iterator<Item = (EdgeId, &[VertexId])> {
        self.edges
            .iter()
            .enumerate()
            .map(|(i, e)| (EdgeId(i), e.as_slice()))
    }

    pub fn edge_ids(&self) -> impl Iterator<Item = EdgeId> {
        (0..self.edges.len()).map(EdgeId)
    }

    pub fn vertex_ids(&self) -> impl Iterator<Item = VertexId> {
        (0..self.vertex_count).map(VertexId)
    }

    /// Edge ids incident to `v`, ascending.
    pub fn incident_edges(&self, v: VertexId) -> &[EdgeId] {
        &self.incidence[v.0]
    }

    pub fn check_vertex_id(&self, v: VertexId) -> bool {
        v.0 < self.vertex_count
    }

    pub fn check_edge_id(&self, e: EdgeId) -> Result<(), UnknownEdgeId> {
        if e.0 < self.edges.len() {
            Ok(())
        } else {
            Err(UnknownEdgeId(e, self.edges.len()))
        }
    }

    /// Returns `k` when every edge has exactly `k` vertices.
    ///
    /// Absent when edge sizes differ, and also for an edgeless hypergraph,
    /// where no such `k` is determined.
    pub fn uniformity(&self) -> Option<usize> {
        let mut sizes = self.edges.iter().map(Vec::len);
        let k = sizes.next()?;
        sizes.all(|s| s == k).then_some(k)
    }

    /// True when every pair of distinct edges shares at most one vertex.
    pub fn is_linear(&self) -> bool {
        self.first_linearity_violation().is_none()
    }

    /// First pair of distinct edges sharing two or more vertices, if any.
    pub fn first_linearity_violation(&self) -> Option<(EdgeId, EdgeId)> {
        for i in 0..self.edges.len() {
            for j in (i + 1)..self.edges.len() {
                if intersection_size(&self.edges[i], &self.edges[j]) > 1 {
                    return Some((EdgeId(i), EdgeId(j)));
                }
            }
        }
        None
    }

    /// Returns the hypergraph with the edges in `remove` deleted.
    ///
    /// The vertex set is unchanged and surviving edges keep their relative
    /// order (their ids are re-densified).
    pub fn remove_edges(&self, remove: &[EdgeId]) -> Result<Hypergraph, UnknownEdgeId> {
        let mut mask = vec![false; self.edges.len()];
        for &e in remove {
            self.check_edge_id(e)?;
            mask[e.0] = true;
        }
        let surviving = self
            .edges
            .iter()
            .enumerate()
            .filter(|(i, _)| !mask[*i])
            .map(|(_, e)| e.iter().map(|v| v.0).collect());
        Ok(Self::new(self.vertex_count, surviving)
            .expect("edges of a valid hypergraph stay valid after removal"))
    }

    /// Connected components; isolated vertices form singleton blocks.
    pub fn components(&self) -> ComponentPartition {
        self.components_masked(&vec![false; self.edges.len()])
    }

    /// Components of the hypergraph with the masked edges ignored, without
    /// materialising the smaller hypergraph. `excluded[e]` skips edge `e`.
    pub fn components_masked(&self, excluded: &[bool]) -> ComponentPartition {
        debug_assert_eq!(excluded.len(), self.edges.len());
        const UNSEEN: usize = usize::MAX;
        let mut block_of = vec![UNSEEN; self.vertex_count];
        let mut blocks: Vec<Vec<VertexId>> = Vec::new();
        let mut edge_done = vec![false; self.edges.len()];
        let mut stack: Vec<usize> = Vec::new();
        for start in 0..self.vertex_count {
            if block_of[start] != UNSEEN {
                continue;
            }
            let b = blocks.len();
            let mut members = Vec::new();
            block_of[start] = b;
            stack.push(start);
            while let Some(v) = stack.pop() {
                members.push(VertexId(v));
                for &e in &self.incidence[v] {
                    if edge_done[e.0] || excluded[e.0] {
                        continue;
                    }
                    edge_done[e.0] = true;
                    for &w in &self.edges[e.0] {
                        if block_of[w.0] == UNSEEN {
                            block_of[w.0] = b;
                            stack.push(w.0);
                        }
                    }
                }
            }
            members.sort_unstable();
            blocks.push(members);
        }
        ComponentPartition { blocks, block_of }
    }

    /// True when the hypergraph has at most one connected component.
    /// Sweeps without materialising the partition.
    pub fn is_connected(&self) -> bool {
        if self.vertex_count <= 1 {
            return true;
        }
        let mut seen = vec![false; self.vertex_count];
        let mut edge_done = vec![false; self.edges.len()];
        let mut stack = vec![0usize];
        seen[0] = true;
        let mut reached = 1;
        while let Some(v) = stack.pop() {
            for &e in &self.incidence[v] {
                if edge_done[e.0] {
                    continue;
                }
                edge_done[e.0] = true;
                for &w in &self.edges[e.0] {
                    if !seen[w.0] {
                        seen[w.0] = true;
                        reached += 1;
                        stack.push(w.0);
                    }
                }
            }
        }
        reached == self.vertex_count
    }
}

/// Partition of the vertex set into connected blocks.
///
/// Blocks are listed in order of their smallest vertex; `block_of[v]` is the
/// index of the block containing `v`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ComponentPartition {
    pub blocks: Vec<Vec<VertexId>>,
    pub block_of: Vec<usize>,
}

impl ComponentPartition {
    pub fn sizes(&self) -> Vec<usize> {
        self.blocks.iter().map(Vec::len).collect()
    }

    pub fn len(&self) -> usize {
        self.blocks.len()
    }

    pub fn is_empty(&self) -> bool {
        self.blocks.is_empty()
    }

    pub fn block_of(&self, v: VertexId) -> usize {
        self.block_of[v.0]
    }
}

fn intersection_size(a: &[VertexId], b: &[VertexId]) -> usize {
    // Both sorted.
    let (mut i, mut j, mut n) = (0, 0, 0);
    while i < a.len() && j < b.len() {
        match a[i].cmp(&b[j]) {
            std::cmp::Ordering::Less => i += 1,
            std::cmp::Ordering::Greater => j += 1,
            std::cmp::Ordering::Equal => {
                n += 1;
                i += 1;
                j += 1;
            }
        }
    }
    n
}
