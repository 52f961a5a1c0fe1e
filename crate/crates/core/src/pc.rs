//! Edge-gated structure, the Θ relation on edges, and recognition of
//! k-uniform partial cube-hypergraphs.
//!
//! A hypergraph is *edge-gated* when every vertex `x` has, in every edge
//! `e = {a_1, …, a_k}`, a unique gate: an `a_j` with
//! `d(x, a_i) = d(x, a_j) + 1` for all `i ≠ j`. The gates of one edge sort
//! all vertices into blocks `H(a_i, e)`, and two edges are Θ-related when the
//! second one meets every block of the first. A k-uniform hypergraph is a
//! partial cube-hypergraph exactly when it is edge-gated and Θ is transitive;
//! equivalently, when it is edge-gated and every block is convex. Both
//! characterizations are implemented: the transitivity route is the default,
//! the convexity route an optional cross-check.

use std::collections::VecDeque;

use thiserror::Error;

use crate::hypergraph::{ComponentPartition, EdgeId, Hypergraph, UnknownEdgeId, VertexId};
use crate::metric::{bfs_from, is_convex_with, Disconnected, DistanceRow, DistanceTable};

/// A vertex with no gate in some edge.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Error)]
#[error("vertex {vertex} has no gate in edge {edge}")]
pub struct NotEdgeGated {
    pub vertex: VertexId,
    pub edge: EdgeId,
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ThetaStructureError {
    #[error("hypergraph is disconnected")]
    Disconnected,
    #[error(transparent)]
    NotEdgeGated(#[from] NotEdgeGated),
    #[error("Θ is not transitive: {e} Θ {f} and {f} Θ {g}, but not {e} Θ {g}")]
    NotTransitive { e: EdgeId, f: EdgeId, g: EdgeId },
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum SingleCrossingError {
    #[error("hypergraph is disconnected")]
    Disconnected,
    #[error("the edge set is not a cut: removing it leaves the hypergraph connected")]
    NotACut,
    #[error(transparent)]
    UnknownEdgeId(#[from] UnknownEdgeId),
}

/// The gate of `x` in edge `e`: the unique vertex of `e` one step closer to
/// `x` than every other vertex of `e`. Vertices of `e` are their own gates.
///
/// Returns `None` when no vertex of the edge has the gate property, e.g. on
/// ties or when `x` cannot reach the edge.
pub fn gate(h: &Hypergraph, x: VertexId, e: EdgeId) -> Option<VertexId> {
    let row = bfs_from(h, x);
    gate_in_row(&row.dist, h.edge(e))
}

fn gate_in_row(dist: &[Option<u32>], edge: &[VertexId]) -> Option<VertexId> {
    let best = edge.iter().filter_map(|&a| dist[a.0]).min()?;
    let mut gate = None;
    for &a in edge {
        match dist[a.0] {
            Some(d) if d == best => {
                if gate.is_some() {
                    return None; // tie: no unique nearest vertex
                }
                gate = Some(a);
            }
            Some(d) if d == best + 1 => {}
            _ => return None, // unreachable or more than one step farther
        }
    }
    gate
}

/// Outcome of scanning every (vertex, edge) pair for gates.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct EdgeGatedness {
    pub edge_gated: bool,
    /// First (vertex, edge) pair without a gate, when not edge-gated.
    pub counterexample: Option<(VertexId, EdgeId)>,
}

/// Checks whether every vertex has a gate in every edge.
pub fn is_edge_gated(h: &Hypergraph) -> Result<EdgeGatedness, Disconnected> {
    if !h.is_connected() {
        return Err(Disconnected);
    }
    let table = DistanceTable::new(h);
    let slots = SlotTable::new(h, &table);
    Ok(slots.gatedness())
}

/// The vertex partition induced by one edge: each vertex sits in the block
/// of its gate.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct EdgeVertexPartition {
    pub edge: EdgeId,
    /// The edge's vertices, ascending; `blocks[i]` belongs to `anchors[i]`.
    pub anchors: Vec<VertexId>,
    pub blocks: Vec<Vec<VertexId>>,
    /// Per vertex, the index of its block in `blocks`.
    pub block_of: Vec<usize>,
}

impl EdgeVertexPartition {
    /// The block of a given anchor vertex of the edge.
    pub fn block_for(&self, anchor: VertexId) -> Option<&[VertexId]> {
        let i = self.anchors.iter().position(|&a| a == anchor)?;
        Some(&self.blocks[i])
    }

    pub fn block_sizes(&self) -> Vec<usize> {
        self.blocks.iter().map(Vec::len).collect()
    }
}

/// Sorts every vertex into the block of its gate in `e`.
///
/// Fails with the offending vertex as soon as one has no gate; on an
/// edge-gated hypergraph the blocks partition the whole vertex set.
pub fn edge_vertex_partition(
    h: &Hypergraph,
    e: EdgeId,
) -> Result<EdgeVertexPartition, NotEdgeGated> {
    let anchors = h.edge(e).to_vec();
    let rows: Vec<DistanceRow> = anchors.iter().map(|&a| bfs_from(h, a)).collect();
    let mut blocks = vec![Vec::new(); anchors.len()];
    let mut block_of = vec![usize::MAX; h.vertex_count()];
    for z in h.vertex_ids() {
        let dist: Vec<Option<u32>> = rows.iter().map(|r| r.dist[z.0]).collect();
        let slot = unique_min_slot(&dist).ok_or(NotEdgeGated { vertex: z, edge: e })?;
        blocks[slot].push(z);
        block_of[z.0] = slot;
    }
    Ok(EdgeVertexPartition {
        edge: e,
        anchors,
        blocks,
        block_of,
    })
}

/// Unique index of the strictly smallest entry, all finite.
fn unique_min_slot(dist: &[Option<u32>]) -> Option<usize> {
    let best = dist.iter().copied().flatten().min()?;
    let mut slot = None;
    for (i, &d) in dist.iter().enumerate() {
        match d {
            Some(d) if d == best => {
                if slot.is_some() {
                    return None;
                }
                slot = Some(i);
            }
            Some(_) => {}
            None => return None,
        }
    }
    slot
}

/// The Θ relation: true iff `f` intersects every block of the vertex
/// partition induced by `e`.
pub fn theta(h: &Hypergraph, e: EdgeId, f: EdgeId) -> Result<bool, NotEdgeGated> {
    let partition = edge_vertex_partition(h, e)?;
    let mut seen = vec![false; partition.anchors.len()];
    for &v in h.edge(f) {
        seen[partition.block_of[v.0]] = true;
    }
    Ok(seen.iter().all(|&s| s))
}

/// Per-edge gate slots for every vertex, derived from a distance table.
///
/// `slot[e][z]` is the index of z's gate within `edge(e)`, or `None` when z
/// has no gate in e. On a connected hypergraph the gate condition reduces to
/// a unique distance minimizer, because all vertices of an edge are mutually
/// at distance one.
pub(crate) struct SlotTable {
    slot: Vec<Vec<Option<u32>>>,
}

impl SlotTable {
    pub(crate) fn new(h: &Hypergraph, table: &DistanceTable) -> Self {
        let slot = h
            .edges()
            .map(|(_, edge)| {
                (0..h.vertex_count())
                    .map(|z| {
                        let dist: Vec<Option<u32>> =
                            edge.iter().map(|&a| table.rows[z].dist[a.0]).collect();
                        unique_min_slot(&dist).map(|s| s as u32)
                    })
                    .collect()
            })
            .collect();
        Self { slot }
    }

    fn gatedness(&self) -> EdgeGatedness {
        for (e, row) in self.slot.iter().enumerate() {
            if let Some(z) = row.iter().position(Option::is_none) {
                return EdgeGatedness {
                    edge_gated: false,
                    counterexample: Some((VertexId(z), EdgeId(e))),
                };
            }
        }
        EdgeGatedness {
            edge_gated: true,
            counterexample: None,
        }
    }

    /// Raw Θ: does `f` meet every block of `e`'s partial partition? Works
    /// whether or not the hypergraph is edge-gated; gateless vertices simply
    /// lie in no block.
    fn theta(&self, h: &Hypergraph, e: usize, f: usize) -> bool {
        let k = h.edge(EdgeId(e)).len();
        let mut seen = vec![false; k];
        for &v in h.edge(EdgeId(f)) {
            if let Some(s) = self.slot[e][v.0] {
                seen[s as usize] = true;
            }
        }
        seen.iter().all(|&s| s)
    }

    fn relation(&self, h: &Hypergraph) -> Vec<Vec<bool>> {
        let m = h.edge_count();
        (0..m)
            .map(|e| (0..m).map(|f| self.theta(h, e, f)).collect())
            .collect()
    }

    fn block(&self, h: &Hypergraph, e: usize, slot: u32) -> Vec<VertexId> {
        (0..h.vertex_count())
            .filter(|&z| self.slot[e][z] == Some(slot))
            .map(VertexId)
            .collect()
    }
}

/// The Θ-classes of an edge-gated hypergraph with transitive Θ, together
/// with the components left by removing each class.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ThetaStructure {
    /// Classes ordered by smallest member; edge ids ascending inside each.
    pub classes: Vec<Vec<EdgeId>>,
    /// Per edge, the index of its class.
    pub class_of: Vec<usize>,
    /// `class_components[i]` partitions the vertices of `H - classes[i]`.
    pub class_components: Vec<ComponentPartition>,
}

impl ThetaStructure {
    /// Component sizes `n_j(F_i)` for class `i`.
    pub fn component_sizes(&self, class: usize) -> Vec<usize> {
        self.class_components[class].sizes()
    }
}

/// Computes the Θ-classes and their component structure.
///
/// The classes are the connected components of the verified-symmetric part
/// of Θ; the call fails with a witness triple when Θ is not transitive, and
/// with the offending (vertex, edge) pair when the hypergraph is not
/// edge-gated.
pub fn theta_structure(h: &Hypergraph) -> Result<ThetaStructure, ThetaStructureError> {
    if !h.is_connected() {
        return Err(ThetaStructureError::Disconnected);
    }
    let table = DistanceTable::new(h);
    let slots = SlotTable::new(h, &table);
    theta_structure_with(h, &slots)
}

pub(crate) fn theta_structure_with(
    h: &Hypergraph,
    slots: &SlotTable,
) -> Result<ThetaStructure, ThetaStructureError> {
    let gatedness = slots.gatedness();
    if let Some((vertex, edge)) = gatedness.counterexample {
        return Err(NotEdgeGated { vertex, edge }.into());
    }
    let rel = slots.relation(h);
    let (classes, class_of) = mutual_classes(&rel);
    if let Some((e, f, g)) = class_transitivity_witness(&rel, &classes) {
        return Err(ThetaStructureError::NotTransitive { e, f, g });
    }
    let class_components = classes
        .iter()
        .map(|class| {
            let mut mask = vec![false; h.edge_count()];
            for &e in class {
                mask[e.0] = true;
            }
            h.components_masked(&mask)
        })
        .collect();
    Ok(ThetaStructure {
        classes,
        class_of,
        class_components,
    })
}

/// Connected components of the mutual (verified-symmetric) part of `rel`,
/// ordered by smallest member.
fn mutual_classes(rel: &[Vec<bool>]) -> (Vec<Vec<EdgeId>>, Vec<usize>) {
    let m = rel.len();
    let mut parent: Vec<usize> = (0..m).collect();
    fn find(parent: &mut [usize], mut x: usize) -> usize {
        while parent[x] != x {
            parent[x] = parent[parent[x]];
            x = parent[x];
        }
        x
    }
    for (e, row) in rel.iter().enumerate() {
        for f in (e + 1)..m {
            if row[f] && rel[f][e] {
                let (re, rf) = (find(&mut parent, e), find(&mut parent, f));
                parent[re] = rf;
            }
        }
    }
    let mut root_to_class = vec![usize::MAX; m];
    let mut classes: Vec<Vec<EdgeId>> = Vec::new();
    let mut class_of = vec![0; m];
    for (e, class) in class_of.iter_mut().enumerate() {
        let r = find(&mut parent, e);
        if root_to_class[r] == usize::MAX {
            root_to_class[r] = classes.len();
            classes.push(Vec::new());
        }
        *class = root_to_class[r];
        classes[root_to_class[r]].push(EdgeId(e));
    }
    (classes, class_of)
}

/// Finds `(e, f, g)` with `e Θ f`, `f Θ g`, not `e Θ g`, by checking that
/// every intra-class pair is related and tracing a chain on failure.
fn class_transitivity_witness(
    rel: &[Vec<bool>],
    classes: &[Vec<EdgeId>],
) -> Option<(EdgeId, EdgeId, EdgeId)> {
    for class in classes {
        for &e in class {
            for &g in class {
                if !rel[e.0][g.0] {
                    return Some(chain_witness(rel, class, e, g));
                }
            }
        }
    }
    None
}

/// `e` and `g` are in the same mutual-Θ component but unrelated; walk a
/// connecting chain and return the first failing triple along it.
fn chain_witness(rel: &[Vec<bool>], class: &[EdgeId], e: EdgeId, g: EdgeId) -> (EdgeId, EdgeId, EdgeId) {
    let mut parent: std::collections::HashMap<usize, usize> = std::collections::HashMap::new();
    let mut queue = VecDeque::from([e.0]);
    parent.insert(e.0, e.0);
    while let Some(x) = queue.pop_front() {
        if x == g.0 {
            break;
        }
        for &f in class {
            if rel[x][f.0] && rel[f.0][x] && !parent.contains_key(&f.0) {
                parent.insert(f.0, x);
                queue.push_back(f.0);
            }
        }
    }
    let mut chain = vec![g.0];
    let mut cur = g.0;
    while cur != e.0 {
        cur = parent[&cur];
        chain.push(cur);
    }
    chain.reverse(); // e = chain[0], ..., g = chain.last()
    for window in chain.windows(2) {
        let (prev, next) = (window[0], window[1]);
        if !rel[e.0][next] {
            return (e, EdgeId(prev), EdgeId(next));
        }
    }
    unreachable!("an unrelated pair in one mutual component yields a failing link");
}

/// Why recognition rejected a hypergraph.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum RecognitionFailure {
    NotUniform,
    NotEdgeGated,
    ThetaNotTransitive,
}

impl std::fmt::Display for RecognitionFailure {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            Self::NotUniform => write!(f, "not uniform"),
            Self::NotEdgeGated => write!(f, "not edge-gated"),
            Self::ThetaNotTransitive => write!(f, "Θ is not transitive"),
        }
    }
}

/// Everything the recognizer learned about a hypergraph.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RecognitionReport {
    pub uniform_k: Option<usize>,
    pub edge_gated: bool,
    pub gate_counterexample: Option<(VertexId, EdgeId)>,
    pub theta_symmetric: bool,
    pub theta_transitive: bool,
    pub theta_counterexample: Option<(EdgeId, EdgeId, EdgeId)>,
    /// Set when the convexity route was requested: every block of every
    /// edge's vertex partition is convex.
    pub convexity_ok: Option<bool>,
    /// k-uniform, edge-gated, and Θ transitive.
    pub verdict: bool,
}

impl RecognitionReport {
    /// The first reason the verdict is false, in check order.
    pub fn failure(&self) -> Option<RecognitionFailure> {
        if self.verdict {
            None
        } else if self.uniform_k.is_none() {
            Some(RecognitionFailure::NotUniform)
        } else if !self.edge_gated {
            Some(RecognitionFailure::NotEdgeGated)
        } else {
            Some(RecognitionFailure::ThetaNotTransitive)
        }
    }

    /// Verdict of the convexity characterization (uniform, edge-gated, all
    /// blocks convex), when it was computed. Must agree with `verdict`.
    pub fn convexity_route_verdict(&self) -> Option<bool> {
        self.convexity_ok
            .map(|convex| self.uniform_k.is_some() && self.edge_gated && convex)
    }
}

/// Decides whether `h` is a k-uniform partial cube-hypergraph.
///
/// The default route checks uniformity, edge-gatedness, and transitivity of
/// Θ. With `validate_convexity` the blocks of every edge partition are also
/// tested for convexity, so [`RecognitionReport::convexity_route_verdict`]
/// can be compared against the main verdict.
pub fn recognize(h: &Hypergraph, validate_convexity: bool) -> Result<RecognitionReport, Disconnected> {
    if !h.is_connected() {
        return Err(Disconnected);
    }
    let table = DistanceTable::new(h);
    let slots = SlotTable::new(h, &table);
    Ok(recognize_with(h, &table, &slots, validate_convexity))
}

pub(crate) fn recognize_with(
    h: &Hypergraph,
    table: &DistanceTable,
    slots: &SlotTable,
    validate_convexity: bool,
) -> RecognitionReport {
    let uniform_k = h.uniformity();
    let gatedness = slots.gatedness();
    let rel = slots.relation(h);
    let m = h.edge_count();
    let theta_symmetric = (0..m).all(|e| (e + 1..m).all(|f| rel[e][f] == rel[f][e]));
    let theta_counterexample = if theta_symmetric {
        let (classes, _) = mutual_classes(&rel);
        class_transitivity_witness(&rel, &classes)
    } else {
        scan_transitivity_witness(&rel)
    };
    let convexity_ok = validate_convexity.then(|| {
        h.edges().all(|(e, edge)| {
            (0..edge.len() as u32).all(|s| {
                let block = slots.block(h, e.0, s);
                let rows: Vec<&DistanceRow> = block.iter().map(|&v| &table.rows[v.0]).collect();
                is_convex_with(h, &rows, &block)
            })
        })
    });
    let theta_transitive = theta_counterexample.is_none();
    RecognitionReport {
        uniform_k,
        edge_gated: gatedness.edge_gated,
        gate_counterexample: gatedness.counterexample,
        theta_symmetric,
        theta_transitive,
        theta_counterexample,
        convexity_ok,
        verdict: uniform_k.is_some() && gatedness.edge_gated && theta_transitive,
    }
}

/// Direct triple scan, needed when the relation is not symmetric.
fn scan_transitivity_witness(rel: &[Vec<bool>]) -> Option<(EdgeId, EdgeId, EdgeId)> {
    let m = rel.len();
    for e in 0..m {
        for f in 0..m {
            if !rel[e][f] {
                continue;
            }
            for (g, &related) in rel[f].iter().enumerate() {
                if related && !rel[e][g] {
                    return Some((EdgeId(e), EdgeId(f), EdgeId(g)));
                }
            }
        }
    }
    None
}

/// Checks that every geodesic between vertices of different components of
/// `H - F` uses exactly one edge of `F`.
///
/// Runs a dynamic program over each source's shortest-path DAG, tracking the
/// minimum and maximum number of `F`-edges over all geodesics and all edge
/// choices per step; single-crossing holds iff both are 1 for every
/// cross-component pair.
pub fn verify_single_crossing(h: &Hypergraph, f: &[EdgeId]) -> Result<bool, SingleCrossingError> {
    if !h.is_connected() {
        return Err(SingleCrossingError::Disconnected);
    }
    let mut in_f = vec![false; h.edge_count()];
    for &e in f {
        h.check_edge_id(e)?;
        in_f[e.0] = true;
    }
    let comp = h.components_masked(&in_f);
    if comp.len() < 2 {
        return Err(SingleCrossingError::NotACut);
    }
    let n = h.vertex_count();
    for u in 0..n {
        let row = bfs_from(h, VertexId(u));
        let dist: Vec<u32> = row.dist.iter().map(|d| d.expect("connected")).collect();
        // vertices in increasing distance from u
        let mut order: Vec<usize> = (0..n).collect();
        order.sort_unstable_by_key(|&v| dist[v]);
        let mut min_f = vec![u32::MAX; n];
        let mut max_f = vec![0u32; n];
        min_f[u] = 0;
        for &v in &order {
            if v == u {
                continue;
            }
            for &e in h.incident_edges(VertexId(v)) {
                let step: u32 = u32::from(in_f[e.0]);
                for &x in h.edge(e) {
                    if dist[x.0] + 1 == dist[v] {
                        min_f[v] = min_f[v].min(min_f[x.0] + step);
                        max_f[v] = max_f[v].max(max_f[x.0] + step);
                    }
                }
            }
        }
        for v in (u + 1)..n {
            if comp.block_of[u] != comp.block_of[v] && (min_f[v] != 1 || max_f[v] != 1) {
                return Ok(false);
            }
        }
    }
    Ok(true)
}
