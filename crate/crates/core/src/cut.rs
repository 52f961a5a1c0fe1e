//! Wiener index via cut decompositions.
//!
//! Removing a cut (a set of pairwise vertex-disjoint edges crossed exactly
//! once by every geodesic between the parts it separates) splits the vertex
//! set into components, and the cut contributes the sum of pairwise products
//! of the component sizes to the Wiener index. Three entry points share this
//! idea:
//!
//! * [`wiener_cut`] — recognized k-uniform partial cube-hypergraphs,
//!   decomposed by Θ-classes; exact with no residual.
//! * [`wiener_hypertree`] — hypertrees (connected, linear, acyclic), where
//!   every single edge is its own cut; edge sizes may differ.
//! * [`wiener_general`] — an explicit [`CutPartition`], checked by
//!   [`validate_cut_partition`]; vertex pairs separated by no cut are charged
//!   their true BFS distance as a residual term.

use std::collections::HashMap;

use thiserror::Error;

use crate::hypergraph::{ComponentPartition, EdgeId, Hypergraph, VertexId};
use crate::metric::{bfs_from, is_convex_with, DistanceRow, DistanceTable};
use crate::pc::{recognize_with, theta_structure_with, RecognitionReport, SlotTable};

/// Vertex count above which [`wiener_general`] refuses to run its inline
/// all-pairs validation; pass `prevalidated` or call
/// [`validate_cut_partition`] explicitly for larger inputs.
pub const DEFAULT_VALIDATION_LIMIT: usize = 512;

/// Sum of pairwise products of component sizes: the Wiener contribution of
/// one cut.
pub fn cut_contribution(sizes: &[usize]) -> u128 {
    let sum: u128 = sizes.iter().map(|&s| s as u128).sum();
    let squares: u128 = sizes.iter().map(|&s| (s as u128) * (s as u128)).sum();
    (sum * sum - squares) / 2
}

/// A vertex pair together with its distance; used for residual terms and
/// unseparated-pair listings.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct ResidualPair {
    pub u: VertexId,
    pub v: VertexId,
    pub distance: u32,
}

/// One cut's share of the total.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CutContribution {
    pub cut: usize,
    pub component_sizes: Vec<usize>,
    pub contribution: u128,
}

/// A Wiener index split into per-cut contributions plus a residual for
/// pairs no cut separates. `total` always equals the sum of the parts.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct WienerBreakdown {
    pub total: u128,
    pub per_cut: Vec<CutContribution>,
    pub residual: u128,
    pub residual_pairs: Vec<ResidualPair>,
}

impl WienerBreakdown {
    fn from_parts(per_cut: Vec<CutContribution>, residual_pairs: Vec<ResidualPair>) -> Self {
        let residual: u128 = residual_pairs
            .iter()
            .map(|p| u128::from(p.distance))
            .sum();
        let total = per_cut.iter().map(|c| c.contribution).sum::<u128>() + residual;
        Self {
            total,
            per_cut,
            residual,
            residual_pairs,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum WienerCutError {
    #[error("hypergraph is disconnected")]
    Disconnected,
    #[error("not a partial cube-hypergraph ({})",
        .0.failure().map(|f| f.to_string()).unwrap_or_default())]
    NotPartialCube(Box<RecognitionReport>),
}

/// Wiener index of a recognized k-uniform partial cube-hypergraph, summed
/// over its Θ-classes. Refuses anything the recognizer rejects.
pub fn wiener_cut(h: &Hypergraph) -> Result<WienerBreakdown, WienerCutError> {
    if !h.is_connected() {
        return Err(WienerCutError::Disconnected);
    }
    let table = DistanceTable::new(h);
    let slots = SlotTable::new(h, &table);
    let report = recognize_with(h, &table, &slots, false);
    if !report.verdict {
        return Err(WienerCutError::NotPartialCube(Box::new(report)));
    }
    let structure = theta_structure_with(h, &slots)
        .expect("recognized hypergraphs have a Θ-class structure");
    let per_cut = structure
        .class_components
        .iter()
        .enumerate()
        .map(|(i, comp)| {
            let component_sizes = comp.sizes();
            let contribution = cut_contribution(&component_sizes);
            CutContribution {
                cut: i,
                component_sizes,
                contribution,
            }
        })
        .collect();
    Ok(WienerBreakdown::from_parts(per_cut, Vec::new()))
}

/// A cycle: vertices `v_0, …, v_{s-1}` and edges `e_0, …, e_{s-1}` with
/// `{v_i, v_{i+1 mod s}} ⊆ e_i`, all vertices distinct, all edges distinct.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CycleWitness {
    pub vertices: Vec<VertexId>,
    pub edges: Vec<EdgeId>,
}

impl CycleWitness {
    /// Checks the witness against the hypergraph it came from.
    pub fn is_valid_in(&self, h: &Hypergraph) -> bool {
        let s = self.vertices.len();
        if s < 2 || self.edges.len() != s {
            return false;
        }
        let mut vs = self.vertices.clone();
        vs.sort_unstable();
        vs.dedup();
        let mut es = self.edges.clone();
        es.sort_unstable();
        es.dedup();
        if vs.len() != s || es.len() != s {
            return false;
        }
        (0..s).all(|i| {
            let e = h.edge(self.edges[i]);
            e.contains(&self.vertices[i]) && e.contains(&self.vertices[(i + 1) % s])
        })
    }
}

/// Searches for a cycle: a closed vertex–edge sequence with pairwise
/// distinct vertices and pairwise distinct edges. Returns `None` when the
/// hypergraph is acyclic.
///
/// Runs a DFS over the bipartite incidence structure (vertices on one side,
/// edges on the other); any incidence cycle translates directly into a
/// hypergraph cycle and vice versa.
pub fn find_cycle(h: &Hypergraph) -> Option<CycleWitness> {
    let n = h.vertex_count();
    let m = h.edge_count();
    let total = n + m;
    // node v < n is vertex v; node n + e is edge e
    let neighbors = |node: usize| -> Vec<usize> {
        if node < n {
            h.incident_edges(VertexId(node))
                .iter()
                .map(|e| n + e.0)
                .collect()
        } else {
            h.edge(EdgeId(node - n)).iter().map(|v| v.0).collect()
        }
    };
    let mut visited = vec![false; total];
    let mut parent = vec![usize::MAX; total];
    for root in 0..total {
        if visited[root] {
            continue;
        }
        visited[root] = true;
        let mut stack = vec![(root, 0usize)];
        while let Some(&mut (node, ref mut next)) = stack.last_mut() {
            let adj = neighbors(node);
            if *next >= adj.len() {
                stack.pop();
                continue;
            }
            let w = adj[*next];
            *next += 1;
            if w == parent[node] {
                continue;
            }
            if visited[w] {
                // w is an ancestor on the DFS stack: close the cycle
                let mut path = vec![node];
                let mut cur = node;
                while cur != w {
                    cur = parent[cur];
                    path.push(cur);
                }
                path.reverse(); // w .. node, alternating vertex/edge nodes
                return Some(witness_from_incidence_cycle(n, &path));
            }
            visited[w] = true;
            parent[w] = node;
            stack.push((w, 0));
        }
    }
    None
}

fn witness_from_incidence_cycle(n: usize, cycle: &[usize]) -> CycleWitness {
    debug_assert!(cycle.len().is_multiple_of(2) && cycle.len() >= 4);
    let start = if cycle[0] < n { 0 } else { 1 };
    let rotated: Vec<usize> = cycle[start..].iter().chain(&cycle[..start]).copied().collect();
    let vertices = rotated.iter().step_by(2).map(|&v| VertexId(v)).collect();
    let edges = rotated
        .iter()
        .skip(1)
        .step_by(2)
        .map(|&e| EdgeId(e - n))
        .collect();
    CycleWitness { vertices, edges }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum NotAHypertree {
    #[error("hypergraph is disconnected")]
    Disconnected,
    #[error("not linear: edges {first} and {second} share two or more vertices")]
    NotLinear { first: EdgeId, second: EdgeId },
    #[error("has a cycle through {} edges", .0.edges.len())]
    HasCycle(CycleWitness),
}

/// Checks the hypertree definition: connected, linear, and acyclic.
pub fn check_hypertree(h: &Hypergraph) -> Result<(), NotAHypertree> {
    if !h.is_connected() {
        return Err(NotAHypertree::Disconnected);
    }
    if let Some((first, second)) = h.first_linearity_violation() {
        return Err(NotAHypertree::NotLinear { first, second });
    }
    if let Some(witness) = find_cycle(h) {
        return Err(NotAHypertree::HasCycle(witness));
    }
    Ok(())
}

/// Wiener index of a hypertree: every edge is its own cut, and edge sizes
/// may differ.
pub fn wiener_hypertree(t: &Hypergraph) -> Result<WienerBreakdown, NotAHypertree> {
    check_hypertree(t)?;
    let per_cut = t
        .edge_ids()
        .map(|e| {
            let mut mask = vec![false; t.edge_count()];
            mask[e.0] = true;
            let component_sizes = t.components_masked(&mask).sizes();
            let contribution = cut_contribution(&component_sizes);
            CutContribution {
                cut: e.0,
                component_sizes,
                contribution,
            }
        })
        .collect();
    Ok(WienerBreakdown::from_parts(per_cut, Vec::new()))
}

/// A partition of the edge set into cuts. Plain data; structure and
/// semantics are checked by [`validate_cut_partition`].
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CutPartition {
    pub cuts: Vec<Vec<EdgeId>>,
}

impl CutPartition {
    pub fn new(cuts: Vec<Vec<EdgeId>>) -> Self {
        Self { cuts }
    }

    /// Every edge its own cut: sufficient for hypertrees and phenylenes.
    pub fn singletons(h: &Hypergraph) -> Self {
        Self {
            cuts: h.edge_ids().map(|e| vec![e]).collect(),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum CutError {
    #[error("hypergraph is disconnected")]
    Disconnected,
    #[error("the cuts do not partition the edge set: {detail}")]
    NotAPartition { detail: String },
    #[error("cut {cut}: edges {first} and {second} share a vertex")]
    CutEdgesIntersect {
        cut: usize,
        first: EdgeId,
        second: EdgeId,
    },
}

/// Per-cut validation outcome.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CutCheck {
    /// Edges of the cut are pairwise vertex-disjoint (checked before the
    /// report is produced, hence always true in a returned report).
    pub pairwise_disjoint: bool,
    /// Removing the cut disconnects the hypergraph.
    pub disconnects: bool,
    pub component_sizes: Vec<usize>,
    /// Every component's vertex set is convex.
    pub components_convex: bool,
    /// Every geodesic between separated vertices crosses the cut exactly
    /// once.
    pub single_crossing: bool,
}

impl CutCheck {
    pub fn all_ok(&self) -> bool {
        self.pairwise_disjoint && self.disconnects && self.components_convex && self.single_crossing
    }
}

/// Full validation report for a cut partition.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CutValidationReport {
    pub cuts: Vec<CutCheck>,
    /// For every pair separated by at least one cut, the distance equals the
    /// number of separating cuts (verified against the brute-force table).
    pub coverage_identity: bool,
    /// Pairs of distinct vertices no cut separates, with their distances.
    pub unseparated_pairs: Vec<ResidualPair>,
}

impl CutValidationReport {
    /// The generalized cut method is exact iff this holds.
    pub fn method_valid(&self) -> bool {
        self.coverage_identity && self.cuts.iter().all(CutCheck::all_ok)
    }
}

/// Rejects malformed partitions: ids must cover every edge exactly once and
/// each cut's edges must be pairwise vertex-disjoint.
fn check_structure(h: &Hypergraph, partition: &CutPartition) -> Result<(), CutError> {
    if !h.is_connected() {
        return Err(CutError::Disconnected);
    }
    let mut owner = vec![None; h.edge_count()];
    for (c, cut) in partition.cuts.iter().enumerate() {
        if cut.is_empty() {
            return Err(CutError::NotAPartition {
                detail: format!("cut {c} is empty"),
            });
        }
        for &e in cut {
            if h.check_edge_id(e).is_err() {
                return Err(CutError::NotAPartition {
                    detail: format!("cut {c} mentions unknown edge id {e}"),
                });
            }
            if let Some(prev) = owner[e.0] {
                return Err(CutError::NotAPartition {
                    detail: format!("edge {e} appears in cuts {prev} and {c}"),
                });
            }
            owner[e.0] = Some(c);
        }
        for (i, &a) in cut.iter().enumerate() {
            for &b in &cut[i + 1..] {
                if edges_share_vertex(h, a, b) {
                    return Err(CutError::CutEdgesIntersect {
                        cut: c,
                        first: a,
                        second: b,
                    });
                }
            }
        }
    }
    if let Some(e) = owner.iter().position(Option::is_none) {
        return Err(CutError::NotAPartition {
            detail: format!("edge {e} belongs to no cut"),
        });
    }
    Ok(())
}

fn edges_share_vertex(h: &Hypergraph, a: EdgeId, b: EdgeId) -> bool {
    let (ea, eb) = (h.edge(a), h.edge(b));
    let (mut i, mut j) = (0, 0);
    while i < ea.len() && j < eb.len() {
        match ea[i].cmp(&eb[j]) {
            std::cmp::Ordering::Less => i += 1,
            std::cmp::Ordering::Greater => j += 1,
            std::cmp::Ordering::Equal => return true,
        }
    }
    false
}

/// Checks every cut of the partition (disconnection, convex components,
/// single crossing) and the global coverage identity, exhaustively against
/// the brute-force distance table.
pub fn validate_cut_partition(
    h: &Hypergraph,
    partition: &CutPartition,
) -> Result<CutValidationReport, CutError> {
    check_structure(h, partition)?;
    let table = DistanceTable::new(h);
    let components = cut_components(h, partition);
    let cuts = partition
        .cuts
        .iter()
        .zip(&components)
        .map(|(cut, comp)| {
            let disconnects = comp.len() >= 2;
            let components_convex = comp.blocks.iter().all(|block| {
                let rows: Vec<&DistanceRow> = block.iter().map(|&v| &table.rows[v.0]).collect();
                is_convex_with(h, &rows, block)
            });
            let single_crossing = disconnects && single_crossing_in_table(h, &table, cut, comp);
            CutCheck {
                pairwise_disjoint: true,
                disconnects,
                component_sizes: comp.sizes(),
                components_convex,
                single_crossing,
            }
        })
        .collect();
    let mut coverage_identity = true;
    let mut unseparated_pairs = Vec::new();
    let n = h.vertex_count();
    for u in 0..n {
        for v in (u + 1)..n {
            let separating = components
                .iter()
                .filter(|comp| comp.block_of[u] != comp.block_of[v])
                .count() as u32;
            let d = table.rows[u].dist[v].expect("connected");
            if separating == 0 {
                unseparated_pairs.push(ResidualPair {
                    u: VertexId(u),
                    v: VertexId(v),
                    distance: d,
                });
            } else if d != separating {
                coverage_identity = false;
            }
        }
    }
    Ok(CutValidationReport {
        cuts,
        coverage_identity,
        unseparated_pairs,
    })
}

fn cut_components(h: &Hypergraph, partition: &CutPartition) -> Vec<ComponentPartition> {
    partition
        .cuts
        .iter()
        .map(|cut| {
            let mut mask = vec![false; h.edge_count()];
            for &e in cut {
                mask[e.0] = true;
            }
            h.components_masked(&mask)
        })
        .collect()
}

/// Allocation-light component sweep for the compute path: labels and sizes
/// only, with scratch buffers reused across cuts. Labels follow discovery
/// order by smallest vertex, like [`Hypergraph::components_masked`].
struct LabelSweep {
    edge_done: Vec<bool>,
    stack: Vec<usize>,
}

impl LabelSweep {
    fn new(h: &Hypergraph) -> Self {
        Self {
            edge_done: vec![false; h.edge_count()],
            stack: Vec::with_capacity(h.vertex_count()),
        }
    }

    fn labels(&mut self, h: &Hypergraph, mask: &[bool]) -> (Vec<u32>, Vec<usize>) {
        const UNSEEN: u32 = u32::MAX;
        let mut labels = vec![UNSEEN; h.vertex_count()];
        let mut sizes: Vec<usize> = Vec::new();
        self.edge_done.clear();
        self.edge_done.resize(h.edge_count(), false);
        for start in 0..h.vertex_count() {
            if labels[start] != UNSEEN {
                continue;
            }
            let block = sizes.len() as u32;
            sizes.push(0);
            labels[start] = block;
            self.stack.push(start);
            while let Some(v) = self.stack.pop() {
                sizes[block as usize] += 1;
                for &e in h.incident_edges(VertexId(v)) {
                    if self.edge_done[e.0] || mask[e.0] {
                        continue;
                    }
                    self.edge_done[e.0] = true;
                    for &w in h.edge(e) {
                        if labels[w.0] == UNSEEN {
                            labels[w.0] = block;
                            self.stack.push(w.0);
                        }
                    }
                }
            }
        }
        (labels, sizes)
    }
}

/// Single-crossing DP against a precomputed distance table.
fn single_crossing_in_table(
    h: &Hypergraph,
    table: &DistanceTable,
    cut: &[EdgeId],
    comp: &ComponentPartition,
) -> bool {
    let mut in_f = vec![false; h.edge_count()];
    for &e in cut {
        in_f[e.0] = true;
    }
    let n = h.vertex_count();
    for u in 0..n {
        let dist: Vec<u32> = table.rows[u]
            .dist
            .iter()
            .map(|d| d.expect("connected"))
            .collect();
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
                let step = u32::from(in_f[e.0]);
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
                return false;
            }
        }
    }
    true
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum WienerGeneralError {
    #[error(transparent)]
    Cut(#[from] CutError),
    #[error("the cut partition fails validation; see the report")]
    InvalidCutPartition(Box<CutValidationReport>),
    #[error(
        "inline validation refused: {vertices} vertices exceeds the limit of {limit}; \
         validate explicitly or pass prevalidated"
    )]
    ValidationLimitExceeded { vertices: usize, limit: usize },
}

/// Wiener index from an explicit cut partition: per-cut contributions plus
/// the BFS distance of every pair no cut separates.
///
/// Unless `prevalidated`, the partition is validated inline first (refused
/// beyond [`DEFAULT_VALIDATION_LIMIT`] vertices, since validation is
/// quadratic). Malformed partitions are rejected either way.
pub fn wiener_general(
    h: &Hypergraph,
    partition: &CutPartition,
    prevalidated: bool,
) -> Result<WienerBreakdown, WienerGeneralError> {
    check_structure(h, partition)?;
    if !prevalidated {
        if h.vertex_count() > DEFAULT_VALIDATION_LIMIT {
            return Err(WienerGeneralError::ValidationLimitExceeded {
                vertices: h.vertex_count(),
                limit: DEFAULT_VALIDATION_LIMIT,
            });
        }
        let report = validate_cut_partition(h, partition)?;
        if !report.method_valid() {
            return Err(WienerGeneralError::InvalidCutPartition(Box::new(report)));
        }
    }
    let mut sweep = LabelSweep::new(h);
    let mut mask = vec![false; h.edge_count()];
    let mut label_sets: Vec<(Vec<u32>, usize)> = Vec::with_capacity(partition.cuts.len());
    let mut per_cut = Vec::with_capacity(partition.cuts.len());
    for (i, cut) in partition.cuts.iter().enumerate() {
        for &e in cut {
            mask[e.0] = true;
        }
        let (labels, component_sizes) = sweep.labels(h, &mask);
        for &e in cut {
            mask[e.0] = false;
        }
        let contribution = cut_contribution(&component_sizes);
        label_sets.push((labels, component_sizes.len()));
        per_cut.push(CutContribution {
            cut: i,
            component_sizes,
            contribution,
        });
    }
    let residual_pairs = residual_pairs(h, &label_sets);
    Ok(WienerBreakdown::from_parts(per_cut, residual_pairs))
}

/// Pairs left in the same component by every cut, with their distances.
///
/// Vertices are refined into groups by their per-cut component labels
/// (linear-time bucketing, since labels are dense); only groups of two or
/// more survive, and their members pair up. Distances fall out of a
/// shared-edge check (distance one) or a cached BFS row.
fn residual_pairs(h: &Hypergraph, label_sets: &[(Vec<u32>, usize)]) -> Vec<ResidualPair> {
    let n = h.vertex_count();
    let mut groups: Vec<Vec<usize>> = vec![(0..n).collect()];
    let max_labels = label_sets.iter().map(|(_, c)| *c).max().unwrap_or(0);
    let mut buckets: Vec<Vec<usize>> = vec![Vec::new(); max_labels];
    for (labels, _) in label_sets {
        let mut next = Vec::new();
        for group in &groups {
            let mut touched: Vec<usize> = Vec::new();
            for &v in group {
                let l = labels[v] as usize;
                if buckets[l].is_empty() {
                    touched.push(l);
                }
                buckets[l].push(v);
            }
            touched.sort_unstable();
            for l in touched {
                let bucket = std::mem::take(&mut buckets[l]);
                if bucket.len() >= 2 {
                    next.push(bucket);
                }
            }
        }
        groups = next;
        if groups.is_empty() {
            break;
        }
    }
    for group in &mut groups {
        group.sort_unstable();
    }
    groups.sort_unstable();
    let mut pairs = Vec::new();
    let mut row_cache: HashMap<usize, DistanceRow> = HashMap::new();
    for group in &groups {
        for (i, &u) in group.iter().enumerate() {
            for &v in &group[i + 1..] {
                let distance = if edges_intersect_vertices(h, VertexId(u), VertexId(v)) {
                    1
                } else {
                    row_cache
                        .entry(u)
                        .or_insert_with(|| bfs_from(h, VertexId(u)))
                        .dist[v]
                        .expect("connected")
                };
                pairs.push(ResidualPair {
                    u: VertexId(u),
                    v: VertexId(v),
                    distance,
                });
            }
        }
    }
    pairs
}

fn edges_intersect_vertices(h: &Hypergraph, u: VertexId, v: VertexId) -> bool {
    let (a, b) = (h.incident_edges(u), h.incident_edges(v));
    let (mut i, mut j) = (0, 0);
    while i < a.len() && j < b.len() {
        match a[i].cmp(&b[j]) {
            std::cmp::Ordering::Less => i += 1,
            std::cmp::Ordering::Greater => j += 1,
            std::cmp::Ordering::Equal => return true,
        }
    }
    false
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::metric::wiener_brute;

    fn build(n: usize, edges: Vec<Vec<usize>>) -> Hypergraph {
        Hypergraph::new(n, edges).unwrap()
    }

    fn t1() -> Hypergraph {
        build(7, vec![vec![0, 1], vec![1, 2, 3], vec![3, 4, 5], vec![3, 6]])
    }

    fn lp(n: usize) -> Hypergraph {
        let mut edges: Vec<Vec<usize>> = (0..n).map(|i| (6 * i..6 * i + 6).collect()).collect();
        edges.extend((0..n - 1).map(|i| vec![6 * i + 4, 6 * i + 5, 6 * i + 6, 6 * i + 7]));
        build(6 * n, edges)
    }

    fn cube32() -> Hypergraph {
        let mut edges = Vec::new();
        for c in 0..3 {
            edges.push(vec![c, 3 + c, 6 + c]);
        }
        for r in 0..3 {
            edges.push(vec![3 * r, 3 * r + 1, 3 * r + 2]);
        }
        build(9, edges)
    }

    #[test]
    fn contribution_formula() {
        assert_eq!(cut_contribution(&[7, 7, 7, 7, 7, 7]), 735);
        assert_eq!(cut_contribution(&[1, 1, 1, 1, 7, 31]), 375);
        assert_eq!(cut_contribution(&[42]), 0);
        assert_eq!(cut_contribution(&[2, 1, 4]), 14);
    }

    #[test]
    fn wiener_cut_on_cube() {
        let b = wiener_cut(&cube32()).unwrap();
        assert_eq!(b.total, 54);
        assert_eq!(b.per_cut.len(), 2);
        assert_eq!(b.residual, 0);
        assert_eq!(b.total, wiener_brute(&cube32()).unwrap());
    }

    #[test]
    fn wiener_cut_refuses_non_uniform() {
        match wiener_cut(&t1()) {
            Err(WienerCutError::NotPartialCube(report)) => {
                assert_eq!(report.uniform_k, None);
            }
            other => panic!("expected NotPartialCube, got {other:?}"),
        }
    }

    #[test]
    fn hypertree_values() {
        let b = wiener_hypertree(&t1()).unwrap();
        assert_eq!(b.total, 37);
        assert_eq!(b.per_cut[1].component_sizes, vec![2, 1, 4]);

        let two = build(5, vec![vec![0, 1, 2], vec![2, 3, 4]]);
        assert_eq!(wiener_hypertree(&two).unwrap().total, 14);

        let single = build(5, vec![vec![0, 1, 2, 3, 4]]);
        assert_eq!(wiener_hypertree(&single).unwrap().total, 10);
    }

    #[test]
    fn hypertree_rejections() {
        assert_eq!(
            wiener_hypertree(&lp(2)).unwrap_err(),
            NotAHypertree::NotLinear {
                first: EdgeId(0),
                second: EdgeId(2)
            }
        );
        let c4 = build(4, vec![vec![0, 1], vec![1, 2], vec![2, 3], vec![3, 0]]);
        match wiener_hypertree(&c4).unwrap_err() {
            NotAHypertree::HasCycle(w) => assert!(w.is_valid_in(&c4)),
            other => panic!("expected a cycle, got {other:?}"),
        }
        let split = build(4, vec![vec![0, 1], vec![2, 3]]);
        assert_eq!(wiener_hypertree(&split).unwrap_err(), NotAHypertree::Disconnected);
    }

    #[test]
    fn cycle_search() {
        assert_eq!(find_cycle(&t1()), None);
        let w = find_cycle(&lp(2)).expect("phenylenes have cycles");
        assert!(w.is_valid_in(&lp(2)));
        let c4 = build(4, vec![vec![0, 1], vec![1, 2], vec![2, 3], vec![3, 0]]);
        let w = find_cycle(&c4).unwrap();
        assert_eq!(w.vertices.len(), 4);
        assert!(w.is_valid_in(&c4));
    }

    #[test]
    fn validate_lp2_singletons() {
        let h = lp(2);
        let report = validate_cut_partition(&h, &CutPartition::singletons(&h)).unwrap();
        assert!(report.method_valid());
        assert!(report.coverage_identity);
        assert_eq!(
            report.unseparated_pairs,
            vec![
                ResidualPair { u: VertexId(4), v: VertexId(5), distance: 1 },
                ResidualPair { u: VertexId(6), v: VertexId(7), distance: 1 },
            ]
        );
        assert_eq!(report.cuts[0].component_sizes, vec![1, 1, 1, 1, 8]);
        assert_eq!(report.cuts[2].component_sizes, vec![6, 6]);
    }

    #[test]
    fn validate_rejects_malformed() {
        let h = lp(2);
        let err = validate_cut_partition(
            &h,
            &CutPartition::new(vec![vec![EdgeId(0)], vec![EdgeId(1)]]),
        )
        .unwrap_err();
        assert!(matches!(err, CutError::NotAPartition { .. }));

        let err = validate_cut_partition(
            &h,
            &CutPartition::new(vec![vec![EdgeId(0), EdgeId(2)], vec![EdgeId(1)]]),
        )
        .unwrap_err();
        assert_eq!(
            err,
            CutError::CutEdgesIntersect {
                cut: 0,
                first: EdgeId(0),
                second: EdgeId(2)
            }
        );
    }

    #[test]
    fn general_on_phenylenes() {
        for n in [2usize, 3, 4] {
            let h = lp(n);
            let b = wiener_general(&h, &CutPartition::singletons(&h), false).unwrap();
            let expected = (12 * n.pow(3) + 6 * n.pow(2) - 3 * n) as u128;
            assert_eq!(b.total, expected, "LP_{n}");
            assert_eq!(b.residual, 2 * (n as u128 - 1));
            assert_eq!(b.residual_pairs.len(), 2 * (n - 1));
        }
    }

    #[test]
    fn general_rejects_invalid_partition() {
        // both hexagons in one cut: disjoint, disconnecting, but geodesics
        // between the outer parts cross twice
        let h = lp(2);
        let partition = CutPartition::new(vec![vec![EdgeId(0), EdgeId(1)], vec![EdgeId(2)]]);
        match wiener_general(&h, &partition, false).unwrap_err() {
            WienerGeneralError::InvalidCutPartition(report) => {
                assert!(!report.cuts[0].single_crossing);
                assert!(!report.coverage_identity);
            }
            other => panic!("expected InvalidCutPartition, got {other:?}"),
        }
    }

    #[test]
    fn general_matches_theta_classes_on_cube() {
        let h = cube32();
        let structure = crate::pc::theta_structure(&h).unwrap();
        let partition = CutPartition::new(structure.classes.clone());
        let b = wiener_general(&h, &partition, false).unwrap();
        assert_eq!(b.total, 54);
        assert!(b.residual_pairs.is_empty());
    }

    #[test]
    fn validation_limit() {
        // path graph on 600 vertices
        let n = 600;
        let h = build(n, (0..n - 1).map(|i| vec![i, i + 1]).collect());
        let partition = CutPartition::singletons(&h);
        assert!(matches!(
            wiener_general(&h, &partition, false).unwrap_err(),
            WienerGeneralError::ValidationLimitExceeded { vertices: 600, .. }
        ));
        let b = wiener_general(&h, &partition, true).unwrap();
        assert_eq!(b.total, wiener_brute(&h).unwrap());
    }

    #[test]
    fn breakdown_internal_identity() {
        let h = lp(3);
        let b = wiener_general(&h, &CutPartition::singletons(&h), false).unwrap();
        let parts: u128 = b.per_cut.iter().map(|c| c.contribution).sum::<u128>() + b.residual;
        assert_eq!(b.total, parts);
        assert_eq!(
            b.residual,
            b.residual_pairs.iter().map(|p| u128::from(p.distance)).sum::<u128>()
        );
    }
}
