//! Shortest-path distances, the brute-force Wiener oracle, convexity and
//! isometry tests.
//!
//! A step moves between any two vertices of one shared edge, so BFS expands
//! whole edges: each edge is expanded at most once per source, giving
//! `O(n + m + Σ|e|)` per source. Distances are `u32`; Wiener sums are `u128`
//! so that overflow is impossible at any size this crate can process.

use std::collections::VecDeque;

use thiserror::Error;

use crate::hypergraph::{EdgeId, Hypergraph, VertexId};

/// The operation needs a connected hypergraph.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Error)]
#[error("hypergraph is disconnected")]
pub struct Disconnected;

/// Why a claimed subhypergraph embedding is not one.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum NotASubhypergraph {
    #[error("vertex map is not injective: {a} and {b} both map to {image}")]
    NotInjective {
        a: VertexId,
        b: VertexId,
        image: VertexId,
    },
    #[error("vertex map sends {vertex} to {image}, outside the host")]
    ImageOutOfRange { vertex: VertexId, image: VertexId },
    #[error("vertex map is shorter than the subhypergraph vertex count")]
    MapTooShort,
    #[error("image of edge {edge} is not an edge of the host")]
    EdgeNotPresent { edge: EdgeId },
}

/// Distances from one source vertex; `None` marks unreachable vertices.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DistanceRow {
    pub source: VertexId,
    pub dist: Vec<Option<u32>>,
}

impl DistanceRow {
    pub fn get(&self, v: VertexId) -> Option<u32> {
        self.dist[v.0]
    }
}

/// All-pairs distances, one row per vertex.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DistanceTable {
    pub rows: Vec<DistanceRow>,
}

impl DistanceTable {
    pub fn new(h: &Hypergraph) -> Self {
        Self {
            rows: h.vertex_ids().map(|u| bfs_from(h, u)).collect(),
        }
    }

    pub fn get(&self, u: VertexId, v: VertexId) -> Option<u32> {
        self.rows[u.0].dist[v.0]
    }
}

/// Single-source shortest-path lengths.
pub fn bfs_from(h: &Hypergraph, source: VertexId) -> DistanceRow {
    let mut dist: Vec<Option<u32>> = vec![None; h.vertex_count()];
    let mut edge_done = vec![false; h.edge_count()];
    let mut queue = VecDeque::new();
    dist[source.0] = Some(0);
    queue.push_back(source);
    while let Some(u) = queue.pop_front() {
        let d = dist[u.0].expect("queued vertices have distances");
        for &e in h.incident_edges(u) {
            if edge_done[e.0] {
                continue;
            }
            edge_done[e.0] = true;
            for &w in h.edge(e) {
                if dist[w.0].is_none() {
                    dist[w.0] = Some(d + 1);
                    queue.push_back(w);
                }
            }
        }
    }
    DistanceRow { source, dist }
}

/// Distance between two vertices; `None` when they are in different
/// components.
pub fn distance(h: &Hypergraph, u: VertexId, v: VertexId) -> Option<u32> {
    if u == v {
        return Some(0);
    }
    bfs_from(h, u).get(v)
}

/// Exact Wiener index by summing BFS rows over unordered pairs.
pub fn wiener_brute(h: &Hypergraph) -> Result<u128, Disconnected> {
    wiener_brute_threaded(h, 1)
}

/// [`wiener_brute`] with the per-source fan-out spread over `threads`
/// OS threads. Results are summed in chunk order, so the value is identical
/// for every thread count.
pub fn wiener_brute_threaded(h: &Hypergraph, threads: usize) -> Result<u128, Disconnected> {
    let n = h.vertex_count();
    let threads = threads.clamp(1, n.max(1));
    let sum_range = |lo: usize, hi: usize| -> Result<u128, Disconnected> {
        let mut acc: u128 = 0;
        for u in lo..hi {
            let row = bfs_from(h, VertexId(u));
            for v in (u + 1)..n {
                acc += u128::from(row.dist[v].ok_or(Disconnected)?);
            }
        }
        Ok(acc)
    };
    if threads == 1 {
        return sum_range(0, n);
    }
    let chunk = n.div_ceil(threads);
    std::thread::scope(|scope| {
        let handles: Vec<_> = (0..threads)
            .map(|t| {
                let lo = (t * chunk).min(n);
                let hi = ((t + 1) * chunk).min(n);
                scope.spawn(move || sum_range(lo, hi))
            })
            .collect();
        let mut total: u128 = 0;
        for handle in handles {
            total += handle.join().expect("wiener worker panicked")?;
        }
        Ok(total)
    })
}

/// True iff `set` contains every vertex on every geodesic between two of its
/// members.
pub fn is_convex(h: &Hypergraph, set: &[VertexId]) -> Result<bool, Disconnected> {
    if !h.is_connected() {
        return Err(Disconnected);
    }
    let rows: Vec<DistanceRow> = set.iter().map(|&x| bfs_from(h, x)).collect();
    let refs: Vec<&DistanceRow> = rows.iter().collect();
    Ok(is_convex_with(h, &refs, set))
}

/// Convexity check against precomputed rows: `rows[i]` is the BFS row of
/// `set[i]`. All rows must be finite (connected hypergraph).
pub(crate) fn is_convex_with(h: &Hypergraph, rows: &[&DistanceRow], set: &[VertexId]) -> bool {
    let mut member = vec![false; h.vertex_count()];
    for &v in set {
        member[v.0] = true;
    }
    for (i, _) in set.iter().enumerate() {
        for (j, _) in set.iter().enumerate().skip(i) {
            let (rx, ry) = (&rows[i], &rows[j]);
            let dxy = rx.dist[set[j].0].expect("connected");
            for (z, &is_member) in member.iter().enumerate() {
                if is_member {
                    continue;
                }
                let (dxz, dzy) = (rx.dist[z].expect("connected"), ry.dist[z].expect("connected"));
                if dxz + dzy == dxy {
                    return false;
                }
            }
        }
    }
    true
}

/// The set of vertices strictly closer to `x` than to `y`.
pub fn closer_set(h: &Hypergraph, x: VertexId, y: VertexId) -> Result<Vec<VertexId>, Disconnected> {
    let rx = bfs_from(h, x);
    let ry = bfs_from(h, y);
    let mut out = Vec::new();
    for z in h.vertex_ids() {
        let (dx, dy) = (rx.get(z).ok_or(Disconnected)?, ry.get(z).ok_or(Disconnected)?);
        if dx < dy {
            out.push(z);
        }
    }
    Ok(out)
}

/// Checks that `sub`, embedded into `host` by `vertex_map` (the image of
/// `sub` vertex `i` is `vertex_map[i]`), preserves all pairwise distances.
///
/// The map must be injective and every mapped edge of `sub` must be an edge
/// of `host`; otherwise the embedding is not a subhypergraph at all and an
/// error is returned.
pub fn is_isometric_subhypergraph(
    host: &Hypergraph,
    sub: &Hypergraph,
    vertex_map: &[VertexId],
) -> Result<bool, NotASubhypergraph> {
    if vertex_map.len() < sub.vertex_count() {
        return Err(NotASubhypergraph::MapTooShort);
    }
    let mut preimage = vec![None; host.vertex_count()];
    for (i, &img) in vertex_map.iter().enumerate().take(sub.vertex_count()) {
        if !host.check_vertex_id(img) {
            return Err(NotASubhypergraph::ImageOutOfRange {
                vertex: VertexId(i),
                image: img,
            });
        }
        if let Some(a) = preimage[img.0] {
            return Err(NotASubhypergraph::NotInjective {
                a,
                b: VertexId(i),
                image: img,
            });
        }
        preimage[img.0] = Some(VertexId(i));
    }
    let mut host_edges: Vec<Vec<VertexId>> = host.edges().map(|(_, e)| e.to_vec()).collect();
    host_edges.sort_unstable();
    for (id, e) in sub.edges() {
        let mut image: Vec<VertexId> = e.iter().map(|&v| vertex_map[v.0]).collect();
        image.sort_unstable();
        if host_edges.binary_search(&image).is_err() {
            return Err(NotASubhypergraph::EdgeNotPresent { edge: id });
        }
    }
    for u in sub.vertex_ids() {
        let sub_row = bfs_from(sub, u);
        let host_row = bfs_from(host, vertex_map[u.0]);
        for v in sub.vertex_ids() {
            if sub_row.get(v) != host_row.get(vertex_map[v.0]) {
                return Ok(false);
            }
        }
    }
    Ok(true)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn build(n: usize, edges: Vec<Vec<usize>>) -> Hypergraph {
        Hypergraph::new(n, edges).unwrap()
    }

    fn lp2() -> Hypergraph {
        build(
            12,
            vec![(0..6).collect(), (6..12).collect(), vec![4, 5, 6, 7]],
        )
    }

    fn t1() -> Hypergraph {
        build(7, vec![vec![0, 1], vec![1, 2, 3], vec![3, 4, 5], vec![3, 6]])
    }

    #[test]
    fn bfs_single_edge() {
        let h = build(4, vec![vec![0, 1, 2, 3]]);
        let row = bfs_from(&h, VertexId(0));
        assert_eq!(row.dist, vec![Some(0), Some(1), Some(1), Some(1)]);
    }

    #[test]
    fn bfs_lp2_across_the_chain() {
        // hexagon, square, hexagon: three steps end to end
        assert_eq!(distance(&lp2(), VertexId(0), VertexId(11)), Some(3));
    }

    #[test]
    fn distance_basics() {
        let h = t1();
        assert_eq!(distance(&h, VertexId(4), VertexId(4)), Some(0));
        assert_eq!(distance(&h, VertexId(1), VertexId(2)), Some(1));
        let split = build(4, vec![vec![0, 1], vec![2, 3]]);
        assert_eq!(distance(&split, VertexId(0), VertexId(3)), None);
    }

    #[test]
    fn wiener_brute_values() {
        assert_eq!(wiener_brute(&t1()).unwrap(), 37);
        assert_eq!(wiener_brute(&lp2()).unwrap(), 114);
        // single edge on k vertices: all pairs at distance 1
        let h = build(5, vec![vec![0, 1, 2, 3, 4]]);
        assert_eq!(wiener_brute(&h).unwrap(), 10);
        let split = build(4, vec![vec![0, 1], vec![2, 3]]);
        assert_eq!(wiener_brute(&split), Err(Disconnected));
    }

    #[test]
    fn wiener_threaded_matches_serial() {
        let h = lp2();
        let serial = wiener_brute(&h).unwrap();
        for threads in [2, 3, 8] {
            assert_eq!(wiener_brute_threaded(&h, threads).unwrap(), serial);
        }
    }

    /// 3-uniform 2-cube on 9 vertices, vertex id = 3*first + second
    /// coordinate.
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
    fn convexity_cases() {
        let h = lp2();
        let everything: Vec<VertexId> = h.vertex_ids().collect();
        assert!(is_convex(&h, &everything).unwrap());
        // two ends of a geodesic of length 2, midpoint excluded:
        // (0,0) and (1,1) in the cube leave out (0,1)
        assert!(!is_convex(&cube32(), &[VertexId(0), VertexId(4)]).unwrap());
        assert!(!is_convex(&h, &[VertexId(0), VertexId(6)]).unwrap());
        let split = build(4, vec![vec![0, 1], vec![2, 3]]);
        assert_eq!(is_convex(&split, &[VertexId(0)]), Err(Disconnected));
    }

    #[test]
    fn closer_set_cases() {
        let h = build(3, vec![vec![0, 1, 2]]);
        assert_eq!(closer_set(&h, VertexId(0), VertexId(1)).unwrap(), vec![VertexId(0)]);
        let t = t1();
        let closer = closer_set(&t, VertexId(1), VertexId(3)).unwrap();
        assert!(closer.contains(&VertexId(1)));
        assert!(!closer.contains(&VertexId(3)));
        // in the cube, everything closer to (0,0) than to (1,0) shares the
        // first coordinate with (0,0)
        assert_eq!(
            closer_set(&cube32(), VertexId(0), VertexId(3)).unwrap(),
            vec![VertexId(0), VertexId(1), VertexId(2)]
        );
    }

    #[test]
    fn isometry_identity_and_counterexample() {
        let h = lp2();
        let identity: Vec<VertexId> = h.vertex_ids().collect();
        assert!(is_isometric_subhypergraph(&h, &h, &identity).unwrap());

        // one hexagon edge of the phenylene is isometric in it
        let hexagon = build(6, vec![(0..6).collect()]);
        let map: Vec<VertexId> = (0..6).map(VertexId).collect();
        assert!(is_isometric_subhypergraph(&h, &hexagon, &map).unwrap());

        // two opposite vertices of a 6-cycle, no edges: infinite vs 3
        let c6 = build(6, vec![vec![0, 1], vec![1, 2], vec![2, 3], vec![3, 4], vec![4, 5], vec![5, 0]]);
        let two = build(2, Vec::<Vec<usize>>::new());
        assert!(!is_isometric_subhypergraph(&c6, &two, &[VertexId(0), VertexId(3)]).unwrap());
    }

    #[test]
    fn isometry_rejects_bad_embeddings() {
        let h = t1();
        let sub = build(2, vec![vec![0, 1]]);
        assert_eq!(
            is_isometric_subhypergraph(&h, &sub, &[VertexId(0), VertexId(0)]),
            Err(NotASubhypergraph::NotInjective {
                a: VertexId(0),
                b: VertexId(1),
                image: VertexId(0)
            })
        );
        // {0,2} is not an edge of T_1
        assert_eq!(
            is_isometric_subhypergraph(&h, &sub, &[VertexId(0), VertexId(2)]),
            Err(NotASubhypergraph::EdgeNotPresent { edge: EdgeId(0) })
        );
    }
}
