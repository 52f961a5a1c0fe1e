//! Independent oracles for the integration suites. Nothing here reuses the
//! library's BFS or cut machinery: distances come from Floyd–Warshall over
//! the pairs-adjacency relation, path counts from explicit enumeration.

// shared between test binaries; not every binary uses every oracle
#![allow(dead_code)]

use hypercut::{EdgeId, Hypergraph, VertexId};

pub const INF: u32 = u32::MAX;

/// All-pairs distances by Floyd–Warshall: two vertices are adjacent iff some
/// edge contains both.
#[allow(clippy::needless_range_loop)] // textbook triple loop
pub fn oracle_distances(h: &Hypergraph) -> Vec<Vec<u32>> {
    let n = h.vertex_count();
    let mut d = vec![vec![INF; n]; n];
    for (i, row) in d.iter_mut().enumerate() {
        row[i] = 0;
    }
    for (_, edge) in h.edges() {
        for (i, &u) in edge.iter().enumerate() {
            for &v in &edge[i + 1..] {
                d[u.0][v.0] = 1;
                d[v.0][u.0] = 1;
            }
        }
    }
    for k in 0..n {
        for i in 0..n {
            if d[i][k] == INF {
                continue;
            }
            for j in 0..n {
                if d[k][j] == INF {
                    continue;
                }
                let via = d[i][k] + d[k][j];
                if via < d[i][j] {
                    d[i][j] = via;
                }
            }
        }
    }
    d
}

/// Wiener index over the oracle distance matrix; `None` when disconnected.
#[allow(clippy::needless_range_loop)]
pub fn oracle_wiener(h: &Hypergraph) -> Option<u128> {
    let d = oracle_distances(h);
    let n = h.vertex_count();
    let mut total: u128 = 0;
    for u in 0..n {
        for v in (u + 1)..n {
            if d[u][v] == INF {
                return None;
            }
            total += u128::from(d[u][v]);
        }
    }
    Some(total)
}

/// Component label per vertex after dropping the edges in `removed`,
/// via a plain union-find (no library call).
pub fn oracle_component_labels(h: &Hypergraph, removed: &[EdgeId]) -> Vec<usize> {
    let n = h.vertex_count();
    let mut parent: Vec<usize> = (0..n).collect();
    fn find(parent: &mut [usize], mut x: usize) -> usize {
        while parent[x] != x {
            parent[x] = parent[parent[x]];
            x = parent[x];
        }
        x
    }
    for (e, edge) in h.edges() {
        if removed.contains(&e) {
            continue;
        }
        for w in &edge[1..] {
            let (a, b) = (find(&mut parent, edge[0].0), find(&mut parent, w.0));
            parent[a] = b;
        }
    }
    let mut label = vec![usize::MAX; n];
    let mut next = 0;
    for v in 0..n {
        let r = find(&mut parent, v);
        if label[r] == usize::MAX {
            label[r] = next;
            next += 1;
        }
        label[v] = label[r];
    }
    label
}

pub fn oracle_component_sizes(h: &Hypergraph, removed: &[EdgeId]) -> Vec<usize> {
    let labels = oracle_component_labels(h, removed);
    let count = labels.iter().max().map_or(0, |m| m + 1);
    let mut sizes = vec![0usize; count];
    for &l in &labels {
        sizes[l] += 1;
    }
    sizes.sort_unstable();
    sizes
}

/// Exhaustive single-crossing check: enumerates every geodesic (including
/// the choice of edge at each step) between every pair separated by `f` and
/// counts how many `f`-edges each one uses. `None` when `H - f` stays
/// connected and the question does not apply.
pub fn oracle_single_crossing(h: &Hypergraph, f: &[EdgeId]) -> Option<bool> {
    let labels = oracle_component_labels(h, f);
    if labels.iter().max() == Some(&0) {
        return None;
    }
    let d = oracle_distances(h);
    let in_f = |e: EdgeId| f.contains(&e);
    let n = h.vertex_count();
    for u in 0..n {
        for v in (u + 1)..n {
            if labels[u] == labels[v] || d[u][v] == INF {
                continue;
            }
            // DFS over (position, f-edge count) along geodesics from u to v
            let mut stack = vec![(u, 0u32)];
            while let Some((w, count)) = stack.pop() {
                if w == v {
                    if count != 1 {
                        return Some(false);
                    }
                    continue;
                }
                for &e in h.incident_edges(VertexId(w)) {
                    for &x in h.edge(e) {
                        if d[u][x.0] == d[u][w] + 1 && d[u][x.0] + d[x.0][v] == d[u][v] {
                            stack.push((x.0, count + u32::from(in_f(e))));
                        }
                    }
                }
            }
        }
    }
    Some(true)
}

/// Two-coloring test for 2-uniform hypergraphs.
pub fn oracle_bipartite(h: &Hypergraph) -> bool {
    assert_eq!(h.uniformity(), Some(2), "bipartiteness oracle needs a graph");
    let n = h.vertex_count();
    let mut color = vec![None; n];
    for start in 0..n {
        if color[start].is_some() {
            continue;
        }
        color[start] = Some(false);
        let mut stack = vec![start];
        while let Some(v) = stack.pop() {
            let c = color[v].unwrap();
            for &e in h.incident_edges(VertexId(v)) {
                for &w in h.edge(e) {
                    if w.0 == v {
                        continue;
                    }
                    match color[w.0] {
                        None => {
                            color[w.0] = Some(!c);
                            stack.push(w.0);
                        }
                        Some(cw) if cw == c => return false,
                        Some(_) => {}
                    }
                }
            }
        }
    }
    true
}

/// Closed form for the Wiener index of the k-uniform n-cube.
pub fn cube_wiener_closed_form(k: u128, n: u128) -> u128 {
    n * (k * (k - 1) / 2) * k.pow(2 * (n as u32 - 1))
}

/// Closed form for the Wiener index of the linear phenylene chain.
pub fn phenylene_wiener_closed_form(n: u128) -> u128 {
    12 * n.pow(3) + 6 * n.pow(2) - 3 * n
}

/// A deterministic instance pool of small hypergraphs for structural
/// property sweeps: cubes, hypertrees, phenylenes, cycles, paths, and the
/// embedded examples, all at 64 vertices or fewer.
pub fn instance_pool() -> Vec<(String, Hypergraph)> {
    use hypercut::generators;
    let mut pool: Vec<(String, Hypergraph)> = Vec::new();
    for k in 2..=4usize {
        for n in 1..=3usize {
            if k.pow(n as u32) <= 64 {
                pool.push((format!("cube({k},{n})"), generators::cube(k, n).unwrap().0));
            }
        }
    }
    for (i, sizes) in [
        vec![3, 3, 3],
        vec![4, 4, 4, 4],
        vec![2, 2, 2, 2, 2],
        vec![2, 3, 4, 3, 2],
        vec![5, 2, 3],
    ]
    .into_iter()
    .enumerate()
    {
        pool.push((
            format!("hypertree#{i}"),
            generators::random_hypertree(&sizes, 1000 + i as u64).unwrap(),
        ));
    }
    pool.push(("t1".into(), generators::example_t1()));
    pool.push(("clar".into(), generators::example_clar().0));
    for n in 2..=3usize {
        pool.push((format!("phenylene({n})"), generators::phenylene(n).unwrap()));
    }
    for len in [3usize, 4, 5, 6] {
        let edges: Vec<Vec<usize>> = (0..len).map(|i| vec![i, (i + 1) % len]).collect();
        pool.push((
            format!("cycle({len})"),
            Hypergraph::new(len, edges).unwrap(),
        ));
    }
    let path_edges: Vec<Vec<usize>> = (0..5).map(|i| vec![i, i + 1]).collect();
    pool.push(("path(6)".into(), Hypergraph::new(6, path_edges).unwrap()));
    let k4 = vec![
        vec![0, 1],
        vec![0, 2],
        vec![0, 3],
        vec![1, 2],
        vec![1, 3],
        vec![2, 3],
    ];
    pool.push(("k4".into(), Hypergraph::new(4, k4).unwrap()));
    pool
}
