//! Constructors for the hypergraph families used throughout the crate:
//! cube-hypergraphs, Cartesian products, linear phenylenes, random
//! hypertrees, and two embedded example datasets.

use rand::Rng;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use thiserror::Error;

use crate::cut::CutPartition;
use crate::hypergraph::{EdgeId, Hypergraph, VertexId};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("bad parameter: {0}")]
pub struct BadParameter(pub String);

/// The hypergraph with `k` vertices and a single edge containing them all.
pub fn single_edge(k: usize) -> Result<Hypergraph, BadParameter> {
    if k < 2 {
        return Err(BadParameter(format!("single edge needs k >= 2, got {k}")));
    }
    Ok(Hypergraph::new(k, vec![(0..k).collect()]).expect("single full edge is valid"))
}

/// Cartesian product: vertices are pairs `(u, u')` with id
/// `u * |V(G)| + u'`; the edges are `{u} × e'` for every vertex of `H` and
/// edge of `G` (listed first, `u` major), then `e × {u'}`.
pub fn cartesian_product(h: &Hypergraph, g: &Hypergraph) -> Hypergraph {
    let gn = g.vertex_count();
    let mut edges: Vec<Vec<usize>> = Vec::with_capacity(
        h.vertex_count() * g.edge_count() + h.edge_count() * g.vertex_count(),
    );
    for u in 0..h.vertex_count() {
        for (_, e) in g.edges() {
            edges.push(e.iter().map(|w| u * gn + w.0).collect());
        }
    }
    for (_, e) in h.edges() {
        for w in 0..gn {
            edges.push(e.iter().map(|u| u.0 * gn + w).collect());
        }
    }
    Hypergraph::new(h.vertex_count() * gn, edges)
        .expect("product of valid hypergraphs is valid")
}

/// The canonical vertex order of a cube-hypergraph: vertex ids are
/// row-major over coordinate tuples, first coordinate most significant.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CubeCoordinates {
    pub k: usize,
    pub n: usize,
    coords: Vec<Vec<u32>>,
}

impl CubeCoordinates {
    pub fn coords(&self, v: VertexId) -> &[u32] {
        &self.coords[v.0]
    }

    pub fn vertex(&self, tuple: &[u32]) -> VertexId {
        debug_assert_eq!(tuple.len(), self.n);
        let mut id = 0usize;
        for &c in tuple {
            debug_assert!((c as usize) < self.k);
            id = id * self.k + c as usize;
        }
        VertexId(id)
    }

    /// Number of coordinates in which two vertices differ.
    pub fn hamming(&self, u: VertexId, v: VertexId) -> u32 {
        self.coords[u.0]
            .iter()
            .zip(&self.coords[v.0])
            .filter(|(a, b)| a != b)
            .count() as u32
    }
}

/// The k-uniform n-cube: vertices are tuples in `{0..k-1}^n`, edges are the
/// k-sets of tuples agreeing everywhere except in one coordinate.
///
/// Edges come grouped by the varying coordinate (coordinate 0 first); this
/// makes each group one Θ-class. In debug builds the edge set is checked
/// against the n-fold Cartesian product of [`single_edge`].
pub fn cube(k: usize, n: usize) -> Result<(Hypergraph, CubeCoordinates), BadParameter> {
    if k < 2 {
        return Err(BadParameter(format!("cube needs k >= 2, got k={k}")));
    }
    if n < 1 {
        return Err(BadParameter(format!("cube needs n >= 1, got n={n}")));
    }
    let vertex_count = k.checked_pow(n as u32).ok_or_else(|| {
        BadParameter(format!("cube({k},{n}) has too many vertices for this machine"))
    })?;
    let mut coords = vec![vec![0u32; n]; vertex_count];
    for (id, tuple) in coords.iter_mut().enumerate() {
        let mut rest = id;
        for pos in (0..n).rev() {
            tuple[pos] = (rest % k) as u32;
            rest /= k;
        }
    }
    let mut edges = Vec::with_capacity(n * vertex_count / k);
    for pos in 0..n {
        let stride = k.pow((n - 1 - pos) as u32);
        for base in 0..vertex_count {
            if !(base / stride).is_multiple_of(k) {
                continue;
            }
            edges.push((0..k).map(|c| base + c * stride).collect::<Vec<_>>());
        }
    }
    let h = Hypergraph::new(vertex_count, edges).expect("cube edges are valid");
    debug_assert_eq!(h.edge_count(), n * k.pow((n - 1) as u32));
    debug_assert!(
        cube_matches_iterated_product(&h, k, n),
        "coordinate-rule cube must equal the iterated Cartesian product"
    );
    Ok((h, CubeCoordinates { k, n, coords }))
}

fn cube_matches_iterated_product(h: &Hypergraph, k: usize, n: usize) -> bool {
    let factor = single_edge(k).expect("k >= 2");
    let mut product = factor.clone();
    for _ in 1..n {
        product = cartesian_product(&product, &factor);
    }
    let mut ours: Vec<Vec<VertexId>> = h.edges().map(|(_, e)| e.to_vec()).collect();
    let mut theirs: Vec<Vec<VertexId>> = product.edges().map(|(_, e)| e.to_vec()).collect();
    ours.sort_unstable();
    theirs.sort_unstable();
    product.vertex_count() == h.vertex_count() && ours == theirs
}

/// The linear phenylene hypergraph on `6n` vertices: `n` hexagon 6-edges
/// `{6i..6i+5}` followed by `n-1` square 4-edges `{6i+4, 6i+5, 6i+6, 6i+7}`,
/// each square overlapping its two neighbouring hexagons in two vertices.
pub fn phenylene(n: usize) -> Result<Hypergraph, BadParameter> {
    if n < 2 {
        return Err(BadParameter(format!("phenylene needs n >= 2, got {n}")));
    }
    let mut edges: Vec<Vec<usize>> = (0..n).map(|i| (6 * i..6 * i + 6).collect()).collect();
    edges.extend((0..n - 1).map(|i| vec![6 * i + 4, 6 * i + 5, 6 * i + 6, 6 * i + 7]));
    Ok(Hypergraph::new(6 * n, edges).expect("phenylene edges are valid"))
}

/// A random hypertree grown edge by edge: the first edge is fresh, and each
/// later edge of size `s` glues one uniformly chosen existing vertex to
/// `s - 1` fresh vertices. Deterministic per seed; the result is always
/// connected, linear, and acyclic.
pub fn random_hypertree(edge_sizes: &[usize], seed: u64) -> Result<Hypergraph, BadParameter> {
    if edge_sizes.is_empty() {
        return Err(BadParameter("hypertree needs at least one edge".into()));
    }
    if let Some(&s) = edge_sizes.iter().find(|&&s| s < 2) {
        return Err(BadParameter(format!("edge sizes must be >= 2, got {s}")));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut vertex_count = edge_sizes[0];
    let mut edges: Vec<Vec<usize>> = vec![(0..edge_sizes[0]).collect()];
    for &s in &edge_sizes[1..] {
        let host = rng.random_range(0..vertex_count);
        let mut edge = vec![host];
        edge.extend(vertex_count..vertex_count + s - 1);
        vertex_count += s - 1;
        edges.push(edge);
    }
    Ok(Hypergraph::new(vertex_count, edges).expect("grown hypertree is valid"))
}

/// A small hypertree on seven vertices with edge sizes 2, 3, 3, 2; its
/// Wiener index is 37.
pub fn example_t1() -> Hypergraph {
    Hypergraph::new(7, vec![vec![0, 1], vec![1, 2, 3], vec![3, 4, 5], vec![3, 6]])
        .expect("example data is valid")
}

/// Version tag of the embedded Clar dataset.
pub const CLAR_DATASET_VERSION: &str = "1";

const CLAR_DATASET: &str = include_str!("generators/clar.dataset");

/// The Clar-structure molecular hypergraph of a fully benzenoid hydrocarbon
/// on 42 atoms — seven aromatic sextets as 6-edges plus nine remaining bonds
/// as 2-edges — together with its canonical partition into seven convex
/// cuts: one central cut (the central sextet and the three bonds pairing
/// outer sextets) and six cuts of an outer sextet with its opposite radial
/// bond.
///
/// The dataset is embedded and re-checked on every load: vertex and edge
/// counts, connectivity, the component profile of every cut, and the Wiener
/// index 2985 all have to match, so any corruption fails fast.
pub fn example_clar() -> (Hypergraph, CutPartition) {
    let mut vertex_count = 0usize;
    let mut edges: Vec<Vec<usize>> = Vec::new();
    let mut cuts: Vec<Vec<EdgeId>> = Vec::new();
    for line in CLAR_DATASET.lines() {
        let line = line.trim();
        if line.is_empty() || line.starts_with('#') {
            continue;
        }
        let mut fields = line.split_whitespace();
        let tag = fields.next().expect("non-empty line");
        let ids: Vec<usize> = fields
            .map(|f| f.parse().expect("embedded dataset: malformed number"))
            .collect();
        match tag {
            "v" => vertex_count = ids[0],
            "e" => edges.push(ids),
            "c" => cuts.push(ids.into_iter().map(EdgeId).collect()),
            other => panic!("embedded dataset: unknown line tag {other:?}"),
        }
    }
    let h = Hypergraph::new(vertex_count, edges).expect("embedded dataset must build");
    let partition = CutPartition::new(cuts);
    assert_clar_integrity(&h, &partition);
    (h, partition)
}

fn assert_clar_integrity(h: &Hypergraph, partition: &CutPartition) {
    assert_eq!(h.vertex_count(), 42, "clar dataset: vertex count");
    assert_eq!(h.edge_count(), 16, "clar dataset: edge count");
    let sixes = h.edges().filter(|(_, e)| e.len() == 6).count();
    let twos = h.edges().filter(|(_, e)| e.len() == 2).count();
    assert_eq!((sixes, twos), (7, 9), "clar dataset: edge size profile");
    assert!(h.is_connected(), "clar dataset: must be connected");
    assert_eq!(partition.cuts.len(), 7, "clar dataset: seven cuts");
    let mut total: u128 = 0;
    for (i, cut) in partition.cuts.iter().enumerate() {
        let mut mask = vec![false; h.edge_count()];
        for &e in cut {
            mask[e.0] = true;
        }
        let mut sizes = h.components_masked(&mask).sizes();
        sizes.sort_unstable();
        let expected: &[usize] = if i == 0 {
            &[7, 7, 7, 7, 7, 7]
        } else {
            &[1, 1, 1, 1, 7, 31]
        };
        assert_eq!(sizes, expected, "clar dataset: components of cut {i}");
        total += crate::cut::cut_contribution(&sizes);
    }
    assert_eq!(total, 2985, "clar dataset: cut totals");
    let brute = crate::metric::wiener_brute(h).expect("clar dataset is connected");
    assert_eq!(brute, 2985, "clar dataset: Wiener index");
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::cut::{validate_cut_partition, wiener_general};
    use crate::metric::{distance, wiener_brute};

    #[test]
    fn single_edge_cases() {
        let h = single_edge(3).unwrap();
        assert_eq!((h.vertex_count(), h.edge_count()), (3, 1));
        let h = single_edge(2).unwrap();
        assert_eq!(h.edge(EdgeId(0)), &[VertexId(0), VertexId(1)]);
        assert!(single_edge(1).is_err());
    }

    #[test]
    fn product_counts_and_identity() {
        let q3 = single_edge(3).unwrap();
        let p = cartesian_product(&q3, &q3);
        assert_eq!((p.vertex_count(), p.edge_count()), (9, 6));

        let point = Hypergraph::new(1, Vec::<Vec<usize>>::new()).unwrap();
        let same = cartesian_product(&q3, &point);
        assert_eq!(same, q3);

        let t = example_t1();
        let p = cartesian_product(&t, &q3);
        assert_eq!(p.vertex_count(), t.vertex_count() * 3);
    }

    #[test]
    fn cube_counts_and_coordinates() {
        let (h, coords) = cube(3, 2).unwrap();
        assert_eq!((h.vertex_count(), h.edge_count()), (9, 6));
        assert_eq!(coords.coords(VertexId(5)), &[1, 2]);
        assert_eq!(coords.vertex(&[1, 2]), VertexId(5));
        // distance equals the number of differing coordinates
        for u in h.vertex_ids() {
            for v in h.vertex_ids() {
                assert_eq!(distance(&h, u, v), Some(coords.hamming(u, v)));
            }
        }
    }

    #[test]
    fn cube_small_cases() {
        let (sq, _) = cube(2, 2).unwrap();
        let mut edge_sets: Vec<Vec<VertexId>> = sq.edges().map(|(_, e)| e.to_vec()).collect();
        edge_sets.sort_unstable();
        let four_cycle: Vec<Vec<VertexId>> = [[0, 2], [1, 3], [0, 1], [2, 3]]
            .iter()
            .map(|e| e.iter().map(|&v| VertexId(v)).collect())
            .collect();
        let mut four_cycle = four_cycle;
        four_cycle.sort_unstable();
        assert_eq!(edge_sets, four_cycle);

        let (line, _) = cube(4, 1).unwrap();
        assert_eq!(line, single_edge(4).unwrap());

        assert!(cube(1, 2).is_err());
        assert!(cube(2, 0).is_err());
    }

    #[test]
    fn phenylene_shape() {
        let h = phenylene(4).unwrap();
        assert_eq!((h.vertex_count(), h.edge_count()), (24, 7));
        let h = phenylene(2).unwrap();
        assert_eq!(h.edge(EdgeId(2)), &[VertexId(4), VertexId(5), VertexId(6), VertexId(7)]);
        assert_eq!(h.uniformity(), None);
        assert!(!h.is_linear());
        assert!(phenylene(1).is_err());
    }

    #[test]
    fn random_hypertree_shape() {
        let h = random_hypertree(&[3, 3, 3], 7).unwrap();
        assert_eq!(h.vertex_count(), 7);
        assert_eq!(h.edge_count(), 3);
        assert!(h.is_connected());
        assert!(h.is_linear());

        let h = random_hypertree(&[4], 0).unwrap();
        assert_eq!(h, single_edge(4).unwrap());

        let h = random_hypertree(&[2, 2, 2, 2], 3).unwrap();
        assert_eq!(h.vertex_count(), 5);
        assert_eq!(h.uniformity(), Some(2));

        assert!(random_hypertree(&[], 0).is_err());
        assert!(random_hypertree(&[3, 1], 0).is_err());
    }

    #[test]
    fn random_hypertree_is_seed_deterministic() {
        let a = random_hypertree(&[3, 4, 2, 3], 99).unwrap();
        let b = random_hypertree(&[3, 4, 2, 3], 99).unwrap();
        assert_eq!(a, b);
        let c = random_hypertree(&[3, 4, 2, 3], 100).unwrap();
        // different seeds usually attach differently; at minimum both valid
        assert_eq!(c.vertex_count(), a.vertex_count());
    }

    #[test]
    fn t1_example() {
        let h = example_t1();
        assert_eq!(wiener_brute(&h).unwrap(), 37);
        assert_eq!(h.uniformity(), None);
    }

    #[test]
    fn clar_example_loads_and_validates() {
        let (h, partition) = example_clar();
        assert_eq!(wiener_brute(&h).unwrap(), 2985);
        let report = validate_cut_partition(&h, &partition).unwrap();
        assert!(report.method_valid());
        assert!(report.unseparated_pairs.is_empty());
        let b = wiener_general(&h, &partition, true).unwrap();
        assert_eq!(b.total, 2985);
        assert_eq!(b.per_cut[0].contribution, 735);
        assert!(b.per_cut[1..].iter().all(|c| c.contribution == 375));
    }
}
