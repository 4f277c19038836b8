//! The hypercube graph `Q_n`, rotation systems and face tracing.
//!
//! Darts are numbered from edges: dart `2e` sits at `edges[e].0` and points
//! along the edge, dart `2e + 1` is its reverse. A rotation system lists,
//! for every vertex, the darts leaving it in cyclic order; tracing follows
//! the successor of the reversed dart.

use std::collections::{BTreeMap, HashSet, VecDeque};
use std::fmt::Write as _;

use num_rational::Ratio;
use serde::{Deserialize, Serialize};

use crate::complex::{
    build_real_mac, mask_to_string, CubicalCell, CubicalComplex, SimplicialComplex, MAX_AMBIENT,
};
use crate::error::{consistency, domain, Error, Result};
use crate::surface::{as_face_complex, genus};
use crate::union_find::UnionFind;

/// Undirected multigraph; loops and parallel edges are allowed.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Graph {
    vertex_count: usize,
    edges: Vec<(usize, usize)>,
    labels: Option<Vec<String>>,
}

impl Graph {
    pub fn new(vertex_count: usize, edges: Vec<(usize, usize)>) -> Result<Self> {
        if let Some(&(u, v)) = edges
            .iter()
            .find(|&&(u, v)| u >= vertex_count || v >= vertex_count)
        {
            return Err(domain(format!("edge ({u}, {v}) outside 0..{vertex_count}")));
        }
        Ok(Graph {
            vertex_count,
            edges,
            labels: None,
        })
    }

    pub fn with_labels(mut self, labels: Vec<String>) -> Result<Self> {
        if labels.len() != self.vertex_count {
            return Err(domain("one label per vertex required"));
        }
        self.labels = Some(labels);
        Ok(self)
    }

    pub fn vertex_count(&self) -> usize {
        self.vertex_count
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    pub fn edges(&self) -> &[(usize, usize)] {
        &self.edges
    }

    pub fn labels(&self) -> Option<&[String]> {
        self.labels.as_deref()
    }

    pub fn loop_count(&self) -> usize {
        self.edges.iter().filter(|(u, v)| u == v).count()
    }

    /// Edges beyond the first between the same unordered pair.
    pub fn parallel_count(&self) -> usize {
        let mut seen = HashSet::new();
        self.edges
            .iter()
            .filter(|&&(u, v)| u != v && !seen.insert((u.min(v), u.max(v))))
            .count()
    }

    pub fn is_simple(&self) -> bool {
        self.loop_count() == 0 && self.parallel_count() == 0
    }

    pub fn is_connected(&self) -> bool {
        let mut uf = UnionFind::new(self.vertex_count);
        for &(u, v) in &self.edges {
            uf.union(u, v);
        }
        uf.components() <= 1
    }

    pub fn adjacency(&self) -> Vec<Vec<usize>> {
        let mut adj = vec![Vec::new(); self.vertex_count];
        for &(u, v) in &self.edges {
            adj[u].push(v);
            if u != v {
                adj[v].push(u);
            }
        }
        adj
    }

    pub fn dart_origin(&self, dart: usize) -> usize {
        let (u, v) = self.edges[dart / 2];
        if dart.is_multiple_of(2) {
            u
        } else {
            v
        }
    }

    pub fn dart_target(&self, dart: usize) -> usize {
        self.dart_origin(dart ^ 1)
    }

    /// Plain text: `"V E"` then one `"u v"` line per edge, 0-indexed.
    pub fn to_edge_list(&self) -> String {
        let mut out = format!("{} {}\n", self.vertex_count, self.edges.len());
        for (u, v) in &self.edges {
            writeln!(out, "{u} {v}").unwrap();
        }
        out
    }

    pub fn from_edge_list(text: &str) -> Result<Self> {
        let mut lines = text.lines().filter(|l| !l.trim().is_empty());
        let header = lines
            .next()
            .ok_or_else(|| Error::Parse("empty edge list".into()))?;
        let (vc, ec) = parse_pair(header)?;
        let edges = lines.map(parse_pair).collect::<Result<Vec<_>>>()?;
        if edges.len() != ec {
            return Err(Error::Parse(format!(
                "header promises {ec} edges, found {}",
                edges.len()
            )));
        }
        Graph::new(vc, edges)
    }
}

fn parse_pair(line: &str) -> Result<(usize, usize)> {
    let mut it = line.split_whitespace().map(str::parse::<usize>);
    match (it.next(), it.next(), it.next()) {
        (Some(Ok(a)), Some(Ok(b)), None) => Ok((a, b)),
        _ => Err(Error::Parse(format!("expected two integers, got {line:?}"))),
    }
}

/// `Q_n`: vertex `v` is the bitmask with coordinate `i` at bit `i - 1`,
/// edges join masks at Hamming distance one. Edges are listed by lower
/// endpoint, then by flipped coordinate.
pub fn hypercube_graph(n: usize) -> Result<Graph> {
    if n < 1 {
        return Err(domain("hypercube needs n >= 1"));
    }
    if n > MAX_AMBIENT {
        return Err(domain(format!("n = {n} exceeds {MAX_AMBIENT}")));
    }
    let count = 1usize << n;
    let mut edges = Vec::with_capacity(n * count / 2);
    for v in 0..count {
        for i in 0..n {
            if v >> i & 1 == 0 {
                edges.push((v, v | 1 << i));
            }
        }
    }
    let labels = (0..count).map(|v| mask_to_string(v as u32, n)).collect();
    Graph::new(count, edges)?.with_labels(labels)
}

/// `table[v * n + i]` is the index of the `Q_n` edge leaving `v` along
/// coordinate bit `i`.
fn hypercube_edge_table(q: &Graph, n: usize) -> Vec<usize> {
    let mut table = vec![0; q.vertex_count() * n];
    for (e, &(u, v)) in q.edges().iter().enumerate() {
        let i = (u ^ v).trailing_zeros() as usize;
        table[u * n + i] = e;
        table[v * n + i] = e;
    }
    table
}

/// The graph formed by the vertices and edges of `c`, in cell order.
pub fn one_skeleton(c: &CubicalComplex) -> Graph {
    let e0 = c.dim_range(1);
    let edges = e0
        .map(|idx| {
            let b = c.boundary_of(idx);
            (b[0], b[1])
        })
        .collect();
    let labels = c
        .cells_of_dim(0)
        .iter()
        .map(|v| mask_to_string(v.eps(), c.n()))
        .collect();
    Graph {
        vertex_count: c.count(0),
        edges,
        labels: Some(labels),
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RotationSystem {
    order: Vec<Vec<usize>>,
}

impl RotationSystem {
    /// Checks that every dart of `g` appears exactly once, at its origin.
    pub fn new(g: &Graph, order: Vec<Vec<usize>>) -> Result<Self> {
        if order.len() != g.vertex_count() {
            return Err(domain("one cyclic order per vertex required"));
        }
        let mut seen = vec![false; 2 * g.edge_count()];
        for (v, darts) in order.iter().enumerate() {
            for &d in darts {
                if d >= seen.len() {
                    return Err(domain(format!("dart {d} does not exist")));
                }
                if g.dart_origin(d) != v {
                    return Err(domain(format!(
                        "dart {d} listed at {v} but leaves {}",
                        g.dart_origin(d)
                    )));
                }
                if std::mem::replace(&mut seen[d], true) {
                    return Err(domain(format!("dart {d} listed twice")));
                }
            }
        }
        if let Some(d) = seen.iter().position(|&s| !s) {
            return Err(domain(format!("dart {d} missing from the rotation")));
        }
        Ok(RotationSystem { order })
    }

    pub fn order(&self) -> &[Vec<usize>] {
        &self.order
    }

    /// Reverse every cyclic order (the mirror embedding).
    pub fn reversed(&self) -> Self {
        RotationSystem {
            order: self
                .order
                .iter()
                .map(|o| o.iter().rev().copied().collect())
                .collect(),
        }
    }

    fn successor_table(&self, dart_count: usize) -> Vec<usize> {
        let mut next = vec![0; dart_count];
        for darts in &self.order {
            for (k, &d) in darts.iter().enumerate() {
                next[d] = darts[(k + 1) % darts.len()];
            }
        }
        next
    }

    /// `{"<vertex>": [darts...]}`.
    pub fn to_json(&self) -> Result<String> {
        let map: BTreeMap<usize, &Vec<usize>> = self.order.iter().enumerate().collect();
        Ok(serde_json::to_string(&map)?)
    }

    pub fn from_json(g: &Graph, text: &str) -> Result<Self> {
        let map: BTreeMap<usize, Vec<usize>> = serde_json::from_str(text)?;
        let mut order = vec![Vec::new(); g.vertex_count()];
        for (v, darts) in map {
            *order
                .get_mut(v)
                .ok_or_else(|| Error::Parse(format!("vertex {v} out of range")))? = darts;
        }
        Self::new(g, order)
    }
}

/// Canonical rotation for `Z` over the boundary of an `n`-gon, expressed
/// on the darts of [`hypercube_graph`]`(n)`: coordinate directions in
/// increasing order at even-weight vertices and decreasing order at
/// odd-weight ones, so consecutive directions `i, i+1 (mod n)` always
/// cobound a square.
pub fn rotation_from_complex(c: &CubicalComplex) -> Result<RotationSystem> {
    let n = c
        .polygon_order()
        .ok_or_else(|| domain("complex is not Z over a polygon boundary"))?;
    let g = hypercube_graph(n)?;
    let table = hypercube_edge_table(&g, n);
    let order = (0..g.vertex_count())
        .map(|v| {
            let dart = |i: usize| 2 * table[v * n + i] + (v >> i & 1);
            if (v as u32).count_ones().is_multiple_of(2) {
                (0..n).map(dart).collect()
            } else {
                (0..n).rev().map(dart).collect()
            }
        })
        .collect();
    RotationSystem::new(&g, order)
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct FaceTrace {
    /// Each face as the cyclic sequence of darts along its boundary.
    pub walks: Vec<Vec<usize>>,
    pub vertices: usize,
    pub edges: usize,
    pub genus: u64,
}

impl FaceTrace {
    pub fn face_count(&self) -> usize {
        self.walks.len()
    }
}

/// Faces of the embedding given by `r`, and the genus from Euler's formula.
pub fn trace_faces(g: &Graph, r: &RotationSystem) -> Result<FaceTrace> {
    if !g.is_connected() {
        return Err(domain("face tracing needs a connected graph"));
    }
    let r = RotationSystem::new(g, r.order.clone())?;
    let darts = 2 * g.edge_count();
    let next = r.successor_table(darts);
    let mut used = vec![false; darts];
    let mut walks = Vec::new();
    for start in 0..darts {
        if used[start] {
            continue;
        }
        let mut walk = Vec::new();
        let mut d = start;
        while !used[d] {
            used[d] = true;
            walk.push(d);
            d = next[d ^ 1];
        }
        if d != start {
            return Err(consistency("face tracing did not close up"));
        }
        walks.push(walk);
    }
    let twice_genus = 2 - g.vertex_count() as i64 + g.edge_count() as i64 - walks.len() as i64;
    if twice_genus < 0 || twice_genus % 2 != 0 {
        return Err(consistency(format!(
            "Euler's formula gives 2g = {twice_genus}"
        )));
    }
    Ok(FaceTrace {
        walks,
        vertices: g.vertex_count(),
        edges: g.edge_count(),
        genus: (twice_genus / 2) as u64,
    })
}

/// Whether the canonical rotation of `c` traces faces that are exactly the
/// squares of `c`, each bounded by four edges.
pub fn verify_two_cell(c: &CubicalComplex) -> Result<bool> {
    let r = rotation_from_complex(c)?;
    let g = hypercube_graph(c.n())?;
    verify_two_cell_with(c, &g, &r)
}

/// As [`verify_two_cell`] but for an arbitrary rotation on `Q_n`.
pub fn verify_two_cell_with(c: &CubicalComplex, g: &Graph, r: &RotationSystem) -> Result<bool> {
    let trace = trace_faces(g, r)?;
    if trace.face_count() != c.count(2) {
        return Ok(false);
    }
    let mut matched = HashSet::new();
    for walk in &trace.walks {
        if walk.len() != 4 {
            return Ok(false);
        }
        let corners: Vec<u32> = walk.iter().map(|&d| g.dart_origin(d) as u32).collect();
        let sigma = corners.iter().fold(0, |acc, &v| acc | (v ^ corners[0]));
        let eps = corners[0] & !sigma;
        let square = CubicalCell::new(sigma, eps);
        let spans_square = square.dim() == 2
            && corners.iter().all(|&v| v & !sigma == eps)
            && corners.iter().collect::<HashSet<_>>().len() == 4;
        if !spans_square || !c.contains(&square) || !matched.insert(square) {
            return Ok(false);
        }
    }
    Ok(matched.len() == c.count(2))
}

/// Shortest cycle length of a simple graph, `None` for forests.
pub fn girth(g: &Graph) -> Option<usize> {
    let adj = g.adjacency();
    let mut best: Option<usize> = None;
    let mut dist = vec![usize::MAX; g.vertex_count()];
    let mut parent = vec![usize::MAX; g.vertex_count()];
    for root in 0..g.vertex_count() {
        dist.fill(usize::MAX);
        dist[root] = 0;
        parent[root] = usize::MAX;
        let mut queue = VecDeque::from([root]);
        while let Some(u) = queue.pop_front() {
            if best.is_some_and(|b| 2 * dist[u] >= b) {
                break;
            }
            for &w in &adj[u] {
                if dist[w] == usize::MAX {
                    dist[w] = dist[u] + 1;
                    parent[w] = u;
                    queue.push_back(w);
                } else if parent[u] != w {
                    let len = dist[u] + dist[w] + 1;
                    best = Some(best.map_or(len, |b| b.min(len)));
                }
            }
        }
    }
    best
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct GirthBound {
    pub girth: Option<usize>,
    pub acyclic: bool,
    /// `1 - V/2 + E(g-2)/(2g)` as an exact fraction `(numer, denom)`.
    pub exact: (i64, i64),
    /// Smallest integer at least `exact`.
    pub bound: i64,
}

/// Lower bound on the genus from Euler's formula and the fact that every
/// face of an embedding is bounded by at least `girth` edges.
pub fn girth_lower_bound(g: &Graph) -> Result<GirthBound> {
    if !g.is_simple() {
        return Err(domain("girth bound needs a simple graph"));
    }
    if !g.is_connected() {
        return Err(domain("girth bound needs a connected graph"));
    }
    let Some(gi) = girth(g) else {
        return Ok(GirthBound {
            girth: None,
            acyclic: true,
            exact: (0, 1),
            bound: 0,
        });
    };
    let v = g.vertex_count() as i64;
    let e = g.edge_count() as i64;
    let gg = gi as i64;
    let r = Ratio::from_integer(1) - Ratio::new(v, 2) + Ratio::new(e * (gg - 2), 2 * gg);
    Ok(GirthBound {
        girth: Some(gi),
        acyclic: false,
        exact: (*r.numer(), *r.denom()),
        bound: r.ceil().to_integer(),
    })
}

/// `1 + (n - 4)·2^{n-3}`.
pub fn genus_closed_form(n: usize) -> Result<u64> {
    if n < 3 {
        return Err(domain(format!("closed form holds for n >= 3, got {n}")));
    }
    if n > 60 {
        return Err(Error::Overflow("1 + (n-4)·2^(n-3)"));
    }
    let g = 1i128 + (n as i128 - 4) * (1i128 << (n - 3));
    Ok(g as u64)
}

/// Genus of `Z` over the `n`-gon, certified on the built complex.
pub fn polygon_surface_genus(n: usize) -> Result<u64> {
    let c = build_real_mac(&SimplicialComplex::polygon_boundary(n)?)?;
    genus(&as_face_complex(&c)?)
}

/// `g(n+1) = 2·g(n) + 2^{n-2} - 1` with both genera certified directly.
pub fn surgery_recurrence_check(n: usize) -> Result<bool> {
    if n < 3 {
        return Err(domain(format!("recurrence starts at n = 3, got {n}")));
    }
    let g_n = polygon_surface_genus(n)? as i128;
    let g_next = polygon_surface_genus(n + 1)? as i128;
    Ok(g_next == 2 * g_n + (1i128 << (n - 2)) - 1)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn polygon_mac(n: usize) -> CubicalComplex {
        build_real_mac(&SimplicialComplex::polygon_boundary(n).unwrap()).unwrap()
    }

    #[test]
    fn hypercube_sizes() {
        let q1 = hypercube_graph(1).unwrap();
        assert_eq!((q1.vertex_count(), q1.edge_count()), (2, 1));
        let q3 = hypercube_graph(3).unwrap();
        assert_eq!((q3.vertex_count(), q3.edge_count()), (8, 12));
        let q6 = hypercube_graph(6).unwrap();
        assert_eq!((q6.vertex_count(), q6.edge_count()), (64, 192));
        assert!(q6.is_simple() && q6.is_connected());
        assert!(hypercube_graph(0).is_err());
    }

    #[test]
    fn hypercube_edges_are_hamming_one() {
        let q = hypercube_graph(5).unwrap();
        let brute: HashSet<(usize, usize)> = (0..32usize)
            .flat_map(|u| (0..32usize).map(move |v| (u, v)))
            .filter(|&(u, v)| u < v && (u ^ v).count_ones() == 1)
            .collect();
        let got: HashSet<(usize, usize)> = q.edges().iter().copied().collect();
        assert_eq!(got, brute);
    }

    #[test]
    fn edge_table_covers_every_direction() {
        for n in 1..=6 {
            let q = hypercube_graph(n).unwrap();
            let table = hypercube_edge_table(&q, n);
            for v in 0..q.vertex_count() {
                for i in 0..n {
                    let (a, b) = q.edges()[table[v * n + i]];
                    assert_eq!((a ^ b, a.min(b)), (1 << i, v & !(1 << i)));
                }
            }
        }
    }

    #[test]
    fn canonical_rotation_cycles_through_coordinates() {
        let c = polygon_mac(3);
        let r = rotation_from_complex(&c).unwrap();
        let q = hypercube_graph(3).unwrap();
        for (v, darts) in r.order().iter().enumerate() {
            let dirs: Vec<usize> = darts
                .iter()
                .map(|&d| (q.dart_origin(d) ^ q.dart_target(d)).trailing_zeros() as usize + 1)
                .collect();
            // (1,2,3) up to orientation
            if (v as u32).count_ones().is_multiple_of(2) {
                assert_eq!(dirs, [1, 2, 3]);
            } else {
                assert_eq!(dirs, [3, 2, 1]);
            }
        }
    }

    #[test]
    fn tracing_counts() {
        for (n, faces, g) in [(3, 6, 0), (4, 16, 1), (6, 96, 17)] {
            let c = polygon_mac(n);
            let r = rotation_from_complex(&c).unwrap();
            let t = trace_faces(&hypercube_graph(n).unwrap(), &r).unwrap();
            assert_eq!(t.face_count(), faces, "n = {n}");
            assert_eq!(t.genus, g, "n = {n}");
            assert!(t.walks.iter().all(|w| w.len() == 4));
        }
    }

    #[test]
    fn rotation_needs_polygon_complex() {
        let c = build_real_mac(&SimplicialComplex::discrete_points(4).unwrap()).unwrap();
        assert!(matches!(rotation_from_complex(&c), Err(Error::Domain(_))));
    }

    #[test]
    fn two_cell_embedding_holds() {
        for n in 3..=8 {
            assert!(verify_two_cell(&polygon_mac(n)).unwrap(), "n = {n}");
        }
    }

    #[test]
    fn perturbed_rotation_loses_the_bijection() {
        let c = polygon_mac(4);
        let q = hypercube_graph(4).unwrap();
        let r = rotation_from_complex(&c).unwrap();
        let mut order = r.order().to_vec();
        order[0].swap(1, 2); // (1,2,3,4) -> (1,3,2,4) at vertex 0000
        let perturbed = RotationSystem::new(&q, order).unwrap();
        let t = trace_faces(&q, &perturbed).unwrap();
        assert_ne!(t.face_count(), 16);
        assert!(!verify_two_cell_with(&c, &q, &perturbed).unwrap());
    }

    #[test]
    fn mirror_rotation_still_two_cell() {
        let c = polygon_mac(3);
        let q = hypercube_graph(3).unwrap();
        let r = rotation_from_complex(&c).unwrap().reversed();
        assert!(verify_two_cell_with(&c, &q, &r).unwrap());
    }

    #[test]
    fn rotation_validation() {
        let q = hypercube_graph(2).unwrap();
        assert!(RotationSystem::new(&q, vec![vec![0, 2], vec![1], vec![3], vec![]]).is_err());
        assert!(RotationSystem::new(&q, vec![vec![0, 0], vec![], vec![], vec![]]).is_err());
    }

    #[test]
    fn disconnected_tracing_rejected() {
        let g = Graph::new(4, vec![(0, 1), (2, 3)]).unwrap();
        let r = RotationSystem::new(&g, vec![vec![0], vec![1], vec![2], vec![3]]).unwrap();
        assert!(matches!(trace_faces(&g, &r), Err(Error::Domain(_))));
    }

    #[test]
    fn girth_values() {
        assert_eq!(girth(&hypercube_graph(4).unwrap()), Some(4));
        assert_eq!(girth(&hypercube_graph(1).unwrap()), None);
        let triangle = Graph::new(3, vec![(0, 1), (1, 2), (2, 0)]).unwrap();
        assert_eq!(girth(&triangle), Some(3));
        let pentagon = Graph::new(5, (0..5).map(|i| (i, (i + 1) % 5)).collect()).unwrap();
        assert_eq!(girth(&pentagon), Some(5));
    }

    #[test]
    fn girth_bounds_for_hypercubes() {
        assert_eq!(
            girth_lower_bound(&hypercube_graph(6).unwrap())
                .unwrap()
                .bound,
            17
        );
        assert_eq!(
            girth_lower_bound(&hypercube_graph(3).unwrap())
                .unwrap()
                .bound,
            0
        );
        let b4 = girth_lower_bound(&hypercube_graph(4).unwrap()).unwrap();
        assert_eq!((b4.bound, b4.exact, b4.girth), (1, (1, 1), Some(4)));
    }

    #[test]
    fn girth_bound_edge_cases() {
        let path = Graph::new(3, vec![(0, 1), (1, 2)]).unwrap();
        let b = girth_lower_bound(&path).unwrap();
        assert!(b.acyclic);
        assert_eq!(b.bound, 0);
        // K5: 1 - 5/2 + 10/6 = 1/6, so genus >= 1
        let k5 = Graph::new(
            5,
            (0..5)
                .flat_map(|i| (i + 1..5).map(move |j| (i, j)))
                .collect(),
        )
        .unwrap();
        let b = girth_lower_bound(&k5).unwrap();
        assert_eq!((b.exact, b.bound), ((1, 6), 1));
        let multi = Graph::new(2, vec![(0, 1), (0, 1)]).unwrap();
        assert!(girth_lower_bound(&multi).is_err());
    }

    #[test]
    fn closed_form_values() {
        assert_eq!(genus_closed_form(3).unwrap(), 0);
        assert_eq!(genus_closed_form(6).unwrap(), 17);
        assert_eq!(genus_closed_form(12).unwrap(), 4097);
        assert!(matches!(genus_closed_form(2), Err(Error::Domain(_))));
    }

    #[test]
    fn recurrence_small() {
        assert!(surgery_recurrence_check(3).unwrap());
        assert!(surgery_recurrence_check(5).unwrap());
        assert!(surgery_recurrence_check(2).is_err());
    }

    #[test]
    fn discrete_points_skeleton_is_hypercube() {
        for n in 1..=6 {
            let c = build_real_mac(&SimplicialComplex::discrete_points(n).unwrap()).unwrap();
            assert_eq!(c.count(2), 0);
            let sk = one_skeleton(&c);
            let q = hypercube_graph(n).unwrap();
            let to_mask = |i: usize| c.cell(i).eps() as usize;
            let mapped: HashSet<(usize, usize)> = sk
                .edges()
                .iter()
                .map(|&(u, v)| (to_mask(u).min(to_mask(v)), to_mask(u).max(to_mask(v))))
                .collect();
            let expected: HashSet<(usize, usize)> = q.edges().iter().copied().collect();
            assert_eq!(sk.vertex_count(), q.vertex_count());
            assert_eq!(mapped, expected);
        }
    }

    #[test]
    fn edge_list_round_trip() {
        let q = hypercube_graph(5).unwrap();
        let text = q.to_edge_list();
        assert!(text.starts_with("32 80\n"));
        assert_eq!(text.lines().count(), 81);
        let back = Graph::from_edge_list(&text).unwrap();
        assert_eq!(back.edges(), q.edges());
        assert!(Graph::from_edge_list("2 2\n0 1\n").is_err());
        assert!(Graph::from_edge_list("2 1\n0 5\n").is_err());
    }

    #[test]
    fn rotation_json_round_trip() {
        let c = polygon_mac(4);
        let q = hypercube_graph(4).unwrap();
        let r = rotation_from_complex(&c).unwrap();
        let text = r.to_json().unwrap();
        assert!(text.starts_with(r#"{"0":["#));
        assert_eq!(RotationSystem::from_json(&q, &text).unwrap(), r);
    }
}
