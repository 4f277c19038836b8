//! The rotation action of `C_n` on `Z` over the `n`-gon and its quotient.
//!
//! The generator sends coordinate `i` to `i + 1 (mod n)`, acting on `σ` and
//! `ε` together. Orbits are represented by their smallest member in the
//! cell order of [`CubicalCell`]; for vertices that is the lexicographically
//! smallest rotation of the binary string, i.e. the canonical necklace.

use std::collections::{HashMap, HashSet};

use serde::{Deserialize, Serialize};

use crate::complex::{build_real_mac, CubicalCell, CubicalComplex, SimplicialComplex};
use crate::embedding::{hypercube_graph, Graph};
use crate::error::{consistency, domain, Result};
use crate::necklace::{necklace_total, rotate_mask};
use crate::surface::{genus, FaceComplex, Slot, Vertex};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct CyclicAction {
    n: usize,
}

impl CyclicAction {
    pub fn new(n: usize) -> Result<Self> {
        if n == 0 {
            return Err(domain("cyclic group of order 0"));
        }
        Ok(CyclicAction { n })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    /// Apply the generator `k` times.
    pub fn rotate(&self, c: CubicalCell, k: usize) -> CubicalCell {
        CubicalCell::new(
            rotate_mask(c.sigma(), self.n, k),
            rotate_mask(c.eps(), self.n, k),
        )
    }

    /// Distinct images of `c`, in the order `c, g·c, g²·c, ...`.
    pub fn orbit(&self, c: CubicalCell) -> Vec<CubicalCell> {
        let mut out = vec![c];
        let mut cur = self.rotate(c, 1);
        while cur != c {
            out.push(cur);
            cur = self.rotate(cur, 1);
        }
        out
    }

    pub fn canonical(&self, c: CubicalCell) -> CubicalCell {
        (0..self.n).map(|k| self.rotate(c, k)).min().unwrap_or(c)
    }
}

pub fn act_on_cell(a: &CyclicAction, c: CubicalCell, k: usize) -> CubicalCell {
    a.rotate(c, k)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct OrbitCell {
    pub representative: CubicalCell,
    pub orbit_size: usize,
}

/// `Z / C_n` as a cell complex. Every orbit keeps its canonical
/// representative; square boundaries are walks over edge orbits.
#[derive(Clone, Debug)]
pub struct QuotientComplex {
    n: usize,
    vertices: Vec<OrbitCell>,
    edges: Vec<OrbitCell>,
    squares: Vec<OrbitCell>,
    edge_ends: Vec<[usize; 2]>,
    square_walks: Vec<Vec<Slot>>,
}

impl QuotientComplex {
    pub fn n(&self) -> usize {
        self.n
    }

    pub fn vertex_orbits(&self) -> &[OrbitCell] {
        &self.vertices
    }

    pub fn edge_orbits(&self) -> &[OrbitCell] {
        &self.edges
    }

    pub fn square_orbits(&self) -> &[OrbitCell] {
        &self.squares
    }

    /// Vertex orbits at the `x_i = 0` and `x_i = 1` ends of each edge orbit.
    pub fn edge_ends(&self) -> &[[usize; 2]] {
        &self.edge_ends
    }

    pub fn square_walks(&self) -> &[Vec<Slot>] {
        &self.square_walks
    }

    pub fn counts(&self) -> (usize, usize, usize) {
        (self.vertices.len(), self.edges.len(), self.squares.len())
    }

    pub fn euler_characteristic(&self) -> i64 {
        self.vertices.len() as i64 - self.edges.len() as i64 + self.squares.len() as i64
    }

    /// Order of the stabilizer of vertex orbit `v`.
    pub fn isotropy(&self, v: usize) -> usize {
        self.n / self.vertices[v].orbit_size
    }

    /// Canonical necklace string of vertex orbit `v`.
    pub fn vertex_label(&self, v: usize) -> String {
        self.vertices[v].representative.eps_string(self.n)
    }

    pub fn to_face_complex(&self) -> Result<FaceComplex> {
        let vertices = self
            .vertices
            .iter()
            .enumerate()
            .map(|(i, o)| Vertex {
                label: self.vertex_label(i),
                coords: Some(o.representative.eps()),
            })
            .collect();
        FaceComplex::new(
            self.n,
            vertices,
            self.edge_ends.clone(),
            self.square_walks.clone(),
        )
    }

    pub fn to_dump(&self) -> QuotientDump {
        let cell = |o: &OrbitCell| OrbitCellDump {
            dim: o.representative.dim(),
            sigma: o.representative.sigma_coords(),
            eps: o.representative.eps_string(self.n),
            orbit_size: o.orbit_size,
            label: None,
            isotropy: None,
            ends: None,
            boundary: None,
        };
        let mut cells =
            Vec::with_capacity(self.vertices.len() + self.edges.len() + self.squares.len());
        for (i, o) in self.vertices.iter().enumerate() {
            cells.push(OrbitCellDump {
                label: Some(self.vertex_label(i)),
                isotropy: Some(self.isotropy(i)),
                ..cell(o)
            });
        }
        for (o, ends) in self.edges.iter().zip(&self.edge_ends) {
            cells.push(OrbitCellDump {
                ends: Some(*ends),
                ..cell(o)
            });
        }
        for (o, walk) in self.squares.iter().zip(&self.square_walks) {
            cells.push(OrbitCellDump {
                boundary: Some(walk.clone()),
                ..cell(o)
            });
        }
        QuotientDump {
            n: self.n,
            group_order: self.n,
            cells,
        }
    }

    pub fn to_json(&self) -> Result<String> {
        Ok(serde_json::to_string(&self.to_dump())?)
    }
}

/// JSON form of a quotient: the cubical-complex cell schema plus orbit
/// metadata. Indices in `ends` and `boundary` refer to positions among the
/// vertex and edge orbits respectively.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct QuotientDump {
    pub n: usize,
    pub group_order: usize,
    pub cells: Vec<OrbitCellDump>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct OrbitCellDump {
    pub dim: usize,
    pub sigma: Vec<usize>,
    pub eps: String,
    pub orbit_size: usize,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub label: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub isotropy: Option<usize>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub ends: Option<[usize; 2]>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub boundary: Option<Vec<Slot>>,
}

/// Orbit decomposition of `c` under `a`.
pub fn quotient_complex(c: &CubicalComplex, a: &CyclicAction) -> Result<QuotientComplex> {
    match c.polygon_order() {
        Some(n) if n == a.n() => {}
        Some(n) => {
            return Err(domain(format!(
                "action of order {} on Z over the {n}-gon",
                a.n()
            )))
        }
        None => return Err(domain("quotient needs Z over a polygon boundary")),
    }
    let n = a.n();
    let mut by_dim: [Vec<OrbitCell>; 3] = Default::default();
    let mut orbit_index: HashMap<CubicalCell, usize> = HashMap::new();
    for &cell in c.cells() {
        if a.canonical(cell) == cell {
            let list = &mut by_dim[cell.dim()];
            orbit_index.insert(cell, list.len());
            list.push(OrbitCell {
                representative: cell,
                orbit_size: a.orbit(cell).len(),
            });
        }
    }
    let orbit_of = |cell: CubicalCell| orbit_index[&a.canonical(cell)];
    let [vertices, edges, squares] = by_dim;

    let edge_ends = edges
        .iter()
        .map(|o| {
            let mut ends = o.representative.boundary();
            let tail = ends.next().expect("edge has two ends");
            let head = ends.next().expect("edge has two ends");
            [orbit_of(tail), orbit_of(head)]
        })
        .collect();

    // Same corner order as `surface::as_face_complex`: for σ = {i < j} the
    // boundary is [x_i=0, x_i=1, x_j=0, x_j=1].
    let square_walks = squares
        .iter()
        .map(|o| {
            let b: Vec<CubicalCell> = o.representative.boundary().collect();
            vec![
                Slot::new(orbit_of(b[2]), true),
                Slot::new(orbit_of(b[1]), true),
                Slot::new(orbit_of(b[3]), false),
                Slot::new(orbit_of(b[0]), false),
            ]
        })
        .collect();

    let q = QuotientComplex {
        n,
        vertices,
        edges,
        squares,
        edge_ends,
        square_walks,
    };
    // the walks must close up in the quotient too
    q.to_face_complex()?;
    Ok(q)
}

/// Build `Z` over the `n`-gon and quotient it.
pub fn polygon_quotient(n: usize) -> Result<QuotientComplex> {
    let c = build_real_mac(&SimplicialComplex::polygon_boundary(n)?)?;
    quotient_complex(&c, &CyclicAction::new(n)?)
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct BranchPoint {
    pub representative: String,
    /// Minimal period of the representative, equal to the orbit size.
    pub period: usize,
    /// `n / period`.
    pub isotropy: usize,
}

/// Vertex orbits with a nontrivial stabilizer.
pub fn branch_points_of(q: &QuotientComplex) -> Vec<BranchPoint> {
    (0..q.vertices.len())
        .filter(|&v| q.vertices[v].orbit_size < q.n)
        .map(|v| BranchPoint {
            representative: q.vertex_label(v),
            period: q.vertices[v].orbit_size,
            isotropy: q.isotropy(v),
        })
        .collect()
}

pub fn branch_points(n: usize) -> Result<Vec<BranchPoint>> {
    if n < 3 {
        return Err(domain(format!("n must be >= 3, got {n}")));
    }
    Ok(branch_points_of(&polygon_quotient(n)?))
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct RiemannHurwitzReport {
    pub n: usize,
    /// χ of the covering complex, from its cell counts.
    pub chi_cover: i64,
    /// χ of the quotient, from its orbit counts.
    pub chi_quotient: i64,
    /// `Σ (n - n/n_x)` over branch orbits.
    pub branch_sum: i64,
    pub branch_points: usize,
    pub holds: bool,
}

/// `χ(Z) = n·χ(Z/C_n) - Σ_x (n - n/n_x)` with every term measured on the
/// actual complexes.
pub fn riemann_hurwitz_check(n: usize) -> Result<RiemannHurwitzReport> {
    if n < 3 {
        return Err(domain(format!("n must be >= 3, got {n}")));
    }
    let c = build_real_mac(&SimplicialComplex::polygon_boundary(n)?)?;
    let q = quotient_complex(&c, &CyclicAction::new(n)?)?;
    let branch = branch_points_of(&q);
    let ni = n as i64;
    let branch_sum = branch
        .iter()
        .map(|b| ni - ni / b.isotropy as i64)
        .sum::<i64>();
    let chi_cover = c.euler_characteristic();
    let chi_quotient = q.euler_characteristic();
    Ok(RiemannHurwitzReport {
        n,
        chi_cover,
        chi_quotient,
        branch_sum,
        branch_points: branch.len(),
        holds: chi_cover == ni * chi_quotient - branch_sum,
    })
}

/// `1 + 2^{n-3} - N(n)/2` where `N(n)` counts binary necklaces of length `n`.
pub fn quotient_genus_closed_form(n: usize) -> Result<u64> {
    if n < 3 {
        return Err(domain(format!("n must be >= 3, got {n}")));
    }
    if n > 62 {
        return Err(crate::error::Error::Overflow("2^(n-3)"));
    }
    let total = necklace_total(2, n as u64)?;
    if total % 2 != 0 {
        return Err(consistency(format!(
            "odd necklace count {total} for n = {n}"
        )));
    }
    let g = 1i128 + (1i128 << (n - 3)) - i128::from(total / 2);
    u64::try_from(g).map_err(|_| consistency(format!("negative quotient genus {g}")))
}

/// `Q_n / C_n` as a multigraph on binary necklaces, built from the edges of
/// [`hypercube_graph`], together with the matching against the 1-skeleton
/// of the quotient complex.
#[derive(Clone, Debug)]
pub struct QuotientGraph {
    pub graph: Graph,
    /// Canonical edge cell of each graph edge.
    pub edge_keys: Vec<CubicalCell>,
    /// `edge_to_complex[e]` is the quotient-complex edge orbit matching `e`.
    pub edge_to_complex: Vec<usize>,
    /// `vertex_to_complex[v]` is the quotient-complex vertex orbit matching `v`.
    pub vertex_to_complex: Vec<usize>,
}

pub fn quotient_graph(n: usize) -> Result<QuotientGraph> {
    if n < 3 {
        return Err(domain(format!("n must be >= 3, got {n}")));
    }
    let a = CyclicAction::new(n)?;
    let q_n = hypercube_graph(n)?;

    let mut vertex_keys: Vec<u32> = (0..q_n.vertex_count() as u32)
        .filter(|&v| a.canonical(CubicalCell::vertex(v)).eps() == v)
        .collect();
    vertex_keys.sort_unstable_by_key(|&v| CubicalCell::vertex(v));
    let vertex_index: HashMap<u32, usize> = vertex_keys
        .iter()
        .enumerate()
        .map(|(i, &v)| (v, i))
        .collect();

    let mut seen = HashSet::new();
    let mut edge_keys = Vec::new();
    for &(u, v) in q_n.edges() {
        let cell = CubicalCell::new((u ^ v) as u32, u.min(v) as u32);
        let canon = a.canonical(cell);
        if seen.insert(canon) {
            edge_keys.push(canon);
        }
    }
    edge_keys.sort_unstable();
    let endpoints = |e: &CubicalCell| {
        let lo = a.canonical(CubicalCell::vertex(e.eps())).eps();
        let hi = a.canonical(CubicalCell::vertex(e.eps() | e.sigma())).eps();
        (vertex_index[&lo], vertex_index[&hi])
    };
    let edges = edge_keys.iter().map(endpoints).collect();
    let labels = vertex_keys
        .iter()
        .map(|&v| CubicalCell::vertex(v).eps_string(n))
        .collect();
    let graph = Graph::new(vertex_keys.len(), edges)?.with_labels(labels)?;

    let qc = polygon_quotient(n)?;
    let complex_vertex: HashMap<CubicalCell, usize> = qc
        .vertex_orbits()
        .iter()
        .enumerate()
        .map(|(i, o)| (o.representative, i))
        .collect();
    let complex_edge: HashMap<CubicalCell, usize> = qc
        .edge_orbits()
        .iter()
        .enumerate()
        .map(|(i, o)| (o.representative, i))
        .collect();
    let vertex_to_complex = vertex_keys
        .iter()
        .map(|&v| {
            complex_vertex
                .get(&CubicalCell::vertex(v))
                .copied()
                .ok_or_else(|| {
                    consistency(format!(
                        "vertex orbit {v:b} missing from the quotient complex"
                    ))
                })
        })
        .collect::<Result<Vec<_>>>()?;
    let edge_to_complex = edge_keys
        .iter()
        .map(|e| {
            complex_edge.get(e).copied().ok_or_else(|| {
                consistency(format!("edge orbit {e} missing from the quotient complex"))
            })
        })
        .collect::<Result<Vec<_>>>()?;

    if vertex_to_complex.len() != qc.vertex_orbits().len()
        || edge_to_complex.len() != qc.edge_orbits().len()
    {
        return Err(consistency(
            "quotient graph and quotient 1-skeleton differ in size",
        ));
    }
    for (e, &(u, v)) in graph.edges().iter().enumerate() {
        let [cu, cv] = qc.edge_ends()[edge_to_complex[e]];
        if [vertex_to_complex[u], vertex_to_complex[v]] != [cu, cv] {
            return Err(consistency(format!(
                "edge {e} has different endpoints in the quotient complex"
            )));
        }
    }
    Ok(QuotientGraph {
        graph,
        edge_keys,
        edge_to_complex,
        vertex_to_complex,
    })
}

/// Certified genus of `Z / C_n`, which bounds the genus of `Q_n / C_n`
/// from above. Fails if it disagrees with the closed form.
pub fn quotient_genus_upper_bound(n: usize) -> Result<u64> {
    let direct = genus(&polygon_quotient(n)?.to_face_complex()?)?;
    let closed = quotient_genus_closed_form(n)?;
    if direct != closed {
        return Err(consistency(format!(
            "quotient genus {direct} from the complex, {closed} from the closed form"
        )));
    }
    Ok(direct)
}

/// `∂(g·c) = g·∂c` as sets, for every cell and every group element.
pub fn equivariance_holds(c: &CubicalComplex, a: &CyclicAction) -> bool {
    c.cells().iter().all(|&cell| {
        (0..a.n()).all(|k| {
            let lhs: HashSet<CubicalCell> = a.rotate(cell, k).boundary().collect();
            let rhs: HashSet<CubicalCell> = cell.boundary().map(|b| a.rotate(b, k)).collect();
            lhs == rhs && lhs.iter().all(|b| c.contains(b))
        })
    })
}

/// No nonidentity rotation fixes an edge or a square.
pub fn free_on_positive_dims(c: &CubicalComplex, a: &CyclicAction) -> bool {
    c.cells()
        .iter()
        .filter(|cell| cell.dim() > 0)
        .all(|&cell| (1..a.n()).all(|k| a.rotate(cell, k) != cell))
}

/// No rotation maps an edge onto itself with its ends exchanged.
pub fn no_edge_inversion(c: &CubicalComplex, a: &CyclicAction) -> bool {
    c.cells_of_dim(1).iter().all(|&e| {
        let tail = e.eps();
        let head = e.eps() | e.sigma();
        (1..a.n()).all(|k| {
            let img = a.rotate(e, k);
            !(img.sigma() == e.sigma()
                && rotate_mask(tail, a.n(), k) == head
                && rotate_mask(head, a.n(), k) == tail)
        })
    })
}
