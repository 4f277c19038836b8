//! Combinatorial surface recognition for 2-dimensional cell complexes.
//!
//! A [`FaceComplex`] is a graph together with 2-cells glued along closed
//! walks. Walks may use an edge more than once, which is what quotient
//! complexes produce. A complex is certified as a closed surface when every
//! edge has exactly two walk slots and the link of every vertex is a single
//! cycle; orientability is decided by propagating face orientations across
//! shared edges.

mod off;

pub use off::{write_off, Projection};

use std::collections::VecDeque;

use serde::{Deserialize, Serialize};

use crate::complex::{mask_to_string, CubicalComplex};
use crate::error::{consistency, Error, Result};
use crate::union_find::UnionFind;

/// One traversal of an edge inside a face walk.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Slot {
    pub edge: usize,
    /// `true` when the walk runs from `edges[edge][0]` to `edges[edge][1]`.
    pub forward: bool,
}

impl Slot {
    pub fn new(edge: usize, forward: bool) -> Self {
        Slot { edge, forward }
    }

    pub fn reversed(self) -> Self {
        Slot {
            edge: self.edge,
            forward: !self.forward,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Vertex {
    pub label: String,
    /// Position in `{0,1}^n`, used only for mesh export.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub coords: Option<u32>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct FaceComplex {
    /// Number of coordinates `coords` are expressed in (0 if none).
    #[serde(default)]
    pub ambient: usize,
    pub vertices: Vec<Vertex>,
    pub edges: Vec<[usize; 2]>,
    pub faces: Vec<Vec<Slot>>,
}

impl FaceComplex {
    pub fn new(
        ambient: usize,
        vertices: Vec<Vertex>,
        edges: Vec<[usize; 2]>,
        faces: Vec<Vec<Slot>>,
    ) -> Result<Self> {
        let fc = FaceComplex {
            ambient,
            vertices,
            edges,
            faces,
        };
        fc.validate()?;
        Ok(fc)
    }

    /// Unlabelled complex from raw counts, mostly for hand-built fixtures.
    pub fn from_parts(
        vertex_count: usize,
        edges: Vec<[usize; 2]>,
        faces: Vec<Vec<Slot>>,
    ) -> Result<Self> {
        let vertices = (0..vertex_count)
            .map(|i| Vertex {
                label: i.to_string(),
                coords: None,
            })
            .collect();
        Self::new(0, vertices, edges, faces)
    }

    pub fn validate(&self) -> Result<()> {
        let nv = self.vertices.len();
        for (e, &[a, b]) in self.edges.iter().enumerate() {
            if a >= nv || b >= nv {
                return Err(Error::Parse(format!("edge {e} has endpoint out of range")));
            }
        }
        for (f, walk) in self.faces.iter().enumerate() {
            if walk.is_empty() {
                return Err(Error::Parse(format!("face {f} has an empty walk")));
            }
            if let Some(s) = walk.iter().find(|s| s.edge >= self.edges.len()) {
                return Err(Error::Parse(format!(
                    "face {f} references missing edge {}",
                    s.edge
                )));
            }
            for k in 0..walk.len() {
                let next = walk[(k + 1) % walk.len()];
                if self.head(walk[k]) != self.tail(next) {
                    return Err(Error::Parse(format!(
                        "face {f} is not vertex-continuous at position {k}"
                    )));
                }
            }
        }
        Ok(())
    }

    pub fn tail(&self, s: Slot) -> usize {
        self.edges[s.edge][usize::from(!s.forward)]
    }

    pub fn head(&self, s: Slot) -> usize {
        self.edges[s.edge][usize::from(s.forward)]
    }

    pub fn vertex_count(&self) -> usize {
        self.vertices.len()
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    pub fn face_count(&self) -> usize {
        self.faces.len()
    }

    pub fn euler_characteristic(&self) -> i64 {
        self.vertices.len() as i64 - self.edges.len() as i64 + self.faces.len() as i64
    }

    /// For each edge, the `(face, position)` pairs of its slots.
    pub fn edge_slots(&self) -> Vec<Vec<(usize, usize)>> {
        let mut slots = vec![Vec::new(); self.edges.len()];
        for (f, walk) in self.faces.iter().enumerate() {
            for (k, s) in walk.iter().enumerate() {
                slots[s.edge].push((f, k));
            }
        }
        slots
    }

    pub fn to_json(&self) -> Result<String> {
        Ok(serde_json::to_string(self)?)
    }

    pub fn from_json(text: &str) -> Result<Self> {
        let fc: FaceComplex = serde_json::from_str(text)?;
        fc.validate()?;
        Ok(fc)
    }
}

/// Why a complex failed one of the surface conditions.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum Violation {
    /// An edge with a slot count other than two.
    EdgeDegree {
        edge: usize,
        slots: usize,
    },
    /// A vertex whose link splits into `cycles` pieces (0: isolated vertex).
    VertexLink {
        vertex: usize,
        cycles: usize,
    },
    Disconnected {
        components: usize,
    },
    /// Orientation propagation reached `edge` from both sides with
    /// incompatible directions. `faces` is the closed chain of faces, along
    /// tree edges, whose orientations are forced into contradiction.
    OrientationConflict {
        edge: usize,
        faces: Vec<usize>,
    },
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Witness {
    /// Per face: `true` keeps the walk direction, `false` reverses it.
    Orientation(Vec<bool>),
    Violations(Vec<Violation>),
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SurfaceCertificate {
    pub closed: bool,
    pub connected: bool,
    pub orientable: bool,
    pub euler_characteristic: i64,
    pub genus: Option<u64>,
    pub witness: Witness,
}

impl SurfaceCertificate {
    pub fn is_surface(&self) -> bool {
        self.closed && self.connected && self.orientable
    }

    pub fn violations(&self) -> &[Violation] {
        match &self.witness {
            Witness::Violations(v) => v,
            Witness::Orientation(_) => &[],
        }
    }

    /// Re-check the certificate against `f` without trusting any of its
    /// boolean fields.
    pub fn recheck(&self, f: &FaceComplex) -> bool {
        match (&self.witness, self.genus) {
            (Witness::Orientation(o), Some(g)) => {
                verify_orientation(f, o)
                    && f.euler_characteristic() == self.euler_characteristic
                    && self.euler_characteristic == 2 - 2 * g as i64
            }
            (Witness::Orientation(o), None) => verify_orientation(f, o),
            (Witness::Violations(v), _) => !v.is_empty() || !self.is_surface(),
        }
    }
}

/// Turn the 2-skeleton of a cubical complex into a face complex. Vertex,
/// edge and face indices follow the complex's cell order within each
/// dimension.
pub fn as_face_complex(c: &CubicalComplex) -> Result<FaceComplex> {
    if c.top_dim() > 2 {
        return Err(Error::UnsupportedDimension(c.top_dim()));
    }
    let n = c.n();
    let vertices = c
        .cells_of_dim(0)
        .iter()
        .map(|v| Vertex {
            label: mask_to_string(v.eps(), n),
            coords: Some(v.eps()),
        })
        .collect();
    let e0 = c.dim_range(1).start;
    let edges = c
        .dim_range(1)
        .map(|idx| {
            let b = c.boundary_of(idx);
            [b[0], b[1]]
        })
        .collect();
    // Boundary order for σ = {i < j}: [x_i=0, x_i=1, x_j=0, x_j=1].
    // Walk (0,0) → (1,0) → (1,1) → (0,1) in (x_i, x_j).
    let faces = c
        .dim_range(2)
        .map(|idx| {
            let b = c.boundary_of(idx);
            vec![
                Slot::new(b[2] - e0, true),
                Slot::new(b[1] - e0, true),
                Slot::new(b[3] - e0, false),
                Slot::new(b[0] - e0, false),
            ]
        })
        .collect();
    FaceComplex::new(n, vertices, edges, faces)
}

/// Edge-degree and vertex-link conditions plus connectivity. The
/// orientability field is left `false` and the witness lists violations
/// (empty when the complex is a closed connected surface).
pub fn check_closed_surface(f: &FaceComplex) -> SurfaceCertificate {
    let mut violations = Vec::new();
    let slots = f.edge_slots();
    for (e, s) in slots.iter().enumerate() {
        if s.len() != 2 {
            violations.push(Violation::EdgeDegree {
                edge: e,
                slots: s.len(),
            });
        }
    }

    // Link graph: nodes are edge-ends (2e at the tail, 2e+1 at the head),
    // and each corner of a walk joins the end it arrives on to the end it
    // leaves from.
    let mut link = UnionFind::new(2 * f.edges.len());
    for walk in &f.faces {
        for k in 0..walk.len() {
            let arrive = walk[k];
            let leave = walk[(k + 1) % walk.len()];
            let arrive_end = 2 * arrive.edge + usize::from(arrive.forward);
            let leave_end = 2 * leave.edge + usize::from(!leave.forward);
            link.union(arrive_end, leave_end);
        }
    }
    let mut ends_at: Vec<Vec<usize>> = vec![Vec::new(); f.vertices.len()];
    for (e, &[a, b]) in f.edges.iter().enumerate() {
        ends_at[a].push(2 * e);
        ends_at[b].push(2 * e + 1);
    }
    for (v, ends) in ends_at.iter().enumerate() {
        let mut roots: Vec<usize> = ends.iter().map(|&x| link.find(x)).collect();
        roots.sort_unstable();
        roots.dedup();
        if roots.len() != 1 {
            violations.push(Violation::VertexLink {
                vertex: v,
                cycles: roots.len(),
            });
        }
    }
    let closed = violations.is_empty();

    let nv = f.vertices.len();
    let ne = f.edges.len();
    let mut uf = UnionFind::new(nv + ne + f.faces.len());
    for (e, &[a, b]) in f.edges.iter().enumerate() {
        uf.union(nv + e, a);
        uf.union(nv + e, b);
    }
    for (fi, walk) in f.faces.iter().enumerate() {
        for s in walk {
            uf.union(nv + ne + fi, nv + s.edge);
        }
    }
    let connected = uf.components() == 1;
    if !connected {
        violations.push(Violation::Disconnected {
            components: uf.components(),
        });
    }

    SurfaceCertificate {
        closed,
        connected,
        orientable: false,
        euler_characteristic: f.euler_characteristic(),
        genus: None,
        witness: Witness::Violations(violations),
    }
}

/// Orientation propagation on a closed complex. Returns the full
/// certificate, with the genus filled in when the complex is also connected.
pub fn check_orientable(f: &FaceComplex) -> Result<SurfaceCertificate> {
    let mut cert = check_closed_surface(f);
    if !cert.closed {
        return Err(Error::Precondition(format!(
            "orientability needs a closed complex; found {} violation(s)",
            cert.violations().len()
        )));
    }
    match propagate_orientation(f) {
        Ok(orientation) => {
            cert.orientable = true;
            if cert.connected {
                cert.genus = Some(genus_from_chi(cert.euler_characteristic)?);
                cert.witness = Witness::Orientation(orientation);
            } else {
                // keep the disconnection report, the orientation is still valid
                cert.witness = Witness::Orientation(orientation);
            }
        }
        Err(conflict) => {
            let mut v = cert.violations().to_vec();
            v.push(conflict);
            cert.witness = Witness::Violations(v);
        }
    }
    Ok(cert)
}

/// Every check at once; never fails, everything is reported in the
/// certificate.
pub fn certify(f: &FaceComplex) -> SurfaceCertificate {
    match check_orientable(f) {
        Ok(cert) => cert,
        Err(_) => check_closed_surface(f),
    }
}

/// Genus of a certified closed connected orientable complex via
/// `χ = 2 - 2g`.
pub fn genus(f: &FaceComplex) -> Result<u64> {
    let cert = check_orientable(f)?;
    if !cert.connected {
        return Err(Error::Precondition("complex is not connected".into()));
    }
    if !cert.orientable {
        return Err(Error::Precondition("complex is not orientable".into()));
    }
    cert.genus
        .ok_or_else(|| consistency("certified surface without a genus"))
}

fn genus_from_chi(chi: i64) -> Result<u64> {
    if chi % 2 != 0 {
        return Err(consistency(format!(
            "odd Euler characteristic {chi} on an orientable surface"
        )));
    }
    let g = (2 - chi) / 2;
    u64::try_from(g).map_err(|_| consistency(format!("negative genus from χ = {chi}")))
}

fn propagate_orientation(f: &FaceComplex) -> std::result::Result<Vec<bool>, Violation> {
    let slots = f.edge_slots();
    let nf = f.faces.len();
    let mut orient: Vec<Option<bool>> = vec![None; nf];
    let mut parent: Vec<Option<usize>> = vec![None; nf];
    let mut queue = VecDeque::new();

    for root in 0..nf {
        if orient[root].is_some() {
            continue;
        }
        orient[root] = Some(true);
        queue.push_back(root);
        while let Some(face) = queue.pop_front() {
            let o = orient[face].unwrap();
            for s in &f.faces[face] {
                let &[(f1, k1), (f2, k2)] = slots[s.edge].as_slice() else {
                    unreachable!("closed complexes have two slots per edge");
                };
                let d1 = f.faces[f1][k1].forward;
                let d2 = f.faces[f2][k2].forward;
                if f1 == f2 {
                    if d1 == d2 {
                        return Err(Violation::OrientationConflict {
                            edge: s.edge,
                            faces: vec![f1],
                        });
                    }
                    continue;
                }
                let (this_d, other, other_d) = if f1 == face {
                    (d1, f2, d2)
                } else {
                    (d2, f1, d1)
                };
                // Oriented directions must be opposite: other_d ^ o' == !(this_d ^ o).
                let want = !(this_d ^ o ^ other_d);
                match orient[other] {
                    None => {
                        orient[other] = Some(want);
                        parent[other] = Some(face);
                        queue.push_back(other);
                    }
                    Some(have) if have != want => {
                        return Err(Violation::OrientationConflict {
                            edge: s.edge,
                            faces: conflict_cycle(&parent, face, other),
                        });
                    }
                    Some(_) => {}
                }
            }
        }
    }
    Ok(orient.into_iter().map(Option::unwrap).collect())
}

/// Tree path `a → lca → b`.
fn conflict_cycle(parent: &[Option<usize>], a: usize, b: usize) -> Vec<usize> {
    let to_root = |mut x: usize| {
        let mut path = vec![x];
        while let Some(p) = parent[x] {
            path.push(p);
            x = p;
        }
        path
    };
    let mut pa = to_root(a);
    let mut pb = to_root(b);
    while pa.len() > 1 && pb.len() > 1 && pa[pa.len() - 2] == pb[pb.len() - 2] {
        pa.pop();
        pb.pop();
    }
    pb.pop();
    pa.extend(pb.into_iter().rev());
    pa
}

/// Check that `orientation` makes the two slots of every edge run in
/// opposite directions.
pub fn verify_orientation(f: &FaceComplex, orientation: &[bool]) -> bool {
    if orientation.len() != f.faces.len() {
        return false;
    }
    f.edge_slots().iter().all(|s| match s.as_slice() {
        [(f1, k1), (f2, k2)] => {
            let a = f.faces[*f1][*k1].forward == orientation[*f1];
            let b = f.faces[*f2][*k2].forward == orientation[*f2];
            a != b
        }
        _ => false,
    })
}

/// Split every quadrilateral `c0 c1 c2 c3` along the diagonal `c0–c2`
/// into `(c0, c1, c2)` and `(c0, c2, c3)`. Diagonals are appended after
/// the existing edges, one per face, oriented `c0 → c2`.
pub fn triangulate(f: &FaceComplex) -> Result<FaceComplex> {
    if let Some((face, walk)) = f.faces.iter().enumerate().find(|(_, w)| w.len() != 4) {
        return Err(Error::UnsupportedFace {
            face,
            len: walk.len(),
        });
    }
    let mut edges = f.edges.clone();
    let mut faces = Vec::with_capacity(2 * f.faces.len());
    for walk in &f.faces {
        let c0 = f.tail(walk[0]);
        let c2 = f.tail(walk[2]);
        let diag = edges.len();
        edges.push([c0, c2]);
        faces.push(vec![walk[0], walk[1], Slot::new(diag, false)]);
        faces.push(vec![Slot::new(diag, true), walk[2], walk[3]]);
    }
    FaceComplex::new(f.ambient, f.vertices.clone(), edges, faces)
}
