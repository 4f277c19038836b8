//! Simplicial complexes on `{1..m}` and the cubical cell structure of the
//! real moment-angle complex `Z_K(D¹,S⁰)`.
//!
//! A cell of `Z_K` is a pair `(σ, ε)`: `σ ∈ K` picks the coordinates that
//! range over the interval `D¹ = [0,1]`, and `ε` fixes every other
//! coordinate to an endpoint of `S⁰ = {0,1}`. Both halves are stored as
//! bitmasks with coordinate `i` at bit `i - 1`, so the ambient dimension is
//! limited to [`MAX_AMBIENT`].

use std::cmp::Ordering;
use std::collections::{BTreeSet, HashMap};
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{consistency, domain, Error, Result};

/// Hard limit imposed by the `u32` cell encoding.
pub const MAX_AMBIENT: usize = 31;

/// Default cap on the ambient coordinate count; `2^20` vertices is already
/// several million cells.
pub const DEFAULT_AMBIENT_CAP: usize = 20;

/// Positions of the set bits of a mask, ascending, as 0-based indices.
#[derive(Clone, Copy, Debug)]
pub struct Bits(pub u32);

impl Iterator for Bits {
    type Item = usize;

    fn next(&mut self) -> Option<usize> {
        if self.0 == 0 {
            return None;
        }
        let i = self.0.trailing_zeros() as usize;
        self.0 &= self.0 - 1;
        Some(i)
    }

    fn size_hint(&self) -> (usize, Option<usize>) {
        let c = self.0.count_ones() as usize;
        (c, Some(c))
    }
}

impl ExactSizeIterator for Bits {}

pub(crate) fn full_mask(n: usize) -> u32 {
    if n >= 32 {
        u32::MAX
    } else {
        (1u32 << n) - 1
    }
}

/// Render `mask` over coordinates `1..=n` as a 0/1 string, coordinate 1 first.
pub fn mask_to_string(mask: u32, n: usize) -> String {
    (0..n)
        .map(|i| if mask >> i & 1 == 1 { '1' } else { '0' })
        .collect()
}

/// Inverse of [`mask_to_string`].
pub fn string_to_mask(s: &str) -> Result<u32> {
    if s.len() > MAX_AMBIENT {
        return Err(domain(format!("binary string longer than {MAX_AMBIENT}")));
    }
    s.chars()
        .enumerate()
        .try_fold(0u32, |acc, (i, ch)| match ch {
            '0' => Ok(acc),
            '1' => Ok(acc | 1 << i),
            other => Err(Error::Parse(format!("'{other}' in binary string {s:?}"))),
        })
}

/// An abstract simplicial complex on the vertex set `{1..m}`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SimplicialComplex {
    m: usize,
    faces: BTreeSet<Vec<usize>>,
}

impl SimplicialComplex {
    /// Build from an explicit face list. The empty face is added implicitly;
    /// everything else must already be downward closed and contain every
    /// singleton.
    pub fn from_faces<I, F>(m: usize, faces: I) -> Result<Self>
    where
        I: IntoIterator<Item = F>,
        F: AsRef<[usize]>,
    {
        if m == 0 {
            return Err(domain("a simplicial complex needs at least one vertex"));
        }
        if m > MAX_AMBIENT {
            return Err(domain(format!(
                "{m} vertices exceeds the limit of {MAX_AMBIENT}"
            )));
        }
        let mut set = BTreeSet::new();
        set.insert(Vec::new());
        for face in faces {
            let mut f = face.as_ref().to_vec();
            f.sort_unstable();
            if f.windows(2).any(|w| w[0] == w[1]) {
                return Err(domain(format!("face {f:?} repeats a vertex")));
            }
            if let Some(&v) = f.iter().find(|&&v| v == 0 || v > m) {
                return Err(domain(format!("vertex {v} outside 1..={m}")));
            }
            set.insert(f);
        }
        for face in &set {
            for skip in 0..face.len() {
                let sub: Vec<usize> = face
                    .iter()
                    .enumerate()
                    .filter(|&(j, _)| j != skip)
                    .map(|(_, &v)| v)
                    .collect();
                if !set.contains(&sub) {
                    return Err(domain(format!(
                        "not downward closed: {face:?} present but {sub:?} missing"
                    )));
                }
            }
        }
        if let Some(v) = (1..=m).find(|v| !set.contains(&vec![*v])) {
            return Err(domain(format!("vertex {v} is not a face")));
        }
        Ok(SimplicialComplex { m, faces: set })
    }

    /// The boundary of an `n`-gon: vertices `1..n` and edges `{i, i+1}`
    /// with `{1, n}` closing the cycle.
    pub fn polygon_boundary(n: usize) -> Result<Self> {
        if n < 3 {
            return Err(domain(format!("polygon boundary needs n >= 3, got {n}")));
        }
        let singletons = (1..=n).map(|i| vec![i]);
        let edges = (1..=n).map(|i| {
            let j = i % n + 1;
            vec![i.min(j), i.max(j)]
        });
        Self::from_faces(n, singletons.chain(edges).collect::<Vec<_>>())
    }

    /// `n` isolated vertices.
    pub fn discrete_points(n: usize) -> Result<Self> {
        if n < 1 {
            return Err(domain("discrete_points needs n >= 1"));
        }
        Self::from_faces(n, (1..=n).map(|i| vec![i]).collect::<Vec<_>>())
    }

    pub fn m(&self) -> usize {
        self.m
    }

    /// All faces including the empty one, in lexicographic order.
    pub fn faces(&self) -> impl Iterator<Item = &[usize]> {
        self.faces.iter().map(Vec::as_slice)
    }

    pub fn face_count(&self) -> usize {
        self.faces.len()
    }

    pub fn contains(&self, face: &[usize]) -> bool {
        let mut f = face.to_vec();
        f.sort_unstable();
        self.faces.contains(&f)
    }

    /// Largest face cardinality minus one (`-1` never happens: singletons exist).
    pub fn dimension(&self) -> usize {
        self.faces.iter().map(Vec::len).max().unwrap_or(1) - 1
    }

    pub(crate) fn face_masks(&self) -> impl Iterator<Item = u32> + '_ {
        self.faces
            .iter()
            .map(|f| f.iter().fold(0u32, |acc, &v| acc | 1 << (v - 1)))
    }
}

/// A cell `(σ, ε)` of a real moment-angle complex.
///
/// Bits of `eps` inside `sigma` are always zero, so the derived `Hash`/`Eq`
/// agree with the mathematical identity of the cell.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct CubicalCell {
    sigma: u32,
    eps: u32,
}

impl CubicalCell {
    pub fn new(sigma: u32, eps: u32) -> Self {
        CubicalCell {
            sigma,
            eps: eps & !sigma,
        }
    }

    pub fn vertex(eps: u32) -> Self {
        CubicalCell { sigma: 0, eps }
    }

    pub fn sigma(&self) -> u32 {
        self.sigma
    }

    pub fn eps(&self) -> u32 {
        self.eps
    }

    pub fn dim(&self) -> usize {
        self.sigma.count_ones() as usize
    }

    /// The free coordinates, 1-based and ascending.
    pub fn sigma_coords(&self) -> Vec<usize> {
        Bits(self.sigma).map(|i| i + 1).collect()
    }

    /// The fixed coordinates' values, listed over the complement of `sigma`
    /// in increasing coordinate order.
    pub fn eps_string(&self, n: usize) -> String {
        Bits(full_mask(n) & !self.sigma)
            .map(|i| if self.eps >> i & 1 == 1 { '1' } else { '0' })
            .collect()
    }

    /// Codimension-one faces: for each free coordinate `i` (ascending), the
    /// face at `x_i = 0` and then at `x_i = 1`.
    pub fn boundary(&self) -> impl Iterator<Item = CubicalCell> + '_ {
        Bits(self.sigma).flat_map(move |i| {
            let sigma = self.sigma & !(1 << i);
            [
                CubicalCell {
                    sigma,
                    eps: self.eps,
                },
                CubicalCell {
                    sigma,
                    eps: self.eps | 1 << i,
                },
            ]
        })
    }

    /// Corner of the cell with every free coordinate set from `corner`.
    pub fn corner(&self, corner: u32) -> u32 {
        self.eps | (corner & self.sigma)
    }
}

impl Ord for CubicalCell {
    /// Lexicographic by `(dim, sigma as a sorted list, eps as its string)`.
    fn cmp(&self, other: &Self) -> Ordering {
        self.dim()
            .cmp(&other.dim())
            .then_with(|| Bits(self.sigma).cmp(Bits(other.sigma)))
            .then_with(|| {
                // First differing coordinate decides; '0' sorts before '1'.
                let diff = self.eps ^ other.eps;
                if diff == 0 {
                    Ordering::Equal
                } else if self.eps & diff & diff.wrapping_neg() == 0 {
                    Ordering::Less
                } else {
                    Ordering::Greater
                }
            })
    }
}

impl PartialOrd for CubicalCell {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

/// A finite cubical complex inside `{0,1,[0,1]}^n`, with codimension-one
/// incidence stored in compressed rows.
#[derive(Clone, Debug)]
pub struct CubicalComplex {
    n: usize,
    cells: Vec<CubicalCell>,
    index: HashMap<CubicalCell, usize>,
    dim_start: Vec<usize>,
    bnd_offsets: Vec<usize>,
    bnd: Vec<usize>,
}

impl CubicalComplex {
    /// Assemble a complex from an arbitrary cell list. Cells are sorted into
    /// canonical order; duplicates and missing boundary cells are rejected.
    pub fn from_cells(n: usize, mut cells: Vec<CubicalCell>) -> Result<Self> {
        if n == 0 || n > MAX_AMBIENT {
            return Err(domain(format!(
                "ambient dimension {n} outside 1..={MAX_AMBIENT}"
            )));
        }
        let full = full_mask(n);
        if let Some(c) = cells.iter().find(|c| (c.sigma | c.eps) & !full != 0) {
            return Err(domain(format!("cell {c:?} uses coordinates beyond {n}")));
        }
        cells.sort_unstable();
        if let Some(w) = cells.windows(2).find(|w| w[0] == w[1]) {
            return Err(domain(format!("duplicate cell {:?}", w[0])));
        }
        let index: HashMap<CubicalCell, usize> =
            cells.iter().enumerate().map(|(i, &c)| (c, i)).collect();

        let top = cells.last().map_or(0, CubicalCell::dim);
        let mut dim_start = vec![0; top + 2];
        for d in 0..=top {
            dim_start[d + 1] = dim_start[d] + cells.iter().filter(|c| c.dim() == d).count();
        }

        let mut bnd_offsets = Vec::with_capacity(cells.len() + 1);
        let mut bnd = Vec::new();
        bnd_offsets.push(0);
        for c in &cells {
            for face in c.boundary() {
                let j = *index
                    .get(&face)
                    .ok_or_else(|| domain(format!("boundary cell {face:?} of {c:?} is missing")))?;
                bnd.push(j);
            }
            bnd_offsets.push(bnd.len());
        }
        Ok(CubicalComplex {
            n,
            cells,
            index,
            dim_start,
            bnd_offsets,
            bnd,
        })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn cells(&self) -> &[CubicalCell] {
        &self.cells
    }

    pub fn cell(&self, idx: usize) -> CubicalCell {
        self.cells[idx]
    }

    pub fn len(&self) -> usize {
        self.cells.len()
    }

    pub fn is_empty(&self) -> bool {
        self.cells.is_empty()
    }

    pub fn index_of(&self, cell: &CubicalCell) -> Option<usize> {
        self.index.get(cell).copied()
    }

    pub fn contains(&self, cell: &CubicalCell) -> bool {
        self.index.contains_key(cell)
    }

    pub fn top_dim(&self) -> usize {
        self.dim_start.len() - 2
    }

    /// Index range of the cells of dimension `d` (empty past the top).
    pub fn dim_range(&self, d: usize) -> std::ops::Range<usize> {
        if d + 1 < self.dim_start.len() {
            self.dim_start[d]..self.dim_start[d + 1]
        } else {
            self.cells.len()..self.cells.len()
        }
    }

    pub fn cells_of_dim(&self, d: usize) -> &[CubicalCell] {
        &self.cells[self.dim_range(d)]
    }

    pub fn count(&self, d: usize) -> usize {
        self.dim_range(d).len()
    }

    /// Indices of the codimension-one faces of cell `idx`, in the order of
    /// [`CubicalCell::boundary`].
    pub fn boundary_of(&self, idx: usize) -> &[usize] {
        &self.bnd[self.bnd_offsets[idx]..self.bnd_offsets[idx + 1]]
    }

    /// Alternating count `Σ_d (-1)^d #cells(d)`.
    pub fn euler_characteristic(&self) -> i64 {
        (0..=self.top_dim())
            .map(|d| {
                let c = self.count(d) as i64;
                if d % 2 == 0 {
                    c
                } else {
                    -c
                }
            })
            .sum()
    }

    /// The set of `σ` appearing in some cell, as masks.
    pub fn sigma_masks(&self) -> BTreeSet<u32> {
        self.cells.iter().map(|c| c.sigma).collect()
    }

    /// `Some(n)` when this is exactly `Z` over the boundary of an `n`-gon.
    pub fn polygon_order(&self) -> Option<usize> {
        let n = self.n;
        if n < 3 {
            return None;
        }
        let expected: BTreeSet<u32> = SimplicialComplex::polygon_boundary(n)
            .ok()?
            .face_masks()
            .collect();
        let total = (1usize << n) + n * (1 << (n - 1)) + n * (1 << (n - 2));
        (self.sigma_masks() == expected && self.cells.len() == total).then_some(n)
    }

    pub fn to_dump(&self) -> ComplexDump {
        ComplexDump {
            n: self.n,
            cells: self
                .cells
                .iter()
                .map(|c| CellDump {
                    dim: c.dim(),
                    sigma: c.sigma_coords(),
                    eps: c.eps_string(self.n),
                })
                .collect(),
        }
    }

    pub fn from_dump(dump: &ComplexDump) -> Result<Self> {
        let n = dump.n;
        if n == 0 || n > MAX_AMBIENT {
            return Err(domain(format!(
                "ambient dimension {n} outside 1..={MAX_AMBIENT}"
            )));
        }
        let cells = dump
            .cells
            .iter()
            .map(|c| c.to_cell(n))
            .collect::<Result<Vec<_>>>()?;
        Self::from_cells(n, cells)
    }

    pub fn to_json(&self) -> Result<String> {
        Ok(serde_json::to_string(&self.to_dump())?)
    }

    pub fn from_json(text: &str) -> Result<Self> {
        Self::from_dump(&serde_json::from_str(text)?)
    }
}

/// Serialized form of a [`CubicalComplex`].
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ComplexDump {
    pub n: usize,
    pub cells: Vec<CellDump>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CellDump {
    pub dim: usize,
    pub sigma: Vec<usize>,
    pub eps: String,
}

impl CellDump {
    pub fn to_cell(&self, n: usize) -> Result<CubicalCell> {
        let mut sigma = 0u32;
        for &i in &self.sigma {
            if i == 0 || i > n {
                return Err(Error::Parse(format!(
                    "sigma coordinate {i} outside 1..={n}"
                )));
            }
            if sigma >> (i - 1) & 1 == 1 {
                return Err(Error::Parse(format!("sigma {:?} repeats {i}", self.sigma)));
            }
            sigma |= 1 << (i - 1);
        }
        if self.dim != self.sigma.len() {
            return Err(Error::Parse(format!(
                "dim {} does not match sigma {:?}",
                self.dim, self.sigma
            )));
        }
        let free = Bits(full_mask(n) & !sigma);
        if self.eps.chars().count() != free.len() {
            return Err(Error::Parse(format!(
                "eps {:?} must have length {}",
                self.eps,
                free.len()
            )));
        }
        let mut eps = 0u32;
        for (i, ch) in free.zip(self.eps.chars()) {
            match ch {
                '0' => {}
                '1' => eps |= 1 << i,
                other => return Err(Error::Parse(format!("'{other}' in eps {:?}", self.eps))),
            }
        }
        Ok(CubicalCell::new(sigma, eps))
    }
}

impl fmt::Display for CubicalCell {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({:?}, {:b})", self.sigma_coords(), self.eps)
    }
}

/// `Z_K(D¹,S⁰)` with the default ambient cap.
pub fn build_real_mac(k: &SimplicialComplex) -> Result<CubicalComplex> {
    build_real_mac_capped(k, DEFAULT_AMBIENT_CAP)
}

/// `Z_K(D¹,S⁰)`: every `(σ, ε)` with `σ ∈ K` and `ε` ranging over
/// `{0,1}` on the complement of `σ`.
pub fn build_real_mac_capped(k: &SimplicialComplex, cap: usize) -> Result<CubicalComplex> {
    let n = k.m();
    if n > cap.min(MAX_AMBIENT) {
        return Err(Error::ResourceLimit(format!(
            "ambient dimension {n} exceeds the cap of {}",
            cap.min(MAX_AMBIENT)
        )));
    }
    let full = full_mask(n);
    let mut cells = Vec::new();
    for sigma in k.face_masks() {
        let comp = full & !sigma;
        let mut sub = 0u32;
        loop {
            cells.push(CubicalCell::new(sigma, sub));
            if sub == comp {
                break;
            }
            sub = sub.wrapping_sub(comp) & comp;
        }
    }
    let built = CubicalComplex::from_cells(n, cells)?;
    Ok(built)
}

pub fn euler_characteristic(c: &CubicalComplex) -> i64 {
    c.euler_characteristic()
}

/// Whether `l ⊆ k` as face sets. When it is, every cell of `Z_L` is
/// confirmed to be a cell of `Z_K` by key lookup.
pub fn verify_inclusion(l: &SimplicialComplex, k: &SimplicialComplex) -> Result<bool> {
    if l.m() != k.m() {
        return Err(domain(format!(
            "vertex sets differ: {} vs {} vertices",
            l.m(),
            k.m()
        )));
    }
    if !l.faces().all(|f| k.contains(f)) {
        return Ok(false);
    }
    let zl = build_real_mac(l)?;
    let zk = build_real_mac(k)?;
    match zl.cells().iter().find(|c| !zk.contains(c)) {
        Some(c) => Err(consistency(format!("cell {c} of Z_L missing from Z_K"))),
        None => Ok(true),
    }
}
