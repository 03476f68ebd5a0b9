//! Built-in complexes: simplex boundaries, cyclic polytope boundaries,
//! stacked spheres, the facet-subdivision / connected-sum / handle
//! operations, and three small 2-manifold triangulations stored as
//! checksummed data. The corpus registry re-verifies the expected
//! face counts, Euler characteristic, and Betti numbers on every build.

use crate::complex::{ComplexError, SimplicialComplex};
use crate::homology::reduced_betti;
use crate::field::PrimeField;
use crate::util::k_subsets;
use alloc::collections::{BTreeMap, BTreeSet, VecDeque};
use alloc::format;
use alloc::string::{String, ToString};
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum ConstructionError {
    Complex(ComplexError),
    /// `n` must exceed the facet cardinality.
    TooFewVertices { d: usize, n: usize },
    BadDimension(usize),
    UnknownManifold(String),
    /// The named facet is not a facet of the input complex.
    NotAFacet(Vec<u64>),
    /// The vertex identification map is not a bijection between the facets.
    BadBijection(String),
    /// A vertex pair scheduled for identification sits closer than
    /// distance 3 in the edge graph.
    PairTooClose { u: u64, v: u64, distance: usize },
    /// Identification would produce two facets with the same vertex set.
    DegenerateResult(Vec<u64>),
    /// Embedded data failed its checksum.
    CorruptData { name: String, expected: u64, actual: u64 },
    /// A freshly built corpus entry disagreed with its recorded profile.
    ProfileMismatch { name: String, detail: String },
}

impl From<ComplexError> for ConstructionError {
    fn from(e: ComplexError) -> Self {
        ConstructionError::Complex(e)
    }
}

impl fmt::Display for ConstructionError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ConstructionError::Complex(e) => write!(f, "{e}"),
            ConstructionError::TooFewVertices { d, n } => {
                write!(f, "need at least {} vertices, got {n}", d + 1)
            }
            ConstructionError::BadDimension(d) => write!(f, "unsupported dimension parameter {d}"),
            ConstructionError::UnknownManifold(name) => write!(f, "unknown manifold name {name:?}"),
            ConstructionError::NotAFacet(fct) => write!(f, "{fct:?} is not a facet of the complex"),
            ConstructionError::BadBijection(msg) => write!(f, "bad vertex bijection: {msg}"),
            ConstructionError::PairTooClose { u, v, distance } => write!(
                f,
                "identified vertices {u} and {v} are at edge-graph distance {distance} < 3"
            ),
            ConstructionError::DegenerateResult(fct) => {
                write!(f, "identification collapses two facets onto {fct:?}")
            }
            ConstructionError::CorruptData { name, expected, actual } => write!(
                f,
                "data for {name} failed checksum: expected {expected:#018x}, got {actual:#018x}"
            ),
            ConstructionError::ProfileMismatch { name, detail } => {
                write!(f, "corpus entry {name} disagrees with its recorded profile: {detail}")
            }
        }
    }
}

impl core::error::Error for ConstructionError {}

/// Boundary of the d-simplex: all d-subsets of `{1, ..., d+1}`.
pub fn simplex_boundary(d: usize) -> Result<SimplicialComplex, ConstructionError> {
    if d < 1 {
        return Err(ConstructionError::BadDimension(d));
    }
    let verts: Vec<u64> = (1..=d as u64 + 1).collect();
    let facets = k_subsets(&verts, d);
    Ok(SimplicialComplex::from_facets(&facets)?)
}

/// Boundary of the cyclic polytope `C_d(n)`: `S` in `[n]` with `|S| = d` is
/// a facet exactly when between any two elements of `[n] \ S` the set `S`
/// has an even number of elements (Gale's evenness condition).
pub fn cyclic_polytope_boundary(d: usize, n: usize) -> Result<SimplicialComplex, ConstructionError> {
    if d < 1 {
        return Err(ConstructionError::BadDimension(d));
    }
    if n <= d {
        return Err(ConstructionError::TooFewVertices { d, n });
    }
    let verts: Vec<u64> = (1..=n as u64).collect();
    let mut facets = Vec::new();
    'subsets: for cand in k_subsets(&verts, d) {
        let in_set: BTreeSet<u64> = cand.iter().copied().collect();
        let outside: Vec<u64> = verts.iter().copied().filter(|v| !in_set.contains(v)).collect();
        for w in outside.windows(2) {
            let (i, j) = (w[0], w[1]);
            let between = cand.iter().filter(|&&x| i < x && x < j).count();
            if between % 2 != 0 {
                continue 'subsets;
            }
        }
        facets.push(cand);
    }
    Ok(SimplicialComplex::from_facets(&facets)?)
}

/// Lexicographically last facet of a sorted facet set.
fn lex_last(facets: &BTreeSet<Vec<u64>>) -> Vec<u64> {
    facets.iter().next_back().expect("nonempty facet set").clone()
}

fn subdivide_in_place(facets: &mut BTreeSet<Vec<u64>>, facet: &[u64], new_vertex: u64) {
    facets.remove(facet);
    for mut g in k_subsets(facet, facet.len() - 1) {
        g.push(new_vertex);
        g.sort_unstable();
        facets.insert(g);
    }
}

/// Stacked sphere on `n` vertices: start from the boundary of the
/// d-simplex and subdivide the lexicographically last facet with a fresh
/// vertex, `n - d - 1` times.
pub fn stacked_sphere(d: usize, n: usize) -> Result<SimplicialComplex, ConstructionError> {
    if d < 1 {
        return Err(ConstructionError::BadDimension(d));
    }
    if n < d + 1 {
        return Err(ConstructionError::TooFewVertices { d, n });
    }
    let base = simplex_boundary(d)?;
    let mut facets: BTreeSet<Vec<u64>> = base.facets_original_labels().into_iter().collect();
    for new_vertex in d as u64 + 2..=n as u64 {
        let target = lex_last(&facets);
        subdivide_in_place(&mut facets, &target, new_vertex);
    }
    let listed: Vec<Vec<u64>> = facets.into_iter().collect();
    Ok(SimplicialComplex::from_facets(&listed)?)
}

fn require_facet(k: &SimplicialComplex, facet: &[u64]) -> Result<Vec<u64>, ConstructionError> {
    let mut sorted: Vec<u64> = facet.to_vec();
    sorted.sort_unstable();
    sorted.dedup();
    if sorted.len() != facet.len() || !k.facets_original_labels().contains(&sorted) {
        return Err(ConstructionError::NotAFacet(facet.to_vec()));
    }
    Ok(sorted)
}

/// Subdivide one facet with a single new vertex (the smallest unused label).
pub fn hd_subdivide_facet(
    k: &SimplicialComplex,
    facet: &[u64],
) -> Result<SimplicialComplex, ConstructionError> {
    let facet = require_facet(k, facet)?;
    let mut facets: BTreeSet<Vec<u64>> = k.facets_original_labels().into_iter().collect();
    let new_vertex = k.original_labels().iter().copied().max().unwrap_or(0) + 1;
    subdivide_in_place(&mut facets, &facet, new_vertex);
    let listed: Vec<Vec<u64>> = facets.into_iter().collect();
    Ok(SimplicialComplex::from_facets(&listed)?)
}

fn check_bijection(
    facet1: &[u64],
    facet2: &[u64],
    bijection: &[(u64, u64)],
) -> Result<BTreeMap<u64, u64>, ConstructionError> {
    if bijection.len() != facet1.len() || facet1.len() != facet2.len() {
        return Err(ConstructionError::BadBijection(
            "pair count must equal the facet cardinality".to_string(),
        ));
    }
    let mut map = BTreeMap::new();
    let mut seen = BTreeSet::new();
    for &(u, v) in bijection {
        if !facet1.contains(&u) || !facet2.contains(&v) {
            return Err(ConstructionError::BadBijection(format!(
                "pair ({u}, {v}) is not drawn from the two facets"
            )));
        }
        if map.insert(u, v).is_some() || !seen.insert(v) {
            return Err(ConstructionError::BadBijection(format!(
                "vertex repeated in pair ({u}, {v})"
            )));
        }
    }
    Ok(map)
}

/// Connected sum: remove `facet1` from `k1` and `facet2` from `k2`, then
/// glue along the removed boundaries via `bijection: facet1 -> facet2`.
/// Vertices of `k2` outside `facet2` receive fresh labels.
pub fn hd_connected_sum(
    k1: &SimplicialComplex,
    k2: &SimplicialComplex,
    facet1: &[u64],
    facet2: &[u64],
    bijection: &[(u64, u64)],
) -> Result<SimplicialComplex, ConstructionError> {
    let facet1 = require_facet(k1, facet1)?;
    let facet2 = require_facet(k2, facet2)?;
    let map = check_bijection(&facet1, &facet2, bijection)?;
    let reverse: BTreeMap<u64, u64> = map.iter().map(|(&u, &v)| (v, u)).collect();

    let mut facets: Vec<Vec<u64>> =
        k1.facets_original_labels().into_iter().filter(|f| *f != facet1).collect();
    let mut next = k1.original_labels().iter().copied().max().unwrap_or(0) + 1;
    let mut relabel: BTreeMap<u64, u64> = reverse;
    for &v in k2.original_labels() {
        relabel.entry(v).or_insert_with(|| {
            let fresh = next;
            next += 1;
            fresh
        });
    }
    for f in k2.facets_original_labels() {
        if f == facet2 {
            continue;
        }
        let mut mapped: Vec<u64> = f.iter().map(|v| relabel[v]).collect();
        mapped.sort_unstable();
        facets.push(mapped);
    }
    Ok(SimplicialComplex::from_facets(&facets)?)
}

fn edge_graph(k: &SimplicialComplex) -> BTreeMap<u64, BTreeSet<u64>> {
    let mut adj: BTreeMap<u64, BTreeSet<u64>> = BTreeMap::new();
    for f in k.facets_original_labels() {
        for pair in k_subsets(&f, 2) {
            adj.entry(pair[0]).or_default().insert(pair[1]);
            adj.entry(pair[1]).or_default().insert(pair[0]);
        }
        if f.len() == 1 {
            adj.entry(f[0]).or_default();
        }
    }
    adj
}

/// Edge-graph distance from `u` to `v`, capped: returns `None` if > cap.
fn bfs_distance(
    adj: &BTreeMap<u64, BTreeSet<u64>>,
    u: u64,
    v: u64,
    cap: usize,
) -> Option<usize> {
    if u == v {
        return Some(0);
    }
    let mut seen: BTreeSet<u64> = BTreeSet::new();
    let mut queue: VecDeque<(u64, usize)> = VecDeque::new();
    seen.insert(u);
    queue.push_back((u, 0));
    while let Some((x, dx)) = queue.pop_front() {
        if dx == cap {
            continue;
        }
        if let Some(nbrs) = adj.get(&x) {
            for &y in nbrs {
                if y == v {
                    return Some(dx + 1);
                }
                if seen.insert(y) {
                    queue.push_back((y, dx + 1));
                }
            }
        }
    }
    None
}

/// Handle: identify `facet1` with `facet2` inside the same complex via
/// `bijection`, removing both facets. Every identified pair must lie at
/// edge-graph distance at least 3, and no two surviving facets may end up
/// with the same vertex set.
pub fn hd_handle(
    k: &SimplicialComplex,
    facet1: &[u64],
    facet2: &[u64],
    bijection: &[(u64, u64)],
) -> Result<SimplicialComplex, ConstructionError> {
    let facet1 = require_facet(k, facet1)?;
    let facet2 = require_facet(k, facet2)?;
    if facet1 == facet2 {
        return Err(ConstructionError::BadBijection("facets must be distinct".to_string()));
    }
    let map = check_bijection(&facet1, &facet2, bijection)?;

    let adj = edge_graph(k);
    for (&u, &v) in &map {
        if let Some(dist) = bfs_distance(&adj, u, v, 2) {
            return Err(ConstructionError::PairTooClose { u, v, distance: dist });
        }
    }

    // Redirect every facet2 vertex onto its facet1 partner; both glued
    // facets collapse to facet1's vertex set and are dropped.
    let reverse: BTreeMap<u64, u64> = map.iter().map(|(&u, &v)| (v, u)).collect();
    let mut seen: BTreeSet<Vec<u64>> = BTreeSet::new();
    for f in k.facets_original_labels() {
        if f == facet1 || f == facet2 {
            continue;
        }
        let mut mapped: Vec<u64> =
            f.iter().map(|v| reverse.get(v).copied().unwrap_or(*v)).collect();
        mapped.sort_unstable();
        debug_assert_eq!(mapped.len(), f.len(), "distance guard keeps facets full-size");
        if !seen.insert(mapped.clone()) {
            return Err(ConstructionError::DegenerateResult(mapped));
        }
    }
    let listed: Vec<Vec<u64>> = seen.into_iter().collect();
    Ok(SimplicialComplex::from_facets(&listed)?)
}

const FNV_OFFSET: u64 = 0xcbf29ce484222325;
const FNV_PRIME: u64 = 0x100000001b3;

/// FNV-1a 64-bit hash, used to pin the embedded facet data.
pub fn fnv1a64(data: &[u8]) -> u64 {
    let mut h = FNV_OFFSET;
    for &b in data {
        h ^= b as u64;
        h = h.wrapping_mul(FNV_PRIME);
    }
    h
}

struct ManifoldData {
    name: &'static str,
    text: &'static str,
    checksum: u64,
}

const MANIFOLDS: &[ManifoldData] = &[
    ManifoldData {
        name: "torus_7",
        text: include_str!("data/torus_7.txt"),
        checksum: 0x0b14_1ad8_2137_dc34,
    },
    ManifoldData {
        name: "rp2_6",
        text: include_str!("data/rp2_6.txt"),
        checksum: 0x56dc_d5d1_d025_95e0,
    },
    ManifoldData {
        name: "klein_8",
        text: include_str!("data/klein_8.txt"),
        checksum: 0x4c59_b325_7065_6a5f,
    },
];

fn parse_facet_lines(text: &str) -> Vec<Vec<u64>> {
    text.lines()
        .map(str::trim)
        .filter(|l| !l.is_empty() && !l.starts_with('#'))
        .map(|l| {
            l.split_whitespace()
                .map(|tok| tok.parse::<u64>().expect("embedded data is numeric"))
                .collect()
        })
        .collect()
}

/// One of the embedded small triangulations: `torus_7`, `rp2_6`, `klein_8`.
/// The raw data is checksummed, and the entry's full recorded profile
/// (face counts, Euler characteristic, Betti numbers per field) is
/// re-verified before the complex is returned.
pub fn small_manifold(name: &str) -> Result<SimplicialComplex, ConstructionError> {
    let entry = corpus()
        .into_iter()
        .find(|e| e.name == name && e.embedded)
        .ok_or_else(|| ConstructionError::UnknownManifold(name.to_string()))?;
    entry.build()
}

fn small_manifold_raw(name: &str) -> Result<SimplicialComplex, ConstructionError> {
    let data = MANIFOLDS
        .iter()
        .find(|m| m.name == name)
        .ok_or_else(|| ConstructionError::UnknownManifold(name.to_string()))?;
    let actual = fnv1a64(data.text.as_bytes());
    if actual != data.checksum {
        return Err(ConstructionError::CorruptData {
            name: name.to_string(),
            expected: data.checksum,
            actual,
        });
    }
    Ok(SimplicialComplex::from_facets(&parse_facet_lines(data.text))?)
}

/// A named corpus member: how to build it and what its profile must be.
/// `build()` re-checks every recorded value, so a regression in any builder
/// (or corrupted embedded data) surfaces as an error rather than as a
/// silently different complex.
pub struct CorpusEntry {
    pub name: &'static str,
    /// Human-readable builder parameters / data origin.
    pub note: &'static str,
    builder: fn() -> Result<SimplicialComplex, ConstructionError>,
    pub expected_f: &'static [i64],
    pub expected_chi: i64,
    /// `(p, reduced Betti entries)` per verified field.
    pub expected_beta: &'static [(u64, &'static [usize])],
    /// Whether the facet list comes from an embedded data file.
    pub embedded: bool,
}

impl CorpusEntry {
    pub fn build(&self) -> Result<SimplicialComplex, ConstructionError> {
        let k = (self.builder)()?;
        let mismatch = |detail: String| ConstructionError::ProfileMismatch {
            name: self.name.to_string(),
            detail,
        };
        let f = k.f_vector()?;
        if f != self.expected_f {
            return Err(mismatch(format!("f-vector {f:?}, recorded {:?}", self.expected_f)));
        }
        let chi = k.euler_characteristic()?;
        if chi != self.expected_chi {
            return Err(mismatch(format!(
                "Euler characteristic {chi}, recorded {}",
                self.expected_chi
            )));
        }
        for &(p, expected) in self.expected_beta {
            let field = PrimeField::new(p).expect("recorded fields are prime");
            let beta = reduced_betti(&k, &field).map_err(|e| mismatch(format!("{e}")))?;
            if beta.entries() != expected {
                return Err(mismatch(format!(
                    "Betti entries over F_{p} {:?}, recorded {expected:?}",
                    beta.entries()
                )));
            }
        }
        Ok(k)
    }
}

fn build_handle_4_16() -> Result<SimplicialComplex, ConstructionError> {
    let k = stacked_sphere(4, 16)?;
    let f1 = [1u64, 2, 3, 4];
    let f2 = [13u64, 14, 15, 16];
    let bij: Vec<(u64, u64)> = f1.iter().zip(f2.iter()).map(|(&u, &v)| (u, v)).collect();
    hd_handle(&k, &f1, &f2, &bij)
}

const ALL_FIELDS: [u64; 3] = [2, 3, 32003];

macro_rules! sphere_beta {
    ($entries:expr) => {
        &[(2, $entries), (3, $entries), (32003, $entries)]
    };
}

/// The built-in corpus, in a fixed order.
pub fn corpus() -> Vec<CorpusEntry> {
    vec![
        CorpusEntry {
            name: "simplex_boundary_2",
            note: "boundary of the 2-simplex",
            builder: || simplex_boundary(2),
            expected_f: &[1, 3, 3],
            expected_chi: 0,
            expected_beta: sphere_beta!(&[0, 0, 1]),
            embedded: false,
        },
        CorpusEntry {
            name: "simplex_boundary_3",
            note: "boundary of the 3-simplex",
            builder: || simplex_boundary(3),
            expected_f: &[1, 4, 6, 4],
            expected_chi: 2,
            expected_beta: sphere_beta!(&[0, 0, 0, 1]),
            embedded: false,
        },
        CorpusEntry {
            name: "simplex_boundary_4",
            note: "boundary of the 4-simplex",
            builder: || simplex_boundary(4),
            expected_f: &[1, 5, 10, 10, 5],
            expected_chi: 0,
            expected_beta: sphere_beta!(&[0, 0, 0, 0, 1]),
            embedded: false,
        },
        CorpusEntry {
            name: "simplex_boundary_5",
            note: "boundary of the 5-simplex",
            builder: || simplex_boundary(5),
            expected_f: &[1, 6, 15, 20, 15, 6],
            expected_chi: 2,
            expected_beta: sphere_beta!(&[0, 0, 0, 0, 0, 1]),
            embedded: false,
        },
        CorpusEntry {
            name: "torus_7",
            note: "vertex-transitive 7-vertex torus (embedded data)",
            builder: || small_manifold_raw("torus_7"),
            expected_f: &[1, 7, 21, 14],
            expected_chi: 0,
            expected_beta: sphere_beta!(&[0, 0, 2, 1]),
            embedded: true,
        },
        CorpusEntry {
            name: "rp2_6",
            note: "6-vertex projective plane (embedded data)",
            builder: || small_manifold_raw("rp2_6"),
            expected_f: &[1, 6, 15, 10],
            expected_chi: 1,
            expected_beta: &[(2, &[0, 0, 1, 1]), (3, &[0, 0, 0, 0]), (32003, &[0, 0, 0, 0])],
            embedded: true,
        },
        CorpusEntry {
            name: "klein_8",
            note: "8-vertex Klein bottle (embedded data)",
            builder: || small_manifold_raw("klein_8"),
            expected_f: &[1, 8, 24, 16],
            expected_chi: 0,
            expected_beta: &[(2, &[0, 0, 2, 1]), (3, &[0, 0, 1, 0]), (32003, &[0, 0, 1, 0])],
            embedded: true,
        },
        CorpusEntry {
            name: "cyclic_4_8",
            note: "boundary of the cyclic polytope C_4(8)",
            builder: || cyclic_polytope_boundary(4, 8),
            expected_f: &[1, 8, 28, 40, 20],
            expected_chi: 0,
            expected_beta: sphere_beta!(&[0, 0, 0, 0, 1]),
            embedded: false,
        },
        CorpusEntry {
            name: "stacked_3_10",
            note: "stacked 2-sphere, d=3, 10 vertices",
            builder: || stacked_sphere(3, 10),
            expected_f: &[1, 10, 24, 16],
            expected_chi: 2,
            expected_beta: sphere_beta!(&[0, 0, 0, 1]),
            embedded: false,
        },
        CorpusEntry {
            name: "stacked_4_16",
            note: "stacked 3-sphere, d=4, 16 vertices",
            builder: || stacked_sphere(4, 16),
            expected_f: &[1, 16, 54, 76, 38],
            expected_chi: 0,
            expected_beta: sphere_beta!(&[0, 0, 0, 0, 1]),
            embedded: false,
        },
        CorpusEntry {
            name: "handle_4_16",
            note: "handle on the stacked 3-sphere: {1,2,3,4} identified with {13,14,15,16}",
            builder: build_handle_4_16,
            expected_f: &[1, 12, 48, 72, 36],
            expected_chi: 0,
            expected_beta: sphere_beta!(&[0, 0, 1, 1, 1]),
            embedded: false,
        },
    ]
}

/// Look one entry up by name.
pub fn corpus_entry(name: &str) -> Option<CorpusEntry> {
    corpus().into_iter().find(|e| e.name == name)
}

/// The fields every corpus profile is recorded over.
pub fn corpus_fields() -> [u64; 3] {
    ALL_FIELDS
}
