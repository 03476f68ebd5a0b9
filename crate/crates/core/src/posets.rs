//! Simplicial posets: ranked cell posets in which every lower interval is a
//! Boolean lattice (faces may share a vertex set, unlike in a complex).
//! Provides validation, f/h-vectors, order complexes, links, the
//! homology-corrected h-vector, the socle-type lower bound on it, gluing of
//! two posets along a facet, and the parametrized example family used by
//! the verification suites.

use crate::bounds::{check_main2, h_prime, BoundReport, HPrimeVector};
use crate::complex::{h_vector, ComplexError, SimplicialComplex};
use crate::field::PrimeField;
use crate::homology::{reduced_betti, BettiVector, HomologyError};
use crate::util::k_subsets;
use alloc::collections::{BTreeMap, BTreeSet};
use alloc::format;
use alloc::string::{String, ToString};
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum PosetError {
    EmptyPoset,
    DuplicateId(String),
    /// A boundary list names a missing cell.
    UnknownBoundary { cell: String, missing: String },
    /// Rank 0 cells are not stored (the bottom element is implicit), and a
    /// boundary cell must sit exactly one rank below its cofacet.
    BadRank { cell: String, rank: usize },
    WrongBoundaryRank { cell: String, below: String },
    /// A rank-1 cell listed a boundary, or a higher cell listed none.
    BadBoundaryCount { cell: String },
    /// Some lower interval is not a Boolean lattice.
    NotBoolean { cell: String, reason: String },
    UnknownCell(String),
    /// Gluing requires maximal cells of equal rank.
    NotGluable { cell: String, reason: String },
    BadBijection(String),
    /// The example family X(i, d) is only constructed for
    /// i in {0, 1, d-2, d-1}; the middle range is not provided.
    UnsupportedFamily { i: usize, d: usize },
    Complex(ComplexError),
    Homology(HomologyError),
}

impl From<ComplexError> for PosetError {
    fn from(e: ComplexError) -> Self {
        PosetError::Complex(e)
    }
}

impl From<HomologyError> for PosetError {
    fn from(e: HomologyError) -> Self {
        PosetError::Homology(e)
    }
}

impl fmt::Display for PosetError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            PosetError::EmptyPoset => write!(f, "poset has no cells"),
            PosetError::DuplicateId(id) => write!(f, "duplicate cell id {id:?}"),
            PosetError::UnknownBoundary { cell, missing } => {
                write!(f, "cell {cell:?} lists unknown boundary cell {missing:?}")
            }
            PosetError::BadRank { cell, rank } => write!(f, "cell {cell:?} has rank {rank}"),
            PosetError::WrongBoundaryRank { cell, below } => {
                write!(f, "boundary cell {below:?} of {cell:?} is not one rank lower")
            }
            PosetError::BadBoundaryCount { cell } => {
                write!(f, "cell {cell:?} has the wrong number of boundary cells for its rank")
            }
            PosetError::NotBoolean { cell, reason } => {
                write!(f, "interval below {cell:?} is not Boolean: {reason}")
            }
            PosetError::UnknownCell(id) => write!(f, "no cell with id {id:?}"),
            PosetError::NotGluable { cell, reason } => {
                write!(f, "cannot glue along {cell:?}: {reason}")
            }
            PosetError::BadBijection(msg) => write!(f, "bad atom bijection: {msg}"),
            PosetError::UnsupportedFamily { i, d } => {
                write!(f, "example family X({i}, {d}) is not constructed")
            }
            PosetError::Complex(e) => write!(f, "{e}"),
            PosetError::Homology(e) => write!(f, "{e}"),
        }
    }
}

impl core::error::Error for PosetError {}

/// One cell of a simplicial poset. Rank-1 cells (atoms) have an empty
/// boundary; the bottom element is implicit.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Cell {
    pub id: String,
    pub rank: usize,
    pub boundary: Vec<String>,
}

impl Cell {
    pub fn new(id: &str, rank: usize, boundary: &[&str]) -> Self {
        Cell {
            id: id.to_string(),
            rank,
            boundary: boundary.iter().map(|s| s.to_string()).collect(),
        }
    }
}

/// A ranked cell poset, stored with cells sorted by `(rank, id)` and
/// boundary lists sorted by id. Structural coherence (ranks, boundary
/// references) is established on construction; [`validate`] additionally
/// certifies that every lower interval is Boolean.
///
/// [`validate`]: SimplicialPoset::validate
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SimplicialPoset {
    cells: Vec<Cell>,
    index: BTreeMap<String, usize>,
}

impl SimplicialPoset {
    pub fn from_cells(cell_list: Vec<Cell>) -> Result<Self, PosetError> {
        if cell_list.is_empty() {
            return Err(PosetError::EmptyPoset);
        }
        let mut cells = cell_list;
        cells.sort_by(|a, b| (a.rank, &a.id).cmp(&(b.rank, &b.id)));
        let mut index = BTreeMap::new();
        for (i, c) in cells.iter().enumerate() {
            if c.id.is_empty() || c.rank == 0 {
                return Err(PosetError::BadRank { cell: c.id.clone(), rank: c.rank });
            }
            if index.insert(c.id.clone(), i).is_some() {
                return Err(PosetError::DuplicateId(c.id.clone()));
            }
        }
        for c in &mut cells {
            c.boundary.sort();
            if c.boundary.windows(2).any(|w| w[0] == w[1]) {
                return Err(PosetError::BadBoundaryCount { cell: c.id.clone() });
            }
        }
        for c in &cells {
            if (c.rank == 1) != c.boundary.is_empty() {
                return Err(PosetError::BadBoundaryCount { cell: c.id.clone() });
            }
            for b in &c.boundary {
                let Some(&bi) = index.get(b) else {
                    return Err(PosetError::UnknownBoundary {
                        cell: c.id.clone(),
                        missing: b.clone(),
                    });
                };
                if cells[bi].rank + 1 != c.rank {
                    return Err(PosetError::WrongBoundaryRank {
                        cell: c.id.clone(),
                        below: b.clone(),
                    });
                }
            }
        }
        Ok(SimplicialPoset { cells, index })
    }

    /// Cells sorted by `(rank, id)`.
    pub fn cells(&self) -> &[Cell] {
        &self.cells
    }

    pub fn cell(&self, id: &str) -> Option<&Cell> {
        self.index.get(id).map(|&i| &self.cells[i])
    }

    /// The rank of the poset: the largest cell rank.
    pub fn rank_d(&self) -> usize {
        self.cells.iter().map(|c| c.rank).max().unwrap_or(0)
    }

    fn idx(&self, id: &str) -> Result<usize, PosetError> {
        self.index.get(id).copied().ok_or_else(|| PosetError::UnknownCell(id.to_string()))
    }

    /// All cells `<=` the given cell (by repeated boundary descent),
    /// including the cell itself; the implicit bottom is not represented.
    fn closure(&self, i: usize) -> BTreeSet<usize> {
        let mut out = BTreeSet::new();
        let mut stack = vec![i];
        while let Some(j) = stack.pop() {
            if out.insert(j) {
                for b in &self.cells[j].boundary {
                    stack.push(self.index[b]);
                }
            }
        }
        out
    }

    /// Atom (rank-1) cells below the given cell, as sorted positions.
    fn atoms(&self, i: usize) -> BTreeSet<usize> {
        self.closure(i).into_iter().filter(|&j| self.cells[j].rank == 1).collect()
    }

    /// Ids of the cells that appear in no boundary list, in `(rank, id)`
    /// order.
    pub fn maximal_cell_ids(&self) -> Vec<String> {
        self.maximal_cells().into_iter().map(|i| self.cells[i].id.clone()).collect()
    }

    /// Ids of the atoms below the given cell, sorted.
    pub fn atom_ids(&self, id: &str) -> Result<Vec<String>, PosetError> {
        let i = self.idx(id)?;
        Ok(self.atoms(i).into_iter().map(|j| self.cells[j].id.clone()).collect())
    }

    /// Positions of cells that appear in no boundary list.
    fn maximal_cells(&self) -> Vec<usize> {
        let mut covered = vec![false; self.cells.len()];
        for c in &self.cells {
            for b in &c.boundary {
                covered[self.index[b]] = true;
            }
        }
        (0..self.cells.len()).filter(|&i| !covered[i]).collect()
    }

    /// Certifies that every lower interval `[bottom, cell]` is a Boolean
    /// lattice: the cell has as many atoms as its rank, the interval has
    /// `2^rank - 1` cells with pairwise distinct atom sets, and the
    /// boundary realizes every one-smaller subset of the atoms.
    pub fn validate(&self) -> Result<(), PosetError> {
        for (i, c) in self.cells.iter().enumerate() {
            let not_boolean = |reason: String| PosetError::NotBoolean {
                cell: c.id.clone(),
                reason,
            };
            let atoms = self.atoms(i);
            if atoms.len() != c.rank {
                return Err(not_boolean(format!(
                    "{} atoms under a rank-{} cell",
                    atoms.len(),
                    c.rank
                )));
            }
            let closure = self.closure(i);
            if closure.len() != (1usize << c.rank) - 1 {
                return Err(not_boolean(format!(
                    "interval has {} cells, expected {}",
                    closure.len() + 1,
                    1usize << c.rank
                )));
            }
            let mut seen: BTreeSet<Vec<usize>> = BTreeSet::new();
            for &j in &closure {
                let a: Vec<usize> = self.atoms(j).into_iter().collect();
                if !seen.insert(a) {
                    return Err(not_boolean("two cells share an atom set".to_string()));
                }
            }
            if c.rank >= 2 {
                let atom_list: Vec<usize> = atoms.iter().copied().collect();
                let expected: BTreeSet<Vec<usize>> =
                    k_subsets(&atom_list, c.rank - 1).into_iter().collect();
                let found: BTreeSet<Vec<usize>> = c
                    .boundary
                    .iter()
                    .map(|b| self.atoms(self.index[b]).into_iter().collect())
                    .collect();
                if expected != found {
                    return Err(not_boolean(
                        "boundary does not realize every one-smaller atom subset".to_string(),
                    ));
                }
                if c.boundary.len() != c.rank {
                    return Err(PosetError::BadBoundaryCount { cell: c.id.clone() });
                }
            }
        }
        Ok(())
    }
}

/// f- and h-vector of a poset, counting cells by rank.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PosetProfile {
    pub d: usize,
    /// `(f_{-1}, f_0, ..., f_{d-1})`: `f_{j-1}` counts rank-`j` cells.
    pub f: Vec<i64>,
    pub h: Vec<i64>,
}

/// Counts cells by rank and applies the standard f-to-h transform.
pub fn poset_f_h(p: &SimplicialPoset) -> PosetProfile {
    let d = p.rank_d();
    let mut f = vec![0i64; d + 1];
    f[0] = 1;
    for c in &p.cells {
        f[c.rank] += 1;
    }
    let h = h_vector(&f, d);
    PosetProfile { d, f, h }
}

/// The order complex of the poset minus its bottom: vertices are the cells
/// (numbered `1..=N` in `(rank, id)` order) and facets are the maximal
/// chains, collected by saturated descent from each maximal cell.
pub fn order_complex(p: &SimplicialPoset) -> Result<SimplicialComplex, PosetError> {
    let mut chains: Vec<Vec<u64>> = Vec::new();
    let mut current: Vec<u64> = Vec::new();
    for m in p.maximal_cells() {
        descend(p, m, &mut current, &mut chains);
    }
    Ok(SimplicialComplex::from_facets(&chains)?)
}

fn descend(p: &SimplicialPoset, i: usize, current: &mut Vec<u64>, chains: &mut Vec<Vec<u64>>) {
    current.push(i as u64 + 1);
    if p.cells[i].boundary.is_empty() {
        chains.push(current.clone());
    } else {
        for b in &p.cells[i].boundary {
            descend(p, p.index[b], current, chains);
        }
    }
    current.pop();
}

/// The subposet of cells strictly above `cell_id`, reranked so the covers
/// of that cell become atoms.
pub fn poset_link(p: &SimplicialPoset, cell_id: &str) -> Result<SimplicialPoset, PosetError> {
    let base = p.idx(cell_id)?;
    let base_rank = p.cells[base].rank;
    let above: Vec<usize> = (0..p.cells.len())
        .filter(|&i| i != base && p.closure(i).contains(&base))
        .collect();
    if above.is_empty() {
        return Err(PosetError::NotGluable {
            cell: cell_id.to_string(),
            reason: "no cells above it; the link would be empty".to_string(),
        });
    }
    let keep: BTreeSet<usize> = above.iter().copied().collect();
    let cells: Vec<Cell> = above
        .into_iter()
        .map(|i| {
            let c = &p.cells[i];
            Cell {
                id: c.id.clone(),
                rank: c.rank - base_rank,
                boundary: c
                    .boundary
                    .iter()
                    .filter(|b| keep.contains(&p.index[b.as_str()]))
                    .cloned()
                    .collect(),
            }
        })
        .collect();
    SimplicialPoset::from_cells(cells)
}

/// `h'` of a poset: the f-to-h transform of the rank counts, corrected by
/// the reduced homology of the order complex over the given field.
pub fn h_prime_poset(
    p: &SimplicialPoset,
    field: &PrimeField,
) -> Result<(HPrimeVector, BettiVector), PosetError> {
    let profile = poset_f_h(p);
    let oc = order_complex(p)?;
    let beta = reduced_betti(&oc, field)?;
    Ok((h_prime(&profile.h, &beta), beta))
}

/// Socle-type lower bound `h'_j >= C(d,j) beta_{j-1}` evaluated on a poset
/// via its order complex.
pub fn check_main_posets(p: &SimplicialPoset, field: &PrimeField) -> Result<BoundReport, PosetError> {
    let (hp, beta) = h_prime_poset(p, field)?;
    let mut report = check_main2(&hp, &beta);
    report.name = "main-posets".to_string();
    Ok(report)
}

/// Glues two posets along one maximal cell of each: the Boolean closed
/// intervals below `facet1` and `facet2` are identified via the given atom
/// bijection. Cells keep their poset-of-origin prefix (`l:` / `r:`);
/// identified cells keep the left id.
pub fn glue(
    p1: &SimplicialPoset,
    p2: &SimplicialPoset,
    facet1: &str,
    facet2: &str,
    vertex_bijection: &[(String, String)],
) -> Result<SimplicialPoset, PosetError> {
    p1.validate()?;
    p2.validate()?;
    let f1 = p1.idx(facet1)?;
    let f2 = p2.idx(facet2)?;
    for (p, f, id) in [(p1, f1, facet1), (p2, f2, facet2)] {
        if !p.maximal_cells().contains(&f) {
            return Err(PosetError::NotGluable {
                cell: id.to_string(),
                reason: "not a maximal cell".to_string(),
            });
        }
    }
    if p1.cells[f1].rank != p2.cells[f2].rank {
        return Err(PosetError::NotGluable {
            cell: facet2.to_string(),
            reason: "facet ranks differ".to_string(),
        });
    }

    let atoms1 = p1.atoms(f1);
    let atoms2 = p2.atoms(f2);
    let mut map: BTreeMap<usize, usize> = BTreeMap::new(); // p2 atom -> p1 atom
    let mut used = BTreeSet::new();
    for (a, b) in vertex_bijection {
        let ia = p1.idx(a)?;
        let ib = p2.idx(b)?;
        if !atoms1.contains(&ia) || !atoms2.contains(&ib) {
            return Err(PosetError::BadBijection(format!(
                "({a:?}, {b:?}) is not a pair of facet atoms"
            )));
        }
        if map.insert(ib, ia).is_some() || !used.insert(ia) {
            return Err(PosetError::BadBijection(format!("atom repeated in ({a:?}, {b:?})")));
        }
    }
    if map.len() != atoms1.len() {
        return Err(PosetError::BadBijection("bijection does not cover the facet".to_string()));
    }

    // p1 cells below facet1, keyed by atom set
    let mut by_atoms: BTreeMap<Vec<usize>, usize> = BTreeMap::new();
    for i in p1.closure(f1) {
        by_atoms.insert(p1.atoms(i).into_iter().collect(), i);
    }
    // each p2 cell below facet2 is replaced by its unique p1 partner
    let mut partner: BTreeMap<usize, usize> = BTreeMap::new(); // p2 idx -> p1 idx
    for i in p2.closure(f2) {
        let image: Vec<usize> = p2.atoms(i).iter().map(|a| map[a]).collect();
        let Some(&j) = by_atoms.get(&image) else {
            return Err(PosetError::BadBijection(
                "atom bijection does not match the interval structure".to_string(),
            ));
        };
        partner.insert(i, j);
    }

    let left_id = |i: usize| format!("l:{}", p1.cells[i].id);
    let mut cells: Vec<Cell> = p1
        .cells
        .iter()
        .enumerate()
        .map(|(i, c)| Cell {
            id: left_id(i),
            rank: c.rank,
            boundary: c.boundary.iter().map(|b| left_id(p1.index[b])).collect(),
        })
        .collect();
    for (i, c) in p2.cells.iter().enumerate() {
        if partner.contains_key(&i) {
            continue;
        }
        let rename = |j: usize| match partner.get(&j) {
            Some(&l) => left_id(l),
            None => format!("r:{}", p2.cells[j].id),
        };
        cells.push(Cell {
            id: rename(i),
            rank: c.rank,
            boundary: c.boundary.iter().map(|b| rename(p2.index[b])).collect(),
        });
    }
    SimplicialPoset::from_cells(cells)
}

/// Equality certificates for a glued poset `q = glue(p1, p2, ..)`: cell
/// counts per rank satisfy `f_j(q) = f_j(p1) + f_j(p2) - C(d, j)`, and both
/// the order-complex Betti numbers and `h'` add exactly in positive
/// degrees.
pub fn check_glue_additivity(
    p1: &SimplicialPoset,
    p2: &SimplicialPoset,
    q: &SimplicialPoset,
    field: &PrimeField,
) -> Result<BoundReport, PosetError> {
    let (hp1, b1) = h_prime_poset(p1, field)?;
    let (hp2, b2) = h_prime_poset(p2, field)?;
    let (hpq, bq) = h_prime_poset(q, field)?;
    Ok(glue_additivity_from_parts(
        (&poset_f_h(p1), &hp1, &b1),
        (&poset_f_h(p2), &hp2, &b2),
        (&poset_f_h(q), &hpq, &bq),
    ))
}

/// The same certificates computed from already-derived profiles, so a
/// caller comparing many glues does not redo the homology of each summand.
pub fn glue_additivity_from_parts(
    p1: (&PosetProfile, &HPrimeVector, &BettiVector),
    p2: (&PosetProfile, &HPrimeVector, &BettiVector),
    q: (&PosetProfile, &HPrimeVector, &BettiVector),
) -> BoundReport {
    let d = q.0.d;
    let mut report = BoundReport {
        name: "glue-additivity".to_string(),
        checks: Vec::new(),
        notes: Vec::new(),
    };
    for j in 1..=d {
        push_eq_i64(
            &mut report,
            format!("rank {j} cells"),
            q.0.f[j],
            p1.0.f[j] + p2.0.f[j] - crate::util::binom(d, j),
        );
    }
    for i in 1..d {
        push_eq_i64(
            &mut report,
            format!("beta_{i}"),
            q.2.beta(i as i64) as i64,
            p1.2.beta(i as i64) as i64 + p2.2.beta(i as i64) as i64,
        );
    }
    for j in 1..=d {
        push_eq_i64(
            &mut report,
            format!("h'_{j}"),
            q.1.h_prime[j],
            p1.1.h_prime[j] + p2.1.h_prime[j],
        );
    }
    report
}

fn push_eq_i64(report: &mut BoundReport, label: String, left: i64, right: i64) {
    use crate::bounds::{BoundCheck, Verdict};
    report.checks.push(BoundCheck {
        label,
        verdict: if left == right { Verdict::Pass } else { Verdict::Fail },
        left: left.to_string(),
        right: right.to_string(),
        slack: (right - left).to_string(),
    });
}

fn subset_id(prefix: &str, s: &[u32]) -> String {
    let parts: Vec<String> = s.iter().map(|v| v.to_string()).collect();
    format!("{prefix}:{}", parts.join("."))
}

/// All nonempty subsets of `verts`, as sorted vectors.
fn nonempty_subsets(verts: &[u32]) -> Vec<Vec<u32>> {
    let mut out = Vec::new();
    for size in 1..=verts.len() {
        out.extend(k_subsets(verts, size));
    }
    out
}

fn boolean_cells(prefix: &str, verts: &[u32]) -> Vec<Cell> {
    nonempty_subsets(verts)
        .into_iter()
        .map(|s| {
            let boundary: Vec<String> = if s.len() == 1 {
                Vec::new()
            } else {
                k_subsets(&s, s.len() - 1).iter().map(|t| subset_id(prefix, t)).collect()
            };
            Cell {
                id: subset_id(prefix, &s),
                rank: s.len(),
                boundary,
            }
        })
        .collect()
}

/// The example family X(i, d): Buchsbaum simplicial posets whose
/// order-complex homology is concentrated in dimension `i - 1`
/// (`i = 0`: two disjoint solid simplices; `i = 1`: a stacked ball with
/// its two end faces identified; `i = d-2`: a doubled codimension-one
/// shell; `i = d-1`: two top cells over one boundary). The middle range
/// `2 <= i <= d-3` is not constructed.
pub fn construct_x(i: usize, d: usize) -> Result<SimplicialPoset, PosetError> {
    let verts: Vec<u32> = (1..=d as u32).collect();
    if d >= 1 && i == 0 {
        let mut cells = boolean_cells("a", &verts);
        cells.extend(boolean_cells("b", &verts));
        return SimplicialPoset::from_cells(cells);
    }
    if d >= 2 && i == d - 1 {
        // every proper subset once, plus two parallel top cells
        let mut cells: Vec<Cell> = Vec::new();
        for s in nonempty_subsets(&verts) {
            if s.len() == d {
                continue;
            }
            let boundary: Vec<String> = if s.len() == 1 {
                Vec::new()
            } else {
                k_subsets(&s, s.len() - 1).iter().map(|t| subset_id("s", t)).collect()
            };
            cells.push(Cell { id: subset_id("s", &s), rank: s.len(), boundary });
        }
        let top_boundary: Vec<String> =
            k_subsets(&verts, d - 1).iter().map(|t| subset_id("s", t)).collect();
        for top in ["T1", "T2"] {
            cells.push(Cell {
                id: top.to_string(),
                rank: d,
                boundary: top_boundary.clone(),
            });
        }
        return SimplicialPoset::from_cells(cells);
    }
    if d >= 3 && i == 1 {
        return Ok(x1_poset(d));
    }
    if d >= 4 && i == d - 2 {
        return Ok(xd2_poset(d));
    }
    Err(PosetError::UnsupportedFamily { i, d })
}

/// X(1, d): the stacked ball with facets `{j, ..., j+d-1}` for
/// `j = 1..=d` on vertices `1..=2d-1`, with the closed faces `{1..d-1}`
/// and `{d+1..2d-1}` identified by `v <-> v+d`. Faces inside the
/// identified pair merge; all other faces stay distinct cells even when
/// their vertex images coincide.
fn x1_poset(d: usize) -> SimplicialPoset {
    let dd = d as u32;
    // canonical representative of a face under the identification
    let canon = |s: &[u32]| -> Vec<u32> {
        if s.iter().all(|&v| v > dd) {
            s.iter().map(|&v| v - dd).collect()
        } else {
            s.to_vec()
        }
    };
    let mut faces: BTreeSet<Vec<u32>> = BTreeSet::new();
    for j in 1..=dd {
        let window: Vec<u32> = (j..j + dd).collect();
        for s in nonempty_subsets(&window) {
            faces.insert(canon(&s));
        }
    }
    let cells: Vec<Cell> = faces
        .iter()
        .map(|s| {
            let boundary: Vec<String> = if s.len() == 1 {
                Vec::new()
            } else {
                k_subsets(s, s.len() - 1).iter().map(|t| subset_id("f", &canon(t))).collect()
            };
            Cell { id: subset_id("f", s), rank: s.len(), boundary }
        })
        .collect();
    SimplicialPoset::from_cells(cells).expect("the identified stacked ball is coherent")
}

/// X(d-2, d): the (d-3)-skeleton of the simplex on `[d]`, a doubled pair
/// `A_i, B_i` of cells over every codimension-one atom set, and facets
/// `F_i` bounded by `B_i` together with every `A_j`, `j != i`.
fn xd2_poset(d: usize) -> SimplicialPoset {
    let verts: Vec<u32> = (1..=d as u32).collect();
    let mut cells: Vec<Cell> = Vec::new();
    for s in nonempty_subsets(&verts) {
        if s.len() > d - 2 {
            continue;
        }
        let boundary: Vec<String> = if s.len() == 1 {
            Vec::new()
        } else {
            k_subsets(&s, s.len() - 1).iter().map(|t| subset_id("s", t)).collect()
        };
        cells.push(Cell { id: subset_id("s", &s), rank: s.len(), boundary });
    }
    for i in 1..=d as u32 {
        let rest: Vec<u32> = verts.iter().copied().filter(|&v| v != i).collect();
        let boundary: Vec<String> =
            k_subsets(&rest, d - 2).iter().map(|t| subset_id("s", t)).collect();
        for name in ["A", "B"] {
            cells.push(Cell {
                id: format!("{name}{i}"),
                rank: d - 1,
                boundary: boundary.clone(),
            });
        }
    }
    for i in 1..=d {
        let mut boundary: Vec<String> = (1..=d).filter(|&j| j != i).map(|j| format!("A{j}")).collect();
        boundary.push(format!("B{i}"));
        cells.push(Cell { id: format!("F{i}"), rank: d, boundary });
    }
    SimplicialPoset::from_cells(cells).expect("the doubled shell is coherent")
}

/// The `i` values for which [`construct_x`] produces a poset at rank `d`.
pub fn available_x_indices(d: usize) -> Vec<usize> {
    let mut out = Vec::new();
    for i in 0..d {
        let supported = i == 0
            || (d >= 2 && i == d - 1)
            || (d >= 3 && i == 1)
            || (d >= 4 && i == d - 2);
        if supported {
            out.push(i);
        }
    }
    out
}
