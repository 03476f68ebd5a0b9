//! Reduced simplicial homology over a prime field and the classifiers built
//! on it: Cohen-Macaulay, Buchsbaum, homology manifold, semi-Eulerian, and
//! an orientability proxy.
//!
//! The chain complex is augmented (the empty face generates degree -1), so
//! `beta(-1) = 1` exactly for the complex `{[]}`. Boundary orientations come
//! from the lexicographic vertex order of each face; ranks are computed by
//! deterministic sparse elimination.

use crate::complex::{ComplexError, SimplicialComplex};
use crate::field::PrimeField;
use crate::matrix::{SparseMatrix, SparseVec};
use alloc::vec::Vec;
use core::fmt;

/// Errors from homology-level operations.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum HomologyError {
    Complex(ComplexError),
    /// The operation requires a pure complex.
    NotPure,
}

impl fmt::Display for HomologyError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            HomologyError::Complex(e) => write!(f, "{e}"),
            HomologyError::NotPure => write!(f, "operation requires a pure complex"),
        }
    }
}

impl core::error::Error for HomologyError {}

impl From<ComplexError> for HomologyError {
    fn from(e: ComplexError) -> Self {
        HomologyError::Complex(e)
    }
}

/// Reduced Betti numbers over one prime field.
///
/// `entries()[i]` is `dim H~_{i-1}`, for `i = 0..=d`; so `entries()[0]` is
/// the degree of the empty face (1 exactly for `{[]}`) and `entries()[d]`
/// is the top Betti number.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BettiVector {
    p: u64,
    entries: Vec<usize>,
}

impl BettiVector {
    /// Wraps raw entries (`entries[i] = dim H~_{i-1}`); used by the
    /// inequality checks when the caller supplies Betti data directly.
    pub fn from_entries(p: u64, entries: Vec<usize>) -> Self {
        BettiVector { p, entries }
    }

    pub fn p(&self) -> u64 {
        self.p
    }

    pub fn entries(&self) -> &[usize] {
        &self.entries
    }

    /// `beta(i) = dim H~_i`; indices outside the stored range are 0
    /// (homology vanishes above the dimension and below -1).
    pub fn beta(&self, i: i64) -> usize {
        let idx = i + 1;
        if idx < 0 {
            return 0;
        }
        self.entries.get(idx as usize).copied().unwrap_or(0)
    }
}

/// Reduced Betti numbers of `k` over `field`.
pub fn reduced_betti(k: &SimplicialComplex, field: &PrimeField) -> Result<BettiVector, HomologyError> {
    let faces = k.faces_by_card()?;
    let d = faces.len() - 1;
    // ranks[c] = rank of the boundary map from cardinality c to c-1
    let mut ranks = alloc::vec![0usize; d + 2];
    for c in 1..=d {
        let mut m = SparseMatrix::new(faces[c - 1].len());
        for face in &faces[c] {
            let mut col: SparseVec = Vec::with_capacity(c);
            for drop in 0..c {
                let mut sub: Vec<u32> = Vec::with_capacity(c - 1);
                sub.extend(face.iter().take(drop));
                sub.extend(face.iter().skip(drop + 1));
                let row = faces[c - 1]
                    .binary_search(&sub)
                    .expect("boundary face must be enumerated");
                let sign = if drop % 2 == 0 { 1 } else { -1 };
                col.push((row, field.from_i64(sign)));
            }
            col.sort_unstable_by_key(|e| e.0);
            m.push_col(col);
        }
        ranks[c] = m.rank(field);
    }
    let entries = (0..=d).map(|c| faces[c].len() - ranks[c] - ranks[c + 1]).collect();
    Ok(BettiVector { p: field.p(), entries })
}

/// `H~_j(lk F) = 0` for all `j < bound` (indices above the link's dimension
/// vanish automatically).
fn link_vanishes_below(
    k: &SimplicialComplex,
    face: &[u32],
    field: &PrimeField,
    bound: usize,
) -> Result<bool, HomologyError> {
    let b = reduced_betti(&k.link(face)?, field)?;
    Ok((0..bound).all(|j| b.entries().get(j).copied().unwrap_or(0) == 0))
}

/// Reisner's criterion with the global rank `d`: for every face `F`
/// (including the empty one), the link has vanishing reduced homology in all
/// degrees below `d - |F| - 1`.
pub fn is_cohen_macaulay(k: &SimplicialComplex, field: &PrimeField) -> Result<bool, HomologyError> {
    let d = k.rank_d()?;
    let faces = k.faces_by_card()?;
    for c in 0..d {
        for face in &faces[c] {
            if !link_vanishes_below(k, face, field, d - c)? {
                return Ok(false);
            }
        }
    }
    Ok(true)
}

/// Purity plus Cohen-Macaulayness of every vertex link.
///
/// Since the link of `G` inside `lk v` equals `lk ({v} ∪ G)` in the original
/// complex, running Reisner's criterion on every vertex link is the same as
/// one sweep over the nonempty faces; each link is then computed only once.
pub fn is_buchsbaum(k: &SimplicialComplex, field: &PrimeField) -> Result<bool, HomologyError> {
    let d = k.rank_d()?;
    if !k.is_pure() {
        return Ok(false);
    }
    let faces = k.faces_by_card()?;
    for c in 1..d {
        for face in &faces[c] {
            if !link_vanishes_below(k, face, field, d - c)? {
                return Ok(false);
            }
        }
    }
    Ok(true)
}

/// True iff every nonempty face's link has the reduced homology of a sphere
/// of dimension `d - |F| - 1`. Errors on non-pure input.
pub fn is_homology_manifold(k: &SimplicialComplex, field: &PrimeField) -> Result<bool, HomologyError> {
    let d = k.rank_d()?;
    if !k.is_pure() {
        return Err(HomologyError::NotPure);
    }
    let faces = k.faces_by_card()?;
    for c in 1..=d {
        for face in &faces[c] {
            let b = reduced_betti(&k.link(face)?, field)?;
            let sphere_dim_ok = (0..d - c).all(|j| b.entries().get(j).copied().unwrap_or(0) == 0)
                && b.entries().get(d - c).copied().unwrap_or(0) == 1;
            if !sphere_dim_ok {
                return Ok(false);
            }
        }
    }
    Ok(true)
}

/// True iff the complex is pure and the link of every nonempty face has the
/// Euler characteristic of the sphere of its dimension.
pub fn is_semi_eulerian(k: &SimplicialComplex) -> Result<bool, ComplexError> {
    let d = k.rank_d()?;
    if !k.is_pure() {
        return Ok(false);
    }
    let faces = k.faces_by_card()?;
    for c in 1..=d {
        for face in &faces[c] {
            let m = d as i64 - c as i64 - 1; // link dimension
            let expected = if m < 0 { 0 } else { 1 + if m % 2 == 0 { 1 } else { -1 } };
            if k.link(face)?.euler_characteristic()? != expected {
                return Ok(false);
            }
        }
    }
    Ok(true)
}

/// Orientability proxy for connected closed homology manifolds: connected
/// and `beta(d-1) = 1` over the field.
pub fn is_orientable_over(k: &SimplicialComplex, field: &PrimeField) -> Result<bool, HomologyError> {
    let d = k.rank_d()?;
    if !k.is_pure() {
        return Ok(false);
    }
    let b = reduced_betti(k, field)?;
    let connected = d == 0 || b.beta(0) == 0;
    Ok(connected && b.entries().get(d).copied().unwrap_or(0) == 1)
}
