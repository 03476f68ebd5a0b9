//! Simplicial complexes given by facet lists, with exact face enumeration:
//! f-, h- and g-vectors, links, skeleta, purity and neighborliness.
//!
//! Conventions: a complex on `n` vertices uses internal labels `1..=n` (the
//! map back to the caller's labels is retained); `d` is the rank
//! (`dim + 1`); the f-vector is `(f_{-1}, f_0, ..., f_{d-1})` with
//! `f_{-1} = 1`. The complex `{[]}` containing only the empty face has
//! `f = (1)` and `d = 0`; the void complex (no faces at all) is
//! representable but rejected by the analysis operations.

use crate::util::{binom, k_subsets};
use alloc::collections::{BTreeMap, BTreeSet};
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

/// Errors from complex construction and analysis.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum ComplexError {
    /// An empty facet appeared alongside nonempty ones, or a label was 0.
    Malformed,
    /// The operation needs at least the empty face to exist.
    VoidComplex,
    /// `link` was asked for a vertex set that is not a face.
    FaceNotFound,
    /// `skeleton` was asked for a dimension outside `0..=dim`.
    SkeletonOutOfRange { k: usize, rank: usize },
}

impl fmt::Display for ComplexError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ComplexError::Malformed => {
                write!(f, "malformed facet list: empty facet among nonempty ones or label 0")
            }
            ComplexError::VoidComplex => write!(f, "operation undefined on the void complex"),
            ComplexError::FaceNotFound => write!(f, "vertex set is not a face of the complex"),
            ComplexError::SkeletonOutOfRange { k, rank } => {
                write!(f, "skeleton dimension {k} invalid for a complex of rank {rank}")
            }
        }
    }
}

impl core::error::Error for ComplexError {}

/// A finite simplicial complex, normalized: facets are sorted vertex lists
/// over `1..=n`, deduplicated, with dominated sets removed.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SimplicialComplex {
    n: usize,
    facets: Vec<Vec<u32>>,
    labels: Vec<u64>,
}

impl SimplicialComplex {
    /// Normalizes a facet list: facets are deduplicated, dominated sets are
    /// removed, and vertices are renumbered `1..=n` (ascending in the
    /// original labels; the map is retained, see [`original_labels`]).
    ///
    /// An empty input list yields the void complex; `[[]]` yields the
    /// complex `{[]}`. An empty facet alongside nonempty ones is rejected,
    /// as is any zero label.
    ///
    /// [`original_labels`]: SimplicialComplex::original_labels
    pub fn from_facets(facet_list: &[Vec<u64>]) -> Result<Self, ComplexError> {
        let mut sets: Vec<Vec<u64>> = Vec::with_capacity(facet_list.len());
        for f in facet_list {
            if f.contains(&0) {
                return Err(ComplexError::Malformed);
            }
            let mut f = f.clone();
            f.sort_unstable();
            f.dedup();
            sets.push(f);
        }
        sets.sort();
        sets.dedup();
        if sets.iter().any(|f| f.is_empty()) && sets.len() > 1 {
            return Err(ComplexError::Malformed);
        }
        // drop dominated sets
        let mut kept: Vec<Vec<u64>> = Vec::with_capacity(sets.len());
        'outer: for (i, f) in sets.iter().enumerate() {
            for (j, g) in sets.iter().enumerate() {
                if i != j && f.len() <= g.len() && is_subset_u64(f, g) {
                    continue 'outer;
                }
            }
            kept.push(f.clone());
        }
        // renumber ascending in original labels
        let labels: Vec<u64> = {
            let mut s: BTreeSet<u64> = BTreeSet::new();
            for f in &kept {
                s.extend(f.iter().copied());
            }
            s.into_iter().collect()
        };
        let index: BTreeMap<u64, u32> =
            labels.iter().enumerate().map(|(i, &l)| (l, (i + 1) as u32)).collect();
        let mut facets: Vec<Vec<u32>> =
            kept.iter().map(|f| f.iter().map(|v| index[v]).collect()).collect();
        facets.sort();
        Ok(SimplicialComplex { n: labels.len(), facets, labels })
    }

    /// Number of vertices.
    pub fn n(&self) -> usize {
        self.n
    }

    /// `original_labels()[v-1]` is the caller's label for internal vertex `v`.
    pub fn original_labels(&self) -> &[u64] {
        &self.labels
    }

    /// Facets as sorted internal-label lists, in lexicographic order.
    pub fn facets(&self) -> &[Vec<u32>] {
        &self.facets
    }

    /// Facets translated back to the caller's labels (each sorted).
    pub fn facets_original_labels(&self) -> Vec<Vec<u64>> {
        self.facets
            .iter()
            .map(|f| {
                let mut g: Vec<u64> = f.iter().map(|&v| self.labels[v as usize - 1]).collect();
                g.sort_unstable();
                g
            })
            .collect()
    }

    pub fn is_void(&self) -> bool {
        self.facets.is_empty()
    }

    fn reject_void(&self) -> Result<(), ComplexError> {
        if self.is_void() {
            Err(ComplexError::VoidComplex)
        } else {
            Ok(())
        }
    }

    /// The rank `d = dim + 1`; 0 for the complex `{[]}`.
    pub fn rank_d(&self) -> Result<usize, ComplexError> {
        self.reject_void()?;
        Ok(self.facets.iter().map(|f| f.len()).max().unwrap_or(0))
    }

    /// All faces grouped by cardinality: entry `k` lists the `k`-element
    /// faces in lexicographic order (entry 0 is the empty face).
    pub fn faces_by_card(&self) -> Result<Vec<Vec<Vec<u32>>>, ComplexError> {
        let d = self.rank_d()?;
        let mut by_card: Vec<BTreeSet<Vec<u32>>> = vec![BTreeSet::new(); d + 1];
        for f in &self.facets {
            for k in 0..=f.len() {
                for s in k_subsets(f, k) {
                    by_card[k].insert(s);
                }
            }
        }
        Ok(by_card.into_iter().map(|s| s.into_iter().collect()).collect())
    }

    /// Membership test for an arbitrary sorted vertex set.
    pub fn is_face(&self, face: &[u32]) -> bool {
        if face.is_empty() {
            return !self.is_void();
        }
        self.facets.iter().any(|f| is_subset_u32(face, f))
    }

    /// `(f_{-1}, f_0, ..., f_{d-1})`.
    pub fn f_vector(&self) -> Result<Vec<i64>, ComplexError> {
        Ok(self.faces_by_card()?.iter().map(|faces| faces.len() as i64).collect())
    }

    /// Alternating sum `f_0 - f_1 + ...` (the empty face is not counted).
    pub fn euler_characteristic(&self) -> Result<i64, ComplexError> {
        let f = self.f_vector()?;
        Ok(f.iter()
            .skip(1)
            .enumerate()
            .map(|(j, &c)| if j % 2 == 0 { c } else { -c })
            .sum())
    }

    /// The link of `face` (internal labels): all `G` with `G ∩ F = ∅` and
    /// `G ∪ F` a face, renormalized as its own complex.
    pub fn link(&self, face: &[u32]) -> Result<SimplicialComplex, ComplexError> {
        self.reject_void()?;
        let mut face = face.to_vec();
        face.sort_unstable();
        if !self.is_face(&face) {
            return Err(ComplexError::FaceNotFound);
        }
        let mut link_facets: Vec<Vec<u64>> = Vec::new();
        for f in &self.facets {
            if is_subset_u32(&face, f) {
                link_facets
                    .push(f.iter().filter(|v| !face.contains(v)).map(|&v| v as u64).collect());
            }
        }
        SimplicialComplex::from_facets(&link_facets)
    }

    /// Whether all facets share one dimension.
    pub fn is_pure(&self) -> bool {
        match self.facets.first() {
            None => true,
            Some(f0) => self.facets.iter().all(|f| f.len() == f0.len()),
        }
    }

    /// The `k`-skeleton, `0 <= k <= dim`.
    pub fn skeleton(&self, k: usize) -> Result<SimplicialComplex, ComplexError> {
        let d = self.rank_d()?;
        if d == 0 || k > d - 1 {
            return Err(ComplexError::SkeletonOutOfRange { k, rank: d });
        }
        let faces = self.faces_by_card()?;
        let mut facet_list: Vec<Vec<u64>> = Vec::new();
        for card in 1..=k + 1 {
            for f in &faces[card] {
                facet_list.push(f.iter().map(|&v| v as u64).collect());
            }
        }
        SimplicialComplex::from_facets(&facet_list)
    }

    /// True iff every `(k+1)`-subset of the vertex set is a face.
    pub fn is_neighborly(&self, k: usize) -> bool {
        let verts: Vec<u32> = (1..=self.n as u32).collect();
        k_subsets(&verts, k + 1).iter().all(|s| self.is_face(s))
    }

    /// Largest `m >= 1` such that every `m`-subset of the vertices is a face
    /// (`0` for complexes with missing vertices, i.e. never here after
    /// normalization unless the complex is `{[]}`).
    pub fn neighborliness(&self) -> usize {
        let cap = match self.rank_d() {
            Ok(d) => d,
            Err(_) => return 0,
        };
        let mut m = 0;
        while m < cap && self.is_neighborly(m) {
            m += 1;
        }
        m
    }
}

fn is_subset_u64(a: &[u64], b: &[u64]) -> bool {
    a.iter().all(|x| b.binary_search(x).is_ok())
}

fn is_subset_u32(a: &[u32], b: &[u32]) -> bool {
    a.iter().all(|x| b.binary_search(x).is_ok())
}

/// h-vector from the f-vector by the standard polynomial identity
/// `sum_i h_i x^{d-i} = sum_i f_{i-1} (x-1)^{d-i}`, i.e.
/// `h_j = sum_{i=0}^{j} (-1)^{j-i} C(d-i, j-i) f_{i-1}`.
pub fn h_vector(f: &[i64], d: usize) -> Vec<i64> {
    assert!(f.len() == d + 1, "f-vector length {} incompatible with d={d}", f.len());
    (0..=d)
        .map(|j| {
            (0..=j)
                .map(|i| {
                    let c = binom(d - i, j - i) * f[i];
                    if (j - i) % 2 == 0 {
                        c
                    } else {
                        -c
                    }
                })
                .sum()
        })
        .collect()
}

/// Inverse transform: `f_{j-1} = sum_{i=0}^{j} C(d-i, j-i) h_i`.
pub fn f_from_h(h: &[i64], d: usize) -> Vec<i64> {
    assert!(h.len() == d + 1, "h-vector length {} incompatible with d={d}", h.len());
    (0..=d).map(|j| (0..=j).map(|i| binom(d - i, j - i) * h[i]).sum()).collect()
}

/// g-vector `(g_0, ..., g_{floor(d/2)})` with `g_0 = 1`,
/// `g_i = h_i - h_{i-1}`.
pub fn g_vector(h: &[i64]) -> Vec<i64> {
    let d = h.len().saturating_sub(1);
    let mut g = vec![1i64];
    for i in 1..=d / 2 {
        g.push(h[i] - h[i - 1]);
    }
    g
}

/// The identity `g_2 = f_1 - d*f_0 + C(d+1, 2)` computed directly from the
/// f-vector (for cross-checking against [`g_vector`]).
pub fn g2_from_f(f: &[i64], d: usize) -> i64 {
    let f0 = f.get(1).copied().unwrap_or(0);
    let f1 = f.get(2).copied().unwrap_or(0);
    f1 - d as i64 * f0 + binom(d + 1, 2)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn complex(facets: &[&[u64]]) -> SimplicialComplex {
        let v: Vec<Vec<u64>> = facets.iter().map(|f| f.to_vec()).collect();
        SimplicialComplex::from_facets(&v).unwrap()
    }

    #[test]
    fn normalization_rules() {
        let k = complex(&[&[1, 2, 3], &[1, 2]]);
        assert_eq!(k.facets(), &[vec![1, 2, 3]]);

        let relabeled = complex(&[&[5, 9], &[9, 11]]);
        assert_eq!(relabeled.facets(), &[vec![1, 2], vec![2, 3]]);
        assert_eq!(relabeled.original_labels(), &[5, 9, 11]);

        assert_eq!(
            SimplicialComplex::from_facets(&[vec![], vec![1]]),
            Err(ComplexError::Malformed)
        );
        assert_eq!(SimplicialComplex::from_facets(&[vec![0, 1]]), Err(ComplexError::Malformed));

        let empty = SimplicialComplex::from_facets(&[vec![]]).unwrap();
        assert_eq!(empty.f_vector().unwrap(), vec![1]);
        assert_eq!(empty.rank_d().unwrap(), 0);

        let void = SimplicialComplex::from_facets(&[]).unwrap();
        assert!(void.is_void());
        assert_eq!(void.f_vector(), Err(ComplexError::VoidComplex));
    }

    #[test]
    fn triangle_boundary_counts() {
        let k = complex(&[&[1, 2], &[2, 3], &[1, 3]]);
        assert_eq!(k.f_vector().unwrap(), vec![1, 3, 3]);
        assert_eq!(k.rank_d().unwrap(), 2);
        assert_eq!(k.euler_characteristic().unwrap(), 0);
    }

    #[test]
    fn h_vector_examples() {
        assert_eq!(h_vector(&[1, 4, 6, 4], 3), vec![1, 1, 1, 1]);
        assert_eq!(h_vector(&[1, 7, 21, 14], 3), vec![1, 4, 10, -1]);
        assert_eq!(h_vector(&[1, 6, 15, 10], 3), vec![1, 3, 6, 0]);
        assert_eq!(f_from_h(&[1, 4, 10, -1], 3), vec![1, 7, 21, 14]);
    }

    #[test]
    fn g_vector_examples() {
        assert_eq!(g_vector(&[1, 1, 1, 1]), vec![1, 0]);
        assert_eq!(g_vector(&[1, 4, 10, -1]), vec![1, 3]);
    }

    #[test]
    fn links_and_purity() {
        let tetra = complex(&[&[1, 2, 3, 4]]);
        let b = complex(&[&[2, 3], &[2, 4], &[3, 4]]);
        let lk = tetra.link(&[1]).unwrap();
        // link of a vertex of the solid tetrahedron is the opposite triangle
        assert_eq!(lk.f_vector().unwrap(), vec![1, 3, 3, 1]);
        assert_eq!(b.f_vector().unwrap(), vec![1, 3, 3]);
        assert_eq!(tetra.link(&[]).unwrap(), tetra);
        assert_eq!(tetra.link(&[9]), Err(ComplexError::FaceNotFound));

        assert!(!complex(&[&[1, 2, 3], &[3, 4]]).is_pure());
        // link of a facet is the empty complex {[]}
        let lk_top = tetra.link(&[1, 2, 3, 4]).unwrap();
        assert_eq!(lk_top.f_vector().unwrap(), vec![1]);
    }

    #[test]
    fn skeleton_and_neighborliness() {
        let solid = complex(&[&[1, 2, 3, 4]]);
        let skel = solid.skeleton(1).unwrap();
        assert_eq!(skel.f_vector().unwrap(), vec![1, 4, 6]); // K4
        assert_eq!(solid.skeleton(3).unwrap(), solid); // top skeleton is the complex
        assert!(solid.skeleton(4).is_err());
        assert!(solid.is_neighborly(1));
        assert_eq!(solid.neighborliness(), 4); // every vertex subset is a face

        let boundary = complex(&[&[1, 2, 3], &[1, 2, 4], &[1, 3, 4], &[2, 3, 4]]);
        assert!(boundary.skeleton(3).is_err()); // rank 3: only k <= 2
        assert_eq!(boundary.neighborliness(), 3);

        let square = complex(&[&[1, 2], &[2, 3], &[3, 4], &[1, 4]]);
        assert!(square.is_neighborly(0));
        assert!(!square.is_neighborly(1)); // {1,3} is not an edge
        assert_eq!(square.neighborliness(), 1);

        assert_eq!(square.facets_original_labels(), vec![
            vec![1, 2],
            vec![1, 4],
            vec![2, 3],
            vec![3, 4]
        ]);
    }
}
