//! The face ring of a complex over a prime field, graded by degree, and its
//! Artinian quotient by a random linear system of parameters: monomial
//! bases, quotient dimensions, socle dimensions, kernel dimensions of a
//! random linear form, and the socle-trimmed dimension vector.
//!
//! All randomness is drawn from explicitly seeded ChaCha streams, so every
//! result is reproducible from the seeds recorded in the outputs.

use crate::complex::{ComplexError, SimplicialComplex};
use crate::field::PrimeField;
use crate::matrix::{RowEchelon, SparseMatrix, SparseVec};
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;
use rand_chacha::rand_core::SeedableRng;
use rand_chacha::ChaCha8Rng;
use rand_core::RngCore;

/// Attempts made by [`random_lsop`] before giving up. Sized for the small
/// fields: over F_2 a certified system can be a ~0.3% event per draw, so a
/// four-digit budget keeps the search reliable while staying well under a
/// second (each attempt is a handful of tiny rank checks).
pub const DEFAULT_LSOP_TRIES: u32 = 4000;

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum FaceRingError {
    Complex(ComplexError),
    /// No random linear system of parameters passed the facet-rank
    /// certificate within the retry budget.
    LsopNotFound { p: u64, seed: u64, tries: u32 },
}

impl From<ComplexError> for FaceRingError {
    fn from(e: ComplexError) -> Self {
        FaceRingError::Complex(e)
    }
}

impl fmt::Display for FaceRingError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            FaceRingError::Complex(e) => write!(f, "{e}"),
            FaceRingError::LsopNotFound { p, seed, tries } => write!(
                f,
                "no linear system of parameters found over F_{p} (seed {seed:#x}, {tries} tries); \
                 the field may be too small for this complex"
            ),
        }
    }
}

impl core::error::Error for FaceRingError {}

/// Monomials of degree `j` supported on faces: sorted vertex multisets
/// (internal labels), in lexicographic order. Degree 0 is `[[]]`.
pub fn monomial_basis(k: &SimplicialComplex, j: usize) -> Result<Vec<Vec<u32>>, ComplexError> {
    k.rank_d()?; // reject the void complex
    let n = k.n() as u32;
    let mut out = Vec::new();
    let mut prefix: Vec<u32> = Vec::with_capacity(j);
    gen_monomials(k, n, j, 1, &mut prefix, &mut out);
    Ok(out)
}

fn gen_monomials(
    k: &SimplicialComplex,
    n: u32,
    remaining: usize,
    min_v: u32,
    prefix: &mut Vec<u32>,
    out: &mut Vec<Vec<u32>>,
) {
    if remaining == 0 {
        out.push(prefix.clone());
        return;
    }
    for v in min_v..=n {
        // the support so far is a face; extending by v keeps it sorted
        if prefix.last() != Some(&v) {
            let mut support = support_of(prefix);
            match support.binary_search(&v) {
                Ok(_) => {}
                Err(pos) => support.insert(pos, v),
            }
            if !k.is_face(&support) {
                continue;
            }
        }
        prefix.push(v);
        gen_monomials(k, n, remaining - 1, v, prefix, out);
        prefix.pop();
    }
}

fn support_of(monomial: &[u32]) -> Vec<u32> {
    let mut s = monomial.to_vec();
    s.dedup();
    s
}

/// A certified linear system of parameters for the face ring: a `d x n`
/// coefficient matrix over the field, together with the seed that produced
/// it and the number of attempts used.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LsopSet {
    field: PrimeField,
    /// `theta[t][v-1]` is the coefficient of `x_v` in the `t`-th form.
    theta: Vec<Vec<u64>>,
    seed: u64,
    tries: u32,
}

impl LsopSet {
    pub fn field(&self) -> PrimeField {
        self.field
    }

    pub fn theta(&self) -> &[Vec<u64>] {
        &self.theta
    }

    pub fn seed(&self) -> u64 {
        self.seed
    }

    pub fn tries(&self) -> u32 {
        self.tries
    }
}

/// Facet-rank certificate: for every facet `F`, the `|F|` columns of
/// `theta` indexed by `F` must be linearly independent.
fn certify(k: &SimplicialComplex, field: &PrimeField, theta: &[Vec<u64>]) -> bool {
    let d = theta.len();
    for facet in k.facets() {
        let mut m = SparseMatrix::new(d);
        for &v in facet {
            let col: SparseVec = (0..d)
                .filter_map(|t| {
                    let c = theta[t][v as usize - 1];
                    if c == 0 {
                        None
                    } else {
                        Some((t, c))
                    }
                })
                .collect();
            m.push_col(col);
        }
        if m.rank(field) != facet.len() {
            return false;
        }
    }
    true
}

/// Draws `d x n` coefficient matrices from a ChaCha stream seeded with
/// `seed` until one passes the facet-rank certificate, up to `limit` tries.
pub fn random_lsop_with_limit(
    k: &SimplicialComplex,
    field: &PrimeField,
    seed: u64,
    limit: u32,
) -> Result<LsopSet, FaceRingError> {
    let d = k.rank_d()?;
    let n = k.n();
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    for attempt in 1..=limit {
        let theta: Vec<Vec<u64>> =
            (0..d).map(|_| (0..n).map(|_| field.uniform(&mut rng)).collect()).collect();
        if certify(k, field, &theta) {
            return Ok(LsopSet { field: *field, theta, seed, tries: attempt });
        }
    }
    Err(FaceRingError::LsopNotFound { p: field.p(), seed, tries: limit })
}

/// [`random_lsop_with_limit`] with the default retry budget.
pub fn random_lsop(
    k: &SimplicialComplex,
    field: &PrimeField,
    seed: u64,
) -> Result<LsopSet, FaceRingError> {
    random_lsop_with_limit(k, field, seed, DEFAULT_LSOP_TRIES)
}

/// Per-degree data for the quotient `A = k[x]/I_K/(theta)`: the monomial
/// basis of the face ring, a row-echelon basis of the ideal `(theta)` in
/// that degree, and the surviving (complement) monomial positions.
struct DegreeData {
    monomials: Vec<Vec<u32>>,
    ideal: RowEchelon,
    survivors: Vec<usize>,
}

struct Degrees {
    d: usize,
    per: Vec<DegreeData>, // indices 0..=d+1
}

fn compute_degrees(k: &SimplicialComplex, lsop: &LsopSet) -> Result<Degrees, FaceRingError> {
    let d = k.rank_d()?;
    let field = lsop.field;
    let mut per: Vec<DegreeData> = Vec::with_capacity(d + 2);
    for j in 0..=d + 1 {
        let monomials = monomial_basis(k, j)?;
        let mut ideal = RowEchelon::new(field, monomials.len());
        if j > 0 {
            let below = &per[j - 1].monomials;
            for m in below {
                for t in 0..d {
                    let mut col: SparseVec = Vec::new();
                    for v in 1..=k.n() as u32 {
                        let c = lsop.theta[t][v as usize - 1];
                        if c == 0 {
                            continue;
                        }
                        if let Some(idx) = product_index(&monomials, k, m, v) {
                            col.push((idx, c));
                        }
                    }
                    col.sort_unstable_by_key(|e| e.0);
                    if !col.is_empty() {
                        ideal.insert(col);
                    }
                }
            }
        }
        let survivors = ideal.complement_cols();
        per.push(DegreeData { monomials, ideal, survivors });
    }
    Ok(Degrees { d, per })
}

/// Index of `m * x_v` in the degree-`(|m|+1)` basis, or `None` if its
/// support is not a face (the product is zero in the face ring).
fn product_index(
    basis_above: &[Vec<u32>],
    k: &SimplicialComplex,
    m: &[u32],
    v: u32,
) -> Option<usize> {
    let mut prod = m.to_vec();
    let pos = prod.partition_point(|&x| x <= v);
    prod.insert(pos, v);
    let support = support_of(&prod);
    if !k.is_face(&support) {
        return None;
    }
    basis_above.binary_search(&prod).ok()
}

impl Degrees {
    /// Coordinates of `m * x_v` on the surviving monomials of degree
    /// `j + 1`, positions indexed into `survivors`; `None` when the product
    /// is zero in the quotient's ambient face ring.
    fn product_in_quotient(
        &self,
        k: &SimplicialComplex,
        j: usize,
        m: &[u32],
        v: u32,
    ) -> Option<SparseVec> {
        let above = &self.per[j + 1];
        let idx = product_index(&above.monomials, k, m, v)?;
        let nf = above.ideal.reduce(vec![(idx, 1)]);
        Some(
            nf.into_iter()
                .map(|(col, c)| {
                    let pos = above
                        .survivors
                        .binary_search(&col)
                        .expect("normal forms live on surviving columns");
                    (pos, c)
                })
                .collect(),
        )
    }

    fn q(&self) -> Vec<usize> {
        self.per.iter().map(|dd| dd.survivors.len()).collect()
    }

    /// Socle dimensions: for each `j = 0..=d`, the kernel of the stacked
    /// multiplication maps by every vertex variable, `A_j -> (A_{j+1})^n`.
    fn socle(&self, k: &SimplicialComplex) -> Vec<usize> {
        let field = self.per[0].ideal.field();
        let n = k.n();
        let mut s = Vec::with_capacity(self.d + 1);
        for j in 0..=self.d {
            let here = &self.per[j];
            let above_dim = self.per[j + 1].survivors.len();
            let mut stacked = SparseMatrix::new(n * above_dim);
            for &col in &here.survivors {
                let m = &here.monomials[col];
                let mut column: SparseVec = Vec::new();
                for v in 1..=n as u32 {
                    if let Some(coords) = self.product_in_quotient(k, j, m, v) {
                        let offset = (v as usize - 1) * above_dim;
                        column.extend(coords.into_iter().map(|(pos, c)| (offset + pos, c)));
                    }
                }
                column.sort_unstable_by_key(|e| e.0);
                stacked.push_col(column);
            }
            s.push(stacked.kernel_dim(&field));
        }
        s
    }

    /// Kernel dimensions of multiplication by one linear form with
    /// coefficients drawn from `omega_seed`, `A_j -> A_{j+1}`, `j = 0..=d`.
    fn kernel(&self, k: &SimplicialComplex, omega_seed: u64) -> Vec<usize> {
        let field = self.per[0].ideal.field();
        let n = k.n();
        let mut rng = ChaCha8Rng::seed_from_u64(omega_seed);
        let omega: Vec<u64> = (0..n).map(|_| field.uniform(&mut rng)).collect();
        let mut out = Vec::with_capacity(self.d + 1);
        for j in 0..=self.d {
            let here = &self.per[j];
            let above_dim = self.per[j + 1].survivors.len();
            let mut mat = SparseMatrix::new(above_dim);
            for &col in &here.survivors {
                let m = &here.monomials[col];
                let mut acc: Vec<u64> = vec![0; above_dim];
                for v in 1..=n as u32 {
                    let c = omega[v as usize - 1];
                    if c == 0 {
                        continue;
                    }
                    if let Some(coords) = self.product_in_quotient(k, j, m, v) {
                        for (pos, x) in coords {
                            acc[pos] = field.add(acc[pos], field.mul(c, x));
                        }
                    }
                }
                let column: SparseVec =
                    acc.into_iter().enumerate().filter(|&(_, x)| x != 0).collect();
                mat.push_col(column);
            }
            out.push(mat.kernel_dim(&field));
        }
        out
    }
}

/// `dim A_j` for `j = 0..=d+1` where `A` is the face ring modulo the lsop.
pub fn quotient_dims(
    k: &SimplicialComplex,
    lsop: &LsopSet,
) -> Result<Vec<usize>, FaceRingError> {
    Ok(compute_degrees(k, lsop)?.q())
}

/// Dimension of the degree-`j` part of the socle `{a : x_v a = 0 for all v}`
/// of the quotient, for `j = 0..=d`.
pub fn socle_dims(k: &SimplicialComplex, lsop: &LsopSet) -> Result<Vec<usize>, FaceRingError> {
    let degrees = compute_degrees(k, lsop)?;
    Ok(degrees.socle(k))
}

/// `dim ker(mult by omega: A_j -> A_{j+1})` for `j = 0..=d`, with the
/// coefficients of `omega` drawn from `omega_seed`. Degree 0 is computed
/// like every other degree; the kernel-vs-socle comparisons used by the
/// inequality suites only consult `0 < j <= d`.
pub fn kernel_dims(
    k: &SimplicialComplex,
    lsop: &LsopSet,
    omega_seed: u64,
) -> Result<Vec<usize>, FaceRingError> {
    let degrees = compute_degrees(k, lsop)?;
    Ok(degrees.kernel(k, omega_seed))
}

/// The socle-trimmed dimension vector
/// `(q_0, q_1 - s_1, ..., q_{d-1} - s_{d-1}, q_d)`; `(1)` for the complex
/// whose only face is empty.
pub fn hpp_ring_dims(
    k: &SimplicialComplex,
    lsop: &LsopSet,
) -> Result<Vec<usize>, FaceRingError> {
    let degrees = compute_degrees(k, lsop)?;
    Ok(hpp_from(&degrees.q(), &degrees.socle(k)))
}

fn hpp_from(q: &[usize], s: &[usize]) -> Vec<usize> {
    let d = q.len() - 2; // q runs 0..=d+1
    let mut out = Vec::with_capacity(d + 1);
    for j in 0..=d {
        if j == 0 || j == d {
            out.push(q[j]);
        } else {
            out.push(q[j] - s[j]);
        }
    }
    out
}

/// Everything the quotient pipeline produces for one `(complex, field,
/// seed)` triple, with the seeds recorded so any value can be recomputed.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GradedQuotient {
    pub p: u64,
    /// Master seed this computation was derived from.
    pub seed: u64,
    pub lsop_seed: u64,
    pub omega_seed: u64,
    /// Lsop attempts used.
    pub tries: u32,
    /// `dim A_j`, `j = 0..=d+1`.
    pub q: Vec<usize>,
    /// Socle dimensions, `j = 0..=d`.
    pub s: Vec<usize>,
    /// Kernel dimensions of the random linear form, `j = 0..=d`.
    pub k: Vec<usize>,
    /// `(q_0, q_1 - s_1, ..., q_{d-1} - s_{d-1}, q_d)`.
    pub hpp: Vec<usize>,
}

impl GradedQuotient {
    /// Runs the whole pipeline: the master seed feeds one ChaCha stream
    /// whose first two outputs seed the lsop search and the linear form.
    pub fn compute(
        k: &SimplicialComplex,
        field: &PrimeField,
        seed: u64,
    ) -> Result<GradedQuotient, FaceRingError> {
        let mut master = ChaCha8Rng::seed_from_u64(seed);
        let lsop_seed = master.next_u64();
        let omega_seed = master.next_u64();
        let lsop = random_lsop(k, field, lsop_seed)?;
        let degrees = compute_degrees(k, &lsop)?;
        let q = degrees.q();
        let s = degrees.socle(k);
        let kv = degrees.kernel(k, omega_seed);
        debug_assert!(
            s.iter().zip(&kv).all(|(a, b)| a <= b),
            "the socle sits inside the kernel of any linear form"
        );
        let hpp = hpp_from(&q, &s);
        Ok(GradedQuotient {
            p: field.p(),
            seed,
            lsop_seed,
            omega_seed,
            tries: lsop.tries,
            q,
            s,
            k: kv,
            hpp,
        })
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::complex::h_vector;
    use crate::constructions::{corpus_entry, simplex_boundary, small_manifold};
    use crate::util::binom;

    fn field(p: u64) -> PrimeField {
        PrimeField::new(p).unwrap()
    }

    #[test]
    fn monomial_bases() {
        let tri = simplex_boundary(2).unwrap();
        assert_eq!(monomial_basis(&tri, 0).unwrap(), vec![Vec::<u32>::new()]);
        assert_eq!(
            monomial_basis(&tri, 1).unwrap(),
            vec![vec![1], vec![2], vec![3]]
        );
        assert_eq!(
            monomial_basis(&tri, 2).unwrap(),
            vec![vec![1, 1], vec![1, 2], vec![1, 3], vec![2, 2], vec![2, 3], vec![3, 3]]
        );
        // no monomial is supported on the non-face {1,2,3}
        assert!(monomial_basis(&tri, 3).unwrap().iter().all(|m| support_of(m).len() <= 2));

        let empty = SimplicialComplex::from_facets(&[vec![]]).unwrap();
        assert_eq!(monomial_basis(&empty, 0).unwrap(), vec![Vec::<u32>::new()]);
        assert!(monomial_basis(&empty, 1).unwrap().is_empty());
    }

    #[test]
    fn face_ring_dimension_formula() {
        // dim k[K]_j = sum_i f_{i-1} * C(j-1, i-1)
        for name in ["torus_7", "rp2_6", "cyclic_4_8"] {
            let k = corpus_entry(name).unwrap().build().unwrap();
            let f = k.f_vector().unwrap();
            let d = k.rank_d().unwrap();
            for j in 1..=d + 1 {
                let expect: i64 =
                    (1..f.len()).map(|i| f[i] * binom(j - 1, i - 1)).sum();
                assert_eq!(
                    monomial_basis(&k, j).unwrap().len() as i64,
                    expect,
                    "{name} degree {j}"
                );
            }
        }
    }

    #[test]
    fn lsop_search_and_failure() {
        let k = simplex_boundary(3).unwrap();
        let lsop = random_lsop(&k, &field(32003), 7).unwrap();
        assert_eq!(lsop.tries(), 1);
        assert_eq!(lsop.theta().len(), 3);
        assert!(certify(&k, &field(32003), lsop.theta()));

        // over F_2 the Klein bottle admits no certified system: eight
        // vertices share seven nonzero columns, and every assignment
        // leaves some facet singular
        let klein = small_manifold("klein_8").unwrap();
        let err = random_lsop_with_limit(&klein, &field(2), 5, 40).unwrap_err();
        assert_eq!(err, FaceRingError::LsopNotFound { p: 2, seed: 5, tries: 40 });
    }

    #[test]
    fn sphere_quotients_match_h() {
        let k = simplex_boundary(3).unwrap();
        let lsop = random_lsop(&k, &field(32003), 11).unwrap();
        assert_eq!(quotient_dims(&k, &lsop).unwrap(), vec![1, 1, 1, 1, 0]);
        assert_eq!(socle_dims(&k, &lsop).unwrap(), vec![0, 0, 0, 1]);
        assert_eq!(hpp_ring_dims(&k, &lsop).unwrap(), vec![1, 1, 1, 1]);
        let kd = kernel_dims(&k, &lsop, 23).unwrap();
        assert_eq!(kd, vec![0, 0, 0, 1]);
    }

    #[test]
    fn torus_quotient_profile() {
        let k = small_manifold("torus_7").unwrap();
        let h = h_vector(&k.f_vector().unwrap(), 3);
        assert_eq!(h, vec![1, 4, 10, -1]);
        let lsop = random_lsop(&k, &field(32003), 11).unwrap();
        let q = quotient_dims(&k, &lsop).unwrap();
        assert_eq!(q, vec![1, 4, 10, 1, 0]); // h' of the torus, then 0
        let s = socle_dims(&k, &lsop).unwrap();
        assert_eq!(s[2], 6, "socle bound C(3,2)*beta_1 = 6 is attained generically");
        assert_eq!(s[3], 1);
        let kd = kernel_dims(&k, &lsop, 23).unwrap();
        for j in 0..=3 {
            assert!(kd[j] >= s[j], "kernel contains the socle at degree {j}");
        }
        // dim A_2 - dim A_3 <= k_2 <= dim A_2
        assert!(kd[2] >= 9);
        assert_eq!(hpp_ring_dims(&k, &lsop).unwrap(), vec![1, 4, 4, 1]);
    }

    #[test]
    fn projective_plane_characteristic_dependence() {
        let k = small_manifold("rp2_6").unwrap();
        let lsop2 = random_lsop(&k, &field(2), 3).unwrap();
        let q2 = quotient_dims(&k, &lsop2).unwrap();
        assert_eq!(q2, vec![1, 3, 6, 1, 0]);
        assert_eq!(socle_dims(&k, &lsop2).unwrap(), vec![0, 0, 3, 1]);

        let lsop_big = random_lsop(&k, &field(32003), 3).unwrap();
        let q_big = quotient_dims(&k, &lsop_big).unwrap();
        assert_eq!(q_big, vec![1, 3, 6, 0, 0]);
        assert_eq!(socle_dims(&k, &lsop_big).unwrap(), vec![0, 0, 6, 0]);
        // the two characteristics differ in degree 3 by exactly 1
        assert_eq!(q2[3] - q_big[3], 1);
    }

    #[test]
    fn empty_complex_quotient() {
        let empty = SimplicialComplex::from_facets(&[vec![]]).unwrap();
        let lsop = random_lsop(&empty, &field(2), 0).unwrap();
        assert_eq!(quotient_dims(&empty, &lsop).unwrap(), vec![1, 0]);
        assert_eq!(socle_dims(&empty, &lsop).unwrap(), vec![1]);
        assert_eq!(kernel_dims(&empty, &lsop, 0).unwrap(), vec![1]);
        assert_eq!(hpp_ring_dims(&empty, &lsop).unwrap(), vec![1]);
    }

    #[test]
    fn pipeline_determinism_and_lsop_independence() {
        let k = small_manifold("torus_7").unwrap();
        let f = field(32003);
        let a = GradedQuotient::compute(&k, &f, 0x5EED).unwrap();
        let b = GradedQuotient::compute(&k, &f, 0x5EED).unwrap();
        assert_eq!(a, b);
        let c = GradedQuotient::compute(&k, &f, 0xBEEF).unwrap();
        assert_eq!(a.q, c.q, "quotient dimensions do not depend on the lsop choice");
        assert_ne!(a.lsop_seed, c.lsop_seed);
        for j in 0..a.s.len() {
            assert!(a.s[j] <= a.k[j]);
        }
    }
}
