//! Pure-arithmetic checks: Macaulay representations and pseudopowers, the
//! h'/h'' transforms, and the socle, face-count, Dehn-Sommerville-type,
//! Euler-characteristic and g2 inequalities evaluated on `(h, beta)` data.
//!
//! Everything here is exact: big-integer binomials, rational comparison for
//! the one check that divides binomials. Reports carry left/right/slack as
//! decimal strings so equality cases are machine-detectable and the verdicts
//! are recomputable.

use crate::homology::BettiVector;
use crate::util::big_binom;
use alloc::format;
use alloc::string::{String, ToString};
use alloc::vec::Vec;
use core::fmt;
use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

/// Errors for the few operations with real failure modes.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum BoundsError {
    /// The minimal-h-vector formula presumes `C(d,i) | C(n-d+i-1, i)`.
    NonIntegralBeta { numerator: String, divisor: String },
    BadArguments(&'static str),
}

impl fmt::Display for BoundsError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            BoundsError::NonIntegralBeta { numerator, divisor } => {
                write!(f, "not applicable: {divisor} does not divide {numerator}")
            }
            BoundsError::BadArguments(msg) => write!(f, "bad arguments: {msg}"),
        }
    }
}

impl core::error::Error for BoundsError {}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Verdict {
    Pass,
    Fail,
    NotApplicable,
}

impl fmt::Display for Verdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Verdict::Pass => write!(f, "pass"),
            Verdict::Fail => write!(f, "fail"),
            Verdict::NotApplicable => write!(f, "n/a"),
        }
    }
}

/// One comparison. The convention throughout is `left <= right` (or
/// `left = right` for identity checks, which pass only with zero slack);
/// `slack = right - left`, stored exactly as a decimal (or reduced rational)
/// string.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BoundCheck {
    pub label: String,
    pub verdict: Verdict,
    pub left: String,
    pub right: String,
    pub slack: String,
}

impl BoundCheck {
    /// A passing check with zero slack: the bound is attained.
    pub fn tight(&self) -> bool {
        self.verdict == Verdict::Pass && self.slack == "0"
    }
}

/// A named bundle of checks, plus free-form notes (diagnostics, experiment
/// annotations, and a slot for future checks on the same data).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BoundReport {
    pub name: String,
    pub checks: Vec<BoundCheck>,
    pub notes: Vec<String>,
}

impl BoundReport {
    pub(crate) fn new(name: &str) -> Self {
        BoundReport { name: name.to_string(), checks: Vec::new(), notes: Vec::new() }
    }

    /// No check failed (not-applicable entries do not fail a report).
    pub fn passed(&self) -> bool {
        self.checks.iter().all(|c| c.verdict != Verdict::Fail)
    }

    pub(crate) fn push_le(&mut self, label: String, left: BigInt, right: BigInt) {
        let verdict = if left <= right { Verdict::Pass } else { Verdict::Fail };
        let slack = (&right - &left).to_string();
        self.checks.push(BoundCheck {
            label,
            verdict,
            left: left.to_string(),
            right: right.to_string(),
            slack,
        });
    }

    pub(crate) fn push_eq(&mut self, label: String, left: BigInt, right: BigInt) {
        let verdict = if left == right { Verdict::Pass } else { Verdict::Fail };
        let slack = (&right - &left).to_string();
        self.checks.push(BoundCheck {
            label,
            verdict,
            left: left.to_string(),
            right: right.to_string(),
            slack,
        });
    }

    fn push_na(&mut self, label: String, left: String, note: String) {
        self.checks.push(BoundCheck {
            label,
            verdict: Verdict::NotApplicable,
            left,
            right: String::new(),
            slack: String::new(),
        });
        self.notes.push(note);
    }
}

/// The unique expansion `l = C(n_j, j) + C(n_{j-1}, j-1) + ... + C(n_s, s)`
/// with `n_j > n_{j-1} > ... > n_s >= s >= 1`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MacaulayRep {
    pub j: usize,
    /// `(n_i, i)` pairs, `i` descending from `j`.
    pub terms: Vec<(u64, usize)>,
}

/// Greedy-maximal binomial expansion of `l` in degree `j >= 1`
/// (`l = 0` gives the empty term list).
pub fn macaulay_rep(l: u64, j: usize) -> MacaulayRep {
    assert!(j >= 1, "macaulay_rep needs j >= 1");
    let mut terms = Vec::new();
    let mut rest = BigInt::from(l);
    let mut jj = j;
    while rest > BigInt::zero() {
        debug_assert!(jj >= 1, "greedy expansion terminates by degree 1");
        let mut n = jj as u64;
        while big_binom(n + 1, jj as u64) <= rest {
            n += 1;
        }
        rest -= big_binom(n, jj as u64);
        terms.push((n, jj));
        jj -= 1;
    }
    MacaulayRep { j, terms }
}

/// The pseudopower `l^{<j>}`: shift every term `(n_i, i)` of the Macaulay
/// representation to `(n_i + 1, i + 1)` and sum.
pub fn pseudopower(l: u64, j: usize) -> BigInt {
    let rep = macaulay_rep(l, j);
    rep.terms.iter().map(|&(n, i)| big_binom(n + 1, i as u64 + 1)).sum()
}

/// The homological corrections of the h-vector: `h'` adds the alternating
/// Betti sum scaled by `C(d,j)`, and `h''` further subtracts
/// `C(d,i) * beta_{i-1}`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HPrimeVector {
    pub d: usize,
    /// Characteristic of the Betti data used.
    pub p: u64,
    pub h_prime: Vec<i64>,
    pub h_dprime: Vec<i64>,
}

/// `h'_j = h_j + C(d,j) * sum_{i=0}^{j-1} (-1)^{j-i-1} beta_{i-1}` and
/// `h''_i = h'_i - C(d,i) * beta_{i-1}`; `d` is `h.len() - 1`.
pub fn h_prime(h: &[i64], beta: &BettiVector) -> HPrimeVector {
    let d = h.len().saturating_sub(1);
    let mut hp = Vec::with_capacity(d + 1);
    let mut hpp = Vec::with_capacity(d + 1);
    for j in 0..=d {
        let mut alt: i64 = 0;
        for i in 0..j {
            let b = beta.beta(i as i64 - 1) as i64;
            alt += if (j - i) % 2 == 1 { b } else { -b };
        }
        let c = crate::util::binom(d, j);
        let prime = h[j] + c * alt;
        hp.push(prime);
        hpp.push(prime - c * beta.beta(j as i64 - 1) as i64);
    }
    HPrimeVector { d, p: beta.p(), h_prime: hp, h_dprime: hpp }
}

/// Socle lower bound: `h'_j >= C(d,j) * beta_{j-1}` for every `j`.
pub fn check_main2(hp: &HPrimeVector, beta: &BettiVector) -> BoundReport {
    let mut report = BoundReport::new("main2");
    for j in 0..=hp.d {
        let bound = big_binom(hp.d as u64, j as u64) * BigInt::from(beta.beta(j as i64 - 1));
        report.push_le(format!("j={j}"), bound, BigInt::from(hp.h_prime[j]));
    }
    report
}

fn pseudopower_bound(
    report: &mut BoundReport,
    label_prefix: &str,
    h: &[i64],
    hp: &HPrimeVector,
    beta: &BettiVector,
    codim_binom: impl Fn(usize) -> BigInt,
) {
    let d = hp.d;
    for j in 1..d {
        let operand = BigInt::from(h[j]) - codim_binom(j) * BigInt::from(beta.beta(j as i64 - 1));
        let label = format!("{label_prefix} j={j}");
        if operand.is_negative() {
            report.push_na(
                label,
                operand.to_string(),
                format!("j={j}: negative pseudopower operand {operand}, input is not in the theorem's domain"),
            );
            continue;
        }
        let operand: u64 = operand.try_into().expect("desk-scale operand fits u64");
        report.push_le(label, BigInt::from(hp.h_prime[j + 1]), pseudopower(operand, j));
    }
}

/// Upper bounds `h'_{j+1} <= (h_j - C(d,j) beta_{j-1})^{<j>}` for
/// `1 <= j <= d-1`; negative operands yield not-applicable entries.
pub fn check_new_bounds(h: &[i64], hp: &HPrimeVector, beta: &BettiVector) -> BoundReport {
    let mut report = BoundReport::new("new-bounds");
    let d = hp.d as u64;
    pseudopower_bound(&mut report, "h'", h, hp, beta, |j| big_binom(d, j as u64));
    report
}

/// The earlier, weaker variant with `C(d-1,j)` in place of `C(d,j)`.
pub fn check_old_bounds(h: &[i64], hp: &HPrimeVector, beta: &BettiVector) -> BoundReport {
    let mut report = BoundReport::new("old-bounds");
    let d = hp.d as u64;
    pseudopower_bound(&mut report, "h'", h, hp, beta, |j| big_binom(d.saturating_sub(1), j as u64));
    report
}

fn o_sequence_report(name: &str, seq: &[i64]) -> BoundReport {
    let mut report = BoundReport::new(name);
    if seq.is_empty() {
        report.push_na("empty".to_string(), String::new(), "empty sequence".to_string());
        return report;
    }
    report.push_eq("index 0".to_string(), BigInt::from(seq[0]), BigInt::one());
    if seq.len() >= 2 {
        report.push_le("0<=index 1".to_string(), BigInt::zero(), BigInt::from(seq[1]));
    }
    for j in 1..seq.len().saturating_sub(1) {
        let label = format!("index {}<=index {}^<{}>", j + 1, j, j);
        if seq[j] < 0 {
            report.push_na(
                label,
                seq[j].to_string(),
                format!("index {j} is negative; pseudopower undefined"),
            );
            continue;
        }
        let next = seq[j + 1];
        if next < 0 {
            // report against the nonnegativity half of the condition
            report.push_le(label, BigInt::from(next), BigInt::from(-1));
            continue;
        }
        report.push_le(label, BigInt::from(next), pseudopower(seq[j] as u64, j));
    }
    report
}

/// Face-count growth condition for Cohen-Macaulay h-vectors:
/// `h_0 = 1` and `0 <= h_{j+1} <= h_j^{<j>}`.
pub fn check_stanley_cm(h: &[i64]) -> BoundReport {
    o_sequence_report("stanley-cm", h)
}

/// Whether an integer sequence is the face-count vector of a multicomplex:
/// `F_0 = 1` and `F_{j+1} <= F_j^{<j>}`.
pub fn check_macaulay_sequence(f: &[i64]) -> BoundReport {
    o_sequence_report("macaulay-sequence", f)
}

/// Dehn-Sommerville-type identity for semi-Eulerian complexes:
/// `h_{d-i} - h_i = (-1)^i C(d,i) (chi - chi(S^{d-1}))` at every `i`.
pub fn klee_check(h: &[i64], chi: i64, d: usize) -> BoundReport {
    assert!(h.len() == d + 1, "h-vector length {} incompatible with d={d}", h.len());
    assert!(d >= 1, "klee_check needs d >= 1");
    let mut report = BoundReport::new("klee");
    let sphere_chi: i64 = 1 + if (d - 1).is_multiple_of(2) { 1 } else { -1 };
    for i in 0..=d {
        let sign = if i % 2 == 0 { 1 } else { -1 };
        let rhs = BigInt::from(sign * crate::util::binom(d, i) * (chi - sphere_chi));
        let lhs = BigInt::from(h[d - i] - h[i]);
        report.push_eq(format!("i={i}"), lhs, rhs);
    }
    report
}

/// Euler-characteristic bound for even-dimensional (dimension `2k`)
/// homology manifolds on at most `n` vertices:
/// `(-1)^k (chi - 2) <= C(n-k-2, k+1) / C(2k+1, k)`, compared exactly in Q.
/// Equality (zero slack) corresponds to `(k+1)`-neighborliness.
pub fn kuhnel_check(n: u64, k: u64, chi: i64) -> BoundReport {
    let mut report = BoundReport::new("kuhnel");
    let sign = if k.is_multiple_of(2) { 1 } else { -1 };
    let lhs = BigInt::from(sign * (chi - 2));
    let num = big_binom(n.saturating_sub(k + 2), k + 1);
    let den = big_binom(2 * k + 1, k);
    debug_assert!(den > BigInt::zero());
    // lhs <= num/den  <=>  lhs*den <= num
    let verdict = if &lhs * &den <= num { Verdict::Pass } else { Verdict::Fail };
    let slack = rational_string(&(&num - &lhs * &den), &den);
    report.checks.push(BoundCheck {
        label: format!("n={n} k={k}"),
        verdict,
        left: lhs.to_string(),
        right: rational_string(&num, &den),
        slack,
    });
    report
}

fn rational_string(num: &BigInt, den: &BigInt) -> String {
    let g = num.gcd(den);
    if g.is_zero() {
        return "0".to_string();
    }
    let (n, d) = (num / &g, den / &g);
    if d.is_one() {
        n.to_string()
    } else {
        format!("{n}/{d}")
    }
}

/// Lower bound `g_2 >= C(d+1,2) * beta_1` for connected orientable homology
/// manifolds of rank `d >= 4` (the caller certifies the hypotheses; smaller
/// `d` yields a not-applicable report).
pub fn g2_check(g2: i64, beta1: u64, d: usize) -> BoundReport {
    let mut report = BoundReport::new("g2");
    if d < 4 {
        report.push_na(
            format!("d={d}"),
            g2.to_string(),
            format!("g2 bound requires d >= 4, got d={d}"),
        );
        return report;
    }
    let bound = big_binom(d as u64 + 1, 2) * BigInt::from(beta1);
    report.push_le(format!("d={d}"), bound, BigInt::from(g2));
    if report.checks[0].tight() && d >= 5 {
        report
            .notes
            .push("equality at d>=5: attainable only by the handle/sum constructions".to_string());
    }
    report
}

/// Linear h-vector conditions `i*h_i + (d-i+1)*h_{i-1} >= 0` for `1 <= i <= d`.
pub fn terai_check(h: &[i64], d: usize) -> BoundReport {
    assert!(h.len() == d + 1, "h-vector length {} incompatible with d={d}", h.len());
    let mut report = BoundReport::new("terai");
    for i in 1..=d {
        let val = i as i64 * h[i] + (d - i + 1) as i64 * h[i - 1];
        report.push_le(format!("i={i}"), BigInt::zero(), BigInt::from(val));
    }
    report
}

/// The minimal h-vector `(1, n-d, C(n-d+1,2), ..., C(n-d+i-1,i),
/// -C(d,i+1)b, C(d,i+2)b, ..., (-1)^{d-i} b)` with
/// `b = C(n-d+i-1,i) / C(d,i)`; errors when `b` is not an integer.
pub fn terai_yoshida_hvector(n: u64, d: u64, i: u64) -> Result<Vec<i64>, BoundsError> {
    if !(1..d).contains(&i) || n < d + 1 {
        return Err(BoundsError::BadArguments("need 1 <= i <= d-1 and n >= d+1"));
    }
    let num = big_binom(n - d + i - 1, i);
    let div = big_binom(d, i);
    let (beta, rem) = num.div_rem(&div);
    if !rem.is_zero() {
        return Err(BoundsError::NonIntegralBeta {
            numerator: num.to_string(),
            divisor: div.to_string(),
        });
    }
    let mut h: Vec<BigInt> = Vec::with_capacity(d as usize + 1);
    for j in 0..=i {
        h.push(big_binom(n - d + j - 1, j));
    }
    for j in i + 1..=d {
        let sign = if (j - i).is_multiple_of(2) { 1 } else { -1 };
        h.push(BigInt::from(sign) * big_binom(d, j) * &beta);
    }
    Ok(h.into_iter()
        .map(|x| i64::try_from(x).expect("desk-scale h-vector entries fit i64"))
        .collect())
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::vec;

    fn betti(p: u64, entries: &[usize]) -> BettiVector {
        BettiVector::from_entries(p, entries.to_vec())
    }

    #[test]
    fn macaulay_rep_examples() {
        assert_eq!(macaulay_rep(10, 3).terms, vec![(5, 3)]);
        assert_eq!(macaulay_rep(11, 3).terms, vec![(5, 3), (2, 2)]);
        assert_eq!(macaulay_rep(0, 4).terms, vec![]);
        assert_eq!(macaulay_rep(20, 2).terms, vec![(6, 2), (5, 1)]);
    }

    #[test]
    fn pseudopower_examples() {
        assert_eq!(pseudopower(4, 2), BigInt::from(5));
        assert_eq!(pseudopower(11, 3), BigInt::from(16));
        assert_eq!(pseudopower(0, 3), BigInt::zero());
        assert_eq!(pseudopower(1, 5), BigInt::one());
        assert_eq!(pseudopower(5, 1), BigInt::from(15)); // C(6,2)
    }

    #[test]
    fn h_prime_examples() {
        // torus: h=(1,4,10,-1), beta entries (b_{-1},b_0,b_1,b_2)=(0,0,2,1)
        let hp = h_prime(&[1, 4, 10, -1], &betti(5, &[0, 0, 2, 1]));
        assert_eq!(hp.h_prime, vec![1, 4, 10, 1]);
        assert_eq!(hp.h_dprime, vec![1, 4, 10 - 6, 0]);

        let rp2_f2 = h_prime(&[1, 3, 6, 0], &betti(2, &[0, 0, 1, 1]));
        assert_eq!(rp2_f2.h_prime, vec![1, 3, 6, 1]);
        let rp2_f3 = h_prime(&[1, 3, 6, 0], &betti(3, &[0, 0, 0, 0]));
        assert_eq!(rp2_f3.h_prime, vec![1, 3, 6, 0]);

        // CM inputs: h' = h
        let cm = h_prime(&[1, 1, 1, 1], &betti(2, &[0, 0, 0, 1]));
        assert_eq!(cm.h_prime, vec![1, 1, 1, 1]);
    }

    #[test]
    fn main2_and_pseudopower_bounds() {
        let beta = betti(32003, &[0, 0, 2, 1]);
        let h = [1i64, 4, 10, -1];
        let hp = h_prime(&h, &beta);
        let rep = check_main2(&hp, &beta);
        assert!(rep.passed());
        assert_eq!(rep.checks[2].left, "6");
        assert_eq!(rep.checks[2].right, "10");
        assert_eq!(rep.checks[2].slack, "4");

        let nb = check_new_bounds(&h, &hp, &beta);
        assert!(nb.passed());
        // j=2: h'_3 = 1 <= (10-6)^<2> = 5
        assert_eq!(nb.checks[1].left, "1");
        assert_eq!(nb.checks[1].right, "5");

        let ob = check_old_bounds(&h, &hp, &beta);
        assert!(ob.passed());

        // negative operand goes not-applicable, never panics
        let bad_beta = betti(2, &[0, 0, 9, 0]);
        let hp2 = h_prime(&h, &bad_beta);
        let na = check_new_bounds(&h, &hp2, &bad_beta);
        assert!(na.checks.iter().any(|c| c.verdict == Verdict::NotApplicable));
        assert!(na.passed());
    }

    #[test]
    fn o_sequences() {
        assert!(check_stanley_cm(&[1, 3, 6, 0]).passed());
        assert!(!check_macaulay_sequence(&[1, 2, 5]).passed());
        assert!(check_macaulay_sequence(&[1]).passed());
        assert!(check_stanley_cm(&[1, 1, 1, 1]).passed());
        assert!(!check_stanley_cm(&[2, 1]).passed());
    }

    #[test]
    fn klee_examples() {
        assert!(klee_check(&[1, 4, 10, -1], 0, 3).passed()); // torus
        assert!(klee_check(&[1, 1, 1, 1], 2, 3).passed()); // 2-sphere
        assert!(klee_check(&[1, 3, 6, 0], 1, 3).passed()); // projective plane
        assert!(!klee_check(&[1, 4, 10, 0], 0, 3).passed());
    }

    #[test]
    fn kuhnel_examples() {
        let torus = kuhnel_check(7, 1, 0);
        assert!(torus.passed());
        assert!(torus.checks[0].tight());
        assert_eq!(torus.checks[0].left, "2");
        assert_eq!(torus.checks[0].right, "2");

        let rp2 = kuhnel_check(6, 1, 1);
        assert!(rp2.passed() && rp2.checks[0].tight());

        let loose = kuhnel_check(5, 1, 2);
        assert!(loose.passed() && !loose.checks[0].tight());
        assert_eq!(loose.checks[0].right, "1/3");
    }

    #[test]
    fn g2_examples() {
        let tight = g2_check(10, 1, 4);
        assert!(tight.passed() && tight.checks[0].tight());
        let stacked = g2_check(0, 0, 4);
        assert!(stacked.passed() && stacked.checks[0].tight());
        let sum2 = g2_check(20, 2, 4);
        assert!(sum2.passed() && sum2.checks[0].tight());
        let low_d = g2_check(5, 1, 3);
        assert_eq!(low_d.checks[0].verdict, Verdict::NotApplicable);
        assert!(low_d.passed());
        assert!(!g2_check(9, 1, 4).passed());
    }

    #[test]
    fn terai_examples() {
        let rep = terai_check(&[1, 4, 10, -1], 3);
        assert!(rep.passed());
        assert_eq!(rep.checks[2].right, "7"); // i=3: 3*(-1) + 1*10
    }

    #[test]
    fn terai_yoshida_examples() {
        // d=3, i=1, n=6: beta = C(3,1)/C(3,1) = 1
        assert_eq!(terai_yoshida_hvector(6, 3, 1).unwrap(), vec![1, 3, -3, 1]);
        // d=3, i=1, n=5: beta = 2/3 not integral
        assert!(matches!(
            terai_yoshida_hvector(5, 3, 1),
            Err(BoundsError::NonIntegralBeta { .. })
        ));
        assert!(matches!(
            terai_yoshida_hvector(6, 3, 3),
            Err(BoundsError::BadArguments(_))
        ));
    }
}
