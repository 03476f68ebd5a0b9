//! Small shared helpers: subset iteration and binomial coefficients in
//! machine-word and big-integer flavors.

use alloc::vec::Vec;
use num_bigint::BigInt;
use num_traits::{One, Zero};

/// All `k`-element subsets of `items`, in lexicographic order of index
/// positions (hence lexicographic in the items when `items` is sorted).
pub fn k_subsets<T: Clone>(items: &[T], k: usize) -> Vec<Vec<T>> {
    let n = items.len();
    let mut out = Vec::new();
    if k > n {
        return out;
    }
    if k == 0 {
        out.push(Vec::new());
        return out;
    }
    let mut idx: Vec<usize> = (0..k).collect();
    loop {
        out.push(idx.iter().map(|&i| items[i].clone()).collect());
        // advance the index vector
        let mut i = k;
        loop {
            if i == 0 {
                return out;
            }
            i -= 1;
            if idx[i] != i + n - k {
                break;
            }
        }
        if idx[i] == i + n - k {
            return out;
        }
        idx[i] += 1;
        for j in i + 1..k {
            idx[j] = idx[j - 1] + 1;
        }
    }
}

/// Binomial coefficient as `i64`; desk-scale arguments never overflow.
/// Returns 0 for `k > n`.
pub fn binom(n: usize, k: usize) -> i64 {
    if k > n {
        return 0;
    }
    let k = k.min(n - k);
    let mut acc: i128 = 1;
    for i in 0..k {
        acc = acc * (n - i) as i128 / (i + 1) as i128;
    }
    acc as i64
}

/// Binomial coefficient as a big integer; returns 0 for `k > n`.
pub fn big_binom(n: u64, k: u64) -> BigInt {
    if k > n {
        return BigInt::zero();
    }
    let k = k.min(n - k);
    let mut acc = BigInt::one();
    for i in 0..k {
        acc = acc * BigInt::from(n - i) / BigInt::from(i + 1);
    }
    acc
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn subsets_count_and_order() {
        let items = [1u32, 2, 3, 4];
        let pairs = k_subsets(&items, 2);
        assert_eq!(pairs.len(), 6);
        assert_eq!(pairs[0], alloc::vec![1, 2]);
        assert_eq!(pairs[5], alloc::vec![3, 4]);
        assert_eq!(k_subsets(&items, 0).len(), 1);
        assert_eq!(k_subsets(&items, 5).len(), 0);
    }

    #[test]
    fn binomials_agree() {
        for n in 0..20u64 {
            for k in 0..=n {
                assert_eq!(
                    BigInt::from(binom(n as usize, k as usize)),
                    big_binom(n, k)
                );
            }
        }
        assert_eq!(binom(3, 5), 0);
    }
}
