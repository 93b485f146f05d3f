//! Small exact counting helpers shared by the other modules.

/// `binomial(n, k)`, or `None` on `u128` overflow.
pub fn binomial(n: u64, k: u64) -> Option<u128> {
    if k > n {
        return Some(0);
    }
    let k = k.min(n - k);
    let mut acc: u128 = 1;
    for i in 0..k {
        // acc * (n - i) / (i + 1) stays integral at every step
        acc = acc.checked_mul((n - i) as u128)? / (i as u128 + 1);
    }
    Some(acc)
}

/// Number of monomials of degree `k` in `vars` variables.
pub fn monomial_count(vars: usize, k: usize) -> Option<u128> {
    if vars == 0 {
        return Some(u128::from(k == 0));
    }
    binomial((vars + k - 1) as u64, k as u64)
}

/// Elementary symmetric polynomial `s_k(a_1, ..., a_r)`; `s_0 = 1`.
pub fn elementary_symmetric(values: &[u64], k: usize) -> Option<u128> {
    // dp[j] = s_j of the prefix processed so far
    let mut dp = vec![0u128; k + 1];
    dp[0] = 1;
    for &v in values {
        for j in (1..=k).rev() {
            dp[j] = dp[j].checked_add(dp[j - 1].checked_mul(v as u128)?)?;
        }
    }
    Some(dp[k])
}

#[cfg(test)]
mod tests {
    use super::*;
    use itertools::Itertools;

    #[test]
    fn binomials() {
        assert_eq!(binomial(5, 2), Some(10));
        assert_eq!(binomial(3, 5), Some(0));
        assert_eq!(binomial(0, 0), Some(1));
        assert_eq!(binomial(236, 3), Some(2_162_940));
    }

    #[test]
    fn monomial_counts() {
        assert_eq!(monomial_count(14, 2), Some(105));
        assert_eq!(monomial_count(0, 0), Some(1));
        assert_eq!(monomial_count(0, 3), Some(0));
        assert_eq!(monomial_count(3, 0), Some(1));
    }

    #[test]
    fn elementary_symmetric_matches_subset_products() {
        let a = [2u64, 3, 5, 7];
        for k in 0..=4 {
            let brute: u128 = a
                .iter()
                .combinations(k)
                .map(|c| c.into_iter().map(|&x| x as u128).product::<u128>())
                .sum();
            assert_eq!(elementary_symmetric(&a, k), Some(brute));
        }
        assert_eq!(elementary_symmetric(&[6, 6, 6], 2), Some(108));
        assert_eq!(elementary_symmetric(&[5, 5, 5], 3), Some(125));
    }
}
