//! Counting functions for weight multiplicities of tensor and symmetric
//! powers of the adjoint module.

use num_integer::binomial;

/// `C(n+k−2, k−2)`; for `k = 1` this is `[n = 0]`.
pub fn t_count(k: u64, n: u64) -> u64 {
    if k == 1 {
        return u64::from(n == 0);
    }
    binomial(n + k - 2, k - 2)
}

/// `C(n+k−1, k−1)`.
pub fn w_count(k: u64, n: u64) -> u64 {
    binomial(n + k - 1, k - 1)
}

fn parts_between(lo: u64, hi: u64, n: u64) -> u64 {
    let mut ways = vec![0u64; n as usize + 1];
    ways[0] = 1;
    for part in lo..=hi {
        for total in part..=n {
            ways[total as usize] += ways[(total - part) as usize];
        }
    }
    ways[n as usize]
}

/// Partitions of `n` with all parts in `[2, k]`.
pub fn q_count(k: u64, n: u64) -> u64 {
    parts_between(2, k, n)
}

/// Partitions of `n` with all parts in `[1, k]`.
pub fn p_count(k: u64, n: u64) -> u64 {
    parts_between(1, k, n)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum CountId {
    T,
    Q,
    P,
    W,
}

pub fn count(id: CountId, k: u64, n: u64) -> u64 {
    match id {
        CountId::T => t_count(k, n),
        CountId::Q => q_count(k, n),
        CountId::P => p_count(k, n),
        CountId::W => w_count(k, n),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn examples() {
        assert_eq!(t_count(3, 2), 3);
        assert_eq!(q_count(4, 6), 3);
        for k in 1..6 {
            assert_eq!(p_count(k, 0), 1);
        }
        assert_eq!(t_count(1, 0), 1);
        assert_eq!(t_count(1, 3), 0);
    }
}
