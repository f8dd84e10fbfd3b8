//! Binomial (Macaulay) representations, the pseudopower `ℓ^⟨i⟩`, and M-vectors.

use serde::{Deserialize, Serialize};

use crate::enumerative::{HVector, Simplicial};
use crate::report::{Relation, VerificationReport};

/// `C(n, k)`, zero outside `0 ≤ k ≤ n`.
pub fn binomial(n: i64, k: i64) -> i128 {
    if k < 0 || n < 0 || k > n {
        return 0;
    }
    let k = k.min(n - k);
    let mut acc: i128 = 1;
    for j in 0..k {
        // acc = C(n, j) here, so the division is exact
        acc = acc * (n - j) as i128 / (j + 1) as i128;
    }
    acc
}

/// `2^d` as an exact integer.
pub fn pow2(d: i64) -> i128 {
    assert!((0..127).contains(&d), "2^{d} out of range");
    1i128 << d
}

/// `(-1)^n`.
pub fn sign(n: i64) -> i128 {
    if n.rem_euclid(2) == 0 {
        1
    } else {
        -1
    }
}

/// `ℓ = C(n_i, i) + C(n_{i-1}, i-1) + … + C(n_s, s)` with
/// `n_i > n_{i-1} > … > n_s ≥ s ≥ 1`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct MacaulayDecomposition {
    pub value: u64,
    pub position: u32,
    /// `(n_t, t)` pairs with `t` descending from `position`.
    pub terms: Vec<(u64, u32)>,
}

impl MacaulayDecomposition {
    pub fn sum(&self) -> i128 {
        self.terms
            .iter()
            .map(|&(n, t)| binomial(n as i64, t as i64))
            .sum()
    }
}

/// Greedy `i`-binomial representation of `value`; `0` gives the empty chain.
pub fn macaulay_rep(value: u64, position: u32) -> MacaulayDecomposition {
    assert!(position >= 1, "Macaulay position must be at least 1");
    let mut rest = value as i128;
    let mut terms = Vec::new();
    let mut t = position;
    while rest > 0 && t >= 1 {
        // largest n with C(n, t) <= rest; C(t, t) = 1 <= rest always holds
        let mut n = t as i64;
        while binomial(n + 1, t as i64) <= rest {
            n += 1;
        }
        rest -= binomial(n, t as i64);
        terms.push((n as u64, t));
        t -= 1;
    }
    debug_assert_eq!(rest, 0);
    MacaulayDecomposition {
        value,
        position,
        terms,
    }
}

/// `ℓ^⟨i⟩ = C(n_i+1, i+1) + … + C(n_s+1, s+1)`; `0^⟨i⟩ = 0`.
pub fn pseudopower(value: u64, position: u32) -> u64 {
    macaulay_rep(value, position)
        .terms
        .iter()
        .map(|&(n, t)| binomial(n as i64 + 1, t as i64 + 1))
        .sum::<i128>() as u64
}

/// First index at which `g` stops being an M-vector, if any.
///
/// Requires `g_0 = 1`, every entry nonnegative, and `g_{i+1} ≤ g_i^⟨i⟩` for `i ≥ 1`.
pub fn m_vector_violation(g: &[i128]) -> Option<usize> {
    if g.first() != Some(&1) {
        return Some(0);
    }
    for i in 1..g.len() {
        if g[i] < 0 {
            return Some(i);
        }
        if i >= 2 {
            let bound = pseudopower(g[i - 1] as u64, (i - 1) as u32) as i128;
            if g[i] > bound {
                return Some(i);
            }
        }
    }
    None
}

pub fn is_m_vector(g: &[i128]) -> bool {
    m_vector_violation(g).is_none()
}

/// Necessary conditions for `h` to be the h-vector of a simplicial polytope:
/// `h_0 = 1`, symmetry, and the g-prefix being an M-vector.
pub fn check_g_theorem_conditions(h: &HVector<Simplicial>) -> VerificationReport {
    let mut report = VerificationReport::new(
        "g-theorem-conditions",
        "h_0 = 1; h_i = h_{d-i}; (1, g_1, ..., g_{floor(d/2)}) is an M-vector",
    );
    let e = h.entries();
    let d = e.len() - 1;
    report.record("h_0", e[0], Relation::Eq, 1);
    for i in 0..=d {
        report.record(format!("sym[{i}]"), e[i], Relation::Eq, e[d - i]);
    }
    let g: Vec<i128> = (0..=d / 2)
        .map(|i| if i == 0 { e[0] } else { e[i] - e[i - 1] })
        .collect();
    for i in 1..g.len() {
        report.record(format!("g[{i}]>=0"), g[i], Relation::Ge, 0);
        if i >= 2 && g[i - 1] >= 0 {
            let bound = pseudopower(g[i - 1] as u64, (i - 1) as u32) as i128;
            report.record(
                format!("g[{i}]<=g[{}]^<{}>", i - 1, i - 1),
                g[i],
                Relation::Le,
                bound,
            );
        }
    }
    report.finish()
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    #[test]
    fn binomials() {
        assert_eq!(binomial(5, 2), 10);
        assert_eq!(binomial(0, 0), 1);
        assert_eq!(binomial(3, 4), 0);
        assert_eq!(binomial(3, -1), 0);
        assert_eq!(binomial(60, 30), 118264581564861424);
    }

    #[test]
    fn two_at_position_two() {
        let rep = macaulay_rep(2, 2);
        assert_eq!(rep.terms, vec![(2, 2), (1, 1)]);
        assert_eq!(pseudopower(2, 2), 2);
    }

    #[test]
    fn one_and_zero() {
        for i in 1..10 {
            assert_eq!(macaulay_rep(1, i).terms, vec![(i as u64, i)]);
            assert_eq!(pseudopower(1, i), 1);
            assert!(macaulay_rep(0, i).terms.is_empty());
            assert_eq!(pseudopower(0, i), 0);
        }
    }

    #[test]
    fn m_vectors() {
        assert!(is_m_vector(&[1, 3, 3]));
        assert_eq!(m_vector_violation(&[1, 0, 1]), Some(2));
        assert!(is_m_vector(&[1, 2, 2, 2, 2, 2]));
        assert_eq!(m_vector_violation(&[2, 1]), Some(0));
        assert_eq!(m_vector_violation(&[1, -1]), Some(1));
        // 3^<1> = C(4,2) = 6
        assert!(is_m_vector(&[1, 3, 6]));
        assert!(!is_m_vector(&[1, 3, 7]));
    }

    /// Every chain `n_t > n_{t-1} > … ≥ s ≥ 1` (no greedy choice) summing to `target`.
    fn all_chains(target: i128, t: i64, below: i64) -> Vec<Vec<(i64, i64)>> {
        if target == 0 {
            return vec![vec![]];
        }
        let mut out = Vec::new();
        if t == 0 {
            return out;
        }
        for n in t..below {
            let c = binomial(n, t);
            if c > target {
                break;
            }
            for mut rest in all_chains(target - c, t - 1, n) {
                rest.insert(0, (n, t));
                out.push(rest);
            }
        }
        out
    }

    #[test]
    fn expansion_is_unique_and_matches_definition() {
        for i in 1..=5u32 {
            for l in 0..=300u64 {
                let chains = all_chains(l as i128, i as i64, l as i64 + i as i64 + 2);
                assert_eq!(chains.len(), 1, "l={l} i={i}");
                let expect: i128 = chains[0].iter().map(|&(n, t)| binomial(n + 1, t + 1)).sum();
                assert_eq!(pseudopower(l, i) as i128, expect, "l={l} i={i}");
            }
        }
        // 3 = C(3,1): 3^<1> = C(4,2)
        assert_eq!(pseudopower(3, 1), 6);
    }

    proptest! {
        #[test]
        fn decomposition_is_a_strict_chain(l in 0u64..50_000, i in 1u32..12) {
            let rep = macaulay_rep(l, i);
            prop_assert_eq!(rep.sum(), l as i128);
            for w in rep.terms.windows(2) {
                prop_assert!(w[0].0 > w[1].0);
                prop_assert_eq!(w[0].1, w[1].1 + 1);
            }
            if let Some(&(n, s)) = rep.terms.last() {
                prop_assert!(n >= s as u64 && s >= 1);
            }
        }

        #[test]
        fn pseudopower_is_monotone(l in 0u64..5_000, i in 1u32..9) {
            prop_assert!(pseudopower(l, i) <= pseudopower(l + 1, i));
        }
    }
}
