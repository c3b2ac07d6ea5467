//! Exact orbit counts for pairs of partial flags in type A.
//!
//! `GL_m` orbits on `Fl(c) × Fl(d)` correspond to nonnegative integer matrices
//! with row sums `c` and column sums `d` (the relative-position matrix of the
//! two flags), i.e. to the double cosets `S_c \ S_m / S_d`.

use std::collections::HashMap;

use num_bigint::BigUint;
use num_traits::{One, Zero};

use crate::error::MarginError;
use crate::flag_model::{LieType, ParabolicSignature};
use crate::truncation::{truncate, TruncationPolicy};

/// Row and column margins with equal totals.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct MarginPair {
    row_sums: Vec<u32>,
    col_sums: Vec<u32>,
}

impl MarginPair {
    pub fn new(row_sums: Vec<u32>, col_sums: Vec<u32>) -> Result<Self, MarginError> {
        if row_sums.is_empty() || col_sums.is_empty() {
            return Err(MarginError::Empty);
        }
        if row_sums.contains(&0) || col_sums.contains(&0) {
            return Err(MarginError::NonPositive);
        }
        let rows: u64 = row_sums.iter().map(|&c| c as u64).sum();
        let cols: u64 = col_sums.iter().map(|&c| c as u64).sum();
        if rows != cols {
            return Err(MarginError::TotalsDiffer { rows, cols });
        }
        Ok(MarginPair { row_sums, col_sums })
    }

    pub fn from_dims(rows: &[usize], cols: &[usize]) -> Result<Self, MarginError> {
        Self::new(
            rows.iter().map(|&x| x as u32).collect(),
            cols.iter().map(|&x| x as u32).collect(),
        )
    }

    pub fn row_sums(&self) -> &[u32] {
        &self.row_sums
    }

    pub fn col_sums(&self) -> &[u32] {
        &self.col_sums
    }

    pub fn total(&self) -> u64 {
        self.row_sums.iter().map(|&c| c as u64).sum()
    }

    pub fn transposed(&self) -> Self {
        MarginPair {
            row_sums: self.col_sums.clone(),
            col_sums: self.row_sums.clone(),
        }
    }
}

/// Number of contingency tables with the given margins.
///
/// Columns are filled one at a time; the state is the vector of row sums
/// still to be placed, and each state carries the exact number of partial
/// tables reaching it.
pub fn count_double_orbits(mp: &MarginPair) -> BigUint {
    let mut states: HashMap<Vec<u32>, BigUint> = HashMap::new();
    states.insert(mp.row_sums.clone(), BigUint::one());
    for &col in &mp.col_sums {
        let mut next: HashMap<Vec<u32>, BigUint> = HashMap::new();
        for (remaining, ways) in &states {
            let mut column = vec![0u32; remaining.len()];
            fill_column(remaining, col, 0, &mut column, &mut |filled| {
                let key: Vec<u32> = remaining.iter().zip(filled).map(|(r, x)| r - x).collect();
                *next.entry(key).or_insert_with(BigUint::zero) += ways;
            });
        }
        states = next;
    }
    states
        .into_iter()
        .filter(|(rem, _)| rem.iter().all(|&r| r == 0))
        .map(|(_, w)| w)
        .sum()
}

fn fill_column(
    remaining: &[u32],
    left: u32,
    row: usize,
    column: &mut [u32],
    emit: &mut dyn FnMut(&[u32]),
) {
    if row == remaining.len() {
        if left == 0 {
            emit(column);
        }
        return;
    }
    let rest_capacity: u32 = remaining[row + 1..].iter().sum();
    let lo = left.saturating_sub(rest_capacity);
    let hi = left.min(remaining[row]);
    for x in lo..=hi {
        column[row] = x;
        fill_column(remaining, left - x, row + 1, column, emit);
    }
    column[row] = 0;
}

/// `q^C` with `q` the number of column parts and `C` the sum of the row parts
/// other than `large_index` (0-based). Every table is determined by its rows
/// other than `large_index`, and each unit of those rows picks one of `q`
/// columns, so this bounds [`count_double_orbits`].
pub fn qc_bound(mp: &MarginPair, large_index: usize) -> Result<BigUint, MarginError> {
    if large_index >= mp.row_sums.len() {
        return Err(MarginError::BadIndex {
            index: large_index,
            len: mp.row_sums.len(),
        });
    }
    let c: u64 = mp
        .row_sums
        .iter()
        .enumerate()
        .filter(|(k, _)| *k != large_index)
        .map(|(_, &v)| v as u64)
        .sum();
    Ok(num_traits::pow(
        BigUint::from(mp.col_sums.len()),
        c as usize,
    ))
}

/// Orbit counts `s_N` of two type-A signatures truncated (balanced) to each
/// total in `totals`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GrowthSequence {
    pub totals: Vec<usize>,
    pub counts: Vec<BigUint>,
}

impl GrowthSequence {
    pub fn is_nondecreasing(&self) -> bool {
        self.counts.windows(2).all(|w| w[0] <= w[1])
    }

    /// Strict increase over the last three samples. A finite window can only
    /// flag growth, never prove unboundedness.
    pub fn is_growing(&self) -> bool {
        let n = self.counts.len();
        n >= 3 && self.counts[n - 3] < self.counts[n - 2] && self.counts[n - 2] < self.counts[n - 1]
    }

    /// Constant over the last three samples.
    pub fn is_stable(&self) -> bool {
        let n = self.counts.len();
        n >= 3
            && self.counts[n - 3] == self.counts[n - 1]
            && self.counts[n - 2] == self.counts[n - 1]
    }
}

pub fn orbit_growth_sequence(
    sig1: &ParabolicSignature,
    sig2: &ParabolicSignature,
    totals: &[usize],
) -> Result<GrowthSequence, MarginError> {
    if sig1.lie_type() != LieType::A || sig2.lie_type() != LieType::A {
        return Err(MarginError::NotTypeA);
    }
    let mut counts = Vec::with_capacity(totals.len());
    for &n in totals {
        let a = truncate(sig1, n, &TruncationPolicy::Balanced)?;
        let b = truncate(sig2, n, &TruncationPolicy::Balanced)?;
        let mp = MarginPair::from_dims(a.dims(), b.dims())?;
        counts.push(count_double_orbits(&mp));
    }
    Ok(GrowthSequence {
        totals: totals.to_vec(),
        counts,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn count(c: &[u32], d: &[u32]) -> u64 {
        let n = count_double_orbits(&MarginPair::new(c.to_vec(), d.to_vec()).unwrap());
        n.try_into().unwrap()
    }

    /// Enumerates matrices cell by cell; independent of the column DP.
    fn brute(c: &[u32], d: &[u32]) -> u64 {
        fn go(c: &mut [u32], d: &mut [u32], cell: usize) -> u64 {
            let q = d.len();
            if cell == c.len() * q {
                return u64::from(c.iter().all(|&x| x == 0) && d.iter().all(|&x| x == 0));
            }
            let (i, j) = (cell / q, cell % q);
            let mut total = 0;
            for x in 0..=c[i].min(d[j]) {
                c[i] -= x;
                d[j] -= x;
                total += go(c, d, cell + 1);
                c[i] += x;
                d[j] += x;
            }
            total
        }
        go(&mut c.to_vec(), &mut d.to_vec(), 0)
    }

    fn compositions(total: u32, parts: usize) -> Vec<Vec<u32>> {
        if parts == 1 {
            return if total > 0 { vec![vec![total]] } else { vec![] };
        }
        let mut out = Vec::new();
        for first in 1..total {
            for mut rest in compositions(total - first, parts - 1) {
                rest.insert(0, first);
                out.push(rest);
            }
        }
        out
    }

    #[test]
    fn examples() {
        assert_eq!(count(&[1, 1], &[1, 1]), 2);
        assert_eq!(count(&[1, 2], &[1, 2]), 2);
        assert_eq!(count(&[1, 1, 1], &[1, 1, 1]), 6);
        assert_eq!(count(&[3], &[1, 1, 1]), 1);
    }

    #[test]
    fn two_part_closed_form() {
        for m in 2..=8u32 {
            for k in 1..m {
                for l in 1..m {
                    let expected = k.min(l) as i64 - 0i64.max(k as i64 + l as i64 - m as i64) + 1;
                    assert_eq!(
                        count(&[k, m - k], &[l, m - l]) as i64,
                        expected,
                        "m={m} k={k} l={l}"
                    );
                }
            }
        }
    }

    #[test]
    fn dp_matches_brute_force_up_to_total_8() {
        for m in 1..=8u32 {
            for p in 1..=3usize {
                for q in 1..=3usize {
                    for c in compositions(m, p) {
                        for d in compositions(m, q) {
                            assert_eq!(count(&c, &d), brute(&c, &d), "{c:?} {d:?}");
                        }
                    }
                }
            }
        }
    }

    #[test]
    fn qc_bound_examples() {
        for m in 2..=8u32 {
            let mp = MarginPair::new(vec![1, m - 1], vec![1; m as usize]).unwrap();
            assert_eq!(qc_bound(&mp, 1).unwrap(), BigUint::from(m));
            assert_eq!(count_double_orbits(&mp), BigUint::from(m));
        }
        let mp = MarginPair::new(vec![5], vec![2, 1, 2]).unwrap();
        assert_eq!(qc_bound(&mp, 0).unwrap(), BigUint::one());
        assert_eq!(count_double_orbits(&mp), BigUint::one());
        for m in 4..=8u32 {
            let mp = MarginPair::new(vec![2, m - 2], vec![1, m - 1]).unwrap();
            assert_eq!(qc_bound(&mp, 1).unwrap(), BigUint::from(4u32));
            // a line against a 2-plane: contained or not
            assert_eq!(count_double_orbits(&mp), BigUint::from(2u32));
        }
        let mp = MarginPair::new(vec![1, 1], vec![2]).unwrap();
        assert!(qc_bound(&mp, 2).is_err());
    }

    #[test]
    fn margin_errors() {
        assert_eq!(MarginPair::new(vec![], vec![1]), Err(MarginError::Empty));
        assert_eq!(
            MarginPair::new(vec![0, 1], vec![1]),
            Err(MarginError::NonPositive)
        );
        assert!(matches!(
            MarginPair::new(vec![2], vec![1]),
            Err(MarginError::TotalsDiffer { .. })
        ));
    }

    #[test]
    fn growth_examples() {
        let sig = |s: &str| s.parse::<ParabolicSignature>().unwrap();
        let g = orbit_growth_sequence(
            &sig("A:1,inf"),
            &sig("A:1,inf"),
            &(3..=10).collect::<Vec<_>>(),
        )
        .unwrap();
        assert!(g.counts.iter().all(|c| *c == BigUint::from(2u32)));
        assert!(g.is_stable() && !g.is_growing());
        let g = orbit_growth_sequence(&sig("A:inf,inf"), &sig("A:inf,inf"), &[2, 4, 6, 8]).unwrap();
        let expect: Vec<BigUint> = (2u32..=5).map(BigUint::from).collect();
        assert_eq!(g.counts, expect);
        assert!(g.is_growing());
        let g = orbit_growth_sequence(
            &sig("A:3,inf"),
            &sig("A:inf,2"),
            &(5..=12).collect::<Vec<_>>(),
        )
        .unwrap();
        assert!(g.counts.iter().all(|c| *c == BigUint::from(3u32)));
        assert!(orbit_growth_sequence(&sig("C:1,inf,1"), &sig("A:1,inf"), &[4]).is_err());
    }

    proptest::proptest! {
        #[test]
        fn count_invariant_under_permutation_and_transpose(
            c in proptest::collection::vec(1u32..4, 1..4),
            seed in 0usize..1000,
        ) {
            let m: u32 = c.iter().sum();
            let comps = compositions(m, 1 + seed % 3);
            proptest::prop_assume!(!comps.is_empty());
            let d = comps[seed % comps.len()].clone();
            let base = count(&c, &d);
            let mut c_rev = c.clone();
            c_rev.reverse();
            let mut d_rot = d.clone();
            d_rot.rotate_left(1);
            proptest::prop_assert_eq!(count(&c_rev, &d_rot), base);
            proptest::prop_assert_eq!(count(&d, &c), base);
        }
    }
}
