use super::field::PrimeField;
use super::flags::FlagOverGF;

/// `r[i][j] = dim(F_i ∩ F'_j)`, where both chains include the whole space as
/// their last member.
pub fn rank_matrix(f: PrimeField, n: usize, f1: &FlagOverGF, f2: &FlagOverGF) -> Vec<Vec<usize>> {
    let a = f1.chain_with_whole(n);
    let b = f2.chain_with_whole(n);
    a.iter()
        .map(|x| b.iter().map(|y| x.intersection_dim(f, y)).collect())
        .collect()
}
