//! Flags of a given shape over `GF(p)`.

use std::collections::HashMap;

use num_bigint::BigUint;
use num_traits::{One, ToPrimitive};

use super::form::StandardForm;
use super::linalg::{subspaces_between, Matrix, SubspaceRref};
use crate::error::FieldError;
use crate::flag_model::LieType;
use crate::truncation::TruncatedFlagShape;

/// A flag `F_1 ⊂ … ⊂ F_{m-1}` with the cumulative dimensions of its shape.
/// The zero space and the whole space are left implicit.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct FlagOverGF {
    members: Vec<SubspaceRref>,
}

impl FlagOverGF {
    pub fn from_members(members: Vec<SubspaceRref>) -> Self {
        FlagOverGF { members }
    }

    pub fn members(&self) -> &[SubspaceRref] {
        &self.members
    }

    /// Members followed by the whole space.
    pub fn chain_with_whole(&self, n: usize) -> Vec<SubspaceRref> {
        let mut v = self.members.clone();
        v.push(SubspaceRref::whole(n));
        v
    }

    pub fn key(&self) -> Vec<u8> {
        let mut out = Vec::new();
        for m in &self.members {
            m.write_key(&mut out);
        }
        out
    }

    pub fn transform(&self, form: &StandardForm, g: &Matrix) -> FlagOverGF {
        FlagOverGF {
            members: self
                .members
                .iter()
                .map(|m| m.transform(form.field(), g))
                .collect(),
        }
    }

    /// The members as basis matrices, row-major.
    pub fn to_matrices(&self) -> Vec<Vec<Vec<u8>>> {
        self.members.iter().map(|m| m.rows().to_vec()).collect()
    }
}

/// All flags of one shape, with a lookup from canonical key to index.
#[derive(Clone, Debug)]
pub struct FlagVariety {
    shape: TruncatedFlagShape,
    flags: Vec<FlagOverGF>,
    index: HashMap<Vec<u8>, u32>,
}

impl FlagVariety {
    pub fn new(
        shape: &TruncatedFlagShape,
        form: &StandardForm,
        budget: u64,
    ) -> Result<Self, FieldError> {
        let flags = enumerate_flags(shape, form, budget)?;
        let index = flags
            .iter()
            .enumerate()
            .map(|(i, fl)| (fl.key(), i as u32))
            .collect();
        Ok(FlagVariety {
            shape: shape.clone(),
            flags,
            index,
        })
    }

    pub fn shape(&self) -> &TruncatedFlagShape {
        &self.shape
    }

    pub fn flags(&self) -> &[FlagOverGF] {
        &self.flags
    }

    pub fn len(&self) -> usize {
        self.flags.len()
    }

    pub fn is_empty(&self) -> bool {
        self.flags.is_empty()
    }

    pub fn position(&self, flag: &FlagOverGF) -> Option<u32> {
        self.index.get(&flag.key()).copied()
    }

    /// The permutation of this variety induced by `g`.
    pub fn permutation(&self, form: &StandardForm, g: &Matrix) -> Vec<u32> {
        self.flags
            .iter()
            .map(|fl| {
                self.position(&fl.transform(form, g))
                    .expect("isometries permute the flags of a shape")
            })
            .collect()
    }
}

fn check_shape(shape: &TruncatedFlagShape, form: &StandardForm) -> Result<(), FieldError> {
    if shape.lie_type() != form.lie_type() || shape.total() != form.n() {
        return Err(FieldError::ShapeMismatch(format!(
            "shape {:?} of type {} in dimension {} does not fit the type {} form in dimension {}",
            shape.dims(),
            shape.lie_type(),
            shape.total(),
            form.lie_type(),
            form.n()
        )));
    }
    Ok(())
}

pub(crate) fn gaussian_binomial(q: u64, n: usize, k: usize) -> BigUint {
    if k > n {
        return BigUint::from(0u32);
    }
    let q = BigUint::from(q);
    let mut num = BigUint::one();
    let mut den = BigUint::one();
    for i in 0..k {
        num *= q.pow((n - i) as u32) - 1u32;
        den *= q.pow((i + 1) as u32) - 1u32;
    }
    num / den
}

fn q_multinomial(q: u64, parts: &[usize]) -> BigUint {
    let mut rest: usize = parts.iter().sum();
    let mut out = BigUint::one();
    for &a in parts {
        out *= gaussian_binomial(q, rest, a);
        rest -= a;
    }
    out
}

/// Number of totally isotropic (singular) `k`-subspaces for the form of type
/// `lie_type` in dimension `n_total`.
fn isotropic_count(q: u64, lie_type: LieType, n_total: usize, k: usize) -> BigUint {
    let n = n_total / 2;
    let qq = BigUint::from(q);
    let mut out = gaussian_binomial(q, n, k);
    let range = match lie_type {
        LieType::D => (n - k)..n,
        _ => (n + 1 - k)..(n + 1),
    };
    for i in range {
        out *= qq.pow(i as u32) + 1u32;
    }
    out
}

/// Point count of the flag variety of `shape` over `GF(q)`.
pub fn expected_flag_count(shape: &TruncatedFlagShape, q: u64) -> BigUint {
    let dims = shape.dims();
    if !shape.lie_type().has_form() {
        return q_multinomial(q, dims);
    }
    let m = dims.len();
    let h = m / 2;
    if h == 0 {
        return BigUint::one();
    }
    let lower = &dims[..h];
    let k: usize = lower.iter().sum();
    let mut parts = lower.to_vec();
    parts.pop();
    let last = k - parts.iter().sum::<usize>();
    parts.push(last);
    isotropic_count(q, shape.lie_type(), shape.total(), k) * q_multinomial(q, &parts)
}

/// All flags of `shape`, isotropic for self-dual types.
pub fn enumerate_flags(
    shape: &TruncatedFlagShape,
    form: &StandardForm,
    budget: u64,
) -> Result<Vec<FlagOverGF>, FieldError> {
    check_shape(shape, form)?;
    let f = form.field();
    let expected = expected_flag_count(shape, f.order() as u64);
    let needed = expected.to_u128().unwrap_or(u128::MAX);
    if needed > budget as u128 {
        return Err(FieldError::BudgetExceeded { needed, budget });
    }
    let n = form.n();
    let dims = shape.dims();
    let m = dims.len();
    let free = if form.lie_type().has_form() {
        m / 2
    } else {
        m - 1
    };
    let mut chains: Vec<Vec<SubspaceRref>> = vec![Vec::new()];
    for &a in dims.iter().take(free) {
        let mut next = Vec::new();
        for chain in chains {
            let lower = chain
                .last()
                .cloned()
                .unwrap_or_else(|| SubspaceRref::zero(n));
            let upper = if form.lie_type().has_form() {
                form.perp(&lower)
            } else {
                SubspaceRref::whole(n)
            };
            for g in subspaces_between(f, &lower, &upper, a) {
                if form.is_isotropic(&g) {
                    let mut c = chain.clone();
                    c.push(g);
                    next.push(c);
                }
            }
        }
        chains = next;
    }
    let flags: Vec<FlagOverGF> = chains
        .into_iter()
        .map(|mut members| {
            if form.lie_type().has_form() {
                for k in free + 1..m {
                    let mirror = form.perp(&members[m - 1 - k]);
                    members.push(mirror);
                }
            }
            FlagOverGF { members }
        })
        .collect();
    assert_eq!(
        BigUint::from(flags.len()),
        expected,
        "flag count disagrees with the point-count formula for {:?}",
        dims
    );
    Ok(flags)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::finite_field::field::PrimeField;

    fn count(t: LieType, dims: &[usize], p: u32) -> usize {
        let f = PrimeField::new(p).unwrap();
        let shape = TruncatedFlagShape::from_dims(t, dims.to_vec()).unwrap();
        let form = StandardForm::new(t, shape.total(), f).unwrap();
        enumerate_flags(&shape, &form, 1_000_000).unwrap().len()
    }

    #[test]
    fn examples() {
        assert_eq!(count(LieType::A, &[1, 2], 2), 7);
        assert_eq!(count(LieType::A, &[1, 1, 1], 2), 21);
        assert_eq!(count(LieType::C, &[2, 2], 2), 15);
        assert_eq!(count(LieType::C, &[1, 2, 1], 2), 15);
        assert_eq!(count(LieType::D, &[1, 1], 3), 2);
        assert_eq!(count(LieType::D, &[2, 2], 2), 6);
        assert_eq!(count(LieType::D, &[1, 2, 1], 2), 9);
        assert_eq!(count(LieType::B, &[1, 1, 1], 3), 4);
        assert_eq!(count(LieType::B, &[2, 1, 2], 2), 15);
        assert_eq!(count(LieType::C, &[1, 1, 1, 1], 3), 40 * 4);
    }

    #[test]
    fn members_have_the_right_dimensions_and_mirror() {
        let f = PrimeField::new(2).unwrap();
        let shape = TruncatedFlagShape::from_dims(LieType::D, vec![1, 1, 2, 1, 1]).unwrap();
        let form = StandardForm::new(LieType::D, 6, f).unwrap();
        for fl in enumerate_flags(&shape, &form, 100_000).unwrap() {
            let dims: Vec<usize> = fl.members().iter().map(|m| m.dim()).collect();
            assert_eq!(dims, vec![1, 2, 4, 5]);
            for k in 0..4 {
                assert_eq!(form.perp(&fl.members()[k]), fl.members()[3 - k]);
            }
        }
    }

    #[test]
    fn budget_is_enforced() {
        let f = PrimeField::new(3).unwrap();
        let shape = TruncatedFlagShape::from_dims(LieType::A, vec![2, 2]).unwrap();
        let form = StandardForm::new(LieType::A, 4, f).unwrap();
        assert!(matches!(
            enumerate_flags(&shape, &form, 100),
            Err(FieldError::BudgetExceeded {
                needed: 130,
                budget: 100
            })
        ));
    }
}
