//! Finite-dimensional truncations of signatures.
//!
//! A truncation replaces each infinite block by a concrete dimension so that
//! the blocks add up to a chosen total `N`. Growing `N` only ever enlarges the
//! blocks that were infinite; [`EmbeddingPlan`] records which block absorbs
//! each new basis direction.

use serde::Serialize;

use crate::error::TruncationError;
use crate::flag_model::{Block, LieType, ParabolicSignature};

/// Block dimensions of a flag in an `N`-dimensional space.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct TruncatedFlagShape {
    lie_type: LieType,
    dims: Vec<usize>,
    total: usize,
    infinite: Vec<bool>,
    origin: Option<ParabolicSignature>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ShapeJson {
    pub dims: Vec<usize>,
    pub total: usize,
}

/// How surplus dimensions are handed to the infinite blocks.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum TruncationPolicy {
    /// Spread as evenly as possible, leftmost first, mirror-symmetric for
    /// self-dual types.
    Balanced,
    /// Dimensions of the infinite blocks, in block order.
    Explicit(Vec<usize>),
}

impl TruncatedFlagShape {
    /// A bare shape with no signature behind it. No block is marked infinite,
    /// so such shapes cannot be embedded.
    pub fn from_dims(lie_type: LieType, dims: Vec<usize>) -> Result<Self, TruncationError> {
        if dims.is_empty() {
            return Err(TruncationError::BadShape("no blocks".into()));
        }
        if dims.contains(&0) {
            return Err(TruncationError::BadShape("blocks must be positive".into()));
        }
        let total = dims.iter().sum();
        if lie_type.has_form() {
            let m = dims.len();
            if (0..m / 2).any(|k| dims[k] != dims[m - 1 - k]) {
                return Err(TruncationError::BadShape(format!(
                    "{dims:?} is not palindromic"
                )));
            }
            if !lie_type.accepts_total(total) {
                return Err(TruncationError::ParityMismatch { total, lie_type });
            }
        }
        let infinite = vec![false; dims.len()];
        Ok(TruncatedFlagShape {
            lie_type,
            dims,
            total,
            infinite,
            origin: None,
        })
    }

    pub fn lie_type(&self) -> LieType {
        self.lie_type
    }

    pub fn dims(&self) -> &[usize] {
        &self.dims
    }

    pub fn total(&self) -> usize {
        self.total
    }

    /// Which blocks come from infinite blocks of the origin signature.
    pub fn infinite_mask(&self) -> &[bool] {
        &self.infinite
    }

    pub fn origin(&self) -> Option<&ParabolicSignature> {
        self.origin.as_ref()
    }

    pub fn len(&self) -> usize {
        self.dims.len()
    }

    pub fn is_empty(&self) -> bool {
        self.dims.is_empty()
    }

    /// Dimensions of `F_1, …, F_m`.
    pub fn cumulative(&self) -> Vec<usize> {
        self.dims
            .iter()
            .scan(0, |acc, d| {
                *acc += d;
                Some(*acc)
            })
            .collect()
    }

    pub fn to_json(&self) -> ShapeJson {
        ShapeJson {
            dims: self.dims.clone(),
            total: self.total,
        }
    }
}

fn infinite_positions(sig: &ParabolicSignature) -> Vec<usize> {
    sig.blocks()
        .iter()
        .enumerate()
        .filter(|(_, b)| b.is_inf())
        .map(|(i, _)| i)
        .collect()
}

/// Per-block increments summing to `units`, given to the blocks flagged in
/// `mask`.
fn spread(units: usize, lie_type: LieType, mask: &[bool]) -> Result<Vec<usize>, TruncationError> {
    let m = mask.len();
    let slots: Vec<usize> = (0..m).filter(|&i| mask[i]).collect();
    if slots.is_empty() {
        return if units == 0 {
            Ok(vec![0; m])
        } else {
            Err(TruncationError::CannotAbsorb {
                delta: units,
                reason: "no infinite block".into(),
            })
        };
    }
    let base = units / slots.len();
    let mut rem = units - base * slots.len();
    let mut inc = vec![0; m];
    for &i in &slots {
        inc[i] = base;
    }
    if !lie_type.has_form() {
        for &i in slots.iter().take(rem) {
            inc[i] += 1;
        }
        return Ok(inc);
    }
    let middle = (m % 2 == 1 && mask[m / 2]).then_some(m / 2);
    for &i in slots.iter().filter(|&&i| i < m - 1 - i) {
        if rem < 2 {
            break;
        }
        inc[i] += 1;
        inc[m - 1 - i] += 1;
        rem -= 2;
    }
    match (rem, middle) {
        (0, _) => Ok(inc),
        (1, Some(mid)) => {
            inc[mid] += 1;
            Ok(inc)
        }
        _ => Err(TruncationError::CannotAbsorb {
            delta: units,
            reason: "surplus cannot be split into mirror pairs".into(),
        }),
    }
}

/// Minimal admissible total for a signature: every infinite block gets one.
pub fn minimum_total(sig: &ParabolicSignature) -> usize {
    sig.finite_sum() as usize + sig.infinite_count()
}

/// Totals above this bound put every infinite block above every finite one.
pub fn stabilization_threshold(sig: &ParabolicSignature) -> usize {
    let max_finite = sig
        .blocks()
        .iter()
        .filter_map(|b| b.finite())
        .max()
        .unwrap_or(0) as usize;
    sig.finite_sum() as usize + sig.infinite_count() * (1 + max_finite)
}

pub fn truncate(
    sig: &ParabolicSignature,
    total: usize,
    policy: &TruncationPolicy,
) -> Result<TruncatedFlagShape, TruncationError> {
    let lie_type = sig.lie_type();
    let minimum = minimum_total(sig);
    if total < minimum {
        return Err(TruncationError::TotalTooSmall { total, minimum });
    }
    if !lie_type.accepts_total(total) {
        return Err(TruncationError::ParityMismatch { total, lie_type });
    }
    let infinite: Vec<bool> = sig.blocks().iter().map(|b| b.is_inf()).collect();
    let mut dims: Vec<usize> = sig
        .blocks()
        .iter()
        .map(|b| match b {
            Block::Finite(c) => *c as usize,
            Block::Inf => 1,
        })
        .collect();
    match policy {
        TruncationPolicy::Balanced => {
            let inc = spread(total - minimum, lie_type, &infinite)?;
            for (d, i) in dims.iter_mut().zip(inc) {
                *d += i;
            }
        }
        TruncationPolicy::Explicit(assigned) => {
            let slots = infinite_positions(sig);
            if assigned.len() != slots.len() {
                return Err(TruncationError::BadAssignment(format!(
                    "expected {} infinite-block dimensions, got {}",
                    slots.len(),
                    assigned.len()
                )));
            }
            for (&slot, &d) in slots.iter().zip(assigned) {
                if d == 0 {
                    return Err(TruncationError::BadAssignment(
                        "dimensions must be positive".into(),
                    ));
                }
                dims[slot] = d;
            }
            let m = dims.len();
            if lie_type.has_form() && (0..m / 2).any(|k| dims[k] != dims[m - 1 - k]) {
                return Err(TruncationError::BadAssignment(format!(
                    "{dims:?} is not palindromic"
                )));
            }
            let sum: usize = dims.iter().sum();
            if sum != total {
                return Err(TruncationError::BadAssignment(format!(
                    "blocks sum to {sum}, not {total}"
                )));
            }
        }
    }
    Ok(TruncatedFlagShape {
        lie_type,
        dims,
        total,
        infinite,
        origin: Some(sig.clone()),
    })
}

/// Block dimensions sorted nonincreasingly.
pub fn lambda_of_truncation(shape: &TruncatedFlagShape) -> Vec<usize> {
    let mut v = shape.dims.clone();
    v.sort_unstable_by(|a, b| b.cmp(a));
    v
}

/// How a level-`N` shape sits inside a level-`N + delta` shape.
///
/// Source coordinates `0..N` land at `offset..offset + N` in the target. The
/// new directions are listed by [`EmbeddingPlan::new_coordinates`]; for
/// self-dual types they are the first and last `delta / 2` target coordinates,
/// and coordinate `j` is paired with `N + delta - 1 - j` by the form.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct EmbeddingPlan {
    source: TruncatedFlagShape,
    target: TruncatedFlagShape,
    absorb: Vec<usize>,
}

impl EmbeddingPlan {
    /// Validates an explicit absorb assignment: `absorb[i]` is the block that
    /// receives the `i`-th new coordinate.
    pub fn explicit(
        source: TruncatedFlagShape,
        absorb: Vec<usize>,
    ) -> Result<Self, TruncationError> {
        let delta = absorb.len();
        if delta == 0 {
            return Err(TruncationError::CannotAbsorb {
                delta,
                reason: "delta must be positive".into(),
            });
        }
        let m = source.len();
        let lie_type = source.lie_type;
        for &b in &absorb {
            if b >= m || !source.infinite[b] {
                return Err(TruncationError::CannotAbsorb {
                    delta,
                    reason: format!("block {b} is not an infinite block"),
                });
            }
        }
        if lie_type.has_form() {
            if !delta.is_multiple_of(2) {
                return Err(TruncationError::CannotAbsorb {
                    delta,
                    reason: "self-dual types grow by mirror pairs".into(),
                });
            }
            let half = delta / 2;
            for j in 0..half {
                let front = absorb[j];
                let back = absorb[half + (half - 1 - j)];
                if back != m - 1 - front {
                    return Err(TruncationError::CannotAbsorb {
                        delta,
                        reason: format!(
                            "new direction {j} goes to block {front} but its partner goes to {back}"
                        ),
                    });
                }
            }
        }
        let mut dims = source.dims.clone();
        for &b in &absorb {
            dims[b] += 1;
        }
        let target = TruncatedFlagShape {
            lie_type,
            total: source.total + delta,
            dims,
            infinite: source.infinite.clone(),
            origin: source.origin.clone(),
        };
        Ok(EmbeddingPlan {
            source,
            target,
            absorb,
        })
    }

    pub fn source(&self) -> &TruncatedFlagShape {
        &self.source
    }

    pub fn target(&self) -> &TruncatedFlagShape {
        &self.target
    }

    pub fn absorb(&self) -> &[usize] {
        &self.absorb
    }

    pub fn delta(&self) -> usize {
        self.absorb.len()
    }

    /// Shift applied to source coordinates.
    pub fn offset(&self) -> usize {
        if self.source.lie_type.has_form() {
            self.delta() / 2
        } else {
            0
        }
    }

    /// Target coordinates of the new directions, in `absorb` order.
    pub fn new_coordinates(&self) -> Vec<usize> {
        let n = self.source.total;
        let delta = self.delta();
        if self.source.lie_type.has_form() {
            let half = delta / 2;
            (0..half).chain(n + half..n + delta).collect()
        } else {
            (n..n + delta).collect()
        }
    }
}

/// Grows `source` by `delta` dimensions. When the source is the balanced
/// truncation of its signature the target is the balanced truncation at the
/// larger total; otherwise `delta` itself is spread over the infinite blocks.
pub fn embed_shape(
    source: &TruncatedFlagShape,
    delta: usize,
) -> Result<EmbeddingPlan, TruncationError> {
    if delta == 0 {
        return Err(TruncationError::CannotAbsorb {
            delta,
            reason: "delta must be positive".into(),
        });
    }
    let lie_type = source.lie_type;
    if lie_type.has_form() && !delta.is_multiple_of(2) {
        return Err(TruncationError::CannotAbsorb {
            delta,
            reason: "self-dual types grow by mirror pairs".into(),
        });
    }
    let increments = match source.origin.as_ref() {
        Some(sig)
            if truncate(sig, source.total, &TruncationPolicy::Balanced)
                .map(|s| s.dims == source.dims)
                .unwrap_or(false) =>
        {
            let target = truncate(sig, source.total + delta, &TruncationPolicy::Balanced)?;
            let inc: Option<Vec<usize>> = target
                .dims
                .iter()
                .zip(&source.dims)
                .map(|(t, s)| t.checked_sub(*s))
                .collect();
            match inc {
                Some(inc) => inc,
                None => spread(delta, lie_type, &source.infinite)?,
            }
        }
        _ => spread(delta, lie_type, &source.infinite)?,
    };
    let m = source.len();
    let absorb = if lie_type.has_form() {
        let mut front = Vec::with_capacity(delta / 2);
        for (k, &inc) in increments.iter().enumerate().take(m.div_ceil(2)) {
            let pairs = if k == m - 1 - k { inc / 2 } else { inc };
            front.extend(std::iter::repeat_n(k, pairs));
        }
        let back: Vec<usize> = front.iter().rev().map(|&k| m - 1 - k).collect();
        front.extend(back);
        front
    } else {
        increments
            .iter()
            .enumerate()
            .flat_map(|(k, &inc)| std::iter::repeat_n(k, inc))
            .collect()
    };
    EmbeddingPlan::explicit(source.clone(), absorb)
}
