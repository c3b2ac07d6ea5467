//! Empirical check that growing the ambient space injects orbit sets.
//!
//! Each source tuple is pushed into the larger space through the embedding
//! plans; two source tuples whose images share a target orbit must already
//! share a source orbit.

use serde::Serialize;

use super::field::PrimeField;
use super::flags::FlagOverGF;
use super::form::StandardForm;
use super::linalg::{SubspaceRref, Vector};
use super::orbits::enumerate_orbits;
use crate::error::FieldError;
use crate::truncation::{EmbeddingPlan, TruncatedFlagShape};

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Counterexample {
    /// Flag indices of two source tuples in different source orbits.
    pub first: Vec<u32>,
    pub second: Vec<u32>,
    pub target_orbit: usize,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct LemmaOutcome {
    pub holds: bool,
    pub source_orbits: usize,
    pub target_orbits: usize,
    pub counterexample: Option<Counterexample>,
}

/// The image of a source flag under `plan`.
pub fn embed_flag(f: PrimeField, plan: &EmbeddingPlan, flag: &FlagOverGF) -> FlagOverGF {
    let n = plan.target().total();
    let offset = plan.offset();
    let new = plan.new_coordinates();
    let members = flag
        .members()
        .iter()
        .enumerate()
        .map(|(j, s)| {
            let mut vecs: Vec<Vector> = s
                .rows()
                .iter()
                .map(|r| {
                    let mut v = vec![0u8; n];
                    v[offset..offset + r.len()].copy_from_slice(r);
                    v
                })
                .collect();
            for (&c, &b) in new.iter().zip(plan.absorb()) {
                if b <= j {
                    let mut v = vec![0u8; n];
                    v[c] = 1;
                    vecs.push(v);
                }
            }
            SubspaceRref::span(f, n, vecs)
        })
        .collect();
    FlagOverGF::from_members(members)
}

/// Runs the check for a tuple of plans that share source and target
/// dimensions.
pub fn lemma_key_check(
    plans: &[EmbeddingPlan],
    f: PrimeField,
    budget: u64,
) -> Result<LemmaOutcome, FieldError> {
    let first = plans
        .first()
        .ok_or_else(|| FieldError::ShapeMismatch("no embedding plans".into()))?;
    let lie_type = first.source().lie_type();
    let (n, big) = (first.source().total(), first.target().total());
    if plans.iter().any(|p| {
        p.source().total() != n || p.target().total() != big || p.source().lie_type() != lie_type
    }) {
        return Err(FieldError::ShapeMismatch(
            "embedding plans must share type and dimensions".into(),
        ));
    }
    let sources: Vec<TruncatedFlagShape> = plans.iter().map(|p| p.source().clone()).collect();
    let targets: Vec<TruncatedFlagShape> = plans.iter().map(|p| p.target().clone()).collect();
    let small_form = StandardForm::new(lie_type, n, f)?;
    let big_form = StandardForm::new(lie_type, big, f)?;
    let (_, src_space, src_part) = enumerate_orbits(&sources, &small_form, budget)?;
    let (tgt_summary, tgt_space, tgt_part) = enumerate_orbits(&targets, &big_form, budget)?;

    // Embedded index of every source flag, per factor.
    let images: Vec<Vec<u32>> = plans
        .iter()
        .zip(src_space.varieties())
        .zip(tgt_space.varieties())
        .map(|((plan, sv), tv)| {
            sv.flags()
                .iter()
                .map(|fl| {
                    tv.position(&embed_flag(f, plan, fl))
                        .expect("embedded flag lies in the target variety")
                })
                .collect()
        })
        .collect();

    let mut owner: Vec<Option<usize>> = vec![None; tgt_summary.orbits];
    for point in 0..src_space.points() {
        let coords = src_space.decode(point);
        let image: Vec<u32> = coords
            .iter()
            .enumerate()
            .map(|(i, &c)| images[i][c as usize])
            .collect();
        let t = tgt_part.labels[tgt_space.encode(&image)] as usize;
        let s = src_part.labels[point] as usize;
        match owner[t] {
            None => owner[t] = Some(s),
            Some(prev) if prev != s => {
                return Ok(LemmaOutcome {
                    holds: false,
                    source_orbits: src_part.count(),
                    target_orbits: tgt_part.count(),
                    counterexample: Some(Counterexample {
                        first: src_space.decode(src_part.reps[prev]),
                        second: coords,
                        target_orbit: t,
                    }),
                });
            }
            Some(_) => {}
        }
    }
    Ok(LemmaOutcome {
        holds: true,
        source_orbits: src_part.count(),
        target_orbits: tgt_part.count(),
        counterexample: None,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::flag_model::ParabolicSignature;
    use crate::truncation::{embed_shape, truncate, TruncationPolicy};

    fn plan(sig: &str, n: usize, delta: usize) -> EmbeddingPlan {
        let sig: ParabolicSignature = sig.parse().unwrap();
        let shape = truncate(&sig, n, &TruncationPolicy::Balanced).unwrap();
        embed_shape(&shape, delta).unwrap()
    }

    #[test]
    fn type_a_lines() {
        let f = PrimeField::new(2).unwrap();
        let p = plan("A:1,inf", 3, 1);
        let out = lemma_key_check(&[p.clone(), p], f, 100_000).unwrap();
        assert!(out.holds);
        assert_eq!((out.source_orbits, out.target_orbits), (2, 2));
    }

    #[test]
    fn symplectic_pair() {
        let f = PrimeField::new(2).unwrap();
        let out = lemma_key_check(
            &[plan("C:1,inf,1", 4, 2), plan("C:inf,inf", 4, 2)],
            f,
            100_000,
        )
        .unwrap();
        assert!(out.holds);
        assert!(out.source_orbits <= out.target_orbits);
    }

    #[test]
    fn embedded_flags_are_isotropic() {
        let f = PrimeField::new(2).unwrap();
        let p = plan("D:1,inf,inf,1", 6, 2);
        let src = StandardForm::new(p.source().lie_type(), 6, f).unwrap();
        let tgt = StandardForm::new(p.source().lie_type(), 8, f).unwrap();
        let flags = super::super::flags::enumerate_flags(p.source(), &src, 100_000).unwrap();
        for fl in flags.iter().take(50) {
            let e = embed_flag(f, &p, fl);
            let m = e.members().len();
            for k in 0..m {
                assert_eq!(tgt.perp(&e.members()[k]), e.members()[m - 1 - k]);
            }
        }
    }
}
