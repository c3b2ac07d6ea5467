//! Orbits of the diagonal action on products of flag varieties.

use num_bigint::BigUint;
use num_traits::ToPrimitive;
use serde::Serialize;

use super::flags::{expected_flag_count, FlagOverGF, FlagVariety};
use super::form::StandardForm;
use super::group::group_generators;
use super::linalg::Matrix;
use crate::error::FieldError;
use crate::truncation::TruncatedFlagShape;

pub const DEFAULT_BUDGET: u64 = 200_000;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum OrbitStrategy {
    /// Breadth-first search over the whole product.
    Bfs,
    /// Fix the first flag and let its stabilizer act on the remaining
    /// factors, using Schreier generators and union-find.
    Stabilizer,
}

/// Product of flag varieties with the generator action tabulated.
#[derive(Clone, Debug)]
pub struct ProductSpace {
    form: StandardForm,
    varieties: Vec<FlagVariety>,
    /// `tables[i][g]` is the permutation of factor `i` induced by generator `g`.
    tables: Vec<Vec<Vec<u32>>>,
    strides: Vec<usize>,
    points: usize,
}

impl ProductSpace {
    pub fn new(
        shapes: &[TruncatedFlagShape],
        form: &StandardForm,
        gens: &[Matrix],
        budget: u64,
    ) -> Result<Self, FieldError> {
        let needed = product_size(shapes, form)?;
        if needed > budget as u128 {
            return Err(FieldError::BudgetExceeded { needed, budget });
        }
        let varieties = shapes
            .iter()
            .map(|s| FlagVariety::new(s, form, budget))
            .collect::<Result<Vec<_>, _>>()?;
        let tables = varieties
            .iter()
            .map(|v| gens.iter().map(|g| v.permutation(form, g)).collect())
            .collect();
        let mut strides = vec![1usize; varieties.len()];
        for i in (0..varieties.len().saturating_sub(1)).rev() {
            strides[i] = strides[i + 1] * varieties[i + 1].len();
        }
        let points = varieties.iter().map(|v| v.len()).product();
        Ok(ProductSpace {
            form: form.clone(),
            varieties,
            tables,
            strides,
            points,
        })
    }

    pub fn form(&self) -> &StandardForm {
        &self.form
    }

    pub fn varieties(&self) -> &[FlagVariety] {
        &self.varieties
    }

    pub fn points(&self) -> usize {
        self.points
    }

    pub fn generator_count(&self) -> usize {
        self.tables.first().map_or(0, |t| t.len())
    }

    pub fn encode(&self, coords: &[u32]) -> usize {
        coords
            .iter()
            .zip(&self.strides)
            .map(|(&c, s)| c as usize * s)
            .sum()
    }

    pub fn decode(&self, mut point: usize) -> Vec<u32> {
        self.strides
            .iter()
            .map(|s| {
                let c = point / s;
                point %= s;
                c as u32
            })
            .collect()
    }

    pub fn flags_at(&self, point: usize) -> Vec<&FlagOverGF> {
        self.decode(point)
            .iter()
            .zip(&self.varieties)
            .map(|(&c, v)| &v.flags()[c as usize])
            .collect()
    }

    fn act(&self, g: usize, point: usize) -> usize {
        let mut out = 0;
        let mut rest = point;
        for (i, s) in self.strides.iter().enumerate() {
            let c = rest / s;
            rest %= s;
            out += self.tables[i][g][c] as usize * s;
        }
        out
    }

    /// Orbit label of every point, with labels numbered by first appearance.
    pub fn partition(&self, strategy: OrbitStrategy) -> OrbitPartition {
        match strategy {
            OrbitStrategy::Bfs => self.partition_bfs(),
            OrbitStrategy::Stabilizer => self.partition_stabilizer(),
        }
    }

    fn partition_bfs(&self) -> OrbitPartition {
        const UNSEEN: u32 = u32::MAX;
        let mut labels = vec![UNSEEN; self.points];
        let mut reps = Vec::new();
        let mut stack = Vec::new();
        for start in 0..self.points {
            if labels[start] != UNSEEN {
                continue;
            }
            let id = reps.len() as u32;
            reps.push(start);
            labels[start] = id;
            stack.push(start);
            while let Some(x) = stack.pop() {
                for g in 0..self.generator_count() {
                    let y = self.act(g, x);
                    if labels[y] == UNSEEN {
                        labels[y] = id;
                        stack.push(y);
                    }
                }
            }
        }
        OrbitPartition { labels, reps }
    }

    fn partition_stabilizer(&self) -> OrbitPartition {
        let k = self.varieties.len();
        if k < 2 {
            return self.partition_bfs();
        }
        let first = self.varieties[0].len();
        let rest_points = self.points / first;
        let gens = self.generator_count();
        // Transversal: for each flag x of factor 0, an element t_x with
        // t_x(x0) = x, stored as permutations of every factor.
        let mut transversal: Vec<Option<Vec<Vec<u32>>>> = vec![None; first];
        let identity: Vec<Vec<u32>> = self
            .varieties
            .iter()
            .map(|v| (0..v.len() as u32).collect())
            .collect();
        transversal[0] = Some(identity);
        let mut queue = vec![0usize];
        let mut head = 0;
        while head < queue.len() {
            let x = queue[head];
            head += 1;
            for g in 0..gens {
                let y = self.tables[0][g][x] as usize;
                if transversal[y].is_none() {
                    let tx = transversal[x].as_ref().expect("visited");
                    let ty: Vec<Vec<u32>> = (0..k)
                        .map(|i| {
                            tx[i]
                                .iter()
                                .map(|&c| self.tables[i][g][c as usize])
                                .collect()
                        })
                        .collect();
                    transversal[y] = Some(ty);
                    queue.push(y);
                }
            }
        }
        assert!(
            transversal.iter().all(Option::is_some),
            "the group acts transitively on each flag variety"
        );
        let transversal: Vec<Vec<Vec<u32>>> = transversal.into_iter().map(Option::unwrap).collect();
        let inverses: Vec<Vec<Vec<u32>>> = transversal
            .iter()
            .map(|t| {
                t.iter()
                    .map(|perm| {
                        let mut inv = vec![0u32; perm.len()];
                        for (a, &b) in perm.iter().enumerate() {
                            inv[b as usize] = a as u32;
                        }
                        inv
                    })
                    .collect()
            })
            .collect();
        let rest_strides = &self.strides[1..];
        let mut uf = UnionFind::new(rest_points);
        for x in 0..first {
            for g in 0..gens {
                let gx = self.tables[0][g][x] as usize;
                // s = t_{gx}^{-1} · g · t_x fixes the base flag.
                let s: Vec<Vec<u32>> = (1..k)
                    .map(|i| {
                        transversal[x][i]
                            .iter()
                            .map(|&c| inverses[gx][i][self.tables[i][g][c as usize] as usize])
                            .collect()
                    })
                    .collect();
                debug_assert_eq!(
                    inverses[gx][0][self.tables[0][g][transversal[x][0][0] as usize] as usize],
                    0
                );
                for y in 0..rest_points {
                    let mut rest = y;
                    let mut image = 0;
                    for (j, st) in rest_strides.iter().enumerate() {
                        let c = rest / st;
                        rest %= st;
                        image += s[j][c] as usize * st;
                    }
                    uf.union(y, image);
                }
            }
        }
        // Every point (x, y) is t_x applied to (x0, t_x^{-1} y).
        let mut root_label = vec![u32::MAX; rest_points];
        let mut labels = vec![0u32; self.points];
        let mut reps = Vec::new();
        for y in 0..rest_points {
            let r = uf.find(y);
            if root_label[r] == u32::MAX {
                root_label[r] = reps.len() as u32;
                reps.push(r);
            }
        }
        for (point, label) in labels.iter_mut().enumerate() {
            let coords = self.decode(point);
            let x = coords[0] as usize;
            let mut base = 0;
            for (j, st) in rest_strides.iter().enumerate() {
                base += inverses[x][j + 1][coords[j + 1] as usize] as usize * st;
            }
            *label = root_label[uf.find(base)];
        }
        OrbitPartition { labels, reps }.renumbered()
    }
}

fn product_size(shapes: &[TruncatedFlagShape], form: &StandardForm) -> Result<u128, FieldError> {
    if shapes.is_empty() {
        return Err(FieldError::ShapeMismatch("no shapes given".into()));
    }
    let q = form.field().order() as u64;
    let mut total = BigUint::from(1u32);
    for s in shapes {
        if s.lie_type() != form.lie_type() || s.total() != form.n() {
            return Err(FieldError::ShapeMismatch(format!(
                "shape {:?} does not live in the type {} space of dimension {}",
                s.dims(),
                form.lie_type(),
                form.n()
            )));
        }
        total *= expected_flag_count(s, q);
    }
    Ok(total.to_u128().unwrap_or(u128::MAX))
}

struct UnionFind {
    parent: Vec<usize>,
}

impl UnionFind {
    fn new(n: usize) -> Self {
        UnionFind {
            parent: (0..n).collect(),
        }
    }

    fn find(&mut self, mut x: usize) -> usize {
        while self.parent[x] != x {
            self.parent[x] = self.parent[self.parent[x]];
            x = self.parent[x];
        }
        x
    }

    fn union(&mut self, a: usize, b: usize) {
        let (ra, rb) = (self.find(a), self.find(b));
        if ra != rb {
            self.parent[ra.max(rb)] = ra.min(rb);
        }
    }
}

/// Orbit label per point and one representative point per orbit.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct OrbitPartition {
    pub labels: Vec<u32>,
    pub reps: Vec<usize>,
}

impl OrbitPartition {
    pub fn count(&self) -> usize {
        self.reps.len()
    }

    /// Relabels orbits by their smallest point, so partitions from different
    /// strategies compare equal.
    pub fn renumbered(&self) -> OrbitPartition {
        let mut map = vec![u32::MAX; self.reps.len()];
        let mut labels = Vec::with_capacity(self.labels.len());
        let mut reps = Vec::new();
        for (point, &l) in self.labels.iter().enumerate() {
            if map[l as usize] == u32::MAX {
                map[l as usize] = reps.len() as u32;
                reps.push(point);
            }
            labels.push(map[l as usize]);
        }
        OrbitPartition { labels, reps }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct OrbitSummary {
    pub orbits: usize,
    pub points: usize,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub representatives: Option<Vec<Vec<Vec<Vec<u8>>>>>,
}

/// Counts orbits of the isometry group of `form` on the product of the flag
/// varieties of `shapes`. For two or more factors the stabilizer strategy
/// runs too and must produce the same partition.
pub fn enumerate_orbits(
    shapes: &[TruncatedFlagShape],
    form: &StandardForm,
    budget: u64,
) -> Result<(OrbitSummary, ProductSpace, OrbitPartition), FieldError> {
    let gens = group_generators(form)?;
    let space = ProductSpace::new(shapes, form, &gens, budget)?;
    let bfs = space.partition(OrbitStrategy::Bfs);
    if shapes.len() >= 2 {
        let stab = space.partition(OrbitStrategy::Stabilizer);
        assert_eq!(bfs, stab, "orbit strategies disagree");
    }
    let representatives = bfs
        .reps
        .iter()
        .map(|&r| {
            space
                .flags_at(r)
                .iter()
                .flat_map(|f| f.to_matrices())
                .collect()
        })
        .collect();
    let summary = OrbitSummary {
        orbits: bfs.count(),
        points: space.points(),
        representatives: Some(representatives),
    };
    Ok((summary, space, bfs))
}

/// Orbit count only.
pub fn count_orbits(
    shapes: &[TruncatedFlagShape],
    form: &StandardForm,
    budget: u64,
) -> Result<usize, FieldError> {
    Ok(enumerate_orbits(shapes, form, budget)?.0.orbits)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::finite_field::field::PrimeField;
    use crate::finite_field::group::alternate_generators;
    use crate::flag_model::LieType;

    fn shape(t: LieType, dims: &[usize]) -> TruncatedFlagShape {
        TruncatedFlagShape::from_dims(t, dims.to_vec()).unwrap()
    }

    fn orbits(t: LieType, dims: &[&[usize]], p: u32) -> usize {
        let f = PrimeField::new(p).unwrap();
        let shapes: Vec<_> = dims.iter().map(|d| shape(t, d)).collect();
        let form = StandardForm::new(t, shapes[0].total(), f).unwrap();
        count_orbits(&shapes, &form, 1_000_000).unwrap()
    }

    #[test]
    fn examples() {
        assert_eq!(orbits(LieType::A, &[&[1, 2], &[1, 2]], 2), 2);
        assert_eq!(orbits(LieType::A, &[&[1, 3], &[1, 3], &[1, 3]], 2), 6);
        assert_eq!(orbits(LieType::A, &[&[1, 1, 1], &[1, 1, 1]], 3), 6);
        assert_eq!(orbits(LieType::C, &[&[2, 2], &[2, 2]], 2), 3);
        assert_eq!(orbits(LieType::A, &[&[2]], 2), 1);
    }

    #[test]
    fn generator_set_does_not_matter() {
        let f = PrimeField::new(2).unwrap();
        let shapes = vec![shape(LieType::C, &[1, 2, 1]), shape(LieType::C, &[2, 2])];
        let form = StandardForm::new(LieType::C, 4, f).unwrap();
        let a =
            ProductSpace::new(&shapes, &form, &group_generators(&form).unwrap(), 10_000).unwrap();
        let b = ProductSpace::new(
            &shapes,
            &form,
            &alternate_generators(&form).unwrap(),
            10_000,
        )
        .unwrap();
        assert_eq!(
            a.partition(OrbitStrategy::Bfs),
            b.partition(OrbitStrategy::Bfs)
        );
        assert_eq!(
            a.partition(OrbitStrategy::Stabilizer),
            b.partition(OrbitStrategy::Bfs)
        );
    }

    #[test]
    fn budget_exceeded() {
        let f = PrimeField::new(3).unwrap();
        let shapes = vec![shape(LieType::A, &[2, 2]), shape(LieType::A, &[2, 2])];
        let form = StandardForm::new(LieType::A, 4, f).unwrap();
        assert!(matches!(
            enumerate_orbits(&shapes, &form, 1000),
            Err(FieldError::BudgetExceeded { needed: 16900, .. })
        ));
    }
}
