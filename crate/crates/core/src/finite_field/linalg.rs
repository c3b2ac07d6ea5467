//! Vectors, square matrices and subspaces over `GF(p)`.

use super::field::PrimeField;

pub type Vector = Vec<u8>;

/// Reduces `rows` to reduced row-echelon form in place and drops zero rows.
/// Returns the pivot columns.
pub fn rref(f: PrimeField, rows: &mut Vec<Vector>) -> Vec<usize> {
    let n = rows.first().map_or(0, |r| r.len());
    let mut pivots = Vec::new();
    let mut r = 0;
    for col in 0..n {
        if r == rows.len() {
            break;
        }
        let Some(sel) = (r..rows.len()).find(|&i| rows[i][col] != 0) else {
            continue;
        };
        rows.swap(r, sel);
        let inv = f.inv(rows[r][col]);
        for x in rows[r].iter_mut() {
            *x = f.mul(*x, inv);
        }
        let pivot = rows[r].clone();
        for (i, row) in rows.iter_mut().enumerate() {
            if i != r && row[col] != 0 {
                let factor = row[col];
                for (x, &pj) in row.iter_mut().zip(&pivot).take(n) {
                    *x = f.sub(*x, f.mul(factor, pj));
                }
            }
        }
        pivots.push(col);
        r += 1;
    }
    rows.truncate(r);
    pivots
}

/// Basis of `{x : M x = 0}` for the matrix with the given rows.
pub fn nullspace(f: PrimeField, n: usize, rows: &[Vector]) -> Vec<Vector> {
    let mut m = rows.to_vec();
    let pivots = rref(f, &mut m);
    let free: Vec<usize> = (0..n).filter(|c| !pivots.contains(c)).collect();
    free.iter()
        .map(|&fc| {
            let mut v = vec![0u8; n];
            v[fc] = 1;
            for (row, &pc) in m.iter().zip(&pivots) {
                v[pc] = f.neg(row[fc]);
            }
            v
        })
        .collect()
}

/// Square matrix, row-major. Acts on column vectors.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Matrix {
    n: usize,
    data: Vec<u8>,
}

impl Matrix {
    pub fn identity(n: usize) -> Self {
        let mut data = vec![0; n * n];
        for i in 0..n {
            data[i * n + i] = 1;
        }
        Matrix { n, data }
    }

    pub fn from_rows(rows: &[Vector]) -> Self {
        let n = rows.len();
        let data = rows.iter().flat_map(|r| r.iter().copied()).collect();
        Matrix { n, data }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    #[inline]
    pub fn get(&self, i: usize, j: usize) -> u8 {
        self.data[i * self.n + j]
    }

    #[inline]
    pub fn set(&mut self, i: usize, j: usize, v: u8) {
        self.data[i * self.n + j] = v;
    }

    pub fn rows(&self) -> Vec<Vector> {
        self.data.chunks(self.n).map(|c| c.to_vec()).collect()
    }

    pub fn bytes(&self) -> &[u8] {
        &self.data
    }

    pub fn is_identity(&self) -> bool {
        *self == Matrix::identity(self.n)
    }

    pub fn apply(&self, f: PrimeField, x: &[u8]) -> Vector {
        (0..self.n)
            .map(|i| {
                let mut acc = 0u8;
                for (j, &xj) in x.iter().enumerate() {
                    if xj != 0 {
                        acc = f.add(acc, f.mul(self.get(i, j), xj));
                    }
                }
                acc
            })
            .collect()
    }

    pub fn mul(&self, f: PrimeField, other: &Matrix) -> Matrix {
        let n = self.n;
        let mut out = Matrix {
            n,
            data: vec![0; n * n],
        };
        for i in 0..n {
            for k in 0..n {
                let a = self.get(i, k);
                if a == 0 {
                    continue;
                }
                for j in 0..n {
                    let v = f.add(out.get(i, j), f.mul(a, other.get(k, j)));
                    out.set(i, j, v);
                }
            }
        }
        out
    }

    pub fn transpose(&self) -> Matrix {
        let n = self.n;
        let mut out = self.clone();
        for i in 0..n {
            for j in 0..n {
                out.set(i, j, self.get(j, i));
            }
        }
        out
    }

    pub fn inverse(&self, f: PrimeField) -> Option<Matrix> {
        let n = self.n;
        let mut aug: Vec<Vector> = (0..n)
            .map(|i| {
                let mut row = self.data[i * n..(i + 1) * n].to_vec();
                row.extend((0..n).map(|j| u8::from(i == j)));
                row
            })
            .collect();
        let pivots = rref(f, &mut aug);
        if pivots.len() < n || pivots[n - 1] != n - 1 {
            return None;
        }
        Some(Matrix::from_rows(
            &aug.iter().map(|r| r[n..].to_vec()).collect::<Vec<_>>(),
        ))
    }
}

/// A subspace of `GF(p)^n` stored by its reduced row-echelon basis, so two
/// subspaces are equal exactly when their representations are.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct SubspaceRref {
    n: usize,
    rows: Vec<Vector>,
}

impl SubspaceRref {
    pub fn span(f: PrimeField, n: usize, vectors: Vec<Vector>) -> Self {
        let mut rows = vectors;
        debug_assert!(rows.iter().all(|r| r.len() == n));
        rref(f, &mut rows);
        SubspaceRref { n, rows }
    }

    pub fn zero(n: usize) -> Self {
        SubspaceRref {
            n,
            rows: Vec::new(),
        }
    }

    pub fn whole(n: usize) -> Self {
        SubspaceRref {
            n,
            rows: Matrix::identity(n).rows(),
        }
    }

    pub fn ambient_dim(&self) -> usize {
        self.n
    }

    pub fn dim(&self) -> usize {
        self.rows.len()
    }

    pub fn rows(&self) -> &[Vector] {
        &self.rows
    }

    pub fn pivots(&self) -> Vec<usize> {
        self.rows
            .iter()
            .map(|r| r.iter().position(|&x| x != 0).expect("nonzero row"))
            .collect()
    }

    pub fn sum(&self, f: PrimeField, other: &SubspaceRref) -> SubspaceRref {
        let mut v = self.rows.clone();
        v.extend(other.rows.iter().cloned());
        SubspaceRref::span(f, self.n, v)
    }

    pub fn intersection_dim(&self, f: PrimeField, other: &SubspaceRref) -> usize {
        self.dim() + other.dim() - self.sum(f, other).dim()
    }

    pub fn contains(&self, f: PrimeField, v: &[u8]) -> bool {
        let mut rows = self.rows.clone();
        rows.push(v.to_vec());
        rref(f, &mut rows);
        rows.len() == self.dim()
    }

    pub fn is_subspace_of(&self, f: PrimeField, other: &SubspaceRref) -> bool {
        self.rows.iter().all(|r| other.contains(f, r))
    }

    pub fn transform(&self, f: PrimeField, g: &Matrix) -> SubspaceRref {
        SubspaceRref::span(f, self.n, self.rows.iter().map(|r| g.apply(f, r)).collect())
    }

    /// Appends this subspace's canonical bytes to `out`.
    pub fn write_key(&self, out: &mut Vec<u8>) {
        for r in &self.rows {
            out.extend_from_slice(r);
        }
    }
}

/// All `k`-dimensional subspaces of `GF(p)^r`, as reduced row-echelon bases.
pub fn all_subspaces(f: PrimeField, r: usize, k: usize) -> Vec<Vec<Vector>> {
    let mut out = Vec::new();
    if k > r {
        return out;
    }
    let mut pivots = Vec::with_capacity(k);
    choose_pivots(r, k, 0, &mut pivots, &mut |piv| {
        // free slots: (row, col) with col > pivot(row) and col not a pivot
        let slots: Vec<(usize, usize)> = piv
            .iter()
            .enumerate()
            .flat_map(|(i, &pc)| {
                ((pc + 1)..r)
                    .filter(|c| !piv.contains(c))
                    .map(move |c| (i, c))
            })
            .collect();
        let mut base = vec![vec![0u8; r]; k];
        for (i, &pc) in piv.iter().enumerate() {
            base[i][pc] = 1;
        }
        let mut digits = vec![0u8; slots.len()];
        loop {
            let mut m = base.clone();
            for (&(i, c), &d) in slots.iter().zip(&digits) {
                m[i][c] = d;
            }
            out.push(m);
            // odometer
            let mut pos = 0;
            loop {
                if pos == digits.len() {
                    return;
                }
                digits[pos] += 1;
                if digits[pos] < f.p() {
                    break;
                }
                digits[pos] = 0;
                pos += 1;
            }
        }
    });
    out
}

fn choose_pivots(
    r: usize,
    k: usize,
    start: usize,
    acc: &mut Vec<usize>,
    emit: &mut dyn FnMut(&[usize]),
) {
    if acc.len() == k {
        emit(acc);
        return;
    }
    for c in start..r {
        if r - c < k - acc.len() {
            break;
        }
        acc.push(c);
        choose_pivots(r, k, c + 1, acc, emit);
        acc.pop();
    }
}

/// Subspaces `G` with `lower ⊆ G ⊆ upper` and `dim G = lower.dim() + k`.
pub fn subspaces_between(
    f: PrimeField,
    lower: &SubspaceRref,
    upper: &SubspaceRref,
    k: usize,
) -> Vec<SubspaceRref> {
    let n = lower.ambient_dim();
    let mut current = lower.rows().to_vec();
    let mut complement = Vec::new();
    for u in upper.rows() {
        let mut trial = current.clone();
        trial.push(u.clone());
        rref(f, &mut trial);
        if trial.len() > current.len() {
            complement.push(u.clone());
            current = trial;
        }
    }
    all_subspaces(f, complement.len(), k)
        .into_iter()
        .map(|w| {
            let mut vecs = lower.rows().to_vec();
            for row in w {
                let mut v = vec![0u8; n];
                for (coef, c) in row.iter().zip(&complement) {
                    if *coef != 0 {
                        for j in 0..n {
                            v[j] = f.add(v[j], f.mul(*coef, c[j]));
                        }
                    }
                }
                vecs.push(v);
            }
            SubspaceRref::span(f, n, vecs)
        })
        .collect()
}
