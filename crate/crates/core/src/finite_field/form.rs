//! The fixed split forms used for each type.
//!
//! Coordinates `i` and `n - 1 - i` are paired. For `C` the alternating form has
//! `ω(e_i, e_{n-1-i}) = 1` for `i < n/2` (and `-1` for the mirror). For `B`/`D`
//! the quadratic form is `Q(x) = Σ_{i < n/2} x_i x_{n-1-i}`, plus `½·x_mid²`
//! when `n` is odd (`x_mid²` in characteristic 2). Its polar form is the Gram
//! matrix, which is hyperbolic for even `n` and hyperbolic ⊕ ⟨1⟩ for odd `n`
//! and odd `p`.

use super::field::PrimeField;
use super::linalg::{nullspace, Matrix, SubspaceRref, Vector};
use crate::error::FieldError;
use crate::flag_model::LieType;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct StandardForm {
    lie_type: LieType,
    n: usize,
    field: PrimeField,
    gram: Option<Matrix>,
    /// Upper-triangular coefficients `q_ij` with `Q(x) = Σ_{i≤j} q_ij x_i x_j`.
    quadratic: Option<Matrix>,
}

pub const MAX_DIM: usize = 8;

impl StandardForm {
    pub fn new(lie_type: LieType, n: usize, field: PrimeField) -> Result<Self, FieldError> {
        if n == 0 || n > MAX_DIM {
            return Err(FieldError::Dimension(n));
        }
        if !lie_type.accepts_total(n) {
            return Err(FieldError::ShapeMismatch(format!(
                "dimension {n} has the wrong parity for type {lie_type}"
            )));
        }
        let f = field;
        let (gram, quadratic) = match lie_type {
            LieType::A => (None, None),
            LieType::C => {
                let mut g = Matrix::identity(n);
                for i in 0..n {
                    g.set(i, i, 0);
                }
                for i in 0..n {
                    let v = if i < n / 2 { 1 } else { f.neg(1) };
                    g.set(i, n - 1 - i, v);
                }
                (Some(g), None)
            }
            LieType::B | LieType::D => {
                let mut q = Matrix::identity(n);
                for i in 0..n {
                    q.set(i, i, 0);
                }
                for i in 0..n / 2 {
                    q.set(i, n - 1 - i, 1);
                }
                if n % 2 == 1 {
                    let half = if f.p() == 2 { 1 } else { f.inv(2) };
                    q.set(n / 2, n / 2, half);
                }
                let mut g = q.clone();
                for i in 0..n {
                    for j in 0..n {
                        let v = if i == j {
                            f.add(q.get(i, i), q.get(i, i))
                        } else {
                            f.add(q.get(i, j), q.get(j, i))
                        };
                        g.set(i, j, v);
                    }
                }
                (Some(g), Some(q))
            }
        };
        Ok(StandardForm {
            lie_type,
            n,
            field,
            gram,
            quadratic,
        })
    }

    pub fn lie_type(&self) -> LieType {
        self.lie_type
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn field(&self) -> PrimeField {
        self.field
    }

    pub fn gram(&self) -> Option<&Matrix> {
        self.gram.as_ref()
    }

    pub fn bilinear(&self, x: &[u8], y: &[u8]) -> u8 {
        let Some(g) = &self.gram else { return 0 };
        let f = self.field;
        let mut acc = 0;
        for (i, &xi) in x.iter().enumerate().take(self.n) {
            if xi == 0 {
                continue;
            }
            for (j, &yj) in y.iter().enumerate().take(self.n) {
                if yj != 0 {
                    acc = f.add(acc, f.mul(xi, f.mul(g.get(i, j), yj)));
                }
            }
        }
        acc
    }

    pub fn quadratic(&self, x: &[u8]) -> u8 {
        let Some(q) = &self.quadratic else { return 0 };
        let f = self.field;
        let mut acc = 0;
        for i in 0..self.n {
            for j in i..self.n {
                let c = q.get(i, j);
                if c != 0 {
                    acc = f.add(acc, f.mul(c, f.mul(x[i], x[j])));
                }
            }
        }
        acc
    }

    /// Totally isotropic (symplectic) or totally singular (orthogonal).
    pub fn is_isotropic(&self, s: &SubspaceRref) -> bool {
        if self.gram.is_none() {
            return true;
        }
        let rows = s.rows();
        let singular = self.quadratic.is_none() || rows.iter().all(|r| self.quadratic(r) == 0);
        singular
            && rows
                .iter()
                .enumerate()
                .all(|(i, a)| rows[i + 1..].iter().all(|b| self.bilinear(a, b) == 0))
    }

    /// Orthogonal complement under the Gram matrix.
    pub fn perp(&self, s: &SubspaceRref) -> SubspaceRref {
        let f = self.field;
        let Some(g) = &self.gram else {
            return SubspaceRref::whole(self.n);
        };
        let eqs: Vec<Vector> = s.rows().iter().map(|r| g.transpose().apply(f, r)).collect();
        SubspaceRref::span(f, self.n, nullspace(f, self.n, &eqs))
    }

    /// Whether `m` preserves the bilinear form and, for orthogonal types, the
    /// quadratic form.
    pub fn preserves(&self, m: &Matrix) -> bool {
        let f = self.field;
        let Some(g) = &self.gram else { return true };
        let gm = g.mul(f, m);
        if m.transpose().mul(f, &gm) != *g {
            return false;
        }
        if self.quadratic.is_some() {
            let cols = m.transpose().rows();
            for (i, c) in cols.iter().enumerate() {
                if self.quadratic(c) != self.quadratic(&unit(self.n, i)) {
                    return false;
                }
            }
        }
        true
    }
}

pub fn unit(n: usize, i: usize) -> Vector {
    let mut v = vec![0; n];
    v[i] = 1;
    v
}
