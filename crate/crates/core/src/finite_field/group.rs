//! Generating sets for `GL_N`, `Sp_N` and `O_N` over `GF(p)`.

use std::collections::{HashSet, VecDeque};

use super::field::PrimeField;
use super::form::{unit, StandardForm};
use super::linalg::{Matrix, Vector};
use crate::error::FieldError;
use crate::flag_model::LieType;

/// Generators of the full isometry group of `form` (all of `GL_N` for type A).
/// Every generator is checked against the form.
pub fn group_generators(form: &StandardForm) -> Result<Vec<Matrix>, FieldError> {
    let f = form.field();
    let n = form.n();
    let mut gens = match form.lie_type() {
        LieType::A => gl_generators(f, n),
        LieType::C => sp_generators(form),
        LieType::B | LieType::D => orthogonal_generators(form),
    };
    gens.retain(|g| !g.is_identity());
    let mut seen = HashSet::new();
    gens.retain(|g| seen.insert(g.clone()));
    for g in &gens {
        if !form.preserves(g) || g.inverse(f).is_none() {
            return Err(FieldError::NotAnIsometry);
        }
    }
    Ok(gens)
}

/// The same group through a different generating set: every generator is
/// conjugated by a fixed group element.
pub fn alternate_generators(form: &StandardForm) -> Result<Vec<Matrix>, FieldError> {
    let f = form.field();
    let gens = group_generators(form)?;
    let mut w = Matrix::identity(form.n());
    for g in gens.iter().rev() {
        w = w.mul(f, g);
    }
    let w = w.mul(f, &gens[0]).mul(f, gens.last().expect("nonempty"));
    let w_inv = w.inverse(f).expect("group element");
    Ok(gens
        .iter()
        .rev()
        .map(|g| w_inv.mul(f, g).mul(f, &w))
        .collect())
}

fn gl_generators(f: PrimeField, n: usize) -> Vec<Matrix> {
    let mut gens = Vec::new();
    for i in 0..n {
        for j in 0..n {
            if i != j {
                let mut g = Matrix::identity(n);
                g.set(i, j, 1);
                gens.push(g);
            }
        }
    }
    let a = f.primitive_root();
    if a != 1 {
        let mut d = Matrix::identity(n);
        d.set(0, 0, a);
        gens.push(d);
    }
    if gens.is_empty() {
        gens.push(Matrix::identity(n));
    }
    gens
}

/// Matrix of the linear map `x ↦ phi(x)` from images of the unit vectors.
fn from_map(n: usize, phi: impl Fn(&[u8]) -> Vector) -> Matrix {
    let cols: Vec<Vector> = (0..n).map(|j| phi(&unit(n, j))).collect();
    Matrix::from_rows(&cols).transpose()
}

fn axpy(f: PrimeField, y: &mut [u8], a: u8, x: &[u8]) {
    if a == 0 {
        return;
    }
    for (yi, &xi) in y.iter_mut().zip(x) {
        *yi = f.add(*yi, f.mul(a, xi));
    }
}

fn sp_generators(form: &StandardForm) -> Vec<Matrix> {
    let f = form.field();
    let n = form.n();
    let mut vs: Vec<Vector> = (0..n).map(|i| unit(n, i)).collect();
    for i in 0..n {
        for j in i + 1..n {
            let mut v = unit(n, i);
            v[j] = 1;
            vs.push(v);
        }
    }
    vs.iter()
        .map(|v| {
            from_map(n, |x| {
                let mut y = x.to_vec();
                axpy(f, &mut y, form.bilinear(x, v), v);
                y
            })
        })
        .collect()
}

fn orthogonal_generators(form: &StandardForm) -> Vec<Matrix> {
    let f = form.field();
    let n = form.n();
    let partner = |i: usize| n - 1 - i;
    let mut gens = Vec::new();
    // Eichler transformations E(u, v) with u = e_i singular and v = e_j ⊥ u.
    for i in 0..n {
        if n % 2 == 1 && i == n / 2 {
            continue;
        }
        let u = unit(n, i);
        for j in 0..n {
            if j == i || j == partner(i) {
                continue;
            }
            let v = unit(n, j);
            let qv = form.quadratic(&v);
            gens.push(from_map(n, |x| {
                let bxu = form.bilinear(x, &u);
                let bxv = form.bilinear(x, &v);
                let mut y = x.to_vec();
                axpy(f, &mut y, bxu, &v);
                axpy(f, &mut y, f.neg(bxv), &u);
                axpy(f, &mut y, f.neg(f.mul(qv, bxu)), &u);
                y
            }));
        }
    }
    // Reflections in nonsingular vectors.
    let a = f.primitive_root();
    let mut ws = vec![{
        let mut w = unit(n, 0);
        w[partner(0)] = 1;
        w
    }];
    if f.p() != 2 {
        let mut w = unit(n, 0);
        w[partner(0)] = a;
        ws.push(w);
        if n % 2 == 1 {
            ws.push(unit(n, n / 2));
        }
    }
    for w in &ws {
        let qw = form.quadratic(w);
        if qw == 0 {
            continue;
        }
        let inv = f.inv(qw);
        gens.push(from_map(n, |x| {
            let mut y = x.to_vec();
            axpy(f, &mut y, f.neg(f.mul(form.bilinear(x, w), inv)), w);
            y
        }));
    }
    // A torus element.
    if a != 1 && n >= 2 {
        let mut d = Matrix::identity(n);
        d.set(0, 0, a);
        d.set(partner(0), partner(0), f.inv(a));
        gens.push(d);
    }
    gens
}

/// Order of the group generated by `gens`, or `None` once it passes `limit`.
pub fn closure_order(f: PrimeField, gens: &[Matrix], limit: usize) -> Option<usize> {
    let n = gens.first().map_or(0, |g| g.n());
    let id = Matrix::identity(n);
    let mut seen: HashSet<Matrix> = HashSet::new();
    let mut queue = VecDeque::new();
    seen.insert(id.clone());
    queue.push_back(id);
    while let Some(x) = queue.pop_front() {
        for g in gens {
            let y = g.mul(f, &x);
            if seen.insert(y.clone()) {
                if seen.len() > limit {
                    return None;
                }
                queue.push_back(y);
            }
        }
    }
    Some(seen.len())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn order(t: LieType, n: usize, p: u32) -> usize {
        let f = PrimeField::new(p).unwrap();
        let form = StandardForm::new(t, n, f).unwrap();
        let gens = group_generators(&form).unwrap();
        closure_order(f, &gens, 2_000_000).unwrap()
    }

    #[test]
    fn known_orders() {
        assert_eq!(order(LieType::A, 2, 2), 6);
        assert_eq!(order(LieType::A, 2, 3), 48);
        assert_eq!(order(LieType::A, 3, 2), 168);
        assert_eq!(order(LieType::C, 2, 3), 24);
        assert_eq!(order(LieType::C, 2, 5), 120);
        assert_eq!(order(LieType::C, 4, 2), 720);
        assert_eq!(order(LieType::D, 2, 3), 4);
        assert_eq!(order(LieType::D, 2, 2), 2);
        assert_eq!(order(LieType::B, 3, 3), 48);
        assert_eq!(order(LieType::D, 4, 2), 72);
        assert_eq!(order(LieType::D, 4, 3), 1152);
        assert_eq!(order(LieType::B, 5, 2), 720);
    }

    #[test]
    fn alternate_set_generates_the_same_group() {
        for (t, n, p, expect) in [
            (LieType::C, 4, 2, 720),
            (LieType::D, 4, 3, 1152),
            (LieType::A, 3, 2, 168),
        ] {
            let f = PrimeField::new(p).unwrap();
            let form = StandardForm::new(t, n, f).unwrap();
            let alt = alternate_generators(&form).unwrap();
            assert_ne!(alt, group_generators(&form).unwrap());
            assert!(alt.iter().all(|g| form.preserves(g)));
            assert_eq!(closure_order(f, &alt, 10_000), Some(expect));
        }
    }
}
