//! Finite-dimensional algebras given by structure constants.

use num_traits::Zero;

use crate::error::{Error, Result};
use crate::freealg::Rational;

pub type Vector = Vec<Rational>;

/// A bilinear product on `K^dim`: `e_i * e_j = Σ_k c[i][j][k] e_k`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Table {
    dim: usize,
    c: Vec<Vec<Vector>>,
}

impl Table {
    pub fn zero(dim: usize) -> Self {
        Table { dim, c: vec![vec![vec![Rational::zero(); dim]; dim]; dim] }
    }

    pub fn from_constants(c: Vec<Vec<Vector>>) -> Result<Self> {
        let dim = c.len();
        if c.iter().any(|row| row.len() != dim || row.iter().any(|v| v.len() != dim)) {
            return Err(Error::DimensionMismatch(format!("structure constants are not {dim}x{dim}x{dim}")));
        }
        Ok(Table { dim, c })
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn get(&self, i: usize, j: usize) -> &Vector {
        &self.c[i][j]
    }

    pub fn set(&mut self, i: usize, j: usize, v: Vector) {
        assert_eq!(v.len(), self.dim);
        self.c[i][j] = v;
    }

    pub fn constants(&self) -> &[Vec<Vector>] {
        &self.c
    }

    pub fn product(&self, u: &[Rational], v: &[Rational]) -> Vector {
        let mut out = vec![Rational::zero(); self.dim];
        for (i, a) in u.iter().enumerate().filter(|(_, a)| !a.is_zero()) {
            for (j, b) in v.iter().enumerate().filter(|(_, b)| !b.is_zero()) {
                let ab = a * b;
                for (o, c) in out.iter_mut().zip(&self.c[i][j]) {
                    if !c.is_zero() {
                        *o += &ab * c;
                    }
                }
            }
        }
        out
    }

    pub fn unit(&self, i: usize) -> Vector {
        crate::linalg::unit(self.dim, i)
    }

    /// First pair with `[e_i, e_j] + [e_j, e_i] ≠ 0`.
    pub fn antisymmetry_failure(&self) -> Option<(usize, usize)> {
        for i in 0..self.dim {
            for j in i..self.dim {
                let s = add(&self.c[i][j], &self.c[j][i]);
                if !is_zero(&s) {
                    return Some((i, j));
                }
            }
        }
        None
    }

    /// First triple violating `[[x,y],z] + [[y,z],x] + [[z,x],y] = 0`.
    pub fn jacobi_failure(&self) -> Option<(usize, usize, usize)> {
        self.triples().find(|&(i, j, k)| {
            let (x, y, z) = (self.unit(i), self.unit(j), self.unit(k));
            let a = self.product(&self.product(&x, &y), &z);
            let b = self.product(&self.product(&y, &z), &x);
            let c = self.product(&self.product(&z, &x), &y);
            !is_zero(&add(&add(&a, &b), &c))
        })
    }

    pub fn is_lie(&self) -> bool {
        self.antisymmetry_failure().is_none() && self.jacobi_failure().is_none()
    }

    /// First triple violating the right Leibniz identity
    /// `[[x,y],z] = [[x,z],y] + [x,[y,z]]`.
    pub fn leibniz_failure(&self) -> Option<(usize, usize, usize)> {
        self.triples().find(|&(i, j, k)| {
            let (x, y, z) = (self.unit(i), self.unit(j), self.unit(k));
            let lhs = self.product(&self.product(&x, &y), &z);
            let r1 = self.product(&self.product(&x, &z), &y);
            let r2 = self.product(&x, &self.product(&y, &z));
            !is_zero(&sub(&lhs, &add(&r1, &r2)))
        })
    }

    pub fn is_leibniz(&self) -> bool {
        self.leibniz_failure().is_none()
    }

    fn triples(&self) -> impl Iterator<Item = (usize, usize, usize)> {
        let n = self.dim;
        (0..n).flat_map(move |i| (0..n).flat_map(move |j| (0..n).map(move |k| (i, j, k))))
    }

    /// The same algebra in a new basis: `new[i] = Σ_j basis[i][j] e_j`.
    pub fn change_basis(&self, basis: &[Vector]) -> Result<Table> {
        let inv = crate::linalg::invert(basis).ok_or(Error::DependentGenerators)?;
        let mut t = Table::zero(self.dim);
        for i in 0..self.dim {
            for j in 0..self.dim {
                let p = self.product(&basis[i], &basis[j]);
                t.c[i][j] = apply_transpose(&inv, &p);
            }
        }
        Ok(t)
    }
}

/// Coordinates of `v` (old basis) in a new basis whose inverse matrix is
/// `inv`: `v_new = v_old * inv`.
pub fn apply_transpose(inv: &[Vector], v: &[Rational]) -> Vector {
    let n = v.len();
    (0..n)
        .map(|k| v.iter().zip(inv).fold(Rational::zero(), |acc, (a, row)| acc + a * &row[k]))
        .collect()
}

pub fn add(u: &[Rational], v: &[Rational]) -> Vector {
    u.iter().zip(v).map(|(a, b)| a + b).collect()
}

pub fn sub(u: &[Rational], v: &[Rational]) -> Vector {
    u.iter().zip(v).map(|(a, b)| a - b).collect()
}

pub fn scale(u: &[Rational], c: &Rational) -> Vector {
    u.iter().map(|a| a * c).collect()
}

pub fn is_zero(u: &[Rational]) -> bool {
    u.iter().all(Zero::is_zero)
}

/// A linear map given by the images of basis vectors.
pub fn apply_map(images: &[Vector], v: &[Rational]) -> Vector {
    let n = images.first().map_or(0, Vec::len);
    let mut out = vec![Rational::zero(); n];
    for (a, img) in v.iter().zip(images) {
        if !a.is_zero() {
            for (o, x) in out.iter_mut().zip(img) {
                *o += a * x;
            }
        }
    }
    out
}

/// Two products `⊣` (`left`) and `⊢` (`right`) on the same space.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DiTable {
    pub left: Table,
    pub right: Table,
}

impl DiTable {
    pub fn dim(&self) -> usize {
        self.left.dim()
    }

    pub fn zero(dim: usize) -> Self {
        DiTable { left: Table::zero(dim), right: Table::zero(dim) }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::freealg::int;

    fn v(xs: &[i64]) -> Vector {
        xs.iter().map(|&x| int(x)).collect()
    }

    /// `[e, f] = f`.
    fn affine() -> Table {
        let mut t = Table::zero(2);
        t.set(0, 1, v(&[0, 1]));
        t.set(1, 0, v(&[0, -1]));
        t
    }

    #[test]
    fn lie_and_leibniz_checks() {
        assert!(Table::zero(3).is_lie());
        assert!(affine().is_lie());
        assert!(affine().is_leibniz());
        let mut l = Table::zero(2);
        l.set(0, 0, v(&[0, 1]));
        assert!(l.is_leibniz());
        assert_eq!(l.antisymmetry_failure(), Some((0, 0)));
        let mut bad = affine();
        bad.set(0, 0, v(&[1, 0]));
        assert!(!bad.is_leibniz());
    }

    #[test]
    fn basis_change_preserves_identities() {
        let t = affine();
        let basis = vec![v(&[1, 1]), v(&[0, 2])];
        let u = t.change_basis(&basis).unwrap();
        assert!(u.is_lie());
        // [e+f, 2f] = 2f = 1*(2f)
        assert_eq!(u.get(0, 1), &v(&[0, 1]));
    }
}
