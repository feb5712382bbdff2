//! Exact linear algebra over the rationals: sparse echelon forms keyed by
//! words, and small dense routines for structure-constant vectors.

use std::collections::BTreeMap;

use num_traits::{One, Zero};

use crate::freealg::{Polynomial, Rational};
use crate::words::Word;

/// Row echelon form of a set of polynomials, pivoting on leading words.
#[derive(Debug, Clone, Default)]
pub struct Echelon {
    rows: BTreeMap<Word, Polynomial>,
}

impl Echelon {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn rank(&self) -> usize {
        self.rows.len()
    }

    pub fn pivots(&self) -> impl Iterator<Item = &Word> {
        self.rows.keys()
    }

    pub fn rows(&self) -> impl Iterator<Item = &Polynomial> {
        self.rows.values()
    }

    /// Remainder of `p` after eliminating every pivot word.
    pub fn reduce(&self, p: &Polynomial) -> Polynomial {
        let mut p = p.clone();
        let mut out = Polynomial::zero();
        while let Ok((w, c)) = p.leading() {
            let (w, c) = (w.clone(), c.clone());
            match self.rows.get(&w) {
                Some(row) => p.add_scaled(row, &-c),
                None => {
                    p.add_term(w.clone(), -c.clone());
                    out.add_term(w, c);
                }
            }
        }
        out
    }

    /// Adds `p`; returns false when it was already in the span.
    pub fn insert(&mut self, p: &Polynomial) -> bool {
        let r = self.reduce(p);
        match r.leading() {
            Err(_) => false,
            Ok((w, _)) => {
                let w = w.clone();
                let row = r.monic().expect("nonzero");
                self.rows.insert(w, row);
                true
            }
        }
    }

    pub fn contains(&self, p: &Polynomial) -> bool {
        self.reduce(p).is_zero()
    }
}

/// Reduced row echelon form of dense rows; returns the nonzero rows and
/// their pivot columns.
pub fn rref(rows: &[Vec<Rational>]) -> (Vec<Vec<Rational>>, Vec<usize>) {
    let mut m: Vec<Vec<Rational>> = rows.to_vec();
    let ncols = m.first().map_or(0, Vec::len);
    let mut pivots = Vec::new();
    let mut r = 0;
    for col in 0..ncols {
        let Some(p) = (r..m.len()).find(|&i| !m[i][col].is_zero()) else {
            continue;
        };
        m.swap(r, p);
        let inv = m[r][col].recip();
        for x in m[r].iter_mut() {
            *x *= &inv;
        }
        for i in 0..m.len() {
            if i != r && !m[i][col].is_zero() {
                let f = m[i][col].clone();
                let pivot_row = m[r].clone();
                for (x, y) in m[i].iter_mut().zip(&pivot_row) {
                    *x -= &f * y;
                }
            }
        }
        pivots.push(col);
        r += 1;
        if r == m.len() {
            break;
        }
    }
    m.truncate(r);
    (m, pivots)
}

pub fn rank(rows: &[Vec<Rational>]) -> usize {
    rref(rows).1.len()
}

/// Coordinates of `v` in terms of `basis` (assumed independent), if `v` lies
/// in their span.
pub fn coordinates(basis: &[Vec<Rational>], v: &[Rational]) -> Option<Vec<Rational>> {
    let n = v.len();
    let k = basis.len();
    // Solve sum_j c_j basis_j = v: augmented system with unknowns as columns.
    let rows: Vec<Vec<Rational>> = (0..n)
        .map(|i| {
            let mut row: Vec<Rational> = basis.iter().map(|b| b[i].clone()).collect();
            row.push(v[i].clone());
            row
        })
        .collect();
    let (red, pivots) = rref(&rows);
    if pivots.contains(&k) {
        return None;
    }
    let mut c = vec![Rational::zero(); k];
    for (row, &p) in red.iter().zip(&pivots) {
        c[p] = row[k].clone();
    }
    Some(c)
}

pub fn in_span(basis: &[Vec<Rational>], v: &[Rational]) -> bool {
    if v.iter().all(Zero::is_zero) {
        return true;
    }
    rank(basis) == {
        let mut all = basis.to_vec();
        all.push(v.to_vec());
        rank(&all)
    }
}

/// Inverse of a square matrix, if invertible.
pub fn invert(m: &[Vec<Rational>]) -> Option<Vec<Vec<Rational>>> {
    let n = m.len();
    let aug: Vec<Vec<Rational>> = m
        .iter()
        .enumerate()
        .map(|(i, row)| {
            let mut r = row.clone();
            r.extend((0..n).map(|j| if i == j { Rational::one() } else { Rational::zero() }));
            r
        })
        .collect();
    let (red, pivots) = rref(&aug);
    if pivots.len() < n || pivots[n - 1] != n - 1 {
        return None;
    }
    Some(red.into_iter().map(|r| r[n..].to_vec()).collect())
}

pub fn unit(n: usize, i: usize) -> Vec<Rational> {
    (0..n).map(|j| if i == j { Rational::one() } else { Rational::zero() }).collect()
}

pub fn is_zero_vec(v: &[Rational]) -> bool {
    v.iter().all(Zero::is_zero)
}

/// Basis of `span(u) ∩ span(w)`.
pub fn intersect(u: &[Vec<Rational>], w: &[Vec<Rational>]) -> Vec<Vec<Rational>> {
    let Some(n) = u.first().or(w.first()).map(Vec::len) else {
        return Vec::new();
    };
    let cols = u.len() + w.len();
    let rows: Vec<Vec<Rational>> = (0..n)
        .map(|i| u.iter().map(|v| v[i].clone()).chain(w.iter().map(|v| -&v[i])).collect())
        .collect();
    let (red, pivots) = rref(&rows);
    let mut out = Vec::new();
    for free in (0..cols).filter(|c| !pivots.contains(c)) {
        // Null vector with a 1 in the free column.
        let mut alpha = vec![Rational::zero(); cols];
        alpha[free] = Rational::one();
        for (row, &p) in red.iter().zip(&pivots) {
            alpha[p] = -&row[free];
        }
        let mut v = vec![Rational::zero(); n];
        for (a, uk) in alpha.iter().zip(u) {
            for (x, y) in v.iter_mut().zip(uk) {
                *x += a * y;
            }
        }
        out.push(v);
    }
    rref(&out).0
}

/// Appends those `candidates` that are independent of `chosen` (and of each
/// other) and lie in `span(target)`; returns the appended vectors.
pub fn extend_within(
    chosen: &mut Vec<Vec<Rational>>,
    target: &[Vec<Rational>],
    candidates: impl IntoIterator<Item = Vec<Rational>>,
) -> Vec<Vec<Rational>> {
    let mut added = Vec::new();
    for c in candidates {
        if is_zero_vec(&c) || !in_span(target, &c) {
            continue;
        }
        let before = rank(chosen);
        chosen.push(c.clone());
        if rank(chosen) > before {
            added.push(c);
        } else {
            chosen.pop();
        }
    }
    added
}
