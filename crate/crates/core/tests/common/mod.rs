//! Reference implementations used as oracles by the integration tests.
//!
//! Nothing here touches the crate's linear algebra: fractions are plain
//! `i128` pairs, determinants come from cofactor expansion and linear systems
//! are solved with a separate elimination routine.

#![allow(dead_code)]

pub mod gen;

use std::cmp::Ordering;
use std::fmt;
use std::ops::{Add, Div, Mul, Neg, Sub};

use semiscale::exactla::{RatMatrix, Rational};

fn gcd(a: i128, b: i128) -> i128 {
    let (mut a, mut b) = (a.abs(), b.abs());
    while b != 0 {
        (a, b) = (b, a % b);
    }
    a
}

/// Reduced fraction with a positive denominator.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug)]
pub struct Frac {
    pub n: i128,
    pub d: i128,
}

impl Frac {
    pub fn new(n: i128, d: i128) -> Frac {
        assert!(d != 0, "oracle fraction with zero denominator");
        let g = gcd(n, d).max(1);
        let s = if d < 0 { -1 } else { 1 };
        Frac { n: s * n / g, d: s * d / g }
    }

    pub fn int(n: i128) -> Frac {
        Frac { n, d: 1 }
    }

    pub const ZERO: Frac = Frac { n: 0, d: 1 };
    pub const ONE: Frac = Frac { n: 1, d: 1 };

    pub fn is_zero(self) -> bool {
        self.n == 0
    }

    pub fn to_rational(self) -> Rational {
        Rational::new(self.n as i64, self.d as i64).expect("nonzero denominator")
    }

    pub fn from_rational(r: &Rational) -> Frac {
        // Round-trip through the textual form so no crate arithmetic is involved.
        let s = r.to_string();
        match s.split_once('/') {
            Some((n, d)) => Frac::new(n.parse().unwrap(), d.parse().unwrap()),
            None => Frac::int(s.parse().unwrap()),
        }
    }
}

impl fmt::Display for Frac {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.d == 1 {
            write!(f, "{}", self.n)
        } else {
            write!(f, "{}/{}", self.n, self.d)
        }
    }
}

impl Add for Frac {
    type Output = Frac;
    fn add(self, o: Frac) -> Frac {
        Frac::new(self.n * o.d + o.n * self.d, self.d * o.d)
    }
}

impl Sub for Frac {
    type Output = Frac;
    fn sub(self, o: Frac) -> Frac {
        self + (-o)
    }
}

impl Mul for Frac {
    type Output = Frac;
    fn mul(self, o: Frac) -> Frac {
        Frac::new(self.n * o.n, self.d * o.d)
    }
}

impl Div for Frac {
    type Output = Frac;
    fn div(self, o: Frac) -> Frac {
        Frac::new(self.n * o.d, self.d * o.n)
    }
}

impl Neg for Frac {
    type Output = Frac;
    fn neg(self) -> Frac {
        Frac { n: -self.n, d: self.d }
    }
}

impl PartialOrd for Frac {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for Frac {
    fn cmp(&self, other: &Self) -> Ordering {
        (self.n * other.d).cmp(&(other.n * self.d))
    }
}

pub type Mat = Vec<Vec<Frac>>;

pub fn to_ratmatrix(m: &Mat) -> RatMatrix {
    RatMatrix::from_rows(m.iter().map(|r| r.iter().map(|x| x.to_rational()).collect()).collect()).unwrap()
}

pub fn to_rationals(v: &[Frac]) -> Vec<Rational> {
    v.iter().map(|x| x.to_rational()).collect()
}

pub fn from_rationals(v: &[Rational]) -> Vec<Frac> {
    v.iter().map(Frac::from_rational).collect()
}

/// Laplace expansion along the first row.
pub fn cofactor_det(m: &Mat) -> Frac {
    let n = m.len();
    if n == 0 {
        return Frac::ONE;
    }
    if n == 1 {
        return m[0][0];
    }
    let mut total = Frac::ZERO;
    for j in 0..n {
        if m[0][j].is_zero() {
            continue;
        }
        let minor: Mat = m[1..]
            .iter()
            .map(|row| row.iter().enumerate().filter(|(k, _)| *k != j).map(|(_, x)| *x).collect())
            .collect();
        let term = m[0][j] * cofactor_det(&minor);
        total = if j % 2 == 0 { total + term } else { total - term };
    }
    total
}

/// Row echelon form by elimination with the first nonzero pivot, returning the rank.
pub fn oracle_rank(m: &Mat) -> usize {
    let mut a = m.clone();
    let rows = a.len();
    let cols = a.first().map_or(0, Vec::len);
    let mut r = 0;
    for c in 0..cols {
        let Some(p) = (r..rows).find(|&i| !a[i][c].is_zero()) else {
            continue;
        };
        a.swap(r, p);
        for i in r + 1..rows {
            if a[i][c].is_zero() {
                continue;
            }
            let f = a[i][c] / a[r][c];
            let pivot_row = a[r].clone();
            for (x, v) in a[i].iter_mut().zip(pivot_row).skip(c) {
                *x = *x - f * v;
            }
        }
        r += 1;
        if r == rows {
            break;
        }
    }
    r
}

/// Solves a square system by Gauss-Jordan elimination on the augmented matrix.
/// `None` when the matrix is singular.
pub fn oracle_solve(m: &Mat, b: &[Frac]) -> Option<Vec<Frac>> {
    let n = m.len();
    let mut a: Mat = m.iter().zip(b).map(|(row, x)| row.iter().copied().chain([*x]).collect()).collect();
    for c in 0..n {
        let p = (c..n).find(|&i| !a[i][c].is_zero())?;
        a.swap(c, p);
        let piv = a[c][c];
        a[c] = a[c].iter().map(|x| *x / piv).collect();
        let pivot_row = a[c].clone();
        for (i, row) in a.iter_mut().enumerate() {
            if i != c && !row[c].is_zero() {
                let f = row[c];
                for (x, v) in row.iter_mut().zip(&pivot_row) {
                    *x = *x - f * *v;
                }
            }
        }
    }
    Some(a.iter().map(|row| row[n]).collect())
}

pub fn mat_vec(m: &Mat, x: &[Frac]) -> Vec<Frac> {
    m.iter()
        .map(|row| row.iter().zip(x).fold(Frac::ZERO, |acc, (a, b)| acc + *a * *b))
        .collect()
}

/// Semi-basis test by solving: the family (as columns of `b`) is a semi-basis
/// of the orthant iff `b` is nonnegative, invertible, and every canonical basis
/// vector is a nonnegative combination of the family.
pub fn oracle_is_semi_basis(columns: &[Vec<Frac>], n: usize) -> bool {
    if columns.len() != n {
        return false;
    }
    if columns.iter().flatten().any(|x| *x < Frac::ZERO) {
        return false;
    }
    let b: Mat = (0..n).map(|i| columns.iter().map(|c| c[i]).collect()).collect();
    (0..n).all(|i| {
        let e: Vec<Frac> = (0..n).map(|k| if k == i { Frac::ONE } else { Frac::ZERO }).collect();
        match oracle_solve(&b, &e) {
            Some(x) => x.iter().all(|v| *v >= Frac::ZERO),
            None => false,
        }
    })
}

/// Relative closeness for floating comparisons.
pub fn close(a: f64, b: f64, tol: f64) -> bool {
    (a - b).abs() <= tol * a.abs().max(b.abs())
}
