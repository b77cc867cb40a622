//! Proptest strategies shared by the property suites.

use proptest::collection::vec;
use proptest::prelude::*;

use super::Frac;

/// Numerators and denominators bounded by 20 in absolute value.
pub fn frac() -> impl Strategy<Value = Frac> {
    (-20i128..=20, 1i128..=20).prop_map(|(n, d)| Frac::new(n, d))
}

pub fn nonneg_frac() -> impl Strategy<Value = Frac> {
    (0i128..=20, 1i128..=20).prop_map(|(n, d)| Frac::new(n, d))
}

pub fn pos_frac() -> impl Strategy<Value = Frac> {
    (1i128..=20, 1i128..=20).prop_map(|(n, d)| Frac::new(n, d))
}

/// Nonnegative coordinates with at least one nonzero entry.
pub fn nonzero_orthant(n: usize) -> impl Strategy<Value = Vec<Frac>> {
    vec(nonneg_frac(), n).prop_filter("not all zero", |v| v.iter().any(|x| !x.is_zero()))
}

pub fn matrix(rows: usize, cols: usize) -> impl Strategy<Value = Vec<Vec<Frac>>> {
    vec(vec(frac(), cols), rows)
}

/// Small integer entries, often zero, so singular matrices show up regularly.
pub fn sparse_matrix(rows: usize, cols: usize) -> impl Strategy<Value = Vec<Vec<Frac>>> {
    let entry = prop_oneof![3 => Just(Frac::ZERO), 2 => (-3i128..=3).prop_map(Frac::int), 1 => frac()];
    vec(vec(entry, cols), rows)
}

/// Nonnegative matrix without zero columns: a valid semi-linear map between
/// non-complete orthants, stored row-major.
pub fn semilinear_matrix(rows: usize, cols: usize) -> impl Strategy<Value = Vec<Vec<Frac>>> {
    vec(nonzero_orthant(rows), cols).prop_map(move |columns| {
        (0..rows).map(|i| columns.iter().map(|c| c[i]).collect()).collect()
    })
}

/// Candidate families for semi-basis tests. Half are scaled permutations,
/// which are always semi-bases; the rest are arbitrary nonnegative families.
pub fn candidate_family(n: usize) -> impl Strategy<Value = Vec<Vec<Frac>>> {
    let monomial = (Just((0..n).collect::<Vec<_>>()).prop_shuffle(), vec(pos_frac(), n)).prop_map(
        move |(perm, scales)| {
            perm.iter()
                .zip(&scales)
                .map(|(&i, s)| (0..n).map(|k| if k == i { *s } else { Frac::ZERO }).collect())
                .collect()
        },
    );
    let sparse_entry = prop_oneof![2 => Just(Frac::ZERO), 1 => pos_frac()];
    let arbitrary = (n.saturating_sub(1)..=n + 1).prop_flat_map(move |k| {
        vec(vec(sparse_entry.clone(), n), k).prop_filter("nonzero members", |fam| {
            fam.iter().all(|c| c.iter().any(|x| !x.is_zero()))
        })
    });
    prop_oneof![monomial, arbitrary]
}

/// Positive coefficients spread over several orders of magnitude.
pub fn pos_real() -> impl Strategy<Value = f64> {
    (-8.0f64..8.0).prop_map(|e| 10f64.powf(e))
}

/// Rational exponent with denominator at most 6.
pub fn small_exponent() -> impl Strategy<Value = Frac> {
    (-12i128..=12, 1i128..=6).prop_map(|(n, d)| Frac::new(n, d))
}
