//! Scales `k ∈ T^{d₁} ⊗̂ L^{d₂} ⊗̂ M^{d₃}` relative to a base system of units.
//!
//! A scale is its scale dimension (exact rational exponents) plus a positive
//! coefficient relative to the base units `(u₀, ℓ, m)`. Numeric magnitudes of
//! physical constants are not part of the library; they come from a
//! definitions file (see [`default_registry`]).

use std::collections::BTreeMap;
use std::fmt;

use crate::error::{Error, Result};
use crate::exactla::{det3, nullspace, solve_linear, to_integer_form, PosReal, RatMatrix, Rational};

/// Exponents of `(T, L, M)`.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct DimVector([Rational; 3]);

pub const DEFAULT_BASE_NAMES: [&str; 3] = ["T", "L", "M"];

impl DimVector {
    pub fn new(t: Rational, l: Rational, m: Rational) -> Self {
        DimVector([t, l, m])
    }

    /// Convenience constructor from `(numerator, denominator)` pairs.
    pub fn from_ratios(t: (i64, i64), l: (i64, i64), m: (i64, i64)) -> Result<Self> {
        Ok(DimVector([
            Rational::new(t.0, t.1)?,
            Rational::new(l.0, l.1)?,
            Rational::new(m.0, m.1)?,
        ]))
    }

    pub fn zero() -> Self {
        DimVector::default()
    }

    /// Unit vector of the `i`-th base space.
    pub fn base(i: usize) -> Self {
        let mut d = DimVector::zero();
        d.0[i] = Rational::one();
        d
    }

    pub fn t(&self) -> &Rational {
        &self.0[0]
    }

    pub fn l(&self) -> &Rational {
        &self.0[1]
    }

    pub fn m(&self) -> &Rational {
        &self.0[2]
    }

    pub fn components(&self) -> &[Rational; 3] {
        &self.0
    }

    pub fn is_zero(&self) -> bool {
        self.0.iter().all(Rational::is_zero)
    }

    pub fn add(&self, other: &DimVector) -> DimVector {
        DimVector(std::array::from_fn(|i| &self.0[i] + &other.0[i]))
    }

    pub fn sub(&self, other: &DimVector) -> DimVector {
        DimVector(std::array::from_fn(|i| &self.0[i] - &other.0[i]))
    }

    pub fn scale(&self, q: &Rational) -> DimVector {
        DimVector(std::array::from_fn(|i| &self.0[i] * q))
    }

    pub fn neg(&self) -> DimVector {
        self.scale(&-Rational::one())
    }

    /// Renders as `"T^p/q L^r/s M^u/v"`, dropping zero exponents and writing
    /// exponent 1 bare. A dimensionless vector renders as `"1"`.
    pub fn render(&self, names: &[&str; 3]) -> String {
        let parts: Vec<String> = self
            .0
            .iter()
            .zip(names)
            .filter(|(e, _)| !e.is_zero())
            .map(|(e, n)| if e.is_one() { n.to_string() } else { format!("{n}^{e}") })
            .collect();
        if parts.is_empty() {
            "1".into()
        } else {
            parts.join(" ")
        }
    }
}

impl fmt::Display for DimVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.render(&DEFAULT_BASE_NAMES))
    }
}

impl fmt::Debug for DimVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}, {}, {})", self.0[0], self.0[1], self.0[2])
    }
}

/// Anything with a scale dimension.
pub trait Dimensioned {
    fn sdi(&self) -> DimVector;
}

impl Dimensioned for DimVector {
    fn sdi(&self) -> DimVector {
        self.clone()
    }
}

impl<D: Dimensioned + ?Sized> Dimensioned for &D {
    fn sdi(&self) -> DimVector {
        (**self).sdi()
    }
}

/// A positive scale.
#[derive(Clone, PartialEq, Debug)]
pub struct Scale {
    dims: DimVector,
    coeff: PosReal,
}

impl Scale {
    pub fn new(dims: DimVector, coeff: PosReal) -> Self {
        Scale { dims, coeff }
    }

    /// The `i`-th unit of the base system, `(u₀, ℓ, m)[i]`.
    pub fn base_unit(i: usize) -> Self {
        Scale::new(DimVector::base(i), PosReal::ONE)
    }

    pub fn dims(&self) -> &DimVector {
        &self.dims
    }

    pub fn coeff(&self) -> PosReal {
        self.coeff
    }

    pub fn smul(&self, r: PosReal) -> Scale {
        Scale::new(self.dims.clone(), r * self.coeff)
    }

    pub fn mul(&self, other: &Scale) -> Scale {
        Scale::new(self.dims.add(&other.dims), self.coeff * other.coeff)
    }

    pub fn div(&self, other: &Scale) -> Scale {
        Scale::new(self.dims.sub(&other.dims), self.coeff / other.coeff)
    }

    pub fn inverse(&self) -> Scale {
        Scale::new(self.dims.neg(), self.coeff.recip())
    }

    pub fn pow(&self, q: &Rational) -> Scale {
        Scale::new(self.dims.scale(q), self.coeff.powq(q))
    }

    pub fn approx_eq(&self, other: &Scale, rel_tol: f64) -> bool {
        self.dims == other.dims && self.coeff.approx_eq(other.coeff, rel_tol)
    }
}

impl Dimensioned for Scale {
    fn sdi(&self) -> DimVector {
        self.dims.clone()
    }
}

/// A scale tensorised with the reals: the coefficient may be negative or zero.
#[derive(Clone, PartialEq, Debug)]
pub struct SignedScale {
    dims: DimVector,
    coeff: f64,
}

impl SignedScale {
    pub fn new(dims: DimVector, coeff: f64) -> Self {
        SignedScale { dims, coeff }
    }

    pub fn dims(&self) -> &DimVector {
        &self.dims
    }

    pub fn coeff(&self) -> f64 {
        self.coeff
    }

    /// The positive scale with the same dimension, when `coeff > 0`.
    pub fn as_positive(&self) -> Option<Scale> {
        PosReal::new(self.coeff).ok().map(|c| Scale::new(self.dims.clone(), c))
    }

    /// `|coeff|` as a positive scale; `None` for a vanishing coefficient.
    pub fn magnitude(&self) -> Option<Scale> {
        PosReal::new(self.coeff.abs()).ok().map(|c| Scale::new(self.dims.clone(), c))
    }

    pub fn mul(&self, other: &SignedScale) -> SignedScale {
        SignedScale::new(self.dims.add(&other.dims), self.coeff * other.coeff)
    }

    pub fn div(&self, other: &SignedScale) -> Result<SignedScale> {
        if other.coeff == 0.0 {
            return Err(Error::DivisionByZero);
        }
        Ok(SignedScale::new(self.dims.sub(&other.dims), self.coeff / other.coeff))
    }

    /// Real power of the coefficient: any `q` for positive coefficients,
    /// integer `q` for negative ones, `q > 0` for zero.
    pub fn pow(&self, q: &Rational) -> Result<SignedScale> {
        let dims = self.dims.scale(q);
        if self.coeff > 0.0 {
            let c = PosReal::new(self.coeff)?.powq(q).get();
            return Ok(SignedScale::new(dims, c));
        }
        if self.coeff == 0.0 {
            if !q.is_positive() {
                return Err(Error::ZeroToNonpositivePower { exponent: q.to_string() });
            }
            return Ok(SignedScale::new(dims, 0.0));
        }
        if !q.is_integer() {
            return Err(Error::FractionalPowerOfNegative { exponent: q.to_string() });
        }
        let magnitude = PosReal::new(-self.coeff)?.powq(q).get();
        let odd = q.numer().bit(0);
        Ok(SignedScale::new(dims, if odd { -magnitude } else { magnitude }))
    }

    /// `self / other` for scales in the same scale space.
    pub fn ratio(&self, other: &SignedScale) -> Result<f64> {
        if self.dims != other.dims {
            return Err(Error::DimensionMismatch {
                left: self.dims.to_string(),
                right: other.dims.to_string(),
            });
        }
        if other.coeff == 0.0 {
            return Err(Error::DivisionByZero);
        }
        Ok(self.coeff / other.coeff)
    }
}

impl From<Scale> for SignedScale {
    fn from(k: Scale) -> Self {
        SignedScale::new(k.dims, k.coeff.get())
    }
}

impl Dimensioned for SignedScale {
    fn sdi(&self) -> DimVector {
        self.dims.clone()
    }
}

/// The unique `r` with `k = r k2`; defined only inside one scale space.
pub fn ratio(k: &Scale, k2: &Scale) -> Result<PosReal> {
    if k.dims != k2.dims {
        return Err(Error::DimensionMismatch {
            left: k.dims.to_string(),
            right: k2.dims.to_string(),
        });
    }
    Ok(k.coeff / k2.coeff)
}

/// The 3×n matrix whose j-th column is `sdi` of the j-th item.
pub fn dims_matrix<D: Dimensioned>(items: &[D]) -> RatMatrix {
    let cols: Vec<Vec<Rational>> = items.iter().map(|d| d.sdi().0.to_vec()).collect();
    RatMatrix::from_columns(3, &cols).expect("dimension vectors have three components")
}

/// `det (sdi e_j)_i`.
pub fn scale_determinant<D: Dimensioned>(e: [&D; 3]) -> Rational {
    det3(&dims_matrix(&e)).expect("3x3 by construction")
}

pub fn is_scale_basis<D: Dimensioned>(e: [&D; 3]) -> bool {
    !scale_determinant(e).is_zero()
}

/// Three scales with nonsingular dimension matrix.
#[derive(Clone, Debug)]
pub struct ScaleBasis {
    elements: [Scale; 3],
    matrix: RatMatrix,
}

/// `k = factor · e₁^{c₁} ⊗̂ e₂^{c₂} ⊗̂ e₃^{c₃}`.
#[derive(Clone, PartialEq, Debug)]
pub struct BasisExpression {
    pub exponents: [Rational; 3],
    pub factor: PosReal,
}

impl ScaleBasis {
    pub fn new(e1: Scale, e2: Scale, e3: Scale) -> Result<Self> {
        let elements = [e1, e2, e3];
        let matrix = dims_matrix(&elements);
        if det3(&matrix)?.is_zero() {
            return Err(Error::SingularBasis);
        }
        Ok(ScaleBasis { elements, matrix })
    }

    pub fn elements(&self) -> &[Scale; 3] {
        &self.elements
    }

    pub fn express(&self, k: &Scale) -> Result<BasisExpression> {
        let c = solve_linear(&self.matrix, k.dims.components()).map_err(|e| match e {
            Error::SingularMatrix => Error::SingularBasis,
            other => other,
        })?;
        // Work with logarithms: the partial products e_j^{c_j} may leave the
        // f64 range even when the factor itself is representable.
        let log_factor = k.coeff.ln() - self.log_product(&c);
        let factor = PosReal::from_ln(log_factor).ok_or_else(|| Error::CoefficientOutOfRange(log_factor.to_string()))?;
        Ok(BasisExpression {
            exponents: [c[0].clone(), c[1].clone(), c[2].clone()],
            factor,
        })
    }

    fn log_product(&self, exponents: &[Rational]) -> f64 {
        self.elements
            .iter()
            .zip(exponents)
            .map(|(e, cj)| if cj.is_zero() { 0.0 } else { cj.to_f64() * e.coeff.ln() })
            .sum()
    }

    /// `factor · Π e_j^{c_j}`.
    pub fn reassemble(&self, expr: &BasisExpression) -> Scale {
        let dims = self
            .elements
            .iter()
            .zip(&expr.exponents)
            .fold(DimVector::zero(), |acc, (e, c)| acc.add(&e.dims.scale(c)));
        let log = expr.factor.ln() + self.log_product(&expr.exponents);
        let coeff = PosReal::from_ln(log).unwrap_or(if log > 0.0 {
            PosReal::new(f64::MAX).expect("positive")
        } else {
            PosReal::new(f64::MIN_POSITIVE).expect("positive")
        });
        Scale::new(dims, coeff)
    }
}

pub fn express_in_basis(k: &Scale, basis: [&Scale; 3]) -> Result<BasisExpression> {
    let [a, b, c] = basis;
    ScaleBasis::new(a.clone(), b.clone(), c.clone())?.express(k)
}

/// Canonical integer exponent vectors `x` with `Σ x_i sdi(q_i) = 0`.
///
/// Nullspace vectors are normalised to a leading 1 and then cleared to the
/// smallest integer form.
pub fn pi_groups<D: Dimensioned>(quantities: &[D]) -> Vec<Vec<Rational>> {
    nullspace(&dims_matrix(quantities))
        .iter()
        .map(|v| to_integer_form(v))
        .collect()
}

/// A registry value: either a positive scale or a signed one.
#[derive(Clone, PartialEq, Debug)]
pub enum Quantity {
    Scale(Scale),
    Signed(SignedScale),
}

impl Quantity {
    pub fn is_signed(&self) -> bool {
        matches!(self, Quantity::Signed(_))
    }

    pub fn to_signed(&self) -> SignedScale {
        match self {
            Quantity::Scale(k) => k.clone().into(),
            Quantity::Signed(s) => s.clone(),
        }
    }
}

impl Dimensioned for Quantity {
    fn sdi(&self) -> DimVector {
        match self {
            Quantity::Scale(k) => k.sdi(),
            Quantity::Signed(s) => s.sdi(),
        }
    }
}

/// Named scales over a base system `(T, L, M)`.
#[derive(Clone, PartialEq, Debug)]
pub struct Registry {
    base_names: [String; 3],
    entries: BTreeMap<String, Quantity>,
}

impl Registry {
    pub fn new(base_names: [&str; 3]) -> Self {
        Registry {
            base_names: base_names.map(str::to_string),
            entries: BTreeMap::new(),
        }
    }

    pub fn base_names(&self) -> [&str; 3] {
        [&self.base_names[0], &self.base_names[1], &self.base_names[2]]
    }

    /// The base unit named `name`, if it is one of the three base names.
    pub fn base_index(&self, name: &str) -> Option<usize> {
        self.base_names.iter().position(|b| b == name)
    }

    pub fn insert(&mut self, name: &str, value: Quantity) -> Result<()> {
        if self.base_index(name).is_some() || self.entries.contains_key(name) {
            return Err(Error::DuplicateName(name.to_string()));
        }
        self.entries.insert(name.to_string(), value);
        Ok(())
    }

    pub fn get(&self, name: &str) -> Option<&Quantity> {
        self.entries.get(name)
    }

    pub fn names(&self) -> impl Iterator<Item = &str> {
        self.entries.keys().map(String::as_str)
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }
}

/// The registry defined by the definitions file shipped with the crate.
pub fn default_registry() -> Registry {
    crate::unitlang::load_definitions(crate::unitlang::DEFAULT_DEFINITIONS)
        .expect("shipped definitions file is valid")
}
