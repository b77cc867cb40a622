//! Sesqui-tensor products, the universal vector extension `R ⊗̀ U`, and
//! semi-tensor products of semi-free spaces.
//!
//! Everything is built directly in coordinates on the distinguished bases:
//!
//! * `V ⊗̀ U` with `U` semi-free: basis `b_i ⊗̀ c_j`, index `i·sdim U + j`.
//! * `V ⊗̀ U` with `U` a vector space: basis `b_i ⊗̀ c_j` (index `i·dim U + j`)
//!   followed by `b_i ⊗̀ (−c_j)` (index `dim V·dim U + i·dim U + j`).
//! * `U ⊗̂ V`: semi-basis `b_i ⊗̂ c_j`, flattened lexicographically.

use std::fmt;
use std::sync::Arc;

use crate::error::{Error, Result};
use crate::exactla::{RatMatrix, Rational};
use crate::semivec::{SemiLinearMap, SemiSpace, SemiVector};

/// Finite-dimensional vector space over the rationals with a fixed basis.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct VecSpace {
    label: Arc<str>,
    dim: usize,
}

impl VecSpace {
    pub fn new(label: &str, dim: usize) -> Self {
        VecSpace { label: label.into(), dim }
    }

    /// The scalar line `R`.
    pub fn reals() -> Self {
        VecSpace::new("R", 1)
    }

    pub fn label(&self) -> &str {
        &self.label
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn zero(&self) -> Vector {
        Vector {
            space: self.clone(),
            coords: vec![Rational::zero(); self.dim],
        }
    }

    fn check_same(&self, other: &VecSpace) -> Result<()> {
        if self == other {
            Ok(())
        } else {
            Err(Error::SpaceMismatch {
                left: self.to_string(),
                right: other.to_string(),
            })
        }
    }
}

impl fmt::Display for VecSpace {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}({})", self.label, self.dim)
    }
}

impl fmt::Debug for VecSpace {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Vector {
    space: VecSpace,
    coords: Vec<Rational>,
}

impl Vector {
    pub fn new(space: &VecSpace, coords: Vec<Rational>) -> Result<Self> {
        if coords.len() != space.dim {
            return Err(Error::ShapeMismatch {
                expected: format!("{} coordinates", space.dim),
                found: format!("{} coordinates", coords.len()),
            });
        }
        Ok(Vector {
            space: space.clone(),
            coords,
        })
    }

    pub fn space(&self) -> &VecSpace {
        &self.space
    }

    pub fn coords(&self) -> &[Rational] {
        &self.coords
    }

    pub fn is_zero(&self) -> bool {
        self.coords.iter().all(Rational::is_zero)
    }

    pub fn add(&self, other: &Vector) -> Result<Vector> {
        self.space.check_same(&other.space)?;
        Ok(Vector {
            space: self.space.clone(),
            coords: self.coords.iter().zip(&other.coords).map(|(a, b)| a + b).collect(),
        })
    }

    pub fn sub(&self, other: &Vector) -> Result<Vector> {
        self.add(&other.neg())
    }

    pub fn scale(&self, s: &Rational) -> Vector {
        Vector {
            space: self.space.clone(),
            coords: self.coords.iter().map(|c| c * s).collect(),
        }
    }

    pub fn neg(&self) -> Vector {
        self.scale(&-Rational::one())
    }
}

impl fmt::Debug for Vector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:?} in {}", self.coords, self.space)
    }
}

/// Ordinary tensor product space `V ⊗ U`, basis `e_ij` at index `i·dim U + j`.
pub fn tensor_space(v: &VecSpace, u: &VecSpace) -> VecSpace {
    VecSpace::new(&format!("({}⊗{})", v.label, u.label), v.dim * u.dim)
}

/// Outer product `v ⊗ u` in [`tensor_space`].
pub fn outer(v: &Vector, u: &Vector) -> Vector {
    let coords = v
        .coords
        .iter()
        .flat_map(|a| u.coords.iter().map(move |b| a * b))
        .collect();
    Vector {
        space: tensor_space(&v.space, &u.space),
        coords,
    }
}

/// The semi-vector or vector factor on the right of a sesqui-tensor product.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub enum RightFactor {
    Semi(SemiSpace),
    Vector(VecSpace),
}

/// The right sesqui-tensor product `V ⊗̀ U`.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct SesquiSpace {
    left: VecSpace,
    right: RightFactor,
}

impl SesquiSpace {
    pub fn new(left: &VecSpace, right: RightFactor) -> Self {
        SesquiSpace {
            left: left.clone(),
            right,
        }
    }

    pub fn with_semi(left: &VecSpace, right: &SemiSpace) -> Self {
        SesquiSpace::new(left, RightFactor::Semi(right.clone()))
    }

    pub fn with_vector(left: &VecSpace, right: &VecSpace) -> Self {
        SesquiSpace::new(left, RightFactor::Vector(right.clone()))
    }

    pub fn left(&self) -> &VecSpace {
        &self.left
    }

    pub fn right(&self) -> &RightFactor {
        &self.right
    }

    /// `dim V · sdim U` for semi-free `U`, `2 · dim V · dim U` for a vector space `U`.
    pub fn dim(&self) -> usize {
        match &self.right {
            RightFactor::Semi(u) => self.left.dim * u.sdim(),
            RightFactor::Vector(u) => 2 * self.left.dim * u.dim(),
        }
    }

    pub fn zero(&self) -> SesquiElement {
        SesquiElement {
            space: self.clone(),
            coords: vec![Rational::zero(); self.dim()],
        }
    }

    fn mismatch(&self, what: impl fmt::Display) -> Error {
        Error::SpaceMismatch {
            left: format!("{:?}", self.right),
            right: what.to_string(),
        }
    }

    /// `v ⊗̀ u` for a semi-free right factor: coordinates `v_i · u_j`.
    pub fn sesqui(&self, v: &Vector, u: &SemiVector) -> Result<SesquiElement> {
        self.left.check_same(&v.space)?;
        match &self.right {
            RightFactor::Semi(s) if s == u.space() => {}
            _ => return Err(self.mismatch(u.space())),
        }
        let ud = u.dense();
        let coords = v
            .coords
            .iter()
            .flat_map(|a| ud.iter().map(move |b| a * b))
            .collect();
        Ok(SesquiElement {
            space: self.clone(),
            coords,
        })
    }

    /// `v ⊗̀ u` for a vector right factor, splitting `u = u₊ − u₋` into
    /// nonnegative parts with disjoint support.
    pub fn sesqui_vv(&self, v: &Vector, u: &Vector) -> Result<SesquiElement> {
        self.left.check_same(&v.space)?;
        match &self.right {
            RightFactor::Vector(s) if *s == u.space => {}
            _ => return Err(self.mismatch(&u.space)),
        }
        let k = u.space.dim;
        let half = self.left.dim * k;
        let mut coords = vec![Rational::zero(); 2 * half];
        for (i, a) in v.coords.iter().enumerate() {
            for (j, b) in u.coords.iter().enumerate() {
                if b.is_positive() {
                    coords[i * k + j] = a * b;
                } else if b.is_negative() {
                    coords[half + i * k + j] = a * &b.abs();
                }
            }
        }
        Ok(SesquiElement {
            space: self.clone(),
            coords,
        })
    }

    /// Matrix of the natural surjection `V ⊗̀ U → V ⊗ U`
    /// (`b_i⊗̀c_j ↦ e_ij`, `b_i⊗̀(−c_j) ↦ −e_ij`).
    pub fn projection_matrix(&self) -> Result<RatMatrix> {
        let RightFactor::Vector(u) = &self.right else {
            return Err(self.mismatch("vector right factor"));
        };
        let half = self.left.dim * u.dim();
        let mut m = RatMatrix::zeros(half, 2 * half);
        for r in 0..half {
            m.set(r, r, Rational::one());
            m.set(r, half + r, -Rational::one());
        }
        Ok(m)
    }
}

/// Element of a [`SesquiSpace`], dense on its distinguished basis.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct SesquiElement {
    space: SesquiSpace,
    coords: Vec<Rational>,
}

impl SesquiElement {
    pub fn new(space: &SesquiSpace, coords: Vec<Rational>) -> Result<Self> {
        if coords.len() != space.dim() {
            return Err(Error::ShapeMismatch {
                expected: format!("{} coordinates", space.dim()),
                found: format!("{} coordinates", coords.len()),
            });
        }
        Ok(SesquiElement {
            space: space.clone(),
            coords,
        })
    }

    pub fn space(&self) -> &SesquiSpace {
        &self.space
    }

    pub fn coords(&self) -> &[Rational] {
        &self.coords
    }

    pub fn is_zero(&self) -> bool {
        self.coords.iter().all(Rational::is_zero)
    }

    pub fn add(&self, other: &SesquiElement) -> Result<SesquiElement> {
        if self.space != other.space {
            return Err(Error::SpaceMismatch {
                left: format!("{:?}", self.space),
                right: format!("{:?}", other.space),
            });
        }
        Ok(SesquiElement {
            space: self.space.clone(),
            coords: self.coords.iter().zip(&other.coords).map(|(a, b)| a + b).collect(),
        })
    }

    pub fn scale(&self, s: &Rational) -> SesquiElement {
        SesquiElement {
            space: self.space.clone(),
            coords: self.coords.iter().map(|c| c * s).collect(),
        }
    }

    pub fn neg(&self) -> SesquiElement {
        self.scale(&-Rational::one())
    }

    /// Image under the natural surjection onto the ordinary tensor product.
    pub fn project(&self) -> Result<Vector> {
        let RightFactor::Vector(u) = &self.space.right else {
            return Err(self.space.mismatch("vector right factor"));
        };
        let m = self.space.projection_matrix()?;
        Ok(Vector {
            space: tensor_space(&self.space.left, u),
            coords: m.mul_vec(&self.coords)?,
        })
    }

    /// The same element read in the left product `U ⊗́ V` (semi-free `U` only).
    pub fn to_left(&self) -> Result<LeftSesquiElement> {
        let RightFactor::Semi(u) = &self.space.right else {
            return Err(self.space.mismatch("semi-free right factor"));
        };
        let (m, n) = (self.space.left.dim, u.sdim());
        let mut coords = vec![Rational::zero(); m * n];
        for i in 0..m {
            for j in 0..n {
                coords[j * m + i] = self.coords[i * n + j].clone();
            }
        }
        Ok(LeftSesquiElement {
            semi: u.clone(),
            vector: self.space.left.clone(),
            coords,
        })
    }
}

/// Element of the left sesqui-tensor product `U ⊗́ V`, basis `c_j ⊗́ b_i` at
/// index `j·dim V + i`.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct LeftSesquiElement {
    semi: SemiSpace,
    vector: VecSpace,
    coords: Vec<Rational>,
}

impl LeftSesquiElement {
    pub fn coords(&self) -> &[Rational] {
        &self.coords
    }

    pub fn to_right(&self) -> SesquiElement {
        let (m, n) = (self.vector.dim, self.semi.sdim());
        let mut coords = vec![Rational::zero(); m * n];
        for j in 0..n {
            for i in 0..m {
                coords[i * n + j] = self.coords[j * m + i].clone();
            }
        }
        SesquiElement {
            space: SesquiSpace::with_semi(&self.vector, &self.semi),
            coords,
        }
    }
}

/// The universal vector extension `R ⊗̀ U` of a semi-free space, with basis `1 ⊗̀ b_i`.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct ExtensionSpace {
    base: SemiSpace,
    space: VecSpace,
}

impl ExtensionSpace {
    pub fn new(base: &SemiSpace) -> Self {
        let label = if base.is_dual() {
            format!("R⊗{}*", base.label())
        } else {
            format!("R⊗{}", base.label())
        };
        ExtensionSpace {
            base: base.clone(),
            space: VecSpace::new(&label, base.sdim()),
        }
    }

    pub fn base(&self) -> &SemiSpace {
        &self.base
    }

    pub fn space(&self) -> &VecSpace {
        &self.space
    }

    pub fn dim(&self) -> usize {
        self.space.dim
    }

    /// `u ↦ 1 ⊗̀ u`.
    pub fn embed(&self, u: &SemiVector) -> Result<Vector> {
        if u.space() != &self.base {
            return Err(Error::SpaceMismatch {
                left: self.base.to_string(),
                right: u.space().to_string(),
            });
        }
        Ok(Vector {
            space: self.space.clone(),
            coords: u.dense(),
        })
    }

    /// Splits `t = 1 ⊗̀ u₊ + (−1) ⊗̀ u₋` with disjoint supports; an empty part is `None`.
    pub fn decompose(&self, t: &Vector) -> Result<(Option<SemiVector>, Option<SemiVector>)> {
        self.space.check_same(&t.space)?;
        let part = |keep: fn(&Rational) -> bool| -> Result<Option<SemiVector>> {
            let coords: Vec<(usize, Rational)> = t
                .coords
                .iter()
                .enumerate()
                .filter(|(_, c)| keep(c))
                .map(|(i, c)| (i, c.abs()))
                .collect();
            if coords.is_empty() {
                Ok(None)
            } else {
                SemiVector::new(&self.base, coords).map(Some)
            }
        };
        Ok((part(Rational::is_positive)?, part(Rational::is_negative)?))
    }
}

/// Semi-linear map from a semi-free space into a vector space; column `j`
/// holds `f(b_j)`.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct SemiToVecMap {
    source: SemiSpace,
    target: VecSpace,
    matrix: RatMatrix,
}

impl SemiToVecMap {
    pub fn new(source: &SemiSpace, target: &VecSpace, matrix: RatMatrix) -> Result<Self> {
        if matrix.rows() != target.dim || matrix.cols() != source.sdim() {
            return Err(Error::ShapeMismatch {
                expected: format!("{}x{}", target.dim, source.sdim()),
                found: format!("{}x{}", matrix.rows(), matrix.cols()),
            });
        }
        Ok(SemiToVecMap {
            source: source.clone(),
            target: target.clone(),
            matrix,
        })
    }

    pub fn source(&self) -> &SemiSpace {
        &self.source
    }

    pub fn target(&self) -> &VecSpace {
        &self.target
    }

    pub fn apply(&self, u: &SemiVector) -> Result<Vector> {
        if u.space() != &self.source {
            return Err(Error::SpaceMismatch {
                left: self.source.to_string(),
                right: u.space().to_string(),
            });
        }
        Ok(Vector {
            space: self.target.clone(),
            coords: self.matrix.mul_vec(&u.dense())?,
        })
    }
}

#[derive(Clone, PartialEq, Eq, Debug)]
pub struct LinearMap {
    source: VecSpace,
    target: VecSpace,
    matrix: RatMatrix,
}

impl LinearMap {
    pub fn source(&self) -> &VecSpace {
        &self.source
    }

    pub fn target(&self) -> &VecSpace {
        &self.target
    }

    pub fn matrix(&self) -> &RatMatrix {
        &self.matrix
    }

    pub fn apply(&self, v: &Vector) -> Result<Vector> {
        self.source.check_same(&v.space)?;
        Ok(Vector {
            space: self.target.clone(),
            coords: self.matrix.mul_vec(&v.coords)?,
        })
    }
}

/// The unique linear map `f̄: R ⊗̀ U → V` with `f̄(1 ⊗̀ u) = f(u)`.
pub fn extend_map(f: &SemiToVecMap) -> LinearMap {
    LinearMap {
        source: ExtensionSpace::new(&f.source).space,
        target: f.target.clone(),
        matrix: f.matrix.clone(),
    }
}

/// The semi-tensor product of finitely many semi-free spaces.
///
/// The empty product is `R+`. The product is complete as soon as one factor is.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct SemiTensorSpace {
    factors: Vec<SemiSpace>,
    space: SemiSpace,
}

impl SemiTensorSpace {
    pub fn new(factors: &[SemiSpace]) -> Self {
        if factors.is_empty() {
            return SemiTensorSpace {
                factors: Vec::new(),
                space: SemiSpace::positive_reals(),
            };
        }
        let label = factors.iter().map(SemiSpace::to_string).collect::<Vec<_>>().join("⊗");
        let sdim = factors.iter().map(SemiSpace::sdim).product();
        let mut space = SemiSpace::new(&format!("({label})"), sdim);
        if factors.iter().any(SemiSpace::is_complete) {
            space = space.complete().expect("fresh space is not complete");
        }
        SemiTensorSpace {
            factors: factors.to_vec(),
            space,
        }
    }

    /// `⊗̂ᵐ U`; `m = 0` gives `R+`.
    pub fn power(base: &SemiSpace, m: usize) -> Self {
        SemiTensorSpace::new(&vec![base.clone(); m])
    }

    pub fn factors(&self) -> &[SemiSpace] {
        &self.factors
    }

    pub fn space(&self) -> &SemiSpace {
        &self.space
    }

    pub fn sdim(&self) -> usize {
        self.space.sdim()
    }

    /// `u₁ ⊗̂ … ⊗̂ u_m`, coordinates are products of factor coordinates.
    pub fn product(&self, elems: &[SemiVector]) -> Result<SemiVector> {
        if elems.len() != self.factors.len() {
            return Err(Error::ShapeMismatch {
                expected: format!("{} factors", self.factors.len()),
                found: format!("{} factors", elems.len()),
            });
        }
        let mut coords: Vec<(usize, Rational)> = vec![(0, Rational::one())];
        for (u, s) in elems.iter().zip(&self.factors) {
            if u.space() != s {
                return Err(Error::SpaceMismatch {
                    left: s.to_string(),
                    right: u.space().to_string(),
                });
            }
            let n = s.sdim();
            coords = coords
                .iter()
                .flat_map(|(i, a)| u.coords().map(move |(j, b)| (i * n + j, a * b)))
                .collect();
        }
        SemiVector::new(&self.space, coords)
    }

    /// The canonical iso `R+ ⊗̂ U ≅ U`, `r ⊗̂ u ↦ r u`.
    pub fn collapse_scalar(&self, t: &SemiVector) -> Result<SemiVector> {
        match self.factors.as_slice() {
            [r, u] if *r == SemiSpace::positive_reals() => {
                if t.space() != &self.space {
                    return Err(Error::SpaceMismatch {
                        left: self.space.to_string(),
                        right: t.space().to_string(),
                    });
                }
                SemiVector::new(u, t.coords().map(|(i, c)| (i, c.clone())))
            }
            _ => Err(Error::SpaceMismatch {
                left: "R+ ⊗ U".into(),
                right: self.space.to_string(),
            }),
        }
    }
}

/// `u ⊗̂ v` in the product of their spaces.
pub fn semi_tensor(u: &SemiVector, v: &SemiVector) -> Result<SemiVector> {
    SemiTensorSpace::new(&[u.space().clone(), v.space().clone()]).product(&[u.clone(), v.clone()])
}

/// The rank-one semi-linear map `α ⊗̂ v : u ↦ α(u) v`.
pub fn slin_as_semitensor(alpha: &SemiVector, v: &SemiVector) -> Result<SemiLinearMap> {
    let source = alpha.space().dual();
    let target = v.space();
    let (a, b) = (alpha.dense(), v.dense());
    let mut m = RatMatrix::zeros(target.sdim(), source.sdim());
    for (i, vi) in b.iter().enumerate() {
        for (j, aj) in a.iter().enumerate() {
            m.set(i, j, vi * aj);
        }
    }
    SemiLinearMap::new(&source, target, m)
}

/// Writes `f` as a sum of rank-one maps `b^j ⊗̂ f(b_j)`, one per nonzero column.
pub fn rank_one_terms(f: &SemiLinearMap) -> Result<Vec<(SemiVector, SemiVector)>> {
    let dual = f.source().dual();
    let mut terms = Vec::new();
    for j in 0..f.source().sdim() {
        let image = f.apply(&f.source().basis_vector(j)?)?;
        if !image.is_zero() {
            terms.push((dual.basis_vector(j)?, image));
        }
    }
    Ok(terms)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ri(n: i64) -> Rational {
        Rational::from(n)
    }

    fn vector(space: &VecSpace, c: &[i64]) -> Vector {
        Vector::new(space, c.iter().map(|&x| ri(x)).collect()).unwrap()
    }

    fn semi(space: &SemiSpace, c: &[i64]) -> SemiVector {
        SemiVector::from_dense(space, &c.iter().map(|&x| ri(x)).collect::<Vec<_>>()).unwrap()
    }

    fn ints(c: &[Rational]) -> Vec<i64> {
        c.iter().map(|x| x.to_string().parse().unwrap()).collect()
    }

    #[test]
    fn sesqui_examples() {
        let v2 = VecSpace::new("V", 2);
        let u2 = SemiSpace::new("U", 2);
        let s = SesquiSpace::with_semi(&v2, &u2);
        assert_eq!(s.dim(), 4);
        let t = s.sesqui(&vector(&v2, &[1, -1]), &semi(&u2, &[2, 3])).unwrap();
        assert_eq!(ints(t.coords()), vec![2, 3, -2, -3]);
        assert!(s.sesqui(&v2.zero(), &semi(&u2, &[2, 3])).unwrap().is_zero());

        let cu = u2.complete().unwrap();
        let sc = SesquiSpace::with_semi(&v2, &cu);
        assert!(sc.sesqui(&vector(&v2, &[4, 5]), &cu.zero().unwrap()).unwrap().is_zero());

        assert!(matches!(
            s.sesqui(&vector(&v2, &[1, 1]), &cu.zero().unwrap()),
            Err(Error::SpaceMismatch { .. })
        ));
        assert!(s.sesqui(&vector(&VecSpace::new("W", 2), &[1, 1]), &semi(&u2, &[1, 1])).is_err());
    }

    #[test]
    fn sesqui_vv_examples() {
        let one = VecSpace::new("V", 1);
        let u1 = VecSpace::new("U", 1);
        let s = SesquiSpace::with_vector(&one, &u1);
        assert_eq!(s.dim(), 2);
        let t = s.sesqui_vv(&vector(&one, &[1]), &vector(&u1, &[-2])).unwrap();
        assert_eq!(ints(t.coords()), vec![0, 2]);

        let v2 = VecSpace::new("V", 2);
        let u3 = VecSpace::new("U", 3);
        let s = SesquiSpace::with_vector(&v2, &u3);
        let t = s.sesqui_vv(&vector(&v2, &[3, -1]), &vector(&u3, &[1, 0, 2])).unwrap();
        assert!(t.coords()[6..].iter().all(Rational::is_zero));

        let v = vector(&v2, &[3, -1]);
        let u = vector(&u3, &[1, -4, 2]);
        assert_eq!(
            s.sesqui_vv(&v.neg(), &u).unwrap(),
            s.sesqui_vv(&v, &u).unwrap().neg()
        );
        // v ⊗̀ (−u) is not −(v ⊗̀ u)
        assert_ne!(
            s.sesqui_vv(&v, &u.neg()).unwrap(),
            s.sesqui_vv(&v, &u).unwrap().neg()
        );
    }

    #[test]
    fn projection_examples() {
        let one = VecSpace::reals();
        let u = VecSpace::new("U", 2);
        let s = SesquiSpace::with_vector(&one, &u);
        let x = vector(&u, &[1, -3]);
        let a = s.sesqui_vv(&vector(&one, &[1]), &x).unwrap();
        let b = s.sesqui_vv(&vector(&one, &[1]), &x.neg()).unwrap();
        assert!(a.add(&b).unwrap().project().unwrap().is_zero());
        assert!(s.zero().project().unwrap().is_zero());

        let v = VecSpace::new("V", 2);
        let s = SesquiSpace::with_vector(&v, &u);
        let vv = vector(&v, &[2, -5]);
        let uu = vector(&u, &[-1, 7]);
        assert_eq!(s.sesqui_vv(&vv, &uu).unwrap().project().unwrap(), outer(&vv, &uu));

        let m = s.projection_matrix().unwrap();
        assert_eq!(m.rank(), 4);
        assert!(SesquiSpace::with_semi(&v, &SemiSpace::new("S", 2)).projection_matrix().is_err());
    }

    #[test]
    fn left_product_is_reindexing() {
        let v = VecSpace::new("V", 2);
        let u = SemiSpace::new("U", 3);
        let s = SesquiSpace::with_semi(&v, &u);
        let t = s.sesqui(&vector(&v, &[1, 2]), &semi(&u, &[1, 0, 5])).unwrap();
        let left = t.to_left().unwrap();
        assert_eq!(ints(left.coords()), vec![1, 2, 0, 0, 5, 10]);
        assert_eq!(left.to_right(), t);
    }

    #[test]
    fn extension_examples() {
        let u = SemiSpace::new("U", 2);
        let ext = ExtensionSpace::new(&u);
        assert_eq!(ext.dim(), u.sdim());
        assert_eq!(ints(ext.embed(&semi(&u, &[1, 2])).unwrap().coords()), vec![1, 2]);

        let t = vector(ext.space(), &[3, -2]);
        let (p, m) = ext.decompose(&t).unwrap();
        assert_eq!(p.unwrap(), semi(&u, &[3, 0]));
        assert_eq!(m.unwrap(), semi(&u, &[0, 2]));
        let (p, m) = ext.decompose(&vector(ext.space(), &[3, 1])).unwrap();
        assert!(p.is_some() && m.is_none());
        let (p, m) = ext.decompose(&ext.space().zero()).unwrap();
        assert!(p.is_none() && m.is_none());
        assert!(ext.embed(&SemiSpace::new("W", 2).basis_vector(0).unwrap()).is_err());
    }

    #[test]
    fn extend_map_examples() {
        let u = SemiSpace::new("U", 2);
        let line = VecSpace::new("V", 1);
        let f = SemiToVecMap::new(&u, &line, RatMatrix::from_rows(vec![vec![ri(2), ri(5)]]).unwrap()).unwrap();
        let fbar = extend_map(&f);
        assert_eq!(fbar.matrix(), &RatMatrix::from_rows(vec![vec![ri(2), ri(5)]]).unwrap());

        let ext = ExtensionSpace::new(&u);
        let x = semi(&u, &[3, 4]);
        let e = ext.embed(&x).unwrap();
        assert_eq!(fbar.apply(&e).unwrap(), f.apply(&x).unwrap());
        assert_eq!(fbar.apply(&e.neg()).unwrap(), f.apply(&x).unwrap().neg());

        let zero = SemiToVecMap::new(&u, &line, RatMatrix::zeros(1, 2)).unwrap();
        assert!(extend_map(&zero).apply(&e).unwrap().is_zero());
    }

    #[test]
    fn semi_tensor_examples() {
        let b = SemiSpace::positive("B");
        let c = SemiSpace::positive("C");
        let t = semi_tensor(&semi(&b, &[2]), &semi(&c, &[3])).unwrap();
        assert_eq!(t.coord(0), ri(6));

        let u = SemiSpace::new("U", 3);
        let v = SemiSpace::new("V", 2);
        assert_eq!(SemiTensorSpace::new(&[u.clone(), v.clone()]).sdim(), 6);

        let rp = SemiSpace::positive_reals();
        let prod = SemiTensorSpace::new(&[rp.clone(), u.clone()]);
        let x = semi(&u, &[1, 0, 4]);
        let rx = prod.product(&[semi(&rp, &[5]), x.clone()]).unwrap();
        assert_eq!(prod.collapse_scalar(&rx).unwrap(), x.smul(&ri(5)).unwrap());

        assert_eq!(SemiTensorSpace::power(&u, 0).space(), &rp);
        assert_eq!(SemiTensorSpace::power(&u, 2).sdim(), 9);
        let sq = SemiTensorSpace::power(&u, 2).product(&[x.clone(), x.clone()]).unwrap();
        assert_eq!(sq.coord(8), ri(16));
        assert_eq!(sq.coord(2), ri(4));
    }

    #[test]
    fn slin_examples() {
        let b = SemiSpace::positive("B");
        let c = SemiSpace::positive("C");
        let unit = slin_as_semitensor(&b.dual_basis()[0], &c.basis_vector(0).unwrap()).unwrap();
        assert_eq!(unit.matrix(), &RatMatrix::identity(1));

        let alpha = b.dual_basis()[0].smul(&ri(2)).unwrap();
        let v = c.basis_vector(0).unwrap().smul(&ri(3)).unwrap();
        let f = slin_as_semitensor(&alpha, &v).unwrap();
        assert_eq!(f.apply(&b.basis_vector(0).unwrap()).unwrap(), semi(&c, &[6]));
    }
}
