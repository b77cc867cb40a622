//! Finite semi-free semi-vector spaces over the positive reals.
//!
//! A space of semi-dimension `n` is stored as the canonical orthant: every
//! element is a nonnegative rational coordinate vector on the fixed semi-basis
//! `b_0, …, b_{n-1}`, with at least one positive entry unless the space is
//! complete and the element is its zero. Arbitrary cones spanned by `n`
//! independent generators are isomorphic to this normal form.

use std::collections::BTreeMap;
use std::fmt;
use std::sync::Arc;

use crate::error::{Error, Result};
use crate::exactla::{RatMatrix, Rational};

/// A semi-free semi-vector space in canonical orthant form.
///
/// Two spaces are the same space iff label, semi-dimension, completeness and
/// duality all agree.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct SemiSpace {
    label: Arc<str>,
    sdim: usize,
    complete: bool,
    dual: bool,
}

impl SemiSpace {
    pub fn new(label: &str, sdim: usize) -> Self {
        SemiSpace {
            label: label.into(),
            sdim,
            complete: false,
            dual: false,
        }
    }

    /// A non-complete space of semi-dimension 1.
    pub fn positive(label: &str) -> Self {
        SemiSpace::new(label, 1)
    }

    /// The semi-field `R+` itself, as a positive space.
    pub fn positive_reals() -> Self {
        SemiSpace::positive("R+")
    }

    pub fn label(&self) -> &str {
        &self.label
    }

    pub fn sdim(&self) -> usize {
        self.sdim
    }

    pub fn is_complete(&self) -> bool {
        self.complete
    }

    pub fn is_dual(&self) -> bool {
        self.dual
    }

    pub fn is_positive_space(&self) -> bool {
        self.sdim == 1 && !self.complete
    }

    /// Adjoins a zero element.
    pub fn complete(&self) -> Result<SemiSpace> {
        if self.complete {
            return Err(Error::AlreadyComplete(self.to_string()));
        }
        Ok(SemiSpace {
            complete: true,
            ..self.clone()
        })
    }

    /// The semi-dual, represented on the dual semi-basis. Taking the dual
    /// twice returns the original space.
    pub fn dual(&self) -> SemiSpace {
        SemiSpace {
            dual: !self.dual,
            ..self.clone()
        }
    }

    pub fn basis_vector(&self, i: usize) -> Result<SemiVector> {
        SemiVector::new(self, [(i, Rational::one())])
    }

    pub fn basis(&self) -> Vec<SemiVector> {
        (0..self.sdim)
            .map(|i| self.basis_vector(i).expect("index in range"))
            .collect()
    }

    pub fn zero(&self) -> Result<SemiVector> {
        if !self.complete {
            return Err(Error::NoZero(self.to_string()));
        }
        Ok(SemiVector {
            space: self.clone(),
            coords: BTreeMap::new(),
        })
    }

    /// Canonical dual semi-basis `b^0, …, b^{n-1}` with `<b^i, b_j> = δ^i_j`.
    pub fn dual_basis(&self) -> Vec<SemiVector> {
        self.dual().basis()
    }

    fn check_same(&self, other: &SemiSpace) -> Result<()> {
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

impl fmt::Display for SemiSpace {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.label)?;
        if self.dual {
            write!(f, "*")?;
        }
        if self.complete {
            write!(f, "^")?;
        }
        write!(f, "[{}]", self.sdim)
    }
}

impl fmt::Debug for SemiSpace {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

/// Element of a [`SemiSpace`]: sparse strictly positive coordinates.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct SemiVector {
    space: SemiSpace,
    coords: BTreeMap<usize, Rational>,
}

impl SemiVector {
    /// Builds an element from `(index, coefficient)` pairs. Zero coefficients
    /// are dropped and repeated indices accumulate.
    pub fn new(space: &SemiSpace, coords: impl IntoIterator<Item = (usize, Rational)>) -> Result<Self> {
        let mut map: BTreeMap<usize, Rational> = BTreeMap::new();
        for (i, c) in coords {
            if i >= space.sdim {
                return Err(Error::IndexOutOfRange { index: i, sdim: space.sdim });
            }
            if c.is_negative() {
                return Err(Error::NegativeCoordinate(c.to_string()));
            }
            if c.is_zero() {
                continue;
            }
            *map.entry(i).or_insert_with(Rational::zero) += &c;
        }
        if map.is_empty() && !space.complete {
            return Err(Error::NoZero(space.to_string()));
        }
        Ok(SemiVector {
            space: space.clone(),
            coords: map,
        })
    }

    /// Builds an element from a dense coordinate slice.
    pub fn from_dense(space: &SemiSpace, coords: &[Rational]) -> Result<Self> {
        if coords.len() != space.sdim {
            return Err(Error::ShapeMismatch {
                expected: format!("{} coordinates", space.sdim),
                found: format!("{} coordinates", coords.len()),
            });
        }
        SemiVector::new(space, coords.iter().cloned().enumerate())
    }

    pub fn space(&self) -> &SemiSpace {
        &self.space
    }

    pub fn coord(&self, i: usize) -> Rational {
        self.coords.get(&i).cloned().unwrap_or_else(Rational::zero)
    }

    pub fn coords(&self) -> impl Iterator<Item = (usize, &Rational)> {
        self.coords.iter().map(|(i, c)| (*i, c))
    }

    pub fn dense(&self) -> Vec<Rational> {
        (0..self.space.sdim).map(|i| self.coord(i)).collect()
    }

    pub fn support(&self) -> Vec<usize> {
        self.coords.keys().copied().collect()
    }

    pub fn is_zero(&self) -> bool {
        self.coords.is_empty()
    }

    pub fn add(&self, other: &SemiVector) -> Result<SemiVector> {
        self.space.check_same(&other.space)?;
        let mut coords = self.coords.clone();
        for (i, c) in &other.coords {
            *coords.entry(*i).or_insert_with(Rational::zero) += c;
        }
        Ok(SemiVector {
            space: self.space.clone(),
            coords,
        })
    }

    /// Multiplication by a strictly positive rational scalar.
    pub fn smul(&self, r: &Rational) -> Result<SemiVector> {
        if !r.is_positive() {
            return Err(Error::NonPositiveScalar(r.to_string()));
        }
        Ok(SemiVector {
            space: self.space.clone(),
            coords: self.coords.iter().map(|(i, c)| (*i, c * r)).collect(),
        })
    }

    /// Evaluates the dual element `self` on `u`.
    pub fn pair(&self, u: &SemiVector) -> Result<Rational> {
        self.space.dual().check_same(&u.space)?;
        Ok(self
            .coords
            .iter()
            .map(|(i, a)| a * &u.coord(*i))
            .sum())
    }
}

impl fmt::Display for SemiVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.coords.is_empty() {
            return write!(f, "0");
        }
        let star = if self.space.dual { "^" } else { "_" };
        for (k, (i, c)) in self.coords.iter().enumerate() {
            if k > 0 {
                write!(f, " + ")?;
            }
            write!(f, "{c}·b{star}{i}")?;
        }
        Ok(())
    }
}

impl fmt::Debug for SemiVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Σ {} in {}", self, self.space)
    }
}

/// True iff `candidates` is a semi-basis of `space`.
///
/// A family is a semi-basis exactly when it has `sdim` elements and its
/// coordinate matrix is monomial: each candidate is a positive multiple of a
/// single canonical basis element, with every basis element hit once.
pub fn is_semi_basis(space: &SemiSpace, candidates: &[SemiVector]) -> bool {
    if candidates.len() != space.sdim {
        return false;
    }
    let mut hit = vec![false; space.sdim];
    for c in candidates {
        if c.space != *space || c.coords.len() != 1 {
            return false;
        }
        let i = *c.coords.keys().next().expect("one entry");
        if std::mem::replace(&mut hit[i], true) {
            return false;
        }
    }
    true
}

/// Semi-linear map between semi-free spaces, as a nonnegative matrix whose
/// j-th column holds the coordinates of `f(b_j)`.
#[derive(Clone, PartialEq, Eq)]
pub struct SemiLinearMap {
    source: SemiSpace,
    target: SemiSpace,
    matrix: RatMatrix,
}

impl SemiLinearMap {
    pub fn new(source: &SemiSpace, target: &SemiSpace, matrix: RatMatrix) -> Result<Self> {
        if matrix.rows() != target.sdim || matrix.cols() != source.sdim {
            return Err(Error::ShapeMismatch {
                expected: format!("{}x{}", target.sdim, source.sdim),
                found: format!("{}x{}", matrix.rows(), matrix.cols()),
            });
        }
        if let Some(neg) = matrix.entries().iter().find(|e| e.is_negative()) {
            return Err(Error::InvalidMap(format!("negative entry {neg}")));
        }
        if source.complete && !target.complete {
            return Err(Error::InvalidMap(format!(
                "complete source {source} cannot map into non-complete target {target}"
            )));
        }
        if !target.complete {
            if let Some(j) = (0..matrix.cols()).find(|&j| matrix.column(j).iter().all(Rational::is_zero)) {
                return Err(Error::InvalidMap(format!(
                    "basis element {j} maps to zero in non-complete {target}"
                )));
            }
        }
        Ok(SemiLinearMap {
            source: source.clone(),
            target: target.clone(),
            matrix,
        })
    }

    /// The unique semi-linear map sending `b_j` to `images[j]`.
    pub fn from_images(source: &SemiSpace, images: &[SemiVector]) -> Result<Self> {
        let target = images
            .first()
            .map(|v| v.space.clone())
            .ok_or_else(|| Error::InvalidMap("no images given".into()))?;
        if images.len() != source.sdim {
            return Err(Error::ShapeMismatch {
                expected: format!("{} images", source.sdim),
                found: format!("{} images", images.len()),
            });
        }
        for v in images {
            target.check_same(&v.space)?;
        }
        let cols: Vec<Vec<Rational>> = images.iter().map(SemiVector::dense).collect();
        SemiLinearMap::new(source, &target, RatMatrix::from_columns(target.sdim, &cols)?)
    }

    pub fn identity(space: &SemiSpace) -> Self {
        SemiLinearMap {
            source: space.clone(),
            target: space.clone(),
            matrix: RatMatrix::identity(space.sdim),
        }
    }

    pub fn source(&self) -> &SemiSpace {
        &self.source
    }

    pub fn target(&self) -> &SemiSpace {
        &self.target
    }

    pub fn matrix(&self) -> &RatMatrix {
        &self.matrix
    }

    pub fn apply(&self, u: &SemiVector) -> Result<SemiVector> {
        self.source.check_same(&u.space)?;
        let image = self.matrix.mul_vec(&u.dense())?;
        SemiVector::from_dense(&self.target, &image)
    }

    /// `g ∘ f`, where `self` is `g`.
    pub fn compose(&self, f: &SemiLinearMap) -> Result<SemiLinearMap> {
        f.target.check_same(&self.source)?;
        Ok(SemiLinearMap {
            source: f.source.clone(),
            target: self.target.clone(),
            matrix: self.matrix.mul_mat(&f.matrix)?,
        })
    }

    /// Pointwise sum of two maps with the same source and target.
    pub fn add(&self, other: &SemiLinearMap) -> Result<SemiLinearMap> {
        self.source.check_same(&other.source)?;
        self.target.check_same(&other.target)?;
        Ok(SemiLinearMap {
            source: self.source.clone(),
            target: self.target.clone(),
            matrix: self.matrix.add(&other.matrix)?,
        })
    }

    /// The transpose `f*: V* → U*, α ↦ α ∘ f`, on the dual semi-bases.
    ///
    /// Every functional that is positive on all of `V` pulls back to a
    /// nonzero functional, so the transpose is always defined on the dual
    /// cone. Applying it to a boundary functional that vanishes on the image
    /// of `f` fails in `apply` when `U*` has no zero.
    pub fn transpose(&self) -> SemiLinearMap {
        SemiLinearMap {
            source: self.target.dual(),
            target: self.source.dual(),
            matrix: self.matrix.transpose(),
        }
    }
}

impl fmt::Debug for SemiLinearMap {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} -> {} {:?}", self.source, self.target, self.matrix)
    }
}
