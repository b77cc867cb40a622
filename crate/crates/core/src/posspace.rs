//! Positive spaces, their rational powers `U^q`, and `q`-rational maps.
//!
//! An atomic positive space is identified by an interned label. Each power
//! `U^q` is represented relative to the distinguished unit `b^q` of a chosen
//! base unit `b`, so an element is just a positive real coefficient tagged
//! with `(base, q)`. Exponents stay exact; only coefficients are floating.

use std::fmt;
use std::sync::{Arc, Mutex, OnceLock};

use crate::error::{Error, Result};
use crate::exactla::{PosReal, Rational};

/// Interned identifier of an atomic positive space.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Debug)]
pub struct Atom(u32);

fn atoms() -> &'static Mutex<Vec<Arc<str>>> {
    static TABLE: OnceLock<Mutex<Vec<Arc<str>>>> = OnceLock::new();
    TABLE.get_or_init(|| Mutex::new(Vec::new()))
}

impl Atom {
    /// Returns the atom for `label`, registering it on first use.
    pub fn intern(label: &str) -> Atom {
        let mut table = atoms().lock().expect("atom table poisoned");
        if let Some(i) = table.iter().position(|l| &**l == label) {
            return Atom(i as u32);
        }
        table.push(label.into());
        Atom((table.len() - 1) as u32)
    }

    pub fn label(self) -> Arc<str> {
        atoms().lock().expect("atom table poisoned")[self.0 as usize].clone()
    }
}

/// The rational power `U^q` of an atomic positive space.
///
/// `U^0` is the scalar space `R+` whatever `U` is, so its base is dropped.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct PowerSpace {
    base: Option<Atom>,
    exponent: Rational,
}

impl PowerSpace {
    pub fn new(base: Atom, exponent: Rational) -> Self {
        if exponent.is_zero() {
            PowerSpace::scalars()
        } else {
            PowerSpace {
                base: Some(base),
                exponent,
            }
        }
    }

    pub fn atomic(label: &str) -> Self {
        PowerSpace::new(Atom::intern(label), Rational::one())
    }

    /// `R+ = U^0`.
    pub fn scalars() -> Self {
        PowerSpace {
            base: None,
            exponent: Rational::zero(),
        }
    }

    pub fn base(&self) -> Option<Atom> {
        self.base
    }

    pub fn exponent(&self) -> &Rational {
        &self.exponent
    }

    pub fn is_scalars(&self) -> bool {
        self.base.is_none()
    }

    /// `(U^q)^p = U^{qp}`.
    pub fn pow(&self, p: &Rational) -> PowerSpace {
        match self.base {
            None => PowerSpace::scalars(),
            Some(b) => PowerSpace::new(b, &self.exponent * p),
        }
    }

    /// `(U^q)* = U^{-q}`.
    pub fn dual(&self) -> PowerSpace {
        self.pow(&-Rational::one())
    }

    pub fn unit(&self) -> PowerElement {
        PowerElement {
            space: self.clone(),
            coeff: PosReal::ONE,
        }
    }

    pub fn element(&self, coeff: PosReal) -> PowerElement {
        PowerElement {
            space: self.clone(),
            coeff,
        }
    }

    fn check_same(&self, other: &PowerSpace) -> Result<()> {
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

impl fmt::Display for PowerSpace {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.base {
            None => write!(f, "R+"),
            Some(b) if self.exponent.is_one() => write!(f, "{}", b.label()),
            Some(b) => write!(f, "{}^{}", b.label(), self.exponent),
        }
    }
}

/// `coeff · b^q` in `U^q`.
#[derive(Clone, PartialEq, Debug)]
pub struct PowerElement {
    space: PowerSpace,
    coeff: PosReal,
}

impl PowerElement {
    pub fn space(&self) -> &PowerSpace {
        &self.space
    }

    pub fn coeff(&self) -> PosReal {
        self.coeff
    }

    pub fn smul(&self, r: PosReal) -> PowerElement {
        PowerElement {
            space: self.space.clone(),
            coeff: r * self.coeff,
        }
    }

    /// `1/u` in the dual, characterised by `<1/u, u> = 1`.
    pub fn inverse(&self) -> PowerElement {
        PowerElement {
            space: self.space.dual(),
            coeff: self.coeff.recip(),
        }
    }

    /// Evaluates the dual element `self` on `u`.
    pub fn pair(&self, u: &PowerElement) -> Result<PosReal> {
        self.space.dual().check_same(&u.space)?;
        Ok(self.coeff * u.coeff)
    }

    /// `π^q(u) = u^q`.
    pub fn power(&self, q: &Rational) -> PowerElement {
        PowerElement {
            space: self.space.pow(q),
            coeff: self.coeff.powq(q),
        }
    }

    /// For `u` in `U^p`, `u^q` in `U^{pq}`; the composite of `π^p` and `π^q`.
    pub fn iterate_power(&self, q: &Rational) -> PowerElement {
        self.power(q)
    }

    /// The product `U^p ⊗̂ U^q → U^{p+q}`. A scalar factor acts by scaling.
    pub fn combine(&self, other: &PowerElement) -> Result<PowerElement> {
        let space = match (self.space.base, other.space.base) {
            (None, _) => other.space.clone(),
            (_, None) => self.space.clone(),
            (Some(a), Some(b)) if a == b => PowerSpace::new(a, &self.space.exponent + &other.space.exponent),
            _ => {
                return Err(Error::BaseMismatch {
                    left: self.space.to_string(),
                    right: other.space.to_string(),
                })
            }
        };
        Ok(PowerElement {
            space,
            coeff: self.coeff * other.coeff,
        })
    }

    pub fn approx_eq(&self, other: &PowerElement, rel_tol: f64) -> bool {
        self.space == other.space && self.coeff.approx_eq(other.coeff, rel_tol)
    }
}

impl fmt::Display for PowerElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}·1[{}]", self.coeff, self.space)
    }
}

/// A map `f` between positive spaces with `f(r u) = r^q f(u)`, stored by its
/// degree and its value on the source unit.
#[derive(Clone, PartialEq, Debug)]
pub struct RationalMap {
    degree: Rational,
    source: PowerSpace,
    target: PowerSpace,
    image_coeff: PosReal,
}

impl RationalMap {
    pub fn new(degree: Rational, source: PowerSpace, target: PowerSpace, image_coeff: PosReal) -> Self {
        RationalMap {
            degree,
            source,
            target,
            image_coeff,
        }
    }

    /// The unique `q`-rational map sending `u` to `v`.
    pub fn through(degree: Rational, u: &PowerElement, v: &PowerElement) -> Self {
        let image_coeff = v.coeff / u.coeff.powq(&degree);
        RationalMap {
            degree,
            source: u.space.clone(),
            target: v.space.clone(),
            image_coeff,
        }
    }

    pub fn identity(space: &PowerSpace) -> Self {
        RationalMap::new(Rational::one(), space.clone(), space.clone(), PosReal::ONE)
    }

    /// `π^q : U^p → U^{pq}` as a `q`-rational map.
    pub fn power_map(space: &PowerSpace, q: &Rational) -> Self {
        RationalMap::new(q.clone(), space.clone(), space.pow(q), PosReal::ONE)
    }

    pub fn degree(&self) -> &Rational {
        &self.degree
    }

    pub fn source(&self) -> &PowerSpace {
        &self.source
    }

    pub fn target(&self) -> &PowerSpace {
        &self.target
    }

    pub fn image_coeff(&self) -> PosReal {
        self.image_coeff
    }

    pub fn apply(&self, u: &PowerElement) -> Result<PowerElement> {
        self.source.check_same(&u.space)?;
        Ok(PowerElement {
            space: self.target.clone(),
            coeff: self.image_coeff * u.coeff.powq(&self.degree),
        })
    }

    /// `g ∘ f` where `self` is `g`; degrees multiply.
    pub fn compose(&self, f: &RationalMap) -> Result<RationalMap> {
        f.target.check_same(&self.source)?;
        Ok(RationalMap {
            degree: &self.degree * &f.degree,
            source: f.source.clone(),
            target: self.target.clone(),
            image_coeff: self.image_coeff * f.image_coeff.powq(&self.degree),
        })
    }

    /// Inverse of a bijective `q`-rational map, which is `1/q`-rational.
    pub fn inverse(&self) -> Result<RationalMap> {
        let inv_degree = self.degree.recip().map_err(|_| Error::NotInvertible)?;
        Ok(RationalMap {
            image_coeff: self.image_coeff.powq(&-&inv_degree),
            degree: inv_degree,
            source: self.target.clone(),
            target: self.source.clone(),
        })
    }
}
