//! Integer and Grothendieck-Witt-valued compactly supported Euler
//! characteristics computed by scissor relations on a small expression
//! language of varieties.
//!
//! GW values live in the subring `Z[<-1>]`: every value produced by scissor
//! calculus on the supported expressions lies there, and rank and signature
//! are complete invariants of that subring.

use std::fmt;

use crate::{Error, Result};

fn checked_add(a: i64, b: i64) -> Result<i64> {
    a.checked_add(b).ok_or(Error::Overflow)
}

fn checked_mul(a: i64, b: i64) -> Result<i64> {
    a.checked_mul(b).ok_or(Error::Overflow)
}

/// An element `a + b*eps` of `Z[<-1>]`, where `eps = <-1>` and `eps^2 = 1`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct GWElement {
    a: i64,
    b: i64,
}

impl GWElement {
    pub fn new(a: i64, b: i64) -> Self {
        Self { a, b }
    }

    pub fn zero() -> Self {
        Self::new(0, 0)
    }

    pub fn one() -> Self {
        Self::new(1, 0)
    }

    /// The class `<-1>`.
    pub fn epsilon() -> Self {
        Self::new(0, 1)
    }

    /// `eps^n`, which is 1 for even n and eps for odd n.
    pub fn epsilon_pow(n: u32) -> Self {
        if n % 2 == 0 {
            Self::one()
        } else {
            Self::epsilon()
        }
    }

    pub fn coeff_one(&self) -> i64 {
        self.a
    }

    pub fn coeff_epsilon(&self) -> i64 {
        self.b
    }

    pub fn is_zero(&self) -> bool {
        self.a == 0 && self.b == 0
    }

    pub fn add(&self, other: &Self) -> Result<Self> {
        Ok(Self::new(
            checked_add(self.a, other.a)?,
            checked_add(self.b, other.b)?,
        ))
    }

    pub fn neg(&self) -> Result<Self> {
        Ok(Self::new(
            self.a.checked_neg().ok_or(Error::Overflow)?,
            self.b.checked_neg().ok_or(Error::Overflow)?,
        ))
    }

    pub fn sub(&self, other: &Self) -> Result<Self> {
        self.add(&other.neg()?)
    }

    /// Product in `Z[eps]/(eps^2 - 1)`.
    pub fn mul(&self, other: &Self) -> Result<Self> {
        let a = checked_add(
            checked_mul(self.a, other.a)?,
            checked_mul(self.b, other.b)?,
        )?;
        let b = checked_add(
            checked_mul(self.a, other.b)?,
            checked_mul(self.b, other.a)?,
        )?;
        Ok(Self::new(a, b))
    }

    /// Rank of the underlying quadratic form; a ring homomorphism to `Z`
    /// and the comparison map to the non-quadratic theory.
    pub fn rank(&self) -> i64 {
        self.a + self.b
    }

    /// Signature under the real realization; a ring homomorphism to `Z`.
    pub fn signature(&self) -> i64 {
        self.a - self.b
    }

    /// `(rank, signature)`.
    pub fn invariants(&self) -> (i64, i64) {
        (self.rank(), self.signature())
    }
}

impl fmt::Display for GWElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        if self.a != 0 {
            write!(f, "{}", self.a)?;
            first = false;
        }
        if self.b != 0 {
            if first {
                if self.b < 0 {
                    write!(f, "-")?;
                }
            } else if self.b < 0 {
                write!(f, " - ")?;
            } else {
                write!(f, " + ")?;
            }
            let mag = self.b.unsigned_abs();
            if mag == 1 {
                write!(f, "<-1>")?;
            } else {
                write!(f, "{mag}*<-1>")?;
            }
        }
        Ok(())
    }
}

/// Node of a [`SpaceExpression`].
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum SpaceKind {
    Point,
    /// Affine space of the given positive dimension.
    Affine(u32),
    /// Projective space of the given positive dimension.
    Proj(u32),
    /// The multiplicative group.
    Gm,
    Product(Vec<SpaceExpression>),
    DisjointUnion(Vec<SpaceExpression>),
    /// `whole` minus `closed`, with the user assertion that `closed` embeds
    /// as a closed subvariety of `whole`. The engine is a formal scissor
    /// calculator and does not validate the assertion.
    Complement {
        whole: Box<SpaceExpression>,
        closed: Box<SpaceExpression>,
    },
}

/// A formal variety built from points, affine and projective spaces and the
/// multiplicative group by products, disjoint unions and complements.
///
/// The optional `smooth_dim` annotation records the dimension when the
/// expression denotes a smooth variety of pure dimension. Constructors
/// fill it in where it is forced (leaves, products, complements inside a
/// smooth whole); [`SpaceExpression::with_smooth_dim`] overrides it.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SpaceExpression {
    kind: SpaceKind,
    smooth_dim: Option<u32>,
}

impl SpaceExpression {
    pub fn point() -> Self {
        Self {
            kind: SpaceKind::Point,
            smooth_dim: Some(0),
        }
    }

    pub fn affine(n: u32) -> Self {
        Self {
            kind: SpaceKind::Affine(n),
            smooth_dim: Some(n),
        }
    }

    pub fn proj(n: u32) -> Self {
        Self {
            kind: SpaceKind::Proj(n),
            smooth_dim: Some(n),
        }
    }

    pub fn gm() -> Self {
        Self {
            kind: SpaceKind::Gm,
            smooth_dim: Some(1),
        }
    }

    pub fn product(parts: Vec<SpaceExpression>) -> Self {
        let mut dim = Some(0u32);
        for p in &parts {
            dim = match (dim, p.smooth_dim) {
                (Some(d), Some(e)) => d.checked_add(e),
                _ => None,
            };
        }
        Self {
            kind: SpaceKind::Product(parts),
            smooth_dim: dim,
        }
    }

    pub fn disjoint_union(parts: Vec<SpaceExpression>) -> Self {
        // Smooth of pure dimension only when every part shares one.
        let mut dims = parts.iter().map(|p| p.smooth_dim);
        let dim = match dims.next() {
            Some(Some(first)) if dims.all(|d| d == Some(first)) => Some(first),
            _ => None,
        };
        Self {
            kind: SpaceKind::DisjointUnion(parts),
            smooth_dim: dim,
        }
    }

    pub fn complement(whole: SpaceExpression, closed: SpaceExpression) -> Self {
        // An open subset of a smooth variety is smooth of the same dimension.
        let dim = whole.smooth_dim;
        Self {
            kind: SpaceKind::Complement {
                whole: Box::new(whole),
                closed: Box::new(closed),
            },
            smooth_dim: dim,
        }
    }

    pub fn with_smooth_dim(mut self, dim: u32) -> Self {
        self.smooth_dim = Some(dim);
        self
    }

    pub fn kind(&self) -> &SpaceKind {
        &self.kind
    }

    pub fn smooth_dim(&self) -> Option<u32> {
        self.smooth_dim
    }

    /// The compactly supported integer Euler characteristic: the unique
    /// measure with value 1 on points and affine spaces, `n + 1` on `P^n`,
    /// 0 on `Gm`, additive over disjoint unions and complements and
    /// multiplicative over products.
    pub fn chi_compact(&self) -> Result<i64> {
        match &self.kind {
            SpaceKind::Point => Ok(1),
            SpaceKind::Affine(n) => {
                check_positive(*n)?;
                Ok(1)
            }
            SpaceKind::Proj(n) => {
                check_positive(*n)?;
                Ok(*n as i64 + 1)
            }
            SpaceKind::Gm => Ok(0),
            SpaceKind::Product(parts) => {
                let mut acc = 1i64;
                for p in parts {
                    acc = checked_mul(acc, p.chi_compact()?)?;
                }
                Ok(acc)
            }
            SpaceKind::DisjointUnion(parts) => {
                let mut acc = 0i64;
                for p in parts {
                    acc = checked_add(acc, p.chi_compact()?)?;
                }
                Ok(acc)
            }
            SpaceKind::Complement { whole, closed } => {
                checked_add(
                    whole.chi_compact()?,
                    closed.chi_compact()?.checked_neg().ok_or(Error::Overflow)?,
                )
            }
        }
    }

    /// The quadratic refinement of [`Self::chi_compact`]: the additive,
    /// multiplicative measure with value 1 on points, `eps - 1` on `Gm`,
    /// `eps^n` on `A^n` and `1 + eps + ... + eps^n` on `P^n`.
    pub fn chi_compact_quadratic(&self) -> Result<GWElement> {
        match &self.kind {
            SpaceKind::Point => Ok(GWElement::one()),
            SpaceKind::Affine(n) => {
                check_positive(*n)?;
                Ok(GWElement::epsilon_pow(*n))
            }
            SpaceKind::Proj(n) => {
                check_positive(*n)?;
                let mut acc = GWElement::zero();
                for i in 0..=*n {
                    acc = acc.add(&GWElement::epsilon_pow(i))?;
                }
                Ok(acc)
            }
            SpaceKind::Gm => GWElement::epsilon().sub(&GWElement::one()),
            SpaceKind::Product(parts) => {
                let mut acc = GWElement::one();
                for p in parts {
                    acc = acc.mul(&p.chi_compact_quadratic()?)?;
                }
                Ok(acc)
            }
            SpaceKind::DisjointUnion(parts) => {
                let mut acc = GWElement::zero();
                for p in parts {
                    acc = acc.add(&p.chi_compact_quadratic()?)?;
                }
                Ok(acc)
            }
            SpaceKind::Complement { whole, closed } => whole
                .chi_compact_quadratic()?
                .sub(&closed.chi_compact_quadratic()?),
        }
    }

    /// The homological quadratic Euler characteristic of a smooth
    /// expression, via the duality scaling `eps^dim * chi_c`. This is a
    /// modeling rule for smooth varieties, pinned by the `Gm` values and
    /// the proper case; it requires the `smooth_dim` annotation.
    pub fn chi_homological_quadratic(&self) -> Result<GWElement> {
        let dim = self.smooth_dim.ok_or(Error::MissingSmoothDim)?;
        GWElement::epsilon_pow(dim).mul(&self.chi_compact_quadratic()?)
    }
}

fn check_positive(n: u32) -> Result<()> {
    if n == 0 {
        Err(Error::MalformedExpression(
            "affine and projective factors need positive dimension".to_string(),
        ))
    } else {
        Ok(())
    }
}
