//! Total Chern class arithmetic on truncated unit series: Whitney products
//! and quotients, duals, tangent classes, and structure-sheaf classes of
//! divisors.

use std::sync::Arc;

use crate::chow::{AmbientSpace, ChowClass};
use crate::{Error, Result};

/// A Chow class whose degree-0 component is 1. Unit series are invertible
/// in the truncated ring, which is what makes Whitney quotients exact.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TotalChernClass {
    value: ChowClass,
}

impl TotalChernClass {
    /// Wrap a class, checking the unit-series invariant.
    pub fn new(value: ChowClass) -> Result<Self> {
        if value.graded_piece(0) != value.ambient().one() {
            return Err(Error::NotAUnitSeries);
        }
        Ok(Self { value })
    }

    /// The trivial class `1`.
    pub fn one(ambient: &Arc<AmbientSpace>) -> Self {
        Self {
            value: ambient.one(),
        }
    }

    pub fn value(&self) -> &ChowClass {
        &self.value
    }

    pub fn into_class(self) -> ChowClass {
        self.value
    }

    pub fn graded_piece(&self, codim: u32) -> ChowClass {
        self.value.graded_piece(codim)
    }

    /// Whitney product.
    pub fn mul(&self, other: &Self) -> Result<Self> {
        Self::new(self.value.mul(&other.value)?)
    }

    /// Multiply the codimension-s component by `(-1)^s` for every s — the
    /// total Chern class of the dual bundle.
    pub fn dual(&self) -> Result<Self> {
        let n = self.value.ambient().dimension();
        let mut acc = self.value.ambient().zero();
        for s in 0..=n {
            let piece = self.value.graded_piece(s);
            let signed = if s % 2 == 1 { piece.neg()? } else { piece };
            acc = acc.add(&signed)?;
        }
        Self::new(acc)
    }

    /// Total Chern class of the structure sheaf of a divisor of class `d`:
    /// the geometric series `1 + d + d^2 + ...` truncated at the ambient
    /// dimension, i.e. the inverse of `1 - d`.
    pub fn of_structure_sheaf(divisor: &ChowClass) -> Result<Self> {
        if !divisor.is_pure_codim(1) {
            return Err(Error::NotADivisorClass);
        }
        let n = divisor.ambient().dimension();
        let mut acc = divisor.ambient().one();
        let mut power = divisor.ambient().one();
        for _ in 1..=n {
            power = power.mul(divisor)?;
            acc = acc.add(&power)?;
        }
        Self::new(acc)
    }

    /// The unique unit series `q` with `q * den = self` in the truncated
    /// ring, computed degree by degree. Exact: the leading term of `den`
    /// is 1, so no division of coefficients ever happens.
    pub fn whitney_quotient(&self, den: &Self) -> Result<Self> {
        self.value.check_same_ambient(&den.value)?;
        let ambient = self.value.ambient();
        let n = ambient.dimension();
        let mut pieces: Vec<ChowClass> = Vec::with_capacity(n as usize + 1);
        pieces.push(ambient.one());
        for s in 1..=n {
            let mut val = self.value.graded_piece(s);
            for t in 1..=s {
                let term = den.value.graded_piece(t).mul(&pieces[(s - t) as usize])?;
                val = val.sub(&term)?;
            }
            pieces.push(val);
        }
        let mut acc = ambient.zero();
        for piece in &pieces {
            acc = acc.add(piece)?;
        }
        Self::new(acc)
    }
}

impl AmbientSpace {
    /// Total Chern class of the tangent bundle: `prod (1 + h_i)^{n_i + 1}`
    /// for a product of projective spaces, `1 - K + c2 * pt` for a surface.
    pub fn tangent_chern(self: &Arc<Self>) -> Result<TotalChernClass> {
        TotalChernClass::new(self.tangent_class()?)
    }
}
