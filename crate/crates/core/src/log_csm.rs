//! CSM classes of complements of simple-normal-crossing arrangements.
//!
//! Everything stays inside the ambient Chow ring: strata classes are pushed
//! forward with the projection formula (multiplication by the defining
//! divisor classes) instead of presenting stratum rings.

use std::sync::Arc;

use crate::chern::TotalChernClass;
use crate::chow::{AmbientSpace, ChowClass};
use crate::{Error, Result};

/// An ordered list of codimension-1 classes asserted to be the components
/// of a simple-normal-crossing divisor.
///
/// The SNC geometry is a user assertion: the engine computes class-level
/// identities that hold formally, and only echoes the flag in reports.
/// Component names must be distinct; classes may repeat (two distinct lines
/// share the class of a line).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DivisorArrangement {
    ambient: Arc<AmbientSpace>,
    components: Vec<(String, ChowClass)>,
    snc_asserted: bool,
}

impl DivisorArrangement {
    /// Empty arrangements (`m = 0`) are legal and mean the ambient itself.
    pub fn new(
        ambient: &Arc<AmbientSpace>,
        components: Vec<(String, ChowClass)>,
        snc_asserted: bool,
    ) -> Result<Self> {
        for (i, (name, class)) in components.iter().enumerate() {
            if components[..i].iter().any(|(n, _)| n == name) {
                return Err(Error::DuplicateLabel(name.clone()));
            }
            if class.ambient() != ambient {
                return Err(Error::AmbientMismatch);
            }
            if !class.is_pure_codim(1) {
                return Err(Error::NotADivisorClass);
            }
        }
        Ok(Self {
            ambient: ambient.clone(),
            components,
            snc_asserted,
        })
    }

    pub fn ambient(&self) -> &Arc<AmbientSpace> {
        &self.ambient
    }

    pub fn components(&self) -> &[(String, ChowClass)] {
        &self.components
    }

    pub fn len(&self) -> usize {
        self.components.len()
    }

    pub fn is_empty(&self) -> bool {
        self.components.is_empty()
    }

    pub fn snc_asserted(&self) -> bool {
        self.snc_asserted
    }

    pub fn class(&self, index: usize) -> Result<&ChowClass> {
        self.components
            .get(index)
            .map(|(_, c)| c)
            .ok_or(Error::IndexOutOfRange {
                index,
                count: self.components.len(),
            })
    }

    /// The arrangement made of the first `count` components.
    pub fn prefix(&self, count: usize) -> Result<Self> {
        if count > self.components.len() {
            return Err(Error::IndexOutOfRange {
                index: count,
                count: self.components.len(),
            });
        }
        Ok(Self {
            ambient: self.ambient.clone(),
            components: self.components[..count].to_vec(),
            snc_asserted: self.snc_asserted,
        })
    }

    /// Total Chern class of the sheaf of differential forms with log poles
    /// along the arrangement: `c(Omega^1) * prod_i c(O_{D_i})`.
    pub fn log_cotangent_chern(&self) -> Result<TotalChernClass> {
        let mut acc = self.ambient.tangent_chern()?.dual()?;
        for (_, class) in &self.components {
            acc = acc.mul(&TotalChernClass::of_structure_sheaf(class)?)?;
        }
        Ok(acc)
    }

    /// The CSM class of the open complement, pushed into the ambient ring:
    /// the total Chern class of the dual log cotangent sheaf. With no
    /// components this is `c(T)` itself.
    pub fn csm_open(&self) -> Result<ChowClass> {
        Ok(self.log_cotangent_chern()?.dual()?.into_class())
    }

    /// The zero-dimensional part of [`Self::csm_open`].
    pub fn csm_zero(&self) -> Result<ChowClass> {
        Ok(self.csm_open()?.top_piece())
    }

    /// The same class as [`Self::csm_zero`], computed by the literal
    /// multi-index expansion
    /// `c_n(T) + sum_{l>=1} sum_{j_1+..+j_m=l} c_{n-l}(T) (-D_1)^{j_1} ... (-D_m)^{j_m}`,
    /// term by term over all compositions.
    pub fn csm_zero_expanded(&self) -> Result<ChowClass> {
        let n = self.ambient.dimension();
        let top = self.ambient.tangent_chern()?.graded_piece(n);
        top.add(&self.expansion_tail(self.len(), 0)?)
    }

    /// The part of the expansion with `l >= 1`, over the first `count`
    /// components, restricted to compositions whose last entry is at least
    /// `last_at_least`.
    pub(crate) fn expansion_tail(&self, count: usize, last_at_least: u32) -> Result<ChowClass> {
        if count > self.components.len() {
            return Err(Error::IndexOutOfRange {
                index: count,
                count: self.components.len(),
            });
        }
        let n = self.ambient.dimension();
        let tangent = self.ambient.tangent_chern()?;
        // (-D_i)^j for j up to the ambient dimension
        let mut neg_powers: Vec<Vec<ChowClass>> = Vec::with_capacity(count);
        for (_, class) in &self.components[..count] {
            let neg = class.neg()?;
            let mut powers = vec![self.ambient.one()];
            for j in 1..=n {
                powers.push(powers[(j - 1) as usize].mul(&neg)?);
            }
            neg_powers.push(powers);
        }
        let mut acc = self.ambient.zero();
        for l in 1..=n {
            for comp in compositions(l, count) {
                if count > 0 && comp[count - 1] < last_at_least {
                    continue;
                }
                let mut term = tangent.graded_piece(n - l);
                for (i, &j) in comp.iter().enumerate() {
                    if j > 0 {
                        term = term.mul(&neg_powers[i][j as usize])?;
                    }
                }
                acc = acc.add(&term)?;
            }
        }
        Ok(acc)
    }

    /// Ambient-ring representative of the CSM class of the locally closed
    /// stratum cut out by the components in `indices`:
    /// `[c(T) / prod_{i=1..m} (1 + D_i)] * prod_{i in indices} D_i`.
    pub fn stratum_csm_pushed(&self, indices: &[usize]) -> Result<ChowClass> {
        let mut sorted: Vec<usize> = indices.to_vec();
        sorted.sort_unstable();
        sorted.dedup();
        let mut base = self.ambient.tangent_chern()?;
        for (_, class) in &self.components {
            let factor = TotalChernClass::new(self.ambient.one().add(class)?)?;
            base = base.whitney_quotient(&factor)?;
        }
        let mut acc = base.into_class();
        for &i in &sorted {
            acc = acc.mul(self.class(i)?)?;
        }
        Ok(acc)
    }

    /// Check that the stratum classes sum to the Chern class of the ambient
    /// tangent bundle over all subsets of components. Failure signals an
    /// engine defect, not bad input, so it is a report outcome.
    pub fn additivity_check(&self) -> Result<AdditivityReport> {
        let m = self.len();
        let mut sum = self.ambient.zero();
        for mask in 0u64..(1u64 << m) {
            let indices: Vec<usize> = (0..m).filter(|i| mask & (1 << i) != 0).collect();
            sum = sum.add(&self.stratum_csm_pushed(&indices)?)?;
        }
        let tangent_total = self.ambient.tangent_chern()?.into_class();
        let pass = sum == tangent_total;
        Ok(AdditivityReport {
            stratum_sum: sum,
            tangent_total,
            pass,
        })
    }
}

/// Both sides of the stratified-additivity identity.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AdditivityReport {
    pub stratum_sum: ChowClass,
    pub tangent_total: ChowClass,
    pub pass: bool,
}

/// All vectors of `parts` nonnegative integers summing to `total`, in a
/// fixed deterministic order.
pub(crate) fn compositions(total: u32, parts: usize) -> Vec<Vec<u32>> {
    if parts == 0 {
        return if total == 0 { vec![vec![]] } else { vec![] };
    }
    let mut out = Vec::new();
    for first in 0..=total {
        for mut rest in compositions(total - first, parts - 1) {
            rest.insert(0, first);
            out.push(rest);
        }
    }
    out
}
