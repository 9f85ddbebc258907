//! The compactly supported characteristic class of an arrangement
//! complement, computed by localization: the top Chern class of the ambient
//! tangent bundle minus the class of the boundary divisor, with the boundary
//! handled by inclusion-exclusion over smooth closed strata.
//!
//! Two independent routes are implemented on purpose. The direct route sums
//! over all subsets of components; the inductive route peels off the last
//! component with a Mayer-Vietoris recursion. Verifiers compare both against
//! the closed-form CSM computation.

use crate::chow::{BlowDownMap, ChowClass};
use crate::log_csm::DivisorArrangement;
use crate::{Error, Result};

impl DivisorArrangement {
    /// `iota_* c_top(T_{D_B})` for the smooth complete intersection cut out
    /// by the components in `base`: the codimension `n - |B|` part of
    /// `c(T) / prod_{b in B} (1 + D_b)`, multiplied back by `prod D_b`
    /// (adjunction plus the projection formula). `base` must be sorted and
    /// duplicate-free; an empty `base` gives `c_n(T)`.
    fn smooth_stratum_char(&self, base: &[usize]) -> Result<ChowClass> {
        let n = self.ambient().dimension();
        if base.len() as u32 > n {
            return Ok(self.ambient().zero());
        }
        let mut quotient = self.ambient().tangent_chern()?;
        for &b in base {
            let factor = crate::chern::TotalChernClass::new(
                self.ambient().one().add(self.class(b)?)?,
            )?;
            quotient = quotient.whitney_quotient(&factor)?;
        }
        let mut acc = quotient.graded_piece(n - base.len() as u32);
        for &b in base {
            acc = acc.mul(self.class(b)?)?;
        }
        Ok(acc)
    }

    /// `iota_* C` of the union of the components in `remaining`, intersected
    /// with the complete intersection cut out by `base`, computed by the
    /// Mayer-Vietoris recursion on the last component:
    /// `C(B, S + s) = C_smooth(B + s) + C(B, S) - C(B + s, S)`.
    fn boundary_char_recursive(&self, base: &[usize], remaining: &[usize]) -> Result<ChowClass> {
        match remaining.split_last() {
            None => Ok(self.ambient().zero()),
            Some((&last, rest)) => {
                let mut with_last = base.to_vec();
                with_last.push(last);
                with_last.sort_unstable();
                let smooth = self.smooth_stratum_char(&with_last)?;
                let without = self.boundary_char_recursive(base, rest)?;
                let cross = self.boundary_char_recursive(&with_last, rest)?;
                smooth.add(&without)?.sub(&cross)
            }
        }
    }

    /// The compactly supported characteristic class of the complement,
    /// evaluated at this compactification:
    /// `c_n(T) - sum_{I nonempty} (-1)^{|I|+1} iota_{I*} c_top(T_{D_I})`.
    pub fn char_class_localization(&self) -> Result<ChowClass> {
        let m = self.len();
        let n = self.ambient().dimension();
        let mut acc = self.ambient().tangent_chern()?.graded_piece(n);
        for mask in 1u64..(1u64 << m) {
            let indices: Vec<usize> = (0..m).filter(|i| mask & (1 << i) != 0).collect();
            let term = self.smooth_stratum_char(&indices)?;
            let sign = if indices.len() % 2 == 1 { 1 } else { -1 };
            acc = acc.sub(&term.scale(sign)?)?;
        }
        Ok(acc)
    }

    /// Compare the three routes to the zero-dimensional class: the closed
    /// form, the literal expansion, and the localization formula. Inequality
    /// is a reported failure, never an error.
    pub fn verify_main_identity(&self) -> Result<MainIdentityReport> {
        let csm_zero = self.csm_zero()?;
        let expanded = self.csm_zero_expanded()?;
        let localization = self.char_class_localization()?;
        let pass = csm_zero == expanded && expanded == localization;
        Ok(MainIdentityReport {
            csm_zero,
            expanded,
            localization,
            pass,
        })
    }

    /// Re-derive, level by level, the identity expressing the boundary
    /// class through the multi-index expansion. For each prefix of `m'`
    /// components the report records:
    ///
    /// * the claim: `-iota_* C(D_1 ∪ .. ∪ D_{m'})` computed by the
    ///   Mayer-Vietoris recursion equals the expansion over compositions;
    /// * the split of the expansion by whether the last index is zero, each
    ///   half matched against its recursion counterpart;
    /// * agreement of the localization value with the closed-form CSM route.
    ///
    /// An empty arrangement yields an empty, vacuously passing report.
    pub fn verify_induction(&self) -> Result<InductionReport> {
        let n = self.ambient().dimension();
        let tangent_top = self.ambient().tangent_chern()?.graded_piece(n);
        let mut levels = Vec::with_capacity(self.len());
        for level in 1..=self.len() {
            let indices: Vec<usize> = (0..level).collect();
            let boundary = self.boundary_char_recursive(&[], &indices)?;
            let expansion = self.expansion_tail(level, 0)?;
            let claim_pass = boundary.neg()? == expansion;

            let last = level - 1;
            let sum_last_zero = self.expansion_tail(last, 0)?;
            let sum_last_positive = self.expansion_tail(level, 1)?;
            let prev_boundary = self.boundary_char_recursive(&[], &indices[..last])?;
            let smooth_last = self.smooth_stratum_char(&[last])?;
            let cross = self.boundary_char_recursive(&[last], &indices[..last])?;
            let split_pass = sum_last_zero == prev_boundary.neg()?
                && sum_last_positive == smooth_last.sub(&cross)?.neg()?;

            let closed_form = self.prefix(level)?.csm_zero()?;
            let closed_form_pass = tangent_top.sub(&boundary)? == closed_form;

            let pass = claim_pass && split_pass && closed_form_pass;
            levels.push(InductionLevel {
                components_used: level,
                boundary_class: boundary,
                expansion,
                sum_last_zero,
                sum_last_positive,
                claim_pass,
                split_pass,
                closed_form_pass,
                pass,
            });
        }
        let pass = levels.iter().all(|l| l.pass);
        Ok(InductionReport { levels, pass })
    }
}

/// The three routes to the zero-dimensional class of a complement.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MainIdentityReport {
    pub csm_zero: ChowClass,
    pub expanded: ChowClass,
    pub localization: ChowClass,
    pub pass: bool,
}

/// Trace of one induction level.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct InductionLevel {
    /// Number of components in the prefix under test.
    pub components_used: usize,
    /// `iota_* C` of the union of the prefix components.
    pub boundary_class: ChowClass,
    /// The multi-index expansion over the prefix.
    pub expansion: ChowClass,
    /// Expansion terms whose last index is zero.
    pub sum_last_zero: ChowClass,
    /// Expansion terms whose last index is positive.
    pub sum_last_positive: ChowClass,
    pub claim_pass: bool,
    pub split_pass: bool,
    pub closed_form_pass: bool,
    pub pass: bool,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct InductionReport {
    pub levels: Vec<InductionLevel>,
    pub pass: bool,
}

/// Two presentations of the same open variety: an arrangement upstairs, an
/// arrangement downstairs, and the blow-down connecting the ambients (or
/// none, for the identity comparison). That the two complements agree is a
/// recorded user claim; the checker tests its numerical shadow.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CompactificationDiagram {
    upstairs: DivisorArrangement,
    downstairs: DivisorArrangement,
    map: Option<BlowDownMap>,
    same_complement_claimed: bool,
}

impl CompactificationDiagram {
    pub fn new(
        upstairs: DivisorArrangement,
        downstairs: DivisorArrangement,
        map: Option<BlowDownMap>,
        same_complement_claimed: bool,
    ) -> Result<Self> {
        match &map {
            Some(m) => {
                if m.source() != upstairs.ambient() || m.target() != downstairs.ambient() {
                    return Err(Error::AmbientMismatch);
                }
            }
            None => {
                if upstairs.ambient() != downstairs.ambient() {
                    return Err(Error::AmbientMismatch);
                }
            }
        }
        Ok(Self {
            upstairs,
            downstairs,
            map,
            same_complement_claimed,
        })
    }

    pub fn upstairs(&self) -> &DivisorArrangement {
        &self.upstairs
    }

    pub fn downstairs(&self) -> &DivisorArrangement {
        &self.downstairs
    }

    pub fn map(&self) -> Option<&BlowDownMap> {
        self.map.as_ref()
    }

    pub fn same_complement_claimed(&self) -> bool {
        self.same_complement_claimed
    }

    fn push(&self, x: &ChowClass) -> Result<ChowClass> {
        match &self.map {
            Some(m) => m.pushforward(x),
            None => Ok(x.clone()),
        }
    }

    /// Push the upstairs CSM and characteristic classes down and compare
    /// them with the downstairs computation. A mismatch is a reported
    /// failure: either the two arrangements do not present the same open
    /// variety, or the engine is wrong.
    pub fn compat_check(&self) -> Result<CompatReport> {
        let csm_upstairs_pushed = self.push(&self.upstairs.csm_open()?)?;
        let csm_downstairs = self.downstairs.csm_open()?;
        let char_upstairs_pushed = self.push(&self.upstairs.char_class_localization()?)?;
        let char_downstairs = self.downstairs.char_class_localization()?;
        let csm_pass = csm_upstairs_pushed == csm_downstairs;
        let char_pass = char_upstairs_pushed == char_downstairs;
        Ok(CompatReport {
            csm_upstairs_pushed,
            csm_downstairs,
            csm_pass,
            char_upstairs_pushed,
            char_downstairs,
            char_pass,
            pass: csm_pass && char_pass,
        })
    }
}

/// Both class pairs of a compatibility check, kept in full so failures show
/// both sides.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CompatReport {
    pub csm_upstairs_pushed: ChowClass,
    pub csm_downstairs: ChowClass,
    pub csm_pass: bool,
    pub char_upstairs_pushed: ChowClass,
    pub char_downstairs: ChowClass,
    pub char_pass: bool,
    pub pass: bool,
}
