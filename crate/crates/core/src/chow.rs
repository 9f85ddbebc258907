//! Exact graded arithmetic in two families of finitely presented Chow rings:
//! products of projective spaces `Z[h_1..h_k]/(h_i^{n_i+1})` and surface
//! Picard lattices with a canonical class and a `c_2` degree.
//!
//! Classes are immutable; binary operations check that both operands live in
//! the same ambient ring and use checked 64-bit arithmetic.

use std::fmt;
use std::sync::Arc;

use crate::{Error, Result};

/// Intersection data for a smooth projective surface: a basis of divisor
/// classes with its symmetric pairing matrix (values are multiples of the
/// point class), the canonical class in that basis, and the degree of `c_2`
/// of the tangent bundle.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SurfaceLattice {
    labels: Vec<String>,
    pairing: Vec<Vec<i64>>,
    canonical: Vec<i64>,
    c2_degree: i64,
}

impl SurfaceLattice {
    pub fn basis_labels(&self) -> &[String] {
        &self.labels
    }

    pub fn intersection_matrix(&self) -> &[Vec<i64>] {
        &self.pairing
    }

    pub fn canonical_class(&self) -> &[i64] {
        &self.canonical
    }

    pub fn c2_degree(&self) -> i64 {
        self.c2_degree
    }

    /// Number of tracked divisor classes.
    pub fn rank(&self) -> usize {
        self.labels.len()
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
enum AmbientRepr {
    Product { factors: Vec<u32> },
    Surface(SurfaceLattice),
}

/// A finitely presented Chow ring: either a product of projective spaces or
/// a surface Picard lattice.
///
/// Ambients are shared behind [`Arc`]; two ambients compare equal when their
/// presentations agree, so independently constructed copies of the same
/// space are interchangeable.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AmbientSpace {
    repr: AmbientRepr,
}

impl AmbientSpace {
    /// The Chow ring of `P^{n_1} x ... x P^{n_k}`.
    pub fn product(factors: &[u32]) -> Result<Arc<Self>> {
        if factors.is_empty() {
            return Err(Error::EmptyFactors);
        }
        if factors.contains(&0) {
            return Err(Error::NonPositiveDimension);
        }
        Ok(Arc::new(Self {
            repr: AmbientRepr::Product {
                factors: factors.to_vec(),
            },
        }))
    }

    /// A surface lattice from explicit intersection data.
    pub fn surface(
        labels: Vec<String>,
        intersection_matrix: Vec<Vec<i64>>,
        canonical_class: Vec<i64>,
        c2_degree: i64,
    ) -> Result<Arc<Self>> {
        let rank = labels.len();
        for (i, l) in labels.iter().enumerate() {
            if labels[..i].contains(l) {
                return Err(Error::DuplicateLabel(l.clone()));
            }
        }
        if intersection_matrix.len() != rank
            || intersection_matrix.iter().any(|row| row.len() != rank)
            || canonical_class.len() != rank
        {
            return Err(Error::LengthMismatch);
        }
        for i in 0..rank {
            for j in 0..i {
                if intersection_matrix[i][j] != intersection_matrix[j][i] {
                    return Err(Error::AsymmetricMatrix);
                }
            }
        }
        Ok(Arc::new(Self {
            repr: AmbientRepr::Surface(SurfaceLattice {
                labels,
                pairing: intersection_matrix,
                canonical: canonical_class,
                c2_degree,
            }),
        }))
    }

    pub fn dimension(&self) -> u32 {
        match &self.repr {
            AmbientRepr::Product { factors } => factors.iter().sum(),
            AmbientRepr::Surface(_) => 2,
        }
    }

    pub fn is_surface(&self) -> bool {
        matches!(self.repr, AmbientRepr::Surface(_))
    }

    pub fn is_product(&self) -> bool {
        matches!(self.repr, AmbientRepr::Product { .. })
    }

    /// Factor dimensions `(n_1, ..., n_k)` of a product ambient.
    pub fn factors(&self) -> Option<&[u32]> {
        match &self.repr {
            AmbientRepr::Product { factors } => Some(factors),
            AmbientRepr::Surface(_) => None,
        }
    }

    pub fn surface_lattice(&self) -> Option<&SurfaceLattice> {
        match &self.repr {
            AmbientRepr::Product { .. } => None,
            AmbientRepr::Surface(lat) => Some(lat),
        }
    }

    fn monomial_count(&self) -> usize {
        match &self.repr {
            AmbientRepr::Product { factors } => {
                factors.iter().map(|&n| n as usize + 1).product()
            }
            AmbientRepr::Surface(lat) => lat.rank() + 2,
        }
    }

    // Dense product storage is indexed lexicographically with the first
    // factor most significant.
    fn index_of(&self, exps: &[u32]) -> usize {
        let factors = self.factors().expect("product ambient");
        let mut idx = 0usize;
        for (e, &n) in exps.iter().zip(factors) {
            idx = idx * (n as usize + 1) + *e as usize;
        }
        idx
    }

    fn exps_of(&self, mut idx: usize) -> Vec<u32> {
        let factors = self.factors().expect("product ambient");
        let mut exps = vec![0u32; factors.len()];
        for i in (0..factors.len()).rev() {
            let base = factors[i] as usize + 1;
            exps[i] = (idx % base) as u32;
            idx /= base;
        }
        exps
    }

    fn codim_of_index(&self, idx: usize) -> u32 {
        self.exps_of(idx).iter().sum()
    }

    fn monomial_label(&self, exps: &[u32]) -> String {
        let factors = self.factors().expect("product ambient");
        let single = factors.len() == 1;
        let mut parts = Vec::new();
        for (i, &e) in exps.iter().enumerate() {
            if e == 0 {
                continue;
            }
            let var = if single {
                "h".to_string()
            } else {
                format!("h{}", i + 1)
            };
            if e == 1 {
                parts.push(var);
            } else {
                parts.push(format!("{var}^{e}"));
            }
        }
        if parts.is_empty() {
            "1".to_string()
        } else {
            parts.join("*")
        }
    }

    /// The zero class.
    pub fn zero(self: &Arc<Self>) -> ChowClass {
        let repr = match &self.repr {
            AmbientRepr::Product { .. } => ClassRepr::Product(vec![0; self.monomial_count()]),
            AmbientRepr::Surface(lat) => ClassRepr::Surface {
                a0: 0,
                a1: vec![0; lat.rank()],
                a2: 0,
            },
        };
        ChowClass {
            ambient: self.clone(),
            repr,
        }
    }

    /// The fundamental class, i.e. the ring unit.
    pub fn one(self: &Arc<Self>) -> ChowClass {
        let mut c = self.zero();
        match &mut c.repr {
            ClassRepr::Product(v) => v[0] = 1,
            ClassRepr::Surface { a0, .. } => *a0 = 1,
        }
        c
    }

    /// The class of a point.
    pub fn point_class(self: &Arc<Self>) -> ChowClass {
        let mut c = self.zero();
        match &mut c.repr {
            ClassRepr::Product(v) => {
                let last = v.len() - 1;
                v[last] = 1;
            }
            ClassRepr::Surface { a2, .. } => *a2 = 1,
        }
        c
    }

    /// Hyperplane class of the `factor`-th projective factor.
    pub fn hyperplane(self: &Arc<Self>, factor: usize) -> Result<ChowClass> {
        let factors = self.factors().ok_or(Error::NotAProduct)?;
        if factor >= factors.len() {
            return Err(Error::IndexOutOfRange {
                index: factor,
                count: factors.len(),
            });
        }
        let mut exps = vec![0u32; factors.len()];
        exps[factor] = 1;
        self.monomial(&exps, 1)
    }

    /// The class `coeff * h_1^{e_1} ... h_k^{e_k}`; exponents beyond the
    /// factor dimension reduce to zero by the ring relations.
    pub fn monomial(self: &Arc<Self>, exps: &[u32], coeff: i64) -> Result<ChowClass> {
        let factors = self.factors().ok_or(Error::NotAProduct)?;
        if exps.len() != factors.len() {
            return Err(Error::LengthMismatch);
        }
        let mut c = self.zero();
        if exps.iter().zip(factors).any(|(&e, &n)| e > n) {
            return Ok(c);
        }
        let idx = self.index_of(exps);
        match &mut c.repr {
            ClassRepr::Product(v) => v[idx] = coeff,
            ClassRepr::Surface { .. } => unreachable!(),
        }
        Ok(c)
    }

    /// The divisor class `d_1 h_1 + ... + d_k h_k` on a product ambient.
    pub fn multidegree_divisor(self: &Arc<Self>, degrees: &[i64]) -> Result<ChowClass> {
        let factors = self.factors().ok_or(Error::NotAProduct)?;
        if degrees.len() != factors.len() {
            return Err(Error::LengthMismatch);
        }
        let mut acc = self.zero();
        for (i, &d) in degrees.iter().enumerate() {
            let mut exps = vec![0u32; factors.len()];
            exps[i] = 1;
            acc = acc.add(&self.monomial(&exps, d)?)?;
        }
        Ok(acc)
    }

    /// A divisor class from coordinates in the surface basis.
    pub fn surface_divisor(self: &Arc<Self>, coords: &[i64]) -> Result<ChowClass> {
        self.surface_class(0, coords, 0)
    }

    /// A full surface class `a0 * [X] + a1 . basis + a2 * [pt]`.
    pub fn surface_class(self: &Arc<Self>, a0: i64, a1: &[i64], a2: i64) -> Result<ChowClass> {
        let lat = self.surface_lattice().ok_or(Error::NotASurface)?;
        if a1.len() != lat.rank() {
            return Err(Error::LengthMismatch);
        }
        Ok(ChowClass {
            ambient: self.clone(),
            repr: ClassRepr::Surface {
                a0,
                a1: a1.to_vec(),
                a2,
            },
        })
    }

    /// Total Chern class of the tangent bundle as a raw class.
    pub(crate) fn tangent_class(self: &Arc<Self>) -> Result<ChowClass> {
        match &self.repr {
            AmbientRepr::Product { factors } => {
                let factors = factors.clone();
                let mut acc = self.one();
                for (i, &n) in factors.iter().enumerate() {
                    let f = self.one().add(&self.hyperplane(i)?)?;
                    acc = acc.mul(&f.pow(n + 1)?)?;
                }
                Ok(acc)
            }
            AmbientRepr::Surface(lat) => {
                let minus_k: Vec<i64> = lat
                    .canonical
                    .iter()
                    .map(|&k| k.checked_neg().ok_or(Error::Overflow))
                    .collect::<Result<_>>()?;
                self.surface_class(1, &minus_k, lat.c2_degree)
            }
        }
    }

    /// Reinterpret a two-dimensional ambient as a surface lattice. Surfaces
    /// pass through unchanged; products of total dimension 2 get the basis
    /// of factor hyperplane classes.
    pub fn to_surface(self: &Arc<Self>) -> Result<Arc<Self>> {
        match &self.repr {
            AmbientRepr::Surface(_) => Ok(self.clone()),
            AmbientRepr::Product { factors } => {
                if self.dimension() != 2 {
                    return Err(Error::NotASurface);
                }
                let k = factors.len();
                let labels: Vec<String> = if k == 1 {
                    vec!["h".to_string()]
                } else {
                    (1..=k).map(|i| format!("h{i}")).collect()
                };
                let hyp: Vec<ChowClass> = (0..k)
                    .map(|i| self.hyperplane(i))
                    .collect::<Result<_>>()?;
                let mut pairing = vec![vec![0i64; k]; k];
                for i in 0..k {
                    for j in 0..k {
                        pairing[i][j] = hyp[i].mul(&hyp[j])?.degree();
                    }
                }
                let canonical: Vec<i64> = factors.iter().map(|&n| -(n as i64) - 1).collect();
                let c2 = self.tangent_class()?.graded_piece(2).degree();
                AmbientSpace::surface(labels, pairing, canonical, c2)
            }
        }
    }

    /// Blow up a surface at a point, extending the lattice by an exceptional
    /// class `E` with `E^2 = -1` orthogonal to the old basis, `K' = K + E`
    /// and `c_2' = c_2 + 1`. Returns the new surface and the blow-down map.
    pub fn blow_up(self: &Arc<Self>, label: &str) -> Result<(Arc<Self>, BlowDownMap)> {
        let lat = self.surface_lattice().ok_or(Error::NotASurface)?;
        if lat.labels.iter().any(|l| l == label) {
            return Err(Error::DuplicateLabel(label.to_string()));
        }
        let rank = lat.rank();
        let mut labels = lat.labels.clone();
        labels.push(label.to_string());
        let mut pairing: Vec<Vec<i64>> = lat
            .pairing
            .iter()
            .map(|row| {
                let mut r = row.clone();
                r.push(0);
                r
            })
            .collect();
        let mut last = vec![0i64; rank + 1];
        last[rank] = -1;
        pairing.push(last);
        let mut canonical = lat.canonical.clone();
        canonical.push(1);
        let c2 = lat.c2_degree.checked_add(1).ok_or(Error::Overflow)?;
        let source = AmbientSpace::surface(labels, pairing, canonical, c2)?;
        let map = BlowDownMap {
            source: source.clone(),
            target: self.clone(),
            exceptional_index: rank,
        };
        Ok((source, map))
    }
}

impl fmt::Display for AmbientSpace {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match &self.repr {
            AmbientRepr::Product { factors } => {
                let dims: Vec<String> = factors.iter().map(|n| n.to_string()).collect();
                write!(f, "product [{}]", dims.join(","))
            }
            AmbientRepr::Surface(lat) => write!(f, "surface [{}]", lat.labels.join(",")),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
enum ClassRepr {
    Product(Vec<i64>),
    Surface { a0: i64, a1: Vec<i64>, a2: i64 },
}

/// A graded element of an ambient Chow ring with exact integer coefficients.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ChowClass {
    ambient: Arc<AmbientSpace>,
    repr: ClassRepr,
}

fn checked_add(a: i64, b: i64) -> Result<i64> {
    a.checked_add(b).ok_or(Error::Overflow)
}

fn checked_mul(a: i64, b: i64) -> Result<i64> {
    a.checked_mul(b).ok_or(Error::Overflow)
}

impl ChowClass {
    pub fn ambient(&self) -> &Arc<AmbientSpace> {
        &self.ambient
    }

    pub(crate) fn check_same_ambient(&self, other: &ChowClass) -> Result<()> {
        if self.ambient == other.ambient {
            Ok(())
        } else {
            Err(Error::AmbientMismatch)
        }
    }

    pub fn is_zero(&self) -> bool {
        match &self.repr {
            ClassRepr::Product(v) => v.iter().all(|&c| c == 0),
            ClassRepr::Surface { a0, a1, a2 } => {
                *a0 == 0 && *a2 == 0 && a1.iter().all(|&c| c == 0)
            }
        }
    }

    /// Nonzero and supported purely in codimension `codim`.
    pub fn is_pure_codim(&self, codim: u32) -> bool {
        !self.is_zero() && self.graded_piece(codim) == *self
    }

    /// Coefficientwise sum.
    pub fn add(&self, other: &ChowClass) -> Result<ChowClass> {
        self.check_same_ambient(other)?;
        let repr = match (&self.repr, &other.repr) {
            (ClassRepr::Product(a), ClassRepr::Product(b)) => ClassRepr::Product(
                a.iter()
                    .zip(b)
                    .map(|(&x, &y)| checked_add(x, y))
                    .collect::<Result<_>>()?,
            ),
            (
                ClassRepr::Surface { a0, a1, a2 },
                ClassRepr::Surface {
                    a0: b0,
                    a1: b1,
                    a2: b2,
                },
            ) => ClassRepr::Surface {
                a0: checked_add(*a0, *b0)?,
                a1: a1
                    .iter()
                    .zip(b1)
                    .map(|(&x, &y)| checked_add(x, y))
                    .collect::<Result<_>>()?,
                a2: checked_add(*a2, *b2)?,
            },
            _ => unreachable!("equal ambients share a representation"),
        };
        Ok(ChowClass {
            ambient: self.ambient.clone(),
            repr,
        })
    }

    pub fn neg(&self) -> Result<ChowClass> {
        self.scale(-1)
    }

    pub fn sub(&self, other: &ChowClass) -> Result<ChowClass> {
        self.add(&other.neg()?)
    }

    /// Multiply every coefficient by `k`.
    pub fn scale(&self, k: i64) -> Result<ChowClass> {
        let repr = match &self.repr {
            ClassRepr::Product(v) => ClassRepr::Product(
                v.iter().map(|&c| checked_mul(c, k)).collect::<Result<_>>()?,
            ),
            ClassRepr::Surface { a0, a1, a2 } => ClassRepr::Surface {
                a0: checked_mul(*a0, k)?,
                a1: a1
                    .iter()
                    .map(|&c| checked_mul(c, k))
                    .collect::<Result<_>>()?,
                a2: checked_mul(*a2, k)?,
            },
        };
        Ok(ChowClass {
            ambient: self.ambient.clone(),
            repr,
        })
    }

    /// Intersection product. Product ambients reduce by `h_i^{n_i+1} = 0`;
    /// surfaces route divisor pairs through the intersection matrix, and
    /// anything of codimension above the dimension vanishes.
    pub fn mul(&self, other: &ChowClass) -> Result<ChowClass> {
        self.check_same_ambient(other)?;
        match (&self.repr, &other.repr) {
            (ClassRepr::Product(a), ClassRepr::Product(b)) => {
                let factors = self.ambient.factors().expect("product ambient").to_vec();
                let mut out = vec![0i64; a.len()];
                for (ia, &ca) in a.iter().enumerate() {
                    if ca == 0 {
                        continue;
                    }
                    let ea = self.ambient.exps_of(ia);
                    for (ib, &cb) in b.iter().enumerate() {
                        if cb == 0 {
                            continue;
                        }
                        let eb = self.ambient.exps_of(ib);
                        let mut exps = vec![0u32; factors.len()];
                        let mut vanishes = false;
                        for i in 0..factors.len() {
                            exps[i] = ea[i] + eb[i];
                            if exps[i] > factors[i] {
                                vanishes = true;
                                break;
                            }
                        }
                        if vanishes {
                            continue;
                        }
                        let idx = self.ambient.index_of(&exps);
                        out[idx] = checked_add(out[idx], checked_mul(ca, cb)?)?;
                    }
                }
                Ok(ChowClass {
                    ambient: self.ambient.clone(),
                    repr: ClassRepr::Product(out),
                })
            }
            (
                ClassRepr::Surface { a0, a1, a2 },
                ClassRepr::Surface {
                    a0: b0,
                    a1: b1,
                    a2: b2,
                },
            ) => {
                let lat = self.ambient.surface_lattice().expect("surface ambient");
                let c0 = checked_mul(*a0, *b0)?;
                let mut c1 = vec![0i64; lat.rank()];
                for i in 0..lat.rank() {
                    c1[i] = checked_add(checked_mul(*a0, b1[i])?, checked_mul(*b0, a1[i])?)?;
                }
                let mut c2 = checked_add(checked_mul(*a0, *b2)?, checked_mul(*b0, *a2)?)?;
                for i in 0..lat.rank() {
                    if a1[i] == 0 {
                        continue;
                    }
                    for j in 0..lat.rank() {
                        let term = checked_mul(checked_mul(a1[i], lat.pairing[i][j])?, b1[j])?;
                        c2 = checked_add(c2, term)?;
                    }
                }
                Ok(ChowClass {
                    ambient: self.ambient.clone(),
                    repr: ClassRepr::Surface {
                        a0: c0,
                        a1: c1,
                        a2: c2,
                    },
                })
            }
            _ => unreachable!("equal ambients share a representation"),
        }
    }

    pub fn pow(&self, exp: u32) -> Result<ChowClass> {
        let mut acc = self.ambient.one();
        for _ in 0..exp {
            acc = acc.mul(self)?;
        }
        Ok(acc)
    }

    /// Pushforward to the point: the coefficient of the point class. Lower
    /// codimension components are ignored by contract.
    pub fn degree(&self) -> i64 {
        match &self.repr {
            ClassRepr::Product(v) => *v.last().expect("nonempty monomial basis"),
            ClassRepr::Surface { a2, .. } => *a2,
        }
    }

    /// The codimension-`codim` component, as a full class.
    pub fn graded_piece(&self, codim: u32) -> ChowClass {
        let repr = match &self.repr {
            ClassRepr::Product(v) => ClassRepr::Product(
                v.iter()
                    .enumerate()
                    .map(|(i, &c)| {
                        if self.ambient.codim_of_index(i) == codim {
                            c
                        } else {
                            0
                        }
                    })
                    .collect(),
            ),
            ClassRepr::Surface { a0, a1, a2 } => ClassRepr::Surface {
                a0: if codim == 0 { *a0 } else { 0 },
                a1: if codim == 1 {
                    a1.clone()
                } else {
                    vec![0; a1.len()]
                },
                a2: if codim == 2 { *a2 } else { 0 },
            },
        };
        ChowClass {
            ambient: self.ambient.clone(),
            repr,
        }
    }

    /// The component in the top codimension (the ambient dimension).
    pub fn top_piece(&self) -> ChowClass {
        self.graded_piece(self.ambient.dimension())
    }

    /// Nonzero terms as `(monomial label, coefficient)` pairs in the
    /// canonical lexicographic order.
    pub fn terms(&self) -> Vec<(String, i64)> {
        match &self.repr {
            ClassRepr::Product(v) => v
                .iter()
                .enumerate()
                .filter(|(_, &c)| c != 0)
                .map(|(i, &c)| (self.ambient.monomial_label(&self.ambient.exps_of(i)), c))
                .collect(),
            ClassRepr::Surface { a0, a1, a2 } => {
                let lat = self.ambient.surface_lattice().expect("surface ambient");
                let mut rows = Vec::new();
                if *a0 != 0 {
                    rows.push(("1".to_string(), *a0));
                }
                for (label, &c) in lat.labels.iter().zip(a1) {
                    if c != 0 {
                        rows.push((label.clone(), c));
                    }
                }
                if *a2 != 0 {
                    rows.push(("pt".to_string(), *a2));
                }
                rows
            }
        }
    }
}

impl fmt::Display for ChowClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let terms = self.terms();
        if terms.is_empty() {
            return write!(f, "0");
        }
        for (i, (label, coeff)) in terms.iter().enumerate() {
            let mag = coeff.unsigned_abs();
            if i == 0 {
                if *coeff < 0 {
                    write!(f, "-")?;
                }
            } else if *coeff < 0 {
                write!(f, " - ")?;
            } else {
                write!(f, " + ")?;
            }
            if label == "1" {
                write!(f, "{mag}")?;
            } else if mag == 1 {
                write!(f, "{label}")?;
            } else {
                write!(f, "{mag}*{label}")?;
            }
        }
        Ok(())
    }
}

/// The proper pushforward along the contraction of one exceptional curve:
/// drops the exceptional coordinate and keeps the fundamental and point
/// components.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BlowDownMap {
    source: Arc<AmbientSpace>,
    target: Arc<AmbientSpace>,
    exceptional_index: usize,
}

impl BlowDownMap {
    pub fn source(&self) -> &Arc<AmbientSpace> {
        &self.source
    }

    pub fn target(&self) -> &Arc<AmbientSpace> {
        &self.target
    }

    pub fn exceptional_label(&self) -> &str {
        &self.source.surface_lattice().expect("surface source").labels[self.exceptional_index]
    }

    pub fn pushforward(&self, x: &ChowClass) -> Result<ChowClass> {
        if x.ambient() != &self.source {
            return Err(Error::AmbientMismatch);
        }
        match &x.repr {
            ClassRepr::Surface { a0, a1, a2 } => {
                let mut v = a1.clone();
                v.remove(self.exceptional_index);
                self.target.surface_class(*a0, &v, *a2)
            }
            ClassRepr::Product(_) => unreachable!("blow-down sources are surfaces"),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p2() -> Arc<AmbientSpace> {
        AmbientSpace::product(&[2]).unwrap()
    }

    fn p1xp1() -> Arc<AmbientSpace> {
        AmbientSpace::product(&[1, 1]).unwrap()
    }

    fn bl_p2() -> (Arc<AmbientSpace>, BlowDownMap) {
        p2().to_surface().unwrap().blow_up("E").unwrap()
    }

    #[test]
    fn product_presentations() {
        let p2 = p2();
        assert_eq!(p2.dimension(), 2);
        assert_eq!(p2.monomial_count(), 3);

        let q = p1xp1();
        assert_eq!(q.dimension(), 2);
        assert_eq!(q.monomial_count(), 4);
        // h_i^2 = 0 in P^1 x P^1
        let h1 = q.hyperplane(0).unwrap();
        assert!(h1.mul(&h1).unwrap().is_zero());
    }

    #[test]
    fn degenerate_products_rejected() {
        assert_eq!(AmbientSpace::product(&[]), Err(Error::EmptyFactors));
        assert_eq!(AmbientSpace::product(&[0]), Err(Error::NonPositiveDimension));
    }

    #[test]
    fn add_examples() {
        let p2 = p2();
        let h = p2.hyperplane(0).unwrap();
        let x = p2.one().add(&h).unwrap();
        let y = h.scale(2).unwrap().add(&p2.monomial(&[2], 1).unwrap()).unwrap();
        let expected = p2
            .one()
            .add(&h.scale(3).unwrap())
            .unwrap()
            .add(&p2.monomial(&[2], 1).unwrap())
            .unwrap();
        assert_eq!(x.add(&y).unwrap(), expected);
        assert_eq!(x.add(&p2.zero()).unwrap(), x);
    }

    #[test]
    fn add_rejects_foreign_ambient() {
        let p2 = p2();
        let p1 = AmbientSpace::product(&[1]).unwrap();
        assert_eq!(
            p2.one().add(&p1.one()),
            Err(Error::AmbientMismatch)
        );
    }

    #[test]
    fn mul_examples() {
        let p2 = p2();
        let h = p2.hyperplane(0).unwrap();
        let x = p2.one().add(&h).unwrap();
        let y = p2.one().add(&h.scale(2).unwrap()).unwrap();
        let expected = p2
            .one()
            .add(&h.scale(3).unwrap())
            .unwrap()
            .add(&p2.monomial(&[2], 2).unwrap())
            .unwrap();
        assert_eq!(x.mul(&y).unwrap(), expected);

        let q = p1xp1();
        let d = q.multidegree_divisor(&[1, 1]).unwrap();
        assert_eq!(d.pow(2).unwrap(), q.monomial(&[1, 1], 2).unwrap());
    }

    #[test]
    fn blowup_lattice_multiplication() {
        let (bl, _) = bl_p2();
        // (H - E) . E = pt, because H.E = 0 and E^2 = -pt.
        let hme = bl.surface_divisor(&[1, -1]).unwrap();
        let e = bl.surface_divisor(&[0, 1]).unwrap();
        assert_eq!(hme.mul(&e).unwrap(), bl.point_class());
    }

    #[test]
    fn degree_examples() {
        let p2 = p2();
        // chi(P^2) = 1 + 1 + 1 from the cell decomposition.
        let c = p2
            .one()
            .add(&p2.hyperplane(0).unwrap().scale(3).unwrap())
            .unwrap()
            .add(&p2.monomial(&[2], 3).unwrap())
            .unwrap();
        assert_eq!(c.degree(), 3);

        let q = p1xp1();
        let d = q.multidegree_divisor(&[2, 3]).unwrap();
        assert_eq!(d.pow(2).unwrap().degree(), 12);

        assert_eq!(p2.one().degree(), 0);
    }

    #[test]
    fn p2_surface_form() {
        let s = p2().to_surface().unwrap();
        let lat = s.surface_lattice().unwrap();
        assert_eq!(lat.basis_labels(), ["h".to_string()]);
        assert_eq!(lat.intersection_matrix(), [vec![1]]);
        assert_eq!(lat.canonical_class(), [-3]);
        assert_eq!(lat.c2_degree(), 3);
    }

    #[test]
    fn blow_up_p2() {
        let (bl, map) = bl_p2();
        let lat = bl.surface_lattice().unwrap();
        assert_eq!(lat.basis_labels(), ["h".to_string(), "E".to_string()]);
        assert_eq!(lat.intersection_matrix(), [vec![1, 0], vec![0, -1]]);
        assert_eq!(lat.canonical_class(), [-3, 1]);
        assert_eq!(lat.c2_degree(), 4);
        assert_eq!(map.exceptional_label(), "E");
    }

    #[test]
    fn blow_up_duplicate_label() {
        let (bl, _) = bl_p2();
        assert_eq!(
            bl.blow_up("E").map(|_| ()),
            Err(Error::DuplicateLabel("E".to_string()))
        );
    }

    #[test]
    fn blow_up_p1xp1() {
        let s = p1xp1().to_surface().unwrap();
        let (bl, _) = s.blow_up("E").unwrap();
        let lat = bl.surface_lattice().unwrap();
        assert_eq!(
            lat.intersection_matrix(),
            [vec![0, 1, 0], vec![1, 0, 0], vec![0, 0, -1]]
        );
        assert_eq!(lat.canonical_class(), [-2, -2, 1]);
        assert_eq!(lat.c2_degree(), 5);
    }

    #[test]
    fn blow_up_requires_surface() {
        let p3 = AmbientSpace::product(&[3]).unwrap();
        assert_eq!(p3.to_surface().map(|_| ()), Err(Error::NotASurface));
        assert_eq!(p3.blow_up("E").map(|_| ()), Err(Error::NotASurface));
    }

    #[test]
    fn pushforward_examples() {
        let (bl, map) = bl_p2();
        let x = bl.surface_class(1, &[2, -1], 1).unwrap();
        let down = map.pushforward(&x).unwrap();
        assert_eq!(down, map.target().surface_class(1, &[2], 1).unwrap());

        let e = bl.surface_divisor(&[0, 1]).unwrap();
        assert!(map.pushforward(&e).unwrap().is_zero());

        let pt = bl.point_class();
        assert_eq!(map.pushforward(&pt).unwrap(), map.target().point_class());
    }

    #[test]
    fn pushforward_rejects_wrong_source() {
        let (_, map) = bl_p2();
        let other = p2().to_surface().unwrap();
        assert_eq!(
            map.pushforward(&other.one()),
            Err(Error::AmbientMismatch)
        );
    }

    #[test]
    fn overflow_is_detected() {
        let p2 = p2();
        let big = p2.monomial(&[0], i64::MAX).unwrap();
        assert_eq!(big.add(&big), Err(Error::Overflow));
        assert_eq!(big.mul(&big), Err(Error::Overflow));
    }

    #[test]
    fn monomial_reduces_by_relations() {
        let p2 = p2();
        assert!(p2.monomial(&[3], 5).unwrap().is_zero());
        assert_eq!(p2.monomial(&[1, 1], 1), Err(Error::LengthMismatch));
    }

    #[test]
    fn display_formats() {
        let p2 = p2();
        let c = p2
            .one()
            .add(&p2.hyperplane(0).unwrap().scale(-2).unwrap())
            .unwrap()
            .add(&p2.monomial(&[2], 1).unwrap())
            .unwrap();
        assert_eq!(c.to_string(), "1 - 2*h + h^2");
        assert_eq!(p2.zero().to_string(), "0");
    }
}
