//! Invariants preserved by derived equivalence: Euler characteristic and
//! arithmetic genus, `G_0`, negative K-groups, the shape of `Pic(X)`,
//! singularity data, and what the K-theory says about `D_sg(X)`.
//!
//! Every computation assumes `K·Θ_i = 0` for all components (fibers of a
//! relatively minimal elliptic fibration) and `h⁰(O_X) = 1`.

use std::fmt;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::catalog::{classify, subclass, KodairaType, Subclass};
use crate::graphs::lambda;
use crate::model::{check_fiber_like, divisor_square, CurveConfiguration, FiberCheck};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum InvariantError {
    #[error("intrinsic singularities on a reducible configuration are not supported")]
    MixedSingularities,
    #[error("D² = {0} is odd, inconsistent with K·Θ = 0")]
    OddSquare(i64),
    #[error("G_0 is only computed for rational components or an irreducible curve of genus <= 1")]
    UnsupportedGenus,
    #[error("negative K-groups are indexed by i <= -1, got {0}")]
    NonNegativeDegree(i32),
    #[error("h¹(O_X) = {h1} is smaller than torus rank {torus} plus elliptic rank {elliptic}; not a fiber")]
    NegativeUnipotent { h1: i64, torus: usize, elliptic: usize },
    #[error("not fiber-like: {0}")]
    NotFiberLike(#[from] FiberCheck),
}

/// A finitely generated free abelian group `Z^rank`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct FreeGroup {
    pub rank: usize,
}

impl FreeGroup {
    pub fn new(rank: usize) -> Self {
        FreeGroup { rank }
    }

    pub fn is_trivial(self) -> bool {
        self.rank == 0
    }
}

impl fmt::Display for FreeGroup {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.rank {
            0 => f.write_str("0"),
            1 => f.write_str("Z"),
            r => write!(f, "Z^{r}"),
        }
    }
}

/// Shape of `Pic(X)`: identity component built from a unipotent part, a
/// torus and abelian varieties, over a free discrete quotient.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct PicardDescriptor {
    pub unipotent_dim: usize,
    pub torus_rank: usize,
    pub elliptic_rank: usize,
    pub discrete_rank: usize,
}

impl PicardDescriptor {
    pub fn identity_dim(&self) -> usize {
        self.unipotent_dim + self.torus_rank + self.elliptic_rank
    }

    /// `(unipotent, torus, elliptic)`; two Picard schemes with different
    /// triples are not isomorphic.
    pub fn identity_type(&self) -> (usize, usize, usize) {
        (self.unipotent_dim, self.torus_rank, self.elliptic_rank)
    }

    /// `G_a`, `G_m`, `E`, products such as `G_a^2 x G_m`, or `0`.
    pub fn identity_label(&self) -> String {
        let factor = |sym: &str, k: usize| match k {
            0 => None,
            1 => Some(sym.to_string()),
            k => Some(format!("{sym}^{k}")),
        };
        let parts: Vec<String> = [
            factor("G_a", self.unipotent_dim),
            factor("G_m", self.torus_rank),
            factor("E", self.elliptic_rank),
        ]
        .into_iter()
        .flatten()
        .collect();
        if parts.is_empty() {
            "0".to_string()
        } else {
            parts.join(" x ")
        }
    }

    /// The extension `0 → Pic⁰ → Pic → Z^N → 0` in one line.
    pub fn sequence(&self) -> String {
        format!(
            "0 -> {} -> Pic -> {} -> 0",
            self.identity_label(),
            FreeGroup::new(self.discrete_rank)
        )
    }
}

/// `K⁰(X) ≅ H⁰(X, Z) ⊕ Pic(X)`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct K0Shape {
    pub h0_rank: usize,
    pub picard: PicardDescriptor,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SingularitySummary {
    /// Singular locus is finite, i.e. the curve is reduced.
    pub isolated: bool,
    /// Number of singular points; absent when the singular locus is the whole curve.
    pub count: Option<usize>,
    /// Number of singular points of `X_red`.
    pub reduced_count: usize,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum DsgStatus {
    /// Regular curve: every coherent complex is perfect.
    TrivialSingularityCategory,
    /// `K^{-1}(X) = 0`, so the Verdier quotient is idempotent complete.
    IdempotentComplete,
    /// `K^{-1}(X) ≠ 0`; the K-theoretic criterion says nothing.
    Unknown,
}

impl fmt::Display for DsgStatus {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            DsgStatus::TrivialSingularityCategory => "trivial (regular curve)",
            DsgStatus::IdempotentComplete => "idempotent complete",
            DsgStatus::Unknown => "unknown",
        })
    }
}

/// `χ(O_X)`.
///
/// Without intrinsic singularities this is `−D²/2` for `D = Σ m_i Θ_i`. An
/// irreducible `X = mC` with a singular `C` uses `χ(O_C) = 1 − (g + Σδ)` and
/// `χ(O_{mC}) = m·χ(O_C) − C²·m(m−1)/2`.
pub fn euler_characteristic(config: &CurveConfiguration) -> Result<i64, InvariantError> {
    if config.intrinsic_count() > 0 {
        if !config.is_irreducible() {
            return Err(InvariantError::MixedSingularities);
        }
        let c = &config.components()[0];
        let delta: i64 = c.intrinsic.iter().map(|s| s.delta()).sum();
        let chi_reduced = 1 - (i64::from(c.genus) + delta);
        let m = i64::from(c.multiplicity);
        return Ok(m * chi_reduced - c.self_intersection * m * (m - 1) / 2);
    }
    let square = divisor_square(config, &config.multiplicities()).expect("length matches");
    if square % 2 != 0 {
        return Err(InvariantError::OddSquare(square));
    }
    Ok(-square / 2)
}

/// `g_a = 1 − χ(O_X)`.
pub fn arithmetic_genus(config: &CurveConfiguration) -> Result<i64, InvariantError> {
    Ok(1 - euler_characteristic(config)?)
}

pub fn grothendieck_group(config: &CurveConfiguration) -> Result<FreeGroup, InvariantError> {
    if config.all_rational() {
        Ok(FreeGroup::new(config.n_components() + 1))
    } else if config.is_irreducible() {
        // rank and degree
        Ok(FreeGroup::new(2))
    } else {
        Err(InvariantError::UnsupportedGenus)
    }
}

/// `K^i(X)` for `i ≤ −1`: `Z^λ` in degree −1, zero below.
pub fn negative_k(config: &CurveConfiguration, i: i32) -> Result<FreeGroup, InvariantError> {
    match i {
        i if i >= 0 => Err(InvariantError::NonNegativeDegree(i)),
        -1 => Ok(FreeGroup::new(lambda(config))),
        _ => Ok(FreeGroup::new(0)),
    }
}

/// Curves are `K^{-1}`-regular; the answer does not depend on the input.
pub fn is_k_minus_one_regular(_config: &CurveConfiguration) -> bool {
    true
}

pub fn picard_descriptor(config: &CurveConfiguration) -> Result<PicardDescriptor, InvariantError> {
    let h1 = 1 - euler_characteristic(config)?;
    let elliptic: usize = config.components().iter().map(|c| c.genus as usize).sum();
    let torus = lambda(config);
    let unipotent = h1 - torus as i64 - elliptic as i64;
    if unipotent < 0 {
        return Err(InvariantError::NegativeUnipotent { h1, torus, elliptic });
    }
    Ok(PicardDescriptor {
        unipotent_dim: unipotent as usize,
        torus_rank: torus,
        elliptic_rank: elliptic,
        discrete_rank: config.n_components(),
    })
}

pub fn k0_shape(config: &CurveConfiguration) -> Result<K0Shape, InvariantError> {
    Ok(K0Shape {
        h0_rank: 1,
        picard: picard_descriptor(config)?,
    })
}

pub fn singularity_summary(config: &CurveConfiguration) -> SingularitySummary {
    let reduced_count = config.points().len() + config.intrinsic_count();
    let isolated = config.is_reduced();
    SingularitySummary {
        isolated,
        count: isolated.then_some(reduced_count),
        reduced_count,
    }
}

pub fn dsg_status(config: &CurveConfiguration) -> DsgStatus {
    if config.is_smooth() {
        DsgStatus::TrivialSingularityCategory
    } else if lambda(config) == 0 {
        DsgStatus::IdempotentComplete
    } else {
        DsgStatus::Unknown
    }
}

/// Everything a derived equivalence between curves is known to preserve.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct InvariantProfile {
    pub kodaira_type: Option<KodairaType>,
    pub n_components: usize,
    pub euler_characteristic: i64,
    pub arithmetic_genus: i64,
    pub g0_rank: usize,
    pub lambda: usize,
    pub picard: PicardDescriptor,
    pub reduced: bool,
    pub smooth: bool,
    pub singular_point_count: Option<usize>,
    pub subclass: Option<Subclass>,
}

pub fn invariant_profile(config: &CurveConfiguration) -> Result<InvariantProfile, InvariantError> {
    check_fiber_like(config)?;
    let chi = euler_characteristic(config)?;
    let kodaira_type = classify(config);
    Ok(InvariantProfile {
        kodaira_type,
        n_components: config.n_components(),
        euler_characteristic: chi,
        arithmetic_genus: 1 - chi,
        g0_rank: grothendieck_group(config)?.rank,
        lambda: lambda(config),
        picard: picard_descriptor(config)?,
        reduced: config.is_reduced(),
        smooth: config.is_smooth(),
        singular_point_count: singularity_summary(config).count,
        subclass: kodaira_type.map(subclass),
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalog::{build, KodairaType as K};
    use crate::model::{reduce, Component};

    fn b(t: K) -> CurveConfiguration {
        build(t).unwrap()
    }

    fn pic(u: usize, t: usize, e: usize, d: usize) -> PicardDescriptor {
        PicardDescriptor {
            unipotent_dim: u,
            torus_rank: t,
            elliptic_rank: e,
            discrete_rank: d,
        }
    }

    #[test]
    fn euler_characteristics() {
        let p1 = CurveConfiguration::new(vec![Component::rational("P", -2)], vec![]).unwrap();
        assert_eq!(euler_characteristic(&p1), Ok(1));
        assert_eq!(arithmetic_genus(&p1), Ok(0));
        assert_eq!(euler_characteristic(&b(K::I(1))), Ok(0));
        assert_eq!(arithmetic_genus(&b(K::IVStar)), Ok(1));
        assert_eq!(euler_characteristic(&b(K::MI(4, 1))), Ok(0));
    }

    #[test]
    fn mixed_singularities_rejected() {
        let c = CurveConfiguration::new(
            vec![
                Component::rational("A", -2).with_intrinsic(crate::model::IntrinsicSingularity::Node),
                Component::rational("B", -2),
            ],
            vec![crate::model::SingularPoint::new(
                "P",
                crate::model::LocalType::Transverse,
                vec![0, 1],
            )],
        )
        .unwrap();
        assert_eq!(euler_characteristic(&c), Err(InvariantError::MixedSingularities));
    }

    #[test]
    fn grothendieck_ranks() {
        assert_eq!(grothendieck_group(&b(K::IIStar)), Ok(FreeGroup::new(10)));
        assert_eq!(grothendieck_group(&b(K::I(0))), Ok(FreeGroup::new(2)));
        let t = b(K::MI(3, 4));
        assert_eq!(grothendieck_group(&t), grothendieck_group(&reduce(&t)));
        let mixed = CurveConfiguration::new(
            vec![Component::rational("E", 0).with_genus(1), Component::rational("P", -2)],
            vec![crate::model::SingularPoint::new(
                "Q",
                crate::model::LocalType::Transverse,
                vec![0, 1],
            )],
        )
        .unwrap();
        assert_eq!(grothendieck_group(&mixed), Err(InvariantError::UnsupportedGenus));
    }

    #[test]
    fn negative_k_groups() {
        assert_eq!(negative_k(&b(K::I(7)), -1), Ok(FreeGroup::new(1)));
        assert_eq!(negative_k(&b(K::IIIStar), -1), Ok(FreeGroup::new(0)));
        assert_eq!(negative_k(&b(K::I(7)), -5), Ok(FreeGroup::new(0)));
        assert_eq!(negative_k(&b(K::I(7)), 0), Err(InvariantError::NonNegativeDegree(0)));
        assert!(is_k_minus_one_regular(&b(K::I(7))));
    }

    #[test]
    fn k0_shapes() {
        assert_eq!(k0_shape(&b(K::I(0))).unwrap().picard, pic(0, 0, 1, 1));
        assert_eq!(k0_shape(&b(K::I(2))).unwrap().picard, pic(0, 1, 0, 2));
        let s = k0_shape(&b(K::IStar(0))).unwrap();
        assert_eq!((s.h0_rank, s.picard), (1, pic(1, 0, 0, 5)));
    }

    #[test]
    fn picard_descriptors() {
        assert_eq!(picard_descriptor(&b(K::II)), Ok(pic(1, 0, 0, 1)));
        assert_eq!(picard_descriptor(&b(K::I(1))), Ok(pic(0, 1, 0, 1)));
        assert_eq!(picard_descriptor(&b(K::MI(3, 2))), Ok(pic(0, 1, 0, 2)));
        assert_eq!(pic(1, 0, 0, 9).sequence(), "0 -> G_a -> Pic -> Z^9 -> 0");
        assert_eq!(pic(2, 1, 0, 1).identity_label(), "G_a^2 x G_m");
        assert_eq!(pic(0, 0, 0, 1).identity_label(), "0");
    }

    #[test]
    fn singularity_summaries() {
        let s = singularity_summary(&b(K::IStar(4)));
        assert_eq!((s.isolated, s.count, s.reduced_count), (false, None, 8));
        let s = singularity_summary(&b(K::I(0)));
        assert_eq!((s.isolated, s.count), (true, Some(0)));
        assert_eq!(singularity_summary(&b(K::IV)).count, Some(1));
    }

    #[test]
    fn dsg() {
        for t in [K::IStar(0), K::IStar(6), K::IIStar, K::IIIStar, K::IVStar] {
            assert_eq!(dsg_status(&b(t)), DsgStatus::IdempotentComplete);
        }
        assert_eq!(dsg_status(&b(K::I(0))), DsgStatus::TrivialSingularityCategory);
        assert_eq!(dsg_status(&b(K::MI(2, 3))), DsgStatus::Unknown);
    }

    #[test]
    fn profiles() {
        let p = invariant_profile(&b(K::IStar(4))).unwrap();
        assert_eq!(
            (
                p.n_components,
                p.arithmetic_genus,
                p.g0_rank,
                p.lambda,
                p.picard,
                p.reduced,
                p.subclass
            ),
            (9, 1, 10, 0, pic(1, 0, 0, 9), false, Some(Subclass::L2))
        );
        let p = invariant_profile(&b(K::I(0))).unwrap();
        assert_eq!(
            (p.n_components, p.arithmetic_genus, p.g0_rank, p.lambda, p.picard),
            (1, 1, 2, 0, pic(0, 0, 1, 1))
        );
        assert!(p.reduced && p.smooth);
        assert_eq!((p.singular_point_count, p.subclass), (Some(0), Some(Subclass::L1)));
        let p = invariant_profile(&b(K::IIStar)).unwrap();
        assert_eq!(
            (
                p.n_components,
                p.arithmetic_genus,
                p.g0_rank,
                p.lambda,
                p.picard,
                p.reduced,
                p.subclass
            ),
            (9, 1, 10, 0, pic(1, 0, 0, 9), false, Some(Subclass::L2))
        );
    }
}
