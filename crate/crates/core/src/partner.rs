//! Screening pairs of curves for derived equivalence.
//!
//! A derived equivalence between Kodaira curves preserves every field of the
//! [`InvariantProfile`]. A mismatch therefore rules out equivalence; among
//! reduced fibers the profile also pins down the type. Inside the
//! non-reduced subclasses only necessary conditions are known, so matching
//! profiles there yield [`PartnerVerdict::PossiblyEquivalent`].

use std::fmt;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::catalog::{build, CatalogError, KodairaType, Subclass};
use crate::invariants::{invariant_profile, InvariantError, InvariantProfile};
use crate::model::CurveConfiguration;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum PartnerError {
    #[error(transparent)]
    Invariant(#[from] InvariantError),
    #[error(transparent)]
    Catalog(#[from] CatalogError),
}

/// Compared invariants, in comparison order.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Invariant {
    ArithmeticGenus,
    G0Rank,
    KMinusOneRank,
    PicardIdentityComponent,
    PicardDiscreteRank,
    IsolatedSingularities,
    SingularPointCount,
    Subclass,
}

impl fmt::Display for Invariant {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Invariant::ArithmeticGenus => "arithmetic genus",
            Invariant::G0Rank => "G0 rank",
            Invariant::KMinusOneRank => "K^-1 rank",
            Invariant::PicardIdentityComponent => "Picard identity component",
            Invariant::PicardDiscreteRank => "Picard discrete rank",
            Invariant::IsolatedSingularities => "isolated singularities",
            Invariant::SingularPointCount => "singular point count",
            Invariant::Subclass => "subclass",
        })
    }
}

/// One differing invariant with the two rendered values.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Witness {
    pub invariant: Invariant,
    pub left: String,
    pub right: String,
}

impl fmt::Display for Witness {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}: {} vs {}", self.invariant, self.left, self.right)
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "verdict", rename_all = "snake_case")]
pub enum PartnerVerdict {
    NotEquivalent {
        witnesses: Vec<Witness>,
    },
    /// Both reduced fibers of the same type. For two `I(0)` this is
    /// type-level only: no j-invariant is modeled.
    Isomorphic,
    PossiblyEquivalent,
}

impl PartnerVerdict {
    pub fn kind(&self) -> VerdictKind {
        match self {
            PartnerVerdict::NotEquivalent { .. } => VerdictKind::NotEquivalent,
            PartnerVerdict::Isomorphic => VerdictKind::Isomorphic,
            PartnerVerdict::PossiblyEquivalent => VerdictKind::PossiblyEquivalent,
        }
    }

    pub fn witnesses(&self) -> &[Witness] {
        match self {
            PartnerVerdict::NotEquivalent { witnesses } => witnesses,
            _ => &[],
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum VerdictKind {
    NotEquivalent,
    Isomorphic,
    PossiblyEquivalent,
}

impl fmt::Display for VerdictKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Debug::fmt(self, f)
    }
}

fn opt<T: fmt::Display>(v: Option<T>) -> String {
    v.map_or_else(|| "none".to_string(), |x| x.to_string())
}

pub fn compare_profiles(x: &InvariantProfile, y: &InvariantProfile) -> PartnerVerdict {
    let mut witnesses = Vec::new();
    let mut check = |invariant, left: String, right: String| {
        if left != right {
            witnesses.push(Witness { invariant, left, right });
        }
    };
    check(
        Invariant::ArithmeticGenus,
        x.arithmetic_genus.to_string(),
        y.arithmetic_genus.to_string(),
    );
    check(Invariant::G0Rank, x.g0_rank.to_string(), y.g0_rank.to_string());
    check(Invariant::KMinusOneRank, x.lambda.to_string(), y.lambda.to_string());
    check(
        Invariant::PicardIdentityComponent,
        x.picard.identity_label(),
        y.picard.identity_label(),
    );
    check(
        Invariant::PicardDiscreteRank,
        x.picard.discrete_rank.to_string(),
        y.picard.discrete_rank.to_string(),
    );
    check(
        Invariant::IsolatedSingularities,
        x.reduced.to_string(),
        y.reduced.to_string(),
    );
    if x.reduced && y.reduced {
        check(
            Invariant::SingularPointCount,
            opt(x.singular_point_count),
            opt(y.singular_point_count),
        );
    }
    check(Invariant::Subclass, opt(x.subclass), opt(y.subclass));

    if !witnesses.is_empty() {
        return PartnerVerdict::NotEquivalent { witnesses };
    }
    match (x.subclass, x.kodaira_type, y.kodaira_type) {
        (Some(Subclass::L1), Some(a), Some(b)) if a == b => PartnerVerdict::Isomorphic,
        _ => PartnerVerdict::PossiblyEquivalent,
    }
}

pub fn compare(x: &CurveConfiguration, y: &CurveConfiguration) -> Result<PartnerVerdict, PartnerError> {
    Ok(compare_profiles(&invariant_profile(x)?, &invariant_profile(y)?))
}

/// Verdicts for every ordered pair of catalog types.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct PartnerTable {
    pub types: Vec<KodairaType>,
    /// Row-major: `cells[i][j]` compares `types[i]` with `types[j]`.
    pub cells: Vec<Vec<PartnerVerdict>>,
}

impl PartnerTable {
    pub fn get(&self, i: usize, j: usize) -> &PartnerVerdict {
        &self.cells[i][j]
    }
}

pub fn partner_matrix(types: &[KodairaType]) -> Result<PartnerTable, PartnerError> {
    let profiles = types
        .iter()
        .map(|&t| Ok(invariant_profile(&build(t)?)?))
        .collect::<Result<Vec<_>, PartnerError>>()?;
    let cells = profiles
        .iter()
        .map(|x| profiles.iter().map(|y| compare_profiles(x, y)).collect())
        .collect();
    Ok(PartnerTable {
        types: types.to_vec(),
        cells,
    })
}
