//! Kodaira fiber types: builders, recognition, and the L1/L2/L3 split.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Deserializer, Serialize, Serializer};
use thiserror::Error;

use crate::canon::{canonical_form, CanonicalForm};
use crate::model::{
    check_fiber_like, gcd_multiplicity, reduce, Component, CurveConfiguration, FiberCheck, IntrinsicSingularity,
    LocalType, SingularPoint,
};

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum KodairaType {
    /// `I_N`; `I(0)` is a smooth elliptic curve, `I(1)` a nodal rational curve.
    I(u32),
    II,
    III,
    IV,
    IStar(u32),
    IIStar,
    IIIStar,
    IVStar,
    /// Multiple fiber `_m I_N` with `m ≥ 2`.
    MI(u32, u32),
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub enum Subclass {
    /// Reduced fibers.
    L1,
    /// Non-multiple, non-reduced fibers.
    L2,
    /// Multiple fibers.
    L3,
}

impl fmt::Display for Subclass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Subclass::L1 => "L1",
            Subclass::L2 => "L2",
            Subclass::L3 => "L3",
        })
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum CatalogError {
    #[error("multiple fibers need m >= 2, got m = {0}")]
    MultiplicityOutOfRange(u32),
    #[error("unrecognized type spec `{0}`")]
    BadSpec(String),
}

impl KodairaType {
    pub fn subclass(self) -> Subclass {
        subclass(self)
    }

    /// Number of irreducible components of the built fiber.
    pub fn n_components(self) -> usize {
        match self {
            KodairaType::I(n) | KodairaType::MI(_, n) => (n as usize).max(1),
            KodairaType::II => 1,
            KodairaType::III => 2,
            KodairaType::IV => 3,
            KodairaType::IStar(n) => n as usize + 5,
            KodairaType::IIStar => 9,
            KodairaType::IIIStar => 8,
            KodairaType::IVStar => 7,
        }
    }
}

impl fmt::Display for KodairaType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            KodairaType::I(n) => write!(f, "I({n})"),
            KodairaType::II => f.write_str("II"),
            KodairaType::III => f.write_str("III"),
            KodairaType::IV => f.write_str("IV"),
            KodairaType::IStar(n) => write!(f, "IStar({n})"),
            KodairaType::IIStar => f.write_str("IIStar"),
            KodairaType::IIIStar => f.write_str("IIIStar"),
            KodairaType::IVStar => f.write_str("IVStar"),
            KodairaType::MI(m, n) => write!(f, "mI({m},{n})"),
        }
    }
}

fn from_subscript(c: char) -> Option<char> {
    let digits = "₀₁₂₃₄₅₆₇₈₉";
    digits
        .chars()
        .position(|d| d == c)
        .and_then(|k| char::from_digit(k as u32, 10))
}

/// Parses canonical names (`IStar(3)`, `mI(2,4)`) and common aliases:
/// `I3`, `I_3`, `I₃`, `I3*`, `I₃*`, `II*`, `2I4`, `₂I₄`, `_2I_4`.
impl FromStr for KodairaType {
    type Err = CatalogError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let bad = || CatalogError::BadSpec(s.to_string());
        let norm: String = s
            .trim()
            .chars()
            .filter(|c| !c.is_whitespace())
            .map(|c| from_subscript(c).unwrap_or(c))
            .collect();
        let num = |t: &str| t.parse::<u32>().map_err(|_| bad());
        let exact = match norm.as_str() {
            "II" => Some(KodairaType::II),
            "III" => Some(KodairaType::III),
            "IV" => Some(KodairaType::IV),
            "IIStar" | "II*" => Some(KodairaType::IIStar),
            "IIIStar" | "III*" => Some(KodairaType::IIIStar),
            "IVStar" | "IV*" => Some(KodairaType::IVStar),
            _ => None,
        };
        if let Some(t) = exact {
            return Ok(t);
        }
        let parens = |prefix: &str| -> Option<&str> { norm.strip_prefix(prefix)?.strip_prefix('(')?.strip_suffix(')') };
        if let Some(inner) = parens("mI") {
            let (m, n) = inner.split_once(',').ok_or_else(bad)?;
            return Ok(KodairaType::MI(num(m)?, num(n)?));
        }
        if let Some(inner) = parens("IStar") {
            return Ok(KodairaType::IStar(num(inner)?));
        }
        if let Some(inner) = parens("I") {
            return Ok(KodairaType::I(num(inner)?));
        }
        let body = norm.strip_prefix('_').unwrap_or(&norm);
        let split = body.find('I').ok_or_else(bad)?;
        let (mult, rest) = body.split_at(split);
        let rest = rest[1..].strip_prefix('_').unwrap_or(&rest[1..]);
        let (digits, star) = match rest.strip_suffix('*') {
            Some(d) => (d, true),
            None => (rest, false),
        };
        if digits.is_empty() || !digits.chars().all(|c| c.is_ascii_digit()) {
            return Err(bad());
        }
        let n = num(digits)?;
        match (mult.is_empty(), star) {
            (true, false) => Ok(KodairaType::I(n)),
            (true, true) => Ok(KodairaType::IStar(n)),
            (false, false) => Ok(KodairaType::MI(num(mult)?, n)),
            (false, true) => Err(bad()),
        }
    }
}

impl Serialize for KodairaType {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        serializer.collect_str(self)
    }
}

impl<'de> Deserialize<'de> for KodairaType {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        let s = String::deserialize(deserializer)?;
        s.parse().map_err(serde::de::Error::custom)
    }
}

pub fn subclass(t: KodairaType) -> Subclass {
    match t {
        KodairaType::I(_) | KodairaType::II | KodairaType::III | KodairaType::IV => Subclass::L1,
        KodairaType::IStar(_) | KodairaType::IIStar | KodairaType::IIIStar | KodairaType::IVStar => Subclass::L2,
        KodairaType::MI(..) => Subclass::L3,
    }
}

fn name(prefix: char, i: usize) -> String {
    format!("{prefix}{i}")
}

/// Rational `(-2)`-curves `T1..Tn` with the given multiplicities and a
/// transverse point for every listed incidence (1-based indices).
fn tree(multiplicities: &[u32], incidences: &[(usize, usize)]) -> CurveConfiguration {
    let comps = multiplicities
        .iter()
        .enumerate()
        .map(|(i, &m)| Component::rational(name('T', i + 1), -2).with_multiplicity(m))
        .collect();
    let points = incidences
        .iter()
        .enumerate()
        .map(|(k, &(a, b))| SingularPoint::new(name('P', k + 1), LocalType::Transverse, vec![a - 1, b - 1]))
        .collect();
    CurveConfiguration::new(comps, points).expect("catalog data is connected")
}

fn irreducible(multiplicity: u32, singularity: Option<IntrinsicSingularity>) -> CurveConfiguration {
    let base = Component::rational("T1", 0).with_multiplicity(multiplicity);
    let c = match singularity {
        Some(s) => base.with_intrinsic(s),
        None => base.with_genus(1),
    };
    CurveConfiguration::new(vec![c], vec![]).expect("single component")
}

fn cycle(n: usize, multiplicity: u32) -> CurveConfiguration {
    let incidences: Vec<(usize, usize)> = (1..=n).map(|i| (i, i % n + 1)).collect();
    tree(&vec![multiplicity; n], &incidences)
}

pub fn build(t: KodairaType) -> Result<CurveConfiguration, CatalogError> {
    Ok(match t {
        KodairaType::I(0) => irreducible(1, None),
        KodairaType::I(1) => irreducible(1, Some(IntrinsicSingularity::Node)),
        KodairaType::I(n) => cycle(n as usize, 1),
        KodairaType::II => irreducible(1, Some(IntrinsicSingularity::Cusp)),
        KodairaType::III => CurveConfiguration::new(
            vec![Component::rational("T1", -2), Component::rational("T2", -2)],
            vec![SingularPoint::new("P1", LocalType::Tacnode, vec![0, 1])],
        )
        .expect("connected"),
        KodairaType::IV => CurveConfiguration::new(
            (1..=3).map(|i| Component::rational(name('T', i), -2)).collect(),
            vec![SingularPoint::new("P1", LocalType::OrdinaryTriple, vec![0, 1, 2])],
        )
        .expect("connected"),
        KodairaType::IStar(n) => {
            let n = n as usize;
            let mut mult = vec![1, 1, 1, 1];
            mult.extend(std::iter::repeat_n(2, n + 1));
            let mut inc = vec![(1, 5), (2, 5), (3, n + 5), (4, n + 5)];
            inc.extend((5..n + 5).map(|i| (i, i + 1)));
            tree(&mult, &inc)
        }
        KodairaType::IIStar => tree(
            &[1, 2, 3, 4, 5, 6, 4, 3, 2],
            &[(1, 2), (2, 3), (3, 4), (4, 5), (5, 6), (6, 8), (6, 7), (7, 9)],
        ),
        KodairaType::IIIStar => tree(
            &[1, 2, 3, 4, 3, 2, 2, 1],
            &[(1, 2), (2, 3), (3, 4), (4, 6), (4, 5), (5, 7), (7, 8)],
        ),
        KodairaType::IVStar => tree(
            &[1, 2, 3, 2, 2, 1, 1],
            &[(1, 2), (2, 3), (3, 4), (3, 5), (4, 6), (5, 7)],
        ),
        KodairaType::MI(m, _) if m < 2 => return Err(CatalogError::MultiplicityOutOfRange(m)),
        KodairaType::MI(m, 0) => irreducible(m, None),
        KodairaType::MI(m, 1) => irreducible(m, Some(IntrinsicSingularity::Node)),
        KodairaType::MI(m, n) => cycle(n as usize, m),
    })
}

/// Every type with `N ≤ max_n` and `2 ≤ m ≤ max_m`, in a fixed order.
pub fn enumerate_types(max_n: u32, max_m: u32) -> Vec<KodairaType> {
    let mut out: Vec<KodairaType> = (0..=max_n).map(KodairaType::I).collect();
    out.extend([KodairaType::II, KodairaType::III, KodairaType::IV]);
    out.extend((0..=max_n).map(KodairaType::IStar));
    out.extend([KodairaType::IIStar, KodairaType::IIIStar, KodairaType::IVStar]);
    for m in 2..=max_m {
        out.extend((0..=max_n).map(|n| KodairaType::MI(m, n)));
    }
    out
}

/// Why a configuration is not a Kodaira curve.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Rejection {
    #[error("{0}")]
    NotFiberLike(#[from] FiberCheck),
    #[error("multiple curve with unequal multiplicities")]
    UnequalMultiplicities,
    #[error("configuration matches no type in the catalog")]
    NoMatchingType,
}

#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
enum VertexColor {
    Component {
        multiplicity: u32,
        genus: u32,
        self_intersection: i64,
        intrinsic: Vec<IntrinsicSingularity>,
    },
    Point(LocalType),
}

/// Canonical form of the component/point incidence graph with components
/// colored by their numerical data and points by local type. Names and the
/// order of components and points do not enter.
pub fn configuration_form(config: &CurveConfiguration) -> CanonicalForm<impl Ord + Clone + fmt::Debug> {
    let n = config.n_components();
    let total = n + config.points().len();
    let mut colors: Vec<VertexColor> = config
        .components()
        .iter()
        .map(|c| {
            let mut intrinsic = c.intrinsic.clone();
            intrinsic.sort();
            VertexColor::Component {
                multiplicity: c.multiplicity,
                genus: c.genus,
                self_intersection: c.self_intersection,
                intrinsic,
            }
        })
        .collect();
    let mut adj = vec![vec![0usize; total]; total];
    for (k, p) in config.points().iter().enumerate() {
        colors.push(VertexColor::Point(p.local_type));
        for &i in &p.incident {
            adj[n + k][i] += 1;
            adj[i][n + k] += 1;
        }
    }
    canonical_form(&colors, &adj)
}

fn reduced_candidates(n: usize) -> Vec<KodairaType> {
    let mut out = Vec::new();
    match n {
        1 => out.extend([KodairaType::I(0), KodairaType::I(1), KodairaType::II]),
        _ => out.push(KodairaType::I(n as u32)),
    }
    match n {
        2 => out.push(KodairaType::III),
        3 => out.push(KodairaType::IV),
        7 => out.push(KodairaType::IVStar),
        8 => out.push(KodairaType::IIIStar),
        9 => out.push(KodairaType::IIStar),
        _ => {}
    }
    if n >= 5 {
        out.push(KodairaType::IStar(n as u32 - 5));
    }
    out
}

/// Component count, sorted point types, sorted component data.
type Fingerprint = (usize, Vec<LocalType>, Vec<(u32, u32, i64, usize)>);

/// Cheap isomorphism invariants checked before canonical forms.
fn fingerprint(config: &CurveConfiguration) -> Fingerprint {
    let mut points: Vec<LocalType> = config.points().iter().map(|p| p.local_type).collect();
    points.sort();
    let mut comps: Vec<_> = config
        .components()
        .iter()
        .map(|c| (c.multiplicity, c.genus, c.self_intersection, c.intrinsic.len()))
        .collect();
    comps.sort();
    (config.n_components(), points, comps)
}

fn find_match(config: &CurveConfiguration, candidates: Vec<KodairaType>) -> Option<KodairaType> {
    let print = fingerprint(config);
    let mut form = None;
    candidates.into_iter().find(|&t| {
        let target = build(t).expect("candidate types are in range");
        if fingerprint(&target) != print {
            return false;
        }
        let form = form.get_or_insert_with(|| configuration_form(config));
        configuration_form(&target) == *form
    })
}

/// Identifies the Kodaira type of a configuration, or says which check failed.
pub fn recognize(config: &CurveConfiguration) -> Result<KodairaType, Rejection> {
    check_fiber_like(config)?;
    let m = gcd_multiplicity(config);
    let n = config.n_components();
    if m > 1 {
        if config.components().iter().any(|c| c.multiplicity != m) {
            return Err(Rejection::UnequalMultiplicities);
        }
        let reduced = reduce(config);
        let base = [KodairaType::I(0), KodairaType::I(1), KodairaType::I(n as u32)];
        let candidates = base.into_iter().filter(|t| t.n_components() == n).collect();
        return find_match(&reduced, candidates)
            .map(|t| match t {
                KodairaType::I(k) => KodairaType::MI(m, k),
                _ => unreachable!("only I(N) candidates"),
            })
            .ok_or(Rejection::NoMatchingType);
    }
    find_match(config, reduced_candidates(n)).ok_or(Rejection::NoMatchingType)
}

pub fn classify(config: &CurveConfiguration) -> Option<KodairaType> {
    recognize(config).ok()
}
