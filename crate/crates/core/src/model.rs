//! Curves on a smooth surface as combinatorial configurations.
//!
//! A configuration lists the irreducible components `Θ_i` of a curve
//! `X = Σ m_i Θ_i` together with the singular points where components meet.
//! Everything downstream (intersection matrix, graphs, invariants) is derived
//! from this data and is deterministic in component order.

use std::collections::HashSet;
use std::fmt;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::linalg;

/// Singularities lying on a single component.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum IntrinsicSingularity {
    Node,
    Cusp,
}

impl IntrinsicSingularity {
    /// Number of branches through the point on the normalization.
    pub fn branches(self) -> usize {
        match self {
            IntrinsicSingularity::Node => 2,
            IntrinsicSingularity::Cusp => 1,
        }
    }

    /// The delta invariant; both a node and a cusp drop the genus by one.
    pub fn delta(self) -> i64 {
        1
    }

    pub fn as_str(self) -> &'static str {
        match self {
            IntrinsicSingularity::Node => "node",
            IntrinsicSingularity::Cusp => "cusp",
        }
    }
}

impl fmt::Display for IntrinsicSingularity {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

/// Local type of a point where distinct components meet.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum LocalType {
    /// Ordinary double point between two distinct components.
    Transverse,
    /// Two components meeting with local intersection multiplicity 2.
    Tacnode,
    /// Three concurrent components, pairwise multiplicity 1.
    OrdinaryTriple,
}

impl LocalType {
    pub fn arity(self) -> usize {
        match self {
            LocalType::Transverse | LocalType::Tacnode => 2,
            LocalType::OrdinaryTriple => 3,
        }
    }

    /// Contribution to `Θ_i · Θ_j` for each pair of incident components.
    pub fn pair_contribution(self) -> i64 {
        match self {
            LocalType::Transverse | LocalType::OrdinaryTriple => 1,
            LocalType::Tacnode => 2,
        }
    }

    pub fn as_str(self) -> &'static str {
        match self {
            LocalType::Transverse => "transverse",
            LocalType::Tacnode => "tacnode",
            LocalType::OrdinaryTriple => "ordinary_triple",
        }
    }
}

impl fmt::Display for LocalType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Component {
    pub name: String,
    pub multiplicity: u32,
    /// Geometric genus of the normalization, 0 or 1.
    pub genus: u32,
    pub self_intersection: i64,
    pub intrinsic: Vec<IntrinsicSingularity>,
}

impl Component {
    /// A smooth rational component of multiplicity one.
    pub fn rational(name: impl Into<String>, self_intersection: i64) -> Self {
        Component {
            name: name.into(),
            multiplicity: 1,
            genus: 0,
            self_intersection,
            intrinsic: Vec::new(),
        }
    }

    pub fn with_multiplicity(mut self, multiplicity: u32) -> Self {
        self.multiplicity = multiplicity;
        self
    }

    pub fn with_genus(mut self, genus: u32) -> Self {
        self.genus = genus;
        self
    }

    pub fn with_intrinsic(mut self, singularity: IntrinsicSingularity) -> Self {
        self.intrinsic.push(singularity);
        self
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SingularPoint {
    pub name: String,
    pub local_type: LocalType,
    /// Indices into the configuration's component list.
    pub incident: Vec<usize>,
}

impl SingularPoint {
    pub fn new(name: impl Into<String>, local_type: LocalType, incident: Vec<usize>) -> Self {
        SingularPoint {
            name: name.into(),
            local_type,
            incident,
        }
    }

    /// Unordered pairs of incident components, one per pair.
    pub fn pairs(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::new();
        for (a, &i) in self.incident.iter().enumerate() {
            for &j in &self.incident[a + 1..] {
                out.push((i, j));
            }
        }
        out
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ModelError {
    #[error("a configuration needs at least one component")]
    NoComponents,
    #[error("component `{0}` has multiplicity 0")]
    ZeroMultiplicity(String),
    #[error("component `{name}` has geometric genus {genus}; only 0 and 1 are supported")]
    UnsupportedGenus { name: String, genus: u32 },
    #[error("component `{0}` has geometric genus 1 and intrinsic singularities")]
    SingularEllipticComponent(String),
    #[error("duplicate component name `{0}`")]
    DuplicateComponent(String),
    #[error("duplicate point name `{0}`")]
    DuplicatePoint(String),
    #[error("point `{point}` references component index {index}, but there are only {count}")]
    UnknownComponent { point: String, index: usize, count: usize },
    #[error("point `{point}` of type {local_type} needs {expected} incident components, got {got}")]
    Arity {
        point: String,
        local_type: LocalType,
        expected: usize,
        got: usize,
    },
    #[error("point `{0}` lists the same component twice")]
    RepeatedIncidence(String),
    #[error("the configuration is not connected")]
    Disconnected,
    #[error("coefficient vector has length {got}, expected {expected}")]
    LengthMismatch { expected: usize, got: usize },
}

/// A connected curve `X = Σ m_i Θ_i` on a smooth surface.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CurveConfiguration {
    components: Vec<Component>,
    points: Vec<SingularPoint>,
}

impl CurveConfiguration {
    pub fn new(components: Vec<Component>, points: Vec<SingularPoint>) -> Result<Self, ModelError> {
        if components.is_empty() {
            return Err(ModelError::NoComponents);
        }
        let mut names = HashSet::new();
        for c in &components {
            if c.multiplicity == 0 {
                return Err(ModelError::ZeroMultiplicity(c.name.clone()));
            }
            if c.genus > 1 {
                return Err(ModelError::UnsupportedGenus {
                    name: c.name.clone(),
                    genus: c.genus,
                });
            }
            if c.genus == 1 && !c.intrinsic.is_empty() {
                return Err(ModelError::SingularEllipticComponent(c.name.clone()));
            }
            if !names.insert(c.name.as_str()) {
                return Err(ModelError::DuplicateComponent(c.name.clone()));
            }
        }
        let mut point_names = HashSet::new();
        for p in &points {
            if !point_names.insert(p.name.as_str()) {
                return Err(ModelError::DuplicatePoint(p.name.clone()));
            }
            let expected = p.local_type.arity();
            if p.incident.len() != expected {
                return Err(ModelError::Arity {
                    point: p.name.clone(),
                    local_type: p.local_type,
                    expected,
                    got: p.incident.len(),
                });
            }
            for &i in &p.incident {
                if i >= components.len() {
                    return Err(ModelError::UnknownComponent {
                        point: p.name.clone(),
                        index: i,
                        count: components.len(),
                    });
                }
            }
            let distinct: HashSet<_> = p.incident.iter().collect();
            if distinct.len() != p.incident.len() {
                return Err(ModelError::RepeatedIncidence(p.name.clone()));
            }
        }
        let config = CurveConfiguration { components, points };
        if !config.is_connected() {
            return Err(ModelError::Disconnected);
        }
        Ok(config)
    }

    pub fn components(&self) -> &[Component] {
        &self.components
    }

    pub fn points(&self) -> &[SingularPoint] {
        &self.points
    }

    /// Number of irreducible components `N`.
    pub fn n_components(&self) -> usize {
        self.components.len()
    }

    pub fn multiplicities(&self) -> Vec<i64> {
        self.components.iter().map(|c| i64::from(c.multiplicity)).collect()
    }

    pub fn is_reduced(&self) -> bool {
        self.components.iter().all(|c| c.multiplicity == 1)
    }

    pub fn is_irreducible(&self) -> bool {
        self.components.len() == 1
    }

    pub fn all_rational(&self) -> bool {
        self.components.iter().all(|c| c.genus == 0)
    }

    pub fn intrinsic_count(&self) -> usize {
        self.components.iter().map(|c| c.intrinsic.len()).sum()
    }

    /// Reduced with no singular points of any kind.
    pub fn is_smooth(&self) -> bool {
        self.is_reduced() && self.points.is_empty() && self.intrinsic_count() == 0
    }

    fn is_connected(&self) -> bool {
        let n = self.components.len();
        let mut parent: Vec<usize> = (0..n).collect();
        fn find(parent: &mut [usize], mut x: usize) -> usize {
            while parent[x] != x {
                parent[x] = parent[parent[x]];
                x = parent[x];
            }
            x
        }
        let mut classes = n;
        for p in &self.points {
            for (i, j) in p.pairs() {
                let (ri, rj) = (find(&mut parent, i), find(&mut parent, j));
                if ri != rj {
                    parent[ri] = rj;
                    classes -= 1;
                }
            }
        }
        classes == 1
    }

    /// Relabels components by `order`: the new component `k` is the old
    /// component `order[k]`. Point incidences follow along.
    pub fn permuted(&self, order: &[usize]) -> Self {
        assert_eq!(order.len(), self.components.len(), "permutation length");
        let mut inverse = vec![usize::MAX; order.len()];
        for (new, &old) in order.iter().enumerate() {
            inverse[old] = new;
        }
        let components = order.iter().map(|&old| self.components[old].clone()).collect();
        let points = self
            .points
            .iter()
            .map(|p| SingularPoint {
                name: p.name.clone(),
                local_type: p.local_type,
                incident: p.incident.iter().map(|&i| inverse[i]).collect(),
            })
            .collect();
        CurveConfiguration { components, points }
    }

    /// Reorders the point list without touching components.
    pub fn with_point_order(&self, order: &[usize]) -> Self {
        assert_eq!(order.len(), self.points.len(), "permutation length");
        CurveConfiguration {
            components: self.components.clone(),
            points: order.iter().map(|&k| self.points[k].clone()).collect(),
        }
    }

    /// Applies new names to components and points, keeping the structure.
    pub fn renamed(&self, component_names: &[String], point_names: &[String]) -> Self {
        let mut out = self.clone();
        for (c, name) in out.components.iter_mut().zip(component_names) {
            c.name = name.clone();
        }
        for (p, name) in out.points.iter_mut().zip(point_names) {
            p.name = name.clone();
        }
        out
    }
}

/// Symmetric integer matrix of pairwise intersection numbers `Θ_i · Θ_j`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct IntersectionMatrix {
    n: usize,
    entries: Vec<i64>,
}

impl IntersectionMatrix {
    pub fn from_rows(rows: &[Vec<i64>]) -> Self {
        let n = rows.len();
        let mut entries = Vec::with_capacity(n * n);
        for row in rows {
            assert_eq!(row.len(), n, "intersection matrix must be square");
            entries.extend_from_slice(row);
        }
        IntersectionMatrix { n, entries }
    }

    pub fn dim(&self) -> usize {
        self.n
    }

    pub fn get(&self, i: usize, j: usize) -> i64 {
        self.entries[i * self.n + j]
    }

    pub fn rows(&self) -> Vec<Vec<i64>> {
        self.entries.chunks(self.n.max(1)).map(<[i64]>::to_vec).collect()
    }

    pub fn mul_vec(&self, v: &[i64]) -> Vec<i64> {
        assert_eq!(v.len(), self.n);
        (0..self.n)
            .map(|i| (0..self.n).map(|j| self.get(i, j) * v[j]).sum())
            .collect()
    }

    pub fn is_symmetric(&self) -> bool {
        (0..self.n).all(|i| (0..i).all(|j| self.get(i, j) == self.get(j, i)))
    }
}

pub fn intersection_matrix(config: &CurveConfiguration) -> IntersectionMatrix {
    let n = config.n_components();
    let mut entries = vec![0i64; n * n];
    for (i, c) in config.components.iter().enumerate() {
        entries[i * n + i] = c.self_intersection;
    }
    for p in &config.points {
        let w = p.local_type.pair_contribution();
        for (i, j) in p.pairs() {
            entries[i * n + j] += w;
            entries[j * n + i] += w;
        }
    }
    IntersectionMatrix { n, entries }
}

/// `aᵗ M a` for the divisor `Σ a_i Θ_i`.
pub fn divisor_square(config: &CurveConfiguration, coeffs: &[i64]) -> Result<i64, ModelError> {
    let n = config.n_components();
    if coeffs.len() != n {
        return Err(ModelError::LengthMismatch {
            expected: n,
            got: coeffs.len(),
        });
    }
    let m = intersection_matrix(config);
    Ok(m.mul_vec(coeffs).iter().zip(coeffs).map(|(x, a)| x * a).sum())
}

/// Which necessary numerical fiber condition a configuration fails.
#[derive(Clone, Debug, PartialEq, Eq, Error)]
pub enum FiberCheck {
    #[error("M·m ≠ 0")]
    NonZeroFiberClass,
    #[error("intersection matrix is not negative semidefinite")]
    NotNegativeSemidefinite,
    #[error("radical of the intersection matrix has rank {0}, expected 1")]
    RadicalRank(usize),
}

/// Checks `M·m = 0` and, for reducible input, that `M` is negative
/// semidefinite with a one-dimensional radical. Connectivity is guaranteed
/// by construction of [`CurveConfiguration`].
pub fn check_fiber_like(config: &CurveConfiguration) -> Result<(), FiberCheck> {
    let m = intersection_matrix(config);
    if m.mul_vec(&config.multiplicities()).iter().any(|&x| x != 0) {
        return Err(FiberCheck::NonZeroFiberClass);
    }
    if config.n_components() >= 2 {
        let negated: Vec<Vec<i64>> = m
            .rows()
            .into_iter()
            .map(|r| r.into_iter().map(|x| -x).collect())
            .collect();
        let psd = linalg::psd_rank(&negated).ok_or(FiberCheck::NotNegativeSemidefinite)?;
        let radical = config.n_components() - psd;
        if radical != 1 {
            return Err(FiberCheck::RadicalRank(radical));
        }
    }
    Ok(())
}

pub fn is_fiber_like(config: &CurveConfiguration) -> bool {
    check_fiber_like(config).is_ok()
}

/// `X_red`: same components and points, every multiplicity set to one.
pub fn reduce(config: &CurveConfiguration) -> CurveConfiguration {
    let mut out = config.clone();
    for c in &mut out.components {
        c.multiplicity = 1;
    }
    out
}

pub fn gcd_multiplicity(config: &CurveConfiguration) -> u32 {
    fn gcd(a: u32, b: u32) -> u32 {
        if b == 0 {
            a
        } else {
            gcd(b, a % b)
        }
    }
    config.components.iter().fold(0, |g, c| gcd(g, c.multiplicity))
}
