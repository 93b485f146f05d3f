//! Pure simplicial complexes given by their facets.
//!
//! Faces are bitsets over at most [`MAX_VERTICES`] vertices. A complex with
//! facets of cardinality `d - 1` has dimension `d - 2`; `d` is the socle
//! degree of the associated algebra and is what every other module keys on.

use std::cmp::Ordering;
use std::collections::{BTreeSet, HashMap, HashSet};
use std::fmt;

use itertools::Itertools;
use rand::seq::index;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::counting;

pub const MAX_VERTICES: usize = 128;

/// Attempts made by [`random_pure_complex`] before giving up on covering every vertex.
pub const RANDOM_COMPLEX_ATTEMPTS: usize = 1000;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ComplexError {
    #[error("facet list is empty")]
    Empty,
    #[error("facet {facet} has {found} vertices, expected {expected}")]
    NonPure { facet: usize, expected: usize, found: usize },
    #[error("facet {0} appears more than once")]
    DuplicateFacet(Face),
    #[error("vertex {0} is not used by any facet")]
    UnusedVertex(usize),
    #[error("complex dimension d-2 = {0} is below 1")]
    DimensionTooSmall(isize),
    #[error("vertex {vertex} is out of range for m = {m}")]
    VertexOutOfRange { vertex: usize, m: usize },
    #[error("facet {0} repeats a vertex")]
    RepeatedVertex(usize),
    #[error("{0} vertices exceed the supported maximum of {MAX_VERTICES}")]
    TooManyVertices(usize),
    #[error("{count} labels given for {m} vertices")]
    LabelCount { count: usize, m: usize },
    #[error("Turan part {index} has order {order}, must be at least 2")]
    OrderTooSmall { index: usize, order: usize },
    #[error("a Turan complex needs at least 2 parts, got {0}")]
    TooFewParts(usize),
    #[error("infeasible random complex: {0}")]
    Infeasible(String),
    #[error("line {line}, column {column}: {message}")]
    Parse { line: usize, column: usize, message: String },
}

/// A set of vertices, stored as a bitset.
///
/// Ordering is lexicographic on the sorted vertex lists, so `{0,1,2} < {0,2}`.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Default)]
pub struct Face(u128);

impl Face {
    pub const EMPTY: Face = Face(0);

    pub fn from_vertices<I: IntoIterator<Item = usize>>(vertices: I) -> Face {
        let mut bits = 0u128;
        for v in vertices {
            assert!(v < MAX_VERTICES, "vertex {v} out of range");
            bits |= 1u128 << v;
        }
        Face(bits)
    }

    pub fn singleton(v: usize) -> Face {
        Face::from_vertices([v])
    }

    pub fn from_bits(bits: u128) -> Face {
        Face(bits)
    }

    pub fn bits(self) -> u128 {
        self.0
    }

    pub fn len(self) -> usize {
        self.0.count_ones() as usize
    }

    pub fn is_empty(self) -> bool {
        self.0 == 0
    }

    pub fn contains(self, v: usize) -> bool {
        v < MAX_VERTICES && self.0 >> v & 1 == 1
    }

    pub fn is_subset(self, other: Face) -> bool {
        self.0 & !other.0 == 0
    }

    pub fn union(self, other: Face) -> Face {
        Face(self.0 | other.0)
    }

    pub fn intersection(self, other: Face) -> Face {
        Face(self.0 & other.0)
    }

    pub fn difference(self, other: Face) -> Face {
        Face(self.0 & !other.0)
    }

    pub fn is_disjoint(self, other: Face) -> bool {
        self.0 & other.0 == 0
    }

    pub fn with(self, v: usize) -> Face {
        self.union(Face::singleton(v))
    }

    pub fn without(self, v: usize) -> Face {
        self.difference(Face::singleton(v))
    }

    pub fn vertices(self) -> impl Iterator<Item = usize> {
        let mut bits = self.0;
        std::iter::from_fn(move || {
            if bits == 0 {
                return None;
            }
            let v = bits.trailing_zeros() as usize;
            bits &= bits - 1;
            Some(v)
        })
    }

    pub fn max_vertex(self) -> Option<usize> {
        (self.0 != 0).then(|| 127 - self.0.leading_zeros() as usize)
    }

    /// All subsets of cardinality `k`.
    pub fn subsets(self, k: usize) -> impl Iterator<Item = Face> {
        self.vertices()
            .collect::<Vec<_>>()
            .into_iter()
            .combinations(k)
            .map(Face::from_vertices)
    }
}

impl Ord for Face {
    fn cmp(&self, other: &Self) -> Ordering {
        let diff = self.0 ^ other.0;
        if diff == 0 {
            return Ordering::Equal;
        }
        let p = diff.trailing_zeros();
        // Below p both lists agree; the one holding p is smaller unless the
        // other list has already ended (is a prefix).
        let self_holds = self.0 >> p & 1 == 1;
        let rest = if self_holds { other.0 } else { self.0 };
        let rest_continues = p < 127 && rest >> (p + 1) != 0;
        if self_holds == rest_continues {
            Ordering::Less
        } else {
            Ordering::Greater
        }
    }
}

impl PartialOrd for Face {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Debug for Face {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{{}}}", self.vertices().join(","))
    }
}

impl fmt::Display for Face {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Debug::fmt(self, f)
    }
}

impl Serialize for Face {
    fn serialize<S: serde::Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        s.collect_seq(self.vertices())
    }
}

/// Face counts `e_0, ..., e_{d-1}`; `e_k` counts faces with `k` vertices.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(transparent)]
pub struct FVector {
    e: Vec<u64>,
}

impl FVector {
    pub fn new(e: Vec<u64>) -> Self {
        FVector { e }
    }

    /// `e_k`, with `e_k = 0` for every `k >= d`.
    pub fn e(&self, k: usize) -> u64 {
        self.e.get(k).copied().unwrap_or(0)
    }

    pub fn as_slice(&self) -> &[u64] {
        &self.e
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct FlagCheck {
    pub flag: bool,
    /// A minimal non-face with at least 3 vertices; all its edges are faces.
    pub witness: Option<Face>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ConnectivityCheck {
    pub connected: bool,
    /// Two facets in different components.
    pub witness: Option<(Face, Face)>,
}

/// On-disk complex description. Facet vertex lists may be unsorted.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ComplexFile {
    pub m: usize,
    pub facets: Vec<Vec<usize>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub labels: Option<Vec<String>>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SimplicialComplex {
    m: usize,
    d: usize,
    facets: Vec<Face>,
    labels: Option<Vec<String>>,
}

impl SimplicialComplex {
    /// Validates and canonicalizes a facet list (facets sorted, vertex lists sorted).
    pub fn new(facets: &[Vec<usize>], m: usize) -> Result<Self, ComplexError> {
        if m > MAX_VERTICES {
            return Err(ComplexError::TooManyVertices(m));
        }
        let first = facets.first().ok_or(ComplexError::Empty)?;
        let size = first.len();
        let mut faces = Vec::with_capacity(facets.len());
        for (idx, facet) in facets.iter().enumerate() {
            if facet.len() != size {
                return Err(ComplexError::NonPure { facet: idx, expected: size, found: facet.len() });
            }
            if let Some(&vertex) = facet.iter().find(|&&v| v >= m) {
                return Err(ComplexError::VertexOutOfRange { vertex, m });
            }
            let face = Face::from_vertices(facet.iter().copied());
            if face.len() != facet.len() {
                return Err(ComplexError::RepeatedVertex(idx));
            }
            faces.push(face);
        }
        if size < 2 {
            return Err(ComplexError::DimensionTooSmall(size as isize - 1));
        }
        faces.sort();
        if let Some(w) = faces.windows(2).find(|w| w[0] == w[1]) {
            return Err(ComplexError::DuplicateFacet(w[0]));
        }
        let covered = faces.iter().fold(Face::EMPTY, |acc, f| acc.union(*f));
        if let Some(v) = (0..m).find(|&v| !covered.contains(v)) {
            return Err(ComplexError::UnusedVertex(v));
        }
        Ok(SimplicialComplex { m, d: size + 1, facets: faces, labels: None })
    }

    pub fn with_labels(mut self, labels: Vec<String>) -> Result<Self, ComplexError> {
        if labels.len() != self.m {
            return Err(ComplexError::LabelCount { count: labels.len(), m: self.m });
        }
        self.labels = Some(labels);
        Ok(self)
    }

    pub fn from_file(file: &ComplexFile) -> Result<Self, ComplexError> {
        let c = Self::new(&file.facets, file.m)?;
        match &file.labels {
            Some(labels) => c.with_labels(labels.clone()),
            None => Ok(c),
        }
    }

    pub fn from_json_str(text: &str) -> Result<Self, ComplexError> {
        let file: ComplexFile = serde_json::from_str(text).map_err(|e| ComplexError::Parse {
            line: e.line(),
            column: e.column(),
            message: e.to_string(),
        })?;
        Self::from_file(&file)
    }

    pub fn to_file(&self) -> ComplexFile {
        ComplexFile {
            m: self.m,
            facets: self.facets.iter().map(|f| f.vertices().collect()).collect(),
            labels: self.labels.clone(),
        }
    }

    /// Number of vertices.
    pub fn m(&self) -> usize {
        self.m
    }

    /// Number of facets.
    pub fn n(&self) -> usize {
        self.facets.len()
    }

    /// Socle degree; facets have `d - 1` vertices.
    pub fn d(&self) -> usize {
        self.d
    }

    pub fn facets(&self) -> &[Face] {
        &self.facets
    }

    pub fn labels(&self) -> Option<&[String]> {
        self.labels.as_deref()
    }

    pub fn is_face(&self, face: Face) -> bool {
        self.facets.iter().any(|f| face.is_subset(*f))
    }

    /// Smallest index of a facet containing `face`.
    pub fn first_facet_containing(&self, face: Face) -> Option<usize> {
        self.facets.iter().position(|f| face.is_subset(*f))
    }

    /// All faces with `k` vertices, sorted.
    pub fn faces(&self, k: usize) -> Vec<Face> {
        let mut out: Vec<Face> = self.face_set(k).into_iter().collect();
        out.sort();
        out
    }

    fn face_set(&self, k: usize) -> HashSet<Face> {
        if k >= self.d {
            return HashSet::new();
        }
        self.facets.iter().flat_map(|f| f.subsets(k)).collect()
    }

    pub fn f_vector(&self) -> FVector {
        FVector::new((0..self.d).map(|k| self.face_set(k).len() as u64).collect())
    }

    /// Minimal non-faces with at most `max_cardinality` vertices, ordered by
    /// cardinality and then lexicographically.
    ///
    /// Candidates of size `s` are one-vertex extensions of faces of size
    /// `s - 1`, so supersets of non-faces are never generated.
    pub fn minimal_nonfaces(&self, max_cardinality: usize) -> Vec<Face> {
        let mut out = Vec::new();
        let mut prev = self.face_set(1);
        for s in 2..=max_cardinality.min(self.d) {
            let current = self.face_set(s);
            let mut found = BTreeSet::new();
            for base in &prev {
                let top = base.max_vertex().map_or(0, |v| v + 1);
                for v in top..self.m {
                    let cand = base.with(v);
                    if current.contains(&cand) {
                        continue;
                    }
                    if cand.vertices().all(|w| prev.contains(&cand.without(w))) {
                        found.insert(cand);
                    }
                }
            }
            out.extend(found);
            prev = current;
        }
        out
    }

    /// Flag test: every minimal non-face has exactly two vertices.
    pub fn is_flag(&self) -> FlagCheck {
        let witness = self.minimal_nonfaces(self.d).into_iter().find(|f| f.len() > 2);
        FlagCheck { flag: witness.is_none(), witness }
    }

    /// Facets are adjacent when they share `d - 2` vertices.
    pub fn is_facet_connected(&self) -> ConnectivityCheck {
        let n = self.facets.len();
        let mut uf = UnionFind::new(n);
        let mut ridges: HashMap<Face, usize> = HashMap::new();
        for (i, facet) in self.facets.iter().enumerate() {
            for v in facet.vertices() {
                let ridge = facet.without(v);
                match ridges.get(&ridge) {
                    Some(&j) => uf.union(i, j),
                    None => {
                        ridges.insert(ridge, i);
                    }
                }
            }
        }
        let root = uf.find(0);
        let witness = (1..n).find(|&i| uf.find(i) != root).map(|i| (self.facets[0], self.facets[i]));
        ConnectivityCheck { connected: witness.is_none(), witness }
    }
}

struct UnionFind {
    parent: Vec<usize>,
}

impl UnionFind {
    fn new(n: usize) -> Self {
        UnionFind { parent: (0..n).collect() }
    }

    fn find(&mut self, mut x: usize) -> usize {
        while self.parent[x] != x {
            self.parent[x] = self.parent[self.parent[x]];
            x = self.parent[x];
        }
        x
    }

    fn union(&mut self, a: usize, b: usize) {
        let (ra, rb) = (self.find(a), self.find(b));
        if ra != rb {
            self.parent[ra.max(rb)] = ra.min(rb);
        }
    }
}

/// The Turan complex: vertices split into parts of the given sizes (part `i`
/// occupies a contiguous index block, blocks in input order); facets are all
/// transversals.
pub fn turan_complex(orders: &[usize]) -> Result<SimplicialComplex, ComplexError> {
    if orders.len() < 2 {
        return Err(ComplexError::TooFewParts(orders.len()));
    }
    if let Some((index, &order)) = orders.iter().enumerate().find(|(_, &a)| a < 2) {
        return Err(ComplexError::OrderTooSmall { index, order });
    }
    let m: usize = orders.iter().sum();
    if m > MAX_VERTICES {
        return Err(ComplexError::TooManyVertices(m));
    }
    let mut offset = 0;
    let parts: Vec<Vec<usize>> = orders
        .iter()
        .map(|&a| {
            let block = (offset..offset + a).collect();
            offset += a;
            block
        })
        .collect();
    let facets: Vec<Vec<usize>> = parts.into_iter().multi_cartesian_product().collect();
    SimplicialComplex::new(&facets, m)
}

/// `n` distinct `(d-1)`-subsets of `0..m` covering every vertex, drawn
/// deterministically from `seed`.
pub fn random_pure_complex(d: usize, m: usize, n: usize, seed: u64) -> Result<SimplicialComplex, ComplexError> {
    if d < 3 {
        return Err(ComplexError::DimensionTooSmall(d as isize - 2));
    }
    if m > MAX_VERTICES {
        return Err(ComplexError::TooManyVertices(m));
    }
    let size = d - 1;
    let available = counting::binomial(m as u64, size as u64).unwrap_or(u128::MAX);
    if n == 0 || (n as u128) > available {
        return Err(ComplexError::Infeasible(format!("{n} facets requested, {available} exist")));
    }
    if n * size < m {
        return Err(ComplexError::Infeasible(format!("{n} facets of size {size} cannot cover {m} vertices")));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    for _ in 0..RANDOM_COMPLEX_ATTEMPTS {
        let mut chosen = BTreeSet::new();
        while chosen.len() < n {
            chosen.insert(Face::from_vertices(index::sample(&mut rng, m, size)));
        }
        let covered = chosen.iter().fold(Face::EMPTY, |acc, f| acc.union(*f));
        if covered.len() == m {
            let facets: Vec<Vec<usize>> = chosen.iter().map(|f| f.vertices().collect()).collect();
            return SimplicialComplex::new(&facets, m);
        }
    }
    Err(ComplexError::Infeasible(format!(
        "no vertex-covering sample after {RANDOM_COMPLEX_ATTEMPTS} attempts"
    )))
}
