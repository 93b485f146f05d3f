//! The algebra `A = Q / Ann(f)` of a pure complex, described by faces.
//!
//! With `f = sum x_i g_i` the degree-`k` part splits as `A_(0,k)`, spanned by
//! the `k`-vertex faces, and `A_(1,k-1)`, spanned by one operator
//! `X_i * (g_i / w)` for every `(d-k)`-vertex face `w`. Products of basis
//! elements are again basis elements or zero, so multiplication maps are
//! built directly on faces, with no quotient reduction.

use std::collections::{BTreeMap, HashMap};

use num_traits::Zero;
use serde::Serialize;
use thiserror::Error;

use crate::apolarity::{
    self, bidegree_dim, degree_dim, BiMonomial, BigradedForm, Form, HilbertVector, OperatorPolynomial,
};
use crate::counting;
use crate::exactla::{MatrixBuilder, Rational, SparseRationalMatrix};
use crate::lefschetz::LinearForm;
use crate::par;
use crate::simplicial::{Face, SimplicialComplex};

/// Default guard on `dim Q_k` for brute-force computations.
pub const DEFAULT_MAX_ORACLE_DIM: u128 = 50_000;

#[derive(Debug, Clone, Error)]
pub enum GorensteinError {
    #[error("degree {k} out of range for multiplication (socle degree {d})")]
    BadDegree { k: usize, d: usize },
    #[error("linear form has {found_n} + {found_m} coefficients, expected {n} + {m}")]
    FormShape { n: usize, m: usize, found_n: usize, found_m: usize },
    #[error("dim Q_{degree} = {dim} exceeds the limit {limit}")]
    InstanceTooLarge { degree: usize, dim: u128, limit: u128, partial: Box<OracleReport> },
    #[error("Hilbert function value does not fit in 64 bits")]
    Overflow,
}

/// `f = sum_i x_i * prod_{v in g_i} u_v`, facets in sorted order.
pub fn form_from_complex(c: &SimplicialComplex) -> BigradedForm {
    let (n, m) = (c.n(), c.m());
    let terms = c
        .facets()
        .iter()
        .enumerate()
        .map(|(i, &g)| (BiMonomial::from_face(n, m, Some(i), g), Rational::from_integer(1.into())));
    BigradedForm::new(Form::from_terms(n, m, terms)).expect("complex form is nonzero and bihomogeneous")
}

/// The four generator families of `Ann(f)`, each reduced to a finite list.
#[derive(Debug, Clone, Serialize)]
pub struct GradedIdealGenerators {
    /// `X_i X_j` (`i <= j`) and `U_j^2`.
    pub class_a: Vec<OperatorPolynomial>,
    /// Monomials of minimal non-faces.
    pub class_b: Vec<OperatorPolynomial>,
    /// `X_i U_j` with `j` outside facet `i`.
    pub class_c: Vec<OperatorPolynomial>,
    /// `X_i G_i - X_j G_j` with `G_i` the monomial of `g_i` minus the common face.
    pub class_d: Vec<OperatorPolynomial>,
}

impl GradedIdealGenerators {
    pub fn all(&self) -> Vec<OperatorPolynomial> {
        [&self.class_a, &self.class_b, &self.class_c, &self.class_d].into_iter().flatten().cloned().collect()
    }

    pub fn counts(&self) -> GeneratorCounts {
        let mut by_degree = BTreeMap::new();
        for g in self.all() {
            *by_degree.entry(g.degree().expect("homogeneous")).or_insert(0u64) += 1;
        }
        GeneratorCounts {
            class_a: self.class_a.len() as u64,
            class_b: self.class_b.len() as u64,
            class_c: self.class_c.len() as u64,
            class_d: self.class_d.len() as u64,
            by_degree,
        }
    }
}

/// Sizes of the generator families and their degree distribution.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct GeneratorCounts {
    pub class_a: u64,
    pub class_b: u64,
    pub class_c: u64,
    pub class_d: u64,
    pub by_degree: BTreeMap<usize, u64>,
}

pub fn combinatorial_generators(c: &SimplicialComplex) -> GradedIdealGenerators {
    let (n, m) = (c.n(), c.m());
    let mono = OperatorPolynomial::monomial;
    let mut class_a = Vec::new();
    for i in 0..n {
        for j in i..n {
            class_a.push(mono(BiMonomial::x_var(n, m, i).mul(&BiMonomial::x_var(n, m, j))));
        }
    }
    for j in 0..m {
        let u = BiMonomial::u_var(n, m, j);
        class_a.push(mono(u.mul(&u)));
    }
    let class_b = c.minimal_nonfaces(c.d()).into_iter().map(|face| mono(BiMonomial::from_face(n, m, None, face))).collect();
    let mut class_c = Vec::new();
    for (i, &g) in c.facets().iter().enumerate() {
        for j in (0..m).filter(|&j| !g.contains(j)) {
            class_c.push(mono(BiMonomial::x_var(n, m, i).mul(&BiMonomial::u_var(n, m, j))));
        }
    }
    let mut class_d = Vec::new();
    let facets = c.facets();
    for i in 0..n {
        for j in i + 1..n {
            let common = facets[i].intersection(facets[j]);
            class_d.push(OperatorPolynomial::binomial(
                BiMonomial::from_face(n, m, Some(i), facets[i].difference(common)),
                BiMonomial::from_face(n, m, Some(j), facets[j].difference(common)),
            ));
        }
    }
    GradedIdealGenerators { class_a, class_b, class_c, class_d }
}

/// Same as `combinatorial_generators(c).counts()` without building the list.
pub fn generator_counts(c: &SimplicialComplex) -> GeneratorCounts {
    let (n, m, d) = (c.n() as u64, c.m() as u64, c.d());
    let nonfaces = c.minimal_nonfaces(d);
    let mut by_degree = BTreeMap::new();
    *by_degree.entry(2).or_insert(0) += n * (n + 1) / 2 + m + n * (m - (d as u64 - 1));
    for face in &nonfaces {
        *by_degree.entry(face.len()).or_insert(0) += 1;
    }
    let facets = c.facets();
    for i in 0..facets.len() {
        for j in i + 1..facets.len() {
            let common = facets[i].intersection(facets[j]).len();
            *by_degree.entry(d - common).or_insert(0) += 1;
        }
    }
    GeneratorCounts {
        class_a: n * (n + 1) / 2 + m,
        class_b: nonfaces.len() as u64,
        class_c: n * (m - (d as u64 - 1)),
        class_d: n * n.saturating_sub(1) / 2,
        by_degree,
    }
}

/// Basis element of `A_(1,k-1)` for the face `face`: `X_facet` times the
/// monomial of `subface = g_facet \ face`, with `facet` the smallest index
/// containing `face`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct Rep {
    pub facet: usize,
    pub subface: Face,
    pub face: Face,
}

/// Basis element of some level.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum BasisElement {
    /// Class of the monomial of a face, in `A_(0,|F|)`.
    Face(Face),
    /// The representative of a face in `A_(1,.)`.
    Rep(Face),
}

/// Basis of `A_k`: faces first, then representatives.
#[derive(Debug, Clone, Serialize)]
pub struct BasisLevel {
    pub degree: usize,
    pub faces: Vec<Face>,
    pub reps: Vec<Rep>,
    #[serde(skip)]
    face_index: HashMap<Face, usize>,
    #[serde(skip)]
    rep_index: HashMap<Face, usize>,
}

impl BasisLevel {
    pub fn len(&self) -> usize {
        self.faces.len() + self.reps.len()
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }

    pub fn index_of(&self, e: BasisElement) -> Option<usize> {
        match e {
            BasisElement::Face(f) => self.face_index.get(&f).copied(),
            BasisElement::Rep(w) => self.rep_index.get(&w).map(|&r| self.faces.len() + r),
        }
    }

    pub fn element(&self, idx: usize) -> BasisElement {
        if idx < self.faces.len() {
            BasisElement::Face(self.faces[idx])
        } else {
            BasisElement::Rep(self.reps[idx - self.faces.len()].face)
        }
    }

    /// The operator monomial representing basis element `idx`.
    pub fn operator(&self, idx: usize, n: usize, m: usize) -> BiMonomial {
        if idx < self.faces.len() {
            BiMonomial::from_face(n, m, None, self.faces[idx])
        } else {
            let rep = self.reps[idx - self.faces.len()];
            BiMonomial::from_face(n, m, Some(rep.facet), rep.subface)
        }
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct CombinatorialBasis {
    pub n: usize,
    pub m: usize,
    pub d: usize,
    pub levels: Vec<BasisLevel>,
    #[serde(skip)]
    facets: Vec<Face>,
}

impl CombinatorialBasis {
    pub fn level(&self, k: usize) -> &BasisLevel {
        &self.levels[k]
    }

    pub fn facets(&self) -> &[Face] {
        &self.facets
    }

    /// Product of two basis elements: another basis element (coefficient 1) or zero.
    pub fn product(&self, a: BasisElement, b: BasisElement) -> Option<BasisElement> {
        use BasisElement::*;
        match (a, b) {
            (Face(x), Face(y)) => {
                let u = x.union(y);
                let ok = x.is_disjoint(y) && self.facets.iter().any(|g| u.is_subset(*g));
                ok.then_some(Face(u))
            }
            (Face(x), Rep(w)) | (Rep(w), Face(x)) => x.is_subset(w).then_some(Rep(w.difference(x))),
            (Rep(_), Rep(_)) => None,
        }
    }

    /// Matrix of multiplication by `l` from `A_k` to `A_(k+1)` (rows: level `k+1`).
    pub fn multiplication_matrix(&self, l: &LinearForm, k: usize) -> Result<SparseRationalMatrix, GorensteinError> {
        if k >= self.d {
            return Err(GorensteinError::BadDegree { k, d: self.d });
        }
        if l.n() != self.n || l.m() != self.m {
            return Err(GorensteinError::FormShape { n: self.n, m: self.m, found_n: l.n(), found_m: l.m() });
        }
        let (src, dst) = (&self.levels[k], &self.levels[k + 1]);
        let mut b = MatrixBuilder::new(dst.len(), src.len());
        let xs: Vec<(usize, &Rational)> = l.a().iter().enumerate().filter(|(_, c)| !c.is_zero()).collect();
        let us: Vec<(usize, &Rational)> = l.b().iter().enumerate().filter(|(_, c)| !c.is_zero()).collect();
        for (col, face) in src.faces.iter().enumerate() {
            for &(j, coeff) in &us {
                if !face.contains(j) {
                    if let Some(row) = dst.index_of(BasisElement::Face(face.with(j))) {
                        b.add(row, col, coeff.clone());
                    }
                }
            }
            for &(i, coeff) in &xs {
                let g = self.facets[i];
                if face.is_subset(g) {
                    let row = dst.index_of(BasisElement::Rep(g.difference(*face))).expect("faces of g are indexed");
                    b.add(row, col, coeff.clone());
                }
            }
        }
        for (r, rep) in src.reps.iter().enumerate() {
            let col = src.faces.len() + r;
            for &(j, coeff) in &us {
                if rep.face.contains(j) {
                    let row = dst.index_of(BasisElement::Rep(rep.face.without(j))).expect("subfaces are indexed");
                    b.add(row, col, coeff.clone());
                }
            }
        }
        Ok(b.build())
    }

    /// Matrix of the pairing `A_k x A_(d-k) -> A_d`, in the coordinate of the socle generator.
    pub fn pairing_matrix(&self, k: usize) -> Result<SparseRationalMatrix, GorensteinError> {
        if k > self.d {
            return Err(GorensteinError::BadDegree { k, d: self.d });
        }
        let (left, right) = (&self.levels[k], &self.levels[self.d - k]);
        let socle = BasisElement::Rep(Face::EMPTY);
        let mut b = MatrixBuilder::new(left.len(), right.len());
        for r in 0..left.len() {
            for c in 0..right.len() {
                if self.product(left.element(r), right.element(c)) == Some(socle) {
                    b.add(r, c, Rational::from_integer(1.into()));
                }
            }
        }
        Ok(b.build())
    }
}

pub fn combinatorial_basis(c: &SimplicialComplex) -> CombinatorialBasis {
    let d = c.d();
    let levels = (0..=d)
        .map(|k| {
            let faces = c.faces(k);
            let reps: Vec<Rep> = c
                .faces(d - k)
                .into_iter()
                .map(|w| {
                    let facet = c.first_facet_containing(w).expect("faces lie in a facet");
                    Rep { facet, subface: c.facets()[facet].difference(w), face: w }
                })
                .collect();
            let face_index = faces.iter().enumerate().map(|(i, &f)| (f, i)).collect();
            let rep_index = reps.iter().enumerate().map(|(i, r)| (r.face, i)).collect();
            BasisLevel { degree: k, faces, reps, face_index, rep_index }
        })
        .collect();
    CombinatorialBasis { n: c.n(), m: c.m(), d, levels, facets: c.facets().to_vec() }
}

/// `multiplication_matrix` on a freshly built basis.
pub fn multiplication_matrix(
    c: &SimplicialComplex,
    l: &LinearForm,
    k: usize,
) -> Result<SparseRationalMatrix, GorensteinError> {
    combinatorial_basis(c).multiplication_matrix(l, k)
}

/// `h_k = e_k + e_(d-k)`, with the refinement `h_(0,k) = e_k`, `h_(1,k) = e_(d-1-k)`.
pub fn hilbert_combinatorial(c: &SimplicialComplex) -> HilbertVector {
    let fv = c.f_vector();
    let d = c.d();
    let values = (0..=d).map(|k| fv.e(k) + fv.e(d - k)).collect();
    let mut bigraded = BTreeMap::new();
    for j in 0..d {
        bigraded.insert((0, j), fv.e(j));
        bigraded.insert((1, j), fv.e(d - 1 - j));
    }
    HilbertVector::with_bigraded(values, bigraded)
}

/// Hilbert vector of the Turan algebra from elementary symmetric polynomials alone.
pub fn turan_hilbert(orders: &[u64]) -> Result<HilbertVector, GorensteinError> {
    let d = orders.len() + 1;
    let s = |k: usize| -> Result<u128, GorensteinError> {
        if k >= d {
            return Ok(0);
        }
        counting::elementary_symmetric(orders, k).ok_or(GorensteinError::Overflow)
    };
    let values = (0..=d)
        .map(|k| {
            let h = s(k)?.checked_add(s(d - k)?).ok_or(GorensteinError::Overflow)?;
            u64::try_from(h).map_err(|_| GorensteinError::Overflow)
        })
        .collect::<Result<Vec<_>, _>>()?;
    Ok(HilbertVector::new(values))
}

/// Why an algebra fails to be presented by quadrics.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum QuadraticObstruction {
    /// All edges are faces but the set is not: its monomial is a cubic-or-higher generator.
    NonFaceClique { face: Face },
    /// Two facets in different ridge-connected components.
    DisconnectedFacets { first: Face, second: Face },
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct QuadraticPresentation {
    pub presented_by_quadrics: bool,
    pub flag: bool,
    pub facet_connected: bool,
    pub certificate: Option<QuadraticObstruction>,
}

pub fn is_presented_by_quadrics(c: &SimplicialComplex) -> QuadraticPresentation {
    let flag = c.is_flag();
    let conn = c.is_facet_connected();
    let certificate = if let Some(face) = flag.witness {
        Some(QuadraticObstruction::NonFaceClique { face })
    } else {
        conn.witness.map(|(first, second)| QuadraticObstruction::DisconnectedFacets { first, second })
    };
    QuadraticPresentation {
        presented_by_quadrics: flag.flag && conn.connected,
        flag: flag.flag,
        facet_connected: conn.connected,
        certificate,
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct AlgebraSummary {
    pub n: usize,
    pub m: usize,
    pub codimension: usize,
    pub socle_degree: usize,
    pub f_vector: Vec<u64>,
    pub hilbert: HilbertVector,
    pub presented_by_quadrics: bool,
    pub flag: bool,
    pub facet_connected: bool,
    pub certificate: Option<QuadraticObstruction>,
}

pub fn summarize(c: &SimplicialComplex) -> AlgebraSummary {
    let q = is_presented_by_quadrics(c);
    AlgebraSummary {
        n: c.n(),
        m: c.m(),
        codimension: c.n() + c.m(),
        socle_degree: c.d(),
        f_vector: c.f_vector().as_slice().to_vec(),
        hilbert: hilbert_combinatorial(c),
        presented_by_quadrics: q.presented_by_quadrics,
        flag: q.flag,
        facet_connected: q.facet_connected,
        certificate: q.certificate,
    }
}

#[derive(Debug, Clone)]
pub struct OracleConfig {
    pub max_oracle_dim: u128,
    pub seed: u64,
    pub forms: usize,
    pub coeff_bound: u64,
}

impl Default for OracleConfig {
    fn default() -> Self {
        OracleConfig { max_oracle_dim: DEFAULT_MAX_ORACLE_DIM, seed: 0, forms: 3, coeff_bound: 10 }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct RankComparison {
    pub form: usize,
    pub combinatorial: usize,
    pub brute: usize,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct DegreeCheck {
    pub k: usize,
    pub dim_q: u128,
    pub dim_ideal: u128,
    pub dim_generated: u128,
    pub h_combinatorial: u64,
    pub h_brute: u64,
    pub multiplication: Vec<RankComparison>,
}

#[derive(Debug, Clone, Serialize)]
pub struct OracleReport {
    pub n: usize,
    pub m: usize,
    pub d: usize,
    pub max_degree: usize,
    pub generators_checked: usize,
    pub non_annihilating: Vec<OperatorPolynomial>,
    pub degrees: Vec<DegreeCheck>,
    pub mismatches: Vec<String>,
    pub complete: bool,
    pub passed: bool,
}

/// Compares the face description with brute-force apolarity in degrees
/// `0..=min(max_degree, d+1)`: ideal dimensions, Hilbert values, generator
/// annihilation and multiplication ranks for random linear forms.
pub fn oracle_crosscheck(
    c: &SimplicialComplex,
    max_degree: usize,
    config: &OracleConfig,
) -> Result<OracleReport, GorensteinError> {
    let f = form_from_complex(c);
    let (n, m, d) = (c.n(), c.m(), c.d());
    let top = max_degree.min(d + 1);
    let gens = combinatorial_generators(c);
    let all = gens.all();
    let non_annihilating: Vec<OperatorPolynomial> =
        par::map(all.iter().collect(), |g| (!g.annihilates(f.form())).then(|| g.clone())).into_iter().flatten().collect();
    let mut report = OracleReport {
        n,
        m,
        d,
        max_degree: top,
        generators_checked: all.len(),
        mismatches: non_annihilating.iter().map(|g| format!("generator {g} does not annihilate f")).collect(),
        non_annihilating,
        degrees: Vec::new(),
        complete: false,
        passed: false,
    };
    let h_comb = hilbert_combinatorial(c);
    let basis = combinatorial_basis(c);
    let forms: Vec<LinearForm> =
        (0..config.forms).map(|t| LinearForm::random(n, m, config.coeff_bound.max(1), config.seed, t as u64)).collect();
    let form_ops: Vec<OperatorPolynomial> = forms.iter().map(LinearForm::to_operator).collect();
    for k in 0..=top {
        let dim_q = degree_dim(n, m, k);
        if dim_q > config.max_oracle_dim {
            report.passed = false;
            return Err(GorensteinError::InstanceTooLarge {
                degree: k,
                dim: dim_q,
                limit: config.max_oracle_dim,
                partial: Box::new(report),
            });
        }
        let slice = apolarity::annihilator_basis(&f, k);
        let dim_ideal = slice.dim();
        let lower: Vec<OperatorPolynomial> = all.iter().filter(|g| g.degree().is_some_and(|e| e <= k)).cloned().collect();
        let dim_generated = apolarity::ideal_span_dimension(&lower, k, n, m) as u128;
        let h_brute = u64::try_from(dim_q - dim_ideal).map_err(|_| GorensteinError::Overflow)?;
        let h_c = h_comb.get(k);
        if dim_generated != dim_ideal {
            report.mismatches.push(format!("degree {k}: generators span {dim_generated}, dim I_k = {dim_ideal}"));
        }
        if h_brute != h_c {
            report.mismatches.push(format!("degree {k}: h_brute = {h_brute}, h_combinatorial = {h_c}"));
        }
        let mut multiplication = Vec::new();
        if k < d {
            for (t, (l, op)) in forms.iter().zip(&form_ops).enumerate() {
                let combinatorial = basis.multiplication_matrix(l, k)?.rank();
                let brute = apolarity::multiplication_rank_brute(&f, op, k);
                if combinatorial != brute {
                    report.mismatches.push(format!("degree {k}, form {t}: rank {combinatorial} vs brute {brute}"));
                }
                multiplication.push(RankComparison { form: t, combinatorial, brute });
            }
        }
        report.degrees.push(DegreeCheck { k, dim_q, dim_ideal, dim_generated, h_combinatorial: h_c, h_brute, multiplication });
    }
    report.complete = true;
    report.passed = report.mismatches.is_empty();
    Ok(report)
}

/// Checks that a generator list annihilates `f` term by term (monomial action).
pub fn annihilates_all(f: &BigradedForm, gens: &[OperatorPolynomial]) -> bool {
    gens.iter().all(|g| g.annihilates(f.form()))
}

/// `dim I_(i,j)` predicted by duality: `dim Q_(i,j) - h_(i,j)`.
pub fn predicted_ideal_dim(c: &SimplicialComplex, i: usize, j: usize) -> u128 {
    let h = hilbert_combinatorial(c);
    let value = h.bigraded().get(&(i, j)).copied().unwrap_or(0) as u128;
    bidegree_dim(c.n(), c.m(), i, j) - value
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::apolarity::{apply_operator, hilbert_brute, ideal_span_dimension};
    use crate::simplicial::turan_complex;

    fn q(v: i64) -> Rational {
        Rational::from_integer(v.into())
    }

    fn simplex() -> SimplicialComplex {
        SimplicialComplex::new(&[vec![0, 1, 2]], 3).unwrap()
    }

    fn edge() -> SimplicialComplex {
        SimplicialComplex::new(&[vec![0, 1]], 2).unwrap()
    }

    fn hollow_triangle() -> SimplicialComplex {
        SimplicialComplex::new(&[vec![0, 1, 3], vec![1, 2, 4], vec![0, 2, 5]], 6).unwrap()
    }

    fn disjoint_edges() -> SimplicialComplex {
        SimplicialComplex::new(&[vec![0, 1], vec![2, 3]], 4).unwrap()
    }

    #[test]
    fn form_examples() {
        let f = form_from_complex(&simplex());
        assert_eq!(f.form().terms().len(), 1);
        assert_eq!(f.bidegree(), (1, 3));
        assert_eq!(form_from_complex(&turan_complex(&[2, 2]).unwrap()).form().terms().len(), 4);
        let t = form_from_complex(&turan_complex(&[2, 2, 2]).unwrap());
        assert_eq!((t.form().terms().len(), t.bidegree()), (8, (1, 3)));
        let g0 = Form::from_terms(1, 3, [(BiMonomial::new(&[0], &[1, 1, 1]), q(1))]);
        assert_eq!(apply_operator(&BiMonomial::x_var(1, 3, 0), f.form()), g0);
    }

    #[test]
    fn generator_examples() {
        let g = combinatorial_generators(&simplex());
        assert_eq!(g.class_a.len(), 4);
        assert!(g.class_b.is_empty() && g.class_c.is_empty() && g.class_d.is_empty());

        let g = combinatorial_generators(&disjoint_edges());
        let x1u1u2 = BiMonomial::new(&[1, 0], &[1, 1, 0, 0]);
        let x2u3u4 = BiMonomial::new(&[0, 1], &[0, 0, 1, 1]);
        assert_eq!(g.class_d, vec![OperatorPolynomial::binomial(x1u1u2, x2u3u4)]);

        let c = turan_complex(&[2, 2, 2]).unwrap();
        let g = combinatorial_generators(&c);
        assert_eq!(g.class_b.len(), 3);
        assert!(g.class_b.iter().all(|p| p.degree() == Some(2)));
        assert!(annihilates_all(&form_from_complex(&c), &g.all()));
        assert_eq!(g.counts(), generator_counts(&c));
    }

    #[test]
    fn generator_json_shape() {
        let g = combinatorial_generators(&disjoint_edges());
        let v = serde_json::to_value(&g.class_d[0]).unwrap();
        assert_eq!(v["type"], "binomial");
        assert_eq!(v["terms"][0]["coeff"], "1");
        assert_eq!(v["terms"][1]["coeff"], "-1");
        assert_eq!(v["terms"][0]["x_exp"], serde_json::json!([1, 0]));
        assert_eq!(v["terms"][0]["u_exp"], serde_json::json!([1, 1, 0, 0]));
    }

    #[test]
    fn basis_examples() {
        let b = combinatorial_basis(&edge());
        let l1 = b.level(1);
        assert_eq!(l1.faces, vec![Face::singleton(0), Face::singleton(1)]);
        assert_eq!(l1.reps, vec![Rep { facet: 0, subface: Face::EMPTY, face: Face::from_vertices([0, 1]) }]);
        let top = b.level(3);
        assert!(top.faces.is_empty());
        assert_eq!(top.reps.len(), 1);

        let t = turan_complex(&[2, 2, 2]).unwrap();
        let b = combinatorial_basis(&t);
        assert_eq!((b.level(2).faces.len(), b.level(2).reps.len()), (12, 12));
        for level in &b.levels {
            for rep in &level.reps {
                assert_eq!(t.facets()[rep.facet].difference(rep.subface), rep.face);
                assert_eq!(t.first_facet_containing(rep.face), Some(rep.facet));
            }
        }
    }

    #[test]
    fn basis_operators_act_as_described() {
        let c = hollow_triangle();
        let f = form_from_complex(&c);
        let b = combinatorial_basis(&c);
        for level in &b.levels {
            for idx in 0..level.len() {
                let image = apply_operator(&level.operator(idx, c.n(), c.m()), f.form());
                if let BasisElement::Rep(w) = level.element(idx) {
                    let expected = Form::from_terms(c.n(), c.m(), [(BiMonomial::from_face(c.n(), c.m(), None, w), q(1))]);
                    assert_eq!(image, expected);
                }
            }
        }
    }

    #[test]
    fn hilbert_examples() {
        let t = turan_complex(&[2, 2, 2]).unwrap();
        assert_eq!(hilbert_combinatorial(&t).values(), &[1, 14, 24, 14, 1]);
        let big = turan_complex(&[6, 6, 6]).unwrap();
        assert_eq!(hilbert_combinatorial(&big).values(), &[1, 234, 216, 234, 1]);
        assert_eq!(hilbert_combinatorial(&simplex()).values(), &[1, 4, 6, 4, 1]);
        assert_eq!(turan_hilbert(&[6, 6, 6]).unwrap().values(), &[1, 234, 216, 234, 1]);
        assert_eq!(hilbert_combinatorial(&hollow_triangle()), hilbert_brute(&form_from_complex(&hollow_triangle())));
    }

    #[test]
    fn quadric_examples() {
        assert!(is_presented_by_quadrics(&turan_complex(&[2, 3, 2]).unwrap()).presented_by_quadrics);
        let h = is_presented_by_quadrics(&hollow_triangle());
        assert!(!h.presented_by_quadrics);
        assert_eq!(h.certificate, Some(QuadraticObstruction::NonFaceClique { face: Face::from_vertices([0, 1, 2]) }));
        let e = is_presented_by_quadrics(&disjoint_edges());
        assert!(matches!(e.certificate, Some(QuadraticObstruction::DisconnectedFacets { .. })));
    }

    #[test]
    fn multiplication_examples() {
        let b = combinatorial_basis(&edge());
        let l = LinearForm::from_integers(&[1], &[1, 1]);
        let m1 = b.multiplication_matrix(&l, 1).unwrap();
        assert_eq!((m1.rows(), m1.cols(), m1.rank()), (3, 3, 3));
        assert_eq!(m1.rank(), 3);
        let last = b.multiplication_matrix(&l, 2).unwrap();
        assert_eq!((last.rows(), last.rank()), (1, 1));
        assert!(b.multiplication_matrix(&LinearForm::from_integers(&[0], &[0, 0]), 1).unwrap().is_zero());
        assert!(matches!(b.multiplication_matrix(&l, 3), Err(GorensteinError::BadDegree { k: 3, d: 3 })));
    }

    #[test]
    fn pairing_is_perfect() {
        let c = turan_complex(&[2, 2, 2]).unwrap();
        let b = combinatorial_basis(&c);
        let h = hilbert_combinatorial(&c);
        for k in 0..=c.d() {
            assert_eq!(b.pairing_matrix(k).unwrap().rank() as u64, h.get(k));
        }
    }

    #[test]
    fn generators_span_the_ideal_of_small_complexes() {
        for c in [edge(), hollow_triangle(), disjoint_edges()] {
            let f = form_from_complex(&c);
            let all = combinatorial_generators(&c).all();
            for k in 0..=c.d() + 1 {
                let lower: Vec<_> = all.iter().filter(|g| g.degree().unwrap() <= k).cloned().collect();
                let generated = ideal_span_dimension(&lower, k, c.n(), c.m()) as u128;
                assert_eq!(generated, apolarity::annihilator_basis(&f, k).dim(), "k = {k}");
            }
        }
    }

    #[test]
    fn oracle_small_instances() {
        for c in [edge(), hollow_triangle(), turan_complex(&[2, 2, 2]).unwrap()] {
            let report = oracle_crosscheck(&c, 4, &OracleConfig::default()).unwrap();
            assert!(report.passed, "{:?}", report.mismatches);
        }
    }

    #[test]
    fn oracle_guard_keeps_partial_report() {
        let c = turan_complex(&[2, 2, 2]).unwrap();
        let config = OracleConfig { max_oracle_dim: 200, ..OracleConfig::default() };
        match oracle_crosscheck(&c, 4, &config) {
            Err(GorensteinError::InstanceTooLarge { degree, partial, .. }) => {
                // dim Q_2 = 105, dim Q_3 = 560
                assert_eq!(degree, 3);
                assert_eq!(partial.degrees.len(), 3);
                assert!(!partial.complete);
            }
            other => panic!("expected guard, got {other:?}"),
        }
    }

    #[test]
    fn predicted_ideal_dimension_matches_kernel() {
        let c = turan_complex(&[2, 2, 2]).unwrap();
        assert_eq!(apolarity::annihilator_basis(&form_from_complex(&c), 2).dim(), 81);
        let f = form_from_complex(&c);
        for (i, j) in [(0, 2), (1, 1), (1, 2)] {
            let cat = apolarity::catalecticant(&f, i, j).unwrap();
            let kernel = cat.columns.len() - cat.matrix.rank();
            assert_eq!(kernel as u128, predicted_ideal_dim(&c, i, j));
        }
    }
}
