//! Bigraded polynomials and the apolarity action.
//!
//! Forms live in `R = K[x_1..x_n, u_1..u_m]`, operators in
//! `Q = K[X_1..X_n, U_1..U_m]` with `X_i = d/dx_i` and `U_j = d/du_j`
//! (plain differentiation, factorials included). Everything here is the
//! brute-force side: annihilators and Hilbert functions come from ranks of
//! catalecticant matrices, never from the face lattice.

use std::collections::{BTreeMap, HashMap, HashSet};
use std::fmt;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};
use serde::Serialize;
use thiserror::Error;

use crate::counting;
use crate::exactla::{MatrixBuilder, Rational, SparseRationalMatrix, SparseVector};
use crate::par;
use crate::simplicial::Face;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ApolarityError {
    #[error("bidegree ({i}, {j}) outside (0..={d1}, 0..={d2})")]
    BidegreeOutOfRange { i: usize, j: usize, d1: usize, d2: usize },
    #[error("form is not bihomogeneous")]
    NotBihomogeneous,
    #[error("form is zero")]
    ZeroForm,
}

/// Exponent vector over `n` X-type and `m` U-type variables. The derived
/// order is lexicographic on the concatenated vector, X-block first.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct BiMonomial {
    exps: Vec<u32>,
    n: usize,
}

impl BiMonomial {
    pub fn new(x: &[u32], u: &[u32]) -> Self {
        let mut exps = x.to_vec();
        exps.extend_from_slice(u);
        BiMonomial { exps, n: x.len() }
    }

    pub fn one(n: usize, m: usize) -> Self {
        BiMonomial { exps: vec![0; n + m], n }
    }

    pub fn x_var(n: usize, m: usize, i: usize) -> Self {
        let mut b = Self::one(n, m);
        b.exps[i] = 1;
        b
    }

    pub fn u_var(n: usize, m: usize, j: usize) -> Self {
        let mut b = Self::one(n, m);
        b.exps[n + j] = 1;
        b
    }

    /// Square-free U-monomial of a face, optionally times `X_i`.
    pub fn from_face(n: usize, m: usize, x: Option<usize>, face: Face) -> Self {
        let mut b = Self::one(n, m);
        if let Some(i) = x {
            b.exps[i] = 1;
        }
        for v in face.vertices() {
            b.exps[n + v] = 1;
        }
        b
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn m(&self) -> usize {
        self.exps.len() - self.n
    }

    pub fn exponents(&self) -> &[u32] {
        &self.exps
    }

    pub fn x_exponents(&self) -> &[u32] {
        &self.exps[..self.n]
    }

    pub fn u_exponents(&self) -> &[u32] {
        &self.exps[self.n..]
    }

    pub fn bidegree(&self) -> (usize, usize) {
        let sum = |s: &[u32]| s.iter().map(|&e| e as usize).sum::<usize>();
        (sum(self.x_exponents()), sum(self.u_exponents()))
    }

    pub fn degree(&self) -> usize {
        self.exps.iter().map(|&e| e as usize).sum()
    }

    pub fn mul(&self, other: &BiMonomial) -> BiMonomial {
        debug_assert_eq!((self.n, self.exps.len()), (other.n, other.exps.len()));
        BiMonomial { exps: self.exps.iter().zip(&other.exps).map(|(a, b)| a + b).collect(), n: self.n }
    }

    pub fn divides(&self, other: &BiMonomial) -> bool {
        self.exps.iter().zip(&other.exps).all(|(a, b)| a <= b)
    }

    /// Applies this monomial as a differential operator to the monomial
    /// `target`: returns `(prod t!/(t-a)!, target / self)` or `None` when the
    /// derivative vanishes.
    pub fn differentiate(&self, target: &BiMonomial) -> Option<(BigInt, BiMonomial)> {
        if !self.divides(target) {
            return None;
        }
        let mut coeff = BigInt::one();
        let exps = self
            .exps
            .iter()
            .zip(&target.exps)
            .map(|(&a, &t)| {
                for f in (t - a + 1)..=t {
                    coeff *= f;
                }
                t - a
            })
            .collect();
        Some((coeff, BiMonomial { exps, n: self.n }))
    }

    /// The U-support as a face (ignores exponents).
    pub fn u_support(&self) -> Face {
        Face::from_vertices(self.u_exponents().iter().enumerate().filter(|(_, &e)| e > 0).map(|(j, _)| j))
    }

    fn write(&self, f: &mut fmt::Formatter<'_>, upper: bool) -> fmt::Result {
        let (x, u) = if upper { ("X", "U") } else { ("x", "u") };
        let mut first = true;
        for (idx, &e) in self.exps.iter().enumerate() {
            if e == 0 {
                continue;
            }
            if !first {
                write!(f, "*")?;
            }
            first = false;
            let (name, k) = if idx < self.n { (x, idx + 1) } else { (u, idx - self.n + 1) };
            write!(f, "{name}{k}")?;
            if e > 1 {
                write!(f, "^{e}")?;
            }
        }
        if first {
            write!(f, "1")?;
        }
        Ok(())
    }
}

impl fmt::Debug for BiMonomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.write(f, true)
    }
}

/// Exponent vectors of length `len` summing to `k`, in descending lex order.
fn compositions(len: usize, k: usize) -> Vec<Vec<u32>> {
    fn rec(len: usize, k: usize, prefix: &mut Vec<u32>, out: &mut Vec<Vec<u32>>) {
        if prefix.len() + 1 == len {
            prefix.push(k as u32);
            out.push(prefix.clone());
            prefix.pop();
            return;
        }
        for e in (0..=k).rev() {
            prefix.push(e as u32);
            rec(len, k - e, prefix, out);
            prefix.pop();
        }
    }
    let mut out = Vec::new();
    if len == 0 {
        if k == 0 {
            out.push(Vec::new());
        }
        return out;
    }
    rec(len, k, &mut Vec::with_capacity(len), &mut out);
    out
}

/// Monomials of bidegree `(i, j)`, descending lex.
pub fn monomials_of_bidegree(n: usize, m: usize, i: usize, j: usize) -> Vec<BiMonomial> {
    let xs = compositions(n, i);
    let us = compositions(m, j);
    let mut out = Vec::with_capacity(xs.len() * us.len());
    for x in &xs {
        for u in &us {
            out.push(BiMonomial::new(x, u));
        }
    }
    out
}

/// Monomials of total degree `k`, descending lex.
pub fn monomials_of_degree(n: usize, m: usize, k: usize) -> Vec<BiMonomial> {
    compositions(n + m, k).into_iter().map(|exps| BiMonomial { exps, n }).collect()
}

/// `dim Q_(i,j)`.
pub fn bidegree_dim(n: usize, m: usize, i: usize, j: usize) -> u128 {
    counting::monomial_count(n, i).unwrap_or(u128::MAX).saturating_mul(counting::monomial_count(m, j).unwrap_or(u128::MAX))
}

/// `dim Q_k`.
pub fn degree_dim(n: usize, m: usize, k: usize) -> u128 {
    counting::monomial_count(n + m, k).unwrap_or(u128::MAX)
}

/// Divisors of `t` with bidegree `(i, j)` (or any bidegree of total degree `i + j`
/// when `split` is false).
fn divisors(t: &BiMonomial, i: usize, j: usize, split: bool) -> Vec<BiMonomial> {
    let support: Vec<usize> = (0..t.exps.len()).filter(|&v| t.exps[v] > 0).collect();
    let mut out = Vec::new();
    let mut current = vec![0u32; t.exps.len()];
    #[allow(clippy::too_many_arguments)]
    fn rec(
        t: &BiMonomial,
        support: &[usize],
        pos: usize,
        left_x: usize,
        left_u: usize,
        split: bool,
        current: &mut Vec<u32>,
        out: &mut Vec<BiMonomial>,
    ) {
        if pos == support.len() {
            if left_x == 0 && left_u == 0 {
                out.push(BiMonomial { exps: current.clone(), n: t.n });
            }
            return;
        }
        let v = support[pos];
        let is_x = v < t.n;
        let budget = if !split || is_x { left_x } else { left_u };
        for e in 0..=(t.exps[v] as usize).min(budget) {
            current[v] = e as u32;
            let (lx, lu) = if !split || is_x { (left_x - e, left_u) } else { (left_x, left_u - e) };
            rec(t, support, pos + 1, lx, lu, split, current, out);
        }
        current[v] = 0;
    }
    if split {
        rec(t, &support, 0, i, j, true, &mut current, &mut out);
    } else {
        rec(t, &support, 0, i + j, 0, false, &mut current, &mut out);
    }
    out
}

/// Polynomial in `R`; not necessarily homogeneous.
#[derive(Clone, PartialEq, Eq)]
pub struct Form {
    n: usize,
    m: usize,
    terms: BTreeMap<BiMonomial, Rational>,
}

impl Form {
    pub fn zero(n: usize, m: usize) -> Self {
        Form { n, m, terms: BTreeMap::new() }
    }

    pub fn from_terms<I: IntoIterator<Item = (BiMonomial, Rational)>>(n: usize, m: usize, terms: I) -> Self {
        let mut f = Form::zero(n, m);
        for (mono, c) in terms {
            f.add_term(mono, c);
        }
        f
    }

    pub fn add_term(&mut self, mono: BiMonomial, c: Rational) {
        debug_assert_eq!((mono.n(), mono.m()), (self.n, self.m));
        let entry = self.terms.entry(mono).or_insert_with(Rational::zero);
        *entry += c;
        if entry.is_zero() {
            self.terms.retain(|_, v| !v.is_zero());
        }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn m(&self) -> usize {
        self.m
    }

    pub fn terms(&self) -> &BTreeMap<BiMonomial, Rational> {
        &self.terms
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// Common bidegree of all terms, `None` for the zero form or mixed bidegrees.
    pub fn bidegree(&self) -> Option<(usize, usize)> {
        let mut it = self.terms.keys().map(BiMonomial::bidegree);
        let first = it.next()?;
        it.all(|b| b == first).then_some(first)
    }
}

impl fmt::Debug for Form {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write_poly(f, &self.terms, false)
    }
}

fn write_poly(f: &mut fmt::Formatter<'_>, terms: &BTreeMap<BiMonomial, Rational>, upper: bool) -> fmt::Result {
    if terms.is_empty() {
        return write!(f, "0");
    }
    for (idx, (mono, c)) in terms.iter().rev().enumerate() {
        let magnitude = c.abs();
        match (idx, c.is_negative()) {
            (0, true) => write!(f, "-")?,
            (0, false) => {}
            (_, true) => write!(f, " - ")?,
            (_, false) => write!(f, " + ")?,
        }
        if !magnitude.is_one() {
            write!(f, "{magnitude}*")?;
        }
        mono.write(f, upper)?;
    }
    Ok(())
}

/// A nonzero bihomogeneous form of bidegree `(d1, d2)`.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct BigradedForm {
    form: Form,
    bidegree: (usize, usize),
}

impl BigradedForm {
    pub fn new(form: Form) -> Result<Self, ApolarityError> {
        if form.is_zero() {
            return Err(ApolarityError::ZeroForm);
        }
        let bidegree = form.bidegree().ok_or(ApolarityError::NotBihomogeneous)?;
        Ok(BigradedForm { form, bidegree })
    }

    pub fn form(&self) -> &Form {
        &self.form
    }

    pub fn bidegree(&self) -> (usize, usize) {
        self.bidegree
    }

    pub fn socle_degree(&self) -> usize {
        self.bidegree.0 + self.bidegree.1
    }

    pub fn n(&self) -> usize {
        self.form.n
    }

    pub fn m(&self) -> usize {
        self.form.m
    }
}

/// Polynomial in `Q`.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct OperatorPolynomial {
    n: usize,
    m: usize,
    terms: BTreeMap<BiMonomial, Rational>,
}

impl OperatorPolynomial {
    pub fn zero(n: usize, m: usize) -> Self {
        OperatorPolynomial { n, m, terms: BTreeMap::new() }
    }

    pub fn monomial(mono: BiMonomial) -> Self {
        let (n, m) = (mono.n(), mono.m());
        let mut p = Self::zero(n, m);
        p.terms.insert(mono, Rational::one());
        p
    }

    /// `a - b`.
    pub fn binomial(a: BiMonomial, b: BiMonomial) -> Self {
        let mut p = Self::monomial(a);
        p.add_term(b, -Rational::one());
        p
    }

    pub fn from_terms<I: IntoIterator<Item = (BiMonomial, Rational)>>(n: usize, m: usize, terms: I) -> Self {
        let mut p = Self::zero(n, m);
        for (mono, c) in terms {
            p.add_term(mono, c);
        }
        p
    }

    pub fn add_term(&mut self, mono: BiMonomial, c: Rational) {
        let entry = self.terms.entry(mono).or_insert_with(Rational::zero);
        *entry += c;
        if entry.is_zero() {
            self.terms.retain(|_, v| !v.is_zero());
        }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn m(&self) -> usize {
        self.m
    }

    pub fn terms(&self) -> &BTreeMap<BiMonomial, Rational> {
        &self.terms
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_monomial(&self) -> bool {
        self.terms.len() == 1
    }

    /// Total degree when homogeneous.
    pub fn degree(&self) -> Option<usize> {
        let mut it = self.terms.keys().map(BiMonomial::degree);
        let first = it.next()?;
        it.all(|d| d == first).then_some(first)
    }

    pub fn bidegree(&self) -> Option<(usize, usize)> {
        let mut it = self.terms.keys().map(BiMonomial::bidegree);
        let first = it.next()?;
        it.all(|b| b == first).then_some(first)
    }

    pub fn mul(&self, other: &OperatorPolynomial) -> OperatorPolynomial {
        let mut out = Self::zero(self.n, self.m);
        for (a, ca) in &self.terms {
            for (b, cb) in &other.terms {
                out.add_term(a.mul(b), ca * cb);
            }
        }
        out
    }

    pub fn mul_monomial(&self, mono: &BiMonomial) -> OperatorPolynomial {
        OperatorPolynomial {
            n: self.n,
            m: self.m,
            terms: self.terms.iter().map(|(a, c)| (a.mul(mono), c.clone())).collect(),
        }
    }

    pub fn pow(&self, e: usize) -> OperatorPolynomial {
        let mut out = Self::monomial(BiMonomial::one(self.n, self.m));
        for _ in 0..e {
            out = out.mul(self);
        }
        out
    }

    /// Applies the operator to `f` by differentiation.
    pub fn apply(&self, f: &Form) -> Form {
        let mut out = Form::zero(f.n, f.m);
        for (op, c) in &self.terms {
            for (mono, value) in apply_operator(op, f).terms {
                out.add_term(mono, c * value);
            }
        }
        out
    }

    pub fn annihilates(&self, f: &Form) -> bool {
        self.apply(f).is_zero()
    }
}

impl fmt::Debug for OperatorPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write_poly(f, &self.terms, true)
    }
}

/// `{"type": "monomial"|"binomial"|"polynomial", "terms": [{"coeff", "x_exp", "u_exp"}]}`.
impl Serialize for OperatorPolynomial {
    fn serialize<S: serde::Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        use serde::ser::SerializeStruct;
        #[derive(Serialize)]
        struct Term<'a> {
            coeff: String,
            x_exp: &'a [u32],
            u_exp: &'a [u32],
        }
        let kind = match self.terms.len() {
            1 => "monomial",
            2 => "binomial",
            _ => "polynomial",
        };
        let terms: Vec<Term> = self
            .terms
            .iter()
            .rev()
            .map(|(mono, c)| Term { coeff: c.to_string(), x_exp: mono.x_exponents(), u_exp: mono.u_exponents() })
            .collect();
        let mut st = s.serialize_struct("OperatorPolynomial", 2)?;
        st.serialize_field("type", kind)?;
        st.serialize_field("terms", &terms)?;
        st.end()
    }
}

impl fmt::Display for OperatorPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Debug::fmt(self, f)
    }
}

/// Applies a monomial differential operator to `f`.
pub fn apply_operator(op: &BiMonomial, f: &Form) -> Form {
    let mut out = Form::zero(f.n, f.m);
    for (mono, c) in &f.terms {
        if let Some((factor, rest)) = op.differentiate(mono) {
            out.add_term(rest, c * Rational::from_integer(factor));
        }
    }
    out
}

/// Matrix of `Q_(i,j) -> R_(d1-i, d2-j)`, `alpha -> alpha(f)`.
///
/// Columns are all monomials of `Q_(i,j)`; rows are only the monomials of
/// `R_(d1-i, d2-j)` that occur in some image (the omitted rows are zero).
#[derive(Debug, Clone)]
pub struct CatalecticantMatrix {
    pub bidegree: (usize, usize),
    pub columns: Vec<BiMonomial>,
    pub rows: Vec<BiMonomial>,
    pub matrix: SparseRationalMatrix,
}

pub fn catalecticant(f: &BigradedForm, i: usize, j: usize) -> Result<CatalecticantMatrix, ApolarityError> {
    let (d1, d2) = f.bidegree;
    if i > d1 || j > d2 {
        return Err(ApolarityError::BidegreeOutOfRange { i, j, d1, d2 });
    }
    let columns = monomials_of_bidegree(f.n(), f.m(), i, j);
    let col_index: HashMap<&BiMonomial, usize> = columns.iter().enumerate().map(|(c, mono)| (mono, c)).collect();
    let (rows, matrix) = evaluation_matrix(f.form(), i, j, true, |alpha| col_index[alpha], columns.len());
    Ok(CatalecticantMatrix { bidegree: (i, j), columns, rows, matrix })
}

/// Builds the evaluation matrix from term divisors; `column` maps a divisor to its column.
fn evaluation_matrix(
    f: &Form,
    i: usize,
    j: usize,
    split: bool,
    mut column: impl FnMut(&BiMonomial) -> usize,
    cols: usize,
) -> (Vec<BiMonomial>, SparseRationalMatrix) {
    let mut entries = Vec::new();
    for (t, c) in &f.terms {
        for alpha in divisors(t, i, j, split) {
            let (factor, image) = alpha.differentiate(t).expect("divisor");
            entries.push((image, column(&alpha), c * Rational::from_integer(factor)));
        }
    }
    let mut rows: Vec<BiMonomial> = entries.iter().map(|(img, _, _)| img.clone()).collect();
    rows.sort_unstable_by(|a, b| b.cmp(a));
    rows.dedup();
    let row_index: HashMap<&BiMonomial, usize> = rows.iter().enumerate().map(|(r, mono)| (mono, r)).collect();
    let mut b = MatrixBuilder::new(rows.len(), cols);
    for (img, col, v) in entries {
        b.add(row_index[&img], col, v);
    }
    let matrix = b.build();
    (rows, matrix)
}

/// Rank of `alpha -> alpha(g)` on `Q_k` for an arbitrary form `g`.
pub fn total_catalecticant_rank(g: &Form, k: usize) -> usize {
    let mut index: HashMap<BiMonomial, usize> = HashMap::new();
    for t in g.terms.keys() {
        for alpha in divisors(t, k, 0, false) {
            let next = index.len();
            index.entry(alpha).or_insert(next);
        }
    }
    let (_, matrix) = evaluation_matrix(g, k, 0, false, |alpha| index[alpha], index.len());
    matrix.rank()
}

/// Rank of multiplication by `op` from `A_k` to `A_(k + deg op)`, computed
/// as the rank of `alpha -> alpha(op(f))` on `Q_k`.
pub fn multiplication_rank_brute(f: &BigradedForm, op: &OperatorPolynomial, k: usize) -> usize {
    total_catalecticant_rank(&op.apply(f.form()), k)
}

/// Rank of the pairing `Q_k x Q_(d-k) -> K`, `(alpha, beta) -> (alpha beta)(f)`.
pub fn pairing_rank_brute(f: &BigradedForm, k: usize) -> usize {
    let d = f.socle_degree();
    assert!(k <= d, "pairing degree {k} exceeds socle degree {d}");
    let mut rows: HashMap<BiMonomial, usize> = HashMap::new();
    let mut cols: HashMap<BiMonomial, usize> = HashMap::new();
    let mut entries = Vec::new();
    for (t, c) in &f.form.terms {
        // (alpha beta)(t) = prod t_v! whenever alpha beta = t
        let (scalar, _) = t.differentiate(t).expect("self");
        for alpha in divisors(t, k, 0, false) {
            let (_, beta) = alpha.differentiate(t).expect("divisor");
            let next = rows.len();
            let r = *rows.entry(alpha).or_insert(next);
            let next = cols.len();
            let col = *cols.entry(beta).or_insert(next);
            entries.push((r, col, c * Rational::from_integer(scalar.clone())));
        }
    }
    let mut b = MatrixBuilder::new(rows.len(), cols.len());
    for (r, col, v) in entries {
        b.add(r, col, v);
    }
    b.build().rank()
}

/// One bidegree component of `I_k = Ann(f)_k`.
#[derive(Debug, Clone)]
pub enum AnnihilatorComponent {
    /// `I_(i,j) = Q_(i,j)` because `i > d1` or `j > d2`.
    Full { bidegree: (usize, usize), dim: u128 },
    /// Kernel of the catalecticant, in the coordinates of `columns`.
    Kernel { bidegree: (usize, usize), columns: Vec<BiMonomial>, basis: Vec<SparseVector> },
}

impl AnnihilatorComponent {
    pub fn bidegree(&self) -> (usize, usize) {
        match self {
            AnnihilatorComponent::Full { bidegree, .. } | AnnihilatorComponent::Kernel { bidegree, .. } => *bidegree,
        }
    }

    pub fn dim(&self) -> u128 {
        match self {
            AnnihilatorComponent::Full { dim, .. } => *dim,
            AnnihilatorComponent::Kernel { basis, .. } => basis.len() as u128,
        }
    }
}

#[derive(Debug, Clone)]
pub struct AnnihilatorSlice {
    pub degree: usize,
    pub n: usize,
    pub m: usize,
    pub components: Vec<AnnihilatorComponent>,
}

impl AnnihilatorSlice {
    pub fn dim(&self) -> u128 {
        self.components.iter().map(AnnihilatorComponent::dim).sum()
    }

    /// The basis as operator polynomials; full components expand to all monomials.
    pub fn polynomials(&self) -> Vec<OperatorPolynomial> {
        let mut out = Vec::new();
        for comp in &self.components {
            match comp {
                AnnihilatorComponent::Full { bidegree: (i, j), .. } => {
                    out.extend(monomials_of_bidegree(self.n, self.m, *i, *j).into_iter().map(OperatorPolynomial::monomial));
                }
                AnnihilatorComponent::Kernel { columns, basis, .. } => {
                    out.extend(basis.iter().map(|v| {
                        OperatorPolynomial::from_terms(
                            self.n,
                            self.m,
                            v.entries().iter().map(|(c, q)| (columns[*c].clone(), q.clone())),
                        )
                    }));
                }
            }
        }
        out
    }
}

/// Basis of `I_k`, one component per bidegree `(i, k - i)`.
pub fn annihilator_basis(f: &BigradedForm, k: usize) -> AnnihilatorSlice {
    let (d1, d2) = f.bidegree;
    let components = par::map((0..=k).collect(), |i| {
        let j = k - i;
        if i > d1 || j > d2 {
            AnnihilatorComponent::Full { bidegree: (i, j), dim: bidegree_dim(f.n(), f.m(), i, j) }
        } else {
            let cat = catalecticant(f, i, j).expect("in range");
            let basis = cat.matrix.kernel_basis();
            AnnihilatorComponent::Kernel { bidegree: (i, j), columns: cat.columns, basis }
        }
    });
    AnnihilatorSlice { degree: k, n: f.n(), m: f.m(), components }
}

/// Hilbert vector `(h_0, ..., h_d)` with optional bigraded refinement `h_(i,j)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct HilbertVector {
    values: Vec<u64>,
    bigraded: BTreeMap<(usize, usize), u64>,
}

impl HilbertVector {
    pub fn new(values: Vec<u64>) -> Self {
        HilbertVector { values, bigraded: BTreeMap::new() }
    }

    pub fn with_bigraded(values: Vec<u64>, bigraded: BTreeMap<(usize, usize), u64>) -> Self {
        HilbertVector { values, bigraded }
    }

    pub fn values(&self) -> &[u64] {
        &self.values
    }

    pub fn get(&self, k: usize) -> u64 {
        self.values.get(k).copied().unwrap_or(0)
    }

    pub fn socle_degree(&self) -> usize {
        self.values.len().saturating_sub(1)
    }

    pub fn bigraded(&self) -> &BTreeMap<(usize, usize), u64> {
        &self.bigraded
    }
}

impl Serialize for HilbertVector {
    fn serialize<S: serde::Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        self.values.serialize(s)
    }
}

/// Hilbert vector from catalecticant ranks: `h_(i,j) = rank` of the `(i, j)` catalecticant.
pub fn hilbert_brute(f: &BigradedForm) -> HilbertVector {
    let (d1, d2) = f.bidegree;
    let pairs: Vec<(usize, usize)> = (0..=d1).flat_map(|i| (0..=d2).map(move |j| (i, j))).collect();
    let ranks = par::map(pairs.clone(), |(i, j)| catalecticant(f, i, j).expect("in range").matrix.rank() as u64);
    let bigraded: BTreeMap<(usize, usize), u64> = pairs.into_iter().zip(ranks).collect();
    let mut values = vec![0u64; d1 + d2 + 1];
    for (&(i, j), &h) in &bigraded {
        values[i + j] += h;
    }
    HilbertVector::with_bigraded(values, bigraded)
}

/// `dim` of the degree-`k` part of the ideal generated by homogeneous
/// `generators` of degree at most `k`: the span of all `mu * g` with
/// `deg(mu * g) = k`.
///
/// Monomial products are counted directly; the remaining products are
/// reduced modulo those monomials before an exact rank computation.
pub fn ideal_span_dimension(generators: &[OperatorPolynomial], k: usize, n: usize, m: usize) -> usize {
    let mut multipliers: HashMap<usize, Vec<BiMonomial>> = HashMap::new();
    let mut monomials: HashSet<BiMonomial> = HashSet::new();
    let mut polys: Vec<OperatorPolynomial> = Vec::new();
    for g in generators.iter().filter(|g| !g.is_zero()) {
        let e = g.degree().expect("generators must be homogeneous");
        assert!(e <= k, "generator of degree {e} exceeds target degree {k}");
        let mus = multipliers.entry(k - e).or_insert_with(|| monomials_of_degree(n, m, k - e));
        if g.is_monomial() {
            let (mono, _) = g.terms.iter().next().expect("one term");
            monomials.extend(mus.iter().map(|mu| mono.mul(mu)));
        } else {
            polys.extend(mus.iter().map(|mu| g.mul_monomial(mu)));
        }
    }
    let mut index: HashMap<&BiMonomial, usize> = HashMap::new();
    for p in &polys {
        for mono in p.terms.keys() {
            if !monomials.contains(mono) {
                let next = index.len();
                index.entry(mono).or_insert(next);
            }
        }
    }
    let mut b = MatrixBuilder::new(polys.len(), index.len());
    for (r, p) in polys.iter().enumerate() {
        for (mono, c) in &p.terms {
            if let Some(&col) = index.get(mono) {
                b.add(r, col, c.clone());
            }
        }
    }
    monomials.len() + b.build().rank()
}

/// Number of minimal generators of `Ann(f)` in each degree `2..=d+1`.
///
/// The part of the ideal generated by `I_(<k)` in degree `k` is `Q_1 I_(k-1)`,
/// so the count is `dim I_k - dim span(Q_1 I_(k-1))`.
pub fn minimal_generator_degrees(f: &BigradedForm) -> BTreeMap<usize, u64> {
    let d = f.socle_degree();
    let slices: Vec<AnnihilatorSlice> = (1..=d + 1).map(|k| annihilator_basis(f, k)).collect();
    let mut out = BTreeMap::new();
    for k in 2..=d + 1 {
        let lower = slices[k - 2].polynomials();
        let generated = ideal_span_dimension(&lower, k, f.n(), f.m()) as u128;
        out.insert(k, (slices[k - 1].dim() - generated) as u64);
    }
    out
}
