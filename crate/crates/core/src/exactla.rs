//! Exact sparse linear algebra over the rationals.
//!
//! Every routine clears denominators row by row and then eliminates over the
//! integers without fractions: a row update is `r <- (p/g) r - (a/g) p` with
//! `g = gcd(p, a)`, followed by division by the row content. Rank uses
//! Markowitz-style pivoting on sparse rows and falls back to dense Bareiss
//! elimination on dense inputs. Kernels come from a column-ordered
//! Gauss-Jordan pass, which makes them the unique reduced echelon basis.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt::Write as _;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Zero};
use thiserror::Error;

pub type Rational = BigRational;

/// Density above which [`SparseRationalMatrix::rank`] switches to dense elimination.
pub const DEFAULT_DENSE_THRESHOLD: f64 = 0.2;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum LinalgError {
    #[error("vector {index} has length {found}, expected {expected}")]
    DimensionMismatch { index: usize, expected: usize, found: usize },
    #[error("cannot multiply {0}x{1} by {2}x{3}")]
    ShapeMismatch(usize, usize, usize, usize),
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub enum RankStrategy {
    /// Dense Bareiss when `nnz / (rows * cols)` exceeds the threshold, sparse otherwise.
    Auto { dense_threshold: f64 },
    Sparse,
    Dense,
}

impl Default for RankStrategy {
    fn default() -> Self {
        RankStrategy::Auto { dense_threshold: DEFAULT_DENSE_THRESHOLD }
    }
}

/// Sparse rational vector; entries sorted by index, zeros absent.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct SparseVector {
    len: usize,
    entries: Vec<(usize, Rational)>,
}

impl SparseVector {
    pub fn new(len: usize, mut entries: Vec<(usize, Rational)>) -> Self {
        entries.retain(|(_, v)| !v.is_zero());
        entries.sort_by_key(|(i, _)| *i);
        debug_assert!(entries.windows(2).all(|w| w[0].0 < w[1].0));
        debug_assert!(entries.last().is_none_or(|(i, _)| *i < len));
        SparseVector { len, entries }
    }

    pub fn from_dense(values: &[Rational]) -> Self {
        let entries = values
            .iter()
            .enumerate()
            .filter(|(_, v)| !v.is_zero())
            .map(|(i, v)| (i, v.clone()))
            .collect();
        SparseVector { len: values.len(), entries }
    }

    pub fn len(&self) -> usize {
        self.len
    }

    pub fn is_empty(&self) -> bool {
        self.len == 0
    }

    pub fn entries(&self) -> &[(usize, Rational)] {
        &self.entries
    }

    pub fn get(&self, i: usize) -> Rational {
        match self.entries.binary_search_by_key(&i, |(j, _)| *j) {
            Ok(pos) => self.entries[pos].1.clone(),
            Err(_) => Rational::zero(),
        }
    }

    pub fn to_dense(&self) -> Vec<Rational> {
        let mut out = vec![Rational::zero(); self.len];
        for (i, v) in &self.entries {
            out[*i] = v.clone();
        }
        out
    }
}

/// Accumulates entries; order of insertion does not matter.
#[derive(Debug, Clone)]
pub struct MatrixBuilder {
    rows: usize,
    cols: usize,
    entries: BTreeMap<(usize, usize), Rational>,
}

impl MatrixBuilder {
    pub fn new(rows: usize, cols: usize) -> Self {
        MatrixBuilder { rows, cols, entries: BTreeMap::new() }
    }

    /// Adds `value` to entry `(r, c)`.
    pub fn add(&mut self, r: usize, c: usize, value: Rational) -> &mut Self {
        assert!(r < self.rows && c < self.cols, "entry ({r}, {c}) out of range");
        if !value.is_zero() {
            *self.entries.entry((r, c)).or_insert_with(Rational::zero) += value;
        }
        self
    }

    pub fn build(self) -> SparseRationalMatrix {
        let mut data = vec![Vec::new(); self.rows];
        for ((r, c), v) in self.entries {
            if !v.is_zero() {
                data[r].push((c, v));
            }
        }
        SparseRationalMatrix { rows: self.rows, cols: self.cols, data }
    }
}

/// Row-major sparse matrix; each row sorted by column with zeros absent.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SparseRationalMatrix {
    rows: usize,
    cols: usize,
    data: Vec<Vec<(usize, Rational)>>,
}

impl SparseRationalMatrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        SparseRationalMatrix { rows, cols, data: vec![Vec::new(); rows] }
    }

    pub fn identity(n: usize) -> Self {
        let mut b = MatrixBuilder::new(n, n);
        for i in 0..n {
            b.add(i, i, Rational::one());
        }
        b.build()
    }

    pub fn from_dense(rows: &[Vec<Rational>], cols: usize) -> Result<Self, LinalgError> {
        let mut b = MatrixBuilder::new(rows.len(), cols);
        for (r, row) in rows.iter().enumerate() {
            if row.len() != cols {
                return Err(LinalgError::DimensionMismatch { index: r, expected: cols, found: row.len() });
            }
            for (c, v) in row.iter().enumerate() {
                b.add(r, c, v.clone());
            }
        }
        Ok(b.build())
    }

    pub fn from_integers(rows: &[Vec<i64>]) -> Self {
        let cols = rows.first().map_or(0, Vec::len);
        let dense: Vec<Vec<Rational>> = rows
            .iter()
            .map(|r| r.iter().map(|&v| Rational::from_integer(v.into())).collect())
            .collect();
        Self::from_dense(&dense, cols).expect("ragged integer matrix")
    }

    pub fn from_sparse_rows(rows: &[SparseVector], cols: usize) -> Result<Self, LinalgError> {
        let mut data = Vec::with_capacity(rows.len());
        for (index, row) in rows.iter().enumerate() {
            if row.len != cols {
                return Err(LinalgError::DimensionMismatch { index, expected: cols, found: row.len });
            }
            data.push(row.entries.clone());
        }
        Ok(SparseRationalMatrix { rows: rows.len(), cols, data })
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn nnz(&self) -> usize {
        self.data.iter().map(Vec::len).sum()
    }

    pub fn density(&self) -> f64 {
        if self.rows == 0 || self.cols == 0 {
            return 0.0;
        }
        self.nnz() as f64 / (self.rows as f64 * self.cols as f64)
    }

    pub fn row(&self, r: usize) -> &[(usize, Rational)] {
        &self.data[r]
    }

    pub fn get(&self, r: usize, c: usize) -> Rational {
        match self.data[r].binary_search_by_key(&c, |(j, _)| *j) {
            Ok(pos) => self.data[r][pos].1.clone(),
            Err(_) => Rational::zero(),
        }
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(Vec::is_empty)
    }

    pub fn transpose(&self) -> Self {
        let mut data = vec![Vec::new(); self.cols];
        for (r, row) in self.data.iter().enumerate() {
            for (c, v) in row {
                data[*c].push((r, v.clone()));
            }
        }
        SparseRationalMatrix { rows: self.cols, cols: self.rows, data }
    }

    pub fn mul(&self, other: &SparseRationalMatrix) -> Result<SparseRationalMatrix, LinalgError> {
        if self.cols != other.rows {
            return Err(LinalgError::ShapeMismatch(self.rows, self.cols, other.rows, other.cols));
        }
        let mut data = Vec::with_capacity(self.rows);
        for row in &self.data {
            let mut acc: BTreeMap<usize, Rational> = BTreeMap::new();
            for (k, a) in row {
                for (c, b) in &other.data[*k] {
                    *acc.entry(*c).or_insert_with(Rational::zero) += a * b;
                }
            }
            data.push(acc.into_iter().filter(|(_, v)| !v.is_zero()).collect());
        }
        Ok(SparseRationalMatrix { rows: self.rows, cols: other.cols, data })
    }

    pub fn mul_vec(&self, v: &[Rational]) -> Result<Vec<Rational>, LinalgError> {
        if v.len() != self.cols {
            return Err(LinalgError::DimensionMismatch { index: 0, expected: self.cols, found: v.len() });
        }
        Ok(self
            .data
            .iter()
            .map(|row| row.iter().fold(Rational::zero(), |acc, (c, a)| acc + a * &v[*c]))
            .collect())
    }

    pub fn to_dense(&self) -> Vec<Vec<Rational>> {
        let mut out = vec![vec![Rational::zero(); self.cols]; self.rows];
        for (r, row) in self.data.iter().enumerate() {
            for (c, v) in row {
                out[r][*c] = v.clone();
            }
        }
        out
    }

    /// MatrixMarket coordinate dump (1-based indices), for inspection only.
    pub fn to_matrix_market(&self) -> String {
        let mut s = String::from("%%MatrixMarket matrix coordinate rational general\n");
        let _ = writeln!(s, "{} {} {}", self.rows, self.cols, self.nnz());
        for (r, row) in self.data.iter().enumerate() {
            for (c, v) in row {
                let _ = writeln!(s, "{} {} {}", r + 1, c + 1, v);
            }
        }
        s
    }

    pub fn rank(&self) -> usize {
        self.rank_with(RankStrategy::default())
    }

    pub fn rank_with(&self, strategy: RankStrategy) -> usize {
        let dense = match strategy {
            RankStrategy::Auto { dense_threshold } => self.density() > dense_threshold,
            RankStrategy::Sparse => false,
            RankStrategy::Dense => true,
        };
        let rows: Vec<IntRow> = self.data.iter().filter(|r| !r.is_empty()).map(|r| integer_row(r)).collect();
        if dense {
            dense_bareiss_rank(rows, self.cols)
        } else {
            sparse_markowitz_rank(rows, self.cols)
        }
    }

    /// Basis of the right null space in reduced echelon form: one vector per
    /// free column `f`, with entry 1 at `f`, zeros at the other free columns.
    pub fn kernel_basis(&self) -> Vec<SparseVector> {
        let rows: Vec<IntRow> = self.data.iter().filter(|r| !r.is_empty()).map(|r| integer_row(r)).collect();
        let (pivots, reduced) = gauss_jordan(rows, self.cols);
        let pivot_cols: BTreeSet<usize> = pivots.iter().map(|(c, _)| *c).collect();
        let mut basis = Vec::with_capacity(self.cols - pivots.len());
        for free in (0..self.cols).filter(|c| !pivot_cols.contains(c)) {
            let mut entries = vec![(free, Rational::one())];
            for (pc, r) in &pivots {
                let row = &reduced[*r];
                if let Ok(pos) = row.binary_search_by_key(&free, |(j, _)| *j) {
                    let lead = lookup(row, *pc).expect("pivot entry");
                    entries.push((*pc, -Rational::new(row[pos].1.clone(), lead.clone())));
                }
            }
            basis.push(SparseVector::new(self.cols, entries));
        }
        basis
    }
}

/// Dimension of the span of equal-length vectors.
pub fn span_dimension(vectors: &[Vec<Rational>]) -> Result<usize, LinalgError> {
    let Some(first) = vectors.first() else {
        return Ok(0);
    };
    Ok(SparseRationalMatrix::from_dense(vectors, first.len())?.rank())
}

pub fn span_dimension_sparse(len: usize, vectors: &[SparseVector]) -> Result<usize, LinalgError> {
    Ok(SparseRationalMatrix::from_sparse_rows(vectors, len)?.rank())
}

type IntRow = Vec<(usize, BigInt)>;

fn lookup(row: &IntRow, c: usize) -> Option<&BigInt> {
    row.binary_search_by_key(&c, |(j, _)| *j).ok().map(|p| &row[p].1)
}

/// Scales a rational row to a primitive integer row.
fn integer_row(row: &[(usize, Rational)]) -> IntRow {
    let lcm = row.iter().fold(BigInt::one(), |acc, (_, v)| acc.lcm(v.denom()));
    let mut out: IntRow = row.iter().map(|(c, v)| (*c, v.numer() * (&lcm / v.denom()))).collect();
    make_primitive(&mut out);
    out
}

fn make_primitive(row: &mut IntRow) {
    let mut g = BigInt::zero();
    for (_, v) in row.iter() {
        g = g.gcd(v);
        if g.is_one() {
            return;
        }
    }
    if !g.is_zero() {
        for (_, v) in row.iter_mut() {
            *v /= &g;
        }
    }
}

/// `target <- (p/g) target - (a/g) pivot` where `p`, `a` are the entries in column `c`.
fn eliminate(target: &IntRow, pivot: &IntRow, c: usize) -> IntRow {
    let p = lookup(pivot, c).expect("pivot entry");
    let a = lookup(target, c).expect("target entry");
    let g = p.gcd(a);
    let (s, t) = (p / &g, a / &g);
    let mut out = Vec::with_capacity(target.len() + pivot.len());
    let (mut i, mut j) = (0, 0);
    while i < target.len() || j < pivot.len() {
        let ci = target.get(i).map_or(usize::MAX, |e| e.0);
        let cj = pivot.get(j).map_or(usize::MAX, |e| e.0);
        let (col, v) = if ci < cj {
            i += 1;
            (ci, &s * &target[i - 1].1)
        } else if cj < ci {
            j += 1;
            (cj, -(&t * &pivot[j - 1].1))
        } else {
            i += 1;
            j += 1;
            (ci, &s * &target[i - 1].1 - &t * &pivot[j - 1].1)
        };
        if !v.is_zero() {
            out.push((col, v));
        }
    }
    make_primitive(&mut out);
    out
}

struct ColumnQueue {
    counts: Vec<usize>,
    order: BTreeSet<(usize, usize)>,
}

impl ColumnQueue {
    fn adjust(&mut self, c: usize, delta: isize) {
        let old = self.counts[c];
        if old > 0 {
            self.order.remove(&(old, c));
        }
        let new = (old as isize + delta) as usize;
        self.counts[c] = new;
        if new > 0 {
            self.order.insert((new, c));
        }
    }
}

/// Pivot on the column with the fewest active entries, then the shortest
/// row in it; ties go to the smallest index.
fn sparse_markowitz_rank(mut rows: Vec<IntRow>, cols: usize) -> usize {
    let mut col_rows: Vec<BTreeSet<usize>> = vec![BTreeSet::new(); cols];
    for (r, row) in rows.iter().enumerate() {
        for (c, _) in row {
            col_rows[*c].insert(r);
        }
    }
    let mut queue = ColumnQueue { counts: vec![0; cols], order: BTreeSet::new() };
    for (c, set) in col_rows.iter().enumerate() {
        queue.adjust(c, set.len() as isize);
    }
    let mut rank = 0;
    while let Some(&(_, c)) = queue.order.iter().next() {
        let p = *col_rows[c]
            .iter()
            .min_by_key(|&&r| (rows[r].len(), r))
            .expect("column count is positive");
        let pivot = std::mem::take(&mut rows[p]);
        for (cc, _) in &pivot {
            col_rows[*cc].remove(&p);
            queue.adjust(*cc, -1);
        }
        let targets: Vec<usize> = col_rows[c].iter().copied().collect();
        for r in targets {
            let updated = eliminate(&rows[r], &pivot, c);
            let old: BTreeSet<usize> = rows[r].iter().map(|(cc, _)| *cc).collect();
            let new: BTreeSet<usize> = updated.iter().map(|(cc, _)| *cc).collect();
            for cc in old.difference(&new) {
                col_rows[*cc].remove(&r);
                queue.adjust(*cc, -1);
            }
            for cc in new.difference(&old) {
                col_rows[*cc].insert(r);
                queue.adjust(*cc, 1);
            }
            rows[r] = updated;
        }
        rank += 1;
    }
    rank
}

/// Fraction-free Bareiss elimination on a dense copy.
fn dense_bareiss_rank(rows: Vec<IntRow>, cols: usize) -> usize {
    let mut m: Vec<Vec<BigInt>> = rows
        .into_iter()
        .map(|row| {
            let mut dense = vec![BigInt::zero(); cols];
            for (c, v) in row {
                dense[c] = v;
            }
            dense
        })
        .collect();
    let nrows = m.len();
    let mut prev = BigInt::one();
    let mut r = 0;
    for col in 0..cols {
        if r == nrows {
            break;
        }
        let Some(p) = (r..nrows).find(|&i| !m[i][col].is_zero()) else {
            continue;
        };
        m.swap(r, p);
        let (head, tail) = m.split_at_mut(r + 1);
        let pivot_row = &head[r];
        let pv = &pivot_row[col];
        for row in tail.iter_mut() {
            let a = std::mem::take(&mut row[col]);
            for j in col + 1..cols {
                let v = pv * &row[j] - &a * &pivot_row[j];
                row[j] = if prev.is_one() { v } else { v / &prev };
            }
        }
        prev = m[r][col].clone();
        r += 1;
    }
    r
}

/// Column-ordered fraction-free Gauss-Jordan. Returns `(pivot column, row index)`
/// pairs in column order and the reduced rows.
fn gauss_jordan(mut rows: Vec<IntRow>, cols: usize) -> (Vec<(usize, usize)>, Vec<IntRow>) {
    let mut is_pivot = vec![false; rows.len()];
    let mut pivots = Vec::new();
    for c in 0..cols {
        let chosen = (0..rows.len())
            .filter(|&r| !is_pivot[r] && lookup(&rows[r], c).is_some())
            .min_by_key(|&r| (rows[r].len(), r));
        let Some(p) = chosen else { continue };
        is_pivot[p] = true;
        let pivot = rows[p].clone();
        for (r, row) in rows.iter_mut().enumerate() {
            if r != p && lookup(row, c).is_some() {
                *row = eliminate(row, &pivot, c);
            }
        }
        pivots.push((c, p));
    }
    (pivots, rows)
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn q(v: i64) -> Rational {
        Rational::from_integer(v.into())
    }

    fn qf(n: i64, d: i64) -> Rational {
        Rational::new(n.into(), d.into())
    }

    /// Independent oracle: cofactor expansion determinant.
    fn det(m: &[Vec<i64>]) -> i64 {
        if m.len() == 1 {
            return m[0][0];
        }
        (0..m.len())
            .map(|j| {
                let minor: Vec<Vec<i64>> =
                    m[1..].iter().map(|r| r.iter().enumerate().filter(|(c, _)| *c != j).map(|(_, v)| *v).collect()).collect();
                let sign = if j % 2 == 0 { 1 } else { -1 };
                sign * m[0][j] * det(&minor)
            })
            .sum()
    }

    const ALL: [RankStrategy; 3] =
        [RankStrategy::Sparse, RankStrategy::Dense, RankStrategy::Auto { dense_threshold: DEFAULT_DENSE_THRESHOLD }];

    #[test]
    fn rank_examples() {
        for s in ALL {
            assert_eq!(SparseRationalMatrix::identity(3).rank_with(s), 3);
            assert_eq!(SparseRationalMatrix::zeros(3, 4).rank_with(s), 0);
            let m = vec![vec![0, 1, 1], vec![1, 1, 0], vec![1, 0, 1]];
            assert_eq!(det(&m), -2);
            assert_eq!(SparseRationalMatrix::from_integers(&m).rank_with(s), 3);
            let singular = vec![vec![1, 2, 3], vec![4, 5, 6], vec![7, 8, 9]];
            assert_eq!(det(&singular), 0);
            assert_eq!(SparseRationalMatrix::from_integers(&singular).rank_with(s), 2);
        }
    }

    #[test]
    fn rank_with_fractions() {
        let m = SparseRationalMatrix::from_dense(
            &[vec![qf(1, 2), qf(1, 3)], vec![qf(3, 2), q(1)], vec![qf(-1, 7), qf(5, 3)]],
            2,
        )
        .unwrap();
        for s in ALL {
            assert_eq!(m.rank_with(s), 2);
        }
    }

    #[test]
    fn kernel_examples() {
        assert!(SparseRationalMatrix::identity(4).kernel_basis().is_empty());
        let k = SparseRationalMatrix::from_integers(&[vec![1, 1]]).kernel_basis();
        assert_eq!(k, vec![SparseVector::from_dense(&[q(-1), q(1)])]);
        let z = SparseRationalMatrix::zeros(2, 3).kernel_basis();
        assert_eq!(z.len(), 3);
    }

    #[test]
    fn kernel_is_reduced_echelon() {
        // x + 2y + 3z = 0, 2x + 4y + 7z = 0 -> z = 0, x = -2y
        let m = SparseRationalMatrix::from_integers(&[vec![1, 2, 3], vec![2, 4, 7]]);
        assert_eq!(m.kernel_basis(), vec![SparseVector::from_dense(&[q(-2), q(1), q(0)])]);
    }

    #[test]
    fn span_dimension_examples() {
        assert_eq!(span_dimension(&[]), Ok(0));
        assert_eq!(span_dimension(&[vec![q(1), q(0)], vec![q(0), q(1)], vec![q(1), q(1)]]), Ok(2));
        assert!(matches!(
            span_dimension(&[vec![q(1), q(0)], vec![q(1)]]),
            Err(LinalgError::DimensionMismatch { index: 1, .. })
        ));
    }

    #[test]
    fn mul_and_transpose() {
        let a = SparseRationalMatrix::from_integers(&[vec![1, 2], vec![0, 3]]);
        let b = SparseRationalMatrix::from_integers(&[vec![1, 0, 1], vec![1, 1, 0]]);
        assert_eq!(a.mul(&b).unwrap(), SparseRationalMatrix::from_integers(&[vec![3, 2, 1], vec![3, 3, 0]]));
        assert_eq!(b.transpose().transpose(), b);
        assert!(b.mul(&a).is_err());
        assert_eq!(a.mul_vec(&[q(1), q(1)]).unwrap(), vec![q(3), q(3)]);
    }

    #[test]
    fn matrix_market_dump() {
        let a = SparseRationalMatrix::from_dense(&[vec![q(0), qf(1, 2)]], 2).unwrap();
        assert_eq!(a.to_matrix_market(), "%%MatrixMarket matrix coordinate rational general\n1 2 1\n1 2 1/2\n");
    }

    fn arb_matrix() -> impl Strategy<Value = Vec<Vec<i64>>> {
        (1usize..9, 1usize..9).prop_flat_map(|(r, c)| {
            proptest::collection::vec(
                proptest::collection::vec(prop_oneof![6 => Just(0i64), 4 => -5i64..=5], c),
                r,
            )
        })
    }

    proptest! {
        #[test]
        fn strategies_agree_and_rank_nullity(m in arb_matrix()) {
            let a = SparseRationalMatrix::from_integers(&m);
            let r = a.rank_with(RankStrategy::Sparse);
            prop_assert_eq!(r, a.rank_with(RankStrategy::Dense));
            prop_assert_eq!(r, a.transpose().rank());
            let k = a.kernel_basis();
            prop_assert_eq!(r + k.len(), a.cols());
            for v in &k {
                prop_assert!(a.mul_vec(&v.to_dense()).unwrap().iter().all(Zero::is_zero));
            }
        }

        #[test]
        fn insertion_order_is_irrelevant(m in arb_matrix(), seed in any::<u64>()) {
            use rand::{seq::SliceRandom, SeedableRng};
            let mut entries: Vec<(usize, usize, i64)> = m.iter().enumerate()
                .flat_map(|(r, row)| row.iter().enumerate().map(move |(c, v)| (r, c, *v)))
                .collect();
            entries.shuffle(&mut rand_chacha::ChaCha8Rng::seed_from_u64(seed));
            let mut b = MatrixBuilder::new(m.len(), m[0].len());
            for (r, c, v) in entries {
                b.add(r, c, q(v));
            }
            let shuffled = b.build();
            let a = SparseRationalMatrix::from_integers(&m);
            prop_assert_eq!(&shuffled, &a);
            prop_assert_eq!(shuffled.kernel_basis(), a.kernel_basis());
        }
    }
}
