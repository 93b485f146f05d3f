//! Lefschetz probes and unimodality certificates.
//!
//! Random linear forms can only witness maximal rank, never refute it, so a
//! report is `WITNESSED_HOLD`, `NOT_WITNESSED`, or `PROVEN_FAIL` when the
//! Hilbert vector itself rules the property out (the weak property forces
//! unimodality).

use std::fmt;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;
use thiserror::Error;

use crate::apolarity::{BiMonomial, HilbertVector, OperatorPolynomial};
use crate::exactla::{Rational, SparseRationalMatrix};
use crate::gorenstein::{self, CombinatorialBasis, GorensteinError};
use crate::par;
use crate::simplicial::SimplicialComplex;

pub const DEFAULT_TRIALS: usize = 5;
pub const DEFAULT_COEFF_BOUND: u64 = 10;
pub const DEFAULT_SEARCH_CAP: u64 = 100;
/// Largest `h_k` for which the strong probe composes multiplication maps.
pub const DEFAULT_SLP_MAX_DIM: u64 = 2_000;

#[derive(Debug, Clone, Error)]
pub enum LefschetzError {
    #[error("trials must be at least 1")]
    NoTrials,
    #[error("coefficient bound must be at least 1")]
    ZeroCoeffBound,
    #[error("socle degree {0} is below 4; total non-unimodality needs d >= 4")]
    DegreeTooSmall(usize),
    #[error("no counterexample for d = {d} with orders up to {cap}")]
    NotFoundWithinBound { d: usize, cap: u64 },
    #[error("h_{degree} = {dim} exceeds the limit {limit}")]
    InstanceTooLarge { degree: usize, dim: u64, limit: u64 },
    #[error(transparent)]
    Algebra(#[from] GorensteinError),
}

/// `L = sum a_i X_i + sum b_j U_j`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LinearForm {
    a: Vec<Rational>,
    b: Vec<Rational>,
}

impl LinearForm {
    pub fn new(a: Vec<Rational>, b: Vec<Rational>) -> Self {
        LinearForm { a, b }
    }

    pub fn from_integers(a: &[i64], b: &[i64]) -> Self {
        let q = |v: &i64| Rational::from_integer((*v).into());
        LinearForm { a: a.iter().map(q).collect(), b: b.iter().map(q).collect() }
    }

    /// Integer coefficients uniform in `[-bound, bound]`, redrawn if all vanish.
    /// Each `(seed, stream)` pair gives an independent reproducible draw.
    pub fn random(n: usize, m: usize, bound: u64, seed: u64, stream: u64) -> Self {
        assert!(bound >= 1, "coefficient bound must be positive");
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        rng.set_stream(stream);
        let bound = bound as i64;
        loop {
            let mut draw = |len: usize| -> Vec<i64> { (0..len).map(|_| rng.gen_range(-bound..=bound)).collect() };
            let (a, b) = (draw(n), draw(m));
            if a.iter().chain(&b).any(|&v| v != 0) {
                return Self::from_integers(&a, &b);
            }
        }
    }

    pub fn a(&self) -> &[Rational] {
        &self.a
    }

    pub fn b(&self) -> &[Rational] {
        &self.b
    }

    pub fn n(&self) -> usize {
        self.a.len()
    }

    pub fn m(&self) -> usize {
        self.b.len()
    }

    pub fn is_zero(&self) -> bool {
        self.a.iter().chain(&self.b).all(num_traits::Zero::is_zero)
    }

    pub fn to_operator(&self) -> OperatorPolynomial {
        let (n, m) = (self.n(), self.m());
        let xs = self.a.iter().enumerate().map(|(i, c)| (BiMonomial::x_var(n, m, i), c.clone()));
        let us = self.b.iter().enumerate().map(|(j, c)| (BiMonomial::u_var(n, m, j), c.clone()));
        OperatorPolynomial::from_terms(n, m, xs.chain(us))
    }
}

impl fmt::Display for LinearForm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(&self.to_operator(), f)
    }
}

/// `{"x": ["3", "-1"], "u": [...]}`.
impl Serialize for LinearForm {
    fn serialize<S: serde::Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        use serde::ser::SerializeStruct;
        let strings = |v: &[Rational]| v.iter().map(ToString::to_string).collect::<Vec<_>>();
        let mut st = s.serialize_struct("LinearForm", 2)?;
        st.serialize_field("x", &strings(&self.a))?;
        st.serialize_field("u", &strings(&self.b))?;
        st.end()
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct ProbeConfig {
    pub trials: usize,
    pub seed: u64,
    pub coeff_bound: u64,
}

impl Default for ProbeConfig {
    fn default() -> Self {
        ProbeConfig { trials: DEFAULT_TRIALS, seed: 0, coeff_bound: DEFAULT_COEFF_BOUND }
    }
}

impl ProbeConfig {
    fn validate(&self) -> Result<(), LefschetzError> {
        if self.trials == 0 {
            return Err(LefschetzError::NoTrials);
        }
        if self.coeff_bound == 0 {
            return Err(LefschetzError::ZeroCoeffBound);
        }
        Ok(())
    }

    fn forms(&self, n: usize, m: usize) -> Vec<LinearForm> {
        (0..self.trials).map(|t| LinearForm::random(n, m, self.coeff_bound, self.seed, t as u64)).collect()
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "SCREAMING_SNAKE_CASE")]
pub enum Verdict {
    WitnessedHold,
    ProvenFail,
    NotWitnessed,
}

impl fmt::Display for Verdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Verdict::WitnessedHold => "WITNESSED_HOLD",
            Verdict::ProvenFail => "PROVEN_FAIL",
            Verdict::NotWitnessed => "NOT_WITNESSED",
        })
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct LevelReport {
    pub k: usize,
    pub expected: usize,
    pub achieved: usize,
    /// `h_k > h_(k+1)` in the first half, so injectivity is impossible here.
    pub obstruction: bool,
}

#[derive(Debug, Clone, Serialize)]
pub struct WlpReport {
    pub hilbert: HilbertVector,
    pub levels: Vec<LevelReport>,
    pub verdict: Verdict,
    pub witness: Option<LinearForm>,
    pub obstructions: Vec<String>,
    /// `trial_ranks[t][k]` = rank of multiplication by trial form `t` on `A_k`.
    pub trial_ranks: Vec<Vec<usize>>,
}

/// Ranks of multiplication by `l` on every level `A_k -> A_(k+1)`.
pub fn wlp_ranks(basis: &CombinatorialBasis, l: &LinearForm) -> Result<Vec<usize>, GorensteinError> {
    (0..basis.d).map(|k| Ok(basis.multiplication_matrix(l, k)?.rank())).collect()
}

/// Descents `h_k > h_(k+1)` with `k + 1 <= d/2`.
fn first_half_descents(h: &HilbertVector) -> Vec<usize> {
    let d = h.socle_degree();
    (0..d).filter(|&k| 2 * (k + 1) <= d && h.get(k) > h.get(k + 1)).collect()
}

pub fn wlp_probe(c: &SimplicialComplex, config: &ProbeConfig) -> Result<WlpReport, LefschetzError> {
    config.validate()?;
    let h = gorenstein::hilbert_combinatorial(c);
    let basis = gorenstein::combinatorial_basis(c);
    let forms = config.forms(c.n(), c.m());
    let trial_ranks = par::map(forms.iter().collect(), |l| wlp_ranks(&basis, l)).into_iter().collect::<Result<Vec<_>, _>>()?;
    let d = c.d();
    let descents = first_half_descents(&h);
    let expected: Vec<usize> = (0..d).map(|k| h.get(k).min(h.get(k + 1)) as usize).collect();
    let levels = (0..d)
        .map(|k| LevelReport {
            k,
            expected: expected[k],
            achieved: trial_ranks.iter().map(|r| r[k]).max().unwrap_or(0),
            obstruction: descents.contains(&k),
        })
        .collect();
    let witness = trial_ranks.iter().position(|r| *r == expected).map(|t| forms[t].clone());
    let unimodal = unimodality_certificate(&h).unimodal;
    let verdict = if !unimodal {
        Verdict::ProvenFail
    } else if witness.is_some() {
        Verdict::WitnessedHold
    } else {
        Verdict::NotWitnessed
    };
    let obstructions = descents.iter().map(|k| format!("h{} > h{}", k, k + 1)).collect();
    Ok(WlpReport { hilbert: h, levels, verdict, witness, obstructions, trial_ranks })
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "SCREAMING_SNAKE_CASE")]
pub enum Injectivity {
    Witnessed,
    NotWitnessed,
    Impossible,
}

#[derive(Debug, Clone, Serialize)]
pub struct InjectivityReport {
    pub h1: u64,
    pub h2: u64,
    pub status: Injectivity,
    pub reason: Option<String>,
    pub achieved_ranks: Vec<usize>,
    pub witness: Option<LinearForm>,
}

/// Whether some sampled `L` makes `A_1 -> A_2` injective.
pub fn injectivity_probe_degree1(c: &SimplicialComplex, config: &ProbeConfig) -> Result<InjectivityReport, LefschetzError> {
    config.validate()?;
    let h = gorenstein::hilbert_combinatorial(c);
    let (h1, h2) = (h.get(1), h.get(2));
    let basis = gorenstein::combinatorial_basis(c);
    let forms = config.forms(c.n(), c.m());
    let achieved_ranks = par::map(forms.iter().collect(), |l| basis.multiplication_matrix(l, 1).map(|m| m.rank()))
        .into_iter()
        .collect::<Result<Vec<_>, _>>()?;
    let witness = achieved_ranks.iter().position(|&r| r as u64 == h1).map(|t| forms[t].clone());
    let (status, reason) = if h1 > h2 {
        (Injectivity::Impossible, Some(format!("h1 = {h1} > h2 = {h2}")))
    } else if witness.is_some() {
        (Injectivity::Witnessed, None)
    } else {
        (Injectivity::NotWitnessed, None)
    };
    Ok(InjectivityReport { h1, h2, status, reason, achieved_ranks, witness })
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct UnimodalityCertificate {
    pub hilbert: Vec<u64>,
    pub unimodal: bool,
    pub totally_nonunimodal: bool,
    /// First index `k` with `h_k > h_(k-1)` after an earlier descent.
    pub first_violation: Option<usize>,
}

pub fn unimodality_certificate(h: &HilbertVector) -> UnimodalityCertificate {
    let v = h.values();
    let mut descended = false;
    let mut first_violation = None;
    for k in 1..v.len() {
        if v[k] < v[k - 1] {
            descended = true;
        } else if v[k] > v[k - 1] && descended {
            first_violation = Some(k);
            break;
        }
    }
    let d = h.socle_degree();
    let totally_nonunimodal = d >= 4 && (1..d / 2).all(|k| v[k] > v[k + 1]);
    UnimodalityCertificate { hilbert: v.to_vec(), unimodal: first_violation.is_none(), totally_nonunimodal, first_violation }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SearchMode {
    /// `a = (a, ..., a)` for `a = 2, 3, ...`.
    Equal,
    /// Nondecreasing order vectors by total size, then lexicographically.
    Any,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Counterexample {
    pub orders: Vec<u64>,
    pub hilbert: HilbertVector,
    pub codimension: u64,
}

/// Smallest Turan algebra of socle degree `d` whose Hilbert vector is totally
/// non-unimodal, from the elementary symmetric formulas alone.
pub fn counterexample_search(d: usize, mode: SearchMode, cap: u64) -> Result<Counterexample, LefschetzError> {
    if d < 4 {
        return Err(LefschetzError::DegreeTooSmall(d));
    }
    let parts = d - 1;
    let check = |orders: &[u64]| -> Result<Option<Counterexample>, LefschetzError> {
        let hilbert = gorenstein::turan_hilbert(orders)?;
        if unimodality_certificate(&hilbert).totally_nonunimodal {
            let codimension = hilbert.get(1);
            return Ok(Some(Counterexample { orders: orders.to_vec(), hilbert, codimension }));
        }
        Ok(None)
    };
    match mode {
        SearchMode::Equal => {
            for a in 2..=cap {
                if let Some(found) = check(&vec![a; parts])? {
                    return Ok(found);
                }
            }
        }
        SearchMode::Any => {
            for total in 2 * parts as u64..=cap * parts as u64 {
                let mut found = None;
                for_each_partition(parts, total, 2, cap, &mut Vec::new(), &mut |orders| {
                    if found.is_none() {
                        found = check(orders).transpose();
                    }
                });
                if let Some(result) = found {
                    return result;
                }
            }
        }
    }
    Err(LefschetzError::NotFoundWithinBound { d, cap })
}

/// Nondecreasing vectors of `len` entries in `[lo, cap]` summing to `total`, lexicographically.
fn for_each_partition(len: usize, total: u64, lo: u64, cap: u64, prefix: &mut Vec<u64>, visit: &mut impl FnMut(&[u64])) {
    if len == 0 {
        if total == 0 {
            visit(prefix);
        }
        return;
    }
    let mut a = lo;
    while a <= cap && a * len as u64 <= total {
        if total - a <= cap * (len as u64 - 1) || len == 1 {
            prefix.push(a);
            for_each_partition(len - 1, total - a, a, cap, prefix, visit);
            prefix.pop();
        }
        a += 1;
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct PowerRank {
    pub k: usize,
    pub power: usize,
    pub expected: usize,
    pub achieved: usize,
}

#[derive(Debug, Clone, Serialize)]
pub struct SlpReport {
    pub hilbert: HilbertVector,
    pub maps: Vec<PowerRank>,
    pub verdict: Verdict,
    pub witness: Option<LinearForm>,
}

/// Ranks of multiplication by `l^s` from `A_k` to `A_(k+s)` for all `s >= 1`, `k + s <= d`.
pub fn slp_ranks(basis: &CombinatorialBasis, l: &LinearForm) -> Result<Vec<PowerRank>, GorensteinError> {
    let d = basis.d;
    let steps: Vec<SparseRationalMatrix> =
        (0..d).map(|k| basis.multiplication_matrix(l, k)).collect::<Result<_, _>>()?;
    let mut out = Vec::new();
    for k in 0..d {
        let mut composite = steps[k].clone();
        for s in 1..=d - k {
            if s > 1 {
                composite = steps[k + s - 1].mul(&composite).expect("consecutive levels compose");
            }
            let expected = basis.level(k).len().min(basis.level(k + s).len());
            out.push(PowerRank { k, power: s, expected, achieved: composite.rank() });
        }
    }
    Ok(out)
}

pub fn slp_probe(c: &SimplicialComplex, config: &ProbeConfig, max_dim: u64) -> Result<SlpReport, LefschetzError> {
    config.validate()?;
    let h = gorenstein::hilbert_combinatorial(c);
    if let Some((degree, &dim)) = h.values().iter().enumerate().find(|(_, &v)| v > max_dim) {
        return Err(LefschetzError::InstanceTooLarge { degree, dim, limit: max_dim });
    }
    let basis = gorenstein::combinatorial_basis(c);
    let forms = config.forms(c.n(), c.m());
    let per_trial = par::map(forms.iter().collect(), |l| slp_ranks(&basis, l)).into_iter().collect::<Result<Vec<_>, _>>()?;
    let full = |ranks: &[PowerRank]| ranks.iter().all(|r| r.achieved == r.expected);
    let witness = per_trial.iter().position(|r| full(r)).map(|t| forms[t].clone());
    let mut maps = per_trial[0].clone();
    for ranks in &per_trial[1..] {
        for (best, r) in maps.iter_mut().zip(ranks) {
            best.achieved = best.achieved.max(r.achieved);
        }
    }
    let verdict = if !unimodality_certificate(&h).unimodal {
        Verdict::ProvenFail
    } else if witness.is_some() {
        Verdict::WitnessedHold
    } else {
        Verdict::NotWitnessed
    };
    Ok(SlpReport { hilbert: h, maps, verdict, witness })
}
