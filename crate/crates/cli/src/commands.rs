use std::fs;

use qg_core::gorenstein::{
    self, combinatorial_generators, generator_counts, oracle_crosscheck, AlgebraSummary, GeneratorCounts,
    GorensteinError, OracleConfig, OracleReport,
};
use qg_core::lefschetz::{
    counterexample_search, slp_probe, unimodality_certificate, wlp_probe, Counterexample, LefschetzError,
    SearchMode, Verdict,
};
use qg_core::simplicial::turan_complex;
use qg_core::{GradedIdealGenerators, ProbeConfig, SimplicialComplex, UnimodalityCertificate};
use serde::Serialize;

use crate::{Format, Instance, Output, Probe};

type CmdResult = Result<u8, String>;

fn load(instance: &Instance) -> Result<SimplicialComplex, String> {
    match (&instance.orders, &instance.complex) {
        (Some(orders), _) => turan_complex(orders).map_err(|e| format!("invalid orders: {e}")),
        (None, Some(path)) => {
            let text = fs::read_to_string(path).map_err(|e| format!("{}: {e}", path.display()))?;
            SimplicialComplex::from_json_str(&text).map_err(|e| format!("{}: {e}", path.display()))
        }
        (None, None) => Err("one of --orders or --complex is required".into()),
    }
}

fn probe_config(p: Probe) -> ProbeConfig {
    ProbeConfig { trials: p.trials as usize, seed: p.seed, coeff_bound: p.coeff_bound }
}

fn write(output: &Output, text: &str) -> Result<(), String> {
    match &output.out {
        Some(path) => fs::write(path, text).map_err(|e| format!("{}: {e}", path.display())),
        None => {
            print!("{text}");
            Ok(())
        }
    }
}

fn emit<T: Serialize>(output: &Output, report: &T, csv: Option<String>) -> Result<(), String> {
    let text = match (output.format, csv) {
        (Format::Json, _) => serde_json::to_string_pretty(report).map_err(|e| e.to_string())? + "\n",
        (Format::Csv, Some(table)) => table,
        (Format::Csv, None) => return Err("csv output is only available for turan and analyze".into()),
    };
    write(output, &text)
}

fn hilbert_csv(summary: &AlgebraSummary) -> String {
    let mut out = String::from("k,h,h_0k,h_1k\n");
    let bigraded = summary.hilbert.bigraded();
    for (k, h) in summary.hilbert.values().iter().enumerate() {
        let face = bigraded.get(&(0, k)).copied().unwrap_or(0);
        let rep = k.checked_sub(1).and_then(|j| bigraded.get(&(1, j)).copied()).unwrap_or(0);
        out.push_str(&format!("{k},{h},{face},{rep}\n"));
    }
    out
}

#[derive(Serialize)]
struct TuranReport {
    orders: Vec<usize>,
    #[serde(flatten)]
    summary: AlgebraSummary,
    generator_counts: GeneratorCounts,
    unimodality: UnimodalityCertificate,
    totally_nonunimodal: bool,
}

pub fn turan(orders: &[usize], output: &Output) -> CmdResult {
    let c = turan_complex(orders).map_err(|e| format!("invalid orders: {e}"))?;
    let summary = gorenstein::summarize(&c);
    let unimodality = unimodality_certificate(&summary.hilbert);
    let csv = hilbert_csv(&summary);
    let report = TuranReport {
        orders: orders.to_vec(),
        generator_counts: generator_counts(&c),
        totally_nonunimodal: unimodality.totally_nonunimodal,
        unimodality,
        summary,
    };
    emit(output, &report, Some(csv))?;
    Ok(0)
}

#[derive(Serialize)]
struct AnalyzeReport {
    #[serde(flatten)]
    summary: AlgebraSummary,
    unimodality: UnimodalityCertificate,
    generator_counts: GeneratorCounts,
    generators: GradedIdealGenerators,
}

pub fn analyze(instance: &Instance, output: &Output) -> CmdResult {
    let c = load(instance)?;
    let summary = gorenstein::summarize(&c);
    let csv = hilbert_csv(&summary);
    let generators = combinatorial_generators(&c);
    let report = AnalyzeReport {
        unimodality: unimodality_certificate(&summary.hilbert),
        generator_counts: generators.counts(),
        generators,
        summary,
    };
    emit(output, &report, Some(csv))?;
    Ok(0)
}

#[derive(Serialize)]
#[serde(rename_all = "snake_case")]
enum OracleStatus {
    Passed,
    Mismatch,
    InstanceTooLarge,
}

#[derive(Serialize)]
struct GuardHit {
    degree: usize,
    dim: u128,
    limit: u128,
}

#[derive(Serialize)]
struct OracleOutput {
    status: OracleStatus,
    guard: Option<GuardHit>,
    #[serde(flatten)]
    report: OracleReport,
}

pub fn oracle(
    instance: &Instance,
    max_degree: Option<usize>,
    max_oracle_dim: u128,
    probe: Probe,
    output: &Output,
) -> CmdResult {
    let c = load(instance)?;
    let config =
        OracleConfig { max_oracle_dim, seed: probe.seed, forms: probe.trials as usize, coeff_bound: probe.coeff_bound };
    let (out, code) = match oracle_crosscheck(&c, max_degree.unwrap_or(c.d() + 1), &config) {
        Ok(report) if report.passed => (OracleOutput { status: OracleStatus::Passed, guard: None, report }, 0),
        Ok(report) => (OracleOutput { status: OracleStatus::Mismatch, guard: None, report }, 1),
        Err(GorensteinError::InstanceTooLarge { degree, dim, limit, partial }) => {
            let guard = Some(GuardHit { degree, dim, limit });
            (OracleOutput { status: OracleStatus::InstanceTooLarge, guard, report: *partial }, 3)
        }
        Err(e) => return Err(e.to_string()),
    };
    emit(output, &out, None)?;
    Ok(code)
}

fn verdict_code(v: Verdict) -> u8 {
    match v {
        Verdict::WitnessedHold => 0,
        Verdict::ProvenFail => 1,
        Verdict::NotWitnessed => 4,
    }
}

pub fn wlp(instance: &Instance, probe: Probe, output: &Output) -> CmdResult {
    let c = load(instance)?;
    let report = wlp_probe(&c, &probe_config(probe)).map_err(|e| e.to_string())?;
    emit(output, &report, None)?;
    Ok(verdict_code(report.verdict))
}

pub fn slp(instance: &Instance, probe: Probe, max_level_dim: u64, output: &Output) -> CmdResult {
    let c = load(instance)?;
    match slp_probe(&c, &probe_config(probe), max_level_dim) {
        Ok(report) => {
            emit(output, &report, None)?;
            Ok(verdict_code(report.verdict))
        }
        Err(e @ LefschetzError::InstanceTooLarge { .. }) => {
            eprintln!("error: {e}");
            Ok(3)
        }
        Err(e) => Err(e.to_string()),
    }
}

#[derive(Serialize)]
struct HuntReport {
    d: usize,
    equal_orders: bool,
    #[serde(flatten)]
    found: Counterexample,
    presented_by_quadrics: Option<bool>,
    unimodality: UnimodalityCertificate,
}

const HUNT_BUILD_LIMIT: u64 = 100_000;

pub fn hunt(d: usize, any: bool, cap: u64, output: &Output) -> CmdResult {
    let mode = if any { SearchMode::Any } else { SearchMode::Equal };
    let found = match counterexample_search(d, mode, cap) {
        Ok(found) => found,
        Err(e @ LefschetzError::NotFoundWithinBound { .. }) => {
            eprintln!("{e}");
            return Ok(1);
        }
        Err(e) => return Err(e.to_string()),
    };
    // Checked on the built complex only when the facet count is modest.
    let facets = found.orders.iter().try_fold(1u64, |acc, &a| acc.checked_mul(a)).unwrap_or(u64::MAX);
    let presented_by_quadrics = if facets <= HUNT_BUILD_LIMIT {
        let parts: Vec<usize> = found.orders.iter().map(|&a| a as usize).collect();
        turan_complex(&parts).ok().map(|c| gorenstein::is_presented_by_quadrics(&c).presented_by_quadrics)
    } else {
        None
    };
    let report = HuntReport {
        d,
        equal_orders: !any,
        unimodality: unimodality_certificate(&found.hilbert),
        presented_by_quadrics,
        found,
    };
    emit(output, &report, None)?;
    Ok(0)
}
