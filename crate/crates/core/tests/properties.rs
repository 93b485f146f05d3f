use proptest::prelude::*;
use qg_core::apolarity::{apply_operator, hilbert_brute, multiplication_rank_brute};
use qg_core::gorenstein::{
    combinatorial_basis, combinatorial_generators, form_from_complex, generator_counts, hilbert_combinatorial,
    oracle_crosscheck, turan_hilbert, OracleConfig,
};
use qg_core::lefschetz::{wlp_probe, wlp_ranks, Verdict};
use qg_core::simplicial::{random_pure_complex, turan_complex};
use qg_core::{BiMonomial, LinearForm, ProbeConfig, SimplicialComplex};

/// Random pure complex with `d` in {3, 4} and `m` in 4..=7.
fn complex() -> impl Strategy<Value = SimplicialComplex> {
    (3usize..=4, 4usize..=7, 0usize..4, any::<u64>()).prop_map(|(d, m, extra, seed)| {
        let size = d - 1;
        let available = (0..size).fold(1usize, |acc, t| acc * (m - t) / (t + 1));
        let n = (m.div_ceil(size) + extra).min(available);
        random_pure_complex(d, m, n, seed).unwrap()
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(24))]

    #[test]
    fn face_formula_matches_catalecticant_ranks(c in complex()) {
        let brute = hilbert_brute(&form_from_complex(&c));
        prop_assert_eq!(hilbert_combinatorial(&c), brute.clone());
        let d = c.d();
        for (&(i, j), &h) in brute.bigraded() {
            prop_assert_eq!(h, brute.bigraded()[&(1 - i, d - 1 - j)]);
        }
    }

    #[test]
    fn oracle_passes(c in complex(), seed in any::<u64>()) {
        let config = OracleConfig { seed, forms: 2, ..OracleConfig::default() };
        let report = oracle_crosscheck(&c, c.d() + 1, &config).unwrap();
        prop_assert!(report.passed, "{:?}", report.mismatches);
        prop_assert_eq!(report.generators_checked as u64, generator_counts(&c).by_degree.values().sum::<u64>());
    }

    #[test]
    fn composed_maps_match_square_of_form(c in complex(), seed in any::<u64>()) {
        let basis = combinatorial_basis(&c);
        let l = LinearForm::random(c.n(), c.m(), 5, seed, 0);
        let square = l.to_operator().pow(2);
        let f = form_from_complex(&c);
        for k in 0..c.d() - 1 {
            let step = basis.multiplication_matrix(&l, k).unwrap();
            let next = basis.multiplication_matrix(&l, k + 1).unwrap();
            let composite = next.mul(&step).unwrap();
            prop_assert_eq!(composite.rank(), multiplication_rank_brute(&f, &square, k));
        }
    }

    #[test]
    fn operator_action_composes(
        x in proptest::collection::vec(0u32..2, 3),
        u1 in proptest::collection::vec(0u32..3, 6),
        u2 in proptest::collection::vec(0u32..3, 6),
        seed in any::<u64>(),
    ) {
        let c = random_pure_complex(4, 6, 3, seed).unwrap();
        let f = form_from_complex(&c);
        let alpha = BiMonomial::new(&x, &u1);
        let beta = BiMonomial::new(&[0, 0, 0], &u2);
        prop_assert_eq!(
            apply_operator(&alpha.mul(&beta), f.form()),
            apply_operator(&alpha, &apply_operator(&beta, f.form()))
        );
    }

    #[test]
    fn generators_annihilate(c in complex()) {
        let f = form_from_complex(&c);
        let gens = combinatorial_generators(&c);
        prop_assert!(gens.all().iter().all(|g| g.annihilates(f.form())));
        prop_assert_eq!(gens.counts(), generator_counts(&c));
    }

    #[test]
    fn wlp_report_invariants(c in complex(), seed in any::<u64>()) {
        let config = ProbeConfig { trials: 3, seed, coeff_bound: 10 };
        let report = wlp_probe(&c, &config).unwrap();
        let d = c.d();
        for level in &report.levels {
            prop_assert!(level.achieved <= level.expected);
            if level.obstruction {
                prop_assert!(report.trial_ranks.iter().all(|r| (r[level.k] as u64) < report.hilbert.get(level.k)));
            }
        }
        for ranks in &report.trial_ranks {
            for k in 0..d {
                prop_assert_eq!(ranks[k], ranks[d - 1 - k]);
            }
        }
        if let Some(w) = &report.witness {
            let again = wlp_ranks(&combinatorial_basis(&c), w).unwrap();
            prop_assert_eq!(again, report.levels.iter().map(|l| l.expected).collect::<Vec<_>>());
            prop_assert_eq!(report.verdict, Verdict::WitnessedHold);
        }
        let more = wlp_probe(&c, &ProbeConfig { trials: 5, ..config }).unwrap();
        for (small, big) in report.levels.iter().zip(&more.levels) {
            prop_assert!(big.achieved >= small.achieved);
        }
    }

    #[test]
    fn turan_formula_matches_faces(orders in proptest::collection::vec(2usize..=4, 2..=4)) {
        let c = turan_complex(&orders).unwrap();
        let o: Vec<u64> = orders.iter().map(|&a| a as u64).collect();
        let formula = turan_hilbert(&o).unwrap();
        let faces = hilbert_combinatorial(&c);
        prop_assert_eq!(faces.values(), formula.values());
    }
}
