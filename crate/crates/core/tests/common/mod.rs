#![allow(dead_code)]

use qg_core::simplicial::{random_pure_complex, turan_complex};
use qg_core::SimplicialComplex;

pub fn edge() -> SimplicialComplex {
    SimplicialComplex::new(&[vec![0, 1]], 2).unwrap()
}

pub fn simplex() -> SimplicialComplex {
    SimplicialComplex::new(&[vec![0, 1, 2]], 3).unwrap()
}

/// Three triangles glued along the edges of a missing triangle `{0,1,2}`.
pub fn hollow_triangle() -> SimplicialComplex {
    SimplicialComplex::new(&[vec![0, 1, 3], vec![1, 2, 4], vec![0, 2, 5]], 6).unwrap()
}

pub fn disjoint_edges() -> SimplicialComplex {
    SimplicialComplex::new(&[vec![0, 1], vec![2, 3]], 4).unwrap()
}

pub fn turan(orders: &[usize]) -> SimplicialComplex {
    turan_complex(orders).unwrap()
}

/// The 20 seeded random complexes: `d` in {3, 4}, `5 <= m <= 7`.
pub fn random_batch() -> Vec<SimplicialComplex> {
    (0..20u64)
        .map(|i| {
            let d = 3 + (i % 2) as usize;
            let m = 5 + (i % 3) as usize;
            let size = d - 1;
            let available = (0..size).fold(1usize, |acc, t| acc * (m - t) / (t + 1));
            let n = (m.div_ceil(size) + (i % 4) as usize).min(available);
            random_pure_complex(d, m, n, 1000 + i).unwrap()
        })
        .collect()
}

/// Every instance small enough for the brute-force oracle.
pub fn oracle_instances() -> Vec<(String, SimplicialComplex)> {
    vec![
        ("edge".into(), edge()),
        ("simplex".into(), simplex()),
        ("hollow triangle".into(), hollow_triangle()),
        ("disjoint edges".into(), disjoint_edges()),
        ("TA(2,2)".into(), turan(&[2, 2])),
        ("TA(2,3)".into(), turan(&[2, 3])),
        ("TA(2,2,2)".into(), turan(&[2, 2, 2])),
    ]
}
